"""Little Schroeder paths, big-step nonnegative paths, and the encoding of
increasing generalized non-crossing trees as Schroeder paths.

A little Schroeder path of length 2n runs from (0,0) to (2n,0) with unit up
steps, unit down steps, and two-unit flat steps that never touch the x-axis.
Here a flat is one step object of width two, so lengths stay explicit and
the two halves of a flat can never be separated by malformed input.

The encoding applies to trees avoiding both levels and descents (every edge
an ascent).  For those trees every edge goes from a smaller position to a
larger one, and depth-first preorder with children in increasing position
order visits positions 0, 1, .., n in order.  Reading the traversal, an edge
emits an up step when first entered and a down step when left; whenever a
down step is immediately followed by an up step into a point whose gap is
not a jump (its label equals the label of the circularly preceding point),
that down-up pair fuses into one flat.  First children force their gap to be
a jump (otherwise the edge would be a level), while later siblings leave the
gap free, which is exactly the freedom the flats record; this makes the map
a bijection onto the little Schroeder paths.

A second encoder implements the fusing rule keyed on equal label pairs of
consecutive readings instead.  That rule is not injective (two trees with 4
points share a word); it ships as a diagnostic so the discrepancy between
the two readings stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .patterns import avoids
from .trees import BoundExceededError, GncTree, NcTree, make_gnc

DEFAULT_PATH_BOUND = 8

__all__ = [
    "SchroderPath",
    "enumerate_schroder",
    "encode_tree",
    "decode_path",
    "encode_tree_literal",
    "CokerPath",
    "enumerate_coker",
    "coker_count",
]


@dataclass(frozen=True)
class SchroderPath:
    """Step sequence over 'U', 'D', 'F' (F = one flat pair of width two)."""

    steps: tuple[str, ...]

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
                if height < 0:
                    raise ValueError("path dips below the axis")
            elif s == "F":
                if height < 1:
                    raise ValueError("flat step at ground level")
            else:
                raise ValueError(f"unknown step {s!r}")
        if height != 0:
            raise ValueError("path does not return to the axis")

    @property
    def n(self) -> int:
        length = sum(2 if s == "F" else 1 for s in self.steps)
        return length // 2

    def as_text(self) -> str:
        return "".join(self.steps)

    @staticmethod
    def from_text(text: str) -> "SchroderPath":
        return SchroderPath(tuple(text))

    def __str__(self) -> str:
        return self.as_text()


def enumerate_schroder(n: int, bound: int = DEFAULT_PATH_BOUND) -> Iterator[SchroderPath]:
    """All little Schroeder paths of length 2n, in U < F < D branching order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds bound {bound}")

    acc: list[str] = []

    def extend(remaining: int, height: int) -> Iterator[SchroderPath]:
        if remaining == 0:
            yield SchroderPath(tuple(acc))
            return
        if height + 1 <= remaining - 1:
            acc.append("U")
            yield from extend(remaining - 1, height + 1)
            acc.pop()
        if height >= 1 and height <= remaining - 2:
            acc.append("F")
            yield from extend(remaining - 2, height)
            acc.pop()
        if height >= 1:
            acc.append("D")
            yield from extend(remaining - 1, height - 1)
            acc.pop()

    yield from extend(2 * n, 0)


def encode_tree(tree: GncTree) -> SchroderPath:
    """Encode a {h, d}-avoiding tree as a little Schroeder path.

    Preorder with children in increasing position order; up on first reading,
    down on second, and a down immediately followed by an up into a non-jump
    gap fuses into one flat.
    """
    if tree.n > 0 and not avoids(tree, ("h", "d")):
        raise ValueError("tree contains a level or descent edge")
    prof = tree.profile
    jumps = tree.jumps
    steps: list[str] = []

    def walk(v: int) -> None:
        for child in prof.children[v]:
            if child not in jumps and steps and steps[-1] == "D":
                steps[-1] = "F"
            else:
                steps.append("U")
            walk(child)
            steps.append("D")

    walk(0)
    return SchroderPath(tuple(steps))


def decode_path(path: SchroderPath) -> GncTree:
    """Rebuild the tree a path encodes; inverse of encode_tree.

    Up attaches the next position as a child of the current point with its
    gap a jump and descends; down ascends; a flat ascends and then attaches
    the next position with its gap not a jump.
    """
    edges: list[tuple[int, int]] = []
    jumps: set[int] = set()
    stack = [0]
    next_pos = 1
    for s in path.steps:
        if s == "U":
            edges.append((stack[-1], next_pos))
            jumps.add(next_pos)
            stack.append(next_pos)
            next_pos += 1
        elif s == "D":
            stack.pop()
        else:  # F: ascend, then attach without a jump
            stack.pop()
            edges.append((stack[-1], next_pos))
            stack.append(next_pos)
            next_pos += 1
    base = NcTree.of(next_pos, edges)
    return make_gnc(base, jumps)


def encode_tree_literal(tree: GncTree) -> tuple[str, ...]:
    """Diagnostic encoder fusing on equal label pairs of adjacent readings.

    An edge read the second time becomes 'HL' when the immediately following
    reading is a first read of an ascent with the same (parent label, child
    label) pair, which becomes 'HR'; otherwise second reads are 'D' and first
    reads 'U'.  Not injective: trees can collide on the same word.
    """
    if tree.n > 0 and not avoids(tree, ("h", "d")):
        raise ValueError("tree contains a level or descent edge")
    prof = tree.profile
    labels = tree.labels
    readings: list[tuple[tuple[int, int], bool]] = []  # (label pair, is_first_read)

    def walk(v: int) -> None:
        for child in prof.children[v]:
            pair = (labels[v], labels[child])
            readings.append((pair, True))
            walk(child)
            readings.append((pair, False))

    walk(0)
    tokens: list[str] = []
    i = 0
    while i < len(readings):
        pair, first = readings[i]
        if not first and i + 1 < len(readings):
            nxt_pair, nxt_first = readings[i + 1]
            if nxt_first and nxt_pair == pair:
                tokens.append("HL")
                tokens.append("HR")
                i += 2
                continue
        tokens.append("U" if first else "D")
        i += 1
    return tuple(tokens)


CokerPath = tuple[int, ...]
"""Signed step list: entry +k or -k is a step (k, +k) or (k, -k)."""


def enumerate_coker(n: int, bound: int = DEFAULT_PATH_BOUND) -> Iterator[CokerPath]:
    """All nonnegative paths from (0,0) to (2n,0) with steps (k, +-k), k >= 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds bound {bound}")

    acc: list[int] = []

    def extend(remaining: int, height: int) -> Iterator[CokerPath]:
        if remaining == 0:
            yield tuple(acc)
            return
        # an up of size k must leave room to come back down
        for k in range(1, (remaining - height) // 2 + 1):
            acc.append(k)
            yield from extend(remaining - k, height + k)
            acc.pop()
        for k in range(1, min(height, remaining) + 1):
            acc.append(-k)
            yield from extend(remaining - k, height - k)
            acc.pop()

    yield from extend(2 * n, 0)


def coker_count(n: int, bound: int = DEFAULT_PATH_BOUND) -> int:
    return sum(1 for _ in enumerate_coker(n, bound=bound))

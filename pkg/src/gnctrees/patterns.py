"""Pattern containment, avoidance filtering, and exact statistic censuses.

A pattern is a nonempty word over {u, h, d}.  A tree contains it when some
run of consecutive edges directed away from the root spells the word, i.e.
the pattern occurs as a factor of some root-to-vertex class word.  An
occurrence is identified with the run itself (a vertex plus len(pattern)
successive parent-to-child steps) and counted once, no matter how many
deeper paths extend it.  Runs ending at a vertex are exactly the suffix
windows of that vertex's root path, so one depth-first sweep with a class
stack finds every occurrence in O(n * k) per tree.

Censuses aggregate the (ascents, levels, descents) statistic over a tree
class exactly; they are the brute-force oracle every generating function and
closed form is checked against.  Shard-local tables merge by addition, so
results are independent of shard count and completion order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from functools import lru_cache
from typing import Iterable, Mapping

from .trees import (
    DEFAULT_EDGE_BOUND,
    GncTree,
    StatTriple,
    base_profile,
    enumerate_nc_trees,
)

PATTERN_ALPHABET = frozenset("uhd")

__all__ = [
    "parse_pattern",
    "parse_pattern_set",
    "word_contains",
    "count_occurrences",
    "avoids",
    "StatCensus",
    "census",
    "occurrence_census",
]


def parse_pattern(word: str) -> str:
    if not word:
        raise ValueError("pattern must be nonempty")
    bad = set(word) - PATTERN_ALPHABET
    if bad:
        raise ValueError(f"pattern letters must be u, h, or d (got {sorted(bad)})")
    return word


def parse_pattern_set(text: str) -> tuple[str, ...]:
    """Parse a comma-separated pattern list such as "uu,dd,h"; "" means none."""
    if not text.strip():
        return ()
    return tuple(parse_pattern(part.strip()) for part in text.split(","))


def word_contains(word: str, pattern: str) -> bool:
    """True iff the pattern occurs as a consecutive factor of the word."""
    return parse_pattern(pattern) in word


def _norm_patterns(patterns: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted({parse_pattern(p) for p in patterns}))


def count_occurrences(tree: GncTree, pattern: str) -> int:
    """Number of downward runs of consecutive edges spelling the pattern."""
    pattern = parse_pattern(pattern)
    prof = tree.profile
    labels = tree.labels
    k = len(pattern)
    stack = [""] * tree.base.points
    count = 0
    for v in prof.preorder[1:]:
        d = prof.depths[v]
        lp, lc = labels[prof.parents[v]], labels[v]
        stack[d - 1] = "u" if lp < lc else "h" if lp == lc else "d"
        if d >= k and "".join(stack[d - k : d]) == pattern:
            count += 1
    return count


def avoids(tree: GncTree, patterns: Iterable[str]) -> bool:
    """True iff no pattern in the set occurs anywhere in the tree."""
    pats = _norm_patterns(patterns)
    if not pats:
        raise ValueError("avoids requires a nonempty pattern set")
    prof = tree.profile
    labels = tree.labels
    stack = [""] * tree.base.points
    for v in prof.preorder[1:]:
        d = prof.depths[v]
        lp, lc = labels[prof.parents[v]], labels[v]
        stack[d - 1] = "u" if lp < lc else "h" if lp == lc else "d"
        for pat in pats:
            k = len(pat)
            if d >= k and "".join(stack[d - k : d]) == pat:
                return False
    return True


class StatCensus:
    """Exact joint (u, h, d) distribution over a class of trees with n edges.

    Entries are keyed internally by (u, d) with h = n - u - d derived.
    """

    __slots__ = ("n", "_table")

    def __init__(self, n: int, table: Mapping[tuple[int, int], int]):
        self.n = n
        self._table = {k: v for k, v in table.items() if v}

    @property
    def total(self) -> int:
        return sum(self._table.values())

    def count(self, u: int, h: int, d: int) -> int:
        if u + h + d != self.n:
            return 0
        return self._table.get((u, d), 0)

    def items(self) -> list[tuple[StatTriple, int]]:
        return [
            (StatTriple(u, self.n - u - d, d), c)
            for (u, d), c in sorted(self._table.items(), key=lambda kv: (kv[0][0], self.n - sum(kv[0]), kv[0][1]))
        ]

    def as_terms(self) -> dict[tuple[int, int, int], int]:
        """Exponent-triple form matching the series coefficient convention."""
        return {(u, self.n - u - d, d): c for (u, d), c in self._table.items()}

    def signed_by_ascents(self) -> int:
        return sum(c if u % 2 == 0 else -c for (u, d), c in self._table.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StatCensus):
            return NotImplemented
        return self.n == other.n and self._table == other._table

    def __repr__(self) -> str:
        return f"StatCensus(n={self.n}, total={self.total}, classes={len(self._table)})"


@lru_cache(maxsize=None)
def _labels_table(n: int) -> tuple[tuple[int, ...], ...]:
    # labels for every jump mask, shared across all base trees of a given n
    out = []
    for mask in range(1 << n):
        lab = [1] * (n + 1)
        for k in range(1, n + 1):
            lab[k] = lab[k - 1] + ((mask >> (k - 1)) & 1)
        out.append(tuple(lab))
    return tuple(out)


def _census_shard(
    n: int,
    patterns: tuple[str, ...],
    star_only: bool,
    shard_count: int,
    shard_index: int,
    bound: int,
) -> dict[tuple[int, int], int]:
    if n == 0:
        if shard_index == 0:
            return {(0, 0): 1}
        return {}
    singles = frozenset(p for p in patterns if len(p) == 1)
    pairs = frozenset((p[0], p[1]) for p in patterns if len(p) == 2)
    longs = [p for p in patterns if len(p) >= 3]
    labels_by_mask = _labels_table(n)
    masks = range(1, 1 << n, 2) if star_only else range(1 << n)

    table: dict[tuple[int, int], int] = {}
    for pos, base in enumerate(enumerate_nc_trees(n + 1, bound=bound + 1)):
        if pos % shard_count != shard_index:
            continue
        prof = base_profile(base)
        pre = prof.preorder[1:]
        par = tuple(prof.parents[v] for v in pre)
        dep = tuple(prof.depths[v] for v in pre)
        for mask in masks:
            lab = labels_by_mask[mask]
            stack = [""] * n
            u = d = 0
            ok = True
            for i in range(n):
                lp = lab[par[i]]
                lc = lab[pre[i]]
                if lp < lc:
                    c = "u"
                    u += 1
                elif lp == lc:
                    c = "h"
                else:
                    c = "d"
                    d += 1
                dv = dep[i]
                stack[dv - 1] = c
                if ok:
                    if c in singles:
                        ok = False
                    elif dv >= 2 and (stack[dv - 2], c) in pairs:
                        ok = False
                    else:
                        for pat in longs:
                            k = len(pat)
                            if dv >= k and "".join(stack[dv - k : dv]) == pat:
                                ok = False
                                break
            if ok:
                key = (u, d)
                table[key] = table.get(key, 0) + 1
    return table


@lru_cache(maxsize=None)
def _census_cached(n: int, patterns: tuple[str, ...], star_only: bool, bound: int) -> StatCensus:
    return StatCensus(n, _census_shard(n, patterns, star_only, 1, 0, bound))


def census(
    n: int,
    patterns: Iterable[str] = (),
    star_only: bool = False,
    jobs: int = 1,
    bound: int = DEFAULT_EDGE_BOUND,
) -> StatCensus:
    """Joint statistic distribution over all trees with n edges avoiding the set.

    An empty pattern set means no filtering; ``star_only`` restricts to trees
    whose root is the only point labeled 1.  With ``jobs`` > 1 the base trees
    are sharded and the shard tables merged; the merge is a plain sum, so the
    result never depends on scheduling.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    pats = _norm_patterns(patterns) if patterns else ()
    if jobs <= 1:
        return _census_cached(n, pats, star_only, bound)
    table: dict[tuple[int, int], int] = {}
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_census_shard, n, pats, star_only, jobs, i, bound) for i in range(jobs)
        ]
        for fut in as_completed(futures):
            for key, cnt in fut.result().items():
                table[key] = table.get(key, 0) + cnt
    return StatCensus(n, table)


@lru_cache(maxsize=None)
def _occurrence_census_cached(n: int, pattern: str, bound: int) -> tuple[tuple[int, int], ...]:
    if n == 0:
        return ((0, 1),)
    labels_by_mask = _labels_table(n)
    k = len(pattern)
    out: dict[int, int] = {}
    for base in enumerate_nc_trees(n + 1, bound=bound + 1):
        prof = base_profile(base)
        pre = prof.preorder[1:]
        par = tuple(prof.parents[v] for v in pre)
        dep = tuple(prof.depths[v] for v in pre)
        for mask in range(1 << n):
            lab = labels_by_mask[mask]
            stack = [""] * n
            hits = 0
            for i in range(n):
                lp = lab[par[i]]
                lc = lab[pre[i]]
                c = "u" if lp < lc else "h" if lp == lc else "d"
                dv = dep[i]
                stack[dv - 1] = c
                if dv >= k and "".join(stack[dv - k : dv]) == pattern:
                    hits += 1
            out[hits] = out.get(hits, 0) + 1
    return tuple(sorted(out.items()))


def occurrence_census(n: int, pattern: str, bound: int = DEFAULT_EDGE_BOUND) -> dict[int, int]:
    """For each m, the number of trees with n edges containing the pattern
    exactly m times."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return dict(_occurrence_census_cached(n, parse_pattern(pattern), bound))

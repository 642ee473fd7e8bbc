#!/usr/bin/env python3
"""Walk through the little Schröder path encoding on concrete trees.

Shows the preorder reading with down-up fusion, the round trip, and why the
alternative fusing rule keyed on label pairs fails to separate two trees.
"""

from gnctrees.combinat import little_schroeder
from gnctrees.patterns import avoids
from gnctrees.schroder import decode_path, encode_tree, encode_tree_literal
from gnctrees.trees import NcTree, enumerate_gnc, make_gnc, tree_to_json


def main():
    base = NcTree.of(8, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (0, 6), (6, 7)])
    tree = make_gnc(base, {1, 4, 6, 7})
    print("tree:", tree_to_json(tree))
    path = encode_tree(tree)
    print("encoded path:", path.as_text())
    print("decodes back to the same tree:", decode_path(path) == tree)
    print()

    # two trees on 4 points differing only in the last gap
    base3 = NcTree.of(4, [(0, 1), (1, 2), (0, 3)])
    with_flat = make_gnc(base3, {1, 2})
    without_flat = make_gnc(base3, {1, 2, 3})
    print("same shape, gap 3 not a jump:", encode_tree(with_flat).as_text())
    print("same shape, gap 3 a jump:   ", encode_tree(without_flat).as_text())
    print("label-pair rule gives both: ", "".join(encode_tree_literal(with_flat)),
          "=", "".join(encode_tree_literal(without_flat)))
    print()

    for n in range(6):
        kept = [t for t in enumerate_gnc(n) if n == 0 or avoids(t, ("h", "d"))]
        images = {encode_tree(t).steps for t in kept}
        print(f"n = {n}: {len(kept):3d} increasing trees -> {len(images):3d} distinct paths"
              f"  (little Schröder: {little_schroeder(n)})")


if __name__ == "__main__":
    main()

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gnctrees.trees import NcTree, make_gnc  # noqa: E402


@pytest.fixture
def eight_point_tree():
    """Seven-edge tree whose every edge is an ascent; encodes to UFFUFDDUUDD."""
    base = NcTree.of(8, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (0, 6), (6, 7)])
    return make_gnc(base, {1, 4, 6, 7})

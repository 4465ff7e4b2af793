import pytest

from instances import join_interiors, proper, trivial_web
from webextract.certificates import CleanSet
from webextract.certify import verify_clean_set
from webextract.graph_core import Graph
from webextract.oracle import (
    OracleRefusal,
    brute_clean_set,
    brute_induced,
    brute_pinned_pair,
    brute_ramsey_min,
    brute_touching_families,
    has_monochromatic,
)


def test_clean_set_examples():
    g, web = proper(6)
    assert brute_clean_set(g, web, 3) == (0, 1, 2)
    assert brute_clean_set(g, web, 7) is None
    g, web = trivial_web(6)
    assert brute_clean_set(g, web, 2) is None
    assert brute_clean_set(g, web, 1) == (0,)


def test_clean_set_passes_verifier():
    g, web = proper(6, noise=0.3, seed=5)
    for s in range(1, 5):
        S = brute_clean_set(g, web, s)
        if S is not None:
            assert verify_clean_set(g, web, CleanSet(members=S, s=s), s)


def test_guards_refuse():
    g, web = proper(21)
    with pytest.raises(OracleRefusal):
        brute_clean_set(g, web, 2)
    with pytest.raises(OracleRefusal):
        brute_induced(Graph(17), 2)
    with pytest.raises(OracleRefusal):
        brute_ramsey_min(2, 2, 3, 20)


def test_ramsey_min():
    assert brute_ramsey_min(2, 2, 3, 6) == 6
    assert brute_ramsey_min(1, 2, 5, 6) == 5
    assert brute_ramsey_min(3, 3, 2, 6) == 2
    assert brute_ramsey_min(2, 2, 4, 8) is None


def test_induced_examples():
    assert brute_induced(Graph.complete(4), 3).clique == (0, 1, 2)
    assert brute_induced(Graph.cycle(4), 2).biclique == ((0, 2), (1, 3))
    g, _ = proper(5)
    rep = brute_induced(g, 3)
    assert not rep.any


def test_pinned_and_touching():
    g, web = trivial_web(5)
    assert brute_pinned_pair(g, web, 1, 2) == ((0,), ((1, 2), (3, 4)))
    g, web = proper(5)
    assert brute_pinned_pair(g, web, 1, 1) is None
    assert brute_touching_families(g, web, 1) is None
    g = join_interiors(g, web, (0, 1), (2, 3))
    assert brute_touching_families(g, web, 1) == (((0, 1),), ((2, 3),))


def test_has_monochromatic():
    col = {(0, 1): 0, (0, 2): 1, (1, 2): 0}
    assert not has_monochromatic(col, range(3), 2, 3)
    assert has_monochromatic(col, range(3), 2, 2)

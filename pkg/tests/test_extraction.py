from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from instances import join_interiors, proper, random_web, trivial_web
from webextract.budget import Budget
from webextract.certificates import (
    CleanSet,
    Inconclusive,
    InducedBiclique,
    InducedClique,
    PinnedPair,
    TouchingFamilies,
)
from webextract.certify import verify_certificate
from webextract.extraction import (
    PAIRS_OF_PAIRS,
    ContractViolation,
    ExtractionParams,
    lemma_clean_interior,
    lemma_pinned,
    lemma_touching_sets,
    main_extract,
    orient,
    phi_interior,
    phi_pinned,
    split_five,
    split_four,
    theorem_combined,
)
from webextract.graph_core import Graph
from webextract.oracle import brute_clean_set, brute_induced, brute_pinned_pair, brute_touching_families
from webextract.web_model import Web, induced_union_is_proper_subdivision, plant_subdivision, profile, restrict


def ok(g, web, cert):
    return verify_certificate(g, web, cert).ok


# colorings


def test_phi_pinned_examples():
    g, web = proper(5)
    order = sorted(web.branch)
    for T in combinations(range(5), 3):
        assert phi_pinned(g, web, order, T) == frozenset()
    g, web = trivial_web(3)
    assert phi_pinned(g, web, [0, 1, 2], (2, 0, 1)) == {1, 2, 3}
    g, web = proper(4)
    g = g.with_edges([(0, web.path(1, 2)[1])])
    assert 1 in phi_pinned(g, web, [0, 1, 2, 3], (0, 1, 2))


def test_phi_interior_examples():
    g, web = trivial_web(5)
    assert phi_interior(g, web, sorted(web.branch), (0, 1, 2, 3)) == frozenset()
    g, web = proper(5)
    for T in combinations(range(5), 4):
        assert phi_interior(g, web, sorted(web.branch), T) == frozenset()
    g = join_interiors(g, web, (0, 1), (2, 3))
    color = phi_interior(g, web, sorted(web.branch), (0, 1, 2, 3))
    assert frozenset({(1, 2), (3, 4)}) in color
    assert len(PAIRS_OF_PAIRS) == 15


# block splits


@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 5))
def test_split_five(a, b, extra):
    Z = list(range(3, 3 + 3 * a + 2 * b + extra))
    I1, J, I2, K, I3 = split_five(Z, a, b)
    assert [len(x) for x in (I1, J, I2, K, I3)] == [a, b, a, b, a]
    assert max(I1) < min(J) and max(J) < min(I2) and max(I2) < min(K) and max(K) < min(I3)


def test_split_four_and_too_small():
    assert split_four(range(8), 2) == ([0, 1], [2, 3], [4, 5], [6, 7])
    with pytest.raises(AssertionError):
        split_four(range(7), 2)
    with pytest.raises(AssertionError):
        split_five(range(4), 1, 1)


@pytest.mark.parametrize("P,Q", [(p, q) for p, q in PAIRS_OF_PAIRS])
def test_orient(P, Q):
    i, j, ip, jp = orient(P, Q)
    assert {i, j} == set(P) and {ip, jp} == set(Q)
    assert j not in Q and jp not in P


# lemma: pinned pair or clean set


def test_lemma_pinned_examples():
    g, web = proper(7)
    cert = lemma_pinned(g, web, 1, 1, 3)
    assert isinstance(cert, CleanSet) and len(cert.members) == 3 and ok(g, web, cert)
    g, web = trivial_web(7)
    cert = lemma_pinned(g, web, 1, 1, 3)
    assert isinstance(cert, PinnedPair) and cert.route == "paper_bound" and ok(g, web, cert)
    g, web = trivial_web(2)
    cert = lemma_pinned(g, web, 1, 1, 3)
    assert isinstance(cert, Inconclusive) and cert.proven_absent


def test_lemma_pinned_larger_split():
    g, web = trivial_web(12)
    cert = lemma_pinned(g, web, 2, 3, 4)
    assert isinstance(cert, PinnedPair) and cert.route == "paper_bound"
    assert cert.A == (0, 1) and cert.B == ((2, 7), (3, 8), (4, 9))
    assert ok(g, web, cert)


def test_lemma_clean_interior_examples():
    g, web = proper(8)
    cert = lemma_clean_interior(g, web, 1, 4)
    assert isinstance(cert, CleanSet) and cert.s == 4 and ok(g, web, cert)
    g, web = trivial_web(5)
    cert = lemma_clean_interior(g, web, 1, 5)
    assert isinstance(cert, CleanSet) and ok(g, web, cert)


def test_lemma_clean_interior_touching():
    g, web = proper(8)
    # join two disjoint paths' interiors to every other interior
    inner = {p: web.path(*sorted(p))[1:-1] for p in web.paths}
    hubs = [frozenset((0, 1)), frozenset((2, 3))]
    extra = [(u, v) for h in hubs for p, seq in inner.items() if p != h for u in inner[h] for v in seq]
    g = g.with_edges(extra)
    cert = lemma_clean_interior(g, web, 1, 8)
    assert isinstance(cert, TouchingFamilies) and cert.c == 1 and ok(g, web, cert)


def test_lemma_clean_interior_ramsey_route():
    # a web where every two interiors touch: the Ramsey step fires and builds C, C'
    g, web = proper(8)
    inner = [web.path(*sorted(p))[1:-1] for p in web.paths]
    g = g.with_edges((a[0], b[0]) for a, b in combinations(inner, 2))
    cert = lemma_clean_interior(g, web, 2, 3)
    assert isinstance(cert, TouchingFamilies) and cert.route == "paper_bound" and ok(g, web, cert)


# combined


def test_theorem_combined_examples():
    g, web = proper(9)
    cert = theorem_combined(g, web, 1, 1, 1, 4)
    assert isinstance(cert, CleanSet) and set(cert.clauses) == {"stable", "triples", "interiors"}
    assert ok(g, web, cert) and "stage_one" in cert.notes and "stage_two" in cert.notes
    g, web = trivial_web(9)
    cert = theorem_combined(g, web, 1, 1, 1, 4)
    assert isinstance(cert, PinnedPair) and ok(g, web, cert)
    g, web = trivial_web(2)
    assert isinstance(theorem_combined(g, web, 1, 1, 1, 3), Inconclusive)


# touching sets


def test_touching_sets_clique():
    g = Graph.complete(6)
    cert = lemma_touching_sets(g, [[i] for i in range(6)], 3)
    assert isinstance(cert, InducedClique) and cert.vertices == (0, 1, 2) and ok(g, None, cert)


def test_touching_sets_singleton_biclique_breaks_hypothesis():
    # singletons on the same side of K_{2,2} are anticomplete, so this input
    # is outside the lemma; the biclique case needs sets of size >= 2
    g = Graph(4, [(u, v) for u in (0, 2) for v in (1, 3)])
    assert brute_induced(g, 2).biclique == ((0, 2), (1, 3))
    with pytest.raises(ContractViolation):
        lemma_touching_sets(g, [[0], [1], [2], [3]], 2)


def test_touching_sets_fallback_biclique():
    g = Graph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])
    cert = lemma_touching_sets(g, [[0, 3], [1, 4], [2, 5]], 3)
    assert isinstance(cert, InducedBiclique) and cert.route == "direct_search" and ok(g, None, cert)


def test_touching_sets_contract():
    g = Graph.path(4)
    with pytest.raises(ContractViolation):
        lemma_touching_sets(g, [[0], [2]], 1)
    with pytest.raises(ContractViolation):
        lemma_touching_sets(g, [[0, 1], [1, 2]], 1)
    with pytest.raises(ContractViolation):
        lemma_touching_sets(g, [[0], []], 1)


def test_touching_sets_ramsey_route_biclique():
    # X_i = {a_i, b_i}; a's form a stable set, b's a stable set, a_i ~ b_j exactly when i != j
    k = 6
    edges = [(2 * i, 2 * j + 1) for i in range(k) for j in range(k) if i != j]
    g = Graph(2 * k, edges)
    cert = lemma_touching_sets(g, [[2 * i, 2 * i + 1] for i in range(k)], 2)
    assert isinstance(cert, InducedBiclique) and cert.route == "paper_bound" and ok(g, None, cert)


# main theorem


def test_main_clean_set():
    g, web = proper(10)
    cert = main_extract(g, web, ExtractionParams(r=1, s=4, t=3))
    assert isinstance(cert, CleanSet) and len(cert.members) == 4
    assert induced_union_is_proper_subdivision(g, restrict(web, cert.members))
    assert brute_clean_set(g, web, 4) is not None


def test_main_clique():
    g, web = trivial_web(10)
    cert = main_extract(g, web, ExtractionParams(r=0, s=3, t=3))
    assert isinstance(cert, InducedClique) and len(cert.vertices) == 3 and ok(g, web, cert)


def test_main_small_web():
    g, web = proper(2)
    cert = main_extract(g, web, ExtractionParams(r=1, s=3, t=3))
    assert isinstance(cert, Inconclusive)


def test_main_rejects_long_paths():
    g, web = plant_subdivision(4, 3)
    with pytest.raises(ContractViolation):
        main_extract(g, web, ExtractionParams(r=1, s=2, t=2))


def test_params_validate():
    with pytest.raises(ValueError):
        ExtractionParams(r=-1)
    with pytest.raises(ValueError):
        ExtractionParams(s=0)
    with pytest.raises(ValueError):
        ExtractionParams(search_mode="fast")


def test_budget_gives_inconclusive():
    g, web = plant_subdivision(9, (1, 3), 0.3, 7)
    cert = main_extract(g, web, ExtractionParams(r=2, s=5, t=4, budget=10))
    assert isinstance(cert, Inconclusive) and not cert.proven_absent


def test_constructive_mode_is_sound():
    for seed in range(40):
        g, web = random_web(seed, max_k=8)
        r = profile(web).r_value
        cert = main_extract(g, web, ExtractionParams(r=r, s=3, t=2, search_mode="constructive"))
        if cert.conclusive:
            assert ok(g, web, cert)
        assert lemma_pinned(g, web, 1, 1, 2, "constructive").conclusive in (True, False)


# properties


@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(1, 4))
def test_soundness(seed, s, t):
    g, web = random_web(seed, max_k=8)
    r = profile(web).r_value
    cert = main_extract(g, web, ExtractionParams(r=r, s=s, t=t))
    if cert.conclusive:
        assert ok(g, web, cert)
    if isinstance(cert, CleanSet) and s >= 2:
        assert induced_union_is_proper_subdivision(g, restrict(web, cert.members))


@given(st.integers(0, 10**6), st.integers(1, 2), st.integers(1, 2), st.integers(1, 5))
def test_lemma_pinned_complete(seed, a, b, s):
    g, web = random_web(seed)
    cert = lemma_pinned(g, web, a, b, s)
    pinned = brute_pinned_pair(g, web, a, b)
    clean = brute_clean_set(g, web, s, ("stable", "triples"))
    assert cert.conclusive == (pinned is not None or clean is not None)
    if cert.conclusive:
        assert ok(g, web, cert)


@given(st.integers(0, 10**6), st.integers(1, 2), st.integers(1, 5))
def test_lemma_clean_interior_complete(seed, c, s):
    g, web = random_web(seed)
    cert = lemma_clean_interior(g, web, c, s)
    touching = brute_touching_families(g, web, c)
    clean = brute_clean_set(g, web, s, ("interiors",))
    assert cert.conclusive == (touching is not None or clean is not None)
    if cert.conclusive:
        assert ok(g, web, cert)


@given(st.integers(0, 10**6))
def test_determinism(seed):
    g, web = random_web(seed, max_k=8)
    p = ExtractionParams(r=profile(web).r_value, s=3, t=2)
    assert main_extract(g, web, p).dumps() == main_extract(g, web, p).dumps()

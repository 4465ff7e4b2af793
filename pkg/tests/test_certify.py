import json

import pytest

from instances import join_interiors, proper, trivial_web
from webextract.certificates import (
    CertificateFormatError,
    CleanSet,
    Inconclusive,
    InducedBiclique,
    InducedClique,
    PinnedPair,
    TouchingFamilies,
    from_json,
    loads,
)
from webextract.certify import (
    verify_biclique,
    verify_certificate,
    verify_clean_set,
    verify_clique,
    verify_pinned_pair,
    verify_touching_families,
)
from webextract.graph_core import Graph


def test_clique():
    tri = Graph.complete(3)
    assert verify_clique(tri, InducedClique(vertices=(0, 1, 2), t=3))
    assert not verify_clique(Graph.path(3), InducedClique(vertices=(0, 1, 2), t=3))
    assert not verify_clique(tri, InducedClique(vertices=(0, 1), t=3))
    assert not verify_clique(tri, InducedClique(vertices=(0, 1, 7), t=3))
    assert not verify_clique(tri, InducedClique(vertices=(0, "1", 2), t=3))


def test_biclique():
    c4 = Graph.cycle(4)
    assert verify_biclique(c4, InducedBiclique(left=(0, 2), right=(1, 3), t=2))
    assert not verify_biclique(c4.with_edges([(0, 2)]), InducedBiclique(left=(0, 2), right=(1, 3), t=2))
    assert not verify_biclique(Graph.path(4), InducedBiclique(left=(0, 2), right=(1, 3), t=2))
    assert not verify_biclique(c4, InducedBiclique(left=(0, 2), right=(0, 3), t=2))


def test_clean_set():
    g, web = proper(6)
    assert verify_clean_set(g, web, CleanSet(members=(0, 2, 5), s=3), 3)
    assert not verify_clean_set(g, web, CleanSet(members=(0, 2, 5), s=3), 4)
    assert not verify_clean_set(g, web, CleanSet(members=(0, 2, 6), s=3), 3)
    g2 = g.with_edges([(0, 2)])
    assert not verify_clean_set(g2, web, CleanSet(members=(0, 2, 5), s=3), 3)
    # 0 sees the interior of the path between 2 and 5
    g3 = g.with_edges([(0, web.path(2, 5)[1])])
    assert not verify_clean_set(g3, web, CleanSet(members=(0, 2, 5), s=3), 3)
    assert verify_clean_set(g3, web, CleanSet(members=(0, 2, 5), s=3, clauses=("stable",)), 3)
    g4 = join_interiors(g, web, (0, 2), (2, 5))
    assert not verify_clean_set(g4, web, CleanSet(members=(0, 2, 5), s=3), 3)


def test_pinned_pair():
    g, web = trivial_web(7)
    good = PinnedPair(A=(0,), B=((1, 3),), a=1, b=1)
    assert verify_pinned_pair(g, web, good, 1, 1)
    assert not verify_pinned_pair(g, web, PinnedPair(A=(1,), B=((1, 3),), a=1, b=1), 1, 1)
    g, web = proper(5)
    assert not verify_pinned_pair(g, web, good, 1, 1)
    assert not verify_pinned_pair(g, web, PinnedPair(A=(0, 2), B=((1, 3),), a=2, b=1), 1, 1)


def test_touching_families():
    g, web = proper(6)
    g = join_interiors(g, web, (0, 1), (2, 3))
    fam = TouchingFamilies(C=((0, 1),), C_prime=((2, 3),), c=1)
    assert verify_touching_families(g, web, fam, 1)
    assert not verify_touching_families(g, web, fam, 2)
    assert not verify_touching_families(g, web, TouchingFamilies(C=((0, 1),), C_prime=((2, 4),), c=1), 1)
    assert not verify_touching_families(g, web, TouchingFamilies(C=((0, 1),), C_prime=((0, 1),), c=1), 1)


def test_verify_certificate_dispatch():
    g, web = proper(4)
    assert verify_certificate(g, web, CleanSet(members=(0, 1, 2), s=3)).ok
    v = verify_certificate(g, web, Inconclusive(reason="x"))
    assert not v.ok and "inconclusive" in v.clause
    assert not verify_certificate(g, None, CleanSet(members=(0, 1), s=2)).ok
    v = verify_certificate(g, web, InducedClique(vertices=(0, 1), t=2))
    assert not v and "not adjacent" in v.clause


def test_checkers_are_total():
    g, web = proper(4)
    weird = [
        PinnedPair(A=(0,), B=((1,),), a=1, b=1),
        PinnedPair(A=(0,), B=(None,), a=1, b=1),
        TouchingFamilies(C=((0, 1, 2),), C_prime=((2, 3),), c=1),
        CleanSet(members=(0, None), s=2),
        CleanSet(members=(0, 1), s=2, clauses=("bogus",)),
    ]
    for cert in weird:
        assert not verify_certificate(g, web, cert).ok


def test_json_round_trip():
    certs = [
        InducedClique(vertices=(0, 1), t=2, route="paper_bound"),
        InducedBiclique(left=(0, 2), right=(1, 3), t=2),
        CleanSet(members=(1, 2), s=2, clauses=("stable",)),
        PinnedPair(A=(0,), B=((1, 2),), a=1, b=1),
        TouchingFamilies(C=((0, 1),), C_prime=((2, 3),), c=1),
        Inconclusive(reason="budget", steps=7, proven_absent=False),
    ]
    for cert in certs:
        back = loads(cert.dumps())
        assert back == cert and back.kind == cert.kind
        assert json.loads(cert.dumps())["route"] in ("paper_bound", "direct_search")


def test_bad_json():
    with pytest.raises(CertificateFormatError):
        loads("{")
    with pytest.raises(CertificateFormatError):
        loads("[]")
    with pytest.raises(CertificateFormatError):
        from_json({"kind": "unicorn", "evidence": {}})
    with pytest.raises(CertificateFormatError):
        from_json({"kind": "clique", "evidence": {"t": 2}})

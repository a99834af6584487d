"""Smoke tests for the python module: the bindings exist, round-trip data,
and reproduce a couple of frozen values."""

import pebblekit as pk


def star4():
    spec = pk.FamilySpec(pk.Family.Star, 4)
    g = pk.generate_family(spec)
    lab = pk.derive_edge_labels(g, pk.builtin_assignment(spec))
    return spec, g, lab


def test_family_generation():
    spec, g, lab = star4()
    assert g.vertex_count == 5
    assert g.edge_count == 4
    assert lab.labels() == [0, 1, 0, 1]
    assert lab.balanced()
    assert pk.is_sdc(g, pk.builtin_assignment(spec))
    assert pk.closed_form(spec) == 4
    assert pk.family_name(pk.Family.Star) == "star"
    assert pk.parse_family("star") == pk.Family.Star


def test_solve_and_replay():
    _, g, lab = star4()
    d = pk.Distribution([4, 0, 0, 0])
    assert pk.is_restricted(d, lab)
    r = pk.solve(g, lab, d)
    assert r.solvable
    assert len(r.certificate) == 2
    assert not pk.solve(g, lab, pk.Distribution([2, 0, 0, 0])).solvable


def test_psi_threshold():
    _, g, lab = star4()
    q = pk.PsiQuery()
    q.m_cap = 6
    r = pk.psi_ec(g, lab, q)
    assert r.value == 3
    assert r.status == pk.PsiStatus.Determined
    assert r.witness.counts == [0, 0, 0, 2]


def test_enumeration():
    _, g, lab = star4()
    dists = pk.restricted_distributions(g, lab, 2)
    assert len(dists) == 5
    assert dists[0].counts == [0, 0, 0, 2]


def test_serialization_round_trip():
    _, g, lab = star4()
    back = pk.load_graph(pk.save_graph(g))
    assert back.edge_count == g.edge_count
    d = pk.Distribution([0, 1, 0, 3])
    assert pk.load_distribution(pk.save_distribution(d)).counts == d.counts


def test_classic_cover():
    p3 = pk.Graph(3, [pk.Edge(0, 1), pk.Edge(1, 2)])
    assert pk.classic_cover_number(p3, 6) == 3

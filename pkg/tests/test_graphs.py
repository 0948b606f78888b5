import pytest

from graphbraid import (
    FiniteGraph,
    canonical_form,
    check_subdivision,
    classify,
    is_isomorphic,
    sufficient_subdivision,
    triviality_criterion,
)
from graphbraid.families import (
    cycle,
    disjoint_union,
    h_graph,
    q_graph,
    radial_tree,
    segment,
    star,
    sun_graph,
    theta_graph,
)
from graphbraid.graphs import (
    branches,
    essential_vertices,
    graph_to_json,
    parse_graph,
    simple_cycles,
    z2_witness,
)


def test_basic_accessors():
    g = q_graph(3, 1)
    assert g.valence("c0") == 3
    assert g.valence("t0") == 1
    assert set(g.neighbors("c0")) == {"c1", "c2", "t0"}
    assert g.normalize_edge(("t0", "c0")) == g.normalize_edge(("c0", "t0"))
    assert g.has_edge("c2", "c0") and not g.has_edge("c1", "t0")
    assert g.cycle_rank() == 1
    assert theta_graph().cycle_rank() == 2
    assert h_graph().cycle_rank() == 0


def test_components_and_induced_subgraphs():
    g = disjoint_union(segment(2), cycle(3))
    comps = g.components()
    assert len(comps) == 2
    sizes = sorted(len(c) for c in comps)
    assert sizes == [3, 3]
    ring = next(c for c in comps if g.induced_subgraph(c).cycle_rank() == 1)
    assert classify(g.induced_subgraph(ring)).tag == "cycle"


def test_essential_vertices_and_branches():
    h = h_graph()
    # the two junctions plus the four leaves; interior degree-2 vertices
    # are not essential
    assert essential_vertices(h) == ["m0", "m3", "s0l0_0", "s0l1_0", "s1l0_0", "s1l1_0"]
    bs = branches(h)
    assert len(bs) == 5
    assert sorted(len(b) for b in bs) == [2, 2, 2, 2, 4]


def test_simple_cycles():
    assert len(simple_cycles(cycle(5))) == 1
    thetas = simple_cycles(theta_graph())
    assert len(thetas) == 3
    assert sorted(len(c) for c in thetas) == [6, 6, 6]
    assert simple_cycles(segment(6)) == []


def test_subdivision_check():
    assert check_subdivision(theta_graph(), 4).ok
    report = check_subdivision(theta_graph(), 5)
    assert not report.ok
    # all three junction-to-junction paths have length 3 but need 4
    assert len(report.violations) == 3
    assert {v.kind for v in report.violations} == {"path"}
    assert all(v.length == 3 and v.required == 4 for v in report.violations)
    # a bare star is never subdivided enough for three particles
    assert not check_subdivision(star(3), 3).ok


def test_sufficient_subdivision():
    refined = sufficient_subdivision(star(3), 3)
    assert check_subdivision(refined, 3).ok
    assert len(refined.vertices) == 13
    # already-fine graphs come back unchanged
    assert sufficient_subdivision(cycle(6), 2) == cycle(6)


def test_classification_tags():
    assert classify(segment(4)).tag == "segment"
    assert classify(cycle(5)).tag == "cycle"
    assert classify(radial_tree([2, 2, 2])).tag == "radial_tree"
    assert classify(theta_graph()).tag == "generalised_theta"
    assert classify(q_graph(3, 1)).tag == "flower"
    assert classify(sun_graph(4, [(0, 1)])).tag == "flower"


def test_isomorphism_and_canonical_form():
    relabeled = FiniteGraph(
        ["x", "y", "z", "w"], [("x", "y"), ("y", "z"), ("z", "w"), ("w", "x")]
    )
    assert is_isomorphic(relabeled, cycle(4))
    assert canonical_form(relabeled) == canonical_form(cycle(4))
    assert not is_isomorphic(star(3), segment(3))
    assert canonical_form(star(3)) != canonical_form(segment(3))


def test_triviality_criterion():
    assert triviality_criterion(segment(5), 2, (2,)) == "trivial"
    assert triviality_criterion(cycle(5), 2, (2,)) == "infinite_diameter"
    # two particles meeting a junction already block triviality
    assert triviality_criterion(star(3), 2, (2,)) == "infinite_diameter"
    assert triviality_criterion(star(3), 1, (1,)) == "trivial"
    with pytest.raises(ValueError):
        triviality_criterion(segment(5), 2, (1, 1))
    with pytest.raises(ValueError):
        triviality_criterion(segment(5), 2, (3,))


def test_z2_witnesses():
    w = z2_witness(disjoint_union(cycle(3), cycle(3)), 2)
    assert w is not None and w.kind == "disjoint_cycles"
    w = z2_witness(theta_graph(), 4)
    assert w is not None and w.kind == "two_junctions"
    # with only three particles a theta shape gives no witness: both
    # junctions sit on every cycle
    assert z2_witness(theta_graph(), 3) is None
    assert z2_witness(cycle(8), 5) is None
    assert z2_witness(disjoint_union(cycle(3), cycle(3)), 1) is None


def test_subdivide_edges():
    g = segment(1).subdivide_edges([("v0", "v1")], 2)
    assert len(g.vertices) == 4
    assert len(g.edges) == 3
    assert is_isomorphic(g, segment(3))


def test_graph_json_round_trip():
    for g in (theta_graph(), q_graph(4, 2), disjoint_union(star(3), cycle(3))):
        assert parse_graph(graph_to_json(g)) == g

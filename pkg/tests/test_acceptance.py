"""End-to-end checks for the braid-complex toolkit.

Thirteen checks, one test function each, so ``pytest -v`` prints one
pass/fail line per check.  Every expected quantity is an exact integer or
an exact rendered string; nothing here carries a tolerance.

Complexes are cached in a module-level registry keyed by (graph, n) so
that the specialness sweep (check 11) revisits every complex the earlier
checks constructed instead of rebuilding them.
"""

import itertools
from math import comb

from graphbraid import (
    CubeComplex,
    FiniteGraph,
    betti_numbers,
    build_uc,
    check_special,
    closed_complement_components,
    complement_isomorphism,
    cut_along,
    decompose,
    euler_characteristic,
    expected_hyperplane_count,
    find_free_splitting,
    free,
    free_product_criterion_1,
    free_product_criterion_2,
    fundamental_group,
    homology,
    hyperplanes,
    hyperplanes_by_propagation,
    is_trivial,
    modified_radial_rank,
    normalize,
    radial_rank,
    render_group,
    resolve_by_decomposition,
)
from graphbraid.families import (
    a_graph,
    cycle,
    disjoint_union,
    double_triangle,
    flower_graph,
    h_graph,
    pulsar_graph,
    q_graph,
    radial_tree,
    segment,
    star,
    subdivided_star,
    sun_graph,
    theta_graph,
)
from graphbraid.homology import boundary_matrices


# --------------------------------------------------------------------------
# shared builds
# --------------------------------------------------------------------------

_BUILT: dict = {}


def _uc(g: FiniteGraph, n: int) -> CubeComplex:
    key = (g, n)
    if key not in _BUILT:
        _BUILT[key] = build_uc(g, n)
    return _BUILT[key]


_H8 = h_graph()                        # 8 vertices, two junctions
_H24 = h_graph(((5, 5), (5, 5)))       # same shape, every branch long
_A8 = a_graph()                        # hexagon with two antipodal feet
_A16 = a_graph(5, 6)                   # same shape, feet of length 5
_THETA8 = theta_graph()                # two junctions, one middle segment


# check 1: two graphs per component count, each run at n = 2 and n = 3
_PARTITIONED = [
    (2, disjoint_union(segment(3), segment(3))),
    (2, disjoint_union(segment(2), cycle(3))),
    (3, disjoint_union(segment(2), segment(2), segment(2))),
    (3, disjoint_union(star(3), cycle(4), segment(3))),
]

# check 2: (graph, n, labelled edge, hyperplane count); every piece left by
# the closed removal of the edge keeps at least n-1 vertices, so the count
# is the stars-and-bars value over the pieces.
_HYPERPLANE_CASES = [
    (star(3), 2, ("c", "p0_0"), 2),
    (cycle(6), 2, ("c0", "c1"), 1),
    (cycle(8), 3, ("c0", "c1"), 1),
    (_THETA8, 4, ("s1", "s2"), 1),
    (_H8, 4, ("m1", "m2"), 4),
    (star(5), 2, ("c", "p0_0"), 4),
    (subdivided_star(3, 3), 3, ("c", "p0_0"), 6),
    (q_graph(5, 3), 4, ("c0", "c1"), 4),
    (_A8, 4, ("c1", "c2"), 1),
    (segment(5), 3, ("v2", "v3"), 3),
    (subdivided_star(4, 2), 2, ("c", "p1_0"), 4),
]

# check 2, capacity-bound branch: some piece is smaller than n-1, so the
# stars-and-bars value overcounts and the capped partition count governs.
_CAPPED_CASES = [
    (star(3), 3, ("c", "p0_0"), [1, 1], 1),
    (q_graph(3, 1), 3, ("c0", "c1"), [1, 1], 1),
    (_H8, 4, ("m0", "m1"), [1, 1, 4], 4),
]

# check 3: (graph, n, cut edges, cut-complex cube counts or None)
_CUT_CASES = [
    (star(3), 2, [("c", "p0_0")], None),
    (star(3), 2, [("c", "p0_0"), ("c", "p1_0"), ("c", "p2_0")], None),
    (cycle(6), 2, [("c0", "c1")], None),
    (cycle(8), 3, [("c0", "c1")], None),
    (_THETA8, 4, [("s1", "s2")], [70, 160, 108, 20, 1]),
    (_H8, 4, [("m1", "m2")], [70, 120, 54, 0, 0]),
    (_A8, 4, [("c1", "c2")], [70, 140, 78, 8, 0]),
    (q_graph(4, 2), 3, [("c0", "c1")], None),
    (
        subdivided_star(3, 2),
        2,
        [("c", "p0_0"), ("c", "p1_0"), ("c", "p2_0")],
        [45, 48, 12],
    ),
    (q_graph(5, 3), 4, [("c0", "c1")], [70, 140, 90, 20, 1]),
    (_H24, 4, [("m1", "m2")], [10626, 33880, 39710, 20232, 3770]),
]

# check 4: (n, k) -> rank of the n-particle group on the k-prong star
# subdivided for n particles
_RADIAL_CASES = {
    (2, 3): 1,
    (2, 4): 3,
    (2, 5): 6,
    (2, 6): 10,
    (3, 3): 3,
    (3, 4): 11,
    (3, 5): 26,
    (4, 3): 6,
    (4, 4): 26,
    (5, 3): 10,
}

# check 5: one prong too short for the particle count (or two), the rest
# long; (tree, n, short prong count, rank)
_MODIFIED_CASES = [
    (radial_tree([1, 5, 5]), 4, 1, 3),
    (radial_tree([1, 4, 4]), 3, 1, 2),
    (radial_tree([1, 1, 5]), 4, 2, 1),
]

# check 9: cycle with a tail, cut at the cycle edge across from the tail
_LOOP_CASES = [
    (q_graph(3, 1), 2, (1, 2, 0)),
    (q_graph(4, 2), 3, (1, 3, 0, 0)),
    (q_graph(5, 3), 4, (1, 4, 0, 0, 0)),
]


def _brute_partitions(total: int, caps) -> int:
    """How many ways the spectators can sit in the pieces, by enumeration."""
    return sum(
        1
        for xs in itertools.product(*(range(c + 1) for c in caps))
        if sum(xs) == total
    )


def _center_cuts(k: int):
    return [("c", f"p{i}_0") for i in range(k)]


def _builds_through_check_10():
    """Every (graph, n) that checks 1-10 construct via _uc."""
    out = []
    for _, g in _PARTITIONED:
        out += [(g, 2), (g, 3)]
    for g, n, _, _ in _HYPERPLANE_CASES:
        out.append((g, n))
    for g, n, _, _, _ in _CAPPED_CASES:
        out.append((g, n))
    for g, n, cuts, _ in _CUT_CASES:
        out.append((g, n))
        out.append((g.remove_open_edges(cuts), n))
    for n, k in _RADIAL_CASES:
        out.append((subdivided_star(k, n), n))
    for g, n, _, _ in _MODIFIED_CASES:
        out.append((g, n))
    out += [(_H24, 4), (_A16, 4), (_H8, 4), (_A8, 4)]
    for g, n, _ in _LOOP_CASES:
        out.append((g, n))
    out.append((_THETA8, 4))
    return out


# --------------------------------------------------------------------------
# the thirteen checks
# --------------------------------------------------------------------------


def test_criterion_01_component_counts():
    for k, g in _PARTITIONED:
        pieces = g.components()
        assert len(pieces) == k
        for n in (2, 3):
            assert all(len(p) >= n for p in pieces)
            comps = _uc(g, n).components()
            assert len(comps) == comb(n + k - 1, k - 1)
            # one component per way of spreading the n particles
            assert len({c.signature for c in comps}) == len(comps)


def test_criterion_02_hyperplane_counts():
    for g, n, e, expected in _HYPERPLANE_CASES:
        label = g.normalize_edge(e)
        caps = [m.bit_count() for m in closed_complement_components(g, e)]
        assert all(c >= n - 1 for c in caps)
        k = len(caps)
        got = sum(1 for h in hyperplanes(_uc(g, n)) if h.label == label)
        assert got == expected
        assert got == comb(n + k - 2, k - 1)
        assert got == _brute_partitions(n - 1, caps)
        assert got == expected_hyperplane_count(g, n, e)
    for g, n, e, caps, expected in _CAPPED_CASES:
        label = g.normalize_edge(e)
        sizes = sorted(m.bit_count() for m in closed_complement_components(g, e))
        assert sizes == sorted(caps)
        assert min(sizes) < n - 1  # the unbounded formula does not apply
        got = sum(1 for h in hyperplanes(_uc(g, n)) if h.label == label)
        assert got == expected
        assert got == _brute_partitions(n - 1, caps)
        assert got == expected_hyperplane_count(g, n, e)


def test_criterion_03_cutting_matches_edge_removal():
    for g, n, cuts, cut_dims in _CUT_CASES:
        ambient = _uc(g, n)
        labels = {g.normalize_edge(e) for e in cuts}
        chosen = [h for h in hyperplanes(ambient) if h.label in labels]
        assert chosen
        cut = cut_along(ambient, chosen)
        if cut_dims is not None:
            assert cut.dim_counts() == cut_dims
        independent = _uc(g.remove_open_edges(cuts), n)
        assert cut.dim_counts() == independent.dim_counts()
        for k in range(len(cut.cubes)):
            assert sorted(map(cut.cube_key_by_ids, cut.cubes[k])) == sorted(
                map(independent.cube_key_by_ids, independent.cubes[k])
            )


def test_criterion_04_radial_rank_end_to_end():
    for (n, k), rank in _RADIAL_CASES.items():
        assert n + k <= 8
        closed_form = (k - 2) * comb(n + k - 2, k - 1) - comb(n + k - 2, k - 2) + 1
        assert closed_form == rank == radial_rank(n, k)
        g = subdivided_star(k, n)
        dec = decompose(g, n, _center_cuts(k))
        assert all(is_trivial(node.group) for node in dec.nodes)
        assert all(is_trivial(link.group) for link in dec.links)
        assert dec.first_betti_lower_bound() == rank
        assert normalize(fundamental_group(dec)) == normalize(free(rank))
        profile = homology(_uc(g, n))
        assert profile.betti[0] == 1
        assert profile.betti[1] == rank
        assert all(b == 0 for b in profile.betti[2:])
        assert all(t == () for t in profile.torsion)


def test_criterion_05_modified_radial_ranks():
    assert modified_radial_rank(4, 3, 1) == 3
    assert modified_radial_rank(3, 3, 1) == 2
    assert modified_radial_rank(4, 3, 2) == 1
    for g, n, short, rank in _MODIFIED_CASES:
        assert modified_radial_rank(n, 3, short) == rank
        assert normalize(resolve_by_decomposition(g, n)) == normalize(free(rank))
        profile = homology(_uc(g, n))
        assert profile.betti[0] == 1
        assert profile.betti[1] == rank
        assert all(b == 0 for b in profile.betti[2:])
        assert all(t == () for t in profile.torsion)


def test_criterion_06_two_junction_graph_long_branches():
    dec = decompose(_H24, 4, [("m1", "m2")])
    assert [render_group(node.group) for node in dec.nodes] == [
        "Z^2",
        "F2",
        "F3",
        "F2",
        "F3",
    ]
    assert len(dec.links) == 4
    assert all(is_trivial(link.group) and link.in_tree for link in dec.links)
    assert render_group(fundamental_group(dec)) == "F10 * Z^2"
    assert render_group(resolve_by_decomposition(_H24, 4)) == "F10 * Z^2"
    profile = homology(_uc(_H24, 4))
    assert profile.betti == (1, 12, 1, 0, 0)
    assert profile.torsion == ((), (), (), (), ())


def test_criterion_07_decorated_cycle_long_feet():
    assert render_group(resolve_by_decomposition(_A16, 4)) == "F5 * Z^2"
    profile = homology(_uc(_A16, 4))
    assert profile.betti == (1, 7, 1, 0, 0)
    assert profile.torsion == ((), (), (), (), ())


def test_criterion_08_short_branch_homology():
    profile = homology(_uc(_H8, 4))
    assert profile.betti == (1, 2, 1, 0)
    assert profile.torsion == ((), (), (), ())
    profile = homology(_uc(_A8, 4))
    assert profile.betti == (1, 3, 1, 0, 0)
    assert profile.torsion == ((), (), (), (), ())


def test_criterion_09_tailed_cycles_are_free():
    for g, n, betti in _LOOP_CASES:
        dec = decompose(g, n, [("c0", "c1")])
        assert len(dec.nodes) == 1
        assert is_trivial(dec.nodes[0].group)
        assert len(dec.links) == n
        for link in dec.links:
            assert link.tail == link.head == 0  # self-loops on the one node
            assert is_trivial(link.group)
        assert normalize(fundamental_group(dec)) == normalize(free(n))
        profile = homology(_uc(g, n))
        assert profile.betti == betti
        assert all(t == () for t in profile.torsion)


def test_criterion_10_middle_segment_stable_letter():
    dec = decompose(_THETA8, 4, [("s1", "s2")])
    assert len(dec.nodes) == 1
    assert len(dec.links) == 1
    link = dec.links[0]
    assert link.tail == link.head == 0 and not link.in_tree
    assert normalize(link.group) == free(1)

    got = resolve_by_decomposition(_THETA8, 4)
    assert got.kind == "hnn"
    base, edge = got.factors
    assert render_group(base) == "Z * Z^2"
    assert render_group(edge) == "Z"
    assert render_group(got) == "HNN(Z * Z^2; edge Z)"

    cc = _uc(_THETA8, 4)
    profile = homology(cc)
    assert profile.betti == (1, 3, 1, 0, 0)
    assert profile.torsion == ((), (), (), (), ())
    assert euler_characteristic(cc) == 1 - 3 + 1


def test_criterion_11_every_built_complex_is_special():
    for g, n in _builds_through_check_10():
        _uc(g, n)
    assert len(_BUILT) >= 40
    for (g, n), cc in _BUILT.items():
        report = check_special(cc)
        assert report.two_sided
        assert report.ok, (sorted(g.vertices)[:4], n)


_CORPUS = [
    star(3),
    star(4),
    star(5),
    radial_tree([1, 3, 2]),
    radial_tree([2, 2, 2]),
    segment(4),
    segment(6),
    cycle(3),
    cycle(6),
    cycle(8),
    q_graph(3, 1),
    q_graph(4, 2),
    q_graph(5, 3),
    theta_graph(),
    h_graph(),
    a_graph(),
    double_triangle(),
    flower_graph([3, 3], []),
    flower_graph([4], [2]),
    sun_graph(4, [(0, 1), (2, 1)]),
    pulsar_graph(2, 1, 2, [1], [1]),
    subdivided_star(3, 2),
    disjoint_union(segment(2), cycle(3)),
    disjoint_union(star(3), segment(1)),
]


def _composes_to_zero(outer, inner) -> bool:
    """Whether applying `outer` after `inner` kills every column."""
    for col in inner.cols:
        acc: dict = {}
        for mid, v in col.items():
            for row, w in outer.cols[mid].items():
                acc[row] = acc.get(row, 0) + v * w
        if any(acc.values()):
            return False
    return True


def test_criterion_12_property_suites():
    assert len(_CORPUS) == 24
    with_squares = 0
    dualities = 0
    for g in _CORPUS:
        nv = len(g.vertices)
        for n in range(1, min(nv, 7)):
            cc = build_uc(g, n)
            mats = boundary_matrices(cc)
            for outer, inner in zip(mats, mats[1:]):
                assert _composes_to_zero(outer, inner)
            profile = homology(cc)
            assert profile.betti[0] == len(cc.components())
            assert euler_characteristic(cc) == sum(
                (-1) ** k * b for k, b in enumerate(profile.betti)
            )
            if len(cc.cubes) > 2 and cc.cubes[2]:
                classes = hyperplanes_by_propagation(cc)
                keyed = hyperplanes(cc)
                assert sorted(tuple(sorted(c)) for c in classes) == sorted(
                    tuple(sorted(h.dual_edges)) for h in keyed
                )
                with_squares += 1
        assert nv <= 12
        for n in range(1, nv // 2 + 1):
            complement_isomorphism(g, n)  # verifies itself, raises on failure
            dualities += 1
    assert with_squares == 72
    assert dualities == 72


def _flower_union(arc: int, petal: int) -> FiniteGraph:
    """A petal cycle of length `petal` sharing exactly one vertex with a
    two-arc theta whose arcs and middle segment all have length `arc`."""
    base = theta_graph(2, arc, arc)
    ring = ["h0"] + [f"q{i}" for i in range(petal - 1)]
    edges = list(base.edges)
    edges += [(ring[i], ring[i + 1]) for i in range(len(ring) - 1)]
    edges.append((ring[-1], "h0"))
    return FiniteGraph(list(base.vertices) + ring[1:], edges)


def test_criterion_13_free_splitting_certificates():
    # a cycle with one long ray: the edge criterion fires, the flower
    # criterion does not
    sun = sun_graph(5, [(0, 2)])
    cert = free_product_criterion_2(sun, 3)
    assert cert is not None and cert.kind == "two_sided_edge"
    assert cert.edge == ("c0", "c1")
    assert cert.segment_component == ("c2", "c3", "c4")
    assert free_product_criterion_1(sun, 3) is None
    edge, dec = find_free_splitting(sun, 3)
    assert edge == ("c0", "c1")
    assert any(not l.in_tree and is_trivial(l.group) for l in dec.links)
    assert render_group(fundamental_group(dec)) == "F3"
    assert dec.first_betti_lower_bound() == 3
    assert betti_numbers(build_uc(sun, 3), 1) == (1, 3)

    # flower glued onto a larger graph at one vertex
    for n, arc, petal, b1 in ((2, 2, 4, 7), (3, 4, 6, 10)):
        g = _flower_union(arc, petal)
        cert = free_product_criterion_1(g, n)
        assert cert is not None and cert.kind == "flower_cut_vertex"
        assert cert.vertex == "h0" and cert.center == "h0"
        edge, dec = find_free_splitting(g, n)
        assert edge == ("h0", "s1")
        assert any(not l.in_tree and is_trivial(l.group) for l in dec.links)
        free_rank = dec.first_betti_lower_bound()
        assert free_rank == 2
        pi1 = normalize(fundamental_group(dec))
        if pi1.kind == "free_product":
            assert any(f.kind == "free" and f.rank == free_rank for f in pi1.factors)
        assert betti_numbers(build_uc(g, n), 1) == (1, b1)

    # tree with exactly two junctions, five particles
    h21 = h_graph(((4, 4), (4, 4)), middle=4)
    cert = free_product_criterion_1(h21, 5)
    assert cert is not None and cert.kind == "flower_cut_vertex"
    assert cert.vertex == "m1" and cert.center == "m0"
    edge, dec = find_free_splitting(h21, 5)
    assert edge == ("m0", "m1")
    assert any(not l.in_tree and is_trivial(l.group) for l in dec.links)
    assert dec.first_betti_lower_bound() == 7
    assert betti_numbers(build_uc(h21, 5, max_dim=2), 1) == (1, 20)

    # graphs that genuinely admit no such certificate
    for g, n in ((theta_graph(), 3), (cycle(8), 3), (cycle(6), 2)):
        assert free_product_criterion_1(g, n) is None
        assert free_product_criterion_2(g, n) is None

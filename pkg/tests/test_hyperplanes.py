import itertools

from graphbraid import (
    build_uc,
    check_special,
    count_capped_partitions,
    expected_hyperplane_count,
    hyperplanes,
    hyperplanes_by_propagation,
)
from graphbraid.families import cycle, h_graph, q_graph, segment, star, theta_graph
from graphbraid.hyperplanes import verify_side_component


def test_hexagon_has_six_hyperplanes():
    cc = build_uc(cycle(6), 2)
    hs = hyperplanes(cc)
    assert len(hs) == 6
    assert len({h.label for h in hs}) == 6
    for h in hs:
        assert len(h.dual_edges) == 4


def test_signatures_separate_hyperplanes_with_one_label():
    cc = build_uc(star(5), 2)
    same_label = [h for h in hyperplanes(cc) if h.label == ("c", "p0_0")]
    assert len(same_label) == 4
    sigs = sorted(h.signature for h in same_label)
    assert sigs == [
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
    ]


def test_sides_partition_and_are_connected():
    for g, n in ((star(3), 2), (theta_graph(), 2), (q_graph(3, 1), 2)):
        cc = build_uc(g, n)
        for h in hyperplanes(cc):
            assert not set(h.lower_side) & set(h.upper_side)
            verify_side_component(cc, h, "lower")
            verify_side_component(cc, h, "upper")


def test_propagation_agrees_with_keyed_partition():
    for g, n in ((cycle(6), 2), (theta_graph(), 2), (h_graph(), 3)):
        cc = build_uc(g, n)
        classes = sorted(tuple(sorted(c)) for c in hyperplanes_by_propagation(cc))
        keyed = sorted(tuple(sorted(h.dual_edges)) for h in hyperplanes(cc))
        assert classes == keyed


def _brute(total, caps):
    return sum(
        1
        for xs in itertools.product(*(range(c + 1) for c in caps))
        if sum(xs) == total
    )


def test_count_capped_partitions():
    for total in range(6):
        for caps in ([3, 3], [1, 1, 1], [2, 5], [4], [1, 2, 3]):
            assert count_capped_partitions(total, caps) == _brute(total, caps)
    assert count_capped_partitions(0, []) == 1
    assert count_capped_partitions(2, []) == 0
    assert count_capped_partitions(-1, [2]) == 0


def test_expected_count_matches_built_complex():
    cases = [
        (segment(5), 3, ("v2", "v3")),
        (star(3), 3, ("c", "p0_0")),  # capacity-bound
        (h_graph(), 4, ("m0", "m1")),  # capacity-bound
        (q_graph(5, 3), 4, ("c0", "c1")),
    ]
    for g, n, e in cases:
        cc = build_uc(g, n)
        label = g.normalize_edge(e)
        got = sum(1 for h in hyperplanes(cc) if h.label == label)
        assert got == expected_hyperplane_count(g, n, e)


def test_specialness_report_fields():
    report = check_special(build_uc(cycle(6), 2))
    assert report.ok
    assert report.two_sided
    assert report.self_intersections == ()
    assert report.direct_self_osculations == ()
    assert report.inter_osculations == ()

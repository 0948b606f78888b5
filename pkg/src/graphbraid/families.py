"""Constructors for the named graph shapes used across the test-suite, the
CLI demos and the decomposition formula table.

Vertex naming is deterministic so tests can refer to cut edges by name.
"""

from __future__ import annotations

from .graphs import FiniteGraph


def segment(length: int) -> FiniteGraph:
    """Path with `length` edges (length 0 is a single vertex)."""
    vs = [f"v{i}" for i in range(length + 1)]
    return FiniteGraph(vs, list(zip(vs, vs[1:])))


def cycle(length: int) -> FiniteGraph:
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    vs = [f"c{i}" for i in range(length)]
    es = list(zip(vs, vs[1:])) + [(vs[-1], vs[0])]
    return FiniteGraph(vs, es)


def radial_tree(prong_lengths: list[int]) -> FiniteGraph:
    """Star with centre "c" and one path per entry; prong i's vertices are
    p{i}_0 .. (tip last).  radial_tree([1]*k) is the (k+1)-vertex star R_k."""
    vs = ["c"]
    es = []
    for i, L in enumerate(prong_lengths):
        prev = "c"
        for j in range(L):
            v = f"p{i}_{j}"
            vs.append(v)
            es.append((prev, v))
            prev = v
    return FiniteGraph(vs, es)


def star(k: int) -> FiniteGraph:
    """R_k: central vertex joined to k leaves."""
    return radial_tree([1] * k)


def subdivided_star(k: int, n: int) -> FiniteGraph:
    """R'_k for n particles: every prong subdivided to length n+1."""
    return radial_tree([n + 1] * k)


def modified_star(k: int, r: int, n: int) -> FiniteGraph:
    """R_{k,r}: r prongs kept at length 1, the other k-r subdivided to
    length n+1."""
    if not 0 <= r <= k:
        raise ValueError("need 0 <= r <= k")
    return radial_tree([n + 1] * (k - r) + [1] * r)


def h_graph(leg_lengths=((1, 1), (1, 1)), middle: int = 3) -> FiniteGraph:
    """Two junctions joined by a path of `middle` edges, with two pendant
    legs at each junction.  Defaults give the 8-vertex H shape; the cut edge
    used in decompositions is the middle edge ("m1","m2") when middle=3.
    leg_lengths is a pair of pairs: lengths of the two legs at each end."""
    vs = [f"m{i}" for i in range(middle + 1)]
    es = list(zip(vs, vs[1:]))
    g = FiniteGraph(vs, es)
    vlist = list(g.vertices)
    elist = [list(e) for e in g.edges]
    for side, lengths in enumerate(leg_lengths):
        anchor = "m0" if side == 0 else f"m{middle}"
        for leg, L in enumerate(lengths):
            prev = anchor
            for j in range(L):
                v = f"s{side}l{leg}_{j}"
                vlist.append(v)
                elist.append([prev, v])
                prev = v
    return FiniteGraph(vlist, elist)


def a_graph(leg_length: int = 1, cycle_length: int = 6) -> FiniteGraph:
    """Cycle with a pendant leg at c0 and another at the antipodal-ish c3;
    defaults give the 8-vertex A shape.  The decomposition cut edge is
    ("c1","c2"): removing it open gives the H shape, removing it closed
    leaves a segment."""
    g = cycle(cycle_length)
    vs = list(g.vertices)
    es = [list(e) for e in g.edges]
    half = cycle_length // 2
    for idx, anchor in enumerate((f"c0", f"c{half}")):
        prev = anchor
        for j in range(leg_length):
            v = f"t{idx}_{j}"
            vs.append(v)
            es.append([prev, v])
            prev = v
    return FiniteGraph(vs, es)


def theta_graph(m: int = 2, segment_length: int = 3, arc_length: int = 3) -> FiniteGraph:
    """Generalised theta: two hubs h0,h1 joined by one segment of
    `segment_length` edges and m arcs of `arc_length` edges (so every cycle
    through the segment has length segment_length+arc_length).  Defaults
    give the 8-vertex two-6-cycle shape; the usual cut edge is the middle
    segment edge ("s1","s2")."""
    if m < 1:
        raise ValueError("need at least one arc")
    vs = ["h0", "h1"]
    es: list[list[str]] = []
    prev = "h0"
    for j in range(1, segment_length):
        v = f"s{j}"
        vs.append(v)
        es.append([prev, v])
        prev = v
    es.append([prev, "h1"])
    for i in range(m):
        prev = "h0"
        for j in range(1, arc_length):
            v = f"a{i}_{j}"
            vs.append(v)
            es.append([prev, v])
            prev = v
        es.append([prev, "h1"])
    return FiniteGraph(vs, es)


def q_graph(cycle_length: int = 3, tail_length: int = 1) -> FiniteGraph:
    """Cycle with one pendant path at c0 (the letter Q)."""
    g = cycle(cycle_length)
    vs = list(g.vertices)
    es = [list(e) for e in g.edges]
    prev = "c0"
    for j in range(tail_length):
        v = f"t{j}"
        vs.append(v)
        es.append([prev, v])
        prev = v
    return FiniteGraph(vs, es)


def sun_graph(cycle_length: int, rays: list[tuple[int, int]]) -> FiniteGraph:
    """Cycle with pendant segments: rays is a list of (cycle index, length)."""
    g = cycle(cycle_length)
    vs = list(g.vertices)
    es = [list(e) for e in g.edges]
    for r, (idx, L) in enumerate(rays):
        prev = f"c{idx}"
        for j in range(L):
            v = f"r{r}_{j}"
            vs.append(v)
            es.append([prev, v])
            prev = v
    return FiniteGraph(vs, es)


def flower_graph(cycle_lengths: list[int], segment_lengths: list[int]) -> FiniteGraph:
    """Cycles and segments all glued at a central vertex "c"."""
    vs = ["c"]
    es: list[list[str]] = []
    for i, L in enumerate(cycle_lengths):
        if L < 3:
            raise ValueError("petal cycles need length >= 3")
        prev = "c"
        for j in range(L - 1):
            v = f"q{i}_{j}"
            vs.append(v)
            es.append([prev, v])
            prev = v
        es.append([prev, "c"])
    for i, L in enumerate(segment_lengths):
        prev = "c"
        for j in range(L):
            v = f"s{i}_{j}"
            vs.append(v)
            es.append([prev, v])
            prev = v
    return FiniteGraph(vs, es)


def pulsar_graph(
    m: int, segment_length: int, arc_length: int, pendants0: list[int], pendants1: list[int]
) -> FiniteGraph:
    """Generalised theta plus pendant segments at the two hubs."""
    g = theta_graph(m, segment_length, arc_length)
    vs = list(g.vertices)
    es = [list(e) for e in g.edges]
    for side, lengths in ((0, pendants0), (1, pendants1)):
        for i, L in enumerate(lengths):
            prev = f"h{side}"
            for j in range(L):
                v = f"w{side}_{i}_{j}"
                vs.append(v)
                es.append([prev, v])
                prev = v
    return FiniteGraph(vs, es)


def disjoint_union(*graphs: FiniteGraph) -> FiniteGraph:
    """Disjoint union with vertices prefixed g0., g1., ... to avoid clashes."""
    vs: list[str] = []
    es: list[list[str]] = []
    for i, g in enumerate(graphs):
        vs.extend(f"g{i}.{v}" for v in g.vertices)
        es.extend([f"g{i}.{u}", f"g{i}.{v}"] for u, v in g.edges)
    return FiniteGraph(vs, es)


def double_triangle(path_length: int = 2) -> FiniteGraph:
    """Two triangles joined by a path between them (one junction on each)."""
    vs = ["a0", "a1", "a2", "b0", "b1", "b2"]
    es = [["a0", "a1"], ["a1", "a2"], ["a2", "a0"],
          ["b0", "b1"], ["b1", "b2"], ["b2", "b0"]]
    prev = "a0"
    for j in range(path_length - 1):
        v = f"p{j}"
        vs.append(v)
        es.append([prev, v])
        prev = v
    es.append([prev, "b0"])
    return FiniteGraph(vs, es)

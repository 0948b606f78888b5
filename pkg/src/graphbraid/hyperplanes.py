"""Hyperplanes of configuration cube complexes.

Two 1-cubes are dual to the same hyperplane exactly when they move a
particle along the same graph edge e and their stationary particles lie in
the same component of the (n-1)-particle complex of the graph with both
endpoints of e removed.  Since components of that complex are indexed by
how the n-1 spectators distribute over the components of the cut-down
graph, the partition is computed from spectator signatures; transitive
closure of opposite-edges-in-a-square is kept as an independent oracle and
the two are cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import (
    CubeComplex,
    build_uc,
    closed_complement_components,
    hyperplane_key_of_direction,
    spectator_signature,
)
from .graphs import Edge, FiniteGraph, InternalCheckError


@dataclass(frozen=True)
class Hyperplane:
    label: Edge
    signature: tuple[int, ...]  # spectator partition over components of g minus label
    dual_edges: tuple[int, ...]  # indices into cc.cubes[1]
    lower_side: tuple[int, ...]  # 0-cubes containing the earlier endpoint of label
    upper_side: tuple[int, ...]

    def __str__(self):
        u, v = self.label
        return f"H[{u}-{v};{','.join(map(str, self.signature))}]"


def _partition(cc: CubeComplex) -> tuple[list[Hyperplane], list[int]]:
    if len(cc.cubes) < 2:
        raise ValueError("complex must be built to dimension >= 1")
    g = cc.graph
    comp_masks: dict[Edge, list[int]] = {}
    groups: dict[tuple, list[int]] = {}
    for idx, (base, moving) in enumerate(cc.cubes[1]):
        lab = g.edges[moving[0]]
        if lab not in comp_masks:
            comp_masks[lab] = closed_complement_components(g, lab)
        key = (lab, spectator_signature(base, comp_masks[lab]))
        groups.setdefault(key, []).append(idx)

    hyps: list[Hyperplane] = []
    edge_to_hyp = [-1] * len(cc.cubes[1])
    zero = cc.index[0]
    for key in sorted(
        groups, key=lambda k: (g.position(k[0][0]), g.position(k[0][1]), k[1])
    ):
        lab, sig = key
        duals = tuple(groups[key])
        bu = 1 << g.position(lab[0])
        bv = 1 << g.position(lab[1])
        lower = tuple(sorted(zero[(cc.cubes[1][i][0] | bu, ())] for i in duals))
        upper = tuple(sorted(zero[(cc.cubes[1][i][0] | bv, ())] for i in duals))
        h = Hyperplane(lab, sig, duals, lower, upper)
        for i in duals:
            edge_to_hyp[i] = len(hyps)
        hyps.append(h)
    return hyps, edge_to_hyp


def hyperplanes(cc: CubeComplex) -> list[Hyperplane]:
    """All hyperplanes, via the label + spectator-component criterion."""
    return _partition(cc)[0]


def hyperplanes_by_propagation(cc: CubeComplex) -> list[tuple[int, ...]]:
    """Independent oracle: partition the 1-cubes by transitive closure of
    "opposite edges of a common square", and cross-validate against
    hyperplanes().  Returns the partition as sorted tuples of 1-cube
    indices.  Requires the complex to hold its squares (built_dim >= 2
    whenever n >= 2)."""
    if cc.n >= 2 and cc.built_dim < 2:
        raise ValueError("complex must be built to dimension >= 2")
    n1 = len(cc.cubes[1]) if len(cc.cubes) > 1 else 0
    parent = list(range(n1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    one = cc.index[1] if n1 else {}
    if len(cc.cubes) > 2:
        for base, moving in cc.cubes[2]:
            e1, e2 = moving
            for keep, other in ((e1, e2), (e2, e1)):
                u, v = cc.graph.edges[other]
                bu = 1 << cc.graph.position(u)
                bv = 1 << cc.graph.position(v)
                union(one[(base | bu, (keep,))], one[(base | bv, (keep,))])

    classes: dict[int, list[int]] = {}
    for i in range(n1):
        classes.setdefault(find(i), []).append(i)
    result = sorted(tuple(v) for v in classes.values())

    keyed = sorted(h.dual_edges for h in hyperplanes(cc))
    if result != keyed:
        raise InternalCheckError(
            "square propagation disagrees with the component criterion"
        )
    return result


def expected_hyperplane_count(g: FiniteGraph, n: int, e) -> int:
    """Number of hyperplanes labelled e that UC_n(g) must have: the number
    of capacity-feasible distributions of the n-1 spectator particles over
    the components of g with e's endpoints removed."""
    caps = [m.bit_count() for m in closed_complement_components(g, e)]
    return count_capped_partitions(n - 1, caps)


def count_capped_partitions(total: int, caps: list[int]) -> int:
    """Ways to split `total` identical particles into bins with the given
    capacities."""
    if total < 0:
        return 0
    ways = [1] + [0] * total
    for cap in caps:
        nxt = [0] * (total + 1)
        for have in range(total + 1):
            if ways[have]:
                for take in range(0, min(cap, total - have) + 1):
                    nxt[have + take] += ways[have]
        ways = nxt
    return ways[total]


# -- combinatorial hyperplanes (the two sides as subcomplexes) ---------------


def side_subcomplex(cc: CubeComplex, hyp: Hyperplane, side: str) -> list[list]:
    """Cubes of the combinatorial hyperplane on one side ("lower"/"upper"):
    faces of the hyperplane's carrier with the moving particle parked at
    that endpoint of the label edge.  Returned per dimension."""
    g = cc.graph
    if side not in ("lower", "upper"):
        raise ValueError("side must be 'lower' or 'upper'")
    endpoint = hyp.label[0] if side == "lower" else hyp.label[1]
    bit = 1 << g.position(endpoint)
    eidx = g.edges.index(hyp.label)
    comp_masks = closed_complement_components(g, hyp.label)
    out: list[set] = [set() for _ in range(len(cc.cubes))]
    for k, level in enumerate(cc.cubes):
        if k == 0:
            continue
        for base, moving in level:
            if eidx not in moving:
                continue
            key = hyperplane_key_of_direction(cc, (base, moving), eidx, comp_masks)
            if key != (hyp.label, hyp.signature):
                continue
            rest = tuple(f for f in moving if f != eidx)
            out[k - 1].add((base | bit, rest))
    return [sorted(level) for level in out]


def verify_side_component(cc: CubeComplex, hyp: Hyperplane, side: str) -> None:
    """Check that a combinatorial hyperplane, with its parked particle
    forgotten, is exactly one component of UC_{n-1} of the graph with the
    label's endpoints removed.  Raises InternalCheckError otherwise."""
    if not cc.complete:
        raise ValueError("verification needs the fully built complex")
    g = cc.graph
    u, v = hyp.label
    small = build_uc(
        g.induced_subgraph(w for w in g.vertices if w not in (u, v)), cc.n - 1
    ) if cc.n >= 2 else None
    side_cubes = side_subcomplex(cc, hyp, side)
    endpoint = u if side == "lower" else v
    bit = 1 << g.position(endpoint)
    if small is None:
        # n == 1: the side is a single configuration {endpoint}
        flat = [c for level in side_cubes for c in level]
        if flat != [(bit, ())]:
            raise InternalCheckError("side of a 1-particle hyperplane malformed")
        return

    sg = small.graph
    # translate cubes of the side into cubes of the small complex
    translated: list[set] = [set() for _ in small.cubes]
    for k, level in enumerate(side_cubes):
        for base, moving in level:
            mask = 0
            for b in range(len(g.vertices)):
                if base & (1 << b) and (1 << b) != bit:
                    mask |= 1 << sg.position(g.vertices[b])
            idxs = tuple(
                sorted(sg.edges.index(g.edges[f]) for f in moving)
            )
            if k >= len(small.cubes) or (mask, idxs) not in small.index[k]:
                raise InternalCheckError("side cube missing from the small complex")
            translated[k].add((mask, idxs))

    # the image must be one whole component of the small complex
    comps = small.components()
    root_zero = sorted(translated[0])
    match: Optional[int] = None
    for ci, comp in enumerate(comps):
        comp_cubes = {small.cubes[0][i] for i in comp.zero_cubes}
        if comp_cubes == set(root_zero):
            match = ci
            break
    if match is None:
        raise InternalCheckError("side vertices are not a component of the small complex")
    # higher cubes: everything in the component must be hit
    comp_zero = set(comps[match].zero_cubes)
    for k in range(1, len(small.cubes)):
        expected = set()
        for cube in small.cubes[k]:
            corner = cube[0]
            for f in cube[1]:
                a, _ = sg.edges[f]
                corner |= 1 << sg.position(a)
            if small.index[0][(corner, ())] in comp_zero:
                expected.add(cube)
        if expected != translated[k]:
            raise InternalCheckError("side subcomplex misses cubes of the component")


# -- specialness -------------------------------------------------------------


@dataclass(frozen=True)
class SpecialnessReport:
    two_sided: bool
    self_intersections: tuple
    direct_self_osculations: tuple
    inter_osculations: tuple

    @property
    def ok(self) -> bool:
        return (
            self.two_sided
            and not self.self_intersections
            and not self.direct_self_osculations
            and not self.inter_osculations
        )


def check_special(cc: CubeComplex) -> SpecialnessReport:
    """Scan for the four specialness failures (one-sidedness,
    self-intersection, direct self-osculation, inter-osculation).  On
    complexes of this construction all four lists come back empty; the scan
    is a real verification, not an assumption."""
    if cc.n >= 2 and cc.built_dim < 2:
        raise ValueError("complex must be built to dimension >= 2")
    g = cc.graph
    hyps, edge_to_hyp = _partition(cc)
    one_index = cc.index[1] if len(cc.cubes) > 1 else {}

    two_sided = True
    self_intersections = []
    crossings: set[tuple[int, int]] = set()
    if len(cc.cubes) > 2:
        for base, moving in cc.cubes[2]:
            e1, e2 = moving
            sides = {}
            for keep, other in ((e1, e2), (e2, e1)):
                u, v = g.edges[other]
                bu = 1 << g.position(u)
                bv = 1 << g.position(v)
                a = edge_to_hyp[one_index[(base | bu, (keep,))]]
                b = edge_to_hyp[one_index[(base | bv, (keep,))]]
                if a != b:
                    # opposite edges of a square must be parallel
                    two_sided = False
                sides[keep] = a
            h1, h2 = sides[e1], sides[e2]
            if h1 == h2:
                self_intersections.append((hyps[h1], (base, moving)))
            else:
                crossings.add((min(h1, h2), max(h1, h2)))

    # orientation consistency: a configuration may carry at most one dual
    # edge of a given hyperplane (otherwise the co-orientation by occupied
    # endpoint would be ambiguous)
    incident: dict[int, list[tuple[int, int]]] = {}
    for i, (base, moving) in enumerate(cc.cubes[1] if len(cc.cubes) > 1 else []):
        u, v = g.edges[moving[0]]
        a = cc.index[0][(base | (1 << g.position(u)), ())]
        b = cc.index[0][(base | (1 << g.position(v)), ())]
        incident.setdefault(a, []).append((i, edge_to_hyp[i]))
        incident.setdefault(b, []).append((i, edge_to_hyp[i]))

    direct_self_osculations = []
    inter_pairs: dict[tuple[int, int], tuple] = {}
    for zero, edges_here in incident.items():
        for x in range(len(edges_here)):
            for y in range(x + 1, len(edges_here)):
                (i1, h1), (i2, h2) = edges_here[x], edges_here[y]
                if h1 == h2:
                    direct_self_osculations.append((hyps[h1], zero))
                    continue
                lab1 = g.edges[cc.cubes[1][i1][1][0]]
                lab2 = g.edges[cc.cubes[1][i2][1][0]]
                if set(lab1) & set(lab2):
                    continue  # cannot span a square, cannot cross either
                if not _edges_span_square(cc, zero, i1, i2):
                    pair = (min(h1, h2), max(h1, h2))
                    inter_pairs.setdefault(pair, (hyps[pair[0]], hyps[pair[1]], zero))

    inter_osculations = [
        witness for pair, witness in sorted(inter_pairs.items()) if pair in crossings
    ]
    return SpecialnessReport(
        two_sided,
        tuple(self_intersections),
        tuple(direct_self_osculations),
        tuple(inter_osculations),
    )


def _edges_span_square(cc: CubeComplex, zero: int, i1: int, i2: int) -> bool:
    if len(cc.cubes) <= 2:
        return False
    g = cc.graph
    config = cc.cubes[0][zero][0]
    base = config
    moving = []
    for i in (i1, i2):
        eidx = cc.cubes[1][i][1][0]
        u, v = g.edges[eidx]
        occupied = (
            1 << g.position(u)
            if config & (1 << g.position(u))
            else 1 << g.position(v)
        )
        base &= ~occupied
        moving.append(eidx)
    moving.sort()
    return (base, tuple(moving)) in cc.index[2]

"""Discretised configuration spaces of graphs as explicit cube complexes.

A 0-cube is an n-element set of vertices (a configuration of n unlabelled
particles).  A k-cube is a pair (base, moving): n-k stationary particles
plus k particles sliding along k pairwise-disjoint closed edges.  Faces fix
one sliding particle at either endpoint of its edge.

Configurations are stored as bitmasks over the graph's vertex order, moving
sets as sorted tuples of edge indices; cube lists are sorted by
(base vertex indices, moving edge indices), so every complex built from the
same graph/n is bit-for-bit identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Edge, FiniteGraph


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


Cube = tuple[int, tuple[int, ...]]  # (base bitmask, moving edge indices)


class CubeComplex:
    """The cube complex of n unlabelled particles on a graph (or a
    subcomplex of it, e.g. after cutting along hyperplanes)."""

    def __init__(
        self,
        graph: FiniteGraph,
        n: int,
        cubes: list[list[Cube]],
        built_dim: int,
        complete: bool,
    ):
        self.graph = graph
        self.n = n
        self.cubes = cubes
        self.built_dim = built_dim
        self.complete = complete
        self.edge_masks = [
            (1 << graph.position(u)) | (1 << graph.position(v)) for u, v in graph.edges
        ]
        self.index: list[dict[Cube, int]] = [
            {cube: i for i, cube in enumerate(level)} for level in cubes
        ]
        self._components: Optional[list["ComplexComponent"]] = None

    # -- bookkeeping -------------------------------------------------------

    def dim_counts(self) -> list[int]:
        return [len(level) for level in self.cubes]

    def top_dim(self) -> int:
        for k in range(len(self.cubes) - 1, -1, -1):
            if self.cubes[k]:
                return k
        return 0

    def config_ids(self, mask: int) -> tuple[str, ...]:
        return tuple(self.graph.vertices[b] for b in _mask_bits(mask))

    def cube_key_by_ids(self, cube: Cube):
        base, moving = cube
        return (
            self.config_ids(base),
            tuple(self.graph.edges[e] for e in moving),
        )

    def faces(self, k: int, cube: Cube) -> list[tuple[Cube, Cube]]:
        """For each moving edge (in ascending label order) the pair of
        (lower-endpoint face, upper-endpoint face)."""
        base, moving = cube
        out = []
        for i, eidx in enumerate(moving):
            u, v = self.graph.edges[eidx]
            rest = moving[:i] + moving[i + 1 :]
            bu = 1 << self.graph.position(u)
            bv = 1 << self.graph.position(v)
            out.append(((base | bu, rest), (base | bv, rest)))
        return out

    def skeleton(self) -> list[tuple[int, int, int]]:
        """1-skeleton as (zero-cube index, zero-cube index, edge label index)
        triples, in 1-cube order."""
        if len(self.cubes) < 2:
            return []
        zero = self.index[0]
        out = []
        for base, moving in self.cubes[1]:
            (fu, fv) = self.faces(1, (base, moving))[0]
            out.append((zero[fu], zero[fv], moving[0]))
        return out

    # -- components ----------------------------------------------------------

    def components(self) -> list["ComplexComponent"]:
        if self._components is None:
            self._components = _compute_components(self)
        return self._components


@dataclass(frozen=True)
class ComplexComponent:
    signature: tuple[int, ...]  # particles per graph component
    zero_cubes: tuple[int, ...]  # indices into cc.cubes[0]
    root: int


def _component_masks(g: FiniteGraph) -> list[int]:
    masks = []
    for comp in g.components():
        m = 0
        for v in comp:
            m |= 1 << g.position(v)
        masks.append(m)
    return masks


def _compute_components(cc: CubeComplex) -> list[ComplexComponent]:
    nzero = len(cc.cubes[0])
    parent = list(range(nzero))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in cc.skeleton():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    comp_masks = _component_masks(cc.graph)
    groups: dict[int, list[int]] = {}
    for i in range(nzero):
        groups.setdefault(find(i), []).append(i)
    out = []
    for root in sorted(groups):
        mask = cc.cubes[0][root][0]
        sig = tuple((mask & cm).bit_count() for cm in comp_masks)
        out.append(ComplexComponent(sig, tuple(groups[root]), root))
    return out


# -- construction ---------------------------------------------------------


def _disjoint_edge_tuples(edge_masks: list[int], k: int) -> list[tuple[tuple[int, ...], int]]:
    res: list[tuple[tuple[int, ...], int]] = []
    E = len(edge_masks)

    def rec(start: int, chosen: list[int], used: int):
        if len(chosen) == k:
            res.append((tuple(chosen), used))
            return
        need = k - len(chosen)
        for i in range(start, E - need + 1):
            m = edge_masks[i]
            if m & used:
                continue
            chosen.append(i)
            rec(i + 1, chosen, used | m)
            chosen.pop()

    rec(0, [], 0)
    return res


def _has_cube_of_dim(g: FiniteGraph, n: int, k: int) -> bool:
    """Early-exit search: does UC_n(g) contain any k-cube?"""
    V = len(g.vertices)
    if k > n or V - 2 * k < n - k:
        return False
    edge_masks = [
        (1 << g.position(u)) | (1 << g.position(v)) for u, v in g.edges
    ]

    def rec(start: int, depth: int, used: int) -> bool:
        if depth == k:
            return True
        for i in range(start, len(edge_masks)):
            if edge_masks[i] & used:
                continue
            if rec(i + 1, depth + 1, used | edge_masks[i]):
                return True
        return False

    return rec(0, 0, 0)


def build_uc(g: FiniteGraph, n: int, max_dim: Optional[int] = None) -> CubeComplex:
    """The cube complex of n unordered particles on g, built through
    dimension min(n, max_dim)."""
    V = len(g.vertices)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > V:
        raise ValueError(f"n exceeds vertex count ({n} > {V})")
    built_dim = n if max_dim is None else max(0, min(max_dim, n))
    edge_masks = [
        (1 << g.position(u)) | (1 << g.position(v)) for u, v in g.edges
    ]

    cubes: list[list[Cube]] = []
    zero = [
        (sum(1 << i for i in combo), ())
        for combo in itertools.combinations(range(V), n)
    ]
    cubes.append(zero)  # combinations() already emits lexicographic order

    for k in range(1, built_dim + 1):
        level: list[Cube] = []
        for moving, used in _disjoint_edge_tuples(edge_masks, k):
            free = [i for i in range(V) if not (1 << i) & used]
            if len(free) < n - k:
                continue
            for combo in itertools.combinations(free, n - k):
                level.append((sum(1 << i for i in combo), moving))
        level.sort(key=lambda c: (_mask_bits(c[0]), c[1]))
        cubes.append(level)

    complete = built_dim >= n or not _has_cube_of_dim(g, n, built_dim + 1)
    return CubeComplex(g, n, cubes, built_dim, complete)


def euler_characteristic(cc: CubeComplex) -> int:
    if not cc.complete:
        raise ValueError(
            "complex was built with a dimension cap below its top dimension"
        )
    return sum((-1) ** k * len(level) for k, level in enumerate(cc.cubes))


def components(cc: CubeComplex) -> list[ComplexComponent]:
    return cc.components()


def component_subcomplex(cc: CubeComplex, comp: ComplexComponent) -> CubeComplex:
    """The full subcomplex on one connected component."""
    zero_set = set(comp.zero_cubes)
    keep: list[list[Cube]] = []
    zero_index = cc.index[0]
    for k, level in enumerate(cc.cubes):
        if k == 0:
            keep.append([cc.cubes[0][i] for i in sorted(zero_set)])
            continue
        kept = []
        for base, moving in level:
            # a cube lies in the component of any of its corners
            corner = base
            for eidx in moving:
                u, _ = cc.graph.edges[eidx]
                corner |= 1 << cc.graph.position(u)
            if zero_index[(corner, ())] in zero_set:
                kept.append((base, moving))
        keep.append(kept)
    return CubeComplex(cc.graph, cc.n, keep, cc.built_dim, cc.complete)


# -- the occupied/empty involution ------------------------------------------


@dataclass(frozen=True)
class ComplexIsomorphism:
    source: CubeComplex
    target: CubeComplex
    cube_maps: tuple[dict, ...]  # per dimension: source cube -> target cube


def complement_isomorphism(g: FiniteGraph, n: int) -> ComplexIsomorphism:
    """The label-preserving isomorphism UC_n(g) -> UC_{|V|-n}(g) that swaps
    occupied and free vertices; every cube is mapped and the bijection and
    face-compatibility are verified."""
    V = len(g.vertices)
    if not 1 <= n <= V - 1:
        raise ValueError("need 1 <= n <= |V| - 1")
    src = build_uc(g, n)
    dst = build_uc(g, V - n)
    full = (1 << V) - 1
    maps: list[dict] = []
    for k, level in enumerate(src.cubes):
        m: dict[Cube, Cube] = {}
        if k >= len(dst.cubes):
            if level:
                raise RuntimeError("complement image dimension missing")
            maps.append(m)
            continue
        for base, moving in level:
            ends = 0
            for eidx in moving:
                ends |= src.edge_masks[eidx]
            image = (full & ~(base | ends), moving)
            if image not in dst.index[k]:
                raise RuntimeError("complement image is not a cube")
            m[(base, moving)] = image
        if len(set(m.values())) != len(m) or len(m) != len(dst.cubes[k]):
            raise RuntimeError("complement map is not a bijection")
        maps.append(m)
    # face compatibility: the u-face maps to the v-face of the image
    for k in range(1, len(src.cubes)):
        for cube in src.cubes[k]:
            img = maps[k][cube]
            for (fu, fv), (gu, gv) in zip(
                src.faces(k, cube), dst.faces(k, img)
            ):
                if maps[k - 1][fu] != gv or maps[k - 1][fv] != gu:
                    raise RuntimeError("complement map does not respect faces")
    return ComplexIsomorphism(src, dst, tuple(maps))


# -- cutting ---------------------------------------------------------------


def closed_complement_components(g: FiniteGraph, e: Sequence[str]) -> list[int]:
    """Vertex masks of the components of g with e's *two endpoints* removed
    (canonical component order)."""
    e = g.normalize_edge(e)
    rest = g.induced_subgraph(v for v in g.vertices if v not in e)
    masks = []
    for comp in rest.components():
        m = 0
        for v in comp:
            m |= 1 << g.position(v)
        masks.append(m)
    return masks


def spectator_signature(mask: int, comp_masks: list[int]) -> tuple[int, ...]:
    return tuple((mask & cm).bit_count() for cm in comp_masks)


def hyperplane_key_of_direction(
    cc: CubeComplex, cube: Cube, eidx: int, comp_masks: list[int]
) -> tuple[Edge, tuple[int, ...]]:
    """Which hyperplane the eidx-direction of the cube is dual to, as its
    (label, spectator signature) key."""
    base, moving = cube
    spect = base
    for f in moving:
        if f == eidx:
            continue
        u, _ = cc.graph.edges[f]
        spect |= 1 << cc.graph.position(u)
    return (cc.graph.edges[eidx], spectator_signature(spect, comp_masks))


def cut_along(cc: CubeComplex, hyperplanes: Iterable) -> CubeComplex:
    """Remove the open carriers of the given hyperplanes: every cube one of
    whose directions is dual to a listed hyperplane is dropped.  The
    hyperplanes must be pairwise disjoint (non-crossing); checked."""
    hyps = list(hyperplanes)
    keys = set()
    for h in hyps:
        keys.add((cc.graph.normalize_edge(h.label), h.signature))
    label_set = {lab for lab, _ in keys}
    comp_masks_by_label = {
        lab: closed_complement_components(cc.graph, lab) for lab in label_set
    }

    # disjointness: distinct labels that can share a square must not have
    # both directions' hyperplanes in the cut set
    if len(cc.cubes) > 2:
        for base, moving in cc.cubes[2]:
            e1, e2 = moving
            lab1, lab2 = cc.graph.edges[e1], cc.graph.edges[e2]
            if lab1 in label_set and lab2 in label_set:
                k1 = hyperplane_key_of_direction(
                    cc, (base, moving), e1, comp_masks_by_label[lab1]
                )
                k2 = hyperplane_key_of_direction(
                    cc, (base, moving), e2, comp_masks_by_label[lab2]
                )
                if k1 in keys and k2 in keys:
                    raise ValueError("hyperplanes are not disjoint (they cross)")

    kept: list[list[Cube]] = []
    for k, level in enumerate(cc.cubes):
        if k == 0:
            kept.append(list(level))
            continue
        out = []
        for base, moving in level:
            drop = False
            for eidx in moving:
                lab = cc.graph.edges[eidx]
                if lab not in label_set:
                    continue
                key = hyperplane_key_of_direction(
                    cc, (base, moving), eidx, comp_masks_by_label[lab]
                )
                if key in keys:
                    drop = True
                    break
            if not drop:
                out.append((base, moving))
        kept.append(out)
    return CubeComplex(cc.graph, cc.n, kept, cc.built_dim, cc.complete)


# -- exports ---------------------------------------------------------------


def complex_to_dot(cc: CubeComplex, name: str = "UC") -> str:
    """1-skeleton as GraphViz, edges labelled by the moved graph edge."""
    lines = [f"graph {name} {{"]
    for mask, _ in cc.cubes[0]:
        ids = ",".join(cc.config_ids(mask))
        lines.append(f'  "{{{ids}}}";')
    for a, b, eidx in cc.skeleton():
        ia = ",".join(cc.config_ids(cc.cubes[0][a][0]))
        ib = ",".join(cc.config_ids(cc.cubes[0][b][0]))
        u, v = cc.graph.edges[eidx]
        lines.append(f'  "{{{ia}}}" -- "{{{ib}}}" [label="{u}-{v}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

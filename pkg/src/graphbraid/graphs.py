"""Finite simple graphs and the combinatorial operations the rest of the
package is built on: open/closed edge removal, subdivision bookkeeping,
shape classification, and a couple of group-theoretic yes/no criteria that
only depend on the graph.

Vertices are strings; edges are unordered pairs of distinct vertices.  All
iteration orders are deterministic: vertices keep their construction order,
edges are normalised to (earlier vertex, later vertex) and sorted.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


Edge = tuple[str, str]


class InternalCheckError(RuntimeError):
    """A cross-validation between two independent computations failed."""


class FiniteGraph:
    """An immutable finite simple graph (no loops, no multi-edges)."""

    __slots__ = ("vertices", "edges", "_pos", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]]):
        vs = tuple(str(v) for v in vertices)
        seen = set()
        for v in vs:
            if v in seen:
                raise ValueError(f"duplicate vertex: {v!r}")
            seen.add(v)
        self.vertices = vs
        pos = {v: i for i, v in enumerate(vs)}
        self._pos = pos
        norm = []
        eseen = set()
        for e in edges:
            u, v = e
            u, v = str(u), str(v)
            if u not in pos:
                raise ValueError(f"edge endpoint not a vertex: {u!r}")
            if v not in pos:
                raise ValueError(f"edge endpoint not a vertex: {v!r}")
            if u == v:
                raise ValueError(f"loop edge not allowed: {u!r}")
            if pos[u] > pos[v]:
                u, v = v, u
            if (u, v) in eseen:
                raise ValueError(f"duplicate edge: ({u!r}, {v!r})")
            eseen.add((u, v))
            norm.append((u, v))
        norm.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        self.edges = tuple(norm)
        adj: dict[str, list[str]] = {v: [] for v in vs}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort(key=pos.__getitem__)
        self._adj = adj

    # -- basic accessors ---------------------------------------------------

    def position(self, v: str) -> int:
        return self._pos[v]

    def has_vertex(self, v: str) -> bool:
        return v in self._pos

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self._adj[v])

    def valence(self, v: str) -> int:
        return len(self._adj[v])

    def normalize_edge(self, e: Sequence[str]) -> Edge:
        u, v = str(e[0]), str(e[1])
        if u not in self._pos or v not in self._pos:
            raise ValueError(f"not an edge of this graph: ({u!r}, {v!r})")
        if self._pos[u] > self._pos[v]:
            u, v = v, u
        if (u, v) not in set(self.edges):
            raise ValueError(f"not an edge of this graph: ({u!r}, {v!r})")
        return (u, v)

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"FiniteGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- components --------------------------------------------------------

    def components(self) -> list[tuple[str, ...]]:
        """Connected components, each a vertex tuple in graph order; the
        component list is ordered by earliest vertex."""
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comp.sort(key=self._pos.__getitem__)
            comps.append(tuple(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced_subgraph(self, keep: Iterable[str]) -> "FiniteGraph":
        keepset = set(keep)
        vs = [v for v in self.vertices if v in keepset]
        es = [e for e in self.edges if e[0] in keepset and e[1] in keepset]
        return FiniteGraph(vs, es)

    # -- removal conventions -----------------------------------------------

    def remove_open_edge(self, e: Sequence[str]) -> "FiniteGraph":
        """Delete the edge but keep both endpoints."""
        e = self.normalize_edge(e)
        return FiniteGraph(self.vertices, [f for f in self.edges if f != e])

    def remove_open_edges(self, es: Iterable[Sequence[str]]) -> "FiniteGraph":
        drop = {self.normalize_edge(e) for e in es}
        return FiniteGraph(self.vertices, [f for f in self.edges if f not in drop])

    def remove_closed_edge(self, e: Sequence[str]) -> "FiniteGraph":
        """Induced subgraph on everything except the edge's two endpoints."""
        e = self.normalize_edge(e)
        return self.induced_subgraph(v for v in self.vertices if v not in e)

    # -- subdivision -------------------------------------------------------

    def subdivide_edges(self, es: Iterable[Sequence[str]], count: int) -> "FiniteGraph":
        """Replace each listed edge {u,v} by a path through `count` fresh
        valence-2 vertices named "<u>|<v>#<i>"."""
        if count < 1:
            raise ValueError("count must be >= 1")
        targets = {self.normalize_edge(e) for e in es}
        vs = list(self.vertices)
        new_edges: list[tuple[str, str]] = []
        for e in self.edges:
            if e not in targets:
                new_edges.append(e)
                continue
            u, v = e
            fresh = [f"{u}|{v}#{i}" for i in range(count)]
            for w in fresh:
                if w in self._pos:
                    raise ValueError(f"fresh vertex id collides: {w!r}")
            vs.extend(fresh)
            chain = [u] + fresh + [v]
            new_edges.extend(zip(chain, chain[1:]))
        return FiniteGraph(vs, new_edges)

    def cycle_rank(self) -> int:
        """First Betti number of the graph: |E| - |V| + #components."""
        return len(self.edges) - len(self.vertices) + len(self.components())


# -- JSON ---------------------------------------------------------------------


def parse_graph(data) -> FiniteGraph:
    """Build a graph from {"vertices": [...], "edges": [[u, v], ...]},
    given as a dict or a JSON string."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    if "vertices" not in data or "edges" not in data:
        raise ValueError('graph JSON needs "vertices" and "edges" keys')
    edges = data["edges"]
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"edge must be a pair: {e!r}")
    return FiniteGraph(data["vertices"], edges)


def graph_to_json(g: FiniteGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def graph_to_dot(g: FiniteGraph, name: str = "G") -> str:
    """GraphViz export; vertices of valence >= 3 are drawn highlighted."""
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        if g.valence(v) >= 3:
            lines.append(f'  "{v}" [shape=box, style=filled, fillcolor=lightgray];')
        else:
            lines.append(f'  "{v}";')
    for u, v in g.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- branches, cycles, subdivision conditions ----------------------------------


def essential_vertices(g: FiniteGraph) -> list[str]:
    """Vertices of valence != 2 (junctions, leaves and isolated points)."""
    return [v for v in g.vertices if g.valence(v) != 2]


def branches(g: FiniteGraph) -> list[tuple[str, ...]]:
    """Topological branches: maximal paths whose interior vertices all have
    valence 2.  Open branches run between essential vertices (possibly the
    same one); components that are bare cycles appear as closed walks.
    Each branch is reported once, as a vertex path."""
    ess = set(essential_vertices(g))
    out: list[tuple[str, ...]] = []
    seen_edge_sets: set[frozenset] = set()

    def walk(a: str, b: str) -> tuple[str, ...]:
        path = [a, b]
        while path[-1] not in ess:
            prev, cur = path[-2], path[-1]
            nxts = [x for x in g.neighbors(cur) if x != prev]
            if not nxts:
                break
            path.append(nxts[0])
            if path[-1] == a and len(path) > 2:
                break
        return tuple(path)

    for v in g.vertices:
        if v not in ess:
            continue
        for w in g.neighbors(v):
            path = walk(v, w)
            key = frozenset(frozenset(p) for p in zip(path, path[1:]))
            if key not in seen_edge_sets:
                seen_edge_sets.add(key)
                out.append(path)
    # components with no essential vertex are bare cycles
    for comp in g.components():
        if not any(x in ess for x in comp) and len(comp) >= 3:
            start = comp[0]
            path = [start, g.neighbors(start)[0]]
            while path[-1] != start:
                prev, cur = path[-2], path[-1]
                nxt = [x for x in g.neighbors(cur) if x != prev][0]
                path.append(nxt)
            out.append(tuple(path))
    return out


def simple_cycles(g: FiniteGraph, max_len: Optional[int] = None) -> list[tuple[str, ...]]:
    """All simple cycles, each as a vertex tuple starting at its
    lowest-position vertex; optionally only those of length <= max_len.
    Sorted by (length, positions)."""
    pos = g.position
    cycles = []
    n = len(g.vertices)
    bound = max_len if max_len is not None else n
    for s in g.vertices:
        # paths s -> ... -> s with every interior vertex after s in order
        stack: list[tuple[str, tuple[str, ...]]] = [(s, (s,))]
        while stack:
            cur, path = stack.pop()
            for nxt in g.neighbors(cur):
                if nxt == s and len(path) >= 3:
                    # canonical direction: second vertex before last vertex
                    if pos(path[1]) < pos(path[-1]):
                        cycles.append(path)
                    continue
                if nxt in path or pos(nxt) < pos(s):
                    continue
                if len(path) + 1 > bound:
                    continue
                stack.append((nxt, path + (nxt,)))
    cycles.sort(key=lambda c: (len(c), tuple(pos(v) for v in c)))
    return cycles


@dataclass(frozen=True)
class SubdivisionViolation:
    kind: str  # "path" or "cycle"
    vertices: tuple[str, ...]
    length: int
    required: int


@dataclass(frozen=True)
class SubdivisionReport:
    ok: bool
    violations: tuple[SubdivisionViolation, ...]


def check_subdivision(g: FiniteGraph, n: int) -> SubdivisionReport:
    """Check the two hypotheses under which the discretised configuration
    space of n particles deformation-retracts onto the topological one:
    every path between distinct vertices of valence != 2 has length >= n-1,
    and every simple cycle has length >= n+1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    viol: list[SubdivisionViolation] = []
    ess = set(essential_vertices(g))
    for br in branches(g):
        if br[0] in ess and br[-1] in ess and br[0] != br[-1]:
            length = len(br) - 1
            if length < n - 1:
                viol.append(SubdivisionViolation("path", br, length, n - 1))
    for cyc in simple_cycles(g, max_len=n):
        viol.append(SubdivisionViolation("cycle", cyc, len(cyc), n + 1))
    return SubdivisionReport(not viol, tuple(viol))


def sufficient_subdivision(g: FiniteGraph, n: int) -> FiniteGraph:
    """Homeomorphic refinement of g satisfying check_subdivision(., n):
    insert n fresh valence-2 vertices into every edge lying on an offending
    branch or short cycle, repeating until the check passes."""
    cur = g
    for _ in range(1 + len(g.vertices) + len(g.edges)):
        report = check_subdivision(cur, n)
        if report.ok:
            return cur
        offenders: list[Edge] = []
        seen = set()
        for v in report.violations:
            path = v.vertices if v.kind == "path" else v.vertices + (v.vertices[0],)
            for a, b in zip(path, path[1:]):
                e = cur.normalize_edge((a, b))
                if e not in seen:
                    seen.add(e)
                    offenders.append(e)
        cur = cur.subdivide_edges(offenders, n)
    raise RuntimeError("subdivision did not stabilise")  # pragma: no cover


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class GraphClass:
    tag: str
    params: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)

    def __str__(self):
        if self.params:
            inner = ",".join(str(v) for _, v in sorted(self.params.items()))
            return f"{self.tag}({inner})"
        return self.tag


def _path_order(g: FiniteGraph, comp: tuple[str, ...]) -> Optional[list[str]]:
    """Vertex order of a path component, or None if it is not a path."""
    sub = g.induced_subgraph(comp)
    if len(comp) == 1:
        return [comp[0]]
    degs = [sub.valence(v) for v in comp]
    if len(sub.edges) != len(comp) - 1 or max(degs) > 2:
        return None
    ends = [v for v in comp if sub.valence(v) == 1]
    if len(ends) != 2:
        return None
    start = min(ends, key=g.position)
    order = [start]
    while len(order) < len(comp):
        nxt = [x for x in sub.neighbors(order[-1]) if len(order) < 2 or x != order[-2]]
        order.append(nxt[0])
    return order


def _flower_petals(g: FiniteGraph, center: str) -> Optional[tuple[list, list]]:
    """Petal decomposition of g as a flower with the given center, i.e.
    cycles and segments all glued at `center`; None if impossible."""
    rest = [v for v in g.vertices if v != center]
    if not rest:
        return ([], [])
    sub = g.induced_subgraph(rest)
    cycles, segments = [], []
    for comp in sub.components():
        order = _path_order(sub, comp)
        if order is None:
            return None
        attach = [v for v in order if g.has_edge(center, v)]
        interior = order[1:-1]
        if any(v in interior for v in attach):
            return None
        if len(order) == 1:
            if attach != [order[0]]:
                return None
            segments.append([center] + order)
        elif len(attach) == 2:
            if set(attach) != {order[0], order[-1]}:
                return None
            cycles.append([center] + order + [center])
        elif len(attach) == 1:
            if attach[0] == order[-1]:
                order = order[::-1]
            elif attach[0] != order[0]:
                return None
            segments.append([center] + order)
        else:
            return None
    return (cycles, segments)


def classify(g: FiniteGraph) -> GraphClass:
    """Sort a graph into the shape families the decomposition calculus knows
    formulas for.  Precedence (first match wins): segment < cycle <
    radial_tree < generalised_theta < flower < sun < pulsar < tree_other <
    other."""
    trivial_witness = {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}
    if not g.vertices or not g.is_connected():
        return GraphClass("other", {}, trivial_witness)

    nv, ne = len(g.vertices), len(g.edges)
    valences = [g.valence(v) for v in g.vertices]

    # segment
    if ne == nv - 1 and (nv == 1 or max(valences) <= 2):
        order = _path_order(g, g.components()[0])
        if order is not None:
            return GraphClass("segment", {"length": ne}, {"path": order})

    # cycle
    if ne == nv and all(d == 2 for d in valences):
        cyc = simple_cycles(g)[0]
        return GraphClass("cycle", {"length": ne}, {"cycle": list(cyc)})

    ess3 = [v for v in g.vertices if g.valence(v) >= 3]

    # radial tree: a tree with exactly one junction
    if ne == nv - 1 and len(ess3) == 1:
        center = ess3[0]
        petals = _flower_petals(g, center)
        if petals is not None and not petals[0]:
            k = g.valence(center)
            return GraphClass(
                "radial_tree", {"k": k}, {"center": center, "segments": petals[1]}
            )

    # generalised theta / pulsar share the two-junction analysis
    if len(ess3) == 2:
        u, w = sorted(ess3, key=g.position)
        sub = g.induced_subgraph([v for v in g.vertices if v not in (u, w)])
        arcs, pend_u, pend_w = [], [], []
        ok = True
        for comp in sub.components():
            order = _path_order(sub, comp)
            if order is None:
                ok = False
                break
            a, b = order[0], order[-1]
            interior = order[1:-1]
            if any(g.has_edge(u, v) or g.has_edge(w, v) for v in interior):
                ok = False
                break
            eu = [v for v in (a, b) if g.has_edge(u, v)]
            ew = [v for v in (a, b) if g.has_edge(w, v)]
            if len(order) == 1:
                if eu and ew:
                    arcs.append([u] + order + [w])
                elif eu:
                    pend_u.append([u] + order)
                elif ew:
                    pend_w.append([w] + order)
                else:
                    ok = False
                    break
            elif len(eu) == 1 and len(ew) == 1 and eu[0] != ew[0]:
                if eu[0] != a:
                    order = order[::-1]
                arcs.append([u] + order + [w])
            elif len(eu) == 1 and not ew:
                if eu[0] != a:
                    order = order[::-1]
                pend_u.append([u] + order)
            elif len(ew) == 1 and not eu:
                if ew[0] != a:
                    order = order[::-1]
                pend_w.append([w] + order)
            else:
                ok = False
                break
        if ok and g.has_edge(u, w):
            arcs.append([u, w])
        if ok and arcs:
            if not pend_u and not pend_w and len(arcs) >= 3:
                return GraphClass(
                    "generalised_theta",
                    {"m": len(arcs) - 1},
                    {"ends": [u, w], "arcs": arcs},
                )
            theta_or_pulsar = (len(arcs) - 1, arcs, pend_u, pend_w, u, w)
        else:
            theta_or_pulsar = None
    else:
        theta_or_pulsar = None

    # flower
    for c in g.vertices:
        petals = _flower_petals(g, c)
        if petals is not None:
            cycles, segments = petals
            return GraphClass(
                "flower",
                {"cycles": len(cycles), "segments": len(segments)},
                {"center": c, "cycles": cycles, "segments": segments},
            )

    # sun: unique cycle with pendant segments hanging off it
    if ne == nv:
        core = set(g.vertices)
        changed = True
        while changed:
            changed = False
            sub = g.induced_subgraph(core)
            for v in list(core):
                if sub.valence(v) <= 1:
                    core.discard(v)
                    changed = True
        cyc_vs = sorted(core, key=g.position)
        sub = g.induced_subgraph(cyc_vs)
        if cyc_vs and all(sub.valence(v) == 2 for v in cyc_vs):
            cyc = simple_cycles(sub)[0]
            rest = g.induced_subgraph([v for v in g.vertices if v not in core])
            rays, ok = [], True
            for comp in rest.components():
                order = _path_order(rest, comp)
                if order is None:
                    ok = False
                    break
                hooks = [
                    (p, v)
                    for p in comp
                    for v in cyc_vs
                    if g.has_edge(p, v)
                ]
                if len(hooks) != 1 or hooks[0][0] not in (order[0], order[-1]):
                    ok = False
                    break
                p, v = hooks[0]
                if p != order[0]:
                    order = order[::-1]
                rays.append([v] + order)
            if ok:
                return GraphClass(
                    "sun", {"rays": len(rays)}, {"cycle": list(cyc), "rays": rays}
                )

    # pulsar
    if theta_or_pulsar is not None:
        m, arcs, pend_u, pend_w, u, w = theta_or_pulsar
        return GraphClass(
            "pulsar",
            {"m": m, "pendants": len(pend_u) + len(pend_w)},
            {"ends": [u, w], "arcs": arcs, "pendants": pend_u + pend_w},
        )

    if ne == nv - 1:
        return GraphClass("tree_other", {}, trivial_witness)
    return GraphClass("other", {}, trivial_witness)


def rebuild_from_class(gc: GraphClass) -> FiniteGraph:
    """Reassemble a graph from a classification witness (used to check the
    witness really is a gluing description of the input)."""
    w = gc.witness
    vs: list[str] = []
    es: list[tuple[str, str]] = []

    def add_path(path):
        for v in path:
            if v not in vs:
                vs.append(v)
        for a, b in zip(path, path[1:]):
            if (a, b) not in es and (b, a) not in es:
                es.append((a, b))

    if gc.tag == "segment":
        add_path(w["path"])
    elif gc.tag == "cycle":
        add_path(list(w["cycle"]) + [w["cycle"][0]])
    elif gc.tag == "radial_tree":
        vs.append(w["center"])
        for seg in w["segments"]:
            add_path(seg)
    elif gc.tag == "generalised_theta":
        for arc in w["arcs"]:
            add_path(arc)
    elif gc.tag == "flower":
        vs.append(w["center"])
        for cyc in w["cycles"]:
            add_path(cyc)
        for seg in w["segments"]:
            add_path(seg)
    elif gc.tag == "sun":
        add_path(list(w["cycle"]) + [w["cycle"][0]])
        for ray in w["rays"]:
            add_path(ray)
    elif gc.tag == "pulsar":
        for arc in w["arcs"]:
            add_path(arc)
        for p in w["pendants"]:
            add_path(p)
    else:
        return FiniteGraph(w["vertices"], w["edges"])
    return FiniteGraph(vs, es)


# -- canonical forms / isomorphism ---------------------------------------------


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sig = [
            (colors[i], tuple(sorted(colors[j] for j in adj[i]))) for i in range(n)
        ]
        order = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: FiniteGraph) -> tuple:
    """A complete isomorphism invariant: the lexicographically smallest edge
    list over all labellings compatible with iterated degree refinement
    (individualisation-refinement with backtracking)."""
    n = len(g.vertices)
    pos = g._pos
    adj = [[pos[w] for w in g.neighbors(v)] for v in g.vertices]

    best: list[Optional[tuple]] = [None]

    def search(colors: list[int]):
        colors = _refine(adj, colors)
        classes: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            classes.setdefault(c, []).append(i)
        nonsingleton = [c for c in sorted(classes) if len(classes[c]) > 1]
        if not nonsingleton:
            perm = [0] * n
            for i, c in enumerate(colors):
                perm[i] = c
            edges = sorted(
                (min(perm[a], perm[b]), max(perm[a], perm[b]))
                for a, b in ((pos[x], pos[y]) for x, y in g.edges)
            )
            cert = (n, tuple(edges))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        target = classes[nonsingleton[0]]
        for i in target:
            branched = list(colors)
            branched[i] = -1  # unique smallest colour
            # re-normalise colour ids
            order = {c: k for k, c in enumerate(sorted(set(branched)))}
            search([order[c] for c in branched])

    if n == 0:
        return (0, ())
    search([0] * n)
    return best[0]  # type: ignore[return-value]


def is_isomorphic(g1: FiniteGraph, g2: FiniteGraph) -> bool:
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    if sorted(g1.valence(v) for v in g1.vertices) != sorted(
        g2.valence(v) for v in g2.vertices
    ):
        return False
    return canonical_form(g1) == canonical_form(g2)


# -- group-theoretic criteria ----------------------------------------------


def triviality_criterion(g: FiniteGraph, n: int, partition: Sequence[int]) -> str:
    """Classify the braid group of the configuration-space component whose
    particle counts per graph component are given: "trivial" or
    "infinite_diameter".  A component contributes noise as soon as it holds a
    particle and a cycle, or two particles and a junction."""
    comps = g.components()
    if len(partition) != len(comps):
        raise ValueError("partition length must match component count")
    if any(p < 0 for p in partition) or sum(partition) != n:
        raise ValueError("partition must be nonnegative and sum to n")
    for comp, p in zip(comps, partition):
        if p > len(comp):
            raise ValueError("partition exceeds component capacity")
        sub = g.induced_subgraph(comp)
        has_cycle = len(sub.edges) >= len(comp)  # connected, so E >= V means a cycle
        has_junction = any(sub.valence(v) >= 3 for v in comp)
        if p >= 1 and has_cycle:
            return "infinite_diameter"
        if p >= 2 and has_junction:
            return "infinite_diameter"
    return "trivial"


@dataclass(frozen=True)
class Z2Witness:
    kind: str
    data: tuple


def z2_witness(g: FiniteGraph, n: int) -> Optional[Z2Witness]:
    """First witness (in canonical order) that the n-particle braid group of
    g contains a free abelian group of rank 2, or None.  The applicable case
    list grows with n: two disjoint cycles (n >= 2); a cycle plus a junction
    off it (n >= 3); two junctions (n >= 4)."""
    if n < 2:
        return None
    cycles = simple_cycles(g)
    for c1, c2 in itertools.combinations(cycles, 2):
        if not set(c1) & set(c2):
            return Z2Witness("disjoint_cycles", (c1, c2))
    if n >= 3:
        juncts = [v for v in g.vertices if g.valence(v) >= 3]
        for c in cycles:
            for v in juncts:
                if v not in c:
                    return Z2Witness("cycle_and_junction", (c, v))
    if n >= 4:
        juncts = [v for v in g.vertices if g.valence(v) >= 3]
        if len(juncts) >= 2:
            return Z2Witness("two_junctions", (juncts[0], juncts[1]))
    return None

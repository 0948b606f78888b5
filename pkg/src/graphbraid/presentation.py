"""Fundamental-group presentations of connected cube complexes.

The presentation is the classical one for a 2-complex: contract a breadth
first spanning tree of the 1-skeleton, keep one generator per remaining
1-cube, and read one relator around the boundary of every square.  Words
are tuples of nonzero integers: +k stands for the k-th generator (1-based),
-k for its inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complexes import CubeComplex
from .homology import smith_normal_form

Word = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __str__(self):
        return presentation_to_text(self)


def free_reduce(word: Word) -> Word:
    out: list[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Word) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _canonical(word: Word) -> Word:
    """Least rotation of the word or its inverse; used only to deduplicate."""
    w = cyclic_reduce(word)
    if not w:
        return w
    inv = tuple(-x for x in reversed(w))
    candidates = [w[i:] + w[:i] for i in range(len(w))]
    candidates += [inv[i:] + inv[:i] for i in range(len(inv))]
    return min(candidates)


def pi1_presentation(cc: CubeComplex) -> Presentation:
    """Presentation of the fundamental group of a connected complex built
    through dimension 2 at least (higher cubes carry no new relations)."""
    if cc.n >= 2 and not cc.complete and cc.built_dim < 2:
        raise ValueError("presentation needs the 2-skeleton")
    comps = cc.components()
    if len(comps) != 1:
        raise ValueError("complex is not connected; present one component")

    zero_count = len(cc.cubes[0])
    skeleton = cc.skeleton()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(zero_count)]
    for idx, (a, b, _lab) in enumerate(skeleton):
        adj[a].append((b, idx))
        adj[b].append((a, idx))

    in_tree = [False] * len(skeleton)
    seen = [False] * zero_count
    seen[0] = True
    queue = deque([0])
    while queue:
        at = queue.popleft()
        for nxt, eidx in adj[at]:
            if not seen[nxt]:
                seen[nxt] = True
                in_tree[eidx] = True
                queue.append(nxt)
    if not all(seen):
        raise ValueError("complex is not connected; present one component")

    gen_of_edge: dict[int, int] = {}
    names = []
    for idx in range(len(skeleton)):
        if not in_tree[idx]:
            gen_of_edge[idx] = len(names) + 1
            names.append(f"x{len(names)}")

    g = cc.graph
    one_index = cc.index[1]
    zero_index = cc.index[0]

    def letter(base_mask: int, eidx: int, start_mask: int) -> int:
        """Signed generator for traversing a 1-cube from the given corner
        (0 when the edge lies in the tree)."""
        cube_idx = one_index[(base_mask, (eidx,))]
        if in_tree[cube_idx]:
            return 0
        u, _v = g.edges[eidx]
        positive = bool(start_mask & (1 << g.position(u)))
        gen = gen_of_edge[cube_idx]
        return gen if positive else -gen

    relators: list[Word] = []
    seen_relators: set[Word] = set()
    if len(cc.cubes) > 2:
        for base, (e1, e2) in cc.cubes[2]:
            u1, v1 = g.edges[e1]
            u2, v2 = g.edges[e2]
            b1u = 1 << g.position(u1)
            b1v = 1 << g.position(v1)
            b2u = 1 << g.position(u2)
            b2v = 1 << g.position(v2)
            corners = [
                base | x | y for x in (b1u, b1v) for y in (b2u, b2v)
            ]
            start = min(corners, key=lambda m: zero_index[(m, ())])
            word = []
            at = start
            for eidx in (e1, e2, e1, e2):
                u, v = g.edges[eidx]
                bu = 1 << g.position(u)
                bv = 1 << g.position(v)
                occupied = bu if at & bu else bv
                word.append(letter(at & ~occupied, eidx, at))
                at = (at & ~occupied) | (bv if occupied == bu else bu)
            if at != start:
                raise AssertionError("square boundary did not close up")
            w = cyclic_reduce(tuple(x for x in word if x))
            if w:
                key = _canonical(w)
                if key not in seen_relators:
                    seen_relators.add(key)
                    relators.append(w)
    return Presentation(tuple(names), tuple(relators))


def tietze_simplify(pres: Presentation, max_passes: int = 30) -> Presentation:
    """Conservative simplification: free/cyclic reduction, removal of empty
    and duplicate relators, elimination of generators that are pinned by a
    length-1 relator or occur exactly once in some short relator."""
    gens = list(pres.generators)
    relators = [cyclic_reduce(w) for w in pres.relators]

    for _ in range(max_passes):
        relators = [w for w in relators if w]
        dedup: dict[Word, Word] = {}
        for w in relators:
            dedup.setdefault(_canonical(w), w)
        relators = list(dedup.values())

        victim = None  # (generator 1-based, replacement word, relator index)
        for ri, w in enumerate(relators):
            counts: dict[int, int] = {}
            for x in w:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for gen, c in counts.items():
                if c == 1 and len(w) <= 12:
                    i = next(k for k, x in enumerate(w) if abs(x) == gen)
                    rest = w[i + 1 :] + w[:i]  # w cyclically = x * rest
                    if w[i] > 0:
                        replacement = tuple(-y for y in reversed(rest))
                    else:
                        replacement = rest
                    victim = (gen, replacement, ri)
                    break
            if victim:
                break
        if victim is None:
            break
        gen, replacement, ri = victim
        del relators[ri]

        def substitute(w: Word) -> Word:
            out: list[int] = []
            for x in w:
                if abs(x) != gen:
                    out.append(x)
                elif x > 0:
                    out.extend(replacement)
                else:
                    out.extend(-y for y in reversed(replacement))
            return cyclic_reduce(tuple(out))

        relators = [substitute(w) for w in relators]
        # renumber: drop the eliminated generator
        remap = {}
        new_names = []
        for k, name in enumerate(gens, start=1):
            if k == gen:
                continue
            remap[k] = len(new_names) + 1
            new_names.append(name)
        gens = new_names
        relators = [
            tuple(remap[x] if x > 0 else -remap[-x] for x in w) for w in relators
        ]
    return Presentation(tuple(gens), tuple(relators))


def abelianization(pres: Presentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, nontrivial invariant factors) of the abelianised group."""
    if not pres.generators:
        return 0, ()
    if not pres.relators:
        return len(pres.generators), ()
    matrix = []
    for w in pres.relators:
        row = [0] * len(pres.generators)
        for x in w:
            row[abs(x) - 1] += 1 if x > 0 else -1
        matrix.append(row)
    factors = smith_normal_form(matrix)
    nonzero = [d for d in factors if d]
    return len(pres.generators) - len(nonzero), tuple(d for d in nonzero if d > 1)


def presentation_to_text(pres: Presentation) -> str:
    """Render as <a, b | abAB>; single letters (inverse = uppercase) when at
    most 26 generators, otherwise the stored names with ^-1."""
    m = len(pres.generators)
    if m == 0:
        return "<1>" if not pres.relators else "< | nontrivial relators on no generators>"
    letters = m <= 26
    if letters:
        alphabet = "abcdefghijklmnopqrstuvwxyz"[:m]
        gen_text = list(alphabet)

        def render(w: Word) -> str:
            return "".join(
                alphabet[x - 1] if x > 0 else alphabet[-x - 1].upper() for x in w
            )

    else:
        gen_text = list(pres.generators)

        def render(w: Word) -> str:
            return ".".join(
                pres.generators[x - 1] if x > 0 else pres.generators[-x - 1] + "^-1"
                for x in w
            )

    left = ", ".join(gen_text)
    if not pres.relators:
        return f"<{left} | >"
    return f"<{left} | {', '.join(render(w) for w in pres.relators)}>"

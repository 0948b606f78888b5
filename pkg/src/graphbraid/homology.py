"""Exact integral homology of cube complexes.

Boundary maps use the standard cubical convention: a k-cube is oriented by
listing its moving edges in ascending label order, and the i-th pair of
opposite faces contributes (-1)^i (upper - lower).  All linear algebra is
over the integers.  Ranks and invariant factors are computed by first
eliminating unit (+-1) pivots on a sparse representation -- which is where
virtually all of a boundary matrix disappears -- and handing whatever
residue is left to a dense Smith normal form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .complexes import CubeComplex
from .graphs import InternalCheckError


class SparseMatrix:
    """Integer matrix stored column-major (each column a {row: value} dict)."""

    __slots__ = ("nrows", "cols")

    def __init__(self, nrows: int, cols: list[dict[int, int]]):
        self.nrows = nrows
        self.cols = cols

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def entries(self):
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                yield i, j, v

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.entries():
            m[i][j] = v
        return m


def boundary_matrix(cc: CubeComplex, k: int) -> SparseMatrix:
    """The k-th boundary map, rows indexed by (k-1)-cubes, columns by k-cubes."""
    if k < 1 or k >= len(cc.cubes):
        raise ValueError(f"no boundary map in degree {k}")
    lower_index = cc.index[k - 1]
    cols = []
    for cube in cc.cubes[k]:
        col: dict[int, int] = {}
        for i, (fu, fv) in enumerate(cc.faces(k, cube)):
            sign = -1 if i % 2 else 1
            # (-1)^i (upper - lower)
            col[lower_index[fv]] = col.get(lower_index[fv], 0) + sign
            col[lower_index[fu]] = col.get(lower_index[fu], 0) - sign
        cols.append({i: v for i, v in col.items() if v})
    return SparseMatrix(len(cc.cubes[k - 1]), cols)


def boundary_matrices(cc: CubeComplex) -> list[SparseMatrix]:
    """All boundary maps of the built part, with d(d(x)) = 0 verified."""
    mats = [boundary_matrix(cc, k) for k in range(1, len(cc.cubes)) if cc.cubes[k]]
    for k in range(1, len(mats)):
        prev, cur = mats[k - 1], mats[k]
        for j, col in enumerate(cur.cols):
            acc: dict[int, int] = {}
            for r, a in col.items():
                for rr, b in prev.cols[r].items():
                    acc[rr] = acc.get(rr, 0) + a * b
            if any(acc.values()):
                raise InternalCheckError(
                    f"boundary of boundary is nonzero on a {k + 1}-cube (column {j})"
                )
    return mats


# -- Smith normal form --------------------------------------------------------


def smith_normal_form(matrix, want_transforms: bool = False):
    """Diagonal invariant factors of an integer matrix (dense, list of rows).

    With want_transforms=True also returns unimodular U (rows x rows) and V
    (cols x cols) with U @ M @ V = D.
    """
    m = [list(row) for row in matrix]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    U = [[int(i == j) for j in range(nr)] for i in range(nr)] if want_transforms else None
    V = [[int(i == j) for j in range(nc)] for i in range(nc)] if want_transforms else None
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, nr):
            row = m[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            if U:
                U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            if V:
                for row in V:
                    row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    q = m[i][t] // p
                    if q:
                        for j in range(t, nc):
                            m[i][j] -= q * m[t][j]
                        if U:
                            for j in range(nr):
                                U[i][j] -= q * U[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        if U:
                            U[t], U[i] = U[i], U[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, nc):
                if m[t][j]:
                    q = m[t][j] // p
                    if q:
                        for i in range(t, nr):
                            m[i][j] -= q * m[i][t]
                        if V:
                            for i in range(nc):
                                V[i][j] -= q * V[i][t]
                    if m[t][j]:
                        for i in range(t, nr):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        if V:
                            for i in range(nc):
                                V[i][t], V[i][j] = V[i][j], V[i][t]
                        dirty = True
                        break
            if dirty:
                continue
            # divisibility: pivot must divide every remaining entry
            p = m[t][t]
            culprit = None
            for i in range(t + 1, nr):
                row = m[i]
                for j in range(t + 1, nc):
                    if row[j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            for j in range(t, nc):
                m[t][j] += m[culprit][j]
            if U:
                for j in range(nr):
                    U[t][j] += U[culprit][j]
        if m[t][t] < 0:
            for j in range(t, nc):
                m[t][j] = -m[t][j]
            if U:
                for j in range(nr):
                    U[t][j] = -U[t][j]
        t += 1
        if t == nr or t == nc:
            break
    factors = tuple(m[i][i] for i in range(min(nr, nc)) if i < t and m[i][i])
    if want_transforms:
        return factors, U, V
    return factors


def rank_and_factors(mat: SparseMatrix) -> tuple[int, tuple[int, ...]]:
    """Rank and invariant factors, via unit-pivot elimination plus a dense
    Smith normal form on the unit-free residue."""
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for i, j, v in mat.entries():
        rows.setdefault(i, {})[j] = v
        colrows.setdefault(j, set()).add(i)

    heap: list[tuple[int, int, int]] = []

    def push_candidates(i: int):
        row = rows.get(i)
        if not row:
            return
        for j, v in row.items():
            if v in (1, -1):
                score = (len(row) - 1) * (len(colrows[j]) - 1)
                heapq.heappush(heap, (score, i, j))

    for i in rows:
        push_candidates(i)

    unit_rank = 0
    while heap:
        score, pi, pj = heapq.heappop(heap)
        row = rows.get(pi)
        if row is None or pj not in row or row[pj] not in (1, -1):
            continue
        fresh = (len(row) - 1) * (len(colrows[pj]) - 1)
        if fresh > score:
            heapq.heappush(heap, (fresh, pi, pj))
            continue
        p = row[pj]
        prow = rows.pop(pi)
        for j in prow:
            colrows[j].discard(pi)
        touched = set()
        for i in list(colrows[pj]):
            target = rows[i]
            factor = target[pj] * p  # divide by +-1 == multiply
            for j, v in prow.items():
                nv = target.get(j, 0) - factor * v
                if nv:
                    target[j] = nv
                    colrows[j].add(i)
                else:
                    target.pop(j, None)
                    colrows[j].discard(i)
            if not target:
                del rows[i]
            else:
                touched.add(i)
        colrows.pop(pj, None)
        unit_rank += 1
        for i in touched:
            push_candidates(i)

    if not rows:
        return unit_rank, (1,) * unit_rank
    live_rows = sorted(rows)
    live_cols = sorted({j for r in rows.values() for j in r})
    cpos = {j: k for k, j in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for a, i in enumerate(live_rows):
        for j, v in rows[i].items():
            dense[a][cpos[j]] = v
    residue = smith_normal_form(dense)
    return unit_rank + len(residue), (1,) * unit_rank + residue


# -- homology profiles --------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]  # factors > 1 of each H_k
    cube_counts: tuple[int, ...]

    def __str__(self):
        parts = []
        for k, b in enumerate(self.betti):
            t = self.torsion[k]
            extra = "".join(f"+Z/{d}" for d in t)
            parts.append(f"b{k}={b}{extra}")
        return ", ".join(parts)


def homology(cc: CubeComplex) -> HomologyProfile:
    """Full integral homology; requires a completely built complex.  The
    alternating sum of Betti numbers is cross-checked against the Euler
    characteristic."""
    if not cc.complete:
        raise ValueError("homology of a dimension-capped build is not defined")
    counts = [len(level) for level in cc.cubes]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    top = len(counts) - 1
    mats = boundary_matrices(cc)
    ranks = [0] * (top + 2)
    factors: list[tuple[int, ...]] = [()] * (top + 2)
    for k, mat in enumerate(mats, start=1):
        ranks[k], factors[k] = rank_and_factors(mat)
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    torsion = tuple(
        tuple(d for d in factors[k + 1] if d > 1) for k in range(top + 1)
    )
    euler = sum((-1) ** k * counts[k] for k in range(top + 1))
    if euler != sum((-1) ** k * b for k, b in enumerate(betti)):
        raise InternalCheckError("Betti numbers disagree with the Euler count")
    return HomologyProfile(betti, torsion, tuple(counts))


def betti_numbers(cc: CubeComplex, up_to: int) -> tuple[int, ...]:
    """Betti numbers b_0..b_{up_to} from a build that holds all cubes
    through dimension up_to + 1 (a dimension-capped build is fine as long
    as the cap is high enough)."""
    if not cc.complete and cc.built_dim < up_to + 1:
        raise ValueError(
            f"betti numbers through degree {up_to} need cubes through "
            f"dimension {up_to + 1}"
        )
    counts = [len(level) for level in cc.cubes]
    ranks = [0] * (up_to + 2)
    for k in range(1, up_to + 2):
        if k < len(counts) and counts[k]:
            ranks[k], _ = rank_and_factors(boundary_matrix(cc, k))
    return tuple(
        (counts[k] if k < len(counts) else 0) - ranks[k] - ranks[k + 1]
        for k in range(up_to + 1)
    )

"""Exact linear algebra over F_q: characteristic polynomials and
incremental first-dependency detection."""
from __future__ import annotations

from .errors import InternalCheckError
from .field import FqField


def charpoly(F: FqField, M) -> tuple:
    """Ascending coefficients of det(X*I - M) for a square matrix of codes.

    Hessenberg reduction by similarity transforms, then the standard
    last-column expansion recurrence; O(d^3) field operations, exact.
    """
    d = len(M)
    H = [list(row) for row in M]
    for row in H:
        if len(row) != d:
            raise ValueError("matrix is not square")
    for j in range(d - 2):
        piv = None
        for i in range(j + 1, d):
            if H[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        pivot_inv = F.inv(H[j + 1][j])
        for i in range(j + 2, d):
            if H[i][j]:
                u = F.mul(H[i][j], pivot_inv)
                nu = F.neg(u)
                row_i, row_p = H[i], H[j + 1]
                for k in range(d):
                    row_i[k] = F.add(row_i[k], F.mul(nu, row_p[k]))
                # similarity compensation: col_{j+1} += u * col_i
                for k in range(d):
                    H[k][j + 1] = F.add(H[k][j + 1], F.mul(u, H[k][i]))

    # p_m = char poly of the leading m x m block, ascending coefficients
    polys = [(1,)]
    for m in range(1, d + 1):
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        neg_diag = F.neg(H[m - 1][m - 1])
        for i, c in enumerate(prev):
            cur[i + 1] = F.add(cur[i + 1], c)
            cur[i] = F.add(cur[i], F.mul(neg_diag, c))
        run = 1  # running product of subdiagonal entries
        for i in range(1, m):
            run = F.mul(run, H[m - i][m - i - 1])
            if run == 0:
                break
            w = F.mul(run, H[m - 1 - i][m - 1])
            if w:
                nw = F.neg(w)
                for k, c in enumerate(polys[m - 1 - i]):
                    if c:
                        cur[k] = F.add(cur[k], F.mul(nw, c))
        polys.append(tuple(cur))
    return polys[d]


class DependencyTracker:
    """Feed equal-length vectors over F_q one at a time; detects the first
    linear dependency.

    update(v_n) returns None while the span keeps growing.  At the first
    dependent vector it returns coefficients (c_0, ..., c_n) with c_n = 1
    and sum c_i v_i = 0.  Rows are kept in echelon form keyed by their
    leading index, so each update is one left-to-right elimination pass.
    """

    def __init__(self, F: FqField):
        self.F = F
        self.pivots = {}  # leading index -> (row, combination over originals)
        self.count = 0

    def update(self, vec):
        F = self.F
        v = list(vec)
        combo = [0] * self.count + [1]
        self.count += 1
        new_pivot = None
        for i in range(len(v)):
            if not v[i]:
                continue
            hit = self.pivots.get(i)
            if hit is None:
                new_pivot = i
                break
            row, rcombo = hit
            c = F.neg(v[i])
            for k in range(i, len(v)):
                rk = row[k]
                if rk:
                    v[k] = F.add(v[k], F.mul(c, rk))
            for k in range(len(rcombo)):
                ck = rcombo[k]
                if ck:
                    combo[k] = F.add(combo[k], F.mul(c, ck))
        if new_pivot is None:
            return combo
        s = F.inv(v[new_pivot])
        if s != 1:
            v = [F.mul(s, x) for x in v]
            combo = [F.mul(s, x) for x in combo]
        self.pivots[new_pivot] = (v, combo)
        return None


def first_dependency(F: FqField, vectors):
    """Coefficients (ascending, top = 1) of the first dependency in an
    iterable of equal-length vectors; raises if the iterable ends first."""
    tracker = DependencyTracker(F)
    for v in vectors:
        combo = tracker.update(v)
        if combo is not None:
            return combo
    raise InternalCheckError("vector stream ended before a dependency appeared")

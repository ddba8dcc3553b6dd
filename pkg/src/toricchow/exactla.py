"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works on Python ints, so nothing overflows or rounds.
Matrices are small immutable row-major tables (:class:`IntMatrix`); the
Smith normal form uses a fixed pivoting rule so repeated runs give
bit-identical transforms.
"""
from __future__ import annotations

import operator
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class NotSaturatedError(ValueError):
    """Raised when a sublattice expected to be saturated is not."""


class IntMatrix:
    """Immutable integer matrix with explicit shape.

    Empty shapes are legal: ``IntMatrix.zeros(0, 3)`` is the zero map
    from Z^3 to Z^0.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence[int]] = (), *, shape: tuple[int, int] | None = None):
        rows = tuple(tuple(_as_int(x) for x in row) for row in data)
        if shape is None:
            ncols = len(rows[0]) if rows else 0
            shape = (len(rows), ncols)
        nrows, ncols = shape
        if nrows < 0 or ncols < 0:
            raise ValueError(f"negative shape {shape}")
        if len(rows) != nrows:
            if rows or nrows and ncols:
                raise ValueError(f"expected {nrows} rows, got {len(rows)}")
            rows = tuple(() for _ in range(nrows))
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
        object.__setattr__(self, "rows", nrows)
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            out[i][i] = e
        return cls(out, shape=(rows, cols))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        return cls([[c[i] for c in columns] for i in range(nrows)], shape=(nrows, len(columns)))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix([self.col(j) for j in range(self.cols)], shape=(self.cols, self.rows))

    def select_rows(self, idx: Sequence[int]) -> IntMatrix:
        return IntMatrix([self._data[i] for i in idx], shape=(len(idx), self.cols))

    def select_cols(self, idx: Sequence[int]) -> IntMatrix:
        return IntMatrix([[r[j] for j in idx] for r in self._data], shape=(self.rows, len(idx)))

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError(f"column mismatch {self.cols} != {other.cols}")
        return IntMatrix(self._data + other._data, shape=(self.rows + other.rows, self.cols))

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError(f"row mismatch {self.rows} != {other.rows}")
        return IntMatrix([a + b for a, b in zip(self._data, other._data)],
                         shape=(self.rows, self.cols + other.cols))

    # arithmetic

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data],
                         shape=(self.rows, other.cols))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-x for x in r] for r in self._data], shape=self.shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_list()!r}, shape={self.shape})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_list()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def _as_int(x) -> int:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    try:
        return operator.index(x)
    except TypeError:
        raise TypeError(f"non-integer matrix entry {x!r}") from None


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == d`` with ``u``, ``v`` unimodular.

    ``invariant_factors`` is the full nonzero diagonal of ``d`` (ones
    included); ``u_inv``/``v_inv`` are the exact inverses of ``u``/``v``.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]
    u_inv: IntMatrix = field(repr=False)
    v_inv: IntMatrix = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _min_pivot(a, t, nrows, ncols):
    best = None
    best_abs = 0
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            x = row[j]
            if x and (best is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def _smith(m: IntMatrix, track: bool):
    nrows, ncols = m.shape
    a = m.to_list()
    if track:
        u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
        ui = [r[:] for r in u]
        v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
        vi = [r[:] for r in v]

    # row/column operations; each keeps the inverse in step
    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if track:
            u[i], u[k] = u[k], u[i]
            for r in ui:
                r[i], r[k] = r[k], r[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        if track:
            for r in v:
                r[j], r[k] = r[k], r[j]
            vi[j], vi[k] = vi[k], vi[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        ad, as_ = a[dst], a[src]
        for j in range(ncols):
            if as_[j]:
                ad[j] += q * as_[j]
        if track:
            ud, us = u[dst], u[src]
            for j in range(nrows):
                ud[j] += q * us[j]
            for r in ui:
                r[src] -= q * r[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in a:
            if r[src]:
                r[dst] += q * r[src]
        if track:
            for r in v:
                r[dst] += q * r[src]
            vd, vs = vi[dst], vi[src]
            for j in range(ncols):
                vs[j] -= q * vd[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if track:
            u[i] = [-x for x in u[i]]
            for r in ui:
                r[i] = -r[i]

    diag = []
    for t in range(min(nrows, ncols)):
        while True:
            piv = _min_pivot(a, t, nrows, ncols)
            if piv is None:
                break
            i, j = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, nrows)
                        if any(x % p for x in a[i][t + 1:])), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] == 0:
            break
        if a[t][t] < 0:
            negate_row(t)
        diag.append(a[t][t])

    if not track:
        return tuple(diag)
    return SnfResult(
        d=IntMatrix(a, shape=(nrows, ncols)),
        u=IntMatrix(u, shape=(nrows, nrows)),
        v=IntMatrix(v, shape=(ncols, ncols)),
        invariant_factors=tuple(diag),
        u_inv=IntMatrix(ui, shape=(nrows, nrows)),
        v_inv=IntMatrix(vi, shape=(ncols, ncols)),
    )


def smith_normal_form(m) -> SnfResult:
    """Smith normal form with transforms.

    Pivot rule: the nonzero entry of least absolute value in the
    unreduced block, ties broken by (row, col). The pivot row and
    column are reduced by floor division; if a remainder survives the
    pivot is re-selected. Once both are clear, a row holding an entry
    not divisible by the pivot is added to the pivot row and the step
    repeats. Finished pivots are made positive by negating the row.
    """
    return _smith(as_matrix(m), track=True)


def invariant_factors(m) -> tuple[int, ...]:
    """Nonzero SNF diagonal only; same pivoting as :func:`smith_normal_form`."""
    return _smith(as_matrix(m), track=False)


def rank(m) -> int:
    """Rational rank, by fraction-free elimination."""
    m = as_matrix(m)
    a = m.to_list()
    nrows, ncols = m.shape
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][j]
        for i in range(r + 1, nrows):
            if a[i][j]:
                f = a[i][j]
                a[i] = [p * x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


# ---------------------------------------------------------------------------
# Hermite normal form


def hermite_normal_form(m) -> IntMatrix:
    """Row-style HNF of ``m`` with zero rows removed.

    Rows are a basis of the row lattice, in echelon form with positive
    pivots and the entries above each pivot reduced into ``[0, pivot)``.
    Canonical for the row lattice.
    """
    m = as_matrix(m)
    a = m.to_list()
    nrows, ncols = m.shape
    r = 0
    pivots = []
    for j in range(ncols):
        if r == nrows:
            break
        # euclid down column j over rows r..
        while True:
            nz = [i for i in range(r, nrows) if a[i][j]]
            if not nz:
                break
            k = min(nz, key=lambda i: (abs(a[i][j]), i))
            a[r], a[k] = a[k], a[r]
            done = True
            for i in range(r + 1, nrows):
                if a[i][j]:
                    q = a[i][j] // a[r][j]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    done = done and a[i][j] == 0
            if done:
                break
        if a[r][j] == 0:
            continue
        if a[r][j] < 0:
            a[r] = [-x for x in a[r]]
        p = a[r][j]
        for i in range(r):
            q = a[i][j] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
    return IntMatrix(a[:r], shape=(r, ncols))


def column_hermite_form(m) -> IntMatrix:
    """Column-basis counterpart of :func:`hermite_normal_form` (zero columns dropped)."""
    m = as_matrix(m)
    h = hermite_normal_form(m.T)
    return IntMatrix(h.T.to_list(), shape=(m.rows, h.rows))


# ---------------------------------------------------------------------------
# abelian groups


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/a_1 + ... + Z/a_s with every a_j >= 2.

    Factors equal to 1 are dropped at construction, with a warning.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"negative rank {self.rank}")
        tors = tuple(int(a) for a in self.torsion)
        bad = [a for a in tors if a < 1]
        if bad:
            raise ValueError(f"torsion coefficients must be positive, got {bad}")
        if 1 in tors:
            warnings.warn(f"stripping trivial torsion factors Z/1 from {list(tors)}", stacklevel=3)
            tors = tuple(a for a in tors if a != 1)
        object.__setattr__(self, "torsion", tors)

    @property
    def ngens(self) -> int:
        """Number of coordinates d + s of the standard presentation."""
        return self.rank + len(self.torsion)

    def torsion_order(self) -> int:
        out = 1
        for a in self.torsion:
            out *= a
        return out

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.rank == 0

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        k = 0
        while k < len(self.torsion):
            a = self.torsion[k]
            run = 1
            while k + run < len(self.torsion) and self.torsion[k + run] == a:
                run += 1
            parts.append(f"Z/{a}" if run == 1 else f"(Z/{a})^{run}")
            k += run
        return " + ".join(parts) if parts else "0"


def cokernel(m) -> tuple[FgAbelianGroup, IntMatrix]:
    """Z^rows / (column span of ``m``) and the quotient map onto it.

    The projection has one row per free coordinate (a row-HNF basis of
    the left kernel of ``m``) followed by one row per torsion
    coordinate, read modulo the matching torsion coefficient.
    """
    m = as_matrix(m)
    res = smith_normal_form(m)
    r = res.rank
    free_rows = res.u.select_rows(range(r, m.rows))
    free_rows = hermite_normal_form(free_rows) if free_rows.rows else free_rows
    tors_idx = [i for i, d in enumerate(res.invariant_factors) if d > 1]
    tors_rows = [[x % res.invariant_factors[i] for x in res.u.row(i)] for i in tors_idx]
    proj = free_rows.vstack(IntMatrix(tors_rows, shape=(len(tors_rows), m.rows)))
    group = FgAbelianGroup(m.rows - r, tuple(res.invariant_factors[i] for i in tors_idx))
    return group, proj


def saturation(m) -> IntMatrix:
    """Basis (columns, column HNF) of the saturation of the column span of ``m``."""
    m = as_matrix(m)
    res = smith_normal_form(m)
    basis = res.u_inv.select_cols(range(res.rank))
    if basis.cols == 0:
        return basis
    return column_hermite_form(basis)


def complement(sublattice_basis, ambient_rank: int) -> IntMatrix:
    """Basis (columns, column HNF) of a direct complement of a saturated sublattice."""
    s = as_matrix(sublattice_basis)
    if s.cols == 0:
        s = IntMatrix.zeros(ambient_rank, 0)
    if s.rows != ambient_rank:
        raise ValueError(f"basis vectors have length {s.rows}, ambient rank is {ambient_rank}")
    res = smith_normal_form(s)
    if any(d != 1 for d in res.invariant_factors):
        raise NotSaturatedError(
            f"sublattice is not saturated (invariant factors {list(res.invariant_factors)})")
    comp = res.u_inv.select_cols(range(res.rank, ambient_rank))
    if comp.cols:
        comp = column_hermite_form(comp)
    if s.cols == res.rank:
        full = s.hstack(comp)
        assert abs(full.det()) == 1
    return comp


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    v = tuple(_as_int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def solve_integer(a, b) -> IntMatrix:
    """Integer solution X of ``a @ X == b``; raises ValueError if none exists."""
    a, b = as_matrix(a), as_matrix(b)
    if a.rows != b.rows:
        raise ValueError("row mismatch")
    res = smith_normal_form(a)
    ub = res.u @ b
    y = []
    for i in range(a.cols):
        row = []
        for j in range(b.cols):
            if i < res.rank:
                q, rem = divmod(ub[i, j], res.invariant_factors[i])
                if rem:
                    raise ValueError("no integer solution")
                row.append(q)
            else:
                row.append(0)
        y.append(row)
    for i in range(res.rank, a.rows):
        if any(ub[i, j] for j in range(b.cols)):
            raise ValueError("no integer solution")
    return res.v @ IntMatrix(y, shape=(a.cols, b.cols))


def solve_rational(a, b: Sequence[int]) -> list[Fraction] | None:
    """Unique rational solution of ``a x = b``, or None if there is none.

    ``a`` must have full column rank (ValueError otherwise).
    """
    a = as_matrix(a)
    n = a.cols
    aug = [[Fraction(x) for x in a.row(i)] + [Fraction(b[i])] for i in range(a.rows)]
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][j] != 0), None)
        if piv is None:
            raise ValueError("matrix is not of full column rank")
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][j]
        aug[r] = [x / p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][j] != 0:
                f = aug[i][j]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    if any(aug[i][n] != 0 for i in range(r, len(aug))):
        return None
    return [aug[i][n] for i in range(n)]


def quotient_group(relations: Sequence[dict[int, int]], ngens: int) -> FgAbelianGroup:
    """Z^ngens modulo the span of sparse relation rows ``{column: coefficient}``.

    Generators hit by a relation with a unit coefficient are eliminated
    first (sparse, exact); the residual block goes through the SNF.
    """
    rows = {k: {c: x for c, x in r.items() if x} for k, r in enumerate(relations)}
    rows = {k: r for k, r in rows.items() if r}
    cols_of: dict[int, set[int]] = {}
    for k, r in rows.items():
        for c in r:
            cols_of.setdefault(c, set()).add(k)
    alive = set(range(ngens))
    changed = True
    while changed:
        changed = False
        for k in sorted(rows):
            if k not in rows:
                continue
            r = rows[k]
            units = [c for c, x in r.items() if x in (1, -1)]
            if not units:
                continue
            changed = True
            c = min(units, key=lambda c: (len(cols_of[c]), c))
            p = r[c]
            for k2 in sorted(cols_of[c] - {k}):
                r2 = rows[k2]
                f = r2[c] * p  # p = +-1, so f = r2[c] / p
                for c2, x in r.items():
                    y = r2.get(c2, 0) - f * x
                    if y:
                        if c2 not in r2:
                            cols_of.setdefault(c2, set()).add(k2)
                        r2[c2] = y
                    elif c2 in r2:
                        del r2[c2]
                        cols_of[c2].discard(k2)
                if not r2:
                    del rows[k2]
            for c2 in r:
                cols_of[c2].discard(k)
            del rows[k]
            alive.discard(c)
    left = sorted(alive)
    index = {c: i for i, c in enumerate(left)}
    dense = [[0] * len(left) for _ in rows]
    for i, k in enumerate(sorted(rows)):
        for c, x in rows[k].items():
            dense[i][index[c]] = x
    diag = invariant_factors(IntMatrix(dense, shape=(len(dense), len(left))))
    return FgAbelianGroup(len(left) - len(diag), tuple(d for d in diag if d > 1))

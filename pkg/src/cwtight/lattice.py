"""Exact integer linear algebra over Python ints.

Smith and Hermite normal forms with their transforms, lattice membership
with an explicit witness, and the structure of ``Z^m / (column lattice)``.
Every routine is exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InputError, NonCyclicQuotient

__all__ = [
    "IntegerMatrix",
    "SmithDecomposition",
    "AbelianGroupPresentation",
    "MembershipWitness",
    "QuotientElement",
    "CyclicQuotient",
    "xgcd",
    "smith_normal_form",
    "hermite_normal_form",
    "lattice_member",
    "cokernel",
    "quotient_coordinates",
    "cyclic_quotient",
    "quotient_image",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix stored row-major as a tuple of row tuples.

    Zero rows or zero columns are allowed (a 2x0 matrix is the relation
    matrix of a free group with no relations).
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InputError(
                f"entries do not match declared shape {self.rows}x{self.cols}"
            )
        for row in self.entries:
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise InputError(f"matrix entries must be integers, got {e!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        data = tuple(tuple(int(e) for e in r) for r in rows)
        if cols is None:
            if not data:
                raise InputError("cannot infer column count of a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], rows: int) -> "IntegerMatrix":
        cols = [tuple(int(e) for e in c) for c in columns]
        for c in cols:
            if len(c) != rows:
                raise InputError(f"column {c} does not have {rows} entries")
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return cls(rows, len(cols), data)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntegerMatrix":
        data = tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        return IntegerMatrix(self.cols, self.rows, data)

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            data = tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries
            )
            return IntegerMatrix(self.rows, other.cols, data)
        vec = tuple(other)
        if len(vec) != self.cols:
            raise InputError(f"vector of length {len(vec)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for r in self.entries for e in r)

    def is_diagonal(self) -> bool:
        return all(e == 0 for i, r in enumerate(self.entries) for j, e in enumerate(r) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def rank(self) -> int:
        return sum(1 for d in smith_normal_form(self).D.diagonal() if d)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(r) for r in self.entries]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _as_matrix(a) -> IntegerMatrix:
    return a if isinstance(a, IntegerMatrix) else IntegerMatrix.from_rows(a)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith form.

    ``U_inv`` is the exact inverse of ``U``; its columns lift the
    invariant-factor generators back to the ambient lattice.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    U_inv: IntegerMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.D.diagonal() if d)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def _add_row(m, dst, src, q):
    # row[dst] += q * row[src]
    rs, rd = m[src], m[dst]
    for c in range(len(rd)):
        rd[c] += q * rs[c]


def _add_col(m, dst, src, q):
    # col[dst] += q * col[src]
    for r in m:
        r[dst] += q * r[src]


def _freeze(m, rows, cols) -> IntegerMatrix:
    return IntegerMatrix(rows, cols, tuple(tuple(r) for r in m))


@lru_cache(maxsize=512)
def _smith_cached(a: IntegerMatrix) -> SmithDecomposition:
    m, n = a.rows, a.cols
    D = a.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_add(dst, src, q):
        _add_row(D, dst, src, q)
        _add_row(U, dst, src, q)
        _add_col(Ui, src, dst, -q)

    def row_swap(i, j):
        _swap_rows(D, i, j)
        _swap_rows(U, i, j)
        _swap_cols(Ui, i, j)

    def row_neg(i):
        D[i] = [-e for e in D[i]]
        U[i] = [-e for e in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def col_add(dst, src, q):
        _add_col(D, dst, src, q)
        _add_col(V, dst, src, q)

    def col_swap(i, j):
        _swap_cols(D, i, j)
        _swap_cols(V, i, j)

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = D[i][j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)

        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // p
                    if q:
                        row_add(i, t, -q)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // p
                    if q:
                        col_add(j, t, -q)
                    if D[t][j]:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived: promote it
                best = None
                for i in range(t + 1, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                        best = (abs(D[i][t]), i, "r")
                for j in range(t + 1, n):
                    if D[t][j] and (best is None or abs(D[t][j]) < best[0]):
                        best = (abs(D[t][j]), j, "c")
                if best[2] == "r":
                    row_swap(t, best[1])
                else:
                    col_swap(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            row_neg(t)
        t += 1

    return SmithDecomposition(_freeze(U, m, m), _freeze(D, m, n), _freeze(V, n, n), _freeze(Ui, m, m))


def smith_normal_form(a) -> SmithDecomposition:
    """Smith decomposition ``U @ A @ V == D``.

    Pivots are chosen by minimal absolute value. Diagonal entries are
    non-negative and each divides the next; D is unique for A, the
    transforms are deterministic but not unique.

    >>> smith_normal_form([[2, 4], [6, 8]]).D.diagonal()
    (2, 4)
    """
    return _smith_cached(_as_matrix(a))


def hermite_normal_form(a) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Column-style Hermite form: returns ``(H, U)`` with ``A @ U == H``.

    H is lower-triangular in echelon form: pivot columns come first, each
    pivot is positive, its column is zero above the pivot row, and entries
    to the left of a pivot in its row lie in ``[0, pivot)``. Trailing columns
    of H are zero. U is unimodular.
    """
    a = _as_matrix(a)
    m, k = a.rows, a.cols
    H = a.tolist()
    U = [[int(i == j) for j in range(k)] for i in range(k)]

    def combine(r, j, x, y, u, v):
        # (col_r, col_j) <- (x col_r + y col_j, u col_r + v col_j), det = x v - y u = 1
        for M in (H, U):
            for row in M:
                cr, cj = row[r], row[j]
                row[r] = x * cr + y * cj
                row[j] = u * cr + v * cj

    r = 0
    for i in range(m):
        if r == k:
            break
        for j in range(r + 1, k):
            b = H[i][j]
            if b == 0:
                continue
            a_ = H[i][r]
            g, x, y = xgcd(a_, b)
            combine(r, j, x, y, -b // g, a_ // g)
        p = H[i][r]
        if p == 0:
            continue
        if p < 0:
            for M in (H, U):
                for row in M:
                    row[r] = -row[r]
            p = -p
        for j in range(r):
            q = H[i][j] // p
            if q:
                _add_col(H, j, r, -q)
                _add_col(U, j, r, -q)
        r += 1
    return _freeze(H, m, k), _freeze(U, k, k)


@dataclass(frozen=True)
class MembershipWitness:
    """Integer coefficients ``beta`` with ``A @ beta == target``."""

    coefficients: tuple[int, ...]


def lattice_member(a, b: Sequence[int]) -> Optional[MembershipWitness]:
    """Decide whether ``b`` lies in the lattice spanned by the columns of ``a``.

    Returns a witness when it does and ``None`` when no integer solution
    exists. The decision is exact (Hermite back-substitution); the witness is
    re-checked by multiplication before it is returned.
    """
    a = _as_matrix(a)
    b = tuple(int(e) for e in b)
    if len(b) != a.rows:
        raise InputError(f"target has length {len(b)}, matrix has {a.rows} rows")
    H, U = hermite_normal_form(a)
    k = a.cols
    pivot_rows = []
    for c in range(k):
        nz = next((i for i in range(a.rows) if H[i, c]), None)
        if nz is None:
            break
        pivot_rows.append(nz)
    y = [0] * k
    residual = list(b)
    r = 0
    for i in range(a.rows):
        if r < len(pivot_rows) and pivot_rows[r] == i:
            p = H[i, r]
            if residual[i] % p:
                return None
            y[r] = residual[i] // p
            if y[r]:
                for i2 in range(i, a.rows):
                    residual[i2] -= y[r] * H[i2, r]
            r += 1
        elif residual[i]:
            return None
    beta = U @ y
    if a @ beta != b:  # pragma: no cover - guards the algebra above
        raise AssertionError("membership witness failed verification")
    return MembershipWitness(tuple(beta))


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Finitely generated abelian group ``Z^free_rank + sum Z/t_i`` in canonical form."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise InputError("free rank must be non-negative")
        t = tuple(int(x) for x in self.torsion)
        if any(x <= 1 for x in t):
            raise InputError(f"torsion coefficients must exceed 1: {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise InputError(f"torsion coefficients must form a divisibility chain: {t}")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return (self.free_rank == 1 and not self.torsion) or (
            self.free_rank == 0 and len(self.torsion) <= 1
        )

    @property
    def order(self) -> Optional[int]:
        """Group order, or ``None`` for infinite groups."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def cokernel(relations, ambient_rank: Optional[int] = None) -> AbelianGroupPresentation:
    """Structure of ``Z^m / (column lattice of relations)``.

    ``relations`` may have zero columns; pass ``ambient_rank`` when it is
    given as a plain list with no rows to infer m from.
    """
    rel = _relations(relations, ambient_rank)
    diag = smith_normal_form(rel).invariant_factors
    return AbelianGroupPresentation(rel.rows - len(diag), tuple(d for d in diag if d > 1))


def _relations(relations, ambient_rank=None) -> IntegerMatrix:
    if isinstance(relations, IntegerMatrix):
        rel = relations
    elif not relations and ambient_rank is not None:
        rel = IntegerMatrix.zeros(ambient_rank, 0)
    else:
        rel = IntegerMatrix.from_rows(relations)
    if ambient_rank is not None and rel.rows != ambient_rank:
        raise InputError(f"relations have {rel.rows} rows, expected {ambient_rank}")
    return rel


@dataclass(frozen=True)
class QuotientElement:
    """Element of ``Z`` (``modulus == 0``) or of ``Z/modulus``.

    For finite cyclic groups the value is reduced into ``[0, modulus)``.
    """

    value: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise InputError("modulus must be non-negative")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __neg__(self) -> "QuotientElement":
        return QuotientElement(-self.value, self.modulus)

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        if self.modulus != other.modulus:
            raise InputError("adding elements of different groups")
        return QuotientElement(self.value + other.value, self.modulus)

    def __mul__(self, n: int) -> "QuotientElement":
        return QuotientElement(self.value * int(n), self.modulus)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return str(self.value) if self.modulus == 0 else f"{self.value} mod {self.modulus}"


def quotient_coordinates(relations, v: Sequence[int]) -> tuple[QuotientElement, ...]:
    """Coordinates of the class of ``v`` in ``Z^m / lattice``.

    One entry per torsion factor (in divisibility order) followed by one per
    free summand. The class is zero iff every coordinate is zero.
    """
    rel = _relations(relations)
    v = tuple(int(e) for e in v)
    if len(v) != rel.rows:
        raise InputError(f"vector has length {len(v)}, ambient rank is {rel.rows}")
    snf = smith_normal_form(rel)
    w = snf.U @ v
    diag = snf.invariant_factors
    coords = [QuotientElement(w[i], d) for i, d in enumerate(diag) if d > 1]
    coords += [QuotientElement(w[i]) for i in range(len(diag), rel.rows)]
    return tuple(coords)


@dataclass(frozen=True)
class CyclicQuotient:
    """A fixed isomorphism of a cyclic cokernel with ``Z`` or ``Z/modulus``.

    The isomorphism is ``v -> functional . v`` (reduced mod ``modulus`` when
    finite). For the infinite cyclic case the functional is the unique
    primitive one vanishing on the relations up to sign, and the sign is
    fixed so its first nonzero coordinate is positive. The trivial group is
    represented with ``modulus == 1``.
    """

    modulus: int
    functional: tuple[int, ...]

    def image(self, v: Sequence[int], generator_sign: int = 1) -> QuotientElement:
        if len(v) != len(self.functional):
            raise InputError(f"vector has length {len(v)}, ambient rank is {len(self.functional)}")
        if generator_sign not in (1, -1):
            raise InputError("generator_sign must be +1 or -1")
        val = generator_sign * sum(a * b for a, b in zip(self.functional, v))
        return QuotientElement(val, self.modulus)


def cyclic_quotient(relations) -> CyclicQuotient:
    """Canonical identification of a cyclic cokernel; raises otherwise."""
    rel = _relations(relations)
    group = cokernel(rel)
    if not group.is_cyclic:
        raise NonCyclicQuotient(f"cokernel {group} is not cyclic")
    snf = smith_normal_form(rel)
    m = rel.rows
    if group.is_trivial:
        return CyclicQuotient(1, (0,) * m)
    if group.free_rank == 1:
        phi = snf.U.row(m - 1)
        modulus = 0
    else:
        p = snf.rank - 1
        modulus = group.torsion[0]
        phi = tuple(e % modulus for e in snf.U.row(p))
    lead = next((e for e in phi if e), 0)
    if modulus == 0:
        if lead < 0:
            phi = tuple(-e for e in phi)
    elif lead > modulus // 2:
        phi = tuple((-e) % modulus for e in phi)
    return CyclicQuotient(modulus, tuple(phi))


def quotient_image(relations, v: Sequence[int], generator_sign: int = 1) -> QuotientElement:
    """Image of ``v`` in a cyclic cokernel under :func:`cyclic_quotient`.

    >>> quotient_image([[2], [3]], (1, 0))
    QuotientElement(value=3, modulus=0)
    """
    return cyclic_quotient(relations).image(tuple(int(e) for e in v), generator_sign)


def lattice_gcd(a: IntegerMatrix) -> int:
    g = 0
    for r in a.entries:
        for e in r:
            g = gcd(g, e)
    return g

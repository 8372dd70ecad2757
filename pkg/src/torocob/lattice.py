"""Exact integer linear algebra on row lattices.

Matrices are tuples of integer row tuples; vectors are integer tuples. All
arithmetic uses Python integers, so nothing overflows. A matrix with no rows
denotes the zero lattice.

The normal forms here are deterministic: the Smith pivot is always the
smallest nonzero entry in absolute value (ties broken by lowest row, then
column), and the Hermite form is row-style with positive pivots and entries
above each pivot reduced into ``[0, pivot)``. Two generating sets of the same
lattice therefore have identical Hermite forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, prod
from typing import Sequence

from .errors import ContainmentError, NotUnimodularError, RankError, ZeroVectorError

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows have different lengths")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def apply(m: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    """Matrix times column vector."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m))


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ m @ right`` is diagonal with ``diag`` on its diagonal.

    ``diag`` has ``min(rows, cols)`` entries, nonnegative, each dividing the
    next; zeros (if any) come last.
    """

    diag: tuple[int, ...]
    left: Matrix
    right: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group given by invariant factors, each >= 2."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs) or any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"not an invariant-factor list: {fs}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self):
        if self.is_trivial:
            return "trivial"
        return " x ".join(f"Z/{f}" for f in self.invariant_factors)


def _smith(rows: Matrix, ncols: int):
    a = [list(r) for r in rows]
    m, n = len(a), ncols
    left = [list(r) for r in identity(m)]
    right = [list(r) for r in identity(n)]
    right_inv = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]
        right_inv[i], right_inv[j] = right_inv[j], right_inv[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for r in a:
                r[dst] += q * r[src]
            for r in right:
                r[dst] += q * r[src]
            right_inv[src] = [x - q * y for x, y in zip(right_inv[src], right_inv[dst])]

    diag = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                add_row(i, t, -(a[i][t] // p))
                clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                add_col(j, t, -(a[t][j] // p))
                clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        diag.append(a[t][t])
    return (
        tuple(diag),
        tuple(map(tuple, left)),
        tuple(map(tuple, right)),
        tuple(map(tuple, right_inv)),
    )


def smith_normal_form(m: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    rows = as_matrix(m)
    n = len(rows[0]) if rows else (ncols or 0)
    diag, left, right, _ = _smith(rows, n)
    return SmithDecomposition(diag, left, right)


def rank(m: Sequence[Sequence[int]]) -> int:
    return _cached_rank(as_matrix(m))


@lru_cache(maxsize=65536)
def _cached_rank(rows: Matrix) -> int:
    return len(hermite_normal_form(rows))


def hermite_normal_form(m: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form; zero rows are dropped."""
    a = [list(r) for r in as_matrix(m)]
    if not a:
        return ()
    n = len(a[0])
    out = []
    col = 0
    while a and col < n:
        live = [r for r in a if r[col]]
        rest = [r for r in a if not r[col]]
        if not live:
            col += 1
            continue
        # Euclid on the column entries of the live rows
        while len(live) > 1:
            live.sort(key=lambda r: (abs(r[col]), r))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        a = [r for r in rest if any(r)]
        col += 1
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], row)]
    return tuple(tuple(r) for r in out)


def saturation(gens: Sequence[Sequence[int]]) -> Matrix:
    """Hermite basis of the saturation ``span_R(gens) ∩ Z^n``."""
    return _cached_saturation(as_matrix(gens))


@lru_cache(maxsize=65536)
def _cached_saturation(rows: Matrix) -> Matrix:
    if not rows:
        return ()
    diag, _, _, right_inv = _smith(rows, len(rows[0]))
    r = sum(1 for d in diag if d)
    return hermite_normal_form(right_inv[:r])


def coordinates(v: Sequence[int], basis: Matrix) -> tuple[int, ...] | None:
    """Integer coefficients of ``v`` in a Hermite basis, or None if ``v`` is
    outside its row span."""
    rest = list(v)
    coeffs = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        q, r = divmod(rest[c], row[c])
        if r:
            return None
        coeffs.append(q)
        rest = [x - q * y for x, y in zip(rest, row)]
    return tuple(coeffs) if not any(rest) else None


def quotient_invariants(k: Sequence[Sequence[int]], ktilde: Sequence[Sequence[int]]) -> AbelianGroup:
    """Invariant factors of ``span(ktilde) / span(k)``."""
    return _cached_quotient(as_matrix(k), as_matrix(ktilde))


@lru_cache(maxsize=65536)
def _cached_quotient(k: Matrix, ktilde: Matrix) -> AbelianGroup:
    basis = hermite_normal_form(ktilde)
    coords = []
    for row in k:
        c = coordinates(row, basis)
        if c is None:
            raise ContainmentError(f"{row} is not in the span of {ktilde}")
        coords.append(c)
    if rank(k) != len(basis):
        raise RankError(f"rank {rank(k)} sublattice in rank {len(basis)} lattice")
    if not basis:
        return AbelianGroup()
    diag = smith_normal_form(coords).diag
    return AbelianGroup(tuple(d for d in diag if d > 1))


def is_primitive(v: Sequence[int]) -> bool:
    if not any(v):
        raise ZeroVectorError("the zero vector has no primitivity")
    return reduce(gcd, v, 0) == 1


def is_basis_extendable(vecs: Sequence[Sequence[int]]) -> bool:
    rows = as_matrix(vecs)
    if not rows:
        return True
    return all(d == 1 for d in smith_normal_form(rows).diag) and len(rows) <= len(rows[0])


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    a = [list(r) for r in as_matrix(m)]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    a = as_matrix(m)
    n = len(a)
    if abs(determinant(a)) != 1:
        raise NotUnimodularError(f"{a} is not unimodular")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(int(x) for x in row[n:]) for row in aug)


def primitive_part(v: Sequence[int]) -> Vector:
    g = reduce(gcd, v, 0)
    if not g:
        raise ZeroVectorError("the zero vector has no primitive part")
    return tuple(x // g for x in v)

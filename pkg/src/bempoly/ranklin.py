"""
Exact rational linear algebra and the rank-condition test for orbit closures.

Matrices are lists of rows of :class:`~fractions.Fraction`.  Nothing here
touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .clans import _as_clan, rank_minus, rank_pair, rank_plus

__all__ = [
    "RatMatrix", "as_matrix", "rank", "rank_naive", "nullspace", "transpose",
    "Flag", "dim_intersection", "project_rho", "coordinate_subspace",
    "Violation", "first_violation", "in_orbit_closure",
]

RatMatrix = list  # list of rows, each a list of Fraction


def as_matrix(rows) -> RatMatrix:
    rows = [[Fraction(x) for x in r] for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def transpose(M: Sequence[Sequence]) -> RatMatrix:
    return [list(col) for col in zip(*M)]


def _integer_rows(M) -> list[list[int]]:
    # scaling a row by a nonzero constant keeps the rank
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def rank(M: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    A = _integer_rows(M)
    if not A or not A[0]:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                A[i][k] = (A[r][c] * A[i][k] - A[i][c] * A[r][k]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
    return r


def rank_naive(M: Sequence[Sequence]) -> int:
    """Textbook Gauss-Jordan over Fractions; kept as an independent check on :func:`rank`."""
    A = [[Fraction(x) for x in row] for row in M]
    if not A:
        return 0
    r = 0
    for c in range(len(A[0])):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def rref(M: Sequence[Sequence]) -> tuple[RatMatrix, list[int]]:
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> RatMatrix:
    """Basis of ``{x : M x = 0}``, one vector per free column."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


@dataclass(frozen=True)
class Flag:
    """A complete flag given by an ordered basis; ``F_i`` spans the first i columns."""
    basis: tuple  # n x n, rows of Fractions

    def __post_init__(self):
        B = tuple(tuple(Fraction(x) for x in row) for row in self.basis)
        n = len(B)
        if n == 0 or any(len(row) != n for row in B):
            raise ValueError("flag basis must be a nonempty square matrix")
        if rank(B) != n:
            raise ValueError("flag basis is singular")
        object.__setattr__(self, "basis", B)

    @property
    def n(self) -> int:
        return len(self.basis)

    @classmethod
    def from_columns(cls, columns) -> Flag:
        return cls(tuple(zip(*columns)))

    @classmethod
    def coordinate(cls, sigma) -> Flag:
        """The flag with ``F_d = <e_sigma(1), ..., e_sigma(d)>``."""
        n = len(sigma)
        cols = [[int(r == s - 1) for r in range(n)] for s in sigma]
        return cls.from_columns(cols)

    @classmethod
    def from_json(cls, text: str) -> Flag:
        data = json.loads(text)
        n = int(data["n"])
        rows = data["matrix"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"flag matrix is not {n}x{n}")
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    def columns(self, i: int) -> RatMatrix:
        """First ``i`` basis vectors as the columns of an n x i matrix."""
        return [list(row[:i]) for row in self.basis]

    def same_flag(self, other: Flag) -> bool:
        if self.n != other.n:
            return False
        for i in range(1, self.n):
            joint = [a + b for a, b in zip(self.columns(i), other.columns(i))]
            if rank(joint) != i:
                return False
        return True


def _hcat(A, B):
    return [list(a) + list(b) for a, b in zip(A, B)]


def dim_intersection(F: Flag, i: int, S: Sequence[Sequence]) -> int:
    """``dim(F_i ∩ colspan S)`` via ``i + rank S - rank [F_i | S]``."""
    if len(S) != F.n:
        raise ValueError(f"subspace matrix has {len(S)} rows, flag lives in dimension {F.n}")
    if not 0 <= i <= F.n:
        raise ValueError(f"flag index {i} out of range")
    Fi = F.columns(i)
    return i + rank(S) - rank(_hcat(Fi, S))


def project_rho(v: Sequence, p: int) -> tuple:
    """Zero all coordinates after the first ``p``."""
    return tuple(Fraction(x) if k < p else Fraction(0) for k, x in enumerate(v))


def coordinate_subspace(n: int, indices) -> RatMatrix:
    """n x k matrix whose columns are ``e_j`` for the given 1-based indices."""
    indices = list(indices)
    return [[Fraction(int(r == j - 1)) for j in indices] for r in range(n)]


@dataclass(frozen=True)
class Violation:
    condition: int  # 1, 2 or 3
    i: int
    j: int | None
    observed: int
    bound: int

    def describe(self) -> str:
        if self.condition == 1:
            return f"dim(F_{self.i} ∩ E_p) = {self.observed} < {self.bound}"
        if self.condition == 2:
            return f"dim(F_{self.i} ∩ E^q) = {self.observed} < {self.bound}"
        return f"dim(rho(F_{self.i}) + F_{self.j}) = {self.observed} > {self.bound}"


def first_violation(F: Flag, gamma, check_crossing: bool = True) -> Violation | None:
    gamma = _as_clan(gamma)
    n = F.n
    if gamma.n != n:
        raise ValueError(f"clan has length {gamma.n} but flag lives in dimension {n}")
    p = gamma.p
    Ep = coordinate_subspace(n, range(1, p + 1))
    Eq = coordinate_subspace(n, range(p + 1, n + 1))
    for i in range(1, n + 1):
        d = dim_intersection(F, i, Ep)
        if d < rank_plus(gamma, i):
            return Violation(1, i, None, d, rank_plus(gamma, i))
    for i in range(1, n + 1):
        d = dim_intersection(F, i, Eq)
        if d < rank_minus(gamma, i):
            return Violation(2, i, None, d, rank_minus(gamma, i))
    if check_crossing:
        for i in range(1, n):
            rho_Fi = [list(project_rho(col, p)) for col in transpose(F.columns(i))]
            rho_Fi = transpose(rho_Fi)
            for j in range(i + 1, n + 1):
                d = rank(_hcat(rho_Fi, F.columns(j)))
                bound = j + rank_pair(gamma, i, j)
                if d > bound:
                    return Violation(3, i, j, d, bound)
    return None


def in_orbit_closure(F: Flag, gamma, check_crossing: bool = True) -> bool:
    return first_violation(F, gamma, check_crossing) is None

"""
Subwords, torus-fixed points, moment images and tangent weights of
Barbasch-Evens-Magyar varieties for (GL_{p+q}, GL_p x GL_q).

A fixed point is a pair ``(x, J)`` where ``x`` is a gamma-shuffled
permutation and ``J`` a subword of the word ``Q``.  Its moment image is

    x . ( sum_{i<n} omega_i  +  sum_{i=N..1} s_{b_N} ... s_{b_i} omega_{j_i} )

where ``s_b`` is the identity when ``b`` is a skip.  The same reflection
prefixes ``s_{b_N} ... s_{b_i}`` drive the tangent weights, so both are
computed from :func:`subword_prefixes`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Sequence

from .clans import Clan, _as_clan, gamma_shuffled_perms, is_matchless, matchless_clans
from .weyl import (
    Permutation, QVec, Word, apply_to_vector, fundamental_weight, inversion_roots,
    length, simple_reflection, simple_root,
)

__all__ = [
    "SKIP", "Subword", "subwords", "flat", "join",
    "FixedPoint", "fixed_points", "subword_prefixes", "moment_image",
    "bs_moment_points", "bem_points", "reference_long_element", "tangent_weights",
    "PoincarePoly", "poincare", "dim_bem", "StrataLattice", "strata_lattice",
    "closed_orbit_clan", "dedupe",
]

SKIP = None


@dataclass(frozen=True)
class Subword:
    """Per position of ``word``: keep the letter (True) or skip it (False)."""
    word: Word
    keep: tuple[bool, ...]

    def __post_init__(self):
        keep = tuple(bool(k) for k in self.keep)
        if len(keep) != len(self.word):
            raise ValueError(f"subword has {len(keep)} entries, word has {len(self.word)}")
        object.__setattr__(self, "keep", keep)

    @classmethod
    def parse(cls, word: Word, entries: Sequence) -> Subword:
        """From entries like ``(3, "-")``: a letter keeps, ``"-"``/None skips."""
        if len(entries) != len(word):
            raise ValueError(f"subword has {len(entries)} entries, word has {len(word)}")
        keep = []
        for e, j in zip(entries, word):
            if e is None or e == "-":
                keep.append(False)
            elif int(e) == j:
                keep.append(True)
            else:
                raise ValueError(f"subword entry {e} does not match word letter {j}")
        return cls(word, tuple(keep))

    @property
    def betas(self) -> tuple:
        """``(b_1, ..., b_N)`` with ``None`` at skips."""
        return tuple(j if k else SKIP for j, k in zip(self.word, self.keep))

    def __len__(self) -> int:
        return len(self.keep)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) if b is not None else "-" for b in self.betas) + ")"


def subwords(Q: Word) -> list[Subword]:
    return [Subword(Q, keep) for keep in product((False, True), repeat=len(Q))]


def flat(P: Subword) -> Word:
    return Word(tuple(b for b in P.betas if b is not None), P.word.n)


def join(P: Subword, P2: Subword) -> Subword:
    if P.word != P2.word:
        raise ValueError("subwords of different words cannot be joined")
    return Subword(P.word, tuple(a and b for a, b in zip(P.keep, P2.keep)))


@dataclass(frozen=True)
class FixedPoint:
    x: Permutation
    J: Subword


def closed_orbit_clan(p: int, q: int) -> Clan:
    return Clan(("+",) * p + ("-",) * q)


def fixed_points(gamma, Q: Word) -> list[FixedPoint]:
    gamma = _as_clan(gamma)
    if not is_matchless(gamma):
        raise ValueError(f"clan {gamma} is not matchless")
    if gamma.n != Q.n:
        raise ValueError(f"clan has length {gamma.n}, word lives in S_{Q.n}")
    return [FixedPoint(x, J) for x in gamma_shuffled_perms(gamma) for J in subwords(Q)]


def subword_prefixes(J: Subword) -> list[Permutation]:
    """
    ``prefixes[i-1] = s_{b_N} s_{b_{N-1}} ... s_{b_i}`` for i = 1..N (skips act
    as the identity).
    """
    n = J.word.n
    N = len(J)
    out = [None] * N
    cur = Permutation.identity(n)
    for i in range(N - 1, -1, -1):
        b = J.betas[i]
        if b is not None:
            cur = cur * simple_reflection(b, n)
        out[i] = cur
    return out


def _vsum(vectors, n):
    acc = [Fraction(0)] * n
    for v in vectors:
        for k, x in enumerate(v):
            acc[k] += x
    return tuple(acc)


def _rho(n: int) -> QVec:
    """Sum of all fundamental weights, ``(n-1, n-2, ..., 0)``."""
    return tuple(Fraction(n - k) for k in range(1, n + 1))


def moment_image(x: Permutation, J: Subword, Q: Word | None = None) -> QVec:
    if Q is not None and Q != J.word:
        raise ValueError(f"subword {J} is not a subword of {Q}")
    Q = J.word
    n = Q.n
    if x.n != n:
        raise ValueError(f"permutation of size {x.n} does not match word in S_{n}")
    terms = [_rho(n)]
    for i, pre in enumerate(subword_prefixes(J)):
        terms.append(apply_to_vector(pre, fundamental_weight(Q[i], n)))
    return apply_to_vector(x, _vsum(terms, n))


def dedupe(points) -> list:
    """Drop repeated points, keeping first-occurrence order."""
    return list(dict.fromkeys(points))


def bs_moment_points(Q: Word, multiset: bool = False) -> list[QVec]:
    ident = Permutation.identity(Q.n)
    pts = [moment_image(ident, J) for J in subwords(Q)]
    return pts if multiset else dedupe(pts)


def bem_points(gamma, Q: Word, multiset: bool = False) -> list[QVec]:
    gamma = _as_clan(gamma)
    if not is_matchless(gamma):
        raise ValueError(f"clan {gamma} is not matchless")
    if gamma.n != Q.n:
        raise ValueError(f"clan has length {gamma.n}, word lives in S_{Q.n}")
    bs = bs_moment_points(Q, multiset=True)
    pts = [apply_to_vector(s, v) for s in gamma_shuffled_perms(gamma) for v in bs]
    return pts if multiset else dedupe(pts)


def reference_long_element(p: int, q: int) -> Permutation:
    """``[p, p-1, ..., 1, n, n-1, ..., p+1]``, the longest element of S_p x S_q."""
    n = p + q
    return Permutation(tuple(range(p, 0, -1)) + tuple(range(n, p, -1)))


def tangent_weights(u: Permutation, J: Subword, Q: Word | None, p: int, q: int) -> list[QVec]:
    """Torus weights of the tangent space at the fixed point ``(u, J)``, as a sorted multiset."""
    if Q is not None and Q != J.word:
        raise ValueError(f"subword {J} is not a subword of {Q}")
    Q = J.word
    n = p + q
    if Q.n != n or u.n != n:
        raise ValueError(f"sizes disagree: p+q={n}, word in S_{Q.n}, u in S_{u.n}")
    w = reference_long_element(p, q)
    weights = [tuple(-x for x in a) for a in inversion_roots(w)]
    for i, pre in enumerate(subword_prefixes(J)):
        neg = tuple(-x for x in simple_root(Q[i], n))
        weights.append(apply_to_vector(pre, neg))
    return sorted(apply_to_vector(u, v) for v in weights)


@dataclass(frozen=True)
class PoincarePoly:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def at_one(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if d == 0 else f"{c if c != 1 else ''}z" + (f"^{d}" if d > 1 else ""))
        return " + ".join(terms) or "0"


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qfactorial(m: int) -> list[int]:
    out = [1]
    for k in range(1, m + 1):
        out = _polymul(out, [1] * k)
    return out


def poincare(p: int, q: int, N: int) -> PoincarePoly:
    """``[p]_z! [q]_z! (1+z)^N``."""
    poly = _polymul(_qfactorial(p), _qfactorial(q))
    for _ in range(N):
        poly = _polymul(poly, [1, 1])
    return PoincarePoly(tuple(poly))


def dim_bem(p: int, q: int, N: int) -> int:
    return p * (p - 1) // 2 + q * (q - 1) // 2 + N


@dataclass
class StrataLattice:
    """Strata indexed by subwords; the meet of two strata is the stratum of their join."""
    word: Word
    nodes: list[Subword]

    def meet(self, P: Subword, P2: Subword) -> Subword:
        return join(P, P2)

    def label(self, P: Subword) -> Word:
        return flat(P)

    def le(self, P: Subword, P2: Subword) -> bool:
        """Stratum of P lies in the closure of the stratum of P2."""
        return join(P, P2) == P

    @property
    def bottom(self) -> Subword:
        return Subword(self.word, (False,) * len(self.word))

    @property
    def top(self) -> Subword:
        return Subword(self.word, (True,) * len(self.word))

    def covers(self) -> list[tuple[Subword, Subword]]:
        """Pairs (P, P2) with P2 obtained from P by keeping exactly one more letter."""
        out = []
        for P in self.nodes:
            for k, kept in enumerate(P.keep):
                if not kept:
                    up = list(P.keep)
                    up[k] = True
                    out.append((P, Subword(self.word, tuple(up))))
        return out


def strata_lattice(Q: Word) -> StrataLattice:
    if len(Q) > 20:
        raise ValueError("strata_lattice is limited to words of length <= 20")
    return StrataLattice(Q, subwords(Q))


def fixed_point_count(p: int, q: int, N: int) -> int:
    return factorial(p) * factorial(q) * 2 ** N

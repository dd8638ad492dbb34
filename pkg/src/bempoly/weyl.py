"""
Type A Weyl group primitives.

Permutations are stored in one-line notation with 1-based images, so that
``Permutation((2, 3, 1))`` sends 1 to 2, 2 to 3 and 3 to 1.  Composition is
``(u * v)(i) = u(v(i))``.  A permutation acts on vectors of length ``n`` by
sending the basis vector ``e_i`` to ``e_{w(i)}``; in particular ``s_i`` swaps
coordinates ``i`` and ``i + 1``.

Vectors are plain tuples of :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Word", "QVec", "qvec",
    "compose", "length", "apply_to_vector",
    "simple_root", "fundamental_weight", "simple_reflection",
    "word_product", "demazure_product", "is_reduced",
    "inversion_roots", "reduced_words", "all_permutations",
]

QVec = tuple  # tuple[Fraction, ...] of fixed length


def qvec(coords: Iterable) -> QVec:
    """Build an exact rational vector from ints, Fractions or "a/b" strings."""
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == i for i, w in enumerate(self.images, start=1))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class Word:
    """A word ``(j_1, ..., j_N)`` in the simple reflections of S_n."""
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(j) for j in self.letters)
        if self.n < 1:
            raise ValueError("ambient n must be positive")
        for j in letters:
            if not 1 <= j <= self.n - 1:
                raise ValueError(f"letter {j} out of range 1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.letters)) + ")"


def compose(u: Permutation, v: Permutation) -> Permutation:
    if u.n != v.n:
        raise ValueError(f"cannot compose permutations of sizes {u.n} and {v.n}")
    return Permutation(tuple(u.images[x - 1] for x in v.images))


def length(w: Permutation) -> int:
    """Number of inversions of ``w``."""
    im = w.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def apply_to_vector(w: Permutation, v: Sequence) -> QVec:
    if w.n != len(v):
        raise ValueError(f"permutation of size {w.n} cannot act on a vector of length {len(v)}")
    out = [None] * w.n
    for i, x in enumerate(v):
        out[w.images[i] - 1] = Fraction(x)
    return tuple(out)


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 1..{n - 1}")


def simple_root(i: int, n: int) -> QVec:
    _check_index(i, n)
    return tuple(Fraction(1) if k == i else Fraction(-1) if k == i + 1 else Fraction(0)
                 for k in range(1, n + 1))


def fundamental_weight(i: int, n: int) -> QVec:
    _check_index(i, n)
    return tuple(Fraction(1) if k <= i else Fraction(0) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def simple_reflection(i: int, n: int) -> Permutation:
    _check_index(i, n)
    im = list(range(1, n + 1))
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(tuple(im))


def word_product(Q: Word) -> Permutation:
    """Ordinary product ``s_{j_1} s_{j_2} ... s_{j_N}``."""
    w = Permutation.identity(Q.n)
    for j in Q:
        w = w * simple_reflection(j, Q.n)
    return w


def demazure_product(Q: Word) -> Permutation:
    # fold from the right: s_j * w = s_j w if that is longer, else w
    w = Permutation.identity(Q.n)
    for j in reversed(Q.letters):
        sw = simple_reflection(j, Q.n) * w
        if length(sw) > length(w):
            w = sw
    return w


def is_reduced(Q: Word) -> bool:
    return length(word_product(Q)) == len(Q)


def inversion_roots(w: Permutation, word: Word | None = None) -> frozenset:
    """
    The set ``{alpha_{j_1}, s_{j_1} alpha_{j_2}, ..., s_{j_1}...s_{j_{l-1}} alpha_{j_l}}``
    for a reduced word of ``w`` (the first one found unless ``word`` is given).
    """
    n = w.n
    if word is None:
        word = _some_reduced_word(w)
    elif word_product(word) != w or not is_reduced(word):
        raise ValueError(f"{word} is not a reduced word for {w}")
    roots = []
    prefix = Permutation.identity(n)
    for j in word:
        roots.append(apply_to_vector(prefix, simple_root(j, n)))
        prefix = prefix * simple_reflection(j, n)
    return frozenset(roots)


def _some_reduced_word(w: Permutation) -> Word:
    # strip right descents: if w(j) > w(j+1) then w = (w s_j) s_j with l(w s_j) = l(w) - 1
    letters = []
    cur = list(w.images)
    while True:
        for j in range(len(cur) - 1):
            if cur[j] > cur[j + 1]:
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                letters.append(j + 1)
                break
        else:
            break
    return Word(tuple(reversed(letters)), w.n)


def reduced_words(w: Permutation) -> list[Word]:
    """All reduced words of ``w``, by exhaustive descent recursion (sorted)."""
    if w.n > 6:
        raise ValueError("reduced_words is limited to n <= 6")
    return [Word(t, w.n) for t in sorted(_reduced_words(w.images))]


@lru_cache(maxsize=None)
def _reduced_words(images: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out = []
    for j in range(len(images) - 1):
        if images[j] > images[j + 1]:
            shorter = list(images)
            shorter[j], shorter[j + 1] = shorter[j + 1], shorter[j]
            for rw in _reduced_words(tuple(shorter)):
                out.append(rw + (j + 1,))
    return tuple(out) if out else ((),)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in _itperms(range(1, n + 1))]

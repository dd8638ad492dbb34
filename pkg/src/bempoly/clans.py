"""
(p,q)-clans: involutions of {1..n} whose fixed points carry a sign.

A clan is written as a string such as ``"1+-1"``.  Each digit ``1``..``9``
(or ``(k)`` for labels of ten or more) marks one end of a 2-cycle; ``+`` and
``-`` mark fixed points.  Clans are stored canonically, with pair labels
renumbered ``1, 2, 3, ...`` in order of first occurrence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from math import factorial

from .weyl import Permutation

__all__ = [
    "Clan", "ClanParseError", "parse_clan",
    "is_matchless", "contains_pattern", "find_pattern", "is_noncrossing",
    "SINGULAR_PATTERNS", "offending_pattern", "is_smooth_orbit_closure",
    "rank_plus", "rank_minus", "rank_pair",
    "gamma_shuffled_perms", "enumerate_clans", "matchless_clans",
]

PLUS = "+"
MINUS = "-"

MAX_ENUMERATION = 8


class ClanParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Clan:
    """
    Canonical clan.  ``symbols`` holds ``"+"``, ``"-"`` or a positive int
    pair label; use :func:`parse_clan` to build one from text.
    """
    symbols: tuple

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("empty clan")
        seen = {}
        for k, c in enumerate(self.symbols):
            if c in (PLUS, MINUS):
                continue
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"bad clan symbol {c!r}")
            seen.setdefault(c, []).append(k)
        for label, where in seen.items():
            if len(where) != 2:
                raise ValueError(f"label {label} occurs {len(where)} time(s), expected 2")
        object.__setattr__(self, "symbols", _canonical(self.symbols))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @cached_property
    def signature(self) -> tuple[int, int]:
        npairs = sum(1 for c in self.symbols if isinstance(c, int)) // 2
        plus = self.symbols.count(PLUS)
        minus = self.symbols.count(MINUS)
        return plus + npairs, minus + npairs

    @property
    def p(self) -> int:
        return self.signature[0]

    @property
    def q(self) -> int:
        return self.signature[1]

    @cached_property
    def partner(self) -> tuple:
        """0-based partner index per position (``None`` for signed fixed points)."""
        first = {}
        out = [None] * self.n
        for k, c in enumerate(self.symbols):
            if isinstance(c, int):
                if c in first:
                    out[k] = first[c]
                    out[first[c]] = k
                else:
                    first[c] = k
        return tuple(out)

    def __str__(self) -> str:
        return "".join(c if isinstance(c, str) else (str(c) if c < 10 else f"({c})")
                       for c in self.symbols)

    def __repr__(self) -> str:
        return f"Clan({str(self)!r})"


def _canonical(symbols) -> tuple:
    relabel = {}
    out = []
    for c in symbols:
        if c in (PLUS, MINUS):
            out.append(c)
        else:
            if c not in relabel:
                relabel[c] = len(relabel) + 1
            out.append(relabel[c])
    return tuple(out)


_TOKEN = re.compile(r"\+|-|[1-9]|\((\d+)\)")


def parse_clan(text: str) -> Clan:
    text = text.strip()
    if not text:
        raise ClanParseError("empty clan")
    symbols = []
    positions = {}
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ClanParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group(0)
        if tok in (PLUS, MINUS):
            symbols.append(tok)
        else:
            label = int(m.group(1)) if m.group(1) is not None else int(tok)
            if label < 1:
                raise ClanParseError("pair labels must be positive", pos)
            positions.setdefault(label, []).append(pos)
            if len(positions[label]) > 2:
                raise ClanParseError(f"label {label} used more than twice", pos)
            symbols.append(label)
        pos = m.end()
    for label, where in positions.items():
        if len(where) == 1:
            raise ClanParseError(f"unpaired label {label}", where[0])
    return Clan(tuple(symbols))


def _as_clan(c) -> Clan:
    return c if isinstance(c, Clan) else parse_clan(c)


def is_matchless(gamma) -> bool:
    gamma = _as_clan(gamma)
    return all(c in (PLUS, MINUS) for c in gamma.symbols)


def find_pattern(theta, gamma):
    """Return 0-based indices of an occurrence of ``gamma`` in ``theta``, or None."""
    theta, gamma = _as_clan(theta), _as_clan(gamma)
    m = gamma.n
    if m > theta.n:
        return None
    ts, gs = theta.symbols, gamma.symbols
    gp = gamma.partner
    for idx in combinations(range(theta.n), m):
        ok = True
        for a in range(m):
            g = gs[a]
            t = ts[idx[a]]
            if g in (PLUS, MINUS):
                if t != g:
                    ok = False
                    break
            elif not isinstance(t, int) or (gp[a] > a and ts[idx[gp[a]]] != t):
                # a pair of gamma must land on a single pair of theta
                ok = False
                break
        if ok:
            return idx
    return None


def contains_pattern(theta, gamma) -> bool:
    return find_pattern(theta, gamma) is not None


def is_noncrossing(gamma) -> bool:
    return not contains_pattern(gamma, "1212")


SINGULAR_PATTERNS = ("1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331")


def offending_pattern(gamma) -> str | None:
    """First singular pattern contained in ``gamma``, if any."""
    gamma = _as_clan(gamma)
    for pat in SINGULAR_PATTERNS:
        if contains_pattern(gamma, pat):
            return pat
    return None


def is_smooth_orbit_closure(gamma) -> bool:
    return offending_pattern(gamma) is None


def _check_position(gamma: Clan, i: int):
    if not 1 <= i <= gamma.n:
        raise IndexError(f"position {i} out of range 1..{gamma.n}")


def _completed_pairs(gamma: Clan, i: int) -> int:
    # pairs with both ends among the first i positions
    return sum(1 for k in range(i) if gamma.partner[k] is not None and gamma.partner[k] < k)


def rank_plus(gamma, i: int) -> int:
    gamma = _as_clan(gamma)
    _check_position(gamma, i)
    return _completed_pairs(gamma, i) + gamma.symbols[:i].count(PLUS)


def rank_minus(gamma, i: int) -> int:
    gamma = _as_clan(gamma)
    _check_position(gamma, i)
    return _completed_pairs(gamma, i) + gamma.symbols[:i].count(MINUS)


def rank_pair(gamma, i: int, j: int) -> int:
    """Number of positions k <= i whose partner lies strictly beyond j."""
    gamma = _as_clan(gamma)
    if not 1 <= i < j <= gamma.n:
        raise ValueError(f"need 1 <= i < j <= {gamma.n}, got i={i}, j={j}")
    return sum(1 for k in range(i)
               if gamma.partner[k] is not None and gamma.partner[k] + 1 > j)


def gamma_shuffled_perms(gamma) -> list[Permutation]:
    """All permutations putting 1..p on the + positions and p+1..n on the - positions."""
    gamma = _as_clan(gamma)
    if not is_matchless(gamma):
        raise ValueError(f"clan {gamma} is not matchless")
    p, _ = gamma.signature
    n = gamma.n
    plus_pos = [k for k, c in enumerate(gamma.symbols) if c == PLUS]
    minus_pos = [k for k, c in enumerate(gamma.symbols) if c == MINUS]
    out = []
    for low in permutations(range(1, p + 1)):
        for high in permutations(range(p + 1, n + 1)):
            im = [0] * n
            for k, v in zip(plus_pos, low):
                im[k] = v
            for k, v in zip(minus_pos, high):
                im[k] = v
            out.append(Permutation(tuple(im)))
    assert len(out) == factorial(p) * factorial(len(minus_pos))
    return out


def enumerate_clans(p: int, q: int) -> list[Clan]:
    """All (p,q)-clans, sorted by their string form."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if p + q > MAX_ENUMERATION:
        raise ValueError(f"enumerate_clans is limited to p + q <= {MAX_ENUMERATION}")
    n = p + q
    found = set()

    def extend(prefix: list, open_labels: int, next_label: int, plus: int, minus: int, npairs: int):
        k = len(prefix)
        if k == n:
            if open_labels == 0 and plus + npairs == p and minus + npairs == q:
                found.add(tuple(prefix))
            return
        remaining = n - k
        if open_labels > remaining:
            return
        if plus + npairs > p or minus + npairs > q:
            return
        prefix.append(PLUS)
        extend(prefix, open_labels, next_label, plus + 1, minus, npairs)
        prefix[-1] = MINUS
        extend(prefix, open_labels, next_label, plus, minus + 1, npairs)
        prefix.pop()
        # open a new pair
        prefix.append(next_label)
        extend(prefix, open_labels + 1, next_label + 1, plus, minus, npairs + 1)
        prefix.pop()
        # close one of the open pairs
        counts = {}
        for c in prefix:
            if isinstance(c, int):
                counts[c] = counts.get(c, 0) + 1
        for label, cnt in counts.items():
            if cnt == 1:
                prefix.append(label)
                extend(prefix, open_labels - 1, next_label, plus, minus, npairs)
                prefix.pop()

    extend([], 0, 1, 0, 0, 0)
    return sorted((Clan(s) for s in found), key=str)


def matchless_clans(p: int, q: int) -> list[Clan]:
    """The binomial(p+q, p) sign strings with p pluses and q minuses."""
    n = p + q
    out = []
    for plus_pos in combinations(range(n), p):
        out.append(Clan(tuple(PLUS if k in plus_pos else MINUS for k in range(n))))
    return out

"""Permutations as one-line words, their arc-diagram statistics, and the
basic structural operators (dihedral symmetries, direct sum, insertion).

Positions and values are 1-based throughout: a permutation of [n] sends
position i to word[i-1]. In the arc diagram, sigma(i) > i draws an upper
arc from i to sigma(i), sigma(i) < i a lower arc, and a fixed point is an
isolated node with no arc.

A pair of positions (i, j) with i < j is a crossing when

    i < j < sigma(i) < sigma(j)        (upper crossing), or
    sigma(i) < sigma(j) <= i < j       (lower crossing),

and a nesting when

    i < j < sigma(j) < sigma(i)        (upper nesting), or
    sigma(j) < sigma(i) <= i < j       (lower nesting).

Note the non-strict bound on the lower variants: the pair (i, sigma^{-1}(i))
with sigma(i) < i < sigma^{-1}(i) counts as a lower crossing.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Permutation",
    "CrossingPair",
    "StatProfile",
    "PartialTransients",
    "SYMMETRIES",
    "from_word",
    "parse_word",
    "format_word",
    "to_json_dict",
    "from_json_dict",
    "all_permutations",
    "crossings",
    "crs",
    "inv",
    "exc",
    "nes",
    "ut",
    "lt",
    "ddes",
    "dasc",
    "occ31_2",
    "stat_profile",
    "apply_symmetry",
    "direct_sum",
    "insert",
    "delete_at",
    "partial_transients",
    "mutated_lower_crossing",
]

# Test-only hook: 1 keeps the correct lower-crossing bound sigma(j) <= i,
# 0 tightens it to sigma(j) < i. See mutated_lower_crossing().
_lower_slack = 1


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] stored as its one-line word.

    The constructor trusts its argument; use :func:`from_word` to validate
    input coming from the outside world.

    >>> p = Permutation((4, 7, 3, 5, 1, 2, 6))
    >>> p.n, p(1), p(5)
    (7, 4, 1)
    """

    word: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """The value at position i (1-based)."""
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self)


EMPTY = Permutation(())


def from_word(values: Iterable[int]) -> Permutation:
    """Validate a word as a bijection of [n] and wrap it.

    Rejects non-integers, out-of-range entries and duplicates, naming the
    offending 1-based position.

    >>> from_word([4, 7, 3, 5, 1, 2, 6]).n
    7
    >>> from_word([])
    Permutation(word=())
    """
    word = tuple(values)
    n = len(word)
    seen = [False] * (n + 1)
    for pos, v in enumerate(word, 1):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"entry {v!r} at position {pos} is not an integer")
        if v < 1 or v > n:
            raise ValueError(f"value {v} at position {pos} is outside 1..{n}")
        if seen[v]:
            raise ValueError(f"duplicate value {v} at position {pos}")
        seen[v] = True
    return Permutation(word)


def parse_word(text: str) -> Permutation:
    """Parse "4735126" (compact, n <= 9) or "4,7,3,5,1,2,6,10,8,9" (comma form)."""
    text = text.strip()
    if not text:
        return EMPTY
    if "," in text:
        return from_word(int(tok) for tok in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation from {text!r}")
    return from_word(int(ch) for ch in text)


def format_word(p: Permutation) -> str:
    """Compact digit string for n <= 9, comma-separated otherwise."""
    if p.n <= 9:
        return "".join(str(v) for v in p.word)
    return ",".join(str(v) for v in p.word)


def to_json_dict(p: Permutation) -> dict:
    return {"n": p.n, "word": list(p.word)}


def from_json_dict(data: dict) -> Permutation:
    p = from_word(data["word"])
    if "n" in data and data["n"] != p.n:
        raise ValueError(f"declared length {data['n']} does not match word of length {p.n}")
    return p


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic word order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


# ---------------------------------------------------------------------------
# Crossings and the statistic profile
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingPair:
    """One crossing (i, j), i < j, tagged upper or lower."""

    i: int
    j: int
    kind: str  # "upper" | "lower"


def crossings(p: Permutation) -> list[CrossingPair]:
    """Every crossing pair of p, sorted lexicographically by (i, j).

    >>> [(c.i, c.j, c.kind) for c in crossings(Permutation((3, 1, 2)))]
    [(2, 3, 'lower')]
    """
    word = p.word
    n = len(word)
    slack = _lower_slack
    found = []
    for i in range(1, n + 1):
        wi = word[i - 1]
        for j in range(i + 1, n + 1):
            wj = word[j - 1]
            if i < j < wi < wj:
                found.append(CrossingPair(i, j, "upper"))
            elif wi < wj and wj < i + slack:  # wj <= i in the unmutated case
                found.append(CrossingPair(i, j, "lower"))
    return found


def crs(p: Permutation) -> int:
    """Number of crossings (fast counter, no pair list)."""
    word = p.word
    n = len(word)
    slack = _lower_slack
    total = 0
    for i0 in range(n):
        wi = word[i0]
        bound = i0 + slack
        for j0 in range(i0 + 1, n):
            wj = word[j0]
            if wi < wj and (j0 + 1 < wi or wj <= bound):
                total += 1
    return total


def inv(p: Permutation) -> int:
    """Number of inversions: pairs i < j with sigma(i) > sigma(j)."""
    word = p.word
    n = len(word)
    return sum(1 for i0 in range(n) for j0 in range(i0 + 1, n) if word[i0] > word[j0])


def exc(p: Permutation) -> int:
    """Number of excedances: positions i with sigma(i) > i."""
    return sum(1 for i0, v in enumerate(p.word) if v > i0 + 1)


def nes(p: Permutation) -> int:
    """Number of nestings (upper and lower, see module docstring)."""
    word = p.word
    n = len(word)
    total = 0
    for i in range(1, n + 1):
        wi = word[i - 1]
        for j in range(i + 1, n + 1):
            wj = word[j - 1]
            if (i < j < wj < wi) or (wj < wi <= i < j):
                total += 1
    return total


def _positions(word: tuple[int, ...]) -> list[int]:
    """pos[v] = position of value v (index 0 unused)."""
    pos = [0] * (len(word) + 1)
    for i0, v in enumerate(word):
        pos[v] = i0 + 1
    return pos


def ut(p: Permutation) -> int:
    """Number of upper transients: integers i with sigma^{-1}(i) < i < sigma(i)."""
    word = p.word
    pos = _positions(word)
    return sum(1 for i in range(1, len(word) + 1) if pos[i] < i < word[i - 1])


def lt(p: Permutation) -> int:
    """Number of lower transients: integers i with sigma(i) < i < sigma^{-1}(i)."""
    word = p.word
    pos = _positions(word)
    return sum(1 for i in range(1, len(word) + 1) if word[i - 1] < i < pos[i])


def ddes(p: Permutation) -> int:
    """Number of double descents: i with sigma(i) > sigma(i+1) > sigma(i+2)."""
    w = p.word
    return sum(1 for i in range(len(w) - 2) if w[i] > w[i + 1] > w[i + 2])


def dasc(p: Permutation) -> int:
    """Number of double ascents: i with sigma(i) < sigma(i+1) < sigma(i+2)."""
    w = p.word
    return sum(1 for i in range(len(w) - 2) if w[i] < w[i + 1] < w[i + 2])


def occ31_2(p: Permutation) -> int:
    """Occurrences of the generalized pattern 31-2.

    Counts triples of positions (a, a+1, b) with b > a+1 and
    sigma(a+1) < sigma(b) < sigma(a): the "31" part must be adjacent, the
    "2" strictly later.
    """
    w = p.word
    n = len(w)
    total = 0
    for a0 in range(n - 2):
        hi = w[a0]
        lo = w[a0 + 1]
        if lo >= hi:
            continue
        total += sum(1 for b0 in range(a0 + 2, n) if lo < w[b0] < hi)
    return total


@dataclass(frozen=True)
class StatProfile:
    """The nine statistics of one permutation.

    Satisfies crs == inv - exc - 2 * nes on every permutation.
    """

    crs: int
    inv: int
    exc: int
    nes: int
    ut: int
    lt: int
    ddes: int
    dasc: int
    occ31_2: int


def stat_profile(p: Permutation) -> StatProfile:
    """All nine statistics in one O(n^2) pass family.

    Each count is also independently recomputable through the standalone
    functions of this module; the two routes agree (and the test suite
    asserts so).
    """
    word = p.word
    n = len(word)
    slack = _lower_slack
    crs_ = inv_ = nes_ = exc_ = 0
    for i0 in range(n):
        wi = word[i0]
        if wi > i0 + 1:
            exc_ += 1
        bound = i0 + slack
        for j0 in range(i0 + 1, n):
            wj = word[j0]
            if wi < wj:
                if j0 + 1 < wi or wj <= bound:
                    crs_ += 1
            else:
                inv_ += 1
                if j0 + 1 < wj or wi <= i0 + 1:
                    nes_ += 1
    pos = _positions(word)
    ut_ = lt_ = 0
    for v in range(1, n + 1):
        image = word[v - 1]
        pre = pos[v]
        if pre < v < image:
            ut_ += 1
        elif image < v < pre:
            lt_ += 1
    ddes_ = dasc_ = 0
    for i0 in range(n - 2):
        if word[i0] > word[i0 + 1] > word[i0 + 2]:
            ddes_ += 1
        elif word[i0] < word[i0 + 1] < word[i0 + 2]:
            dasc_ += 1
    return StatProfile(crs_, inv_, exc_, nes_, ut_, lt_, ddes_, dasc_, occ31_2(p))


# ---------------------------------------------------------------------------
# Dihedral symmetries
# ---------------------------------------------------------------------------

SYMMETRIES = ("id", "r", "c", "i", "rc", "ri", "ci", "rci")


def _reverse(word: tuple[int, ...]) -> tuple[int, ...]:
    return word[::-1]


def _complement(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    return tuple(n + 1 - v for v in word)


def _invert(word: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(word)
    for i0, v in enumerate(word):
        out[v - 1] = i0 + 1
    return tuple(out)


_LETTER = {"r": _reverse, "c": _complement, "i": _invert}


def apply_symmetry(p: Permutation, s: str) -> Permutation:
    """Apply one of the eight dihedral symmetries by name.

    A composite name such as "rci" means the composition r . c . i, i.e.
    the rightmost letter acts first.

    >>> str(apply_symmetry(Permutation((4, 1, 3, 5, 7, 6, 2)), "r"))
    '2675314'
    """
    if s not in SYMMETRIES:
        raise ValueError(f"unknown symmetry {s!r}; expected one of {', '.join(SYMMETRIES)}")
    word = p.word
    if s != "id":
        for letter in reversed(s):
            word = _LETTER[letter](word)
    return Permutation(word)


# ---------------------------------------------------------------------------
# Direct sum and insertion
# ---------------------------------------------------------------------------


def direct_sum(a: Permutation, b: Permutation) -> Permutation:
    """Concatenate a with b shifted up by |a|.

    Additive on crossings: crs(a (+) b) == crs(a) + crs(b).

    >>> str(direct_sum(Permutation((1, 4, 3, 2)), Permutation((4, 2, 3, 1))))
    '14328675'
    """
    shift = a.n
    return Permutation(a.word + tuple(v + shift for v in b.word))


def insert(p: Permutation, a: int, b: int) -> Permutation:
    """The insertion sigma^(a,b): bump every value >= b up by one, then
    splice b in at position a. Result has length |p| + 1.

    >>> str(insert(Permutation((3, 1, 4, 2)), 2, 3))
    '43152'
    """
    n = p.n
    if not 1 <= a <= n + 1:
        raise ValueError(f"insertion position {a} is outside 1..{n + 1}")
    if not 1 <= b <= n + 1:
        raise ValueError(f"insertion value {b} is outside 1..{n + 1}")
    bumped = tuple(v + 1 if v >= b else v for v in p.word)
    return Permutation(bumped[: a - 1] + (b,) + bumped[a - 1 :])


def delete_at(p: Permutation, a: int) -> Permutation:
    """Remove position a and close the value gap; inverse of insert:
    delete_at(insert(p, a, b), a) == p."""
    n = p.n
    if not 1 <= a <= n:
        raise ValueError(f"deletion position {a} is outside 1..{n}")
    b = p.word[a - 1]
    rest = p.word[: a - 1] + p.word[a:]
    return Permutation(tuple(v - 1 if v > b else v for v in rest))


class PartialTransients(NamedTuple):
    ut_minus: int
    lt_minus: int
    alpha: int


def partial_transients(p: Permutation, k: int) -> PartialTransients:
    """Transient counts below k plus the displacement count alpha_k.

    ut_minus counts upper transients i < k, lt_minus lower transients
    i < k, and alpha counts positions i >= k holding a value < k. At
    k = n and k = n + 1 the transient counts equal ut(p) and lt(p);
    alpha_{n+1} = 0 and alpha_n = 1 unless sigma(n) = n.
    """
    n = p.n
    if not 1 <= k <= n + 1:
        raise ValueError(f"cutoff {k} is outside 1..{n + 1}")
    word = p.word
    pos = _positions(word)
    ut_m = lt_m = 0
    for i in range(1, min(k, n + 1)):
        image = word[i - 1]
        pre = pos[i]
        if pre < i < image:
            ut_m += 1
        elif image < i < pre:
            lt_m += 1
    alpha = sum(1 for i0 in range(k - 1, n) if word[i0] < k)
    return PartialTransients(ut_m, lt_m, alpha)


@contextmanager
def mutated_lower_crossing():
    """Deliberately tighten the lower-crossing bound from sigma(j) <= i to
    sigma(j) < i for the duration of the block.

    Test-only hook: the verification harness must notice this corruption
    (crossing-based checks flip to fail), proving it is not vacuous.
    """
    global _lower_slack
    _lower_slack = 0
    try:
        yield
    finally:
        _lower_slack = 1

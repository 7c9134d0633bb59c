"""Classical pattern containment, avoidance classes, and their enumeration.

A pattern set is a canonical (sorted, duplicate-free) collection of
forbidden patterns. Enumeration of an avoidance class runs position by
position, placing values in increasing order, so the stream always comes
out in lexicographic word order. Sets of length-3 patterns get incremental
violation pruning; anything else falls back to filtering all n! words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import EMPTY, Permutation, apply_symmetry, format_word, from_word, parse_word

__all__ = [
    "PatternSet",
    "ClassSelector",
    "ALL",
    "pattern_set",
    "parse_patterns",
    "singletons3",
    "pairs3",
    "occurrences",
    "contains",
    "avoids",
    "transform_set",
    "inverse_set",
    "first_value_preimage_bounds",
    "enumerate_class",
]


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(ranks[v] for v in values)


def occurrences(p: Permutation, tau: Permutation) -> int:
    """Number of subsequences of p order-isomorphic to tau.

    >>> occurrences(from_word([4, 1, 6, 2, 3, 7, 5]), from_word([3, 1, 2]))
    5
    """
    m = tau.n
    if m < 1:
        raise ValueError("pattern must be nonempty")
    if m > p.n:
        return 0
    pat = tau.word
    return sum(1 for sub in itertools.combinations(p.word, m) if _standardize(sub) == pat)


def contains(p: Permutation, tau: Permutation) -> bool:
    """True iff p has at least one occurrence of tau (early exit)."""
    m = tau.n
    if m > p.n:
        return False
    pat = tau.word
    return any(_standardize(sub) == pat for sub in itertools.combinations(p.word, m))


@dataclass(frozen=True)
class PatternSet:
    """A set of forbidden patterns, canonically ordered by word.

    Patterns must have length >= 2, and no pattern may contain another
    (a redundant pattern would silently change the mins and maxes the
    recurrence guards read, so it is refused outright).
    """

    patterns: tuple[Permutation, ...] = ()

    def __post_init__(self):
        unique = sorted(set(self.patterns), key=lambda t: t.word)
        for t in unique:
            if t.n < 2:
                raise ValueError(f"pattern {format_word(t)!r} is shorter than 2")
        for a in unique:
            for b in unique:
                if a is not b and contains(a, b):
                    raise ValueError(
                        f"redundant pattern set: {format_word(a)} contains {format_word(b)}"
                    )
        object.__setattr__(self, "patterns", tuple(unique))

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __str__(self) -> str:
        if not self.patterns:
            return "-"
        return ",".join(format_word(t) for t in self.patterns)


EMPTY_SET = PatternSet()


def pattern_set(*words) -> PatternSet:
    """Build a PatternSet from words given as strings or integer sequences."""
    perms = []
    for w in words:
        if isinstance(w, Permutation):
            perms.append(w)
        elif isinstance(w, str):
            perms.append(parse_word(w))
        else:
            perms.append(from_word(w))
    return PatternSet(tuple(perms))


def parse_patterns(text: str) -> PatternSet:
    """Parse a comma-separated list of compact words; "-" is the empty set."""
    text = text.strip()
    if text == "-" or text == "":
        return EMPTY_SET
    return pattern_set(*text.split(","))


def singletons3() -> list[PatternSet]:
    """The six singleton pattern sets over S_3, in lexicographic order."""
    return [pattern_set(w) for w in itertools.permutations((1, 2, 3))]


def pairs3() -> list[PatternSet]:
    """All fifteen two-element pattern sets over S_3."""
    perms = [Permutation(w) for w in itertools.permutations((1, 2, 3))]
    return [PatternSet((a, b)) for a, b in itertools.combinations(perms, 2)]


def avoids(p: Permutation, T: PatternSet) -> bool:
    """True iff p contains no pattern of T; vacuously true for the empty set."""
    return not any(contains(p, tau) for tau in T.patterns)


def transform_set(T: PatternSet, s: str) -> PatternSet:
    """Apply a dihedral symmetry to every pattern of the set."""
    return PatternSet(tuple(apply_symmetry(t, s) for t in T.patterns))


def inverse_set(T: PatternSet) -> PatternSet:
    return transform_set(T, "i")


def first_value_preimage_bounds(T: PatternSet) -> tuple[int, int]:
    """Min and max position of the value 1 across the patterns.

    All patterns must share one length (the recurrence guards compare the
    bounds against that length).
    """
    if not T.patterns:
        raise ValueError("the empty pattern set has no preimage bounds")
    lengths = {t.n for t in T.patterns}
    if len(lengths) > 1:
        raise ValueError(f"mixed pattern lengths {sorted(lengths)}")
    positions = [t.word.index(1) + 1 for t in T.patterns]
    return (min(positions), max(positions))


# ---------------------------------------------------------------------------
# Class selectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassSelector:
    """Restriction of S_n: everything, sigma(k) = 1, or sigma(n) = k.

    The index k may be symbolic ("n" or "n-1"), resolved per row length.
    """

    kind: str = "all"  # "all" | "first1" | "last"
    k: int | str | None = None

    def __post_init__(self):
        if self.kind not in ("all", "first1", "last"):
            raise ValueError(f"unknown selector kind {self.kind!r}")
        if self.kind == "all":
            if self.k is not None:
                raise ValueError("the 'all' selector takes no index")
        elif isinstance(self.k, str):
            if self.k not in ("n", "n-1"):
                raise ValueError(f"symbolic index must be 'n' or 'n-1', got {self.k!r}")
        elif not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError("selector index must be an integer or 'n'/'n-1'")

    @classmethod
    def first_value_one_at(cls, k) -> "ClassSelector":
        return cls("first1", k)

    @classmethod
    def last_position_value(cls, k) -> "ClassSelector":
        return cls("last", k)

    @classmethod
    def parse(cls, text: str) -> "ClassSelector":
        text = text.strip()
        if text == "all":
            return ALL
        for prefix, kind in (("first1@", "first1"), ("last@", "last")):
            if text.startswith(prefix):
                raw = text[len(prefix):]
                if raw in ("n", "n-1"):
                    return cls(kind, raw)
                return cls(kind, int(raw))
        raise ValueError(f"cannot parse selector {text!r}; use all, first1@K or last@K")

    def resolve(self, n: int) -> "ClassSelector":
        """Concrete selector for row length n; validates 1 <= k <= n."""
        if self.kind == "all":
            return ALL
        k = self.k
        if k == "n":
            k = n
        elif k == "n-1":
            k = n - 1
        if not isinstance(k, int) or not 1 <= k <= n:
            raise ValueError(f"selector index {self.k!r} resolves to {k}, outside 1..{n}")
        return ClassSelector(self.kind, k)

    def matches(self, word: tuple[int, ...]) -> bool:
        """Membership test for a concrete selector."""
        if self.kind == "all":
            return True
        if not isinstance(self.k, int):
            raise ValueError("selector must be resolved before matching")
        if self.kind == "first1":
            return word[self.k - 1] == 1
        return word[-1] == self.k

    def __str__(self) -> str:
        if self.kind == "all":
            return "all"
        return f"{self.kind}@{self.k}"


ALL = ClassSelector()


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_class(n: int, T: PatternSet = EMPTY_SET, sel: ClassSelector = ALL) -> Iterator[Permutation]:
    """Yield the avoidance class {sigma in S_n : avoids(sigma, T), sel holds},
    each permutation once, in lexicographic word order.

    >>> [str(p) for p in enumerate_class(3, pattern_set("321", "231"))]
    ['123', '132', '213', '312']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    sel = sel.resolve(n)
    if not T.patterns:
        for w in itertools.permutations(range(1, n + 1)):
            if sel.matches(w):
                yield Permutation(w)
        return
    if all(t.n == 3 for t in T.patterns):
        for w in _backtrack_words(n, frozenset(t.word for t in T.patterns), sel):
            yield Permutation(w)
        return
    # Portable fallback: filter the full symmetric group.
    for w in itertools.permutations(range(1, n + 1)):
        if sel.matches(w) and avoids(Permutation(w), T):
            yield Permutation(w)


def _backtrack_words(n: int, pats: frozenset, sel: ClassSelector) -> Iterator[tuple[int, ...]]:
    """Backtracking enumerator specialised to length-3 pattern sets.

    Values are placed left to right in increasing order. A candidate v at
    position d+1 is rejected exactly when some pair of earlier entries
    (w_i, w_j) makes (w_i, w_j, v) order-isomorphic to a forbidden
    pattern. For four of the six patterns that test reduces to comparing
    v against one running scalar; the two "middle value last" patterns
    scan the prefix once, using running prefix minima and maxima.
    """
    p123 = (1, 2, 3) in pats
    p132 = (1, 3, 2) in pats
    p213 = (2, 1, 3) in pats
    p231 = (2, 3, 1) in pats
    p312 = (3, 1, 2) in pats
    p321 = (3, 2, 1) in pats
    inf = n + 1

    sel_first1 = sel.kind == "first1"
    sel_last = sel.kind == "last"
    sel_k = sel.k if sel.kind != "all" else 0

    word: list[int] = []
    used = [False] * (n + 1)
    # Depth-indexed running state for the current prefix word[:d]:
    #   minpre[d] / maxpre[d]: min / max of the prefix,
    #   asc_top_min[d]:  min top of an ascending pair  -> 123 ends at v > it
    #   asc_bot_max[d]:  max bottom of an ascending pair -> 231 ends at v < it
    #   desc_bot_max[d]: max bottom of a descending pair -> 321 ends at v < it
    #   desc_top_min[d]: min top of a descending pair  -> 213 ends at v > it
    minpre = [inf] * (n + 1)
    maxpre = [0] * (n + 1)
    asc_top_min = [inf] * (n + 1)
    asc_bot_max = [0] * (n + 1)
    desc_bot_max = [0] * (n + 1)
    desc_top_min = [inf] * (n + 1)

    def rec(d: int) -> Iterator[tuple[int, ...]]:
        if d == n:
            yield tuple(word)
            return
        pos = d + 1
        a123 = asc_top_min[d]
        a231 = asc_bot_max[d]
        a321 = desc_bot_max[d]
        a213 = desc_top_min[d]
        for v in range(1, n + 1):
            if used[v]:
                continue
            if sel_first1:
                if pos == sel_k:
                    if v != 1:
                        continue
                elif v == 1:
                    continue
            elif sel_last:
                if pos == n:
                    if v != sel_k:
                        continue
                elif v == sel_k:
                    continue
            if p123 and v > a123:
                continue
            if p213 and v > a213:
                continue
            if p231 and v < a231:
                continue
            if p321 and v < a321:
                continue
            if p132 and any(word[j] > v > minpre[j] for j in range(1, d)):
                continue
            if p312 and any(word[j] < v < maxpre[j] for j in range(1, d)):
                continue
            # Extend the running state with v.
            pred = 0
            succ = inf
            for w in word:
                if w < v:
                    if w > pred:
                        pred = w
                elif w < succ:
                    succ = w
            asc_top_min[d + 1] = min(a123, v) if pred else a123
            asc_bot_max[d + 1] = max(a231, pred)
            desc_bot_max[d + 1] = max(a321, v) if succ < inf else a321
            desc_top_min[d + 1] = min(a213, succ)
            minpre[d + 1] = v if v < minpre[d] else minpre[d]
            maxpre[d + 1] = v if v > maxpre[d] else maxpre[d]
            used[v] = True
            word.append(v)
            yield from rec(d + 1)
            word.pop()
            used[v] = False

    yield from rec(0)

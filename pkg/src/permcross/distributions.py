"""Distribution polynomials of permutation statistics over avoidance
classes, coefficient triangles, and their export formats.

distribution(n, T, sel, st) is the polynomial sum of q^st(sigma) over the
selected class. Results are memoized per process on (n, T, selector,
statistic); an optional JSON cache file carries them across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import perm_core
from .patterns import ALL, ClassSelector, PatternSet, enumerate_class, parse_patterns
from .qpoly import QPolynomial, QSeries

__all__ = [
    "STATISTICS",
    "Triangle",
    "distribution",
    "series_of",
    "triangle",
    "export_triangle",
    "load_cache",
    "save_cache",
    "clear_caches",
    "reference_triangles",
    "reference_triangle",
]

STATISTICS = {
    "crs": perm_core.crs,
    "inv": perm_core.inv,
    "exc": perm_core.exc,
    "nes": perm_core.nes,
    "ut": perm_core.ut,
    "lt": perm_core.lt,
    "ddes": perm_core.ddes,
    "dasc": perm_core.dasc,
    "occ31_2": perm_core.occ31_2,
}

# Cross-run cache, loaded/saved explicitly; keys are "n|T|sel|st" strings.
_persistent: dict[str, list[int]] = {}


def _cache_key(n: int, T: PatternSet, sel: ClassSelector, st: str) -> str:
    return f"{n}|{T}|{sel}|{st}"


@lru_cache(maxsize=None)
def _distribution(n: int, T: PatternSet, sel: ClassSelector, st: str) -> QPolynomial:
    key = _cache_key(n, T, sel, st)
    cached = _persistent.get(key)
    if cached is not None:
        return QPolynomial(tuple(cached))
    fn = STATISTICS[st]
    counts: dict[int, int] = {}
    for p in enumerate_class(n, T, sel):
        v = fn(p)
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        poly = QPolynomial(())
    else:
        coeffs = [0] * (max(counts) + 1)
        for v, c in counts.items():
            coeffs[v] = c
        poly = QPolynomial(tuple(coeffs))
    _persistent[key] = list(poly.coeffs)
    return poly


def distribution(n: int, T: PatternSet = None, sel: ClassSelector = ALL, st: str = "crs") -> QPolynomial:
    """Sum of q^st(sigma) over the selected avoidance class of S_n."""
    if T is None:
        T = PatternSet()
    if st not in STATISTICS:
        raise ValueError(f"unknown statistic {st!r}; expected one of {', '.join(sorted(STATISTICS))}")
    return _distribution(n, T, sel.resolve(n), st)


def series_of(T: PatternSet, st: str = "crs", order: int = 10) -> QSeries:
    """The series whose z^n coefficient is distribution(n, T, all, st).

    The z^0 coefficient is the constant 1 (the empty permutation).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    return QSeries(tuple(distribution(n, T, ALL, st) for n in range(order + 1)))


@dataclass(frozen=True)
class Triangle:
    """Coefficient rows of a distribution for n = n_min..n_max.

    Row n, column k = number of class members with statistic value k;
    trailing zeros are trimmed, interior zeros kept. Row sums equal the
    class cardinalities (evaluation at q = 1).
    """

    n_min: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.rows) - 1


def triangle(
    T: PatternSet,
    sel: ClassSelector = ALL,
    st: str = "crs",
    n_min: int = 1,
    n_max: int = 8,
) -> Triangle:
    """Stack distribution coefficient rows for n = n_min..n_max.

    Symbolic selector indices ("n", "n-1") are resolved per row.
    """
    if n_min > n_max:
        raise ValueError(f"empty row range {n_min}..{n_max}")
    rows = tuple(tuple(distribution(n, T, sel, st).coeffs) for n in range(n_min, n_max + 1))
    return Triangle(n_min, rows)


def export_triangle(t: Triangle, format: str = "csv", bfile_offset: int = 1) -> str:
    """Render a triangle as csv, json, or an OEIS-style b-file.

    The b-file reads the triangle row by row, numbering entries from
    bfile_offset.
    """
    if format == "csv":
        return "".join(",".join(str(c) for c in row) + "\n" for row in t.rows)
    if format == "json":
        return json.dumps([list(row) for row in t.rows])
    if format == "bfile":
        lines = []
        index = bfile_offset
        for row in t.rows:
            for c in row:
                lines.append(f"{index} {c}\n")
                index += 1
        return "".join(lines)
    raise ValueError(f"unknown export format {format!r}")


def load_cache(path: str) -> int:
    """Merge a JSON cache file into the in-process distribution cache."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("cache file must hold a JSON object")
    count = 0
    for key, coeffs in data.items():
        _persistent[key] = [int(c) for c in coeffs]
        count += 1
    return count


def save_cache(path: str) -> int:
    """Write every distribution computed so far to a JSON cache file."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_persistent, fh, sort_keys=True)
    return len(_persistent)


def clear_caches() -> None:
    _distribution.cache_clear()
    _persistent.clear()


# ---------------------------------------------------------------------------
# Embedded reference triangles
# ---------------------------------------------------------------------------


def reference_triangles() -> dict:
    """The embedded reference rows, keyed by OEIS id.

    Every row was produced by this package's own enumerator when the
    fixture was built; the values are regression pins, not an external
    authority.
    """
    text = resources.files("permcross").joinpath("data/oeis_triangles.json").read_text("utf-8")
    return json.loads(text)


def reference_triangle(oeis_id: str) -> Triangle:
    entry = reference_triangles()[oeis_id]
    return Triangle(entry["start_n"], tuple(tuple(r) for r in entry["rows"]))


def reference_spec(oeis_id: str) -> tuple[PatternSet, ClassSelector, str]:
    """The (pattern set, selector, statistic) that generates a reference id."""
    entry = reference_triangles()[oeis_id]
    return (
        parse_patterns(entry["avoid"]),
        ClassSelector.parse(entry["selector"]),
        entry["statistic"],
    )

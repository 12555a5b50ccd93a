"""QSPR pipeline: join molecular graphs to measured properties, fit the
one-descriptor linear model, and scan the power-mean exponent for the best
Pearson correlation.

The model is ``property ~ c1 * mSO_a(G) + c2`` per property.  For each
candidate exponent the pipeline reports Pearson's r, the slope/intercept,
the standard error of estimate, the F statistic ``r^2 (n-2) / (1-r^2)`` and
its upper-tail significance under F(1, n-2).  The significance is computed
with an in-package regularized incomplete beta (continued fraction,
absolute tolerance 1e-12, at most 300 iterations) so that p-values at the
1e-15 scale are meaningful.

Experimental property values are user-supplied (see scripts/
fetch_octane_properties.py for the schema); the package ships no
measurement data.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import IO, NamedTuple, Sequence

from .graphs import Graph, NamedGraph
from .indices import ALPHA_MINUS_INF, ALPHA_PLUS_INF, Alpha, ZERO_LIMIT, mean_sombor

_BETA_TOL = 1e-12
_BETA_MAX_ITER = 300
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class DegeneratePredictorError(ValueError):
    """The x column is constant; the linear model is undefined."""


# ---------------------------------------------------------------------------
# Regularized incomplete beta and the F-test significance
# ---------------------------------------------------------------------------

def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_TOL:
            return h
    raise RuntimeError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError("beta parameters must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def f_significance(f: float, df1: int, df2: int) -> float:
    """Upper-tail probability P(F_{df1,df2} >= f)."""
    if df1 < 1 or df2 < 1:
        raise ValueError("degrees of freedom must be positive")
    if f <= 0.0:
        return 1.0
    if math.isinf(f):
        return 0.0
    x = df2 / (df2 + df1 * f)
    return regularized_incomplete_beta(x, df2 / 2.0, df1 / 2.0)


# ---------------------------------------------------------------------------
# Ordinary least squares with the Table-3 statistics
# ---------------------------------------------------------------------------

class LinearFit(NamedTuple):
    c1: float  # slope
    c2: float  # intercept
    r: float
    se: float
    f: float
    sf: float


def fit_linear(x: Sequence[float], y: Sequence[float]) -> LinearFit:
    """OLS fit y ~ c1 x + c2 with Pearson r, standard error of estimate,
    F statistic and its significance.

    Needs n >= 3 and a non-constant x.  A perfect fit (|r| = 1) yields
    se = 0, f = inf, sf = 0.
    """
    n = len(x)
    if len(y) != n:
        raise ValueError("x and y must have the same length")
    if n < 3:
        raise ValueError(f"need at least 3 samples, got {n}")
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    sxx = math.fsum((xi - mx) ** 2 for xi in x)
    syy = math.fsum((yi - my) ** 2 for yi in y)
    sxy = math.fsum((xi - mx) * (yi - my) for xi, yi in zip(x, y))
    if sxx <= 0.0:
        raise DegeneratePredictorError("predictor column is constant")
    c1 = sxy / sxx
    c2 = my - c1 * mx
    if syy <= 0.0:
        # constant response: zero slope fits exactly, correlation undefined;
        # report r = 0 with a perfect (zero-residual) fit
        return LinearFit(c1=0.0, c2=my, r=0.0, se=0.0, f=0.0, sf=1.0)
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    sse = max(syy - c1 * sxy, 0.0)
    se = math.sqrt(sse / (n - 2))
    if abs(r) >= 1.0:
        f = math.inf
    else:
        f = r * r * (n - 2) / (1.0 - r * r)
    return LinearFit(c1=c1, c2=c2, r=r, se=se, f=f, sf=f_significance(f, 1, n - 2))


# ---------------------------------------------------------------------------
# Dataset
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QsprRecord:
    name: str
    graph: Graph
    properties: dict[str, float]


@dataclass(frozen=True)
class QsprDataset:
    """Named molecules joined to measured property columns.

    A property is usable only if at least 3 records carry a value for it;
    records missing a value are dropped pairwise per property.
    """

    records: tuple[QsprRecord, ...]
    property_names: tuple[str, ...]

    def count(self, prop: str) -> int:
        return sum(1 for rec in self.records if prop in rec.properties)

    def is_usable(self, prop: str) -> bool:
        return prop in self.property_names and self.count(prop) >= 3

    def usable_properties(self) -> list[str]:
        return [p for p in self.property_names if self.is_usable(p)]

    def column(self, prop: str) -> list[QsprRecord]:
        if not self.is_usable(prop):
            raise ValueError(f"property {prop!r} is missing or has fewer than 3 values")
        return [rec for rec in self.records if prop in rec.properties]


def load_dataset(graphs: Sequence[NamedGraph], properties_csv: str) -> QsprDataset:
    """Join named graphs with a properties CSV.

    CSV schema: header ``name,<prop1>,<prop2>,...``; each data row names a
    supplied graph and gives numeric or empty (= missing) cells.  Unknown
    molecule names, duplicate names, and non-numeric cells are errors.
    """
    by_name: dict[str, Graph] = {}
    for ng in graphs:
        if ng.name in by_name:
            raise ValueError(f"duplicate graph name {ng.name!r}")
        if ng.graph.vertex_count < 1 or ng.graph.edge_count < 1:
            raise ValueError(f"graph {ng.name!r} has no edges")
        by_name[ng.name] = ng.graph

    reader = csv.reader(io.StringIO(properties_csv))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("properties CSV is empty")
    if not header or header[0].strip().lower() != "name":
        raise ValueError("properties CSV header must start with 'name'")
    prop_names = tuple(h.strip() for h in header[1:])
    if len(set(prop_names)) != len(prop_names):
        raise ValueError("duplicate property column in CSV header")

    values: dict[str, dict[str, float]] = {}
    for rownum, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        name = row[0].strip()
        if name not in by_name:
            raise ValueError(f"row {rownum}: unknown molecule name {name!r}")
        if name in values:
            raise ValueError(f"row {rownum}: duplicate molecule name {name!r}")
        props: dict[str, float] = {}
        for prop, cell in zip(prop_names, row[1:]):
            cell = cell.strip()
            if not cell:
                continue
            try:
                props[prop] = float(cell)
            except ValueError:
                raise ValueError(f"row {rownum}: non-numeric cell {cell!r} for {prop}")
        values[name] = props

    records = tuple(
        QsprRecord(name=ng.name, graph=ng.graph, properties=values.get(ng.name, {}))
        for ng in graphs
    )
    return QsprDataset(records=records, property_names=prop_names)


# ---------------------------------------------------------------------------
# Per-alpha regression and the exponent scan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegressionReport:
    """One Table-3 style row: the fitted model for a property at one
    exponent."""

    property: str
    alpha: Alpha
    r: float
    c1: float
    c2: float
    se: float
    f: float
    sf: float
    n: int


def qspr_at_alpha(ds: QsprDataset, prop: str, a: Alpha) -> RegressionReport:
    """Fit the linear model of one property against mSO at one exponent."""
    recs = ds.column(prop)
    x = [mean_sombor(rec.graph, a) for rec in recs]
    y = [rec.properties[prop] for rec in recs]
    fit = fit_linear(x, y)
    return RegressionReport(
        property=prop,
        alpha=a,
        r=fit.r,
        c1=fit.c1,
        c2=fit.c2,
        se=fit.se,
        f=fit.f,
        sf=fit.sf,
        n=len(x),
    )


@dataclass(frozen=True)
class AlphaGrid:
    """Finite exponent lattice lo..hi in uniform steps, always augmented
    with the zero-limit and both infinite tags."""

    lo: float = -10.0
    hi: float = 10.0
    step: float = 0.01

    def __post_init__(self) -> None:
        if self.step <= 0 or self.lo > self.hi:
            raise ValueError("need step > 0 and lo <= hi")

    def points(self) -> list[Alpha]:
        k_lo = math.ceil(round(self.lo / self.step, 9))
        k_hi = math.floor(round(self.hi / self.step, 9))
        finite = [
            Alpha.finite(round(k * self.step, 12)) for k in range(k_lo, k_hi + 1) if k != 0
        ]
        pts = [ALPHA_MINUS_INF, ZERO_LIMIT, ALPHA_PLUS_INF] + finite
        pts.sort(key=lambda a: (a.order_key, a.kind))
        return pts


def _alpha_at(value: float) -> Alpha:
    return ZERO_LIMIT if value == 0.0 else Alpha.finite(value)


def _check_monotone_columns(xs: list[list[float]]) -> None:
    # mSO is nondecreasing in the exponent, so the descriptor vectors must
    # be componentwise sorted along the ascending grid
    for prev, cur in zip(xs, xs[1:]):
        for p, c in zip(prev, cur):
            if c < p - 1e-9 * (1.0 + abs(p)):
                raise RuntimeError("descriptor vectors are not monotone in alpha")


def alpha_scan(
    ds: QsprDataset,
    prop: str,
    grid: AlphaGrid | None = None,
    jobs: int = 1,
) -> tuple[RegressionReport, list[tuple[Alpha, float]]]:
    """Find the exponent maximizing |r| for one property.

    Evaluates the grid (tags included), refines around the best finite
    point with a golden-section search to bracket width 1e-3, then picks
    the best of {refined finite, 0-limit, -inf, +inf}.  Ties prefer the
    smaller |alpha| and then the 0-limit.  Returns the winning report and
    the (alpha, r) curve over the grid.
    """
    grid = grid or AlphaGrid()
    recs = ds.column(prop)
    y = [rec.properties[prop] for rec in recs]
    points = grid.points()
    required = {ZERO_LIMIT, ALPHA_MINUS_INF, ALPHA_PLUS_INF}
    if not required.issubset(points):
        raise ValueError("alpha grid must include the 0-limit and both infinities")

    def x_vector(a: Alpha) -> list[float]:
        return [mean_sombor(rec.graph, a) for rec in recs]

    def r_at(a: Alpha) -> float:
        return fit_linear(x_vector(a), y).r

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            xs = list(pool.map(x_vector, points))
    else:
        xs = [x_vector(a) for a in points]
    _check_monotone_columns(xs)
    curve = [(a, fit_linear(x, y).r) for a, x in zip(points, xs)]

    finite_curve = [(a, r) for a, r in curve if a.is_finite]
    best_finite, best_finite_r = min(
        finite_curve, key=lambda ar: (-abs(ar[1]), abs(ar[0].value))
    )
    lo = max(best_finite.value - grid.step, grid.lo)
    hi = min(best_finite.value + grid.step, grid.hi)
    refined = _golden_section_max(
        lambda v: abs(r_at(_alpha_at(v))),
        lo,
        hi,
        tol=1e-3,
        seed=(best_finite.value, abs(best_finite_r)),
    )
    refined_alpha = _alpha_at(refined)
    candidates = [refined_alpha, ZERO_LIMIT, ALPHA_MINUS_INF, ALPHA_PLUS_INF]
    tag_rank = {"zero-limit": 0, "finite": 1, "-inf": 2, "+inf": 3}
    scored = [(a, r_at(a)) for a in candidates]
    best_alpha, _ = min(
        scored,
        key=lambda ar: (
            -abs(ar[1]),
            abs(ar[0].order_key),
            tag_rank[ar[0].kind],
        ),
    )
    return qspr_at_alpha(ds, prop, best_alpha), curve


def _golden_section_max(
    fun, lo: float, hi: float, tol: float, seed: tuple[float, float] | None = None
) -> float:
    """Golden-section search for the maximizer of fun on [lo, hi].

    Returns the best point actually evaluated (optionally seeded with an
    already-known (x, fun(x)) pair), so refinement never loses to the
    starting grid point.
    """
    a, b = float(lo), float(hi)
    best_x, best_f = seed if seed is not None else ((a + b) / 2.0, -math.inf)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = fun(c), fun(d)
    while True:
        if fc > best_f:
            best_x, best_f = c, fc
        if fd > best_f:
            best_x, best_f = d, fd
        if b - a <= tol:
            return best_x
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fun(d)


# ---------------------------------------------------------------------------
# Report output
# ---------------------------------------------------------------------------

REPORT_HEADER = ("property", "alpha", "r", "c2", "c1", "SE", "F", "SF")


def write_reports_csv(reports: Sequence[RegressionReport], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for rep in reports:
        writer.writerow(
            [
                rep.property,
                rep.alpha.token(),
                format(rep.r, ".17g"),
                format(rep.c2, ".17g"),
                format(rep.c1, ".17g"),
                format(rep.se, ".17g"),
                format(rep.f, ".17g"),
                format(rep.sf, ".17g"),
            ]
        )


def reports_to_json(reports: Sequence[RegressionReport]) -> str:
    rows = [
        {
            "property": rep.property,
            "alpha": rep.alpha.token(),
            "r": rep.r,
            "c2": rep.c2,
            "c1": rep.c1,
            "se": rep.se,
            "f": rep.f,
            "sf": rep.sf,
            "n": rep.n,
        }
        for rep in reports
    ]
    return json.dumps(rows, indent=2) + "\n"


def write_curve_csv(curve: Sequence[tuple[Alpha, float]], stream: IO[str]) -> None:
    """Two-column CSV (alpha, r); tagged exponents use their sentinels."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("alpha", "r"))
    for a, r in curve:
        writer.writerow([a.token(), format(r, ".17g")])

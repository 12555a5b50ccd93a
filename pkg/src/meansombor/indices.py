"""Power-mean kernel over the extended exponent line and the edge-sum index
family built on it.

The central object is the two-argument power mean
``PM_a(x, y) = ((x^a + y^a)/2)^(1/a)`` together with its three limit
regimes: the geometric mean (a -> 0), the minimum (a -> -inf) and the
maximum (a -> +inf).  Summing PM over the endpoint degrees of every edge
gives the mean Sombor index; fixing the exponent recovers a family of
classical degree-based indices (inverse sum indeg, reciprocal Randic,
first Zagreb, Sombor, the (a,b)-KA family, and the min/max edge sums).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

from .graphs import Graph

FINITE = "finite"
ZERO = "zero-limit"
PLUS_INF = "+inf"
MINUS_INF = "-inf"


@total_ordering
@dataclass(frozen=True)
class Alpha:
    """Exponent of the power mean: a nonzero finite real or one of the
    three explicit limit tags.

    Tags are never inferred from the magnitude of a finite value; the
    caller chooses the regime.  Ordering places the tags where the limits
    live: -inf < finite(x) < +inf, with the zero-limit ordering as 0.
    """

    kind: str
    value: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in (FINITE, ZERO, PLUS_INF, MINUS_INF):
            raise ValueError(f"unknown alpha kind {self.kind!r}")
        if self.kind == FINITE:
            if not math.isfinite(self.value) or self.value == 0.0:
                raise ValueError("finite alpha must be a nonzero finite real")
        elif self.value != 0.0:
            raise ValueError("tagged alpha carries no value")

    @staticmethod
    def finite(x: float) -> "Alpha":
        return Alpha(FINITE, float(x))

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def order_key(self) -> float:
        """Position on the extended real line used for comparisons."""
        if self.kind == FINITE:
            return self.value
        if self.kind == ZERO:
            return 0.0
        return math.inf if self.kind == PLUS_INF else -math.inf

    def __lt__(self, other: "Alpha") -> bool:
        return self.order_key < other.order_key

    def token(self) -> str:
        """Stable text form: '0-limit', '+inf', '-inf', or the decimal."""
        if self.kind == ZERO:
            return "0-limit"
        if self.kind == PLUS_INF:
            return "+inf"
        if self.kind == MINUS_INF:
            return "-inf"
        return format(self.value, ".10g")

    def __str__(self) -> str:
        return self.token()


ZERO_LIMIT = Alpha(ZERO)
ALPHA_PLUS_INF = Alpha(PLUS_INF)
ALPHA_MINUS_INF = Alpha(MINUS_INF)


def parse_alpha(token: str) -> Alpha:
    """Parse the command-line spelling of an exponent.

    '0' is reserved for the zero-limit, 'inf'/'+inf' and '-inf' for the
    extremes; any other token must be a nonzero decimal.
    """
    t = token.strip()
    if t == "0":
        return ZERO_LIMIT
    if t in ("inf", "+inf"):
        return ALPHA_PLUS_INF
    if t == "-inf":
        return ALPHA_MINUS_INF
    try:
        x = float(t)
    except ValueError:
        raise ValueError(f"cannot parse alpha {token!r}")
    if x == 0.0:
        raise ValueError("use the literal '0' for the zero-limit exponent")
    if not math.isfinite(x):
        raise ValueError("use 'inf'/'-inf' for the limit exponents")
    return Alpha.finite(x)


def power_mean(x: float, y: float, a: Alpha) -> float:
    """Power mean of two positive reals at an extended exponent.

    Finite exponents use the max-factored form
    ``base * ((1 + t^a)/2)^(1/a)`` with t in (0, 1], which cannot overflow
    however large |a| gets; equal arguments short-circuit to the common
    value so regular graphs evaluate exactly and identically at every a.
    """
    if x <= 0.0 or y <= 0.0:
        raise ValueError(f"power mean needs positive arguments, got ({x}, {y})")
    if a.kind == FINITE:
        if x == y:
            return float(x)
        alpha = a.value
        hi, lo = (x, y) if x > y else (y, x)
        if alpha > 0:
            base, t = hi, lo / hi
        else:
            base, t = lo, hi / lo
        return base * ((1.0 + t**alpha) / 2.0) ** (1.0 / alpha)
    if a.kind == ZERO:
        return math.sqrt(x * y)
    if a.kind == MINUS_INF:
        return float(min(x, y))
    return float(max(x, y))


def _edge_degrees(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees
    return [(deg[u], deg[v]) for u, v in g.edge_list]


def mean_sombor(g: Graph, a: Alpha) -> float:
    """Sum of the power mean of the endpoint degrees over all edges."""
    return math.fsum(power_mean(du, dv, a) for du, dv in _edge_degrees(g))


def edge_terms(g: Graph, a: Alpha) -> list[float]:
    """The per-edge power-mean terms, in the deterministic edge order."""
    return [power_mean(du, dv, a) for du, dv in _edge_degrees(g)]


# ---------------------------------------------------------------------------
# Classical indices (independent edge/vertex sums, not routed through
# the power mean -- they double as cross-checks of the special cases)
# ---------------------------------------------------------------------------

def inverse_sum_indeg(g: Graph) -> float:
    """ISI = sum over edges of d_u d_v / (d_u + d_v)."""
    return math.fsum(du * dv / (du + dv) for du, dv in _edge_degrees(g))


def reciprocal_randic(g: Graph) -> float:
    """R^{-1} = sum over edges of sqrt(d_u d_v); equals the variable second
    Zagreb index at exponent 1/2."""
    return math.fsum(math.sqrt(du * dv) for du, dv in _edge_degrees(g))


def first_zagreb(g: Graph) -> float:
    """M1 = sum over vertices of d_u^2."""
    return float(sum(d * d for d in g.degrees))


def variable_first_zagreb(g: Graph, exponent: float) -> float:
    """Sum over vertices of d_u^exponent (vertices of degree 0 excluded:
    0^p is ill-defined for p <= 0 and contributes nothing to edge sums)."""
    return math.fsum(d**exponent for d in g.degrees if d > 0)


def sombor(g: Graph) -> float:
    """SO = sum over edges of sqrt(d_u^2 + d_v^2)."""
    return math.fsum(math.hypot(du, dv) for du, dv in _edge_degrees(g))


def alpha_sombor(g: Graph, alpha: float) -> float:
    """SO_alpha = sum over edges of (d_u^a + d_v^a)^(1/a), a != 0."""
    if alpha == 0.0:
        raise ValueError("alpha-Sombor index needs a nonzero exponent")
    return ka_index(g, alpha, 1.0 / alpha)


def ka_index(g: Graph, alpha: float, beta: float) -> float:
    """First (a,b)-KA index: sum over edges of (d_u^a + d_v^a)^b."""
    return math.fsum((du**alpha + dv**alpha) ** beta for du, dv in _edge_degrees(g))


def min_edge_sum(g: Graph) -> float:
    """Sum over edges of min(d_u, d_v)."""
    return float(sum(min(du, dv) for du, dv in _edge_degrees(g)))


def max_edge_sum(g: Graph) -> float:
    """Sum over edges of max(d_u, d_v)."""
    return float(sum(max(du, dv) for du, dv in _edge_degrees(g)))


_PARAMLESS = {
    "isi": inverse_sum_indeg,
    "r-1": reciprocal_randic,
    "reciprocal-randic": reciprocal_randic,
    "m2-1/2": reciprocal_randic,
    "m1": first_zagreb,
    "so": sombor,
    "sp-min": min_edge_sum,
    "sp-max": max_edge_sum,
}


def classical_index(
    g: Graph,
    which: str,
    alpha: float | None = None,
    beta: float | None = None,
) -> float:
    """Evaluate a named classical index.

    Parameterless names: isi, r-1 (aliases reciprocal-randic, m2-1/2), m1,
    so, sp-min, sp-max.  'm1-var' and 'so-alpha' need alpha; 'ka1' needs
    alpha and beta.
    """
    key = which.strip().lower()
    if key in _PARAMLESS:
        if alpha is not None or beta is not None:
            raise ValueError(f"index {which!r} takes no parameters")
        return _PARAMLESS[key](g)
    if key == "m1-var":
        if alpha is None or beta is not None:
            raise ValueError("m1-var needs alpha only (computes sum of d^(alpha+1))")
        return variable_first_zagreb(g, alpha + 1.0)
    if key == "so-alpha":
        if alpha is None or beta is not None:
            raise ValueError("so-alpha needs alpha only")
        return alpha_sombor(g, alpha)
    if key == "ka1":
        if alpha is None or beta is None:
            raise ValueError("ka1 needs both alpha and beta")
        return ka_index(g, alpha, beta)
    raise ValueError(f"unknown index name {which!r}")

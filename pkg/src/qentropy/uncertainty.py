"""Rényi, Tsallis, Shannon and Heisenberg uncertainty relations in one dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import entropy, systems
from ._optimize import golden_max
from .entropy import conjugate_beta
from .systems import Space, SystemDescriptor

__all__ = [
    "Relation",
    "UncertaintyReport",
    "SumMaximum",
    "Unbounded",
    "SATURATION_TOL",
    "VERIFICATION_TOL",
    "f_bound",
    "renyi_sum",
    "renyi_relation",
    "tsallis_sides",
    "tsallis_relation",
    "shannon_relation",
    "heisenberg_relation",
    "find_sum_maximum",
]

SATURATION_TOL = 1e-7
VERIFICATION_TOL = 1e-9
_LN_PI = math.log(math.pi)
_LN_2PI = math.log(2.0 * math.pi)


class Relation(Enum):
    RenyiSum = "renyi"
    TsallisSobolev = "tsallis"
    ShannonSum = "shannon"
    Heisenberg = "heisenberg"


@dataclass(frozen=True)
class UncertaintyReport:
    relation: Relation
    alpha: float | None
    beta: float | None
    lhs: float
    rhs: float
    gap: float
    satisfied: bool
    saturated: bool
    note: str = ""


def _report(relation, alpha, beta, lhs, rhs, note=""):
    if math.isinf(lhs) and lhs > 0:
        gap = math.inf
    else:
        gap = lhs - rhs
    return UncertaintyReport(relation, alpha, beta, lhs, rhs, gap,
                             satisfied=gap >= -VERIFICATION_TOL,
                             saturated=abs(gap) <= SATURATION_TOL, note=note)


def f_bound(alpha: float) -> float:
    """Lower bound of R_rho(alpha) + R_gamma(beta): ln pi - ln alpha + ((alpha-1/2)/(alpha-1)) ln(2 alpha - 1)."""
    alpha = float(alpha)
    if not alpha >= 0.5:
        raise ValueError("f(alpha) is defined for alpha >= 1/2")
    if math.isinf(alpha):
        return _LN_2PI
    if alpha == 0.5:
        return _LN_2PI
    d = alpha - 1.0
    # ln(2 alpha - 1) / (alpha - 1) = log1p(2d) / d, regular at d = 0
    if abs(d) < 1e-8:
        ratio = 2.0 - 2.0 * d + (8.0 / 3.0) * d * d
    else:
        ratio = math.log1p(2.0 * d) / d
    return _LN_PI - math.log(alpha) + (alpha - 0.5) * ratio


def renyi_sum(sys: SystemDescriptor, alpha: float, method: str = "auto",
              rel_tol: float | None = None) -> float:
    """R_rho(alpha) + R_gamma(beta) with the conjugate beta."""
    beta = conjugate_beta(alpha)
    return (entropy.renyi(sys, Space.Position, alpha, method, rel_tol).value
            + entropy.renyi(sys, Space.Momentum, beta, method, rel_tol).value)


def renyi_relation(sys: SystemDescriptor, alpha: float, method: str = "auto",
                   rel_tol: float | None = None) -> UncertaintyReport:
    beta = conjugate_beta(alpha)
    return _report(Relation.RenyiSum, alpha, beta,
                   renyi_sum(sys, alpha, method, rel_tol), f_bound(alpha))


def _side(sys, space, order, method, rel_tol):
    # (order/pi)^(1/(4 order)) * (int density^order)^(1/(2 order)), l = 1
    if math.isinf(order):
        return math.sqrt(systems.density_max(sys, space)[1])
    entropy._admissible(sys, space, order)
    lj = entropy.log_power_integral(sys, space, order, method, rel_tol)[0]
    return math.exp(math.log(order / math.pi) / (4.0 * order) + lj / (2.0 * order))


def tsallis_sides(sys: SystemDescriptor, alpha: float, method: str = "auto",
                  rel_tol: float | None = None) -> tuple[float, float]:
    """Both sides of the Tsallis (Sobolev) inequality, scale factors included."""
    beta = conjugate_beta(alpha)
    return (_side(sys, Space.Position, alpha, method, rel_tol),
            _side(sys, Space.Momentum, beta, method, rel_tol))


def tsallis_relation(sys: SystemDescriptor, alpha: float, method: str = "auto",
                     rel_tol: float | None = None) -> UncertaintyReport:
    """Tsallis relation; guaranteed for 1/2 <= alpha <= 1, diagnostic beyond."""
    beta = conjugate_beta(alpha)
    lhs, rhs = tsallis_sides(sys, alpha, method, rel_tol)
    note = "" if alpha <= 1.0 else "diagnostic: outside the guaranteed interval"
    return _report(Relation.TsallisSobolev, alpha, beta, lhs, rhs, note)


def shannon_relation(sys: SystemDescriptor, method: str = "auto",
                     rel_tol: float | None = None) -> UncertaintyReport:
    lhs = (entropy.shannon(sys, Space.Position, method, rel_tol).value
           + entropy.shannon(sys, Space.Momentum, method, rel_tol).value)
    return _report(Relation.ShannonSum, 1.0, 1.0, lhs, 1.0 + _LN_PI)


def heisenberg_relation(sys: SystemDescriptor, operator_based: bool = False) -> UncertaintyReport:
    """Delta x * Delta k against 1/2.

    The moment-based Delta k comes from the momentum density and may be
    infinite.  The operator-based one is computed from the position
    waveform and is a diagnostic: it can differ for non-smooth states.
    """
    dx = systems.deviation(sys, Space.Position)
    if operator_based:
        dk = math.sqrt(systems.operator_momentum_variance(sys))
        note = "operator-based momentum deviation"
    else:
        dk = systems.deviation(sys, Space.Momentum)
        note = "moment-based momentum deviation"
    lhs = math.inf if math.isinf(dk) else dx * dk
    rep = _report(Relation.Heisenberg, None, None, lhs, 0.5, note)
    if math.isinf(lhs):
        rep = UncertaintyReport(rep.relation, None, None, lhs, 0.5, math.inf, True, False,
                                note + " diverges; relation holds vacuously")
    return rep


@dataclass(frozen=True)
class SumMaximum:
    alpha: float
    value: float


@dataclass(frozen=True)
class Unbounded:
    """The Rényi sum still grows at the edge of the search bracket."""
    alpha_edge: float
    value_edge: float


SEARCH_BRACKET = (0.5 + 1e-4, 60.0)


def find_sum_maximum(sys: SystemDescriptor, bracket=SEARCH_BRACKET, scan_points: int = 16,
                     alpha_tol: float = 1e-4, rel_tol: float | None = None):
    """Maximize R_rho(alpha) + R_gamma(beta) over alpha.

    A log-spaced scan locates the bracket, golden-section search refines it.
    Returns ``SumMaximum`` or ``Unbounded`` when the scan peaks at the upper edge.
    """
    lo, hi = bracket
    grid = np.geomspace(lo, hi, scan_points)
    f = lambda a: renyi_sum(sys, float(a), rel_tol=rel_tol)
    vals = [f(a) for a in grid]
    i = int(np.argmax(vals))
    if i == len(grid) - 1:
        return Unbounded(float(grid[-1]), float(vals[-1]))
    a, b = grid[max(i - 1, 0)], grid[i + 1]
    x, v = golden_max(f, a, b, tol=alpha_tol)
    if v < vals[i]:
        x, v = float(grid[i]), float(vals[i])
    return SumMaximum(float(x), float(v))

"""Rényi, Tsallis, Shannon and Onicescu entropies of the cataloged systems.

Every quantity is built on L(alpha) = ln of the integral of density**alpha.
Where a closed form exists it is used; otherwise the integral is done by
quadrature of (density / sup density)**alpha, which keeps the integrand in
[0, 1] for any order.  Both paths can be forced for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import quadrature, systems
from .quadrature import integrate, integrate_oscillatory_tail, periodic_product_tail
from .specfun import EULER_GAMMA, ln_gamma
from .systems import Family, Space, SystemDescriptor

__all__ = [
    "EntropyKind",
    "Path",
    "Divergence",
    "EntropyResult",
    "ThresholdInfo",
    "DivergentEntropy",
    "renyi",
    "tsallis",
    "tsallis_composite",
    "shannon",
    "onicescu",
    "renyi_from_tsallis",
    "tsallis_from_renyi",
    "conjugate_beta",
    "threshold",
    "log_power_integral",
    "has_closed_form",
    "asymptotic_coefficients",
    "CROSSOVER",
    "QUADRATURE_MAX_N",
]

CROSSOVER = 1e-6
QUADRATURE_MAX_N = 10
_LN_PI = math.log(math.pi)


class EntropyKind(Enum):
    Renyi = "renyi"
    Tsallis = "tsallis"
    Shannon = "shannon"
    Onicescu = "onicescu"


class Path(Enum):
    ClosedForm = "closed"
    Quadrature = "quadrature"
    Limit = "limit"


class Divergence(Enum):
    LogDivergent = "log"
    PowerDivergent = "power"


@dataclass(frozen=True)
class ThresholdInfo:
    alpha_threshold: float
    divergence: Divergence | None
    inferred: bool = False


@dataclass(frozen=True)
class EntropyResult:
    kind: EntropyKind
    space: Space
    alpha: float | None
    value: float
    path: Path
    abs_error: float
    scale_used: float


class DivergentEntropy(ArithmeticError):
    def __init__(self, info: ThresholdInfo, alpha: float, space: Space):
        super().__init__(
            f"{space.value} entropy diverges for alpha = {alpha} "
            f"(threshold {info.alpha_threshold})")
        self.info = info
        self.alpha = alpha
        self.space = space


# ---------------------------------------------------------------------------
# thresholds and conjugation

def threshold(sys: SystemDescriptor, space: Space) -> ThresholdInfo:
    fam = sys.family
    if space is Space.Position:
        finite = fam in (Family.NeumannWell, Family.DirichletWell)
        return ThresholdInfo(0.0, None if finite else Divergence.LogDivergent)
    if fam is Family.HarmonicOscillator:
        return ThresholdInfo(0.0, Divergence.LogDivergent)
    if fam is Family.RobinWall:
        return ThresholdInfo(0.5, Divergence.LogDivergent)
    if fam is Family.Q1DHydrogen:
        return ThresholdInfo(0.25, Divergence.LogDivergent)
    # wells: gamma ~ k^-2 (Neumann) and k^-4 (Dirichlet) set the thresholds
    th = 0.5 if fam is Family.NeumannWell else 0.25
    return ThresholdInfo(th, Divergence.LogDivergent, inferred=True)


def conjugate_beta(alpha: float) -> float:
    """beta with 1/alpha + 1/beta = 2.  alpha = 1/2 gives inf, alpha = inf gives 1/2."""
    alpha = float(alpha)
    if alpha == 0.5:
        return math.inf
    if math.isinf(alpha) and alpha > 0:
        return 0.5
    if not alpha > 0.5:
        raise ValueError("conjugate order needs alpha > 1/2")
    return alpha / (2.0 * alpha - 1.0)


def renyi_from_tsallis(t: float, alpha: float) -> float:
    _check_order(alpha)
    x = (1.0 - alpha) * t
    if not 1.0 + x > 0:
        raise ValueError("1 + (1 - alpha) T must be positive")
    return math.log1p(x) / (1.0 - alpha)


def tsallis_from_renyi(r: float, alpha: float) -> float:
    _check_order(alpha)
    return -math.expm1((1.0 - alpha) * r) / (alpha - 1.0)


def _check_order(alpha):
    if not (alpha > 0 and math.isfinite(alpha)):
        raise ValueError("order must be a positive finite number")
    if alpha == 1:
        raise ValueError("order 1 is the Shannon case")


# ---------------------------------------------------------------------------
# closed forms of L(alpha) at unit scale

def _closed_log_power(fam: Family, n: int, space: Space, a: float) -> float | None:
    pos = space is Space.Position
    if fam is Family.HarmonicOscillator:
        if n == 0:
            return 0.5 * (1.0 - a) * _LN_PI - 0.5 * math.log(a)
        if n == 1:
            return (a * math.log(2.0) - 0.5 * a * _LN_PI
                    - (a + 0.5) * math.log(a) + ln_gamma(a + 0.5))
        return None
    if fam is Family.RobinWall:
        if pos:
            return (a - 1.0) * math.log(2.0) - math.log(a)
        return ((1.0 - a) * _LN_PI + ln_gamma(a - 0.5)
                - 0.5 * _LN_PI - ln_gamma(a))
    if fam is Family.Q1DHydrogen:
        if pos:
            if n != 1:
                return None
            return ln_gamma(2 * a + 1) - math.log(2.0) - (2 * a + 1) * math.log(a)
        return ((a - 1.0) * math.log(n) + a * math.log(2.0) - (a - 0.5) * _LN_PI
                + ln_gamma(2 * a - 0.5) - ln_gamma(2 * a))
    if fam is Family.NeumannWell and pos:
        return 0.0
    if fam is Family.DirichletWell and pos:
        return (a * math.log(2.0) + ln_gamma(a + 0.5)
                - 0.5 * _LN_PI - ln_gamma(a + 1.0))
    return None


def has_closed_form(sys: SystemDescriptor, space: Space) -> bool:
    return _closed_log_power(sys.family, sys.n, space, 2.0) is not None


def _closed_shannon(fam: Family, n: int, space: Space) -> float | None:
    pos = space is Space.Position
    g = EULER_GAMMA
    if fam is Family.HarmonicOscillator:
        if n == 0:
            return 0.5 * (1.0 + _LN_PI)
        if n == 1:
            return math.log(2.0) + g + 0.5 * _LN_PI - 0.5
        return None
    if fam is Family.RobinWall:
        return 1.0 - math.log(2.0) if pos else _LN_PI + math.log(4.0)
    if fam is Family.Q1DHydrogen:
        if pos:
            return 2.0 * g if n == 1 else None
        return -2.0 + math.log(8.0 * math.pi / n)
    if fam is Family.NeumannWell and pos:
        return 0.0
    if fam is Family.DirichletWell and pos:
        return math.log(2.0) - 1.0
    return None


# ---------------------------------------------------------------------------
# quadrature of L(alpha) and of the Shannon integrand at unit scale

def _check_cap(sys, space):
    quad_only = ((sys.family is Family.HarmonicOscillator and sys.n >= 2)
                 or (sys.family is Family.Q1DHydrogen and space is Space.Position
                     and sys.n >= 2)
                 or sys.family is Family.DirichletWell)
    if quad_only and sys.n > QUADRATURE_MAX_N:
        raise ValueError(f"quadrature entropies are limited to n <= {QUADRATURE_MAX_N}")


def _is_well_momentum(sys, space):
    return space is Space.Momentum and sys.family in (Family.NeumannWell,
                                                      Family.DirichletWell)


def _half_line(sys, space):
    """(lo, hi, factor): even densities are integrated over [0, inf) and doubled."""
    dom = systems.unit_support(sys, space)
    if systems._is_even(sys, space):
        return 0.0, dom.upper, 2.0
    return dom.lower, dom.upper, 1.0


def _well_integral(sys, h, tail_pieces, rel_tol):
    """2 * integral over [0, inf) of an integrand built on a well momentum density."""
    first, period = systems.well_oscillation(sys)
    pts = [p for p in systems.density_zeros(sys, Space.Momentum) if p > 0]
    head = integrate(h, (0.0, first), rel_tol=rel_tol, points=pts)
    model = periodic_product_tail(tail_pieces, period, first)
    tail = integrate_oscillatory_tail(h, period, first, rel_tol=rel_tol, tail_model=model,
                                      abs_tol=rel_tol * abs(head.value))
    return 2.0 * (head.value + tail.value), 2.0 * (head.abs_error_estimate
                                                  + tail.abs_error_estimate)


def _quad_log_power(sys, space, a, rel_tol):
    _, m = systems.density_max(sys.unit(), space)
    f = systems.unit_density(sys, space)

    def h(v):
        with np.errstate(divide="ignore", under="ignore"):
            return np.power(np.maximum(f(v), 0.0) / m, a)

    if _is_well_momentum(sys, space):
        per, smooth = systems.well_tail_factors(sys)
        if sys.family is Family.NeumannWell:
            # smooth / m = 4 / u^2 exactly
            g = lambda u: (4.0 / (u * u)) ** a
            g_tail = lambda z: math.exp(a * math.log(4.0) + (1.0 - 2.0 * a) * math.log(z)) / (2.0 * a - 1.0)
        else:
            g = lambda u: (smooth(u) / m) ** a
            g_tail = None
        value, err = _well_integral(sys, h, [(lambda u: per(u) ** a, g, g_tail)], rel_tol)
    else:
        lo, hi, fac = _half_line(sys, space)
        pts = [p for p in systems.density_zeros(sys, space) if lo < p < hi]
        res = integrate(h, (lo, hi), rel_tol=rel_tol, points=pts)
        value, err = fac * res.value, fac * res.abs_error_estimate
    return a * math.log(m) + math.log(value), err / value


def _xlogx(x):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x > 0, x * np.log(np.where(x > 0, x, 1.0)), 0.0)


def _quad_shannon(sys, space, rel_tol):
    f = systems.unit_density(sys, space)
    h = lambda v: -_xlogx(f(v))
    if _is_well_momentum(sys, space):
        per, smooth = systems.well_tail_factors(sys)
        pieces = [(lambda u: -_xlogx(per(u)), smooth, None),
                  (per, lambda u: -_xlogx(smooth(u)), None)]
        return _well_integral(sys, h, pieces, rel_tol)
    lo, hi, fac = _half_line(sys, space)
    pts = [p for p in systems.density_zeros(sys, space) if lo < p < hi]
    res = integrate(h, (lo, hi), rel_tol=rel_tol, abs_tol=1e-15, points=pts)
    return fac * res.value, fac * res.abs_error_estimate


def _scale_sign(space):
    return 1.0 if space is Space.Position else -1.0


def log_power_integral(sys: SystemDescriptor, space: Space, alpha: float,
                       method: str = "auto", rel_tol: float | None = None):
    """(L, abs error of L, path) with L = ln of the integral of density**alpha.

    ``method`` is "auto", "closed" or "quadrature".  Scale is included.
    """
    rel_tol = quadrature.DEFAULT_REL_TOL if rel_tol is None else rel_tol
    closed = None
    if method in ("auto", "closed"):
        closed = _closed_log_power(sys.family, sys.n, space, alpha)
        if closed is None and method == "closed":
            raise ValueError(f"no closed form for {sys.label()} {space.value}")
    if closed is not None:
        lj, err, path = closed, 1e-14 * max(1.0, abs(closed)), Path.ClosedForm
    else:
        _check_cap(sys, space)
        lj, err = _quad_log_power(sys, space, alpha, rel_tol)
        path = Path.Quadrature
    # position picks up s^(1 - alpha), momentum s^(alpha - 1)
    lj += _scale_sign(space) * (1.0 - alpha) * math.log(sys.scale)
    return lj, err, path


# ---------------------------------------------------------------------------
# public entropies

def _admissible(sys, space, alpha):
    if not alpha > 0:
        raise ValueError("entropy order must be positive")
    info = threshold(sys, space)
    if alpha <= info.alpha_threshold:
        raise DivergentEntropy(info, alpha, space)


def _limit(sys, space, kind):
    _, sup = systems.density_max(sys, space)
    return EntropyResult(kind, space, math.inf, -math.log(sup), Path.Limit,
                         1e-13, sys.scale)


def shannon(sys: SystemDescriptor, space: Space, method: str = "auto",
            rel_tol: float | None = None) -> EntropyResult:
    """-integral of density * ln density."""
    rel_tol = quadrature.DEFAULT_REL_TOL if rel_tol is None else rel_tol
    val = None
    if method in ("auto", "closed"):
        val = _closed_shannon(sys.family, sys.n, space)
        if val is None and method == "closed":
            raise ValueError(f"no closed Shannon form for {sys.label()} {space.value}")
    if val is not None:
        err, path = 1e-14 * max(1.0, abs(val)), Path.ClosedForm
    else:
        _check_cap(sys, space)
        val, err = _quad_shannon(sys, space, rel_tol)
        path = Path.Quadrature
    val += _scale_sign(space) * math.log(sys.scale)
    return EntropyResult(EntropyKind.Shannon, space, None, val, path, err, sys.scale)


def renyi(sys: SystemDescriptor, space: Space, alpha: float, method: str = "auto",
          rel_tol: float | None = None) -> EntropyResult:
    """Rényi entropy of order ``alpha``; ``alpha = math.inf`` gives the min-entropy."""
    alpha = float(alpha)
    if math.isinf(alpha) and alpha > 0:
        return _limit(sys, space, EntropyKind.Renyi)
    _admissible(sys, space, alpha)
    if abs(alpha - 1.0) < CROSSOVER:
        s = shannon(sys, space, method, rel_tol)
        return EntropyResult(EntropyKind.Renyi, space, alpha, s.value, s.path,
                             s.abs_error, sys.scale)
    lj, err, path = log_power_integral(sys, space, alpha, method, rel_tol)
    d = 1.0 - alpha
    return EntropyResult(EntropyKind.Renyi, space, alpha, lj / d, path,
                         err / abs(d), sys.scale)


def tsallis(sys: SystemDescriptor, space: Space, alpha: float, method: str = "auto",
            rel_tol: float | None = None) -> EntropyResult:
    """Tsallis entropy (1 - integral of density**alpha) / (alpha - 1), scale included."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ValueError("Tsallis entropy needs a finite order")
    _admissible(sys, space, alpha)
    if abs(alpha - 1.0) < CROSSOVER:
        s = shannon(sys, space, method, rel_tol)
        return EntropyResult(EntropyKind.Tsallis, space, alpha, s.value, s.path,
                             s.abs_error, sys.scale)
    lj, err, path = log_power_integral(sys, space, alpha, method, rel_tol)
    d = alpha - 1.0
    val = -math.expm1(lj) / d
    return EntropyResult(EntropyKind.Tsallis, space, alpha, val, path,
                         math.exp(lj) * err / abs(d), sys.scale)


def tsallis_composite(sys: SystemDescriptor, space: Space, alpha: float,
                      method: str = "auto", rel_tol: float | None = None) -> float:
    """1 + (1 - alpha) T(alpha), i.e. the integral of density**alpha itself."""
    _admissible(sys, space, alpha)
    return math.exp(log_power_integral(sys, space, alpha, method, rel_tol)[0])


def onicescu(sys: SystemDescriptor, space: Space, method: str = "auto",
             rel_tol: float | None = None) -> EntropyResult:
    """Integral of density**2, equal to exp(-R(2)) and 1 - T(2)."""
    lj, err, path = log_power_integral(sys, space, 2.0, method, rel_tol)
    val = math.exp(lj)
    return EntropyResult(EntropyKind.Onicescu, space, None, val, path, val * err,
                         sys.scale)


def asymptotic_coefficients(sys: SystemDescriptor, space: Space, regime):
    """Printed expansion terms for (system, space, regime); see ``expansions``."""
    from .expansions import entropy_expansion
    return entropy_expansion(sys, space, regime).terms

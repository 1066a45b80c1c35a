"""Numerical evidence that ground states saturate both relations at alpha = 1/2."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import entropy, uncertainty
from .quadrature import NonConvergent
from .systems import Family, Space, SystemDescriptor

__all__ = [
    "ConjectureTrace",
    "NotGroundState",
    "neumann_renyi_sum",
    "tsallis_sides_well",
    "conjecture_scan",
    "extrapolate_half",
    "LN_2PI",
]

LN_2PI = math.log(2.0 * math.pi)
_FIT_POINTS = 6


class NotGroundState(ValueError):
    pass


@dataclass(frozen=True)
class ConjectureTrace:
    system: SystemDescriptor
    alphas: tuple[float, ...]
    renyi_sums: tuple[float, ...]
    tsallis_gaps: tuple[float, ...]
    extrapolated_limit: float
    tsallis_extrapolated: float
    target: float = LN_2PI
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def renyi_error(self) -> float:
        return abs(self.extrapolated_limit - self.target)

    @property
    def tsallis_error(self) -> float:
        return abs(self.tsallis_extrapolated)


def neumann_renyi_sum(alpha: float, scale: float = 1.0, rel_tol: float | None = None) -> float:
    """R_rho(alpha) + R_gamma(beta) of the Neumann ground state.

    The position part is ln a; the momentum part needs the oscillatory tail.
    """
    return uncertainty.renyi_sum(SystemDescriptor(Family.NeumannWell, 0, scale), alpha,
                                 rel_tol=rel_tol)


def tsallis_sides_well(well: SystemDescriptor, alpha: float,
                       rel_tol: float | None = None) -> tuple[float, float]:
    if well.family not in (Family.NeumannWell, Family.DirichletWell):
        raise ValueError("tsallis_sides_well needs a Neumann or Dirichlet well")
    return uncertainty.tsallis_sides(well, alpha, rel_tol=rel_tol)


def extrapolate_half(alphas, values) -> float:
    """Value at alpha = 1/2 from a least-squares fit c0 + c1 e ln e + c2 e, e = 2 alpha - 1."""
    e = 2.0 * np.asarray(alphas, dtype=float) - 1.0
    v = np.asarray(values, dtype=float)
    ok = np.isfinite(v)
    e, v = e[ok], v[ok]
    if len(v) < 3:
        raise ValueError("need at least three finite points to extrapolate")
    a = np.column_stack([np.ones_like(e), e * np.log(e), e])
    coef, *_ = np.linalg.lstsq(a, v, rcond=None)
    return float(coef[0])


def _ground_n(fam):
    return 1 if fam in (Family.Q1DHydrogen, Family.DirichletWell) else 0


def conjecture_scan(sys: SystemDescriptor, n_points: int = 12, diagnostic: bool = False,
                    rel_tol: float | None = None) -> ConjectureTrace:
    """Rényi sums and Tsallis gaps at alpha_j = 1/2 + 2^-j, j = 1..n_points.

    Only ground states are accepted unless ``diagnostic`` is set.
    """
    if n_points < 3:
        raise ValueError("n_points must be at least 3")
    if sys.n != _ground_n(sys.family) and not diagnostic:
        raise NotGroundState(f"{sys.label()} is not a ground state")
    alphas, sums, gaps, failures = [], [], [], []
    for j in range(1, n_points + 1):
        a = 0.5 + 2.0 ** -j
        alphas.append(a)
        try:
            sums.append(uncertainty.renyi_sum(sys, a, rel_tol=rel_tol))
            lhs, rhs = uncertainty.tsallis_sides(sys, a, rel_tol=rel_tol)
            gaps.append(lhs - rhs)
        except (NonConvergent, entropy.DivergentEntropy, OverflowError) as exc:
            failures.append(f"alpha={a!r}: {exc}")
            sums.append(math.nan)
            gaps.append(math.nan)
    tail = slice(max(0, n_points - _FIT_POINTS), n_points)
    try:
        r_lim = extrapolate_half(alphas[tail], sums[tail])
        t_lim = extrapolate_half(alphas[tail], gaps[tail])
    except ValueError as exc:
        failures.append(str(exc))
        r_lim = t_lim = math.nan
    return ConjectureTrace(sys, tuple(alphas), tuple(sums), tuple(gaps), r_lim, t_lim,
                           failures=tuple(failures))

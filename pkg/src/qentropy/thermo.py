"""Discrete entropies, additivity laws and Tsallis/Gibbs equilibrium statistics.

Boltzmann's constant is 1: energies and temperatures share one unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import CROSSOVER, EntropyKind

__all__ = [
    "DiscreteDistribution",
    "LevelSystem",
    "EmptySupport",
    "AdditivityReport",
    "Equilibrium",
    "FreeEnergyCheck",
    "discrete_entropy",
    "product",
    "additivity_check",
    "gibbs",
    "log_partition",
    "free_energy",
    "tsallis_equilibrium",
    "gibbs_first_order",
    "renyi_free_energy_identity",
]

_NORM_TOL = 1e-12


class EmptySupport(ValueError):
    """Every Tsallis bracket is nonpositive, so no level is populated."""


@dataclass(frozen=True)
class DiscreteDistribution:
    probs: tuple[float, ...]

    def __post_init__(self):
        p = tuple(float(x) for x in self.probs)
        if not p:
            raise ValueError("a distribution needs at least one event")
        if any(not (0.0 <= x <= 1.0) for x in p):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(math.fsum(p) - 1.0) > _NORM_TOL:
            raise ValueError("probabilities must sum to 1")
        object.__setattr__(self, "probs", p)

    @classmethod
    def normalized(cls, weights) -> "DiscreteDistribution":
        w = np.asarray(weights, dtype=float)
        return cls(tuple(w / math.fsum(w)))

    def array(self) -> np.ndarray:
        return np.asarray(self.probs)


@dataclass(frozen=True)
class LevelSystem:
    energies: tuple[float, ...]
    temperature: float = 1.0

    def __post_init__(self):
        e = tuple(float(x) for x in self.energies)
        if not e or not all(math.isfinite(x) for x in e):
            raise ValueError("energies must be a nonempty list of finite numbers")
        if not self.temperature > 0:
            raise ValueError("temperature must be positive")
        object.__setattr__(self, "energies", e)


def discrete_entropy(p: DiscreteDistribution, kind: EntropyKind, alpha: float | None = None) -> float:
    """Rényi, Tsallis, Shannon or Onicescu value of a discrete distribution.

    Zero probabilities contribute nothing.  Order 1 gives the Shannon value.
    """
    x = p.array()
    x = x[x > 0]
    if kind is EntropyKind.Onicescu:
        return math.fsum(x * x)
    if kind in (EntropyKind.Renyi, EntropyKind.Tsallis):
        if alpha is None or not alpha > 0:
            raise ValueError("Rényi and Tsallis entropies need a positive order")
        if alpha != 1.0:
            s = math.fsum(x ** alpha)
            if kind is EntropyKind.Renyi:
                v = math.log(s) / (1.0 - alpha)
            else:
                v = (1.0 - s) / (alpha - 1.0)
            # rounding can leave -1e-17 for degenerate distributions
            return max(v, 0.0)
    return max(-math.fsum(x * np.log(x)), 0.0)


def product(f: DiscreteDistribution, g: DiscreteDistribution) -> DiscreteDistribution:
    """Joint distribution of two independent events."""
    joint = np.outer(f.array(), g.array()).ravel()
    return DiscreteDistribution.normalized(joint)


@dataclass(frozen=True)
class AdditivityReport:
    alpha: float
    renyi_gap: float
    tsallis_gap: float
    shannon_gap: float
    tolerance: float = 1e-10

    @property
    def passed(self) -> bool:
        return max(abs(self.renyi_gap), abs(self.tsallis_gap), abs(self.shannon_gap)) <= self.tolerance


def additivity_check(f: DiscreteDistribution, g: DiscreteDistribution, alpha: float) -> AdditivityReport:
    """R and S add; T is pseudo-additive: T_fg = T_f + T_g + (1 - alpha) T_f T_g."""
    fg = product(f, g)
    R, T, S = EntropyKind.Renyi, EntropyKind.Tsallis, EntropyKind.Shannon
    e = lambda d, k: discrete_entropy(d, k, alpha)
    tf, tg = e(f, T), e(g, T)
    return AdditivityReport(
        alpha,
        renyi_gap=e(fg, R) - e(f, R) - e(g, R),
        tsallis_gap=e(fg, T) - (tf + tg + (1.0 - alpha) * tf * tg),
        shannon_gap=discrete_entropy(fg, S) - discrete_entropy(f, S) - discrete_entropy(g, S),
    )


def _logsumexp(v: np.ndarray) -> float:
    m = float(np.max(v))
    return m + math.log(math.fsum(np.exp(v - m)))


def log_partition(energies, temperature: float) -> float:
    """ln Z(T) of the Gibbs ensemble."""
    return _logsumexp(-np.asarray(energies, dtype=float) / temperature)


def free_energy(energies, temperature: float) -> float:
    """Helmholtz F = -T ln Z."""
    return -temperature * log_partition(energies, temperature)


def gibbs(ls: LevelSystem) -> DiscreteDistribution:
    x = -np.asarray(ls.energies) / ls.temperature
    w = np.exp(x - np.max(x))
    return DiscreteDistribution.normalized(w)


@dataclass(frozen=True)
class Equilibrium:
    distribution: DiscreteDistribution
    partition: float
    cutoff_levels: tuple[int, ...]


def tsallis_equilibrium(ls: LevelSystem, alpha: float) -> Equilibrium:
    """p_n proportional to [1 - (alpha - 1) E_n / T]^(1/(alpha - 1)).

    Levels whose bracket is nonpositive are cut off (p_n = 0) and listed.
    Within 1e-6 of alpha = 1 the Gibbs distribution is returned.
    """
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    e = np.asarray(ls.energies) / ls.temperature
    if abs(alpha - 1.0) < CROSSOVER:
        lz = log_partition(ls.energies, ls.temperature)
        return Equilibrium(gibbs(ls), math.exp(lz), ())
    d = alpha - 1.0
    b = 1.0 - d * e
    live = b > 0
    if not np.any(live):
        raise EmptySupport("every level lies beyond the Tsallis cutoff")
    logw = np.full_like(b, -np.inf)
    logw[live] = np.log(b[live]) / d
    lz = _logsumexp(logw[live])
    p = np.where(live, np.exp(logw - lz), 0.0)
    cut = tuple(int(i) for i in np.flatnonzero(~live))
    return Equilibrium(DiscreteDistribution.normalized(p), math.exp(lz), cut)


def gibbs_first_order(ls: LevelSystem, alpha: float) -> np.ndarray:
    """Gibbs distribution with its first-order Tsallis correction in (alpha - 1)."""
    x = np.asarray(ls.energies) / ls.temperature
    p0 = gibbs(ls).array()
    mean_sq = math.fsum(p0 * x * x)
    return p0 * (1.0 - 0.5 * (x * x - mean_sq) * (alpha - 1.0))


@dataclass(frozen=True)
class FreeEnergyCheck:
    lhs: float
    rhs: float
    gap: float


def renyi_free_energy_identity(energies, t1: float, t2: float) -> FreeEnergyCheck:
    """R(T1/T2) of the Gibbs state at T1 against -(F(T2) - F(T1)) / (T2 - T1)."""
    if not (t1 > 0 and t2 > 0):
        raise ValueError("temperatures must be positive")
    if t1 == t2:
        raise ValueError("the two temperatures must differ")
    p = gibbs(LevelSystem(tuple(energies), t1))
    lhs = discrete_entropy(p, EntropyKind.Renyi, t1 / t2)
    rhs = -(free_energy(energies, t2) - free_energy(energies, t1)) / (t2 - t1)
    return FreeEnergyCheck(lhs, rhs, lhs - rhs)

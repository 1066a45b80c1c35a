"""Catalog of exactly solvable one-dimensional systems.

Each system is fixed by a family, a quantum number and one length (its
``scale``).  Densities are closed forms; nothing is solved or Fourier
transformed at run time.  At unit scale the variables are the natural
dimensionless ones, and a general scale s enters as

    rho_s(x) = rho_1(x / s) / s,        gamma_s(k) = s * gamma_1(s k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import quadrature
from ._optimize import golden_max
from .quadrature import Interval, integrate, integrate_panels
from .specfun import hermite, hermite_roots, laguerre_gen, laguerre_roots, ln_gamma

__all__ = [
    "Family",
    "Space",
    "SystemDescriptor",
    "density",
    "density_max",
    "support",
    "density_zeros",
    "energy",
    "moment",
    "deviation",
    "second_moment_diverges",
    "operator_momentum_variance",
    "parse_family",
]


class Family(Enum):
    HarmonicOscillator = "ho"
    RobinWall = "robin"
    Q1DHydrogen = "q1d"
    NeumannWell = "neumann"
    DirichletWell = "dirichlet"


class Space(Enum):
    Position = "position"
    Momentum = "momentum"


_ALIASES = {
    "ho": Family.HarmonicOscillator, "harmonic": Family.HarmonicOscillator,
    "robin": Family.RobinWall, "q1d": Family.Q1DHydrogen,
    "hydrogen": Family.Q1DHydrogen, "neumann": Family.NeumannWell,
    "dirichlet": Family.DirichletWell,
}

_MIN_N = {
    Family.HarmonicOscillator: 0,
    Family.RobinWall: 0,
    Family.Q1DHydrogen: 1,
    Family.NeumannWell: 0,
    Family.DirichletWell: 1,
}
# families with a single modelled state
_ONLY_GROUND = {Family.RobinWall, Family.NeumannWell}
_MAX_N = 60


def parse_family(name: str) -> Family:
    if isinstance(name, Family):
        return name
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        try:
            return Family[name]
        except KeyError:
            raise ValueError(f"unknown system family {name!r}") from None


@dataclass(frozen=True)
class SystemDescriptor:
    family: Family
    quantum_number: int | None = None
    scale: float = 1.0

    def __post_init__(self):
        fam = parse_family(self.family)
        object.__setattr__(self, "family", fam)
        n = _MIN_N[fam] if self.quantum_number is None else self.quantum_number
        if isinstance(n, float) and n.is_integer():
            n = int(n)
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise TypeError("quantum_number must be an integer")
        n = int(n)
        if n < _MIN_N[fam] or n > _MAX_N:
            raise ValueError(f"quantum number {n} out of range for {fam.name}")
        if fam in _ONLY_GROUND and n != _MIN_N[fam]:
            raise ValueError(f"{fam.name} models its single ground state only")
        object.__setattr__(self, "quantum_number", n)
        s = float(self.scale)
        if not (s > 0 and math.isfinite(s)):
            raise ValueError("scale must be a positive finite length")
        object.__setattr__(self, "scale", s)

    @property
    def n(self) -> int:
        return self.quantum_number

    @property
    def is_ground(self) -> bool:
        return self.quantum_number == _MIN_N[self.family]

    def unit(self) -> "SystemDescriptor":
        return SystemDescriptor(self.family, self.quantum_number, 1.0)

    def label(self) -> str:
        return f"{self.family.value}:{self.quantum_number}"


# ---------------------------------------------------------------------------
# unit-scale densities

def _ho(n, z):
    lnorm = -0.5 * math.log(math.pi) - n * math.log(2.0) - ln_gamma(n + 1.0)
    reach = math.sqrt(2 * n + 1) + 40.0
    zc = np.clip(z, -reach, reach)
    val = np.exp(lnorm - zc * zc) * hermite(n, zc) ** 2
    return np.where(np.abs(z) < reach, val, 0.0)


def _q1d_position(n, x):
    reach = 400.0 * n
    xc = np.clip(x, 0.0, reach)
    lag = laguerre_gen(n - 1, 1.0, 2.0 * xc / n)
    val = 4.0 * xc * xc / n ** 5 * np.exp(-2.0 * xc / n) * lag * lag
    return np.where((x >= 0) & (x < reach), val, 0.0)


def _q1d_momentum(n, k):
    with np.errstate(over="ignore"):
        return 2.0 * n / math.pi / (1.0 + (n * k) ** 2) ** 2


def _dirichlet_momentum(n, u):
    # 4 pi n^2 {cos^2 | sin^2}(u/2) / (n^2 pi^2 - u^2)^2, written through sinc
    # so that the removable point u = n pi needs no special case
    u = np.abs(u)
    w = (n * math.pi - u) / (2.0 * math.pi)
    with np.errstate(over="ignore"):
        return math.pi * n * n * np.sinc(w) ** 2 / (n * math.pi + u) ** 2


def _unit_density(fam, n, space, v):
    v = np.asarray(v, dtype=float)
    pos = space is Space.Position
    if fam is Family.HarmonicOscillator:
        return _ho(n, v)
    if fam is Family.RobinWall:
        if pos:
            return np.where(v >= 0, 2.0 * np.exp(-2.0 * np.maximum(v, 0.0)), 0.0)
        with np.errstate(over="ignore"):
            return 1.0 / (math.pi * (1.0 + v * v))
    if fam is Family.Q1DHydrogen:
        return _q1d_position(n, v) if pos else _q1d_momentum(n, v)
    if fam is Family.NeumannWell:
        if pos:
            return np.where(np.abs(v) <= 0.5, 1.0, 0.0)
        return np.sinc(v / (2.0 * math.pi)) ** 2 / (2.0 * math.pi)
    if fam is Family.DirichletWell:
        if pos:
            trig = np.cos if n % 2 else np.sin
            return np.where(np.abs(v) <= 0.5, 2.0 * trig(n * math.pi * v) ** 2, 0.0)
        return _dirichlet_momentum(n, v)
    raise AssertionError(fam)


def density(sys: SystemDescriptor, space: Space, point):
    """Probability density at ``point`` (scalar or array).

    Points outside the position support give 0.
    """
    s = sys.scale
    p = np.asarray(point, dtype=float)
    if space is Space.Position:
        out = _unit_density(sys.family, sys.n, space, p / s) / s
    else:
        out = s * _unit_density(sys.family, sys.n, space, s * p)
    return float(out) if out.ndim == 0 else out


def unit_density(sys: SystemDescriptor, space: Space):
    """The density at unit scale as a vectorized callable."""
    fam, n = sys.family, sys.n
    return lambda v: _unit_density(fam, n, space, v)


def support(sys: SystemDescriptor, space: Space) -> Interval:
    s = sys.scale
    if space is Space.Momentum or sys.family is Family.HarmonicOscillator:
        return Interval(-math.inf, math.inf)
    if sys.family in (Family.RobinWall, Family.Q1DHydrogen):
        return Interval(0.0, math.inf)
    return Interval(-0.5 * s, 0.5 * s)


def unit_support(sys: SystemDescriptor, space: Space) -> Interval:
    return support(sys.unit(), space)


def density_zeros(sys: SystemDescriptor, space: Space) -> list[float]:
    """Interior zeros of the unit-scale density (finite list).

    The well momentum densities have infinitely many zeros; only those
    below the start of their periodic tail are listed.
    """
    fam, n = sys.family, sys.n
    if fam is Family.HarmonicOscillator:
        return list(hermite_roots(n))
    if fam is Family.Q1DHydrogen and space is Space.Position:
        return list(0.5 * n * laguerre_roots(n - 1, 1.0))
    if fam is Family.DirichletWell and space is Space.Position:
        # zeros of cos or sin(n pi x) inside (-1/2, 1/2)
        j = np.arange(-n, n + 1)
        z = (j + (0.5 if n % 2 else 0.0)) / n
        return [float(x) for x in z if -0.5 < x < 0.5]
    if space is Space.Momentum and fam is Family.DirichletWell:
        # sinc((n pi - u)/(2 pi)) vanishes at u = (n - 2j) pi, j != 0
        zs = [(n - 2 * j) * math.pi for j in range(1, (n + 1) // 2)]
        zs = sorted(u for u in zs if u > 0)
        return [-u for u in reversed(zs)] + zs
    return []


def well_oscillation(sys: SystemDescriptor):
    """(first tail zero, period) of a well momentum density in the unit variable k a.

    Beyond the first tail zero, zeros repeat with the returned period.
    """
    if sys.family is Family.NeumannWell:
        return 2.0 * math.pi, 2.0 * math.pi
    if sys.family is Family.DirichletWell:
        return (sys.n + 2) * math.pi, 2.0 * math.pi
    raise ValueError("not a well")


def well_tail_factors(sys: SystemDescriptor):
    """(P, G) with density = P * G for the unit well momentum density.

    P is 2 pi periodic and vanishes at the tail zeros; G is smooth and
    decays as a power.  Used to build tail models for oscillatory windows.
    """
    n = sys.n
    if sys.family is Family.NeumannWell:
        return (lambda u: np.sin(0.5 * u) ** 2,
                lambda u: 2.0 / math.pi / (u * u))
    if sys.family is Family.DirichletWell:
        trig = np.cos if n % 2 else np.sin
        c = 4.0 * math.pi * n * n
        return (lambda u: trig(0.5 * u) ** 2,
                lambda u: c / (u * u - (n * math.pi) ** 2) ** 2)
    raise ValueError("not a well")


def density_max(sys: SystemDescriptor, space: Space):
    """(location, supremum) of the density."""
    fam, n, s = sys.family, sys.n, sys.scale
    pos = space is Space.Position
    fac = 1.0 / s if pos else s
    loc_fac = s if pos else 1.0 / s

    if fam is Family.HarmonicOscillator and n == 0:
        x, v = 0.0, 1.0 / math.sqrt(math.pi)
    elif fam is Family.HarmonicOscillator and n == 1:
        x, v = 1.0, 2.0 / (math.e * math.sqrt(math.pi))
    elif fam is Family.RobinWall:
        x, v = 0.0, (2.0 if pos else 1.0 / math.pi)
    elif fam is Family.Q1DHydrogen and not pos:
        x, v = 0.0, 2.0 * n / math.pi
    elif fam is Family.Q1DHydrogen and n == 1:
        x, v = 1.0, 4.0 * math.exp(-2.0)
    elif fam is Family.NeumannWell:
        x, v = 0.0, (1.0 if pos else 1.0 / (2.0 * math.pi))
    elif fam is Family.DirichletWell and pos:
        x, v = (0.0 if n % 2 else 0.5 / n), 2.0
    elif fam is Family.DirichletWell and n == 1:
        x, v = 0.0, 4.0 / math.pi ** 3
    else:
        x, v = _numeric_max(sys, space)
    return x * loc_fac, v * fac


def _numeric_max(sys, space):
    fam, n = sys.family, sys.n
    f = unit_density(sys, space)
    if fam is Family.HarmonicOscillator:
        grid = np.linspace(0.0, math.sqrt(2 * n + 1) + 2.0, 4000)
    elif fam is Family.Q1DHydrogen:
        grid = np.linspace(0.0, 2.0 * n * n + 10.0 * n, 8000)
    else:
        grid = np.linspace(0.0, (n + 2) * math.pi, 8000)
    vals = f(grid)
    i = int(np.argmax(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    x, v = golden_max(lambda t: float(f(np.array([t]))[0]), lo, hi, tol=1e-12)
    return x, max(v, float(vals[i]))


def energy(sys: SystemDescriptor) -> float:
    """Level energy in the family's natural unit.

    HO: hbar omega.  Robin: hbar^2/(m |Lambda|^2).  Q1D: m lambda^2/hbar^2.
    Wells: hbar^2/(m a^2).
    """
    fam, n = sys.family, sys.n
    if fam is Family.HarmonicOscillator:
        return n + 0.5
    if fam is Family.RobinWall:
        return -0.5
    if fam is Family.Q1DHydrogen:
        return -0.5 / (n * n)
    if fam is Family.NeumannWell:
        return 0.0
    return 0.5 * (math.pi * n) ** 2


# ---------------------------------------------------------------------------
# moments and deviations

def moment(sys: SystemDescriptor, space: Space, j: int, rel_tol: float = 1e-11) -> float:
    """<v^j> by quadrature, in physical units."""
    f = unit_density(sys, space)
    dom = unit_support(sys, space)
    pts = density_zeros(sys, space)
    if space is Space.Momentum and sys.family in (Family.NeumannWell, Family.DirichletWell):
        if j % 2:
            return 0.0
        if j >= 2 and sys.family is Family.NeumannWell:
            return math.inf
        first, period = well_oscillation(sys)
        g = lambda u: u ** j * f(u)
        head = integrate(g, (0.0, first), rel_tol=rel_tol,
                         points=[p for p in pts if p > 0]).value
        per, smooth = well_tail_factors(sys)
        model = quadrature.periodic_product_tail(
            [(per, lambda u: u ** j * smooth(u), None)], period, first)
        tail = quadrature.integrate_oscillatory_tail(g, period, first, rel_tol=1e-10,
                                                     tail_model=model).value
        m = 2.0 * (head + tail)
    elif _is_even(sys, space):
        if j % 2:
            return 0.0
        m = 2.0 * integrate(lambda v: v ** j * f(v), (0.0, dom.upper), rel_tol=rel_tol,
                            points=[p for p in pts if p > 0]).value
    else:
        m = integrate(lambda v: v ** j * f(v), dom, rel_tol=rel_tol, points=pts).value
    factor = sys.scale ** j if space is Space.Position else sys.scale ** (-j)
    return m * factor


def _is_even(sys, space):
    if space is Space.Momentum:
        return True
    return sys.family not in (Family.RobinWall, Family.Q1DHydrogen)


DECADE_CUTOFFS = (1e2, 1e3, 1e4, 1e5, 1e6)


def second_moment_diverges(sys: SystemDescriptor, space: Space) -> bool:
    """Cutoff test: integrate v^2 * density out to 1e2 ... 1e6 (unit scale).

    The second moment is declared divergent when the growth per decade does
    not shrink, i.e. the ratio of successive decade increments exceeds 0.9.
    """
    f = unit_density(sys, space)
    lo = unit_support(sys, space).lower
    g = lambda v: v * v * (f(v) + (f(-v) if lo < 0 else 0.0))
    total = integrate_panels(g, 0.0, DECADE_CUTOFFS[0], 400).value
    incs = []
    for a, b in zip(DECADE_CUTOFFS[:-1], DECADE_CUTOFFS[1:]):
        panels = int(min(max((b - a) / 2.0, 64), 500000))
        incs.append(integrate_panels(g, a, b, panels).value)
    total += sum(incs)
    if total <= 0 or incs[-1] <= 1e-12 * total:
        return False
    ratios = [b / a for a, b in zip(incs[:-1], incs[1:]) if a > 0]
    return len(ratios) >= 2 and ratios[-1] > 0.9 and ratios[-2] > 0.9


def deviation(sys: SystemDescriptor, space: Space) -> float:
    """Standard deviation from density moments; math.inf when <v^2> diverges."""
    if space is Space.Momentum and second_moment_diverges(sys, space):
        return math.inf
    m1 = moment(sys, space, 1)
    m2 = moment(sys, space, 2)
    return math.sqrt(max(m2 - m1 * m1, 0.0))


def operator_momentum_variance(sys: SystemDescriptor) -> float:
    """Variance of the wave vector operator -i d/dx taken in position space.

    For a real waveform <k> = 0 and <k^2> = int (dPsi/dx)^2 dx.
    """
    fam, n, s = sys.family, sys.n, sys.scale
    if fam is Family.NeumannWell:
        return 0.0  # constant waveform, zero derivative
    if fam is Family.HarmonicOscillator:
        lnorm = -0.25 * math.log(math.pi) - 0.5 * n * math.log(2.0) - 0.5 * ln_gamma(n + 1.0)

        def dpsi2(z):
            hn = hermite(n, z)
            hm = 2.0 * n * hermite(n - 1, z) if n > 0 else 0.0
            d = math.exp(lnorm) * np.exp(-0.5 * z * z) * (hm - z * hn)
            return d * d

        val = integrate(dpsi2, (-math.inf, math.inf), rel_tol=1e-12).value
        return val / (s * s)
    raise NotImplementedError(f"operator variance not provided for {fam.name}")

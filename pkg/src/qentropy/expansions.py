"""Catalog of asymptotic expansions of entropies, Rényi sums and Tsallis sides.

Each expansion knows its exact counterpart, so it can be checked by
remainder decay: |exact - truncated| / gauge must shrink toward the
expansion point, where the gauge is the size of the last kept order.
Where a coefficient in the commonly quoted form turned out to be wrong,
the corrected terms are used and the quoted ones are kept in
``quoted_terms`` so the discrepancy can be demonstrated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .specfun import EULER_GAMMA as G, ZETA3 as Z3
from .systems import Family, Space, SystemDescriptor

__all__ = [
    "Regime",
    "Quantity",
    "Term",
    "Expansion",
    "ExpansionCheck",
    "catalog",
    "find",
    "entropy_expansion",
]

LN2, LNPI, PI2 = math.log(2.0), math.log(math.pi), math.pi ** 2
LN2PI = math.log(2.0 * math.pi)


class Regime(Enum):
    AtZero = "zero"
    NearHalf = "half"
    NearOne = "one"
    AtInfinity = "infinity"
    AtThreshold = "threshold"


class Quantity(Enum):
    Renyi = "renyi"
    Tsallis = "tsallis"
    RenyiSum = "renyi_sum"
    Bound = "f_bound"
    TsallisLhs = "tsallis_lhs"
    TsallisRhs = "tsallis_rhs"


@dataclass(frozen=True)
class Term:
    label: str
    coefficient: float
    basis: Callable[[float], float]

    def __call__(self, x: float) -> float:
        return self.coefficient * self.basis(x)


@dataclass(frozen=True)
class ExpansionCheck:
    key: str
    points: tuple[float, float]
    ratios: tuple[float, float]
    passed: bool


@dataclass(frozen=True)
class Expansion:
    key: str
    family: Family | None
    n: int | None
    quantity: Quantity
    space: Space | None
    regime: Regime
    terms: tuple[Term, ...]
    gauge: Callable[[float], float]
    exact: Callable[[float], float]
    approach: tuple[float, float]
    quoted_terms: tuple[Term, ...] | None = None
    note: str = ""
    scale: float = 1.0

    def truncated(self, x: float, quoted: bool = False) -> float:
        terms = self.quoted_terms if quoted and self.quoted_terms else self.terms
        return math.fsum(t(x) for t in terms)

    def remainder_ratio(self, x: float, quoted: bool = False) -> float:
        return abs(self.exact(x) - self.truncated(x, quoted)) / abs(self.gauge(x))

    def coefficients(self, quoted: bool = False) -> list[tuple[str, float]]:
        terms = self.quoted_terms if quoted and self.quoted_terms else self.terms
        return [(t.label, t.coefficient) for t in terms]

    def check(self, quoted: bool = False, shrink: float = 0.5, small: float = 0.25) -> ExpansionCheck:
        """Remainder decay test at the two approach points (far, near)."""
        far, near = self.approach
        r1, r2 = self.remainder_ratio(far, quoted), self.remainder_ratio(near, quoted)
        ok = r2 <= small and (r2 <= shrink * r1 or r2 < 1e-9)
        return ExpansionCheck(self.key, (far, near), (r1, r2), ok)


# ---------------------------------------------------------------------------
# bases

def one(x): return 1.0
def ln(x): return math.log(x)
def d1(x): return x - 1.0
def d1sq(x): return (x - 1.0) ** 2
def d1cu(x): return (x - 1.0) ** 3
def lin(x): return x
def xlnx(x): return x * math.log(x)
def inv(x): return 1.0 / x
def invsq(x): return 1.0 / (x * x)
def lnx_x(x): return math.log(x) / x
def eps(x): return 2.0 * x - 1.0
def eps_ln(x): return (2.0 * x - 1.0) * math.log(2.0 * x - 1.0)
def h(x): return x - 0.5
def h_ln(x): return (x - 0.5) * math.log(x - 0.5)
def hsq(x): return (x - 0.5) ** 2
def q(x): return x - 0.25
def ln_q(x): return math.log(x - 0.25)
def inv_q(x): return 1.0 / (x - 0.25)


def _T(label, c, basis):
    return Term(label, float(c), basis)


# ---------------------------------------------------------------------------
# exact counterparts (lazy imports keep module import order simple)

def _renyi(fam, n, space, s=1.0):
    def f(a):
        from .entropy import renyi
        return renyi(SystemDescriptor(fam, n, s), space, a).value
    return f


def _tsallis(fam, n, space, s=1.0):
    def f(a):
        from .entropy import tsallis
        return tsallis(SystemDescriptor(fam, n, s), space, a).value
    return f


def _sum(fam, n):
    def f(a):
        from .uncertainty import renyi_sum
        return renyi_sum(SystemDescriptor(fam, n), a)
    return f


def _side(fam, n, which):
    def f(a):
        from .uncertainty import tsallis_sides
        return tsallis_sides(SystemDescriptor(fam, n), a)[which]
    return f


def _bound(a):
    from .uncertainty import f_bound
    return f_bound(a)


HO, RW, QH = Family.HarmonicOscillator, Family.RobinWall, Family.Q1DHydrogen
P, K = Space.Position, Space.Momentum
R, T, S = Quantity.Renyi, Quantity.Tsallis, Quantity.RenyiSum


def _build(s_ho=2.0, s_rw=0.5, s_q=1.5):
    """The catalog.  Scale-dependent Tsallis expansions are checked at the
    given non-unit scales so their scale terms are exercised."""
    E = []
    add = E.append

    # harmonic oscillator, Rényi entropies (equal in both spaces at unit scale)
    add(Expansion("ho0_renyi_zero", HO, 0, R, P, Regime.AtZero,
                  (_T("ln(pi)/2", 0.5 * LNPI, one), _T("ln a", -0.5, ln), _T("a ln a", -0.5, xlnx)),
                  xlnx, _renyi(HO, 0, P), (1e-2, 1e-4)))
    add(Expansion("ho1_renyi_zero", HO, 1, R, P, Regime.AtZero,
                  (_T("ln(pi)/2", 0.5 * LNPI, one), _T("ln a", -0.5, ln),
                   _T("a", -(G + LN2), lin), _T("a ln a", -1.5, xlnx)),
                  xlnx, _renyi(HO, 1, P), (1e-2, 1e-4),
                  quoted_terms=(_T("ln(pi)/2", 0.5 * LNPI, one), _T("ln a", -0.5, ln),
                                _T("a", -(G + math.log(2.0 * math.sqrt(math.pi))), lin),
                                _T("a ln a", -1.0, xlnx)),
                  note="the a ln a coefficient is -3/2 and ln pi/2 drops from the linear term"))
    add(Expansion("ho0_renyi_infinity", HO, 0, R, P, Regime.AtInfinity,
                  (_T("ln(pi)/2", 0.5 * LNPI, one), _T("ln a / a", 0.5, lnx_x)),
                  lnx_x, _renyi(HO, 0, P), (1e2, 1e4)))
    add(Expansion("ho1_renyi_infinity", HO, 1, R, P, Regime.AtInfinity,
                  (_T("1 - ln2 + ln(pi)/2", 1 - LN2 + 0.5 * LNPI, one), _T("ln a / a", 0.5, lnx_x),
                   _T("1 / a", 0.5 * (2 - 3 * LN2), inv)),
                  inv, _renyi(HO, 1, P), (1e2, 1e4)))
    add(Expansion("ho0_renyi_one", HO, 0, R, P, Regime.NearOne,
                  (_T("(1 + ln pi)/2", 0.5 * (1 + LNPI), one), _T("(a-1)", -0.25, d1),
                   _T("(a-1)^2", 1 / 6, d1sq)),
                  d1sq, _renyi(HO, 0, P), (1.05, 1.005)))
    add(Expansion("ho1_renyi_one", HO, 1, R, P, Regime.NearOne,
                  (_T("ln2 + g + ln(pi)/2 - 1/2", LN2 + G + 0.5 * LNPI - 0.5, one),
                   _T("(a-1)", -(PI2 - 9) / 4, d1), _T("(a-1)^2", (7 * Z3 - 8) / 3, d1sq)),
                  d1sq, _renyi(HO, 1, P), (1.05, 1.005)))

    # bound function
    add(Expansion("f_half", None, None, Quantity.Bound, None, Regime.NearHalf,
                  (_T("ln 2pi", LN2PI, one), _T("e", -1.0, eps), _T("e ln e", -1.0, eps_ln)),
                  eps, _bound, (0.5 + 1e-3, 0.5 + 1e-5)))
    add(Expansion("f_one", None, None, Quantity.Bound, None, Regime.NearOne,
                  (_T("1 + ln pi", 1 + LNPI, one), _T("(a-1)^2", -1 / 6, d1sq), _T("(a-1)^3", 1 / 3, d1cu)),
                  d1cu, _bound, (1.05, 1.005)))
    add(Expansion("f_infinity", None, None, Quantity.Bound, None, Regime.AtInfinity,
                  (_T("ln 2pi", LN2PI, one), _T("ln a / a", 0.5, lnx_x), _T("1 / a", 0.5 * (LN2 - 1), inv)),
                  inv, _bound, (1e2, 1e4)))

    # HO n = 1 Rényi sum
    add(Expansion("ho1_sum_half", HO, 1, S, None, Regime.NearHalf,
                  (_T("1 + ln4", 1 + 2 * LN2, one), _T("(a-1/2)", -2 * (G + LNPI), h),
                   _T("(a-1/2) ln(a-1/2)", -2.0, h_ln)),
                  h, _sum(HO, 1), (0.5 + 1e-3, 0.5 + 1e-5)))
    add(Expansion("ho1_sum_one", HO, 1, S, None, Regime.NearOne,
                  (_T("2g - 1 + ln 4pi", 2 * G - 1 + math.log(4 * math.pi), one),
                   _T("(a-1)^2", 14 / 3 * Z3 - PI2 / 2 - 5 / 6, d1sq)),
                  d1sq, _sum(HO, 1), (1.05, 1.005)))
    add(Expansion("ho1_sum_infinity", HO, 1, S, None, Regime.AtInfinity,
                  (_T("1 + ln4", 1 + 2 * LN2, one), _T("ln a / a", 0.5, lnx_x),
                   _T("1 / a", 0.5 * (math.log(4 / math.pi) - G), inv)),
                  inv, _sum(HO, 1), (1e2, 1e4)))

    # HO Tsallis near one, general r_w
    for space, sign in ((P, 1.0), (K, -1.0)):
        l = math.log(math.sqrt(math.pi) * s_ho ** sign)
        add(Expansion(f"ho0_tsallis_{space.value}_one", HO, 0, T, space, Regime.NearOne,
                      (_T("+-ln r + (1 + ln pi)/2", sign * math.log(s_ho) + 0.5 * (1 + LNPI), one),
                       _T("(a-1)", -0.5 * (l * l + l + 0.75), d1)),
                      d1, _tsallis(HO, 0, space, s_ho), (1.01, 1.001), scale=s_ho))
    c = (G - 1 + LN2) / 2
    add(Expansion("ho1_tsallis_lhs_one", HO, 1, Quantity.TsallisLhs, P, Regime.NearOne,
                  (_T("pi^-1/4", math.pi ** -0.25, one), _T("(a-1)", -c * math.pi ** -0.25, d1)),
                  d1, _side(HO, 1, 0), (1.01, 1.001)))
    add(Expansion("ho1_tsallis_rhs_one", HO, 1, Quantity.TsallisRhs, K, Regime.NearOne,
                  (_T("pi^-1/4", math.pi ** -0.25, one), _T("(a-1)", c * math.pi ** -0.25, d1)),
                  d1, _side(HO, 1, 1), (1.01, 1.001)))

    # Robin wall
    s = s_rw
    add(Expansion("robin_renyi_k_threshold", RW, 0, R, K, Regime.AtThreshold,
                  (_T("ln(a-1/2)", -2.0, lambda a: math.log(a - 0.5)),
                   _T("-ln|L| - ln pi", -LNPI, one)),
                  one, _renyi(RW, 0, K), (0.5 + 1e-2, 0.5 + 1e-4)))
    add(Expansion("robin_renyi_x_infinity", RW, 0, R, P, Regime.AtInfinity,
                  (_T("-ln2", -LN2, one), _T("ln a / a", 1.0, lnx_x)),
                  lnx_x, _renyi(RW, 0, P), (1e2, 1e4)))
    add(Expansion("robin_renyi_k_infinity", RW, 0, R, K, Regime.AtInfinity,
                  (_T("ln pi", LNPI, one), _T("ln a / a", 0.5, lnx_x)),
                  lnx_x, _renyi(RW, 0, K), (1e2, 1e4)))
    add(Expansion("robin_renyi_x_one", RW, 0, R, P, Regime.NearOne,
                  (_T("1 - ln2", 1 - LN2, one), _T("(a-1)", -0.5, d1), _T("(a-1)^2", 1 / 3, d1sq)),
                  d1sq, _renyi(RW, 0, P), (1.05, 1.005)))
    add(Expansion("robin_renyi_k_one", RW, 0, R, K, Regime.NearOne,
                  (_T("ln pi + ln4", LNPI + 2 * LN2, one), _T("(a-1)", -PI2 / 6, d1),
                   _T("(a-1)^2", 2 * Z3, d1sq)),
                  d1sq, _renyi(RW, 0, K), (1.05, 1.005)))
    add(Expansion("robin_sum_half", RW, 0, S, None, Regime.NearHalf,
                  (_T("ln 2pi", LN2PI, one), _T("e", LN2PI - 2, eps), _T("e ln e", -1.0, eps_ln)),
                  eps, _sum(RW, 0), (0.5 + 1e-3, 0.5 + 1e-5),
                  quoted_terms=(_T("ln 2pi", LN2PI, one), _T("e", 2 * math.log(2 * math.sqrt(math.pi)), eps),
                                _T("e ln e", -2.0, eps_ln)),
                  note="the e ln e coefficient is -1 and the linear one ln 2pi - 2"))
    add(Expansion("robin_sum_one", RW, 0, S, None, Regime.NearOne,
                  (_T("1 + ln pi + ln2", 1 + LNPI + LN2, one), _T("(a-1)", PI2 / 6 - 0.5, d1),
                   _T("(a-1)^2", 1 / 3 + 2 * Z3 - PI2 / 3, d1sq)),
                  d1sq, _sum(RW, 0), (1.05, 1.005)))
    add(Expansion("robin_sum_infinity", RW, 0, S, None, Regime.AtInfinity,
                  (_T("2 ln a", 2.0, ln), _T("ln(8/pi)", math.log(8 / math.pi), one),
                   _T("ln a / a", 2.0, lnx_x), _T("1 / a", math.log(8 / math.pi) - 1, inv)),
                  inv, _sum(RW, 0), (1e2, 1e4)))
    l = math.log(2.0 / s)
    add(Expansion("robin_tsallis_x_one", RW, 0, T, P, Regime.NearOne,
                  (_T("ln|L| - ln2 + 1", math.log(s) - LN2 + 1, one),
                   _T("(a-1)", -(0.5 * l * l - l + 1), d1)),
                  d1, _tsallis(RW, 0, P, s), (1.01, 1.001),
                  quoted_terms=(_T("ln|L| - ln2 + 1", math.log(s) - LN2 + 1, one),
                                _T("(a-1)", 0.5 * l * l - l + 1, d1)),
                  note="the linear coefficient has the opposite sign", scale=s))
    ls = math.log(s)
    add(Expansion("robin_tsallis_k_one", RW, 0, T, K, Regime.NearOne,
                  (_T("-ln|L| + ln pi + ln4", -ls + LNPI + 2 * LN2, one),
                   _T("(a-1)", -PI2 / 6 - 2 * LN2 ** 2 - 0.5 * LNPI ** 2 - 2 * LNPI * LN2
                      - 0.5 * ls * ls + math.log(4 * math.pi) * ls, d1)),
                  d1, _tsallis(RW, 0, K, s), (1.01, 1.001), scale=s))
    pq = math.pi ** -0.25
    add(Expansion("robin_tsallis_lhs_one", RW, 0, Quantity.TsallisLhs, P, Regime.NearOne,
                  (_T("pi^-1/4", pq, one), _T("(a-1)", pq * (math.log(4 * math.pi) - 1) / 4, d1)),
                  d1, _side(RW, 0, 0), (1.01, 1.001)))
    add(Expansion("robin_tsallis_rhs_one", RW, 0, Quantity.TsallisRhs, K, Regime.NearOne,
                  (_T("pi^-1/4", pq, one), _T("(a-1)", pq * (math.log(16 * math.pi) - 1) / 4, d1)),
                  d1, _side(RW, 0, 1), (1.01, 1.001)))
    ph = math.pi ** -0.5
    add(Expansion("robin_tsallis_lhs_half", RW, 0, Quantity.TsallisLhs, P, Regime.NearHalf,
                  (_T("pi^-1/2", ph, one), _T("(a-1/2)", ph * (LN2PI - 1), h)),
                  h, _side(RW, 0, 0), (0.5 + 1e-2, 0.5 + 1e-3)))
    add(Expansion("robin_tsallis_rhs_half", RW, 0, Quantity.TsallisRhs, K, Regime.NearHalf,
                  (_T("pi^-1/2", ph, one), _T("(a-1/2)^2", 3 * ph, hsq)),
                  hsq, _side(RW, 0, 1), (0.5 + 1e-2, 0.5 + 1e-3)))

    # Q1D hydrogen
    add(Expansion("q1d1_renyi_x_zero", QH, 1, R, P, Regime.AtZero,
                  (_T("-ln 2a", -1.0, lambda a: math.log(2 * a)), _T("a", -(2 * G + LN2), lin),
                   _T("a ln a", -3.0, xlnx)),
                  xlnx, _renyi(QH, 1, P), (1e-2, 1e-4)))
    add(Expansion("q1d1_renyi_x_one", QH, 1, R, P, Regime.NearOne,
                  (_T("2g", 2 * G, one), _T("(a-1)", 3 - PI2 / 3, d1), _T("(a-1)^2", 8 / 3 * Z3 - 3, d1sq)),
                  d1sq, _renyi(QH, 1, P), (1.05, 1.005)))
    add(Expansion("q1d1_renyi_x_infinity", QH, 1, R, P, Regime.AtInfinity,
                  (_T("2 - ln4", 2 - 2 * LN2, one), _T("ln a / a", 0.5, lnx_x),
                   _T("1 / a", 0.5 * (4 - math.log(16 * math.pi)), inv)),
                  inv, _renyi(QH, 1, P), (1e2, 1e4),
                  quoted_terms=(_T("2 - ln4", 2 - 2 * LN2, one), _T("ln a / a", 1.0, lnx_x),
                                _T("1 / a", 4 - math.log(16 * math.pi), inv)),
                  note="the 1/a and ln a / a coefficients carry an extra factor 1/2"))
    for n in (1, 2, 3):
        add(Expansion(f"q1d{n}_renyi_k_threshold", QH, n, R, K, Regime.AtThreshold,
                      (_T("ln(a-1/4)", -4 / 3, ln_q),
                       _T("-(4/3) ln(pi^1/4 (2n)^3/4)", -4 / 3 * (0.25 * LNPI + 0.75 * math.log(2 * n)), one)),
                      one, _renyi(QH, n, K), (0.25 + 1e-2, 0.25 + 1e-4)))
        add(Expansion(f"q1d{n}_renyi_k_one", QH, n, R, K, Regime.NearOne,
                      (_T("-2 + ln(8pi/n)", -2 + math.log(8 * math.pi / n), one),
                       _T("(a-1)", 6 - 2 / 3 * PI2, d1), _T("(a-1)^2", 16 * Z3 - 56 / 3, d1sq)),
                      d1sq, _renyi(QH, n, K), (1.05, 1.005)))
        add(Expansion(f"q1d{n}_renyi_k_infinity", QH, n, R, K, Regime.AtInfinity,
                      (_T("ln(pi/2n)", math.log(math.pi / (2 * n)), one), _T("ln a / a", 0.5, lnx_x),
                       _T("1 / a", 0.5 * math.log(math.pi / 2), inv)),
                      inv, _renyi(QH, n, K), (1e2, 1e4)))
    x0 = s_q
    lx = math.log(x0)
    add(Expansion("q1d1_tsallis_x_zero", QH, 1, T, P, Regime.AtZero,
                  (_T("x0 / 2a", x0 / 2, inv), _T("-1 + x0/2 - (2g + ln x0) x0 / 2", -1 + x0 / 2 - 0.5 * (2 * G + lx) * x0, one),
                   _T("ln a", -x0, ln)),
                  one, _tsallis(QH, 1, P, x0), (1e-3, 1e-5), scale=x0,
                  note="the remainder is of order a ln^2 a"))
    c2 = (lx ** 3 / 6 + G * lx ** 2 + (2 * PI2 + 12 * G * G - 18) / 6 * lx
          + 8 / 3 * Z3 + 2 / 3 * G * PI2 + 4 / 3 * G ** 3 - 6 * G - 3)
    add(Expansion("q1d1_tsallis_x_one", QH, 1, T, P, Regime.NearOne,
                  (_T("ln x0 + 2g", lx + 2 * G, one),
                   _T("(a-1)", 3 - PI2 / 3 - 2 * G * G - 2 * G * lx - 0.5 * lx * lx, d1),
                   _T("(a-1)^2", c2, d1sq)),
                  d1sq, _tsallis(QH, 1, P, x0), (1.05, 1.005), scale=x0))
    add(Expansion("q1d1_tsallis_x_infinity", QH, 1, T, P, Regime.AtInfinity,
                  (_T("1 / a", 1.0, inv), _T("1 / a^2", 1.0, invsq)),
                  invsq, _tsallis(QH, 1, P, 1.0), (1e1, 1e2), note="unit x0"))
    for n in (1, 2):
        C = x0 ** -0.75 * (2 / (math.pi * n ** 3)) ** 0.25
        const = -4 / 3 + C * (8 / 9 + 2 / 3 * math.log(2 * n * x0 / math.pi) + 8 / 3 * LN2)
        add(Expansion(f"q1d{n}_tsallis_k_threshold", QH, n, T, K, Regime.AtThreshold,
                      (_T("1/(a-1/4)", 2 / 3 * C, inv_q), _T("constant", const, one)),
                      one, _tsallis(QH, n, K, x0),
                      (0.25 + 1e-2, 0.25 + 1e-4),
                      quoted_terms=(_T("1/(a-1/4)", 2 / 3 * C, inv_q), _T("-4/3", -4 / 3, one)),
                      note="the constant term also carries a C-dependent part", scale=x0))
    add(Expansion("q1d1_sum_half", QH, 1, S, None, Regime.NearHalf,
                  (_T("ln 2pi", LN2PI, one), _T("e", math.log(4 * math.pi) - 2 - 2 * G, eps),
                   _T("e ln e", -1.0, eps_ln)),
                  eps, _sum(QH, 1), (0.5 + 1e-3, 0.5 + 1e-5),
                  quoted_terms=(_T("ln 2pi", LN2PI, one), _T("e", math.log(8) - G - 1, eps),
                                _T("e ln e", -1.0, eps_ln)),
                  note="the linear coefficient is ln 4pi - 2 - 2g"))
    add(Expansion("q1d1_sum_one", QH, 1, S, None, Regime.NearOne,
                  (_T("2g - 2 + ln 8pi", 2 * G - 2 + math.log(8 * math.pi), one),
                   _T("(a-1)", PI2 / 3 - 3, d1),
                   _T("(a-1)^2", -4 / 3 * PI2 + 56 / 3 * Z3 - 29 / 3, d1sq)),
                  d1sq, _sum(QH, 1), (1.05, 1.005)))
    add(Expansion("q1d1_sum_infinity", QH, 1, S, None, Regime.AtInfinity,
                  (_T("2 + ln(pi/2)", 2 + math.log(math.pi / 2), one), _T("ln a / a", 0.5, lnx_x),
                   _T("1 / a", 2 - math.log(8) - 0.5 * LNPI, inv)),
                  inv, _sum(QH, 1), (1e2, 1e4)))
    r2p = math.sqrt(2 / math.pi)
    add(Expansion("q1d1_tsallis_lhs_half", QH, 1, Quantity.TsallisLhs, P, Regime.NearHalf,
                  (_T("sqrt(2/pi)", r2p, one), _T("(a-1/2)", -r2p * (2 * G + 1 - LN2PI), h)),
                  h, _side(QH, 1, 0), (0.5 + 1e-2, 0.5 + 1e-3),
                  quoted_terms=(_T("sqrt(2/pi)", r2p, one), _T("(a-1/2)", -r2p * LN2, h)),
                  note="the two sides are interchanged: the position side carries 2g + 1 - ln 2pi"))
    add(Expansion("q1d1_tsallis_rhs_half", QH, 1, Quantity.TsallisRhs, K, Regime.NearHalf,
                  (_T("sqrt(2/pi)", r2p, one), _T("(a-1/2)", -r2p * LN2, h)),
                  h, _side(QH, 1, 1), (0.5 + 1e-2, 0.5 + 1e-3),
                  quoted_terms=(_T("sqrt(2/pi)", r2p, one), _T("(a-1/2)", -r2p * (2 * G + 1 - LN2PI), h)),
                  note="the two sides are interchanged: the momentum side carries ln 2"))
    add(Expansion("q1d1_tsallis_lhs_one", QH, 1, Quantity.TsallisLhs, P, Regime.NearOne,
                  (_T("pi^-1/4", pq, one), _T("(a-1)", pq * (1 - 4 * G + LNPI) / 4, d1)),
                  d1, _side(QH, 1, 0), (1.01, 1.001)))
    add(Expansion("q1d1_tsallis_rhs_one", QH, 1, Quantity.TsallisRhs, K, Regime.NearOne,
                  (_T("pi^-1/4", pq, one), _T("(a-1)", pq * (math.log(64 * math.pi) - 5) / 4, d1)),
                  d1, _side(QH, 1, 1), (1.01, 1.001)))
    return tuple(E)


_CATALOG: tuple[Expansion, ...] | None = None


def catalog() -> tuple[Expansion, ...]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return _CATALOG


def find(key: str) -> Expansion:
    for e in catalog():
        if e.key == key:
            return e
    raise KeyError(key)


def entropy_expansion(sys: SystemDescriptor, space: Space, regime: Regime | str,
                      quantity: Quantity = Quantity.Renyi) -> Expansion:
    """The cataloged expansion of one entropy of ``sys`` (state only; scale ignored)."""
    regime = Regime(regime) if isinstance(regime, str) else regime
    # the oscillator's two spaces share their Rényi expansions
    look = Space.Position if sys.family is Family.HarmonicOscillator and quantity is Quantity.Renyi else space
    for e in catalog():
        if (e.family is sys.family and e.n == sys.n and e.quantity is quantity
                and e.space is look and e.regime is regime):
            return e
    raise NotImplementedError(
        f"no expansion for {sys.label()} {space.value} {quantity.value} at {regime.value}")

"""Adaptive Gauss-Kronrod integration on finite and infinite intervals.

The integrand is always called with a 1-D numpy array and must return an
array of the same shape.  Infinite ends are mapped onto a finite parameter
interval with x = t/(1 - t^2); see ``_semi_infinite``.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Interval",
    "QuadratureResult",
    "NonConvergent",
    "PropagatedInvalid",
    "integrate",
    "integrate_panels",
    "integrate_oscillatory_tail",
    "periodic_product_tail",
    "DEFAULT_REL_TOL",
    "SWEEP_REL_TOL",
]

DEFAULT_REL_TOL = 1e-10
SWEEP_REL_TOL = 1e-8
MAX_SUBDIVISIONS = 2000

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny

# Kronrod 15 / Gauss 7 abscissae and weights on [-1, 1]
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
_WK15 = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
_WG7 = np.zeros(15)
_WG7[[1, 3, 5, 7, 9, 11, 13]] = [_WG[0], _WG[1], _WG[2], _WG[3], _WG[2], _WG[1], _WG[0]]


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    def __post_init__(self):
        lo, hi = float(self.lower), float(self.upper)
        if math.isnan(lo) or math.isnan(hi) or not lo < hi:
            raise ValueError(f"invalid interval ({self.lower}, {self.upper})")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def finite(self) -> bool:
        return math.isfinite(self.lower) and math.isfinite(self.upper)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    subdivisions: int


class NonConvergent(ArithmeticError):
    """Raised when the error target is not met; ``best`` holds the last estimate."""

    def __init__(self, message: str, best: QuadratureResult):
        super().__init__(message)
        self.best = best


class PropagatedInvalid(ArithmeticError):
    """The integrand produced NaN or an infinity at a sample point."""


def _as_interval(domain) -> Interval:
    if isinstance(domain, Interval):
        return domain
    lo, hi = domain
    return Interval(lo, hi)


def _gk15(g, a, b):
    """Apply the 15-point rule to each [a_i, b_i]; returns (integral, error)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = c[:, None] + h[:, None] * _NODES[None, :]
    fx = np.asarray(g(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x[~np.isfinite(fx)][0]
        raise PropagatedInvalid(f"integrand is not finite at x = {bad!r}")
    kron = h * (fx @ _WK15)
    gauss = h * (fx @ _WG7)
    # QUADPACK error heuristic
    mean = (fx @ _WK15) * 0.5
    resabs = np.abs(h) * (np.abs(fx) @ _WK15)
    resasc = np.abs(h) * (np.abs(fx - mean[:, None]) @ _WK15)
    err = np.abs(kron - gauss)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    floor = 50.0 * _EPS * resabs
    err = np.where(resabs > _TINY / (50.0 * _EPS), np.maximum(err, floor), err)
    return kron, err


def _semi_infinite(f, anchor, sign):
    # x = anchor + sign * t/(1 - t^2) with t = 1 - s, s in (0, 1]; writing it
    # in s keeps points near the infinite end distinguishable.
    def g(s):
        q = s * (2.0 - s)
        t = 1.0 - s
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            x = anchor + sign * t / q
            # divide twice so the Jacobian itself never overflows
            out = np.asarray(f(x), dtype=float) / q * ((1.0 + t * t) / q)
        return np.where(np.isfinite(x), out, 0.0)
    return g


def _pieces(f, domain: Interval, points: Sequence[float]):
    """Split the domain into (g, lo, hi) pieces with g defined on [lo, hi]."""
    lo, hi = domain.lower, domain.upper
    inner = sorted({float(p) for p in points if lo < p < hi and math.isfinite(p)})
    if not inner and math.isinf(lo) and math.isinf(hi):
        inner = [0.0]
    # a finite piece next to every finite anchor of an infinite end: the
    # mapped variable has no resolution near the anchor itself, so endpoint
    # singularities there must be bisected in x
    if math.isinf(lo):
        inner = [(inner[0] if inner else hi) - 1.0] + inner
    if math.isinf(hi):
        inner = inner + [(inner[-1] if inner else lo) + 1.0]
    cuts = [lo] + inner + [hi]
    pieces = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        if math.isinf(a):
            pieces.append((_semi_infinite(f, b, -1.0), 0.0, 1.0))
        elif math.isinf(b):
            pieces.append((_semi_infinite(f, a, 1.0), 0.0, 1.0))
        else:
            pieces.append((f, a, b))
    return pieces


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    domain,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = 0.0,
    points: Sequence[float] = (),
    max_subdivisions: int = MAX_SUBDIVISIONS,
) -> QuadratureResult:
    """Integrate ``f`` over ``domain`` to max(abs_tol, rel_tol * |value|).

    ``points`` are interior breakpoints, typically known zeros or kinks of
    the integrand; no node is ever placed on them.
    """
    if not rel_tol >= 1e-13 and abs_tol <= 0:
        raise ValueError("rel_tol must be at least 1e-13")
    domain = _as_interval(domain)
    pieces = _pieces(f, domain, points)

    heap = []
    done = []  # intervals that cannot be bisected further
    for idx, (g, a, b) in enumerate(pieces):
        val, err = _gk15(g, np.array([a]), np.array([b]))
        heapq.heappush(heap, (-err[0], idx, a, b, val[0]))
    subdivisions = 0

    def totals():
        vals = [v for *_, v in heap] + [v for _, v in done]
        errs = [-e for e, *_ in heap] + [e for e, _ in done]
        return math.fsum(vals), math.fsum(errs)

    total, total_err = totals()
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if not heap:
            raise NonConvergent("all subintervals exhausted at round-off level",
                                QuadratureResult(total, total_err, subdivisions))
        if subdivisions >= max_subdivisions:
            raise NonConvergent(f"no convergence after {subdivisions} subdivisions",
                                QuadratureResult(total, total_err, subdivisions))
        neg_err, idx, a, b, val = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b) or (b - a) <= 8 * _EPS * max(abs(a), abs(b), _TINY):
            done.append((-neg_err, val))
            total, total_err = totals()
            continue
        g = pieces[idx][0]
        vals, errs = _gk15(g, np.array([a, mid]), np.array([mid, b]))
        heapq.heappush(heap, (-errs[0], idx, a, mid, vals[0]))
        heapq.heappush(heap, (-errs[1], idx, mid, b, vals[1]))
        subdivisions += 1
        total += vals[0] + vals[1] - val
        total_err += errs[0] + errs[1] + neg_err
        if subdivisions % 64 == 0:
            total, total_err = totals()
    total, total_err = totals()
    return QuadratureResult(total, total_err, subdivisions)


def integrate_panels(f, a: float, b: float, n_panels: int) -> QuadratureResult:
    """Non-adaptive composite GK15 on ``n_panels`` equal panels.

    Meant for long ranges where the panel width is known to resolve ``f``,
    such as the second-moment cutoff runs in ``systems``.
    """
    edges = np.linspace(a, b, int(n_panels) + 1)
    value = 0.0
    error = 0.0
    chunk = 20000
    n_panels = int(n_panels)
    for i in range(0, n_panels, chunk):
        j = min(i + chunk, n_panels)
        v, e = _gk15(f, edges[i:j], edges[i + 1:j + 1])
        value += math.fsum(v)
        error += float(np.sum(e))
    return QuadratureResult(value, error, int(n_panels))


# ---------------------------------------------------------------------------
# oscillatory tails

_HALF_PANELS = 4  # GK15 panels per half window


def _windows(f, start, period, first, count):
    """Integrals over windows [start + m P, start + (m+1) P], m = first..first+count-1.

    Each half window is integrated in t with x = edge + h t^3, which tames
    the power-law zeros these integrands have at window edges.
    """
    m = np.arange(first, first + count, dtype=float)
    lo = start + m * period
    h = 0.5 * period
    t_edges = np.linspace(0.0, 1.0, _HALF_PANELS + 1)
    ta = np.tile(t_edges[:-1], count)
    tb = np.tile(t_edges[1:], count)
    left = np.repeat(lo, _HALF_PANELS)
    right = np.repeat(lo + period, _HALF_PANELS)

    def from_left(t):
        t = t.reshape(-1, 15)
        x = left[:, None] + h * t ** 3
        return (np.asarray(f(x.ravel()), dtype=float).reshape(t.shape) * 3 * h * t * t).ravel()

    def from_right(t):
        t = t.reshape(-1, 15)
        x = right[:, None] - h * t ** 3
        return (np.asarray(f(x.ravel()), dtype=float).reshape(t.shape) * 3 * h * t * t).ravel()

    v1, e1 = _gk15(from_left, ta, tb)
    v2, e2 = _gk15(from_right, ta, tb)
    vals = (v1 + v2).reshape(count, _HALF_PANELS).sum(axis=1)
    errs = (e1 + e2).reshape(count, _HALF_PANELS).sum(axis=1)
    return vals, errs


def _check_envelope(w, run_limit=50):
    a = np.abs(w)
    run = 0
    for k in range(1, len(a)):
        run = run + 1 if a[k] >= a[k - 1] and a[k] > 0 else 0
        if run >= run_limit:
            return False
    return True


def _levin_u(terms, b):
    """Levin u estimate of sum(terms) using all given terms.

    ``b`` is the (1-based) index of the first term in the full series.
    """
    k = len(terms) - 1
    partial = np.cumsum(terms)
    n = np.arange(k + 1, dtype=float)
    omega = (n + b) * terms
    binom = np.array([math.comb(k, j) for j in range(k + 1)], dtype=float)
    c = (-1.0) ** n * binom * ((b + n) / (b + k)) ** (k - 1)
    return float(np.sum(c * partial / omega) / np.sum(c / omega))


def _levin_sum(w, head=8, orders=range(4, 12)):
    """Head sum plus Levin-accelerated remainder; returns (value, error)."""
    base = math.fsum(w[:head])
    tail = w[head:]
    if np.all(tail == 0):
        return base, 0.0
    est = []
    for k in orders:
        if k + 1 > len(tail):
            break
        est.append(_levin_u(tail[:k + 1], head + 1))
    diffs = np.abs(np.diff(est))
    j = int(np.argmin(diffs))
    return base + est[j + 1], float(diffs[j])


def integrate_oscillatory_tail(
    f: Callable[[np.ndarray], np.ndarray],
    period: float,
    start: float,
    rel_tol: float = DEFAULT_REL_TOL,
    tail_model: Callable[[float], float] | None = None,
    max_windows: int = 1 << 16,
    abs_tol: float = 0.0,
) -> QuadratureResult:
    """Integral of ``f`` over [start, inf) by summing one-period windows.

    Without ``tail_model`` the window series is accelerated with the Levin
    u transform.  With a model (an asymptotic estimate of the integral from
    a window edge to infinity) windows are summed directly in doubling
    blocks and the model closes the sum.  ``start`` should be a zero of
    ``f`` and ``period`` the spacing of its zeros.  Convergence is declared
    once the error estimate is below max(abs_tol, rel_tol * |value|).
    """
    if not period > 0:
        raise ValueError("period must be positive")
    if tail_model is None:
        w, e = _windows(f, start, period, 0, 24)
        if not _check_envelope(w, run_limit=min(50, len(w) - 1)):
            raise NonConvergent("window envelope is not decreasing",
                                QuadratureResult(float(np.sum(w)), math.inf, len(w)))
        value, err = _levin_sum(w)
        err += float(np.sum(e))
        res = QuadratureResult(value, err, 2 * _HALF_PANELS * len(w))
        if err > max(abs_tol, rel_tol * abs(value)) and err > 1e-300:
            raise NonConvergent("accelerated window sum did not reach tolerance", res)
        return res

    n = 64
    w, e = _windows(f, start, period, 0, n)
    prev = None
    while True:
        if not _check_envelope(w):
            raise NonConvergent("window envelope is not decreasing",
                                QuadratureResult(math.fsum(w), math.inf, len(w)))
        value = math.fsum(w) + tail_model(start + n * period)
        quad_err = float(np.sum(e))
        if prev is not None:
            err = abs(value - prev) + quad_err
            res = QuadratureResult(value, err, 2 * _HALF_PANELS * n)
            if err <= max(abs_tol, rel_tol * abs(value)):
                return res
            if 2 * n > max_windows:
                raise NonConvergent("window budget exhausted", res)
        prev = value
        w2, e2 = _windows(f, start, period, n, n)
        w = np.concatenate([w, w2])
        e = np.concatenate([e, e2])
        n *= 2


def periodic_product_tail(pieces, period: float, phase: float):
    """Asymptotic tail for integrands of the form sum_i P_i(x) G_i(x).

    Each piece is ``(P, G, G_tail)`` where P has the given period, G is
    smooth and decaying, and G_tail(Z) = integral of G over [Z, inf) (or
    None to integrate it numerically).  Writing P = M + q with q of zero
    mean and integrating by parts once gives

        int_Z^inf P G  ~  M int_Z^inf G + Qbar G(Z)

    where Qbar is the mean of the zero-mean antiderivative of q.  Z must be
    congruent to ``phase`` modulo the period.  The neglected term is of
    order period^2 |G'(Z)|.
    """
    consts = []
    a, b = phase, phase + period
    mid = 0.5 * (a + b)
    for p, g, g_tail in pieces:
        mean = integrate(p, (a, b), rel_tol=1e-12, points=(mid,)).value / period
        # mean of Q(u) = int_a^u (p - M) is (1/P) int_a^b (b - v)(p(v) - M) dv
        qbar = integrate(lambda v: (b - v) * (p(v) - mean), (a, b),
                         rel_tol=1e-12, abs_tol=1e-13 * period * max(abs(mean), 1e-3),
                         points=(mid,)).value / period
        consts.append((mean, qbar, g, g_tail))

    def tail(z: float) -> float:
        total = 0.0
        for mean, qbar, g, g_tail in consts:
            if g_tail is None:
                gi = integrate(g, (z, math.inf), rel_tol=1e-12).value
            else:
                gi = g_tail(z)
            total += mean * gi + qbar * float(g(np.array([z]))[0])
        return total

    return tail

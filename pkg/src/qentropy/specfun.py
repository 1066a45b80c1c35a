"""Special functions and constants used by the closed-form entropies.

Everything here is self-contained: log-gamma by a Lanczos rational
approximation, and the physicists' Hermite / generalized Laguerre
polynomials by their three-term recurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MathConstants",
    "CONSTANTS",
    "EULER_GAMMA",
    "ZETA3",
    "ln_gamma",
    "gamma_ratio_log",
    "hermite",
    "laguerre_gen",
    "hermite_roots",
    "laguerre_roots",
    "MAX_DEGREE",
]

MAX_DEGREE = 60


@dataclass(frozen=True)
class MathConstants:
    euler_gamma: float = 0.57721566490153286061
    zeta3: float = 1.20205690315959428540
    ln_pi: float = 1.14472988584940017414
    ln_2pi: float = 1.83787706640934548356


CONSTANTS = MathConstants()
EULER_GAMMA = CONSTANTS.euler_gamma
ZETA3 = CONSTANTS.zeta3

# Lanczos coefficients for g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LN_2PI = 0.91893853320467274178

# zeta(k), k = 2..30, for the Taylor series of ln Gamma about 1 and 2
_ZETA_INT = (
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284, 1.0000000074507117898, 1.0000000037253340248,
    1.0000000018626597235, 1.0000000009313274324,
)
_SERIES_RADIUS = 0.25


def _ln_gamma_lanczos(x):
    # valid for x >= 0.5
    z = x - 1.0
    acc = np.full_like(z, _LANCZOS_COEF[0])
    for k, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc = acc + c / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LN_2PI + (z + 0.5) * np.log(t) - t + np.log(acc)


def _ln_gamma_near_one(z):
    # ln Gamma(1 + z) = -gamma z + sum_k (-1)^k zeta(k) z^k / k, |z| <= 1/4
    acc = np.zeros_like(z)
    for k in range(len(_ZETA_INT) + 1, 1, -1):
        acc = acc * z + (-1) ** k * _ZETA_INT[k - 2] / k
    return z * (acc * z - EULER_GAMMA)


def ln_gamma(x):
    """Natural log of the gamma function for positive arguments.

    Accepts a scalar or an array; returns the same shape. Arguments below
    one half go through the reflection formula internally.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise ValueError("ln_gamma is defined here for x > 0 only")
    out = np.empty_like(arr)
    big = arr >= 0.5
    out[big] = _ln_gamma_lanczos(arr[big])
    small = ~big
    if np.any(small):
        xs = arr[small]
        # Gamma(x) Gamma(1-x) = pi / sin(pi x)
        out[small] = (math.log(math.pi) - np.log(np.sin(np.pi * xs))
                      - _ln_gamma_lanczos(1.0 - xs))
    # relative accuracy near the roots at 1 and 2
    near1 = np.abs(arr - 1.0) <= _SERIES_RADIUS
    out[near1] = _ln_gamma_near_one(arr[near1] - 1.0)
    near2 = np.abs(arr - 2.0) <= _SERIES_RADIUS
    z2 = arr[near2] - 2.0
    out[near2] = np.log1p(z2) + _ln_gamma_near_one(z2)
    if out.ndim == 0:
        return float(out)
    return out


def gamma_ratio_log(a, b):
    """ln(Gamma(a) / Gamma(b))."""
    return ln_gamma(a) - ln_gamma(b)


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"polynomial degree must be a nonnegative integer, got {n!r}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds supported maximum {MAX_DEGREE}")


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x).

    Uses H_{k+1} = 2x H_k - 2k H_{k-1}.
    """
    _check_degree(n)
    x = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x)
    if n == 0:
        return h_prev if h_prev.ndim else float(h_prev)
    h = 2.0 * x
    for k in range(1, n):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return h if h.ndim else float(h)


def laguerre_gen(n: int, a: float, x):
    """Generalized Laguerre polynomial L_n^{(a)}(x), Abramowitz-Stegun convention.

    Recurrence: (k+1) L_{k+1} = (2k + 1 + a - x) L_k - (k + a) L_{k-1}.
    """
    _check_degree(n)
    if not a > -1:
        raise ValueError("Laguerre parameter must exceed -1")
    x = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x)
    if n == 0:
        return l_prev if l_prev.ndim else float(l_prev)
    lk = 1.0 + a - x
    for k in range(1, n):
        l_prev, lk = lk, ((2 * k + 1 + a - x) * lk - (k + a) * l_prev) / (k + 1)
    return lk if lk.ndim else float(lk)


# Zeros by Golub-Welsch: eigenvalues of the symmetric Jacobi matrix of the
# monic recurrence.

def hermite_roots(n: int) -> np.ndarray:
    """Zeros of H_n in increasing order."""
    _check_degree(n)
    if n == 0:
        return np.empty(0)
    off = np.sqrt(np.arange(1, n) / 2.0)
    return np.linalg.eigvalsh(np.diag(off, 1) + np.diag(off, -1))


def laguerre_roots(n: int, a: float) -> np.ndarray:
    """Zeros of L_n^{(a)} in increasing order."""
    _check_degree(n)
    if not a > -1:
        raise ValueError("Laguerre parameter must exceed -1")
    if n == 0:
        return np.empty(0)
    k = np.arange(n)
    diag = 2 * k + 1 + a
    off = np.sqrt(k[1:] * (k[1:] + a))
    return np.linalg.eigvalsh(np.diag(diag) + np.diag(off, 1) + np.diag(off, -1))

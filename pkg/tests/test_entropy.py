import math

import pytest
from hypothesis import assume, given, strategies as st

from qentropy import entropy
from qentropy.entropy import Divergence, DivergentEntropy, EntropyKind, Path
from qentropy.systems import Space, SystemDescriptor

P, M = Space.Position, Space.Momentum

# Values computed independently with mpmath (30 digits, zeros as breakpoints)
ORACLE_RENYI = [
    (SystemDescriptor("ho", 2), P, 3.0, 1.29598881169470677),
    (SystemDescriptor("ho", 3), P, 0.7, 1.68522941224328308),
    (SystemDescriptor("q1d", 2), P, 2.0, 2.04866988301308224),
    (SystemDescriptor("q1d", 3), M, 0.8, 0.270478226982151467),
    (SystemDescriptor("dirichlet", 2), M, 2.0, 2.76255519155794106),
    (SystemDescriptor("neumann"), M, 2.0, 2.24334217451767835),
    (SystemDescriptor("robin"), M, 2.0, 1.83787706640934548),
]
ORACLE_SHANNON = [
    (SystemDescriptor("q1d", 2), P, 2.23433644742403697),
    (SystemDescriptor("dirichlet", 1), P, -0.306852819440054691),
]


@pytest.mark.parametrize("sys,space,alpha,ref", ORACLE_RENYI)
def test_renyi_oracle(sys, space, alpha, ref):
    r = entropy.renyi(sys, space, alpha)
    assert r.value == pytest.approx(ref, rel=1e-9)
    assert r.kind is EntropyKind.Renyi


@pytest.mark.parametrize("sys,space,ref", ORACLE_SHANNON)
def test_shannon_oracle(sys, space, ref):
    assert entropy.shannon(sys, space).value == pytest.approx(ref, rel=1e-9)


def test_oracle_live_mpmath(mp):
    # q1d n=1 momentum at a non-grid order, against direct mpmath quadrature
    a = 1.37
    ref = mp.log(mp.quad(lambda k: (2 / mp.pi / (1 + k * k) ** 2) ** a, [-mp.inf, 0, mp.inf])) / (1 - a)
    r = entropy.renyi(SystemDescriptor("q1d", 1), M, a, method="quadrature")
    assert r.value == pytest.approx(float(ref), rel=1e-9)


CLOSED = [(SystemDescriptor("ho", 0), P), (SystemDescriptor("ho", 1), M),
          (SystemDescriptor("robin"), P), (SystemDescriptor("robin"), M),
          (SystemDescriptor("q1d", 1), P), (SystemDescriptor("q1d", 2), M),
          (SystemDescriptor("dirichlet", 3), P)]


@pytest.mark.parametrize("sys,space", CLOSED)
@pytest.mark.parametrize("alpha", [0.75, 1.5, 4.0])
def test_closed_matches_quadrature(sys, space, alpha):
    c = entropy.renyi(sys, space, alpha, method="closed")
    q = entropy.renyi(sys, space, alpha, method="quadrature")
    assert c.path is Path.ClosedForm and q.path is Path.Quadrature
    assert c.value == pytest.approx(q.value, rel=1e-8, abs=1e-9)


@given(st.floats(0.55, 8.0), st.floats(0.2, 5.0),
       st.sampled_from([("ho", 1), ("robin", 0), ("q1d", 1), ("dirichlet", 1)]))
def test_scaling_law(alpha, s, fam_n):
    fam, n = fam_n
    assume(abs(alpha - 1) > 1e-3)
    base, scaled = SystemDescriptor(fam, n), SystemDescriptor(fam, n, s)
    for space, sign in ((P, 1), (M, -1)):
        r1 = entropy.renyi(base, space, alpha, method="closed" if space is P else "auto")
        rs = entropy.renyi(scaled, space, alpha, method="closed" if space is P else "auto")
        assert rs.value == pytest.approx(r1.value + sign * math.log(s), abs=1e-10)


@given(st.floats(0.3, 6.0), st.floats(0.3, 6.0))
def test_renyi_nonincreasing_in_order(a, b):
    assume(abs(a - b) > 1e-6)
    lo, hi = sorted((a, b))
    sys = SystemDescriptor("ho", 1)
    assert entropy.renyi(sys, P, lo).value >= entropy.renyi(sys, P, hi).value - 1e-12


@given(st.floats(-5.0, 5.0), st.floats(0.05, 9.0))
def test_tsallis_renyi_round_trip(r, alpha):
    assume(abs(alpha - 1.0) > 1e-9)
    t = entropy.tsallis_from_renyi(r, alpha)
    # inverting loses digits like exp(-(1 - alpha) r): 1 + (1 - alpha) T cancels
    x = (1.0 - alpha) * r
    tol = 4e-16 * (1.0 + abs(alpha * t)) * math.exp(-x) / abs(1.0 - alpha) + 1e-13
    assert entropy.renyi_from_tsallis(t, alpha) == pytest.approx(r, abs=tol)


def test_conversion_rejects_order_one():
    with pytest.raises(ValueError):
        entropy.tsallis_from_renyi(1.0, 1.0)


def test_tsallis_matches_renyi():
    sys = SystemDescriptor("q1d", 1, 0.7)
    for space in (P, M):
        r = entropy.renyi(sys, space, 2.5).value
        t = entropy.tsallis(sys, space, 2.5).value
        assert t == pytest.approx(entropy.tsallis_from_renyi(r, 2.5), rel=1e-12)
        j = entropy.tsallis_composite(sys, space, 2.5)
        assert j == pytest.approx(1 + (1 - 2.5) * t, rel=1e-12)


@pytest.mark.parametrize("sys,space", CLOSED)
def test_shannon_crossover_continuity(sys, space):
    s = entropy.shannon(sys, space).value
    for d in (1e-7, 1e-5):
        assert entropy.renyi(sys, space, 1 + d).value == pytest.approx(s, abs=5 * d)
    assert entropy.renyi(sys, space, 1.0).value == s
    assert entropy.tsallis(sys, space, 1.0).value == s


def test_onicescu_identities():
    sys = SystemDescriptor("dirichlet", 1)
    for space in (P, M):
        o = entropy.onicescu(sys, space).value
        assert o == pytest.approx(math.exp(-entropy.renyi(sys, space, 2).value), rel=1e-12)
        assert o == pytest.approx(1 - entropy.tsallis(sys, space, 2).value, rel=1e-12)


def test_infinite_order_limit():
    r = entropy.renyi(SystemDescriptor("ho", 0), P, math.inf)
    assert r.path is Path.Limit
    assert r.value == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)
    with pytest.raises(ValueError):
        entropy.tsallis(SystemDescriptor("ho", 0), P, math.inf)


@pytest.mark.parametrize("fam,n,th,inferred", [
    ("ho", 0, 0.0, False), ("robin", 0, 0.5, False), ("q1d", 2, 0.25, False),
    ("neumann", 0, 0.5, True), ("dirichlet", 1, 0.25, True)])
def test_momentum_thresholds(fam, n, th, inferred):
    info = entropy.threshold(SystemDescriptor(fam, n), M)
    assert info.alpha_threshold == th and info.inferred is inferred
    assert info.divergence is Divergence.LogDivergent
    if th > 0:
        with pytest.raises(DivergentEntropy) as exc:
            entropy.renyi(SystemDescriptor(fam, n), M, th)
        assert exc.value.info == info


def test_well_position_has_no_divergence():
    assert entropy.threshold(SystemDescriptor("neumann"), P).divergence is None
    assert entropy.renyi(SystemDescriptor("neumann", None, 3.0), P, 0.01).value == pytest.approx(math.log(3.0))


def test_nonpositive_order_rejected():
    with pytest.raises(ValueError):
        entropy.renyi(SystemDescriptor("ho", 0), P, 0.0)


def test_near_threshold_grows():
    sys = SystemDescriptor("q1d", 1)
    v = [entropy.renyi(sys, M, 0.25 + d).value for d in (1e-2, 1e-3, 1e-4)]
    assert v[0] < v[1] < v[2]


def test_quadrature_cap():
    with pytest.raises(ValueError):
        entropy.renyi(SystemDescriptor("ho", 11), P, 2.0)
    with pytest.raises(ValueError):
        entropy.renyi(SystemDescriptor("ho", 2), P, 2.0, method="closed")


def test_conjugate_beta():
    assert entropy.conjugate_beta(0.5) == math.inf
    assert entropy.conjugate_beta(math.inf) == 0.5
    assert entropy.conjugate_beta(1.0) == 1.0
    with pytest.raises(ValueError):
        entropy.conjugate_beta(0.4)

import math

import pytest
from hypothesis import given, strategies as st

from qentropy import uncertainty as U
from qentropy.systems import SystemDescriptor

LN2PI = math.log(2 * math.pi)

GROUND = [SystemDescriptor("ho", 0), SystemDescriptor("robin"), SystemDescriptor("q1d", 1),
          SystemDescriptor("neumann"), SystemDescriptor("dirichlet", 1)]
EXCITED = [SystemDescriptor("ho", 2), SystemDescriptor("q1d", 3), SystemDescriptor("dirichlet", 2)]


def test_f_bound_landmarks():
    assert U.f_bound(0.5) == pytest.approx(LN2PI, rel=1e-15)
    assert U.f_bound(1.0) == pytest.approx(1 + math.log(math.pi), rel=1e-15)
    assert U.f_bound(math.inf) == pytest.approx(LN2PI)
    with pytest.raises(ValueError):
        U.f_bound(0.49)


@given(st.floats(0.5, 1e4))
def test_f_bound_against_mpmath(a):
    import mpmath
    mpmath.mp.dps = 30
    a_mp = mpmath.mpf(a)
    if a == 1.0:
        ref = 1 + mpmath.log(mpmath.pi)
    elif a == 0.5:
        ref = mpmath.log(2 * mpmath.pi)
    else:
        ref = mpmath.log(mpmath.pi) - mpmath.log(a_mp) + (a_mp - 0.5) / (a_mp - 1) * mpmath.log(2 * a_mp - 1)
    assert U.f_bound(a) == pytest.approx(float(ref), rel=1e-12)


def test_f_bound_smooth_across_one():
    for d in (1e-9, 1e-8, 1e-7):
        assert U.f_bound(1 + d) == pytest.approx(U.f_bound(1 - d), abs=4 * d)


@given(st.floats(0.52, 30.0), st.sampled_from(GROUND + EXCITED))
def test_renyi_relation_holds(alpha, sys):
    rep = U.renyi_relation(sys, alpha)
    assert rep.satisfied, rep


@given(st.floats(0.52, 20.0), st.floats(0.2, 5.0))
def test_ho_ground_saturates_renyi(alpha, s):
    rep = U.renyi_relation(SystemDescriptor("ho", 0, s), alpha)
    assert rep.saturated and abs(rep.gap) < 1e-9


@given(st.floats(0.5, 1.0), st.floats(0.3, 3.0))
def test_ho_ground_saturates_tsallis(alpha, s):
    lhs, rhs = U.tsallis_sides(SystemDescriptor("ho", 0, s), alpha)
    assert lhs == pytest.approx(rhs, rel=1e-10)


@pytest.mark.parametrize("sys", GROUND + EXCITED, ids=lambda s: s.label())
@pytest.mark.parametrize("alpha", [0.55, 0.75, 1.0])
def test_tsallis_relation_guaranteed_range(sys, alpha):
    rep = U.tsallis_relation(sys, alpha)
    assert rep.satisfied and rep.note == ""


def test_tsallis_diagnostic_beyond_one():
    rep = U.tsallis_relation(SystemDescriptor("ho", 1), 1.2)
    assert not rep.satisfied and rep.note.startswith("diagnostic")


@pytest.mark.parametrize("sys", GROUND + EXCITED, ids=lambda s: s.label())
def test_shannon_relation(sys):
    rep = U.shannon_relation(sys)
    assert rep.satisfied and rep.rhs == pytest.approx(1 + math.log(math.pi))


def test_heisenberg():
    assert U.heisenberg_relation(SystemDescriptor("ho", 0)).saturated
    rep = U.heisenberg_relation(SystemDescriptor("dirichlet", 1))
    # (pi^2/12 - 1/2)^(1/2) * pi
    assert rep.lhs == pytest.approx(math.pi * math.sqrt(1 / 12 - 1 / (2 * math.pi ** 2)), rel=1e-8)
    inf = U.heisenberg_relation(SystemDescriptor("robin"))
    assert inf.lhs == math.inf and inf.satisfied and "vacuously" in inf.note


def test_sum_maximum_q1d():
    m = U.find_sum_maximum(SystemDescriptor("q1d", 1))
    assert isinstance(m, U.SumMaximum)
    assert m.alpha == pytest.approx(4.5436, abs=2e-3)
    assert m.value == pytest.approx(2.527349, abs=1e-5)


def test_sum_maximum_robin_unbounded():
    m = U.find_sum_maximum(SystemDescriptor("robin"))
    assert isinstance(m, U.Unbounded) and m.alpha_edge == pytest.approx(60.0)

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qentropy import systems
from qentropy.quadrature import integrate
from qentropy.systems import Family, Space, SystemDescriptor

P, M = Space.Position, Space.Momentum

STATES = [
    SystemDescriptor("ho", 0), SystemDescriptor("ho", 1), SystemDescriptor("ho", 4),
    SystemDescriptor("robin"), SystemDescriptor("q1d", 1), SystemDescriptor("q1d", 3),
    SystemDescriptor("neumann"), SystemDescriptor("dirichlet", 1), SystemDescriptor("dirichlet", 2),
]


def _mass(sys, space):
    f = lambda v: systems.density(sys, space, v)
    dom = systems.support(sys, space)
    zeros = [z * (sys.scale if space is P else 1 / sys.scale)
             for z in systems.density_zeros(sys, space)]
    if space is M and sys.family in (Family.NeumannWell, Family.DirichletWell):
        # oscillating power-law tails go through the windowed tail integrator
        from qentropy import entropy
        return math.exp(entropy.log_power_integral(sys, space, 1.0 + 1e-12)[0])
    return integrate(f, (dom.lower, dom.upper), rel_tol=1e-11, points=zeros).value


@pytest.mark.parametrize("sys", STATES, ids=lambda s: s.label())
@pytest.mark.parametrize("space", [P, M], ids=["x", "k"])
def test_densities_normalized(sys, space):
    assert _mass(sys, space) == pytest.approx(1.0, abs=1e-8)


@given(st.floats(0.1, 10.0), st.sampled_from(["ho", "robin", "q1d"]))
def test_scaled_density_normalized(s, fam):
    sys = SystemDescriptor(fam, None, s)
    for space in (P, M):
        dom = systems.support(sys, space)
        r = integrate(lambda v: systems.density(sys, space, v), (dom.lower, dom.upper), rel_tol=1e-10)
        assert r.value == pytest.approx(1.0, abs=1e-8)


def test_ho_density_against_mpmath(mp):
    for n in (0, 2, 5):
        for x in (-2.3, 0.0, 0.7, 3.1):
            ref = mp.exp(-x * x) * mp.hermite(n, x) ** 2 / (mp.sqrt(mp.pi) * 2 ** n * mp.factorial(n))
            assert systems.density(SystemDescriptor("ho", n), P, x) == pytest.approx(float(ref), rel=1e-12)


def test_q1d_momentum_density():
    sys = SystemDescriptor("q1d", 2)
    assert systems.density(sys, M, 0.5) == pytest.approx(4 / math.pi / 4.0, rel=1e-14)


def test_dirichlet_removable_point():
    sys = SystemDescriptor("dirichlet", 2)
    u = 2 * math.pi
    v = systems.density(sys, M, np.array([u - 1e-7, u, u + 1e-7]))
    assert np.all(np.isfinite(v)) and v[1] == pytest.approx(v[0], rel=1e-6)
    # 4 pi n^2 sin^2(u/2) / (n^2 pi^2 - u^2)^2 -> 1/(4 pi) at u = 2 pi
    assert v[1] == pytest.approx(1 / (4 * math.pi), rel=1e-12)


@pytest.mark.parametrize("sys,space,loc,val", [
    (SystemDescriptor("ho", 0), P, 0.0, 1 / math.sqrt(math.pi)),
    (SystemDescriptor("ho", 1), P, 1.0, 2 / (math.e * math.sqrt(math.pi))),
    (SystemDescriptor("q1d", 1), P, 1.0, 4 * math.exp(-2)),
    (SystemDescriptor("dirichlet", 1), M, 0.0, 4 / math.pi ** 3),
    (SystemDescriptor("robin", None, 2.0), P, 0.0, 1.0),
])
def test_density_max_closed(sys, space, loc, val):
    x, v = systems.density_max(sys, space)
    assert x == pytest.approx(loc, abs=1e-12) and v == pytest.approx(val, rel=1e-12)


@pytest.mark.parametrize("sys", [SystemDescriptor("ho", 3), SystemDescriptor("q1d", 2),
                                 SystemDescriptor("dirichlet", 2)], ids=lambda s: s.label())
def test_density_max_numeric_beats_grid(sys):
    space = M if sys.family is Family.DirichletWell else P
    _, v = systems.density_max(sys, space)
    grid = np.linspace(-60, 60, 200001)
    assert v >= np.max(systems.density(sys, space, grid)) - 1e-12


def test_energies():
    assert systems.energy(SystemDescriptor("ho", 3)) == 3.5
    assert systems.energy(SystemDescriptor("q1d", 2)) == -0.125
    assert systems.energy(SystemDescriptor("dirichlet", 1)) == pytest.approx(math.pi ** 2 / 2)


@pytest.mark.parametrize("n", [0, 1, 3])
def test_ho_deviation_product(n):
    sys = SystemDescriptor("ho", n, 1.7)
    assert systems.deviation(sys, P) * systems.deviation(sys, M) == pytest.approx(n + 0.5, rel=1e-9)
    assert systems.operator_momentum_variance(sys) == pytest.approx(systems.deviation(sys, M) ** 2, rel=1e-9)


def test_heavy_tails_have_infinite_momentum_deviation():
    for fam in ("robin", "neumann"):
        assert systems.deviation(SystemDescriptor(fam), M) == math.inf
    assert systems.deviation(SystemDescriptor("q1d", 1), M) == pytest.approx(1.0, rel=1e-8)
    assert systems.deviation(SystemDescriptor("dirichlet", 1), M) == pytest.approx(math.pi, rel=1e-8)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        SystemDescriptor("q1d", 0)
    with pytest.raises(ValueError):
        SystemDescriptor("robin", 1)
    with pytest.raises(ValueError):
        SystemDescriptor("ho", 0, -1.0)
    with pytest.raises(TypeError):
        SystemDescriptor("ho", 1.5)
    with pytest.raises(ValueError):
        systems.parse_family("triangle")
    assert SystemDescriptor("dirichlet").n == 1

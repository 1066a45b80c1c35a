import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qentropy import conjecture
from qentropy.systems import SystemDescriptor

LN2PI = math.log(2 * math.pi)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_extrapolation_exact_on_model(c0, c1, c2):
    a = 0.5 + 2.0 ** -np.arange(7, 13)
    e = 2 * a - 1
    v = c0 + c1 * e * np.log(e) + c2 * e
    assert conjecture.extrapolate_half(a, v) == pytest.approx(c0, abs=1e-9)


def test_extrapolation_skips_nan_and_needs_three():
    a = [0.6, 0.55, 0.52, 0.51]
    assert math.isfinite(conjecture.extrapolate_half(a, [1.0, math.nan, 1.0, 1.0]))
    with pytest.raises(ValueError):
        conjecture.extrapolate_half(a[:2], [1.0, 2.0])


@pytest.mark.parametrize("sys", [SystemDescriptor("ho", 0), SystemDescriptor("robin"),
                                 SystemDescriptor("q1d", 1), SystemDescriptor("neumann"),
                                 SystemDescriptor("dirichlet", 1)], ids=lambda s: s.label())
def test_ground_states_approach_ln2pi(sys):
    tr = conjecture.conjecture_scan(sys)
    assert not tr.failures
    assert len(tr.alphas) == 12 and tr.alphas[0] == 1.0
    assert tr.renyi_error < 5e-4
    assert tr.tsallis_error < 5e-3
    # every sample respects the bound
    assert min(tr.renyi_sums) >= LN2PI - 1e-9


def test_excited_states_need_diagnostic():
    with pytest.raises(conjecture.NotGroundState):
        conjecture.conjecture_scan(SystemDescriptor("q1d", 2))
    tr = conjecture.conjecture_scan(SystemDescriptor("q1d", 2), n_points=6, diagnostic=True)
    assert tr.extrapolated_limit > LN2PI + 0.1


def test_neumann_helpers():
    well = SystemDescriptor("neumann")
    assert conjecture.neumann_renyi_sum(0.75) > conjecture.LN_2PI
    # S sum of the Neumann ground state
    assert conjecture.neumann_renyi_sum(1.0) == pytest.approx(2.6834457366, abs=1e-9)
    lhs, rhs = conjecture.tsallis_sides_well(well, 0.75)
    assert lhs >= rhs
    with pytest.raises(ValueError):
        conjecture.tsallis_sides_well(SystemDescriptor("ho", 0), 0.75)

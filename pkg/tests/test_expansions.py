import math

import pytest

from qentropy import entropy, expansions
from qentropy.expansions import Quantity, Regime
from qentropy.systems import Space, SystemDescriptor

CATALOG = expansions.catalog()
CORRECTED = [e for e in CATALOG if e.quoted_terms]


def test_catalog_size_and_unique_keys():
    keys = [e.key for e in CATALOG]
    assert len(keys) == len(set(keys)) == 54


@pytest.mark.parametrize("exp", CATALOG, ids=lambda e: e.key)
def test_remainder_decays(exp):
    chk = exp.check()
    assert chk.passed, chk


@pytest.mark.parametrize("exp", CORRECTED, ids=lambda e: e.key)
def test_quoted_variant_fails(exp):
    assert not exp.check(quoted=True).passed


def test_known_corrections_are_catalogued():
    keys = {e.key for e in CORRECTED}
    for k in ("ho1_renyi_zero", "robin_sum_half", "robin_tsallis_x_one",
              "q1d1_renyi_x_infinity", "q1d1_sum_half"):
        assert k in keys


def test_robin_sum_half_coefficients():
    e = expansions.find("robin_sum_half")
    c = dict(e.coefficients())
    l2p = math.log(2 * math.pi)
    assert sorted(c.values()) == pytest.approx(sorted([l2p, l2p - 2, -1.0]))


def test_entropy_expansion_lookup_and_errors():
    sys = SystemDescriptor("ho", 1)
    e = expansions.entropy_expansion(sys, Space.Momentum, "zero")
    assert e.space is Space.Position and e.regime is Regime.AtZero
    assert entropy.asymptotic_coefficients(sys, Space.Position, Regime.AtZero) == e.terms
    with pytest.raises(NotImplementedError):
        expansions.entropy_expansion(SystemDescriptor("ho", 7), Space.Position, Regime.AtZero)
    with pytest.raises(KeyError):
        expansions.find("nope")


def test_truncation_matches_exact_near_limit():
    for e in CATALOG:
        near = e.approach[1]
        assert math.isfinite(e.truncated(near)) and math.isfinite(e.exact(near))

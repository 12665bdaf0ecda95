"""Tests for the corner-generated window modules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uqsl2.gammamod import (FLAVORS, GAMMA_Y, GAMMA_Z, GammaModule,
                            WindowVector, act, act_word, monomial_vector,
                            non_invertibility_witness, verify_gamma)
from uqsl2.qfield import RF_ONE, RatFunc, q_power


def test_module_flavors():
    assert GAMMA_Y.flavor == "gammaY" and GAMMA_Z.flavor == "gammaZ"
    assert (GAMMA_Y.symbol, GAMMA_Y.builder, GAMMA_Y.annihilator) == ("u", "z", "y")
    assert (GAMMA_Z.symbol, GAMMA_Z.builder, GAMMA_Z.annihilator) == ("v", "y", "z")
    assert GAMMA_Y.json_obj() == {"gamma": "gammaY"}
    assert GammaModule("gammaZ") == GAMMA_Z
    with pytest.raises(ValueError):
        GammaModule("gammaX")
    assert FLAVORS == ("gammaY", "gammaZ")


def test_window_vector_basics():
    a = WindowVector.basis(1, 0)
    b = WindowVector.basis(0, 2)
    s = a + b.scalar_mul(q_power(3))
    assert s.coeffs == {(1, 0): RF_ONE, (0, 2): q_power(3)}
    assert (s - s).is_zero()
    assert WindowVector({(0, -1): RF_ONE}).is_zero()  # j < 0 is dropped
    assert WindowVector({(0, 0): RatFunc(0)}).is_zero()
    assert WindowVector({(2, 1): 3}).coeffs == {(2, 1): RatFunc(3)}
    assert s.json_obj() == [
        {"i": 0, "j": 2, "coeff": "q^3"},
        {"i": 1, "j": 0, "coeff": "1"},
    ]
    assert str(s) == "(q^3)*e[0,2] + (1)*e[1,0]"
    assert str(WindowVector()) == "0"


def test_action_frozen_values():
    u00 = WindowVector.basis(0, 0)
    assert act(GAMMA_Y, "y", u00).is_zero()
    assert act(GAMMA_Y, "z", u00) == WindowVector.basis(0, 1)
    assert act(GAMMA_Y, "x", u00) == WindowVector.basis(1, 0)
    assert act(GAMMA_Y, "x^-1", u00) == WindowVector.basis(-1, 0)
    grow = q_power(-1) * (q_power(1) - q_power(-1))
    assert act(GAMMA_Y, "y", WindowVector.basis(0, 1)) == WindowVector(
        {(0, 0): grow})
    assert act(GAMMA_Y, "y", WindowVector.basis(1, 0)) == WindowVector(
        {(0, 0): -q_power(1) * (q_power(1) - q_power(-1))})
    assert act(GAMMA_Z, "z", u00).is_zero()
    assert act(GAMMA_Z, "y", u00) == WindowVector.basis(0, 1)
    assert act(GAMMA_Z, "z", WindowVector.basis(0, 1)) == WindowVector(
        {(0, 0): -q_power(1) * (q_power(1) - q_power(-1))})
    with pytest.raises(ValueError):
        act(GAMMA_Y, "k", u00)


def test_act_word_applies_rightmost_first():
    u00 = WindowVector.basis(0, 0)
    assert act_word(GAMMA_Y, ("x", "z"), u00) == WindowVector.basis(1, 1)
    assert act_word(GAMMA_Y, ("z", "x"), u00) == (
        WindowVector.basis(1, 1).scalar_mul(q_power(-2))
        + WindowVector.basis(0, 0).scalar_mul(
            q_power(-1) * (q_power(1) - q_power(-1))))


def test_window_suite_counts_and_order():
    for mod in (GAMMA_Y, GAMMA_Z):
        report = verify_gamma(mod, imax=3, jmax=3)
        assert report.passed
        # 7*4 vectors x 4 relation rows, 28 monomial rows, 1 kernel row
        assert len(report.entries) == 141
        sym = mod.symbol
        names = [e.identity for e in report.entries]
        assert names[0] == "gamma:%s[-3,0]:x*x^-1=x^-1*x=1" % sym
        assert names[1] == "gamma:%s[-3,0]:(q*x*y-q^-1*y*x)/(q-q^-1)=1" % sym
        assert ("gamma:%s[-2,3]=x^-2*%s^3*%s[0,0]" % (sym, mod.builder, sym)
                in names)
        assert names[-1] == "gamma:%s*%s[0,0]=0" % (mod.annihilator, sym)
        assert all(e.module == mod.json_obj() for e in report.entries)


def test_monomial_vectors_match_basis():
    for mod in (GAMMA_Y, GAMMA_Z):
        for i in range(-4, 5):
            for j in range(5):
                assert monomial_vector(mod, i, j) == WindowVector.basis(i, j)


def test_non_invertibility_witness():
    wy = non_invertibility_witness(GAMMA_Y)
    assert wy == {
        "identity": "gamma:y*u[0,0]=0",
        "kernel_vector": [{"i": 0, "j": 0, "coeff": "1"}],
        "image": [],
        "holds": True,
    }
    wz = non_invertibility_witness(GAMMA_Z)
    assert wz["identity"] == "gamma:z*v[0,0]=0"
    assert wz["holds"]


_coeffs = st.integers(min_value=-4, max_value=4)
_keys = st.tuples(st.integers(min_value=-3, max_value=3),
                  st.integers(min_value=0, max_value=3))
_vectors = st.dictionaries(_keys, _coeffs, max_size=4).map(WindowVector)
_gens = st.sampled_from(["x", "x^-1", "y", "z"])
_mods = st.sampled_from([GAMMA_Y, GAMMA_Z])


@settings(max_examples=60, deadline=None)
@given(_mods, _gens, _vectors, _vectors, _coeffs)
def test_action_is_linear(mod, gen, a, b, c):
    assert act(mod, gen, a + b) == act(mod, gen, a) + act(mod, gen, b)
    scaled = act(mod, gen, a.scalar_mul(RatFunc(c)))
    assert scaled == act(mod, gen, a).scalar_mul(RatFunc(c))

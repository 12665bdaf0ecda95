"""Tests for PBW normalization, presentation maps, and n-elements."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uqsl2 import ncore
from uqsl2.exprio import parse
from uqsl2.ncore import AlgebraElement, apply_automorphism, n_element
from uqsl2.qfield import RF_ONE, q_power


def nf(text):
    return ncore.normalize_chevalley(parse(text, "chevalley"))


def test_normal_form_frozen_strings():
    assert str(nf("e*f - f*e")) == "((q)/(q^2 - 1))*k - ((q)/(q^2 - 1))*k^-1"
    assert str(nf("f*e")) == "f*e"
    assert str(nf("e*f")) == "((q)/(q^2 - 1))*k - ((q)/(q^2 - 1))*k^-1 + f*e"
    assert str(nf("e*k")) == "q^-2*k*e"
    assert str(nf("k*e")) == "k*e"
    assert str(nf("k^2*k^-3")) == "k^-1"
    assert str(nf("k*k^-1")) == "1"
    # by hand: e f^2 = f^2 e + (1+q^-2)/(q-q^-1) f k - (1+q^2)/(q-q^-1) f k^-1
    assert str(nf("e*f^2")) == (
        "((q + q^-1)/(q^2 - 1))*f*k - ((q^3 + q)/(q^2 - 1))*f*k^-1 + f^2*e")
    assert str(nf("0*e")) == "0"


def test_normal_form_term_order():
    # terms sort by f-degree ascending, then k-exponent descending, then e-degree
    el = nf("e*f*k + k^-1 - 2")
    assert str(el) == (
        "((q)/(q^2 - 1))*k^2 - (2*q^2 + q - 2)/(q^2 - 1) + k^-1 + q^-2*f*k*e")
    keys = list(sorted(el.terms, key=lambda m: (m[0], -m[1], m[2])))
    assert keys == [(0, 2, 0), (0, 0, 0), (0, -1, 0), (1, 1, 1)]
    assert all(a >= 0 and c >= 0 for a, _, c in el.terms)


def test_confluence_all_overlaps_resolve():
    rep = ncore.verify_confluence()
    assert rep.passed
    words = [e.identity.rsplit(":", 1)[1] for e in rep.entries]
    # programmatic enumeration: every two-rule overlap of the system
    expected = sorted({u + v[1] for u in ncore._RULES for v in ncore._RULES
                       if u[1] == v[0]})
    assert words == expected
    assert len(words) == 8


def test_presentation_iso_checks():
    rep = ncore.verify_presentation_iso()
    assert rep.passed
    assert len(rep.entries) == 8
    names = [e.identity for e in rep.entries]
    assert sum(n.startswith("iso:relation:") for n in names) == 4
    assert sum(n.startswith("iso:composite:") for n in names) == 4


def test_equitable_relations_normalize_to_one():
    one = AlgebraElement.one()
    for rel in (
        "x*x^-1", "x^-1*x",
        "(q*x*y - q^-1*y*x)/(q - q^-1)",
        "(q*y*z - q^-1*z*y)/(q - q^-1)",
        "(q*z*x - q^-1*x*z)/(q - q^-1)",
    ):
        assert ncore.from_equitable(parse(rel, "equitable")) == one


def test_equitable_generator_images():
    assert str(ncore.equitable_image("x")) == "k"
    assert str(ncore.equitable_image("x^-1")) == "k^-1"
    assert str(ncore.equitable_image("y")) == "k^-1 + (q - q^-1)*f"
    assert str(ncore.equitable_image("z")) == "k^-1 - (q^2 - 1)*k^-1*e"
    e = AlgebraElement.generator("e")
    assert ncore.from_equitable(parse("(1 - x*z)*q^-1/(q - q^-1)", "equitable")) == e


def test_n_element_frozen_values():
    assert n_element("y") == AlgebraElement.generator("e")
    assert str(n_element("z")) == "-q^-1*f*k"
    k = AlgebraElement.generator("k")
    f = AlgebraElement.generator("f")
    assert n_element("z") == k * f * (-q_power(1))
    assert n_element("x") * (RF_ONE * 0) == AlgebraElement.zero()
    with pytest.raises(ValueError):
        n_element("w")


def test_n_commutation_suite():
    rep = ncore.verify_n_commutation()
    assert rep.passed
    assert len(rep.entries) == 6


def test_n_preimages_suite():
    rep = ncore.verify_n_preimages()
    assert rep.passed
    assert len(rep.entries) == 2


def test_degree_bound_for_ef_powers():
    ef = nf("e*f")
    power = AlgebraElement.one()
    for m in range(1, 6):
        power = power * ef
        assert all(-m <= b <= m for _, b, _ in power.terms)
        assert all(a <= m and c <= m for a, _, c in power.terms)


def test_automorphism_frozen_values():
    e = AlgebraElement.generator("e")
    f = AlgebraElement.generator("f")
    k = AlgebraElement.generator("k")
    assert apply_automorphism(e, 2, q_power(3)) == nf("q^-1*k^2*e")
    assert apply_automorphism(f, 2, q_power(3)) == nf("q*f*k^-2")
    assert apply_automorphism(k, 5, RF_ONE * 7) == k
    assert apply_automorphism(e, 0, RF_ONE) == e
    with pytest.raises(ValueError):
        apply_automorphism(e, 1, RF_ONE * 0)
    with pytest.raises(TypeError):
        apply_automorphism(e, "1", RF_ONE)


_monos = st.tuples(st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
_coeffs = st.integers(-4, 4).filter(bool)


def _elements(max_size=3):
    return st.dictionaries(_monos, _coeffs, max_size=max_size).map(AlgebraElement)


@settings(max_examples=25, deadline=None)
@given(_elements(2), _elements(2), _elements(2))
def test_multiplication_is_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=25, deadline=None)
@given(_elements(), _elements())
def test_automorphism_is_multiplicative(a, b):
    for i, alpha in ((1, q_power(1)), (-2, RF_ONE * 3)):
        fa = apply_automorphism(a, i, alpha)
        fb = apply_automorphism(b, i, alpha)
        assert apply_automorphism(a * b, i, alpha) == fa * fb
        assert apply_automorphism(a + b, i, alpha) == fa + fb


@settings(max_examples=40, deadline=None)
@given(_elements())
def test_algebra_element_linear_structure(a):
    zero = AlgebraElement.zero()
    assert a - a == zero
    assert a + zero == a
    assert a * AlgebraElement.one() == a
    assert AlgebraElement.one() * a == a
    assert -(-a) == a
    assert a * 2 - a == a

"""Tests for the q-exponential operators and their identity suites."""

from fractions import Fraction

import pytest

from uqsl2.qexpops import (ConsistencyError, NilpotentOperator, exp_q,
                           exp_q_inverse, n_matrix, omega, omega_closed_form,
                           omega_cube_scalar, psi, psi_inverse,
                           verify_closed_form, verify_conjugation_suite,
                           verify_relation_rewrites)
from uqsl2.qfield import RF_ONE, RF_ZERO, RatFunc, q_power, qbinom, qfact
from uqsl2.repmod import Matrix, ModuleSpec, build_chevalley, build_equitable


def _rep(n, eps):
    return build_equitable(ModuleSpec.single(n, eps))


def _strs(m):
    return m.to_strings()


def test_n_matrices_frozen():
    rep = _rep(1, 1)
    nz = n_matrix("z", rep)
    ny = n_matrix("y", rep)
    nx = n_matrix("x", rep)
    assert _strs(nz.matrix) == [["0", "0"], ["1", "0"]]
    assert _strs(ny.matrix) == [["0", "-1"], ["0", "0"]]
    assert _strs(nx.matrix) == [["1", "-1"], ["1", "-1"]]
    assert (nz.nil_index, ny.nil_index, nx.nil_index) == (2, 2, 2)
    trivial = n_matrix("x", _rep(0, -1))
    assert _strs(trivial.matrix) == [["0"]]
    assert trivial.nil_index == 1


def test_n_matrix_input_checking():
    with pytest.raises(ValueError):
        n_matrix("x", build_chevalley(ModuleSpec.single(1, 1)))
    with pytest.raises(ValueError):
        n_matrix("w", _rep(1, 1))


def test_nil_index_is_n_plus_one():
    for n in range(9):
        for eps in (1, -1):
            rep = _rep(n, eps)
            for axis in ("x", "y", "z"):
                assert n_matrix(axis, rep).nil_index == n + 1
    assert n_matrix("y", _rep(12, 1)).nil_index == 13


def test_exp_frozen():
    rep = _rep(1, 1)
    assert _strs(exp_q(n_matrix("z", rep))) == [["1", "0"], ["1", "1"]]
    assert _strs(exp_q_inverse(n_matrix("y", rep))) == [["1", "1"], ["0", "1"]]
    # the i = 2 series coefficient q^1/[2]! in canonical form
    assert str(q_power(1) * RatFunc(1, qfact(2))) == "(q^2)/(q^2 + 1)"
    ez = exp_q(n_matrix("z", _rep(2, 1)))
    assert ez.rows[2][0] == RF_ONE
    assert ez.rows[2][1] == RatFunc(qbinom(2, 1).shift(-1))


def test_exp_entries_match_closed_form():
    # independent oracle: entry formulas derived from the basis actions
    #   n_y u_i = -q^(n-i)[n-i+1] u_(i-1)    n_z u_i = q^(-i)[i+1] u_(i+1)
    for n in range(7):
        for eps in (1, -1):
            rep = _rep(n, eps)
            ny, nz = n_matrix("y", rep), n_matrix("z", rep)
            ey, eyi = exp_q(ny), exp_q_inverse(ny)
            ez, ezi = exp_q(nz), exp_q_inverse(nz)
            for i in range(n + 1):
                for j in range(n + 1):
                    if i <= j:
                        m = j - i
                        sign = 1 if m % 2 == 0 else -1
                        assert ey.rows[i][j] == RatFunc(
                            qbinom(n - i, m).shift(m * (n - i - 1)) * sign)
                        assert eyi.rows[i][j] == RatFunc(
                            qbinom(n - i, m).shift(m * (n - j)))
                    else:
                        assert ey.rows[i][j] == RF_ZERO
                        assert eyi.rows[i][j] == RF_ZERO
                    if i >= j:
                        m = i - j
                        sign = 1 if m % 2 == 0 else -1
                        assert ez.rows[i][j] == RatFunc(
                            qbinom(i, j).shift(-m * j))
                        assert ezi.rows[i][j] == RatFunc(
                            qbinom(i, j).shift(-m * (i - 1)) * sign)
                    else:
                        assert ez.rows[i][j] == RF_ZERO
                        assert ezi.rows[i][j] == RF_ZERO


def test_exp_inverse_checked_at_construction():
    # truncating the series too early must be caught by the product check
    full = n_matrix("z", _rep(2, 1))
    broken = NilpotentOperator(matrix=full.matrix, nil_index=2)
    with pytest.raises(ConsistencyError):
        exp_q_inverse(broken)


def test_nil_index_rejects_invertible_matrices():
    from uqsl2.qexpops import _nil_index
    with pytest.raises(ConsistencyError):
        _nil_index(_rep(1, 1).action["x"])


def test_psi_frozen_and_quadratic_exponent_form():
    assert _strs(psi(_rep(1, 1))) == [["1", "0"], ["0", "1"]]
    assert _strs(psi(_rep(1, -1))) == [["1", "0"], ["0", "1"]]
    assert _strs(psi(_rep(2, 1))) == [
        ["q^-2", "0", "0"], ["0", "1", "0"], ["0", "0", "q^-2"]]
    # diagonal entries also equal q^(2i(n-i) + (s - n^2)/2) with s = n mod 2
    for n in range(9):
        for eps in (1, -1):
            p = psi(_rep(n, eps))
            base = (n % 2 - n * n) // 2
            expected = [q_power(2 * i * (n - i) + base) for i in range(n + 1)]
            assert p.diagonal() == expected
            assert (psi(_rep(n, eps)) * psi_inverse(_rep(n, eps))
                    == Matrix.identity(n + 1))
    with pytest.raises(ValueError):
        psi(build_chevalley(ModuleSpec.single(2, 1)))


def test_omega_frozen():
    om = omega(_rep(1, 1))
    assert om.provenance == "compositional"
    assert _strs(om.matrix) == [["1", "-1"], ["1", "0"]]
    assert _strs(om.inverse) == [["0", "1"], ["-1", "1"]]
    cube = om.matrix * om.matrix * om.matrix
    assert _strs(cube) == [["-1", "0"], ["0", "-1"]]
    for eps in (1, -1):
        assert _strs(omega(_rep(0, eps)).matrix) == [["1"]]


def test_omega_inverse_agrees_with_matrix_inverse():
    for n, eps in ((2, 1), (3, -1)):
        om = omega(_rep(n, eps))
        assert om.inverse == om.matrix.inverse()


def test_omega_closed_form_matches_compositional():
    for n in range(9):
        for eps in (1, -1):
            cf = omega_closed_form(n, eps)
            assert cf.provenance == "closedForm"
            om = omega(_rep(n, eps))
            assert cf.matrix == om.matrix
            assert cf.inverse == om.inverse


def test_omega_cube_scalar_values():
    assert str(omega_cube_scalar(0)) == "1"
    assert str(omega_cube_scalar(1)) == "-1"
    assert str(omega_cube_scalar(2)) == "q^-4"
    assert str(omega_cube_scalar(3)) == "-q^-6"
    assert str(omega_cube_scalar(4)) == "q^-12"
    for n in range(7):
        om = omega(_rep(n, 1))
        cube = om.matrix * om.matrix * om.matrix
        assert cube == Matrix.identity(n + 1).scalar_mul(omega_cube_scalar(n))


def test_conjugation_suite_counts_and_identities():
    report = verify_conjugation_suite(_rep(2, -1))
    assert report.passed
    assert len(report.entries) == 38
    names = [e.identity for e in report.entries]
    assert names[0] == "nilpotent:n_x:index=n+1"
    assert "conj:exp_q(n_y)^-1*x*exp_q(n_y)=z^-1" in names
    assert "conj:exp_q(n_z)*x*exp_q(n_z)^-1=y^-1" in names
    assert "conj:exp_q(n_z)^-1*x*exp_q(n_z)=x*y*x" in names
    assert "conj:exp_q(n_y)*x*exp_q(n_y)^-1=x*z*x" in names
    assert "conj:exp_q(n_x)^-1*x*exp_q(n_x)=x+y-y^-1" in names
    assert "conj:exp_q(n_x)*x*exp_q(n_x)^-1=x+z-z^-1" in names
    assert ("conj:x*exp_q(n_x)-exp_q(n_x)*x=exp_q(n_x)*y-z*exp_q(n_x)"
            in names)
    assert "psi:Psi^-1*n_y*Psi=x*n_y*x" in names
    assert "omega:Omega^-1*x*Omega=y" in names
    assert names[-1] == "omega:Omega^3=central-scalar"
    assert all(e.module == {"n": 2, "eps": -1} for e in report.entries)


def test_conjugation_suite_on_direct_sums():
    for summands in (((1, 1), (2, -1)), ((0, -1), (3, 1))):
        rep = build_equitable(ModuleSpec(summands))
        report = verify_conjugation_suite(rep)
        assert report.passed
        assert len(report.entries) == 37  # no central-scalar row on sums
        assert all("central-scalar" not in e.identity for e in report.entries)


def test_relation_rewrites():
    report = verify_relation_rewrites(_rep(3, 1))
    assert report.passed
    assert [e.identity for e in report.entries] == [
        "rewrite:q*(1-y*z)=q^-1*(1-z*y)",
        "rewrite:q*(1-z*x)=q^-1*(1-x*z)",
        "rewrite:q*(1-x*y)=q^-1*(1-y*x)",
    ]


def test_closed_form_suite():
    report = verify_closed_form(5, -1)
    assert report.passed
    assert [e.identity for e in report.entries] == [
        "closedform:Omega=exp_q(n_z)*Psi*exp_q(n_y)",
        "closedform:Omega^-1",
        "closedform:Omega^3=central-scalar",
    ]


def test_numeric_specialization():
    for q0 in (Fraction(5, 3), Fraction(-2)):
        rep = _rep(3, 1)
        assert verify_conjugation_suite(rep, q0=q0).passed
        assert verify_relation_rewrites(rep, q0=q0).passed
        assert verify_closed_form(3, 1, q0=q0).passed
        mixed = build_equitable(ModuleSpec(((1, 1), (2, -1))))
        assert verify_conjugation_suite(mixed, q0=q0).passed

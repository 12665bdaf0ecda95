"""Nilpotent n-matrices, q-exponentials, Psi/Omega operators, and their identity suites.

On an equitable-basis module the three elements

    n_x = q(1 - yz)/(q - q^-1) = q^-1(1 - zy)/(q - q^-1)      (cyclic in x, y, z)

act as nilpotent matrices, so the truncated q-exponential

    exp_q(T)      = sum_i q^(i(i-1)/2) / [i]!  * T^i
    exp_q(T)^-1   = sum_i (-1)^i q^(-i(i-1)/2) / [i]!  * T^i

is defined exactly.  Conjugation by exp_q(n_a) permutes/deforms the
generators in a fixed pattern, the diagonal operator Psi intertwines the
weight decomposition, and

    Omega = exp_q(n_z) * Psi * exp_q(n_y)

cyclically rotates x -> y -> z -> x under conjugation, with Omega^3 central.
Every identity is also exposed as a report row so it can be re-checked at a
numeric specialization q = q0.
"""

from dataclasses import dataclass

from .qfield import RF_ZERO, RatFunc, q_power, qbinom, qfact, qint
from .repmod import Matrix, ModuleSpec, ScalarContext, build_equitable
from .report import VerificationReport, check


class ConsistencyError(RuntimeError):
    """Two independently computed forms of the same operator disagreed."""


_CQ = (q_power(1) - q_power(-1)).inverse()

# axis -> the other two axes in cyclic order (axis, next, previous)
_NEXT = {"x": "y", "y": "z", "z": "x"}
_PREV = {"y": "x", "z": "y", "x": "z"}


@dataclass
class NilpotentOperator:
    """A nilpotent matrix together with its exact nilpotency index."""

    matrix: Matrix
    nil_index: int


@dataclass
class OmegaOperator:
    """Omega together with its factor-built inverse and how it was built."""

    matrix: Matrix
    inverse: Matrix
    provenance: str  # "compositional" | "closedForm"


def _nil_index(m):
    dim = len(m.rows)
    power = m
    index = 1
    while not power.is_zero():
        if index > dim:
            raise ConsistencyError("matrix is not nilpotent")
        power = power * m
        index += 1
    return index


def _n_from_mats(axis, mats, sc):
    # n_axis has two defining expressions; computing both is a consistency check.
    if axis not in _NEXT:
        raise ValueError("axis must be one of x, y, z")
    nxt, prv = _NEXT[axis], _PREV[axis]
    a, b = mats[nxt], mats[prv]
    ident = Matrix.identity(len(a.rows), sc.one)
    left = (ident - a * b).scalar_mul(sc.scal(q_power(1) * _CQ))
    right = (ident - b * a).scalar_mul(sc.scal(q_power(-1) * _CQ))
    if left != right:
        raise ConsistencyError(
            "the two defining expressions of n_%s disagree" % axis)
    return left


def n_matrix(axis, rep):
    """The matrix of n_axis on an equitable-basis module, with its nil index."""
    if rep.basis != "equitable":
        raise ValueError("n-matrices are defined on the equitable basis")
    mat = _n_from_mats(axis, rep.action, ScalarContext())
    return NilpotentOperator(matrix=mat, nil_index=_nil_index(mat))


def _exp_series(mat, order, sc, inverse):
    # sum_{i<order} (+-1)^i q^(+-i(i-1)/2)/[i]! * mat^i, over the common
    # denominator [order-1]!: the i-th numerator is q-power * prod_{t>i}[t].
    tails = [None] * order
    tails[order - 1] = qfact(0)  # empty product
    for i in range(order - 2, -1, -1):
        tails[i] = tails[i + 1] * qint(i + 1)
    dim = len(mat.rows)
    total = Matrix.identity(dim, sc.one).scalar_mul(sc.scal(0))
    power = Matrix.identity(dim, sc.one)
    for i in range(order):
        exp = -(i * (i - 1) // 2) if inverse else i * (i - 1) // 2
        coeff = q_power(exp) * tails[i]
        if inverse and i % 2:
            coeff = -coeff
        total = total + power.scalar_mul(sc.scal(coeff))
        if i + 1 < order:
            power = power * mat
    return total.scalar_mul(sc.scal(RatFunc(1, qfact(order - 1))))


def exp_q(op):
    """The truncated q-exponential of a NilpotentOperator."""
    return _exp_series(op.matrix, op.nil_index, ScalarContext(), inverse=False)


def exp_q_inverse(op):
    """exp_{q^-1}(-T); checked against exp_q(T) at construction."""
    mat = _exp_series(op.matrix, op.nil_index, ScalarContext(), inverse=True)
    ident = Matrix.identity(len(mat.rows))
    if exp_q(op) * mat != ident:
        raise ConsistencyError("exp_q(T) * exp_q_inverse(T) != 1")
    return mat


def _psi_exponents(rep):
    xmat = rep.action["x"]
    if not xmat.is_diagonal():
        raise ConsistencyError("x does not act diagonally")
    exps = []
    for entry in xmat.diagonal():
        decomp = entry.as_sign_q_power()
        if decomp is None:
            raise ConsistencyError("x-eigenvalue %s is not +-q^lambda" % entry)
        lam = decomp[1]
        exps.append(-(lam * lam) // 2 if lam % 2 == 0 else (1 - lam * lam) // 2)
    return exps


def psi(rep):
    """Diagonal operator q^(-lambda^2/2) (even) / q^((1-lambda^2)/2) (odd) per weight."""
    if rep.basis != "equitable":
        raise ValueError("Psi is defined on the equitable basis")
    exps = _psi_exponents(rep)
    dim = rep.dim
    return Matrix([[q_power(exps[i]) if i == j else RF_ZERO
                    for j in range(dim)] for i in range(dim)])


def psi_inverse(rep):
    """The inverse of psi(rep) (negated diagonal exponents)."""
    if rep.basis != "equitable":
        raise ValueError("Psi is defined on the equitable basis")
    exps = _psi_exponents(rep)
    dim = rep.dim
    return Matrix([[q_power(-exps[i]) if i == j else RF_ZERO
                    for j in range(dim)] for i in range(dim)])


def omega(rep):
    """Omega = exp_q(n_z) * Psi * exp_q(n_y), with its factor-built inverse."""
    n_y = n_matrix("y", rep)
    n_z = n_matrix("z", rep)
    mat = exp_q(n_z) * psi(rep) * exp_q(n_y)
    inv = exp_q_inverse(n_y) * psi_inverse(rep) * exp_q_inverse(n_z)
    if mat * inv != Matrix.identity(rep.dim):
        raise ConsistencyError("Omega * Omega^-1 != 1")
    return OmegaOperator(matrix=mat, inverse=inv, provenance="compositional")


def _closed_form_matrices(n):
    # Entry formulas for Omega and Omega^-1 on the (n+1)-dimensional module:
    #   Omega      u_j = sum_{i<=n-j} (-1)^j q^((n-i-1)j + (s-n^2)/2) [n-i, j] u_i
    #   Omega^-1   u_j = sum_{i>=n-j} (-1)^(n-j) q^((1-i)(n-j) + (n^2-s)/2) [i, n-j] u_i
    # where s = n mod 2 and [m, k] is the q-binomial.
    s = n % 2
    base = (s - n * n) // 2
    dim = n + 1
    mat = [[RF_ZERO] * dim for _ in range(dim)]
    inv = [[RF_ZERO] * dim for _ in range(dim)]
    for j in range(dim):
        sign = 1 if j % 2 == 0 else -1
        for i in range(n - j + 1):
            mat[i][j] = RatFunc(qbinom(n - i, j).shift((n - i - 1) * j + base) * sign)
        sign = 1 if (n - j) % 2 == 0 else -1
        for i in range(n - j, dim):
            inv[i][j] = RatFunc(qbinom(i, n - j).shift((1 - i) * (n - j) - base) * sign)
    return Matrix(mat), Matrix(inv)


def omega_closed_form(n, eps):
    """Omega on L(n, eps) from entry formulas; checked against the compositional build."""
    mat, inv = _closed_form_matrices(n)
    built = omega(build_equitable(ModuleSpec.single(n, eps)))
    if mat != built.matrix or inv != built.inverse:
        raise ConsistencyError("closed-form Omega disagrees with the compositional build")
    return OmegaOperator(matrix=mat, inverse=inv, provenance="closedForm")


def omega_cube_scalar(n):
    """The scalar by which Omega^3 acts on L(n, eps) (independent of eps)."""
    if n % 2 == 0:
        return q_power(-(n * (n + 2)) // 2)
    return -q_power(((1 - n) * (n + 3)) // 2)


def _operator_env(rep, q0=None):
    """All operator matrices for one module, over Q(q) or at q = q0."""
    if rep.basis != "equitable":
        raise ValueError("operator suites run on the equitable basis")
    sc = ScalarContext(q0)
    env = {"sc": sc, "I": Matrix.identity(rep.dim, sc.one)}
    for g in ("x", "y", "z"):
        env[g] = sc.matrix(rep.action[g])
    env["x^-1"] = sc.matrix(rep.action["x^-1"])
    env["y^-1"] = env["y"].inverse()
    env["z^-1"] = env["z"].inverse()
    for a in ("x", "y", "z"):
        nmat = _n_from_mats(a, env, sc)
        env["n_" + a] = nmat
        env["idx_" + a] = _nil_index(nmat)
        env["E" + a] = _exp_series(nmat, env["idx_" + a], sc, inverse=False)
        env["E" + a + "^-1"] = _exp_series(nmat, env["idx_" + a], sc, inverse=True)
    env["Psi"] = sc.matrix(psi(rep))
    env["Psi^-1"] = sc.matrix(psi_inverse(rep))
    env["Omega"] = env["Ez"] * env["Psi"] * env["Ey"]
    env["Omega^-1"] = env["Ey^-1"] * env["Psi^-1"] * env["Ez^-1"]
    return env


def _add_eq(report, identity, mod, lhs, rhs):
    ok = lhs == rhs
    report.add(check(identity, mod, ok,
                     witness=None if ok else "difference %s" % (lhs - rhs)))


def verify_conjugation_suite(rep, q0=None):
    """Nilpotency, exp_q invertibility, and every conjugation identity on one module."""
    env = _operator_env(rep, q0)
    mod = rep.spec.json_obj()
    expected = max(n for n, _ in rep.spec.summands) + 1
    report = VerificationReport()

    for a in ("x", "y", "z"):
        idx = env["idx_" + a]
        report.add(check("nilpotent:n_%s:index=n+1" % a, mod, idx == expected,
                         witness="index %d, expected %d" % (idx, expected)))
    for a in ("x", "y", "z"):
        _add_eq(report, "expq:exp_q(n_%s)*exp_q(n_%s)^-1=1" % (a, a), mod,
                env["E" + a] * env["E" + a + "^-1"], env["I"])

    rows = []
    for a in ("x", "y", "z"):
        p, nx = _PREV[a], _NEXT[a]
        E, Ei = env["E" + a], env["E" + a + "^-1"]
        P, N, A = env[p], env[nx], env[a]
        rows.append(("conj:exp_q(n_%s)^-1*%s*exp_q(n_%s)=%s^-1" % (a, p, a, nx),
                     Ei * P * E, env[nx + "^-1"]))
        rows.append(("conj:exp_q(n_%s)*%s*exp_q(n_%s)^-1=%s^-1" % (a, nx, a, p),
                     E * N * Ei, env[p + "^-1"]))
        rows.append(("conj:exp_q(n_%s)^-1*%s*exp_q(n_%s)=%s*%s*%s" % (a, nx, a, nx, p, nx),
                     Ei * N * E, N * P * N))
        rows.append(("conj:exp_q(n_%s)*%s*exp_q(n_%s)^-1=%s*%s*%s" % (a, p, a, p, nx, p),
                     E * P * Ei, P * N * P))
        rows.append(("conj:exp_q(n_%s)^-1*%s*exp_q(n_%s)=%s+%s-%s^-1" % (a, a, a, a, nx, nx),
                     Ei * A * E, A + N - env[nx + "^-1"]))
        rows.append(("conj:exp_q(n_%s)*%s*exp_q(n_%s)^-1=%s+%s-%s^-1" % (a, a, a, a, p, p),
                     E * A * Ei, A + P - env[p + "^-1"]))
    for a in ("x", "y", "z"):
        p, nx = _PREV[a], _NEXT[a]
        E = env["E" + a]
        rows.append(("conj:%s*exp_q(n_%s)-exp_q(n_%s)*%s=exp_q(n_%s)*%s-%s*exp_q(n_%s)"
                     % (a, a, a, a, a, nx, p, a),
                     env[a] * E - E * env[a], E * env[nx] - env[p] * E))

    Psi, Psii = env["Psi"], env["Psi^-1"]
    X, Xi = env["x"], env["x^-1"]
    rows.append(("psi:Psi^-1*x*Psi=x", Psii * X * Psi, X))
    rows.append(("psi:Psi^-1*n_y*Psi=x*n_y*x", Psii * env["n_y"] * Psi, X * env["n_y"] * X))
    rows.append(("psi:Psi^-1*n_z*Psi=x^-1*n_z*x^-1",
                 Psii * env["n_z"] * Psi, Xi * env["n_z"] * Xi))

    Om, Omi = env["Omega"], env["Omega^-1"]
    rows.append(("omega:Omega*Omega^-1=1", Om * Omi, env["I"]))
    for a in ("x", "y", "z"):
        rows.append(("omega:Omega^-1*%s*Omega=%s" % (a, _NEXT[a]),
                     Omi * env[a] * Om, env[_NEXT[a]]))
    cube = Om * Om * Om
    for a in ("x", "y", "z"):
        rows.append(("omega:Omega^3*%s=%s*Omega^3" % (a, a),
                     cube * env[a], env[a] * cube))

    for identity, lhs, rhs in rows:
        _add_eq(report, identity, mod, lhs, rhs)

    if rep.spec.is_single:
        n = rep.spec.summands[0][0]
        scalar = env["sc"].scal(omega_cube_scalar(n))
        _add_eq(report, "omega:Omega^3=central-scalar", mod, cube,
                env["I"].scalar_mul(scalar))
    return report


def verify_relation_rewrites(rep, q0=None):
    """q(1 - yz) = q^-1(1 - zy) and its two cyclic rotations, as matrices."""
    if rep.basis != "equitable":
        raise ValueError("relation rewrites run on the equitable basis")
    sc = ScalarContext(q0)
    mats = {g: sc.matrix(rep.action[g]) for g in ("x", "y", "z")}
    ident = Matrix.identity(rep.dim, sc.one)
    mod = rep.spec.json_obj()
    report = VerificationReport()
    for axis in ("x", "y", "z"):
        a, b = _NEXT[axis], _PREV[axis]
        lhs = (ident - mats[a] * mats[b]).scalar_mul(sc.scal(q_power(1)))
        rhs = (ident - mats[b] * mats[a]).scalar_mul(sc.scal(q_power(-1)))
        _add_eq(report, "rewrite:q*(1-%s*%s)=q^-1*(1-%s*%s)" % (a, b, b, a),
                mod, lhs, rhs)
    return report


def verify_closed_form(n, eps, q0=None):
    """Closed-form Omega entries against the compositional build, plus the Omega^3 scalar."""
    rep = build_equitable(ModuleSpec.single(n, eps))
    env = _operator_env(rep, q0)
    sc = env["sc"]
    mod = rep.spec.json_obj()
    mat, inv = _closed_form_matrices(n)
    report = VerificationReport()
    _add_eq(report, "closedform:Omega=exp_q(n_z)*Psi*exp_q(n_y)", mod,
            sc.matrix(mat), env["Omega"])
    _add_eq(report, "closedform:Omega^-1", mod, sc.matrix(inv), env["Omega^-1"])
    cube = env["Omega"] * env["Omega"] * env["Omega"]
    _add_eq(report, "closedform:Omega^3=central-scalar", mod, cube,
            env["I"].scalar_mul(sc.scal(omega_cube_scalar(n))))
    return report

"""PBW normal forms and presentation maps for the quantum algebra U_q(sl2).

Chevalley generators k, k^-1, e, f satisfy

    k k^-1 = k^-1 k = 1,   k e = q^2 e k,   k f = q^-2 f k,
    e f - f e = (k - k^-1)/(q - q^-1),

and every element has a unique normal form as a Q(q)-linear combination of
PBW monomials f^a k^b e^c (a, c >= 0, b in Z).  Normalization runs a
confluent rewriting system on words in the letters f, k, K (= k^-1), e;
each rule strictly reduces the number of out-of-order letter pairs, and
all overlap ambiguities resolve (see critical_pair_entries), so normal
forms are well defined.

The equitable generators x, x^-1, y, z satisfy

    x x^-1 = x^-1 x = 1,
    (q x y - q^-1 y x)/(q - q^-1) = 1,
    (q y z - q^-1 z y)/(q - q^-1) = 1,
    (q z x - q^-1 x z)/(q - q^-1) = 1,

and correspond to Chevalley elements via

    x = k,  x^-1 = k^-1,  y = k^-1 + f (q - q^-1),
    z = k^-1 - k^-1 e q (q - q^-1),

with inverse map k = x, k^-1 = x^-1, f = (y - x^-1)/(q - q^-1),
e = (1 - x z) q^-1/(q - q^-1).
"""

from fractions import Fraction

from . import exprio
from .exprio import Generator, IntPower, Negate, Product, ScalarLiteral, Sum
from .qfield import RF_ONE, RatFunc, q_power
from .report import ReportEntry, VerificationReport

# 1/(q - q^-1), ubiquitous in the defining relations
CQ = (q_power(1) - q_power(-1)).inverse()

_Q2 = q_power(2)
_QM2 = q_power(-2)

# rewrite rules over the letter alphabet f < k, K < e (K stands for k^-1);
# each left side maps to a linear combination of replacement words
_RULES = {
    "ef": ((RF_ONE, "fe"), (CQ, "k"), (-CQ, "K")),
    "ek": ((_QM2, "ke"),),
    "eK": ((_Q2, "Ke"),),
    "kf": ((_QM2, "fk"),),
    "Kf": ((_Q2, "fK"),),
    "kK": ((RF_ONE, ""),),
    "Kk": ((RF_ONE, ""),),
}

_nf_cache = {}


def _first_redex(word):
    for i in range(len(word) - 1):
        if word[i : i + 2] in _RULES:
            return i
    return None


def _normalize_word(word):
    """Normal form of a single letter word as {normal word: coefficient}."""
    res = _nf_cache.get(word)
    if res is not None:
        return res
    pos = _first_redex(word)
    if pos is None:
        res = {word: RF_ONE}
    else:
        res = {}
        for coeff, repl in _RULES[word[pos : pos + 2]]:
            sub = _normalize_word(word[:pos] + repl + word[pos + 2 :])
            for w, c in sub.items():
                s = res.get(w)
                s = coeff * c if s is None else s + coeff * c
                if s.is_zero():
                    res.pop(w, None)
                else:
                    res[w] = s
    _nf_cache[word] = res
    return res


def _normalize_combo(combo):
    """Normalize a {word: coefficient} linear combination."""
    res = {}
    for word, coeff in combo.items():
        for w, c in _normalize_word(word).items():
            s = res.get(w)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                res.pop(w, None)
            else:
                res[w] = s
    return res


def _mono_word(mono):
    a, b, c = mono
    kpart = "k" * b if b >= 0 else "K" * (-b)
    return "f" * a + kpart + "e" * c


def _word_mono(word):
    a = 0
    while a < len(word) and word[a] == "f":
        a += 1
    i = a
    b = 0
    while i < len(word) and word[i] in "kK":
        b += 1 if word[i] == "k" else -1
        i += 1
    return (a, b, len(word) - i)


def _mono_str(mono):
    a, b, c = mono
    parts = []
    if a:
        parts.append("f" if a == 1 else "f^%d" % a)
    if b:
        parts.append("k" if b == 1 else "k^%d" % b)
    if c:
        parts.append("e" if c == 1 else "e^%d" % c)
    return "*".join(parts)


class AlgebraElement:
    """Element of U_q(sl2) as a Q(q)-combination of PBW monomials f^a k^b e^c."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, RatFunc):
                    coeff = RF_ONE * coeff
                if not coeff.is_zero():
                    t[mono] = coeff
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        el = cls.__new__(cls)
        el.terms = terms
        return el

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0, 0, 0): RF_ONE})

    @classmethod
    def scalar(cls, c):
        if not isinstance(c, RatFunc):
            c = RF_ONE * c
        return cls._raw({} if c.is_zero() else {(0, 0, 0): c})

    @classmethod
    def generator(cls, name):
        mono = {"f": (1, 0, 0), "k": (0, 1, 0), "k^-1": (0, -1, 0), "e": (0, 0, 1)}.get(name)
        if mono is None:
            raise ValueError("unknown Chevalley generator %r" % (name,))
        return cls._raw({mono: RF_ONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == AlgebraElement.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return AlgebraElement._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                res.pop(m, None)
            else:
                res[m] = s
        return AlgebraElement._raw(res)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            if not isinstance(other, RatFunc):
                other = RF_ONE * other
            if other.is_zero():
                return AlgebraElement._raw({})
            return AlgebraElement._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        res = {}
        for m1, c1 in self.terms.items():
            w1 = _mono_word(m1)
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for w, c in _normalize_word(w1 + _mono_word(m2)).items():
                    m = _word_mono(w)
                    s = res.get(m)
                    s = c12 * c if s is None else s + c12 * c
                    if s.is_zero():
                        res.pop(m, None)
                    else:
                        res[m] = s
        return AlgebraElement._raw(res)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self * other  # scalars commute with everything
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            if isinstance(n, int) and len(self.terms) == 1:
                (mono, coeff), = self.terms.items()
                a, b, c = mono
                if a == 0 and c == 0:  # powers of k are invertible
                    return AlgebraElement._raw({(0, b * n, 0): coeff ** n})
            raise ValueError("cannot raise this element to power %r" % (n,))
        result = AlgebraElement.one()
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (m[0], -m[1], m[2])):
            coeff = self.terms[mono]
            neg = coeff.leading_negative()
            mag = -coeff if neg else coeff
            ms = _mono_str(mono)
            if not ms:
                body = str(mag)
            elif mag == RF_ONE:
                body = ms
            elif mag.is_single_term():
                body = "%s*%s" % (mag, ms)
            else:
                body = "(%s)*%s" % (mag, ms)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "AlgebraElement(%s)" % self


# Chevalley images of the equitable generators
_EQ_IMAGES = None


def equitable_image(name):
    """The Chevalley normal form of an equitable generator x, x^-1, y, z."""
    global _EQ_IMAGES
    if _EQ_IMAGES is None:
        k = AlgebraElement.generator("k")
        kinv = AlgebraElement.generator("k^-1")
        e = AlgebraElement.generator("e")
        f = AlgebraElement.generator("f")
        qmqi = q_power(1) - q_power(-1)
        _EQ_IMAGES = {
            "x": k,
            "x^-1": kinv,
            "y": kinv + f * qmqi,
            "z": kinv - (kinv * e) * (q_power(1) * qmqi),
        }
    img = _EQ_IMAGES.get(name)
    if img is None:
        raise ValueError("unknown equitable generator %r" % (name,))
    return img


def _expr_to_algebra(expr, genmap):
    if isinstance(expr, ScalarLiteral):
        return AlgebraElement.scalar(expr.value)
    if isinstance(expr, Generator):
        el = genmap.get(expr.name)
        if el is None:
            raise ValueError("generator %r is not part of this presentation" % (expr.name,))
        return el
    if isinstance(expr, Negate):
        return -_expr_to_algebra(expr.child, genmap)
    if isinstance(expr, Sum):
        total = AlgebraElement.zero()
        for t in expr.terms:
            total = total + _expr_to_algebra(t, genmap)
        return total
    if isinstance(expr, Product):
        total = AlgebraElement.one()
        for f in expr.factors:
            total = total * _expr_to_algebra(f, genmap)
        return total
    if isinstance(expr, IntPower):
        return _expr_to_algebra(expr.base, genmap) ** expr.exp
    raise TypeError("not an NCExpr node: %r" % (expr,))


_CHEV_MAP = None


def normalize_chevalley(expr):
    """PBW normal form of an NCExpr over the Chevalley presentation."""
    global _CHEV_MAP
    if _CHEV_MAP is None:
        _CHEV_MAP = {name: AlgebraElement.generator(name)
                     for name in ("k", "k^-1", "e", "f")}
    return _expr_to_algebra(expr, _CHEV_MAP)


def from_equitable(expr):
    """Chevalley normal form of an NCExpr over the equitable presentation."""
    return _expr_to_algebra(
        expr, {name: equitable_image(name) for name in ("x", "x^-1", "y", "z")})


def to_equitable_generators(gen):
    """Equitable NCExpr whose Chevalley image is the named generator."""
    x = Generator(exprio.EQUITABLE, "x")
    xinv = Generator(exprio.EQUITABLE, "x^-1")
    y = Generator(exprio.EQUITABLE, "y")
    z = Generator(exprio.EQUITABLE, "z")
    qmqi_inv = (q_power(1) - q_power(-1)).inverse()
    if gen == "k":
        return x
    if gen == "k^-1":
        return xinv
    if gen == "f":
        return Product((Sum((y, Negate(xinv))), ScalarLiteral(qmqi_inv)))
    if gen == "e":
        return Product((Sum((ScalarLiteral(RF_ONE), Negate(Product((x, z))))),
                        ScalarLiteral(q_power(-1) * qmqi_inv)))
    raise ValueError("unknown Chevalley generator %r" % (gen,))


def critical_pair_entries():
    """Check every overlap ambiguity of the rewriting system resolves."""
    overlaps = sorted({u + v[1:] for u in _RULES for v in _RULES if u[1] == v[0]})
    entries = []
    for w in overlaps:
        routes = []
        for pos in (0, 1):
            combo = {}
            for coeff, repl in _RULES[w[pos : pos + 2]]:
                nw = w[:pos] + repl + w[pos + 2 :]
                combo[nw] = combo.get(nw, RF_ONE * 0) + coeff
            routes.append(_normalize_combo(combo))
        ok = routes[0] == routes[1]
        entries.append(ReportEntry(
            identity="confluence:overlap:%s" % w,
            module=None,
            status="pass" if ok else "fail",
            witness=None if ok else "%r != %r" % (routes[0], routes[1])))
    return entries


def verify_confluence():
    """Confluence of the normalization rewriting system, one entry per overlap."""
    return VerificationReport(critical_pair_entries())


def verify_presentation_iso():
    """Check the equitable <-> Chevalley correspondence is an isomorphism."""
    one = AlgebraElement.one()
    x = equitable_image("x")
    xinv = equitable_image("x^-1")
    y = equitable_image("y")
    z = equitable_image("z")
    qq = q_power(1)
    qi = q_power(-1)

    def weyl(a, b):
        return (a * b * qq - b * a * qi) * CQ

    entries = []
    checks = [
        ("iso:relation:x*x^-1=x^-1*x=1", x * xinv == one and xinv * x == one),
        ("iso:relation:(q*x*y-q^-1*y*x)/(q-q^-1)=1", weyl(x, y) == one),
        ("iso:relation:(q*y*z-q^-1*z*y)/(q-q^-1)=1", weyl(y, z) == one),
        ("iso:relation:(q*z*x-q^-1*x*z)/(q-q^-1)=1", weyl(z, x) == one),
    ]
    for gen in ("k", "k^-1", "f", "e"):
        image = from_equitable(to_equitable_generators(gen))
        checks.append(("iso:composite:%s" % gen, image == AlgebraElement.generator(gen)))
    for name, ok in checks:
        entries.append(ReportEntry(identity=name, module=None,
                                   status="pass" if ok else "fail"))
    return VerificationReport(entries)


_auto_checked = set()


def apply_automorphism(element, i, alpha):
    """Apply the automorphism k -> k, e -> alpha*e*k^i, f -> alpha^-1*k^-i*f."""
    if not isinstance(i, int):
        raise TypeError("automorphism exponent i must be an integer")
    if not isinstance(alpha, RatFunc):
        alpha = RF_ONE * alpha
    if alpha.is_zero():
        raise ValueError("automorphism scale alpha must be nonzero")
    k = AlgebraElement.generator("k")
    e_img = (AlgebraElement.generator("e") * (k ** i)) * alpha
    f_img = ((k ** (-i)) * AlgebraElement.generator("f")) * alpha.inverse()
    key = (i, str(alpha))
    if key not in _auto_checked:
        # the images must satisfy the defining relations
        kinv = AlgebraElement.generator("k^-1")
        assert k * e_img == e_img * k * q_power(2)
        assert k * f_img == f_img * k * q_power(-2)
        assert e_img * f_img - f_img * e_img == (k - kinv) * CQ
        _auto_checked.add(key)
    res = AlgebraElement.zero()
    for (a, b, c), coeff in element.terms.items():
        term = (f_img ** a) * AlgebraElement._raw({(0, b, 0): RF_ONE}) * (e_img ** c)
        res = res + term * coeff
    return res


_N_AXES = {"x": ("y", "z"), "y": ("z", "x"), "z": ("x", "y")}
_n_cache = {}


def n_element(axis):
    """The nilpotent element n_axis = q(1 - next*prev)/(q - q^-1) in normal form."""
    el = _n_cache.get(axis)
    if el is not None:
        return el
    pair = _N_AXES.get(axis)
    if pair is None:
        raise ValueError("axis must be one of x, y, z")
    a, b = pair
    one = AlgebraElement.one()
    left = (one - equitable_image(a) * equitable_image(b)) * (q_power(1) * CQ)
    right = (one - equitable_image(b) * equitable_image(a)) * (q_power(-1) * CQ)
    assert left == right  # the two defining expressions agree in the algebra
    _n_cache[axis] = left
    return left


def verify_n_definitions():
    """Each n-element's two defining expressions agree in the algebra."""
    one = AlgebraElement.one()
    entries = []
    for axis in ("x", "y", "z"):
        a, b = _N_AXES[axis]
        left = (one - equitable_image(a) * equitable_image(b)) * (q_power(1) * CQ)
        right = (one - equitable_image(b) * equitable_image(a)) * (q_power(-1) * CQ)
        ok = left == right
        entries.append(ReportEntry(
            identity="ndef:n_%s:q*(1-%s*%s)=q^-1*(1-%s*%s)" % (axis, a, b, b, a),
            module=None, status="pass" if ok else "fail",
            witness=None if ok else str(left - right)))
    return VerificationReport(entries)


def verify_n_commutation():
    """The six q-commutation relations between generators and n-elements."""
    gens = {g: equitable_image(g) for g in ("x", "y", "z")}
    rows = [
        ("x", "y", 2), ("x", "z", -2),
        ("y", "z", 2), ("y", "x", -2),
        ("z", "x", 2), ("z", "y", -2),
    ]
    entries = []
    for g, axis, exp in rows:
        lhs = gens[g] * n_element(axis)
        rhs = n_element(axis) * gens[g] * q_power(exp)
        ok = lhs == rhs
        entries.append(ReportEntry(
            identity="ncomm:%s*n_%s=q^%d*n_%s*%s" % (g, axis, exp, axis, g),
            module=None,
            status="pass" if ok else "fail",
            witness=None if ok else str(lhs - rhs)))
    return VerificationReport(entries)


def verify_n_preimages():
    """n_y and n_z match their Chevalley preimages e and -q*k*f."""
    e = AlgebraElement.generator("e")
    kf = AlgebraElement.generator("k") * AlgebraElement.generator("f")
    entries = []
    for name, lhs, rhs in [
        ("npre:n_y=e", n_element("y"), e),
        ("npre:n_z=-q*k*f", n_element("z"), kf * (-q_power(1))),
    ]:
        ok = lhs == rhs
        entries.append(ReportEntry(
            identity=name, module=None, status="pass" if ok else "fail",
            witness=None if ok else str(lhs - rhs)))
    return VerificationReport(entries)

"""Exact arithmetic over the ground field Q(q).

Elements are represented in a unique canonical form: a LaurentPoly is a
finitely supported map from integer q-exponents to rational coefficients,
and a RatFunc is a quotient num/den where den is a monic polynomial in q
with nonzero constant term and gcd(num's polynomial part, den) = 1.  With
this normalization, equality is structural comparison and the text
rendering is bit-stable.

Coefficients are Python ints where possible and fractions.Fraction
otherwise; no floating point appears anywhere.
"""

from fractions import Fraction

Rational = Fraction


class PoleError(ArithmeticError):
    """Evaluation hit a vanishing denominator."""


class SpecializationError(ValueError):
    """The requested evaluation point q0 is not admissible."""


def _coeff(c):
    # normalize a coefficient to int when integral, Fraction otherwise
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % (c,))


def _coeff_str(c):
    if isinstance(c, Fraction):
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


class LaurentPoly:
    """Laurent polynomial in q over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = _coeff(c)
                if c:
                    t[e] = c
        self.terms = t

    @classmethod
    def _raw(cls, terms):
        # terms already normalized: no zeros, coeffs int|Fraction
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c):
        c = _coeff(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def q_power(cls, e):
        return cls._raw({e: 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            return self.terms == ({0: c} if c else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        res = dict(a)
        for e, c in b.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = _coeff(s)
            else:
                res.pop(e, None)
        return LaurentPoly._raw(res)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: _coeff(c0 * c) for e, c0 in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                else:
                    res.pop(e, None)
        for e in list(res):
            res[e] = _coeff(res[e])
        return LaurentPoly._raw(res)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("LaurentPoly power wants a nonnegative integer")
        result = LaurentPoly._raw({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def shift(self, d):
        """Multiply by q^d."""
        return LaurentPoly._raw({e + d: c for e, c in self.terms.items()})

    def valuation(self):
        # lowest exponent; undefined on zero
        return min(self.terms)

    def degree(self):
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[max(self.terms)]

    def evaluate(self, q0):
        q0 = Fraction(q0)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * q0 ** e
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = _coeff_str(a)
            else:
                qp = "q" if e == 1 else "q^%d" % e
                body = qp if a == 1 else "%s*%s" % (_coeff_str(a), qp)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self


# dense polynomial helpers (index = exponent, trailing zeros stripped)

def _dense(p):
    # p: LaurentPoly with valuation >= 0
    d = [0] * (p.degree() + 1)
    for e, c in p.terms.items():
        d[e] = c
    return d


def _strip(a):
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a, b):
    # exact rational division; b nonzero
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if not c:
            continue
        c = c if lb == 1 else Fraction(c, 1) / lb
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    return q, _strip(a)

def _dense_gcd(a, b):
    # monic gcd over the rationals
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    lc = a[-1]
    if lc != 1:
        a = [Fraction(c, 1) / lc for c in a]
    return a


def _from_dense(d):
    return LaurentPoly({e: c for e, c in enumerate(d)})


class RatFunc:
    """Element of Q(q) in canonical num/den form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in RatFunc")
        f = _reduce(num, den)
        self.num, self.den = f.num, f.den

    @classmethod
    def _raw(cls, num, den):
        f = cls.__new__(cls)
        f.num = num
        f.den = den
        return f

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den == _ONE_P

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONE_P and other.den == _ONE_P:
            return RatFunc._raw(self.num + other.num, _ONE_P)
        if self.den == other.den:
            return _reduce(self.num + other.num, self.den)
        return _reduce(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == _ONE_P and other.den == _ONE_P:
            return RatFunc._raw(self.num * other.num, _ONE_P)
        return _reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return _reduce(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("RatFunc power wants an integer")
        base = self if n >= 0 else self.inverse()
        result = RatFunc._raw(_ONE_P, _ONE_P)
        for _ in range(abs(n)):
            result = result * base
        return result

    def leading_negative(self):
        # sign of the highest-exponent numerator coefficient (den is monic)
        if self.num.is_zero():
            return False
        return self.num.leading_coeff() < 0

    def is_single_term(self):
        return self.den == _ONE_P and len(self.num.terms) == 1

    def as_sign_q_power(self):
        """Decompose as (sign, m) when the value is +-q^m, else None."""
        if self.den != _ONE_P or len(self.num.terms) != 1:
            return None
        (e, c), = self.num.terms.items()
        if c == 1:
            return (1, e)
        if c == -1:
            return (-1, e)
        return None

    def evaluate(self, q0):
        q0 = Fraction(q0)
        d = self.den.evaluate(q0)
        if d == 0:
            raise PoleError("denominator vanishes at q = %s" % q0)
        return self.num.evaluate(q0) / d

    def __str__(self):
        if self.den == _ONE_P:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFunc(%s)" % self


_ZERO_P = LaurentPoly._raw({})
_ONE_P = LaurentPoly._raw({0: 1})


def _as_poly(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return LaurentPoly.const(v)
    raise TypeError("cannot coerce %r to LaurentPoly" % (v,))


def _as_ratfunc(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, LaurentPoly):
        return RatFunc._raw(v, _ONE_P)
    if isinstance(v, (int, Fraction)):
        return RatFunc._raw(LaurentPoly.const(v), _ONE_P)
    return NotImplemented


def _reduce(num, den):
    # canonicalize num/den: den a monic polynomial, den(0) != 0,
    # gcd(num's polynomial part, den) = 1
    if num.is_zero():
        return RatFunc._raw(_ZERO_P, _ONE_P)
    vd = den.valuation()
    if vd:
        den = den.shift(-vd)
        num = num.shift(-vd)
    if den.degree() == 0:
        c = den.terms[0]
        if c != 1:
            num = num * (Fraction(1, 1) / c)
        return RatFunc._raw(num, _ONE_P)
    vn = num.valuation()
    numpoly = num.shift(-vn) if vn else num
    g = _dense_gcd(_dense(numpoly), _dense(den))
    if len(g) > 1:
        qn, rn = _dense_divmod(_dense(numpoly), g)
        qd, rd = _dense_divmod(_dense(den), g)
        assert not rn and not rd
        numpoly = _from_dense(qn)
        den = _from_dense(qd)
        if den.degree() == 0:
            c = den.terms[0]
            if c != 1:
                numpoly = numpoly * (Fraction(1, 1) / c)
            return RatFunc._raw(numpoly.shift(vn), _ONE_P)
    lc = den.leading_coeff()
    if lc != 1:
        inv = Fraction(1, 1) / lc
        den = den * inv
        numpoly = numpoly * inv
    return RatFunc._raw(numpoly.shift(vn), den)


RF_ZERO = RatFunc._raw(_ZERO_P, _ONE_P)
RF_ONE = RatFunc._raw(_ONE_P, _ONE_P)
RF_Q = RatFunc._raw(LaurentPoly._raw({1: 1}), _ONE_P)
RF_QINV = RatFunc._raw(LaurentPoly._raw({-1: 1}), _ONE_P)


def q_power(e):
    """q^e as a RatFunc."""
    return RatFunc._raw(LaurentPoly._raw({e: 1}), _ONE_P)


_qint_cache = {}


def qint(n):
    """The q-integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial."""
    if not isinstance(n, int):
        raise TypeError("qint wants an integer")
    p = _qint_cache.get(n)
    if p is None:
        if n >= 0:
            p = LaurentPoly._raw({e: 1 for e in range(n - 1, -n, -2)})
        else:
            p = -qint(-n)
        _qint_cache[n] = p
    return p


_qfact_cache = {0: _ONE_P}


def qfact(n):
    """The q-factorial [n]! = [n][n-1]...[1], with [0]! = 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("qfact wants a nonnegative integer")
    p = _qfact_cache.get(n)
    if p is None:
        p = qfact(n - 1) * qint(n)
        _qfact_cache[n] = p
    return p


_qbinom_cache = {}


def qbinom(n, i):
    """The q-binomial coefficient [n]!/([i]![n-i]!); requires n >= i >= 0."""
    if not (isinstance(n, int) and isinstance(i, int)) or i < 0 or n < i:
        raise ValueError("qbinom wants integers n >= i >= 0")
    p = _qbinom_cache.get((n, i))
    if p is None:
        f = RatFunc(qfact(n), qfact(i) * qfact(n - i))
        assert f.is_polynomial()  # the division is exact
        p = f.num
        _qbinom_cache[(n, i)] = p
    return p


def check_admissible(q0):
    """Validate a specialization point: rational with q0 not in {0, 1, -1}."""
    q0 = Fraction(q0)
    if q0 == 0 or q0 == 1 or q0 == -1:
        raise SpecializationError("q0 must satisfy q0 != 0 and q0^2 != 1, got %s" % q0)
    return q0


def specialize(f, q0):
    """Evaluate a RatFunc (or LaurentPoly) exactly at an admissible rational q0."""
    q0 = check_admissible(q0)
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    return f.evaluate(q0)

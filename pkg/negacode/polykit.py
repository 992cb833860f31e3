"""
polykit.py
==========

Dense univariate polynomials over a tabulated field, the reciprocal
polynomial calculus, and minimal polynomials / factorization of x^n + 1.
"""

import itertools

from astropy import log

from .errors import (
    CoefficientNotInBaseField,
    DivisionByZero,
    FieldMismatch,
    GcdViolation,
    InternalInconsistency,
    NotOddResidue,
    OutOfRange,
    ZeroConstantTerm,
)
from .fieldkit import build_extension, field_of_order


class Poly(object):
    """Immutable polynomial with coefficients stored lowest degree first.

    Coefficients are element indices of ``field``; trailing zeros are dropped,
    so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        for c in coeffs:
            if not 0 <= c < field.size:
                raise OutOfRange(f"Coefficient {c} is not an element of {field}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, [0] * k + [c])

    @classmethod
    def x_n_plus_1(cls, field, n):
        return cls(field, [1] + [0] * (n - 1) + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.leading == 1

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"Expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"Polynomials over {self.field} and {other.field}")

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = [F.add(a, b) for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)]
        return Poly(F, out)

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c):
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def evaluate(self, point, field=None):
        """Evaluate at ``point`` (an element index of ``field``, default own field).

        ``field`` may be an extension of the coefficient field, whose element
        indices agree with the base indices on the base field.
        """
        F = field if field is not None else self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            var = "x" if k == 1 else f"x^{k}"
            terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    def to_dict(self):
        return {"coefficients": list(self.coeffs), "degree": self.degree, "text": str(self)}


def poly_divmod(a, b):
    """Euclidean division, ``a = quotient * b + remainder`` with deg remainder < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZero("Polynomial division by zero")
    F = a.field
    db = b.degree
    rem = list(a.coeffs)
    quo = [0] * max(len(rem) - db, 0)
    lead_inv = F.inv(b.leading)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = F.mul(c, lead_inv)
        quo[i - db] = f
        for j, bj in enumerate(b.coeffs):
            if bj:
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, bj))
    return Poly(F, quo), Poly(F, rem[:db])


def monic(h):
    if h.is_zero():
        return h
    return h.scale(h.field.inv(h.leading))


def poly_gcd(a, b):
    """Monic greatest common divisor of two polynomials, not both zero."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise DivisionByZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return monic(a)


def poly_lcm(a, b):
    """Monic least common multiple; zero when either argument is zero."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    return monic(poly_divmod(a * b, poly_gcd(a, b))[0])


def poly_powmod(a, k, modulus):
    result = Poly.one(a.field)
    square = a % modulus
    while k:
        if k & 1:
            result = (result * square) % modulus
        square = (square * square) % modulus
        k >>= 1
    return result


def reversal(h):
    """Plain coefficient reversal x^{deg h} h(1/x)."""
    return Poly(h.field, reversed(h.coeffs))


def reciprocal(h):
    """Reciprocal polynomial h*(x) = a_0^{-1} x^{deg h} h(1/x).

    The result is always monic, and (h*)* = monic(h).
    """
    if h.is_zero() or h.constant == 0:
        raise ZeroConstantTerm(f"{h} has zero constant term")
    F = h.field
    star = reversal(h).scale(F.inv(h.constant))
    try:
        assert star.is_monic()
        assert reversal(star).scale(F.inv(star.constant)) == monic(h)
    except AssertionError:
        raise InternalInconsistency(f"Reciprocal of {h} is not an involution up to scaling")
    return star


def is_self_reciprocal(h):
    return reciprocal(h) == h


def is_irreducible(f):
    """Ben-Or irreducibility test over the coefficient field."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if f.constant == 0:
        return False
    x = Poly.x(f.field)
    h = x
    for _ in range(d // 2):
        h = poly_powmod(h, f.field.size, f)
        if poly_gcd(h - x, f).degree > 0:
            return False
    return True


def minimal_polynomial(system, ext, s):
    """Minimal polynomial over GF(q) of beta^s.

    Args:
        system (CosetSystem): cosets of q modulo 2n
        ext (ExtensionSpec): splitting field carrying beta
        s (int): odd residue modulo 2n

    Returns:
        m_s (Poly): monic, degree |T_s|, coefficients in GF(q)
    """
    if ext.two_n != system.two_n or ext.base.q != system.q:
        raise FieldMismatch(f"{ext} (n={ext.n}) does not match cosets of {system.q} mod {system.two_n}")
    if not (0 <= s < system.two_n and s % 2 == 1):
        raise NotOddResidue(f"{s} is not an odd residue mod {system.two_n}")
    coeffs = [1]
    for j in system.cosets[system.leader_of[s]]:
        root = ext.neg(ext.power(ext.beta, j))
        # multiply by (x - beta^j)
        shifted = [0] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = ext.add(shifted[i], ext.mul(root, c))
        coeffs = shifted
    for c in coeffs:
        if not ext.in_base(c):
            raise CoefficientNotInBaseField(f"m_{s} has coefficient {c} outside {ext.base}")
    return Poly(ext.base, coeffs)


def factor_x_n_plus_1(n, q, field=None):
    """Irreducible factorization of x^n + 1 over GF(q).

    Returns:
        factors (list): ``(leader, m_s)`` pairs, one per odd coset, by leader
    """
    from .cosetkit import CosetSystem

    field = field if field is not None else field_of_order(q)
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    if n % field.p == 0:
        raise GcdViolation(f"gcd(n={n}, q={field.q}) != 1")
    system = CosetSystem(n, field.q)
    ext = build_extension(field, n)
    factors = [(s, minimal_polynomial(system, ext, s)) for s in system.X]

    product = Poly.one(field)
    for _, m_s in factors:
        product = product * m_s
    try:
        assert product == Poly.x_n_plus_1(field, n)
    except AssertionError:
        raise InternalInconsistency(f"Product of minimal polynomials is not x^{n}+1 over {field}")
    log.debug(f"x^{n}+1 over {field}: {len(factors)} irreducible factors")
    return factors

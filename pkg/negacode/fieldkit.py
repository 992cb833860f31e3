"""
fieldkit.py
===========

Finite fields of odd characteristic, held as exp/log/Zech tables.

Elements are canonical indices in ``[0, size)``. The base-p digits of an index
(least significant first) are the coefficients of the element in the
polynomial basis, so GF(q) sits inside GF(q^m) as the indices below q and
addition is digit-wise modulo p.
"""

import functools
import itertools
from dataclasses import dataclass

import numpy as np
from astropy import log
from sympy import factorint, isprime, n_order, primitive_root

from .config import conf
from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    InternalInconsistency,
    InvalidDegree,
    NotCoprime,
    NotPrime,
    OutOfRange,
)

#: Rows per block when generating power tables
TABLE_BLOCK = 4096


def _digits(index, base, length):
    out = []
    for _ in range(length):
        index, r = divmod(index, base)
        out.append(r)
    return out


def _undigits(digits, base):
    index = 0
    for d in reversed(digits):
        index = index * base + d
    return index


def _matrix_power_mod(matrix, k, p):
    result = np.eye(matrix.shape[0], dtype=np.int64)
    square = matrix.copy()
    while k:
        if k & 1:
            result = result.dot(square) % p
        square = square.dot(square) % p
        k >>= 1
    return result


class GaloisField(object):
    """Finite field with exp/log/Zech tables.

    Parameters
    ----------
    p: int
        Characteristic, an odd prime.
    size: int
        Number of elements, a power of p.
    exp_table: array_like
        ``exp_table[i]`` is the index of ``alpha^i`` for ``0 <= i < size - 1``.

    Notes
    -----
    Scalar methods (``add``, ``mul``, ...) take and return plain int indices.
    The ``v``-prefixed methods do the same on numpy arrays and broadcast.
    """

    def __init__(self, p, size, exp_table):
        self.p = p
        self.size = size
        self.order = size - 1
        self.half_order = self.order // 2
        self.exp_table = np.asarray(exp_table, dtype=np.int64)
        self.log_table = np.full(size, -1, dtype=np.int64)
        self.log_table[self.exp_table] = np.arange(self.order, dtype=np.int64)
        try:
            assert self.exp_table.shape == (self.order,)
            assert np.all(self.log_table[1:] >= 0)
        except AssertionError:
            raise InternalInconsistency(f"Power table of GF({size}) does not cover every unit")

        # zech_table[k] = log(1 + alpha^k), or -1 when 1 + alpha^k = 0
        low = self.exp_table % p
        self.zech_table = self.log_table[self.exp_table - low + (low + 1) % p]

        self._exp = self.exp_table.tolist()
        self._log = self.log_table.tolist()
        self._zech = self.zech_table.tolist()

    @property
    def key(self):
        return ("GF", self.p, self.size)

    @property
    def alpha(self):
        """Index of the primitive element the tables are built on."""
        return self._exp[1] if self.order > 1 else 1

    def __eq__(self, other):
        return isinstance(other, GaloisField) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.size})"

    def __contains__(self, rep):
        return isinstance(rep, (int, np.integer)) and 0 <= rep < self.size

    def element(self, rep):
        return FieldElement(self, int(rep))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        i = self._log[a]
        z = self._zech[(self._log[b] - i) % self.order]
        if z < 0:
            return 0
        return self._exp[(i + z) % self.order]

    def neg(self, a):
        if a == 0:
            return 0
        return self._exp[(self._log[a] + self.half_order) % self.order]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.size})")
        return self._exp[(-self._log[a]) % self.order]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        if k == 0:
            return 1
        if a == 0:
            if k < 0:
                raise DivisionByZero(f"0 has no inverse in GF({self.size})")
            return 0
        return self._exp[(self._log[a] * k) % self.order]

    def multiplicative_order(self, a):
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        return self.order // int(np.gcd(self._log[a], self.order))

    def vadd(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        la = self.log_table[a]
        z = self.zech_table[(self.log_table[b] - la) % self.order]
        out = np.where(z < 0, 0, self.exp_table[(la + z) % self.order])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == 0, 0, self.exp_table[(self.log_table[a] + self.half_order) % self.order])

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, out)


class FieldSpec(GaloisField):
    """GF(q), q = p^e, built on the canonical modulus over GF(p).

    For e = 1 the modulus is ``x`` and the tables follow the smallest
    primitive root mod p.
    """

    def __init__(self, p, e, modulus, exp_table):
        super(FieldSpec, self).__init__(p, p**e, exp_table)
        self.e = e
        self.q = self.size
        self.degree = e
        self.modulus = tuple(modulus)

    @property
    def key(self):
        return ("GF", self.p, self.e)

    def __repr__(self):
        return f"GF({self.q})"

    def to_dict(self):
        return {"p": self.p, "e": self.e, "q": self.q, "modulus": list(self.modulus)}


class ExtensionSpec(GaloisField):
    """GF(q^m) over a base field GF(q), with m = ord_{2n}(q).

    ``beta`` is the fixed primitive 2n-th root of unity,
    ``alpha^((q^m - 1) / 2n)``; in particular ``beta^n = -1``.
    """

    def __init__(self, base, n, m, modulus, exp_table):
        super(ExtensionSpec, self).__init__(base.p, base.q**m, exp_table)
        self.base = base
        self.n = n
        self.two_n = 2 * n
        self.m = m
        self.degree = base.e * m
        self.modulus = tuple(modulus)
        self.beta = self._exp[self.order // self.two_n]

    @property
    def key(self):
        return ("GF", self.p, self.base.e, self.m)

    def __repr__(self):
        return f"GF({self.base.q}^{self.m})"

    def in_base(self, rep):
        """True iff the element is fixed by the Frobenius map a -> a^q."""
        return self.power(rep, self.base.q) == rep

    def to_dict(self):
        return {
            "base": self.base.to_dict(),
            "n": self.n,
            "m": self.m,
            "size": self.size,
            "modulus": list(self.modulus),
            "alpha": self.alpha,
            "beta": self.beta,
        }


@dataclass(frozen=True)
class FieldElement(object):
    """A field element: the owning field plus its canonical index."""

    field: GaloisField
    rep: int

    def __post_init__(self):
        if not 0 <= self.rep < self.field.size:
            raise OutOfRange(f"{self.rep} is not an element index of {self.field}")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine elements of {self.field} and {other.field}")
            return other.rep
        return self.field.element(other).rep

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.rep, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.rep, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.rep, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.rep, self._other(other)))

    def __pow__(self, k):
        return pow(self, k)

    def __int__(self):
        return self.rep

    def __bool__(self):
        return self.rep != 0

    def __repr__(self):
        return f"FieldElement({self.field!r}, {self.rep})"


def canonical_modulus(base, degree):
    """First monic irreducible of the given degree over ``base``.

    Candidates ``c_0 + c_1 x + ... + c_{d-1} x^{d-1} + x^d`` are scanned in
    lexicographic order of ``(c_0, ..., c_{d-1})``; for d > 1 those with
    ``c_0 = 0`` are skipped.
    """
    from .polykit import Poly, is_irreducible

    for low in itertools.product(range(base.size), repeat=degree):
        if degree > 1 and low[0] == 0:
            continue
        coeffs = low + (1,)
        if is_irreducible(Poly(base, coeffs)):
            return coeffs
    raise InternalInconsistency(f"No irreducible polynomial of degree {degree} over {base}")


def _power_table(base, modulus):
    """Powers of the canonical primitive element of base[x]/(modulus)."""
    d = len(modulus) - 1
    width = base.size
    size = width**d
    order = size - 1
    p = base.p
    dim = base.degree * d

    def mulmod(u, v):
        prod = [0] * (2 * d - 1)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj:
                    prod[i + j] = base.add(prod[i + j], base.mul(ui, vj))
        for top in range(len(prod) - 1, d - 1, -1):
            c = prod[top]
            if c == 0:
                continue
            for j in range(d):
                if modulus[j]:
                    prod[top - d + j] = base.sub(prod[top - d + j], base.mul(c, modulus[j]))
            prod[top] = 0
        return prod[:d]

    def powmod(u, k):
        result = [1] + [0] * (d - 1)
        while k:
            if k & 1:
                result = mulmod(result, u)
            u = mulmod(u, u)
            k >>= 1
        return result

    one = [1] + [0] * (d - 1)
    cofactors = [order // r for r in sorted(factorint(order))]
    for candidate in range(1, size):
        alpha = _digits(candidate, width, d)
        if all(powmod(alpha, c) != one for c in cofactors):
            break
    else:
        raise InternalInconsistency(f"No primitive element in {base}[x]/({modulus})")

    # multiplication by alpha is GF(p)-linear on base-p digit vectors
    columns = []
    for j in range(dim):
        image = _undigits(mulmod(alpha, _digits(p**j, width, d)), width)
        columns.append(_digits(image, p, dim))
    step = np.array(columns, dtype=np.int64).T

    weights = p ** np.arange(dim, dtype=np.int64)
    block_len = min(order, TABLE_BLOCK)
    block = np.zeros((block_len, dim), dtype=np.int64)
    v = np.zeros(dim, dtype=np.int64)
    v[0] = 1
    for i in range(block_len):
        block[i] = v
        v = step.dot(v) % p
    jump = _matrix_power_mod(step, block_len, p).T

    pieces = []
    produced = 0
    while produced < order:
        pieces.append(block.dot(weights))
        produced += block_len
        block = block.dot(jump) % p
    return np.concatenate(pieces)[:order]


def build_field(p, e):
    """Build GF(p^e).

    Args:
        p (int): odd prime
        e (int): degree, at least 1

    Returns:
        field (FieldSpec): tabulated field, shared between calls
    """
    p, e = int(p), int(e)
    if e < 1:
        raise InvalidDegree(f"Field degree must be at least 1, got {e}")
    if p == 2:
        raise EvenCharacteristic("Characteristic 2 is not supported")
    if p < 2 or not isprime(p):
        raise NotPrime(f"{p} is not a prime")
    if p**e > conf.field_size_limit:
        raise FieldTooLarge(f"GF({p}^{e}) exceeds field_size_limit={conf.field_size_limit}")
    return _build_field(p, e)


@functools.lru_cache(maxsize=None)
def _build_field(p, e):
    if e == 1:
        g = int(primitive_root(p))
        exp = [1]
        for _ in range(p - 2):
            exp.append(exp[-1] * g % p)
        return FieldSpec(p, 1, (0, 1), exp)
    prime = _build_field(p, 1)
    modulus = canonical_modulus(prime, e)
    log.debug(f"GF({p}^{e}): canonical modulus {modulus}")
    return FieldSpec(p, e, modulus, _power_table(prime, modulus))


def field_of_order(q):
    """Build GF(q) from its order, which must be an odd prime power."""
    q = int(q)
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return build_field(p, e)


def build_extension(base, n):
    """Build the splitting field of x^n + 1 over ``base``.

    Args:
        base (FieldSpec): GF(q)
        n (int): code length, coprime to q

    Returns:
        ext (ExtensionSpec): GF(q^m), m = ord_{2n}(q), carrying beta
    """
    n = int(n)
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    if np.gcd(n, base.q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={base.q}) != 1")
    m = int(n_order(base.q, 2 * n))
    if base.q**m > conf.field_size_limit:
        raise FieldTooLarge(
            f"Splitting field GF({base.q}^{m}) of x^{n}+1 exceeds field_size_limit={conf.field_size_limit}"
        )
    return _build_extension(base, n, m)


@functools.lru_cache(maxsize=None)
def _extension_tables(base, m):
    modulus = canonical_modulus(base, m)
    log.debug(f"{base}^{m}: canonical modulus {modulus}")
    return modulus, _power_table(base, modulus)


@functools.lru_cache(maxsize=None)
def _build_extension(base, n, m):
    modulus, exp = _extension_tables(base, m)
    ext = ExtensionSpec(base, n, m, modulus, exp)
    beta = ext.beta
    try:
        assert ext.power(beta, n) == ext.neg(1)
        for r in factorint(2 * n):
            assert ext.power(beta, 2 * n // r) != 1
    except AssertionError:
        raise InternalInconsistency(f"beta in {ext} is not a primitive {2 * n}-th root of unity")
    return ext


def find_primitive(field):
    """Smallest element (in index order) of multiplicative order size - 1."""
    cofactors = [field.order // r for r in sorted(factorint(field.order))]
    for rep in range(1, field.size):
        if all(field.power(rep, c) != 1 for c in cofactors):
            return field.element(rep)
    raise InternalInconsistency(f"{field} has no primitive element")


def invert(a):
    return a.field.element(a.field.inv(a.rep))


def pow(a, k):
    """a^k by square-and-multiply, k >= 0."""
    if k < 0:
        raise OutOfRange(f"Exponent must be non-negative, got {k}")
    field = a.field
    result, square = 1, a.rep
    while k:
        if k & 1:
            result = field.mul(result, square)
        square = field.mul(square, square)
        k >>= 1
    return field.element(result)


def in_base_field(a):
    """True iff an extension element lies in the base field, i.e. a^q = a."""
    if not isinstance(a.field, ExtensionSpec):
        raise FieldMismatch(f"{a.field} is not an extension field")
    return a.field.in_base(a.rep)

"""
codecore.py
===========

Negacyclic codes of length n over GF(q), i.e. ideals of GF(q)[x]/(x^n + 1).

A code is fixed by its monic generator g | x^n + 1, or equivalently by its
defining set {s odd : g(beta^s) = 0}, a union of slices T_s. This module
builds codes both ways, forms duals and hulls, and decides reversibility.
"""

import functools

from astropy import log
from sympy import factorint, isprime

from .config import conf, search_budget
from .cosetkit import CosetSystem
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    GcdViolation,
    HypothesisViolated,
    InconsistentCriteria,
    InternalInconsistency,
    NotADivisor,
    NotClosedUnderQ,
    NotMonic,
    NotOddResidues,
    NotPrime,
)
from .fieldkit import build_extension
from .polykit import Poly, factor_x_n_plus_1, is_self_reciprocal, minimal_polynomial, poly_lcm, reciprocal
from .utils import negate_residues


class NegacyclicRing(object):
    """GF(q)[x]/(x^n + 1) together with its cosets and splitting field.

    Minimal polynomials are computed on first use and kept.
    """

    def __init__(self, field, n):
        n = int(n)
        if n % field.p == 0:
            raise GcdViolation(f"gcd(n={n}, q={field.q}) != 1")
        self.field = field
        self.n = n
        self.system = CosetSystem(n, field.q)
        self.modulus = Poly.x_n_plus_1(field, n)
        self._minimal = {}

    def __repr__(self):
        return f"NegacyclicRing({self.field!r}, n={self.n})"

    @property
    def extension(self):
        return build_extension(self.field, self.n)

    def minimal_polynomial(self, s):
        leader = self.system.leader_of[s]
        if leader not in self._minimal:
            self._minimal[leader] = minimal_polynomial(self.system, self.extension, leader)
        return self._minimal[leader]

    def leaders(self, residues):
        return tuple(sorted({self.system.leader_of[s] for s in residues}))

    def generator_for(self, residues):
        """Product of the distinct minimal polynomials of beta^s, s in ``residues``."""
        g = Poly.one(self.field)
        for s in self.leaders(residues):
            g = g * self.minimal_polynomial(s)
        return g

    def roots_of(self, g):
        """Defining set of ``g`` found by evaluating at beta^s, one s per coset."""
        ext = self.extension
        out = []
        for s in self.system.X:
            if g.evaluate(ext.power(ext.beta, s), ext) == 0:
                out.extend(self.system.cosets[s])
        return tuple(sorted(out))


@functools.lru_cache(maxsize=None)
def negacyclic_ring(field, n):
    return NegacyclicRing(field, n)


class NegacyclicCode(object):
    """A negacyclic code: generator polynomial plus defining set.

    Codes compare equal when field, length and generator agree.
    """

    def __init__(self, ring, generator, defining_set):
        self.ring = ring
        self.field = ring.field
        self.n = ring.n
        self.generator = generator
        self.defining_set = tuple(sorted(defining_set))
        self.k = self.n - generator.degree
        try:
            assert len(self.defining_set) == generator.degree
        except AssertionError:
            raise InternalInconsistency(
                f"Defining set of size {len(self.defining_set)} for a generator of degree {generator.degree}"
            )

    @property
    def leaders(self):
        return self.ring.leaders(self.defining_set)

    @property
    def params(self):
        return (self.n, self.k)

    def __eq__(self, other):
        return (
            isinstance(other, NegacyclicCode)
            and self.field == other.field
            and self.n == other.n
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.field, self.n, self.generator))

    def __repr__(self):
        return f"NegacyclicCode(q={self.field.q}, n={self.n}, k={self.k}, generator={self.generator})"

    def to_dict(self):
        return {
            "q": self.field.q,
            "n": self.n,
            "k": self.k,
            "generator": list(self.generator.coeffs),
            "defining_set": list(self.defining_set),
            "reversible": is_reversible(self),
            "lcd": is_lcd(self),
            "hull_dim": hull(self).k,
        }


def from_generator(field, n, g):
    """Code generated by a monic divisor ``g`` of x^n + 1."""
    ring = negacyclic_ring(field, n)
    if g.field != field:
        raise FieldMismatch(f"Generator over {g.field}, code over {field}")
    if g.is_zero():
        raise NotADivisor("The zero polynomial does not divide x^n+1")
    if not g.is_monic():
        raise NotMonic(f"Generator {g} is not monic")
    if not (ring.modulus % g).is_zero():
        raise NotADivisor(f"{g} does not divide x^{n}+1 over {field}")
    return NegacyclicCode(ring, g, ring.roots_of(g))


def from_defining_set(field, n, residues):
    """Code whose zeros are beta^s for s in ``residues``.

    ``residues`` must be odd residues modulo 2n, closed under multiplication by q.
    """
    ring = negacyclic_ring(field, n)
    two_n = ring.system.two_n
    residues = {int(s) for s in residues}
    bad = sorted(s for s in residues if not (0 <= s < two_n and s % 2 == 1))
    if bad:
        raise NotOddResidues(f"{bad} are not odd residues mod {two_n}")
    for s in sorted(residues):
        if s * field.q % two_n not in residues:
            raise NotClosedUnderQ(f"{s}*{field.q} = {s * field.q % two_n} mod {two_n} is missing from the set")
    return NegacyclicCode(ring, ring.generator_for(residues), residues)


def dual(code):
    """Euclidean dual, generated by the reciprocal of h = (x^n + 1)/g.

    Its defining set is T minus the negatives of the code's defining set.
    """
    ring = code.ring
    h = ring.modulus // code.generator
    expected = set(ring.system.T) - negate_residues(code.defining_set, ring.system.two_n)
    perp = NegacyclicCode(ring, reciprocal(h), expected)
    try:
        assert ring.roots_of(perp.generator) == perp.defining_set
    except AssertionError:
        raise InternalInconsistency(f"Dual of {code} has the wrong zeros")
    return perp


def hull(code):
    """C ∩ C^⊥, generated by lcm(g, g^⊥)."""
    perp = dual(code)
    return NegacyclicCode(
        code.ring,
        poly_lcm(code.generator, perp.generator),
        set(code.defining_set) | set(perp.defining_set),
    )


def is_reversible(code):
    return is_self_reciprocal(code.generator)


def is_lcd(code):
    """True iff C ∩ C^⊥ = {0}.

    Three equivalent criteria are evaluated and must agree: g self-reciprocal,
    trivial hull, and a defining set closed under negation.
    """
    by_reciprocal = is_self_reciprocal(code.generator)
    by_hull = hull(code).k == 0
    zeros = set(code.defining_set)
    by_roots = zeros == negate_residues(zeros, code.ring.system.two_n)
    if not by_reciprocal == by_hull == by_roots:
        raise InconsistentCriteria(
            f"{code}: self-reciprocal={by_reciprocal}, trivial hull={by_hull}, symmetric zeros={by_roots}"
        )
    return by_reciprocal


def enumerate_reversible(field, n, budget=None):
    """All reversible negacyclic codes of length n, one per nonempty S ⊆ Y.

    The generator for S is the product over s in S of lcm(m_s, m_{2n-s}).
    Codes come out in lexicographic order of S; the zero code (S = Y) is
    included.

    Args:
        field (FieldSpec): GF(q)
        n (int): length, coprime to q
        budget (int): largest allowed 2^|Y|, default ``conf.enumeration_budget``

    Returns:
        codes (list): NegacyclicCode objects
    """
    ring = negacyclic_ring(field, n)
    system = ring.system
    budget = search_budget(conf.enumeration_budget) if budget is None else budget
    if 2 ** len(system.Y) > budget:
        raise BudgetExceeded(f"2^{len(system.Y)} reversible codes exceed enumeration budget {budget}")

    blocks = []
    for s in system.Y:
        partner = system.partner[s]
        residues = set(system.cosets[s]) | set(system.cosets[partner])
        factor = ring.minimal_polynomial(s)
        if partner != s:
            factor = factor * ring.minimal_polynomial(partner)
        blocks.append((factor, residues))

    codes = []

    def walk(start, generator, residues):
        for i in range(start, len(blocks)):
            factor, extra = blocks[i]
            g, zeros = generator * factor, residues | extra
            code = NegacyclicCode(ring, g, zeros)
            try:
                assert is_reversible(code)
            except AssertionError:
                raise InternalInconsistency(f"Enumerated code {code} is not reversible")
            codes.append(code)
            walk(i + 1, g, zeros)

    walk(0, Poly.one(field), set())
    log.debug(f"{len(codes)} reversible negacyclic codes of length {n} over {field}")
    return codes


def count_reversible_closed_form(q, m):
    """Number of reversible negacyclic codes of length n = (q^m - 1)/2.

    Valid when m is an odd prime and n is odd; the count is
    2^((q^m + (m-1) q + m) / 4m) - 1.
    """
    if q < 3 or len(factorint(q)) != 1 or q % 2 == 0:
        raise NotPrime(f"q={q} is not an odd prime power")
    if m % 2 == 0 or not isprime(m):
        raise HypothesisViolated(f"m={m} is not an odd prime")
    n = (q**m - 1) // 2
    if n % 2 == 0:
        raise HypothesisViolated(f"n=(q^m-1)/2={n} is even")
    numerator = q**m + (m - 1) * q + m
    if numerator % (4 * m):
        raise HypothesisViolated(f"(q^m+(m-1)q+m)/(4m) is not an integer for q={q}, m={m}")
    return 2 ** (numerator // (4 * m)) - 1


def only_x_plus_1_self_reciprocal(field, n):
    """True iff x + 1 is the only self-reciprocal irreducible factor of x^n + 1."""
    found = [f for _, f in factor_x_n_plus_1(n, field.q, field) if is_self_reciprocal(f)]
    return found == [Poly(field, (1, 1))]

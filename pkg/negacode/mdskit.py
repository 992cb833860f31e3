"""
mdskit.py
=========

MDS LCD negacyclic codes of even length n | (q - 1).

The zeros are beta^(1+2i) for the 2(rho+1) consecutive exponents
i = n/2 - rho - 1, ..., n/2 + rho. That set is symmetric under negation, so
the code is LCD, and its consecutive run gives d >= 2 rho + 3 = n - k + 1.
The set is a union of q-cyclotomic cosets only when q = 1 mod 2n; otherwise
no such code exists over GF(q) and the construction refuses with a witness.
"""

from collections import namedtuple
from dataclasses import dataclass

from astropy import log

from .analysis import CodeParams, certify_mds
from .codecore import from_defining_set, is_lcd
from .errors import HypothesisViolated, InternalInconsistency, NotApplicable
from .fieldkit import field_of_order
from .utils import negate_residues

Applicability = namedtuple("Applicability", ["q_closed", "witnesses"])


@dataclass(frozen=True)
class MdsSpec(object):
    """Parameters (q, n, rho) with n even, n | q - 1 and 0 <= rho < n/2 - 1."""

    q: int
    n: int
    rho: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise HypothesisViolated(f"n must be even and positive, got {self.n}")
        if (self.q - 1) % self.n:
            raise HypothesisViolated(f"n={self.n} does not divide q-1={self.q - 1}")
        if not 0 <= self.rho < self.n // 2 - 1:
            raise HypothesisViolated(f"rho={self.rho} is outside [0, n/2-1) for n={self.n}")

    @property
    def two_n(self):
        return 2 * self.n


def build_defining_set(spec):
    """S = {1 + 2i mod 2n : i = n/2 + j (0 <= j <= rho) or n/2 - k (1 <= k <= rho + 1)}."""
    half = spec.n // 2
    exponents = [half + j for j in range(spec.rho + 1)] + [half - k for k in range(1, spec.rho + 2)]
    S = sorted({(1 + 2 * i) % spec.two_n for i in exponents})
    try:
        assert len(S) == 2 * (spec.rho + 1)
        assert sorted(exponents) == list(range(half - spec.rho - 1, half + spec.rho + 1))
        assert negate_residues(S, spec.two_n) == set(S)
    except AssertionError:
        raise InternalInconsistency(f"Defining set {S} for {spec} is malformed")
    return S


def applicability_check(spec):
    """Whether S is closed under multiplication by q mod 2n.

    Returns:
        applicability (Applicability): ``q_closed`` and every a in S with q a not in S
    """
    S = build_defining_set(spec)
    members = set(S)
    witnesses = tuple(a for a in S if a * spec.q % spec.two_n not in members)
    return Applicability(not witnesses, witnesses)


def construct_mds_lcd(spec, certify=True, budget=None):
    """Build the [n, n - 2(rho+1), 2 rho + 3] LCD code of ``spec``.

    Args:
        spec (MdsSpec): construction parameters
        certify (bool): check the MDS property on the parity-check matrix
        budget (int): submatrix checks allowed, default ``conf.determinant_budget``

    Returns:
        code (NegacyclicCode), params (CodeParams)
    """
    check = applicability_check(spec)
    if not check.q_closed:
        a = check.witnesses[0]
        raise NotApplicable(
            f"S is not closed under multiplication by q={spec.q}: {a}*{spec.q} = "
            f"{a * spec.q % spec.two_n} mod {spec.two_n}"
        )
    field = field_of_order(spec.q)
    code = from_defining_set(field, spec.n, build_defining_set(spec))
    params = CodeParams(n=spec.n, k=code.k, d_lb=2 * spec.rho + 3)
    try:
        assert code.k == spec.n - 2 * (spec.rho + 1)
        assert is_lcd(code)
    except AssertionError:
        raise InternalInconsistency(f"{spec} did not give an LCD code of dimension n - 2(rho+1)")
    if certify:
        params.mds = certify_mds(code, budget)
        if params.mds:
            params.d = spec.n - code.k + 1
        else:
            log.warning(f"{spec}: [{spec.n},{code.k}] code is not MDS")
    return code, params

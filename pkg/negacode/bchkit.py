"""
bchkit.py
=========

Negacyclic BCH codes C(q, n, delta, b), whose zeros are beta^b, beta^(b+2),
..., beta^(b+2(delta-2)), the negacyclic BCH bound, and closed-form dimension
evaluators for the length families

  * ``half-plus``:  n = (q^ell + 1) / 2
  * ``projective``: n = (q^m - 1) / (2(q - 1)), three evaluators
  * ``tower``:      n = (q^(t 2^tau) - 1) / (2(q^t + 1))

Every evaluator can rebuild the code it describes and compare dimensions.
"""

from dataclasses import asdict, dataclass, field as dc_field
from typing import Optional

from astropy import log

from .analysis import min_distance_exhaustive, zero_run_bound
from .codecore import from_defining_set, from_generator, negacyclic_ring
from .config import conf
from .cosetkit import k_set, k_set_symmetry, mult_order
from .errors import (
    BudgetExceeded,
    DeltaTooSmall,
    EvenStart,
    FieldMismatch,
    FieldTooLarge,
    FormulaMismatch,
    FullCode,
    HypothesisViolated,
    InternalInconsistency,
    InvalidInput,
    ZeroCode,
)
from .fieldkit import field_of_order
from .polykit import poly_lcm, reciprocal
from .utils import ceil_div, negate_residues

#: q = 3 half-plus rows admitted beyond the general delta range:
#: delta -> smallest ell and the leaders of the generator's minimal polynomials
TERNARY_HALF_PLUS_ROWS = {
    3: {"min_ell": 3, "leaders": (1,)},
    4: {"min_ell": 3, "leaders": (1, 5)},
    6: {"min_ell": 4, "leaders": (1, 5, 7)},
}


@dataclass(frozen=True)
class BchSpec(object):
    """Parameters of C(q, n, delta, b); ``b`` is taken modulo 2n."""

    q: int
    n: int
    delta: int
    b: int = 1

    def __post_init__(self):
        if self.delta < 2:
            raise DeltaTooSmall(f"Designed distance must be at least 2, got {self.delta}")
        if self.b % 2 == 0:
            raise EvenStart(f"Starting exponent must be odd, got {self.b}")

    @property
    def start(self):
        return self.b % (2 * self.n)

    def exponents(self):
        return [(self.start + 2 * i) % (2 * self.n) for i in range(self.delta - 1)]


@dataclass
class DimFormulaResult(object):
    """Closed-form parameters of one family member, with the oracle's verdict."""

    family: str
    q: int
    n: int
    k: int
    d_lb: int
    branch: str
    params: dict
    aux: dict = dc_field(default_factory=dict)
    in_range: bool = True
    oracle_k: Optional[int] = None
    oracle: str = "skipped"
    d: Optional[int] = None

    @property
    def mismatch(self):
        return self.oracle_k is not None and self.oracle_k != self.k

    def to_dict(self):
        out = asdict(self)
        out["mismatch"] = self.mismatch
        return out


def bch_generator(spec, field=None):
    """Build C(q, n, delta, b) from the union of the slices T_{b+2i}."""
    field = field if field is not None else field_of_order(spec.q)
    if field.q != spec.q:
        raise FieldMismatch(f"{field} given for q={spec.q}")
    ring = negacyclic_ring(field, spec.n)
    residues = set()
    for s in spec.exponents():
        residues.update(ring.system.cosets[ring.system.leader_of[s]])
    return from_defining_set(field, spec.n, residues)


def reversible_bch_generator(q, n, delta, field=None):
    """C(q, n, 2 delta + 1, 1 - 2 delta), built as lcm(g, g*) with g from C(q, n, delta + 1, 1)."""
    field = field if field is not None else field_of_order(q)
    g = bch_generator(BchSpec(q, n, delta + 1, 1), field).generator
    code = from_generator(field, n, poly_lcm(g, reciprocal(g)))
    try:
        assert code == bch_generator(BchSpec(q, n, 2 * delta + 1, 1 - 2 * delta), field)
    except AssertionError:
        raise InternalInconsistency(f"lcm(g, g*) differs from C({q},{n},{2 * delta + 1},{1 - 2 * delta})")
    return code


def bch_bound(code):
    """1 + the longest run of consecutive odd residues (circular mod 2n) among the zeros."""
    if code.k == 0:
        raise ZeroCode("The zero code has no minimum distance")
    if code.k == code.n:
        raise FullCode("The full code has minimum distance 1")
    return zero_run_bound(code)


def _oracle(q, n, delta, reversible, run_oracle):
    """Dimension of C(q, n, delta, 1), or of lcm(g, g*), built constructively."""
    if not run_oracle:
        return None, "skipped"
    field = field_of_order(q)
    try:
        g = bch_generator(BchSpec(q, n, delta, 1), field).generator
        if reversible:
            g = poly_lcm(g, reciprocal(g))
        return n - g.degree, "polynomial"
    except FieldTooLarge as err:
        log.warning(f"{err}; counting the defining set instead")
    system = negacyclic_ring(field, n).system
    zeros = set(k_set(system, delta - 1))
    if reversible:
        zeros |= negate_residues(zeros, system.two_n)
    return n - len(zeros), "cosets"


def _finish(result, delta, reversible, run_oracle, strict):
    if run_oracle is None:
        run_oracle = conf.run_oracles
    if not result.in_range:
        run_oracle = True
    result.oracle_k, result.oracle = _oracle(result.q, result.n, delta, reversible, run_oracle)
    if result.mismatch:
        msg = (
            f"{result.family} {result.params}: formula k={result.k} but the constructed "
            f"generator gives k={result.oracle_k} (branch {result.branch})"
        )
        if strict:
            raise FormulaMismatch(msg)
        log.warning(msg)
    return result


def _check_delta(delta, low=1):
    if delta < low:
        raise HypothesisViolated(f"delta must be at least {low}, got {delta}")


def half_plus_dimension(q, ell, delta, run_oracle=None, strict=False):
    """Parameters of C(q, n, delta, 1) for n = (q^ell + 1)/2.

    Args:
        q (int): odd prime power
        ell (int): exponent, ell >= 2
        delta (int): designed distance, 2 <= delta <= q^floor((ell-1)/2)/2 + 2
        run_oracle (bool): rebuild the generator, default ``conf.run_oracles``
        strict (bool): raise FormulaMismatch when the rebuilt code disagrees

    Returns:
        result (DimFormulaResult): k = n - 2 ell (delta - 1 - c) where c counts
        the odd multiples of q below 2 delta - 1; d >= 2 delta - 1
    """
    field_of_order(q)
    if ell < 2:
        raise HypothesisViolated(f"ell must be at least 2, got {ell}")
    _check_delta(delta, 2)
    n = (q**ell + 1) // 2
    e = (ell - 1) // 2
    in_range = 2 * delta <= q**e + 4
    if not in_range:
        row = TERNARY_HALF_PLUS_ROWS.get(delta) if q == 3 else None
        if row is None or ell < row["min_ell"]:
            raise HypothesisViolated(f"delta={delta} exceeds q^floor((ell-1)/2)/2 + 2 for q={q}, ell={ell}")
    try:
        assert mult_order(q, 2 * n) == 2 * ell
    except AssertionError:
        raise InternalInconsistency(f"ord_(2n)(q) != 2 ell for q={q}, ell={ell}")

    r = (2 * delta - 3) % (2 * q)
    if r % 2 == 1 and r < q:
        branch = "epsilon-form"
        multiples = (2 * delta - 3) // (2 * q)
        aux = {"epsilon": r, "i": multiples}
    else:
        branch = "otherwise"
        multiples = ceil_div(2 * delta - 3, 2 * q)
        aux = {}
    aux["m"] = 2 * ell
    result = DimFormulaResult(
        family="half-plus",
        q=q,
        n=n,
        k=n - 2 * ell * (delta - 1 - multiples),
        d_lb=2 * delta - 1,
        branch=branch,
        params={"ell": ell, "delta": delta},
        aux=aux,
        in_range=in_range,
    )
    return _finish(result, delta, False, run_oracle, strict)


def _projective_length(q, m):
    field_of_order(q)
    if m < 4 or m % 2:
        raise HypothesisViolated(f"m must be even and at least 4, got {m}")
    return (q**m - 1) // (2 * (q - 1)), q ** (m // 2)


def _beyond_range_error(q, m, delta):
    """Why the projective count fails for a delta past its stated range, or None."""
    n, Q = _projective_length(q, m)
    omega = 2 * (delta - 1) * (q - 1) // (Q - 1)
    if 2 * omega >= q - 1:
        return f"delta={delta} gives omega={omega} >= (q-1)/2 for q={q}, m={m}"
    if k_set_symmetry(negacyclic_ring(field_of_order(q), n).system, delta):
        return f"g and g* share a factor at delta={delta} for q={q}, m={m}"
    return None


def projective_reversible_dimension(q, m, delta, run_oracle=None, strict=False, extended_range=True):
    """Parameters of C(q, n, 2 delta + 1, 1 - 2 delta) for n = (q^m - 1)/(2(q - 1)).

    k = n - 2m ceil((2 delta - 1)(q - 1) / 2q) and d >= 2 delta + 1 for
    1 <= delta <= (q^floor((m-1)/2) + 1)/2, where g and g* share no factor.

    With ``extended_range`` a larger delta is still evaluated, with
    ``in_range=False`` and a mandatory oracle, as long as the count stays
    valid: omega = floor(2(delta-1)(q-1)/(q^(m/2)-1)) < (q-1)/2, so every
    exponent prime to q leads a slice of size m, and K ∩ (-K) is empty, so
    g and g* are coprime. Any other delta raises HypothesisViolated.
    """
    n = _projective_length(q, m)[0]
    _check_delta(delta)
    in_range = 2 * delta <= q ** ((m - 1) // 2) + 1
    if not in_range:
        if not extended_range:
            raise HypothesisViolated(f"delta={delta} exceeds (q^floor((m-1)/2)+1)/2 for q={q}, m={m}")
        reason = _beyond_range_error(q, m, delta)
        if reason:
            raise HypothesisViolated(reason)
    ceil_term = ceil_div((2 * delta - 1) * (q - 1), 2 * q)
    result = DimFormulaResult(
        family="projective",
        q=q,
        n=n,
        k=n - 2 * m * ceil_term,
        d_lb=2 * delta + 1,
        branch="coprime",
        params={"m": m, "delta": delta},
        aux={"ceil": ceil_term},
        in_range=in_range,
    )
    return _finish(result, delta + 1, True, run_oracle, strict)


def _narrow_correction(q, m, omega):
    """Extra dimension from non-leaders and the half-size coset, by branch."""
    if omega < (q - 1) // 2:
        return "omega-small", 0, 0
    if m % 4 == 0:
        return "m=0 mod 4", (2 * omega - q + 2) * m // 2, omega - (q - 1) // 2
    if q % 4 == 1:
        if omega % 2:
            return "m=2 mod 4, q=1 mod 4, omega odd", (omega - (q - 1) // 2) * m // 2, (2 * omega - q - 1) // 4
        return "m=2 mod 4, q=1 mod 4, omega even", (omega - (q - 3) // 2) * m // 2, (2 * omega - q + 1) // 4
    if omega % 2:
        return "m=2 mod 4, q=3 mod 4, omega odd", (omega - (q - 3) // 2) * m // 2, (2 * omega - q + 1) // 4
    return "m=2 mod 4, q=3 mod 4, omega even", (omega - (q - 5) // 2) * m // 2, (2 * omega - q + 3) // 4


def projective_narrow_dimension(q, m, delta, run_oracle=None, strict=False):
    """Parameters of C(q, n, delta + 1, 1) for n = (q^m - 1)/(2(q - 1)), 1 <= delta <= (q^(m/2)+1)/2.

    With omega = floor(2(delta-1)(q-1)/(q^(m/2)-1)), k is n - m ceil((2 delta - 1)(q - 1)/2q)
    plus a correction that depends on omega, m mod 4 and q mod 4. At the
    midpoint delta = (q^(m/2)+1)/2 the value is checked against its own
    closed form.

    ``d_lb`` is delta as stated for this family; ``aux["designed_d"]`` is
    delta + 1, the BCH bound the delta consecutive zeros give.
    """
    n, Q = _projective_length(q, m)
    _check_delta(delta)
    if 2 * delta > Q + 1:
        raise HypothesisViolated(f"delta={delta} exceeds (q^(m/2)+1)/2 for q={q}, m={m}")
    omega = 2 * (delta - 1) * (q - 1) // (Q - 1)
    ceil_term = ceil_div((2 * delta - 1) * (q - 1), 2 * q)
    branch, correction, excluded = _narrow_correction(q, m, omega)
    k = n - m * ceil_term + correction

    if 2 * delta == Q + 1:
        if m % 4 == 0:
            tail = q * m // 2
        elif q % 4 == 1:
            tail = (q + 1) * m // 4
        else:
            tail = (q + 3) * m // 4
        midpoint = n - m * (q - 1) // 2 * q ** ((m - 2) // 2) + tail
        try:
            assert midpoint == k
        except AssertionError:
            raise InternalInconsistency(f"Midpoint closed form {midpoint} != branch value {k} for q={q}, m={m}")
        branch += ", midpoint"

    result = DimFormulaResult(
        family="projective-narrow",
        q=q,
        n=n,
        k=k,
        d_lb=delta,
        branch=branch,
        params={"m": m, "delta": delta},
        aux={
            "omega": omega,
            "ceil": ceil_term,
            "ell": (Q - 1) // (q - 1),
            "I_size": excluded,
            "a_tilde": (Q + 1) // 2,
            "designed_d": delta + 1,
        },
    )
    return _finish(result, delta + 1, False, run_oracle, strict)


def projective_reversible_dimension_extended(q, m, delta, run_oracle=None, strict=False):
    """Parameters of C(q, n, 2 delta + 1, 1 - 2 delta) over the whole range 1 <= delta <= (q^(m/2)+1)/2.

    deg g = 2 deg g_narrow - deg gcd(g_narrow, g_narrow*), where g_narrow
    generates C(q, n, delta + 1, 1); the common part is empty for m = 0 mod 4
    and ceil(varpi/2) symmetric slices of size m otherwise, with
    varpi = floor((2 delta - 1)(q - 1)/(q^(m/2) - 1)).
    """
    n, Q = _projective_length(q, m)
    _check_delta(delta)
    if 2 * delta > Q + 1:
        raise HypothesisViolated(f"delta={delta} exceeds (q^(m/2)+1)/2 for q={q}, m={m}")
    omega = 2 * (delta - 1) * (q - 1) // (Q - 1)
    varpi = (2 * delta - 1) * (q - 1) // (Q - 1)
    ceil_term = ceil_div((2 * delta - 1) * (q - 1), 2 * q)
    branch, correction, excluded = _narrow_correction(q, m, omega)
    overlap = ceil_div(varpi, 2) if m % 4 == 2 else 0
    k = n - 2 * m * ceil_term + 2 * correction + overlap * m

    if 2 * delta == Q + 1:
        tail = (q + 1) * m if (m % 4 == 2 and q % 4 == 3) else q * m
        midpoint = n - (q - 1) * q ** ((m - 2) // 2) * m + tail
        try:
            assert midpoint == k
        except AssertionError:
            raise InternalInconsistency(f"Midpoint closed form {midpoint} != branch value {k} for q={q}, m={m}")
        branch += ", midpoint"

    result = DimFormulaResult(
        family="projective-extended",
        q=q,
        n=n,
        k=k,
        d_lb=2 * delta + 1,
        branch=branch,
        params={"m": m, "delta": delta},
        aux={
            "omega": omega,
            "varpi": varpi,
            "ceil": ceil_term,
            "ell": (Q - 1) // (q - 1),
            "I_size": excluded,
            "overlap_slices": overlap,
        },
    )
    return _finish(result, delta + 1, True, run_oracle, strict)


def tower_reversible_dimension(q, t, tau, delta, run_oracle=None, strict=False):
    """Parameters of C(q, n, 2 delta + 1, 1 - 2 delta) for n = (q^(t 2^tau) - 1)/(2(q^t + 1)).

    Needs t >= 2, tau >= 2 and 1 <= delta <= q^(floor((t 2^(tau-1) - 1)/2) + 1)/2;
    then ord_(2n)(q) = t 2^tau and k = n - t 2^(tau+1) ceil((2 delta - 1)(q - 1)/2q).
    """
    field_of_order(q)
    if t < 2 or tau < 2:
        raise HypothesisViolated(f"Need t >= 2 and tau >= 2, got t={t}, tau={tau}")
    _check_delta(delta)
    m = t * 2**tau
    n = (q**m - 1) // (2 * (q**t + 1))
    if 2 * delta > q ** ((t * 2 ** (tau - 1) - 1) // 2 + 1):
        raise HypothesisViolated(f"delta={delta} is out of range for q={q}, t={t}, tau={tau}")
    try:
        assert mult_order(q, 2 * n) == m
    except AssertionError:
        raise InternalInconsistency(f"ord_(2n)(q) != t 2^tau for q={q}, t={t}, tau={tau}")
    ceil_term = ceil_div((2 * delta - 1) * (q - 1), 2 * q)
    result = DimFormulaResult(
        family="tower",
        q=q,
        n=n,
        k=n - t * 2 ** (tau + 1) * ceil_term,
        d_lb=2 * delta + 1,
        branch="coprime",
        params={"t": t, "tau": tau, "delta": delta},
        aux={"m": m, "ceil": ceil_term},
    )
    return _finish(result, delta + 1, True, run_oracle, strict)


def family_code(result, field=None):
    """Rebuild the code a DimFormulaResult describes."""
    delta = result.params["delta"]
    if result.family == "half-plus":
        return bch_generator(BchSpec(result.q, result.n, delta, 1), field)
    if result.family == "projective-narrow":
        return bch_generator(BchSpec(result.q, result.n, delta + 1, 1), field)
    return reversible_bch_generator(result.q, result.n, delta, field)


def exact_distance(result, budget=None):
    """Fill ``result.d`` by exhaustive search; leaves it None when over budget or too large."""
    try:
        code = family_code(result)
        if 0 < code.k < code.n:
            result.d = min_distance_exhaustive(code, budget=budget, lower_bound=result.d_lb)
    except (BudgetExceeded, FieldTooLarge) as err:
        log.debug(f"{result.family} {result.params}: no exact distance ({err})")
    return result


#: family id -> (evaluator, parameter names besides q and delta)
FAMILIES = {
    "half-plus": (half_plus_dimension, ("ell",)),
    "projective": (projective_reversible_dimension, ("m",)),
    "projective-narrow": (projective_narrow_dimension, ("m",)),
    "projective-extended": (projective_reversible_dimension_extended, ("m",)),
    "tower": (tower_reversible_dimension, ("t", "tau")),
}

#: short ids accepted in place of the family ids
FAMILY_ALIASES = {
    "sec4": "half-plus",
    "sec52": "projective",
    "sec56": "projective-narrow",
    "sec58": "projective-extended",
    "sec513": "tower",
}


def resolve_family(family):
    """Family id for ``family`` or one of its short aliases."""
    name = str(family).lower().strip()
    name = FAMILY_ALIASES.get(name, name)
    if name not in FAMILIES:
        raise ValueError(f'Invalid family specification "{family}"')
    return name


def admissible_deltas(family, q, **params):
    """The delta values a sweep visits for one family member."""
    family = resolve_family(family)
    if family == "half-plus":
        e = max(params["ell"] - 1, 0) // 2
        return range(2, (q**e + 4) // 2 + 1)
    if family == "projective":
        m = params["m"]
        top = (q ** ((m - 1) // 2) + 1) // 2
        # continue through the admitted delta past the stated range
        try:
            while _beyond_range_error(q, m, top + 1) is None:
                top += 1
        except InvalidInput:
            pass
        return range(1, top + 1)
    if family in ("projective-narrow", "projective-extended"):
        return range(1, (q ** (params["m"] // 2) + 1) // 2 + 1)
    return range(1, q ** ((params["t"] * 2 ** (params["tau"] - 1) - 1) // 2 + 1) // 2 + 1)


@dataclass
class SweepFailure(object):
    """A sweep row whose evaluation raised an input error."""

    family: str
    q: int
    params: dict
    error: str
    message: str

    def to_dict(self):
        return asdict(self)


def sweep_family(family, q, run_oracle=None, distance=False, budget=None, **params):
    """Evaluate every admissible delta of a family member.

    Args:
        family (str): family id, a key of ``FAMILIES`` or ``FAMILY_ALIASES``
        q (int): field order
        run_oracle (bool): passed to the evaluator
        distance (bool): also search for the exact distance, within ``budget``
        params: the family's length parameters (``ell``, ``m`` or ``t`` and ``tau``)

    Returns:
        rows (list): DimFormulaResult, or SweepFailure where the hypotheses fail
    """
    family = resolve_family(family)
    evaluator, names = FAMILIES[family]
    rows = []
    for delta in admissible_deltas(family, q, **params):
        kwargs = {name: params[name] for name in names}
        try:
            result = evaluator(q, delta=delta, run_oracle=run_oracle, **kwargs)
            rows.append(exact_distance(result, budget) if distance else result)
        except InvalidInput as err:
            rows.append(SweepFailure(family, q, dict(kwargs, delta=delta), type(err).__name__, str(err)))
    log.info(f"{family} q={q} {params}: {len(rows)} rows")
    return rows

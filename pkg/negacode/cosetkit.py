"""
cosetkit.py
===========

q-cyclotomic cosets modulo 2n: the odd residue set T, the slices T_s, the
leader sets X and Y, and closed-form coset-leader predicates for the code
families, each backed by a brute-force oracle.
"""

import enum
import math
from collections import namedtuple

from sympy import n_order

from .errors import (
    GcdViolation,
    InternalInconsistency,
    NotALeader,
    NotCoprime,
    NotOddResidue,
    OutOfLemmaRange,
    OutOfRange,
)
from .utils import half_plus_exponent, negate_residues, projective_exponent, tower_exponents

#: Largest supported 2n, keeps s*q products inside 64 bits
MAX_TWO_N = 2**31

LeaderVerdict = namedtuple("LeaderVerdict", ["is_leader", "size"])


class Regime(enum.Enum):
    """Which closed-form leader predicate applies to a length n."""

    GENERIC = "generic"
    HALF_PLUS = "half-plus"  # n = (q^ell + 1) / 2
    PROJECTIVE = "projective"  # n = (q^m - 1) / (2(q - 1))
    TOWER = "tower"  # n = (q^(t 2^tau) - 1) / (2(q^t + 1))


def mult_order(q, modulus):
    """Smallest m >= 1 with q^m = 1 mod ``modulus``."""
    if math.gcd(q, modulus) != 1:
        raise NotCoprime(f"gcd({q}, {modulus}) != 1")
    if modulus == 1:
        return 1
    return int(n_order(q, modulus))


class CosetSystem(object):
    """All q-cyclotomic cosets modulo 2n.

    Parameters
    ----------
    n: int
        Code length, coprime to q.
    q: int
        Field size.

    Attributes
    ----------
    m: int
        ord_{2n}(q), the degree of the splitting field of x^n + 1.
    cosets: dict
        Leader -> sorted tuple of members, for every coset (odd and even).
    leader_of: list
        ``leader_of[s]`` is the leader of the coset containing s.
    T: tuple
        Odd residues modulo 2n.
    X: tuple
        Leaders of the odd cosets, ascending.
    Y: tuple
        The smaller leader of each pair {T_s, T_{2n-s}}, ascending.
    """

    def __init__(self, n, q):
        n, q = int(n), int(q)
        if n < 1:
            raise OutOfRange(f"n must be positive, got {n}")
        if math.gcd(n, q) != 1:
            raise GcdViolation(f"gcd(n={n}, q={q}) != 1")
        if 2 * n > MAX_TWO_N:
            raise OutOfRange(f"2n = {2 * n} exceeds {MAX_TWO_N}")
        self.n = n
        self.q = q
        self.two_n = 2 * n
        self.m = mult_order(q, self.two_n)

        leader_of = [-1] * self.two_n
        cosets = {}
        for s in range(self.two_n):
            if leader_of[s] >= 0:
                continue
            members = [s]
            nxt = s * q % self.two_n
            while nxt != s:
                members.append(nxt)
                nxt = nxt * q % self.two_n
            for a in members:
                leader_of[a] = s
            cosets[s] = tuple(sorted(members))
        self.leader_of = leader_of
        self.cosets = cosets

        self.T = tuple(range(1, self.two_n, 2))
        self.X = tuple(s for s in cosets if s % 2 == 1)
        self.partner = {s: leader_of[(self.two_n - s) % self.two_n] for s in self.X}
        self.Y = tuple(s for s in self.X if s <= self.partner[s])

        try:
            for s, members in cosets.items():
                # each coset is all-odd or all-even
                assert len({a % 2 for a in members}) == 1
            assert sum(len(cosets[s]) for s in self.X) == len(self.T) == n
            for s in self.X:
                assert self.m % len(cosets[s]) == 0
        except AssertionError:
            raise InternalInconsistency(f"Coset laws violated for n={n}, q={q}")

    def __repr__(self):
        return f"CosetSystem(n={self.n}, q={self.q}, m={self.m})"

    def to_dict(self):
        return {
            "n": self.n,
            "q": self.q,
            "m": self.m,
            "cosets": {str(s): list(members) for s, members in self.cosets.items()},
            "X": list(self.X),
            "Y": list(self.Y),
        }


def _check_residue(system, s):
    if not 0 <= s < system.two_n:
        raise OutOfRange(f"{s} is not a residue mod {system.two_n}")


def _check_odd(system, s):
    if not (0 <= s < system.two_n and s % 2 == 1):
        raise NotOddResidue(f"{s} is not an odd residue mod {system.two_n}")


def cyclotomic_coset(system, s):
    _check_residue(system, s)
    return system.cosets[system.leader_of[s]]


def t_slice(system, s):
    """T_s = T ∩ C_s: the coset itself for odd s, empty for even s."""
    _check_residue(system, s)
    coset = system.cosets[system.leader_of[s]]
    if s % 2 == 0:
        return ()
    return coset


def x_partition(system):
    return system.X


def y_partition(system):
    return system.Y


def is_symmetric(system, s):
    """True iff -s lies in T_s, i.e. m_s is self-reciprocal."""
    if s not in system.partner:
        raise NotALeader(f"{s} is not an odd coset leader mod {system.two_n}")
    return system.partner[s] == s


def minus_one_is_power_of_q(system):
    power = 1
    for _ in range(system.m):
        if power == system.two_n - 1:
            return True
        power = power * system.q % system.two_n
    return False


def gcd_power_formula(b, n, m):
    """gcd(b^n + 1, b^m - 1), by the closed form in gcd(n, m).

    Args:
        b (int): base, b > 1
        n (int): exponent of the ``+ 1`` term, n >= 1
        m (int): exponent of the ``- 1`` term, m >= 1

    Returns:
        g (int): b^gcd(n,m) + 1 if m / gcd(n,m) is even, else 1 (b even) or 2 (b odd)
    """
    if b < 2 or n < 1 or m < 1:
        raise OutOfRange(f"Need b > 1 and n, m >= 1, got b={b}, n={n}, m={m}")
    g = math.gcd(n, m)
    if (m // g) % 2 == 0:
        value = b**g + 1
    else:
        value = 1 if b % 2 == 0 else 2
    try:
        assert value == math.gcd(b**n + 1, b**m - 1)
    except AssertionError:
        raise InternalInconsistency(f"gcd({b}^{n}+1, {b}^{m}-1) disagrees with its closed form {value}")
    return value


def coset_leader_oracle(system, s):
    """True iff s is the smallest element of its coset, by direct enumeration."""
    _check_odd(system, s)
    a = s * system.q % system.two_n
    while a != s:
        if a < s:
            return False
        a = a * system.q % system.two_n
    return True


def coset_size_oracle(system, s):
    _check_odd(system, s)
    size, a = 1, s * system.q % system.two_n
    while a != s:
        size, a = size + 1, a * system.q % system.two_n
    return size


def projective_exceptions(q, m):
    """Values in [q^((m-2)/2), q^(m/2)] prime to q that are not coset leaders.

    They are 1 + i*ell with ell = (q^(m/2) - 1)/(q - 1), for i in a range that
    depends on m mod 4 and q mod 4. Empty for q = 3.
    """
    ell = (q ** (m // 2) - 1) // (q - 1)
    h = (q + 1) // 2
    if m % 4 == 0:
        index = range(h, h + (q - 5) // 2 + 1)
    elif q % 4 == 1:
        index = range(h + 1, h + (q - 7) // 2 + 1, 2)
    else:
        index = range(h, h + (q - 7) // 2 + 1, 2)
    return tuple(1 + i * ell for i in index)


def projective_special_values(q, m):
    """Both readings of the coset whose slice has size m/2.

    Returns:
        values (dict): ``a_tilde`` = (q^(m/2) + 1)/2 (inside the lemma range,
        used by the closed form) and ``as_printed`` = (q^m + 1)/2
    """
    return {"a_tilde": (q ** (m // 2) + 1) // 2, "as_printed": (q**m + 1) // 2}


def detect_regime(system):
    """Family parameters of the system's length, most specific first."""
    q, n = system.q, system.n
    params = tower_exponents(q, n)
    if params is not None:
        return Regime.TOWER, {"t": params[0], "tau": params[1]}
    m = projective_exponent(q, n)
    if m is not None and m % 2 == 0 and m >= 4:
        return Regime.PROJECTIVE, {"m": m}
    ell = half_plus_exponent(q, n)
    if ell is not None and ell >= 2:
        return Regime.HALF_PLUS, {"ell": ell}
    return Regime.GENERIC, {}


def coset_leader_closed_form(system, s, regime=None):
    """Leader verdict and slice size of an odd s from the family lemmas.

    Args:
        system (CosetSystem): cosets modulo 2n
        s (int): odd residue within the regime's range
        regime (Regime): which lemma to apply; detected from n when None

    Returns:
        verdict (LeaderVerdict): ``(is_leader, size)`` where size is |T_s|

    Raises:
        OutOfLemmaRange: when n does not belong to the regime's family or s
        lies outside the range the lemma covers
    """
    _check_odd(system, s)
    q, n = system.q, system.n
    if regime is None:
        regime = detect_regime(system)[0]
    regime = Regime(regime)

    if regime is Regime.GENERIC:
        m = system.m
        half = q ** (m // 2)
        if not (half < 2 * n and 2 * n <= q**m - 1):
            raise OutOfLemmaRange(f"n={n} is outside (q^floor(m/2)/2, (q^m-1)/2] for q={q}, m={m}")
        if s * (q**m - 1) > 2 * n * half:
            raise OutOfLemmaRange(f"s={s} exceeds 2n q^floor(m/2)/(q^m-1)")
        return LeaderVerdict(s % q != 0, m)

    if regime is Regime.HALF_PLUS:
        ell = half_plus_exponent(q, n)
        if ell is None or ell < 2:
            raise OutOfLemmaRange(f"n={n} is not (q^ell+1)/2 with ell >= 2 for q={q}")
        if s > q ** ((ell - 1) // 2) + 1:
            raise OutOfLemmaRange(f"s={s} exceeds q^floor((ell-1)/2)+1")
        return LeaderVerdict(s % q != 0, 2 * ell)

    if regime is Regime.PROJECTIVE:
        m = projective_exponent(q, n)
        if m is None or m % 2 or m < 4:
            raise OutOfLemmaRange(f"n={n} is not (q^m-1)/(2(q-1)) with m even >= 4 for q={q}")
        if not (q ** ((m - 2) // 2) <= s <= q ** (m // 2)) or s % q == 0:
            raise OutOfLemmaRange(f"a={s} is outside [q^((m-2)/2), q^(m/2)] or divisible by q")
        size = m // 2 if s == projective_special_values(q, m)["a_tilde"] else m
        return LeaderVerdict(s not in projective_exceptions(q, m), size)

    params = tower_exponents(q, n)
    if params is None:
        raise OutOfLemmaRange(f"n={n} is not (q^(t 2^tau)-1)/(2(q^t+1)) for q={q}")
    t, tau = params
    if s > q ** ((t * 2 ** (tau - 1) - 1) // 2) + 1:
        raise OutOfLemmaRange(f"s={s} exceeds q^floor((t 2^(tau-1)-1)/2)+1")
    try:
        assert system.m == t * 2**tau
    except AssertionError:
        raise InternalInconsistency(f"ord_(2n)(q) = {system.m} != t 2^tau = {t * 2**tau}")
    return LeaderVerdict(s % q != 0, t * 2**tau)


def k_set(system, delta):
    """K = T_1 ∪ T_3 ∪ ... ∪ T_{2 delta - 1}, as a sorted tuple."""
    if delta < 1:
        raise OutOfRange(f"delta must be at least 1, got {delta}")
    out = set()
    for i in range(delta):
        out.update(system.cosets[system.leader_of[(1 + 2 * i) % system.two_n]])
    return tuple(sorted(out))


def k_set_symmetry(system, delta):
    """K ∩ (-K) for the K of :func:`k_set`."""
    k = set(k_set(system, delta))
    return tuple(sorted(k & negate_residues(k, system.two_n)))


def midpoint_overlap(system, m):
    """Union of T_{s ell}, 1 <= s <= q-1 with s*ell odd, ell = (q^(m/2)-1)/(q-1).

    For projective lengths this is K ∩ (-K) at delta = (q^(m/2)+1)/2.
    """
    q = system.q
    ell = (q ** (m // 2) - 1) // (q - 1)
    out = set()
    for s in range(1, q):
        if (s * ell) % 2 == 1:
            out.update(t_slice(system, (s * ell) % system.two_n))
    return tuple(sorted(out))

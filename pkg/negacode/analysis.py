"""
analysis.py
===========

Matrix ground truth for negacyclic codes: generator and parity-check
matrices, exact minimum distance by exhaustive search, MDS certification and
hull dimension by rank arithmetic.

Exhaustive distance searches either enumerate codewords (q^k of them, in
vectorised blocks) or look for the smallest set of linearly dependent columns
of the parity-check matrix, whichever a fixed cost model says is cheaper.
"""

import itertools
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np
from astropy import log

from .config import conf, search_budget
from .errors import BudgetExceeded, FieldMismatch, FullCode, InternalInconsistency, OutOfRange, ZeroCode
from .utils import longest_circular_run

#: Largest codeword block held in memory during primal enumeration
BLOCK_WORDS = 2**16

#: Relative cost of one column-dependency test against one enumerated codeword
COLUMN_TEST_COST = 16


def _rref(field, a):
    """Reduced row echelon form over the field; returns (array, pivot columns)."""
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = field.vmul(a[r], field.inv(int(a[r, c])))
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = field.vsub(a[others], field.vmul(a[others, c][:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def _rank(field, a):
    if a.size == 0:
        return 0
    return len(_rref(field, a)[1])


def _nullspace(field, a):
    """Rows spanning {v : a v^T = 0}."""
    reduced, pivots = _rref(field, a)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(pivots):
            basis[i, p] = field.neg(int(reduced[row, f]))
    return basis


def _matmul(field, a, b):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = field.vadd(out, field.vmul(a[:, t : t + 1], b[t : t + 1, :]))
    return out


class Matrix(object):
    """Dense matrix over a tabulated field.

    Parameters
    ----------
    field: GaloisField
        Field holding the entries.
    entries: array_like
        2-D array of element indices.
    """

    def __init__(self, field, entries):
        a = np.array(entries, dtype=np.int64, ndmin=2)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise OutOfRange(f"Matrix needs positive dimensions, got shape {a.shape}")
        if a.min() < 0 or a.max() >= field.size:
            raise OutOfRange(f"Matrix entries must lie in [0, {field.size})")
        self.field = field
        self.array = a

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    @property
    def shape(self):
        return self.array.shape

    @property
    def entries(self):
        return self.array.ravel().tolist()

    @property
    def T(self):
        return Matrix(self.field, self.array.T)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and np.array_equal(self.array, other.array)

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def __matmul__(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"Matrices over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise OutOfRange(f"Cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.field, _matmul(self.field, self.array, other.array))

    def rank(self):
        return _rank(self.field, self.array)

    def rref(self):
        reduced, pivots = _rref(self.field, self.array)
        return Matrix(self.field, reduced), pivots

    def nullspace(self):
        basis = _nullspace(self.field, self.array)
        if basis.shape[0] == 0:
            raise FullCode("Matrix has full column rank; its null space is trivial")
        return Matrix(self.field, basis)

    def vstack(self, other):
        return Matrix(self.field, np.vstack([self.array, other.array]))

    def columns(self, index):
        return self.array[:, list(index)]


@dataclass
class CodeParams(object):
    """[n, k, d] with the proved lower bound and, when known, the exact distance."""

    n: int
    k: int
    d_lb: int
    d: Optional[int] = None
    mds: Optional[bool] = None

    def to_dict(self):
        return asdict(self)


def generator_matrix(code):
    """k x n matrix whose row i holds the coefficients of x^i g(x)."""
    if code.k == 0:
        raise ZeroCode("The zero code has no generator matrix")
    g = code.generator.coeffs
    G = np.zeros((code.k, code.n), dtype=np.int64)
    for i in range(code.k):
        G[i, i : i + len(g)] = g
    return Matrix(code.field, G)


def parity_check_matrix(code):
    """(n - k) x n matrix spanning the null space of the generator matrix."""
    if code.k == code.n:
        raise FullCode("The full code has no parity-check matrix")
    if code.k == 0:
        return Matrix(code.field, np.eye(code.n, dtype=np.int64))
    G = generator_matrix(code)
    H = G.nullspace()
    try:
        assert H.rows == code.n - code.k
        assert not np.any((G @ H.T).array)
    except AssertionError:
        raise InternalInconsistency(f"Parity-check matrix of {code} is not orthogonal to G")
    return H


def _span(field, rows):
    """Every linear combination of ``rows``; index 0 is the zero word."""
    words = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows:
        multiples = np.stack([field.vmul(c, row) for c in range(field.size)])
        words = field.vadd(multiples[:, None, :], words[None, :, :]).reshape(-1, rows.shape[1])
    return words


def _primal_min_weight(field, G, threads, floor):
    k, n = G.shape
    r = 1
    while r < k and field.size ** (r + 1) <= BLOCK_WORDS:
        r += 1
    block = _span(field, G[k - r :])
    offsets = _span(field, G[: k - r])
    best = [n]
    lock = threading.Lock()

    def scan(indices):
        for i in indices:
            if best[0] <= floor:
                return
            weights = np.count_nonzero(field.vadd(block, offsets[i]), axis=1)
            if i == 0:
                weights = weights[1:]
            if weights.size:
                with lock:
                    best[0] = min(best[0], int(weights.min()))

    chunks = np.array_split(np.arange(offsets.shape[0]), max(1, min(threads, offsets.shape[0])))
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        list(pool.map(scan, chunks))
    return best[0]


def zero_run_bound(code):
    """1 + the longest run of consecutive odd residues (circular mod 2n) among the zeros."""
    flags = np.zeros(code.n, dtype=bool)
    flags[(np.asarray(code.defining_set, dtype=np.int64) - 1) // 2] = True
    return longest_circular_run(flags) + 1


def _dual_min_weight(field, H, budget):
    r, n = H.shape
    checks = 0
    for w in range(1, r + 2):
        for cols in itertools.combinations(range(n), w):
            checks += 1
            if checks > budget:
                raise BudgetExceeded(f"Column search over {n} columns exceeded budget {budget}")
            if _rank(field, H[:, list(cols)]) < w:
                return w
    raise InternalInconsistency(f"No dependent set of {r + 1} columns among {n}")


def min_distance_exhaustive(code, budget=None, threads=None, lower_bound=None):
    """Exact minimum distance.

    Args:
        code (NegacyclicCode): code with k > 0
        budget (int): largest number of codewords or column tests, default ``conf.distance_budget``
        threads (int): worker threads for codeword enumeration, default ``conf.threads``
        lower_bound (int): claimed lower bound; enumeration stops once the BCH
            bound of the zeros is met, and a smaller distance raises
            InternalInconsistency

    Returns:
        d (int): minimum Hamming weight of a nonzero codeword
    """
    if code.k == 0:
        raise ZeroCode("The zero code has no nonzero codewords")
    if code.k == code.n:
        return 1
    budget = search_budget(conf.distance_budget) if budget is None else budget
    threads = conf.threads if threads is None else threads
    q, n, k = code.field.q, code.n, code.k
    primal = q**k
    dual = sum(math.comb(n, w) for w in range(1, n - k + 2))
    options = []
    if primal <= budget:
        options.append((primal, "primal"))
    if dual <= budget:
        options.append((dual * COLUMN_TEST_COST, "dual"))
    if not options:
        raise BudgetExceeded(f"[{n},{k}] over GF({q}): q^k={primal} and {dual} column tests both exceed budget {budget}")
    side = min(options)[1]
    log.debug(f"[{n},{k}] over GF({q}): {side} search (q^k={primal}, column tests <= {dual})")
    if side == "primal":
        floor = 1 if lower_bound is None else min(lower_bound, zero_run_bound(code))
        d = _primal_min_weight(code.field, generator_matrix(code).array, threads, floor)
    else:
        d = _dual_min_weight(code.field, parity_check_matrix(code).array, budget)
    if lower_bound is not None and d < lower_bound:
        raise InternalInconsistency(f"[{n},{k}] over GF({q}) has a codeword of weight {d} below the bound {lower_bound}")
    return d


def certify_mds(code, budget=None):
    """True iff every n - k columns of the parity-check matrix are independent (d = n - k + 1)."""
    if code.k == 0:
        raise ZeroCode("MDS certification needs 0 < k < n")
    if code.k == code.n:
        raise FullCode("MDS certification needs 0 < k < n")
    budget = search_budget(conf.determinant_budget) if budget is None else budget
    r = code.n - code.k
    total = math.comb(code.n, r)
    if total > budget:
        raise BudgetExceeded(f"{total} submatrices of size {r} exceed budget {budget}")
    H = parity_check_matrix(code)
    for cols in itertools.combinations(range(code.n), r):
        if _rank(code.field, H.columns(cols)) < r:
            return False
    return True


def hull_dim_matrix(code):
    """dim(C ∩ C^⊥) = k + (n - k) - rank of the generator and parity-check rows stacked."""
    if code.k == 0:
        raise ZeroCode("Hull dimension by matrices needs 0 < k < n")
    if code.k == code.n:
        raise FullCode("Hull dimension by matrices needs 0 < k < n")
    stacked = generator_matrix(code).vstack(parity_check_matrix(code))
    return code.n - stacked.rank()

"""
test_analysis.py
================

Tests for generator and parity-check matrices, exhaustive distances and MDS
certification.
"""

import numpy as np
import pytest

from negacode.analysis import (
    CodeParams,
    Matrix,
    certify_mds,
    generator_matrix,
    hull_dim_matrix,
    min_distance_exhaustive,
    parity_check_matrix,
    zero_run_bound,
)
from negacode.bchkit import BchSpec, bch_bound, bch_generator, reversible_bch_generator
from negacode.codecore import dual, from_defining_set, from_generator
from negacode.config import conf
from negacode.errors import BudgetExceeded, FieldMismatch, FullCode, InternalInconsistency, OutOfRange, ZeroCode
from negacode.fieldkit import field_of_order
from negacode.polykit import Poly

GF3 = field_of_order(3)


def test_generator_matrix():
    code = from_generator(GF3, 7, Poly(GF3, (1, 1)))
    G = generator_matrix(code)
    assert G.shape == (6, 7)
    assert G.array[0].tolist() == [1, 1, 0, 0, 0, 0, 0]
    assert G.array[5].tolist() == [0, 0, 0, 0, 0, 1, 1]
    assert G.rank() == 6


def test_parity_check_spans_dual():
    code = bch_generator(BchSpec(3, 14, 3))
    G, H = generator_matrix(code), parity_check_matrix(code)
    assert H.shape == (6, 14)
    assert not np.any((G @ H.T).array)
    # rows of the dual code's generator matrix lie in the row space of H
    D = generator_matrix(dual(code))
    assert H.vstack(D).rank() == H.rank() == 6

    zero = from_defining_set(GF3, 7, range(1, 14, 2))
    assert parity_check_matrix(zero).rank() == 7


def test_minimum_distances():
    code = bch_generator(BchSpec(3, 14, 3))
    assert min_distance_exhaustive(code) == 5 == bch_bound(code)
    assert min_distance_exhaustive(code, lower_bound=5) == 5

    m1 = from_defining_set(GF3, 7, [1, 3, 5, 9, 11, 13])
    assert min_distance_exhaustive(m1) == 7

    full = from_generator(GF3, 7, Poly.one(GF3))
    assert min_distance_exhaustive(full) == 1

    assert min_distance_exhaustive(bch_generator(BchSpec(3, 14, 4))) >= 7
    assert min_distance_exhaustive(reversible_bch_generator(3, 20, 2)) >= 5


def test_distance_search_sides_agree():
    code = from_generator(GF3, 7, Poly(GF3, (1, 1)))
    # q^k = 729 codewords or the dual search
    assert min_distance_exhaustive(code) == 2
    assert min_distance_exhaustive(code, budget=100) == 2
    code = bch_generator(BchSpec(3, 14, 3))
    assert min_distance_exhaustive(code, threads=4) == min_distance_exhaustive(code, threads=1) == 5
    with conf.set_temp("threads", 3):
        assert min_distance_exhaustive(code) == 5


def test_claimed_lower_bound_is_checked():
    code = bch_generator(BchSpec(3, 14, 3))
    assert zero_run_bound(code) == bch_bound(code) == 5
    assert min_distance_exhaustive(code, lower_bound=2) == 5
    # the search may only stop early at the BCH bound, so an inflated claim is caught
    with pytest.raises(InternalInconsistency):
        min_distance_exhaustive(code, lower_bound=6)
    with pytest.raises(InternalInconsistency):
        min_distance_exhaustive(from_generator(GF3, 7, Poly(GF3, (1, 1))), lower_bound=3)


def test_distance_errors():
    code = bch_generator(BchSpec(3, 14, 3))
    with pytest.raises(BudgetExceeded):
        min_distance_exhaustive(code, budget=10)
    with pytest.raises(ZeroCode):
        min_distance_exhaustive(from_defining_set(GF3, 7, range(1, 14, 2)))


def test_certify_mds():
    code = bch_generator(BchSpec(3, 14, 3))
    assert not certify_mds(code)
    # x + 1 generates the [7, 6, 2] parity code, which is MDS
    assert certify_mds(from_generator(GF3, 7, Poly(GF3, (1, 1))))
    with pytest.raises(BudgetExceeded):
        certify_mds(code, budget=100)
    with pytest.raises(FullCode):
        certify_mds(from_generator(GF3, 7, Poly.one(GF3)))


def test_hull_dim_matrix():
    system_code = from_defining_set(GF3, 13, [1, 3, 9])
    assert hull_dim_matrix(system_code) == 3
    assert hull_dim_matrix(bch_generator(BchSpec(3, 14, 3))) == 0
    with pytest.raises(ZeroCode):
        hull_dim_matrix(from_defining_set(GF3, 7, range(1, 14, 2)))


def test_matrix():
    F = field_of_order(5)
    A = Matrix(F, [[1, 2], [3, 4]])
    assert A.rank() == 2
    assert (A @ Matrix(F, [[1, 0], [0, 1]])) == A
    assert A.T.entries == [1, 3, 2, 4]
    reduced, pivots = Matrix(F, [[1, 2, 3], [2, 4, 2]]).rref()
    assert pivots == [0, 2]
    assert reduced.array[0, 1] == 2
    N = Matrix(F, [[1, 2, 3], [2, 4, 2]]).nullspace()
    assert N.shape == (1, 3)
    assert not np.any((Matrix(F, [[1, 2, 3], [2, 4, 2]]) @ N.T).array)
    with pytest.raises(FullCode):
        A.nullspace()
    with pytest.raises(OutOfRange):
        Matrix(F, [[5]])
    with pytest.raises(OutOfRange):
        A @ Matrix(F, [[1, 2, 3]])
    with pytest.raises(FieldMismatch):
        A @ Matrix(GF3, [[1], [1]])


def test_code_params():
    params = CodeParams(14, 8, 5)
    assert params.to_dict() == {"n": 14, "k": 8, "d_lb": 5, "d": None, "mds": None}


if __name__ == "__main__":
    test_generator_matrix()
    test_parity_check_spans_dual()
    test_minimum_distances()
    test_distance_search_sides_agree()
    test_claimed_lower_bound_is_checked()
    test_distance_errors()
    test_certify_mds()
    test_hull_dim_matrix()
    test_matrix()
    test_code_params()

"""
test_bchkit.py
==============

Tests for negacyclic BCH codes and the closed-form dimension evaluators.
"""

import pytest

from negacode.bchkit import (
    BchSpec,
    SweepFailure,
    admissible_deltas,
    bch_bound,
    bch_generator,
    exact_distance,
    family_code,
    half_plus_dimension,
    projective_narrow_dimension,
    projective_reversible_dimension,
    projective_reversible_dimension_extended,
    reversible_bch_generator,
    sweep_family,
    tower_reversible_dimension,
)
from negacode.codecore import from_defining_set, from_generator, is_reversible
from negacode.config import conf
from negacode.errors import (
    DeltaTooSmall,
    EvenStart,
    FieldMismatch,
    FormulaMismatch,
    FullCode,
    HypothesisViolated,
    NotPrime,
    ZeroCode,
)
from negacode.fieldkit import field_of_order
from negacode.polykit import Poly
from negacode.reference_data import TERNARY_HALF_PLUS_ROWS

GF3 = field_of_order(3)


def test_bch_spec():
    spec = BchSpec(3, 7, 3, -1)
    assert spec.start == 13
    assert spec.exponents() == [13, 1]
    assert BchSpec(3, 14, 4).exponents() == [1, 3, 5]
    with pytest.raises(DeltaTooSmall):
        BchSpec(3, 7, 1)
    with pytest.raises(EvenStart):
        BchSpec(3, 7, 3, 2)


def test_bch_generator():
    code = bch_generator(BchSpec(3, 14, 3))
    assert code.params == (14, 8)
    assert code.defining_set == (1, 3, 9, 19, 25, 27)
    assert bch_generator(BchSpec(3, 14, 2)) == code
    assert bch_generator(BchSpec(3, 14, 4)).k == 2
    with pytest.raises(FieldMismatch):
        bch_generator(BchSpec(3, 14, 3), field_of_order(5))


def test_reversible_bch_generator():
    code = reversible_bch_generator(3, 20, 2)
    assert code.k == 12
    assert is_reversible(code)
    assert code == bch_generator(BchSpec(3, 20, 5, -3))


def test_bch_bound():
    assert bch_bound(bch_generator(BchSpec(3, 14, 3))) == 5
    assert bch_bound(from_defining_set(GF3, 7, [1, 3, 5, 9, 11, 13])) == 7
    assert bch_bound(reversible_bch_generator(3, 20, 2)) >= 5
    with pytest.raises(FullCode):
        bch_bound(from_generator(GF3, 7, Poly.one(GF3)))
    with pytest.raises(ZeroCode):
        bch_bound(from_defining_set(GF3, 7, range(1, 14, 2)))


def test_half_plus_dimension():
    cases = [
        (2, 2, 1, True),
        (3, 2, 8, True),
        (3, 3, 8, True),
        (3, 4, 2, False),
        (4, 3, 33, True),
        (4, 4, 25, False),
        (4, 6, 17, False),
        (5, 3, 112, True),
        (5, 6, 92, True),
    ]
    for ell, delta, k, in_range in cases:
        result = half_plus_dimension(3, ell, delta, run_oracle=True, strict=True)
        assert result.k == k
        assert result.oracle_k == k
        assert result.oracle == "polynomial"
        assert result.in_range == in_range
        assert result.d_lb == 2 * delta - 1
        assert result.aux["m"] == 2 * ell

    result = half_plus_dimension(3, 5, 5, run_oracle=False)
    assert result.k == 92
    assert result.branch == "epsilon-form"
    assert result.aux["epsilon"] == 1 and result.aux["i"] == 1
    assert result.oracle == "skipped" and result.oracle_k is None
    assert half_plus_dimension(3, 3, 3, run_oracle=False).branch == "otherwise"


def test_out_of_range_rows_always_check():
    with conf.set_temp("run_oracles", False):
        assert half_plus_dimension(3, 3, 3).oracle == "skipped"
        assert half_plus_dimension(3, 3, 4).oracle == "polynomial"


def test_ternary_half_plus_leaders():
    for delta, row in TERNARY_HALF_PLUS_ROWS.items():
        n = (3 ** row["min_ell"] + 1) // 2
        assert bch_generator(BchSpec(3, n, delta)).leaders == row["leaders"]


def test_half_plus_errors():
    with pytest.raises(HypothesisViolated):
        half_plus_dimension(3, 1, 2)
    with pytest.raises(HypothesisViolated):
        half_plus_dimension(3, 3, 1)
    with pytest.raises(HypothesisViolated):
        half_plus_dimension(3, 3, 5)
    # delta = 6 is only admitted from ell = 4 on
    with pytest.raises(HypothesisViolated):
        half_plus_dimension(3, 3, 6)
    with pytest.raises(HypothesisViolated):
        half_plus_dimension(5, 3, 5)
    with pytest.raises(NotPrime):
        half_plus_dimension(6, 3, 2)


def test_projective_reversible_dimension():
    result = projective_reversible_dimension(3, 4, 2, run_oracle=True, strict=True)
    assert (result.n, result.k, result.d_lb) == (20, 12, 5)
    assert result.in_range

    result = projective_reversible_dimension(5, 4, 3, run_oracle=True, strict=True)
    assert (result.n, result.k, result.d_lb) == (78, 62, 7)

    result = projective_reversible_dimension(5, 4, 4, run_oracle=True, strict=True)
    assert result.k == 54 and not result.in_range

    assert projective_reversible_dimension(5, 4, 1, run_oracle=True, strict=True).k == 70

    with pytest.raises(HypothesisViolated):
        projective_reversible_dimension(5, 4, 14)
    with pytest.raises(HypothesisViolated):
        projective_reversible_dimension(5, 4, 4, extended_range=False)
    with pytest.raises(HypothesisViolated):
        projective_reversible_dimension(3, 3, 1)
    with pytest.raises(HypothesisViolated):
        projective_reversible_dimension(3, 4, 0)


def test_projective_narrow_dimension():
    for delta in (1, 2):
        result = projective_narrow_dimension(3, 4, delta, run_oracle=True, strict=True)
        assert result.k == 16
        assert result.d_lb == delta
        assert result.aux["designed_d"] == delta + 1
        assert result.branch == "omega-small"
    assert projective_narrow_dimension(3, 4, 1).aux["a_tilde"] == 5

    # the code has delta consecutive zeros, so its BCH bound reaches designed_d
    result = projective_narrow_dimension(3, 4, 3, run_oracle=False)
    assert bch_bound(family_code(result)) >= result.aux["designed_d"]


@pytest.mark.parametrize(
    "q, m, deltas",
    [(5, 4, [4, 5, 6]), (3, 6, [6]), (7, 4, [5, 6, 7, 8, 9, 10, 11, 12])],
)
def test_projective_beyond_stated_range(q, m, deltas):
    for delta in deltas:
        result = projective_reversible_dimension(q, m, delta, strict=True)
        assert not result.in_range
        assert result.oracle == "polynomial"
        assert result.k == result.oracle_k


def test_projective_beyond_stated_range_values():
    assert [projective_reversible_dimension(5, 4, d).k for d in (4, 5, 6)] == [54, 46, 38]
    assert projective_reversible_dimension(3, 6, 6).k == 134
    assert [projective_reversible_dimension(7, 4, d).k for d in range(5, 13)] == [168, 160, 152, 144, 136, 128, 128, 120]


@pytest.mark.parametrize("q, m, delta", [(3, 4, 3), (5, 4, 7), (3, 6, 7), (7, 4, 13)])
def test_projective_beyond_stated_range_rejected(q, m, delta):
    # omega reaches (q-1)/2, or g and g* share a cyclotomic factor
    with pytest.raises(HypothesisViolated):
        projective_reversible_dimension(q, m, delta, run_oracle=True)


#: (q, m, delta) where the projective closed forms disagree with the constructed generator
PROJECTIVE_MISMATCHES = {(3, 4, 5), (5, 4, 13), (7, 4, 25)} | {(3, 6, delta) for delta in range(8, 15)}


@pytest.mark.parametrize("family", ["projective-narrow", "projective-extended"])
def test_projective_sweep_against_constructed_codes(family):
    mismatched = set()
    for q, m in [(3, 4), (5, 4), (3, 6), (7, 4)]:
        rows = sweep_family(family, q, run_oracle=True, m=m)
        assert [row.params["delta"] for row in rows] == list(range(1, (q ** (m // 2) + 1) // 2 + 1))
        for row in rows:
            assert row.oracle == "polynomial"
            if row.mismatch:
                mismatched.add((q, m, row.params["delta"]))
                if 2 * row.params["delta"] == q ** (m // 2) + 1:
                    assert row.branch.endswith("midpoint")
                else:
                    assert row.branch.startswith("m=2 mod 4, q=3 mod 4")
    assert mismatched == PROJECTIVE_MISMATCHES


def test_projective_sweep_values():
    narrow = sweep_family("projective-narrow", 5, run_oracle=True, m=4)
    assert [row.oracle_k for row in narrow] == [74, 70, 70, 66, 62, 58, 56, 56, 52, 52, 48, 44, 44]
    assert [row.k for row in narrow][-1] == 48

    extended = sweep_family("projective-extended", 5, run_oracle=True, m=4)
    assert [row.oracle_k for row in extended] == [70, 62, 62, 54, 46, 38, 34, 34, 26, 26, 18, 10, 10]
    assert [row.k for row in extended][-1] == 18

    # (q^(m/2)+1)/2 = 14 is even, so once omega >= (q-1)/2 both overshoot by m/2 and m
    for row in sweep_family("projective-narrow", 3, run_oracle=True, m=6)[7:]:
        assert row.k - row.oracle_k == (9 if row.params["delta"] == 14 else 3)
    for row in sweep_family("projective-extended", 3, run_oracle=True, m=6)[7:]:
        assert row.k - row.oracle_k == (18 if row.params["delta"] == 14 else 6)


@pytest.mark.parametrize("q, m", [(3, 4), (5, 4), (3, 6), (7, 4)])
def test_projective_sweep_matches_everywhere(q, m):
    rows = sweep_family("projective", q, run_oracle=True, m=m)
    assert rows and all(row.oracle_k == row.k for row in rows)
    assert max(row.params["delta"] for row in rows) == {(3, 4): 2, (5, 4): 6, (3, 6): 6, (7, 4): 12}[(q, m)]


def test_midpoint_mismatch_is_reported():
    # at delta = (q^(m/2)+1)/2 the constructed generator has 10 zeros
    result = projective_narrow_dimension(3, 4, 5, run_oracle=True)
    assert result.k == 14
    assert result.oracle_k == 10
    assert result.mismatch
    assert result.branch.endswith("midpoint")
    assert result.to_dict()["mismatch"]
    with pytest.raises(FormulaMismatch):
        projective_narrow_dimension(3, 4, 5, run_oracle=True, strict=True)

    result = projective_reversible_dimension_extended(3, 4, 5, run_oracle=True)
    assert (result.k, result.oracle_k) == (8, 0)
    with pytest.raises(FormulaMismatch):
        projective_reversible_dimension_extended(3, 4, 5, run_oracle=True, strict=True)


def test_projective_extended_dimension():
    result = projective_reversible_dimension_extended(3, 4, 2, run_oracle=True, strict=True)
    assert result.k == 12
    assert result.aux["overlap_slices"] == 0
    assert result.k == projective_reversible_dimension(3, 4, 2, run_oracle=False).k

    result = projective_reversible_dimension_extended(5, 4, 13, run_oracle=False)
    assert result.k == 18
    result = projective_reversible_dimension_extended(3, 6, 14, run_oracle=False)
    assert result.k == 98


def test_tower_dimension():
    result = tower_reversible_dimension(3, 2, 2, 2, run_oracle=True, strict=True)
    assert (result.n, result.k, result.d_lb) == (328, 312, 5)
    assert result.aux["m"] == 8
    assert tower_reversible_dimension(3, 2, 2, 3, run_oracle=False).k == 296
    assert tower_reversible_dimension(3, 2, 2, 4, run_oracle=False).k == 280
    with pytest.raises(HypothesisViolated):
        tower_reversible_dimension(3, 2, 2, 5)
    with pytest.raises(HypothesisViolated):
        tower_reversible_dimension(3, 1, 2, 2)


def test_family_code_and_exact_distance():
    result = half_plus_dimension(3, 3, 3, run_oracle=False)
    assert family_code(result).params == (14, 8)
    assert exact_distance(result).d == 5

    result = projective_narrow_dimension(3, 4, 2, run_oracle=False)
    assert family_code(result) == bch_generator(BchSpec(3, 20, 3))

    result = projective_reversible_dimension(5, 4, 3, run_oracle=False)
    assert exact_distance(result, budget=10).d is None


def test_sweep_family():
    rows = sweep_family("half-plus", 3, ell=3)
    assert [row.params["delta"] for row in rows] == [2, 3]
    assert [row.k for row in rows] == [8, 8]

    rows = sweep_family("projective", 5, run_oracle=False, m=4)
    assert [row.params["delta"] for row in rows] == [1, 2, 3, 4, 5, 6]
    assert [row.in_range for row in rows] == [True] * 3 + [False] * 3
    assert [row.oracle for row in rows] == ["skipped"] * 3 + ["polynomial"] * 3
    assert list(admissible_deltas("projective", 3, m=4)) == [1, 2]
    assert list(admissible_deltas("projective", 3, m=6)) == [1, 2, 3, 4, 5, 6]
    assert list(admissible_deltas("projective", 7, m=4)) == list(range(1, 13))

    rows = sweep_family("half-plus", 3, distance=True, ell=3)
    assert [row.d for row in rows] == [5, 5]

    rows = sweep_family("half-plus", 3, ell=1)
    assert rows and all(isinstance(row, SweepFailure) for row in rows)
    assert rows[0].error == "HypothesisViolated"
    assert rows[0].to_dict()["params"] == {"ell": 1, "delta": 2}

    assert list(admissible_deltas("tower", 3, t=2, tau=2)) == [1, 2, 3, 4]
    assert [row.k for row in sweep_family("sec4", 3, ell=3)] == [8, 8]
    assert list(admissible_deltas("sec56", 3, m=4)) == [1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        sweep_family("weights", 3, m=4)


if __name__ == "__main__":
    test_bch_spec()
    test_bch_generator()
    test_reversible_bch_generator()
    test_bch_bound()
    test_half_plus_dimension()
    test_out_of_range_rows_always_check()
    test_ternary_half_plus_leaders()
    test_half_plus_errors()
    test_projective_reversible_dimension()
    test_projective_narrow_dimension()
    test_projective_beyond_stated_range_values()
    test_projective_sweep_values()
    test_midpoint_mismatch_is_reported()
    test_projective_extended_dimension()
    test_tower_dimension()
    test_family_code_and_exact_distance()
    test_sweep_family()

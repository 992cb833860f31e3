from .analysis import (
    CodeParams,
    Matrix,
    certify_mds,
    generator_matrix,
    hull_dim_matrix,
    min_distance_exhaustive,
    parity_check_matrix,
)
from .bchkit import (
    BchSpec,
    DimFormulaResult,
    bch_bound,
    bch_generator,
    half_plus_dimension,
    projective_narrow_dimension,
    projective_reversible_dimension,
    projective_reversible_dimension_extended,
    resolve_family,
    reversible_bch_generator,
    sweep_family,
    tower_reversible_dimension,
)
from .codecore import (
    NegacyclicCode,
    count_reversible_closed_form,
    dual,
    enumerate_reversible,
    from_defining_set,
    from_generator,
    hull,
    is_lcd,
    is_reversible,
)
from .config import conf
from .cosetkit import CosetSystem, Regime, coset_leader_closed_form, coset_leader_oracle
from .errors import BudgetExceeded, InternalInconsistency, InvalidInput, NegacodeError
from .fieldkit import ExtensionSpec, FieldElement, FieldSpec, build_extension, build_field, field_of_order
from .mdskit import MdsSpec, applicability_check, build_defining_set, construct_mds_lcd
from .polykit import Poly, factor_x_n_plus_1, minimal_polynomial, reciprocal
from .reference_data import resolve_table, verify_table
from .report import CodeReport

__version__ = "0.1.0"


def init_family(family_name: str = "half-plus"):
    """Return the dimension evaluator for a length family by ID/name

    Each evaluator returns a DimFormulaResult for one designed distance:
      * **half-plus:** C(q, n, delta, 1) with n = (q^ell + 1)/2,
                       ``half_plus_dimension(q, ell, delta)``
      * **projective:** reversible C(q, n, 2 delta + 1, 1 - 2 delta) with
                        n = (q^m - 1)/(2(q - 1)), ``projective_reversible_dimension(q, m, delta)``
      * **projective-narrow:** C(q, n, delta + 1, 1) on the same lengths,
                               ``projective_narrow_dimension(q, m, delta)``
      * **projective-extended:** the reversible code over the whole delta range,
                                 ``projective_reversible_dimension_extended(q, m, delta)``
      * **tower:** reversible codes with n = (q^(t 2^tau) - 1)/(2(q^t + 1)),
                   ``tower_reversible_dimension(q, t, tau, delta)``

    Args:
        family_name (str): One of 'half-plus', 'projective', 'projective-narrow',
                           'projective-extended' or 'tower', or the short ids
                           'sec4', 'sec52', 'sec56', 'sec58' and 'sec513'

    Returns:
        evaluator (function): Corresponding dimension evaluator
    """
    family_name = resolve_family(family_name)

    if family_name == "half-plus":
        return half_plus_dimension
    elif family_name == "projective":
        return projective_reversible_dimension
    elif family_name == "projective-narrow":
        return projective_narrow_dimension
    elif family_name == "projective-extended":
        return projective_reversible_dimension_extended
    else:
        return tower_reversible_dimension

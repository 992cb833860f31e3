"""
config.py
=========

Package configuration, held in an astropy ``ConfigNamespace`` so values can be
set in ``~/.astropy/config/negacode.cfg`` or temporarily with
``conf.set_temp(name, value)``.
"""

import os

from astropy import config as _config

from .errors import InvalidInput

BUDGET_ENV_VAR = "NEGACODE_BUDGET"


class Conf(_config.ConfigNamespace):
    """Configuration parameters for negacode."""

    field_size_limit = _config.ConfigItem(
        2**20, "Largest field size (q or q^m) that will be tabulated.", cfgtype="integer"
    )
    enumeration_budget = _config.ConfigItem(
        2**20, "Upper bound on 2^|Y| for reversible-code enumeration.", cfgtype="integer"
    )
    distance_budget = _config.ConfigItem(
        10**7, "Codeword enumerations or column tests for exact distance.", cfgtype="integer"
    )
    determinant_budget = _config.ConfigItem(
        10**6, "Submatrix rank checks allowed for MDS certification.", cfgtype="integer"
    )
    threads = _config.ConfigItem(
        1, "Worker threads for exhaustive distance search.", cfgtype="integer"
    )
    run_oracles = _config.ConfigItem(
        True, "Dimension evaluators cross-check against a constructed generator."
    )


conf = Conf()


def search_budget(default: int) -> int:
    """Search budget, honouring the NEGACODE_BUDGET environment override.

    Args:
        default (int): configured budget to fall back on

    Returns:
        budget (int): budget in effect
    """
    override = os.environ.get(BUDGET_ENV_VAR)
    if override is None or not override.strip():
        return int(default)
    try:
        budget = int(override)
        assert budget > 0
    except (ValueError, AssertionError):
        raise InvalidInput(f'{BUDGET_ENV_VAR} must be a positive integer, got "{override}"')
    return budget

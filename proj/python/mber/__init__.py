"""Dependence analysis of multivariate binary data.

Joint distributions of n binary variables are flat numpy arrays of 2^n cell
probabilities, indexed by the integer whose n-bit expansion is the outcome
pattern (variable 1 in the most significant bit). Dependence parameter
lattices use the same indexing over variable subsets.
"""

from ._mber import (
    bivariate_admissible_interval,
    bivariate_admissible_region_contains,
    bivariate_deviation,
    bivariate_param_from_measure,
    conditional,
    coverage_study,
    dependence_measures,
    dependence_params,
    empirical_table,
    fit,
    frechet_bounds,
    infer,
    marginal,
    rule_accuracy,
    simulate,
    subcopula,
    table_from_params,
    trivariate_admissible_interval,
    trivariate_from_measures,
)

__all__ = [
    "bivariate_admissible_interval",
    "bivariate_admissible_region_contains",
    "bivariate_deviation",
    "bivariate_param_from_measure",
    "conditional",
    "coverage_study",
    "dependence_measures",
    "dependence_params",
    "empirical_table",
    "fit",
    "frechet_bounds",
    "infer",
    "marginal",
    "rule_accuracy",
    "simulate",
    "subcopula",
    "table_from_params",
    "trivariate_admissible_interval",
    "trivariate_from_measures",
]

"""Large-degree asymptotics of orthogonal polynomials for modified Jacobi weights.

Reference values come from a Gauss-Jacobi based Stieltjes procedure; the
expansions are built from the Szego function of the weight, the endpoint
coefficients of ``log h`` and Bessel-type local models.
"""
from .asymptotics import (
    AsymCoeffs,
    bulk_prediction,
    edge_prediction,
    hankel_normalized,
    largest_zero_prediction,
    log_gamma_prediction,
    orthonormal_outer_prediction,
    outer_prediction,
    recurrence_prediction,
)
from .convergence import ConvergenceReport, run_study
from .errors import (
    AnalyticityError,
    BranchError,
    ContourError,
    DomainError,
    NumericalError,
    OrderError,
    ParameterError,
    RHJacobiError,
)
from .oracle import (
    RecurrenceTable,
    eval_monic,
    eval_orthonormal,
    gauss_jacobi,
    hankel_log_det,
    polynomial_zeros,
    stieltjes,
)
from .szego import SzegoData, phi, psi_phase, szego_D, szego_data
from .weight import WeightSpec, from_dict, jacobi, legendre

__version__ = "0.1.0"

"""Landen identities and Landen-type inequalities for hypergeometric-type series."""

from .errors import CoefficientMismatch, DomainError, ParamError, RegionMismatch, SlowConvergence
from .specialfn import (
    BesselParams,
    EvalConfig,
    Evaluation,
    HyperTriple,
    KummerParams,
    bessel_u,
    closed_form,
    elliptic_k,
    gauss_2f1,
    kummer_phi,
    pochhammer,
)

__version__ = "0.1.0"

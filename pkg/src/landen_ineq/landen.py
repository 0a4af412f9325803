"""Landen modulus maps and residual checks for the Landen identities.

Four identities are checked:

* ``K(2 sqrt(r)/(1+r)) = (1+r) K(r)``
* ``K((1-r)/(1+r)) = (1+r)/2 K(sqrt(1-r^2))``
* ``F(a,b;2b;4r/(1+r)^2) = (1+r)^(2a) F(a,a+1/2-b;b+1/2;r^2)``
* ``F(a,b;2b;1-r^2) = ((1+r)/2)^(-2a) F(a,a+1/2-b;b+1/2;((1-r)/(1+r))^2)``
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specialfn import DEFAULT_CONFIG, EvalConfig, HyperTriple, elliptic_k, gauss_2f1

__all__ = [
    "IdentityResidual",
    "phi_ascend",
    "psi_descend",
    "ascend_argument",
    "check_identity_first",
    "check_identity_second",
    "check_transf",
    "check_transf_complement",
    "IDENTITIES",
]


@dataclass(frozen=True)
class IdentityResidual:
    r: float
    lhs: float
    rhs: float
    rel_residual: float

    @classmethod
    def from_sides(cls, r: float, lhs: float, rhs: float) -> "IdentityResidual":
        return cls(r, lhs, rhs, abs(lhs - rhs) / max(1.0, abs(rhs)))


def _unit(r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r={r!r} outside [0, 1]")
    return r


def phi_ascend(r: float) -> float:
    """Ascending Landen map ``r -> 2 sqrt(r) / (1 + r)``."""
    r = _unit(r)
    return 2.0 * math.sqrt(r) / (1.0 + r)


def psi_descend(r: float) -> float:
    """Descending Landen map ``r -> (1 - r) / (1 + r)``, an involution of [0, 1]."""
    r = _unit(r)
    return (1.0 - r) / (1.0 + r)


def ascend_argument(r: float) -> float:
    """``phi_ascend(r)**2 = 4r/(1+r)^2``, computed without the square root."""
    r = _unit(r)
    return 4.0 * r / ((1.0 + r) * (1.0 + r))


def check_identity_first(r: float, cfg: EvalConfig = DEFAULT_CONFIG, method: str = "agm") -> IdentityResidual:
    if not 0.0 < r <= 0.97:
        raise DomainError(f"r={r!r} outside (0, 0.97]")
    lhs = elliptic_k(phi_ascend(r), method, cfg).checked()
    rhs = (1.0 + r) * elliptic_k(r, method, cfg).checked()
    return IdentityResidual.from_sides(r, lhs, rhs)


def check_identity_second(r: float, cfg: EvalConfig = DEFAULT_CONFIG, method: str = "agm") -> IdentityResidual:
    if not 0.03 <= r < 1.0:
        raise DomainError(f"r={r!r} outside [0.03, 1)")
    lhs = elliptic_k(psi_descend(r), method, cfg).checked()
    rhs = 0.5 * (1.0 + r) * elliptic_k(math.sqrt((1.0 - r) * (1.0 + r)), method, cfg).checked()
    return IdentityResidual.from_sides(r, lhs, rhs)


def _transf_pair(a: float, b: float) -> tuple[HyperTriple, HyperTriple]:
    return HyperTriple(a, b, 2.0 * b), HyperTriple(a, a + 0.5 - b, b + 0.5)


def check_transf(a: float, b: float, r: float, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityResidual:
    """Residual of ``F(a,b;2b;4r/(1+r)^2) = (1+r)^(2a) F(a,a+1/2-b;b+1/2;r^2)``."""
    if not 0.0 < r <= 0.97:
        raise DomainError(f"r={r!r} outside (0, 0.97]")
    left, right = _transf_pair(a, b)
    lhs = gauss_2f1(left, ascend_argument(r), cfg).checked()
    rhs = (1.0 + r) ** (2.0 * a) * gauss_2f1(right, r * r, cfg).checked()
    return IdentityResidual.from_sides(r, lhs, rhs)


def check_transf_complement(a: float, b: float, r: float, cfg: EvalConfig = DEFAULT_CONFIG) -> IdentityResidual:
    """Residual of ``F(a,b;2b;1-r^2) = ((1+r)/2)^(-2a) F(a,a+1/2-b;b+1/2;((1-r)/(1+r))^2)``."""
    if not 0.03 <= r < 1.0:
        raise DomainError(f"r={r!r} outside [0.03, 1)")
    left, right = _transf_pair(a, b)
    lhs = gauss_2f1(left, (1.0 - r) * (1.0 + r), cfg).checked()
    s = psi_descend(r)
    rhs = (0.5 * (1.0 + r)) ** (-2.0 * a) * gauss_2f1(right, s * s, cfg).checked()
    return IdentityResidual.from_sides(r, lhs, rhs)


IDENTITIES = {
    "landen1": check_identity_first,
    "landen2": check_identity_second,
    "transf": check_transf,
    "transf-complement": check_transf_complement,
}

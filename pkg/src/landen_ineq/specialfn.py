"""Series evaluation of the hypergeometric-type functions used throughout the package.

Every function here sums its defining power series term by term, with the
terms generated from the analytic ratio ``t[n+1] / t[n]``.  Summation runs
in numpy blocks so that arguments close to 1 (which can need a few hundred
thousand terms) stay cheap.  Independent oracles live next to the series:
an AGM route for the complete elliptic integral and closed forms for a few
elementary parameter triples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, ParamError, SlowConvergence

__all__ = [
    "HyperTriple",
    "KummerParams",
    "BesselParams",
    "EvalConfig",
    "Evaluation",
    "DEFAULT_CONFIG",
    "CLOSED_FORM_TRIPLES",
    "is_admissible",
    "pochhammer",
    "sum_ratio_series",
    "gauss_2f1",
    "elliptic_k",
    "kummer_phi",
    "bessel_u",
    "closed_form",
]

_FIRST_BLOCK = 64
_MAX_BLOCK = 1 << 17
# keeps the reported tail bound strictly inside the tolerance after the final
# pairwise re-summation of the block
_SLACK = 1.0 - 1e-9


def is_admissible(c: float) -> bool:
    """True unless ``c`` is zero or a negative integer."""
    return not (c <= 0 and float(c).is_integer())


@dataclass(frozen=True)
class HyperTriple:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ParamError(f"{name}={v!r} is not finite")
            object.__setattr__(self, name, v)
        if not is_admissible(self.c):
            raise ParamError(f"c={self.c!r} is zero or a negative integer")

    def swapped(self) -> "HyperTriple":
        return HyperTriple(self.b, self.a, self.c)

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class KummerParams:
    p: float
    q: float

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))
        if not is_admissible(self.q):
            raise ParamError(f"q={self.q!r} is zero or a negative integer")

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class BesselParams:
    """Parameters of the generalized Bessel series.

    ``b_shape`` and ``c_sign`` are the Bessel-side ``b`` and ``c``; they are
    renamed so they cannot be confused with a :class:`HyperTriple`.
    """

    nu: float
    b_shape: float
    c_sign: float
    kappa: float = field(init=False)

    def __post_init__(self):
        for name in ("nu", "b_shape", "c_sign"):
            object.__setattr__(self, name, float(getattr(self, name)))
        kappa = self.nu + (self.b_shape + 1) / 2
        if not is_admissible(kappa):
            raise ParamError(f"kappa={kappa!r} is zero or a negative integer")
        object.__setattr__(self, "kappa", kappa)

    @classmethod
    def from_kappa(cls, kappa: float, c_sign: float) -> "BesselParams":
        # b_shape = -1 makes kappa == nu with no rounding
        return cls(nu=kappa, b_shape=-1.0, c_sign=c_sign)

    def as_dict(self) -> dict:
        return {"nu": self.nu, "b_shape": self.b_shape, "c_sign": self.c_sign, "kappa": self.kappa}


@dataclass(frozen=True)
class EvalConfig:
    """Truncation controls shared by every series.

    ``max_terms`` defaults far above what a naive reading would suggest: the
    zero-balanced series at ``x = 0.99977`` (the image of ``r = 0.97`` under
    ``4r/(1+r)^2``) needs about 1.5e5 terms to reach ``tail_tol = 1e-12``.
    """

    tail_tol: float = 1e-12
    max_terms: int = 5_000_000
    domain_guard: float = 1e-8

    def __post_init__(self):
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if not 0 < self.domain_guard < 1:
            raise ValueError("domain_guard must lie in (0, 1)")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class Evaluation:
    value: float
    terms_used: int
    tail_bound: float
    converged: bool

    def checked(self) -> float:
        """Return ``value``, raising :class:`SlowConvergence` if the series did not converge."""
        if not self.converged:
            raise SlowConvergence(
                f"series not converged after {self.terms_used} terms "
                f"(tail estimate {self.tail_bound:.3g})"
            )
        return self.value

    def scaled(self, factor: float) -> "Evaluation":
        return Evaluation(self.value * factor, self.terms_used, self.tail_bound * abs(factor), self.converged)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a+1) ... (a+n-1)``; the empty product gives 1 for every ``a``."""
    if n < 0:
        raise ParamError(f"n={n!r} must be a nonnegative integer")
    return float(math.prod(a + k for k in range(n))) if n else 1.0


def sum_ratio_series(
    ratio: Callable[[np.ndarray], np.ndarray],
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    first: float = 1.0,
    limit: float = 0.0,
    settle: int = 0,
) -> Evaluation:
    """Sum ``sum_n t_n`` where ``t_0 = first`` and ``t_{n+1} = t_n * ratio(n)``.

    ``ratio`` must accept a float array of indices.  ``limit`` is the limit of
    ``|ratio(n)|`` as ``n`` grows; the geometric majorant uses
    ``q = max(|ratio(n)|, limit)`` so that ratios creeping up towards the
    limit are still covered.  No stop is accepted before index ``settle``.
    The series is exact (tail 0) as soon as a ratio is exactly zero.
    """
    total = 0.0
    t0 = float(first)
    n0 = 0
    size = _FIRST_BLOCK
    tail_k = math.inf
    while n0 < cfg.max_terms:
        size = min(size, cfg.max_terms - n0)
        n = np.arange(n0, n0 + size, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            rho = np.asarray(ratio(n), dtype=float)
            terms = np.empty(size)
            terms[0] = t0
            np.cumprod(rho[:-1], out=terms[1:])
            terms[1:] *= t0
            partial = total + np.cumsum(terms)
            if not np.isfinite(partial[-1]):
                return Evaluation(float(partial[-1]), n0 + size, math.inf, False)
            q = np.maximum(np.abs(rho), limit)
            exact = rho == 0.0
            tail = np.where(exact, 0.0, np.abs(terms) * q / (1.0 - q))
            ok = exact | (
                (n >= settle)
                & (q < 1.0)
                & (tail <= cfg.tail_tol * np.maximum(1.0, np.abs(partial)) * _SLACK)
            )
        hit = np.flatnonzero(ok)
        if hit.size:
            k = int(hit[0])
            value = total + float(np.sum(terms[: k + 1]))
            return Evaluation(value, n0 + k + 1, float(tail[k]), True)
        total += float(np.sum(terms))
        tail_k = float(tail[-1]) if q[-1] < 1.0 else math.inf
        t0 = float(terms[-1] * rho[-1])
        n0 += size
        size = min(2 * size, _MAX_BLOCK)
    return Evaluation(total, n0, tail_k, False)


def _settle_index(*params: float) -> int:
    return max(0, math.ceil(max((-p for p in params), default=0.0))) + 1


def _as_triple(t) -> HyperTriple:
    return t if isinstance(t, HyperTriple) else HyperTriple(*t)


def _terminates(p: float) -> bool:
    return p <= 0 and float(p).is_integer()


def gauss_2f1(t: HyperTriple, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Evaluation:
    """Gaussian hypergeometric series ``2F1(a, b; c; x)`` for ``0 <= x <= 1 - domain_guard``.

    Terminating series (``a`` or ``b`` a nonpositive integer) are accepted for
    any ``x >= 0``.  Check ``converged`` or call ``.checked()`` on the result.
    """
    t = _as_triple(t)
    x = float(x)
    if not x >= 0.0:
        raise DomainError(f"x={x!r} must be nonnegative")
    if x > 1.0 - cfg.domain_guard and not (_terminates(t.a) or _terminates(t.b)):
        raise DomainError(f"x={x!r} exceeds 1 - domain_guard = {1.0 - cfg.domain_guard!r}")
    a, b, c = t.a, t.b, t.c

    def ratio(n):
        return (n + a) * (n + b) / ((n + c) * (n + 1.0)) * x

    return sum_ratio_series(ratio, cfg, limit=x, settle=_settle_index(a, b, c))


def _agm_k(r: float) -> Evaluation:
    a, b = 1.0, math.sqrt((1.0 - r) * (1.0 + r))
    steps = 0
    while abs(a - b) > 2.0 * math.ulp(a) and steps < 64:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        steps += 1
    value = math.pi / (2.0 * a)
    return Evaluation(value, steps, value * abs(a - b) / a, abs(a - b) <= 2.0 * math.ulp(a))


def elliptic_k(r: float, method: str = "agm", cfg: EvalConfig = DEFAULT_CONFIG) -> Evaluation:
    """Complete elliptic integral of the first kind at modulus ``r``.

    ``method="agm"`` uses ``pi / (2 AGM(1, sqrt(1 - r^2)))``; ``method="series"``
    sums ``(pi/2) 2F1(1/2, 1/2; 1; r^2)``.  The two routes share no code.
    """
    r = float(r)
    if not 0.0 <= r <= 1.0 - cfg.domain_guard:
        raise DomainError(f"modulus r={r!r} outside [0, 1 - domain_guard]")
    if method == "agm":
        return _agm_k(r)
    if method == "series":
        return gauss_2f1(HyperTriple(0.5, 0.5, 1.0), r * r, cfg).scaled(math.pi / 2)
    raise ValueError(f"unknown method {method!r}")


def kummer_phi(kp: KummerParams, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Evaluation:
    """Confluent series ``Phi(p, q; x) = sum (p)_n / ((q)_n n!) x^n`` for ``x >= 0``."""
    x = float(x)
    if not x >= 0.0:
        raise DomainError(f"x={x!r} must be nonnegative")
    p, q = kp.p, kp.q

    def ratio(n):
        return (n + p) / ((n + q) * (n + 1.0)) * x

    return sum_ratio_series(ratio, cfg, settle=_settle_index(p, q, -x))


def bessel_u(bp: BesselParams, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Evaluation:
    """Generalized Bessel series ``sum (-c/4)^n / ((kappa)_n n!) x^n`` for ``x >= 0``."""
    x = float(x)
    if not x >= 0.0:
        raise DomainError(f"x={x!r} must be nonnegative")
    z = -bp.c_sign / 4.0 * x
    kappa = bp.kappa

    def ratio(n):
        return z / ((n + kappa) * (n + 1.0))

    return sum_ratio_series(ratio, cfg, settle=_settle_index(kappa, -abs(z)))


CLOSED_FORM_TRIPLES = {
    "arcsin_form": HyperTriple(0.5, 0.5, 1.5),
    "log_form": HyperTriple(0.5, 1.0, 1.5),
    "geom_form": HyperTriple(1.0, 1.0, 1.0),
    "inv_sqrt_form": HyperTriple(1.0, 0.5, 1.0),
}


def closed_form(form: str, x: float) -> float:
    """Elementary expression for ``2F1`` at the triple ``CLOSED_FORM_TRIPLES[form]``."""
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x={x!r} outside [0, 1)")
    if form == "geom_form":
        return 1.0 / (1.0 - x)
    if form == "inv_sqrt_form":
        return 1.0 / math.sqrt(1.0 - x)
    if form not in ("arcsin_form", "log_form"):
        raise ValueError(f"unknown closed form {form!r}")
    if x == 0.0:
        return 1.0
    s = math.sqrt(x)
    return (math.asin(s) if form == "arcsin_form" else math.atanh(s)) / s

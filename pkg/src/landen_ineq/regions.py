"""Parameter-region predicates and coefficient-quotient sequence probes.

The region predicates encode the sufficient conditions under which each
Landen-type inequality is claimed.  All inequalities are non-strict; a
verdict carries ``boundary=True`` when one of the defining inequalities
holds with equality (to within ``BOUNDARY_TOL``, relative).

The sequences probed here are the coefficient quotients whose monotonicity
drives the Biernacki-Krzyz argument: if ``a_n / b_n`` is monotone then so is
``f(x) / g(x)`` on ``(0, r)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import ParamError
from .specialfn import BesselParams, HyperTriple, KummerParams, is_admissible

__all__ = [
    "Branch",
    "Monotonicity",
    "RegionVerdict",
    "SeqProbe",
    "BOUNDARY_TOL",
    "classify_thm21",
    "classify_thm24",
    "classify_bessel",
    "classify_kummer",
    "classify_ineq9",
    "thm21_branches",
    "thm24_branches",
    "delta_n",
    "omega_seq",
    "omega_seq_gamma",
    "sequence_values",
    "classify_steps",
    "seq_probe",
    "SEQ_IDS",
]

BOUNDARY_TOL = 1e-12
SEQ_TOL = 1e-12
MAX_PROBE = 10_000


class Branch(str, Enum):
    INCREASING = "IncreasingBranch"
    DECREASING = "DecreasingBranch"
    OUTSIDE = "Outside"


class Monotonicity(str, Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    CONSTANT = "Constant"
    NON_MONOTONE = "NonMonotone"


@dataclass(frozen=True)
class RegionVerdict:
    branch: Branch
    fired_condition: str
    boundary: bool
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if (self.fired_condition == "") != (self.branch is Branch.OUTSIDE):
            raise ValueError("fired_condition must be empty exactly when branch is Outside")


def _leq(lo: float, hi: float) -> tuple[bool, bool]:
    """(lo <= hi up to tolerance, lo == hi up to tolerance)."""
    tol = BOUNDARY_TOL * max(1.0, abs(lo), abs(hi))
    return lo <= hi + tol, abs(lo - hi) <= tol


def _chain(*values: float) -> tuple[bool, bool]:
    """Evaluate ``v0 <= v1 <= ... <= vk``."""
    holds, boundary = True, False
    for lo, hi in zip(values, values[1:]):
        h, e = _leq(lo, hi)
        holds &= h
        boundary |= e
    return holds, boundary


def _both(*checks: tuple[bool, bool]) -> tuple[bool, bool]:
    return all(c[0] for c in checks), any(c[1] for c in checks)


def _classify(conditions) -> tuple[RegionVerdict, frozenset]:
    fired = [(branch, label, eq) for branch, label, (ok, eq) in conditions if ok]
    if not fired:
        return RegionVerdict(Branch.OUTSIDE, "", False), frozenset()
    branches = frozenset(f[0] for f in fired)
    branch, label, eq = fired[0]
    return RegionVerdict(branch, label, eq or len(branches) > 1), branches


def _thm21_conditions(t: HyperTriple):
    a, b, c = t.a, t.b, t.c
    s, p = a + b, 4.0 * a * b
    return [
        (Branch.INCREASING, "2.1a: a+b ≥ c and 4ab ≥ max{1,c}", _both(_chain(c, s), _chain(max(1.0, c), p))),
        (Branch.DECREASING, "2.1b: a+b ≤ c and 4ab ≤ min{1,c}", _both(_chain(s, c), _chain(p, min(1.0, c)))),
    ]


def classify_thm21(t: HyperTriple) -> RegionVerdict:
    """Which monotonicity branch of ``F(a,b;c;x) / F(1/2,1/2;1;x)`` the triple falls in.

    When both branches hold (every defining inequality is an equality) the
    increasing branch is reported with ``boundary=True``.
    """
    return _classify(_thm21_conditions(t))[0]


def thm21_branches(t: HyperTriple) -> frozenset:
    return _classify(_thm21_conditions(t))[1]


def _thm24_conditions(t: HyperTriple):
    a, b, c = t.a, t.b, t.c
    if a <= 0 or b <= 0:
        raise ParamError("the generalized-transformation inequalities need a > 0 and b > 0")
    return [
        (Branch.INCREASING, "2.4a: max{1,c} ≤ 2b ≤ a+1/2", _chain(max(1.0, c), 2 * b, a + 0.5)),
        (Branch.INCREASING, "2.4a: c ≤ 2b ≤ a", _chain(c, 2 * b, a)),
        (Branch.INCREASING, "2.4a: 3c ≤ 6b ≤ min{6a,4a+1}", _chain(3 * c, 6 * b, min(6 * a, 4 * a + 1))),
        (Branch.DECREASING, "2.4b: a+1/2 ≤ 2b ≤ min{1,c}", _chain(a + 0.5, 2 * b, min(1.0, c))),
        (Branch.DECREASING, "2.4b: max{6a,4a+1} ≤ 6b ≤ 3c", _chain(max(6 * a, 4 * a + 1), 6 * b, 3 * c)),
    ]


def classify_thm24(t: HyperTriple) -> RegionVerdict:
    """Branch of the ``(1+r)^(2a)`` inequalities; the first satisfied sub-condition is named."""
    return _classify(_thm24_conditions(t))[0]


def thm24_branches(t: HyperTriple) -> frozenset:
    return _classify(_thm24_conditions(t))[1]


def classify_ineq9(a: float, b: float) -> RegionVerdict:
    """Cases under which ``F(a,b;2b;x) <= F(a,a+1/2-b;b+1/2;x)`` is established."""
    if a <= 0 or b <= 0:
        raise ParamError("the proof-step inequality needs a > 0 and b > 0")
    conditions = [
        (Branch.INCREASING, "ineq9: 1 ≤ 2b ≤ a+1/2", _chain(1.0, 2 * b, a + 0.5)),
        (Branch.INCREASING, "ineq9: 0 < 2b ≤ a", _chain(2 * b, a)),
        (Branch.INCREASING, "ineq9: a ≥ b and 2a+1/2 ≥ 3b", _both(_chain(b, a), _chain(3 * b, 2 * a + 0.5))),
    ]
    return _classify(conditions)[0]


def classify_bessel(bp: BesselParams) -> RegionVerdict:
    """Decreasing-quotient region for the generalized Bessel series.

    Two published lower bounds on ``kappa`` disagree in their first entry
    (0 versus -1).  The stricter one decides the branch; the other is
    reported in ``notes``.
    """
    k, c = bp.kappa, bp.c_sign
    strict_ok, strict_eq = _leq(max(0.0, -c, -(c + 1) / 4), k)
    lax_ok, lax_eq = _leq(max(-1.0, -c, -(c + 1) / 4), k)
    notes = (
        f"strict bound κ ≥ max{{0,−c,−(c+1)/4}}: {'holds' if strict_ok else 'fails'}",
        f"lax bound κ ≥ max{{−1,−c,−(c+1)/4}}: {'holds' if lax_ok else 'fails'}",
    )
    if strict_ok:
        return RegionVerdict(Branch.DECREASING, "2.3: κ ≥ max{0,−c,−(c+1)/4}", strict_eq, notes)
    return RegionVerdict(Branch.OUTSIDE, "", False, notes)


def classify_kummer(kp: KummerParams) -> RegionVerdict:
    ok, eq = _leq(max(0.0, 4 * kp.p, kp.p + 0.75), kp.q)
    if ok:
        return RegionVerdict(Branch.DECREASING, "2.3: q ≥ max{0,4p,p+3/4}", eq)
    return RegionVerdict(Branch.OUTSIDE, "", False)


def delta_n(t: HyperTriple, n: int) -> float:
    """Quadratic whose sign decides whether ``alpha_{n+1} >= alpha_n``."""
    a, b, c = t.a, t.b, t.c
    d = a + b - c
    return d * n * n + (d + a * b - 0.25) * n + a * b - c / 4


def omega_seq(n: int) -> float:
    """``[(1)_n / (1/2)_n]^2`` by direct product."""
    if n < 0:
        raise ParamError("n must be nonnegative")
    ratio = 1.0
    for k in range(n):
        ratio *= (k + 1.0) / (k + 0.5)
    return ratio * ratio


def omega_seq_gamma(n: int) -> float:
    """``pi [Gamma(n+1) / Gamma(n+1/2)]^2`` through log-gamma."""
    return math.pi * math.exp(2.0 * (math.lgamma(n + 1.0) - math.lgamma(n + 0.5)))


@dataclass(frozen=True)
class SeqProbe:
    seq_id: str
    params: Mapping[str, float]
    n_max: int
    classification: Monotonicity
    first_violation: int | None
    values: tuple[float, ...] = ()


SEQ_IDS = ("alpha", "beta", "gamma", "omega", "delta")


def _params_dict(params) -> dict:
    if params is None:
        return {}
    if isinstance(params, HyperTriple):
        return params.as_dict()
    return {k: float(v) for k, v in dict(params).items()}


def _need(p: dict, *names: str) -> list[float]:
    missing = [k for k in names if k not in p]
    if missing:
        raise ParamError(f"missing parameters {missing}")
    return [p[k] for k in names]


def _ratio_fn(seq_id: str, p: dict):
    if seq_id == "alpha":
        a, b, c = _need(p, "a", "b", "c")
        if not is_admissible(c):
            raise ParamError(f"c={c!r} is zero or a negative integer")
        return lambda n: (n + a) * (n + b) * (n + 1) / ((n + c) * (n + 0.5) ** 2)
    if seq_id == "beta":
        b, c = _need(p, "b", "c")
        if not is_admissible(c):
            raise ParamError(f"c={c!r} is zero or a negative integer")
        return lambda n: (n + 2 * b) / (n + c)
    if seq_id == "gamma":
        a, b = _need(p, "a", "b")
        if not (is_admissible(2 * b) and is_admissible(a + 0.5 - b)):
            raise ParamError("2b and a+1/2-b must not be zero or negative integers")
        return lambda n: (n + b) * (n + b + 0.5) / ((n + 2 * b) * (n + a + 0.5 - b))
    if seq_id == "omega":
        return lambda n: ((n + 1.0) / (n + 0.5)) ** 2
    raise ParamError(f"unknown sequence {seq_id!r}")


def sequence_values(seq_id: str, params, n_max: int) -> list[float]:
    """Values ``s_0 .. s_{n_max}`` of a named sequence."""
    p = _params_dict(params)
    if seq_id == "delta":
        t = HyperTriple(*_need(p, "a", "b", "c"))
        return [delta_n(t, n) for n in range(n_max + 1)]
    ratio = _ratio_fn(seq_id, p)
    values = [1.0]
    for n in range(n_max):
        values.append(values[-1] * ratio(float(n)))
    return values


def classify_steps(values: Sequence[float], tol: float = SEQ_TOL) -> tuple[Monotonicity, int | None]:
    """Classify a finite sequence by consecutive comparisons.

    Steps smaller than ``tol * max(1, |s_n|, |s_{n+1}|)`` count as flat.
    Returns the classification and, for ``NonMonotone``, the index ``n`` of
    the first step ``s_n -> s_{n+1}`` running against the direction set by
    the earlier steps.
    """
    direction = 0
    for n, (u, v) in enumerate(zip(values, values[1:])):
        scale = tol * max(1.0, abs(u), abs(v))
        step = 1 if v - u > scale else -1 if u - v > scale else 0
        if step == 0:
            continue
        if direction == 0:
            direction = step
        elif step != direction:
            return Monotonicity.NON_MONOTONE, n
    if direction == 0:
        return Monotonicity.CONSTANT, None
    return (Monotonicity.INCREASING if direction > 0 else Monotonicity.DECREASING), None


def seq_probe(seq_id: str, params=None, n_max: int = 200, keep_values: bool = False) -> SeqProbe:
    if not 1 <= n_max <= MAX_PROBE:
        raise ParamError(f"n_max must lie in [1, {MAX_PROBE}]")
    if seq_id not in SEQ_IDS:
        raise ParamError(f"unknown sequence {seq_id!r}")
    values = sequence_values(seq_id, params, n_max)
    cls, first = classify_steps(values)
    return SeqProbe(seq_id, _params_dict(params), n_max, cls, first, tuple(values) if keep_values else ())

"""Grid sweeps that certify Landen-type inequalities numerically.

Every sweep evaluates both sides of one inequality on a grid of ``r`` in
``(0, 1)`` and records a signed margin, oriented so that ``margin >= 0``
means the claimed inequality holds at that point.  Margins within
``margin_tol`` of zero are reported as ``Indeterminate``: at region
boundaries the two sides coincide and a floating-point sign is meaningless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Mapping, Sequence

import numpy as np

from .errors import CoefficientMismatch, DomainError, ParamError, RegionMismatch
from .landen import ascend_argument, psi_descend
from .regions import (
    Branch,
    Monotonicity,
    classify_bessel,
    classify_ineq9,
    classify_kummer,
    classify_steps,
    omega_seq,
    thm21_branches,
    thm24_branches,
)
from .specialfn import (
    DEFAULT_CONFIG,
    BesselParams,
    EvalConfig,
    Evaluation,
    HyperTriple,
    KummerParams,
    bessel_u,
    gauss_2f1,
    kummer_phi,
    sum_ratio_series,
)

__all__ = [
    "MARGIN_TOL",
    "Verdict",
    "Grid",
    "InequalityRecord",
    "SweepReport",
    "CoefficientSeries",
    "COEFFICIENT_FAMILIES",
    "Counterexample",
    "quotient_probe",
    "sweep_thm21",
    "sweep_thm22",
    "sweep_thm23",
    "sweep_thm24",
    "sweep_ineq9",
    "elementary_checks",
    "search_counterexample",
    "SEARCH_PARAMS",
]

MARGIN_TOL = 1e-10
MAX_WINDOW = 512


class Verdict(str, Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class Grid:
    """Evenly spaced ``r`` values ``start, start+step, ..., end``.

    ``start == end`` is allowed and gives a single point.
    """

    start: float = 0.01
    end: float = 0.97
    step: float = 0.01

    def __post_init__(self):
        if not 0 < self.start <= self.end < 1:
            raise ValueError(f"grid needs 0 < start <= end < 1, got [{self.start}, {self.end}]")
        if not self.step > 0:
            raise ValueError("grid step must be positive")
        if (self.end - self.start) / self.step > 1e6:
            raise ValueError("grid has more than 1e6 points")

    @classmethod
    def point(cls, r: float) -> "Grid":
        return cls(r, r, 1.0)

    def points(self) -> list[float]:
        count = int(math.floor((self.end - self.start) / self.step + 1e-9))
        return [round(self.start + i * self.step, 12) for i in range(count + 1)]

    def as_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "step": self.step}


@dataclass(frozen=True)
class InequalityRecord:
    r: float
    lhs: float
    rhs: float
    margin: float
    verdict: Verdict

    @classmethod
    def build(cls, r: float, lhs: float, rhs: float, claim: str, margin_tol: float = MARGIN_TOL):
        margin = lhs - rhs if claim == ">=" else rhs - lhs
        if abs(margin) <= margin_tol:
            verdict = Verdict.INDETERMINATE
        elif margin > 0:
            verdict = Verdict.HOLDS
        else:
            verdict = Verdict.VIOLATED
        return cls(r, lhs, rhs, margin, verdict)


@dataclass(frozen=True)
class SweepReport:
    theorem_id: str
    params: Mapping[str, object]
    grid: Grid
    records: tuple[InequalityRecord, ...]
    min_margin: float = field(init=False)
    n_violations: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "min_margin", min((rec.margin for rec in self.records), default=math.inf))
        object.__setattr__(self, "n_violations", sum(rec.verdict is Verdict.VIOLATED for rec in self.records))

    def verdicts(self) -> list[Verdict]:
        return [rec.verdict for rec in self.records]

    def all_indeterminate(self) -> bool:
        return all(rec.verdict is Verdict.INDETERMINATE for rec in self.records)


def _sweep(theorem_id, params, grid, sides: Callable[[float], tuple[float, float]], claim, margin_tol):
    records = []
    for r in grid.points():
        lhs, rhs = sides(r)
        records.append(InequalityRecord.build(r, lhs, rhs, claim, margin_tol))
    return SweepReport(theorem_id, dict(params), grid, tuple(records))


def _require(allowed: bool, message: str, override: bool):
    if not allowed and not override:
        raise RegionMismatch(message)


# -- power series given by their coefficients ---------------------------------


@dataclass(frozen=True)
class CoefficientSeries:
    """``f(x) = sum a_n x^n`` with ``a_0 = first`` and ``a_{n+1} = a_n * ratio(n)``.

    ``ratio`` takes a float array of indices.  ``limit`` is the limit of
    ``|a_{n+1} / a_n|``, used for the truncation bound.
    """

    name: str
    ratio: Callable[[np.ndarray], np.ndarray]
    first: float = 1.0
    limit: float = 1.0

    def coefficients(self, n_max: int) -> list[float]:
        rho = self.ratio(np.arange(n_max, dtype=float))
        out = [self.first]
        for q in rho:
            out.append(out[-1] * float(q))
        return out

    def evaluate(self, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Evaluation:
        if not 0.0 <= x <= 1.0 - cfg.domain_guard:
            raise DomainError(f"x={x!r} outside [0, 1 - domain_guard]")
        return sum_ratio_series(lambda n: self.ratio(n) * x, cfg, first=self.first, limit=self.limit * x)


COEFFICIENT_FAMILIES = {
    "ones": CoefficientSeries("ones", lambda n: np.ones_like(n)),
    # a_n omega_n == 1, i.e. f = F(1/2,1/2;1;x)
    "inv-omega": CoefficientSeries("inv-omega", lambda n: ((n + 0.5) / (n + 1.0)) ** 2),
    "inv-factorial": CoefficientSeries("inv-factorial", lambda n: 1.0 / (n + 1.0), limit=0.0),
}


def _poly_eval(coeffs: Sequence[float], x: float) -> Evaluation:
    value = 0.0
    for a in reversed(coeffs):
        value = value * x + a
    return Evaluation(value, len(coeffs), 0.0, True)


def _series_fn(coeffs, cfg):
    if isinstance(coeffs, CoefficientSeries):
        return lambda x: coeffs.evaluate(x, cfg).checked()
    return lambda x: _poly_eval(coeffs, x).value


def _omega_window(coeffs, window: int) -> list[float]:
    if isinstance(coeffs, CoefficientSeries):
        a = coeffs.coefficients(window)
    else:
        if len(coeffs) == 0 or len(coeffs) > MAX_WINDOW + 1:
            raise ValueError(f"explicit coefficient lists need 1..{MAX_WINDOW + 1} entries")
        # the polynomial continues with zero coefficients
        a = list(coeffs) + [0.0]
    omega = 1.0
    out = []
    for n, an in enumerate(a):
        out.append(an * omega)
        omega *= ((n + 1.0) / (n + 0.5)) ** 2
    return out


# -- numerical quotient probe -------------------------------------------------


def _numerator(spec, cfg) -> Callable[[float], float]:
    if isinstance(spec, KummerParams):
        return lambda x: kummer_phi(spec, x, cfg).checked()
    if isinstance(spec, BesselParams):
        return lambda x: bessel_u(spec, x, cfg).checked()
    if isinstance(spec, CoefficientSeries):
        return _series_fn(spec, cfg)
    if isinstance(spec, HyperTriple) or (isinstance(spec, tuple) and len(spec) == 3):
        t = spec if isinstance(spec, HyperTriple) else HyperTriple(*spec)
        return lambda x: gauss_2f1(t, x, cfg).checked()
    return _series_fn([float(a) for a in spec], cfg)


_K_SERIES = HyperTriple(0.5, 0.5, 1.0)


def quotient_probe(numerator_spec, grid: Grid = Grid(), cfg: EvalConfig = DEFAULT_CONFIG) -> Monotonicity:
    """Monotonicity of ``f(x) / F(1/2,1/2;1;x)`` over the grid points taken as ``x``.

    ``numerator_spec`` is a :class:`HyperTriple` (or 3-tuple),
    :class:`KummerParams`, :class:`BesselParams`, :class:`CoefficientSeries`
    or an explicit coefficient list.
    """
    f = _numerator(numerator_spec, cfg)
    values = [f(x) / gauss_2f1(_K_SERIES, x, cfg).checked() for x in grid.points()]
    return classify_steps(values)[0]


# -- sweeps --------------------------------------------------------------------


def _ascending_sides(g: Callable[[float], float], power: float = 1.0):
    def sides(r):
        return g(ascend_argument(r)), (1.0 + r) ** power * g(r * r)

    return sides


def _descending_sides(g: Callable[[float], float]):
    def sides(r):
        s = psi_descend(r)
        return g(s * s), 0.5 * (1.0 + r) * g((1.0 - r) * (1.0 + r))

    return sides


_THM21 = {
    "ineq1": (Branch.INCREASING, ">=", _ascending_sides),
    "ineq2": (Branch.INCREASING, "<=", _descending_sides),
    "ineq3": (Branch.DECREASING, "<=", _ascending_sides),
    "ineq4": (Branch.DECREASING, ">=", _descending_sides),
}


def sweep_thm21(
    t: HyperTriple,
    direction: str,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    override: bool = False,
    margin_tol: float = MARGIN_TOL,
) -> SweepReport:
    """Sweep one of the four ``K``-quotient inequalities for ``F(a,b;c;.)``.

    ``ineq1``/``ineq3`` compare ``F(4r/(1+r)^2)`` with ``(1+r) F(r^2)``;
    ``ineq2``/``ineq4`` compare ``F(((1-r)/(1+r))^2)`` with
    ``(1+r)/2 F(1-r^2)``.  Raises :class:`RegionMismatch` unless the triple
    lies in the matching branch or ``override`` is set.
    """
    t = t if isinstance(t, HyperTriple) else HyperTriple(*t)
    try:
        branch, claim, make_sides = _THM21[direction]
    except KeyError:
        raise ValueError(f"unknown direction {direction!r}") from None
    _require(branch in thm21_branches(t), f"{t} is not in the {branch.value} needed by {direction}", override)

    def g(x):
        return gauss_2f1(t, x, cfg).checked()

    return _sweep(f"2.1/{direction}", t.as_dict(), grid, make_sides(g), claim, margin_tol)


def sweep_thm22(
    coeffs,
    direction: str,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    window: int = MAX_WINDOW,
    margin_tol: float = MARGIN_TOL,
) -> SweepReport:
    """Sweep ``f(4r/(1+r)^2) >= (1+r) f(r^2)`` (``ineq5``) or its reverse.

    ``coeffs`` is a :class:`CoefficientSeries`, a family name from
    ``COEFFICIENT_FAMILIES``, or an explicit list defining a polynomial.  The
    hypothesis that ``a_n omega_n`` is monotone from ``n = 0`` is checked on
    the first ``window + 1`` coefficients (for a polynomial: all of them plus
    the first vanishing one) and :class:`CoefficientMismatch` is raised if it
    fails.
    """
    if isinstance(coeffs, str):
        coeffs = COEFFICIENT_FAMILIES[coeffs]
    if direction not in ("ineq5", "reversed"):
        raise ValueError(f"unknown direction {direction!r}")
    if not 1 <= window <= MAX_WINDOW:
        raise ValueError(f"window must lie in [1, {MAX_WINDOW}]")
    wanted = Monotonicity.INCREASING if direction == "ineq5" else Monotonicity.DECREASING
    got, first_bad = classify_steps(_omega_window(coeffs, window))
    if got not in (wanted, Monotonicity.CONSTANT):
        raise CoefficientMismatch(
            f"a_n*omega_n is {got.value} (first violation at n={first_bad}), {direction} needs {wanted.value}"
        )
    claim = ">=" if direction == "ineq5" else "<="
    name = coeffs.name if isinstance(coeffs, CoefficientSeries) else "explicit"
    params = {"coeffs": name} if isinstance(coeffs, CoefficientSeries) else {"coeffs": [float(a) for a in coeffs]}
    return _sweep(f"2.2/{direction}", params, grid, _ascending_sides(_series_fn(coeffs, cfg)), claim, margin_tol)


def sweep_thm23(
    kind: str,
    params,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    override: bool = False,
    margin_tol: float = MARGIN_TOL,
) -> SweepReport:
    """Sweep ``g(4r/(1+r)^2) <= (1+r) g(r^2)`` for the Kummer or Bessel series ``g``."""
    if kind == "kummer":
        verdict = classify_kummer(params)
        g = lambda x: kummer_phi(params, x, cfg).checked()  # noqa: E731
    elif kind == "bessel":
        verdict = classify_bessel(params)
        g = lambda x: bessel_u(params, x, cfg).checked()  # noqa: E731
    else:
        raise ValueError(f"unknown kind {kind!r}")
    _require(verdict.branch is Branch.DECREASING, f"{params} is outside the decreasing region", override)
    return _sweep(f"2.3/{kind}", params.as_dict(), grid, _ascending_sides(g), "<=", margin_tol)


def sweep_thm24(
    t: HyperTriple,
    direction: str,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    override: bool = False,
    margin_tol: float = MARGIN_TOL,
) -> SweepReport:
    """Sweep ``F(4r/(1+r)^2)`` against ``(1+r)^(2a) F(r^2)``: ``>=`` for ineq6, ``<=`` for ineq7."""
    t = t if isinstance(t, HyperTriple) else HyperTriple(*t)
    if direction not in ("ineq6", "ineq7"):
        raise ValueError(f"unknown direction {direction!r}")
    branch = Branch.INCREASING if direction == "ineq6" else Branch.DECREASING
    if not override:
        _require(branch in thm24_branches(t), f"{t} is not in the {branch.value} needed by {direction}", override)

    def g(x):
        return gauss_2f1(t, x, cfg).checked()

    claim = ">=" if direction == "ineq6" else "<="
    return _sweep(f"2.4/{direction}", t.as_dict(), grid, _ascending_sides(g, 2.0 * t.a), claim, margin_tol)


def sweep_ineq9(
    a: float,
    b: float,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    override: bool = False,
    margin_tol: float = MARGIN_TOL,
) -> SweepReport:
    """Sweep ``F(a,b;2b;r^2) <= F(a,a+1/2-b;b+1/2;r^2)``."""
    if not override:
        verdict = classify_ineq9(a, b)
        _require(verdict.branch is not Branch.OUTSIDE, f"(a,b)=({a},{b}) satisfies none of the cases", override)
    left = HyperTriple(a, b, 2.0 * b)
    right = HyperTriple(a, a + 0.5 - b, b + 0.5)

    def sides(r):
        x = r * r
        return gauss_2f1(left, x, cfg).checked(), gauss_2f1(right, x, cfg).checked()

    return _sweep("ineq9", {"a": float(a), "b": float(b)}, grid, sides, "<=", margin_tol)


def _arcsin_sides(r):
    s = math.sqrt(r)
    return 0.5 * s * math.asin(2.0 * s / (1.0 + r)), math.asin(r)


def _logpow_sides(r):
    s = math.sqrt(r)
    return ((1.0 + s) / (1.0 - s)) ** s, (1.0 + r) / (1.0 - r)


def elementary_checks(grid: Grid = Grid(), *, margin_tol: float = MARGIN_TOL) -> tuple[SweepReport, SweepReport]:
    """Closed-form checks of the arcsin and log-power Landen inequalities.

    Returns ``(arcsin_report, logpow_report)`` for
    ``(sqrt(r)/2) asin(2 sqrt(r)/(1+r)) < asin(r)`` and
    ``((1+sqrt(r))/(1-sqrt(r)))^sqrt(r) > (1+r)/(1-r)``.
    """
    return (
        _sweep("elementary/arcsin", {}, grid, _arcsin_sides, "<=", margin_tol),
        _sweep("elementary/logpow", {}, grid, _logpow_sides, ">=", margin_tol),
    )


# -- counterexample search ------------------------------------------------------

SEARCH_PARAMS = {
    "2.1": ("a", "b", "c"),
    "2.4": ("a", "b", "c"),
    "2.3-kummer": ("p", "q"),
    "2.3-bessel": ("kappa", "c_sign"),
    "ineq9": ("a", "b"),
}


@dataclass(frozen=True)
class Counterexample:
    theorem_id: str
    direction: str
    params: Mapping[str, float]
    sample_index: int
    record: InequalityRecord


def _run_claim(theorem_id, direction, p, grid, cfg, margin_tol):
    if theorem_id == "2.1":
        return sweep_thm21(HyperTriple(p["a"], p["b"], p["c"]), direction, grid, cfg, override=True, margin_tol=margin_tol)
    if theorem_id == "2.4":
        return sweep_thm24(HyperTriple(p["a"], p["b"], p["c"]), direction, grid, cfg, override=True, margin_tol=margin_tol)
    if theorem_id == "2.3-kummer":
        return sweep_thm23("kummer", KummerParams(p["p"], p["q"]), grid, cfg, override=True, margin_tol=margin_tol)
    if theorem_id == "2.3-bessel":
        bp = BesselParams.from_kappa(p["kappa"], p["c_sign"])
        return sweep_thm23("bessel", bp, grid, cfg, override=True, margin_tol=margin_tol)
    if theorem_id == "ineq9":
        return sweep_ineq9(p["a"], p["b"], grid, cfg, override=True, margin_tol=margin_tol)
    raise ValueError(f"unknown theorem id {theorem_id!r}")


def search_counterexample(
    theorem_id: str,
    direction: str,
    param_box: Mapping[str, tuple[float, float]],
    seed: int = 0,
    budget: int = 100,
    grid: Grid = Grid(),
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    margin_tol: float = MARGIN_TOL,
) -> Counterexample | None:
    """Look for a violated grid point of a claimed inequality.

    Draws ``budget`` parameter sets uniformly from ``param_box`` (a mapping
    name -> (lo, hi)) with ``numpy.random.default_rng(seed)``, sweeps the
    full grid for each, and returns the first ``Violated`` record in draw
    order then grid order.  Draws with inadmissible parameters are skipped
    but still count against the budget.
    """
    names = SEARCH_PARAMS.get(theorem_id)
    if names is None:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    missing = [k for k in names if k not in param_box]
    if missing:
        raise ValueError(f"parameter box lacks {missing}")
    for k in names:
        lo, hi = param_box[k]
        if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
            raise ValueError(f"bad range for {k}: [{lo}, {hi}]")
    rng = np.random.default_rng(seed)
    seen: dict[tuple, SweepReport | None] = {}
    for i in range(budget):
        draw = {k: float(rng.uniform(*param_box[k])) for k in names}
        key = tuple(draw.values())
        if key not in seen:
            try:
                seen[key] = _run_claim(theorem_id, direction, draw, grid, cfg, margin_tol)
            except ParamError:
                seen[key] = None
        report = seen[key]
        if report is None:
            continue
        for rec in report.records:
            if rec.verdict is Verdict.VIOLATED:
                return Counterexample(theorem_id, direction, draw, i, rec)
    return None

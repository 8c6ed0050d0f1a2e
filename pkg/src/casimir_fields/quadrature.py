"""Semi-infinite double quadrature tuned to exponentially damped integrands.

The integrands handled here live on u in [0, inf) times t in [0, 1], decay
like exp(-u * decay_scale) in u, and are smooth in t except for a possible
spike at t = 0 whose width shrinks like 1/u. The engine integrates the
u axis adaptively with a Gauss-Kronrod 7-15 pair on panels of [0, u_max],
u_max = tail_exponent_budget / decay_scale, and applies a fixed composite
Gauss-Legendre rule on a geometrically graded t mesh at every u node, so
the t spike stays resolved at every scale without 2-D adaptivity.

`integrate_fixed_grid` is a deliberately independent brute-force evaluator
(log-u trapezoid against a log-t Simpson rule) used as an oracle for the
adaptive engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .errors import DivergesAtBoundary, DomainError, InvalidDecayScale, NonConvergence

__all__ = [
    "QuadratureConfig",
    "IntegralResult",
    "integrate_semi_infinite",
    "integrate_fixed_grid",
]

# Gauss-Kronrod 7-15 pair, positive abscissae from x_max down to 0.
_K15_ABSCISSAE = np.array([
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
])
_K15_WEIGHTS = np.array([
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
])
_G7_WEIGHTS = np.array([
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
])

_XK15 = np.concatenate((-_K15_ABSCISSAE[:-1], _K15_ABSCISSAE[::-1]))
_WK15 = np.concatenate((_K15_WEIGHTS[:-1], _K15_WEIGHTS[::-1]))
_G7_INDEX = np.array([1, 3, 5, 7, 9, 11, 13])
_WG7 = np.concatenate((_G7_WEIGHTS[:-1], _G7_WEIGHTS[::-1]))

# Number of geometric seed splits of [0, u_max]; pre-resolves the decades
# below the truncation point before adaptive refinement starts.
_SEED_SPLITS = 16

_T_RULE_RATIO = 8.0
_T_RULE_LEVELS = 16

_t_rule_cache: dict[int, Tuple[np.ndarray, np.ndarray]] = {}


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and truncation policy for the (u, t) double integral.

    Attributes
    ----------
    rel_tol, abs_tol : float
        The integration stops once the error estimate drops below
        max(rel_tol * |value|, abs_tol).
    tail_exponent_budget : float
        The u axis is truncated at u_max = budget / decay_scale, so the
        neglected envelope is exp(-budget) of its value at the origin.
    max_subdivisions : int
        Adaptive panel splits allowed beyond the initial seeding.
    inner_rule_order : int
        Gauss-Legendre order used on each panel of the graded t mesh.
    decay_scale_floor : float
        Smallest decay scale accepted, in the caller's length unit; the
        integrands genuinely diverge as the field point reaches a wall,
        so arbitrarily small scales are refused rather than attempted.
    """

    rel_tol: float = 1e-8
    abs_tol: float = 1e-14
    tail_exponent_budget: float = 60.0
    max_subdivisions: int = 2000
    inner_rule_order: int = 64
    decay_scale_floor: float = 1e-6

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not self.abs_tol >= 0:
            raise DomainError(f"abs_tol must be nonnegative, got {self.abs_tol!r}")
        if not self.tail_exponent_budget >= 30:
            raise DomainError(f"tail_exponent_budget must be at least 30, got {self.tail_exponent_budget!r}")
        if not self.max_subdivisions >= 10:
            raise DomainError(f"max_subdivisions must be at least 10, got {self.max_subdivisions!r}")
        if not self.inner_rule_order >= 2:
            raise DomainError(f"inner_rule_order must be at least 2, got {self.inner_rule_order!r}")
        if not self.decay_scale_floor > 0:
            raise DomainError(f"decay_scale_floor must be positive, got {self.decay_scale_floor!r}")


@dataclass(frozen=True)
class IntegralResult:
    """Value, error estimate, work count and truncation point of one integral."""

    value: float
    error_estimate: float
    evaluations: int
    truncation_u: float


def _graded_t_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on [0, 1], geometrically graded toward 0."""
    cached = _t_rule_cache.get(order)
    if cached is not None:
        return cached
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.concatenate(([0.0], _T_RULE_RATIO ** -np.arange(_T_RULE_LEVELS, -1.0, -1.0)))
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        nodes.append(mid + half * x)
        weights.append(half * w)
    rule = (np.concatenate(nodes), np.concatenate(weights))
    _t_rule_cache[order] = rule
    return rule


def _log_simpson_rule(intervals: int = 2048, t_floor: float = 1e-16):
    """Uniform composite Simpson rule in log(t) on [t_floor, 1]; the oracle's t rule.

    In the log variable the spike near t = 0 and its power-law tail both
    have order-one width at every u, so a uniform mesh resolves them; the
    neglected piece below t_floor contributes at most max|f| * t_floor.
    """
    s = np.linspace(math.log(t_floor), 0.0, intervals + 1)
    h = s[1] - s[0]
    coeff = np.ones(intervals + 1)
    coeff[1:-1:2] = 4.0
    coeff[2:-1:2] = 2.0
    nodes = np.exp(s)
    return nodes, coeff * (h / 3.0) * nodes  # dt = t ds


def _check_decay_scale(decay_scale, floor) -> None:
    if not (isinstance(decay_scale, (int, float)) and math.isfinite(decay_scale) and decay_scale > 0):
        raise InvalidDecayScale(f"decay scale must be a positive finite number, got {decay_scale!r}")
    if decay_scale < floor:
        raise DivergesAtBoundary(
            f"decay scale {decay_scale!r} is below the floor {floor!r}; "
            "the field point is too close to a wall for the integral to be meaningful"
        )


def integrate_semi_infinite(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    decay_scale: float,
    cfg: QuadratureConfig | None = None,
) -> IntegralResult:
    """Integrate f(u, t) du dt over [0, inf) x [0, 1] to the configured tolerance.

    Parameters
    ----------
    f : callable
        Vectorized integrand; called with broadcastable arrays
        (u of shape (n, 1), t of shape (1, m)) at interior nodes only,
        so endpoint singularities at u = 0, t = 0 or t = 1 are never
        touched. Must be finite on (0, u_max] x (0, 1).
    decay_scale : float
        The exponential scale of the integrand, exp(-u * decay_scale);
        for the field integrands this is 2z (single interface) or
        2 min(z, a - z) (cavity). Supplied by the caller, which knows
        the geometry.
    cfg : QuadratureConfig, optional
        Tolerances and budgets; defaults are suitable for all tests.

    Returns
    -------
    IntegralResult
        The error estimate includes both the Kronrod panel estimates and
        a bound on the truncated tail beyond u_max.

    Raises
    ------
    InvalidDecayScale
        If decay_scale is not a positive finite number.
    DivergesAtBoundary
        If decay_scale is below the configured floor.
    NonConvergence
        If the subdivision budget is exhausted first; the best estimate
        rides on the exception as ``result``.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    _check_decay_scale(decay_scale, cfg.decay_scale_floor)
    u_max = cfg.tail_exponent_budget / decay_scale
    t_nodes, t_weights = _graded_t_rule(cfg.inner_rule_order)
    evaluations = 0

    def eval_panel(lo: float, hi: float):
        nonlocal evaluations
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        u = mid + half * _XK15
        g = f(u[:, None], t_nodes[None, :]) @ t_weights
        evaluations += u.size * t_nodes.size
        k15 = half * float(g @ _WK15)
        g7 = half * float(g[_G7_INDEX] @ _WG7)
        return k15, abs(k15 - g7)

    edges = [0.0] + [u_max * 2.0**-j for j in range(_SEED_SPLITS, 0, -1)] + [u_max]
    panels = []  # (lo, hi, value, error), kept sorted by lo
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, error = eval_panel(lo, hi)
        panels.append((lo, hi, value, error))

    # Tail bound: the t-integrated magnitude at the truncation point, carried
    # forward under |g(u)| <= C u^3 exp(-u s) with a factor-2 safety margin.
    g_tail = (np.abs(f(np.array([[u_max]]), t_nodes[None, :])) @ t_weights).item()
    evaluations += t_nodes.size
    budget = u_max * decay_scale
    tail = 2.0 * g_tail * (1.0 + 3.0 / budget + 6.0 / budget**2 + 6.0 / budget**3) / decay_scale

    splits = 0
    while True:
        total = math.fsum(p[2] for p in panels)
        err_total = math.fsum(p[3] for p in panels) + tail
        if err_total <= max(cfg.rel_tol * abs(total), cfg.abs_tol):
            break
        if splits >= cfg.max_subdivisions:
            best = IntegralResult(total, err_total, evaluations, u_max)
            raise NonConvergence(
                f"error estimate {err_total:.3e} still above tolerance after "
                f"{splits} subdivisions (value {total:.6e})",
                result=best,
            )
        worst = max(range(len(panels)), key=lambda i: panels[i][3])
        lo, hi, _, _ = panels.pop(worst)
        mid = 0.5 * (lo + hi)
        v1, e1 = eval_panel(lo, mid)
        v2, e2 = eval_panel(mid, hi)
        panels.insert(worst, (mid, hi, v2, e2))
        panels.insert(worst, (lo, mid, v1, e1))
        splits += 1

    return IntegralResult(total, err_total, evaluations, u_max)


def integrate_fixed_grid(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    decay_scale: float,
    n_u: int = 768,
    budget: float = 60.0,
    u_min_factor: float = 1e-8,
) -> IntegralResult:
    """Brute-force fixed-grid evaluation of the same double integral.

    Trapezoid rule in log(u) on [u_min_factor, budget] / decay_scale,
    crossed with a uniform composite Simpson rule in log(t). The integral
    is evaluated at n_u and 2 n_u log-grid points and the difference is
    the reported error gauge. Node placement, weights and refinement are
    all disjoint from the adaptive engine, which this function cross-checks.
    """
    _check_decay_scale(decay_scale, 0.0)
    if n_u < 16:
        raise DomainError(f"n_u must be at least 16, got {n_u!r}")
    u_lo = u_min_factor / decay_scale
    u_hi = budget / decay_scale
    t_nodes, t_weights = _log_simpson_rule()
    evaluations = 0

    def once(n: int) -> float:
        nonlocal evaluations
        x = np.linspace(math.log(u_lo), math.log(u_hi), n)
        u = np.exp(x)
        g = np.empty(n)
        for start in range(0, n, 4096):  # chunk to bound the broadcast size
            block = u[start : start + 4096]
            g[start : start + 4096] = f(block[:, None], t_nodes[None, :]) @ t_weights
        evaluations += n * t_nodes.size
        return float(np.trapezoid(u * g, x))  # du = u dx

    coarse = once(n_u)
    fine = once(2 * n_u)
    return IntegralResult(fine, abs(fine - coarse), evaluations, u_hi)

"""Dimensionless (u, t) integrands for the field expectations in both geometries.

The renormalized expectations of E^2, B^2 and the energy density are all
double integrals over u in [0, inf) and t in [0, 1] of u^3 times a
polarization bracket times an exponential envelope. Outside a single
half-space the envelope is exp(-2 u z); inside a vacuum gap of width ``a``
the integrand splits into a z-independent bracket (always <= 0 for the
energy density) and a position bracket riding on
exp(-u a) cosh(u (2z - a)) (always >= 0 for the energy density). The
divergent free-space piece is never represented; its subtraction is built
into these expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

import numpy as np

from .dielectric import DielectricModel, PolarNode, reflection_values
from .errors import DomainError

__all__ = [
    "SingleInterface",
    "Cavity",
    "Geometry",
    "FieldKind",
    "CavityIntegrandTerms",
    "single_bracket",
    "cavity_terms",
    "single_integrand",
    "cavity_integrand_terms",
    "cavity_integrand",
    "integrand_function",
    "decay_scale_for",
    "SINGLE_PREFACTOR",
    "CAVITY_PREFACTOR",
]

SINGLE_PREFACTOR = 1.0 / (4.0 * math.pi**2)
CAVITY_PREFACTOR = 1.0 / (2.0 * math.pi**2)


@dataclass(frozen=True)
class SingleInterface:
    """Dielectric filling z < 0, vacuum in z > 0."""


@dataclass(frozen=True)
class Cavity:
    """Vacuum gap of the given width between two identical half-spaces."""

    width: float

    def __post_init__(self):
        if not (isinstance(self.width, (int, float)) and math.isfinite(self.width) and self.width > 0):
            raise DomainError(f"cavity width must be positive and finite, got {self.width!r}")


Geometry = Union[SingleInterface, Cavity]


class FieldKind(Enum):
    """Which quadratic field expectation an integrand assembles."""

    E_SQUARED = "e2"
    B_SQUARED = "b2"
    ENERGY_DENSITY = "u"


@dataclass(frozen=True)
class CavityIntegrandTerms:
    """The two brackets of a cavity integrand, without the u^3 prefactor.

    ``term_constant`` is the z-independent bracket and ``term_position``
    the cosh-weighted one; the integrand is their sum times
    ``CAVITY_PREFACTOR * u**3``.
    """

    term_constant: float
    term_position: float


def single_bracket(kind: FieldKind, r, rp, t):
    """Polarization weight of the single-interface integrand.

    Takes reflection arrays (r, rp) and t directly so that callers can
    probe symmetry properties (swapping r and rp maps the E^2 bracket
    onto the B^2 bracket).
    """
    tt = t * t
    if kind is FieldKind.E_SQUARED:
        return -tt * r + (2.0 - tt) * rp
    if kind is FieldKind.B_SQUARED:
        return (2.0 - tt) * r - tt * rp
    if kind is FieldKind.ENERGY_DENSITY:
        return (1.0 - tt) * (r + rp)
    raise TypeError(f"unknown field kind {kind!r}")


def cavity_terms(kind: FieldKind, r, rp, u, t, a, z):
    """Constant and position brackets of the cavity integrand, overflow safe.

    Parameters
    ----------
    kind : FieldKind
        Which expectation to assemble.
    r, rp : array_like
        Reflection coefficients at the nodes.
    u, t : array_like
        Node coordinates; u must be strictly positive (the brackets
        themselves diverge at u = 0 when ``|r| = 1``, even though the
        full integrand vanishes there).
    a, z : float
        Gap width and field position, 0 < z < a.

    Returns
    -------
    (ndarray, ndarray)
        Broadcast arrays (term_constant, term_position).

    Notes
    -----
    No growing exponential is ever formed: the geometric denominators use

        1 - x^2 e^{-2ua} = (1 - x)(1 + x) + x^2 (1 - e^{-2ua})

    with the last factor from expm1, and the position envelope uses

        e^{-ua} cosh(u(2z - a)) = (e^{-2u(a-z)} + e^{-2uz}) / 2.
    """
    tt = t * t
    em = -np.expm1(-2.0 * u * a)  # 1 - exp(-2ua), accurate for small ua
    damp = np.exp(-2.0 * u * a)
    dr = (1.0 - r) * (1.0 + r) + r * r * em
    drp = (1.0 - rp) * (1.0 + rp) + rp * rp * em
    term_constant = -tt * (r * r * damp / dr + rp * rp * damp / drp)
    envelope = 0.5 * (np.exp(-2.0 * u * (a - z)) + np.exp(-2.0 * u * z))
    gr = r / dr
    grp = rp / drp
    if kind is FieldKind.E_SQUARED:
        pos = -tt * gr + (2.0 - tt) * grp
    elif kind is FieldKind.B_SQUARED:
        pos = (2.0 - tt) * gr - tt * grp
    elif kind is FieldKind.ENERGY_DENSITY:
        pos = (1.0 - tt) * (gr + grp)
    else:
        raise TypeError(f"unknown field kind {kind!r}")
    return term_constant, pos * envelope


def single_integrand(kind: FieldKind, model: DielectricModel, z: float, node: PolarNode) -> float:
    """Single-interface integrand value at one node.

    Returns (1 / 4 pi^2) * u^3 * bracket(t) * exp(-2 u z), the density per
    unit u and unit t of the selected expectation at distance z > 0 from
    the interface.
    """
    if not (isinstance(z, (int, float)) and math.isfinite(z) and z > 0):
        raise DomainError(f"field point must lie in the vacuum region, got z = {z!r}")
    r, rp = reflection_values(model, node.u, node.t)
    bracket = single_bracket(kind, float(r), float(rp), node.t)
    return SINGLE_PREFACTOR * node.u**3 * bracket * math.exp(-2.0 * node.u * z)


def _check_cavity_position(a: float, z: float) -> None:
    if not (isinstance(a, (int, float)) and math.isfinite(a) and a > 0):
        raise DomainError(f"cavity width must be positive and finite, got {a!r}")
    if not (isinstance(z, (int, float)) and 0 < z < a):
        raise DomainError(f"field point must lie strictly inside the gap, got z = {z!r} with a = {a!r}")


def cavity_integrand_terms(
    kind: FieldKind, model: DielectricModel, a: float, z: float, node: PolarNode
) -> CavityIntegrandTerms:
    """Term decomposition of the cavity integrand at one node.

    Exposes the z-independent and z-dependent brackets separately so that
    their signs can be tested: for the energy density of a Drude mirror or
    a perfect conductor, term_constant <= 0 <= term_position at every node.
    """
    _check_cavity_position(a, z)
    if node.u == 0.0:
        r0, rp0 = reflection_values(model, 0.0, node.t)
        if abs(float(r0)) == 1.0 or abs(float(rp0)) == 1.0:
            raise DomainError("cavity brackets diverge at u = 0 for a unit-reflectivity model")
    r, rp = reflection_values(model, node.u, node.t)
    const, pos = cavity_terms(kind, r, rp, node.u, node.t, a, z)
    return CavityIntegrandTerms(float(const), float(pos))


def cavity_integrand(kind: FieldKind, model: DielectricModel, a: float, z: float, node: PolarNode) -> float:
    """Cavity integrand value at one node: (1 / 2 pi^2) u^3 (const + position).

    At u = 0 the brackets can diverge while the u^3 prefactor wins; the
    continuous limit of the product is zero, which is what is returned.
    """
    _check_cavity_position(a, z)
    if node.u == 0.0:
        return 0.0
    terms = cavity_integrand_terms(kind, model, a, z, node)
    return CAVITY_PREFACTOR * node.u**3 * (terms.term_constant + terms.term_position)


def decay_scale_for(geometry: Geometry, z: float) -> float:
    """Exponential decay scale of the integrand in u: 2z, or 2 min(z, a-z)."""
    if isinstance(geometry, SingleInterface):
        if not z > 0:
            raise DomainError(f"field point must lie in the vacuum region, got z = {z!r}")
        return 2.0 * z
    if isinstance(geometry, Cavity):
        _check_cavity_position(geometry.width, z)
        return 2.0 * min(z, geometry.width - z)
    raise TypeError(f"unknown geometry {geometry!r}")


def integrand_function(
    kind: FieldKind, geometry: Geometry, model: DielectricModel, z: float
) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """Vectorized integrand f(u, t) for the quadrature engine.

    The returned callable accepts broadcastable arrays with u > 0 and
    t in [0, 1] and returns the integrand on the broadcast grid.
    """
    if isinstance(geometry, SingleInterface):
        if not (isinstance(z, (int, float)) and math.isfinite(z) and z > 0):
            raise DomainError(f"field point must lie in the vacuum region, got z = {z!r}")

        def f_single(u, t):
            r, rp = reflection_values(model, u, t)
            return SINGLE_PREFACTOR * u**3 * single_bracket(kind, r, rp, t) * np.exp(-2.0 * u * z)

        return f_single
    if isinstance(geometry, Cavity):
        a = geometry.width
        _check_cavity_position(a, z)

        def f_cavity(u, t):
            r, rp = reflection_values(model, u, t)
            const, pos = cavity_terms(kind, r, rp, u, t, a, z)
            return CAVITY_PREFACTOR * u**3 * (const + pos)

        return f_cavity
    raise TypeError(f"unknown geometry {geometry!r}")

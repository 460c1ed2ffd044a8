"""Closed-form catalog of the maximal surfaces the solver can also reach.

Each entry evaluates an explicit parametrization X(u, v), transcribed once,
with (u, v) the conformal parameters of the Björling construction (the core
curve sits at v = 0, except for the rotational orbit surface, whose core
circle sits at v = -1/2).  Families:

    bending-timelike(a)                circle, timelike axis, twist a*t
    bending-spacelike(a)               circle, spacelike axis, twist a*t
    lightlike-rotational(a)            circle, lightlike axis, constant twist
    helicoidal-timelike(a, lam)        helix, timelike axis, twist a*t
    helicoidal-spacelike-i(a, lam)     helix type I, spacelike axis, twist a*t
    helicoidal-spacelike-ii(a, lam)    helix type II, spacelike axis, twist a*t
    elliptic-catenoid(a)               circle, timelike axis, constant twist
    hyperbolic-catenoid(a)             circle, spacelike axis, constant twist
    helicoidal-timelike-constant(a, lam)  helix, timelike axis, constant twist
    enneper-second-kind(cubic, offset) orbit of a cubic generating curve
                                       under the parabolic rotation group

The spacelike-axis twisted families have an (a^2 - 1) denominator; their
kernels group the two cancelling products before dividing, and inside a
window |a - 1| < 1e-6 the evaluation switches to the exact removable-limit
branch, which coincides with the separately printed a = 1 parametrizations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import frames
from .bjorling import SurfacePatch
from .lorentz import vec3

BENDING_TIMELIKE = "bending-timelike"
BENDING_SPACELIKE = "bending-spacelike"
LIGHTLIKE_ROTATIONAL = "lightlike-rotational"
HELICOIDAL_TIMELIKE = "helicoidal-timelike"
HELICOIDAL_SPACELIKE_I = "helicoidal-spacelike-i"
HELICOIDAL_SPACELIKE_II = "helicoidal-spacelike-ii"
ELLIPTIC_CATENOID = "elliptic-catenoid"
HYPERBOLIC_CATENOID = "hyperbolic-catenoid"
HELICOIDAL_TIMELIKE_CONSTANT = "helicoidal-timelike-constant"
ENNEPER_SECOND_KIND = "enneper-second-kind"

# Half-width of the removable-singularity window around a = 1.
UNIT_TWIST_WINDOW = 1e-6

# family -> (needs a, needs lam, lam range description)
FAMILY_INFO = {
    BENDING_TIMELIKE: dict(params=("a",), a="a > 0"),
    BENDING_SPACELIKE: dict(params=("a",), a="a > 0"),
    LIGHTLIKE_ROTATIONAL: dict(params=("a",), a="a >= 0"),
    HELICOIDAL_TIMELIKE: dict(params=("a", "lam"), a="a > 0", lam="0 < lam < 1"),
    HELICOIDAL_SPACELIKE_I: dict(params=("a", "lam"), a="a > 0", lam="lam > 1"),
    HELICOIDAL_SPACELIKE_II: dict(params=("a", "lam"), a="a > 0", lam="lam > 0"),
    ELLIPTIC_CATENOID: dict(params=("a",), a="a >= 0"),
    HYPERBOLIC_CATENOID: dict(params=("a",), a="a >= 0"),
    HELICOIDAL_TIMELIKE_CONSTANT: dict(params=("a", "lam"), a="a >= 0", lam="0 < lam < 1"),
    ENNEPER_SECOND_KIND: dict(params=("cubic", "offset"), cubic="cubic > 0"),
}

# Strips on which each surface stays regular for the default parameters;
# advisory metadata for patches and CLI grids.
DEFAULT_DOMAINS = {
    BENDING_TIMELIKE: (-np.pi, np.pi, -0.35, 0.35),
    BENDING_SPACELIKE: (-1.2, 1.2, -0.4, 0.4),
    LIGHTLIKE_ROTATIONAL: (-1.0, 1.0, -0.9, 0.9),
    HELICOIDAL_TIMELIKE: (-np.pi, np.pi, -0.35, 0.35),
    HELICOIDAL_SPACELIKE_I: (-1.2, 1.2, -0.4, 0.4),
    HELICOIDAL_SPACELIKE_II: (-1.2, 1.2, -0.4, 0.4),
    ELLIPTIC_CATENOID: (-np.pi, np.pi, -0.5, 0.5),
    HYPERBOLIC_CATENOID: (-1.0, 1.0, -0.5, 0.5),
    HELICOIDAL_TIMELIKE_CONSTANT: (-np.pi, np.pi, -0.6, 0.6),
    ENNEPER_SECOND_KIND: (-1.0, 1.0, -1.0, -0.1),
}


@dataclass(frozen=True)
class CatalogSurface:
    """A catalog entry: family id plus its parameters (unused ones stay 0)."""

    family: str
    a: float = 0.0
    lam: float = 0.0
    cubic: float = 0.0
    offset: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILY_INFO:
            raise ValueError(f"unknown catalog family {self.family!r}")
        f = self.family
        if f in (BENDING_TIMELIKE, BENDING_SPACELIKE, HELICOIDAL_TIMELIKE,
                 HELICOIDAL_SPACELIKE_I, HELICOIDAL_SPACELIKE_II):
            if not self.a > 0:
                raise ValueError(f"{f} needs a > 0, got {self.a}")
        elif f != ENNEPER_SECOND_KIND:
            if not self.a >= 0:
                raise ValueError(f"{f} needs a >= 0, got {self.a}")
        if f in (HELICOIDAL_TIMELIKE, HELICOIDAL_TIMELIKE_CONSTANT):
            if not 0.0 < self.lam < 1.0:
                raise ValueError(f"{f} needs 0 < lam < 1, got {self.lam}")
        elif f == HELICOIDAL_SPACELIKE_I:
            if not self.lam > 1.0:
                raise ValueError(f"{f} needs lam > 1, got {self.lam}")
        elif f == HELICOIDAL_SPACELIKE_II:
            if not self.lam > 0.0:
                raise ValueError(f"{f} needs lam > 0, got {self.lam}")
        if f == ENNEPER_SECOND_KIND and not self.cubic > 0:
            raise ValueError(f"{f} needs cubic > 0, got {self.cubic}")

    @property
    def mu(self) -> float:
        """Helix speed for the helicoidal families."""
        if self.family in (HELICOIDAL_TIMELIKE, HELICOIDAL_TIMELIKE_CONSTANT):
            return float(np.sqrt(1.0 - self.lam**2))
        if self.family == HELICOIDAL_SPACELIKE_I:
            return float(np.sqrt(self.lam**2 - 1.0))
        if self.family == HELICOIDAL_SPACELIKE_II:
            return float(np.sqrt(self.lam**2 + 1.0))
        raise ValueError(f"{self.family} has no helix speed")


def bending_timelike(a: float) -> CatalogSurface:
    return CatalogSurface(BENDING_TIMELIKE, a=a)


def bending_spacelike(a: float) -> CatalogSurface:
    return CatalogSurface(BENDING_SPACELIKE, a=a)


def lightlike_rotational(a: float) -> CatalogSurface:
    return CatalogSurface(LIGHTLIKE_ROTATIONAL, a=a)


def helicoidal_timelike(a: float, lam: float) -> CatalogSurface:
    return CatalogSurface(HELICOIDAL_TIMELIKE, a=a, lam=lam)


def helicoidal_spacelike_i(a: float, lam: float) -> CatalogSurface:
    return CatalogSurface(HELICOIDAL_SPACELIKE_I, a=a, lam=lam)


def helicoidal_spacelike_ii(a: float, lam: float) -> CatalogSurface:
    return CatalogSurface(HELICOIDAL_SPACELIKE_II, a=a, lam=lam)


def elliptic_catenoid(a: float) -> CatalogSurface:
    return CatalogSurface(ELLIPTIC_CATENOID, a=a)


def hyperbolic_catenoid(a: float) -> CatalogSurface:
    return CatalogSurface(HYPERBOLIC_CATENOID, a=a)


def helicoidal_timelike_constant(a: float, lam: float) -> CatalogSurface:
    return CatalogSurface(HELICOIDAL_TIMELIKE_CONSTANT, a=a, lam=lam)


def enneper_second_kind(cubic: float, offset: float) -> CatalogSurface:
    return CatalogSurface(ENNEPER_SECOND_KIND, cubic=cubic, offset=offset)


# ---------------------------------------------------------------------------
# timelike-axis twisted families

def _trig_hyp_products(a, u, v):
    """The four mixed products appearing in the timelike-axis surfaces."""
    cau, sau = np.cosh(a * u), np.sinh(a * u)
    cav, sav = np.cos(a * v), np.sin(a * v)
    cu, su = np.cos(u), np.sin(u)
    cv, sv = np.cosh(v), np.sinh(v)
    pa = cau * sav * cu * cv - sau * cav * su * sv
    pb = sau * sav * su * cv + cau * cav * cu * sv
    pc = cau * sav * su * cv + sau * cav * cu * sv
    pd = sau * sav * cu * cv - cau * cav * su * sv
    return pa, pb, pc, pd


def _eval_bending_timelike(a, u, v):
    pa, pb, pc, pd = _trig_hyp_products(a, u, v)
    den = a * a + 1.0
    x = np.cos(u) * np.cosh(v) + (a * pa + pb) / den
    y = np.sin(u) * np.cosh(v) + (a * pc - pd) / den
    z = -np.sinh(a * u) * np.sin(a * v) / a
    return vec3(x, y, z)


def _eval_helicoidal_timelike(a, lam, mu, u, v):
    pa, pb, pc, pd = _trig_hyp_products(a, u, v)
    den = a * a + 1.0
    x = np.cos(u) * np.cosh(v) - ((a * mu + lam) * pa + (mu - a * lam) * pb) / den
    y = np.sin(u) * np.cosh(v) - ((a * mu + lam) * pc + (a * lam - mu) * pd) / den
    z = lam * u - np.sinh(a * u) * np.sin(a * v) / a
    return vec3(x, y, z)


# ---------------------------------------------------------------------------
# spacelike-axis twisted families

def _kernels(a, lam, mu, v):
    """Kernel pair (r, s) of the spacelike-axis surfaces, general a != 1.

    Both numerators group two products that cancel to O(a - 1), so the
    quotient stays accurate down to the switch window.
    """
    cav, sav = np.cos(a * v), np.sin(a * v)
    cv, sv = np.cos(v), np.sin(v)
    den = a * a - 1.0
    r = ((a * mu + lam) * cv * sav - (a * lam + mu) * sv * cav) / den
    s = ((a * mu + lam) * sv * cav - (a * lam + mu) * cv * sav) / den
    return r, s


def _kernels_unit(lam, mu, v):
    """Removable-singularity limit of the kernel pair at a = 1."""
    sc = np.sin(v) * np.cos(v)
    r = 0.5 * ((mu - lam) * sc + (mu + lam) * np.asarray(v, dtype=float))
    s = 0.5 * ((mu - lam) * sc - (mu + lam) * np.asarray(v, dtype=float))
    return r, s


def _kernel_pair(a, lam, mu, v):
    if abs(a - 1.0) < UNIT_TWIST_WINDOW:
        return _kernels_unit(lam, mu, v)
    return _kernels(a, lam, mu, v)


def _hyp_products(a, u):
    cau, sau = np.cosh(a * u), np.sinh(a * u)
    cu, su = np.cosh(u), np.sinh(u)
    return cau * cu, sau * su, cau * su, sau * cu


def _eval_bending_spacelike(a, u, v, kernels=_kernel_pair):
    r, s = kernels(a, 0.0, 1.0, v)
    cc, ss, cs, sc = _hyp_products(a, u)
    x = np.cosh(a * u) * np.sin(a * v) / a
    y = np.sinh(u) * np.cos(v) + ss * r + cc * s
    z = np.cosh(u) * np.cos(v) + sc * r + cs * s
    return vec3(x, y, z)


def _eval_helicoidal_spacelike_i(a, lam, mu, u, v, kernels=_kernel_pair):
    r, s = kernels(a, lam, mu, v)
    cc, ss, cs, sc = _hyp_products(a, u)
    x = lam * u - np.sinh(a * u) * np.sin(a * v) / a
    y = np.cosh(u) * np.cos(v) + cc * r + ss * s
    z = np.sinh(u) * np.cos(v) + cs * r + sc * s
    return vec3(x, y, z)


def _eval_helicoidal_spacelike_ii(a, lam, mu, u, v, kernels=_kernel_pair):
    r, s = kernels(a, lam, mu, v)
    cc, ss, cs, sc = _hyp_products(a, u)
    x = lam * u + np.cosh(a * u) * np.sin(a * v) / a
    y = np.sinh(u) * np.cos(v) + ss * r + cc * s
    z = np.cosh(u) * np.cos(v) + sc * r + cs * s
    return vec3(x, y, z)


# ---------------------------------------------------------------------------
# constant-twist surfaces and the lightlike-axis families

def _eval_elliptic_catenoid(a, u, v):
    radial = np.cosh(a) * np.sinh(v) + np.cosh(v)
    return vec3(np.cos(u) * radial, np.sin(u) * radial,
                -np.sinh(a) * np.asarray(v, dtype=float))


def _eval_hyperbolic_catenoid(a, u, v):
    p = np.sinh(a) * np.sin(v) + np.cos(v)
    return vec3(np.cosh(a) * np.asarray(v, dtype=float),
                np.sinh(u) * p, np.cosh(u) * p)


def _eval_helicoidal_timelike_constant(a, lam, mu, u, v):
    ca, sa = np.cosh(a), np.sinh(a)
    x = -mu * ca * np.cos(u) * np.sinh(v) + lam * sa * np.sin(u) * np.sinh(v) \
        + np.cos(u) * np.cosh(v)
    y = np.cosh(v) * np.sin(u) - mu * ca * np.sin(u) * np.sinh(v) \
        - lam * sa * np.cos(u) * np.sinh(v)
    z = lam * u - np.sinh(a) * np.asarray(v, dtype=float)
    return vec3(x, y, z)


def _eval_lightlike_rotational(a, u, v):
    decay = np.sinh(a) - np.cosh(a)
    cubic_part = u * u * v / 2.0 - v**3 / 6.0
    quad = u * u / 2.0 - v * v / 2.0
    x = decay * cubic_part + v * np.cosh(a) + quad - 1.0
    y = u + decay * u * v
    z = decay * cubic_part + v * np.sinh(a) + quad
    return vec3(x, y, z)


def apply_lightlike_rotation(theta, points):
    """Parabolic rotation about the axis (1, 0, 1), broadcast over theta.

    theta may be any shape broadcastable against points[..., 0].
    """
    theta = np.asarray(theta, dtype=float)
    q = 0.5 * theta * theta
    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    return vec3((1.0 - q) * x + theta * y + q * z,
                -theta * x + y + theta * z,
                -q * x + theta * y + (q + 1.0) * z)


@dataclass(frozen=True)
class GeneratingCurve:
    """Planar curve (h(v)+v, 0, h(v)-v) with h(v) = cubic*v^3 + offset.

    Its orbit under the parabolic rotation group is a zero mean curvature
    surface exactly when the cubic coefficient is matched to the mean
    curvature ODE of the orbit (see ode_residual).
    """

    cubic: float
    offset: float

    def __post_init__(self):
        if not self.cubic > 0:
            raise ValueError(f"generating curve needs cubic > 0, got {self.cubic}")

    def height(self, v):
        return self.cubic * np.asarray(v, dtype=float) ** 3 + self.offset


def eval_generating_curve(curve: GeneratingCurve, v):
    """Points (h+v, 0, h-v) of the generating curve, shape (..., 3)."""
    v = np.asarray(v, dtype=float)
    h = curve.height(v)
    return vec3(h + v, np.zeros_like(v), h - v)


def generating_curve_for(a: float) -> GeneratingCurve:
    """Constants matching the orbit surface to the lightlike-axis Björling
    surface with constant twist a: the orbit through v = -1/2 is then the
    core circle and the surface normal along it is the prescribed field."""
    offset = -(np.cosh(a) - 2.0 * np.sinh(a)) * (np.sinh(a) + np.cosh(a)) / 3.0
    cubic = 8.0 * offset + 4.0
    return GeneratingCurve(cubic=float(cubic), offset=float(offset))


def ode_residual(curve: GeneratingCurve, c: float, b: float, v):
    """Residual of the orbit zero-mean-curvature ODE on the generating curve.

    The curve (s, 0, f(s)) generates a zero mean curvature orbit surface iff
    c*(s-f)^3 + (s-f) = 2s + b for constants c > 0, b.  In the (h, v)
    parametrization s - f = 2v exactly and s = h + v; substituting the
    exact difference keeps the cubed term from amplifying roundoff in h.
    """
    v = np.asarray(v, dtype=float)
    h = curve.height(v)
    diff = 2.0 * v
    return np.abs(c * diff**3 + diff - 2.0 * (h + v) - b)


def _eval_enneper_second_kind(cubic, offset, u, v):
    curve = GeneratingCurve(cubic=cubic, offset=offset)
    beta = eval_generating_curve(curve, v)
    return apply_lightlike_rotation(u, beta)


def lightlike_identification_check(a: float, u, v) -> float:
    """Largest residual tying the orbit surface to the lightlike-axis
    Björling surface with constant twist a.

    Two identities are checked over the given parameter samples: the orbit
    of the matched generating curve through v = -1/2 reproduces the core
    circle at every u, and sliding the orbit parameter matches shifting u
    in the closed-form patch at every (u, v) pair.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    v = np.atleast_1d(np.asarray(v, dtype=float))
    curve = generating_curve_for(a)
    core_point = eval_generating_curve(curve, -0.5)
    orbit = apply_lightlike_rotation(u, core_point)
    circle = vec3(u * u / 2.0 - 1.0, u, u * u / 2.0)
    res_core = float(np.max(np.abs(orbit - circle)))

    section = _eval_lightlike_rotational(a, 0.0, v)
    rotated = apply_lightlike_rotation(u[:, None], section)
    direct = _eval_lightlike_rotational(a, u[:, None], v[None, :])
    res_orbit = float(np.max(np.abs(rotated - direct)))
    return max(res_core, res_orbit)


# ---------------------------------------------------------------------------
# the matching Björling data

_CURVE_MAKERS = {
    BENDING_TIMELIKE: (frames.circle_timelike, frames.linear_twist),
    BENDING_SPACELIKE: (frames.circle_spacelike, frames.linear_twist),
    LIGHTLIKE_ROTATIONAL: (frames.circle_lightlike, frames.constant_twist),
    HELICOIDAL_TIMELIKE: (frames.helix_timelike, frames.linear_twist),
    HELICOIDAL_SPACELIKE_I: (frames.helix_spacelike_i, frames.linear_twist),
    HELICOIDAL_SPACELIKE_II: (frames.helix_spacelike_ii, frames.linear_twist),
    ELLIPTIC_CATENOID: (frames.circle_timelike, frames.constant_twist),
    HYPERBOLIC_CATENOID: (frames.circle_spacelike, frames.constant_twist),
    HELICOIDAL_TIMELIKE_CONSTANT: (frames.helix_timelike, frames.constant_twist),
}

_LAM_FAMILIES = frozenset(f for f, info in FAMILY_INFO.items()
                          if "lam" in info["params"])


def bjorling_data_for(surface: CatalogSurface, u0: float = 0.0):
    """Core curve and normal field whose Björling solution the entry equals.

    The orbit surface is the one entry without such data in these
    coordinates; it is tied to the lightlike family by
    lightlike_identification_check instead.
    """
    if surface.family == ENNEPER_SECOND_KIND:
        raise ValueError("enneper-second-kind is parametrized as a group "
                         "orbit; it carries no Björling data in these "
                         "coordinates")
    curve_maker, twist_maker = _CURVE_MAKERS[surface.family]
    if surface.family in _LAM_FAMILIES:
        family = curve_maker(surface.lam)
    else:
        family = curve_maker()
    return frames.make_bjorling_data(family, twist_maker(surface.a), u0=u0)


# ---------------------------------------------------------------------------
# dispatch

def eval_surface(surface: CatalogSurface, u, v) -> np.ndarray:
    """Evaluate the closed-form parametrization, broadcasting over (u, v)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    f = surface.family
    if f == BENDING_TIMELIKE:
        return _eval_bending_timelike(surface.a, u, v)
    if f == BENDING_SPACELIKE:
        return _eval_bending_spacelike(surface.a, u, v)
    if f == HELICOIDAL_TIMELIKE:
        return _eval_helicoidal_timelike(surface.a, surface.lam, surface.mu, u, v)
    if f == HELICOIDAL_SPACELIKE_I:
        return _eval_helicoidal_spacelike_i(surface.a, surface.lam, surface.mu, u, v)
    if f == HELICOIDAL_SPACELIKE_II:
        return _eval_helicoidal_spacelike_ii(surface.a, surface.lam, surface.mu, u, v)
    if f == ELLIPTIC_CATENOID:
        return _eval_elliptic_catenoid(surface.a, u, v)
    if f == HYPERBOLIC_CATENOID:
        return _eval_hyperbolic_catenoid(surface.a, u, v)
    if f == HELICOIDAL_TIMELIKE_CONSTANT:
        return _eval_helicoidal_timelike_constant(surface.a, surface.lam, surface.mu, u, v)
    if f == LIGHTLIKE_ROTATIONAL:
        return _eval_lightlike_rotational(surface.a, u, v)
    assert f == ENNEPER_SECOND_KIND
    return _eval_enneper_second_kind(surface.cubic, surface.offset, u, v)


def patch(surface: CatalogSurface, domain=None) -> SurfacePatch:
    """Wrap a catalog surface as a SurfacePatch."""
    if domain is None:
        domain = DEFAULT_DOMAINS[surface.family]
    parts = [surface.family]
    if surface.family == ENNEPER_SECOND_KIND:
        parts.append(f"cubic={surface.cubic:g}")
        parts.append(f"offset={surface.offset:g}")
    else:
        parts.append(f"a={surface.a:g}")
        if "lam" in FAMILY_INFO[surface.family]["params"]:
            parts.append(f"lam={surface.lam:g}")
    return SurfacePatch(func=lambda u, v: eval_surface(surface, u, v),
                        domain=tuple(float(x) for x in domain),
                        label=":".join(parts))

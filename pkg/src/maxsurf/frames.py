"""Core curves, adapted frames, and normal fields for the Björling construction.

Six curve families are supported, named by the causal character of the core
curve (and, for helices, of the rotation axis):

    circle-timelike      alpha(t) = (cos t, sin t, 0)
    circle-spacelike     alpha(t) = (0, sinh t, cosh t)
    circle-lightlike     alpha(t) = (-1 + t^2/2, t, t^2/2)
    helix-timelike       alpha(t) = (cos t, sin t, lam*t),      0 < lam < 1
    helix-spacelike-i    alpha(t) = (lam*t, cosh t, sinh t),    lam > 1
    helix-spacelike-ii   alpha(t) = (lam*t, sinh t, cosh t),    lam > 0

"Circle" means an orbit of a rotation group of the ambient space, so the
spacelike and lightlike cases are a hyperbola and a parabola in Euclidean
eyes.  Every evaluator extends analytically: it accepts real or complex
arguments of any shape and returns a (..., 3) array.

Along each curve an adapted orthonormal frame (t, n, b) is stored (for the
lightlike circle, a null frame with <n, n> = <b, b> = 0 and <n, b> = -1/2).
A normal field V(t) = analytic unit timelike field orthogonal to the curve is
built by boosting within the normal plane: the hyperbolic angle phi(t) is
either constant or linear in t, and sinh(phi) attaches to the spacelike
normal direction, cosh(phi) to the timelike one, so that <V, V> = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .lorentz import vec3

CIRCLE_TIMELIKE = "circle-timelike"
CIRCLE_SPACELIKE = "circle-spacelike"
CIRCLE_LIGHTLIKE = "circle-lightlike"
HELIX_TIMELIKE = "helix-timelike"
HELIX_SPACELIKE_I = "helix-spacelike-i"
HELIX_SPACELIKE_II = "helix-spacelike-ii"

CIRCLE_TAGS = (CIRCLE_TIMELIKE, CIRCLE_SPACELIKE, CIRCLE_LIGHTLIKE)
HELIX_TAGS = (HELIX_TIMELIKE, HELIX_SPACELIKE_I, HELIX_SPACELIKE_II)
ALL_TAGS = CIRCLE_TAGS + HELIX_TAGS


@dataclass(frozen=True)
class AnalyticMap:
    """Evaluator of a closed-form analytic map C -> C^3 (or C -> C).

    `func` accepts arrays of any shape; `deriv`, when present, evaluates the
    exact complex derivative (no finite differences involved).
    """

    func: Callable[[np.ndarray], np.ndarray]
    deriv: Callable[[np.ndarray], np.ndarray] | None = None

    def __call__(self, z):
        return self.func(z)

    def d(self, z):
        if self.deriv is None:
            raise ValueError("this map carries no derivative evaluator")
        return self.deriv(z)


@dataclass(frozen=True)
class CurveFamily:
    """One of the six core-curve families, with the helix pitch when needed.

    The pitch `lam` must be None for circles.  Ranges enforcing a spacelike
    curve: 0 < lam < 1 (helix-timelike), lam > 1 (helix-spacelike-i),
    lam > 0 (helix-spacelike-ii).
    """

    tag: str
    lam: float | None = None

    def __post_init__(self):
        if self.tag not in ALL_TAGS:
            raise ValueError(f"unknown curve family {self.tag!r}; expected one of {ALL_TAGS}")
        if self.tag in CIRCLE_TAGS:
            if self.lam is not None:
                raise ValueError(f"{self.tag} takes no pitch parameter")
            return
        if self.lam is None:
            raise ValueError(f"{self.tag} requires a pitch lam")
        lam = float(self.lam)
        if self.tag == HELIX_TIMELIKE and not 0.0 < lam < 1.0:
            raise ValueError(f"helix-timelike needs 0 < lam < 1 for a spacelike curve, got {lam}")
        if self.tag == HELIX_SPACELIKE_I and not lam > 1.0:
            raise ValueError(f"helix-spacelike-i needs lam > 1 for a spacelike curve, got {lam}")
        if self.tag == HELIX_SPACELIKE_II and not lam > 0.0:
            raise ValueError(f"helix-spacelike-ii needs lam > 0, got {lam}")

    @property
    def mu(self) -> float | None:
        """Speed of the helix, sqrt(|lam^2 -+ 1|); None for circles."""
        if self.tag == HELIX_TIMELIKE:
            return float(np.sqrt(1.0 - self.lam**2))
        if self.tag == HELIX_SPACELIKE_I:
            return float(np.sqrt(self.lam**2 - 1.0))
        if self.tag == HELIX_SPACELIKE_II:
            return float(np.sqrt(self.lam**2 + 1.0))
        return None


def circle_timelike() -> CurveFamily:
    return CurveFamily(CIRCLE_TIMELIKE)


def circle_spacelike() -> CurveFamily:
    return CurveFamily(CIRCLE_SPACELIKE)


def circle_lightlike() -> CurveFamily:
    return CurveFamily(CIRCLE_LIGHTLIKE)


def helix_timelike(lam: float) -> CurveFamily:
    return CurveFamily(HELIX_TIMELIKE, lam)


def helix_spacelike_i(lam: float) -> CurveFamily:
    return CurveFamily(HELIX_SPACELIKE_I, lam)


def helix_spacelike_ii(lam: float) -> CurveFamily:
    return CurveFamily(HELIX_SPACELIKE_II, lam)


@dataclass(frozen=True)
class NormalFieldSpec:
    """Hyperbolic rotation angle phi of the normal field: constant or linear.

    kind "constant": phi(t) = a with a >= 0.
    kind "linear":   phi(t) = a*t with a > 0 (a = 0 degenerates to constant).
    """

    kind: str
    a: float

    def __post_init__(self):
        if self.kind not in ("constant", "linear"):
            raise ValueError(f"normal field kind must be 'constant' or 'linear', got {self.kind!r}")
        if self.kind == "constant" and not self.a >= 0.0:
            raise ValueError(f"constant twist needs a >= 0, got {self.a}")
        if self.kind == "linear" and not self.a > 0.0:
            raise ValueError(f"linear twist needs a > 0 (use constant(0) for no twist), got {self.a}")

    def phi(self, t):
        if self.kind == "constant":
            return self.a * np.ones_like(np.asarray(t))
        return self.a * np.asarray(t)


def constant_twist(a: float) -> NormalFieldSpec:
    return NormalFieldSpec("constant", a)


def linear_twist(a: float) -> NormalFieldSpec:
    return NormalFieldSpec("linear", a)


@dataclass(frozen=True)
class FrameField:
    """Adapted frame along a core curve, as analytic evaluators.

    For the five non-degenerate families (t, n, b) is orthonormal with one
    timelike member.  For the lightlike circle n and b are null with
    <n, b> = -1/2, and the combinations e2 = n - b (spacelike, unit) and
    e3 = n + b (timelike, unit) are also provided.
    """

    tangent: Callable
    normal: Callable
    binormal: Callable
    e2: Callable | None = None
    e3: Callable | None = None


@dataclass(frozen=True)
class BjorlingData:
    """A core curve with a normal field along it, anchored at parameter u0.

    alpha maps C -> C^3 and restricts to the spacelike curve on the real
    axis; normal_field restricts to a unit timelike field orthogonal to
    alpha' there.  Both are entire for every built-in family.
    """

    alpha: AnalyticMap
    normal_field: AnalyticMap
    u0: float = 0.0
    family: CurveFamily | None = None
    spec: NormalFieldSpec | None = None


def make_curve(family: CurveFamily) -> AnalyticMap:
    """Analytic extension of the core curve, with its exact derivative."""
    tag = family.tag
    if tag == CIRCLE_TIMELIKE:
        return AnalyticMap(
            lambda z: vec3(np.cos(z), np.sin(z), np.zeros_like(np.asarray(z))),
            lambda z: vec3(-np.sin(z), np.cos(z), np.zeros_like(np.asarray(z))),
        )
    if tag == CIRCLE_SPACELIKE:
        return AnalyticMap(
            lambda z: vec3(np.zeros_like(np.asarray(z)), np.sinh(z), np.cosh(z)),
            lambda z: vec3(np.zeros_like(np.asarray(z)), np.cosh(z), np.sinh(z)),
        )
    if tag == CIRCLE_LIGHTLIKE:
        return AnalyticMap(
            lambda z: vec3(np.asarray(z) ** 2 / 2 - 1.0, np.asarray(z), np.asarray(z) ** 2 / 2),
            lambda z: vec3(np.asarray(z), np.ones_like(np.asarray(z)), np.asarray(z)),
        )
    lam = family.lam
    if tag == HELIX_TIMELIKE:
        return AnalyticMap(
            lambda z: vec3(np.cos(z), np.sin(z), lam * np.asarray(z)),
            lambda z: vec3(-np.sin(z), np.cos(z), lam * np.ones_like(np.asarray(z))),
        )
    if tag == HELIX_SPACELIKE_I:
        return AnalyticMap(
            lambda z: vec3(lam * np.asarray(z), np.cosh(z), np.sinh(z)),
            lambda z: vec3(lam * np.ones_like(np.asarray(z)), np.sinh(z), np.cosh(z)),
        )
    # helix-spacelike-ii
    return AnalyticMap(
        lambda z: vec3(lam * np.asarray(z), np.sinh(z), np.cosh(z)),
        lambda z: vec3(lam * np.ones_like(np.asarray(z)), np.cosh(z), np.sinh(z)),
    )


def make_frame(family: CurveFamily) -> FrameField:
    """Adapted frame evaluators (unit tangent; frame vectors as stored)."""
    tag = family.tag
    if tag == CIRCLE_TIMELIKE:
        return FrameField(
            tangent=lambda z: vec3(-np.sin(z), np.cos(z), np.zeros_like(np.asarray(z))),
            normal=lambda z: vec3(-np.cos(z), -np.sin(z), np.zeros_like(np.asarray(z))),
            binormal=lambda z: vec3(np.zeros_like(np.asarray(z)),
                                    np.zeros_like(np.asarray(z)),
                                    np.ones_like(np.asarray(z))),
        )
    if tag == CIRCLE_SPACELIKE:
        return FrameField(
            tangent=lambda z: vec3(np.zeros_like(np.asarray(z)), np.cosh(z), np.sinh(z)),
            normal=lambda z: vec3(np.zeros_like(np.asarray(z)), np.sinh(z), np.cosh(z)),
            binormal=lambda z: vec3(np.ones_like(np.asarray(z)),
                                    np.zeros_like(np.asarray(z)),
                                    np.zeros_like(np.asarray(z))),
        )
    if tag == CIRCLE_LIGHTLIKE:
        def n_null(z):
            z = np.asarray(z)
            half = 0.5 * np.ones_like(z)
            return vec3(half, np.zeros_like(z), half)

        def b_null(z):
            z = np.asarray(z)
            return vec3((z**2 - 1.0) / 2, z, (z**2 + 1.0) / 2)

        return FrameField(
            tangent=lambda z: vec3(np.asarray(z), np.ones_like(np.asarray(z)), np.asarray(z)),
            normal=n_null,
            binormal=b_null,
            e2=lambda z: n_null(z) - b_null(z),
            e3=lambda z: n_null(z) + b_null(z),
        )
    lam, mu = family.lam, family.mu
    if tag == HELIX_TIMELIKE:
        return FrameField(
            tangent=lambda z: vec3(-np.sin(z) / mu, np.cos(z) / mu,
                                   (lam / mu) * np.ones_like(np.asarray(z))),
            normal=lambda z: vec3(-np.cos(z), -np.sin(z), np.zeros_like(np.asarray(z))),
            binormal=lambda z: vec3((lam / mu) * np.sin(z), -(lam / mu) * np.cos(z),
                                    (-1.0 / mu) * np.ones_like(np.asarray(z))),
        )
    if tag == HELIX_SPACELIKE_I:
        return FrameField(
            tangent=lambda z: vec3((lam / mu) * np.ones_like(np.asarray(z)),
                                   np.sinh(z) / mu, np.cosh(z) / mu),
            normal=lambda z: vec3(np.zeros_like(np.asarray(z)), np.cosh(z), np.sinh(z)),
            binormal=lambda z: vec3((-1.0 / mu) * np.ones_like(np.asarray(z)),
                                    -(lam / mu) * np.sinh(z), -(lam / mu) * np.cosh(z)),
        )
    # helix-spacelike-ii
    return FrameField(
        tangent=lambda z: vec3((lam / mu) * np.ones_like(np.asarray(z)),
                               np.cosh(z) / mu, np.sinh(z) / mu),
        normal=lambda z: vec3(np.zeros_like(np.asarray(z)), np.sinh(z), np.cosh(z)),
        binormal=lambda z: vec3((1.0 / mu) * np.ones_like(np.asarray(z)),
                                -(lam / mu) * np.cosh(z), -(lam / mu) * np.sinh(z)),
    )


# Which frame leg is spacelike vs timelike decides where sinh(phi) and
# cosh(phi) attach; <V, V> = -1 requires cosh on the timelike leg.
_SINH_ON_NORMAL = {CIRCLE_TIMELIKE, HELIX_TIMELIKE, HELIX_SPACELIKE_I}
_COSH_ON_NORMAL = {CIRCLE_SPACELIKE, HELIX_SPACELIKE_II}


def make_normal_field(family: CurveFamily, spec: NormalFieldSpec) -> AnalyticMap:
    """Unit timelike analytic field V with <V, alpha'> = 0 and <V, V> = -1."""
    frame = make_frame(family)
    if family.tag == CIRCLE_LIGHTLIKE:
        if spec.kind != "constant":
            raise ValueError(
                "the lightlike circle supports a constant twist only; "
                "a parameter-dependent angle does not combine with its null frame "
                "into an integrable normal field")
        sh, ch = np.sinh(spec.a), np.cosh(spec.a)
        return AnalyticMap(lambda z: sh * frame.e2(z) + ch * frame.e3(z))
    if family.tag in _SINH_ON_NORMAL:
        def field(z):
            p = spec.phi(z)
            return np.sinh(p)[..., None] * frame.normal(z) + np.cosh(p)[..., None] * frame.binormal(z)
    else:
        assert family.tag in _COSH_ON_NORMAL
        def field(z):
            p = spec.phi(z)
            return np.cosh(p)[..., None] * frame.normal(z) + np.sinh(p)[..., None] * frame.binormal(z)
    return AnalyticMap(field)


def make_bjorling_data(family: CurveFamily, spec: NormalFieldSpec,
                       u0: float = 0.0) -> BjorlingData:
    """Assemble curve and normal field into Björling data anchored at u0."""
    return BjorlingData(alpha=make_curve(family),
                        normal_field=make_normal_field(family, spec),
                        u0=u0, family=family, spec=spec)

"""Numerical verification of surface patches.

Everything here works on a SurfacePatch through finite differences only, so
the same checks apply to closed-form catalog patches and to quadrature-built
Björling patches: fundamental forms, mean curvature residual, the spacelike
mask, recovery of the prescribed core curve and normal field, and
equivariance under the rigid motion groups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bjorling import SurfacePatch, reference_normal
from .lorentz import lorentz_cross, lorentz_dot
from .motions import (MotionGroup, isometry_defect, rotation_lightlike_axis,
                      rotation_spacelike_axis, rotation_timelike_axis,
                      screw_timelike_axis)

__all__ = [
    "Grid", "FundamentalForms", "CheckResult", "VerificationReport",
    "fundamental_forms", "mean_curvature_residual", "mean_curvature_scan",
    "conformality_residual", "spacelike_region", "bjorling_recovery",
    "equivariance", "group_isometry_check",
    "MotionGroup", "isometry_defect", "rotation_timelike_axis",
    "rotation_spacelike_axis", "rotation_lightlike_axis",
    "screw_timelike_axis",
]


@dataclass(frozen=True)
class Grid:
    """Rectangular sample grid, nodes at the linspace of each axis."""

    u_min: float
    u_max: float
    v_min: float
    v_max: float
    nu: int = 21
    nv: int = 21

    def __post_init__(self):
        if self.nu < 2 or self.nv < 2:
            raise ValueError(f"grid needs at least 2x2 nodes, got {self.nu}x{self.nv}")
        bounds = (self.u_min, self.u_max, self.v_min, self.v_max)
        if not all(np.isfinite(b) for b in bounds):
            raise ValueError(f"grid bounds must be finite, got {bounds}")
        if not (self.u_min < self.u_max and self.v_min < self.v_max):
            raise ValueError(f"grid bounds must be increasing, got {bounds}")

    @classmethod
    def from_domain(cls, domain, nu: int = 21, nv: int = 21) -> "Grid":
        return cls(*(float(x) for x in domain), nu=nu, nv=nv)

    def axes(self):
        return (np.linspace(self.u_min, self.u_max, self.nu),
                np.linspace(self.v_min, self.v_max, self.nv))

    def mesh(self):
        us, vs = self.axes()
        return np.meshgrid(us, vs, indexing="ij")

    def describe(self) -> str:
        return (f"[{self.u_min:g},{self.u_max:g}]x[{self.v_min:g},{self.v_max:g}] "
                f"{self.nu}x{self.nv}")


@dataclass(frozen=True)
class FundamentalForms:
    """First and second fundamental form coefficients on a node set.

    degenerate marks nodes where E G - F^2 fell below the tolerance; second
    form values there are unreliable and should be masked by the caller.
    """

    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    e: np.ndarray
    f: np.ndarray
    g2: np.ndarray
    degenerate: np.ndarray


def _first_derivatives(func, u, v, h):
    def diff(step):
        du = (func(u + step, v) - func(u - step, v)) / (2.0 * step)
        dv = (func(u, v + step) - func(u, v - step)) / (2.0 * step)
        return du, dv

    du1, dv1 = diff(h)
    du2, dv2 = diff(h / 2.0)
    return (4.0 * du2 - du1) / 3.0, (4.0 * dv2 - dv1) / 3.0


def _second_derivatives(func, u, v, h):
    center = func(u, v)

    def diff(step):
        uu = (func(u + step, v) - 2.0 * center + func(u - step, v)) / step**2
        vv = (func(u, v + step) - 2.0 * center + func(u, v - step)) / step**2
        uv = (func(u + step, v + step) - func(u + step, v - step)
              - func(u - step, v + step) + func(u - step, v - step)) / (4.0 * step**2)
        return uu, uv, vv

    one = diff(h)
    two = diff(h / 2.0)
    return tuple((4.0 * b - a) / 3.0 for a, b in zip(one, two))


def fundamental_forms(patch: SurfacePatch, u, v, h: float = 1e-3,
                      degenerate_tol: float = 1e-10) -> FundamentalForms:
    """Fundamental forms by Richardson-extrapolated central differences.

    The normal is the Lorentz cross of the tangents, normalized by the
    square root of |<n, n>|; for a spacelike patch it is the unit timelike
    normal.  Works on scalars or broadcastable arrays.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    xu, xv = _first_derivatives(patch, u, v, h)
    xuu, xuv, xvv = _second_derivatives(patch, u, v, h)
    E = lorentz_dot(xu, xu)
    F = lorentz_dot(xu, xv)
    G = lorentz_dot(xv, xv)
    det = E * G - F * F
    degenerate = det <= degenerate_tol
    nn = lorentz_cross(xu, xv)
    q = np.abs(lorentz_dot(nn, nn))
    scale = np.sqrt(np.where(q > 0.0, q, 1.0))
    normal = nn / scale[..., None]
    return FundamentalForms(E=E, F=F, G=G,
                            e=lorentz_dot(xuu, normal),
                            f=lorentz_dot(xuv, normal),
                            g2=lorentz_dot(xvv, normal),
                            degenerate=degenerate)


def mean_curvature_scan(patch: SurfacePatch, grid: Grid, h: float = 1e-3,
                        exclude_tol: float = 1e-4):
    """Mean curvature residual over a grid, with the excluded nodes.

    Returns (max residual over kept nodes, list of excluded (u, v)).  Nodes
    where E G - F^2 <= exclude_tol are excluded: there the finite-difference
    residual is dominated by roundoff amplification, not by curvature.  The
    default exclusion is matched to the h = 1e-3 Richardson error.
    """
    U, V = grid.mesh()
    ff = fundamental_forms(patch, U, V, h=h, degenerate_tol=exclude_tol)
    det = ff.E * ff.G - ff.F * ff.F
    kept = ~ff.degenerate
    num = np.abs(ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g2 * ff.E)
    den = 2.0 * np.abs(np.where(kept, det, 1.0))
    residual = np.where(kept, num / den, 0.0)
    flagged = tuple((float(U[i, j]), float(V[i, j]))
                    for i, j in zip(*np.nonzero(~kept)))
    value = float(np.max(residual[kept])) if np.any(kept) else float("nan")
    return value, flagged


def mean_curvature_residual(patch: SurfacePatch, grid: Grid, h: float = 1e-3,
                            exclude_tol: float = 1e-4) -> float:
    """Max |e G - 2 f F + g2 E| / (2 |E G - F^2|) over the kept grid nodes."""
    return mean_curvature_scan(patch, grid, h=h, exclude_tol=exclude_tol)[0]


def conformality_residual(patch: SurfacePatch, grid: Grid,
                          h: float = 1e-3) -> float:
    """Max of |E - G| and |F| over the grid; zero for conformal parameters."""
    U, V = grid.mesh()
    xu, xv = _first_derivatives(patch, U, V, h)
    E = lorentz_dot(xu, xu)
    F = lorentz_dot(xu, xv)
    G = lorentz_dot(xv, xv)
    return float(max(np.max(np.abs(E - G)), np.max(np.abs(F))))


def spacelike_region(patch: SurfacePatch, grid: Grid, h: float = 1e-3):
    """Boolean mask: E > 0 and E G - F^2 > 0 at each grid node."""
    U, V = grid.mesh()
    xu, xv = _first_derivatives(patch, U, V, h)
    E = lorentz_dot(xu, xu)
    F = lorentz_dot(xu, xv)
    G = lorentz_dot(xv, xv)
    return (E > 0.0) & (E * G - F * F > 0.0)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check: residual against tolerance."""

    name: str
    residual: float
    tolerance: float
    passed: bool
    grid: str = ""
    flagged: tuple = ()
    note: str = ""

    def to_dict(self):
        out = {"name": self.name, "residual": self.residual,
               "tolerance": self.tolerance, "passed": self.passed}
        if self.grid:
            out["grid"] = self.grid
        if self.flagged:
            out["flagged"] = [list(p) for p in self.flagged]
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class VerificationReport:
    """Bundle of check results under one label."""

    label: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {"label": self.label, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def bjorling_recovery(patch: SurfacePatch, data, u_grid,
                      position_tol: float = 1e-8, normal_tol: float = 1e-6,
                      h: float = 1e-4) -> VerificationReport:
    """Check that a patch reproduces its prescribed curve and normal field.

    The normal sign is resolved once per patch (the construction fixes it
    only up to orientation) and the same sign is then required at every
    sampled u.
    """
    us = np.asarray(u_grid, dtype=float)
    core = patch(us, 0.0)
    alpha = np.real(np.asarray(data.alpha(us)))
    pos_res = float(np.max(np.abs(core - alpha)))

    normals = reference_normal(patch, us, h=h)
    field = np.real(np.asarray(data.normal_field(us)))
    d_plus = float(np.max(np.abs(normals - field)))
    d_minus = float(np.max(np.abs(normals + field)))
    sign = 1 if d_plus <= d_minus else -1
    normal_res = min(d_plus, d_minus)

    grid_desc = f"u in [{us.min():g},{us.max():g}], {us.size} samples"
    checks = (
        CheckResult("core-curve", pos_res, position_tol,
                    pos_res < position_tol, grid_desc),
        CheckResult("normal-field", normal_res, normal_tol,
                    normal_res < normal_tol, grid_desc,
                    note=f"sign {sign:+d}"),
    )
    return VerificationReport(label=patch.label or "bjorling-recovery",
                              checks=checks)


def equivariance(patch: SurfacePatch, group: MotionGroup, thetas, grid: Grid,
                 tol: float = 1e-9) -> VerificationReport:
    """Check Psi(theta) X(u, v) = X(u + theta, v) over a theta set and grid."""
    U, V = grid.mesh()
    base = patch(U, V)
    worst = 0.0
    for theta in thetas:
        moved = group.apply(theta, base)
        target = patch(U + theta, V)
        worst = max(worst, float(np.max(np.abs(moved - target))))
    check = CheckResult("equivariance", worst, tol, worst < tol,
                        grid.describe(),
                        note=f"thetas {[float(t) for t in thetas]}")
    return VerificationReport(label=f"{patch.label}|{group.tag}",
                              checks=(check,))


def group_isometry_check(group: MotionGroup, thetas,
                         tol: float = 1e-12) -> CheckResult:
    """Largest metric defect of the group matrices over a theta set."""
    worst = max(isometry_defect(group, float(t)) for t in thetas)
    return CheckResult(f"isometry:{group.tag}", worst, tol, worst < tol,
                       note=f"thetas {[float(t) for t in thetas]}")

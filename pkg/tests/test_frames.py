"""Core curves, printed frames, and the twisting normal fields."""

import numpy as np
import pytest

from maxsurf import frames
from maxsurf.lorentz import lorentz_dot

U_SAMPLES = np.linspace(-2.0, 2.0, 9)

ORTHONORMAL_FAMILIES = [
    frames.circle_timelike(),
    frames.circle_spacelike(),
    frames.helix_timelike(0.6),
    frames.helix_spacelike_i(2.0),
    frames.helix_spacelike_ii(1.0),
]


@pytest.mark.parametrize("family", ORTHONORMAL_FAMILIES,
                         ids=lambda f: f.tag)
def test_frame_is_lorentz_orthonormal(family):
    frame = frames.make_frame(family)
    t = frame.tangent(U_SAMPLES)
    n = frame.normal(U_SAMPLES)
    b = frame.binormal(U_SAMPLES)
    assert np.max(np.abs(lorentz_dot(t, t) - 1.0)) < 1e-12
    assert np.max(np.abs(lorentz_dot(t, n))) < 1e-12
    assert np.max(np.abs(lorentz_dot(t, b))) < 1e-12
    assert np.max(np.abs(lorentz_dot(n, b))) < 1e-12
    # one of n, b is timelike and the other spacelike
    nn = lorentz_dot(n, n)
    bb = lorentz_dot(b, b)
    assert np.max(np.abs(nn * bb + 1.0)) < 1e-12


def test_lightlike_frame_pairing():
    # The lightlike-axis circle has no orthonormal frame; the printed null
    # frame satisfies <n,n> = <b,b> = 0 and <n,b> = -1/2.
    frame = frames.make_frame(frames.circle_lightlike())
    n = frame.normal(U_SAMPLES)
    b = frame.binormal(U_SAMPLES)
    t = frame.tangent(U_SAMPLES)
    assert np.max(np.abs(lorentz_dot(n, n))) < 1e-12
    assert np.max(np.abs(lorentz_dot(b, b))) < 1e-12
    assert np.max(np.abs(lorentz_dot(n, b) + 0.5)) < 1e-12
    assert np.max(np.abs(lorentz_dot(t, t) - 1.0)) < 1e-12


@pytest.mark.parametrize("family", ORTHONORMAL_FAMILIES,
                         ids=lambda f: f.tag)
def test_tangent_matches_curve_derivative(family):
    curve = frames.make_curve(family)
    d = curve.d(U_SAMPLES)
    speed = np.sqrt(np.abs(lorentz_dot(d, d)))[..., None]
    t = frames.make_frame(family).tangent(U_SAMPLES)
    assert np.max(np.abs(d / speed - t)) < 1e-12


def test_curve_derivative_matches_finite_differences():
    curve = frames.make_curve(frames.helix_timelike(0.6))
    h = 1e-6
    fd = (curve(U_SAMPLES + h) - curve(U_SAMPLES - h)) / (2 * h)
    assert np.max(np.abs(fd - curve.d(U_SAMPLES))) < 1e-9


@pytest.mark.parametrize("family", ORTHONORMAL_FAMILIES,
                         ids=lambda f: f.tag)
@pytest.mark.parametrize("spec_maker", [
    lambda: frames.constant_twist(0.8),
    lambda: frames.linear_twist(0.8),
], ids=["constant", "linear"])
def test_normal_field_is_unit_timelike_and_orthogonal(family, spec_maker):
    field = frames.make_normal_field(family, spec_maker())
    V = field(U_SAMPLES)
    frame = frames.make_frame(family)
    assert np.max(np.abs(lorentz_dot(V, V) + 1.0)) < 1e-12
    assert np.max(np.abs(lorentz_dot(V, frame.tangent(U_SAMPLES)))) < 1e-12


@pytest.mark.parametrize("family,comb", [
    (frames.circle_timelike(), "sinh-normal"),
    (frames.helix_timelike(0.6), "sinh-normal"),
    (frames.helix_spacelike_i(2.0), "sinh-normal"),
    (frames.circle_spacelike(), "cosh-normal"),
    (frames.helix_spacelike_ii(1.0), "cosh-normal"),
], ids=lambda x: x if isinstance(x, str) else x.tag)
def test_twist_attaches_to_the_printed_combination(family, comb):
    a = 0.7
    field = frames.make_normal_field(family, frames.constant_twist(a))
    frame = frames.make_frame(family)
    n = frame.normal(U_SAMPLES)
    b = frame.binormal(U_SAMPLES)
    if comb == "sinh-normal":
        expected = np.sinh(a) * n + np.cosh(a) * b
    else:
        expected = np.cosh(a) * n + np.sinh(a) * b
    V = field(U_SAMPLES)
    assert np.max(np.abs(V - expected)) < 1e-12


def test_lightlike_normal_field_uses_orthonormalized_legs():
    # The null frame legs combine as e2 = n - b (spacelike) and
    # e3 = n + b (timelike); the constant twist attaches to those.
    a = 0.9
    family = frames.circle_lightlike()
    field = frames.make_normal_field(family, frames.constant_twist(a))
    frame = frames.make_frame(family)
    n = frame.normal(U_SAMPLES)
    b = frame.binormal(U_SAMPLES)
    expected = np.sinh(a) * (n - b) + np.cosh(a) * (n + b)
    V = field(U_SAMPLES)
    assert np.max(np.abs(V - expected)) < 1e-12
    assert np.max(np.abs(lorentz_dot(V, V) + 1.0)) < 1e-12
    assert np.allclose(field(np.array(0.0)), [np.sinh(a), 0.0, np.cosh(a)])


def test_circle_normal_fields_point_to_the_future():
    for family in (frames.circle_timelike(), frames.circle_spacelike(),
                   frames.circle_lightlike()):
        field = frames.make_normal_field(family, frames.constant_twist(0.5))
        assert np.all(field(U_SAMPLES)[..., 2] > 0)


def test_linear_twist_rejected_on_lightlike_circle():
    with pytest.raises(ValueError):
        frames.make_normal_field(frames.circle_lightlike(),
                                 frames.linear_twist(1.0))


def test_twist_parameter_validation():
    with pytest.raises(ValueError):
        frames.constant_twist(-0.1)
    with pytest.raises(ValueError):
        frames.linear_twist(0.0)
    frames.constant_twist(0.0)  # boundary allowed for the constant case


def test_twist_phase():
    u = np.linspace(-1, 1, 5)
    assert np.allclose(frames.constant_twist(0.7).phi(u), 0.7)
    assert np.allclose(frames.linear_twist(0.7).phi(u), 0.7 * u)


def test_helix_pitch_validation():
    with pytest.raises(ValueError):
        frames.helix_timelike(1.0)  # needs 0 < lam < 1
    with pytest.raises(ValueError):
        frames.helix_spacelike_i(1.0)  # needs lam > 1
    with pytest.raises(ValueError):
        frames.helix_spacelike_ii(0.0)  # needs lam > 0


def test_helix_speed_values():
    assert frames.helix_timelike(0.6).mu == pytest.approx(0.8)
    assert frames.helix_spacelike_i(2.0).mu == pytest.approx(np.sqrt(3.0))
    assert frames.helix_spacelike_ii(1.0).mu == pytest.approx(np.sqrt(2.0))


def test_bjorling_data_bundles_curve_and_field():
    data = frames.make_bjorling_data(frames.circle_timelike(),
                                     frames.linear_twist(1.0), u0=0.25)
    assert data.u0 == 0.25
    pt = data.alpha(np.array(0.3))
    assert np.allclose(pt, [np.cos(0.3), np.sin(0.3), 0.0])
    V = data.normal_field(np.array(0.3))
    assert abs(lorentz_dot(V, V) + 1.0) < 1e-12

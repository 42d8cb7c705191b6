"""Quasi-static motion model of a pushed rectangular slider.

The slider moves on a horizontal plane and is pushed by a circular
pusher kept on its left face (x = -a/2 in the slider frame).  Ground
friction is modelled by an ellipsoidal limit surface, so the slider's
generalized velocity is a linear image of the applied contact wrench.
The configuration is (x_s, y_s, theta, phi_c), where phi_c is the
angle locating the pusher along the contact face.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import integrate


class ModeInfeasibleError(ValueError):
    """The control matches no contact mode within tolerance."""


class ContactMode(Enum):
    STICKING = "sticking"
    SLIDING_CCW = "sliding_ccw"
    SLIDING_CW = "sliding_cw"


@dataclass(frozen=True)
class SliderState:
    """Configuration: slider pose in the global frame plus contact angle."""

    x_s: float
    y_s: float
    theta: float
    phi_c: float

    def as_array(self):
        return np.array([self.x_s, self.y_s, self.theta, self.phi_c])

    @staticmethod
    def from_array(arr):
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (4,):
            raise ValueError(f"state must have 4 entries, got shape {arr.shape}")
        return SliderState(*arr)


@dataclass(frozen=True)
class ControlInput:
    """Contact forces plus the split (nonneg.) sliding rates of phi_c."""

    f_n: float
    f_t: float
    phidot_plus: float
    phidot_minus: float

    def as_array(self):
        return np.array([self.f_n, self.f_t, self.phidot_plus, self.phidot_minus])

    @staticmethod
    def from_array(arr):
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (4,):
            raise ValueError(f"control must have 4 entries, got shape {arr.shape}")
        return ControlInput(*arr)

    @property
    def phidot(self):
        return self.phidot_plus - self.phidot_minus


@dataclass(frozen=True)
class FrictionConeEdges:
    """Distances to the two friction-cone edges; both >= 0 iff |f_t| <= mu*f_n."""

    lambda_minus: float
    lambda_plus: float

    def as_array(self):
        return np.array([self.lambda_minus, self.lambda_plus])


def limit_surface_matrix(a, b, mass, mu_g, gravity):
    """Diagonal ellipsoidal limit-surface matrix for a uniform a-by-b footprint.

    f_max is the maximum ground friction force, m_max = c*f_max the maximum
    friction moment, with c the mean distance of footprint points from the
    centroid.  Returns diag(1/f_max^2, 1/f_max^2, 1/m_max^2).
    """
    for name, val in (("a", a), ("b", b), ("mass", mass),
                      ("mu_g", mu_g), ("gravity", gravity)):
        if not np.isfinite(val) or val <= 0.0:
            raise ValueError(f"{name} must be positive and finite, got {val}")
    f_max = mu_g * mass * gravity
    # one quadrant is enough by symmetry
    integral, _ = integrate.dblquad(
        lambda y, x: np.hypot(x, y), 0.0, a / 2.0, 0.0, b / 2.0,
        epsabs=1e-12, epsrel=1e-12,
    )
    c = 4.0 * integral / (a * b)
    m_max = c * f_max
    return np.diag([1.0 / f_max**2, 1.0 / f_max**2, 1.0 / m_max**2])


def _as_float_matrix(L):
    L = np.asarray(L, dtype=float)
    if L.shape != (3, 3):
        raise ValueError("L must be 3x3")
    return L


@dataclass(frozen=True)
class PusherSliderModel:
    """Geometry, friction parameters, and limit-surface matrix.

    a, b are the slider side lengths along the local x and y axes; the
    pusher (radius r_p) acts on the face x = -a/2.  mu is pusher-slider
    friction, mu_g slider-ground friction.
    """

    a: float
    b: float
    r_p: float
    mu: float
    mu_g: float
    mass: float
    gravity: float
    L: np.ndarray = field(default=None)

    def __post_init__(self):
        for name in ("a", "b", "r_p", "mu", "mu_g", "mass", "gravity"):
            val = getattr(self, name)
            if not np.isfinite(val) or val <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {val}")
        if self.L is None:
            L = limit_surface_matrix(self.a, self.b, self.mass, self.mu_g, self.gravity)
        else:
            L = _as_float_matrix(self.L)
            if not np.allclose(L, L.T):
                raise ValueError("L must be symmetric")
            if np.any(np.linalg.eigvalsh(L) <= 0.0):
                raise ValueError("L must be positive definite")
        L = L.copy()
        L.flags.writeable = False
        object.__setattr__(self, "L", L)

    @property
    def x_contact(self):
        """x coordinate of the pusher center in the slider frame."""
        return -(self.a / 2.0 + self.r_p)

    @property
    def phi_max(self):
        """Largest |phi_c| keeping the pusher on the face, one radius away from corners."""
        return np.arctan((self.b / 2.0 - self.r_p) / (self.a / 2.0 + self.r_p))

    @staticmethod
    def paper_defaults():
        """7x12 cm slider, 1 cm pusher, mu=0.2: the numerical-experiment setup."""
        return PusherSliderModel(a=0.12, b=0.07, r_p=0.01, mu=0.2,
                                 mu_g=0.35, mass=0.8, gravity=9.81)


def rotation_matrix(theta):
    """Planar rotation acting on (v_x, v_y, omega_z): 2x2 block plus identity."""
    if not np.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def contact_point(model, phi_c, tol=1e-12):
    """Pusher-center position (x_C, y_C) in the slider frame."""
    if not np.isfinite(phi_c):
        raise ValueError(f"phi_c must be finite, got {phi_c}")
    if abs(phi_c) > model.phi_max + tol:
        raise ValueError(
            f"phi_c={phi_c} outside contact face range +/-{model.phi_max}")
    x_c = model.x_contact
    return x_c, x_c * np.tan(phi_c)


def contact_jacobian(model, phi_c):
    """Maps slider body twist (v_x, v_y, omega) to contact-point velocity."""
    x_c, y_c = contact_point(model, phi_c)
    return np.array([[1.0, 0.0, -y_c], [0.0, 1.0, x_c]])


def _check_state_control(model, state, u):
    xs = state.as_array() if isinstance(state, SliderState) else np.asarray(state, float)
    us = u.as_array() if isinstance(u, ControlInput) else np.asarray(u, float)
    if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(us)):
        raise ValueError("state and control must be finite")
    if abs(xs[3]) > model.phi_max + 1e-9:
        raise ValueError(f"phi_c={xs[3]} outside contact face range")
    if us[0] < -1e-9:
        raise ValueError(f"f_n must be nonnegative, got {us[0]}")
    return xs, us


def dynamics(model, state, u):
    """Quasi-static state rate: pose rows R*L*J_C^T*(f_n, f_t), then phi_c rate."""
    xs, us = _check_state_control(model, state, u)
    J = contact_jacobian(model, xs[3])
    wrench = J.T @ us[:2]
    vel = rotation_matrix(xs[2]) @ (model.L @ wrench)
    return np.array([vel[0], vel[1], vel[2], us[2] - us[3]])


def dynamics_jacobians(model, state, u):
    """Analytic derivatives of the state rate w.r.t. state and control."""
    xs, us = _check_state_control(model, state, u)
    theta, phi = xs[2], xs[3]
    f = us[:2]
    L = model.L
    x_c, y_c = contact_point(model, phi)
    J = np.array([[1.0, 0.0, -y_c], [0.0, 1.0, x_c]])
    R = rotation_matrix(theta)
    c, s = np.cos(theta), np.sin(theta)
    dR = np.array([[-s, -c, 0.0], [c, -s, 0.0], [0.0, 0.0, 0.0]])

    body = L @ (J.T @ f)

    jac_x = np.zeros((4, 4))
    jac_x[:3, 2] = dR @ body
    # only y_C varies with phi_c, entering through the torque row of J^T
    dy_c = x_c * (1.0 + np.tan(phi) ** 2)
    dwrench = np.array([0.0, 0.0, -dy_c * f[0]])
    jac_x[:3, 3] = R @ (L @ dwrench)

    jac_u = np.zeros((4, 4))
    jac_u[:3, :2] = R @ (L @ J.T)
    jac_u[3, 2] = 1.0
    jac_u[3, 3] = -1.0
    return jac_x, jac_u


def friction_cone_edges(model, u):
    """(mu*f_n - f_t, mu*f_n + f_t); the complementarity force variables."""
    us = u.as_array() if isinstance(u, ControlInput) else np.asarray(u, float)
    return FrictionConeEdges(model.mu * us[0] - us[1], model.mu * us[0] + us[1])


def classify_mode(model, u, tol=1e-6):
    """Assign the control to sticking or one of the sliding modes.

    Raises ModeInfeasibleError when the control satisfies none of the
    mode constraint sets within tol.
    """
    us = u.as_array() if isinstance(u, ControlInput) else np.asarray(u, float)
    if us[0] < -tol:
        raise ValueError(f"f_n must be nonnegative, got {us[0]}")
    f_n, f_t = us[0], us[1]
    phidot = us[2] - us[3]
    if abs(phidot) <= tol and abs(f_t) <= model.mu * f_n + tol:
        return ContactMode.STICKING
    if phidot > tol and abs(f_t - model.mu * f_n) <= tol:
        return ContactMode.SLIDING_CCW
    if phidot < -tol and abs(f_t + model.mu * f_n) <= tol:
        return ContactMode.SLIDING_CW
    raise ModeInfeasibleError(
        f"control {tuple(us)} matches no contact mode at tol={tol}")

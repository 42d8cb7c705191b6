"""Pure-numpy implementation of the batched evaluation kernels.

Fallback backend used when the compiled extension is unavailable.  The
signatures mirror pushmpcc._kernels._core exactly; states and controls
are (n, 4) float64 arrays, L is the 3x3 limit-surface matrix, and
x_contact is the (constant) pusher-center x coordinate in the slider
frame.
"""

import numpy as np

BACKEND_NAME = "python"


def dynamics_batch(x_contact, L, states, controls):
    """Quasi-static state rates for n (state, control) pairs; returns (n, 4)."""
    theta = states[:, 2]
    phi = states[:, 3]
    y_c = x_contact * np.tan(phi)
    f_n = controls[:, 0]
    f_t = controls[:, 1]
    tau = np.empty((states.shape[0], 3))
    tau[:, 0] = f_n
    tau[:, 1] = f_t
    tau[:, 2] = -y_c * f_n + x_contact * f_t
    body = tau @ L.T
    c, s = np.cos(theta), np.sin(theta)
    out = np.empty_like(states)
    out[:, 0] = c * body[:, 0] - s * body[:, 1]
    out[:, 1] = s * body[:, 0] + c * body[:, 1]
    out[:, 2] = body[:, 2]
    out[:, 3] = controls[:, 2] - controls[:, 3]
    return out


def dynamics_jacobians_batch(x_contact, L, states, controls):
    """Analytic (d xdot/d x, d xdot/d u) stacks of shape (n, 4, 4)."""
    n = states.shape[0]
    theta = states[:, 2]
    phi = states[:, 3]
    tan_phi = np.tan(phi)
    y_c = x_contact * tan_phi
    f_n = controls[:, 0]
    f_t = controls[:, 1]
    c, s = np.cos(theta), np.sin(theta)

    tau = np.empty((n, 3))
    tau[:, 0] = f_n
    tau[:, 1] = f_t
    tau[:, 2] = -y_c * f_n + x_contact * f_t
    body = tau @ L.T

    jx = np.zeros((n, 4, 4))
    jx[:, 0, 2] = -s * body[:, 0] - c * body[:, 1]
    jx[:, 1, 2] = c * body[:, 0] - s * body[:, 1]
    dm = -(x_contact * (1.0 + tan_phi**2)) * f_n
    dbody = dm[:, None] * L[:, 2][None, :]
    jx[:, 0, 3] = c * dbody[:, 0] - s * dbody[:, 1]
    jx[:, 1, 3] = s * dbody[:, 0] + c * dbody[:, 1]
    jx[:, 2, 3] = dbody[:, 2]

    ju = np.zeros((n, 4, 4))
    b_n = L[:, 0][None, :] - y_c[:, None] * L[:, 2][None, :]
    b_t = L[:, 1] + x_contact * L[:, 2]
    ju[:, 0, 0] = c * b_n[:, 0] - s * b_n[:, 1]
    ju[:, 1, 0] = s * b_n[:, 0] + c * b_n[:, 1]
    ju[:, 2, 0] = b_n[:, 2]
    ju[:, 0, 1] = c * b_t[0] - s * b_t[1]
    ju[:, 1, 1] = s * b_t[0] + c * b_t[1]
    ju[:, 2, 1] = b_t[2]
    ju[:, 3, 2] = 1.0
    ju[:, 3, 3] = -1.0
    return jx, ju

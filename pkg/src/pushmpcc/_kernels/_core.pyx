# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched evaluation kernels (hot path of the transcription)."""

import numpy as np

from libc.math cimport cos, sin, tan

BACKEND_NAME = "compiled"


def dynamics_batch(double x_contact, L_arr, states, controls):
    """Quasi-static state rates for n (state, control) pairs; returns (n, 4)."""
    cdef const double[:, ::1] L = np.ascontiguousarray(L_arr)
    cdef const double[:, ::1] X = np.ascontiguousarray(states)
    cdef const double[:, ::1] U = np.ascontiguousarray(controls)
    cdef Py_ssize_t n = X.shape[0]
    out = np.empty((n, 4))
    cdef double[:, ::1] F = out
    cdef Py_ssize_t i
    cdef double th, phi, y_c, fn, ft, t2, b0, b1, b2, c, s
    for i in range(n):
        th = X[i, 2]
        phi = X[i, 3]
        y_c = x_contact * tan(phi)
        fn = U[i, 0]
        ft = U[i, 1]
        t2 = -y_c * fn + x_contact * ft
        b0 = L[0, 0] * fn + L[0, 1] * ft + L[0, 2] * t2
        b1 = L[1, 0] * fn + L[1, 1] * ft + L[1, 2] * t2
        b2 = L[2, 0] * fn + L[2, 1] * ft + L[2, 2] * t2
        c = cos(th)
        s = sin(th)
        F[i, 0] = c * b0 - s * b1
        F[i, 1] = s * b0 + c * b1
        F[i, 2] = b2
        F[i, 3] = U[i, 2] - U[i, 3]
    return out


def dynamics_jacobians_batch(double x_contact, L_arr, states, controls):
    """Analytic (d xdot/d x, d xdot/d u) stacks of shape (n, 4, 4)."""
    cdef const double[:, ::1] L = np.ascontiguousarray(L_arr)
    cdef const double[:, ::1] X = np.ascontiguousarray(states)
    cdef const double[:, ::1] U = np.ascontiguousarray(controls)
    cdef Py_ssize_t n = X.shape[0]
    jx_arr = np.zeros((n, 4, 4))
    ju_arr = np.zeros((n, 4, 4))
    cdef double[:, :, ::1] JX = jx_arr
    cdef double[:, :, ::1] JU = ju_arr
    cdef Py_ssize_t i
    cdef double th, phi, tphi, y_c, fn, ft, t2, b0, b1, c, s
    cdef double dm, db0, db1, db2, bn0, bn1, bn2, bt0, bt1, bt2
    bt0 = L[0, 1] + x_contact * L[0, 2]
    bt1 = L[1, 1] + x_contact * L[1, 2]
    bt2 = L[2, 1] + x_contact * L[2, 2]
    for i in range(n):
        th = X[i, 2]
        phi = X[i, 3]
        tphi = tan(phi)
        y_c = x_contact * tphi
        fn = U[i, 0]
        ft = U[i, 1]
        t2 = -y_c * fn + x_contact * ft
        b0 = L[0, 0] * fn + L[0, 1] * ft + L[0, 2] * t2
        b1 = L[1, 0] * fn + L[1, 1] * ft + L[1, 2] * t2
        c = cos(th)
        s = sin(th)
        JX[i, 0, 2] = -s * b0 - c * b1
        JX[i, 1, 2] = c * b0 - s * b1
        dm = -(x_contact * (1.0 + tphi * tphi)) * fn
        db0 = dm * L[0, 2]
        db1 = dm * L[1, 2]
        db2 = dm * L[2, 2]
        JX[i, 0, 3] = c * db0 - s * db1
        JX[i, 1, 3] = s * db0 + c * db1
        JX[i, 2, 3] = db2
        bn0 = L[0, 0] - y_c * L[0, 2]
        bn1 = L[1, 0] - y_c * L[1, 2]
        bn2 = L[2, 0] - y_c * L[2, 2]
        JU[i, 0, 0] = c * bn0 - s * bn1
        JU[i, 1, 0] = s * bn0 + c * bn1
        JU[i, 2, 0] = bn2
        JU[i, 0, 1] = c * bt0 - s * bt1
        JU[i, 1, 1] = s * bt0 + c * bt1
        JU[i, 2, 1] = bt2
        JU[i, 3, 2] = 1.0
        JU[i, 3, 3] = -1.0
    return jx_arr, ju_arr

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled fixed-step RK4 kernels for the structured amplitude forms.

Mirrors ptjc.kernels.rk4_form_pure; see that module for the form codes
and coefficient layouts.  Kept free of numpy C headers on purpose: the
only interface is typed memoryviews over caller-allocated buffers.
"""
from libc.math cimport cos, sin

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)

ctypedef double complex cplx

cdef enum Form:
    FORM_STATIC = 0
    FORM_LAB_ATOM = 1
    FORM_LAB_CAVITY = 2
    FORM_GAUGED_ATOM = 3
    FORM_GAUGED_CAVITY = 4


cdef inline void _rhs(int form, const cplx* coef, double t, cplx c, cplx d,
                      cplx* dc, cplx* dd) noexcept nogil:
    cdef cplx kappa, w0t, wt, phi, psi, kick
    cdef double n, cosw
    cdef cplx I = 1j
    if form == FORM_STATIC:
        kappa = coef[0]
        dc[0] = -I * kappa * d
        dd[0] = -I * kappa * c
    elif form == FORM_LAB_ATOM:
        w0t = coef[0].real * (1.0 + coef[2] * cos(coef[3].real * t))
        n = coef[5].real
        kappa = coef[4]
        dc[0] = -I * ((w0t / 2.0 + coef[1].real * (n - 1.0)) * c + kappa * d)
        dd[0] = -I * ((n * coef[1].real - w0t / 2.0) * d + kappa * c)
    elif form == FORM_LAB_CAVITY:
        wt = coef[1].real * (1.0 + coef[2] * cos(coef[3].real * t))
        n = coef[5].real
        kappa = coef[4]
        dc[0] = -I * ((coef[0].real / 2.0 + wt * (n - 1.0)) * c + kappa * d)
        dd[0] = -I * ((n * wt - coef[0].real / 2.0) * d + kappa * c)
    elif form == FORM_GAUGED_ATOM:
        phi = coef[1] * sin(coef[3].real * t)
        kick = I * (coef[0].real * t) + I * phi
        kappa = coef[4]
        dc[0] = -I * kappa * cexp(kick) * d
        dd[0] = -I * (-coef[2] * cos(coef[3].real * t) * d + kappa * cexp(-kick) * c)
    else:
        psi = coef[1] * sin(coef[4].real * t)
        kick = I * (coef[0].real * t) + I * psi
        cosw = cos(coef[4].real * t)
        kappa = coef[5]
        dc[0] = -I * (coef[2] * cosw * c + kappa * cexp(kick) * d)
        dd[0] = -I * (coef[3] * cosw * d + kappa * cexp(-kick) * c)


def rk4_trajectory(int form, cplx[::1] coef, cplx c0, cplx d0,
                   double t0, double h, Py_ssize_t n_full, double tail,
                   cplx[::1] out_c, cplx[::1] out_d):
    """Fill out_c/out_d with the RK4 trajectory of the given form."""
    cdef cplx c = c0
    cdef cplx d = d0
    cdef cplx k1c, k1d, k2c, k2d, k3c, k3d, k4c, k4d
    cdef double t, dt
    cdef Py_ssize_t k, idx
    cdef const cplx* cf = &coef[0]
    out_c[0] = c
    out_d[0] = d
    idx = 1
    with nogil:
        for k in range(n_full):
            t = t0 + k * h
            _rhs(form, cf, t, c, d, &k1c, &k1d)
            _rhs(form, cf, t + h / 2.0, c + (h / 2.0) * k1c, d + (h / 2.0) * k1d, &k2c, &k2d)
            _rhs(form, cf, t + h / 2.0, c + (h / 2.0) * k2c, d + (h / 2.0) * k2d, &k3c, &k3d)
            _rhs(form, cf, t + h, c + h * k3c, d + h * k3d, &k4c, &k4d)
            c = c + (h / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
            d = d + (h / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
            out_c[idx] = c
            out_d[idx] = d
            idx += 1
        if tail > 0.0:
            t = t0 + n_full * h
            dt = tail
            _rhs(form, cf, t, c, d, &k1c, &k1d)
            _rhs(form, cf, t + dt / 2.0, c + (dt / 2.0) * k1c, d + (dt / 2.0) * k1d, &k2c, &k2d)
            _rhs(form, cf, t + dt / 2.0, c + (dt / 2.0) * k2c, d + (dt / 2.0) * k2d, &k3c, &k3d)
            _rhs(form, cf, t + dt, c + dt * k3c, d + dt * k3d, &k4c, &k4d)
            out_c[idx] = c + (dt / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
            out_d[idx] = d + (dt / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)

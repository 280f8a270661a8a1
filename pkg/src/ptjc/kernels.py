"""Integration backends: compiled RK4 kernels with a pure Python twin.

The amplitude equations used throughout the package reduce to five
structured right-hand-side forms.  Each form is identified by a small
integer and a flat complex coefficient vector, so the hot RK4 loop can
run either in the optional Cython extension (``ptjc._rk4``) or in the
pure Python twin below, selected once at import time.

Set ``PTJC_FORCE_PURE=1`` in the environment to ignore the compiled
module even when it is installed.

Coefficient layouts (all entries complex; reals carried in .real):

===============  ====================================================
form             coefficients
===============  ====================================================
FORM_STATIC      [kappa]
FORM_LAB_ATOM    [omega0, omega, beta, big_omega, kappa, n]
FORM_LAB_CAVITY  [omega0, omega, beta, big_omega, kappa, n]
FORM_GAUGED_ATOM [delta, gamma0, mod_amp, big_omega, kappa]
FORM_GAUGED_CAV  [delta, psi_amp, diag_c, diag_d, big_omega, kappa]
===============  ====================================================

with kappa = g sqrt(n), gamma0 = omega0 beta / (2 Omega),
mod_amp = omega0 beta / 2, psi_amp = n omega beta / Omega,
diag_c = -omega beta, diag_d = n omega beta.
"""
from __future__ import annotations

import cmath
import math
import os

import numpy as np

FORM_STATIC = 0
FORM_LAB_ATOM = 1
FORM_LAB_CAVITY = 2
FORM_GAUGED_ATOM = 3
FORM_GAUGED_CAVITY = 4

_FORCE_PURE = os.environ.get("PTJC_FORCE_PURE", "") not in ("", "0")

try:
    from . import _rk4 as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

HAVE_COMPILED = _compiled is not None


def active_backend() -> str:
    """Backend integrate() uses when none is requested explicitly."""
    if _FORCE_PURE or not HAVE_COMPILED:
        return "pure"
    return "compiled"


def rhs_eval(form: int, coef, t: float, c: complex, d: complex) -> tuple[complex, complex]:
    """Evaluate one structured right-hand side at (t, c, d)."""
    if form == FORM_STATIC:
        kappa = coef[0]
        return -1j * kappa * d, -1j * kappa * c
    if form == FORM_LAB_ATOM:
        omega0, omega, beta, big_omega, kappa, nn = coef[:6]
        w0t = omega0.real * (1.0 + beta * math.cos(big_omega.real * t))
        n = nn.real
        dc = -1j * ((w0t / 2.0 + omega.real * (n - 1.0)) * c + kappa * d)
        dd = -1j * ((n * omega.real - w0t / 2.0) * d + kappa * c)
        return dc, dd
    if form == FORM_LAB_CAVITY:
        omega0, omega, beta, big_omega, kappa, nn = coef[:6]
        wt = omega.real * (1.0 + beta * math.cos(big_omega.real * t))
        n = nn.real
        dc = -1j * ((omega0.real / 2.0 + wt * (n - 1.0)) * c + kappa * d)
        dd = -1j * ((n * wt - omega0.real / 2.0) * d + kappa * c)
        return dc, dd
    if form == FORM_GAUGED_ATOM:
        delta, gamma0, mod_amp, big_omega, kappa = coef[:5]
        phi = gamma0 * math.sin(big_omega.real * t)
        kick = 1j * (delta.real * t) + 1j * phi
        dc = -1j * kappa * cmath.exp(kick) * d
        dd = -1j * (-mod_amp * math.cos(big_omega.real * t) * d
                    + kappa * cmath.exp(-kick) * c)
        return dc, dd
    if form == FORM_GAUGED_CAVITY:
        delta, psi_amp, diag_c, diag_d, big_omega, kappa = coef[:6]
        psi = psi_amp * math.sin(big_omega.real * t)
        kick = 1j * (delta.real * t) + 1j * psi
        cosw = math.cos(big_omega.real * t)
        dc = -1j * (diag_c * cosw * c + kappa * cmath.exp(kick) * d)
        dd = -1j * (diag_d * cosw * d + kappa * cmath.exp(-kick) * c)
        return dc, dd
    raise ValueError(f"unknown rhs form {form}")


def rk4_form_pure(form: int, coef: np.ndarray, c0: complex, d0: complex,
                  t0: float, h: float, n_full: int, tail: float,
                  out_c: np.ndarray, out_d: np.ndarray) -> None:
    """Fixed-step RK4 over a structured form; pure Python reference.

    Records the state after every step into out_c/out_d (index 0 holds
    the initial state); a positive ``tail`` appends one shortened step
    landing exactly on the final time.
    """
    coef = tuple(complex(x) for x in coef)
    c, d = complex(c0), complex(d0)
    out_c[0] = c
    out_d[0] = d
    idx = 1
    for k in range(n_full):
        t = t0 + k * h
        k1c, k1d = rhs_eval(form, coef, t, c, d)
        k2c, k2d = rhs_eval(form, coef, t + h / 2.0, c + (h / 2.0) * k1c, d + (h / 2.0) * k1d)
        k3c, k3d = rhs_eval(form, coef, t + h / 2.0, c + (h / 2.0) * k2c, d + (h / 2.0) * k2d)
        k4c, k4d = rhs_eval(form, coef, t + h, c + h * k3c, d + h * k3d)
        c = c + (h / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        d = d + (h / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
        out_c[idx] = c
        out_d[idx] = d
        idx += 1
    if tail > 0.0:
        t = t0 + n_full * h
        k1c, k1d = rhs_eval(form, coef, t, c, d)
        k2c, k2d = rhs_eval(form, coef, t + tail / 2.0, c + (tail / 2.0) * k1c, d + (tail / 2.0) * k1d)
        k3c, k3d = rhs_eval(form, coef, t + tail / 2.0, c + (tail / 2.0) * k2c, d + (tail / 2.0) * k2d)
        k4c, k4d = rhs_eval(form, coef, t + tail, c + tail * k3c, d + tail * k3d)
        out_c[idx] = c + (tail / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        out_d[idx] = d + (tail / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)


def rk4_form(form: int, coef: np.ndarray, c0: complex, d0: complex,
             t0: float, h: float, n_full: int, tail: float,
             backend: str) -> tuple[np.ndarray, np.ndarray]:
    """Run one structured RK4 trajectory on the requested backend."""
    n_out = n_full + 1 + (1 if tail > 0.0 else 0)
    out_c = np.empty(n_out, dtype=complex)
    out_d = np.empty(n_out, dtype=complex)
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise ValueError("compiled backend requested but ptjc._rk4 is not available")
        _compiled.rk4_trajectory(form, np.ascontiguousarray(coef, dtype=complex),
                                 complex(c0), complex(d0), float(t0), float(h),
                                 int(n_full), float(tail), out_c, out_d)
    elif backend == "pure":
        rk4_form_pure(form, coef, c0, d0, t0, h, n_full, tail, out_c, out_d)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return out_c, out_d


def rk4_generic(rhs, c0: complex, d0: complex, t0: float, h: float,
                n_full: int, tail: float) -> tuple[np.ndarray, np.ndarray]:
    """Fixed-step RK4 for an arbitrary callable rhs(t, c, d) -> (dc, dd)."""
    n_out = n_full + 1 + (1 if tail > 0.0 else 0)
    out_c = np.empty(n_out, dtype=complex)
    out_d = np.empty(n_out, dtype=complex)
    c, d = complex(c0), complex(d0)
    out_c[0] = c
    out_d[0] = d
    idx = 1
    steps = [h] * n_full + ([tail] if tail > 0.0 else [])
    for k, dt in enumerate(steps):
        t = t0 + k * h
        k1c, k1d = rhs(t, c, d)
        k2c, k2d = rhs(t + dt / 2.0, c + (dt / 2.0) * k1c, d + (dt / 2.0) * k1d)
        k3c, k3d = rhs(t + dt / 2.0, c + (dt / 2.0) * k2c, d + (dt / 2.0) * k2d)
        k4c, k4d = rhs(t + dt, c + dt * k3c, d + dt * k3d)
        c = c + (dt / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        d = d + (dt / 6.0) * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)
        out_c[idx] = c
        out_d[idx] = d
        idx += 1
    return out_c, out_d

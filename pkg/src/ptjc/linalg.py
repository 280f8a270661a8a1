"""Dense Hermitian eigensolver and matrix exponential.

Two self-contained kernels back the truncated-Fock diagnostics:

* a cyclic Jacobi iteration for complex Hermitian matrices (unitary
  2x2 rotations with a phase, classical row/column updates), and
* a scaling-and-squaring matrix exponential with a fixed-order [6/6]
  diagonal Pade approximant.

No general non-symmetric eigensolver lives here on purpose: spectra of
non-Hermitian operators are obtained elsewhere by similarity transport
of Hermitian eigenpairs, never by direct dense iteration.
"""
from __future__ import annotations

import math

import numpy as np

# Relative off-diagonal Frobenius mass at which Jacobi stops.
JACOBI_REL_TOL = 1e-14

JACOBI_MAX_SWEEPS = 100

# Scaled-norm threshold for the Pade step; |A|_1 / 2^s <= this.
_PADE_THETA = 0.5

# [6/6] diagonal Pade coefficients of exp(x).
_PADE_B = (1.0, 1.0 / 2.0, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0)

HERMITICITY_TOL = 1e-13


class JacobiConvergenceError(ArithmeticError):
    """Raised when the sweep budget is exhausted."""


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(a: np.ndarray, max_sweeps: int = JACOBI_MAX_SWEEPS,
                rel_tol: float = JACOBI_REL_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Returns (eigenvalues ascending, unitary eigenvector columns).  The
    input must be Hermitian to HERMITICITY_TOL; each rotation zeroes one
    off-diagonal pair exactly, and the iteration stops once the
    off-diagonal Frobenius mass drops below rel_tol times the matrix
    norm.  Exhausting ``max_sweeps`` raises JacobiConvergenceError.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    herm_defect = float(np.abs(a - a.conj().T).max()) if n else 0.0
    if herm_defect > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {herm_defect:.3e})")
    w = a.copy()
    # Symmetrize exactly so rotations keep the Hermitian structure.
    w = (w + w.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(w))
    if scale == 0.0 or n == 1:
        vals = np.real(np.diag(w))
        order = np.argsort(vals, kind="stable")
        return vals[order], v[:, order]
    for _ in range(max_sweeps):
        if _offdiag_norm(w) <= rel_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                mag = abs(apq)
                if mag <= rel_tol * scale / n:
                    continue
                phase = apq / mag
                app = w[p, p].real
                aqq = w[q, q].real
                tau = (app - aqq) / (2.0 * mag)
                if tau >= 0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # Unitary rotation R: R[p,p]=R[q,q]=c, R[p,q]=-s*phase,
                # R[q,p]=s*conj(phase); W <- R^H W R zeroes (p, q).
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p + s * np.conj(phase) * col_q
                w[:, q] = -s * phase * col_p + c * col_q
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                w[p, :] = c * row_p + s * phase * row_q
                w[q, :] = -s * np.conj(phase) * row_p + c * row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = w[p, p].real
                w[q, q] = w[q, q].real
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p + s * np.conj(phase) * vcol_q
                v[:, q] = -s * phase * vcol_p + c * vcol_q
    else:
        raise JacobiConvergenceError(
            f"Jacobi did not converge in {max_sweeps} sweeps "
            f"(off-diagonal mass {_offdiag_norm(w):.3e})"
        )
    vals = np.real(np.diag(w))
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]


def expm_pade(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring with [6/6] Pade.

    The argument is scaled by 2^-s until its 1-norm is at most 0.5,
    the fixed-order diagonal approximant is evaluated with a single
    dense solve, and the result is squared s times.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    norm1 = float(np.linalg.norm(a, 1)) if n else 0.0
    if norm1 == 0.0:
        return np.eye(n, dtype=complex)
    s = max(0, int(math.ceil(math.log2(norm1 / _PADE_THETA))))
    x = a / (2.0 ** s)
    x2 = x @ x
    x4 = x2 @ x2
    b = _PADE_B
    ident = np.eye(n, dtype=complex)
    u = x @ (b[1] * ident + b[3] * x2 + b[5] * x4)
    w = b[0] * ident + b[2] * x2 + b[4] * x4 + b[6] * (x4 @ x2)
    r = np.linalg.solve(w - u, w + u)
    for _ in range(s):
        r = r @ r
    return r


def one_norm_condition_estimate(m: np.ndarray, m_inv: np.ndarray) -> float:
    """Cheap conditioning estimate ||M||_1 * ||M^-1||_1."""
    return float(np.linalg.norm(m, 1) * np.linalg.norm(m_inv, 1))

"""Amplitude dynamics of the driven two-state blocks in three frames.

Within one excitation block the state is a pair of complex amplitudes
(c, d) multiplying (|n-1,1>, |n,0>).  Three reference frames are used:

* Lab: the raw Schrodinger amplitudes with the full time-dependent
  diagonal.
* Interaction: the static part of the diagonal is absorbed into phases
  exp(+i [omega0/2 + omega (n-1)] t) on c and
  exp(+i [n omega - omega0/2] t) on d.
* Gauged: the oscillating part of c's diagonal is absorbed as well,
  c_gauged = c_int * exp(+i phase) with phase = (omega0 beta / 2 Omega)
  sin(Omega t) for atom-frequency drive and (n omega beta / Omega)
  sin(Omega t) for cavity-frequency drive.  The gauged d equation keeps
  its oscillating diagonal term; the pair of gauged equations and this
  map are mutually consistent (the frame-consistency test in the suite
  checks exactly that), which pins the sign of the exponent.

States carry an explicit frame tag and the maps refuse mismatched
input rather than silently composing wrong phases.

Integration is classical fixed-step RK4, deterministic, with the final
step shortened to land exactly on the requested end time.  Structured
right-hand sides (built by the bind_* helpers) dispatch to the compiled
kernel when it is available; arbitrary callables always use the pure
path.
"""
from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from . import kernels
from .bessel import bessel_j0
from .jc import JcParams

# Relative slack when deciding whether the final partial step exists.
_TAIL_REL_TOL = 1e-12

# Default number of steps per fastest period in suggested_step().
DEFAULT_STEPS_PER_PERIOD = 400

TRAJECTORY_CSV_HEADER = "t,re_c,im_c,re_d,im_d,frame,n"


class FrameMismatchError(TypeError):
    """Raised when a state is used in a frame it is not tagged for."""


class IntegrationError(RuntimeError):
    """Raised when amplitudes stop being finite during integration."""


class OffResonanceWarning(UserWarning):
    """Averaged equations evaluated away from their resonant derivation."""


class ModulationTarget(enum.Enum):
    ATOM_FREQUENCY = "atom"
    CAVITY_FREQUENCY = "cavity"


class Frame(enum.Enum):
    LAB = "lab"
    INTERACTION = "interaction"
    GAUGED = "gauged"


@dataclass(frozen=True)
class ModulationSpec:
    """Which frequency is driven, with what depth and drive frequency."""

    target: ModulationTarget
    beta: complex
    big_omega: float

    def __post_init__(self):
        b = complex(self.beta)
        if not (math.isfinite(b.real) and math.isfinite(b.imag)):
            raise ValueError(f"beta must be finite, got {self.beta!r}")
        object.__setattr__(self, "beta", b)
        if not (self.big_omega > 0 and math.isfinite(self.big_omega)):
            raise ValueError(f"big_omega must be positive, got {self.big_omega}")


@dataclass(frozen=True)
class AmplitudeState:
    """Two complex amplitudes in a tagged frame."""

    n: int
    c: complex
    d: complex
    frame: Frame

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for name in ("c", "d"):
            z = complex(getattr(self, name))
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"{name} must be finite, got {z!r}")
            object.__setattr__(self, name, z)


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled amplitude time series in one frame.

    ``times`` advances in steps of ``step`` except possibly the final
    interval, which may be shorter when the integration end time is not
    an integer number of steps away from the start.
    """

    times: np.ndarray
    c: np.ndarray
    d: np.ndarray
    frame: Frame
    n: int
    step: float

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if t.ndim != 1 or len(t) < 1:
            raise ValueError("times must be a non-empty 1-d sequence")
        if len(self.c) != len(t) or len(self.d) != len(t):
            raise ValueError("times, c, d must have equal lengths")
        dt = np.diff(t)
        if len(dt):
            if not np.all(dt > 0):
                raise ValueError("times must be strictly increasing")
            scale = max(abs(t[0]), abs(t[-1]), 1.0)
            if len(dt) > 1 and np.abs(dt[:-1] - self.step).max() > 1e-12 * scale:
                raise ValueError("interior spacing must equal step")
            if dt[-1] > self.step + 1e-12 * scale:
                raise ValueError("final spacing may not exceed step")

    def __len__(self) -> int:
        return len(self.times)

    def state_at(self, i: int) -> AmplitudeState:
        return AmplitudeState(n=self.n, c=complex(self.c[i]), d=complex(self.d[i]),
                              frame=self.frame)

    def states(self):
        for i in range(len(self)):
            yield self.state_at(i)


@dataclass(frozen=True)
class BoundRhs:
    """A structured right-hand side: form code + coefficients + frame.

    Callable as rhs(t, c, d) -> (dc, dd); integrate() additionally uses
    the form code to route the whole loop into the compiled kernel.
    ``frame`` is None for frame-agnostic systems (static/averaged).
    """

    form: int
    coef: np.ndarray
    frame: Optional[Frame]
    n: int

    def __call__(self, t: float, c: complex, d: complex) -> tuple[complex, complex]:
        return kernels.rhs_eval(self.form, self.coef, t, c, d)


RhsLike = Union[BoundRhs, Callable[[float, complex, complex], tuple[complex, complex]]]


def _require_frame(state: AmplitudeState, frame: Frame, op: str) -> None:
    if state.frame is not frame:
        raise FrameMismatchError(f"{op} expects a {frame.value}-frame state, got {state.frame.value}")


def _require_real_coupling(params: JcParams, op: str) -> float:
    g = complex(params.coupling)
    if g.imag != 0.0:
        raise ValueError(f"{op} requires real coupling (Hermitian driven model), got {params.coupling!r}")
    return g.real


# ---------------------------------------------------------------------------
# Frame maps


def _interaction_phases(params: JcParams, n: int, t: float) -> tuple[complex, complex]:
    ph_c = cmath.exp(1j * (params.omega0 / 2.0 + params.omega * (n - 1)) * t)
    ph_d = cmath.exp(1j * (n * params.omega - params.omega0 / 2.0) * t)
    return ph_c, ph_d


def to_interaction(state: AmplitudeState, params: JcParams, t: float) -> AmplitudeState:
    """Lab -> interaction frame at time t."""
    _require_frame(state, Frame.LAB, "to_interaction")
    ph_c, ph_d = _interaction_phases(params, state.n, t)
    return AmplitudeState(n=state.n, c=state.c * ph_c, d=state.d * ph_d,
                          frame=Frame.INTERACTION)


def from_interaction(state: AmplitudeState, params: JcParams, t: float) -> AmplitudeState:
    """Interaction -> lab frame at time t (exact inverse of to_interaction)."""
    _require_frame(state, Frame.INTERACTION, "from_interaction")
    ph_c, ph_d = _interaction_phases(params, state.n, t)
    return AmplitudeState(n=state.n, c=state.c / ph_c, d=state.d / ph_d,
                          frame=Frame.LAB)


def gauge_phase(params: JcParams, mod: ModulationSpec, n: int, t: float) -> complex:
    """The oscillating phase absorbed by the gauged frame (complex for complex beta)."""
    if mod.target is ModulationTarget.ATOM_FREQUENCY:
        amp = params.omega0 * mod.beta / (2.0 * mod.big_omega)
    else:
        amp = n * params.omega * mod.beta / mod.big_omega
    return amp * math.sin(mod.big_omega * t)


def to_gauged(state: AmplitudeState, mod: ModulationSpec, params: JcParams,
              t: float) -> AmplitudeState:
    """Interaction -> gauged frame: c picks up exp(+i phase), d is untouched."""
    _require_frame(state, Frame.INTERACTION, "to_gauged")
    factor = cmath.exp(1j * gauge_phase(params, mod, state.n, t))
    return AmplitudeState(n=state.n, c=state.c * factor, d=state.d, frame=Frame.GAUGED)


def from_gauged(state: AmplitudeState, mod: ModulationSpec, params: JcParams,
                t: float) -> AmplitudeState:
    """Gauged -> interaction frame; divides by the exact same factor."""
    _require_frame(state, Frame.GAUGED, "from_gauged")
    factor = cmath.exp(1j * gauge_phase(params, mod, state.n, t))
    return AmplitudeState(n=state.n, c=state.c / factor, d=state.d,
                          frame=Frame.INTERACTION)


# ---------------------------------------------------------------------------
# Right-hand sides (public one-shot builders over the kernel forms)


def bind_lab_rhs(params: JcParams, mod: ModulationSpec, n: int) -> BoundRhs:
    g = _require_real_coupling(params, "rhs_lab")
    kappa = g * math.sqrt(n)
    form = (kernels.FORM_LAB_ATOM if mod.target is ModulationTarget.ATOM_FREQUENCY
            else kernels.FORM_LAB_CAVITY)
    coef = np.array([params.omega0, params.omega, mod.beta, mod.big_omega,
                     kappa, float(n)], dtype=complex)
    return BoundRhs(form=form, coef=coef, frame=Frame.LAB, n=n)


def bind_gauged_rhs(params: JcParams, mod: ModulationSpec, n: int) -> BoundRhs:
    g = _require_real_coupling(params, "rhs_gauged")
    kappa = g * math.sqrt(n)
    delta = params.detuning()
    if mod.target is ModulationTarget.ATOM_FREQUENCY:
        gamma0 = params.omega0 * mod.beta / (2.0 * mod.big_omega)
        mod_amp = params.omega0 * mod.beta / 2.0
        coef = np.array([delta, gamma0, mod_amp, mod.big_omega, kappa], dtype=complex)
        return BoundRhs(form=kernels.FORM_GAUGED_ATOM, coef=coef, frame=Frame.GAUGED, n=n)
    psi_amp = n * params.omega * mod.beta / mod.big_omega
    diag_c = -params.omega * mod.beta
    diag_d = n * params.omega * mod.beta
    coef = np.array([delta, psi_amp, diag_c, diag_d, mod.big_omega, kappa], dtype=complex)
    return BoundRhs(form=kernels.FORM_GAUGED_CAVITY, coef=coef, frame=Frame.GAUGED, n=n)


def bind_static_rhs(params: JcParams, n: int) -> BoundRhs:
    kappa = params.coupling * math.sqrt(n)
    coef = np.array([kappa], dtype=complex)
    return BoundRhs(form=kernels.FORM_STATIC, coef=coef, frame=None, n=n)


def averaged_effective_coupling(params: JcParams, mod: ModulationSpec,
                                n: int) -> complex:
    """g J0(-omega0 beta / 2 Omega) or g J0(-n omega beta / Omega).

    The J0 argument is the amplitude of the phase the gauged frame
    absorbed; by evenness of J0 its sign is immaterial.
    """
    g = _require_real_coupling(params, "rhs_averaged")
    if mod.target is ModulationTarget.ATOM_FREQUENCY:
        arg = -params.omega0 * mod.beta / (2.0 * mod.big_omega)
    else:
        arg = -n * params.omega * mod.beta / mod.big_omega
    return g * bessel_j0(arg)


def bind_averaged_rhs(params: JcParams, mod: ModulationSpec, n: int) -> BoundRhs:
    if params.detuning() != 0.0:
        warnings.warn(
            "averaged equations are derived at resonance; omega0 != omega here",
            OffResonanceWarning,
            stacklevel=2,
        )
    g_eff = averaged_effective_coupling(params, mod, n)
    coef = np.array([g_eff * math.sqrt(n)], dtype=complex)
    return BoundRhs(form=kernels.FORM_STATIC, coef=coef, frame=Frame.GAUGED, n=n)


def rhs_lab(params: JcParams, mod: ModulationSpec, state: AmplitudeState,
            t: float) -> tuple[complex, complex]:
    """Lab-frame Schrodinger right-hand side with the driven diagonal."""
    _require_frame(state, Frame.LAB, "rhs_lab")
    return bind_lab_rhs(params, mod, state.n)(t, state.c, state.d)


def rhs_gauged(params: JcParams, mod: ModulationSpec, state: AmplitudeState,
               t: float) -> tuple[complex, complex]:
    """Gauged-frame equations; d keeps its oscillating diagonal term."""
    _require_frame(state, Frame.GAUGED, "rhs_gauged")
    return bind_gauged_rhs(params, mod, state.n)(t, state.c, state.d)


def rhs_averaged(params: JcParams, mod: ModulationSpec, state: AmplitudeState,
                 t: float) -> tuple[complex, complex]:
    """Drive-period-averaged equations: static form with g -> g J0(...)."""
    _require_frame(state, Frame.GAUGED, "rhs_averaged")
    return bind_averaged_rhs(params, mod, state.n)(t, state.c, state.d)


def rhs_static(params: JcParams, n: int, state: AmplitudeState,
               t: float = 0.0) -> tuple[complex, complex]:
    """Static (possibly non-Hermitian) coupling-only equations.

    dc = -i g_s sqrt(n) d, dd = -i g_s sqrt(n) c; frame-agnostic.
    """
    return bind_static_rhs(params, n)(t, state.c, state.d)


def closed_form_static(params: JcParams, n: int, state0: AmplitudeState,
                       t: float) -> AmplitudeState:
    """Exact solution of the static system at time t.

    With kappa = g_s sqrt(n), the propagator is
    [[cos(kappa t), -i sin(kappa t)], [-i sin(kappa t), cos(kappa t)]],
    analytic in kappa: real coupling gives Rabi cosine/sine, imaginary
    coupling gives cosh/sinh growth.
    """
    kappa = params.coupling * math.sqrt(n)
    arg = kappa * t
    cos_a = cmath.cos(arg)
    sin_a = cmath.sin(arg)
    c = state0.c * cos_a - 1j * state0.d * sin_a
    d = state0.d * cos_a - 1j * state0.c * sin_a
    return AmplitudeState(n=n, c=c, d=d, frame=state0.frame)


def suggested_step(params: JcParams, mod: Optional[ModulationSpec], n: int,
                   steps_per_period: int = DEFAULT_STEPS_PER_PERIOD) -> float:
    """min(drive period, Rabi period) / steps_per_period."""
    kappa = abs(params.coupling) * math.sqrt(n)
    periods = []
    if kappa > 0:
        periods.append(2.0 * math.pi / kappa)
    if mod is not None:
        periods.append(2.0 * math.pi / mod.big_omega)
    if not periods:
        raise ValueError("cannot suggest a step for a system with no timescale")
    return min(periods) / steps_per_period


def _split_steps(t0: float, t1: float, step: float) -> tuple[int, float]:
    total = t1 - t0
    n_full = int(math.floor(total / step + 1e-9))
    tail = total - n_full * step
    if tail <= _TAIL_REL_TOL * max(1.0, abs(total)):
        tail = 0.0
    return n_full, tail


def integrate(rhs: RhsLike, state0: AmplitudeState, t0: float, t1: float,
              step: float, backend: Optional[str] = None) -> Trajectory:
    """Classical fixed-step RK4 from t0 to t1, recording every step.

    ``rhs`` is either a BoundRhs (from the bind_* helpers; eligible for
    the compiled kernel) or any callable (t, c, d) -> (dc, dd), which
    always runs on the pure path.  The final time is reached exactly,
    via a shortened last step when (t1 - t0) / step is not integral.
    """
    if not (math.isfinite(step) and step > 0):
        raise IntegrationError(f"step must be positive and finite, got {step}")
    if not t1 > t0:
        raise IntegrationError(f"t1 must exceed t0, got [{t0}, {t1}]")
    n_full, tail = _split_steps(t0, t1, step)
    if isinstance(rhs, BoundRhs):
        if rhs.frame is not None and state0.frame is not rhs.frame:
            raise FrameMismatchError(
                f"rhs integrates {rhs.frame.value}-frame states, got {state0.frame.value}"
            )
        chosen = backend or kernels.active_backend()
        cs, ds = kernels.rk4_form(rhs.form, rhs.coef, state0.c, state0.d,
                                  t0, step, n_full, tail, chosen)
    else:
        if backend not in (None, "pure"):
            raise ValueError("generic callables integrate on the pure backend only")
        cs, ds = kernels.rk4_generic(rhs, state0.c, state0.d, t0, step, n_full, tail)
    bad = ~(np.isfinite(cs.real) & np.isfinite(cs.imag)
            & np.isfinite(ds.real) & np.isfinite(ds.imag))
    if bad.any():
        first = int(np.argmax(bad))
        t_bad = t0 + min(first, n_full) * step if first <= n_full else t1
        raise IntegrationError(f"non-finite amplitudes at t = {t_bad}")
    times = t0 + step * np.arange(n_full + 1, dtype=float)
    if tail > 0.0:
        times = np.concatenate([times, [t1]])
    return Trajectory(times=times, c=cs, d=ds, frame=state0.frame, n=state0.n, step=step)


# ---------------------------------------------------------------------------
# Trajectory serialization


def write_trajectory_csv(traj: Trajectory, path) -> None:
    """Plain CSV with the fixed header t,re_c,im_c,re_d,im_d,frame,n."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(TRAJECTORY_CSV_HEADER + "\n")
        frame = traj.frame.value
        for i in range(len(traj)):
            t = float(traj.times[i])
            c = complex(traj.c[i])
            d = complex(traj.d[i])
            fh.write(
                f"{t!r},{c.real!r},{c.imag!r},{d.real!r},{d.imag!r},{frame},{traj.n}\n"
            )


def read_trajectory_csv(path) -> Trajectory:
    """Inverse of write_trajectory_csv."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != TRAJECTORY_CSV_HEADER:
            raise ValueError(f"unexpected trajectory header {header!r}")
        times, cs, ds = [], [], []
        frame = None
        n = None
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 7:
                raise ValueError(f"malformed trajectory row {line!r}")
            times.append(float(parts[0]))
            cs.append(complex(float(parts[1]), float(parts[2])))
            ds.append(complex(float(parts[3]), float(parts[4])))
            frame = Frame(parts[5])
            n = int(parts[6])
    if not times:
        raise ValueError("empty trajectory file")
    times_arr = np.array(times)
    step = float(times_arr[1] - times_arr[0]) if len(times_arr) > 1 else 1.0
    return Trajectory(times=times_arr, c=np.array(cs), d=np.array(ds),
                      frame=frame, n=n, step=step)


def map_trajectory(traj: Trajectory, params: JcParams,
                   mod: Optional[ModulationSpec], to_frame: Frame) -> Trajectory:
    """Pointwise frame conversion of a whole trajectory.

    Conversions touching the gauged frame need the modulation spec; a
    missing spec raises ValueError.
    """
    if traj.frame is to_frame:
        return traj
    order = [Frame.LAB, Frame.INTERACTION, Frame.GAUGED]
    i_from = order.index(traj.frame)
    i_to = order.index(to_frame)
    cs = np.array(traj.c, dtype=complex)
    ds = np.array(traj.d, dtype=complex)
    times = traj.times
    if (i_from == 2 or i_to == 2) and mod is None:
        raise ValueError("gauged-frame conversion requires a modulation spec")
    step_dir = 1 if i_to > i_from else -1
    cur = i_from
    while cur != i_to:
        nxt = cur + step_dir
        for k in range(len(times)):
            st = AmplitudeState(n=traj.n, c=complex(cs[k]), d=complex(ds[k]),
                                frame=order[cur])
            if (cur, nxt) == (0, 1):
                st = to_interaction(st, params, float(times[k]))
            elif (cur, nxt) == (1, 2):
                st = to_gauged(st, mod, params, float(times[k]))
            elif (cur, nxt) == (1, 0):
                st = from_interaction(st, params, float(times[k]))
            else:
                st = from_gauged(st, mod, params, float(times[k]))
            cs[k], ds[k] = st.c, st.d
        cur = nxt
    return Trajectory(times=times, c=cs, d=ds, frame=to_frame, n=traj.n, step=traj.step)

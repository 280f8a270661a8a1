"""Timing comparison of the compiled RK4 kernel against the pure fallback.

Runs the gauged atom-target workload (the hot loop of the equivalence
experiments) at a few sizes and prints steps per second for whichever
backends are available.  Invoke as a script:

    python benchmarks/bench_rk4.py
"""
import math
import time

import numpy as np

from ptjc import kernels
from ptjc.dynamics import (
    AmplitudeState,
    Frame,
    ModulationSpec,
    ModulationTarget,
    bind_gauged_rhs,
    integrate,
)
from ptjc.equivalence import solve_modulation_beta
from ptjc.jc import JcParams


def run_case(backend: str, n_steps: int) -> float:
    params = JcParams(omega0=1.0, omega=1.0, coupling=0.05)
    big_omega = 100.0 * 0.05
    beta = solve_modulation_beta(params, ModulationTarget.ATOM_FREQUENCY, 1, big_omega)
    mod = ModulationSpec(target=ModulationTarget.ATOM_FREQUENCY, beta=beta,
                         big_omega=big_omega)
    rhs = bind_gauged_rhs(params, mod, 1)
    state0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.GAUGED)
    step = (2.0 * math.pi / big_omega) / 400
    t1 = n_steps * step
    start = time.perf_counter()
    traj = integrate(rhs, state0, 0.0, t1, step, backend=backend)
    elapsed = time.perf_counter() - start
    assert np.isfinite(traj.c).all()
    return n_steps / elapsed


def main() -> None:
    backends = ["pure"]
    if kernels.HAVE_COMPILED:
        backends.append("compiled")
    else:
        print("compiled kernel not available; timing pure backend only")
    sizes = (20_000, 100_000, 400_000)
    print(f"{'steps':>10}  " + "".join(f"{b + ' (steps/s)':>20}" for b in backends)
          + ("        speedup" if len(backends) == 2 else ""))
    for n_steps in sizes:
        rates = [run_case(b, n_steps) for b in backends]
        line = f"{n_steps:>10}  " + "".join(f"{r:>20.3e}" for r in rates)
        if len(rates) == 2:
            line += f"{rates[1] / rates[0]:>14.1f}x"
        print(line)


if __name__ == "__main__":
    main()

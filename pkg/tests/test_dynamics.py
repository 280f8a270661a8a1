"""Frame maps, amplitude equations of motion, and the RK4 front end."""

import cmath
import math

import numpy as np
import pytest

from ptjc import kernels
from ptjc.dynamics import (
    AmplitudeState,
    Frame,
    FrameMismatchError,
    IntegrationError,
    ModulationSpec,
    ModulationTarget,
    OffResonanceWarning,
    Trajectory,
    averaged_effective_coupling,
    bind_averaged_rhs,
    bind_gauged_rhs,
    bind_lab_rhs,
    bind_static_rhs,
    closed_form_static,
    from_gauged,
    from_interaction,
    gauge_phase,
    integrate,
    map_trajectory,
    read_trajectory_csv,
    rhs_averaged,
    rhs_gauged,
    rhs_lab,
    rhs_static,
    suggested_step,
    to_gauged,
    to_interaction,
    write_trajectory_csv,
)
from ptjc.equivalence import solve_modulation_beta
from ptjc.jc import JcParams

ROUND_TRIP_TOL = 1e-14
FRAME_CONSISTENCY_TOL = 1e-6
CLOSED_FORM_TOL = 1e-8
CONSERVATION_TOL = 1e-10

ATOM = ModulationTarget.ATOM_FREQUENCY
CAVITY = ModulationTarget.CAVITY_FREQUENCY


def lab_hamiltonian(params, mod, n, t):
    """Hand-built instantaneous 2x2 lab Hamiltonian (test-side oracle)."""
    drive = 1.0 + mod.beta * math.cos(mod.big_omega * t)
    omega0_t = params.omega0 * (drive if mod.target is ATOM else 1.0)
    omega_t = params.omega * (drive if mod.target is CAVITY else 1.0)
    off = params.coupling.real * math.sqrt(n)
    return np.array(
        [[omega0_t / 2.0 + omega_t * (n - 1), off],
         [off, n * omega_t - omega0_t / 2.0]], dtype=complex)


def random_state(rng, n, frame):
    c = complex(*rng.standard_normal(2))
    d = complex(*rng.standard_normal(2))
    return AmplitudeState(n=n, c=c, d=d, frame=frame)


class TestTypes:
    def test_modulation_validation(self):
        with pytest.raises(ValueError):
            ModulationSpec(target=ATOM, beta=0.1, big_omega=0.0)
        with pytest.raises(ValueError):
            ModulationSpec(target=ATOM, beta=complex(math.nan, 0), big_omega=1.0)

    def test_state_validation(self):
        with pytest.raises(ValueError):
            AmplitudeState(n=0, c=0.0, d=1.0, frame=Frame.LAB)
        with pytest.raises(ValueError):
            AmplitudeState(n=1, c=complex(math.inf, 0), d=0.0, frame=Frame.LAB)

    def test_trajectory_requires_uniform_grid(self):
        with pytest.raises(ValueError):
            Trajectory(times=np.array([0.0, 0.1, 0.3]), c=np.zeros(3, complex),
                       d=np.zeros(3, complex), frame=Frame.LAB, n=1, step=0.1)

    def test_trajectory_allows_short_final_interval(self):
        traj = Trajectory(times=np.array([0.0, 0.1, 0.15]), c=np.zeros(3, complex),
                          d=np.zeros(3, complex), frame=Frame.LAB, n=1, step=0.1)
        assert len(traj) == 3


class TestFrameMaps:
    def test_interaction_identity_at_t0(self, rng):
        s = random_state(rng, 2, Frame.LAB)
        out = to_interaction(s, JcParams(1.2, 1.0, 0.1), 0.0)
        assert out.c == s.c and out.d == s.d
        assert out.frame is Frame.INTERACTION

    def test_interaction_preserves_moduli(self, rng):
        p = JcParams(1.2, 0.9, 0.1)
        s = random_state(rng, 3, Frame.LAB)
        out = to_interaction(s, p, 2.7)
        assert abs(abs(out.c) - abs(s.c)) <= 1e-15
        assert abs(abs(out.d) - abs(s.d)) <= 1e-15

    def test_interaction_round_trip(self, rng):
        p = JcParams(1.3, 0.8, 0.2)
        for _ in range(20):
            s = random_state(rng, int(rng.integers(1, 6)), Frame.LAB)
            back = from_interaction(to_interaction(s, p, 7.3), p, 7.3)
            assert abs(back.c - s.c) <= ROUND_TRIP_TOL
            assert abs(back.d - s.d) <= ROUND_TRIP_TOL

    def test_gauged_identity_at_sin_zero(self, rng):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.4, big_omega=2.0)
        s = random_state(rng, 1, Frame.INTERACTION)
        out = to_gauged(s, mod, p, math.pi / 2.0)  # sin(2t) = 0 at t = pi/2
        assert abs(out.c - s.c) <= 1e-12 * abs(s.c)
        assert out.d == s.d

    def test_gauged_preserves_modulus_for_real_beta(self, rng):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.7, big_omega=1.3)
        s = random_state(rng, 1, Frame.INTERACTION)
        out = to_gauged(s, mod, p, 0.37)
        assert abs(abs(out.c) - abs(s.c)) <= 1e-15

    def test_gauged_scaling_for_imaginary_beta(self):
        # beta = i, omega0 = 2, Omega = 1, sin(Omega t) = 1: the absorbed
        # phase is (omega0 beta / 2 Omega) = i, so c picks up e^{i*i} = e^-1
        p = JcParams(2.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=1j, big_omega=1.0)
        s = AmplitudeState(n=1, c=1.0, d=0.5, frame=Frame.INTERACTION)
        out = to_gauged(s, mod, p, math.pi / 2.0)
        assert abs(out.c) == pytest.approx(math.exp(-1.0), rel=1e-12)
        assert out.d == s.d

    def test_gauged_round_trip_complex_beta(self, rng):
        p = JcParams(1.0, 1.0, 0.05)
        for target in (ATOM, CAVITY):
            mod = ModulationSpec(target=target, beta=0.5 + 0.3j, big_omega=2.0)
            s = random_state(rng, 2, Frame.INTERACTION)
            back = from_gauged(to_gauged(s, mod, p, 1.9), mod, p, 1.9)
            assert abs(back.c - s.c) <= ROUND_TRIP_TOL
            assert back.d == s.d

    def test_cavity_gauge_phase_scales_with_n(self):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=CAVITY, beta=0.3, big_omega=2.0)
        t = 0.41
        assert gauge_phase(p, mod, 4, t) == pytest.approx(4.0 * gauge_phase(p, mod, 1, t))

    def test_frame_mismatch_rejected(self, rng):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.1, big_omega=1.0)
        lab = random_state(rng, 1, Frame.LAB)
        with pytest.raises(FrameMismatchError):
            to_gauged(lab, mod, p, 0.0)
        with pytest.raises(FrameMismatchError):
            from_interaction(lab, p, 0.0)


class TestRhsLab:
    def test_free_evolution(self):
        p = JcParams(1.4, 0.9, 0.0)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        s = AmplitudeState(n=3, c=0.8 + 0.1j, d=0.2 - 0.4j, frame=Frame.LAB)
        dc, dd = rhs_lab(p, mod, s, 0.55)
        assert abs(dc - (-1j * (1.4 / 2.0 + 0.9 * 2.0) * s.c)) <= 1e-15
        assert abs(dd - (-1j * (3 * 0.9 - 1.4 / 2.0) * s.d)) <= 1e-15

    def test_resonant_coupled_example(self):
        p = JcParams(1.0, 1.0, 0.1)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        s = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.LAB)
        dc, dd = rhs_lab(p, mod, s, 0.0)
        assert abs(dc - (-0.1j)) <= 1e-15
        assert abs(dd - (-0.5j)) <= 1e-15

    def test_crest_uses_modulated_frequency(self):
        p = JcParams(1.2, 1.0, 0.0)
        mod = ModulationSpec(target=ATOM, beta=0.25, big_omega=2.0)
        s = AmplitudeState(n=1, c=1.0, d=0.0, frame=Frame.LAB)
        dc, _ = rhs_lab(p, mod, s, 0.0)  # cos(0) = 1
        assert abs(dc - (-1j * 1.2 * 1.25 / 2.0)) <= 1e-15

    @pytest.mark.parametrize("target", [ATOM, CAVITY])
    def test_matches_hand_built_hamiltonian(self, rng, target):
        p = JcParams(1.1, 0.9, 0.07)
        mod = ModulationSpec(target=target, beta=0.4 - 0.2j, big_omega=1.7)
        for _ in range(25):
            n = int(rng.integers(1, 6))
            s = random_state(rng, n, Frame.LAB)
            t = float(rng.uniform(0, 10))
            dc, dd = rhs_lab(p, mod, s, t)
            ref = -1j * (lab_hamiltonian(p, mod, n, t) @ [s.c, s.d])
            assert abs(dc - ref[0]) <= 1e-13
            assert abs(dd - ref[1]) <= 1e-13

    def test_complex_coupling_rejected(self):
        p = JcParams(1.0, 1.0, 0.1j)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        s = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.LAB)
        with pytest.raises(ValueError):
            rhs_lab(p, mod, s, 0.0)


class TestRhsGauged:
    def test_vanishes_when_fully_gauged_away(self):
        p = JcParams(1.0, 1.0, 0.0)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        s = AmplitudeState(n=1, c=0.3, d=0.7, frame=Frame.GAUGED)
        assert rhs_gauged(p, mod, s, 0.9) == (0.0, 0.0)

    def test_reduces_to_static_at_beta_zero(self, rng):
        p = JcParams(1.0, 1.0, 0.08)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        for _ in range(10):
            s = random_state(rng, 2, Frame.GAUGED)
            dc_g, dd_g = rhs_gauged(p, mod, s, float(rng.uniform(0, 5)))
            dc_s, dd_s = rhs_static(p, 2, s)
            assert abs(dc_g - dc_s) <= 1e-15
            assert abs(dd_g - dd_s) <= 1e-15

    @pytest.mark.parametrize("target", [ATOM, CAVITY])
    def test_frame_consistency_with_lab(self, rng, target):
        # the module's central self-check: integrate in the lab frame,
        # map the whole trajectory to the gauged frame, and compare with
        # a direct gauged-frame integration
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=target, beta=0.3 + 0.2j, big_omega=2.0)
        n = 2
        period = 2.0 * math.pi / mod.big_omega
        step = period / 400.0
        t1 = 3.0 * period
        s_lab = AmplitudeState(n=n, c=0.6 + 0.2j, d=0.5 - 0.1j, frame=Frame.LAB)
        lab_traj = integrate(bind_lab_rhs(p, mod, n), s_lab, 0.0, t1, step)
        mapped = map_trajectory(lab_traj, p, mod, Frame.GAUGED)
        s_gauged = to_gauged(to_interaction(s_lab, p, 0.0), mod, p, 0.0)
        gauged_traj = integrate(bind_gauged_rhs(p, mod, n), s_gauged, 0.0, t1, step)
        err = max(np.abs(mapped.c - gauged_traj.c).max(),
                  np.abs(mapped.d - gauged_traj.d).max())
        assert err <= FRAME_CONSISTENCY_TOL


class TestRhsAveraged:
    def test_beta_zero_is_static(self):
        p = JcParams(1.0, 1.0, 0.06)
        mod = ModulationSpec(target=ATOM, beta=0.0, big_omega=1.0)
        avg = bind_averaged_rhs(p, mod, 3)
        static = bind_static_rhs(p, 3)
        assert avg.coef[0] == static.coef[0]

    @pytest.mark.parametrize("target", [ATOM, CAVITY])
    def test_solved_beta_gives_imaginary_coupling(self, target):
        p = JcParams(1.0, 1.0, 0.05)
        n = 2
        big_omega = 100.0 * abs(p.coupling) * math.sqrt(n)
        beta = solve_modulation_beta(p, target, n, big_omega)
        mod = ModulationSpec(target=target, beta=beta, big_omega=big_omega)
        g_eff = averaged_effective_coupling(p, mod, n)
        assert abs(g_eff - 1j * p.coupling.real) <= 1e-12

    def test_off_resonance_warns(self):
        p = JcParams(1.1, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.2, big_omega=1.0)
        with pytest.warns(OffResonanceWarning):
            bind_averaged_rhs(p, mod, 1)

    def test_matches_static_as_linear_map(self, rng):
        # the averaged rhs is literally the static rhs with g -> g J0
        p = JcParams(1.0, 1.0, 0.06)
        mod = ModulationSpec(target=ATOM, beta=0.8, big_omega=2.0)
        g_eff = averaged_effective_coupling(p, mod, 2)
        p_eff = JcParams(1.0, 1.0, g_eff)
        for _ in range(10):
            s = random_state(rng, 2, Frame.GAUGED)
            t = float(rng.uniform(0, 4))
            assert rhs_averaged(p, mod, s, t) == rhs_static(p_eff, 2, s, t)


class TestStaticAndClosedForm:
    def test_rhs_static_structure(self, rng):
        p = JcParams(1.0, 1.0, 0.1 - 0.04j)
        s = random_state(rng, 4, Frame.INTERACTION)
        dc, dd = rhs_static(p, 4, s)
        kappa = p.coupling * 2.0
        assert abs(dc - (-1j * kappa * s.d)) <= 1e-15
        assert abs(dd - (-1j * kappa * s.c)) <= 1e-15

    def test_closed_form_at_t0(self, rng):
        p = JcParams(1.0, 1.0, 0.2j)
        s = random_state(rng, 2, Frame.INTERACTION)
        out = closed_form_static(p, 2, s, 0.0)
        assert out.c == s.c and out.d == s.d

    def test_rabi_oscillation(self):
        p = JcParams(1.0, 1.0, 0.1)
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.INTERACTION)
        t = 3.7
        out = closed_form_static(p, 1, s0, t)
        assert abs(out.c - (-1j * math.sin(0.1 * t))) <= 1e-15
        assert abs(out.d - math.cos(0.1 * t)) <= 1e-15

    def test_hyperbolic_growth_for_imaginary_coupling(self):
        p = JcParams(1.0, 1.0, 0.1j)
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.INTERACTION)
        t = 2.9
        out = closed_form_static(p, 1, s0, t)
        assert abs(out.c - math.sinh(0.1 * t)) <= 1e-14
        assert abs(out.d - math.cosh(0.1 * t)) <= 1e-14
        assert abs(abs(out.d) ** 2 - abs(out.c) ** 2 - 1.0) <= 1e-12

    def test_zero_coupling_constant(self, rng):
        p = JcParams(1.0, 1.0, 0.0)
        s = random_state(rng, 1, Frame.INTERACTION)
        out = closed_form_static(p, 1, s, 11.0)
        assert out.c == s.c and out.d == s.d

    def test_norm_conserved_real_coupling(self, rng):
        p = JcParams(1.0, 1.0, 0.13)
        s = random_state(rng, 3, Frame.INTERACTION)
        out = closed_form_static(p, 3, s, 5.21)
        n0 = abs(s.c) ** 2 + abs(s.d) ** 2
        n1 = abs(out.c) ** 2 + abs(out.d) ** 2
        assert abs(n1 - n0) <= 1e-13 * n0


class TestIntegrate:
    def test_matches_closed_form(self):
        p = JcParams(1.0, 1.0, 0.1)
        rabi = 2.0 * math.pi / 0.1
        step = rabi / 1000.0
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.INTERACTION)
        traj = integrate(bind_static_rhs(p, 1), s0, 0.0, 10.0 * rabi, step)
        worst = 0.0
        for i in range(0, len(traj), 97):
            ref = closed_form_static(p, 1, s0, float(traj.times[i]))
            worst = max(worst, abs(traj.c[i] - ref.c), abs(traj.d[i] - ref.d))
        assert worst <= CLOSED_FORM_TOL

    def test_fourth_order_convergence(self):
        p = JcParams(1.0, 1.0, 0.1)
        rabi = 2.0 * math.pi / 0.1
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.INTERACTION)
        errs = []
        for divisor in (100.0, 200.0):
            traj = integrate(bind_static_rhs(p, 1), s0, 0.0, rabi, rabi / divisor)
            ref = closed_form_static(p, 1, s0, float(traj.times[-1]))
            errs.append(max(abs(traj.c[-1] - ref.c), abs(traj.d[-1] - ref.d)))
        order = math.log2(errs[0] / errs[1])
        assert 3.7 <= order <= 4.3

    def test_zero_rhs_constant_trajectory(self):
        s0 = AmplitudeState(n=1, c=0.3 + 0.1j, d=-0.2j, frame=Frame.LAB)
        traj = integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 1.0, 0.01)
        assert np.all(traj.c == s0.c)
        assert np.all(traj.d == s0.d)

    def test_norm_conservation_driven_hermitian(self):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.5, big_omega=2.0)
        s0 = AmplitudeState(n=1, c=0.6, d=0.8, frame=Frame.LAB)
        step = (2.0 * math.pi / 2.0) / 400.0
        traj = integrate(bind_lab_rhs(p, mod, 1), s0, 0.0, 1000.0 * step, step)
        norms = np.abs(traj.c) ** 2 + np.abs(traj.d) ** 2
        assert np.abs(norms - norms[0]).max() <= CONSERVATION_TOL

    def test_pseudo_norm_conservation_imaginary_coupling(self):
        p = JcParams(1.0, 1.0, 0.1j)
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.INTERACTION)
        traj = integrate(bind_static_rhs(p, 1), s0, 0.0, 10.0, 0.01)
        pseudo = np.abs(traj.c) ** 2 - np.abs(traj.d) ** 2
        assert np.abs(pseudo - pseudo[0]).max() <= CONSERVATION_TOL

    def test_lands_exactly_on_t1(self):
        s0 = AmplitudeState(n=1, c=1.0, d=0.0, frame=Frame.LAB)
        traj = integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 0.25, 0.1)
        assert traj.times[-1] == 0.25
        assert len(traj) == 4  # 0, 0.1, 0.2, 0.25

    def test_frame_guard(self):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.1, big_omega=1.0)
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.GAUGED)
        with pytest.raises(FrameMismatchError):
            integrate(bind_lab_rhs(p, mod, 1), s0, 0.0, 1.0, 0.01)

    def test_invalid_step_rejected(self):
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.LAB)
        with pytest.raises(IntegrationError):
            integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 1.0, 0.0)
        with pytest.raises(IntegrationError):
            integrate(lambda t, c, d: (0.0, 0.0), s0, 1.0, 0.5, 0.01)

    def test_blowup_reports_time(self):
        s0 = AmplitudeState(n=1, c=1.0, d=1.0, frame=Frame.LAB)
        grow = lambda t, c, d: (1e180 * d, 1e180 * c)
        with pytest.raises(IntegrationError, match="t ="):
            integrate(grow, s0, 0.0, 1.0, 0.1)

    def test_generic_callable_refuses_compiled_backend(self):
        s0 = AmplitudeState(n=1, c=1.0, d=0.0, frame=Frame.LAB)
        with pytest.raises(ValueError):
            integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 1.0, 0.1,
                      backend="compiled")

    @pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel unavailable")
    def test_backends_agree_bitwise(self):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=CAVITY, beta=0.4 - 0.15j, big_omega=3.0)
        s0 = AmplitudeState(n=2, c=0.6 + 0.2j, d=0.5 - 0.1j, frame=Frame.GAUGED)
        rhs = bind_gauged_rhs(p, mod, 2)
        a = integrate(rhs, s0, 0.0, 4.0, 0.004, backend="pure")
        b = integrate(rhs, s0, 0.0, 4.0, 0.004, backend="compiled")
        assert np.array_equal(a.c, b.c)
        assert np.array_equal(a.d, b.d)


class TestStepAndSerialization:
    def test_suggested_step_picks_fastest_scale(self):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.1, big_omega=5.0)
        # drive period 2pi/5 is shorter than the Rabi period 2pi/0.05
        assert suggested_step(p, mod, 1) == pytest.approx((2.0 * math.pi / 5.0) / 400.0)

    def test_suggested_step_requires_a_timescale(self):
        with pytest.raises(ValueError):
            suggested_step(JcParams(1.0, 1.0, 0.0), None, 1)

    def test_csv_round_trip(self, rng, tmp_path):
        p = JcParams(1.0, 1.0, 0.1j)
        s0 = AmplitudeState(n=2, c=0.1 + 0.2j, d=1.0 - 0.05j, frame=Frame.INTERACTION)
        traj = integrate(bind_static_rhs(p, 2), s0, 0.0, 2.0, 0.01)
        path = tmp_path / "traj.csv"
        write_trajectory_csv(traj, path)
        back = read_trajectory_csv(path)
        assert np.array_equal(back.times, traj.times)
        assert np.array_equal(back.c, traj.c)
        assert np.array_equal(back.d, traj.d)
        assert back.frame is traj.frame
        assert back.n == traj.n

    def test_csv_header_exact(self, tmp_path):
        s0 = AmplitudeState(n=1, c=0.0, d=1.0, frame=Frame.LAB)
        traj = integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 0.2, 0.1)
        path = tmp_path / "traj.csv"
        write_trajectory_csv(traj, path)
        first = path.read_text().splitlines()[0]
        assert first == "t,re_c,im_c,re_d,im_d,frame,n"

    def test_map_trajectory_round_trip(self, rng):
        p = JcParams(1.0, 1.0, 0.05)
        mod = ModulationSpec(target=ATOM, beta=0.3 + 0.1j, big_omega=2.0)
        s0 = AmplitudeState(n=1, c=0.5, d=0.5, frame=Frame.LAB)
        traj = integrate(bind_lab_rhs(p, mod, 1), s0, 0.0, 2.0, 0.01)
        there = map_trajectory(traj, p, mod, Frame.GAUGED)
        back = map_trajectory(there, p, mod, Frame.LAB)
        assert np.abs(back.c - traj.c).max() <= 1e-13
        assert np.abs(back.d - traj.d).max() <= 1e-13

    def test_map_to_gauged_needs_modulation(self):
        s0 = AmplitudeState(n=1, c=0.5, d=0.5, frame=Frame.LAB)
        traj = integrate(lambda t, c, d: (0.0, 0.0), s0, 0.0, 0.3, 0.1)
        with pytest.raises(ValueError):
            map_trajectory(traj, JcParams(1.0, 1.0, 0.05), None, Frame.GAUGED)

"""Tests for the flow right-hand side, the RK4 integrator, and scaling laws."""
import math

import numpy as np
import pytest

from scflab import (
    FlowState,
    IntegratorConfig,
    MetricDegenerateError,
    anti_invariant_part,
    conserved_report,
    heisenberg_sum,
    integrate,
    kodaira_thurston,
    levi_civita,
    metric_rhs_flat_case,
    n4_entry,
    ricci,
    riemann,
    scf_rhs,
    static_behaviour,
    static_extinction_time,
    static_flow_predictor,
    static_rate,
    step_rk4,
)


def test_rhs_kodaira_thurston_closed_form():
    # the pair stays in the family: d alpha = -alpha^3 beta,
    # d beta = -alpha^2 beta^2 / 2, omega frozen
    rng = np.random.default_rng(0)
    for _ in range(5):
        a, b = rng.uniform(0.4, 2.0, 2)
        st = kodaira_thurston(a, b).initial_structure()
        dw, dJ = scf_rhs(st.algebra, st.omega, st.J)
        assert np.max(np.abs(dw)) == 0.0
        da, db = -a ** 3 * b, -a ** 2 * b ** 2 / 2.0
        want = np.zeros((4, 4))
        want[0, 2], want[2, 0] = -da, -da / a ** 2
        want[1, 3], want[3, 1] = db, db / b ** 2
        assert np.max(np.abs(dJ - want)) < 1e-12 * max(1.0, abs(da))


def test_rhs_heisenberg_sum_closed_form():
    rng = np.random.default_rng(1)
    for _ in range(5):
        a, b, c = rng.uniform(0.4, 2.0, 3)
        st = heisenberg_sum(a, b, c).initial_structure()
        dw, dJ = scf_rhs(st.algebra, st.omega, st.J)
        assert np.max(np.abs(dw)) == 0.0
        da = -a ** 3 * b
        db = (c ** 2 - a ** 2 * b ** 2) / 2.0
        dc = -c ** 3 / b
        assert abs(-dJ[0, 4] - da) < 1e-12
        assert abs(-dJ[1, 3] - db) < 1e-12
        assert abs(-dJ[2, 5] - dc) < 1e-12


def test_rhs_n4_initial_values():
    st = n4_entry().initial_structure()
    dw, dJ = scf_rhs(st.algebra, st.omega, st.J)
    want_w = np.zeros((4, 4))
    want_w[0, 1], want_w[1, 0] = 2.0, -2.0
    assert np.max(np.abs(dw - want_w)) < 1e-14
    want_J = np.array([
        [0.0, -1.0, 0.5, 0.0],
        [1.0, 0.0, 0.0, 1.5],
        [0.5, 0.0, 0.0, 1.0],
        [0.0, 1.5, -1.0, 0.0],
    ])
    assert np.max(np.abs(dJ - want_J)) < 1e-14


def test_rhs_rejects_degenerate_metric():
    st = kodaira_thurston(1.0, 1.0).initial_structure()
    with pytest.raises(MetricDegenerateError):
        scf_rhs(st.algebra, st.omega, -st.J)


def test_analytic_solutions_satisfy_rhs():
    h = 1e-5
    for entry in (kodaira_thurston(1.0, 1.0), heisenberg_sum(1.0, 1.0, 1.0), n4_entry()):
        for t in np.linspace(0.0, 8.0, 9):
            st = entry.analytic(t)
            plus, minus = entry.analytic(t + h), entry.analytic(t - h)
            dw, dJ = scf_rhs(entry.algebra, st.omega, st.J)
            fd_w = (plus.omega - minus.omega) / (2.0 * h)
            fd_J = (plus.J - minus.J) / (2.0 * h)
            scale = max(1.0, np.max(np.abs(dw)), np.max(np.abs(dJ)))
            assert np.max(np.abs(dw - fd_w)) < 1e-7 * scale
            assert np.max(np.abs(dJ - fd_J)) < 1e-7 * scale


def test_metric_rhs_flat_case_matches_ricci_projection():
    for entry in (kodaira_thurston(1.5, 0.7), heisenberg_sum(1.1, 0.9, 1.4)):
        st = entry.initial_structure()
        Ric = ricci(entry.algebra, riemann(entry.algebra, levi_civita(entry.algebra, st.g)))
        want = -2.0 * anti_invariant_part(Ric, st.J)
        got = metric_rhs_flat_case(entry.algebra, st.omega, st.J)
        assert np.max(np.abs(got - want)) < 1e-13


def test_metric_rhs_flat_case_rejects_nonflat():
    st = n4_entry().initial_structure()
    with pytest.raises(ValueError, match="flat"):
        metric_rhs_flat_case(st.algebra, st.omega, st.J)


def test_single_step_accuracy():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    out = step_rk4(entry.algebra, FlowState(0.0, st.omega, st.J), 0.01)
    ex = entry.analytic(0.01)
    assert out.t == 0.01
    err = max(np.max(np.abs(out.omega - ex.omega)), np.max(np.abs(out.J - ex.J)))
    assert err < 1e-9


def test_integrate_record_pattern_and_exact_endpoint():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=1.0, dt=1e-3, record_every=100)
    traj = integrate(entry.algebra, FlowState(0.0, st.omega, st.J), cfg)
    assert traj.reason == "reached_t_end"
    assert len(traj.samples) == 11
    assert traj.final_state.t == 1.0
    assert traj.times[0] == 0.0
    # a horizon that is not a step multiple ends with a shortened step
    cfg = IntegratorConfig(t_end=0.0105, dt=1e-3, record_every=5)
    traj = integrate(entry.algebra, FlowState(0.0, st.omega, st.J), cfg)
    assert traj.final_state.t == 0.0105
    ex = entry.analytic(0.0105)
    assert np.max(np.abs(traj.final_state.J - ex.J)) < 1e-12


def test_integrate_validation_errors():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    state = FlowState(0.0, st.omega, st.J)
    with pytest.raises(ValueError):
        integrate(entry.algebra, state, IntegratorConfig(t_end=0.5, dt=1.0))
    with pytest.raises(ValueError):
        integrate(entry.algebra, state, IntegratorConfig(t_end=-1.0, dt=1e-3))
    with pytest.raises(ValueError):
        IntegratorConfig(t_end=1.0, dt=-1e-3)
    with pytest.raises(ValueError):
        IntegratorConfig(t_end=1.0, dt=1e-3, record_every=0)
    with pytest.raises(ValueError):
        IntegratorConfig(t_end=1.0, dt=1e-3, drift_tol=0.0)


def test_integrate_terminates_on_degenerate_metric():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=1.0, dt=1e-3)
    traj = integrate(entry.algebra, FlowState(0.0, 1e-12 * st.omega, st.J), cfg)
    assert traj.reason == "metric_degenerate"
    assert len(traj.samples) == 1


def test_integrate_terminates_on_blowup():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=1.0, dt=1e-3)
    traj = integrate(entry.algebra, FlowState(0.0, 1e13 * st.omega, st.J), cfg)
    assert traj.reason == "state_blowup"
    assert len(traj.samples) == 1


def test_integrate_terminates_on_drift():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=1.0, dt=1e-3, drift_tol=1e-7)
    traj = integrate(entry.algebra, FlowState(0.0, st.omega, st.J + 1e-5), cfg)
    assert traj.reason == "drift_exceeded"
    assert len(traj.samples) == 1


def test_renormalization_pins_j_squared():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=2.0, dt=1e-2, record_every=20, renormalize_J=True)
    traj = integrate(entry.algebra, FlowState(0.0, st.omega, st.J), cfg)
    assert traj.reason == "reached_t_end"
    assert max(d.drift_Jsq for _, d in traj.samples) < 1e-13
    ex = entry.analytic(2.0)
    assert np.max(np.abs(traj.final_state.J - ex.J)) < 1e-8


def test_observable_recorded_in_diagnostics():
    entry = kodaira_thurston(1.0, 1.0)
    st = entry.initial_structure()
    cfg = IntegratorConfig(t_end=0.1, dt=1e-3, record_every=50)

    def obs(omega, J):
        return {"trace_J2": float(np.trace(J @ J))}

    traj = integrate(entry.algebra, FlowState(0.0, st.omega, st.J), cfg, observable=obs)
    for _, diag in traj.samples:
        assert abs(diag.conserved["trace_J2"] + 4.0) < 1e-10
        assert diag.norm_N_sq > 0.0
        assert diag.min_eig_g > 0.0


def test_conserved_report():
    entry = kodaira_thurston(2.0, 0.5)
    st = entry.initial_structure()
    rep = conserved_report(entry, FlowState(0.0, st.omega, st.J))
    want = 2.0 ** (-2.0 / 3.0) * 0.5 ** (4.0 / 3.0)
    assert abs(rep["alpha^-2/3*beta^4/3"] - want) < 1e-14
    with pytest.raises(ValueError, match="residual"):
        conserved_report(entry, FlowState(0.0, st.omega, st.J + 0.5))


def test_static_scaling_laws():
    assert static_rate(1) == math.pi / 2.0
    assert static_rate(2) == 0.0
    assert static_rate(3) == -math.pi / 2.0
    assert static_behaviour(1) == "expand"
    assert static_behaviour(2) == "static"
    assert static_behaviour(3) == "collapse"
    assert static_extinction_time(1) is None
    assert static_extinction_time(2) is None
    assert abs(static_extinction_time(3) - 2.0 / math.pi) < 1e-15
    assert static_flow_predictor(2, 3.0, 10.0) == 3.0
    with pytest.raises(ValueError):
        static_rate(0)
    with pytest.raises(ValueError):
        static_rate(2.5)

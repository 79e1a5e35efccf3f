"""Symplectic curvature flow of left-invariant almost Kahler structures.

The flow evolves the pair (omega, J):

    d/dt omega = -2 P
    d/dt J     = -2 sharp(g, P_anti) + [Rc, J]

with P the Chern-Ricci form, P_anti its J-anti-invariant part, Rc the
Ricci endomorphism of the induced metric g = omega(., J.), and sharp the
index-raising map g(sharp(g, B) X, Y) = B(X, Y).  The metric is derived
from (omega, J) at every evaluation; no constraint projection is applied
unless J-renormalisation is requested, so drift of the structure
invariants is a monitored diagnostic quantity.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from scflab.lie_core import _constants, ce_d2
from scflab.curvature import levi_civita, riemann, ricci, norm_nijenhuis, norm_riemann, nijenhuis

# metric eigenvalue floor and state magnitude cap for abort decisions
MIN_METRIC_EIG = 1e-10
STATE_BLOWUP = 1e12


class MetricDegenerateError(RuntimeError):
    """Raised when the induced metric stops being positive definite."""

    def __init__(self, min_eig):
        super().__init__(f"metric degenerate: smallest eigenvalue {min_eig:.6e}")
        self.min_eig = min_eig


@dataclass(frozen=True)
class FlowState:
    """A point on a flow trajectory: time plus the (omega, J) pair."""

    t: float
    omega: np.ndarray
    J: np.ndarray


@dataclass(frozen=True)
class FlowDiagnostics:
    """Monitored quantities at a recorded state.

    Drifts measure violation of the structure invariants; the norms are
    the pointwise curvature and Nijenhuis norms; conserved holds the
    named quantities supplied by the caller's observable hook.
    """

    drift_Jsq: float
    drift_compat: float
    drift_closed: float
    min_eig_g: float
    norm_N_sq: float
    norm_R_sq: float
    conserved: dict = field(default_factory=dict)


@dataclass(frozen=True)
class IntegratorConfig:
    t_end: float
    dt: float = 1e-3
    record_every: int = 10
    renormalize_J: bool = False
    drift_tol: float = 1e-6

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError("dt must be positive")
        if self.record_every < 1:
            raise ValueError("record_every must be a positive integer")
        if self.drift_tol <= 0.0:
            raise ValueError("drift_tol must be positive")


@dataclass(frozen=True)
class Trajectory:
    """Recorded (state, diagnostics) samples plus the termination reason.

    reason is one of "reached_t_end", "drift_exceeded",
    "metric_degenerate", "state_blowup".
    """

    samples: list
    reason: str

    @property
    def states(self):
        return [s for s, _ in self.samples]

    @property
    def times(self):
        return [s.t for s, _ in self.samples]

    @property
    def final_state(self):
        return self.samples[-1][0]


def scf_rhs(algebra, omega, J):
    """Right-hand side (d omega, d J) of the flow at one state.

    Raises MetricDegenerateError when the induced metric is not
    positive definite.
    """
    c = _constants(algebra)
    n = c.shape[0]
    raw = omega @ J
    g = 0.5 * (raw + raw.T)
    if not np.all(np.isfinite(g)):
        raise MetricDegenerateError(math.nan)
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise MetricDegenerateError(float(np.linalg.eigvalsh(g)[0])) from None

    # Koszul: 2 g(e_k, A_{e_j} e_i) = g([e_j,e_i],e_k) - g([e_j,e_k],e_i) - g([e_i,e_k],e_j)
    u = np.tensordot(g, c, axes=(0, 0))
    koszul = u.transpose(0, 2, 1) - u.transpose(2, 0, 1) - u.transpose(2, 1, 0)
    A = 0.5 * np.linalg.solve(g, koszul.reshape(n, n * n)).reshape(n, n, n)

    # Chern-Ricci form P(X, Y) = -tr(A_{[X,Y]} o J)
    tr_AJ = np.tensordot(A, J, axes=([1, 0], [0, 1]))
    P = -np.tensordot(tr_AJ, c, axes=(0, 0))
    P_anti = 0.5 * (P - J.T @ P @ J)

    # Ricci from the trace of R(., X) Y, symmetrised
    diag_A = np.einsum("kpk->p", A)
    ric = (
        np.tensordot(diag_A, A, axes=(0, 0)).T
        - np.tensordot(A, A, axes=([0, 1], [2, 0]))
        - np.tensordot(c, A, axes=([0, 1], [2, 0]))
    )
    ric = 0.5 * (ric + ric.T)

    solved = np.linalg.solve(g, np.concatenate([-2.0 * P_anti.T, ric], axis=1))
    d_J = solved[:, :n] + solved[:, n:] @ J - J @ solved[:, n:]
    return -2.0 * P, d_J


def metric_rhs_flat_case(algebra, omega, J):
    """Metric evolution -Ric + Ric(J., J.) on Chern-Ricci-flat structures.

    Only equivalent to the (omega, J) flow when P vanishes; raises
    ValueError otherwise.
    """
    from scflab.ak_structure import metric_of
    from scflab.curvature import chern_ricci_trace

    g = metric_of(omega, J)
    A = levi_civita(algebra, g)
    P = chern_ricci_trace(algebra, A, J)
    max_P = float(np.max(np.abs(P)))
    if max_P > 1e-10:
        raise ValueError(f"not Chern-Ricci flat: max |P| = {max_P:.3e}")
    ric = ricci(algebra, riemann(algebra, A))
    return -ric + J.T @ ric @ J


def _renormalized(J):
    """J (-J^2)^(-1/2): restores J^2 = -I exactly up to roundoff."""
    from scipy.linalg import sqrtm

    root = np.real(np.asarray(sqrtm(-(J @ J))))
    return np.linalg.solve(root.T, J.T).T


def _rk4(algebra, omega, J, dt):
    k1w, k1j = scf_rhs(algebra, omega, J)
    k2w, k2j = scf_rhs(algebra, omega + 0.5 * dt * k1w, J + 0.5 * dt * k1j)
    k3w, k3j = scf_rhs(algebra, omega + 0.5 * dt * k2w, J + 0.5 * dt * k2j)
    k4w, k4j = scf_rhs(algebra, omega + dt * k3w, J + dt * k3j)
    omega_new = omega + (dt / 6.0) * (k1w + 2.0 * (k2w + k3w) + k4w)
    J_new = J + (dt / 6.0) * (k1j + 2.0 * (k2j + k3j) + k4j)
    return omega_new, J_new


def step_rk4(algebra, state, dt, renormalize_j=False):
    """One classical fourth-order Runge-Kutta step of size dt."""
    omega, J = _rk4(algebra, state.omega, state.J, dt)
    if renormalize_j:
        J = _renormalized(J)
    return FlowState(t=state.t + dt, omega=omega, J=J)


def _diagnostics(algebra, omega, J, observable):
    n = omega.shape[0]
    raw = omega @ J
    g = 0.5 * (raw + raw.T)
    min_eig = float(np.linalg.eigvalsh(g)[0])
    if min_eig > 0.0:
        A = levi_civita(algebra, g)
        norm_r = norm_riemann(g, riemann(algebra, A))
        norm_n = norm_nijenhuis(g, nijenhuis(algebra, J))
    else:
        norm_r = math.nan
        norm_n = math.nan
    return FlowDiagnostics(
        drift_Jsq=float(np.max(np.abs(J @ J + np.eye(n)))),
        drift_compat=float(np.max(np.abs(J.T @ omega @ J - omega))),
        drift_closed=float(np.max(np.abs(ce_d2(algebra, omega)))),
        min_eig_g=min_eig,
        norm_N_sq=norm_n,
        norm_R_sq=norm_r,
        conserved=observable(omega, J) if observable is not None else {},
    )


def integrate(algebra, initial, config, observable=None):
    """Fixed-step RK4 integration from ``initial`` up to config.t_end.

    Diagnostics are recorded every config.record_every steps (plus the
    initial and final states); the run stops early when any drift
    exceeds config.drift_tol, the metric loses definiteness, or a state
    component passes the blow-up cap.  ``observable`` may map
    (omega, J) to a dict of named conserved quantities which is stored
    in each record.
    """
    span = config.t_end - initial.t
    if span <= 0.0:
        raise ValueError("t_end must lie beyond the initial time")
    if config.dt >= span:
        raise ValueError("dt must be smaller than the integration interval")

    n_full = int(math.floor(span / config.dt + 1e-9))
    remainder = span - n_full * config.dt
    if remainder < 1e-12 * max(1.0, abs(config.t_end)):
        remainder = 0.0

    def abort_reason(omega, J, diag):
        if not np.all(np.isfinite(omega)) or not np.all(np.isfinite(J)) \
                or max(np.max(np.abs(omega)), np.max(np.abs(J))) > STATE_BLOWUP:
            return "state_blowup"
        if diag.min_eig_g < MIN_METRIC_EIG:
            return "metric_degenerate"
        if max(diag.drift_Jsq, diag.drift_compat, diag.drift_closed) > config.drift_tol:
            return "drift_exceeded"
        return None

    omega, J = initial.omega.copy(), initial.J.copy()
    diag = _diagnostics(algebra, omega, J, observable)
    samples = [(FlowState(initial.t, omega.copy(), J.copy()), diag)]
    early = abort_reason(omega, J, diag)
    if early is not None:
        return Trajectory(samples=samples, reason=early)

    total_steps = n_full + (1 if remainder else 0)
    reason = "reached_t_end"
    for k in range(1, total_steps + 1):
        if k <= n_full:
            dt, t = config.dt, initial.t + k * config.dt
        else:
            dt, t = remainder, config.t_end
        try:
            omega, J = _rk4(algebra, omega, J, dt)
        except MetricDegenerateError:
            reason = "metric_degenerate"
            break
        if config.renormalize_J:
            J = _renormalized(J)
        if k % config.record_every == 0 or k == total_steps:
            diag = _diagnostics(algebra, omega, J, observable)
            samples.append((FlowState(t, omega.copy(), J.copy()), diag))
            stop = abort_reason(omega, J, diag)
            if stop is not None:
                reason = stop
                break
    return Trajectory(samples=samples, reason=reason)


def conserved_report(entry, state, tol=1e-6):
    """Named conserved quantities of a catalog family at a flow state.

    The state is projected onto the family; a projection residual above
    ``tol`` means the state left the family and raises ValueError.
    """
    params, residual = entry.extract_params(state)
    if residual > tol:
        raise ValueError(
            f"state is not in the {entry.name} family: projection residual {residual:.3e}"
        )
    return {name: fn(params) for name, fn in entry.conserved}


def static_rate(n):
    """Rate lambda = pi (2 - n) / 2 of the self-similar rescaling law."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    return 0.5 * math.pi * (2 - n)


def static_behaviour(n):
    """Qualitative class of the rescaling law: expand, static or collapse."""
    rate = static_rate(n)
    if rate > 0.0:
        return "expand"
    if rate == 0.0:
        return "static"
    return "collapse"


def static_extinction_time(n):
    """Extinction time -1/lambda for collapsing laws (n > 2), else None."""
    rate = static_rate(n)
    if rate >= 0.0:
        return None
    return -1.0 / rate


def static_flow_predictor(n, omega0_scale, t):
    """Scale factor (1 + lambda t) omega0_scale of the linear rescaling law."""
    return (1.0 + static_rate(n) * t) * omega0_scale

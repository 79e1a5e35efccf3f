"""Catalog of nilpotent examples with closed-form flow solutions.

Three families are provided:

* ``kodaira_thurston``: h3 + R, brackets [e1, e2] = e3, a two-parameter
  family (alpha, beta) of almost Kahler structures with an explicit
  power-law solution,
* ``heisenberg_sum``: h3 + h3, brackets [e1, e2] = e5 and [e3, e4] = e6,
  three parameters (alpha, beta, gamma); the closed form exists on the
  slice beta0 = gamma0 / alpha0, while the general case reduces to a
  scalar ODE in eta = L gamma^-3,
* ``n4``: the 3-step algebra [e1, e2] = e3, [e2, e3] = e4 carrying a
  four-parameter family of compatible pairs with a non-vanishing
  Chern-Ricci form and an explicit solution through y(t) = (1 + 5t/2)^(1/5).
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from scflab.lie_core import LieAlgebra
from scflab.ak_structure import AlmostKahlerStructure
from scflab.flow import FlowState

# tolerance on the defining relations of the n4 family
N4_RELATION_TOL = 1e-10


@dataclass(frozen=True)
class CatalogEntry:
    """A named family: algebra, initial parameters, builders and oracles.

    ``build`` maps a parameter dict to a structure; ``analytic`` (when
    not None) maps a time to the exact FlowState with the entry's
    initial parameters; ``conserved`` lists (name, fn) pairs evaluated
    on extracted parameters; ``extract_params`` projects a FlowState
    onto the family and reports the projection residual.
    """

    name: str
    algebra: LieAlgebra
    family_params: dict
    build: Callable[..., AlmostKahlerStructure]
    analytic: Optional[Callable[[float], FlowState]]
    conserved: list
    extract_params: Callable[[FlowState], tuple]

    def initial_structure(self):
        return self.build(**self.family_params)


# ---------------------------------------------------------------------------
# Kodaira-Thurston family on h3 + R

def _kt_algebra():
    return LieAlgebra.from_brackets(4, {(1, 2): {3: 1.0}})


def _kt_omega():
    w = np.zeros((4, 4))
    w[0, 2], w[2, 0] = 1.0, -1.0
    w[1, 3], w[3, 1] = -1.0, 1.0
    return w


def _kt_J(alpha, beta):
    J = np.zeros((4, 4))
    J[2, 0] = 1.0 / alpha
    J[0, 2] = -alpha
    J[3, 1] = -1.0 / beta
    J[1, 3] = beta
    return J


def _require_positive(**params):
    for name, value in params.items():
        if not value > 0.0:
            raise ValueError(f"{name} must be positive, got {value}")


def kodaira_thurston(alpha=1.0, beta=1.0):
    """Catalog entry for the two-parameter family on h3 + R.

    omega = e1^e3 - e2^e4 is fixed along the flow; the metric is
    diag(1/alpha, 1/beta, alpha, beta) and the parameters obey
    d alpha/dt = -alpha^3 beta, d beta/dt = -(alpha beta)^2 / 2 with the
    power-law solution alpha0 (1 + 5/2 alpha0^2 beta0 t)^(-2/5),
    beta0 (1 + 5/2 alpha0^2 beta0 t)^(-1/5).
    """
    _require_positive(alpha=alpha, beta=beta)
    algebra = _kt_algebra()
    omega0 = _kt_omega()
    alpha0, beta0 = float(alpha), float(beta)

    def build(alpha, beta):
        _require_positive(alpha=alpha, beta=beta)
        return AlmostKahlerStructure(algebra, _kt_omega(), _kt_J(alpha, beta))

    def analytic(t):
        s = 1.0 + 2.5 * alpha0 ** 2 * beta0 * t
        return FlowState(t=t, omega=_kt_omega(),
                         J=_kt_J(alpha0 * s ** (-0.4), beta0 * s ** (-0.2)))

    def extract_params(state):
        alpha_t, beta_t = -state.J[0, 2], state.J[1, 3]
        params = {"alpha": alpha_t, "beta": beta_t}
        residual = max(
            float(np.max(np.abs(state.J - _kt_J(alpha_t, beta_t)))),
            float(np.max(np.abs(state.omega - omega0))),
        )
        return params, residual

    conserved = [
        ("alpha^-2/3*beta^4/3",
         lambda p: p["alpha"] ** (-2.0 / 3.0) * p["beta"] ** (4.0 / 3.0)),
    ]
    return CatalogEntry(
        name="kodaira_thurston",
        algebra=algebra,
        family_params={"alpha": alpha0, "beta": beta0},
        build=build,
        analytic=analytic,
        conserved=conserved,
        extract_params=extract_params,
    )


# ---------------------------------------------------------------------------
# h3 + h3 family

def _hh_algebra():
    return LieAlgebra.from_brackets(6, {(1, 2): {5: 1.0}, (3, 4): {6: 1.0}})


def _hh_omega():
    w = np.zeros((6, 6))
    for i, j in ((0, 4), (1, 3), (2, 5)):
        w[i, j], w[j, i] = 1.0, -1.0
    return w


def _hh_J(alpha, beta, gamma):
    J = np.zeros((6, 6))
    J[4, 0] = 1.0 / alpha
    J[3, 1] = 1.0 / beta
    J[5, 2] = 1.0 / gamma
    J[1, 3] = -beta
    J[0, 4] = -alpha
    J[2, 5] = -gamma
    return J


def heisenberg_sum(alpha=1.0, beta=1.0, gamma=1.0):
    """Catalog entry for the three-parameter family on h3 + h3.

    The metric is diag(1/alpha, 1/beta, 1/gamma, beta, alpha, gamma).
    beta^2 gamma / alpha and xi - eta (with xi = alpha^-3 / L,
    eta = L gamma^-3, L = beta0 sqrt(gamma0 / alpha0)) are conserved; on
    the slice beta0 = gamma0 / alpha0 the closed form is
    alpha0 (1 + 2 alpha0 gamma0 t)^(-1/2), beta constant, and gamma
    scaling like alpha.
    """
    _require_positive(alpha=alpha, beta=beta, gamma=gamma)
    algebra = _hh_algebra()
    omega0 = _hh_omega()
    alpha0, beta0, gamma0 = float(alpha), float(beta), float(gamma)
    L = beta0 * np.sqrt(gamma0 / alpha0)

    def build(alpha, beta, gamma):
        _require_positive(alpha=alpha, beta=beta, gamma=gamma)
        return AlmostKahlerStructure(algebra, _hh_omega(), _hh_J(alpha, beta, gamma))

    if abs(beta0 - gamma0 / alpha0) <= 1e-12:
        def analytic(t):
            s = 1.0 + 2.0 * alpha0 * gamma0 * t
            return FlowState(t=t, omega=_hh_omega(),
                             J=_hh_J(alpha0 * s ** (-0.5), beta0, gamma0 * s ** (-0.5)))
    else:
        analytic = None

    def extract_params(state):
        params = {
            "alpha": -state.J[0, 4],
            "beta": -state.J[1, 3],
            "gamma": -state.J[2, 5],
        }
        residual = max(
            float(np.max(np.abs(state.J - _hh_J(**params)))),
            float(np.max(np.abs(state.omega - omega0))),
        )
        return params, residual

    conserved = [
        ("beta^2*gamma/alpha",
         lambda p: p["beta"] ** 2 * p["gamma"] / p["alpha"]),
        ("xi-eta",
         lambda p: p["alpha"] ** -3.0 / L - L * p["gamma"] ** -3.0),
    ]
    return CatalogEntry(
        name="heisenberg_sum",
        algebra=algebra,
        family_params={"alpha": alpha0, "beta": beta0, "gamma": gamma0},
        build=build,
        analytic=analytic,
        conserved=conserved,
        extract_params=extract_params,
    )


def reduced_eta_rhs(eta, c, L):
    """Scalar reduction of the h3 + h3 system: d eta/dt = 3 eta^(1/6) (eta + c)^(1/6).

    eta = L gamma^-3 and c = xi - eta is the conserved offset; L is part
    of the substitution and does not enter the rate itself.
    """
    if eta < 0.0 or eta + c < 0.0:
        raise ValueError("eta and eta + c must be nonnegative")
    return 3.0 * eta ** (1.0 / 6.0) * (eta + c) ** (1.0 / 6.0)


# ---------------------------------------------------------------------------
# n4 family

@dataclass(frozen=True)
class N4FamilyParams:
    """Parameters (a, b, c, d) and primed (ap, bp, cp, dp) of the n4 family.

    J maps e1 -> a e2 + b e3, e2 -> ap e1 + c e4, e3 -> bp e1 + d e4,
    e4 -> cp e2 + dp e3.  J^2 = -I is equivalent to the defining
    relations below, checked to 1e-10; compatibility forces
    gamma = (ap + d) / bp as the e1^e2 coefficient of omega.
    """

    a: float
    b: float
    c: float
    d: float
    ap: float
    bp: float
    cp: float
    dp: float

    def __post_init__(self):
        relations = [
            ("a*a' + b*b' = -1", self.a * self.ap + self.b * self.bp + 1.0),
            ("a*a' + c*c' = -1", self.a * self.ap + self.c * self.cp + 1.0),
            ("b*b' + d*d' = -1", self.b * self.bp + self.d * self.dp + 1.0),
            ("c*c' + d*d' = -1", self.c * self.cp + self.d * self.dp + 1.0),
            ("a*c + b*d = 0", self.a * self.c + self.b * self.d),
            ("a'*c' + b'*d' = 0", self.ap * self.cp + self.bp * self.dp),
            ("a*b' + c'*d = 0", self.a * self.bp + self.cp * self.d),
            ("a'*b + c*d' = 0", self.ap * self.b + self.c * self.dp),
        ]
        for name, value in relations:
            if abs(value) > N4_RELATION_TOL:
                raise ValueError(f"n4 family relation violated: {name} (off by {value:.3e})")
        if self.bp == 0.0:
            raise ValueError("n4 family requires b' != 0 to solve for gamma")

    @property
    def gamma(self):
        return (self.ap + self.d) / self.bp

    def as_dict(self):
        return {k: getattr(self, k) for k in ("a", "b", "c", "d", "ap", "bp", "cp", "dp")}


def _n4_algebra():
    return LieAlgebra.from_brackets(4, {(1, 2): {3: 1.0}, (2, 3): {4: 1.0}})


def _n4_omega(gamma):
    w = np.zeros((4, 4))
    w[0, 2], w[2, 0] = 1.0, -1.0
    w[1, 3], w[3, 1] = 1.0, -1.0
    w[0, 1], w[1, 0] = gamma, -gamma
    return w


def _n4_J(p):
    J = np.zeros((4, 4))
    J[1, 0], J[2, 0] = p.a, p.b
    J[0, 1], J[3, 1] = p.ap, p.c
    J[0, 2], J[3, 2] = p.bp, p.d
    J[1, 3], J[2, 3] = p.cp, p.dp
    return J


def n4_family(params):
    """Structure of the n4 family at the given parameters."""
    algebra = _n4_algebra()
    return AlmostKahlerStructure(algebra, _n4_omega(params.gamma), _n4_J(params))


def _n4_analytic_params(t):
    y = (1.0 + 2.5 * t) ** 0.2
    return N4FamilyParams(
        a=1.0 / y - y ** -3.0,
        b=2.0 / y - y ** -3.0,
        c=2.0 * y - 1.0 / y,
        d=-y + 1.0 / y,
        ap=-y + 1.0 / y,
        bp=-1.0 / y,
        cp=-(y ** -3.0),
        dp=1.0 / y - y ** -3.0,
    )


def n4_entry():
    """Catalog entry for the 3-step family; no free CLI parameters.

    The initial structure sits at y = 1 (omega standard, g the identity)
    and flows along y(t) = (1 + 5t/2)^(1/5) with
    omega(t) = e1^e3 + e2^e4 + 2 (y^2 - 1) e1^e2.
    """
    algebra = _n4_algebra()

    def build(**params):
        return n4_family(N4FamilyParams(**params))

    def analytic(t):
        p = _n4_analytic_params(t)
        return FlowState(t=t, omega=_n4_omega(p.gamma), J=_n4_J(p))

    def extract_params(state):
        J = state.J
        values = {
            "a": J[1, 0], "b": J[2, 0], "ap": J[0, 1], "c": J[3, 1],
            "bp": J[0, 2], "d": J[3, 2], "cp": J[1, 3], "dp": J[2, 3],
        }
        try:
            p = N4FamilyParams(**values)
        except ValueError:
            # relations broken beyond tolerance: report a unit residual
            return values, 1.0
        residual = max(
            float(np.max(np.abs(state.J - _n4_J(p)))),
            float(np.max(np.abs(state.omega - _n4_omega(p.gamma)))),
        )
        return values, residual

    return CatalogEntry(
        name="n4",
        algebra=algebra,
        family_params=_n4_analytic_params(0.0).as_dict(),
        build=build,
        analytic=analytic,
        conserved=[],
        extract_params=extract_params,
    )


# ---------------------------------------------------------------------------
# registry and randomized samplers

_FACTORIES = {
    "kodaira_thurston": kodaira_thurston,
    "heisenberg_sum": heisenberg_sum,
    "n4": n4_entry,
}


def list_entries():
    return list(_FACTORIES)


def get_entry(name, **params):
    if name not in _FACTORIES:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {list_entries()}")
    return _FACTORIES[name](**params)


def symplectic_conjugate(structure, rng, scale=0.3):
    """Random almost Kahler structure with the same symplectic form.

    J is conjugated by exp(Omega^-1 M) with M random symmetric, which
    preserves omega (hence closedness) and keeps the induced metric
    positive definite.
    """
    from scipy.linalg import expm

    n = structure.dim
    m = rng.uniform(-scale, scale, size=(n, n))
    m = 0.5 * (m + m.T)
    generator = np.linalg.solve(structure.omega, m)
    s = expm(generator)
    J_new = np.linalg.solve(s, structure.J @ s)
    return AlmostKahlerStructure(structure.algebra, structure.omega, J_new)


def random_n4_params(rng, spread=0.4):
    """Random point of the n4 family near the analytic curve.

    J restricted to span(e2, e3) -> span(e1, e4) is an arbitrary
    invertible block K = [[a', b'], [c, d]]; the reverse block is forced
    to -K^-1, which makes every defining relation hold identically.
    Draws are rejected until the induced metric is positive definite.
    """
    for _ in range(200):
        y = rng.uniform(0.75, 1.6)
        base = _n4_analytic_params(y ** 5 / 2.5 - 0.4)  # y(t) inverse: t = (y^5 - 1)/2.5
        k = np.array([[base.ap, base.bp], [base.c, base.d]])
        k = k + rng.uniform(-spread, spread, size=(2, 2))
        if abs(np.linalg.det(k)) < 0.1 or abs(k[0, 1]) < 0.05:
            continue
        rev = -np.linalg.inv(k)
        params = N4FamilyParams(
            a=rev[0, 0], cp=rev[0, 1], b=rev[1, 0], dp=rev[1, 1],
            ap=k[0, 0], bp=k[0, 1], c=k[1, 0], d=k[1, 1],
        )
        try:
            n4_family(params)
        except ValueError:
            continue
        return params
    raise RuntimeError("could not sample a positive definite n4 structure")


def random_n4_structure(rng, spread=0.4):
    return n4_family(random_n4_params(rng, spread=spread))

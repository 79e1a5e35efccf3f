"""Almost Kahler structures (omega, J, g) on a Lie algebra.

The metric convention is g(X, Y) = omega(X, JY), equivalently
omega = g(J., .); in matrices g = Omega @ J up to symmetrisation.
"""

from dataclasses import dataclass

import numpy as np

from scflab.lie_core import ce_d2

# tolerance for the construction-time structure invariants
CONSTRUCTION_TOL = 1e-10


def metric_of(omega, J):
    """Metric of a compatible pair: g(X, Y) = omega(X, JY).

    The matrix product is symmetrised (average with its transpose); the
    pre-symmetrisation asymmetry is available from metric_asymmetry.
    Raises ValueError when the result is not positive definite.
    """
    omega = np.asarray(omega, dtype=float)
    J = np.asarray(J, dtype=float)
    raw = omega @ J
    g = 0.5 * (raw + raw.T)
    min_eig = float(np.linalg.eigvalsh(g)[0])
    if min_eig <= 0.0:
        raise ValueError(
            f"incompatible pair: metric not positive definite (smallest eigenvalue {min_eig:.6e})"
        )
    return g


def metric_asymmetry(omega, J):
    """Max-norm of Omega @ J minus its transpose, before symmetrisation."""
    raw = np.asarray(omega, dtype=float) @ np.asarray(J, dtype=float)
    return float(np.max(np.abs(raw - raw.T)))


def anti_invariant_part(B, J):
    """J-anti-invariant part of a bilinear form:

    B_anti(X, Y) = (B(X, Y) - B(JX, JY)) / 2.
    """
    B = np.asarray(B, dtype=float)
    J = np.asarray(J, dtype=float)
    return 0.5 * (B - J.T @ B @ J)


def sharp(g, B):
    """Endomorphism E with g(E X, Y) = B(X, Y): raises the form index.

    For symmetric B this equals the matrix g^-1 B; for antisymmetric B
    the transpose in g^-1 B^T is what the contract requires.
    """
    return np.linalg.solve(g, np.asarray(B, dtype=float).T)


def commutator_anti_part(Rc, J):
    """Commutator [Rc, J], the J-anti-linear part of Rc composed with J."""
    return Rc @ J - J @ Rc


@dataclass(frozen=True)
class StructureDiagnostics:
    """Residuals of the almost Kahler conditions, plus the pass tolerance."""

    j_squared: float          # max |J^2 + I|
    compatibility: float      # max |omega(J., J.) - omega|
    closedness: float         # max |d omega|
    min_metric_eig: float
    metric_asymmetry: float   # max |Omega J - (Omega J)^T| before symmetrisation
    tol: float

    def failures(self):
        bad = []
        if self.j_squared > self.tol:
            bad.append("almost complex condition J^2 = -I")
        if self.compatibility > self.tol:
            bad.append("compatibility omega(J., J.) = omega")
        if self.closedness > self.tol:
            bad.append("closedness d omega = 0")
        if self.min_metric_eig <= 0.0:
            bad.append("positive definiteness of g")
        return bad

    @property
    def passed(self):
        return not self.failures()


class AlmostKahlerStructure:
    """A closed nondegenerate 2-form with a compatible almost complex J.

    The metric g = omega(., J.) is derived at construction.  With
    check=True (the default) the invariants J^2 = -I, compatibility and
    closedness are enforced to ``tol`` and g must be positive definite;
    check=False admits drifted or deliberately broken data so it can be
    diagnosed with check_structure.
    """

    def __init__(self, algebra, omega, J, check=True, tol=CONSTRUCTION_TOL):
        omega = np.array(omega, dtype=float)
        J = np.array(J, dtype=float)
        n = algebra.dim
        if omega.shape != (n, n) or J.shape != (n, n):
            raise ValueError(f"omega and J must be {n} x {n} matrices")
        if not np.array_equal(omega, -omega.T):
            raise ValueError("omega must be antisymmetric")
        self.algebra = algebra
        self.omega = omega
        self.J = J
        raw = omega @ J
        self.g = 0.5 * (raw + raw.T)
        if check:
            report = check_structure(self, tol=tol)
            if not report.passed:
                raise ValueError(
                    "not an almost Kahler structure; failed: " + "; ".join(report.failures())
                )
        for arr in (self.omega, self.J, self.g):
            arr.setflags(write=False)

    @property
    def dim(self):
        return self.algebra.dim

    def __repr__(self):
        return f"AlmostKahlerStructure(dim={self.dim})"


def check_structure(structure, tol=CONSTRUCTION_TOL):
    """Diagnostic residuals of the almost Kahler conditions.

    Never raises: broken structures (built with check=False) yield a
    report whose failures() names each violated condition.
    """
    omega, J = structure.omega, structure.J
    n = omega.shape[0]
    raw = omega @ J
    g = 0.5 * (raw + raw.T)
    return StructureDiagnostics(
        j_squared=float(np.max(np.abs(J @ J + np.eye(n)))),
        compatibility=float(np.max(np.abs(J.T @ omega @ J - omega))),
        closedness=float(np.max(np.abs(ce_d2(structure.algebra, omega)))),
        min_metric_eig=float(np.linalg.eigvalsh(g)[0]),
        metric_asymmetry=float(np.max(np.abs(raw - raw.T))),
        tol=tol,
    )

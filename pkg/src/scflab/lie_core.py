"""Finite-dimensional real Lie algebras given by structure constants.

Conventions used throughout the package:

* basis vectors are e_1, ..., e_n (1-based in documentation and I/O,
  0-based in arrays),
* ``c[k, i, j]`` is the e_k coefficient of [e_i, e_j]; antisymmetry in
  (i, j) must hold exactly,
* a 1-form is a length-n coefficient vector, a 2-form an antisymmetric
  n x n matrix B[i, j] = B(e_i, e_j), a 3-form a totally antisymmetric
  n x n x n array,
* the Chevalley-Eilenberg differential follows
  d(theta)(X, Y) = -theta([X, Y]).
"""

import numpy as np

# construction-time tolerance for the Jacobi identity
JACOBI_TOL = 1e-12
# singular-value cutoff for rank and exactness decisions
RANK_TOL = 1e-9


class LieAlgebra:
    """A real Lie algebra stored as a structure-constant array.

    Instances are immutable; the constructor rejects constants that are
    not exactly antisymmetric in the bracket slots or that violate the
    Jacobi identity beyond 1e-12.
    """

    def __init__(self, dim, structure_constants):
        c = np.array(structure_constants, dtype=float)
        if c.shape != (dim, dim, dim):
            raise ValueError(
                f"structure constants must have shape {(dim, dim, dim)}, got {c.shape}"
            )
        if not np.array_equal(c, -c.transpose(0, 2, 1)):
            raise ValueError("structure constants must be antisymmetric in the bracket slots")
        defect = jacobi_defect(c)
        if defect > JACOBI_TOL:
            raise ValueError(
                f"Jacobi identity violated: defect {defect:.3e} exceeds {JACOBI_TOL:.0e}"
            )
        self.dim = dim
        self.c = c
        c.setflags(write=False)

    @classmethod
    def from_brackets(cls, dim, brackets):
        """Build from ``{(i, j): {k: value}}`` with 1-based indices, i < j.

        Unlisted brackets vanish; [e_j, e_i] = -[e_i, e_j] is filled in.
        """
        c = np.zeros((dim, dim, dim))
        for (i, j), components in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bracket indices ({i}, {j}) must satisfy 1 <= i < j <= {dim}")
            for k, value in components.items():
                if not 1 <= k <= dim:
                    raise ValueError(f"bracket target index {k} out of range 1..{dim}")
                c[k - 1, i - 1, j - 1] = value
                c[k - 1, j - 1, i - 1] = -value
        return cls(dim, c)

    def __repr__(self):
        nonzero = int(np.count_nonzero(self.c)) // 2
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={nonzero})"


def _constants(algebra):
    if isinstance(algebra, LieAlgebra):
        return algebra.c
    return np.asarray(algebra, dtype=float)


def bracket(algebra, x, y):
    """Lie bracket [x, y] of coefficient vectors."""
    c = _constants(algebra)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = c.shape[0]
    if x.shape != (n,) or y.shape != (n,):
        raise ValueError(f"bracket arguments must be length-{n} vectors")
    return np.einsum("kij,i,j->k", c, x, y)


def ad(algebra, z):
    """Adjoint endomorphism ad_z = [z, .] as an n x n matrix."""
    c = _constants(algebra)
    z = np.asarray(z, dtype=float)
    n = c.shape[0]
    if z.shape != (n,):
        raise ValueError(f"ad argument must be a length-{n} vector")
    return np.tensordot(z, c, axes=(0, 1))


def jacobi_defect(algebra):
    """Max-norm of the Jacobiator over all basis triples.

    Accepts a LieAlgebra or a raw constants array (the latter is what the
    constructor itself uses, and lets invalid candidates be diagnosed).
    """
    c = _constants(algebra)
    q = np.einsum("mik,kjl->mijl", c, c)
    jac = q + q.transpose(0, 2, 3, 1) + q.transpose(0, 3, 1, 2)
    return float(np.max(np.abs(jac)))


def nilpotency_step(algebra, tol=RANK_TOL):
    """Length of the lower central series; None if not nilpotent.

    g^(1) = g, g^(m+1) = [g, g^(m)]; the step is the last m with
    g^(m) != 0.  Ranks are decided by singular values above ``tol``.
    """
    c = _constants(algebra)
    n = c.shape[0]
    span = np.eye(n)
    rank = n
    step = 1
    while True:
        image = np.tensordot(c, span, axes=(2, 0)).reshape(n, -1)
        new_rank = int(np.linalg.matrix_rank(image, tol=tol))
        if new_rank == 0:
            return step
        if new_rank >= rank:
            return None
        u, _, _ = np.linalg.svd(image, full_matrices=False)
        span = u[:, :new_rank]
        rank = new_rank
        step += 1


def ce_d1(algebra, theta):
    """Differential of a 1-form: (d theta)(X, Y) = -theta([X, Y])."""
    c = _constants(algebra)
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (c.shape[0],):
        raise ValueError(f"1-form must be a length-{c.shape[0]} vector")
    return -np.tensordot(theta, c, axes=(0, 0))


def ce_d2(algebra, B):
    """Differential of a 2-form:

    (dB)(X, Y, Z) = -B([X, Y], Z) + B([X, Z], Y) - B([Y, Z], X).
    """
    c = _constants(algebra)
    B = np.asarray(B, dtype=float)
    n = c.shape[0]
    if B.shape != (n, n):
        raise ValueError(f"2-form must be an {n} x {n} matrix")
    # d1[i, j, l] = B([e_i, e_j], e_l)
    d1 = np.tensordot(c, B, axes=(0, 0))
    return -(d1 - d1.transpose(0, 2, 1) + d1.transpose(2, 0, 1))


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _d1_matrix(c):
    """ce_d1 as a matrix from 1-forms to upper-triangle 2-form coordinates."""
    n = c.shape[0]
    pairs = _pairs(n)
    rows = np.empty((len(pairs), n))
    for r, (i, j) in enumerate(pairs):
        rows[r] = -c[:, i, j]
    return rows


def _d2_matrix(algebra):
    """ce_d2 as a matrix from upper-triangle 2-forms to increasing-triple 3-forms."""
    c = _constants(algebra)
    n = c.shape[0]
    pairs = _pairs(n)
    triples = [(i, j, l) for i in range(n) for j in range(i + 1, n) for l in range(j + 1, n)]
    mat = np.empty((len(triples), len(pairs)))
    for col, (p, q) in enumerate(pairs):
        basis_form = np.zeros((n, n))
        basis_form[p, q] = 1.0
        basis_form[q, p] = -1.0
        image = ce_d2(c, basis_form)
        mat[:, col] = [image[t] for t in triples]
    return mat


def ce_betti(algebra, k, tol=RANK_TOL):
    """Lie algebra cohomology Betti number b_k for k in {0, 1, 2}."""
    if k not in (0, 1, 2):
        raise ValueError("Betti numbers are implemented for k in {0, 1, 2}")
    c = _constants(algebra)
    n = c.shape[0]
    if k == 0:
        return 1
    d1 = _d1_matrix(c)
    rank_d1 = int(np.linalg.matrix_rank(d1, tol=tol))
    if k == 1:
        return n - rank_d1
    d2 = _d2_matrix(c)
    rank_d2 = int(np.linalg.matrix_rank(d2, tol=tol)) if d2.size else 0
    n_pairs = n * (n - 1) // 2
    return (n_pairs - rank_d2) - rank_d1


def exact_primitive(algebra, B, tol=RANK_TOL):
    """Least-squares primitive theta with d(theta) = B; None if B is not exact.

    The minimum-norm solution of the linear system is returned when the
    reconstruction residual max|d(theta) - B| stays below ``tol``.
    """
    c = _constants(algebra)
    B = np.asarray(B, dtype=float)
    n = c.shape[0]
    if B.shape != (n, n):
        raise ValueError(f"2-form must be an {n} x {n} matrix")
    d1 = _d1_matrix(c)
    target = np.array([B[i, j] for (i, j) in _pairs(n)])
    theta, _, _, _ = np.linalg.lstsq(d1, target, rcond=None)
    residual = float(np.max(np.abs(ce_d1(c, theta) - B)))
    if residual >= tol:
        return None
    return theta

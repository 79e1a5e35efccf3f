"""Curvature of left-invariant metrics on a Lie algebra.

Index conventions:

* connection form ``A[k, i, j]``: A_{e_j} e_i = sum_k A[k, i, j] e_k,
* curvature ``R[k, l, i, j]``: endomorphism slot (k, l), 2-form slot
  (i, j), with R(X, Y) = [A_X, A_Y] - A_{[X, Y]} on left-invariant
  fields,
* Ricci form Ric(X, Y) = trace of Z -> R(Z, X) Y, symmetrised,
* Nijenhuis tensor N(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y],
* pointwise tensor norms contract every slot against a g-orthonormal
  frame and sum squares over ordered index tuples.
"""

import numpy as np

from scflab.lie_core import _constants


def levi_civita(algebra, g):
    """Levi-Civita connection form from the Koszul formula.

    In a left-invariant frame,
    2 g(e_k, A_{e_j} e_i) = g([e_j, e_i], e_k) - g([e_j, e_k], e_i)
                                               - g([e_i, e_k], e_j).
    Raises numpy.linalg.LinAlgError for singular g.
    """
    c = _constants(algebra)
    n = c.shape[0]
    g = np.asarray(g, dtype=float)
    # u[x, y, z] = sum_m g[m, x] c[m, y, z]
    u = np.tensordot(g, c, axes=(0, 0))
    rhs = u.transpose(0, 2, 1) - u.transpose(2, 0, 1) - u.transpose(2, 1, 0)
    return 0.5 * np.linalg.solve(g, rhs.reshape(n, n * n)).reshape(n, n, n)


def riemann(algebra, A):
    """Curvature tensor R[k, l, i, j] of a connection form."""
    c = _constants(algebra)
    t = np.einsum("kpi,plj->klij", A, A)
    return t - t.transpose(0, 1, 3, 2) - np.tensordot(A, c, axes=(2, 0))


def ricci(algebra, R):
    """Ricci form Ric(X, Y) = tr(Z -> R(Z, X) Y), symmetrised."""
    ric = np.einsum("kjki->ij", R)
    return 0.5 * (ric + ric.T)


def ricci_asymmetry(algebra, R):
    """Max-norm of the Ricci contraction minus its transpose, before symmetrisation."""
    ric = np.einsum("kjki->ij", R)
    return float(np.max(np.abs(ric - ric.T)))


def ricci_endomorphism(g, Ric):
    """Rc = g^-1 Ric, the Ricci tensor with one index raised."""
    return np.linalg.solve(g, Ric)


def chern_connection(A, J):
    """Chern connection C_Z = (A_Z - J A_Z J) / 2; commutes with J."""
    return 0.5 * (A - np.einsum("ka,abj,bi->kij", J, A, J))


def chern_ricci_trace(algebra, A, J):
    """Chern-Ricci form from connection traces:

    P(X, Y) = -tr(A_{[X, Y]} o J).

    Valid for almost Kahler pairs (closed omega); this is the route
    through the Chern connection's trace form.
    """
    c = _constants(algebra)
    # tr(A_m J) for each frame direction m
    tr_AJ = np.tensordot(A, J, axes=([1, 0], [0, 1]))
    return -np.tensordot(tr_AJ, c, axes=(0, 0))


def chern_ricci_adjoint(algebra, J):
    """Chern-Ricci form from adjoint traces, metric independent:

    P(X, Y) = -tr(ad_{[X, Y]} o J + J o ad_{[X, Y]}) / 2 - tr ad_{J[X, Y]}.

    The two trace terms in the first summand agree, so this reduces to
    -tr(ad_{[X, Y]} o J) - tr ad_{J[X, Y]}.
    """
    c = _constants(algebra)
    J = np.asarray(J, dtype=float)
    # t1[m] = tr(ad_{e_m} o J), t2[m] = tr ad_{e_m}
    t1 = np.einsum("kmj,jk->m", c, J)
    t2 = np.einsum("kmk->m", c)
    return -np.tensordot(t1, c, axes=(0, 0)) - np.tensordot(t2 @ J, c, axes=(0, 0))


def nijenhuis(algebra, J):
    """Nijenhuis tensor components N[k, i, j] of N(e_i, e_j)."""
    c = _constants(algebra)
    J = np.asarray(J, dtype=float)
    t = np.einsum("kab,ai,bj->kij", c, J, J)
    u = np.einsum("kl,laj,ai->kij", J, c, J)
    v = np.einsum("kl,lib,bj->kij", J, c, J)
    return t - u - v - c


def norm_nijenhuis(g, N):
    """Squared norm of the Nijenhuis tensor in a g-orthonormal frame,
    summed over ordered argument pairs."""
    ginv = np.linalg.inv(g)
    return float(np.einsum("kij,lmn,kl,im,jn->", N, N, g, ginv, ginv, optimize=True))


def norm_riemann(g, R):
    """Squared norm of the curvature tensor: the full four-index
    contraction R_abcd = g(R(f_c, f_d) f_b, f_a) over a g-orthonormal
    frame, summed over all ordered index tuples."""
    ginv = np.linalg.inv(g)
    return float(
        np.einsum("klij,mnpq,km,ln,ip,jq->", R, R, g, ginv, ginv, ginv, optimize=True)
    )

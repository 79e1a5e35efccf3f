"""Tests for structure constants, brackets, and Chevalley-Eilenberg cohomology."""
import numpy as np
import pytest

from scflab import (
    LieAlgebra,
    ad,
    bracket,
    ce_betti,
    ce_d1,
    ce_d2,
    exact_primitive,
    jacobi_defect,
    nilpotency_step,
)


def n4_algebra():
    return LieAlgebra.from_brackets(4, {(1, 2): {3: 1.0}, (2, 3): {4: 1.0}})


def test_from_brackets_builds_antisymmetric_constants():
    L = n4_algebra()
    assert L.dim == 4
    # [e1, e2] = e3 and [e2, e3] = e4, indices 1-based in the input
    assert L.c[2, 0, 1] == 1.0
    assert L.c[2, 1, 0] == -1.0
    assert L.c[3, 1, 2] == 1.0
    assert L.c[3, 2, 1] == -1.0
    assert np.max(np.abs(L.c + np.swapaxes(L.c, 1, 2))) == 0.0


def test_constants_are_frozen():
    L = n4_algebra()
    with pytest.raises(ValueError):
        L.c[0, 0, 0] = 1.0


def test_jacobi_violation_rejected():
    c = np.zeros((4, 4, 4))
    for i, j, k, v in ((1, 2, 3, 1.0), (1, 3, 4, 1.0), (2, 3, 2, 1.0)):
        c[k - 1, i - 1, j - 1] = v
        c[k - 1, j - 1, i - 1] = -v
    assert jacobi_defect(c) == 1.0
    with pytest.raises(ValueError, match="Jacobi"):
        LieAlgebra(4, c)


def test_antisymmetry_violation_rejected():
    c = np.zeros((3, 3, 3))
    c[2, 0, 1] = 1.0
    with pytest.raises(ValueError, match="antisymmetric"):
        LieAlgebra(3, c)


def test_bracket_and_ad_agree():
    L = n4_algebra()
    e = np.eye(4)
    assert np.array_equal(bracket(L, e[0], e[1]), e[2])
    assert np.array_equal(bracket(L, e[1], e[2]), e[3])
    assert np.array_equal(bracket(L, e[1], e[0]), -e[2])
    # ad_{e2} sends e1 to -e3 and e3 to e4
    M = ad(L, e[1])
    assert M[2, 0] == -1.0
    assert M[3, 2] == 1.0
    rng = np.random.default_rng(0)
    for _ in range(20):
        x = rng.standard_normal(4)
        y = rng.standard_normal(4)
        assert np.allclose(ad(L, x) @ y, bracket(L, x, y), atol=1e-14)


def test_ad_is_a_homomorphism():
    L = n4_algebra()
    rng = np.random.default_rng(1)
    for _ in range(30):
        x = rng.standard_normal(4)
        y = rng.standard_normal(4)
        lhs = ad(L, bracket(L, x, y))
        rhs = ad(L, x) @ ad(L, y) - ad(L, y) @ ad(L, x)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_nilpotency_step():
    assert nilpotency_step(n4_algebra()) == 3
    kt = LieAlgebra.from_brackets(4, {(1, 2): {3: 1.0}})
    assert nilpotency_step(kt) == 2
    abelian = LieAlgebra(2, np.zeros((2, 2, 2)))
    assert nilpotency_step(abelian) == 1
    # [e1, e2] = e2 is solvable but not nilpotent
    solvable = LieAlgebra.from_brackets(2, {(1, 2): {2: 1.0}})
    assert nilpotency_step(solvable) is None


def test_ce_d1_of_dual_basis():
    L = n4_algebra()
    # d e3 = -e1^e2 and d e4 = -e2^e3; e1, e2 are closed
    d3 = ce_d1(L, np.array([0.0, 0.0, 1.0, 0.0]))
    assert d3[0, 1] == -1.0 and d3[1, 0] == 1.0
    d4 = ce_d1(L, np.array([0.0, 0.0, 0.0, 1.0]))
    assert d4[1, 2] == -1.0 and d4[2, 1] == 1.0
    assert np.max(np.abs(ce_d1(L, np.array([1.0, 0.0, 0.0, 0.0])))) == 0.0
    assert np.max(np.abs(ce_d1(L, np.array([0.0, 1.0, 0.0, 0.0])))) == 0.0


def test_ce_d2_on_two_forms():
    L = n4_algebra()
    # d(e1^e4) evaluated on (e1, e2, e3) equals 1
    B = np.zeros((4, 4))
    B[0, 3], B[3, 0] = 1.0, -1.0
    T = ce_d2(L, B)
    assert T[0, 1, 2] == 1.0
    # e1^e3 is closed
    B = np.zeros((4, 4))
    B[0, 2], B[2, 0] = 1.0, -1.0
    assert np.max(np.abs(ce_d2(L, B))) == 0.0


def test_d_squared_is_zero():
    rng = np.random.default_rng(2)
    for L in (n4_algebra(), LieAlgebra.from_brackets(6, {(1, 2): {5: 1.0}, (3, 4): {6: 1.0}})):
        for _ in range(25):
            theta = rng.standard_normal(L.dim)
            assert np.max(np.abs(ce_d2(L, ce_d1(L, theta)))) < 1e-13


def test_betti_numbers():
    # b1 counts generators modulo the derived algebra; values checked
    # against the Kunneth decomposition of the product families
    assert [ce_betti(n4_algebra(), k) for k in (0, 1, 2)] == [1, 2, 2]
    kt = LieAlgebra.from_brackets(4, {(1, 2): {3: 1.0}})
    assert [ce_betti(kt, k) for k in (0, 1, 2)] == [1, 3, 4]
    hh = LieAlgebra.from_brackets(6, {(1, 2): {5: 1.0}, (3, 4): {6: 1.0}})
    assert [ce_betti(hh, k) for k in (0, 1, 2)] == [1, 4, 8]
    abelian = LieAlgebra(2, np.zeros((2, 2, 2)))
    assert [ce_betti(abelian, k) for k in (0, 1, 2)] == [1, 2, 1]
    with pytest.raises(ValueError):
        ce_betti(kt, 3)


def test_exact_primitive():
    L = n4_algebra()
    B = np.zeros((4, 4))
    B[0, 1], B[1, 0] = 1.0, -1.0
    theta = exact_primitive(L, B)
    assert np.allclose(theta, [0.0, 0.0, -1.0, 0.0], atol=1e-12)
    assert np.max(np.abs(ce_d1(L, theta) - B)) < 1e-12
    # e1^e3 is closed but not exact
    B = np.zeros((4, 4))
    B[0, 2], B[2, 0] = 1.0, -1.0
    assert exact_primitive(L, B) is None
    # nonzero forms on an abelian algebra are never exact
    abelian = LieAlgebra(2, np.zeros((2, 2, 2)))
    W = np.array([[0.0, 1.0], [-1.0, 0.0]])
    assert exact_primitive(abelian, W) is None


def test_bracket_dimension_mismatch():
    L = n4_algebra()
    with pytest.raises(ValueError):
        bracket(L, np.ones(3), np.ones(4))

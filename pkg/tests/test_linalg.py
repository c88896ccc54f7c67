import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conescore import (
    InputError,
    Restriction,
    Tolerances,
    compute_affine_hull,
    numeric_rank,
    orthonormal_basis,
    project_complement,
    recover_A,
)
from conftest import TOL, fixture_generators, load_fixture

SQUARE_Z = np.array(load_fixture("square_cone_generators.json")["generators"])


class TestNumericRank:
    def test_square_cone_matrix(self):
        assert numeric_rank(SQUARE_Z) == 3

    def test_zero_matrix(self):
        assert numeric_rank(np.zeros((4, 3))) == 0

    def test_empty(self):
        assert numeric_rank(np.zeros((0, 3))) == 0

    def test_rank2_product(self, rng):
        # rank known by construction
        M = rng.standard_normal((5, 2)) @ rng.standard_normal((2, 5))
        assert numeric_rank(M) == 2

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_transpose_invariant(self, seed):
        g = np.random.default_rng(seed)
        M = g.standard_normal((g.integers(1, 7), g.integers(1, 7)))
        assert numeric_rank(M) == numeric_rank(M.T)


class TestOrthonormalBasis:
    def test_collinear_pair(self):
        B = orthonormal_basis([[2.0, 1.0], [4.0, 2.0]])
        assert B.shape == (2, 1)
        assert np.allclose(B[:, 0], np.array([2.0, 1.0]) / np.sqrt(5))

    def test_standard_basis(self):
        B = orthonormal_basis(np.eye(2))
        assert B.shape == (2, 2)
        assert np.allclose(np.abs(B.T @ B), np.eye(2))
        # spans R^2
        assert numeric_rank(B) == 2

    def test_all_zero_input(self):
        assert orthonormal_basis(np.zeros((3, 4))).shape == (4, 0)

    def test_span_recovery_in_subspace(self, rng):
        S = rng.standard_normal((3, 6))  # 3-dim subspace of R^6
        V = rng.standard_normal((10, 3)) @ S
        B = orthonormal_basis(V)
        assert B.shape == (6, 3)
        resid = V - (V @ B) @ B.T
        assert np.max(np.abs(resid)) <= 1e-9

    def test_orthonormality_bound(self, rng):
        for _ in range(20):
            V = rng.standard_normal((rng.integers(1, 8), rng.integers(1, 8)))
            B = orthonormal_basis(V)
            if B.shape[1]:
                assert np.max(np.abs(B.T @ B - np.eye(B.shape[1]))) <= 10 * TOL.rank_tol


class TestAffineHull:
    def test_correlated_line(self):
        hull = compute_affine_hull([[-1, 0], [1, 1], [0, 0.5]])
        assert hull.dim == 1
        assert np.allclose(np.abs(hull.basis[:, 0]), np.array([2, 1]) / np.sqrt(5))

    def test_single_point(self):
        hull = compute_affine_hull([[3.0, 4.0]])
        assert hull.dim == 0
        assert hull.basis.shape == (2, 0)

    def test_plane_in_r4(self, rng):
        # 20 points on the plane [1,-1,1,-1] . f = 0
        normal = np.array([1.0, -1.0, 1.0, -1.0])
        P = rng.standard_normal((20, 4))
        P -= np.outer(P @ normal / 4.0, normal)
        hull = compute_affine_hull(P)
        assert hull.dim == 3

    def test_order_invariance(self, rng):
        F = rng.standard_normal((8, 3))
        h1 = compute_affine_hull(F)
        h2 = compute_affine_hull(F[::-1])
        assert h1.dim == h2.dim
        assert np.allclose(h1.anchor, h2.anchor)

    def test_anchor_residual(self, rng):
        F = rng.standard_normal((6, 2)) @ rng.standard_normal((2, 5)) + rng.standard_normal(5)
        hull = compute_affine_hull(F)
        resid = project_complement(F - hull.anchor, hull.basis)
        assert np.max(np.abs(resid)) <= 10 * TOL.rank_tol

    def test_empty_errors(self):
        with pytest.raises(InputError, match="no samples"):
            compute_affine_hull(np.zeros((0, 2)))


class TestProjectComplement:
    def test_off_e1(self):
        out = project_complement([[1.0, 1.0]], np.array([[1.0], [0.0]]))
        assert np.allclose(out, [[0.0, 1.0]])

    def test_row_inside_span(self):
        Z = orthonormal_basis([[2.0, 1.0]])
        assert np.allclose(project_complement([[4.0, 2.0]], Z), 0.0)

    def test_halfspace_rows(self):
        Z = orthonormal_basis([[2.0, 1.0]])
        out = project_complement([[1.0, 2.0], [-2.0, 2.0]], Z)
        # both land on the direction (-1, 2), orthogonal to (2, 1)
        assert np.allclose(out @ np.array([2.0, 1.0]), 0.0)
        assert np.allclose(out[0] / out[0][1], out[1] / out[1][1])

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            project_complement(np.ones((2, 3)), np.ones((2, 1)))


class TestRecoverA:
    def test_coordinate_selection_on_line(self):
        Z = orthonormal_basis([[2.0, 1.0]])  # 2 x 1
        A = recover_A(Z[0:1], Z, Restriction.RES_CS)
        assert np.array_equal(A, [[1.0, 0.0]])

    def test_identity_selection(self):
        Z = np.eye(3)
        A = recover_A(Z, Z, Restriction.RES_CS)
        assert np.array_equal(A, np.eye(3))

    def test_square_cone_paper_witness(self):
        # the published triangular witness is one valid A, ours another;
        # both must satisfy the A Z = V contract
        V = np.array(load_fixture("triangular_witness.json")["generators"])
        A_published = 0.25 * np.array(
            [[3, 3, -1, -1], [3, -3, -1, 5], [-3, 3, 5, -1]], float
        )
        assert np.allclose(A_published @ SQUARE_Z, V)
        A = recover_A(V, SQUARE_Z, Restriction.RES_L)
        assert np.max(np.abs(A @ SQUARE_Z - V)) <= 10 * TOL.rank_tol

    def test_min_norm_contract(self, rng):
        Z = orthonormal_basis(rng.standard_normal((4, 6)))
        V = rng.standard_normal((3, Z.shape[1]))
        A = recover_A(V, Z, Restriction.RES_L)
        assert np.max(np.abs(A @ Z - V)) <= 10 * TOL.rank_tol

    def test_not_selectable(self):
        Z = np.eye(2)
        with pytest.raises(InputError, match="not coordinate-selectable"):
            recover_A(np.array([[0.5, 0.5]]), Z, Restriction.RES_CS)


def test_tolerances_validate():
    with pytest.raises(InputError):
        Tolerances(rank_tol=0.0)
    with pytest.raises(InputError):
        Tolerances(cone_tol=2.0)

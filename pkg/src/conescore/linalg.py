"""Dense real linear-algebra primitives shared by every other module.

Numerical rank, orthonormal bases, affine hulls, complement projections, and
recovery of a score matrix A from its coefficient form V = A Z.  Everything
here is a pure function over immutable values; arrays handed out are never
mutated afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = [
    "Tolerances",
    "AffineHull",
    "as_matrix",
    "numeric_rank",
    "orthonormal_basis",
    "compute_affine_hull",
    "project_complement",
    "recover_A",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack knobs used throughout the package.

    rank_tol  - singular-value / pivot threshold
    feas_tol  - LP constraint slack
    cone_tol  - cone-membership and dominance slack
    """

    rank_tol: float = 1e-9
    feas_tol: float = 1e-8
    cone_tol: float = 1e-8

    def __post_init__(self) -> None:
        for name in ("rank_tol", "feas_tol", "cone_tol"):
            v = getattr(self, name)
            if not (0.0 < v < 1.0):
                raise InputError(f"{name} must lie strictly between 0 and 1, got {v}")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class AffineHull:
    """Affine hull of a finite sample set.

    anchor is the sample centroid, basis is a d x r matrix whose orthonormal
    columns span the associated linear subspace, dim = r.
    """

    anchor: np.ndarray
    basis: np.ndarray
    dim: int


def as_matrix(entries, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Coerce to a finite 2-D float array, validating shape if given."""
    M = np.asarray(entries, dtype=float)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise InputError(f"expected a 2-D matrix, got ndim={M.ndim}")
    if not np.all(np.isfinite(M)):
        raise InputError("matrix entries must be finite (no NaN/Inf)")
    if rows is not None and M.shape[0] != rows:
        raise InputError(f"expected {rows} rows, got {M.shape[0]}")
    if cols is not None and M.shape[1] != cols:
        raise InputError(f"expected {cols} cols, got {M.shape[1]}")
    return M


def numeric_rank(M, tol: Tolerances = DEFAULT_TOL) -> int:
    """Number of singular values above the rank threshold.

    The threshold is rank_tol scaled by max(1, largest singular value) so the
    count is stable under positive rescaling of well-conditioned input.
    """
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    if s.size == 0:
        return 0
    return int(np.sum(s > tol.rank_tol * max(1.0, s[0])))


def _fix_signs(B: np.ndarray) -> np.ndarray:
    # Deterministic sign convention: make each column's largest-magnitude
    # entry positive (ties broken by lowest row index via argmax).
    B = B.copy()
    for j in range(B.shape[1]):
        i = int(np.argmax(np.abs(B[:, j])))
        if B[i, j] < 0:
            B[:, j] = -B[:, j]
    return B


def orthonormal_basis(vectors, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (as columns of a d x r matrix) of span(vectors).

    Returns a d x 0 matrix for all-zero or empty input.  Deterministic: SVD
    plus a fixed sign convention.
    """
    V = np.asarray(vectors, dtype=float)
    if V.ndim == 1:
        V = V.reshape(1, -1)
    if V.size == 0:
        d = V.shape[1] if V.ndim == 2 else 0
        return np.zeros((d, 0))
    d = V.shape[1]
    _, s, vh = np.linalg.svd(V, full_matrices=False)
    if s.size == 0:
        return np.zeros((d, 0))
    r = int(np.sum(s > tol.rank_tol * max(1.0, s[0])))
    return _fix_signs(vh[:r].T)


def compute_affine_hull(samples, tol: Tolerances = DEFAULT_TOL) -> AffineHull:
    """Affine hull of the samples, anchored at their centroid.

    The hull is invariant to the anchor choice; the centroid makes the result
    independent of sample order.
    """
    F = np.asarray(samples, dtype=float)
    if F.ndim == 1:
        F = F.reshape(1, -1)
    if F.size == 0 or F.shape[0] == 0:
        raise InputError("no samples")
    anchor = F.mean(axis=0)
    basis = orthonormal_basis(F - anchor, tol)
    return AffineHull(anchor=anchor, basis=basis, dim=basis.shape[1])


def project_complement(W, Z) -> np.ndarray:
    """Project the rows of W onto the orthogonal complement of span(Z).

    Computes W (I - Z Z^T); Z must have orthonormal columns.
    """
    W = np.asarray(W, dtype=float)
    Z = np.asarray(Z, dtype=float)
    if W.ndim == 1:
        W = W.reshape(1, -1)
    if W.shape[1] != Z.shape[0]:
        raise InputError(
            f"dimension mismatch: W has {W.shape[1]} cols, Z has {Z.shape[0]} rows"
        )
    if Z.shape[1] == 0:
        return W.copy()
    return W - (W @ Z) @ Z.T


def recover_A(V, Z, restriction, selected_indices=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Recover a k x d score matrix A with A Z = V.

    For coordinate selection the rows of V must be rows of Z and A gets 1-hot
    rows picking those coordinates (selected_indices, when given, names them
    directly).  Otherwise the minimum-norm solution A = V Z^T is returned.
    """
    from .design import Restriction  # local import to avoid a cycle

    V = np.asarray(V, dtype=float)
    Z = np.asarray(Z, dtype=float)
    if V.ndim == 1:
        V = V.reshape(1, -1)
    d = Z.shape[0]
    if restriction == Restriction.RES_CS:
        k = V.shape[0]
        A = np.zeros((k, d))
        for i in range(k):
            if selected_indices is not None:
                j = int(selected_indices[i])
                if not np.allclose(Z[j], V[i], atol=10 * tol.rank_tol):
                    raise InputError("not coordinate-selectable")
            else:
                matches = [
                    j for j in range(d)
                    if np.allclose(Z[j], V[i], atol=10 * tol.rank_tol)
                ]
                if not matches:
                    raise InputError("not coordinate-selectable")
                j = matches[0]
            A[i, j] = 1.0
        return A
    return V @ Z.T

"""Polyhedral cone predicates and the lineality/pointed decomposition.

A cone is given by generators (rows of W); membership and pointedness reduce
to LP feasibility, and ``decompose`` peels off the lineality space
K  ∩ (-K) iteratively until the projected remainder is pointed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .linalg import DEFAULT_TOL, Tolerances, orthonormal_basis, project_complement
from .lp import FeasibilityProblem, solve_feasibility

__all__ = [
    "GeneratorSet",
    "ConeDecomposition",
    "is_in_cone",
    "is_pointed",
    "decompose",
    "partition_by_lineality",
]

_ZERO_ROW_TOL = 1e-12


@dataclass(frozen=True)
class GeneratorSet:
    """Rows of W generating cone K_W.  Zero rows are stripped at construction
    (dropped_zero_rows counts them); source_indices maps retained rows back to
    positions in the input."""

    generators: np.ndarray  # m x dim, no zero rows
    dim: int
    source_indices: tuple[int, ...]
    dropped_zero_rows: int

    @classmethod
    def from_rows(cls, rows, dim: int | None = None) -> "GeneratorSet":
        G = np.asarray(rows, dtype=float)
        if G.size == 0:
            if dim is None:
                raise InputError("empty generator set needs an explicit dimension")
            return cls(np.zeros((0, dim)), dim, (), 0)
        if G.ndim == 1:
            G = G.reshape(1, -1)
        if not np.all(np.isfinite(G)):
            raise InputError("generators must be finite")
        keep = np.max(np.abs(G), axis=1) > _ZERO_ROW_TOL
        kept = G[keep]
        return cls(
            np.ascontiguousarray(kept),
            G.shape[1],
            tuple(int(i) for i in np.nonzero(keep)[0]),
            int(np.sum(~keep)),
        )

    @property
    def m(self) -> int:
        return self.generators.shape[0]


@dataclass(frozen=True)
class ConeDecomposition:
    """K_W = L + K_P with L the lineality space and K_P pointed.

    lineality_basis: d x ell orthonormal columns spanning L
    lineal_generators: original rows of W lying inside L
    pointed_generators: projections of the remaining rows onto L-perp
    inside_rows / outside_rows: index lists into W for recovery
    """

    lineality_basis: np.ndarray
    lineal_generators: GeneratorSet
    pointed_generators: GeneratorSet
    inside_rows: tuple[int, ...]
    outside_rows: tuple[int, ...]
    ell: int


def is_in_cone(x, W: GeneratorSet, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff x = lam @ W for some lam >= 0, within cone_tol scaled by
    (1 + max|x|)."""
    x = np.asarray(x, dtype=float).ravel()
    if x.shape[0] != W.dim:
        raise InputError(f"point has dim {x.shape[0]}, cone has dim {W.dim}")
    slack = tol.cone_tol * (1.0 + float(np.max(np.abs(x), initial=0.0)))
    if W.m == 0:
        return bool(np.max(np.abs(x), initial=0.0) <= slack)
    eff = Tolerances(tol.rank_tol, max(tol.feas_tol, slack), tol.cone_tol)
    res = solve_feasibility(
        FeasibilityProblem(M=W.generators, target=x, require_nonneg=True), eff
    )
    return res.feasible


def is_pointed(W: GeneratorSet, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff K_W contains no line: no convex combination of generators is 0."""
    if W.m == 0:
        return True
    res = solve_feasibility(
        FeasibilityProblem(
            M=W.generators,
            target=np.zeros(W.dim),
            require_nonneg=True,
            sum_to_one=True,
        ),
        tol,
    )
    return not res.feasible


def decompose(W: GeneratorSet, tol: Tolerances = DEFAULT_TOL) -> ConeDecomposition:
    """Split K_W into lineality space plus pointed remnant.

    Repeatedly finds a convex zero-combination of the current projected rows,
    absorbs its support into the lineality basis, and re-projects; stops when
    the remaining projected cone is pointed.
    """
    G = W.generators
    d = W.dim
    Z = np.zeros((d, 0))
    P = G.copy()
    while True:
        active = np.nonzero(np.max(np.abs(P), axis=1, initial=0.0) > tol.cone_tol)[0]
        if active.size == 0:
            break
        res = solve_feasibility(
            FeasibilityProblem(
                M=P[active], target=np.zeros(d), require_nonneg=True, sum_to_one=True
            ),
            tol,
        )
        if not res.feasible:
            break
        support = active[res.witness > tol.feas_tol]
        # supported projected rows lie in the lineality of the projected cone;
        # they are orthogonal to Z already, so the basis strictly grows
        Z = orthonormal_basis(np.vstack([Z.T, P[support]]), tol)
        P = project_complement(G, Z)

    W_L, W_rest, inside, outside = partition_by_lineality(W, Z, tol)
    pointed = GeneratorSet.from_rows(project_complement(W_rest.generators, Z), dim=d)
    return ConeDecomposition(
        lineality_basis=Z,
        lineal_generators=W_L,
        pointed_generators=pointed,
        inside_rows=inside,
        outside_rows=outside,
        ell=Z.shape[1],
    )


def partition_by_lineality(
    W: GeneratorSet, lineality_basis: np.ndarray, tol: Tolerances = DEFAULT_TOL
):
    """Split rows of W by membership in span(lineality_basis).

    Classification is by projection residual (cheaper than an LP and exact
    for a subspace).  Returns (W_L, W_rest, inside_indices, outside_indices).
    """
    G = W.generators
    resid = project_complement(G, lineality_basis)
    if G.shape[0] == 0:
        inside_mask = np.zeros(0, dtype=bool)
    else:
        inside_mask = np.max(np.abs(resid), axis=1, initial=0.0) <= tol.cone_tol
    inside = tuple(int(i) for i in np.nonzero(inside_mask)[0])
    outside = tuple(int(i) for i in np.nonzero(~inside_mask)[0])
    W_L = GeneratorSet.from_rows(G[list(inside)], dim=W.dim)
    W_rest = GeneratorSet.from_rows(G[list(outside)], dim=W.dim)
    return W_L, W_rest, inside, outside

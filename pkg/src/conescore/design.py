"""Surrogate score design S(f) = A f over a sampled metric space.

Three restrictions on A (coordinate selection, linear monotone, linear) and
three objectives: improvement (score order implies metric order), optimality
(Pareto points of the scores are Pareto points of the metrics), or both.
The minimal score dimension k is the matching cone rank of the affine-hull
basis rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .cone import GeneratorSet
from .errors import InputError
from .linalg import AffineHull, DEFAULT_TOL, Tolerances, compute_affine_hull, recover_A
from .ranks import (
    DEFAULT_MAX_LINEALITY_DIM,
    RankKind,
    RankResult,
    cone_generating_rank,
    cone_rank,
    cone_subset_rank,
)

__all__ = [
    "Restriction",
    "Objective",
    "MetricSpace",
    "ScoreDesign",
    "design_improvement",
    "design_optimality",
    "design_both",
    "pareto_front",
]


class Restriction(Enum):
    RES_CS = "res-cs"  # 1-hot rows: pick metric coordinates
    RES_LM = "res-lm"  # linear and monotone
    RES_L = "res-l"    # linear, unrestricted


class Objective(Enum):
    IMPROVEMENT = "improvement"
    OPTIMALITY = "optimality"
    BOTH = "both"


@dataclass(frozen=True)
class MetricSpace:
    """Finite sample of metric vectors plus its derived affine hull.

    relint_nonempty is a user assertion (it cannot be decided from finitely
    many samples); it gates minimality certification only.
    """

    samples: np.ndarray
    hull: AffineHull
    relint_nonempty: bool = False

    @classmethod
    def from_samples(
        cls, samples, relint_nonempty: bool = False, tol: Tolerances = DEFAULT_TOL
    ) -> "MetricSpace":
        F = np.asarray(samples, dtype=float)
        if F.ndim == 1:
            F = F.reshape(1, -1)
        if F.size == 0 or not np.all(np.isfinite(F)):
            raise InputError("samples must be a nonempty finite array")
        return cls(F, compute_affine_hull(F, tol), relint_nonempty)

    @property
    def dim(self) -> int:
        return self.samples.shape[1]


@dataclass(frozen=True)
class ScoreDesign:
    """A k x d score matrix with its coefficient form V = A Z and provenance."""

    A: np.ndarray
    k: int
    restriction: Restriction
    objective: Objective
    V: np.ndarray
    rank_used: RankResult | None
    minimality_certified: bool
    warnings: tuple[str, ...] = field(default=())


def _hull_generators(space: MetricSpace):
    # rows of Z as generators in coefficient space; remember which metric
    # coordinate each retained row came from (zero rows drop out)
    Z = space.hull.basis
    W = GeneratorSet.from_rows(Z, dim=space.hull.dim)
    return Z, W


def _degenerate(space: MetricSpace, restriction, objective) -> ScoreDesign:
    d = space.dim
    return ScoreDesign(
        A=np.zeros((0, d)),
        k=0,
        restriction=restriction,
        objective=objective,
        V=np.zeros((0, 0)),
        rank_used=None,
        minimality_certified=False,
        warnings=("degenerate metric space: affine hull is a point, k = 0",),
    )


def _improvement_design(
    space: MetricSpace,
    restriction: Restriction,
    objective: Objective,
    kind: RankKind,
    tol: Tolerances,
    max_lineality_dim: int,
) -> ScoreDesign:
    Z, W = _hull_generators(space)
    if space.hull.dim == 0:
        return _degenerate(space, restriction, objective)
    if kind is RankKind.CSR:
        rank = cone_subset_rank(W, tol, max_lineality_dim)
    elif kind is RankKind.CGR:
        rank = cone_generating_rank(W, tol)
    else:
        rank = cone_rank(W, tol)
    V = rank.witness.generators
    selected = None
    if restriction is Restriction.RES_CS:
        # map witness subset indices back to original metric coordinates
        selected = [W.source_indices[i] for i in rank.subset_indices]
    A = recover_A(V, Z, restriction, selected_indices=selected, tol=tol)
    return ScoreDesign(
        A=A,
        k=rank.value,
        restriction=restriction,
        objective=objective,
        V=V,
        rank_used=rank,
        minimality_certified=space.relint_nonempty,
    )


def design_improvement(
    space: MetricSpace,
    restriction: Restriction,
    tol: Tolerances = DEFAULT_TOL,
    max_lineality_dim: int = DEFAULT_MAX_LINEALITY_DIM,
) -> ScoreDesign:
    """Minimal-k design for the improvement objective.

    k is the subset rank (Res-CS), generating rank (Res-LM) or cone rank
    (Res-L) of the affine-hull basis rows; A is recovered from the witness.
    """
    kind = {
        Restriction.RES_CS: RankKind.CSR,
        Restriction.RES_LM: RankKind.CGR,
        Restriction.RES_L: RankKind.CR,
    }[restriction]
    return _improvement_design(
        space, restriction, Objective.IMPROVEMENT, kind, tol, max_lineality_dim
    )


def design_optimality(
    space: MetricSpace, restriction: Restriction, tol: Tolerances = DEFAULT_TOL
) -> ScoreDesign:
    """Minimal-k design for the optimality objective.

    Any positive linear functional works for Res-LM/Res-L (k = 1, all-ones
    row); Res-CS selects r linearly independent metric coordinates (k = r).
    """
    Z = space.hull.basis
    d = space.dim
    r = space.hull.dim
    if r == 0:
        return _degenerate(space, restriction, Objective.OPTIMALITY)
    if restriction in (Restriction.RES_LM, Restriction.RES_L):
        A = np.ones((1, d))
        return ScoreDesign(
            A=A,
            k=1,
            restriction=restriction,
            objective=Objective.OPTIMALITY,
            V=A @ Z,
            rank_used=None,
            minimality_certified=False,
        )
    # Res-CS: first r linearly independent rows of Z, greedily by index
    chosen: list[int] = []
    for j in range(d):
        trial = chosen + [j]
        if np.linalg.matrix_rank(Z[trial], tol=tol.rank_tol) == len(trial):
            chosen.append(j)
        if len(chosen) == r:
            break
    if len(chosen) < r:  # pragma: no cover - Z has rank r by construction
        raise InputError("could not select independent coordinates")
    A = np.zeros((r, d))
    A[np.arange(r), chosen] = 1.0
    return ScoreDesign(
        A=A,
        k=r,
        restriction=Restriction.RES_CS,
        objective=Objective.OPTIMALITY,
        V=Z[chosen],
        rank_used=None,
        minimality_certified=False,
    )


def design_both(
    space: MetricSpace,
    restriction: Restriction,
    tol: Tolerances = DEFAULT_TOL,
    max_lineality_dim: int = DEFAULT_MAX_LINEALITY_DIM,
) -> ScoreDesign:
    """Design satisfying improvement and optimality simultaneously.

    The witness cone must regenerate the hull cone exactly (monotone score),
    so Res-L uses the generating rank here, not the cone rank.
    """
    kind = RankKind.CSR if restriction is Restriction.RES_CS else RankKind.CGR
    return _improvement_design(
        space, restriction, Objective.BOTH, kind, tol, max_lineality_dim
    )


def pareto_front(points, score=None, tol: Tolerances = DEFAULT_TOL) -> list[int]:
    """Indices of points not dominated under the (optionally scored) order.

    j dominates i when score(f_j) >= score(f_i) - cone_tol componentwise with
    at least one coordinate ahead by more than cone_tol.  Without a score the
    raw metric order is used.
    """
    F = np.asarray(points, dtype=float)
    if F.ndim == 1:
        F = F.reshape(1, -1)
    if F.shape[0] == 0:
        raise InputError("pareto_front needs at least one point")
    S = F if score is None else F @ np.asarray(score, dtype=float).T
    eps = tol.cone_tol
    front = []
    for i in range(S.shape[0]):
        geq = np.all(S >= S[i] - eps, axis=1)
        ahead = np.any(S > S[i] + eps, axis=1)
        if not np.any(geq & ahead):
            front.append(i)
    return front

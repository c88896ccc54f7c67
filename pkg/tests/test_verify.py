import numpy as np
import pytest

from conescore import (
    GeneratorSet,
    MetricSpace,
    Objective,
    Restriction,
    ScoreDesign,
    check_cone_equal,
    check_cone_subset,
    check_improvement,
    check_optimality,
    check_restriction,
    cone_generating_rank,
    design_improvement,
)
from conftest import TOL, fixture_generators, l1_ball_samples, linf_grid, load_fixture


def manual_design(A, samples, restriction=Restriction.RES_L, objective=Objective.BOTH):
    space = MetricSpace.from_samples(samples)
    A = np.atleast_2d(np.asarray(A, float))
    return space, ScoreDesign(
        A=A, k=A.shape[0], restriction=restriction, objective=objective,
        V=A @ space.hull.basis, rank_used=None, minimality_certified=False,
    )


class TestCheckImprovement:
    def test_passes_without_relint_hypothesis(self):
        # a 1-row selection works here even though the hull is 2-dimensional
        doc = load_fixture("improvement_without_relint.json")
        space, design = manual_design(doc["design"]["A"], doc["metrics_samples"])
        rep = check_improvement(design, space.samples)
        assert rep.passed
        assert rep.checked_pairs == 6

    def test_grid_counterexample(self):
        pts = linf_grid(2, 1.0)
        space, design = manual_design([[1.0, 0.0]], pts)
        rep = check_improvement(design, space.samples)
        assert not rep.passed
        # pairs differing only in the dropped coordinate violate the objective
        pairs = {v[0] for v in rep.violations}
        i = pts.tolist().index([0.0, 0.0])
        j = pts.tolist().index([0.0, -1.0])
        assert (i, j) in pairs

    def test_identity_always_passes(self, rng):
        F = rng.standard_normal((25, 3))
        space, design = manual_design(np.eye(3), F)
        assert check_improvement(design, F).passed


class TestCheckOptimality:
    def test_linf_grid_single_coordinate_fails(self):
        pts = linf_grid(2, 0.5)
        space, design = manual_design([[1.0, 0.0]], pts)
        rep = check_optimality(design, pts)
        assert not rep.passed

    def test_identity_passes(self):
        pts = linf_grid(2, 0.5)
        space, design = manual_design(np.eye(2), pts)
        assert check_optimality(design, pts).passed

    def test_l1_ball_single_coordinate_passes(self, rng):
        pts = l1_ball_samples(rng, 2, 60)
        space, design = manual_design([[1.0, 0.0]], pts)
        assert check_optimality(design, pts).passed


class TestCheckRestriction:
    def test_identity_is_coordinate_selection(self):
        space, design = manual_design(
            np.eye(2), [[-1, 0], [1, -1], [-3, 1]], restriction=Restriction.RES_CS
        )
        rep = check_restriction(design, space.hull)
        assert rep.passed and rep.check_name == "restriction-res-cs"

    def test_lm_certificate_from_generating_witness(self):
        samples = load_fixture("square_cone_samples.json")["metrics_samples"]
        space = MetricSpace.from_samples(samples)
        design = design_improvement(space, Restriction.RES_LM)
        rep = check_restriction(design, space.hull)
        assert rep.passed
        assert rep.check_name == "restriction-res-lm-certificate"

    def test_lm_evidence_rejects_sign_flip(self):
        space, design = manual_design(
            [[1.0, -1.0]], [[-1, 0], [1, -1], [-3, 1], [0, 0]],
            restriction=Restriction.RES_LM,
        )
        rep = check_restriction(design, space.hull)
        assert not rep.passed
        assert rep.check_name == "restriction-res-lm-evidence"

    def test_res_l_vacuous(self):
        space, design = manual_design([[1.0, -5.0]], [[0, 0], [1, 2], [2, 1]])
        rep = check_restriction(design, space.hull)
        assert rep.passed


class TestConeContainment:
    def test_scaled_ray_equal(self):
        W = GeneratorSet.from_rows([[2.0, 1.0], [4.0, 2.0]])
        V = GeneratorSet.from_rows([[1.0, 0.5]])
        assert check_cone_equal(W, V)

    def test_strict_enclosure_is_not_equality(self):
        W = fixture_generators("square_cone_generators.json")
        V = fixture_generators("triangular_witness.json")
        assert check_cone_subset(W, V)
        assert not check_cone_subset(V, W)
        assert not check_cone_equal(W, V)

    def test_self_subset(self):
        W = fixture_generators("halfspace_2d.json")
        assert check_cone_subset(W, W)

    def test_generating_witness_equivalence_relation(self, rng):
        # reflexive + symmetric across observed witness pairs
        for _ in range(5):
            G = rng.standard_normal((6, 3))
            W = GeneratorSet.from_rows(G)
            V = cone_generating_rank(W).witness
            assert check_cone_equal(W, V)
            assert check_cone_equal(V, W)
            assert check_cone_equal(V, V)


def test_monotone_improvement_implies_optimality(rng):
    # small-scale version of the design-theorem fuzz in the acceptance suite
    hits = 0
    for _ in range(60):
        d = int(rng.integers(1, 4))
        F = rng.standard_normal((int(rng.integers(2, 12)), d))
        A = rng.random((int(rng.integers(1, 4)), d)) * (rng.random() * 2)
        space, design = manual_design(A, F)
        if check_improvement(design, F).passed:
            hits += 1
            assert check_optimality(design, F).passed
    assert hits > 0

import numpy as np
import pytest
from hypothesis import given, strategies as st

from statediscrim import (
    DetectionPair,
    DimensionMismatch,
    DiscriminationProblem,
    InvalidDetectionPair,
    InvalidPriors,
    PureVsUniformScenario,
    Strategy,
    classify_strategy,
    embed_scenario,
    error_probability,
    helstrom_min_error,
    random_density,
    trace_norm,
    weighted_difference,
)
from statediscrim.minimum_error import random_detection_pair, zero_threshold

from conftest import pure, random_problem

seeds = st.integers(0, 2**32 - 1)


def overlap_pair(s):
    return pure([1, 0]), pure([s, np.sqrt(1 - s * s)])


class TestProblem:
    def test_eta2_defaults(self):
        p = DiscriminationProblem(np.eye(2) / 2, np.eye(2) / 2, 0.3)
        assert p.eta2 == pytest.approx(0.7)

    def test_prior_sum(self):
        with pytest.raises(InvalidPriors):
            DiscriminationProblem(np.eye(2) / 2, np.eye(2) / 2, 0.3, 0.6)

    def test_prior_range(self):
        with pytest.raises(InvalidPriors):
            DiscriminationProblem(np.eye(2) / 2, np.eye(2) / 2, 1.2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            DiscriminationProblem(np.eye(2) / 2, np.eye(3) / 3, 0.5)


class TestWeightedDifference:
    def test_equal_states_equal_priors(self):
        rho = random_density(3, 2, 1)
        assert np.max(np.abs(weighted_difference(DiscriminationProblem(rho, rho, 0.5)))) == 0.0

    def test_orthogonal(self):
        lam = weighted_difference(DiscriminationProblem(pure([1, 0]), pure([0, 1]), 0.5))
        np.testing.assert_allclose(lam, np.diag([-0.5, 0.5]))

    def test_linearity(self):
        rho = random_density(3, 3, 2)
        lam = weighted_difference(DiscriminationProblem(rho, rho, 0.3))
        np.testing.assert_allclose(lam, 0.4 * rho, atol=1e-15)
        assert np.trace(lam).real == pytest.approx(0.4, abs=1e-12)

    @given(seeds)
    def test_trace(self, seed):
        p = random_problem(seed)
        assert np.trace(weighted_difference(p)).real == pytest.approx(p.eta2 - p.eta1, abs=1e-12)


class TestErrorProbability:
    def test_always_guess_two(self):
        p = random_problem(5)
        d = DetectionPair(np.zeros((p.dim, p.dim)), np.eye(p.dim))
        assert error_probability(p, d) == pytest.approx(p.eta1, abs=1e-15)

    def test_orthogonal_support_projectors(self):
        p = DiscriminationProblem(pure([1, 0, 0]), np.diag([0, 0.5, 0.5]), 0.4)
        d = DetectionPair(np.diag([1.0, 0, 0]), np.diag([0, 1.0, 1.0]))
        assert error_probability(p, d) == 0.0

    @given(seeds)
    def test_coin_flip(self, seed):
        p = random_problem(seed)
        half = np.eye(p.dim) / 2
        assert error_probability(p, DetectionPair(half, half)) == pytest.approx(0.5, abs=1e-14)

    def test_invalid_pair(self):
        p = random_problem(0, 2, 2)
        with pytest.raises(InvalidDetectionPair):
            error_probability(p, DetectionPair(np.eye(2), np.eye(2)))
        with pytest.raises(InvalidDetectionPair):
            error_probability(p, DetectionPair(np.diag([1.5, 0]), np.diag([-0.5, 1])))

    def test_dimension_mismatch(self):
        p = random_problem(0, 2, 2)
        with pytest.raises(DimensionMismatch):
            error_probability(p, DetectionPair(np.zeros((3, 3)), np.eye(3)))


class TestHelstrom:
    def test_pure_overlap(self):
        # oracle: explicit 2x2 Lambda has eigenvalues -0.4, 0.4 (mpmath)
        p = DiscriminationProblem(*overlap_pair(0.6), 0.5)
        res = helstrom_min_error(p)
        assert res.p_error == pytest.approx(0.1, abs=1e-12)
        np.testing.assert_allclose(res.lambda_spectrum, [-0.4, 0.4], atol=1e-15)
        assert res.strategy is Strategy.PROJECTIVE_MEASUREMENT

    @pytest.mark.parametrize("eta1", [0.2, 0.5, 0.8])
    def test_identical_states(self, eta1):
        rho = random_density(4, 2, 11)
        res = helstrom_min_error(DiscriminationProblem(rho, rho, eta1))
        assert res.p_error == pytest.approx(min(eta1, 1 - eta1), abs=1e-12)
        expected = Strategy.ALWAYS_GUESS_STATE1 if eta1 > 0.5 else Strategy.ALWAYS_GUESS_STATE2
        assert res.strategy is expected

    def test_always_guess_state1_has_zero_pi2(self):
        rho = random_density(4, 2, 3)
        res = helstrom_min_error(DiscriminationProblem(rho, rho, 0.8))
        np.testing.assert_allclose(res.detection.pi2, 0, atol=1e-14)
        np.testing.assert_allclose(res.detection.pi1, np.eye(4), atol=1e-14)

    def test_always_guess_state2_has_zero_pi1(self):
        res = helstrom_min_error(embed_scenario(PureVsUniformScenario(3, 1.0, 0.2)))
        assert res.p_error == pytest.approx(0.2, abs=1e-12)
        assert res.strategy is Strategy.ALWAYS_GUESS_STATE2
        np.testing.assert_allclose(res.detection.pi1, 0, atol=1e-14)

    def test_zero_eigenvectors_go_to_pi2(self):
        # Lambda = diag(-0.5, 0, 0.5): middle direction belongs to pi2
        rho1 = np.diag([1.0, 0, 0])
        rho2 = np.diag([0, 0, 1.0])
        res = helstrom_min_error(DiscriminationProblem(rho1, rho2, 0.5))
        np.testing.assert_allclose(res.detection.pi1, np.diag([1.0, 0, 0]), atol=1e-15)
        np.testing.assert_allclose(res.detection.pi2, np.diag([0, 1.0, 1.0]), atol=1e-15)

    @given(seeds)
    def test_swap_symmetry(self, seed):
        p = random_problem(seed)
        assert helstrom_min_error(p).p_error == pytest.approx(
            helstrom_min_error(p.swapped()).p_error, abs=1e-12
        )

    @given(seeds)
    def test_range(self, seed):
        p = random_problem(seed)
        pe = helstrom_min_error(p).p_error
        assert 0.0 <= pe <= min(p.eta1, p.eta2) + 1e-12

    @given(seeds)
    def test_detection_pair_consistency(self, seed):
        p = random_problem(seed)
        res = helstrom_min_error(p)
        res.detection.validate()
        lam = res.lambda_spectrum
        assert error_probability(p, res.detection) == pytest.approx(res.p_error, abs=1e-12)
        assert res.p_error == pytest.approx(0.5 * (1 - np.sum(np.abs(lam))), abs=1e-15)
        # the two one-sided sums of eigenvalue magnitudes
        neg = -np.sum(lam[lam < 0])
        pos = np.sum(lam[lam > 0])
        assert res.p_error == pytest.approx(p.eta1 - neg, abs=1e-12)
        assert res.p_error == pytest.approx(p.eta2 - pos, abs=1e-12)

    @given(seeds, st.integers(2, 6))
    def test_orthogonal_supports(self, seed, dim):
        rng = np.random.default_rng(seed)
        k = int(rng.integers(1, dim))
        q, _ = np.linalg.qr(rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
        rho1 = q[:, :k] @ q[:, :k].conj().T / k
        rho2 = q[:, k:] @ q[:, k:].conj().T / (dim - k)
        res = helstrom_min_error(DiscriminationProblem(rho1, rho2, float(rng.uniform(0.05, 0.95))))
        assert res.p_error < 1e-12

    @given(seeds)
    def test_trace_norm_form(self, seed):
        p = random_problem(seed)
        assert helstrom_min_error(p).p_error == pytest.approx(
            0.5 * (1 - trace_norm(weighted_difference(p))), abs=1e-14
        )

    def test_random_pairs_are_suboptimal(self):
        rng = np.random.default_rng(77)
        for seed in range(200):
            p = random_problem(seed)
            pe = helstrom_min_error(p).p_error
            for _ in range(20):
                assert error_probability(p, random_detection_pair(p.dim, rng)) >= pe - 1e-10


class TestClassifyStrategy:
    def test_nonnegative(self):
        assert classify_strategy([0.0, 0.2, 0.5], 1e-12) is Strategy.ALWAYS_GUESS_STATE2

    def test_mixed(self):
        assert classify_strategy([-0.2, 0.7], 1e-12) is Strategy.PROJECTIVE_MEASUREMENT

    def test_nonpositive(self):
        assert classify_strategy([-0.3, -0.1, 0.0], 1e-12) is Strategy.ALWAYS_GUESS_STATE1

    def test_all_zero_tie_break(self):
        assert classify_strategy([0.0, 0.0], 1e-12) is Strategy.ALWAYS_GUESS_STATE2

    def test_noise_below_threshold(self):
        lam = np.array([-1e-14, 0.3, 0.7])
        assert classify_strategy(lam, zero_threshold(lam)) is Strategy.ALWAYS_GUESS_STATE2


def test_random_detection_pair_is_valid(rng):
    for dim in range(1, 7):
        d = random_detection_pair(dim, rng)
        d.validate()

import math

import numpy as np
import pytest

from ecctensor.errors import InvalidInputError
from ecctensor.sphere import (
    RngSeed,
    SphereSpec,
    complex_spherical_moment,
    monte_carlo_moment,
    sample_sphere,
    spherical_moment,
    uniform_sphere_moment_tensor,
    wick_matching_count,
)
from ecctensor.tensor import power_tensor, tensor_inner

from conftest import random_unit_vectors


class TestSphericalMoment:
    def test_half_in_the_plane(self):
        assert spherical_moment(2, 1) == pytest.approx(0.5)

    def test_dimension_one_is_always_one(self):
        for k in range(6):
            assert spherical_moment(1, k) == 1.0

    def test_n2_k3(self):
        assert spherical_moment(2, 3) == pytest.approx((1 * 3 * 5) / (2 * 4 * 6))
        assert spherical_moment(2, 3) == pytest.approx(0.3125)

    def test_k_zero_empty_product(self):
        assert spherical_moment(5, 0) == 1.0

    def test_strictly_decreasing_in_n_and_k(self):
        for k in range(1, 6):
            values = [spherical_moment(n, k) for n in range(1, 8)]
            assert all(a > b for a, b in zip(values, values[1:]))
        for n in range(2, 7):
            values = [spherical_moment(n, k) for k in range(1, 8)]
            assert all(a > b for a, b in zip(values, values[1:]))

    def test_large_k_no_overflow(self):
        value = spherical_moment(3, 400)
        assert 0.0 < value < 1.0


class TestComplexSphericalMoment:
    def test_dimension_one(self):
        for k in range(5):
            assert complex_spherical_moment(1, k) == 1.0

    def test_n2_k3(self):
        assert complex_spherical_moment(2, 3) == pytest.approx(0.25)

    def test_n3_k2(self):
        assert complex_spherical_moment(3, 2) == pytest.approx(1.0 / 6.0)

    def test_big_binomial_exact(self):
        assert complex_spherical_moment(40, 30) == pytest.approx(1.0 / math.comb(69, 30))

    def test_real_dominates_complex_for_k_above_one(self):
        for n in range(2, 7):
            assert spherical_moment(n, 1) == pytest.approx(complex_spherical_moment(n, 1))
            for k in range(2, 6):
                assert spherical_moment(n, k) > complex_spherical_moment(n, k)


def _enumerate_pairings(positions):
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for i, partner in enumerate(rest):
        for tail in _enumerate_pairings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def _brute_force_wick(index):
    positions = list(range(len(index)))
    if len(index) % 2 == 1:
        return 0
    count = 0
    for pairing in _enumerate_pairings(positions):
        if all(index[a] == index[b] for a, b in pairing):
            count += 1
    return count


class TestUniformSphereMomentTensor:
    def test_degree_two_is_identity_over_n(self):
        t = uniform_sphere_moment_tensor(2, 2)
        assert t[(0, 0)] == pytest.approx(0.5)
        assert t[(1, 1)] == pytest.approx(0.5)
        assert t[(0, 1)] == 0.0

    def test_trace_is_one(self):
        for n in (2, 3, 5):
            t = uniform_sphere_moment_tensor(n, 2)
            assert sum(t[(i, i)] for i in range(n)) == pytest.approx(1.0)

    def test_self_inner_product_equals_spherical_moment(self):
        t = uniform_sphere_moment_tensor(2, 4)
        assert tensor_inner(t, t) == pytest.approx(spherical_moment(2, 2), rel=1e-12)
        assert tensor_inner(t, t) == pytest.approx(3.0 / 8.0)

    def test_odd_degree_is_zero(self):
        t = uniform_sphere_moment_tensor(3, 3)
        assert t.entries == {}

    def test_contraction_with_power_tensor_gives_moment(self, rng):
        # <E[theta^{x 2k}], v^{x 2k}> = E<theta,v>^{2k}
        for n in (2, 3, 4):
            for k in (1, 2, 3):
                t = uniform_sphere_moment_tensor(n, 2 * k)
                for v in random_unit_vectors(rng, 4, n):
                    got = tensor_inner(t, power_tensor(v, 2 * k))
                    assert got == pytest.approx(spherical_moment(n, k), rel=1e-9)

    def test_wick_counts_match_enumeration(self, rng):
        for n in (1, 2, 3):
            for degree in (2, 4, 6):
                for _ in range(10):
                    index = tuple(sorted(rng.integers(0, n, size=degree).tolist()))
                    assert wick_matching_count(index) == _brute_force_wick(index)

    def test_total_wick_mass(self):
        # sum over the full index space of Gaussian moments = E[(sum_i g_i)^{2k}]
        for n in (2, 3):
            for k in (1, 2, 3):
                denom = 1.0
                for i in range(k):
                    denom *= n + 2 * i
                t = uniform_sphere_moment_tensor(n, 2 * k)
                total = tensor_inner(t, power_tensor(np.ones(n), 2 * k)) * denom
                double_fact = math.prod(range(1, 2 * k, 2))
                assert total == pytest.approx(double_fact * n ** k, rel=1e-12)


class TestSampler:
    def test_empty(self):
        out = sample_sphere(SphereSpec(3), 0, RngSeed(1))
        assert out.shape == (0, 3)

    def test_determinism(self):
        a = sample_sphere(SphereSpec(4), 50, RngSeed(9, 2))
        b = sample_sphere(SphereSpec(4), 50, RngSeed(9, 2))
        np.testing.assert_array_equal(a, b)
        c = sample_sphere(SphereSpec(4), 50, RngSeed(9, 3))
        assert not np.array_equal(a, c)

    def test_unit_norms(self):
        for field in ("real", "complex"):
            x = sample_sphere(SphereSpec(3, field), 100, RngSeed(5))
            np.testing.assert_allclose(np.linalg.norm(x, axis=1), 1.0, atol=1e-12)

    def test_coordinate_second_moment(self):
        x = sample_sphere(SphereSpec(3), 100_000, RngSeed(11))
        assert np.mean(x[:, 0] ** 2) == pytest.approx(1.0 / 3.0, abs=0.005)


class TestMonteCarloMoment:
    def test_degenerate_dimension_is_exact(self):
        est, se = monte_carlo_moment(SphereSpec(1), 2, 100, RngSeed(3))
        assert est == pytest.approx(1.0, abs=1e-12)
        assert se == pytest.approx(0.0, abs=1e-12)

    def test_real_plane(self):
        est, se = monte_carlo_moment(SphereSpec(2), 1, 100_000, RngSeed(17))
        assert abs(est - 0.5) <= 3 * se

    def test_complex_plane(self):
        est, se = monte_carlo_moment(SphereSpec(2, "complex"), 1, 100_000, RngSeed(18))
        assert abs(est - 0.5) <= 3 * se

    def test_needs_two_samples(self):
        with pytest.raises(InvalidInputError):
            monte_carlo_moment(SphereSpec(2), 1, 1, RngSeed(0))

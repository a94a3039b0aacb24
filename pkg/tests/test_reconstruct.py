import math

import numpy as np
import pytest

from covop import (
    FULL,
    FiniteVector,
    cesaro_density,
    cesaro_operator,
    density,
    fejer_kernel,
    gom_matrix,
    identity,
    is_psd,
    normalize,
    ones,
    operator_norm,
    reconstruction_sweep,
)
from oracles import (
    fejer_double_sum,
    random_arc_set,
    random_finite_vector,
    random_unit_gram,
    simpson_arc,
)

TWO_PI = 2 * math.pi


class TestFejerKernel:
    def test_value_at_zero_is_order(self):
        for m in (1, 2, 7, 64):
            assert fejer_kernel(m, 0.0) == float(m)
            assert fejer_kernel(m, TWO_PI) == pytest.approx(m, rel=1e-9)

    def test_unit_mean(self):
        for m in (1, 3, 16, 128):
            mean = simpson_arc(lambda t, m=m: fejer_kernel(m, t), 0.0, TWO_PI) / TWO_PI
            assert mean.real == pytest.approx(1.0, abs=1e-8)

    def test_nonnegative_and_matches_double_sum(self, rng):
        thetas = rng.uniform(0.0, TWO_PI, size=1000)
        for m in (1, 4, 9):
            closed = fejer_kernel(m, thetas)
            assert np.min(closed) >= 0.0
            direct = np.array([fejer_double_sum(m, t) for t in thetas])
            assert np.max(np.abs(closed - direct)) <= 1e-10


class TestCesaroOperator:
    def test_entrywise_triangular_factor(self, rng):
        families = [ones(), identity(), random_unit_gram(rng, 8)]
        sets = [FULL, normalize([(0.0, math.pi)])] + [random_arc_set(rng) for _ in range(2)]
        idx = np.arange(-8, 9)
        kd = np.abs(np.subtract.outer(idx, idx))
        for c in families:
            for x in sets:
                target = gom_matrix(c, x, 8).data
                for m in (4, 8, 16, 64):
                    factor = np.clip(1.0 - kd / m, 0.0, None)
                    got = cesaro_operator(c, x, m, 8).data
                    assert np.max(np.abs(got - factor * target)) <= 1e-12

    def test_diagonal_exact_for_every_order(self, rng):
        c = random_unit_gram(rng, 6)
        x = random_arc_set(rng)
        target = np.diag(gom_matrix(c, x, 6).data)
        for m in (1, 2, 5):
            got = np.diag(cesaro_operator(c, x, m, 6).data)
            assert np.max(np.abs(got - target)) <= 1e-15

    def test_large_order_deviation_bound(self, rng):
        c = random_unit_gram(rng, 4)
        x = random_arc_set(rng)
        target = gom_matrix(c, x, 4).data
        m = 10 * 8  # ten times the window bandwidth
        got = cesaro_operator(c, x, m, 4).data
        bound = (8 / m) * float(np.max(np.abs(target)))
        assert np.max(np.abs(got - target)) <= bound + 1e-15

    def test_norm_dominated_for_psd_families(self, rng):
        for _ in range(5):
            c = random_unit_gram(rng, 6)
            x = random_arc_set(rng)
            base = operator_norm(gom_matrix(c, x, 6))
            for m in (3, 9, 33):
                assert operator_norm(cesaro_operator(c, x, m, 6)) <= base + 1e-9


class TestCesaroDensity:
    def test_single_index_pair_is_constant(self, rng):
        c = random_unit_gram(rng, 3)
        phi = FiniteVector.basis(0)
        expected = c.entry(0, 0) / TWO_PI
        for m in (1, 2, 16):
            g = cesaro_density(c, phi, phi, m)
            assert dict(g.items()) == {0: expected}

    def test_coefficients_damped_by_triangular_factor(self, rng):
        c = random_unit_gram(rng, 4)
        phi = random_finite_vector(rng, 3)
        psi = random_finite_vector(rng, 3)
        exact = density(c, phi, psi)
        m = 32
        mean = cesaro_density(c, phi, psi, m)
        for k, a in exact.items():
            assert mean.coefficient(k) == pytest.approx(a * (1 - abs(k) / m), rel=1e-15)

    def test_l1_error_decreases_for_equal_pair(self):
        phi = FiniteVector({0: 1 / math.sqrt(2), 1: 1 / math.sqrt(2)})
        c = ones()
        exact = density(c, phi, phi)
        thetas = np.arange(720) * (TWO_PI / 720)
        exact_vals = exact(thetas)
        errors = []
        for m in (8, 16, 32, 64, 128):
            vals = cesaro_density(c, phi, phi, m)(thetas)
            errors.append(float(np.sum(np.abs(vals - exact_vals)) * TWO_PI / 720))
        assert all(b <= a + 1e-12 for a, b in zip(errors, errors[1:]))
        assert errors[-1] < 0.02
        # analytic error of the damped cosine coefficient: 2 / (pi M)
        assert errors[-1] == pytest.approx(2 / (math.pi * 128), rel=1e-3)


def test_reconstruction_sweep_rows(rng):
    c = random_unit_gram(rng, 4)
    x = random_arc_set(rng)
    phi = FiniteVector({0: 1 / math.sqrt(2), 1: 1 / math.sqrt(2)})
    rows = reconstruction_sweep(c, x, 4, [8, 16, 32], phi, phi)
    assert [m for m, _, _ in rows] == [8, 16, 32]
    devs = [dev for _, dev, _ in rows]
    errs = [err for _, _, err in rows]
    assert all(b <= a + 1e-12 for a, b in zip(devs, devs[1:]))
    assert all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))

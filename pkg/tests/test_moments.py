import math

import numpy as np
import pytest

from covop import (
    FULL,
    MomentCoefficientTable,
    OutsideDisk,
    TrigPolynomial,
    aux_matrix,
    basis_moment_coefficient,
    cyclic_moment,
    exp_transform,
    gom_matrix,
    identity,
    integrate_trig,
    moment_matrix,
    moment_matrix_from_aux,
    ones,
    operator_norm,
    realize,
    schur_product,
    sign_counterexample,
)
from oracles import random_unit_gram, simpson_arc, svd_norm

TWO_PI = 2 * math.pi


def moment_coefficient_quadrature(s, k):
    return simpson_arc(lambda t: t ** s * np.exp(1j * k * t), 0.0, TWO_PI) / TWO_PI


class TestBasisMomentCoefficient:
    def test_zeroth_order_is_delta(self):
        assert basis_moment_coefficient(0, 0) == 1.0
        for k in (-3, -1, 1, 5):
            assert basis_moment_coefficient(0, k) == 0.0

    def test_first_moment_values(self):
        assert basis_moment_coefficient(1, 0) == pytest.approx(math.pi, abs=0)
        for k in (-4, -1, 1, 2, 9):
            assert basis_moment_coefficient(1, k) == pytest.approx(-1j / k, abs=1e-16)

    def test_matches_quadrature(self):
        for s in range(6):
            for k in (-5, -2, 0, 1, 3, 8):
                closed = basis_moment_coefficient(s, k)
                quad = moment_coefficient_quadrature(s, k)
                assert closed == pytest.approx(quad, abs=1e-9)

    def test_k_zero_closed_form(self):
        for s in range(7):
            assert basis_moment_coefficient(s, 0) == TWO_PI ** s / (s + 1)

    def test_conjugate_symmetry(self):
        for s in range(6):
            for k in (1, 2, 7):
                assert basis_moment_coefficient(s, -k) == basis_moment_coefficient(
                    s, k
                ).conjugate()

    def test_table_memoizes(self):
        table = MomentCoefficientTable()
        assert table.value(3, 2) == basis_moment_coefficient(3, 2)
        assert table.value(3, 2) is table.value(3, 2)


class TestCyclicMoment:
    def test_zeroth_is_diagonal(self, rng):
        c = random_unit_gram(rng, 4)
        v0 = cyclic_moment(c, 0, 4)
        assert np.array_equal(v0.data, np.diag(np.diag(realize(c, 4).data)))

    def test_ones_shifts(self):
        v2 = cyclic_moment(ones(), 2, 3)
        expected = np.diag(np.ones(5), 2)
        assert np.array_equal(v2.data, expected)

    def test_norm_is_diagonal_sup(self, rng):
        c = random_unit_gram(rng, 5)
        arr = realize(c, 5).data
        for k in (-4, -1, 0, 2, 6):
            diag = np.diagonal(arr, offset=k)
            expected = float(np.max(np.abs(diag))) if diag.size else 0.0
            assert operator_norm(cyclic_moment(c, k, 5)) == pytest.approx(
                expected, abs=1e-9
            )

    def test_beyond_bandwidth_is_zero(self, rng):
        c = random_unit_gram(rng, 3)
        assert np.count_nonzero(cyclic_moment(c, 7, 3).data) == 0

    def test_equals_trig_integration(self, rng):
        c = random_unit_gram(rng, 4)
        for k in (-5, 0, 3):
            lhs = cyclic_moment(c, k, 4).data
            rhs = integrate_trig(c, TrigPolynomial({k: 1.0}), 4).data
            assert np.array_equal(lhs, rhs)


class TestAuxMatrix:
    def test_identity_has_no_off_diagonal(self):
        for l in (1, 2, 3):
            assert np.count_nonzero(aux_matrix(identity(), l, 4).data) == 0

    def test_order_zero_is_diagonal(self, rng):
        c = random_unit_gram(rng, 3)
        a0 = aux_matrix(c, 0, 3)
        assert np.array_equal(a0.data, np.diag(np.diag(realize(c, 3).data)))

    def test_reciprocal_norm_bounded_by_pi(self):
        values = []
        for radius in (8, 16, 32, 64, 128):
            b1 = aux_matrix(ones(), 1, radius)
            values.append(operator_norm(b1))
        assert all(v <= math.pi + 1e-9 for v in values)
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    def test_schur_recursion(self, rng):
        c = random_unit_gram(rng, 8)
        for l in (1, 2):
            lhs = aux_matrix(c, l + 1, 8)
            rhs = schur_product(aux_matrix(c, 1, 8), aux_matrix(ones(), l, 8))
            assert np.max(np.abs(lhs.data - rhs.data)) <= 1e-15

    def test_ones_second_order_is_squared_reciprocal(self):
        # 1/d^2 rounded once vs (1/d)*(1/d) rounded twice: ulp agreement
        lhs = aux_matrix(ones(), 2, 8)
        b1 = aux_matrix(ones(), 1, 8)
        rhs = schur_product(b1, b1)
        assert np.max(np.abs(lhs.data - rhs.data)) <= 1e-15


class TestMomentMatrix:
    def test_identity_first_moment_is_pi_identity(self):
        th = moment_matrix(identity(), 1, 6)
        assert np.array_equal(th.data, math.pi * np.eye(13))
        assert operator_norm(th) == math.pi

    def test_ones_first_moment_window_growth(self):
        values = [operator_norm(moment_matrix(ones(), 1, n)) for n in (8, 32, 128)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
        assert all(v <= TWO_PI + 1e-9 for v in values)
        assert values[-1] >= 6.0

    def test_matches_quadrature_on_families(self, rng):
        families = [ones(), identity(), random_unit_gram(rng, 8)]
        for c in families:
            arr = realize(c, 8).data
            for s in range(6):
                th = moment_matrix(c, s, 8)
                for n, m in ((0, 0), (3, -2), (-8, 8), (5, 5)):
                    coef = moment_coefficient_quadrature(s, n - m)
                    expected = arr[n + 8, m + 8] * coef
                    assert th.entry(n, m) == pytest.approx(expected, abs=1e-8)

    def test_aux_combination_agrees(self, rng):
        families = [ones(), identity(), random_unit_gram(rng, 6), sign_counterexample()]
        for c in families:
            for s in range(6):
                direct = moment_matrix(c, s, 6).data
                via_aux = moment_matrix_from_aux(c, s, 6).data
                scale = max(1.0, np.max(np.abs(direct)))
                assert np.max(np.abs(direct - via_aux)) <= 1e-10 * scale

    def test_zeroth_moment_is_full_measure(self, rng):
        c = random_unit_gram(rng, 5)
        lhs = moment_matrix(c, 0, 5).data
        rhs = gom_matrix(c, FULL, 5).data
        assert np.max(np.abs(lhs - rhs)) <= 1e-14

    def test_hermitian_structure_preserved(self, rng):
        c = random_unit_gram(rng, 6)
        for s in (1, 2, 5):
            th = moment_matrix(c, s, 6).data
            assert np.max(np.abs(th - th.conj().T)) <= 1e-12

    def test_exponential_bound(self, rng):
        # window norms stay below R pi^s s! with R from the two lowest
        # auxiliary norms
        e2 = math.e ** 2
        for c in (ones(), identity(), random_unit_gram(rng, 32)):
            r_const = operator_norm(aux_matrix(c, 0, 32)) + (e2 - 1) / TWO_PI * operator_norm(
                aux_matrix(c, 1, 32)
            )
            for s in range(7):
                bound = r_const * math.pi ** s * math.factorial(s)
                assert operator_norm(moment_matrix(c, s, 32)) <= bound + 1e-9

    def test_diagonal_sup_growth_bound(self, rng):
        # entry sup on the k-th diagonal grows at most linearly in k,
        # with the off-diagonal first-moment norm as the rate
        c = random_unit_gram(rng, 8)
        arr = realize(c, 8).data
        off = moment_matrix(c, 1, 8).data - np.diag(np.diag(moment_matrix(c, 1, 8).data))
        rate = svd_norm(off)
        for k in (1, 2, 5, 11):
            diag = np.diagonal(arr, offset=k)
            if diag.size:
                assert np.max(np.abs(diag)) <= rate * abs(k) + 1e-9


class TestExpTransform:
    def test_zero_is_full_measure_diagonal(self, rng):
        c = random_unit_gram(rng, 4)
        out = exp_transform(c, 0.0, 4)
        assert np.max(np.abs(out.data - gom_matrix(c, FULL, 4).data)) <= 1e-14

    def test_real_argument_keeps_hermitian_symmetry(self, rng):
        c = random_unit_gram(rng, 4)
        out = exp_transform(c, 0.2, 4).data
        assert np.max(np.abs(out - out.conj().T)) <= 1e-12

    def test_matches_quadrature(self, rng):
        c = ones()
        for z in (0.25, 0.25j, -0.2 + 0.1j):
            out = exp_transform(c, z, 8)
            for n, m in ((0, 0), (4, -3), (-8, 8)):
                quad = simpson_arc(
                    lambda t: np.exp(z * t) * np.exp(1j * (n - m) * t), 0.0, TWO_PI
                ) / TWO_PI
                assert out.entry(n, m) == pytest.approx(quad, abs=1e-9)

    def test_disk_boundary_rejected(self, rng):
        c = ones()
        with pytest.raises(OutsideDisk):
            exp_transform(c, 1.0 / math.pi, 4)
        with pytest.raises(OutsideDisk):
            exp_transform(c, 0.5, 4)
        exp_transform(c, 1.0 / math.pi - 1e-12, 4)

import numpy as np
import pytest

from conftest import match_multisets
from polyzero.poly import FamilySpec, Polynomial, lehmer_polynomial, make_family, power_minus_one
from polyzero.roots import (
    RootFindingError,
    find_roots,
    rootset_from_angles,
    rootset_from_known,
    unit_roots_rootset,
)


class TestBasicRoots:
    def test_quadratic(self):
        rs = find_roots(Polynomial((-1, 0, 1)), tol=1e-12)
        match_multisets(rs.roots, [1, -1], 1e-12)

    def test_eighth_roots_of_unity(self):
        rs = find_roots(power_minus_one(8), tol=1e-12)
        assert np.max(np.abs(rs.moduli - 1.0)) < 1e-12
        match_multisets(rs.roots, np.exp(2j * np.pi * np.arange(8) / 8), 1e-12)

    def test_lehmer_mahler_product(self):
        rs = find_roots(lehmer_polynomial(), tol=1e-12)
        m = np.prod(np.maximum(1.0, rs.moduli))
        assert abs(m - 1.1762808) < 1e-6

    def test_degree_zero_rejected(self):
        with pytest.raises(RootFindingError):
            find_roots(Polynomial((2.0,)))

    def test_multiple_root(self):
        rs = find_roots(Polynomial((1, -3, 3, -1)), tol=1e-8)  # (z-1)^3
        assert np.max(np.abs(rs.roots - 1.0)) < 1e-4
        assert rs.residuals.max() <= 1e-8

    def test_nonconvergence_reports_worst_residual(self):
        # An octuple root cannot reach an impossible tolerance in one sweep.
        p = Polynomial((1, -8, 28, -56, 70, -56, 28, -8, 1))  # (z-1)^8
        with pytest.raises(RootFindingError) as err:
            find_roots(p, tol=1e-300, max_iter=1)
        assert err.value.worst_residual is not None
        assert err.value.worst_residual > 1e-300

    def test_args_in_unit_interval(self):
        rs = find_roots(make_family(FamilySpec("littlewood", 24, seed=8)))
        assert np.all(rs.args_turns >= 0.0)
        assert np.all(rs.args_turns < 1.0)
        assert np.all(rs.moduli >= 0.0)
        assert len(rs) == 24


class TestAgainstCompanionMatrix:
    # np.roots (companion-matrix eigenvalues) as an independent cross-check.
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_random_degree_20(self, seed):
        p = make_family(FamilySpec("unimodular", 20, seed=seed))
        mine = find_roots(p, tol=1e-10).roots
        reference = np.roots(list(p.coeffs)[::-1])
        match_multisets(mine, reference, 1e-8)

    def test_real_coefficients(self, rng):
        coeffs = tuple(rng.normal(size=13))
        if coeffs[-1] == 0:
            coeffs = coeffs[:-1] + (1.0,)
        p = Polynomial(coeffs)
        mine = find_roots(p, tol=1e-9).roots
        match_multisets(mine, np.roots(list(p.coeffs)[::-1]), 1e-7)


class TestAlgebraicInvariants:
    @pytest.mark.parametrize("n,seed", [(8, 1), (23, 2), (64, 3)])
    def test_vieta(self, n, seed):
        p = make_family(FamilySpec("g_class", n, seed=seed))
        rs = find_roots(p, tol=1e-10)
        c = p.coefficient_array()
        prod = np.prod(rs.roots)
        total = np.sum(rs.roots)
        want_prod = (-1) ** n * c[0] / c[-1]
        want_sum = -c[-2] / c[-1]
        assert abs(prod - want_prod) <= 1e-8 * max(1.0, abs(want_prod))
        assert abs(total - want_sum) <= 1e-8 * max(1.0, abs(want_sum))

    def test_conjugate_symmetry(self):
        p = make_family(FamilySpec("littlewood", 17, seed=11))
        rs = find_roots(p, tol=1e-10)
        match_multisets(rs.roots, np.conj(rs.roots), 1e-9)

    @pytest.mark.parametrize("phi", [0.1, 0.37, 0.81])
    def test_rotation_equivariance(self, phi):
        p = make_family(FamilySpec("littlewood", 14, seed=4))
        rotated = p.rotated(phi)
        base = find_roots(p, tol=1e-11).roots
        rot = find_roots(rotated, tol=1e-11).roots
        match_multisets(rot, base * np.exp(-2j * np.pi * phi), 1e-9)


class TestKnownRootConstruction:
    def test_unit_roots_rootset(self):
        rs = unit_roots_rootset(16)
        assert np.array_equal(np.sort(rs.args_turns), np.arange(16) / 16)
        assert rs.residuals.max() <= 1e-8

    def test_from_known_rejects_wrong_roots(self):
        p = power_minus_one(4)
        with pytest.raises(RootFindingError):
            rootset_from_known(p, [1.0, -1.0, 2j, -2j], tol=1e-10)

    def test_from_known_counts_must_match(self):
        with pytest.raises(ValueError):
            rootset_from_known(power_minus_one(4), [1.0, -1.0])

    def test_explicit_product_roots(self):
        # (z - 0.1)(z^4 - 1): factored roots certify directly.
        coeffs = np.convolve([-0.1, 1], [-1, 0, 0, 0, 1])
        p = Polynomial(tuple(coeffs))
        rs = rootset_from_known(p, [0.1, 1, -1, 1j, -1j], tol=1e-10)
        assert len(rs) == 5

    def test_from_angles_keeps_exact_angles(self):
        p = power_minus_one(8)
        rs = rootset_from_angles(p, np.arange(8) / 8)
        assert np.array_equal(rs.args_turns, np.arange(8) / 8)


def test_scale_invariance_of_iteration():
    # Binary scaling is exact in floats, so every Newton/repulsion step and
    # hence the whole root multiset is identical bit for bit.
    p = make_family(FamilySpec("littlewood", 20, seed=6))
    a = find_roots(p, tol=1e-10)
    b = find_roots(p.scaled(4.0), tol=1e-10)
    assert np.array_equal(a.roots, b.roots)
    # Generic scalings agree to rounding.
    c = find_roots(p.scaled(3.7), tol=1e-10)
    match_multisets(c.roots, a.roots, 1e-12)

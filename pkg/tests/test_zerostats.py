import math

import numpy as np
import pytest

from polyzero import geometry
from polyzero.poly import FamilySpec, Polynomial, make_family
from polyzero.roots import find_roots, rootset_from_known, unit_roots_rootset
from polyzero.zerostats import (
    AnnularStat,
    SectorSpec,
    angular_discrepancy,
    angular_discrepancy_report,
    annular_discrepancy,
    region_count,
    sector_count,
    tau_outside_annulus,
)


def grid_oracle(args_turns, n, grid=10_000):
    """Brute-force discrepancy over arcs with endpoints on a uniform grid."""
    t = np.arange(grid) / grid
    counts = np.searchsorted(np.sort(args_turns), t, side="left")
    g = counts / n - t
    return float(g.max() - g.min())


def explicit_product_rootset():
    coeffs = np.convolve([-0.1, 1], [-1, 0, 0, 0, 1])
    p = Polynomial(tuple(coeffs))
    return rootset_from_known(p, [0.1, 1, -1, 1j, -1j], tol=1e-10)


class TestSectorCount:
    def test_eighth_roots_half_turn_arc(self):
        rs = unit_roots_rootset(8)
        stat = sector_count(rs, SectorSpec(math.pi / 8, 9 * math.pi / 8))
        assert stat.count == 4
        assert stat.tau == 0.5

    def test_full_circle(self):
        rs = unit_roots_rootset(8)
        stat = sector_count(rs, SectorSpec(0.7, 0.7 + 2 * math.pi))
        assert stat.count == 8
        assert stat.reference == 1.0

    def test_half_open_boundary(self):
        rs = unit_roots_rootset(4)  # angles 0, 1/4, 1/2, 3/4 turns
        stat = sector_count(rs, SectorSpec(0.0, math.pi / 2))
        assert stat.count == 1  # angle 0 in, angle pi/2 out

    def test_random_arcs_against_membership_scan(self, rng):
        p = make_family(FamilySpec("littlewood", 9, seed=17))
        rs = find_roots(p, tol=1e-11)
        for _ in range(100):
            alpha = float(rng.uniform(0, 2 * math.pi))
            beta = alpha + float(rng.uniform(1e-6, 2 * math.pi))
            stat = sector_count(rs, SectorSpec(alpha, beta))
            width = (beta - alpha) % (2 * math.pi) or 2 * math.pi
            brute = sum(
                ((theta * 2 * math.pi - alpha) % (2 * math.pi)) < width
                for theta in rs.args_turns
            )
            assert stat.count == brute

    def test_partition_sums_to_n(self, rng):
        p = make_family(FamilySpec("unimodular", 14, seed=23))
        rs = find_roots(p)
        cuts = np.sort(rng.uniform(0, 2 * math.pi, size=6))
        arcs = list(zip(cuts, np.roll(cuts, -1)))
        total = sum(sector_count(rs, SectorSpec(a, b)).count for a, b in arcs)
        assert total == 14


class TestRegionCount:
    def test_annulus_all_on_circle(self):
        rs = unit_roots_rootset(8)
        assert region_count(rs, geometry.Annulus(0.5)).count == 8

    def test_annulus_excludes_inner_root(self):
        rs = explicit_product_rootset()
        stat = region_count(rs, geometry.Annulus(0.5))
        assert stat.count == 4
        assert tau_outside_annulus(rs, 0.5) == pytest.approx(0.2)

    def test_closed_disk_near_one(self):
        rs = unit_roots_rootset(8)
        stat = region_count(rs, geometry.DiskOnCircle(0.0, 0.3))
        assert stat.count == 1

    def test_gear_region_count(self):
        rs = unit_roots_rootset(64)
        gear = geometry.build_gear(0.3, 0.0)
        stat = region_count(rs, gear)
        brute = sum(geometry.contains(gear, z) for z in rs.roots)
        assert stat.count == brute


class TestAngularDiscrepancy:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 17, 64])
    def test_roots_of_unity(self, n):
        rs = unit_roots_rootset(n)
        assert abs(angular_discrepancy(rs) - 1.0 / n) <= 1e-14

    def test_single_root(self):
        rs = rootset_from_known(Polynomial((-1, 1)), [1.0])
        rep = angular_discrepancy_report(rs)
        assert rep["value"] == 1.0
        assert not rep["attained"]

    def test_matches_grid_oracle(self, rng):
        for _ in range(25):
            n = int(rng.integers(2, 13))
            p = make_family(FamilySpec("littlewood", n, seed=int(rng.integers(2**31))))
            rs = find_roots(p, tol=1e-11)
            exact = angular_discrepancy(rs)
            oracle = grid_oracle(rs.args_turns, n)
            assert exact >= oracle - 1e-12
            assert exact <= oracle + 2 * math.pi * n / 10_000

    def test_scale_invariance(self):
        p = make_family(FamilySpec("littlewood", 12, seed=31))
        a = angular_discrepancy(find_roots(p, tol=1e-11))
        b = angular_discrepancy(find_roots(p.scaled(2.0), tol=1e-11))
        assert a == b

    def test_rotation_invariance(self):
        p = make_family(FamilySpec("littlewood", 12, seed=31))
        a = angular_discrepancy(find_roots(p, tol=1e-11))
        b = angular_discrepancy(find_roots(p.rotated(0.3), tol=1e-11))
        assert abs(a - b) <= 1e-9

    def test_multiplicity_grouping(self):
        # Triple root at angle 0 next to a simple root: sup is 3/4 via the
        # point mass, reached in the shrinking-arc limit.
        coeffs = np.convolve(np.convolve([-1, 1], [-1, 1]), np.convolve([-1, 1], [1j, 1]))
        p = Polynomial(tuple(coeffs))
        rs = rootset_from_known(p, [1.0, 1.0, 1.0, -1j], tol=1e-10)
        rep = angular_discrepancy_report(rs)
        assert rep["value"] == 0.75
        assert not rep["attained"]


class TestAnnularDiscrepancy:
    def test_all_in_annulus_symmetric_arc(self):
        rs = unit_roots_rootset(8)
        stat = annular_discrepancy(rs, 0.5, SectorSpec(math.pi / 8, 9 * math.pi / 8))
        assert stat.discrepancy == 0.0

    def test_explicit_product_full_circle(self):
        rs = explicit_product_rootset()
        stat = annular_discrepancy(rs, 0.5, SectorSpec(0.0, 2 * math.pi))
        assert stat.discrepancy == pytest.approx(0.2)
        assert stat.tau_outside == pytest.approx(0.2)

    def test_small_rho_reduces_to_sector(self):
        p = make_family(FamilySpec("littlewood", 10, seed=3))
        rs = find_roots(p)
        s = SectorSpec(0.4, 2.9)
        tiny = annular_discrepancy(rs, 1e-9, s)
        sector_tau = sector_count(rs, s).tau
        assert tiny.discrepancy == pytest.approx(abs(sector_tau - s.reference), abs=1e-15)

    def test_domination_triangle_inequality(self, rng):
        p = make_family(FamilySpec("unimodular", 20, seed=77))
        rs = find_roots(p)
        d = angular_discrepancy(rs)
        for rho in (0.3, 0.5, 0.9):
            t_out = tau_outside_annulus(rs, rho)
            for _ in range(20):
                a = float(rng.uniform(0, 2 * math.pi))
                b = a + float(rng.uniform(0.1, 2 * math.pi))
                stat = annular_discrepancy(rs, rho, SectorSpec(a, b))
                assert stat.discrepancy <= d + t_out + 1e-12

    def test_rho_validation(self):
        rs = unit_roots_rootset(4)
        with pytest.raises(ValueError):
            annular_discrepancy(rs, 1.5, SectorSpec(0, 1))
        with pytest.raises(ValueError):
            tau_outside_annulus(rs, 0.0)

    def test_returns_annular_stat(self):
        rs = unit_roots_rootset(4)
        stat = annular_discrepancy(rs, 0.5, SectorSpec(0, math.pi))
        assert isinstance(stat, AnnularStat)
        assert stat.reference == 0.5

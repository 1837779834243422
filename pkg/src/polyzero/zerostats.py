"""Counting measures over regions and exact angular/annular discrepancy.

The normalized zero-counting measure puts mass ``1/n`` at each root.  A
sector is a half-open arc ``[alpha, beta)`` of directions on the circle
(wrap-around allowed, a root at angle 0 is countable); the angular
discrepancy is the supremum over all arcs of

    | tau_n(sector) - arc_length / (2 pi) |.

The supremum is computed exactly from the sorted root angles; it may be a
limit value that no single arc attains (a point mass seen through shrinking
arcs), which is reported through the ``attained`` flag.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .roots import RootSet

_TWO_PI = 2.0 * math.pi

_TIE_WIDTH = 1e-12


@dataclass(frozen=True)
class SectorSpec:
    """Half-open arc ``[alpha, beta)`` in radians on the circle.

    ``beta == alpha`` (mod 2 pi) with distinct endpoints means the full
    circle; the width is always in (0, 2 pi].
    """

    alpha: float
    beta: float

    @property
    def width(self) -> float:
        w = (self.beta - self.alpha) % _TWO_PI
        return _TWO_PI if w == 0.0 else w

    @property
    def reference(self) -> float:
        """Normalized arc length ``(beta - alpha) / (2 pi)``."""
        return self.width / _TWO_PI


@dataclass(frozen=True)
class CountStat:
    count: int
    n: int
    reference: float | None = None

    @property
    def tau(self) -> float:
        return self.count / self.n


@dataclass(frozen=True)
class AnnularStat:
    """Annular-sector discrepancy plus its companion outside mass."""

    discrepancy: float
    tau_annular_sector: float
    tau_outside: float
    reference: float


def _sector_mask(args_turns: np.ndarray, s: SectorSpec) -> np.ndarray:
    start = (s.alpha / _TWO_PI) % 1.0
    width = s.width / _TWO_PI
    rel = (args_turns - start) % 1.0
    if width >= 1.0:
        return np.ones_like(rel, dtype=bool)
    return rel < width


def sector_count(roots: RootSet, s: SectorSpec) -> CountStat:
    """Number of roots with argument in the arc, any modulus."""
    mask = _sector_mask(roots.args_turns, s)
    return CountStat(count=int(mask.sum()), n=len(roots), reference=s.reference)


def region_count(roots: RootSet, region) -> CountStat:
    """Exact membership count of the root multiset in a region."""
    if isinstance(region, geometry.Sector):
        return sector_count(roots, SectorSpec(region.alpha, region.beta))
    mask = geometry.contains(region, roots.roots)
    ref = None
    if isinstance(region, geometry.AnnularSector):
        ref = SectorSpec(region.alpha, region.beta).reference
    return CountStat(count=int(np.sum(mask)), n=len(roots), reference=ref)


def _grouped_angles(args_turns: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sorted distinct angles with multiplicities, ties within 1e-12 merged."""
    t = np.sort(np.mod(args_turns, 1.0))
    if len(t) == 0:
        return t, np.empty(0, dtype=int)
    gaps = np.diff(t)
    new_group = np.concatenate([[True], gaps > _TIE_WIDTH])
    # Wrap-around tie: last group within 1e-12 of the first (mod 1).
    idx = np.cumsum(new_group) - 1
    angles = t[new_group]
    weights = np.bincount(idx)
    if len(angles) > 1 and (angles[0] + 1.0 - angles[-1]) <= _TIE_WIDTH:
        weights[0] += weights[-1]
        angles = angles[:-1]
        weights = weights[:-1]
    return angles, weights


def _discrepancy_parts(roots: RootSet) -> tuple[float, float]:
    """(supremum over all arcs, supremum over arcs with root endpoints).

    With sorted distinct angles ``phi_j`` (multiplicities ``w_j``, prefix
    sums ``W_j``) every closed candidate arc value reduces to ``A_j - B_i``
    where ``A_j = W_j/n - phi_j`` and ``B_i = W_{i-1}/n - phi_i``; the
    wrap-around arcs give the same expression because ``W_m = n``.  Arcs of
    the attainable half-open form ``[phi_i, phi_j)`` reduce to ``B_j - B_i``.
    """
    angles, weights = _grouped_angles(roots.args_turns)
    n = len(roots)
    prefix = np.cumsum(weights)
    a_vals = prefix / n - angles
    b_vals = (prefix - weights) / n - angles
    full = float(a_vals.max() - b_vals.min())
    attained = float(b_vals.max() - b_vals.min())
    return full, attained


def angular_discrepancy(roots: RootSet) -> float:
    """Exact supremum over all arcs of ``|tau_n(arc) - length(arc)|``."""
    if len(roots) < 1:
        raise ValueError("empty root set")
    full, _ = _discrepancy_parts(roots)
    return full


def angular_discrepancy_report(roots: RootSet) -> dict:
    """Discrepancy value plus whether any genuine arc attains it."""
    full, attained = _discrepancy_parts(roots)
    return {
        "value": full,
        "attained": attained >= full - 1e-15,
        "attained_value": attained,
    }


def tau_outside_annulus(roots: RootSet, rho: float) -> float:
    """``tau_n`` of the complement of the open annulus ``rho < |z| < 1/rho``."""
    if not 0.0 < rho < 1.0:
        raise ValueError("rho must be in (0, 1)")
    inside = (roots.moduli > rho) & (roots.moduli < 1.0 / rho)
    return float((~inside).sum()) / len(roots)


def annular_discrepancy(roots: RootSet, rho: float, s: SectorSpec) -> AnnularStat:
    """``|tau_n(annular sector) - normalized arc length|`` for one arc.

    The annulus is open; the sector is the usual half-open arc.  The
    companion value ``tau_n`` outside the annulus is included since annular
    bounds are stated through it.
    """
    if not 0.0 < rho < 1.0:
        raise ValueError("rho must be in (0, 1)")
    in_annulus = (roots.moduli > rho) & (roots.moduli < 1.0 / rho)
    in_sector = _sector_mask(roots.args_turns, s)
    tau = float((in_annulus & in_sector).sum()) / len(roots)
    ref = s.reference
    return AnnularStat(
        discrepancy=abs(tau - ref),
        tau_annular_sector=tau,
        tau_outside=float((~in_annulus).sum()) / len(roots),
        reference=ref,
    )

"""Simultaneous root finding with per-root residual certificates.

All ``n`` roots of a polynomial are computed by Aberth-Ehrlich iteration
(simultaneous Newton corrections coupled through pairwise repulsion terms).
Each returned root carries a scale-normalized residual

    residual_j = |P(a_j)| / scale_j,
    scale_j   = |c_n| * prod_{k != j} max(1, |a_j - a_k|),

computed in log space so the product cannot overflow.  ``scale_j`` dominates
``|P'(a_j)|``, so a small residual certifies a small backward error without
assuming simple roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import Polynomial

_PAIR_BLOCK = 256


class RootFindingError(RuntimeError):
    """Iteration failed to certify all residuals within the budget."""

    def __init__(self, message: str, worst_residual: float | None = None):
        super().__init__(message)
        self.worst_residual = worst_residual


@dataclass(frozen=True)
class RootSet:
    """Roots ``a_j = rho_j * e(theta_j)`` with residual certificates.

    ``args_turns`` holds the normalized arguments ``theta_j`` in [0, 1).
    Length equals the polynomial degree, multiplicity counted.
    """

    roots: np.ndarray
    residuals: np.ndarray
    moduli: np.ndarray
    args_turns: np.ndarray
    cluster_radii: np.ndarray
    tolerance: float

    def __post_init__(self):
        object.__setattr__(self, "roots", np.asarray(self.roots, dtype=complex))
        for name in ("residuals", "moduli", "args_turns", "cluster_radii"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))

    def __len__(self):
        return len(self.roots)

    @property
    def degree(self) -> int:
        return len(self.roots)


def _pairwise_inverse_sums(z: np.ndarray) -> np.ndarray:
    """``S_i = sum_{k != i} 1 / (z_i - z_k)``, blocked to bound memory."""
    n = len(z)
    out = np.zeros(n, dtype=complex)
    for start in range(0, n, _PAIR_BLOCK):
        block = z[start : start + _PAIR_BLOCK]
        diff = block[:, None] - z[None, :]
        for i in range(len(block)):
            diff[i, start + i] = np.inf  # self-term contributes zero
        # Coincident iterates would give an infinite coupling; keep it huge
        # but finite so the repulsion can separate them.
        diff[diff == 0] = 1e-14
        out[start : start + _PAIR_BLOCK] = (1.0 / diff).sum(axis=1)
    return out


def _newton_steps(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """``P(z) / P'(z)`` without overflow for any |z|.

    For |z| <= 1 this is plain dual Horner.  For |z| > 1 the reversed
    polynomial ``R(u) = u**n P(1/u)`` is evaluated at ``u = 1/z``, using
    ``P'/P = (n - u R'(u)/R(u)) / z`` so the ``z**n`` growth cancels.
    """
    n = len(coeffs) - 1
    out = np.empty_like(z)
    inside = np.abs(z) <= 1.0
    if np.any(inside):
        zi = z[inside]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            p, dp = _horner_pair(coeffs, zi)
            dp = np.where(dp == 0, 1e-300, dp)
            out[inside] = p / dp
    if np.any(~inside):
        u = 1.0 / z[~inside]
        rev = coeffs[::-1]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            r, dr = _horner_pair(rev, u)
            r = np.where(r == 0, 1e-300, r)
            ratio = n - u * dr / r
            ratio = np.where(ratio == 0, 1e-300, ratio)
            out[~inside] = z[~inside] / ratio
    return out


def _horner_pair(coeffs: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    acc = np.full_like(z, coeffs[-1])
    dacc = np.zeros_like(z)
    for cj in coeffs[-2::-1]:
        dacc = dacc * z + acc
        acc = acc * z + cj
    return acc, dacc


def log_abs_eval(p: Polynomial, z: np.ndarray) -> np.ndarray:
    """``log |P(z)|`` without overflow: reversed-polynomial form for |z| > 1."""
    c = p.coefficient_array()
    n = p.degree
    zz = np.asarray(z, dtype=complex)
    out = np.empty(zz.shape, dtype=float)
    inside = np.abs(zz) <= 1.0
    with np.errstate(divide="ignore"):
        if np.any(inside):
            v, _ = _horner_pair(c, zz[inside])
            out[inside] = np.log(np.abs(v))
        if np.any(~inside):
            zo = zz[~inside]
            u = 1.0 / zo
            r, _ = _horner_pair(c[::-1], u)
            out[~inside] = n * np.log(np.abs(zo)) + np.log(np.abs(r))
    return out


def _log_scales(z: np.ndarray, abs_cn: float) -> tuple[np.ndarray, np.ndarray]:
    """``log scale_j`` and nearest-neighbor distances for the residual scale."""
    n = len(z)
    log_scale = np.full(n, math.log(abs_cn))
    nearest = np.full(n, np.inf)
    for start in range(0, n, _PAIR_BLOCK):
        block = z[start : start + _PAIR_BLOCK]
        dist = np.abs(block[:, None] - z[None, :])
        for i in range(len(block)):
            dist[i, start + i] = np.inf
        nearest[start : start + _PAIR_BLOCK] = dist.min(axis=1)
        for i in range(len(block)):
            dist[i, start + i] = 1.0  # self-term must not enter the product
        np.clip(dist, 1.0, None, out=dist)
        log_scale[start : start + _PAIR_BLOCK] += np.log(dist).sum(axis=1)
    return log_scale, nearest


def _residuals_from_scales(p: Polynomial, z: np.ndarray, log_scale: np.ndarray) -> np.ndarray:
    log_abs = log_abs_eval(p, z)
    log_res = log_abs - log_scale
    finite = np.isfinite(log_res)
    out = np.zeros(len(z))
    out[finite] = np.exp(np.clip(log_res[finite], -745.0, 709.0))
    out[~np.isfinite(z)] = np.inf
    return out


def initial_points(p: Polynomial) -> np.ndarray:
    """Starting points on perturbed circles at Newton-polygon radii.

    Each upper-hull edge of ``(j, log|c_j|)`` contributes a group of points
    on the circle of radius ``(|c_a| / |c_b|)**(1/(b-a))``, the classical
    estimate for that group's root moduli, clamped to the Cauchy radius
    ``1 + max_j |c_j / c_n|``.  Placing everything on the Cauchy circle
    itself stalls badly for large degrees (the whole cloud contracts by only
    O(1/n) per sweep), so the circle is used as a cap rather than the start.
    A deterministic angular jitter of ``1e-3 * (j/n)`` turns breaks the
    symmetry that would otherwise stall the iteration on ``z**n - c``.
    """
    n = p.degree
    c = p.coefficient_array()
    cauchy = 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(c))
    # Upper convex hull of (j, log|c_j|), skipping zero coefficients.
    hull: list[int] = []
    for j in range(n + 1):
        if not np.isfinite(logs[j]):
            continue
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            if (logs[b] - logs[a]) * (j - b) <= (logs[j] - logs[b]) * (b - a):
                hull.pop()
            else:
                break
        hull.append(j)
    points = np.empty(n, dtype=complex)
    pos = 0
    if hull[0] > 0:
        # Exact zero roots from vanishing low-order coefficients.
        k = hull[0]
        points[:k] = 1e-3 * np.exp(2j * np.pi * (np.arange(k) / max(k, 1)))
        pos = k
    for a, b in zip(hull[:-1], hull[1:]):
        g = b - a
        radius = min(float(np.exp((logs[a] - logs[b]) / g)), cauchy)
        # Global angle slots keep the whole cloud spread around the circle
        # even when the polygon splits into many one-root groups.
        j = np.arange(pos, pos + g)
        angles = (j / n) * (1.0 + 1e-3) + 0.25 / n
        points[pos : pos + g] = radius * np.exp(2j * np.pi * angles)
        pos += g
    return points


def find_roots(p: Polynomial, tol: float = 1e-10, max_iter: int = 200) -> RootSet:
    """All roots of ``p`` with residuals certified below ``tol``.

    Raises :class:`RootFindingError` if the certificate cannot be met within
    ``max_iter`` sweeps, reporting the worst residual reached.
    """
    n = p.degree
    if n < 1:
        raise RootFindingError("degree-0 polynomial has no roots")
    c = p.coefficient_array()
    z = initial_points(p)
    stall = 0
    for _ in range(max_iter):
        newton = _newton_steps(c, z)
        bad = ~np.isfinite(newton)
        if np.any(bad):
            newton[bad] = z[bad] / max(n, 1)  # crude far-field Newton step
        coupling = _pairwise_inverse_sums(z)
        denom = 1.0 - newton * coupling
        denom = np.where(np.abs(denom) < 1e-300, 1.0, denom)
        w = newton / denom
        w = np.where(np.isfinite(w), w, newton)
        # Damp wild steps far from convergence.
        step = np.abs(w)
        limit = 0.5 * (1.0 + np.abs(z))
        factor = np.where(step > limit, limit / np.where(step > 0, step, 1.0), 1.0)
        z = z - w * factor
        rel = np.max(step / (1.0 + np.abs(z)))
        if rel < 1e-14:
            stall += 1
            if stall >= 2:
                break
        else:
            stall = 0
    log_scale, nearest = _log_scales(z, abs(c[-1]))
    residuals = _residuals_from_scales(p, z, log_scale)
    worst = float(residuals.max())
    if not worst <= tol:
        raise RootFindingError(
            f"root residuals not certified: worst {worst:.3e} > tol {tol:.3e}",
            worst_residual=worst,
        )
    return _build(z, residuals, nearest, tol)


def _build(z: np.ndarray, residuals: np.ndarray, nearest: np.ndarray, tol: float) -> RootSet:
    args = np.angle(z) / (2.0 * np.pi)
    args = np.mod(args, 1.0)
    args[args >= 1.0] = 0.0  # guard against -eps wrapping to 1.0 exactly
    return RootSet(
        roots=z,
        residuals=residuals,
        moduli=np.abs(z),
        args_turns=args,
        cluster_radii=nearest,
        tolerance=tol,
    )


def rootset_from_known(
    p: Polynomial,
    roots,
    tol: float = 1e-8,
    full_scale: bool | None = None,
) -> RootSet:
    """Certify an externally supplied root list against ``p``.

    Useful when the roots are known analytically.  For large degrees the
    pairwise residual scale is replaced by its lower cap ``|c_n|`` (which only
    makes the certificate stricter) to avoid an O(n^2) pass.
    """
    z = np.asarray(roots, dtype=complex)
    if len(z) != p.degree:
        raise ValueError("root count must match the degree")
    abs_cn = abs(p.coeffs[-1])
    if full_scale is None:
        full_scale = len(z) <= 4096
    if full_scale:
        log_scale, nearest = _log_scales(z, abs_cn)
    else:
        log_scale = np.full(len(z), math.log(abs_cn))
        nearest = np.full(len(z), np.nan)
    residuals = _residuals_from_scales(p, z, log_scale)
    worst = float(residuals.max())
    if not worst <= tol:
        raise RootFindingError(
            f"supplied roots failed certification: worst {worst:.3e} > tol {tol:.3e}",
            worst_residual=worst,
        )
    return _build(z, residuals, nearest, tol)


def rootset_from_angles(p: Polynomial, angles_turns, moduli=None, tol: float = 1e-8) -> RootSet:
    """RootSet from exact polar data (angles in turns, default modulus 1)."""
    t = np.asarray(angles_turns, dtype=float)
    rho = np.ones_like(t) if moduli is None else np.asarray(moduli, dtype=float)
    z = rho * np.exp(2j * np.pi * t)
    rs = rootset_from_known(p, z, tol=tol)
    # Keep the caller's exact angles instead of round-tripped ones.
    return RootSet(
        roots=rs.roots,
        residuals=rs.residuals,
        moduli=rho,
        args_turns=np.mod(t, 1.0),
        cluster_radii=rs.cluster_radii,
        tolerance=tol,
    )


def unit_roots_rootset(n: int, tol: float = 1e-8) -> RootSet:
    """Roots of ``z**n - 1`` from exact angles ``j/n`` (no iterative solver).

    Residuals come from the closed form ``|z**n - 1|`` over the leading
    coefficient (the generic dense evaluation would cost O(n^2) here).
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    t = np.arange(n) / n
    z = np.exp(2j * np.pi * t)
    residuals = np.abs(z**n - 1.0)
    worst = float(residuals.max())
    if not worst <= tol:
        raise RootFindingError(f"unit roots failed certification: {worst:.3e}")
    return RootSet(
        roots=z,
        residuals=residuals,
        moduli=np.ones(n),
        args_turns=t,
        cluster_radii=np.full(n, 2.0 * math.sin(math.pi / n)),
        tolerance=tol,
    )

"""Scalar functionals of a polynomial on the unit circle.

Everything here integrates over the circle with normalized (probability)
arc measure, written in turns: ``e(t) = exp(2*pi*i*t)``, ``t in [0, 1)``.

Provided functionals:

* ``p_norm``            -- ``(integral |P(e(t))|^p dt)**(1/p)``
* ``sup_norm_enclosure``-- certified interval around ``max |P|``
* ``mahler``            -- geometric mean ``M(P)`` and ``m(P) = log M(P)``
* ``mahler_plus``       -- ``exp(integral log+ |P|)`` and its logarithm
* ``e_measure_enclosure``-- certified interval around ``|E|``, the measure of
  ``{t : |P(e(t))| < 1}``
* ``b_norm``            -- logarithmic p-norm built from the above

Enclosures are Lipschitz/Bernstein-certified from grid samples; they are
conservative but not formally validated interval arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .poly import Polynomial, circle_samples, evaluate, evaluate_with_derivative
from .roots import RootSet, log_abs_eval

_TWO_PI = 2.0 * math.pi


class QuadratureError(RuntimeError):
    """Grid refinement hit its cap before reaching the requested tolerance."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo <= self.hi):
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi


def _next_pow2(x: int) -> int:
    n = 1
    while n < x:
        n *= 2
    return n


def _initial_grid(degree: int, floor: int = 1024) -> int:
    return _next_pow2(max(floor, 16 * (degree + 1)))


# ---------------------------------------------------------------------------
# p-norms and sup-norm
# ---------------------------------------------------------------------------

def p_norm(
    p: Polynomial,
    exponent: float,
    tol: float = 1e-9,
    max_points: int = 2**20,
) -> float:
    """``(integral_0^1 |P(e(t))|**exponent dt)**(1/exponent)``.

    Uniform periodic trapezoid sums (means of FFT samples) over a doubling
    grid, with a short Romberg table for the stop test and the returned
    value.  For even integer exponents the rule is exact once the grid
    resolves the trig degree, so the loop stops at the first comparison;
    |.|-type kinks (circle zeros) leave a clean h^2 family that the
    extrapolation removes.
    """
    if exponent <= 0 or not math.isfinite(exponent):
        raise ValueError("exponent must be a positive finite real")
    n_points = _initial_grid(p.degree, floor=256)
    table: list[list[float]] = []  # Romberg rows over the doubling levels
    diffs: list[float] = []
    while n_points <= max_points:
        mags = np.abs(circle_samples(p, n_points))
        raw = float(np.mean(mags**exponent))
        row = [raw]
        if table:
            prev = table[-1]
            for j in range(min(len(prev), 3)):
                row.append(row[j] + (row[j] - prev[j]) / (4.0 ** (j + 1) - 1.0))
            diffs.append(abs(raw - prev[0]))
        table.append(row)
        if len(table) >= 3:
            best = row[-1]
            prev_best = table[-2][min(len(row) - 1, len(table[-2]) - 1)]
            # Extrapolation is trusted once the raw sums either converged on
            # their own or contract like a clean h^2 family (|.|-type kinks
            # on grid nodes do exactly that).
            small = diffs[-1] <= 100.0 * tol * (1.0 + abs(raw))
            clean = (
                diffs[-1] > 0
                and 2.5 <= diffs[-2] / diffs[-1] <= 20.0
            ) or diffs[-1] == 0
            if abs(best - prev_best) <= tol * (1.0 + abs(best)) and (small or clean):
                return max(best, 0.0) ** (1.0 / exponent)
        n_points *= 2
    raise QuadratureError(f"p_norm grid cap {max_points} reached (p={exponent})")


def sup_norm_enclosure(
    p: Polynomial,
    tol: float = 1e-6,
    max_points: int = 2**20,
) -> Interval:
    """Certified interval containing ``max_t |P(e(t))|``.

    The lower end is the best grid sample.  The upper end combines two valid
    certificates and keeps the smaller: a Lipschitz bound with constant
    ``2*pi*sum j|c_j|`` per turn, and a Bernstein second-derivative bound on
    the trig polynomial ``|P|**2``, which gives
    ``max g <= max_samples / (1 - (pi n h)^2 / 2)``.
    """
    if p.degree == 0:
        v = abs(p.coeffs[0])
        return Interval(v, v)
    c = p.coefficient_array()
    lip = _TWO_PI * float(np.sum(np.arange(len(c)) * np.abs(c)))
    n = p.degree
    # Evaluation rounding allowance so the true sup cannot slip below ``lo``
    # on constant-modulus edge cases.
    eval_err = 4e-16 * (n + 2) * float(np.sum(np.abs(c)))
    n_points = _initial_grid(n, floor=512)
    best: Interval | None = None
    while n_points <= max_points:
        g = np.abs(circle_samples(p, n_points)) ** 2
        ms = float(g.max())
        lo = max(math.sqrt(ms) - eval_err, 0.0)
        h = 1.0 / n_points
        kappa = 0.5 * (math.pi * n * h) ** 2
        hi_bern = math.sqrt(ms / (1.0 - kappa)) if kappa < 1.0 else math.inf
        hi_lip = math.sqrt(ms) + lip * h / 2.0
        hi = min(hi_bern, hi_lip) + eval_err
        enc = Interval(lo, hi)
        if best is None or enc.width < best.width:
            best = enc
        if hi - lo <= tol * hi:
            return enc
        n_points *= 2
    assert best is not None
    raise QuadratureError(
        f"sup_norm grid cap {max_points} reached; best width {best.width:.3e}"
    )


# ---------------------------------------------------------------------------
# Level-set machinery for E = {t : |P(e(t))| < 1}
# ---------------------------------------------------------------------------

@dataclass
class LevelSetInfo:
    """Certified classification of the circle against the level |P| = 1."""

    below: float            # measure certified |P| < 1
    above: float            # measure certified |P| > 1
    crossings: list[tuple[float, float]]  # narrow cells bracketing a sign change
    tangent_measure: float  # unresolved cells without a sign change
    tangency: bool
    evaluations: int

    @property
    def enclosure(self) -> Interval:
        return Interval(self.below, 1.0 - self.above)


def _abs_on_circle(p: Polynomial, t: np.ndarray) -> np.ndarray:
    z = np.exp(2j * np.pi * t)
    return np.abs(evaluate(p, z))


def _abs_and_slope_on_circle(p: Polynomial, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``|P(e(t))|`` and the slope bound ``2 pi |P'(e(t))| >= |d|P|/dt|``."""
    z = np.exp(2j * np.pi * t)
    vals, derivs = evaluate_with_derivative(p, z)
    return np.abs(vals), _TWO_PI * np.abs(derivs)


def _abs_and_slope_uniform(p: Polynomial, n_points: int) -> tuple[np.ndarray, np.ndarray]:
    """Same as :func:`_abs_and_slope_on_circle` on a uniform grid, via FFT."""
    vals = circle_samples(p, n_points)
    c = p.coefficient_array()
    dc = c[1:] * np.arange(1, len(c))
    if len(dc) == 0:
        derivs = np.zeros(n_points)
    else:
        pad = np.zeros(n_points, dtype=complex)
        pad[: len(dc)] = dc
        derivs = np.fft.ifft(pad) * n_points
    return np.abs(vals), _TWO_PI * np.abs(derivs)


def classify_unit_level(
    p: Polynomial,
    min_width: float = 1e-9,
    budget: int = 2_000_000,
    sup_hint: float | None = None,
    tangency_threshold: float = 1e-3,
) -> LevelSetInfo:
    """Split the circle into cells certified above / below ``|P| = 1``.

    A cell [a, b] with both endpoint values of ``g = |P| - 1`` on one side
    is certified once the endpoint margins cover it under a per-cell slope
    bound: ``|g(a)| + |g(b)| >= L_cell (b - a)`` with
    ``L_cell = max(2 pi |P'(a)|, 2 pi |P'(b)|) + M2 (b - a)`` and ``M2``
    the Bernstein bound ``(2 pi n)^2 sup|P|`` on the second derivative.
    Everything else is bisected down to ``min_width``.

    Unresolved mass always widens the enclosure.  Point tangencies of
    ``|P|`` to the level (every real-coefficient polynomial with
    ``|P(1)| = 1`` has one at angle 0) leave a small sqrt(min_width)-scale
    residue and are absorbed by the widening; the ``tangency`` flag fires
    only when the unresolved mass is material (above
    ``tangency_threshold``), signalling level-set degeneracy that the
    downstream certification should treat as indeterminate.
    """
    n = p.degree
    if sup_hint is None:
        n0 = _initial_grid(n, floor=512)
        samples = np.abs(circle_samples(p, n0))
        ms = float(samples.max())
        kappa = 0.5 * (math.pi * max(n, 1) / n0) ** 2
        sup_hint = ms / math.sqrt(1.0 - kappa)
    m2 = (_TWO_PI * max(n, 1)) ** 2 * sup_hint

    n0 = _initial_grid(n)
    t = np.arange(n0 + 1) / n0
    f, fd = _abs_and_slope_uniform(p, n0)
    g = np.append(f, f[0]) - 1.0
    fd = np.append(fd, fd[0])
    a, b = t[:-1], t[1:]
    ga, gb = g[:-1], g[1:]
    da, db = fd[:-1], fd[1:]
    evals = n0

    below = 0.0
    above = 0.0
    crossings: list[tuple[float, float]] = []
    tangent = 0.0
    budget_hit = False

    while len(a):
        w = b - a
        l_cell = np.maximum(da, db) + m2 * w
        cover = (np.abs(ga) + np.abs(gb)) >= l_cell * w
        neg = (ga < 0) & (gb < 0) & cover
        pos = (ga > 0) & (gb > 0) & cover
        below += float(w[neg].sum())
        above += float(w[pos].sum())
        rest = ~(neg | pos)
        a, b, ga, gb, da, db = a[rest], b[rest], ga[rest], gb[rest], da[rest], db[rest]
        if not len(a):
            break
        done = (b - a) <= min_width
        if np.any(done):
            flips = (ga[done] < 0) != (gb[done] < 0)
            for lo_t, hi_t, fl in zip(a[done], b[done], flips):
                if fl:
                    crossings.append((float(lo_t), float(hi_t)))
                else:
                    tangent += float(hi_t - lo_t)
            keep = ~done
            a, b, ga, gb, da, db = a[keep], b[keep], ga[keep], gb[keep], da[keep], db[keep]
        if not len(a):
            break
        unresolved = float((b - a).sum())
        if evals > budget or (evals > 100_000 and unresolved > 0.5):
            # Exhausted, or clearly degenerate (|P| pinned to the level on
            # large mass, e.g. a monomial): stop refining.
            tangent += unresolved
            budget_hit = True
            break
        mid = 0.5 * (a + b)
        fm, dm = _abs_and_slope_on_circle(p, mid)
        gm = fm - 1.0
        evals += len(mid)
        a = np.concatenate([a, mid])
        b = np.concatenate([mid, b])
        ga = np.concatenate([ga, gm])
        gb = np.concatenate([gm, gb])
        da = np.concatenate([da, dm])
        db = np.concatenate([dm, db])

    tangency = budget_hit or tangent > max(
        tangency_threshold, 100.0 * max(1, len(crossings)) * min_width
    )
    return LevelSetInfo(
        below=below,
        above=above,
        crossings=crossings,
        tangent_measure=tangent,
        tangency=tangency,
        evaluations=evals,
    )


def e_measure_enclosure(
    p: Polynomial,
    tol: float = 1e-8,
    budget: int = 2_000_000,
) -> tuple[Interval, bool]:
    """Enclosure of ``|E|`` plus a tangency flag.

    ``tol`` is the width to which each level crossing is localized; the
    enclosure width is at most (number of crossings + 2) * tol plus any
    unresolved tangent measure.
    """
    info = classify_unit_level(p, min_width=tol, budget=budget)
    return info.enclosure, info.tangency


# ---------------------------------------------------------------------------
# Mahler measure
# ---------------------------------------------------------------------------

def mahler(
    p: Polynomial,
    roots: RootSet | None = None,
    method: str = "from_roots",
    tol: float = 1e-8,
    max_points: int = 2**20,
) -> tuple[float, float]:
    """``(M(P), m(P))``: geometric mean of ``|P|`` on the circle and its log.

    ``from_roots`` uses ``M = |c_n| * prod max(1, |a_j|)`` and is the
    reference method.  ``quadrature`` integrates ``log |P|`` directly,
    pairing detected near-circle zeros with the exact factor integral
    ``integral log|e(t) - w| dt = log max(1, |w|)`` so the remaining
    integrand is smooth.
    """
    if method == "from_roots":
        if roots is None:
            raise ValueError("from_roots needs a RootSet")
        m = math.log(abs(p.coeffs[-1])) + float(
            np.sum(np.maximum(0.0, np.log(np.maximum(roots.moduli, 1e-300))))
        )
        return math.exp(m), m
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")
    return _mahler_quadrature(p, tol=tol, max_points=max_points)


def _refine_local_zeros(p: Polynomial, seeds: np.ndarray, iterations: int = 40) -> np.ndarray:
    """Newton-polish each seed toward the nearest zero of ``p``.

    Iterates Newton on ``P/P'`` rather than ``P`` itself: that quotient has
    a simple zero at every root, so convergence stays quadratic at multiple
    zeros too.
    """
    c = p.coefficient_array()
    dc = c[1:] * np.arange(1, len(c))
    ddc = dc[1:] * np.arange(1, len(dc)) if len(dc) > 1 else np.zeros(0, dtype=complex)
    z = seeds.astype(complex)
    for _ in range(iterations):
        v = _horner(c, z)
        dv = _horner(dc, z) if len(dc) else np.zeros_like(z)
        ddv = _horner(ddc, z) if len(ddc) else np.zeros_like(z)
        denom = dv * dv - v * ddv
        denom = np.where(denom == 0, 1e-300, denom)
        step = v * dv / denom
        # Keep the polish local: never move more than a tenth of the circle.
        mag = np.abs(step)
        step = np.where(mag > 0.1, step * (0.1 / np.where(mag > 0, mag, 1.0)), step)
        z = z - step
    return z


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    if len(coeffs) == 0:
        return np.zeros_like(z)
    acc = np.full_like(z, coeffs[-1])
    for cj in coeffs[-2::-1]:
        acc = acc * z + cj
    return acc


def _detect_near_circle_zeros(
    p: Polynomial,
    band: float = 0.05,
    rel_threshold: float = 0.3,
) -> tuple[np.ndarray, np.ndarray]:
    """Zeros within ``band`` of the unit circle with their multiplicities,
    found from |P| dips.

    Grid-scan for local minima below ``rel_threshold`` times the median
    sample, Newton-polish each, then deduplicate.  Detection only inspects
    ``|P|`` samples; no external root list is consulted.
    """
    n = p.degree
    n0 = _initial_grid(n, floor=2048)
    mags = np.abs(circle_samples(p, n0))
    med = float(np.median(mags))
    if med == 0.0:
        med = float(mags.max())
    left = np.roll(mags, 1)
    right = np.roll(mags, -1)
    is_min = (mags <= left) & (mags <= right) & (mags < rel_threshold * med)
    idx = np.nonzero(is_min)[0]
    if len(idx) == 0:
        return np.empty(0, dtype=complex), np.empty(0, dtype=int)
    seeds = np.exp(2j * np.pi * idx / n0)
    zeros = _refine_local_zeros(p, seeds)
    vals = np.abs(evaluate(p, zeros))
    keep = (np.abs(np.abs(zeros) - 1.0) < band) & (vals < 1e-6 * med)
    zeros = zeros[keep]
    if len(zeros) == 0:
        return zeros, np.empty(0, dtype=int)
    # Merge clusters: a double zero resolved from expanded coefficients
    # scatters over ~sqrt(eps), well below the merge radius.
    order = np.lexsort((zeros.imag, zeros.real))
    zeros = zeros[order]
    unique = [zeros[0]]
    for z in zeros[1:]:
        if abs(z - unique[-1]) > 3e-5:
            unique.append(z)
    unique = np.array(unique)
    return unique, _zero_multiplicities(p, unique)


def _zero_multiplicities(p: Polynomial, zeros: np.ndarray) -> np.ndarray:
    """Local order of vanishing from the decay of |P| at two tiny radii.

    ``|P(z + d)| ~ C d^m`` near an m-fold zero, so the slope of ``log |P|``
    between the radii estimates ``m``.  The radii sit above the cluster
    merge scale but below the spacing of distinct zeros.  Orders beyond 2
    are generally beyond float64 resolution; if the estimate is wrong the
    surrounding quadrature loop fails to stabilize and reports that.
    """
    d1, d2 = 1e-5, 1e-6
    v1 = np.abs(evaluate(p, zeros + d1))
    v2 = np.abs(evaluate(p, zeros + d2))
    with np.errstate(divide="ignore", invalid="ignore"):
        est = np.log(v1 / v2) / math.log(d1 / d2)
    est = np.where(np.isfinite(est), est, 1.0)
    return np.clip(np.round(est), 1, max(p.degree, 1)).astype(int)


def _mahler_quadrature(p: Polynomial, tol: float, max_points: int) -> tuple[float, float]:
    paired, mult = _detect_near_circle_zeros(p)
    correction = float(
        np.sum(mult * np.maximum(0.0, np.log(np.maximum(np.abs(paired), 1e-300))))
    )
    n_points = _initial_grid(p.degree, floor=2048)
    prev_raw = None
    prev_rich = None
    while n_points <= max_points:
        t = np.arange(n_points) / n_points
        z = np.exp(2j * np.pi * t)
        with np.errstate(divide="ignore", invalid="ignore"):
            log_abs = log_abs_eval(p, z)
            if len(paired):
                log_abs = log_abs - (
                    mult[None, :] * np.log(np.abs(z[:, None] - paired[None, :]))
                ).sum(axis=1)
        bad = ~np.isfinite(log_abs)
        if np.any(bad):
            # A sample landed on a zero (or exactly on a paired factor);
            # rebuild those values from the deflated polynomial.
            log_abs[bad] = _deflated_log_abs(p, z[bad], paired, mult)
        raw = float(np.mean(log_abs))
        rich = raw if prev_raw is None else raw + (raw - prev_raw) / 3.0
        if (
            prev_rich is not None
            and abs(rich - prev_rich) <= tol * (1.0 + abs(rich))
            and abs(raw - prev_raw) <= 100.0 * tol * (1.0 + abs(raw))
        ):
            est = rich + correction
            return math.exp(est), est
        prev_raw, prev_rich = raw, rich
        n_points *= 2
    raise QuadratureError(f"mahler quadrature cap {max_points} reached")


def _deflated_log_abs(p: Polynomial, z: np.ndarray, paired: np.ndarray, mult: np.ndarray) -> np.ndarray:
    """``log(|P(z)| / prod |z - w|^m)`` by synthetic division, pointwise."""
    out = np.empty(len(z))
    for i, zi in enumerate(z):
        coeffs = list(p.coeffs)
        skipped = 0.0
        for w, m in zip(paired, mult):
            if abs(zi - w) < 1e-9:
                for _ in range(int(m)):
                    # Divide by (z - w): Horner synthetic division.
                    new = [0j] * (len(coeffs) - 1)
                    acc = 0j
                    for k in range(len(coeffs) - 1, 0, -1):
                        acc = coeffs[k] + acc * w
                        new[k - 1] = acc
                    coeffs = new
            else:
                skipped += m * math.log(abs(zi - w))
        val = 0j
        for ck in reversed(coeffs):
            val = val * zi + ck
        out[i] = math.log(max(abs(val), 1e-300)) - skipped
    return out


# ---------------------------------------------------------------------------
# Positive-part Mahler measure
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _integrate_log_abs(p: Polynomial, intervals: np.ndarray, tol: float) -> float:
    """``sum_i integral_{a_i}^{b_i} log |P(e(t))| dt`` over smooth intervals.

    Gauss-Legendre panels sized to the oscillation scale 1/degree, doubled
    until the total stabilizes.  Intervals must avoid zeros of ``P`` on the
    circle (guaranteed when they sit strictly above the level |P| = 1).
    """
    if len(intervals) == 0:
        return 0.0
    a = intervals[:, 0]
    b = intervals[:, 1]
    per_unit = max(4 * p.degree, 8)
    prev = None
    scale = 1
    while True:
        counts = np.maximum((np.ceil((b - a) * per_unit * scale)).astype(int), 1)
        starts = np.repeat(a, counts)
        offs = np.concatenate([np.arange(k) for k in counts])
        widths = np.repeat((b - a) / counts, counts)
        lo = starts + offs * widths
        nodes = lo[:, None] + (0.5 * (_GL_NODES + 1.0))[None, :] * widths[:, None]
        z = np.exp(2j * np.pi * nodes.ravel())
        vals = log_abs_eval(p, z).reshape(nodes.shape)
        total = float(((vals * _GL_WEIGHTS[None, :]).sum(axis=1) * 0.5 * widths).sum())
        if prev is not None and abs(total - prev) <= tol * (1.0 + abs(total)):
            return total
        if scale > 64:
            raise QuadratureError("log-integral panels failed to stabilize")
        prev = total
        scale *= 2


def mahler_plus(
    p: Polynomial,
    tol: float = 1e-8,
    level_info: LevelSetInfo | None = None,
) -> tuple[float, float]:
    """``(M+(P), m+(P))`` with ``m+ = integral log+ |P(e(t))| dt``.

    The integrand's kinks sit exactly on the level crossings ``|P| = 1``, so
    integration runs per certified piece: full ``log |P|`` above the level,
    zero below, and a narrow bracketed sliver around each crossing whose
    contribution is bounded by its width.
    """
    if level_info is None:
        level_info = classify_unit_level(p, min_width=min(tol * 1e-2, 1e-9))
    pieces = _positive_pieces(p, level_info)
    total = _integrate_log_abs(p, pieces, tol=tol) if len(pieces) else 0.0
    m_plus = max(total, 0.0)
    return math.exp(m_plus), m_plus


def _positive_pieces(p: Polynomial, info: LevelSetInfo) -> np.ndarray:
    """Maximal certified-above intervals, re-derived from a fresh scan.

    The classifier certifies measure but discards cell lists; a uniform
    rescan with crossing boundaries inserted reproduces the above-level
    pieces, which is all the integrator needs.
    """
    cuts = sorted(0.5 * (a + b) for a, b in info.crossings)
    n0 = _initial_grid(p.degree)
    grid = np.arange(n0 + 1) / n0
    points = np.unique(np.concatenate([grid, np.asarray(cuts)]))
    mids = 0.5 * (points[:-1] + points[1:])
    above = _abs_on_circle(p, mids) > 1.0
    pieces = []
    start = None
    for k, flag in enumerate(above):
        if flag and start is None:
            start = points[k]
        if not flag and start is not None:
            pieces.append((start, points[k]))
            start = None
    if start is not None:
        pieces.append((start, points[-1]))
    return np.array(pieces) if pieces else np.empty((0, 2))


# ---------------------------------------------------------------------------
# Logarithmic p-norm and the assembled profile
# ---------------------------------------------------------------------------

@dataclass
class ProfileTolerances:
    quad_tol: float = 1e-9
    sup_tol: float = 1e-6
    e_tol: float = 1e-8
    mplus_tol: float = 1e-8
    mahler_tol: float = 1e-8
    max_points: int = 2**20
    level_budget: int = 2_000_000


@dataclass
class NormProfile:
    """Every scalar functional of one polynomial needed by the bound tables."""

    degree: int
    c0_abs: float
    cn_abs: float
    c0cn_abs: float
    p_norms: dict[float, float]
    sup_norm: Interval
    mahler: float
    log_mahler: float
    mahler_plus: float
    log_mahler_plus: float
    log_mahler_plus_scaled: float
    e_measure: Interval
    e_tangency: bool
    quad_points: dict[str, int] = field(default_factory=dict)

    @property
    def log_mahler_scaled(self) -> float:
        """``m(P / sqrt|c_0 c_n|) = m(P) - log sqrt|c_0 c_n|``."""
        return self.log_mahler - 0.5 * math.log(self.c0cn_abs)

    # Hypothesis screening leaves rounding-level slack so that polynomials
    # satisfying a condition by construction (unit-modulus coefficients
    # stored as floats) are not knocked out by the last bit.

    def pnorm_at_least_one(self, exponent: float) -> bool:
        return self.p_norms.get(exponent, 0.0) >= 1.0 - 1e-9

    @property
    def c0cn_at_least_one(self) -> bool:
        return self.c0cn_abs >= 1.0 - 1e-12


def b_norm(
    profile: NormProfile,
    exponent: float,
    direction: str = "point",
) -> float:
    """Logarithmic p-norm ``B_p``.

    ``B_inf = log(sup / sqrt|c0 cn|)``; for finite p,
    ``B_p = (1 - |E|) log(pnorm / sqrt|c0 cn|) + 1/(e p)``.
    ``direction`` selects which enclosure endpoints enter: ``certify_upper``
    maximizes the value, ``certify_lower`` minimizes it, ``point`` uses
    midpoints.
    """
    if direction not in ("point", "certify_upper", "certify_lower"):
        raise ValueError(f"bad direction {direction!r}")
    if profile.c0cn_abs == 0:
        raise ValueError("B requires a nonzero constant coefficient")
    half_log = 0.5 * math.log(profile.c0cn_abs)
    if math.isinf(exponent):
        sup = {
            "point": profile.sup_norm.mid,
            "certify_upper": profile.sup_norm.hi,
            "certify_lower": profile.sup_norm.lo,
        }[direction]
        return math.log(max(sup, 1e-300)) - half_log
    if exponent not in profile.p_norms:
        raise KeyError(f"profile lacks p-norm for p={exponent}")
    log_term = math.log(max(profile.p_norms[exponent], 1e-300)) - half_log
    e_int = profile.e_measure
    if direction == "point":
        e_val = e_int.mid
    elif direction == "certify_upper":
        e_val = e_int.lo if log_term >= 0 else e_int.hi
    else:
        e_val = e_int.hi if log_term >= 0 else e_int.lo
    return (1.0 - e_val) * log_term + 1.0 / (math.e * exponent)


def b_norm_interval(profile: NormProfile, exponent: float) -> Interval:
    return Interval(
        b_norm(profile, exponent, "certify_lower"),
        b_norm(profile, exponent, "certify_upper"),
    )


def compute_profile(
    p: Polynomial,
    roots: RootSet | None = None,
    p_list: tuple[float, ...] = (1.0, 2.0),
    tols: ProfileTolerances | None = None,
    with_mahler_plus: bool = True,
) -> NormProfile:
    """Assemble the full scalar profile of ``p``.

    The Mahler measure comes from the root product when a RootSet is given
    (the reference route), otherwise from singularity-paired quadrature.
    """
    tols = tols or ProfileTolerances()
    quad_points: dict[str, int] = {}
    p_norms = {}
    for exponent in p_list:
        p_norms[float(exponent)] = p_norm(
            p, float(exponent), tol=tols.quad_tol, max_points=tols.max_points
        )
    sup = sup_norm_enclosure(p, tol=tols.sup_tol, max_points=tols.max_points)
    info = classify_unit_level(
        p,
        min_width=tols.e_tol,
        budget=tols.level_budget,
        sup_hint=sup.hi,
    )
    quad_points["level_set"] = info.evaluations
    if roots is not None:
        m_val, m_log = mahler(p, roots=roots, method="from_roots")
    else:
        try:
            m_val, m_log = mahler(p, method="quadrature", tol=tols.mahler_tol)
        except QuadratureError:
            # Degenerate circle zeros can exhaust float64; the rest of the
            # profile stays usable.
            m_val = m_log = math.nan
    if with_mahler_plus:
        mp_val, mp_log = mahler_plus(p, tol=tols.mplus_tol, level_info=info)
        scaled = p.scaled(1.0 / math.sqrt(abs(p.coeffs[0] * p.coeffs[-1])))
        _, mp_log_scaled = mahler_plus(scaled, tol=tols.mplus_tol)
    else:
        mp_val = mp_log = mp_log_scaled = math.nan
    return NormProfile(
        degree=p.degree,
        c0_abs=abs(p.coeffs[0]),
        cn_abs=abs(p.coeffs[-1]),
        c0cn_abs=abs(p.coeffs[0] * p.coeffs[-1]),
        p_norms=p_norms,
        sup_norm=sup,
        mahler=m_val,
        log_mahler=m_log,
        mahler_plus=mp_val,
        log_mahler_plus=mp_log,
        log_mahler_plus_scaled=mp_log_scaled,
        e_measure=info.enclosure,
        e_tangency=info.tangency,
        quad_points=quad_points,
    )

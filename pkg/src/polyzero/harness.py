"""End-to-end certification of one polynomial or a family sweep.

For each instance: compute roots, the norm profile, the observed statistics
(angular discrepancy, annular discrepancies, sampled disk counts, gear
counts), every applicable bound, and a verdict per bound with margins on
both enclosure sides.

Verdict logic: PASS when the conservative-side comparison holds,
INDETERMINATE when only the favorable side holds, VIOLATION only when even
the favorable side fails.  A numerical enclosure therefore cannot
manufacture a counterexample to a true statement.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds as bounds_mod
from . import geometry
from .norms import NormProfile, ProfileTolerances, b_norm, compute_profile
from .poly import FamilySpec, Polynomial, is_g_class, is_unimodular, make_family
from .roots import RootFindingError, RootSet, find_roots
from .zerostats import (
    SectorSpec,
    angular_discrepancy_report,
    annular_discrepancy,
    tau_outside_annulus,
)

SCHEMA = "polyzero-report/1"

PASS = "PASS"
VIOLATION = "VIOLATION"
INDETERMINATE = "INDETERMINATE"
INAPPLICABLE = "INAPPLICABLE"

_E_DEPENDENT_PREFIXES = ("PropThm0", "CorollaryKn", "Lem2", "Thm4", "Thm2_disk_p")


@dataclass
class ToleranceConfig:
    root_tol: float = 1e-9
    max_iter: int = 400
    quad_tol: float = 1e-9
    sup_tol: float = 1e-6
    e_tol: float = 1e-8
    mplus_tol: float = 1e-8
    mahler_tol: float = 1e-8
    max_points: int = 2**20
    compute_mahler_plus: bool = True

    def profile_tolerances(self) -> ProfileTolerances:
        return ProfileTolerances(
            quad_tol=self.quad_tol,
            sup_tol=self.sup_tol,
            e_tol=self.e_tol,
            mplus_tol=self.mplus_tol,
            mahler_tol=self.mahler_tol,
            max_points=self.max_points,
        )


_DEFAULT_ARCS = (
    (0.0, math.pi / 2.0),
    (math.pi / 3.0, 4.0 * math.pi / 3.0),
    (5.5, 1.2),  # wrap-around arc
    (0.0, 2.0 * math.pi),
)


@dataclass
class SweepConfig:
    """One family sweep: degrees x trials, fully seeded and reproducible."""

    family: str = "littlewood"
    degrees: tuple[int, ...] = (16, 32, 64, 128, 256)
    trials: int = 50
    seed: int = 0
    p_list: tuple[float, ...] = (1.0, 2.0)
    theta_list: tuple[float, ...] = (0.5, 1.0)
    rho_list: tuple[float, ...] = (0.5, 0.9)
    arcs: tuple[tuple[float, float], ...] = _DEFAULT_ARCS
    disk_centers: int = 720
    gear_deltas: tuple[float, ...] = (0.0, 0.25)
    record_disk_counts: bool = False  # full per-center counts in the report
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass
class VerdictEntry:
    bound_id: str
    kind: str  # upper | lower | report
    observed: float | None
    bound: float  # conservative-side bound value
    bound_favorable: float
    margin_conservative: float
    margin_favorable: float
    verdict: str
    notes: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class BoundReport:
    descriptor: dict
    profile: dict
    observed: dict
    entries: list[VerdictEntry]
    runtime_seconds: float
    root_failure: str = ""

    @property
    def verdicts(self) -> dict[str, str]:
        return {e.bound_id: e.verdict for e in self.entries}

    def hard_violations(self) -> list[VerdictEntry]:
        return [e for e in self.entries if e.kind != "report" and e.verdict == VIOLATION]

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "descriptor": self.descriptor,
            "profile": self.profile,
            "observed": self.observed,
            "entries": [e.to_dict() for e in self.entries],
            "root_failure": self.root_failure,
        }
        if include_timing:
            out["timing"] = {"runtime_seconds": self.runtime_seconds}
        return out


def _json_safe(obj):
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj


def report_json(report: BoundReport, include_timing: bool = True) -> str:
    return json.dumps(_json_safe(report.to_dict(include_timing)), sort_keys=True, indent=1)


def _profile_summary(profile: NormProfile, p_list) -> dict:
    out = {
        "degree": profile.degree,
        "c0cn_abs": profile.c0cn_abs,
        "p_norms": {f"{p:g}": v for p, v in profile.p_norms.items()},
        "sup_norm": [profile.sup_norm.lo, profile.sup_norm.hi],
        "mahler": profile.mahler,
        "log_mahler": profile.log_mahler,
        "mahler_plus": profile.mahler_plus,
        "log_mahler_plus": profile.log_mahler_plus,
        "log_mahler_plus_scaled": profile.log_mahler_plus_scaled,
        "e_measure": [profile.e_measure.lo, profile.e_measure.hi],
        "e_tangency": profile.e_tangency,
        "quad_points": dict(profile.quad_points),
        "b_values": {},
    }
    for p in tuple(p_list) + (math.inf,):
        key = "inf" if math.isinf(p) else f"{p:g}"
        out["b_values"][key] = [
            b_norm(profile, p, "certify_lower"),
            b_norm(profile, p, "certify_upper"),
        ]
    return out


def _upper_entry(entry: bounds_mod.BoundEntry, observed: float, e_tangency: bool) -> VerdictEntry:
    margin_c = entry.value - observed
    margin_f = entry.value_favorable - observed
    if not entry.applicable:
        verdict = INAPPLICABLE
    elif entry.kind == "report":
        # Margin-only entries are never hard verdicts.
        verdict = PASS if margin_c >= 0 else INDETERMINATE
    elif margin_c >= 0:
        verdict = PASS
    elif margin_f >= 0:
        verdict = INDETERMINATE
    else:
        verdict = VIOLATION
    if verdict == PASS and e_tangency and _uses_e(entry.bound_id):
        verdict = INDETERMINATE
    return VerdictEntry(
        bound_id=entry.bound_id,
        kind=entry.kind,
        observed=observed,
        bound=entry.value,
        bound_favorable=entry.value_favorable,
        margin_conservative=margin_c,
        margin_favorable=margin_f,
        verdict=verdict,
        notes=entry.hypothesis_notes,
    )


def _uses_e(bound_id: str) -> bool:
    return any(bound_id.startswith(pfx) for pfx in _E_DEPENDENT_PREFIXES)


def stratified_center_angles(count: int, seed: int, salt: int = 0) -> np.ndarray:
    """``count`` angles, one uniform draw per equal slice of [0, 2 pi)."""
    key = np.array(
        [seed & 0xFFFFFFFFFFFFFFFF, (0xC2B2AE3D27D4EB4F * (salt + 1)) & 0xFFFFFFFFFFFFFFFF],
        dtype=np.uint64,
    )
    rng = np.random.Generator(np.random.Philox(key=key))
    return 2.0 * math.pi * (np.arange(count) + rng.random(count)) / count


def _disk_counts(roots: RootSet, center_angles: np.ndarray, radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Open and closed counts of roots in disks at each unit-circle center."""
    centers = np.exp(1j * center_angles)
    open_counts = np.empty(len(centers), dtype=int)
    closed_counts = np.empty(len(centers), dtype=int)
    for k in range(0, len(centers), 64):
        blk = centers[k : k + 64]
        dist = np.abs(roots.roots[None, :] - blk[:, None])
        open_counts[k : k + 64] = (dist < radius).sum(axis=1)
        closed_counts[k : k + 64] = (dist <= radius).sum(axis=1)
    return open_counts, closed_counts


def certify(
    p: Polynomial,
    cfg: SweepConfig | None = None,
    roots: RootSet | None = None,
    descriptor: dict | None = None,
    center_salt: int = 0,
) -> BoundReport:
    """Full bound report for one polynomial.

    ``roots`` may be supplied when known analytically; otherwise the solver
    runs at the configured tolerance.  Root-finding failure yields a partial
    (norm-only) report rather than an exception.
    """
    cfg = cfg or SweepConfig()
    t0 = time.monotonic()
    n = p.degree
    descriptor = dict(descriptor or {})
    descriptor.setdefault("degree", n)
    descriptor.setdefault("label", p.label)

    root_failure = ""
    if roots is None and n >= 1:
        try:
            roots = find_roots(p, tol=cfg.tolerances.root_tol, max_iter=cfg.tolerances.max_iter)
        except RootFindingError as exc:
            root_failure = str(exc)
            roots = None

    profile = compute_profile(
        p,
        roots=roots,
        p_list=cfg.p_list,
        tols=cfg.tolerances.profile_tolerances(),
        with_mahler_plus=cfg.tolerances.compute_mahler_plus,
    )
    kn_member = is_unimodular(p)
    gn_member = is_g_class(p)
    descriptor["kn_member"] = kn_member
    descriptor["gn_member"] = gn_member

    observed: dict = {}
    entries: list[VerdictEntry] = []

    if roots is None or n < 1:
        # Norm-only report: every root-dependent entry is out of reach.
        for entry in bounds_mod.discrepancy_bounds(profile, max(n, 1), cfg.p_list, kn_member):
            entries.append(
                VerdictEntry(
                    bound_id=entry.bound_id,
                    kind=entry.kind,
                    observed=None,
                    bound=entry.value,
                    bound_favorable=entry.value_favorable,
                    margin_conservative=math.nan,
                    margin_favorable=math.nan,
                    verdict=INAPPLICABLE,
                    notes=root_failure or "degree < 1",
                )
            )
        return BoundReport(
            descriptor=descriptor,
            profile=_profile_summary(profile, cfg.p_list),
            observed=observed,
            entries=entries,
            runtime_seconds=time.monotonic() - t0,
            root_failure=root_failure,
        )

    disc = angular_discrepancy_report(roots)
    observed["angular_discrepancy"] = disc["value"]
    observed["angular_discrepancy_attained"] = disc["attained"]

    for entry in bounds_mod.discrepancy_bounds(profile, n, cfg.p_list, kn_member):
        entries.append(_upper_entry(entry, disc["value"], profile.e_tangency))

    # Annular statistics: worst configured arc per rho.
    annular_observed: dict[str, dict] = {}
    for rho in cfg.rho_list:
        tau_out = tau_outside_annulus(roots, rho)
        worst = 0.0
        per_arc = []
        for alpha, beta in cfg.arcs:
            stat = annular_discrepancy(roots, rho, SectorSpec(alpha, beta))
            per_arc.append(
                {"arc": [alpha, beta], "discrepancy": stat.discrepancy, "tau": stat.tau_annular_sector}
            )
            worst = max(worst, stat.discrepancy)
        annular_observed[f"{rho:g}"] = {
            "tau_outside": tau_out,
            "worst_discrepancy": worst,
            "arcs": per_arc,
        }
        for p_exp in cfg.p_list:
            table = bounds_mod.annular_bounds(profile, n, rho, p_exp, gn_member=gn_member)
            for entry in table:
                obs = tau_out if entry.bound_id.startswith("Lem2_tau_outside") else worst
                entries.append(_upper_entry(entry, obs, profile.e_tangency))
    observed["annular"] = annular_observed

    # Disk lower bounds at sampled centers.
    center_angles = stratified_center_angles(cfg.disk_centers, cfg.seed, salt=center_salt)
    observed["disk_centers"] = len(center_angles)
    disk_obs: dict[str, dict] = {}
    refined_roots: RootSet | None = None
    for theta in cfg.theta_list:
        variants: list[tuple[str, float, float, dict]] = []
        b_inf_lo = b_norm(profile, math.inf, "certify_lower")
        b_inf_hi = b_norm(profile, math.inf, "certify_upper")
        variants.append(("Thm2_disk", b_inf_lo, b_inf_hi, {"theta": theta}))
        for p_exp in cfg.p_list:
            variants.append(
                (
                    "Thm2_disk_p",
                    b_norm(profile, p_exp, "certify_lower"),
                    b_norm(profile, p_exp, "certify_upper"),
                    {"theta": theta, "p": p_exp},
                )
            )
        variants.append(("Thm3_disk", math.nan, math.nan, {"theta": theta}))
        for base_id, b_lo, b_hi, params in variants:
            key = ",".join(f"{k}={v:g}" for k, v in sorted(params.items()))
            bound_id = f"{base_id}[{key}]"
            variant = {"Thm2_disk": "sup_7", "Thm2_disk_p": "p_9", "Thm3_disk": "Gn_9"}[base_id]
            p_exp = params.get("p")
            kwargs = dict(
                c0_nonzero=profile.c0_abs > 0,
                c0cn_ge_1=profile.c0cn_at_least_one,
                pnorm_ge_1=profile.pnorm_at_least_one(p_exp) if p_exp else False,
                gn_member=gn_member,
            )
            if variant == "Gn_9":
                cons = fav = bounds_mod.disk_lower_bound(n, 0.0, theta, variant, **kwargs)
            else:
                # Conservative: smallest disk must hold the largest requirement.
                cons = bounds_mod.disk_lower_bound(n, b_lo, theta, variant, **kwargs)
                fav = bounds_mod.disk_lower_bound(n, b_hi, theta, variant, **kwargs)
            if not (cons.applicable and fav.applicable):
                notes = cons.hypothesis_notes or fav.hypothesis_notes
                entries.append(
                    VerdictEntry(
                        bound_id=bound_id,
                        kind="lower",
                        observed=None,
                        bound=fav.min_zeros if variant != "Gn_9" else cons.min_zeros,
                        bound_favorable=cons.min_zeros,
                        margin_conservative=math.nan,
                        margin_favorable=math.nan,
                        verdict=INAPPLICABLE,
                        notes=notes,
                    )
                )
                continue
            entry, obs = _disk_check(
                p, cfg, roots, center_angles, cons, fav, bound_id, profile.e_tangency and variant == "p_9",
            )
            if entry.verdict == VIOLATION and refined_roots is None and root_failure == "":
                # Re-examine at 10x root tolerance before reporting failure.
                try:
                    refined_roots = find_roots(
                        p, tol=cfg.tolerances.root_tol / 10.0, max_iter=cfg.tolerances.max_iter
                    )
                except RootFindingError:
                    refined_roots = None
                if refined_roots is not None:
                    entry, obs = _disk_check(
                        p, cfg, refined_roots, center_angles, cons, fav, bound_id,
                        profile.e_tangency and variant == "p_9",
                    )
            entries.append(entry)
            disk_obs[bound_id] = obs
    observed["disks"] = disk_obs

    # Gear-wheel upper bounds.
    gear_obs: dict[str, dict] = {}
    gear_cases = [("sup_7", math.inf, "")]
    for p_exp in cfg.p_list:
        gear_cases.append(("p_9", p_exp, f",p={p_exp:g}"))
    for theta in cfg.theta_list:
        for delta in cfg.gear_deltas:
            for variant, exponent, p_tag in gear_cases:
                b_lo = b_norm(profile, exponent, "certify_lower")
                b_hi = b_norm(profile, exponent, "certify_upper")
                bound_id = f"GearUpper_exact[variant={variant}{p_tag},theta={theta:g},delta={delta:g}]"
                hyp_ok = True
                if variant == "p_9":
                    hyp_ok = profile.c0cn_at_least_one and profile.pnorm_at_least_one(exponent)
                sides = []
                if hyp_ok and profile.c0_abs > 0:
                    for b_val in (b_lo, b_hi):
                        sides.append(_gear_side(roots, n, b_val, theta, delta, variant))
                if not sides or any(s is None for s in sides):
                    notes = "radius > 1/2 or hypotheses fail"
                    entries.append(
                        VerdictEntry(
                            bound_id=bound_id,
                            kind="upper",
                            observed=None,
                            bound=math.nan,
                            bound_favorable=math.nan,
                            margin_conservative=math.nan,
                            margin_favorable=math.nan,
                            verdict=INAPPLICABLE,
                            notes=notes,
                        )
                    )
                    continue
                margins = [s["margin"] for s in sides]
                order = int(np.argmin(margins))
                cons_side, fav_side = sides[order], sides[1 - order]
                margin_c, margin_f = cons_side["margin"], fav_side["margin"]
                if margin_c >= 0:
                    verdict = PASS
                elif margin_f >= 0:
                    verdict = INDETERMINATE
                else:
                    verdict = VIOLATION
                if verdict == PASS and profile.e_tangency and variant == "p_9":
                    verdict = INDETERMINATE
                entries.append(
                    VerdictEntry(
                        bound_id=bound_id,
                        kind="upper",
                        observed=float(cons_side["count"]),
                        bound=cons_side["exact_form"],
                        bound_favorable=fav_side["exact_form"],
                        margin_conservative=margin_c,
                        margin_favorable=margin_f,
                        verdict=verdict,
                    )
                )
                closed_id = f"GearUpper_closed[variant={variant}{p_tag},theta={theta:g},delta={delta:g}]"
                closed_margins = [s["closed_form"] - s["count"] for s in sides]
                entries.append(
                    VerdictEntry(
                        bound_id=closed_id,
                        kind="upper",
                        observed=float(cons_side["count"]),
                        bound=min(s["closed_form"] for s in sides),
                        bound_favorable=max(s["closed_form"] for s in sides),
                        margin_conservative=min(closed_margins),
                        margin_favorable=max(closed_margins),
                        verdict=PASS if min(closed_margins) >= 0 else (
                            INDETERMINATE if max(closed_margins) >= 0 else VIOLATION
                        ),
                    )
                )
                gear_obs[bound_id] = {
                    "teeth": cons_side["teeth"],
                    "gamma": cons_side["gamma"],
                    "count": cons_side["count"],
                }
    observed["gear"] = gear_obs

    return BoundReport(
        descriptor=descriptor,
        profile=_profile_summary(profile, cfg.p_list),
        observed=observed,
        entries=entries,
        runtime_seconds=time.monotonic() - t0,
        root_failure=root_failure,
    )


def _disk_check(p, cfg, roots, center_angles, cons, fav, bound_id, tangency):
    open_c, closed_c = _disk_counts(roots, center_angles, cons.gamma)
    open_f, closed_f = (
        (open_c, closed_c) if fav.gamma == cons.gamma else _disk_counts(roots, center_angles, fav.gamma)
    )
    # Lower-bound margins: observed open count minus the required count,
    # requirement taken from the opposite enclosure side than the radius.
    margin_c = float(open_c.min() - fav.min_zeros)
    margin_f = float(open_f.min() - cons.min_zeros)
    if margin_c >= 0:
        verdict = PASS
    elif margin_f >= 0:
        verdict = INDETERMINATE
    else:
        verdict = VIOLATION
    if verdict == PASS and tangency:
        verdict = INDETERMINATE
    obs = {
        "radius_conservative": cons.gamma,
        "radius_favorable": fav.gamma,
        "min_open_count": int(open_c.min()),
        "min_closed_count": int(closed_c.min()),
        "required_conservative": fav.min_zeros,
        "required_favorable": cons.min_zeros,
    }
    if cfg.record_disk_counts:
        obs["open_counts"] = [int(v) for v in open_c]
        obs["closed_counts"] = [int(v) for v in closed_c]
    entry = VerdictEntry(
        bound_id=bound_id,
        kind="lower",
        observed=float(open_c.min()),
        bound=fav.min_zeros,
        bound_favorable=cons.min_zeros,
        margin_conservative=margin_c,
        margin_favorable=margin_f,
        verdict=verdict,
        notes=cons.hypothesis_notes,
    )
    return entry, obs


def _gear_side(roots, n, b_val, theta, delta, variant):
    coeff = 7.0 if variant == "sup_7" else 9.0
    if b_val <= 0:
        return None
    gamma = coeff * (2.0 * b_val) ** theta / math.sqrt(n)
    if gamma > 0.5:
        return None
    gear = geometry.build_gear(gamma, delta)
    gb = bounds_mod.gear_zero_upper_bound(n, b_val, theta, delta, variant, gear)
    if not gb.applicable:
        return None
    count = int(np.sum(geometry.contains(gear, roots.roots)))
    return {
        "gamma": gamma,
        "teeth": gear.teeth,
        "count": count,
        "exact_form": gb.exact_form,
        "closed_form": gb.closed_form,
        "margin": gb.exact_form - count,
    }


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def _instance_seed(seed: int, degree: int, trial: int) -> int:
    return (seed * 0x9E3779B97F4A7C15 + degree * 0x100000001B3 + trial * 0x1B873593 + 1) & 0x7FFFFFFFFFFFFFFF


@dataclass
class SweepResult:
    config: SweepConfig
    reports: list[BoundReport]
    aggregates: dict
    hard_violation_count: int

    @property
    def failed(self) -> bool:
        return self.hard_violation_count > 0

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "schema": "polyzero-sweep/1",
            "config": _json_safe(_config_dict(self.config)),
            "aggregates": _json_safe(self.aggregates),
            "hard_violation_count": self.hard_violation_count,
            "reports": [_json_safe(r.to_dict(include_timing=include_timing)) for r in self.reports],
        }
        return json.dumps(payload, sort_keys=True, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            [
                "family",
                "degree",
                "seed",
                "bound_id",
                "observed",
                "bound",
                "margin_conservative",
                "margin_favorable",
                "verdict",
            ]
        )
        for report in self.reports:
            d = report.descriptor
            for e in report.entries:
                writer.writerow(
                    [
                        d.get("family", d.get("label", "")),
                        d.get("degree", ""),
                        d.get("seed", ""),
                        e.bound_id,
                        _csv_num(e.observed),
                        _csv_num(e.bound),
                        _csv_num(e.margin_conservative),
                        _csv_num(e.margin_favorable),
                        e.verdict,
                    ]
                )
        return buf.getvalue()


def _csv_num(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return repr(float(x))


def _config_dict(cfg: SweepConfig) -> dict:
    out = asdict(cfg)
    return out


def sweep(cfg: SweepConfig) -> SweepResult:
    """Run the full (degree x trial) grid for one family.

    Instances are independent; ``POLYZERO_THREADS`` caps optional thread
    parallelism.  Output ordering and all RNG streams depend only on the
    config, so re-runs are byte-identical apart from timing metadata.
    """
    tasks = []
    for degree in cfg.degrees:
        for trial in range(cfg.trials):
            tasks.append((degree, trial, _instance_seed(cfg.seed, degree, trial)))

    def run_one(task):
        degree, trial, inst_seed = task
        spec = FamilySpec(cfg.family, degree, seed=inst_seed)
        poly = make_family(spec)
        descriptor = {
            "family": cfg.family,
            "degree": degree,
            "trial": trial,
            "seed": inst_seed,
        }
        return certify(poly, cfg, descriptor=descriptor, center_salt=inst_seed)

    threads = int(os.environ.get("POLYZERO_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run_one, tasks))
    else:
        reports = [run_one(t) for t in tasks]

    aggregates = _aggregate(reports)
    hard = sum(len(r.hard_violations()) for r in reports)
    return SweepResult(config=cfg, reports=reports, aggregates=aggregates, hard_violation_count=hard)


def _aggregate(reports: list[BoundReport]) -> dict:
    per_bound: dict[str, dict] = {}
    e_stats: dict[str, list[float]] = {}
    for report in reports:
        degree = str(report.descriptor.get("degree"))
        e_lo, e_hi = report.profile["e_measure"]
        e_stats.setdefault(degree, []).append(0.5 * (e_lo + e_hi))
        for e in report.entries:
            slot = per_bound.setdefault(
                e.bound_id,
                {
                    "applicable": 0,
                    "pass": 0,
                    "violation": 0,
                    "indeterminate": 0,
                    "inapplicable": 0,
                    "max_ratio": None,
                    "min_margin": None,
                },
            )
            slot[e.verdict.lower()] = slot.get(e.verdict.lower(), 0) + 1
            if e.verdict != INAPPLICABLE:
                slot["applicable"] += 1
                if e.kind == "upper" and e.observed is not None and e.bound > 0:
                    ratio = e.observed / e.bound
                    slot["max_ratio"] = ratio if slot["max_ratio"] is None else max(slot["max_ratio"], ratio)
                if math.isfinite(e.margin_conservative):
                    slot["min_margin"] = (
                        e.margin_conservative
                        if slot["min_margin"] is None
                        else min(slot["min_margin"], e.margin_conservative)
                    )
    e_summary = {
        deg: {
            "mean": float(np.mean(vals)),
            "min": float(np.min(vals)),
            "max": float(np.max(vals)),
            "count": len(vals),
        }
        for deg, vals in sorted(e_stats.items())
    }
    return {"per_bound": per_bound, "e_measure_by_degree": e_summary}

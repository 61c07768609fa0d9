"""Verification campaigns over streams of hypergraph instances.

Each campaign checks one quantitative claim at desk scale:

  * ``circumference``: 2-connected instances above the degree threshold have
    a Berge cycle of length at least min(2k, n);
  * ``small_cycle``: every 2-connected r-graph has a Berge cycle of length
    at least min(4, n, |E|);
  * ``codiameter``: instances above the threshold join every vertex pair by
    a Berge path of length at least k;
  * ``sharpness``: the generator families meet the degree bound minus one
    and have circumference exactly 2k-2.

Exhaustive streams enumerate edge-subsets of the complete r-graph with
optional isomorphism dedup (canonical form = lexicographically minimal edge
mask over all vertex permutations).  Sampled streams delete random edges
from the complete r-graph while the degree and 2-connectivity constraints
still hold, stopping at a uniformly chosen target edge count; sampling is
deterministic under a fixed seed.  Budget-exhausted instances are skipped,
never failed.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .connectivity import is_k_connected, is_two_connected
from .constructions import bounded_core, shared_pair_cliques, two_hub_blocks
from .errors import BadParams, BudgetExhausted, NoCycle, NotTwoConnected
from .hypergraph import Hypergraph, build, from_document
from .lollipop import grow_long_cycle
from .search import _path_search, circumference, codiameter

CLAIMS = ("circumference", "small_cycle", "codiameter", "sharpness")

DEFAULT_BUDGET = 10_000_000
MAX_DEDUP_N = 7  # n! canonicalization is affordable only for tiny n


@dataclass
class CampaignSpec:
    claim: str
    r: int
    n: int
    k: int | None = None
    mode: str = "exhaustive"
    sample_count: int = 100
    seed: int = 0
    budget: int | None = DEFAULT_BUDGET
    dedup: bool | None = None  # None: on for exhaustive, off for sampling

    def __post_init__(self) -> None:
        if self.claim not in CLAIMS:
            raise BadParams(f"unknown claim {self.claim!r}")
        if self.mode not in ("exhaustive", "sample"):
            raise BadParams(f"unknown mode {self.mode!r}")
        if self.claim == "circumference":
            if not (self.k is not None and 3 <= self.r <= self.k - 2
                    and self.n >= self.k):
                raise BadParams("need 3 <= r <= k-2 and n >= k")
        elif self.claim == "small_cycle":
            if not 3 <= self.r < self.n:
                raise BadParams("need 3 <= r < n")
        elif self.claim == "codiameter":
            if not (self.k is not None and self.k >= self.r + 2
                    and self.r >= 3 and self.n >= 2 * self.k):
                raise BadParams("need n/2 >= k >= r+2 and r >= 3")

    @property
    def dedup_effective(self) -> bool:
        if self.dedup is not None:
            return self.dedup
        return self.mode == "exhaustive" and self.n <= MAX_DEDUP_N


@dataclass
class VerificationReport:
    claim: str
    params: dict
    instances_checked: int = 0
    passes: int = 0
    failures: list = field(default_factory=list)
    skipped: int = 0
    skip_reasons: dict = field(default_factory=dict)
    wall_time: float = 0.0
    notes: list = field(default_factory=list)
    heuristic_gaps: dict = field(default_factory=dict)

    def finish(self, t0: float) -> "VerificationReport":
        self.wall_time = time.monotonic() - t0
        self.failures.sort(key=lambda f: f["hash"])
        assert self.passes + len(self.failures) + self.skipped \
            == self.instances_checked
        return self

    def to_document(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "passes": self.passes,
            "failures": self.failures,
            "skipped": self.skipped,
            "skip_reasons": self.skip_reasons,
            "wall_time_s": round(self.wall_time, 3),
            "notes": self.notes,
            "heuristic_gaps": {str(k): v
                               for k, v in sorted(self.heuristic_gaps.items())},
        }

    @property
    def ok(self) -> bool:
        return not self.failures


def instance_hash(h: Hypergraph) -> str:
    return hashlib.sha256(h.to_text().encode()).hexdigest()[:16]


def emit_report(report: VerificationReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_document(), fh, indent=1)
        fh.write("\n")


def load_certificate(failure: dict) -> Hypergraph:
    """Reload the counterexample hypergraph embedded in a failure record."""
    return from_document(failure["certificate"])


# ---------------------------------------------------------------------------
# instance streams

def _remap_mask(mask: int, table: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


def exhaustive_instances(n: int, r: int, degree_min: int,
                         dedup: bool) -> Iterator[Hypergraph]:
    """Edge-subsets of the complete r-graph meeting the degree bound, one
    canonical representative per isomorphism class when dedup is on."""
    edges = [tuple(c) for c in combinations(range(n), r)]
    m = len(edges)
    edge_id = {e: i for i, e in enumerate(edges)}
    vert_masks = [0] * n
    for i, e in enumerate(edges):
        for v in e:
            vert_masks[v] |= 1 << i
    tables = None
    if dedup:
        if n > MAX_DEDUP_N:
            raise BadParams(f"dedup needs n <= {MAX_DEDUP_N}")
        tables = []
        for perm in permutations(range(n)):
            tables.append([edge_id[tuple(sorted(perm[v] for v in e))]
                           for e in edges])
    min_m = max(math.ceil(degree_min * n / r), 0)
    seen: set[int] = set()
    for size in range(min_m, m + 1):
        for combo in combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if degree_min and any((vm & mask).bit_count() < degree_min
                                  for vm in vert_masks):
                continue
            if tables is not None:
                if mask in seen:
                    continue
                seen.update(_remap_mask(mask, t) for t in tables)
            yield build(n, r, [edges[i] for i in combo])


def sample_instance(n: int, r: int, degree_min: int,
                    rng: random.Random) -> Hypergraph:
    """Random maximal filtration from the complete r-graph.

    Deletes uniformly random edges while the minimum-degree and
    2-connectivity constraints still hold, down to a uniformly chosen
    target edge count.
    """
    edges = [tuple(c) for c in combinations(range(n), r)]
    m = len(edges)
    if degree_min and math.comb(n - 1, r - 1) < degree_min:
        raise BadParams("degree bound above complete r-graph degree")
    min_m = max(math.ceil(degree_min * n / r), 1)
    target = rng.randint(min_m, m)
    keep = set(range(m))
    while len(keep) > target:
        candidates = sorted(keep)
        rng.shuffle(candidates)
        removed = False
        for i in candidates:
            trial = sorted(keep - {i})
            h = build(n, r, [edges[j] for j in trial])
            if degree_min and h.min_degree() < degree_min:
                continue
            if not is_two_connected(h):
                continue
            keep.discard(i)
            removed = True
            break
        if not removed:
            break
    return build(n, r, [edges[j] for j in sorted(keep)])


def sampled_instances(spec: CampaignSpec,
                      degree_min: int) -> Iterator[Hypergraph]:
    for i in range(spec.sample_count):
        rng = random.Random(spec.seed * 1_000_003 + i)
        yield sample_instance(spec.n, spec.r, degree_min, rng)


# ---------------------------------------------------------------------------
# per-instance checks (module level so a process pool can pickle them)

def _check_circumference(args) -> tuple[str, dict]:
    doc, required, budget = args
    h = from_document(doc)
    try:
        measured = circumference(h, node_budget=budget)
    except BudgetExhausted:
        return "skip", {"reason": "budget"}
    out = {"measured": measured, "required": required, "gap": None}
    try:
        heur = grow_long_cycle(h).length
        assert heur <= measured
        out["gap"] = measured - heur
    except (NoCycle, NotTwoConnected):
        pass
    out["ok"] = measured >= required
    return ("pass" if out["ok"] else "fail"), out


def _check_codiameter_at_least(args) -> tuple[str, dict]:
    doc, k, budget = args
    h = from_document(doc)
    worst = None
    for a in range(h.n):
        for b in range(a + 1, h.n):
            try:
                res = _path_search(h, a, b, budget, at_least=k)
            except BudgetExhausted:
                return "skip", {"reason": "budget"}
            if not res.complete and not res.reached_target:
                return "skip", {"reason": "budget"}
            if res.path is None:
                return "fail", {"measured": 0, "required": k}
            if not res.reached_target and res.path.length < k:
                if worst is None or res.path.length < worst:
                    worst = res.path.length
    if worst is not None:
        return "fail", {"measured": worst, "required": k}
    return "pass", {"measured": k, "required": k}


def _worker_count() -> int:
    raw = os.environ.get("BERGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _pool_map(fn, items: Iterable):
    workers = _worker_count()
    if workers <= 1:
        for item in items:
            yield fn(item)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items)


# ---------------------------------------------------------------------------
# campaigns

def _run_instance_campaign(spec: CampaignSpec, stream, check_fn, check_args,
                           report: VerificationReport) -> None:
    docs = []
    hs = []
    for h in stream:
        docs.append((h.to_document(),) + check_args)
        hs.append(h)
    for h, (status, payload) in zip(hs, _pool_map(check_fn, docs)):
        report.instances_checked += 1
        if status == "skip":
            report.skipped += 1
            reason = payload.get("reason", "budget")
            report.skip_reasons[reason] = report.skip_reasons.get(reason, 0) + 1
        elif status == "pass":
            report.passes += 1
        else:
            report.failures.append({
                "hash": instance_hash(h),
                "measured": payload["measured"],
                "required": payload["required"],
                "certificate": h.to_document(),
            })
        gap = payload.get("gap")
        if gap is not None:
            report.heuristic_gaps[gap] = report.heuristic_gaps.get(gap, 0) + 1


def verify_theorem(spec: CampaignSpec) -> VerificationReport:
    """Check the degree-threshold circumference bound min(2k, n) over a stream of
    2-connected instances meeting the degree threshold."""
    if spec.claim != "circumference":
        raise BadParams("spec.claim must be 'circumference'")
    t0 = time.monotonic()
    r, k, n = spec.r, spec.k, spec.n
    degree_min = math.comb(k - 1, r - 1) + 1
    required = min(2 * k, n)
    report = VerificationReport(claim=spec.claim, params=_params(spec))
    if math.comb(n - 1, r - 1) < degree_min:
        report.notes.append(
            f"max possible degree C({n - 1},{r - 1}) below bound "
            f"{degree_min}: vacuously true, 0 instances")
        return report.finish(t0)
    if spec.mode == "exhaustive":
        stream = (h for h in exhaustive_instances(n, r, degree_min,
                                                  spec.dedup_effective)
                  if is_two_connected(h))
    else:
        stream = sampled_instances(spec, degree_min)
    _run_instance_campaign(spec, stream, _check_circumference,
                           (required, spec.budget), report)
    return report.finish(t0)


def verify_proposition(spec: CampaignSpec) -> VerificationReport:
    """Check that 2-connected r-graphs have a Berge cycle of length at least
    min(4, n, |E|), plus exact sharpness of the two-hub family."""
    if spec.claim != "small_cycle":
        raise BadParams("spec.claim must be 'small_cycle'")
    t0 = time.monotonic()
    r, n = spec.r, spec.n
    report = VerificationReport(claim=spec.claim, params=_params(spec))
    if spec.mode == "exhaustive":
        base = (h for h in exhaustive_instances(n, r, 0, spec.dedup_effective)
                if is_two_connected(h))
    else:
        base = sampled_instances(spec, 0)

    def required_for(h: Hypergraph) -> int:
        return min(4, h.n, h.m)

    hs = list(base)
    docs = [(h.to_document(), required_for(h), spec.budget) for h in hs]
    for h, (status, payload) in zip(hs, _pool_map(_check_circumference, docs)):
        report.instances_checked += 1
        if status == "skip":
            report.skipped += 1
            report.skip_reasons["budget"] = \
                report.skip_reasons.get("budget", 0) + 1
        elif status == "pass":
            report.passes += 1
        else:
            report.failures.append({
                "hash": instance_hash(h),
                "measured": payload["measured"],
                "required": payload["required"],
                "certificate": h.to_document(),
            })
        gap = payload.get("gap")
        if gap is not None:
            report.heuristic_gaps[gap] = report.heuristic_gaps.get(gap, 0) + 1

    for s in (2, 3):
        h = two_hub_blocks(r, s)
        report.instances_checked += 1
        try:
            measured = circumference(h, node_budget=spec.budget)
        except BudgetExhausted:
            report.skipped += 1
            report.skip_reasons["budget"] = \
                report.skip_reasons.get("budget", 0) + 1
            continue
        if measured == 4:
            report.passes += 1
        else:
            report.failures.append({
                "hash": instance_hash(h),
                "measured": measured,
                "required": 4,
                "certificate": h.to_document(),
            })
    report.notes.append("includes exact-sharpness checks for the two-hub "
                        "family (s=2,3)")
    return report.finish(t0)


def verify_codiameter(spec: CampaignSpec) -> VerificationReport:
    """Check codiameter >= k over qualifying instances and exact sharpness
    k-1 of the shared-pair-cliques family."""
    if spec.claim != "codiameter":
        raise BadParams("spec.claim must be 'codiameter'")
    t0 = time.monotonic()
    r, k, n = spec.r, spec.k, spec.n
    degree_min = math.comb(k - 1, r - 1) + 1
    report = VerificationReport(claim=spec.claim, params=_params(spec))

    h1 = shared_pair_cliques(k, r, 3)
    report.instances_checked += 1
    try:
        measured = codiameter(h1, node_budget=spec.budget)
    except BudgetExhausted:
        measured = None
        report.skipped += 1
        report.skip_reasons["budget"] = \
            report.skip_reasons.get("budget", 0) + 1
    if measured is None:
        pass
    elif measured == k - 1:
        report.passes += 1
    else:
        report.failures.append({
            "hash": instance_hash(h1),
            "measured": measured,
            "required": k - 1,
            "certificate": h1.to_document(),
        })
    report.notes.append("shared-pair-cliques family checked for exact "
                        "codiameter k-1 (degree bound minus one)")

    if math.comb(n - 1, r - 1) < degree_min:
        report.notes.append("degree bound infeasible for instance stream")
        return report.finish(t0)
    if spec.mode == "exhaustive":
        stream = (h for h in exhaustive_instances(n, r, degree_min,
                                                  spec.dedup_effective)
                  if is_two_connected(h))
    else:
        stream = sampled_instances(spec, degree_min)
    _run_instance_campaign(spec, stream, _check_codiameter_at_least,
                           (k, spec.budget), report)
    return report.finish(t0)


def verify_sharpness(k: int, r: int,
                     budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Certify both threshold families: degree exactly the bound minus one,
    circumference exactly 2k-2 (strictly below min(2k, n))."""
    if not (k >= r + 2 and r >= 3):
        raise BadParams(f"need k >= r+2 >= 5, got k={k} r={r}")
    t0 = time.monotonic()
    report = VerificationReport(claim="sharpness",
                                params={"k": k, "r": r, "budget": budget})
    degree = math.comb(k - 1, r - 1)

    def check(h: Hypergraph, label: str, extra_ok: bool = True) -> None:
        report.instances_checked += 1
        try:
            circ = circumference(h, node_budget=budget)
        except BudgetExhausted:
            report.skipped += 1
            report.skip_reasons["budget"] = \
                report.skip_reasons.get("budget", 0) + 1
            return
        ok = (h.min_degree() == degree and circ == 2 * k - 2
              and circ < min(2 * k, h.n) and extra_ok)
        if ok:
            report.passes += 1
        else:
            report.failures.append({
                "hash": instance_hash(h),
                "measured": {"min_degree": h.min_degree(),
                             "circumference": circ},
                "required": {"min_degree": degree,
                             "circumference": 2 * k - 2},
                "certificate": h.to_document(),
            })
        report.notes.append(f"{label}: min_degree={h.min_degree()} "
                            f"circumference={circ}")

    check(shared_pair_cliques(k, r, 3), "shared_pair_cliques(q=3)")
    h2 = bounded_core(k, r, 2 * k - 1)
    witness = is_k_connected(h2, k - 1)
    check(h2, "bounded_core(n=2k-1)", extra_ok=witness.kind == "connected_k")
    return report.finish(t0)


def _params(spec: CampaignSpec) -> dict:
    return {"claim": spec.claim, "r": spec.r, "k": spec.k, "n": spec.n,
            "mode": spec.mode, "sample_count": spec.sample_count,
            "seed": spec.seed, "budget": spec.budget,
            "dedup": spec.dedup_effective}


def run_campaign(spec: CampaignSpec) -> VerificationReport:
    if spec.claim == "circumference":
        return verify_theorem(spec)
    if spec.claim == "small_cycle":
        return verify_proposition(spec)
    if spec.claim == "codiameter":
        return verify_codiameter(spec)
    raise BadParams(f"claim {spec.claim!r} needs verify_sharpness(k, r)")

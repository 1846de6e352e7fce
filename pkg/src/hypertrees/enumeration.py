"""Exhaustive classification of every k-uniform edge set on n vertices.

The space of ``2^C(n,k)`` edge sets is cut into work units by the high bits
of the subset id.  Each unit is scanned by the search kernels, reduced to an
:class:`EnumerationStats` with numpy, optionally checkpointed as JSON, and the
unit results are merged.  Merging is associative and commutative and every
witness is the smallest subset id attaining its extremum, so the result does
not depend on the number of workers or the order units finish in.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from pathlib import Path

import numpy as np

from hypertrees import kernels, oracle
from hypertrees.core import Hypergraph, new_hypergraph
from hypertrees.bounds import lower_bound_applicable
from hypertrees.errors import SizeError

MAX_UNIVERSE = 25
UNIT_BITS = 14
ISO_MAX_N = 8

COUNT_KEYS = (
    "covering", "chain_connected", "semicycle_free", "hypertree",
    "edge_minimal", "edge_maximal", "cycle_checked", "has_cycle",
)


def universe_masks(n: int, k: int) -> list[int]:
    return [sum(1 << v for v in c) for c in combinations(range(n), k)]


def edges_of(sid: int, n: int, k: int) -> list[list[int]]:
    uni = list(combinations(range(n), k))
    return [list(uni[j]) for j in range(len(uni)) if sid >> j & 1]


def hypergraph_of(sid: int, n: int, k: int) -> Hypergraph:
    return new_hypergraph(k, n, edges_of(sid, n, k))


def _better(a, b, largest: bool):
    """Pick between ``(m, sid)`` pairs: extreme m first, then the smaller id."""
    if a is None:
        return b
    if b is None:
        return a
    if a[0] != b[0]:
        return (a if a[0] > b[0] else b) if largest else (a if a[0] < b[0] else b)
    return a if a[1] <= b[1] else b


@dataclass
class EnumerationStats:
    n: int
    k: int
    universe_size: int
    total_edge_sets: int = 0
    counts: dict = field(default_factory=lambda: dict.fromkeys(COUNT_KEYS, 0))
    hypertree_m_histogram: dict = field(default_factory=dict)
    min_hypertree: tuple | None = None
    max_hypertree: tuple | None = None
    max_edge_minimal: tuple | None = None
    min_edge_maximal: tuple | None = None
    lower_bound_violations: int = 0
    counterexamples_chain_connected: int = 0
    counterexamples_hypertree: int = 0
    upper_bound_violations: int = 0
    cycle_without_semicycle: int = 0
    class_cover_failures: int = 0
    oracle_checked: int = 0
    oracle_disagreements: int = 0
    self_intersecting_in_semicycle_free: int = 0
    hypertree_ids: list | None = None
    iso_classes: dict | None = None

    def merge(self, other: "EnumerationStats") -> "EnumerationStats":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cannot merge statistics of different (n, k)")
        out = EnumerationStats(self.n, self.k, self.universe_size)
        out.total_edge_sets = self.total_edge_sets + other.total_edge_sets
        out.counts = {key: self.counts[key] + other.counts[key] for key in COUNT_KEYS}
        hist = dict(self.hypertree_m_histogram)
        for m, c in other.hypertree_m_histogram.items():
            hist[m] = hist.get(m, 0) + c
        out.hypertree_m_histogram = dict(sorted(hist.items()))
        out.min_hypertree = _better(self.min_hypertree, other.min_hypertree, largest=False)
        out.max_hypertree = _better(self.max_hypertree, other.max_hypertree, largest=True)
        out.max_edge_minimal = _better(self.max_edge_minimal, other.max_edge_minimal, largest=True)
        out.min_edge_maximal = _better(self.min_edge_maximal, other.min_edge_maximal, largest=False)
        for name in ("lower_bound_violations", "counterexamples_chain_connected",
                     "counterexamples_hypertree", "upper_bound_violations",
                     "cycle_without_semicycle", "class_cover_failures",
                     "oracle_checked", "oracle_disagreements",
                     "self_intersecting_in_semicycle_free"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        if self.hypertree_ids is not None or other.hypertree_ids is not None:
            out.hypertree_ids = sorted((self.hypertree_ids or []) + (other.hypertree_ids or []))
        if self.iso_classes is not None or other.iso_classes is not None:
            a, b = self.iso_classes or {}, other.iso_classes or {}
            out.iso_classes = {key: sorted(set(a.get(key, [])) | set(b.get(key, [])))
                               for key in sorted(set(a) | set(b))}
        return out

    def witness_edges(self, which: str) -> list[list[int]] | None:
        pair = getattr(self, which)
        return None if pair is None else edges_of(pair[1], self.n, self.k)

    @property
    def iso_counts(self) -> dict | None:
        if self.iso_classes is None:
            return None
        return {key: len(forms) for key, forms in self.iso_classes.items()}

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "EnumerationStats":
        data = dict(data)
        data["hypertree_m_histogram"] = {int(m): c for m, c in data["hypertree_m_histogram"].items()}
        for key in ("min_hypertree", "max_hypertree", "max_edge_minimal", "min_edge_maximal"):
            if data[key] is not None:
                data[key] = tuple(data[key])
        if data.get("iso_classes") is not None:
            data["iso_classes"] = {key: [tuple(f) for f in forms] for key, forms in data["iso_classes"].items()}
        return cls(**data)


def canonical_form(masks, n: int) -> tuple[int, ...]:
    """Smallest sorted mask tuple over all vertex relabelings (naive, n <= 8)."""
    vertex_edges = [[v for v in range(n) if e >> v & 1] for e in masks]
    best = None
    for perm in permutations(range(n)):
        form = tuple(sorted(sum(1 << perm[v] for v in vs) for vs in vertex_edges))
        if best is None or form < best:
            best = form
    return best


@dataclass(frozen=True)
class _Job:
    n: int
    k: int
    unit: int
    start: int
    stop: int
    options: int
    oracle_fraction: float
    seed: int
    collect_ids: bool
    iso: bool


def _first_extreme(ids: np.ndarray, ms: np.ndarray, largest: bool):
    if ids.size == 0:
        return None
    target = ms.max() if largest else ms.min()
    hit = ids[ms == target]
    return (int(target), int(hit.min()))


def _run_unit(job: _Job) -> EnumerationStats:
    n, k = job.n, job.k
    uni = universe_masks(n, k)
    flags = np.frombuffer(kernels.scan_block(n, k, uni, job.start, job.stop, job.options), dtype=np.uint8)
    ids = np.arange(job.start, job.stop, dtype=np.uint64)
    ms = np.bitwise_count(ids).astype(np.int64)

    def has(bit):
        return (flags & bit) != 0

    covers, cc, sf = has(kernels.COVERS), has(kernels.CC), has(kernels.SF)
    tree = cc & sf
    checked, cyc = has(kernels.CYC_CHECKED), has(kernels.HAS_CYC)
    st = EnumerationStats(n, k, len(uni))
    st.total_edge_sets = job.stop - job.start
    st.counts = {
        "covering": int(covers.sum()),
        "chain_connected": int(cc.sum()),
        "semicycle_free": int(sf.sum()),
        "hypertree": int(tree.sum()),
        "edge_minimal": int((tree & has(kernels.EMIN)).sum()),
        "edge_maximal": int((tree & has(kernels.EMAX)).sum()),
        "cycle_checked": int(checked.sum()),
        "has_cycle": int(cyc.sum()),
    }
    hist = np.bincount(ms[tree], minlength=len(uni) + 1)
    st.hypertree_m_histogram = {m: int(c) for m, c in enumerate(hist) if c}
    st.min_hypertree = _first_extreme(ids[tree], ms[tree], largest=False)
    st.max_hypertree = _first_extreme(ids[tree], ms[tree], largest=True)
    if job.options & kernels.OPT_MINMAX:
        emin, emax = tree & has(kernels.EMIN), tree & has(kernels.EMAX)
        st.max_edge_minimal = _first_extreme(ids[emin], ms[emin], largest=True)
        st.min_edge_maximal = _first_extreme(ids[emax], ms[emax], largest=False)
    short = ms < n - (k - 1)
    if lower_bound_applicable(n, k):
        st.lower_bound_violations = int((cc & short).sum())
    else:
        st.counterexamples_chain_connected = int((cc & short).sum())
        st.counterexamples_hypertree = int((tree & short).sum())
    # the upper bound applies under either hypothesis: semicycle-free or cycle-free
    cycle_free = checked & ~cyc
    st.upper_bound_violations = int(((sf | cycle_free) & (ms > comb(n, k - 1))).sum())
    st.cycle_without_semicycle = int((sf & cyc).sum())
    st.class_cover_failures = int(has(kernels.CLASS_FAIL).sum())
    if job.collect_ids:
        st.hypertree_ids = [int(x) for x in ids[tree]]
    if job.iso and n <= ISO_MAX_N:
        st.iso_classes = {}
        for key, sel in (("hypertree", tree), ("edge_minimal", tree & has(kernels.EMIN)),
                         ("edge_maximal", tree & has(kernels.EMAX))):
            forms = {canonical_form([uni[j] for j in range(len(uni)) if int(s) >> j & 1], n)
                     for s in ids[sel]}
            st.iso_classes[key] = sorted(forms)
    if job.oracle_fraction > 0:
        rng = np.random.default_rng([job.seed, job.unit])
        picked = ids[rng.random(ids.size) < job.oracle_fraction]
        if job.options & kernels.OPT_COVER_ONLY:
            picked = picked[covers[(picked - job.start).astype(np.int64)]]
        for sid in picked:
            sid = int(sid)
            H = hypergraph_of(sid, n, k)
            semi_free = bool(flags[sid - job.start] & kernels.SF)
            st.oracle_checked += 1
            if (oracle.any_semicycle(H) is None) != semi_free:
                st.oracle_disagreements += 1
            if semi_free and oracle.self_intersecting_chain(H) is not None:
                st.self_intersecting_in_semicycle_free += 1
    return st


def _load_checkpoint(path: Path, job: _Job) -> EnumerationStats | None:
    if not path.exists():
        return None
    data = json.loads(path.read_text())
    if data.get("job") != asdict(job):
        return None
    return EnumerationStats.from_json(data["stats"])


def _run_unit_checkpointed(job: _Job, checkpoint: str | None) -> EnumerationStats:
    if checkpoint is None:
        return _run_unit(job)
    path = Path(checkpoint) / f"unit-{job.unit:06d}.json"
    cached = _load_checkpoint(path, job)
    if cached is not None:
        return cached
    st = _run_unit(job)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"job": asdict(job), "stats": st.to_json()}))
    os.replace(tmp, path)
    return st


def _worker(args):
    job, checkpoint = args
    return _run_unit_checkpointed(job, checkpoint)


def enumerate_all(
    n: int,
    k: int,
    workers: int = 1,
    checkpoint: str | None = None,
    cover_only: bool = False,
    minmax: bool = True,
    cycle_all: bool = True,
    oracle_fraction: float = 0.0,
    seed: int = 0,
    max_universe: int = MAX_UNIVERSE,
    collect_hypertree_ids: bool = False,
    iso: bool = False,
) -> EnumerationStats:
    """Classify every edge set; see the module docstring for the guarantees."""
    if k < 2 or n < k:
        raise SizeError(f"need n >= k >= 2, got n={n}, k={k}")
    size = comb(n, k)
    if size > max_universe:
        raise SizeError(f"C({n},{k}) = {size} edge slots exceed the limit of {max_universe}")
    if iso and n > ISO_MAX_N:
        raise SizeError(f"isomorphism reduction is limited to n <= {ISO_MAX_N}")
    options = ((kernels.OPT_COVER_ONLY if cover_only else 0)
               | (kernels.OPT_MINMAX if minmax else 0)
               | (kernels.OPT_CYCLE_ALL if cycle_all else 0))
    low = min(size, UNIT_BITS)
    step = 1 << low
    jobs = [_Job(n, k, u, u * step, (u + 1) * step, options, oracle_fraction, seed,
                 collect_hypertree_ids, iso)
            for u in range(1 << (size - low))]
    if checkpoint is not None:
        Path(checkpoint).mkdir(parents=True, exist_ok=True)
    if workers <= 1:
        parts = [_run_unit_checkpointed(j, checkpoint) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, [(j, checkpoint) for j in jobs]))
    total = EnumerationStats(n, k, size)
    if collect_hypertree_ids:
        total.hypertree_ids = []
    if iso:
        total.iso_classes = {}
    for part in parts:
        total = total.merge(part)
    return total


@dataclass(frozen=True)
class ConjectureProbe:
    n: int
    k: int
    edge_minimal_count: int
    max_edge_minimal_m: int | None
    edge_minimal_bound: Fraction
    edge_minimal_exceeds: bool | None
    edge_maximal_count: int
    min_edge_maximal_m: int | None
    half_pairs: Fraction
    edge_maximal_below_half: bool | None
    l_hypertree_max_m: dict
    notes: tuple[str, ...] = ()


def conjecture_probe(n: int, k: int, workers: int = 1, max_universe: int = MAX_UNIVERSE) -> ConjectureProbe:
    """Measure the extremal edge counts the open conjectures talk about.

    Nothing here is asserted: an exceeded bound is a finding to report.
    ``edge_maximal_below_half`` compares against C(n,2)/2 without the
    conjecture's O(n) slack, so it is informative only.
    """
    from hypertrees.recognition import max_chain_length

    st = enumerate_all(n, k, workers=workers, cover_only=True, cycle_all=False,
                       max_universe=max_universe, collect_hypertree_ids=True)
    pairs = comb(n, 2)
    bound_min = Fraction(pairs, k - 1)
    half = Fraction(pairs, 2)
    notes = []
    max_min = st.max_edge_minimal[0] if st.max_edge_minimal else None
    min_max = st.min_edge_maximal[0] if st.min_edge_maximal else None
    if max_min is None:
        notes.append("no edge-minimal hypertree exists at this size")
    if min_max is None:
        notes.append("no edge-maximal hypertree exists at this size")
    by_l: dict[int, int] = {}
    for sid in st.hypertree_ids or []:
        H = hypergraph_of(sid, n, k)
        L = max_chain_length(H)
        by_l[L] = max(by_l.get(L, 0), H.m)
    # an l-hypertree is also an l'-hypertree for every l' >= l
    l_max, best = {}, None
    for l in range(1, max(by_l, default=0) + 1):
        if l in by_l:
            best = max(best or 0, by_l[l])
        if best is not None:
            bound = str(Fraction(comb(n, k - 1), k - l + 1)) if l <= k else None
            l_max[l] = {"max_m": best, "bound": bound}
    return ConjectureProbe(
        n=n, k=k,
        edge_minimal_count=st.counts["edge_minimal"],
        max_edge_minimal_m=max_min,
        edge_minimal_bound=bound_min,
        edge_minimal_exceeds=None if max_min is None else max_min > bound_min,
        edge_maximal_count=st.counts["edge_maximal"],
        min_edge_maximal_m=min_max,
        half_pairs=half,
        edge_maximal_below_half=None if min_max is None else min_max < half,
        l_hypertree_max_m=l_max,
        notes=tuple(notes),
    )

"""Exhaustive enumeration and counterexample mining at desk scale.

Instances are enumerated in a fixed canonical order: size pairs
(n_dom, n_cod) ascending lexicographically, then domain topology, domain
ideal carrier, codomain topology, codomain carrier, map (value table
lexicographic).  Work is partitioned into topology-pair blocks; each block
reports its least candidate by the canonical key, and the aggregator takes
the overall minimum, so the result is identical for any worker count.

Hypothesis evaluation is staged: map/topology-level hypotheses gate a whole
ideal block before the carrier loops run, which is what makes the full
13-theorem certification at three points a matter of seconds rather than
hours.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import CapExceeded, UnknownHypothesisName
from .ideal import Ideal
from .maps import FiniteMap
from .space import Topology, full_mask
from .star import IdealSpace
from . import theorems as thm

TOPOLOGY_ENUM_CAP = 5  # labeled topologies on 6+ points are out of reach here


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_topologies(n: int) -> Iterator[Topology]:
    """Every topology on ``n`` labeled points, exactly once, ordered by the
    minimal-neighborhood table read as a tuple.

    Tables are grown point by point; a partial table is extended only while
    the transitivity constraints among the assigned rows hold, which prunes
    most of the candidate space.  Counts: 1, 4, 29, 355, 6942 for n = 1..5.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise CapExceeded(f"point count must be a positive integer, got {n!r}")
    if n > TOPOLOGY_ENUM_CAP:
        raise CapExceeded(
            f"topology enumeration capped at {TOPOLOGY_ENUM_CAP} points, got {n}")
    full = full_mask(n)
    rows: list[int] = []

    def consistent(x: int, m: int) -> bool:
        # transitivity against rows already placed
        for y in range(x):
            if (m >> y) & 1 and rows[y] & ~m:
                return False
            if (rows[y] >> x) & 1 and m & ~rows[y]:
                return False
        return True

    def build(x: int) -> Iterator[Topology]:
        if x == n:
            yield Topology(n, tuple(rows))
            return
        bit = 1 << x
        for m in range(full + 1):
            if not m & bit:
                continue
            if consistent(x, m):
                rows.append(m)
                yield from build(x + 1)
                rows.pop()

    yield from build(0)


def enumerate_ideals(n: int) -> Iterator[Ideal]:
    """All 2**n ideals on ``n`` points, ascending by carrier mask."""
    for carrier in range(full_mask(n) + 1):
        yield Ideal(n, carrier)


def enumerate_maps(n_dom: int, n_cod: int) -> Iterator[FiniteMap]:
    """All n_cod**n_dom total maps, lexicographic by value table."""
    total = n_cod ** n_dom
    values = [0] * n_dom
    for k in range(total):
        rest = k
        for i in range(n_dom - 1, -1, -1):
            values[i] = rest % n_cod
            rest //= n_cod
        yield FiniteMap(n_dom, n_cod, tuple(values))


# ---------------------------------------------------------------------------
# bounds and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBounds:
    """Point-count caps for both sides; exhaustive mode supports up to 4."""

    max_n_dom: int = 3
    max_n_cod: int = 3

    def __post_init__(self) -> None:
        for cap in (self.max_n_dom, self.max_n_cod):
            if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
                raise CapExceeded(f"bound must be a positive integer, got {cap!r}")
            if cap > 4:
                raise CapExceeded(f"search bound {cap} exceeds the cap of 4")

    def size_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j)
                     for i in range(1, self.max_n_dom + 1)
                     for j in range(1, self.max_n_cod + 1))


@dataclass(frozen=True)
class Counterexample:
    instance: thm.Instance
    verdict: thm.Verdict

    def to_json(self) -> dict:
        return {"instance": self.instance.to_json(),
                "verdict": self.verdict.to_json()}


@dataclass(frozen=True)
class SearchReport:
    theorem_id: str
    dropped_hypotheses: tuple[str, ...]
    bounds: SearchBounds
    instances_checked: int
    certified: bool
    exhaustive: bool
    counterexample: Optional[Counterexample]
    elapsed_seconds: float
    sampled: bool = False
    seed: Optional[int] = None
    ideal_carriers: Optional[tuple[int, ...]] = None

    def same_result(self, other: "SearchReport") -> bool:
        """Equality up to wall-clock time."""
        keep = lambda r: (r.theorem_id, r.dropped_hypotheses, r.bounds,
                          r.instances_checked, r.certified, r.exhaustive,
                          r.sampled, r.seed, r.ideal_carriers,
                          None if r.counterexample is None
                          else r.counterexample.to_json())
        return keep(self) == keep(other)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "dropped_hypotheses": list(self.dropped_hypotheses),
            "max_n_dom": self.bounds.max_n_dom,
            "max_n_cod": self.bounds.max_n_cod,
            "instances_checked": self.instances_checked,
            "certified": self.certified,
            "exhaustive": self.exhaustive,
            "sampled": self.sampled,
            "seed": self.seed,
            "ideal_carriers": (None if self.ideal_carriers is None
                               else list(self.ideal_carriers)),
            "counterexample": (None if self.counterexample is None
                               else self.counterexample.to_json()),
            "elapsed_seconds": self.elapsed_seconds,
        }


# ---------------------------------------------------------------------------
# per-size workspace, cached per process
# ---------------------------------------------------------------------------

class _Workspace:
    def __init__(self, n_dom: int, n_cod: int) -> None:
        self.tops_x = list(enumerate_topologies(n_dom))
        self.tops_y = (self.tops_x if n_cod == n_dom
                       else list(enumerate_topologies(n_cod)))
        self.sides_x = [[thm._side_tables(t, m)
                         for m in range(full_mask(n_dom) + 1)]
                        for t in self.tops_x]
        self.sides_y = [[thm._side_tables(t, m)
                         for m in range(full_mask(n_cod) + 1)]
                        for t in self.tops_y]
        self.maps = list(enumerate_maps(n_dom, n_cod))
        self.mts = [thm._map_tables(f) for f in self.maps]
        self.profs = [[[thm._profile(f, tx, ty) for f in self.maps]
                       for ty in self.tops_y]
                      for tx in self.tops_x]

    def block_size(self) -> int:
        return (len(self.sides_x[0]) * len(self.sides_y[0]) * len(self.maps))


_WORKSPACES: dict[tuple[int, int], _Workspace] = {}


def _workspace(n_dom: int, n_cod: int) -> _Workspace:
    key = (n_dom, n_cod)
    if key not in _WORKSPACES:
        _WORKSPACES[key] = _Workspace(n_dom, n_cod)
    return _WORKSPACES[key]


# ---------------------------------------------------------------------------
# the scan
# ---------------------------------------------------------------------------

def _scan_block(spec: thm.TheoremSpec, dropped: frozenset[str], mode: str,
                ws: _Workspace, ix: int, iy: int,
                carriers: Optional[tuple[int, ...]]) -> Optional[tuple]:
    """Least (m_x, m_y, f_index) violating candidate in one topology-pair
    block, or None."""
    ctx = thm._Ctx(ws.sides_x[ix][0], ws.sides_y[iy][0], ws.mts[0],
                   ws.profs[ix][iy][0])
    sides_x = ws.sides_x[ix]
    sides_y = ws.sides_y[iy]
    mx_range = (range(len(sides_x)) if carriers is None
                else [c for c in carriers if c < len(sides_x)])
    my_range = (range(len(sides_y)) if carriers is None
                else [c for c in carriers if c < len(sides_y)])
    violated = (thm.conclusions_violated if mode == "verify"
                else thm.designated_false)
    best = None
    for fi, mt in enumerate(ws.mts):
        ctx.mt = mt
        ctx.prof = ws.profs[ix][iy][fi]
        if not thm.hypotheses_pass(spec, ctx, dropped, level=1):
            continue
        for mx in mx_range:
            ctx.sx = sides_x[mx]
            for my in my_range:
                ctx.sy = sides_y[my]
                if not thm.hypotheses_pass(spec, ctx, dropped, level=2):
                    continue
                if violated(spec, ctx):
                    key = (mx, my, fi)
                    if best is None or key < best:
                        best = key
    return best


def _run_row(args) -> list[tuple]:
    """Worker task: scan all blocks of one domain-topology row.

    Returns [(iy, best_or_None), ...].  Workspaces are built lazily per
    process, so the function is safe under any multiprocessing start method.
    """
    theorem_id, dropped, mode, n_dom, n_cod, ix, carriers = args
    spec = thm.spec_for(theorem_id)
    ws = _workspace(n_dom, n_cod)
    out = []
    for iy in range(len(ws.tops_y)):
        out.append((iy, _scan_block(spec, dropped, mode, ws, ix, iy, carriers)))
    return out


def _instance_from_key(ws: _Workspace, ix: int, mx: int, iy: int, my: int,
                       fi: int) -> thm.Instance:
    return thm.Instance(
        IdealSpace(ws.tops_x[ix], Ideal(ws.tops_x[ix].n, mx)),
        IdealSpace(ws.tops_y[iy], Ideal(ws.tops_y[iy].n, my)),
        ws.maps[fi])


ProgressFn = Callable[[str, int, int], None]  # block id, instances, ces so far


def _search(theorem_id: str, dropped: frozenset[str], mode: str,
            bounds: SearchBounds, workers: Optional[int],
            progress: Optional[ProgressFn],
            carriers: Optional[tuple[int, ...]]) -> tuple[int, Optional[tuple], int]:
    """Scan everything within bounds.  Returns (instances_checked, best
    global key or None, counterexample count is folded into progress)."""
    spec = thm.spec_for(theorem_id)
    unknown = dropped - set(spec.hypothesis_names)
    if unknown:
        raise UnknownHypothesisName(
            f"{sorted(unknown)} not among hypotheses of {spec.theorem_id}: "
            f"{list(spec.hypothesis_names)}")
    if workers is None:
        workers = 1
    instances = 0
    best: Optional[tuple] = None
    ces_so_far = 0

    for size_idx, (n_dom, n_cod) in enumerate(bounds.size_pairs()):
        ws = _workspace(n_dom, n_cod)
        if carriers is None:
            block = ws.block_size()
        else:
            cx = len([c for c in carriers if c < len(ws.sides_x[0])])
            cy = len([c for c in carriers if c < len(ws.sides_y[0])])
            block = cx * cy * len(ws.maps)
        tasks = [(theorem_id, dropped, mode, n_dom, n_cod, ix, carriers)
                 for ix in range(len(ws.tops_x))]
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(_run_row, tasks))
        else:
            rows = [_run_row(t) for t in tasks]
        for ix, row in enumerate(rows):
            for iy, local in row:
                instances += block
                if local is not None:
                    mx, my, fi = local
                    key = (size_idx, ix, mx, iy, my, fi)
                    ces_so_far += 1
                    if best is None or key < best:
                        best = key
                if progress is not None:
                    progress(f"n=({n_dom},{n_cod}) block=({ix},{iy})",
                             instances, ces_so_far)
    return instances, best, ces_so_far


def _finish(theorem_id: str, dropped: tuple[str, ...], bounds: SearchBounds,
            instances: int, best: Optional[tuple], elapsed: float,
            exhaustive: bool, sampled: bool = False,
            seed: Optional[int] = None,
            carriers: Optional[tuple[int, ...]] = None) -> SearchReport:
    ce = None
    if best is not None:
        size_idx, ix, mx, iy, my, fi = best
        n_dom, n_cod = bounds.size_pairs()[size_idx]
        ws = _workspace(n_dom, n_cod)
        inst = _instance_from_key(ws, ix, mx, iy, my, fi)
        ce = Counterexample(inst, thm.check(theorem_id, inst))
    return SearchReport(
        theorem_id=thm.spec_for(theorem_id).theorem_id,
        dropped_hypotheses=dropped,
        bounds=bounds,
        instances_checked=instances,
        certified=(ce is None and exhaustive),
        exhaustive=exhaustive,
        counterexample=ce,
        elapsed_seconds=elapsed,
        sampled=sampled,
        seed=seed,
        ideal_carriers=carriers,
    )


def default_workers() -> int:
    env = os.environ.get("IDEALTOP_WORKERS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def verify_exhaustive(theorem_id: str, bounds: SearchBounds = SearchBounds(),
                      *, workers: Optional[int] = None,
                      progress: Optional[ProgressFn] = None,
                      carriers: Optional[tuple[int, ...]] = None) -> SearchReport:
    """Scan every instance within bounds for hypotheses-true /
    some-conclusion-false violations.

    Certifies (no counterexample) or reports the canonically least violator.
    Restricting ``carriers`` makes the run non-certifying and is labeled so
    in the report.
    """
    start = time.perf_counter()
    instances, best, _ = _search(theorem_id, frozenset(), "verify", bounds,
                                 workers, progress, carriers)
    return _finish(theorem_id, (), bounds, instances, best,
                   time.perf_counter() - start,
                   exhaustive=(carriers is None), carriers=carriers)


def find_counterexample(theorem_id: str, dropped_hypotheses=(),
                        bounds: SearchBounds = SearchBounds(),
                        *, workers: Optional[int] = None,
                        progress: Optional[ProgressFn] = None,
                        carriers: Optional[tuple[int, ...]] = None) -> SearchReport:
    """Search for an instance satisfying every non-dropped hypothesis while
    the theorem's designated conclusion fails."""
    dropped = tuple(dict.fromkeys(dropped_hypotheses))
    start = time.perf_counter()
    instances, best, _ = _search(theorem_id, frozenset(dropped), "find",
                                 bounds, workers, progress, carriers)
    return _finish(theorem_id, dropped, bounds, instances, best,
                   time.perf_counter() - start,
                   exhaustive=(carriers is None), carriers=carriers)


def sample_search(theorem_id: str, dropped_hypotheses=(), *,
                  bounds: SearchBounds = SearchBounds(4, 4),
                  sample: int, seed: int,
                  mode: str = "find") -> SearchReport:
    """Deterministic seeded sampling for bounds too large to exhaust.

    Never certifies; the report is labeled sampled.
    """
    spec = thm.spec_for(theorem_id)
    dropped = tuple(dict.fromkeys(dropped_hypotheses))
    unknown = set(dropped) - set(spec.hypothesis_names)
    if unknown:
        raise UnknownHypothesisName(
            f"{sorted(unknown)} not among hypotheses of {spec.theorem_id}: "
            f"{list(spec.hypothesis_names)}")
    rng = random.Random(seed)
    start = time.perf_counter()
    pairs = bounds.size_pairs()
    dropped_set = frozenset(dropped)
    violated = (thm.conclusions_violated if mode == "verify"
                else thm.designated_false)
    found: Optional[thm.Instance] = None
    visited = 0
    for _ in range(sample):
        visited += 1
        n_dom, n_cod = pairs[rng.randrange(len(pairs))]
        ws = _workspace(n_dom, n_cod)
        ix = rng.randrange(len(ws.tops_x))
        iy = rng.randrange(len(ws.tops_y))
        mx = rng.randrange(len(ws.sides_x[0]))
        my = rng.randrange(len(ws.sides_y[0]))
        fi = rng.randrange(len(ws.maps))
        ctx = thm._Ctx(ws.sides_x[ix][mx], ws.sides_y[iy][my], ws.mts[fi],
                       ws.profs[ix][iy][fi])
        if (thm.hypotheses_pass(spec, ctx, dropped_set, 1)
                and thm.hypotheses_pass(spec, ctx, dropped_set, 2)
                and violated(spec, ctx)):
            found = _instance_from_key(ws, ix, mx, iy, my, fi)
            break
    ce = None if found is None else Counterexample(
        found, thm.check(theorem_id, found))
    return SearchReport(
        theorem_id=spec.theorem_id,
        dropped_hypotheses=dropped,
        bounds=bounds,
        instances_checked=visited,
        certified=False,
        exhaustive=False,
        counterexample=ce,
        elapsed_seconds=time.perf_counter() - start,
        sampled=True,
        seed=seed,
    )

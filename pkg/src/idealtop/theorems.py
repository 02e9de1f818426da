"""Checkers for the preservation theorems and the counterexample constructions.

Every checker consumes an :class:`Instance` (domain ideal space, codomain
ideal space, total map) and produces a :class:`Verdict`: named hypothesis
booleans, named conclusion booleans, a vacuity flag, and a witness when some
conclusion fails.  Conclusions are always evaluated, even under failed
hypotheses, because the counterexample search needs conclusion truth under
weakened hypotheses.

Registry of checkers (hypotheses => conclusions; * is the local function,
psi its open dual, star the induced finer topology):

  TC1        continuous + small preimages      => f[A*] <= (f[A])*  (a),
                                                  (f^-1 B)* <= f^-1[B*]  (b), a<=>b
  TC2        same                              => star closures transport (a, b),
                                                  f star-to-star continuous (c), equiv
  CONTPSI    continuous bijection + small pre  => psi(f[A]) <= f[psi(A)] (a), dual (b)
  TO1        open + small images               => f[psi(A)] <= psi(f[A]) (a), dual (b)
  OPEN_STAR  open + small images               => f star-to-star open
  OPENBIJ    open bijection + small images     => (f[A])* <= f[A*] (a), dual (b)
  CLOSEDSUR  closed injection + small images   => (f[A])* <= f[A*] (a); the
                                                  dual is informational only,
                                                  it needs surjectivity
  HOMEO_COR  homeomorphism + smallness equiv   => star homeomorphism (a),
                                                  *-exchange (b, c), psi-exchange (d, e),
                                                  all equivalent
  HOMEO_HR   bijection + exact image ideal     => star homeomorphism (a),
                                                  *-exchange (b), psi-exchange (c)
                                                  are pairwise equivalent
  SAMUELS    X = X* + regular codomain         => base continuity iff star continuity
  JHCOMP     bijection, smallness-compact domain, Hausdorff codomain,
             exact image ideal, star-to-base continuous
                                                => star-to-star homeomorphism
  HR34       continuous into psi-topology, bijective, compatible codomain,
             small preimages                   => psi(f[A]) <= f[psi(A)]
  HR35       open from psi-topology, bijective, compatible domain,
             small images                      => f[psi(A)] <= psi(f[A])
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import (BadPoint, CapExceeded, DimensionMismatch, UnknownTheorem)
from .ideal import Ideal
from .maps import FiniteMap, MapProfile, classify, image_table, preimage_table
from .space import (MAX_POINTS, Topology, full_mask, points_of,
                    separation_profile)
from .star import IdealSpace, is_compatible, is_ideal_compact
from . import jsonio
from . import ideal as ideal_mod
from . import maps as maps_mod
from . import space as space_mod


# ---------------------------------------------------------------------------
# instances and verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    """One unit of theorem checking: two ideal spaces and a map between them."""

    X: IdealSpace
    Y: IdealSpace
    f: FiniteMap

    def __post_init__(self) -> None:
        if self.f.n_dom != self.X.n or self.f.n_cod != self.Y.n:
            raise DimensionMismatch(
                f"map is {self.f.n_dom}->{self.f.n_cod} but spaces have "
                f"{self.X.n} and {self.Y.n} points")

    def to_json(self) -> dict:
        return {
            "X": {"topology": space_mod.topology_to_json(self.X.top),
                  "ideal": ideal_mod.ideal_to_json(self.X.ideal)},
            "Y": {"topology": space_mod.topology_to_json(self.Y.top),
                  "ideal": ideal_mod.ideal_to_json(self.Y.ideal)},
            "f": maps_mod.map_to_json(self.f),
        }

    @staticmethod
    def from_json(doc: object) -> "Instance":
        return jsonio.parse_instance(doc)


@dataclass(frozen=True)
class Witness:
    """What broke a conclusion: a subset (as points of the domain or codomain
    ground set) or a single point."""

    conclusion: str
    side: str            # "domain" | "codomain"
    kind: str            # "subset" | "point"
    mask: Optional[int] = None
    point: Optional[int] = None

    def to_json(self) -> dict:
        out = {"conclusion": self.conclusion, "side": self.side}
        if self.kind == "subset":
            out["subset"] = list(points_of(self.mask))
        else:
            out["point"] = self.point
        return out


@dataclass(frozen=True)
class Verdict:
    theorem_id: str
    hypotheses: tuple[tuple[str, bool], ...]
    conclusions: tuple[tuple[str, bool], ...]
    vacuous: bool
    witness: Optional[Witness]
    info: tuple[tuple[str, bool], ...] = ()

    def hypothesis(self, name: str) -> bool:
        return dict(self.hypotheses)[name]

    def conclusion(self, name: str) -> bool:
        return dict(self.conclusions)[name]

    @property
    def all_hypotheses(self) -> bool:
        return all(v for _, v in self.hypotheses)

    @property
    def all_conclusions(self) -> bool:
        return all(v for _, v in self.conclusions)

    @property
    def violates(self) -> bool:
        """Hypotheses all hold yet some conclusion fails."""
        return self.all_hypotheses and not self.all_conclusions

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "hypotheses": dict(self.hypotheses),
            "conclusions": dict(self.conclusions),
            "vacuous": self.vacuous,
            "witness": self.witness.to_json() if self.witness else None,
            "info": dict(self.info),
        }


# ---------------------------------------------------------------------------
# precomputed tables (shared with the search engine)
# ---------------------------------------------------------------------------

class _TopT:
    """Per-topology tables: closure of every subset, open family as list and
    as a membership bitmap over subset indices, separation flags."""

    __slots__ = ("top", "n", "full", "min_nbhd", "cl", "opens", "opens_bm",
                 "closeds", "regular", "hausdorff")

    def __init__(self, top: Topology) -> None:
        self.top = top
        self.n = top.n
        self.full = top.full
        self.min_nbhd = top.min_nbhd
        self.cl = tuple(top.closure(a) for a in range(self.full + 1))
        self.opens = top.opens()
        bm = 0
        for o in self.opens:
            bm |= 1 << o
        self.opens_bm = bm
        self.closeds = top.closed_sets()
        prof = separation_profile(top)
        self.regular = prof.regular
        self.hausdorff = prof.hausdorff


class _Side:
    """Per-(topology, carrier) tables: local function and psi of every
    subset, the star and psi topologies, compatibility, and the flag for
    the whole space being its own local function."""

    __slots__ = ("tt", "n", "full", "carrier", "star", "psi",
                 "star_opens", "star_opens_bm", "psi_opens", "psi_opens_bm",
                 "compatible", "star_full", "ideal_compact", "space")

    def __init__(self, tt: _TopT, carrier: int) -> None:
        self.tt = tt
        self.n = tt.n
        self.full = tt.full
        self.carrier = carrier
        cl = tt.cl
        not_m = self.full & ~carrier
        self.star = tuple(cl[a & not_m] for a in range(self.full + 1))
        full = self.full
        star = self.star
        self.psi = tuple(full ^ star[full ^ a] for a in range(full + 1))
        # U open in the star topology iff its complement absorbs its own
        # local function
        star_opens = tuple(u for u in range(full + 1)
                           if not star[full ^ u] & ~(full ^ u))
        self.star_opens = star_opens
        bm = 0
        for o in star_opens:
            bm |= 1 << o
        self.star_opens_bm = bm
        psi_top = space_mod.generate_topology(
            self.n, {self.psi[u] for u in tt.opens})
        self.psi_opens = psi_top.opens()
        bm = 0
        for o in self.psi_opens:
            bm |= 1 << o
        self.psi_opens_bm = bm
        self.space = IdealSpace(tt.top, Ideal(self.n, carrier))
        self.compatible = is_compatible(self.space)
        self.star_full = star[full] == full
        self.ideal_compact = is_ideal_compact(self.space)


class _MapT:
    """Per-map tables: image and preimage of every subset, and the two
    cardinality flags."""

    __slots__ = ("f", "img", "pre", "injective", "surjective")

    def __init__(self, f: FiniteMap) -> None:
        self.f = f
        self.img = image_table(f)
        self.pre = preimage_table(f)
        self.injective = f.injective
        self.surjective = f.surjective


class _Ctx:
    """Everything a checker reads: domain side, codomain side, map tables,
    and the map's classification between the two base topologies."""

    __slots__ = ("sx", "sy", "mt", "prof")

    def __init__(self, sx: _Side, sy: _Side, mt: _MapT, prof: MapProfile) -> None:
        self.sx = sx
        self.sy = sy
        self.mt = mt
        self.prof = prof


@lru_cache(maxsize=None)
def _top_tables(top: Topology) -> _TopT:
    return _TopT(top)


@lru_cache(maxsize=None)
def _side_tables(top: Topology, carrier: int) -> _Side:
    return _Side(_top_tables(top), carrier)


@lru_cache(maxsize=None)
def _map_tables(f: FiniteMap) -> _MapT:
    return _MapT(f)


@lru_cache(maxsize=None)
def _profile(f: FiniteMap, t_dom: Topology, t_cod: Topology) -> MapProfile:
    return classify(f, t_dom, t_cod)


def _ctx_for(inst: Instance) -> _Ctx:
    sx = _side_tables(inst.X.top, inst.X.ideal.carrier)
    sy = _side_tables(inst.Y.top, inst.Y.ideal.carrier)
    mt = _map_tables(inst.f)
    prof = _profile(inst.f, inst.X.top, inst.Y.top)
    return _Ctx(sx, sy, mt, prof)


# ---------------------------------------------------------------------------
# hypothesis predicates
#
# level 1 predicates read only the topologies and the map; level 2 also read
# the carriers.  The search engine gates whole ideal blocks on level 1.
# ---------------------------------------------------------------------------

def _h_continuous(ctx): return ctx.prof.continuous
def _h_open(ctx): return ctx.prof.open_map
def _h_closed(ctx): return ctx.prof.closed_map
def _h_injective(ctx): return ctx.mt.injective
def _h_surjective(ctx): return ctx.mt.surjective


def _h_homeomorphism(ctx):
    p = ctx.prof
    return p.continuous and p.open_map and ctx.mt.injective and ctx.mt.surjective


def _h_codomain_regular(ctx): return ctx.sy.tt.regular
def _h_codomain_hausdorff(ctx): return ctx.sy.tt.hausdorff


def _h_preimage_ok(ctx):
    return not ctx.mt.pre[ctx.sy.carrier] & ~ctx.sx.carrier


def _h_image_ok(ctx):
    return not ctx.mt.img[ctx.sx.carrier] & ~ctx.sy.carrier


def _h_equivalence_ok(ctx):
    return _h_preimage_ok(ctx) and _h_image_ok(ctx)


def _h_image_ideal_equal(ctx):
    return ctx.mt.img[ctx.sx.carrier] == ctx.sy.carrier


def _h_domain_star_full(ctx): return ctx.sx.star_full
def _h_domain_compatible(ctx): return ctx.sx.compatible
def _h_codomain_compatible(ctx): return ctx.sy.compatible
def _h_ideal_compact(ctx): return ctx.sx.ideal_compact


def _star_to_base_continuous(ctx):
    # opens of the codomain base topology pull back into the domain star topology
    bm = ctx.sx.star_opens_bm
    pre = ctx.mt.pre
    return all((bm >> pre[o]) & 1 for o in ctx.sy.tt.opens)


def _h_psi_codomain_continuous(ctx):
    # continuity into the topology generated by codomain psi-images of opens
    bm = ctx.sx.tt.opens_bm
    pre = ctx.mt.pre
    return all((bm >> pre[o]) & 1 for o in ctx.sy.psi_opens)


def _h_psi_domain_open(ctx):
    # openness out of the topology generated by domain psi-images of opens
    bm = ctx.sy.tt.opens_bm
    img = ctx.mt.img
    return all((bm >> img[u]) & 1 for u in ctx.sx.psi_opens)


# ---------------------------------------------------------------------------
# conclusion predicates: each returns the least offending subset, or None
# ---------------------------------------------------------------------------

def _forall_domain(pred):
    def fail(ctx):
        for a in range(ctx.sx.full + 1):
            if not pred(ctx, a):
                return Witness("", "domain", "subset", mask=a)
        return None
    return fail


def _forall_codomain(pred):
    def fail(ctx):
        for b in range(ctx.sy.full + 1):
            if not pred(ctx, b):
                return Witness("", "codomain", "subset", mask=b)
        return None
    return fail


# local-function transport
_tc1_a = _forall_domain(
    lambda c, a: not c.mt.img[c.sx.star[a]] & ~c.sy.star[c.mt.img[a]])
_tc1_b = _forall_codomain(
    lambda c, b: not c.sx.star[c.mt.pre[b]] & ~c.mt.pre[c.sy.star[b]])

# star-closure transport
_tc2_a = _forall_domain(
    lambda c, a: not c.mt.img[a | c.sx.star[a]]
    & ~(c.mt.img[a] | c.sy.star[c.mt.img[a]]))
_tc2_b = _forall_codomain(
    lambda c, b: not (c.mt.pre[b] | c.sx.star[c.mt.pre[b]])
    & ~c.mt.pre[b | c.sy.star[b]])


def _tc2_c(ctx):
    # star-to-star continuity; witness is the least unpulled star-open set
    bm = ctx.sx.star_opens_bm
    pre = ctx.mt.pre
    for o in ctx.sy.star_opens:
        if not (bm >> pre[o]) & 1:
            return Witness("", "codomain", "subset", mask=o)
    return None


# psi transport
_contpsi_a = _forall_domain(
    lambda c, a: not c.sy.psi[c.mt.img[a]] & ~c.mt.img[c.sx.psi[a]])
_contpsi_b = _forall_codomain(
    lambda c, b: not c.mt.pre[c.sy.psi[b]] & ~c.sx.psi[c.mt.pre[b]])
_to1_a = _forall_domain(
    lambda c, a: not c.mt.img[c.sx.psi[a]] & ~c.sy.psi[c.mt.img[a]])
_to1_b = _forall_codomain(
    lambda c, b: not c.sx.psi[c.mt.pre[b]] & ~c.mt.pre[c.sy.psi[b]])


def _open_star(ctx):
    # star-to-star openness; witness is the least unpushed star-open set
    bm = ctx.sy.star_opens_bm
    img = ctx.mt.img
    for u in ctx.sx.star_opens:
        if not (bm >> img[u]) & 1:
            return Witness("", "domain", "subset", mask=u)
    return None


# reverse local-function transport
_openbij_a = _forall_domain(
    lambda c, a: not c.sy.star[c.mt.img[a]] & ~c.mt.img[c.sx.star[a]])
_openbij_b = _forall_codomain(
    lambda c, b: not c.mt.pre[c.sy.star[b]] & ~c.sx.star[c.mt.pre[b]])

# exact exchanges
_exact_star_img = _forall_domain(
    lambda c, a: c.mt.img[c.sx.star[a]] == c.sy.star[c.mt.img[a]])
_exact_star_pre = _forall_codomain(
    lambda c, b: c.mt.pre[c.sy.star[b]] == c.sx.star[c.mt.pre[b]])
_exact_psi_img = _forall_domain(
    lambda c, a: c.sy.psi[c.mt.img[a]] == c.mt.img[c.sx.psi[a]])
_exact_psi_pre = _forall_codomain(
    lambda c, b: c.mt.pre[c.sy.psi[b]] == c.sx.psi[c.mt.pre[b]])


def _star_homeo(ctx):
    """Homeomorphism between the two star topologies; witness is a point
    breaking bijectivity or the least open set breaking continuity or
    openness."""
    if not (ctx.mt.injective and ctx.mt.surjective):
        for y in range(ctx.sy.n):
            if ctx.mt.pre[1 << y].bit_count() != 1:
                return Witness("", "codomain", "point", point=y)
    pre_bm = ctx.sx.star_opens_bm
    for o in ctx.sy.star_opens:
        if not (pre_bm >> ctx.mt.pre[o]) & 1:
            return Witness("", "codomain", "subset", mask=o)
    img_bm = ctx.sy.star_opens_bm
    for u in ctx.sx.star_opens:
        if not (img_bm >> ctx.mt.img[u]) & 1:
            return Witness("", "domain", "subset", mask=u)
    return None


def _samuels_iff(ctx):
    """Base continuity iff star-to-base continuity; the witness is the least
    codomain open set whose preimage misses the failing side."""
    base = ctx.prof.continuous
    star = _star_to_base_continuous(ctx)
    if base == star:
        return None
    bad_bm = ctx.sx.tt.opens_bm if not base else ctx.sx.star_opens_bm
    for o in ctx.sy.tt.opens:
        if not (bad_bm >> ctx.mt.pre[o]) & 1:
            return Witness("", "codomain", "subset", mask=o)
    return Witness("", "codomain", "subset", mask=0)  # unreachable


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypSpec:
    name: str
    level: int  # 1: topologies+map only; 2: needs the carriers
    fn: Callable[[_Ctx], bool]


@dataclass(frozen=True)
class ConclSpec:
    name: str
    fail: Optional[Callable[[_Ctx], Optional[Witness]]] = None
    members: tuple[str, ...] = ()  # equivalence flag over earlier conclusions
    report: bool = True            # False: evaluated but informational only


@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    hyps: tuple[HypSpec, ...]
    concls: tuple[ConclSpec, ...]
    designated: str  # conclusion mined by the counterexample search

    @property
    def hypothesis_names(self) -> tuple[str, ...]:
        return tuple(h.name for h in self.hyps)


_SPECS = (
    TheoremSpec(
        "TC1",
        (HypSpec("continuous", 1, _h_continuous),
         HypSpec("preimage_ok", 2, _h_preimage_ok)),
        (ConclSpec("a", _tc1_a),
         ConclSpec("b", _tc1_b),
         ConclSpec("equiv_ab", members=("a", "b"))),
        designated="a"),
    TheoremSpec(
        "TC2",
        (HypSpec("continuous", 1, _h_continuous),
         HypSpec("preimage_ok", 2, _h_preimage_ok)),
        (ConclSpec("a", _tc2_a),
         ConclSpec("b", _tc2_b),
         ConclSpec("c", _tc2_c),
         ConclSpec("equiv_abc", members=("a", "b", "c"))),
        designated="a"),
    TheoremSpec(
        "CONTPSI",
        (HypSpec("continuous", 1, _h_continuous),
         HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("preimage_ok", 2, _h_preimage_ok)),
        (ConclSpec("a", _contpsi_a),
         ConclSpec("b", _contpsi_b),
         ConclSpec("equiv_ab", members=("a", "b"))),
        designated="a"),
    TheoremSpec(
        "TO1",
        (HypSpec("open_map", 1, _h_open),
         HypSpec("image_ok", 2, _h_image_ok)),
        (ConclSpec("a", _to1_a),
         ConclSpec("b", _to1_b),
         ConclSpec("equiv_ab", members=("a", "b"))),
        designated="a"),
    TheoremSpec(
        "OPEN_STAR",
        (HypSpec("open_map", 1, _h_open),
         HypSpec("image_ok", 2, _h_image_ok)),
        (ConclSpec("star_open", _open_star),),
        designated="star_open"),
    TheoremSpec(
        "OPENBIJ",
        (HypSpec("open_map", 1, _h_open),
         HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("image_ok", 2, _h_image_ok)),
        (ConclSpec("a", _openbij_a),
         ConclSpec("b", _openbij_b),
         ConclSpec("equiv_ab", members=("a", "b"))),
        designated="a"),
    # For a closed injection only the forward containment is a theorem: its
    # proof restricts to the image, and the pullback dual genuinely needs
    # surjectivity (counterexample: a point mapped to the closed point of a
    # two-point space with trivial ideals fails the dual).  The dual is
    # still evaluated and reported informationally.
    TheoremSpec(
        "CLOSEDSUR",
        (HypSpec("closed_map", 1, _h_closed),
         HypSpec("injective", 1, _h_injective),
         HypSpec("image_ok", 2, _h_image_ok)),
        (ConclSpec("a", _openbij_a),
         ConclSpec("b", _openbij_b, report=False)),
        designated="a"),
    TheoremSpec(
        "HOMEO_COR",
        (HypSpec("homeomorphism", 1, _h_homeomorphism),
         HypSpec("equivalence_ok", 2, _h_equivalence_ok)),
        (ConclSpec("a", _star_homeo),
         ConclSpec("b", _exact_star_img),
         ConclSpec("c", _exact_star_pre),
         ConclSpec("d", _exact_psi_img),
         ConclSpec("e", _exact_psi_pre),
         ConclSpec("all_equiv", members=("a", "b", "c", "d", "e"))),
        designated="a"),
    TheoremSpec(
        "HOMEO_HR",
        (HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("image_ideal_equal", 2, _h_image_ideal_equal)),
        (ConclSpec("a", _star_homeo, report=False),
         ConclSpec("b", _exact_star_img, report=False),
         ConclSpec("c", _exact_psi_img, report=False),
         ConclSpec("a_iff_b", members=("a", "b")),
         ConclSpec("b_iff_c", members=("b", "c")),
         ConclSpec("a_iff_c", members=("a", "c"))),
        designated="a_iff_b"),
    TheoremSpec(
        "SAMUELS",
        (HypSpec("domain_star_full", 2, _h_domain_star_full),
         HypSpec("codomain_regular", 1, _h_codomain_regular)),
        (ConclSpec("cont_iff", _samuels_iff),),
        designated="cont_iff"),
    TheoremSpec(
        "JHCOMP",
        (HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("ideal_compact", 2, _h_ideal_compact),
         HypSpec("codomain_hausdorff", 1, _h_codomain_hausdorff),
         HypSpec("image_ideal_equal", 2, _h_image_ideal_equal),
         HypSpec("star_to_base_continuous", 2, _star_to_base_continuous)),
        (ConclSpec("star_homeomorphism", _star_homeo),),
        designated="star_homeomorphism"),
    # Like its open dual below, this one needs a bijection: without
    # surjectivity the psi of the empty set (the small-open part of the
    # codomain) can escape the image entirely and the conclusion fails.
    TheoremSpec(
        "HR34",
        (HypSpec("psi_codomain_continuous", 2, _h_psi_codomain_continuous),
         HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("codomain_compatible", 2, _h_codomain_compatible),
         HypSpec("preimage_ok", 2, _h_preimage_ok)),
        (ConclSpec("a", _contpsi_a),),
        designated="a"),
    TheoremSpec(
        "HR35",
        (HypSpec("psi_domain_open", 2, _h_psi_domain_open),
         HypSpec("injective", 1, _h_injective),
         HypSpec("surjective", 1, _h_surjective),
         HypSpec("domain_compatible", 2, _h_domain_compatible),
         HypSpec("image_ok", 2, _h_image_ok)),
        (ConclSpec("a", _to1_a),),
        designated="a"),
)

THEOREMS: dict[str, TheoremSpec] = {s.theorem_id: s for s in _SPECS}
ALL_THEOREM_IDS: tuple[str, ...] = tuple(s.theorem_id for s in _SPECS)

# informational flags reported alongside (never counted as conclusions)
_INFO_FNS: dict[str, tuple[tuple[str, Callable[[_Ctx], bool]], ...]] = {
    "SAMUELS": (("continuous_base", _h_continuous),
                ("continuous_star", _star_to_base_continuous)),
}


def spec_for(theorem_id: str) -> TheoremSpec:
    try:
        return THEOREMS[theorem_id.upper()]
    except KeyError:
        raise UnknownTheorem(
            f"unknown theorem {theorem_id!r}; known: {', '.join(ALL_THEOREM_IDS)}")


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _concl_results(spec: TheoremSpec, ctx: _Ctx):
    flags: dict[str, bool] = {}
    fails: dict[str, Optional[Witness]] = {}
    for c in spec.concls:
        if c.members:
            ok = len({flags[m] for m in c.members}) == 1
            flags[c.name] = ok
            fails[c.name] = None if ok else next(
                fails[m] for m in c.members if not flags[m])
        else:
            w = c.fail(ctx)
            flags[c.name] = w is None
            fails[c.name] = w
    return flags, fails


def _select_witness(spec: TheoremSpec, flags, fails) -> Optional[Witness]:
    """Deterministic tie-break: domain-side subsets first, then codomain
    subsets, then point witnesses; least mask/point wins, then declaration
    order."""
    candidates = []
    for idx, c in enumerate(spec.concls):
        if not c.report or flags[c.name]:
            continue
        w = fails[c.name]
        side_rank = 0 if w.side == "domain" else 1
        kind_rank = 0 if w.kind == "subset" else 1
        value = w.mask if w.kind == "subset" else w.point
        candidates.append(((kind_rank, side_rank, value, idx),
                           dataclasses.replace(w, conclusion=c.name)))
    if not candidates:
        return None
    return min(candidates, key=lambda kv: kv[0])[1]


def check(theorem_id: str, inst: Instance) -> Verdict:
    """Evaluate one theorem on one instance."""
    spec = spec_for(theorem_id)
    ctx = _ctx_for(inst)
    return check_with_ctx(spec, ctx)


def check_with_ctx(spec: TheoremSpec, ctx: _Ctx) -> Verdict:
    hyp_flags = tuple((h.name, h.fn(ctx)) for h in spec.hyps)
    flags, fails = _concl_results(spec, ctx)
    conclusions = tuple((c.name, flags[c.name]) for c in spec.concls if c.report)
    info = tuple((c.name, flags[c.name]) for c in spec.concls if not c.report)
    info += tuple((name, fn(ctx)) for name, fn in _INFO_FNS.get(spec.theorem_id, ()))
    witness = _select_witness(spec, flags, fails)
    return Verdict(
        theorem_id=spec.theorem_id,
        hypotheses=hyp_flags,
        conclusions=conclusions,
        vacuous=not all(v for _, v in hyp_flags),
        witness=witness,
        info=info,
    )


# fast paths for the search engine ------------------------------------------

def hypotheses_pass(spec: TheoremSpec, ctx: _Ctx, dropped: frozenset[str],
                    level: int) -> bool:
    return all(h.fn(ctx) for h in spec.hyps
               if h.level == level and h.name not in dropped)


def conclusions_violated(spec: TheoremSpec, ctx: _Ctx) -> bool:
    flags: dict[str, bool] = {}
    for c in spec.concls:
        if c.members:
            ok = len({flags[m] for m in c.members}) == 1
        else:
            ok = c.fail(ctx) is None
        flags[c.name] = ok
        if c.report and not ok:
            return True
    return False


def designated_false(spec: TheoremSpec, ctx: _Ctx) -> bool:
    target = next(c for c in spec.concls if c.name == spec.designated)
    if not target.members:
        return target.fail(ctx) is not None
    # members of derived conclusions are plain quantified conclusions
    by_name = {c.name: c for c in spec.concls}
    values = {by_name[m].fail(ctx) is None for m in target.members}
    return len(values) != 1


# ---------------------------------------------------------------------------
# the counterexample constructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Extension:
    """A seed space extended by one fresh point."""

    space: IdealSpace
    new_point: int


@dataclass(frozen=True)
class Collapse:
    """A seed space extended by a twin of ``collapsed_point``; the canonical
    map sends both twin and original to the original, and the codomain ideal
    carrier drops that point."""

    space: IdealSpace
    new_point: int
    collapsed_point: int
    codomain_carrier: int


def ctor_add_open_point(seed: IdealSpace) -> Extension:
    """Adjoin a fresh point that belongs to every nonempty open set.

    Opens of the result: every seed open with the new point added, plus the
    empty set.  The new point is small (it joins the ideal carrier), so it
    never lands in any local function.
    """
    n = seed.n
    if n + 1 > MAX_POINTS:
        raise CapExceeded(f"cannot extend a {n}-point space beyond {MAX_POINTS}")
    z = n
    zbit = 1 << z
    min_nbhd = tuple(m | zbit for m in seed.top.min_nbhd) + (zbit,)
    top = Topology(n + 1, min_nbhd)
    idl = Ideal(n + 1, seed.ideal.carrier | zbit)
    return Extension(IdealSpace(top, idl), z)


def ctor_add_generic_point(seed: IdealSpace) -> Extension:
    """Adjoin a fresh point whose only neighborhood is the whole space.

    Opens of the result: the seed opens plus the new whole space.  The
    carrier is unchanged, so the new point is not small and lands in the
    local function of every non-small set.
    """
    n = seed.n
    if n + 1 > MAX_POINTS:
        raise CapExceeded(f"cannot extend a {n}-point space beyond {MAX_POINTS}")
    z = n
    full = full_mask(n + 1)
    min_nbhd = tuple(seed.top.min_nbhd) + (full,)
    top = Topology(n + 1, min_nbhd)
    idl = Ideal(n + 1, seed.ideal.carrier)
    return Extension(IdealSpace(top, idl), z)


VARIANT_CONT = "CONT"
VARIANT_OPEN = "OPEN"


def ctor_collapse_point(seed: IdealSpace, x0: int, variant: str) -> Collapse:
    """Adjoin a twin of ``x0`` so the collapse map stops being injective.

    CONT variant: opens avoiding ``x0`` survive; opens containing ``x0``
    gain the twin (the collapse map stays continuous).  OPEN variant: opens
    avoiding ``x0`` survive and only the whole space contains ``x0`` and the
    twin (the collapse map stays open).  In both, the domain carrier drops
    ``x0`` and the returned codomain carrier drops it as well.
    """
    n = seed.n
    if n + 1 > MAX_POINTS:
        raise CapExceeded(f"cannot extend a {n}-point space beyond {MAX_POINTS}")
    if not 0 <= x0 < n:
        raise BadPoint(f"point {x0} outside ground set 0..{n - 1}")
    if variant not in (VARIANT_CONT, VARIANT_OPEN):
        raise ValueError(f"variant must be {VARIANT_CONT!r} or {VARIANT_OPEN!r}")
    z = n
    zbit = 1 << z
    full = full_mask(n + 1)
    x0bit = 1 << x0
    min_nbhd = []
    for x in range(n):
        m = seed.top.min_nbhd[x]
        if m & x0bit:
            min_nbhd.append((m | zbit) if variant == VARIANT_CONT else full)
        else:
            min_nbhd.append(m)
    min_nbhd.append((seed.top.min_nbhd[x0] | zbit)
                    if variant == VARIANT_CONT else full)
    top = Topology(n + 1, tuple(min_nbhd))
    carrier = seed.ideal.carrier & ~x0bit
    idl = Ideal(n + 1, carrier)
    return Collapse(IdealSpace(top, idl), z, x0, seed.ideal.carrier & ~x0bit)


# canonical demo instances over a seed --------------------------------------

def add_open_point_instance(seed: IdealSpace) -> Instance:
    """Seed mapped identically into its open-point extension."""
    ext = ctor_add_open_point(seed)
    f = FiniteMap(seed.n, seed.n + 1, tuple(range(seed.n)))
    return Instance(seed, ext.space, f)


def add_generic_point_instance(seed: IdealSpace) -> Instance:
    """Seed mapped identically into its generic-point extension."""
    ext = ctor_add_generic_point(seed)
    f = FiniteMap(seed.n, seed.n + 1, tuple(range(seed.n)))
    return Instance(seed, ext.space, f)


def collapse_point_instance(seed: IdealSpace, x0: int, variant: str) -> Instance:
    """The collapse extension mapped onto the seed, twin and original both
    landing on ``x0``; the codomain carrier drops ``x0``."""
    col = ctor_collapse_point(seed, x0, variant)
    values = tuple(range(seed.n)) + (x0,)
    f = FiniteMap(seed.n + 1, seed.n, values)
    codomain = IdealSpace(seed.top, Ideal(seed.n, col.codomain_carrier))
    return Instance(col.space, codomain, f)

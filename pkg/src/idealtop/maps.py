"""Total maps between finite ground sets and their topological classification."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadPoint, DimensionMismatch, InternalCheckError
from .space import Topology, check_mask, check_point_count, full_mask


@dataclass(frozen=True)
class FiniteMap:
    """Total function {0..n_dom-1} -> {0..n_cod-1} as a value table."""

    n_dom: int
    n_cod: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        check_point_count(self.n_dom)
        check_point_count(self.n_cod)
        if len(self.values) != self.n_dom:
            raise DimensionMismatch(
                f"value table has {len(self.values)} entries for {self.n_dom} points")
        for x, y in enumerate(self.values):
            if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < self.n_cod:
                raise BadPoint(f"f({x}) = {y!r} outside codomain 0..{self.n_cod - 1}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def image(self, a: int) -> int:
        check_mask(a, self.n_dom)
        out = 0
        rest = a
        while rest:
            x = (rest & -rest).bit_length() - 1
            out |= 1 << self.values[x]
            rest &= rest - 1
        return out

    def preimage(self, b: int) -> int:
        check_mask(b, self.n_cod)
        out = 0
        for x, y in enumerate(self.values):
            if (b >> y) & 1:
                out |= 1 << x
        return out

    @property
    def injective(self) -> bool:
        return len(set(self.values)) == self.n_dom

    @property
    def surjective(self) -> bool:
        return len(set(self.values)) == self.n_cod

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def __repr__(self) -> str:
        return f"FiniteMap({self.n_dom}->{self.n_cod}, {list(self.values)})"


def identity_map(n: int) -> FiniteMap:
    return FiniteMap(n, n, tuple(range(n)))


def constant_map(n_dom: int, n_cod: int, y: int) -> FiniteMap:
    return FiniteMap(n_dom, n_cod, (y,) * n_dom)


def compose(g: FiniteMap, f: FiniteMap) -> FiniteMap:
    """g after f."""
    if f.n_cod != g.n_dom:
        raise DimensionMismatch(
            f"cannot compose: inner codomain {f.n_cod} != outer domain {g.n_dom}")
    return FiniteMap(f.n_dom, g.n_cod, tuple(g.values[y] for y in f.values))


def image(f: FiniteMap, a: int) -> int:
    return f.image(a)


def preimage(f: FiniteMap, b: int) -> int:
    return f.preimage(b)


@lru_cache(maxsize=None)
def image_table(f: FiniteMap) -> tuple[int, ...]:
    """Forward image of every subset of the domain, indexed by mask."""
    n = f.n_dom
    tab = [0] * (1 << n)
    for x in range(n):
        bit = 1 << f.values[x]
        step = 1 << x
        for a in range(step, 1 << n, step << 1):
            for m in range(a, a + step):
                tab[m] |= bit
    return tuple(tab)


@lru_cache(maxsize=None)
def preimage_table(f: FiniteMap) -> tuple[int, ...]:
    """Preimage of every subset of the codomain, indexed by mask."""
    singles = [0] * f.n_cod
    for x, y in enumerate(f.values):
        singles[y] |= 1 << x
    tab = [0] * (1 << f.n_cod)
    for b in range(1, 1 << f.n_cod):
        low = (b & -b).bit_length() - 1
        tab[b] = tab[b & (b - 1)] | singles[low]
    return tuple(tab)


# ---------------------------------------------------------------------------
# classification against a pair of topologies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MapProfile:
    continuous: bool
    open_map: bool
    closed_map: bool
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def homeomorphism(self) -> bool:
        return self.continuous and self.open_map and self.bijective


def _check_dims(f: FiniteMap, t_dom: Topology, t_cod: Topology) -> None:
    if f.n_dom != t_dom.n or f.n_cod != t_cod.n:
        raise DimensionMismatch(
            f"map is {f.n_dom}->{f.n_cod} but topologies have "
            f"{t_dom.n} and {t_cod.n} points")


def classify(f: FiniteMap, t_dom: Topology, t_cod: Topology,
             paranoid: bool = False) -> MapProfile:
    """Classify ``f`` between two topologies.

    Continuity is decided by open preimages; with ``paranoid=True`` all five
    textbook characterizations are evaluated and must agree (a mismatch
    raises InternalCheckError).
    """
    _check_dims(f, t_dom, t_cod)
    pre = preimage_table(f)
    img = image_table(f)
    continuous = all(t_dom.is_open(pre[o]) for o in t_cod.opens())
    if paranoid:
        chars = continuity_characterizations(f, t_dom, t_cod)
        if len(set(chars.values())) != 1:
            raise InternalCheckError(
                f"continuity characterizations disagree: {chars}")
    open_map = all(t_cod.is_open(img[u]) for u in t_dom.opens())
    closed_map = all(t_cod.is_closed(img[c]) for c in t_dom.closed_sets())
    return MapProfile(continuous, open_map, closed_map, f.injective, f.surjective)


def continuity_characterizations(f: FiniteMap, t_dom: Topology,
                                 t_cod: Topology) -> dict[str, bool]:
    """The five equivalent forms of continuity, each computed directly.

    ``open_preimages`` is the working definition used by :func:`classify`;
    the others quantify over arbitrary subsets and serve as cross-checks.
    """
    _check_dims(f, t_dom, t_cod)
    pre = preimage_table(f)
    img = image_table(f)
    full_cod = full_mask(t_cod.n)
    by_open = all(t_dom.is_open(pre[o]) for o in t_cod.opens())
    by_closed = all(t_dom.is_closed(pre[c]) for c in t_cod.closed_sets())
    by_image_closure = all(
        not img[t_dom.closure(a)] & ~t_cod.closure(img[a])
        for a in range(1 << t_dom.n))
    by_preimage_closure = all(
        not t_dom.closure(pre[b]) & ~pre[t_cod.closure(b)]
        for b in range(1 << t_cod.n))
    by_preimage_interior = all(
        not pre[t_cod.interior(b)] & ~t_dom.interior(pre[b])
        for b in range(full_cod + 1))
    return {
        "open_preimages": by_open,
        "closed_preimages": by_closed,
        "image_closure": by_image_closure,
        "preimage_closure": by_preimage_closure,
        "preimage_interior": by_preimage_interior,
    }


# ---------------------------------------------------------------------------
# JSON form: {"n_dom": int, "n_cod": int, "values": [ints...]}
# ---------------------------------------------------------------------------

def map_to_json(f: FiniteMap) -> dict:
    return {"n_dom": f.n_dom, "n_cod": f.n_cod, "values": list(f.values)}


def map_from_json(doc: object, where: str = "f") -> FiniteMap:
    from .jsonio import parse_map
    return parse_map(doc, where)

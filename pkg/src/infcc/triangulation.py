"""Triangulations of the line model and of finite polygons.

A triangulation is a maximal collection of pairwise non-crossing arcs that
is either locally finite or has a fountain (a vertex carrying infinitely
many arcs on both sides).  Infinite collections are represented
intensionally: a built-in base family plus a finite patch of flips
(`added`/`removed` sets), so membership and crossing queries are answered by
closed-form rules on the base corrected by the patch.

Base families
-------------
* ``FountainBase(n)`` -- all arcs (m, n) and (n, p): two infinite fans at n.
* ``ZigzagBase(anchor)`` -- the nested zigzag (a, a+2), (a-1, a+2),
  (a-1, a+3), (a-2, a+3), ...; membership is the closed form
  m + n in {2a+1, 2a+2}.
* ``StaircaseBase(entry, word)`` -- a zigzag-with-runs family described by a
  staircase word; generalises ZigzagBase and is produced from frontiers.
* ``PolygonBase(lo, hi, diagonals)`` -- diagonals of the finite polygon with
  vertices {lo..hi}; the boundary consists of the segments (i, i+1) plus the
  long side (lo, hi).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable, List, Optional, Sequence, Tuple

from .arcs import Arc, Edge, Seg, arc, crosses, seg, spans
from .errors import (
    FlipTargetNotMember,
    InfccError,
    InfiniteCrossers,
    NotAMember,
    UnknownFamily,
)

# ---------------------------------------------------------------------------
# base families


@dataclass(frozen=True)
class FountainBase:
    n: int


@dataclass(frozen=True)
class ZigzagBase:
    anchor: int


@dataclass(frozen=True)
class StaircaseBase:
    """Staircase family: `entry` on the bottom row, then steps of `word`.

    Letters: 'U' lowers the left endpoint by one, 'R' raises the right
    endpoint by one.  Beyond the word the staircase continues with strictly
    alternating steps (starting with the opposite of the last letter), so
    the family is always locally finite.
    """

    entry: Arc
    word: str

    def __post_init__(self):
        if self.entry.n - self.entry.m != 2:
            raise ValueError("staircase entry must lie on the bottom row")
        if any(ch not in "UR" for ch in self.word):
            raise ValueError(f"staircase word must use letters U/R, got {self.word!r}")

    def steps(self):
        """Infinite iterator of letters: the word, then strict alternation."""
        last = None
        for ch in self.word:
            last = ch
            yield ch
        if last is None:
            last = "R"  # empty word alternates starting with 'U'
        while True:
            last = "U" if last == "R" else "R"
            yield last

    def arcs_iter(self):
        """Infinite iterator over the family arcs, innermost first."""
        cur = self.entry
        yield cur
        for ch in self.steps():
            cur = Arc(cur.m - 1, cur.n) if ch == "U" else Arc(cur.m, cur.n + 1)
            yield cur

    def arcs_until(self, min_m: int, max_n: int) -> List[Arc]:
        """Family arcs from the entry until both bounds are passed."""
        out = [self.entry]
        cur = self.entry
        for ch in self.steps():
            if cur.m < min_m and cur.n > max_n:
                break
            cur = Arc(cur.m - 1, cur.n) if ch == "U" else Arc(cur.m, cur.n + 1)
            out.append(cur)
        return out


@dataclass(frozen=True)
class PolygonBase:
    lo: int
    hi: int
    diagonals: frozenset

    def __post_init__(self):
        if self.hi - self.lo < 2:
            raise ValueError("polygon needs at least 3 vertices")
        for d in self.diagonals:
            if not (self.lo <= d.m and d.n <= self.hi and d.n - d.m >= 2):
                raise ValueError(f"{tuple(d)} is not inside the polygon")
            if (d.m, d.n) == (self.lo, self.hi):
                raise ValueError("the long side (lo, hi) is boundary, not a diagonal")


@dataclass(frozen=True)
class Classification:
    kind: str  # 'locally_finite' | 'fountain' | 'finite_polygon'
    fountain: Optional[int] = None


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[Arc, ...]
    arrows: Tuple[Tuple[Arc, Arc], ...]


@dataclass(frozen=True)
class Diagnosis:
    crossing_pairs: Tuple[Tuple[Arc, Optional[Arc]], ...]
    missing: Tuple[Arc, ...]

    @property
    def ok(self) -> bool:
        return not self.crossing_pairs and not self.missing


@dataclass(frozen=True)
class FlipResult:
    new_triangulation: "Triangulation"
    replaced: Arc
    replacement: Arc
    quad: Tuple[int, int, int, int]
    middle_c: Tuple[Seg, Seg]
    middle_c_prime: Tuple[Seg, Seg]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    """Immutable triangulation value: base family plus a finite flip patch."""

    base: object
    flips: Tuple[Arc, ...] = ()
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    # -- membership --------------------------------------------------------

    def _base_member(self, x: Arc) -> bool:
        b = self.base
        if isinstance(b, FountainBase):
            return x.n == b.n or x.m == b.n
        if isinstance(b, ZigzagBase):
            return x.m + x.n in (2 * b.anchor + 1, 2 * b.anchor + 2)
        if isinstance(b, StaircaseBase):
            return x in b.arcs_until(x.m, x.n)
        if isinstance(b, PolygonBase):
            return x in b.diagonals
        raise UnknownFamily(f"unknown base {b!r}")

    def is_member(self, x: Seg) -> bool:
        if not isinstance(x, Arc):
            return False
        if x in self.removed:
            return False
        return x in self.added or self._base_member(x)

    def side_exists(self, a: int, b: int) -> bool:
        """True when (a, b) is a member arc or a boundary segment."""
        if b == a + 1:
            return True
        if self.is_polygon and (a, b) == (self.base.lo, self.base.hi):
            return True
        return self.is_member(Arc(a, b))

    @property
    def is_polygon(self) -> bool:
        return isinstance(self.base, PolygonBase)

    def is_boundary(self, x: Seg) -> bool:
        if isinstance(x, Edge):
            return True
        return self.is_polygon and (x.m, x.n) == (self.base.lo, self.base.hi)

    # -- enumeration -------------------------------------------------------

    def _partner_candidates(self, v: int) -> Tuple[List[int], bool]:
        """Co-endpoints of members at vertex v: (candidates, complete flag).

        The flag is False only at a fountain vertex, where the base fans are
        infinite; the returned list then holds just the patch additions.
        """
        b = self.base
        out: List[int] = []
        complete = True
        if isinstance(b, FountainBase):
            if v == b.n:
                complete = False
            elif abs(v - b.n) >= 2:
                out.append(b.n)
        elif isinstance(b, ZigzagBase):
            for s in (2 * b.anchor + 1, 2 * b.anchor + 2):
                w = s - v
                if abs(w - v) >= 2:
                    out.append(w)
        elif isinstance(b, StaircaseBase):
            for a in b.arcs_until(v, v):
                if a.m == v:
                    out.append(a.n)
                elif a.n == v:
                    out.append(a.m)
        elif isinstance(b, PolygonBase):
            for d in b.diagonals:
                if d.m == v:
                    out.append(d.n)
                elif d.n == v:
                    out.append(d.m)
        else:
            raise UnknownFamily(f"unknown base {b!r}")
        for a in self.added:
            if a.m == v:
                out.append(a.n)
            elif a.n == v:
                out.append(a.m)
        return sorted(set(out)), complete

    def members_in_window(self, lo: int, hi: int) -> List[Arc]:
        """Members with both endpoints inside [lo, hi]."""
        b = self.base
        out = set()
        if isinstance(b, FountainBase):
            if lo <= b.n <= hi:
                out.update(Arc(m, b.n) for m in range(lo, b.n - 1))
                out.update(Arc(b.n, p) for p in range(b.n + 2, hi + 1))
        elif isinstance(b, ZigzagBase):
            for m in range(lo, hi - 1):
                for s in (2 * b.anchor + 1, 2 * b.anchor + 2):
                    n = s - m
                    if m + 2 <= n <= hi:
                        out.add(Arc(m, n))
        elif isinstance(b, StaircaseBase):
            for a in b.arcs_until(lo, hi):
                if lo <= a.m and a.n <= hi:
                    out.add(a)
        elif isinstance(b, PolygonBase):
            out.update(d for d in b.diagonals if lo <= d.m and d.n <= hi)
        else:
            raise UnknownFamily(f"unknown base {b!r}")
        out -= self.removed
        out.update(a for a in self.added if lo <= a.m and a.n <= hi)
        return sorted(out)

    def polygon_members(self) -> List[Arc]:
        assert self.is_polygon
        return self.members_in_window(self.base.lo, self.base.hi)

    # -- crossing queries ----------------------------------------------------

    def crossers(self, d: Arc) -> List[Arc]:
        """Members crossing d, in crossing order along d.

        Raises InfiniteCrossers when d straddles a fountain vertex; a finite
        flip patch cannot make that set finite.
        """
        p, q = d
        if isinstance(self.base, FountainBase) and p < self.base.n < q:
            raise InfiniteCrossers(self.base.n)
        cands = set()
        for v in range(p + 1, q):
            partners, complete = self._partner_candidates(v)
            assert complete
            for w in partners:
                a, b = min(v, w), max(v, w)
                cands.add(Arc(a, b))
        hits = [x for x in cands if self.is_member(x) and crosses(x, d)]
        return sorted(hits, key=lambda x: (x.n, 0, -x.m) if x.m < p else (x.m, 1, -x.n))

    def spanning_arc(self, d: Arc) -> Optional[Arc]:
        """Some member spanning d, or None when no member does."""
        b = self.base
        for t in sorted(self.added):
            if spans(t, d):
                return t
        if isinstance(b, PolygonBase):
            for t in sorted(self.polygon_members()):
                if spans(t, d):
                    return t
            return None
        if isinstance(b, FountainBase):
            n0 = b.n
            if d.n <= n0:
                m = d.m - 1 if d.n == n0 else d.m
                while m >= d.m - len(self.removed) - 2:
                    t = Arc(m, n0)
                    if self.is_member(t) and spans(t, d):
                        return t
                    m -= 1
            elif d.m >= n0:
                p = d.n + 1 if d.m == n0 else d.n
                while p <= d.n + len(self.removed) + 2:
                    t = Arc(n0, p)
                    if self.is_member(t) and spans(t, d):
                        return t
                    p += 1
            return None
        # locally finite families: the base arcs grow past every window,
        # so scanning a bounded number of spanning base arcs always succeeds
        # even after finitely many removals.
        if isinstance(b, ZigzagBase):
            def base_arcs():
                j = 0
                while True:
                    yield Arc(b.anchor - j, b.anchor + j + 2)
                    yield Arc(b.anchor - j - 1, b.anchor + j + 2)
                    j += 1
            it = base_arcs()
        elif isinstance(b, StaircaseBase):
            it = b.arcs_iter()
        else:
            raise UnknownFamily(f"unknown base {b!r}")
        budget = len(self.removed) + 4
        for t in it:
            if spans(t, d):
                if self.is_member(t):
                    return t
                budget -= 1
                if budget <= 0:
                    break
        raise InfccError(f"no spanning member found for {tuple(d)}")

    def classify(self) -> Classification:
        b = self.base
        if isinstance(b, FountainBase):
            return Classification("fountain", b.n)
        if isinstance(b, PolygonBase):
            return Classification("finite_polygon")
        return Classification("locally_finite")

    # -- triangles and flips -------------------------------------------------

    def inner_vertex(self, t: Arc) -> int:
        hits = [v for v in range(t.m + 1, t.n) if self.side_exists(t.m, v) and self.side_exists(v, t.n)]
        assert len(hits) == 1, f"expected one inner triangle at {tuple(t)}, found {hits}"
        return hits[0]

    def outer_vertex(self, t: Arc) -> int:
        a, b = t
        cands = {a - 1, b + 1}
        for v in (a, b):
            partners, _complete = self._partner_candidates(v)
            cands.update(partners)
        if self.is_polygon:
            cands.update((self.base.lo, self.base.hi))
            cands = {x for x in cands if self.base.lo <= x <= self.base.hi}
        hits = set()
        for x in cands:
            if x < a and self.side_exists(x, a) and self.side_exists(x, b):
                hits.add(x)
            elif x > b and self.side_exists(a, x) and self.side_exists(b, x):
                hits.add(x)
        assert len(hits) == 1, f"expected one outer triangle at {tuple(t)}, found {sorted(hits)}"
        return hits.pop()

    def flip(self, t: Arc) -> FlipResult:
        """Replace member t by the other diagonal of its quadrilateral.

        The middle terms are the two opposite-side pairs of the quad; the
        `middle_c` pair is the one whose sides end at t's endpoints when the
        quad is oriented by increasing vertices.
        """
        if not self.is_member(t):
            raise NotAMember(f"{tuple(t)} is not a member")
        v = self.inner_vertex(t)
        x = self.outer_vertex(t)
        q0, q1, q2, q3 = sorted((t.m, t.n, v, x))
        if (t.m, t.n) == (q0, q2):
            replacement = Arc(q1, q3)
            middle_c = (seg(q1, q2), seg(q0, q3))
            middle_cp = (seg(q0, q1), seg(q2, q3))
        else:
            assert (t.m, t.n) == (q1, q3)
            replacement = Arc(q0, q2)
            middle_c = (seg(q0, q1), seg(q2, q3))
            middle_cp = (seg(q1, q2), seg(q0, q3))
        added = set(self.added)
        removed = set(self.removed)
        if t in added:
            added.remove(t)
        else:
            removed.add(t)
        if replacement in removed:
            removed.remove(replacement)
        else:
            added.add(replacement)
        new = replace(
            self,
            flips=self.flips + (t,),
            added=frozenset(added),
            removed=frozenset(removed),
        )
        return FlipResult(new, t, replacement, (q0, q1, q2, q3), middle_c, middle_cp)

    # -- validation and quiver ------------------------------------------------

    def validate_window(self, lo: int, hi: int) -> Diagnosis:
        """Report crossing pairs and maximality gaps visible inside [lo, hi]."""
        crossing = set()
        for x in self.members_in_window(lo, hi):
            try:
                for y in self.crossers(x):
                    crossing.add((min(x, y), max(x, y)))
            except InfiniteCrossers:
                crossing.add((x, None))
        missing = []
        for u in range(lo, hi - 1):
            for v in range(u + 2, hi + 1):
                d = Arc(u, v)
                if self.is_polygon:
                    b = self.base
                    if not (b.lo <= u and v <= b.hi) or (u, v) == (b.lo, b.hi):
                        continue
                if self.is_member(d):
                    continue
                try:
                    if not self.crossers(d):
                        missing.append(d)
                except InfiniteCrossers:
                    pass
        return Diagnosis(tuple(sorted(crossing)), tuple(missing))

    def quiver(self, lo: Optional[int] = None, hi: Optional[int] = None,
               vertices: Optional[Iterable[Arc]] = None) -> Quiver:
        """Quiver on the members of a finite region: arrows from shared triangles."""
        if vertices is None:
            if lo is None or hi is None:
                if not self.is_polygon:
                    raise ValueError("a window is required for infinite triangulations")
                lo, hi = self.base.lo, self.base.hi
            vertices = self.members_in_window(lo, hi)
        vs = sorted(set(vertices))
        arrows = []
        for a, b in itertools.combinations(vs, 2):
            direction = arrow_between(self, a, b)
            if direction == 1:
                arrows.append((a, b))
            elif direction == -1:
                arrows.append((b, a))
        return Quiver(tuple(vs), tuple(sorted(arrows)))

    # -- polygon geometry ------------------------------------------------------

    @property
    def long_side(self) -> Tuple[int, int]:
        assert self.is_polygon
        return (self.base.lo, self.base.hi)

    def rotate(self, x: Seg, k: int) -> Seg:
        """Cyclic vertex rotation v -> v + k of the polygon model.

        Arcs map to arcs and boundary to boundary; the long side is
        represented as Edge(hi).
        """
        assert self.is_polygon
        lo, hi = self.base.lo, self.base.hi
        n_vertices = hi - lo + 1
        if isinstance(x, Edge):
            ends = (x.i, x.i + 1 if x.i < hi else lo)
        else:
            ends = (x.m, x.n)
        a, b = sorted(lo + (v - lo + k) % n_vertices for v in ends)
        if b - a == 1:
            return Edge(a)
        if (a, b) == (lo, hi):
            return Edge(hi)
        return Arc(a, b)


def arrow_between(T: Triangulation, a: Arc, b: Arc) -> Optional[int]:
    """Quiver arrow between members sharing a triangle of T.

    Returns +1 for a -> b, -1 for b -> a, None when they share no triangle.
    Within a triangle on vertices A < B < C the arrows run
    (A,B) -> (B,C) -> (A,C) -> (A,B) over the sides that are members.
    """
    shared = {a.m, a.n} & {b.m, b.n}
    if len(shared) != 1:
        return None
    others = sorted({a.m, a.n, b.m, b.n} - shared)
    if not T.side_exists(others[0], others[1]):
        return None
    A, B, C = sorted({a.m, a.n, b.m, b.n})
    cycle = [(A, B), (B, C), (A, C)]
    ta, tb = (a.m, a.n), (b.m, b.n)
    for i in range(3):
        if cycle[i] == ta and cycle[(i + 1) % 3] == tb:
            return 1
        if cycle[i] == tb and cycle[(i + 1) % 3] == ta:
            return -1
    return None


# ---------------------------------------------------------------------------
# constructors


def fountain(n: int, flips: Sequence[Tuple[int, int]] = ()) -> Triangulation:
    return _apply_flips(Triangulation(FountainBase(n)), flips)

def nested_zigzag(anchor: int, flips: Sequence[Tuple[int, int]] = ()) -> Triangulation:
    return _apply_flips(Triangulation(ZigzagBase(anchor)), flips)

def staircase(entry: Tuple[int, int], word: str, flips: Sequence[Tuple[int, int]] = ()) -> Triangulation:
    return _apply_flips(Triangulation(StaircaseBase(Arc(*entry), word)), flips)

def polygon(lo: int, hi: int, diagonals: Iterable[Tuple[int, int]],
            flips: Sequence[Tuple[int, int]] = ()) -> Triangulation:
    diag = frozenset(arc(m, n) for m, n in diagonals)
    return _apply_flips(Triangulation(PolygonBase(lo, hi, diag)), flips)


def _apply_flips(T: Triangulation, flips: Sequence[Tuple[int, int]]) -> Triangulation:
    for i, (m, n) in enumerate(flips):
        t = Arc(m, n)
        if not T.is_member(t):
            raise FlipTargetNotMember(f"flip #{i}: {tuple(t)} is not a member")
        T = T.flip(t).new_triangulation
    return T


def build(spec: dict) -> Triangulation:
    """Build a triangulation from its JSON spec.

    ``{"base": {"kind": "fountain", "n": 0}, "flips": [[m, n], ...]}`` with
    kinds fountain / zigzag / polygon / staircase.
    """
    base = spec.get("base", {})
    kind = base.get("kind")
    flips = [tuple(a) for a in spec.get("flips", ())]
    if kind == "fountain":
        return fountain(int(base["n"]), flips)
    if kind == "zigzag":
        return nested_zigzag(int(base["anchor"]), flips)
    if kind == "polygon":
        return polygon(int(base["lo"]), int(base["hi"]),
                       [tuple(d) for d in base["diagonals"]], flips)
    if kind == "staircase":
        a = int(base["anchor"])
        return staircase((a, a + 2), str(base.get("word", "")), flips)
    raise UnknownFamily(f"unknown base kind {kind!r}")


# ---------------------------------------------------------------------------
# polygon triangulation enumeration (used by the verification suites)


def polygon_diagonals(lo: int, hi: int) -> List[Arc]:
    """All diagonals of the polygon on {lo..hi} (the long side excluded)."""
    out = [Arc(m, n) for m in range(lo, hi - 1) for n in range(m + 2, hi + 1)]
    out.remove(Arc(lo, hi))
    return out


def all_polygon_triangulations(lo: int, hi: int) -> List[frozenset]:
    """Every triangulation of the polygon on {lo..hi}, as diagonal sets."""

    def rec(vs: Tuple[int, ...]) -> List[frozenset]:
        if len(vs) < 4:
            return [frozenset()]
        first, last = vs[0], vs[-1]
        out = []
        for i in range(1, len(vs) - 1):
            mid = vs[i]
            extra = set()
            if i > 1:
                extra.add(Arc(first, mid))
            if i < len(vs) - 2:
                extra.add(Arc(mid, last))
            for left in rec(vs[: i + 1]):
                for right in rec(vs[i:]):
                    out.append(frozenset(extra) | left | right)
        return out

    return rec(tuple(range(lo, hi + 1)))


def random_polygon_triangulation(lo: int, hi: int, rng) -> frozenset:
    def rec(vs: Tuple[int, ...]) -> set:
        if len(vs) < 4:
            return set()
        first, last = vs[0], vs[-1]
        i = rng.randrange(1, len(vs) - 1)
        mid = vs[i]
        out = set()
        if i > 1:
            out.add(Arc(first, mid))
        if i < len(vs) - 2:
            out.add(Arc(mid, last))
        return out | rec(vs[: i + 1]) | rec(vs[i:])

    return frozenset(rec(tuple(range(lo, hi + 1))))

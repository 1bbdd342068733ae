"""Unimodular integer tilings from triangulations and from frontiers.

A tiling window is a finite table of positive integers indexed by pairs
(i, j).  Half-plane windows live on Q = {(i, j) : i <= j - 2} and must
satisfy

    r(i,j) r(i+1,j+1) - r(i,j+1) r(i+1,j) = 1          (all 2x2 blocks)
    r(i,i+2) r(i+1,i+3) - r(i,i+3) = 1                 (edge relation)

while full-plane windows satisfy the 2x2 relation everywhere.

`tiling_window` produces the half-plane tiling of a locally finite
triangulation cell by cell: r(i, j) counts the submodules of the string
module of the arc (i, j), independently per cell, so the determinant
relations act as a cross-check instead of an error-compounding generator.

Frontiers are staircase paths of 1's; `extend_frontier` propagates the 2x2
relation away from the path on both sides.  Steps use matrix orientation:
'U' moves up a row (i - 1), 'R' moves right a column (j + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from .arcs import Arc
from .errors import ExactnessFailure, NonAdmissibleFrontier, NotLocallyFinite
from .modules import count_submodules, g_module
from .triangulation import Triangulation, nested_zigzag, staircase

Cell = Tuple[int, int]


def _in_q(p: Cell) -> bool:
    return p[0] <= p[1] - 2


@dataclass(frozen=True)
class TilingWindow:
    kind: str  # 'half_plane' | 'plane'
    values: Dict[Cell, int]

    def get(self, i: int, j: int) -> Optional[int]:
        return self.values.get((i, j))

    def bounds(self) -> Tuple[int, int, int, int]:
        cells = self.values
        return (
            min(i for i, _ in cells), min(j for _, j in cells),
            max(i for i, _ in cells), max(j for _, j in cells),
        )


class Violation(NamedTuple):
    kind: str  # 'unimodular' | 'edge'
    at: Cell
    lhs: int
    rhs: int


def tiling_window(T: Triangulation, lo: int, hi: int) -> TilingWindow:
    """Half-plane tiling of a locally finite triangulation on [lo, hi].

    r(i, j) is the submodule count of the string module of the arc (i, j);
    members and only members give r = 1.
    """
    cls = T.classify()
    if cls.kind == "fountain":
        raise NotLocallyFinite(f"fountain at {cls.fountain}: straddling cells cross infinitely many members")
    if cls.kind != "locally_finite":
        raise ValueError("tiling_window needs an infinite locally finite triangulation")
    values = {}
    for i in range(lo, hi - 1):
        for j in range(i + 2, hi + 1):
            values[(i, j)] = count_submodules(g_module(T, Arc(i, j)))
    return TilingWindow("half_plane", values)


def recurrence_window(T: Triangulation, lo: int, hi: int, pad: int = 3,
                      strict: bool = True) -> Dict[Cell, int]:
    """Half-plane window by determinant propagation from the members' 1's.

    Independent of submodule counting: seeds 1 at every member of a padded
    window and fills the rest with the two determinant relations.  With
    `strict` every window cell must resolve (ExactnessFailure otherwise);
    without it the determined sub-window is returned, which is the honest
    result for member configurations the local propagation cannot finish.
    """
    cls = T.classify()
    if cls.kind == "fountain":
        raise NotLocallyFinite(f"fountain at {cls.fountain}")
    values: Dict[Cell, int] = {
        (a.m, a.n): 1 for a in T.members_in_window(lo - pad, hi + pad)
    }
    targets = {
        (i, j)
        for i in range(lo - pad, hi + pad - 1)
        for j in range(i + 2, hi + pad + 1)
    }
    _propagate(values, targets, q_only=True, edge=True)
    missing = [p for p in targets if p not in values and lo <= p[0] and p[1] <= hi]
    if strict and missing:
        raise ExactnessFailure(f"undetermined cells {missing[:4]} (window too small?)")
    return {p: v for p, v in values.items() if lo <= p[0] and p[1] <= hi}


def verify_sl2(W: TilingWindow) -> List[Violation]:
    """All violated determinant relations on the window; empty means valid."""
    r = W.values
    out = []
    for (i, j) in sorted(r):
        block = [(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)]
        if all(p in r for p in block):
            lhs = r[(i, j)] * r[(i + 1, j + 1)] - r[(i, j + 1)] * r[(i + 1, j)]
            if lhs != 1:
                out.append(Violation("unimodular", (i, j), lhs, 1))
    if W.kind == "half_plane":
        for (i, j) in sorted(r):
            if j == i + 2 and (i, i + 3) in r and (i + 1, i + 3) in r:
                lhs = r[(i, i + 2)] * r[(i + 1, i + 3)] - r[(i, i + 3)]
                if lhs != 1:
                    out.append(Violation("edge", (i, j), lhs, 1))
    return out


# ---------------------------------------------------------------------------
# frontiers


def _flip(ch: str) -> str:
    return "U" if ch == "R" else "R"


@dataclass(frozen=True)
class Frontier:
    """Staircase path of 1's: a finite window of steps, alternating beyond.

    The path passes through `origin` and follows `word`; outside the window
    it continues with strictly alternating steps in both directions, the
    standing convention for finitely presented frontiers.
    """

    word: str
    anchor: int = 0
    start: Optional[Cell] = None

    def __post_init__(self):
        if any(ch not in "UR" for ch in self.word):
            raise NonAdmissibleFrontier(f"letters must be U/R, got {self.word!r}")

    @property
    def origin(self) -> Cell:
        return self.start if self.start is not None else (self.anchor, self.anchor + 2)

    def _forward_letters(self):
        last = None
        for ch in self.word:
            last = ch
            yield ch
        last = last or "R"
        while True:
            last = _flip(last)
            yield last

    def _backward_letters(self):
        last = _flip(self.word[0]) if self.word else "R"
        yield last
        while True:
            last = _flip(last)
            yield last

    def forward_points(self):
        """Points from the origin onward (n - m weakly increasing)."""
        p = self.origin
        yield p
        for ch in self._forward_letters():
            p = (p[0] - 1, p[1]) if ch == "U" else (p[0], p[1] + 1)
            yield p

    def backward_points(self):
        """Points strictly before the origin, nearest first."""
        p = self.origin
        for ch in self._backward_letters():
            p = (p[0] + 1, p[1]) if ch == "U" else (p[0], p[1] - 1)
            yield p

    def window_points(self) -> List[Cell]:
        pts = [self.origin]
        p = self.origin
        for ch in self.word:
            p = (p[0] - 1, p[1]) if ch == "U" else (p[0], p[1] + 1)
            pts.append(p)
        return pts

    def points_covering(self, i_lo: int, j_lo: int, i_hi: int, j_hi: int) -> List[Cell]:
        """Path points until the staircase has passed the given rectangle."""
        back = []
        for p in self.backward_points():
            back.append(p)
            if p[0] > i_hi + 1 and p[1] < j_lo - 1:
                break
        fwd = []
        for p in self.forward_points():
            fwd.append(p)
            if p[0] < i_lo - 1 and p[1] > j_hi + 1:
                break
        return list(reversed(back)) + fwd


def _solve_square(r: Dict[Cell, int], a: int, b: int, missing: Cell) -> int:
    """Solve the unimodular relation on the square anchored at (a, b)."""
    p00, p01, p10, p11 = (a, b), (a, b + 1), (a + 1, b), (a + 1, b + 1)
    if missing == p00:
        num, den = 1 + r[p01] * r[p10], r[p11]
    elif missing == p11:
        num, den = 1 + r[p01] * r[p10], r[p00]
    elif missing == p01:
        num, den = r[p00] * r[p11] - 1, r[p10]
    else:
        num, den = r[p00] * r[p11] - 1, r[p01]
    if den == 0 or num % den != 0 or num // den <= 0:
        raise ExactnessFailure(f"cell {missing}: {num}/{den} is not a positive integer")
    return num // den


def _div_positive(num: int, den: int, cell: Cell) -> int:
    if den == 0 or num % den != 0 or num // den <= 0:
        raise ExactnessFailure(f"cell {cell}: {num}/{den} is not a positive integer")
    return num // den


def _propagate(values: Dict[Cell, int], targets: set, *, q_only: bool, edge: bool) -> None:
    """Fill target cells by the determinant relations until a fixpoint.

    q_only restricts the 2x2 relation to squares lying inside the half
    plane; `edge` additionally uses the boundary-row relation
    r(i,i+2) r(i+1,i+3) - r(i,i+3) = 1.
    """
    pending = set(targets) - set(values)
    progress = True
    while pending and progress:
        progress = False
        for cell in sorted(pending):
            v = _try_cell(values, cell, q_only, edge)
            if v is not None:
                values[cell] = v
                pending.discard(cell)
                progress = True
    return None


def _try_cell(r: Dict[Cell, int], cell: Cell, q_only: bool, edge: bool) -> Optional[int]:
    i, j = cell
    for a, b in ((i, j), (i - 1, j), (i, j - 1), (i - 1, j - 1)):
        square = [(a, b), (a, b + 1), (a + 1, b), (a + 1, b + 1)]
        if q_only and not all(_in_q(p) for p in square):
            continue
        if all(p in r for p in square if p != cell):
            return _solve_square(r, a, b, cell)
    if edge:
        if j == i + 2:
            if (i, i + 3) in r and (i + 1, i + 3) in r:
                return _div_positive(1 + r[(i, i + 3)], r[(i + 1, i + 3)], cell)
            if (i - 1, i + 1) in r and (i - 1, i + 2) in r:
                return _div_positive(1 + r[(i - 1, i + 2)], r[(i - 1, i + 1)], cell)
        if j == i + 3 and (i, i + 2) in r and (i + 1, i + 3) in r:
            return r[(i, i + 2)] * r[(i + 1, i + 3)] - 1
    return None


def extend_frontier(F: Frontier, bbox: Tuple[int, int, int, int]) -> TilingWindow:
    """Extend the frontier's 1's to a full-plane window over bbox.

    bbox is (i_lo, j_lo, i_hi, j_hi).  Every division must be exact and
    every value positive; a failure falsifies admissibility and raises.
    """
    i_lo, j_lo, i_hi, j_hi = bbox
    if i_lo > i_hi or j_lo > j_hi:
        raise ValueError("empty bbox")
    values: Dict[Cell, int] = {p: 1 for p in F.points_covering(i_lo, j_lo, i_hi, j_hi)}
    # fill the whole rectangle spanned by the bbox and the generated path:
    # determination chains may route just outside the requested bbox
    a_lo = min(i_lo, min(p[0] for p in values))
    a_hi = max(i_hi, max(p[0] for p in values))
    b_lo = min(j_lo, min(p[1] for p in values))
    b_hi = max(j_hi, max(p[1] for p in values))
    work = {(i, j) for i in range(a_lo, a_hi + 1) for j in range(b_lo, b_hi + 1)}
    _propagate(values, work, q_only=False, edge=False)
    targets = {(i, j) for i in range(i_lo, i_hi + 1) for j in range(j_lo, j_hi + 1)}
    missing = targets - set(values)
    if missing:
        raise ExactnessFailure(f"could not determine cells {sorted(missing)[:4]}...")
    return TilingWindow("plane", {p: v for p, v in values.items() if p in targets})


def q_overlap_fill(F: Frontier, lo: int, hi: int) -> Dict[Cell, int]:
    """Cells of Q determined by the frontier's 1's through Q-interior squares.

    This is the region where the full-plane extension and the half-plane
    tiling of the frontier's triangulation provably agree; cells whose
    determination would leave Q are omitted.
    """
    pts = [p for p in F.points_covering(lo, lo, hi, hi) if _in_q(p)]
    values: Dict[Cell, int] = {p: 1 for p in pts}
    targets = {(i, j) for i in range(lo, hi - 1) for j in range(i + 2, hi + 1)}
    _propagate(values, targets, q_only=True, edge=False)
    return {p: v for p, v in values.items() if p in targets}


def frontier_to_triangulation(F: Frontier) -> Triangulation:
    """The locally finite triangulation cut out by the frontier inside Q.

    The path meets Q in a staircase of arcs; the result is the nested
    zigzag family when the trace is strictly alternating, otherwise a
    staircase family.  Raises NonAdmissibleFrontier when the declared
    window misses Q entirely.
    """
    if not any(_in_q(p) for p in F.window_points()):
        raise NonAdmissibleFrontier("frontier window lies outside the half plane")
    # locate the entry point (the unique path point on the bottom row)
    entry = None
    if _in_q(F.origin):
        entry = F.origin
        for p in F.backward_points():
            if not _in_q(p):
                break
            entry = p
    else:
        for p in F.forward_points():
            if _in_q(p):
                entry = p
                break
    assert entry is not None and entry[1] - entry[0] == 2
    # steps from the entry through the declared window plus two more, to pin
    # the alternation phase of the extension
    pts = _points_from(F, entry, len(F.word) + 2)
    word = "".join("U" if b[0] < a[0] else "R" for a, b in zip(pts, pts[1:]))
    cand = staircase(entry, word)
    zig = nested_zigzag(entry[0])
    probe = cand.base.arcs_until(entry[0] - len(word) - 3, entry[1] + len(word) + 3)
    if all(zig.is_member(a) for a in probe):
        return zig
    return cand


def _points_from(F: Frontier, entry: Cell, count: int) -> List[Cell]:
    """`count` + 1 path points starting at `entry`, following the path."""
    o = F.origin
    span = abs(entry[0] - o[0]) + abs(entry[1] - o[1]) + len(F.word) + count + 8
    pts = F.points_covering(entry[0] - span, entry[1] - span, entry[0] + span, entry[1] + span)
    idx = pts.index(entry)
    return pts[idx: idx + count + 1]

"""Exhaustive completion search and pattern counting.

The engine fills angular gaps one at a time.  At the chosen gap there are
exactly three ways to place a tile flush against the gap's starting ray
(triangle corner, shield sharp corner, shield wide corner), so depth-first
search over those choices is exhaustive.  Branches are cut when a partial
vertex star cannot extend to any legal full star or when a remaining gap
cannot be written as a non-negative combination of corner angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import geomkernel as gk
from .alpha import AlphaSpec, make_alpha
from .atlas import gap_feasible, star_completable
from .errors import BudgetExceeded, IncompleteCoverage, ShieldError
from .patch import (
    GEOM_TOL,
    Patch,
    PatternBall,
    Placement,
    placement_with_corner,
)
from .symbolic import Direction, ExactPoint, SymbolicAngle

DEFAULT_BUDGET = 2_000_000
DEFAULT_MARGIN = 1.0

ORIGIN = ExactPoint.from_dict({})


@dataclass
class _Search:
    """Shared state for one depth-first completion run."""

    patch: Patch
    done: object  # () -> bool
    frontier: object  # () -> list of (dist2, vid)
    budget: int
    tile_filter: object = None
    on_solution: object = None
    first_only: bool = False
    nodes: int = 0

    def run(self) -> bool:
        if self.done():
            if self.on_solution is not None:
                self.on_solution(self.patch)
            return self.first_only
        front = self.frontier()
        if not front:
            return False  # stuck: gaps remain but none are fillable here
        _d, vid = min(front)
        gaps = self.patch.gaps(vid)
        if not gaps:
            return False
        start_dir, _sym, _gn = min(
            gaps, key=lambda g: g[0].value(self.patch.eval_rad) % (2 * math.pi)
        )
        point = self.patch.vertex_point(vid)
        for cand in _flush_candidates(point, start_dir):
            if self.nodes >= self.budget:
                raise BudgetExceeded("node budget exhausted")
            self.nodes += 1
            try:
                vids = self.patch.add_tile(cand)
            except ShieldError:
                continue
            ok = self._prune(cand, vids)
            if ok and self.run():
                return True
            self.patch.pop_tile()
        return False

    def _prune(self, cand: Placement, vids) -> bool:
        p = self.patch
        alpha = p.alpha
        for v in set(vids):
            blocked = any(iv[4] is None for iv in p._vertices[v].intervals)
            for (_d, gsym, _gn) in p.gaps(v):
                if not gap_feasible(gsym, alpha):
                    return False
            if not blocked and p.gaps(v):
                if not star_completable(p.star_blocks(v), alpha):
                    return False
        if self.tile_filter is not None and not self.tile_filter(p, cand, vids):
            return False
        return True


def _raw_tile_key(t: Placement, rad: float):
    if t.is_exact:
        c = t.canonical()
        return (c.kind, c.anchor.coeffs, c.heading.a, c.heading.b)
    return (t.kind, tuple(round(c, 6) for xy in t.corner_xy(rad) for c in xy))


def _flush_candidates(point: ExactPoint, d: Direction) -> list[Placement]:
    return [
        Placement("T", point, d),
        Placement("S", point, d),
        placement_with_corner("S", 1, point, d),
    ]


def _disk_frontier(patch: Patch, center_xy, radius: float):
    """Gap-bearing endpoints of boundary edges intersecting the disk."""
    cx, cy = center_xy
    out = []
    seen = set()
    for (u, v) in patch.boundary_edges():
        ax, ay = patch.vertex_xy(u)
        bx, by = patch.vertex_xy(v)
        if gk.point_segment_dist(cx, cy, ax, ay, bx, by) > radius + GEOM_TOL:
            continue
        for w in (u, v):
            if w in seen:
                continue
            seen.add(w)
            if patch.gaps(w):
                x, y = patch.vertex_xy(w)
                out.append(((x - cx) ** 2 + (y - cy) ** 2, w))
    return out


def _gap_frontier(patch: Patch, center_xy):
    cx, cy = center_xy
    out = []
    for vid in patch.vertex_ids():
        if patch.gaps(vid):
            x, y = patch.vertex_xy(vid)
            out.append(((x - cx) ** 2 + (y - cy) ** 2, vid))
    return out


def fill_disk(
    patch: Patch,
    center_vid: int,
    radius: float,
    *,
    budget: int = DEFAULT_BUDGET,
    tile_filter=None,
    on_solution=None,
    first_only: bool = False,
) -> bool:
    """DFS over all completions until no boundary edge meets the disk.

    With first_only the patch is left in the first completed state found
    and True is returned; otherwise on_solution is invoked on every
    completion and the patch is restored.
    """
    cxy = patch.vertex_xy(center_vid)
    s = _Search(
        patch=patch,
        done=lambda: not _disk_frontier_offends(patch, cxy, radius),
        frontier=lambda: _disk_frontier(patch, cxy, radius),
        budget=budget,
        tile_filter=tile_filter,
        on_solution=on_solution,
        first_only=first_only,
    )
    return s.run()


def _disk_frontier_offends(patch: Patch, cxy, radius: float) -> bool:
    cx, cy = cxy
    for (u, v) in patch.boundary_edges():
        ax, ay = patch.vertex_xy(u)
        bx, by = patch.vertex_xy(v)
        if gk.point_segment_dist(cx, cy, ax, ay, bx, by) <= radius + GEOM_TOL:
            return True
    return False


def fill_region(
    patch: Patch,
    center_xy,
    *,
    budget: int = DEFAULT_BUDGET,
    tile_filter=None,
    on_solution=None,
    first_only: bool = False,
) -> bool:
    """DFS until no vertex has an angular gap (bounded-region filling)."""

    def done():
        return not _gap_frontier(patch, center_xy)

    s = _Search(
        patch=patch,
        done=done,
        frontier=lambda: _gap_frontier(patch, center_xy),
        budget=budget,
        tile_filter=tile_filter,
        on_solution=on_solution,
        first_only=first_only,
    )
    return s.run()


# ---------------------------------------------------------------------------
# Pattern balls
# ---------------------------------------------------------------------------


def complete_ball(
    seed: Patch,
    center_vid: int,
    n: float,
    *,
    margin: float = DEFAULT_MARGIN,
    budget: int = DEFAULT_BUDGET,
) -> set[PatternBall]:
    """All pattern balls of radius n around the center over all completions.

    Completions are carried out to radius n + margin; the margin discards
    local configurations that close the disk but cannot grow any further,
    so the reported balls are those that occur inside larger arrangements.
    On budget exhaustion BudgetExceeded is raised carrying the (verified,
    possibly incomplete) set found so far.
    """
    found: dict[str, PatternBall] = {}
    seen_raw: set = set()

    def record(p: Patch):
        try:
            ball = p.extract_ball(center_vid, n)
        except IncompleteCoverage:
            return
        # many completions share the same inner ball: skip the expensive
        # canonical minimization when the raw (translation-fixed) tile set
        # has been seen before
        raw = tuple(sorted(_raw_tile_key(t, p.eval_rad) for t in ball.tiles))
        if raw in seen_raw:
            return
        seen_raw.add(raw)
        found.setdefault(ball.key(), ball)

    reach = n + margin
    nodes_used = 0
    bare = not seed._vertices[center_vid].intervals and not seed.gaps(center_vid)
    seeds: list[Placement | None]
    if bare and len(seed) == 0:
        point = seed.vertex_point(center_vid)
        seeds = _flush_candidates(point, Direction.of(0, 0))
    else:
        seeds = [None]
    try:
        for first in seeds:
            if first is not None:
                try:
                    seed.add_tile(first)
                except ShieldError:
                    continue
            try:
                fill_disk(
                    seed,
                    center_vid,
                    reach,
                    budget=budget - nodes_used,
                    on_solution=record,
                )
            finally:
                if first is not None:
                    seed.pop_tile()
    except BudgetExceeded as exc:
        raise BudgetExceeded(
            "node budget exhausted", partial=set(found.values())
        ) from exc
    return set(found.values())


@dataclass
class PatternCount:
    """P_n: how many distinct radius-n patterns exist around a vertex."""

    n: float
    alpha: AlphaSpec
    count: int
    translation_count: int
    complete: bool = True
    patterns: set = field(default_factory=set)


def count_patterns(
    n: float,
    alpha: AlphaSpec,
    *,
    budget: int = DEFAULT_BUDGET,
    margin: float = DEFAULT_MARGIN,
    keep: bool = True,
) -> PatternCount:
    """Count patterns up to isometry; also up to translation only.

    The translation count treats two patterns as equal only when one is a
    translate of the other; rotated or reflected images of each isometry
    class are counted separately.  On budget exhaustion the counts are a
    verified lower bound, flagged with complete=False.
    """
    patch = Patch(alpha)
    vid = patch.add_vertex(ORIGIN)
    complete = True
    try:
        balls = complete_ball(patch, vid, n, margin=margin, budget=budget)
    except BudgetExceeded as exc:
        balls = exc.partial
        complete = False
    tkeys = set()
    for b in balls:
        tkeys |= b.orbit_translation_keys()
    return PatternCount(
        n=n,
        alpha=alpha,
        count=len(balls),
        translation_count=len(tkeys),
        complete=complete,
        patterns={b.key() for b in balls} if keep else set(),
    )


# ---------------------------------------------------------------------------
# Dodecagon fillings (right shield, 3.12.12 packing)
# ---------------------------------------------------------------------------

# unit-edge regular dodecagon traversed counterclockwise; edge k has
# direction k*30 degrees, expressible exactly when alpha = pi/2
_DODECA_DIRS = [
    Direction.of(k // 2, 0) if k % 2 == 0 else Direction.of((k - 3) // 2, 1)
    for k in range(12)
]

DODECAGON_EXTERIOR = SymbolicAngle(2, 1)  # 210 degrees at alpha = pi/2


def dodecagon_vertices(base: ExactPoint = ORIGIN) -> list[ExactPoint]:
    pts = [base]
    p = base
    for d in _DODECA_DIRS[:-1]:
        p = p.step(d)
        pts.append(p)
    return pts


def dodecagon_patch(alpha: AlphaSpec, base: ExactPoint = ORIGIN) -> Patch:
    """Empty patch whose outside of one dodecagon is blocked off."""
    patch = Patch(alpha)
    pts = dodecagon_vertices(base)
    for k, p in enumerate(pts):
        d_out = _DODECA_DIRS[k]
        d_in = _DODECA_DIRS[k - 1]
        patch.add_blocked(p, d_in.opposite(), DODECAGON_EXTERIOR)
    return patch


def dodecagon_center_xy(alpha: AlphaSpec, base: ExactPoint = ORIGIN):
    rad = alpha.eval_radians()
    pts = [p.xy(rad) for p in dodecagon_vertices(base)]
    return (
        sum(x for x, _ in pts) / 12.0,
        sum(y for _, y in pts) / 12.0,
    )


def dodecagon_fillings(*, budget: int = DEFAULT_BUDGET) -> list[Patch]:
    """All ways to tile the unit-edge regular dodecagon, sorted by key.

    The list order defines the filling index used when generating packing
    tilings.
    """
    alpha = make_alpha("rational", 1, 2)
    cxy = dodecagon_center_xy(alpha)
    fillings: dict[str, list[Placement]] = {}

    def record(p: Patch):
        ball = PatternBall(
            alpha=alpha,
            center=None,
            center_xy=cxy,
            radius=0.0,
            tiles=tuple(p.tiles),
        )
        # distinct relative to the fixed dodecagon frame: rotated copies of
        # one filling are different choices when packing
        fillings.setdefault(ball.translation_key(), list(p.tiles))

    patch = dodecagon_patch(alpha)
    fill_region(patch, cxy, budget=budget, on_solution=record)
    out = []
    for key in sorted(fillings):
        q = Patch(alpha)
        for t in fillings[key]:
            q.add_tile(t)
        q.require_valid()
        out.append(q)
    return out


# ---------------------------------------------------------------------------
# Entropy lower bound
# ---------------------------------------------------------------------------

# distance between adjacent dodecagon centers in the packing: 2 + sqrt(3)
_PACK_PITCH = 2.0 + math.sqrt(3.0)
# circumradius of the unit-edge regular dodecagon
_DODECA_CIRCUM = 0.5 / math.sin(math.pi / 12.0)


def dodecagon_cells_inside(n: float) -> int:
    """Dodecagons of the packing wholly inside a radius-n disk centered at
    a tiling vertex."""
    if n <= 2.0 * _DODECA_CIRCUM:
        return 0
    reach = n - _DODECA_CIRCUM
    # centers form a triangular lattice (pitch 2 + sqrt(3), axes along the
    # shared-edge normals); the disk sits at a dodecagon vertex, which is
    # one circumradius from the nearest center at 15 degrees off an axis
    a = _PACK_PITCH
    ox = _DODECA_CIRCUM * math.cos(math.pi / 12.0)
    oy = _DODECA_CIRCUM * math.sin(math.pi / 12.0)
    count = 0
    kmax = int((reach + _DODECA_CIRCUM) / (a * math.sqrt(3.0) / 2.0)) + 2
    for j in range(-kmax, kmax + 1):
        for i in range(-kmax, kmax + 1):
            x = a * (i + 0.5 * j) + ox
            y = a * (math.sqrt(3.0) / 2.0) * j + oy
            if math.hypot(x, y) <= reach + 1e-12:
                count += 1
    return count


def entropy_bound(n: float) -> float:
    """log(3)*D(n)/n^2: independent 3-way fillings give P_n >= 3^D(n)."""
    if n <= 0:
        return 0.0
    return math.log(3.0) * dodecagon_cells_inside(n) / (n * n)

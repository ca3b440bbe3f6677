"""Finite edge-to-edge tile arrangements.

A Patch stores placed tiles together with a vertex index (angular corner
intervals per vertex), an edge index, and spatial hashes for the numeric
checks.  Vertices are identified by exact coefficient maps for generic
alpha and by tolerance snapping for numeric alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from . import geomkernel as gk
from .alpha import AlphaSpec
from .atlas import LABEL_ANGLES, atlas_words, canonical_word
from .errors import (
    AtlasViolation,
    EdgeMismatchError,
    IncompleteCoverage,
    NotValidated,
    OverlapError,
)
from .symbolic import (
    FULL_TURN,
    HALF_TURN,
    Direction,
    ExactPoint,
    SymbolicAngle,
    unit_vector,
)

TWO_PI = 2.0 * math.pi
GEOM_TOL = 1e-6  # numeric coincidence tolerance at unit scale
SNAP_CELL = 1e-3  # snap-grid cell for vertex identification
GRID = 2.0  # spatial hash cell for tile-tile checks

TILE_LABEL_SEQ = {"T": "TTT", "S": "ABABAB"}


@dataclass(frozen=True)
class FloatPoint:
    """Anchor known only numerically (SHIELD/1 `num` form)."""

    x: float
    y: float

    def xy(self, alpha_rad: float) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Placement:
    """One placed tile.

    anchor is a vertex of the tile (any corner of a triangle, a sharp
    A-corner of a shield); heading is the direction of the first boundary
    edge going counterclockwise.  Shield corner labels then alternate
    A,B,A,B,A,B along the walk.
    """

    kind: str  # "T" | "S"
    anchor: ExactPoint | FloatPoint
    heading: Direction

    @property
    def labels(self) -> str:
        return TILE_LABEL_SEQ[self.kind]

    @property
    def is_exact(self) -> bool:
        return isinstance(self.anchor, ExactPoint)

    def corner_dirs(self) -> list[tuple[str, Direction, SymbolicAngle]]:
        """Per corner: (label, outgoing edge direction, interior angle)."""
        return _corner_dirs(self.kind, self.heading.a, self.heading.b)

    def corner_points(self) -> list[ExactPoint]:
        """Exact corner positions (anchor first); exact anchors only."""
        pts = [self.anchor]
        p = self.anchor
        for _lab, d, _ang in self.corner_dirs()[:-1]:
            p = p.step(d)
            pts.append(p)
        return pts

    def corner_xy(self, alpha_rad: float) -> list[tuple[float, float]]:
        x, y = self.anchor.xy(alpha_rad)
        pts = [(x, y)]
        for _lab, d, _ang in self.corner_dirs()[:-1]:
            t = d.value(alpha_rad)
            x, y = x + math.cos(t), y + math.sin(t)
            pts.append((x, y))
        return pts

    def translated(self, vec: ExactPoint) -> "Placement":
        return Placement(self.kind, self.anchor + vec, self.heading)

    def rotated(self, ang: SymbolicAngle) -> "Placement":
        return Placement(self.kind, self.anchor.rotated(ang), self.heading.plus(ang))

    def reflected(self) -> "Placement":
        """Mirror image across the real axis, re-anchored CCW."""
        if self.kind == "T":
            h = Direction.of(-self.heading.a - 1, -self.heading.b)
        else:
            h = Direction.of(-self.heading.a, -self.heading.b - 1)
        return Placement(self.kind, self.anchor.conj(), h)

    def anchor_reps(self) -> list["Placement"]:
        """Equivalent placements re-anchored at each legal anchor corner."""
        pts = self.corner_points()
        dirs = self.corner_dirs()
        step = 1 if self.kind == "T" else 2
        reps = []
        for i in range(0, len(pts), step):
            reps.append(Placement(self.kind, pts[i], dirs[i][1]))
        return reps

    def canonical(self) -> "Placement":
        """Deterministic representative among the anchor choices."""
        return min(self.anchor_reps(), key=_placement_sort_key)


@lru_cache(maxsize=4096)
def _corner_dirs(kind, a, b):
    out = []
    d = Direction.of(a, b)
    labels = TILE_LABEL_SEQ[kind]
    for i, lab in enumerate(labels):
        ang = LABEL_ANGLES[lab]
        out.append((lab, d, ang))
        nxt = labels[(i + 1) % len(labels)]
        d = d.plus(HALF_TURN - LABEL_ANGLES[nxt])
    return out


def _placement_sort_key(pl: Placement):
    return (pl.kind, pl.anchor.coeffs, pl.heading.a, pl.heading.b)


def placement_with_corner(
    kind: str, corner_index: int, point: ExactPoint, d_out: Direction
) -> Placement:
    """Placement whose corner #corner_index sits at `point` with outgoing
    boundary direction d_out."""
    labels = TILE_LABEL_SEQ[kind]
    # walk backwards from the corner to the anchor
    d = d_out
    p = point
    for i in range(corner_index, 0, -1):
        d = d.plus(LABEL_ANGLES[labels[i]] - HALF_TURN)
        p = p - unit_vector(d)
    return Placement(kind, p, d)


@dataclass
class Violation:
    kind: str
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str):
        self.violations.append(Violation(kind, detail))

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "\n".join(f"{v.kind}: {v.detail}" for v in self.violations)


class _Vertex:
    __slots__ = ("point", "xy", "intervals")

    def __init__(self, point, xy):
        self.point = point
        self.xy = xy
        # interval: (start_rad, end_rad, start_dir, angle, tile_idx, label)
        # tile_idx is None for blocked (external) sectors
        self.intervals: list[tuple] = []


class VertexStar:
    """Read-only view of the corners around one vertex."""

    def __init__(self, patch: "Patch", vid: int):
        v = patch._vertices[vid]
        self.center = v.point
        self.center_xy = v.xy
        ivs = sorted(v.intervals)
        self.corners = [
            (iv[4], iv[5]) for iv in ivs if iv[4] is not None
        ]  # (tile index, label) in angular order
        self.word = "".join(lab for _t, lab in self.corners)
        total = SymbolicAngle(0, 0)
        for iv in ivs:
            total = total + iv[3]
        self.gap = FULL_TURN - total

    @property
    def canonical_word(self) -> str:
        return canonical_word(self.word)


class Patch:
    """A growing or frozen finite edge-to-edge arrangement."""

    def __init__(self, alpha: AlphaSpec):
        self.alpha = alpha
        self.eval_rad = alpha.eval_radians()
        self.exact_keys = alpha.kind == "generic"
        self.tiles: list[Placement] = []
        self._tile_vids: list[list[int]] = []
        self._tile_polys: list[tuple] = []
        self._vertices: list[_Vertex] = []
        self._key2vid: dict = {}
        self._snap: dict = {}  # cell -> list of vids, numeric alpha only
        self._edges: dict[tuple[int, int], list[int]] = {}
        self._tile_keys: set = set()
        self._grid: dict[tuple[int, int], list[int]] = {}
        self._vgrid: dict[tuple[int, int], list[int]] = {}
        self._atlas = atlas_words(alpha)
        self._frozen = False
        self._report: ValidationReport | None = None

    # -- vertex identification ------------------------------------------

    def _find_vid(self, xy, point=None):
        if self.exact_keys:
            return self._key2vid.get(point.coeffs)
        cx, cy = round(xy[0] / SNAP_CELL), round(xy[1] / SNAP_CELL)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for vid in self._snap.get((cx + dx, cy + dy), ()):
                    ex, ey = self._vertices[vid].xy
                    if abs(ex - xy[0]) < GEOM_TOL and abs(ey - xy[1]) < GEOM_TOL:
                        return vid
        return None

    def _get_or_make_vid(self, xy, point, journal=None):
        vid = self._find_vid(xy, point)
        if vid is not None:
            return vid
        vid = len(self._vertices)
        self._vertices.append(_Vertex(point, xy))
        if self.exact_keys:
            self._key2vid[point.coeffs] = vid
        else:
            cell = (round(xy[0] / SNAP_CELL), round(xy[1] / SNAP_CELL))
            self._snap.setdefault(cell, []).append(vid)
        vcell = (math.floor(xy[0] / 1.0), math.floor(xy[1] / 1.0))
        self._vgrid.setdefault(vcell, []).append(vid)
        if journal is not None:
            journal.append(("vertex", vid, point, xy, vcell))
        return vid

    # -- geometry helpers ------------------------------------------------

    def _tile_ids_near(self, x, y):
        cx, cy = math.floor(x / GRID), math.floor(y / GRID)
        out = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                out.extend(self._grid.get((cx + dx, cy + dy), ()))
        return out

    def _vids_near(self, x, y):
        cx, cy = math.floor(x), math.floor(y)
        out = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                out.extend(self._vgrid.get((cx + dx, cy + dy), ()))
        return out

    # -- construction ------------------------------------------------------

    def tile_xys(self, pl: Placement) -> list[tuple[float, float]]:
        return pl.corner_xy(self.eval_rad)

    def add_blocked(self, point: ExactPoint, start: Direction, ang: SymbolicAngle):
        """Reserve an angular sector at a vertex (used for region boundaries)."""
        if self._frozen:
            raise ValueError("patch is frozen")
        xy = point.xy(self.eval_rad)
        vid = self._get_or_make_vid(xy, point)
        s = start.value(self.eval_rad)
        e = s + ang.value(self.eval_rad)
        self._vertices[vid].intervals.append((s, e, start, ang, None, "#"))
        self._report = None
        return vid

    def add_tile(self, pl: Placement) -> list[int]:
        """Place a tile; raises and leaves the patch unchanged on conflict.

        Returns the vertex ids of the tile corners.
        """
        if self._frozen:
            raise ValueError("patch is frozen")
        if not pl.is_exact and self.exact_keys:
            raise ValueError("numeric anchors require numeric alpha")
        xys = self.tile_xys(pl)
        pts = pl.corner_points() if pl.is_exact else [None] * len(xys)
        dirs = pl.corner_dirs()
        key = None
        if pl.is_exact:
            key = _placement_sort_key(pl.canonical())
            if key in self._tile_keys:
                raise OverlapError("duplicate tile")

        # -- checks on a scratch view (no mutation yet) --
        vids = []
        new_pts = {}
        next_vid = len(self._vertices)
        for xy, pt in zip(xys, pts):
            vid = self._find_vid(xy, pt)
            if vid is None:
                # tentatively number unseen corners (dedup within the tile)
                for (oxy, ovid) in new_pts.items():
                    if abs(oxy[0] - xy[0]) < GEOM_TOL and abs(oxy[1] - xy[1]) < GEOM_TOL:
                        vid = ovid
                        break
            if vid is None:
                vid = next_vid
                new_pts[tuple(xy)] = vid
                next_vid += 1
            vids.append(vid)

        n = len(vids)
        # edge usage
        for i in range(n):
            u, v = vids[i], vids[(i + 1) % n]
            ek = (min(u, v), max(u, v))
            if len(self._edges.get(ek, ())) >= 2:
                raise OverlapError(f"edge {ek} already shared by two tiles")
        # T-junctions: new corners against old edges
        for xy in xys:
            for tid in self._tile_ids_near(*xy):
                poly = self._tile_polys[tid]
                m = len(poly) // 2
                for j in range(m):
                    ax, ay = poly[2 * j], poly[2 * j + 1]
                    bx, by = poly[(2 * j + 2) % (2 * m)], poly[(2 * j + 3) % (2 * m)]
                    d = gk.point_segment_dist(xy[0], xy[1], ax, ay, bx, by)
                    if d < GEOM_TOL:
                        if (
                            math.hypot(xy[0] - ax, xy[1] - ay) > GEOM_TOL
                            and math.hypot(xy[0] - bx, xy[1] - by) > GEOM_TOL
                        ):
                            raise EdgeMismatchError(
                                "tile corner lands inside an existing edge"
                            )
        # old corners against new edges
        flat = tuple(c for xy in xys for c in xy)
        for i in range(n):
            ax, ay = xys[i]
            bx, by = xys[(i + 1) % n]
            mx, my = (ax + bx) / 2, (ay + by) / 2
            for vid in self._vids_near(mx, my):
                px, py = self._vertices[vid].xy
                d = gk.point_segment_dist(px, py, ax, ay, bx, by)
                if d < GEOM_TOL:
                    if (
                        math.hypot(px - ax, py - ay) > GEOM_TOL
                        and math.hypot(px - bx, py - by) > GEOM_TOL
                    ):
                        raise EdgeMismatchError(
                            "existing vertex lies inside a new edge"
                        )
        # angular overlap at shared vertices
        new_intervals: list[tuple[int, tuple]] = []
        for (xy, vid, (lab, d_out, ang)) in zip(xys, vids, dirs):
            s = d_out.value(self.eval_rad)
            e = s + ang.value(self.eval_rad)
            if vid < len(self._vertices):
                for iv in self._vertices[vid].intervals:
                    if _circular_overlap(s, e, iv[0], iv[1]) > GEOM_TOL:
                        raise OverlapError("angular overlap at a shared vertex")
            new_intervals.append((vid, (s, e, d_out, ang, len(self.tiles), lab)))
        # polygon overlap against nearby tiles
        cxm = sum(x for x, _ in xys) / n
        cym = sum(y for _, y in xys) / n
        for tid in set(self._tile_ids_near(cxm, cym)):
            if gk.convex_overlap(flat, self._tile_polys[tid], GEOM_TOL):
                raise OverlapError(f"interior overlap with tile {tid}")
        # interior closure / atlas check (tentative star words)
        touched = {}
        for vid, iv in new_intervals:
            touched.setdefault(vid, []).append(iv)
        for vid, ivs in touched.items():
            if vid >= len(self._vertices):
                continue
            old = self._vertices[vid].intervals
            allivs = sorted(old + ivs)
            total = sum(iv[1] - iv[0] for iv in allivs)
            if total > TWO_PI + 1e-7:
                raise OverlapError("corner angles exceed a full turn")
            if abs(total - TWO_PI) < 1e-7:
                if any(iv[4] is None for iv in allivs):
                    continue  # blocked sectors are not atlas-checked
                word = canonical_word("".join(iv[5] for iv in allivs))
                if word not in self._atlas:
                    raise AtlasViolation(f"interior star {word} not in atlas")

        # -- commit --
        journal = []
        real_vids = []
        for xy, pt, vid in zip(xys, pts, vids):
            if vid >= len(self._vertices):
                got = self._get_or_make_vid(xy, pt, journal)
                # tentative numbering matches creation order
                assert got == vid, "vertex id mismatch"
            real_vids.append(vid)
        tidx = len(self.tiles)
        self.tiles.append(pl)
        self._tile_vids.append(real_vids)
        self._tile_polys.append(flat)
        if key is not None:
            self._tile_keys.add(key)
        for i in range(n):
            u, v = real_vids[i], real_vids[(i + 1) % n]
            ek = (min(u, v), max(u, v))
            self._edges.setdefault(ek, []).append(tidx)
        for vid, iv in new_intervals:
            self._vertices[vid].intervals.append(iv)
        cell = (math.floor(cxm / GRID), math.floor(cym / GRID))
        self._grid.setdefault(cell, []).append(tidx)
        self._journal_stack_push(journal, real_vids, key, cell)
        self._report = None
        return real_vids

    # journal of reversible effects, for backtracking search
    def _journal_stack_push(self, journal, vids, key, cell):
        if not hasattr(self, "_undo"):
            self._undo = []
        self._undo.append((journal, vids, key, cell))

    def pop_tile(self):
        """Undo the most recent add_tile."""
        journal, vids, key, cell = self._undo.pop()
        tidx = len(self.tiles) - 1
        pl = self.tiles.pop()
        self._tile_vids.pop()
        self._tile_polys.pop()
        if key is not None:
            self._tile_keys.discard(key)
        n = len(vids)
        for i in range(n):
            u, v = vids[i], vids[(i + 1) % n]
            ek = (min(u, v), max(u, v))
            self._edges[ek].remove(tidx)
            if not self._edges[ek]:
                del self._edges[ek]
        for vid in set(vids):
            vtx = self._vertices[vid]
            vtx.intervals = [iv for iv in vtx.intervals if iv[4] != tidx]
        self._grid[cell].remove(tidx)
        for entry in reversed(journal):
            _, vid, point, xy, vcell = entry
            assert vid == len(self._vertices) - 1
            self._vertices.pop()
            if self.exact_keys:
                del self._key2vid[point.coeffs]
            else:
                scell = (round(xy[0] / SNAP_CELL), round(xy[1] / SNAP_CELL))
                self._snap[scell].remove(vid)
            self._vgrid[vcell].remove(vid)
        self._report = None

    def freeze(self):
        self._frozen = True

    # -- queries -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.tiles)

    def has_tile(self, pl: Placement) -> bool:
        if not pl.is_exact:
            return False
        return _placement_sort_key(pl.canonical()) in self._tile_keys

    def add_vertex(self, point: ExactPoint) -> int:
        """Register a bare vertex (a center with no tiles yet)."""
        return self._get_or_make_vid(point.xy(self.eval_rad), point)

    def vertex_ids(self) -> range:
        return range(len(self._vertices))

    def vertex_xy(self, vid: int):
        return self._vertices[vid].xy

    def vertex_point(self, vid: int):
        return self._vertices[vid].point

    def star(self, vid: int) -> VertexStar:
        return VertexStar(self, vid)

    def total_angle(self, vid: int) -> float:
        return sum(iv[1] - iv[0] for iv in self._vertices[vid].intervals)

    def is_interior(self, vid: int) -> bool:
        return abs(self.total_angle(vid) - TWO_PI) < 1e-7

    def interior_word(self, vid: int) -> str | None:
        if not self.is_interior(vid):
            return None
        ivs = sorted(self._vertices[vid].intervals)
        if any(iv[4] is None for iv in ivs):
            return None
        return canonical_word("".join(iv[5] for iv in ivs))

    def gaps(self, vid: int) -> list[tuple[Direction, SymbolicAngle, float]]:
        """Open angular gaps at a vertex: (start direction, extent, extent rad).

        The start direction of a gap is the end ray of the interval that
        precedes it counterclockwise.
        """
        ivs = sorted(self._vertices[vid].intervals)
        if not ivs:
            return []
        total = sum(iv[1] - iv[0] for iv in ivs)
        if abs(total - TWO_PI) < 1e-7:
            return []
        out = []
        m = len(ivs)
        for i in range(m):
            s, e, start, ang, _t, _lab = ivs[i]
            nxt = ivs[(i + 1) % m]
            gap_num = (nxt[0] - e) % TWO_PI
            if i == m - 1:
                gap_num = (ivs[0][0] + TWO_PI - e) % TWO_PI
            # values within rounding error of 0 or 2*pi mean no gap
            if gap_num < 1e-7 or gap_num > TWO_PI - 1e-7:
                continue
            end_dir = start.plus(ang)
            raw = nxt[2].minus(end_dir)
            # normalize the symbolic extent to match the numeric gap
            k = round((gap_num - raw.value(self.eval_rad)) / TWO_PI)
            gap_sym = SymbolicAngle(raw.a + 6 * k, raw.b)
            out.append((end_dir, gap_sym, gap_num))
        return out

    def boundary_edges(self):
        return [ek for ek, ts in self._edges.items() if len(ts) == 1]

    def edge_tiles(self, ek):
        return self._edges.get(ek, [])

    def star_blocks(self, vid: int):
        """Cyclic (word | gap) blocks at a vertex, for atlas matching."""
        ivs = sorted(self._vertices[vid].intervals)
        blocks = []
        m = len(ivs)
        run = ""
        for i in range(m):
            s, e, start, ang, tidx, lab = ivs[i]
            run += lab
            nxt = ivs[(i + 1) % m]
            gap_num = (nxt[0] - e) % TWO_PI
            if i == m - 1:
                gap_num = (ivs[0][0] + TWO_PI - e) % TWO_PI
            if 1e-7 < gap_num < TWO_PI - 1e-7:
                blocks.append(("word", run))
                run = ""
                end_dir = start.plus(ang)
                raw = nxt[2].minus(end_dir)
                k = round((gap_num - raw.value(self.eval_rad)) / TWO_PI)
                blocks.append(("gap", SymbolicAngle(raw.a + 6 * k, raw.b)))
        if run:
            # the star wraps with no gap at the seam: merge into first block
            if blocks and blocks[0][0] == "word":
                blocks[0] = ("word", run + blocks[0][1])
            else:
                blocks.insert(0, ("word", run))
        return blocks

    # -- validation ----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Full re-check of all structural invariants."""
        if self._report is not None:
            return self._report
        rep = ValidationReport()
        # tile boundary closure (exact where possible)
        for i, pl in enumerate(self.tiles):
            if pl.is_exact:
                p = pl.anchor
                for _lab, d, _ang in pl.corner_dirs():
                    p = p.step(d)
                if self.exact_keys and p != pl.anchor:
                    rep.add("closure", f"tile {i} boundary does not close")
                elif not self.exact_keys:
                    ax, ay = pl.anchor.xy(self.eval_rad)
                    px, py = p.xy(self.eval_rad)
                    if math.hypot(px - ax, py - ay) > GEOM_TOL:
                        rep.add("closure", f"tile {i} boundary does not close")
        # edges shared by at most two tiles, endpoint to endpoint
        for ek, ts in self._edges.items():
            if len(ts) > 2:
                rep.add("edge_overuse", f"edge {ek} has {len(ts)} tiles")
        # pairwise interior overlap via the spatial hash
        for i in range(len(self.tiles)):
            xi = self._tile_polys[i]
            cx = sum(xi[0::2]) / (len(xi) // 2)
            cy = sum(xi[1::2]) / (len(xi) // 2)
            for j in self._tile_ids_near(cx, cy):
                if j >= i:
                    continue
                if gk.convex_overlap(xi, self._tile_polys[j], GEOM_TOL):
                    rep.add("overlap", f"tiles {j} and {i} overlap")
        # interior vertex stars belong to the atlas
        for vid in self.vertex_ids():
            v = self._vertices[vid]
            total = sum(iv[1] - iv[0] for iv in v.intervals)
            if total > TWO_PI + 1e-7:
                rep.add("overlap", f"vertex {vid} corners exceed a full turn")
            elif abs(total - TWO_PI) < 1e-7:
                if any(iv[4] is None for iv in v.intervals):
                    continue
                word = canonical_word(
                    "".join(iv[5] for iv in sorted(v.intervals))
                )
                if word not in self._atlas:
                    rep.add("atlas", f"vertex {vid} star {word} not in atlas")
                # generic alpha: re-check the closure symbolically
                if self.exact_keys:
                    tot = SymbolicAngle(0, 0)
                    for iv in v.intervals:
                        tot = tot + iv[3]
                    if tot != FULL_TURN:
                        rep.add("closure", f"vertex {vid} star sum != 2pi")
        self._report = rep
        return rep

    def require_valid(self):
        if not self.validate().ok:
            raise NotValidated(str(self._report))

    # -- pattern balls ---------------------------------------------------

    def extract_ball(self, vid: int, n: float) -> "PatternBall":
        """All tiles whose closed region meets the closed disk of radius n.

        Raises IncompleteCoverage unless every tile that could meet the
        disk is determined, i.e. no patch-boundary edge comes within n of
        the center.
        """
        cx, cy = self._vertices[vid].xy
        for (u, v) in self.boundary_edges():
            ax, ay = self._vertices[u].xy
            bx, by = self._vertices[v].xy
            if gk.point_segment_dist(cx, cy, ax, ay, bx, by) <= n + GEOM_TOL:
                raise IncompleteCoverage(
                    f"patch boundary within radius {n} of the center"
                )
        if not self._vertices[vid].intervals:
            raise IncompleteCoverage("center vertex has no tiles")
        tiles = [
            pl
            for pl, poly in zip(self.tiles, self._tile_polys)
            if gk.poly_point_dist(poly, cx, cy) <= n + 1e-9
        ]
        return PatternBall(
            alpha=self.alpha,
            center=self._vertices[vid].point,
            center_xy=(cx, cy),
            radius=n,
            tiles=tuple(tiles),
        )


def _circular_overlap(s1, e1, s2, e2) -> float:
    """Overlap length of two angular intervals given as (start, start+len)."""
    best = 0.0
    for shift in (-TWO_PI, 0.0, TWO_PI):
        lo = max(s1, s2 + shift)
        hi = min(e1, e2 + shift)
        if hi - lo > best:
            best = hi - lo
    return best


# ---------------------------------------------------------------------------
# Pattern balls and canonical keys
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PatternBall:
    """The sub-patch of tiles within distance `radius` of a center vertex."""

    alpha: AlphaSpec
    center: ExactPoint | FloatPoint | None
    center_xy: tuple[float, float]
    radius: float
    tiles: tuple[Placement, ...]

    def key(self) -> str:
        return canonical_key(self)

    def translation_key(self) -> str:
        """Pattern identity up to translation only (no rotation/reflection)."""
        return canonical_key(self, rotations=False)

    def orbit_translation_keys(self) -> frozenset:
        """Translation keys of every image of the ball under the point
        isometries compatible with its own edge directions."""
        return frozenset(_key_candidates(self, rotations=True))


def canonical_key(ball: PatternBall, rotations: bool = True) -> str:
    """Canonical string equal for two balls iff they are isometric.

    Brute force over a bounded frame set: every edge direction of the ball
    (after optional reflection) defines a candidate rotation; tiles are
    serialized sorted and the lexicographic minimum is returned.
    """
    return min(_key_candidates(ball, rotations))


def _key_candidates(ball: PatternBall, rotations: bool):
    if ball.alpha.kind == "generic" and all(t.is_exact for t in ball.tiles):
        return _key_candidates_exact(ball, rotations)
    return _key_candidates_numeric(ball, rotations)


def _key_candidates_exact(ball: PatternBall, rotations: bool) -> list[str]:
    center = ball.center
    base = [t.translated(-center) for t in ball.tiles]
    variants = [base, [t.reflected() for t in base]] if rotations else [base]
    out = []
    for tiles in variants:
        if rotations:
            dirs = set()
            for t in tiles:
                for _lab, d, _ang in t.corner_dirs():
                    dirs.add((d.a, d.b))
                    o = d.opposite()
                    dirs.add((o.a, o.b))
            frames = [SymbolicAngle(-a, -b) for a, b in sorted(dirs)]
        else:
            frames = [SymbolicAngle(0, 0)]
        for rot in frames:
            ser = sorted(_serialize_exact(t.rotated(rot)) for t in tiles)
            out.append(";".join(ser))
    return out


def _serialize_exact(pl: Placement) -> str:
    pl = pl.canonical()
    cs = ",".join(f"{b}:{u}:{v}" for b, u, v in pl.anchor.coeffs)
    return f"{pl.kind}|{cs}|{pl.heading.a},{pl.heading.b}"


def _key_candidates_numeric(ball: PatternBall, rotations: bool) -> list[str]:
    rad = ball.alpha.eval_radians()
    cx, cy = ball.center_xy
    tiles = []
    for t in ball.tiles:
        pts = [(x - cx, y - cy) for x, y in t.corner_xy(rad)]
        tiles.append((t.kind, pts))
    variants = [tiles]
    if rotations:
        mirrored = []
        for kind, pts in tiles:
            mp = [(x, -y) for x, y in pts]
            # reversing restores CCW order; labels still start at an anchor
            mp = [mp[0]] + mp[:0:-1]
            mirrored.append((kind, mp))
        variants.append(mirrored)
    out = []
    for var in variants:
        if rotations:
            angles = set()
            for _kind, pts in var:
                m = len(pts)
                for i in range(m):
                    ax, ay = pts[i]
                    bx, by = pts[(i + 1) % m]
                    angles.add(round(math.atan2(by - ay, bx - ax), 9))
        else:
            angles = {0.0}
        for theta in sorted(angles):
            c, s = math.cos(-theta), math.sin(-theta)
            ser = []
            for kind, pts in var:
                rp = [(x * c - y * s, x * s + y * c) for x, y in pts]
                ser.append(_serialize_numeric(kind, rp))
            out.append(";".join(sorted(ser)))
    return out


def _serialize_numeric(kind: str, pts) -> str:
    step = 1 if kind == "T" else 2
    reps = []
    for i in range(0, len(pts), step):
        cycle = pts[i:] + pts[:i]
        reps.append(
            kind
            + "|"
            + ",".join(f"{round(x, 6) + 0.0:.6f}:{round(y, 6) + 0.0:.6f}" for x, y in cycle)
        )
    return min(reps)

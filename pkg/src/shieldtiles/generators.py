"""Window generators for the known tiling families.

All anchor arithmetic is exact; the stacking offsets and lattice vectors
below were located by exhaustive search over small coefficient maps and
are pinned by the test suite (seam vertex census, validation at sampled
angles, classification round trips).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .alpha import AlphaSpec, make_alpha
from .errors import MissingChoice, ShieldError
from .patch import Patch, Placement
from .patterns import dodecagon_fillings, dodecagon_vertices, fill_disk
from .symbolic import Direction, ExactPoint, SymbolicAngle, unit_vector

EP = ExactPoint.from_dict
ORIGIN = EP({})

# translation carrying a shield of a line to the next shield of that line
LINE_PERIOD = EP({0: (0, 1), 1: (1, -1)})

# offset from a line's base shield to the base shield of the line above,
# by (sign below, sign above); opposite signs meet in a fault seam
STACK_OFFSET = {
    ("+", "+"): EP({0: (-1, 1), 1: (1, 0)}),
    ("-", "-"): EP({0: (-1, 1), 1: (1, 0)}),
    ("+", "-"): EP({1: (1, 1)}),
    ("-", "+"): EP({0: (-2, 1)}),
}

LINE_HEADING = {"+": Direction.of(0, 0), "-": Direction.of(3, 0)}

# translation between nearest hex centers of the order-k triangle tiling
def hex_lattice_vector(k: int) -> ExactPoint:
    return EP({0: (k + 1, 0), 1: (0, -k)})


def _fill_unit_gaps(patch: Patch):
    """Place the forced triangle wherever an angular gap is exactly pi/3."""
    third = math.pi / 3.0
    while True:
        progress = False
        for vid in list(patch.vertex_ids()):
            for (d, _sym, gn) in patch.gaps(vid):
                if abs(gn - third) < 1e-9:
                    try:
                        patch.add_tile(Placement("T", patch.vertex_point(vid), d))
                        progress = True
                    except ShieldError:
                        pass
        if not progress:
            return


def gen_line_tiling(word: str, extent: int, alpha: AlphaSpec) -> Patch:
    """Window of stacked shield lines, orientation letters bottom to top.

    Each line holds 2*extent+1 shields joined tip to tip; junction
    triangles and seam triangles are the forced pi/3 fillers.
    """
    if not word or any(c not in "+-" for c in word):
        raise ValueError("orientation word must be a non-empty string of + and -")
    if extent < 1:
        raise ValueError("extent must be >= 1")
    patch = Patch(alpha)
    base = ORIGIN
    for i, sign in enumerate(word):
        for k in range(-extent, extent + 1):
            patch.add_tile(
                Placement("S", base + LINE_PERIOD.scaled(k), LINE_HEADING[sign])
            )
        if i + 1 < len(word):
            base = base + STACK_OFFSET[(sign, word[i + 1])]
    _fill_unit_gaps(patch)
    patch.require_valid()
    patch.freeze()
    return patch


def _seed_hex(patch: Patch, center: ExactPoint, with_ring: bool):
    for j in range(6):
        t = Placement("T", center, Direction.of(j, 0))
        if not patch.has_tile(t):
            patch.add_tile(t)
    if not with_ring:
        return
    for j in range(6):
        s = Placement(
            "S", center + unit_vector(Direction.of(j, 0)), Direction.of(4 + j, 0)
        )
        if not patch.has_tile(s):
            patch.add_tile(s)


def _lattice_points(v1: ExactPoint, v2: ExactPoint, reach: float, rad: float):
    """Integer combinations i*v1 + j*v2 with |point| <= reach."""
    x1, y1 = v1.xy(rad)
    x2, y2 = v2.xy(rad)
    pitch = min(math.hypot(x1, y1), math.hypot(x2, y2))
    m = int(reach / pitch * 2.0) + 2
    out = []
    for i in range(-m, m + 1):
        for j in range(-m, m + 1):
            x = i * x1 + j * x2
            y = i * y1 + j * y2
            if math.hypot(x, y) <= reach + 1e-9:
                out.append((i, j, v1.scaled(i) + v2.scaled(j)))
    return out


def gen_triangle_tiling(order, extent: int, alpha: AlphaSpec) -> Patch:
    """Window of the order-k shield triangle tiling around a hex vertex.

    order 0 is the plain triangular grid; math.inf gives the limit tiling
    (realized as a window of a finite order too large for a second hex
    center to be visible).
    """
    if extent < 1:
        raise ValueError("extent must be >= 1")
    if order == math.inf:
        order = 2 * extent + 1
    if not isinstance(order, int) or order < 0:
        raise ValueError("order must be a non-negative integer or math.inf")
    patch = Patch(alpha)
    if order == 0:
        reach = extent + 2.0
        m = int(reach) + 2
        rad = patch.eval_rad
        for u in range(-m, m + 1):
            for v in range(-m, m + 1):
                c = EP({0: (u, v)})
                x, y = c.xy(rad)
                if math.hypot(x, y) <= reach:
                    _seed_hex(patch, c, with_ring=False)
        patch.require_valid()
        patch.freeze()
        return patch

    v1 = hex_lattice_vector(order)
    v2 = v1.rotated(SymbolicAngle(1, 0))
    rad = patch.eval_rad
    centers = _lattice_points(v1, v2, extent + 3.0, rad)
    whitelist = set()
    for _i, _j, c in centers:
        _seed_hex(patch, c, with_ring=True)
        whitelist.add(patch.add_vertex(c))

    def no_stray_hex(p: Patch, _cand, vids) -> bool:
        # three or more triangle corners at a vertex force a hex there
        for v in set(vids):
            if v in whitelist:
                continue
            t_corners = sum(
                1 for iv in p._vertices[v].intervals if iv[5] == "T"
            )
            if t_corners >= 3:
                return False
        return True

    center_vid = patch.add_vertex(ORIGIN)
    done = fill_disk(
        patch, center_vid, extent + 0.5, tile_filter=no_stray_hex, first_only=True
    )
    if not done:
        raise ShieldError("triangle tiling window completion failed")
    patch.require_valid()
    patch.freeze()
    return patch


@dataclass
class DodecagonChoice:
    """Filling index per dodecagon cell of the triangular-grid packing."""

    assignment: dict = field(default_factory=dict)
    default: int | None = None

    @classmethod
    def constant(cls, index: int) -> "DodecagonChoice":
        return cls(assignment={}, default=index)

    def index_for(self, cell) -> int:
        if cell in self.assignment:
            return self.assignment[cell]
        if self.default is not None:
            return self.default
        raise MissingChoice(f"no filling chosen for dodecagon cell {cell}")


# translation between nearest dodecagon centers of the packing
DODECAGON_NORTH = EP({0: (-1, 2), 1: (2, 0)})


def gen_dodecagon_tiling(choice: DodecagonChoice, extent: int) -> Patch:
    """Window of a right-shield tiling built from the dodecagon packing.

    Dodecagons sit on a triangular grid, each filled per `choice`; the
    triangular holes of the packing are the forced pi/3 fillers.
    """
    if extent < 1:
        raise ValueError("extent must be >= 1")
    alpha = make_alpha("rational", 1, 2)
    fillings = dodecagon_fillings()
    v1 = DODECAGON_NORTH
    v2 = v1.rotated(SymbolicAngle(1, 0))
    patch = Patch(alpha)
    rad = patch.eval_rad
    circum = 0.5 / math.sin(math.pi / 12.0)
    # anchor-to-center offset of the base dodecagon
    verts = dodecagon_vertices(ORIGIN)
    cx = sum(p.xy(rad)[0] for p in verts) / 12.0
    cy = sum(p.xy(rad)[1] for p in verts) / 12.0
    reach = extent + circum + math.hypot(cx, cy) + 1.0
    for i, j, base in _lattice_points(v1, v2, reach, rad):
        bx, by = base.xy(rad)
        if math.hypot(bx + cx, by + cy) > extent + circum + 1e-9:
            continue
        idx = choice.index_for((i, j))
        for t in fillings[idx].tiles:
            patch.add_tile(t.translated(base))
    _fill_unit_gaps(patch)
    patch.require_valid()
    patch.freeze()
    return patch

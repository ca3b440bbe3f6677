"""Decide which tiling family a finite window is consistent with.

The decision follows the structure of the plane classification: no hex
vertex means stacked shield lines (read off the orientation word); hex
vertices must sit on a triangular lattice whose spacing gives the order.
A window can under-determine parameters, reported via `complete=False`,
or contradict both families, reported as Inconclusive.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

from .alpha import AlphaSpec
from .atlas import VertexConfig
from .errors import NotValidated
from .generators import hex_lattice_vector
from .patch import Patch

_TOL = 1e-6

HEX_WORD = "TTTTTT"
BOWTIE_WORD = "ATBT"
FAULT_WORD = "ABTT"


def vertex_census(patch: Patch) -> dict[VertexConfig, list[int]]:
    """Interior vertices grouped by their configuration."""
    if not patch.validate().ok:
        raise NotValidated(str(patch.validate()))
    out: dict[VertexConfig, list[int]] = defaultdict(list)
    for vid in patch.vertex_ids():
        word = patch.interior_word(vid)
        if word is not None:
            out[VertexConfig(word)].append(vid)
    return dict(out)


# ---------------------------------------------------------------------------
# Fault lines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Terminus:
    kind: str  # "HexVertex" | "PatchBoundary"
    vertex: int | None = None


@dataclass(frozen=True)
class FaultLine:
    vertices: tuple[int, ...]
    direction: tuple[float, float]  # unit vector along the mean chain axis
    termini: tuple[Terminus, Terminus]


def _spine_steps(patch: Patch, v: int):
    """The shield-shield and triangle-triangle edges out of a fault vertex."""
    ss = tt = None
    for (u, w), ts in patch._edges.items():
        if v not in (u, w) or len(ts) != 2:
            continue
        kinds = sorted(patch.tiles[t].kind for t in ts)
        other = w if u == v else u
        if kinds == ["S", "S"]:
            ss = other
        elif kinds == ["T", "T"]:
            tt = other
    return ss, tt


def _walk(patch: Patch, faults: set[int], start: int, via: str):
    """Follow the chain from `start` through its `via` spine ('SS'|'TT')."""
    chain = []
    v, use = start, via
    while True:
        ss, tt = _spine_steps(patch, v)
        nxt = ss if use == "SS" else tt
        if nxt is None:
            return chain, Terminus("PatchBoundary")
        if patch.interior_word(nxt) == HEX_WORD:
            return chain, Terminus("HexVertex", nxt)
        if nxt not in faults:
            return chain, Terminus("PatchBoundary")
        chain.append(nxt)
        v = nxt
        use = "TT" if use == "SS" else "SS"


def trace_fault_line(patch: Patch, v: int) -> FaultLine:
    """Maximal chain of fault vertices through v (SS and TT spines
    alternate along the chain)."""
    if patch.interior_word(v) != FAULT_WORD:
        raise ValueError(f"vertex {v} is not an interior fault vertex")
    faults = {
        w for w in patch.vertex_ids() if patch.interior_word(w) == FAULT_WORD
    }
    fwd, t_fwd = _walk(patch, faults, v, "SS")
    bwd, t_bwd = _walk(patch, faults, v, "TT")
    verts = list(reversed(bwd)) + [v] + fwd
    termini = (t_bwd, t_fwd)
    # orient deterministically: lower endpoint coordinates first
    first = patch.vertex_xy(verts[0])
    last = patch.vertex_xy(verts[-1])
    if (round(first[0], 6), round(first[1], 6)) > (round(last[0], 6), round(last[1], 6)):
        verts.reverse()
        termini = (termini[1], termini[0])
    ax, ay = patch.vertex_xy(verts[0])
    bx, by = patch.vertex_xy(verts[-1])
    if len(verts) > 1:
        norm = math.hypot(bx - ax, by - ay)
        direction = ((bx - ax) / norm, (by - ay) / norm)
    else:
        direction = (1.0, 0.0)
    return FaultLine(tuple(verts), direction, termini)


def fault_lines(patch: Patch) -> list[FaultLine]:
    """All maximal fault chains, each reported once."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for v in patch.vertex_ids():
        if patch.interior_word(v) != FAULT_WORD:
            continue
        fl = trace_fault_line(patch, v)
        if fl.vertices in seen:
            continue
        seen.add(fl.vertices)
        out.append(fl)
    return out


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    family: str  # "Line" | "Triangle" | "Inconclusive"
    word: str | None = None  # Line: canonical orientation word
    order: object = None  # Triangle: k or math.inf
    complete: bool = False
    reason: str | None = None

    def __str__(self) -> str:
        if self.family == "Line":
            return f"Line(word={self.word}, complete={self.complete})"
        if self.family == "Triangle":
            o = "inf" if self.order == math.inf else self.order
            return f"Triangle(order={o}, complete={self.complete})"
        return f"Inconclusive({self.reason})"


def canonical_orientation_word(word: str) -> str:
    """Line tilings are unchanged by reversing the stack or flipping every
    line, so the word is reported as the least of the four images."""
    flip = word.translate(str.maketrans("+-", "-+"))
    return min(word, word[::-1], flip, flip[::-1])


def _shield_centroids(patch: Patch):
    rad = patch.eval_rad
    out = []
    for i, t in enumerate(patch.tiles):
        if t.kind != "S":
            continue
        pts = t.corner_xy(rad)
        out.append((i, (sum(x for x, _ in pts) / 6.0, sum(y for _, y in pts) / 6.0)))
    return out


def _tip_adjacency(patch: Patch, cents):
    """Shield pairs sharing a vertex but no edge (tip-to-tip junctions),
    grouped by the undirected direction of the center-to-center segment."""
    vert_tiles: dict[int, list[int]] = defaultdict(list)
    for tid, vids in enumerate(patch._tile_vids):
        if patch.tiles[tid].kind != "S":
            continue
        for v in set(vids):
            vert_tiles[v].append(tid)
    edge_pairs = {
        frozenset(ts) for ts in patch._edges.values() if len(ts) == 2
    }
    by_axis: dict[float, list[tuple[int, int]]] = defaultdict(list)
    for tids in vert_tiles.values():
        for i in range(len(tids)):
            for j in range(i + 1, len(tids)):
                a, b = tids[i], tids[j]
                if frozenset((a, b)) in edge_pairs:
                    continue  # edge-sharing shields face a fault seam
                (ax, ay), (bx, by) = cents[a], cents[b]
                axis = round(math.atan2(by - ay, bx - ax) % math.pi, 6)
                by_axis[axis].append((a, b))
    # merge antipodal rounding artifacts near pi
    keys = sorted(by_axis)
    if len(keys) > 1 and keys[-1] - keys[0] > math.pi - 1e-5:
        by_axis[keys[0]].extend(by_axis.pop(keys[-1]))
    return by_axis


def _chains_along(cents, pairs):
    adj: dict[int, set[int]] = defaultdict(set)
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    chains = []
    for s in cents:
        if s in seen:
            continue
        stack, members = [s], []
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            members.append(u)
            stack.extend(adj[u])
        if any(len(adj[m]) > 2 for m in members):
            return None
        chains.append(members)
    return chains


def _classify_lines(patch: Patch) -> Classification:
    cents = dict(_shield_centroids(patch))
    if not cents:
        return Classification("Inconclusive", reason="no shields in window")
    by_axis = _tip_adjacency(patch, cents)
    # the line direction of a uniform window is three-fold ambiguous; try
    # each junction axis and keep the stripe decomposition with the fewest
    # lines (maximal chaining)
    candidates = []
    axes = sorted(by_axis) or [0.0]
    for axis in axes:
        chains = _chains_along(cents, by_axis.get(axis, []))
        if chains is None:
            continue
        verdict = _read_word(patch, cents, chains, axis)
        if verdict is not None:
            candidates.append((len(chains), axis, verdict))
    if not candidates:
        return Classification(
            "Inconclusive", reason="shields admit no parallel stripe decomposition"
        )
    candidates.sort(key=lambda c: (c[0], c[1]))
    return candidates[0][2]


def _read_word(patch: Patch, cents, chains, axis):
    """Orientation word of a stripe decomposition, or None if invalid."""
    signs = {}
    ref = patch.tiles[chains[0][0]].canonical().heading
    for idx, members in enumerate(chains):
        sgs = set()
        for m in members:
            h = patch.tiles[m].canonical().heading
            da, db = h.a - ref.a, h.b - ref.b
            if db % 2 != 0:
                return None
            sgs.add("+" if (da + 3 * (db // 2)) % 2 == 0 else "-")
        if len(sgs) != 1:
            return None  # mixed orientations within one chain
        signs[idx] = sgs.pop()
    nx, ny = -math.sin(axis), math.cos(axis)
    projs = []
    for idx, members in enumerate(chains):
        vals = [cents[m][0] * nx + cents[m][1] * ny for m in members]
        if max(vals) - min(vals) > 0.25:
            return None  # chain not perpendicular to the normal
        projs.append((sum(vals) / len(vals), idx))
    projs.sort()
    for (p1, _), (p2, _) in zip(projs, projs[1:]):
        if p2 - p1 < 0.5:
            return None  # two stripes in the same band
    word = canonical_orientation_word(
        "".join(signs[idx] for _p, idx in projs)
    )
    if len(set(word)) == 1:
        # a uniform window cannot pin the stacking; report one letter
        return Classification("Line", word=word[0], complete=False)
    return Classification("Line", word=word, complete=True)


def _classify_triangles(patch: Patch, hexes: list[int], alpha: AlphaSpec) -> Classification:
    shields = any(t.kind == "S" for t in patch.tiles)
    if not shields:
        return Classification("Triangle", order=0, complete=True)
    pts = [patch.vertex_xy(v) for v in hexes]
    if len(pts) == 1:
        return Classification("Triangle", order=math.inf, complete=False)
    d_min = min(
        math.hypot(ax - bx, ay - by)
        for i, (ax, ay) in enumerate(pts)
        for (bx, by) in pts[i + 1 :]
    )
    rad = patch.eval_rad
    order = None
    for k in range(1, 200):
        lx, ly = hex_lattice_vector(k).xy(rad)
        if abs(math.hypot(lx, ly) - d_min) < _TOL:
            order = k
            break
    if order is None:
        return Classification(
            "Inconclusive", reason="hex spacing matches no lattice order"
        )
    # all pairwise hex distances must be triangular-lattice distances
    for i, (ax, ay) in enumerate(pts):
        for (bx, by) in pts[i + 1 :]:
            q = (math.hypot(ax - bx, ay - by) / d_min) ** 2
            if abs(q - round(q)) > 1e-4 or not _loeschian(round(q)):
                return Classification(
                    "Inconclusive",
                    reason="hex vertices not on a triangular lattice",
                )
    return Classification("Triangle", order=order, complete=True)


def _loeschian(m: int) -> bool:
    """m = i*i + i*j + j*j for some integers i, j >= 0."""
    for i in range(int(math.isqrt(m)) + 1):
        for j in range(i, int(math.isqrt(m)) + 1):
            if i * i + i * j + j * j == m:
                return True
    return False


def classify(patch: Patch) -> Classification:
    """Family verdict for a finite window."""
    if patch.alpha.right_shield:
        return Classification(
            "Inconclusive", reason="right shield out of classification scope"
        )
    if not patch.validate().ok:
        raise NotValidated(str(patch.validate()))
    census = vertex_census(patch)
    words = {cfg.word for cfg in census}
    if not words:
        return Classification(
            "Inconclusive", reason="window has no interior vertex"
        )
    stray = words - {HEX_WORD, BOWTIE_WORD, FAULT_WORD}
    if stray:
        return Classification(
            "Inconclusive", reason=f"unexpected interior configurations {sorted(stray)}"
        )
    hexes = [
        v for cfg, vs in census.items() if cfg.word == HEX_WORD for v in vs
    ]
    if hexes:
        return _classify_triangles(patch, hexes, patch.alpha)
    return _classify_lines(patch)

"""Vertex configuration atlas.

At a tiling vertex, p sharp shield corners (A), q wide shield corners (B)
and r triangle corners (T) must satisfy p*alpha + q*beta + r*pi/3 = 2*pi.
Since alpha > pi/3 forces p <= 5, beta > 2*pi/3 forces q <= 2 and r <= 6,
the search space is a small box and the atlas is computed by exhaustion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .alpha import AlphaSpec, make_alpha
from .symbolic import (
    ANGLE_A,
    ANGLE_B,
    ANGLE_T,
    SymbolicAngle,
    angle_units,
    full_turn_check,
)

LABEL_ANGLES = {"A": ANGLE_A, "B": ANGLE_B, "T": ANGLE_T}
LABEL_ORDER = "ABT"

P_MAX, Q_MAX, R_MAX = 5, 2, 6


@dataclass(frozen=True, order=True)
class VertexCounts:
    """Corner multiplicities at a full vertex."""

    p: int  # A corners
    q: int  # B corners
    r: int  # T corners

    def angles(self) -> list[SymbolicAngle]:
        return [ANGLE_A] * self.p + [ANGLE_B] * self.q + [ANGLE_T] * self.r

    def word_multiset(self) -> str:
        return "A" * self.p + "B" * self.q + "T" * self.r


def canonical_word(word: str) -> str:
    """Least representative of a cyclic word under rotation and reflection."""
    n = len(word)
    if n == 0:
        return word
    best = None
    for w in (word, word[::-1]):
        for i in range(n):
            cand = w[i:] + w[:i]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class VertexConfig:
    """A cyclic corner word around a vertex, stored in canonical form."""

    word: str

    def __post_init__(self):
        object.__setattr__(self, "word", canonical_word(self.word))

    def counts(self) -> VertexCounts:
        return VertexCounts(
            self.word.count("A"), self.word.count("B"), self.word.count("T")
        )

    def angles(self) -> list[SymbolicAngle]:
        return [LABEL_ANGLES[c] for c in self.word]

    def __str__(self) -> str:
        return " ".join(self.word)


HEX = VertexConfig("TTTTTT")
BOWTIE = VertexConfig("ATBT")
FAULT = VertexConfig("ABTT")
GENERIC_CONFIGS = frozenset({HEX, BOWTIE, FAULT})


def solve_vertex_equation(alpha: AlphaSpec) -> set[VertexCounts]:
    """All (p, q, r) with p*alpha + q*beta + r*pi/3 = 2*pi for this alpha."""
    out = set()
    for p in range(P_MAX + 1):
        for q in range(Q_MAX + 1):
            for r in range(R_MAX + 1):
                if p + q + r == 0:
                    continue
                angles = [ANGLE_A] * p + [ANGLE_B] * q + [ANGLE_T] * r
                if full_turn_check(angles, alpha):
                    out.add(VertexCounts(p, q, r))
    return out


def configs_from_counts(c: VertexCounts) -> set[VertexConfig]:
    """All distinct cyclic arrangements of the corner multiset."""
    return {VertexConfig("".join(p)) for p in permutations(c.word_multiset())}


@lru_cache(maxsize=None)
def _atlas_cached(alpha_key, alpha: AlphaSpec) -> frozenset[VertexConfig]:
    configs = set()
    for c in solve_vertex_equation(alpha):
        configs |= configs_from_counts(c)
    return frozenset(configs)


def atlas_configs(alpha: AlphaSpec) -> frozenset[VertexConfig]:
    return _atlas_cached(alpha.key(), alpha)


def atlas_words(alpha: AlphaSpec) -> frozenset[str]:
    return frozenset(c.word for c in atlas_configs(alpha))


def exceptional_alphas(include_right: bool = False) -> dict[AlphaSpec, VertexCounts]:
    """Alphas admitting extra configurations, each with one witness triple.

    Scans p != q within the bounds, solving alpha = pi*(6-4q-r)/(3(p-q)) and
    keeping values strictly inside (pi/3, 2pi/3).  alpha = pi/2 is excluded
    unless include_right is set.
    """
    found: dict[AlphaSpec, VertexCounts] = {}
    for p in range(P_MAX + 1):
        for q in range(Q_MAX + 1):
            if p == q:
                continue
            for r in range(R_MAX + 1):
                frac = Fraction(6 - 4 * q - r, 3 * (p - q))
                if not Fraction(1, 3) < frac < Fraction(2, 3):
                    continue
                if frac == Fraction(1, 2) and not include_right:
                    continue
                spec = make_alpha("rational", frac.numerator, frac.denominator)
                if spec not in found:
                    found[spec] = VertexCounts(p, q, r)
    return found


# ---------------------------------------------------------------------------
# Gap feasibility: can an angular gap be filled by non-negative corner counts?
# ---------------------------------------------------------------------------


def gap_feasible(gap: SymbolicAngle, alpha: AlphaSpec) -> bool:
    """True iff gap = p*alpha + q*beta + r*pi/3 has a non-negative solution.

    This is the mechanical version of the completion argument: a frontier
    gap that no corner combination can fill exactly kills the branch.
    """
    if alpha.kind == "generic":
        # b-components: p - q = gap.b ; a-components: 4q + r = gap.a
        if gap.a < 0:
            return False
        for q in range(gap.a // 4 + 1):
            p = gap.b + q
            r = gap.a - 4 * q
            if p >= 0 and r >= 0:
                return True
        return False
    if alpha.kind == "rational":
        frac = alpha.frac
        target = angle_units(gap, frac)
        return _units_feasible(target, frac)
    # decimal: small bounded numeric knapsack
    val = gap.value(alpha.radians())
    if val < -1e-9:
        return False
    a = alpha.radians()
    b = 4 * math.pi / 3 - a
    t = math.pi / 3
    for p in range(int(val / a) + 2):
        for q in range(int(val / b) + 2):
            rem = val - p * a - q * b
            if rem < -1e-9:
                continue
            r = round(rem / t)
            if r >= 0 and abs(rem - r * t) < 1e-9:
                return True
    return False


@lru_cache(maxsize=None)
def _units_feasible(target: int, frac: Fraction) -> bool:
    # corner sizes in units of pi/(3t): A = 3s, B = 4t-3s, T = t
    s, t = frac.numerator, frac.denominator
    ua, ub, ut = 3 * s, 4 * t - 3 * s, t
    if target < 0:
        return False
    for p in range(target // ua + 1):
        for q in range((target - p * ua) // ub + 1):
            if (target - p * ua - q * ub) % ut == 0:
                return True
    return False


# ---------------------------------------------------------------------------
# Partial-star matching: can the corners already present at a vertex, with
# the current gaps, still be completed into some atlas word?
# ---------------------------------------------------------------------------


def star_completable(
    blocks: list[tuple[str, SymbolicAngle]], alpha: AlphaSpec
) -> bool:
    """blocks alternates ('word', contiguous labels) and ('gap', angle),
    in cyclic order.  True iff some atlas configuration extends it.
    """
    words = [b[1] for b in blocks if b[0] == "word"]
    if not words:
        return True
    for cfg in atlas_configs(alpha):
        if _match_star(blocks, cfg.word, alpha):
            return True
    return False


def _angles_value_eq(x: SymbolicAngle, y_letters: str, alpha: AlphaSpec) -> bool:
    total = SymbolicAngle(0, 0)
    for c in y_letters:
        total = total + LABEL_ANGLES[c]
    if alpha.kind == "generic":
        return total == x
    if alpha.kind == "rational":
        return angle_units(total, alpha.frac) == angle_units(x, alpha.frac)
    return abs(total.value(alpha.radians()) - x.value(alpha.radians())) < 1e-9


def _match_star(blocks, word: str, alpha: AlphaSpec) -> bool:
    n = len(word)
    variants = {word[i:] + word[:i] for i in range(n)}
    rev = word[::-1]
    variants |= {rev[i:] + rev[:i] for i in range(n)}
    # rotate blocks so the cycle starts at a word block
    start = next(i for i, b in enumerate(blocks) if b[0] == "word")
    cyc = blocks[start:] + blocks[:start]
    for w in variants:
        if _match_tail(cyc, 0, w, 0, alpha):
            return True
    return False


def _match_tail(cyc, ci: int, w: str, pos: int, alpha: AlphaSpec) -> bool:
    if ci == len(cyc):
        return pos == len(w)
    kind, payload = cyc[ci]
    if kind == "word":
        seg = payload
        if pos + len(seg) > len(w) or w[pos : pos + len(seg)] != seg:
            return False
        return _match_tail(cyc, ci + 1, w, pos + len(seg), alpha)
    # gap: absorb zero or more letters whose angles sum exactly to the gap
    for k in range(len(w) - pos + 1):
        if _angles_value_eq(payload, w[pos : pos + k], alpha):
            if _match_tail(cyc, ci + 1, w, pos + k, alpha):
                return True
    return False


# ---------------------------------------------------------------------------
# Bounded extendability check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtendableWitness:
    """A completed neighborhood containing the configuration."""

    patch: object


class ProvenImpossible:
    """The bounded search space is exhausted with no valid completion."""

    def __repr__(self) -> str:  # pragma: no cover
        return "ProvenImpossible"


class Unknown:
    """The search budget ran out before the question was settled."""

    def __repr__(self) -> str:  # pragma: no cover
        return "Unknown"


def config_star_patch(config: VertexConfig, alpha: AlphaSpec):
    """Patch holding exactly the configuration's star around one vertex.

    Returns (patch, center_vid).
    """
    from .patch import Patch, Placement, placement_with_corner
    from .symbolic import Direction, ExactPoint

    patch = Patch(alpha)
    center = ExactPoint.origin()
    vid = patch.add_vertex(center)
    d = Direction.of(0, 0)
    for ch in config.word:
        if ch == "T":
            t = Placement("T", center, d)
        elif ch == "A":
            t = Placement("S", center, d)
        else:
            t = placement_with_corner("S", 1, center, d)
        patch.add_tile(t)
        d = d.plus(LABEL_ANGLES[ch])
    return patch, vid


def is_config_extendable(
    config: VertexConfig, alpha: AlphaSpec, depth: int = 3
):
    """Can the configuration appear in a tiling?  Bounded local answer.

    Attempts to complete the star out to `depth` rings of tiles by
    exhaustive backtracking.  ExtendableWitness(patch) carries one valid
    completed neighborhood; ProvenImpossible means every branch of the
    bounded search dead-ends; Unknown means the node budget ran out.
    """
    from .errors import BudgetExceeded
    from .patterns import DEFAULT_BUDGET, fill_disk

    patch, vid = config_star_patch(config, alpha)
    try:
        if fill_disk(patch, vid, float(depth), budget=DEFAULT_BUDGET,
                     first_only=True):
            patch.freeze()
            return ExtendableWitness(patch)
    except BudgetExceeded:
        return Unknown()
    return ProvenImpossible()

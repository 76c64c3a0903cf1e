"""Order-embedding search and detection of the named small patterns.

``embeds(p1, p2)`` asks whether p1 is isomorphic to a subset of p2 with the
induced order, i.e. whether an injection exists that preserves and reflects
the strict relation. The search is a backtracking scan over injections with
pruning that never changes the answer (degree and chain-height dominance).
"""

from __future__ import annotations

from enum import Enum
from functools import cache

from .poset import Poset, canonical_code, poset_from_cover


class PatternKind(Enum):
    """The fixed small shapes used by the classification arguments."""

    VEE = "vee"
    WEDGE = "wedge"
    DIAMOND = "diamond"
    TWO_CHAIN_PLUS_POINT = "two_chain_plus_point"
    VEE_PLUS_POINT = "vee_plus_point"
    WEDGE_PLUS_POINT = "wedge_plus_point"
    LONG_ARM_VEE = "long_arm_vee"
    LONG_ARM_WEDGE = "long_arm_wedge"
    CROWN = "crown"
    FENCE = "fence"


_PATTERN_COVERS: dict[PatternKind, tuple[tuple[str, ...], tuple[tuple[str, str], ...]]] = {
    PatternKind.VEE: (("a", "b", "c"), (("a", "b"), ("a", "c"))),
    PatternKind.WEDGE: (("a", "b", "c"), (("a", "c"), ("b", "c"))),
    PatternKind.DIAMOND: (
        ("a", "b", "c", "d"),
        (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")),
    ),
    PatternKind.TWO_CHAIN_PLUS_POINT: (("a", "b", "c"), (("a", "b"),)),
    PatternKind.VEE_PLUS_POINT: (
        ("a", "b", "c", "d"),
        (("a", "b"), ("a", "c")),
    ),
    PatternKind.WEDGE_PLUS_POINT: (
        ("a", "b", "c", "d"),
        (("a", "c"), ("b", "c")),
    ),
    PatternKind.LONG_ARM_VEE: (
        ("a", "b", "c", "d"),
        (("a", "b"), ("b", "c"), ("a", "d")),
    ),
    PatternKind.LONG_ARM_WEDGE: (
        ("a", "b", "c", "d"),
        (("a", "b"), ("b", "c"), ("d", "c")),
    ),
    PatternKind.CROWN: (
        ("a", "b", "c", "d"),
        (("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")),
    ),
    PatternKind.FENCE: (
        ("a", "b", "c", "d"),
        (("a", "c"), ("b", "c"), ("b", "d")),
    ),
}


@cache
def pattern_poset(kind: PatternKind) -> Poset:
    names, covers = _PATTERN_COVERS[kind]
    return poset_from_cover(names, covers)


@cache
def obstruction_patterns() -> tuple[PatternKind, ...]:
    """The seven four-point shapes that block sub-representability,
    ordered by canonical code."""
    seven = (
        PatternKind.DIAMOND,
        PatternKind.VEE_PLUS_POINT,
        PatternKind.WEDGE_PLUS_POINT,
        PatternKind.LONG_ARM_VEE,
        PatternKind.LONG_ARM_WEDGE,
        PatternKind.CROWN,
        PatternKind.FENCE,
    )
    return tuple(sorted(seven, key=lambda k: canonical_code(pattern_poset(k))))


def _element_stats(p: Poset) -> list[tuple[int, int, int, int]]:
    up_chain: dict[int, int] = {}
    down_chain: dict[int, int] = {}

    def walk(i: int, rows: tuple[int, ...], memo: dict[int, int]) -> int:
        if i in memo:
            return memo[i]
        best = 0
        rest = rows[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            best = max(best, walk(j, rows, memo))
        memo[i] = best + 1
        return memo[i]

    stats = []
    for i in range(p.n):
        stats.append(
            (
                p.above_mask(i).bit_count(),
                p.below_mask(i).bit_count(),
                walk(i, p.lt, up_chain),
                walk(i, p._gt, down_chain),
            )
        )
    return stats


def _candidate_masks(p1: Poset, p2: Poset) -> list[int] | None:
    s1 = _element_stats(p1)
    s2 = _element_stats(p2)
    cand = []
    for a in s1:
        mask = 0
        for t, b in enumerate(s2):
            if b[0] >= a[0] and b[1] >= a[1] and b[2] >= a[2] and b[3] >= a[3]:
                mask |= 1 << t
        if mask == 0:
            return None
        cand.append(mask)
    return cand


def _constrained_order(p1: Poset) -> list[int]:
    """Source order for the search: most-constrained first, staying inside
    the comparability component already being assigned."""
    stats = _element_stats(p1)
    score = [s[0] + s[1] + s[2] + s[3] for s in stats]
    remaining = set(range(p1.n))
    order: list[int] = []
    touched = 0
    while remaining:
        linked = [i for i in remaining if (touched >> i) & 1]
        pool = linked or list(remaining)
        nxt = max(pool, key=lambda i: (score[i], -i))
        order.append(nxt)
        remaining.remove(nxt)
        touched |= p1.comparable_mask(nxt)
    return order


def _search(
    p1: Poset, p2: Poset, order: list[int], limit: int | None = 1
) -> list[tuple[int, ...]]:
    n1 = p1.n
    if n1 > p2.n:
        return []
    if n1 == 0:
        return [()]
    cand = _candidate_masks(p1, p2)
    if cand is None:
        return []
    image = [-1] * n1
    found: list[tuple[int, ...]] = []

    def rec(k: int, used: int) -> bool:
        if k == n1:
            found.append(tuple(image))
            return limit is not None and len(found) >= limit
        s = order[k]
        rest = cand[s] & ~used
        while rest:
            t = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            ok = True
            for prev in order[:k]:
                tp = image[prev]
                if p1.less(s, prev) != p2.less(t, tp) or p1.less(prev, s) != p2.less(tp, t):
                    ok = False
                    break
            if ok:
                image[s] = t
                if rec(k + 1, used | (1 << t)):
                    return True
                image[s] = -1
        return False

    rec(0, 0)
    return found


def embeds(p1: Poset, p2: Poset) -> bool:
    """True iff p1 is isomorphic to a subset of p2 (induced order)."""
    return bool(_search(p1, p2, _constrained_order(p1)))


def find_embedding(p1: Poset, p2: Poset) -> dict[str, str] | None:
    """Least witness embedding, or None.

    Sources are assigned in element-index order and targets tried in
    ascending index, so the returned map is lexicographically least.
    """
    hits = _search(p1, p2, list(range(p1.n)))
    if not hits:
        return None
    image = hits[0]
    return {p1.elements[i]: p2.elements[image[i]] for i in range(p1.n)}


def all_embeddings(p1: Poset, p2: Poset) -> list[dict[str, str]]:
    """Every embedding of p1 into p2, in lexicographic order."""
    hits = _search(p1, p2, list(range(p1.n)), limit=None)
    return [
        {p1.elements[i]: p2.elements[image[i]] for i in range(p1.n)}
        for image in hits
    ]


def contains_pattern(p: Poset, kind: PatternKind) -> bool:
    return embeds(pattern_poset(kind), p)

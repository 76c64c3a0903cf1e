"""First-principles decision of sub-representability by exhaustive search.

The oracle never consults the structural classifier; it searches directly
for a witnessing table. Two facts force the shape of any witness on a
finite poset: mutually embeddable finite posets of equal size are
isomorphic, so every subset's representative realizes the same isomorphism
class; and isomorphic subsets share one representative. The search space
is therefore one representative mask per isomorphism class of subsets,
constrained pairwise by embeddability-iff-inclusion.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .classify import Verdict, classify_finite
from .construct import SubRepMap
from .embed import embeds
from .errors import TooLarge
from .poset import Poset, _canonical_rows, _default_names, canonical_code, subposet

ORACLE_MAX_DEFAULT = 6
ENUMERATE_MAX = 5


def oracle_guard() -> int:
    """Oracle size guard; the SUBREP_MAX_N environment variable overrides
    the default of 6."""
    return int(os.environ.get("SUBREP_MAX_N", ORACLE_MAX_DEFAULT))


def oracle_subrep(p: Poset, max_n: int | None = None) -> SubRepMap | None:
    """A witnessing map found by exhaustive search, or None after
    exhausting every candidate."""
    limit = oracle_guard() if max_n is None else max_n
    if p.n > limit:
        raise TooLarge(f"oracle is limited to {limit} elements")
    if p.n == 0:
        return SubRepMap(p, {})

    masks = list(range(1, 1 << p.n))
    class_masks: dict[bytes, list[int]] = {}
    for mask in masks:
        class_masks.setdefault(canonical_code(subposet(p, mask)), []).append(mask)

    codes = sorted(class_masks, key=lambda c: (class_masks[c][0].bit_count(), c))
    reps = [subposet(p, class_masks[c][0]) for c in codes]
    k = len(codes)
    can_embed = [[embeds(reps[i], reps[j]) for j in range(k)] for i in range(k)]

    chosen: list[int] = []

    def consistent(mask: int) -> bool:
        i = len(chosen)
        for j, other in enumerate(chosen):
            if can_embed[i][j] != (mask & ~other == 0):
                return False
            if can_embed[j][i] != (other & ~mask == 0):
                return False
        return True

    def backtrack() -> bool:
        if len(chosen) == k:
            return True
        for mask in class_masks[codes[len(chosen)]]:
            if consistent(mask):
                chosen.append(mask)
                if backtrack():
                    return True
                chosen.pop()
        return False

    if not backtrack():
        return None
    rep_of = dict(zip(codes, chosen))
    table = {
        mask: rep_of[code] for code, group in class_masks.items() for mask in group
    }
    return SubRepMap(p, table)


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on n elements up to isomorphism, canonically labeled and
    ordered by canonical code."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATE_MAX:
        raise TooLarge(f"enumeration is limited to {ENUMERATE_MAX} elements")
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    names = tuple(_default_names(n))
    seen: dict[bytes, Poset] = {}
    for bits in range(1 << len(cells)):
        rows = [0] * n
        for idx, (i, j) in enumerate(cells):
            if (bits >> idx) & 1:
                rows[i] |= 1 << j
        ok = True
        for i in range(n):
            rest = rows[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if rows[j] & ~rows[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        # Every poset admits a linear extension, so scanning only relations
        # compatible with the index order still reaches every class.
        p = Poset(names, tuple(rows))
        code = canonical_code(p)
        if code not in seen:
            seen[code] = Poset(names, _canonical_rows(p))
    return [seen[code] for code in sorted(seen)]


@dataclass(frozen=True)
class SurveyRow:
    code: bytes
    poset: Poset
    verdict: Verdict
    oracle_positive: bool

    @property
    def agree(self) -> bool:
        return self.verdict.sub_representable == self.oracle_positive


def survey(n: int) -> list[SurveyRow]:
    """Classifier verdict and oracle verdict for every isomorphism class
    on n elements; any disagreement is visible on the row."""
    if n > ENUMERATE_MAX:
        raise TooLarge(f"survey is limited to {ENUMERATE_MAX} elements")
    rows = []
    for p in enumerate_posets(n):
        verdict = classify_finite(p)
        witness = oracle_subrep(p, max_n=max(n, ORACLE_MAX_DEFAULT))
        rows.append(SurveyRow(canonical_code(p), p, verdict, witness is not None))
    return rows

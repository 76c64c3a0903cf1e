"""Pinboards: multisets of column heights with symbolic frequencies.

A pinboard is a finite set of (height, frequency) pairs with heights
ordinal, frequencies cardinal, and never both infinite; its poset is the
disjoint union of frequency-many chains of each height. A co-pinboard is
the same data with every chain read upside down (``starred``). Subsets of
a simple pinboard are normalized descriptors, and ``theta`` lays their
columns out, tallest first, over consecutive column blocks of the host;
containment of the resulting segment tables characterizes embeddability.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Union

from .errors import (
    DoesNotFit,
    HostMismatch,
    InfinitePinboard,
    InvalidPinboard,
)
from .ordinal import (
    Card,
    OrdinalExpr,
    ZERO,
    card_cmp,
    card_sum,
    fin,
    initial_ordinal,
    ord_cmp,
    ord_sum,
)
from .poset import Poset, poset_from_cover

Pair = tuple[OrdinalExpr, Card]


def _merge_pairs(pairs: Iterable[Pair]) -> list[Pair]:
    """Merge equal heights by cardinal sum; sort by height descending."""
    by_height: dict[OrdinalExpr, Card] = {}
    for height, freq in pairs:
        if height in by_height:
            by_height[height] = card_sum(by_height[height], freq)
        else:
            by_height[height] = freq
    return sorted(by_height.items(), key=lambda hf: hf[0], reverse=True)


def _check_pairs(pairs: Iterable[Pair]) -> None:
    for height, freq in pairs:
        if height.is_zero:
            raise InvalidPinboard("heights must be positive")
        if not freq.is_infinite and freq.value < 1:
            raise InvalidPinboard("frequencies must be positive")
        if not height.is_finite and freq.is_infinite:
            raise InvalidPinboard(
                f"height {height} and frequency {freq} cannot both be infinite"
            )


@dataclass(frozen=True)
class Pinboard:
    """Pairs sorted by height descending; heights pairwise distinct."""

    pairs: tuple[Pair, ...]
    starred: bool = False


def pinboard(pairs: Iterable[Pair], starred: bool = False) -> Pinboard:
    """Build a pinboard, merging duplicate heights by cardinal sum."""
    merged = _merge_pairs(pairs)
    _check_pairs(merged)
    return Pinboard(tuple(merged), starred)


@dataclass(frozen=True)
class SimplePinboard:
    """Host shape {(beta, n), (m, gamma)}: n columns of infinite height
    beta plus gamma-many columns of finite height m."""

    beta: Card
    n: int
    m: int
    gamma: Card
    starred: bool = False

    def __post_init__(self) -> None:
        if not self.beta.is_infinite or not self.gamma.is_infinite:
            raise InvalidPinboard("beta and gamma must be infinite cardinals")
        if self.n < 0 or self.m < 0:
            raise InvalidPinboard("n and m must be finite and non-negative")


@dataclass(frozen=True)
class PinSubset:
    """Normalized subset of a simple pinboard: heights strictly decreasing,
    equal heights merged, absorbed entries dropped."""

    host: SimplePinboard
    pairs: tuple[Pair, ...]
    starred: bool = False


def normalize_subset(
    raw: Iterable[Pair], host: SimplePinboard, starred: bool | None = None
) -> PinSubset:
    """Merge duplicate heights, drop absorbed entries, and fit-check.

    An entry (h', f') with infinite f' is absorbed by any taller entry
    (h, f) with f >= f': removing it does not change the embeddability
    class of the subset.
    """
    if starred is None:
        starred = host.starred
    elif starred != host.starred:
        raise HostMismatch("subset and host must agree on orientation")
    merged = [
        (h, f) for h, f in _merge_pairs(raw) if f.is_infinite or f.value > 0
    ]
    kept = [
        (h2, f2)
        for h2, f2 in merged
        if not (
            f2.is_infinite
            and any(
                ord_cmp(h, h2) > 0 and card_cmp(f, f2) >= 0 for h, f in merged
            )
        )
    ]
    _check_fit(kept, host)
    return PinSubset(host, tuple(kept), starred)


def _check_fit(pairs: list[Pair], host: SimplePinboard) -> None:
    beta_ord = initial_ordinal(host.beta)
    m_ord = fin(host.m)
    tall_total = Card.fin(0)
    for height, freq in pairs:
        if height.is_zero:
            raise DoesNotFit("subset heights must be positive")
        if ord_cmp(height, beta_ord) > 0:
            raise DoesNotFit(f"height {height} exceeds the tall columns ({beta_ord})")
        if ord_cmp(height, m_ord) > 0:
            tall_total = card_sum(tall_total, freq)
        elif card_cmp(freq, host.gamma) > 0:
            raise DoesNotFit(f"frequency {freq} of height {height} exceeds {host.gamma}")
    if card_cmp(tall_total, Card.fin(host.n)) > 0:
        raise DoesNotFit(
            f"{tall_total} columns taller than {host.m} exceed the {host.n} tall columns"
        )


@dataclass(frozen=True)
class ThetaSegments:
    """Run-length column table: runs of (count, height) over consecutive
    column blocks starting at column 0, heights strictly decreasing, with
    an implicit trailing run of height 0."""

    host: SimplePinboard
    runs: tuple[tuple[Card, OrdinalExpr], ...]
    starred: bool = False


def theta(host: SimplePinboard, y: PinSubset) -> ThetaSegments:
    """Column assignment for a normalized subset: its pairs, tallest
    first, occupy consecutive column blocks of the host."""
    if y.host != host or y.starred != host.starred:
        raise HostMismatch("subset was normalized against a different host")
    return ThetaSegments(host, tuple((f, h) for h, f in y.pairs), y.starred)


def run_positions(
    segs: ThetaSegments,
) -> list[tuple[OrdinalExpr, OrdinalExpr, Card, OrdinalExpr]]:
    """(start, end, count, height) per run; positions are ordinal column
    indices, so an infinite run absorbs any finite offset before it."""
    out = []
    pos = ZERO
    for count, height in segs.runs:
        end = ord_sum(pos, initial_ordinal(count))
        out.append((pos, end, count, height))
        pos = end
    return out


def _cumulative_ordinal(segs: ThetaSegments, height: OrdinalExpr) -> OrdinalExpr:
    total = ZERO
    for count, h in segs.runs:
        if ord_cmp(h, height) < 0:
            break
        total = ord_sum(total, initial_ordinal(count))
    return total


def theta_subset(a: ThetaSegments, b: ThetaSegments) -> bool:
    """Column-wise containment: at every column position the height of a
    is at most the height of b.

    The column heights are non-increasing step functions, so containment
    holds iff at every height threshold of a, the block of a-columns
    reaching it is no longer (as an ordinal position) than b's block.
    """
    if a.host != b.host or a.starred != b.starred:
        raise HostMismatch("segment tables belong to different hosts")
    for _, height in a.runs:
        if ord_cmp(_cumulative_ordinal(a, height), _cumulative_ordinal(b, height)) > 0:
            return False
    return True


def _cumulative_card(pairs: tuple[Pair, ...], height: OrdinalExpr) -> Card:
    total = Card.fin(0)
    for h, f in pairs:
        if ord_cmp(h, height) >= 0:
            total = card_sum(total, f)
    return total


def pin_embeds(y: PinSubset, y2: PinSubset) -> bool:
    """Embeddability of subset posets by the cumulative-frequency test:
    for every height of y, the columns of y at least that tall must fit
    injectively among the columns of y2 at least that tall."""
    if y.host != y2.host or y.starred != y2.starred:
        raise HostMismatch("subsets belong to different hosts")
    for height, _ in y.pairs:
        if card_cmp(_cumulative_card(y.pairs, height), _cumulative_card(y2.pairs, height)) > 0:
            return False
    return True


CoDualable = Union[Pinboard, PinSubset, ThetaSegments]


def co_dual(x: CoDualable) -> CoDualable:
    """Flip between a pinboard-style value and its co-form (chains read
    upside down). Applying it twice is the identity."""
    if isinstance(x, PinSubset):
        return PinSubset(replace(x.host, starred=not x.starred), x.pairs, not x.starred)
    if isinstance(x, ThetaSegments):
        return ThetaSegments(replace(x.host, starred=not x.starred), x.runs, not x.starred)
    return replace(x, starred=not x.starred)


def pinboard_poset(pb: Pinboard | PinSubset) -> Poset:
    """Explicit poset of an all-finite pinboard: freq-many copies of each
    height-chain, elements named c{pair}_{copy}_{level}."""
    for height, freq in pb.pairs:
        if not height.is_finite or freq.is_infinite:
            raise InfinitePinboard(
                f"cannot expand ({height},{freq}); both entries must be finite"
            )
    names: list[str] = []
    covers: list[tuple[str, str]] = []
    for i, (height, freq) in enumerate(pb.pairs):
        for j in range(freq.value):
            levels = [f"c{i}_{j}_{level}" for level in range(height.as_finite())]
            names.extend(levels)
            covers.extend(zip(levels, levels[1:]))
    return poset_from_cover(names, covers)

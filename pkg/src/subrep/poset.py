"""Finite strict partial orders on named elements.

The relation is stored transitively closed as one bitmask row per element:
bit j of ``lt[i]`` is set iff ``elements[i] < elements[j]``. Subsets of a
poset are plain integer bitmasks over element indices. All values are
immutable after construction, so they can be shared freely between
concurrent tasks; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .errors import CycleDetected, EmptyPoset, TooLarge, UnknownElement

#: Largest size accepted by the permutation-based canonical form.
CANONICAL_MAX = 10


@dataclass(frozen=True)
class Poset:
    """A finite strict partial order (irreflexive, transitive, antisymmetric)."""

    elements: tuple[str, ...]
    lt: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("element identifiers must be unique")
        if len(self.lt) != n:
            raise ValueError("relation must have one row per element")
        full = (1 << n) - 1
        for i, row in enumerate(self.lt):
            if row & ~full:
                raise ValueError("relation row refers to missing elements")
            if (row >> i) & 1:
                raise CycleDetected(f"{self.elements[i]!r} compares below itself")
        for i in range(n):
            row = self.lt[i]
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if (self.lt[j] >> i) & 1:
                    raise CycleDetected(
                        f"{self.elements[i]!r} and {self.elements[j]!r} "
                        "are each below the other"
                    )
                if self.lt[j] & ~row:
                    raise ValueError("relation is not transitively closed")

    @property
    def n(self) -> int:
        return len(self.elements)

    @cached_property
    def _gt(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.lt):
            rest = row
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                cols[j] |= 1 << i
        return tuple(cols)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownElement(f"no element named {name!r}") from None

    def less(self, i: int, j: int) -> bool:
        """True iff element i is strictly below element j."""
        return bool((self.lt[i] >> j) & 1)

    def above_mask(self, i: int) -> int:
        """Bitmask of elements strictly above element i."""
        return self.lt[i]

    def below_mask(self, i: int) -> int:
        """Bitmask of elements strictly below element i."""
        return self._gt[i]

    def comparable_mask(self, i: int) -> int:
        return self.lt[i] | self._gt[i]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        rels = ", ".join(
            f"{self.elements[i]}<{self.elements[j]}"
            for i in range(self.n)
            for j in range(self.n)
            if self.less(i, j)
        )
        return f"Poset({list(self.elements)}; {rels or 'antichain'})"


def poset_from_cover(
    elements: Iterable[str], covers: Iterable[tuple[str, str]]
) -> Poset:
    """Build a poset from cover relations, taking the transitive closure.

    Raises UnknownElement for covers that mention undeclared identifiers and
    CycleDetected when the closure would relate an element below itself; a
    cyclic input is never silently repaired.
    """
    elems = tuple(elements)
    if len(set(elems)) != len(elems):
        raise ValueError("element identifiers must be unique")
    index = {name: i for i, name in enumerate(elems)}
    n = len(elems)
    rows = [0] * n
    for lower, upper in covers:
        if lower not in index:
            raise UnknownElement(f"no element named {lower!r}")
        if upper not in index:
            raise UnknownElement(f"no element named {upper!r}")
        rows[index[lower]] |= 1 << index[upper]
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    for i in range(n):
        if (rows[i] >> i) & 1:
            raise CycleDetected(f"covers create a cycle through {elems[i]!r}")
    return Poset(elems, tuple(rows))


def chain(names: Sequence[str]) -> Poset:
    """The chain names[0] < names[1] < ... < names[-1]."""
    return poset_from_cover(names, list(zip(names, names[1:])))


def antichain(names: Sequence[str]) -> Poset:
    return poset_from_cover(names, [])


def disjoint_union(*posets: Poset) -> Poset:
    """Disjoint union; element names of the parts must not collide."""
    elems: list[str] = []
    rows: list[int] = []
    offset = 0
    for p in posets:
        elems.extend(p.elements)
        rows.extend(row << offset for row in p.lt)
        offset += p.n
    return Poset(tuple(elems), tuple(rows))


def dual(p: Poset) -> Poset:
    """Transpose of the order; an involution."""
    return Poset(p.elements, p._gt)


def strict_cone(p: Poset, x: str, direction: str) -> set[str]:
    """Elements strictly above ('up') or strictly below ('down') x."""
    i = p.index(x)
    if direction == "up":
        mask = p.above_mask(i)
    elif direction == "down":
        mask = p.below_mask(i)
    else:
        raise ValueError("direction must be 'up' or 'down'")
    return set(names_of(p, mask))


def subposet(p: Poset, mask: int) -> Poset:
    """Induced subposet on the elements selected by ``mask``."""
    if mask & ~((1 << p.n) - 1):
        raise ValueError("mask refers to missing elements")
    sel = _bits(mask)
    pos = {i: k for k, i in enumerate(sel)}
    rows = []
    for i in sel:
        row = p.lt[i] & mask
        packed = 0
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            packed |= 1 << pos[j]
        rows.append(packed)
    return Poset(tuple(p.elements[i] for i in sel), tuple(rows))


def mask_of(p: Poset, names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        mask |= 1 << p.index(name)
    return mask


def names_of(p: Poset, mask: int) -> tuple[str, ...]:
    return tuple(p.elements[i] for i in _bits(mask))


def height_width(p: Poset) -> tuple[int, int]:
    """Largest chain size and largest antichain size, computed exactly."""
    if p.n == 0:
        raise EmptyPoset("height and width need a nonempty poset")
    return _height(p), _max_antichain(p, (1 << p.n) - 1)


def _height(p: Poset) -> int:
    memo: dict[int, int] = {}

    def up_chain(i: int) -> int:
        if i in memo:
            return memo[i]
        best = 0
        rest = p.lt[i]
        while rest:
            j = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            best = max(best, up_chain(j))
        memo[i] = best + 1
        return memo[i]

    return max(up_chain(i) for i in range(p.n))


def _max_antichain(p: Poset, domain: int) -> int:
    """Exact maximum antichain size within ``domain`` (branch and bound)."""
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        v = (avail & -avail).bit_length() - 1
        rec(avail & ~(1 << v) & ~p.comparable_mask(v), size + 1)
        rec(avail & ~(1 << v), size)

    rec(domain, 0)
    return best


def is_chain_poset(p: Poset) -> bool:
    """True iff all elements are pairwise comparable."""
    return all(
        p.comparable_mask(i) == ((1 << p.n) - 1) & ~(1 << i) for i in range(p.n)
    )


def is_antichain_poset(p: Poset) -> bool:
    return all(row == 0 for row in p.lt)


def _canonical_rows(p: Poset) -> tuple[int, ...]:
    """Minimal relation matrix over all relabelings of the elements."""
    n = p.n
    if n > CANONICAL_MAX:
        raise TooLarge(f"canonical form is limited to {CANONICAL_MAX} elements")
    best: tuple[int, ...] | None = None
    for perm in permutations(range(n)):
        rows = [0] * n
        for i in range(n):
            rest = p.lt[i]
            packed = 0
            while rest:
                j = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                packed |= 1 << perm[j]
            rows[perm[i]] = packed
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def canonical_code(p: Poset) -> bytes:
    """Byte string equal for two posets iff they are order-isomorphic."""
    rows = _canonical_rows(p)
    n = p.n
    width = max(1, (n + 7) // 8)
    return bytes([n]) + b"".join(row.to_bytes(width, "big") for row in rows)


def canonical_form(p: Poset) -> Poset:
    """Relabeled copy whose relation matrix is the canonical minimum."""
    rows = _canonical_rows(p)
    return Poset(tuple(_default_names(p.n)), rows)


def _default_names(n: int) -> list[str]:
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    if n <= len(alphabet):
        return [alphabet[i] for i in range(n)]
    return [f"e{i}" for i in range(n)]


def components(p: Poset) -> list[Poset]:
    """Connected components of the comparability graph, with induced order.

    Largest component first; ties broken by canonical form, then by the
    least original element index.
    """
    seen = 0
    found: list[tuple[int, Poset]] = []
    for i in range(p.n):
        if (seen >> i) & 1:
            continue
        comp = 1 << i
        frontier = 1 << i
        while frontier:
            j = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            grow = p.comparable_mask(j) & ~comp
            comp |= grow
            frontier |= grow
        seen |= comp
        found.append((comp, subposet(p, comp)))

    def key(item: tuple[int, Poset]) -> tuple[int, bytes, int]:
        comp, sub = item
        if sub.n <= CANONICAL_MAX:
            code = canonical_code(sub)
        else:
            width = (sub.n + 7) // 8
            code = b"\xff" + bytes([sub.n]) + b"".join(
                row.to_bytes(width, "big") for row in sub.lt
            )
        return (-sub.n, code, (comp & -comp).bit_length())

    return [sub for _, sub in sorted(found, key=key)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out

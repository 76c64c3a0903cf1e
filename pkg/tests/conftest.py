"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

import subrep as sr


def fig1_poset() -> sr.Poset:
    """The worked four-point flower: 1 < 2, 2 < 3, 2 < 4."""
    return sr.poset_from_cover("1234", [("1", "2"), ("2", "3"), ("2", "4")])


def fig3_poset() -> sr.Poset:
    """The worked four-point refusal: 1 < 2 < 3 with 4 < 3."""
    return sr.poset_from_cover("1234", [("1", "2"), ("2", "3"), ("4", "3")])


def embeds_exhaustive(p1: sr.Poset, p2: sr.Poset) -> bool:
    """Independent embedding oracle: try every injection outright."""
    n1, n2 = p1.n, p2.n
    if n1 > n2:
        return False
    for image in itertools.permutations(range(n2), n1):
        if all(
            p1.less(i, j) == p2.less(image[i], image[j])
            for i in range(n1)
            for j in range(n1)
        ):
            return True
    return False


def random_poset(rng: random.Random, n: int, p_edge: float = 0.4) -> sr.Poset:
    """Random poset via random upper-triangular covers plus closure."""
    names = [f"x{i}" for i in range(n)]
    covers = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p_edge
    ]
    return sr.poset_from_cover(names, covers)


def random_positive_poset(rng: random.Random, n: int) -> sr.Poset:
    """Random sub-representable poset on n relabeled elements."""
    style = rng.choice(["flower", "coflower", "chains"]) if n >= 3 else "chains"
    names = [f"x{i}" for i in range(n)]
    rng.shuffle(names)
    if style == "chains":
        covers = []
        pos = 0
        while pos < n:
            k = rng.randint(1, n - pos)
            seg = names[pos : pos + k]
            covers += list(zip(seg, seg[1:]))
            pos += k
        return sr.poset_from_cover(names, covers)
    stem_size = rng.randint(0, n - 3)
    stem, center, tops = names[:stem_size], names[stem_size], names[stem_size + 1 :]
    covers = list(zip(stem, stem[1:]))
    if stem:
        covers.append((stem[-1], center))
    covers += [(center, top) for top in tops]
    p = sr.poset_from_cover(names, covers)
    return sr.dual(p) if style == "coflower" else p


@pytest.fixture(scope="session")
def classes_by_n() -> dict[int, list[sr.Poset]]:
    return {n: sr.enumerate_posets(n) for n in range(1, 6)}


@pytest.fixture(scope="session")
def oracle_verdicts(classes_by_n) -> dict[bytes, bool]:
    """Exhaustive-oracle verdict per isomorphism class, n <= 5."""
    out: dict[bytes, bool] = {}
    for n, classes in classes_by_n.items():
        for p in classes:
            out[sr.canonical_code(p)] = sr.oracle_subrep(p) is not None
    return out

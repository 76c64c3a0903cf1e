"""Poset construction, structural queries, and canonical forms."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import subrep as sr
from conftest import fig1_poset, fig3_poset, random_poset


def test_from_cover_transitive_closure():
    p = sr.poset_from_cover("abc", [("a", "b"), ("b", "c")])
    assert p.less(p.index("a"), p.index("c"))
    assert sr.height_width(p) == (3, 1)


def test_from_cover_fig3():
    p = fig3_poset()
    assert p.less(0, 2)  # 1 < 3 derived
    assert not p.less(0, 3) and not p.less(3, 0)  # 1 and 4 incomparable


def test_from_cover_rejects_self_cover():
    with pytest.raises(sr.CycleDetected):
        sr.poset_from_cover("a", [("a", "a")])


def test_from_cover_rejects_cycles():
    with pytest.raises(sr.CycleDetected):
        sr.poset_from_cover("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def test_from_cover_unknown_element():
    with pytest.raises(sr.UnknownElement):
        sr.poset_from_cover("ab", [("a", "z")])


def test_from_cover_duplicate_names():
    with pytest.raises(ValueError):
        sr.poset_from_cover(["a", "a"], [])


def test_dual_examples():
    vee = sr.pattern_poset(sr.PatternKind.VEE)
    wedge = sr.pattern_poset(sr.PatternKind.WEDGE)
    assert sr.canonical_code(sr.dual(vee)) == sr.canonical_code(wedge)
    four = sr.antichain("wxyz")
    assert sr.dual(four) == four
    c3 = sr.chain("abc")
    assert sr.canonical_code(sr.dual(c3)) == sr.canonical_code(c3)


def test_dual_is_involution():
    rng = random.Random(3)
    for _ in range(30):
        p = random_poset(rng, rng.randint(0, 6))
        assert sr.dual(sr.dual(p)) == p


def test_strict_cone_fig3():
    p = fig3_poset()
    assert sr.strict_cone(p, "2", "up") == {"3"}
    assert sr.strict_cone(p, "1", "up") == {"2", "3"}
    assert sr.strict_cone(p, "3", "up") == set()
    assert sr.strict_cone(p, "3", "down") == {"1", "2", "4"}


def test_strict_cone_unknown():
    with pytest.raises(sr.UnknownElement):
        sr.strict_cone(fig3_poset(), "9", "up")


def test_height_width():
    assert sr.height_width(sr.pattern_poset(sr.PatternKind.DIAMOND)) == (3, 2)
    assert sr.height_width(sr.antichain("abcde")) == (1, 5)
    assert sr.height_width(fig1_poset()) == (3, 2)
    with pytest.raises(sr.EmptyPoset):
        sr.height_width(sr.antichain([]))


def test_height_width_dual_invariant():
    rng = random.Random(11)
    for _ in range(30):
        p = random_poset(rng, rng.randint(1, 6))
        assert sr.height_width(p) == sr.height_width(sr.dual(p))


def test_canonical_code_iso_invariance():
    a = sr.poset_from_cover("abc", [("a", "b"), ("a", "c")])
    b = sr.poset_from_cover("xyz", [("z", "x"), ("z", "y")])
    assert sr.canonical_code(a) == sr.canonical_code(b)


def test_canonical_code_distinguishes():
    vee = sr.pattern_poset(sr.PatternKind.VEE)
    wedge = sr.pattern_poset(sr.PatternKind.WEDGE)
    assert sr.canonical_code(vee) != sr.canonical_code(wedge)


def test_canonical_code_guard():
    with pytest.raises(sr.TooLarge):
        sr.canonical_code(sr.antichain([f"x{i}" for i in range(11)]))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**10 - 1), st.permutations(list(range(5))), st.randoms())
def test_canonical_code_relabeling_invariant(bits, perm, _rng):
    cells = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    covers = [cells[k] for k in range(10) if (bits >> k) & 1]
    names = [f"n{i}" for i in range(5)]
    p = sr.poset_from_cover(names, [(names[i], names[j]) for i, j in covers])
    relabeled = sr.poset_from_cover(
        [names[perm[i]] for i in range(5)],
        [(names[i], names[j]) for i, j in covers],
    )
    assert sr.canonical_code(p) == sr.canonical_code(relabeled)


def test_components_examples():
    p = sr.disjoint_union(sr.chain(["a", "b", "c"]), sr.antichain(["z"]))
    assert [c.elements for c in sr.components(p)] == [("a", "b", "c"), ("z",)]
    connected = fig3_poset()
    assert [c.elements for c in sr.components(connected)] == [("1", "2", "3", "4")]
    assert len(sr.components(sr.antichain("wxyz"))) == 4


def test_components_partition_and_induced():
    rng = random.Random(5)
    for _ in range(30):
        p = random_poset(rng, rng.randint(1, 7))
        parts = sr.components(p)
        names = sorted(n for c in parts for n in c.elements)
        assert names == sorted(p.elements)
        for c in parts:
            for a in c.elements:
                for b in c.elements:
                    assert c.less(c.index(a), c.index(b)) == p.less(
                        p.index(a), p.index(b)
                    )


def test_subposet_and_masks():
    p = fig3_poset()
    mask = sr.mask_of(p, ["1", "2", "4"])
    sub = sr.subposet(p, mask)
    assert sub.elements == ("1", "2", "4")
    assert sub.less(0, 1) and not sub.less(0, 2) and not sub.less(1, 2)
    assert sr.names_of(p, mask) == ("1", "2", "4")


def test_validator_rejects_non_transitive():
    with pytest.raises(ValueError):
        sr.Poset(("a", "b", "c"), (2, 4, 0))  # a<b, b<c but not a<c


def test_validator_rejects_antisymmetry_violation():
    with pytest.raises(sr.CycleDetected):
        sr.Poset(("a", "b"), (2, 1))

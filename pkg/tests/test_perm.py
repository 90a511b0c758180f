import random

import pytest

from qell.errors import CapExceeded, NotSubgroup, ParseError
from qell.groupspec import parse_group
from qell.perm import (FiniteGroup, GroupHom, Permutation, ProductGroup,
                       cyclic_group, dihedral_group, symmetric_group,
                       trivial_group, young_subgroup)


def test_permutation_basics():
    a = Permutation.from_cycles([(1, 2, 3)], 4)
    b = Permutation.from_cycles([(3, 4)], 4)
    # composition acts on the left: (a*b)(x) = a(b(x))
    assert (a * b)(3) == a(4)
    assert (a * b)(1) == 2
    assert a.inverse() * a == Permutation.identity(4)
    assert a ** 3 == Permutation.identity(4)
    assert a.order() == 3
    assert (a * b).order() == 4
    assert a.cycle_type() == (3, 1)
    assert repr(a) == "(1 2 3)"
    assert repr(Permutation.identity(3)) == "id"


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


def test_cycles_sorted_min_first():
    p = Permutation.from_cycles([(2, 5, 3), (1, 4)], 5)
    cyc = p.cycles()
    assert cyc == [(1, 4), (2, 5, 3)]
    assert p.cycles(include_fixed=True) == [(1, 4), (2, 5, 3)]


def test_symmetric_group_orders():
    for n, order in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)]:
        assert symmetric_group(n).order == order


def test_standard_groups():
    assert cyclic_group(6).order == 6
    assert dihedral_group(4).order == 8
    assert trivial_group(3).order == 1
    assert young_subgroup([2, 3]).order == 12


def test_conjugacy_classes_s4():
    S4 = symmetric_group(4)
    conj = S4.conjugacy()
    assert len(conj) == 5
    assert sorted(conj.class_sizes()) == [1, 3, 6, 6, 8]
    assert conj.reps[0] == Permutation.identity(4)
    for ci, cls in enumerate(conj.classes):
        for x in cls:
            assert conj.class_of(x) == ci
    # |class| * |centralizer| = |G|
    for ci, rep in enumerate(conj.reps):
        cent = S4.centralizer(rep)
        assert cent.order * len(conj.classes[ci]) == S4.order


def test_conjugator():
    S4 = symmetric_group(4)
    g = Permutation.from_cycles([(1, 2)], 4)
    h = Permutation.from_cycles([(3, 4)], 4)
    x = S4.conjugator(g, h)
    assert x is not None and x * h * x.inverse() == g
    assert S4.conjugator(g, Permutation.from_cycles([(1, 2, 3)], 4)) is None


def test_generated_cap():
    with pytest.raises(CapExceeded):
        symmetric_group(8, cap=1000)


def test_subgroup_relations():
    S4 = symmetric_group(4)
    H = young_subgroup([2, 2])
    assert H.is_subgroup_of(S4)
    S4.require_subgroup(H)
    with pytest.raises(NotSubgroup):
        H.require_subgroup(S4)


def test_product_group_round_trip():
    P = ProductGroup(symmetric_group(3), cyclic_group(2))
    assert P.group.order == 12
    a = Permutation.from_cycles([(1, 2)], 3)
    b = Permutation.from_cycles([(1, 2)], 2)
    g = P.pair(a, b)
    assert P.project(g) == (a, b)
    assert P.embed_left(a) == P.pair(a, P.right.identity)


def test_group_hom_validation():
    C4 = cyclic_group(4)
    C2 = cyclic_group(2)
    gen = Permutation.from_cycles([(1, 2, 3, 4)], 4)
    flip = Permutation.from_cycles([(1, 2)], 2)
    phi = GroupHom.from_gen_images(C4, C2, {gen: flip})
    assert phi(gen * gen) == Permutation.identity(2)
    with pytest.raises(ValueError):
        GroupHom(C4, C2, {g: flip for g in C4.elements})


def test_random_element_lands_in_group():
    rng = random.Random(7)
    G = dihedral_group(5)
    for _ in range(20):
        assert G.random_element(rng) in G


def test_groupspec_round_trip():
    for text, order in [("S4", 24), ("C6", 6), ("D5", 10), ("C2xC3", 6),
                        ("S3xS3", 36), ("perm:(1 2),(3 4)", 4)]:
        assert parse_group(text).order == order


def test_groupspec_errors():
    for bad in ["", "Q8", "D1", "perm:(1 2", "perm:(1 2)(2 3)", "S0x"]:
        with pytest.raises(ParseError):
            parse_group(bad)

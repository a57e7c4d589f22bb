"""Reflection enumeration, classification, conjugacy classes, Coxeter data."""

import pytest

from crg import (
    GroupError,
    GroupParams,
    class_label,
    classify,
    conjugacy_class_brute,
    coxeter_element,
    coxeter_number,
    diagonal_reflection,
    element_order,
    enumerate_reflections,
    identity,
    multiply,
    power,
    transposition_reflection,
)
from crg.groups import element_key
from crg.reflections import affine_generators

# Groups whose class structure is verified against the brute-force oracle.
CLASS_CHECK_GROUPS = [
    GroupParams(2, 1, 2), GroupParams(3, 1, 2), GroupParams(4, 1, 2),
    GroupParams(2, 1, 3), GroupParams(3, 1, 3),
    GroupParams(2, 2, 3), GroupParams(3, 3, 3), GroupParams(4, 4, 3),
    GroupParams(3, 3, 2), GroupParams(4, 4, 2), GroupParams(5, 5, 2),
    GroupParams(6, 6, 2),
]


def test_reflection_counts():
    # d*C(n,2) transposition-like, plus n*(d-1) diagonals when e = 1.
    assert len(enumerate_reflections(GroupParams(2, 1, 2))) == 2 + 2
    assert len(enumerate_reflections(GroupParams(3, 1, 2))) == 3 + 4
    assert len(enumerate_reflections(GroupParams(2, 1, 3))) == 6 + 3
    assert len(enumerate_reflections(GroupParams(2, 2, 3))) == 6
    assert len(enumerate_reflections(GroupParams(3, 3, 3))) == 9
    assert len(enumerate_reflections(GroupParams(4, 4, 2))) == 4


def test_reflections_are_order_two_or_diagonal():
    for params in CLASS_CHECK_GROUPS:
        for r in enumerate_reflections(params):
            if r.kind == "transposition":
                assert element_order(r.element) == 2
            else:
                assert power(r.element, params.d).is_identity()
            # fixed space is a hyperplane <=> classify round-trips
            assert classify(r.element) is not None


def test_classify_rejects_non_reflections():
    params = GroupParams(2, 1, 3)
    assert classify(identity(params)) is None
    c = coxeter_element(params)
    assert classify(c) is None
    two_diag = multiply(diagonal_reflection(params, 1, 1).element,
                        diagonal_reflection(params, 2, 1).element)
    assert classify(two_diag) is None


def test_class_label_matches_brute_force():
    for params in CLASS_CHECK_GROUPS:
        assert params.order <= 10**4
        refs = enumerate_reflections(params)
        by_label = {}
        for r in refs:
            by_label.setdefault(class_label(r, params), set()).add(element_key(r.element))
        by_class = {}
        for r in refs:
            cls = frozenset(element_key(x) for x in conjugacy_class_brute(r, params))
            by_class.setdefault(cls, set()).add(element_key(r.element))
        assert {frozenset(s) for s in by_label.values()} == \
            {frozenset(s) for s in by_class.values()}, str(params)


def test_dihedral_parity_split():
    for d in (3, 4, 5, 6):
        params = GroupParams(d, d, 2)
        labels = {str(class_label(r, params)) for r in enumerate_reflections(params)}
        if d % 2:
            assert labels == {"T"}
        else:
            assert labels == {"T_even", "T_odd"}


def test_cover_class_labels():
    cover = GroupParams(None, 1, 3)
    assert str(class_label(diagonal_reflection(cover, 2, -3), cover)) == "W-3"
    assert str(class_label(transposition_reflection(cover, 1, 3, 5), cover)) == "T"
    dihedral = GroupParams(None, None, 2)
    assert str(class_label(transposition_reflection(dihedral, 1, 2, 4), dihedral)) == "T_even"
    assert str(class_label(transposition_reflection(dihedral, 1, 2, 3), dihedral)) == "T_odd"


def test_coxeter_element_shape():
    c = coxeter_element(GroupParams(2, 1, 3))
    assert c.perm == (2, 3, 1) and c.weights == (0, 0, 1)
    c = coxeter_element(GroupParams(2, 2, 3))
    assert c.perm == (2, 1, 3) and c.weights == (0, 1, 1)
    c = coxeter_element(GroupParams(None, None, 3))
    assert c.perm == (2, 1, 3) and c.weights == (0, 1, -1)
    c = coxeter_element(GroupParams(1, 1, 3))
    assert c.perm == (2, 3, 1) and c.weights == (0, 0, 0)


def test_coxeter_number_table():
    # h = (#reflections + #hyperplanes) / rank
    assert coxeter_number(GroupParams(2, 1, 2)).h == 4
    assert coxeter_number(GroupParams(3, 1, 2)).h == 6
    assert coxeter_number(GroupParams(2, 1, 3)).h == 6
    assert coxeter_number(GroupParams(2, 2, 3)).h == 4
    assert coxeter_number(GroupParams(3, 3, 3)).h == 6
    assert coxeter_number(GroupParams(4, 4, 2)).h == 4
    assert coxeter_number(GroupParams(1, 1, 3)).h == 3


def test_coxeter_element_has_order_h():
    for params in CLASS_CHECK_GROUPS + [GroupParams(1, 1, 3), GroupParams(1, 1, 4)]:
        assert element_order(coxeter_element(params)) == coxeter_number(params).h, str(params)


def test_affine_generators_relations():
    for n in (2, 3, 4):
        params = GroupParams(None, None, n)
        gens = [r.element for r in affine_generators(params)]
        assert len(gens) == n
        for s in gens:
            assert multiply(s, s).is_identity()
        if n == 2:
            # infinite dihedral: the product s0*s1 has infinite order
            prod = multiply(gens[0], gens[1])
            x = prod
            for _ in range(40):
                assert not x.is_identity()
                x = multiply(x, prod)
            continue
        # the affine diagram is an n-cycle: s_1 - s_2 - ... - s_{n-1} - s_0 - s_1
        for a in range(n):
            for b in range(a + 1, n):
                s, t = gens[a], gens[b]
                adjacent = (b - a == 1) or (a == 0 and b == n - 1)
                if adjacent:
                    lhs = multiply(multiply(s, t), s)
                    rhs = multiply(multiply(t, s), t)
                else:
                    lhs = multiply(s, t)
                    rhs = multiply(t, s)
                assert lhs == rhs


def test_diagonal_reflection_guards():
    with pytest.raises(GroupError):
        diagonal_reflection(GroupParams(2, 2, 3), 1, 1)
    with pytest.raises(GroupError):
        diagonal_reflection(GroupParams(2, 1, 3), 1, 0)
    with pytest.raises(GroupError):
        transposition_reflection(GroupParams(2, 1, 3), 2, 2, 1)

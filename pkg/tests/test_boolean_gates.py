"""Partial set gates induced by the exterior products, and their domains."""

from __future__ import annotations

import pytest

from excalc.boolean_gates import (
    all_subsets,
    bool_and,
    bool_not,
    bool_or,
    domain_d1,
    domain_d2,
    m_inverse,
    m_map,
    pseudo_vee,
    pseudo_wedge,
    subset,
)
from excalc.errors import DimensionError
from excalc.multivector import Multivector, hodge

D1_REFERENCE = {
    (frozenset(), frozenset()),
    (frozenset({1}), frozenset()),
    (frozenset({2}), frozenset()),
    (frozenset({1, 2}), frozenset()),
    (frozenset(), frozenset({1})),
    (frozenset(), frozenset({2})),
    (frozenset({1}), frozenset({2})),
    (frozenset(), frozenset({1, 2})),
}
D2_REFERENCE = {
    (frozenset({1, 2}), frozenset()),
    (frozenset({1, 2}), frozenset({1})),
    (frozenset({1}), frozenset({2})),
    (frozenset({1, 2}), frozenset({2})),
    (frozenset(), frozenset({1, 2})),
    (frozenset({1}), frozenset({1, 2})),
    (frozenset({2}), frozenset({1, 2})),
    (frozenset({1, 2}), frozenset({1, 2})),
}


def test_m_map_examples():
    assert m_map(subset(2, {1})) == Multivector.from_indices(2, (1,))
    assert m_map(subset(2, {1, 2})) == Multivector.top(2)
    assert m_map(subset(2)) == Multivector.vacuum(2)
    assert m_map(subset(3, {2, 3})) == Multivector.from_indices(3, (2, 3))


def test_m_inverse():
    assert m_inverse(Multivector.from_indices(3, (1, 2))) == subset(3, {1, 2})
    assert m_inverse(-Multivector.top(2)) is None
    assert m_inverse(Multivector.zero(2)) is None
    assert m_inverse(2.0 * Multivector.vacuum(2)) is None
    assert m_inverse(Multivector.vacuum(2)) == subset(2)


def test_pseudo_operation_examples():
    assert pseudo_wedge(subset(2, {1}), subset(2, {2})) == subset(2, {1, 2})
    assert pseudo_vee(subset(2, {1, 2}), subset(2, {1})) == subset(2, {1})
    assert pseudo_wedge(subset(2, {2}), subset(2, {1})) is None
    # e1^e3^e2 carries a minus sign, so the pair is off-domain
    assert pseudo_wedge(subset(3, {1, 3}), subset(3, {2})) is None
    with pytest.raises(DimensionError):
        pseudo_wedge(subset(2, {1}), subset(3, {1}))


def test_domains_match_reference_listings():
    assert domain_d1(2) == D1_REFERENCE
    assert domain_d2(2) == D2_REFERENCE


def test_domain_d1_smallest_space():
    assert domain_d1(1) == {
        (frozenset(), frozenset()),
        (frozenset({1}), frozenset()),
        (frozenset(), frozenset({1})),
    }


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_on_domain_the_gates_are_union_and_intersection(d):
    for members1, members2 in domain_d1(d):
        got = pseudo_wedge(subset(d, members1), subset(d, members2))
        assert got is not None and got.members == members1 | members2
    for members1, members2 in domain_d2(d):
        got = pseudo_vee(subset(d, members1), subset(d, members2))
        assert got is not None and got.members == members1 & members2


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_domain_necessary_conditions(d):
    full = frozenset(range(1, d + 1))
    for members1, members2 in domain_d1(d):
        assert not members1 & members2
    for members1, members2 in domain_d2(d):
        assert members1 | members2 == full


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_star_blade_support_is_the_complement(d):
    # the blade under the star complement occupies exactly the complement set,
    # whatever sign it carries
    full = set(range(1, d + 1))
    for a in all_subsets(d):
        starred = hodge(m_map(a))
        (mask, _), = starred.terms().items()
        occupied = {i + 1 for i in range(d) if mask >> i & 1}
        assert occupied == full - set(a.members)
        back = m_inverse(starred)
        if back is not None:
            assert back.members == frozenset(full - set(a.members))


def test_plain_set_gates():
    assert bool_or(subset(2, {1}), subset(2, {2})) == subset(2, {1, 2})
    assert bool_and(subset(2, {1}), subset(2, {1, 2})) == subset(2, {1})
    assert bool_not(subset(2)) == subset(2, {1, 2})


def test_domain_enumeration_guard():
    with pytest.raises(DimensionError):
        domain_d1(9)


def test_subset_text():
    assert subset(3, {2, 1}).to_text() == "{1,2}"
    assert subset(3).to_text() == "{}"

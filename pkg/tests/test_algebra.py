import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit.algebra import (
    AlgebraElement,
    alt_interval,
    alt_times,
    apply_star,
    e,
    element,
    failed_relations,
    ideal_membership,
    ideal_span,
    perm,
    presentation_check,
    presentation_relations,
    reduce_mod_p,
    s,
    sign,
    specialize_delta,
    times_alt,
)
from brauerkit.diagram import all_diagrams
from brauerkit.exactalg import GF, QQ, QQ_DELTA, DeltaPoly, RingMismatchError, UnspecializedDeltaError


def test_e_squared_is_delta_e(qd):
    e1 = e(1, 2, qd)
    assert e1 * e1 == e1.scale(DeltaPoly.gen())


def test_specialized_products():
    e1 = e(1, 3, QQ(2))
    assert e1 * e1 == e1.scale(2)
    with pytest.raises(UnspecializedDeltaError):
        e(1, 3, QQ()) * e(1, 3, QQ())


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        e(1, 3, QQ(2)) + e(1, 3, GF(7, 2))


@pytest.mark.parametrize("r", range(2, 7))
def test_presentation(r):
    assert presentation_check(r)
    assert failed_relations(r) == []


def test_perturbed_relation_detected():
    rels = presentation_relations(3)
    name, lhs, rhs = rels[1]
    bad = rels[:1] + [(name, lhs, rhs.scale(DeltaPoly.gen() + 1))] + rels[2:]
    assert not presentation_check(3, bad)


def test_json_roundtrip():
    x = e(1, 3, QQ(2)).scale(Fraction(3, 2)) - s(2, 3, QQ(2))
    assert AlgebraElement.from_json(x.to_json()) == x
    y = e(1, 3).scale(DeltaPoly.gen() ** 2 - 1)
    assert AlgebraElement.from_json(y.to_json()) == y


def test_sign():
    assert sign((1, 2, 3)) == 1
    assert sign((2, 1, 3)) == -1
    assert sign((2, 3, 1)) == 1


@pytest.mark.parametrize("k,l", [(1, 2), (1, 3), (2, 4), (1, 4)])
def test_alt_interval_square(k, l, qd):
    a = alt_interval(k, l, 4, qd)
    size = len(a.terms)
    assert size == len(list(itertools.permutations(range(k, l + 1))))
    assert a * a == a.scale(size)


def test_alt_interval_trivial(qd):
    assert alt_interval(3, 3, 4, qd) == AlgebraElement.one(4, qd)
    assert alt_interval(5, 4, 4, qd) == AlgebraElement.one(4, qd)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(all_diagrams(4)), st.integers(1, 3), st.integers(2, 4))
def test_coset_multiplication_matches_direct(d, k, l):
    if k >= l:
        return
    x = element(d, QQ(3)) + element(all_diagrams(4)[7], QQ(3))
    a = alt_interval(k, l, 4, QQ(3))
    assert times_alt(x, k, l) == x * a
    assert alt_times(k, l, x) == a * x


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(all_diagrams(3)), st.sampled_from(all_diagrams(3)), st.sampled_from(all_diagrams(3)))
def test_associative_and_star_anti(a, b, c):
    x, y, z = (element(t, QQ_DELTA) for t in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert apply_star(x * y) == apply_star(y) * apply_star(x)


def test_specialize_and_reduce():
    x = e(1, 3).scale(DeltaPoly.gen() + Fraction(1, 2))
    assert specialize_delta(x, 2) == e(1, 3, QQ(2)).scale(Fraction(5, 2))
    y = reduce_mod_p(specialize_delta(x, 2), 7)
    assert y.ring == GF(7, 2)
    with pytest.raises(ZeroDivisionError):
        reduce_mod_p(e(1, 3, QQ(2)).scale(Fraction(1, 7)), 7)


def test_ideal_span_of_unit_is_everything():
    assert ideal_span([AlgebraElement.one(3, QQ(2))]).dim == 15


def test_ideal_of_e1():
    # the two-sided ideal generated by e_1 is spanned by diagrams with an arc
    assert ideal_span([e(1, 3, QQ(2))]).dim == 15 - 6


def test_ideal_needs_specialized_delta():
    with pytest.raises(ValueError):
        ideal_span([e(1, 3)])


def test_membership():
    g = e(1, 3, QQ(2))
    assert ideal_membership(e(2, 3, QQ(2)), g)
    assert not ideal_membership(perm((2, 1, 3), QQ(2)), g)

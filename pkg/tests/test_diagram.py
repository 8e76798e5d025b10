import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauerkit.diagram import (
    BrauerDiagram,
    StrandMismatchError,
    all_diagrams,
    arc_shape,
    compose,
    generator_e,
    generator_s,
    identity_diagram,
    normal_form,
    parse_diagram,
    perm_diagram,
    star,
    through_count,
)


def test_text_roundtrip():
    d = parse_diagram("r=3; 1-2 3-6 4-5")
    assert str(d) == "r=3; 1-2 3-6 4-5"
    assert parse_diagram(str(d)) == d


@pytest.mark.parametrize("text", ["r=2; 1-2 1-3", "r=2; 1-2", "r=2; 1-2 3-5", "r=2; 1-1 3-4", "r2; 1-2"])
def test_invalid_text(text):
    with pytest.raises(ValueError):
        parse_diagram(text)


def test_generator_products():
    e1 = generator_e(1, 2, 2)
    c = compose(e1, e1)
    assert c.result == e1 and c.loops == 1
    s1 = generator_s(1, 2)
    assert compose(s1, s1).result == identity_diagram(2)
    c = compose(generator_e(1, 2, 3), generator_e(2, 3, 3))
    assert str(c.result) == "r=3; 1-2 3-4 5-6" and c.loops == 0


def test_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        compose(identity_diagram(2), identity_diagram(3))


@pytest.mark.parametrize("r,count", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945)])
def test_counts(r, count):
    ds = all_diagrams(r)
    assert len(ds) == count == len(set(ds))


def test_enumeration_bound():
    with pytest.raises(ValueError):
        all_diagrams(7)


def test_perm_diagram_is_homomorphism():
    for s in itertools.permutations(range(1, 4)):
        for t in itertools.permutations(range(1, 4)):
            st_ = tuple(s[t[i] - 1] for i in range(3))
            c = compose(perm_diagram(s), perm_diagram(t))
            assert c.result == perm_diagram(st_) and c.loops == 0


def test_associativity_and_star_all_r3():
    ds = all_diagrams(3)
    for a in ds:
        assert star(star(a)) == a
        for b in ds:
            ab = compose(a, b)
            assert star(ab.result) == compose(star(b), star(a)).result
            for c in ds[::4]:
                left = compose(ab.result, c)
                bc = compose(b, c)
                right = compose(a, bc.result)
                assert left.result == right.result
                assert ab.loops + left.loops == bc.loops + right.loops


@given(st.integers(1, 5).flatmap(lambda r: st.sampled_from(all_diagrams(r))))
def test_normal_form_reconstructs(d):
    s1, k, s2 = normal_form(d)
    inv = [0] * d.r
    for p, q in enumerate(s2):
        inv[q - 1] = p + 1
    x = compose(compose(perm_diagram(s1), arc_shape(k, d.r)).result, perm_diagram(inv))
    assert x.result == d and x.loops == 0
    assert through_count(d) == d.r - 2 * k


def test_from_edges_validation():
    with pytest.raises(ValueError):
        BrauerDiagram.from_edges(2, [(1, 2), (3, 5)])

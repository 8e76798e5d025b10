import itertools
from math import factorial

import pytest

from brauerkit.algebra import (
    AlgebraElement,
    alt_interval,
    apply_star,
    element,
    ideal_membership,
    reduce_mod_p,
)
from brauerkit.diagram import (
    all_diagrams,
    compose,
    generator_e,
    identity_diagram,
    perm_diagram,
    through_count,
)
from brauerkit.exactalg import QQ, GF
from brauerkit.relations import (
    times_kernel_element,
    NestedArcs,
    DeficiencyPair,
    KernelCatalog,
    RelationTriple,
    deficiency_diagram,
    kernel_element,
    deficiency_element,
    kernel_generator,
    split_alternator,
    all_triples,
    nested_arcs,
    relation_element,
    check_nested_arc_expansion,
    check_nested_arc_coefficients,
    check_arc_action_on_kernel_element,
    check_nested_arc_step,
    check_nested_arc_last_step,
    check_alt_sum_recursion,
    check_arc_sandwich,
    check_deficiency_rewriting,
    triple_diagram,
    deficiency_pairs,
    is_plus_minus_one,
    deficiency_perm,
    deficiency_perm_diagram,
    quasi_idempotent_constant,
    relative_sign,
    kernel_triple,
    deficiency_triple,
)
from brauerkit.tensorrep import nu_matrix, tau_vector


def es(r, ring):
    return [element(generator_e(j, j + 1, r), ring) for j in range(1, r)]


# -- triples -----------------------------------------------------------------


def test_d_pi_identity():
    t = RelationTriple(1, 2, (1, 2), (3, 4))
    assert triple_diagram(t, (1, 2)).edges() == [(1, 3), (2, 4)]
    assert triple_diagram(t, (2, 1)).edges() == [(1, 4), (2, 3)]


def test_d_pi_distinct():
    t = RelationTriple(2, 3, (1, 4, 5), (2, 3, 6))
    ds = {triple_diagram(t, p) for p in itertools.permutations((1, 2, 3))}
    assert len(ds) == 6


@pytest.mark.parametrize("S,Sp,beta", [((1, 2), (2, 3), ()), ((1, 2), (3,), ()), ((1, 2), (3, 4), ((5, 6),))])
def test_invalid_triples(S, Sp, beta):
    with pytest.raises(ValueError):
        RelationTriple(1, 2, S, Sp, beta)


def test_b_elem_in_kernel_all_triples():
    ring = QQ(2)
    count = 0
    for t in all_triples(2, 3):
        b = relation_element(t, ring)
        assert len(b.terms) == 6 and is_plus_minus_one(b)
        assert nu_matrix(b, 2).is_zero()
        assert not tau_vector(b, 2)
        count += 1
    assert count == 10


# -- F_i, e_i(j), E_i ----------------------------------------------------------


def test_F_examples():
    assert split_alternator(1, 1, 2) == AlgebraElement.one(2, QQ(1))
    assert split_alternator(0, 2, 3) == alt_interval(1, 3, 3, QQ(2))
    for n in range(1, 5):
        for i in range((n + 1) // 2 + 1):
            F = split_alternator(i, n, n + 1)
            assert F * F == F.scale(quasi_idempotent_constant(i, n))


def test_arcs_elem():
    assert nested_arcs(3, 0, 4) == identity_diagram(4)
    assert nested_arcs(1, 1, 3) == generator_e(1, 2, 3)
    d = nested_arcs(2, 2, 5)
    assert d == compose(generator_e(2, 3, 5), generator_e(1, 4, 5)).result
    assert through_count(d) == 1
    with pytest.raises(ValueError):
        nested_arcs(1, 2, 4)


def test_E_for_n1():
    ring = QQ(1)
    one = AlgebraElement.one(2, ring)
    assert kernel_element(1, 1, 2) == one - element(generator_e(1, 2, 2), ring)


@pytest.mark.parametrize("n", range(1, 6))
def test_E_properties(n):
    r = n + 1
    ring = QQ(n)
    for i in range((n + 1) // 2 + 1):
        E = kernel_element(i, n, r)
        assert E * E == E.scale(factorial(i) * factorial(n + 1 - i))
        assert is_plus_minus_one(E)
        assert apply_star(E) == E
        for ej in es(r, ring):
            assert ej * E == 0 and E * ej == 0
        assert relative_sign(E, relation_element(kernel_triple(i, n, r))) == (-1) ** (i * (n + 1 - i))


def test_arc_diagrams_annihilate_E():
    n, r = 2, 3
    ring = QQ(n)
    E = kernel_generator(n, r)
    for d in all_diagrams(r):
        if through_count(d) < n + 1:
            x = element(d, ring)
            assert x * E == 0 and E * x == 0


def test_E_leading_term_is_F():
    n, r = 3, 4
    E, F = kernel_element(2, n, r), split_alternator(2, n, r)
    c = E.coefficient(identity_diagram(r))
    assert c == F.coefficient(identity_diagram(r))


def test_index_errors():
    with pytest.raises(ValueError):
        kernel_element(2, 2, 3)
    with pytest.raises(ValueError):
        kernel_element(1, 3, 3)


# -- deficiency pairs ----------------------------------------------------------


def test_deficiency_perm_examples():
    for n in range(1, 7):
        for p in deficiency_pairs(n, 8):
            r = max(p.i + p.j, 1)
            pi = deficiency_perm(p, r)
            assert sorted(pi) == list(range(1, r + 1))
            if p.d == 0:
                assert pi == tuple(range(1, r + 1))


def test_deficiency_diagram_factorisation():
    p = DeficiencyPair(2, 3, 3)
    for k in range(p.n + 2 - p.j):
        assert deficiency_diagram(p, k, 5) == compose(nested_arcs(2, k + 1, 5), deficiency_perm_diagram(p, 5)).result


def test_invalid_pairs():
    with pytest.raises(ValueError):
        DeficiencyPair(3, 2, 3)
    with pytest.raises(ValueError):
        DeficiencyPair(1, 1, 3)


def test_deficiency_zero_gives_E_i():
    for n in range(1, 5):
        for i in range((n + 1) // 2 + 1):
            p = DeficiencyPair(i, n + 1 - i, n)
            assert deficiency_element(p, n + 1) == kernel_element(i, n, n + 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_E_ij_properties(n):
    for p in deficiency_pairs(n, 7):
        r = p.i + p.j
        if r < 2:
            continue
        E = deficiency_element(p, r)
        assert is_plus_minus_one(E)
        assert relative_sign(E, relation_element(deficiency_triple(p, r))) is not None
        assert check_deficiency_rewriting(p, r)
        for l, el in enumerate(es(r, E.ring), 1):
            if l < r:
                assert el * E == 0


def test_E_ij_annihilation_mod_p():
    n, p = 2, 7
    for pair in deficiency_pairs(n, 6):
        r = pair.i + pair.j
        E = reduce_mod_p(deficiency_element(pair, r), p)
        for el in es(r, GF(p, n)):
            assert el * E == 0


def test_pi_convention_is_inverse():
    # deficiency_diagram(0) must join all n+1 points of S to S'; reading the permutation un-inverted breaks this
    p = DeficiencyPair(2, 4, 3)
    t = deficiency_triple(p, 6)
    S, Sp = set(t.S), set(t.Sp)

    def crossings(d):
        return sum(1 for a, b in d.edges() if (a in S and b in Sp) or (a in Sp and b in S))

    assert crossings(deficiency_diagram(p, 0, 6)) == 4
    raw = compose(nested_arcs(2, p.d, 6), perm_diagram(deficiency_perm(p, 6))).result
    assert crossings(raw) < 4


# -- identities over Q[d] ------------------------------------------------------


@pytest.mark.parametrize("m", range(2, 7))
def test_alt_sum_recursion(m):
    assert check_alt_sum_recursion(m)


def test_arc_sandwich():
    for s in range(3, 8):
        for i in range(1, s - 1):
            assert check_arc_sandwich(i, s)


def test_nested_arc_expansion_small():
    for s in range(2, 8):
        for i in range(1, s // 2 + 1):
            assert check_nested_arc_coefficients(i, s)
            assert check_nested_arc_last_step(i, s)
            for j in range(i):
                assert check_nested_arc_step(i, s, j)
            for k in range(i + 1):
                assert check_nested_arc_expansion(i, s, k)


def test_nested_arc_k0_reduction():
    c = NestedArcs(1, 4)
    assert c.A(0) == 0
    assert c.B(0) == 1 / factorial(2)


def test_E_arc_action_small():
    for n in range(1, 6):
        for i in range(1, (n + 1) // 2 + 1):
            for k in range(i + 1):
                assert check_arc_action_on_kernel_element(i, n, k)


# -- ideals --------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chain_memberships(n):
    cat = KernelCatalog(n, n + 1)
    for i in range(1, cat.top_index + 1):
        assert ideal_membership(cat.E_i(i - 1), cat.E_i(i))


def test_E_ij_in_ideal_of_E():
    cat = KernelCatalog(2, 4)
    for p in cat.pairs():
        assert ideal_membership(cat.E_ij(p.i, p.j), cat.E)
        assert ideal_membership(cat.E_ij_star(p.i, p.j), cat.E)


def test_identity_not_in_ideal():
    E = kernel_generator(2, 3)
    assert not ideal_membership(AlgebraElement.one(3, E.ring), E)


def test_triple_json_roundtrip():
    t = kernel_triple(1, 2, 4)
    assert RelationTriple.from_json_obj(t.to_json_obj(), 2, 4) == t


@pytest.mark.slow
def test_E_squared_direct_n5():
    # the plain product, without the factored right multiplication
    E = kernel_generator(5, 6)
    assert E * E == E.scale(quasi_idempotent_constant(3, 5))
    assert times_kernel_element(E, 3, 5) == E * E

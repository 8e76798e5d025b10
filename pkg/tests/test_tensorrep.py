import random

import pytest

from brauerkit.algebra import AlgebraElement, apply_star, element
from brauerkit.diagram import all_diagrams, generator_e, generator_s, identity_diagram
from brauerkit.exactalg import QQ, GF
from brauerkit.relations import kernel_generator
from brauerkit.tensorrep import (
    SizeBoundError,
    TensorOperator,
    TensorSpace,
    operator_from_tensor,
    check_equivariance,
    check_fft_commute,
    contraction,
    kernel_nu,
    kron,
    nu_coefficient_rows,
    nu_diagram,
    nu_from_generators,
    nu_full_rows,
    nu_matrix,
    place_permutation,
    rank_nu,
    rank_tau,
    tau_vector,
    xi,
)
from brauerkit.exactalg import rref_sparse


def test_tensor_space_indexing():
    sp = TensorSpace(3, 2)
    assert list(sp.words())[:4] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    for k in range(sp.dim):
        assert sp.index(sp.word(k)) == k


def test_nu_identity_and_e_squared():
    ring = QQ(2)
    assert nu_matrix(element(identity_diagram(2), ring), 2) == TensorOperator.identity(2, 2, ring)
    ne = nu_matrix(element(generator_e(1, 2, 2), ring), 2)
    assert ne @ ne == ne.scale(2)


def test_nu_E_vanishes():
    assert nu_matrix(kernel_generator(2, 3), 2).is_zero()


def test_nu_matches_generators():
    assert nu_diagram(generator_s(1, 3), 2) == place_permutation((2, 1, 3), 2)
    assert nu_diagram(generator_e(2, 3, 3), 2) == contraction(2, 2, 3)
    for n, r in [(2, 3), (3, 3), (2, 4)]:
        for d in all_diagrams(r):
            assert nu_from_generators(d, n) == nu_diagram(d, n)


def test_nu_homomorphism_random_pairs():
    rng = random.Random(5)
    ring = QQ(2)
    ds = all_diagrams(3)
    for _ in range(20):
        x = AlgebraElement(3, ring, {rng.choice(ds): rng.randint(-3, 3) for _ in range(3)})
        y = AlgebraElement(3, ring, {rng.choice(ds): rng.randint(-3, 3) for _ in range(3)})
        assert nu_matrix(x * y, 2) == nu_matrix(x, 2) @ nu_matrix(y, 2)
        assert nu_matrix(apply_star(x), 2) == nu_matrix(x, 2).transpose()


def test_nu_requires_matching_delta():
    with pytest.raises(ValueError):
        nu_matrix(element(identity_diagram(2), QQ(3)), 2)
    with pytest.raises(ValueError):
        nu_matrix(element(identity_diagram(2)), 2)


def test_size_bound():
    with pytest.raises(SizeBoundError):
        nu_matrix(element(identity_diagram(6), QQ(5)), 5)


def test_tau_examples():
    ring = QQ(3)
    t = tau_vector(element(identity_diagram(1), ring), 3)
    assert t == {0: 1, 4: 1, 8: 1}
    for r in range(1, 4):
        for d in all_diagrams(r):
            assert len(tau_vector(element(d, QQ(2)), 2)) == 2 ** r


def test_xi_identities():
    n = 3
    ring = QQ(n)
    total = xi(0, 0, n) + xi(1, 1, n) + xi(2, 2, n)
    assert total == TensorOperator.identity(n, 1, ring)
    phi = None
    for i in range(n):
        for j in range(n):
            term = kron(xi(i, j, n), xi(i, j, n))
            phi = term if phi is None else phi + term
    assert phi == contraction(1, n, 2) == nu_diagram(generator_e(1, 2, 2), n)
    # sum_i b_i (x) b_i for r = 1 maps to the identity
    assert operator_from_tensor({0: 1, 4: 1, 8: 1}, n, 1) == TensorOperator.identity(n, 1, ring)


@pytest.mark.parametrize("n,r", [(2, 2), (3, 3), (2, 4)])
def test_fft_commutes(n, r):
    assert check_fft_commute(n, r)


@pytest.mark.parametrize("n,r", [(2, 3), (3, 3)])
def test_equivariance(n, r):
    assert check_equivariance(n, r)


@pytest.mark.parametrize("n,r,rank", [(3, 3, 15), (2, 3, 10), (2, 4, 35), (3, 2, 3), (4, 4, 105)])
def test_rank(n, r, rank):
    assert rank_nu(n, r) == rank
    assert rank_tau(n, r) == rank


def test_compressed_rows_match_full():
    for n, r in [(2, 3), (3, 3), (2, 4)]:
        full = rref_sparse(nu_full_rows(n, r), len(all_diagrams(r)), QQ(n))
        comp = rref_sparse(nu_coefficient_rows(n, r), len(all_diagrams(r)), QQ(n))
        assert full == comp


def test_kernel_dims():
    assert kernel_nu(2, 3).dim == 5
    assert kernel_nu(2, 4).dim == 70
    assert kernel_nu(2, 4, GF(7, 2)).dim == 70


def test_operator_json():
    obj = nu_diagram(generator_e(1, 2, 2), 2).to_json()
    assert obj["rows"] == 4 and obj["cols"] == 4
    assert obj["entries"][0] == ["1", "0", "0", "1"]

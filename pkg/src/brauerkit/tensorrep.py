"""The Brauer algebra acting on tensor space V^{(x) r}, V = K^n with the dot product.

Multi-indices are 0-based tuples internally and enumerated lexicographically,
so the word ``(i_1, ..., i_r)`` sits at position ``sum i_p n^(r-p)``.
Operators are stored sparsely; row index = top word, column index = bottom word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import AlgebraElement
from .diagram import (
    BrauerDiagram,
    MAX_STRANDS,
    all_diagrams,
    normal_form,
)
from .exactalg import QQ, Matrix, Ring, Subspace, kernel_from_rref, mat_rank, rref_sparse

MAX_DIM = 5000


class SizeBoundError(ValueError):
    """A computation would exceed the configured size bound."""


def check_bound(n: int, r: int, max_dim: int = MAX_DIM) -> None:
    if n < 1 or r < 1:
        raise ValueError(f"need n, r >= 1 (n={n}, r={r})")
    if n ** r > max_dim:
        raise SizeBoundError(f"n^r = {n ** r} exceeds the bound {max_dim} (n={n}, r={r})")


@dataclass(frozen=True)
class TensorSpace:
    n: int
    r: int

    @property
    def dim(self) -> int:
        return self.n ** self.r

    def words(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(range(self.n), repeat=self.r)

    def index(self, word: Sequence[int]) -> int:
        k = 0
        for i in word:
            k = k * self.n + i
        return k

    def word(self, index: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            index, i = divmod(index, self.n)
            out.append(i)
        return tuple(reversed(out))


@dataclass(frozen=True)
class TensorOperator:
    """Sparse exact square matrix on V^{(x) r}."""

    n: int
    r: int
    ring: Ring
    entries: Mapping[tuple[int, int], object]

    @property
    def size(self) -> int:
        return self.n ** self.r

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and _clean(self.entries) == _clean(other.entries)

    def __hash__(self):
        return hash((self.n, self.r, frozenset(_clean(self.entries).items())))

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return TensorOperator(self.n, self.r, self.ring, _clean(out))

    def scale(self, c) -> "TensorOperator":
        return TensorOperator(self.n, self.r, self.ring, _clean({k: c * v for k, v in self.entries.items()}))

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + a * b
        return TensorOperator(self.n, self.r, self.ring, _clean(out))

    def transpose(self) -> "TensorOperator":
        return TensorOperator(self.n, self.r, self.ring, {(j, i): v for (i, j), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not _clean(self.entries)

    def to_matrix(self) -> Matrix:
        rows: list[dict] = [{} for _ in range(self.size)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return Matrix.from_sparse(rows, self.size, self.ring)

    def to_json(self) -> dict:
        return self.to_matrix().to_json()

    @classmethod
    def identity(cls, n: int, r: int, ring: Ring) -> "TensorOperator":
        return cls(n, r, ring, {(i, i): ring.one() for i in range(n ** r)})


def _clean(entries: Mapping) -> dict:
    return {k: v for k, v in entries.items() if v}


# ---------------------------------------------------------------------------
# nu, tau, A


def _check_element(a: AlgebraElement, n: int) -> Ring:
    ring = a.ring
    if ring.kind == "Qdelta":
        raise ValueError("specialize delta to n before applying the tensor representation")
    if ring.delta is None or ring(ring.delta) != ring(n):
        raise ValueError(f"element lives over {ring}; the tensor representation needs delta = {n}")
    return ring


def _edge_words(d: BrauerDiagram, n: int) -> Iterable[tuple[int, ...]]:
    """All 2r-letter words constant along every edge of d."""
    edges = d.edges()
    word = [0] * (2 * d.r)
    for vals in itertools.product(range(n), repeat=len(edges)):
        for (a, b), x in zip(edges, vals):
            word[a - 1] = x
            word[b - 1] = x
        yield tuple(word)


@lru_cache(maxsize=4096)
def _diagram_cells(d: BrauerDiagram, n: int) -> tuple[tuple[int, int], ...]:
    sp = TensorSpace(n, d.r)
    r = d.r
    return tuple((sp.index(w[:r]), sp.index(w[r:])) for w in _edge_words(d, n))


def nu_diagram(d: BrauerDiagram, n: int, ring: Ring | None = None) -> TensorOperator:
    ring = ring or QQ(n)
    one = ring.one()
    return TensorOperator(n, d.r, ring, {c: one for c in _diagram_cells(d, n)})


def nu_matrix(a: AlgebraElement, n: int, max_dim: int = MAX_DIM) -> TensorOperator:
    """``nu(a)``: entry (J, K) of a diagram is 1 iff the word (J, K) is constant on its edges."""
    ring = _check_element(a, n)
    check_bound(n, a.r, max_dim)
    out: dict = {}
    for d, c in a.terms.items():
        for cell in _diagram_cells(d, n):
            out[cell] = out.get(cell, 0) + c
    return TensorOperator(n, a.r, ring, _clean(out))


def place_permutation(sigma: Sequence[int], n: int, ring: Ring | None = None) -> TensorOperator:
    """Operator moving tensor factor ``p`` to position ``sigma(p)`` (1-based images)."""
    ring = ring or QQ(n)
    r = len(sigma)
    sp = TensorSpace(n, r)
    out = {}
    for K in sp.words():
        J = [0] * r
        for p in range(r):
            J[sigma[p] - 1] = K[p]
        out[sp.index(J), sp.index(K)] = ring.one()
    return TensorOperator(n, r, ring, out)


def contraction(i: int, n: int, r: int, ring: Ring | None = None) -> TensorOperator:
    """``phi`` on factors i, i+1: ``v (x) w -> (v, w) sum_k b_k (x) b_k``."""
    ring = ring or QQ(n)
    sp = TensorSpace(n, r)
    out = {}
    for K in sp.words():
        if K[i - 1] != K[i]:
            continue
        for k in range(n):
            J = list(K)
            J[i - 1] = J[i] = k
            out[sp.index(J), sp.index(K)] = ring.one()
    return TensorOperator(n, r, ring, out)


def nu_from_generators(d: BrauerDiagram, n: int, ring: Ring | None = None) -> TensorOperator:
    """``nu(d)`` assembled from place permutations and contractions via the normal form."""
    ring = ring or QQ(n)
    r = d.r
    s1, k, s2 = normal_form(d)
    op = place_permutation(s1, n, ring)
    for m in range(k):
        op = op @ contraction(2 * m + 1, n, r, ring)
    inv = [0] * r
    for p, q in enumerate(s2):
        inv[q - 1] = p + 1
    return op @ place_permutation(inv, n, ring)


def tau_vector(a: AlgebraElement, n: int, max_dim: int = MAX_DIM) -> dict[int, object]:
    """Sparse vector in V^{(x) 2r}: sum of coefficients times edge-constant indicator words."""
    _check_element(a, n)
    check_bound(n, a.r, max_dim)
    sp = TensorSpace(n, 2 * a.r)
    out: dict = {}
    for d, c in a.terms.items():
        for w in _edge_words(d, n):
            k = sp.index(w)
            out[k] = out.get(k, 0) + c
    return _clean(out)


def xi(i: int, j: int, n: int, ring: Ring | None = None) -> TensorOperator:
    """``xi(b_i (x) b_j)``: the map ``x -> (b_j, x) b_i`` on V (0-based indices)."""
    ring = ring or QQ(n)
    return TensorOperator(n, 1, ring, {(i, j): ring.one()})


def kron(a: TensorOperator, b: TensorOperator) -> TensorOperator:
    nb = b.size
    out = {}
    for (i, j), x in a.entries.items():
        for (k, l), y in b.entries.items():
            out[i * nb + k, j * nb + l] = x * y
    return TensorOperator(a.n, a.r + b.r, a.ring, _clean(out))


def operator_from_tensor(v: Mapping[int, object], n: int, r: int, ring: Ring | None = None) -> TensorOperator:
    """Send the word (I, J) to xi(b_I1 (x) b_J1) (x) ... (x) xi(b_Ir (x) b_Jr), extended linearly."""
    ring = ring or QQ(n)
    sp = TensorSpace(n, 2 * r)
    if any(not 0 <= k < sp.dim for k in v):
        raise ValueError(f"vector index outside V^(x){2 * r} for n={n}")
    out: dict = {}
    for k, c in v.items():
        w = sp.word(k)
        op = xi(w[0], w[r], n, ring)
        for p in range(1, r):
            op = kron(op, xi(w[p], w[r + p], n, ring))
        for cell, x in op.entries.items():
            out[cell] = out.get(cell, 0) + c * x
    return TensorOperator(n, r, ring, _clean(out))


def check_fft_commute(n: int, r: int, max_dim: int = MAX_DIM) -> bool:
    """``operator_from_tensor(tau_vector(D)) == nu_matrix(D)`` for every diagram D of B_r(n)."""
    ring = QQ(n)
    for d in all_diagrams(r, max(r, MAX_STRANDS)):
        x = AlgebraElement.from_diagram(d, ring)
        if operator_from_tensor(tau_vector(x, n, max_dim), n, r, ring) != nu_matrix(x, n, max_dim):
            return False
    return True


def pairing(x: Mapping[int, object], y: Mapping[int, object]):
    """The form [-, -] on V^{(x) t} in the orthonormal word basis."""
    if len(x) > len(y):
        x, y = y, x
    return sum((c * y[k] for k, c in x.items() if k in y), 0)


# ---------------------------------------------------------------------------
# rank and kernel


def _set_partitions_even(m: int, max_blocks: int):
    """Set partitions of range(m) into at most max_blocks blocks, each of even size."""

    def rec(k: int, blocks: list[list[int]]):
        if k == m:
            if all(len(b) % 2 == 0 for b in blocks):
                yield tuple(tuple(b) for b in blocks)
            return
        # prune: blocks of odd size need at least one more element each
        odd = sum(len(b) % 2 for b in blocks)
        if odd > m - k:
            return
        for b in blocks:
            b.append(k)
            yield from rec(k + 1, blocks)
            b.pop()
        if len(blocks) < max_blocks:
            blocks.append([k])
            yield from rec(k + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def nu_coefficient_rows(n: int, r: int, max_dim: int = MAX_DIM) -> list[dict[int, int]]:
    """Distinct nonzero rows of the linear map (diagram coefficients) -> entries of nu.

    The entry of nu(D) at a word w only depends on the set partition cut out by
    the equal letters of w; it is 1 iff every edge of D lies inside one block.
    Partitions with at most n blocks are exactly those realized by words.
    """
    check_bound(n, r, max_dim)
    diagrams = all_diagrams(r, max(r, MAX_STRANDS))
    rows = []
    for P in _set_partitions_even(2 * r, n):
        block = [0] * (2 * r)
        for b, part in enumerate(P):
            for v in part:
                block[v] = b
        row = {}
        for k, d in enumerate(diagrams):
            p = d.partner
            if all(block[v] == block[p[v]] for v in range(2 * r)):
                row[k] = 1
        if row:
            rows.append(row)
    return rows


def nu_full_rows(n: int, r: int, max_dim: int = MAX_DIM) -> list[dict[int, int]]:
    """Uncompressed version: one row per operator entry (J, K). For cross-checks on small cases."""
    check_bound(n, r, max_dim)
    diagrams = all_diagrams(r, max(r, MAX_STRANDS))
    rows: dict[tuple[int, int], dict] = {}
    for k, d in enumerate(diagrams):
        for cell in _diagram_cells(d, n):
            rows.setdefault(cell, {})[k] = 1
    return list(rows.values())


def _field(ring: Ring | None, n: int) -> Ring:
    ring = ring or QQ(n)
    if ring.kind == "Qdelta":
        raise ValueError("rank and kernel need a field with delta = n")
    return ring


def rank_nu(n: int, r: int, ring: Ring | None = None, max_dim: int = MAX_DIM, backend: str = "auto") -> int:
    ring = _field(ring, n)
    return len(rref_sparse(nu_coefficient_rows(n, r, max_dim), _num_diagrams(r), ring, backend))


def kernel_nu(n: int, r: int, ring: Ring | None = None, max_dim: int = MAX_DIM, backend: str = "auto") -> Subspace:
    """ker(nu) in coordinates w.r.t. all_diagrams(r)."""
    ring = _field(ring, n)
    ncols = _num_diagrams(r)
    rows = rref_sparse(nu_coefficient_rows(n, r, max_dim), ncols, ring, backend)
    return kernel_from_rref(rows, ncols, ring, backend)


def _num_diagrams(r: int) -> int:
    return len(all_diagrams(r, max(r, MAX_STRANDS)))


def _components(d1: BrauerDiagram, d2: BrauerDiagram) -> int:
    """Connected components of the union of two matchings on the same 2r vertices."""
    m = 2 * d1.r
    seen = [False] * m
    count = 0
    for v in range(m):
        if seen[v]:
            continue
        count += 1
        cur, use_first = v, True
        while not seen[cur]:
            seen[cur] = True
            cur = d1.partner[cur] if use_first else d2.partner[cur]
            seen[cur] = True
            cur = d2.partner[cur] if use_first else d1.partner[cur]
    return count


def tau_gram_matrix(n: int, r: int) -> Matrix:
    """``[t_D, t_D'] = n^(components of D u D')`` over all diagram pairs."""
    diagrams = all_diagrams(r, max(r, MAX_STRANDS))
    rows = [[n ** _components(a, b) for b in diagrams] for a in diagrams]
    return Matrix.from_rows(rows, QQ(n))


def rank_tau(n: int, r: int, backend: str = "auto") -> int:
    """dim span{t_D}, computed from the Gram matrix of the positive-definite form."""
    return mat_rank(tau_gram_matrix(n, r), backend)


# ---------------------------------------------------------------------------
# equivariance


def signed_permutation(perm: Sequence[int], signs: Sequence[int], r: int, ring: Ring) -> TensorOperator:
    """``g^{(x) r}`` for g: b_k -> signs[k] b_perm[k] (0-based)."""
    n = len(perm)
    sp = TensorSpace(n, r)
    out = {}
    for K in sp.words():
        J = [perm[k] for k in K]
        c = 1
        for k in K:
            c *= signs[k]
        out[sp.index(J), sp.index(K)] = ring(c)
    return TensorOperator(n, r, ring, out)


def hyperoctahedral_generators(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append((tuple(perm), (1,) * n))
    gens.append((tuple(range(n)), (-1,) + (1,) * (n - 1)))
    return gens


def check_equivariance(n: int, r: int, max_dim: int = MAX_DIM) -> bool:
    """nu(D) commutes with g^{(x) r} for generators g of the signed permutation group."""
    ring = QQ(n)
    check_bound(n, r, max_dim)
    gs = [signed_permutation(p, s, r, ring) for p, s in hyperoctahedral_generators(n)]
    for d in all_diagrams(r, max(r, MAX_STRANDS)):
        op = nu_diagram(d, n, ring)
        if any(op @ g != g @ op for g in gs):
            return False
    return True


__all__ = [
    "MAX_DIM", "SizeBoundError", "TensorSpace", "TensorOperator", "nu_matrix", "nu_diagram",
    "nu_from_generators", "place_permutation", "contraction", "tau_vector", "xi", "kron", "operator_from_tensor",
    "check_fft_commute", "pairing", "nu_coefficient_rows", "nu_full_rows", "rank_nu", "kernel_nu",
    "tau_gram_matrix", "rank_tau", "signed_permutation", "hyperoctahedral_generators",
    "check_equivariance", "check_bound",
]

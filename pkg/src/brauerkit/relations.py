"""Kernel elements of nu and the identities used to prove they generate it.

Every element here lives in B_r(n), the Brauer algebra with delta = n, unless
a ring is passed explicitly.  The ``check_*`` functions evaluate both sides
of an identity exactly and compare.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import (
    AlgebraElement,
    alt_interval,
    alt_times,
    apply_star,
    element,
    ideal_membership,
    ideal_span,
    sign,
    times_alt,
)
from .diagram import (
    BrauerDiagram,
    compose,
    generator_e,
    identity_diagram,
    invert_perm,
    perm_diagram,
)
from .exactalg import QQ, QQ_DELTA, Ring


def default_ring(n: int) -> Ring:
    return QQ(n)


def _inv_factorials(*args: int) -> Fraction:
    den = 1
    for a in args:
        den *= factorial(a)
    return Fraction(1, den)


# ---------------------------------------------------------------------------
# b(S, S', beta)


@dataclass(frozen=True)
class RelationTriple:
    """Disjoint (n+1)-sets ``S``, ``Sp`` of vertices and a pairing ``beta`` of the rest.

    Vertices are 1-based labels in 1..2r; ``S`` and ``Sp`` are kept sorted.
    """

    n: int
    r: int
    S: tuple[int, ...]
    Sp: tuple[int, ...]
    beta: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        S, Sp = tuple(sorted(self.S)), tuple(sorted(self.Sp))
        beta = tuple(sorted(tuple(sorted(p)) for p in self.beta))
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "Sp", Sp)
        object.__setattr__(self, "beta", beta)
        n, r = self.n, self.r
        if r < n + 1:
            raise ValueError(f"relations need r >= n+1 (n={n}, r={r})")
        if len(S) != n + 1 or len(Sp) != n + 1 or len(set(S)) != n + 1 or len(set(Sp)) != n + 1:
            raise ValueError("S and S' must each have n+1 distinct vertices")
        if set(S) & set(Sp):
            raise ValueError("S and S' must be disjoint")
        rest = set(range(1, 2 * r + 1)) - set(S) - set(Sp)
        covered = [v for p in beta for v in p]
        if len(covered) != len(set(covered)) or set(covered) != rest:
            raise ValueError("beta must pair exactly the vertices outside S and S'")
        if not all(1 <= v <= 2 * r for v in S + Sp):
            raise ValueError("vertex out of range")

    def to_json_obj(self) -> dict:
        return {"S": list(self.S), "Sp": list(self.Sp), "beta": [list(p) for p in self.beta]}

    @classmethod
    def from_json_obj(cls, obj, n: int, r: int) -> "RelationTriple":
        return cls(n, r, tuple(obj["S"]), tuple(obj["Sp"]), tuple(tuple(p) for p in obj["beta"]))


def triple_diagram(t: RelationTriple, pi: Sequence[int]) -> BrauerDiagram:
    """Diagram joining the k-th point of S to the pi(k)-th point of S', plus beta."""
    if sorted(pi) != list(range(1, t.n + 2)):
        raise ValueError(f"not a permutation of 1..{t.n + 1}: {pi}")
    edges = [(t.S[k], t.Sp[pi[k] - 1]) for k in range(t.n + 1)]
    return BrauerDiagram.from_edges(t.r, edges + list(t.beta))


def relation_element(t: RelationTriple, ring: Ring | None = None) -> AlgebraElement:
    """Alternating sum of the (n+1)! diagrams ``D_pi(S, S', beta)``."""
    ring = ring or default_ring(t.n)
    terms = {}
    for pi in itertools.permutations(range(1, t.n + 2)):
        terms[triple_diagram(t, pi)] = sign(pi)
    return AlgebraElement(t.r, ring, terms)


def all_triples(n: int, r: int):
    """Every valid triple (S, S', beta) for B_r(n), each unordered {S, S'} once."""
    verts = range(1, 2 * r + 1)
    from .diagram import _matchings

    for S in itertools.combinations(verts, n + 1):
        rest = [v for v in verts if v not in S]
        for Sp in itertools.combinations(rest, n + 1):
            if Sp < S:
                continue
            others = tuple(v for v in rest if v not in Sp)
            for beta in _matchings(tuple(x - 1 for x in others)):
                yield RelationTriple(n, r, S, Sp, tuple((a + 1, b + 1) for a, b in beta))


# ---------------------------------------------------------------------------
# F_i, e_i(j), E_i


def _check_i(i: int, n: int, r: int) -> None:
    if not 0 <= i <= (n + 1) // 2:
        raise ValueError(f"i={i} outside 0..{(n + 1) // 2}")
    if r < n + 1:
        raise ValueError(f"need r >= n+1 (n={n}, r={r})")


def split_alternator(i: int, n: int, r: int, ring: Ring | None = None) -> AlgebraElement:
    """``F_i = a(1, i) a(i+1, n+1)``; ``F_0 = a(1, n+1)``."""
    _check_i(i, n, r)
    ring = ring or default_ring(n)
    return alt_times(1, i, alt_interval(i + 1, n + 1, r, ring))


def nested_arcs(i: int, j: int, r: int) -> BrauerDiagram:
    """``e_i(j) = e_{i,i+1} e_{i-1,i+2} ... e_{i-j+1,i+j}``: j nested arcs centred at i, i+1."""
    if j == 0:
        return identity_diagram(r)
    if not (1 <= j <= i and i + j <= r):
        raise ValueError(f"e_{i}({j}) does not fit in r={r}")
    d = generator_e(i, i + 1, r)
    for m in range(2, j + 1):
        d = compose(d, generator_e(i - m + 1, i + m, r)).result
    return d


def _sandwich(left: Sequence[tuple[int, int]], d: BrauerDiagram, right: Sequence[tuple[int, int]], ring: Ring) -> AlgebraElement:
    """``a(left...) * d * a(right...)`` for lists of alternating intervals."""
    x = element(d, ring)
    for k, l in reversed(left):
        x = alt_times(k, l, x)
    for k, l in right:
        x = times_alt(x, k, l)
    return x


def kernel_coefficient(i: int, j: int, n: int) -> Fraction:
    return _inv_factorials(i - j, n + 1 - i - j, j, j)


def kernel_element(i: int, n: int, r: int, ring: Ring | None = None) -> AlgebraElement:
    """``E_i = sum_j (-1)^j kernel_coefficient(j) F_i e_i(j) F_i``."""
    _check_i(i, n, r)
    ring = ring or default_ring(n)
    F = [(1, i), (i + 1, n + 1)]
    out = AlgebraElement.zero(r, ring)
    for j in range(i + 1):
        coeff = kernel_coefficient(i, j, n) * (-1) ** j
        out = out + _sandwich(F, nested_arcs(i, j, r), F, ring).scale(coeff)
    return out


def times_kernel_element(x: AlgebraElement, i: int, n: int) -> AlgebraElement:
    """``x * E_i``, right-multiplying by each ``F_i e_i(j) F_i`` factor by factor."""
    _check_i(i, n, x.r)
    out = AlgebraElement.zero(x.r, x.ring)
    for j in range(i + 1):
        y = times_alt(times_alt(x, 1, i), i + 1, n + 1)
        y = y * element(nested_arcs(i, j, x.r), x.ring)
        y = times_alt(times_alt(y, 1, i), i + 1, n + 1)
        out = out + y.scale(kernel_coefficient(i, j, n) * (-1) ** j)
    return out


def kernel_generator(n: int, r: int, ring: Ring | None = None) -> AlgebraElement:
    """The generator ``E = E_{floor((n+1)/2)}`` of ker(nu)."""
    return kernel_element((n + 1) // 2, n, r, ring)


def quasi_idempotent_constant(i: int, n: int) -> int:
    return factorial(i) * factorial(n + 1 - i)


def kernel_triple(i: int, n: int, r: int) -> RelationTriple:
    """``(S_i, S'_i, beta_i)`` with ``E_i = +-b(S_i, S'_i, beta_i)``."""
    _check_i(i, n, r)
    S = tuple(range(1, i + 1)) + tuple(range(i + 1 + r, n + 2 + r))
    Sp = tuple(range(i + 1, n + 2)) + tuple(range(r + 1, r + i + 1))
    beta = tuple((v, v + r) for v in range(n + 2, r + 1))
    return RelationTriple(n, r, S, Sp, beta)


def relative_sign(x: AlgebraElement, y: AlgebraElement) -> int | None:
    """``+1`` or ``-1`` if ``x == +-y``, else None."""
    if x == y:
        return 1
    if x == -y:
        return -1
    return None


# ---------------------------------------------------------------------------
# deficiency pairs and E_ij


@dataclass(frozen=True)
class DeficiencyPair:
    i: int
    j: int
    n: int
    d: int = field(init=False)

    def __post_init__(self):
        i, j, n = self.i, self.j, self.n
        if not (0 <= i <= j <= n + 1 and i + j >= n + 1):
            raise ValueError(f"invalid pair (i={i}, j={j}) for n={n}")
        object.__setattr__(self, "d", i + j - (n + 1))


def deficiency_pairs(n: int, max_size: int | None = None) -> list[DeficiencyPair]:
    out = []
    for i in range(n + 2):
        for j in range(i, n + 2):
            if i + j >= n + 1 and (max_size is None or i + j <= max_size):
                out.append(DeficiencyPair(i, j, n))
    return out


def deficiency_perm(p: DeficiencyPair, r: int) -> tuple[int, ...]:
    """The piecewise permutation of 1..r attached to a deficiency pair (images tuple)."""
    i, j, n, d = p.i, p.j, p.n, p.d
    if i + j > r:
        raise ValueError(f"i+j={i + j} exceeds r={r}")
    out = []
    for l in range(1, r + 1):
        if l <= n + 1 - j or l > i + j:
            out.append(l)
        elif i - d + 1 <= l <= i + d:
            out.append(l + n + 1 - i)
        else:
            out.append(l - 2 * d)
    return tuple(out)


def deficiency_perm_diagram(p: DeficiencyPair, r: int) -> BrauerDiagram:
    """Diagram of deficiency_perm as it multiplies on the right of e_i(k + d).

    It sends bottom vertex ``r + l`` of ``e_i(k+d)`` to ``r + deficiency_perm(l)``, which
    is the diagram of the inverse permutation in the ``(sigma(i), r+i)``
    convention used by :func:`perm_diagram`.
    """
    return perm_diagram(invert_perm(deficiency_perm(p, r)))


def deficiency_diagram(p: DeficiencyPair, k: int, r: int) -> BrauerDiagram:
    """``deficiency_diagram(k) = e_i(k + d_ij) deficiency_perm``."""
    if not 0 <= k <= p.n + 1 - p.j:
        raise ValueError(f"k={k} outside 0..{p.n + 1 - p.j}")
    return compose(nested_arcs(p.i, k + p.d, r), deficiency_perm_diagram(p, r)).result


def deficiency_coefficient(p: DeficiencyPair, k: int) -> Fraction:
    i, j, n, d = p.i, p.j, p.n, p.d
    return _inv_factorials(n + 1 - j - k, n + 1 - i - k, k, d + k)


def deficiency_element(p: DeficiencyPair, r: int, ring: Ring | None = None) -> AlgebraElement:
    """Generalized kernel element built from the deficiency_diagram(k) with alternating right factor."""
    i, j, n, d = p.i, p.j, p.n, p.d
    if r < i + j:
        raise ValueError(f"need r >= i+j = {i + j}")
    ring = ring or default_ring(n)
    left = [(1, i), (i + 1, i + j)]
    right = [(1, n + 1 - j), (n + 2 - j, n + 1 - d)]
    out = AlgebraElement.zero(r, ring)
    for k in range(n + 2 - j):
        term = _sandwich(left, deficiency_diagram(p, k, r), right, ring)
        out = out + term.scale(deficiency_coefficient(p, k) * (-1) ** k)
    return out


def deficiency_element_rewritten(p: DeficiencyPair, r: int, ring: Ring | None = None) -> AlgebraElement:
    """The same element with deficiency_perm pulled to the far right and the right factor conjugated."""
    i, j, n, d = p.i, p.j, p.n, p.d
    ring = ring or default_ring(n)
    left = [(1, i), (i + 1, i + j)]
    right = [(1, n + 1 - j), (2 * i + j - n, i + j)]
    pi = element(deficiency_perm_diagram(p, r), ring)
    out = AlgebraElement.zero(r, ring)
    for k in range(n + 2 - j):
        term = _sandwich(left, nested_arcs(i, k + d, r), right, ring) * pi
        out = out + term.scale(deficiency_coefficient(p, k) * (-1) ** k)
    return out


def deficiency_triple(p: DeficiencyPair, r: int) -> RelationTriple:
    """``(S_ij, S'_ij, beta)`` such that ``E_ij = +-b(S_ij, S'_ij, beta)``."""
    i, j, n, d = p.i, p.j, p.n, p.d
    S = tuple(range(1, i + 1)) + tuple(range(r + i + 1 - d, r + n + 2 - d))
    Sp = tuple(range(i + 1, i + j + 1)) + tuple(range(r + 1, r + i - d + 1))
    inside = set(S) | set(Sp)
    d0 = deficiency_diagram(p, 0, r)
    beta = tuple(e for e in d0.edges() if e[0] not in inside and e[1] not in inside)
    return RelationTriple(n, r, S, Sp, beta)


def check_deficiency_rewriting(p: DeficiencyPair, r: int, ring: Ring | None = None) -> bool:
    """The two expressions for E_ij agree, and every deficiency_diagram(k) pairs S_ij with S'_ij."""
    t = deficiency_triple(p, r)
    S, Sp = set(t.S), set(t.Sp)
    for k in range(p.n + 2 - p.j):
        for a, b in deficiency_diagram(p, k, r).edges():
            if (a in S) == (b in S) and (a in Sp) == (b in Sp) and (a in S or a in Sp):
                return False
    return deficiency_element(p, r, ring) == deficiency_element_rewritten(p, r, ring)


# ---------------------------------------------------------------------------
# identities in B_s(delta)


def check_alt_sum_recursion(m: int, ring: Ring = QQ_DELTA) -> bool:
    """``a(Sym_m) = a(Sym_{m-1}) - (m-2)!^{-1} a(Sym_{m-1}) s_{m-1} a(Sym_{m-1})``."""
    if m < 2:
        raise ValueError("need m >= 2")
    r = m
    prev = alt_interval(1, m - 1, r, ring)
    s_last = element(perm_diagram(_swap(m - 1, r)), ring)
    middle = times_alt(alt_times(1, m - 1, s_last), 1, m - 1)
    rhs = prev - middle.scale(Fraction(1, factorial(m - 2)))
    return alt_interval(1, m, r, ring) == rhs


def _swap(i: int, r: int) -> tuple[int, ...]:
    sigma = list(range(1, r + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return tuple(sigma)


def _e(i: int, j: int, r: int) -> BrauerDiagram:
    return generator_e(i, j, r)


def check_arc_sandwich(i: int, s: int, ring: Ring = QQ_DELTA) -> bool:
    """``e_{i,i+1} F e_{i,i+1} = (d - s + 2) F' e_{i,i+1} + [(i-2)!(s-i-2)!]^{-1} e_{i,i+1} F' e_{i-1,i+2} F'``.

    ``i = 1`` is the degenerate case where the second term is absent.
    """
    if not 1 <= i <= s - 2:
        raise ValueError(f"need 1 <= i <= s-2 (i={i}, s={s})")
    r = s
    F = [(1, i), (i + 1, s)]
    Fp = [(1, i - 1), (i + 2, s)]
    ei = _e(i, i + 1, r)
    lhs = _left_diag(ei, _sandwich(F, ei, [], ring))
    rhs = _sandwich(Fp, ei, [], ring).scale(ring.delta_value() - s + 2)
    if i >= 2:
        inner = _sandwich(Fp, _e(i - 1, i + 2, r), Fp, ring)
        rhs = rhs + _left_diag(ei, inner).scale(_inv_factorials(i - 2, s - i - 2))
    return lhs == rhs


def _left_diag(d: BrauerDiagram, x: AlgebraElement) -> AlgebraElement:
    return element(d, x.ring) * x


class NestedArcs:
    """Notation for the iterated arc identities in B_s(delta) at fixed (i, s)."""

    def __init__(self, i: int, s: int, ring: Ring = QQ_DELTA):
        if not (1 <= i and 2 * i <= s):
            raise ValueError(f"need 1 <= i <= s - i (i={i}, s={s})")
        self.i, self.s, self.ring, self.r = i, s, ring, s

    def J(self, k: int) -> list[tuple[int, int]]:
        return [(1, self.i - k), (self.i + k + 1, self.s)]

    def e(self, j: int) -> BrauerDiagram | None:
        """``e(j) = e_{i-j+1, i+j}``; None (meaning 0) when j > i."""
        if j > self.i:
            return None
        return _e(self.i - j + 1, self.i + j, self.r)

    def e_prod(self, k: int) -> BrauerDiagram | None:
        """``e(1) e(2) ... e(k)``, which is the nested-arc diagram e_i(k)."""
        if k > self.i:
            return None
        return nested_arcs(self.i, k, self.r)

    def A(self, k: int):
        return (self.ring.delta_value() - self.s + 2) * k + k * (k - 1)

    def B(self, k: int) -> Fraction:
        return _inv_factorials(self.i - k - 1, self.s - self.i - k - 1)

    def J_elem(self, k: int, x: AlgebraElement, side: str) -> AlgebraElement:
        for a, b in self.J(k) if side == "right" else reversed(self.J(k)):
            x = times_alt(x, a, b) if side == "right" else alt_times(a, b, x)
        return x

    def A_recursive(self, k: int):
        """A_k and B_k from the first-order recursion, as an independent check of the closed form."""
        A, B = self.ring.zero(), self.B(0)
        for m in range(k):
            A = A + (self.ring.delta_value() - self.s + 2 * m + 2) * B * factorial(self.i - m - 1) * factorial(self.s - self.i - m - 1)
            B = B * (self.i - m - 1) * (self.s - self.i - m - 1)
        return A, B


def check_nested_arc_step(i: int, s: int, j: int, ring: Ring = QQ_DELTA) -> bool:
    """``e(j+1) J_j e(j+1) = (d - s + 2j + 2) J_{j+1} e(j+1) + [(i-j-2)!(s-i-j-2)!]^{-1} e(j+1) J_{j+1} e(j+2) J_{j+1}``.

    At ``j = i - 1`` the second term is absent (``e(i+1) = 0``); that case is the last step.
    """
    c = NestedArcs(i, s, ring)
    if not 0 <= j <= i - 1:
        raise ValueError(f"need 0 <= j <= i-1 (i={i}, j={j})")
    ej1 = c.e(j + 1)
    lhs = _left_diag(ej1, c.J_elem(j, element(ej1, ring), "left"))
    rhs = c.J_elem(j + 1, element(ej1, ring), "left").scale(ring.delta_value() - s + 2 * j + 2)
    if j <= i - 2:
        inner = c.J_elem(j + 1, c.J_elem(j + 1, element(c.e(j + 2), ring), "left"), "right")
        rhs = rhs + _left_diag(ej1, inner).scale(_inv_factorials(i - j - 2, s - i - j - 2))
    return lhs == rhs


def check_nested_arc_last_step(i: int, s: int, ring: Ring = QQ_DELTA) -> bool:
    """``e(i) J_{i-1} e(i) = (d - s + 2i) J_i e(i)``."""
    c = NestedArcs(i, s, ring)
    ei = c.e(i)
    lhs = _left_diag(ei, c.J_elem(i - 1, element(ei, ring), "left"))
    rhs = c.J_elem(i, element(ei, ring), "left").scale(ring.delta_value() - s + 2 * i)
    return lhs == rhs


def check_nested_arc_expansion(i: int, s: int, k: int, ring: Ring = QQ_DELTA) -> bool:
    """``e(1) J_0 e(1)...e(k) = A_k J_1 e(1)...e(k) + B_k J_1 e(1)...e(k+1) J_k``.

    For ``k = i`` the second term is absent; it is then a single multiple of the nested arcs.
    """
    c = NestedArcs(i, s, ring)
    if not 0 <= k <= i:
        raise ValueError(f"need 0 <= k <= i (i={i}, k={k})")
    e1 = c.e(1)
    lhs = _left_diag(e1, c.J_elem(0, element(c.e_prod(k), ring), "left"))
    rhs = c.J_elem(1, element(c.e_prod(k), ring), "left").scale(c.A(k))
    if k < i:
        second = c.J_elem(k, c.J_elem(1, element(c.e_prod(k + 1), ring), "left"), "right")
        rhs = rhs + second.scale(c.B(k))
    return lhs == rhs


def check_nested_arc_coefficients(i: int, s: int) -> bool:
    """The closed forms for A_k, B_k solve their recursion for k = 0..i."""
    c = NestedArcs(i, s, QQ_DELTA)
    for k in range(i + 1):
        A, B = c.A_recursive(k)
        if A != c.A(k):
            return False
        if k < i and B != c.B(k):
            return False
    return True


def check_arc_action_on_kernel_element(i: int, n: int, k: int, ring: Ring | None = None) -> bool:
    """``e_i F_i e_i(k) F_i = k^2 F_i(1) e_i(k) F_i + (i-k)(n+1-i-k) F_i(1) e_i(k+1) F_i`` in B_{n+1}(n)."""
    r = n + 1
    ring = ring or default_ring(n)
    if not (1 <= i <= (n + 1) // 2 and 0 <= k <= i):
        raise ValueError(f"bad indices i={i}, k={k} for n={n}")
    F = [(1, i), (i + 1, n + 1)]
    F1 = [(1, i - 1), (i + 2, n + 1)]
    lhs = _left_diag(_e(i, i + 1, r), _sandwich(F, nested_arcs(i, k, r), F, ring))
    rhs = _sandwich(F1, nested_arcs(i, k, r), F, ring).scale(k * k)
    if k < i:
        rhs = rhs + _sandwich(F1, nested_arcs(i, k + 1, r), F, ring).scale((i - k) * (n + 1 - i - k))
    return lhs == rhs


# ---------------------------------------------------------------------------
# catalog


class KernelCatalog:
    """Lazily built kernel elements of B_r(n) (delta = n)."""

    def __init__(self, n: int, r: int, ring: Ring | None = None):
        if r < n + 1:
            raise ValueError(f"kernel elements need r >= n+1 (n={n}, r={r})")
        self.n, self.r = n, r
        self.ring = ring or default_ring(n)
        self._E: dict[int, AlgebraElement] = {}
        self._Eij: dict[tuple[int, int], AlgebraElement] = {}

    @property
    def top_index(self) -> int:
        return (self.n + 1) // 2

    def E_i(self, i: int) -> AlgebraElement:
        if i not in self._E:
            self._E[i] = kernel_element(i, self.n, self.r, self.ring)
        return self._E[i]

    @property
    def E(self) -> AlgebraElement:
        return self.E_i(self.top_index)

    def F_i(self, i: int) -> AlgebraElement:
        return split_alternator(i, self.n, self.r, self.ring)

    def pairs(self) -> list[DeficiencyPair]:
        return deficiency_pairs(self.n, self.r)

    def E_ij(self, i: int, j: int) -> AlgebraElement:
        if (i, j) not in self._Eij:
            self._Eij[i, j] = deficiency_element(DeficiencyPair(i, j, self.n), self.r, self.ring)
        return self._Eij[i, j]

    def E_ij_star(self, i: int, j: int) -> AlgebraElement:
        return apply_star(self.E_ij(i, j))


def is_plus_minus_one(x: AlgebraElement) -> bool:
    return all(c == 1 or c == -1 for c in x.terms.values())


__all__ = [
    "RelationTriple", "DeficiencyPair", "KernelCatalog", "triple_diagram", "relation_element", "all_triples",
    "split_alternator", "nested_arcs", "kernel_element", "kernel_generator", "times_kernel_element", "kernel_coefficient", "deficiency_coefficient", "kernel_triple", "deficiency_triple",
    "deficiency_perm", "deficiency_perm_diagram", "deficiency_diagram", "deficiency_element", "deficiency_element_rewritten", "deficiency_pairs",
    "check_alt_sum_recursion", "check_arc_sandwich", "check_nested_arc_step", "check_nested_arc_last_step",
    "check_nested_arc_expansion", "check_nested_arc_coefficients", "check_arc_action_on_kernel_element", "check_deficiency_rewriting",
    "ideal_membership", "ideal_span", "is_plus_minus_one", "quasi_idempotent_constant",
    "relative_sign", "default_ring", "NestedArcs",
]

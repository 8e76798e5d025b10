"""The Brauer algebra B_r(delta) as finite linear combinations of diagrams."""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .diagram import (
    MAX_STRANDS,
    BrauerDiagram,
    StrandMismatchError,
    _compose_tables,
    _make,
    all_diagrams,
    diagram_index,
    diagram_permutation,
    generator_e,
    generator_s,
    identity_diagram,
    perm_diagram,
    star,
    through_count,
)
from .exactalg import QQ, QQ_DELTA, GF, Ring, RingMismatchError, Subspace, rref_sparse
from .exactalg.scalars import Mod, _fraction_mod


class AlgebraElement:
    """Sparse combination ``sum c_D D`` in B_r(delta) over ``ring``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("r", "ring", "terms")

    def __init__(self, r: int, ring: Ring, terms: Mapping[BrauerDiagram, object] | None = None):
        self.r = r
        self.ring = ring
        clean = {}
        for d, c in (terms or {}).items():
            if d.r != r:
                raise StrandMismatchError(f"diagram with r={d.r} in an element of B_{r}")
            c = ring(c)
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, r: int, ring: Ring, terms: dict) -> "AlgebraElement":
        obj = object.__new__(cls)
        obj.r, obj.ring = r, ring
        obj.terms = {d: c for d, c in terms.items() if c}
        return obj

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, ring: Ring, coeff=1) -> "AlgebraElement":
        return cls(d.r, ring, {d: coeff})

    @classmethod
    def zero(cls, r: int, ring: Ring) -> "AlgebraElement":
        return cls._trusted(r, ring, {})

    @classmethod
    def one(cls, r: int, ring: Ring) -> "AlgebraElement":
        return cls._trusted(r, ring, {identity_diagram(r): ring.one()})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.r != other.r:
            raise StrandMismatchError(f"B_{self.r} vs B_{other.r}")
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return AlgebraElement._trusted(self.r, self.ring, out)

    def __neg__(self):
        return AlgebraElement._trusted(self.r, self.ring, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.ring(c)
        return AlgebraElement._trusted(self.r, self.ring, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, BrauerDiagram):
            return multiply(self, AlgebraElement.from_diagram(other, self.ring))
        try:
            return self.scale(other)
        except (RingMismatchError, TypeError):
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, BrauerDiagram):
            return multiply(AlgebraElement.from_diagram(other, self.ring), self)
        try:
            return self.scale(other)
        except (RingMismatchError, TypeError):
            return NotImplemented

    def __pow__(self, k: int):
        out = AlgebraElement.one(self.r, self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.r == other.r and self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, d: BrauerDiagram):
        return self.terms.get(d, self.ring.zero())

    def sorted_terms(self) -> list[tuple[BrauerDiagram, object]]:
        return sorted(self.terms.items(), key=lambda t: t[0].edges())

    def __repr__(self):
        if not self.terms:
            return f"<0 in B_{self.r} over {self.ring}>"
        body = " + ".join(f"({c})*[{d}]" for d, c in self.sorted_terms()[:6])
        more = f" + ... ({len(self.terms)} terms)" if len(self.terms) > 6 else ""
        return f"<{body}{more} over {self.ring}>"

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        obj = {
            "r": self.r,
            "ring": self.ring.to_json(),
            "terms": [
                {"coeff": self.ring.format(c), "edges": [list(e) for e in d.edges()]}
                for d, c in self.sorted_terms()
            ],
        }
        if self.ring.delta is not None:
            obj["delta"] = str(self.ring.delta)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "AlgebraElement":
        delta = Fraction(obj["delta"]) if "delta" in obj else None
        ring = Ring.from_json(obj["ring"], delta)
        r = int(obj["r"])
        terms: dict = {}
        for t in obj["terms"]:
            d = BrauerDiagram.from_edges(r, t["edges"])
            if d in terms:
                raise ValueError(f"diagram {d} listed twice")
            terms[d] = ring.parse(t["coeff"])
        return cls(r, ring, terms)

    @classmethod
    def from_json(cls, text: str) -> "AlgebraElement":
        return cls.from_json_obj(json.loads(text))


def element(d: BrauerDiagram, ring: Ring = QQ_DELTA, coeff=1) -> AlgebraElement:
    return AlgebraElement.from_diagram(d, ring, coeff)


def s(i: int, r: int, ring: Ring = QQ_DELTA) -> AlgebraElement:
    return element(generator_s(i, r), ring)


def e(i: int, r: int, ring: Ring = QQ_DELTA, j: int | None = None) -> AlgebraElement:
    """``e_i = e_{i,i+1}``, or ``e_{i,j}`` when ``j`` is given."""
    return element(generator_e(i, i + 1 if j is None else j, r), ring)


def perm(sigma: Sequence[int], ring: Ring = QQ_DELTA) -> AlgebraElement:
    return element(perm_diagram(sigma), ring)


# ---------------------------------------------------------------------------
# multiplication


class _Weights:
    """Cached powers of delta in one ring."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.powers = [ring.one()]

    def __getitem__(self, k: int):
        while len(self.powers) <= k:
            self.powers.append(self.powers[-1] * self.ring.delta_value())
        return self.powers[k]


@lru_cache(maxsize=None)
def _weights(ring: Ring) -> _Weights:
    return _Weights(ring)


@lru_cache(maxsize=1 << 20)
def _diagram_product(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    partner, loops = _compose_tables(d1.r, d1.partner, d2.partner)
    return _make(d1.r, partner), loops


def _as_ints(terms: dict) -> dict | None:
    out = {}
    for d, c in terms.items():
        if c.denominator != 1:
            return None
        out[d] = c.numerator
    return out


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product; each diagram product picks up delta**loops."""
    a._check(b)
    w = _weights(a.ring)
    at, bt = a.terms, b.terms
    integral = False
    if a.ring.kind == "Q" and a.ring.delta is not None and a.ring.delta.denominator == 1:
        ai, bi = _as_ints(at), _as_ints(bt)
        if ai is not None and bi is not None:
            at, bt, integral = ai, bi, True
            delta = a.ring.delta.numerator
    out: dict = {}
    get = out.get
    bitems = list(bt.items())
    for d1, c1 in at.items():
        for d2, c2 in bitems:
            d, loops = _diagram_product(d1, d2)
            c = c1 * c2
            if loops:
                c = c * (delta ** loops if integral else w[loops])
            prev = get(d)
            out[d] = c if prev is None else prev + c
    if integral:
        out = {d: Fraction(c) for d, c in out.items() if c}
    return AlgebraElement._trusted(a.r, a.ring, out)


def product(*factors: AlgebraElement) -> AlgebraElement:
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# symmetric group pieces


def sign(sigma: Sequence[int]) -> int:
    """Alternating character of a permutation given by its images."""
    seen = [False] * len(sigma)
    sgn = 1
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j] - 1
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def _interval_perms(k: int, l: int, r: int):
    pts = list(range(k, l + 1))
    for images in itertools.permutations(pts):
        sigma = list(range(1, r + 1))
        for a, b in zip(pts, images):
            sigma[a - 1] = b
        yield tuple(sigma)


def alt_interval(k: int, l: int, r: int, ring: Ring = QQ_DELTA) -> AlgebraElement:
    """``a(k, l) = sum over Sym{k..l} of sign(sigma) sigma``; 1 when k >= l."""
    if k >= l:
        if not (0 <= l and k <= r + 1):
            raise ValueError(f"a({k},{l}) out of range for r={r}")
        return AlgebraElement.one(r, ring)
    if not 1 <= k < l <= r:
        raise ValueError(f"a({k},{l}) out of range for r={r}")
    one = ring.one()
    terms = {}
    for sigma in _interval_perms(k, l, r):
        terms[perm_diagram(sigma)] = one if sign(sigma) == 1 else -one
    return AlgebraElement._trusted(r, ring, terms)


def _transposition(a: int, b: int, r: int) -> BrauerDiagram:
    sigma = list(range(1, r + 1))
    sigma[a - 1], sigma[b - 1] = b, a
    return perm_diagram(sigma)


@lru_cache(maxsize=None)
def _coset_factors(k: int, l: int, r: int) -> tuple[tuple[tuple[BrauerDiagram, int], ...], ...]:
    # a(k, m) = a(k, m-1) * (1 - sum_{t<m} (t m)) = (1 - sum_{t<m} (t m)) * a(k, m-1)
    out = []
    for m in range(k + 1, l + 1):
        factor = [(identity_diagram(r), 1)]
        factor += [(_transposition(t, m, r), -1) for t in range(k, m)]
        out.append(tuple(factor))
    return tuple(out)


def _times_factor(x: AlgebraElement, factor, left: bool) -> AlgebraElement:
    out: dict = {}
    get = out.get
    for d, c in x.terms.items():
        for g, sgn in factor:
            # permutation diagrams never close loops
            nd = _diagram_product(g, d)[0] if left else _diagram_product(d, g)[0]
            v = c if sgn == 1 else -c
            prev = get(nd)
            out[nd] = v if prev is None else prev + v
    return AlgebraElement._trusted(x.r, x.ring, out)


def times_alt(x: AlgebraElement, k: int, l: int) -> AlgebraElement:
    """``x * a(k, l)`` via the coset factorization of the alternating sum."""
    for factor in _coset_factors(k, l, x.r):
        x = _times_factor(x, factor, left=False)
    return x


def alt_times(k: int, l: int, x: AlgebraElement) -> AlgebraElement:
    """``a(k, l) * x`` via the coset factorization of the alternating sum."""
    for factor in _coset_factors(k, l, x.r):
        x = _times_factor(x, factor, left=True)
    return x


def is_group_algebra_element(a: AlgebraElement) -> bool:
    return all(through_count(d) == a.r for d in a.terms)


# ---------------------------------------------------------------------------
# involution and ring changes


def apply_star(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement._trusted(a.r, a.ring, {star(d): c for d, c in a.terms.items()})


def specialize_delta(a: AlgebraElement, value) -> AlgebraElement:
    """Evaluate a Q[d] element at ``d = value``, giving an element over Q."""
    if a.ring.kind != "Qdelta":
        raise RingMismatchError(f"specialize_delta needs a Q[d] element, got {a.ring}")
    value = Fraction(value)
    ring = QQ(value)
    return AlgebraElement._trusted(a.r, ring, {d: c.evaluate(value) for d, c in a.terms.items()})


def reduce_mod_p(a: AlgebraElement, p: int) -> AlgebraElement:
    """Reduce a Q element with p-integral coefficients into F_p."""
    if a.ring.kind != "Q":
        raise RingMismatchError(f"reduce_mod_p needs an element over Q, got {a.ring}")
    ring = GF(p, a.ring.delta)
    terms = {}
    for d, c in a.terms.items():
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"{p} divides the denominator of coefficient {c}")
        terms[d] = Mod(_fraction_mod(c, p), p, True)
    return AlgebraElement._trusted(a.r, ring, terms)


def coefficient_vector(a: AlgebraElement, basis: Sequence[BrauerDiagram] | None = None) -> list:
    if basis is None:
        basis = all_diagrams(a.r)
        index = diagram_index(a.r)
    else:
        index = {d: k for k, d in enumerate(basis)}
    vec = [a.ring.zero()] * len(basis)
    for d, c in a.terms.items():
        if d not in index:
            raise KeyError(f"diagram {d} is not in the basis")
        vec[index[d]] = c
    return vec


def sparse_vector(a: AlgebraElement) -> dict[int, object]:
    index = diagram_index(a.r)
    return {index[d]: c for d, c in a.terms.items()}


def from_vector(vec: Mapping[int, object] | Sequence, r: int, ring: Ring) -> AlgebraElement:
    basis = all_diagrams(r)
    items = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
    return AlgebraElement(r, ring, {basis[j]: c for j, c in items if c})


# ---------------------------------------------------------------------------
# two-sided ideals


@lru_cache(maxsize=None)
def generator_tables(r: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Left and right action of every s_i and e_i on the diagram basis.

    Each table maps a basis index to ``(index of the product, loops)``.
    """
    basis = all_diagrams(r)
    index = diagram_index(r)
    gens = [generator_s(i, r) for i in range(1, r)] + [generator_e(i, i + 1, r) for i in range(1, r)]
    tables = []
    for g in gens:
        left, right = [], []
        for d in basis:
            x, lx = _diagram_product(g, d)
            y, ly = _diagram_product(d, g)
            left.append((index[x], lx))
            right.append((index[y], ly))
        tables += [tuple(left), tuple(right)]
    return tuple(tables)


def _apply_table(table, vec: dict, w: _Weights) -> dict:
    out: dict = {}
    for j, c in vec.items():
        k, loops = table[j]
        if loops:
            c = c * w[loops]
        prev = out.get(k)
        out[k] = c if prev is None else prev + c
    return {k: c for k, c in out.items() if c}


def _common(elements: Sequence[AlgebraElement]) -> tuple[int, Ring]:
    if not elements:
        raise ValueError("need at least one element")
    r, ring = elements[0].r, elements[0].ring
    for x in elements[1:]:
        elements[0]._check(x)
    return r, ring


def ideal_closure(seeds: Sequence[dict], r: int, ring: Ring, backend: str = "auto") -> list[dict]:
    """Close a set of coefficient vectors under left and right generator action."""
    tables = generator_tables(r)
    w = _weights(ring)
    ncols = len(all_diagrams(r))
    rows = rref_sparse(seeds, ncols, ring, backend)
    while rows:
        cand = list(rows)
        for v in rows:
            for t in tables:
                img = _apply_table(t, v, w)
                if img:
                    cand.append(img)
        new = rref_sparse(cand, ncols, ring, backend)
        if len(new) == len(rows):
            break
        rows = new
    return rows


def ideal_span(generators: Sequence[AlgebraElement], backend: str = "auto", max_strands: int = MAX_STRANDS) -> Subspace:
    """Coefficient span of the two-sided ideal generated by ``generators``."""
    r, ring = _common(generators)
    if r > max_strands:
        raise ValueError(f"r={r} exceeds the configured bound {max_strands}")
    if not ring.is_field:
        raise RingMismatchError("ideal spans need delta specialized (ring Q or F_p)")
    if ring.delta is None:
        raise RingMismatchError(f"specialize delta before taking ideals over {ring}")
    rows = ideal_closure([sparse_vector(g) for g in generators], r, ring, backend)
    return Subspace._from_rref(rows, len(all_diagrams(r)), ring)


def ideal_membership(x: AlgebraElement, g: AlgebraElement, backend: str = "auto") -> bool:
    x._check(g)
    return ideal_span([g], backend).contains(sparse_vector(x))


# ---------------------------------------------------------------------------
# presentation


def presentation_relations(r: int, ring: Ring = QQ_DELTA) -> list[tuple[str, AlgebraElement, AlgebraElement]]:
    """The defining relations among s_1..s_{r-1}, e_1..e_{r-1} as (name, lhs, rhs)."""
    S = {i: s(i, r, ring) for i in range(1, r)}
    E = {i: e(i, r, ring) for i in range(1, r)}
    one = AlgebraElement.one(r, ring)
    delta = ring.delta_value()
    rels = []
    for i in range(1, r):
        rels += [
            (f"s{i}^2 = 1", S[i] * S[i], one),
            (f"e{i}^2 = d e{i}", E[i] * E[i], E[i].scale(delta)),
            (f"s{i} e{i} = e{i}", S[i] * E[i], E[i]),
            (f"e{i} s{i} = e{i}", E[i] * S[i], E[i]),
        ]
    for i in range(1, r):
        for j in range(i + 2, r):
            rels += [
                (f"s{i} s{j} = s{j} s{i}", S[i] * S[j], S[j] * S[i]),
                (f"s{i} e{j} = e{j} s{i}", S[i] * E[j], E[j] * S[i]),
                (f"s{j} e{i} = e{i} s{j}", S[j] * E[i], E[i] * S[j]),
                (f"e{i} e{j} = e{j} e{i}", E[i] * E[j], E[j] * E[i]),
            ]
    for i in range(1, r - 1):
        rels += [
            (f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", product(S[i], S[i + 1], S[i]), product(S[i + 1], S[i], S[i + 1])),
            (f"e{i} e{i+1} e{i} = e{i}", product(E[i], E[i + 1], E[i]), E[i]),
            (f"e{i+1} e{i} e{i+1} = e{i+1}", product(E[i + 1], E[i], E[i + 1]), E[i + 1]),
            (f"s{i} e{i+1} e{i} = s{i+1} e{i}", product(S[i], E[i + 1], E[i]), S[i + 1] * E[i]),
            (f"e{i+1} e{i} s{i+1} = e{i+1} s{i}", product(E[i + 1], E[i], S[i + 1]), E[i + 1] * S[i]),
            (f"e{i} s{i+1} e{i} = e{i}", product(E[i], S[i + 1], E[i]), E[i]),
            (f"e{i+1} s{i} e{i+1} = e{i+1}", product(E[i + 1], S[i], E[i + 1]), E[i + 1]),
        ]
    return rels


def presentation_check(r: int, relations: Iterable[tuple[str, AlgebraElement, AlgebraElement]] | None = None) -> bool:
    """True iff every relation holds as a computed product."""
    if relations is None:
        relations = presentation_relations(r)
    return all(lhs == rhs for _, lhs, rhs in relations)


def failed_relations(r: int, relations=None) -> list[str]:
    if relations is None:
        relations = presentation_relations(r)
    return [name for name, lhs, rhs in relations if lhs != rhs]


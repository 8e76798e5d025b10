"""Brauer diagrams: perfect matchings on two rows of r vertices.

Vertices are labelled 1..r along the top and r+1..2r along the bottom.
Internally a diagram stores a 0-based partner table, so top vertex ``v``
(1-based) is index ``v - 1`` and bottom vertex ``r + v`` is index ``r + v - 1``.
Every public function that takes vertex or strand indices uses the 1-based
labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

MAX_STRANDS = 6


class StrandMismatchError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class BrauerDiagram:
    r: int
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if self.r < 1 or len(p) != 2 * self.r:
            raise ValueError(f"partner table of length {len(p)} for r={self.r}")
        for v, w in enumerate(p):
            if not 0 <= w < 2 * self.r or w == v or p[w] != v:
                raise ValueError(f"not a fixed-point-free involution: {p}")

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[Sequence[int]]) -> "BrauerDiagram":
        partner = [-1] * (2 * r)
        for a, b in edges:
            for v in (a, b):
                if not 1 <= v <= 2 * r:
                    raise ValueError(f"vertex {v} out of range 1..{2 * r}")
                if partner[v - 1] != -1:
                    raise ValueError(f"vertex {v} appears twice")
            if a == b:
                raise ValueError(f"fixed point at vertex {a}")
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        if -1 in partner:
            raise ValueError(f"vertex {partner.index(-1) + 1} is unmatched")
        return cls(r, tuple(partner))

    def edges(self) -> list[tuple[int, int]]:
        """1-based edges, smaller endpoint first, sorted ascending."""
        return [(v + 1, w + 1) for v, w in enumerate(self.partner) if v < w]

    def __str__(self):
        return f"r={self.r}; " + " ".join(f"{a}-{b}" for a, b in self.edges())

    def __repr__(self):
        return f"BrauerDiagram({str(self)!r})"

    def __lt__(self, other: "BrauerDiagram"):
        return (self.r, self.partner) < (other.r, other.partner)


_TEXT = re.compile(r"^\s*r\s*=\s*(\d+)\s*;(.*)$")


def parse_diagram(text: str) -> BrauerDiagram:
    """Parse ``"r=3; 1-2 3-6 4-5"``."""
    m = _TEXT.match(text)
    if not m:
        raise ValueError(f"bad diagram text {text!r}")
    r = int(m.group(1))
    edges = []
    for tok in m.group(2).split():
        a, sep, b = tok.partition("-")
        if not sep or not a.isdigit() or not b.isdigit():
            raise ValueError(f"bad edge {tok!r}")
        edges.append((int(a), int(b)))
    return BrauerDiagram.from_edges(r, edges)


def format_diagram(d: BrauerDiagram) -> str:
    return str(d)


# ---------------------------------------------------------------------------
# composition


@dataclass(frozen=True)
class Composition:
    result: BrauerDiagram
    loops: int


@lru_cache(maxsize=1 << 20)
def _compose_tables(r: int, top: tuple, bottom: tuple) -> tuple[tuple, int]:
    # middle vertex m is top's vertex r+m and bottom's vertex m
    out = [-1] * (2 * r)
    seen = [False] * r

    def exit_from_top(v: int) -> int:
        # arrive at top-diagram vertex v; follow edges to an outer vertex
        while True:
            w = top[v]
            if w < r:
                return w
            seen[w - r] = True
            u = bottom[w - r]
            if u >= r:
                return u
            seen[u] = True
            v = u + r

    def exit_from_bottom(v: int) -> int:
        while True:
            w = bottom[v]
            if w >= r:
                return w
            seen[w] = True
            u = top[w + r]
            if u < r:
                return u
            seen[u - r] = True
            v = u - r

    for v in range(r):
        if out[v] == -1:
            w = exit_from_top(v)
            out[v], out[w] = w, v
    for v in range(r, 2 * r):
        if out[v] == -1:
            w = exit_from_bottom(v)
            out[v], out[w] = w, v
    loops = 0
    for m in range(r):
        if seen[m]:
            continue
        loops += 1
        cur = m
        while not seen[cur]:
            seen[cur] = True
            nxt = top[cur + r] - r
            seen[nxt] = True
            cur = bottom[nxt]
    return tuple(out), loops


def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> Composition:
    """Concatenate ``d1`` above ``d2`` and erase the closed loops."""
    if d1.r != d2.r:
        raise StrandMismatchError(f"cannot compose r={d1.r} with r={d2.r}")
    partner, loops = _compose_tables(d1.r, d1.partner, d2.partner)
    return Composition(_make(d1.r, partner), loops)


def _make(r: int, partner: tuple) -> BrauerDiagram:
    d = object.__new__(BrauerDiagram)
    object.__setattr__(d, "r", r)
    object.__setattr__(d, "partner", partner)
    return d


def star(d: BrauerDiagram) -> BrauerDiagram:
    """Reflect in a horizontal line: swap top and bottom rows."""
    r = d.r
    flip = lambda v: v + r if v < r else v - r
    return _make(r, tuple(flip(d.partner[flip(v)]) for v in range(2 * r)))


# ---------------------------------------------------------------------------
# special diagrams


def identity_diagram(r: int) -> BrauerDiagram:
    return _make(r, tuple(v + r if v < r else v - r for v in range(2 * r)))


def perm_diagram(sigma: Sequence[int]) -> BrauerDiagram:
    """Diagram of a permutation given as images ``(sigma(1), ..., sigma(r))``.

    Its edges are ``(sigma(i), r + i)``.
    """
    r = len(sigma)
    if sorted(sigma) != list(range(1, r + 1)):
        raise ValueError(f"not a permutation of 1..{r}: {sigma}")
    return BrauerDiagram.from_edges(r, [(sigma[i], r + i + 1) for i in range(r)])


def generator_s(i: int, r: int) -> BrauerDiagram:
    if not 1 <= i <= r - 1:
        raise ValueError(f"s_{i} needs 1 <= i <= r-1 (r={r})")
    sigma = list(range(1, r + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return perm_diagram(sigma)


def generator_e(i: int, j: int, r: int) -> BrauerDiagram:
    """``e_{i,j}``: top arc (i, j), bottom arc (r+i, r+j), other strands vertical."""
    if not 1 <= i < j <= r:
        raise ValueError(f"e_{{{i},{j}}} needs 1 <= i < j <= r (r={r})")
    edges = [(i, j), (r + i, r + j)]
    edges += [(k, r + k) for k in range(1, r + 1) if k not in (i, j)]
    return BrauerDiagram.from_edges(r, edges)


def diagram_permutation(d: BrauerDiagram) -> tuple[int, ...] | None:
    """Images ``sigma(1..r)`` if ``d`` is a permutation diagram, else None."""
    r = d.r
    sigma = []
    for i in range(r):
        w = d.partner[r + i]
        if w >= r:
            return None
        sigma.append(w + 1)
    return tuple(sigma)


def through_count(d: BrauerDiagram) -> int:
    r = d.r
    return sum(1 for v in range(r) if d.partner[v] >= r)


def top_arcs(d: BrauerDiagram) -> list[tuple[int, int]]:
    r = d.r
    return [(v + 1, w + 1) for v, w in enumerate(d.partner[:r]) if v < w < r]


def bottom_arcs(d: BrauerDiagram) -> list[tuple[int, int]]:
    r = d.r
    return [(v + 1, w + 1) for v, w in enumerate(d.partner) if r <= v < w]


# ---------------------------------------------------------------------------
# enumeration


def _matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    a = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for m in _matchings(rest):
            yield ((a, points[k]),) + m


@lru_cache(maxsize=None)
def _all_diagrams(r: int) -> tuple[BrauerDiagram, ...]:
    out = []
    for m in _matchings(tuple(range(2 * r))):
        partner = [0] * (2 * r)
        for a, b in m:
            partner[a], partner[b] = b, a
        out.append(_make(r, tuple(partner)))
    return tuple(out)


def all_diagrams(r: int, max_strands: int = MAX_STRANDS) -> tuple[BrauerDiagram, ...]:
    """Every diagram of B_r, (2r-1)!! of them, in a fixed order.

    The order is lexicographic in the matching built by pairing the smallest
    unmatched vertex with each larger vertex in turn.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if r > max_strands:
        raise ValueError(f"r={r} exceeds the configured bound {max_strands}")
    return _all_diagrams(r)


@lru_cache(maxsize=None)
def diagram_index(r: int) -> dict[BrauerDiagram, int]:
    return {d: k for k, d in enumerate(_all_diagrams(r))}


# ---------------------------------------------------------------------------
# normal form


def arc_shape(k: int, r: int) -> BrauerDiagram:
    """``L(k) = e_{1,2} e_{3,4} ... e_{2k-1,2k}``: k top and k bottom arcs on strands 1..2k."""
    if not 0 <= 2 * k <= r:
        raise ValueError(f"cannot place {k} arcs on {r} strands")
    edges = []
    for m in range(k):
        edges += [(2 * m + 1, 2 * m + 2), (r + 2 * m + 1, r + 2 * m + 2)]
    edges += [(v, r + v) for v in range(2 * k + 1, r + 1)]
    return BrauerDiagram.from_edges(r, edges)


def invert_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def normal_form(d: BrauerDiagram) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    """Write ``d = perm(s1) * L(k) * perm(s2)^{-1}`` (no loops arise).

    Returns ``(s1, k, s2)`` with permutations as image tuples.
    """
    r = d.r
    tops = top_arcs(d)
    bots = bottom_arcs(d)
    through = sorted((v + 1, d.partner[v] + 1) for v in range(r) if d.partner[v] >= r)
    s1, s2 = [], []
    for (a, b), (c, e) in zip(tops, bots):
        s1 += [a, b]
        s2 += [c - r, e - r]
    for t, u in through:
        s1.append(t)
        s2.append(u - r)
    return tuple(s1), len(tops), tuple(s2)

"""Cell modules W(lambda) of B_r(delta), their Gram forms and radicals.

A basis vector of W(lambda) is a pair (dangle, standard tableau).  A dangle
is a half diagram on r points: f arcs plus t = |lambda| free points, the k-th
free point from the left carrying slot k.  Slots are the letters the
symmetric group permutes inside the Specht module.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from ..algebra import AlgebraElement, presentation_relations
from ..diagram import BrauerDiagram, _make, _matchings, compose, generator_e, generator_s
from ..exactalg import QQ, Matrix, Ring, Subspace, null_space, subspace_equal
from .partitions import Partition, in_lambda0, lambda0_set, lambda_set
from .specht import Tableau, relabel, specht_form, standard_tableaux, straighten


@dataclass(frozen=True, order=True)
class Dangle:
    r: int
    arcs: tuple[tuple[int, int], ...]
    through: tuple[int, ...]

    def __post_init__(self):
        pts = [v for a in self.arcs for v in a] + list(self.through)
        if sorted(pts) != list(range(1, self.r + 1)):
            raise ValueError(f"arcs and free points must partition 1..{self.r}")
        if list(self.through) != sorted(self.through):
            raise ValueError("free points must be increasing")

    @property
    def t(self) -> int:
        return len(self.through)

    def lift(self) -> BrauerDiagram:
        """Arcs on top, mirrored arcs on the bottom, free points joined vertically."""
        r = self.r
        p = [0] * (2 * r)
        for a, b in self.arcs:
            p[a - 1], p[b - 1] = b - 1, a - 1
            p[r + a - 1], p[r + b - 1] = r + b - 1, r + a - 1
        for v in self.through:
            p[v - 1], p[r + v - 1] = r + v - 1, v - 1
        return _make(r, tuple(p))

    def __str__(self):
        arcs = " ".join(f"{a}-{b}" for a, b in self.arcs)
        return f"[{arcs} | {' '.join(map(str, self.through))}]"


@lru_cache(maxsize=None)
def dangles(r: int, t: int) -> tuple[Dangle, ...]:
    """All dangles with t free points, ordered by arc list."""
    if t < 0 or t > r or (r - t) % 2:
        raise ValueError(f"no dangles with {t} free points on {r}")
    out = []
    for thr in combinations(range(1, r + 1), t):
        rest = tuple(v for v in range(1, r + 1) if v not in thr)
        for m in _matchings(rest):
            out.append(Dangle(r, tuple(sorted(m)), thr))
    return tuple(sorted(out, key=lambda d: (d.arcs, d.through)))


@dataclass
class CellModule:
    lam: Partition
    n: object
    r: int
    ring: Ring
    dangles: tuple[Dangle, ...] = field(init=False)
    tableaux: tuple[Tableau, ...] = field(init=False)
    basis: list[tuple[Dangle, Tableau]] = field(init=False)

    def __post_init__(self):
        t = self.lam.size
        if t > self.r or (self.r - t) % 2:
            raise ValueError(f"|lambda| = {t} must be <= r = {self.r} with the same parity")
        self.dangles = dangles(self.r, t)
        self.tableaux = standard_tableaux(self.lam)
        self.basis = [(d, T) for d in self.dangles for T in self.tableaux]
        self._dindex = {d: k for k, d in enumerate(self.dangles)}
        self._tindex = {T: k for k, T in enumerate(self.tableaux)}
        self._lifts = [d.lift() for d in self.dangles]
        self._weights = {}
        self._action_cache: dict[BrauerDiagram, list[dict[int, object]]] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _delta_power(self, k: int):
        if k not in self._weights:
            self._weights[k] = self.ring.delta_power(k)
        return self._weights[k]

    def index(self, d: Dangle, T: Tableau) -> int:
        return self._dindex[d] * len(self.tableaux) + self._tindex[T]

    def diagram_on_dangle(self, D: BrauerDiagram, k: int) -> tuple[int, int, tuple[int, ...]] | None:
        """``D . dangle_k`` as (new dangle index, loops, slot permutation), or None if zero."""
        t = self.lam.size
        d = self.dangles[k]
        comp = compose(D, self._lifts[k])
        res, loops = comp.result, comp.loops
        r = self.r
        top_arcs = tuple((v + 1, w + 1) for v, w in enumerate(res.partner[:r]) if v < w < r)
        free = [v + 1 for v in range(r) if res.partner[v] >= r]
        if len(free) < t:
            return None
        new = Dangle(r, top_arcs, tuple(free))
        slot_of_top = {q: m + 1 for m, q in enumerate(free)}
        # old slot s sits at bottom vertex r + d.through[s-1] of the composite
        perm = tuple(slot_of_top[res.partner[r + p - 1] + 1] for p in d.through)
        return self._dindex[new], loops, perm

    def act_diagram(self, D: BrauerDiagram) -> list[dict[int, object]]:
        """Images of the basis vectors under D, as sparse columns."""
        if D.r != self.r:
            raise ValueError("diagram has the wrong number of strands")
        if D in self._action_cache:
            return self._action_cache[D]
        ntab = len(self.tableaux)
        cols: list[dict[int, object]] = []
        for k in range(len(self.dangles)):
            res = self.diagram_on_dangle(D, k)
            for T in self.tableaux:
                if res is None:
                    cols.append({})
                    continue
                k2, loops, perm = res
                w = self._delta_power(loops)
                col = {}
                for S, c in straighten(relabel(T, perm)):
                    col[k2 * ntab + self._tindex[S]] = w * c
                cols.append(col)
        self._action_cache[D] = cols
        return cols

    def act(self, x: AlgebraElement, v: Mapping[int, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        for D, c in x.terms.items():
            cols = self.act_diagram(D)
            for j, a in v.items():
                for i, b in cols[j].items():
                    out[i] = out.get(i, 0) + c * a * b
        return {i: self.ring(y) for i, y in out.items() if y}

    def action_matrix(self, x: AlgebraElement) -> Matrix:
        """Matrix of x, acting on column vectors."""
        rows: list[dict] = [{} for _ in range(self.dim)]
        for j in range(self.dim):
            for i, y in self.act(x, {j: self.ring.one()}).items():
                rows[i][j] = y
        return Matrix.from_sparse(rows, self.dim, self.ring)

    def gram(self) -> Matrix:
        t = self.lam.size
        ntab = len(self.tableaux)
        rows: list[dict] = [{} for _ in range(self.dim)]
        r = self.r
        for a, da in enumerate(self.dangles):
            for b, db in enumerate(self.dangles):
                comp = compose(self._lifts[a], self._lifts[b])
                res = comp.result
                # slot s of da (top vertex da.through[s-1]) runs down to a bottom free point of db
                slot_b = {r + p - 1: m + 1 for m, p in enumerate(db.through)}
                sigma = []
                for p in da.through:
                    w = res.partner[p - 1]
                    if w not in slot_b:
                        sigma = None
                        break
                    sigma.append(slot_b[w])
                if sigma is None or len(sigma) < t:
                    continue
                w = self._delta_power(comp.loops)
                for i, S in enumerate(self.tableaux):
                    S2 = relabel(S, sigma)
                    for j, T in enumerate(self.tableaux):
                        val = specht_form(S2, T)
                        if val:
                            rows[a * ntab + i][b * ntab + j] = w * val
        return Matrix.from_sparse(rows, self.dim, self.ring)

    def generator_matrices(self) -> list[tuple[str, Matrix]]:
        from ..algebra import element

        out = []
        for i in range(1, self.r):
            out.append((f"s{i}", self.action_matrix(element(generator_s(i, self.r), self.ring))))
            out.append((f"e{i}", self.action_matrix(element(generator_e(i, i + 1, self.r), self.ring))))
        return out

    def submodule(self, vectors: Sequence[Mapping[int, object]]) -> Subspace:
        """Smallest B_r-submodule containing the given vectors."""
        from ..algebra import element

        gens = []
        for i in range(1, self.r):
            gens.append(element(generator_s(i, self.r), self.ring))
            gens.append(element(generator_e(i, i + 1, self.r), self.ring))
        span = Subspace.from_vectors(list(vectors), self.dim, self.ring)
        frontier = span.rows_sparse()
        while frontier:
            new = [self.act(g, v) for g in gens for v in frontier]
            grown = Subspace.from_vectors(span.rows_sparse() + new, self.dim, self.ring)
            if grown.dim == span.dim:
                break
            frontier = [v for v in grown.rows_sparse() if not span.contains(v)]
            span = grown
        return span


def _default_ring(n, ring):
    return ring or QQ(n)


_MODULES: dict = {}


def cell_module(lam: Partition, n, r: int, ring: Ring | None = None) -> CellModule:
    ring = _default_ring(n, ring)
    key = (lam, r, ring)
    if key not in _MODULES:
        _MODULES[key] = CellModule(lam, n, r, ring)
    return _MODULES[key]


def gram_matrix(lam: Partition, n, r: int, ring: Ring | None = None) -> Matrix:
    return cell_module(lam, n, r, ring).gram()


def radical(lam: Partition, n, r: int, ring: Ring | None = None) -> Subspace:
    return null_space(gram_matrix(lam, n, r, ring))


def simple_dim(lam: Partition, n, r: int, ring: Ring | None = None) -> int:
    return cell_module(lam, n, r, ring).dim - radical(lam, n, r, ring).dim


def _kernel_generator(n: int, r: int, ring: Ring) -> AlgebraElement | None:
    from ..relations import kernel_generator

    if r < n + 1:
        return None
    return kernel_generator(n, r, ring)


def ideal_image(lam: Partition, n: int, r: int, E: AlgebraElement | None = None, ring: Ring | None = None) -> Subspace:
    """``B_r E W(lambda)``: the submodule generated by E applied to every basis vector."""
    ring = _default_ring(n, ring)
    M = cell_module(lam, n, r, ring)
    if E is None:
        E = _kernel_generator(n, r, ring)
    if E is None:
        return Subspace.zero(M.dim, ring)
    images = [M.act(E, {j: ring.one()}) for j in range(M.dim)]
    return M.submodule([v for v in images if v])


def check_rad_eq_ideal(lam: Partition, n: int, r: int, E: AlgebraElement | None = None, ring: Ring | None = None) -> bool:
    """Radical of the Gram form equals B_r E W(lambda), for lambda in the column-restricted set."""
    if not in_lambda0(lam, n):
        raise ValueError(f"{lam} has more than {n} boxes in its first two columns")
    if r < n + 1:
        raise ValueError("needs r >= n+1")
    return subspace_equal(radical(lam, n, r, ring), ideal_image(lam, n, r, E, ring))


def check_module_relations(lam: Partition, n, r: int, ring: Ring | None = None) -> list[str]:
    """Names of presentation relations violated by the action on W(lambda); empty if well defined."""
    M = cell_module(lam, n, r, ring)
    bad = []
    for name, lhs, rhs in presentation_relations(r, M.ring):
        if M.action_matrix(lhs) != M.action_matrix(rhs):
            bad.append(name)
    return bad


@dataclass
class MultiplicityRow:
    lam: Partition
    dimW: int
    dimRad: int
    dimI: int


@dataclass
class MultiplicityReport:
    n: int
    r: int
    rows: list[MultiplicityRow]
    outside: list[MultiplicityRow]

    @property
    def checksum(self) -> int:
        return sum(row.dimI ** 2 for row in self.rows)

    def to_json_obj(self) -> dict:
        def enc(row):
            return {"lambda": row.lam.to_json(), "dimW": row.dimW, "dimRad": row.dimRad, "dimI": row.dimI}

        return {
            "n": self.n,
            "r": self.r,
            "rows": [enc(x) for x in self.rows],
            "checksum": self.checksum,
            "outside_lambda0": [enc(x) for x in self.outside],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "dimW", "dimRad", "dimI"])
        for row in self.rows:
            w.writerow([str(row.lam), row.dimW, row.dimRad, row.dimI])
        return buf.getvalue()


def multiplicity_report(n: int, r: int, ring: Ring | None = None, include_outside: bool = False) -> MultiplicityReport:
    """dim I_lambda = dim W(lambda) - dim B_r E W(lambda) for every label in the column-restricted set."""
    ring = _default_ring(n, ring)
    E = _kernel_generator(n, r, ring)
    rows, outside = [], []
    for lam in lambda_set(r):
        inside = in_lambda0(lam, n)
        if not inside and not include_outside:
            continue
        M = cell_module(lam, n, r, ring)
        rad = radical(lam, n, r, ring).dim
        img = ideal_image(lam, n, r, E, ring).dim if E is not None else 0
        row = MultiplicityRow(lam, M.dim, rad, M.dim - img)
        (rows if inside else outside).append(row)
    return MultiplicityReport(n, r, rows, outside)


__all__ = [
    "Dangle", "dangles", "CellModule", "cell_module", "gram_matrix", "radical", "simple_dim",
    "ideal_image", "check_rad_eq_ideal", "check_module_relations", "MultiplicityRow",
    "MultiplicityReport", "multiplicity_report", "lambda_set", "lambda0_set",
]

"""Exact dense linear algebra over Q, Q[d] and F_p.

Two elimination routes are kept side by side.  The pure-Python route
(fraction-free Bareiss for ranks over Q and Q(d), Gauss-Jordan for reduced
echelon forms) is the reference.  For Q and F_p the default route hands
integer matrices to FLINT (``fmpz_mat``/``nmod_mat``), which is what makes the
r = 5 campaigns tractable.  Both routes return identical canonical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .scalars import DeltaPoly, Mod, Ring, RingMismatchError, QQ, GF, QQ_DELTA

try:
    import flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    flint = None

BACKENDS = ("auto", "flint", "python")


def _resolve_backend(backend: str, ring: Ring) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if ring.kind == "Qdelta":
        return "python"
    if backend == "auto":
        return "flint" if flint is not None else "python"
    if backend == "flint" and flint is None:
        raise RuntimeError("python-flint is not installed")
    return backend


def infer_ring(entries: Iterable) -> Ring:
    """Smallest common ring of a collection of scalars (ints count as Q)."""
    kind, p = None, None
    for x in entries:
        if isinstance(x, Mod):
            k = "Fp"
        elif isinstance(x, DeltaPoly):
            k = "Qdelta"
        elif isinstance(x, (int, Fraction)):
            continue
        else:
            raise TypeError(f"not an exact scalar: {x!r}")
        if kind is None:
            kind, p = k, (x.p if k == "Fp" else None)
        elif k != kind or (k == "Fp" and x.p != p):
            raise RingMismatchError("matrix mixes scalars from different rings")
    if kind is None or kind == "Q":
        return QQ()
    if kind == "Qdelta":
        return QQ_DELTA
    return GF(p)


@dataclass(frozen=True)
class Matrix:
    ring: Ring
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: Ring | None = None, ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        if ring is None:
            ring = infer_ring(x for r in rows for x in r)
        else:
            for r in rows:
                for x in r:
                    if not isinstance(x, (int, Fraction)) and not ring.contains(x):
                        raise RingMismatchError(f"entry {x!r} is not in {ring}")
        coerced = tuple(tuple(ring(x) for x in r) for r in rows)
        return cls(ring, len(coerced), ncols, coerced)

    @classmethod
    def from_sparse(cls, vectors: Sequence[Mapping[int, object]], ncols: int, ring: Ring) -> "Matrix":
        zero = ring.zero()
        rows = []
        for v in vectors:
            row = [zero] * ncols
            for j, x in v.items():
                row[j] = ring(x)
            rows.append(tuple(row))
        return cls(ring, len(rows), ncols, tuple(rows))

    @classmethod
    def identity(cls, n: int, ring: Ring | None = None) -> "Matrix":
        ring = ring or QQ()
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], ring)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring: Ring | None = None) -> "Matrix":
        ring = ring or QQ()
        return cls.from_rows([[0] * ncols for _ in range(nrows)], ring, ncols)

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return Matrix(self.ring, self.ncols, self.nrows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.ring.zero()
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix(self.ring, self.nrows, other.ncols, tuple(out))

    def map_entries(self, f, ring: Ring) -> "Matrix":
        return Matrix(ring, self.nrows, self.ncols, tuple(tuple(ring(f(x)) for x in r) for r in self.rows))

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[self.ring.format(x) for x in r] for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj: Mapping, ring: Ring | None = None) -> "Matrix":
        ring = ring or QQ()
        rows = [[ring.parse(s) for s in r] for r in obj["entries"]]
        if len(rows) != obj["rows"] or any(len(r) != obj["cols"] for r in rows):
            raise ValueError("entries do not match the declared shape")
        return cls(ring, obj["rows"], obj["cols"], tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# reference elimination


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * den) for x in r])
    return out


def _poly_rows(rows: Sequence[Sequence[DeltaPoly]]) -> list[list[DeltaPoly]]:
    """Scale each row so every coefficient is an integer."""
    out = []
    for r in rows:
        den = lcm(*(c.denominator for x in r for c in x.coeffs), 1)
        out.append([x * den for x in r])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination.

    Entries are ints/Fractions (rank over Q) or DeltaPolys (rank over the
    fraction field Q(d)).  Every division performed is exact.
    """
    if not rows or not rows[0]:
        return 0
    if any(isinstance(x, DeltaPoly) for r in rows for x in r):
        m = _poly_rows([[x if isinstance(x, DeltaPoly) else DeltaPoly.const(x) for x in r] for r in rows])

        def exact(a, b):
            return a.exact_div(b)

        one = DeltaPoly.const(1)
    else:
        m = _integer_rows(rows)

        def exact(a, b):
            q, rem = divmod(a, b)
            assert rem == 0
            return q

        one = 1
    nrows, ncols = len(m), len(m[0])
    prev = one
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            row_i, row_p = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = exact(p * row_i[j] - a * row_p[j], prev)
            row_i[col] = 0 * a
        prev = p
        rank += 1
    return rank


def _sparse_rref(vectors: list[dict], ring: Ring) -> list[dict]:
    """Gauss-Jordan on sparse rows; returns reduced rows sorted by pivot."""
    one = ring.one()
    basis: dict[int, dict] = {}  # pivot column -> row with 1 at pivot
    for v in vectors:
        v = {j: x for j, x in v.items() if x}
        for piv in sorted(basis):
            if not v:
                break
            c = v.get(piv)
            if c:
                for j, x in basis[piv].items():
                    y = v.get(j, 0) - c * x
                    if y:
                        v[j] = y
                    else:
                        v.pop(j, None)
        if not v:
            continue
        piv = min(v)
        inv = one / v[piv]
        v = {j: x * inv for j, x in v.items()}
        for q, row in basis.items():
            c = row.get(piv)
            if c:
                for j, x in v.items():
                    y = row.get(j, 0) - c * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        basis[piv] = v
    return [basis[k] for k in sorted(basis)]


# ---------------------------------------------------------------------------
# FLINT route


def _flint_rref_q(int_rows: list[list[int]], ncols: int) -> list[dict]:
    M = flint.fmpz_mat(int_rows) if int_rows else flint.fmpz_mat(0, ncols)
    R, den, rank = M.rref()
    out = []
    for i in range(rank):
        row = {}
        piv = None
        for j in range(ncols):
            x = int(R[i, j])
            if x:
                if piv is None:
                    piv = x
                row[j] = Fraction(x, piv)
        out.append(row)
    return out


def _flint_rref_p(res_rows: list[list[int]], ncols: int, p: int) -> list[dict]:
    M = flint.nmod_mat(res_rows, p) if res_rows else flint.nmod_mat(0, ncols, p)
    R, rank = M.rref()
    out = []
    for i in range(rank):
        row = {}
        for j in range(ncols):
            x = int(R[i, j])
            if x:
                row[j] = Mod(x, p, True)
        out.append(row)
    return out


def _dense_to_sparse(rows) -> list[dict]:
    return [{j: x for j, x in enumerate(r) if x} for r in rows]


def rref_sparse(vectors: Sequence[Mapping[int, object]], ncols: int, ring: Ring, backend: str = "auto") -> list[dict]:
    """Reduced row echelon basis of the span of sparse vectors.

    Rows come back sorted by pivot column with pivot entry 1.
    """
    if not ring.is_field:
        raise ValueError("echelon forms need a field; Q[d] only supports rank")
    route = _resolve_backend(backend, ring)
    if route == "python":
        return _sparse_rref([{j: ring(x) for j, x in v.items()} for v in vectors], ring)
    if ring.kind == "Q":
        int_rows = []
        for v in vectors:
            vals = [Fraction(x) for x in v.values()]
            den = lcm(*(x.denominator for x in vals), 1)
            row = [0] * ncols
            for j, x in v.items():
                row[j] = int(Fraction(x) * den)
            int_rows.append(row)
        return _flint_rref_q(int_rows, ncols)
    p = ring.p
    res_rows = []
    for v in vectors:
        row = [0] * ncols
        for j, x in v.items():
            row[j] = ring(x).residue
        res_rows.append(row)
    return _flint_rref_p(res_rows, ncols, p)


# ---------------------------------------------------------------------------
# public operations


def mat_rank(m: Matrix, backend: str = "auto") -> int:
    """Exact rank; over Q[d] this is the rank over the fraction field Q(d)."""
    route = _resolve_backend(backend, m.ring)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if route == "python":
        if m.ring.kind == "Fp":
            return len(_sparse_rref(_dense_to_sparse(m.rows), m.ring))
        return bareiss_rank(m.rows)
    if m.ring.kind == "Q":
        return flint.fmpz_mat(_integer_rows(m.rows)).rank()
    return flint.nmod_mat([[x.residue for x in r] for r in m.rows], m.ring.p).rank()


@dataclass(frozen=True)
class Subspace:
    """Row space in canonical reduced row echelon form.

    Equality of subspaces is equality of the canonical bases.
    """

    ring: Ring
    ambient: int
    basis: tuple  # tuple of sparse rows, each a tuple of (column, value) pairs

    @classmethod
    def from_vectors(cls, vectors: Iterable, ambient: int, ring: Ring, backend: str = "auto") -> "Subspace":
        sparse = []
        for v in vectors:
            if isinstance(v, Mapping):
                if any(not 0 <= j < ambient for j in v):
                    raise ValueError("vector index outside the ambient space")
                sparse.append(dict(v))
            else:
                if len(v) != ambient:
                    raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
                sparse.append({j: x for j, x in enumerate(v) if x})
        rows = rref_sparse(sparse, ambient, ring, backend)
        return cls._from_rref(rows, ambient, ring)

    @classmethod
    def _from_rref(cls, rows: list[dict], ambient: int, ring: Ring) -> "Subspace":
        basis = tuple(tuple(sorted((j, ring(x)) for j, x in r.items())) for r in rows)
        return cls(ring, ambient, basis)

    @classmethod
    def zero(cls, ambient: int, ring: Ring) -> "Subspace":
        return cls(ring, ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r[0][0] for r in self.basis)

    def rows_sparse(self) -> list[dict]:
        return [dict(r) for r in self.basis]

    def dense_rows(self) -> list[list]:
        zero = self.ring.zero()
        out = []
        for r in self.basis:
            row = [zero] * self.ambient
            for j, x in r:
                row[j] = x
            out.append(row)
        return out

    def contains(self, v) -> bool:
        if isinstance(v, Mapping):
            w = {j: self.ring(x) for j, x in v.items() if x}
        else:
            if len(v) != self.ambient:
                raise ValueError("ambient-dimension mismatch")
            w = {j: self.ring(x) for j, x in enumerate(v) if x}
        for row in self.basis:
            piv = row[0][0]
            c = w.get(piv)
            if c:
                for j, x in row:
                    y = w.get(j, 0) - c * x
                    if y:
                        w[j] = y
                    else:
                        w.pop(j, None)
        return not w

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(self.contains(dict(r)) for r in other.basis)

    def sum(self, other: "Subspace", backend: str = "auto") -> "Subspace":
        _check_compatible(self, other)
        return Subspace.from_vectors(self.rows_sparse() + other.rows_sparse(), self.ambient, self.ring, backend)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient dimensions differ: {a.ambient} vs {b.ambient}")
    if a.ring.kind != b.ring.kind or a.ring.p != b.ring.p:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_compatible(a, b)
    return a.basis == b.basis


def null_space(m: Matrix, backend: str = "auto") -> Subspace:
    """Right kernel ``{x : m x = 0}`` as a canonical subspace of K^cols."""
    if not m.ring.is_field:
        raise ValueError("null_space needs field entries")
    rows = rref_sparse(_dense_to_sparse(m.rows), m.ncols, m.ring, backend)
    return kernel_from_rref(rows, m.ncols, m.ring, backend)


def kernel_from_rref(rows: list[dict], ncols: int, ring: Ring, backend: str = "auto") -> Subspace:
    pivots = [min(r) for r in rows]
    pivset = set(pivots)
    one = ring.one()
    vectors = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: one}
        for piv, r in zip(pivots, rows):
            c = r.get(f)
            if c:
                v[piv] = -c
        vectors.append(v)
    return Subspace.from_vectors(vectors, ncols, ring, backend)

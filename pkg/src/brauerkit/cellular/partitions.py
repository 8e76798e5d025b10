"""Integer partitions and the label sets for cell modules of B_r."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > k) for k in range(self.parts[0])))

    def column(self, k: int) -> int:
        """Length of column k (0-based); 0 past the last column."""
        return sum(1 for p in self.parts if p > k)

    def dominates(self, other: "Partition") -> bool:
        if self.size != other.size:
            raise ValueError("dominance compares partitions of the same size")
        a = b = 0
        for k in range(max(len(self), len(other))):
            a += self.parts[k] if k < len(self) else 0
            b += other.parts[k] if k < len(other) else 0
            if a < b:
                return False
        return True

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def hook_count(self) -> int:
        """Number of standard tableaux, by the hook length formula."""
        conj = self.conjugate().parts
        den = 1
        for i, j in self.cells():
            den *= (self.parts[i] - j) + (conj[j] - i) - 1
        return factorial(self.size) // den

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(obj))

    def __str__(self):
        return json.dumps(list(self.parts), separators=(",", ":"))

    def __repr__(self):
        return f"Partition({self.parts})"


@lru_cache(maxsize=None)
def partitions_of(t: int) -> tuple[Partition, ...]:
    """Partitions of t in reverse lexicographic order (a linear extension of dominance, largest first)."""

    def rec(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    return tuple(Partition(p) for p in rec(t, t))


def lambda_set(r: int) -> list[Partition]:
    """Cell labels of B_r: partitions of t = r, r-2, ..., ordered by size then dominance."""
    if r < 1:
        raise ValueError("r must be positive")
    out = []
    for t in range(r % 2, r + 1, 2):
        out.extend(partitions_of(t))
    return out


def in_lambda0(lam: Partition, n: int) -> bool:
    return lam.column(0) + lam.column(1) <= n


def lambda0_set(n: int, r: int) -> list[Partition]:
    """Labels whose first two columns hold at most n boxes in total."""
    return [lam for lam in lambda_set(r) if in_lambda0(lam, n)]

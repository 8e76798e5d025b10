"""Exact scalar rings: the rationals, the polynomial ring Q[d] and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Polynomials in the
Brauer parameter are :class:`DeltaPoly`, residues mod p are :class:`Mod`.
A :class:`Ring` object names the ring a computation lives in and, for the
numeric rings, the value the parameter delta has been specialized to.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class RingMismatchError(ValueError):
    """Scalars or elements from different rings were combined."""


class UnspecializedDeltaError(ValueError):
    """A loop weight was needed in a numeric ring whose delta is unset."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_modulus(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")


# ---------------------------------------------------------------------------
# F_p


class Mod:
    """Residue class ``residue mod p`` for an odd prime ``p``."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int, _checked: bool = False):
        if not _checked:
            _check_modulus(p)
        self.residue = residue % p
        self.p = p

    def _other(self, other) -> int | None:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise RingMismatchError(f"moduli differ: {self.p} vs {other.p}")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return _fraction_mod(other, self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.residue + o, self.p, True)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.residue - o, self.p, True)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.residue, self.p, True)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.residue * o, self.p, True)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.residue, self.p, True)

    def inverse(self) -> "Mod":
        if self.residue == 0:
            raise ZeroDivisionError("zero has no inverse mod p")
        return Mod(pow(self.residue, -1, self.p), self.p, True)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p, True).inverse()

    def __pow__(self, k: int):
        return Mod(pow(self.residue, k, self.p), self.p, True)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"Mod({self.residue}, {self.p})"

    def __str__(self):
        return f"{self.residue} mod {self.p}"


def _fraction_mod(q: Fraction, p: int) -> int:
    den = q.denominator % p
    if den == 0:
        raise ZeroDivisionError(f"denominator of {q} is divisible by {p}")
    return q.numerator * pow(den, -1, p) % p


# ---------------------------------------------------------------------------
# Q[d]


class DeltaPoly:
    """Polynomial in the indeterminate ``d`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``d**k``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "DeltaPoly":
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def gen(cls) -> "DeltaPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "DeltaPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _other(self, other) -> tuple | None:
        if isinstance(other, DeltaPoly):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other else ()
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return DeltaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return DeltaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + DeltaPoly._raw(tuple(-c for c in o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a = self.coeffs
        if not a or not o:
            return DeltaPoly._raw(())
        if len(o) == 1:
            c = o[0]
            return DeltaPoly._raw(tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return DeltaPoly._raw(tuple(c * x for x in o))
        out = [Fraction(0)] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return DeltaPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = DeltaPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "DeltaPoly") -> tuple["DeltaPoly", "DeltaPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return DeltaPoly._raw(quot), DeltaPoly._raw(rem[:dq] if dq > 0 else ())

    def exact_div(self, other) -> "DeltaPoly":
        if not isinstance(other, DeltaPoly):
            other = DeltaPoly.const(other)
        q, rem = self.divmod(other)
        if rem.coeffs:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return DeltaPoly._raw(tuple(c / other for c in self.coeffs))
        if isinstance(other, DeltaPoly):
            return self.exact_div(other)
        return NotImplemented

    def evaluate(self, value):
        result = Fraction(0) if not isinstance(value, Mod) else Mod(0, value.p)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == tuple(o)

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"DeltaPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "d" if k == 1 else f"d^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*?)?(d(?:\^(\d+))?)?$")


def parse_delta_poly(text: str) -> DeltaPoly:
    """Parse the printed form of :class:`DeltaPoly`, e.g. ``"3/2*d^2 - 1"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad polynomial term {body!r} in {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2) is None:
            k = 0
        else:
            k = int(m.group(3)) if m.group(3) else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + (c if sign == "+" else -c)
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    deg = max(coeffs)
    return DeltaPoly([coeffs.get(k, 0) for k in range(deg + 1)])


# ---------------------------------------------------------------------------
# rings

Scalar = Union[Fraction, DeltaPoly, Mod]


@dataclass(frozen=True)
class Ring:
    """A scalar ring tag.

    ``kind`` is ``"Q"``, ``"Qdelta"`` or ``"Fp"``.  ``delta`` is the value of
    the Brauer parameter in this ring: the generator ``d`` for ``Qdelta``, an
    integer/Fraction for ``Q`` and ``Fp`` once specialized, else ``None``.
    """

    kind: str
    p: int | None = None
    delta: object = None

    def __post_init__(self):
        if self.kind not in ("Q", "Qdelta", "Fp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Fp":
            _check_modulus(self.p)
        if self.kind == "Qdelta" and self.delta is not None:
            raise ValueError("Q[d] keeps delta symbolic")
        if self.delta is not None:
            object.__setattr__(self, "delta", Fraction(self.delta))
            if self.kind == "Fp":
                _fraction_mod(self.delta, self.p)

    @property
    def is_field(self) -> bool:
        return self.kind != "Qdelta"

    def zero(self) -> Scalar:
        if self.kind == "Q":
            return Fraction(0)
        if self.kind == "Qdelta":
            return DeltaPoly()
        return Mod(0, self.p, True)

    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, DeltaPoly or Mod into this ring."""
        if self.kind == "Q":
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, DeltaPoly) and x.is_constant():
                return x.leading() if x.coeffs else Fraction(0)
        elif self.kind == "Qdelta":
            if isinstance(x, DeltaPoly):
                return x
            if isinstance(x, (int, Fraction)):
                return DeltaPoly.const(x)
        else:
            if isinstance(x, Mod):
                if x.p != self.p:
                    raise RingMismatchError(f"moduli differ: {x.p} vs {self.p}")
                return x
            if isinstance(x, (int, Fraction)):
                return Mod(_fraction_mod(Fraction(x), self.p), self.p, True)
        raise RingMismatchError(f"cannot coerce {x!r} into {self}")

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        if self.kind == "Qdelta":
            return isinstance(x, DeltaPoly)
        return isinstance(x, Mod) and x.p == self.p

    def delta_value(self) -> Scalar:
        if self.kind == "Qdelta":
            return DeltaPoly.gen()
        if self.delta is None:
            raise UnspecializedDeltaError(
                f"ring {self} has no value for delta; specialize it first"
            )
        return self(self.delta)

    def delta_power(self, k: int) -> Scalar:
        if k == 0:
            return self.one()
        return self.delta_value() ** k

    def with_delta(self, value) -> "Ring":
        return Ring(self.kind, self.p, value)

    def format(self, x: Scalar) -> str:
        if self.kind == "Fp":
            return str(x.residue)
        return str(x)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if self.kind == "Q":
            return Fraction(text)
        if self.kind == "Qdelta":
            return parse_delta_poly(text)
        m = re.fullmatch(r"(-?\d+)(?:\s*mod\s*(\d+))?", text)
        if not m:
            return self(Fraction(text))
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise RingMismatchError(f"{text!r} is not in F_{self.p}")
        return Mod(int(m.group(1)), self.p, True)

    def to_json(self):
        if self.kind == "Fp":
            return {"Fp": self.p}
        return self.kind

    @classmethod
    def from_json(cls, obj, delta=None) -> "Ring":
        if isinstance(obj, dict) and set(obj) == {"Fp"}:
            return cls("Fp", int(obj["Fp"]), delta)
        if obj in ("Q", "Qdelta"):
            return cls(obj, None, delta)
        raise ValueError(f"bad ring description {obj!r}")

    def __str__(self):
        base = {"Q": "Q", "Qdelta": "Q[d]"}.get(self.kind) or f"F_{self.p}"
        if self.delta is not None:
            return f"{base}(d={self.delta})"
        return base


QQ_DELTA = Ring("Qdelta")


def QQ(delta=None) -> Ring:
    return Ring("Q", None, delta)


def GF(p: int, delta=None) -> Ring:
    return Ring("Fp", p, delta)


def format_scalar(x: Scalar) -> str:
    """Decimal-free text: ``"-1/2"``, ``"3/2*d^2 - 1"`` or ``"4 mod 7"``."""
    return str(x)

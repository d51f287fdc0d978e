"""Exact integer polynomial arithmetic in q and in (y, q), plus truncated z-series.

QPoly is dense (distribution degrees stay small); YQPoly is sparse because the
y- and q-degrees grow independently.  ZSeries is a truncated power series in z
whose coefficients live in either ring; all arithmetic is exact over the
integers modulo z^(order+1).  Python ints are arbitrary precision, so there is
no overflow to guard against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class QPoly:
    """Integer polynomial in one variable, coefficients by ascending exponent."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def var(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls((0,) * exp + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def evaluate(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def div_exact(self, other: "QPoly") -> "QPoly":
        """Exact division over the integers; raises if any step fails or a
        remainder is left (a nonzero remainder signals a bug upstream)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        qt = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("polynomial division is not exact")
            f = c // lead
            qt[k - dd] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dd + j] -= f * b
        if any(rem):
            raise ValueError("polynomial division leaves a remainder")
        return QPoly(tuple(qt))

    def to_text(self, var: str = "q") -> str:
        return _render_terms(
            [((e,), c) for e, c in enumerate(self.coeffs) if c], [var]
        )

    @classmethod
    def from_text(cls, text: str, var: str = "q") -> "QPoly":
        terms = _parse_terms(text, [var])
        out: dict[int, int] = {}
        for (e,), c in terms:
            out[e] = out.get(e, 0) + c
        size = max(out) + 1 if out else 0
        return cls(tuple(out.get(e, 0) for e in range(size)))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "QPoly":
        return cls(tuple(int(c) for c in data))


@dataclass(frozen=True)
class YQPoly:
    """Integer polynomial in y and q, stored sparsely as (y_exp, q_exp, coeff)."""

    terms: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for ey, eq, c in self.terms:
            if c:
                key = (int(ey), int(eq))
                merged[key] = merged.get(key, 0) + int(c)
        normal = tuple(
            (ey, eq, c) for (ey, eq), c in sorted(merged.items()) if c
        )
        object.__setattr__(self, "terms", normal)

    @classmethod
    def zero(cls) -> "YQPoly":
        return cls(())

    @classmethod
    def one(cls) -> "YQPoly":
        return cls(((0, 0, 1),))

    @classmethod
    def const(cls, c: int) -> "YQPoly":
        return cls(((0, 0, c),))

    @classmethod
    def y(cls) -> "YQPoly":
        return cls(((1, 0, 1),))

    @classmethod
    def q(cls) -> "YQPoly":
        return cls(((0, 1, 1),))

    @classmethod
    def monomial(cls, ey: int, eq: int, coeff: int = 1) -> "YQPoly":
        return cls(((ey, eq, coeff),))

    @classmethod
    def from_qpoly(cls, p: QPoly) -> "YQPoly":
        return cls(tuple((0, e, c) for e, c in enumerate(p.coeffs) if c))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, ey: int, eq: int) -> int:
        for a, b, c in self.terms:
            if (a, b) == (ey, eq):
                return c
        return 0

    def evaluate(self, y: int, q: int) -> int:
        return sum(c * y**ey * q**eq for ey, eq, c in self.terms)

    def substitute(self, y: int | None = None, q: int | None = None) -> "YQPoly":
        """Partially evaluate; remaining variables keep their exponents."""
        out = []
        for ey, eq, c in self.terms:
            if y is not None:
                c *= y**ey
                ey = 0
            if q is not None:
                c *= q**eq
                eq = 0
            out.append((ey, eq, c))
        return YQPoly(tuple(out))

    def to_qpoly(self, var: str = "q") -> QPoly:
        """Collapse to a one-variable polynomial; the other exponent must be 0."""
        out: dict[int, int] = {}
        for ey, eq, c in self.terms:
            if var == "q":
                if ey:
                    raise ValueError("polynomial still involves y")
                out[eq] = c
            else:
                if eq:
                    raise ValueError("polynomial still involves q")
                out[ey] = c
        size = max(out) + 1 if out else 0
        return QPoly(tuple(out.get(e, 0) for e in range(size)))

    def _coerced(self, other):
        if isinstance(other, int):
            return YQPoly.const(other)
        if isinstance(other, QPoly):
            return YQPoly.from_qpoly(other)
        if isinstance(other, YQPoly):
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return YQPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return YQPoly(tuple((ey, eq, -c) for ey, eq, c in self.terms))

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for ey, eq, c in self.terms:
            for fy, fq, d in other.terms:
                key = (ey + fy, eq + fq)
                acc[key] = acc.get(key, 0) + c * d
        return YQPoly(tuple((ey, eq, c) for (ey, eq), c in acc.items()))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = YQPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def to_text(self) -> str:
        # q before y inside each term; terms ascend by (y_exp, q_exp)
        return _render_terms([((eq, ey), c) for ey, eq, c in self.terms], ["q", "y"])

    @classmethod
    def from_text(cls, text: str) -> "YQPoly":
        terms = _parse_terms(text, ["q", "y"])
        return cls(tuple((ey, eq, c) for (eq, ey), c in terms))

    def to_json(self) -> list[list[int]]:
        return [[ey, eq, c] for ey, eq, c in self.terms]

    @classmethod
    def from_json(cls, data) -> "YQPoly":
        return cls(tuple((int(a), int(b), int(c)) for a, b, c in data))


def _render_terms(terms, variables) -> str:
    """Canonical text: ascending terms joined by +, caret exponents, as in
    "16+9q+5q^2+2q^3"."""
    if not terms:
        return "0"
    chunks = []
    for exps, coeff in terms:
        vars_part = ""
        for e, v in zip(exps, variables):
            if e == 1:
                vars_part += v
            elif e > 1:
                vars_part += f"{v}^{e}"
        if not vars_part:
            body = str(coeff)
        elif coeff == 1:
            body = vars_part
        elif coeff == -1:
            body = "-" + vars_part
        else:
            body = f"{coeff}{vars_part}"
        chunks.append(body)
    text = chunks[0]
    for body in chunks[1:]:
        text += body if body.startswith("-") else "+" + body
    return text


def _parse_terms(text: str, variables) -> list[tuple[tuple[int, ...], int]]:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return []
    var_re = "".join(
        f"(?:(?P<{v}>{v})(?:\\^(?P<{v}_e>\\d+))?)?" for v in variables
    )
    term_re = re.compile(f"(?P<sign>[+-]?)(?P<coeff>\\d+)?{var_re}")
    pos = 0
    out: list[tuple[tuple[int, ...], int]] = []
    while pos < len(text):
        m = term_re.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial text {text!r} at offset {pos}")
        if pos > 0 and not m.group("sign"):
            # adjacent terms must be joined by an explicit + or -
            raise ValueError(f"cannot parse polynomial text {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = m.group("coeff")
        exps = []
        for v in variables:
            if m.group(v):
                e = m.group(f"{v}_e")
                exps.append(int(e) if e else 1)
            else:
                exps.append(0)
        if coeff is None and not any(exps):
            raise ValueError(f"empty term in polynomial text {text!r}")
        out.append((tuple(exps), sign * (int(coeff) if coeff else 1)))
        pos = m.end()
    return out


# ---------------------------------------------------------------------------
# truncated series in z


@dataclass(frozen=True)
class ZSeries:
    """Power series in z modulo z^(order+1); coefficients are QPoly or YQPoly."""

    ring: type
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def constant(cls, ring: type, order: int, value=None) -> "ZSeries":
        head = ring.one() if value is None else value
        return cls(ring, (head,) + (ring.zero(),) * order)

    @classmethod
    def from_coeffs(cls, ring: type, seq: Sequence, order: int) -> "ZSeries":
        cs = [_as_ring(ring, c) for c in seq[: order + 1]]
        cs += [ring.zero()] * (order + 1 - len(cs))
        return cls(ring, tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {order}")
        return ZSeries(self.ring, self.coeffs[: order + 1])

    def times_z(self, k: int = 1) -> "ZSeries":
        cs = (self.ring.zero(),) * k + self.coeffs
        return ZSeries(self.ring, cs[: self.order + 1])

    def __add__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return ZSeries(
            self.ring,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: order + 1],
        )

    def __neg__(self):
        return ZSeries(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            # scalar from the coefficient ring (or an int)
            return ZSeries(self.ring, tuple(c * other for c in self.coeffs))
        order = min(self.order, other.order)
        out = [self.ring.zero()] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if getattr(a, "is_zero", lambda: False)():
                continue
            for j in range(order + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return ZSeries(self.ring, tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> "ZSeries":
        """Multiplicative inverse; the constant term must be the ring's one."""
        if self.coeffs[0] != self.ring.one():
            raise ValueError("series reciprocal requires constant term 1")
        out = [self.ring.one()]
        for k in range(1, self.order + 1):
            acc = self.ring.zero()
            for m in range(1, k + 1):
                acc = acc + self.coeffs[m] * out[k - m]
            out.append(-acc)
        return ZSeries(self.ring, tuple(out))


def _as_ring(ring: type, value):
    if isinstance(value, ring):
        return value
    if ring is YQPoly and isinstance(value, QPoly):
        return YQPoly.from_qpoly(value)
    if isinstance(value, int):
        return ring.const(value)
    raise TypeError(f"cannot view {value!r} as {ring.__name__}")


def series_mul(a: ZSeries, b: ZSeries) -> ZSeries:
    return a * b


def series_reciprocal(a: ZSeries) -> ZSeries:
    return a.reciprocal()


def cfrac_expand(levels: Sequence[QPoly], order: int) -> ZSeries:
    """Expand 1/(1 - a_1 z/(1 - a_2 z/(...))) truncated at z^order.

    Every level carries one factor of z, so the first ``order`` levels
    determine the expansion; fewer levels than that is an error.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if len(levels) < order:
        raise ValueError(
            f"continued fraction depth {len(levels)} is insufficient for order {order}"
        )
    ring = type(levels[0]) if levels else QPoly
    one = ZSeries.constant(ring, order)
    tail = one
    for numerator in reversed(list(levels)):
        tail = one - (tail.reciprocal() * numerator).times_z()
    return tail.reciprocal()


def rational_expand(numerator: Sequence, denominator: Sequence, order: int) -> ZSeries:
    """Expand numerator/denominator in z via the induced linear recurrence on
    coefficients; the denominator's constant term must be 1."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not denominator:
        raise ValueError("denominator must be nonempty")
    ring = type(denominator[0])
    if ring is int:
        ring = QPoly
    den = [_as_ring(ring, c) for c in denominator]
    num = [_as_ring(ring, c) for c in numerator]
    if den[0] != ring.one():
        raise ValueError("rational expansion requires denominator constant term 1")
    out = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else ring.zero()
        for m in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[m] * out[k - m]
        out.append(acc)
    return ZSeries(ring, tuple(out))

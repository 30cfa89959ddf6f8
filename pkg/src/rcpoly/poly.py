"""Exact univariate polynomials over the integers.

Coefficients are stored low-to-high as Python ints (arbitrary precision),
trailing zeros stripped, so the zero polynomial has ``coeffs == ()``.
"""
from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Sequence


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = _strip(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(a).__name__}")
        self.coeffs = c

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def linear(cls, root: int) -> IntPoly:
        """``x - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a)))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly.const(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)


def arith(p: IntPoly, q: IntPoly, op: str) -> IntPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def evaluate(p: IntPoly, x: int) -> int:
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def shift_compose(p: IntPoly, m: int) -> IntPoly:
    """Return q with q(x) = p(x - m)."""
    out = IntPoly()
    step = IntPoly.linear(m)
    for a in reversed(p.coeffs):
        out = out * step + a
    return out


def cauchy_bound(p: IntPoly) -> int:
    """Integer X with every real root of ``p`` strictly below X.

    Uses 1 + max(1, sum |c_i / c_d|); for the zero or constant
    polynomial this is 2.
    """
    if p.degree <= 0:
        return 2
    lead = abs(p.lead)
    s = Fraction(sum(abs(a) for a in p.coeffs[:-1]), lead)
    return 1 + math.ceil(max(Fraction(1), s))


def eventually_compare(p: IntPoly, q: IntPoly) -> Order:
    """Order of p and q for all sufficiently large x (sign of lead(p - q))."""
    d = p - q
    if d.is_zero():
        return Order.EQUAL
    return Order.GREATER if d.lead > 0 else Order.LESS


def witness_bound(p: IntPoly, q: IntPoly) -> int:
    """An integer beyond which the sign of p(x) - q(x) no longer changes."""
    return cauchy_bound(p - q)


def lagrange_interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    """Exact Lagrange interpolation through integer points.

    Works over the common denominator of the basis polynomials, so all
    intermediate arithmetic is on integers.  Raises ValueError if the
    interpolant does not have integer coefficients.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    if n == 0:
        return IntPoly()
    # full = prod_j (x - x_j), low-to-high
    full = [1]
    for xj in xs:
        full = [0] + full
        for k in range(len(full) - 1):
            full[k] -= xj * full[k + 1]
    denoms = []
    for i in range(n):
        d = 1
        for j in range(n):
            if j != i:
                d *= xs[i] - xs[j]
        denoms.append(d)
    common = 1
    for d in denoms:
        common = common * abs(d) // math.gcd(common, abs(d))
    total = [0] * n
    for i in range(n):
        scale = ys[i] * (common // denoms[i])
        if not scale:
            continue
        # synthetic division full / (x - x_i)
        carry = 0
        for k in range(n, 0, -1):
            carry = full[k] + carry * xs[i]
            total[k - 1] += scale * carry
    coeffs = []
    for c in total:
        q, rem = divmod(c, common)
        if rem:
            raise ValueError(f"interpolated coefficient {Fraction(c, common)} is not an integer")
        coeffs.append(q)
    return IntPoly(coeffs)


def render(p: IntPoly, var: str = "x") -> str:
    """Human-readable form such as ``x^3 - 6x^2 + 11x - 6``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        a = p.coeffs[i]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out

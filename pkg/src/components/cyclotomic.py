# Exact arithmetic in the cyclotomic fields Q(zeta_e)
# Values are kept in the power basis 1, zeta, ..., zeta^(phi(e)-1) modulo the
# e-th cyclotomic polynomial, so equal values of equal order have equal coefficients.

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Sequence, Tuple, Union

import sympy
from sympy import Poly, cyclotomic_poly, divisors, mobius, totient

_X = sympy.Symbol("x")

Number = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def phi_coefficients(e: int) -> Tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, lowest degree first."""
    poly = Poly(cyclotomic_poly(e, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(e: int) -> int:
    return int(totient(e))


@lru_cache(maxsize=None)
def _trace_weights(e: int) -> Tuple[Fraction, ...]:
    # normalized trace of zeta_e^k is mu(m)/phi(m) with m = e/gcd(k, e)
    weights = []
    for k in range(e):
        m = e // gcd(k, e)
        weights.append(Fraction(int(mobius(m)), euler_phi(m)))
    return tuple(weights)


def _reduce(e: int, folded: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Reduce a length-e exponent vector modulo Phi_e."""
    phi = phi_coefficients(e)
    deg = len(phi) - 1
    acc = list(folded)
    for k in range(len(acc) - 1, deg - 1, -1):
        c = acc[k]
        if c:
            shift = k - deg
            for j in range(deg):
                if phi[j]:
                    acc[shift + j] -= c * phi[j]
            acc[k] = Fraction(0)
    return tuple(Fraction(c) for c in acc[:deg])


class Cyclotomic:
    """An element of Q(zeta_e) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Number]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        if len(coeffs) != euler_phi(order):
            raise ValueError(
                f"order {order} needs {euler_phi(order)} coefficients, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_exponents(cls, order: int, terms: Union[Dict[int, Number], Sequence[Number]]) -> "Cyclotomic":
        """Build sum c_k zeta_order^k from arbitrary exponents (reduced mod order)."""
        folded = [Fraction(0)] * order
        items = terms.items() if isinstance(terms, dict) else enumerate(terms)
        for k, c in items:
            folded[k % order] += Fraction(c)
        return cls(order, _reduce(order, folded))

    @classmethod
    def rational(cls, value: Number) -> "Cyclotomic":
        return cls(1, (Fraction(value),))

    @classmethod
    def coerce(cls, value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Cyclotomic")

    # -- field embeddings ---------------------------------------------------

    def lift(self, order: int) -> "Cyclotomic":
        """Same value written in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        step = order // self.order
        folded = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            if c:
                folded[(k * step) % order] += c
        return Cyclotomic(order, _reduce(order, folded))

    def _common(self, other: "Cyclotomic") -> Tuple["Cyclotomic", "Cyclotomic"]:
        order = _lcm(self.order, other.order)
        return self.lift(order), other.lift(order)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic(a.order, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (c * other for c in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.order == 1:
            return self * other.coeffs[0]
        if self.order == 1:
            return other * self.coeffs[0]
        a, b = self._common(other)
        order = a.order
        folded = [Fraction(0)] * order
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    folded[(i + j) % order] += x * y
        return Cyclotomic(order, _reduce(order, folded))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (c / other for c in self.coeffs))
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- Galois action ------------------------------------------------------

    def galois(self, a: int) -> "Cyclotomic":
        """sigma_a: zeta -> zeta^a, for a coprime to the order."""
        if gcd(a, self.order) != 1:
            raise ValueError(f"{a} is not a unit modulo {self.order}")
        if self.order == 1:
            return self
        folded = [Fraction(0)] * self.order
        for k, c in enumerate(self.coeffs):
            if c:
                folded[(a * k) % self.order] += c
        return Cyclotomic(self.order, _reduce(self.order, folded))

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def trace(self) -> Fraction:
        """Field trace down to Q, normalized by the degree."""
        weights = _trace_weights(self.order)
        return sum((c * weights[k] for k, c in enumerate(self.coeffs) if c), Fraction(0))

    # -- predicates ---------------------------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def is_algebraic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.pretty()} is not rational")
        return self.coeffs[0]

    def __int__(self):
        value = self.to_fraction()
        if value.denominator != 1:
            raise ValueError(f"{value} is not an integer")
        return value.numerator

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # order-independent, and equal to hash(q) for rational q
        return hash(self.trace()) if not self.is_rational() else hash(self.coeffs[0])

    # -- display ------------------------------------------------------------

    def reduced(self) -> "Cyclotomic":
        """The same value written over the smallest possible cyclotomic field."""
        return _minimal_form(self.order, self.coeffs)

    def sort_key(self, order: int) -> Tuple[Fraction, ...]:
        return self.lift(order).coeffs

    def pretty(self) -> str:
        value = self.reduced()
        if value.order == 1:
            return _format_fraction(value.coeffs[0])
        parts = []
        for k, c in enumerate(value.coeffs):
            if not c:
                continue
            if k == 0:
                atom, body = "", _format_fraction(abs(c))
            else:
                atom = f"zeta{value.order}" if k == 1 else f"zeta{value.order}^{k}"
                body = atom if abs(c) == 1 else f"{_format_fraction(abs(c))}*{atom}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def latex(self) -> str:
        text = self.pretty()
        value = self.reduced()
        if value.order == 1:
            return text
        return (
            text.replace("*", "")
            .replace(f"zeta{value.order}^", f"\\zeta_{{{value.order}}}^")
            .replace(f"zeta{value.order}", f"\\zeta_{{{value.order}}}")
        )

    def __repr__(self):
        return f"Cyclotomic({self.order}, {self.pretty()!r})"

    def __str__(self):
        return self.pretty()


def zeta(order: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.from_exponents(order, {k % order: 1})


def _format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=4096)
def _minimal_form(order: int, coeffs: Tuple[Fraction, ...]) -> Cyclotomic:
    value = Cyclotomic(order, coeffs)
    if value.is_rational():
        return Cyclotomic.rational(value.coeffs[0])
    units = [a for a in range(1, order) if gcd(a, order) == 1]
    for d in divisors(order):
        d = int(d)
        if d == order:
            return value
        # value lies in Q(zeta_d) iff it is fixed by every sigma_a with a = 1 mod d
        if all(value.galois(a) == value for a in units if a % d == 1 % d):
            return _descend(value, d)
    return value


def _descend(value: Cyclotomic, d: int) -> Cyclotomic:
    """Rewrite value (known to lie in Q(zeta_d)) with order d."""
    n = euler_phi(d)
    columns = [zeta(d, j).lift(value.order).coeffs for j in range(n)]
    system = sympy.Matrix(
        [[sympy.Rational(columns[j][i].numerator, columns[j][i].denominator) for j in range(n)]
         for i in range(len(value.coeffs))]
    )
    rhs = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in value.coeffs])
    solution, _ = system.gauss_jordan_solve(rhs)
    return Cyclotomic(d, (Fraction(int(s.p), int(s.q)) for s in solution))

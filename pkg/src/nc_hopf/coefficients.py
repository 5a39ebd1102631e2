"""Exact coefficient arithmetic: big rationals and sparse multivariate polynomials.

Coefficients are either ``fractions.Fraction`` or :class:`Poly`.  The two mix
freely in arithmetic (a Fraction is absorbed as a constant polynomial), so the
same code paths serve numeric and symbolic computations.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, with all
exponents positive; the empty tuple is the constant monomial.  Zero terms are
never stored, so the zero polynomial is the empty dict and equality testing is
exact and structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Union

Monomial = tuple[tuple[str, int], ...]
Coefficient = Union[Fraction, "Poly"]

ZERO = Fraction(0)
ONE = Fraction(1)


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Sparse multivariate polynomial over the rationals in named commuting
    indeterminates."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): ONE})

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(): Fraction(value)})

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in p.terms.items():
            out[mono] = out.get(mono, ZERO) + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self + (-p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return p + (-self)

    def __neg__(self):
        return Poly({mono: -c for mono, c in self.terms.items()})

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in p.terms.items():
                mono = _mul_monomials(ma, mb)
                out[mono] = out.get(mono, ZERO) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                return other == 0
            return self.terms == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, mono: Monomial) -> Fraction:
        """Coefficient of the given monomial (zero if absent)."""
        return self.terms.get(tuple(sorted(mono)), ZERO)

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial; error if any variable appears."""
        if not self.terms:
            return ZERO
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError(f"polynomial is not constant: {self}")

    def variables(self) -> tuple[str, ...]:
        names = {name for mono in self.terms for name, _ in mono}
        return tuple(sorted(names))

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"Poly({self})"


def _monomial_cmp(names: tuple[str, ...]):
    """Comparator placing monomials in graded reverse-lexicographic order,
    highest degree first.  This is the canonical display order."""

    index = {name: i for i, name in enumerate(names)}

    def exps(mono: Monomial) -> list[int]:
        vec = [0] * len(names)
        for name, e in mono:
            vec[index[name]] = e
        return vec

    def cmp(a: Monomial, b: Monomial) -> int:
        ea, eb = exps(a), exps(b)
        da, db = sum(ea), sum(eb)
        if da != db:
            return db - da
        for i in range(len(names) - 1, -1, -1):
            d = ea[i] - eb[i]
            if d:
                return -1 if d < 0 else 1
        return 0

    return cmp


def sorted_monomials(p: Poly) -> list[Monomial]:
    names = p.variables()
    return sorted(p.terms, key=cmp_to_key(_monomial_cmp(names)))


def _monomial_str(mono: Monomial) -> str:
    parts = []
    for name, e in mono:
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: Poly) -> str:
    """Canonical text form, e.g. ``k1^4 + 6*k1^2*k2 + 2*k2^2 + 4*k1*k3 + k4``."""
    if not p.terms:
        return "0"
    pieces = []
    for i, mono in enumerate(sorted_monomials(p)):
        coeff = p.terms[mono]
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if mono == ():
            body = fraction_str(mag)
        elif mag == 1:
            body = _monomial_str(mono)
        else:
            body = f"{fraction_str(mag)}*{_monomial_str(mono)}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coeff_str(c: Coefficient) -> str:
    """Canonical text form of any coefficient."""
    if isinstance(c, Poly):
        return poly_str(c)
    return fraction_str(Fraction(c))


def parse_fraction(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into an exact rational."""
    from .errors import ParseError

    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc

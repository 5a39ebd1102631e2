"""Graded truncated linear forms on the two bialgebras.

A functional is defined by its values on basis bar words up to a truncation
degree and extended by linearity.  Convolution and the half-shuffle products
are computed by pairing against the corresponding coproduct; the augmentation
``e`` is the unit of the resulting shuffle algebra, with

    f ≺ e = f = e ≻ f,     e ≺ f = 0 = f ≻ e.

Characters are unital and multiplicative over the bar product; infinitesimal
characters kill the unit and every bar word with two or more parts.  The
bijection between the two is realized by the left half-shuffle fixed point
Phi = e + kappa ≺ Phi and its inverse extraction, plus the half-shuffle
exponential as an independent route.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .coefficients import ONE, ZERO, Coefficient
from .errors import AlgebraMismatchError, TruncationError
from .partitions import enumerate_nc_partitions
from .tensor import (
    UNIT,
    BarWord,
    DecoratedNC,
    LinComb,
    Word,
    barword_degree,
    barword_text,
    delta_bar,
    sp,
)

WORDS = "words"
NC = "nc"


@dataclass(frozen=True)
class Algebra:
    """Which bialgebra a functional lives on, with its declared alphabet."""

    kind: str                      # WORDS or NC
    alphabet: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in (WORDS, NC):
            raise ValueError(f"unknown algebra kind: {self.kind!r}")
        if not self.alphabet:
            raise ValueError("alphabet must be declared and non-empty")

    def atoms(self, degree: int) -> list:
        """All basis atoms of the given degree."""
        words = [Word(ls) for ls in iter_product(self.alphabet, repeat=degree)]
        if self.kind == WORDS:
            return words
        return [DecoratedNC(shape, w)
                for shape in enumerate_nc_partitions(degree) for w in words]

    def barwords(self, degree: int) -> list[BarWord]:
        """All basis bar words of the given total degree."""
        if degree == 0:
            return [UNIT]
        out: list[BarWord] = []
        for first_deg in range(1, degree + 1):
            for atom in self.atoms(first_deg):
                for tail in self.barwords(degree - first_deg):
                    out.append((atom,) + tail)
        return out


class LinearFunctional:
    """A linear form on one bialgebra, defined on basis bar words of degree
    up to ``truncation``; evaluation above truncation raises, never silently
    returns zero."""

    def __init__(self, algebra: Algebra, truncation: int, eval_basis,
                 unit_value: Coefficient = ZERO, name: str = ""):
        self.algebra = algebra
        self.truncation = truncation
        self.unit_value = unit_value
        self.name = name
        self._eval = eval_basis
        self._cache: dict[BarWord, Coefficient] = {}

    def __call__(self, b: BarWord) -> Coefficient:
        if b == UNIT:
            return self.unit_value
        if b in self._cache:
            return self._cache[b]
        degree = barword_degree(b)
        if degree > self.truncation:
            raise TruncationError(
                f"degree {degree} exceeds truncation {self.truncation}"
                f" for functional {self.name or '<anonymous>'}")
        value = self._eval(b)
        self._cache[b] = value
        return value

    def on_lincomb(self, t: LinComb) -> Coefficient:
        total: Coefficient = ZERO
        for key, c in t.items():
            total = total + c * self(key)
        return total

    def __repr__(self):
        return (f"<{type(self).__name__} {self.name or '?'} on "
                f"{self.algebra.kind}, N={self.truncation}>")


class Character(LinearFunctional):
    """Unital multiplicative functional (a group-like element of the dual)."""

    @classmethod
    def from_atoms(cls, algebra: Algebra, truncation: int, atom_value,
                   name: str = "") -> "Character":
        def ev(b: BarWord) -> Coefficient:
            total: Coefficient = ONE
            for atom in b:
                total = total * atom_value(atom)
            return total
        return cls(algebra, truncation, ev, unit_value=ONE, name=name)


class InfinitesimalCharacter(LinearFunctional):
    """Functional vanishing on the unit and on all proper bar products."""

    @classmethod
    def from_atoms(cls, algebra: Algebra, truncation: int, atom_value,
                   name: str = "") -> "InfinitesimalCharacter":
        def ev(b: BarWord) -> Coefficient:
            if len(b) != 1:
                return ZERO
            return atom_value(b[0])
        return cls(algebra, truncation, ev, unit_value=ZERO, name=name)


def augmentation(algebra: Algebra, truncation: int) -> Character:
    """The counit e: 1 at the unit, 0 in positive degree."""
    return Character(algebra, truncation, lambda b: ZERO,
                     unit_value=ONE, name="e")


def _check_compatible(f: LinearFunctional, g: LinearFunctional):
    if f.algebra != g.algebra:
        raise AlgebraMismatchError(
            f"functionals on different algebras: {f.algebra} vs {g.algebra}")
    if f.truncation != g.truncation:
        raise AlgebraMismatchError(
            f"truncation mismatch: {f.truncation} vs {g.truncation}")


def _pair(f: LinearFunctional, g: LinearFunctional, b: BarWord,
          variant: str) -> Coefficient:
    total: Coefficient = ZERO
    for (left, right), c in delta_bar(b, variant).items():
        fl = f.unit_value if left == UNIT else f(left)
        if not fl:
            continue
        gr = g.unit_value if right == UNIT else g(right)
        if not gr:
            continue
        total = total + c * fl * gr
    return total


def convolve(f: LinearFunctional, g: LinearFunctional) -> LinearFunctional:
    """Convolution f * g against the full coproduct."""
    _check_compatible(f, g)
    return LinearFunctional(
        f.algebra, f.truncation,
        lambda b: _pair(f, g, b, "full"),
        unit_value=f.unit_value * g.unit_value,
        name=f"({f.name}*{g.name})")


def half_convolve(f: LinearFunctional, g: LinearFunctional,
                  side: str) -> LinearFunctional:
    """Half-shuffle products f ≺ g (side='left') and f ≻ g (side='right'),
    paired against the corresponding half coproduct.  The + variants of the
    half coproducts are used so the unit laws with e hold identically; on the
    augmentation ideal this coincides with the reduced halves."""
    _check_compatible(f, g)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    variant = "left+" if side == "left" else "right+"
    op = "≺" if side == "left" else "≻"
    return LinearFunctional(
        f.algebra, f.truncation,
        lambda b: _pair(f, g, b, variant),
        unit_value=f.unit_value * g.unit_value,
        name=f"({f.name}{op}{g.name})")


# ---------------------------------------------------------------------------
# fixed point, exponential, extraction


def solve_left_fixed_point(kappa: LinearFunctional) -> Character:
    """The unique character Phi with Phi = e + kappa ≺ Phi, computed degree
    by degree: every coproduct term pairing kappa non-trivially strictly
    lowers the degree of the remaining Phi argument."""
    _require_infinitesimal(kappa)
    phi_box: list[Character] = []

    def ev(b: BarWord) -> Coefficient:
        total: Coefficient = ZERO
        for (left, right), c in delta_bar(b, "left+").items():
            kl = kappa(left) if left != UNIT else kappa.unit_value
            if not kl:
                continue
            phi = phi_box[0]
            pr = phi.unit_value if right == UNIT else phi(right)
            if not pr:
                continue
            total = total + c * kl * pr
        return total

    phi = Character(kappa.algebra, kappa.truncation, ev,
                    unit_value=ONE, name=f"fix({kappa.name})")
    phi_box.append(phi)
    return phi


def exp_prec(kappa: LinearFunctional) -> Character:
    """The half-shuffle exponential: the truncated sum of iterated left
    half-shuffle powers kappa^{≺n}.  Agrees with the fixed point exactly."""
    _require_infinitesimal(kappa)
    e = augmentation(kappa.algebra, kappa.truncation)
    powers: list[LinearFunctional] = [e]

    def power(k: int) -> LinearFunctional:
        while len(powers) <= k:
            powers.append(half_convolve(kappa, powers[-1], "left"))
        return powers[k]

    def ev(b: BarWord) -> Coefficient:
        degree = barword_degree(b)
        total: Coefficient = ZERO
        for k in range(1, degree + 1):
            total = total + power(k)(b)
        return total

    return Character(kappa.algebra, kappa.truncation, ev,
                     unit_value=ONE, name=f"exp≺({kappa.name})")


def extract_infinitesimal(phi: LinearFunctional) -> InfinitesimalCharacter:
    """Invert Phi = e + kappa ≺ Phi for kappa: on a single atom,
    kappa(w) = Phi(w) - sum of the strictly-lower-degree pairings."""
    kappa_box: list[InfinitesimalCharacter] = []

    def atom_value(atom) -> Coefficient:
        b: BarWord = (atom,)
        total = phi(b)
        kappa = kappa_box[0]
        for (left, right), c in delta_bar(b, "left+").items():
            if left == b:
                continue  # the kappa(w) * Phi(1) term being solved for
            kl = kappa(left) if left != UNIT else ZERO
            if not kl:
                continue
            pr = phi.unit_value if right == UNIT else phi(right)
            total = total - c * kl * pr
        return total

    kappa = InfinitesimalCharacter.from_atoms(
        phi.algebra, phi.truncation, atom_value, name=f"log≺({phi.name})")
    kappa_box.append(kappa)
    return kappa


def _require_infinitesimal(kappa: LinearFunctional):
    if isinstance(kappa, InfinitesimalCharacter):
        return
    report = check_infinitesimal(kappa)
    if not report.ok:
        raise ValueError(
            f"not an infinitesimal character: {report.violations[:3]}")


# ---------------------------------------------------------------------------
# multiplicative extension, standard section, pullback


def extend_multiplicative(algebra: Algebra, truncation: int,
                          atom_value, name: str = "Φ") -> Character:
    """The unique character whose restriction to single atoms is the given
    evaluation (a moment table on words, or a table on decorated shapes)."""
    return Character.from_atoms(algebra, truncation, atom_value, name=name)


def standard_section(kappa_on_words, algebra: Algebra,
                     truncation: int) -> InfinitesimalCharacter:
    """Lift a word functional to decorated partitions supported on one-block
    shapes only: sd(kappa)(L ⊗ w) = kappa(w) if L = 1̂, else 0."""
    if algebra.kind != NC:
        raise AlgebraMismatchError("standard_section targets the NC algebra")

    def atom_value(atom: DecoratedNC) -> Coefficient:
        if len(atom.shape.blocks) == 1:
            word = atom.word if atom.word is not None else Word(
                (algebra.alphabet[0],) * atom.degree)
            return kappa_on_words(word)
        return ZERO

    return InfinitesimalCharacter.from_atoms(
        algebra, truncation, atom_value, name="sd(κ)")


def pullback_sp(psi: LinearFunctional) -> LinearFunctional:
    """Sp*(psi) = psi ∘ Sp, a functional on the double tensor algebra over
    the same alphabet.  Characters map to characters and infinitesimal
    characters to infinitesimal characters."""
    if psi.algebra.kind != NC:
        raise AlgebraMismatchError("pullback_sp expects a functional on NC")
    words_algebra = Algebra(WORDS, psi.algebra.alphabet)

    def ev(b: BarWord) -> Coefficient:
        return psi.on_lincomb(sp(b))

    cls = LinearFunctional
    if isinstance(psi, Character):
        cls = Character
    elif isinstance(psi, InfinitesimalCharacter):
        cls = InfinitesimalCharacter
    return cls(words_algebra, psi.truncation, ev,
               unit_value=psi.unit_value, name=f"Sp*({psi.name})")


# ---------------------------------------------------------------------------
# diagnostics


@dataclass
class CheckReport:
    ok: bool
    checked: int
    violations: list

    def __bool__(self):
        return self.ok


def check_character(f: LinearFunctional, max_degree: int | None = None,
                    limit: int = 20000) -> CheckReport:
    """Verify f(1) = 1 and f(a|b) = f(a) f(b) on basis pairs within the
    truncation.  ``limit`` caps the number of pairs examined (deterministic
    prefix) to keep large alphabets tractable."""
    n = max_degree if max_degree is not None else f.truncation
    violations = []
    checked = 0
    if f.unit_value != 1:
        violations.append(("unit", f.unit_value))
    for da in range(1, n):
        for db in range(1, n - da + 1):
            for a in f.algebra.barwords(da):
                for b in f.algebra.barwords(db):
                    if checked >= limit:
                        return CheckReport(not violations, checked, violations)
                    checked += 1
                    if f(a + b) != f(a) * f(b):
                        violations.append((barword_text(a), barword_text(b)))
    return CheckReport(not violations, checked, violations)


def check_infinitesimal(f: LinearFunctional, max_degree: int | None = None,
                        limit: int = 20000) -> CheckReport:
    """Verify f(1) = 0 and f vanishes on every bar word with >= 2 parts."""
    n = max_degree if max_degree is not None else f.truncation
    violations = []
    checked = 0
    if f.unit_value != 0:
        violations.append(("unit", f.unit_value))
    for d in range(2, n + 1):
        for b in f.algebra.barwords(d):
            if len(b) < 2:
                continue
            if checked >= limit:
                return CheckReport(not violations, checked, violations)
            checked += 1
            if f(b) != 0:
                violations.append(barword_text(b))
    return CheckReport(not violations, checked, violations)


# ---------------------------------------------------------------------------
# deterministic pseudo-random functionals (test and verify plumbing)


def random_functional(algebra: Algebra, truncation: int, seed: int,
                      name: str = "") -> LinearFunctional:
    """A dense functional with reproducible pseudo-random rational values,
    vanishing at the unit (an element of the non-unital dual)."""

    def ev(b: BarWord) -> Coefficient:
        digest = hashlib.sha256(
            f"{seed}:{barword_text(b)}".encode()).digest()
        num = int.from_bytes(digest[:4], "big") % 41 - 20
        den = digest[4] % 6 + 1
        return Fraction(num, den)

    return LinearFunctional(algebra, truncation, ev,
                            unit_value=ZERO, name=name or f"rand{seed}")


def random_infinitesimal(algebra: Algebra, truncation: int, seed: int,
                         name: str = "") -> InfinitesimalCharacter:
    base = random_functional(algebra, truncation, seed)
    return InfinitesimalCharacter.from_atoms(
        algebra, truncation, lambda atom: base((atom,)),
        name=name or f"randκ{seed}")

"""The two unshuffle bialgebras and the splitting map between them.

Basis elements are bar words: tuples of atoms, where an atom is either a
:class:`Word` (double tensor algebra) or a :class:`DecoratedNC` (tensor
algebra over decorated non-crossing partitions).  The empty tuple is the
unit.  A bar word never contains a unit part, so normalization of
``w|1|w'`` to ``w|w'`` is structural.

Formal linear combinations are plain dicts from a hashable key to a non-zero
exact coefficient.  Coproduct outputs are keyed by (left, right) pairs of bar
words; on generators the left leg always has at most one atom.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .coefficients import ONE, Coefficient
from .errors import AlgebraMismatchError, ParseError, SizeLimitError
from .partitions import (
    NonCrossingPartition,
    admissible_splits,
    connected_components,
    enumerate_nc_partitions,
    parse_partition,
    standardize,
)
from . import config


@dataclass(frozen=True)
class Word:
    """A non-empty word over a declared alphabet of letter names."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("the empty word is represented by the unit only")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def subword(self, positions) -> "Word":
        """Letters at the given 1-based positions, in order."""
        return Word(tuple(self.letters[i - 1] for i in sorted(positions)))

    def text(self) -> str:
        return ".".join(self.letters)

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class DecoratedNC:
    """A non-crossing partition of [n] decorated by a word of length n.

    ``word=None`` is the undecorated algebra (equivalently, a one-letter
    alphabet with the decoration suppressed).
    """

    shape: NonCrossingPartition
    word: Word | None = None

    def __post_init__(self):
        if self.word is not None and self.word.degree != self.shape.size:
            raise ValueError("decoration length differs from carrier size")

    @property
    def degree(self) -> int:
        return self.shape.size

    def text(self) -> str:
        if self.word is None:
            return self.shape.text()
        return f"{self.shape.text()}:{self.word.text()}"

    def __str__(self):
        return self.text()


Atom = Union[Word, DecoratedNC]
BarWord = tuple  # tuple[Atom, ...]; the empty tuple is the unit
LinComb = dict   # key -> Coefficient, no zero values stored

UNIT: BarWord = ()


def atom_degree(atom: Atom) -> int:
    return atom.degree


def barword_degree(b: BarWord) -> int:
    return sum(a.degree for a in b)


def barword_text(b: BarWord) -> str:
    return "|".join(a.text() for a in b) if b else "1"


def _check_homogeneous(b: BarWord):
    kinds = {type(a) for a in b}
    if len(kinds) > 1:
        raise AlgebraMismatchError(f"mixed atom kinds in bar word: {b}")


def add_into(acc: LinComb, key, coeff: Coefficient) -> None:
    """acc[key] += coeff, dropping the entry if it cancels."""
    new = acc.get(key, 0) + coeff
    if new:
        acc[key] = new
    elif key in acc:
        del acc[key]


def scale(lc: LinComb, c: Coefficient) -> LinComb:
    if not c:
        return {}
    return {k: v * c for k, v in lc.items()}


def lincomb_sum(*combs: LinComb) -> LinComb:
    out: LinComb = {}
    for lc in combs:
        for k, v in lc.items():
            add_into(out, k, v)
    return out


def counit(t: LinComb) -> Coefficient:
    """Coefficient of the unit basis element."""
    return t.get(UNIT, Fraction(0))


# ---------------------------------------------------------------------------
# generator coproducts


@lru_cache(maxsize=None)
def delta_word(w: Word) -> LinComb:
    """Full coproduct of a word: sum over subsets S of letter positions of
    a_S tensor the bar word of connected components of the complement."""
    n = w.degree
    out: LinComb = {}
    for mask in range(1 << n):
        s = [i + 1 for i in range(n) if mask >> i & 1]
        left: BarWord = (w.subword(s),) if s else UNIT
        comps = connected_components(s, range(1, n + 1))
        right: BarWord = tuple(w.subword(c) for c in comps)
        add_into(out, (left, right), ONE)
    return out


def delta_word_halves(w: Word) -> tuple[LinComb, LinComb]:
    """(left, right) splitting of delta_word by whether position 1 lies in
    the kept subset S.  left + right == delta_word(w)."""
    return _delta_word_split(w)


@lru_cache(maxsize=None)
def _delta_word_split(w: Word) -> tuple[LinComb, LinComb]:
    n = w.degree
    left_half: LinComb = {}
    right_half: LinComb = {}
    for mask in range(1 << n):
        s = [i + 1 for i in range(n) if mask >> i & 1]
        left: BarWord = (w.subword(s),) if s else UNIT
        comps = connected_components(s, range(1, n + 1))
        right: BarWord = tuple(w.subword(c) for c in comps)
        target = left_half if mask & 1 else right_half
        add_into(target, (left, right), ONE)
    return left_half, right_half


@lru_cache(maxsize=None)
def delta_nc(x: DecoratedNC) -> LinComb:
    """Full coproduct of a (decorated) non-crossing partition: sum over
    admissible splits, all parts standardized, decorations restricted."""
    out: LinComb = {}
    for term in _delta_nc_split_terms(x):
        _, key = term
        add_into(out, key, ONE)
    return out


def delta_nc_halves(x: DecoratedNC) -> tuple[LinComb, LinComb]:
    """(left, right) splitting of delta_nc by whether the first carrier
    element lies in a Q-block (left) or a complement block (right)."""
    left_half: LinComb = {}
    right_half: LinComb = {}
    for in_q, key in _delta_nc_split_terms(x):
        add_into(left_half if in_q else right_half, key, ONE)
    return left_half, right_half


@lru_cache(maxsize=None)
def _delta_nc_split_terms(x: DecoratedNC) -> tuple:
    shape, word = x.shape, x.word
    first = shape.carrier[0] if shape.blocks else None
    terms = []
    for split in admissible_splits(shape):
        q = split.q_part
        if q.blocks:
            st_q = standardize(q)
            dec = word.subword(q.carrier) if word is not None else None
            left: BarWord = (DecoratedNC(st_q, dec),)
        else:
            left = UNIT
        right_atoms = []
        for comp_part in split.components:
            st_c = standardize(comp_part)
            dec = word.subword(comp_part.carrier) if word is not None else None
            right_atoms.append(DecoratedNC(st_c, dec))
        in_q = first is not None and any(first in b for b in q.blocks)
        terms.append((in_q, (left, tuple(right_atoms))))
    return tuple(terms)


def _generator_delta(atom: Atom, variant: str) -> LinComb:
    """Coproduct of a single atom.  Variants: full, left+, right+."""
    if isinstance(atom, Word):
        if variant == "full":
            return delta_word(atom)
        halves = _delta_word_split(atom)
    elif isinstance(atom, DecoratedNC):
        if variant == "full":
            return delta_nc(atom)
        halves = delta_nc_halves(atom)
    else:
        raise AlgebraMismatchError(f"not a bar-word atom: {atom!r}")
    if variant == "left+":
        return halves[0]
    if variant == "right+":
        return halves[1]
    raise ValueError(f"unknown variant: {variant!r}")


def tensor_product(a: LinComb, b: LinComb) -> LinComb:
    """Product of two tensors of bar words: bar-concatenate leg-wise."""
    out: LinComb = {}
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            add_into(out, (l1 + l2, r1 + r2), c1 * c2)
    return out


@lru_cache(maxsize=None)
def delta_bar(b: BarWord, variant: str = "full") -> LinComb:
    """Coproduct of a bar word, extended multiplicatively from generators.

    Variants:
      ``full``    -- product of full coproducts of all atoms
      ``left+``   -- half coproduct on the first atom, full on the rest
      ``right+``  -- likewise with the right half
      ``left``    -- ``left+`` minus b (x) 1       (reduced left half)
      ``right``   -- ``right+`` minus 1 (x) b      (reduced right half)
      ``reduced`` -- ``full`` minus both group-like terms
    """
    _check_homogeneous(b)
    if variant in ("left", "right", "reduced"):
        if variant == "left":
            out = dict(delta_bar(b, "left+"))
            add_into(out, (b, UNIT), -ONE)
        elif variant == "right":
            out = dict(delta_bar(b, "right+"))
            add_into(out, (UNIT, b), -ONE)
        else:
            out = dict(delta_bar(b, "full"))
            add_into(out, (b, UNIT), -ONE)
            add_into(out, (UNIT, b), -ONE)
        return out
    if not b:
        return {(UNIT, UNIT): ONE}
    first_variant = variant if variant in ("left+", "right+") else "full"
    result = _generator_delta(b[0], first_variant)
    for atom in b[1:]:
        result = tensor_product(result, _generator_delta(atom, "full"))
    return result


# ---------------------------------------------------------------------------
# splitting map


def sp(b: BarWord) -> LinComb:
    """The splitting map: each word atom of length n is replaced by the sum
    over NC_n of that partition decorating the word; bar structure kept."""
    result: LinComb = {UNIT: ONE}
    for atom in b:
        if not isinstance(atom, Word):
            raise AlgebraMismatchError("sp expects a bar word over Words")
        if atom.degree > config.nc_cap():
            raise SizeLimitError(
                f"word length {atom.degree} exceeds NC cap {config.nc_cap()}")
        summand: LinComb = {}
        for shape in enumerate_nc_partitions(atom.degree):
            add_into(summand, (DecoratedNC(shape, atom),), ONE)
        result = {k1 + k2: c1 * c2
                  for k1, c1 in result.items() for k2, c2 in summand.items()}
    return result


# ---------------------------------------------------------------------------
# encodings


def tensor_text(t: LinComb) -> str:
    """Canonical text of a linear combination over pair keys, one term per
    line helper not included: terms joined by ' + ' in sorted key order."""
    from .coefficients import coeff_str

    def key_text(key) -> str:
        if isinstance(key, tuple) and key and isinstance(key[0], tuple):
            return " ⊗ ".join(barword_text(leg) for leg in key)
        return barword_text(key)

    parts = []
    for key in sorted(t, key=key_text):
        c = t[key]
        body = key_text(key)
        if c == 1:
            parts.append(body)
        else:
            parts.append(f"{coeff_str(c)}·{body}")
    return " + ".join(parts) if parts else "0"


def parse_word(text: str) -> Word:
    letters = tuple(p for p in text.strip().split(".") if p)
    if not letters:
        raise ParseError(f"empty word: {text!r}")
    return Word(letters)


def parse_atom(text: str) -> Atom:
    """Parse a word, a partition, or a decorated partition atom."""
    body = text.strip()
    if body.startswith("{"):
        if ":" in body:
            shape_part, _, word_part = body.partition(":")
            shape = parse_partition(shape_part)
            return DecoratedNC(NonCrossingPartition(shape.blocks),
                               parse_word(word_part))
        shape = parse_partition(body)
        return DecoratedNC(NonCrossingPartition(shape.blocks))
    return parse_word(body)

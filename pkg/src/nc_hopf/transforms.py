"""Moment / cumulant transforms, classical and free, exact and symbolic.

Every direction is computed by at least two independent routes and the
results compared; a disagreement raises InconsistencyError because the
redundancy exists to catch implementation drift, not input problems.

Sequences carry Coefficient values, so the same code runs numerically over
Fraction inputs and symbolically over polynomial indeterminates (c1, c2, ...
or k1, k2, ...; multivariate cumulants use k[w] keyed by the word string).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from math import comb

from .coefficients import ONE, ZERO, Coefficient, Poly, coeff_str
from .errors import CarrierMismatchError, InconsistencyError, ParseError
from .functionals import (
    NC,
    WORDS,
    Algebra,
    InfinitesimalCharacter,
    extend_multiplicative,
    extract_infinitesimal,
    solve_left_fixed_point,
)
from .partitions import (
    NonCrossingPartition,
    enumerate_nc_partitions,
    enumerate_set_partitions,
    moebius_to_top,
)
from .tensor import Word

CLASSICAL = "classical"
FREE = "free"


@dataclass(frozen=True)
class MomentSequence:
    """Moments m_0 = 1, m_1, ..., m_N."""

    values: tuple

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a moment sequence starts with m_0 = 1")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def moment(self, n: int) -> Coefficient:
        return self.values[n]

    @classmethod
    def of(cls, positive_part, order: int | None = None) -> "MomentSequence":
        vals = (ONE,) + tuple(positive_part)
        if order is not None and len(vals) != order + 1:
            raise ValueError(f"expected {order} moments, got {len(vals) - 1}")
        return cls(vals)


@dataclass(frozen=True)
class CumulantSequence:
    """Cumulants c_1, ..., c_N (classical) or k_1, ..., k_N (free)."""

    values: tuple
    flavor: str

    def __post_init__(self):
        if self.flavor not in (CLASSICAL, FREE):
            raise ValueError(f"unknown cumulant flavor: {self.flavor!r}")

    @property
    def order(self) -> int:
        return len(self.values)

    def cumulant(self, n: int) -> Coefficient:
        return self.values[n - 1]


def symbolic_cumulants(order: int, flavor: str) -> CumulantSequence:
    """Indeterminate cumulants c1..cN or k1..kN."""
    prefix = "c" if flavor == CLASSICAL else "k"
    return CumulantSequence(
        tuple(Poly.var(f"{prefix}{i}") for i in range(1, order + 1)), flavor)


def symbolic_moments(order: int) -> MomentSequence:
    """Indeterminate moments m1..mN (with m_0 = 1)."""
    return MomentSequence.of(Poly.var(f"m{i}") for i in range(1, order + 1))


def _block_product(values_by_size, partition) -> Coefficient:
    total: Coefficient = ONE
    for block in partition if isinstance(partition, tuple) else partition.blocks:
        total = total * values_by_size(len(block))
    return total


def _require_agreement(routes: dict[str, list], context: str):
    names = list(routes)
    reference = routes[names[0]]
    for name in names[1:]:
        if routes[name] != reference:
            raise InconsistencyError(
                f"{context}: route {names[0]!r} and route {name!r} disagree: "
                f"{[coeff_str(v) for v in reference]} vs "
                f"{[coeff_str(v) for v in routes[name]]}")


# ---------------------------------------------------------------------------
# classical


def bell_polynomials(c: CumulantSequence) -> list:
    """B_0 = 1 and B_{n+1} = sum_{j=0}^{n} C(n,j) B_{n-j} c_{j+1}, so that
    the n-th classical moment is B_n evaluated at the cumulants."""
    if c.flavor != CLASSICAL:
        raise ValueError("bell_polynomials expects classical cumulants")
    b: list = [ONE]
    for n in range(c.order):
        total: Coefficient = ZERO
        for j in range(n + 1):
            total = total + comb(n, j) * b[n - j] * c.cumulant(j + 1)
        b.append(total)
    return b


def classical_moments_from_cumulants(c: CumulantSequence) -> MomentSequence:
    """m_n as the n-th Bell polynomial of the cumulants, cross-checked
    against the sum over all set partitions of block-size products."""
    if c.flavor != CLASSICAL:
        raise ValueError("expected classical cumulants")
    via_bell = bell_polynomials(c)[1:]
    via_partitions = [
        sum((_block_product(c.cumulant, p)
             for p in enumerate_set_partitions(n)), start=ZERO)
        for n in range(1, c.order + 1)]
    _require_agreement(
        {"bell-recursion": via_bell, "partition-sum": via_partitions},
        "classical moments")
    return MomentSequence.of(via_bell)


def classical_cumulants_from_moments(m: MomentSequence) -> CumulantSequence:
    """c_n by Möbius inversion over the partition lattice, cross-checked by
    running the forward Bell recursion on the result."""
    values = []
    for n in range(1, m.order + 1):
        mu = moebius_to_top("set", n)
        total: Coefficient = ZERO
        for blocks, mu_val in mu.items():
            total = total + mu_val * _block_product(m.moment, blocks)
        values.append(total)
    c = CumulantSequence(tuple(values), CLASSICAL)
    back = bell_polynomials(c)[1:]
    if tuple(back) != m.values[1:]:
        raise InconsistencyError(
            "classical cumulants: Möbius inversion does not round-trip")
    return c


# ---------------------------------------------------------------------------
# free


def _one_letter_algebra() -> Algebra:
    return Algebra(WORDS, ("a",))


def _free_moments_nc_sum(k: CumulantSequence) -> list:
    return [
        sum((_block_product(k.cumulant, p)
             for p in enumerate_nc_partitions(n)), start=ZERO)
        for n in range(1, k.order + 1)]


def _free_moments_fixed_point(k: CumulantSequence) -> list:
    """One-letter specialization of Phi = e + kappa ≺ Phi: the moments are
    the character values on single powers of the letter."""
    algebra = _one_letter_algebra()
    kappa = InfinitesimalCharacter.from_atoms(
        algebra, k.order, lambda w: k.cumulant(w.degree), name="κ")
    phi = solve_left_fixed_point(kappa)
    return [phi((Word(("a",) * n),)) for n in range(1, k.order + 1)]


def _free_moments_series(k: CumulantSequence) -> list:
    """Degree-wise solve of F(t) = K(t F(t)) for the truncated series
    F = 1 + m_1 t + ... ; the t^n coefficient of K(tF) only involves
    m_1..m_{n-1}, so substitution closes at each degree."""
    order = k.order
    f: list = [ONE] + [ZERO] * order
    for n in range(1, order + 1):
        # powers[s][d] = coefficient of t^d in (t F(t))^s, using known f
        coeff: Coefficient = ZERO
        for s in range(1, n + 1):
            # t^n in (tF)^s needs t^{n-s} in F^s
            target = n - s
            total: Coefficient = ZERO
            for composition in _compositions(target, s):
                term: Coefficient = ONE
                for part in composition:
                    term = term * f[part]
                total = total + term
            coeff = coeff + k.cumulant(s) * total
        f[n] = coeff
    return f[1:]


def _compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` non-negative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def free_moments_from_cumulants(k: CumulantSequence) -> MomentSequence:
    """m_n by three independent routes (non-crossing partition sum,
    half-shuffle fixed point, truncated series F = K(tF)), all compared."""
    if k.flavor != FREE:
        raise ValueError("expected free cumulants")
    routes = {
        "nc-sum": _free_moments_nc_sum(k),
        "fixed-point": _free_moments_fixed_point(k),
        "series": _free_moments_series(k),
    }
    _require_agreement(routes, "free moments")
    return MomentSequence.of(routes["nc-sum"])


def free_cumulants_from_moments(m: MomentSequence) -> CumulantSequence:
    """k_n by Möbius inversion over the non-crossing lattice, cross-checked
    against extraction from the multiplicative extension of the moments."""
    via_moebius = []
    for n in range(1, m.order + 1):
        mu = moebius_to_top("nc", n)
        total: Coefficient = ZERO
        for blocks, mu_val in mu.items():
            total = total + mu_val * _block_product(m.moment, blocks)
        via_moebius.append(total)

    algebra = _one_letter_algebra()
    phi = extend_multiplicative(
        algebra, m.order, lambda w: m.moment(w.degree), name="Φ")
    kappa = extract_infinitesimal(phi)
    via_extraction = [kappa((Word(("a",) * n),))
                      for n in range(1, m.order + 1)]
    _require_agreement(
        {"nc-moebius": via_moebius, "fixed-point-extraction": via_extraction},
        "free cumulants")
    return CumulantSequence(tuple(via_moebius), FREE)


# ---------------------------------------------------------------------------
# multivariate free cumulants


@dataclass(frozen=True)
class MultiMomentMap:
    """A total moment table word -> Coefficient for words of length <= order
    over the alphabet; the empty word has value 1 implicitly."""

    alphabet: tuple[str, ...]
    order: int
    table: dict = field(hash=False)

    def value(self, w: Word) -> Coefficient:
        if w.letters not in self.table:
            raise KeyError(f"no moment recorded for word {w.text()}")
        return self.table[w.letters]

    def words(self, degree: int) -> list[Word]:
        return [Word(ls) for ls in iter_product(self.alphabet, repeat=degree)]

    @classmethod
    def from_function(cls, alphabet, order: int, fn) -> "MultiMomentMap":
        alphabet = tuple(alphabet)
        table = {}
        for d in range(1, order + 1):
            for ls in iter_product(alphabet, repeat=d):
                table[ls] = fn(Word(ls))
        return cls(alphabet, order, table)


class MultiCumulantMap(MultiMomentMap):
    """Same shape as MultiMomentMap, holding generalized cumulants."""


def symbolic_multi_moments(alphabet, order: int) -> MultiMomentMap:
    """Indeterminate multivariate moments m[w] keyed by the word string."""
    return MultiMomentMap.from_function(
        alphabet, order, lambda w: Poly.var(f"m[{w.text()}]"))


def kappa_powers(shape: NonCrossingPartition, w: Word, kappa) -> Coefficient:
    """Product of kappa over the blocks' restricted subwords."""
    if shape.size != w.degree:
        raise CarrierMismatchError(
            f"partition of size {shape.size} cannot decorate a word of "
            f"length {w.degree}")
    total: Coefficient = ONE
    for block in shape.blocks:
        total = total * kappa(w.subword(block))
    return total


def _cumulants_by_recursion(phi: MultiMomentMap) -> dict:
    """Solve phi(w) = sum over NC of block-wise cumulant products for the
    one-block term, degree by degree."""
    r: dict = {}

    def value(w: Word) -> Coefficient:
        if w.letters in r:
            return r[w.letters]
        total = phi.value(w)
        for shape in enumerate_nc_partitions(w.degree):
            if len(shape.blocks) == 1:
                continue
            total = total - kappa_powers(shape, w, value)
        r[w.letters] = total
        return total

    for d in range(1, phi.order + 1):
        for w in phi.words(d):
            value(w)
    return r


def generalized_free_cumulants(phi: MultiMomentMap) -> MultiCumulantMap:
    """Generalized cumulants of a multivariate moment table, by the direct
    recursive solve and by extraction from the character extension of phi on
    the double tensor algebra; the two must agree."""
    via_recursion = _cumulants_by_recursion(phi)

    algebra = Algebra(WORDS, phi.alphabet)
    character = extend_multiplicative(algebra, phi.order, phi.value, name="Φ")
    kappa = extract_infinitesimal(character)
    for d in range(1, phi.order + 1):
        for w in phi.words(d):
            if kappa((w,)) != via_recursion[w.letters]:
                raise InconsistencyError(
                    f"generalized cumulants disagree at {w.text()}: "
                    f"{coeff_str(via_recursion[w.letters])} vs "
                    f"{coeff_str(kappa((w,)))}")
    return MultiCumulantMap(phi.alphabet, phi.order, via_recursion)


# ---------------------------------------------------------------------------
# JSON encodings (shared with the CLI)


def sequence_to_json(values, kind: str) -> dict:
    return {"kind": kind,
            "values": [coeff_str(v) for v in values]}


def parse_coefficient(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def moment_sequence_from_json(data: dict) -> MomentSequence:
    vals = [parse_coefficient(t) for t in data["values"]]
    if vals and vals[0] == 1:
        vals = vals[1:]  # accept either m_0-led or m_1-led lists
    return MomentSequence.of(vals)


def cumulant_sequence_from_json(data: dict, flavor: str) -> CumulantSequence:
    vals = tuple(parse_coefficient(t) for t in data["values"])
    return CumulantSequence(vals, flavor)


def multi_moment_map_from_json(data: dict) -> MultiMomentMap:
    alphabet = tuple(data["alphabet"])
    values = {tuple(key.split(".")): parse_coefficient(text)
              for key, text in data["values"].items()}
    order = max((len(k) for k in values), default=0)
    table = dict(values)
    for d in range(1, order + 1):
        for ls in iter_product(alphabet, repeat=d):
            if ls not in table:
                raise ParseError(f"moment table misses word {'.'.join(ls)}")
    return MultiMomentMap(alphabet, order, table)

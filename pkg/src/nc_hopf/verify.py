"""Verification suites for the structural identities of the library.

Each suite exercises one family of identities exhaustively on a bounded
corpus (or on deterministic pseudo-random functionals where the statement
quantifies over the dual) and returns a report listing every check with a
counterexample description on failure.  The suites are the arbiter for the
reading of the coproduct conventions, so failures are reported rather than
silently absorbed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .coefficients import ONE
from .functionals import (
    NC,
    WORDS,
    Algebra,
    augmentation,
    check_character,
    convolve,
    exp_prec,
    extract_infinitesimal,
    half_convolve,
    pullback_sp,
    random_functional,
    random_infinitesimal,
    solve_left_fixed_point,
    standard_section,
)
from .partitions import (
    NonCrossingPartition,
    bell_number,
    catalan_number,
    enumerate_nc_partitions,
    enumerate_set_partitions,
    full_partition,
    moebius,
    singleton_partition,
)
from .tensor import (
    UNIT,
    BarWord,
    DecoratedNC,
    LinComb,
    Word,
    add_into,
    barword_text,
    delta_bar,
    lincomb_sum,
    sp,
    tensor_product,
)
from .transforms import (
    CLASSICAL,
    FREE,
    CumulantSequence,
    MomentSequence,
    classical_cumulants_from_moments,
    classical_moments_from_cumulants,
    free_cumulants_from_moments,
    free_moments_from_cumulants,
    kappa_powers,
)
from .trees import hierarchy_tree, tree_coproduct


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.checks.append(Check(label, ok, detail))

    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} "
                 f"({len(self.checks)} checks, {len(self.failures())} failed)"]
        for c in self.failures():
            lines.append(f"  FAIL {c.label}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# coproduct operator plumbing


def _apply_left(terms: LinComb, variant: str) -> LinComb:
    """Apply the chosen coproduct variant to the left leg of each pair."""
    out: LinComb = {}
    for (left, right), c in terms.items():
        for (a, b), d in delta_bar(left, variant).items():
            add_into(out, (a, b, right), c * d)
    return out


def _apply_right(terms: LinComb, variant: str) -> LinComb:
    out: LinComb = {}
    for (left, right), c in terms.items():
        for (a, b), d in delta_bar(right, variant).items():
            add_into(out, (left, a, b), c * d)
    return out


def _elements(kind: str, alphabet: tuple[str, ...], degree: int) -> list:
    """Single generator atoms of the given degree on the chosen bialgebra."""
    if kind == WORDS:
        return [Word(ls) for ls in iter_product(alphabet, repeat=degree)]
    return [DecoratedNC(shape) for shape in enumerate_nc_partitions(degree)]


# ---------------------------------------------------------------------------
# suites


def verify_coassociativity(max_degree: int = 6,
                           alphabet: tuple[str, ...] = ("a", "b", "c"),
                           ) -> SuiteReport:
    """(Delta x id) Delta = (id x Delta) Delta on both bialgebras, checked
    on every generator up to the degree bound."""
    report = SuiteReport("coassociativity")
    for kind in (WORDS, NC):
        bad = []
        count = 0
        for degree in range(1, max_degree + 1):
            for atom in _elements(kind, alphabet, degree):
                b: BarWord = (atom,)
                terms = delta_bar(b, "full")
                if _apply_left(terms, "full") != _apply_right(terms, "full"):
                    bad.append(barword_text(b))
                count += 1
        report.add(f"{kind}: generators up to degree {max_degree} ({count})",
                   not bad, ", ".join(bad[:3]))
    return report


def verify_unshuffle(max_degree: int = 5,
                     alphabet: tuple[str, ...] = ("a", "b")) -> SuiteReport:
    """The three half-coproduct axioms, the compatibilities with the bar
    product, and reconstruction of the full coproduct from its halves."""
    report = SuiteReport("unshuffle")
    for kind in (WORDS, NC):
        atoms = [a for d in range(1, max_degree + 1)
                 for a in _elements(kind, alphabet, d)]
        failures: dict[str, list] = {k: [] for k in
                                     ("C1", "C2", "C3", "halves", "D1", "D2")}
        for atom in atoms:
            b: BarWord = (atom,)
            left = delta_bar(b, "left")
            right = delta_bar(b, "right")
            name = barword_text(b)
            if _apply_left(left, "left") != _apply_right(left, "reduced"):
                failures["C1"].append(name)
            if _apply_left(left, "right") != _apply_right(right, "left"):
                failures["C2"].append(name)
            if _apply_left(right, "reduced") != _apply_right(right, "right"):
                failures["C3"].append(name)
            rebuilt = lincomb_sum(left, right,
                                  {(b, UNIT): ONE, (UNIT, b): ONE})
            if rebuilt != delta_bar(b, "full"):
                failures["halves"].append(name)
        for a in atoms:
            for b in atoms:
                if a.degree + b.degree > max_degree:
                    continue
                bar = (a, b)
                name = barword_text(bar)
                expect_l = tensor_product(delta_bar((a,), "left+"),
                                          delta_bar((b,), "full"))
                if delta_bar(bar, "left+") != expect_l:
                    failures["D1"].append(name)
                expect_r = tensor_product(delta_bar((a,), "right+"),
                                          delta_bar((b,), "full"))
                if delta_bar(bar, "right+") != expect_r:
                    failures["D2"].append(name)
        for label, bad in failures.items():
            report.add(f"{kind}: {label} up to degree {max_degree}",
                       not bad, ", ".join(bad[:3]))
    return report


def _sample_barwords(algebra: Algebra, max_degree: int,
                     rng: random.Random, per_degree: int) -> list[BarWord]:
    out: list[BarWord] = []
    for d in range(1, max_degree + 1):
        basis = algebra.barwords(d)
        if len(basis) <= per_degree:
            out.extend(basis)
        else:
            out.extend(rng.sample(basis, per_degree))
    return out


def verify_halfshuffle(max_degree: int = 6, trials: int = 100,
                       seed: int = 7, per_degree: int = 4) -> SuiteReport:
    """Dual shuffle axioms for random rational functionals on both
    bialgebras, evaluated on a random sample of basis bar words per degree,
    plus the unit laws with the augmentation."""
    report = SuiteReport("halfshuffle")
    for kind in (WORDS, NC):
        algebra = Algebra(kind, ("a", "b"))
        rng = random.Random(f"{seed}:{kind}")
        failures: dict[str, list] = {k: [] for k in ("A1", "A2", "A3", "units")}
        checked = 0
        samples = _sample_barwords(algebra, max_degree, rng, per_degree)
        for trial in range(trials):
            f = random_functional(algebra, max_degree, seed * 1000 + trial * 3)
            g = random_functional(algebra, max_degree, seed * 1000 + trial * 3 + 1)
            h = random_functional(algebra, max_degree, seed * 1000 + trial * 3 + 2)
            e = augmentation(algebra, max_degree)
            a1_l = half_convolve(half_convolve(f, g, "left"), h, "left")
            a1_r = half_convolve(f, convolve(g, h), "left")
            a2_l = half_convolve(half_convolve(f, g, "right"), h, "left")
            a2_r = half_convolve(f, half_convolve(g, h, "left"), "right")
            a3_l = half_convolve(f, half_convolve(g, h, "right"), "right")
            a3_r = half_convolve(convolve(f, g), h, "right")
            fe = half_convolve(f, e, "left")
            ef = half_convolve(e, f, "right")
            ef0 = half_convolve(e, f, "left")
            fe0 = half_convolve(f, e, "right")
            for b in samples:
                checked += 1
                name = f"trial {trial}: {barword_text(b)}"
                if a1_l(b) != a1_r(b):
                    failures["A1"].append(name)
                if a2_l(b) != a2_r(b):
                    failures["A2"].append(name)
                if a3_l(b) != a3_r(b):
                    failures["A3"].append(name)
                if (fe(b) != f(b) or ef(b) != f(b)
                        or ef0(b) != 0 or fe0(b) != 0):
                    failures["units"].append(name)
        for label, bad in failures.items():
            report.add(f"{kind}: {label} ({trials} triples, {checked} samples)",
                       not bad, ", ".join(bad[:3]))
    return report


def verify_sp_morphism(max_word_len: int = 6,
                       alphabet: tuple[str, ...] = ("a", "b"),
                       functional_degree: int = 5, trials: int = 5,
                       seed: int = 11) -> SuiteReport:
    """The splitting map intertwines the full and half coproducts, and its
    dual preserves the convolution and both half-shuffle products."""
    report = SuiteReport("sp-morphism")
    for variant in ("full", "left+", "right+"):
        bad = []
        count = 0
        for degree in range(1, max_word_len + 1):
            for ls in iter_product(alphabet, repeat=degree):
                b: BarWord = (Word(ls),)
                lhs: LinComb = {}
                for key, c in sp(b).items():
                    for pair, d in delta_bar(key, variant).items():
                        add_into(lhs, pair, c * d)
                rhs: LinComb = {}
                for (left, right), c in delta_bar(b, variant).items():
                    left_img = sp(left) if left != UNIT else {UNIT: ONE}
                    right_img = sp(right) if right != UNIT else {UNIT: ONE}
                    for kl, cl in left_img.items():
                        for kr, cr in right_img.items():
                            add_into(rhs, (kl, kr), c * cl * cr)
                if lhs != rhs:
                    bad.append(barword_text(b))
                count += 1
        report.add(f"structural {variant} on words up to length {max_word_len}"
                   f" ({count})", not bad, ", ".join(bad[:3]))

    nc_algebra = Algebra(NC, alphabet)
    words_algebra = Algebra(WORDS, alphabet)
    rng = random.Random(seed)
    failures: dict[str, list] = {k: [] for k in ("*", "≺", "≻")}
    for trial in range(trials):
        f = random_functional(nc_algebra, functional_degree, seed + 100 + trial)
        g = random_functional(nc_algebra, functional_degree, seed + 200 + trial)
        pairs = {
            "*": (pullback_sp(convolve(f, g)),
                  convolve(pullback_sp(f), pullback_sp(g))),
            "≺": (pullback_sp(half_convolve(f, g, "left")),
                  half_convolve(pullback_sp(f), pullback_sp(g), "left")),
            "≻": (pullback_sp(half_convolve(f, g, "right")),
                  half_convolve(pullback_sp(f), pullback_sp(g), "right")),
        }
        for b in _sample_barwords(words_algebra, functional_degree, rng, 3):
            for label, (lhs, rhs) in pairs.items():
                if lhs(b) != rhs(b):
                    failures[label].append(f"trial {trial}: {barword_text(b)}")
    for label, bad in failures.items():
        report.add(f"dual preserves {label} ({trials} pairs)",
                   not bad, ", ".join(bad[:3]))
    return report


def verify_character_bijection(truncation: int = 8, commute_degree: int = 6,
                               seed: int = 23) -> SuiteReport:
    """Fixed point vs half-shuffle exponential, multiplicativity of the
    result, exact recovery of the generator, and commutation with the
    pullback of the splitting map."""
    report = SuiteReport("character-bijection")
    algebra = Algebra(WORDS, ("a",))
    kappa = random_infinitesimal(algebra, truncation, seed)
    phi_fix = solve_left_fixed_point(kappa)
    phi_exp = exp_prec(kappa)
    basis = [b for d in range(truncation + 1) for b in algebra.barwords(d)]
    bad = [barword_text(b) for b in basis if phi_fix(b) != phi_exp(b)]
    report.add(f"exp≺ = fixed point on {len(basis)} bar words, N={truncation}",
               not bad, ", ".join(bad[:3]))

    char = check_character(phi_fix)
    report.add(f"fixed point is a character ({char.checked} products)",
               char.ok, str(char.violations[:3]))

    recovered = extract_infinitesimal(phi_fix)
    bad = [f"a^{n}" for n in range(1, truncation + 1)
           if recovered((Word(("a",) * n),)) != kappa((Word(("a",) * n),))]
    report.add("generator recovered exactly", not bad, ", ".join(bad))

    nc_algebra = Algebra(NC, ("a",))
    kappa_nc = random_infinitesimal(nc_algebra, commute_degree, seed + 1)
    lhs = pullback_sp(exp_prec(kappa_nc))
    rhs = exp_prec(pullback_sp(kappa_nc))
    words_algebra = Algebra(WORDS, ("a",))
    basis = [b for d in range(commute_degree + 1)
             for b in words_algebra.barwords(d)]
    bad = [barword_text(b) for b in basis if lhs(b) != rhs(b)]
    report.add(f"Sp* commutes with exp≺ up to degree {commute_degree}",
               not bad, ", ".join(bad[:3]))
    return report


def _distinct_word(n: int) -> Word:
    return Word(tuple(f"x{i}" for i in range(1, n + 1)))


def _subword_cumulants(phi_fn, w: Word) -> dict:
    """Generalized cumulants restricted to subwords of a distinct-letter
    word; the family is closed under block restriction, so the recursive
    solve stays inside it."""
    r: dict = {}

    def value(v: Word):
        if v.letters in r:
            return r[v.letters]
        total = phi_fn(v)
        for shape in enumerate_nc_partitions(v.degree):
            if len(shape.blocks) == 1:
                continue
            total = total - kappa_powers(shape, v, value)
        r[v.letters] = total
        return total

    for mask in range(1, 1 << w.degree):
        value(w.subword([i + 1 for i in range(w.degree) if mask >> i & 1]))
    return r


def verify_keyrell(max_n: int = 6, seed: int = 31,
                   kappa_fn=None) -> SuiteReport:
    """The fixed point of Psi = e + sd(kappa) ≺ Psi evaluates on a decorated
    partition as the product of kappa over its blocks, and summing those
    block products over the whole lattice recovers the moments from which
    the cumulants were solved."""
    report = SuiteReport("keyrell")
    alphabet = tuple(f"x{i}" for i in range(1, max_n + 1))
    nc_algebra = Algebra(NC, alphabet)
    if kappa_fn is None:
        rng_values: dict = {}

        def kappa_fn(w: Word) -> Fraction:
            if w.letters not in rng_values:
                r = random.Random(f"{seed}:{w.text()}")
                rng_values[w.letters] = Fraction(r.randint(-12, 12),
                                                 r.randint(1, 5))
            return rng_values[w.letters]

    sd = standard_section(kappa_fn, nc_algebra, max_n)
    psi = solve_left_fixed_point(sd)
    bad = []
    count = 0
    for n in range(1, max_n + 1):
        w = _distinct_word(n)
        for shape in enumerate_nc_partitions(n):
            count += 1
            expect = kappa_powers(shape, w, kappa_fn)
            if psi((DecoratedNC(shape, w),)) != expect:
                bad.append(f"{shape.text()} on {w.text()}")
    report.add(f"Psi(L⊗w) = block product of kappa ({count} partitions)",
               not bad, ", ".join(bad[:3]))

    # principal equation: with kappa solved from phi, the lattice sum of
    # block products returns phi
    def phi_fn(w: Word) -> Fraction:
        r = random.Random(f"{seed + 1}:{w.text()}")
        return Fraction(r.randint(-12, 12), r.randint(1, 5))

    bad = []
    for n in range(1, max_n + 1):
        w = _distinct_word(n)
        solved = _subword_cumulants(phi_fn, w)

        def kappa_solved(v: Word):
            return solved[v.letters]

        total = sum((kappa_powers(shape, w, kappa_solved)
                     for shape in enumerate_nc_partitions(n)),
                    start=Fraction(0))
        if total != phi_fn(w):
            bad.append(w.text())
    report.add(f"lattice sum of cumulant block products = moments, n ≤ {max_n}",
               not bad, ", ".join(bad))
    return report


def verify_roundtrip(count: int = 50, order: int = 8,
                     seed: int = 41) -> SuiteReport:
    """moments -> cumulants -> moments and the reverse are the identity in
    both flavors, on random rational sequences."""
    report = SuiteReport("roundtrip")
    rng = random.Random(seed)
    for flavor in (CLASSICAL, FREE):
        bad = []
        for trial in range(count):
            vals = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 6))
                         for _ in range(order))
            m = MomentSequence.of(vals)
            c = CumulantSequence(vals, flavor)
            if flavor == CLASSICAL:
                back_m = classical_moments_from_cumulants(
                    classical_cumulants_from_moments(m))
                back_c = classical_cumulants_from_moments(
                    classical_moments_from_cumulants(c))
            else:
                back_m = free_moments_from_cumulants(
                    free_cumulants_from_moments(m))
                back_c = free_cumulants_from_moments(
                    free_moments_from_cumulants(c))
            if back_m.values != m.values or back_c.values != c.values:
                bad.append(f"trial {trial}")
        report.add(f"{flavor}: {count} random sequences, N={order}",
                   not bad, ", ".join(bad[:3]))
    return report


def verify_semicircular(order: int = 8) -> SuiteReport:
    """The cumulant sequence (0, 1, 0, ...) has even moments counted by the
    Catalan numbers and vanishing odd moments; the oracle is a brute-force
    count of non-crossing partitions into pairs."""
    report = SuiteReport("semicircular")
    k = CumulantSequence((Fraction(0), Fraction(1)) +
                         (Fraction(0),) * (order - 2), FREE)
    m = free_moments_from_cumulants(k)
    bad = []
    for n in range(1, order + 1):
        pairings = sum(1 for p in enumerate_nc_partitions(n)
                       if all(len(b) == 2 for b in p.blocks))
        expect = catalan_number(n // 2) if n % 2 == 0 else 0
        if pairings != expect:
            bad.append(f"pair count at n={n}")
        if m.moment(n) != pairings:
            bad.append(f"moment at n={n}")
    report.add(f"moments = non-crossing pair counts = Catalan, N={order}",
               not bad, ", ".join(bad))
    return report


def verify_tree_consistency(max_n: int = 6) -> SuiteReport:
    """Pushing the partition coproduct through the hierarchy map (tree on
    the left leg, forest on the right) reproduces the tree coproduct; the
    hierarchy map is degree-preserving but not injective."""
    from .tensor import delta_nc

    report = SuiteReport("tree-consistency")
    bad = []
    count = 0
    for n in range(1, max_n + 1):
        for shape in enumerate_nc_partitions(n):
            count += 1
            mapped: LinComb = {}
            for (left, right), c in delta_nc(DecoratedNC(shape)).items():
                rooted = hierarchy_tree(left[0].shape) if left else ()
                forest = tuple(hierarchy_tree(atom.shape) for atom in right)
                add_into(mapped, (rooted, forest), c)
            if mapped != tree_coproduct(hierarchy_tree(shape)):
                bad.append(shape.text())
    report.add(f"coproducts agree through the hierarchy map ({count} shapes)",
               not bad, ", ".join(bad[:3]))

    bad = []
    for n in range(1, max_n + 1):
        for shape in enumerate_nc_partitions(n):
            from .trees import tree_degree
            if tree_degree(hierarchy_tree(shape)) != len(shape.blocks):
                bad.append(shape.text())
    report.add("degree preserved (vertices = blocks)", not bad, ", ".join(bad[:3]))

    a = NonCrossingPartition.of([[1, 4], [2, 3], [5, 6, 7]])
    b = NonCrossingPartition.of([[1, 3], [2], [4, 5]])
    report.add("known collision of distinct partitions",
               a != b and hierarchy_tree(a) == hierarchy_tree(b))
    return report


def verify_moebius(max_n: int = 7) -> SuiteReport:
    """Closed forms of the Möbius function on the full interval of both
    lattices, computed through the generic interval recursion only."""
    report = SuiteReport("moebius")
    bad_nc, bad_set = [], []
    for n in range(1, max_n + 1):
        lo = singleton_partition(range(1, n + 1))
        hi = full_partition(range(1, n + 1))
        expect_nc = (-1) ** (n - 1) * catalan_number(n - 1)
        if moebius("nc", lo, hi) != expect_nc:
            bad_nc.append(f"n={n}")
        expect_set = (-1) ** (n - 1) * math.factorial(n - 1)
        if moebius("set", lo, hi) != expect_set:
            bad_set.append(f"n={n}")
    report.add(f"nc lattice: signed Catalan values, n ≤ {max_n}",
               not bad_nc, ", ".join(bad_nc))
    report.add(f"set lattice: signed factorial values, n ≤ {max_n}",
               not bad_set, ", ".join(bad_set))
    return report


def verify_counting(max_n: int = 10) -> SuiteReport:
    """Enumeration sizes against the Catalan and Bell recurrences."""
    report = SuiteReport("counting")
    bad = [f"nc n={n}" for n in range(1, max_n + 1)
           if len(enumerate_nc_partitions(n)) != catalan_number(n)]
    report.add(f"|NC_n| = Catalan(n), n ≤ {max_n}", not bad, ", ".join(bad))
    bad = [f"set n={n}" for n in range(1, max_n + 1)
           if len(enumerate_set_partitions(n)) != bell_number(n)]
    report.add(f"|P_n| = Bell(n), n ≤ {max_n}", not bad, ", ".join(bad))
    return report


SUITES = {
    "counting": verify_counting,
    "coassociativity": verify_coassociativity,
    "unshuffle": verify_unshuffle,
    "halfshuffle": verify_halfshuffle,
    "sp-morphism": verify_sp_morphism,
    "character-bijection": verify_character_bijection,
    "keyrell": verify_keyrell,
    "roundtrip": verify_roundtrip,
    "semicircular": verify_semicircular,
    "tree-consistency": verify_tree_consistency,
    "moebius": verify_moebius,
}


def run_suite(name: str, **kwargs) -> list[SuiteReport]:
    """Run one named suite, or all of them."""
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from "
                       f"{', '.join(sorted(SUITES))} or 'all'")
    return [SUITES[name](**kwargs)]

import pytest
from fractions import Fraction
from math import comb, factorial

from hypothesis import given, settings
from hypothesis import strategies as st

from nc_hopf.errors import (
    CarrierMismatchError,
    OrderError,
    ParseError,
    SizeLimitError,
)
from nc_hopf.partitions import (
    AdmissibleSplit,
    NonCrossingPartition,
    SetPartition,
    admissible_splits,
    bell_number,
    catalan_number,
    connected_components,
    enumerate_nc_partitions,
    enumerate_set_partitions,
    full_partition,
    is_noncrossing,
    moebius,
    moebius_to_top,
    nc_partitions_of,
    parse_partition,
    refines,
    singleton_partition,
    standardize,
)


def brute_force_crossing(blocks) -> bool:
    """Oracle: a quadruple p1 < q1 < p2 < q2 with p1,p2 in one block and
    q1,q2 in a different block."""
    for i, a in enumerate(blocks):
        for j, b in enumerate(blocks):
            if i == j:
                continue
            for p1 in a:
                for p2 in a:
                    for q1 in b:
                        for q2 in b:
                            if p1 < q1 < p2 < q2:
                                return True
    return False


def catalan_closed_form(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def bell_by_dobinski_recurrence(n: int) -> int:
    b = [1]
    for m in range(n):
        b.append(sum(comb(m, k) * b[k] for k in range(m + 1)))
    return b[n]


class TestCanonicalForm:
    def test_blocks_sorted_by_minimum(self):
        p = SetPartition.of([[4, 2], [1, 3]])
        assert p.blocks == ((1, 3), (2, 4))

    def test_duplicate_element_rejected(self):
        with pytest.raises(ValueError):
            SetPartition.of([[1, 2], [2, 3]])

    def test_empty_block_rejected(self):
        with pytest.raises(ValueError):
            SetPartition.of([[1], []])

    def test_crossing_rejected_by_nc_class(self):
        with pytest.raises(ValueError):
            NonCrossingPartition.of([[1, 3], [2, 4]])

    def test_carrier_and_size(self):
        p = SetPartition.of([[1, 4], [2, 3], [7]])
        assert p.carrier == (1, 2, 3, 4, 7)
        assert p.size == 5

    def test_text_round_trip(self):
        p = NonCrossingPartition.of([[1, 4], [2, 3]])
        assert p.text() == "{1,4}{2,3}"
        assert parse_partition(p.text()) == p


class TestCrossingDetection:
    def test_matches_brute_force_on_all_small_partitions(self):
        for n in range(1, 8):
            for p in enumerate_set_partitions(n):
                assert is_noncrossing(p) == (not brute_force_crossing(p.blocks))

    def test_gapped_carrier(self):
        assert is_noncrossing(SetPartition.of([[1, 9], [3, 5]]))
        assert not is_noncrossing(SetPartition.of([[1, 5], [3, 9]]))


class TestEnumeration:
    def test_nc_counts_are_catalan(self):
        for n in range(1, 11):
            assert len(enumerate_nc_partitions(n)) == catalan_closed_form(n)

    def test_set_counts_are_bell(self):
        for n in range(1, 11):
            assert len(enumerate_set_partitions(n)) == \
                bell_by_dobinski_recurrence(n)

    def test_count_helpers_agree_with_closed_forms(self):
        for n in range(11):
            assert catalan_number(n) == catalan_closed_form(n)
            assert bell_number(n) == bell_by_dobinski_recurrence(n)

    def test_nc_subset_of_set_partitions(self):
        for n in range(1, 7):
            ncs = {p.blocks for p in enumerate_nc_partitions(n)}
            alls = {p.blocks for p in enumerate_set_partitions(n)}
            assert ncs == {b for b in alls
                           if is_noncrossing(SetPartition(b))}

    def test_enumeration_deterministic(self):
        assert enumerate_nc_partitions(5) == enumerate_nc_partitions(5)

    def test_cap_enforced(self):
        with pytest.raises(SizeLimitError):
            enumerate_nc_partitions(99)
        with pytest.raises(SizeLimitError):
            enumerate_set_partitions(50)

    def test_arbitrary_carrier(self):
        parts = nc_partitions_of([2, 5, 9])
        assert len(parts) == catalan_closed_form(3)
        assert all(p.carrier == (2, 5, 9) for p in parts)


class TestOrderAndStandardization:
    def test_refinement(self):
        fine = SetPartition.of([[1], [2], [3, 4]])
        coarse = SetPartition.of([[1, 2], [3, 4]])
        assert refines(fine, coarse)
        assert not refines(coarse, fine)

    def test_refinement_requires_same_carrier(self):
        with pytest.raises(CarrierMismatchError):
            refines(SetPartition.of([[1]]), SetPartition.of([[2]]))

    def test_standardization_worked_example(self):
        p = NonCrossingPartition.of([[3, 6, 10], [4, 5], [8]])
        assert standardize(p) == \
            NonCrossingPartition.of([[1, 4, 6], [2, 3], [5]])

    def test_standardize_preserves_class(self):
        p = NonCrossingPartition.of([[2, 5], [3, 4]])
        assert isinstance(standardize(p), NonCrossingPartition)

    def test_connected_components(self):
        assert connected_components([3], range(1, 5)) == [(1, 2), (4,)]
        assert connected_components([], range(1, 4)) == [(1, 2, 3)]
        assert connected_components([1, 2, 3], range(1, 4)) == []
        assert connected_components([1, 3, 5], range(1, 6)) == [(2,), (4,)]


class TestAdmissibleSplits:
    def test_total_and_extreme_splits(self):
        p = NonCrossingPartition.of([[1, 4], [2, 3]])
        splits = admissible_splits(p)
        q_parts = [s.q_part.blocks for s in splits]
        assert () in q_parts
        assert p.blocks in q_parts

    def test_nested_selection_rule(self):
        # the inner block alone cannot be selected: it is nested in the outer
        p = NonCrossingPartition.of([[1, 4], [2, 3]])
        selected = {s.q_part.blocks for s in admissible_splits(p)}
        assert ((2, 3),) not in selected
        assert ((1, 4),) in selected

    def test_components_partition_the_complement(self):
        for n in range(1, 6):
            for p in enumerate_nc_partitions(n):
                for s in admissible_splits(p):
                    left = set(s.q_part.carrier)
                    right = set()
                    for comp in s.components:
                        right.update(comp.carrier)
                    assert left | right == set(p.carrier)
                    assert not left & right

    def test_split_count_example(self):
        # {{1,2},{3},{4}}: every block subset except {3}-with-{4}-kept cases
        p = NonCrossingPartition.of([[1, 2], [3], [4]])
        assert len(admissible_splits(p)) == 8


class TestMoebius:
    def test_closed_forms(self):
        for n in range(1, 8):
            lo = singleton_partition(range(1, n + 1))
            hi = full_partition(range(1, n + 1))
            assert moebius("set", lo, hi) == \
                (-1) ** (n - 1) * factorial(n - 1)
            assert moebius("nc", lo, hi) == \
                (-1) ** (n - 1) * catalan_closed_form(n - 1)

    def test_reflexive_interval(self):
        p = NonCrossingPartition.of([[1, 2], [3]])
        assert moebius("nc", p, p) == 1

    def test_column_matches_per_interval_recursion(self):
        for lattice, enum in (("set", enumerate_set_partitions),
                              ("nc", enumerate_nc_partitions)):
            for n in range(1, 6):
                top = full_partition(range(1, n + 1))
                column = moebius_to_top(lattice, n)
                for p in enum(n):
                    assert column[p.blocks] == moebius(lattice, p, top)

    def test_moebius_inversion_identity(self):
        # sum over the full interval of mu(L, top) is 0 for n > 1
        for n in range(2, 7):
            assert sum(moebius_to_top("nc", n).values()) == 0
            assert sum(moebius_to_top("set", n).values()) == 0

    def test_order_violation(self):
        lo = SetPartition.of([[1, 2], [3]])
        hi = SetPartition.of([[1, 3], [2]])
        with pytest.raises(OrderError):
            moebius("set", lo, hi)

    def test_crossing_endpoint_rejected_on_nc(self):
        lo = SetPartition.of([[1, 3], [2, 4]])
        hi = SetPartition.of([[1, 2, 3, 4]])
        with pytest.raises(ValueError):
            moebius("nc", lo, hi)


class TestParsing:
    def test_parse_with_carrier_suffix(self):
        p = parse_partition("{2,5}{3,4} on {2,3,4,5}")
        assert p.blocks == ((2, 5), (3, 4))

    def test_parse_rejects_malformed(self):
        for bad in ["", "{1,2", "{1}{1}", "{}", "1,2"]:
            with pytest.raises(ParseError):
                parse_partition(bad)

    def test_parse_set_flavor_allows_crossing(self):
        p = parse_partition("{1,3}{2,4}", noncrossing=False)
        assert isinstance(p, SetPartition)
        with pytest.raises(ParseError):
            parse_partition("{1,3}{2,4}")


@st.composite
def random_partition(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    labels = draw(st.lists(st.integers(min_value=1, max_value=n),
                           min_size=n, max_size=n))
    blocks = {}
    for i, lab in enumerate(labels, start=1):
        blocks.setdefault(lab, []).append(i)
    return SetPartition.of(blocks.values())


@given(random_partition())
@settings(max_examples=80, deadline=None)
def test_parse_text_round_trip_property(p):
    assert parse_partition(p.text(), noncrossing=False) == p


@given(random_partition(), st.integers(min_value=0, max_value=127))
@settings(max_examples=80, deadline=None)
def test_restriction_preserves_noncrossing(p, mask):
    subset = [x for i, x in enumerate(p.carrier) if mask >> i & 1]
    q = p.restrict(subset)
    if is_noncrossing(p):
        assert is_noncrossing(q)
    assert q.carrier == tuple(subset)

"""Counting formulas vs frozen values, the reference enumerator, and each other."""

import pytest

from szsets.counts import (
    SequenceFamily,
    binomial,
    check_floor_claims,
    count_A,
    count_A_binomial,
    count_B,
    count_C,
    count_compositions,
    count_D,
    count_E,
    count_H,
    count_H_binomial,
    count_I,
    count_J,
    count_Lw,
    count_Ls,
    count_M,
    count_P,
    count_Q,
    default_families,
    family_oracle_spec,
    family_value,
    verify_family,
)
from szsets.fib import fib

from _reference import (
    gaps_all_odd,
    gaps_at_least,
    is_maximal,
    is_strong,
    is_weak,
    naive_compositions,
    naive_count,
)

M_FIRST_NINE = [1, 1, 2, 3, 5, 8, 13, 21, 34]


class TestFrozenValues:
    def test_m_first_values(self):
        assert [count_M(n) for n in range(1, 10)] == M_FIRST_NINE

    def test_a_base_cases(self):
        assert [count_A(n) for n in range(1, 6)] == [0, 1, 1, 2, 3]

    @pytest.mark.parametrize("n,expected", [(2, 1), (4, 2), (10, 34)])
    def test_a_binomial(self, n, expected):
        assert count_A_binomial(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 0), (5, 2)])
    def test_b(self, n, expected):
        assert count_B(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 2), (3, 5), (7, 34)])
    def test_c(self, n, expected):
        assert count_C(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 1), (3, 3), (8, 34)])
    def test_d(self, n, expected):
        assert count_D(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 3), (3, 5)])
    def test_e(self, n, expected):
        assert count_E(n) == expected

    @pytest.mark.parametrize("n,expected", [(2, 2), (3, 2), (4, 5)])
    def test_lw(self, n, expected):
        assert count_Lw(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (4, 2)])
    def test_ls(self, n, expected):
        assert count_Ls(n) == expected

    @pytest.mark.parametrize("k,n,expected", [(2, 3, 1), (2, 4, 2), (2, 7, 6)])
    def test_h(self, k, n, expected):
        assert count_H(k, n) == expected

    @pytest.mark.parametrize("k,n,expected", [(2, 2, 1), (2, 4, 2), (3, 9, 7)])
    def test_h_binomial(self, k, n, expected):
        assert count_H_binomial(k, n) == expected

    @pytest.mark.parametrize("k,n,expected", [(2, 1, 0), (2, 4, 1), (2, 5, 2)])
    def test_i(self, k, n, expected):
        assert count_I(k, n) == expected

    @pytest.mark.parametrize("k,n,expected", [(2, 1, 1), (2, 3, 0), (2, 9, 4)])
    def test_j(self, k, n, expected):
        assert count_J(k, n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 3)])
    def test_p(self, n, expected):
        assert count_P(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 4), (3, 7)])
    def test_q(self, n, expected):
        assert count_Q(n) == expected


class TestDomainErrors:
    @pytest.mark.parametrize(
        "fn", [count_M, count_A, count_B, count_C, count_D, count_E, count_Lw, count_Ls, count_P, count_Q]
    )
    def test_rejects_nonpositive_n(self, fn):
        with pytest.raises(ValueError):
            fn(0)

    def test_a_binomial_range_starts_at_two(self):
        with pytest.raises(ValueError):
            count_A_binomial(1)

    @pytest.mark.parametrize("fn", [count_H, count_H_binomial, count_I, count_J])
    def test_gap_families_require_k_at_least_two(self, fn):
        with pytest.raises(ValueError):
            fn(1, 5)
        with pytest.raises(ValueError):
            fn(2, 0)

    def test_k1_extension_needs_opt_in(self):
        assert count_H(1, 5, allow_k1=True) == count_M(5)
        with pytest.raises(ValueError):
            count_H(0, 5, allow_k1=True)


class TestIdentities:
    def test_weak_splits_into_strong_plus_maximal_to_200(self):
        for n in range(1, 201):
            assert count_M(n) == count_A(n) + count_B(n)

    def test_prefix_identities_to_200(self):
        sum_m = 0
        sum_a = 0
        for n in range(1, 201):
            sum_m += count_M(n)
            sum_a += count_A(n)
            assert count_C(n) == sum_m + 1
            assert count_D(n) == sum_a + 1

    def test_a_binomial_equals_a_to_200(self):
        for n in range(2, 201):
            assert count_A_binomial(n) == count_A(n)

    def test_h_binomial_equals_h_recurrence(self):
        for k in range(2, 11):
            for n in range(1, 201):
                assert count_H_binomial(k, n) == count_H(k, n), (k, n)

    def test_weak_gap_family_splits_into_strong_plus_maximal(self):
        for k in range(2, 7):
            for n in range(1, 201):
                assert count_H(k, n) == count_I(k, n) + count_J(k, n), (k, n)

    def test_k1_extension_collapses_to_anchored_families(self):
        for n in range(1, 21):
            assert count_H(1, n, allow_k1=True) == count_M(n)
            assert count_I(1, n, allow_k1=True) == count_A(n)
            assert count_J(1, n, allow_k1=True) == count_B(n)


class TestAgainstReferenceEnumeration:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_all_simple_families(self, n):
        assert count_M(n) == naive_count(n, lambda s: bool(s) and max(s) == n and is_weak(s))
        assert count_A(n) == naive_count(n, lambda s: bool(s) and max(s) == n and is_strong(s))
        assert count_B(n) == naive_count(n, lambda s: bool(s) and max(s) == n and is_maximal(s))
        assert count_C(n) == naive_count(n, is_weak)
        assert count_D(n) == naive_count(n, is_strong)
        assert count_E(n) == naive_count(n, lambda s: gaps_at_least(s, 2))
        assert count_Lw(n) == naive_count(n, lambda s: is_weak(s) and (not s or max(s) % 2 == 0))
        assert count_Ls(n) == naive_count(n, lambda s: is_strong(s) and (not s or max(s) % 2 == 1))
        assert count_P(n) == naive_count(n, lambda s: bool(s) and n in s and gaps_all_odd(s))
        assert count_Q(n) == naive_count(n, gaps_all_odd)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_gap_families(self, k):
        for n in range(1, 11):
            in_n_gap = lambda s: bool(s) and n in s and gaps_at_least(s, k)
            assert count_H(k, n, allow_k1=True) == naive_count(n, lambda s: in_n_gap(s) and is_weak(s))
            assert count_I(k, n, allow_k1=True) == naive_count(n, lambda s: in_n_gap(s) and is_strong(s))
            assert count_J(k, n, allow_k1=True) == naive_count(n, lambda s: in_n_gap(s) and is_maximal(s))


class TestBinomialConventions:
    def test_zero_cases(self):
        assert binomial(0, 0) == 1
        assert binomial(3, 5) == 0
        assert binomial(5, -1) == 0
        assert binomial(-1, 0) == 0
        assert binomial(-3, 2) == 0

    def test_ordinary_values(self):
        assert binomial(5, 2) == 10
        assert binomial(6, 0) == 1


class TestCompositions:
    @pytest.mark.parametrize(
        "n,bounds,expected",
        [(5, [1, 2], 3), (3, [0, 0, 0], 10), (4, [5], 0)],
    )
    def test_examples(self, n, bounds, expected):
        assert count_compositions(n, bounds) == expected

    def test_rejects_empty_bounds(self):
        with pytest.raises(ValueError):
            count_compositions(4, [])

    def test_matches_brute_force(self):
        from itertools import product

        for p in range(1, 4):
            for bounds in product(range(0, 4), repeat=p):
                for n in range(0, 13):
                    assert count_compositions(n, bounds) == naive_compositions(n, bounds), (
                        n,
                        bounds,
                    )


class TestFloorClaims:
    @pytest.mark.parametrize("n,k", [(10, 2), (9, 2), (7, 5)])
    def test_examples_all_hold(self, n, k):
        assert check_floor_claims(n, k) == (True, True, True)

    def test_sweep(self):
        for k in range(2, 21):
            for n in range(-50, 500):
                assert check_floor_claims(n, k) == (True, True, True), (n, k)

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            check_floor_claims(10, 1)


class TestSequenceFamily:
    def test_gap_families_require_k(self):
        with pytest.raises(ValueError):
            SequenceFamily("H")
        with pytest.raises(ValueError):
            SequenceFamily("H", 1)

    def test_simple_families_reject_k(self):
        with pytest.raises(ValueError):
            SequenceFamily("C", 2)

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            SequenceFamily("Z")

    def test_labels(self):
        assert SequenceFamily("C").label() == "C"
        assert SequenceFamily("H", 3).label() == "H[k=3]"

    def test_default_families_cover_all_tags(self):
        families = default_families((2, 3))
        tags = {f.tag for f in families}
        assert tags == {"M", "A", "A_binomial", "B", "C", "D", "E", "Lw", "Ls", "H", "I", "J", "P", "Q"}
        assert sum(1 for f in families if f.tag == "H") == 2

    def test_family_value_routes_a_binomial_n1(self):
        assert family_value(SequenceFamily("A_binomial"), 1) == 0


class TestVerifyFamily:
    def test_c_passes_with_oracle(self):
        report = verify_family(SequenceFamily("C"), 10)
        assert report.overall_pass
        row = report.rows[2]
        assert (row.n, row.oracle, row.formula, row.recurrence) == (3, 5, 5, None)

    def test_h_compares_three_routes(self):
        report = verify_family(SequenceFamily("H", 2), 12)
        assert report.overall_pass
        row = report.rows[3]
        assert (row.n, row.oracle, row.formula, row.recurrence) == (4, 2, 2, 2)

    def test_m_rows_match_listed_values(self):
        report = verify_family(SequenceFamily("M"), 9)
        assert [row.formula for row in report.rows] == M_FIRST_NINE
        assert [row.oracle for row in report.rows] == M_FIRST_NINE

    def test_every_family_passes_at_small_n(self):
        for family in default_families((2, 3)):
            report = verify_family(family, 8)
            assert report.overall_pass, family

    def test_oracle_equivalence_for_families_outside_acceptance_sweep(self):
        # The acceptance sweeps cover A/B/C/D/Lw/Ls/H/I/J/P/Q at n <= 20;
        # M, E, and the binomial route for A get the same treatment here.
        for tag in ("M", "E", "A_binomial"):
            report = verify_family(SequenceFamily(tag), 20)
            assert report.overall_pass, tag

    def test_oracle_spec_shapes(self):
        spec = family_oracle_spec(SequenceFamily("Lw"))
        assert spec.max_parity == "even" and spec.include_empty
        spec = family_oracle_spec(SequenceFamily("J", 4))
        assert spec.zeckendorf_gap == 4 and spec.schreier == "maximal"
        assert spec.max_constraint == "contains_n"


def test_family_values_reduce_to_fibonacci():
    for n in range(1, 60):
        assert count_M(n) == fib(n)
        assert count_C(n) == count_E(n) == fib(n + 2)
        assert count_D(n) == count_P(n) == fib(n + 1)
        assert count_Q(n) == fib(n + 3) - 1

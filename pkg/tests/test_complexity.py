import pytest

from permutex.complexity import (
    CSV_HEADER,
    complexity_report,
    enumerate_perms,
    factor_count,
    perm_set,
    power_split,
    tau_bruteforce,
    tau_closed_form,
    tau_recursive,
    upper_bound_check,
)
from permutex.errors import DomainTooSmall, NonStabilized
from permutex.perms import perm
from permutex.words import named_word, thue_morse

from conftest import rerank, tm_prefix

ORACLE_TEXT = tm_prefix(1 << 14)


def tau_oracle(n, starts=4000, depth=200):
    """Distinct rank patterns of plain string suffix windows of the digit-sum prefix."""
    seen = set()
    for a in range(starts):
        seen.add(rerank([ORACLE_TEXT[a + j : a + j + depth] for j in range(n)]))
    return len(seen)


class TestEnumeration:
    def test_length_2(self):
        ps = perm_set(2)
        assert set(ps.members) == {(1, 2), (2, 1)} and ps.stabilized

    def test_spot_values(self):
        assert tau_bruteforce(5) == 14
        assert tau_bruteforce(5, "doubled-thue-morse") == 16

    def test_length_4_matches_listing(self, appendix_sets):
        expected = {p for ms in appendix_sets[4].values() for p in ms}
        assert {str(p) for p in perm_set(4)} == expected

    @pytest.mark.parametrize("n", range(2, 10))
    def test_listing_sizes(self, appendix_sets, n):
        assert len(perm_set(n)) == sum(len(ms) for ms in appendix_sets[n].values())

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 11, 16])
    def test_independent_oracle(self, n):
        assert tau_bruteforce(n) == tau_oracle(n)

    def test_witness_origins(self, T):
        from permutex.perms import subpermutation

        for p in perm_set(7):
            assert subpermutation(T, p.origin.start, 7) == p

    def test_parity_partition(self):
        ps = perm_set(9)
        assert ps.even_members | ps.odd_members == set(ps.members)
        assert [p.ranks for p in ps.even] == sorted(ps.even_members)
        assert perm(2, 4, 8, 5, 9, 7, 3, 6, 1) in ps

    @pytest.mark.parametrize("n", range(6, 26))
    def test_parities_disjoint(self, n):
        ps = perm_set(n)
        assert not ps.even_members & ps.odd_members

    @pytest.mark.parametrize("n", range(1, 13))
    def test_stabilization_is_sound(self, n):
        ps = perm_set(n)
        wider = enumerate_perms(thue_morse(), n, initial_scan=4 * ps.scan_len)
        assert set(wider.members) == set(ps.members)

    def test_parallel_matches_serial(self):
        serial = enumerate_perms(thue_morse(), 12)
        parallel = enumerate_perms(thue_morse(), 12, jobs=2)
        assert set(parallel.members) == set(serial.members)
        assert parallel.even_members == serial.even_members

    def test_cap_raises(self):
        with pytest.raises(NonStabilized):
            enumerate_perms(thue_morse(), 5, initial_scan=2, max_scan=4)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("PERMUTEX_MAX_SCAN", "8")
        with pytest.raises(NonStabilized):
            enumerate_perms(thue_morse(), 6, initial_scan=4)

    def test_bad_length(self):
        with pytest.raises(ValueError):
            enumerate_perms(thue_morse(), 0)


class TestClosedForm:
    @pytest.mark.parametrize("n, expected", [(2, 2), (3, 6), (4, 8), (5, 14), (6, 16), (9, 30), (16, 44), (17, 62)])
    def test_values(self, n, expected):
        assert tau_closed_form(n) == expected

    @pytest.mark.parametrize("n, split", [(2, (0, 1)), (3, (1, 1)), (4, (1, 2)), (5, (2, 1)), (8, (2, 4)), (9, (3, 1))])
    def test_power_split(self, n, split):
        assert power_split(n) == split

    @pytest.mark.parametrize("n", [-1, 0, 1])
    def test_domain(self, n):
        with pytest.raises(DomainTooSmall):
            tau_closed_form(n)


class TestRecursion:
    @pytest.mark.parametrize("n, expected", [(15, 42), (16, 44), (13, 38), (10, 32), (33, 126)])
    def test_values(self, n, expected):
        assert tau_recursive(n) == expected

    def test_base_values_pass_through(self):
        assert [tau_recursive(n) for n in range(2, 10)] == [2, 6, 8, 14, 16, 18, 20, 30]

    def test_small_base(self):
        base = {m: tau_bruteforce(m) for m in range(2, 6)}
        assert all(tau_recursive(n, base) == tau_closed_form(n) for n in range(6, 40))

    def test_missing_base(self):
        with pytest.raises(DomainTooSmall):
            tau_recursive(9, {2: 2})

    @pytest.mark.parametrize("n", range(6, 34))
    def test_three_way_agreement(self, n):
        assert tau_bruteforce(n) == tau_recursive(n) == tau_closed_form(n)


class TestReports:
    def test_length_9(self):
        rep = complexity_report(9)
        assert rep.agree and rep.bounds_ok and rep.in_theorem_domain
        assert (rep.even, rep.odd) == (14, 16)
        doc = rep.to_json()
        assert doc["tau"] == {"brute": 30, "recursive": 30, "closed": 30}
        assert set(doc) == {"n", "tau", "even", "odd", "rho_prev", "rho_2n_minus_1", "bounds_ok",
                            "stabilized", "scan_len", "in_theorem_domain"}

    def test_length_2(self):
        rep = complexity_report(2)
        assert rep.tau_bruteforce == rep.tau_closed_form == 2
        assert not rep.in_theorem_domain

    def test_length_5(self):
        rep = complexity_report(5)
        assert rep.tau_bruteforce == rep.tau_closed_form == 14

    def test_csv_row(self):
        assert CSV_HEADER == ["n", "tau_brute", "tau_closed", "even", "odd"]
        assert complexity_report(6).csv_row() == [6, 16, 16, 8, 8]

    def test_domain(self):
        with pytest.raises(DomainTooSmall):
            complexity_report(1)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_sandwich(self, n):
        assert factor_count(n - 1) <= tau_bruteforce(n) <= factor_count(2 * n - 1)

    def test_factor_counts(self):
        # known factor complexity of T
        assert [factor_count(m) for m in range(1, 9)] == [2, 4, 6, 10, 12, 16, 20, 22]


class TestUpperBounds:
    def test_examples(self):
        rep = upper_bound_check(4)
        assert (rep.tau_2n, rep.bound_2n) == (20, 28)
        assert (rep.tau_2n_plus_1, rep.bound_2n_plus_1) == (30, 30)
        rep = upper_bound_check(8)
        assert rep.tau_2n == 44 and rep.bound_2n == 60 and rep.ok

    @pytest.mark.parametrize("n", range(2, 16))
    def test_hold(self, n):
        assert upper_bound_check(n).ok

    def test_domain(self):
        with pytest.raises(DomainTooSmall):
            upper_bound_check(1)


class TestParityAccounting:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_even_windows_count_shorter_length(self, n):
        assert len(perm_set(2 * n + 1).even_members) == len(perm_set(n + 1))

    @pytest.mark.parametrize("r", [3, 4])
    def test_deficit_at_powers_of_two(self, r):
        n = (1 << r) - 1
        assert len(perm_set(n + 2)) - len(perm_set(2 * n + 1).odd_members) == 1 << r


class TestOtherWords:
    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_fibonacci_against_direct_sort(self, n):
        text = "0"
        while len(text) < 6000:
            text = "".join("01" if c == "0" else "0" for c in text)
        direct = {rerank([text[a + j : a + j + 300] for j in range(n)]) for a in range(2000)}
        assert set(enumerate_perms(named_word("fibonacci"), n).members) == direct

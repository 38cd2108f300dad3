"""Enumeration of Perm(n) and the permutation complexity of T."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainTooSmall, NonStabilized
from .perms import Origin, Subpermutation, window_ranks
from .words import WordPrefix, default_depth, stable_factors, thue_morse

DEFAULT_MAX_SCAN = 1 << 20
THEOREM_MIN_N = 6


def max_scan_from_env() -> int:
    value = os.environ.get("PERMUTEX_MAX_SCAN")
    return int(value) if value else DEFAULT_MAX_SCAN


@dataclass
class PermSet:
    n: int
    members: dict[tuple[int, ...], Subpermutation] = field(default_factory=dict)
    even_members: set[tuple[int, ...]] = field(default_factory=set)
    odd_members: set[tuple[int, ...]] = field(default_factory=set)
    scan_len: int = 0
    stabilized: bool = False

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members.values())

    def __contains__(self, p) -> bool:
        return tuple(p) in self.members

    @property
    def even(self) -> list[Subpermutation]:
        return [self.members[r] for r in sorted(self.even_members)]

    @property
    def odd(self) -> list[Subpermutation]:
        return [self.members[r] for r in sorted(self.odd_members)]

    def sorted(self) -> list[Subpermutation]:
        return [self.members[r] for r in sorted(self.members)]

    def _add(self, ranks, start, word_name):
        if ranks not in self.members:
            self.members[ranks] = Subpermutation(ranks, Origin(word_name, start))
        (self.even_members if start % 2 == 0 else self.odd_members).add(ranks)


def _ranks_for(args):
    texts, n, depth = args
    return [window_ranks(t, n, depth) for t in texts]


def _scan(ps: PermSet, w: WordPrefix, lo: int, hi: int, depth: int, jobs: int, seen: dict):
    """Add windows starting in ``[lo, hi)``; ``seen`` caches ranks per window factor."""
    n = ps.n
    span = n - 1 + depth
    text = w.factor(0, hi - 1 + span)
    fresh: dict[str, int] = {}
    starts: list[tuple[int, str]] = []
    for i in range(lo, hi):
        t = text[i : i + span]
        starts.append((i, t))
        if t not in seen and t not in fresh:
            fresh[t] = i
    if fresh:
        todo = list(fresh)
        if jobs > 1 and len(todo) > 4 * jobs:
            chunks = [todo[k::jobs] for k in range(jobs)]
            with ProcessPoolExecutor(jobs) as pool:
                results = pool.map(_ranks_for, [(c, n, depth) for c in chunks])
                for c, res in zip(chunks, results):
                    seen.update(zip(c, res))
        else:
            seen.update(zip(todo, _ranks_for((todo, n, depth))))
    for i, t in starts:
        ps._add(seen[t], i, w.name)


def enumerate_perms(
    w: WordPrefix | None = None,
    n: int = 2,
    initial_scan: int | None = None,
    max_scan: int | None = None,
    max_depth: int | None = None,
    jobs: int = 1,
) -> PermSet:
    """All distinct subpermutations of length ``n`` found by a stabilizing scan.

    Window starts ``0..scan_len-1`` are examined; the scan doubles until a
    doubling contributes no new member.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    w = w if w is not None else thue_morse()
    depth = max_depth if max_depth is not None else default_depth(n)
    cap = max_scan if max_scan is not None else max_scan_from_env()
    scan = initial_scan or 64 * n
    ps = PermSet(n)
    seen: dict = {}
    _scan(ps, w, 0, scan, depth, jobs, seen)
    while True:
        if 2 * scan > cap:
            ps.scan_len = scan
            raise NonStabilized(n, scan)
        before = len(ps.members)
        _scan(ps, w, scan, 2 * scan, depth, jobs, seen)
        scan *= 2
        if len(ps.members) == before:
            break
    ps.scan_len = scan
    ps.stabilized = True
    return ps


@lru_cache(maxsize=None)
def perm_set(n: int, word: str = "thue-morse") -> PermSet:
    """Cached enumeration for a built-in word."""
    from .words import named_word

    return enumerate_perms(named_word(word), n)


def tau_bruteforce(n: int, word: str = "thue-morse") -> int:
    return len(perm_set(n, word))


def power_split(n: int) -> tuple[int, int]:
    """``(a, b)`` with ``n = 2**a + b`` and ``0 < b <= 2**a``."""
    if n < 2:
        raise DomainTooSmall("n = 2^a + b with 0 < b <= 2^a needs n >= 2")
    a = (n - 1).bit_length() - 1
    return a, n - (1 << a)


def tau_closed_form(n: int) -> int:
    a, b = power_split(n)
    return 2 * ((1 << (a + 1)) + b - 2)


def _power_of_two_exponent(m: int) -> int | None:
    if m > 0 and m & (m - 1) == 0:
        return m.bit_length() - 1
    return None


def default_base() -> dict[int, int]:
    return {m: tau_bruteforce(m) for m in range(2, 10)}


def tau_recursive(n: int, base: dict[int, int] | None = None) -> int:
    """Complexity from small values by the doubling recursion.

    ``base`` maps small lengths to known values (defaults to brute force for
    lengths 2..9); any length not in ``base`` and at least 6 is expanded.
    """
    memo = dict(base if base is not None else default_base())

    def tau(m: int) -> int:
        if m in memo:
            return memo[m]
        if m < THEOREM_MIN_N:
            raise DomainTooSmall(f"no base value for length {m}")
        k, odd = divmod(m, 2)
        if odd:
            r = _power_of_two_exponent(m + 1)
            value = tau(k + 1) + tau(k + 2)
            if r is not None and r >= 3:
                value -= 1 << (r - 1)
        else:
            r = _power_of_two_exponent(m)
            if r is not None and r >= 3:
                value = 2 * (tau(k + 1) - (1 << (r - 1)))
            else:
                value = 2 * tau(k + 1)
        memo[m] = value
        return value

    return tau(n)


def factor_count(m: int, w: WordPrefix | None = None) -> int:
    """Factor complexity of ``w`` (T by default) at length ``m``."""
    return len(stable_factors(w if w is not None else thue_morse(), m))


@dataclass
class ComplexityReport:
    n: int
    tau_bruteforce: int
    tau_recursive: int
    tau_closed_form: int
    even: int
    odd: int
    rho_prev: int
    rho_2n_minus_1: int
    stabilized: bool
    scan_len: int

    @property
    def bounds_ok(self) -> bool:
        return self.rho_prev <= self.tau_bruteforce <= self.rho_2n_minus_1

    @property
    def in_theorem_domain(self) -> bool:
        return self.n >= THEOREM_MIN_N

    @property
    def agree(self) -> bool:
        return self.tau_bruteforce == self.tau_recursive == self.tau_closed_form

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tau": {
                "brute": self.tau_bruteforce,
                "recursive": self.tau_recursive,
                "closed": self.tau_closed_form,
            },
            "even": self.even,
            "odd": self.odd,
            "rho_prev": self.rho_prev,
            "rho_2n_minus_1": self.rho_2n_minus_1,
            "bounds_ok": self.bounds_ok,
            "stabilized": self.stabilized,
            "scan_len": self.scan_len,
            "in_theorem_domain": self.in_theorem_domain,
        }

    def csv_row(self) -> list:
        return [self.n, self.tau_bruteforce, self.tau_closed_form, self.even, self.odd]


CSV_HEADER = ["n", "tau_brute", "tau_closed", "even", "odd"]


def complexity_report(n: int, perms: PermSet | None = None) -> ComplexityReport:
    if n < 2:
        raise DomainTooSmall("complexity report needs n >= 2")
    ps = perms if perms is not None else perm_set(n)
    return ComplexityReport(
        n=n,
        tau_bruteforce=len(ps),
        tau_recursive=tau_recursive(n),
        tau_closed_form=tau_closed_form(n),
        even=len(ps.even_members),
        odd=len(ps.odd_members),
        rho_prev=factor_count(n - 1),
        rho_2n_minus_1=factor_count(2 * n - 1),
        stabilized=ps.stabilized,
        scan_len=ps.scan_len,
    )


@dataclass
class UpperBoundReport:
    n: int
    tau_2n: int
    tau_2n_plus_1: int
    bound_2n: int
    bound_2n_plus_1: int

    @property
    def ok(self) -> bool:
        return self.tau_2n <= self.bound_2n and self.tau_2n_plus_1 <= self.bound_2n_plus_1

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tau_2n": self.tau_2n,
            "bound_2n": self.bound_2n,
            "tau_2n_plus_1": self.tau_2n_plus_1,
            "bound_2n_plus_1": self.bound_2n_plus_1,
            "ok": self.ok,
        }


def upper_bound_check(n: int) -> UpperBoundReport:
    """Brute-force ``tau(2n) <= 2 tau(n+1)`` and ``tau(2n+1) <= tau(n+1) + tau(n+2)``."""
    if n < 2:
        raise DomainTooSmall("upper bounds are stated for n >= 2")
    t = tau_bruteforce
    return UpperBoundReport(
        n=n,
        tau_2n=t(2 * n),
        tau_2n_plus_1=t(2 * n + 1),
        bound_2n=2 * t(n + 1),
        bound_2n_plus_1=t(n + 1) + t(n + 2),
    )

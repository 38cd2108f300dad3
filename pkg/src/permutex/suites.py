"""Named verification suites run by ``permutex verify``."""

from __future__ import annotations

from .complexity import THEOREM_MIN_N, complexity_report, perm_set
from .errors import CensusViolation
from .perms import complement_perm
from .tm_action import (
    VerificationReport,
    verify_forward_image,
    verify_interleaving,
    verify_order_preservation,
)
from .typek import count_doubled_forms, same_form_census

ORDER_SCAN = 100
INTERLEAVE_SCAN = 60
FORWARD_MAX_A = 200


def same_form(max_n: int) -> VerificationReport:
    report = VerificationReport("same-form")
    for n in range(2, max_n + 1):
        report.scanned += 1
        try:
            same_form_census(n, perm_set(n))
        except CensusViolation as exc:
            report.violations.append({"n": n, "form": exc.form, "reason": str(exc)})
    return report


def type1_counts(max_n: int) -> VerificationReport:
    """Forms carried by two subpermutations, for factor lengths ``2**r`` and ``2**r + 1``."""
    report = VerificationReport("type1-counts")
    r = 2
    while (1 << r) <= max_n:
        for m in ((1 << r), (1 << r) + 1):
            if m > max_n:
                continue
            got = count_doubled_forms(m + 1, perm_set(m + 1))
            report.details[m] = got
            report.scanned += 1
            if got != 1 << r:
                report.violations.append({"factor_length": m, "expected": 1 << r, "got": got})
        r += 1
    return report


def complexity_agreement(max_n: int) -> VerificationReport:
    report = VerificationReport("complexity-agreement")
    for n in range(2, max_n + 1):
        rep = complexity_report(n)
        report.scanned += 1
        bad = rep.tau_bruteforce != rep.tau_closed_form
        if n >= THEOREM_MIN_N:
            bad = bad or rep.tau_recursive != rep.tau_bruteforce
        if bad or not rep.bounds_ok:
            report.violations.append(rep.to_json())
    return report


def complement_closure(max_n: int) -> VerificationReport:
    report = VerificationReport("complement-closure")
    for n in range(1, max_n + 1):
        ps = perm_set(n)
        for p in ps:
            report.scanned += 1
            if complement_perm(p) not in ps:
                report.violations.append({"n": n, "perm": str(p)})
    return report


SUITES = {
    "order-preservation": lambda max_n: verify_order_preservation(ORDER_SCAN),
    "interleaving": lambda max_n: verify_interleaving(INTERLEAVE_SCAN),
    "forward-image": lambda max_n: verify_forward_image(FORWARD_MAX_A, max_n),
    "same-form": same_form,
    "type1-counts": type1_counts,
    "complexity-agreement": complexity_agreement,
    "complement-closure": complement_closure,
}


def run_suite(name: str, max_n: int) -> list[VerificationReport]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[s](max_n) for s in names]

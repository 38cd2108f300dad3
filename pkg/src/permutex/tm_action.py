"""Action of the Thue-Morse morphism on subpermutations of pi_T.

``phi`` sends the subpermutation of a window ``[a, a+n]`` of T to the one of
``[2a, 2a+2n]``; it is computed from the ranks and the form alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InconsistentForm, UnsupportedMorphism
from .perms import (
    Origin,
    Subpermutation,
    form_of,
    restrict_left,
    restrict_middle,
    restrict_right,
    subpermutation,
)
from .words import THUE_MORSE, Morphism, iterate_fixed_point, shift_compare, thue_morse


@dataclass
class VerificationReport:
    lemma: str
    scanned: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = {"lemma": self.lemma, "scanned": self.scanned, "violations": list(self.violations)}
        if self.details:
            out["details"] = {str(k): v for k, v in self.details.items()}
        return out


def forward_image(p: Subpermutation, u: str | None = None) -> Subpermutation:
    """Subpermutation of length ``2n+1`` induced by ``p`` of length ``n+1`` with form ``u``."""
    actual = form_of(p)
    if u is None:
        u = actual
    elif u != actual:
        raise InconsistentForm(f"{p} has form {actual}, not {u}")
    n = len(u)
    ones = u.count("1")
    last = p[n]
    out = [0] * (2 * n + 1)
    for i in range(n + 1):
        out[2 * i] = p[i] + ones
    for i in range(n):
        pi = p[i]
        if pi < p[i + 1]:
            shift = n + 1 if pi < last else n
        else:
            shift = -n if pi < last else -(n + 1)
        out[2 * i + 1] = pi + ones + shift
    origin = Origin(p.origin.word, 2 * p.origin.start) if p.origin else None
    return Subpermutation(tuple(out), origin)


def phi(p: Subpermutation) -> Subpermutation:
    return forward_image(p)


def phi_L(p: Subpermutation) -> Subpermutation:
    return restrict_left(phi(p))


def phi_R(p: Subpermutation) -> Subpermutation:
    return restrict_right(phi(p))


def phi_M(p: Subpermutation) -> Subpermutation:
    return restrict_middle(phi(p))


def verify_order_preservation(scan: int, depth: int = 256, morphism: Morphism = THUE_MORSE) -> VerificationReport:
    """Check ``w[a] < w[b]`` iff ``w[2a] < w[2b]`` for all ``a != b <= scan``.

    ``w`` is the fixed point of ``morphism`` from 0, which must be uniform of
    length 2 for the index doubling to make sense.
    """
    if not morphism.is_uniform(2):
        raise UnsupportedMorphism(f"{morphism} is not uniform of length 2")
    w = thue_morse() if morphism == THUE_MORSE else iterate_fixed_point(morphism, "0")
    report = VerificationReport("order-preservation")
    for a, b in combinations(range(scan + 1), 2):
        before = shift_compare(w, a, b, depth)
        after = shift_compare(w, 2 * a, 2 * b, depth)
        report.scanned += 1
        if before != after:
            report.violations.append({"a": a, "b": b, "before": before.name, "after": after.name})
    return report


def verify_interleaving(scan: int, depth: int | None = None) -> VerificationReport:
    """Check the four-way interleaving of images of 0- and 1-shifts.

    For ``i, j <= scan`` with ``T_i = 0`` and ``T_j = 1`` the ranks at
    positions ``2j+1, 2i, 2j, 2i+1`` of ``pi_T[0, 2*scan+1]`` must increase.
    """
    w = thue_morse()
    report = VerificationReport("interleaving")
    zeros = [i for i in range(scan + 1) if w[i] == "0"]
    ones = [j for j in range(scan + 1) if w[j] == "1"]
    if not zeros or not ones:
        return report
    ranks = subpermutation(w, 0, 2 * scan + 2, depth).ranks
    for i in zeros:
        for j in ones:
            chain = [ranks[2 * j + 1], ranks[2 * i], ranks[2 * j], ranks[2 * i + 1]]
            report.scanned += 1
            if not chain[0] < chain[1] < chain[2] < chain[3]:
                report.violations.append({"i": i, "j": j, "ranks": chain})
    return report


def verify_forward_image(max_a: int = 200, max_n: int = 16) -> VerificationReport:
    """Closed-form image against direct shift comparison on every window."""
    w = thue_morse()
    report = VerificationReport("forward-image")
    for n in range(1, max_n + 1):
        for a in range(max_a + 1):
            p = subpermutation(w, a, n + 1)
            expected = subpermutation(w, 2 * a, 2 * n + 1)
            got = forward_image(p)
            report.scanned += 1
            if got != expected:
                report.violations.append(
                    {"a": a, "n": n, "got": str(got), "expected": str(expected)}
                )
    return report


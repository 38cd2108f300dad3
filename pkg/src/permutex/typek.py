"""Type-k subpermutations and complementary pairs.

A subpermutation is of type ``k`` when its first ``k`` and last ``k`` ranks
differ pairwise by one common ``eps`` in ``{-1, +1}``. Two such
subpermutations sharing the middle block with swapped outer blocks form a
complementary pair; for T these are exactly the distinct pairs with equal form.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .errors import CensusViolation, DomainTooSmall
from .perms import Subpermutation, form_of
from .tm_action import VerificationReport, phi, phi_L, phi_M, phi_R


def detect_type_k(p: Subpermutation, k: int) -> int | None:
    """``eps`` if ``p[i] - p[len-k+i] == eps`` for every ``i < k``, else None."""
    if k < 1 or 2 * k > len(p):
        raise ValueError(f"type {k} needs 1 <= k and 2k <= {len(p)}")
    tail = len(p) - k
    eps = p[0] - p[tail]
    if eps not in (-1, 1):
        return None
    if all(p[i] - p[tail + i] == eps for i in range(1, k)):
        return eps
    return None


class PairKind(enum.Enum):
    IDENTICAL = "identical"
    COMPLEMENTARY_PAIR = "complementary_pair"
    UNRELATED_SAME_FORM = "unrelated_same_form"
    DIFFERENT_FORM = "different_form"


@dataclass(frozen=True)
class PairClassification:
    kind: PairKind
    k: int | None = None
    epsilon: int | None = None

    @property
    def is_pair(self) -> bool:
        return self.kind is PairKind.COMPLEMENTARY_PAIR

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.is_pair:
            out.update(k=self.k, epsilon=self.epsilon)
        return out

    def __str__(self):
        if self.is_pair:
            return f"complementary pair of type {self.k} (eps={self.epsilon:+d})"
        return self.kind.value.replace("_", " ")


IDENTICAL = PairClassification(PairKind.IDENTICAL)


def classify_pair(p: Subpermutation, q: Subpermutation) -> PairClassification:
    """Relate two subpermutations of equal length.

    All feasible ``k`` are tried; p's outer blocks must reappear swapped in q
    with an identical middle block. At most one ``k`` can match.
    """
    if len(p) != len(q):
        raise ValueError("classify_pair needs equal lengths")
    if p == q:
        return IDENTICAL
    a, b = p.ranks, q.ranks
    n = len(a)
    for k in range(1, n // 2 + 1):
        if a[:k] == b[n - k :] and a[n - k :] == b[:k] and a[k : n - k] == b[k : n - k]:
            eps = detect_type_k(p, k)
            if eps is not None:
                return PairClassification(PairKind.COMPLEMENTARY_PAIR, k, eps)
    if form_of(p) == form_of(q):
        return PairClassification(PairKind.UNRELATED_SAME_FORM)
    return PairClassification(PairKind.DIFFERENT_FORM)


def pair_type_rule(m: int) -> int | None:
    """Type of the same-form pairs of length ``m + 1``, or None if there are none.

    Writes ``m = 2**r + c`` with ``0 <= c < 2**r``; pairs have type ``c + 1``
    while ``c < 2**(r-1) + 1``. Applied for every ``m >= 1``.
    """
    if m < 1:
        raise DomainTooSmall("factor length must be positive")
    r = m.bit_length() - 1
    c = m - (1 << r)
    # c < 2^(r-1) + 1, kept integral for r = 0
    if 2 * c < (1 << r) + 2:
        return c + 1
    return None


def predicted_pair_type(m: int) -> int | None:
    """Pair type for factor length ``m > 4``; raises DomainTooSmall below."""
    if m <= 4:
        raise DomainTooSmall(f"pair type prediction is stated for factor length > 4, got {m}")
    return pair_type_rule(m)


def pair_rule_case(m: int) -> str:
    """Diagnostic label for the factor length ``m``."""
    if m <= 4:
        return "base (outside rule domain)"
    r = m.bit_length() - 1
    c = m - (1 << r)
    if pair_type_rule(m) is not None:
        return f"a (r={r}, c={c})"
    label = {(1 << r) - 2: "b.5", (1 << r) - 1: "b.6"}.get(c, "b")
    return f"{label} (r={r}, c={c})"


@dataclass
class FormGroup:
    form: str
    members: list[Subpermutation]
    classification: PairClassification | None = None

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "members": [str(p) for p in self.members],
            "classification": self.classification.to_json() if self.classification else None,
        }


@dataclass
class Census:
    n: int
    groups: list[FormGroup] = field(default_factory=list)
    predicted_type: int | None = None
    case: str = ""

    @property
    def doubled(self) -> list[FormGroup]:
        return [g for g in self.groups if len(g.members) == 2]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "predicted_type": self.predicted_type,
            "case": self.case,
            "groups": [g.to_json() for g in self.groups],
        }


def group_by_form(perms: Iterable[Subpermutation]) -> dict[str, list[Subpermutation]]:
    groups: dict[str, list[Subpermutation]] = defaultdict(list)
    for p in perms:
        groups[form_of(p)].append(p)
    # pair order: larger first rank first
    return {f: sorted(ms, key=lambda p: p.ranks, reverse=True) for f, ms in sorted(groups.items())}


def same_form_census(n: int, perms: Iterable[Subpermutation]) -> Census:
    """Group Perm(n) by form and check every group against the pair rule.

    Raises CensusViolation on a group of three or more, a doubled group that
    is not a complementary pair of the predicted type, or any doubled group
    where no pairs are predicted.
    """
    predicted = pair_type_rule(n - 1) if n >= 2 else None
    census = Census(n, predicted_type=predicted, case=pair_rule_case(n - 1) if n >= 2 else "trivial")
    for form, members in group_by_form(perms).items():
        if any(len(p) != n for p in members):
            raise ValueError(f"census of length {n} got a member of another length")
        group = FormGroup(form, members)
        if len(members) > 2:
            raise CensusViolation(form, f"{len(members)} subpermutations share this form")
        if len(members) == 2:
            cls = classify_pair(*members)
            group.classification = cls
            if not cls.is_pair:
                raise CensusViolation(form, f"doubled group is {cls}")
            if predicted is None:
                raise CensusViolation(form, "doubled group where no pairs are predicted")
            if cls.k != predicted:
                raise CensusViolation(form, f"pair of type {cls.k}, predicted {predicted}")
        census.groups.append(group)
    return census


def count_doubled_forms(n: int, perms: Iterable[Subpermutation]) -> int:
    """Number of forms carried by two distinct members of ``perms``."""
    return sum(1 for ms in group_by_form(perms).values() if len(ms) >= 2)


def complementary_pairs(perms: Iterable[Subpermutation]) -> list[tuple[Subpermutation, Subpermutation, PairClassification]]:
    """All same-form pairs in ``perms`` that are complementary pairs."""
    out = []
    for ms in group_by_form(perms).values():
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                cls = classify_pair(ms[i], ms[j])
                if cls.is_pair:
                    out.append((ms[i], ms[j], cls))
    return out


def verify_image_of_type_k(pairs: Iterable[tuple[Subpermutation, Subpermutation]], k: int) -> VerificationReport:
    """Images of type-k pairs under phi, phi_L, phi_R, phi_M.

    Expected types are ``2k-1``, ``2k-2``, ``2k-2`` and ``2k-3``; a
    non-positive type means the two images coincide.
    """
    report = VerificationReport(f"image-of-type-{k}")
    maps = [
        ("phi", phi, 2 * k - 1),
        ("phi_L", phi_L, 2 * k - 2),
        ("phi_R", phi_R, 2 * k - 2),
        ("phi_M", phi_M, 2 * k - 3),
    ]
    for p, q in pairs:
        src = classify_pair(p, q)
        report.scanned += 1
        if not (src.is_pair and src.k == k):
            report.violations.append({"p": str(p), "q": str(q), "reason": f"input is {src}"})
            continue
        for name, fn, want in maps:
            got = classify_pair(fn(p), fn(q))
            ok = got == IDENTICAL if want <= 0 else (got.is_pair and got.k == want)
            if not ok:
                report.violations.append(
                    {"p": str(p), "q": str(q), "map": name, "expected_type": want, "got": str(got)}
                )
    return report

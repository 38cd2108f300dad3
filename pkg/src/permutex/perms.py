"""Finite subpermutations of the infinite permutation of a binary word."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import UnresolvedComparison
from .words import WordPrefix, default_depth


class Origin(NamedTuple):
    word: str
    start: int


@dataclass(frozen=True)
class Subpermutation:
    """A permutation of ``{1..n}`` stored as its rank sequence.

    Equality and hashing look at the ranks only; ``origin`` records one
    window ``[start, start+n-1]`` of ``word`` that realizes it.
    """

    ranks: tuple[int, ...]
    origin: Origin | None = field(default=None, compare=False)

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if sorted(ranks) != list(range(1, len(ranks) + 1)):
            raise ValueError(f"{list(ranks)} is not a permutation of 1..{len(ranks)}")
        object.__setattr__(self, "ranks", ranks)

    def __len__(self):
        return len(self.ranks)

    def __getitem__(self, i):
        return self.ranks[i]

    def __iter__(self):
        return iter(self.ranks)

    def __str__(self):
        return "[" + " ".join(map(str, self.ranks)) + "]"

    def __repr__(self):
        where = f", origin={tuple(self.origin)}" if self.origin else ""
        return f"Subpermutation({self}{where})"

    @classmethod
    def parse(cls, text: str) -> "Subpermutation":
        """Parse ``"[2 3 5 4 1]"``."""
        m = re.fullmatch(r"\s*\[([\d\s]*)\]\s*", text)
        if not m:
            raise ValueError(f"bad permutation literal {text!r}")
        return cls(tuple(int(x) for x in m.group(1).split()))

    def to_json(self) -> dict:
        out: dict = {"ranks": list(self.ranks)}
        if self.origin is not None:
            out["origin"] = {"word": self.origin.word, "start": self.origin.start}
        return out

    @classmethod
    def from_json(cls, obj) -> "Subpermutation":
        if isinstance(obj, list):
            return cls(tuple(obj))
        origin = obj.get("origin")
        return cls(tuple(obj["ranks"]), Origin(origin["word"], origin["start"]) if origin else None)


def perm(*ranks: int | Sequence[int]) -> Subpermutation:
    """Shorthand: ``perm(2, 3, 1)``, ``perm([2, 3, 1])`` or ``perm("[2 3 1]")``."""
    if len(ranks) == 1 and isinstance(ranks[0], str):
        return Subpermutation.parse(ranks[0])
    if len(ranks) == 1 and not isinstance(ranks[0], int):
        return Subpermutation(tuple(ranks[0]))
    return Subpermutation(tuple(ranks))


def ranks_from_keys(keys: Sequence[str]) -> tuple[int, ...]:
    """1-based ranks of pairwise distinct sortable keys."""
    order = sorted(range(len(keys)), key=keys.__getitem__)
    ranks = [0] * len(keys)
    for r, i in enumerate(order, 1):
        ranks[i] = r
    return tuple(ranks)


def window_ranks(text: str, n: int, depth: int) -> tuple[int, ...]:
    """Ranks of the shifts at offsets ``0..n-1`` of ``text``.

    Every shift is truncated to ``depth`` letters, so ``text`` must hold at
    least ``n - 1 + depth`` letters for the ranks to be exact. Two truncated
    shifts that still coincide mean the budget was too small.
    """
    keys = [text[i : i + depth] for i in range(n)]
    if len(set(keys)) < n:
        dup = sorted(range(n), key=keys.__getitem__)
        for i, j in zip(dup, dup[1:]):
            if keys[i] == keys[j]:
                raise UnresolvedComparison(i, j, len(keys[i]))
    return ranks_from_keys(keys)


def subpermutation(w: WordPrefix, a: int, n: int, max_depth: int | None = None) -> Subpermutation:
    """The subpermutation ``pi_w[a, a+n-1]``."""
    if n < 1:
        raise ValueError("subpermutation length must be at least 1")
    depth = max_depth if max_depth is not None else default_depth(n)
    text = w.factor(a, n - 1 + depth)
    if len(text) < n - 1 + depth:
        # finite literal: compare what is there, unresolved ties still raise
        depth = len(text) - n + 1
        if depth < 1:
            raise UnresolvedComparison(a, a + n - 1, 0)
    try:
        ranks = window_ranks(text, n, depth)
    except UnresolvedComparison as exc:
        raise UnresolvedComparison(a + exc.a, a + exc.b, exc.depth) from None
    return Subpermutation(ranks, Origin(w.name, a))


def form_of(p: Subpermutation | Sequence[int]) -> str:
    """Ascent/descent word: bit ``i`` is 0 iff ``p[i] < p[i+1]``."""
    if len(p) < 1:
        raise ValueError("form of an empty permutation")
    return "".join("0" if x < y else "1" for x, y in zip(p, list(p)[1:]))


def _shifted(p: Subpermutation, start: int | None) -> Origin | None:
    if p.origin is None or start is None:
        return None
    return Origin(p.origin.word, p.origin.start + start)


def restrict_left(p: Subpermutation) -> Subpermutation:
    """Drop the last entry and re-rank."""
    if len(p) < 2:
        raise ValueError("left restriction needs length >= 2")
    last = p[-1]
    ranks = tuple(x - 1 if x > last else x for x in p.ranks[:-1])
    return Subpermutation(ranks, _shifted(p, 0))


def restrict_right(p: Subpermutation) -> Subpermutation:
    """Drop the first entry and re-rank."""
    if len(p) < 2:
        raise ValueError("right restriction needs length >= 2")
    first = p[0]
    ranks = tuple(x - 1 if x > first else x for x in p.ranks[1:])
    return Subpermutation(ranks, _shifted(p, 1))


def restrict_middle(p: Subpermutation) -> Subpermutation:
    if len(p) < 3:
        raise ValueError("middle restriction needs length >= 3")
    return restrict_right(restrict_left(p))


def complement_perm(p: Subpermutation) -> Subpermutation:
    n = len(p)
    return Subpermutation(tuple(n - x + 1 for x in p.ranks))

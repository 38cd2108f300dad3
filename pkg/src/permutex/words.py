"""Binary morphisms, morphic word prefixes and shift comparison.

Words are plain ``str`` objects over ``"01"`` with the order ``0 < 1``, which
makes slicing, hashing and lexicographic comparison native operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import BadLiteral, NotProlongable, UnresolvedComparison

ALPHABET = "01"


def _check_binary(word: str, what: str) -> None:
    if not word or any(c not in ALPHABET for c in word):
        raise BadLiteral(f"{what} must be a non-empty word over 0/1, got {word!r}")


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism on the binary alphabet."""

    image0: str
    image1: str

    def __post_init__(self):
        _check_binary(self.image0, "image of 0")
        _check_binary(self.image1, "image of 1")

    def image(self, letter: str) -> str:
        return self.image0 if letter == "0" else self.image1

    def __call__(self, word: str) -> str:
        return word.translate(str.maketrans({"0": self.image0, "1": self.image1}))

    def prolongable_on(self, letter: str) -> bool:
        img = self.image(letter)
        return len(img) >= 2 and img[0] == letter

    def is_uniform(self, length: int | None = None) -> bool:
        if len(self.image0) != len(self.image1):
            return False
        return length is None or len(self.image0) == length

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse the literal format ``"0>01,1>10"``."""
        images = {}
        for part in text.replace(" ", "").split(","):
            letter, sep, img = part.partition(">")
            if not sep or letter not in ALPHABET or letter in images:
                raise BadLiteral(f"bad morphism literal {text!r}")
            images[letter] = img
        if set(images) != set(ALPHABET):
            raise BadLiteral(f"morphism literal {text!r} must define both letters")
        return cls(images["0"], images["1"])

    def __str__(self):
        return f"0>{self.image0},1>{self.image1}"


THUE_MORSE = Morphism("01", "10")
FIBONACCI = Morphism("01", "0")
DOUBLING = Morphism("00", "11")
IDENTITY = Morphism("0", "1")


class Order(enum.Enum):
    LESS = -1
    GREATER = 1


@dataclass(frozen=True)
class FixedPoint:
    morphism: Morphism
    seed: str


@dataclass(frozen=True)
class MorphicImage:
    morphism: Morphism
    base: "WordPrefix"


@dataclass(frozen=True)
class Literal:
    text: str


Source = Union[FixedPoint, MorphicImage, Literal]


class WordPrefix:
    """A materialized prefix of a (usually infinite) binary word.

    The prefix grows on demand by at least doubling; letters already produced
    never change. Literal sources are finite and stop growing at their end.
    """

    def __init__(self, source: Source, name: str | None = None):
        self.source = source
        self.name = name or _describe(source)
        if isinstance(source, Literal):
            _check_binary(source.text, "literal word")
            self._letters = source.text
        elif isinstance(source, FixedPoint):
            self._letters = source.seed
        else:
            self._letters = ""

    @property
    def letters(self) -> str:
        return self._letters

    @property
    def is_finite(self) -> bool:
        return isinstance(self.source, Literal)

    def __len__(self):
        return len(self._letters)

    def __repr__(self):
        return f"WordPrefix({self.name!r}, len={len(self)})"

    def extend(self, n: int) -> "WordPrefix":
        """Make at least ``n`` letters available (fewer only for literals)."""
        if n <= len(self._letters) or self.is_finite:
            return self
        target = max(n, 2 * len(self._letters))
        src = self.source
        if isinstance(src, FixedPoint):
            letters = self._letters
            while len(letters) < target:
                letters = src.morphism(letters)
        else:
            src.base.extend(target)
            letters = src.morphism(src.base.letters[:target])
        self._letters = letters
        return self

    def factor(self, start: int, length: int) -> str:
        """Return ``w[start, start+length-1]``, growing the prefix as needed."""
        self.extend(start + length)
        return self._letters[start : start + length]

    def __getitem__(self, index: int) -> str:
        self.extend(index + 1)
        return self._letters[index]

    def __str__(self):
        return self._letters


def _describe(source: Source) -> str:
    if isinstance(source, FixedPoint):
        return f"fix({source.morphism};{source.seed})"
    if isinstance(source, MorphicImage):
        return f"{source.morphism}({source.base.name})"
    return source.text


def iterate_fixed_point(m: Morphism, seed: str, min_len: int = 1, name: str | None = None) -> WordPrefix:
    """Prefix of length >= ``min_len`` of the fixed point of ``m`` starting with ``seed``."""
    seed = str(seed)
    if seed not in ALPHABET:
        raise BadLiteral(f"seed must be 0 or 1, got {seed!r}")
    if not m.prolongable_on(seed):
        raise NotProlongable(f"{m} is not prolongable on {seed}")
    return WordPrefix(FixedPoint(m, seed), name).extend(min_len)


def apply_morphism(m: Morphism, w: WordPrefix | str) -> WordPrefix:
    """Image of ``w`` under ``m``.

    A literal (or ``str``) argument gives a literal result; an infinite prefix
    gives a lazily extended morphic image.
    """
    if isinstance(w, str):
        return WordPrefix(Literal(m(w)))
    if w.is_finite:
        return WordPrefix(Literal(m(w.letters)))
    return WordPrefix(MorphicImage(m, w))


def factors(w: WordPrefix | str, n: int, scan_len: int) -> set[str]:
    """All distinct windows of length ``n`` inside the first ``scan_len`` letters."""
    if scan_len < n:
        raise ValueError("scan_len must be at least n")
    if isinstance(w, WordPrefix):
        text = w.factor(0, scan_len)
    else:
        text = w[:scan_len]
    return {text[i : i + n] for i in range(len(text) - n + 1)}


def stable_factors(w: WordPrefix, n: int, initial_scan: int | None = None, max_scan: int = 1 << 22) -> set[str]:
    """Factors of length ``n``, doubling the scan until a doubling adds nothing."""
    scan = max(initial_scan or 64 * n, n)
    found = factors(w, n, scan)
    while True:
        if 2 * scan > max_scan:
            return found
        more = factors(w, n, 2 * scan)
        if more == found:
            return found
        found, scan = more, 2 * scan


def is_overlap_free(u: str) -> bool:
    """True iff ``u`` has no factor of length ``2p+1`` with period ``p``."""
    n = len(u)
    for p in range(1, (n - 1) // 2 + 1):
        for i in range(n - 2 * p):
            if u[i : i + p + 1] == u[i + p : i + 2 * p + 1]:
                return False
    return True


def default_depth(span: int) -> int:
    """Comparison budget for positions at most ``span`` apart.

    Overlap-free words resolve within ``span + 1`` letters; the default leaves
    a generous margin for other morphic words.
    """
    return 4 * span + 4


def shift_compare(w: WordPrefix, a: int, b: int, max_depth: int | None = None) -> Order:
    """Lexicographic order of the shifts ``w[a]`` and ``w[b]``."""
    if a == b:
        raise ValueError("shift_compare needs distinct positions")
    if max_depth is None:
        max_depth = default_depth(abs(a - b))
    depth = min(64, max_depth)
    while True:
        x = w.factor(a, depth)
        y = w.factor(b, depth)
        for cx, cy in zip(x, y):
            if cx != cy:
                return Order.LESS if cx < cy else Order.GREATER
        if depth >= max_depth or len(x) < depth or len(y) < depth:
            raise UnresolvedComparison(a, b, min(len(x), len(y)))
        depth = min(2 * depth, max_depth)


_NAMED = {
    "thue-morse": lambda: iterate_fixed_point(THUE_MORSE, "0", 64, name="thue-morse"),
    "fibonacci": lambda: iterate_fixed_point(FIBONACCI, "0", 64, name="fibonacci"),
    "doubled-thue-morse": lambda: WordPrefix(
        MorphicImage(DOUBLING, thue_morse()), name="doubled-thue-morse"
    ),
}
_CACHE: dict[str, WordPrefix] = {}


def named_word(name: str) -> WordPrefix:
    """Shared prefix for one of the built-in words."""
    if name not in _NAMED:
        raise KeyError(f"unknown word {name!r}; choose from {sorted(_NAMED)}")
    if name not in _CACHE:
        _CACHE[name] = _NAMED[name]()
    return _CACHE[name]


def thue_morse() -> WordPrefix:
    return named_word("thue-morse")


def resolve_word(name: str, seed: str = "0") -> WordPrefix:
    """A built-in word name, or a morphism literal iterated on ``seed``."""
    if name in _NAMED:
        return named_word(name)
    return iterate_fixed_point(Morphism.parse(name), seed, name=name)


WORD_NAMES = tuple(_NAMED)

"""Ternary words over {1,2,3} and Kurosaki's map.

Words are plain ``str`` values over the characters ``'1'``, ``'2'``, ``'3'``:
immutable, hashable and cheap to slice. Symbols are the ints 1, 2, 3.
All positions are 0-based.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache

ALPHABET = "123"
DEFAULT_CAP = 12
CAP_ENV = "POWERFREE_CAP"

_WORD_RE = re.compile(r"[123]*")


class WordError(ValueError):
    """Raised for malformed words or misuse of word operations."""


class ResourceLimitError(ValueError):
    """Raised when a generation level exceeds the configured cap."""


def parse_word(text: str) -> str:
    """Validate ``text`` as a ternary word and return it unchanged."""
    if not _WORD_RE.fullmatch(text):
        bad = next(ch for ch in text if ch not in ALPHABET)
        raise WordError(f"invalid symbol {bad!r}; words use only 1, 2, 3")
    return text


def format_spaced(word: str) -> str:
    """Group a word into triples separated by single spaces (``213 123 132``)."""
    return " ".join(word[i:i + 3] for i in range(0, len(word), 3))


@dataclass(frozen=True)
class Permutation3:
    """A bijection of {1,2,3}, stored as the images of 1, 2, 3."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1,2,3: {self.images}")

    def __call__(self, symbol: int) -> int:
        return self.images[symbol - 1]

    def compose(self, other: Permutation3) -> Permutation3:
        """Return ``self ∘ other`` (apply ``other`` first)."""
        return Permutation3(tuple(self(other(x)) for x in (1, 2, 3)))

    __mul__ = compose

    def inverse(self) -> Permutation3:
        inv = [0, 0, 0]
        for x, y in zip((1, 2, 3), self.images):
            inv[y - 1] = x
        return Permutation3(tuple(inv))

    def translation(self) -> dict[int, int]:
        return {ord(str(x)): str(self(x)) for x in (1, 2, 3)}

    @property
    def name(self) -> str:
        return _NAMES.get(self.images, "".join(map(str, self.images)))

    def __repr__(self):
        return f"Permutation3({self.name})"


IDENTITY = Permutation3((1, 2, 3))
SIGMA = Permutation3((2, 1, 3))
RHO = Permutation3((1, 3, 2))

_NAMES = {IDENTITY.images: "id", SIGMA.images: "sigma", RHO.images: "rho"}

_SIGMA_TABLE = str.maketrans("12", "21")
_RHO_TABLE = str.maketrans("23", "32")


def apply_permutation(perm: Permutation3, word: str) -> str:
    """Apply ``perm`` letterwise to ``word``."""
    if perm == SIGMA:
        return word.translate(_SIGMA_TABLE)
    if perm == RHO:
        return word.translate(_RHO_TABLE)
    return word.translate(perm.translation())


def phi(word: str) -> str:
    """Kurosaki's map: ``sigma(w) + w + rho(w)``."""
    return word.translate(_SIGMA_TABLE) + word + word.translate(_RHO_TABLE)


def generation_cap() -> int:
    """Largest level ``generate`` accepts; ``POWERFREE_CAP`` overrides the default."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ResourceLimitError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ResourceLimitError(f"{CAP_ENV} must be non-negative, got {cap}")
    return cap


def check_level(n: int, cap: int | None = None) -> None:
    if cap is None:
        cap = generation_cap()
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    if n > cap:
        raise ResourceLimitError(
            f"level {n} needs 3**{n} = {3 ** n} symbols; cap is level {cap}")


@lru_cache(maxsize=None)
def _iterate(n: int) -> str:
    if n == 0:
        return "2"
    return phi(_iterate(n - 1))


def generate(n: int, cap: int | None = None) -> str:
    """Return phi^n(2), the word of length 3**n.

    ``generate(0)`` is the seed ``"2"``. Raises ResourceLimitError above the cap.
    """
    check_level(n, cap)
    return _iterate(n)


def half_width(n: int) -> int:
    return (3 ** n - 1) // 2


def symbol_at(n: int, i: int, cap: int | None = None) -> int:
    """Symbol of phi^n(2) at centered index ``i`` (0 is the middle symbol)."""
    h = half_width(n)
    if abs(i) > h:
        raise IndexError(f"centered index {i} outside [-{h}, {h}] at level {n}")
    return int(generate(n, cap)[i + h])


def _require_triples(word: str) -> None:
    if len(word) % 3:
        raise WordError(f"word length {len(word)} is not divisible by 3")


def extract_middles(word: str) -> str:
    """Keep the middle symbol of every aligned triple."""
    _require_triples(word)
    return word[1::3]


def triples(word: str) -> list[str]:
    """Split a word into its consecutive non-overlapping 3-blocks."""
    _require_triples(word)
    return [word[i:i + 3] for i in range(0, len(word), 3)]


def is_permutation_triple(block: str) -> bool:
    return len(block) == 3 and set(block) == {"1", "2", "3"}

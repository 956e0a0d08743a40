"""Periods, exponents and fractional-power detection for ternary words.

Every verdict is decided with exact integer arithmetic: a factor of length
``L`` and least period ``p`` has exponent ``L/p``, and comparisons against a
threshold ``num/den`` are done by cross-multiplication.

Two engines decide freeness:

* ``"oracle"`` enumerates every factor and computes its least period straight
  from the definition. Slow, obviously correct, for cross-checking.
* ``"optimized"`` runs one failure-function (border array) pass per start
  position, which yields the least period of every prefix of that suffix.
  O(n^2) overall, compiled with numba.

Both report the same witness: the violating factor with the smallest start,
then the smallest period, then the shortest length.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numba
import numpy as np

from .words import ALPHABET, WordError


class Mode(str, enum.Enum):
    STRICT = "strict"  # avoid exponents >= threshold
    PLUS = "plus"      # avoid exponents > threshold

    @classmethod
    def parse(cls, value) -> Mode:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"mode must be 'strict' or 'plus', got {value!r}") from None


_THRESHOLD_RE = re.compile(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_threshold(text: str) -> Fraction:
    """Parse ``"7/4"`` or ``"2"`` into an exact Fraction (at least 1)."""
    m = _THRESHOLD_RE.fullmatch(text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ValueError(f"threshold must look like P/Q or an integer, got {text!r}")
    value = Fraction(int(m.group(1)), int(m.group(2) or 1))
    _check_threshold(value)
    return value


def _check_threshold(threshold) -> Fraction:
    threshold = Fraction(threshold)
    if threshold < 1:
        raise ValueError(f"threshold must be >= 1, got {threshold}")
    return threshold


def violates(length: int, period: int, threshold: Fraction, mode: Mode) -> bool:
    """Whether a factor of this length and least period breaks the threshold."""
    lhs = length * threshold.denominator
    rhs = threshold.numerator * period
    return lhs >= rhs if mode is Mode.STRICT else lhs > rhs


@dataclass(frozen=True)
class RepetitionOccurrence:
    """A factor ``word[start:start+length]`` having period ``period``.

    ``aligned`` marks occurrences whose period was imposed by construction
    rather than computed as the least period of the factor.
    """

    start: int
    period: int
    length: int
    aligned: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.start < 0 or self.period < 1 or self.length < 1:
            raise ValueError(f"invalid occurrence {self}")

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    @property
    def end(self) -> int:
        """Exclusive end position."""
        return self.start + self.length

    @property
    def repeat_length(self) -> int:
        """Length of the repeated part, ``|x|`` in ``xyx``."""
        return self.length - self.period

    def factor(self, word: str) -> str:
        return word[self.start:self.end]

    def holds_in(self, word: str) -> bool:
        """Re-check the periodicity directly against ``word``."""
        if self.end > len(word):
            return False
        s, e, p = self.start, self.end, self.period
        return word[s:e - p] == word[s + p:e]

    def to_line(self) -> str:
        x = self.exponent
        return f"{self.start} {self.period} {self.length} {x.numerator}/{x.denominator}"

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "period": self.period,
            "length": self.length,
            "exponent": f"{self.exponent.numerator}/{self.exponent.denominator}",
        }


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    witness: RepetitionOccurrence | None = None


def _require_word(word: str, min_length: int) -> None:
    if len(word) < min_length:
        if min_length == 1:
            raise WordError("empty word has no period")
        raise WordError(f"word must have length >= {min_length}, got {len(word)}")


def least_period(word: str) -> int:
    """Smallest p with ``word[i] == word[i+p]`` wherever both are defined."""
    _require_word(word, 1)
    n = len(word)
    for p in range(1, n):
        if word[p:] == word[:n - p]:
            return p
    return n


def exponent(word: str) -> Fraction:
    return Fraction(len(word), least_period(word))


def border_array(word) -> list[int]:
    """Failure function: ``b[j]`` is the longest proper border of ``word[:j+1]``."""
    n = len(word)
    b = [0] * n
    k = 0
    for j in range(1, n):
        c = word[j]
        while k and word[k] != c:
            k = b[k - 1]
        if word[k] == c:
            k += 1
        b[j] = k
    return b


def _codes(word: str) -> np.ndarray:
    return np.frombuffer(word.encode("ascii"), dtype=np.uint8)


@numba.njit(cache=True)
def _first_violation_kernel(a, num, den, strict):
    n = a.shape[0]
    border = np.zeros(max(n, 1), np.int64)
    for i in range(n):
        if (den >= num) if strict else (den > num):
            return i, 1, 1
        k = 0
        for j in range(1, n - i):
            c = a[i + j]
            while k > 0 and a[i + k] != c:
                k = border[k - 1]
            if a[i + k] == c:
                k += 1
            border[j] = k
            length = j + 1
            p = length - k
            lhs = length * den
            rhs = num * p
            if (lhs >= rhs) if strict else (lhs > rhs):
                return i, p, length
    return -1, -1, -1


@numba.njit(cache=True)
def _max_exponent_kernel(a):
    n = a.shape[0]
    border = np.zeros(max(n, 1), np.int64)
    best_start, best_period, best_length = -1, 1, 0
    for i in range(n - 1):
        k = 0
        for j in range(1, n - i):
            c = a[i + j]
            while k > 0 and a[i + k] != c:
                k = border[k - 1]
            if a[i + k] == c:
                k += 1
            border[j] = k
            length = j + 1
            p = length - k
            if best_start < 0 or length * best_period > best_length * p:
                best_start, best_period, best_length = i, p, length
    return best_start, best_period, best_length


def _oracle_first_violation(word, threshold, mode):
    best = None
    n = len(word)
    for start in range(n):
        for length in range(1, n - start + 1):
            p = least_period(word[start:start + length])
            if violates(length, p, threshold, mode):
                key = (start, p, length)
                if best is None or key < best:
                    best = key
        if best is not None:
            break
    return best


def _optimized_first_violation(word, threshold, mode):
    if not word:
        return None
    i, p, length = _first_violation_kernel(
        _codes(word), threshold.numerator, threshold.denominator, mode is Mode.STRICT)
    return None if i < 0 else (i, p, length)


_ENGINES = {
    "oracle": _oracle_first_violation,
    "optimized": _optimized_first_violation,
}


def check_freeness(word: str, threshold, mode=Mode.PLUS,
                   engine: str = "optimized") -> FreenessVerdict:
    """Decide whether every factor of ``word`` respects ``threshold``.

    In plus mode factors may reach the threshold exactly; in strict mode they
    must stay below it.
    """
    threshold = _check_threshold(threshold)
    mode = Mode.parse(mode)
    try:
        find = _ENGINES[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None
    found = find(word, threshold, mode)
    if found is None:
        return FreenessVerdict(True)
    start, period, length = found
    return FreenessVerdict(False, RepetitionOccurrence(start, period, length))


def is_squarefree(word: str, engine: str = "optimized") -> bool:
    return check_freeness(word, 2, Mode.STRICT, engine).free


def has_square_direct(word: str) -> bool:
    """Scan for a factor ``uu`` directly, without periods."""
    n = len(word)
    for half in range(1, n // 2 + 1):
        for i in range(n - 2 * half + 1):
            if word[i:i + half] == word[i + half:i + 2 * half]:
                return True
    return False


def max_exponent(word: str, engine: str = "optimized"):
    """Largest exponent over factors of length >= 2, with its occurrence.

    Ties go to the leftmost start, then the smallest period.
    """
    _require_word(word, 2)
    if engine == "oracle":
        best = None
        for start in range(len(word) - 1):
            for length in range(2, len(word) - start + 1):
                p = least_period(word[start:start + length])
                if best is None or length * best[1] > best[2] * p:
                    best = (start, p, length)
        start, period, length = best
    elif engine == "optimized":
        start, period, length = (int(v) for v in _max_exponent_kernel(_codes(word)))
    else:
        raise ValueError(f"unknown engine {engine!r}")
    occ = RepetitionOccurrence(start, period, length)
    return occ.exponent, occ


@numba.njit(cache=True)
def _runs_kernel(a, num, den, strict):
    # maximal runs of word[i] == word[i+p], reported as (start, p, p + run)
    n = a.shape[0]
    out = [(0, 0, 0) for _ in range(0)]
    for p in range(1, n):
        i = 0
        while i < n - p:
            if a[i] != a[i + p]:
                i += 1
                continue
            j = i
            while j < n - p and a[j] == a[j + p]:
                j += 1
            length = j - i + p
            lhs = length * den
            rhs = num * p
            if (lhs >= rhs) if strict else (lhs > rhs):
                out.append((i, p, length))
            i = j
    return out


def find_violations(word: str, threshold, mode=Mode.PLUS) -> list[RepetitionOccurrence]:
    """All maximal repetitions that break the threshold.

    An occurrence is reported with its least period and cannot be extended
    left or right with that period. Sorted by start, then period.
    """
    threshold = _check_threshold(threshold)
    mode = Mode.parse(mode)
    n = len(word)
    if n == 0:
        return []
    found = _runs_kernel(_codes(word), threshold.numerator, threshold.denominator,
                         mode is Mode.STRICT)
    result = []
    for s, p, length in found:
        b = border_array(word[s:s + length])
        if length - b[-1] == p:
            result.append(RepetitionOccurrence(s, p, length))
    if violates(1, 1, threshold, mode):
        # Strict threshold 1: every factor violates, exponent-1 ones included.
        # The whole word is the only occurrence that cannot be extended.
        whole = RepetitionOccurrence(0, least_period(word), n)
        if whole not in result:
            result.append(whole)
    result.sort(key=lambda o: (o.start, o.period))
    return result


@dataclass
class SearchSummary:
    alphabet_size: int
    threshold: Fraction
    mode: Mode
    max_len: int
    counts: list[int]
    longest: str
    terminated: bool
    nodes: int

    @property
    def longest_length(self) -> int:
        return len(self.longest)

    def to_dict(self) -> dict:
        return {
            "alphabet": self.alphabet_size,
            "threshold": f"{self.threshold.numerator}/{self.threshold.denominator}",
            "mode": self.mode.value,
            "max_len": self.max_len,
            "terminated": self.terminated,
            "longest_length": self.longest_length,
            "longest": self.longest,
            "nodes": self.nodes,
            "counts": self.counts,
        }


def _suffixes_ok(word: list[str], threshold: Fraction, mode: Mode) -> bool:
    # Suffixes of word are prefixes of its reversal; a word and its reversal
    # share their least period.
    rev = word[::-1]
    b = border_array(rev)
    for j, k in enumerate(b):
        length = j + 1
        if violates(length, length - k, threshold, mode):
            return False
    return True


def avoidance_search(alphabet_size: int, threshold, mode=Mode.STRICT,
                     max_len: int = 50) -> SearchSummary:
    """Depth-first backtracking over words avoiding the given powers.

    Extends words letter by letter in alphabetical order, checking only the
    suffixes that end at the new letter. Stops at the first word of length
    ``max_len``; ``terminated`` is true when the whole tree died out first.
    ``counts[L-1]`` is the number of valid words of length L visited.
    """
    if alphabet_size not in (2, 3):
        raise ValueError(f"alphabet size must be 2 or 3, got {alphabet_size}")
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    threshold = _check_threshold(threshold)
    mode = Mode.parse(mode)
    letters = ALPHABET[:alphabet_size]
    counts = [0] * max_len
    word: list[str] = []
    longest = ""
    nodes = 0
    # stack of next-letter indices, one per depth
    stack = [0]
    while stack:
        idx = stack[-1]
        if idx == len(letters):
            stack.pop()
            if word:
                word.pop()
            continue
        stack[-1] = idx + 1
        word.append(letters[idx])
        nodes += 1
        if not _suffixes_ok(word, threshold, mode):
            word.pop()
            continue
        counts[len(word) - 1] += 1
        if len(word) > len(longest):
            longest = "".join(word)
        if len(word) == max_len:
            return SearchSummary(alphabet_size, threshold, mode, max_len,
                                 counts, longest, False, nodes)
        stack.append(0)
    return SearchSummary(alphabet_size, threshold, mode, max_len,
                         counts, longest, True, nodes)

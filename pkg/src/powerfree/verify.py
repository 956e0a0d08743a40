"""Executable checks of the structural facts about phi^n(2).

Each ``check_*`` function returns a :class:`CheckReport`. Checks that accept a
``word`` argument run against that word instead of ``generate(n)``, which is
how mutated and synthetic counterexamples are fed in.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import power
from .power import Mode, RepetitionOccurrence
from .words import (RHO, SIGMA, apply_permutation, extract_middles, format_spaced,
                    generate, generation_cap, is_permutation_triple, triples)

SEVEN_FOURTHS = Fraction(7, 4)
BOUNDARY_WINDOW_MAX = 23  # ceil(13 * 7/4)

# phi^1(2), phi^2(2), phi^3(2) as printed for the base cases
BASE_WORDS = {
    1: "123",
    2: "213123132",
    3: "123213231213123132312132123",
}

CHECK_NAMES = ("base", "squarefree", "triples", "preimage", "four_tuple",
               "boundary", "main", "extension", "leaders")


class PreconditionError(ValueError):
    """An argument's hypotheses do not hold for the given word/occurrence."""


@dataclass
class CheckReport:
    check_name: str
    level_n: int | None
    passed: bool
    witness: dict | None = None
    elapsed: float = 0.0
    vacuous: bool = False
    detail: str = ""
    data: dict | None = None

    @property
    def status(self) -> str:
        if not self.passed:
            return "fail"
        return "vacuous" if self.vacuous else "pass"

    def to_dict(self) -> dict:
        return {
            "name": self.check_name,
            "n": self.level_n,
            "passed": self.passed,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
            "millis": round(self.elapsed * 1000, 3),
            **({"data": self.data} if self.data is not None else {}),
        }


class _timed:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _occurrence_witness(word: str, occ: RepetitionOccurrence) -> dict:
    w = occ.to_dict()
    w["factor"] = occ.factor(word)
    return w


def _word_for(n, word):
    return generate(n) if word is None else word


def _freeness_report(name, n, word, threshold, mode, engine="optimized", detail=""):
    with _timed() as t:
        verdict = power.check_freeness(word, threshold, mode, engine)
    witness = None if verdict.free else _occurrence_witness(word, verdict.witness)
    return CheckReport(name, n, verdict.free, witness, t.elapsed, detail=detail)


def check_base(n: int) -> CheckReport:
    """Base cases: the printed words and their 7/4+-freeness, by the oracle."""
    if n not in BASE_WORDS:
        raise ValueError(f"base cases cover n = 1, 2, 3; got {n}")
    with _timed() as t:
        word = generate(n)
        if word != BASE_WORDS[n]:
            witness = {"expected": BASE_WORDS[n], "factor": word}
            return CheckReport("base", n, False, witness, detail="word mismatch")
        verdict = power.check_freeness(word, SEVEN_FOURTHS, Mode.PLUS, engine="oracle")
    witness = None if verdict.free else _occurrence_witness(word, verdict.witness)
    return CheckReport("base", n, verdict.free, witness, t.elapsed)


def check_squarefree(n: int | None = None, word: str | None = None) -> CheckReport:
    return _freeness_report("squarefree", n, _word_for(n, word), 2, Mode.STRICT)


def check_triples(n: int | None = None, word: str | None = None) -> CheckReport:
    with _timed() as t:
        word = _word_for(n, word)
        witness = None
        for k, block in enumerate(triples(word)):
            if not is_permutation_triple(block):
                witness = {"block": k, "start": 3 * k, "factor": block}
                break
    return CheckReport("triples", n, witness is None, witness, t.elapsed)


def check_preimage(n: int) -> CheckReport:
    if n < 1:
        raise ValueError(f"preimage check needs n >= 1, got {n}")
    with _timed() as t:
        middles = extract_middles(generate(n))
        previous = generate(n - 1)
        witness = None
        for k, (a, b) in enumerate(zip(middles, previous)):
            if a != b:
                witness = {"position": k, "middle": a, "expected": b, "factor": a}
                break
        if witness is None and len(middles) != len(previous):
            witness = {"position": min(len(middles), len(previous)), "factor": ""}
    return CheckReport("preimage", n, witness is None, witness, t.elapsed)


def four_equal_leaders(word: str) -> int | None:
    """First block index q whose four aligned leaders 3q, 3q+3, 3q+6, 3q+9 agree."""
    for q in range(len(word) // 3 - 3):
        i = 3 * q
        if word[i] == word[i + 3] == word[i + 6] == word[i + 9]:
            return q
    return None


def check_four_tuple(n: int | None = None, word: str | None = None) -> CheckReport:
    with _timed() as t:
        word = _word_for(n, word)
        q = four_equal_leaders(word)
    witness = None
    if q is not None:
        witness = {"q": q, "start": 3 * q, "factor": word[3 * q:3 * q + 12]}
    return CheckReport("four_tuple", n, q is None, witness, t.elapsed)


def boundary_words(n: int) -> dict[str, tuple[str, str]]:
    """The two concatenations whose seams can hold short repetitions.

    Maps ``"sigma"`` to ``(sigma(phi^n(2)), phi^n(2))`` and ``"rho"`` to
    ``(phi^n(2), rho(phi^n(2)))``.
    """
    word = generate(n)
    return {
        "sigma": (apply_permutation(SIGMA, word), word),
        "rho": (word, apply_permutation(RHO, word)),
    }


def boundary_neighborhood(n: int, which: str, width: int = 8) -> str:
    """``width`` triples on each side of a seam, joined by `` · ``."""
    left, right = boundary_words(n)[which]
    k = 3 * width
    return f"{format_spaced(left[-k:])} · {format_spaced(right[:k])}"


def straddling_windows(left: str, right: str, max_length: int = BOUNDARY_WINDOW_MAX):
    """Yield ``(start, factor)`` for every factor of ``left + right`` of length
    2..max_length that contains the last letter of ``left`` and the first of
    ``right``.
    """
    joined = left + right
    seam = len(left)
    for length in range(2, max_length + 1):
        for start in range(seam - length + 1, seam):
            if start < 0 or start + length > len(joined):
                continue
            yield start, joined[start:start + length]


def check_boundary_windows(n: int) -> CheckReport:
    if n < 3:
        raise ValueError(f"boundary windows are checked for n >= 3, got {n}")
    with _timed() as t:
        witness = None
        counts = {}
        for which, (left, right) in boundary_words(n).items():
            count = 0
            for start, factor in straddling_windows(left, right):
                count += 1
                p = power.least_period(factor)
                if witness is None and power.violates(len(factor), p, SEVEN_FOURTHS, Mode.PLUS):
                    occ = RepetitionOccurrence(start, p, len(factor))
                    witness = {"boundary": which, **occ.to_dict(), "factor": factor}
            counts[which] = count
    detail = " ".join(f"{k}={v}" for k, v in counts.items())
    return CheckReport("boundary", n, witness is None, witness, t.elapsed, detail=detail)


ORACLE_AGREEMENT_MAX_LEVEL = 5


def check_main(n: int | None = None, word: str | None = None) -> CheckReport:
    """7/4+-freeness with the optimized engine; oracle agreement at small levels."""
    word = _word_for(n, word)
    report = _freeness_report("main", n, word, SEVEN_FOURTHS, Mode.PLUS)
    if len(word) <= 3 ** ORACLE_AGREEMENT_MAX_LEVEL:
        oracle = power.check_freeness(word, SEVEN_FOURTHS, Mode.PLUS, engine="oracle")
        expected = None if oracle.free else _occurrence_witness(word, oracle.witness)
        if oracle.free != report.passed or expected != report.witness:
            report.passed = False
            report.detail = "engine disagreement"
            report.witness = {"optimized": report.witness, "oracle": expected}
        else:
            report.detail = "oracle agrees"
    return report


# -- repetitions with period divisible by 3 ------------------------------------

def _missing(a: str, b: str) -> str:
    (c,) = {"1", "2", "3"} - {a, b}
    return c


def _require_permutation_triples(word: str) -> None:
    if len(word) % 3:
        raise PreconditionError(f"word length {len(word)} is not divisible by 3")
    for k in range(0, len(word), 3):
        if not is_permutation_triple(word[k:k + 3]):
            raise PreconditionError(f"triple at {k} ({word[k:k + 3]}) is not a permutation of 123")


def _infer_pair(b2: str, b3: str, b4: str, b5: str) -> tuple[str, str]:
    # b2 closes a triple, b3 b4 b5 is the next one; recover the two letters
    # before b2 assuming no square around them.
    if b2 == b3:
        raise PreconditionError("square of a letter at the triple seam")
    if b2 == b4:
        return b3, b5
    if b2 == b5:
        return b4, b3
    raise PreconditionError("following block is not a permutation")


def _extend_left(word: str, occ: RepetitionOccurrence) -> RepetitionOccurrence:
    p, s, r = occ.start, occ.period, occ.repeat_length
    shift = p % 3
    if shift == 0:
        return occ
    if shift == 1:
        if r < 2:
            raise PreconditionError("need at least 2 repeated letters to extend by one")
        here = _missing(word[p], word[p + 1])
        there = _missing(word[p + s], word[p + s + 1])
        assert here == there
        return RepetitionOccurrence(p - 1, s, occ.length + 1, aligned=True)
    if r < 4:
        raise PreconditionError("need at least 4 repeated letters to extend by two")
    base = p - 2
    for k in (base, base + s):
        if power.has_square_direct(word[k:k + 6]):
            raise PreconditionError(f"square inside the 6 letters at {k}")
    here = _infer_pair(*word[p:p + 4])
    there = _infer_pair(*word[p + s:p + s + 4])
    assert here == there
    return RepetitionOccurrence(base, s, occ.length + 2, aligned=True)


def extend_occurrence(word: str, occ: RepetitionOccurrence) -> RepetitionOccurrence:
    """Stretch a period-3k repetition so it starts and ends on triple seams.

    The letters added on each side are inferred from neighbouring triples
    alone (every triple is a permutation of 123, and no local squares), not
    read off the word. The result starts at a multiple of 3 and ends just
    before one.
    """
    _require_permutation_triples(word)
    if occ.period % 3:
        raise PreconditionError(f"period {occ.period} is not divisible by 3")
    if not occ.holds_in(word):
        raise PreconditionError("occurrence does not have its stated period in the word")
    occ = _extend_left(word, occ)
    n = len(word)
    mirrored = RepetitionOccurrence(n - occ.end, occ.period, occ.length)
    mirrored = _extend_left(word[::-1], mirrored)
    return RepetitionOccurrence(n - mirrored.end, occ.period, mirrored.length, aligned=True)


# -- period not divisible by 3, at least 14 ------------------------------------

@dataclass
class LeaderChain:
    """Equal letters forced at consecutive triples by a repetition.

    ``role`` is ``"leader"`` (first letter of each triple, period = 2 mod 3)
    or ``"trailer"`` (last letter, period = 1 mod 3).
    """

    role: str
    positions: list[int] = field(default_factory=list)
    letters: str = ""

    def __len__(self):
        return len(self.positions)


MIN_REPEAT_FOR_CHAIN = 11


def leader_chain(word: str, occ: RepetitionOccurrence) -> LeaderChain:
    """Derive the chain of equal triple letters implied by ``occ``."""
    _require_permutation_triples(word)
    s = occ.period
    if s % 3 == 0:
        raise PreconditionError(f"period {s} is divisible by 3")
    r = occ.repeat_length
    if r < MIN_REPEAT_FOR_CHAIN:
        raise PreconditionError(f"repeated part has length {r} < {MIN_REPEAT_FOR_CHAIN}")
    if not occ.holds_in(word):
        raise PreconditionError("occurrence does not have its stated period in the word")
    lo, hi = occ.start, occ.start + r - 1  # positions i with word[i] == word[i+s]

    def periodic(*idx):
        return all(lo <= i <= hi for i in idx)

    if s % 3 == 2:
        # triple t's last two letters open the aligned triple at 3t+s+1, whose
        # third letter is then forced to equal word[3t]; periodicity carries
        # it back to 3t+3.
        links = [t for t in range(len(word) // 3) if periodic(3 * t + 1, 3 * t + 2, 3 * t + 3)]
        for t in links:
            forced = _missing(word[3 * t + 1 + s], word[3 * t + 2 + s])
            if forced != word[3 * t] or word[3 * t + 3 + s] != forced:
                raise AssertionError(f"leader link {t} does not hold")
        role = "leader"
        positions = [3 * t for t in links] + ([3 * links[-1] + 3] if links else [])
    else:
        # mirror image: triple t's first two letters close the aligned triple
        # at 3t+s-1, forcing its first letter, carried back to 3t-1.
        links = [t for t in range(1, len(word) // 3) if periodic(3 * t - 1, 3 * t, 3 * t + 1)]
        for t in links:
            forced = _missing(word[3 * t + s], word[3 * t + 1 + s])
            if forced != word[3 * t + 2] or word[3 * t - 1 + s] != forced:
                raise AssertionError(f"trailer link {t} does not hold")
        role = "trailer"
        positions = [3 * t - 1 for t in links] + ([3 * links[-1] + 2] if links else [])
    return LeaderChain(role, positions, "".join(word[i] for i in positions))


def leader_propagation(word: str, occ: RepetitionOccurrence, n: int | None = None) -> CheckReport:
    """Check that a long repetition forces four equal triple letters in a row.

    Four equal leaders in a row force a short square (trailers: the mirror
    image), which is what rules such repetitions out of phi^n(2).
    """
    with _timed() as t:
        try:
            chain = leader_chain(word, occ)
        except AssertionError as exc:
            return CheckReport("leaders", n, False, {**occ.to_dict(), "factor": occ.factor(word)},
                               detail=str(exc))
    ok = len(chain) >= 4 and len(set(chain.letters)) == 1
    detail = f"{chain.role} chain {chain.positions} letters {chain.letters}"
    witness = None if ok else {**occ.to_dict(), "factor": occ.factor(word), "chain": chain.positions}
    data = {"role": chain.role, "positions": chain.positions, "letters": chain.letters}
    return CheckReport("leaders", n, ok, witness, t.elapsed, detail=detail, data=data)


def _violations(n):
    return power.find_violations(generate(n), SEVEN_FOURTHS, Mode.PLUS)


def scan_extension(n: int) -> CheckReport:
    """Feed every 7/4+-power of period 3k in phi^n(2) through the extension step."""
    with _timed() as t:
        word = generate(n)
        found = [o for o in _violations(n) if o.period % 3 == 0]
    if not found:
        return CheckReport("extension", n, True, None, t.elapsed, vacuous=True,
                           detail="no qualifying repetition")
    occ = found[0]
    try:
        ext = extend_occurrence(word, occ)
        detail = f"extended to start {ext.start} length {ext.length}"
    except PreconditionError as exc:
        detail = str(exc)
    return CheckReport("extension", n, False, _occurrence_witness(word, occ), t.elapsed, detail=detail)


def scan_leaders(n: int) -> CheckReport:
    """Feed every 7/4+-power of period >= 14, not 3k, through leader propagation."""
    with _timed() as t:
        word = generate(n)
        found = [o for o in _violations(n) if o.period % 3 and o.period >= 14]
    if not found:
        return CheckReport("leaders", n, True, None, t.elapsed, vacuous=True,
                           detail="no qualifying repetition")
    occ = found[0]
    chain = leader_propagation(word, occ, n)
    return CheckReport("leaders", n, False, _occurrence_witness(word, occ), t.elapsed,
                       detail=chain.detail)


def _plan(n_max: int, names) -> list[tuple[str, int]]:
    levels = range(1, n_max + 1)
    plan = {
        "base": [n for n in (1, 2, 3) if n <= n_max],
        "squarefree": list(levels),
        "triples": list(levels),
        "preimage": list(levels),
        "four_tuple": list(levels),
        # the seams of sigma(phi^n) phi^n and phi^n rho(phi^n) live in phi^(n+1)
        "boundary": list(range(3, n_max)),
        "main": list(levels),
        "extension": list(levels),
        "leaders": list(levels),
    }
    return [(name, n) for name in CHECK_NAMES if name in names for n in plan[name]]


_RUNNERS = {
    "base": check_base,
    "squarefree": check_squarefree,
    "triples": check_triples,
    "preimage": check_preimage,
    "four_tuple": check_four_tuple,
    "boundary": check_boundary_windows,
    "main": check_main,
    "extension": scan_extension,
    "leaders": scan_leaders,
}


def run_all(n_max: int = 8, checks=None) -> list[CheckReport]:
    """Run the selected checks (all by default) at every applicable level."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > generation_cap():
        generate(n_max)  # raises the resource-limit error
    names = set(CHECK_NAMES if checks is None else checks)
    unknown = names - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(sorted(unknown))}")
    return [_RUNNERS[name](n) for name, n in _plan(n_max, names)]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def render_table(reports) -> str:
    """Fixed-width plain table. Timings are left out so output is reproducible."""
    lines = [f"{'check':<12}{'n':>3}  {'status':<8}detail"]
    for r in reports:
        n = "-" if r.level_n is None else str(r.level_n)
        detail = r.detail
        if r.witness is not None:
            detail = (detail + " " if detail else "") + "witness " + json.dumps(r.witness, sort_keys=True)
        lines.append(f"{r.check_name:<12}{n:>3}  {r.status:<8}{detail}".rstrip())
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def render_json(reports) -> str:
    return dump_json([r.to_dict() for r in reports])


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"

"""Random access into the bi-infinite word through balanced ternary.

Centered index ``i`` of phi^n(2) falls in the left, middle or right third
according to its leading balanced-ternary digit (-1, 0, +1), and those thirds
are sigma(phi^(n-1)(2)), phi^(n-1)(2) and rho(phi^(n-1)(2)). Reading digits
most-significant first therefore accumulates a letter permutation, each new
digit's permutation acting *before* the ones already read. The symbol is the
accumulated permutation applied to 2.
"""

from __future__ import annotations

from .words import IDENTITY, RHO, SIGMA, Permutation3

DIGIT_PERMUTATION = {-1: SIGMA, 0: IDENTITY, 1: RHO}
DIGIT_CHARS = {-1: "T", 0: "0", 1: "1"}
_CHAR_DIGITS = {c: d for d, c in DIGIT_CHARS.items()}


def to_balanced_ternary(i: int) -> list[int]:
    """Canonical MSB-first digits of ``i``; ``[]`` for zero."""
    digits = []
    while i:
        r = i % 3
        if r == 2:
            r = -1
        digits.append(r)
        i = (i - r) // 3
    digits.reverse()
    return digits


def from_balanced_ternary(digits) -> int:
    value = 0
    for d in digits:
        if d not in DIGIT_PERMUTATION:
            raise ValueError(f"balanced ternary digit must be -1, 0 or 1, got {d!r}")
        value = 3 * value + d
    return value


def render_digits(digits) -> str:
    """Render digits with ``T`` for -1, e.g. ``[1, -1, -1] -> "1TT"``."""
    return "".join(DIGIT_CHARS[d] for d in digits) or "0"


def parse_digits(text: str) -> list[int]:
    try:
        digits = [_CHAR_DIGITS[c] for c in text]
    except KeyError as exc:
        raise ValueError(f"balanced ternary uses T, 0, 1; got {exc.args[0]!r}") from None
    while digits and digits[0] == 0:
        digits.pop(0)
    return digits


def step(state: Permutation3, digit: int) -> Permutation3:
    return state * DIGIT_PERMUTATION[digit]


def run(digits) -> Permutation3:
    state = IDENTITY
    for d in digits:
        state = step(state, d)
    return state


def output(state: Permutation3) -> int:
    return state(2)


def symbol_from_digits(digits) -> int:
    return output(run(digits))


def symbol_at_infinite(i: int) -> int:
    """Symbol of the bi-infinite word at centered index ``i``."""
    return symbol_from_digits(to_balanced_ternary(i))


def automaton_table():
    """States reachable from the identity, with transitions and outputs.

    Returns ``(states, transitions, outputs)`` where ``states`` is in
    discovery order, ``transitions[(state, digit)]`` is the next state and
    ``outputs[state]`` is the emitted symbol.
    """
    states = [IDENTITY]
    transitions = {}
    frontier = [IDENTITY]
    while frontier:
        state = frontier.pop(0)
        for d in (-1, 0, 1):
            nxt = step(state, d)
            transitions[state, d] = nxt
            if nxt not in states:
                states.append(nxt)
                frontier.append(nxt)
    outputs = {s: output(s) for s in states}
    return states, transitions, outputs

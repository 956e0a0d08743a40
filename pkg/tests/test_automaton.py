import random

import pytest
from hypothesis import given, strategies as st

from powerfree.automaton import (automaton_table, from_balanced_ternary, output, parse_digits,
                                 render_digits, run, symbol_at_infinite, symbol_from_digits,
                                 to_balanced_ternary)
from powerfree.words import IDENTITY, RHO, generate, half_width, symbol_at


@pytest.mark.parametrize("i, digits", [(0, []), (5, [1, -1, -1]), (-4, [-1, -1]), (4, [1, 1]),
                                       (-1, [-1]), (2, [1, -1])])
def test_to_balanced_ternary(i, digits):
    assert to_balanced_ternary(i) == digits


@pytest.mark.parametrize("digits, i", [([], 0), ([1, -1, -1], 5), ([1, 1], 4), ([0, 0, 1, 1], 4)])
def test_from_balanced_ternary(digits, i):
    assert from_balanced_ternary(digits) == i


def test_round_trip_exhaustive():
    for i in range(-3281, 3282):
        d = to_balanced_ternary(i)
        assert from_balanced_ternary(d) == i
        assert not d or d[0] != 0


def test_round_trip_sampled():
    rng = random.Random(3)
    for _ in range(20000):
        i = rng.randint(-10 ** 6, 10 ** 6)
        assert from_balanced_ternary(to_balanced_ternary(i)) == i


@given(st.integers(min_value=-10 ** 6, max_value=10 ** 6))
def test_digit_count_is_minimal(i):
    m = 0
    while abs(i) > (3 ** m - 1) // 2:
        m += 1
    assert len(to_balanced_ternary(i)) == m


def test_digit_rendering():
    assert render_digits(to_balanced_ternary(5)) == "1TT"
    assert parse_digits("1TT") == [1, -1, -1]
    assert parse_digits("001") == [1]
    assert render_digits([]) == "0"
    with pytest.raises(ValueError):
        parse_digits("12")


@pytest.mark.parametrize("i, symbol", [(0, 2), (1, 3), (-1, 1), (-13, 1)])
def test_symbol_at_infinite(i, symbol):
    assert symbol_at_infinite(i) == symbol


def test_worked_check_a4():
    # 4 = [1, 1]: rho applied to rho(2) gives 2, the last letter of phi^2(2)
    assert to_balanced_ternary(4) == [1, 1]
    assert symbol_from_digits([1, 1]) == RHO(RHO(2)) == 2
    assert symbol_at_infinite(4) == int(generate(2)[-1]) == 2


def test_agrees_with_generation_exhaustively():
    word = generate(9)
    h = half_width(9)
    assert h == 9841
    for i in range(-h, h + 1):
        assert symbol_at_infinite(i) == int(word[i + h])


@pytest.mark.parametrize("n", range(0, 7))
def test_agrees_with_symbol_at_every_level(n):
    h = half_width(n)
    assert all(symbol_at_infinite(i) == symbol_at(n, i) for i in range(-h, h + 1))


@given(st.integers(min_value=-10 ** 9, max_value=10 ** 9), st.integers(min_value=0, max_value=5))
def test_leading_zeros_are_inert(i, pad):
    d = to_balanced_ternary(i)
    assert symbol_from_digits([0] * pad + d) == symbol_from_digits(d)


def test_automaton_table():
    states, transitions, outputs = automaton_table()
    assert len(states) == 6
    assert transitions[IDENTITY, 0] == IDENTITY
    assert transitions[IDENTITY, 1] == RHO
    assert outputs[RHO] == 3 == symbol_at_infinite(1)
    # total and deterministic over its own states
    assert set(transitions) == {(s, d) for s in states for d in (-1, 0, 1)}
    assert all(t in states for t in transitions.values())
    assert automaton_table() == (states, transitions, outputs)


def test_table_drives_lookup():
    _, transitions, outputs = automaton_table()
    rng = random.Random(11)
    for _ in range(2000):
        i = rng.randint(-10 ** 12, 10 ** 12)
        state = IDENTITY
        for d in to_balanced_ternary(i):
            state = transitions[state, d]
        assert outputs[state] == symbol_at_infinite(i) == output(run(to_balanced_ternary(i)))

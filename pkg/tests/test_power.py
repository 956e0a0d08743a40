import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powerfree.power import (Mode, RepetitionOccurrence, avoidance_search, border_array,
                             check_freeness, exponent, find_violations, has_square_direct,
                             least_period, max_exponent, parse_threshold)
from powerfree.words import SIGMA, RHO, Permutation3, WordError, apply_permutation, generate

SEVEN_FOURTHS = Fraction(7, 4)
ALL_PERMS = [Permutation3(p) for p in itertools.permutations((1, 2, 3))]
words = st.text(alphabet="123", min_size=1, max_size=40)


def brute_least_period(w):
    # straight from the definition, letter by letter
    for p in range(1, len(w) + 1):
        if all(w[i] == w[i + p] for i in range(len(w) - p)):
            return p


@pytest.mark.parametrize("word, expected", [("123123", 3), ("1213121", 4), ("1", 1)])
def test_least_period(word, expected):
    assert least_period(word) == expected == brute_least_period(word)


@pytest.mark.parametrize("word, expected", [
    ("123123", Fraction(2)),
    ("1213121", Fraction(7, 4)),
    ("123", Fraction(1)),
])
def test_exponent(word, expected):
    assert exponent(word) == expected


def test_empty_word_has_no_period():
    with pytest.raises(WordError):
        least_period("")
    with pytest.raises(WordError):
        exponent("")


@given(words)
def test_least_period_matches_definition_and_borders(w):
    p = least_period(w)
    assert p == brute_least_period(w)
    assert p == len(w) - border_array(w)[-1]
    assert exponent(w) >= 1
    assert (exponent(w) == len(w)) == (len(set(w)) == 1)


@pytest.mark.parametrize("engine", ["oracle", "optimized"])
def test_check_freeness_examples(engine):
    v = check_freeness("11", SEVEN_FOURTHS, Mode.PLUS, engine)
    assert not v.free
    assert v.witness == RepetitionOccurrence(0, 1, 2)
    assert v.witness.exponent == 2

    assert check_freeness(generate(3), SEVEN_FOURTHS, "plus", engine).free

    assert check_freeness("1213121", SEVEN_FOURTHS, "plus", engine).free
    v = check_freeness("1213121", SEVEN_FOURTHS, "strict", engine)
    assert not v.free
    assert v.witness.exponent == Fraction(7, 4)
    assert v.witness == RepetitionOccurrence(0, 4, 7)


def test_threshold_below_one_rejected():
    with pytest.raises(ValueError):
        check_freeness("123", Fraction(1, 2), "plus")
    with pytest.raises(ValueError):
        find_violations("123", Fraction(1, 2), "plus")


@pytest.mark.parametrize("text, value", [("7/4", Fraction(7, 4)), ("2", Fraction(2)),
                                         ("3/2", Fraction(3, 2)), ("14/8", Fraction(7, 4))])
def test_parse_threshold(text, value):
    assert parse_threshold(text) == value


@pytest.mark.parametrize("text", ["1/2", "7/0", "abc", "1.75", "-2", ""])
def test_parse_threshold_rejects(text):
    with pytest.raises(ValueError):
        parse_threshold(text)


def test_engine_equivalence_random_words():
    rng = random.Random(1972)
    thresholds = [Fraction(3, 2), SEVEN_FOURTHS, Fraction(2)]
    for _ in range(1000):
        w = "".join(rng.choice("123") for _ in range(rng.randint(1, 64)))
        for t, mode in itertools.product(thresholds, Mode):
            a = check_freeness(w, t, mode, "oracle")
            b = check_freeness(w, t, mode, "optimized")
            assert a == b, (w, t, mode)


@given(st.text(alphabet="12", min_size=1, max_size=30),
       st.sampled_from([Fraction(1), Fraction(5, 4), Fraction(2), Fraction(3)]),
       st.sampled_from(list(Mode)))
def test_engine_equivalence_binary(w, t, mode):
    assert check_freeness(w, t, mode, "oracle") == check_freeness(w, t, mode, "optimized")


@given(words, st.sampled_from(ALL_PERMS))
def test_alphabet_permutation_invariance(w, perm):
    image = apply_permutation(perm, w)
    assert least_period(image) == least_period(w)
    for t, mode in itertools.product([Fraction(3, 2), SEVEN_FOURTHS, Fraction(2)], Mode):
        assert check_freeness(image, t, mode) == check_freeness(w, t, mode)


@given(words, st.sampled_from([Fraction(1), Fraction(3, 2), SEVEN_FOURTHS, Fraction(2)]))
def test_monotone_in_threshold_and_factors(w, t):
    if check_freeness(w, t, "plus").free:
        for bigger in (t + Fraction(1, 4), t + 1, Fraction(3)):
            assert check_freeness(w, bigger, "plus").free
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                assert check_freeness(w[i:j], t, "plus").free


@given(st.text(alphabet="123", max_size=40))
def test_squarefree_matches_direct_scan(w):
    assert check_freeness(w, 2, "strict").free == (not has_square_direct(w))


@pytest.mark.parametrize("n", range(1, 9))
def test_generated_words_are_squarefree_and_seven_fourths_free(n):
    w = generate(n)
    assert check_freeness(w, 2, "strict").free
    assert check_freeness(w, SEVEN_FOURTHS, "plus").free
    assert max_exponent(w)[0] <= SEVEN_FOURTHS


def test_sigma_rho_images_stay_free():
    w = generate(6)
    for perm in (SIGMA, RHO):
        assert check_freeness(apply_permutation(perm, w), SEVEN_FOURTHS, "plus").free


@pytest.mark.parametrize("word, value", [("11", Fraction(2)), ("123", Fraction(1))])
def test_max_exponent_small(word, value):
    assert max_exponent(word)[0] == value
    assert max_exponent(word, "oracle")[0] == value


def test_max_exponent_short_word():
    with pytest.raises(WordError):
        max_exponent("1")


def test_max_exponent_generated():
    # values from the brute-force oracle over all factors
    assert max_exponent(generate(1)) == (Fraction(1), RepetitionOccurrence(0, 2, 2))
    assert max_exponent(generate(2)) == (Fraction(5, 3), RepetitionOccurrence(2, 3, 5))
    for n in (3, 4):
        value, occ = max_exponent(generate(n))
        assert value == Fraction(7, 4)
        assert occ == RepetitionOccurrence(7, 4, 7)
        assert max_exponent(generate(n), "oracle") == (value, occ)


def test_max_exponent_engines_agree():
    rng = random.Random(7)
    for _ in range(300):
        w = "".join(rng.choice("123") for _ in range(rng.randint(2, 40)))
        assert max_exponent(w) == max_exponent(w, "oracle")


@pytest.mark.parametrize("word, t, expected", [
    ("1212", SEVEN_FOURTHS, [RepetitionOccurrence(0, 2, 4)]),
    (generate(2), SEVEN_FOURTHS, []),
    ("111", Fraction(1), [RepetitionOccurrence(0, 1, 3)]),
])
def test_find_violations_examples(word, t, expected):
    assert find_violations(word, t, "plus") == expected


def test_find_violations_to_line():
    (occ,) = find_violations("1212", SEVEN_FOURTHS, "plus")
    assert occ.to_line() == "0 2 4 2/1"


def brute_violations(w, t, mode):
    # every factor whose least period makes it violate, widened to its maximal run
    seen = set()
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            p = brute_least_period(w[i:j])
            length = j - i
            lhs, rhs = length * t.denominator, t.numerator * p
            if lhs >= rhs if mode == "strict" else lhs > rhs:
                a, b = i, j
                while a > 0 and w[a - 1] == w[a - 1 + p]:
                    a -= 1
                while b < len(w) and w[b] == w[b - p]:
                    b += 1
                seen.add((a, p, b - a))
    return sorted(seen)


@settings(max_examples=200)
@given(st.text(alphabet="123", min_size=1, max_size=30),
       st.sampled_from([Fraction(3, 2), SEVEN_FOURTHS, Fraction(2)]),
       st.sampled_from(["strict", "plus"]))
def test_find_violations_matches_brute_force(w, t, mode):
    got = find_violations(w, t, mode)
    assert [(o.start, o.period, o.length) for o in got] == brute_violations(w, t, mode)
    assert (not got) == check_freeness(w, t, mode).free
    for o in got:
        assert o.holds_in(w)
        assert least_period(o.factor(w)) == o.period


def test_search_binary_squarefree_dies():
    s = avoidance_search(2, 2, "strict", 10)
    assert s.terminated
    assert s.longest_length == 3
    assert s.longest == "121"
    assert s.counts[:4] == [2, 2, 2, 0]


def test_search_binary_counts_match_enumeration():
    s = avoidance_search(2, 2, "strict", 10)
    for L in range(1, 5):
        count = sum(not has_square_direct("".join(t)) for t in itertools.product("12", repeat=L))
        assert s.counts[L - 1] == count


def test_search_ternary_squarefree_continues():
    s = avoidance_search(3, 2, "strict", 50)
    assert not s.terminated
    assert s.longest_length == 50
    assert check_freeness(s.longest, 2, "strict").free


def test_search_seven_fourths_plus_continues():
    s = avoidance_search(3, SEVEN_FOURTHS, "plus", 100)
    assert not s.terminated
    assert s.longest_length == 100
    assert check_freeness(s.longest, SEVEN_FOURTHS, "plus").free


def test_search_rejects_alphabet():
    with pytest.raises(ValueError):
        avoidance_search(4, 2, "strict", 10)
    with pytest.raises(ValueError):
        avoidance_search(3, 2, "strict", 0)

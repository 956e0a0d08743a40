"""Random words made of permutation triples, for exercising the proof steps."""

from __future__ import annotations

import itertools
import random

from .power import RepetitionOccurrence

PERMUTATIONS = ["".join(p) for p in itertools.permutations("123")]


def random_triple_word(rng: random.Random, blocks: int) -> str:
    return "".join(rng.choice(PERMUTATIONS) for _ in range(blocks))


def plant_repetition(rng: random.Random, period: int, repeat: int, start_residue: int = 1,
                     pad_blocks: int = 2, max_nodes: int = 200_000):
    """Build a permutation-triple word holding ``word[i] == word[i+period]``
    for ``repeat`` consecutive positions starting at ``start`` (= residue mod 3).

    Positions forced equal are merged; every triple then asks its three
    classes for three different letters, i.e. a 3-colouring, found by
    randomized most-constrained-first backtracking. Returns
    ``(word, occurrence)``. Raises ValueError when no such word exists or
    ``max_nodes`` assignments were tried without success.
    """
    if period < 3:
        raise ValueError("planting needs period >= 3")
    start = 3 * pad_blocks + start_residue
    end = start + period + repeat
    size = 3 * (-(-end // 3) + pad_blocks)

    parent = list(range(size))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(start, start + repeat):
        parent[find(i + period)] = find(i)
    classes = sorted({find(i) for i in range(size)})
    neighbours = {c: set() for c in classes}
    for b in range(0, size, 3):
        trio = [find(b + j) for j in range(3)]
        if len(set(trio)) < 3:
            raise ValueError(f"cannot plant period {period} over {repeat} letters "
                             f"from residue {start_residue}: no such word")
        for x in trio:
            neighbours[x].update(y for y in trio if y != x)

    colour: dict[int, str] = {}
    budget = [max_nodes]

    def options(c):
        used = {colour[d] for d in neighbours[c] if d in colour}
        return [ch for ch in "123" if ch not in used]

    def solve():
        if len(colour) == len(classes):
            return True
        free = [c for c in classes if c not in colour]
        best = min(free, key=lambda c: (len(options(c)), -len(neighbours[c])))
        choices = options(best)
        rng.shuffle(choices)
        for ch in choices:
            budget[0] -= 1
            if budget[0] < 0:
                return False
            colour[best] = ch
            if solve():
                return True
            del colour[best]
        return False

    if not solve():
        reason = "search budget exhausted" if budget[0] < 0 else "no such word"
        raise ValueError(f"cannot plant period {period} over {repeat} letters "
                         f"from residue {start_residue}: {reason}")
    word = "".join(colour[find(i)] for i in range(size))
    return word, RepetitionOccurrence(start, period, period + repeat, aligned=True)

"""Shared enumerators and independent oracles.

The rewrite oracle here deliberately re-derives normal forms from the raw
congruence by exploring every rewrite order; it must stay independent of
the package's reduction strategy.
"""

import random
from functools import reduce as fold

import pytest

from pisom.structure import enum_irr
from pisom.words import Word


# -- independent rewrite oracle -----------------------------------------------


def oracle_rewrites(seq):
    """All single-step rewrites of a raw nonzero-integer sequence."""
    outs = []
    for i in range(len(seq) - 1):
        if (seq[i] > 0) == (seq[i + 1] > 0):
            outs.append(seq[:i] + (seq[i] + seq[i + 1],) + seq[i + 2 :])
    for i in range(1, len(seq) - 1):
        if (
            abs(seq[i]) == 1
            and (seq[i - 1] > 0) != (seq[i] > 0)
            and (seq[i + 1] > 0) != (seq[i] > 0)
        ):
            outs.append(seq[: i - 1] + (seq[i - 1] + seq[i] + seq[i + 1],) + seq[i + 2 :])
    return outs


def oracle_normal_forms(seq, memo=None):
    """The set of normal forms reachable by any rewrite order."""
    if memo is None:
        memo = {}
    known = memo.get(seq)
    if known is not None:
        return known
    steps = oracle_rewrites(seq)
    if not steps:
        result = frozenset({seq})
    else:
        result = frozenset().union(*(oracle_normal_forms(t, memo) for t in steps))
    memo[seq] = result
    return result


def raw_sequences(max_weight):
    """Every nonzero-integer sequence of total absolute value <= max_weight."""

    def rec(remaining):
        yield ()
        for mag in range(1, remaining + 1):
            for sign in (1, -1):
                for rest in rec(remaining - mag):
                    yield (sign * mag,) + rest

    for seq in rec(max_weight):
        if seq:
            yield seq


# -- reduced-word enumeration --------------------------------------------------


def words_upto(max_weight):
    """All reduced words of weight <= max_weight."""

    def extend(seq, used):
        yield Word(seq)
        if len(seq) > 1 and abs(seq[-1]) < 2:
            return
        sign = -1 if seq[-1] > 0 else 1
        for mag in range(1, max_weight - used + 1):
            yield from extend(seq + (sign * mag,), used + mag)

    for first in range(1, max_weight + 1):
        yield from extend((first,), first)
        yield from extend((-first,), first)


def sa_words_upto(max_weight, tag=None):
    from pisom.words import member

    out = []
    for w in words_upto(max_weight):
        if w.is_selfadjoint() and (tag is None or member(w, tag)):
            out.append(w)
    return out


def product(ws):
    return fold(lambda a, b: a * b, ws)


# -- irreducible pools ---------------------------------------------------------


@pytest.fixture(scope="session")
def irr_pool():
    """Irreducibles of the tau-kernel with grades <= 4: the plus-bracketed
    ones (star-closed) together with their entrywise-negated mirrors, which
    make up the minus-bracketed family."""
    pool = set()
    for k in range(1, 5):
        for w in enum_irr(k).elements:
            pool.add(w)
            pool.add(w.star)
            pool.add(Word(tuple(-e for e in w)))
            pool.add(Word(tuple(-e for e in w.star)))
    return sorted(pool)


def is_minimal_sequence(factors):
    """Minimality per the unique-decomposition theorem."""
    idems = (Word((-1, 1)), Word((1, -1)))
    for i, f in enumerate(factors):
        if f in idems:
            if i > 0 and (factors[i - 1] == f or factors[i - 1] * f == factors[i - 1]):
                return False
            if i + 1 < len(factors) and (
                factors[i + 1] == f or f * factors[i + 1] == factors[i + 1]
            ):
                return False
    return True


def random_minimal_sequences(pool, count, seed, max_len=5):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        seq = [rng.choice(pool) for _ in range(rng.randint(1, max_len))]
        if is_minimal_sequence(seq):
            out.append(seq)
    return out

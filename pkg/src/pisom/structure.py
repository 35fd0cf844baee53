"""Irreducibility, unique minimal factorization, graded enumeration.

The factorization routine follows the least-bad-prefix split: scan for the
first prefix sum whose sign disagrees with the leading entry, cut there,
and recurse on the tail.  The cut prefix is always irreducible, and for
reduced input the produced sequence is already the unique minimal
decomposition; a normalization pass enforcing minimality is kept as a
guard.

Plus-irreducibles are graded by the positive-entry sum, and each grade is
generated from lower ones by conjugating products with the generator.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from functools import reduce as _fold
from itertools import product as _cartesian

from .maps import alpha, is_irr_plus
from .words import (
    UNIT_MINUS,
    UNIT_PLUS,
    DomainError,
    Word,
    format_word,
    member,
    parse_word,
)


def is_irreducible(p: Word) -> bool:
    """No nontrivial two-factor splitting inside the tau-kernel.

    For reduced p this is exactly: no interior prefix sum is zero or
    crosses the sign of the leading entry.
    """
    if p.tau != 0:
        raise DomainError("irreducibility is decided inside A0, got %s" % (p,))
    s0 = p[0]
    return all(s0 * s > 0 for s in p.sigmas()[:-1])


def _split_once(p: Word):
    """One least-index split p = m * n with m irreducible, or None."""
    sig = p.sigmas()
    s0 = p[0]
    # interior indices only: the final prefix sum is tau = 0 by assumption
    r = next((i for i in range(1, len(p) - 1) if s0 * sig[i] <= 0), None)
    if r is None:
        return None
    if sig[r] == 0:
        return Word(p[: r + 1]), Word(p[r + 1 :])
    m = Word(p[:r] + (-sig[r - 1],))
    n = Word((p[r] + sig[r - 1],) + p[r + 1 :])
    return m, n


def _is_minimal(factors) -> bool:
    for i, f in enumerate(factors):
        if f in (UNIT_PLUS, UNIT_MINUS):
            if i > 0 and (factors[i - 1] == f or factors[i - 1] * f == factors[i - 1]):
                return False
            if i + 1 < len(factors) and (factors[i + 1] == f or f * factors[i + 1] == factors[i + 1]):
                return False
    return True


def _minimalize(factors):
    """Drop unit-acting idempotents, collapse repeated ones."""
    factors = list(factors)
    changed = True
    while changed and len(factors) > 1:
        changed = False
        for i, f in enumerate(factors):
            if f not in (UNIT_PLUS, UNIT_MINUS):
                continue
            if i + 1 < len(factors) and factors[i + 1] == f:
                del factors[i]
                changed = True
                break
            left_unit = i + 1 < len(factors) and f * factors[i + 1] == factors[i + 1]
            right_unit = i > 0 and factors[i - 1] * f == factors[i - 1]
            if left_unit or right_unit:
                del factors[i]
                changed = True
                break
    return factors


def factor_a0(p: Word) -> list[Word]:
    """Unique minimal decomposition into irreducibles of the tau-kernel."""
    if p.tau != 0:
        raise DomainError("factorization lives in A0, got %s" % (p,))
    factors: list[Word] = []
    rest = p
    while True:
        split = _split_once(rest)
        if split is None:
            factors.append(rest)
            break
        m, rest = split
        factors.append(m)
    factors = _minimalize(factors)
    assert _fold(lambda a, b: a * b, factors) == p
    assert _is_minimal(factors)
    return factors


def factor_d0(d: Word) -> list[Word]:
    """Factor inside D0; every factor is a plus-irreducible."""
    if not member(d, "D0"):
        raise DomainError("not in D0: %s" % (d,))
    factors = factor_a0(d)
    for f in factors:
        if not is_irr_plus(f):
            raise DomainError("factor %s of %s escapes the plus-irreducibles" % (f, d))
    if d != UNIT_PLUS and UNIT_PLUS in factors:
        raise DomainError("unit factor in a non-unit D0 decomposition of %s" % (d,))
    return factors


# -- graded enumeration ------------------------------------------------------

_MEMO: dict[int, frozenset[Word]] = {1: frozenset({UNIT_PLUS})}
_MEMO_LOCK = threading.Lock()


@dataclass(frozen=True)
class IrrTable:
    """One grade of the plus-irreducibles, sorted by entries."""

    k: int
    elements: tuple[Word, ...]

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "elements": [format_word(w) for w in self.elements]})

    @classmethod
    def from_json(cls, text: str) -> "IrrTable":
        obj = json.loads(text)
        return cls(int(obj["k"]), tuple(parse_word(t) for t in obj["elements"]))


def _compositions(total, min_part):
    """Ordered compositions of total into parts >= min_part."""
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in _compositions(total - first, min_part):
            yield (first,) + rest


def _grade_set(k: int) -> frozenset[Word]:
    with _MEMO_LOCK:
        cached = _MEMO.get(k)
    if cached is not None:
        return cached
    found: set[Word] = set()
    for k0 in range(1, k):
        target = k - k0
        # single factor of any lower grade, or >=2 factors of grade >= 2
        comps = [(target,)] + [c for c in _compositions(target, 2) if len(c) > 1]
        for comp in comps:
            pools = [_grade_set(ki) for ki in comp]
            for choice in _cartesian(*pools):
                w = _fold(lambda a, b: a * b, choice)
                for _ in range(k0):
                    w = alpha(w)
                found.add(w)
    for w in found:
        assert is_irreducible(w) and w.tau_plus() == k
    result = frozenset(found)
    with _MEMO_LOCK:
        _MEMO[k] = result
    return result


def enum_irr(k: int) -> IrrTable:
    """All plus-irreducibles of grade k (positive-entry sum k)."""
    if k < 1:
        raise DomainError("grades start at 1")
    return IrrTable(k, tuple(sorted(_grade_set(k))))


def reset_irr_memo() -> None:
    """Drop every memoized grade except the base case."""
    with _MEMO_LOCK:
        _MEMO.clear()
        _MEMO[1] = frozenset({UNIT_PLUS})


def load_irr_cache(path) -> None:
    """Seed the enumeration memo from a JSON file of tables keyed by grade."""
    with open(path) as fh:
        obj = json.load(fh)
    with _MEMO_LOCK:
        for key, table in obj.items():
            k = int(key)
            elems = frozenset(parse_word(t) for t in table["elements"])
            _MEMO.setdefault(k, elems)


def save_irr_cache(path) -> None:
    with _MEMO_LOCK:
        snapshot = dict(_MEMO)
    obj = {
        str(k): {"k": k, "elements": [format_word(w) for w in sorted(ws)]}
        for k, ws in sorted(snapshot.items())
    }
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


# -- selfadjoint canonical form ----------------------------------------------


def sa_canonical_d1(n: Word):
    """Split a selfadjoint element of D1 as flank* . center . flank.

    Returns (center, flank); the center is absent (None) when the minimal
    factor sequence has even length, the flank is absent when the element
    is a single irreducible.
    """
    if not n.is_selfadjoint():
        raise DomainError("not selfadjoint: %s" % (n,))
    if not member(n, "D1"):
        raise DomainError("not in D1: %s" % (n,))
    factors = factor_a0(n)
    s = len(factors)
    for i in range(s):
        if factors[i].star != factors[s - 1 - i]:
            raise DomainError("factor sequence of %s is not star-palindromic" % (n,))
    if s % 2:
        center = factors[s // 2]
        tail = factors[s // 2 + 1 :]
    else:
        center = None
        tail = factors[s // 2 :]
    flank = _fold(lambda a, b: a * b, tail) if tail else None
    recomposed = flank.star if flank is not None else None
    if center is not None:
        recomposed = center if recomposed is None else recomposed * center
    if flank is not None:
        recomposed = recomposed * flank
    assert recomposed == n
    return center, flank


def classify_sa(n: Word) -> str:
    """Case tag of a selfadjoint D1 element, from its minimal factor.

    CenterUnitPos: the hollowed idempotent (1,-1) sits at the center;
    Boundary: plain m*m with m fixed by the plus unit;
    CenterIrrNeg: an irreducible of D0 sits at the center.
    """
    from .order import sa_factor_min

    center, _ = sa_canonical_d1(n)
    t = sa_factor_min(n).star.tau
    if t == 1:
        tag = "CenterUnitPos"
    elif t == 0:
        tag = "Boundary"
    else:
        tag = "CenterIrrNeg"
    expected = (
        "CenterUnitPos"
        if center == UNIT_MINUS
        else "Boundary"
        if center is None
        else "CenterIrrNeg"
    )
    assert tag == expected, (n, tag, expected)
    return tag

"""The partial order on selfadjoint words: hollowing and reachability.

A selfadjoint word factors as w*w; stripping one unit off the front of w
and recomposing yields the element one step above ("hollowing out" the
middle).  Both factorizations and both per-factorization choices are
generated and filtered, which is cheap and matches the definition; at most
one strict successor survives, so reachability is a short chain walk.
"""

from __future__ import annotations

from .words import GEN, GEN_STAR, UNIT_MINUS, UNIT_PLUS, DomainError, Word, member


def sa_factor_min(n: Word) -> Word:
    """The unique minimal-length w with w* w == n."""
    if not n.is_selfadjoint():
        raise DomainError("not selfadjoint: %s" % (n,))
    half = len(n) // 2
    w = Word(tuple(-e for e in reversed(n[:half])))
    assert w.star * w == n
    return w


def sa_factorizations(n: Word) -> tuple[Word, Word]:
    """Both reduced factorizations w* w == n, negative-start first."""
    w = sa_factor_min(n)
    other = (GEN if w[0] < 0 else GEN_STAR) * w
    assert other.star * other == n
    return (w, other) if w[0] < 0 else (other, w)


def unit_strip(u: Word) -> Word:
    """The hollowing choice: remove one unit from the front of u.

    For u = (-1) this is forced to (1,-1), mirrored for (1).
    """
    e0 = u[0]
    if e0 < 0:
        if e0 == -1:
            return UNIT_MINUS if len(u) == 1 else Word(u[1:])
        return Word((e0 + 1,) + u[1:])
    if e0 == 1:
        return UNIT_PLUS if len(u) == 1 else Word(u[1:])
    return Word((e0 - 1,) + u[1:])


def unit_shift(u: Word) -> Word:
    """The inert choice: prepend the opposite unit (same recomposition)."""
    return (GEN if u[0] < 0 else GEN_STAR) * u


def hollow_choices(u: Word) -> tuple[Word, ...]:
    """Distinct candidates c with u = (unit) c; one or two of them."""
    a, b = unit_strip(u), unit_shift(u)
    return (a,) if a == b else (a, b)


def _check_sa(n: Word, within: str | None) -> None:
    if not n.is_selfadjoint():
        raise DomainError("not selfadjoint: %s" % (n,))
    if within is not None and not member(n, within):
        raise DomainError("%s is not in %s" % (n, within))


def hollow_successors(n: Word, within: str | None = None) -> set[Word]:
    """Elements one basic step above n; empty iff n is maximal."""
    _check_sa(n, within)
    out: set[Word] = set()
    for u in sa_factorizations(n):
        for c in hollow_choices(u):
            m = c.star * c
            if m != n:
                out.add(m)
    return out


def leq(n: Word, m: Word, within: str | None = None) -> bool:
    """Reachability n <= m along hollowing steps (chain search)."""
    _check_sa(n, within)
    _check_sa(m, within)
    frontier = {n}
    seen: set[Word] = set()
    while frontier:
        if m in frontier:
            return True
        seen |= frontier
        nxt: set[Word] = set()
        for x in frontier:
            for y in hollow_successors(x):
                if y not in seen and y.weight >= m.weight:
                    nxt.add(y)
        frontier = nxt
    return False


def upper_idempotent(n: Word) -> Word:
    """The idempotent above n; (-1,1) exactly when it fixes n on the left."""
    _check_sa(n, "D1")
    return UNIT_PLUS if UNIT_PLUS * n == n else UNIT_MINUS

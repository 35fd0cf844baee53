"""Reduced words: the exact arithmetic core.

A word is a finite sequence of nonzero integers with alternating signs in
which every interior entry has absolute value at least 2.  Such words are
the normal forms of the *-semigroup generated by a single element whose
representations are partial isometries: a positive entry k stands for the
k-th power of the generator, a negative entry -k for the k-th power of its
adjoint.  Multiplication concatenates and renormalizes; the two rewrite
rules are

  (a)  merge adjacent entries of equal sign by addition,
  (b)  replace an interior triple (x, e, y) with e = +-1 and x, y of the
       opposite sign by the single entry x + e + y.

Rule (b) preserves nonzeroness because |x + e + y| = |x| + |y| - 1 >= 1.
Each rule strictly shortens the sequence, so normalization terminates; the
test suite checks confluence against an exhaustive all-orders oracle.
"""

from __future__ import annotations

import re


class WordError(ValueError):
    """Malformed word literal or invalid entry sequence."""


class DomainError(ValueError):
    """Operation applied outside its domain (wrong subsemigroup, not
    selfadjoint, ...)."""


_INT_RE = re.compile(r"-?[1-9][0-9]*")

#: membership tags accepted by :func:`member`
TAGS = ("A0", "Aplus", "Aminus", "Aplus0", "D0", "D1")


def _reduce_entries(raw):
    """Normalize a nonzero-integer sequence with a single stack pass.

    Only the junction under the cursor can be non-reduced, so settling the
    stack top after each push restores the invariants.
    """
    out: list[int] = []
    for v in raw:
        v = int(v)
        if v == 0:
            raise WordError("zero entry in word")
        out.append(v)
        while True:
            if len(out) >= 2 and (out[-2] > 0) == (out[-1] > 0):
                y = out.pop()
                out[-1] += y
                continue
            if len(out) >= 3 and abs(out[-2]) == 1:
                y = out.pop()
                e = out.pop()
                out[-1] += e + y
                continue
            break
    if not out:
        raise WordError("empty word")
    return tuple(out)


class Word(tuple):
    """An immutable reduced word.

    Construction validates the normal-form invariants; use
    :func:`reduce_word` to normalize an arbitrary nonzero-integer sequence.

    >>> Word((-2, 3)) * Word((-3, 4))
    Word((-2,3,-3,4))
    >>> reduce_word((1, -1, 1))
    Word((1))
    >>> Word((1,)).star
    Word((-1))
    """

    __slots__ = ()

    def __new__(cls, entries):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise WordError("empty word")
        for e in entries:
            if e == 0:
                raise WordError("zero entry in word")
        for a, b in zip(entries, entries[1:]):
            if (a > 0) == (b > 0):
                raise WordError("adjacent entries share a sign: %r" % (entries,))
        for e in entries[1:-1]:
            if abs(e) < 2:
                raise WordError("interior entry of absolute value 1: %r" % (entries,))
        return super().__new__(cls, entries)

    def __repr__(self):
        return "Word((%s))" % ",".join(str(e) for e in self)

    def __str__(self):
        return format_word(self)

    def __mul__(self, other):
        return reduce_word(tuple(self) + tuple(other))

    def __pow__(self, n):
        if n < 1:
            raise WordError("powers start at 1")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    @property
    def star(self) -> "Word":
        """Reverse and negate; the involution of the *-semigroup."""
        return Word(tuple(-e for e in reversed(self)))

    @property
    def weight(self) -> int:
        """Sum of absolute values; the termination measure for reduction."""
        return sum(abs(e) for e in self)

    @property
    def tau(self) -> int:
        """Total exponent sum; additive under products, negated by star."""
        return sum(self)

    def sigma(self, r: int) -> int:
        """Prefix sum of the first r+1 entries, saturating to tau."""
        if r < 0:
            raise WordError("sigma index must be nonnegative")
        return sum(self[: r + 1])

    def sigmas(self):
        """All prefix sums, in order."""
        total, out = 0, []
        for e in self:
            total += e
            out.append(total)
        return tuple(out)

    def tau_plus(self) -> int:
        """Sum of the positive entries; the grading used for irreducibles."""
        pos = [e for e in self if e > 0]
        if not pos:
            raise DomainError("word has no positive entry: %s" % (self,))
        return sum(pos)

    def is_selfadjoint(self) -> bool:
        return self == self.star

    def is_idempotent(self) -> bool:
        return self * self == self


def reduce_word(raw) -> Word:
    """Normal form of an arbitrary nonzero-integer sequence."""
    return Word(_reduce_entries(raw))


def mul(a: Word, b: Word) -> Word:
    return a * b


def star(a: Word) -> Word:
    return a.star


def parse_word(text: str) -> Word:
    """Parse a word literal and reduce it.

    Grammar: ``'(' int (',' int)* ')'`` with ints free of leading zeros;
    whitespace around tokens is tolerated.  Unreduced literals are accepted
    and normalized.

    >>> parse_word("(-2,3,-3,2)")
    Word((-2,3,-3,2))
    >>> parse_word("(1, -1, 1)")
    Word((1))
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise WordError("word literal must be parenthesized: %r" % text)
    body = s[1:-1]
    parts = [p.strip() for p in body.split(",")]
    if not parts or any(p == "" for p in parts):
        raise WordError("malformed word literal: %r" % text)
    for p in parts:
        if p == "0" or p == "-0":
            raise WordError("zero entry in word literal: %r" % text)
        if not _INT_RE.fullmatch(p):
            raise WordError("bad integer %r in word literal" % p)
    return reduce_word(int(p) for p in parts)


def format_word(w) -> str:
    """Literal form, no spaces; round-trips through :func:`parse_word`."""
    return "(%s)" % ",".join(str(e) for e in w)


def member(w: Word, tag: str) -> bool:
    """Membership in the named subsemigroup.

    A0 is the kernel of tau; Aplus/Aminus are the sign-bracketed words;
    D0 demands all prefix sums <= 0, D1 all prefix sums <= 1 (both inside
    A0).
    """
    if tag == "A0":
        return w.tau == 0
    if tag == "Aplus":
        return len(w) >= 2 and w[0] < 0 and w[-1] > 0
    if tag == "Aminus":
        return len(w) >= 2 and w[0] > 0 and w[-1] < 0
    if tag == "Aplus0":
        return member(w, "Aplus") and w.tau == 0
    if tag == "D0":
        return w.tau == 0 and all(s <= 0 for s in w.sigmas())
    if tag == "D1":
        return w.tau == 0 and all(s <= 1 for s in w.sigmas())
    raise WordError("unknown membership tag %r (expected one of %s)" % (tag, ", ".join(TAGS)))


UNIT_PLUS = Word((-1, 1))   # unit of the plus-bracketed subsemigroups
UNIT_MINUS = Word((1, -1))  # the other idempotent
GEN = Word((1,))
GEN_STAR = Word((-1,))

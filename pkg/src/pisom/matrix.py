"""Matricial order: word vectors, their Gram matrices, and the order they
generate.

A Gram matrix stores the cells w_i* w_j of a word vector.  Factorization
recovery walks the two candidates per diagonal cell and aligns them with
the first row; a matrix has two factorizations exactly when all first
entries of some factorization share a sign, otherwise one.  Successor
generation lifts the scalar hollowing coordinatewise (2^k choice vectors),
so a cap on k guards the enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce as _fold
from itertools import product as _cartesian

from .order import hollow_choices, sa_factorizations, unit_strip
from .structure import factor_a0, is_irreducible, sa_canonical_d1
from .words import (
    GEN,
    GEN_STAR,
    UNIT_MINUS,
    UNIT_PLUS,
    DomainError,
    Word,
    format_word,
    member,
    parse_word,
)

DEFAULT_K_CAP = 8

WordVector = tuple  # of Word


class KCapError(DomainError):
    """Successor enumeration requested above the configured k cap."""


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """k x k array of cells w_i* w_j, with an optional witness vector.

    Equality and hashing use the cells only; the witness is bookkeeping.
    """

    cells: tuple[tuple[Word, ...], ...]
    witness: tuple[Word, ...] | None = field(default=None)

    @property
    def k(self) -> int:
        return len(self.cells)

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        rows = "; ".join(",".join(format_word(c) for c in row) for row in self.cells)
        return "GramMatrix[%s]" % rows

    def is_selfadjoint(self) -> bool:
        k = self.k
        return all(self.cells[j][i] == self.cells[i][j].star for i in range(k) for j in range(k))

    def tagged(self, tag: str) -> bool:
        return all(member(c, tag) for row in self.cells for c in row)

    def sort_key(self):
        return tuple(tuple(c) for row in self.cells for c in row)

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "cells": [[format_word(c) for c in row] for row in self.cells],
                "witness": [format_word(w) for w in self.witness] if self.witness else None,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "GramMatrix":
        obj = json.loads(text)
        cells = tuple(tuple(parse_word(c) for c in row) for row in obj["cells"])
        wit = obj.get("witness")
        witness = tuple(parse_word(w) for w in wit) if wit else None
        g = cls(cells, witness)
        if g.k != int(obj["k"]) or any(len(row) != g.k for row in cells):
            raise DomainError("ragged or mislabelled gram matrix")
        return g


def gram(v) -> GramMatrix:
    """Gram matrix of a word vector."""
    v = tuple(v)
    if not v:
        raise DomainError("empty word vector")
    stars = [w.star for w in v]
    cells = tuple(tuple(stars[i] * v[j] for j in range(len(v))) for i in range(len(v)))
    return GramMatrix(cells, v)


def _require_tag(g: GramMatrix, tag: str) -> None:
    if not g.tagged(tag):
        raise DomainError("gram matrix has a cell outside %s" % tag)


def factor_gram(g: GramMatrix) -> tuple[tuple[Word, ...], ...]:
    """All word vectors whose Gram matrix equals g, negative-start first.

    Cardinality is 2 exactly when some factorization has uniform
    first-entry signs, else 1.
    """
    k = g.k
    if not g.is_selfadjoint():
        raise DomainError("gram matrix is not selfadjoint")
    diag_opts = [sa_factorizations(g.cells[i][i]) for i in range(k)]
    found: set[tuple[Word, ...]] = set()
    for first in diag_opts[0]:
        vec = [first]
        branches = [vec]
        for i in range(1, k):
            target = g.cells[0][i]
            new_branches = []
            for br in branches:
                for cand in diag_opts[i]:
                    if br[0].star * cand == target:
                        new_branches.append(br + [cand])
            branches = new_branches
        for br in branches:
            if gram(br).cells == g.cells:
                found.add(tuple(br))
    if not found:
        raise DomainError("inconsistent gram matrix: no factorization")
    return tuple(sorted(found, key=lambda v: (v[0][0] > 0, v)))


def _uniform_sign(vec) -> int:
    """-1 or +1 when all first entries share that sign, else 0."""
    signs = {1 if w[0] > 0 else -1 for w in vec}
    return signs.pop() if len(signs) == 1 else 0


def matrix_successors(
    g: GramMatrix, k_cap: int = DEFAULT_K_CAP, require: str | None = "D1"
) -> set[GramMatrix]:
    """Gram matrices one basic step above g; empty iff g is maximal.

    ``require`` pins the subsemigroup the cells must lie in; pass None to
    work at the ambient level (immediate predecessors of a D1 matrix may
    fall outside it).
    """
    if require:
        _require_tag(g, require)
    if g.k > k_cap:
        raise KCapError("successor enumeration capped at k = %d" % k_cap)
    out: set[GramMatrix] = set()
    for vec in factor_gram(g):
        if not _uniform_sign(vec):
            continue
        for choice in _cartesian(*(hollow_choices(w) for w in vec)):
            h = gram(choice)
            if h != g:
                out.add(h)
    return out


def matrix_leq(
    g1: GramMatrix, g2: GramMatrix, k_cap: int = DEFAULT_K_CAP, require: str | None = "D1"
) -> bool:
    """Reachability along basic steps; diagonal weight strictly drops."""
    if g1.k != g2.k:
        raise DomainError("rank mismatch: %d vs %d" % (g1.k, g2.k))
    if require:
        _require_tag(g1, require)
        _require_tag(g2, require)
    bound = sum(g2.cells[i][i].weight for i in range(g2.k))
    frontier = {g1}
    seen: set[GramMatrix] = set()
    while frontier:
        if g2 in frontier:
            return True
        seen |= frontier
        nxt: set[GramMatrix] = set()
        for x in frontier:
            for y in matrix_successors(x, k_cap, require=None):
                if y not in seen and sum(y.cells[i][i].weight for i in range(y.k)) >= bound:
                    nxt.add(y)
        frontier = nxt
    return False


def immediate_predecessors(g: GramMatrix) -> tuple[GramMatrix, GramMatrix]:
    """The exactly-two elements immediately below g."""
    _require_tag(g, "D1")
    vec = factor_gram(g)[0]

    def push(unit_word, double):
        shifted = tuple(unit_word * w for w in vec)
        cand = gram(shifted)
        if cand != g:
            return cand
        return gram(tuple(double * w for w in vec))

    lower_neg = push(GEN_STAR, Word((-2,)))
    lower_pos = push(GEN, Word((2,)))
    assert lower_neg != lower_pos
    return lower_neg, lower_pos


# -- case analysis -----------------------------------------------------------


@dataclass(frozen=True)
class MatrixClassification:
    case: str  # "Case1" | "Case2" | "Case3"
    maximal: bool
    m: tuple[Word, ...] | None = None
    a: tuple[Word, ...] | None = None
    lam: tuple[Word, ...] | None = None

    def to_json(self) -> str:
        def vec(v):
            return [format_word(w) for w in v] if v else None

        return json.dumps(
            {
                "case": self.case,
                "maximal": self.maximal,
                "m": vec(self.m),
                "a": vec(self.a),
                "lambda": vec(self.lam),
            }
        )


def _left_quotients(w: Word, m: Word) -> list[Word]:
    """All x with x * m == w.

    Products of reduced words lose at most two letters at the junction, so
    candidates are prefixes of w with up to two adjusted trailing entries.
    """
    lw, lm = len(w), len(m)
    cands: list[tuple[int, ...]] = []
    L = lw - lm
    if L >= 1:
        cands.append(tuple(w[:L]))
    L = lw - lm + 1
    if 1 <= L <= lw:
        cands.append(tuple(w[: L - 1]) + (w[L - 1] - m[0],))
    L = lw - lm + 2
    if 2 <= L <= lw + 1:
        for e in (1, -1):
            cands.append(tuple(w[: L - 2]) + (w[L - 2] - e - m[0], e))
    if lm >= 2 and 1 <= lw - lm + 2 <= lw:
        L = lw - lm + 2
        cands.append(tuple(w[: L - 1]) + (w[L - 1] - m[0] - m[1],))
    out = []
    for entries in cands:
        try:
            x = Word(entries)
        except Exception:
            continue
        if x * m == w and x not in out:
            out.append(x)
    return out


def classify_matrix(g: GramMatrix) -> MatrixClassification:
    """Case analysis of a D1 Gram matrix by the middle exponent sum.

    Case1: a hollowed idempotent threads the matrix (tau of w* is 1);
    Case2: a D0 Gram core conjugated into D1 (max tau of w* is 0);
    Case3: an irreducible D0 core, or no uniform factorization at all, in
    which case the matrix is maximal.
    """
    _require_tag(g, "D1")
    facts = factor_gram(g)
    taus = {vec[0].star.tau for vec in facts}
    top = max(taus)

    if top == 1:
        vec = next(v for v in facts if v[0].star.tau == 1)
        m = []
        for w in vec:
            assert w == GEN_STAR or w[0] <= -2, w
            m.append(unit_strip(w))
        for i in range(g.k):
            for j in range(g.k):
                if m[i].star * UNIT_MINUS * m[j] != g.cells[i][j]:
                    raise DomainError("case-1 recomposition failed")
        return MatrixClassification("Case1", False, m=tuple(m))

    if top == 0:
        vec = next(v for v in facts if v[0].star.tau == 0)
        a, m = [], []
        for w in vec:
            if not member(w, "D1"):
                raise DomainError("case-2 factor %s escapes D1" % (w,))
            factors = factor_a0(w)
            cut = next((i for i, f in enumerate(factors) if f == UNIT_MINUS), len(factors))
            head, tail = factors[:cut], factors[cut:]
            a.append(_fold(lambda x, y: x * y, head) if head else UNIT_PLUS)
            m.append(_fold(lambda x, y: x * y, tail) if tail else UNIT_PLUS)
        for i in range(g.k):
            for j in range(g.k):
                if m[i].star * (a[i].star * a[j]) * m[j] != g.cells[i][j]:
                    raise DomainError("case-2 recomposition failed")
        return MatrixClassification("Case2", False, a=tuple(a), m=tuple(m))

    uniform = [v for v in facts if _uniform_sign(v)]
    if not uniform:
        return MatrixClassification("Case3", True)
    for vec in uniform:
        flanks = []
        for i in range(g.k):
            _, flank = sa_canonical_d1(g.cells[i][i])
            flanks.append(flank if flank is not None else UNIT_PLUS)
        options = [_left_quotients(vec[i], flanks[i]) for i in range(g.k)]
        if any(not opt for opt in options):
            continue
        for lam in _cartesian(*options):
            ok = True
            for i in range(g.k):
                for j in range(g.k):
                    core = lam[i].star * lam[j]
                    if core == UNIT_PLUS or not (member(core, "D0") and is_irreducible(core)):
                        ok = False
                        break
                    if flanks[i].star * core * flanks[j] != g.cells[i][j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return MatrixClassification("Case3", False, m=tuple(flanks), lam=tuple(lam))
    raise DomainError("no case-3 decomposition found")


# -- partitions and the block calculus ---------------------------------------


def partitions(d: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All ordered d-tuples of nonnegative integers summing to k."""
    if d < 1 or k < 1:
        raise DomainError("partitions need d, k >= 1")

    def rec(slots, total):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in rec(slots - 1, total - first):
                yield (first,) + rest

    return tuple(rec(d, k))


def identity_partition(k: int) -> tuple[int, ...]:
    return (1,) * k


def compose_partitions(sigma, tau):
    """sigma o tau: sum sigma's parts over tau's blocks."""
    out, pos = [], 0
    for t in tau:
        out.append(sum(sigma[pos : pos + t]))
        pos += t
    if pos != len(sigma):
        raise DomainError("partition composition mismatch")
    return tuple(out)


def iota_tau(g: GramMatrix, tau) -> GramMatrix:
    """Block-expand a d x d Gram matrix along a partition of k.

    Each index j is repeated tau_j times; the result is again a Gram
    matrix, of the vector repeating each witness word accordingly.
    """
    tau = tuple(int(t) for t in tau)
    if len(tau) != g.k or any(t < 0 for t in tau):
        raise DomainError("partition has %d parts for a rank-%d matrix" % (len(tau), g.k))
    if sum(tau) < 1:
        raise DomainError("empty expansion")
    idx = [j for j, t in enumerate(tau) for _ in range(t)]
    cells = tuple(tuple(g.cells[idx[i]][idx[j]] for j in range(len(idx))) for i in range(len(idx)))
    witness = tuple(g.witness[j] for j in idx) if g.witness else None
    return GramMatrix(cells, witness)


def conj_delta(v, g: GramMatrix) -> GramMatrix:
    """Diagonal conjugation: cells become n_i* c_ij n_j."""
    v = tuple(v)
    if len(v) != g.k:
        raise DomainError("vector length %d does not match rank %d" % (len(v), g.k))
    stars = [w.star for w in v]
    cells = tuple(
        tuple(stars[i] * g.cells[i][j] * v[j] for j in range(g.k)) for i in range(g.k)
    )
    witness = tuple(g.witness[i] * v[i] for i in range(g.k)) if g.witness else None
    return GramMatrix(cells, witness)

"""Numeric verification at concrete matrix partial isometries.

Words evaluate to products of powers of a matrix v and its adjoint;
order relations then turn into positive-semidefiniteness of differences,
checked with a Hermitian eigensolver.  Default tolerances: 1e-9 for PSD
acceptance, 1e-12 for algebraic identities (double precision eigensolves
on matrices up to 64 x 64 resolve Hermitian spectra well below 1e-11 of
the norm).

Also houses generator assignments: multiplicative *-maps on the
prefix-sum-nonpositive subsemigroup given by images of its free
generators.  The committed counterexample fixture (an order-preserving
scalar assignment whose 2-amplification fails) lives here as a rule,
because any truly finite-support order-preserving assignment with a
nonzero image of (-4,4) provably cannot exist; see
scripts/find_order_fixture.py.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import reduce as _fold

import numpy as np

from .matrix import GramMatrix, gram, matrix_successors
from .maps import alpha, is_irr_plus
from .order import hollow_successors
from .structure import factor_d0
from .words import (
    UNIT_MINUS,
    UNIT_PLUS,
    DomainError,
    Word,
    format_word,
    member,
    parse_word,
)

PSD_TOL = 1e-9
IDENTITY_TOL = 1e-12
CONJUGATION_TOL = 1e-10
DIM_CAP = 64


class InvalidRepError(ValueError):
    """The supplied matrix is not a partial isometry within tolerance."""


def matrix_to_json(m) -> str:
    m = np.asarray(m, dtype=complex)
    return json.dumps({"n": m.shape[0], "re": m.real.tolist(), "im": m.imag.tolist()})


def matrix_from_json(text: str):
    obj = json.loads(text)
    m = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
    if m.shape != (obj["n"], obj["n"]):
        raise DomainError("matrix JSON shape mismatch")
    return m


def opnorm(m) -> float:
    return float(np.linalg.norm(np.asarray(m, dtype=complex), 2))


@dataclass(frozen=True)
class PartialIsometryRep:
    """A matrix v meant to satisfy v v* v = v up to tol.

    Construction does not validate (negative controls need broken reps);
    use :meth:`checked` when validity is required.
    """

    v: np.ndarray
    tol: float = IDENTITY_TOL

    @property
    def n(self) -> int:
        return self.v.shape[0]

    def defect(self) -> float:
        v = np.asarray(self.v, dtype=complex)
        return opnorm(v @ v.conj().T @ v - v)

    def is_valid(self) -> bool:
        return self.defect() <= self.tol

    @classmethod
    def checked(cls, v, tol: float = IDENTITY_TOL) -> "PartialIsometryRep":
        rep = cls(np.asarray(v, dtype=complex), tol)
        if not rep.is_valid():
            raise InvalidRepError("||v v* v - v|| = %.3e exceeds %.1e" % (rep.defect(), tol))
        return rep


def random_partial_isometry(n: int, seed: int) -> PartialIsometryRep:
    """Deterministic random partial isometry: unitary factors of a random
    complex matrix glued across a random-rank cut."""
    if n < 1:
        raise DomainError("dimension must be positive")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    u, _, vh = np.linalg.svd(z)
    r = int(rng.integers(0, n + 1))
    v = u[:, :r] @ vh[:r, :] if r else np.zeros((n, n), dtype=complex)
    return PartialIsometryRep.checked(v)


def eval_word(rep: PartialIsometryRep, w: Word):
    """Product of powers: entry k > 0 contributes v^k, k < 0 gives (v*)^-k."""
    v = np.asarray(rep.v, dtype=complex)
    vs = v.conj().T
    out = None
    for e in w:
        m = np.linalg.matrix_power(v if e > 0 else vs, abs(e))
        out = m if out is None else out @ m
    return out


def min_eig(m) -> float:
    h = np.asarray(m, dtype=complex)
    h = (h + h.conj().T) / 2
    return float(np.linalg.eigvalsh(h)[0])


def psd_check(m, tol: float = PSD_TOL) -> bool:
    """Hermitian within tol and minimum eigenvalue >= -tol."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError("psd_check needs a square matrix")
    if opnorm(m - m.conj().T) > tol:
        return False
    return min_eig(m) >= -tol


# -- reports ------------------------------------------------------------------


@dataclass
class Report:
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "Report") -> "Report":
        return Report(self.total + other.total, self.failures + other.failures)

    def to_json(self) -> str:
        return json.dumps({"total": self.total, "failures": self.failures})


def verify_order_rep(rep_or_assign, pairs, tol: float = PSD_TOL) -> Report:
    """PSD-check eval(upper) - eval(lower) for validated order pairs."""
    ev = _evaluator(rep_or_assign)
    rpt = Report()
    for lower, upper in pairs:
        diff = ev(upper) - ev(lower)
        rpt.total += 1
        if not psd_check(diff, tol):
            rpt.failures.append(
                {
                    "relation": "%s <= %s" % (format_word(lower), format_word(upper)),
                    "min_eig": min_eig(diff),
                }
            )
    return rpt


def _block_eval(ev, g: GramMatrix):
    return np.block([[ev(g.cells[i][j]) for j in range(g.k)] for i in range(g.k)])


def verify_k_order(rep_or_assign, k: int, relations, tol: float = PSD_TOL, dim_cap: int = DIM_CAP) -> Report:
    """PSD-check the k n x k n block differences of basic matrix relations."""
    ev = _evaluator(rep_or_assign)
    n = rep_or_assign.n
    if k * n > dim_cap:
        raise DomainError("block dimension %d exceeds cap %d" % (k * n, dim_cap))
    rpt = Report()
    for lower, upper in relations:
        if lower.k != k or upper.k != k:
            raise DomainError("relation rank differs from k = %d" % k)
        diff = _block_eval(ev, upper) - _block_eval(ev, lower)
        rpt.total += 1
        if not psd_check(diff, tol):
            rpt.failures.append(
                {
                    "relation": {"lower": json.loads(lower.to_json()), "upper": json.loads(upper.to_json())},
                    "min_eig": min_eig(diff),
                }
            )
    return rpt


def verify_schwarz(rep: PartialIsometryRep, samples, tol: float = PSD_TOL) -> Report:
    """Check eval(alpha(a* a)) - eval(alpha(a))* eval(alpha(a)) is PSD."""
    rpt = Report()
    for a in samples:
        img = eval_word(rep, alpha(a))
        diff = eval_word(rep, alpha(a.star * a)) - img.conj().T @ img
        rpt.total += 1
        if not psd_check(diff, tol):
            rpt.failures.append({"relation": "schwarz at %s" % format_word(a), "min_eig": min_eig(diff)})
    return rpt


def verify_conjugation(rep: PartialIsometryRep, samples, tol: float = CONJUGATION_TOL) -> Report:
    """Check v* eval(n) v agrees with eval of the conjugated word."""
    v = np.asarray(rep.v, dtype=complex)
    rpt = Report()
    for n_word in samples:
        residual = opnorm(v.conj().T @ eval_word(rep, n_word) @ v - eval_word(rep, alpha(n_word)))
        rpt.total += 1
        if residual > tol:
            rpt.failures.append({"relation": "conjugation at %s" % format_word(n_word), "residual": residual})
    return rpt


# -- generator assignments ----------------------------------------------------


@dataclass
class GeneratorAssignment:
    """Images of the free generators of the prefix-sum-nonpositive words.

    ``images`` is a finite table; ``rule`` (optional) computes images for
    generators outside it; anything else maps to zero.  The unit (-1,1)
    always maps to the identity.
    """

    n: int
    images: dict = field(default_factory=dict)
    rule: object = None

    def __post_init__(self):
        for g, m in self.images.items():
            m = np.asarray(m, dtype=complex)
            if m.shape != (self.n, self.n):
                raise DomainError("image of %s has wrong shape" % format_word(g))
            self.images[g] = m
            if not is_irr_plus(g) or g == UNIT_PLUS:
                raise DomainError("%s is not a non-unit plus-irreducible" % format_word(g))
        for g, m in self.images.items():
            other = self.images.get(g.star)
            if other is not None and opnorm(other - m.conj().T) > IDENTITY_TOL:
                raise DomainError("star-incompatible images at %s" % format_word(g))

    def image(self, g: Word):
        if g == UNIT_PLUS:
            return np.eye(self.n, dtype=complex)
        if g in self.images:
            return self.images[g]
        if self.rule is not None:
            return np.asarray(self.rule(g), dtype=complex)
        return np.zeros((self.n, self.n), dtype=complex)

    def __call__(self, d: Word):
        """Evaluate a word of the generated subsemigroup multiplicatively."""
        if not member(d, "D0"):
            raise DomainError("assignments evaluate D0 words only, got %s" % format_word(d))
        return _fold(lambda a, b: a @ b, (self.image(f) for f in factor_d0(d)))


def _evaluator(rep_or_assign):
    """Per-call memoized evaluation; relation batches reuse many cells."""
    if isinstance(rep_or_assign, PartialIsometryRep):
        base = lambda w: eval_word(rep_or_assign, w)
    elif isinstance(rep_or_assign, GeneratorAssignment):
        base = rep_or_assign
    else:
        raise DomainError("expected a partial isometry rep or a generator assignment")
    cache: dict[Word, np.ndarray] = {}

    def ev(w):
        out = cache.get(w)
        if out is None:
            out = cache[w] = base(w)
        return out

    return ev


# -- the order-but-not-2-order fixture ----------------------------------------

_DEPTH_CACHE: dict[Word, int] = {UNIT_PLUS: 0}
OVERRIDE_ROOT = Word((-4, 3, -3, 4))


def hollow_depth(a: Word) -> int:
    """Number of hollowing steps from a selfadjoint irreducible of D0 down
    to the unit.  The chain is a path: each element has one successor."""
    todo = []
    cur = a
    while cur not in _DEPTH_CACHE:
        todo.append(cur)
        succ = hollow_successors(cur)
        assert len(succ) == 1, (cur, succ)
        (cur,) = succ
    d = _DEPTH_CACHE[cur]
    for w in reversed(todo):
        d += 1
        _DEPTH_CACHE[w] = d
    return _DEPTH_CACHE[a]


def square_hollow(s: Word) -> Word:
    """The single element one step above s* s (strip one unit off s)."""
    succ = hollow_successors(s.star * s)
    assert len(succ) == 1
    (out,) = succ
    return out


def sa_depth_fixture(c: float = 0.5) -> GeneratorAssignment:
    """Scalar order representation that is not a 2-order map.

    Selfadjoint generators map to c**depth, except along the
    square-hollow orbit of (-4,3,-3,4) where the exponent doubles from 4,
    pinning the images of (-4,3,-3,4) and (-4,2,-2,4) to the same value.
    Non-selfadjoint generators map to zero, which kills the off-diagonal
    witnesses needed for 2-positivity while every scalar hollowing step
    stays monotone.
    """
    if not 0 < c < 1:
        raise DomainError("fixture parameter must be in (0, 1)")

    def rule(g: Word):
        if not g.is_selfadjoint():
            return np.zeros((1, 1))
        t, j = OVERRIDE_ROOT, 0
        while t.weight <= g.weight:
            if t == g:
                return np.array([[c ** (4 * 2**j)]])
            t = square_hollow(t)
            j += 1
        return np.array([[c ** hollow_depth(g)]])

    return GeneratorAssignment(n=1, rule=rule)


def load_assignment(path) -> GeneratorAssignment:
    with open(path) as fh:
        obj = json.load(fh)
    if obj.get("kind") == "sa_depth_rule":
        return sa_depth_fixture(float(obj["c"]))
    images = {
        parse_word(lit): np.asarray(m["re"], dtype=float) + 1j * np.asarray(m["im"], dtype=float)
        for lit, m in obj["images"].items()
    }
    return GeneratorAssignment(n=int(obj["n"]), images=images)


def displayed_block_relation() -> tuple[GramMatrix, GramMatrix]:
    """The 2 x 2 basic relation on which the fixture fails."""
    lower = gram((parse_word("(-2,3)"), parse_word("(-3,4)")))
    upper = gram((parse_word("(-1,3)"), parse_word("(-2,4)")))
    return lower, upper


# -- deterministic relation pools ---------------------------------------------


def iter_words(max_weight: int):
    """All reduced words of weight up to max_weight, depth first."""

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


def sa_pool(half_weight: int, within: str = "D1"):
    """Selfadjoint elements of the tagged semigroup, from small factors."""
    out = set()
    for u in iter_words(half_weight):
        for n in (u.star * u, u.star * UNIT_MINUS * u, u.star * UNIT_PLUS * u):
            if member(n, within):
                out.add(n)
    return sorted(out)


def scalar_relations(count: int, seed: int, half_weight: int = 7, within: str = "D1"):
    """Deterministic sample of basic order pairs (n, successor)."""
    pool = []
    for n in sa_pool(half_weight, within):
        for m in sorted(hollow_successors(n)):
            if within == "D0" and not member(m, "D0"):
                continue
            pool.append((n, m))
    rng = random.Random(seed)
    if count <= len(pool):
        return rng.sample(pool, count)
    return [rng.choice(pool) for _ in range(count)]


def matrix_relations(count: int, seed: int, ks=(2, 3), entry_weight: int = 4):
    """Deterministic sample of basic matrix relations (G, successor)."""
    words = [w for w in iter_words(entry_weight)]
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < 100000:
        attempts += 1
        k = rng.choice(ks)
        vec = tuple(rng.choice(words) for _ in range(k))
        g = gram(vec)
        if not g.tagged("D1"):
            continue
        succ = sorted(matrix_successors(g), key=GramMatrix.sort_key)
        if not succ:
            continue
        out.append((g, rng.choice(succ)))
    if len(out) < count:
        raise DomainError("could not sample enough matrix relations")
    return out

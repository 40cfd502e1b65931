"""Verma modules M(lambda, c, c0, c1) for the W(2,2) algebra.

The highest weight vector v satisfies ``L(k) v = I(k) v = 0`` for k > 0,
``L(0) v = lambda v``, ``I(0) v = c0 v``, and the central elements act as the
scalars c and c1.  Level n is the weight space of L(0)-weight ``lambda - n``;
its basis is indexed by pairs of partitions (one for the I modes, one for the
L modes) of total size n, matching the PBW words ``I(-j1)..I(-jr)
L(-k1)..L(-ks) v``.

The generator action is computed by straightening: a generator is commuted
through a basis word with the defining bracket until it either lands in
normal position or hits the highest weight vector.  Everything is exact, and
works identically over rational parameters and over the symbolic polynomial
ring in (lambda, c, c0, c1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple, Optional

from . import linalg
from .algebra import Generator, I, L, LieElement, bracket_gen
from .scalars import PARAM_POLYS, QQ

__all__ = [
    "DEFAULT_MAX_LEVEL",
    "LevelBoundError",
    "HWParams",
    "BasisMonomial",
    "EMPTY_MONOMIAL",
    "VermaVector",
    "partitions",
    "partition_pairs",
    "level_basis",
    "act",
    "act_element",
    "apply_word",
    "highest_weight_vector",
    "GramMatrix",
    "gram_matrix",
    "shapovalov_det",
    "SingularVector",
    "singular_vectors",
    "is_reducible",
    "I0Report",
    "i0_matrix",
    "first_degenerate_level",
]

#: Default bound on the level of any weight space that is materialised.
DEFAULT_MAX_LEVEL = 8


class LevelBoundError(ValueError):
    """A requested level exceeded the configured bound."""


@dataclass(frozen=True)
class HWParams:
    """Highest weight data (lambda, c, c0, c1) over a scalar ring."""

    lam: object
    c: object
    c0: object
    c1: object
    ring: object

    @classmethod
    def rational(cls, lam, c, c0, c1) -> "HWParams":
        """Exact rational parameter point."""
        q = QQ.coerce
        return cls(q(lam), q(c), q(c0), q(c1), QQ)

    @classmethod
    def symbolic(cls) -> "HWParams":
        """Generic parameters: the four polynomial indeterminates."""
        P = PARAM_POLYS
        return cls(P.lam, P.c, P.c0, P.c1, P)


class BasisMonomial(NamedTuple):
    """A level basis element: I-mode partition and L-mode partition.

    ``i_part = (j1 >= j2 >= ...)`` stands for the factors I(-j1) I(-j2) ...
    and likewise ``l_part`` for the L factors; the monomial is the
    corresponding PBW word applied to the highest weight vector.
    """

    i_part: tuple
    l_part: tuple

    def level(self) -> int:
        return sum(self.i_part) + sum(self.l_part)

    def word(self):
        return tuple(I(-j) for j in self.i_part) + tuple(L(-k) for k in self.l_part)

    def split_head(self):
        """The leftmost factor and the remaining (still valid) monomial."""
        if self.i_part:
            return I(-self.i_part[0]), BasisMonomial(self.i_part[1:], self.l_part)
        return L(-self.l_part[0]), BasisMonomial((), self.l_part[1:])

    def insert_i(self, j: int) -> "BasisMonomial":
        return BasisMonomial(tuple(sorted(self.i_part + (j,), reverse=True)), self.l_part)

    def __str__(self) -> str:
        if not self.i_part and not self.l_part:
            return "1"
        return "".join(str(g) for g in self.word())


EMPTY_MONOMIAL = BasisMonomial((), ())


def partitions(n: int, max_part: Optional[int] = None):
    """All partitions of n as nonincreasing tuples, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_pairs(n: int):
    """All two-colored partitions of n as (i_part, l_part) tuples."""
    for s in range(n, -1, -1):
        for ip in partitions(s):
            for lp in partitions(n - s):
                yield BasisMonomial(ip, lp)


def level_basis(n: int, max_level: int = DEFAULT_MAX_LEVEL):
    """The canonical ordered basis of level n.

    The order is descending lexicographic on (i_part, l_part); for n = 2 it
    reads I(-2), I(-1)I(-1), I(-1)L(-1), L(-2), L(-1)L(-1).
    """
    if n < 0 or n > max_level:
        raise LevelBoundError(f"level {n} outside [0, {max_level}]")
    return sorted(partition_pairs(n), reverse=True)


class VermaVector:
    """A homogeneous element of one level, as coordinates over the basis."""

    __slots__ = ("level", "coords")

    def __init__(self, level: int, coords=None):
        clean = {}
        if coords:
            for mono, coef in coords.items():
                if coef:
                    clean[mono] = coef
        self.level = level
        self.coords = clean

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __add__(self, other: "VermaVector") -> "VermaVector":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.level != other.level:
            raise ValueError("cannot add vectors of different levels")
        out = dict(self.coords)
        for mono, coef in other.coords.items():
            s = out.get(mono, 0) + coef
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return VermaVector(self.level, out)

    def __neg__(self) -> "VermaVector":
        return VermaVector(self.level, {m: -c for m, c in self.coords.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def __rmul__(self, scalar) -> "VermaVector":
        if not scalar:
            return VermaVector(self.level)
        return VermaVector(self.level, {m: scalar * c for m, c in self.coords.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaVector):
            return NotImplemented
        if not self.coords and not other.coords:
            return True
        return self.level == other.level and self.coords == other.coords

    def __hash__(self):
        return hash((self.level, frozenset(self.coords.items())))

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        bits = []
        for mono in sorted(self.coords, reverse=True):
            bits.append(f"{self.coords[mono]}*[{mono}]v")
        return " + ".join(bits)

    __repr__ = __str__


def highest_weight_vector() -> VermaVector:
    return VermaVector(0, {EMPTY_MONOMIAL: Fraction(1)})


@lru_cache(maxsize=None)
def _act_on_monomial(g: Generator, mono: BasisMonomial, p: HWParams):
    """Coordinates of g acting on one basis monomial, as (monomial, coeff)
    pairs.  This is the straightening recursion; results are memoised per
    parameter point."""
    kind, k = g.kind, g.index
    if kind == "C":
        return ((mono, p.c),)
    if kind == "C1":
        return ((mono, p.c1),)
    i_part, l_part = mono
    if kind == "L" and k == 0:
        return ((mono, p.lam - mono.level()),)
    if kind == "I":
        if k < 0:
            return ((mono.insert_i(-k), Fraction(1)),)
        if not l_part:
            # I(k) commutes through the I block and meets v directly.
            return ((mono, p.c0),) if k == 0 else ()
    else:  # kind == "L"
        if k < 0 and not i_part and (not l_part or -k >= l_part[0]):
            return ((BasisMonomial((), (-k,) + l_part), Fraction(1)),)
        if k > 0 and not i_part and not l_part:
            return ()
    head, tail = mono.split_head()
    out = {}

    def accumulate(pairs, factor):
        for m, s in pairs:
            val = out.get(m, 0) + factor * s
            if val:
                out[m] = val
            else:
                out.pop(m, None)

    for m2, s2 in _act_on_monomial(g, tail, p):
        accumulate(_act_on_monomial(head, m2, p), s2)
    for gen2, bc in bracket_gen(g, head).terms.items():
        if gen2.kind == "C":
            accumulate(((tail, p.c),), bc)
        elif gen2.kind == "C1":
            accumulate(((tail, p.c1),), bc)
        else:
            accumulate(_act_on_monomial(gen2, tail, p), bc)
    return tuple(out.items())


def act(g: Generator, w: VermaVector, p: HWParams) -> VermaVector:
    """The module action of one generator on a homogeneous vector."""
    new_level = w.level - g.weight
    out = {}
    for mono, coef in w.coords.items():
        for m2, s2 in _act_on_monomial(g, mono, p):
            val = out.get(m2, 0) + coef * s2
            if val:
                out[m2] = val
            else:
                out.pop(m2, None)
    return VermaVector(max(new_level, 0), out)


def act_element(x: LieElement, w: VermaVector, p: HWParams) -> VermaVector:
    """Linear extension of :func:`act` to algebra elements.

    Only meaningful when every term of x has the same weight (otherwise the
    result would not be homogeneous)."""
    weights = {g.weight for g in x.terms}
    if len(weights) > 1:
        raise ValueError("cannot act by a mixed-weight element on one level")
    level = w.level - (weights.pop() if weights else 0)
    result = VermaVector(max(level, 0))
    for g, coef in x.terms.items():
        result = result + coef * act(g, w, p)
    return result


def apply_word(word, w: VermaVector, p: HWParams) -> VermaVector:
    """Apply a product of generators, rightmost factor first."""
    for g in reversed(tuple(word)):
        w = act(g, w, p)
    return w


@dataclass
class GramMatrix:
    """The contravariant form restricted to one level, in canonical order."""

    level: int
    basis: list
    entries: list

    def is_symmetric(self) -> bool:
        n = len(self.basis)
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )


def _pairing(row_mono: BasisMonomial, col_vec: VermaVector, p: HWParams):
    """<row_mono at v, col_vec> via the transpose anti-involution."""
    vec = col_vec
    for g in row_mono.word():
        vec = act(Generator(g.kind, -g.index), vec, p)
    value = vec.coords.get(EMPTY_MONOMIAL, None)
    return value if value is not None else p.ring.zero


def gram_matrix(n: int, p: HWParams, max_level: int = DEFAULT_MAX_LEVEL) -> GramMatrix:
    """Matrix of the contravariant form on level n in the canonical basis."""
    basis = level_basis(n, max_level)
    units = [VermaVector(n, {b: Fraction(1)}) for b in basis]
    entries = [[_pairing(bi, uj, p) for uj in units] for bi in basis]
    return GramMatrix(level=n, basis=basis, entries=entries)


def shapovalov_det(n: int, p: HWParams, max_level: int = DEFAULT_MAX_LEVEL):
    """Determinant of the level-n Gram matrix in the canonical basis order."""
    gram = gram_matrix(n, p, max_level)
    return linalg.det(gram.entries, p.ring)


@dataclass(frozen=True)
class SingularVector:
    """A singular vector together with its I(0)-eigenvector status."""

    vector: VermaVector
    i0_eigenvector: bool


def _action_rows(g: Generator, n: int, p: HWParams, max_level: int):
    """Rows of the matrix of act(g): level n -> level n - weight(g)."""
    src = level_basis(n, max_level)
    tgt_level = n - g.weight
    if tgt_level < 0:
        return []
    tgt = level_basis(tgt_level, max_level)
    index = {b: i for i, b in enumerate(tgt)}
    columns = []
    for b in src:
        vec = act(g, VermaVector(n, {b: Fraction(1)}), p)
        col = [p.ring.zero] * len(tgt)
        for mono, coef in vec.coords.items():
            col[index[mono]] = coef
        columns.append(col)
    return [[columns[j][i] for j in range(len(src))] for i in range(len(tgt))]


def singular_vectors(
    n: int, p: HWParams, max_level: int = DEFAULT_MAX_LEVEL
) -> list[SingularVector]:
    """Exact basis of the level-n vectors annihilated by L(1), L(2), I(1),
    I(2); these four generate the whole positive part, so the result is the
    space of singular vectors at that level."""
    if n < 1:
        raise ValueError("singular vectors live at positive levels")
    if not p.ring.is_field:
        raise TypeError("singular-vector search requires rational parameters")
    basis = level_basis(n, max_level)
    rows = []
    for g in (L(1), L(2), I(1), I(2)):
        rows.extend(_action_rows(g, n, p, max_level))
    kernel = linalg.nullspace(rows, len(basis))
    out = []
    for vec in kernel:
        w = VermaVector(n, {b: coef for b, coef in zip(basis, vec) if coef})
        eigen = act(I(0), w, p) == p.c0 * w
        out.append(SingularVector(vector=w, i0_eigenvector=eigen))
    return out


def is_reducible(c0, c1) -> tuple[bool, Optional[int]]:
    """The stated irreducibility criterion, as a decision procedure.

    Reducible iff some nonzero integer m satisfies
    ``(m^2 - 1)/12 * c1 + 2*c0 = 0``; for c1 = 0 this degenerates to
    ``c0 = 0`` with witness m = 1, otherwise m^2 = 1 - 24*c0/c1 must be a
    positive perfect square.
    """
    c0 = QQ.coerce(c0)
    c1 = QQ.coerce(c1)
    if c1 == 0:
        return (True, 1) if c0 == 0 else (False, None)
    t = 1 - 24 * c0 / c1
    if t.denominator != 1 or t < 1:
        return (False, None)
    root = isqrt(t.numerator)
    if root * root == t.numerator:
        return (True, root)
    return (False, None)


@dataclass
class I0Report:
    """The I(0) action on one level, with its Jordan-structure summary."""

    level: int
    basis: list
    entries: list
    nilpotency_degree: Optional[int]
    nilpotent_within_bound: bool
    diagonalizable: bool


def i0_matrix(n: int, p: HWParams, max_level: int = DEFAULT_MAX_LEVEL) -> I0Report:
    """Matrix of I(0) on level n plus verification that I(0) - c0 is
    nilpotent of degree at most n + 1 (and not diagonalizable for n >= 1)."""
    entries = _action_rows(I(0), n, p, max_level)
    basis = level_basis(n, max_level)
    dim = len(basis)
    shifted = linalg.mat_sub(entries, [[p.c0 if i == j else p.ring.zero for j in range(dim)] for i in range(dim)])
    degree = None
    power = linalg.identity_matrix(dim, p.ring)
    for e in range(1, n + 2):
        power = linalg.mat_mul(power, shifted)
        if linalg.is_zero_matrix(power):
            degree = e
            break
    return I0Report(
        level=n,
        basis=basis,
        entries=entries,
        nilpotency_degree=degree,
        nilpotent_within_bound=degree is not None,
        diagonalizable=linalg.is_zero_matrix(shifted),
    )


def first_degenerate_level(
    p: HWParams, max_level: int = DEFAULT_MAX_LEVEL
) -> Optional[int]:
    """Smallest level with a degenerate contravariant form, if any."""
    for n in range(1, max_level + 1):
        if not shapovalov_det(n, p, max_level):
            return n
    return None

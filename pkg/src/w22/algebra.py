"""The W(2,2) Lie algebra: basis symbols, the defining bracket, grading.

The algebra has basis ``L(n)``, ``I(n)`` for integer ``n`` together with two
central elements ``C`` and ``C1``.  The bracket is

* ``[L(n), L(m)] = (m - n) L(n+m) + delta(n, -m) (n^3 - n)/12 C``
* ``[L(n), I(m)] = (m - n) I(n+m) + delta(n, -m) (n^3 - n)/12 C1``
* ``[I(n), I(m)] = 0``
* ``C`` and ``C1`` are central.

These four relations are the single source of truth for the whole engine;
everything downstream (normal ordering, module actions, Gram matrices) is
derived from :func:`bracket_gen`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "INDEX_LIMIT",
    "IndexLimitError",
    "Generator",
    "L",
    "I",
    "C",
    "C1",
    "LieElement",
    "bracket_gen",
    "bracket",
    "sigma",
    "weight",
    "generator_window",
    "JacobiReport",
    "jacobi_report",
]

#: Construction of a mode with |index| beyond this bound is rejected.  Checked
#: construction turns a silent runaway index into a reported error; every
#: desk-scale computation stays far below it.
INDEX_LIMIT = 10**6

_RANK = {"C": 0, "C1": 1, "I": 2, "L": 3}


class IndexLimitError(ValueError):
    """A generator index exceeded the configured bound."""


@dataclass(frozen=True)
class Generator:
    """One basis symbol: ``L(n)``, ``I(n)``, ``C`` or ``C1``."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _RANK:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("C", "C1"):
            if self.index != 0:
                raise ValueError("central generators carry no index")
        elif abs(self.index) > INDEX_LIMIT:
            raise IndexLimitError(
                f"index {self.index} exceeds the configured bound {INDEX_LIMIT}"
            )

    @property
    def sort_key(self) -> tuple[int, int]:
        """Position in the canonical order C < C1 < I(n) asc < L(n) asc."""
        return (_RANK[self.kind], self.index)

    @property
    def weight(self) -> int:
        """The ad-L(0) eigenvalue: n for L(n) and I(n), 0 for C, C1."""
        return self.index if self.kind in ("L", "I") else 0

    def __lt__(self, other: "Generator") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "Generator") -> bool:
        return self.sort_key <= other.sort_key

    def __str__(self) -> str:
        if self.kind in ("C", "C1"):
            return self.kind
        return f"{self.kind}({self.index})"

    __repr__ = __str__


def L(n: int) -> Generator:
    return Generator("L", n)


def I(n: int) -> Generator:
    return Generator("I", n)


C = Generator("C")
C1 = Generator("C1")


class LieElement:
    """A finite linear combination of generators with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for gen, coef in terms.items():
                if coef:
                    clean[gen] = coef
        self.terms = clean

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    @classmethod
    def of(cls, gen: Generator, coef=Fraction(1)) -> "LieElement":
        return cls({gen: coef})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.terms)
        for gen, coef in other.terms.items():
            s = out.get(gen, 0) + coef
            if s:
                out[gen] = s
            else:
                out.pop(gen, None)
        return LieElement(out)

    def __neg__(self) -> "LieElement":
        return LieElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "LieElement":
        if not scalar:
            return LieElement()
        return LieElement({g: scalar * c for g, c in self.terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for gen in sorted(self.terms, key=lambda g: g.sort_key):
            coef = self.terms[gen]
            bits.append(f"{coef}*{gen}")
        return " + ".join(bits)

    __repr__ = __str__


def _central_coeff(n: int) -> Fraction:
    return Fraction(n**3 - n, 12)


@lru_cache(maxsize=None)
def bracket_gen(a: Generator, b: Generator) -> LieElement:
    """The bracket of two basis symbols, in canonical form."""
    if a.kind in ("C", "C1") or b.kind in ("C", "C1"):
        return LieElement()
    n, m = a.index, b.index
    if a.kind == "I" and b.kind == "I":
        return LieElement()
    if a.kind == "L" and b.kind == "L":
        out = {}
        if m != n:
            out[L(n + m)] = Fraction(m - n)
        if n == -m:
            cc = _central_coeff(n)
            if cc:
                out[C] = cc
        return LieElement(out)
    if a.kind == "L":  # [L(n), I(m)]
        out = {}
        if m != n:
            out[I(n + m)] = Fraction(m - n)
        if n == -m:
            cc = _central_coeff(n)
            if cc:
                out[C1] = cc
        return LieElement(out)
    # [I(n), L(m)] = -[L(m), I(n)]
    return -bracket_gen(b, a)


def _as_element(x) -> LieElement:
    if isinstance(x, Generator):
        return LieElement.of(x)
    if isinstance(x, LieElement):
        return x
    raise TypeError(f"expected a Generator or LieElement, got {type(x).__name__}")


def bracket(x, y) -> LieElement:
    """Bilinear extension of the defining relations."""
    x, y = _as_element(x), _as_element(y)
    out = LieElement()
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            out = out + (ca * cb) * bracket_gen(a, b)
    return out


def sigma(x) -> LieElement:
    """The canonical involution: L(n) -> -L(-n), I(n) -> -I(-n), C -> -C,
    C1 -> -C1.

    It is an automorphism of the algebra (checked by the test suite on an
    index window) and exchanges raising and lowering modes.
    """
    x = _as_element(x)
    out = {}
    for gen, coef in x.terms.items():
        if gen.kind in ("C", "C1"):
            image = gen
        else:
            image = Generator(gen.kind, -gen.index)
        out[image] = out.get(image, 0) - coef
    return LieElement(out)


def weight(g: Generator) -> int:
    """The ad-L(0) weight of a basis symbol."""
    return g.weight


def generator_window(max_index: int) -> list[Generator]:
    """C, C1 and every L(n), I(n) with |n| <= max_index, in canonical order."""
    window = [C, C1]
    window += [I(n) for n in range(-max_index, max_index + 1)]
    window += [L(n) for n in range(-max_index, max_index + 1)]
    return window


@dataclass
class JacobiReport:
    max_index: int
    triples_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def jacobi_report(max_index: int) -> JacobiReport:
    """Evaluate the Jacobi cyclic sum over every ordered generator triple
    with indices in [-max_index, max_index] and report any nonzero results.

    A nonempty violation list would mean the central terms fail to be a
    2-cocycle; the report is expected to be empty.
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    window = generator_window(max_index)
    report = JacobiReport(max_index=max_index)
    for a in window:
        for b in window:
            for c in window:
                s = (
                    bracket(a, bracket_gen(b, c))
                    + bracket(b, bracket_gen(c, a))
                    + bracket(c, bracket_gen(a, b))
                )
                report.triples_checked += 1
                if s:
                    report.violations.append((str(a), str(b), str(c), str(s)))
    return report

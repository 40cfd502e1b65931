"""Universal enveloping algebra with confluent PBW normal ordering.

Monomials are words in the generators; a word is in normal form when it is
nondecreasing in the canonical order ``C < C1 < I(n) (asc) < L(n) (asc)``.
The single rewrite rule ``g*h -> h*g + [g, h]`` (for an adjacent inversion
``g > h``) terminates and is confluent, so every element has a unique normal
form.  With this order the I modes, which commute among themselves, collect
into a block before the L modes, which keeps module actions cheap.

``C`` and ``C1`` stay formal generators here; they are only evaluated to
scalars inside the Verma machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Generator, LieElement, bracket_gen

__all__ = [
    "WORD_LIMIT",
    "WordLengthError",
    "UEElement",
    "normal_order",
    "multiply",
    "commutator",
    "omega",
    "ue",
]

#: Default bound on the length of a word entering the rewriter.
WORD_LIMIT = 64

Word = tuple


class WordLengthError(ValueError):
    """A word exceeded the configured length bound."""


class UEElement:
    """A linear combination of normal-form words (an element of U)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for word, coef in terms.items():
                if coef:
                    clean[word] = coef
        self.terms = clean

    @classmethod
    def zero(cls) -> "UEElement":
        return cls()

    @classmethod
    def one(cls) -> "UEElement":
        return cls({(): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "UEElement") -> "UEElement":
        out = dict(self.terms)
        for word, coef in other.terms.items():
            s = out.get(word, 0) + coef
            if s:
                out[word] = s
            else:
                out.pop(word, None)
        return UEElement(out)

    def __neg__(self) -> "UEElement":
        return UEElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "UEElement") -> "UEElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "UEElement":
        if isinstance(scalar, UEElement):
            return multiply(scalar, self)
        if not scalar:
            return UEElement()
        return UEElement({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, UEElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def max_word_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def word_key(word):
            return (len(word), tuple(g.sort_key for g in word))
        bits = []
        for word in sorted(self.terms, key=word_key):
            coef = self.terms[word]
            name = "".join(str(g) for g in word) if word else "1"
            bits.append(f"{coef}*{name}")
        return " + ".join(bits)

    __repr__ = __str__


def ue(x) -> UEElement:
    """Lift a generator, a Lie element, or a scalar into U."""
    if isinstance(x, UEElement):
        return x
    if isinstance(x, Generator):
        return UEElement({(x,): Fraction(1)})
    if isinstance(x, LieElement):
        return UEElement({(g,): c for g, c in x.terms.items()})
    return UEElement({(): x})


def _find_inversion(word, strategy: str):
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError(f"unknown rewrite strategy {strategy!r}")
    for i in positions:
        if word[i + 1] < word[i]:
            return i
    return None


def normal_order(word, strategy: str = "leftmost", max_len: int = WORD_LIMIT) -> UEElement:
    """Rewrite an arbitrary word into its unique PBW normal form.

    The result is independent of ``strategy`` (leftmost- vs rightmost-
    inversion-first); the invariant is exercised by the test suite on random
    words.  Rewriting never lengthens a word, so only the input length is
    checked against ``max_len``.
    """
    word = tuple(word)
    if len(word) > max_len:
        raise WordLengthError(f"word of length {len(word)} exceeds bound {max_len}")
    result = {}
    pending = [(word, Fraction(1))]
    while pending:
        w, coef = pending.pop()
        i = _find_inversion(w, strategy)
        if i is None:
            s = result.get(w, 0) + coef
            if s:
                result[w] = s
            else:
                result.pop(w, None)
            continue
        head, g, h, tail = w[:i], w[i], w[i + 1], w[i + 2:]
        pending.append((head + (h, g) + tail, coef))
        for gen, bc in bracket_gen(g, h).terms.items():
            pending.append((head + (gen,) + tail, coef * bc))
    return UEElement(result)


def multiply(u: UEElement, v: UEElement, max_len: int = WORD_LIMIT) -> UEElement:
    """The associative product of U, returned in normal form."""
    out = UEElement()
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            out = out + (c1 * c2) * normal_order(w1 + w2, max_len=max_len)
    return out


def commutator(u: UEElement, v: UEElement) -> UEElement:
    return multiply(u, v) - multiply(v, u)


def omega(u: UEElement) -> UEElement:
    """The transpose anti-involution: L(n) -> L(-n), I(n) -> I(-n), fixes C
    and C1, and reverses products.

    It is the adjoint used to define the contravariant form on Verma modules.
    """
    out = UEElement()
    for word, coef in u.terms.items():
        image = tuple(
            g if g.kind in ("C", "C1") else Generator(g.kind, -g.index)
            for g in reversed(word)
        )
        out = out + coef * normal_order(image)
    return out

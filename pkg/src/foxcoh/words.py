"""Free group words, integral group rings, Fox derivatives.

Letters are pairs ``(generator index, sign)`` with sign +1 or -1. As
strings, a lowercase letter is a generator and the matching uppercase
letter is its inverse.
"""

from __future__ import annotations

import random
import string
from typing import Iterable, Mapping, Sequence

from .errors import ManifestError, ParseError, UnknownGeneratorError
from .exactla import IntMatrix, smith_normal_form

DEFAULT_NAMES = string.ascii_lowercase


class FreeWord:
    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable = ()):
        stack = []
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError(f"bad exponent sign {e}")
            if stack and stack[-1] == (g, -e):
                stack.pop()
            else:
                stack.append((g, e))
        self.letters = tuple(stack)
        self._hash = hash(self.letters)

    @classmethod
    def generator(cls, i: int) -> FreeWord:
        return cls([(i, 1)])

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord((g, -e) for g, e in reversed(self.letters))

    __invert__ = inverse

    def __pow__(self, n: int) -> FreeWord:
        if n < 0:
            return self.inverse() ** (-n)
        return FreeWord(self.letters * n)

    def is_identity(self) -> bool:
        return not self.letters

    def generators_used(self) -> set:
        return {g for g, _ in self.letters}

    def to_string(self, names: Sequence[str] = DEFAULT_NAMES) -> str:
        return "".join(names[g] if e > 0 else names[g].upper() for g, e in self.letters)

    def __str__(self):
        return self.to_string() or "1"

    def __repr__(self):
        return f"FreeWord({self.to_string()!r})"


IDENTITY = FreeWord()


def parse_word(text: str, generators: Sequence[str] = DEFAULT_NAMES) -> FreeWord:
    """Parse ``"BabA"``-style words; whitespace is ignored."""
    index = {g: i for i, g in enumerate(generators)}
    letters = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ("a" <= ch.lower() <= "z") or not ch.isascii():
            raise ParseError(f"unexpected character {ch!r} in word", text, pos)
        g = index.get(ch.lower())
        if g is None:
            raise UnknownGeneratorError(
                f"unknown generator {ch.lower()!r} at position {pos} in {text!r}"
            )
        letters.append((g, 1 if ch.islower() else -1))
    return FreeWord(letters)


class GroupRingElement:
    """Finite integer combination of free group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def of(cls, word: FreeWord, coeff: int = 1) -> GroupRingElement:
        return cls({word: coeff})

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.of(IDENTITY, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        return GroupRingElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        other = _coerce(other)
        return GroupRingElement(
            (u * v, a * b)
            for u, a in self.terms.items()
            for v, b in other.terms.items()
        )

    def __rmul__(self, other):
        return _coerce(other) * self

    def items(self):
        """Terms in a deterministic order (shortlex on words)."""
        return sorted(self.terms.items(), key=lambda t: t[0])

    def to_string(self, names: Sequence[str] = DEFAULT_NAMES) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            body = w.to_string(names) or "1"
            mag = abs(c)
            text = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"GroupRingElement({self.to_string()!r})"


def _coerce(x) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, FreeWord):
        return GroupRingElement.of(x)
    if isinstance(x, int):
        return GroupRingElement.of(IDENTITY, x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a group ring element")


def augmentation(u) -> int:
    u = _coerce(u)
    return sum(u.terms.values())


def fox_derivative(i: int, w) -> GroupRingElement:
    """Fox derivative with respect to generator ``i``.

    Extended linearly to group ring elements. For a word the terms are
    the prefixes ending just before each ``x_i`` (sign +) and the
    prefixes ending just after each ``x_i^-1`` (sign -).
    """
    if isinstance(w, GroupRingElement):
        out = GroupRingElement()
        for word, c in w.terms.items():
            out = out + fox_derivative(i, word) * c
        return out
    acc: dict = {}
    prefix: list = []
    for g, e in w.letters:
        if g == i and e > 0:
            p = FreeWord(prefix)
            acc[p] = acc.get(p, 0) + 1
        prefix.append((g, e))
        if g == i and e < 0:
            p = FreeWord(prefix)
            acc[p] = acc.get(p, 0) - 1
    return GroupRingElement(acc)


class Presentation:
    """Finitely presented group on single-letter generator names."""

    def __init__(self, generators: Sequence[str], relators: Sequence[FreeWord], name: str = ""):
        generators = list(generators)
        if len(generators) > 26:
            raise ManifestError("at most 26 generators are supported")
        for g in generators:
            if len(g) != 1 or not ("a" <= g <= "z"):
                raise ManifestError(f"generator names must be single lowercase letters, got {g!r}")
        if len(set(generators)) != len(generators):
            raise ManifestError("duplicate generator names")
        n = len(generators)
        for r in relators:
            bad = [g for g in r.generators_used() if g >= n]
            if bad:
                raise UnknownGeneratorError(f"relator uses undeclared generator index {bad[0]}")
        self.generators = generators
        self.relators = list(relators)
        self.name = name

    @classmethod
    def parse(cls, generators: Sequence[str], relators: Sequence[str], name: str = ""):
        return cls(generators, [parse_word(r, generators) for r in relators], name)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def m(self) -> int:
        return len(self.relators)

    def word(self, text: str) -> FreeWord:
        return parse_word(text, self.generators)

    def format(self, w) -> str:
        if isinstance(w, FreeWord):
            return w.to_string(self.generators) or "1"
        return w.to_string(self.generators)

    def __repr__(self):
        rels = ", ".join(self.format(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


def abelianization_matrix(p: Presentation) -> IntMatrix:
    """Generators x relators matrix of exponent sums."""
    cols = []
    for r in p.relators:
        col = [0] * p.n
        for g, e in r.letters:
            col[g] += e
        cols.append(col)
    return IntMatrix(p.n, p.m, [cols[j][i] for i in range(p.n) for j in range(p.m)])


def abelianization(p: Presentation) -> tuple:
    """(torsion invariant factors, free rank) of the abelianized group."""
    return smith_normal_form(abelianization_matrix(p))


def describe_abelian(factors: Sequence[int], free_rank: int) -> str:
    parts = [f"Z/{d}" for d in factors]
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    return " + ".join(parts) if parts else "0"


def random_word(rng: random.Random, n: int, max_len: int) -> FreeWord:
    """Random (not necessarily reduced before cancellation) word."""
    length = rng.randint(0, max_len)
    return FreeWord((rng.randrange(n), rng.choice((1, -1))) for _ in range(length))

"""Reduced words in the rank-2 free group F(a, b).

A word is stored as a sequence of *syllables*: maximal blocks g^e with
g in {a, b} and e a nonzero integer.  Two lengths matter throughout:
the letter length |w| (sum of |e| over syllables) and the syllable
length |w|_s (number of blocks).  They agree exactly when every
exponent is +-1.

Serialized form is a string over {a, A, b, B} with capitals denoting
inverses ("abAB"); the parser also accepts caret exponents ("a^3 b^-2").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

GENERATORS = ("a", "b")

# Letter order used everywhere a canonical choice is needed:
# a < a^-1 < b < b^-1.
_LETTER_RANK = {("a", 1): 0, ("a", -1): 1, ("b", 1): 2, ("b", -1): 3}


class WordParseError(ValueError):
    """Raised for strings that do not spell a word over {a, A, b, B}."""


class Syllable(NamedTuple):
    gen: str
    exp: int

    def inverse(self) -> "Syllable":
        return Syllable(self.gen, -self.exp)

    def sort_key(self) -> tuple[int, int]:
        sign = 1 if self.exp > 0 else -1
        return (_LETTER_RANK[(self.gen, sign)], abs(self.exp))

    def __str__(self) -> str:
        char = self.gen if self.exp > 0 else self.gen.upper()
        return char * abs(self.exp)


def _normalize(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for syl in syllables:
        if syl.gen not in GENERATORS:
            raise ValueError(f"unknown generator {syl.gen!r}")
        if syl.exp == 0:
            continue
        if out and out[-1].gen == syl.gen:
            merged = out[-1].exp + syl.exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = Syllable(syl.gen, merged)
        else:
            out.append(syl)
    return tuple(out)


class Word:
    """An element of F(a, b) in freely reduced syllable normal form."""

    __slots__ = ("syllables",)

    syllables: tuple[Syllable, ...]

    def __init__(self, syllables: Iterable[Syllable] = (), *, reduced: bool = False):
        if reduced:
            object.__setattr__(self, "syllables", tuple(syllables))
        else:
            object.__setattr__(self, "syllables", _normalize(syllables))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def letter_length(self) -> int:
        return sum(abs(s.exp) for s in self.syllables)

    @property
    def syllable_length(self) -> int:
        return len(self.syllables)

    def is_cyclically_reduced(self) -> bool:
        """True when no conjugate has a shorter syllable spelling."""
        syls = self.syllables
        return len(syls) <= 1 or syls[0].gen != syls[-1].gen

    # -- group operations --------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        if not self.syllables:
            return other
        if not other.syllables:
            return self
        out = list(self.syllables)
        for syl in other.syllables:
            if out and out[-1].gen == syl.gen:
                merged = out[-1].exp + syl.exp
                if merged == 0:
                    out.pop()
                else:
                    out[-1] = Syllable(syl.gen, merged)
            else:
                out.append(syl)
        return Word(out, reduced=True)

    def inverse(self) -> "Word":
        return Word([s.inverse() for s in reversed(self.syllables)], reduced=True)

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        result = Word()
        power = base
        n = abs(n)
        while n:
            if n & 1:
                result = result * power
            n >>= 1
            if n:
                power = power * power
        return result

    def conjugate_by(self, g: "Word") -> "Word":
        """g * self * g^-1."""
        return g * self * g.inverse()

    # -- serialization -----------------------------------------------------

    def __str__(self) -> str:
        return "".join(str(s) for s in self.syllables)

    def exponent_str(self) -> str:
        parts = []
        for s in self.syllables:
            parts.append(s.gen if s.exp == 1 else f"{s.gen}^{s.exp}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)


IDENTITY = Word()


def word(gen: str, exp: int = 1) -> Word:
    """Single-syllable word g^e."""
    return Word([Syllable(gen, exp)])


def reduce_letters(letters: Iterable[tuple[str, int]]) -> Word:
    """Freely reduce a raw sequence of signed letters (gen, +-1 or any exponent)."""
    return Word(Syllable(g, e) for g, e in letters)


def parse_word(text: str) -> Word:
    """Parse "abAB" or caret notation "a^3 b^-2" (mixes allowed)."""
    syllables: list[Syllable] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in "aAbB":
            raise WordParseError(f"unexpected character {ch!r} at position {i}")
        gen = ch.lower()
        sign = 1 if ch.islower() else -1
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] in "+-":
                j += 1
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise WordParseError(f"missing exponent after '^' at position {i}")
            exp = int(text[i:k])
            if exp == 0:
                raise WordParseError(f"zero exponent at position {i}")
            i = k
        syllables.append(Syllable(gen, sign * exp))
    return Word(syllables)


# -- conjugacy ---------------------------------------------------------------


@dataclass(frozen=True)
class CyclicWord:
    """A conjugacy class, held as its canonical cyclically reduced spelling.

    The representative is the lexicographically least rotation (letter
    order a < a^-1 < b < b^-1) of the cyclically reduced syllable
    sequence, so two words are conjugate iff their CyclicWords compare
    equal.
    """

    representative: Word

    @property
    def syllable_length(self) -> int:
        return self.representative.syllable_length

    @property
    def letter_length(self) -> int:
        return self.representative.letter_length

    def __str__(self) -> str:
        return str(self.representative)


def _least_rotation(syls: Sequence[Syllable]) -> int:
    keys = [s.sort_key() for s in syls]
    n = len(keys)
    best = 0
    for i in range(1, n):
        for j in range(n):
            ki, kb = keys[(i + j) % n], keys[(best + j) % n]
            if ki != kb:
                if ki < kb:
                    best = i
                break
    return best


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Split w = c * r * c^-1 with r of minimal syllable length, canonical rotation.

    Returns (CyclicWord(r), c).
    """
    syls = list(w.syllables)
    conj: list[Syllable] = []
    while len(syls) >= 2 and syls[0].gen == syls[-1].gen:
        first = syls.pop(0)
        last = syls.pop()
        conj.append(first)
        merged = last.exp + first.exp
        if merged != 0:
            syls.append(Syllable(first.gen, merged))
    if len(syls) >= 2:
        i = _least_rotation(syls)
        conj.extend(syls[:i])
        syls = syls[i:] + syls[:i]
    return CyclicWord(Word(syls, reduced=True)), Word(conj)


def conjugacy_key(w: Word) -> tuple[Syllable, ...]:
    """Hashable canonical form of the conjugacy class of w."""
    return cyclic_reduce(w)[0].representative.syllables


def is_conjugate(u: Word, v: Word) -> bool:
    return conjugacy_key(u) == conjugacy_key(v)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Write w = root^k with k maximal; w is primitive iff k == 1."""
    if w.is_identity:
        raise ValueError("identity has no primitive root")
    cyc, c = cyclic_reduce(w)
    syls = cyc.representative.syllables
    if len(syls) == 1:
        s = syls[0]
        k = abs(s.exp)
        core = Word([Syllable(s.gen, 1 if s.exp > 0 else -1)], reduced=True)
    else:
        n = len(syls)
        period = n
        for d in range(1, n):
            if n % d == 0 and syls == syls[:d] * (n // d):
                period = d
                break
        k = n // period
        core = Word(syls[:period], reduced=True)
    if k == 1:
        return w, 1
    return c * core * c.inverse(), k


def same_maximal_cyclic(u: Word, v: Word) -> bool:
    """True iff u and v generate conjugate maximal cyclic subgroups.

    Equivalently the primitive root of u is conjugate to the primitive
    root of v or to its inverse.
    """
    if u.is_identity or v.is_identity:
        raise ValueError("identity not accepted")
    ru, _ = primitive_root(u)
    rv, _ = primitive_root(v)
    key = conjugacy_key(ru)
    return key == conjugacy_key(rv) or key == conjugacy_key(rv.inverse())


def commutator(u: Word, v: Word) -> Word:
    """Reduced form of u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


# -- optimizer word streams ---------------------------------------------------


def _alternating_word(first_gen: str, signs: Sequence[int]) -> Word:
    other = "b" if first_gen == "a" else "a"
    gens = itertools.cycle((first_gen, other))
    return Word(
        tuple(Syllable(g, s) for g, s in zip(gens, signs)),
        reduced=True,
    )


def enumerate_optimizer_words(count: int, prefix_stable: bool = False) -> Iterator[Word]:
    """Stream cyclically reduced words with |w| = |w|_s and pairwise distinct axes.

    Every output has all exponents +-1 (even syllable length, so never a
    generator power), is primitive, and fails same_maximal_cyclic against
    every earlier output.  With prefix_stable the stream is the chain
    ab, ab ab^-1, ab ab^-1 ab^-1, ...: each term extends the previous by
    two syllables, so consecutive common prefixes grow strictly.  Without
    it, words are enumerated in length-then-lex order and filtered.
    """
    if count <= 0:
        return
    if prefix_stable:
        w = Word([Syllable("a", 1), Syllable("b", 1)], reduced=True)
        step = Word([Syllable("a", 1), Syllable("b", -1)], reduced=True)
        for _ in range(count):
            yield w
            w = w * step
        return

    seen: set[tuple[Syllable, ...]] = set()
    emitted = 0
    for pairs in itertools.count(1):
        for first_gen in GENERATORS:
            for signs in itertools.product((1, -1), repeat=2 * pairs):
                cand = _alternating_word(first_gen, signs)
                root, _ = primitive_root(cand)
                key = conjugacy_key(root)
                if key in seen:
                    continue
                seen.add(key)
                seen.add(conjugacy_key(root.inverse()))
                yield cand
                emitted += 1
                if emitted >= count:
                    return

"""Exact 2x2 integer matrices for twist words, and their stretch factors.

A filling pair with intersection number n is represented by the
parabolic pair

    a |-> [[1, n], [0, 1]],     b |-> [[1, 0], [-n, 1]],

and a word maps to the corresponding product.  The word is
pseudo-Anosov exactly when its matrix is hyperbolic (|trace| > 2); its
dilatation is the larger eigenvalue and the Teichmueller translation
length is the logarithm of that eigenvalue.  Everything here is exact
integer arithmetic; logs of the astronomically large traces that deep
commutator words produce are taken on scaled integers so the relative
error stays uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple

from .words import Word

_LOG2 = math.log(2)
# log via a 64-bit fractional scaling of sqrt(trace^2 - 4)
_FRAC_BITS = 64


class NotHyperbolicError(ValueError):
    """Matrix has no pair of distinct real eigenvalues."""


class ParabolicError(NotHyperbolicError):
    """|trace| == 2: reducible twist-like element."""


class EllipticError(NotHyperbolicError):
    """|trace| < 2: finite-order-like element."""


class IntMatrix2:
    """2x2 matrix with arbitrary-precision integer entries."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11: int, m12: int, m21: int, m22: int):
        object.__setattr__(self, "m11", m11)
        object.__setattr__(self, "m12", m12)
        object.__setattr__(self, "m21", m21)
        object.__setattr__(self, "m22", m22)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix2 is immutable")

    @staticmethod
    def identity() -> "IntMatrix2":
        return IntMatrix2(1, 0, 0, 1)

    def __mul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> int:
        return self.m11 + self.m22

    def inverse(self) -> "IntMatrix2":
        if self.det() != 1:
            raise ValueError("inverse implemented for determinant-1 matrices only")
        return IntMatrix2(self.m22, -self.m12, -self.m21, self.m11)

    def __pow__(self, n: int) -> "IntMatrix2":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = IntMatrix2.identity()
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def entries(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    def to_json_obj(self) -> list[list[str]]:
        """Rows of decimal strings; entries may exceed any native width."""
        return [[str(self.m11), str(self.m12)], [str(self.m21), str(self.m22)]]

    @staticmethod
    def from_json_obj(rows: list[list[str]]) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return IntMatrix2(int(a), int(b), int(c), int(d))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix2) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"IntMatrix2({self.m11}, {self.m12}, {self.m21}, {self.m22})"


def twist_matrices(n: int) -> tuple[IntMatrix2, IntMatrix2]:
    """The generator images for intersection parameter n >= 1."""
    if n <= 0:
        raise ValueError("intersection parameter must be a positive integer")
    return IntMatrix2(1, n, 0, 1), IntMatrix2(1, 0, -n, 1)


def _syllable_matrix(gen: str, exp: int, n: int) -> IntMatrix2:
    # exact parabolic power: no repeated multiplication for big exponents
    if gen == "a":
        return IntMatrix2(1, exp * n, 0, 1)
    return IntMatrix2(1, 0, -exp * n, 1)


def evaluate(w: Word, n: int) -> IntMatrix2:
    """Image of w under the twist representation with parameter n."""
    if n <= 0:
        raise ValueError("intersection parameter must be a positive integer")
    result = IntMatrix2.identity()
    for syl in w.syllables:
        result = result * _syllable_matrix(syl.gen, syl.exp, n)
    return result


def is_hyperbolic(m: IntMatrix2) -> bool:
    """True iff m has two distinct real eigenvalues, i.e. |trace| > 2."""
    if m.det() != 1:
        raise ValueError("hyperbolicity test requires determinant 1")
    return abs(m.trace()) > 2


@dataclass(frozen=True)
class Dilatation:
    """Largest eigenvalue of a hyperbolic matrix, exactly certified.

    log_lambda carries the full precision (uniform relative error, no
    matter how many digits the trace has); lambda_float is the plain
    float value and degrades to inf once past float range.
    """

    trace_abs: int
    lambda_float: float
    log_lambda: float


def dilatation(m: IntMatrix2) -> Dilatation:
    """Stretch factor lambda = (|t| + sqrt(t^2 - 4)) / 2 with exact-integer log."""
    if m.det() != 1:
        raise ValueError("dilatation requires determinant 1")
    t = abs(m.trace())
    if t == 2:
        raise ParabolicError("trace +-2: parabolic (reducible twist power)")
    if t < 2:
        raise EllipticError(f"|trace| = {t} < 2: elliptic element")
    disc = t * t - 4
    # lambda = (t*2^F + isqrt(disc*4^F)) / 2^(F+1); the floor sqrt is off by
    # at most 2^-F relative, invisible at float precision
    scaled = (t << _FRAC_BITS) + isqrt(disc << (2 * _FRAC_BITS))
    log_lambda = math.log(scaled) - (_FRAC_BITS + 1) * _LOG2
    if t.bit_length() <= 500:
        lam = (t + math.sqrt(disc)) / 2.0
    else:
        try:
            lam = math.exp(log_lambda)
        except OverflowError:
            lam = math.inf
    return Dilatation(trace_abs=t, lambda_float=lam, log_lambda=log_lambda)


def teich_translation(w: Word, n: int) -> float:
    """log of the dilatation of w at intersection parameter n, in nats."""
    return dilatation(evaluate(w, n)).log_lambda


class TraceBound(NamedTuple):
    holds: bool
    lhs: int
    rhs: int
    even_form: bool


def _require_unit_exponents(w: Word) -> None:
    if any(abs(s.exp) != 1 for s in w.syllables):
        raise ValueError("trace bound applies to words with all exponents +-1")


def trace_bound_check(w: Word, n: int) -> TraceBound:
    """Compare |trace| against (2n)^|w|, both exact integers.

    Accepts any alternating +-1 word; even_form records whether the word
    has the paired shape a^e1 b^d1 ... a^ek b^dk.
    """
    _require_unit_exponents(w)
    lhs = abs(evaluate(w, n).trace())
    rhs = (2 * n) ** w.letter_length
    even = (
        w.syllable_length % 2 == 0
        and (w.is_identity or w.syllables[0].gen == "a")
    )
    return TraceBound(lhs <= rhs, lhs, rhs, even)


def sharp_trace_bound_check(w: Word, n: int) -> TraceBound:
    """The norm-product bound 2 (n^2 + 1)^k over the k syllable pairs.

    Holds whenever each pair a^e b^d has matching signs (e*d > 0); a
    mixed-sign pair has Frobenius norm sqrt(n^4 + 4n^2 + 2) > n^2 + 1,
    so `holds` can legitimately come back False for such words (the
    first failures are near-powers of a^-1 b at n = 2).
    """
    _require_unit_exponents(w)
    if w.syllable_length % 2 != 0:
        raise ValueError("paired bound needs an even number of syllables")
    k = w.syllable_length // 2
    lhs = abs(evaluate(w, n).trace())
    rhs = 2 * (n * n + 1) ** k
    return TraceBound(lhs <= rhs, lhs, rhs, True)


def pair_norm_trace_bound_check(w: Word, n: int) -> TraceBound:
    """The sign-uniform pair-norm bound 2 (n^2 + 2)^k; valid for all signs."""
    _require_unit_exponents(w)
    if w.syllable_length % 2 != 0:
        raise ValueError("paired bound needs an even number of syllables")
    k = w.syllable_length // 2
    lhs = abs(evaluate(w, n).trace())
    rhs = 2 * (n * n + 2) ** k
    return TraceBound(lhs <= rhs, lhs, rhs, True)

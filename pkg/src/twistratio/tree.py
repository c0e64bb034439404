"""The simplicial tree for the splitting <a> * <b> of F(a, b).

Vertices are cosets w<a> (type A) or w<b> (type B); the vertices <a>
and <b> are joined by an edge and the group acts on the left.  Graph
distance is read off the syllable normal form of the connecting word:
strip a leading syllable in the first vertex's stabilized generator
and a trailing syllable in the second's, count the surviving syllables
and add the boundary term.

Orbit-map distortion into the curve graph is tracked as intervals via
the (3, 7) quasi-isometry constants, giving two-sided bounds on curve
distances and translation lengths without ever touching a curve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import CyclicWord, Syllable, Word, cyclic_reduce

VERTEX_TYPES = ("A", "B")
_STABILIZED = {"A": "a", "B": "b"}

# Quasi-isometry constants for the orbit map into the curve graph:
# distances are contracted by at most 3 and shifted by at most 7.
QI_MULTIPLICATIVE = 3
QI_ADDITIVE = 7


class InconclusiveRadiusError(ValueError):
    """Search radius too small to certify a translation length."""

    def __init__(self, message: str, best_found: int):
        super().__init__(message)
        self.best_found = best_found


class TreeVertex:
    """A coset vertex, stored in canonical form.

    Descriptors (w, A) and (w', A) name the same vertex iff w^-1 w' lies
    in <a>; the canonical descriptor drops a trailing a-syllable (same
    for B with b), which makes equality a plain comparison.
    """

    __slots__ = ("word", "kind")

    def __init__(self, word: Word, kind: str):
        if kind not in VERTEX_TYPES:
            raise ValueError(f"vertex type must be one of {VERTEX_TYPES}")
        syls = word.syllables
        if syls and syls[-1].gen == _STABILIZED[kind]:
            word = Word(syls[:-1], reduced=True)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("TreeVertex is immutable")

    def translate(self, g: Word) -> "TreeVertex":
        return TreeVertex(g * self.word, self.kind)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TreeVertex)
            and self.kind == other.kind
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.word.syllables, self.kind))

    def __repr__(self) -> str:
        return f"({str(self.word) or 'e'}, {self.kind})"


BASE_A = TreeVertex(Word(), "A")
BASE_B = TreeVertex(Word(), "B")


@dataclass(frozen=True)
class DistanceInterval:
    """A certified two-sided bound lower <= value <= upper."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("interval lower bound exceeds upper bound")
        if self.lower < 0:
            raise ValueError("interval bounds must be nonnegative")

    def as_tuple(self) -> tuple[int, int]:
        return (self.lower, self.upper)


def _stripped_count(syls: tuple[Syllable, ...], lead_gen: str, trail_gen: str) -> int:
    i, j = 0, len(syls)
    if i < j and syls[0].gen == lead_gen:
        i += 1
    if i < j and syls[j - 1].gen == trail_gen:
        j -= 1
    return j - i


def tree_distance(x: TreeVertex, y: TreeVertex) -> int:
    """Graph distance between two vertices."""
    g = x.word.inverse() * y.word
    m = _stripped_count(g.syllables, _STABILIZED[x.kind], _STABILIZED[y.kind])
    if x.kind == y.kind:
        return 0 if m == 0 else m + 1
    return m + 1


def translation_length(w: Word) -> int:
    """Minimal displacement of w acting on the tree.

    Conjugates of generator powers (and the identity) fix a vertex and
    get 0; any other word translates along an axis by its cyclic
    syllable length.
    """
    cyc, _ = cyclic_reduce(w)
    n = cyc.syllable_length
    return 0 if n <= 1 else n


def curve_distance_interval(x: TreeVertex, y: TreeVertex) -> DistanceInterval:
    """Interval certified to contain the curve-graph distance of the orbit images."""
    d = tree_distance(x, y)
    return DistanceInterval(max(0, d - QI_ADDITIVE), QI_MULTIPLICATIVE * d)


def curve_translation_interval(w: Word) -> DistanceInterval:
    """[l, 3l] for l the cyclic syllable length; [0, 0] for elliptic words.

    Elliptic words (conjugates of generator powers) are twist powers, not
    pseudo-Anosov; their stable curve-graph translation length is 0.
    """
    ell = translation_length(w)
    return DistanceInterval(ell, QI_MULTIPLICATIVE * ell)


# -- exhaustive displacement search -------------------------------------------


def _oracle_exponents(w: Word) -> tuple[int, ...]:
    """Exponent magnitudes spanning the subtree that carries the axis of w.

    Covers the exponents of w, of its cyclically reduced core r and
    conjugator c, and of the merged c|r junction (probed via c*r*r);
    displacement minimizers live on the axis, whose canonical coset
    words use only these.
    """
    cyc, c = cyclic_reduce(w)
    r = cyc.representative
    probe = c * (r * r)
    mags = {abs(s.exp) for v in (w, c, r, probe) for s in v.syllables}
    return tuple(sorted(mags)) or (1,)


# Hot-loop encoding: a syllable becomes the int (exp << 1) | genbit with
# genbit 0 for a, 1 for b; words become int tuples.  Vertex types share the
# genbit convention (A <-> a).


def _encode(syls: tuple[Syllable, ...]) -> tuple[int, ...]:
    return tuple((s.exp << 1) | (0 if s.gen == "a" else 1) for s in syls)


def _conj_int(g: tuple[int, ...], bit: int, exp: int) -> tuple[int, ...]:
    # reduced form of (gen^exp)^-1 * g * gen^exp for reduced g
    if g and (g[0] & 1) == bit:
        e = (g[0] >> 1) - exp
        head = (((e << 1) | bit,) + g[1:]) if e else g[1:]
    else:
        head = (((-exp) << 1) | bit,) + g
    if head and (head[-1] & 1) == bit:
        e = (head[-1] >> 1) + exp
        return head[:-1] + (((e << 1) | bit,) if e else ())
    return head + ((exp << 1) | bit,)


def _disp_int(g: tuple[int, ...], bit: int) -> int:
    i, j = 0, len(g)
    if i < j and (g[0] & 1) == bit:
        i += 1
    if i < j and (g[j - 1] & 1) == bit:
        j -= 1
    m = j - i
    return 0 if m == 0 else m + 1


def brute_force_translation(
    w: Word, radius: int, exponents: tuple[int, ...] | None = None
) -> int:
    """Minimum of d(v, w.v) over every vertex within `radius` of the base vertex.

    Exhaustive over the subtree spanned by the given exponent magnitudes
    (default: those occurring in w and its cyclic-reduction pieces, which
    contain the axis).  Requires radius >= |w|_s + 2 so the searched ball
    is guaranteed to meet the axis; smaller radii raise
    InconclusiveRadiusError carrying the best displacement seen.
    """
    needed = w.syllable_length + 2
    mags = exponents if exponents is not None else _oracle_exponents(w)
    steps = tuple(m for mag in mags for m in (mag, -mag))

    start_g = _encode(w.syllables)
    best = _disp_int(start_g, 0)
    visited = {((), 0)}
    frontier: list[tuple[tuple[int, ...], int, tuple[int, ...]]] = [((), 0, start_g)]
    depth = 0
    while depth < radius and frontier:
        depth += 1
        nxt = []
        for u, bit, g in frontier:
            child_bit = bit ^ 1
            # the zero-twist neighbor: same coset word, other type
            if u and (u[-1] & 1) == child_bit:
                tail = u[-1]
                cu = u[:-1]
                cg = _conj_int(g, child_bit, -(tail >> 1))
            else:
                cu, cg = u, g
            candidates = [(cu, cg)]
            for k in steps:
                candidates.append((u + ((k << 1) | bit,), _conj_int(g, bit, k)))
            for cu, cg in candidates:
                key = (cu, child_bit)
                if key in visited:
                    continue
                visited.add(key)
                disp = _disp_int(cg, child_bit)
                if disp < best:
                    best = disp
                nxt.append((cu, child_bit, cg))
        frontier = nxt
    if radius < needed:
        raise InconclusiveRadiusError(
            f"radius {radius} < |w|_s + 2 = {needed}: search inconclusive", best
        )
    return best

"""Built-in oracle suites: independent cross-checks runnable from the CLI.

Each suite re-derives a library answer by a second, structurally
different route (graph search, raw letter pushing, closure under
single-letter conjugation) and counts agreements.  Deterministic for a
fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .matrices import evaluate, pair_norm_trace_bound_check, trace_bound_check
from .tree import TreeVertex, brute_force_translation, translation_length, tree_distance
from .words import Syllable, Word, conjugacy_key, is_conjugate

_LETTERS = "aAbB"


def _inv(c: str) -> str:
    return c.swapcase()


def _reduce_str(s: str) -> str:
    out: list[str] = []
    for c in s:
        if out and out[-1] == _inv(c):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def _word_from_str(s: str) -> Word:
    return Word(Syllable(c.lower(), 1 if c.islower() else -1) for c in s)


def _random_word(rng: random.Random, syllables: int, max_exp: int) -> Word:
    gens = ["a", "b"]
    rng.shuffle(gens)
    out = []
    for i in range(syllables):
        exp = rng.randint(1, max_exp) * rng.choice((1, -1))
        out.append(Syllable(gens[i % 2], exp))
    return Word(out, reduced=True)


@dataclass
class SuiteResult:
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def tree_displacement_suite(seed: int = 0, samples: int = 80) -> SuiteResult:
    """translation_length vs exhaustive ball search.

    Conjugators are chosen merge-free and exponents beyond 1 appear only
    on short cores: the exhaustive ball grows like (2 * #magnitudes)^radius.
    """
    rng = random.Random(seed)
    passed = 0
    for i in range(samples):
        kind = i % 4
        if kind == 0:
            # small words, exponents up to 2
            w = _random_word(rng, rng.randint(1, 3), 2)
        elif kind == 1:
            # conjugated +-1 core: cyclic reduction may carry a merged
            # exponent 2, so keep the core short (ball <= 5 * 4^7)
            core = _random_word(rng, 2 * rng.randint(1, 2), 1)
            conj = _random_word(rng, 1, 1)
            w = conj * core * conj.inverse()
        else:
            # cyclically reduced +-1 words: tiny exhaustive balls
            w = _random_word(rng, 2 * rng.randint(1, 4), 1)
        radius = w.syllable_length + 2
        if brute_force_translation(w, radius) == translation_length(w):
            passed += 1
    return SuiteResult("tree-displacement", passed, samples)


def tree_distance_suite(radius: int = 4, max_exp: int = 2) -> SuiteResult:
    """tree_distance formula vs breadth-first search on an explicit ball."""
    adjacency: dict[TreeVertex, list[TreeVertex]] = {}
    base = TreeVertex(Word(), "A")
    frontier = [base]
    adjacency[base] = []
    exps = list(range(-max_exp, max_exp + 1))
    for _ in range(radius):
        nxt = []
        for v in frontier:
            gen = "a" if v.kind == "A" else "b"
            child_kind = "B" if v.kind == "A" else "A"
            for k in exps:
                suffix = Word([Syllable(gen, k)]) if k else Word()
                child = TreeVertex(v.word * suffix, child_kind)
                if child not in adjacency:
                    adjacency[child] = []
                    nxt.append(child)
                if child not in adjacency[v]:
                    adjacency[v].append(child)
                    adjacency[child].append(v)
        frontier = nxt
    vertices = list(adjacency)

    def bfs(src: TreeVertex) -> dict[TreeVertex, int]:
        dist = {src: 0}
        queue = [src]
        while queue:
            nxt_q = []
            for u in queue:
                for nb in adjacency[u]:
                    if nb not in dist:
                        dist[nb] = dist[u] + 1
                        nxt_q.append(nb)
            queue = nxt_q
        return dist

    passed = total = 0
    for src in vertices:
        dist = bfs(src)
        for dst in vertices:
            total += 1
            if tree_distance(src, dst) == dist[dst]:
                passed += 1
    return SuiteResult("tree-distance", passed, total)


def conjugacy_suite(max_len: int = 4, closure_depth: int = 4) -> SuiteResult:
    """is_conjugate vs closure under single-letter conjugation."""
    universe = [""]
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in _LETTERS:
                if w and w[-1] == _inv(c):
                    continue
                nxt.append(w + c)
        universe.extend(nxt)
        frontier = nxt

    parent: dict[str, str] = {w: w for w in universe}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: str, y: str) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    seen = set(universe)
    frontier_set = set(universe)
    for _ in range(closure_depth):
        nxt_set = set()
        for w in frontier_set:
            for c in _LETTERS:
                t = _reduce_str(c + w + _inv(c))
                if t not in parent:
                    parent[t] = t
                union(w, t)
                if t not in seen:
                    seen.add(t)
                    nxt_set.add(t)
        frontier_set = nxt_set

    keys = {w: conjugacy_key(_word_from_str(w)) for w in universe}
    comps = {w: find(w) for w in universe}
    passed = total = 0
    for i, u in enumerate(universe):
        for v in universe[i:]:
            total += 1
            lib = keys[u] == keys[v]
            brute = comps[u] == comps[v]
            if lib == brute:
                passed += 1
    return SuiteResult("conjugacy-closure", passed, total)


def trace_bound_suite(seed: int = 0, samples: int = 600) -> SuiteResult:
    """Trace growth bounds on random alternating +-1 words."""
    rng = random.Random(seed)
    passed = total = 0
    for _ in range(samples):
        k = rng.randint(1, 8)
        signs = [rng.choice((1, -1)) for _ in range(2 * k)]
        w = Word(
            (Syllable("ab"[i % 2], s) for i, s in enumerate(signs)),
            reduced=True,
        )
        for n in (2, 7, 50):
            total += 2
            if trace_bound_check(w, n).holds:
                passed += 1
            if sharp_trace_bound_check(w, n).holds:
                passed += 1
    return SuiteResult("trace-bounds", passed, total)


def homomorphism_suite(seed: int = 0, samples: int = 150) -> SuiteResult:
    """Determinants and multiplicativity of the matrix assignment."""
    rng = random.Random(seed)
    passed = total = 0
    for _ in range(samples):
        u = _random_word(rng, rng.randint(0, 6), 4)
        v = _random_word(rng, rng.randint(0, 6), 4)
        n = rng.randint(2, 50)
        total += 3
        mu, mv = evaluate(u, n), evaluate(v, n)
        if mu.det() == 1:
            passed += 1
        if evaluate(u * v, n) == mu * mv:
            passed += 1
        if evaluate(u.inverse(), n) == mu.inverse():
            passed += 1
    return SuiteResult("matrix-homomorphism", passed, samples * 3)


def run_all(seed: int = 0) -> list[SuiteResult]:
    return [
        tree_displacement_suite(seed),
        tree_distance_suite(),
        conjugacy_suite(),
        trace_bound_suite(seed),
        homomorphism_suite(seed),
    ]

import itertools
import random

import pytest

from twistratio import (
    BASE_A,
    BASE_B,
    DistanceInterval,
    InconclusiveRadiusError,
    Syllable,
    TreeVertex,
    Word,
    brute_force_translation,
    commutator,
    curve_distance_interval,
    curve_translation_interval,
    parse_word,
    reduce_letters,
    translation_length,
    tree_distance,
)


def w(s: str) -> Word:
    return parse_word(s)


def random_word(rng, syllables, max_exp=2) -> Word:
    gens = ["a", "b"]
    rng.shuffle(gens)
    return Word(
        (
            Syllable(gens[i % 2], rng.randint(1, max_exp) * rng.choice((1, -1)))
            for i in range(syllables)
        ),
        reduced=True,
    )


def build_ball(radius: int, max_exp: int):
    """Explicit adjacency of the ball around the base vertex (test-side oracle)."""
    adjacency = {BASE_A: set()}
    frontier = [BASE_A]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            gen = "a" if v.kind == "A" else "b"
            child_kind = "B" if v.kind == "A" else "A"
            for k in range(-max_exp, max_exp + 1):
                suffix = Word([Syllable(gen, k)]) if k else Word()
                child = TreeVertex(v.word * suffix, child_kind)
                if child not in adjacency:
                    adjacency[child] = set()
                    nxt.append(child)
                adjacency[v].add(child)
                adjacency[child].add(v)
        frontier = nxt
    return adjacency


def bfs_distances(adjacency, src):
    dist = {src: 0}
    queue = [src]
    while queue:
        nxt = []
        for u in queue:
            for nb in adjacency[u]:
                if nb not in dist:
                    dist[nb] = dist[u] + 1
                    nxt.append(nb)
        queue = nxt
    return dist


class TestVertices:
    def test_canonical_strips_stabilized_tail(self):
        assert TreeVertex(w("a^3"), "A") == BASE_A
        assert TreeVertex(w("ab^2"), "B") == TreeVertex(w("a"), "B")
        assert TreeVertex(w("ab"), "A") != BASE_A

    def test_repr(self):
        assert repr(TreeVertex(w("ab"), "A")) == "(ab, A)"
        assert repr(BASE_B) == "(e, B)"

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            TreeVertex(Word(), "C")


class TestTreeDistance:
    def test_base_edge(self):
        assert tree_distance(BASE_A, BASE_B) == 1

    def test_two_step(self):
        assert tree_distance(BASE_A, BASE_A.translate(w("ab"))) == 2

    def test_stabilizer_fixes(self):
        for k in (1, 5, -3):
            assert tree_distance(BASE_A, BASE_A.translate(w(f"a^{k}"))) == 0

    def test_matches_bfs_on_ball(self):
        adjacency = build_ball(4, 2)
        vertices = list(adjacency)
        for src in vertices:
            dist = bfs_distances(adjacency, src)
            for dst in vertices:
                assert tree_distance(src, dst) == dist[dst]

    def test_metric_axioms_sampled(self):
        rng = random.Random(5)
        verts = [
            TreeVertex(random_word(rng, rng.randint(0, 4)), rng.choice("AB"))
            for _ in range(25)
        ]
        for x in verts:
            assert tree_distance(x, x) == 0
        for x, y in itertools.combinations(verts, 2):
            assert tree_distance(x, y) == tree_distance(y, x)
            assert (tree_distance(x, y) == 0) == (x == y)
        for x, y, z in itertools.combinations(verts, 3):
            assert tree_distance(x, z) <= tree_distance(x, y) + tree_distance(y, z)

    def test_equivariance(self):
        rng = random.Random(9)
        for _ in range(60):
            g = random_word(rng, rng.randint(0, 5))
            x = TreeVertex(random_word(rng, rng.randint(0, 3)), rng.choice("AB"))
            y = TreeVertex(random_word(rng, rng.randint(0, 3)), rng.choice("AB"))
            assert tree_distance(x.translate(g), y.translate(g)) == tree_distance(x, y)


class TestTranslationLength:
    @pytest.mark.parametrize(
        "text, expected",
        [("a^7", 0), ("ab", 2), ("aba", 2), ("aBab", 4), ("", 0)],
    )
    def test_examples(self, text, expected):
        assert translation_length(w(text)) == expected

    def test_conjugation_invariance(self):
        rng = random.Random(2)
        for _ in range(60):
            word = random_word(rng, rng.randint(1, 5))
            conj = random_word(rng, rng.randint(0, 5))
            assert translation_length(conj * word * conj.inverse()) == translation_length(word)

    def test_power_scaling(self):
        rng = random.Random(4)
        for _ in range(30):
            word = random_word(rng, rng.randint(1, 4))
            base = translation_length(word)
            for n in (2, 3, 4):
                assert translation_length(word ** n) == n * base

    def test_unit_exponent_words_translate_by_syllable_count(self):
        rng = random.Random(6)
        for _ in range(60):
            word = random_word(rng, 2 * rng.randint(1, 4), max_exp=1)
            if word.is_cyclically_reduced():
                assert translation_length(word) == word.syllable_length


class TestBruteForce:
    @pytest.mark.parametrize(
        "text, radius, expected",
        [("ab", 4, 2), ("a", 3, 0), ("aBab", 8, 4)],
    )
    def test_examples(self, text, radius, expected):
        assert brute_force_translation(w(text), radius) == expected

    def test_small_radius_flagged(self):
        with pytest.raises(InconclusiveRadiusError) as err:
            brute_force_translation(w("aBab"), 3)
        assert err.value.best_found >= 0

    def test_agreement_random(self):
        # exponent-2 conjugators only on short cores: the exhaustive ball
        # grows like (2 * #magnitudes)^radius
        rng = random.Random(12)
        for _ in range(30):
            core = random_word(rng, rng.randint(1, 4), max_exp=1)
            conj = random_word(rng, rng.randint(0, 1), max_exp=1)
            word = conj * core * conj.inverse()
            radius = word.syllable_length + 2
            assert brute_force_translation(word, radius) == translation_length(word)
        for _ in range(10):
            core = random_word(rng, rng.randint(1, 2), max_exp=2)
            conj = random_word(rng, 1, max_exp=2)
            word = conj * core * conj.inverse()
            radius = word.syllable_length + 2
            assert brute_force_translation(word, radius) == translation_length(word)


class TestCurveIntervals:
    def test_distance_interval_constants(self):
        x = BASE_A
        y = BASE_A.translate(w("ababababab"))  # tree distance 10
        assert tree_distance(x, y) == 10
        assert curve_distance_interval(x, y) == DistanceInterval(3, 30)
        assert curve_distance_interval(x, x) == DistanceInterval(0, 0)
        assert curve_distance_interval(x, BASE_B) == DistanceInterval(0, 3)

    def test_translation_interval(self):
        assert curve_translation_interval(w("ab")) == DistanceInterval(2, 6)
        assert curve_translation_interval(w("ab") ** 3) == DistanceInterval(6, 18)
        assert curve_translation_interval(w("a^9")) == DistanceInterval(0, 0)

    def test_commutator_seed_word(self):
        f1 = commutator(w("aba"), w("bab"))
        assert curve_translation_interval(f1) == DistanceInterval(12, 36)

    def test_interval_validation(self):
        with pytest.raises(ValueError):
            DistanceInterval(3, 2)
        with pytest.raises(ValueError):
            DistanceInterval(-1, 2)

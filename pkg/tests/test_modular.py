"""Matrix dictionary, Dedekind sums, and the Rademacher invariant."""

import random
from fractions import Fraction

import pytest

from lorenzlinks.errors import (
    NotHyperbolicError,
    NotPrimitiveError,
    ParabolicError,
    ValidationError,
)
from lorenzlinks.modular import (
    L_MATRIX,
    R_MATRIX,
    Mat2Z,
    dedekind_sum,
    matrix_of_word,
    rademacher,
    rademacher_phi,
    rademacher_psi,
    word_of_matrix,
)
from lorenzlinks.words import canonicalize, enumerate_words, involute


def mixed_words(max_len):
    return [w for w in enumerate_words(max_len) if len(set(w.letters)) == 2]


def random_conjugator(rng, max_entry=50):
    """A random SL(2, Z) element with entries bounded by max_entry."""
    gens = [L_MATRIX, R_MATRIX, L_MATRIX.inverse(), R_MATRIX.inverse()]
    while True:
        m = Mat2Z.identity()
        for _ in range(rng.randrange(1, 9)):
            m = m * rng.choice(gens)
        if max(abs(v) for v in (m.a, m.b, m.c, m.d)) <= max_entry:
            return m


class TestMat2Z:
    def test_determinant_enforced(self):
        with pytest.raises(ValidationError):
            Mat2Z(1, 0, 0, 2)

    def test_normalized_representative(self):
        m = Mat2Z(-2, -1, -1, -1)
        assert m.normalized() == Mat2Z(2, 1, 1, 1)

    def test_inverse(self):
        m = Mat2Z(2, 1, 1, 1)
        assert m * m.inverse() == Mat2Z.identity()


class TestMatrixOfWord:
    def test_examples(self):
        assert matrix_of_word("LR").to_rows() == [[2, 1], [1, 1]]
        assert matrix_of_word("LLR").to_rows() == [[3, 2], [1, 1]]
        assert matrix_of_word("LR").trace == 3

    def test_trace_is_rotation_invariant(self):
        for word in mixed_words(8):
            traces = set()
            for rotation in word.rotations():
                product = Mat2Z.identity()
                for letter in rotation:
                    product = product * (L_MATRIX if letter == "L" else R_MATRIX)
                traces.add(product.trace)
            assert traces == {matrix_of_word(word).trace}

    def test_single_letter_is_parabolic(self):
        with pytest.raises(ParabolicError):
            matrix_of_word("L")


class TestWordOfMatrix:
    def test_example(self):
        assert word_of_matrix(Mat2Z(2, 1, 1, 1)).letters == "LR"

    def test_parabolic_rejected(self):
        with pytest.raises(NotHyperbolicError):
            word_of_matrix(Mat2Z(1, 1, 0, 1))
        with pytest.raises(NotHyperbolicError):
            word_of_matrix(Mat2Z(0, -1, 1, 0))

    def test_roundtrip_on_all_mixed_words(self):
        for word in mixed_words(10):
            assert word_of_matrix(matrix_of_word(word)) == word

    def test_roundtrip_survives_conjugation(self):
        rng = random.Random(20110628)
        for word in mixed_words(6):
            matrix = matrix_of_word(word)
            for _ in range(3):
                p = random_conjugator(rng)
                assert word_of_matrix(p * matrix * p.inverse()) == word

    def test_proper_powers_are_detected(self):
        square = matrix_of_word("LR") * matrix_of_word("LR")
        with pytest.raises(NotPrimitiveError):
            word_of_matrix(square)

    def test_negated_representative_is_projectively_equal(self):
        m = matrix_of_word("LLR")
        negated = Mat2Z(-m.a, -m.b, -m.c, -m.d)
        assert word_of_matrix(negated).letters == "LLR"


class TestDedekindSum:
    def test_small_values(self):
        assert dedekind_sum(1, 1) == 0
        assert dedekind_sum(1, 2) == 0
        assert dedekind_sum(1, 3) == Fraction(1, 18)

    def test_reciprocity(self):
        # s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(h k)) / 12 for coprime h, k
        import math

        for h in range(1, 16):
            for k in range(1, 16):
                if math.gcd(h, k) != 1:
                    continue
                lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
                rhs = Fraction(-1, 4) + (
                    Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)
                ) / 12
                assert lhs == rhs, (h, k)


class TestRademacher:
    def test_examples(self):
        assert rademacher("LR") == 0
        assert rademacher("LLR") == 1
        assert rademacher("LRR") == -1

    def test_oracle_values_on_examples(self):
        assert rademacher_phi(matrix_of_word("LR")) == 3
        assert rademacher_psi(matrix_of_word("LR")) == 0
        assert rademacher_phi(matrix_of_word("LLR")) == 4
        assert rademacher_psi(matrix_of_word("LLR")) == 1
        assert rademacher_phi(matrix_of_word("LRR")) == 2
        assert rademacher_psi(matrix_of_word("LRR")) == -1

    def test_letter_count_equals_dedekind_oracle(self):
        for word in mixed_words(10):
            assert rademacher(word) == rademacher_psi(matrix_of_word(word)), word

    def test_antisymmetric_under_involution(self):
        for word in mixed_words(10):
            assert rademacher(involute(word)) == -rademacher(word)

    def test_conjugation_invariance_of_psi(self):
        rng = random.Random(1963)
        for word in mixed_words(7):
            matrix = matrix_of_word(word)
            expected = rademacher_psi(matrix)
            for _ in range(4):
                p = random_conjugator(rng)
                assert rademacher_psi(p * matrix * p.inverse()) == expected

    def test_parabolic_rejected(self):
        with pytest.raises(ParabolicError):
            rademacher("R")

    def test_canonical_input_accepted_in_any_rotation(self):
        assert rademacher(canonicalize("RLL")) == rademacher("LLR") == 1

"""T-braid words and the Lorenz <-> T-link parameter correspondence."""

import pytest

from lorenzlinks.braid import braid_generators, braid_of_words, strand_profile, words_of_braid
from lorenzlinks.errors import InvalidParamsError
from lorenzlinks.jones import jones_of_braid
from lorenzlinks.tlink import TLinkParams, from_lorenz, t_braid_word, to_lorenz
from lorenzlinks.words import LinkWords, enumerate_words, validate_link


class TestParams:
    def test_ordering_and_positivity(self):
        with pytest.raises(InvalidParamsError):
            TLinkParams(((3, 2), (2, 1)))
        with pytest.raises(InvalidParamsError):
            TLinkParams(((2, 0),))
        with pytest.raises(InvalidParamsError):
            TLinkParams(((0, 3),))
        with pytest.raises(InvalidParamsError):
            TLinkParams(((2, 2), (2, 3)))

    def test_normalization_flag(self):
        assert TLinkParams(((2, 3),)).is_normalized
        assert TLinkParams(((2, 1),)).is_normalized  # single block is exempt
        assert not TLinkParams(((1, 2),)).is_normalized
        assert not TLinkParams(((2, 3), (4, 1))).is_normalized
        assert TLinkParams(((2, 3), (4, 2))).is_normalized

    def test_strand_count(self):
        assert TLinkParams(((2, 3), (4, 4), (5, 3))).strands == 5
        assert TLinkParams(()).strands == 1


class TestTBraidWord:
    def test_figure_example(self):
        word = t_braid_word(TLinkParams(((2, 3), (4, 4), (5, 3))))
        expected = [1] * 3 + [1, 2, 3] * 4 + [1, 2, 3, 4] * 3
        assert word == expected
        assert len(word) == 3 * 1 + 4 * 3 + 3 * 4

    def test_single_blocks(self):
        assert t_braid_word(TLinkParams(((2, 3),))) == [1, 1, 1]
        assert t_braid_word(TLinkParams(((2, 1),))) == [1]
        assert t_braid_word(TLinkParams(((1, 2),))) == []

    def test_total_length(self):
        for pairs in [((2, 2), (5, 3)), ((3, 1), (4, 1), (6, 2))]:
            params = TLinkParams(pairs)
            assert len(t_braid_word(params)) == sum(q * (p - 1) for p, q in pairs)


class TestToLorenz:
    def test_figure_eight_strand_counts(self):
        braid = to_lorenz(TLinkParams(((2, 4), (3, 2), (6, 1), (8, 2))))
        assert braid.ear_counts == (6, 3, 3, 5)
        assert braid.n == 17

    def test_trefoil(self):
        braid = to_lorenz(TLinkParams(((2, 3),)))
        assert braid.targets == (3, 4, 5, 1, 2)
        assert braid == braid_of_words(validate_link(["LRLRL"]))

    def test_two_component_parallel_words(self):
        braid = to_lorenz(TLinkParams(((2, 4),)))
        assert braid.n == 6
        assert braid.component_count == 2
        assert [str(w) for w in words_of_braid(braid)] == ["LLR", "LLR"]

    def test_structural_invariants_hold(self):
        # LorenzBraid.__post_init__ re-validates everything on construction
        for pairs in [((2, 2),), ((1, 3), (4, 2)), ((2, 1), (3, 1), (5, 2))]:
            braid = to_lorenz(TLinkParams(pairs))
            assert strand_profile(braid).trip == pairs


class TestFromLorenz:
    def test_examples(self):
        assert from_lorenz(braid_of_words(validate_link(["LRLRL"]))).pairs == ((2, 3),)
        braid = braid_of_words(validate_link(["LRLRRRLRRR"]))
        assert from_lorenz(braid).pairs == ((5, 1), (7, 2))

    def test_roundtrip_on_trip_parameters(self):
        for word in enumerate_words(12):
            braid = braid_of_words(LinkWords((word,)))
            params = from_lorenz(braid)
            assert strand_profile(to_lorenz(params)).trip == params.pairs


class TestCrossParametrization:
    def test_genus_agrees_between_presentations(self):
        # same fiber surface count from either braid: c - n + 1 must match
        for word in enumerate_words(12):
            braid = braid_of_words(LinkWords((word,)))
            params = from_lorenz(braid)
            t_crossings = len(t_braid_word(params))
            assert t_crossings - params.strands + 1 == braid.crossings - braid.n + 1

    def test_jones_agrees_on_small_words(self):
        # the decisive correspondence check; the full sweep runs in acceptance
        for word in enumerate_words(9):
            braid = braid_of_words(LinkWords((word,)))
            if braid.crossings > 12:
                continue
            params = from_lorenz(braid)
            lorenz_jones = jones_of_braid(braid_generators(braid), braid.n)
            t_jones = jones_of_braid(t_braid_word(params), params.strands)
            assert lorenz_jones == t_jones, str(word)

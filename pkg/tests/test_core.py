import pytest
from hypothesis import given, settings, strategies as st

import helpers
from coxkit import (
    CoxeterMatrix,
    INFINITY,
    braid_class,
    canonical_word,
    commutation_class,
    inverse,
    is_reduced,
    left_descents,
    multiply,
    new_system,
    power,
    reduce_word,
    right_descents,
    support,
)
from coxkit.errors import CapExceeded, MalformedMatrix, NotReduced, WordSyntaxError


class TestNewSystem:
    def test_affine_triangle_system_is_valid(self):
        m = new_system(
            "stu",
            [[1, 3, 3], [3, 1, 3], [3, 3, 1]],
        )
        assert m.rank == 3
        assert m.m(0, 1) == 3

    def test_rank_one(self):
        m = new_system(["s"], [[1]])
        assert m.rank == 1

    def test_off_diagonal_one_rejected(self):
        with pytest.raises(MalformedMatrix):
            new_system("st", [[1, 1], [1, 1]])

    def test_asymmetry_rejected(self):
        with pytest.raises(MalformedMatrix):
            new_system("st", [[1, 3], [4, 1]])

    def test_bad_diagonal_rejected(self):
        with pytest.raises(MalformedMatrix):
            new_system("st", [[2, 3], [3, 1]])

    def test_duplicate_names_rejected(self):
        with pytest.raises(MalformedMatrix):
            new_system("ss", [[1, 3], [3, 1]])

    def test_empty_names_rejected(self):
        with pytest.raises(MalformedMatrix):
            new_system([], [])

    def test_infinite_entry_accepted(self):
        m = new_system("st", [[1, INFINITY], [INFINITY, 1]])
        assert m.m(0, 1) == INFINITY

    def test_from_pairs_rejects_unknown_generator(self):
        with pytest.raises(MalformedMatrix):
            CoxeterMatrix.from_pairs("st", {("s", "x"): 3})


class TestWordSyntax:
    def test_contiguous_and_spaced(self, a2t):
        assert a2t.word("tustuts") == a2t.word("t u s t u t s")

    def test_empty_forms(self, a2t):
        assert a2t.word("-") == b""
        assert a2t.word("") == b""

    def test_round_trip(self, a2t, a3):
        for matrix, text in ((a2t, "tustuts"), (a3, "s1 s2 s3"), (a2t, "-")):
            word = matrix.word(text)
            assert matrix.word(matrix.word_str(word)) == word

    def test_unknown_token_rejected(self, a2t):
        with pytest.raises(WordSyntaxError):
            a2t.word("sxy")

    def test_multichar_tokens_never_split(self, a3):
        with pytest.raises(WordSyntaxError):
            a3.word("s1s2")


class TestBraidClass:
    def test_no_applicable_move(self, a2t):
        assert braid_class(a2t, a2t.word("st")) == {a2t.word("st")}

    def test_single_relation(self, a2t):
        assert braid_class(a2t, a2t.word("sts")) == {
            a2t.word("sts"),
            a2t.word("tst"),
        }

    def test_b2_long_relation(self, b2):
        # exhaustive move application: only one factor, swapped once
        assert braid_class(b2, b2.word("stst")) == {
            b2.word("stst"),
            b2.word("tsts"),
        }

    def test_rejects_non_reduced(self, a2t):
        with pytest.raises(NotReduced):
            braid_class(a2t, a2t.word("ss"))

    def test_cap_exceeded(self):
        # fresh system: the shared fixtures may already have this class cached
        matrix = CoxeterMatrix.from_pairs("st", {("s", "t"): 3})
        with pytest.raises(CapExceeded):
            braid_class(matrix, matrix.word("sts"), cap=1)

    def test_matches_naive_fixpoint_orbit(self, a2t, b3):
        for matrix in (a2t, b3):
            for word in helpers.all_words(matrix, 5):
                if is_reduced(matrix, word):
                    assert braid_class(matrix, word) == helpers.naive_braid_orbit(
                        matrix, word
                    )


class TestIsReduced:
    def test_adjacent_repeat(self, a2t):
        assert not is_reduced(a2t, a2t.word("ss"))

    def test_worked_example_word(self, a2t):
        assert is_reduced(a2t, a2t.word("tustuts"))

    def test_commutation_exposes_repeat(self, a1a1):
        # stst -> sstt by the m=2 move
        assert not is_reduced(a1a1, a1a1.word("stst"))

    def test_matches_naive_fixpoint(self, b2, a2):
        for matrix in (b2, a2):
            for word in helpers.all_words(matrix, 6):
                assert is_reduced(matrix, word) == helpers.naive_is_reduced(
                    matrix, word
                )


class TestReduce:
    def test_ss_is_identity(self, a2t):
        assert reduce_word(a2t, a2t.word("ss")).is_identity()

    def test_square_of_worked_example(self, a2t):
        w = a2t.element("tustuts")
        square = multiply(w, w)
        assert square.length == 12
        assert square == a2t.element("tustustustus")

    def test_braid_related_words_agree(self, a2t):
        assert reduce_word(a2t, a2t.word("sts")) == reduce_word(a2t, a2t.word("tst"))

    def test_canonical_examples(self, a2t):
        assert canonical_word(a2t, a2t.word("tst")) == a2t.word("sts")
        assert canonical_word(a2t, b"") == b""
        assert canonical_word(a2t, a2t.word("uss")) == a2t.word("u")

    def test_canonical_is_least_class_member(self, a2t, b3):
        for matrix in (a2t, b3):
            for word in helpers.all_words(matrix, 5):
                canon = canonical_word(matrix, word)
                assert canon == min(braid_class(matrix, canon))


class TestArithmetic:
    def test_generator_squares_to_identity(self, a2t):
        s = a2t.element("s")
        assert multiply(s, s).is_identity()

    def test_inverse_reverses(self, a2t):
        assert inverse(a2t.element("stu")) == a2t.element("uts")

    def test_inverse_length_preserved(self, a2t, b3):
        for matrix in (a2t, b3):
            for word in helpers.all_words(matrix, 5):
                e = reduce_word(matrix, word)
                assert inverse(e).length == e.length

    def test_power_of_worked_example(self, a2t):
        assert power(a2t.element("tustuts"), 2).length == 12

    def test_negative_power(self, a2t):
        e = a2t.element("stu")
        assert power(e, -2) == inverse(multiply(e, e))

    def test_power_zero(self, a2t):
        assert power(a2t.element("stu"), 0).is_identity()

    def test_group_laws_on_small_sample(self, b3):
        elements = [reduce_word(b3, w) for w in helpers.all_words(b3, 3)]
        sample = sorted(set(elements))[:10]
        for x in sample:
            assert multiply(x, inverse(x)).is_identity()
            for y in sample[:5]:
                assert multiply(x, y).length <= x.length + y.length

    def test_cross_system_multiply_rejected(self, a2, a3):
        with pytest.raises(ValueError):
            multiply(a2.element("s"), a3.element("s1"))


class TestDescentsAndSupport:
    def test_identity_has_no_descents(self, a2t):
        assert left_descents(a2t.identity()) == frozenset()
        assert right_descents(a2t.identity()) == frozenset()

    def test_long_dihedral_word(self, a2):
        e = a2.element("sts")
        assert left_descents(e) == {0, 1}

    def test_two_letter_word(self, a2t):
        assert left_descents(a2t.element("st")) == {a2t.index("s")}
        assert right_descents(a2t.element("st")) == {a2t.index("t")}

    def test_descent_definition(self, a2t, b3):
        # s is a left descent iff multiplying by s shortens by exactly one
        for matrix in (a2t, b3):
            for word in helpers.all_words(matrix, 4):
                e = reduce_word(matrix, word)
                for i in range(matrix.rank):
                    product = multiply(matrix.generator(i), e)
                    if i in left_descents(e):
                        assert product.length == e.length - 1
                    else:
                        assert product.length == e.length + 1

    def test_support_examples(self, a2t):
        assert support(a2t.identity()) == frozenset()
        assert support(a2t.element("tustuts")) == {0, 1, 2}
        assert support(a2t.element("st")) == {0, 1}

    def test_support_constant_across_class(self, a2t, b3):
        for matrix in (a2t, b3):
            for word in helpers.all_words(matrix, 5):
                e = reduce_word(matrix, word)
                letter_sets = {frozenset(w) for w in braid_class(matrix, e.word)}
                assert letter_sets == {support(e)}


class TestCommutationClass:
    def test_subset_of_braid_class(self, b3):
        for word in helpers.all_words(b3, 5):
            if is_reduced(b3, word):
                assert commutation_class(b3, word) <= braid_class(b3, word)

    def test_rejects_non_reduced(self, a2):
        with pytest.raises(NotReduced):
            commutation_class(a2, a2.word("ss"))


WORD_STRATEGY = st.lists(st.integers(min_value=0, max_value=2), max_size=9)


class TestWordProperties:
    @settings(max_examples=60, deadline=None)
    @given(letters=WORD_STRATEGY)
    def test_canonical_idempotent(self, letters):
        matrix = helpers.A2T
        word = bytes(letters)
        canon = canonical_word(matrix, word)
        assert canonical_word(matrix, canon) == canon

    @settings(max_examples=60, deadline=None)
    @given(letters=WORD_STRATEGY)
    def test_reduction_parity_and_shrinking(self, letters):
        matrix = helpers.B3
        word = bytes(letters)
        e = reduce_word(matrix, word)
        assert e.length <= len(word)
        assert e.length % 2 == len(word) % 2

    @settings(max_examples=40, deadline=None)
    @given(letters=WORD_STRATEGY)
    def test_braid_class_uniformity(self, letters):
        matrix = helpers.A2T
        e = reduce_word(matrix, bytes(letters))
        cls = braid_class(matrix, e.word)
        assert {len(w) for w in cls} == {e.length}
        assert all(canonical_word(matrix, w) == e.word for w in cls)

import numpy as np
import pytest

import helpers
from coxkit import (
    conjugacy_class_bruteforce,
    enumerate_elements,
    geometric_rep,
    is_finite_order,
    is_reduced,
    is_reduced_oracle,
    order_bruteforce,
    reduce_word,
    whole_group,
)
from coxkit.errors import CapExceeded


class TestGeometricRep:
    def test_generator_maps_are_involutions(self):
        for matrix in helpers.WORD_PROBLEM_SYSTEMS:
            rep = geometric_rep(matrix)
            for reflection in rep.maps:
                assert np.allclose(reflection @ reflection, np.eye(matrix.rank), atol=1e-12)

    def test_form_diagonal_exactly_one(self):
        for matrix in helpers.WORD_PROBLEM_SYSTEMS:
            rep = geometric_rep(matrix)
            assert all(rep.form[i, i] == 1.0 for i in range(matrix.rank))

    def test_infinite_order_encodes_minus_one(self, dinf):
        rep = geometric_rep(dinf)
        assert rep.form[0, 1] == -1.0


class TestIsReducedOracle:
    def test_repeat_is_negative(self, a2t):
        assert not is_reduced_oracle(a2t, a2t.word("ss"))

    def test_worked_example_word(self, a2t):
        assert is_reduced_oracle(a2t, a2t.word("tustuts"))

    def test_empty_word(self, a2t):
        assert is_reduced_oracle(a2t, b"")

    def test_length_cap_enforced(self, a2t):
        with pytest.raises(CapExceeded):
            is_reduced_oracle(a2t, a2t.word("stu" * 6))

    def test_agrees_with_engine_on_short_words(self):
        # the full length-7 sweep is the acceptance suite; spot-check here
        for matrix in helpers.WORD_PROBLEM_SYSTEMS:
            for word in helpers.all_words(matrix, 4):
                assert is_reduced_oracle(matrix, word) == is_reduced(matrix, word)


class TestEnumeration:
    def test_dihedral_of_order_six(self, a2):
        assert len(enumerate_elements(a2, 3)) == 6

    def test_symmetric_group_on_four_letters(self, a3):
        assert len(enumerate_elements(a3, 6)) == 24

    def test_length_zero(self, a2t):
        elements = enumerate_elements(a2t, 0)
        assert len(elements) == 1 and elements[0].is_identity()

    def test_whole_group_b3(self, b3):
        assert len(whole_group(b3)) == 48

    def test_whole_group_infinite_raises(self, a2t):
        with pytest.raises(CapExceeded):
            whole_group(a2t, cap=500)

    def test_parabolic_restriction(self, a2t):
        assert len(enumerate_elements(a2t, None, letters={0, 1})) == 6

    def test_canonical_ordering(self, b3):
        elements = enumerate_elements(b3, 4)
        assert list(elements) == sorted(elements)

    def test_lengths_respect_bound(self, a2t):
        assert all(e.length <= 5 for e in enumerate_elements(a2t, 5))


class TestBruteForceClasses:
    def test_identity_class(self, a3):
        cls = conjugacy_class_bruteforce(a3.identity(), None)
        assert len(cls) == 1 and cls[0].is_identity()

    def test_transpositions_of_s4(self, a3):
        cls = conjugacy_class_bruteforce(a3.element("s1"), 6)
        expected = {
            a3.element(text)
            for text in ("s1", "s2", "s3", "s1 s2 s1", "s2 s3 s2", "s1 s2 s3 s2 s1")
        }
        assert set(cls) == expected

    def test_dihedral_long_word_meets_shorter_conjugates(self, a2):
        cls = conjugacy_class_bruteforce(a2.element("sts"), 3)
        assert any(e.length == 1 for e in cls)


class TestBruteForceOrders:
    def test_generator_order_two(self, a2t):
        assert order_bruteforce(a2t.element("s"), 5) == 2

    def test_rotation_order_three(self, a2):
        assert order_bruteforce(a2.element("st"), 10) == 3

    def test_infinite_order_absent(self, a2t):
        assert order_bruteforce(a2t.element("stu"), 20) is None

    def test_identity_order_one(self, a2t):
        assert order_bruteforce(a2t.identity(), 5) == 1


class TestOrderConsistency:
    def test_matches_finite_order_detector(self, a3, a2t):
        # adequate cap: torsion orders are at most 3 here (A2-parabolics) and 4 (S4);
        # pushing far beyond 6 only inflates braid classes of infinite-order powers
        for matrix in (a3, a2t):
            for word in helpers.all_words(matrix, 5):
                e = reduce_word(matrix, word)
                found = order_bruteforce(e, 6) is not None
                assert found == is_finite_order(e), str(e)

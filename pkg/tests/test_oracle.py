from itertools import islice

import pytest

from syt import (
    QPolynomial,
    Shape,
    SizeCapExceeded,
    Tableau,
    UnsupportedShapeError,
    oracle,
    partitions_of,
    syt_count,
)
from syt.tables import RefinedKey


def all_shapes(max_cells):
    for size in range(max_cells + 1):
        yield from partitions_of(size)


class TestEnumeration:
    def test_two_one(self):
        tabs = list(oracle.standard_tableaux(Shape((2, 1))))
        assert tabs == [Tableau([[1, 2], [3]]), Tableau([[1, 3], [2]])]

    def test_single_column_forced(self):
        tabs = list(oracle.standard_tableaux(Shape((1, 1, 1))))
        assert tabs == [Tableau([[1], [2], [3]])]

    def test_three_three(self):
        assert len(list(oracle.standard_tableaux(Shape((3, 3))))) == 5

    def test_empty_shape(self):
        assert list(oracle.standard_tableaux(Shape(()))) == [Tableau(())]

    def test_counts_match_hook_length_formula(self):
        for shape in all_shapes(12):
            count = sum(1 for _ in oracle.standard_tableaux(shape))
            assert count == syt_count(shape), shape

    def test_all_yields_standard_and_distinct(self):
        for shape in all_shapes(8):
            tabs = list(oracle.standard_tableaux(shape))
            assert len(set(tabs)) == len(tabs)
            assert all(t.shape == shape for t in tabs)

    def test_canonical_order_is_lex_reading_word(self):
        # Exercises (3,2,1) in particular, where branch interleaving makes
        # value-by-value placement emit a non-lexicographic order.
        for shape in all_shapes(9):
            words = [t.reading_word() for t in oracle.standard_tableaux(shape)]
            assert words == sorted(words), shape

    def test_deterministic(self):
        shape = Shape((4, 3, 1))
        first = list(oracle.standard_tableaux(shape))
        second = list(oracle.standard_tableaux(shape))
        assert first == second

    def test_early_termination(self):
        stream = oracle.standard_tableaux(Shape((8, 8)))
        first_two = list(islice(stream, 2))
        assert len(first_two) == 2
        assert first_two[0].rows[0] == (1, 2, 3, 4, 5, 6, 7, 8)

    def test_size_cap_refusal(self):
        with pytest.raises(SizeCapExceeded) as exc:
            oracle.standard_tableaux(Shape((9, 9)))
        assert "16" in str(exc.value)
        assert exc.value.max_cells == 16

    def test_cap_override(self):
        tabs = oracle.standard_tableaux(Shape((9, 9)), max_cells=18)
        assert sum(1 for _ in tabs) == syt_count(Shape((9, 9)))


class TestDescentDistribution:
    def test_three_three(self):
        dist = oracle.descent_distribution(Shape((3, 3)))
        assert dist.as_dict() == {RefinedKey(1): 1, RefinedKey(2): 3, RefinedKey(3): 1}
        assert dist.total() == 5

    def test_hook_concentrates_at_m(self):
        dist = oracle.descent_distribution(Shape((3, 1, 1)))
        assert dist.as_dict() == {RefinedKey(2): 6}

    def test_single_row(self):
        dist = oracle.descent_distribution(Shape((4,)))
        assert dist.as_dict() == {RefinedKey(0): 1}

    def test_totals(self):
        for shape in all_shapes(9):
            assert oracle.descent_distribution(shape).total() == syt_count(shape)


class TestRefinedDistribution:
    def test_two_two(self):
        dist = oracle.refined_distribution(Shape((2, 2)))
        assert dist.as_dict() == {RefinedKey(1, 2): 1, RefinedKey(2, 3): 1}

    def test_two_two_one(self):
        dist = oracle.refined_distribution(Shape((2, 2, 1)))
        assert dist.as_dict() == {
            RefinedKey(2, 2, 5): 1,
            RefinedKey(2, 2, 4): 1,
            RefinedKey(3, 3, 5): 1,
            RefinedKey(2, 3, 4): 1,
            RefinedKey(3, 4, 3): 1,
        }

    def test_two_one_one(self):
        dist = oracle.refined_distribution(Shape((2, 1, 1)))
        assert dist.as_dict() == {
            RefinedKey(2, 2, 4): 1,
            RefinedKey(2, 3, 4): 1,
            RefinedKey(2, 4, 3): 1,
        }

    @pytest.mark.parametrize("parts", [(3,), (3, 3, 3), (2, 2, 1, 1), (4, 2, 2)])
    def test_unsupported_shapes(self, parts):
        with pytest.raises(UnsupportedShapeError):
            oracle.refined_distribution(Shape(parts))

    def test_marginal_matches_descent_distribution(self):
        shapes = [Shape(p) for p in [(4, 2), (5, 5), (3, 3), (4, 3, 1), (3, 3, 1), (5, 2, 1)]]
        for shape in shapes:
            refined = oracle.refined_distribution(shape)
            assert refined.descent_marginal() == oracle.descent_distribution(shape)
            assert refined.total() == syt_count(shape)


class TestMajorIndexGF:
    def test_examples(self):
        assert oracle.major_index_gf(Shape((2, 2))) == QPolynomial([0, 0, 1, 0, 1])
        assert oracle.major_index_gf(Shape((3,))) == QPolynomial([1])
        assert oracle.major_index_gf(Shape((1, 1, 1))) == QPolynomial([0, 0, 0, 1])

    def test_value_at_one_is_count(self):
        for shape in all_shapes(9):
            assert oracle.major_index_gf(shape)(1) == syt_count(shape)

    def test_maj_bounded_by_triangle(self):
        for shape in all_shapes(9):
            n = shape.n
            assert oracle.major_index_gf(shape).degree <= n * (n - 1) // 2

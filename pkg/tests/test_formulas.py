import pytest

from syt import Shape, formulas, oracle, syt_count
from syt.formulas import NOT_COVERED
from syt.tables import RefinedKey


class TestBinomial:
    def test_convention(self):
        assert formulas.binomial(5, 2) == 10
        assert formulas.binomial(5, -1) == 0
        assert formulas.binomial(-1, 0) == 0
        assert formulas.binomial(3, 5) == 0

    def test_catalan(self):
        assert [formulas.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


class TestHookDistribution:
    @pytest.mark.parametrize("n, m, d, count", [
        (3, 1, 1, 3),
        (1, 0, 0, 1),
        (3, 2, 2, 6),
        (5, 0, 0, 1),
        (1, 4, 4, 1),
    ])
    def test_examples(self, n, m, d, count):
        table = formulas.hook_distribution(n, m)
        assert table.as_dict() == {RefinedKey(d): count}

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            formulas.hook_distribution(0, 1)
        with pytest.raises(ValueError):
            formulas.hook_distribution(2, -1)

    def test_matches_oracle(self):
        for n in range(1, 10):
            for m in range(0, 10 - n):
                shape = Shape((n,) + (1,) * m)
                assert formulas.hook_distribution(n, m) == oracle.descent_distribution(shape)


class TestSquareRefined:
    @pytest.mark.parametrize("n, d, k, expected", [
        (2, 2, 3, 1),
        (2, 1, 2, 1),     # the d=1, k=n branch
        (3, 2, 4, 2),
        (1, 1, 1, 1),     # base value
        (2, 1, 3, 0),     # d=1 but k != n
        (2, 2, 4, 0),     # k = 2n out of range
        (2, 3, 5, 0),     # d > n and k > 2n: must not go negative
        (3, 2, 3, 0),     # k < n + d - 1
        (0, 1, 1, 0),
    ])
    def test_values(self, n, d, k, expected):
        assert formulas.square_refined_count(n, d, k) == expected

    def test_matches_oracle(self):
        for n in range(1, 8):
            refined = oracle.refined_distribution(Shape((n, n)))
            for d in range(0, n + 2):
                for k in range(n - 1, 2 * n + 1):
                    assert formulas.square_refined_count(n, d, k) == refined.get(
                        RefinedKey(d, k)), (n, d, k)

    def test_sums_to_narayana(self):
        for n in range(1, 13):
            for d in range(1, n + 1):
                total = sum(formulas.square_refined_count(n, d, k) for k in range(n, 2 * n))
                assert total == formulas.square_descent_count(n, d)


class TestNarayana:
    def test_rows(self):
        assert [formulas.square_descent_count(3, d) for d in (1, 2, 3)] == [1, 3, 1]
        assert formulas.square_descent_count(1, 1) == 1
        assert formulas.square_descent_count(4, 2) == 6

    def test_out_of_range(self):
        assert formulas.square_descent_count(3, 0) == 0
        assert formulas.square_descent_count(3, 4) == 0
        assert formulas.square_descent_count(0, 1) == 0

    def test_sum_is_catalan(self):
        for n in range(1, 21):
            total = sum(formulas.square_descent_count(n, d) for d in range(1, n + 1))
            assert total == formulas.catalan(n)

    def test_symmetry(self):
        for n in range(1, 21):
            for d in range(1, n + 1):
                assert formulas.square_descent_count(n, d) == \
                    formulas.square_descent_count(n, n + 1 - d)

    def test_matches_oracle(self):
        for n in range(1, 8):
            dist = oracle.descent_distribution(Shape((n, n)))
            for d in range(1, n + 1):
                assert dist.get(RefinedKey(d)) == formulas.square_descent_count(n, d)


class TestTwoRowRefined:
    @pytest.mark.parametrize("n, m, d, k, expected", [
        (2, 1, 1, 2, 1),
        (2, 1, 1, 3, 1),   # k = n + m uses the shifted descent count
        (3, 2, 2, 4, 2),
        (3, 2, 2, 5, 1),   # k = n + m branch; brute force gives 1 here
        (3, 2, 1, 3, 1),
        (3, 2, 2, 3, 0),
        (3, 2, 1, 6, 0),   # k beyond n + m
        (3, 2, 1, 2, 0),   # k below n
    ])
    def test_values(self, n, m, d, k, expected):
        assert formulas.two_row_refined_count(n, m, d, k) == expected

    def test_matches_oracle(self):
        for n in range(1, 10):
            for m in range(1, min(n, 10 - n) + 1):
                refined = oracle.refined_distribution(Shape((n, m)))
                for d in range(0, m + 2):
                    for k in range(n - 1, n + m + 2):
                        assert formulas.two_row_refined_count(n, m, d, k) == \
                            refined.get(RefinedKey(d, k)), (n, m, d, k)


class TestTwoRowDescent:
    @pytest.mark.parametrize("n, m, d, expected", [
        (2, 1, 1, 2),
        (4, 2, 2, 6),
        (3, 3, 2, 3),
        (2, 1, 2, 0),     # d > m
        (3, 4, 1, 0),     # m > n
    ])
    def test_values(self, n, m, d, expected):
        assert formulas.two_row_descent_count(n, m, d) == expected

    def test_distribution_totals(self):
        for n in range(1, 12):
            for m in range(1, min(n, 12 - n) + 1):
                table = formulas.two_row_distribution(n, m)
                assert table.total() == syt_count(Shape((n, m)))

    def test_matches_oracle(self):
        for n in range(1, 12):
            for m in range(1, min(n, 12 - n) + 1):
                assert formulas.two_row_distribution(n, m) == \
                    oracle.descent_distribution(Shape((n, m)))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            formulas.two_row_distribution(2, 3)


class TestThreeRowReduction:
    def test_maximal_c_branch(self):
        # (2,1,1): c = n+m+1 = 4 is maximal, so the two-row count applies.
        assert formulas.three_row_reduction(2, 1, 2, 2, 4) == 1
        assert formulas.three_row_reduction(2, 1, 2, 3, 4) == 1

    def test_not_covered(self):
        assert formulas.three_row_reduction(2, 1, 2, 4, 3) is NOT_COVERED
        assert not formulas.three_row_reduction(2, 1, 2, 4, 3)
        assert repr(NOT_COVERED) == "NotCovered"

    def test_interior_branches(self):
        # (3,2,1) with non-maximal c: k = c-1 and k < c-1 branches.
        assert formulas.three_row_reduction(3, 2, 2, 4, 5) == 2
        assert formulas.three_row_reduction(3, 2, 2, 3, 5) == 1
        assert formulas.three_row_reduction(3, 2, 3, 4, 5) == 0

    def test_rejects_k_equal_c(self):
        with pytest.raises(ValueError):
            formulas.three_row_reduction(2, 1, 2, 3, 3)

    def test_branch_precedence_maximal_c_first(self):
        branches = formulas.three_row_reduction_branches(2, 1, 2, 2, 4)
        assert branches[0][0] == "c-maximal"
        assert [name for name, _ in branches] == ["c-maximal", "k<c-1"]

    def test_overlapping_branches_agree(self):
        # Where c is maximal the k-relative branches also apply; the
        # two-row connection makes all applicable values coincide.
        for n in range(1, 9):
            for m in range(1, min(n, 9 - n) + 1):
                c = n + m + 1
                for d in range(2, m + 2):
                    for k in range(n, n + m + 1):
                        values = {v for _, v in
                                  formulas.three_row_reduction_branches(n, m, d, k, c)}
                        assert len(values) == 1, (n, m, d, k, c)

    def test_covered_points_match_oracle(self):
        for n in range(1, 9):
            for m in range(1, min(n, 9 - n) + 1):
                refined = oracle.refined_distribution(Shape((n, m, 1)))
                for d in range(2, m + 2):
                    for k in range(n, n + m + 2):
                        for c in range(3, n + m + 2):
                            if c <= k:
                                continue
                            assert formulas.three_row_reduction(n, m, d, k, c) == \
                                refined.get(RefinedKey(d, k, c)), (n, m, d, k, c)

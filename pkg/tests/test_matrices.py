import pytest

import golden as G
from symptok.matrices import (
    DimensionMismatchError,
    GTShapeError,
    SympGTPattern,
    UTurnASM,
    brute_force_uasm,
    classify_blr,
    col_cumsum,
    count_gtp,
    enumerate_gtp,
    enumerate_uasm,
    row_cumsum,
    validate_gtp,
    validate_uasm,
)
from symptok.tableaux import enumerate_st

A1 = UTurnASM(1, ((1,), (0,)))
A2 = UTurnASM(1, ((0,), (1,)))


class TestValidateUASM:
    def test_golden_matrix(self):
        assert validate_uasm(G.A, G.LAMBDA) == (True, [])

    def test_rank_one_both_turns(self):
        assert validate_uasm(A1, (1,))[0]
        assert validate_uasm(A2, (1,))[0]

    def test_column_sum_two_rejected(self):
        ok, bad = validate_uasm(UTurnASM(1, ((1,), (1,))), (1,))
        assert not ok
        assert any("UA4" in v for v in bad)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            validate_uasm(UTurnASM(1, ((1, 0), (0, 0))), (1,))


class TestEnumerateUASM:
    def test_rank_one(self):
        got = {a.entries for a in enumerate_uasm((1,), 1)}
        assert got == {A1.entries, A2.entries}

    def test_cardinality_matches_tableaux(self):
        lam, n = (2, 1), 2
        assert sum(1 for _ in enumerate_uasm(lam, n)) == sum(
            1 for _ in enumerate_st(lam, n))

    def test_brute_force_agreement(self):
        # every grid with at most 12 cells among the shapes used here
        for lam, n in [((1,), 1), ((2,), 1), ((3,), 1), ((2, 1), 2), ((3, 1), 2)]:
            if 2 * n * lam[0] > 12:
                continue
            got = {a.entries for a in enumerate_uasm(lam, n)}
            want = {a.entries for a in brute_force_uasm(lam, n)}
            assert got == want, (lam, n)

    def test_golden_matrix_is_in_its_family(self):
        # membership check only; the full family is far beyond enumeration
        ok, bad = validate_uasm(G.A, G.LAMBDA)
        assert ok and not bad


class TestCumulativeSums:
    def test_golden_displays(self):
        assert row_cumsum(G.A) == G.ROW_SUMS
        assert col_cumsum(G.A) == G.COL_SUMS

    def test_rank_one(self):
        assert row_cumsum(A1) == ((1,), (0,))
        assert col_cumsum(A2) == ((0,), (1,))

    def test_row_arithmetic(self):
        a = UTurnASM(1, ((1, 0, -1, 1), (0, 0, 0, 0)))
        assert row_cumsum(a)[0] == (1, 0, 0, 1)

    def test_column_arithmetic(self):
        a = UTurnASM(2, ((1,), (-1,), (1,), (0,)))
        assert tuple(r[0] for r in col_cumsum(a)) == (1, 0, 1, 1)

    def test_values_stay_binary_on_valid_matrices(self):
        for a in enumerate_uasm((3, 1), 2):
            row_cumsum(a)
            col_cumsum(a)


GT_11 = SympGTPattern(1, ((1,), (1,)))
GT_10 = SympGTPattern(1, ((0,), (1,)))


class TestValidateGTP:
    def test_golden_pattern(self):
        assert validate_gtp(G.GT) == (True, [])

    def test_rank_one_valid(self):
        assert validate_gtp(GT_11)[0]
        assert validate_gtp(GT_10)[0]

    def test_both_zero_rejected(self):
        ok, bad = validate_gtp(SympGTPattern(1, ((0,), (0,))))
        assert not ok
        assert any(v.startswith("seed") for v in bad)

    def test_shape_error(self):
        with pytest.raises(GTShapeError):
            validate_gtp(SympGTPattern(2, ((1,), (1,))))


class TestEnumerateGTP:
    def test_rank_one(self):
        got = {g.rows for g in enumerate_gtp((1,), 1)}
        assert got == {GT_11.rows, GT_10.rows}

    def test_cardinality_matches_tableaux(self):
        lam, n = (2, 1), 2
        assert sum(1 for _ in enumerate_gtp(lam, n)) == sum(
            1 for _ in enumerate_st(lam, n))

    def test_golden_pattern_is_reached(self):
        # the running shape is too large to sweep; check validity plus the
        # count oracle on a truncation instead
        assert validate_gtp(G.GT)[0]
        assert count_gtp((3, 2, 1), 3) == sum(1 for _ in enumerate_gtp((3, 2, 1), 3))

    def test_every_output_validates(self):
        for g in enumerate_gtp((4, 2, 1), 3):
            assert validate_gtp(g)[0]


class TestClassifyBLR:
    def test_rank_one_seed_cases(self):
        marks = classify_blr(GT_11)
        assert marks.unbarred[(1, 1)] == "B"
        assert marks.barred[(1, 1)] == "L"
        marks = classify_blr(GT_10)
        assert marks.unbarred[(1, 1)] == "L"
        assert marks.barred[(1, 1)] == "B"

    def test_marks_partition_every_position(self):
        for g in enumerate_gtp((3, 1), 2):
            marks = classify_blr(g)
            for k in range(1, 3):
                for j in range(1, k + 1):
                    assert marks.unbarred[(k, j)] in "BLR"
                    assert marks.barred[(k, j)] in "BLR"
                # right saturation cannot happen on the diagonal
                assert marks.unbarred[(k, k)] in "BL"
                assert marks.barred[(k, k)] in "BL"
                # seed rule: the two diagonal left-saturations exclude each other
                assert not (marks.unbarred[(k, k)] == "L"
                            and marks.barred[(k, k)] == "L")

    def test_golden_running_example_statistics(self):
        # classification feeds the counting statistics checked in test_weights
        marks = classify_blr(G.GT)
        assert marks.unbarred[(5, 1)] == "L"
        assert marks.barred[(5, 1)] == "B"
        assert marks.barred[(5, 5)] == "L"


def test_count_gtp_running_example_scale():
    assert count_gtp((2, 1), 2) == 12
    assert count_gtp((9, 7, 6, 2, 1), 5) == 19781353800

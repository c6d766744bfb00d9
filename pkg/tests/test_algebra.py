"""Тесты ядра линейной алгебры: F2[t, t^-1], F2-исключение, SNF"""

import numpy as np
import pytest

from src.algebra import (
    ONE,
    ONE_PLUS_T,
    T,
    ZERO,
    Gf2ColumnSpan,
    LaurentColumnSpan,
    LaurentPoly,
    SparseMatrix,
    gf2_gauss,
    gf2_rank,
    image_membership,
    laurent_kernel_basis,
    laurent_snf,
)
from src.errors import DimensionError, UsageError

P = LaurentPoly.parse


# ============================================================
# LaurentPoly
# ============================================================

class TestLaurentPoly:

    def test_parse_and_print(self):
        assert str(P("1+t+t^3")) == "1+t+t^3"
        assert P("t^-1+t").exponents() == (-1, 1)
        assert P("t^(-2)").exponents() == (-2,)
        assert P("0") == ZERO

    def test_parse_cancels_mod_two(self):
        assert P("1+1") == ZERO
        assert P("t+t+t") == T

    def test_parse_rejects_garbage(self):
        with pytest.raises(UsageError):
            P("x^2")

    def test_frobenius_square(self):
        assert ONE_PLUS_T * ONE_PLUS_T == P("1+t^2")

    def test_division_with_remainder(self):
        q, r = divmod(P("1+t^3"), ONE_PLUS_T)
        assert q == P("1+t+t^2")
        assert r == ZERO
        q, r = divmod(P("t^2+t^5"), P("1+t^2"))
        assert q * P("1+t^2") + r == P("t^2+t^5")
        assert r.width < P("1+t^2").width

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(ONE, ZERO)

    def test_gcd_is_normalized(self):
        assert P("t^3+t^5").gcd(P("t+t^2")) == ONE_PLUS_T
        assert P("1+t^2").gcd(P("1+t+t^2")) == ONE

    def test_units(self):
        assert P("t^3").is_unit()
        assert P("t^3").unit_inverse() == P("t^-3")
        assert not ONE_PLUS_T.is_unit()
        with pytest.raises(ArithmeticError):
            ONE_PLUS_T.unit_inverse()

    def test_evaluate_at_one(self):
        assert ONE_PLUS_T.evaluate_at_one() == 0
        assert P("1+t+t^2").evaluate_at_one() == 1

    def test_width_and_normalized(self):
        p = P("t^-2+t^3")
        assert p.width == 5
        assert p.normalized() == P("1+t^5")
        assert ZERO.width == -1


# ============================================================
# SparseMatrix
# ============================================================

class TestSparseMatrix:

    def test_zero_entries_are_dropped(self):
        m = SparseMatrix.from_rows([[1, 0], [2, 3]])
        assert m.entries == {(0, 0): 1, (1, 1): 1}

    def test_laurent_from_strings(self):
        m = SparseMatrix.from_rows([["1+t", "0"], ["t", "1"]], "laurent")
        assert m.get(0, 0) == ONE_PLUS_T
        assert m.get(0, 1) == ZERO
        assert m.nnz() == 3

    def test_matmul_and_transpose(self):
        a = SparseMatrix.from_rows([[1, 1], [0, 1]])
        assert a @ a == SparseMatrix.identity(2)
        assert a.transpose().to_dense() == [[1, 0], [1, 1]]

    def test_specialize_at_one(self):
        m = SparseMatrix.from_rows([["1+t", "t"]], "laurent")
        assert m.specialize_at_one().to_dense() == [[0, 1]]

    def test_out_of_range_entry(self):
        with pytest.raises(IndexError):
            SparseMatrix(1, 1, {(1, 0): 1})

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            SparseMatrix.zeros(2, 3) @ SparseMatrix.zeros(2, 3)


# ============================================================
# F2
# ============================================================

class TestGf2:

    def test_rank(self):
        assert gf2_rank(SparseMatrix.from_rows([[1, 1], [1, 1]])) == 1
        assert gf2_rank(SparseMatrix.identity(4)) == 4
        assert gf2_rank(SparseMatrix.zeros(0, 3)) == 0

    def test_cycle_matrix_has_rank_two(self):
        result = gf2_gauss(SparseMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
        assert result.rank == 2
        assert [v.tolist() for v in result.kernel_basis] == [[1, 1, 1]]

    def test_zero_matrix_kernel(self):
        result = gf2_gauss(SparseMatrix.zeros(3, 3))
        assert result.rank == 0
        assert result.nullity == 3
        assert result.image_basis == ()

    def test_kernel_and_image(self):
        m = SparseMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
        result = gf2_gauss(m)
        assert result.rank == 2
        assert result.nullity == 1
        array = m.to_dense_gf2().astype(np.int64)
        for vector in result.kernel_basis:
            assert not ((array @ vector.astype(np.int64)) % 2).any()
        assert [v.tolist() for v in result.kernel_basis] == [[1, 1, 1]]
        assert len(result.image_basis) == 2

    def test_column_span(self):
        span = Gf2ColumnSpan(SparseMatrix.from_rows([[1, 0], [1, 0], [0, 1]]))
        assert span.contains([1, 1, 1])
        assert not span.contains([1, 0, 0])
        x = span.solve([1, 1, 0])
        assert x.tolist() == [1, 0]

    def test_column_span_dimension_error(self):
        with pytest.raises(DimensionError):
            Gf2ColumnSpan(SparseMatrix.identity(2)).solve([1, 0, 1])


# ============================================================
# Smith normal form
# ============================================================

class TestSnf:

    def test_invariant_factors(self):
        m = SparseMatrix.from_rows([["1+t", "1"], ["0", "1+t"]], "laurent")
        snf = laurent_snf(m)
        assert snf.invariants == (ONE, P("1+t^2"))
        assert snf.torsion() == (P("1+t^2"),)
        assert snf.rank == 2

    def test_transforms_and_inverses(self):
        m = SparseMatrix.from_rows([["1+t", "t^2", "1"], ["1+t^2", "0", "1+t"]], "laurent")
        snf = laurent_snf(m)
        assert snf.left @ m @ snf.right == snf.diagonal()
        assert snf.left_inverse @ snf.diagonal() @ snf.right_inverse == m
        assert snf.left @ snf.left_inverse == SparseMatrix.identity(2, "laurent")
        assert snf.right @ snf.right_inverse == SparseMatrix.identity(3, "laurent")

    def test_divisibility_chain(self):
        m = SparseMatrix.from_rows([["1+t", "0"], ["0", "1+t+t^2"]], "laurent")
        snf = laurent_snf(m)
        assert snf.invariants[0].divides(snf.invariants[1])
        assert snf.invariants == (ONE, P("1+t^3"))

    def test_invariants_have_lowest_exponent_zero(self):
        snf = laurent_snf(SparseMatrix.from_rows([["t^3+t^4"]], "laurent"))
        assert snf.invariants == (ONE_PLUS_T,)

    def test_kernel_basis(self):
        m = SparseMatrix.from_rows([["1+t", "1+t"]], "laurent")
        kernel = laurent_kernel_basis(m)
        assert len(kernel) == 1
        assert not any(m.apply(kernel[0]))

    def test_zero_matrix(self):
        snf = laurent_snf(SparseMatrix.zeros(2, 2, "laurent"))
        assert snf.rank == 0
        assert len(laurent_kernel_basis(SparseMatrix.zeros(2, 2, "laurent"))) == 2


# ============================================================
# image_membership
# ============================================================

class TestImageMembership:

    def test_laurent_submodule(self):
        m = SparseMatrix.from_rows([["1+t"]], "laurent")
        assert image_membership(m, [P("1+t^2")]) == [ONE_PLUS_T]
        assert image_membership(m, [ONE]) is None

    def test_laurent_span_solution_is_exact(self):
        m = SparseMatrix.from_rows([["1+t", "1"], ["0", "1+t"]], "laurent")
        span = LaurentColumnSpan(m)
        v = [ONE, P("t+t^2")]
        x = span.solve(v)
        assert x == [ONE, T]
        assert m.apply(x) == v
        assert not span.contains([T, P("1+t^2")])

    def test_gf2(self):
        m = SparseMatrix.from_rows([[1, 1], [0, 1]])
        assert image_membership(m, [0, 1]) == [1, 1]

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            image_membership(SparseMatrix.identity(2, "laurent"), [ONE])

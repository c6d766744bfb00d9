"""
Свойства на случайных комплексах с фиксированным seed:
лестницы L-space узлов, их тензорные произведения и случайные
матрицы над F2[t, t^-1].
"""

import random
from fractions import Fraction

import pytest

from src.algebra import ONE_PLUS_T, LaurentPoly, SparseMatrix, gf2_gauss, gf2_rank, laurent_snf
from src.cfk import mirror, tensor, validate
from src.state import CoefficientMode
from src.surgery import (
    auto_truncation,
    build_cone,
    compute_V,
    cone_homology,
    d_totally_twisted_zero_surgery,
    homology_rank_profile,
    safe_floor,
)

from .conftest import random_small_complex, random_staircase

SEED = 20240611
CASES = 120
TWISTED_CASES = 10


def staircase_V(c, s: int) -> int:
    """V_s лестницы по углам: min по x_{2k} от max(i, j - s)"""
    corners = []
    for g in c.generators:
        if int(g.id[1:]) % 2 == 0:
            i = -g.maslov / 2
            corners.append((i, i + g.alexander))
    return int(min(max(i, j - s) for i, j in corners))


def case_rng(case: int) -> random.Random:
    return random.Random(SEED * 1000 + case)


def default_truncation(c) -> int:
    return max(auto_truncation(c), safe_floor(c, 0))


# ============================================================
# Лестницы
# ============================================================

@pytest.mark.parametrize("case", range(CASES))
def test_staircase_v_matches_corners(case):
    c = random_staircase(case_rng(case))
    assert validate(c).ok
    previous = None
    for s in range(c.genus_bound + 2):
        value = compute_V(c, s)
        assert value == staircase_V(c, s)
        if previous is not None:
            assert previous - 1 <= value <= previous
        previous = value
    assert previous == 0


@pytest.mark.parametrize("case", range(CASES))
def test_mirror_staircase_has_v0_zero(case):
    c = random_staircase(case_rng(case))
    m = mirror(c)
    assert validate(m).ok
    assert compute_V(m, 0) == 0


# ============================================================
# Тензорные произведения
# ============================================================

@pytest.mark.parametrize("case", range(CASES // 2))
def test_v0_is_subadditive(case):
    rng = case_rng(case)
    a = random_staircase(rng, 1)
    b = random_small_complex(rng) if rng.random() < 0.3 else random_staircase(rng, 1)
    if len(a.generators) * len(b.generators) > 25:
        b = random_staircase(rng, 0)
    t = tensor(a, b)
    assert validate(t).ok
    assert compute_V(t, 0) <= compute_V(a, 0) + compute_V(b, 0)


@pytest.mark.parametrize("case", range(CASES // 2))
def test_v_is_monotone_on_random_complexes(case):
    c = random_small_complex(case_rng(case))
    values = [compute_V(c, s) for s in range(c.genus_bound + 1)]
    for left, right in zip(values, values[1:]):
        assert left - 1 <= right <= left
    assert values[-1] == 0


# ============================================================
# Устойчивое окно гомологий конуса
# ============================================================

@pytest.mark.parametrize("case", range(TWISTED_CASES))
def test_twisted_cone_has_one_tower(case):
    c = random_staircase(case_rng(case))
    d = d_totally_twisted_zero_surgery(c)
    assert d == Fraction(-1, 2)

    N = default_truncation(c)
    profile = homology_rank_profile(cone_homology(build_cone(c, 0, CoefficientMode.TWISTED, N)))
    low = d + 2 * (c.genus_bound + c.max_upower) + 2
    g = low
    while g <= N:
        assert profile.get(g, 0) == 1
        assert profile.get(g + 1, 0) == 0
        g += 2


@pytest.mark.parametrize("case", range(TWISTED_CASES))
def test_untwisted_cone_rank_is_bounded(case):
    c = random_staircase(case_rng(case))
    N = default_truncation(c)
    profile = homology_rank_profile(cone_homology(build_cone(c, 0, CoefficientMode.UNTWISTED, N)))
    low = Fraction(1, 2) + 2 * (c.genus_bound + c.max_upower) + 2
    for g, dimension in profile.items():
        if low <= g <= N:
            assert dimension <= 2


# ============================================================
# Smith normal form
# ============================================================

def random_laurent(rng: random.Random) -> LaurentPoly:
    exponents = [e for e in range(-1, 3) if rng.random() < 0.4]
    return LaurentPoly.from_exponents(exponents)


@pytest.mark.parametrize("case", range(CASES))
def test_snf_reassembles(case):
    rng = case_rng(case)
    rows, cols = rng.randint(1, 3), rng.randint(1, 3)
    m = SparseMatrix.from_rows([[random_laurent(rng) for _ in range(cols)] for _ in range(rows)], "laurent")
    snf = laurent_snf(m)
    assert snf.left @ m @ snf.right == snf.diagonal()
    assert snf.left_inverse @ snf.diagonal() @ snf.right_inverse == m
    for a, b in zip(snf.invariants, snf.invariants[1:]):
        assert a.divides(b)
    for factor in snf.invariants:
        assert min(factor.exponents()) == 0


@pytest.mark.parametrize("case", range(CASES))
def test_snf_specializes_at_one(case):
    rng = case_rng(case)
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    m = SparseMatrix.from_rows([[random_laurent(rng) for _ in range(cols)] for _ in range(rows)], "laurent")
    snf = laurent_snf(m)
    vanishing = sum(1 for factor in snf.invariants if ONE_PLUS_T.divides(factor))
    assert gf2_rank(m.specialize_at_one()) == snf.rank - vanishing


# ============================================================
# F2
# ============================================================

def random_gf2(rng: random.Random) -> SparseMatrix:
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    return SparseMatrix.from_rows([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)])


@pytest.mark.parametrize("case", range(CASES))
def test_gf2_rank_of_transpose(case):
    m = random_gf2(case_rng(case))
    assert gf2_rank(m) == gf2_rank(m.transpose())


@pytest.mark.parametrize("case", range(CASES))
def test_gf2_rank_plus_nullity(case):
    m = random_gf2(case_rng(case))
    result = gf2_gauss(m)
    assert result.rank + result.nullity == m.cols
    assert result.rank == gf2_rank(m)

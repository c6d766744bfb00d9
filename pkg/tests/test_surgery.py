"""Тесты движка: усечённые комплексы, v/h, конусы, башни, V_s, d"""

import json
from fractions import Fraction

import pytest

from src.algebra import ONE, ONE_PLUS_T, LaurentPoly
from src.cfk import catalog_get, catalog_names, mirror, tensor
from src.errors import CfkFormatError, CfkValidationError, StabilityError, TruncationError, UsageError
from src.state import CoefficientMode, OpTag
from src.surgery import (
    BUILTIN_PREFIX,
    RawTerm,
    RawTwistedComplex,
    auto_truncation,
    build_A_plus,
    build_B_plus,
    build_cone,
    builtin_not_equal,
    compute_V,
    compute_V_certified,
    cone_homology,
    d_totally_twisted_zero_surgery,
    homology_rank_profile,
    lowest_tower_grading,
    maps_v_h,
    parse_raw_twisted,
    raw_auto_truncation,
    raw_violations,
    read_raw_twisted_file,
    resolve_raw,
    safe_floor,
    serialize_raw_twisted,
    stability_run,
    truncated_chain_data,
    twisted_complex_d,
    untwisted_tower_bottoms,
)
from src.tools import get_computation_logger

HALF = Fraction(1, 2)


def region_oracle(c, s, N):
    """Прямой перебор позиций (x, i) с 0 <= max(i, i + A - s) <= N"""
    points = set()
    for g in c.generators:
        for i in range(-N - abs(g.alexander) - abs(s) - 1, N + 1):
            level = max(i, i + g.alexander - s)
            if 0 <= level <= N:
                points.add((g.id, i))
    return points


# ============================================================
# Усечённые комплексы
# ============================================================

class TestTruncated:

    def test_safe_floor_and_auto(self, trefoil, unknot):
        assert safe_floor(trefoil) == 8
        assert safe_floor(trefoil, 2) == 12
        assert auto_truncation(trefoil) == 12
        assert auto_truncation(unknot) == 4

    def test_below_floor(self, trefoil):
        with pytest.raises(TruncationError):
            build_A_plus(trefoil, 0, 4)
        with pytest.raises(TruncationError):
            build_B_plus(trefoil, 7)

    def test_trefoil_region_matches_oracle(self, trefoil):
        a = build_A_plus(trefoil, 0, 8)
        assert set(a.basis) == region_oracle(trefoil, 0, 8)
        assert a.size == 3 * 9
        assert a.index_of("a", -1) is not None
        assert a.index_of("a", 8) is None

    @pytest.mark.parametrize("name", catalog_names())
    @pytest.mark.parametrize("s", [-1, 0, 1, 2])
    def test_regions_match_oracle(self, name, s):
        c = catalog_get(name)
        N = safe_floor(c, s)
        assert set(build_A_plus(c, s, N).basis) == region_oracle(c, s, N)

    def test_unknot_a_equals_b(self, unknot):
        a, b = build_A_plus(unknot, 0, 4), build_B_plus(unknot, 4)
        assert a.basis == b.basis
        assert a.boundary.is_zero()

    def test_large_s_gives_b(self, trefoil):
        N = safe_floor(trefoil, 1)
        assert set(build_A_plus(trefoil, 1, N).basis) == set(build_B_plus(trefoil, N).basis)

    @pytest.mark.parametrize("name", catalog_names())
    def test_boundary_and_u_action(self, name):
        c = catalog_get(name)
        t = build_A_plus(c, 0, safe_floor(c))
        d, u = t.boundary, t.u_action
        assert (d @ d).is_zero()
        assert d @ u == u @ d
        for (row, col) in d.entries:
            assert t.grading[row] == t.grading[col] - 1
        for (row, col) in u.entries:
            assert t.grading[row] == t.grading[col] - 2

    def test_b_plus_towers(self, unknot, trefoil, figure8):
        for c in (unknot, trefoil, figure8):
            data = truncated_chain_data(build_B_plus(c, safe_floor(c)))
            assert lowest_tower_grading(data) == 0


# ============================================================
# v и h
# ============================================================

class TestMaps:

    def test_unknot_maps_are_identity(self, unknot):
        v, h = maps_v_h(unknot, 0, 4)
        assert v == h
        assert v.entries == {(k, k): 1 for k in range(5)}

    @pytest.mark.parametrize("name", catalog_names())
    @pytest.mark.parametrize("s", [-2, -1, 0, 1, 2])
    def test_chain_maps(self, name, s):
        c = catalog_get(name)
        N = safe_floor(c, s)
        a, b = build_A_plus(c, s, N), build_B_plus(c, N)
        v, h = maps_v_h(c, s, N)
        for f in (v, h):
            assert f @ a.boundary == b.boundary @ f
            assert f @ a.u_action == b.u_action @ f

    def test_h_shifts_grading_by_2s(self, trefoil):
        s, N = 1, safe_floor(trefoil, 1)
        a, b = build_A_plus(trefoil, s, N), build_B_plus(trefoil, N)
        v, h = maps_v_h(trefoil, s, N)
        for (row, col) in v.entries:
            assert b.grading[row] == a.grading[col]
        for (row, col) in h.entries:
            assert b.grading[row] == a.grading[col] - 2 * s

    def test_v_is_inclusion_for_large_s(self, trefoil):
        N = safe_floor(trefoil, 1)
        a = build_A_plus(trefoil, 1, N)
        b = build_B_plus(trefoil, N)
        v, _ = maps_v_h(trefoil, 1, N)
        assert v.nnz() == a.size
        for (row, col) in v.entries:
            assert b.basis[row] == a.basis[col]


# ============================================================
# Конусы
# ============================================================

class TestCone:

    def test_unknot_connecting_maps(self, unknot):
        twisted = build_cone(unknot, 0, CoefficientMode.TWISTED, 4)
        assert set(twisted.connecting.entries.values()) == {ONE_PLUS_T}
        untwisted = build_cone(unknot, 0, CoefficientMode.UNTWISTED, 4)
        assert untwisted.connecting.is_zero()

    @pytest.mark.parametrize("mode", list(CoefficientMode))
    def test_d_squared_zero(self, trefoil, mode):
        cone = build_cone(trefoil, 0, mode, 8)
        d = cone.differential()
        assert (d @ d).is_zero()
        gradings = cone.gradings()
        for (row, col) in d.entries:
            assert gradings[row] == gradings[col] - 1

    def test_unknot_cone_towers(self, unknot):
        untwisted = cone_homology(build_cone(unknot, 0, CoefficientMode.UNTWISTED, 8))
        assert untwisted.tower_bottoms == (-HALF, HALF)
        twisted = cone_homology(build_cone(unknot, 0, CoefficientMode.TWISTED, 8))
        assert twisted.tower_bottoms == (-HALF,)
        assert twisted.at(Fraction(3, 2)).torsion == (ONE_PLUS_T,)
        assert twisted.at(Fraction(3, 2)).free_rank == 0

    def test_twisted_profile_of_unknot(self, unknot):
        summary = cone_homology(build_cone(unknot, 0, CoefficientMode.TWISTED, 8))
        profile = homology_rank_profile(summary)
        assert profile[Fraction(7, 2)] == 1
        assert profile.get(Fraction(5, 2), 0) == 0

    def test_relative_grading_for_nonzero_s(self, trefoil):
        cone = build_cone(trefoil, 1, CoefficientMode.UNTWISTED, safe_floor(trefoil, 1))
        assert cone.modulus == 2
        summary = cone_homology(cone)
        assert summary.relative
        assert summary.tower_bottoms == ()
        assert all(item.grading < 2 for item in summary.per_grading)

    def test_trefoil_twisted_tower(self, trefoil):
        summary = cone_homology(build_cone(trefoil, 0, CoefficientMode.TWISTED, 12))
        assert summary.tower_bottoms == (-HALF,)


# ============================================================
# V_s и d
# ============================================================

class TestEngine:

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("unknot", 0),
            ("trefoil_right", 1),
            ("trefoil_left", 0),
            ("figure8", 0),
            ("whitehead_double_trefoil_model", 1),
            ("torus_2_5", 1),
        ],
    )
    def test_v0(self, name, expected):
        assert compute_V(catalog_get(name)) == expected

    def test_v0_of_whitehead_mirror(self):
        assert compute_V(mirror(catalog_get("whitehead_double_trefoil_model"))) == 0

    def test_v_is_monotone_in_s(self, trefoil):
        values = [compute_V(trefoil, s) for s in range(3)]
        assert values == [1, 0, 0]

    def test_negative_s(self, trefoil):
        with pytest.raises(UsageError):
            compute_V(trefoil, -1)

    def test_stability_certificate(self, unknot):
        result = stability_run(OpTag.COMPUTE_V, unknot, rounds=2)
        assert result.value == 0
        assert result.certificate.truncations == (4, 8)
        assert result.certificate.stable
        model = result.certificate.to_model()
        assert model.values == ["0", "0"]

    def test_three_rounds_on_tensor(self, trefoil):
        c = tensor(trefoil, trefoil)
        result = compute_V_certified(c, 0, rounds=3)
        assert result.value == 1
        assert len(result.certificate.truncations) == 3

    def test_rounds_must_be_two(self, unknot):
        with pytest.raises(UsageError):
            stability_run(OpTag.COMPUTE_V, unknot, rounds=1)

    def test_explicit_truncation(self, trefoil):
        result = compute_V_certified(trefoil, 0, truncation=8)
        assert result.certificate.truncations == (8, 16)
        with pytest.raises(TruncationError):
            compute_V(trefoil, 0, truncation=6)

    def test_instability_raises(self, monkeypatch, unknot):
        from src.surgery import engine

        values = iter([0, 1])
        monkeypatch.setitem(engine._SINGLE_RUNS, OpTag.COMPUTE_V, lambda c, N, s: next(values))
        with pytest.raises(StabilityError) as info:
            stability_run(OpTag.COMPUTE_V, unknot)
        assert info.value.exit_code == 1
        assert info.value.certificate.values == (0, 1)

    @pytest.mark.parametrize(
        "name, expected",
        [("unknot", -HALF), ("trefoil_right", -HALF), ("trefoil_left", Fraction(3, 2))],
    )
    def test_d_twisted(self, name, expected):
        assert d_totally_twisted_zero_surgery(catalog_get(name)) == expected

    def test_untwisted_bottoms(self, unknot, trefoil):
        assert untwisted_tower_bottoms(unknot) == (-HALF, HALF)
        assert untwisted_tower_bottoms(trefoil) == (Fraction(-3, 2), -HALF)

    def test_computation_log(self, trefoil):
        logger = get_computation_logger()
        compute_V(trefoil)
        d_totally_twisted_zero_surgery(trefoil)
        summary = logger.get_summary()
        assert summary["compute_V"]["calls"] == 1
        assert summary["d_totally_twisted_zero_surgery"]["calls"] == 1
        assert all(call.success for call in logger.get_calls())


# ============================================================
# Сырые скрученные комплексы
# ============================================================

class TestRawComplex:

    def test_not_equal_builtin(self):
        raw = resolve_raw(f"{BUILTIN_PREFIX}not_equal")
        assert raw == builtin_not_equal()
        assert twisted_complex_d(raw) == -HALF

    def test_not_equal_file(self, data_dir):
        raw = read_raw_twisted_file(data_dir / "figure_not_equal.json")
        assert raw.boundary("a")[("b", 0)] == LaurentPoly.parse("1+t^2")
        assert twisted_complex_d(raw) == -HALF

    def test_single_generator(self):
        raw = RawTwistedComplex("point", (("g", Fraction(0)),))
        assert raw_auto_truncation(raw) == 4
        assert twisted_complex_d(raw) == 0

    def test_torsion_pair(self):
        raw = RawTwistedComplex(
            "pair",
            (("g1", Fraction(1)), ("g2", Fraction(0))),
            (RawTerm("g1", "g2", 0, ONE_PLUS_T),),
        )
        assert raw_violations(raw) == []
        assert twisted_complex_d(raw) == 0

    def test_acyclic_pair_has_no_tower(self):
        raw = RawTwistedComplex(
            "acyclic",
            (("g1", Fraction(1)), ("g2", Fraction(0))),
            (RawTerm("g1", "g2", 0, ONE),),
        )
        assert [v.kind for v in raw_violations(raw)] == ["homology_rank"]
        with pytest.raises(CfkValidationError) as info:
            twisted_complex_d(raw)
        assert [v.kind for v in info.value.violations] == ["homology_rank"]

    def test_d_squared_rejected(self):
        text = json.dumps({
            "generators": [{"id": "x", "grading": 2}, {"id": "y", "grading": 1}, {"id": "z", "grading": 0}],
            "differential": [{"from": "x", "to": "y"}, {"from": "y", "to": "z"}],
        })
        with pytest.raises(CfkValidationError) as info:
            parse_raw_twisted(text)
        assert [v.kind for v in info.value.violations] == ["d_squared"]

    def test_cancelling_coefficients(self):
        # (1+t)^2 + (1+t^2) = 0: ∂² зануляется только над F2[t, t^-1]
        text = json.dumps({
            "generators": [{"id": "x", "grading": 2}, {"id": "y", "grading": 1},
                           {"id": "w", "grading": 1}, {"id": "z", "grading": 0}],
            "differential": [
                {"from": "x", "to": "y", "poly": [0, 1]},
                {"from": "y", "to": "z", "poly": [0, 1]},
                {"from": "x", "to": "w", "poly": [0]},
                {"from": "w", "to": "z", "poly": [0, 2]},
            ],
        })
        assert parse_raw_twisted(text).name == "raw"

    def test_grading_and_negative_upower(self):
        raw = RawTwistedComplex(
            "bad",
            (("x", Fraction(1, 2)), ("y", Fraction(1, 2))),
            (RawTerm("x", "y", 0, ONE), RawTerm("y", "x", -1, ONE)),
        )
        assert {v.kind for v in raw_violations(raw)} == {"d_squared", "filtration_law", "grading_law"}

    def test_schema_errors(self):
        with pytest.raises(CfkFormatError):
            parse_raw_twisted('{"generators": [{"id": "x"}]}')
        with pytest.raises(CfkFormatError):
            parse_raw_twisted("not json")

    def test_unknown_builtin(self):
        with pytest.raises(UsageError):
            resolve_raw("builtin:nothing")

    def test_serialization_is_canonical(self):
        raw = builtin_not_equal()
        text = serialize_raw_twisted(raw)
        assert serialize_raw_twisted(parse_raw_twisted(text)) == text
        assert json.loads(text)["generators"][0] == {"id": "a", "grading": "1/2"}

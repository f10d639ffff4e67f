"""Property tests for the matching-rewriting toolbox."""

import math

import pytest
from hypothesis import given, strategies as st

from seatmatch import (
    Matching,
    TransformError,
    concat,
    concat_all,
    lift,
    project,
    scale_by_unit,
    translate,
)


def fixed_order_matchings(half):
    """Strategy producing random perfect matchings of K_{2*half}."""
    def build(perm):
        verts = sorted(range(2 * half), key=lambda i: perm[i])
        return Matching.build(2 * half, list(zip(verts[::2], verts[1::2])))
    return st.permutations(list(range(2 * half))).map(build)


def perfect_matchings(max_half=12):
    """Strategy producing a random perfect matching of some K_2n."""
    return st.integers(1, max_half).flatmap(fixed_order_matchings)


class TestTranslate:
    @given(perfect_matchings(), st.integers(-50, 50))
    def test_modular_translation_preserves_lengths(self, m, k):
        assert translate(m, k).length_list() == m.length_list()

    @given(perfect_matchings())
    def test_full_turn_is_identity(self, m):
        assert translate(m, m.v) == m
        assert translate(translate(m, 3), -3) == m

    def test_non_modular_preserves_reduced_lengths(self):
        m = Matching.build(4, [(0, 3), (1, 2)])
        shifted = translate(m, 4, modular=False, target_v=10)
        assert shifted.edges == ((4, 7), (5, 6))
        assert shifted.reduced_lengths() == m.reduced_lengths()

    def test_non_modular_out_of_range(self):
        m = Matching.build(4, [(0, 3), (1, 2)])
        with pytest.raises(TransformError):
            translate(m, 8, modular=False, target_v=10)
        with pytest.raises(TransformError):
            translate(m, -1, modular=False)


class TestConcat:
    @given(perfect_matchings(8), perfect_matchings(8))
    def test_reduced_union_law(self, f1, f2):
        glued = concat(f1, f2)
        assert glued.v == f1.v + f2.v
        assert glued.reduced_lengths() == sorted(
            f1.reduced_lengths() + f2.reduced_lengths())

    @given(st.lists(perfect_matchings(5), min_size=1, max_size=4))
    def test_concat_all_associates(self, parts):
        glued = concat_all(parts)
        assert glued.v == sum(p.v for p in parts)
        want = sorted(x for p in parts for x in p.reduced_lengths())
        assert glued.reduced_lengths() == want

    def test_concat_all_empty(self):
        with pytest.raises(TransformError):
            concat_all([])


class TestScaleByUnit:
    @given(perfect_matchings(), st.data())
    def test_inverse_law(self, m, data):
        units = [x for x in range(1, m.v) if math.gcd(x, m.v) == 1]
        x = data.draw(st.sampled_from(units))
        scaled = scale_by_unit(m, x)
        assert scale_by_unit(scaled, pow(x, -1, m.v)) == m

    @given(perfect_matchings(), st.data())
    def test_lengths_map_by_multiplication(self, m, data):
        units = [x for x in range(1, m.v) if math.gcd(x, m.v) == 1]
        x = data.draw(st.sampled_from(units))
        want = sorted(min(x * l % m.v, (-x * l) % m.v)
                      for l in m.length_list().lengths())
        assert sorted(scale_by_unit(m, x).length_list().lengths()) == want

    def test_rejects_non_unit(self):
        m = Matching.build(6, [(0, 1), (2, 3), (4, 5)])
        with pytest.raises(TransformError):
            scale_by_unit(m, 2)


class TestLiftProject:
    @given(st.tuples(st.integers(1, 4), st.integers(1, 6)).flatmap(
        lambda ch: st.tuples(
            st.just(ch[0]),
            st.lists(fixed_order_matchings(ch[1]),
                     min_size=ch[0], max_size=ch[0]))))
    def test_round_trip(self, case):
        c, parts = case
        v = parts[0].v
        host = lift(parts)
        assert host.v == v * c
        dec = project(host, c)
        assert dec.c == c and dec.part_order == v
        assert list(dec.parts) == parts
        assert lift(list(dec.parts)) == host

    def test_lift_scales_lengths(self):
        part = Matching.build(6, [(0, 1), (2, 3), (4, 5)])
        host = lift([part, part])
        assert sorted(host.length_list().lengths()) == [2] * 6

    def test_lift_rejects_mixed_orders(self):
        with pytest.raises(TransformError):
            lift([Matching.build(4, [(0, 1), (2, 3)]),
                  Matching.build(6, [(0, 1), (2, 3), (4, 5)])])
        with pytest.raises(TransformError):
            lift([])

    def test_project_rejects_non_divisible_lengths(self):
        m = Matching.build(8, [(0, 1), (2, 4), (3, 5), (6, 7)])
        with pytest.raises(TransformError):
            project(m, 2)
        with pytest.raises(TransformError):
            project(m, 3)  # 8 is not a multiple of 2*3

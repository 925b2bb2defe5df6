from fractions import Fraction

import pytest

from src.classify import wd_word
from src.errors import (
    DegenerateCone,
    InvalidParam,
    MismatchedData,
    NotDistinctWord,
    NotGorenstein,
    NotPointed,
    NotReduced,
    NotToric,
    NotUnimodularPiece,
)
from src.fan import (
    CartierData,
    Fan,
    anticanonical_cartier,
    canonical_toric_word,
    cone_union_equals,
    fano_violations,
    flag_fan,
    grassmannian_fan,
    is_complete_sampled,
    is_fano,
    is_projective_space_fan,
    negative_sum_identities,
    reduced_wd_cone,
    solve_cartier,
    verify_negative_sums,
    verify_ray_relations,
    wd_cone_union_generators,
    wd_fan,
    with_fano_verdict,
)
from src.lattice import Cone, is_unimodular
from src.weyl import Permutation, ReducedWord


def P(text: str) -> Permutation:
    return Permutation(tuple(int(c) for c in text))


def cone_index(f: Fan, rays: set[int]) -> int:
    return next(k for k, cone in enumerate(f.max_cones) if set(cone) == rays)


HIRZEBRUCH_2 = Fan(2, ((1, 0), (0, 1), (-1, 2), (0, -1)), ((0, 1), (1, 2), (2, 3), (0, 3)))


def test_flag_fan_of_s1s2():
    f = flag_fan(ReducedWord((1, 2), 4))
    assert f.rays == ((1, 0), (0, 1), (-1, 1), (0, -1))
    assert f.max_cones == ((0, 1), (1, 2), (0, 3), (2, 3))
    assert [str(u) for u in f.labels] == ["1234", "2134", "1324", "2314"]


def test_flag_fan_of_s1s3s2():
    f = flag_fan(ReducedWord((1, 3, 2), 4))
    assert f.rays[3:] == ((-1, 0, 1), (0, -1, 1), (0, 0, -1))
    assert len(f.max_cones) == 8
    assert all(is_unimodular(c) for c in f.cones)
    assert is_complete_sampled(f, 2000, 7)


def test_flag_fan_of_one_letter():
    f = flag_fan([1])
    assert f.rays == ((1,), (-1,))
    assert is_projective_space_fan(f) == 1


def test_flag_fan_rejects_bad_words():
    with pytest.raises(NotDistinctWord):
        flag_fan([1, 2, 1])
    with pytest.raises(NotReduced):
        flag_fan([1, 1])


def test_grassmannian_fan_of_2314_is_p2():
    f = grassmannian_fan(P("2314"), 2, 4)
    assert f.rays == ((1, 0), (-1, 1), (0, -1))
    assert f.max_cones == ((0, 1), (0, 2), (1, 2))
    assert [str(v) for v in f.labels] == ["1234", "1324", "2314"]
    assert is_projective_space_fan(f) == 2


def test_grassmannian_fan_of_identity_is_a_point():
    f = grassmannian_fan(P("1234"), 2, 4)
    assert f.ambient_dim == 0
    assert f.rays == ()
    assert is_complete_sampled(f)


def test_grassmannian_fan_needs_toric():
    with pytest.raises(NotToric):
        grassmannian_fan(P("3412"), 2, 4)


def test_canonical_toric_word():
    assert canonical_toric_word(P("2413"), 2, 4).letters == (3, 1, 2)
    assert canonical_toric_word(P("1234"), 2, 4).letters == ()


@pytest.mark.parametrize("d", [1, 2, 3])
def test_merge_reproduces_wd_fan(d):
    merged = grassmannian_fan(wd_word(d).perm(), d, 2 * d)
    closed = wd_fan(d)
    assert (merged.rays, merged.max_cones, merged.labels) == (closed.rays, closed.max_cones, closed.labels)


def test_wd_fan_2():
    f = wd_fan(2)
    assert f.rays == ((1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1), (0, 0, -1))
    assert f.ray_names == ("v1", "v2", "w1", "w2", "w3")
    assert {frozenset(c) for c in f.max_cones} == {
        frozenset({0, 1, 2, 3}),
        frozenset({0, 3, 4}),
        frozenset({1, 2, 4}),
        frozenset({0, 1, 4}),
        frozenset({2, 3, 4}),
    }


@pytest.mark.parametrize("d", range(1, 6))
def test_wd_fan_counts(d):
    f = wd_fan(d)
    assert len(f.rays) == (2 * d + 1 if d > 1 else 2)
    assert len(f.max_cones) == d * d + 1
    assert f.ambient_dim == 2 * d - 1


@pytest.mark.parametrize("d", range(2, 7))
def test_ray_relations_and_negative_sums(d):
    assert verify_ray_relations(d)
    assert verify_negative_sums(d)
    assert len(negative_sum_identities(d)) == 2 * d + 1


def test_ray_relations_need_d_at_least_2():
    with pytest.raises(InvalidParam):
        verify_ray_relations(1)


def test_anticanonical_cartier_of_wd_fan_2():
    f = wd_fan(2)
    data = anticanonical_cartier(f)
    assert data.is_integral
    assert data.per_cone_m[cone_index(f, {0, 1, 2, 3})] == (-1, -1, -2)
    assert data.per_cone_m[cone_index(f, {2, 3, 4})] == (2, 2, 1)


@pytest.mark.parametrize("d", range(1, 6))
def test_wd_fan_is_gorenstein_fano_and_complete(d):
    f = wd_fan(d)
    data = anticanonical_cartier(f)
    assert is_fano(f, data)
    assert is_complete_sampled(f, 2000, 42)


def test_non_integral_cone_is_not_gorenstein():
    f = Fan(2, ((1, 2), (-1, 2)), ((0, 1),))
    data = solve_cartier(f)
    assert not data.is_integral
    assert (data.failing_cone, data.reason) == (0, "non-integral")
    with pytest.raises(NotGorenstein) as exc:
        anticanonical_cartier(f)
    assert exc.value.reason == "non-integral"


def test_inconsistent_cone_is_not_gorenstein():
    f = Fan(3, ((1, 0, 1), (0, 1, 2), (-1, 0, 1), (0, -1, 1)), ((0, 1, 2, 3),))
    data = solve_cartier(f)
    assert data.per_cone_m == (None,)
    assert (data.failing_cone, data.reason) == (0, "inconsistent")


def test_degenerate_cone():
    with pytest.raises(DegenerateCone):
        solve_cartier(Fan(3, ((1, 0, 0), (0, 1, 0)), ((0, 1),)))


def test_hirzebruch_f2_is_gorenstein_not_fano():
    data = anticanonical_cartier(HIRZEBRUCH_2)
    violations = fano_violations(HIRZEBRUCH_2, data)
    assert violations == [(0, 2, Fraction(-1)), (1, 0, Fraction(-1))]
    assert not is_fano(HIRZEBRUCH_2, data)
    assert is_complete_sampled(HIRZEBRUCH_2, 2000, 42)


def test_fano_needs_matching_data():
    with pytest.raises(MismatchedData):
        is_fano(wd_fan(2), CartierData((), True))


def test_incomplete_fan_is_detected():
    orthant = Fan(2, ((1, 0), (0, 1)), ((0, 1),))
    assert not is_complete_sampled(orthant, 2000, 42)


def test_fan_validation():
    with pytest.raises(InvalidParam):
        Fan(2, ((1, 0), (1, 0)), ((0, 1),))
    with pytest.raises(InvalidParam):
        Fan(2, ((1, 0), (0, 1)), ((0,),))
    with pytest.raises(InvalidParam):
        Fan(2, ((1, 0), (0, 1)), ((0, 1), (0,)))
    with pytest.raises(InvalidParam):
        Fan(2, ((1, 0), (0, 1)), ((0, 1),), space="torus")


def test_fan_rejects_non_primitive_rays():
    with pytest.raises(InvalidParam):
        Fan(1, ((2,), (-1,)), ((0,), (1,)))


def test_fan_rejects_cones_with_a_line():
    with pytest.raises(NotPointed):
        Fan(2, ((1, 0), (-1, 0), (0, 1)), ((0, 1, 2),))


def test_fano_verdict_is_recorded_on_cartier_data():
    assert solve_cartier(wd_fan(2)).is_fano is None
    assert with_fano_verdict(wd_fan(2), solve_cartier(wd_fan(2))).is_fano is True
    assert with_fano_verdict(HIRZEBRUCH_2, solve_cartier(HIRZEBRUCH_2)).is_fano is False
    non_integral = Fan(2, ((1, 2), (-1, 2)), ((0, 1),))
    assert with_fano_verdict(non_integral, solve_cartier(non_integral)).is_fano is None


@pytest.mark.parametrize("samples, seed", [(0, 42), (-5, 42), (100, -1)])
def test_sampling_parameters_are_validated(samples, seed):
    with pytest.raises(InvalidParam):
        is_complete_sampled(wd_fan(1), samples, seed)


def test_wd_cone_generators():
    assert reduced_wd_cone(2, 1, 0) == ["v1", "w2", "w3"]
    assert reduced_wd_cone(2, 0, 2) == ["v1", "v2", "w1", "w2"]
    assert wd_cone_union_generators(2, 0, 2) == ["v1", "v2", "v3", "w1", "w2"]


def _e_pieces(drop: int = -1) -> list[Cone]:
    named = flag_fan(wd_word(2)).named()
    pieces = []
    for k, J in enumerate([(), (1,), (2,), (1, 2)]):
        if k == drop:
            continue
        names = [f"v{i}" for i in range(1, 4) if i not in J] + [f"w{i}" for i in J]
        pieces.append(Cone.of([named[x] for x in names], 3))
    return pieces


def test_cone_union_equals_tiles_c_e():
    merged = Cone.of([(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)])
    assert cone_union_equals(merged, _e_pieces())
    assert not cone_union_equals(merged, _e_pieces(drop=3))


def test_cone_union_equals_needs_unimodular_pieces():
    merged = Cone.of([(1, 0), (1, 2)])
    with pytest.raises(NotUnimodularPiece):
        cone_union_equals(merged, [merged])

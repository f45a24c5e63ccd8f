import pytest

from srdepth import (
    GF2,
    GF3,
    QQ,
    boundary_simplex,
    cone,
    cycle,
    disjoint_points,
    local_cohomology,
    random_complex,
    reduced_cohomology,
    relative_cohomology,
    rp2_minimal,
    simplex,
    validate,
    verify_munkres_shift,
)
from srdepth.errors import EmptyFace, FaceNotInComplex, NotASubcomplex

FIELDS = (GF2, GF3, QQ)


def test_two_points_connectedness():
    for field in FIELDS:
        dims = reduced_cohomology(disjoint_points(2), field).dims
        assert dims == {-1: 0, 0: 1}


def test_irrelevant_complex_minus_one_convention():
    K = validate([[]], 0)
    for field in FIELDS:
        assert reduced_cohomology(K, field).dims == {-1: 1}


def test_rp2_over_gf2():
    dims = reduced_cohomology(rp2_minimal(), GF2).dims
    assert dims == {-1: 0, 0: 0, 1: 1, 2: 1}


def test_rp2_over_rationals_and_gf3():
    for field in (QQ, GF3):
        dims = reduced_cohomology(rp2_minimal(), field).dims
        assert dims == {-1: 0, 0: 0, 1: 0, 2: 0}


def test_spheres():
    for m in (2, 3, 4):
        for field in FIELDS:
            dims = reduced_cohomology(boundary_simplex(m), field).dims
            assert dims[m - 1] == 1
            assert sum(dims.values()) == 1


def test_euler_characteristic_consistency():
    for K in [cycle(6), rp2_minimal(), boundary_simplex(3), random_complex(7, 2, 0.4, 5)]:
        chi = K.euler_characteristic()
        for field in FIELDS:
            dims = reduced_cohomology(K, field).dims
            alt = sum((-1) ** i * h for i, h in dims.items())
            assert alt == chi - 1


def test_cone_is_acyclic():
    for base in [cycle(4), rp2_minimal(), disjoint_points(3)]:
        for field in (GF2, QQ):
            assert reduced_cohomology(cone(base), field).total() == 0


def test_relative_equal_complexes_vanish():
    K = cycle(4)
    assert set(relative_cohomology(K, K, QQ).values()) == {0}


def test_relative_irrelevant_subcomplex_gives_unreduced():
    # the relative complex on faces of K not in {-} is the unaugmented one,
    # so degree 0 counts the connected components
    for K in [cycle(4), disjoint_points(3)]:
        for field in (GF2, QQ):
            rel = relative_cohomology(K, validate([[]], 0), field)
            red = reduced_cohomology(K, field).dims
            assert rel[0] == red[0] + 1
            for i in range(1, K.dim + 1):
                assert rel[i] == red[i]


def test_relative_simplex_mod_boundary():
    K = simplex(3)
    L = boundary_simplex(2)  # the boundary of the triangle on the same labels
    rel = relative_cohomology(K, L, QQ)
    assert rel == {0: 0, 1: 0, 2: 1}


def test_relative_requires_subcomplex():
    with pytest.raises(NotASubcomplex):
        relative_cohomology(cycle(4), simplex(3), QQ)


def test_local_cohomology_on_cycle_vertex():
    for field in FIELDS:
        dims = local_cohomology(cycle(4), (1,), field)
        assert dims == {0: 0, 1: 1}


def test_local_cohomology_top_face_of_simplex():
    dims = local_cohomology(simplex(3), (1, 2, 3), QQ)
    assert dims == {0: 0, 1: 0, 2: 1}


def test_local_cohomology_cone_apex_shifts_base():
    base = cycle(5)
    K = cone(base)
    apex_dims = local_cohomology(K, (1,), GF2)
    base_red = reduced_cohomology(base, GF2).dims
    for i in range(K.dim + 1):
        assert apex_dims[i] == base_red.get(i - 1, 0)


def test_local_cohomology_errors():
    with pytest.raises(EmptyFace):
        local_cohomology(cycle(4), (), QQ)
    with pytest.raises(FaceNotInComplex):
        local_cohomology(cycle(4), (1, 3), QQ)


def test_munkres_shift_small_corpus():
    for K in [cycle(4), rp2_minimal(), boundary_simplex(3), cone(cycle(5)),
              random_complex(6, 2, 0.5, 11), random_complex(7, 3, 0.25, 12)]:
        for field in (GF2, QQ):
            report = verify_munkres_shift(K, field)
            assert report.passed, report.witness

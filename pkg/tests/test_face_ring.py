from itertools import product
from math import comb

import pytest

from srdepth import (
    GF2,
    QQ,
    cycle,
    disjoint_points,
    graded_dim,
    hilbert_series,
    monomial_basis,
    random_complex,
    restriction_map,
    rp2_minimal,
    simplex,
    validate,
)
from srdepth.errors import NotNested, OddDegree
from srdepth.face_ring import star_basis


def brute_monomials(K, d):
    """Independent enumeration: all exponent vectors over the vertex tuple
    with face support and the right degree."""
    t = d // 2
    verts = K.vertices
    out = []
    for e in product(range(t + 1), repeat=len(verts)):
        if sum(e) != t:
            continue
        support = tuple(v for v, ei in zip(verts, e) if ei)
        if K.has_face(support):
            out.append(e)
    return sorted(out)


def test_graded_dim_examples():
    assert graded_dim(simplex(3), 2) == 3
    assert graded_dim(disjoint_points(2), 4) == 2
    assert graded_dim(cycle(4), 4) == 8
    assert graded_dim(cycle(4), 0) == 1


def test_graded_dim_matches_brute_enumeration():
    for K in [cycle(4), rp2_minimal(), disjoint_points(3), random_complex(5, 2, 0.6, 2)]:
        for d in (0, 2, 4, 6):
            mons = brute_monomials(K, d)
            assert graded_dim(K, d) == len(mons)
            assert list(monomial_basis(K, d)) == mons


def test_graded_dim_rejects_odd_degree():
    with pytest.raises(OddDegree):
        graded_dim(cycle(3), 3)
    with pytest.raises(OddDegree):
        monomial_basis(cycle(3), -2)


def test_monomial_basis_is_lex_sorted_and_face_supported():
    K = rp2_minimal()
    basis = monomial_basis(K, 6)
    assert list(basis) == sorted(basis)
    for e in basis:
        support = tuple(v for v, ei in zip(K.vertices, e) if ei)
        assert K.has_face(support)


def test_hilbert_series_full_simplex():
    hs = hilbert_series(simplex(4))
    assert hs.numerator == (1,)
    assert hs.denominator_exponent == 4


def test_hilbert_series_two_points():
    hs = hilbert_series(disjoint_points(2))
    # (1 + t^2) / (1 - t^2): one constant plus two pure powers per degree
    assert hs.numerator == (1, 0, 1)
    assert hs.denominator_exponent == 1
    assert hs.expansion(6) == [1, 0, 2, 0, 2, 0, 2]


def test_hilbert_series_irrelevant_complex():
    hs = hilbert_series(validate([[]], 0))
    assert hs.numerator == (1,)
    assert hs.denominator_exponent == 0
    assert hs.expansion(4) == [1, 0, 0, 0, 0]


def test_hilbert_expansion_matches_graded_dim():
    for K in [cycle(4), rp2_minimal(), disjoint_points(3), random_complex(6, 2, 0.4, 9)]:
        bound = 4 * K.m
        exp = hilbert_series(K).expansion(bound)
        for d in range(0, bound + 1, 2):
            assert exp[d] == graded_dim(K, d)
        assert all(exp[d] == 0 for d in range(1, bound + 1, 2))


def test_restriction_identity_when_faces_equal():
    K = cycle(4)
    m = restriction_map(K, (1,), (1,), 4, QQ)
    assert m.rows == m.cols and m.rank() == m.rows
    assert all(m.entries[i][i] == 1 for i in range(m.rows))


def test_restriction_two_glued_triangles():
    # two triangles sharing vertex 3; restriction to the star of vertex 1
    # kills the generators outside that triangle
    K = validate([[1, 2, 3], [3, 4, 5]], 5)
    m = restriction_map(K, (), (1,), 2, QQ)
    assert m.shape == (3, 5)
    src = star_basis(K, 0, 2)
    tgt = star_basis(K, 1, 2)  # mask 1 = vertex 1
    assert len(src) == 5 and len(tgt) == 3
    killed = [j for j in range(5) if all(m.entries[i][j] == 0 for i in range(3))]
    killed_vars = {K.vertices[src[j].index(1)] for j in killed}
    assert killed_vars == {4, 5}


def test_restriction_degree_zero_is_one_by_one_identity():
    K = rp2_minimal()
    m = restriction_map(K, (1,), (1, 2), 0, GF2)
    assert m.shape == (1, 1) and m.entries[0][0] == 1


def test_restriction_requires_nested_faces():
    with pytest.raises(NotNested):
        restriction_map(cycle(4), (2,), (1,), 2, QQ)


def test_restriction_functoriality():
    for K in [simplex(4), rp2_minimal(), random_complex(6, 2, 0.5, 21)]:
        chains = []
        faces = list(K.faces())
        for s in faces:
            for t in faces:
                if set(s) <= set(t) and s != t:
                    for u in faces:
                        if set(t) <= set(u) and t != u:
                            chains.append((s, t, u))
        for s, t, u in chains[:40]:
            for d in (2, 4, 6):
                direct = restriction_map(K, s, u, d, GF2)
                composed = restriction_map(K, t, u, d, GF2) @ restriction_map(K, s, t, d, GF2)
                assert direct == composed, (s, t, u, d)


def test_star_ring_is_polynomial_times_link_ring():
    # dimension count for star(sigma) factoring as F[sigma] tensor F(link sigma)
    for K in [cycle(4), rp2_minimal(), random_complex(6, 2, 0.5, 8)]:
        for sigma in K.faces():
            s = len(sigma)
            link = K.link(sigma)
            star = K.star(sigma)
            for d in (0, 2, 4, 6):
                lhs = graded_dim(star, d)
                rhs = sum(
                    comb(a // 2 + s - 1, s - 1) * graded_dim(link, d - a)
                    for a in range(0, d + 1, 2)
                ) if s else graded_dim(link, d)
                assert lhs == rhs, (sigma, d)

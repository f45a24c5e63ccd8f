"""The graded face ring of a complex: monomial bases, Hilbert series, and
the restriction maps between the rings of nested stars.

Generators carry internal degree 2 (the topological grading), so every
graded piece lives in an even degree; degree d holds the monomials of
polynomial degree d/2 whose support is a face.  Monomials are exponent
vectors over the complex's vertex tuple, listed in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .complexes import SimplicialComplex, _mask_of, _popcount
from .errors import NotNested, OddDegree
from .linalg import ExactMatrix, FieldSpec


def _check_degree(d: int) -> int:
    if d < 0 or d % 2:
        raise OddDegree(f"internal degrees are even and nonnegative, got {d}")
    return d // 2


def graded_dim(K: SimplicialComplex, d: int) -> int:
    """Dimension of the degree-d piece: monomials of polynomial degree d/2
    with face support.  Field independent."""
    t = _check_degree(d)
    if t == 0:
        return 1
    # a face of cardinality c supports comb(t-1, c-1) monomials of degree t
    return sum(comb(t - 1, _popcount(f) - 1) for f in K.face_masks if f)


def _compositions(total: int, parts: int):
    """Ordered positive integer compositions of total into parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _monomials(vertices: tuple[int, ...], support_masks: Iterable[int], t: int):
    """Exponent vectors over `vertices` of degree t supported on the given
    faces, in lexicographic order."""
    pos = {v: i for i, v in enumerate(vertices)}
    out = []
    if t == 0:
        return [(0,) * len(vertices)]
    for f in support_masks:
        c = _popcount(f)
        if not 1 <= c <= t:
            continue
        idxs = []
        m = f
        while m:
            b = m & -m
            m ^= b
            idxs.append(pos[b.bit_length()])
        for parts in _compositions(t, c):
            e = [0] * len(vertices)
            for i, p in zip(idxs, parts):
                e[i] = p
            out.append(tuple(e))
    out.sort()
    return out


@lru_cache(maxsize=100_000)
def monomial_basis(K: SimplicialComplex, d: int) -> tuple[tuple[int, ...], ...]:
    """Lex-sorted exponent vectors (over K.vertices) of the degree-d piece."""
    t = _check_degree(d)
    return tuple(_monomials(K.vertices, K.face_masks, t))


@dataclass(frozen=True)
class HilbertSeries:
    """Rational form numerator(t) / (1 - t^2)^denominator_exponent with the
    denominator exponent equal to the Krull dimension."""

    numerator: tuple[int, ...]  # coefficient of t^k at index k
    denominator_exponent: int

    def expansion(self, d_max: int) -> list[int]:
        """Power series coefficients in degrees 0..d_max."""
        n = self.denominator_exponent
        out = [0] * (d_max + 1)
        for k in range(0, d_max + 1, 2):
            # coefficient of t^k in 1/(1-t^2)^n is comb(k/2 + n - 1, n - 1)
            geom = 1 if n == 0 and k == 0 else (comb(k // 2 + n - 1, n - 1) if n else 0)
            for j, cj in enumerate(self.numerator):
                if cj and j + k <= d_max:
                    out[j + k] += cj * geom
        return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def hilbert_series(K: SimplicialComplex) -> HilbertSeries:
    """Sum over faces of t^(2 card) / (1-t^2)^card, cleared to the common
    denominator (1-t^2)^(dim K + 1)."""
    n = K.krull_dim
    # (1 - t^2)^k expanded once per needed power
    powers = {0: [1]}
    for k in range(1, n + 1):
        powers[k] = _poly_mul(powers[k - 1], [1, 0, -1])
    numerator = [0] * (2 * n + 1) if n else [0]
    for f in K.face_masks:
        c = _popcount(f)
        term = powers[n - c]
        for j, coeff in enumerate(term):
            if coeff:
                numerator[2 * c + j] += coeff
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    return HilbertSeries(tuple(numerator), n)


def star_basis(K: SimplicialComplex, sigma_mask: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Degree-d monomial basis of the face ring of star(sigma), written as
    exponent vectors over the ambient K.vertices."""
    return _star_basis_cached(K, sigma_mask, d)


@lru_cache(maxsize=200_000)
def _star_basis_cached(K, sigma_mask, d):
    t = _check_degree(d)
    star = K.star_by_mask(sigma_mask)
    return tuple(_monomials(K.vertices, star.face_masks, t))


def restriction_map(
    K: SimplicialComplex, sigma, tau, d: int, field: FieldSpec
) -> ExactMatrix:
    """Matrix of the degree-d surjection from the ring of star(sigma) onto the
    ring of star(tau), for nested faces sigma <= tau: a monomial maps to
    itself when its support stays a face of star(tau), else to zero."""
    s = _mask_of(sigma)
    t = _mask_of(tau)
    if s & t != s:
        raise NotNested(f"{tuple(sigma)} is not contained in {tuple(tau)}")
    K._require_face(sigma)
    K._require_face(tau)
    src = star_basis(K, s, d)
    tgt = star_basis(K, t, d)
    tgt_index = {e: i for i, e in enumerate(tgt)}
    rows = [[0] * len(src) for _ in range(len(tgt))]
    for j, e in enumerate(src):
        i = tgt_index.get(e)
        if i is not None:
            rows[i][j] = 1
    return ExactMatrix(field, rows, shape=(len(tgt), len(src)))

"""Finite abstract simplicial complexes and face-level combinatorics.

A complex is stored by its full face index (bitmasks over vertex labels,
bit v-1 for label v) plus the inclusion-maximal facets.  The empty set is a
face of every represented complex; the minimal complex is ``{-}`` consisting
of the empty face alone (no vertices).  The void complex (no faces at all)
is not representable.

Vertex labels of a complex built by :func:`validate` are exactly ``1..m``.
Subcomplex constructors (star, link, induced, contrastar) keep the ambient
labels, so their vertex sets may be non-contiguous; all downstream
computations depend only on the number of vertices actually present.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadParameter,
    EmptyInput,
    FaceNotInComplex,
    UnusedVertex,
    VertexOutOfRange,
)

Face = tuple[int, ...]


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _verts_of(mask: int) -> Face:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length())
    return tuple(out)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class SimplicialComplex:
    """Immutable simplicial complex with an eagerly materialized face index."""

    __slots__ = ("_vmask", "_facets", "_faces", "_face_set", "_hash")

    def __init__(self, facet_masks: Iterable[int], _closed_faces=None):
        facets = set(facet_masks)
        facets = {f for f in facets if not any(f != g and f & g == f for g in facets)}
        if not facets:
            facets = {0}
        if _closed_faces is None:
            faces = set()
            for f in facets:
                vs = _verts_of(f)
                for k in range(len(vs) + 1):
                    for c in combinations(vs, k):
                        faces.add(_mask_of(c))
        else:
            faces = set(_closed_faces)
        self._vmask = 0
        for f in facets:
            self._vmask |= f
        key = lambda m: (_popcount(m), _verts_of(m))
        self._facets = tuple(sorted(facets, key=key))
        self._faces = tuple(sorted(faces, key=key))
        self._face_set = frozenset(faces)
        self._hash = hash(self._faces)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._faces == other._faces

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, facets={list(self.facets)})"

    # -- basic queries ------------------------------------------------------

    @property
    def vertices(self) -> Face:
        return _verts_of(self._vmask)

    @property
    def m(self) -> int:
        """Number of vertices present (= polynomial generators of the face ring)."""
        return _popcount(self._vmask)

    @property
    def dim(self) -> int:
        return _popcount(self._facets[-1]) - 1

    @property
    def krull_dim(self) -> int:
        return self.dim + 1

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(_verts_of(f) for f in self._facets)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facets

    @property
    def face_masks(self) -> tuple[int, ...]:
        return self._faces

    def faces(self, card: int | None = None) -> Iterator[Face]:
        """All faces as sorted vertex tuples, ordered by (cardinality, lex)."""
        for f in self._faces:
            if card is None or _popcount(f) == card:
                yield _verts_of(f)

    def num_faces(self, card: int) -> int:
        return sum(1 for f in self._faces if _popcount(f) == card)

    @property
    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) with f_-1 = 1 for the empty face."""
        counts = [0] * (self.dim + 2)
        for f in self._faces:
            counts[_popcount(f)] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * fi for i, fi in enumerate(self.f_vector[1:]))

    def has_face(self, face: Iterable[int]) -> bool:
        return _mask_of(face) in self._face_set

    def has_face_mask(self, mask: int) -> bool:
        return mask in self._face_set

    @property
    def is_irrelevant(self) -> bool:
        """True for the minimal complex {-} whose only face is the empty set."""
        return self._vmask == 0

    def _require_face(self, face: Iterable[int]) -> int:
        mask = _mask_of(face)
        if mask not in self._face_set:
            raise FaceNotInComplex(f"{tuple(sorted(face))} is not a face")
        return mask

    # -- subcomplexes --------------------------------------------------------

    def star(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces tau with sigma | tau still a face; star of the empty face is K."""
        return _star(self, self._require_face(face))

    def star_by_mask(self, mask: int) -> "SimplicialComplex":
        if mask not in self._face_set:
            raise FaceNotInComplex(f"{_verts_of(mask)} is not a face")
        return _star(self, mask)

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces tau disjoint from sigma with sigma | tau a face."""
        return _link(self, self._require_face(face))

    def link_by_mask(self, mask: int) -> "SimplicialComplex":
        if mask not in self._face_set:
            raise FaceNotInComplex(f"{_verts_of(mask)} is not a face")
        return _link(self, mask)

    def contrastar_by_mask(self, mask: int) -> "SimplicialComplex":
        if mask not in self._face_set:
            raise FaceNotInComplex(f"{_verts_of(mask)} is not a face")
        return _contrastar(self, mask)

    def induced(self, vertex_subset: Iterable[int]) -> "SimplicialComplex":
        """Full subcomplex on a vertex subset: faces contained in it."""
        return _induced(self, _mask_of(vertex_subset) & self._vmask)

    def contrastar(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces not containing sigma; the complement of an inner point of
        sigma deformation retracts onto it."""
        return _contrastar(self, self._require_face(face))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self._face_set <= other._face_set


def _maximal(masks: Sequence[int]) -> list[int]:
    out = []
    for f in masks:
        if not any(f != g and f & g == f for g in masks):
            out.append(f)
    return out


@lru_cache(maxsize=200_000)
def _star(K: "SimplicialComplex", s: int) -> "SimplicialComplex":
    kept = [f for f in K._faces if (f | s) in K._face_set]
    return SimplicialComplex(_maximal(kept), _closed_faces=kept)


@lru_cache(maxsize=200_000)
def _link(K: "SimplicialComplex", s: int) -> "SimplicialComplex":
    kept = [f for f in K._faces if f & s == 0 and (f | s) in K._face_set]
    return SimplicialComplex(_maximal(kept), _closed_faces=kept)


@lru_cache(maxsize=200_000)
def _induced(K: "SimplicialComplex", w: int) -> "SimplicialComplex":
    kept = [f for f in K._faces if f & ~w == 0]
    return SimplicialComplex(_maximal(kept), _closed_faces=kept)


@lru_cache(maxsize=200_000)
def _contrastar(K: "SimplicialComplex", s: int) -> "SimplicialComplex":
    kept = [f for f in K._faces if f & s != s]
    return SimplicialComplex(_maximal(kept), _closed_faces=kept)


# -- validated construction ---------------------------------------------------


def validate(raw_facets: Sequence[Sequence[int]], m: int) -> SimplicialComplex:
    """Canonicalize raw facet input into a complex on vertex set {1..m}.

    Deduplicates and drops contained facets, builds the full face index, and
    rejects declared vertices that occur in no facet.  The complex {-} is
    declared via m=0, facets=[[]]; an empty facet list is invalid input.
    """
    if m < 0:
        raise BadParameter("m must be >= 0")
    if not raw_facets:
        raise EmptyInput("no facets given; the complex {-} is declared as [[]] with m=0")
    masks = []
    for facet in raw_facets:
        for v in facet:
            if not isinstance(v, int) or v < 1 or v > m:
                raise VertexOutOfRange(f"vertex {v!r} outside 1..{m}")
        masks.append(_mask_of(facet))
    used = 0
    for f in masks:
        used |= f
    full = (1 << m) - 1
    if used != full:
        missing = _verts_of(full & ~used)
        raise UnusedVertex(f"vertices {missing} occur in no facet")
    return SimplicialComplex(masks)


# -- generators ----------------------------------------------------------------


def simplex(m: int) -> SimplicialComplex:
    """Full simplex on m vertices; simplex(0) is the complex {-}."""
    if m < 0:
        raise BadParameter("m must be >= 0")
    return SimplicialComplex([(1 << m) - 1])


def boundary_simplex(m: int) -> SimplicialComplex:
    """Boundary of the m-simplex: a sphere of dimension m-1 on m+1 vertices."""
    if m < 1:
        raise BadParameter("m must be >= 1")
    full = (1 << (m + 1)) - 1
    return SimplicialComplex([full & ~(1 << i) for i in range(m + 1)])


def cycle(n: int) -> SimplicialComplex:
    """The n-gon: n vertices and n edges."""
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    edges = [_mask_of((i, i % n + 1)) for i in range(1, n + 1)]
    return SimplicialComplex(edges)


def disjoint_points(k: int) -> SimplicialComplex:
    if k < 1:
        raise BadParameter("k must be >= 1")
    return SimplicialComplex([1 << i for i in range(k)])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertices are relabeled 1..mK then mK+1..mK+mL."""
    kmap = {v: i + 1 for i, v in enumerate(K.vertices)}
    lmap = {v: K.m + i + 1 for i, v in enumerate(L.vertices)}
    facets = []
    for fk in K.facets:
        mk = _mask_of(kmap[v] for v in fk)
        for fl in L.facets:
            facets.append(mk | _mask_of(lmap[v] for v in fl))
    return SimplicialComplex(facets)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Join of a point with K; the apex is vertex 1."""
    return join(simplex(1), K)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Join of two points with K; the poles are vertices 1 and 2."""
    return join(disjoint_points(2), K)


def rp2_minimal() -> SimplicialComplex:
    """The 6-vertex, 10-triangle triangulation of the real projective plane."""
    triangles = [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
    ]
    return SimplicialComplex([_mask_of(t) for t in triangles])


def random_complex(m: int, d: int, density: float, seed: int) -> SimplicialComplex:
    """Pseudorandom complex of dimension <= d on m vertices.

    Each (d+1)-subset of {1..m} is kept as a facet with probability
    ``density``; uncovered vertices are added as isolated points so the
    result is canonical.  Deterministic for a fixed seed.
    """
    if m < 1:
        raise BadParameter("m must be >= 1")
    if d < 0:
        raise BadParameter("d must be >= 0")
    if not 0.0 <= density <= 1.0:
        raise BadParameter("density must be in [0, 1]")
    rng = random.Random(seed)
    facets = [
        _mask_of(c)
        for c in combinations(range(1, m + 1), d + 1)
        if rng.random() < density
    ]
    covered = 0
    for f in facets:
        covered |= f
    for i in range(m):
        if not covered & (1 << i):
            facets.append(1 << i)
    return SimplicialComplex(facets)


# -- file formats ---------------------------------------------------------------


def parse_facet_text(text: str) -> SimplicialComplex:
    """Facet-list format: one facet per line of whitespace-separated positive
    integers, ``#`` comments, optional header line ``m <count>`` (default:
    max vertex seen)."""
    m = None
    facets = []
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "m" and m is None and not facets:
            if len(parts) != 2:
                raise EmptyInput(f"bad header line: {raw_line!r}")
            try:
                m = int(parts[1])
            except ValueError:
                raise EmptyInput(f"bad header line: {raw_line!r}") from None
            continue
        try:
            facets.append([int(p) for p in parts])
        except ValueError:
            raise EmptyInput(f"bad facet line: {raw_line!r}") from None
    if m is None:
        m = max((v for f in facets for v in f), default=0)
    return validate(facets, m)


def complex_from_json(obj) -> SimplicialComplex:
    """JSON format: {"m": int, "facets": [[int, ...], ...]}."""
    try:
        m = obj["m"]
        facets = obj["facets"]
    except (TypeError, KeyError) as exc:
        raise EmptyInput(f"JSON complex needs keys 'm' and 'facets': {exc}") from None
    if not isinstance(m, int) or not isinstance(facets, list) or not all(
        isinstance(f, list) for f in facets
    ):
        raise EmptyInput("'m' must be an int and 'facets' a list of integer lists")
    return validate(facets, m)


def to_facet_text(K: SimplicialComplex) -> str:
    lines = [f"m {max(K.vertices, default=0)}"]
    lines.extend(" ".join(str(v) for v in f) for f in K.facets if f)
    return "\n".join(lines) + "\n"


def to_json_obj(K: SimplicialComplex):
    return {"m": max(K.vertices, default=0), "facets": [list(f) for f in K.facets]}


def load_complex(path) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise EmptyInput(f"bad JSON in {path}: {exc}") from None
        return complex_from_json(obj)
    return parse_facet_text(text)

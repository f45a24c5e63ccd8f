"""Three independent engines for the depth of a face ring, plus the
verification harnesses for the structural identities they are built on.

* ``depth_reisner``: the largest r such that every link has vanishing
  reduced cohomology in degrees <= r - card - 2 (the combinatorial
  criterion).
* ``depth_topological``: the largest r such that the complex itself and all
  local cohomology groups at inner points vanish in degrees <= r - 2; the
  local groups are computed from the independent relative-pair oracle
  (K, contrastar sigma), not through the link shift.
* ``depth_ab``: number of ring generators minus the projective dimension
  read off the Betti table, which is computed by the induced-subcomplex
  cohomology formula (Hochster) - a third, resolution-theoretic route.

The three must agree (the equivalence is a theorem); disagreement raises
``EngineDisagreement`` as a bug signal, never as a legitimate outcome.

Depth is always computed through these criteria, never by searching for
explicit regular sequences: over small finite fields low-degree regular
elements may not exist even when the depth is high, while the criteria are
exact and depend only on the characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .cohomology import reduced_cohomology, relative_cohomology
from .complexes import SimplicialComplex, _popcount
from .errors import EngineDisagreement, TooLarge
from .limits import LimitsProfile, derived_limit_dims
from .linalg import FieldSpec

HOCHSTER_VERTEX_BOUND = 14  # 2^m induced subcomplexes are enumerated


def _first_nonzero_degree(dims: dict[int, int]):
    for i in sorted(dims):
        if dims[i]:
            return i
    return None


# -- engine 1: link criterion ---------------------------------------------------


@lru_cache(maxsize=200_000)
def depth_reisner(K: SimplicialComplex, field: FieldSpec) -> int:
    """Largest r in [0, dim K + 1] such that for every face sigma the link
    has vanishing reduced cohomology in degrees <= r - card(sigma) - 2."""
    best = K.krull_dim
    for mask in K.face_masks:
        link = K.link_by_mask(mask)
        c = reduced_cohomology(link, field).first_nonzero()
        if c is not None:
            best = min(best, c + _popcount(mask) + 1)
    return max(best, 0)


def link_condition(K: SimplicialComplex, field: FieldSpec, r: int) -> bool:
    """Condition (links): reduced link cohomology vanishes through degree
    r - card - 2 at every face."""
    for mask in K.face_masks:
        c = reduced_cohomology(K.link_by_mask(mask), field).first_nonzero()
        if c is not None and c <= r - _popcount(mask) - 2:
            return False
    return True


# -- engine 2: topological criterion via relative pairs -------------------------


@lru_cache(maxsize=200_000)
def depth_topological(K: SimplicialComplex, field: FieldSpec) -> int:
    """Largest r in [0, dim K + 1] such that reduced cohomology of K and the
    relative cohomology of (K, contrastar sigma) for every nonempty sigma
    vanish in degrees <= r - 2."""
    best = K.krull_dim
    c = reduced_cohomology(K, field).first_nonzero()
    if c is not None:
        best = min(best, c + 1)
    for mask in K.face_masks:
        if not mask:
            continue
        rel = relative_cohomology(K, K.contrastar_by_mask(mask), field)
        c = _first_nonzero_degree(rel)
        if c is not None:
            best = min(best, c + 1)
    return max(best, 0)


def local_condition(K: SimplicialComplex, field: FieldSpec, r: int) -> bool:
    """Condition (points): reduced cohomology of K and all relative-pair
    local cohomology vanish through degree r - 2."""
    c = reduced_cohomology(K, field).first_nonzero()
    if c is not None and c <= r - 2:
        return False
    for mask in K.face_masks:
        if not mask:
            continue
        rel = relative_cohomology(K, K.contrastar_by_mask(mask), field)
        c = _first_nonzero_degree(rel)
        if c is not None and c <= r - 2:
            return False
    return True


# -- engine 3: Betti table and the Auslander-Buchsbaum count --------------------


@dataclass
class BettiTable:
    """Graded Betti numbers beta(i, j) of the face ring over the polynomial
    ring, from induced-subcomplex cohomology (Hochster's formula)."""

    m: int
    field: FieldSpec
    beta: dict[tuple[int, int], int]

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), v in self.beta.items() if v), default=0)

    def __getitem__(self, key) -> int:
        return self.beta.get(tuple(key), 0)


@lru_cache(maxsize=50_000)
def betti_table(K: SimplicialComplex, field: FieldSpec, vertex_bound: int = HOCHSTER_VERTEX_BOUND) -> BettiTable:
    """beta(i, j) = sum over j-element vertex subsets W of the dimension of
    reduced cohomology of the induced subcomplex K_W in degree j - i - 1."""
    if K.m > vertex_bound:
        raise TooLarge(f"Betti oracle enumerates 2^m subsets; m={K.m} > {vertex_bound}")
    beta: dict[tuple[int, int], int] = {}
    verts = K.vertices
    for j in range(K.m + 1):
        for subset in combinations(verts, j):
            sub = K.induced(subset)
            for deg, h in reduced_cohomology(sub, field).dims.items():
                if h:
                    key = (j - deg - 1, j)
                    beta[key] = beta.get(key, 0) + h
    return BettiTable(K.m, field, beta)


def depth_ab(K: SimplicialComplex, field: FieldSpec) -> int:
    """Depth as (number of generators) - (projective dimension)."""
    return K.m - betti_table(K, field).projective_dimension


# -- the aggregate report --------------------------------------------------------


@dataclass
class DepthReport:
    field: FieldSpec
    reisner: int
    topological: int
    auslander_buchsbaum: int
    krull_dim: int
    cohen_macaulay: bool
    agree: bool

    @property
    def depth(self) -> int:
        return self.reisner


def depth(K: SimplicialComplex, field: FieldSpec) -> DepthReport:
    """Run all three engines and assert agreement."""
    r1 = depth_reisner(K, field)
    r2 = depth_topological(K, field)
    r3 = depth_ab(K, field)
    if not (r1 == r2 == r3):
        raise EngineDisagreement(K, field, r1, r2, r3)
    return DepthReport(
        field=field,
        reisner=r1,
        topological=r2,
        auslander_buchsbaum=r3,
        krull_dim=K.krull_dim,
        cohen_macaulay=(r1 == K.krull_dim),
        agree=True,
    )


# -- harnesses --------------------------------------------------------------------


@dataclass
class StarLinkReport:
    """Check of: depth(link) + card = depth(star) >= depth(K) at every face."""

    field: FieldSpec
    passed: bool
    witness: tuple | None = None  # (face, depth_link, depth_star, depth_K)


def verify_star_link(K: SimplicialComplex, field: FieldSpec) -> StarLinkReport:
    d_k = depth_reisner(K, field)
    for face in K.faces():
        d_link = depth_reisner(K.link(face), field)
        d_star = depth_reisner(K.star(face), field)
        if d_link + len(face) != d_star or d_star < d_k:
            return StarLinkReport(field, False, (face, d_link, d_star, d_k))
    return StarLinkReport(field, True)


@dataclass
class LimitDepthReport:
    """Instance check of the vanishing criterion: with every star ring of
    depth >= r, depth of the face ring is >= r exactly when the modules
    L^{-1}..L^{r-2} (comparison kernel, cokernel, higher limits) vanish.
    Only the regime r <= min star depth is asserted."""

    field: FieldSpec
    passed: bool
    depth: int
    min_star_depth: int
    l_totals: dict[int, int]
    almost_trivial: bool
    corollary_checked: bool
    witness: tuple | None = None  # (r, depth_side, vanishing_side)


def verify_limit_depth_criterion(
    K: SimplicialComplex, field: FieldSpec, d_max: int | None = None
) -> LimitDepthReport:
    profile: LimitsProfile = derived_limit_dims(K, field, d_max)
    d_k = depth_reisner(K, field)
    star_depths = [
        depth_reisner(K.star_by_mask(mask), field) for mask in K.face_masks if mask
    ]
    r_min = min(star_depths)
    l_totals = {i: profile.l_total(i) for i in range(-1, max(K.dim, 0) + 1)}
    # hypothesis observation: every nonzero L^i is finite dimensional, i.e.
    # has finite support; in all computed degrees the support sits in 0
    almost_trivial = (
        all(v == 0 for v in profile.rho_kernel.values())
        and all(v == 0 for d, v in profile.rho_cokernel.items() if d > 0)
        and all(
            v == 0
            for i in profile.lim
            if i >= 1
            for d, v in profile.lim[i].items()
            if d > 0
        )
    )
    witness = None
    passed = True
    for r in range(0, r_min + 1):
        depth_side = d_k >= r
        vanishing_side = all(l_totals.get(i, 0) == 0 for i in range(-1, r - 1))
        if depth_side != vanishing_side:
            passed = False
            witness = (r, depth_side, vanishing_side)
            break
    corollary_checked = False
    if passed and all(v == 0 for v in l_totals.values()):
        corollary_checked = True
        if d_k < r_min:
            passed = False
            witness = ("corollary", d_k, r_min)
    return LimitDepthReport(
        field, passed, d_k, r_min, l_totals, almost_trivial, corollary_checked, witness
    )


def join_additivity_observations(pairs, field: FieldSpec):
    """Soft regression check: depth of a join against the sum of depths.
    Returns a list of (names, got, expected) mismatches for manual review."""
    from .complexes import join

    mismatches = []
    for (name_a, a), (name_b, b) in pairs:
        got = depth_reisner(join(a, b), field)
        expected = depth_reisner(a, field) + depth_reisner(b, field)
        if got != expected:
            mismatches.append(((name_a, name_b), got, expected))
    return mismatches

"""Exact rank and kernel computations over prime fields and the rationals.

All arithmetic is exact: residues for GF(p) (p < 2^31) and arbitrary
precision integers/fractions for the rationals.  Elimination is
deterministic (first nonzero pivot in column order).  Hot paths run
vectorized in int64 numpy with an automatic fallback to arbitrary-precision
Python integers when intermediate values could overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .errors import BadParameter, NotAComplex

_INT64_SAFE = 2**31  # Bareiss products of two entries this size fit in int64


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; bases 2,3,5,7 are exact below 3.2e9 > 2^31
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: a prime p (arithmetic mod p) or None for the rationals."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < 2**31):
                raise BadParameter(f"prime must satisfy 2 <= p < 2^31, got {self.p}")
            if not _is_prime(self.p):
                raise BadParameter(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """CLI grammar: ``q`` for the rationals, ``p=<prime>`` for GF(p)."""
        if text == "q":
            return cls(None)
        if text.startswith("p="):
            try:
                return cls(int(text[2:]))
            except ValueError:
                raise BadParameter(f"bad field spec {text!r}") from None
        raise BadParameter(f"bad field spec {text!r}; use 'q' or 'p=<prime>'")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "q" if self.p is None else f"p={self.p}"


QQ = FieldSpec(None)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)


def _canon(x, field: FieldSpec):
    if field.p is not None:
        if type(x) is int:
            return x % field.p
        if isinstance(x, Fraction):
            if x.denominator % field.p == 0:
                raise BadParameter(f"{x} has no residue mod {field.p}")
            return x.numerator * pow(x.denominator, -1, field.p) % field.p
        return int(x) % field.p
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return int(x)


class ExactMatrix:
    """Dense matrix of exact field elements: canonical residues mod p, or
    rationals stored as int when integral and as a reduced Fraction otherwise."""

    __slots__ = ("field", "rows", "cols", "entries", "all_int")

    def __init__(self, field: FieldSpec, entries: Sequence[Sequence], shape=None):
        self.field = field
        p = field.p
        if p is not None:
            rows = [
                tuple(x % p if type(x) is int else _canon(x, field) for x in row)
                for row in entries
            ]
        else:
            rows = [
                tuple(x if type(x) is int else _canon(x, field) for x in row)
                for row in entries
            ]
        if shape is not None:
            r, c = shape
            if rows and (len(rows) != r or any(len(row) != c for row in rows)):
                raise BadParameter("shape disagrees with entries")
            self.rows, self.cols = r, c
            if not rows:
                rows = [(0,) * c for _ in range(r)]
        else:
            self.rows = len(rows)
            self.cols = len(rows[0]) if rows else 0
            if any(len(row) != self.cols for row in rows):
                raise BadParameter("ragged rows")
        self.entries = tuple(rows)
        self.all_int = p is not None or all(
            type(x) is int for row in self.entries for x in row
        )

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, [[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols})"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            shape=(self.cols, self.rows),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field or self.cols != other.rows:
            raise BadParameter("incompatible matmul")
        a, b = self.entries, other.entries
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return ExactMatrix(self.field, out, shape=(self.rows, other.cols))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    # -- ranks ------------------------------------------------------------

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if self.field.p is not None:
            arr = np.array(self.entries, dtype=np.int64)
            return _rank_modp(arr, self.field.p)
        if self.all_int:
            return _rank_int_rows([list(row) for row in self.entries])
        return _rank_rationals(self.entries)

    def kernel_dim(self) -> int:
        return self.cols - self.rank()

    def cokernel_dim(self) -> int:
        return self.rows - self.rank()


def _rank_modp(a: np.ndarray, p: int) -> int:
    """In-place elimination mod p; first nonzero pivot in column order."""
    a = a % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            idx = below + r + 1
            a[np.ix_(idx, np.arange(c, cols))] = (
                a[np.ix_(idx, np.arange(c, cols))] - np.outer(a[idx, c], a[r, c:])
            ) % p
        r += 1
    return r


def _rank_rationals(entries) -> int:
    """Exact rank over Q: rows are scaled to integers, then fraction-free
    (Bareiss) elimination; falls back to big integers on potential overflow."""
    int_rows = []
    for row in entries:
        denom = 1
        for x in row:
            if isinstance(x, Fraction):
                denom = denom * x.denominator // gcd(denom, x.denominator)
        int_rows.append([int(x * denom) if denom != 1 else int(x) for x in row])
    return _rank_int_rows(int_rows)


def _rank_int_rows(int_rows) -> int:
    maxabs = max((abs(x) for row in int_rows for x in row), default=0)
    if maxabs < _INT64_SAFE:
        try:
            return _rank_bareiss_int64(np.array(int_rows, dtype=np.int64))
        except OverflowError:
            pass
    return _rank_bareiss_object(int_rows)


def _rank_bareiss_int64(a: np.ndarray) -> int:
    rows, cols = a.shape
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if r + 1 < rows:
            sub = a[r + 1 :, c:]
            if max(abs(piv), int(np.abs(sub).max(initial=0)), int(np.abs(a[r, c:]).max())) >= _INT64_SAFE:
                raise OverflowError
            a[r + 1 :, c:] = (sub * piv - np.outer(a[r + 1 :, c], a[r, c:])) // prev
        prev = piv
        r += 1
    return r


def _rank_bareiss_object(rows_in) -> int:
    a = [list(row) for row in rows_in]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            ai, ar = a[i], a[r]
            f = ai[c]
            if f == 0 and piv == prev:
                continue
            for j in range(cols):
                ai[j] = (ai[j] * piv - f * ar[j]) // prev
        prev = piv
        r += 1
    return r


def _product_is_zero(later: ExactMatrix, earlier: ExactMatrix) -> bool:
    """Exact check that later @ earlier == 0 (shapes already validated)."""
    if later.rows == 0 or earlier.cols == 0 or later.cols == 0:
        return True
    if later.field.p is not None:
        p = later.field.p
        if later.cols * (p - 1) * (p - 1) < 2**62:
            a = np.array(later.entries, dtype=np.int64)
            b = np.array(earlier.entries, dtype=np.int64)
            return not ((a @ b) % p).any()
    elif later.all_int and earlier.all_int:
        try:
            a = np.array(later.entries, dtype=np.int64)
            b = np.array(earlier.entries, dtype=np.int64)
            bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * later.cols
            if bound < 2**62:
                return not (a @ b).any()
        except OverflowError:
            pass
    return (later @ earlier).is_zero()


def cohomology_dims(differentials: Sequence[ExactMatrix]) -> list[int]:
    """Cohomology dimensions of 0 -> C^0 -d0-> C^1 -> ... -> C^{N+1} -> 0.

    The n-th differential matrix has shape (dim C^{n+1}, dim C^n).  Verifies
    d_{n+1} d_n = 0 and returns N+2 dimensions, H^n = ker(d_n) - im(d_{n-1}).
    """
    mats = list(differentials)
    if not mats:
        raise BadParameter("need at least one differential (possibly with zero rows)")
    for n in range(len(mats) - 1):
        if mats[n + 1].cols != mats[n].rows:
            raise BadParameter(f"shape mismatch between d_{n} and d_{n + 1}")
        if not _product_is_zero(mats[n + 1], mats[n]):
            raise NotAComplex(n)
    ranks = [m.rank() for m in mats]
    dims = []
    for n in range(len(mats) + 1):
        space = mats[n].cols if n < len(mats) else mats[-1].rows
        ker = space - ranks[n] if n < len(mats) else space
        im = ranks[n - 1] if n > 0 else 0
        dims.append(ker - im)
    return dims

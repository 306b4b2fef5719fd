"""Quivers and their exact representations.

A quiver is a finite directed multigraph on vertices 0..n-1 (files and the
CLI use 1-based labels; everything in memory is 0-based).  A representation
attaches a dimension to each vertex and one matrix to each arrow, with the
convention that the matrix of an arrow j -> i has shape dims[i] x dims[j]:
columns index the source space, rows the target, and vectors act as columns.

Scalar domains are exact only: arbitrary-precision integers and rationals
(field=None) or a prime field F_p with p an odd prime below 2^31 (field=p).
Values are immutable after construction and all operations are pure, so
everything is safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappush, heappop
from typing import Sequence

from . import linalg
from .errors import (
    DomainMismatch,
    MixedScalarDomains,
    NegativeExtDimension,
    NotAcyclic,
    ParseError,
    QuiverMismatch,
    ShapeMismatch,
)

MAX_PRIME = 2 ** 31


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph; arrows are (source, target) pairs, 0-based."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("quiver needs at least one vertex")
        object.__setattr__(self, "arrows",
                           tuple((int(s), int(t)) for s, t in self.arrows))
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"arrow ({s}, {t}) out of range for n = {self.n}")

    @property
    def has_loops(self) -> bool:
        return any(s == t for s, t in self.arrows)

    @property
    def has_two_cycles(self) -> bool:
        pairs = set(self.arrows)
        return any(s != t and (t, s) in pairs for s, t in pairs)

    def topological_order(self) -> tuple[int, ...] | None:
        """Kahn's algorithm with ascending-index tie-break; None if cyclic."""
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        ready: list[int] = []
        for v in range(self.n):
            if indeg[v] == 0:
                heappush(ready, v)
        order = []
        while ready:
            v = heappop(ready)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        heappush(ready, t)
        return tuple(order) if len(order) == self.n else None

    @property
    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def opposite(self) -> "Quiver":
        return Quiver(self.n, tuple((t, s) for s, t in self.arrows))


def _normalize_entry(x):
    if isinstance(x, bool):
        raise ParseError("boolean is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise ParseError(f"unsupported scalar {x!r}")


@dataclass(frozen=True)
class Representation:
    """Immutable quiver representation over Z/Q (field=None) or F_p (field=p)."""

    quiver: Quiver
    dims: tuple[int, ...]
    matrices: tuple[tuple[tuple, ...], ...]
    field: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(
            self, "matrices",
            tuple(tuple(tuple(_normalize_entry(x) for x in row) for row in mat)
                  for mat in self.matrices))

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims)


def validate_representation(rep: Representation) -> None:
    """Check shapes against arrows and entries against the scalar domain.

    Raises ShapeMismatch(arrow index) or MixedScalarDomains; returns None on
    success.  Loops and oriented 2-cycles are allowed here (only the Euler
    form and Ext computations insist on acyclicity).
    """
    q = rep.quiver
    if len(rep.dims) != q.n:
        raise ShapeMismatch(-1, f"{len(rep.dims)} dims for {q.n} vertices")
    if any(d < 0 for d in rep.dims):
        raise ShapeMismatch(-1, "negative dimension")
    if len(rep.matrices) != len(q.arrows):
        raise ShapeMismatch(-1, f"{len(rep.matrices)} matrices for {len(q.arrows)} arrows")
    for a, ((s, t), mat) in enumerate(zip(q.arrows, rep.matrices)):
        want_rows, want_cols = rep.dims[t], rep.dims[s]
        if len(mat) != want_rows or any(len(row) != want_cols for row in mat):
            got = (len(mat), len(mat[0]) if mat else 0)
            raise ShapeMismatch(a, f"expected {want_rows}x{want_cols}, got {got[0]}x{got[1]}")
    p = rep.field
    if p is not None:
        # 2 is allowed here; only the interpolation schedule insists on odd primes
        if p >= MAX_PRIME or not linalg.is_prime(p):
            raise MixedScalarDomains(f"field={p} is not a prime below 2^31")
        for mat in rep.matrices:
            for row in mat:
                for x in row:
                    if not isinstance(x, int) or not 0 <= x < p:
                        raise MixedScalarDomains(f"entry {x!r} not reduced mod {p}")


def _same_domain(a: Representation, b: Representation) -> None:
    if a.field != b.field:
        raise MixedScalarDomains(f"field {a.field} vs field {b.field}")


def reduce_mod(rep: Representation, p: int) -> Representation:
    """Reduce an integer/rational representation modulo a prime.

    One exact representation can be evaluated at many primes this way.
    Raises DomainMismatch if some denominator vanishes mod p.
    """
    if rep.field is not None:
        raise DomainMismatch("representation is already over a prime field")
    if p >= MAX_PRIME or not linalg.is_prime(p):
        raise DomainMismatch(f"{p} is not a prime below 2^31")

    def red(x):
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise DomainMismatch(f"denominator of {x} vanishes mod {p}")
            return x.numerator * linalg.inv_mod(x.denominator % p, p) % p
        return x % p

    mats = tuple(tuple(tuple(red(x) for x in row) for row in mat)
                 for mat in rep.matrices)
    return Representation(rep.quiver, rep.dims, mats, field=p)


def zero_representation(quiver: Quiver, field: int | None = None) -> Representation:
    dims = (0,) * quiver.n
    mats = tuple(() for _ in quiver.arrows)
    return Representation(quiver, dims, mats, field=field)


def simple_representation(quiver: Quiver, vertex: int,
                          field: int | None = None) -> Representation:
    dims = tuple(1 if v == vertex else 0 for v in range(quiver.n))
    mats = []
    for s, t in quiver.arrows:
        mats.append(tuple(tuple(0 for _ in range(dims[s])) for _ in range(dims[t])))
    return Representation(quiver, dims, tuple(mats), field=field)


# ---------------------------------------------------------------------------
# Subspace tuples.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubspaceTuple:
    """One subspace per vertex, each stored as a canonical RREF basis over F_p.

    Canonicity means two tuples describe the same subspaces iff they compare
    equal componentwise.
    """

    prime: int
    bases: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def subspace_tuple_from_rows(prime: int, raw_bases: Sequence[Sequence[Sequence[int]]]
                             ) -> SubspaceTuple:
    """Canonicalize arbitrary spanning rows into a SubspaceTuple."""
    bases = tuple(linalg.rref_mod(rows, prime)[0] for rows in raw_bases)
    return SubspaceTuple(prime, bases)


def zero_subspaces(rep: Representation) -> SubspaceTuple:
    if rep.field is None:
        raise DomainMismatch("need a prime-field representation")
    return SubspaceTuple(rep.field, tuple(() for _ in rep.dims))


def full_subspaces(rep: Representation) -> SubspaceTuple:
    if rep.field is None:
        raise DomainMismatch("need a prime-field representation")
    bases = []
    for d in rep.dims:
        rows = tuple(tuple(1 if c == r else 0 for c in range(d)) for r in range(d))
        bases.append(rows)
    return SubspaceTuple(rep.field, tuple(bases))


def is_subrepresentation(rep: Representation, sub: SubspaceTuple) -> bool:
    """True iff every arrow maps the source subspace into the target subspace."""
    validate_representation(rep)
    if rep.field is None or rep.field != sub.prime:
        raise DomainMismatch(f"representation field {rep.field} vs subspaces mod {sub.prime}")
    p = rep.field
    if any(len(b) > d for b, d in zip(sub.bases, rep.dims)):
        return False
    pivot_cache = [tuple(next(i for i, x in enumerate(row) if x) for row in basis)
                   for basis in sub.bases]
    for (s, t), mat in zip(rep.quiver.arrows, rep.matrices):
        target_rows = sub.bases[t]
        target_pivots = pivot_cache[t]
        for w in sub.bases[s]:
            img = linalg.matvec_mod(mat, w, p)
            if not linalg.in_span_mod(target_rows, target_pivots, img, p):
                return False
    return True


# ---------------------------------------------------------------------------
# Direct sums, duals, and the homological toolkit.
# ---------------------------------------------------------------------------

def direct_sum(a: Representation, b: Representation) -> Representation:
    """Componentwise sum of dims with block-diagonal arrow matrices."""
    if a.quiver != b.quiver:
        raise QuiverMismatch("direct sum needs both summands on one quiver")
    _same_domain(a, b)
    validate_representation(a)
    validate_representation(b)
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    mats = []
    for idx, (s, t) in enumerate(a.quiver.arrows):
        am, bm = a.matrices[idx], b.matrices[idx]
        rows = []
        for r in range(a.dims[t]):
            rows.append(tuple(am[r]) + (0,) * b.dims[s])
        for r in range(b.dims[t]):
            rows.append((0,) * a.dims[s] + tuple(bm[r]))
        mats.append(tuple(rows))
    return Representation(a.quiver, dims, tuple(mats), field=a.field)


def dual_representation(rep: Representation) -> Representation:
    """Representation of the opposite quiver with transposed matrices."""
    validate_representation(rep)
    mats = []
    for (s, t), mat in zip(rep.quiver.arrows, rep.matrices):
        rows, cols = rep.dims[t], rep.dims[s]
        mats.append(tuple(tuple(mat[r][c] for r in range(rows)) for c in range(cols)))
    return Representation(rep.quiver.opposite(), rep.dims, tuple(mats), field=rep.field)


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> = sum_i d_i e_i - sum_{a: j->i} d_j e_i, for acyclic quivers."""
    if not quiver.is_acyclic:
        raise NotAcyclic("the Euler form is only used on acyclic quivers")
    total = sum(x * y for x, y in zip(d, e))
    for s, t in quiver.arrows:
        total -= d[s] * e[t]
    return total


def hom_dim(a: Representation, b: Representation) -> int:
    """Dimension of the space of homomorphisms a -> b.

    Solves the intertwiner system {g_i: a_i -> b_i, g_i phi^a = phi^b g_j}
    by exact elimination over the common scalar field.
    """
    if a.quiver != b.quiver:
        raise QuiverMismatch("hom requires both representations on one quiver")
    _same_domain(a, b)
    validate_representation(a)
    validate_representation(b)
    offsets = []
    total = 0
    for v in range(a.n):
        offsets.append(total)
        total += b.dims[v] * a.dims[v]
    if total == 0:
        return 0
    rows = []
    for idx, (s, t) in enumerate(a.quiver.arrows):
        am, bm = a.matrices[idx], b.matrices[idx]
        # g_t am - bm g_s = 0, one equation per (r, c) in b_t x a_s
        for r in range(b.dims[t]):
            for c in range(a.dims[s]):
                row = [0] * total
                for k in range(a.dims[t]):
                    row[offsets[t] + r * a.dims[t] + k] += am[k][c]
                for k in range(b.dims[s]):
                    row[offsets[s] + k * a.dims[s] + c] -= bm[r][k]
                rows.append(row)
    if not rows:
        return total
    if a.field is None:
        rank = linalg.rank_frac(rows)
    else:
        rank = linalg.rank_mod([[x % a.field for x in row] for row in rows], a.field)
    return total - rank


def ext1_dim(rep: Representation) -> int:
    """dim Ext^1(M, M) via hom(M, M) - <dim M, dim M> (hereditary identity)."""
    value = hom_dim(rep, rep) - euler_form(rep.quiver, rep.dims, rep.dims)
    if value < 0:
        raise NegativeExtDimension(f"got {value}; inputs violate the hereditary identity")
    return value


def is_rigid(rep: Representation) -> bool:
    return ext1_dim(rep) == 0


def sub_and_quotient(rep: Representation, sub: SubspaceTuple
                     ) -> tuple[Representation, Representation]:
    """Restrict a prime-field representation to a subrepresentation and its quotient.

    The quotient at each vertex is coordinatized by the non-pivot columns of
    the subspace basis (those columns form a complement in RREF coordinates).
    """
    if rep.field is None or rep.field != sub.prime:
        raise DomainMismatch("sub_and_quotient needs matching prime fields")
    p = rep.field
    pivots = [tuple(next(i for i, x in enumerate(row) if x) for row in basis)
              for basis in sub.bases]
    frees = [tuple(c for c in range(d) if c not in piv)
             for d, piv in zip(rep.dims, pivots)]
    sub_dims = tuple(len(b) for b in sub.bases)
    quot_dims = tuple(len(f) for f in frees)

    def coords_in_sub(v, vertex):
        res = linalg.reduce_mod(v, sub.bases[vertex], pivots[vertex], p)
        if any(res):
            raise DomainMismatch("vector not inside the subspace; not a subrepresentation")
        return tuple(v[c] % p for c in pivots[vertex])

    def project_quot(v, vertex):
        res = linalg.reduce_mod(v, sub.bases[vertex], pivots[vertex], p)
        return tuple(res[c] % p for c in frees[vertex])

    sub_mats, quot_mats = [], []
    for (s, t), mat in zip(rep.quiver.arrows, rep.matrices):
        cols = [coords_in_sub(linalg.matvec_mod(mat, w, p), t) for w in sub.bases[s]]
        sub_mats.append(tuple(tuple(col[r] for col in cols) for r in range(sub_dims[t])))
        qcols = []
        for c in frees[s]:
            unit = tuple(1 if i == c else 0 for i in range(rep.dims[s]))
            qcols.append(project_quot(linalg.matvec_mod(mat, unit, p), t))
        quot_mats.append(tuple(tuple(col[r] for col in qcols) for r in range(quot_dims[t])))
    sub_rep = Representation(rep.quiver, sub_dims, tuple(sub_mats), field=p)
    quot_rep = Representation(rep.quiver, quot_dims, tuple(quot_mats), field=p)
    return sub_rep, quot_rep


# ---------------------------------------------------------------------------
# File format: {"vertices": n, "arrows": [[src, tgt], ...], "dims": [...],
# "matrices": [[[row], ...], ...]}, arrows and matrices in the same order,
# vertices 1-based in files.
# ---------------------------------------------------------------------------

def representation_from_dict(data: dict) -> Representation:
    try:
        n = int(data["vertices"])
        arrows = tuple((int(s) - 1, int(t) - 1) for s, t in data["arrows"])
        dims = tuple(int(d) for d in data["dims"])
        matrices = tuple(
            tuple(tuple(int(x) for x in row) for row in mat)
            for mat in data["matrices"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad representation document: {exc}") from exc
    try:
        quiver = Quiver(n, arrows)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    rep = Representation(quiver, dims, matrices)
    validate_representation(rep)
    return rep


def load_representation(path) -> Representation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return representation_from_dict(data)


def representation_to_dict(rep: Representation) -> dict:
    if rep.field is not None:
        raise DomainMismatch("files store integer representations only")
    for mat in rep.matrices:
        for row in mat:
            for x in row:
                if not isinstance(x, int):
                    raise ParseError("files store integer entries only")
    return {
        "vertices": rep.quiver.n,
        "arrows": [[s + 1, t + 1] for s, t in rep.quiver.arrows],
        "dims": list(rep.dims),
        "matrices": [[list(row) for row in mat] for mat in rep.matrices],
    }


def save_representation(rep: Representation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(representation_to_dict(rep), fh, indent=1)
        fh.write("\n")

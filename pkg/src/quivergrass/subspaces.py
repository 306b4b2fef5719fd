"""Streaming subspace enumeration and exact point counts over prime fields.

The counting search walks vertices in a fixed order (topological when the
quiver is acyclic, ascending index otherwise).  At each vertex it only
generates subspaces containing the span forced by arrows from already-chosen
vertices, which is the earliest point at which those arrow constraints can
be checked; arrows pointing back to already-chosen vertices, and loops, are
checked on each candidate as soon as it is generated.  When the last vertex
in the order carries no constraints of its own, its subspaces are counted by
the Gaussian binomial instead of being materialized.

The cap bounds the number of candidate subspaces actually generated, so a
search that would hang turns into a SearchTooLarge error instead.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from . import linalg
from .errors import DegenerateBase, DomainMismatch, SearchTooLarge
from .model import (
    Representation,
    SubspaceTuple,
    validate_representation,
)

DEFAULT_CAP = 10 ** 8


def default_cap() -> int:
    """Default enumeration cap; QUIVERGRASS_CAP overrides."""
    raw = os.environ.get("QUIVERGRASS_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_CAP


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, e: int, q: int) -> int:
    """Number of e-dimensional subspaces of F_q^m, as an exact integer.

    Zero outside 0 <= e <= m.  q = 1 is rejected: the classical binomial
    limit lives in the interpolation layer, not here.
    """
    if q == 1:
        raise DegenerateBase("Gaussian binomial is undefined at q = 1")
    if q < 1:
        raise ValueError("base must be a positive integer")
    if m < 0:
        raise ValueError("ambient dimension must be non-negative")
    if e < 0 or e > m:
        return 0
    num = den = 1
    for k in range(e):
        num *= q ** (m - k) - 1
        den *= q ** (k + 1) - 1
    assert num % den == 0
    return num // den


def _iter_rref(p: int, m: int, e: int) -> Iterator[tuple[tuple, tuple]]:
    """All e-dim subspaces of F_p^m as (rref rows, pivots), each exactly once.

    Iterates over pivot-column sets, then over the free entries."""
    if e < 0 or e > m:
        return
    if e == 0:
        yield (), ()
        return
    for pivots in combinations(range(m), e):
        pivot_set = set(pivots)
        free = [(r, c) for r in range(e) for c in range(m)
                if c > pivots[r] and c not in pivot_set]
        template = [[0] * m for _ in range(e)]
        for r, c in enumerate(pivots):
            template[r][c] = 1
        if not free:
            yield tuple(tuple(row) for row in template), pivots
            continue
        for values in product(range(p), repeat=len(free)):
            for (r, c), val in zip(free, values):
                template[r][c] = val
            yield tuple(tuple(row) for row in template), pivots
        for r, c in free:
            template[r][c] = 0


def enumerate_subspaces(p: int, m: int, e: int) -> Iterator[tuple]:
    """Stream every e-dim subspace of F_p^m as its canonical RREF basis."""
    if not linalg.is_prime(p):
        raise DomainMismatch(f"{p} is not prime")
    if not 0 <= e <= m:
        raise ValueError(f"need 0 <= e <= m, got e={e}, m={m}")
    for rows, _ in _iter_rref(p, m, e):
        yield rows


def _iter_superspaces(p: int, m: int, e: int, srows: tuple, spivots: tuple
                      ) -> Iterator[tuple[tuple, tuple]]:
    """All e-dim subspaces of F_p^m containing the RREF span (srows, spivots).

    Superspaces correspond to (e - s)-dim subspaces of the complementary
    coordinate subspace on the non-pivot columns; each lift is merged back
    into canonical RREF.
    """
    s = len(srows)
    t = e - s
    if t < 0:
        return
    if t == 0:
        yield srows, spivots
        return
    if s == 0:
        yield from _iter_rref(p, m, e)
        return
    free_cols = [c for c in range(m) if c not in spivots]
    for qrows, qpivots in _iter_rref(p, m - s, t):
        lifted = []
        for qrow in qrows:
            row = [0] * m
            for j, val in enumerate(qrow):
                row[free_cols[j]] = val
            lifted.append(tuple(row))
        lifted_pivots = tuple(free_cols[c] for c in qpivots)
        # clear the new pivot columns out of the original rows, then merge
        merged = []
        for row in srows:
            for lrow, lc in zip(lifted, lifted_pivots):
                coeff = row[lc]
                if coeff:
                    row = tuple((a - coeff * b) % p for a, b in zip(row, lrow))
            merged.append(row)
        pairs = sorted(
            list(zip(merged, spivots)) + list(zip(lifted, lifted_pivots)),
            key=lambda rp: rp[1])
        yield tuple(r for r, _ in pairs), tuple(c for _, c in pairs)


@dataclass(frozen=True)
class PointCount:
    """Exact number of F_p-points of one quiver Grassmannian."""

    prime: int
    dim_vector: tuple[int, ...]
    count: int


class _Budget:
    __slots__ = ("cap", "used", "estimate")

    def __init__(self, cap: int, estimate: int):
        self.cap = cap
        self.used = 0
        self.estimate = estimate

    def tick(self):
        self.used += 1
        if self.used > self.cap:
            raise SearchTooLarge(self.estimate, self.cap, visited=self.used)


class _SearchPlan:
    """Arrow routing for one (representation, dimension vector) search."""

    __slots__ = ("rep", "e", "p", "order", "pos", "forced", "back", "loops",
                 "shortcut_last")

    def __init__(self, rep: Representation, e: Sequence[int]):
        validate_representation(rep)
        if rep.field is None:
            raise DomainMismatch("counting needs a prime-field representation")
        e = tuple(int(x) for x in e)
        if len(e) != rep.n or any(not 0 <= x <= d for x, d in zip(e, rep.dims)):
            raise ValueError(f"dimension vector {e} outside the box of {rep.dims}")
        self.rep = rep
        self.e = e
        self.p = rep.field
        order = rep.quiver.topological_order()
        if order is None:
            order = tuple(range(rep.n))
        self.order = order
        self.pos = {v: i for i, v in enumerate(order)}
        n = rep.n
        self.forced = [[] for _ in range(n)]   # position -> [(matrix, src position)]
        self.back = [[] for _ in range(n)]     # position -> [(matrix, tgt position)]
        self.loops = [[] for _ in range(n)]    # position -> [matrix]
        for (s, t), mat in zip(rep.quiver.arrows, rep.matrices):
            if s == t:
                self.loops[self.pos[s]].append(mat)
            elif self.pos[s] < self.pos[t]:
                self.forced[self.pos[t]].append((mat, self.pos[s]))
            else:
                self.back[self.pos[s]].append((mat, self.pos[t]))
        last = n - 1
        self.shortcut_last = not self.loops[last] and not self.back[last] and not any(
            src_pos == last for lst in self.forced for _, src_pos in lst)

    def product_estimate(self) -> int:
        est = 1
        for v in range(self.rep.n):
            est *= gaussian_binomial(self.rep.dims[v], self.e[v], self.p)
        return est

    def enumerated_estimate(self) -> int:
        """Upper bound on candidates generated, accounting for the final shortcut."""
        est = 1
        upto = self.rep.n - 1 if self.shortcut_last else self.rep.n
        for pos in range(upto):
            v = self.order[pos]
            est *= gaussian_binomial(self.rep.dims[v], self.e[v], self.p)
        return est

    def forced_span(self, pos: int, chosen: list):
        """RREF span of all images forced into order[pos] by chosen vertices."""
        p = self.p
        rows: tuple = ()
        pivots: tuple = ()
        for mat, src_pos in self.forced[pos]:
            for w in chosen[src_pos][0]:
                img = linalg.matvec_mod(mat, w, p)
                grown = linalg.rref_insert(rows, pivots, img, p)
                if grown is not None:
                    rows, pivots = grown
        return rows, pivots

    def forced_rank(self, pos: int, chosen: list) -> int:
        """Rank of the forced span only; cheaper than the canonical basis."""
        p = self.p
        rows: list = []
        leads: list = []
        for mat, src_pos in self.forced[pos]:
            for w in chosen[src_pos][0]:
                v = [sum(a * b for a, b in zip(row, w)) % p for row in mat]
                for r, lead in zip(rows, leads):
                    c = v[lead]
                    if c:
                        inv_head = r[lead]
                        # r is not normalized; eliminate via cross-multiplication
                        v = [(inv_head * a - c * b) % p for a, b in zip(v, r)]
                head = next((i for i, x in enumerate(v) if x), None)
                if head is not None:
                    rows.append(v)
                    leads.append(head)
        return len(rows)

    def candidate_ok(self, pos: int, rows, pivots, chosen: list) -> bool:
        p = self.p
        for mat in self.loops[pos]:
            for w in rows:
                if not linalg.in_span_mod(rows, pivots, linalg.matvec_mod(mat, w, p), p):
                    return False
        for mat, tgt_pos in self.back[pos]:
            trows, tpivots = chosen[tgt_pos]
            for w in rows:
                if not linalg.in_span_mod(trows, tpivots, linalg.matvec_mod(mat, w, p), p):
                    return False
        return True


def count_subreps(rep: Representation, e: Sequence[int],
                  cap: int | None = None) -> PointCount:
    """Exact number of subrepresentation tuples with the given dimension vector.

    The error payload of SearchTooLarge carries the product-of-Gaussian-
    binomials estimate; the cap itself bounds generated candidates so pruned
    searches far below the worst case still run.
    """
    plan = _SearchPlan(rep, e)
    cap = default_cap() if cap is None else int(cap)
    estimate = plan.product_estimate()
    if plan.enumerated_estimate() > cap:
        raise SearchTooLarge(estimate, cap)
    budget = _Budget(cap, estimate)
    p = plan.p
    dims = rep.dims
    order = plan.order
    last = rep.n - 1
    evec = plan.e

    def rec(pos: int, chosen: list) -> int:
        v = order[pos]
        ev, dv = evec[v], dims[v]
        if pos == last and plan.shortcut_last:
            budget.tick()
            s = plan.forced_rank(pos, chosen)
            if s > ev:
                return 0
            return gaussian_binomial(dv - s, ev - s, p)
        srows, spivots = plan.forced_span(pos, chosen)
        s = len(srows)
        if s > ev:
            return 0
        total = 0
        for rows, pivots in _iter_superspaces(p, dv, ev, srows, spivots):
            budget.tick()
            if not plan.candidate_ok(pos, rows, pivots, chosen):
                continue
            if pos == last:
                total += 1
            else:
                chosen.append((rows, pivots))
                total += rec(pos + 1, chosen)
                chosen.pop()
        return total

    count = rec(0, [])
    return PointCount(p, plan.e, count)


def count_subreps_profile(rep: Representation, e_base: Sequence[int],
                          cap: int | None = None) -> dict[int, int] | None:
    """Counts for every value of the final search vertex's coordinate at once.

    e_base fixes the dimension vector at all vertices except the last one in
    the search order, whose entry is ignored; the returned dict maps each
    admissible value there to the exact point count.  One pass serves the
    whole fiber, which is what the generating-polynomial scan wants.
    Returns None when the final vertex carries constraints of its own
    (loops, cyclic fallback order), in which case callers count per vector.
    """
    e_base = list(int(x) for x in e_base)
    order = rep.quiver.topological_order() or tuple(range(rep.n))
    final_vertex = order[-1]
    e_base[final_vertex] = 0
    plan = _SearchPlan(rep, e_base)
    if not plan.shortcut_last:
        return None
    cap = default_cap() if cap is None else int(cap)
    p = plan.p
    dims = rep.dims
    last = rep.n - 1
    evec = plan.e
    d_final = dims[final_vertex]
    fiber = sum(gaussian_binomial(d_final, v, p) for v in range(d_final + 1))
    estimate = plan.enumerated_estimate() * fiber
    if plan.enumerated_estimate() > cap:
        raise SearchTooLarge(estimate, cap)
    budget = _Budget(cap, estimate)
    profile = {v: 0 for v in range(d_final + 1)}

    def rec(pos: int, chosen: list) -> None:
        if pos == last:
            budget.tick()
            s = plan.forced_rank(pos, chosen)
            for v in range(s, d_final + 1):
                profile[v] += gaussian_binomial(d_final - s, v - s, p)
            return
        v = order[pos]
        srows, spivots = plan.forced_span(pos, chosen)
        if len(srows) > evec[v]:
            return
        for rows, pivots in _iter_superspaces(p, dims[v], evec[v], srows, spivots):
            budget.tick()
            if not plan.candidate_ok(pos, rows, pivots, chosen):
                continue
            chosen.append((rows, pivots))
            rec(pos + 1, chosen)
            chosen.pop()

    rec(0, [])
    return profile


def iter_subrep_tuples(rep: Representation, e: Sequence[int],
                       cap: int | None = None) -> Iterator[SubspaceTuple]:
    """Stream every point of the quiver Grassmannian as a SubspaceTuple."""
    plan = _SearchPlan(rep, e)
    cap = default_cap() if cap is None else int(cap)
    estimate = plan.product_estimate()
    if estimate > cap:
        raise SearchTooLarge(estimate, cap)
    budget = _Budget(cap, estimate)
    p = plan.p
    order = plan.order
    last = rep.n - 1

    def rec(pos: int, chosen: list) -> Iterator[SubspaceTuple]:
        v = order[pos]
        srows, spivots = plan.forced_span(pos, chosen)
        if len(srows) > plan.e[v]:
            return
        for rows, pivots in _iter_superspaces(p, rep.dims[v], plan.e[v], srows, spivots):
            budget.tick()
            if not plan.candidate_ok(pos, rows, pivots, chosen):
                continue
            chosen.append((rows, pivots))
            if pos == last:
                by_vertex = [None] * rep.n
                for position, (crows, _) in enumerate(chosen):
                    by_vertex[order[position]] = crows
                yield SubspaceTuple(p, tuple(by_vertex))
            else:
                yield from rec(pos + 1, chosen)
            chosen.pop()

    yield from rec(0, [])

"""Simply-laced root systems, Coxeter words, and determinantal F-polynomials.

Combinatorics (Cartan data, Weyl action, Coxeter words, the gamma-equation)
work for types A, D, E.  The determinantal evaluation route realizes the
group concretely only in type A, where the fundamental representations are
exterior powers of the standard one and a principal generalized minor is an
ordinary minor; types D and E are out of scope for that route.

Weights are integer tuples in the fundamental-weight basis, so a simple
reflection is a one-line integer operation.  Roots are integer tuples in the
simple-root basis, which is also how dimension vectors of indecomposables
are written.  All indices in memory are 0-based; the CLI is 1-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    NotAnOrientation,
    NotInAnyFundamentalOrbit,
    SearchExhausted,
    SingularSystem,
    WeightNotExtreme,
)
from .fpoly import FPolynomial, poly_det, poly_identity, poly_matmul
from .linalg import solve_frac
from .model import Quiver, Representation, ext1_dim, hom_dim

_POSITIVE_ROOT_COUNTS = {"A": lambda n: n * (n + 1) // 2,
                         "D": lambda n: n * (n - 1),
                         "E": {6: 36, 7: 63, 8: 120}}


def _diagram_edges(label: str, rank: int) -> tuple[tuple[int, int], ...]:
    if label == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
        return tuple((i, i + 1) for i in range(rank - 1))
    if label == "D":
        if rank < 4:
            raise ValueError("type D needs rank >= 4")
        chain = tuple((i, i + 1) for i in range(rank - 3))
        return chain + ((rank - 3, rank - 2), (rank - 3, rank - 1))
    if label == "E":
        if rank not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if rank >= 7:
            edges.append((5, 6))
        if rank == 8:
            edges.append((6, 7))
        return tuple(sorted(edges))
    raise ValueError(f"unknown type label {label!r}")


@dataclass(frozen=True)
class RootSystem:
    """Cartan matrix, simple roots, fundamental weights, and positive roots."""

    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root coordinates

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        """alpha_i in fundamental-weight coordinates: columns of the Cartan matrix."""
        n = self.rank
        return tuple(tuple(self.cartan[i][j] for i in range(n)) for j in range(n))

    @property
    def fundamental_weights(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.cartan[i][j] == -1:
                    out.append((i, j))
        return tuple(out)

    def root_to_weight(self, root: Sequence[int]) -> tuple[int, ...]:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        n = self.rank
        return tuple(sum(self.cartan[i][j] * root[j] for j in range(n))
                     for i in range(n))


@lru_cache(maxsize=None)
def root_system(label: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of one simply-laced type."""
    edges = _diagram_edges(label, rank)
    n = rank
    cartan = [[0] * n for _ in range(n)]
    for i in range(n):
        cartan[i][i] = 2
    for a, b in edges:
        cartan[a][b] = cartan[b][a] = -1
    cartan_t = tuple(tuple(row) for row in cartan)

    # closure of the simple roots under all simple reflections
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            pairing = sum(cartan_t[i][j] * beta[j] for j in range(n))
            new = list(beta)
            new[i] -= pairing
            new = tuple(new)
            if new not in roots:
                roots.add(new)
                frontier.append(new)
    positive = tuple(sorted(r for r in roots if all(x >= 0 for x in r)))
    expected = _POSITIVE_ROOT_COUNTS[label]
    expected = expected[rank] if isinstance(expected, dict) else expected(rank)
    if len(positive) != expected:
        raise RuntimeError(f"root generation produced {len(positive)} positive roots, "
                           f"expected {expected}")
    return RootSystem(label, rank, cartan_t, positive)


def simple_reflection(rs: RootSystem, i: int, weight: Sequence[int]) -> tuple[int, ...]:
    """s_i(w) = w - w_i alpha_i in fundamental-weight coordinates."""
    coeff = weight[i]
    if coeff == 0:
        return tuple(weight)
    alpha = rs.simple_roots[i]
    return tuple(w - coeff * a for w, a in zip(weight, alpha))


def apply_word_inverse(rs: RootSystem, word: Sequence[int],
                       weight: Sequence[int]) -> tuple[int, ...]:
    """Apply c^{-1} = s_{i_n} ... s_{i_1} for c = s_{i_1} ... s_{i_n}."""
    w = tuple(weight)
    for i in word:
        w = simple_reflection(rs, i, w)
    return w


def apply_word(rs: RootSystem, word: Sequence[int],
               weight: Sequence[int]) -> tuple[int, ...]:
    w = tuple(weight)
    for i in reversed(word):
        w = simple_reflection(rs, i, w)
    return w


def weyl_orbit(rs: RootSystem, weight: Sequence[int]) -> frozenset:
    """Full Weyl-group orbit by breadth-first closure under simple reflections."""
    start = tuple(weight)
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for i in range(rs.rank):
            nxt = simple_reflection(rs, i, w)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def _check_word(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(int(i) for i in word)
    if sorted(word) != list(range(rs.rank)):
        raise ValueError(f"word {word} is not a permutation of 0..{rs.rank - 1}")
    return word


def orientation_from_coxeter(rs: RootSystem, word: Sequence[int]) -> Quiver:
    """Each diagram edge is oriented from the later word letter to the earlier."""
    word = _check_word(rs, word)
    pos = {v: k for k, v in enumerate(word)}
    arrows = []
    for a, b in rs.edges():
        if pos[a] < pos[b]:
            arrows.append((b, a))
        else:
            arrows.append((a, b))
    return Quiver(rs.rank, tuple(arrows))


def coxeter_from_orientation(rs: RootSystem, quiver: Quiver) -> tuple[int, ...]:
    """Canonical word inverting orientation_from_coxeter.

    Emits, repeatedly, the smallest-index vertex all of whose out-arrows
    point at already-emitted vertices; the result is a linear extension in
    which every arrow's target precedes its source.
    """
    if quiver.n != rs.rank:
        raise NotAnOrientation(f"{quiver.n} vertices for rank {rs.rank}")
    undirected = sorted(tuple(sorted(a)) for a in quiver.arrows)
    if undirected != sorted(rs.edges()):
        raise NotAnOrientation("arrow set is not an orientation of the diagram")
    out_arrows = {v: [t for s, t in quiver.arrows if s == v] for v in range(quiver.n)}
    remaining = set(range(quiver.n))
    word = []
    while remaining:
        ready = [v for v in sorted(remaining)
                 if all(t not in remaining for t in out_arrows[v])]
        if not ready:
            raise NotAnOrientation("orientation contains a directed cycle")
        v = ready[0]
        word.append(v)
        remaining.remove(v)
    return tuple(word)


def solve_gamma(rs: RootSystem, word: Sequence[int], alpha: Sequence[int]
                ) -> tuple[tuple[int, ...], int]:
    """The unique weight gamma with c^{-1} gamma - gamma = alpha.

    alpha is given in simple-root coordinates and must be a positive root.
    Returns (gamma in fundamental-weight coordinates, index i of the
    fundamental weight whose Weyl orbit contains gamma).  The orbit is found
    by breadth-first orbit generation, which is small at these ranks.
    """
    word = _check_word(rs, word)
    alpha = tuple(int(a) for a in alpha)
    if alpha not in rs.positive_roots:
        raise ValueError(f"{alpha} is not a positive root of {rs.label}{rs.rank}")
    n = rs.rank
    alpha_w = rs.root_to_weight(alpha)
    columns = [apply_word_inverse(rs, word, unit) for unit in rs.fundamental_weights]
    matrix = [[columns[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    solution = solve_frac(matrix, alpha_w)
    if solution is None:
        raise SingularSystem("c^{-1} - id was singular; Coxeter elements fix no weight")
    if any(x.denominator != 1 for x in solution):
        raise NotInAnyFundamentalOrbit(
            f"gamma {solution} is not in the weight lattice")
    gamma = tuple(int(x) for x in solution)
    for i in range(n):
        if gamma in weyl_orbit(rs, rs.fundamental_weights[i]):
            return gamma, i
    raise NotInAnyFundamentalOrbit(f"gamma {gamma} lies in no fundamental orbit")


# ---------------------------------------------------------------------------
# Type A realization: (n+1) x (n+1) matrices, fundamental representations as
# exterior powers of the standard one.
# ---------------------------------------------------------------------------

def elementary_matrices_A(rank: int, i: int, u) -> tuple[list, list]:
    """One-parameter subgroup values x_i(u) = Id + u E_{i,i+1}, y_i(1) = Id + E_{i+1,i}.

    i is a 0-based vertex; matrices are (rank+1) x (rank+1) with entries in
    Z[u_1..u_rank].  u may be an int or an FPolynomial in rank variables.
    """
    if not 0 <= i < rank:
        raise ValueError(f"vertex {i} out of range for rank {rank}")
    if isinstance(u, int):
        u = FPolynomial.constant(rank, u)
    x = poly_identity(rank + 1, rank)
    x[i][i + 1] = u
    y = poly_identity(rank + 1, rank)
    y[i + 1][i] = FPolynomial.one(rank)
    return x, y


def extreme_weight_subset(rank: int, gamma: Sequence[int]) -> tuple[int, ...] | None:
    """Recover the index subset J with gamma = sum of epsilon_j over J.

    An extreme weight of an exterior power of the standard representation is
    a 0/1 pattern in the epsilon-coordinates; gamma determines the pattern
    up to an overall shift.  Returns None if gamma is not of that shape.
    """
    n = rank
    v = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        v[k] = v[k + 1] + gamma[k]
    low = min(v)
    v = [x - low for x in v]
    if any(x not in (0, 1) for x in v):
        return None
    return tuple(k for k, x in enumerate(v) if x == 1)


def generalized_minor_A(rank: int, gamma: Sequence[int], matrix,
                        fund_index: int | None = None) -> FPolynomial:
    """Principal generalized minor at an extreme weight, as an ordinary minor.

    gamma must lie in the Weyl orbit of a fundamental weight; writing
    gamma = w omega_i, the weight subspace is spanned by e_{j1} ^ ... ^ e_{ji}
    with J = w({1..i}), and the minor uses rows and columns J.
    """
    gamma = tuple(int(x) for x in gamma)
    subset = extreme_weight_subset(rank, gamma)
    if subset is None or not subset:
        raise WeightNotExtreme(f"{gamma} is not an extreme weight of a fundamental "
                               f"representation of A{rank}")
    if fund_index is not None and len(subset) != fund_index + 1:
        raise WeightNotExtreme(
            f"{gamma} lies in the orbit of omega_{len(subset)}, not omega_{fund_index + 1}")
    rows = [[matrix[r][c] for c in subset] for r in subset]
    return poly_det(rows)


def minor_argument_matrix(rank: int, word: Sequence[int]) -> list:
    """The product y_{i_1}(1) ... y_{i_n}(1) x_{i_n}(u_{i_n}) ... x_{i_1}(u_{i_1}).

    Evaluation follows this exact order; the x and y factors do not commute.
    """
    acc = poly_identity(rank + 1, rank)
    for i in word:
        _, y = elementary_matrices_A(rank, i, 1)
        acc = poly_matmul(acc, y)
    for i in reversed(word):
        x, _ = elementary_matrices_A(rank, i, FPolynomial.variable(rank, i))
        acc = poly_matmul(acc, x)
    return acc


def f_polynomial_via_minor(rank: int, word: Sequence[int],
                           alpha: Sequence[int]) -> FPolynomial:
    """Determinantal route to the F-polynomial of the indecomposable at alpha.

    Solves the gamma-equation for the Coxeter word, builds the one-parameter
    matrix product, and extracts the generalized minor at gamma.
    """
    rs = root_system("A", rank)
    word = _check_word(rs, word)
    gamma, fund_index = solve_gamma(rs, word, alpha)
    mat = minor_argument_matrix(rank, word)
    return generalized_minor_A(rank, gamma, mat, fund_index=fund_index)


def dynkin_indecomposable(quiver: Quiver, alpha: Sequence[int], seed: int = 0,
                          max_attempts: int = 200, bound: int = 3) -> Representation:
    """An indecomposable representation with dimension vector alpha.

    Samples integer matrices from a deterministic seeded generator until the
    result is certified by hom(M, M) = 1 and ext^1(M, M) = 0 over Q; general
    representations of a positive-root dimension vector are exactly the
    indecomposables, so this terminates fast.
    """
    dims = tuple(int(a) for a in alpha)
    if len(dims) != quiver.n or any(d < 0 for d in dims):
        raise ValueError(f"bad dimension vector {dims}")
    rng = random.Random(f"quivergrass-indec:{quiver.arrows}:{dims}:{seed}")
    for _ in range(max_attempts):
        mats = []
        for s, t in quiver.arrows:
            mats.append(tuple(
                tuple(rng.randint(-bound, bound) for _ in range(dims[s]))
                for _ in range(dims[t])))
        rep = Representation(quiver, dims, tuple(mats))
        if hom_dim(rep, rep) == 1 and ext1_dim(rep) == 0:
            return rep
    raise SearchExhausted(
        f"no certified indecomposable of dims {dims} in {max_attempts} samples; "
        "is alpha a positive root of this quiver's diagram?")

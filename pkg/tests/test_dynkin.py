from itertools import permutations, product

import pytest

from quivergrass.dynkin import (
    apply_word_inverse,
    coxeter_from_orientation,
    dynkin_indecomposable,
    elementary_matrices_A,
    extreme_weight_subset,
    f_polynomial_via_minor,
    generalized_minor_A,
    minor_argument_matrix,
    orientation_from_coxeter,
    root_system,
    simple_reflection,
    solve_gamma,
    weyl_orbit,
)
from quivergrass.errors import (
    NotAnOrientation,
    SearchExhausted,
    WeightNotExtreme,
)
from quivergrass.euler import f_polynomial
from quivergrass.fpoly import FPolynomial
from quivergrass.model import Quiver, ext1_dim, hom_dim


def all_orientations(rs):
    edges = rs.edges()
    for dirs in product((0, 1), repeat=len(edges)):
        yield Quiver(rs.rank, tuple(
            (b, a) if d == 0 else (a, b) for (a, b), d in zip(edges, dirs)))


@pytest.mark.parametrize("label,rank,count", [
    ("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("A", 4, 10), ("A", 5, 15),
    ("D", 4, 12), ("D", 5, 20), ("E", 6, 36), ("E", 7, 63), ("E", 8, 120),
])
def test_positive_root_counts(label, rank, count):
    rs = root_system(label, rank)
    assert len(rs.positive_roots) == count


def test_cartan_simply_laced():
    for label, rank in (("A", 4), ("D", 4), ("E", 6)):
        rs = root_system(label, rank)
        for i in range(rank):
            assert rs.cartan[i][i] == 2
            for j in range(rank):
                assert rs.cartan[i][j] == rs.cartan[j][i]
                if i != j:
                    assert rs.cartan[i][j] in (0, -1)


def test_simple_reflection_basics():
    rs = root_system("A", 2)
    w1, w2 = rs.fundamental_weights
    assert simple_reflection(rs, 0, w2) == w2             # fixes other weights
    assert simple_reflection(rs, 0, w1) == (-1, 1)        # omega1 - alpha1
    for wt in ((1, 0), (2, -3), (0, 5)):
        for i in range(2):
            assert simple_reflection(rs, i, simple_reflection(rs, i, wt)) == wt


def test_weyl_orbit_sizes_type_a():
    rs = root_system("A", 3)
    assert len(weyl_orbit(rs, rs.fundamental_weights[0])) == 4
    assert len(weyl_orbit(rs, rs.fundamental_weights[1])) == 6
    assert len(weyl_orbit(rs, rs.fundamental_weights[2])) == 4


def test_orientation_from_coxeter_examples():
    a2 = root_system("A", 2)
    assert orientation_from_coxeter(a2, (0, 1)).arrows == ((1, 0),)
    assert orientation_from_coxeter(a2, (1, 0)).arrows == ((0, 1),)
    a3 = root_system("A", 3)
    q = orientation_from_coxeter(a3, (1, 0, 2))
    assert set(q.arrows) == {(0, 1), (2, 1)}


def test_coxeter_from_orientation_examples():
    a2 = root_system("A", 2)
    assert coxeter_from_orientation(a2, Quiver(2, ((1, 0),))) == (0, 1)
    assert coxeter_from_orientation(a2, Quiver(2, ((0, 1),))) == (1, 0)


@pytest.mark.parametrize("rank", (2, 3, 4))
def test_bijection_round_trips(rank):
    rs = root_system("A", rank)
    seen_words = set()
    count = 0
    for q in all_orientations(rs):
        word = coxeter_from_orientation(rs, q)
        assert orientation_from_coxeter(rs, word) == q
        seen_words.add(word)
        count += 1
    assert count == 2 ** (rank - 1)
    assert len(seen_words) == count
    for word in seen_words:
        assert coxeter_from_orientation(rs, orientation_from_coxeter(rs, word)) == word


def test_not_an_orientation():
    rs = root_system("A", 3)
    with pytest.raises(NotAnOrientation):
        coxeter_from_orientation(rs, Quiver(3, ((0, 1), (0, 1))))
    with pytest.raises(NotAnOrientation):
        coxeter_from_orientation(rs, Quiver(3, ((0, 2), (2, 1))))


def test_solve_gamma_examples():
    a1 = root_system("A", 1)
    gamma, idx = solve_gamma(a1, (0,), (1,))
    assert gamma == (-1,) and idx == 0

    a2 = root_system("A", 2)
    gamma, idx = solve_gamma(a2, (0, 1), (1, 0))
    assert gamma == (-1, 1) and idx == 0
    gamma, idx = solve_gamma(a2, (0, 1), (1, 1))
    assert gamma == (-1, 0) and idx == 1


@pytest.mark.parametrize("rank", (2, 3))
def test_solve_gamma_satisfies_equation(rank):
    rs = root_system("A", rank)
    for word in permutations(range(rank)):
        for alpha in rs.positive_roots:
            gamma, idx = solve_gamma(rs, word, alpha)
            moved = apply_word_inverse(rs, word, gamma)
            diff = tuple(a - b for a, b in zip(moved, gamma))
            assert diff == rs.root_to_weight(alpha)
            assert gamma in weyl_orbit(rs, rs.fundamental_weights[idx])


@pytest.mark.parametrize("label,rank", [
    ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5), ("E", 6),
])
def test_coxeter_minus_identity_invertible(label, rank):
    from quivergrass.linalg import rank_frac
    rs = root_system(label, rank)
    words = permutations(range(rank)) if rank <= 5 else [
        tuple(range(rank)), tuple(reversed(range(rank))), (1, 3, 5, 0, 2, 4)[:rank]]
    for word in words:
        cols = [apply_word_inverse(rs, word, u) for u in rs.fundamental_weights]
        mat = [[cols[j][i] - (1 if i == j else 0) for j in range(rank)]
               for i in range(rank)]
        assert rank_frac(mat) == rank, word


def test_elementary_matrices():
    x, y = elementary_matrices_A(1, 0, FPolynomial.variable(1, 0))
    from quivergrass.fpoly import poly_matmul
    prod = poly_matmul(y, x)
    u = FPolynomial.variable(1, 0)
    assert prod[0][0] == 1 and prod[0][1] == u
    assert prod[1][0] == 1 and prod[1][1] == 1 + u

    x0, _ = elementary_matrices_A(3, 1, 0)
    for i in range(4):
        for j in range(4):
            assert x0[i][j] == (1 if i == j else 0)
    xv, yv = elementary_matrices_A(3, 1, FPolynomial.variable(3, 1))
    for i in range(4):
        for j in range(i):
            assert not xv[i][j]      # upper triangular
        for j in range(i + 1, 4):
            assert not yv[i][j]      # lower triangular


def test_extreme_weight_subsets():
    assert extreme_weight_subset(2, (1, 0)) == (0,)          # omega_1
    assert extreme_weight_subset(2, (0, 1)) == (0, 1)        # omega_2
    assert extreme_weight_subset(1, (-1,)) == (1,)           # lowest weight
    assert extreme_weight_subset(2, (-1, 0)) == (1, 2)       # -omega_1 in W.omega_2
    assert extreme_weight_subset(2, (2, 0)) is None
    assert extreme_weight_subset(2, (1, 1)) is None          # not extreme


def test_generalized_minor_leading_principal():
    mat = minor_argument_matrix(3, (0, 1, 2))
    for i in range(3):
        omega = tuple(1 if j == i else 0 for j in range(3))
        direct = generalized_minor_A(3, omega, mat)
        from quivergrass.fpoly import poly_det
        block = [row[: i + 1] for row in mat[: i + 1]]
        assert direct == poly_det(block)
        assert direct.constant_term == 1


def test_generalized_minor_weight_checks():
    mat = minor_argument_matrix(2, (0, 1))
    with pytest.raises(WeightNotExtreme):
        generalized_minor_A(2, (2, 0), mat)
    with pytest.raises(WeightNotExtreme):
        generalized_minor_A(2, (-1, 0), mat, fund_index=0)  # lives in W.omega_2


def test_f_polynomial_via_minor_examples():
    assert f_polynomial_via_minor(1, (0,), (1,)) == FPolynomial(1, {(0,): 1, (1,): 1})
    got = f_polynomial_via_minor(2, (0, 1), (1, 1))
    assert got == FPolynomial(2, {(0, 0): 1, (1, 0): 1, (1, 1): 1})
    got = f_polynomial_via_minor(2, (0, 1), (0, 1))
    assert got == FPolynomial(2, {(0, 0): 1, (0, 1): 1})


@pytest.mark.parametrize("rank", (2, 3))
def test_minor_polynomial_invariants(rank):
    rs = root_system("A", rank)
    for word in permutations(range(rank)):
        for alpha in rs.positive_roots:
            f = f_polynomial_via_minor(rank, word, alpha)
            assert f.constant_term == 1
            assert f.coefficient(alpha) != 0
            top = max(f.terms, key=lambda e: (sum(e), e))
            assert top == tuple(alpha)
            for e in f.terms:
                assert all(x <= a for x, a in zip(e, alpha))


def test_minor_matches_bruteforce_spot():
    rs = root_system("A", 3)
    for q in all_orientations(rs):
        word = coxeter_from_orientation(rs, q)
        alpha = (1, 1, 1)
        rep = dynkin_indecomposable(q, alpha)
        assert f_polynomial_via_minor(3, word, alpha) == f_polynomial(rep)


def test_dynkin_indecomposable_simples_and_roots():
    q = Quiver(2, ((1, 0),))
    rep = dynkin_indecomposable(q, (1, 0))
    assert rep.dims == (1, 0) and hom_dim(rep, rep) == 1
    rep = dynkin_indecomposable(q, (1, 1))
    assert hom_dim(rep, rep) == 1 and ext1_dim(rep) == 0

    chain = Quiver(3, ((0, 1), (1, 2)))
    rep = dynkin_indecomposable(chain, (1, 1, 1))
    assert hom_dim(rep, rep) == 1 and ext1_dim(rep) == 0


def test_dynkin_indecomposable_d4_highest_root():
    d4 = Quiver(4, ((0, 1), (2, 1), (3, 1)))  # all arrows into the center
    rep = dynkin_indecomposable(d4, (1, 2, 1, 1))
    assert hom_dim(rep, rep) == 1 and ext1_dim(rep) == 0


def test_dynkin_indecomposable_deterministic():
    q = Quiver(3, ((0, 1), (1, 2)))
    assert dynkin_indecomposable(q, (1, 1, 1)) == dynkin_indecomposable(q, (1, 1, 1))


def test_dynkin_indecomposable_exhausts_on_non_root():
    chain = Quiver(3, ((0, 1), (1, 2)))
    with pytest.raises(SearchExhausted):
        dynkin_indecomposable(chain, (1, 0, 1), max_attempts=20)

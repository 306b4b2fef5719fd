import random

import pytest

from quivergrass.errors import (
    DomainMismatch,
    MixedScalarDomains,
    NotAcyclic,
    ParseError,
    QuiverMismatch,
    ShapeMismatch,
)
from quivergrass.kronecker import (
    build_kronecker,
    kronecker_quiver,
    preinjective,
    preprojective,
    regular,
)
from quivergrass.model import (
    Quiver,
    Representation,
    direct_sum,
    dual_representation,
    euler_form,
    ext1_dim,
    hom_dim,
    is_rigid,
    is_subrepresentation,
    load_representation,
    reduce_mod,
    representation_from_dict,
    representation_to_dict,
    save_representation,
    simple_representation,
    subspace_tuple_from_rows,
    validate_representation,
    zero_representation,
    zero_subspaces,
    full_subspaces,
)

from oracles import naive_hom_dim_mod

ONE_VERTEX = Quiver(1, ())


def test_quiver_flags():
    q = Quiver(3, ((0, 1), (1, 2)))
    assert not q.has_loops and not q.has_two_cycles and q.is_acyclic
    assert Quiver(2, ((0, 0),)).has_loops
    assert Quiver(2, ((0, 1), (1, 0))).has_two_cycles
    assert not Quiver(2, ((0, 1), (1, 0))).is_acyclic
    assert Quiver(3, ((2, 1), (1, 0))).topological_order() == (2, 1, 0)


def test_quiver_arrow_bounds():
    with pytest.raises(ValueError):
        Quiver(2, ((0, 2),))


def test_validate_kronecker_ok():
    rep = build_kronecker(preprojective(2))
    assert rep.dims == (1, 2)
    validate_representation(rep)


def test_validate_shape_mismatch_on_second_arrow():
    q = kronecker_quiver()
    # second matrix transposed: 1x2 instead of 2x1
    rep = Representation(q, (1, 2), (((1,), (0,)), ((0, 1),)))
    with pytest.raises(ShapeMismatch) as err:
        validate_representation(rep)
    assert err.value.arrow_index == 1


def test_validate_one_vertex_any_dim():
    for m in range(4):
        validate_representation(Representation(ONE_VERTEX, (m,), ()))


def test_validate_field_domain():
    q = kronecker_quiver()
    rep = Representation(q, (1, 2), (((1,), (0,)), ((0,), (1,))), field=9)
    with pytest.raises(MixedScalarDomains):
        validate_representation(rep)
    bad_entry = Representation(q, (1, 2), (((7,), (0,)), ((0,), (1,))), field=5)
    with pytest.raises(MixedScalarDomains):
        validate_representation(bad_entry)


def test_subrepresentation_zero_and_full():
    rep = reduce_mod(build_kronecker(preprojective(2)), 5)
    assert is_subrepresentation(rep, zero_subspaces(rep))
    assert is_subrepresentation(rep, full_subspaces(rep))


def test_subrepresentation_rejects_nonclosed():
    # phi_2 sends N_1 = span(1) to span(e_2), which is not inside span(e_1)
    rep = reduce_mod(build_kronecker(preprojective(2)), 5)
    sub = subspace_tuple_from_rows(5, (((1,),), ((1, 0),)))
    assert not is_subrepresentation(rep, sub)


def test_subrepresentation_domain_mismatch():
    rep = build_kronecker(preprojective(2))
    sub = subspace_tuple_from_rows(5, (((1,),), ((1, 0),)))
    with pytest.raises(DomainMismatch):
        is_subrepresentation(rep, sub)
    with pytest.raises(DomainMismatch):
        is_subrepresentation(reduce_mod(rep, 3), sub)


def test_echelon_canonicity():
    # same plane, different spanning rows -> bit-identical canonical bases
    a = subspace_tuple_from_rows(5, (((1, 2, 3), (0, 1, 4)),))
    b = subspace_tuple_from_rows(5, (((1, 3, 2), (2, 0, 0)),))  # row sums of a
    c = subspace_tuple_from_rows(5, (((1, 0, 0), (0, 1, 3)),))
    assert a == b
    assert a != c


def test_direct_sum_identity_and_dims():
    rep = build_kronecker(preprojective(2))
    zero = zero_representation(rep.quiver)
    assert direct_sum(rep, zero) == rep
    a = Representation(ONE_VERTEX, (2,), ())
    b = Representation(ONE_VERTEX, (3,), ())
    assert direct_sum(a, b).dims == (5,)
    both = direct_sum(build_kronecker(preprojective(2)),
                      build_kronecker(preinjective(2)))
    assert both.dims == (3, 3)


def test_direct_sum_mismatches():
    a = build_kronecker(preprojective(2))
    b = Representation(ONE_VERTEX, (1,), ())
    with pytest.raises(QuiverMismatch):
        direct_sum(a, b)
    with pytest.raises(MixedScalarDomains):
        direct_sum(a, reduce_mod(a, 5))


def test_dual_involution_and_shapes():
    rep = build_kronecker(preprojective(2))
    dual = dual_representation(rep)
    assert dual.quiver.arrows == ((1, 0), (1, 0))
    assert dual.dims == (1, 2)
    assert all(len(mat) == 1 and len(mat[0]) == 2 for mat in dual.matrices)
    assert dual_representation(dual) == rep


def test_dual_of_preprojective_is_preinjective():
    for m in (1, 2, 3):
        dual = dual_representation(build_kronecker(preprojective(m)))
        # relabel the opposite quiver's vertices 0 <-> 1 to land back on 1 -> 2
        relabeled = Representation(kronecker_quiver(),
                                   (dual.dims[1], dual.dims[0]), dual.matrices)
        inj = build_kronecker(preinjective(m))
        assert relabeled.dims == inj.dims
        assert hom_dim(relabeled, inj) >= 1
        assert hom_dim(inj, relabeled) >= 1
        assert hom_dim(relabeled, relabeled) == 1
        assert hom_dim(inj, inj) == 1


def test_euler_form_values():
    kron = kronecker_quiver()
    assert euler_form(kron, (1, 2), (1, 2)) == 1
    assert euler_form(kron, (3, 4), (0, 0)) == 0
    assert euler_form(ONE_VERTEX, (3,), (5,)) == 15
    with pytest.raises(NotAcyclic):
        euler_form(Quiver(2, ((0, 1), (1, 0))), (1, 1), (1, 1))


def test_hom_dim_examples():
    pr2 = build_kronecker(preprojective(2))
    assert hom_dim(pr2, pr2) == 1
    a = Representation(ONE_VERTEX, (2,), ())
    b = Representation(ONE_VERTEX, (3,), ())
    assert hom_dim(a, b) == 6
    assert hom_dim(zero_representation(kronecker_quiver()), pr2) == 0


def test_hom_dim_against_naive_oracle():
    rng = random.Random("hom-oracle")
    q = Quiver(2, ((0, 1), (1, 1)))
    for p in (2, 3):
        for _ in range(4):
            da = (rng.randint(0, 2), rng.randint(0, 2))
            db = (rng.randint(0, 2), rng.randint(0, 2))

            def sample(dims):
                return tuple(
                    tuple(tuple(rng.randrange(p) for _ in range(dims[s]))
                          for _ in range(dims[t]))
                    for s, t in q.arrows)

            ra = Representation(q, da, sample(da), field=p)
            rb = Representation(q, db, sample(db), field=p)
            expected = naive_hom_dim_mod(q.arrows, da, db, ra.matrices, rb.matrices, p)
            assert hom_dim(ra, rb) == expected


def test_hom_additivity_over_direct_sums():
    rng = random.Random("hom-additive")
    q = Quiver(3, ((0, 1), (1, 2), (0, 2)))

    def sample():
        dims = tuple(rng.randint(0, 2) for _ in range(3))
        mats = tuple(
            tuple(tuple(rng.randint(-2, 2) for _ in range(dims[s]))
                  for _ in range(dims[t]))
            for s, t in q.arrows)
        return Representation(q, dims, mats)

    for _ in range(5):
        a, a2, b = sample(), sample(), sample()
        assert hom_dim(direct_sum(a, a2), b) == hom_dim(a, b) + hom_dim(a2, b)
        assert hom_dim(b, direct_sum(a, a2)) == hom_dim(b, a) + hom_dim(b, a2)


def test_rigidity():
    assert is_rigid(build_kronecker(preprojective(2)))
    assert ext1_dim(build_kronecker(preprojective(2))) == 0
    simple = simple_representation(Quiver(2, ((0, 1),)), 0)
    assert is_rigid(simple)
    reg1 = build_kronecker(regular(1, 3))
    assert ext1_dim(reg1) == 1
    assert not is_rigid(reg1)


def test_ext_nonnegative_on_random_inputs():
    rng = random.Random("ext-nonneg")
    q = Quiver(2, ((0, 1), (0, 1)))
    for _ in range(10):
        dims = (rng.randint(0, 3), rng.randint(0, 3))
        mats = tuple(
            tuple(tuple(rng.randint(-3, 3) for _ in range(dims[0]))
                  for _ in range(dims[1]))
            for _ in q.arrows)
        assert ext1_dim(Representation(q, dims, mats)) >= 0


def test_json_round_trip(tmp_path):
    rep = build_kronecker(preprojective(3))
    path = tmp_path / "pr3.json"
    save_representation(rep, path)
    assert load_representation(path) == rep


def test_json_parse_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_representation(path)
    with pytest.raises(ParseError):
        representation_from_dict({"vertices": 1})
    doc = representation_to_dict(build_kronecker(preprojective(2)))
    assert doc["arrows"] == [[1, 2], [1, 2]]  # files are 1-based
    doc["matrices"][1] = [[0, 1]]  # transposed shape
    with pytest.raises(ShapeMismatch):
        representation_from_dict(doc)

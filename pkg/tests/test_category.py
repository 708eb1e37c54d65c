import pytest

from braidhopf.builders import (conjugation_yd_object, cyclic_group, s3_group,
                                symmetric_group)
from braidhopf.category import (CatObject, FiniteGroup, MissingGrading,
                                Morphism, SignGradedBackend, SUPER, VEC,
                                YetterDrinfeldBackend, verify_braiding_axioms,
                                verify_morphism)
from braidhopf.linalg import Matrix


def all_pass(checks):
    return all(c.status == "pass" for c in checks)


# -- groups -------------------------------------------------------------------

def test_cyclic_group_table():
    g = cyclic_group(2)
    assert g.identity == 0
    assert g.mul(1, 1) == 0
    assert g.inverses == (0, 1)


def test_group_law_is_verified():
    with pytest.raises(ValueError):
        FiniteGroup.from_table("bad", ["e", "a"], [[0, 1], [1, 1]])


def test_s3_has_expected_relations():
    g = s3_group()
    c, t = g.index("c"), g.index("t")
    # t c t^-1 = c^-1
    assert g.conjugate(t, c) == g.index("c2")
    assert g.mul(t, c) == g.index("c2t")
    assert g.mul(c, t) == g.index("ct")


def test_symmetric_group_order():
    assert len(symmetric_group(4).elements) == 24


# -- objects and tensor -------------------------------------------------------

def test_tensor_unit_object():
    y = CatObject(5)
    assert VEC.tensor(VEC.unit(), y).dim == 5


def test_tensor_dims_multiply():
    assert VEC.tensor(CatObject(2), CatObject(6)).dim == 12


def test_super_tensor_parity():
    line = CatObject(1, grading=(1,))
    sq = SUPER.tensor(line, line)
    assert sq.dim == 1 and sq.grading == (0,)


def test_super_requires_grading():
    with pytest.raises(MissingGrading):
        SUPER.tensor(CatObject(1), CatObject(1, grading=(1,)))


# -- braidings ----------------------------------------------------------------

def test_vec_braiding_is_flip_and_symmetric():
    x, y = CatObject(2), CatObject(3)
    c = VEC.braiding_mat(x, y)
    c_back = VEC.braiding_mat(y, x)
    assert c_back * c == Matrix.identity(6)
    # flip on basis: e_i (x) f_j -> f_j (x) e_i
    assert c.entry(0 * 2 + 1, 1 * 3 + 0) == 1


def test_super_odd_lines_give_minus_one():
    line = CatObject(1, grading=(1,))
    c = SUPER.braiding_mat(line, line)
    assert c == Matrix.from_rows([[-1]])


def test_sign_graded_backend_matches_super_on_c2():
    g = cyclic_group(2)
    backend = SignGradedBackend.make(g, [[1, 1], [1, -1]])
    x = CatObject(2, grading=(0, 1))
    assert backend.braiding_mat(x, x) == SUPER.braiding_mat(x, x)


def test_sign_graded_rejects_non_bicharacter():
    g = cyclic_group(2)
    with pytest.raises(ValueError):
        SignGradedBackend.make(g, [[1, -1], [1, 1]])


def test_yd_braiding_acts_then_flips():
    g = cyclic_group(2)
    backend = YetterDrinfeldBackend(g)
    # v spans an odd line with trivial action; w a 2-dim object with a sign flip
    neg = Matrix.from_rows([[1, 0], [0, -1]])
    v = CatObject(1, grading=(1,), action=(Matrix.identity(1), Matrix.identity(1)))
    w = CatObject(2, grading=(0, 0), action=(Matrix.identity(2), neg))
    c = backend.braiding_mat(v, w)
    flip = VEC.braiding_mat(CatObject(1), CatObject(2))
    from braidhopf.linalg import kron
    assert c == flip * kron(Matrix.identity(1), neg)
    inv = backend.braiding_inv_mat(v, w)
    assert inv * c == Matrix.identity(2)


def test_braiding_axioms_vec():
    objs = [CatObject(1), CatObject(2), CatObject(3)]
    assert all_pass(verify_braiding_axioms(VEC, *objs))


def test_braiding_axioms_super_odd():
    line = CatObject(1, grading=(1,))
    plane = CatObject(2, grading=(0, 1))
    assert all_pass(verify_braiding_axioms(SUPER, line, plane, line))


def test_braiding_axioms_yd_s3_regular():
    g = s3_group()
    backend = YetterDrinfeldBackend(g)
    reg = conjugation_yd_object(g)
    assert all_pass(backend.object_report(reg))
    assert all_pass(verify_braiding_axioms(backend, reg, reg, reg))


def test_yd_naturality_with_class_sum_projection():
    g = s3_group()
    backend = YetterDrinfeldBackend(g)
    reg = conjugation_yd_object(g)
    # projection onto the 3-cycle components is a valid endomorphism
    cls = [g.index("c"), g.index("c2")]
    proj = Matrix.from_entries(6, 6, ((i, i, 1) for i in cls))
    f = Morphism(reg, reg, proj)
    assert all_pass(verify_morphism(backend, f))
    assert all_pass(verify_braiding_axioms(backend, reg, reg, reg, [(f, f)]))


# -- morphism validity ----------------------------------------------------------

def test_identity_is_valid_everywhere():
    x = CatObject(2, grading=(0, 1))
    f = Morphism(x, x, Matrix.identity(2))
    assert all_pass(verify_morphism(SUPER, f))


def test_flip_on_super_square_is_degree_preserving():
    line = CatObject(1, grading=(1,))
    sq = SUPER.tensor(line, line)
    f = Morphism(sq, sq, Matrix.identity(1))
    assert all_pass(verify_morphism(SUPER, f))


def test_grade_mixing_map_fails_with_witness():
    x = CatObject(2, grading=(0, 1))
    f = Morphism(x, x, Matrix.from_rows([[0, 1], [1, 0]]))
    checks = verify_morphism(SUPER, f)
    assert any(c.status == "fail" and c.witness for c in checks)


def test_yd_equivariance_violation_detected():
    g = cyclic_group(2)
    backend = YetterDrinfeldBackend(g)
    neg = Matrix.from_rows([[1, 0], [0, -1]])
    w = CatObject(2, grading=(0, 0), action=(Matrix.identity(2), neg))
    swap = Morphism(w, w, Matrix.from_rows([[0, 1], [1, 0]]))
    checks = verify_morphism(backend, swap)
    assert any(c.name == "equivariance" and c.status == "fail" for c in checks)


def test_yd_object_report_catches_bad_action():
    g = cyclic_group(2)
    backend = YetterDrinfeldBackend(g)
    bad = CatObject(1, grading=(0,), action=(Matrix.identity(1), Matrix.from_rows([[2]])))
    checks = backend.object_report(bad)
    assert any(c.status == "fail" for c in checks)


def test_yd_braiding_requires_an_action():
    from braidhopf.category import MissingAction
    backend = YetterDrinfeldBackend(cyclic_group(2))
    x = CatObject(1, grading=(0,))
    with pytest.raises(MissingAction):
        backend.braiding_mat(x, x)

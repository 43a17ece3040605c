"""Tests for the tensor presentation and its universal property."""

import pytest

from dblcheck.core import trivial
from dblcheck.errors import RelationViolated
from dblcheck.tensor import (
    JQuasiFunctor, factorize, j_quasi_functor, tensor_presentation,
    verify_universal_property)
from dblcheck.core import Gen, VId

from test_quasi import distributive_quasi, sign_quasi


def test_trivial_tensor_generators():
    pres = tensor_presentation(trivial(), trivial())
    assert pres.obj_gens == ["o:0:0"]
    assert sorted(pres.h_gens) == ["Ak:0:0", "KB:0:0"]
    assert pres.v_gens == []
    # one mixed square, one per laxity family, one interchanger
    assert sorted(pres.sq_gens) == [
        "Aom:0:0", "cA:0:0:0", "cB:0:0:0", "kk:0:0",
        "uA:0:0", "uB:0:0", "zeB:0:0"]


def test_trivial_tensor_audit():
    pres = tensor_presentation(trivial(), trivial())
    assert pres.audit() == {
        "fam-a.v1": 1, "fam-a.h1": 1, "fam-a.h2": 1, "fam-a.hex": 1,
        "fam-a.u": 2, "fam-a.c-nat": 1, "fam-a.u-nat": 1,
        "fam-b.v1": 1, "fam-b.h1": 1, "fam-b.h2": 1, "fam-b.hex": 1,
        "fam-b.u": 2, "fam-b.c-nat": 1, "fam-b.u-nat": 1,
        "(1_B,K)": 1, "(k,1_A)": 1, "(1_B,U)": 1, "(u,1_A)": 1,
        "(k'k,K)": 1, "(k,K'K)": 1, "(u,K'K)": 1, "(k'k,U)": 1,
        "(u/u',K)": 1, "(k,U/U')": 1, "(u/u',U)": 1, "(u,U/U')": 1,
        "(k,K)-l-nat": 1, "(u,U)-l-nat": 1,
        "(k,K)-r-nat": 1, "(u,U)-r-nat": 1}


def test_generator_counts_linear():
    q = sign_quasi({0: 0, 1: 1})
    A, B = q.A, q.B
    pres = tensor_presentation(A, B)
    assert len(pres.obj_gens) == A.n_objects * B.n_objects
    assert len(pres.h_gens) == (A.n_objects * B.n_hcells
                                + A.n_hcells * B.n_objects)
    nva = sum(1 for u in range(B.n_vcells) if not B.is_v_identity(u))
    nvb = sum(1 for U in range(A.n_vcells) if not A.is_v_identity(U))
    assert len(pres.v_gens) == (A.n_objects * nva + nvb * B.n_objects)
    assert "kk:0:%d" % (A.n_hcells - 1) in pres.sq_gens


def test_identity_normalization_relation_present():
    # the square over a vertical identity collapses to the identity square
    # on the mixed 1-cell
    q = sign_quasi({0: 0, 1: 1})
    pres = tensor_presentation(q.A, q.B)
    B = q.B
    want = ("fam-a.h2", pres.t_sqa(0, B.sq_v_id(0)), VId(pres.t_ha(0, 0)))
    assert want in pres.relations


def test_laxity_relation_present():
    # composing two mixed 1-cells against the image of their composite
    q = sign_quasi({0: 0, 1: 1})
    pres = tensor_presentation(q.A, q.B)
    labels = set(pres.audit())
    assert "fam-b.hex" in labels
    assert "(k'k,K)" in labels or "(k,K'K)" in labels


def test_factorize_sign_quasi():
    q = sign_quasi({0: 0, 1: 1})
    pres = tensor_presentation(q.A, q.B)
    bar = factorize(q, pres)
    for K in range(q.A.n_hcells):
        assert bar["kk:0:%d" % K].id == q.sq_kk(0, K)
    assert bar["uA:0:0"].id == q.fA(0).unitor(0)
    assert bar["o:1:0"].id == q.obj(1, 0)


def test_factorize_distributive_quasi():
    q = distributive_quasi({(0, 0), (1, 1)}, {(0, 0), (1, 1), (0, 1)})
    bar = factorize(q)
    assert bar["kk:0:0"].id == q.sq_kk(0, 0)


def test_factorize_rejects_doctored_interchanger():
    q = sign_quasi({0: 0, 1: 1})
    C = q.C
    (k, K), s = next(iter(q.kk.items()))
    flipped = C.parity_index[(C.sq_top(s), C.sq_bottom(s), C.sq_left(s),
                              C.sq_right(s), (C.parity_sign[s] + 1) % 2)]
    q.kk[(k, K)] = flipped
    with pytest.raises(RelationViolated):
        factorize(q)


def test_j_quasi_functor_lands_in_generators():
    q = sign_quasi({0: 0, 1: 1})
    pres = tensor_presentation(q.A, q.B)
    J = j_quasi_functor(q.A, q.B, pres)
    assert isinstance(J, JQuasiFunctor)
    assert J.obj(0, 0) == Gen("o:0:0")
    assert J.sq_kk(0, 1) == Gen("kk:0:1")
    # identity vertical arguments normalize away
    assert J.v_a(0, q.B.v_id(0)) == VId(Gen("o:0:0"))


def test_universal_property_sign():
    q = sign_quasi({0: 1, 1: 0})
    rep = verify_universal_property(q)
    assert rep.passed, rep.laws_failed()


def test_universal_property_distributive():
    q = distributive_quasi({(0, 0), (1, 1), (1, 0)}, {(0, 0), (1, 1)})
    rep = verify_universal_property(q)
    assert rep.passed, rep.laws_failed()

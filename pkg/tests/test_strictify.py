"""Tests for strictification, destrictification, and the round trip."""

import pytest

from dblcheck.core import bool_matrix_double_category
from dblcheck.errors import NontrivialUU, NotDecomposable, NotUnitary
from dblcheck.functor import check_lax_functor
from dblcheck.quasi import (
    check_q_hor, check_q_mod, check_q_vert, check_quasi_functor,
    identity_q_vert)
from dblcheck.strictify import (
    build_witnesses, check_equivalence, destrictify0, destrictify_hor,
    destrictify_mod, destrictify_vert, is_decomposable, product_dom,
    strictify0, strictify_hor, strictify_mod, strictify_vert)
from dblcheck.transform import (
    check_hor_transform, check_modification, check_vert_transform)

from test_quasi import (
    distributive_quasi, identity_q_mod, sign_q_hor, sign_quasi)


def test_strictify_sign_quasi_is_lax_functor():
    q = sign_quasi({0: 0, 1: 1})
    P = strictify0(q)
    assert P.dom.n_objects == q.A.n_objects * q.B.n_objects
    assert P.dom.n_hcells == q.A.n_hcells * q.B.n_hcells
    rep = check_lax_functor(P)
    assert rep.passed, rep.laws_failed()
    # the product domain memoizes functors already strictified over it
    assert strictify0(q, P.dom) is P


def test_strictify_all_sign_patterns():
    for signs in ({0: 0, 1: 0}, {0: 0, 1: 1}, {0: 1, 1: 0}, {0: 1, 1: 1}):
        P = strictify0(sign_quasi(signs))
        rep = check_lax_functor(P)
        assert rep.passed, rep.laws_failed()


def test_strictify_distributive():
    q = distributive_quasi({(0, 0), (1, 1)}, {(0, 0), (1, 1), (0, 1)})
    P = strictify0(q)
    rep = check_lax_functor(P)
    assert rep.passed, rep.laws_failed()


def test_strictify_keeps_pasting_records():
    q = sign_quasi({0: 0, 1: 1})
    P = strictify0(q)
    assert set(P.gamma_terms) == set(P.comp)
    assert set(P.iota_terms) == set(P.unit)


def test_nontrivial_uu_guard():
    # doctored entry on identity cells; the guard only inspects stored
    # interchangers, so this exercises the rejection path directly
    q = sign_quasi({0: 0, 1: 1})
    p = q.C
    q.uu[(0, 0)] = p.parity_index[(0, 0, 0, 0, 1)]
    with pytest.raises(NontrivialUU):
        strictify0(q)


def test_strictify_hor_transform():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    tr = strictify_hor(sign_q_hor(q1, q2))
    rep = check_hor_transform(tr)
    assert rep.passed, rep.laws_failed()


def test_strictify_vert_transform():
    q = sign_quasi({0: 1, 1: 0})
    tr = strictify_vert(identity_q_vert(q))
    rep = check_vert_transform(tr)
    assert rep.passed, rep.laws_failed()


def test_strictify_modification():
    q = sign_quasi({0: 0, 1: 1})
    m = strictify_mod(identity_q_mod(q))
    rep = check_modification(m)
    assert rep.passed, rep.laws_failed()


def test_destrictify_roundtrip_sign():
    q = sign_quasi({0: 0, 1: 1})
    P = strictify0(q)
    back = destrictify0(P, q.A, q.B)
    rep = check_quasi_functor(back, trivial_uU=True)
    assert rep.passed, rep.laws_failed()
    # identity padding cancels against the trivial factor images
    for a in range(q.A.n_objects):
        assert back.fam_a[a].hmap == q.fam_a[a].hmap
        assert back.fam_a[a].ob == q.fam_a[a].ob
    assert back.kk == q.kk


def test_destrictify_needs_unitary():
    # both carriers reflexive and transitive but not discrete: compositors
    # are invertible, unitors are not
    full = {(0, 0), (0, 1), (1, 0), (1, 1)}
    q = distributive_quasi(full, full)
    P = strictify0(q)
    assert is_decomposable(P, q.A, q.B)
    with pytest.raises(NotUnitary):
        destrictify0(P, q.A, q.B)


def test_destrictify_needs_decomposable():
    full = {(0, 0), (0, 1), (1, 0), (1, 1)}
    q = distributive_quasi(full, full)
    P = strictify0(q)
    b2 = q.C
    o = b2.objects.index("2")
    empty = b2.hindex[(o, o, frozenset())]
    R = q.fB(0).h(0)
    # doctor the padded compositor into a square with no vertical inverse
    P.comp[(0, 0)] = b2.find_square(empty, b2.hcomp_h(R, R),
                                    b2.v_id(o), b2.v_id(o))
    assert not is_decomposable(P, q.A, q.B)
    with pytest.raises(NotDecomposable):
        destrictify0(P, q.A, q.B)


def test_destrictify_hor_roundtrip():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    dom = product_dom(q1.A, q1.B)
    tr = strictify_hor(sign_q_hor(q1, q2), dom)
    back = destrictify_hor(tr, q1.A, q1.B)
    rep = check_q_hor(back)
    assert rep.passed, rep.laws_failed()


def test_destrictify_vert_roundtrip():
    q = sign_quasi({0: 0, 1: 1})
    dom = product_dom(q.A, q.B)
    tr = strictify_vert(identity_q_vert(q), dom)
    back = destrictify_vert(tr, q.A, q.B)
    rep = check_q_vert(back)
    assert rep.passed, rep.laws_failed()


def test_destrictify_mod_roundtrip():
    q = sign_quasi({0: 1, 1: 1})
    dom = product_dom(q.A, q.B)
    m = strictify_mod(identity_q_mod(q), dom)
    back = destrictify_mod(m, q.A, q.B)
    rep = check_q_mod(back)
    assert rep.passed, rep.laws_failed()


def test_equivalence_witnesses():
    for signs in ({0: 0, 1: 0}, {0: 0, 1: 1}, {0: 1, 1: 1}):
        w = build_witnesses(sign_quasi(signs))
        assert w.strict_back.dom is w.strict.dom
        rep = check_equivalence(w)
        assert rep.passed, rep.laws_failed()


def test_equivalence_corpus_naturality():
    from dblcheck.quasi import identity_q_vert as qvert
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    dom = product_dom(q1.A, q1.B)
    w1 = build_witnesses(q1, dom)
    w2 = build_witnesses(q2, dom)
    rep = check_equivalence([w1, w2],
                            hor_cells=[sign_q_hor(q1, q2)],
                            vert_cells=[qvert(q1)])
    assert rep.passed, rep.laws_failed()

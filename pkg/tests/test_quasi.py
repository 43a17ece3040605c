"""Tests for quasi functors, their cells, and currying."""

import pytest

from dblcheck.core import bool_matrix_double_category, parity, trivial, walk_h
from dblcheck.errors import ChainMismatch
from dblcheck.functor import (
    LaxDoubleFunctor, check_lax_functor, strict_functor)
from dblcheck.hom import HOP, HomDoubleCat
from dblcheck.quasi import (
    QHorTransform, QuasiFunctor, check_q_hor, check_q_mod, check_q_vert,
    check_quasi_functor, curry0, curry_hor, curry_mod, curry_vert,
    identity_q_hor, identity_q_vert, q_hom_double_category, uncurry0,
    uncurry_hor, uncurry_mod, uncurry_vert, vcompose_q_hor, vcompose_q_vert)
from dblcheck.transform import (
    HorTransform, Modification, check_hor_transform, check_vert_transform,
    identity_hor_transform, identity_modification, identity_vert_transform)


def point_functor(t, p, sign):
    """Lax functor from the point into parity with carrier 1_* and the
    given compositor/unitor sign."""
    comp = {(0, 0): p.parity_index[(0, 0, 0, 0, sign)]}
    unit = {0: p.parity_index[(0, 0, 0, 0, sign)]}
    sqmap = {0: p.parity_index[(0, 0, 0, 0, 0)]}
    return LaxDoubleFunctor(t, p, {0: 0}, {0: 0}, {0: 0}, sqmap, comp, unit,
                            name="pt%d" % sign)


def walk_into_parity(w, p):
    f = [x for x in range(w.n_hcells) if w.hnames[x] == "a"][0]
    hmap = {x: (1 if x == f else 0) for x in range(w.n_hcells)}
    vmap = {u: 0 for u in range(w.n_vcells)}
    sqmap = {s: p.parity_index[(hmap[w.sq_top(s)], hmap[w.sq_bottom(s)],
                                0, 0, 0)] for s in range(w.n_squares)}
    return strict_functor(w, p, {0: 0, 1: 0}, hmap, vmap, sqmap)


def sign_quasi(signs, w=None, t=None, p=None):
    """Quasi functor (walk, point) -> parity with the point-functor family
    carrying the given per-object signs; the interchanger on the walk's
    generator is forced to the sign difference of its endpoints."""
    w = w or walk_h()
    t = t or trivial()
    p = p or parity()
    fam_a = {a: point_functor(t, p, signs[a]) for a in range(w.n_objects)}
    fam_b = {0: walk_into_parity(w, p)}
    kk = {}
    for K in range(w.n_hcells):
        a, ap = w.hsrc[K], w.htgt[K]
        img = fam_b[0].h(K)
        kk[(0, K)] = p.parity_index[(img, img, 0, 0,
                                     (signs[a] + signs[ap]) % 2)]
    return QuasiFunctor(w, t, p, fam_a, fam_b, kk)


def test_sign_quasi_passes():
    for signs in ({0: 0, 1: 0}, {0: 0, 1: 1}, {0: 1, 1: 0}, {0: 1, 1: 1}):
        q = sign_quasi(signs)
        rep = check_quasi_functor(q)
        assert rep.passed, rep.laws_failed()


def test_sign_quasi_trivial_uu_and_unitary():
    q = sign_quasi({0: 0, 1: 1})
    assert check_quasi_functor(q, trivial_uU=True).passed
    # parity sign squares are invertible, so the families are unitary
    assert check_quasi_functor(q, unitary=True).passed


def test_wrong_interchanger_sign_detected():
    q = sign_quasi({0: 0, 1: 1})
    w, p = q.A, q.C
    f = [x for x in range(w.n_hcells) if w.hnames[x] == "a"][0]
    img = q.fB(0).h(f)
    q.kk[(0, f)] = p.parity_index[(img, img, 0, 0, 0)]
    rep = check_quasi_functor(q)
    assert not rep.passed
    assert "(1_B,K)" in rep.laws_failed()


def test_wrong_family_sign_detected():
    q = sign_quasi({0: 0, 1: 1})
    q.fam_a[1] = point_functor(q.B, q.C, 0)
    rep = check_quasi_functor(q)
    assert not rep.passed


def test_missing_interchanger_detected():
    q = sign_quasi({0: 0, 1: 1})
    f = [x for x in range(q.A.n_hcells) if q.A.hnames[x] == "a"][0]
    del q.kk[(0, f)]
    rep = check_quasi_functor(q)
    assert not rep.passed and "kk-missing" in rep.laws_failed()


def preorder_point(t, b2, rel):
    """Lax functor from the point into the matrix category with the given
    reflexive transitive relation on two elements as carrier."""
    o = b2.objects.index("2")
    R = b2.hindex[(o, o, frozenset(rel))]
    comp = {(0, 0): b2.find_square(b2.hcomp_h(R, R), R,
                                   b2.v_id(o), b2.v_id(o))}
    unit = {0: b2.find_square(b2.h_id(o), R, b2.v_id(o), b2.v_id(o))}
    assert comp[(0, 0)] is not None and unit[0] is not None
    return LaxDoubleFunctor(t, b2, {0: o}, {0: R}, {0: b2.v_id(o)},
                            None, comp, unit)


def distributive_quasi(relA, relB):
    """Quasi functor (point, point) -> matrices; the single interchanger
    exists exactly when composing the carriers one way refines the other."""
    t1, t2 = trivial(), trivial()
    b2 = bool_matrix_double_category(2)
    F = preorder_point(t1, b2, relA)
    G = preorder_point(t2, b2, relB)
    top = b2.hcomp_h(F.h(0), G.h(0))
    bottom = b2.hcomp_h(G.h(0), F.h(0))
    o = F.obj(0)
    s = b2.find_square(top, bottom, b2.v_id(o), b2.v_id(o))
    kk = {} if s is None else {(0, 0): s}
    return QuasiFunctor(t1, t2, b2, {0: G}, {0: F}, kk)


def test_distributive_quasi_identity_carrier():
    q = distributive_quasi({(0, 0), (1, 1)}, {(0, 0), (1, 1), (0, 1)})
    rep = check_quasi_functor(q, trivial_uU=True)
    assert rep.passed, rep.laws_failed()


def test_distributive_quasi_not_unitary():
    q = distributive_quasi({(0, 0), (1, 1)}, {(0, 0), (1, 1), (0, 1)})
    rep = check_quasi_functor(q, unitary=True)
    # the reflexive nonidentity carrier sits in the first family
    assert not rep.passed and "fam-a-not-unitary" in rep.laws_failed()


# -- cells between quasi functors -------------------------------------------


def test_identity_q_cells_pass():
    q = sign_quasi({0: 0, 1: 1})
    assert check_q_hor(identity_q_hor(q)).passed
    assert check_q_vert(identity_q_vert(q)).passed


def sign_q_hor(q1, q2):
    """Q-horizontal transformation between two sign quasi functors sharing
    their frame; the family deltas are forced by the compositor signs."""
    w, t, p = q1.A, q1.B, q1.C
    th_a = {}
    for a in range(w.n_objects):
        F, G = q1.fA(a), q2.fA(a)
        d = (p.parity_sign[F.compositor(0, 0)]
             + p.parity_sign[G.compositor(0, 0)]) % 2
        th_a[a] = HorTransform(F, G, {0: p.h_id(0)},
                               {0: p.sq_h_id(p.v_id(0))},
                               {0: p.parity_index[(0, 0, 0, 0, d)]})
    F, G = q1.fB(0), q2.fB(0)
    comp0 = {a: p.h_id(0) for a in range(w.n_objects)}
    comp_v = {u: p.sq_h_id(p.v_id(0)) for u in range(w.n_vcells)}
    # the walk-indexed family can carry identity deltas; the mixed law only
    # ties the point-family deltas to the interchanger signs
    delta = {K: p.sq_v_id(F.h(K)) for K in range(w.n_hcells)}
    th_b = {0: HorTransform(F, G, comp0, comp_v, delta)}
    return QHorTransform(q1, q2, th_a, th_b)


def test_sign_q_hor_passes():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    th = sign_q_hor(q1, q2)
    rep = check_q_hor(th)
    assert rep.passed, rep.laws_failed()


def test_q_hor_mixed_law_detected():
    # componentwise everything is fine, but the target interchanger signs
    # disagree with the family deltas, breaking only the mixed law
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    th = sign_q_hor(q1, q2)
    f = [x for x in range(q1.A.n_hcells) if q1.A.hnames[x] == "a"][0]
    img = q2.fB(0).h(f)
    q2.kk[(0, f)] = q1.C.parity_index[(img, img, 0, 0, 1)]
    rep = check_q_hor(th)
    assert not rep.passed
    assert set(rep.laws_failed()) == {"q-hor-1"}


def test_compose_q_cells():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    th = sign_q_hor(q1, q2)
    back = sign_q_hor(q2, q1)
    comp = vcompose_q_hor(th, back)
    assert check_q_hor(comp).passed
    with pytest.raises(ChainMismatch):
        vcompose_q_hor(th, th)
    v1 = identity_q_vert(q1)
    comp_v = vcompose_q_vert(v1, v1)
    assert check_q_vert(comp_v).passed


def identity_q_mod(q):
    top = identity_q_hor(q)
    bottom = identity_q_hor(q)
    left = identity_q_vert(q)
    right = identity_q_vert(q)
    m_a = {a: identity_modification(top.th_a[a]) for a in top.th_a}
    m_b = {b: identity_modification(top.th_b[b]) for b in top.th_b}
    from dblcheck.quasi import QModification
    return QModification(top, bottom, left, right, m_a, m_b)


def test_identity_q_mod_passes():
    q = sign_quasi({0: 0, 1: 1})
    m = identity_q_mod(q)
    rep = check_q_mod(m)
    assert rep.passed, rep.laws_failed()


# -- currying ---------------------------------------------------------------


def test_curry_roundtrip_functor():
    q = sign_quasi({0: 0, 1: 1})
    P = curry0(q)
    hom = P.cod
    rep = check_lax_functor(P)
    assert rep.passed, rep.laws_failed()
    assert curry0(q, hom) is P
    q2 = uncurry0(P)
    assert q2.fam_a[0] is q.fam_a[0] and q2.fam_a[1] is q.fam_a[1]
    assert q2.kk == q.kk and q2.uk == q.uk
    assert q2.ku == q.ku and q2.uu == q.uu
    for b in range(q.B.n_objects):
        got, want = q2.fB(b), q.fB(b)
        assert got.ob == want.ob and got.hmap == want.hmap
        assert got.comp == want.comp and got.unit == want.unit
    assert check_quasi_functor(q2).passed


def test_curry_roundtrip_distributive():
    q = distributive_quasi({(0, 0), (1, 1)}, {(0, 0), (1, 1), (0, 1)})
    P = curry0(q)
    assert check_lax_functor(P).passed
    q2 = uncurry0(P)
    assert check_quasi_functor(q2).passed


def test_curry_roundtrip_hor():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    th = sign_q_hor(q1, q2)
    hom = HomDoubleCat(q1.B, q1.C, HOP)
    tr = curry_hor(th, hom)
    rep = check_hor_transform(tr)
    assert rep.passed, rep.laws_failed()
    back = uncurry_hor(tr, hom)
    assert check_q_hor(back).passed
    for a in th.th_a:
        assert back.th_a[a].comp0 == th.th_a[a].comp0
        assert back.th_a[a].delta == th.th_a[a].delta
    assert back.th_b[0].comp0 == th.th_b[0].comp0
    assert back.th_b[0].delta == th.th_b[0].delta


def test_curry_roundtrip_vert():
    q = sign_quasi({0: 0, 1: 1})
    tv = identity_q_vert(q)
    hom = HomDoubleCat(q.B, q.C, HOP)
    tr = curry_vert(tv, hom)
    rep = check_vert_transform(tr)
    assert rep.passed, rep.laws_failed()
    back = uncurry_vert(tr, hom)
    assert check_q_vert(back).passed
    for a in tv.th_a:
        assert back.th_a[a].comp0 == tv.th_a[a].comp0


def test_curry_roundtrip_mod():
    q = sign_quasi({0: 0, 1: 1})
    m = identity_q_mod(q)
    hom = HomDoubleCat(q.B, q.C, HOP)
    mod = curry_mod(m, hom)
    back = uncurry_mod(mod, hom)
    assert check_q_mod(back).passed
    for a in m.m_a:
        for b in m.m_b:
            assert back.at(a, b) == m.at(a, b)


# -- the double category of quasi functors ----------------------------------


def test_q_hom_category_smoke():
    q1 = sign_quasi({0: 0, 1: 1})
    q2 = sign_quasi({0: 0, 1: 0}, w=q1.A, t=q1.B, p=q1.C)
    qh = q_hom_double_category(q1.A, q1.B, q1.C)
    a1 = qh.intern_quasi(q1)
    a2 = qh.intern_quasi(q2)
    assert a1 != a2
    assert qh.intern_quasi(q1) == a1
    th = sign_q_hor(q1, q2)
    f = qh.intern_q_hor(th)
    assert qh.hsrc[f] == a1 and qh.htgt[f] == a2
    g = qh.hcomp_h(qh.h_id(a1), f)
    assert qh.hsrc[g] == a1 and qh.htgt[g] == a2
    s = qh.sq_v_id(f)
    assert qh.sq_bounds[s][0] == f and qh.sq_bounds[s][1] == f
    u = qh.v_id(a1)
    s2 = qh.sq_h_id(u)
    assert qh.sq_bounds[s2][2] == u and qh.sq_bounds[s2][3] == u

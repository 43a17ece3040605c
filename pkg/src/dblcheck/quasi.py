"""Quasi functors of two variables and their transformations.

A quasi functor from a pair of double categories (A, B) to C consists of a
lax functor fam_a[X]: B -> C for every object X of A and a lax functor
fam_b[Y]: A -> C for every object Y of B, agreeing on objects, together
with interchanger squares mixing a cell of one variable with a cell of the
other:

* kk[(k, K)]   for k a 1h-cell of B and K a 1h-cell of A,
* uk[(u, K)]   for u a 1v-cell of B (vertically globular sides),
* ku[(k, U)]   for U a 1v-cell of A,
* uu[(u, U)]   horizontally globular.

Entries with a vertical identity argument are identity squares and are
derived rather than stored.  The naming convention for the accessors keeps
the B-variable cell first, matching the index order of the square dicts.

The module also provides the cells between quasi functors (horizontal and
vertical transformations and modifications, all given by a pair of
families indexed by the objects of A and B), currying to and from the hom
double category, and a lazily interned double category of quasi functors.
"""

from itertools import product as iproduct

from .core import DoubleCat, ValidationReport
from .errors import ChainMismatch, DomainMismatch
from .functor import LaxDoubleFunctor, check_lax_functor, is_unitary, _eq
from .hom import HOP, HomDoubleCat, _functor_key
from .transform import (
    LAX, OPLAX, HorTransform, Modification, VertTransform,
    check_hor_transform, check_modification, check_vert_transform,
    hcompose_modifications, identity_hor_transform, identity_modification,
    identity_vert_transform, vcompose_hor, vcompose_modifications,
    vcompose_vert)


class QuasiFunctor:
    """Two compatible families of lax functors plus interchanger squares."""

    def __init__(self, A, B, C, fam_a, fam_b, kk=None, uk=None, ku=None,
                 uu=None, name="H"):
        self.A, self.B, self.C = A, B, C
        self.fam_a = dict(fam_a)
        self.fam_b = dict(fam_b)
        self.kk = dict(kk or {})
        self.uk = dict(uk or {})
        self.ku = dict(ku or {})
        self.uu = dict(uu or {})
        self.name = name

    def fA(self, a):
        return self.fam_a[a]

    def fB(self, b):
        return self.fam_b[b]

    def obj(self, a, b):
        return self.fA(a).obj(b)

    def sq_kk(self, k, K):
        return self.kk[(k, K)]

    def sq_uk(self, u, K):
        if self.B.is_v_identity(u):
            b = self.B.vsrc[u]
            return self.C.sq_v_id(self.fB(b).h(K))
        return self.uk[(u, K)]

    def sq_ku(self, k, U):
        if self.A.is_v_identity(U):
            a = self.A.vsrc[U]
            return self.C.sq_v_id(self.fA(a).h(k))
        return self.ku[(k, U)]

    def sq_uu(self, u, U):
        if self.B.is_v_identity(u):
            b = self.B.vsrc[u]
            return self.C.sq_h_id(self.fB(b).v(U))
        if self.A.is_v_identity(U):
            a = self.A.vsrc[U]
            return self.C.sq_h_id(self.fA(a).v(u))
        return self.uu[(u, U)]

    def __repr__(self):
        return "QuasiFunctor(%s: (%s, %s) -> %s)" % (
            self.name, self.A.name, self.B.name, self.C.name)


def quasi_from_functor_pair(A, B, C, build_fa, build_fb):
    """Convenience constructor from callables producing the two families;
    interchangers must be attached afterwards."""
    fam_a = {a: build_fa(a) for a in range(A.n_objects)}
    fam_b = {b: build_fb(b) for b in range(B.n_objects)}
    return QuasiFunctor(A, B, C, fam_a, fam_b)


def _check_quasi_wellformed(rep, q):
    A, B, C = q.A, q.B, q.C
    for a in range(A.n_objects):
        sub = check_lax_functor(q.fA(a))
        rep.merge(sub, prefix="fam-a[%s]." % A.objects[a])
    for b in range(B.n_objects):
        sub = check_lax_functor(q.fB(b))
        rep.merge(sub, prefix="fam-b[%s]." % B.objects[b])
    if not rep.passed:
        return
    for a in range(A.n_objects):
        for b in range(B.n_objects):
            if q.fA(a).obj(b) != q.fB(b).obj(a):
                rep.add("agreement", a=a, b=b)
    if not rep.passed:
        return
    for k in range(B.n_hcells):
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            b, bp = B.hsrc[k], B.htgt[k]
            if (k, K) not in q.kk:
                rep.add("kk-missing", k=k, K=K)
                continue
            s = q.kk[(k, K)]
            want = (C.hcomp_h(q.fA(a).h(k), q.fB(bp).h(K)),
                    C.hcomp_h(q.fB(b).h(K), q.fA(ap).h(k)),
                    C.v_id(q.obj(a, b)), C.v_id(q.obj(ap, bp)))
            if C.sq_bounds[s] != want:
                rep.add("kk-boundary", k=k, K=K)
    for u in range(B.n_vcells):
        if B.is_v_identity(u):
            continue
        b, bt = B.vsrc[u], B.vtgt[u]
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            if (u, K) not in q.uk:
                rep.add("uk-missing", u=u, K=K)
                continue
            s = q.uk[(u, K)]
            want = (q.fB(b).h(K), q.fB(bt).h(K),
                    q.fA(a).v(u), q.fA(ap).v(u))
            if C.sq_bounds[s] != want:
                rep.add("uk-boundary", u=u, K=K)
    for k in range(B.n_hcells):
        b, bp = B.hsrc[k], B.htgt[k]
        for U in range(A.n_vcells):
            if A.is_v_identity(U):
                continue
            a, at = A.vsrc[U], A.vtgt[U]
            if (k, U) not in q.ku:
                rep.add("ku-missing", k=k, U=U)
                continue
            s = q.ku[(k, U)]
            want = (q.fA(a).h(k), q.fA(at).h(k),
                    q.fB(b).v(U), q.fB(bp).v(U))
            if C.sq_bounds[s] != want:
                rep.add("ku-boundary", k=k, U=U)
    for u in range(B.n_vcells):
        if B.is_v_identity(u):
            continue
        b, bt = B.vsrc[u], B.vtgt[u]
        for U in range(A.n_vcells):
            if A.is_v_identity(U):
                continue
            a, at = A.vsrc[U], A.vtgt[U]
            if (u, U) not in q.uu:
                rep.add("uu-missing", u=u, U=U)
                continue
            s = q.uu[(u, U)]
            want = (C.h_id(q.obj(a, b)), C.h_id(q.obj(at, bt)),
                    C.vcomp_v(q.fB(b).v(U), q.fA(at).v(u)),
                    C.vcomp_v(q.fA(a).v(u), q.fB(bt).v(U)))
            if C.sq_bounds[s] != want:
                rep.add("uu-boundary", u=u, U=U)


def check_quasi_functor(q, trivial_uU=False, unitary=False,
                        derive_unit_laws=False):
    """Check the quasi functor laws exhaustively.

    With trivial_uU, additionally require every mixed vertical interchanger
    to be an identity square; with unitary, require both families to be
    unitary lax functors.  With derive_unit_laws, the two unit coherence
    laws on horizontal interchangers are not evaluated directly; they are
    granted whenever the interchanger at an identity 1-cell is vertically
    invertible, which makes them consequences of the composition laws.
    """
    rep = ValidationReport()
    _check_quasi_wellformed(rep, q)
    if not rep.passed:
        return rep
    A, B, C = q.A, q.B, q.C
    vid = C.sq_v_id
    hid = C.sq_h_id

    # unit coherence in the B-variable: ((1_B, K)) and ((1_B, U))
    for b in range(B.n_objects):
        one = B.h_id(b)
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            if derive_unit_laws:
                if C.vertical_inverse(q.sq_kk(one, K)) is None:
                    rep.add("(1_B,K)", b=b, K=K, derived=True)
                continue
            _eq(rep, "(1_B,K)",
                lambda b=b, K=K, a=a, one=one: C.vcomp_sq(
                    C.hcomp_sq(q.fA(a).unitor(b), vid(q.fB(b).h(K))),
                    q.sq_kk(one, K)),
                lambda b=b, K=K, ap=ap: C.hcomp_sq(
                    vid(q.fB(b).h(K)), q.fA(ap).unitor(b)),
                b=b, K=K)
        for U in range(A.n_vcells):
            a, at = A.vsrc[U], A.vtgt[U]
            _eq(rep, "(1_B,U)",
                lambda b=b, U=U, a=a, one=one: C.vcomp_sq(
                    q.fA(a).unitor(b), q.sq_ku(one, U)),
                lambda b=b, U=U, at=at: C.vcomp_sq(
                    hid(q.fB(b).v(U)), q.fA(at).unitor(b)),
                b=b, U=U)
    # unit coherence in the A-variable: ((k, 1_A)) and ((u, 1_A))
    for a in range(A.n_objects):
        one = A.h_id(a)
        for k in range(B.n_hcells):
            b, bp = B.hsrc[k], B.htgt[k]
            if derive_unit_laws:
                if C.vertical_inverse(q.sq_kk(k, one)) is None:
                    rep.add("(k,1_A)", a=a, k=k, derived=True)
                continue
            _eq(rep, "(k,1_A)",
                lambda a=a, k=k, b=b: C.hcomp_sq(
                    q.fB(b).unitor(a), vid(q.fA(a).h(k))),
                lambda a=a, k=k, bp=bp, one=one: C.vcomp_sq(
                    C.hcomp_sq(vid(q.fA(a).h(k)), q.fB(bp).unitor(a)),
                    q.sq_kk(k, one)),
                a=a, k=k)
        for u in range(B.n_vcells):
            b, bt = B.vsrc[u], B.vtgt[u]
            _eq(rep, "(u,1_A)",
                lambda a=a, u=u, bt=bt: C.vcomp_sq(
                    hid(q.fA(a).v(u)), q.fB(bt).unitor(a)),
                lambda a=a, u=u, b=b, one=one: C.vcomp_sq(
                    q.fB(b).unitor(a), q.sq_uk(u, one)),
                a=a, u=u)
    # vertical identity arguments collapse to identity squares
    for K in range(A.n_hcells):
        for b in range(B.n_objects):
            _eq(rep, "(1^B,K)",
                lambda b=b, K=K: q.sq_uk(B.v_id(b), K),
                lambda b=b, K=K: vid(q.fB(b).h(K)), b=b, K=K)
    for k in range(B.n_hcells):
        for a in range(A.n_objects):
            _eq(rep, "(k,1^A)",
                lambda a=a, k=k: q.sq_ku(k, A.v_id(a)),
                lambda a=a, k=k: vid(q.fA(a).h(k)), a=a, k=k)
    for U in range(A.n_vcells):
        for b in range(B.n_objects):
            _eq(rep, "(1^B,U)",
                lambda b=b, U=U: q.sq_uu(B.v_id(b), U),
                lambda b=b, U=U: hid(q.fB(b).v(U)), b=b, U=U)
    for u in range(B.n_vcells):
        for a in range(A.n_objects):
            _eq(rep, "(u,1^A)",
                lambda a=a, u=u: q.sq_uu(u, A.v_id(a)),
                lambda a=a, u=u: hid(q.fA(a).v(u)), a=a, u=u)
    # composite horizontal arguments: ((k'k, K)) and ((k, K'K))
    for k in range(B.n_hcells):
        for kp in range(B.n_hcells):
            if B.htgt[k] != B.hsrc[kp]:
                continue
            kc = B.hcomp_h(k, kp)
            b, bpp = B.hsrc[k], B.htgt[kp]
            bp = B.htgt[k]
            for K in range(A.n_hcells):
                a, ap = A.hsrc[K], A.htgt[K]
                _eq(rep, "(k'k,K)",
                    lambda k=k, kp=kp, K=K, a=a, ap=ap, b=b, bp=bp: C.vcomp_sq_many([
                        C.hcomp_sq(vid(q.fA(a).h(k)), q.sq_kk(kp, K)),
                        C.hcomp_sq(q.sq_kk(k, K), vid(q.fA(ap).h(kp))),
                        C.hcomp_sq(vid(q.fB(b).h(K)),
                                   q.fA(ap).compositor(k, kp))]),
                    lambda k=k, kp=kp, kc=kc, K=K, a=a, bpp=bpp: C.vcomp_sq(
                        C.hcomp_sq(q.fA(a).compositor(k, kp),
                                   vid(q.fB(bpp).h(K))),
                        q.sq_kk(kc, K)),
                    k=k, kp=kp, K=K)
    for K in range(A.n_hcells):
        for Kp in range(A.n_hcells):
            if A.htgt[K] != A.hsrc[Kp]:
                continue
            Kc = A.hcomp_h(K, Kp)
            a, app = A.hsrc[K], A.htgt[Kp]
            ap = A.htgt[K]
            for k in range(B.n_hcells):
                b, bp = B.hsrc[k], B.htgt[k]
                _eq(rep, "(k,K'K)",
                    lambda k=k, K=K, Kp=Kp, Kc=Kc, a=a, bp=bp: C.vcomp_sq(
                        C.hcomp_sq(vid(q.fA(a).h(k)),
                                   q.fB(bp).compositor(K, Kp)),
                        q.sq_kk(k, Kc)),
                    lambda k=k, K=K, Kp=Kp, a=a, ap=ap, app=app, b=b, bp=bp:
                        C.vcomp_sq_many([
                            C.hcomp_sq(q.sq_kk(k, K), vid(q.fB(bp).h(Kp))),
                            C.hcomp_sq(vid(q.fB(b).h(K)), q.sq_kk(k, Kp)),
                            C.hcomp_sq(q.fB(b).compositor(K, Kp),
                                       vid(q.fA(app).h(k)))]),
                    k=k, K=K, Kp=Kp)
            for u in range(B.n_vcells):
                b, bt = B.vsrc[u], B.vtgt[u]
                _eq(rep, "(u,K'K)",
                    lambda u=u, K=K, Kp=Kp, Kc=Kc, b=b: C.vcomp_sq(
                        q.fB(b).compositor(K, Kp), q.sq_uk(u, Kc)),
                    lambda u=u, K=K, Kp=Kp, bt=bt: C.vcomp_sq(
                        C.hcomp_sq(q.sq_uk(u, K), q.sq_uk(u, Kp)),
                        q.fB(bt).compositor(K, Kp)),
                    u=u, K=K, Kp=Kp)
    for k in range(B.n_hcells):
        for kp in range(B.n_hcells):
            if B.htgt[k] != B.hsrc[kp]:
                continue
            kc = B.hcomp_h(k, kp)
            for U in range(A.n_vcells):
                a, at = A.vsrc[U], A.vtgt[U]
                _eq(rep, "(k'k,U)",
                    lambda k=k, kp=kp, U=U, at=at: C.vcomp_sq(
                        C.hcomp_sq(q.sq_ku(k, U), q.sq_ku(kp, U)),
                        q.fA(at).compositor(k, kp)),
                    lambda k=k, kp=kp, kc=kc, U=U, a=a: C.vcomp_sq(
                        q.fA(a).compositor(k, kp), q.sq_ku(kc, U)),
                    k=k, kp=kp, U=U)
    # composite vertical arguments
    for u in range(B.n_vcells):
        for up in range(B.n_vcells):
            if B.vtgt[u] != B.vsrc[up]:
                continue
            uc = B.vcomp_v(u, up)
            for K in range(A.n_hcells):
                _eq(rep, "(u/u',K)",
                    lambda u=u, up=up, uc=uc, K=K: q.sq_uk(uc, K),
                    lambda u=u, up=up, K=K: C.vcomp_sq(
                        q.sq_uk(u, K), q.sq_uk(up, K)),
                    u=u, up=up, K=K)
            for U in range(A.n_vcells):
                a, at = A.vsrc[U], A.vtgt[U]
                _eq(rep, "(u/u',U)",
                    lambda u=u, up=up, uc=uc, U=U: q.sq_uu(uc, U),
                    lambda u=u, up=up, U=U, a=a, at=at: C.hcomp_sq(
                        C.vcomp_sq(q.sq_uu(u, U),
                                   hid(q.fA(at).v(up))),
                        C.vcomp_sq(hid(q.fA(a).v(u)), q.sq_uu(up, U))),
                    u=u, up=up, U=U)
    for U in range(A.n_vcells):
        for Up in range(A.n_vcells):
            if A.vtgt[U] != A.vsrc[Up]:
                continue
            Uc = A.vcomp_v(U, Up)
            for k in range(B.n_hcells):
                _eq(rep, "(k,U/U')",
                    lambda k=k, U=U, Up=Up, Uc=Uc: q.sq_ku(k, Uc),
                    lambda k=k, U=U, Up=Up: C.vcomp_sq(
                        q.sq_ku(k, U), q.sq_ku(k, Up)),
                    k=k, U=U, Up=Up)
            for u in range(B.n_vcells):
                b, bt = B.vsrc[u], B.vtgt[u]
                _eq(rep, "(u,U/U')",
                    lambda u=u, U=U, Up=Up, Uc=Uc: q.sq_uu(u, Uc),
                    lambda u=u, U=U, Up=Up, b=b, bt=bt: C.hcomp_sq(
                        C.vcomp_sq(hid(q.fB(b).v(U)), q.sq_uu(u, Up)),
                        C.vcomp_sq(q.sq_uu(u, U), hid(q.fB(bt).v(Up)))),
                    u=u, U=U, Up=Up)
    # naturality in either variable
    for om in B.iter_squares():
        k, l = B.sq_top(om), B.sq_bottom(om)
        u, v = B.sq_left(om), B.sq_right(om)
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            _eq(rep, "(k,K)-l-nat",
                lambda om=om, k=k, l=l, u=u, K=K, ap=ap: C.vcomp_sq(
                    q.sq_kk(k, K),
                    C.hcomp_sq(q.sq_uk(u, K), q.fA(ap).sq(om))),
                lambda om=om, l=l, v=v, K=K, a=a: C.vcomp_sq(
                    C.hcomp_sq(q.fA(a).sq(om), q.sq_uk(v, K)),
                    q.sq_kk(l, K)),
                square=om, K=K)
        for U in range(A.n_vcells):
            _eq(rep, "(u,U)-l-nat",
                lambda om=om, k=k, l=l, u=u, v=v, U=U: C.hcomp_sq(
                    q.sq_uu(u, U),
                    C.vcomp_sq(q.fA(A.vsrc[U]).sq(om), q.sq_ku(l, U))),
                lambda om=om, k=k, v=v, U=U: C.hcomp_sq(
                    C.vcomp_sq(q.sq_ku(k, U), q.fA(A.vtgt[U]).sq(om)),
                    q.sq_uu(v, U)),
                square=om, U=U)
    for ze in A.iter_squares():
        K, L = A.sq_top(ze), A.sq_bottom(ze)
        U, V = A.sq_left(ze), A.sq_right(ze)
        for k in range(B.n_hcells):
            b, bp = B.hsrc[k], B.htgt[k]
            _eq(rep, "(k,K)-r-nat",
                lambda ze=ze, k=k, K=K, V=V, b=b: C.vcomp_sq(
                    q.sq_kk(k, K),
                    C.hcomp_sq(q.fB(b).sq(ze), q.sq_ku(k, V))),
                lambda ze=ze, k=k, L=L, U=U, bp=bp: C.vcomp_sq(
                    C.hcomp_sq(q.sq_ku(k, U), q.fB(bp).sq(ze)),
                    q.sq_kk(k, L)),
                square=ze, k=k)
        for u in range(B.n_vcells):
            b, bt = B.vsrc[u], B.vtgt[u]
            _eq(rep, "(u,U)-r-nat",
                lambda ze=ze, u=u, K=K, U=U, bt=bt: C.hcomp_sq(
                    q.sq_uu(u, U),
                    C.vcomp_sq(q.sq_uk(u, K), q.fB(bt).sq(ze))),
                lambda ze=ze, u=u, L=L, V=V, b=b: C.hcomp_sq(
                    C.vcomp_sq(q.fB(b).sq(ze), q.sq_uk(u, L)),
                    q.sq_uu(u, V)),
                square=ze, u=u)
    if trivial_uU:
        for u in range(B.n_vcells):
            for U in range(A.n_vcells):
                s = q.sq_uu(u, U)
                if C.sq_left(s) != C.sq_right(s) or s != hid(C.sq_left(s)):
                    rep.add("uu-nontrivial", u=u, U=U)
    if unitary:
        for a in range(A.n_objects):
            if not is_unitary(q.fA(a)):
                rep.add("fam-a-not-unitary", a=a)
        for b in range(B.n_objects):
            if not is_unitary(q.fB(b)):
                rep.add("fam-b-not-unitary", b=b)
    return rep


# -- cells between quasi functors -------------------------------------------


class QHorTransform:
    """Horizontal transformation of quasi functors: a family of horizontal
    transformations in each variable, agreeing on components."""

    def __init__(self, q1, q2, th_a, th_b, name="theta"):
        self.q1, self.q2 = q1, q2
        self.th_a = dict(th_a)
        self.th_b = dict(th_b)
        self.name = name

    def at(self, a, b):
        return self.th_a[a].at(b)


class QVertTransform:
    """Vertical transformation of quasi functors."""

    def __init__(self, q1, q2, th_a, th_b, name="theta0"):
        self.q1, self.q2 = q1, q2
        self.th_a = dict(th_a)
        self.th_b = dict(th_b)
        self.name = name

    def at(self, a, b):
        return self.th_a[a].at(b)


class QModification:
    """Modification of quasi functor transformations."""

    def __init__(self, top, bottom, left, right, m_a, m_b, name="tau"):
        self.top, self.bottom = top, bottom
        self.left, self.right = left, right
        self.m_a = dict(m_a)
        self.m_b = dict(m_b)
        self.name = name

    def at(self, a, b):
        return self.m_a[a].at(b)


def check_q_hor(t):
    """Componentwise transformation laws plus the four mixed coherence laws."""
    rep = ValidationReport()
    q1, q2 = t.q1, t.q2
    A, B, C = q1.A, q1.B, q1.C
    for a in range(A.n_objects):
        rep.merge(check_hor_transform(t.th_a[a]), prefix="th-a[%s]." % A.objects[a])
    for b in range(B.n_objects):
        rep.merge(check_hor_transform(t.th_b[b]), prefix="th-b[%s]." % B.objects[b])
    if not rep.passed:
        return rep
    for a in range(A.n_objects):
        for b in range(B.n_objects):
            if t.th_a[a].at(b) != t.th_b[b].at(a):
                rep.add("q-agreement", a=a, b=b)
    if not rep.passed:
        return rep
    vid = C.sq_v_id
    for k in range(B.n_hcells):
        b, bp = B.hsrc[k], B.htgt[k]
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            _eq(rep, "q-hor-1",
                lambda k=k, K=K, a=a, ap=ap, b=b, bp=bp: C.vcomp_sq_many([
                    C.hcomp_sq(vid(q1.fA(a).h(k)), t.th_b[bp].delta_at(K)),
                    C.hcomp_sq(t.th_a[a].delta_at(k), vid(q2.fB(bp).h(K))),
                    C.hcomp_sq(vid(t.at(a, b)), q2.sq_kk(k, K))]),
                lambda k=k, K=K, a=a, ap=ap, b=b, bp=bp: C.vcomp_sq_many([
                    C.hcomp_sq(q1.sq_kk(k, K), vid(t.at(ap, bp))),
                    C.hcomp_sq(vid(q1.fB(b).h(K)), t.th_a[ap].delta_at(k)),
                    C.hcomp_sq(t.th_b[b].delta_at(K), vid(q2.fA(ap).h(k)))]),
                k=k, K=K)
    for u in range(B.n_vcells):
        b, bt = B.vsrc[u], B.vtgt[u]
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            _eq(rep, "q-hor-2",
                lambda u=u, K=K, ap=ap, bt=bt: C.vcomp_sq(
                    C.hcomp_sq(q1.sq_uk(u, K), t.th_a[ap].sq_v(u)),
                    t.th_b[bt].delta_at(K)),
                lambda u=u, K=K, a=a, b=b: C.vcomp_sq(
                    t.th_b[b].delta_at(K),
                    C.hcomp_sq(t.th_a[a].sq_v(u), q2.sq_uk(u, K))),
                u=u, K=K)
    for k in range(B.n_hcells):
        b, bp = B.hsrc[k], B.htgt[k]
        for U in range(A.n_vcells):
            a, at = A.vsrc[U], A.vtgt[U]
            _eq(rep, "q-hor-3",
                lambda k=k, U=U, at=at, bp=bp: C.vcomp_sq(
                    C.hcomp_sq(q1.sq_ku(k, U), t.th_b[bp].sq_v(U)),
                    t.th_a[at].delta_at(k)),
                lambda k=k, U=U, a=a, b=b: C.vcomp_sq(
                    t.th_a[a].delta_at(k),
                    C.hcomp_sq(t.th_b[b].sq_v(U), q2.sq_ku(k, U))),
                k=k, U=U)
    for u in range(B.n_vcells):
        b, bt = B.vsrc[u], B.vtgt[u]
        for U in range(A.n_vcells):
            a, at = A.vsrc[U], A.vtgt[U]
            _eq(rep, "q-hor-4",
                lambda u=u, U=U, a=a, bt=bt: C.hcomp_sq(
                    q1.sq_uu(u, U),
                    C.vcomp_sq(t.th_a[a].sq_v(u), t.th_b[bt].sq_v(U))),
                lambda u=u, U=U, at=at, b=b: C.hcomp_sq(
                    C.vcomp_sq(t.th_b[b].sq_v(U), t.th_a[at].sq_v(u)),
                    q2.sq_uu(u, U)),
                u=u, U=U)
    return rep


def check_q_vert(t):
    """Componentwise vertical transformation laws plus mixed coherence."""
    rep = ValidationReport()
    q1, q2 = t.q1, t.q2
    A, B, C = q1.A, q1.B, q1.C
    for a in range(A.n_objects):
        rep.merge(check_vert_transform(t.th_a[a]), prefix="th-a[%s]." % A.objects[a])
    for b in range(B.n_objects):
        rep.merge(check_vert_transform(t.th_b[b]), prefix="th-b[%s]." % B.objects[b])
    if not rep.passed:
        return rep
    for a in range(A.n_objects):
        for b in range(B.n_objects):
            if t.th_a[a].at(b) != t.th_b[b].at(a):
                rep.add("q-agreement", a=a, b=b)
    if not rep.passed:
        return rep
    hid = C.sq_h_id
    for u in range(B.n_vcells):
        b, bt = B.vsrc[u], B.vtgt[u]
        for U in range(A.n_vcells):
            a, at = A.vsrc[U], A.vtgt[U]
            _eq(rep, "q-vert-1",
                lambda u=u, U=U, a=a, b=b, at=at, bt=bt: C.hcomp_sq_many([
                    C.vcomp_sq(hid(t.at(a, b)), q2.sq_uu(u, U)),
                    C.vcomp_sq(t.th_a[a].sq_v(u), hid(q2.fB(bt).v(U))),
                    C.vcomp_sq(hid(q1.fA(a).v(u)), t.th_b[bt].sq_v(U))]),
                lambda u=u, U=U, a=a, b=b, at=at, bt=bt: C.hcomp_sq_many([
                    C.vcomp_sq(t.th_b[b].sq_v(U), hid(q2.fA(at).v(u))),
                    C.vcomp_sq(hid(q1.fB(b).v(U)), t.th_a[at].sq_v(u)),
                    C.vcomp_sq(q1.sq_uu(u, U), hid(t.at(at, bt)))]),
                u=u, U=U)
    for u in range(B.n_vcells):
        b, bt = B.vsrc[u], B.vtgt[u]
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            _eq(rep, "q-vert-2",
                lambda u=u, K=K, a=a, bt=bt: C.hcomp_sq(
                    t.th_a[a].sq_v(u),
                    C.vcomp_sq(q1.sq_uk(u, K), t.th_b[bt].sq_h(K))),
                lambda u=u, K=K, ap=ap, b=b: C.hcomp_sq(
                    C.vcomp_sq(t.th_b[b].sq_h(K), q2.sq_uk(u, K)),
                    t.th_a[ap].sq_v(u)),
                u=u, K=K)
    for k in range(B.n_hcells):
        b, bp = B.hsrc[k], B.htgt[k]
        for U in range(A.n_vcells):
            a, at = A.vsrc[U], A.vtgt[U]
            _eq(rep, "q-vert-3",
                lambda k=k, U=U, b=b, at=at: C.hcomp_sq(
                    t.th_b[b].sq_v(U),
                    C.vcomp_sq(q1.sq_ku(k, U), t.th_a[at].sq_h(k))),
                lambda k=k, U=U, a=a, bp=bp: C.hcomp_sq(
                    C.vcomp_sq(t.th_a[a].sq_h(k), q2.sq_ku(k, U)),
                    t.th_b[bp].sq_v(U)),
                k=k, U=U)
    for k in range(B.n_hcells):
        b, bp = B.hsrc[k], B.htgt[k]
        for K in range(A.n_hcells):
            a, ap = A.hsrc[K], A.htgt[K]
            _eq(rep, "q-vert-4",
                lambda k=k, K=K, b=b, ap=ap: C.vcomp_sq(
                    q1.sq_kk(k, K),
                    C.hcomp_sq(t.th_b[b].sq_h(K), t.th_a[ap].sq_h(k))),
                lambda k=k, K=K, a=a, bp=bp: C.vcomp_sq(
                    C.hcomp_sq(t.th_a[a].sq_h(k), t.th_b[bp].sq_h(K)),
                    q2.sq_kk(k, K)),
                k=k, K=K)
    return rep


def check_q_mod(m):
    """Componentwise modification laws; agreement of the two families."""
    rep = ValidationReport()
    A = m.top.q1.A
    B = m.top.q1.B
    for a in range(A.n_objects):
        rep.merge(check_modification(m.m_a[a]), prefix="m-a[%s]." % A.objects[a])
    for b in range(B.n_objects):
        rep.merge(check_modification(m.m_b[b]), prefix="m-b[%s]." % B.objects[b])
    if not rep.passed:
        return rep
    for a in range(A.n_objects):
        for b in range(B.n_objects):
            if m.m_a[a].at(b) != m.m_b[b].at(a):
                rep.add("q-agreement", a=a, b=b)
    return rep


def vcompose_q_hor(t1, t2):
    """Componentwise vertical composition of q-horizontal transformations."""
    if t1.q2 is not t2.q1:
        raise ChainMismatch("q-transformation chain does not match")
    th_a = {a: vcompose_hor(t1.th_a[a], t2.th_a[a]) for a in t1.th_a}
    th_b = {b: vcompose_hor(t1.th_b[b], t2.th_b[b]) for b in t1.th_b}
    return QHorTransform(t1.q1, t2.q2, th_a, th_b,
                         name="%s/%s" % (t1.name, t2.name))


def vcompose_q_vert(t1, t2):
    """Componentwise composition of q-vertical transformations."""
    if t1.q2 is not t2.q1:
        raise ChainMismatch("q-transformation chain does not match")
    th_a = {a: vcompose_vert(t1.th_a[a], t2.th_a[a]) for a in t1.th_a}
    th_b = {b: vcompose_vert(t1.th_b[b], t2.th_b[b]) for b in t1.th_b}
    return QVertTransform(t1.q1, t2.q2, th_a, th_b,
                          name="%s/%s" % (t1.name, t2.name))


def hcompose_q_mod(m1, m2):
    m_a = {a: hcompose_modifications(m1.m_a[a], m2.m_a[a]) for a in m1.m_a}
    m_b = {b: hcompose_modifications(m1.m_b[b], m2.m_b[b]) for b in m1.m_b}
    return QModification(vcompose_q_hor(m1.top, m2.top),
                         vcompose_q_hor(m1.bottom, m2.bottom),
                         m1.left, m2.right, m_a, m_b)


def vcompose_q_mod(m1, m2):
    m_a = {a: vcompose_modifications(m1.m_a[a], m2.m_a[a]) for a in m1.m_a}
    m_b = {b: vcompose_modifications(m1.m_b[b], m2.m_b[b]) for b in m1.m_b}
    return QModification(m1.top, m2.bottom,
                         vcompose_q_vert(m1.left, m2.left),
                         vcompose_q_vert(m1.right, m2.right), m_a, m_b)


def identity_q_hor(q):
    th_a = {a: identity_hor_transform(q.fA(a)) for a in range(q.A.n_objects)}
    th_b = {b: identity_hor_transform(q.fB(b)) for b in range(q.B.n_objects)}
    return QHorTransform(q, q, th_a, th_b, name="id(%s)" % q.name)


def identity_q_vert(q):
    th_a = {a: identity_vert_transform(q.fA(a)) for a in range(q.A.n_objects)}
    th_b = {b: identity_vert_transform(q.fB(b)) for b in range(q.B.n_objects)}
    return QVertTransform(q, q, th_a, th_b, name="id(%s)" % q.name)


# -- currying ---------------------------------------------------------------


def curry0(q, hom=None):
    """The lax functor A -> hom(B, C) corresponding to a quasi functor.

    Curried functors are cached per hom so that repeated calls hand back
    the same object; transformation and modification corners are compared
    by identity.
    """
    A, B, C = q.A, q.B, q.C
    if hom is None:
        hom = HomDoubleCat(B, C, HOP)
    if not hasattr(hom, "_curried"):
        hom._curried = {}
    if id(q) in hom._curried:
        return hom._curried[id(q)]
    ob, hmap, vmap, sqmap = {}, {}, {}, {}
    # local transform objects keep the corners anchored to this quasi
    # functor's own family objects; interning dedupes only the cell ids
    hts = {K: _curry_hcell(q, K) for K in range(A.n_hcells)}
    vts = {U: _curry_vcell(q, U) for U in range(A.n_vcells)}
    for a in range(A.n_objects):
        ob[a] = hom.intern_functor(q.fA(a))
    for K in range(A.n_hcells):
        hmap[K] = hom.intern_hor_transform(hts[K])
    for U in range(A.n_vcells):
        vmap[U] = hom.intern_vert_transform(vts[U])
    for ze in A.iter_squares():
        sqmap[ze] = hom.intern_modification(_curry_square(q, ze, hts, vts))
    comp, unit = {}, {}
    for K in range(A.n_hcells):
        for Kp in range(A.n_hcells):
            if A.htgt[K] != A.hsrc[Kp]:
                continue
            comp[(K, Kp)] = hom.intern_modification(
                _curry_compositor(q, K, Kp, hts))
    for a in range(A.n_objects):
        unit[a] = hom.intern_modification(_curry_unitor(q, a, hts))
    P = LaxDoubleFunctor(A, hom, ob, hmap, vmap, sqmap, comp, unit,
                         name="curry(%s)" % q.name)
    hom._curried[id(q)] = P
    return P


def _curry_hcell(q, K):
    A, B = q.A, q.B
    a, ap = A.hsrc[K], A.htgt[K]
    comp0 = {b: q.fB(b).h(K) for b in range(B.n_objects)}
    comp_v = {u: q.sq_uk(u, K) for u in range(B.n_vcells)}
    delta = {k: q.sq_kk(k, K) for k in range(B.n_hcells)}
    return HorTransform(q.fA(a), q.fA(ap), comp0, comp_v, delta, OPLAX,
                        name="(-,%s)" % A.hnames[K])


def _curry_vcell(q, U):
    A, B = q.A, q.B
    a, at = A.vsrc[U], A.vtgt[U]
    comp0 = {b: q.fB(b).v(U) for b in range(B.n_objects)}
    comp_h = {k: q.sq_ku(k, U) for k in range(B.n_hcells)}
    comp_v = {u: q.sq_uu(u, U) for u in range(B.n_vcells)}
    return VertTransform(q.fA(a), q.fA(at), comp0, comp_h, comp_v, LAX,
                         name="(-,%s)" % A.vnames[U])


def _curry_square(q, ze, hts, vts):
    A, B = q.A, q.B
    K, L = A.sq_top(ze), A.sq_bottom(ze)
    U, V = A.sq_left(ze), A.sq_right(ze)
    comp = {b: q.fB(b).sq(ze) for b in range(B.n_objects)}
    return Modification(hts[K], hts[L], vts[U], vts[V], comp,
                        name="(-,%s)" % A.sq_names[ze])


def _curry_compositor(q, K, Kp, hts):
    A, B = q.A, q.B
    a, app = A.hsrc[K], A.htgt[Kp]
    top = vcompose_hor(hts[K], hts[Kp])
    bottom = hts[A.hcomp_h(K, Kp)]
    comp = {b: q.fB(b).compositor(K, Kp) for b in range(B.n_objects)}
    return Modification(top, bottom,
                        identity_vert_transform(q.fA(a)),
                        identity_vert_transform(q.fA(app)), comp)


def _curry_unitor(q, a, hts):
    B = q.B
    top = identity_hor_transform(q.fA(a))
    bottom = hts[q.A.h_id(a)]
    comp = {b: q.fB(b).unitor(a) for b in range(B.n_objects)}
    return Modification(top, bottom,
                        identity_vert_transform(q.fA(a)),
                        identity_vert_transform(q.fA(a)), comp)


def uncurry0(P):
    """The quasi functor corresponding to a lax functor into a hom."""
    hom = P.cod
    if not isinstance(hom, HomDoubleCat):
        raise DomainMismatch("uncurry0 needs a hom double category codomain")
    A = P.dom
    B, C = hom.B, hom.C
    fam_a = {a: hom.obj_payload[P.obj(a)] for a in range(A.n_objects)}
    fam_b = {}
    for b in range(B.n_objects):
        ob = {a: fam_a[a].obj(b) for a in range(A.n_objects)}
        hmap = {K: hom.h_payload[P.h(K)].at(b) for K in range(A.n_hcells)}
        vmap = {U: hom.v_payload[P.v(U)].at(b) for U in range(A.n_vcells)}
        sqmap = {ze: hom.sq_payload[P.sq(ze)].at(b) for ze in A.iter_squares()}
        comp = {}
        for K in range(A.n_hcells):
            for Kp in range(A.n_hcells):
                if A.htgt[K] == A.hsrc[Kp]:
                    comp[(K, Kp)] = hom.sq_payload[P.compositor(K, Kp)].at(b)
        unit = {a: hom.sq_payload[P.unitor(a)].at(b)
                for a in range(A.n_objects)}
        fam_b[b] = LaxDoubleFunctor(A, C, ob, hmap, vmap, sqmap, comp, unit,
                                    name="(%s,-)" % B.objects[b])
    kk, uk, ku, uu = {}, {}, {}, {}
    for K in range(A.n_hcells):
        tr = hom.h_payload[P.h(K)]
        for k in range(B.n_hcells):
            kk[(k, K)] = tr.delta_at(k)
        for u in range(B.n_vcells):
            if not B.is_v_identity(u):
                uk[(u, K)] = tr.sq_v(u)
    for U in range(A.n_vcells):
        tr = hom.v_payload[P.v(U)]
        if A.is_v_identity(U):
            continue
        for k in range(B.n_hcells):
            ku[(k, U)] = tr.sq_h(k)
        for u in range(B.n_vcells):
            if not B.is_v_identity(u):
                uu[(u, U)] = tr.sq_v(u)
    return QuasiFunctor(A, B, C, fam_a, fam_b, kk, uk, ku, uu,
                        name="uncurry(%s)" % P.name)


def curry_hor(t, hom):
    """The horizontal transformation between curried functors."""
    A, B = t.q1.A, t.q1.B
    P1, P2 = curry0(t.q1, hom), curry0(t.q2, hom)
    comp0 = {a: hom.intern_hor_transform(t.th_a[a])
             for a in range(A.n_objects)}
    comp_v, delta = {}, {}
    for U in range(A.n_vcells):
        a, at = A.vsrc[U], A.vtgt[U]
        comp = {b: t.th_b[b].sq_v(U) for b in range(B.n_objects)}
        comp_v[U] = hom.intern_modification(Modification(
            t.th_a[a], t.th_a[at],
            _curry_vcell(t.q1, U), _curry_vcell(t.q2, U), comp))
    for K in range(A.n_hcells):
        a, ap = A.hsrc[K], A.htgt[K]
        top = vcompose_hor(_curry_hcell(t.q1, K), t.th_a[ap])
        bottom = vcompose_hor(t.th_a[a], _curry_hcell(t.q2, K))
        comp = {b: t.th_b[b].delta_at(K) for b in range(B.n_objects)}
        delta[K] = hom.intern_modification(Modification(
            top, bottom, identity_vert_transform(t.q1.fA(a)),
            identity_vert_transform(t.q2.fA(ap)), comp))
    return HorTransform(P1, P2, comp0, comp_v, delta, OPLAX,
                        name="curry(%s)" % t.name)


def uncurry_hor(tr, hom):
    """The q-horizontal transformation from one between curried functors."""
    P1, P2 = tr.F, tr.G
    A, B = P1.dom, hom.B
    q1 = uncurry0(P1)
    q2 = uncurry0(P2)
    th_a = {a: hom.h_payload[tr.at(a)] for a in range(A.n_objects)}
    th_b = {}
    for b in range(B.n_objects):
        comp0 = {a: th_a[a].at(b) for a in range(A.n_objects)}
        comp_v = {U: hom.sq_payload[tr.sq_v(U)].at(b)
                  for U in range(A.n_vcells)}
        delta = {K: hom.sq_payload[tr.delta_at(K)].at(b)
                 for K in range(A.n_hcells)}
        th_b[b] = HorTransform(q1.fB(b), q2.fB(b), comp0, comp_v, delta,
                               OPLAX, name="(%s,-)" % B.objects[b])
    return QHorTransform(q1, q2, th_a, th_b, name="uncurry(%s)" % tr.name)


def curry_vert(t, hom):
    """The vertical transformation between curried functors."""
    A, B = t.q1.A, t.q1.B
    P1, P2 = curry0(t.q1, hom), curry0(t.q2, hom)
    comp0 = {a: hom.intern_vert_transform(t.th_a[a])
             for a in range(A.n_objects)}
    comp_h, comp_v = {}, {}
    for K in range(A.n_hcells):
        a, ap = A.hsrc[K], A.htgt[K]
        comp = {b: t.th_b[b].sq_h(K) for b in range(B.n_objects)}
        comp_h[K] = hom.intern_modification(Modification(
            _curry_hcell(t.q1, K), _curry_hcell(t.q2, K),
            t.th_a[a], t.th_a[ap], comp))
    for U in range(A.n_vcells):
        a, at = A.vsrc[U], A.vtgt[U]
        top = identity_hor_transform(t.q1.fA(a))
        bottom = identity_hor_transform(t.q2.fA(at))
        left = vcompose_vert(t.th_a[a], _curry_vcell(t.q2, U))
        right = vcompose_vert(_curry_vcell(t.q1, U), t.th_a[at])
        comp = {b: t.th_b[b].sq_v(U) for b in range(B.n_objects)}
        comp_v[U] = hom.intern_modification(Modification(
            top, bottom, left, right, comp))
    return VertTransform(P1, P2, comp0, comp_h, comp_v, LAX,
                         name="curry(%s)" % t.name)


def uncurry_vert(tr, hom):
    """The q-vertical transformation from one between curried functors."""
    P1, P2 = tr.F, tr.G
    A, B = P1.dom, hom.B
    q1 = uncurry0(P1)
    q2 = uncurry0(P2)
    th_a = {a: hom.v_payload[tr.at(a)] for a in range(A.n_objects)}
    th_b = {}
    for b in range(B.n_objects):
        comp0 = {a: th_a[a].at(b) for a in range(A.n_objects)}
        comp_h = {K: hom.sq_payload[tr.sq_h(K)].at(b)
                  for K in range(A.n_hcells)}
        comp_v = {U: hom.sq_payload[tr.sq_v(U)].at(b)
                  for U in range(A.n_vcells)}
        th_b[b] = VertTransform(q1.fB(b), q2.fB(b), comp0, comp_h, comp_v,
                                LAX, name="(%s,-)" % B.objects[b])
    return QVertTransform(q1, q2, th_a, th_b, name="uncurry(%s)" % tr.name)


def curry_mod(m, hom):
    """The modification between curried transformations."""
    A = m.top.q1.A
    top = curry_hor(m.top, hom)
    bottom = curry_hor(m.bottom, hom)
    left = curry_vert(m.left, hom)
    right = curry_vert(m.right, hom)
    comp = {a: hom.intern_modification(m.m_a[a]) for a in range(A.n_objects)}
    return Modification(top, bottom, left, right, comp,
                        name="curry(%s)" % m.name)


def uncurry_mod(mod, hom):
    """The q-modification from a modification between curried cells."""
    A, B = mod.dom, hom.B
    top = uncurry_hor(mod.top, hom)
    bottom = uncurry_hor(mod.bottom, hom)
    left = uncurry_vert(mod.left, hom)
    right = uncurry_vert(mod.right, hom)
    m_a = {a: hom.sq_payload[mod.at(a)] for a in range(A.n_objects)}
    m_b = {}
    for b in range(B.n_objects):
        comp = {a: m_a[a].at(b) for a in range(A.n_objects)}
        m_b[b] = Modification(top.th_b[b], bottom.th_b[b],
                              left.th_b[b], right.th_b[b], comp)
    return QModification(top, bottom, left, right, m_a, m_b,
                         name="uncurry(%s)" % mod.name)


# -- the double category of quasi functors ----------------------------------


def _quasi_key(q):
    A, B = q.A, q.B
    return ("quasi",
            tuple(_functor_key(q.fA(a)) for a in range(A.n_objects)),
            tuple(_functor_key(q.fB(b)) for b in range(B.n_objects)),
            tuple(sorted(q.kk.items())), tuple(sorted(q.uk.items())),
            tuple(sorted(q.ku.items())), tuple(sorted(q.uu.items())))


def _q_hor_key(t, src, tgt):
    A, B = t.q1.A, t.q1.B
    return ("q-hor", src, tgt,
            tuple(t.th_a[a].at(b) for a in range(A.n_objects)
                  for b in range(B.n_objects)),
            tuple(t.th_a[a].delta_at(k) for a in range(A.n_objects)
                  for k in range(B.n_hcells)),
            tuple(t.th_b[b].delta_at(K) for b in range(B.n_objects)
                  for K in range(A.n_hcells)),
            tuple(t.th_a[a].sq_v(u) for a in range(A.n_objects)
                  for u in range(B.n_vcells)),
            tuple(t.th_b[b].sq_v(U) for b in range(B.n_objects)
                  for U in range(A.n_vcells)))


def _q_vert_key(t, src, tgt):
    A, B = t.q1.A, t.q1.B
    return ("q-vert", src, tgt,
            tuple(t.th_a[a].at(b) for a in range(A.n_objects)
                  for b in range(B.n_objects)),
            tuple(t.th_a[a].sq_h(k) for a in range(A.n_objects)
                  for k in range(B.n_hcells)),
            tuple(t.th_b[b].sq_h(K) for b in range(B.n_objects)
                  for K in range(A.n_hcells)),
            tuple(t.th_a[a].sq_v(u) for a in range(A.n_objects)
                  for u in range(B.n_vcells)),
            tuple(t.th_b[b].sq_v(U) for b in range(B.n_objects)
                  for U in range(A.n_vcells)))


class QHomDoubleCat(DoubleCat):
    """Lazily interned double category of quasi functors (A, B) -> C."""

    def __init__(self, A, B, C, name=None):
        super().__init__(name or "qhom(%s,%s;%s)" % (A.name, B.name, C.name))
        self.A, self.B, self.C = A, B, C
        self.obj_payload = []
        self.h_payload = []
        self.v_payload = []
        self.sq_payload = []
        self._keys = {}

    def intern_quasi(self, q):
        key = _quasi_key(q)
        if key in self._keys:
            return self._keys[key]
        a = self.add_object(q.name)
        self.obj_payload.append(q)
        self._keys[key] = a
        self._intern_q_hor(identity_q_hor(q), identity_of=a)
        self._intern_q_vert(identity_q_vert(q), identity_of=a)
        return a

    def _quasi_id(self, q):
        key = _quasi_key(q)
        if key not in self._keys:
            return self.intern_quasi(q)
        return self._keys[key]

    def _intern_q_hor(self, t, identity_of=None):
        src = self._quasi_id(t.q1)
        tgt = self._quasi_id(t.q2)
        key = _q_hor_key(t, src, tgt)
        if key in self._keys:
            return self._keys[key]
        f = self.add_hcell(t.name, src, tgt, identity_of=identity_of)
        self.h_payload.append(t)
        self._keys[key] = f
        return f

    def _intern_q_vert(self, t, identity_of=None):
        src = self._quasi_id(t.q1)
        tgt = self._quasi_id(t.q2)
        key = _q_vert_key(t, src, tgt)
        if key in self._keys:
            return self._keys[key]
        u = self.add_vcell(t.name, src, tgt, identity_of=identity_of)
        self.v_payload.append(t)
        self._keys[key] = u
        return u

    def intern_q_hor(self, t):
        return self._intern_q_hor(t)

    def intern_q_vert(self, t):
        return self._intern_q_vert(t)

    def intern_q_mod(self, m):
        top = self._intern_q_hor(m.top)
        bottom = self._intern_q_hor(m.bottom)
        left = self._intern_q_vert(m.left)
        right = self._intern_q_vert(m.right)
        A, B = self.A, self.B
        key = ("q-mod", top, bottom, left, right,
               tuple(m.at(a, b) for a in range(A.n_objects)
                     for b in range(B.n_objects)))
        if key in self._keys:
            return self._keys[key]
        s = self.add_square(m.name, top, bottom, left, right)
        self.sq_payload.append(m)
        self._keys[key] = s
        return s

    def hcomp_h(self, f, g):
        if (f, g) not in self._hh:
            self._hh[(f, g)] = self._intern_q_hor(
                vcompose_q_hor(self.h_payload[f], self.h_payload[g]))
        return self._hh[(f, g)]

    def vcomp_v(self, u, w):
        if (u, w) not in self._vv:
            self._vv[(u, w)] = self._intern_q_vert(
                vcompose_q_vert(self.v_payload[u], self.v_payload[w]))
        return self._vv[(u, w)]

    def hcomp_sq(self, s1, s2):
        if (s1, s2) not in self._hs:
            self._hs[(s1, s2)] = self.intern_q_mod(
                hcompose_q_mod(self.sq_payload[s1], self.sq_payload[s2]))
        return self._hs[(s1, s2)]

    def vcomp_sq(self, s1, s2):
        if (s1, s2) not in self._vs:
            self._vs[(s1, s2)] = self.intern_q_mod(
                vcompose_q_mod(self.sq_payload[s1], self.sq_payload[s2]))
        return self._vs[(s1, s2)]

    def sq_v_id(self, f):
        if f not in self._sqvid:
            t = self.h_payload[f]
            m_a = {a: identity_modification(t.th_a[a]) for a in t.th_a}
            m_b = {b: identity_modification(t.th_b[b]) for b in t.th_b}
            self._sqvid[f] = self.intern_q_mod(QModification(
                t, t, identity_q_vert(t.q1), identity_q_vert(t.q2),
                m_a, m_b, name="Id_%s" % t.name))
        return self._sqvid[f]

    def sq_h_id(self, u):
        if u not in self._sqhid:
            t = self.v_payload[u]
            m_a = {a: _vert_identity_square(t.th_a[a]) for a in t.th_a}
            m_b = {b: _vert_identity_square(t.th_b[b]) for b in t.th_b}
            self._sqhid[u] = self.intern_q_mod(QModification(
                identity_q_hor(t.q1), identity_q_hor(t.q2), t, t,
                m_a, m_b, name="Id^%s" % t.name))
        return self._sqhid[u]


def _vert_identity_square(vt):
    """The horizontal identity square on a vertical transformation, as a
    modification with identity transformations on top and bottom."""
    top = identity_hor_transform(vt.F, OPLAX)
    bottom = identity_hor_transform(vt.G, OPLAX)
    comp = {x: vt.cod.sq_h_id(vt.at(x)) for x in range(vt.dom.n_objects)}
    return Modification(top, bottom, vt, vt, comp, name="id^%s" % vt.name)


def q_hom_double_category(A, B, C):
    """An empty, lazily interned double category of quasi functors."""
    return QHomDoubleCat(A, B, C)

"""Lax double functors between finite strict double categories.

A lax double functor maps cells kind-by-kind, strictly preserves the
vertical structure, and carries a compositor square for every composable
pair of horizontal 1-cells plus a unitor square for every object.  The
compositor for the pair (f, g), with f first, is a vertically globular
square from F(f) then F(g) down to F(f then g); the unitor for an object A
goes from the identity on F(A) down to F(1_A).
"""

from .core import SQUARE, ValidationReport
from .errors import BoundaryMismatch, DblError, DomainMismatch, MalformedTables


class LaxDoubleFunctor:
    """Cell maps plus compositor and unitor data.

    ob, hmap, vmap, sqmap are dicts from domain cell ids to codomain cell
    ids; comp maps composable pairs (f, g) of 1h-cells to squares; unit maps
    objects to squares.  When the codomain is flat, sqmap entries may be
    omitted and are derived from the image boundary.
    """

    def __init__(self, dom, cod, ob, hmap, vmap, sqmap=None,
                 comp=None, unit=None, name="F"):
        self.dom = dom
        self.cod = cod
        self.ob = dict(ob)
        self.hmap = dict(hmap)
        self.vmap = dict(vmap)
        self.sqmap = dict(sqmap or {})
        self.comp = dict(comp or {})
        self.unit = dict(unit or {})
        self.name = name

    def obj(self, a):
        return self.ob[a]

    def h(self, f):
        return self.hmap[f]

    def v(self, u):
        return self.vmap[u]

    def sq(self, s):
        if s in self.sqmap:
            return self.sqmap[s]
        if self.cod.flat:
            d, c = self.dom, self.cod
            img = c.find_square(self.h(d.sq_top(s)), self.h(d.sq_bottom(s)),
                                self.v(d.sq_left(s)), self.v(d.sq_right(s)))
            if img is None:
                raise MalformedTables(
                    "no codomain square over the image boundary of %s"
                    % d.sq_names[s])
            self.sqmap[s] = img
            return img
        raise MalformedTables("sqmap missing an entry and codomain not flat")

    def compositor(self, f, g):
        key = (f, g)
        if key not in self.comp:
            raise MalformedTables("compositor missing for a composable pair")
        return self.comp[key]

    def unitor(self, a):
        if a not in self.unit:
            raise MalformedTables("unitor missing for an object")
        return self.unit[a]

    def __repr__(self):
        return "LaxDoubleFunctor(%s: %s -> %s)" % (
            self.name, self.dom.name, self.cod.name)


def identity_functor(d):
    """The identity functor with identity compositors and unitors."""
    ob = {a: a for a in range(d.n_objects)}
    hmap = {f: f for f in range(d.n_hcells)}
    vmap = {u: u for u in range(d.n_vcells)}
    sqmap = {} if d.flat else {s: s for s in range(d.n_squares)}
    comp = {}
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                comp[(f, g)] = d.sq_v_id(d.hcomp_h(f, g))
    unit = {a: d.sq_v_id(d.h_id(a)) for a in range(d.n_objects)}
    return LaxDoubleFunctor(d, d, ob, hmap, vmap, sqmap, comp, unit,
                            name="id_%s" % d.name)


def strict_functor(dom, cod, ob, hmap, vmap, sqmap=None, name="F"):
    """Wrap strictly functorial cell maps with identity compositors."""
    F = LaxDoubleFunctor(dom, cod, ob, hmap, vmap, sqmap, name=name)
    for f in range(dom.n_hcells):
        for g in range(dom.n_hcells):
            if dom.htgt[f] == dom.hsrc[g]:
                F.comp[(f, g)] = cod.sq_v_id(cod.hcomp_h(F.h(f), F.h(g)))
    for a in range(dom.n_objects):
        F.unit[a] = cod.sq_v_id(cod.h_id(F.obj(a)))
    return F


def _eq(rep, law, lhs_fn, rhs_fn, **witness):
    """Evaluate both sides; a missing flat composite counts as a failure."""
    try:
        lhs = lhs_fn()
        rhs = rhs_fn()
    except DblError as exc:
        rep.add(law, error=str(exc), **witness)
        return
    if lhs != rhs:
        rep.add(law, lhs=lhs, rhs=rhs, **witness)


def check_wellformed(F):
    """Boundary preservation of all cell maps and the extra square data."""
    rep = ValidationReport()
    d, c = F.dom, F.cod
    for a in range(d.n_objects):
        if a not in F.ob or not 0 <= F.ob[a] < c.n_objects:
            rep.add("wf-object", object=a)
    if not rep.passed:
        return rep
    for f in range(d.n_hcells):
        if f not in F.hmap:
            rep.add("wf-hcell-missing", hcell=f)
            continue
        g = F.hmap[f]
        if c.hsrc[g] != F.obj(d.hsrc[f]) or c.htgt[g] != F.obj(d.htgt[f]):
            rep.add("wf-hcell-boundary", hcell=f)
    for u in range(d.n_vcells):
        if u not in F.vmap:
            rep.add("wf-vcell-missing", vcell=u)
            continue
        w = F.vmap[u]
        if c.vsrc[w] != F.obj(d.vsrc[u]) or c.vtgt[w] != F.obj(d.vtgt[u]):
            rep.add("wf-vcell-boundary", vcell=u)
    if not rep.passed:
        return rep
    for s in d.iter_squares():
        try:
            img = F.sq(s)
        except MalformedTables as exc:
            rep.add("wf-square-missing", square=s, error=str(exc))
            continue
        want = (F.h(d.sq_top(s)), F.h(d.sq_bottom(s)),
                F.v(d.sq_left(s)), F.v(d.sq_right(s)))
        if c.sq_bounds[img] != want:
            rep.add("wf-square-boundary", square=s)
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] != d.hsrc[g]:
                continue
            try:
                s = F.compositor(f, g)
            except MalformedTables:
                rep.add("wf-compositor-missing", first=f, second=g)
                continue
            want = (c.hcomp_h(F.h(f), F.h(g)), F.h(d.hcomp_h(f, g)),
                    c.v_id(F.obj(d.hsrc[f])), c.v_id(F.obj(d.htgt[g])))
            if c.sq_bounds[s] != want:
                rep.add("wf-compositor-boundary", first=f, second=g)
    for a in range(d.n_objects):
        try:
            s = F.unitor(a)
        except MalformedTables:
            rep.add("wf-unitor-missing", object=a)
            continue
        want = (c.h_id(F.obj(a)), F.h(d.h_id(a)),
                c.v_id(F.obj(a)), c.v_id(F.obj(a)))
        if c.sq_bounds[s] != want:
            rep.add("wf-unitor-boundary", object=a)
    return rep


def check_lax_functor(F):
    """Exhaustive check of the lax double functor laws.

    Law labels: lx.f.v1 and lx.f.v2 (strictness on vertical 1-cells),
    lx.f.h1 and lx.f.h2 (strictness on vertical square composition),
    lx.f.hex (compositor associativity), lx.f.u (compositor unit),
    lx.f.c-nat (compositor naturality), lx.f.u-nat (unitor naturality).
    """
    rep = check_wellformed(F)
    if not rep.passed:
        return rep
    d, c = F.dom, F.cod
    for u in range(d.n_vcells):
        for w in range(d.n_vcells):
            if d.vtgt[u] == d.vsrc[w]:
                _eq(rep, "lx.f.v1",
                    lambda u=u, w=w: F.v(d.vcomp_v(u, w)),
                    lambda u=u, w=w: c.vcomp_v(F.v(u), F.v(w)),
                    first=u, second=w)
    for a in range(d.n_objects):
        _eq(rep, "lx.f.v2",
            lambda a=a: F.v(d.v_id(a)),
            lambda a=a: c.v_id(F.obj(a)), object=a)
    squares = list(d.iter_squares())
    by_top = {}
    for s in squares:
        by_top.setdefault(d.sq_top(s), []).append(s)
    for s1 in squares:
        for s2 in by_top.get(d.sq_bottom(s1), []):
            _eq(rep, "lx.f.h1",
                lambda s1=s1, s2=s2: F.sq(d.vcomp_sq(s1, s2)),
                lambda s1=s1, s2=s2: c.vcomp_sq(F.sq(s1), F.sq(s2)),
                top=s1, bottom=s2)
    for f in range(d.n_hcells):
        _eq(rep, "lx.f.h2",
            lambda f=f: F.sq(d.sq_v_id(f)),
            lambda f=f: c.sq_v_id(F.h(f)), hcell=f)
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] != d.hsrc[g]:
                continue
            for h in range(d.n_hcells):
                if d.htgt[g] != d.hsrc[h]:
                    continue
                _eq(rep, "lx.f.hex",
                    lambda f=f, g=g, h=h: c.vcomp_sq(
                        c.hcomp_sq(F.compositor(f, g), c.sq_v_id(F.h(h))),
                        F.compositor(d.hcomp_h(f, g), h)),
                    lambda f=f, g=g, h=h: c.vcomp_sq(
                        c.hcomp_sq(c.sq_v_id(F.h(f)), F.compositor(g, h)),
                        F.compositor(f, d.hcomp_h(g, h))),
                    first=f, second=g, third=h)
    for f in range(d.n_hcells):
        a, b = d.hsrc[f], d.htgt[f]
        ident = c.sq_v_id(F.h(f))
        _eq(rep, "lx.f.u",
            lambda f=f, a=a: c.vcomp_sq(
                c.hcomp_sq(F.unitor(a), c.sq_v_id(F.h(f))),
                F.compositor(d.h_id(a), f)),
            lambda ident=ident: ident, hcell=f, side="left")
        _eq(rep, "lx.f.u",
            lambda f=f, b=b: c.vcomp_sq(
                c.hcomp_sq(c.sq_v_id(F.h(f)), F.unitor(b)),
                F.compositor(f, d.h_id(b))),
            lambda ident=ident: ident, hcell=f, side="right")
    by_left = {}
    for s in squares:
        by_left.setdefault(d.sq_left(s), []).append(s)
    for s1 in squares:
        for s2 in by_left.get(d.sq_right(s1), []):
            f, g = d.sq_top(s1), d.sq_top(s2)
            fp, gp = d.sq_bottom(s1), d.sq_bottom(s2)
            _eq(rep, "lx.f.c-nat",
                lambda s1=s1, s2=s2, fp=fp, gp=gp: c.vcomp_sq(
                    c.hcomp_sq(F.sq(s1), F.sq(s2)), F.compositor(fp, gp)),
                lambda s1=s1, s2=s2, f=f, g=g: c.vcomp_sq(
                    F.compositor(f, g), F.sq(d.hcomp_sq(s1, s2))),
                left=s1, right=s2)
    for u in range(d.n_vcells):
        a, ap = d.vsrc[u], d.vtgt[u]
        _eq(rep, "lx.f.u-nat",
            lambda u=u, ap=ap: c.vcomp_sq(c.sq_h_id(F.v(u)), F.unitor(ap)),
            lambda u=u, a=a: c.vcomp_sq(F.unitor(a), F.sq(d.sq_h_id(u))),
            vcell=u)
    return rep


def is_unitary(F):
    """True when every unitor square is vertically invertible."""
    c = F.cod
    for a in range(F.dom.n_objects):
        if c.vertical_inverse(F.unitor(a)) is None:
            return False
    return True


def is_pseudo(F):
    """True when every unitor and compositor square is vertically invertible."""
    if not is_unitary(F):
        return False
    d, c = F.dom, F.cod
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                if c.vertical_inverse(F.compositor(f, g)) is None:
                    return False
    return True


def is_strict(F):
    """True when every unitor and compositor square is an identity square."""
    d, c = F.dom, F.cod
    for a in range(d.n_objects):
        if F.unitor(a) != c.sq_v_id(c.h_id(F.obj(a))):
            return False
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                if F.compositor(f, g) != c.sq_v_id(c.hcomp_h(F.h(f), F.h(g))):
                    return False
    return True


def compose_lax(F, G):
    """The composite functor "F then G" of F: C -> D and G: D -> E."""
    if F.cod is not G.dom:
        raise DomainMismatch("compose_lax needs F.cod to be G.dom")
    d, e = F.dom, G.cod
    ob = {a: G.obj(F.obj(a)) for a in range(d.n_objects)}
    hmap = {f: G.h(F.h(f)) for f in range(d.n_hcells)}
    vmap = {u: G.v(F.v(u)) for u in range(d.n_vcells)}
    sqmap = {s: G.sq(F.sq(s)) for s in d.iter_squares()}
    comp = {}
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                comp[(f, g)] = e.vcomp_sq(G.compositor(F.h(f), F.h(g)),
                                          G.sq(F.compositor(f, g)))
    unit = {a: e.vcomp_sq(G.unitor(F.obj(a)), G.sq(F.unitor(a)))
            for a in range(d.n_objects)}
    return LaxDoubleFunctor(d, e, ob, hmap, vmap, sqmap, comp, unit,
                            name="%s;%s" % (F.name, G.name))


def functor_equal(F, G):
    """Componentwise equality of two functors with the same boundary."""
    if F.dom is not G.dom or F.cod is not G.cod:
        return False
    d = F.dom
    if any(F.obj(a) != G.obj(a) for a in range(d.n_objects)):
        return False
    if any(F.h(f) != G.h(f) for f in range(d.n_hcells)):
        return False
    if any(F.v(u) != G.v(u) for u in range(d.n_vcells)):
        return False
    if any(F.sq(s) != G.sq(s) for s in d.iter_squares()):
        return False
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                if F.compositor(f, g) != G.compositor(f, g):
                    return False
    return all(F.unitor(a) == G.unitor(a) for a in range(d.n_objects))

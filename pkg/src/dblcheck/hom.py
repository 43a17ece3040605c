"""Hom double categories of functors, transformations and modifications.

For double categories B and C, the hom double category has lax double
functors B -> C as objects, horizontal transformations as 1h-cells,
vertical transformations as 1v-cells, and modifications as squares.  The
flavor fixes the orientations (horizontal oplax with vertical lax by
default, or the swapped pairing) and may restrict the 1v-cells to strict
vertical transformations or the objects to unitary functors.

Cells are interned on demand: the category starts empty and grows as
functors and transformations are added or produced by composition.  Every
cell keeps its semantic payload, so composition is computed on payloads
and deduplicated through a canonical key.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from .core import DoubleCat, ValidationReport
from .errors import EnumerationBound, NotHomCodomain
from .functor import LaxDoubleFunctor, check_lax_functor, is_unitary
from .transform import (
    LAX, OPLAX, HorTransform, Modification, VertTransform,
    check_hor_transform, check_modification, check_vert_transform,
    hcompose_modifications, identity_hor_transform, identity_modification,
    identity_vert_transform, vcompose_hor, vcompose_modifications,
    vcompose_vert)


@dataclass(frozen=True)
class HomFlavor:
    """Orientation and restriction choices for a hom double category."""
    hor: str = OPLAX
    vert: str = LAX
    vert_strict: bool = False
    unitary_only: bool = False


HOP = HomFlavor()
HOP_STAR = HomFlavor(hor=LAX, vert=OPLAX)
ST = HomFlavor(vert_strict=True)
ST_U = HomFlavor(vert_strict=True, unitary_only=True)

FLAVORS = {"hop": HOP, "hop*": HOP_STAR, "st": ST, "st-u": ST_U}


def _functor_key(F):
    d = F.dom
    return ("functor",
            tuple(F.obj(a) for a in range(d.n_objects)),
            tuple(F.h(f) for f in range(d.n_hcells)),
            tuple(F.v(u) for u in range(d.n_vcells)),
            tuple(F.sq(s) for s in d.iter_squares()),
            tuple(sorted(F.comp.items())),
            tuple(sorted(F.unit.items())))


def _hor_key(t, fkey, gkey):
    d = t.dom
    return ("hor", fkey, gkey, t.orientation,
            tuple(t.at(a) for a in range(d.n_objects)),
            tuple(t.sq_v(u) for u in range(d.n_vcells)),
            tuple(t.delta_at(f) for f in range(d.n_hcells)))


def _vert_key(t, fkey, gkey):
    d = t.dom
    return ("vert", fkey, gkey, t.orientation,
            tuple(t.at(a) for a in range(d.n_objects)),
            tuple(t.sq_h(f) for f in range(d.n_hcells)),
            tuple(t.sq_v(u) for u in range(d.n_vcells)))


class HomDoubleCat(DoubleCat):
    """A lazily populated hom double category."""

    def __init__(self, B, C, flavor=HOP, name=None):
        super().__init__(name or "hom(%s,%s)" % (B.name, C.name))
        self.B, self.C = B, C
        self.flavor = flavor
        self.obj_payload = []
        self.h_payload = []
        self.v_payload = []
        self.sq_payload = []
        self._keys = {}

    # -- interning ---------------------------------------------------------

    def intern_functor(self, F):
        key = _functor_key(F)
        if key in self._keys:
            return self._keys[key]
        a = self.add_object(F.name)
        self.obj_payload.append(F)
        self._keys[key] = a
        ident = identity_hor_transform(F, self.flavor.hor)
        f = self._intern_hor(ident, identity_of=a)
        ident_v = identity_vert_transform(F, self.flavor.vert)
        self._intern_vert(ident_v, identity_of=a)
        return a

    def _functor_id(self, F):
        key = _functor_key(F)
        if key not in self._keys:
            return self.intern_functor(F)
        return self._keys[key]

    def _intern_hor(self, t, identity_of=None):
        src = self._functor_id(t.F)
        tgt = self._functor_id(t.G)
        key = _hor_key(t, src, tgt)
        if key in self._keys:
            return self._keys[key]
        f = self.add_hcell(t.name, src, tgt, identity_of=identity_of)
        self.h_payload.append(t)
        self._keys[key] = f
        return f

    def _intern_vert(self, t, identity_of=None):
        src = self._functor_id(t.F)
        tgt = self._functor_id(t.G)
        key = _vert_key(t, src, tgt)
        if key in self._keys:
            return self._keys[key]
        u = self.add_vcell(t.name, src, tgt, identity_of=identity_of)
        self.v_payload.append(t)
        self._keys[key] = u
        return u

    def intern_hor_transform(self, t):
        if t.orientation != self.flavor.hor:
            raise NotHomCodomain("wrong horizontal orientation for this hom")
        return self._intern_hor(t)

    def intern_vert_transform(self, t):
        if t.orientation != self.flavor.vert:
            raise NotHomCodomain("wrong vertical orientation for this hom")
        return self._intern_vert(t)

    def intern_modification(self, m):
        top = self.intern_hor_transform(m.top)
        bottom = self.intern_hor_transform(m.bottom)
        left = self.intern_vert_transform(m.left)
        right = self.intern_vert_transform(m.right)
        key = ("mod", top, bottom, left, right,
               tuple(m.at(a) for a in range(self.B.n_objects)))
        if key in self._keys:
            return self._keys[key]
        s = self.add_square(m.name, top, bottom, left, right)
        self.sq_payload.append(m)
        self._keys[key] = s
        return s

    # -- composition through payloads --------------------------------------

    def hcomp_h(self, f, g):
        if (f, g) not in self._hh:
            self._hh[(f, g)] = self._intern_hor(
                vcompose_hor(self.h_payload[f], self.h_payload[g]))
        return self._hh[(f, g)]

    def vcomp_v(self, u, w):
        if (u, w) not in self._vv:
            self._vv[(u, w)] = self._intern_vert(
                vcompose_vert(self.v_payload[u], self.v_payload[w]))
        return self._vv[(u, w)]

    def hcomp_sq(self, s1, s2):
        if (s1, s2) not in self._hs:
            self._hs[(s1, s2)] = self.intern_modification(
                hcompose_modifications(self.sq_payload[s1], self.sq_payload[s2]))
        return self._hs[(s1, s2)]

    def vcomp_sq(self, s1, s2):
        if (s1, s2) not in self._vs:
            self._vs[(s1, s2)] = self.intern_modification(
                vcompose_modifications(self.sq_payload[s1], self.sq_payload[s2]))
        return self._vs[(s1, s2)]

    def sq_v_id(self, f):
        if f not in self._sqvid:
            self._sqvid[f] = self.intern_modification(
                identity_modification(self.h_payload[f]))
        return self._sqvid[f]

    def sq_h_id(self, u):
        if u not in self._sqhid:
            t = self.v_payload[u]
            top = identity_hor_transform(t.F, self.flavor.hor)
            bottom = identity_hor_transform(t.G, self.flavor.hor)
            comp = {a: t.cod.sq_h_id(t.at(a))
                    for a in range(t.dom.n_objects)}
            self._sqhid[u] = self.intern_modification(
                Modification(top, bottom, t, t, comp, name="id^%s" % t.name))
        return self._sqhid[u]


def hom_double_category(B, C, flavor=HOP, bound=None):
    """The hom double category; with a bound, eagerly populated by
    enumeration (EnumerationBound if the candidate space is larger)."""
    hom = HomDoubleCat(B, C, flavor)
    if bound is not None:
        for F in enumerate_lax_functors(B, C, flavor, bound):
            hom.intern_functor(F)
        objs = list(hom.obj_payload)
        for F in objs:
            for G in objs:
                for t in enumerate_hor_transforms(F, G, flavor, bound):
                    hom.intern_hor_transform(t)
                for t in enumerate_vert_transforms(F, G, flavor, bound):
                    hom.intern_vert_transform(t)
    return hom


def populate_squares(hom):
    """Close the square tables of a hom double category for validation.

    Interns every identity square and then both composites of every
    composable square pair until stable; composing transformations can
    intern new composite 1-cells, so the identity pass is repeated too.
    The resulting square set is the composition closure of the identity
    modifications, which is enough for the whole-category validator to
    exercise unit, associativity, and interchange laws.
    """
    while True:
        n_cells = (hom.n_hcells, hom.n_vcells, hom.n_squares)
        for f in range(hom.n_hcells):
            for g in range(hom.n_hcells):
                if hom.htgt[f] == hom.hsrc[g]:
                    hom.hcomp_h(f, g)
        for u in range(hom.n_vcells):
            for w in range(hom.n_vcells):
                if hom.vtgt[u] == hom.vsrc[w]:
                    hom.vcomp_v(u, w)
        for f in range(hom.n_hcells):
            hom.sq_v_id(f)
        for u in range(hom.n_vcells):
            hom.sq_h_id(u)
        n = hom.n_squares
        for s1 in range(n):
            for s2 in range(n):
                if hom.sq_right(s1) == hom.sq_left(s2):
                    hom.hcomp_sq(s1, s2)
                if hom.sq_bottom(s1) == hom.sq_top(s2):
                    hom.vcomp_sq(s1, s2)
        if (hom.n_hcells, hom.n_vcells, hom.n_squares) == n_cells:
            return hom


def hom_membership(hom, thing):
    """Validate a candidate cell for a hom double category.

    Accepts a functor, transformation or modification and returns the
    report of the appropriate law check, extended with flavor conditions.
    """
    rep = ValidationReport()
    if isinstance(thing, LaxDoubleFunctor):
        if thing.dom is not hom.B or thing.cod is not hom.C:
            rep.add("member-frame")
            return rep
        rep.merge(check_lax_functor(thing))
        if hom.flavor.unitary_only and not is_unitary(thing):
            rep.add("member-unitary")
        return rep
    if isinstance(thing, HorTransform):
        if thing.orientation != hom.flavor.hor:
            rep.add("member-orientation")
            return rep
        rep.merge(check_hor_transform(thing))
        return rep
    if isinstance(thing, VertTransform):
        if thing.orientation != hom.flavor.vert:
            rep.add("member-orientation")
            return rep
        rep.merge(check_vert_transform(thing))
        if hom.flavor.vert_strict:
            c = thing.cod
            for u in range(thing.dom.n_vcells):
                if thing.sq_v(u) != c.sq_h_id(c.vcomp_v(
                        thing.at(thing.dom.vsrc[u]), thing.G.v(u))) \
                        and not _is_strict_structure(thing, u):
                    rep.add("member-vert-strict", vcell=u)
        return rep
    if isinstance(thing, Modification):
        rep.merge(check_modification(thing))
        return rep
    rep.add("member-kind")
    return rep


def _is_strict_structure(t, u):
    """A strict structure square is the horizontal identity on its side."""
    c = t.cod
    d = t.dom
    left = c.vcomp_v(t.at(d.vsrc[u]), t.G.v(u))
    right = c.vcomp_v(t.F.v(u), t.at(d.vtgt[u]))
    if t.orientation == OPLAX:
        left, right = right, left
    return left == right and t.sq_v(u) == c.sq_h_id(left)


# -- enumeration ------------------------------------------------------------


class _Budget:
    def __init__(self, bound):
        self.bound = bound
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.bound is not None and self.used > self.bound:
            raise EnumerationBound("candidate enumeration exceeded the bound")


def _globular_candidates(c, top, bottom, a, b):
    return c.squares_with_boundary(top, bottom, c.v_id(a), c.v_id(b))


def enumerate_lax_functors(B, C, flavor=HOP, bound=None):
    """Brute-force enumeration of lax double functors B -> C.

    Practical only for very small B; the budget counts candidate partial
    assignments and raises EnumerationBound when exhausted.
    """
    budget = _Budget(bound)
    if C.flat:
        C.materialize_flat_squares()
    out = []
    hlists = lambda ob: [C.hcells_between(ob[B.hsrc[f]], ob[B.htgt[f]])
                         for f in range(B.n_hcells)]
    for ob in iproduct(range(C.n_objects), repeat=B.n_objects):
        budget.spend()
        for hmap in iproduct(*hlists(ob)):
            budget.spend()
            vchoices = []
            ok = True
            for u in range(B.n_vcells):
                if B.is_v_identity(u):
                    vchoices.append([C.v_id(ob[B.vsrc[u]])])
                else:
                    cands = C.vcells_between(ob[B.vsrc[u]], ob[B.vtgt[u]])
                    if not cands:
                        ok = False
                        break
                    vchoices.append(cands)
            if not ok:
                continue
            for vmap in iproduct(*vchoices):
                budget.spend()
                yield from _complete_functors(B, C, flavor, budget,
                                              dict(enumerate(ob)),
                                              dict(enumerate(hmap)),
                                              dict(enumerate(vmap)))


def _complete_functors(B, C, flavor, budget, ob, hmap, vmap):
    squares = list(B.iter_squares())
    sqchoices = []
    for s in squares:
        cands = C.squares_with_boundary(
            hmap[B.sq_top(s)], hmap[B.sq_bottom(s)],
            vmap[B.sq_left(s)], vmap[B.sq_right(s)])
        if not cands:
            return
        sqchoices.append(cands)
    pairs = [(f, g) for f in range(B.n_hcells) for g in range(B.n_hcells)
             if B.htgt[f] == B.hsrc[g]]
    compchoices = []
    for f, g in pairs:
        cands = _globular_candidates(
            C, C.hcomp_h(hmap[f], hmap[g]), hmap[B.hcomp_h(f, g)],
            ob[B.hsrc[f]], ob[B.htgt[g]])
        if not cands:
            return
        compchoices.append(cands)
    unitchoices = []
    for a in range(B.n_objects):
        cands = _globular_candidates(C, C.h_id(ob[a]), hmap[B.h_id(a)],
                                     ob[a], ob[a])
        if not cands:
            return
        unitchoices.append(cands)
    for sqs in iproduct(*sqchoices):
        for comps in iproduct(*compchoices):
            for units in iproduct(*unitchoices):
                budget.spend()
                F = LaxDoubleFunctor(
                    B, C, ob, hmap, vmap, dict(zip(squares, sqs)),
                    dict(zip(pairs, comps)), dict(enumerate(units)))
                if flavor.unitary_only and not is_unitary(F):
                    continue
                if check_lax_functor(F).passed:
                    yield F


def enumerate_hor_transforms(F, G, flavor=HOP, bound=None):
    """All horizontal transformations F => G in the flavor's orientation."""
    budget = _Budget(bound)
    B, C = F.dom, F.cod
    choices = [C.hcells_between(F.obj(a), G.obj(a)) for a in range(B.n_objects)]
    for comp0 in iproduct(*choices):
        yield from _complete_hor(F, G, flavor, budget, dict(enumerate(comp0)))


def _complete_hor(F, G, flavor, budget, comp0):
    B, C = F.dom, F.cod
    vchoices = []
    for u in range(B.n_vcells):
        cands = C.squares_with_boundary(comp0[B.vsrc[u]], comp0[B.vtgt[u]],
                                        F.v(u), G.v(u))
        if not cands:
            return
        vchoices.append(cands)
    dchoices = []
    for f in range(B.n_hcells):
        a, b = B.hsrc[f], B.htgt[f]
        upper = C.hcomp_h(F.h(f), comp0[b])
        lower = C.hcomp_h(comp0[a], G.h(f))
        if flavor.hor == LAX:
            upper, lower = lower, upper
        cands = _globular_candidates(C, upper, lower, F.obj(a), G.obj(b))
        if not cands:
            return
        dchoices.append(cands)
    for comp_v in iproduct(*vchoices):
        for delta in iproduct(*dchoices):
            budget.spend()
            t = HorTransform(F, G, comp0, dict(enumerate(comp_v)),
                             dict(enumerate(delta)), flavor.hor)
            if check_hor_transform(t).passed:
                yield t


def enumerate_vert_transforms(F, G, flavor=HOP, bound=None):
    """All vertical transformations F => G in the flavor's orientation."""
    budget = _Budget(bound)
    B, C = F.dom, F.cod
    choices = [C.vcells_between(F.obj(a), G.obj(a)) for a in range(B.n_objects)]
    for comp0 in iproduct(*choices):
        yield from _complete_vert(F, G, flavor, budget, dict(enumerate(comp0)))


def _complete_vert(F, G, flavor, budget, comp0):
    B, C = F.dom, F.cod
    hchoices = []
    for f in range(B.n_hcells):
        cands = C.squares_with_boundary(F.h(f), G.h(f),
                                        comp0[B.hsrc[f]], comp0[B.htgt[f]])
        if not cands:
            return
        hchoices.append(cands)
    vchoices = []
    for u in range(B.n_vcells):
        a, at_ = B.vsrc[u], B.vtgt[u]
        left = C.vcomp_v(comp0[a], G.v(u))
        right = C.vcomp_v(F.v(u), comp0[at_])
        if flavor.vert == OPLAX:
            left, right = right, left
        cands = C.squares_with_boundary(C.h_id(F.obj(a)), C.h_id(G.obj(at_)),
                                        left, right)
        if flavor.vert_strict:
            cands = [s for s in cands
                     if left == right and s == C.sq_h_id(left)]
        if not cands:
            return
        vchoices.append(cands)
    for comp_h in iproduct(*hchoices):
        for comp_v in iproduct(*vchoices):
            budget.spend()
            t = VertTransform(F, G, comp0, dict(enumerate(comp_h)),
                              dict(enumerate(comp_v)), flavor.vert)
            if check_vert_transform(t).passed:
                yield t


def enumerate_modifications(top, bottom, left, right, bound=None):
    """All modifications filling the given frame of transformations."""
    budget = _Budget(bound)
    B, C = top.dom, top.cod
    choices = []
    for a in range(B.n_objects):
        cands = C.squares_with_boundary(top.at(a), bottom.at(a),
                                        left.at(a), right.at(a))
        if not cands:
            return
        choices.append(cands)
    for comp in iproduct(*choices):
        budget.spend()
        m = Modification(top, bottom, left, right, dict(enumerate(comp)))
        if check_modification(m).passed:
            yield m

"""Monads and distributive laws inside a double category.

A monad is an object with a horizontal endo-1-cell, a globular unit square
and a globular multiplication square; equivalently a lax functor from the
terminal double category.  A distributive law is a pair of monads on the
same carrier with a swap square, equivalently a quasi functor from the
terminal pair, so composing the two monads along the swap is a special
case of strictification and is implemented that way.

In a flat double category the laws are automatic and a monad is just the
existence of the unit and multiplication squares; on Boolean matrices this
makes monads on an n-element carrier exactly the preorders on n elements.
"""

import random

from .core import ValidationReport, trivial
from .errors import (
    CarrierMismatch, DblError, NotFlat, NotTrivialDomain)
from .functor import LaxDoubleFunctor
from .hom import FLAVORS, hom_double_category
from .quasi import QuasiFunctor, check_quasi_functor
from .strictify import strictify0


class Monad:
    """A monad in the double category d on the object carrier."""

    def __init__(self, d, carrier, endo, unit, mult, name="T"):
        self.d = d
        self.carrier = carrier
        self.endo = endo
        self.unit = unit
        self.mult = mult
        self.name = name

    def data(self):
        return (self.carrier, self.endo, self.unit, self.mult)

    def __repr__(self):
        return "Monad(%s on %s: endo %s)" % (
            self.name, self.d.objects[self.carrier],
            self.d.hnames[self.endo])


def check_monad(m):
    """Boundary conditions, associativity, and the two unit laws."""
    d = m.d
    rep = ValidationReport()
    x = m.carrier
    want_unit = (d.h_id(x), m.endo, d.v_id(x), d.v_id(x))
    if d.sq_bounds[m.unit] != want_unit:
        rep.add("mnd.unit-boundary", monad=m.name)
    want_mult = (d.hcomp_h(m.endo, m.endo), m.endo, d.v_id(x), d.v_id(x))
    if d.sq_bounds[m.mult] != want_mult:
        rep.add("mnd.mult-boundary", monad=m.name)
    if not rep.passed:
        return rep
    ident = d.sq_v_id(m.endo)

    def law(label, lhs_fn, rhs_fn):
        try:
            ok = lhs_fn() == rhs_fn()
        except DblError:
            ok = False
        if not ok:
            rep.add(label, monad=m.name)

    law("mnd.assoc",
        lambda: d.vcomp_sq(d.hcomp_sq(m.mult, ident), m.mult),
        lambda: d.vcomp_sq(d.hcomp_sq(ident, m.mult), m.mult))
    law("mnd.unit-l",
        lambda: d.vcomp_sq(d.hcomp_sq(m.unit, ident), m.mult),
        lambda: ident)
    law("mnd.unit-r",
        lambda: d.vcomp_sq(d.hcomp_sq(ident, m.unit), m.mult),
        lambda: ident)
    return rep


def lax_from_monad(m, dom=None):
    """The lax functor out of the terminal double category packaging m."""
    d = m.d
    if dom is None:
        dom = trivial()
    x = m.carrier
    return LaxDoubleFunctor(dom, d, {0: x}, {0: m.endo}, {0: d.v_id(x)},
                            {0: d.sq_v_id(m.endo)},
                            {(0, 0): m.mult}, {0: m.unit}, name=m.name)


def monad_from_lax(F, name=None):
    """The monad carried by a lax functor out of the terminal double
    category."""
    dom = F.dom
    if dom.n_objects != 1 or dom.n_hcells != 1 or dom.n_vcells != 1:
        raise NotTrivialDomain("monads come from functors out of the "
                               "terminal double category")
    return Monad(F.cod, F.obj(0), F.h(0), F.unitor(0), F.compositor(0, 0),
                 name=name or F.name)


class DistributiveLaw:
    """Two monads on one carrier with a swap square s.t => t.s.

    The swap square runs from the composite "t then s" down to "s then t"
    with identity verticals.  Internally the law is stored as a quasi
    functor from the terminal pair, with t as the first family and s as
    the second, so strictification applies verbatim.
    """

    def __init__(self, mt, ms, swap, name="L"):
        if mt.d is not ms.d or mt.carrier != ms.carrier:
            raise CarrierMismatch("distributive law needs both monads on "
                                  "one carrier")
        self.mt = mt
        self.ms = ms
        self.swap = swap
        self.name = name
        t1, t2 = trivial(), trivial()
        self.quasi = QuasiFunctor(
            t1, t2, mt.d,
            {0: lax_from_monad(mt, t2)}, {0: lax_from_monad(ms, t1)},
            {(0, 0): swap}, name=name)

    @property
    def d(self):
        return self.mt.d

    def __repr__(self):
        return "DistributiveLaw(%s: %s over %s)" % (
            self.name, self.mt.name, self.ms.name)


def check_distributive_law(lw):
    """Check both monads and the surviving interchange laws of the swap."""
    rep = ValidationReport()
    rep.merge(check_monad(lw.mt), prefix="t.")
    rep.merge(check_monad(lw.ms), prefix="s.")
    if not rep.passed:
        return rep
    rep.merge(check_quasi_functor(lw.quasi, trivial_uU=True))
    return rep


def comp(lw, name=None):
    """The composite monad of a distributive law, by strictification.

    The strictified functor lives over the product of two terminal double
    categories, which is again terminal, so it is itself a monad: the endo
    is "s then t", the multiplication comes from the compositor pasting,
    and the unit from the unitor pasting.
    """
    P = strictify0(lw.quasi)
    return monad_from_lax(P, name=name or "comp(%s)" % lw.name)


def _direct_composite(lw, name=None):
    """The composite monad written out directly, for cross-checking."""
    d = lw.d
    t, s = lw.mt.endo, lw.ms.endo
    endo = d.hcomp_h(s, t)
    unit = d.hcomp_sq(lw.ms.unit, lw.mt.unit)
    mult = d.vcomp_sq(
        d.hcomp_sq_many([d.sq_v_id(s), lw.swap, d.sq_v_id(t)]),
        d.hcomp_sq(lw.ms.mult, lw.mt.mult))
    return Monad(d, lw.mt.carrier, endo, unit, mult,
                 name=name or "direct(%s)" % lw.name)


def mnd_double_category(d, oplax=False, bound=None):
    """The double category of monads in d, as a hom double category.

    Objects are monads, horizontal cells lax transformations, vertical
    cells oplax transformations, squares modifications.  With oplax=True
    the orientations are swapped instead.
    """
    flavor = FLAVORS["hop"] if oplax else FLAVORS["hop*"]
    return hom_double_category(trivial(), d, flavor, bound)


def enumerate_monads(d, carrier):
    """All monads on a carrier object of a flat double category.

    Flatness makes the laws automatic, so a monad is an endo-1-cell whose
    unit and multiplication squares exist.
    """
    if not d.flat:
        raise NotFlat("monad enumeration needs a flat double category")
    vid = d.v_id(carrier)
    out = []
    for t in range(d.n_hcells):
        if d.hsrc[t] != carrier or d.htgt[t] != carrier:
            continue
        unit = d.find_square(d.h_id(carrier), t, vid, vid)
        if unit is None:
            continue
        mult = d.find_square(d.hcomp_h(t, t), t, vid, vid)
        if mult is None:
            continue
        out.append(Monad(d, carrier, t, unit, mult,
                         name="T%d" % len(out)))
    return out


def enumerate_distributive_laws(d, carrier):
    """All distributive laws between monads on a carrier of a flat d."""
    vid = d.v_id(carrier)
    laws = []
    monads = enumerate_monads(d, carrier)
    for mt in monads:
        for ms in monads:
            swap = d.find_square(d.hcomp_h(mt.endo, ms.endo),
                                 d.hcomp_h(ms.endo, mt.endo), vid, vid)
            if swap is not None:
                laws.append(DistributiveLaw(mt, ms, swap))
    return laws


def verify_comp_diagram(d, sample=None, seed=0):
    """Check that strictification and the direct composite formula agree.

    Every distributive law in d is composed both ways and the resulting
    monads are compared cell by cell; with a sample size, a seeded random
    subset of the laws is used instead of all of them.
    """
    if not d.flat:
        raise NotFlat("the comparison enumerates distributive laws, which "
                      "needs a flat double category")
    laws = []
    for carrier in range(d.n_objects):
        laws.extend(enumerate_distributive_laws(d, carrier))
    if sample is not None and sample < len(laws):
        laws = random.Random(seed).sample(laws, sample)
    rep = ValidationReport()
    rep.checked = len(laws)
    for lw in laws:
        if comp(lw).data() != _direct_composite(lw).data():
            rep.add("comp-diagram", law=repr(lw))
    return rep

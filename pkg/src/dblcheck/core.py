"""Finite strict double categories with total composition tables.

Cells of each kind (objects, horizontal 1-cells, vertical 1-cells, squares)
are interned: a cell is an integer index into per-kind lists, and equality of
cells is equality of indices.  Squares come in two backends:

* ``explicit`` — squares are listed and both square compositions are stored
  as total tables on composable pairs;
* ``flat`` — there is at most one square per boundary, membership is decided
  by a predicate on boundary quadruples, squares are interned on demand, and
  the composition of squares is derived from the 1-cell compositions.

Orientation conventions used throughout: a square has a top and a bottom
horizontal 1-cell and a left and a right vertical 1-cell; ``hcomp`` glues
left-to-right (the left factor first) and ``vcomp`` glues top-to-bottom (the
top factor first).  ``hcomp_h(f, g)`` is the composite "f then g".
"""

from dataclasses import dataclass, field
from itertools import product as iproduct
import json
import random

from .errors import BoundaryMismatch, MalformedTables, NotFlat, SizeBound

OBJECT = "object"
HCELL = "hcell"
VCELL = "vcell"
SQUARE = "square"


@dataclass(frozen=True)
class CellRef:
    """Reference to an interned cell: a kind tag and a per-kind index."""
    kind: str
    id: int


@dataclass
class ValidationReport:
    """Outcome of a law check: a verdict plus per-law failure witnesses."""
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def add(self, law, **witness):
        self.failures.append((law, witness))

    def merge(self, other, prefix=""):
        for law, witness in other.failures:
            self.failures.append((prefix + law, witness))

    def laws_failed(self):
        return sorted({law for law, _ in self.failures})

    def __repr__(self):
        if self.passed:
            return "ValidationReport(passed)"
        return "ValidationReport(failed: %s)" % ", ".join(self.laws_failed())


class DoubleCat:
    """A finite strict double category backed by composition tables."""

    def __init__(self, name="D"):
        self.name = name
        self.objects = []
        self.hnames, self.hsrc, self.htgt = [], [], []
        self.vnames, self.vsrc, self.vtgt = [], [], []
        self._h_id, self._v_id = [], []
        self._hh, self._vv = {}, {}
        self.hcomp_h_fn = None
        self.vcomp_v_fn = None
        self.flat = False
        self.square_pred = None
        self.sq_names = []
        self.sq_bounds = []
        self._sq_by_bound = {}
        self._hs, self._vs = {}, {}
        self._sqhid, self._sqvid = {}, {}

    # -- construction ------------------------------------------------------

    def add_object(self, name):
        self.objects.append(name)
        self._h_id.append(None)
        self._v_id.append(None)
        return len(self.objects) - 1

    def add_hcell(self, name, src, tgt, identity_of=None):
        self.hnames.append(name)
        self.hsrc.append(src)
        self.htgt.append(tgt)
        f = len(self.hnames) - 1
        if identity_of is not None:
            self._h_id[identity_of] = f
        return f

    def add_vcell(self, name, src, tgt, identity_of=None):
        self.vnames.append(name)
        self.vsrc.append(src)
        self.vtgt.append(tgt)
        u = len(self.vnames) - 1
        if identity_of is not None:
            self._v_id[identity_of] = u
        return u

    def add_square(self, name, top, bottom, left, right):
        if self.flat:
            raise MalformedTables("flat categories intern squares on demand")
        self._check_square_boundary(top, bottom, left, right)
        self.sq_names.append(name)
        bound = (top, bottom, left, right)
        self.sq_bounds.append(bound)
        s = len(self.sq_bounds) - 1
        self._sq_by_bound.setdefault(bound, []).append(s)
        return s

    def set_flat(self, pred):
        """Switch to the flat backend with the given boundary predicate."""
        self.flat = True
        self.square_pred = pred

    def set_hh(self, f, g, h):
        self._hh[(f, g)] = h

    def set_vv(self, u, v, w):
        self._vv[(u, v)] = w

    def set_hs(self, a, b, c):
        self._hs[(a, b)] = c

    def set_vs(self, a, b, c):
        self._vs[(a, b)] = c

    def set_sq_h_id(self, u, s):
        self._sqhid[u] = s

    def set_sq_v_id(self, f, s):
        self._sqvid[f] = s

    def _check_square_boundary(self, top, bottom, left, right):
        ok = (self.hsrc[top] == self.vsrc[left]
              and self.htgt[top] == self.vsrc[right]
              and self.hsrc[bottom] == self.vtgt[left]
              and self.htgt[bottom] == self.vtgt[right])
        if not ok:
            raise BoundaryMismatch(
                "square boundary does not close: top %s bottom %s left %s right %s"
                % (self.hnames[top], self.hnames[bottom],
                   self.vnames[left], self.vnames[right]))

    # -- basic accessors ---------------------------------------------------

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_hcells(self):
        return len(self.hnames)

    @property
    def n_vcells(self):
        return len(self.vnames)

    @property
    def n_squares(self):
        return len(self.sq_bounds)

    def h_id(self, a):
        return self._h_id[a]

    def v_id(self, a):
        return self._v_id[a]

    def is_h_identity(self, f):
        return self._h_id[self.hsrc[f]] == f

    def is_v_identity(self, u):
        return self._v_id[self.vsrc[u]] == u

    def sq_top(self, s):
        return self.sq_bounds[s][0]

    def sq_bottom(self, s):
        return self.sq_bounds[s][1]

    def sq_left(self, s):
        return self.sq_bounds[s][2]

    def sq_right(self, s):
        return self.sq_bounds[s][3]

    def hcells_between(self, a, b):
        return [f for f in range(self.n_hcells)
                if self.hsrc[f] == a and self.htgt[f] == b]

    def vcells_between(self, a, b):
        return [u for u in range(self.n_vcells)
                if self.vsrc[u] == a and self.vtgt[u] == b]

    # -- 1-cell composition ------------------------------------------------

    def hcomp_h(self, f, g):
        """Composite 1h-cell "f then g"."""
        if self.htgt[f] != self.hsrc[g]:
            raise BoundaryMismatch("hcomp_h: %s then %s not composable"
                                   % (self.hnames[f], self.hnames[g]))
        key = (f, g)
        if key not in self._hh:
            if self.hcomp_h_fn is None:
                raise MalformedTables("hcomp_h table missing entry (%s, %s)"
                                      % (self.hnames[f], self.hnames[g]))
            self._hh[key] = self.hcomp_h_fn(f, g)
        return self._hh[key]

    def vcomp_v(self, u, v):
        """Composite 1v-cell "u then v" (u on top)."""
        if self.vtgt[u] != self.vsrc[v]:
            raise BoundaryMismatch("vcomp_v: %s then %s not composable"
                                   % (self.vnames[u], self.vnames[v]))
        key = (u, v)
        if key not in self._vv:
            if self.vcomp_v_fn is None:
                raise MalformedTables("vcomp_v table missing entry (%s, %s)"
                                      % (self.vnames[u], self.vnames[v]))
            self._vv[key] = self.vcomp_v_fn(u, v)
        return self._vv[key]

    # -- squares -----------------------------------------------------------

    def square_exists(self, top, bottom, left, right):
        bound = (top, bottom, left, right)
        if self.flat:
            if bound in self._sq_by_bound:
                return True
            return self.square_pred(top, bottom, left, right)
        return bound in self._sq_by_bound

    def find_square(self, top, bottom, left, right):
        """The square with the given boundary, or None.

        In the flat backend the square is interned on first sight.  In the
        explicit backend the boundary must carry at most one square.
        """
        bound = (top, bottom, left, right)
        hit = self._sq_by_bound.get(bound)
        if hit is not None:
            if len(hit) > 1:
                raise MalformedTables("boundary carries several squares")
            return hit[0]
        if not self.flat:
            return None
        self._check_square_boundary(top, bottom, left, right)
        if not self.square_pred(top, bottom, left, right):
            return None
        name = "[%s/%s;%s/%s]" % (self.hnames[top], self.hnames[bottom],
                                  self.vnames[left], self.vnames[right])
        self.sq_names.append(name)
        self.sq_bounds.append(bound)
        s = len(self.sq_bounds) - 1
        self._sq_by_bound[bound] = [s]
        return s

    def squares_with_boundary(self, top, bottom, left, right):
        if self.flat:
            s = self.find_square(top, bottom, left, right)
            return [] if s is None else [s]
        return list(self._sq_by_bound.get((top, bottom, left, right), []))

    def sq_h_id(self, u):
        """The horizontal identity square Id^u on a 1v-cell u."""
        if self.flat:
            s = self.find_square(self.h_id(self.vsrc[u]),
                                 self.h_id(self.vtgt[u]), u, u)
            if s is None:
                raise MalformedTables("flat category misses Id^%s" % self.vnames[u])
            return s
        if u not in self._sqhid:
            raise MalformedTables("sq_h_id missing for %s" % self.vnames[u])
        return self._sqhid[u]

    def sq_v_id(self, f):
        """The vertical identity square Id_f on a 1h-cell f."""
        if self.flat:
            s = self.find_square(f, f, self.v_id(self.hsrc[f]),
                                 self.v_id(self.htgt[f]))
            if s is None:
                raise MalformedTables("flat category misses Id_%s" % self.hnames[f])
            return s
        if f not in self._sqvid:
            raise MalformedTables("sq_v_id missing for %s" % self.hnames[f])
        return self._sqvid[f]

    def sq_id_obj(self, a):
        """The doubly-identity square on an object."""
        return self.sq_h_id(self.v_id(a))

    def hcomp_sq(self, s1, s2):
        """Horizontal composite, s1 on the left."""
        if self.sq_right(s1) != self.sq_left(s2):
            raise BoundaryMismatch("hcomp_sq: shared vertical edge differs")
        if self.flat:
            top = self.hcomp_h(self.sq_top(s1), self.sq_top(s2))
            bottom = self.hcomp_h(self.sq_bottom(s1), self.sq_bottom(s2))
            s = self.find_square(top, bottom, self.sq_left(s1), self.sq_right(s2))
            if s is None:
                raise MalformedTables("flat category not closed under hcomp_sq")
            return s
        key = (s1, s2)
        if key not in self._hs:
            raise MalformedTables("hcomp_sq table missing an entry")
        return self._hs[key]

    def vcomp_sq(self, s1, s2):
        """Vertical composite, s1 on top."""
        if self.sq_bottom(s1) != self.sq_top(s2):
            raise BoundaryMismatch("vcomp_sq: shared horizontal edge differs")
        if self.flat:
            left = self.vcomp_v(self.sq_left(s1), self.sq_left(s2))
            right = self.vcomp_v(self.sq_right(s1), self.sq_right(s2))
            s = self.find_square(self.sq_top(s1), self.sq_bottom(s2), left, right)
            if s is None:
                raise MalformedTables("flat category not closed under vcomp_sq")
            return s
        key = (s1, s2)
        if key not in self._vs:
            raise MalformedTables("vcomp_sq table missing an entry")
        return self._vs[key]

    def hcomp_sq_many(self, squares):
        out = squares[0]
        for s in squares[1:]:
            out = self.hcomp_sq(out, s)
        return out

    def vcomp_sq_many(self, squares):
        out = squares[0]
        for s in squares[1:]:
            out = self.vcomp_sq(out, s)
        return out

    def globular_v(self, s):
        """True when the square's vertical sides are identities (f => g shape)."""
        return self.is_v_identity(self.sq_left(s)) and self.is_v_identity(self.sq_right(s))

    def globular_h(self, s):
        """True when the square's horizontal sides are identities (u => v shape)."""
        return self.is_h_identity(self.sq_top(s)) and self.is_h_identity(self.sq_bottom(s))

    def vertical_inverse(self, s):
        """The two-sided vcomp inverse of a vertically globular square, or None."""
        if not self.globular_v(s):
            return None
        f, g = self.sq_top(s), self.sq_bottom(s)
        for t in self.squares_with_boundary(g, f, self.sq_left(s), self.sq_right(s)):
            if (self.vcomp_sq(s, t) == self.sq_v_id(f)
                    and self.vcomp_sq(t, s) == self.sq_v_id(g)):
                return t
        return None

    def iter_squares(self):
        """All square ids; flat squares are interned during the scan."""
        if not self.flat:
            yield from range(self.n_squares)
            return
        for bound in self.iter_flat_boundaries():
            yield self.find_square(*bound)

    # -- enumeration of flat squares ---------------------------------------

    def iter_flat_boundaries(self):
        """All boundary quadruples with a square, scanning the boundary space."""
        if not self.flat:
            raise NotFlat("iter_flat_boundaries needs the flat backend")
        vgrp = {}
        for u in range(self.n_vcells):
            vgrp.setdefault(self.vsrc[u], []).append(u)
        hgrp = {}
        for f in range(self.n_hcells):
            hgrp.setdefault((self.hsrc[f], self.htgt[f]), []).append(f)
        for left in range(self.n_vcells):
            for right in range(self.n_vcells):
                tops = hgrp.get((self.vsrc[left], self.vsrc[right]), [])
                bottoms = hgrp.get((self.vtgt[left], self.vtgt[right]), [])
                for top in tops:
                    for bottom in bottoms:
                        if self.square_pred(top, bottom, left, right):
                            yield (top, bottom, left, right)

    def materialize_flat_squares(self, limit=None):
        """Intern every flat square; returns the number of squares."""
        count = 0
        for bound in self.iter_flat_boundaries():
            self.find_square(*bound)
            count += 1
            if limit is not None and count > limit:
                raise SizeBound("flat square count exceeds limit %d" % limit)
        return self.n_squares

    # -- cell refs ---------------------------------------------------------

    def ref(self, kind, idx):
        return CellRef(kind, idx)

    def cell_name(self, ref):
        if ref.kind == OBJECT:
            return self.objects[ref.id]
        if ref.kind == HCELL:
            return self.hnames[ref.id]
        if ref.kind == VCELL:
            return self.vnames[ref.id]
        return self.sq_names[ref.id]

    def __repr__(self):
        return "DoubleCat(%s: %d objects, %d h, %d v, %d squares%s)" % (
            self.name, self.n_objects, self.n_hcells, self.n_vcells,
            self.n_squares, ", flat" if self.flat else "")


# -- validation -------------------------------------------------------------


def validate_double_category(d, closure_limit=None, max_checks=None, seed=0):
    """Check the strict double-category laws exhaustively.

    For the explicit backend this checks table totality and boundaries,
    associativity and unitality of all four compositions, identity-square
    functoriality, and interchange on all 2x2 grids.  For the flat backend
    equality of squares is determined by the boundary, so associativity,
    unitality and interchange are automatic once composites exist; what is
    checked is the existence of identity squares and closure of the square
    set under both compositions (optionally capped by ``closure_limit``).
    """
    rep = ValidationReport()
    _validate_one_cat(rep, "h", d.n_hcells, d.hsrc, d.htgt,
                      d.hcomp_h, d._hh, d.h_id, d.n_objects, d)
    _validate_one_cat(rep, "v", d.n_vcells, d.vsrc, d.vtgt,
                      d.vcomp_v, d._vv, d.v_id, d.n_objects, d)
    for a in range(d.n_objects):
        if d.h_id(a) is None:
            rep.add("h-identity-missing", object=CellRef(OBJECT, a))
        if d.v_id(a) is None:
            rep.add("v-identity-missing", object=CellRef(OBJECT, a))
    if not rep.passed:
        return rep
    if d.flat:
        _validate_flat_squares(rep, d, closure_limit)
    else:
        _validate_explicit_squares(rep, d, max_checks, seed)
    return rep


def _validate_one_cat(rep, tag, n, src, tgt, comp, table, ident, n_objects, d):
    bad = False
    for (f, g), h in list(table.items()):
        if tgt[f] != src[g] or src[h] != src[f] or tgt[h] != tgt[g]:
            rep.add(tag + "-table-boundary", first=f, second=g)
            bad = True
    if bad:
        return
    for f in range(n):
        for g in range(n):
            if tgt[f] != src[g]:
                continue
            try:
                fg = comp(f, g)
            except MalformedTables:
                rep.add(tag + "-table-total", first=f, second=g)
                continue
            for h in range(n):
                if tgt[g] != src[h]:
                    continue
                if comp(comp(f, g), h) != comp(f, comp(g, h)):
                    rep.add(tag + "-assoc", first=f, second=g, third=h)
    for f in range(n):
        left_id = ident(src[f])
        right_id = ident(tgt[f])
        if left_id is None or right_id is None:
            continue
        if comp(left_id, f) != f or comp(f, right_id) != f:
            rep.add(tag + "-unit", cell=f)


def _validate_flat_squares(rep, d, closure_limit):
    for f in range(d.n_hcells):
        if not d.square_exists(f, f, d.v_id(d.hsrc[f]), d.v_id(d.htgt[f])):
            rep.add("sq-v-id-missing", hcell=CellRef(HCELL, f))
    for u in range(d.n_vcells):
        if not d.square_exists(d.h_id(d.vsrc[u]), d.h_id(d.vtgt[u]), u, u):
            rep.add("sq-h-id-missing", vcell=CellRef(VCELL, u))
    bounds = []
    for bound in d.iter_flat_boundaries():
        bounds.append(bound)
        if closure_limit is not None and len(bounds) > closure_limit:
            rep.add("flat-too-large", limit=closure_limit)
            return
    by_right = {}
    by_top = {}
    for bound in bounds:
        by_right.setdefault(bound[3], []).append(bound)
        by_top.setdefault(bound[0], []).append(bound)
    have = set(bounds)
    checked = 0
    for b2 in bounds:
        for b1 in by_right.get(b2[2], []):
            top = d.hcomp_h(b1[0], b2[0])
            bottom = d.hcomp_h(b1[1], b2[1])
            if (top, bottom, b1[2], b2[3]) not in have:
                rep.add("hcomp-sq-closure", left=b1, right=b2)
            checked += 1
            if closure_limit is not None and checked > closure_limit:
                return
        for b1 in by_top.get(b2[1], []):
            left = d.vcomp_v(b2[2], b1[2])
            right = d.vcomp_v(b2[3], b1[3])
            if (b2[0], b1[1], left, right) not in have:
                rep.add("vcomp-sq-closure", top=b2, bottom=b1)
            checked += 1
            if closure_limit is not None and checked > closure_limit:
                return


def _validate_explicit_squares(rep, d, max_checks=None, seed=0):
    ns = d.n_squares
    for f in range(d.n_hcells):
        if f not in d._sqvid:
            rep.add("sq-v-id-missing", hcell=CellRef(HCELL, f))
        else:
            s = d._sqvid[f]
            if d.sq_bounds[s] != (f, f, d.v_id(d.hsrc[f]), d.v_id(d.htgt[f])):
                rep.add("sq-v-id-boundary", hcell=CellRef(HCELL, f))
    for u in range(d.n_vcells):
        if u not in d._sqhid:
            rep.add("sq-h-id-missing", vcell=CellRef(VCELL, u))
        else:
            s = d._sqhid[u]
            if d.sq_bounds[s] != (d.h_id(d.vsrc[u]), d.h_id(d.vtgt[u]), u, u):
                rep.add("sq-h-id-boundary", vcell=CellRef(VCELL, u))
    if not rep.passed:
        return
    for a in range(d.n_objects):
        if d.sq_h_id(d.v_id(a)) != d.sq_v_id(d.h_id(a)):
            rep.add("sq-obj-id", object=CellRef(OBJECT, a))
    by_left, by_top = {}, {}
    for s in range(ns):
        by_left.setdefault(d.sq_left(s), []).append(s)
        by_top.setdefault(d.sq_top(s), []).append(s)
    hpairs = [(s1, s2) for s1 in range(ns)
              for s2 in by_left.get(d.sq_right(s1), [])]
    vpairs = [(s1, s2) for s1 in range(ns)
              for s2 in by_top.get(d.sq_bottom(s1), [])]
    for s1, s2 in hpairs:
        if (s1, s2) not in d._hs:
            rep.add("hcomp-sq-total", left=CellRef(SQUARE, s1), right=CellRef(SQUARE, s2))
            continue
        s = d._hs[(s1, s2)]
        want = (d.hcomp_h(d.sq_top(s1), d.sq_top(s2)),
                d.hcomp_h(d.sq_bottom(s1), d.sq_bottom(s2)),
                d.sq_left(s1), d.sq_right(s2))
        if d.sq_bounds[s] != want:
            rep.add("hcomp-sq-boundary", left=CellRef(SQUARE, s1), right=CellRef(SQUARE, s2))
    for s1, s2 in vpairs:
        if (s1, s2) not in d._vs:
            rep.add("vcomp-sq-total", top=CellRef(SQUARE, s1), bottom=CellRef(SQUARE, s2))
            continue
        s = d._vs[(s1, s2)]
        want = (d.sq_top(s1), d.sq_bottom(s2),
                d.vcomp_v(d.sq_left(s1), d.sq_left(s2)),
                d.vcomp_v(d.sq_right(s1), d.sq_right(s2)))
        if d.sq_bounds[s] != want:
            rep.add("vcomp-sq-boundary", top=CellRef(SQUARE, s1), bottom=CellRef(SQUARE, s2))
    if not rep.passed:
        return
    for s in range(ns):
        if d.vcomp_sq(d.sq_v_id(d.sq_top(s)), s) != s \
                or d.vcomp_sq(s, d.sq_v_id(d.sq_bottom(s))) != s:
            rep.add("vcomp-sq-unit", square=CellRef(SQUARE, s))
        if d.hcomp_sq(d.sq_h_id(d.sq_left(s)), s) != s \
                or d.hcomp_sq(s, d.sq_h_id(d.sq_right(s))) != s:
            rep.add("hcomp-sq-unit", square=CellRef(SQUARE, s))
    rng = random.Random(seed)

    def triples(pairs, extend):
        """All (s1, s2, s3) with s3 extending the pair, or a seeded sample."""
        biggest = max((len(g) for g in by_left.values()), default=0)
        biggest = max(biggest, max((len(g) for g in by_top.values()), default=0))
        if max_checks is None or len(pairs) * biggest <= max_checks:
            for s1, s2 in pairs:
                for s3 in extend(s2):
                    yield (s1, s2, s3)
            return
        for _ in range(max_checks):
            s1, s2 = pairs[rng.randrange(len(pairs))]
            grp = extend(s2)
            if grp:
                yield (s1, s2, grp[rng.randrange(len(grp))])

    for s1, s2, s3 in triples(hpairs, lambda s: by_left.get(d.sq_right(s), [])):
        if d.hcomp_sq(d.hcomp_sq(s1, s2), s3) != d.hcomp_sq(s1, d.hcomp_sq(s2, s3)):
            rep.add("hcomp-sq-assoc", first=CellRef(SQUARE, s1),
                    second=CellRef(SQUARE, s2), third=CellRef(SQUARE, s3))
    for s1, s2, s3 in triples(vpairs, lambda s: by_top.get(d.sq_bottom(s), [])):
        if d.vcomp_sq(d.vcomp_sq(s1, s2), s3) != d.vcomp_sq(s1, d.vcomp_sq(s2, s3)):
            rep.add("vcomp-sq-assoc", first=CellRef(SQUARE, s1),
                    second=CellRef(SQUARE, s2), third=CellRef(SQUARE, s3))
    for f in range(d.n_hcells):
        for g in range(d.n_hcells):
            if d.htgt[f] == d.hsrc[g]:
                if d.hcomp_sq(d.sq_v_id(f), d.sq_v_id(g)) != d.sq_v_id(d.hcomp_h(f, g)):
                    rep.add("sq-v-id-functorial", first=CellRef(HCELL, f),
                            second=CellRef(HCELL, g))
    for u in range(d.n_vcells):
        for v in range(d.n_vcells):
            if d.vtgt[u] == d.vsrc[v]:
                if d.vcomp_sq(d.sq_h_id(u), d.sq_h_id(v)) != d.sq_h_id(d.vcomp_v(u, v)):
                    rep.add("sq-h-id-functorial", first=CellRef(VCELL, u),
                            second=CellRef(VCELL, v))
    by_tl = {}
    for s in range(ns):
        by_tl.setdefault((d.sq_top(s), d.sq_left(s)), []).append(s)

    def grids():
        big_top = max((len(g) for g in by_top.values()), default=0)
        big_tl = max((len(g) for g in by_tl.values()), default=0)
        if max_checks is None or len(hpairs) * big_top * big_tl <= max_checks:
            for a, b in hpairs:
                for c in by_top.get(d.sq_bottom(a), []):
                    for e in by_tl.get((d.sq_bottom(b), d.sq_right(c)), []):
                        yield (a, b, c, e)
            return
        for _ in range(max_checks):
            a, b = hpairs[rng.randrange(len(hpairs))]
            cs = by_top.get(d.sq_bottom(a), [])
            if not cs:
                continue
            c = cs[rng.randrange(len(cs))]
            es = by_tl.get((d.sq_bottom(b), d.sq_right(c)), [])
            if es:
                yield (a, b, c, es[rng.randrange(len(es))])

    for a, b, c, e in grids():
        lhs = d.vcomp_sq(d.hcomp_sq(a, b), d.hcomp_sq(c, e))
        rhs = d.hcomp_sq(d.vcomp_sq(a, c), d.vcomp_sq(b, e))
        if lhs != rhs:
            rep.add("interchange", tl=CellRef(SQUARE, a), tr=CellRef(SQUARE, b),
                    bl=CellRef(SQUARE, c), br=CellRef(SQUARE, e))


# -- product ----------------------------------------------------------------


def dc_product(d1, d2, square_cap=250000):
    """Cartesian product of double categories, cells componentwise."""
    p = DoubleCat("%sx%s" % (d1.name, d2.name))
    for a1 in range(d1.n_objects):
        for a2 in range(d2.n_objects):
            p.add_object("(%s,%s)" % (d1.objects[a1], d2.objects[a2]))
    no2 = d2.n_objects

    def obj(a1, a2):
        return a1 * no2 + a2

    nh2, nv2 = d2.n_hcells, d2.n_vcells
    for f1 in range(d1.n_hcells):
        for f2 in range(nh2):
            p.add_hcell("(%s,%s)" % (d1.hnames[f1], d2.hnames[f2]),
                        obj(d1.hsrc[f1], d2.hsrc[f2]),
                        obj(d1.htgt[f1], d2.htgt[f2]))
    for u1 in range(d1.n_vcells):
        for u2 in range(nv2):
            p.add_vcell("(%s,%s)" % (d1.vnames[u1], d2.vnames[u2]),
                        obj(d1.vsrc[u1], d2.vsrc[u2]),
                        obj(d1.vtgt[u1], d2.vtgt[u2]))
    for a1 in range(d1.n_objects):
        for a2 in range(d2.n_objects):
            p._h_id[obj(a1, a2)] = d1.h_id(a1) * nh2 + d2.h_id(a2)
            p._v_id[obj(a1, a2)] = d1.v_id(a1) * nv2 + d2.v_id(a2)
    p.hcomp_h_fn = lambda f, g: (
        d1.hcomp_h(f // nh2, g // nh2) * nh2 + d2.hcomp_h(f % nh2, g % nh2))
    p.vcomp_v_fn = lambda u, v: (
        d1.vcomp_v(u // nv2, v // nv2) * nv2 + d2.vcomp_v(u % nv2, v % nv2))
    if d1.flat and d2.flat:
        def pred(top, bottom, left, right):
            return (d1.square_exists(top // nh2, bottom // nh2, left // nv2, right // nv2)
                    and d2.square_exists(top % nh2, bottom % nh2, left % nv2, right % nv2))
        p.set_flat(pred)
        return p
    if d1.flat or d2.flat:
        raise MalformedTables(
            "product needs both factors explicit or both flat; materialize first")
    if d1.n_squares * d2.n_squares > square_cap:
        raise SizeBound("product square count above cap")
    ns2 = d2.n_squares
    for s1 in range(d1.n_squares):
        for s2 in range(ns2):
            t1, b1, l1, r1 = d1.sq_bounds[s1]
            t2, b2, l2, r2 = d2.sq_bounds[s2]
            p.add_square("(%s,%s)" % (d1.sq_names[s1], d2.sq_names[s2]),
                         t1 * nh2 + t2, b1 * nh2 + b2, l1 * nv2 + l2, r1 * nv2 + r2)
    for (a1, b1), c1 in d1._hs.items():
        for (a2, b2), c2 in d2._hs.items():
            p.set_hs(a1 * ns2 + a2, b1 * ns2 + b2, c1 * ns2 + c2)
    for (a1, b1), c1 in d1._vs.items():
        for (a2, b2), c2 in d2._vs.items():
            p.set_vs(a1 * ns2 + a2, b1 * ns2 + b2, c1 * ns2 + c2)
    for u1, s1 in d1._sqhid.items():
        for u2, s2 in d2._sqhid.items():
            p.set_sq_h_id(u1 * nv2 + u2, s1 * ns2 + s2)
    for f1, s1 in d1._sqvid.items():
        for f2, s2 in d2._sqvid.items():
            p.set_sq_v_id(f1 * nh2 + f2, s1 * ns2 + s2)
    return p


def explicit_clone(d, limit=None):
    """Explicit-table copy of a flat double category, with identical ids.

    Products need both factors on the same backend; cloning the flat one
    keeps every cell id stable, so structures indexed against the original
    keep working against the clone and its products.
    """
    if not d.flat:
        return d
    d.materialize_flat_squares(limit)
    hs, vs = {}, {}
    while True:
        n = d.n_squares
        for s1 in range(n):
            for s2 in range(n):
                if (s1, s2) not in hs and d.sq_right(s1) == d.sq_left(s2):
                    hs[(s1, s2)] = d.hcomp_sq(s1, s2)
                if (s1, s2) not in vs and d.sq_bottom(s1) == d.sq_top(s2):
                    vs[(s1, s2)] = d.vcomp_sq(s1, s2)
        if d.n_squares == n:
            break
    e = DoubleCat(d.name)
    e.objects = list(d.objects)
    e.hnames, e.hsrc, e.htgt = list(d.hnames), list(d.hsrc), list(d.htgt)
    e.vnames, e.vsrc, e.vtgt = list(d.vnames), list(d.vsrc), list(d.vtgt)
    e._h_id, e._v_id = list(d._h_id), list(d._v_id)
    e.hcomp_h_fn = d.hcomp_h
    e.vcomp_v_fn = d.vcomp_v
    for s in range(d.n_squares):
        e.add_square(d.sq_names[s], *d.sq_bounds[s])
    e._hs.update(hs)
    e._vs.update(vs)
    for f in range(d.n_hcells):
        e.set_sq_v_id(f, d.sq_v_id(f))
    for u in range(d.n_vcells):
        e.set_sq_h_id(u, d.sq_h_id(u))
    return e


def product_projections(d1, d2):
    """Index maps from product cells back to their components."""
    nh2, nv2, no2, ns2 = d2.n_hcells, d2.n_vcells, d2.n_objects, d2.n_squares

    def proj1(kind, idx):
        div = {OBJECT: no2, HCELL: nh2, VCELL: nv2, SQUARE: ns2}[kind]
        return idx // div

    def proj2(kind, idx):
        div = {OBJECT: no2, HCELL: nh2, VCELL: nv2, SQUARE: ns2}[kind]
        return idx % div

    return proj1, proj2


# -- pasting terms ----------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class HComp:
    left: object
    right: object


@dataclass(frozen=True)
class VComp:
    top: object
    bottom: object


@dataclass(frozen=True)
class HId:
    of: object


@dataclass(frozen=True)
class VId:
    of: object


PastingTerm = (Gen, HComp, VComp, HId, VId)


def eval_pasting(d, term, env):
    """Evaluate a pasting term to a CellRef of d under a generator assignment.

    HComp/VComp act on 1-cells or on squares; HId turns an object into its
    horizontal identity 1-cell and a 1v-cell u into Id^u; VId turns an object
    into its vertical identity 1-cell and a 1h-cell f into Id_f.
    """
    if isinstance(term, Gen):
        cell = env[term.name]
        if not isinstance(cell, CellRef):
            raise BoundaryMismatch("environment values must be CellRefs")
        return cell
    if isinstance(term, HId):
        cell = eval_pasting(d, term.of, env)
        if cell.kind == OBJECT:
            return CellRef(HCELL, d.h_id(cell.id))
        if cell.kind == VCELL:
            return CellRef(SQUARE, d.sq_h_id(cell.id))
        raise BoundaryMismatch("HId expects an object or a 1v-cell")
    if isinstance(term, VId):
        cell = eval_pasting(d, term.of, env)
        if cell.kind == OBJECT:
            return CellRef(VCELL, d.v_id(cell.id))
        if cell.kind == HCELL:
            return CellRef(SQUARE, d.sq_v_id(cell.id))
        raise BoundaryMismatch("VId expects an object or a 1h-cell")
    if isinstance(term, HComp):
        a = eval_pasting(d, term.left, env)
        b = eval_pasting(d, term.right, env)
        if a.kind == HCELL and b.kind == HCELL:
            return CellRef(HCELL, d.hcomp_h(a.id, b.id))
        if a.kind == SQUARE and b.kind == SQUARE:
            return CellRef(SQUARE, d.hcomp_sq(a.id, b.id))
        raise BoundaryMismatch("HComp expects two 1h-cells or two squares")
    if isinstance(term, VComp):
        a = eval_pasting(d, term.top, env)
        b = eval_pasting(d, term.bottom, env)
        if a.kind == VCELL and b.kind == VCELL:
            return CellRef(VCELL, d.vcomp_v(a.id, b.id))
        if a.kind == SQUARE and b.kind == SQUARE:
            return CellRef(SQUARE, d.vcomp_sq(a.id, b.id))
        raise BoundaryMismatch("VComp expects two 1v-cells or two squares")
    raise BoundaryMismatch("not a pasting term: %r" % (term,))


# -- fixtures ---------------------------------------------------------------


def trivial():
    """The terminal double category: one cell of each kind."""
    d = DoubleCat("trivial")
    a = d.add_object("*")
    d.add_hcell("1_*", a, a, identity_of=a)
    d.add_vcell("1^*", a, a, identity_of=a)
    d.set_hh(0, 0, 0)
    d.set_vv(0, 0, 0)
    d.set_flat(lambda t, b, l, r: True)
    return d


def _identity_square_closure(d):
    """Explicit backend: add identity squares only and their composites."""
    for f in range(d.n_hcells):
        s = d.add_square("Id_%s" % d.hnames[f], f, f,
                         d.v_id(d.hsrc[f]), d.v_id(d.htgt[f]))
        d.set_sq_v_id(f, s)
    for u in range(d.n_vcells):
        if d.is_v_identity(u):
            d.set_sq_h_id(u, d.sq_v_id(d.h_id(d.vsrc[u])))
        else:
            s = d.add_square("Id^%s" % d.vnames[u], d.h_id(d.vsrc[u]),
                             d.h_id(d.vtgt[u]), u, u)
            d.set_sq_h_id(u, s)
    _derive_flat_tables(d)


def _derive_flat_tables(d):
    """Fill explicit square tables by boundary lookup (flat data only)."""
    ns = d.n_squares
    for s1 in range(ns):
        for s2 in range(ns):
            if d.sq_right(s1) == d.sq_left(s2):
                want = (d.hcomp_h(d.sq_top(s1), d.sq_top(s2)),
                        d.hcomp_h(d.sq_bottom(s1), d.sq_bottom(s2)),
                        d.sq_left(s1), d.sq_right(s2))
                hit = d._sq_by_bound.get(want)
                if hit is None or len(hit) != 1:
                    raise MalformedTables("flat table derivation failed")
                d.set_hs(s1, s2, hit[0])
            if d.sq_bottom(s1) == d.sq_top(s2):
                want = (d.sq_top(s1), d.sq_bottom(s2),
                        d.vcomp_v(d.sq_left(s1), d.sq_left(s2)),
                        d.vcomp_v(d.sq_right(s1), d.sq_right(s2)))
                hit = d._sq_by_bound.get(want)
                if hit is None or len(hit) != 1:
                    raise MalformedTables("flat table derivation failed")
                d.set_vs(s1, s2, hit[0])


def walk_h():
    """Two objects, one free 1h-cell, identities elsewhere."""
    d = DoubleCat("walk_h")
    a = d.add_object("0")
    b = d.add_object("1")
    ia = d.add_hcell("1_0", a, a, identity_of=a)
    ib = d.add_hcell("1_1", b, b, identity_of=b)
    f = d.add_hcell("a", a, b)
    d.add_vcell("1^0", a, a, identity_of=a)
    d.add_vcell("1^1", b, b, identity_of=b)
    for x, y, z in [(ia, ia, ia), (ib, ib, ib), (ia, f, f), (f, ib, f)]:
        d.set_hh(x, y, z)
    d.set_vv(0, 0, 0)
    d.set_vv(1, 1, 1)
    _identity_square_closure(d)
    d.flat = False
    return d


def walk_v():
    """Two objects, one free 1v-cell, identities elsewhere."""
    d = DoubleCat("walk_v")
    a = d.add_object("0")
    b = d.add_object("1")
    d.add_hcell("1_0", a, a, identity_of=a)
    d.add_hcell("1_1", b, b, identity_of=b)
    ia = d.add_vcell("1^0", a, a, identity_of=a)
    ib = d.add_vcell("1^1", b, b, identity_of=b)
    u = d.add_vcell("x", a, b)
    d.set_hh(0, 0, 0)
    d.set_hh(1, 1, 1)
    for x, y, z in [(ia, ia, ia), (ib, ib, ib), (ia, u, u), (u, ib, u)]:
        d.set_vv(x, y, z)
    _identity_square_closure(d)
    return d


def walk_sq():
    """One free square spanning four objects, identities elsewhere."""
    d = DoubleCat("walk_sq")
    objs = {}
    for nm in ["00", "01", "10", "11"]:
        objs[nm] = d.add_object(nm)
    hid = {}
    for nm, o in objs.items():
        hid[nm] = d.add_hcell("1_%s" % nm, o, o, identity_of=o)
    t = d.add_hcell("t", objs["00"], objs["01"])
    b = d.add_hcell("b", objs["10"], objs["11"])
    vid = {}
    for nm, o in objs.items():
        vid[nm] = d.add_vcell("1^%s" % nm, o, o, identity_of=o)
    l = d.add_vcell("l", objs["00"], objs["10"])
    r = d.add_vcell("r", objs["01"], objs["11"])
    for f in range(d.n_hcells):
        d.set_hh(d.h_id(d.hsrc[f]), f, f)
        if not d.is_h_identity(f):
            d.set_hh(f, d.h_id(d.htgt[f]), f)
    for u in range(d.n_vcells):
        d.set_vv(d.v_id(d.vsrc[u]), u, u)
        if not d.is_v_identity(u):
            d.set_vv(u, d.v_id(d.vtgt[u]), u)
    for f in range(d.n_hcells):
        s = d.add_square("Id_%s" % d.hnames[f], f, f,
                         d.v_id(d.hsrc[f]), d.v_id(d.htgt[f]))
        d.set_sq_v_id(f, s)
    for u in [l, r]:
        s = d.add_square("Id^%s" % d.vnames[u], d.h_id(d.vsrc[u]),
                         d.h_id(d.vtgt[u]), u, u)
        d.set_sq_h_id(u, s)
    for nm in objs:
        d.set_sq_h_id(vid[nm], d.sq_v_id(hid[nm]))
    d.add_square("s", t, b, l, r)
    _derive_flat_tables(d)
    return d


def parity():
    """A non-flat fixture: one object, Z2 worth of 1-cells each way, and two
    squares on every boundary distinguished by a sign that adds under both
    compositions.  Every globular square is invertible, which makes this the
    workhorse for pseudo-functor and mutation tests."""
    d = DoubleCat("parity")
    a = d.add_object("*")
    h0 = d.add_hcell("1_*", a, a, identity_of=a)
    h1 = d.add_hcell("h", a, a)
    v0 = d.add_vcell("1^*", a, a, identity_of=a)
    v1 = d.add_vcell("v", a, a)
    for x in (h0, h1):
        for y in (h0, h1):
            d.set_hh(x, y, x ^ y)
    for x in (v0, v1):
        for y in (v0, v1):
            d.set_vv(x, y, x ^ y)
    idx = {}
    for top in (h0, h1):
        for bottom in (h0, h1):
            for left in (v0, v1):
                for right in (v0, v1):
                    for sign in (0, 1):
                        nm = "s[%d%d%d%d:%d]" % (top, bottom, left, right, sign)
                        s = d.add_square(nm, top, bottom, left, right)
                        idx[(top, bottom, left, right, sign)] = s
    sign_of = {s: k[4] for k, s in idx.items()}
    for s1 in range(d.n_squares):
        t1, b1, l1, r1 = d.sq_bounds[s1]
        for s2 in range(d.n_squares):
            t2, b2, l2, r2 = d.sq_bounds[s2]
            sgn = sign_of[s1] ^ sign_of[s2]
            if r1 == l2:
                d.set_hs(s1, s2, idx[(t1 ^ t2, b1 ^ b2, l1, r2, sgn)])
            if b1 == t2:
                d.set_vs(s1, s2, idx[(t1, b2, l1 ^ l2, r1 ^ r2, sgn)])
    for f in (h0, h1):
        d.set_sq_v_id(f, idx[(f, f, v0, v0, 0)])
    for u in (v0, v1):
        d.set_sq_h_id(u, idx[(h0, h0, u, u, 0)])
    d.parity_index = idx
    d.parity_sign = sign_of
    return d


def _enum_matrices(a, b):
    """All Boolean matrices X->Y with |X|=a, |Y|=b, as frozensets of (y, x)."""
    cells = [(y, x) for y in range(b) for x in range(a)]
    out = []
    for bits in range(1 << len(cells)):
        out.append(frozenset(c for i, c in enumerate(cells) if bits >> i & 1))
    return out


def _enum_functions(a, b):
    if a == 0:
        return [()]
    if b == 0:
        return []
    return list(iproduct(range(b), repeat=a))


def bool_matrix_double_category(max_size):
    """Boolean matrices: objects are index sets of size 0..max_size, 1h-cells
    are Boolean matrices with matrix product, 1v-cells are functions, and a
    square exists iff M(y,x)=1 implies N(g y, f x)=1.  Flat."""
    if max_size > 3:
        raise SizeBound("bool_matrix_double_category supports max_size <= 3")
    d = DoubleCat("bool%d" % max_size)
    sizes = list(range(max_size + 1))
    for n in sizes:
        d.add_object(str(n))
    d.hmat = []
    hindex = {}
    for a in sizes:
        for b in sizes:
            for m in _enum_matrices(a, b):
                ident = (a == b and m == frozenset((x, x) for x in range(a)))
                f = d.add_hcell("M%d" % d.n_hcells, a, b,
                                identity_of=a if ident else None)
                d.hmat.append(m)
                hindex[(a, b, m)] = f
    d.hindex = hindex
    d.vfun = []
    vindex = {}
    for a in sizes:
        for b in sizes:
            for fn in _enum_functions(a, b):
                ident = (a == b and fn == tuple(range(a)))
                u = d.add_vcell("f%d" % d.n_vcells, a, b,
                                identity_of=a if ident else None)
                d.vfun.append(fn)
                vindex[(a, b, fn)] = u
    d.vindex = vindex

    def hh(f, g):
        a, b = d.hsrc[f], d.htgt[f]
        c = d.htgt[g]
        m, n = d.hmat[f], d.hmat[g]
        out = frozenset((z, x) for z in range(c) for x in range(a)
                        if any((y, x) in m and (z, y) in n for y in range(b)))
        return hindex[(a, c, out)]

    def vv(u, v):
        a = d.vsrc[u]
        c = d.vtgt[v]
        fu, fv = d.vfun[u], d.vfun[v]
        return vindex[(a, c, tuple(fv[fu[x]] for x in range(a)))]

    d.hcomp_h_fn = hh
    d.vcomp_v_fn = vv

    def pred(top, bottom, left, right):
        m, n = d.hmat[top], d.hmat[bottom]
        f, g = d.vfun[left], d.vfun[right]
        return all((g[y], f[x]) in n for (y, x) in m)

    d.set_flat(pred)
    return d


FIXTURES = {
    "trivial": trivial,
    "walk_h": walk_h,
    "walk_v": walk_v,
    "walk_sq": walk_sq,
    "parity": parity,
    "bool1": lambda: bool_matrix_double_category(1),
    "bool2": lambda: bool_matrix_double_category(2),
}


# -- JSON format ------------------------------------------------------------


def to_json(d):
    """Serialize to the presentation format (flat squares as boundary list)."""
    doc = {
        "objects": list(d.objects),
        "hcells": [{"name": d.hnames[f], "src": d.objects[d.hsrc[f]],
                    "tgt": d.objects[d.htgt[f]]} for f in range(d.n_hcells)],
        "vcells": [{"name": d.vnames[u], "src": d.objects[d.vsrc[u]],
                    "tgt": d.objects[d.vtgt[u]]} for u in range(d.n_vcells)],
        "flat": d.flat,
        "hcomp_h": [[d.hnames[f], d.hnames[g], d.hnames[h]]
                    for (f, g), h in sorted(d._hh.items())],
        "vcomp_v": [[d.vnames[u], d.vnames[v], d.vnames[w]]
                    for (u, v), w in sorted(d._vv.items())],
    }
    if d.flat:
        bounds = list(d.iter_flat_boundaries())
        doc["squares"] = [{"top": d.hnames[t], "bottom": d.hnames[b],
                           "left": d.vnames[l], "right": d.vnames[r]}
                          for (t, b, l, r) in bounds]
    else:
        doc["squares"] = [{"name": d.sq_names[s], "top": d.hnames[d.sq_top(s)],
                           "bottom": d.hnames[d.sq_bottom(s)],
                           "left": d.vnames[d.sq_left(s)],
                           "right": d.vnames[d.sq_right(s)]}
                          for s in range(d.n_squares)]
        doc["hcomp_sq"] = [[d.sq_names[a], d.sq_names[b], d.sq_names[c]]
                           for (a, b), c in sorted(d._hs.items())]
        doc["vcomp_sq"] = [[d.sq_names[a], d.sq_names[b], d.sq_names[c]]
                           for (a, b), c in sorted(d._vs.items())]
        doc["sq_v_id"] = {d.hnames[f]: d.sq_names[s] for f, s in d._sqvid.items()}
        doc["sq_h_id"] = {d.vnames[u]: d.sq_names[s] for u, s in d._sqhid.items()}
    return doc


def from_json(doc):
    """Build a DoubleCat from the presentation format.

    Identities named ``1_<obj>`` / ``1^<obj>`` / ``Id_<h>`` / ``Id^<v>`` are
    recognized; missing identity 1-cells and, in the explicit backend,
    missing identity squares are generated.
    """
    d = DoubleCat("json")
    oid = {}
    for nm in doc["objects"]:
        oid[nm] = d.add_object(nm)
    hid = {}
    for h in doc.get("hcells", []):
        ident = oid[h["src"]] if h["name"] == "1_%s" % h["src"] \
            and h["src"] == h["tgt"] else None
        hid[h["name"]] = d.add_hcell(h["name"], oid[h["src"]], oid[h["tgt"]],
                                     identity_of=ident)
    vid = {}
    for v in doc.get("vcells", []):
        ident = oid[v["src"]] if v["name"] == "1^%s" % v["src"] \
            and v["src"] == v["tgt"] else None
        vid[v["name"]] = d.add_vcell(v["name"], oid[v["src"]], oid[v["tgt"]],
                                     identity_of=ident)
    for nm, o in oid.items():
        if d._h_id[o] is None:
            hid["1_%s" % nm] = d.add_hcell("1_%s" % nm, o, o, identity_of=o)
        if d._v_id[o] is None:
            vid["1^%s" % nm] = d.add_vcell("1^%s" % nm, o, o, identity_of=o)
    for f, g, h in doc.get("hcomp_h", []):
        d.set_hh(hid[f], hid[g], hid[h])
    for u, v, w in doc.get("vcomp_v", []):
        d.set_vv(vid[u], vid[v], vid[w])
    for o in range(d.n_objects):
        d.set_hh(d.h_id(o), d.h_id(o), d.h_id(o))
        d.set_vv(d.v_id(o), d.v_id(o), d.v_id(o))
    for f in range(d.n_hcells):
        d.set_hh(d.h_id(d.hsrc[f]), f, f)
        d.set_hh(f, d.h_id(d.htgt[f]), f)
    for u in range(d.n_vcells):
        d.set_vv(d.v_id(d.vsrc[u]), u, u)
        d.set_vv(u, d.v_id(d.vtgt[u]), u)
    if doc.get("flat", False):
        bounds = set()
        for s in doc.get("squares", []):
            bounds.add((hid[s["top"]], hid[s["bottom"]],
                        vid[s["left"]], vid[s["right"]]))
        for f in range(d.n_hcells):
            bounds.add((f, f, d.v_id(d.hsrc[f]), d.v_id(d.htgt[f])))
        for u in range(d.n_vcells):
            bounds.add((d.h_id(d.vsrc[u]), d.h_id(d.vtgt[u]), u, u))
        d.set_flat(lambda t, b, l, r: (t, b, l, r) in bounds)
        return d
    sid = {}
    for s in doc.get("squares", []):
        sid[s["name"]] = d.add_square(s["name"], hid[s["top"]], hid[s["bottom"]],
                                      vid[s["left"]], vid[s["right"]])
    svid = doc.get("sq_v_id", {})
    shid = doc.get("sq_h_id", {})
    for f in range(d.n_hcells):
        nm = svid.get(d.hnames[f], "Id_%s" % d.hnames[f])
        if nm not in sid:
            sid[nm] = d.add_square(nm, f, f, d.v_id(d.hsrc[f]), d.v_id(d.htgt[f]))
        d.set_sq_v_id(f, sid[nm])
    for u in range(d.n_vcells):
        nm = shid.get(d.vnames[u])
        if nm is None and d.is_v_identity(u):
            d.set_sq_h_id(u, d.sq_v_id(d.h_id(d.vsrc[u])))
            continue
        if nm is None:
            nm = "Id^%s" % d.vnames[u]
        if nm not in sid:
            sid[nm] = d.add_square(nm, d.h_id(d.vsrc[u]), d.h_id(d.vtgt[u]), u, u)
        d.set_sq_h_id(u, sid[nm])
    for a, b, c in doc.get("hcomp_sq", []):
        d.set_hs(sid[a], sid[b], sid[c])
    for a, b, c in doc.get("vcomp_sq", []):
        d.set_vs(sid[a], sid[b], sid[c])
    _fill_identity_square_composites(d)
    return d


def _fill_identity_square_composites(d):
    """Complete square tables on pairs involving identity squares."""
    for s in range(d.n_squares):
        d.set_vs(d.sq_v_id(d.sq_top(s)), s, s)
        d.set_vs(s, d.sq_v_id(d.sq_bottom(s)), s)
        d.set_hs(d.sq_h_id(d.sq_left(s)), s, s)
        d.set_hs(s, d.sq_h_id(d.sq_right(s)), s)


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(json.load(fh))


def dump_json(d, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json(d), fh, indent=2)

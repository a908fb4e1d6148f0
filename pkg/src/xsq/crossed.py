"""Crossed modules and crossed squares presented on polynomial subquotients.

A corner of a square is an ideal of the base ring; the top object is a
subquotient I/P of a possibly larger ambient ring.  Equality of elements is
decided by normal forms against the reduced basis of the relation ideal; all
actions are realized as ambient multiplication through a declared lift of
the base ring.  Verification reports list one entry per axiom instance with
the offending generator pair and its nonzero normal form on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import (Ideal, ideal_intersect, subquotient_dims,
                       affine_hilbert)
from .rings import PolyRing, RingHom
from .simplicial import peiffer_P1, peiffer_P2, _lift


class Subquotient:
    """Elements of numer/rels, represented by ambient polynomials."""

    def __init__(self, ambient, numer, rels, gens=None, check=True):
        self.ambient = ambient
        self.numer = numer
        self.rels = rels
        self.gens = tuple(gens) if gens is not None else numer.gens
        if check:
            for g in rels.gens:
                if not numer.member(g):
                    raise ValueError(
                        "relation %s is not a member of the numerator" % g)

    def nf(self, p):
        return self.rels.normal_form(p)

    def contains(self, p):
        return self.numer.member(p)

    def is_zero_class(self, p):
        return self.rels.member(p)

    def same_class(self, p, q):
        return self.rels.member(p - q)

    def dims(self, D, budget=None):
        if self.numer.is_zero():
            from .groebner import GradedDims
            return GradedDims((0,) * (D + 1))
        return subquotient_dims(self.numer, self.rels, D, budget=budget)

    def __repr__(self):
        return "Subquotient(gens=%s; rels=%d)" % (
            [str(g) for g in self.gens], len(self.rels.gens))


class QuotientRing:
    """ring/ideal with its canonical reduced basis."""

    def __init__(self, ring, ideal):
        self.ring = ring
        self.ideal = ideal
        self.basis = ideal.groebner()

    def nf(self, p):
        return self.ideal.normal_form(p)

    def dims(self, D):
        return affine_hilbert(self.ideal, D)

    def same_presentation(self, other):
        return self.ring == other.ring and self.basis == other.basis

    def __repr__(self):
        return "QuotientRing(%s / (%s))" % (
            ", ".join(self.ring.vars), ", ".join(str(b) for b in self.basis))


@dataclass
class CrossedModule:
    """Boundary top -> base with the action given by multiplication through
    the declared embedding of the base into the top's ambient ring."""

    top: Subquotient
    base: PolyRing
    bnd: RingHom          # top.ambient -> base
    embed: RingHom        # base -> top.ambient
    label: str = ""

    def boundary_of(self, p):
        return self.bnd(p)

    def act(self, r, c):
        return self.embed(r) * c


@dataclass
class CheckResult:
    check: str
    instance: str
    ok: bool
    witness: str
    informational: bool = False

    def to_obj(self):
        return {"check": self.check, "instance": self.instance,
                "status": "pass" if self.ok else "fail",
                "witness": self.witness,
                "informational": self.informational}


@dataclass
class VerifyReport:
    label: str
    items: list = field(default_factory=list)

    def add(self, check, instance, residue, informational=False):
        ok = residue.is_zero()
        self.items.append(CheckResult(check, instance, ok,
                                      "0" if ok else str(residue),
                                      informational))

    def add_bool(self, check, instance, ok, witness="", informational=False):
        self.items.append(CheckResult(check, instance, ok,
                                      witness if not ok else "0",
                                      informational))

    @property
    def ok(self):
        return all(i.ok for i in self.items if not i.informational)

    def failures(self):
        return [i for i in self.items if not i.ok and not i.informational]

    def to_obj(self):
        return {"label": self.label,
                "ok": self.ok,
                "items": [i.to_obj() for i in self.items]}

    def to_text(self):
        lines = ["verification of %s: %s"
                 % (self.label, "pass" if self.ok else "FAIL")]
        for i in self.items:
            tag = "pass" if i.ok else "FAIL"
            if i.informational:
                tag = "info(%s)" % ("holds" if i.ok else "differs")
            lines.append("  [%s] %s on %s%s"
                         % (tag, i.check, i.instance,
                            "" if i.ok else ": residue " + i.witness))
        return "\n".join(lines)


def verify_xmod(cm, include_cm2=True):
    """First and (optionally) second crossed-module axioms on generators."""
    rep = VerifyReport(cm.label or "crossed module")
    base_vars = [cm.base.var(v) for v in cm.base.vars]
    for g in cm.top.rels.gens:
        rep.add("boundary-kills-relations", str(g), cm.bnd(g))
    for r in base_vars:
        defect = cm.bnd(cm.embed(r)) - r
        for c in cm.top.gens:
            rep.add("CM1", "r=%s, c=%s" % (r, c), defect * cm.bnd(c))
    if include_cm2:
        for c in cm.top.gens:
            for c2 in cm.top.gens:
                residue = cm.top.nf(cm.embed(cm.bnd(c)) * c2 - c * c2)
                rep.add("CM2", "c=%s, c'=%s" % (c, c2), residue)
    return rep


@dataclass
class CrossedSquare:
    """Corners: top L (subquotient), left M and right N (ideals of the
    base), the base ring itself.  Both boundary maps of the top corner are
    realized by the single ambient map ``bnd``; ``lift`` realizes the base
    action on the top; ``pair`` is the connecting bilinear rule M x N -> L;
    ``top_mul`` is the same-corner pairing on L (ambient product unless a
    negative control replaces it)."""

    top: Subquotient
    left: Subquotient
    right: Subquotient
    base: PolyRing
    bnd: RingHom
    lift: RingHom
    pair: object
    top_mul: object = None
    label: str = ""

    def __post_init__(self):
        if self.left.ambient != self.base or self.right.ambient != self.base:
            raise ValueError("corner ideals must live in the base ring")
        if self.top_mul is None:
            self.top_mul = lambda a, b: a * b

    def h(self, m, n):
        return self.pair(m, n)


def h_eval(square, m, nbar):
    """Class of h(m, nbar) in the top corner; arguments are checked for
    membership in their corners."""
    if not square.left.contains(m):
        raise ValueError("first argument %s is not in the left corner" % m)
    if not square.right.contains(nbar):
        raise ValueError("second argument %s is not in the right corner" % nbar)
    return square.top.nf(square.pair(m, nbar))


def verify_square(square, scalars=(2, -3)):
    """All ten crossed-square axioms specialized to generator instances.

    The associativity variant that repeats the middle argument is
    evaluated as well and reported informationally, never as a failure.
    """
    rep = VerifyReport(square.label or "crossed square")
    L, M, N = square.top, square.left, square.right
    bnd, lft, pair = square.bnd, square.lift, square.pair
    mgens, ngens, lgens = M.gens, N.gens, L.gens
    zero = square.base.zero

    # axiom 1: maps indexed off a corner's support act as the identity;
    # this holds by construction of the representation
    rep.add("ax1-identity-conventions", "structural", zero)

    # axiom 2: the square commutes and boundaries land where they must
    for l in lgens:
        img = bnd(l)
        rep.add_bool("ax2-boundary-into-left", str(l), M.contains(img),
                     witness=str(img))
        rep.add_bool("ax2-boundary-into-right", str(l), N.contains(img),
                     witness=str(img))
    for g in L.rels.gens:
        rep.add("ax2-boundary-kills-relations", str(g), bnd(g))

    # axiom 3: boundary of a pairing is the product of the images
    for m in mgens:
        for n in ngens:
            rep.add("ax3", "m=%s, n=%s" % (m, n), bnd(pair(m, n)) - m * n)

    # axiom 4: pairing against a boundary equals the multiplication action
    for l in lgens:
        img = bnd(l)
        for m in mgens:
            rep.add("ax4-left", "m=%s, l=%s" % (m, l),
                    L.nf(pair(m, img) - lft(m) * l))
        for n in ngens:
            rep.add("ax4-right", "n=%s, l=%s" % (n, l),
                    L.nf(pair(img, n) - lft(n) * l))
        for l2 in lgens:
            rep.add("ax4-top", "l=%s, l'=%s" % (l, l2),
                    L.nf(l * l2 - lft(img) * l2))

    # axiom 5: the same-corner pairing is the product, including the
    # composite through both boundary maps of the top corner
    for i, l in enumerate(lgens):
        for l2 in lgens[i:]:
            rep.add("ax5-top-pairing", "l=%s, l'=%s" % (l, l2),
                    L.nf(square.top_mul(l, l2) - l * l2))
            rep.add("ax5-composite", "l=%s, l'=%s" % (l, l2),
                    L.nf(pair(bnd(l), bnd(l2)) - l * l2))
    for m in mgens:
        for m2 in mgens:
            rep.add("ax5-left", "m=%s, m'=%s" % (m, m2), m * m2 - m2 * m)
    for n in ngens:
        for n2 in ngens:
            rep.add("ax5-right", "n=%s, n'=%s" % (n, n2), n * n2 - n2 * n)

    # axiom 6: symmetry of the pairing holds by realization (the reversed
    # pairing is defined as the transpose)
    rep.add("ax6-symmetry", "structural", zero)

    # axioms 7/8: additivity in each slot
    for i, m in enumerate(mgens):
        for m2 in mgens[i:]:
            for n in ngens:
                rep.add("ax7-additive-left",
                        "m=%s, m'=%s, n=%s" % (m, m2, n),
                        L.nf(pair(m + m2, n) - pair(m, n) - pair(m2, n)))
    for m in mgens:
        for i, n in enumerate(ngens):
            for n2 in ngens[i:]:
                rep.add("ax8-additive-right",
                        "m=%s, n=%s, n'=%s" % (m, n, n2),
                        L.nf(pair(m, n + n2) - pair(m, n) - pair(m, n2)))

    # axiom 9: scalars slide through either slot
    for k in scalars:
        for m in mgens:
            for n in ngens:
                rep.add("ax9-scalar", "k=%s, m=%s, n=%s" % (k, m, n),
                        L.nf(pair(m, n) * k - pair(m * k, n)))
                rep.add("ax9-scalar-right", "k=%s, m=%s, n=%s" % (k, m, n),
                        L.nf(pair(m, n) * k - pair(m, n * k)))

    # axiom 10: associativity of iterated pairings, in the corrected form
    # h(h(a,b),c) = h(a,h(b,c)) = h(b,h(a,c)); the variant h(b,h(b,c))
    # with a repeated middle argument is evaluated separately as evidence
    for m in mgens:
        for n in ngens:
            base_val = None
            for c in mgens:
                e1 = lft(c) * pair(m, n)
                e2 = lft(m) * pair(c, n)
                e3 = pair(m * c, n)
                inst = "m=%s, n=%s, c=%s (left)" % (m, n, c)
                rep.add("ax10", inst, L.nf(e1 - e2))
                rep.add("ax10", inst + " second form", L.nf(e1 - e3))
                repeated = lft(n) * pair(c, n)
                rep.add("ax10-repeated-middle", inst, L.nf(e1 - repeated),
                        informational=True)
            for c in ngens:
                e1 = lft(c) * pair(m, n)
                e2 = pair(m, n * c)
                e3 = lft(n) * pair(m, c)
                inst = "m=%s, n=%s, c=%s (right)" % (m, n, c)
                rep.add("ax10", inst, L.nf(e1 - e2))
                rep.add("ax10", inst + " second form", L.nf(e1 - e3))
    return rep


# -- constructions ---------------------------------------------------------


def free_precrossed(data):
    """The free pre-crossed module of the level-1 data: the augmentation
    ideal of R[S2] with the boundary sending each generator to its image."""
    E1 = data.ring1
    R = data.base_ring
    numer = Ideal(E1, [E1.var(n) for n in data.s2_names])
    top = Subquotient(E1, numer, Ideal(E1, []),
                      gens=[E1.var(n) for n in data.s2_names])
    return CrossedModule(top=top, base=R, bnd=data.level1_boundary(),
                         embed=RingHom.from_map(R, E1, {}),
                         label="free pre-crossed module")


def peiffer_quotient(pre, data):
    """Quotient of the free pre-crossed module by its Peiffer ideal; the
    second axiom is verified on generators and a failure raises."""
    P1 = peiffer_P1(data)
    top = Subquotient(pre.top.ambient, pre.top.numer, P1, gens=pre.top.gens)
    cm = CrossedModule(top=top, base=pre.base, bnd=pre.bnd, embed=pre.embed,
                       label="free crossed module")
    for c in top.gens:
        for c2 in top.gens:
            residue = top.nf(cm.embed(cm.bnd(c)) * c2 - c * c2)
            if not residue.is_zero():
                raise AssertionError(
                    "second axiom fails after the Peiffer quotient: %s"
                    % residue)
    return cm


@dataclass
class LinearizedCrossedModule:
    """Rank-n description of the free crossed module: relation vectors
    t_i e_j - t_j e_i over the base and the boundary (t_1, ..., t_n)."""

    rank: int
    names: tuple
    boundary: tuple            # images t_i in the base ring
    relations: tuple           # tuples over the base ring
    _work: Ideal = None        # relation ideal in the elimination order
    _emb: RingHom = None
    _base: PolyRing = None

    def to_vector(self, p):
        """Linear representative of a class of the free crossed module.

        The normal form against the relation ideal in a block order with
        the adjoined generators leading rewrites every monomial of higher
        generator degree down to a linear form."""
        nf = self._work.normal_form(self._emb(p))
        vec = [self._base.zero] * self.rank
        for mono, coeff in nf.terms.items():
            head = mono[:self.rank]
            if sum(head) != 1:
                raise ValueError("representative %s is not linear" % nf)
            slot = head.index(1)
            tail = mono[self.rank:]
            vec[slot] = vec[slot] + self._base.monomial(tail, coeff)
        return tuple(vec)


def linearize(cm, data):
    t = data.boundary_images
    names = data.s2_names
    n = len(names)
    R = data.base_ring
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            vec = [R.zero] * n
            vec[j] = t[i]
            vec[i] = -t[j]
            rels.append(tuple(vec))
    block = PolyRing(tuple(names) + data.s1_names, data.field,
                     tuple(data.ring1.weights[data.ring1._index[v]]
                           for v in names) + R.weights,
                     ("block", n))
    emb = RingHom.from_map(data.ring1, block, {})
    work = Ideal(block, [emb(g) for g in cm.top.rels.gens])
    return LinearizedCrossedModule(rank=n, names=names, boundary=t,
                                   relations=tuple(rels),
                                   _work=work, _emb=emb, _base=R)


def free_crossed_on(base, names, images, label="free crossed module"):
    """Free crossed module over an arbitrary base ring on named generators
    with prescribed boundary images: adjoin the names, divide by the
    defects y_i y_j - boundary(y_i) y_j."""
    images = tuple(images)
    weights = tuple(max(1, img.wdeg()) for img in images)
    A = base.extend(names, weights)
    emb = RingHom.from_map(base, A, {})
    gens = [A.var(n) for n in names]
    rels = []
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            rels.append(gi * gj - emb(images[i]) * gj)
    numer = Ideal(A, gens)
    top = Subquotient(A, numer, Ideal(A, rels), gens=gens)
    bnd = RingHom.from_map(A, base, {n: img for n, img in zip(names, images)})
    return CrossedModule(top=top, base=base, bnd=bnd, embed=emb, label=label)


def square_pair_rule(skel):
    """The connecting rule of the Moore square: (x, ybar) maps to
    s1(x) * (s1(ybar) - s0(ybar)).  Writing ybar = y - s0(d1(y)) for the
    kernel correspondent y, the difference s1 - s0 kills the degenerate
    part, so the rule can be applied to the right-corner representative
    directly."""
    s0 = skel.degen[(1, 0)]
    s1 = skel.degen[(1, 1)]

    def pair(m, nbar):
        return s1(m) * (s1(nbar) - s0(nbar))

    return pair


def unbar(skel, nbar):
    """Kernel correspondent of a right-corner element: n - s0(d0(n))."""
    d0 = skel.face[(1, 0)]
    s0 = skel.degen[(0, 0)]
    return nbar - s0(d0(nbar))


def bar(skel, m):
    """Right-corner correspondent of a left-corner element: m - s0(d1(m))."""
    d1 = skel.face[(1, 1)]
    s0 = skel.degen[(0, 0)]
    return m - s0(d1(m))


def functor_M(skel, n, budget=None, break_h=False):
    """The Moore functor at levels 0, 1, 2 of the skeleton.

    n=0: the zeroth homotopy ring.  n=1: the free crossed module of the
    level-1 data.  n=2: the square on the level-2 Moore kernel modulo the
    second-order Peiffer ideal.
    """
    data = skel.data
    if n == 0:
        R = data.base_ring
        return QuotientRing(R, Ideal(R, list(data.boundary_images)))
    if n == 1:
        return peiffer_quotient(free_precrossed(data), data)
    if n == 2:
        E1, E2 = skel.E1, skel.E2
        moore = skel.moore(budget=budget)
        P2 = peiffer_P2(skel, "c_families", budget=budget)
        top = Subquotient(E2, moore.ne2, P2, gens=moore.ne2.gens)
        t = skel.boundary_images()
        left = Subquotient(E1, moore.ne1, Ideal(E1, []),
                           gens=[E1.var(v) for v in data.s2_names])
        right = Subquotient(E1, moore.kbar, Ideal(E1, []),
                            gens=[E1.var(v) - _lift(t[v], E1)
                                  for v in data.s2_names])
        square = CrossedSquare(
            top=top, left=left, right=right, base=E1,
            bnd=skel.face[(2, 2)], lift=skel.degen[(1, 1)],
            pair=square_pair_rule(skel),
            top_mul=(lambda a, b: E2.zero) if break_h else None,
            label="Moore square of the 2-skeleton")
        return square
    raise ValueError("the functor is computed for n in {0, 1, 2}")


def ideal_square(ring, I, J, budget=None):
    """The square of a pair of ideals: intersections, inclusions and the
    product pairing."""
    inter = ideal_intersect(I, J, budget=budget)
    top = Subquotient(ring, inter, Ideal(ring, []), gens=inter.groebner())
    ident = RingHom.identity(ring)
    return CrossedSquare(
        top=top,
        left=Subquotient(ring, I, Ideal(ring, []), gens=I.gens),
        right=Subquotient(ring, J, Ideal(ring, []), gens=J.gens),
        base=ring, bnd=ident, lift=ident,
        pair=lambda a, b: a * b,
        label="square of two ideals")

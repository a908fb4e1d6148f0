"""Homotopy of the skeleton: the complexes built from the Moore square,
their homotopy modules by two independent routes, the second homology of
the presented quotient algebra, and the split comparison of the two
complexes carried by the tensor corner.

Filtered dimensions of ideal subquotients come from leading-term counts;
the cross-checking routes use exact truncated linear algebra instead, so an
agreement genuinely certifies both implementations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import (Ideal, GradedDims, affine_hilbert, ideal_intersect,
                       hom_kernel, mono_divides, monomials_leq,
                       subquotient_dims, syzygies, _reringed)
from .linalg import Echelon, FilteredBasis, rref, truncated_ideal_span
from .rings import Polynomial, RingHom
from .crossed import QuotientRing, Subquotient, functor_M
from .simplicial import _lift
from .tensor import tensor_presentation


@dataclass
class SquaredComplexRep:
    """A crossed square extended by (here empty) higher free modules over
    the zeroth homotopy ring."""

    square: object
    higher_ranks: tuple
    coefficients: QuotientRing   # base/(left + right), the module ring above

    def boundary_pair(self, l):
        """Image of a top element in the pair term: (-right, left) slots
        share one ambient polynomial."""
        img = self.square.bnd(l)
        return (-img, img)


@dataclass
class TwoCrossedComplexRep:
    c0: object                   # base ring of the bottom term
    c1: Subquotient
    c2: Subquotient
    d1: RingHom
    d2: RingHom
    lifting: object              # pairing rule used as the Peiffer lifting

    def composite_vanishes(self):
        return all(self.d1(self.d2(g)).is_zero() for g in self.c2.gens)


def build_squared_complex(skel, budget=None):
    square = functor_M(skel, 2, budget=budget)
    E1 = skel.E1
    joined = Ideal(E1, list(square.left.numer.gens)
                   + list(square.right.numer.gens))
    return SquaredComplexRep(square=square, higher_ranks=(),
                             coefficients=QuotientRing(E1, joined))


def build_2crossed(skel, budget=None):
    square = functor_M(skel, 2, budget=budget)
    moore = skel.moore(budget=budget)
    c1 = Subquotient(skel.E1, moore.ne1, Ideal(skel.E1, []),
                     gens=[skel.E1.var(v) for v in skel.data.s2_names])
    rep = TwoCrossedComplexRep(
        c0=skel.base, c1=c1, c2=square.top,
        d1=skel.face[(1, 1)], d2=skel.face[(2, 2)],
        lifting=square.pair)
    if not rep.composite_vanishes():
        raise AssertionError("composite of consecutive boundaries is nonzero")
    return rep


def pi0(skel):
    data = skel.data
    R = data.base_ring
    return QuotientRing(R, Ideal(R, list(data.boundary_images)))


def _pair_kernel_dims(skel, D, budget=None):
    """Homotopy in degree one of the squared complex by truncated linear
    algebra on the pair term: the kernel of (m, n) -> m + n meets the span
    pair in the intersection of the two corner spans, and the boundary
    image is the span of the pushed-down top generators."""
    E1 = skel.E1
    moore = skel.moore(budget=budget)
    d2 = skel.face[(2, 2)]
    left = moore.ne1.groebner(budget=budget)
    right = moore.kbar.groebner(budget=budget)
    image = Ideal(E1, [d2(g) for g in moore.ne2.gens]).groebner(budget=budget)
    dims = []
    for d in range(D + 1):
        fb = FilteredBasis(E1, d)
        span_l = truncated_ideal_span(left, fb)
        span_r = truncated_ideal_span(right, fb)
        both = Echelon(len(fb), E1.field)
        for ech in (span_l, span_r):
            for col in sorted(ech.pivot_of):
                both.add(ech.pivot_of[col])
        inter = span_l.rank + span_r.rank - both.rank
        span_im = truncated_ideal_span(image, fb)
        dims.append(inter - span_im.rank)
    return GradedDims(tuple(dims))


def pi1(skel, D, route="ideal", budget=None):
    """First homotopy module as filtered dimensions.

    route "ideal": the intersection of the two level-1 kernels modulo the
    pushed-down level-2 kernel, by elimination and leading-term counts.
    route "pair": the same module read off the squared complex by
    truncated linear algebra.
    """
    if route == "pair":
        return _pair_kernel_dims(skel, D, budget=budget)
    if route != "ideal":
        raise ValueError("unknown route %r" % (route,))
    E1 = skel.E1
    moore = skel.moore(budget=budget)
    inter = ideal_intersect(moore.ne1, moore.kbar, budget=budget)
    image = Ideal(E1, [skel.face[(2, 2)](g) for g in moore.ne2.gens])
    if inter.is_zero():
        return GradedDims((0,) * (D + 1))
    return subquotient_dims(inter, image, D, budget=budget)


def pi1_witness(skel, budget=None):
    """A generator of the intersection whose class is nonzero, if any."""
    moore = skel.moore(budget=budget)
    E1 = skel.E1
    inter = ideal_intersect(moore.ne1, moore.kbar, budget=budget)
    image = Ideal(E1, [skel.face[(2, 2)](g) for g in moore.ne2.gens])
    for g in sorted(inter.groebner(budget=budget), key=lambda p: p.wdeg()):
        if not image.member(g):
            return g
    return None


def pi2(skel, D, budget=None):
    """Second homotopy module: the part of the level-2 Moore kernel killed
    by the last face, modulo the second-order Peiffer ideal."""
    from .simplicial import peiffer_P2
    moore = skel.moore(budget=budget)
    ker_last = hom_kernel(skel.face[(2, 2)], budget=budget)
    numer = ideal_intersect(moore.ne2, ker_last, budget=budget)
    P2 = peiffer_P2(skel, "c_families", budget=budget)
    if numer.is_zero():
        return GradedDims((0,) * (D + 1))
    return subquotient_dims(numer, P2, D, budget=budget)


def pi2_witness(skel, budget=None):
    from .simplicial import peiffer_P2
    moore = skel.moore(budget=budget)
    ker_last = hom_kernel(skel.face[(2, 2)], budget=budget)
    numer = ideal_intersect(moore.ne2, ker_last, budget=budget)
    P2 = peiffer_P2(skel, "c_families", budget=budget)
    for g in sorted(numer.groebner(budget=budget), key=lambda p: p.wdeg()):
        if not P2.member(g):
            return g
    return None


def _koszul_vectors(t, R):
    n = len(t)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            vec = [R.zero] * n
            vec[j] = t[i]
            vec[i] = -t[j]
            out.append(tuple(vec))
    return out


class _VectorSpan:
    """Echelon span of shifted module vectors under the box filtration:
    a vector is in the degree-d piece when every entry has wdeg <= d."""

    def __init__(self, R, rank, d):
        self.R = R
        self.rank = rank
        self.fb = FilteredBasis(R, d)
        self.d = d
        self.ech = Echelon(rank * len(self.fb), R.field)

    def coords(self, vec):
        out = []
        for p in vec:
            out.extend(self.fb.to_vec(p))
        return out

    def add_multiples(self, vec):
        top = max((p.wdeg() for p in vec if not p.is_zero()), default=-1)
        if top < 0 or top > self.d:
            return
        for m in monomials_leq(self.R, self.d - top):
            shifted = tuple(Polynomial(self.R,
                                       {tuple(a + b for a, b in zip(m, t)): c
                                        for t, c in p.terms.items()})
                            for p in vec)
            self.ech.add(self.coords(shifted))

    def add(self, vec):
        return self.ech.add(self.coords(vec))

    def contains(self, vec):
        return self.ech.contains(self.coords(vec))


def aq_h2(data, route="syzygy", D=8, budget=None):
    """Second homology of the presented quotient: relations among the
    boundary images modulo the alternating ones, as filtered dimensions.

    route "syzygy" spans the module computed by cofactor-tracked reduction;
    route "kernel" solves the linear systems degree by degree and never
    consults the syzygy machinery.  Both quotient by the span of the
    alternating vectors.
    """
    R = data.base_ring
    t = list(data.boundary_images)
    n = len(t)
    if n == 0 or all(p.is_zero() for p in t):
        return GradedDims((0,) * (D + 1))
    koszul = _koszul_vectors(t, R)
    dims = []
    if route == "syzygy":
        syz = syzygies(tuple(t), ring=R, budget=budget)
        for d in range(D + 1):
            num = _VectorSpan(R, n, d)
            for v in syz:
                num.add_multiples(v)
            den = _VectorSpan(R, n, d)
            for v in koszul:
                den.add_multiples(v)
            dims.append(num.ech.rank - den.ech.rank)
        return GradedDims(tuple(dims))
    if route == "kernel":
        for d in range(D + 1):
            fb = FilteredBasis(R, d)
            top = max(p.wdeg() for p in t)
            out_fb = FilteredBasis(R, d + top)
            rows = []
            for i in range(n):
                for m in fb.monos:
                    mono = R.monomial(m)
                    rows.append(out_fb.to_vec(mono * t[i]))
            width = len(out_fb)
            aug = []
            count = len(rows)
            for idx, r in enumerate(rows):
                tail = [R.field.zero] * count
                tail[idx] = R.field.one
                aug.append(list(r) + tail)
            _, red = rref(aug, R.field)
            kern_dim = sum(1 for r in red if not any(r[:width]))
            den = _VectorSpan(R, n, d)
            for v in koszul:
                den.add_multiples(v)
            dims.append(kern_dim - den.ech.rank)
        return GradedDims(tuple(dims))
    raise ValueError("unknown route %r" % (route,))


def aq_h2_witness(data, D=8, budget=None):
    """Lowest-degree syzygy class outside the alternating span."""
    R = data.base_ring
    t = list(data.boundary_images)
    n = len(t)
    if n == 0:
        return None
    koszul = _koszul_vectors(t, R)
    syz = sorted(syzygies(tuple(t), ring=R, budget=budget),
                 key=lambda v: max((p.wdeg() for p in v if not p.is_zero()),
                                   default=0))
    for v in syz:
        d = max((p.wdeg() for p in v if not p.is_zero()), default=0)
        if d > D:
            continue
        den = _VectorSpan(R, n, d)
        for k in koszul:
            den.add_multiples(k)
        if not den.contains(v):
            return v
    return None


@dataclass
class HomotopyReport:
    pi0_basis: tuple
    pi0_dims: GradedDims
    pi1_dims: GradedDims
    pi1_pair_dims: GradedDims
    pi1_witness: object
    pi2_dims: GradedDims
    pi2_witness: object
    h2_syzygy: GradedDims
    h2_kernel: GradedDims
    h2_witness: object

    def to_obj(self):
        def vec_str(v):
            if v is None:
                return None
            if isinstance(v, tuple):
                return "(" + ", ".join(str(p) for p in v) + ")"
            return str(v)
        return {
            "pi0": {"relations": [str(b) for b in self.pi0_basis],
                    "dims": self.pi0_dims.as_list()},
            "pi1": {"dims": self.pi1_dims.as_list(),
                    "dims_pair_route": self.pi1_pair_dims.as_list(),
                    "routes_agree":
                        self.pi1_dims.dims == self.pi1_pair_dims.dims,
                    "witness": vec_str(self.pi1_witness)},
            "pi2": {"dims": self.pi2_dims.as_list(),
                    "witness": vec_str(self.pi2_witness)},
            "aq_h2": {"dims_syzygy_route": self.h2_syzygy.as_list(),
                      "dims_kernel_route": self.h2_kernel.as_list(),
                      "routes_agree":
                          self.h2_syzygy.dims == self.h2_kernel.dims,
                      "witness": vec_str(self.h2_witness)},
        }

    def to_text(self):
        obj = self.to_obj()
        lines = []
        lines.append("pi0 relations: [%s], filtered dims %s"
                     % (", ".join(obj["pi0"]["relations"]), self.pi0_dims))
        lines.append("pi1 dims %s (pair route %s, agree: %s), witness: %s"
                     % (self.pi1_dims, self.pi1_pair_dims,
                        obj["pi1"]["routes_agree"], obj["pi1"]["witness"]))
        lines.append("pi2 dims %s, witness: %s"
                     % (self.pi2_dims, obj["pi2"]["witness"]))
        lines.append("H2 dims %s (kernel route %s, agree: %s), witness: %s"
                     % (self.h2_syzygy, self.h2_kernel,
                        obj["aq_h2"]["routes_agree"], obj["aq_h2"]["witness"]))
        return "\n".join(lines)


def homotopy_report(skel, D=6, D_h2=8, budget=None):
    p0 = pi0(skel)
    return HomotopyReport(
        pi0_basis=p0.basis,
        pi0_dims=p0.dims(D),
        pi1_dims=pi1(skel, D, "ideal", budget=budget),
        pi1_pair_dims=pi1(skel, D, "pair", budget=budget),
        pi1_witness=pi1_witness(skel, budget=budget),
        pi2_dims=pi2(skel, D, budget=budget),
        pi2_witness=pi2_witness(skel, budget=budget),
        h2_syzygy=aq_h2(skel.data, "syzygy", D_h2, budget=budget),
        h2_kernel=aq_h2(skel.data, "kernel", D_h2, budget=budget),
        h2_witness=aq_h2_witness(skel.data, D_h2, budget=budget),
    )


# -- the two complexes on the tensor corner and their comparison -----------


@dataclass
class SplitComparisonReport:
    checks: list = field(default_factory=list)
    kernel_middle: GradedDims = None
    kernel_bottom: GradedDims = None
    pi0_rows: tuple = None
    pi1_rows: tuple = None
    pi2_rows: tuple = None

    def add(self, name, residue):
        ok = residue.is_zero()
        self.checks.append((name, ok, "0" if ok else str(residue)))

    @property
    def ok(self):
        rows_ok = (self.pi0_rows[0] == self.pi0_rows[1]
                   and self.pi1_rows[0] == self.pi1_rows[1]
                   and self.pi2_rows[0] == self.pi2_rows[1])
        kernel_ok = (not any(self.kernel_middle.dims)
                     and not any(self.kernel_bottom.dims))
        return all(ok for _, ok, _ in self.checks) and rows_ok and kernel_ok

    def to_obj(self):
        return {
            "ok": self.ok,
            "checks": [{"name": n, "status": "pass" if ok else "fail",
                        "witness": w} for n, ok, w in self.checks],
            "kernel_homology": {"middle": self.kernel_middle.as_list(),
                                "bottom": self.kernel_bottom.as_list()},
            "pi0": {"wide": self.pi0_rows[0].as_list(),
                    "narrow": self.pi0_rows[1].as_list(),
                    "equal": self.pi0_rows[0] == self.pi0_rows[1]},
            "pi1": {"wide": self.pi1_rows[0].as_list(),
                    "narrow": self.pi1_rows[1].as_list(),
                    "equal": self.pi1_rows[0] == self.pi1_rows[1]},
            "pi2": {"wide": self.pi2_rows[0].as_list(),
                    "narrow": self.pi2_rows[1].as_list(),
                    "equal": self.pi2_rows[0] == self.pi2_rows[1]},
        }

    def to_text(self):
        obj = self.to_obj()
        lines = ["split comparison: %s" % ("pass" if self.ok else "FAIL")]
        for c in obj["checks"]:
            lines.append("  [%s] %s%s" % (c["status"], c["name"],
                                          "" if c["status"] == "pass"
                                          else ": " + c["witness"]))
        lines.append("  kernel homology middle %s bottom %s"
                     % (self.kernel_middle, self.kernel_bottom))
        for name in ("pi0", "pi1", "pi2"):
            row = obj[name]
            lines.append("  %s wide %s narrow %s equal %s"
                         % (name, row["wide"], row["narrow"], row["equal"]))
        return "\n".join(lines)


def compare_XY(skel, D=6, budget=None):
    """The complex on the pair term against the one on the left kernel.

    Both carry the tensor corner on top.  The projection is (take the
    left component, then the last level-1 face); the section pairs an
    element with minus its right-corner correspondent and splits the
    projection on the nose.  The kernel complex is an isomorphism in one
    spot, so its filtered homology vanishes; the homotopy rows of the two
    complexes coincide.
    """
    data = skel.data
    if data.s3_names:
        raise ValueError("the comparison is defined for data without "
                         "level-2 generators")
    E1, R = skel.E1, skel.base
    t = skel.boundary_images()
    m_gens = [E1.var(v) for v in data.s2_names]
    n_gens = [E1.var(v) - _lift(t[v], E1) for v in data.s2_names]
    pres = tensor_presentation(E1, m_gens, n_gens, budget=budget)
    d0 = skel.face[(1, 0)]
    d1 = skel.face[(1, 1)]
    s0 = skel.degen[(0, 0)]

    rep = SplitComparisonReport()
    # projection after section is the identity on the bottom level; on the
    # pair level the projection keeps the left slot of (m, -(m - s0 d1 m)),
    # so the composite is the identity by construction
    for v in R.vars:
        rep.add("bottom projection()section on %s" % v,
                d1(s0(R.var(v))) - R.var(v))
    for m in m_gens:
        # the section's second slot must land in the right corner
        rep.add("section lands in the pair term at %s" % m,
                d1(m - s0(d1(m))))
        # boundary compatibility of the projection on the pair generators
        # with zero left slot: the right corner dies under the last face
    for n in n_gens:
        rep.add("projection chain square at (0, %s)" % n, d1(n))
    for g in pres.symbols:
        lam = pres.lam(g)
        # section chain square on top: the right-corner correspondent of
        # the boundary image is that image itself
        rep.add("top section chain square on %s" % g, s0(d1(lam)))

    # kernel complex: pairs with zero left slot map isomorphically onto
    # the kernel of the bottom projection; both homology rows must vanish
    N_ideal = Ideal(E1, n_gens)
    n_basis = N_ideal.groebner(budget=budget)
    kernel_rows = hom_kernel(d1, budget=budget).groebner(budget=budget)
    middle, bottom = [], []
    for d in range(D + 1):
        fb = FilteredBasis(E1, d)
        span_n = truncated_ideal_span(n_basis, fb)
        # middle: kernel of the boundary restricted to the kernel pairs,
        # which sends (0, n) to n
        vecs = [span_n.pivot_of[c] for c in sorted(span_n.pivot_of)]
        aug = []
        for idx, r in enumerate(vecs):
            tail = [E1.field.zero] * len(vecs)
            tail[idx] = E1.field.one
            aug.append(list(r) + tail)
        _, red = rref(aug, E1.field)
        middle.append(sum(1 for r in red if not any(r[:len(fb)])))
        span_ker = truncated_ideal_span(kernel_rows, fb)
        bottom.append(span_ker.rank - span_n.rank)
    rep.kernel_middle = GradedDims(tuple(middle))
    rep.kernel_bottom = GradedDims(tuple(bottom))

    # homotopy rows of both complexes
    M_ideal = Ideal(E1, m_gens)
    lam_ideal = Ideal(E1, [pres.lam(g) for g in pres.symbols])
    pi0_wide = affine_hilbert(M_ideal + N_ideal, D, budget=budget)
    pi0_narrow = affine_hilbert(Ideal(R, [t[v] for v in data.s2_names]), D,
                                budget=budget)
    inter = ideal_intersect(M_ideal, N_ideal, budget=budget)
    if inter.is_zero():
        zeros = GradedDims((0,) * (D + 1))
        pi1_wide = pi1_narrow = zeros
    else:
        pi1_narrow = subquotient_dims(inter, lam_ideal, D, budget=budget)
        # wide route by linear algebra on the pair term
        dims = []
        for d in range(D + 1):
            fb = FilteredBasis(E1, d)
            sm = truncated_ideal_span(M_ideal.groebner(budget=budget), fb)
            sn = truncated_ideal_span(N_ideal.groebner(budget=budget), fb)
            both = Echelon(len(fb), E1.field)
            for ech in (sm, sn):
                for col in sorted(ech.pivot_of):
                    both.add(ech.pivot_of[col])
            si = truncated_ideal_span(lam_ideal.groebner(budget=budget), fb)
            dims.append(sm.rank + sn.rank - both.rank - si.rank)
        pi1_wide = GradedDims(tuple(dims))
    pi2_wide = _tensor_kernel_dims(pres, D, doubled=True, budget=budget)
    pi2_narrow = _tensor_kernel_dims(pres, D, doubled=False, budget=budget)
    rep.pi0_rows = (pi0_wide, pi0_narrow)
    rep.pi1_rows = (pi1_wide, pi1_narrow)
    rep.pi2_rows = (pi2_wide, pi2_narrow)
    return rep


def _tensor_kernel_dims(pres, D, doubled, budget=None):
    """Filtered dimensions of the kernel of the top boundary on the tensor
    presentation; with doubled=True the boundary is taken with values in
    the pair term (both slots), otherwise in the single corner."""
    ring = pres.ring
    if not pres.symbol_grid:
        return GradedDims((0,) * (D + 1))
    basis = pres.relations.groebner(budget=budget)
    work = ring if ring.order == "wdegrevlex" else ring.with_order("wdegrevlex")
    lts = [_reringed(b, work).lm() for b in basis]
    sym_index = [ring._index[str(g)] for g in pres.symbols]
    dims = []
    for d in range(D + 1):
        classes = []
        for m in monomials_leq(work, d):
            if not any(m[i] for i in sym_index):
                continue
            if any(mono_divides(lt, m) for lt in lts):
                continue
            classes.append(ring.monomial(m))
        if not classes:
            dims.append(0)
            continue
        out_fb = FilteredBasis(pres.base, d)
        width = len(out_fb) * (2 if doubled else 1)
        rows = []
        for c in classes:
            img = pres.lam(c)
            vec = out_fb.to_vec(img)
            if doubled:
                vec = [-x for x in vec] + vec
            rows.append(vec)
        aug = []
        count = len(rows)
        for idx, r in enumerate(rows):
            tail = [ring.field.zero] * count
            tail[idx] = ring.field.one
            aug.append(list(r) + tail)
        _, red = rref(aug, ring.field)
        dims.append(sum(1 for r in red if not any(r[:width])))
    return GradedDims(tuple(dims))

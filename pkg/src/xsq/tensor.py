"""Tensor products and coproducts of crossed modules over a common base,
assembly of the top corner from them, and the comparison engine that
certifies the reconstruction against the Moore square at desk scale.

The tensor of two ideal corners is presented on one symbol per generator
pair: scalar slides hold by construction, the bilinear relations come from
the syzygies of each generator list, and the multiplicative relations come
from cofactor lifts of generator products.  A certified comparison checks
well-definedness (every relation maps to normal form zero), surjectivity
(every Moore generator lifts through the image ideal) and equality of the
affine Hilbert rows of both presentations up to a degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import Ideal, syzygies, GradedDims
from .rings import PolyRing, RingHom, fresh_names
from .crossed import (CrossedModule, CrossedSquare, Subquotient,
                      free_crossed_on, functor_M, square_pair_rule)
from .simplicial import _lift


@dataclass
class TensorPresentation:
    """Presentation of the tensor of two ideal corners of the base ring."""

    base: PolyRing
    ring: PolyRing                  # base extended by the symbols
    symbol_grid: tuple              # symbol_grid[p][q] = variable name
    m_gens: tuple
    n_gens: tuple
    relations: Ideal
    numer: Ideal
    lam: RingHom                    # both structure maps share this ambient map
    embed: RingHom
    m_ideal: Ideal = None
    n_ideal: Ideal = None

    @property
    def symbols(self):
        return tuple(self.ring.var(name)
                     for row in self.symbol_grid for name in row)

    def expand(self, m, n, budget=None):
        """The class of m (x) n as a symbol combination, via cofactor lifts
        of both arguments through the generator lists."""
        if m.is_zero() or n.is_zero():
            return self.ring.zero
        a = self.m_ideal.lift(m, budget=budget)
        b = self.n_ideal.lift(n, budget=budget)
        out = self.ring.zero
        for p, ap in enumerate(a):
            if ap.is_zero():
                continue
            for q, bq in enumerate(b):
                if bq.is_zero():
                    continue
                out = out + self.embed(ap * bq) * self.ring.var(
                    self.symbol_grid[p][q])
        return out

    def subquotient(self):
        return Subquotient(self.ring, self.numer, self.relations,
                           gens=self.symbols)

    def crossed_module(self, label="tensor corner"):
        return CrossedModule(top=self.subquotient(), base=self.base,
                             bnd=self.lam, embed=self.embed, label=label)

    def square(self, left, right, label="tensor square"):
        return CrossedSquare(
            top=self.subquotient(), left=left, right=right, base=self.base,
            bnd=self.lam, lift=self.embed,
            pair=lambda m, n: self.expand(m, n), label=label)


def tensor_presentation(base, m_gens, n_gens, budget=None):
    """Build the symbol presentation of the tensor of the ideals generated
    by m_gens and n_gens inside the base ring."""
    m_gens, n_gens = tuple(m_gens), tuple(n_gens)
    if not m_gens or not n_gens:
        ring = base
        zero = Ideal(base, [])
        return TensorPresentation(
            base=base, ring=base, symbol_grid=(), m_gens=m_gens,
            n_gens=n_gens, relations=zero, numer=zero,
            lam=RingHom.identity(base), embed=RingHom.identity(base),
            m_ideal=Ideal(base, m_gens), n_ideal=Ideal(base, n_gens))
    names, weights = [], []
    for p, mp in enumerate(m_gens):
        for q, nq in enumerate(n_gens):
            names.append("g%d_%d" % (p, q))
            weights.append(max(1, mp.wdeg()) + max(1, nq.wdeg()))
    names = fresh_names(names, base.vars)
    ring = base.extend(names, weights)
    grid = tuple(tuple(names[p * len(n_gens) + q]
                       for q in range(len(n_gens)))
                 for p in range(len(m_gens)))
    embed = RingHom.from_map(base, ring, {})
    sym = lambda p, q: ring.var(grid[p][q])

    rels = []
    # bilinearity in the first slot: syzygies of the left generators
    for v in syzygies(m_gens, ring=base, budget=budget):
        for q in range(len(n_gens)):
            r = ring.zero
            for p, vp in enumerate(v):
                if not vp.is_zero():
                    r = r + embed(vp) * sym(p, q)
            if not r.is_zero():
                rels.append(r)
    # and in the second slot
    for w in syzygies(n_gens, ring=base, budget=budget):
        for p in range(len(m_gens)):
            r = ring.zero
            for q, wq in enumerate(w):
                if not wq.is_zero():
                    r = r + embed(wq) * sym(p, q)
            if not r.is_zero():
                rels.append(r)
    # multiplicativity: products of symbols rewrite through cofactor lifts
    m_ideal = Ideal(base, m_gens)
    n_ideal = Ideal(base, n_gens)
    flat = [(p, q) for p in range(len(m_gens)) for q in range(len(n_gens))]
    for i, (p, q) in enumerate(flat):
        for (p2, q2) in flat[i:]:
            prod_m = m_ideal.lift(m_gens[p] * m_gens[p2], budget=budget)
            prod_n = n_ideal.lift(n_gens[q] * n_gens[q2], budget=budget)
            r = sym(p, q) * sym(p2, q2)
            for u, cu in enumerate(prod_m):
                if cu.is_zero():
                    continue
                for v, ev in enumerate(prod_n):
                    if not ev.is_zero():
                        r = r - embed(cu * ev) * sym(u, v)
            rels.append(r)
    lam = RingHom.from_map(
        ring, base,
        {grid[p][q]: m_gens[p] * n_gens[q]
         for p in range(len(m_gens)) for q in range(len(n_gens))})
    return TensorPresentation(
        base=base, ring=ring, symbol_grid=grid, m_gens=m_gens,
        n_gens=n_gens, relations=Ideal(ring, rels),
        numer=Ideal(ring, [sym(p, q) for p, q in flat]),
        lam=lam, embed=embed, m_ideal=m_ideal, n_ideal=n_ideal)


def tensor_square(Mcm, Ncm, budget=None):
    """The square completing the corner of two crossed ideals: tensor on
    top, the ideals on the sides."""
    base = Mcm.base
    if Ncm.base != base:
        raise ValueError("tensor needs a common base")
    for cm in (Mcm, Ncm):
        if cm.top.ambient != base or cm.top.rels.gens:
            raise ValueError("tensor corners must be ideals of the base")
    pres = tensor_presentation(base, Mcm.top.gens, Ncm.top.gens,
                               budget=budget)
    return pres.square(Mcm.top, Ncm.top), pres


def _symbol_block(cm):
    """(extra variable names, their weights) of a symbol-presented module:
    the ambient is the base plus fresh variables generating the numerator."""
    base, amb = cm.base, cm.top.ambient
    extras = [v for v in amb.vars if v not in base.vars]
    gen_vars = {str(g) for g in cm.top.gens}
    if set(extras) != gen_vars or len(extras) != len(cm.top.gens):
        raise ValueError("module is not symbol-presented over its base")
    return extras, [amb.weights[amb._index[v]] for v in extras]


@dataclass
class CoproductResult:
    cm: CrossedModule
    i_hom: RingHom          # first summand's ambient into the merged ring
    j_hom: RingHom
    cross_relations: tuple  # the Peiffer generators of the quotient


def coproduct(Mcm, Ncm, budget=None):
    """Coproduct of two crossed modules presented on symbols over a common
    base: the pair algebra with the twisted product, divided by the ideal
    of cross Peiffer elements."""
    base = Mcm.base
    if Ncm.base != base:
        raise ValueError("coproduct needs a common base")
    if not Ncm.top.gens:
        return CoproductResult(cm=Mcm, i_hom=RingHom.identity(Mcm.top.ambient),
                               j_hom=RingHom.from_map(Ncm.top.ambient,
                                                      Mcm.top.ambient, {}),
                               cross_relations=())
    if not Mcm.top.gens:
        return CoproductResult(cm=Ncm,
                               i_hom=RingHom.from_map(Mcm.top.ambient,
                                                      Ncm.top.ambient, {}),
                               j_hom=RingHom.identity(Ncm.top.ambient),
                               cross_relations=())
    ext_m, w_m = _symbol_block(Mcm)
    ext_n, w_n = _symbol_block(Ncm)
    # suffix clashing symbol names per side, as copies _a and _b
    taken = set(base.vars)
    ren_m, ren_n = {}, {}
    for v in ext_m:
        new = v if (v not in taken and v not in ext_n) else v + "_a"
        while new in taken:
            new = new + "_"
        ren_m[v] = new
        taken.add(new)
    for v in ext_n:
        new = v if (v not in taken and v not in ext_m) else v + "_b"
        while new in taken:
            new = new + "_"
        ren_n[v] = new
        taken.add(new)
    merged = base.extend([ren_m[v] for v in ext_m] + [ren_n[v] for v in ext_n],
                         w_m + w_n)
    i_hom = RingHom.from_map(Mcm.top.ambient, merged,
                             {v: merged.var(ren_m[v]) for v in ext_m})
    j_hom = RingHom.from_map(Ncm.top.ambient, merged,
                             {v: merged.var(ren_n[v]) for v in ext_n})
    embed = RingHom.from_map(base, merged, {})

    rels = [i_hom(g) for g in Mcm.top.rels.gens]
    rels += [j_hom(g) for g in Ncm.top.rels.gens]
    cross = []
    for v in ext_m:
        U = merged.var(ren_m[v])
        du = embed(Mcm.bnd(Mcm.top.ambient.var(v)))
        for w in ext_n:
            W = merged.var(ren_n[w])
            dw = embed(Ncm.bnd(Ncm.top.ambient.var(w)))
            # the pair product has no mixed monomials: U.W = bnd(U).W
            rels.append(U * W - du * W)
            # cross Peiffer generator (bnd(w).U, -bnd(U).w)
            cross.append(dw * U - du * W)
    rels += cross
    bnd = RingHom.from_map(
        merged, base,
        {ren_m[v]: Mcm.bnd(Mcm.top.ambient.var(v)) for v in ext_m}
        | {ren_n[w]: Ncm.bnd(Ncm.top.ambient.var(w)) for w in ext_n})
    gens = [merged.var(ren_m[v]) for v in ext_m] \
        + [merged.var(ren_n[w]) for w in ext_n]
    top = Subquotient(merged, Ideal(merged, gens), Ideal(merged, rels),
                      gens=gens)
    cm = CrossedModule(top=top, base=base, bnd=bnd, embed=embed,
                       label="coproduct")
    return CoproductResult(cm=cm, i_hom=i_hom, j_hom=j_hom,
                           cross_relations=tuple(cross))


@dataclass
class AssembledCorner:
    """Top corner reconstructed as (tensor of the two kernels) joined with
    the free crossed module on the level-2 generators, divided by the
    interchange relations."""

    square: CrossedSquare
    tensor: TensorPresentation
    coprod: CoproductResult
    extra_relations: tuple
    variant_relations: tuple
    c_names: tuple

    @property
    def top(self):
        return self.square.top


def assemble_L(skel, budget=None, relation_convention="derived"):
    """Assemble the reconstruction of the top Moore corner.

    relation_convention "derived" uses the boundary-compatible interchange
    relations i(bnd(c) (x) n) ~ j(n.c) and i(m (x) bnd(c)) ~ j(m.c); the
    "bare-term" variant, which carries an extra bare j(c) summand on each
    right hand side, is instantiated alongside so comparison reports can
    show what becomes of it."""
    data = skel.data
    E1 = skel.E1
    t = skel.boundary_images()
    m_gens = [E1.var(v) for v in data.s2_names]
    n_gens = [E1.var(v) - _lift(t[v], E1) for v in data.s2_names]
    pres = tensor_presentation(E1, m_gens, n_gens, budget=budget)
    f3 = {n: img for n, img in data.s3}
    C = free_crossed_on(E1, data.s3_names,
                        [f3[n] for n in data.s3_names],
                        label="free crossed module on the level-2 data")
    cop = coproduct(pres.crossed_module(), C, budget=budget)
    merged = cop.cm.top.ambient
    emb = RingHom.from_map(E1, merged, {})

    def G(p, q):
        return cop.i_hom(pres.ring.var(pres.symbol_grid[p][q]))

    extra, variant = [], []
    for name in data.s3_names:
        cj = cop.j_hom(C.top.ambient.var(name))
        img = f3[name]
        a = pres.m_ideal.lift(img, budget=budget)
        b = pres.n_ideal.lift(img, budget=budget)
        for q, nq in enumerate(n_gens):
            lhs = merged.zero
            for p, ap in enumerate(a):
                if not ap.is_zero():
                    lhs = lhs + emb(ap) * G(p, q)
            extra.append(lhs - emb(nq) * cj)
            variant.append(lhs - cj + emb(nq) * cj)
        for p, mp in enumerate(m_gens):
            lhs = merged.zero
            for q, bq in enumerate(b):
                if not bq.is_zero():
                    lhs = lhs + emb(bq) * G(p, q)
            extra.append(lhs - emb(mp) * cj)
            variant.append(lhs - emb(mp) * cj + cj)
    chosen = extra if relation_convention == "derived" else variant
    rels = cop.cm.top.rels + Ideal(merged, chosen)
    top = Subquotient(merged, cop.cm.top.numer, rels, gens=cop.cm.top.gens)
    left = Subquotient(E1, Ideal(E1, m_gens), Ideal(E1, []), gens=m_gens)
    right = Subquotient(E1, Ideal(E1, n_gens), Ideal(E1, []), gens=n_gens)

    def pair(m, n):
        return cop.i_hom(pres.expand(m, n))

    square = CrossedSquare(top=top, left=left, right=right, base=E1,
                           bnd=cop.cm.bnd, lift=emb, pair=pair,
                           label="assembled top corner")
    return AssembledCorner(square=square, tensor=pres, coprod=cop,
                           extra_relations=tuple(extra),
                           variant_relations=tuple(variant),
                           c_names=data.s3_names)


@dataclass
class ComparisonReport:
    """Per-check status with witnesses; any failure is report content."""

    label: str
    well_defined: list = field(default_factory=list)
    surjective: list = field(default_factory=list)
    pairing_respected: list = field(default_factory=list)
    hilbert_target: GradedDims = None
    hilbert_moore: GradedDims = None
    variant_relations: list = field(default_factory=list)

    @property
    def hilbert_equal(self):
        return self.hilbert_target.dims == self.hilbert_moore.dims

    @property
    def ok(self):
        return (all(ok for _, ok, _ in self.well_defined)
                and all(ok for _, ok, _ in self.surjective)
                and all(ok for _, ok, _ in self.pairing_respected)
                and self.hilbert_equal)

    def to_obj(self):
        def rows(items):
            return [{"instance": inst, "status": "pass" if ok else "fail",
                     "witness": w} for inst, ok, w in items]
        return {
            "label": self.label,
            "ok": self.ok,
            "well_defined": rows(self.well_defined),
            "surjective": rows(self.surjective),
            "pairing_respected": rows(self.pairing_respected),
            "hilbert": {
                "target": self.hilbert_target.as_list(),
                "moore": self.hilbert_moore.as_list(),
                "equal": self.hilbert_equal,
            },
            "bare_term_variant_relations": rows(self.variant_relations),
        }

    def to_text(self):
        lines = ["%s: %s" % (self.label, "pass" if self.ok else "FAIL")]
        for name, items in (("well-defined", self.well_defined),
                            ("surjective", self.surjective),
                            ("pairing", self.pairing_respected)):
            bad = [(i, w) for i, ok, w in items if not ok]
            lines.append("  %s: %d/%d" % (name, len(items) - len(bad),
                                          len(items)))
            for inst, w in bad:
                lines.append("    FAIL %s: %s" % (inst, w))
        lines.append("  hilbert target: %s" % self.hilbert_target)
        lines.append("  hilbert moore:  %s" % self.hilbert_moore)
        if self.variant_relations:
            held = sum(1 for _, ok, _ in self.variant_relations if ok)
            lines.append("  bare-term variant relations mapping to zero: %d/%d"
                         % (held, len(self.variant_relations)))
        return "\n".join(lines)


def compare_corner(skel, D=6, budget=None):
    """Certify the reconstruction of the top Moore corner: the canonical
    map sends a symbol to the value of the connecting pairing and each
    adjoined generator to its level-2 variable, the base acting through
    the degeneracy lift."""
    data = skel.data
    live = functor_M(skel, 2, budget=budget)
    assembled = assemble_L(skel, budget=budget)
    merged = assembled.top.ambient
    E2 = skel.E2
    pair_live = square_pair_rule(skel)
    s1 = skel.degen[(1, 1)]
    pres = assembled.tensor

    images = {}
    for v in skel.E1.vars:
        images[v] = s1(skel.E1.var(v))
    for p in range(len(pres.m_gens)):
        for q in range(len(pres.n_gens)):
            name = pres.symbol_grid[p][q]
            merged_name = str(assembled.coprod.i_hom(pres.ring.var(name)))
            images[merged_name] = pair_live(pres.m_gens[p], pres.n_gens[q])
    for name in assembled.c_names:
        dom = assembled.coprod.j_hom.domain
        merged_name = str(assembled.coprod.j_hom(dom.var(name)))
        images[merged_name] = E2.var(name)
    phi = RingHom(merged, E2,
                  tuple(images[v] for v in merged.vars))

    rep = ComparisonReport(label="top corner reconstruction (degree <= %d)" % D)
    P2 = live.top.rels
    for r in assembled.top.rels.gens:
        residue = P2.normal_form(phi(r), budget=budget)
        rep.well_defined.append((str(r), residue.is_zero(), str(residue)))
    image_ideal = Ideal(E2, [phi(g) for g in assembled.top.gens]) + P2
    for w in live.top.gens:
        ok = image_ideal.member(w, budget=budget)
        rep.surjective.append((str(w), ok, "" if ok else "no lift"))
    for m in pres.m_gens:
        for n in pres.n_gens:
            residue = P2.normal_form(
                phi(assembled.square.pair(m, n)) - pair_live(m, n),
                budget=budget)
            rep.pairing_respected.append(
                ("m=%s, n=%s" % (m, n), residue.is_zero(), str(residue)))
    rep.hilbert_target = assembled.top.dims(D, budget=budget)
    rep.hilbert_moore = live.top.dims(D, budget=budget)
    for r in assembled.variant_relations:
        residue = P2.normal_form(phi(r), budget=budget)
        rep.variant_relations.append((str(r), residue.is_zero(), str(residue)))
    return rep

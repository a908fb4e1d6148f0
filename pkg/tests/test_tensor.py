import pytest

from xsq import (ConstructionData, Ideal, QQ, RingHom, Subquotient,
                 assemble_L, build_skeleton, compare_corner, coproduct,
                 free_crossed_on, free_precrossed, functor_M, ideal_equal,
                 peiffer_quotient, tensor_presentation, tensor_square,
                 verify_square, verify_xmod)
from xsq.crossed import CrossedModule


def _corner_modules(skel):
    sq = functor_M(skel, 2)
    base = skel.E1
    ident = RingHom.identity(base)
    M = CrossedModule(top=sq.left, base=base, bnd=ident, embed=ident)
    N = CrossedModule(top=sq.right, base=base, bnd=ident, embed=ident)
    return M, N


def test_tensor_zero_module_collapses(skel_a):
    E1 = skel_a.E1
    pres = tensor_presentation(E1, [E1.var("S")], [])
    assert not pres.symbols
    assert pres.subquotient().dims(6).as_list() == [0] * 7


def test_tensor_fixture_a_presentation(skel_a):
    E1 = skel_a.E1
    pres = tensor_presentation(E1, [E1.var("S")], [E1.parse("S - x^2")])
    assert len(pres.symbols) == 1
    g = pres.symbols[0]
    # single product relation: the square of the symbol rewrites to
    # S*(S - x^2) times the symbol
    assert len(pres.relations.gens) == 1
    rel = pres.relations.gens[0]
    assert pres.relations.member(g * g - pres.embed(E1.parse("S*(S-x^2)")) * g)
    assert rel.wdeg() == 8
    # structure map: symbol -> product of the generator pair
    assert pres.lam(g) == E1.parse("S*(S - x^2)")


def test_tensor_square_verifies(skel_a, skel_b):
    for skel in (skel_a, skel_b):
        M, N = _corner_modules(skel)
        sq, pres = tensor_square(M, N)
        rep = verify_square(sq)
        assert rep.ok, rep.to_text()


def test_tensor_slot_relations_from_syzygies(skel_b):
    E1 = skel_b.E1
    m_gens = [E1.var("S1"), E1.var("S2")]
    n_gens = [E1.parse("S1 - x^2"), E1.parse("S2 - x*y")]
    pres = tensor_presentation(E1, m_gens, n_gens)
    assert len(pres.symbols) == 4
    # a slot-one syzygy relation: S2*(S1 (x) n) - S1*(S2 (x) n) maps to 0
    g00, g10 = pres.ring.var("g0_0"), pres.ring.var("g1_0")
    emb = pres.embed
    candidate = emb(E1.var("S2")) * g00 - emb(E1.var("S1")) * g10
    assert pres.relations.member(candidate) \
        or pres.relations.member(-candidate)


def test_tensor_symmetry_of_relations(skel_b):
    E1 = skel_b.E1
    m_gens = [E1.var("S1"), E1.var("S2")]
    n_gens = [E1.parse("S1 - x^2"), E1.parse("S2 - x*y")]
    direct = tensor_presentation(E1, m_gens, n_gens)
    swapped = tensor_presentation(E1, n_gens, m_gens)
    for d in range(7):
        assert direct.subquotient().dims(d).dims == \
            swapped.subquotient().dims(d).dims


def test_tensor_expand_is_bilinear(skel_a):
    E1 = skel_a.E1
    pres = tensor_presentation(E1, [E1.var("S")], [E1.parse("S - x^2")])
    S, nbar = E1.var("S"), E1.parse("S - x^2")
    two = QQ.coerce(2)
    lhs = pres.expand(S * two + E1.parse("x*S"), nbar)
    rhs = pres.expand(S, nbar) * two + pres.expand(E1.parse("x*S"), nbar)
    assert pres.relations.member(lhs - rhs)


def test_coproduct_with_zero_module(data_a):
    cm = peiffer_quotient(free_precrossed(data_a), data_a)
    zero = free_crossed_on(cm.base, (), ())
    result = coproduct(cm, zero)
    assert result.cm is cm
    assert result.cm.top.rels.groebner() == cm.top.rels.groebner()


def test_coproduct_of_two_copies(data_a):
    # both inputs the free crossed module of the one-generator data: the
    # merged presentation carries copies S_a, S_b and the cross Peiffer
    # generator x^2*S_a - x^2*S_b
    cm = peiffer_quotient(free_precrossed(data_a), data_a)
    result = coproduct(cm, cm)
    merged = result.cm.top.ambient
    assert "S_a" in merged.vars and "S_b" in merged.vars
    assert len(result.cross_relations) == 1
    cross = result.cross_relations[0]
    assert cross == merged.parse("x^2*S_a - x^2*S_b") \
        or cross == merged.parse("x^2*S_b - x^2*S_a")
    # the boundary kills every Peiffer generator
    for g in result.cross_relations:
        assert result.cm.bnd(g).is_zero()
    # injections are algebra maps compatible with the boundaries
    for g in cm.top.gens:
        assert result.cm.bnd(result.i_hom(g)) == cm.bnd(g)
        assert result.cm.bnd(result.j_hom(g)) == cm.bnd(g)
    assert verify_xmod(result.cm).ok


def test_coproduct_satisfies_cm2(data_b):
    cm = peiffer_quotient(free_precrossed(data_b), data_b)
    result = coproduct(cm, cm)
    assert verify_xmod(result.cm).ok


def test_assemble_reduces_to_tensor_without_s3(skel_b):
    assembled = assemble_L(skel_b)
    pres = assembled.tensor
    assert not assembled.extra_relations
    assert ideal_equal(
        Ideal(pres.ring, [g for g in assembled.top.rels.gens]),
        pres.relations)


def test_assemble_fixture_c_presentation(skel_c):
    assembled = assemble_L(skel_c)
    merged = assembled.top.ambient
    assert "T" in merged.vars
    assert len([v for v in merged.vars if v.startswith("g")]) == 4
    # two relation families, one per (generator, adjoined name) pair
    assert len(assembled.extra_relations) == 4
    # well-formedness: both sides of each interchange relation have the
    # same boundary, so the relations map to zero
    for rel in assembled.extra_relations:
        assert assembled.square.bnd(rel).is_zero()
    # the square structure on the assembly verifies
    rep = verify_square(assembled.square)
    assert rep.ok, rep.to_text()


def test_assembled_variant_relations_are_not_boundary_compatible(skel_c):
    assembled = assemble_L(skel_c)
    assert any(not assembled.square.bnd(rel).is_zero()
               for rel in assembled.variant_relations)


@pytest.mark.parametrize("which,D", [("a", 6), ("b", 6)])
def test_corner_comparison_tensor(which, D, skel_a, skel_b):
    skel = {"a": skel_a, "b": skel_b}[which]
    rep = compare_corner(skel, D=D)
    assert rep.ok, rep.to_text()
    assert all(ok for _, ok, _ in rep.well_defined)
    assert all(ok for _, ok, _ in rep.surjective)
    assert rep.hilbert_target.dims == rep.hilbert_moore.dims


def test_corner_comparison_assembly(skel_c):
    rep = compare_corner(skel_c, D=5)
    assert rep.ok, rep.to_text()
    # the bare-term variant relations do not map to zero: recorded, not hidden
    assert rep.variant_relations
    assert not any(ok for _, ok, _ in rep.variant_relations)


def test_corner_comparison_trivial_data():
    data = ConstructionData(QQ, ["x"], [], [])
    rep = compare_corner(build_skeleton(data), D=3)
    assert rep.ok
    assert rep.hilbert_target.as_list() == [0, 0, 0, 0]


def test_comparison_report_serialization(skel_a):
    rep = compare_corner(skel_a, D=4)
    obj = rep.to_obj()
    assert obj["ok"] is True
    assert obj["hilbert"]["equal"] is True
    assert "pass" in rep.to_text()

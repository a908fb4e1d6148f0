"""The 2-skeletal free simplicial algebra of construction data.

Construction data is a base variable set S1 (so R = k[S1]), adjoined level-1
generators S2 with prescribed images in R, and level-2 generators S3 with
images in the augmentation ideal of R[S2] that die under the level-1
boundary.  The skeleton carries levels 0..3 with every face and degeneracy
map; images are forced by the simplicial identities together with the
free-construction rule that a new level-k generator has all faces zero
except the k-th.

Canonical variable names: an adjoined generator X at level 1 produces
``s0_X`` and ``s1_X`` at level 2 and the three canonical double
degeneracies ``s1s0_X``, ``s2s0_X``, ``s2s1_X`` at level 3 (the rewriting
s_i s_j = s_{j+1} s_i for i <= j normalizes every composite to these); a
level-2 generator T produces ``s0_T``, ``s1_T``, ``s2_T``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .scalars import field_from_label
from .rings import PolyRing, RingHom
from .groebner import Ideal, hom_kernel, ideal_intersect

RESERVED_PREFIXES = ("s0_", "s1_", "s2_", "s1s0_", "s2s0_", "s2s1_")


class InvalidData(ValueError):
    """Construction data failed validation; carries per-field messages."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


def _weight_of(image):
    return max(1, image.wdeg())


class ConstructionData:
    """Validated 2-dimensional construction data.

    s2 and s3 are tuples of (name, image) with images already parsed into
    the base ring R and into E1 = R[S2] respectively.
    """

    def __init__(self, field, s1_names, s2, s3):
        self.field = field
        self.s1_names = tuple(s1_names)
        problems = []
        for name in self.s1_names:
            if name.startswith(RESERVED_PREFIXES):
                problems.append("S1 name %r uses a reserved prefix" % name)
        seen = set(self.s1_names)
        if len(seen) != len(self.s1_names):
            problems.append("duplicate names in S1")
        if problems:
            raise InvalidData(problems)
        try:
            self.base_ring = PolyRing(self.s1_names, field)
        except ValueError as e:
            raise InvalidData(["S1: %s" % e])

        parsed2 = []
        for name, image in s2:
            if name in seen or name.startswith(RESERVED_PREFIXES):
                problems.append("S2 name %r duplicates another name or uses "
                                "a reserved prefix" % name)
                continue
            seen.add(name)
            if isinstance(image, str):
                try:
                    image = self.base_ring.parse(image)
                except ValueError as e:
                    problems.append("S2 image for %r: %s" % (name, e))
                    continue
            if image.ring != self.base_ring:
                problems.append("S2 image for %r is not in the base ring" % name)
                continue
            parsed2.append((name, image))
        self.s2 = tuple(parsed2)

        self.ring1 = self.base_ring.extend(
            [n for n, _ in self.s2], [_weight_of(img) for _, img in self.s2])

        parsed3 = []
        for name, image in s3:
            if name in seen or name.startswith(RESERVED_PREFIXES):
                problems.append("S3 name %r duplicates another name or uses "
                                "a reserved prefix" % name)
                continue
            seen.add(name)
            if isinstance(image, str):
                try:
                    image = self.ring1.parse(image)
                except ValueError as e:
                    problems.append("S3 image for %r: %s" % (name, e))
                    continue
            if image.ring != self.ring1:
                problems.append("S3 image for %r is not in R[S2]" % name)
                continue
            if not self._in_augmentation(image):
                problems.append(
                    "S3 image for %r is not in the augmentation ideal (S2)"
                    % name)
            boundary = self.level1_boundary()(image)
            if not boundary.is_zero():
                problems.append(
                    "S3 image %s for %r has nonzero boundary %s"
                    % (image, name, boundary))
            parsed3.append((name, image))
        self.s3 = tuple(parsed3)
        if problems:
            raise InvalidData(problems)

    def _in_augmentation(self, p):
        offset = len(self.s1_names)
        return all(any(m[offset:]) for m in p.terms) or p.is_zero()

    def level1_boundary(self):
        """The map R[S2] -> R sending each adjoined generator to its image."""
        return RingHom.from_map(
            self.ring1, self.base_ring,
            {name: image for name, image in self.s2})

    @property
    def s2_names(self):
        return tuple(n for n, _ in self.s2)

    @property
    def s3_names(self):
        return tuple(n for n, _ in self.s3)

    @property
    def boundary_images(self):
        return tuple(img for _, img in self.s2)

    def truncate(self, level):
        """Sub-data for the level-skeleton: drop S3 below 2, S2 below 1."""
        if level >= 2:
            return self
        if level == 1:
            return ConstructionData(self.field, self.s1_names, self.s2, ())
        return ConstructionData(self.field, self.s1_names, (), ())

    # -- serialization -----------------------------------------------------

    @classmethod
    def from_dict(cls, obj):
        problems = []
        if not isinstance(obj, dict):
            raise InvalidData(["input is not a JSON object"])
        field_label = obj.get("field", "Q")
        try:
            field = field_from_label(field_label)
        except (ValueError, TypeError) as e:
            raise InvalidData(["field: %s" % e])
        s1 = obj.get("S1", [])
        if not isinstance(s1, list) or not all(isinstance(v, str) for v in s1):
            raise InvalidData(["S1 must be a list of names"])

        def entries(key):
            rows = obj.get(key, [])
            if not isinstance(rows, list):
                problems.append("%s must be a list" % key)
                return []
            out = []
            for row in rows:
                if (not isinstance(row, dict)
                        or set(row) != {"name", "image"}):
                    problems.append("%s entries need name and image" % key)
                    continue
                out.append((row["name"], row["image"]))
            return out

        s2, s3 = entries("S2"), entries("S3")
        if problems:
            raise InvalidData(problems)
        return cls(field, s1, s2, s3)

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidData(["invalid JSON: %s" % e])
        return cls.from_dict(obj)

    def to_dict(self):
        return {
            "field": self.field.label(),
            "S1": list(self.s1_names),
            "S2": [{"name": n, "image": str(img)} for n, img in self.s2],
            "S3": [{"name": n, "image": str(img)} for n, img in self.s3],
        }


@dataclass
class MooreData:
    """Moore kernels at levels 1 and 2 plus the degenerate ideal at 3."""

    ne1: Ideal        # Ker d_0^1
    kbar: Ideal       # Ker d_1^1
    ne2: Ideal        # Ker d_0^2 cap Ker d_1^2
    degenerate3: Ideal


class Skeleton2:
    """Levels 0..3 of the free simplicial algebra with all face and
    degeneracy homomorphisms; immutable after construction."""

    def __init__(self, data):
        self.data = data
        R = data.base_ring
        field = data.field
        s2n = data.s2_names
        s3n = data.s3_names
        w2 = [_weight_of(img) for _, img in data.s2]
        w3 = [_weight_of(img) for _, img in data.s3]

        E0 = R
        E1 = data.ring1
        E2 = R.extend(
            ["s0_" + n for n in s2n] + ["s1_" + n for n in s2n] + list(s3n),
            w2 + w2 + w3)
        E3 = R.extend(
            ["s1s0_" + n for n in s2n] + ["s2s0_" + n for n in s2n]
            + ["s2s1_" + n for n in s2n]
            + ["s0_" + n for n in s3n] + ["s1_" + n for n in s3n]
            + ["s2_" + n for n in s3n],
            w2 * 3 + w3 * 3)
        self.rings = (E0, E1, E2, E3)

        t = {n: img for n, img in data.s2}
        f3 = {n: img for n, img in data.s3}

        def hom(dom, cod, mapping):
            return RingHom.from_map(dom, cod, mapping)

        face = {}
        degen = {}
        # level 1 faces: the adjoined generators have face 0 zero and
        # face 1 the prescribed boundary image
        face[(1, 0)] = hom(E1, E0, {n: E0.zero for n in s2n})
        face[(1, 1)] = hom(E1, E0, {n: _lift(t[n], E0) for n in s2n})
        degen[(0, 0)] = hom(E0, E1, {})

        # level 1 degeneracies into E2
        degen[(1, 0)] = hom(E1, E2, {n: E2.var("s0_" + n) for n in s2n})
        degen[(1, 1)] = hom(E1, E2, {n: E2.var("s1_" + n) for n in s2n})

        # level 2 faces
        m0, m1, m2 = {}, {}, {}
        for n in s2n:
            m0["s0_" + n] = E1.var(n)
            m0["s1_" + n] = E1.zero
            m1["s0_" + n] = E1.var(n)
            m1["s1_" + n] = E1.var(n)
            m2["s0_" + n] = _lift(t[n], E1)
            m2["s1_" + n] = E1.var(n)
        for n in s3n:
            m0[n] = E1.zero
            m1[n] = E1.zero
            m2[n] = f3[n]
        face[(2, 0)] = hom(E2, E1, m0)
        face[(2, 1)] = hom(E2, E1, m1)
        face[(2, 2)] = hom(E2, E1, m2)

        # level 2 degeneracies, normalized to the canonical double names
        g0, g1, g2 = {}, {}, {}
        for n in s2n:
            g0["s0_" + n] = E3.var("s1s0_" + n)
            g0["s1_" + n] = E3.var("s2s0_" + n)
            g1["s0_" + n] = E3.var("s1s0_" + n)
            g1["s1_" + n] = E3.var("s2s1_" + n)
            g2["s0_" + n] = E3.var("s2s0_" + n)
            g2["s1_" + n] = E3.var("s2s1_" + n)
        for n in s3n:
            g0[n] = E3.var("s0_" + n)
            g1[n] = E3.var("s1_" + n)
            g2[n] = E3.var("s2_" + n)
        degen[(2, 0)] = hom(E2, E3, g0)
        degen[(2, 1)] = hom(E2, E3, g1)
        degen[(2, 2)] = hom(E2, E3, g2)

        # level 3 faces
        n0, n1, n2, n3 = {}, {}, {}, {}
        for n in s2n:
            n0["s1s0_" + n] = E2.var("s0_" + n)
            n0["s2s0_" + n] = E2.var("s1_" + n)
            n0["s2s1_" + n] = E2.zero
            n1["s1s0_" + n] = E2.var("s0_" + n)
            n1["s2s0_" + n] = E2.var("s1_" + n)
            n1["s2s1_" + n] = E2.var("s1_" + n)
            n2["s1s0_" + n] = E2.var("s0_" + n)
            n2["s2s0_" + n] = E2.var("s0_" + n)
            n2["s2s1_" + n] = E2.var("s1_" + n)
            n3["s1s0_" + n] = _lift(t[n], E2)
            n3["s2s0_" + n] = E2.var("s0_" + n)
            n3["s2s1_" + n] = E2.var("s1_" + n)
        s0_1, s1_1 = degen[(1, 0)], degen[(1, 1)]
        for n in s3n:
            n0["s0_" + n] = E2.var(n)
            n0["s1_" + n] = E2.zero
            n0["s2_" + n] = E2.zero
            n1["s0_" + n] = E2.var(n)
            n1["s1_" + n] = E2.var(n)
            n1["s2_" + n] = E2.zero
            n2["s0_" + n] = E2.zero
            n2["s1_" + n] = E2.var(n)
            n2["s2_" + n] = E2.var(n)
            n3["s0_" + n] = s0_1(f3[n])
            n3["s1_" + n] = s1_1(f3[n])
            n3["s2_" + n] = E2.var(n)
        face[(3, 0)] = hom(E3, E2, n0)
        face[(3, 1)] = hom(E3, E2, n1)
        face[(3, 2)] = hom(E3, E2, n2)
        face[(3, 3)] = hom(E3, E2, n3)

        self.face = face
        self.degen = degen
        self._moore = None

    # convenient aliases
    @property
    def base(self):
        return self.rings[0]

    @property
    def E1(self):
        return self.rings[1]

    @property
    def E2(self):
        return self.rings[2]

    @property
    def E3(self):
        return self.rings[3]

    def boundary_images(self):
        return {n: img for n, img in self.data.s2}

    def moore(self, budget=None):
        """Moore kernels via hom kernels and an ideal intersection,
        cross-checked against their closed forms."""
        if self._moore is not None:
            return self._moore
        E1, E2, E3 = self.E1, self.E2, self.E3
        ne1 = hom_kernel(self.face[(1, 0)], budget=budget)
        kbar = hom_kernel(self.face[(1, 1)], budget=budget)
        s2n = self.data.s2_names
        s3n = self.data.s3_names
        t = self.boundary_images()
        expect_ne1 = Ideal(E1, [E1.var(n) for n in s2n])
        expect_kbar = Ideal(E1, [E1.var(n) - _lift(t[n], E1) for n in s2n])
        if ne1.groebner() != expect_ne1.groebner():
            raise AssertionError("Ker d_0^1 disagrees with its closed form")
        if kbar.groebner() != expect_kbar.groebner():
            raise AssertionError("Ker d_1^1 disagrees with its closed form")
        k0 = hom_kernel(self.face[(2, 0)], budget=budget)
        k1 = hom_kernel(self.face[(2, 1)], budget=budget)
        expect_k0 = Ideal(E2, [E2.var("s1_" + n) for n in s2n]
                          + [E2.var(n) for n in s3n])
        expect_k1 = Ideal(E2, [E2.var("s0_" + n) - E2.var("s1_" + n)
                               for n in s2n] + [E2.var(n) for n in s3n])
        if k0.groebner() != expect_k0.groebner():
            raise AssertionError("Ker d_0^2 disagrees with its closed form")
        if k1.groebner() != expect_k1.groebner():
            raise AssertionError("Ker d_1^2 disagrees with its closed form")
        ne2 = ideal_intersect(k0, k1, budget=budget)
        ne2 = Ideal(E2, ne2.groebner(budget=budget))
        deg3 = Ideal(E3, [E3.var(v) for v in E3.vars
                          if v not in self.data.s1_names])
        self._moore = MooreData(ne1=Ideal(E1, ne1.groebner()),
                                kbar=Ideal(E1, kbar.groebner()),
                                ne2=ne2, degenerate3=deg3)
        return self._moore


def _lift(p, ring):
    """Reinterpret a polynomial in a ring containing the same variables."""
    hom = RingHom.from_map(p.ring, ring, {})
    return hom(p)


def build_skeleton(data, level=2):
    """Skeleton of the (possibly truncated) construction data."""
    return Skeleton2(data.truncate(level))


def simplicial_identity_report(skel):
    """Exhaustive check of the simplicial identities on generators at all
    levels <= 3; returns (name, ok) pairs."""
    face, degen = skel.face, skel.degen
    out = []

    def eq(name, h1, h2):
        ok = all(h1(h1.domain.var(v)) == h2(h2.domain.var(v))
                 for v in h1.domain.vars)
        out.append((name, ok))

    # d_i d_j = d_{j-1} d_i for i < j
    for n in (2, 3):
        for j in range(n + 1):
            for i in range(j):
                eq("d%d d%d = d%d d%d (level %d)" % (i, j, j - 1, i, n),
                   face[(n, j)].then(face[(n - 1, i)]),
                   face[(n, i)].then(face[(n - 1, j - 1)]))
    # s_i s_j = s_{j+1} s_i for i <= j
    for n in (0, 1):
        for j in range(n + 1):
            for i in range(j + 1):
                eq("s%d s%d = s%d s%d (level %d)" % (i, j, j + 1, i, n),
                   degen[(n, j)].then(degen[(n + 1, i)]),
                   degen[(n, i)].then(degen[(n + 1, j + 1)]))
    # d_i s_j relations
    for n in (0, 1, 2):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = degen[(n, j)].then(face[(n + 1, i)])
                if i == j or i == j + 1:
                    rhs = RingHom.identity(skel.rings[n])
                    name = "d%d s%d = id (level %d)" % (i, j, n)
                elif i < j:
                    rhs = face[(n, i)].then(degen[(n - 1, j - 1)])
                    name = "d%d s%d = s%d d%d (level %d)" % (i, j, j - 1, i, n)
                else:
                    rhs = face[(n, i - 1)].then(degen[(n - 1, j)])
                    name = "d%d s%d = s%d d%d (level %d)" % (i, j, j, i - 1, n)
                eq(name, lhs, rhs)
    return out


def peiffer_P1(data):
    """Ideal of E1 generated by X_i X_j - t_i X_j over all ordered pairs:
    the defects of the second crossed-module axiom for the free pre-crossed
    module."""
    E1 = data.ring1
    t = {n: img for n, img in data.s2}
    gens = []
    for ni, _ in data.s2:
        for nj, _ in data.s2:
            gens.append(E1.var(ni) * E1.var(nj)
                        - _lift(t[ni], E1) * E1.var(nj))
    return Ideal(E1, gens)


def _c_instances(skel, budget=None):
    """The six quadratic families inside level 3, instantiated on the
    generators of the level-1 and level-2 Moore kernels.  Yields
    (label, element, touches_s3) triples."""
    moore = skel.moore(budget=budget)
    s0 = skel.degen[(2, 0)]
    s1 = skel.degen[(2, 1)]
    s2 = skel.degen[(2, 2)]
    s10 = skel.degen[(1, 0)].then(skel.degen[(2, 1)])
    s20 = skel.degen[(1, 0)].then(skel.degen[(2, 2)])
    s21 = skel.degen[(1, 1)].then(skel.degen[(2, 2)])
    s3vars = set(skel.data.s3_names)

    def touches(*args):
        return any(v in s3vars for p in args for v in p.support_vars())

    xs1 = moore.ne1.gens
    ys = moore.ne2.gens
    out = []
    for x in xs1:
        for y in ys:
            u = touches(y)
            out.append(("C_(1,0)(2)", (s10(x) - s20(x)) * s2(y), u))
            out.append(("C_(2,0)(1)", (s20(x) - s21(x)) * (s1(y) - s2(y)), u))
            out.append(("C_(2,1)(0)", s21(x) * (s0(y) - s1(y) + s2(y)), u))
    for x in ys:
        for y in ys:
            u = touches(x, y)
            out.append(("C_(1)(0)", s1(x) * (s0(y) - s1(y)) + s2(x * y), u))
            out.append(("C_(2)(0)", s2(x) * s0(y), u))
            out.append(("C_(2)(1)", s2(x) * (s1(y) - s2(y)), u))
    return out


def peiffer_P2(skel, route="c_families", budget=None, s3_free_only=False):
    """Second-order Peiffer ideal of E2: the image under the last face of
    the degenerate part of the level-3 Moore kernel.

    route "c_families": instantiate the six quadratic families on Moore
    generators inside E3 and push down along d_3 (works with or without
    level-2 construction generators).  route "explicit_list": the six
    generator families written directly in E2, one per pair of adjoined
    generators; empty when S3 is empty.
    """
    E2 = skel.E2
    if route == "c_families":
        d = {i: skel.face[(3, i)] for i in range(4)}
        gens = []
        for _, z, uses_s3 in _c_instances(skel, budget=budget):
            if s3_free_only and uses_s3:
                continue
            for i in (0, 1, 2):
                img = d[i](z)
                if not img.is_zero():
                    raise AssertionError(
                        "family element has nonzero face %d: %s" % (i, img))
            img = d[3](z)
            if not img.is_zero():
                gens.append(img)
        return Ideal(E2, gens)
    if route == "explicit_list":
        if not skel.data.s3_names:
            return Ideal(E2, [])
        s0 = skel.degen[(1, 0)]
        s1 = skel.degen[(1, 1)]
        d2 = skel.face[(2, 2)]
        t = skel.boundary_images()
        gens = []
        for n in skel.data.s2_names:
            Sn = _lift(t[n], E2)          # s1 s0 d1 of the generator
            s0n, s1n = E2.var("s0_" + n), E2.var("s1_" + n)
            for m in skel.data.s3_names:
                T = E2.var(m)
                u0, u1 = s0(d2(T)), s1(d2(T))
                gens.append((Sn - s0n) * T)
                gens.append((s0n - s1n) * (u1 - T))
                gens.append(s1n * (u0 - u1 + T))
        for mi in skel.data.s3_names:
            Ti = E2.var(mi)
            v0i, v1i = s0(d2(Ti)), s1(d2(Ti))
            for mj in skel.data.s3_names:
                Tj = E2.var(mj)
                v0j, v1j = s0(d2(Tj)), s1(d2(Tj))
                gens.append(Ti * (v1j - Tj))
                gens.append(Ti * (Tj + v0j - v1j))
                gens.append((v0i - v1i + Ti) * (v1j - Tj))
        return Ideal(E2, gens)
    raise ValueError("unknown route %r" % (route,))

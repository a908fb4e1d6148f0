"""Sparse multivariate polynomials with exact coefficients.

A ring fixes an ordered variable list, a ground field, per-variable weights
(used for the degree filtration) and a monomial order.  Polynomials are
immutable dictionaries from exponent tuples to nonzero coefficients; two
polynomials are equal iff their canonical term lists are identical.

The text grammar understood by :func:`PolyRing.parse`:

    expr   := ['+'|'-'] term ( ('+'|'-') term )*
    term   := factor ( '*' factor )*
    factor := atom [ '^' INT ]
    atom   := INT [ '/' INT ] | NAME | '(' expr ')'

Implicit multiplication is rejected, exponents must be non-negative.
"""

from __future__ import annotations

import re

from .scalars import QQ


class ParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def _key_wdegrevlex(exps, weights):
    wd = 0
    for e, w in zip(exps, weights):
        wd += e * w
    return (wd, tuple(-e for e in reversed(exps)))


class PolyRing:
    """Polynomial ring k[x_1, ..., x_n] with a fixed monomial order.

    order is "wdegrevlex" (default), "lex", or ("block", k): the first k
    variables form an elimination block, wdegrevlex inside each block.
    """

    __slots__ = ("vars", "field", "weights", "order", "_index", "_hash")

    def __init__(self, vars, field=QQ, weights=None, order="wdegrevlex"):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names in %r" % (vars,))
        for v in vars:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                raise ValueError("invalid variable name %r" % (v,))
        self.vars = vars
        self.field = field
        self.weights = tuple(weights) if weights is not None else (1,) * len(vars)
        if len(self.weights) != len(vars):
            raise ValueError("weight count does not match variable count")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        if not (order in ("wdegrevlex", "lex")
                or (isinstance(order, tuple) and order[0] == "block")):
            raise ValueError("unknown monomial order %r" % (order,))
        self.order = order
        self._index = {v: i for i, v in enumerate(vars)}
        self._hash = hash((self.vars, self.field, self.weights, self.order))

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.vars == other.vars
                and self.field == other.field
                and self.weights == other.weights
                and self.order == other.order)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "PolyRing(%s over %r)" % (", ".join(self.vars), self.field)

    # -- monomial order -------------------------------------------------

    def mono_key(self, exps):
        """Sort key; larger key = larger monomial in the ring's order."""
        order = self.order
        if order == "wdegrevlex":
            return _key_wdegrevlex(exps, self.weights)
        if order == "lex":
            return exps
        k = order[1]
        return (_key_wdegrevlex(exps[:k], self.weights[:k]),
                _key_wdegrevlex(exps[k:], self.weights[k:]))

    def wdeg(self, exps):
        return sum(e * w for e, w in zip(exps, self.weights))

    # -- element constructors -------------------------------------------

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * len(self.vars): c})

    def var(self, name):
        if name not in self._index:
            raise KeyError("no variable %r in %r" % (name, self))
        e = [0] * len(self.vars)
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return tuple(self.var(v) for v in self.vars)

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != len(self.vars) or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = self.field.coerce(coeff)
        if not c:
            return self.zero
        return Polynomial(self, {exps: c})

    def with_order(self, order):
        return PolyRing(self.vars, self.field, self.weights, order)

    def extend(self, new_vars, new_weights):
        """Ring with extra variables appended (same field and order)."""
        return PolyRing(self.vars + tuple(new_vars), self.field,
                        self.weights + tuple(new_weights), self.order)

    def drop_to(self, keep_vars):
        """Ring on a subset of the variables, original order of appearance."""
        keep = [v for v in self.vars if v in set(keep_vars)]
        w = [self.weights[self._index[v]] for v in keep]
        return PolyRing(keep, self.field, w, "wdegrevlex")

    # -- parsing ---------------------------------------------------------

    def parse(self, text):
        return _parse(text, self)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()/]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("unexpected character %r" % text[pos], pos)
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        kind, val, pos = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                raise ParseError("implicit multiplication is not allowed", pos)
            else:
                return p

    def factor(self):
        p = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                raise ParseError("negative exponent", pos)
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            self.take()
            p = p ** val
        return p

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int":
                    raise ParseError("denominator must be an integer", p3)
                if v3 == 0:
                    raise ParseError("zero denominator", p3)
                from fractions import Fraction
                return self.ring.const(Fraction(val, v3))
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError("unknown variable %r" % val, pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return p
        raise ParseError("unexpected token %r" % (val,), pos)


def _parse(text, ring):
    parser = _Parser(_tokenize(text), ring)
    p = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input %r" % (val,), pos)
    return p


class Polynomial:
    """Immutable sparse polynomial; term dict maps exponent tuples to
    nonzero coefficients."""

    __slots__ = ("ring", "terms", "_sorted", "_hash", "_lead")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None
        self._lead = None

    # -- canonical views --------------------------------------------------

    def sorted_terms(self):
        """Terms in descending monomial order (cached)."""
        if self._sorted is None:
            key = self.ring.mono_key
            self._sorted = tuple(sorted(self.terms.items(),
                                        key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def is_zero(self):
        return not self.terms

    def leading(self):
        """(monomial, coefficient) of the leading term; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lead is None:
            if self._sorted is not None:
                self._lead = self._sorted[0]
            else:
                m = max(self.terms, key=self.ring.mono_key)
                self._lead = (m, self.terms[m])
        return self._lead

    def lm(self):
        return self.leading()[0]

    def lc(self):
        return self.leading()[1]

    def wdeg(self):
        """Weighted total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        w = self.ring.wdeg
        return max(w(m) for m in self.terms)

    def monic(self):
        if not self.terms:
            return self
        c = self.lc()
        if c == self.ring.field.one:
            return self
        return self * (self.ring.field.one / c)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def constant_term(self):
        return self.coefficient((0,) * len(self.ring.vars))

    def degree_in(self, name):
        i = self.ring._index[name]
        return max((m[i] for m in self.terms), default=0)

    def support_vars(self):
        """Names of variables that actually occur."""
        used = [False] * len(self.ring.vars)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.vars, used) if u)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            # scalar multiplication
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- formatting ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            body = []
            for v, e in zip(self.ring.vars, m):
                if e == 1:
                    body.append(v)
                elif e > 1:
                    body.append("%s^%d" % (v, e))
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not body:
                piece = cs
            elif cs == "1":
                piece = "*".join(body)
            else:
                piece = "*".join([cs] + body)
            if not chunks:
                chunks.append("-" + piece if neg else piece)
            else:
                chunks.append((" - " if neg else " + ") + piece)
        return "".join(chunks)

    def __repr__(self):
        return "<%s>" % self


class RingHom:
    """Algebra map determined by one image polynomial per domain variable."""

    __slots__ = ("domain", "codomain", "images")

    def __init__(self, domain, codomain, images):
        images = tuple(images)
        if len(images) != len(domain.vars):
            raise ValueError("need %d images, got %d"
                             % (len(domain.vars), len(images)))
        for img in images:
            if img.ring != codomain:
                raise ValueError("image %r not in the codomain" % (img,))
        self.domain = domain
        self.codomain = codomain
        self.images = images

    @classmethod
    def from_map(cls, domain, codomain, mapping, default="same_name"):
        """Build from a name -> image dict; unmapped variables go to the
        codomain variable of the same name (or to 0 with default=0)."""
        images = []
        for v in domain.vars:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, str):
                    img = codomain.parse(img)
                images.append(img)
            elif default == "same_name":
                images.append(codomain.var(v))
            elif default == 0:
                images.append(codomain.zero)
            else:
                raise KeyError("no image for variable %r" % v)
        return cls(domain, codomain, images)

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens())

    def __call__(self, p):
        if p.ring != self.domain:
            raise ValueError("argument not in the domain ring")
        out = self.codomain.zero
        # per-variable power cache keeps substitution cheap on small inputs
        powers = [{0: self.codomain.one} for _ in self.images]
        for m, c in p.sorted_terms():
            term = self.codomain.const(c)
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = self.images[i] ** e
                    term = term * cache[e]
            out = out + term
        return out

    def then(self, other):
        """Composite ``other after self`` (apply self first)."""
        if other.domain != self.codomain:
            raise ValueError("homomorphisms do not compose")
        return RingHom(self.domain, other.codomain,
                       tuple(other(img) for img in self.images))

    def __repr__(self):
        pairs = ", ".join("%s->%s" % (v, img)
                          for v, img in zip(self.domain.vars, self.images))
        return "RingHom(%s)" % pairs


def fresh_names(candidates, taken):
    """Deterministically rename candidates to avoid the taken set."""
    out = []
    used = set(taken)
    for name in candidates:
        new = name
        while new in used:
            new = new + "_"
        used.add(new)
        out.append(new)
    return out


# -- operation surface -------------------------------------------------------


def parse_poly(text, ring):
    """Parse an expression string into a canonical ring element."""
    return ring.parse(text)


def format_poly(p):
    """Canonical text form; reparses to an equal value."""
    return str(p)


def poly_arith(op, a, b):
    """Exact arithmetic dispatch: add, sub, mul, or scalar."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scalar":
        return a * b  # b is a field element
    raise ValueError("unknown operation %r" % (op,))


def apply_hom(h, p):
    """Substitution image of p under a ring map."""
    return h(p)

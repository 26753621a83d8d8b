"""Sparse exact multivariate polynomials and truncated jets.

A Poly holds an ordered variable tuple and a dict from exponent tuples
to nonzero field elements (ints in the FieldContext encoding).  All
operations are pure; no instance is mutated after construction.

A Jet is a polynomial together with a truncation precision N: monomials
of total degree >= N are unknown.  precision None means exact.
"""

from __future__ import annotations

from .field import FieldContext, embed_field


class PolyError(ValueError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class Poly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: FieldContext, vars: tuple[str, ...], terms: dict):
        self.field = field
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field, vars):
        return cls(field, vars, {})

    @classmethod
    def const(cls, field, vars, c):
        vars = tuple(vars)
        return cls(field, vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, field, vars, name, exp: int = 1):
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = exp
        return cls(field, vars, {tuple(e): 1})

    @classmethod
    def from_int(cls, field, vars, n: int):
        return cls.const(field, vars, field.element(n))

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Minimal total degree of a term (-1 for the zero polynomial)."""
        return min((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def coeff(self, exps: tuple[int, ...]):
        return self.terms.get(tuple(exps), 0)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.field, self.vars,
                    {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncated(self, n: int) -> "Poly":
        return Poly(self.field, self.vars,
                    {e: c for e, c in self.terms.items() if sum(e) < n})

    def degrees_of(self, name: str):
        i = self.vars.index(name)
        return {e[i] for e in self.terms}

    def uses(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.field != other.field or self.vars != other.vars:
            raise PolyError("polynomial domain mismatch")

    def __add__(self, other):
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(terms.get(e, 0), c)
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly(f, self.vars, terms)

    def __neg__(self):
        f = self.field
        return Poly(f, self.vars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(terms.get(e, 0), f.mul(c1, c2))
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(f, self.vars, terms)

    def mul_truncated(self, other, prec: int) -> "Poly":
        self._check(other)
        f = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) >= prec:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = f.add(terms.get(e, 0), f.mul(c1, c2))
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return Poly(f, self.vars, terms)

    def scale(self, c) -> "Poly":
        f = self.field
        if c == 0:
            return Poly.zero(f, self.vars)
        return Poly(f, self.vars, {e: f.mul(k, c) for e, k in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative polynomial power")
        out = Poly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def pow_truncated(self, n: int, prec: int) -> "Poly":
        out = Poly.const(self.field, self.vars, 1)
        base = self.truncated(prec)
        while n:
            if n & 1:
                out = out.mul_truncated(base, prec)
            base = base.mul_truncated(base, prec)
            n >>= 1
        return out

    def derivative(self, name: str) -> "Poly":
        f = self.field
        i = self.vars.index(name)
        terms: dict = {}
        for e, c in self.terms.items():
            if e[i]:
                c2 = f.mul(c, f.element(e[i]))
                if c2:
                    e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                    s = f.add(terms.get(e2, 0), c2)
                    if s:
                        terms[e2] = s
                    else:
                        terms.pop(e2, None)
        return Poly(f, self.vars, terms)

    # -- structural ops ---------------------------------------------------

    def substitute(self, images: dict, prec: int | None = None) -> "Poly":
        """Substitute Polys for variables; all variables must be assigned."""
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise PolyError(f"missing assignment for {missing[0]}")
        if not self.terms:
            sample = images[self.vars[0]]
            return Poly.zero(sample.field, sample.vars)
        sample = images[self.vars[0]]
        f, vs = sample.field, sample.vars
        pw: list[list[Poly]] = []
        maxes = [max(e[i] for e in self.terms) for i in range(len(self.vars))]
        for i, v in enumerate(self.vars):
            lst = [Poly.const(f, vs, 1)]
            for _ in range(maxes[i]):
                nxt = lst[-1] * images[v] if prec is None \
                    else lst[-1].mul_truncated(images[v], prec)
                lst.append(nxt)
            pw.append(lst)
        out = Poly.zero(f, vs)
        for e, c in self.terms.items():
            t = Poly.const(f, vs, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw[i][k] if prec is None \
                        else t.mul_truncated(pw[i][k], prec)
            out = out + t
        return out

    def evaluate(self, point: dict):
        """Evaluate at a point given as {var: element}."""
        f = self.field
        out = 0
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = f.mul(v, f.pow(point[self.vars[i]], k))
            out = f.add(out, v)
        return out

    def map_coeffs(self, fn, new_field) -> "Poly":
        return Poly(new_field, self.vars, {e: fn(c) for e, c in self.terms.items()})

    def map_field(self, embedding) -> "Poly":
        return self.map_coeffs(embedding, embedding.dst)

    def rename(self, mapping: dict) -> "Poly":
        return Poly(self.field, tuple(mapping.get(v, v) for v in self.vars),
                    self.terms)

    def with_vars(self, newvars: tuple[str, ...]) -> "Poly":
        """Reinterpret in a superset variable tuple (order may change)."""
        idx = [newvars.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(newvars)
            for i, k in zip(idx, e):
                e2[i] = k
            terms[tuple(e2)] = c
        return Poly(self.field, tuple(newvars), terms)

    def drop_vars(self, names) -> "Poly":
        """Remove variables that do not occur."""
        names = set(names)
        for v in names:
            if self.uses(v):
                raise PolyError(f"variable {v} occurs, cannot drop")
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        return Poly(self.field, tuple(self.vars[i] for i in keep),
                    {tuple(e[i] for i in keep): c for e, c in self.terms.items()})

    def to_univariate(self):
        """Coefficient list for a polynomial using at most one variable."""
        used = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        if len(used) > 1:
            raise PolyError("polynomial is not univariate")
        i = used[0] if used else 0
        deg = max((e[i] for e in self.terms), default=0)
        out = [0] * (deg + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        while out and out[-1] == 0:
            out.pop()
        return self.vars[i], out

    @classmethod
    def from_univariate(cls, field, vars, name, coeffs):
        vars = tuple(vars)
        i = vars.index(name)
        terms = {}
        for d, c in enumerate(coeffs):
            if c:
                e = [0] * len(vars)
                e[i] = d
                terms[tuple(e)] = c
        return cls(field, vars, terms)

    # -- display ----------------------------------------------------------

    def _fmt_coeff(self, c) -> str:
        f = self.field
        if f.in_prime_subfield(c):
            return str(c)
        ds = f.digits(c)
        bits = []
        for i, d in enumerate(ds):
            if not d:
                continue
            if i == 0:
                bits.append(str(d))
            else:
                head = "" if d == 1 else f"{d}*"
                bits.append(f"{head}g" if i == 1 else f"{head}g^{i}")
        return "(" + " + ".join(reversed(bits)) + ")"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(),
                       key=lambda t: (sum(t[0]), t[0]), reverse=True)
        parts = []
        for e, c in items:
            factors = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append(f"{v}^{k}")
            cs = self._fmt_coeff(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors:
                parts.append(cs + "*" + "*".join(factors))
            else:
                parts.append(cs)
        return " + ".join(parts)

    __repr__ = __str__

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.vars == other.vars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.vars, frozenset(self.terms.items())))


class Jet:
    """A polynomial truncated at a stated precision (None = exact)."""

    __slots__ = ("body", "precision")

    def __init__(self, body: Poly, precision: int | None):
        if precision is not None:
            body = body.truncated(precision)
        self.body = body
        self.precision = precision

    @property
    def field(self):
        return self.body.field

    @property
    def vars(self):
        return self.body.vars

    @staticmethod
    def _prec(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        other = self._coerce(other)
        return Jet(self.body + other.body, self._prec(self.precision, other.precision))

    def __sub__(self, other):
        other = self._coerce(other)
        return Jet(self.body - other.body, self._prec(self.precision, other.precision))

    def __neg__(self):
        return Jet(-self.body, self.precision)

    def __mul__(self, other):
        other = self._coerce(other)
        p = self._prec(self.precision, other.precision)
        if p is None:
            return Jet(self.body * other.body, None)
        return Jet(self.body.mul_truncated(other.body, p), p)

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, Poly):
            return Jet(other, None)
        raise PolyError("cannot combine jet with " + type(other).__name__)

    def truncate(self, n: int) -> "Jet":
        return Jet(self.body, n if self.precision is None else min(self.precision, n))

    def substitute(self, images: dict, translation: bool = False) -> "Jet":
        """Substitute jets/polys; images need zero constant term unless
        translation is set (which voids the precision guarantee on
        inexact jets)."""
        imgs = {}
        prec = self.precision
        translated = False
        for v in self.body.vars:
            img = images.get(v)
            if img is None:
                raise PolyError(f"missing assignment for {v}")
            if isinstance(img, Jet):
                prec = self._prec(prec, img.precision)
                img = img.body
            if img.constant_term() != 0:
                translated = True
            imgs[v] = img
        if translated and not translation:
            raise PolyError("translation requires the translation flag")
        if translated and prec is not None:
            # unknown high-degree terms can fall to any lower degree
            prec = 0
        body = self.body.substitute(imgs, prec)
        return Jet(body, prec)

    def map_field(self, embedding) -> "Jet":
        return Jet(self.body.map_field(embedding), self.precision)

    def __eq__(self, other):
        return (isinstance(other, Jet) and self.body == other.body
                and self.precision == other.precision)

    def __str__(self):
        if self.precision is None:
            return str(self.body)
        return f"{self.body} + O(deg {self.precision})"

    __repr__ = __str__


# -- parsing ---------------------------------------------------------------


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        t = self.text
        i = self.pos
        while i < len(t) and t[i].isspace():
            i += 1
        self.pos = i
        if i >= len(t):
            return ("end", "", i)
        ch = t[i]
        if ch.isdigit():
            j = i
            while j < len(t) and t[j].isdigit():
                j += 1
            return ("int", t[i:j], i)
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(t) and (t[j].isalnum() or t[j] == "_"):
                j += 1
            return ("ident", t[i:j], i)
        if ch in "+-*^()":
            return (ch, ch, i)
        raise ParseError(f"unexpected character {ch!r}", i)

    def take(self):
        kind, val, off = self.peek()
        self.pos = off + len(val)
        return kind, val, off


def parse_poly(text: str, vars, field: FieldContext) -> Poly:
    """Parse an expression into an exact Poly.

    Grammar: sums of terms, factors joined by '*', powers with '^' and
    nonnegative integer exponents, integer literals reduced mod p,
    parentheses, unary minus.  Identifiers must be declared variables
    ('g' additionally names the field generator when the field is a
    proper extension).  Juxtaposition is a syntax error.
    """
    vars = tuple(vars)
    tk = _Tokenizer(text)

    def parse_expr():
        kind, _, _ = tk.peek()
        neg = False
        if kind == "-":
            tk.take()
            neg = True
        acc = parse_term()
        if neg:
            acc = -acc
        while True:
            kind, _, _ = tk.peek()
            if kind == "+":
                tk.take()
                acc = acc + parse_term()
            elif kind == "-":
                tk.take()
                acc = acc - parse_term()
            else:
                return acc

    def parse_term():
        acc = parse_factor()
        while True:
            kind, _, _ = tk.peek()
            if kind == "*":
                tk.take()
                acc = acc * parse_factor()
            else:
                return acc

    def parse_factor():
        base = parse_atom()
        kind, _, _ = tk.peek()
        if kind == "^":
            tk.take()
            k2, val, off = tk.take()
            if k2 != "int":
                raise ParseError("exponent must be a nonnegative integer", off)
            return base ** int(val)
        return base

    def parse_atom():
        kind, val, off = tk.take()
        if kind == "int":
            return Poly.from_int(field, vars, int(val))
        if kind == "ident":
            if val in vars:
                return Poly.var(field, vars, val)
            if val == "g" and field.k > 1:
                return Poly.const(field, vars, field.p)
            raise ParseError(f"unknown identifier {val!r}", off)
        if kind == "(":
            inner = parse_expr()
            k2, _, off2 = tk.take()
            if k2 != ")":
                raise ParseError("expected ')'", off2)
            return inner
        if kind == "-":
            return -parse_factor()
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", off)

    out = parse_expr()
    kind, val, off = tk.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", off)
    return out


def poly_expr(f: Poly) -> str:
    """Printer whose output re-parses to the same polynomial."""
    return str(f)

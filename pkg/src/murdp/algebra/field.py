"""Exact finite field arithmetic F_{p^k}.

Elements are encoded as plain ints in [0, p^k): the element
c_0 + c_1*a + ... + c_{k-1}*a^{k-1} (a = residue of x mod the modulus)
corresponds to the integer c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.
For k == 1 this is the usual int-mod-p representation.

A FieldContext is immutable and shareable; for fields with at most
2^16 elements multiplication runs through exp/log tables.

Univariate polynomials over a context are coefficient lists
(little-endian, no trailing zeros); the u_* helpers operate on them.
Factorization is Cantor-Zassenhaus with a deterministic seeded RNG.
"""

from __future__ import annotations

import random
from functools import lru_cache

SIZE_LIMIT = 1 << 20
_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


class SizeLimitError(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldContext:
    """The finite field F_{p^k} with a fixed monic irreducible modulus."""

    __slots__ = ("p", "k", "q", "modulus", "_exp", "_log", "generator")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self._exp = None
        self._log = None
        self.generator = None
        if k > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- encoding -----------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for c in reversed(ds):
            a = a * self.p + (c % self.p)
        return a

    def element(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_{p^k}."""
        return n % self.p

    def in_prime_subfield(self, a: int) -> bool:
        return a < self.p

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._polymul(a, b)

    def _polymul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    if cb:
                        prod[i + j] = (prod[i + j] + ca * cb) % p
        # reduce modulo the monic modulus
        m = self.modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * m[j]) % p
        return self.from_digits(prod[:k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]] if self._log[a] else 1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._polymul(out, base)
            base = self._polymul(base, base)
            e >>= 1
        return out

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def sqrt2(self, a: int) -> int:
        """Square root in characteristic 2 (unique; Frobenius is bijective)."""
        if self.p != 2:
            raise FieldError("sqrt2 is a characteristic-2 operation")
        return self.pow(a, self.q // 2) if self.k > 1 else a

    def elements(self):
        return range(self.q)

    def _build_tables(self):
        g = self._find_generator()
        self.generator = g
        exp = [1] * (2 * self.q)
        log = [0] * self.q
        cur = 1
        for i in range(self.q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._polymul(cur, g)
        for i in range(self.q - 1, 2 * (self.q - 1)):
            exp[i] = exp[i - (self.q - 1)]
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        order = self.q - 1
        facs = prime_factors(order)
        for cand in range(2, self.q):
            if all(self._pow_naive(cand, order // f) != 1 for f in facs):
                return cand
        raise FieldError("no multiplicative generator found")

    def _pow_naive(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._polymul(out, base)
            base = self._polymul(base, base)
            e >>= 1
        return out

    def __repr__(self):
        return f"F_{self.p}^{self.k}" if self.k > 1 else f"F_{self.p}"

    def __eq__(self, other):
        return (isinstance(other, FieldContext)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


# -- univariate polynomials over a FieldContext ----------------------------
# representation: list[int] of elements, little-endian, no trailing zeros


def u_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def u_deg(f) -> int:
    return len(f) - 1


def u_add(ctx, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(ctx.add(a, b))
    return u_trim(out)


def u_sub(ctx, f, g):
    return u_add(ctx, f, [ctx.neg(c) for c in g])


def u_scale(ctx, f, c):
    if c == 0:
        return []
    return [ctx.mul(a, c) for a in f]


def u_mul(ctx, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return u_trim(out)


def u_divmod(ctx, f, g):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    f = list(f)
    dg = u_deg(g)
    lg_inv = ctx.inv(g[-1])
    quo = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = ctx.mul(f[-1], lg_inv)
        d = len(f) - 1 - dg
        quo[d] = c
        for i in range(len(g)):
            f[d + i] = ctx.sub(f[d + i], ctx.mul(c, g[i]))
        u_trim(f)
    return u_trim(quo), f


def u_mod(ctx, f, g):
    return u_divmod(ctx, f, g)[1]


def u_monic(ctx, f):
    if not f:
        return f
    return u_scale(ctx, f, ctx.inv(f[-1]))


def u_gcd(ctx, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, u_mod(ctx, f, g)
    return u_monic(ctx, f)


def u_pow_mod(ctx, f, e, m):
    out = [1]
    base = u_mod(ctx, f, m)
    while e:
        if e & 1:
            out = u_mod(ctx, u_mul(ctx, out, base), m)
        base = u_mod(ctx, u_mul(ctx, base, base), m)
        e >>= 1
    return out


def u_eval(ctx, f, x):
    out = 0
    for c in reversed(f):
        out = ctx.add(ctx.mul(out, x), c)
    return out


def u_deriv(ctx, f):
    out = []
    for i in range(1, len(f)):
        out.append(ctx.mul(f[i], ctx.element(i)))
    return u_trim(out)


def u_from_roots(ctx, roots):
    f = [1]
    for r in roots:
        f = u_mul(ctx, f, [ctx.neg(r), 1])
    return f


def _is_irreducible(ctx, m) -> bool:
    # Rabin: x^{q^d} == x mod m, and gcd(x^{q^{d/l}} - x, m) = 1 for prime l | d
    d = u_deg(m)
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    h = u_pow_mod(ctx, x, ctx.q ** d, m)
    if u_trim(u_sub(ctx, h, x)):
        return False
    for ell in prime_factors(d):
        h = u_pow_mod(ctx, x, ctx.q ** (d // ell), m)
        if u_deg(u_gcd(ctx, u_sub(ctx, h, x), m)) > 0:
            return False
    return True


@lru_cache(maxsize=None)
def make_field(p: int, k: int, seed: int = 0) -> FieldContext:
    """Build F_{p^k} with the lexicographically first irreducible modulus.

    Deterministic for fixed (p, k); the seed is accepted for interface
    stability but the default search is already canonical.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p ** k > SIZE_LIMIT:
        raise SizeLimitError(f"field size {p}^{k} exceeds limit {SIZE_LIMIT}")
    if k == 1:
        return FieldContext(p, 1, (0, 1))
    prime = FieldContext(p, 1, (0, 1))
    # lexicographically first monic irreducible: iterate constant terms fastest
    for idx in range(p ** k):
        coeffs = []
        n = idx
        for _ in range(k):
            n, r = divmod(n, p)
            coeffs.append(r)
        m = coeffs + [1]
        if _is_irreducible(prime, m):
            return FieldContext(p, k, tuple(m))
    raise FieldError("no irreducible modulus found")  # unreachable


# -- factorization ----------------------------------------------------------


def _squarefree_parts(ctx, f):
    """Yield (squarefree factor, multiplicity) pairs of a monic f."""
    out = []

    def rec(g, mult):
        if u_deg(g) < 1:
            return
        gp = u_deriv(ctx, g)
        if not gp:
            # g = h(x^p): take p-th roots of coefficients
            root = []
            for i in range(0, len(g), ctx.p):
                c = g[i]
                # inverse Frobenius: c^(p^(k-1)) iterated over the subfield
                root.append(ctx.pow(c, ctx.q // ctx.p) if ctx.k > 1 else c)
            rec(u_trim(root), mult * ctx.p)
            return
        c = u_gcd(ctx, g, gp)
        w = u_divmod(ctx, g, c)[0]
        i = 1
        while u_deg(w) >= 1:
            y = u_gcd(ctx, w, c)
            z = u_divmod(ctx, w, y)[0]
            if u_deg(z) >= 1:
                out.append((z, mult * i))
            c = u_divmod(ctx, c, y)[0]
            w = y
            i += 1
        if u_deg(c) >= 1:
            rec(c, mult)

    rec(u_monic(ctx, f), 1)
    return out


def _distinct_degree(ctx, f):
    """Split squarefree monic f into products of same-degree irreducibles."""
    out = []
    x = [0, 1]
    h = x
    rem = f
    d = 0
    while u_deg(rem) > 0:
        d += 1
        if 2 * d > u_deg(rem):
            out.append((rem, u_deg(rem)))
            break
        h = u_pow_mod(ctx, h, ctx.q, rem)
        g = u_gcd(ctx, u_sub(ctx, h, x), rem)
        if u_deg(g) > 0:
            out.append((g, d))
            rem = u_divmod(ctx, rem, g)[0]
            h = u_mod(ctx, h, rem)
    return out


def _equal_degree(ctx, f, d, rng):
    """Cantor-Zassenhaus split of squarefree f with all factors of degree d."""
    n = u_deg(f)
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(ctx.q) for _ in range(n)]
        r = u_trim(r)
        if u_deg(r) < 1:
            continue
        g = u_gcd(ctx, r, f)
        if 0 < u_deg(g) < n:
            pass
        elif ctx.p == 2:
            # trace map over F_{2^(k*d)}
            t = [0]
            cur = u_mod(ctx, r, f)
            for _ in range(ctx.k * d):
                t = u_add(ctx, t, cur)
                cur = u_mod(ctx, u_mul(ctx, cur, cur), f)
            g = u_gcd(ctx, t, f)
        else:
            e = (ctx.q ** d - 1) // 2
            h = u_pow_mod(ctx, r, e, f)
            g = u_gcd(ctx, u_sub(ctx, h, [1]), f)
        if 0 < u_deg(g) < n:
            rest = u_divmod(ctx, f, g)[0]
            return _equal_degree(ctx, g, d, rng) + _equal_degree(ctx, rest, d, rng)


def u_factor(ctx, f, seed: int = 0):
    """Factor f into monic irreducibles: returns (lead, [(factor, mult)]).

    Deterministic for a fixed seed; factors sorted by (degree, coeffs).
    """
    if not f:
        raise FieldError("cannot factor the zero polynomial")
    lead = f[-1]
    f = u_monic(ctx, f)
    rng = random.Random((seed, ctx.p, ctx.k, tuple(f)).__hash__())
    found = []
    for sqf, mult in _squarefree_parts(ctx, f):
        for block, d in _distinct_degree(ctx, sqf):
            for irr in _equal_degree(ctx, block, d, rng):
                found.append((tuple(u_monic(ctx, irr)), mult))
    found.sort(key=lambda t: (len(t[0]), t[0]))
    return lead, found


def u_roots(ctx, f, seed: int = 0):
    """Roots of f in the field itself (each once, sorted)."""
    _, facs = u_factor(ctx, f, seed)
    out = [ctx.neg(g[0]) for g, _ in facs if len(g) == 2]
    return sorted(out)


# -- extensions and embeddings ----------------------------------------------

_EMBED_CACHE: dict[tuple, "Embedding"] = {}


class Embedding:
    """Field embedding F_{p^k} -> F_{p^K} determined by a root of the modulus."""

    __slots__ = ("src", "dst", "root", "_powers")

    def __init__(self, src: FieldContext, dst: FieldContext, root: int):
        self.src = src
        self.dst = dst
        self.root = root
        pw = [1]
        for _ in range(src.k - 1):
            pw.append(dst.mul(pw[-1], root))
        self._powers = pw

    def __call__(self, a: int) -> int:
        if self.src.k == 1:
            return a
        out = 0
        for c, rp in zip(self.src.digits(a), self._powers):
            if c:
                out = self.dst.add(out, self.dst.mul(self.dst.element(c), rp))
        return out


def embed_field(src: FieldContext, dst: FieldContext) -> Embedding:
    """Canonical embedding (smallest root of src's modulus in dst)."""
    if src.p != dst.p or dst.k % src.k:
        raise FieldError(f"no embedding {src} -> {dst}")
    key = (src.p, src.k, src.modulus, dst.k, dst.modulus)
    emb = _EMBED_CACHE.get(key)
    if emb is None:
        if src.k == 1:
            emb = Embedding(src, dst, 1)
        else:
            m = [dst.element(c) for c in src.modulus]
            roots = u_roots(dst, m)
            if not roots:
                raise FieldError("modulus does not split in the target field")
            emb = Embedding(src, dst, roots[0])
        _EMBED_CACHE[key] = emb
    return emb


def extend_field(ctx: FieldContext, d: int, max_degree: int = 12):
    """F_{p^k} -> F_{p^(k*d)} plus the embedding; degree budget enforced."""
    if ctx.k * d > max_degree:
        raise SizeLimitError(
            f"extension degree {ctx.k * d} exceeds budget {max_degree}")
    big = make_field(ctx.p, ctx.k * d)
    return big, embed_field(ctx, big)

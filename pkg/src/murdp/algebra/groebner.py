"""Buchberger Groebner bases over finite fields, elimination orders,
and jet-level local quotient dimensions.

Monomial orders are key functions on exponent tuples (bigger key =
bigger monomial).  The default is graded reverse lexicographic; block
orders put an elimination block first (grevlex within blocks), so the
basis intersected with the tail block generates the elimination ideal.

quotient_dimension computes dim_k k[[x]]/(I) by degree-by-degree
Gaussian elimination on truncations, with an explicit stabilization
certificate: once every monomial of some degree d lies in the span of
the truncated ideal, m^d is contained in I and the dimension is exact.
"""

from __future__ import annotations

import numpy as np

from .poly import Poly


class GroebnerError(RuntimeError):
    pass


class BudgetError(GroebnerError):
    pass


class Inconclusive(RuntimeError):
    pass


INFINITE = "infinite"


def grevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


class MonomialOrder:
    """grevlex, optionally with a leading elimination block."""

    def __init__(self, nvars: int, elim: int = 0):
        self.nvars = nvars
        self.elim = elim

    def key(self, e):
        if not self.elim:
            return grevlex_key(e)
        return grevlex_key(e[:self.elim]) + grevlex_key(e[self.elim:])


def leading_term(f: Poly, order: MonomialOrder):
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def _divides(e1, e2) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def _quot(e2, e1):
    return tuple(b - a for a, b in zip(e1, e2))


def _mul_monom(f: Poly, e, c) -> Poly:
    fld = f.field
    return Poly(fld, f.vars,
                {tuple(a + b for a, b in zip(e, e2)): fld.mul(c, c2)
                 for e2, c2 in f.terms.items()})


def normal_form(f: Poly, basis, order: MonomialOrder, lts=None) -> Poly:
    """Full remainder of f modulo basis (every term reduced)."""
    if lts is None:
        lts = [leading_term(g, order) for g in basis]
    fld = f.field
    rem: dict = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        hit = None
        for g, (lte, ltc) in zip(basis, lts):
            if _divides(lte, e):
                hit = (g, lte, ltc)
                break
        if hit is None:
            rem[e] = c
            continue
        g, lte, ltc = hit
        factor = fld.neg(fld.div(c, ltc))
        q = _quot(e, lte)
        for e2, c2 in g.terms.items():
            e3 = tuple(a + b for a, b in zip(q, e2))
            if e3 in rem:
                s = fld.add(rem[e3], fld.mul(factor, c2))
                if s:
                    rem[e3] = s
                else:
                    del rem[e3]
            else:
                s = fld.add(work.get(e3, 0), fld.mul(factor, c2))
                if s:
                    work[e3] = s
                else:
                    work.pop(e3, None)
    return Poly(fld, f.vars, rem)


def s_poly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    fld = f.field
    ef, cf = leading_term(f, order)
    eg, cg = leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = _mul_monom(f, _quot(lcm, ef), fld.inv(cf))
    mg = _mul_monom(g, _quot(lcm, eg), fld.inv(cg))
    return mf - mg


def groebner(generators, order: MonomialOrder | None = None,
             max_basis: int = 260, max_steps: int = 40000):
    """Reduced Groebner basis (monic, autoreduced, deterministic order)."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise GroebnerError("empty generator list")
    fld = gens[0].field
    for g in gens:
        if g.field != fld:
            raise GroebnerError("mixed fields in generator list")
    if order is None:
        order = MonomialOrder(len(gens[0].vars))

    basis: list[Poly] = []
    for g in sorted(gens, key=lambda h: order.key(leading_term(h, order)[0])):
        h = normal_form(g, basis, order)
        if not h.is_zero():
            basis.append(h)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    steps = 0
    while pairs:
        steps += 1
        if steps > max_steps or len(basis) > max_basis:
            raise BudgetError("groebner budget exceeded "
                              f"(basis={len(basis)}, steps={steps})")
        i, j = min(pairs, key=lambda ij: (
            order.key(tuple(max(a, b) for a, b in zip(
                leading_term(basis[ij[0]], order)[0],
                leading_term(basis[ij[1]], order)[0]))), ij))
        pairs.discard((i, j))
        ei = leading_term(basis[i], order)[0]
        ej = leading_term(basis[j], order)[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms
        h = normal_form(s_poly(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        basis.append(h)
        n = len(basis) - 1
        pairs.update((n, t) for t in range(n))

    # interreduce to the unique reduced basis
    lts = [leading_term(g, order)[0] for g in basis]
    keep = []
    for i in range(len(basis)):
        dominated = False
        for j in range(len(basis)):
            if j == i or not _divides(lts[j], lts[i]):
                continue
            if lts[j] != lts[i] or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(basis[i])
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        h = normal_form(g, others, order) if others else g
        if not h.is_zero():
            _, c = leading_term(h, order)
            out.append(h.scale(fld.inv(c)))
    out.sort(key=lambda h: order.key(leading_term(h, order)[0]))
    return out


def eliminate(generators, elim_vars, **kw):
    """Generators of the elimination ideal, with elim_vars removed.

    The variables to eliminate must form a prefix-movable subset; the
    polynomials are reordered so the eliminated block comes first.
    """
    gens = list(generators)
    if not gens:
        raise GroebnerError("empty generator list")
    vs = gens[0].vars
    elim = [v for v in vs if v in set(elim_vars)]
    rest = [v for v in vs if v not in set(elim_vars)]
    newvars = tuple(elim + rest)
    gens = [g.with_vars(newvars) for g in gens]
    order = MonomialOrder(len(newvars), elim=len(elim))
    basis = groebner(gens, order, **kw)
    out = []
    for g in basis:
        if all(all(e[i] == 0 for i in range(len(elim))) for e in g.terms):
            out.append(g.drop_vars(elim))
    return out


# -- prime-field linear algebra (numpy) -------------------------------------


def rref_mod_p(rows: np.ndarray, p: int):
    """Row-reduce an int64 matrix mod p; returns (rref, pivot columns)."""
    a = rows % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _in_rowspace(v: np.ndarray, rref: np.ndarray, pivots, p: int) -> bool:
    w = v % p
    for i, c in enumerate(pivots):
        if w[c]:
            w = (w - w[c] * rref[i]) % p
    return not w.any()


def _monomials_upto(nvars: int, d: int):
    """All exponent tuples of total degree < d, sorted by (degree, exps)."""
    out = []

    def rec(prefix, left, remaining):
        if remaining == 1:
            out.append(tuple(prefix + [left]))
            return
        for i in range(left + 1):
            rec(prefix + [i], left - i, remaining - 1)

    for deg in range(d):
        rec([], deg, nvars)
    return out


def quotient_dimension(generators, degree_bound: int):
    """Local vector-space dimension of k[[x..]]/(generators) at the origin.

    Returns an int when the dimension stabilizes below degree_bound,
    the string INFINITE when a standard monomial survives at every
    degree up to the bound, and raises Inconclusive otherwise.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return INFINITE
    fld = gens[0].field
    if any(g.constant_term() != 0 for g in gens):
        return 0
    nvars = len(gens[0].vars)
    p, k = fld.p, fld.k

    def expand_row(vec_elems):
        # one F_q row -> k rows over F_p (multiples by powers of the generator)
        out = []
        for j in range(k):
            scaled = [fld.mul(c, fld.pow(fld.p, j) if k > 1 else 1)
                      for c in vec_elems] if j else list(vec_elems)
            row = []
            for c in scaled:
                row.extend(fld.digits(c) if k > 1 else [c])
            out.append(row)
        return out

    for d in range(2, degree_bound + 1):
        monoms = _monomials_upto(nvars, d + 1)
        index = {m: i for i, m in enumerate(monoms)}
        ncols = len(monoms)
        rows = []
        for g in gens:
            og = g.order()
            for m in _monomials_upto(nvars, d + 1 - og):
                vec = [0] * ncols
                hit = False
                for e, c in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(m, e))
                    i = index.get(e2)
                    if i is not None:
                        vec[i] = c
                        hit = True
                if hit:
                    rows.extend(expand_row(vec))
        if not rows:
            continue
        mat = np.array(rows, dtype=np.int64)
        rref, pivots = rref_mod_p(mat, p)
        rank = len(pivots)
        qdim = ncols - rank // k if k > 1 else ncols - rank
        # certificate: every monomial of degree exactly d lies in the span
        certified = True
        for m in monoms:
            if sum(m) != d:
                continue
            vec = [0] * ncols
            vec[index[m]] = 1
            ok = all(_in_rowspace(np.array(r, dtype=np.int64), rref, pivots, p)
                     for r in expand_row(vec))
            if not ok:
                certified = False
                break
        if certified:
            # m^d lies in the ideal plus m^(d+1), hence in the ideal itself
            # (complete local ring); the truncated dimension is exact
            return qdim
    return INFINITE

"""Independent ground-truth polynomials: Macdonald, Hall-Littlewood, Jack and
Schur P/Q functions by Gram-Schmidt orthogonalization of the monomial basis,
plus the closed-form norm b_lambda, the raising-operator Hall-Littlewood
construction, and the difference-operator eigencheck.

Everything here is deliberately independent of the Pieri/inverse-Pieri
formula layer: orthogonalization only uses the scalar product's p-basis
diagonal, so expansions proved elsewhere can be verified against it.
"""

from __future__ import annotations

from fractions import Fraction

from ._gsfrac import FField
from .partitions import (dominates, enumerate_partitions, normalize, pad,
                         weight)
from .ratfunc import QT, MonomialArg, RatFunc, qpoch
from .symfunc import (FAMILIES, HALL_LITTLEWOOD, JACK, MACDONALD, SCHUR,
                      SymFunc, expand_in_variables, m_to_p_matrix, p_norm,
                      scalar_product)

OracleFamily = type(MACDONALD)

_gs_cache = {}


def _gram_schmidt_block(family, w):
    """Orthogonalize all m_lambda of weight w against the family's scalar
    product, in the reverse-lexicographic extension of dominance.

    Returns {lam: (p_coords, m_coords, norm)} with p/m coordinate dicts over
    partitions of w.  P_lambda is monic in m_lambda and orthogonal to every
    P_mu strictly below it.  The inner loop runs on factored-denominator
    entries (see _gsfrac) and converts to canonical RatFuncs at the end.
    """
    key = (family.tag, w)
    got = _gs_cache.get(key)
    if got is not None:
        return got
    parts = enumerate_partitions(w)
    ascending = list(reversed(parts))
    m2p = m_to_p_matrix(w, max(w, 1))
    ff = FField(family.vars)
    wents = {nu: ff.from_ratfunc(p_norm(nu, family)) for nu in parts}
    one = ff.from_fraction(1)
    block = {}
    dual = {}   # mu -> {nu: P_p[mu][nu] * w_nu / norm_mu}, reused by later lam
    for lam in ascending:
        a_lam = m2p[lam]
        vec_p = {nu: ff.from_fraction(c) for nu, c in a_lam.items()}
        vec_m = {lam: one}
        for mu in block:
            if mu == lam or not dominates(lam, mu):
                continue
            c = None
            for nu, qw in dual[mu].items():
                frac = a_lam.get(nu)
                if frac is None:
                    continue
                term = ff.scale_fraction(qw, frac)
                c = term if c is None else ff.add(c, term)
            if c is None or c.is_zero():
                continue
            p_mu, m_mu, _ = block[mu]
            for nu, v in p_mu.items():
                s = vec_p.get(nu)
                s = ff.sub_mul(s, c, v) if s is not None else \
                    ff.scale_fraction(ff.mul(c, v), -1)
                if s.is_zero():
                    vec_p.pop(nu, None)
                else:
                    vec_p[nu] = s
            for mu2, v in m_mu.items():
                s = vec_m.get(mu2)
                s = ff.sub_mul(s, c, v) if s is not None else \
                    ff.scale_fraction(ff.mul(c, v), -1)
                if s.is_zero():
                    vec_m.pop(mu2, None)
                else:
                    vec_m[mu2] = s
        # <P,P> = <P, m_lam> by orthogonality, and m_lam has rational p-coords
        norm = None
        for nu, v in vec_p.items():
            frac = a_lam.get(nu)
            if frac is None:
                continue
            term = ff.scale_fraction(ff.mul(v, wents[nu]), frac)
            norm = term if norm is None else ff.add(norm, term)
        block[lam] = (vec_p, vec_m, norm)
        dual[lam] = {nu: ff.div_entry(ff.mul(v, wents[nu]), norm)
                     for nu, v in vec_p.items()}
    got = {}
    for lam, (vec_p, vec_m, norm) in block.items():
        got[lam] = ({nu: ff.to_ratfunc(v) for nu, v in vec_p.items()},
                    {mu: ff.to_ratfunc(v) for mu, v in vec_m.items()},
                    ff.to_ratfunc(norm))
    _gs_cache[key] = got
    return got


def oracle_P(lam, family=MACDONALD, degree=None):
    """P_lambda in the monomial basis, from Gram-Schmidt."""
    lam = normalize(lam)
    block = _gram_schmidt_block(family, weight(lam))
    _, m_coords, _ = block[lam]
    deg = weight(lam) if degree is None else degree
    return SymFunc("m", deg, family, dict(m_coords), _clean=True)


def oracle_norm(lam, family=MACDONALD):
    """<P_lambda, P_lambda> for the family."""
    lam = normalize(lam)
    block = _gram_schmidt_block(family, weight(lam))
    return block[lam][2]


def oracle_Q(lam, family=MACDONALD, degree=None):
    """Q_lambda = P_lambda / <P_lambda, P_lambda>."""
    P = oracle_P(lam, family, degree)
    return P.scale(1 / oracle_norm(lam, family))


def b_lambda(lam):
    """Closed-form normalization b_lambda(q,t) with Q_lambda = b_lambda P_lambda:
    the double product over 1 <= i <= j <= l(lambda) of q-Pochhammer ratios."""
    lam = normalize(lam)
    ell = len(lam)
    out = RatFunc.one(QT)
    for i in range(1, ell + 1):
        for j in range(i, ell + 1):
            k = lam[j - 1] - (lam[j] if j < ell else 0)
            if k == 0:
                continue
            num = qpoch(MonomialArg(lam[i - 1] - lam[j - 1], j - i + 1), k)
            den = qpoch(MonomialArg(lam[i - 1] - lam[j - 1] + 1, j - i), k)
            out = out * (num / den)
    return out


# ---------------------------------------------------------------------------
# Hall-Littlewood functions of arbitrary integer sequences (raising operators)
# ---------------------------------------------------------------------------

def hl_raising_Q(seq):
    """Q of an arbitrary integer sequence via the raising-operator product
    prod_{i<j} (1 - R_ij)/(1 - t R_ij) applied to q_seq.

    The geometric series terminate because a one-row q_k vanishes for k < 0:
    columns are peeled right to left, bounding each column sum by the current
    entry.  Returns a g-basis SymFunc over Q(t)."""
    seq = tuple(int(x) for x in seq)
    n = len(seq)
    fam = HALL_LITTLEWOOD
    t = fam.gen("t")
    tpow = [t ** k for k in range(2 * (sum(abs(x) for x in seq) + 1) + 2)]

    def factor(theta):
        # weight of R_ij^theta in the expansion of (1-R)/(1-tR)
        if theta == 0:
            return fam.one()
        return (t - 1) * tpow[theta - 1]

    results = {}

    def peel(col, current, coeff):
        if col <= 1:
            if all(x >= 0 for x in current):
                key = normalize(tuple(sorted((x for x in current if x),
                                             reverse=True)))
                s = results.get(key)
                s = coeff if s is None else s + coeff
                if s.is_zero():
                    results.pop(key, None)
                else:
                    results[key] = s
            return
        cap = current[col - 1]
        if cap < 0:
            return
        for column in _columns_with_sum(col - 1, cap):
            c2 = coeff
            for v in column:
                if v:
                    c2 = c2 * factor(v)
            nxt = list(current)
            nxt[col - 1] -= sum(column)
            for i, v in enumerate(column):
                nxt[i] += v
            peel(col - 1, nxt, c2)

    peel(n, list(seq), fam.one())
    return SymFunc("g", max(sum(seq), 0), fam, results, _clean=True)


def _columns_with_sum(rows, cap):
    """All nonnegative integer columns of the given height with sum <= cap."""
    if rows == 0:
        yield ()
        return
    for total in range(cap + 1):
        yield from _fixed_sum(rows, total)


def _fixed_sum(rows, total):
    if rows == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _fixed_sum(rows - 1, total - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Macdonald operator eigencheck
# ---------------------------------------------------------------------------

def _xpoly_mul(a, b, n):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e)
            s = ca * cb if s is None else s + ca * cb
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _xpoly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


def eigencheck(lam, n, family=MACDONALD):
    """True iff the q-difference operator E = sum_i A_i(X;t) T_{q,x_i} maps the
    restriction of P_lambda to n variables to (sum_i q^{lambda_i} t^{n-i}) times
    itself; checked as a polynomial identity after clearing the Vandermonde."""
    lam = normalize(lam)
    if len(lam) > n:
        raise ValueError("need at least l(lambda) variables")
    fam = family
    q = fam.gen("q")
    t = fam.gen("t")
    P = oracle_P(lam, fam)
    f = expand_in_variables(P, n)
    eig = fam.zero()
    lamp = pad(lam, n)
    for i in range(n):
        eig = eig + q ** lamp[i] * t ** (n - 1 - i)

    def xvar(i):
        e = [0] * n
        e[i] = 1
        return {tuple(e): fam.one()}

    def xdiff(i, j, scale_i):
        # scale_i * x_i - x_j
        e_i = [0] * n
        e_i[i] = 1
        e_j = [0] * n
        e_j[j] = 1
        return {tuple(e_i): scale_i, tuple(e_j): -fam.one()}

    lhs = {}
    for i in range(n):
        ti_f = {e: c * q ** e[i] for e, c in f.items()}
        term = ti_f
        for j in range(n):
            if j != i:
                term = _xpoly_mul(term, xdiff(i, j, t), n)
        # Vandermonde of the remaining variables, with the sign of deleting
        # row/column i from the full Vandermonde product
        for a in range(n):
            for b in range(a + 1, n):
                if a == i or b == i:
                    continue
                term = _xpoly_mul(term, xdiff(a, b, fam.one()), n)
        if i % 2 == 1:
            term = {e: -c for e, c in term.items()}
        lhs = _xpoly_add(lhs, term)
    rhs = {e: c * eig for e, c in f.items()}
    for a in range(n):
        for b in range(a + 1, n):
            rhs = _xpoly_mul(rhs, xdiff(a, b, fam.one()), n)
    return lhs == rhs

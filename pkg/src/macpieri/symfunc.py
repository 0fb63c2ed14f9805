"""Symmetric functions with exact rational-function coefficients.

A SymFunc stores coefficients of a graded symmetric function relative to one
of four bases: monomial ("m"), power sum ("p"), products of one-row
functions ("g"), or products of elementary functions ("e").  The meaning of
the one-row family g_k, and the scalar product weights, are fixed by a
Family:

  macdonald  --  g_k(q,t), generating series prod (t u x_i; q)_inf/(u x_i; q)_inf
  hl         --  q_k(t) = g_k(0,t)
  jack       --  one-row Jack functions, series prod (1 - u x_i)^(-1/a)
  schur      --  h_k (so that the g-basis at q = t is the complete basis)

Basis changes run through the power sums; the p <-> m transition matrices
are produced by brute-force expansion in exactly N auxiliary variables, with
monomials canonicalized to their sorted exponent orbit, so the m-coefficient
of mu is read off directly at the sorted exponent vector mu.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .partitions import (enumerate_partitions, normalize, weight, z_factor)
from .ratfunc import (ALPHA, QT, RATIONAL, TONLY, MultiPoly, RatFunc)


class DegreeError(ValueError):
    """A computation would exceed the configured degree budget."""


class Family:
    """Coefficient field plus the one-row series and scalar-product weights."""

    def __init__(self, tag, variables, log_coeff, weight_factor):
        self.tag = tag
        self.vars = tuple(variables)
        self._log_coeff = log_coeff
        self._weight_factor = weight_factor

    def one(self):
        return RatFunc.one(self.vars)

    def zero(self):
        return RatFunc.zero(self.vars)

    def const(self, c):
        return RatFunc.const(self.vars, c)

    def gen(self, name):
        return RatFunc.gen(self.vars, name)

    def log_coeff(self, m):
        """Coefficient of p_m u^m in log of the one-row generating series."""
        return self._log_coeff(self, m)

    def weight_factor(self, k):
        """Per-part factor of <p_lambda, p_lambda> beyond z_lambda."""
        return self._weight_factor(self, k)

    def __repr__(self):
        return "Family(%r)" % self.tag


def _macdonald_log(fam, m):
    q = fam.gen("q")
    t = fam.gen("t")
    return (1 - t ** m) / ((1 - q ** m) * m)


def _macdonald_weight(fam, k):
    q = fam.gen("q")
    t = fam.gen("t")
    return (1 - q ** k) / (1 - t ** k)


def _hl_log(fam, m):
    t = fam.gen("t")
    return (1 - t ** m).scale_fraction(Fraction(1, m))


def _hl_weight(fam, k):
    t = fam.gen("t")
    return 1 / (1 - t ** k)


def _jack_log(fam, m):
    a = fam.gen("a")
    return 1 / (a * m)


def _jack_weight(fam, k):
    return fam.gen("a")


def _schur_log(fam, m):
    return fam.const(Fraction(1, m))


def _schur_weight(fam, k):
    return fam.one()


MACDONALD = Family("macdonald", QT, _macdonald_log, _macdonald_weight)
HALL_LITTLEWOOD = Family("hl", TONLY, _hl_log, _hl_weight)
JACK = Family("jack", ALPHA, _jack_log, _jack_weight)
SCHUR = Family("schur", RATIONAL, _schur_log, _schur_weight)

FAMILIES = {f.tag: f for f in (MACDONALD, HALL_LITTLEWOOD, JACK, SCHUR)}

BASES = ("m", "p", "g", "e")


class SymFunc:
    """Graded symmetric function: basis tag, degree bound, and a map from
    partitions to nonzero RatFunc coefficients."""

    __slots__ = ("basis", "degree", "family", "coeffs")

    def __init__(self, basis, degree, family, coeffs=None, _clean=False):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        self.degree = degree
        self.family = family
        if coeffs is None:
            self.coeffs = {}
        elif _clean:
            self.coeffs = coeffs
        else:
            self.coeffs = {}
            for lam, c in coeffs.items():
                lam = normalize(lam)
                if weight(lam) > degree:
                    raise DegreeError("key %r exceeds degree bound %d"
                                      % (lam, degree))
                if isinstance(c, (int, Fraction)):
                    c = family.const(c)
                if not c.is_zero():
                    self.coeffs[lam] = c

    # -- structure -----------------------------------------------------------

    @classmethod
    def basis_element(cls, basis, lam, family, degree=None):
        lam = normalize(lam)
        deg = weight(lam) if degree is None else degree
        return cls(basis, deg, family, {lam: family.one()})

    @classmethod
    def constant(cls, value, family, basis="m", degree=0):
        return cls(basis, degree, family, {(): family.const(value)})

    def is_zero(self):
        return not self.coeffs

    def actual_degree(self):
        return max((weight(k) for k in self.coeffs), default=0)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (self.basis == other.basis
                and self.family.tag == other.family.tag
                and self.coeffs == other.coeffs)

    def __repr__(self):
        items = ", ".join("%r: %s" % (k, v) for k, v in self.sorted_items())
        return "SymFunc(%s/%s, {%s})" % (self.basis, self.family.tag, items)

    def sorted_items(self):
        """Items in descending (weight, reverse-lex) order."""
        return sorted(self.coeffs.items(),
                      key=lambda kv: (weight(kv[0]), kv[0]), reverse=True)

    # -- linear operations -----------------------------------------------------

    def add(self, other):
        if other.basis != self.basis or other.family.tag != self.family.tag:
            raise ValueError("basis/family mismatch in add")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SymFunc(self.basis, max(self.degree, other.degree),
                       self.family, out, _clean=True)

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            if c == 0:
                return SymFunc(self.basis, self.degree, self.family)
            frac = Fraction(c)
            out = {k: v.scale_fraction(frac) for k, v in self.coeffs.items()}
            return SymFunc(self.basis, self.degree, self.family, out, _clean=True)
        out = {}
        for k, v in self.coeffs.items():
            s = v * c
            if not s.is_zero():
                out[k] = s
        return SymFunc(self.basis, self.degree, self.family, out, _clean=True)

    # -- conversions -----------------------------------------------------------

    def to_p(self):
        if self.basis == "p":
            return self
        fam = self.family
        out = {}
        if self.basis == "m":
            for w in sorted({weight(k) for k in self.coeffs}):
                block = {k: v for k, v in self.coeffs.items() if weight(k) == w}
                inv = m_to_p_matrix(w, max(w, self.degree))
                for mu, c in block.items():
                    for lam, frac in inv[mu].items():
                        s = out.get(lam)
                        add = c.scale_fraction(frac)
                        s = add if s is None else s + add
                        if s.is_zero():
                            out.pop(lam, None)
                        else:
                            out[lam] = s
        else:
            for key, c in self.coeffs.items():
                prod = _one_row_product_p(self.basis, key, fam)
                for lam, v in prod.items():
                    s = out.get(lam)
                    add = c * v
                    s = add if s is None else s + add
                    if s.is_zero():
                        out.pop(lam, None)
                    else:
                        out[lam] = s
        return SymFunc("p", self.degree, fam, out, _clean=True)

    def to_m(self, n_vars=None):
        """Monomial-basis form via brute expansion in n_vars auxiliary
        variables (default: the degree bound)."""
        if self.basis == "m":
            return self
        fp = self.to_p()
        N = n_vars if n_vars is not None else max(self.degree, 1)
        if fp.actual_degree() > N:
            raise DegreeError("need at least %d auxiliary variables"
                              % fp.actual_degree())
        out = {}
        for lam, c in fp.coeffs.items():
            row = p_to_m_matrix(weight(lam), N)[lam]
            for mu, n in row.items():
                s = out.get(mu)
                add = c.scale_fraction(n) if n != 1 else c
                s = add if s is None else s + add
                if s.is_zero():
                    out.pop(mu, None)
                else:
                    out[mu] = s
        return SymFunc("m", self.degree, self.family, out, _clean=True)


# ---------------------------------------------------------------------------
# one-row functions: g_k / e_k / h_k / p_k in the power-sum basis
# ---------------------------------------------------------------------------

_one_row_cache = {}


def one_row_p(k, family):
    """The degree-k one-row function of the family (g_k and relatives),
    expanded in the p basis: truncation of exp(sum_m c_m p_m u^m) at u^k."""
    if k < 0:
        raise ValueError("one_row_p needs k >= 0")
    key = (family.tag, "g", k)
    if key not in _one_row_cache:
        _exp_series(family, k, "g",
                    lambda m: family.log_coeff(m))
    return _one_row_cache[key]


def elementary_p(k, family):
    """e_k in the p basis: exp(sum (-1)^(m-1) p_m u^m / m) at u^k."""
    if k < 0:
        raise ValueError("elementary_p needs k >= 0")
    key = (family.tag, "e", k)
    if key not in _one_row_cache:
        _exp_series(family, k, "e",
                    lambda m: family.const(Fraction((-1) ** (m - 1), m)))
    return _one_row_cache[key]


def _exp_series(family, k, tag, coeff_fn):
    """Fill the one-row cache for degrees 0..k of exp(sum coeff_fn(m) p_m u^m)."""
    done = -1
    while (family.tag, tag, done + 1) in _one_row_cache:
        done += 1
    if done >= k:
        return
    # exp(L) with L = sum_m c_m p_(m) u^m, collected by u-degree.
    log_terms = {m: coeff_fn(m) for m in range(1, k + 1)}
    by_degree = [dict() for _ in range(k + 1)]
    by_degree[0][()] = family.one()
    term = {(): family.one()}   # current L^j / j!, split by degree below
    term_by_deg = [dict() for _ in range(k + 1)]
    term_by_deg[0][()] = family.one()
    for j in range(1, k + 1):
        new = [dict() for _ in range(k + 1)]
        for d in range(k + 1):
            for lam, c in term_by_deg[d].items():
                for m, lc in log_terms.items():
                    nd = d + m
                    if nd > k:
                        continue
                    mu = tuple(sorted(lam + (m,), reverse=True))
                    v = c * lc
                    tgt = new[nd]
                    s = tgt.get(mu)
                    s = v if s is None else s + v
                    if s.is_zero():
                        tgt.pop(mu, None)
                    else:
                        tgt[mu] = s
        inv_j = Fraction(1, j)
        for d in range(k + 1):
            term_by_deg[d] = {lam: c.scale_fraction(inv_j)
                              for lam, c in new[d].items()}
            for lam, c in term_by_deg[d].items():
                tgt = by_degree[d]
                s = tgt.get(lam)
                s = c if s is None else s + c
                if s.is_zero():
                    tgt.pop(lam, None)
                else:
                    tgt[lam] = s
    for d in range(k + 1):
        _one_row_cache[(family.tag, tag, d)] = dict(by_degree[d])


_one_row_product_cache = {}


def _one_row_product_p(basis, key, family):
    """p-expansion of a product of one-row functions: g_lambda or e_lambda."""
    key = tuple(key)
    cache_key = (family.tag, basis, key)
    got = _one_row_product_cache.get(cache_key)
    if got is not None:
        return got
    if not key:
        out = {(): family.one()}
    else:
        head = (one_row_p(key[0], family) if basis == "g"
                else elementary_p(key[0], family))
        tail = _one_row_product_p(basis, key[1:], family)
        out = {}
        for lam, a in head.items():
            for mu, b in tail.items():
                nu = tuple(sorted(lam + mu, reverse=True))
                v = a * b
                s = out.get(nu)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(nu, None)
                else:
                    out[nu] = s
    _one_row_product_cache[cache_key] = out
    return out


def gk_in_p_basis(k, family=MACDONALD):
    """The one-row function g_k as a p-basis SymFunc of pure degree k."""
    return SymFunc("p", k, family, dict(one_row_p(k, family)), _clean=True)


# ---------------------------------------------------------------------------
# p <-> m transitions by brute expansion in N variables
# ---------------------------------------------------------------------------

def _sortdesc(t):
    return tuple(sorted(t, reverse=True))


def _multiset_perms(items):
    """Distinct permutations of a tuple (Knuth algorithm L)."""
    seq = sorted(items)
    n = len(seq)
    while True:
        yield tuple(seq)
        k = n - 2
        while k >= 0 and seq[k] >= seq[k + 1]:
            k -= 1
        if k < 0:
            return
        i = n - 1
        while seq[i] <= seq[k]:
            i -= 1
        seq[k], seq[i] = seq[i], seq[k]
        seq[k + 1:] = reversed(seq[k + 1:])


def _orbit_mult_pk(state, k, N):
    """Multiply an orbit-canonicalized symmetric polynomial by p_k."""
    cands = set()
    for gam in state:
        for v in set(gam):
            lst = list(gam)
            lst.remove(v)
            cands.add(_sortdesc(lst + [v + k]))
    out = {}
    for beta in cands:
        tot = 0
        cnt = Counter(beta)
        for v, c_v in cnt.items():
            if v < k:
                continue
            lst = list(beta)
            lst.remove(v)
            gam = _sortdesc(lst + [v - k])
            got = state.get(gam)
            if got is not None:
                tot += c_v * got
        if tot:
            out[beta] = tot
    return out


_p_orbit_cache = {}


def _p_orbit(lam, N):
    """Expansion of p_lambda in N variables, orbit-canonicalized: the value at
    a sorted exponent tuple is the m-coefficient of that partition."""
    lam = tuple(lam)
    key = (lam, N)
    got = _p_orbit_cache.get(key)
    if got is None:
        if not lam:
            got = {(0,) * N: 1}
        else:
            got = _orbit_mult_pk(_p_orbit(lam[1:], N), lam[0], N)
        _p_orbit_cache[key] = got
    return got


_p2m_cache = {}
_m2p_cache = {}


def p_to_m_matrix(w, N):
    """Per-weight transition: row lam gives {mu: integer coeff of m_mu in p_lam}."""
    if N < w:
        raise DegreeError("p_to_m needs N >= weight")
    key = (w, N)
    got = _p2m_cache.get(key)
    if got is None:
        got = {}
        for lam in enumerate_partitions(w):
            orbit = _p_orbit(lam, N)
            row = {}
            for exps, c in orbit.items():
                mu = normalize(tuple(x for x in exps if x))
                row[mu] = c
            got[lam] = row
        _p2m_cache[key] = got
    return got


def m_to_p_matrix(w, N):
    """Per-weight inverse transition: row mu gives {lam: Fraction} with
    m_mu = sum_lam Fraction * p_lam."""
    key = (w, N)
    got = _m2p_cache.get(key)
    if got is None:
        parts = enumerate_partitions(w)
        p2m = p_to_m_matrix(w, N)
        idx = {lam: i for i, lam in enumerate(parts)}
        n = len(parts)
        mat = [[Fraction(p2m[lam].get(mu, 0)) for mu in parts] for lam in parts]
        inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if mat[r][col] != 0)
            mat[col], mat[piv] = mat[piv], mat[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            d = mat[col][col]
            if d != 1:
                mat[col] = [x / d for x in mat[col]]
                inv[col] = [x / d for x in inv[col]]
            for r in range(n):
                if r != col and mat[r][col] != 0:
                    f = mat[r][col]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                    inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
        got = {}
        for j, mu in enumerate(parts):
            # row j of the inverse of (p -> m) gives m_mu in the p basis
            got[mu] = {parts[i]: inv[j][i] for i in range(n) if inv[j][i] != 0}
        _m2p_cache[key] = got
    return got


# ---------------------------------------------------------------------------
# products and the scalar product
# ---------------------------------------------------------------------------

def multiply(f, g, n_vars=None, degree_bound=None):
    """Exact product in the monomial basis, by expansion in n_vars auxiliary
    variables (any n_vars >= total degree gives the same answer)."""
    if f.family.tag != g.family.tag:
        raise ValueError("family mismatch in multiply")
    fam = f.family
    total = f.actual_degree() + g.actual_degree()
    bound = degree_bound if degree_bound is not None else f.degree + g.degree
    if total > bound:
        raise DegreeError("product degree %d exceeds bound %d" % (total, bound))
    N = n_vars if n_vars is not None else max(total, 1)
    if N < total:
        raise DegreeError("need at least %d auxiliary variables" % total)
    fm = f.to_m(N)
    gm = g.to_m(N)
    if len(fm.coeffs) < len(gm.coeffs):
        fm, gm = gm, fm
    fstate = {(k + (0,) * (N - len(k))): v for k, v in fm.coeffs.items()}
    gperms = {mu: list(_multiset_perms(mu + (0,) * (N - len(mu))))
              for mu in gm.coeffs}
    cands = set()
    for gam in fstate:
        for mu, perms in gperms.items():
            for pm in perms:
                cands.add(_sortdesc(tuple(a + b for a, b in zip(gam, pm))))
    out = {}
    for beta in cands:
        acc = None
        for mu, perms in gperms.items():
            gv = gm.coeffs[mu]
            for pm in perms:
                gam = tuple(b - p for b, p in zip(beta, pm))
                if any(x < 0 for x in gam):
                    continue
                fv = fstate.get(_sortdesc(gam))
                if fv is None:
                    continue
                term = fv * gv
                acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero():
            key = normalize(tuple(x for x in beta if x))
            out[key] = acc
    return SymFunc("m", bound, fam, out, _clean=True)


def scalar_product(f, g, family=None):
    """The family's scalar product: diagonal on power sums with
    <p_lambda, p_lambda> = z_lambda * prod_i weight_factor(lambda_i)."""
    fam = family or f.family
    if f.family.tag != g.family.tag:
        raise ValueError("family mismatch in scalar product")
    fp = f.to_p()
    gp = g.to_p()
    out = None
    small, large = (fp, gp) if len(fp.coeffs) <= len(gp.coeffs) else (gp, fp)
    for lam, a in small.coeffs.items():
        b = large.coeffs.get(lam)
        if b is None:
            continue
        term = a * b * p_norm(lam, fam)
        out = term if out is None else out + term
    return out if out is not None else fam.zero()


_p_norm_cache = {}


def p_norm(lam, family):
    """<p_lambda, p_lambda> for the family."""
    lam = normalize(lam)
    key = (family.tag, lam)
    got = _p_norm_cache.get(key)
    if got is None:
        got = family.const(z_factor(lam))
        for part in lam:
            got = got * family.weight_factor(part)
        _p_norm_cache[key] = got
    return got


def to_monomial(f, n_vars=None):
    """Spec-level conversion entry point."""
    return f.to_m(n_vars)


def expand_in_variables(f, n):
    """Explicit polynomial in x_1..x_n: dict from exponent tuples to RatFunc.
    Only valid for n >= number of parts of every key (restriction to n
    variables kills longer monomials)."""
    fm = f.to_m(max(n, f.actual_degree(), 1)) if f.basis != "m" else f
    out = {}
    for mu, c in fm.coeffs.items():
        if len(mu) > n:
            continue
        for pm in _multiset_perms(mu + (0,) * (n - len(mu))):
            out[pm] = c
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def symfunc_to_json(f):
    terms = [{"index": list(k), "coeff": v.to_json()}
             for k, v in f.sorted_items()]
    return {"basis": f.basis, "family": f.family.tag,
            "degree": f.degree, "terms": terms}


def symfunc_from_json(obj):
    fam = FAMILIES[obj["family"]]
    coeffs = {tuple(t["index"]): RatFunc.from_json(t["coeff"])
              for t in obj["terms"]}
    return SymFunc(obj["basis"], obj["degree"], fam, coeffs)

"""Internal fraction representation for the Gram-Schmidt hot loop.

Entries are (numerator polynomial, positive integer, factored denominator)
with denominator factors interned in a global pool.  Sums then need no
polynomial gcd: denominators combine by factor-multiset lcm, and reduction
is exact trial division of the numerator by its own denominator factors.
For binomial factors 1 - x^step the division runs in linear time by
telescoping along exponent chains, and doubles as the divisibility test;
failing candidates are rejected even faster by two modular screens (the
coefficient sum, then evaluation on the factor's zero ray mod a prime).

Only used by the orthogonalization code; results are converted back to
canonical RatFunc values at the block boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ratfunc import MultiPoly, RatFunc, _exact_div

_P = (1 << 61) - 1
_R = 862772101339241  # fixed base for ray evaluations
_rpow = [1, _R]
_rpow_inv = [1, pow(_R, _P - 2, _P)]


def _ray_pow(k):
    tab = _rpow if k >= 0 else _rpow_inv
    if k < 0:
        k = -k
    while len(tab) <= k:
        tab.append(tab[-1] * tab[1] % _P)
    return tab[k]


def _ray_value(p, a1, b1):
    """p(r^b1, r^-a1) mod _P: vanishes whenever some 1 - (q^a1 t^b1)^d
    divides p.  Nonzero value certifies indivisibility for the whole ray."""
    kmin = kmax = 0
    for eq, et in p.terms:
        k = b1 * eq - a1 * et
        if k < kmin:
            kmin = k
        elif k > kmax:
            kmax = k
    _ray_pow(kmax)
    _ray_pow(kmin)
    pos, neg = _rpow, _rpow_inv
    acc = 0
    for (eq, et), c in p.terms.items():
        k = b1 * eq - a1 * et
        acc = (acc + c * (pos[k] if k >= 0 else neg[-k])) % _P
    return acc


def _div_binomial(p, step):
    """Exact quotient p / (1 - x^step) in linear time; None if not exact.

    With M = x^step, h = p/(1-M) satisfies h[e] = p[e] + h[e - step]: each
    chain of exponents congruent modulo step accumulates left to right, and
    exactness means every chain's running sum closes to zero."""
    chains = {}
    setd = chains.setdefault
    if len(step) == 2:
        a, b = step
        if a and b:
            for e, c in p.terms.items():
                eq, et = e
                k = eq // a
                k2 = et // b
                if k2 < k:
                    k = k2
                setd((eq - k * a, et - k * b), {})[k] = c
        elif a:
            for e, c in p.terms.items():
                eq, et = e
                k = eq // a
                setd((eq - k * a, et), {})[k] = c
        else:
            for e, c in p.terms.items():
                eq, et = e
                k = et // b
                setd((eq, et - k * b), {})[k] = c
        out = {}
        for (bq, bt), ch in chains.items():
            kmax = max(ch)
            running = 0
            get = ch.get
            for k in range(min(ch), kmax):
                v = get(k)
                if v is not None:
                    running += v
                if running:
                    out[(bq + k * a, bt + k * b)] = running
            if running + ch[kmax] != 0:
                return None
        return MultiPoly(p.vars, out, _normalized=True)
    # generic arity
    for e, c in p.terms.items():
        k = None
        for s, x in zip(step, e):
            if s:
                kk = x // s
                k = kk if k is None or kk < k else k
        base = tuple(x - k * s for x, s in zip(e, step))
        setd(base, {})[k] = c
    out = {}
    for base, ch in chains.items():
        kmax = max(ch)
        running = 0
        for k in range(min(ch), kmax + 1):
            running += ch.get(k, 0)
            if k < kmax:
                if running:
                    out[tuple(x + k * s for x, s in zip(base, step))] = running
            elif running:
                return None
    return MultiPoly(p.vars, out, _normalized=True)


def _primitive(step):
    d = 0
    for s in step:
        d = math.gcd(d, s)
    return tuple(s // d for s in step)


class _Pool:
    """Interned denominator factors: binomials carry their step vector."""

    def __init__(self):
        self.polys = []
        self.steps = []    # exponent step for binomial factors, None if opaque
        self.ids = {}

    def intern_binomial(self, variables, step):
        nv = len(variables)
        step = tuple(step)
        if len(step) != nv or not any(step):
            raise ValueError("bad binomial step %r" % (step,))
        poly = MultiPoly(variables, {(0,) * nv: 1, step: -1})
        fid = self.ids.get(poly)
        if fid is None:
            fid = len(self.polys)
            self.polys.append(poly)
            self.steps.append(step)
            self.ids[poly] = fid
        return fid

    def intern_opaque(self, poly):
        fid = self.ids.get(poly)
        if fid is None:
            fid = len(self.polys)
            self.polys.append(poly)
            self.steps.append(None)
            self.ids[poly] = fid
        return fid


class FEntry:
    """num / (di * prod factors^exp); immutable by convention."""

    __slots__ = ("num", "di", "bag")

    def __init__(self, num, di, bag):
        self.num = num
        self.di = di
        self.bag = bag

    def is_zero(self):
        return self.num.is_zero()


class FField:
    """Entry arithmetic over a shared factor pool."""

    def __init__(self, variables):
        self.vars = tuple(variables)
        self.pool = _Pool()
        self._expand_cache = {}

    # -- constructors -------------------------------------------------------

    def from_fraction(self, frac):
        frac = Fraction(frac)
        return FEntry(MultiPoly.const(self.vars, frac.numerator),
                      frac.denominator, {})

    def from_ratfunc(self, r):
        """Import a reduced RatFunc, factoring its denominator."""
        c, bag, rest = self.factor_poly(r.den)
        num = r.num
        if rest is not None:
            bag = dict(bag)
            fid = self.pool.intern_opaque(rest)
            bag[fid] = bag.get(fid, 0) + 1
        if c < 0:
            num = -num
            c = -c
        return FEntry(num, c, bag)

    # -- factorization ------------------------------------------------------

    def factor_poly(self, p):
        """(int, bag, opaque_rest) with p = int * prod(factors) * rest.
        Trial-divides by binomial candidates within the degree box, largest
        total degree first (pulling 1 - q first would shred larger binomials
        into cyclotomic leftovers no later candidate divides); rest is None
        when fully factored."""
        if p.is_zero():
            raise ZeroDivisionError("factor of zero")
        if not self.vars or p.is_const():
            return p.const_value(), {}, None
        c = p.content()
        p = _exact_div(p, MultiPoly.const(self.vars, c))
        bag = {}
        nv = len(self.vars)
        cands = []
        if nv == 2:
            for a in range(p.degree_in(0) + 1):
                for b in range(p.degree_in(1) + 1):
                    if a or b:
                        cands.append((a, b))
        else:
            cands = [(a,) for a in range(1, p.degree_in(0) + 1)]
        cands.sort(key=lambda ab: (sum(ab), ab), reverse=True)
        dead_rays = set()
        for step in cands:
            if len(p.terms) == 1:
                break
            if sum(p.terms.values()) != 0:
                break   # no binomial can divide any more
            if any(s > p.degree_in(i) for i, s in enumerate(step)):
                continue
            if nv == 2:
                ray = _primitive(step)
                if ray in dead_rays:
                    continue
                if _ray_value(p, ray[0], ray[1]) != 0:
                    dead_rays.add(ray)
                    continue
            fid = None
            while True:
                qp = _div_binomial(p, step)
                if qp is None:
                    break
                if fid is None:
                    fid = self.pool.intern_binomial(self.vars, step)
                p = qp
                dead_rays.clear()
                bag[fid] = bag.get(fid, 0) + 1
        if p.is_const():
            c *= p.const_value()
            return c, bag, None
        if p.leading()[1] < 0:
            p = -p
            c = -c
        return c, bag, p

    # -- arithmetic ---------------------------------------------------------

    def expand_bag(self, bag):
        key = tuple(sorted(bag.items()))
        got = self._expand_cache.get(key)
        if got is None:
            got = MultiPoly.const(self.vars, 1)
            for fid, e in key:
                got = got * (self.pool.polys[fid] ** e)
            if len(self._expand_cache) > 40000:
                self._expand_cache.clear()
            self._expand_cache[key] = got
        return got

    def _cofactor(self, big, small):
        missing = {}
        for fid, e in big.items():
            d = e - small.get(fid, 0)
            if d:
                missing[fid] = d
        if not missing:
            return None
        return self.expand_bag(missing)

    def mul(self, a, b):
        if a.num.is_zero() or b.num.is_zero():
            return FEntry(MultiPoly.zero(self.vars), 1, {})
        bag = dict(a.bag)
        for fid, e in b.bag.items():
            bag[fid] = bag.get(fid, 0) + e
        return self.reduce(a.num * b.num, a.di * b.di, bag)

    def scale_fraction(self, a, frac):
        frac = Fraction(frac)
        if frac == 0 or a.num.is_zero():
            return FEntry(MultiPoly.zero(self.vars), 1, {})
        num = a.num * frac.numerator
        di = a.di * frac.denominator
        g = math.gcd(num.content(), di)
        if g > 1:
            num = _exact_div(num, MultiPoly.const(self.vars, g))
            di //= g
        return FEntry(num, di, a.bag)

    def sub_mul(self, s, c, v):
        """s - c*v in one pass over the combined denominator."""
        if c.num.is_zero() or v.num.is_zero():
            return s
        pbag = dict(c.bag)
        for fid, e in v.bag.items():
            pbag[fid] = pbag.get(fid, 0) + e
        pnum = c.num * v.num
        pdi = c.di * v.di
        if s.num.is_zero():
            return self.reduce(-pnum, pdi, pbag)
        lbag = dict(s.bag)
        for fid, e in pbag.items():
            if lbag.get(fid, 0) < e:
                lbag[fid] = e
        ldi = s.di * pdi // math.gcd(s.di, pdi)
        left = s.num if ldi == s.di else s.num * (ldi // s.di)
        cof = self._cofactor(lbag, s.bag)
        if cof is not None:
            left = left * cof
        right = pnum if ldi == pdi else pnum * (ldi // pdi)
        cof = self._cofactor(lbag, pbag)
        if cof is not None:
            right = right * cof
        return self.reduce(left - right, ldi, lbag)

    def add(self, s, v):
        if v.num.is_zero():
            return s
        if s.num.is_zero():
            return v
        lbag = dict(s.bag)
        for fid, e in v.bag.items():
            if lbag.get(fid, 0) < e:
                lbag[fid] = e
        ldi = s.di * v.di // math.gcd(s.di, v.di)
        left = s.num if ldi == s.di else s.num * (ldi // s.di)
        cof = self._cofactor(lbag, s.bag)
        if cof is not None:
            left = left * cof
        right = v.num if ldi == v.di else v.num * (ldi // v.di)
        cof = self._cofactor(lbag, v.bag)
        if cof is not None:
            right = right * cof
        return self.reduce(left + right, ldi, lbag)

    def div_entry(self, a, b):
        """a / b, factoring b's numerator into the pool."""
        if b.num.is_zero():
            raise ZeroDivisionError("division by zero entry")
        c, nbag, rest = self.factor_poly(b.num)
        num = a.num * b.di * self.expand_bag(b.bag)
        di = a.di * c
        if di < 0:
            num = -num
            di = -di
        bag = dict(a.bag)
        for fid, e in nbag.items():
            bag[fid] = bag.get(fid, 0) + e
        if rest is not None:
            fid = self.pool.intern_opaque(rest)
            bag[fid] = bag.get(fid, 0) + 1
        return self.reduce(num, di, bag)

    def reduce(self, num, di, bag):
        if num.is_zero():
            return FEntry(num, 1, {})
        g = math.gcd(num.content(), di)
        if g > 1:
            num = _exact_div(num, MultiPoly.const(self.vars, g))
            di //= g
        out_bag = {}
        nv = len(self.vars)
        steps = self.pool.steps
        rays = {}
        opaque = []
        for fid, e in bag.items():
            step = steps[fid]
            if step is None:
                opaque.append((fid, e))
            else:
                rays.setdefault(_primitive(step), []).append((fid, e, step))
        if rays and sum(num.terms.values()) == 0:
            degs = [num.degree_in(i) for i in range(nv)]
            for ray, members in rays.items():
                if nv == 2 and _ray_value(num, ray[0], ray[1]) != 0:
                    for fid, e, _ in members:
                        out_bag[fid] = out_bag.get(fid, 0) + e
                    continue
                members.sort(key=lambda m: m[2], reverse=True)
                for fid, e, step in members:
                    while e > 0:
                        if any(s > d for s, d in zip(step, degs)):
                            break
                        qp = _div_binomial(num, step)
                        if qp is None:
                            break
                        num = qp
                        degs = [num.degree_in(i) for i in range(nv)]
                        e -= 1
                    if e:
                        out_bag[fid] = out_bag.get(fid, 0) + e
        else:
            for members in rays.values():
                for fid, e, _ in members:
                    out_bag[fid] = out_bag.get(fid, 0) + e
        for fid, e in opaque:
            poly = self.pool.polys[fid]
            while e > 0:
                qp = _exact_div(num, poly)
                if qp is None:
                    break
                num = qp
                e -= 1
            if e:
                out_bag[fid] = e
        g = math.gcd(num.content(), di)
        if g > 1:
            num = _exact_div(num, MultiPoly.const(self.vars, g))
            di //= g
        return FEntry(num, di, out_bag)

    def to_ratfunc(self, a):
        den = self.expand_bag(a.bag) * a.di
        return RatFunc(a.num, den)

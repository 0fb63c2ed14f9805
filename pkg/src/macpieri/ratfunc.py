"""Exact arithmetic: sparse integer polynomials in at most two named variables
and canonically reduced rational functions over them.

A MultiPoly is a dict from exponent tuples to arbitrary-precision integers;
a RatFunc is a reduced pair num/den with a sign-normalized denominator.
The coefficient fields used throughout the package are Q(q,t) (variables
("q","t")), Q(t), Q(a) for the alpha-parameter family, and plain Q
(empty variable tuple).

GCDs are taken by an integer-evaluation heuristic verified by exact
division, with a primitive-part subresultant remainder sequence as the
deterministic fallback (main variable = first variable of the ring).
"""

from __future__ import annotations

import heapq
import json
import math
from fractions import Fraction

QT = ("q", "t")
TONLY = ("t",)
ALPHA = ("a",)
QONLY = ("q",)
RATIONAL = ()


class ArithmeticDomainError(ZeroDivisionError):
    """Division by a zero rational function, or evaluation at a pole."""


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Z
# ---------------------------------------------------------------------------

def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    """Sparse polynomial with integer coefficients.

    terms maps exponent tuples (one entry per variable, all >= 0) to nonzero
    integers.  Equality is structural equality of the term maps.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms, _normalized=False):
        self.vars = tuple(variables)
        if _normalized:
            self.terms = terms
        else:
            self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {}, _normalized=True)

    @classmethod
    def const(cls, variables, c):
        c = int(c)
        if c == 0:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(variables): c}, _normalized=True)

    @classmethod
    def gen(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: 1}, _normalized=True)

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        coeff = int(coeff)
        if coeff == 0:
            return cls.zero(variables)
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError("MultiPoly exponents must be nonnegative")
        return cls(variables, {exps: coeff}, _normalized=True)

    # -- predicates and views ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.vars): 1}

    def is_const(self):
        return not self.terms or (len(self.terms) == 1
                                  and (0,) * len(self.vars) in self.terms)

    def const_value(self):
        if not self.terms:
            return 0
        return self.terms[(0,) * len(self.vars)]

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, idx):
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def content(self):
        """gcd of the integer coefficients (nonnegative)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()},
                         _normalized=True)

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.vars, out, _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars,
                             {e: c * other for e, c in self.terms.items()},
                             _normalized=True)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vars)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        nv = len(self.vars)
        if nv == 0:
            v = sum(c for c in a.values()) * sum(c for c in b.values())
            return MultiPoly.const(self.vars, v)
        get = out.get
        if nv == 2:
            for (x1, y1), ca in a.items():
                for (x2, y2), cb in b.items():
                    e = (x1 + x2, y1 + y2)
                    s = get(e, 0) + ca * cb
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        elif nv == 1:
            for (x1,), ca in a.items():
                for (x2,), cb in b.items():
                    e = (x1 + x2,)
                    s = get(e, 0) + ca * cb
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        else:
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(map(int.__add__, ea, eb))
                    s = get(e, 0) + ca * cb
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MultiPoly(self.vars, out, _normalized=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a MultiPoly")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return "MultiPoly(%r)" % (self.sorted_terms(),)

    def sorted_terms(self):
        """Terms as [(exponent, coeff)] in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]),
                      reverse=True)

    # -- division ------------------------------------------------------------

    def divides_exactly(self, other):
        """Quotient other/self if exact, else None."""
        return _exact_div(other, self)

    def map_coeffs(self, fn):
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    # -- substitution --------------------------------------------------------

    def substitute(self, assignment, target_vars):
        """Evaluate with each variable mapped to a RatFunc/Fraction/int.

        assignment maps variable names to values over target_vars; a variable
        without an assignment maps to itself when target_vars contains it.
        Returns a RatFunc.  Monomial values (including 0) take a fast path.
        """
        target_vars = tuple(target_vars)
        values = []
        for i, v in enumerate(self.vars):
            if v in assignment:
                values.append(RatFunc.convert(assignment[v], target_vars))
            elif v in target_vars:
                values.append(RatFunc.gen(target_vars, v))
            else:
                if self.degree_in(i) > 0:
                    raise ValueError("no value for variable %r" % v)
                values.append(RatFunc.zero(target_vars))
        mono = _monomial_views(values)
        if mono is not None:
            return _substitute_monomials(self, mono, target_vars)
        out = RatFunc.zero(target_vars)
        powers = [{} for _ in self.vars]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = values[i] ** e
            return cache[e]

        for e, c in self.terms.items():
            term = RatFunc.const(target_vars, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * pw(i, ei)
            out = out + term
        return out


def _monomial_views(values):
    """Each value as (scale, exps) with Fraction scale, or None for zero.
    Returns None when some value is not a single monomial."""
    out = []
    for v in values:
        if v.num.is_zero():
            out.append(None)
            continue
        if len(v.num.terms) != 1 or len(v.den.terms) != 1:
            return None
        (en, cn), = v.num.terms.items()
        (ed, cd), = v.den.terms.items()
        exps = tuple(a - b for a, b in zip(en, ed))
        out.append((Fraction(cn, cd), exps))
    return out


def _substitute_monomials(poly, mono, target_vars):
    nv = len(target_vars)
    acc = {}
    for e, c in poly.terms.items():
        scale = Fraction(c)
        exps = [0] * nv
        dead = False
        for i, ei in enumerate(e):
            if not ei:
                continue
            view = mono[i]
            if view is None:
                dead = True
                break
            scale *= view[0] ** ei
            for j, vj in enumerate(view[1]):
                exps[j] += vj * ei
        if dead:
            continue
        key = tuple(exps)
        acc[key] = acc.get(key, Fraction(0)) + scale
    acc = {e: c for e, c in acc.items() if c}
    if not acc:
        return RatFunc.zero(target_vars)
    denom = 1
    for c in acc.values():
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    mins = [0] * nv
    for e in acc:
        for j, x in enumerate(e):
            if x < mins[j]:
                mins[j] = x
    num = MultiPoly(target_vars,
                    {tuple(x - m for x, m in zip(e, mins)):
                     int(c * denom) for e, c in acc.items()})
    den = MultiPoly.monomial(target_vars, tuple(-m for m in mins), denom)
    return RatFunc(num, den)


def _exact_div_uni(num, den):
    """Dense exact division for univariate polynomials."""
    dn = num.degree_in(0)
    dd = den.degree_in(0)
    if dn < dd:
        return None
    n = [0] * (dn + 1)
    for (e,), c in num.terms.items():
        n[e] = c
    d = [0] * (dd + 1)
    for (e,), c in den.terms.items():
        d[e] = c
    lead = d[dd]
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = n[dd + k]
        if c == 0:
            continue
        qc, r = divmod(c, lead)
        if r:
            return None
        quot[k] = qc
        for j in range(dd + 1):
            if d[j]:
                n[j + k] -= qc * d[j]
    if any(n[:dd]):
        return None
    return MultiPoly(num.vars, {(e,): c for e, c in enumerate(quot) if c},
                     _normalized=True)


def _heap_key(e):
    return (-sum(e), tuple(-x for x in e))


def _exact_div(num, den):
    """Exact multivariate division num/den over Z; None if not exact.

    Leading terms of the shrinking remainder are tracked with a lazy-deletion
    heap instead of rescanning the term map."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return MultiPoly.zero(num.vars)
    if den.is_const():
        d = den.const_value()
        out = {}
        for e, c in num.terms.items():
            q, r = divmod(c, d)
            if r:
                return None
            out[e] = q
        return MultiPoly(num.vars, out, _normalized=True)
    nv = len(num.vars)
    if nv == 1:
        return _exact_div_uni(num, den)
    rem = dict(num.terms)
    de, dc = den.leading()
    dterms = [(e, c) for e, c in den.terms.items() if e != de]
    quot = {}
    heap = [_heap_key(e) + (e,) for e in rem]
    heapq.heapify(heap)
    seen = set(rem)
    while heap:
        e = heapq.heappop(heap)[2]
        c = rem.get(e)
        if c is None:
            continue
        del rem[e]
        if nv == 2:
            qe = (e[0] - de[0], e[1] - de[1])
            if qe[0] < 0 or qe[1] < 0:
                return None
        else:
            qe = tuple(map(int.__sub__, e, de))
            if any(x < 0 for x in qe):
                return None
        qc, r = divmod(c, dc)
        if r:
            return None
        quot[qe] = qc
        for ee, cc in dterms:
            if nv == 2:
                t = (qe[0] + ee[0], qe[1] + ee[1])
            else:
                t = tuple(map(int.__add__, qe, ee))
            s = rem.get(t, 0) - qc * cc
            if s:
                rem[t] = s
                if t not in seen:
                    seen.add(t)
                    heapq.heappush(heap, _heap_key(t) + (t,))
            else:
                rem.pop(t, None)
    if rem:
        return None
    return MultiPoly(num.vars, quot, _normalized=True)


# ---------------------------------------------------------------------------
# polynomial gcd: monomial/integer content, heuristic gcd, subresultant PRS
# ---------------------------------------------------------------------------

def _monomial_content(p):
    mins = None
    for e in p.terms:
        if mins is None:
            mins = list(e)
        else:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
        if mins is not None and not any(mins):
            return tuple(mins)
    return tuple(mins) if mins is not None else (0,) * len(p.vars)


def _shift_down(p, shift):
    if not any(shift):
        return p
    return MultiPoly(p.vars,
                     {tuple(map(int.__sub__, e, shift)): c
                      for e, c in p.terms.items()}, _normalized=True)


def _eval_at_int(p, idx, xi):
    """Substitute integer xi for variable idx; drops that variable."""
    out = {}
    for e, c in p.terms.items():
        e2 = e[:idx] + e[idx + 1:]
        out[e2] = out.get(e2, 0) + c * (xi ** e[idx])
    vars2 = p.vars[:idx] + p.vars[idx + 1:]
    return MultiPoly(vars2, out)


def _lift_digits(img, idx, xi, varname):
    """Inverse of _eval_at_int by balanced xi-adic digit expansion."""
    vars_out = img.vars[:idx] + (varname,) + img.vars[idx:]
    out = {}
    cur = img
    power = 0
    half = xi // 2
    while not cur.is_zero():
        digits = {}
        nxt = {}
        for e, c in cur.terms.items():
            d = c % xi
            if d > half:
                d -= xi
            if d:
                digits[e] = d
            r = (c - d) // xi
            if r:
                nxt[e] = r
        for e, d in digits.items():
            out[e[:idx] + (power,) + e[idx:]] = d
        cur = MultiPoly(cur.vars, nxt, _normalized=True)
        power += 1
        if power > 10000:
            raise RuntimeError("runaway digit expansion")
    return MultiPoly(vars_out, out, _normalized=True)


def _max_abs_coeff(p):
    return max((abs(c) for c in p.terms.values()), default=0)


_CP_PRIME = (1 << 61) - 1
_cp_state = [123456789]


def _cp_rand():
    _cp_state[0] = (_cp_state[0] * 6364136223846793005 + 1442695040888963407) % (1 << 63)
    return 2 + (_cp_state[0] >> 8) % (_CP_PRIME - 3)


def _eval_mod_line(f, keep, pts, p):
    """Dense coefficient list of f in variable `keep`, the other variables
    evaluated at the given points mod p.  None when the leading coefficient
    vanishes at the point (degenerate image)."""
    deg = f.degree_in(keep)
    nv = len(f.vars)
    out = [0] * (deg + 1)
    cache = [{} for _ in range(nv)]
    for e, c in f.terms.items():
        m = c % p
        for i in range(nv):
            if i == keep or not e[i]:
                continue
            pc = cache[i]
            v = pc.get(e[i])
            if v is None:
                v = pow(pts[i], e[i], p)
                pc[e[i]] = v
            m = m * v % p
        out[e[keep]] = (out[e[keep]] + m) % p
    if out[deg] == 0:
        return None
    return out


def _gcd_degree_mod(a, b, p):
    """Degree of gcd of dense univariate polynomials over GF(p)."""
    a = a[:]
    b = b[:]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            if a[-1]:
                f = a[-1] * inv % p
                off = len(a) - 1 - db
                for i in range(db + 1):
                    a[off + i] = (a[off + i] - f * b[i]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _certified_coprime(f, g):
    """True only when the primitive inputs are provably coprime: in every
    variable direction the mod-p univariate images (with non-degenerate
    leading coefficients) have a constant gcd."""
    p = _CP_PRIME
    nv = len(f.vars)
    for keep in range(nv):
        if f.degree_in(keep) == 0 or g.degree_in(keep) == 0:
            continue
        for attempt in range(3):
            pts = [_cp_rand() for _ in range(nv)]
            fu = _eval_mod_line(f, keep, pts, p)
            gu = _eval_mod_line(g, keep, pts, p)
            if fu is not None and gu is not None:
                break
        else:
            return False
        if _gcd_degree_mod(fu, gu, p) != 0:
            return False
    return True


def _heuristic_gcd(f, g):
    """Geddes-style gcd by integer evaluation, verified by exact division.

    Returns the full gcd over Z (integer content included), or None when the
    attempts fail (the caller falls back to the remainder-sequence gcd).
    """
    if len(f.vars) == 0:
        return MultiPoly.const(f.vars, math.gcd(f.const_value(), g.const_value()))
    # Pull out the common integer content; the remaining gcd is then
    # content-free, so candidate lifts may be made primitive before the
    # divisibility check.
    c = math.gcd(f.content(), g.content())
    if c > 1:
        f = _exact_div(f, MultiPoly.const(f.vars, c))
        g = _exact_div(g, MultiPoly.const(g.vars, c))
    cmul = MultiPoly.const(f.vars, c)
    idx = len(f.vars) - 1
    if f.degree_in(idx) == 0 and g.degree_in(idx) == 0:
        h = _heuristic_gcd(_drop_var(f, idx), _drop_var(g, idx))
        if h is None:
            return None
        return _raise_var(h, idx, f.vars[idx]) * cmul
    bound = 2 * min(_max_abs_coeff(f), _max_abs_coeff(g)) + 2
    xi = max(bound, 100)
    for _ in range(6):
        fi = _eval_at_int(f, idx, xi)
        gi = _eval_at_int(g, idx, xi)
        if not fi.is_zero() and not gi.is_zero():
            h_img = _heuristic_gcd(fi, gi)
            if h_img is not None:
                cand = _lift_digits(h_img, idx, xi, f.vars[idx])
                cont = cand.content()
                if cont > 1:
                    cand = _exact_div(cand, MultiPoly.const(cand.vars, cont))
                if not cand.is_zero():
                    if _exact_div(f, cand) is not None and _exact_div(g, cand) is not None:
                        return cand * cmul
        xi = xi * 73 // 32 + 1
    return None


def _drop_var(p, idx):
    vars2 = p.vars[:idx] + p.vars[idx + 1:]
    return MultiPoly(vars2, {e[:idx] + e[idx + 1:]: c for e, c in p.terms.items()},
                     _normalized=True)


def _raise_var(p, idx, name):
    vars2 = p.vars[:idx] + (name,) + p.vars[idx:]
    return MultiPoly(vars2, {e[:idx] + (0,) + e[idx:]: c for e, c in p.terms.items()},
                     _normalized=True)


def _as_univariate(p, idx):
    """View as univariate in variable idx with MultiPoly coefficients."""
    coeffs = {}
    for e, c in p.terms.items():
        d = e[idx]
        e2 = e[:idx] + (0,) + e[idx + 1:]
        co = coeffs.setdefault(d, {})
        co[e2] = co.get(e2, 0) + c
    return {d: MultiPoly(p.vars, co) for d, co in coeffs.items()}


def _from_univariate(coeffs, idx, variables):
    out = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            e2 = e[:idx] + (d,) + e[idx + 1:]
            out[e2] = c
    return MultiPoly(variables, out)


class _UniPoly:
    """Dense univariate polynomial with MultiPoly coefficients, for the PRS."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = coeffs

    def deg(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1]

    def scale(self, poly):
        return _UniPoly([c * poly for c in self.coeffs])

    def is_zero(self):
        return not self.coeffs


def _pseudo_rem(a, b):
    """Pseudo-remainder of univariate a by b: lc(b)^(deg a - deg b + 1) a mod b."""
    da, db = a.deg(), b.deg()
    lcb = b.lc()
    r = list(a.coeffs)
    for k in range(da - db, -1, -1):
        top = r[db + k]
        r = [c * lcb for c in r]
        if not top.is_zero():
            for j, bc in enumerate(b.coeffs):
                r[j + k] = r[j + k] - top * bc
    return _UniPoly(r[:db])


def _uni_content(u, gcd_fn):
    g = None
    for c in u.coeffs:
        if c.is_zero():
            continue
        g = c if g is None else gcd_fn(g, c)
        if g.is_one():
            return g
    return g


def _prs_gcd(f, g):
    """Primitive-part polynomial remainder sequence gcd over Z, treating the
    polynomials as univariate in the first variable with coefficients in the
    remaining ones.  Deterministic fallback for poly_gcd."""
    variables = f.vars
    idx = 0
    if len(variables) == 1:
        def sub_gcd(a, b):
            return MultiPoly.const(variables,
                                   math.gcd(a.const_value(), b.const_value()))
    else:
        def sub_gcd(a, b):
            return _poly_gcd_drop(a, b, idx)
    fu = _to_unipoly(f, idx)
    gu = _to_unipoly(g, idx)
    if fu.deg() < gu.deg():
        fu, gu = gu, fu
    cf = _uni_content(fu, sub_gcd)
    cg = _uni_content(gu, sub_gcd)
    cont = sub_gcd(cf, cg)
    a = _UniPoly([_exact_div(c, cf) for c in fu.coeffs])
    b = _UniPoly([_exact_div(c, cg) for c in gu.coeffs])
    one = MultiPoly.const(variables, 1)
    while True:
        if b.deg() == 0:
            prim = _UniPoly([one])
            break
        r = _pseudo_rem(a, b)
        if r.is_zero():
            prim = b
            break
        cr = _uni_content(r, sub_gcd)
        a, b = b, _UniPoly([_exact_div(c, cr) for c in r.coeffs])
    res = _from_univariate(dict(enumerate(prim.coeffs)), idx, variables)
    return res * cont


def _to_unipoly(p, idx):
    by_deg = _as_univariate(p, idx)
    return _UniPoly([by_deg.get(d, MultiPoly.zero(p.vars))
                     for d in range(p.degree_in(idx) + 1)])


def _poly_gcd_drop(a, b, idx):
    """gcd of polynomials not involving variable idx."""
    a2 = _drop_var(a, idx)
    b2 = _drop_var(b, idx)
    return _raise_var(poly_gcd(a2, b2), idx, a.vars[idx])


_gcd_cache = {}


def poly_gcd(f, g):
    """gcd over Z[vars], positive graded-lex leading coefficient.  Memoized:
    rational-function pipelines hit the same denominator pairs repeatedly."""
    if f.is_zero():
        return _positive_lc(g)
    if g.is_zero():
        return _positive_lc(f)
    if hash(f) > hash(g):
        f, g = g, f
    key = (f, g)
    got = _gcd_cache.get(key)
    if got is None:
        got = _poly_gcd_impl(f, g)
        if len(_gcd_cache) > 300000:
            _gcd_cache.clear()
        _gcd_cache[key] = got
    return got


def _poly_gcd_impl(f, g):
    mf = _monomial_content(f)
    mg = _monomial_content(g)
    shift = tuple(map(min, mf, mg)) if f.vars else ()
    f1 = _shift_down(f, mf)
    g1 = _shift_down(g, mg)
    cf, cg = f1.content(), g1.content()
    c = math.gcd(cf, cg)
    f1 = _exact_div(f1, MultiPoly.const(f.vars, cf))
    g1 = _exact_div(g1, MultiPoly.const(g.vars, cg))
    if f1.is_one() or g1.is_one():
        core = MultiPoly.const(f.vars, 1)
    elif f1 == g1:
        core = f1
    elif _certified_coprime(f1, g1):
        core = MultiPoly.const(f.vars, 1)
    else:
        core = _heuristic_gcd(f1, g1)
        if core is None:
            core = _prs_gcd(f1, g1)
    if not core.is_const():
        core = _exact_div(core, MultiPoly.const(f.vars, core.content()))
    out = core * MultiPoly.monomial(f.vars, shift, c)
    return _positive_lc(out)


def _positive_lc(p):
    if p.is_zero():
        return p
    _, c = p.leading()
    return -p if c < 0 else p


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced fraction of MultiPolys: gcd(num, den) = 1 and the denominator
    has positive graded-lex leading coefficient.  Immutable; equality is
    structural equality of the reduced pair."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _reduced=False):
        if den.is_zero():
            raise ArithmeticDomainError("zero denominator")
        if not _reduced:
            num, den = _reduce_pair(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(MultiPoly.zero(variables), MultiPoly.const(variables, 1),
                   _reduced=True)

    @classmethod
    def one(cls, variables):
        one = MultiPoly.const(variables, 1)
        return cls(one, one, _reduced=True)

    @classmethod
    def const(cls, variables, c):
        if isinstance(c, Fraction):
            num = MultiPoly.const(variables, c.numerator)
            den = MultiPoly.const(variables, c.denominator)
            return cls(num, den, _reduced=True)
        return cls(MultiPoly.const(variables, c),
                   MultiPoly.const(variables, 1), _reduced=True)

    @classmethod
    def gen(cls, variables, name):
        return cls(MultiPoly.gen(variables, name),
                   MultiPoly.const(variables, 1), _reduced=True)

    @classmethod
    def from_poly(cls, p):
        return cls(p, MultiPoly.const(p.vars, 1), _reduced=True)

    @classmethod
    def monomial(cls, variables, exps, scale=1):
        """scale * prod(var_i ** exps[i]) with negative exponents cleared
        into the denominator."""
        scale = Fraction(scale)
        pos = tuple(max(e, 0) for e in exps)
        neg = tuple(max(-e, 0) for e in exps)
        num = MultiPoly.monomial(variables, pos, scale.numerator)
        den = MultiPoly.monomial(variables, neg, scale.denominator)
        return cls(num, den)

    @classmethod
    def convert(cls, value, variables):
        if isinstance(value, RatFunc):
            if value.num.vars != tuple(variables):
                raise ValueError("variable mismatch: %r vs %r"
                                 % (value.num.vars, tuple(variables)))
            return value
        if isinstance(value, MultiPoly):
            return cls.from_poly(value)
        if isinstance(value, (int, Fraction)):
            return cls.const(variables, value)
        if isinstance(value, MonomialArg):
            return value.to_ratfunc(variables)
        raise TypeError("cannot convert %r to RatFunc" % (value,))

    # -- predicates ----------------------------------------------------------

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def as_fraction(self):
        """Value as a Fraction; requires a constant RatFunc."""
        if not (self.num.is_const() and self.den.is_const()):
            raise ValueError("not a constant: %s" % self)
        return Fraction(self.num.const_value(), self.den.const_value())

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.vars, other)
        if isinstance(other, MultiPoly):
            return RatFunc.from_poly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        b, d = self.den, other.den
        if b == d:
            return RatFunc(self.num + other.num, b)
        # Henrici: with a/b, c/d reduced, the sum over lcm(b,d) needs only
        # one further gcd against g = gcd(b,d).
        g = poly_gcd(b, d)
        if g.is_one():
            return _ratfunc_known(self.num * d + other.num * b, b * d)
        b1 = _exact_div(b, g)
        d1 = _exact_div(d, g)
        num = self.num * d1 + other.num * b1
        g2 = poly_gcd(num, g)
        if not g2.is_one():
            num = _exact_div(num, g2)
            g = _exact_div(g, g2)
        return _ratfunc_known(num, b1 * d1 * g)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc.zero(self.vars)
        a, b = self.num, self.den
        c, d = other.num, other.den
        g1 = poly_gcd(a, d)
        if not g1.is_one():
            a = _exact_div(a, g1)
            d = _exact_div(d, g1)
        g2 = poly_gcd(c, b)
        if not g2.is_one():
            c = _exact_div(c, g2)
            b = _exact_div(b, g2)
        return _ratfunc_known(a * c, b * d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ArithmeticDomainError("division by zero rational function")
        return self * RatFunc(other.den, other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if k == 0:
            return RatFunc.one(self.vars)
        if k < 0:
            if self.num.is_zero():
                raise ArithmeticDomainError("zero to a negative power")
            return RatFunc(self.den, self.num) ** (-k)
        num = self.num ** k
        den = self.den ** k
        return _ratfunc_known(num, den)

    def scale_fraction(self, frac):
        """Multiply by a rational constant (cheap path, no polynomial gcd)."""
        if not isinstance(frac, Fraction):
            frac = Fraction(frac)
        if frac == 0 or self.num.is_zero():
            return RatFunc.zero(self.vars)
        num = self.num * frac.numerator
        den = self.den * frac.denominator
        cn, cd = num.content(), den.content()
        c = math.gcd(cn, cd)
        if c > 1:
            num = _exact_div(num, MultiPoly.const(num.vars, c))
            den = _exact_div(den, MultiPoly.const(den.vars, c))
        return RatFunc(num, den, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- substitution and evaluation ------------------------------------------

    def substitute(self, assignment, target_vars):
        """Map variables to values (RatFunc/Fraction/int over target_vars).

        Operates on the reduced form: a vanishing denominator is a genuine
        pole and raises ArithmeticDomainError.
        """
        num = self.num.substitute(assignment, target_vars)
        den = self.den.substitute(assignment, target_vars)
        if den.is_zero():
            raise ArithmeticDomainError("pole at substitution point")
        return num / den

    def eval_rational(self, assignment):
        """Evaluate at rational values for every variable; returns Fraction."""
        out = self.substitute(assignment, ())
        return out.as_fraction()

    # -- rendering -----------------------------------------------------------

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        num = _poly_str(self.num)
        if self.den.is_one():
            return num
        den = _poly_str(self.den)
        if len(self.num.terms) > 1:
            num = "(%s)" % num
        if len(self.den.terms) > 1:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        return {"vars": list(self.vars),
                "num": _poly_json(self.num),
                "den": _poly_json(self.den)}

    @classmethod
    def from_json(cls, obj):
        variables = tuple(obj["vars"])
        num = _poly_from_json(variables, obj["num"])
        den = _poly_from_json(variables, obj["den"])
        return cls(num, den)


def _ratfunc_known(num, den):
    """Build a RatFunc from a pair already coprime in polynomial part;
    only integer content and the sign remain to normalize."""
    cn, cd = num.content(), den.content()
    c = math.gcd(cn, cd)
    if c > 1:
        num = _exact_div(num, MultiPoly.const(num.vars, c))
        den = _exact_div(den, MultiPoly.const(den.vars, c))
    if den.leading()[1] < 0:
        num, den = -num, -den
    return RatFunc(num, den, _reduced=True)


def _reduce_pair(num, den):
    if num.is_zero():
        return num, MultiPoly.const(num.vars, 1)
    g = poly_gcd(num, den)
    if not g.is_one():
        num = _exact_div(num, g)
        den = _exact_div(den, g)
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


def _poly_str(p):
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        factors = []
        for name, ei in zip(p.vars, e):
            if ei == 1:
                factors.append(name)
            elif ei > 1:
                factors.append("%s^%d" % (name, ei))
        if not factors:
            body = str(abs(c))
        else:
            body = "*".join(factors)
            if abs(c) != 1:
                body = "%d*%s" % (abs(c), body)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def _poly_json(p):
    return [[list(e), str(c)] for e, c in p.sorted_terms()]


def _poly_from_json(variables, items):
    return MultiPoly(variables, {tuple(e): int(c) for e, c in items})


def ratfunc_to_string(r):
    return json.dumps(r.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# MonomialArg and q-Pochhammer constructors
# ---------------------------------------------------------------------------

class MonomialArg:
    """scale * q^qExp * t^tExp with integer (possibly negative) exponents."""

    __slots__ = ("q_exp", "t_exp", "scale")

    def __init__(self, q_exp=0, t_exp=0, scale=1):
        self.q_exp = int(q_exp)
        self.t_exp = int(t_exp)
        self.scale = Fraction(scale)

    def to_ratfunc(self, variables=QT):
        variables = tuple(variables)
        exps = []
        for name in variables:
            if name == "q":
                exps.append(self.q_exp)
            elif name == "t":
                exps.append(self.t_exp)
            else:
                exps.append(0)
        if self.q_exp and "q" not in variables:
            raise ValueError("q exponent in a ring without q")
        if self.t_exp and "t" not in variables:
            raise ValueError("t exponent in a ring without t")
        return RatFunc.monomial(variables, exps, self.scale)

    def __repr__(self):
        return "MonomialArg(q_exp=%d, t_exp=%d, scale=%s)" % (
            self.q_exp, self.t_exp, self.scale)


def qpoch(a, k, base=None, variables=QT):
    """Finite q-shifted factorial (a; base)_k = prod_{i<k} (1 - a*base^i).

    a may be a MonomialArg, RatFunc, Fraction or int; base defaults to the
    generator q of the ring.  Returns a RatFunc (or the duck-typed field
    element when a and base are plain numbers).
    """
    if k < 0:
        raise ValueError("qpoch needs k >= 0")
    if isinstance(a, MonomialArg):
        a = a.to_ratfunc(variables)
    if base is None:
        base = RatFunc.gen(a.vars if isinstance(a, RatFunc) else variables, "q")
    elif isinstance(base, MonomialArg):
        base = base.to_ratfunc(variables)
    out = 1
    p = 1
    for _ in range(k):
        out = out * (1 - a * p)
        p = p * base
    if isinstance(a, RatFunc) and not isinstance(out, RatFunc):
        out = RatFunc.const(a.vars, out)
    return out


def rising_factorial(x, k):
    """(x)_k = x (x+1) ... (x+k-1); duck-typed over any field element."""
    if k < 0:
        raise ValueError("rising factorial needs k >= 0")
    out = 1
    for i in range(k):
        out = out * (x + i)
    return out


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def poly_det_bareiss(rows):
    """Fraction-free Bareiss determinant of a square MultiPoly matrix."""
    n = len(rows)
    m = [list(r) for r in rows]
    variables = m[0][0].vars
    sign = 1
    prev = MultiPoly.const(variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_div(val, prev)
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out if sign > 0 else -out


def ratfunc_det(matrix):
    """Exact determinant of a square RatFunc matrix.

    Clears each row to a common polynomial denominator, runs fraction-free
    Bareiss on the integer-polynomial matrix, and divides back out.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 1:
        return matrix[0][0]
    variables = matrix[0][0].vars
    cleared = []
    dens = []
    for row in matrix:
        den = MultiPoly.const(variables, 1)
        for entry in row:
            den = den * entry.den
        cleared.append([entry.num * _exact_div(den, entry.den) for entry in row])
        dens.append(den)
    det = poly_det_bareiss(cleared)
    denom = MultiPoly.const(variables, 1)
    for d in dens:
        denom = denom * d
    return RatFunc(det, denom)


def field_det(matrix):
    """Determinant over any exact field (Fraction, RatFunc) by elimination."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return matrix[0][0]
    if isinstance(matrix[0][0], RatFunc):
        return ratfunc_det(matrix)
    m = [list(r) for r in matrix]
    sign = 1
    det = Fraction(1)
    for k in range(n):
        piv = None
        for r in range(k, n):
            if m[r][k] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        det *= m[k][k]
        inv = Fraction(1, 1) / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] == 0:
                continue
            f = m[i][k] * inv
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det * sign

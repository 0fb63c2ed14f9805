"""Inverse-Pieri coefficients and the expansion theorems they drive: a single
Q (or P) as a theta-sum of one-row times shorter products, iterated into the
full generalized Jacobi-Trudi developments, with Hall-Littlewood, monomial
and Jack specializations.

The central coefficient C is evaluated along up to three independent routes
(determinant over the Vandermonde, subset sum, reduced support form), which
must agree; their agreement is the module's principal transcription check.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import (enumerate_theta_vectors, from_multiplicities,
                         is_partition, multiplicities, normalize, pad, weight,
                         ThetaMatrix)
from .ratfunc import (ALPHA, QT, RATIONAL, TONLY, ArithmeticDomainError,
                      MonomialArg, RatFunc, field_det, qpoch,
                      rising_factorial)
from .pieri import ConsistencyError
from .symfunc import FAMILIES, HALL_LITTLEWOOD, JACK, MACDONALD, SymFunc


# ---------------------------------------------------------------------------
# the C coefficient, Macdonald flavor (base A, deformation B)
# ---------------------------------------------------------------------------

def _ratio_prod(pairs):
    """prod num/den with separated accumulation, so a zero numerator cannot
    collide with a later zero denominator; raises only on a genuine pole."""
    num = 1
    den = 1
    for a, b in pairs:
        num = num * a
        den = den * b
    return num / den


def _c_route_det(theta, u, A, B):
    """Compact-form prefactor times det over the Vandermonde, with
    u_{n+1} = 1/B and v_k = A^theta_k u_k."""
    n = len(theta)
    uu = list(u) + [1 / B]
    v = [A ** theta[k] * u[k] for k in range(n)]
    pre = 1
    for i in range(n):
        for j in range(i + 1, n + 1):
            rat = uu[i] / uu[j]
            pre = pre * qpoch(A * rat / B, theta[i], base=A) \
                / qpoch(A * rat, theta[i], base=A)
    for i in range(n):
        for j in range(i, n):
            rat = uu[i] / v[j]
            pre = pre * qpoch(B * rat, theta[i], base=A) \
                / qpoch(rat, theta[i], base=A)
    rows = []
    for i in range(n):
        prod = _ratio_prod((uu[k] - v[i], B * uu[k] - v[i])
                           for k in range(n + 1))
        rows.append([v[i] ** (n - j) * (1 - B ** j * prod)
                     for j in range(1, n + 1)])
    det = field_det(rows) if n else 1
    vand = 1
    for i in range(n):
        for j in range(i + 1, n):
            vand = vand * (v[i] - v[j])
    return pre * det / vand


def _c_route_subset(theta, u, A, B):
    """Four-ratio prefactor times the division-light subset sum for the
    determinant factor, restricted to subsets of the support of theta."""
    n = len(theta)
    uu = list(u) + [1 / B]
    v = [A ** theta[k] * u[k] for k in range(n)]
    pre = 1
    tot_sup = [k for k in range(n) if theta[k]]
    for k in range(n):
        pre = pre * B ** theta[k] * qpoch(A / B, theta[k], base=A) \
            / qpoch(A, theta[k], base=A)
        pre = pre * qpoch(A * u[k], theta[k], base=A) \
            / qpoch(A * B * u[k], theta[k], base=A)
    for i in range(n):
        for j in range(i + 1, n):
            rat = u[i] / u[j]
            pre = pre * qpoch(A * rat / B, theta[i], base=A) \
                / qpoch(A * rat, theta[i], base=A)
            pre = pre * qpoch(B * rat / (A ** theta[j]), theta[i], base=A) \
                / qpoch(rat / (A ** theta[j]), theta[i], base=A)
    total = 0
    for K in _subsets(tot_sup):
        kset = set(K)
        pairs = []
        for k in K:
            for j in range(n):
                if j in kset:
                    continue
                pairs.append((v[j] - v[k] / B, v[j] - v[k]))
            for i in range(n + 1):
                pairs.append((uu[i] - v[k], uu[i] - v[k] / B))
        term = (-1) ** len(K) * (1 / B) ** (len(K) * (len(K) + 1) // 2) \
            * _ratio_prod(pairs)
        total = total + term
    return pre * total


def _c_route_support(theta, u, A, B):
    """Reduced form supported on T = {k : theta_k != 0}: shifted one-row
    factors times the subset sum F over subsets of T."""
    n = len(theta)
    v = [A ** theta[k] * u[k] for k in range(n)]
    T = [k for k in range(n) if theta[k]]
    pre = 1
    for k in T:
        pre = pre * B ** (theta[k] - 1) \
            * qpoch(A / B, theta[k] - 1, base=A) \
            / qpoch(A, theta[k] - 1, base=A)
        pre = pre * qpoch(A * u[k], theta[k], base=A) \
            / qpoch(A * B * u[k], theta[k], base=A)
    for i in range(n):
        for j in range(i + 1, n):
            rat = u[i] / u[j]
            pre = pre * qpoch(A * rat / B, theta[i], base=A) \
                / qpoch(A * rat, theta[i], base=A)
            pre = pre * qpoch(B * rat / (A ** theta[j]), theta[i], base=A) \
                / qpoch(rat / (A ** theta[j]), theta[i], base=A)
    F = 0
    for K in _subsets(T):
        kset = set(K)
        pairs = []
        for j in T:
            if j in kset:
                continue
            pairs.append((B - A ** theta[j], 1 - A ** theta[j]))
        for k in K:
            for j in T:
                if j in kset:
                    continue
                pairs.append((v[j] - v[k] / B, v[j] - v[k]))
        for k in K:
            pairs.append((1 - B * v[k], 1 - v[k]))
            for i in T:
                if i != k:
                    pairs.append((u[i] - v[k], u[i] - v[k] / B))
        term = (-1) ** len(K) * (1 / B) ** (len(K) * (len(K) - 1) // 2) \
            * _ratio_prod(pairs)
        F = F + term
    return pre * F


def _subsets(items):
    out = [()]
    for x in items:
        out.extend([s + (x,) for s in out])
    return out


def c_macdonald_routes(theta, u, A, B):
    """All routes that evaluate without hitting a pole.

    When every display form degenerates (a removable singularity of the
    instantiation, possible for integer-sequence arguments), the coefficient
    is recovered along an auxiliary curve: scale u_i by z^i, evaluate over
    the extended field, reduce, and set z = 1.  A pole surviving reduction
    is genuine and propagates.
    """
    values = []
    for route in (_c_route_det, _c_route_subset, _c_route_support):
        try:
            values.append(route(theta, u, A, B))
        except ZeroDivisionError:
            pass
    if not values:
        values = _c_z_fallback(theta, u, A, B)
    return values


_ZVAR = "z"


def _lift_with_z(r):
    variables = r.vars + (_ZVAR,)
    num = MultiPoly(variables, {e + (0,): c for e, c in r.num.terms.items()},
                    _normalized=True)
    den = MultiPoly(variables, {e + (0,): c for e, c in r.den.terms.items()},
                    _normalized=True)
    return RatFunc(num, den, _reduced=True)


def _c_z_fallback(theta, u, A, B):
    z = RatFunc.gen(A.vars + (_ZVAR,), _ZVAR)
    uz = [_lift_with_z(x) * z ** (i + 1) for i, x in enumerate(u)]
    Az = _lift_with_z(A)
    Bz = _lift_with_z(B)
    out = []
    for route in (_c_route_det, _c_route_subset):
        val = route(theta, uz, Az, Bz)
        out.append(val.substitute({_ZVAR: 1}, A.vars))
    return out


# ---------------------------------------------------------------------------
# Jack flavor
# ---------------------------------------------------------------------------

def _c_jack_det(theta, u, a):
    n = len(theta)
    uu = list(u) + [-a]
    v = [u[k] + theta[k] for k in range(n)]
    pre = 1
    for i in range(n):
        for j in range(i + 1, n + 1):
            pre = pre * rising_factorial(uu[i] - uu[j] + 1 - a, theta[i]) \
                / rising_factorial(uu[i] - uu[j] + 1, theta[i])
    for i in range(n):
        for j in range(i, n):
            pre = pre * rising_factorial(uu[i] - v[j] + a, theta[i]) \
                / rising_factorial(uu[i] - v[j], theta[i])
    rows = []
    for i in range(n):
        prod = _ratio_prod((v[i] - uu[k], v[i] - uu[k] - a)
                           for k in range(n + 1))
        rows.append([v[i] ** (n - j) - (v[i] - a) ** (n - j) * prod
                     for j in range(1, n + 1)])
    det = field_det(rows) if n else 1
    vand = 1
    for i in range(n):
        for j in range(i + 1, n):
            vand = vand * (v[i] - v[j])
    return pre * det / vand


def _c_jack_subset(theta, u, a):
    n = len(theta)
    uu = list(u) + [-a]
    v = [u[k] + theta[k] for k in range(n)]
    pre = 1
    for i in range(n):
        for j in range(i + 1, n + 1):
            pre = pre * rising_factorial(uu[i] - uu[j] + 1 - a, theta[i]) \
                / rising_factorial(uu[i] - uu[j] + 1, theta[i])
    for i in range(n):
        for j in range(i, n):
            pre = pre * rising_factorial(uu[i] - v[j] + a, theta[i]) \
                / rising_factorial(uu[i] - v[j], theta[i])
    T = [k for k in range(n) if theta[k]]
    total = 0
    for K in _subsets(T):
        kset = set(K)
        pairs = []
        for k in K:
            for j in range(n):
                if j not in kset:
                    pairs.append((v[k] - v[j] - a, v[k] - v[j]))
            for i in range(n + 1):
                pairs.append((v[k] - uu[i], v[k] - uu[i] - a))
        total = total + (-1) ** len(K) * _ratio_prod(pairs)
    return pre * total


def c_jack_routes(theta, u, a):
    values = []
    for route in (_c_jack_det, _c_jack_subset):
        try:
            values.append(route(theta, u, a))
        except ZeroDivisionError:
            pass
    if not values:
        # additive auxiliary shift u_i + (i+1) z, evaluated at z = 0
        z = RatFunc.gen(a.vars + (_ZVAR,), _ZVAR)
        uz = [_lift_with_z(x) + z * (i + 1) for i, x in enumerate(u)]
        az = _lift_with_z(a)
        for route in (_c_jack_det, _c_jack_subset):
            val = route(theta, uz, az)
            values.append(val.substitute({_ZVAR: 0}, a.vars))
    return values


# ---------------------------------------------------------------------------
# Hall-Littlewood and monomial flavors (multiplicity arguments)
# ---------------------------------------------------------------------------

def t_binomial(r, s):
    """Gaussian binomial [r choose s]_t = (t^(r-s+1); t)_s / (t; t)_s."""
    t = RatFunc.gen(TONLY, "t")
    if s < 0 or r < s:
        return RatFunc.zero(TONLY)
    num = qpoch(RatFunc.monomial(TONLY, (r - s + 1,)), s, base=t)
    den = qpoch(t, s, base=t)
    return num / den


def c_hl(theta, mvec):
    """C^(t) of the Hall-Littlewood inversion: signed t-binomial product
    times 1 + sum over k of prod_{j>=k} (t^theta_j - 1)/(1 - t^(-m_j-theta_j));
    a product term vanishes as soon as some theta_j in it is zero."""
    n = len(theta)
    if len(mvec) != n:
        raise ValueError("theta and m must have the same length")
    t = RatFunc.gen(TONLY, "t")
    sign = (-1) ** sum(theta)
    out = RatFunc.const(TONLY, sign)
    for k in range(n):
        out = out * t ** (theta[k] * (theta[k] - 1) // 2)
        out = out * t_binomial(mvec[k] + theta[k], theta[k])
    tail = RatFunc.one(TONLY)
    for k in range(n):
        if all(theta[j] for j in range(k, n)):
            prod = RatFunc.one(TONLY)
            for j in range(k, n):
                prod = prod * (t ** theta[j] - 1) \
                    / (1 - t ** (-(mvec[j] + theta[j])))
            tail = tail + prod
    return out * tail


def c_mono(theta, mvec):
    """Monomial specialization (t = 1): signed binomial product times
    1 + sum of prod theta_j/(m_j + theta_j), same vanishing convention."""
    n = len(theta)
    if len(mvec) != n:
        raise ValueError("theta and m must have the same length")
    out = Fraction((-1) ** sum(theta))
    for k in range(n):
        out *= math.comb(mvec[k] + theta[k], theta[k])
    tail = Fraction(1)
    for k in range(n):
        if all(theta[j] for j in range(k, n)):
            prod = Fraction(1)
            for j in range(k, n):
                prod *= Fraction(theta[j], mvec[j] + theta[j])
            tail += prod
    return out * tail


# ---------------------------------------------------------------------------
# public coefficient entry point
# ---------------------------------------------------------------------------

def c_coeff(flavor, theta, args, aparam=None):
    """The inversion coefficient in the requested flavor.

    qt/tq take a u-vector (MonomialArg or RatFunc over Q(q,t)); hl and mono
    take a multiplicity vector; jack takes a u-vector over Q(a) plus the
    parameter value (a or 1/a).  For qt/tq all evaluable routes must agree.
    """
    theta = tuple(int(x) for x in theta)
    if flavor in ("qt", "tq"):
        u = [x.to_ratfunc(QT) if isinstance(x, MonomialArg) else x
             for x in args]
        q = RatFunc.gen(QT, "q")
        t = RatFunc.gen(QT, "t")
        A, B = (q, t) if flavor == "qt" else (t, q)
        values = c_macdonald_routes(theta, u, A, B)
        for v in values[1:]:
            if v != values[0]:
                raise ConsistencyError(
                    "C-coefficient routes disagree at theta=%r" % (theta,))
        return values[0]
    if flavor == "jack":
        if aparam is None:
            raise ValueError("jack flavor needs the parameter value")
        u = [RatFunc.convert(x, ALPHA) for x in args]
        a = RatFunc.convert(aparam, ALPHA)
        values = c_jack_routes(theta, u, a)
        for v in values[1:]:
            if v != values[0]:
                raise ConsistencyError(
                    "Jack C routes disagree at theta=%r" % (theta,))
        return values[0]
    if flavor == "hl":
        return c_hl(theta, tuple(args))
    if flavor == "mono":
        return RatFunc.const(RATIONAL, c_mono(theta, tuple(args)))
    raise ValueError("unknown flavor %r" % flavor)


def schur_c_check(theta, u):
    """C at q = t: must be (-1)^|theta| when all entries are 0 or 1 and
    vanish otherwise; returns the specialized value after checking."""
    val = c_coeff("qt", theta, u)
    spec = val.substitute({"q": RatFunc.gen(TONLY, "t")}, TONLY)
    if all(x in (0, 1) for x in theta):
        expect = RatFunc.const(TONLY, (-1) ** sum(theta))
    else:
        expect = RatFunc.zero(TONLY)
    if spec != expect:
        raise ConsistencyError(
            "Schur specialization violates the 0/1 support law at %r"
            % (theta,))
    return spec


# ---------------------------------------------------------------------------
# single inversion steps
# ---------------------------------------------------------------------------

def macdonald_u_args(seq):
    """u_k = q^(seq_k - seq_{n+1}) t^(n-k) for the length-(n+1) sequence."""
    n = len(seq) - 1
    return [MonomialArg(seq[k] - seq[n], n - 1 - k) for k in range(n)]


def dual_u_args(mvec):
    """u_k = q^(n-k) t^(M_k) with M_k = m_k + ... + m_n (m has length n+1)."""
    n = len(mvec) - 1
    out = []
    for k in range(1, n + 1):
        out.append(MonomialArg(n - k, sum(mvec[k - 1:n])))
    return out


def invert_step(lam, side):
    """One application of the inversion: expand the object indexed by lam
    into terms (coefficient, one-row index, shorter index).

    Sides: "Qg" (Macdonald Q into g times shorter Q; integer sequences
    allowed), "Pe" (Macdonald P into e times shorter P, via multiplicities),
    "hl" and "mono" (same shape with specialized coefficients), "jackQ" and
    "jackP" (Jack parameter field).  Returns [(coeff, s, index)] where s is
    the one-row/elementary index and index the shorter object's indexing
    data (a sequence for Q-sides, a multiplicity vector for P-sides).
    """
    if side in ("Qg", "jackQ"):
        seq = tuple(int(x) for x in lam)
        if not seq:
            return []
        n = len(seq) - 1
        last = seq[n]
        if last < 0:
            return []
        out = []
        for theta in enumerate_theta_vectors(n, last):
            if side == "Qg":
                coeff = c_coeff("qt", theta, macdonald_u_args(seq))
            else:
                a = RatFunc.gen(ALPHA, "a")
                u = [RatFunc.const(ALPHA, seq[k] - seq[n])
                     + (n - 1 - k) / a for k in range(n)]
                coeff = c_coeff("jack", theta, u, aparam=1 / a)
            if coeff.is_zero():
                continue
            mu = tuple(seq[k] + theta[k] for k in range(n))
            out.append((coeff, last - sum(theta), mu))
        return out
    if side in ("Pe", "hl", "mono", "jackP"):
        mvec = tuple(int(x) for x in lam)
        if not mvec:
            return []
        n = len(mvec) - 1
        top = mvec[n]
        out = []
        for theta in enumerate_theta_vectors(n, top):
            if side == "Pe":
                coeff = c_coeff("tq", theta, dual_u_args(mvec))
            elif side == "hl":
                coeff = c_coeff("hl", theta, mvec[:n])
            elif side == "mono":
                coeff = c_coeff("mono", theta, mvec[:n])
            else:
                a = RatFunc.gen(ALPHA, "a")
                u = [RatFunc.const(ALPHA, sum(mvec[k:n])) + (n - 1 - k) * a
                     for k in range(n)]
                coeff = c_coeff("jack", theta, u, aparam=a)
            if coeff.is_zero():
                continue
            new_m = list(mvec[:n])
            for i in range(n - 1):
                new_m[i] = mvec[i] + theta[i] - theta[i + 1]
            if n >= 1:
                new_m[n - 1] = mvec[n - 1] + mvec[n] + theta[n - 1]
            out.append((coeff, top - sum(theta), tuple(new_m)))
        return out
    raise ValueError("unknown side %r" % side)


def invert_step_partition(lam, side, nparts=None):
    """invert_step with partition input; for P-sides lam is converted to the
    multiplicity vector of length max-part (or nparts)."""
    lam = normalize(lam)
    if side in ("Qg", "jackQ"):
        return invert_step(lam, side)
    top = nparts if nparts is not None else (lam[0] if lam else 1)
    return invert_step(multiplicities(lam, top), side)


# ---------------------------------------------------------------------------
# full expansions over theta matrices
# ---------------------------------------------------------------------------

class FullExpansion:
    """Complete development: terms (theta matrix, coefficient, index vector).

    For the g-target the index vector collects one-row indices produced by
    the inversion, largest column first, matching
    lam_k + sum_{j>k} theta_kj - sum_{j<k} theta_jk.
    """

    __slots__ = ("lam", "target", "family", "terms")

    def __init__(self, lam, target, family, terms):
        self.lam = lam
        self.target = target
        self.family = family
        self.terms = terms

    def to_symfunc(self):
        basis = "g" if self.target == "gprod" else "e"
        coeffs = {}
        for _, coeff, index in self.terms:
            key = normalize(tuple(sorted((x for x in index if x),
                                         reverse=True)))
            if any(x < 0 for x in index):
                continue
            s = coeffs.get(key)
            s = coeff if s is None else s + coeff
            if s.is_zero():
                coeffs.pop(key, None)
            else:
                coeffs[key] = s
        deg = sum(x for x in self.lam)
        fam = FAMILIES[self.family]
        return SymFunc(basis, deg, fam, coeffs, _clean=True)

    def to_json(self):
        out = []
        for theta, coeff, index in sorted(
                self.terms, key=lambda t: sorted(t[0].entries.items())):
            out.append({"theta": theta.to_json(),
                        "coeff": coeff.to_json(),
                        "index": list(index)})
        return {"lambda": list(self.lam), "target": self.target,
                "family": self.family, "terms": out}


def expand_full(lam, target, family="macdonald"):
    """Iterate the inversion into the complete development of Q_lam over
    g-products (target "gprod") or P_lam over e-products (target "eprod"),
    indexed by strictly upper triangular theta matrices.

    Families: macdonald (default), jack; hl and mono for the eprod target.
    """
    lam = normalize(lam)
    if target == "gprod":
        side = "Qg" if family == "macdonald" else "jackQ"
        if family not in ("macdonald", "jack"):
            raise ValueError("g-target needs the macdonald or jack family")
        start = lam if lam else (0,)
        famtag = family
    elif target == "eprod":
        side = {"macdonald": "Pe", "jack": "jackP", "hl": "hl",
                "mono": "mono"}[family]
        start = multiplicities(lam) if lam else (0,)
        famtag = {"Pe": "macdonald", "jackP": "jack", "hl": "hl",
                  "mono": "mono"}[side]
    else:
        raise ValueError("target must be 'gprod' or 'eprod'")
    npos = len(start)
    memo = {}

    def rec(seq):
        seq = tuple(seq)
        if seq in memo:
            return memo[seq]
        m = len(seq)
        if m == 0:
            out = [({}, None, ())]
        elif m == 1:
            one = _family_one(famtag)
            if target == "gprod":
                out = [({}, one, (seq[0],))]
            else:
                out = [({}, one, (seq[0],))]
        else:
            out = []
            for coeff, s, shorter in invert_step(seq, side):
                for entries, subcoeff, indices in rec(shorter):
                    new_entries = dict(entries)
                    theta_col = _step_theta(seq, s, shorter, target)
                    for i, v in enumerate(theta_col, start=1):
                        if v:
                            new_entries[(i, m)] = v
                    total = coeff if subcoeff is None else coeff * subcoeff
                    out.append((new_entries, total, indices + (s,)))
        memo[seq] = out
        return out

    terms = []
    for entries, coeff, indices in rec(start):
        if coeff is None or coeff.is_zero():
            continue
        theta = ThetaMatrix(npos, entries)
        terms.append((theta, coeff, indices))
    return FullExpansion(lam, target, famtag, terms)


def _family_one(famtag):
    return FAMILIES[famtag].one()


def _step_theta(seq, s, shorter, target):
    """Recover the theta column of an inversion step from its output."""
    n = len(seq) - 1
    if target == "gprod":
        return tuple(shorter[i] - seq[i] for i in range(n))
    # eprod: shorter is the new multiplicity vector; theta_n = last change
    theta = [0] * n
    if n >= 1:
        theta[n - 1] = shorter[n - 1] - seq[n - 1] - seq[n]
        for i in range(n - 2, -1, -1):
            theta[i] = shorter[i] - seq[i] + theta[i + 1]
    return tuple(theta)


# ---------------------------------------------------------------------------
# Macdonald Q of an arbitrary integer sequence, and the subset-sum lemma
# ---------------------------------------------------------------------------

_q_seq_memo = {}


def macdonald_Q_seq(seq):
    """Q of an arbitrary integer sequence, defined by recursive inversion
    (peel the last entry); returns a g-basis SymFunc over Q(q,t).  Vanishes
    identically when seq is not a partition."""
    seq = tuple(int(x) for x in seq)
    got = _q_seq_memo.get(seq)
    if got is not None:
        return got
    fam = MACDONALD
    if len(seq) == 0:
        out = SymFunc.constant(1, fam, basis="g")
    elif len(seq) == 1:
        k = seq[0]
        if k < 0:
            out = SymFunc("g", 0, fam)
        elif k == 0:
            out = SymFunc.constant(1, fam, basis="g")
        else:
            out = SymFunc.basis_element("g", (k,), fam)
    else:
        coeffs = {}
        for coeff, s, mu in invert_step(seq, "Qg"):
            sub = macdonald_Q_seq(mu)
            for key, val in sub.coeffs.items():
                full = normalize(tuple(sorted(key + ((s,) if s else ()),
                                              reverse=True)))
                term = coeff * val
                acc = coeffs.get(full)
                acc = term if acc is None else acc + term
                if acc.is_zero():
                    coeffs.pop(full, None)
                else:
                    coeffs[full] = acc
        deg = max(sum(seq), 0)
        out = SymFunc("g", deg, fam, coeffs, _clean=True)
    _q_seq_memo[seq] = out
    return out


def fn_gn(avals, bvals):
    """The two closed forms of the subset-sum identity: F via subsets of
    {1..n}, G via the telescoping sum; they must be equal.

    avals has length n+1 and bvals length n; raises on degenerate
    parameters (vanishing denominators)."""
    a = [Fraction(x) for x in avals]
    b = [Fraction(x) for x in bvals]
    n = len(b)
    if len(a) != n + 1:
        raise ValueError("need n+1 a-values and n b-values")
    try:
        F = Fraction(0)
        for K in _subsets(tuple(range(1, n + 1))):
            kset = set(K)
            term = Fraction(1)
            for k in K:
                if k != n and (k + 1) not in kset:
                    term *= (b[k] - b[k - 1]) / b[k]
            for i in K:
                term *= a[i] / b[i - 1] * (a[i - 1] - b[i - 1]) / (a[i] - b[i - 1])
            F += term
        G = Fraction(0)
        for k in range(1, n + 2):
            term = Fraction(1)
            for j in range(1, k):
                term *= a[j - 1] / b[j - 1]
            for j in range(k, n + 1):
                term *= (a[j - 1] - b[j - 1]) / (a[j] - b[j - 1])
            G += term
    except ZeroDivisionError as exc:
        raise ValueError("degenerate parameters: %s" % exc)
    return F, G

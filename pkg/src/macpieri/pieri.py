"""The analytic Pieri expansion: one-row multiplication coefficients in two
equivalent product forms, the combinatorial horizontal-strip coefficient they
must reproduce, and the Hall-Littlewood analytic Pieri pair on arbitrary
integer sequences.

All coefficient functions are duck-typed over the field elements supplied
for q, t and the arguments, so the same code runs symbolically over Q(q,t)
and numerically over Q for window checks.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import enumerate_theta_vectors, is_partition, normalize, pad
from .ratfunc import (QT, TONLY, ArithmeticDomainError, MonomialArg, RatFunc,
                      qpoch)
from .symfunc import HALL_LITTLEWOOD


class ConsistencyError(AssertionError):
    """Two formula routes for the same quantity disagreed."""


def _as_field(u, variables):
    if isinstance(u, MonomialArg):
        return u.to_ratfunc(variables)
    return u


def pieri_u_args(lam, r, n):
    """u_k = q^(lambda_k - r) t^(n-k) for 1 <= k <= n, lambda padded to n."""
    lamp = pad(normalize(lam), n)
    return [MonomialArg(lamp[k - 1] - r, n - k) for k in range(1, n + 1)]


def d_coeff_value(theta, u, q, t):
    """Pieri coefficient in the four-ratio form; generic field elements."""
    n = len(theta)
    tot = sum(theta)
    out = 1
    for k in range(n):
        uk = u[k]
        out = out * qpoch(t, theta[k], base=q) / qpoch(q, theta[k], base=q)
        out = out * qpoch(q ** (tot + 1) * uk, theta[k], base=q) \
            / qpoch(q ** tot * t * uk, theta[k], base=q)
    for i in range(n):
        for j in range(i + 1, n):
            rat = u[i] / u[j]
            out = out * qpoch(t * rat, theta[i], base=q) \
                / qpoch(q * rat, theta[i], base=q)
            out = out * qpoch(q ** (1 - theta[j]) * rat / t, theta[i], base=q) \
                / qpoch(q ** (-theta[j]) * rat, theta[i], base=q)
    return out


def d_coeff_compact_value(theta, u, q, t):
    """Same coefficient in the compact form with u_{n+1} = 1/t,
    theta_{n+1} = -|theta| and v_k = q^theta_k u_k."""
    n = len(theta)
    uu = list(u) + [1 / t]
    th = list(theta) + [-sum(theta)]
    v = [q ** th[k] * uu[k] for k in range(n + 1)]
    out = 1
    for i in range(n):
        for j in range(i, n):
            rat = uu[i] / uu[j]
            out = out * qpoch(t * rat, theta[i], base=q) \
                / qpoch(q * rat, theta[i], base=q)
    for i in range(n):
        for j in range(i + 1, n + 1):
            out = out * qpoch(q * uu[i] / (t * v[j]), theta[i], base=q) \
                / qpoch(uu[i] / v[j], theta[i], base=q)
    return out


def d_coeff(theta, u):
    """Pieri coefficient d_theta(u) over Q(q,t); u entries are MonomialArgs
    (or RatFuncs).  Both product forms are evaluated and must agree."""
    theta = tuple(int(x) for x in theta)
    if len(theta) != len(u):
        raise ValueError("theta and u must have the same length")
    q = RatFunc.gen(QT, "q")
    t = RatFunc.gen(QT, "t")
    uu = [_as_field(x, QT) for x in u]
    first = d_coeff_value(theta, uu, q, t)
    second = d_coeff_compact_value(theta, uu, q, t)
    if first != second:
        raise ConsistencyError(
            "Pieri coefficient forms disagree at theta=%r" % (theta,))
    return first


def psi_coeff(kappa, lam):
    """Horizontal-strip coefficient psi_{kappa/lam} with
    w_r(u) = (tu;q)_r / (qu;q)_r; zero when kappa/lam is not a horizontal
    strip."""
    kappa = normalize(kappa)
    lam = normalize(lam)
    n = max(len(lam), len(kappa) - 1, 1)
    kp = pad(kappa, n + 1)
    lp = pad(lam, n)
    for i in range(n + 1):
        ki = kp[i]
        li = lp[i] if i < n else 0
        if ki < li:
            return RatFunc.zero(QT)
        if i > 0 and kp[i] > lp[i - 1]:
            return RatFunc.zero(QT)
    out = RatFunc.one(QT)
    for i in range(1, n + 1):
        r = kp[i - 1] - lp[i - 1]
        if r == 0:
            continue
        for j in range(i, n + 1):
            top = _w_ratio(r, lp[i - 1] - lp[j - 1], j - i)
            bot = _w_ratio(r, lp[i - 1] - kp[j], j - i)
            out = out * top / bot
    return out


def _w_ratio(r, qexp, texp):
    """w_r(q^qexp t^texp) = (t u; q)_r / (q u; q)_r."""
    num = qpoch(MonomialArg(qexp, texp + 1), r)
    den = qpoch(MonomialArg(qexp + 1, texp), r)
    return num / den


class PieriExpansion:
    """Right-hand side of a one-row Pieri product: terms (coeff, kappa)."""

    __slots__ = ("lam", "r", "terms", "raw")

    def __init__(self, lam, r, terms, raw):
        self.lam = lam
        self.r = r
        self.terms = terms
        self.raw = raw

    def to_json(self):
        return {"lambda": list(self.lam), "r": self.r,
                "terms": [{"kappa": list(k), "coeff": c.to_json()}
                          for c, k in self.terms]}


def pieri_expand(lam, r, raw=False, length=None):
    """Expansion of Q_lam * Q_(r) over kappa = (lam + theta, r - |theta|).

    Terms with a vanishing coefficient are dropped; with raw=False,
    non-partition target sequences are dropped as well (their Q vanishes by
    convention), otherwise they are kept verbatim."""
    lam = normalize(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = length if length is not None else max(len(lam), 1)
    if len(lam) > n:
        raise ValueError("length shorter than the partition")
    u = pieri_u_args(lam, r, n)
    lamp = pad(lam, n)
    terms = []
    for theta in enumerate_theta_vectors(n, r):
        coeff = d_coeff(theta, u)
        if coeff.is_zero():
            continue
        kappa = tuple(lamp[i] + theta[i] for i in range(n)) + (r - sum(theta),)
        if not raw and not is_partition(kappa):
            continue
        terms.append((coeff, kappa if raw else normalize(kappa)))
    return PieriExpansion(lam, r, terms, raw)


# ---------------------------------------------------------------------------
# Hall-Littlewood analytic Pieri pair on integer sequences
# ---------------------------------------------------------------------------

def hl_pieri_expand(lam, r):
    """Q_(lam) Q_(r) = sum over all theta of (1-t)^{#nonzero theta} Q_kappa,
    target sequences kept raw (non-partitions included)."""
    lam = tuple(int(x) for x in lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = len(lam)
    t = RatFunc.gen(TONLY, "t")
    terms = []
    for theta in enumerate_theta_vectors(n, r):
        nz = sum(1 for x in theta if x)
        coeff = (1 - t) ** nz
        kappa = tuple(lam[i] + theta[i] for i in range(n)) + (r - sum(theta),)
        terms.append((coeff, kappa))
    return PieriExpansion(lam, r, terms, True)


def hl_inverse_step(seq):
    """The inverse relation: Q_(seq) = sum over theta of
    t^|theta| (1-1/t)^{#nonzero} Q_(last - |theta|) Q_(head + theta).

    Returns [(coeff, s, mu)] with s the one-row index."""
    seq = tuple(int(x) for x in seq)
    if not seq:
        return [(RatFunc.one(TONLY), None, ())]
    n = len(seq) - 1
    last = seq[n]
    t = RatFunc.gen(TONLY, "t")
    out = []
    if last < 0:
        return out
    for theta in enumerate_theta_vectors(n, last):
        nz = sum(1 for x in theta if x)
        tot = sum(theta)
        coeff = t ** tot * (1 - 1 / t) ** nz
        mu = tuple(seq[i] + theta[i] for i in range(n))
        out.append((coeff, last - tot, mu))
    return out


def hl_pair_entry(side, row, col):
    """Entries of the Hall-Littlewood Pieri pair as infinite n-dimensional
    matrices over Q(t): f uses (1-t)^{#nonzero}, g uses
    t^|diff| (1-1/t)^{#nonzero}; both depend only on row - col."""
    t = RatFunc.gen(TONLY, "t")
    diff = tuple(m - k for m, k in zip(row, col))
    if any(x < 0 for x in diff):
        return RatFunc.zero(TONLY)
    nz = sum(1 for x in diff if x)
    if side == "f":
        return (1 - t) ** nz
    if side == "g":
        return t ** sum(diff) * (1 - 1 / t) ** nz
    raise ValueError("side must be 'f' or 'g'")

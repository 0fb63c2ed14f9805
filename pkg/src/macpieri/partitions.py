"""Partitions, integer sequences, compositions and theta indices.

Partitions are plain tuples of weakly decreasing positive integers (the
canonical form strips trailing zeros); enumeration is reverse-lexicographic,
which linearly extends dominance.  Theta matrices are strictly upper
triangular nonnegative integer matrices stored sparsely.
"""

from __future__ import annotations

import math


def normalize(parts):
    """Canonical partition tuple: weakly decreasing, trailing zeros removed."""
    parts = tuple(int(p) for p in parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("not weakly decreasing: %r" % (parts,))
    if any(p < 0 for p in parts):
        raise ValueError("negative part: %r" % (parts,))
    n = len(parts)
    while n and parts[n - 1] == 0:
        n -= 1
    return parts[:n]


def is_partition(seq):
    """True when seq is weakly decreasing with nonnegative entries."""
    seq = tuple(seq)
    return all(x >= 0 for x in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def weight(parts):
    return sum(parts)


def length(parts):
    return sum(1 for p in parts if p > 0)


def pad(parts, n):
    """Display form of a partition padded with zeros to length n."""
    parts = tuple(parts)
    if len(parts) > n and any(p > 0 for p in parts[n:]):
        raise ValueError("partition longer than requested length")
    return parts[:n] + (0,) * (n - len(parts))


def multiplicity(parts, i):
    """m_i: number of parts equal to i (i >= 1)."""
    return sum(1 for p in parts if p == i)


def multiplicities(parts, maxpart=None):
    """Multiplicity vector (m_1, ..., m_maxpart)."""
    parts = normalize(parts)
    top = maxpart if maxpart is not None else (parts[0] if parts else 0)
    if parts and parts[0] > top:
        raise ValueError("part exceeds requested maximum")
    out = [0] * top
    for p in parts:
        out[p - 1] += 1
    return tuple(out)


def from_multiplicities(mults):
    """Partition (1^m1, 2^m2, ...) from its multiplicity vector."""
    parts = []
    for i in range(len(mults), 0, -1):
        parts.extend([i] * mults[i - 1])
    return tuple(parts)


def conjugate(parts):
    """Conjugate partition: column lengths of the diagram."""
    parts = normalize(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i)
                 for i in range(1, parts[0] + 1))


def z_factor(parts):
    """z_lambda = prod_i i^{m_i} m_i!"""
    parts = normalize(parts)
    out = 1
    for i in set(parts):
        m = multiplicity(parts, i)
        out *= i ** m * math.factorial(m)
    return out


def dominates(lam, mu):
    """True when lam >= mu in dominance order (same weight assumed)."""
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def enumerate_partitions(n, max_len=None, max_part=None):
    """All partitions of n within the bounds, in reverse-lexicographic
    (descending) order."""
    if n < 0:
        raise ValueError("negative weight")
    out = []
    first = min(n, max_part) if max_part is not None else n
    limit = max_len if max_len is not None else n

    def rec(remaining, largest, slots, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    rec(n, first, limit, [])
    if n == 0:
        return [()]
    return out


def partitions_up_to(n, max_len=None, max_part=None):
    """Partitions of every weight 0..n, grouped by weight."""
    return {w: enumerate_partitions(w, max_len, max_part) for w in range(n + 1)}


def enumerate_compositions(n):
    """All 2^(n-1) compositions of n >= 1, lexicographic with largest first:
    (3), (2,1), (1,2), (1,1,1)."""
    if n < 1:
        raise ValueError("compositions need n >= 1")
    out = []

    def rec(remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for c in range(remaining, 0, -1):
            prefix.append(c)
            rec(remaining - c, prefix)
            prefix.pop()

    rec(n, [])
    return out


def partial_sums(comp):
    """[c_i] = c_1 + ... + c_i, with [c_0] = 0 prepended."""
    out = [0]
    for c in comp:
        out.append(out[-1] + c)
    return out


def enumerate_theta_vectors(n, total):
    """All theta in N^n with |theta| <= total, ascending by |theta| then lex."""
    out = []
    for s in range(total + 1):
        out.extend(_vectors_with_sum(n, s))
    return out


def _vectors_with_sum(n, s):
    if n == 0:
        return [()] if s == 0 else []
    out = []
    for first in range(s + 1):
        for rest in _vectors_with_sum(n - 1, s - first):
            out.append((first,) + rest)
    return out


class ThetaMatrix:
    """Strictly upper triangular n x n matrix of nonnegative integers."""

    __slots__ = ("n", "entries")

    def __init__(self, n, entries=None):
        self.n = n
        self.entries = {}
        if entries:
            for (i, j), v in dict(entries).items():
                if not (1 <= i < j <= n):
                    raise ValueError("entry (%d,%d) not strictly upper" % (i, j))
                if v < 0:
                    raise ValueError("negative entry")
                if v:
                    self.entries[(i, j)] = int(v)

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def with_column(self, j, column):
        """New matrix with column j replaced by the given values
        (column[i-1] at row i, 1 <= i < j)."""
        entries = {k: v for k, v in self.entries.items() if k[1] != j}
        for i, v in enumerate(column, start=1):
            if v:
                entries[(i, j)] = v
        return ThetaMatrix(self.n, entries)

    def column(self, j):
        return tuple(self.get(i, j) for i in range(1, j))

    def __eq__(self, other):
        return (isinstance(other, ThetaMatrix) and self.n == other.n
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self):
        return "ThetaMatrix(%d, %r)" % (self.n, self.entries)

    def to_json(self):
        items = sorted(self.entries.items())
        return {"n": self.n, "entries": [[i, j, v] for (i, j), v in items]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["n"], {(i, j): v for i, j, v in obj["entries"]})


def raised_sequence(seq, theta):
    """Apply the raising operators encoded by a ThetaMatrix to a sequence:
    entry i gains the row sums and loses the column sums."""
    n = theta.n
    if len(seq) != n:
        raise ValueError("sequence length must match the matrix size")
    out = list(seq)
    for (i, j), v in theta.entries.items():
        out[i - 1] += v
        out[j - 1] -= v
    return tuple(out)

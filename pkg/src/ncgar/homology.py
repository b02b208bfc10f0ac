"""Exact integral linear algebra: Smith normal form and homology of
finite chain complexes.

Everything is plain Python integers; intermediate entries in a Smith
reduction can blow up well past machine ints, so arbitrary precision is
mandatory.  Pivots are chosen by minimal absolute value to limit growth.
Matrices at the scales used here stay small enough that asymptotics are
irrelevant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class NotAChainComplex(ValueError):
    """Consecutive boundary matrices fail shape or d*d == 0."""


@dataclass
class IntegerMatrix:
    rows: int
    cols: int
    entries: list[list[int]]

    def __post_init__(self):
        if len(self.entries) != self.rows or \
                any(len(r) != self.cols for r in self.entries):
            raise ValueError("inconsistent matrix dimensions")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, entries: list[list[int]]) -> "IntegerMatrix":
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        return cls(rows, cols, [list(r) for r in entries])

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = IntegerMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            for k in range(self.cols):
                a = row[k]
                if a:
                    brow = other.entries[k]
                    orow = out.entries[i]
                    for j in range(other.cols):
                        orow[j] += a * brow[j]
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """Invariant factors d1 | d2 | ... | dr of ``m``, all >= 1.

    The input is not modified.  Row/column operations are unimodular, so
    the returned factors match the input up to unimodular equivalence;
    the number of factors is the rank.
    """
    a = [row[:] for row in m.entries]
    rows, cols = m.rows, m.cols
    diag = []
    t = 0
    while t < rows and t < cols:
        piv = _min_pivot(a, rows, cols, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            again = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        at = a[t]
                        ai = a[i]
                        for j in range(t, cols):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        again = True
            if again:
                continue
            # clear row t
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        again = True
            if not again and all(a[i][t] == 0 for i in range(t + 1, rows)):
                break
        diag.append(abs(a[t][t]))
        t += 1
    # enforce the divisibility chain; diag(a, b) ~ diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = _gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return diag


def _min_pivot(a, rows, cols, t):
    best = None
    best_val = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = abs(row[j])
            if v and (best_val is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class HomologyGroup:
    betti: int
    torsion: list[int]

    def format(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts += [f"C{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    @property
    def trivial(self) -> bool:
        return self.betti == 0 and not self.torsion


def homology(boundaries: list[IntegerMatrix]) -> list[HomologyGroup]:
    """Homology of the chain complex with maps ``boundaries[k]`` sending
    degree k+1 to degree k; the degree-0 rank is read off the first
    matrix.  Raises NotAChainComplex unless consecutive maps compose to
    zero."""
    if not boundaries:
        raise NotAChainComplex("need at least one boundary matrix")
    dims = [boundaries[0].rows] + [b.cols for b in boundaries]
    for k, b in enumerate(boundaries):
        if b.rows != dims[k]:
            raise NotAChainComplex(
                f"boundary {k + 1} has {b.rows} rows, expected {dims[k]}")
    for k in range(len(boundaries) - 1):
        if not boundaries[k].matmul(boundaries[k + 1]).is_zero():
            raise NotAChainComplex(f"d{k + 1} o d{k + 2} != 0")
    factors = [smith_normal_form(b) for b in boundaries]
    ranks = [len(f) for f in factors] + [0]
    out = []
    for k in range(len(dims)):
        rank_in = ranks[k] if k < len(boundaries) else 0
        rank_out = ranks[k - 1] if k > 0 else 0
        betti = dims[k] - rank_in - rank_out
        torsion = sorted(d for d in factors[k][:] if d > 1) if k < len(boundaries) else []
        out.append(HomologyGroup(betti, torsion))
    return out


def euler_characteristic_of(groups: list[HomologyGroup]) -> int:
    return sum((-1) ** k * g.betti for k, g in enumerate(groups))


def summary_to_json(groups: list[HomologyGroup]) -> str:
    payload = {"H": [{"betti": g.betti, "torsion": list(g.torsion)} for g in groups]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def format_summary(groups: list[HomologyGroup]) -> str:
    return " ".join(f"H{k}={g.format()}" for k, g in enumerate(groups))

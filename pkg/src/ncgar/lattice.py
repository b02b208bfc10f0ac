"""The absolute (reflection) order on a finite Coxeter group and the
interval [identity, gamma] below a Coxeter element.

``u <= w`` holds exactly when the reflection lengths satisfy
``len(w) == len(u) + len(u^-1 w)``.  The interval below a Coxeter
element is a lattice; meets and joins here are found by exhaustive
bound scans over the interval, cached in full tables.  Interval sizes
are Catalan-scale, so nothing cleverer is warranted.

Down-sets and up-sets are kept as integer bitmasks over the member
list, which makes the bound scans, cover computation and the lattice
verification loops cheap.  Built lattices are immutable and the query
methods are pure reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .coxeter import CoxeterSystem, Element


class NotCoxeterElement(ValueError):
    """The requested top element is not conjugate to the standard
    product of the simple generators."""


class LatticeViolation(RuntimeError):
    """A member pair with no meet or join surfaced during construction.
    This must never happen for a genuine Coxeter-element interval."""


class NotConjugate(ValueError):
    """No conjugating element exists between the two given elements."""


def absolute_leq(sys: CoxeterSystem, u: Element, w: Element) -> bool:
    """Truth of the defining equation of the reflection order."""
    lt = sys.length_table
    return lt[w] == lt[u] + lt[sys.multiply(sys.inverse(u), w)]


class AbsolutePoset:
    """The whole group under the reflection order.  Not a lattice in
    general; kept around so the non-lattice counterexample on the full
    group can be demonstrated with the same verification routine."""

    def __init__(self, sys: CoxeterSystem):
        self.system = sys
        self.members = list(sys.elements)

    def leq(self, u: Element, w: Element) -> bool:
        return absolute_leq(self.system, u, w)


@dataclass
class LatticeReport:
    """Outcome of an exhaustive meet/join existence check."""

    name: str
    pairs: list[tuple[str, str]]
    violations: list[tuple[str, str, str]]

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.passed:
            return f"{self.name}: all {len(self.pairs)} pairs OK"
        lines = [f"{self.name}: {len(self.violations)} violations "
                 f"in {len(self.pairs)} pairs"]
        lines += [f"  {kind}: {u}, {w}" for u, w, kind in self.violations]
        return "\n".join(lines)


def _order_masks(members: Sequence, leq: Callable) -> tuple[list[int], list[int]]:
    n = len(members)
    down = [0] * n
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if leq(members[j], members[i]):
                down[i] |= 1 << j
                up[j] |= 1 << i
    return down, up


def _extremum(cands: int, masks: list[int]) -> int:
    """Index of the unique member of ``cands`` covering all of ``cands``
    (meet for down-masks, join for up-masks), or -1."""
    rest = cands
    while rest:
        i = (rest & -rest).bit_length() - 1
        if cands & ~masks[i] == 0:
            return i
        rest &= rest - 1
    return -1


class NCLattice:
    """The interval [identity, gamma] with cover relations, rank and
    full meet/join tables.

    Members are ordered by (reflection length, canonical text), which
    fixes the indices used by the tables and the JSON/DOT exports.
    """

    def __init__(self, sys: CoxeterSystem, gamma: Element):
        self.system = sys
        self.gamma = gamma
        lt = sys.length_table
        members = [w for w in sys.elements if absolute_leq(sys, w, gamma)]
        members.sort(key=lambda w: (lt[w], sys.format_element(w)))
        self.members = members
        self.index = {w: i for i, w in enumerate(members)}
        self.rank_of = [lt[w] for w in members]
        self.down, self.up = _order_masks(members, lambda u, w: absolute_leq(sys, u, w))
        self.covers = self._covers()
        self.meet_table, self.join_table = self._fill_tables()

    def _covers(self) -> list[tuple[int, int]]:
        out = []
        n = len(self.members)
        for i in range(n):
            for j in range(n):
                if i == j or not self.down[j] >> i & 1:
                    continue
                between = self.up[i] & self.down[j]
                if between == (1 << i) | (1 << j):
                    out.append((i, j))
        out.sort()
        return out

    def _fill_tables(self) -> tuple[list[list[int]], list[list[int]]]:
        n = len(self.members)
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                lo = _extremum(self.down[i] & self.down[j], self.down)
                hi = _extremum(self.up[i] & self.up[j], self.up)
                if lo < 0 or hi < 0:
                    kind = "no meet" if lo < 0 else "no join"
                    raise LatticeViolation(
                        f"{kind} for {self.system.format_element(self.members[i])}, "
                        f"{self.system.format_element(self.members[j])}")
                meet[i][j] = meet[j][i] = lo
                join[i][j] = join[j][i] = hi
        return meet, join

    # -- queries -----------------------------------------------------

    def leq(self, u: Element, w: Element) -> bool:
        return self.down[self.index[w]] >> self.index[u] & 1 == 1

    def meet(self, u: Element, w: Element) -> Element:
        return self.members[self.meet_table[self.index[u]][self.index[w]]]

    def join(self, u: Element, w: Element) -> Element:
        return self.members[self.join_table[self.index[u]][self.index[w]]]

    def maximal_chains(self) -> list[tuple[Element, ...]]:
        """All cover paths from the identity to gamma."""
        succ: dict[int, list[int]] = {}
        for i, j in self.covers:
            succ.setdefault(i, []).append(j)
        top = self.index[self.gamma]
        chains = []

        def walk(i: int, acc: list[int]) -> None:
            if i == top:
                chains.append(tuple(self.members[k] for k in acc))
                return
            for j in succ.get(i, []):
                walk(j, acc + [j])

        walk(0, [0])
        return chains

    def chains_above_identity(self) -> list[tuple[int, ...]]:
        """All nonempty strictly increasing chains of members strictly
        above the identity, as index tuples.  These index the cells of
        the one-vertex quotient complex and the faces glued at each
        vertex of the positive complexes."""
        n = len(self.members)
        out: list[tuple[int, ...]] = []

        def extend(chain: list[int], last: int) -> None:
            out.append(tuple(chain))
            for j in range(last + 1, n):
                if self.down[j] >> last & 1:
                    chain.append(j)
                    extend(chain, j)
                    chain.pop()

        for i in range(1, n):
            extend([i], i)
        out.sort(key=lambda c: (len(c), c))
        return out

    def labels(self) -> list[str]:
        return [self.system.format_element(w) for w in self.members]


def build_nc(sys: CoxeterSystem, gamma: Element | None = None) -> NCLattice:
    """Construct the interval below ``gamma`` (default: the standard
    Coxeter element).  ``gamma`` must be a genuine Coxeter element, i.e.
    conjugate to the product of the simple generators."""
    std = sys.coxeter_element()
    if gamma is None:
        gamma = std
    else:
        sys._check(gamma)
        if _find_conjugator(sys, std, gamma) is None:
            raise NotCoxeterElement(
                f"{sys.format_element(gamma)} is not a Coxeter element "
                f"of {sys.descriptor()}")
    return NCLattice(sys, gamma)


def _find_conjugator(sys: CoxeterSystem, a: Element, b: Element) -> Element | None:
    for v in sys.elements:
        if sys.multiply(sys.multiply(v, a), sys.inverse(v)) == b:
            return v
    return None


def verify_lattice(members: Sequence, leq: Callable, name: str,
                   label: Callable = str) -> LatticeReport:
    """Exhaustive meet/join existence check over all ordered pairs.

    Violations are report content rather than exceptions, so the same
    routine demonstrates the failure of the lattice property on a full
    group poset.
    """
    down, up = _order_masks(members, leq)
    pairs = []
    violations = []
    n = len(members)
    for i in range(n):
        for j in range(n):
            pairs.append((label(members[i]), label(members[j])))
            if j < i:
                continue
            if _extremum(down[i] & down[j], down) < 0:
                violations.append((label(members[i]), label(members[j]), "no meet"))
            if _extremum(up[i] & up[j], up) < 0:
                violations.append((label(members[i]), label(members[j]), "no join"))
    return LatticeReport(name, pairs, violations)


def verify_nc_lattice(lat: NCLattice) -> LatticeReport:
    fmt = lat.system.format_element
    return verify_lattice(lat.members, lat.leq,
                          f"NC({lat.system.descriptor()})", fmt)


def conjugation_isomorphism(sys: CoxeterSystem, gamma1: Element,
                            gamma2: Element) -> dict[Element, Element]:
    """The order isomorphism w -> v w v^-1 between the two intervals,
    for a conjugator v with gamma2 = v gamma1 v^-1.  The map is checked
    to be an order-preserving bijection before it is returned."""
    v = _find_conjugator(sys, gamma1, gamma2)
    if v is None:
        raise NotConjugate(
            f"{sys.format_element(gamma1)} and {sys.format_element(gamma2)} "
            "are not conjugate")
    lat1 = NCLattice(sys, gamma1)
    lat2 = NCLattice(sys, gamma2)
    vi = sys.inverse(v)
    mapping = {w: sys.multiply(sys.multiply(v, w), vi) for w in lat1.members}
    if sorted(map(sys.format_element, mapping.values())) != \
            sorted(map(sys.format_element, lat2.members)):
        raise AssertionError("conjugation did not map the intervals bijectively")
    for u in lat1.members:
        for w in lat1.members:
            if lat1.leq(u, w) != lat2.leq(mapping[u], mapping[w]):
                raise AssertionError("conjugation was not order-preserving")
    return mapping


def cover_relations(members: Sequence, leq: Callable) -> list[tuple[int, int]]:
    """Cover pairs (as index pairs) of an arbitrary finite poset."""
    down, up = _order_masks(members, leq)
    out = []
    n = len(members)
    for i in range(n):
        for j in range(n):
            if i == j or not down[j] >> i & 1:
                continue
            if up[i] & down[j] == (1 << i) | (1 << j):
                out.append((i, j))
    out.sort()
    return out


def hasse_edges(lat: NCLattice) -> list[tuple[int, int]]:
    return list(lat.covers)


# -- export ----------------------------------------------------------


def nc_to_json(lat: NCLattice) -> str:
    import json

    payload = {
        "system": lat.system.descriptor(),
        "gamma": lat.system.format_element(lat.gamma),
        "members": lat.labels(),
        "covers": [list(c) for c in lat.covers],
        "rank": list(lat.rank_of),
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def nc_to_dot(lat: NCLattice) -> str:
    lines = [f'digraph "NC({lat.system.descriptor()})" {{', "  rankdir=BT;"]
    for i, text in enumerate(lat.labels()):
        lines.append(f'  n{i} [label="{text}"];')
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(lat.rank_of):
        by_rank.setdefault(r, []).append(i)
    for r in sorted(by_rank):
        row = " ".join(f"n{i};" for i in by_rank[r])
        lines.append(f"  {{ rank=same; {row} }}")
    for i, j in lat.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

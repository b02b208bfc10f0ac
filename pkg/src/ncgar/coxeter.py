"""Finite Coxeter groups of types A, B, D and I2(m), realised exactly.

Every group element is a plain hashable tuple and all arithmetic goes
through the owning :class:`CoxeterSystem`:

* type ``A`` of rank r -- permutations of ``{1..r+1}`` stored as image
  tuples, ``w[i-1]`` being the image of ``i``;
* types ``B`` and ``D`` -- signed permutations, image tuples with signs,
  extended to negative arguments by ``w(-i) = -w(i)``;
* type ``I2(m)`` -- dihedral elements ``("rot", k)`` and ``("ref", k)``
  with ``k`` mod m, where ``("ref", k)`` is the reflection across the
  axis at angle ``k*pi/m``.

Products compose like functions: ``multiply(a, b)`` applies ``b`` first.
Under this convention the product of the adjacent transpositions (1,2)
and (2,3) is the 3-cycle (1,2,3); every derived value in this package
assumes it.

The reflection set ``T`` is the conjugacy closure of the simple
generators, and reflection length is the geodesic distance from the
identity in the Cayley graph over ``T``, computed once per system by
breadth-first search and cached in ``length_table``.

Systems are immutable once constructed; every operation is a pure read,
so instances can be shared freely across threads.
"""

from __future__ import annotations

import re
from collections import deque
from functools import reduce

Element = tuple


class UnsupportedType(ValueError):
    """Family/rank combination outside the implemented range."""


class MixedSystems(ValueError):
    """An element was fed to a system it does not belong to."""


class ParseError(ValueError):
    """Malformed element or descriptor text; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: (2 ** n) * _factorial(n),
    "D": lambda n: (2 ** (n - 1)) * _factorial(n),
    "I2": lambda m: 2 * m,
}


def _factorial(n: int) -> int:
    return reduce(lambda a, b: a * b, range(1, n + 1), 1)


class CoxeterSystem:
    """A fully enumerated finite Coxeter group with its reflection data.

    Attributes
    ----------
    family, rank   : the type descriptor (for I2, ``rank`` is the label m)
    generators     : the simple reflections, in the fixed order used to
                     form the standard Coxeter element
    elements       : all group elements, in breadth-first order from the
                     identity over the generators (ties within a layer
                     broken by canonical text form)
    reflections    : the set T, conjugacy closure of the generators
    length_table   : element -> reflection length
    """

    def __init__(self, family: str, rank: int):
        if family == "A":
            if rank < 1:
                raise UnsupportedType(f"type A requires rank >= 1, got {rank}")
            self.n = rank + 1
        elif family == "B":
            if rank < 1:
                raise UnsupportedType(f"type B requires rank >= 1, got {rank}")
            self.n = rank
        elif family == "D":
            if rank < 2:
                raise UnsupportedType(f"type D requires rank >= 2, got {rank}")
            self.n = rank
        elif family == "I2":
            if rank < 3:
                raise UnsupportedType(f"type I2 requires m >= 3, got {rank}")
            self.n = rank
        else:
            raise UnsupportedType(f"unknown family {family!r}")
        self.family = family
        self.rank = rank if family != "I2" else 2
        self.m = rank if family == "I2" else None
        self.generators = self._make_generators()
        self.identity = self._make_identity()
        self.elements = self._enumerate()
        self.index = {w: i for i, w in enumerate(self.elements)}
        self.order = len(self.elements)
        expected = _ORDERS[family](rank)
        if self.order != expected:
            raise AssertionError(
                f"enumerated {self.order} elements, expected {expected}")
        self.reflections = self._conjugacy_closure()
        self.length_table = self._length_bfs()

    # -- construction -------------------------------------------------

    def _make_identity(self) -> Element:
        if self.family == "I2":
            return ("rot", 0)
        return tuple(range(1, self.n + 1))

    def _make_generators(self) -> list[Element]:
        n = self.n
        if self.family == "A":
            return [self._transposition(i, i + 1) for i in range(1, n)]
        if self.family == "B":
            sign = tuple([-1] + list(range(2, n + 1)))
            return [sign] + [self._transposition(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            neg = list(range(1, n + 1))
            neg[0], neg[1] = -2, -1
            return [tuple(neg)] + [self._transposition(i, i + 1) for i in range(1, n)]
        return [("ref", 0), ("ref", 1)]

    def _transposition(self, i: int, j: int) -> Element:
        img = list(range(1, self.n + 1))
        img[i - 1], img[j - 1] = j, i
        return tuple(img)

    def _enumerate(self) -> list[Element]:
        seen = {self.identity}
        out = [self.identity]
        frontier = [self.identity]
        while frontier:
            layer = []
            for w in frontier:
                for s in self.generators:
                    p = self._mul(w, s)
                    if p not in seen:
                        seen.add(p)
                        layer.append(p)
            layer.sort(key=self.format_element)
            out.extend(layer)
            frontier = layer
        return out

    def _conjugacy_closure(self) -> frozenset:
        refl = set()
        for w in self.elements:
            wi = self._inv(w)
            for s in self.generators:
                refl.add(self._mul(self._mul(w, s), wi))
        return frozenset(refl)

    def _length_bfs(self) -> dict:
        dist = {self.identity: 0}
        queue = deque([self.identity])
        refl = list(self.reflections)
        while queue:
            w = queue.popleft()
            d = dist[w] + 1
            for t in refl:
                p = self._mul(w, t)
                if p not in dist:
                    dist[p] = d
                    queue.append(p)
        return dist

    # -- raw arithmetic (no membership checks) -------------------------

    def _mul(self, a: Element, b: Element) -> Element:
        if self.family == "A":
            return tuple(a[x - 1] for x in b)
        if self.family == "I2":
            ka, kb = a[1], b[1]
            m = self.m
            if a[0] == "rot":
                if b[0] == "rot":
                    return ("rot", (ka + kb) % m)
                return ("ref", (ka + kb) % m)
            if b[0] == "rot":
                return ("ref", (ka - kb) % m)
            return ("rot", (ka - kb) % m)
        return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)

    def _inv(self, a: Element) -> Element:
        if self.family == "A":
            img = [0] * self.n
            for i, x in enumerate(a):
                img[x - 1] = i + 1
            return tuple(img)
        if self.family == "I2":
            if a[0] == "rot":
                return ("rot", (-a[1]) % self.m)
            return a
        img = [0] * self.n
        for i, x in enumerate(a):
            if x > 0:
                img[x - 1] = i + 1
            else:
                img[-x - 1] = -(i + 1)
        return tuple(img)

    # -- public operations ---------------------------------------------

    def _check(self, *elems: Element) -> None:
        for e in elems:
            if e not in self.index:
                raise MixedSystems(f"{e!r} is not an element of {self.descriptor()}")

    def multiply(self, a: Element, b: Element) -> Element:
        """Group product; ``b`` acts first."""
        self._check(a, b)
        return self._mul(a, b)

    def inverse(self, a: Element) -> Element:
        self._check(a)
        return self._inv(a)

    def conjugate(self, u: Element, w: Element) -> Element:
        """u * w * u^-1."""
        self._check(u, w)
        return self._mul(self._mul(u, w), self._inv(u))

    def reflection_length(self, w: Element) -> int:
        self._check(w)
        return self.length_table[w]

    def coxeter_element(self) -> Element:
        """The standard representative: product of the generators in stored order."""
        return reduce(self._mul, self.generators)

    def length_histogram(self) -> list[int]:
        hist = [0] * (self.rank + 1)
        for w in self.elements:
            hist[self.length_table[w]] += 1
        return hist

    def descriptor(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    # -- text form -------------------------------------------------------

    def format_element(self, w: Element) -> str:
        """Canonical text form.

        Permutations print in cycle notation (each cycle rotated so its
        smallest entry leads, cycles sorted by smallest entry, fixed
        points omitted); signed permutations print the full window after
        ``signed:``; dihedral elements print ``rot:k`` / ``ref:k``.  The
        identity prints ``e`` in every family.
        """
        if w == self.identity:
            return "e"
        if self.family == "A":
            return _format_cycles(w)
        if self.family == "I2":
            return f"{w[0]}:{w[1]}"
        return "signed:" + " ".join(str(x) for x in w)

    def parse_element(self, text: str) -> Element:
        """Inverse of :meth:`format_element`; raises ParseError on bad input."""
        stripped = text.strip()
        if stripped == "e":
            return self.identity
        if self.family == "A":
            elem = _parse_cycles(text, self.n)
        elif self.family == "I2":
            elem = self._parse_dihedral(text)
        else:
            elem = self._parse_signed(text)
        if elem not in self.index:
            raise ParseError(text, 0, f"not an element of {self.descriptor()}")
        return elem

    def _parse_dihedral(self, text: str) -> Element:
        m = re.fullmatch(r"\s*(rot|ref):(-?\d+)\s*", text)
        if not m:
            raise ParseError(text, 0, "expected rot:k or ref:k")
        return (m.group(1), int(m.group(2)) % self.m)

    def _parse_signed(self, text: str) -> Element:
        m = re.fullmatch(r"\s*signed:((?:-?\d+)(?:\s+-?\d+)*)\s*", text)
        if not m:
            raise ParseError(text, 0, "expected signed: window notation")
        imgs = tuple(int(tok) for tok in m.group(1).split())
        if len(imgs) != self.n:
            raise ParseError(text, text.index(":") + 1,
                             f"window must list images of 1..{self.n}")
        if sorted(abs(x) for x in imgs) != list(range(1, self.n + 1)):
            raise ParseError(text, text.index(":") + 1,
                             "absolute images must be a bijection")
        return imgs


def _format_cycles(w: Element) -> str:
    n = len(w)
    seen = [False] * n
    cycles = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        x = w[start - 1]
        while x != start:
            cyc.append(x)
            seen[x - 1] = True
            x = w[x - 1]
        if len(cyc) > 1:
            cycles.append(cyc)
    cycles.sort(key=lambda c: c[0])
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


def _parse_cycles(text: str, n: int) -> Element:
    img = list(range(1, n + 1))
    touched = set()
    pos = 0
    length = len(text)
    while pos < length and text[pos].isspace():
        pos += 1
    if pos == length:
        raise ParseError(text, pos, "empty element text")
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise ParseError(text, pos, "expected '('")
        close = text.find(")", pos)
        if close < 0:
            raise ParseError(text, pos, "unbalanced '('")
        body = text[pos + 1:close]
        entries = []
        for tok in body.split(","):
            tok = tok.strip()
            if not re.fullmatch(r"\d+", tok):
                raise ParseError(text, pos + 1, f"bad cycle entry {tok!r}")
            entries.append(int(tok))
        if len(entries) < 2:
            raise ParseError(text, pos, "cycles need at least two entries")
        for x in entries:
            if not 1 <= x <= n:
                raise ParseError(text, pos, f"entry {x} out of range 1..{n}")
            if x in touched:
                raise ParseError(text, pos, f"entry {x} repeated")
            touched.add(x)
        for i, x in enumerate(entries):
            img[x - 1] = entries[(i + 1) % len(entries)]
        pos = close + 1
    return tuple(img)


_DESC_RE = re.compile(r"\s*(?:([ABD])(\d+)|I2\((\d+)\))\s*")


def make_system(family: str, rank_or_m: int) -> CoxeterSystem:
    """Build and fully enumerate a system; raises UnsupportedType."""
    return CoxeterSystem(family, rank_or_m)


def parse_descriptor(text: str) -> CoxeterSystem:
    """Parse a descriptor like ``A3``, ``B2``, ``D4`` or ``I2(7)``."""
    m = _DESC_RE.fullmatch(text)
    if not m:
        raise ParseError(text, 0, "expected A<n>, B<n>, D<n> or I2(m)")
    if m.group(1):
        return make_system(m.group(1), int(m.group(2)))
    return make_system("I2", int(m.group(3)))


def type_a_length(w: Element) -> int:
    """Closed-form reflection length in type A: n minus the cycle count
    (fixed points counted as cycles).  Used only as an independent oracle."""
    n = len(w)
    seen = [False] * n
    cycles = 0
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cycles += 1
        x = start
        while not seen[x - 1]:
            seen[x - 1] = True
            x = w[x - 1]
    return n - cycles

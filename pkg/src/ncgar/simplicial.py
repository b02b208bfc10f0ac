"""Abstract simplicial complexes with closure, star, link, cone, order
complexes and cone detection.

Faces are stored as frozensets of vertex labels; the empty face is
always present and every vertex occurs as a singleton face.  Labels are
opaque strings supplied by callers, which keeps this module free of any
group or lattice knowledge.  For exports and boundary matrices, faces are
ordered by the position of their vertices in the complex's vertex tuple.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .homology import IntegerMatrix


class FaceNotInComplex(ValueError):
    pass


class UnknownVertex(ValueError):
    pass


class DuplicateVertex(ValueError):
    pass


Face = frozenset


class AbstractComplex:
    """A containment-closed family of faces over labelled vertices."""

    def __init__(self, vertices: Sequence[str], faces: Iterable[Iterable[str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateVertex("vertex labels must be distinct")
        vset = set(self.vertices)
        closed = {frozenset()}
        closed.update(frozenset((v,)) for v in self.vertices)
        for face in faces:
            f = frozenset(face)
            if not f <= vset:
                raise UnknownVertex(f"face {sorted(f)} uses unknown vertices")
            for k in range(1, len(f) + 1):
                closed.update(map(frozenset, combinations(sorted(f), k)))
        self.faces: frozenset[Face] = frozenset(closed)
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    # -- basics --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbstractComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> tuple[int, ...]:
        """Counts of faces by dimension, empty face excluded."""
        counts = [0] * (self.dim() + 1)
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def maximal_faces(self) -> list[tuple[str, ...]]:
        maxi = [f for f in self.faces
                if not any(f < g for g in self.faces)]
        ordered = [tuple(sorted(f, key=self._pos.get)) for f in maxi]
        ordered.sort(key=lambda f: (len(f), tuple(self._pos[v] for v in f)))
        return ordered

    def _subcomplex(self, faces: Iterable[Face]) -> "AbstractComplex":
        faces = set(faces)
        used = set().union(*faces) if faces else set()
        vertices = [v for v in self.vertices if v in used]
        return AbstractComplex(vertices, faces)

    # -- the classical operations ---------------------------------------

    def closure(self, faces: Iterable[Iterable[str]]) -> "AbstractComplex":
        """Smallest subcomplex containing the given faces."""
        wanted = []
        for face in faces:
            f = frozenset(face)
            if f not in self.faces:
                raise FaceNotInComplex(f"{sorted(f)} is not a face")
            wanted.append(f)
        return self._subcomplex(
            {g for g in self.faces if any(g <= f for f in wanted)})

    def star(self, v: str) -> "AbstractComplex":
        """Closure of the faces containing ``v``."""
        if v not in self._pos:
            raise UnknownVertex(v)
        stars = [f for f in self.faces if v in f]
        return self._subcomplex(
            {g for g in self.faces if any(g <= f for f in stars)})

    def link(self, v: str) -> "AbstractComplex":
        """Faces of the star of ``v`` avoiding ``v``."""
        if v not in self._pos:
            raise UnknownVertex(v)
        stars = [f for f in self.faces if v in f]
        return self._subcomplex(
            {g for g in self.faces
             if v not in g and any(g <= f for f in stars)})

    def cone(self, c: str) -> "AbstractComplex":
        """Join with the fresh vertex ``c``; doubles the face count."""
        if c in self._pos:
            raise DuplicateVertex(c)
        faces = set(self.faces)
        faces.update(f | {c} for f in self.faces)
        return AbstractComplex(tuple(self.vertices) + (c,), faces)

    def is_cone(self) -> str | None:
        """Smallest-index vertex v with F + {v} a face for every face F,
        or None if no such vertex exists."""
        for v in self.vertices:
            if all(f | {v} in self.faces for f in self.faces):
                return v
        return None

    # -- exports ---------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "vertices": list(self.vertices),
            "maximal_faces": [[self._pos[v] for v in f]
                              for f in self.maximal_faces()],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"

    def skeleton_dot(self, name: str = "complex") -> str:
        lines = [f'graph "{name}" {{']
        for i, v in enumerate(self.vertices):
            lines.append(f'  n{i} [label="{v}"];')
        edges = sorted(
            tuple(sorted((self._pos[a], self._pos[b])))
            for a, b in (tuple(f) for f in self.faces if len(f) == 2))
        for i, j in edges:
            lines.append(f"  n{i} -- n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def boundary_matrices(self, reduced: bool = False) -> list[IntegerMatrix]:
        """Boundary maps of the simplicial chain complex, degree 1 up to
        the dimension; with ``reduced`` the augmentation onto the empty
        face is prepended."""
        by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(self.dim() + 1)]
        for f in self.faces:
            if f:
                by_dim[len(f) - 1].append(tuple(sorted(self._pos[v] for v in f)))
        for lst in by_dim:
            lst.sort()
        pos = [{f: i for i, f in enumerate(lst)} for lst in by_dim]
        mats = []
        if reduced:
            mats.append(IntegerMatrix(1, len(by_dim[0]),
                                      [[1] * len(by_dim[0])]))
        elif len(by_dim) == 1:
            return [IntegerMatrix.zeros(len(by_dim[0]), 0)]
        for k in range(1, len(by_dim)):
            m = IntegerMatrix.zeros(len(by_dim[k - 1]), len(by_dim[k]))
            for col, f in enumerate(by_dim[k]):
                for i in range(len(f)):
                    sub = f[:i] + f[i + 1:]
                    m.entries[pos[k - 1][sub]][col] += (-1) ** i
            mats.append(m)
        return mats


def from_maximal_faces(labels: Sequence[str],
                       maxfaces: Iterable[Iterable[str]]) -> AbstractComplex:
    """Containment closure of the given faces over the given vertex set."""
    return AbstractComplex(labels, maxfaces)


def order_complex(elements: Sequence, leq: Callable,
                  label: Callable = str) -> AbstractComplex:
    """The complex of all chains of a finite poset.

    Subsets of chains are chains, so the result is containment-closed by
    construction; isolated (incomparable) elements appear as vertices.
    """
    labels = [label(x) for x in elements]
    n = len(elements)
    strictly_below = [[j for j in range(n)
                       if j != i and leq(elements[j], elements[i])
                       and not leq(elements[i], elements[j])]
                      for i in range(n)]
    chains: list[tuple[int, ...]] = []

    def extend(chain: list[int], last: int) -> None:
        chains.append(tuple(chain))
        for j in range(n):
            if last in strictly_below[j]:
                chain.append(j)
                extend(chain, j)
                chain.pop()

    for i in range(n):
        extend([i], i)
    return AbstractComplex(labels, [tuple(labels[i] for i in c) for c in chains])

"""Truncated positive complexes, their ascending/descending stars and
links, the left action on faces, and the one-vertex quotient complex
with integer boundary maps.

The ambient complex on the whole group completion is infinite and never
materialised; only the truncations are built.  A truncation at level m
keeps the monoid elements whose normal form has at most m factors, with
a face glued at each vertex g for every chain w1 < ... < wk strictly
above the identity whose translates g<w1>, ..., g<wk> all stay within
the truncation.  Vertex labels are the normal-form word strings, so
equality of monoid elements (not of words) deduplicates vertices.

The quotient identifies every face {g0, ..., gk} with its left
translate starting at the identity; the canonical cell representative
is the strictly increasing tail (w1 < ... < wk).  Boundaries alternate
signs over the ordered vertex list (identity first); omitting the
identity vertex left-translates the chain, omitting the top truncates
it, omitting a middle entry deletes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import json

from .coxeter import CoxeterSystem, Element
from .homology import HomologyGroup, IntegerMatrix, homology
from .lattice import NCLattice, build_nc
from .monoid import BudgetExceeded, DualMonoid, GroupForm, Word, _env_budget
from .simplicial import AbstractComplex, UnknownVertex


class OutOfTruncation(RuntimeError):
    """A translated face left the positive range that truncations cover."""


@dataclass
class PositiveComplex:
    system: CoxeterSystem
    gamma: Element
    m: int
    monoid: DualMonoid
    vertex_nfs: list[Word]
    complex: AbstractComplex
    nf_by_label: dict

    @property
    def vertex_labels(self) -> list[str]:
        return list(self.complex.vertices)

    def nf_of(self, label: str) -> Word:
        return self.nf_by_label[label]

    def group_forms(self, face_labels: Iterable[str]) -> tuple[GroupForm, ...]:
        return tuple(GroupForm(0, self.nf_of(v)) for v in face_labels)


def build_x_plus(sys: CoxeterSystem, gamma: Element | None, m: int,
                 monoid: DualMonoid | None = None,
                 budget: int | None = None) -> PositiveComplex:
    """The truncation at normal-form length m."""
    if m < 0:
        raise ValueError("truncation level must be >= 0")
    if monoid is None:
        monoid = DualMonoid(build_nc(sys, gamma))
    lat = monoid.lattice
    limit = _env_budget(budget)

    nfs = {(): None}
    frontier = [()]
    while frontier:
        layer = []
        for p in frontier:
            for s in monoid.simples:
                q = monoid.normal_form(p + (s,))
                if len(q) <= m and q not in nfs:
                    nfs[q] = None
                    layer.append(q)
                    if len(nfs) > limit:
                        raise BudgetExceeded(
                            f"truncation exceeded {limit} vertices")
        layer.sort()
        frontier = layer
    vertex_nfs = sorted(nfs, key=lambda p: (monoid.word_length(p), len(p), p))

    labels = [monoid.word_to_text(p) for p in vertex_nfs]
    chains = lat.chains_above_identity()
    append = {}

    def shifted(p: Word, w: int) -> Word:
        key = (p, w)
        q = append.get(key)
        if q is None:
            q = append[key] = monoid.normal_form(p + (w,))
        return q

    faces = []
    for p, label in zip(vertex_nfs, labels):
        for chain in chains:
            face = [label]
            ok = True
            for w in chain:
                q = shifted(p, w)
                if len(q) > m:
                    ok = False
                    break
                face.append(monoid.word_to_text(q))
            if ok:
                faces.append(tuple(face))
    cpx = AbstractComplex(labels, faces)
    return PositiveComplex(sys, monoid.lattice.gamma, m, monoid, vertex_nfs,
                           cpx, dict(zip(labels, vertex_nfs)))


# -- stars and links ---------------------------------------------------


def _extreme_vertex(x: PositiveComplex, face) -> str:
    return max(face, key=lambda v: x.monoid.word_length(x.nf_of(v)))


def _bottom_vertex(x: PositiveComplex, face) -> str:
    return min(face, key=lambda v: x.monoid.word_length(x.nf_of(v)))


def _sub(x: PositiveComplex, faces: list) -> AbstractComplex:
    used = set().union(*faces) if faces else set()
    vertices = [v for v in x.complex.vertices if v in used]
    return AbstractComplex(vertices, faces)


def descending_star(u: str, x: PositiveComplex) -> AbstractComplex:
    """Closure of the faces whose longest label sits at u."""
    if u not in x.complex.vertices:
        raise UnknownVertex(u)
    return _sub(x, [f for f in x.complex.faces
                    if f and _extreme_vertex(x, f) == u])


def ascending_star(u: str, x: PositiveComplex) -> AbstractComplex:
    if u not in x.complex.vertices:
        raise UnknownVertex(u)
    return _sub(x, [f for f in x.complex.faces
                    if f and _bottom_vertex(x, f) == u])


def descending_link(u: str, x: PositiveComplex) -> AbstractComplex:
    star = descending_star(u, x)
    return _sub(x, [f for f in star.faces if u not in f])


def ascending_link(u: str, x: PositiveComplex) -> AbstractComplex:
    star = ascending_star(u, x)
    return _sub(x, [f for f in star.faces if u not in f])


@dataclass
class DescendingLinkReport:
    system: str
    m: int
    entries: list[tuple[str, str | None]]  # vertex label -> cone vertex

    @property
    def passed(self) -> bool:
        return all(cone is not None for _, cone in self.entries)

    def lines(self) -> list[str]:
        out = []
        for label, cone in self.entries:
            if cone is None:
                out.append(f"FAIL lk-({label}) is not a cone")
            else:
                out.append(f"ok lk-({label}) cone vertex {cone}")
        return out


def verify_descending_links(sys: CoxeterSystem, gamma: Element | None,
                            m: int, monoid: DualMonoid | None = None) -> DescendingLinkReport:
    """Every vertex of normal-form length exactly m must have a
    descending link that is a cone."""
    if m < 1:
        raise ValueError("need m >= 1")
    x = build_x_plus(sys, gamma, m, monoid=monoid)
    entries = []
    for nf, label in zip(x.vertex_nfs, x.complex.vertices):
        if len(nf) != m:
            continue
        entries.append((label, descending_link(label, x).is_cone()))
    return DescendingLinkReport(sys.descriptor(), m, entries)


# -- group action -------------------------------------------------------


def act(monoid: DualMonoid, g: GroupForm,
        face: Iterable[GroupForm]) -> frozenset[GroupForm]:
    """Left translation of a face, vertexwise; canonical group forms."""
    return frozenset(monoid.group_multiply(g, v) for v in face)


def positive_labels(monoid: DualMonoid,
                    face: Iterable[GroupForm]) -> frozenset[str]:
    """Labels of a translated face, provided it is entirely positive."""
    out = []
    for v in face:
        if v.gamma_power:
            raise OutOfTruncation(
                f"{monoid.group_form_to_text(v)} is not a positive label")
        out.append(monoid.word_to_text(v.factors))
    return frozenset(out)


# -- the quotient complex -------------------------------------------------


@dataclass
class QuotientComplexK:
    lattice: NCLattice
    cells_by_dim: list[list[tuple[int, ...]]]
    boundaries: list[IntegerMatrix]

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(cells) for cells in self.cells_by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.cell_counts()))

    def homology(self) -> list[HomologyGroup]:
        return homology(self.boundaries)

    def to_json(self) -> str:
        payload = {
            "cells": list(self.cell_counts()),
            "boundary": [m.entries for m in self.boundaries],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"


def build_k(lat: NCLattice) -> QuotientComplexK:
    """One 0-cell; one k-cell per length-k chain strictly above the
    identity; boundary signs alternate over (identity, w1, ..., wk)."""
    chains = lat.chains_above_identity()
    top = max((len(c) for c in chains), default=0)
    cells: list[list[tuple[int, ...]]] = [[()]]
    for k in range(1, top + 1):
        cells.append(sorted(c for c in chains if len(c) == k))
    pos = [{c: i for i, c in enumerate(layer)} for layer in cells]
    lquot = [[lat.index.get(
        lat.system.multiply(lat.system.inverse(u), w), -1)
        for w in lat.members] for u in lat.members]
    boundaries = []
    for k in range(1, top + 1):
        mat = IntegerMatrix.zeros(len(cells[k - 1]), len(cells[k]))
        for col, c in enumerate(cells[k]):
            translated = tuple(lquot[c[0]][x] for x in c[1:])
            mat.entries[pos[k - 1][translated]][col] += 1
            for p in range(1, k):
                sub = c[:p - 1] + c[p:]
                mat.entries[pos[k - 1][sub]][col] += (-1) ** p
            mat.entries[pos[k - 1][c[:-1]]][col] += (-1) ** k
        boundaries.append(mat)
    return QuotientComplexK(lat, cells, boundaries)


def identification_classes(lat: NCLattice) -> dict[tuple[int, ...], list[frozenset[str]]]:
    """Faces of the order complex of the interval, grouped by the cell
    they map to in the quotient: {w0,...,wk} ~ {I, w0^-1 w1, ...}."""
    chains = lat.chains_above_identity()
    all_chains = [(0,) + c for c in [()] + list(chains)] + list(chains)
    sys = lat.system
    classes: dict[tuple[int, ...], list[frozenset[str]]] = {}
    for c in sorted(all_chains, key=lambda c: (len(c), c)):
        head = lat.members[c[0]]
        inv_head = sys.inverse(head)
        rep = tuple(lat.index[sys.multiply(inv_head, lat.members[x])]
                    for x in c[1:])
        face = frozenset(sys.format_element(lat.members[x]) for x in c)
        classes.setdefault(rep, []).append(face)
    return classes


def verify_example_identifications(lat: NCLattice) -> bool:
    """Check the identification classes of the rank-2 symmetric-group
    interval against their known values."""
    if lat.system.descriptor() != "A2" or \
            lat.system.format_element(lat.gamma) != "(1,2,3)":
        raise ValueError("this check is specific to A2 with gamma (1,2,3)")
    classes = identification_classes(lat)
    multi = {frozenset(faces) for faces in classes.values() if len(faces) > 1}
    expected = {
        frozenset({frozenset({"e"}), frozenset({"(1,2)"}), frozenset({"(1,3)"}),
                   frozenset({"(2,3)"}), frozenset({"(1,2,3)"})}),
        frozenset({frozenset({"e", "(1,2)"}), frozenset({"(1,3)", "(1,2,3)"})}),
        frozenset({frozenset({"e", "(2,3)"}), frozenset({"(1,2)", "(1,2,3)"})}),
        frozenset({frozenset({"e", "(1,3)"}), frozenset({"(2,3)", "(1,2,3)"})}),
    }
    return multi == expected


def reduced_homology(cpx: AbstractComplex) -> list[HomologyGroup]:
    """Reduced homology in degrees 0..dim, via the augmented complex."""
    if not any(len(f) == 1 for f in cpx.faces):
        raise ValueError("need at least one vertex")
    groups = homology(cpx.boundary_matrices(reduced=True))
    return groups[1:]

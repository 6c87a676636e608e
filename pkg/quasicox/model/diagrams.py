# -*- coding: utf-8 -*-
# +---------------------------------------------------------------------------+
# |  Copyright (c) 2026 Quasicox Developers                                   |
# |                                                                           |
# |  This file is part of Quasicox.                                           |
# |                                                                           |
# |  Quasicox is free software: you can redistribute it and/or modify         |
# |  it under the terms of the GNU General Public License as published by     |
# |  the Free Software Foundation, either version 3 of the License, or        |
# |  (at your option) any later version.                                      |
# |                                                                           |
# |  Quasicox is distributed in the hope that it will be useful,              |
# |  but WITHOUT ANY WARRANTY; without even the implied warranty of           |
# |  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            |
# |  GNU General Public License for more details.                             |
# |                                                                           |
# |  You should have received a copy of the GNU General Public License        |
# |  along with Quasicox.  If not, see <https://www.gnu.org/licenses/>.       |
# +---------------------------------------------------------------------------+

"""
Labelled diagrams, their Artin and Coxeter presentations, and the one-relator
quotients built on them.
"""

from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from quasicox.model.errors import UnknownGeneratorError, WordParseError, check_range
from quasicox.model.word import (EMPTY, GenId, Word, cycle_commutator, format_word, gen, gens,
                                 invert, parse_word, product, twisted_cycle_commutator)
from quasicox.utils.text import gap_list_body, gap_strings, merge


class DiagramKind(Enum):
    DN = 'dn'
    NGON = 'ngon'
    DELTA_TN = 'delta'
    PATH = 'path'


class Diagram:
    """
    Simple graph on vertices 1..n with a kind tag. Immutable.

    Parameters:
        n: vertex count
        edges: unordered vertex pairs
        kind: DiagramKind
        t: twist parameter of Delta(t, n), None otherwise
        names: generator name per vertex (index 0 is vertex 1)
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['n', 'edges', 'kind', 't', 'names', '_ihash']

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]], kind: DiagramKind,
                 t: int = None, names: Sequence[str] = None):
        norm = []
        for i, j in edges:
            if i == j:
                raise ValueError(f"Loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"Edge {(i, j)} outside vertices 1..{n}")
            norm.append((min(i, j), max(i, j)))
        if names is None:
            names = [f"v{i}" for i in range(1, n + 1)]
        if len(names) != n:
            raise ValueError(f"Expected {n} vertex names, got {len(names)}")
        super().__setattr__('n', n)
        super().__setattr__('edges', frozenset(norm))
        super().__setattr__('kind', kind)
        super().__setattr__('t', t)
        super().__setattr__('names', tuple(names))
        super().__setattr__('_ihash', hash((n, self.edges, kind, t, self.names)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __hash__(self):
        return self._ihash

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.n == other.n
                and self.edges == other.edges
                and self.kind == other.kind
                and self.t == other.t
                and self.names == other.names)

    def __repr__(self):
        t = f", t={self.t}" if self.t is not None else ""
        return f"Diagram({self.kind.value}, n={self.n}{t}, edges={self.sorted_edges()})"

    @property
    def label(self) -> str:
        if self.kind == DiagramKind.DN:
            return f"D_{self.n}"
        if self.kind == DiagramKind.NGON:
            return f"Delta_{self.n}"
        if self.kind == DiagramKind.DELTA_TN:
            return f"Delta_{{{self.t},{self.n}}}"
        return f"A_{self.n}"

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_connected(self) -> bool:
        return nx.is_connected(self.graph())

    def is_isomorphic(self, other: 'Diagram') -> bool:
        return nx.is_isomorphic(self.graph(), other.graph())

    def maps_onto(self, other: 'Diagram', bijection: Dict[int, int]) -> bool:
        """True when the vertex bijection carries this edge set exactly onto other's."""
        if sorted(bijection) != list(range(1, self.n + 1)):
            return False
        if sorted(bijection.values()) != list(range(1, other.n + 1)):
            return False
        image = {tuple(sorted((bijection[i], bijection[j]))) for i, j in self.edges}
        return image == set(other.edges)


# ─────────
# Builders

def diagram_Dn(n: int) -> Diagram:
    """Fork at vertex 3: edges {1,3}, {2,3}, {3,4}, ..., {n-1,n}."""
    check_range('n', n, 4)
    edges = [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
    return Diagram(n, edges, DiagramKind.DN, names=[f"x{i}" for i in range(1, n + 1)])


def diagram_ngon(n: int) -> Diagram:
    check_range('n', n, 3)
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Diagram(n, edges, DiagramKind.NGON, names=[f"a{i}" for i in range(1, n + 1)])


def arm_lengths(n: int, t: int) -> Tuple[int, int]:
    """(r, s) = (n-3-t, t-1)"""
    return n - 3 - t, t - 1


def delta_tn_names(n: int, t: int) -> List[str]:
    r, _ = arm_lengths(n, t)
    return [f"b{i}" for i in range(1, 5 + r)] + [f"c{i}" for i in range(5 + r, n + 1)]


def diagram_delta_tn(n: int, t: int) -> Diagram:
    """
    Square 1-2-3-4-1 with the r-arm 1-5-...-(4+r) and the s-arm 3-(5+r)-...-n.
    """
    check_range('n', n, 4)
    check_range('t', t, 1, n - 3)
    r, s = arm_lengths(n, t)
    edges = [(1, 2), (2, 3), (3, 4), (4, 1)]
    if r:
        edges.append((1, 5))
        edges.extend((i, i + 1) for i in range(5, 4 + r))
    if s:
        edges.append((3, 5 + r))
        edges.extend((i, i + 1) for i in range(5 + r, n))
    return Diagram(n, edges, DiagramKind.DELTA_TN, t=t, names=delta_tn_names(n, t))


def diagram_path(k: int, prefix: str = 'y') -> Diagram:
    """Braid chain y1 - y2 - ... - yk."""
    check_range('k', k, 1)
    edges = [(i, i + 1) for i in range(1, k)]
    return Diagram(k, edges, DiagramKind.PATH, names=[f"{prefix}{i}" for i in range(1, k + 1)])


def rotation_map(n: int, t: int) -> Dict[int, int]:
    """
    Vertex bijection Delta(t, n) -> Delta(n-2-t, n) turning the square half way
    round: 1 <-> 3, 2 <-> 4, and the r-arm onto the other side's s-arm.
    """
    check_range('t', t, 1, n - 3)
    r, s = arm_lengths(n, t)
    r2 = s
    rot = {1: 3, 2: 4, 3: 1, 4: 2}
    for j in range(1, r + 1):
        rot[4 + j] = 4 + r2 + j
    for j in range(1, s + 1):
        rot[4 + r + j] = 4 + j
    return rot


# ─────────
# Presentations

class Relation(NamedTuple):
    lhs: Word
    rhs: Word
    label: str = ''

    def relator(self) -> Word:
        return product(self.lhs, invert(self.rhs))


class PresentationSpec:
    """
    Generators, defining relations lhs = rhs and extra relators (quotient
    relators kept apart for provenance). Immutable.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['name', 'generators', 'relations', 'extra_relators', 'relator_labels',
                 '_index', '_ihash']

    def __init__(self, generators: Sequence[str], relations: Iterable[Relation] = (),
                 extra_relators: Iterable[Word] = (), name: str = '',
                 relator_labels: Sequence[str] = None):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise ValueError(f"Duplicate generator names in {generators}")
        relations = tuple(Relation(*r) for r in relations)
        extra_relators = tuple(extra_relators)
        if relator_labels is None:
            relator_labels = [f"R{i + 1}" for i in range(len(extra_relators))]
        relator_labels = tuple(relator_labels)
        if len(relator_labels) != len(extra_relators):
            raise ValueError("One label per extra relator expected")
        index = {g: i for i, g in enumerate(generators)}
        words = [w for r in relations for w in (r.lhs, r.rhs)] + list(extra_relators)
        for w in words:
            for letter in w:
                if letter.gen not in index:
                    raise UnknownGeneratorError(letter.gen, name)
        super().__setattr__('name', name)
        super().__setattr__('generators', generators)
        super().__setattr__('relations', relations)
        super().__setattr__('extra_relators', extra_relators)
        super().__setattr__('relator_labels', relator_labels)
        super().__setattr__('_index', index)
        super().__setattr__('_ihash', hash((generators, relations, extra_relators)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __hash__(self):
        return self._ihash

    def __eq__(self, other):
        return (isinstance(other, PresentationSpec)
                and self.generators == other.generators
                and self.relations == other.relations
                and self.extra_relators == other.extra_relators)

    def __repr__(self):
        return (f"PresentationSpec({self.name!r}, {len(self.generators)} generators, "
                f"{len(self.relations)} relations, {len(self.extra_relators)} relators)")

    @property
    def gen_ids(self) -> Tuple[GenId, ...]:
        return tuple(GenId(g, i) for i, g in enumerate(self.generators))

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGeneratorError(name, self.name) from None

    def generator_words(self) -> List[Word]:
        return gens(*self.generators)

    def relators(self) -> List[Word]:
        """All defining words equal to the identity: lhs*rhs^-1 then the extra relators."""
        return [r.relator() for r in self.relations] + list(self.extra_relators)

    def checks(self) -> List[Tuple[str, Word, Word]]:
        """(label, lhs, rhs) for every relation and extra relator (rhs empty)."""
        rows = [(r.label, r.lhs, r.rhs) for r in self.relations]
        rows.extend((label, w, EMPTY) for label, w in zip(self.relator_labels, self.extra_relators))
        return rows

    def parse(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def renamed(self, name: str) -> 'PresentationSpec':
        return PresentationSpec(self.generators, self.relations, self.extra_relators,
                                name, self.relator_labels)


def braid_relation(g: Word, h: Word, label: str = '') -> Relation:
    return Relation(product(g, h, g), product(h, g, h), label)


def commuting_relation(g: Word, h: Word, label: str = '') -> Relation:
    return Relation(product(g, h), product(h, g), label)


def artin_presentation(d: Diagram) -> PresentationSpec:
    """Braid relation per edge, commuting relation per non-edge, pairs in lex order."""
    relations = []
    for i, j in combinations(range(1, d.n + 1), 2):
        gi, gj = d.names[i - 1], d.names[j - 1]
        if d.has_edge(i, j):
            relations.append(braid_relation(gen(gi), gen(gj), f"BR({gi},{gj})"))
        else:
            relations.append(commuting_relation(gen(gi), gen(gj), f"CM({gi},{gj})"))
    return PresentationSpec(d.names, relations, name=f"A({d.label})")


def coxeter_presentation(d: Diagram) -> PresentationSpec:
    base = artin_presentation(d)
    orders = [Relation(product(gen(g), gen(g)), EMPTY, f"O({g})") for g in d.names]
    return PresentationSpec(base.generators, base.relations + tuple(orders), name=f"W({d.label})")


def quotient_presentation(base: PresentationSpec, relators: Sequence[Word],
                          labels: Sequence[str] = None, name: str = None) -> PresentationSpec:
    """Copy of base with relators appended to its extra relators."""
    relators = list(relators)
    if labels is None:
        start = len(base.extra_relators)
        labels = [f"R{start + i + 1}" for i in range(len(relators))]
    if name is None:
        name = f"{base.name}/<<{','.join(labels)}>>"
    return PresentationSpec(base.generators, base.relations,
                            base.extra_relators + tuple(relators), name,
                            base.relator_labels + tuple(labels))


# ─────────
# Named groups

def dn_presentation(n: int) -> PresentationSpec:
    return artin_presentation(diagram_Dn(n))


def ngon_presentation(n: int) -> PresentationSpec:
    return artin_presentation(diagram_ngon(n))


def cycle_quotient(n: int) -> PresentationSpec:
    """G_0: A(Delta_n) modulo the cycle commutator of a1..an."""
    base = ngon_presentation(n)
    return quotient_presentation(base, [cycle_commutator(base.generator_words())],
                                 ['cc'], name=f"G_0(n={n})")


def twisted_quotient(n: int, t: int) -> PresentationSpec:
    """G_t: A(Delta_n) modulo the t-twisted cycle commutator of a1..an."""
    check_range('n', n, 4)
    check_range('t', t, 1, n - 2)
    base = ngon_presentation(n)
    return quotient_presentation(base, [twisted_cycle_commutator(base.generator_words(), t)],
                                 [f"tc_{t}"], name=f"G_{t}(n={n})")


def ngon_quotient(n: int, t: int = 0) -> PresentationSpec:
    """t = 0 selects the cycle quotient."""
    return cycle_quotient(n) if t == 0 else twisted_quotient(n, t)


def flag_quotient(n: int, t: int) -> PresentationSpec:
    """Q(n, t): A(Delta(t, n)) modulo the twisted cycle commutator of b1, b2, b3, b4."""
    base = artin_presentation(diagram_delta_tn(n, t))
    square = gens('b1', 'b2', 'b3', 'b4')
    return quotient_presentation(base, [twisted_cycle_commutator(square, 1)], ['tc'],
                                 name=f"Q(n={n},t={t})")


def flag_cycle_quotient(n: int, t: int) -> PresentationSpec:
    """A(Delta(t, n)) modulo the cycle commutator of b1, b2, b3, b4."""
    base = artin_presentation(diagram_delta_tn(n, t))
    square = gens('b1', 'b2', 'b3', 'b4')
    return quotient_presentation(base, [cycle_commutator(square)], ['cc'],
                                 name=f"Qcc(n={n},t={t})")


# ─────────
# Export / import

GAP_TEMPLATE = """\
# {{title}}
F := FreeGroup({{names}});
AssignGeneratorVariables(F);
rels := [
{{rels}}
];
G := F / rels;
"""


def _gap_word(w: Word) -> str:
    return 'One(F)' if not w else format_word(w)


def presentation_gap(p: PresentationSpec) -> str:
    """GAP input: one relator per line, relations written as lhs / (rhs)."""
    entries = []
    for label, lhs, rhs in p.checks():
        text = f"{_gap_word(lhs)} / ({_gap_word(rhs)})" if rhs else _gap_word(lhs)
        entries.append((text, label))
    return merge(GAP_TEMPLATE, {
        'title': p.name or 'presentation',
        'names': gap_strings(p.generators),
        'rels': gap_list_body(entries),
    })


def presentation_json(p: PresentationSpec) -> dict:
    return {
        'name': p.name,
        'generators': list(p.generators),
        'relations': [{'lhs': format_word(r.lhs), 'rhs': format_word(r.rhs), 'label': r.label}
                      for r in p.relations],
        'relators': [format_word(w) for w in p.extra_relators],
        'relator_labels': list(p.relator_labels),
    }


def presentation_from_json(doc: dict) -> PresentationSpec:
    try:
        generators = doc['generators']
        relations = [Relation(parse_word(r['lhs'], generators), parse_word(r['rhs'], generators),
                              r.get('label', ''))
                     for r in doc.get('relations', [])]
        relators = [parse_word(w, generators) for w in doc.get('relators', [])]
    except (KeyError, TypeError) as ex:
        raise WordParseError(f"Malformed presentation document: {ex}") from ex
    return PresentationSpec(generators, relations, relators, doc.get('name', ''),
                            doc.get('relator_labels'))

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

import json

import pytest

from quasicox.model.diagrams import (Diagram, DiagramKind, Relation, PresentationSpec, arm_lengths,
                                     artin_presentation, coxeter_presentation, cycle_quotient,
                                     diagram_delta_tn, diagram_Dn, diagram_ngon, diagram_path,
                                     dn_presentation, flag_quotient, ngon_presentation,
                                     presentation_from_json, presentation_gap, presentation_json,
                                     rotation_map, twisted_quotient)
from quasicox.model.errors import DomainError, UnknownGeneratorError
from quasicox.model.word import cycle_commutator, gens, parse_word, twisted_cycle_commutator


def test_dn_diagram():
    d = diagram_Dn(5)
    assert d.sorted_edges() == [(1, 3), (2, 3), (3, 4), (4, 5)]
    assert d.degree(3) == 3
    assert d.is_connected()
    assert d.label == "D_5"


def test_ngon_is_a_cycle():
    d = diagram_ngon(6)
    assert len(d.edges) == 6
    assert all(d.degree(v) == 2 for v in range(1, 7))
    assert d.has_edge(6, 1)


@pytest.mark.parametrize('n,t', [(4, 1), (5, 1), (5, 2), (7, 2), (9, 3), (9, 6)])
def test_delta_tn_shape(n, t):
    d = diagram_delta_tn(n, t)
    r, s = arm_lengths(n, t)
    assert r + s == n - 4
    assert len(d.edges) == n
    assert d.is_connected()
    assert {d.has_edge(1, 2), d.has_edge(2, 3), d.has_edge(3, 4), d.has_edge(4, 1)} == {True}
    assert d.names[:4] == ('b1', 'b2', 'b3', 'b4')
    assert sum(1 for x in d.names if x.startswith('c')) == s


def test_delta_tn_square():
    assert diagram_delta_tn(4, 1).sorted_edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]


def test_delta_tn_range():
    with pytest.raises(DomainError):
        diagram_delta_tn(6, 0)
    with pytest.raises(DomainError):
        diagram_delta_tn(6, 4)


@pytest.mark.parametrize('n', [5, 6, 9])
def test_rotation_map_is_a_diagram_isomorphism(n):
    for t in range(1, n - 2):
        src, dst = diagram_delta_tn(n, t), diagram_delta_tn(n, n - 2 - t)
        rot = rotation_map(n, t)
        assert src.maps_onto(dst, rot)
        assert src.is_isomorphic(dst)


def test_diagram_is_immutable():
    d = diagram_path(3)
    with pytest.raises(AttributeError):
        d.n = 4


def test_diagram_rejects_loops():
    with pytest.raises(ValueError):
        Diagram(3, [(1, 1)], DiagramKind.PATH)


@pytest.mark.parametrize('n', [4, 5, 7])
def test_artin_presentation_counts(n):
    p = ngon_presentation(n)
    labels = [r.label for r in p.relations]
    assert len(labels) == n * (n - 1) // 2
    assert sum(1 for x in labels if x.startswith('BR')) == n
    assert "BR(a1,a2)" in labels and "BR(a1,a{})".format(n) in labels
    assert "CM(a1,a3)" in labels


def test_braid_relation_words():
    p = dn_presentation(4)
    rel = {r.label: r for r in p.relations}
    assert rel["BR(x1,x3)"] == Relation(parse_word("x1*x3*x1"), parse_word("x3*x1*x3"), "BR(x1,x3)")
    assert rel["CM(x1,x2)"].lhs == parse_word("x1*x2")


def test_coxeter_presentation_adds_orders():
    p = coxeter_presentation(diagram_path(3))
    assert [r.label for r in p.relations][-3:] == ["O(y1)", "O(y2)", "O(y3)"]
    assert p.name == "W(A_3)"


def test_quotients():
    g0 = cycle_quotient(5)
    assert g0.extra_relators == (cycle_commutator(gens('a1', 'a2', 'a3', 'a4', 'a5')),)
    assert g0.relator_labels == ('cc',)
    g2 = twisted_quotient(6, 2)
    assert g2.extra_relators[0] == twisted_cycle_commutator(g2.generator_words(), 2)
    assert g2.relators()[-1] == g2.extra_relators[0]
    assert len(g2.relators()) == 15 + 1
    with pytest.raises(DomainError):
        twisted_quotient(6, 5)


def test_flag_quotient_generators():
    q = flag_quotient(7, 2)
    assert q.generators == ('b1', 'b2', 'b3', 'b4', 'b5', 'b6', 'c7')


def test_presentation_rejects_unknown_generators():
    with pytest.raises(UnknownGeneratorError):
        PresentationSpec(['a1'], [Relation(parse_word("a1"), parse_word("a2"))])
    with pytest.raises(UnknownGeneratorError):
        ngon_presentation(4).index_of('a7')


def test_gap_export():
    text = presentation_gap(cycle_quotient(4))
    assert text.startswith("# G_0(n=4)")
    assert 'F := FreeGroup("a1", "a2", "a3", "a4");' in text
    assert "a1*a2*a1 / (a2*a1*a2),  # BR(a1,a2)" in text
    assert text.rstrip().endswith("G := F / rels;")


def test_json_export_is_readable_back(tmp_path):
    p = twisted_quotient(5, 1)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(presentation_json(p)))
    q = presentation_from_json(json.loads(path.read_text()))
    assert q == p
    assert q.relator_labels == ('tc_1',)


def test_artin_presentation_of_path():
    p = artin_presentation(diagram_path(2, 'a'))
    assert p.generators == ('a1', 'a2')
    assert [r.label for r in p.relations] == ["BR(a1,a2)"]


def test_generator_ids_and_parsing():
    p = ngon_presentation(4)
    assert [g.index for g in p.gen_ids] == [0, 1, 2, 3]
    assert p.gen_ids[2].name == 'a3'
    assert p.parse("a2*a4^-1") == parse_word("a2*a4^-1")
    with pytest.raises(UnknownGeneratorError):
        p.parse("b1")
    assert p.renamed("Art").name == "Art"
    assert p.renamed("Art") == p

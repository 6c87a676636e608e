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

import pytest

from quasicox.extension.threading import Task
from quasicox.model.diagrams import PresentationSpec, artin_presentation, diagram_path, ngon_quotient
from quasicox.model.errors import DomainError
from quasicox.model.lowindex import (are_conjugate, class_counts, count_classes_of_index, low_index_subgroups,
                                     relator_columns, satisfies)
from quasicox.model.word import parse_word


def free_cyclic():
    return PresentationSpec(['g1'], name='Z')


def test_infinite_cyclic_group():
    assert [t.size for t in low_index_subgroups(free_cyclic(), 2)] == [1, 2]
    assert class_counts(free_cyclic(), 4) == [1, 1, 1, 1]


def test_finite_cyclic_group():
    z6 = PresentationSpec(['g1'], extra_relators=[parse_word("g1^6")], name='Z/6')
    assert class_counts(z6, 6) == [1, 1, 1, 0, 0, 1]


def test_symmetric_group_s3():
    s3 = artin_presentation(diagram_path(2, 'a'))
    s3 = PresentationSpec(s3.generators, s3.relations,
                          [parse_word("a1^2"), parse_word("a2^2")], 'Sym(3)')
    assert class_counts(s3, 6) == [1, 1, 1, 0, 0, 1]


def test_relator_columns():
    p = PresentationSpec(['g1', 'g2'], extra_relators=[parse_word("g1*g2^-1")])
    assert [c.tolist() for c in relator_columns(p)] == [[0, 3]]


def test_index_one():
    assert count_classes_of_index(ngon_quotient(4, 0), 1) == 1


def test_max_index_range():
    with pytest.raises(DomainError):
        low_index_subgroups(free_cyclic(), 0)
    with pytest.raises(DomainError):
        low_index_subgroups(free_cyclic(), 99)


def test_tables_satisfy_the_relators():
    p = ngon_quotient(4, 1)
    tables = low_index_subgroups(p, 3)
    assert tables
    for t in tables:
        assert t.is_valid()
        assert satisfies(t, p)


def test_representatives_are_not_conjugate():
    tables = low_index_subgroups(ngon_quotient(4, 0), 3)
    for i, a in enumerate(tables):
        assert are_conjugate(a, a)
        for b in tables[i + 1:]:
            assert not are_conjugate(a, b)


@pytest.mark.slow
def test_index_four_classes_of_the_cycle_quotient():
    assert count_classes_of_index(ngon_quotient(4, 0), 4) == 9


@pytest.mark.slow
def test_index_four_classes_of_the_twisted_quotient():
    assert count_classes_of_index(ngon_quotient(4, 1), 4) == 8


@pytest.mark.slow
def test_counts_do_not_depend_on_threads():
    p = ngon_quotient(4, 1)
    single = class_counts(p, 4)
    Task.configure(3)
    try:
        assert class_counts(p, 4) == single
    finally:
        Task.configure(1)

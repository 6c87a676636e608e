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

import random

import pytest

from quasicox.model.diagrams import cycle_quotient, ngon_presentation, ngon_quotient
from quasicox.model.errors import DomainError
from quasicox.model.perm import evaluate, ngon_signed_assignment, pair_action, sigma_assignment
from quasicox.model.schreier import (RHO_ROWS, Transversal, exponent_vector, gamma_closed_form, gamma_vectors,
                                     generic_schreier_rewrite, pair_coset_table, pair_rep, pair_rewriter,
                                     pair_transversal, point_coset_table, point_transversal, relator_rows,
                                     rho_extend, rho_row, rho_step, rho_table, s2_relators, schreier_rewriter,
                                     subgroup_presentation, subgroup_rewriter, verify_rho_table, xi_generators)
from quasicox.model.word import EMPTY, Letter, Word, gen, parse_word, substitute


def random_word(rng, n, length):
    return Word([Letter(f"a{rng.randint(1, n)}", rng.choice((1, -1))) for _ in range(length)])


@pytest.mark.parametrize('n', [4, 5, 7])
def test_coset_tables(n):
    pairs = pair_coset_table(n)
    assert pairs.size == n * (n - 1) // 2
    assert pairs.labels[0] == (1, 2)
    assert pairs.is_valid()
    points = point_coset_table(n)
    assert points.size == n
    assert points.is_valid()


def test_coset_table_is_immutable():
    table = pair_coset_table(5)
    with pytest.raises(AttributeError):
        table.base = ''
    with pytest.raises(ValueError):
        table.action[0, 0] = 3


def test_pair_representatives():
    assert pair_rep(1, 2) == EMPTY
    assert pair_rep(1, 3) == gen('a2')
    assert pair_rep(2, 4) == parse_word("a2*a3*a1")


@pytest.mark.parametrize('n', [4, 6])
def test_transversals_are_prefix_closed(n):
    assert pair_transversal(n).is_prefix_closed()
    assert point_transversal(n).is_prefix_closed()
    assert len(pair_transversal(n)) == n * (n - 1) // 2


def test_transversal_validation():
    table = pair_coset_table(4)
    reps = list(pair_transversal(4).reps)
    reps[1], reps[2] = reps[2], reps[1]
    with pytest.raises(ValueError):
        Transversal(reps, table)


@pytest.mark.parametrize('n', [4, 5, 8])
def test_xi_generators_fix_the_base_pair(n):
    xi = xi_generators(n)
    assert [g.name for g in xi] == [f"y{i}" for i in range(1, n + 2)]
    assert xi[n - 2].definition == parse_word("a2^2")
    table = pair_coset_table(n)
    for g in xi:
        assert table.trace(0, g.definition) == 0


@pytest.mark.parametrize('n', [4, 5, 6, 9])
def test_rho_rows_are_exhaustive(n):
    table = rho_table(n)
    assert len(table.step) == n * n * (n - 1) // 2
    assert len(table.back) == len(table.step)


def test_rho_row_labels():
    assert len(RHO_ROWS) == 12
    assert rho_row(6, 2, 3, 5).label == 'l<m<n'
    assert rho_step(6, 2, 3, 5) == (gen('y4'), (2, 3))
    assert rho_step(6, 1, 4, 6) == (parse_word("y6*y7^-1"), (4, 6))
    assert rho_step(6, 2, 3, 2) == (gen('y1'), (2, 3))
    assert rho_step(6, 1, 2, 2)[1] == (1, 3)


def test_rho_row_range():
    with pytest.raises(DomainError):
        rho_row(5, 3, 3, 1)
    with pytest.raises(DomainError):
        rho_row(5, 1, 2, 6)


@pytest.mark.parametrize('n', range(4, 9))
def test_rho_table_in_finite_quotients(n):
    assert verify_rho_table(n) == []


@pytest.mark.slow
@pytest.mark.parametrize('n', range(9, 13))
def test_rho_table_in_finite_quotients_large(n):
    assert verify_rho_table(n) == []


@pytest.mark.parametrize('n', [5, 6])
def test_rho_extend_follows_the_pair_action(n):
    rng = random.Random(n)
    table = pair_coset_table(n)
    sigma = sigma_assignment(n)
    signed = ngon_signed_assignment(n)
    rewriter = pair_rewriter(n)
    for _ in range(50):
        w = random_word(rng, n, rng.randint(0, 12))
        start = rng.randrange(table.size)
        word, end = rho_extend(n, table.labels[start], w)
        assert end == table.labels[table.trace(start, w)]
        if start == 0 and end == (1, 2):
            expanded = rewriter.expand(word)
            assert evaluate(sigma, expanded) == evaluate(sigma, w)
            assert evaluate(signed, expanded) == evaluate(signed, w)


def test_rho_extend_of_empty_word():
    assert rho_extend(5, (2, 4), EMPTY) == (EMPTY, (2, 4))


@pytest.mark.parametrize('n', [4, 5, 7])
def test_s2_relators_of_the_pair_generators_are_empty(n):
    assert all(not w for _, w in s2_relators(pair_rewriter(n)))
    last = xi_generators(n)[-1]
    assert rho_extend(n, (1, 2), last.definition) == (gen(f"y{n + 1}"), (1, 2))


@pytest.mark.parametrize('n', [4, 5, 6])
def test_generic_rewriter_generator_counts(n):
    m = n * (n - 1) // 2
    assert len(subgroup_rewriter(n, 'pair-generic').generators) == m * n - (m - 1)
    assert len(subgroup_rewriter(n, 'point').generators) == n * n - (n - 1)


@pytest.mark.parametrize('n', [4, 6])
def test_generic_rewrite_expands_back(n):
    transversal = pair_transversal(n)
    rewriter = schreier_rewriter(transversal)
    for g in xi_generators(n):
        w = generic_schreier_rewrite(transversal.table, transversal, g.definition)
        assert rewriter.expand(w) == g.definition
    rng = random.Random(17)
    for _ in range(40):
        w = random_word(rng, n, rng.randint(1, 10))
        word, end = rewriter.rewrite(w, 0)
        assert rewriter.expand(word) == w * ~transversal[end]


@pytest.mark.parametrize('n', range(5, 9))
def test_rho_rows_agree_with_generic_rewrite_when_abelianized(n):
    pair, generic = pair_rewriter(n), subgroup_rewriter(n, 'pair-generic')
    in_y = {}
    for s in generic.generators:
        word, end = pair.rewrite(s.definition, 0)
        assert end == 0
        in_y[s.name] = word
    names = pair.names
    for t in (0, 1):
        p = ngon_quotient(n, t)
        relators = [r.lhs * ~r.rhs for r in p.relations] + list(p.extra_relators)
        for c in range(pair.table.size):
            for w in relators:
                rho_word, end = pair.rewrite(w, c)
                generic_word, generic_end = generic.rewrite(w, c)
                assert end == generic_end == c
                assert exponent_vector(substitute(generic_word, in_y), names) == exponent_vector(rho_word, names)


def test_subgroup_rewriter_rejects_unknown():
    with pytest.raises(ValueError):
        subgroup_rewriter(5, 'triple')


@pytest.mark.parametrize('n', [4, 5, 6])
def test_subgroup_presentation_counts(n):
    m = n * (n - 1) // 2
    p = subgroup_presentation(ngon_presentation(n), pair_rewriter(n))
    assert p.generators == tuple(f"y{i}" for i in range(1, n + 2))
    assert len(p.relations) == m * m
    assert p.extra_relators == ()


def test_subgroup_presentation_of_cycle_quotient():
    n = 6
    q = cycle_quotient(n)
    rewriter = pair_rewriter(n)
    p = subgroup_presentation(q, rewriter)
    assert len(p.extra_relators) == n * (n - 1) // 2
    rows = dict(relator_rows(q.extra_relators, q.relator_labels, rewriter))
    assert set(rows) == {f"cc@{pair}" for pair in pair_coset_table(n).labels}


@pytest.mark.parametrize('n,t,l', [(5, 1, 3), (6, 1, 5), (6, 2, 3), (7, 2, 5)])
def test_gamma_closed_forms(n, t, l):
    assert gamma_vectors(n, t, l) == gamma_closed_form(n, t, l)


def test_gamma_cycle_case():
    for n in (5, 6, 8):
        for l in range(3, n + 1):
            assert gamma_vectors(n, 0, l) == gamma_closed_form(n, 0, l)

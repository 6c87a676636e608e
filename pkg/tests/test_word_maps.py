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

from quasicox.model.diagrams import cycle_quotient, dn_presentation
from quasicox.model.errors import DomainError, UnknownGeneratorError
from quasicox.model.perm import check_relations, delta_tn_sigma_assignment
from quasicox.model.word import gen, parse_word
from quasicox.model.word_maps import (GeneratorMap, apply, compose_maps, corrupted, exponent_sum_profile,
                                      identity_map, map_inversion, map_prop31, map_prop32, map_prop33,
                                      map_rotation, map_thm11, pair_map, pullback, quotient_assignments,
                                      relations_map_exactly, verify_in_quotient, verify_pair)


def pair_cases(low, high):
    for n in range(low, high + 1):
        yield 'prop31', n, 1
        yield 'prop32', n, 1
        yield 'inversion', n, 1
        for t in range(1, n - 2):
            yield 'prop33', n, t
            yield 'thm11', n, t


def test_prop31_table():
    m = map_prop31(5, 'fwd')
    assert m.table() == {
        'a1': 'x1', 'a2': 'x3', 'a3': 'x4', 'a4': 'x5',
        'a5': 'x5^-1*x4^-1*x3^-1*x2*x3*x4*x5',
    }
    bwd = map_prop31(5, 'bwd')
    assert bwd.image['x2'] == parse_word("a2*a3*a4*a5*a4^-1*a3^-1*a2^-1")
    assert bwd.image['x4'] == gen('a3')


def test_thm11_is_the_identity_correspondence_for_n4():
    assert map_thm11(4, 1, 'fwd').table() == {'b1': 'a1', 'b2': 'a2', 'b3': 'a3', 'b4': 'a4'}
    assert map_thm11(4, 1, 'bwd').table() == {'a1': 'b1', 'a2': 'b2', 'a3': 'b3', 'a4': 'b4'}


def test_prop33_is_the_identity_for_t1():
    m = map_prop33(6, 1, 'fwd')
    assert all(w == gen(g) for g, w in m.image.items())


def test_map_names_and_ends():
    m = map_prop32(6, 'bwd')
    assert m.name == 'prop32.bwd'
    assert m.source.generators == dn_presentation(6).generators
    assert map_inversion(5, 'fwd').target.relator_labels == ('tc_3',)


def test_map_parameter_errors():
    with pytest.raises(DomainError):
        map_prop31(3)
    with pytest.raises(DomainError):
        map_prop31(5, 'sideways')
    with pytest.raises(DomainError):
        map_thm11(6, 4)
    with pytest.raises(DomainError):
        map_rotation(4, 1)
    with pytest.raises(DomainError):
        pair_map('prop99', 5, 1, 'fwd')


def test_generator_map_validation():
    g0, dn = cycle_quotient(4), dn_presentation(4)
    with pytest.raises(UnknownGeneratorError):
        GeneratorMap(g0, dn, {'a1': gen('x1')}, 'partial')
    image = {g: gen('x1') for g in g0.generators}
    image['a2'] = gen('a2')
    with pytest.raises(UnknownGeneratorError):
        GeneratorMap(g0, dn, image, 'foreign')
    m = GeneratorMap(g0, dn, {g: gen('x1') for g in g0.generators}, 'constant')
    with pytest.raises(AttributeError):
        m.name = 'other'


def test_apply_and_compose():
    fwd, bwd = map_prop31(4, 'fwd'), map_prop31(4, 'bwd')
    both = compose_maps(fwd, bwd)
    assert both.source == fwd.source and both.target == fwd.source
    assert apply(both, gen('a1')) == gen('a1')
    assert fwd(parse_word("a1*a2^-1")) == parse_word("x1*x3^-1")
    ident = identity_map(fwd.source)
    assert apply(ident, parse_word("a4*a1")) == parse_word("a4*a1")


@pytest.mark.parametrize('kind,n,t', [('dn', 5, 0), ('cycle', 5, 0), ('twisted', 6, 2),
                                      ('flag_cycle', 6, 1), ('flag_cycle', 7, 3), ('flag', 6, 2)])
def test_quotient_assignments_are_available(kind, n, t):
    found = quotient_assignments(kind, n, t)
    assert found
    for a in found:
        assert check_relations(a) == []


@pytest.mark.parametrize('pair,n,t', list(pair_cases(4, 7)))
def test_map_pairs_hold_in_finite_quotients(pair, n, t):
    checks = verify_pair(pair, n, t)
    assert checks
    assert [c for c in checks if not c.passed] == []


@pytest.mark.slow
@pytest.mark.parametrize('pair,n,t', list(pair_cases(8, 12)))
def test_map_pairs_hold_in_finite_quotients_large(pair, n, t):
    assert all(c.passed for c in verify_pair(pair, n, t))


@pytest.mark.parametrize('n', [4, 5])
def test_corrupted_map_is_caught(n):
    checks = verify_pair('prop31', n, corrupt=True)
    failed = [c for c in checks if not c.passed]
    assert failed
    assert any('~corrupt' in c.map for c in failed)
    assert all(f.label for c in failed for f in c.failures)


def test_corrupted_drops_one_letter():
    m = map_prop31(5, 'fwd')
    bad = corrupted(m)
    assert len(bad.image['a5']) == len(m.image['a5']) - 1
    assert bad.name == 'prop31.fwd~corrupt(a5)'


@pytest.mark.parametrize('kind,n,t', [('flag', 5, 1), ('flag', 7, 2), ('flag_cycle', 6, 1), ('flag_cycle', 7, 3)])
def test_source_quotients_do_not_come_only_from_the_map(kind, n, t):
    names = [a.name for a in quotient_assignments(kind, n, t)]
    assert names[:2] == [f"delta_tn_sigma_{n}_{t}", f"delta_tn_signed_{n}_{t}"]
    assert len(names) > 2


@pytest.mark.parametrize('pair,n,t', [('thm11', 6, 2), ('prop32', 6, 1), ('prop33', 7, 2)])
def test_broken_backward_map_is_caught_in_a_direct_source_quotient(pair, n, t):
    bwd = corrupted(pair_map(pair, n, t, 'bwd'))
    direct = delta_tn_sigma_assignment(n, t, bwd.target)
    assert check_relations(direct) == []
    assert verify_in_quotient(bwd, direct)


def test_pullback_gives_a_quotient_of_the_source():
    m = map_prop31(6, 'fwd')
    for a in quotient_assignments('dn', 6):
        b = pullback(m, a)
        assert b.presentation is m.source
        assert check_relations(b) == []
        assert verify_in_quotient(m, a) == []


@pytest.mark.parametrize('n', [5, 6, 7, 9])
def test_rotation_carries_relations_onto_relations(n):
    for t in range(1, n - 2):
        assert relations_map_exactly(map_rotation(n, t)) == []


def test_exponent_sum_profile():
    profile = exponent_sum_profile(map_prop31(5, 'fwd'))
    assert profile == {'a1': 1, 'a2': 1, 'a3': 1, 'a4': 1, 'a5': 1}
    assert set(exponent_sum_profile(map_inversion(5, 'bwd')).values()) == {-1}

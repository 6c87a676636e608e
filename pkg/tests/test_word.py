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

from quasicox.model.errors import ArityError, DomainError, UnknownGeneratorError, WordParseError
from quasicox.model.word import (EMPTY, Letter, Word, commutator, conjugate, cycle_commutator, exponent_sums,
                                 format_word, gen, gens, invert, parse_word, power, product, substitute,
                                 product_of, reduce, twisted_cycle_commutator)


def w(text):
    return parse_word(text)


def test_words_are_freely_reduced():
    assert Word([('a1', 1), ('a2', 1), ('a2', -1), ('a1', -1)]) == EMPTY
    assert w("a1*a2*a2^-1*a3") == w("a1*a3")
    assert len(w("a1^3*a1^-2")) == 1


def test_word_is_immutable():
    x = gen('a1')
    with pytest.raises(AttributeError):
        x.letters = ()


def test_bad_sign_is_rejected():
    with pytest.raises(WordParseError):
        Word([('a1', 2)])


def test_inverse_and_power():
    x = w("a1*a2^-1*a3")
    assert invert(x) == w("a3^-1*a2*a1^-1")
    assert product(x, invert(x)).is_identity
    assert ~x == invert(x)
    assert power(x, 0) == EMPTY
    assert power(x, -2) == product(invert(x), invert(x))
    assert x ** 3 == x * x * x


def test_commutator_and_conjugate_conventions():
    a, b = gens('a1', 'a2')
    assert commutator(a, b) == w("a1^-1*a2^-1*a1*a2")
    assert conjugate(a, b) == w("a2^-1*a1*a2")


@pytest.mark.parametrize('n', [3, 4, 5, 8])
def test_cycle_commutator_length(n):
    ys = gens(*[f"y{i}" for i in range(1, n + 1)])
    c = cycle_commutator(ys)
    assert len(c) == 4 * n - 4
    assert Word(c.letters) == c


def test_cycle_commutator_small_case():
    a1, a2, a3 = gens('a1', 'a2', 'a3')
    assert cycle_commutator([a1, a2, a3]) == commutator(a1, a2 * a3 * ~a2)


def test_cycle_commutator_arity():
    with pytest.raises(ArityError):
        cycle_commutator(gens('a1', 'a2'))


@pytest.mark.parametrize('n,t', [(4, 1), (4, 2), (6, 1), (6, 3), (7, 5)])
def test_twisted_cycle_commutator(n, t):
    ys = gens(*[f"a{i}" for i in range(1, n + 1)])
    c = twisted_cycle_commutator(ys, t)
    assert len(c) == 4 * n - 4
    inner = c.letters[1:2 * n - 2]
    assert inner[:t] == tuple(Letter(f"a{i}", -1) for i in range(2, t + 2))
    assert exponent_sums(c) == {}


def test_twisted_cycle_commutator_errors():
    ys = gens('a1', 'a2', 'a3', 'a4', 'a5')
    with pytest.raises(DomainError):
        twisted_cycle_commutator(ys, 0)
    with pytest.raises(DomainError):
        twisted_cycle_commutator(ys, 4)
    with pytest.raises(ArityError):
        twisted_cycle_commutator(ys[:3], 1)


def test_exponent_sums():
    assert exponent_sums(w("a1^2*a2^-1*a1^-1*a3")) == {'a1': 1, 'a2': -1, 'a3': 1}
    assert exponent_sums(commutator(gen('a1'), gen('a2'))) == {}


def test_substitute():
    table = {'x1': w("a1*a2"), 'x2': w("a2^-1")}
    assert substitute(w("x1*x2"), table) == gen('a1')
    assert substitute(w("x1^-1"), table) == w("a2^-1*a1^-1")
    with pytest.raises(UnknownGeneratorError):
        substitute(w("x3"), table)


@pytest.mark.parametrize('text,expected', [
    ("1", "1"),
    ("", "1"),
    ("a1", "a1"),
    ("a1*a1*a2^-1", "a1^2*a2^-1"),
    (" b3 ^ -2 * c1 ", "b3^-2*c1"),
])
def test_format_word(text, expected):
    assert format_word(parse_word(text)) == expected


@pytest.mark.parametrize('text', ["a1**a2", "a1^0", "A1", "a1^x", "ab"])
def test_parse_errors(text):
    with pytest.raises(WordParseError):
        parse_word(text)


def test_parse_unknown_generator():
    with pytest.raises(UnknownGeneratorError):
        parse_word("a1*a9", ['a1', 'a2'])


def test_reduce_and_product_of():
    assert reduce([('a1', 1), ('a1', -1), ('a2', 1)]) == gen('a2')
    assert product_of(gens('a1', 'a2', 'a3')) == w("a1*a2*a3")
    assert w("a3*a1*a3^-1").generators() == ['a3', 'a1']

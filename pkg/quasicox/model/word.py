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
Free group words over named generators.

Words are immutable and always stored freely reduced. Letters are
(generator name, sign) pairs with sign in {+1, -1}.

Conventions:
    commutator  [g, h] = g^-1 h^-1 g h
    conjugation g^h    = h^-1 g h
"""

from collections import Counter
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple, Union
import re

from quasicox.model.errors import ArityError, UnknownGeneratorError, WordParseError, check_range


class GenId(NamedTuple):
    """Generator name and its ordinal in a presentation's generator list."""
    name: str
    index: int


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> 'Letter':
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen if self.sign > 0 else f"{self.gen}^-1"


LetterLike = Union[Letter, Tuple[str, int]]


def _free_reduce(letters: Iterable[LetterLike]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for name, sign in letters:
        if sign not in (1, -1):
            raise WordParseError(f"Letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1].gen == name and stack[-1].sign == -sign:
            stack.pop()
        else:
            stack.append(Letter(name, sign))
    return tuple(stack)


class Word:
    """
    Freely reduced word. Supports w * v, ~w (inverse), w ** k, len, iteration.
    """

    # ! Using __slots__ to make this class Immutable.
    # ! Words are used as dict keys and shared between threads, so the
    # ! hash is computed once on creation.
    __slots__ = ['letters', '_ihash']

    def __init__(self, letters: Iterable[LetterLike] = ()):
        reduced = _free_reduce(letters)
        super().__setattr__('letters', reduced)
        super().__setattr__('_ihash', hash(reduced))

    @classmethod
    def _trusted(cls, letters: Tuple[Letter, ...]) -> 'Word':
        w = cls.__new__(cls)
        object.__setattr__(w, 'letters', letters)
        object.__setattr__(w, '_ihash', hash(letters))
        return w

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __hash__(self):
        return self._ihash

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._ihash == other._ihash and self.letters == other.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: 'Word') -> 'Word':
        if not isinstance(other, Word):
            return NotImplemented
        if not other.letters:
            return self
        if not self.letters:
            return other
        return Word(self.letters + other.letters)

    def __invert__(self) -> 'Word':
        return invert(self)

    def __pow__(self, k: int) -> 'Word':
        return power(self, k)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> List[str]:
        """Distinct generator names in order of first occurrence."""
        return list(dict.fromkeys(letter.gen for letter in self.letters))


EMPTY = Word()


def gen(name: str, sign: int = 1) -> Word:
    """Single letter word."""
    return Word._trusted((Letter(name, sign),))


def gens(*names: str) -> List[Word]:
    return [gen(name) for name in names]


def reduce(letters: Iterable[LetterLike]) -> Word:
    """Freely reduce a raw letter sequence."""
    return Word(letters)


def invert(w: Word) -> Word:
    return Word._trusted(tuple(letter.inverse() for letter in reversed(w.letters)))


def product(*words: Word) -> Word:
    letters = []
    for w in words:
        letters.extend(w.letters)
    return Word(letters)


def product_of(words: Iterable[Word]) -> Word:
    return product(*words)


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(invert(w), -k)
    return Word(w.letters * k)


def conjugate(g: Word, h: Word) -> Word:
    """g^h = h^-1 g h"""
    return product(invert(h), g, h)


def commutator(g: Word, h: Word) -> Word:
    """[g, h] = g^-1 h^-1 g h"""
    return product(invert(g), invert(h), g, h)


def cycle_commutator(ys: Sequence[Word]) -> Word:
    """
    [y1, y2 ... y(n-1) yn y(n-1)^-1 ... y2^-1] for n >= 3.
    """
    if len(ys) < 3:
        raise ArityError(f"cycle commutator needs at least 3 words, got {len(ys)}")
    prefix = product(*ys[1:-1])
    return commutator(ys[0], product(prefix, ys[-1], invert(prefix)))


def twisted_cycle_commutator(ys: Sequence[Word], t: int) -> Word:
    """
    t-twisted cycle commutator for n >= 4 and 1 <= t <= n-2:
    [y1, y2^-1 ... y(t+1)^-1 y(t+2) ... y(n-1) yn y(n-1)^-1 ... y(t+2)^-1 y(t+1) ... y2]
    """
    n = len(ys)
    if n < 4:
        raise ArityError(f"twisted cycle commutator needs at least 4 words, got {n}")
    check_range('t', t, 1, n - 2)
    prefix = product(*(invert(y) for y in ys[1:t + 1]), *ys[t + 1:n - 1])
    return commutator(ys[0], product(prefix, ys[-1], invert(prefix)))


def exponent_sums(w: Word) -> Counter:
    sums = Counter()
    for letter in w.letters:
        sums[letter.gen] += letter.sign
    return Counter({g: e for g, e in sums.items() if e})


def substitute(w: Word, table: Mapping[str, Word]) -> Word:
    """
    Monoid substitution generator -> word, inverse letters map to inverse images.
    Raises UnknownGeneratorError for generators missing from the table.
    """
    letters: List[Letter] = []
    inverses: Dict[str, Tuple[Letter, ...]] = {}
    for letter in w.letters:
        try:
            image = table[letter.gen]
        except KeyError:
            raise UnknownGeneratorError(letter.gen) from None
        if letter.sign > 0:
            letters.extend(image.letters)
        else:
            inv = inverses.get(letter.gen)
            if inv is None:
                inv = inverses[letter.gen] = invert(image).letters
            letters.extend(inv)
    return Word(letters)


# ─────────
# Text form

NAME_RE = re.compile(r'[a-z][0-9]+\Z')
TERM_RE = re.compile(r'\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*([+-]?\s*[0-9]+))?\s*\Z')


def parse_word(text: str, generators: Iterable[str] = None) -> Word:
    """
    Parse "a1*a2^-1*a3^2". Empty text or "1" is the empty word.
    When generators is given, names outside it raise UnknownGeneratorError.
    """
    if text is None:
        raise WordParseError("Cannot parse None as a word")
    text = text.strip()
    if text in ('', '1'):
        return EMPTY
    known = None if generators is None else set(generators)
    letters: List[Letter] = []
    for term in text.split('*'):
        m = TERM_RE.match(term)
        if not m:
            raise WordParseError(f"Malformed term {term.strip()!r} in {text!r}")
        name, exp = m.group(1), m.group(2)
        if not NAME_RE.match(name):
            raise WordParseError(f"Malformed generator name {name!r} in {text!r}")
        if known is not None and name not in known:
            raise UnknownGeneratorError(name)
        k = 1
        if exp is not None:
            k = int(exp.replace(' ', ''))
            if k == 0:
                raise WordParseError(f"Zero exponent in {term.strip()!r}")
        sign = 1 if k > 0 else -1
        letters.extend([Letter(name, sign)] * abs(k))
    return Word(letters)


def format_word(w: Word) -> str:
    """Inverse of parse_word; runs of one letter are written as powers."""
    if not w.letters:
        return '1'
    terms = []
    run_letter, run = None, 0
    for letter in w.letters:
        if letter == run_letter:
            run += 1
            continue
        if run_letter is not None:
            terms.append(_term(run_letter, run))
        run_letter, run = letter, 1
    terms.append(_term(run_letter, run))
    return '*'.join(terms)


def _term(letter: Letter, run: int) -> str:
    exp = run * letter.sign
    return letter.gen if exp == 1 else f"{letter.gen}^{exp}"

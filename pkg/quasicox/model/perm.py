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
Finite quotients: permutations and signed permutations, generator
assignments, word evaluation and relation checks.

Permutations compose left to right: (p*q)(x) = q(p(x)).
"""

from itertools import combinations
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple, Union

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from quasicox.model.diagrams import (PresentationSpec, arm_lengths, artin_presentation, delta_tn_names,
                                     diagram_delta_tn, dn_presentation, ngon_presentation)
from quasicox.model.errors import DegreeMismatchError, UnassignedGeneratorError, check_range
from quasicox.model.word import Word


class Perm:
    """
    Permutation of 1..n stored 0-based: images[i] is the image of point i+1, minus one.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['images', '_ihash']

    def __init__(self, images: Sequence[int]):
        arr = np.asarray(images, dtype=np.int64).copy()
        arr.setflags(write=False)
        super().__setattr__('images', arr)
        super().__setattr__('_ihash', hash(arr.tobytes()))

    @classmethod
    def from_points(cls, images: Sequence[int]) -> 'Perm':
        """Images given 1-based."""
        return cls([i - 1 for i in images])

    @classmethod
    def identity(cls, degree: int) -> 'Perm':
        return cls(np.arange(degree))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> 'Perm':
        arr = np.arange(degree)
        arr[i - 1], arr[j - 1] = j - 1, i - 1
        return cls(arr)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> 'Perm':
        arr = np.arange(degree)
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                arr[a - 1] = b - 1
        return cls(arr)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __hash__(self):
        return self._ihash

    def __eq__(self, other):
        return isinstance(other, Perm) and np.array_equal(self.images, other.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return int(self.images[point - 1]) + 1

    def __mul__(self, other: 'Perm') -> 'Perm':
        return compose(self, other)

    def inverse(self) -> 'Perm':
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree)
        return Perm(inv)

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def to_sympy(self) -> Permutation:
        return Permutation([int(i) for i in self.images], size=self.degree)

    def cycles(self) -> List[Tuple[int, ...]]:
        return [tuple(p + 1 for p in c) for c in self.to_sympy().cyclic_form]

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Perm{str(self)}"


class SignedPerm:
    """
    Signed permutation of 1..n: point i+1 goes to signs[i] * (images[i] + 1).
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['images', 'signs', '_ihash']

    def __init__(self, images: Sequence[int], signs: Sequence[int]):
        arr = np.asarray(images, dtype=np.int64).copy()
        sg = np.asarray(signs, dtype=np.int64).copy()
        if arr.shape != sg.shape:
            raise DegreeMismatchError("images and signs differ in length")
        arr.setflags(write=False)
        sg.setflags(write=False)
        super().__setattr__('images', arr)
        super().__setattr__('signs', sg)
        super().__setattr__('_ihash', hash((arr.tobytes(), sg.tobytes())))

    @classmethod
    def from_signed_points(cls, images: Sequence[int]) -> 'SignedPerm':
        """[2, -1, 3] style: entry i is the signed image of point i+1."""
        return cls([abs(i) - 1 for i in images], [1 if i > 0 else -1 for i in images])

    @classmethod
    def identity(cls, degree: int) -> 'SignedPerm':
        return cls(np.arange(degree), np.ones(degree, dtype=np.int64))

    @classmethod
    def transposition(cls, degree: int, i: int, j: int, negative: bool = False) -> 'SignedPerm':
        """Swap i and j; the negative variant sends i -> -j and j -> -i."""
        arr = np.arange(degree)
        arr[i - 1], arr[j - 1] = j - 1, i - 1
        signs = np.ones(degree, dtype=np.int64)
        if negative:
            signs[i - 1] = signs[j - 1] = -1
        return cls(arr, signs)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __hash__(self):
        return self._ihash

    def __eq__(self, other):
        return (isinstance(other, SignedPerm)
                and np.array_equal(self.images, other.images)
                and np.array_equal(self.signs, other.signs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Signed image of a signed point."""
        i = abs(point) - 1
        image = int(self.images[i]) + 1
        sign = int(self.signs[i]) * (1 if point > 0 else -1)
        return sign * image

    def __mul__(self, other: 'SignedPerm') -> 'SignedPerm':
        return compose(self, other)

    def inverse(self) -> 'SignedPerm':
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree)
        signs = np.empty_like(self.signs)
        signs[self.images] = self.signs
        return SignedPerm(inv, signs)

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)) and np.all(self.signs == 1))

    @property
    def is_even(self) -> bool:
        """Even number of sign changes, i.e. an element of W(D_n)."""
        return int(np.count_nonzero(self.signs < 0)) % 2 == 0

    def underlying(self) -> Perm:
        return Perm(self.images)

    def to_sympy(self) -> Permutation:
        """Action on the 2n points +1..+n, -1..-n (indices 0..n-1, n..2n-1)."""
        n = self.degree
        arr = [0] * (2 * n)
        for i in range(n):
            img = int(self.images[i])
            pos = img if self.signs[i] > 0 else img + n
            neg = img + n if self.signs[i] > 0 else img
            arr[i] = pos
            arr[i + n] = neg
        return Permutation(arr, size=2 * n)

    def __str__(self) -> str:
        return "[" + ", ".join(str(int(s) * (int(i) + 1)) for i, s in zip(self.images, self.signs)) + "]"

    def __repr__(self) -> str:
        return f"SignedPerm{str(self)}"


Element = Union[Perm, SignedPerm]


def compose(p: Element, q: Element) -> Element:
    """p then q."""
    if type(p) is not type(q):
        raise DegreeMismatchError(f"Cannot compose {type(p).__name__} with {type(q).__name__}")
    if p.degree != q.degree:
        raise DegreeMismatchError(f"Cannot compose degree {p.degree} with degree {q.degree}")
    if isinstance(p, Perm):
        return Perm(q.images[p.images])
    return SignedPerm(q.images[p.images], p.signs * q.signs[p.images])


def identity_like(p: Element) -> Element:
    return type(p).identity(p.degree)


class Assignment:
    """
    One group element per generator of a presentation. Immutable.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['presentation', 'images', 'name', '_inverses', '_identity']

    def __init__(self, presentation: PresentationSpec, images: Mapping[str, Element], name: str = ''):
        images = dict(images)
        if not images:
            raise UnassignedGeneratorError(presentation.generators[0] if presentation.generators else '?')
        kinds = {type(e) for e in images.values()}
        degrees = {e.degree for e in images.values()}
        if len(kinds) != 1 or len(degrees) != 1:
            raise DegreeMismatchError(f"Assignment {name!r} mixes element kinds or degrees")
        for g in images:
            presentation.index_of(g)
        first = next(iter(images.values()))
        super().__setattr__('presentation', presentation)
        super().__setattr__('images', images)
        super().__setattr__('name', name)
        super().__setattr__('_inverses', {g: e.inverse() for g, e in images.items()})
        super().__setattr__('_identity', identity_like(first))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __repr__(self):
        return f"Assignment({self.name!r} on {self.presentation.name!r})"

    @property
    def degree(self) -> int:
        return self._identity.degree

    def image(self, generator: str, sign: int = 1) -> Element:
        try:
            return self.images[generator] if sign > 0 else self._inverses[generator]
        except KeyError:
            raise UnassignedGeneratorError(generator) from None

    def identity(self) -> Element:
        return self._identity

    def rebind(self, presentation: PresentationSpec, name: str = None) -> 'Assignment':
        """Same images, read as an assignment on another presentation over these generators."""
        return Assignment(presentation, self.images, self.name if name is None else name)

    def with_image(self, generator: str, element: Element) -> 'Assignment':
        images = dict(self.images)
        images[generator] = element
        return Assignment(self.presentation, images, f"{self.name}*")


def evaluate(assignment: Assignment, w: Word) -> Element:
    result = assignment.identity()
    for letter in w:
        result = compose(result, assignment.image(letter.gen, letter.sign))
    return result


class RelationFailure(NamedTuple):
    label: str
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{self.label}: {self.lhs} != {self.rhs}"


def check_relations(assignment: Assignment, presentation: PresentationSpec = None) -> List[RelationFailure]:
    """Every relation / relator of the presentation whose image is not the identity."""
    presentation = presentation or assignment.presentation
    failures = []
    for label, lhs, rhs in presentation.checks():
        left, right = evaluate(assignment, lhs), evaluate(assignment, rhs)
        if left != right:
            failures.append(RelationFailure(label, str(left), str(right)))
    return failures


# ─────────
# Standard assignments

def sigma_assignment(n: int, presentation: PresentationSpec = None) -> Assignment:
    """a_i -> (i, i+1) for i < n, a_n -> (1, n)."""
    check_range('n', n, 3)
    presentation = presentation or ngon_presentation(n)
    images = {f"a{i}": Perm.transposition(n, i, i + 1) for i in range(1, n)}
    images[f"a{n}"] = Perm.transposition(n, 1, n)
    return Assignment(presentation, images, f"sigma_{n}")


def ngon_signed_assignment(n: int, presentation: PresentationSpec = None) -> Assignment:
    """a_i -> (i, i+1) for i < n, a_n -> 1 -> -n, n -> -1 (reflection in e1 + en)."""
    check_range('n', n, 4)
    presentation = presentation or ngon_presentation(n)
    images = {f"a{i}": SignedPerm.transposition(n, i, i + 1) for i in range(1, n)}
    images[f"a{n}"] = SignedPerm.transposition(n, 1, n, negative=True)
    return Assignment(presentation, images, f"ngon_signed_{n}")


def dn_signed_assignment(n: int, presentation: PresentationSpec = None) -> Assignment:
    """x_1 -> 1 -> -2, 2 -> -1; x_2 -> (1, 2); x_i -> (i-1, i) for 3 <= i <= n."""
    check_range('n', n, 4)
    presentation = presentation or dn_presentation(n)
    images = {'x1': SignedPerm.transposition(n, 1, 2, negative=True),
              'x2': SignedPerm.transposition(n, 1, 2)}
    for i in range(3, n + 1):
        images[f"x{i}"] = SignedPerm.transposition(n, i - 1, i)
    return Assignment(presentation, images, f"dn_signed_{n}")


def dn_sigma_assignment(n: int, presentation: PresentationSpec = None) -> Assignment:
    """dn_signed_assignment with signs dropped: A(D_n) -> Sym(n)."""
    check_range('n', n, 4)
    presentation = presentation or dn_presentation(n)
    images = {'x1': Perm.transposition(n, 1, 2), 'x2': Perm.transposition(n, 1, 2)}
    for i in range(3, n + 1):
        images[f"x{i}"] = Perm.transposition(n, i - 1, i)
    return Assignment(presentation, images, f"dn_sigma_{n}")


def _delta_tn_points(n: int, t: int) -> List[Tuple[int, int]]:
    """
    Transposition of each vertex of Delta(t, n): square (1 2), (2 3), (3 4), (2 3),
    r-arm (1 5), (5 6), ..., s-arm (4 5+r), (5+r 6+r), ...
    """
    r, _ = arm_lengths(n, t)
    points = [(1, 2), (2, 3), (3, 4), (2, 3)]
    points.extend((1, 5) if j == 5 else (j - 1, j) for j in range(5, 5 + r))
    points.extend((4, j) if j == 5 + r else (j - 1, j) for j in range(5 + r, n + 1))
    return points


def delta_tn_sigma_assignment(n: int, t: int, presentation: PresentationSpec = None) -> Assignment:
    """
    A(Delta(t, n)) -> Sym(n) with b2 and b4 sharing an image, so both the cycle
    and the twisted cycle commutator of b1..b4 hold.
    """
    check_range('n', n, 4)
    check_range('t', t, 1, n - 3)
    presentation = presentation or artin_presentation(diagram_delta_tn(n, t))
    images = {g: Perm.transposition(n, i, j)
              for g, (i, j) in zip(delta_tn_names(n, t), _delta_tn_points(n, t))}
    return Assignment(presentation, images, f"delta_tn_sigma_{n}_{t}")


def delta_tn_signed_assignment(n: int, t: int, presentation: PresentationSpec = None) -> Assignment:
    """delta_tn_sigma_assignment with b1 the reflection in e1 + e2, into W(D_n)."""
    check_range('n', n, 4)
    check_range('t', t, 1, n - 3)
    presentation = presentation or artin_presentation(diagram_delta_tn(n, t))
    images = {g: SignedPerm.transposition(n, i, j, negative=(g == 'b1'))
              for g, (i, j) in zip(delta_tn_names(n, t), _delta_tn_points(n, t))}
    return Assignment(presentation, images, f"delta_tn_signed_{n}_{t}")


def chain_assignments(presentation: PresentationSpec) -> List[Assignment]:
    """Sym(k+1) and W(D_(k+1)) images of a braid chain y1 - ... - yk."""
    k = len(presentation.generators)
    names = presentation.generators
    sym = {g: Perm.transposition(k + 1, i + 1, i + 2) for i, g in enumerate(names)}
    signed = {g: SignedPerm.transposition(k + 1, i + 1, i + 2, negative=(i == 0))
              for i, g in enumerate(names)}
    return [Assignment(presentation, sym, f"chain_sigma_{k}"),
            Assignment(presentation, signed, f"chain_signed_{k}")]


# ─────────
# Actions

def pair_list(n: int) -> List[Tuple[int, int]]:
    """Unordered pairs {k, l} of 1..n in lexicographic order; {1, 2} first."""
    return list(combinations(range(1, n + 1), 2))


def pair_action(assignment: Assignment) -> Assignment:
    """Induced action of a Sym(n) assignment on the n(n-1)/2 lexicographically indexed pairs."""
    n = assignment.degree
    pairs = pair_list(n)
    index = {p: i for i, p in enumerate(pairs)}
    images = {}
    for g, element in assignment.images.items():
        if not isinstance(element, Perm):
            raise DegreeMismatchError("pair_action needs permutation images")
        arr = [index[tuple(sorted((element(k), element(l))))] for k, l in pairs]
        images[g] = Perm(arr)
    return Assignment(assignment.presentation, images, f"pairs({assignment.name})")


def point_action(assignment: Assignment) -> Assignment:
    """Action on 1..n, dropping signs of signed images."""
    images = {g: (e.underlying() if isinstance(e, SignedPerm) else e)
              for g, e in assignment.images.items()}
    return Assignment(assignment.presentation, images, f"points({assignment.name})")


def orbit(assignment: Assignment, point: int) -> List[int]:
    """Orbit of a point under the generator images, in breadth first order."""
    seen = [point]
    known = {point}
    i = 0
    while i < len(seen):
        p = seen[i]
        i += 1
        for g in assignment.presentation.generators:
            q = assignment.image(g)(p)
            if q not in known:
                known.add(q)
                seen.append(q)
    return seen


def group_order(assignment: Assignment) -> int:
    """Order of the group generated by the images."""
    group = PermutationGroup([e.to_sympy() for e in assignment.images.values()])
    return int(group.order())

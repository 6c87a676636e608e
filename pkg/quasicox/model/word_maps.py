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
Generator maps between the presentations, applied to words and checked
through finite quotients.

Directions: 'fwd' is the map whose images are words in the second group
of each pair, 'bwd' the other way round.

    prop31  G_0 = A(Delta_n)/cc         <->  A(D_n)
    prop32  A(Delta(1, n))/cc           <->  A(D_n)
    prop33  A(Delta(t, n))/cc           <->  A(Delta(1, n))/cc
    thm11   Q(n, t)                     <->  G_t
"""

from typing import Dict, List, Mapping, NamedTuple, Sequence

from quasicox.model.diagrams import (PresentationSpec, arm_lengths, cycle_quotient,
                                     dn_presentation, flag_cycle_quotient,
                                     flag_quotient, ngon_quotient, rotation_map, twisted_quotient)
from quasicox.model.errors import DomainError, UnknownGeneratorError, check_range
from quasicox.model.perm import (Assignment, RelationFailure, check_relations, delta_tn_sigma_assignment,
                                 delta_tn_signed_assignment, dn_sigma_assignment, dn_signed_assignment,
                                 evaluate, ngon_signed_assignment, sigma_assignment)
from quasicox.model.word import Letter, Word, format_word, gen, invert, product, substitute
from quasicox.settings.logging import QuasicoxLogger
from quasicox.utils.cache import PureFunctionCache

DIRECTIONS = ('fwd', 'bwd')
PAIRS = ('prop31', 'prop32', 'prop33', 'thm11')


class GeneratorMap:
    """
    Homomorphism candidate source -> target given by one target word per source generator.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['source', 'target', 'image', 'name']

    def __init__(self, source: PresentationSpec, target: PresentationSpec,
                 image: Mapping[str, Word], name: str):
        image = dict(image)
        for g in source.generators:
            if g not in image:
                raise UnknownGeneratorError(g, f"images of {name}")
        for g, w in image.items():
            source.index_of(g)
            for letter in w:
                target.index_of(letter.gen)
        super().__setattr__('source', source)
        super().__setattr__('target', target)
        super().__setattr__('image', {g: image[g] for g in source.generators})
        super().__setattr__('name', name)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __repr__(self):
        return f"GeneratorMap({self.name!r}: {self.source.name} -> {self.target.name})"

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def table(self) -> Dict[str, str]:
        return {g: format_word(w) for g, w in self.image.items()}


def apply(m: GeneratorMap, w: Word) -> Word:
    return substitute(w, m.image)


def compose_maps(m1: GeneratorMap, m2: GeneratorMap) -> GeneratorMap:
    """m1 then m2."""
    image = {g: apply(m2, w) for g, w in m1.image.items()}
    return GeneratorMap(m1.source, m2.target, image, f"{m2.name}*{m1.name}")


def identity_map(p: PresentationSpec) -> GeneratorMap:
    return GeneratorMap(p, p, {g: gen(g) for g in p.generators}, f"id({p.name})")


def corrupted(m: GeneratorMap) -> GeneratorMap:
    """Copy of m with the last letter of its longest image dropped."""
    g = max(m.source.generators, key=lambda name: len(m.image[name]))
    image = dict(m.image)
    image[g] = Word(image[g].letters[:-1])
    return GeneratorMap(m.source, m.target, image, f"{m.name}~corrupt({g})")


def _check_direction(direction: str):
    if direction not in DIRECTIONS:
        raise DomainError('direction', direction, " or ".join(DIRECTIONS))


# ─────────
# Word helpers for the tables

def _w(prefix: str, i: int, sign: int = 1) -> Word:
    return gen(f"{prefix}{i}", sign)


def _run(prefix: str, indices: Sequence[int], sign: int = 1) -> Word:
    """Product of prefix_i^sign over indices, in the given order."""
    return Word([Letter(f"{prefix}{i}", sign) for i in indices])


def _conj_by(u: Word, w: Word) -> Word:
    """u w u^-1"""
    return product(u, w, invert(u))


# ─────────
# Tables

@PureFunctionCache
def map_prop31(n: int, direction: str = 'fwd') -> GeneratorMap:
    """A(Delta_n)/cc <-> A(D_n)."""
    check_range('n', n, 4)
    _check_direction(direction)
    g0, dn = cycle_quotient(n), dn_presentation(n)
    if direction == 'fwd':
        image = {'a1': _w('x', 1)}
        for i in range(2, n):
            image[f"a{i}"] = _w('x', i + 1)
        image[f"a{n}"] = product(_run('x', range(n, 2, -1), -1), _w('x', 2), _run('x', range(3, n + 1)))
        return GeneratorMap(g0, dn, image, 'prop31.fwd')
    image = {'x1': _w('a', 1),
             'x2': _conj_by(_run('a', range(2, n)), _w('a', n))}
    for i in range(3, n + 1):
        image[f"x{i}"] = _w('a', i - 1)
    return GeneratorMap(dn, g0, image, 'prop31.bwd')


@PureFunctionCache
def map_prop32(n: int, direction: str = 'fwd') -> GeneratorMap:
    """A(Delta(1, n))/cc <-> A(D_n)."""
    check_range('n', n, 4)
    _check_direction(direction)
    q1, dn = flag_cycle_quotient(n, 1), dn_presentation(n)
    x = lambda i, s=1: _w('x', i, s)
    b = lambda i, s=1: _w('b', i, s)
    if direction == 'fwd':
        image = {'b1': x(4), 'b2': x(3), 'b3': x(1),
                 'b4': product(x(1, -1), x(3, -1), x(2), x(3), x(1))}
        for k in range(5, n + 1):
            image[f"b{k}"] = x(k)
        return GeneratorMap(q1, dn, image, 'prop32.fwd')
    image = {'x1': b(3),
             'x2': product(b(2), b(3), b(4), b(3, -1), b(2, -1)),
             'x3': b(2),
             'x4': b(1)}
    for k in range(5, n + 1):
        image[f"x{k}"] = b(k)
    return GeneratorMap(dn, q1, image, 'prop32.bwd')


@PureFunctionCache
def map_prop33(n: int, t: int, direction: str = 'fwd') -> GeneratorMap:
    """
    A(Delta(t, n))/cc <-> A(Delta(1, n))/cc. Generators b_1..b_(4+r) correspond,
    c_(5+r) is a conjugate of b_(5+r), and c_k = b_k above that. t = 1 is the identity.
    """
    check_range('n', n, 4)
    check_range('t', t, 1, n - 3)
    _check_direction(direction)
    q2, q1 = flag_cycle_quotient(n, t), flag_cycle_quotient(n, 1)
    r, _ = arm_lengths(n, t)
    image: Dict[str, Word] = {}
    arm = _run('b', range(4 + r, 4, -1))
    if direction == 'fwd':
        for i in range(1, min(4 + r, n) + 1):
            image[f"b{i}"] = _w('b', i)
        if t > 1:
            square = product(_run('b', (1, 2, 3)), _run('b', (2, 1), -1))
            image[f"c{5 + r}"] = _conj_by(product(_w('b', 5 + r), arm), square)
            for k in range(6 + r, n + 1):
                image[f"c{k}"] = _w('b', k)
        return GeneratorMap(q2, q1, image, 'prop33.fwd')
    for i in range(1, min(4 + r, n) + 1):
        image[f"b{i}"] = _w('b', i)
    if t > 1:
        image[f"b{5 + r}"] = _conj_by(product(arm, _run('b', (1, 2, 3))), _w('c', 5 + r))
        for k in range(6 + r, n + 1):
            image[f"b{k}"] = _w('c', k)
    return GeneratorMap(q1, q2, image, 'prop33.bwd')


@PureFunctionCache
def map_thm11(n: int, t: int, direction: str = 'fwd') -> GeneratorMap:
    """
    Q(n, t) <-> G_t. With r = n-3-t the square b_1..b_4 goes to conjugates of
    a_(r+2), a_n and a_1, the r-arm to a_3..a_(r+2) reversed, and c_k to a_(k-1).
    For n = 4 the presentations match letter for letter.
    """
    check_range('n', n, 4)
    check_range('t', t, 1, n - 3)
    _check_direction(direction)
    q, g = flag_quotient(n, t), twisted_quotient(n, t)
    if n == 4:
        if direction == 'fwd':
            return GeneratorMap(q, g, {f"b{i}": _w('a', i) for i in range(1, 5)}, 'thm11.fwd')
        return GeneratorMap(g, q, {f"a{i}": _w('b', i) for i in range(1, 5)}, 'thm11.bwd')
    r, _ = arm_lengths(n, t)
    a = lambda i, s=1: _w('a', i, s)
    if direction == 'fwd':
        image = {
            'b1': _conj_by(_run('a', range(2, r + 2)), a(r + 2)),
            'b2': _conj_by(product(_run('a', range(2, r + 3)), _run('a', range(r + 3, n), -1)), a(n)),
            'b3': _conj_by(_run('a', range(r + 4, n), -1), a(n)),
            'b4': a(1),
        }
        for k in range(5, r + 5):
            image[f"b{k}"] = a(r + 7 - k)
        for k in range(5 + r, n + 1):
            image[f"c{k}"] = a(k - 1)
        return GeneratorMap(q, g, image, 'thm11.fwd')
    b = lambda i, s=1: _w('b', i, s)
    image = {
        'a1': b(4),
        'a2': _conj_by(_run('b', range(r + 4, 4, -1)), b(1)),
    }
    for k in range(3, r + 3):
        image[f"a{k}"] = b(r + 7 - k)
    image[f"a{r + 3}"] = product(b(1, -1), b(2), b(3), b(2, -1), b(1))
    for k in range(r + 4, n):
        image[f"a{k}"] = _w('c', k + 1)
    image[f"a{n}"] = _conj_by(_run('c', range(n, r + 4, -1)), b(3))
    return GeneratorMap(g, q, image, 'thm11.bwd')


@PureFunctionCache
def map_inversion(n: int, direction: str = 'fwd') -> GeneratorMap:
    """G_0 <-> G_(n-2) through a_i -> a_i^-1."""
    check_range('n', n, 4)
    _check_direction(direction)
    g0, gt = cycle_quotient(n), twisted_quotient(n, n - 2)
    source, target = (g0, gt) if direction == 'fwd' else (gt, g0)
    image = {f"a{i}": _w('a', i, -1) for i in range(1, n + 1)}
    return GeneratorMap(source, target, image, f"inversion.{direction}")


@PureFunctionCache
def map_rotation(n: int, t: int) -> GeneratorMap:
    """Q(n, t) -> Q(n, n-2-t) induced by turning Delta(t, n) half way round."""
    check_range('n', n, 5)
    check_range('t', t, 1, n - 3)
    source, target = flag_quotient(n, t), flag_quotient(n, n - 2 - t)
    rot = rotation_map(n, t)
    image = {source.generators[i - 1]: gen(target.generators[j - 1]) for i, j in rot.items()}
    return GeneratorMap(source, target, image, f"rotation({t}->{n - 2 - t})")


def relations_map_exactly(m: GeneratorMap) -> List[str]:
    """Labels of source relations whose image is not literally a target relation."""
    targets = {frozenset((r.lhs, r.rhs)) for r in m.target.relations}
    return [r.label for r in m.source.relations
            if frozenset((apply(m, r.lhs), apply(m, r.rhs))) not in targets]


def pair_map(pair: str, n: int, t: int, direction: str) -> GeneratorMap:
    if pair == 'prop31':
        return map_prop31(n, direction)
    if pair == 'prop32':
        return map_prop32(n, direction)
    if pair == 'prop33':
        return map_prop33(n, t, direction)
    if pair == 'thm11':
        return map_thm11(n, t, direction)
    if pair == 'inversion':
        return map_inversion(n, direction)
    raise DomainError('pair', pair, " | ".join(PAIRS + ('inversion',)))


# ─────────
# Finite quotient checks

def pullback(m: GeneratorMap, assignment: Assignment) -> Assignment:
    """Assignment on m.source: g -> image of m(g) under the target assignment."""
    images = {g: evaluate(assignment, w) for g, w in m.image.items()}
    return Assignment(m.source, images, f"{assignment.name}@{m.name}")


def verify_in_quotient(m: GeneratorMap, target_assignment: Assignment) -> List[RelationFailure]:
    """Source relations and relators whose images fail under the target assignment."""
    return check_relations(pullback(m, target_assignment), m.source)


def verify_mutual_inverse(m1: GeneratorMap, m2: GeneratorMap,
                          assignment: Assignment) -> List[RelationFailure]:
    """Generators g of m1.source with m2(m1(g)) g^-1 not the identity under the assignment."""
    failures = []
    identity = assignment.identity()
    for g in m1.source.generators:
        w = product(apply(m2, apply(m1, gen(g))), gen(g, -1))
        if w.is_identity:
            continue
        value = evaluate(assignment, w)
        if value != identity:
            failures.append(RelationFailure(f"{m2.name}*{m1.name}({g})", str(value), str(identity)))
    return failures


def _usable(assignments: List[Assignment], p: PresentationSpec) -> List[Assignment]:
    usable = []
    for a in assignments:
        failures = check_relations(a, p)
        if failures:
            QuasicoxLogger.warn("Assignment {} fails on {}: {}", a.name, p.name, failures[0])
        else:
            usable.append(a)
    return usable


@PureFunctionCache
def quotient_assignments(kind: str, n: int, t: int = 0) -> List[Assignment]:
    """
    Finite quotients of the named group that pass check_relations.

    kind: 'dn', 'cycle' (G_0), 'twisted' (G_t), 'flag_cycle' (A(Delta(t, n))/cc), 'flag' (Q(n, t))
    """
    if kind == 'dn':
        p = dn_presentation(n)
        found = [dn_signed_assignment(n, p), dn_sigma_assignment(n, p)]
    elif kind in ('cycle', 'twisted'):
        p = ngon_quotient(n, t if kind == 'twisted' else 0)
        found = [sigma_assignment(n, p)]
        if n >= 4:
            found.append(ngon_signed_assignment(n, p))
    elif kind == 'flag_cycle':
        p = flag_cycle_quotient(n, t)
        found = [delta_tn_sigma_assignment(n, t, p), delta_tn_signed_assignment(n, t, p)]
        if t == 1:
            m = map_prop32(n, 'fwd')
            found += [pullback(m, a) for a in quotient_assignments('dn', n)]
        else:
            m = map_prop33(n, t, 'fwd')
            found += [pullback(m, a) for a in quotient_assignments('flag_cycle', n, 1)]
    elif kind == 'flag':
        p = flag_quotient(n, t)
        found = [delta_tn_sigma_assignment(n, t, p), delta_tn_signed_assignment(n, t, p)]
        m = map_thm11(n, t, 'fwd')
        found += [pullback(m, a) for a in quotient_assignments('twisted', n, t)]
    else:
        raise DomainError('kind', kind, "dn | cycle | twisted | flag_cycle | flag")
    return _usable(found, p)


def _side_kinds(pair: str, t: int):
    """(source kind, source t, target kind, target t) of the fwd map."""
    return {
        'prop31': ('cycle', 0, 'dn', 0),
        'prop32': ('flag_cycle', 1, 'dn', 0),
        'prop33': ('flag_cycle', t, 'flag_cycle', 1),
        'thm11': ('flag', t, 'twisted', t),
    }[pair]


class MapCheck(NamedTuple):
    check: str
    map: str
    assignment: str
    failures: List[RelationFailure]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_pair(pair: str, n: int, t: int = 1, corrupt: bool = False) -> List[MapCheck]:
    """
    Both maps of a pair checked in every finite quotient of their targets, and both
    composites checked in every finite quotient of their sources.
    """
    fwd, bwd = pair_map(pair, n, t, 'fwd'), pair_map(pair, n, t, 'bwd')
    if corrupt:
        fwd = corrupted(fwd)
    if pair == 'inversion':
        src_kind, src_t, dst_kind, dst_t = 'cycle', 0, 'twisted', n - 2
    else:
        src_kind, src_t, dst_kind, dst_t = _side_kinds(pair, t)
    src = [a.rebind(fwd.source) for a in quotient_assignments(src_kind, n, src_t)]
    dst = [a.rebind(fwd.target) for a in quotient_assignments(dst_kind, n, dst_t)]
    checks = []
    for a in dst:
        checks.append(MapCheck('relations', fwd.name, a.name, verify_in_quotient(fwd, a)))
    for a in src:
        checks.append(MapCheck('relations', bwd.name, a.name, verify_in_quotient(bwd, a)))
    for a in src:
        checks.append(MapCheck('inverse', f"{bwd.name}*{fwd.name}", a.name,
                               verify_mutual_inverse(fwd, bwd, a)))
    for a in dst:
        checks.append(MapCheck('inverse', f"{fwd.name}*{bwd.name}", a.name,
                               verify_mutual_inverse(bwd, fwd, a)))
    return checks


def exponent_sum_profile(m: GeneratorMap) -> Dict[str, int]:
    """Total exponent sum of each image word."""
    return {g: sum(letter.sign for letter in w) for g, w in m.image.items()}

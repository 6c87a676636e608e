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
Coset tables of the pair and point stabilizers in A(Delta_n) quotients,
transversals, the hand-picked subgroup generators y_1..y_(n+1) with their
rewriting table, a generic Reidemeister-Schreier rewriter and subgroup
presentation assembly.

Cosets are 0-based; coset 0 is the subgroup. Table columns are
[x1, x1^-1, x2, x2^-1, ...].
"""

from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from quasicox.model.diagrams import PresentationSpec, Relation, ngon_presentation
from quasicox.model.errors import QuasicoxError, UnknownGeneratorError, check_range
from quasicox.model.perm import (Assignment, RelationFailure, evaluate, ngon_signed_assignment,
                                 orbit, pair_action, pair_list, point_action, sigma_assignment)
from quasicox.model.word import (EMPTY, Letter, Word, exponent_sums, format_word, gen, invert,
                                 product, substitute)
from quasicox.settings.logging import QuasicoxLogger
from quasicox.utils import traceTime
from quasicox.utils.cache import PureFunctionCache

Pair = Tuple[int, int]


class CosetTable:
    """
    Closed coset table. Immutable.

    Parameters:
        generators: generator names, column 2i is generators[i], 2i+1 its inverse
        action: int array (cosets, 2 * generators)
        labels: printable label per coset
        base: description of the subgroup
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['generators', 'action', 'labels', 'base', '_columns']

    def __init__(self, generators: Sequence[str], action: np.ndarray, labels: Sequence = None,
                 base: str = ''):
        action = np.asarray(action, dtype=np.int64).copy()
        action.setflags(write=False)
        generators = tuple(generators)
        if action.ndim != 2 or action.shape[1] != 2 * len(generators):
            raise ValueError(f"Coset table shape {action.shape} does not fit {len(generators)} generators")
        if labels is None:
            labels = list(range(action.shape[0]))
        super().__setattr__('generators', generators)
        super().__setattr__('action', action)
        super().__setattr__('labels', tuple(labels))
        super().__setattr__('base', base)
        super().__setattr__('_columns', {g: 2 * i for i, g in enumerate(generators)})

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __repr__(self):
        return f"CosetTable({self.base!r}, {self.size} cosets)"

    @property
    def size(self) -> int:
        return self.action.shape[0]

    def column(self, generator: str, sign: int = 1) -> int:
        try:
            col = self._columns[generator]
        except KeyError:
            raise UnknownGeneratorError(generator, self.base) from None
        return col if sign > 0 else col + 1

    def act(self, coset: int, letter: Letter) -> int:
        return int(self.action[coset, self.column(letter.gen, letter.sign)])

    def trace(self, coset: int, w: Word) -> int:
        for letter in w:
            coset = int(self.action[coset, self.column(letter.gen, letter.sign)])
        return coset

    def is_valid(self) -> bool:
        """Every column a permutation, generator and inverse columns mutually inverse."""
        m = self.size
        ids = np.arange(m)
        for i in range(len(self.generators)):
            fwd, bwd = self.action[:, 2 * i], self.action[:, 2 * i + 1]
            if fwd.min() < 0 or fwd.max() >= m or len(set(fwd.tolist())) != m:
                return False
            if not np.array_equal(bwd[fwd], ids):
                return False
        return True


def coset_table_from_action(presentation: PresentationSpec, action: Assignment, base: int = 1,
                            labels: Callable[[int], object] = None, description: str = '') -> CosetTable:
    """
    Table of the right action on the orbit of a point (1-based). Coset 0 is the
    base point, the rest of the orbit follows in increasing point order.
    """
    points = orbit(action, base)
    points = [base] + sorted(p for p in points if p != base)
    index = {p: i for i, p in enumerate(points)}
    table = np.empty((len(points), 2 * len(presentation.generators)), dtype=np.int64)
    for j, g in enumerate(presentation.generators):
        fwd, bwd = action.image(g), action.image(g, -1)
        for i, p in enumerate(points):
            table[i, 2 * j] = index[fwd(p)]
            table[i, 2 * j + 1] = index[bwd(p)]
    labels = labels or (lambda p: p)
    return CosetTable(presentation.generators, table, [labels(p) for p in points],
                      description or f"stabilizer of {labels(base)}")


@PureFunctionCache
def pair_coset_table(n: int) -> CosetTable:
    """Cosets of the stabilizer of {1, 2}, coset c is pair_list(n)[c]."""
    check_range('n', n, 3)
    p = ngon_presentation(n)
    pairs = pair_list(n)
    return coset_table_from_action(p, pair_action(sigma_assignment(n, p)), 1,
                                   lambda i: pairs[i - 1], "stabilizer of {1,2}")


@PureFunctionCache
def point_coset_table(n: int) -> CosetTable:
    """Cosets of the stabilizer of 1, coset c is the point c+1."""
    check_range('n', n, 3)
    p = ngon_presentation(n)
    return coset_table_from_action(p, point_action(sigma_assignment(n, p)), 1,
                                   description="stabilizer of 1")


# ─────────
# Transversals

class Transversal:
    """
    One representative word per coset, rep(0) = empty word, checked against a table.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['reps', 'table']

    def __init__(self, reps: Sequence[Word], table: CosetTable):
        reps = tuple(reps)
        if len(reps) != table.size:
            raise ValueError(f"{len(reps)} representatives for {table.size} cosets")
        if reps[0] != EMPTY:
            raise ValueError("Representative of the subgroup coset must be the empty word")
        for c, w in enumerate(reps):
            if table.trace(0, w) != c:
                raise ValueError(f"Representative {w} does not reach coset {table.labels[c]}")
        super().__setattr__('reps', reps)
        super().__setattr__('table', table)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __getitem__(self, coset: int) -> Word:
        return self.reps[coset]

    def __len__(self) -> int:
        return len(self.reps)

    def is_prefix_closed(self) -> bool:
        words = set(self.reps)
        return all(Word(w.letters[:i]) in words for w in self.reps for i in range(len(w)))


def _a_run(indices) -> Word:
    return Word([Letter(f"a{i}", 1) for i in indices])


def pair_rep(k: int, l: int) -> Word:
    """t_(k,l) = a2 .. a(l-1) a1 .. a(k-1), sends 1 -> k and 2 -> l."""
    return product(_a_run(range(2, l)), _a_run(range(1, k)))


@PureFunctionCache
def pair_transversal(n: int) -> Transversal:
    table = pair_coset_table(n)
    return Transversal([pair_rep(k, l) for k, l in table.labels], table)


@PureFunctionCache
def point_transversal(n: int) -> Transversal:
    """rep(k) = a1 .. a(k-1)"""
    table = point_coset_table(n)
    return Transversal([_a_run(range(1, k)) for k in table.labels], table)


# ─────────
# Subgroup generators

class SchreierGen(NamedTuple):
    name: str
    definition: Word
    origin: Optional[Tuple[int, str]] = None

    def __str__(self) -> str:
        return f"{self.name} = {format_word(self.definition)}"


def xi_generators(n: int) -> List[SchreierGen]:
    """
    y1 = a1, y_i = a(i+1) for 2 <= i <= n-2, y(n-1) = a2^2, y_n = an^2,
    y(n+1) = a2 a1 a3 .. an.
    """
    check_range('n', n, 4)
    a = lambda i: gen(f"a{i}")
    defs = [a(1)] + [a(i + 1) for i in range(2, n - 1)]
    defs += [a(2) ** 2, a(n) ** 2, product(a(2), a(1), _a_run(range(3, n + 1)))]
    return [SchreierGen(f"y{i + 1}", w) for i, w in enumerate(defs)]


# ─────────
# Rewriting table of the pair stabilizer

class RhoRow(NamedTuple):
    label: str
    guard: Callable[[int, int, int, int], bool]
    word: Callable[[int, int, int, int], Word]
    target: Callable[[int, int, int, int], Pair]


def _y(i: int, sign: int = 1) -> Word:
    return gen(f"y{i}", sign)


def _y_run(indices) -> Word:
    return Word([Letter(f"y{i}", 1) for i in indices])


def _y_conj(i: int, p: Word) -> Word:
    """y_i^p = p^-1 y_i p"""
    return product(invert(p), _y(i), p)


RHO_ROWS: Tuple[RhoRow, ...] = (
    RhoRow('l<m<n', lambda n, k, l, m: m < n and l < m,
           lambda n, k, l, m: _y(m - 1), lambda n, k, l, m: (k, l)),
    RhoRow('l=m<n', lambda n, k, l, m: m < n and l == m,
           lambda n, k, l, m: EMPTY, lambda n, k, l, m: (k, l + 1)),
    RhoRow('k=m=l-1<n', lambda n, k, l, m: m < n and k == m == l - 1,
           lambda n, k, l, m: _y(1), lambda n, k, l, m: (k, l)),
    RhoRow('k=m<l-1', lambda n, k, l, m: m < n and k == m < l - 1,
           lambda n, k, l, m: EMPTY, lambda n, k, l, m: (k + 1, l)),
    RhoRow('k<m=l-1', lambda n, k, l, m: m < n and k < m == l - 1,
           lambda n, k, l, m: _y_conj(n - 1, _y_run(range(2, l - 1))), lambda n, k, l, m: (k, l - 1)),
    RhoRow('k<m<l-1', lambda n, k, l, m: m < n and k < m < l - 1,
           lambda n, k, l, m: _y(m), lambda n, k, l, m: (k, l)),
    RhoRow('k=m+1', lambda n, k, l, m: m < n and k == m + 1,
           lambda n, k, l, m: _y_conj(n - 1, _y_run(range(1, k))), lambda n, k, l, m: (k - 1, l)),
    RhoRow('k>m+1', lambda n, k, l, m: m < n and k > m + 1,
           lambda n, k, l, m: _y(m + 1), lambda n, k, l, m: (k, l)),
    RhoRow('k=1,l=m=n', lambda n, k, l, m: m == n and k == 1 and l == n,
           lambda n, k, l, m: _y_conj(1, _y(n + 1, -1)), lambda n, k, l, m: (1, n)),
    RhoRow('k=1,l<m=n', lambda n, k, l, m: m == n and k == 1 and l < n,
           lambda n, k, l, m: product(_y(n), _y(n + 1, -1)), lambda n, k, l, m: (l, n)),
    RhoRow('k>1,l=m=n', lambda n, k, l, m: m == n and k > 1 and l == n,
           lambda n, k, l, m: _y(n + 1), lambda n, k, l, m: (1, k)),
    RhoRow('k>1,l<m=n', lambda n, k, l, m: m == n and k > 1 and l < n,
           lambda n, k, l, m: _y_conj(n - 2, _y(n + 1, -1)), lambda n, k, l, m: (k, l)),
)


def rho_row(n: int, k: int, l: int, m: int) -> RhoRow:
    check_range('n', n, 4)
    check_range('k', k, 1, n - 1)
    check_range('l', l, k + 1, n)
    check_range('m', m, 1, n)
    rows = [row for row in RHO_ROWS if row.guard(n, k, l, m)]
    if len(rows) != 1:
        raise QuasicoxError(f"Rewriting table has {len(rows)} rows for (k,l,m)=({k},{l},{m}), n={n}")
    return rows[0]


def rho_step(n: int, k: int, l: int, m: int) -> Tuple[Word, Pair]:
    """rho(t_(k,l), a_m) as a word in y1..y(n+1), and the pair of the next coset."""
    row = rho_row(n, k, l, m)
    return row.word(n, k, l, m), row.target(n, k, l, m)


class RhoTable(NamedTuple):
    step: Dict[Tuple[int, int, int], Tuple[Word, Pair]]
    back: Dict[Tuple[int, int, int], Pair]


@PureFunctionCache
def rho_table(n: int) -> RhoTable:
    step, back = {}, {}
    for k, l in pair_list(n):
        for m in range(1, n + 1):
            w, target = rho_step(n, k, l, m)
            step[(k, l, m)] = (w, target)
            back[(target[0], target[1], m)] = (k, l)
    return RhoTable(step, back)


def _gen_index(name: str) -> int:
    return int(name[1:])


def rho_extend(n: int, start: Pair, w: Word) -> Tuple[Word, Pair]:
    """
    rho(t_start, w) and the pair reached. An inverse letter a_m^-1 at {k,l} emits
    rho(u, a_m)^-1 where u is the pair with u . a_m = {k,l}.
    """
    table = rho_table(n)
    k, l = start
    letters: List[Letter] = []
    for letter in w:
        m = _gen_index(letter.gen)
        if letter.sign > 0:
            piece, (k, l) = table.step[(k, l, m)]
            letters.extend(piece.letters)
        else:
            k, l = table.back[(k, l, m)]
            letters.extend(invert(table.step[(k, l, m)][0]).letters)
    return Word(letters), (k, l)


def verify_rho_table(n: int, assignments: Sequence[Assignment] = None) -> List[RelationFailure]:
    """
    For every (k, l, m): t_(k,l) a_m t_(k',l')^-1 against the rewritten word with y_i
    replaced by its definition, in each assignment of A(Delta_n).
    """
    if assignments is None:
        p = ngon_presentation(n)
        assignments = [sigma_assignment(n, p), ngon_signed_assignment(n, p)]
    xi = {g.name: g.definition for g in xi_generators(n)}
    failures = []
    for (k, l, m), (w, target) in rho_table(n).step.items():
        lhs = product(pair_rep(k, l), gen(f"a{m}"), invert(pair_rep(*target)))
        rhs = substitute(w, xi)
        for a in assignments:
            left, right = evaluate(a, lhs), evaluate(a, rhs)
            if left != right:
                label = f"{rho_row(n, k, l, m).label}({k},{l},{m})@{a.name}"
                failures.append(RelationFailure(label, str(left), str(right)))
    return failures


# ─────────
# Rewriters

class Rewriter:
    """
    Rewrites words in the group generators, read from a coset, into words in
    subgroup generators.
    """

    table: CosetTable
    generators: Tuple[SchreierGen, ...]

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def label(self, coset: int):
        return self.table.labels[coset]

    def rewrite(self, w: Word, coset: int = 0) -> Tuple[Word, int]:
        raise NotImplementedError()

    def expand(self, w: Word) -> Word:
        """Subgroup generators replaced by their definitions."""
        return substitute(w, {g.name: g.definition for g in self.generators})


class PairRewriter(Rewriter):
    """Pair stabilizer of A(Delta_n) on y1..y(n+1) through the rewriting table."""

    def __init__(self, n: int):
        self.n = n
        self.table = pair_coset_table(n)
        self.generators = tuple(xi_generators(n))
        self._index = {pair: c for c, pair in enumerate(self.table.labels)}

    def __repr__(self):
        return f"PairRewriter(n={self.n})"

    def rewrite(self, w: Word, coset: int = 0) -> Tuple[Word, int]:
        word, end = rho_extend(self.n, self.table.labels[coset], w)
        return word, self._index[end]


class SchreierRewriter(Rewriter):
    """
    Generic Reidemeister-Schreier rewriting over a prefix closed transversal.
    Generators s_i = rep(c) x rep(c.x)^-1, freely trivial ones dropped.
    """

    def __init__(self, transversal: Transversal, prefix: str = 's'):
        self.table = transversal.table
        self.transversal = transversal
        gens, index = [], {}
        for c in range(self.table.size):
            for j, x in enumerate(self.table.generators):
                d = int(self.table.action[c, 2 * j])
                definition = product(transversal[c], gen(x), invert(transversal[d]))
                if definition.is_identity:
                    continue
                name = f"{prefix}{len(gens) + 1}"
                index[(c, x)] = name
                gens.append(SchreierGen(name, definition, (c, x)))
        self.generators = tuple(gens)
        self._index = index

    def __repr__(self):
        return f"SchreierRewriter({self.table.base!r}, {len(self.generators)} generators)"

    def rewrite(self, w: Word, coset: int = 0) -> Tuple[Word, int]:
        letters: List[Letter] = []
        for letter in w:
            if letter.sign > 0:
                name = self._index.get((coset, letter.gen))
                coset = self.table.act(coset, letter)
                if name:
                    letters.append(Letter(name, 1))
            else:
                coset = self.table.act(coset, letter)
                name = self._index.get((coset, letter.gen))
                if name:
                    letters.append(Letter(name, -1))
        return Word(letters), coset


def generic_schreier_rewrite(table: CosetTable, transversal: Transversal, w: Word,
                             coset: int = 0) -> Word:
    if transversal.table is not table:
        transversal = Transversal(transversal.reps, table)
    return schreier_rewriter(transversal).rewrite(w, coset)[0]


@PureFunctionCache
def schreier_rewriter(transversal: Transversal) -> SchreierRewriter:
    return SchreierRewriter(transversal)


@PureFunctionCache
def pair_rewriter(n: int) -> PairRewriter:
    return PairRewriter(n)


def subgroup_rewriter(n: int, subgroup: str = 'pair') -> Rewriter:
    """pair: y1..y(n+1); pair-generic: Schreier generators over t_(k,l); point: stabilizer of 1."""
    if subgroup == 'pair':
        return pair_rewriter(n)
    if subgroup == 'pair-generic':
        return schreier_rewriter(pair_transversal(n))
    if subgroup == 'point':
        return schreier_rewriter(point_transversal(n))
    raise ValueError(f"Unknown subgroup {subgroup!r}, expected pair | pair-generic | point")


# ─────────
# Presentation assembly

@PureFunctionCache
def relation_rows(relations: Tuple[Relation, ...], rewriter: Rewriter) -> Tuple[Relation, ...]:
    """rho(t, lhs) = rho(t, rhs) for every coset t and relation."""
    rows = []
    for c in range(rewriter.table.size):
        label = rewriter.label(c)
        for r in relations:
            lhs, end_l = rewriter.rewrite(r.lhs, c)
            rhs, end_r = rewriter.rewrite(r.rhs, c)
            if end_l != end_r:
                raise QuasicoxError(f"Relation {r.label} does not hold in the coset action at {label}")
            rows.append(Relation(lhs, rhs, f"{r.label}@{label}"))
    return tuple(rows)


def relator_rows(relators: Sequence[Word], labels: Sequence[str], rewriter: Rewriter) -> List[Tuple[str, Word]]:
    rows = []
    for c in range(rewriter.table.size):
        for label, w in zip(labels, relators):
            word, end = rewriter.rewrite(w, c)
            if end != c:
                raise QuasicoxError(f"Relator {label} does not hold in the coset action at {rewriter.label(c)}")
            rows.append((f"{label}@{rewriter.label(c)}", word))
    return rows


def s2_relators(rewriter: Rewriter) -> List[Tuple[str, Word]]:
    """rho(empty, definition(y)) y^-1 for each subgroup generator y."""
    rows = []
    for g in rewriter.generators:
        word, end = rewriter.rewrite(g.definition, 0)
        if end != 0:
            raise QuasicoxError(f"{g.name} = {g.definition} is not in the subgroup")
        rows.append((f"S2({g.name})", product(word, gen(g.name, -1))))
    return rows


def subgroup_presentation(presentation: PresentationSpec, rewriter: Rewriter,
                          name: str = None) -> PresentationSpec:
    """
    Presentation of the subgroup on the rewriter's generators: every relation and
    relator of the group rewritten from every coset, plus the non-empty relators
    rho(empty, definition(y)) y^-1.
    """
    with traceTime(f"subgroup presentation of {presentation.name}"):
        relations = relation_rows(presentation.relations, rewriter)
        rows = relator_rows(presentation.extra_relators, presentation.relator_labels, rewriter)
        rows.extend((label, w) for label, w in s2_relators(rewriter) if w)
        QuasicoxLogger.debug("{}: {} relations, {} relators", presentation.name, len(relations), len(rows))
        return PresentationSpec(rewriter.names, relations, [w for _, w in rows],
                                name or f"{presentation.name}|{rewriter.table.base}",
                                [label for label, _ in rows])


# ─────────
# Commutator relator rows

def gamma_path(n: int, t: int) -> Word:
    """a2 .. a(n-1) for t = 0, a2^-1 .. a(t+1)^-1 a(t+2) .. a(n-1) otherwise."""
    return Word([Letter(f"a{i}", -1 if 2 <= i <= t + 1 else 1) for i in range(2, n)])


def exponent_vector(w: Word, names: Sequence[str]) -> List[int]:
    sums = exponent_sums(w)
    return [sums.get(g, 0) for g in names]


def gamma_vectors(n: int, t: int, l: int) -> Tuple[List[int], List[int]]:
    """Exponent vectors over y1..y(n+1) of rho(t_(1,l), v) and rho(t_(2,l), v)."""
    check_range('n', n, 4)
    check_range('t', t, 0, n - 2)
    check_range('l', l, 3, n)
    v = gamma_path(n, t)
    names = [f"y{i}" for i in range(1, n + 2)]
    g1, _ = rho_extend(n, (1, l), v)
    g2, _ = rho_extend(n, (2, l), v)
    return exponent_vector(g1, names), exponent_vector(g2, names)


def gamma_closed_form(n: int, t: int, l: int) -> Tuple[List[int], List[int]]:
    """Closed forms of gamma_vectors, z_i is coordinate i-1."""
    g1, g2 = [0] * (n + 1), [0] * (n + 1)

    def add(v, lo, hi, c):
        for i in range(lo, hi + 1):
            v[i - 1] += c

    if t == 0:
        add(g1, 2, n - 1, 1)
        add(g2, 1, 1, 1)
    elif t + 1 <= l - 2:
        add(g1, 2, t + 1, -1)
        add(g1, t + 2, n - 2, 1)
        add(g1, n - 1, n - 1, 1)
        add(g2, n - 1, n - 1, -t)
        add(g2, 1, 1, 1)
    else:
        add(g1, 2, t, -1)
        add(g1, t + 1, n - 2, 1)
        add(g2, n - 1, n - 1, -(t - 1))
        add(g2, 1, 1, -1)
    return g1, g2

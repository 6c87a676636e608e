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
Low index subgroups by coset table backtracking.

Tables are filled at the first undefined slot in row-major order, so every
complete table is standard (cosets numbered by first appearance). A table is
kept only when no other base coset gives a smaller standard table, which
leaves one table per conjugacy class.
"""

from itertools import permutations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from quasicox.extension.threading import Task
from quasicox.model.diagrams import PresentationSpec
from quasicox.model.errors import check_range
from quasicox.model.schreier import CosetTable
from quasicox.model.word import Word
from quasicox.settings.logging import QuasicoxLogger
from quasicox.settings.preferences import pref_max_low_index
from quasicox.utils import traceTime

UNDEFINED = -1


def relator_columns(p: PresentationSpec) -> List[np.ndarray]:
    """Relators as column index arrays, column 2i = generator i, 2i+1 = its inverse."""
    cols = []
    for w in p.relators():
        if w.is_identity:
            continue
        cols.append(np.array([2 * p.index_of(x.gen) + (0 if x.sign > 0 else 1) for x in w], dtype=np.int64))
    return cols


class PartialCosetTable:
    """
    Coset table under construction; entries may be UNDEFINED. Mutable search state.
    """

    def __init__(self, generators: Sequence[str], relators: List[np.ndarray], max_index: int):
        self.generators = tuple(generators)
        self.relators = relators
        self.max_index = max_index
        self.table = np.full((max_index, 2 * len(self.generators)), UNDEFINED, dtype=np.int64)
        self.size = 1

    def copy(self) -> 'PartialCosetTable':
        other = PartialCosetTable.__new__(PartialCosetTable)
        other.generators = self.generators
        other.relators = self.relators
        other.max_index = self.max_index
        other.table = self.table.copy()
        other.size = self.size
        return other

    def define(self, c: int, col: int, d: int):
        self.table[c, col] = d
        self.table[d, col ^ 1] = c

    def new_coset(self) -> int:
        self.size += 1
        return self.size - 1

    def first_undefined(self) -> Optional[Tuple[int, int]]:
        block = self.table[:self.size]
        slots = np.argwhere(block == UNDEFINED)
        if len(slots) == 0:
            return None
        c, col = slots[0]
        return int(c), int(col)

    def scan(self, c: int, rel: np.ndarray) -> Optional[bool]:
        """
        Trace rel from c both ways. False on a conflict, True after a deduction,
        None when nothing was learned.
        """
        t = self.table
        f, i, last = c, 0, len(rel) - 1
        while i <= last and t[f, rel[i]] != UNDEFINED:
            f = t[f, rel[i]]
            i += 1
        if i > last:
            return False if f != c else None
        b, k = c, last
        while k >= i and t[b, rel[k] ^ 1] != UNDEFINED:
            b = t[b, rel[k] ^ 1]
            k -= 1
        if k < i:
            return False if f != b else None
        if k == i:
            self.define(int(f), int(rel[i]), int(b))
            return True
        return None

    def deduce(self) -> bool:
        """Scan every relator from every coset until nothing changes. False on conflict."""
        changed = True
        while changed:
            changed = False
            for rel in self.relators:
                for c in range(self.size):
                    result = self.scan(c, rel)
                    if result is False:
                        return False
                    if result:
                        changed = True
        return True

    def standard_from(self, base: int) -> np.ndarray:
        """Complete table relabelled by first appearance from base."""
        t = self.table[:self.size]
        order, label = [base], {base: 0}
        i = 0
        while i < len(order):
            for d in t[order[i]]:
                d = int(d)
                if d not in label:
                    label[d] = len(order)
                    order.append(d)
            i += 1
        return np.array([[label[int(d)] for d in t[c]] for c in order], dtype=np.int64)

    def is_first_in_class(self) -> bool:
        mine = tuple(self.table[:self.size].ravel().tolist())
        for base in range(1, self.size):
            other = tuple(self.standard_from(base).ravel().tolist())
            if other < mine:
                return False
        return True

    def to_coset_table(self) -> CosetTable:
        return CosetTable(self.generators, self.table[:self.size],
                          base=f"index {self.size} subgroup")


def _search(state: PartialCosetTable, found: List[CosetTable]):
    if not state.deduce():
        return
    slot = state.first_undefined()
    if slot is None:
        if state.is_first_in_class():
            found.append(state.to_coset_table())
        return
    for child in _children(state, slot):
        _search(child, found)


def _children(state: PartialCosetTable, slot: Tuple[int, int]) -> List[PartialCosetTable]:
    c, col = slot
    children = []
    for d in range(state.size):
        if state.table[d, col ^ 1] == UNDEFINED:
            child = state.copy()
            child.define(c, col, d)
            children.append(child)
    if state.size < state.max_index:
        child = state.copy()
        child.define(c, col, child.new_coset())
        children.append(child)
    return children


def _search_branch(state: PartialCosetTable) -> List[CosetTable]:
    found = []
    _search(state, found)
    return found


def low_index_subgroups(p: PresentationSpec, max_index: int) -> List[CosetTable]:
    """One complete coset table per conjugacy class of subgroups of index <= max_index."""
    check_range('max_index', max_index, 1, pref_max_low_index())
    root = PartialCosetTable(p.generators, relator_columns(p), max_index)
    with traceTime(f"low index search of {p.name} up to {max_index}"):
        if not root.deduce():
            return []
        slot = root.first_undefined()
        if slot is None:
            return [root.to_coset_table()] if root.is_first_in_class() else []
        jobs = [Task.execute(_search_branch, child) for child in _children(root, slot)]
        tables = [t for branch in Task.join(jobs) for t in branch]
    tables.sort(key=lambda t: t.size)
    QuasicoxLogger.debug("{}: {} classes up to index {}", p.name, len(tables), max_index)
    return tables


def count_classes_of_index(p: PresentationSpec, k: int) -> int:
    return sum(1 for t in low_index_subgroups(p, k) if t.size == k)


def class_counts(p: PresentationSpec, max_index: int) -> List[int]:
    """Number of conjugacy classes of each index 1..max_index."""
    counts = [0] * max_index
    for t in low_index_subgroups(p, max_index):
        counts[t.size - 1] += 1
    return counts


def satisfies(table: CosetTable, p: PresentationSpec) -> bool:
    """Every relator of p closes up from every coset."""
    return all(table.trace(c, w) == c for w in p.relators() for c in range(table.size))


def are_conjugate(t1: CosetTable, t2: CosetTable) -> bool:
    """True when some relabelling of cosets carries t1 onto t2."""
    if t1.size != t2.size:
        return False
    a1, a2 = t1.action, t2.action
    for perm in permutations(range(t1.size)):
        pi = np.array(perm)
        if np.array_equal(pi[a1], a2[pi]):
            return True
    return False

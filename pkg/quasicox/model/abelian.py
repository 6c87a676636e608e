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
Exponent matrices, Smith normal form invariants and abelianizations.
"""

from collections import Counter
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from sympy import ZZ, factorint
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from quasicox.model.diagrams import PresentationSpec, ngon_presentation, ngon_quotient
from quasicox.model.errors import DomainError, check_range
from quasicox.model.schreier import subgroup_presentation, subgroup_rewriter
from quasicox.model.word import exponent_sums
from quasicox.settings.logging import QuasicoxLogger
from quasicox.utils import traced
from quasicox.utils.cache import PureFunctionCache


class IntMatrix:
    """
    Integer matrix with exact (Python int) entries. Immutable.
    """

    # ! Using __slots__ to make this class Immutable.
    __slots__ = ['data', 'columns']

    def __init__(self, rows: Iterable[Sequence[int]], cols: int, columns: Sequence[str] = None):
        rows = [[int(x) for x in row] for row in rows]
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"Row of length {len(row)} in a matrix with {cols} columns")
        data = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            data[i, :] = row
        data.setflags(write=False)
        super().__setattr__('data', data)
        super().__setattr__('columns', tuple(columns) if columns else tuple(f"z{i + 1}" for i in range(cols)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__}.{name} is not writable.")

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def tolist(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.data]

    @classmethod
    def diag(cls, entries: Sequence[int], rows: int = None, cols: int = None) -> 'IntMatrix':
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            data[i][i] = e
        return cls(data, cols)


class AbelianInvariants(NamedTuple):
    """Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, all d > 1."""
    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return format_primary(self)

    def to_json(self) -> dict:
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion)}

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def canonical_torsion(factors: Iterable[int]) -> Tuple[int, ...]:
    """Divisibility chain of the finite group Z/f1 + Z/f2 + ..., ignoring 0 and 1."""
    powers: Dict[int, List[int]] = {}
    for f in factors:
        f = abs(int(f))
        if f <= 1:
            continue
        for p, e in factorint(f).items():
            powers.setdefault(p, []).append(e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    chain = [1] * length
    for p, exps in powers.items():
        exps = sorted(exps)
        for i, e in enumerate(exps):
            chain[length - len(exps) + i] *= p ** e
    return tuple(chain)


def exponent_matrix(p: PresentationSpec) -> IntMatrix:
    """One row per relation (lhs rhs^-1) and extra relator."""
    columns = p.generators
    rows = []
    for label, lhs, rhs in p.checks():
        sums = Counter(exponent_sums(lhs))
        sums.subtract(exponent_sums(rhs))
        rows.append([sums.get(g, 0) for g in columns])
    return IntMatrix(rows, len(columns), columns)


def _unit_pivot_reduce(rows: List[Dict[int, int]], cols: int) -> Tuple[List[Dict[int, int]], List[int]]:
    """
    Removes pairs (row, column) through entries +-1; the cokernel is unchanged.
    Returns the remaining rows and columns.
    """
    alive = set(range(cols))
    rows = [r for r in rows if r]
    while True:
        pivot = None
        for i, r in enumerate(rows):
            for c, v in r.items():
                if v in (1, -1):
                    pivot = (i, c, v)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, c, v = pivot
        prow = rows.pop(i)
        reduced = []
        for r in rows:
            a = r.get(c)
            if a:
                factor = a * v
                r = dict(r)
                for cc, pv in prow.items():
                    x = r.get(cc, 0) - factor * pv
                    if x:
                        r[cc] = x
                    else:
                        r.pop(cc, None)
            if r:
                reduced.append(r)
        rows = _dedupe(reduced)
        alive.discard(c)
    return rows, sorted(alive)


def _dedupe(rows: Iterable[Dict[int, int]]) -> List[Dict[int, int]]:
    seen, unique = set(), []
    for r in rows:
        lead = r[min(r)]
        key = tuple(sorted((c, v if lead > 0 else -v) for c, v in r.items()))
        if key not in seen:
            seen.add(key)
            unique.append(r)
    return unique


@traced("smith normal form")
def smith_normal_form(m: IntMatrix) -> AbelianInvariants:
    """Invariants of the cokernel of the row lattice: Z^cols / <rows>."""
    rows = [{c: int(v) for c, v in enumerate(row) if v} for row in m.data]
    rows, alive = _unit_pivot_reduce(_dedupe(r for r in rows if r), m.cols)
    if not alive:
        return AbelianInvariants(0, ())
    if not rows:
        return AbelianInvariants(len(alive), ())
    QuasicoxLogger.debug("Smith form of residual {}x{} matrix", len(rows), len(alive))
    dense = [[ZZ(r.get(c, 0)) for c in alive] for r in rows]
    dm = DomainMatrix(dense, (len(rows), len(alive)), ZZ)
    factors = [int(f) for f in invariant_factors(dm)]
    nonzero = [f for f in factors if f != 0]
    return AbelianInvariants(len(alive) - len(nonzero), canonical_torsion(nonzero))


def abelianization(p: PresentationSpec) -> AbelianInvariants:
    return smith_normal_form(exponent_matrix(p))


def format_primary(inv: AbelianInvariants) -> str:
    """Z/2 + Z/4 + Z^2 style, torsion split into prime powers."""
    parts = []
    for d in inv.torsion:
        for p, e in sorted(factorint(d).items()):
            parts.append((p, p ** e))
    terms = [f"Z/{q}" for _, q in sorted(parts)]
    if inv.free_rank == 1:
        terms.append("Z")
    elif inv.free_rank > 1:
        terms.append(f"Z^{inv.free_rank}")
    return " + ".join(terms) if terms else "0"


# ─────────
# Subgroup fingerprints

EXPECTED = {
    'H': AbelianInvariants(4, ()),
    'H_0': AbelianInvariants(3, (2,)),
    'H_t': AbelianInvariants(2, (2, 4)),
    'point': AbelianInvariants(2, (2,)),
}


def expected_pair_invariants(kind: str) -> AbelianInvariants:
    """kind: H (Artin group), H_0 (cycle quotient), H_t (twisted, 1 <= t <= n-3), point."""
    try:
        return EXPECTED[kind]
    except KeyError:
        raise DomainError('kind', kind, " | ".join(EXPECTED)) from None


def expected_for(t, subgroup: str = 'pair', n: int = None) -> AbelianInvariants:
    """Expected invariants of the subgroup of G_t (t None: of A(Delta_n))."""
    if subgroup == 'point':
        return EXPECTED['point']
    if t is None:
        return EXPECTED['H']
    if t == 0 or (n is not None and t == n - 2):
        return EXPECTED['H_0']
    return EXPECTED['H_t']


def group_presentation(n: int, t=None) -> PresentationSpec:
    """A(Delta_n) for t None, G_0 for t = 0, G_t otherwise."""
    if t is None:
        return ngon_presentation(n)
    return ngon_quotient(n, t)


@PureFunctionCache
def subgroup_invariants(n: int, t=None, subgroup: str = 'pair') -> AbelianInvariants:
    """Abelianization of the pair (or point) stabilizer in A(Delta_n), G_0 or G_t."""
    check_range('n', n, 4)
    if t is not None:
        check_range('t', t, 0, n - 2)
    p = group_presentation(n, t)
    return abelianization(subgroup_presentation(p, subgroup_rewriter(n, subgroup)))


def pair_subgroup_invariants(n: int, t=None) -> AbelianInvariants:
    return subgroup_invariants(n, t, 'pair')


def point_subgroup_invariants(n: int, t=None) -> AbelianInvariants:
    return subgroup_invariants(n, t, 'point')


# ─────────
# Hand reduction cross-check on z1..z(n+1)

def _z(n: int, coeffs: Dict[int, int]) -> List[int]:
    row = [0] * (n + 1)
    for i, c in coeffs.items():
        row[i - 1] += c
    return row


def _span(lo: int, hi: int, c: int) -> Dict[int, int]:
    return {i: c for i in range(lo, hi + 1)}


def reduced_pair_rows(n: int) -> List[List[int]]:
    """z2 = ... = z(n-2) and z(n-1) = zn."""
    rows = [_z(n, {i: 1, i + 1: -1}) for i in range(2, n - 2)]
    rows.append(_z(n, {n - 1: 1, n: -1}))
    return rows


def reduced_quotient_rows(n: int, t: int) -> List[List[int]]:
    """The extra relations the cycle (t = 0) or t-twisted relator adds to the pair stabilizer."""
    check_range('t', t, 0, n - 3)
    if t == 0:
        c = {1: -2, **_span(2, n - 2, 2), n - 1: 3, n: 1, n + 1: -2}
        return [_z(n, c)]
    r1 = {**_span(1, t + 1, -2), **_span(t + 2, n - 2, 2), n - 1: 2 * t + 3, n: 1, n + 1: -2}
    r2 = {1: 2, **_span(2, t, -2), **_span(t + 1, n - 2, 2), n - 1: 2 * t - 1, n: 1, n + 1: -2}
    return [_z(n, r1), _z(n, r2)]


def reduced_invariants(n: int, t=None) -> AbelianInvariants:
    rows = reduced_pair_rows(n)
    if t is not None:
        rows += reduced_quotient_rows(n, t)
    return smith_normal_form(IntMatrix(rows, n + 1))

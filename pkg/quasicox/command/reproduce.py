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

from typing import Any, Dict, List, Optional, TextIO

from quasicox.command.job import JobSpec, parse_range, write_json, write_tsv
from quasicox.extension.threading import Task
from quasicox.model.abelian import expected_for, subgroup_invariants
from quasicox.model.errors import UsageError
from quasicox.settings.logging import QuasicoxLogger
from quasicox.settings.preferences import pref_max_reproduce_n
from quasicox.utils.collections import group_by

HEADER = ['n', 'group', 't', 'free_rank', 'torsion', 'primary', 'expected', 'match']


def group_label(n: int, t: Optional[int]) -> str:
    if t is None:
        return 'H'
    return 'H_0' if t == 0 else f"H_{t}"


def reproduce_rows(n: int, subgroup: str = 'pair') -> List[Optional[int]]:
    """Groups checked at n: A(Delta_n) (pair only), G_0, G_1..G_(n-3) and G_(n-2)."""
    keys = [None] if subgroup == 'pair' else []
    return keys + list(range(0, n - 1))


def reproduce_one(n: int, t: Optional[int], subgroup: str) -> Dict[str, Any]:
    inv = subgroup_invariants(n, t, subgroup)
    expected = expected_for(t, subgroup, n)
    row = {'n': n, 'group': group_label(n, t), 't': t, **inv.to_json(),
           'primary': str(inv), 'expected': str(expected), 'match': inv == expected}
    if not row['match']:
        QuasicoxLogger.warn("n={} {}: got {}, expected {}", n, row['group'], inv, expected)
    return row


class CmdReproduce:
    """
    Abelian invariants of the stabilizer subgroups over a range of n, against
    their expected values
    """

    name = 'reproduce'
    help = 'tabulate stabilizer abelianizations over a range of n'

    def configure(self, parser):
        parser.add_argument('--n-range', default='5..12')
        parser.add_argument('--subgroup', choices=('pair', 'point'), default='pair')
        parser.add_argument('--format', choices=('json', 'tsv'), default='json')

    def run(self, job: JobSpec, out: TextIO) -> int:
        low, high = parse_range(job.option('n_range'))
        limit = pref_max_reproduce_n()
        if low < 5 or high > limit:
            raise UsageError(f"reproduce: n-range {low}..{high} is out of range, expected 5 <= n <= {limit}")
        keys = [(n, t) for n in range(low, high + 1) for t in reproduce_rows(n, job.subgroup)]
        rows = Task.join(Task.execute(reproduce_one, n, t, job.subgroup) for n, t in keys)
        passed = all(r['match'] for r in rows)
        if job.format == 'tsv':
            write_tsv(out, HEADER, [
                [r['n'], r['group'], '' if r['t'] is None else r['t'], r['free_rank'],
                 ','.join(str(d) for d in r['torsion']), r['primary'], r['expected'], r['match']]
                for r in rows])
        else:
            summary = [{'n': n, 'passed': all(r['match'] for r in group)}
                       for n, group in group_by(rows, lambda r: r['n']).items()]
            write_json(out, job, {'rows': rows, 'summary': summary, 'passed': passed})
        return 0 if passed else 1

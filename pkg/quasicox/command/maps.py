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

from typing import List, TextIO

from quasicox.command.job import JobSpec, parse_range, write_json
from quasicox.extension.threading import Task
from quasicox.model.errors import UsageError
from quasicox.model.lemmas import verify_lemma_suite
from quasicox.model.word_maps import (DIRECTIONS, PAIRS, MapCheck, map_rotation, pair_map,
                                      relations_map_exactly, verify_pair)

ALL_PAIRS = PAIRS + ('inversion',)


def check_json(c: MapCheck) -> dict:
    return {'check': c.check, 'map': c.map, 'assignment': c.assignment,
            'passed': c.passed, 'failures': [str(f) for f in c.failures]}


def pair_t_values(pair: str, n: int, t: int = None) -> List[int]:
    """Values of t a pair is checked for at this n."""
    if pair in ('prop33', 'thm11'):
        if t is not None:
            if not 1 <= t <= n - 3:
                raise UsageError(f"{pair}: t={t} is out of range, expected 1 <= t <= {n - 3}")
            return [t]
        return list(range(1, n - 2))
    return [1]


class CmdIsomap:
    """
    Image tables of one pair of maps and their finite quotient checks
    """

    name = 'isomap'
    help = 'print a pair of generator maps with their verification report'

    def configure(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--t', type=int)
        parser.add_argument('--pair', choices=ALL_PAIRS, required=True)
        parser.add_argument('--direction', choices=DIRECTIONS + ('both',), default='both')
        parser.add_argument('--corrupt', action='store_true', help='drop a letter from the fwd map (test hook)')

    def run(self, job: JobSpec, out: TextIO) -> int:
        n = job.require_n()
        pair = job.option('pair')
        t = job.t if job.t is not None else 1
        if pair in ('prop33', 'thm11'):
            t = job.require_t(1, n - 3)
        direction = job.option('direction', 'both')
        directions = DIRECTIONS if direction == 'both' else (direction,)
        maps = [pair_map(pair, n, t, d) for d in directions]
        checks = verify_pair(pair, n, t, corrupt=bool(job.option('corrupt')))
        if direction != 'both':
            names = {m.name for m in maps}
            checks = [c for c in checks if c.check == 'relations' and c.map.split('~')[0] in names]
        passed = all(c.passed for c in checks)
        write_json(out, job, {
            'maps': [{'name': m.name, 'source': m.source.name, 'target': m.target.name,
                      'images': m.table()} for m in maps],
            'checks': [check_json(c) for c in checks],
            'passed': passed,
        })
        return 0 if passed else 1


class CmdVerifyMaps:
    """
    All map pairs (and optionally the lemma identities) over a range of n
    """

    name = 'verify-maps'
    help = 'check every map pair in finite quotients over a range of n'

    def configure(self, parser):
        parser.add_argument('--n-range', default='5..10')
        parser.add_argument('--t', type=int)
        parser.add_argument('--pairs', default=','.join(ALL_PAIRS),
                            help='comma separated subset of ' + ', '.join(ALL_PAIRS))
        parser.add_argument('--lemmas', action='store_true', help='also check the lemma identity suite')
        parser.add_argument('--corrupt', action='store_true', help='drop a letter from each fwd map (test hook)')

    def run(self, job: JobSpec, out: TextIO) -> int:
        low, high = parse_range(job.option('n_range'))
        if low < 4:
            raise UsageError(f"verify-maps: n starts at 4, got {low}")
        pairs = [p.strip() for p in job.option('pairs').split(',') if p.strip()]
        for p in pairs:
            if p not in ALL_PAIRS:
                raise UsageError(f"verify-maps: unknown pair {p!r}, expected one of {', '.join(ALL_PAIRS)}")
        corrupt = bool(job.option('corrupt'))

        jobs, keys = [], []
        for n in range(low, high + 1):
            for pair in pairs:
                for t in pair_t_values(pair, n, job.t):
                    keys.append((pair, n, t))
                    jobs.append(Task.execute(verify_pair, pair, n, t, corrupt))
        rows = []
        for (pair, n, t), checks in zip(keys, Task.join(jobs)):
            rows.append({'pair': pair, 'n': n, 't': t, 'passed': all(c.passed for c in checks),
                         'checks': [check_json(c) for c in checks if not c.passed]})

        rotations = []
        for n in range(max(low, 5), high + 1):
            for t in range(1, n - 2):
                bad = relations_map_exactly(map_rotation(n, t))
                rotations.append({'n': n, 't': t, 'passed': not bad, 'failures': bad})

        lemmas = []
        if job.option('lemmas'):
            lemma_jobs = [Task.execute(verify_lemma_suite, n) for n in range(low, high + 1)]
            for n, failures in zip(range(low, high + 1), Task.join(lemma_jobs)):
                lemmas.append({'n': n, 'passed': not failures, 'failures': [str(f) for f in failures]})

        passed = all(r['passed'] for r in rows + rotations + lemmas)
        write_json(out, job, {'maps': rows, 'rotations': rotations, 'lemmas': lemmas, 'passed': passed})
        return 0 if passed else 1

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

from typing import TextIO

from quasicox.command.job import JobSpec, write_json
from quasicox.model.lowindex import low_index_subgroups
from quasicox.model.errors import UsageError
from quasicox.settings.preferences import pref_max_low_index


class CmdLowIndex:
    """
    Conjugacy classes of low index subgroups of G_0 or G_t
    """

    name = 'low-index'
    help = 'count conjugacy classes of subgroups of small index'

    def configure(self, parser):
        parser.add_argument('--n', type=int, default=4)
        parser.add_argument('--t', type=int)
        parser.add_argument('--quotient', choices=('cycle', 'twisted'), default='cycle')
        parser.add_argument('--max-index', type=int, default=4)

    def run(self, job: JobSpec, out: TextIO) -> int:
        max_index = job.option('max_index', 4)
        limit = pref_max_low_index()
        if not 1 <= max_index <= limit:
            raise UsageError(f"low-index: max-index={max_index} is out of range, expected 1 <= max-index <= {limit}")
        group = job.group(default_t=1)
        tables = low_index_subgroups(group, max_index)
        counts = {k: 0 for k in range(1, max_index + 1)}
        for t in tables:
            counts[t.size] += 1
        write_json(out, job, {
            'group': group.name,
            'max_index': max_index,
            'counts': [{'index': k, 'classes': c} for k, c in counts.items()],
            'total': len(tables),
        })
        return 0

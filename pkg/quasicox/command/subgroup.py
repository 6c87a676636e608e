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

from quasicox.command.job import QUOTIENTS, SUBGROUPS, JobSpec, write_json
from quasicox.model.abelian import abelianization, expected_for
from quasicox.model.diagrams import presentation_gap, presentation_json
from quasicox.model.schreier import (pair_rep, rho_row, rho_step, s2_relators, subgroup_presentation,
                                     subgroup_rewriter, verify_rho_table, xi_generators)
from quasicox.model.word import format_word, gen, invert, product, substitute


def add_group_arguments(parser):
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--t', type=int, help='twisted quotient G_t')
    parser.add_argument('--quotient', choices=QUOTIENTS, default='none')
    parser.add_argument('--subgroup', choices=SUBGROUPS, default='pair')


class CmdRho:
    """
    One row of the pair stabilizer rewriting table
    """

    name = 'rho'
    help = 'print one rewriting table entry and check it in finite quotients'

    def configure(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--l', type=int, required=True)
        parser.add_argument('--m', type=int, required=True)

    def run(self, job: JobSpec, out: TextIO) -> int:
        n = job.require_n()
        k, l, m = job.option('k'), job.option('l'), job.option('m')
        row = rho_row(n, k, l, m)
        word, target = rho_step(n, k, l, m)
        xi = {g.name: g.definition for g in xi_generators(n)}
        lhs = product(pair_rep(k, l), gen(f"a{m}"), invert(pair_rep(*target)))
        failures = [f for f in verify_rho_table(n) if f"({k},{l},{m})@" in f.label]
        write_json(out, job, {
            'row': row.label,
            'word': format_word(word),
            'expanded': format_word(substitute(word, xi)),
            'coset_word': format_word(lhs),
            'target': list(target),
            'passed': not failures,
            'failures': [str(f) for f in failures],
        })
        return 0 if not failures else 1


class CmdRs:
    """
    Reidemeister-Schreier presentation of the pair or point stabilizer
    """

    name = 'rs'
    help = 'emit the subgroup presentation of the pair or point stabilizer'

    def configure(self, parser):
        add_group_arguments(parser)
        parser.add_argument('--format', choices=('json', 'gap'), default='json')

    def run(self, job: JobSpec, out: TextIO) -> int:
        group = job.group()
        rewriter = subgroup_rewriter(job.n, job.subgroup)
        p = subgroup_presentation(group, rewriter)
        if job.format == 'gap':
            out.write(presentation_gap(p))
            return 0
        write_json(out, job, {
            'group': group.name,
            'cosets': rewriter.table.size,
            'generators': [{'name': g.name, 'definition': format_word(g.definition)}
                           for g in rewriter.generators],
            'empty_s2': all(not w for _, w in s2_relators(rewriter)),
            'presentation': presentation_json(p),
        })
        return 0


class CmdAbelianize:
    """
    Abelian invariants of a group of A(Delta_n) or of its pair / point stabilizer
    """

    name = 'abelianize'
    help = 'abelian invariants of the pair / point stabilizer (or of the group)'

    def configure(self, parser):
        add_group_arguments(parser)
        parser.add_argument('--whole', action='store_true', help='abelianize the group itself')

    def run(self, job: JobSpec, out: TextIO) -> int:
        group = job.group()
        key = job.group_key()
        body = {'group': group.name}
        if job.option('whole'):
            inv = abelianization(group)
        else:
            inv = abelianization(subgroup_presentation(group, subgroup_rewriter(job.n, job.subgroup)))
            subgroup = 'point' if job.subgroup == 'point' else 'pair'
            if not (subgroup == 'point' and key is None):
                expected = expected_for(key, subgroup, job.n)
                body.update({'expected': expected.to_json(), 'match': expected == inv})
        body.update(inv.to_json())
        body['primary'] = str(inv)
        write_json(out, job, body)
        return 0 if body.get('match', True) else 1

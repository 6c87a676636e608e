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

from quasicox.command.job import QUOTIENTS, JobSpec, write_json
from quasicox.model.diagrams import (Diagram, PresentationSpec, artin_presentation, coxeter_presentation,
                                     cycle_quotient, diagram_Dn, diagram_delta_tn, diagram_ngon,
                                     diagram_path, flag_cycle_quotient, flag_quotient,
                                     presentation_gap, presentation_json, quotient_presentation,
                                     twisted_quotient)
from quasicox.model.errors import UsageError


class CmdPresent:
    """
    Emit an Artin / Coxeter presentation or one of its one-relator quotients
    """

    name = 'present'
    help = 'emit a presentation (json, gap or text)'

    def configure(self, parser):
        parser.add_argument('--diagram', choices=('ngon', 'dn', 'delta', 'path'), default='ngon')
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--t', type=int)
        parser.add_argument('--quotient', choices=QUOTIENTS, default='none')
        parser.add_argument('--coxeter', action='store_true', help='add g^2 = 1 for every generator')
        parser.add_argument('--format', choices=('json', 'gap', 'text'), default='json')

    def diagram(self, job: JobSpec) -> Diagram:
        kind = job.option('diagram', 'ngon')
        if kind == 'path':
            return diagram_path(job.require_n(1))
        n = job.require_n(4 if kind != 'ngon' else 3)
        if kind == 'dn':
            return diagram_Dn(n)
        if kind == 'delta':
            return diagram_delta_tn(n, job.require_t(1, n - 3))
        return diagram_ngon(n)

    def quotient(self, job: JobSpec, d: Diagram) -> PresentationSpec:
        kind = job.option('diagram', 'ngon')
        if job.quotient == 'none':
            return None
        if kind == 'ngon':
            if job.quotient == 'cycle':
                return cycle_quotient(d.n)
            return twisted_quotient(d.n, job.require_t(1, d.n - 2))
        if kind == 'delta':
            return flag_cycle_quotient(d.n, d.t) if job.quotient == 'cycle' else flag_quotient(d.n, d.t)
        raise UsageError(f"present: --quotient {job.quotient} needs --diagram ngon or delta")

    def build(self, job: JobSpec) -> PresentationSpec:
        d = self.diagram(job)
        base = coxeter_presentation(d) if job.option('coxeter') else artin_presentation(d)
        q = self.quotient(job, d)
        if q is None:
            return base
        if not job.option('coxeter'):
            return q
        return quotient_presentation(base, q.extra_relators, q.relator_labels, f"{base.name}/{q.name}")

    def run(self, job: JobSpec, out: TextIO) -> int:
        p = self.build(job)
        if job.format == 'gap':
            out.write(presentation_gap(p))
        elif job.format == 'text':
            out.write(f"{p.name}\n")
            out.write(f"generators: {', '.join(p.generators)}\n")
            for label, lhs, rhs in p.checks():
                out.write(f"{label}: {lhs} = {rhs}\n")
        else:
            d = self.diagram(job)
            write_json(out, job, {
                'diagram': {'label': d.label, 'n': d.n, 'edges': [list(e) for e in d.sorted_edges()]},
                'presentation': presentation_json(p),
            })
        return 0

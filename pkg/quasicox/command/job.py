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

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, TextIO, Tuple
import argparse
import json
import re

from quasicox.extension.version import tool_version
from quasicox.model.diagrams import PresentationSpec, ngon_presentation, ngon_quotient
from quasicox.model.errors import UsageError

QUOTIENTS = ('none', 'cycle', 'twisted')
SUBGROUPS = ('pair', 'pair-generic', 'point')
RANGE_RE = re.compile(r'\s*(\d+)\s*(?:\.\.|-|:)\s*(\d+)\s*\Z')


@dataclass
class JobSpec:
    """
    One command line request, validated before dispatch.
    """
    command: str
    n: Optional[int] = None
    t: Optional[int] = None
    quotient: str = 'none'
    subgroup: str = 'pair'
    format: str = 'json'
    threads: int = 1
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace, threads: int) -> 'JobSpec':
        values = dict(vars(args))
        known = {k: values.pop(k) for k in ('n', 't', 'quotient', 'subgroup', 'format') if k in values}
        values.pop('threads', None)
        values.pop('log_level', None)
        command = values.pop('command')
        known = {k: v for k, v in known.items() if v is not None}
        return cls(command=command, threads=threads, options=values, **known)

    def option(self, name: str, default=None):
        value = self.options.get(name)
        return default if value is None else value

    def params(self) -> Dict[str, Any]:
        """Request parameters for document headers; unset values are left out."""
        params = {'n': self.n, 't': self.t, 'quotient': self.quotient,
                  'subgroup': self.subgroup, 'format': self.format}
        params.update(self.options)
        return {k: v for k, v in params.items() if v is not None and not callable(v)}

    def require_n(self, low: int = 4, high: int = None) -> int:
        if self.n is None:
            raise UsageError(f"{self.command}: --n is required ({low} <= n)")
        if self.n < low or (high is not None and self.n > high):
            upper = f" <= {high}" if high is not None else ""
            raise UsageError(f"{self.command}: n={self.n} is out of range, expected {low} <= n{upper}")
        return self.n

    def require_t(self, low: int, high: int) -> int:
        if self.t is None:
            raise UsageError(f"{self.command}: --t is required ({low} <= t <= {high})")
        if not low <= self.t <= high:
            raise UsageError(f"{self.command}: t={self.t} is out of range, expected {low} <= t <= {high}")
        return self.t

    def group_key(self, default_t: int = None) -> Optional[int]:
        """
        Which group of A(Delta_n) the job is about: None for A(Delta_n) itself,
        0 for the cycle quotient G_0, t for G_t. A bare --t selects G_t;
        default_t stands in for a missing --t of a twisted quotient.
        """
        n = self.require_n()
        quotient = self.quotient
        if quotient == 'none' and self.t is not None:
            quotient = 'twisted'
        if quotient == 'none':
            return None
        if quotient == 'cycle':
            if self.t is not None:
                raise UsageError(f"{self.command}: --t={self.t} selects a twisted quotient, drop it or use --quotient twisted")
            return 0
        if self.t is None and default_t is not None:
            return default_t
        return self.require_t(1, n - 2)

    def group(self, default_t: int = None) -> PresentationSpec:
        key = self.group_key(default_t)
        return ngon_presentation(self.n) if key is None else ngon_quotient(self.n, key)


def parse_range(text: str) -> Tuple[int, int]:
    """'5..12' -> (5, 12)"""
    m = RANGE_RE.match(text or '')
    if not m:
        raise UsageError(f"Malformed range {text!r}, expected A..B")
    low, high = int(m.group(1)), int(m.group(2))
    if low > high:
        raise UsageError(f"Empty range {text!r}")
    return low, high


def document(job: JobSpec, body: Dict[str, Any]) -> Dict[str, Any]:
    doc = {'tool_version': tool_version(), 'command': job.command, 'params': job.params()}
    doc.update(body)
    return doc


def write_json(out: TextIO, job: JobSpec, body: Dict[str, Any]):
    json.dump(document(job, body), out, indent=2)
    out.write("\n")


def write_tsv(out: TextIO, header: List[str], rows: List[List[Any]]):
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(v) for v in row) + "\n")

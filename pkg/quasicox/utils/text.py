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

from typing import Any, Dict, Iterable, Tuple
import re

INTERPOLATE_RE = re.compile(r'\{\{(.*?)\}\}')


def interpolator(values: Dict[str, Any]):
    def sub(m: re.Match) -> str:
        return str(values.get(m.group(1).strip(), '???'))
    return sub


def merge(template: str, values: Dict[str, Any]) -> str:
    """Fill {{name}} slots; unknown names render as ???."""
    return INTERPOLATE_RE.sub(interpolator(values), template)


def gap_strings(names: Iterable[str]) -> str:
    return ", ".join(f'"{n}"' for n in names)


def gap_list_body(entries: Iterable[Tuple[str, str]], indent: str = "  ") -> str:
    """
    Body of a GAP list literal, one (item, comment) per line. The last
    item carries no separator.
    """
    entries = list(entries)
    lines = []
    for i, (item, comment) in enumerate(entries):
        sep = ',' if i < len(entries) - 1 else ' '
        lines.append(f"{indent}{item}{sep}  # {comment}" if comment else f"{indent}{item}{sep.strip()}")
    return "\n".join(lines)

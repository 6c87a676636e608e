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

from quasicox.extension.pref import Preference

_GROUP = ""

# Worker threads used to run independent (n, t) jobs
pref_threads = Preference[int](group=_GROUP, name="threads", default=1)

# Level of the package logger: DEBUG, INFO, WARNING, ERROR
pref_log_level = Preference[str](group=_GROUP, name="log_level", default="WARNING")

# Extra diagnostics from the search and rewriting code
pref_debug = Preference[bool](group=_GROUP, name="debug", default=False, value_type=bool)

# Memoise per-n coset tables and subgroup relation rows
pref_cache_enabled = Preference[bool](group=_GROUP, name="cache", default=True, value_type=bool)

# Largest n accepted by the reproduce command
pref_max_reproduce_n = Preference[int](group=_GROUP, name="max_reproduce_n", default=40)

# Largest index accepted by the low-index search
pref_max_low_index = Preference[int](group=_GROUP, name="max_low_index", default=8)

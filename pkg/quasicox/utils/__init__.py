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

from functools import wraps
import time

from quasicox.settings.logging import QuasicoxLogger


class traceTime:

    def __init__(self, label=''):
        self.label = label
        self.duration = 0

    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, type, value, traceback):
        self.duration = int((time.perf_counter() - self.t) * 1000)
        QuasicoxLogger.info("{}: {:,d} ms", self.label, self.duration)


def traced(label):
    def deco(f):
        @wraps(f)
        def wrapper(*args, **kwargs):
            with traceTime(label):
                return f(*args, **kwargs)
        return wrapper
    return deco

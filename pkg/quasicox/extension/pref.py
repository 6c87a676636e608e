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

from dataclasses import dataclass
from typing import Generic, MutableMapping, TypeVar
import json
import os

from quasicox.extension.log import Logger

T = TypeVar('T')

_log = Logger(tag='[quasicox.pref]')

_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off', ''}


@dataclass
class Preference(Generic[T]):
    """
    Typed setting stored in the process environment as {root}_{group}_{name}.
    """
    group: str
    name: str
    default: T = None
    value_type: type = None
    root: str = "QUASICOX"
    serializer: object = json
    environ: MutableMapping[str, str] = None

    # ─────────
    def __post_init__(self):
        if self.value_type is None:
            self.value_type = type(self.default) if self.default is not None else str
        if not hasattr(self.serializer, 'dumps'):
            raise TypeError("serializer does not provide a dumps method")
        if not hasattr(self.serializer, 'loads'):
            raise TypeError("serializer does not provide a loads method")
        if self.environ is None:
            self.environ = os.environ

    # ─────────
    @property
    def key(self) -> str:
        parts = [self.root, self.group, self.name]
        return "_".join(p.upper() for p in parts if p)

    # ─────────
    def read(self) -> T:
        raw = self.environ.get(self.key)
        if raw is None:
            return self.default
        try:
            if self.value_type == bool:
                value = raw.strip().lower()
                if value in _TRUE:
                    return True
                if value in _FALSE:
                    return False
                raise ValueError(raw)
            elif self.value_type == int:
                return int(raw)
            elif self.value_type == float:
                return float(raw)
            elif self.value_type == str:
                return raw or self.default
            else:
                return self.read_object(raw)
        except ValueError:
            _log.warn("Ignoring invalid value for {}: {!r}", self.key, raw)
        return self.default

    # ─────────
    # Read/Write shortcut
    def __call__(self, *args) -> T:
        n = len(args)
        if n == 0:
            return self.read()
        if n > 1:
            raise ValueError("This function accepts only one argument")
        self.write(args[0])

    # ─────────
    def write(self, value: T):
        if value is None:
            self.environ.pop(self.key, None)
        elif self.value_type == bool:
            self.environ[self.key] = '1' if value else '0'
        elif self.value_type in (int, float, str):
            self.environ[self.key] = str(self.value_type(value))
        else:
            self.write_object(value)

    # ─────────
    def write_object(self, value):
        if not value:
            self.environ.pop(self.key, None)
            return
        self.environ[self.key] = self.serializer.dumps(value)

    # ─────────
    def read_object(self, raw: str):
        if not raw:
            return self.default
        value = self.serializer.loads(raw)
        return value if value else self.default

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


class QuasicoxError(Exception):
    """Base class of every error raised by the library."""


class ArityError(QuasicoxError, ValueError):
    """Too few words for a cycle commutator."""


class DomainError(QuasicoxError, ValueError):
    """A numeric parameter (n, t, k, l, m, index) is outside its valid range."""

    def __init__(self, name: str, value, valid: str):
        super().__init__(f"{name}={value} is out of range, expected {valid}")
        self.name = name
        self.value = value
        self.valid = valid


class WordParseError(QuasicoxError, ValueError):
    """Malformed word text."""


class UnknownGeneratorError(QuasicoxError, ValueError):
    """A word mentions a generator that is not declared."""

    def __init__(self, name: str, context: str = ''):
        where = f" in {context}" if context else ''
        super().__init__(f"Unknown generator {name!r}{where}")
        self.name = name


class DegreeMismatchError(QuasicoxError, ValueError):
    """Composition of group elements of different degree or kind."""


class UnassignedGeneratorError(QuasicoxError, ValueError):
    """Evaluation hit a generator without an image."""

    def __init__(self, name: str):
        super().__init__(f"Generator {name!r} has no assigned image")
        self.name = name


class UsageError(QuasicoxError):
    """Invalid command line request."""


def check_range(name: str, value: int, low: int, high: int = None):
    """
    Raise DomainError unless low <= value (<= high).
    """
    if value < low or (high is not None and value > high):
        valid = f"{low} <= {name}" + (f" <= {high}" if high is not None else "")
        raise DomainError(name, value, valid)
    return value

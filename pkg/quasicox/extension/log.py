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

import logging


class Logger:
    """
    Tagged logger with str.format templates, backed by the logging module.
    """

    def __init__(self, tag: str = '[Log]', debug: bool = False, name: str = 'quasicox'):
        self.tag = tag
        self._debug = debug
        self._logger = logging.getLogger(name)

    @property
    def logger(self) -> logging.Logger:
        return self._logger

    def enable_debug(self, value: bool = True):
        self._debug = value
        if value:
            self._logger.setLevel(logging.DEBUG)

    def _format(self, template: str, escape: bool, args, kwargs) -> str:
        if escape:
            template = template.replace('{', '{{').replace('}', '}}')
        return f"{self.tag} {template}".format(*args, **kwargs)

    def info(self, template: str, *args, escape: bool = False, **kwargs):
        self._logger.info(self._format(template, escape, args, kwargs))

    def error(self, template: str, *args, escape: bool = False, **kwargs):
        self._logger.error(self._format(template, escape, args, kwargs))

    def warn(self, template: str, *args, escape: bool = False, **kwargs):
        self._logger.warning(self._format(template, escape, args, kwargs))

    def debug(self, template: str, *args, escape: bool = False, **kwargs):
        if self._debug:
            self._logger.debug(self._format(template, escape, args, kwargs))


def configure(level: str = 'WARNING', stream=None):
    """
    Attach a stderr handler to the package logger. Idempotent.
    """
    root = logging.getLogger('quasicox')
    if not any(getattr(h, '_quasicox', False) for h in root.handlers):
        handler = logging.StreamHandler(stream)
        handler.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
        handler._quasicox = True
        root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    return root

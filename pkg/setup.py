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

from setuptools import setup

from quasicox import __version__

setup(
    name='quasicox',
    version=__version__,
    packages=[
        'quasicox',
        'quasicox.command',
        'quasicox.extension',
        'quasicox.model',
        'quasicox.settings',
        'quasicox.utils',
    ],
    maintainer="Quasicox Developers",
    url="https://github.com/quasicox/quasicox",
    description="Presentations, word maps and stabilizer abelianizations for quotients of Artin groups",
    python_requires='>=3.8',
    install_requires=['numpy', 'sympy', 'networkx'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['quasicox=quasicox.command:run']},
    include_package_data=True,
)

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

__version__ = "0.2.1"
__author__ = "Quasicox Developers"
__copyright__ = "Copyright (c) 2026, Quasicox Developers."
__license__ = "GPLv3"
__maintainer__ = "https://github.com/quasicox/"

# JSON documents emitted by the command line carry this schema version
__schema_version__ = "1"

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

import argparse
import sys
import traceback
from typing import Dict, List, TextIO

from quasicox.command.job import JobSpec
from quasicox.extension import log
from quasicox.extension.threading import Task
from quasicox.extension.version import tool_version
from quasicox.model.errors import QuasicoxError
from quasicox.settings.logging import QuasicoxLogger
from quasicox.settings.preferences import pref_log_level, pref_threads

# Import Commands
from .present import CmdPresent
from .maps import CmdIsomap, CmdVerifyMaps
from .subgroup import CmdAbelianize, CmdRho, CmdRs
from .lowindex import CmdLowIndex
from .reproduce import CmdReproduce

COMMANDS: Dict[str, object] = {}


def addCommand(cmd):
    COMMANDS[cmd.name] = cmd


# Register Commands
addCommand(CmdPresent())
addCommand(CmdIsomap())
addCommand(CmdRho())
addCommand(CmdRs())
addCommand(CmdAbelianize())
addCommand(CmdLowIndex())
addCommand(CmdReproduce())
addCommand(CmdVerifyMaps())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='quasicox', description='Artin group quotients and their stabilizer subgroups')
    parser.add_argument('--version', action='version', version=tool_version())
    parser.add_argument('--threads', type=int, help='worker threads (default: QUASICOX_THREADS or 1)')
    parser.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR (default: QUASICOX_LOG_LEVEL)')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True
    for name, cmd in COMMANDS.items():
        cmd.configure(sub.add_parser(name, help=cmd.help, description=cmd.__doc__))
    return parser


def main(argv: List[str] = None, out: TextIO = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    log.configure(args.log_level or pref_log_level())
    threads = args.threads or pref_threads()
    Task.configure(threads)
    try:
        job = JobSpec.from_args(args, threads)
        QuasicoxLogger.debug("{} {}", job.command, job.params())
        return COMMANDS[job.command].run(job, out)
    except QuasicoxError as ex:
        QuasicoxLogger.error(str(ex), escape=True)
        sys.stderr.write(f"quasicox: {ex}\n")
        return 2
    except Exception:
        QuasicoxLogger.error(traceback.format_exc(), escape=True)
        return 1


def run():
    sys.exit(main())

# -*- mode:python; coding:utf-8 -*-

# Copyright (c) 2020 IBM Corp. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Starting point for the crossfree CLI."""

import logging

from ilcli import Command  # type: ignore

from crossfree import __version__
from crossfree.core.commands.check import CheckCmd
from crossfree.core.commands.color import ColorCmd
from crossfree.core.commands.from_grid import FromGridCmd
from crossfree.core.commands.gen import GenCmd
from crossfree.core.commands.schema import SchemaCmd
from crossfree.core.commands.solve import SolveCmd
from crossfree.core.commands.support import DualCmd, IntersectionCmd, PrimalCmd
from crossfree.core.commands.verify import VerifyCmd
from crossfree.utils import log

logger = logging.getLogger('crossfree')


class Crossfree(Command):
    """Build and check supports of hypergraphs drawn on embedded graphs."""

    subcommands = [
        CheckCmd,
        PrimalCmd,
        DualCmd,
        IntersectionCmd,
        VerifyCmd,
        ColorCmd,
        SolveCmd,
        GenCmd,
        FromGridCmd,
        SchemaCmd
    ]

    def _init_arguments(self) -> None:
        self.add_argument(
            '-V',
            '--version',
            help='Display the version of crossfree.',
            action='version',
            version=f'Crossfree version v{__version__}'
        )
        self.add_argument('-v', '--verbose', help='Display verbose output.', action='count', default=0)


def run() -> None:
    """Run the crossfree cli."""
    log.set_global_logging_levels()
    logger.debug('Main entry point.')

    exit(Crossfree().run())

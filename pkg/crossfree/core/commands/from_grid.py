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
"""Crossfree from-grid command."""
import argparse
import logging
import pathlib

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.err import CrossfreeError
from crossfree.core.models.system_file import SystemFile

logger = logging.getLogger(__name__)


class FromGridCmd(Command):
    """Expand a grid shorthand file into explicit vertices, rotations and families."""

    name = 'from-grid'

    def _init_arguments(self) -> None:
        cmd_utils.add_file_argument(self, 'holding the grid shorthand')
        self.add_argument(
            f'-{const.ARG_OUTPUT_SHORT}',
            f'--{const.ARG_OUTPUT}',
            help='Path of the explicit system file, printed as yaml when omitted.',
            type=pathlib.Path
        )

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree from-grid.')
        log.set_log_level_from_args(args)
        try:
            shorthand = SystemFile.read(args.file)
            if shorthand.grid is None:
                logger.warning(f'{args.file} is already explicit.')
            cmd_utils.emit(shorthand.expand(), args.output)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK

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
"""Crossfree check command."""
import argparse
import logging

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.embedding import total_genus
from crossfree.core.err import CrossfreeError
from crossfree.core.graph_system import is_cross_free, is_non_piercing
from crossfree.core.models.report import CheckReport

logger = logging.getLogger(__name__)


class CheckCmd(Command):
    """Report whether a system is cross-free and non-piercing, and the genus of its host."""

    name = 'check'

    def _init_arguments(self) -> None:
        cmd_utils.add_file_argument(self, 'to check')
        cmd_utils.add_output_arguments(self)

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree check.')
        log.set_log_level_from_args(args)
        try:
            system = cmd_utils.read_system(args)
            cross_free, crossing = is_cross_free(system)
            non_piercing, piercing = is_non_piercing(system)
            report = CheckReport(
                vertices=system.host.num_vertices,
                edges=system.host.num_edges,
                genus=total_genus(system.host),
                cross_free=cross_free,
                crossing=crossing,
                non_piercing=non_piercing,
                piercing=piercing
            )
            if system.K is not None:
                report.mixed_cross_free, report.mixed_crossing = is_cross_free(system, mixed=True)
            cmd_utils.emit(report, args.output)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK

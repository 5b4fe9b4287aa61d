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
"""Crossfree primal, dual and intersection commands."""
import argparse
import logging

from ilcli import Command  # type: ignore

import crossfree.core.support_factory as sfact
import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.embedding import total_genus
from crossfree.core.err import CrossfreeError
from crossfree.core.models.report import SupportReport
from crossfree.utils.export import to_dot, write_dot

logger = logging.getLogger(__name__)


class _SupportCmd(Command):
    """Build a support of the hypergraph named by the command."""

    name = ''

    def _init_arguments(self) -> None:
        sfact.init_arguments(self)

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug(f'Entering crossfree {self.name}.')
        log.set_log_level_from_args(args)
        try:
            config = cmd_utils.settings_from_args(args)
            system = cmd_utils.read_system(args)
            result = sfact.build_support(self.name, system, config.pipeline)
            cmd_utils.emit(SupportReport.from_result(result, total_genus(system.host)), args.output)
            if args.dot is not None:
                write_dot(to_dot(result.support, name=self.name, meaning=result.vertex_meaning), args.dot)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK


class PrimalCmd(_SupportCmd):
    """Build a support on the blue vertices, one hyperedge per H member."""

    name = const.MODE_PRIMAL


class DualCmd(_SupportCmd):
    """Build a support on the H members, one hyperedge per host vertex."""

    name = const.MODE_DUAL


class IntersectionCmd(_SupportCmd):
    """Build a support on the H members, one hyperedge per K member."""

    name = const.MODE_INTERSECTION

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
"""Crossfree color command."""
import argparse
import logging
import pathlib

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.err import CrossfreeError
from crossfree.core.models.report import ColorReport, SupportReport
from crossfree.core.solver import support_coloring
from crossfree.core.verify import check_no_monochromatic, extract_hypergraph

logger = logging.getLogger(__name__)


class ColorCmd(Command):
    """Color the elements of a hypergraph through its support so that no hyperedge is monochromatic."""

    name = 'color'

    def _init_arguments(self) -> None:
        cmd_utils.add_file_argument(self, 'the support was built from')
        self.add_argument(
            f'-{const.ARG_SUPPORT_SHORT}',
            f'--{const.ARG_SUPPORT}',
            help=const.ARG_DESC_SUPPORT,
            type=pathlib.Path,
            required=True
        )
        cmd_utils.add_output_arguments(self)

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree color.')
        log.set_log_level_from_args(args)
        try:
            system = cmd_utils.read_system(args)
            support_report = SupportReport.read(args.support)
            hg = extract_hypergraph(system, support_report.mode)
            coloring = support_coloring(support_report.to_graph(), hg, support_report.certified_genus)
            ok, failing = check_no_monochromatic(hg, coloring.colors)
            report = ColorReport(
                mode=support_report.mode, coloring=coloring, non_monochromatic=ok, failing_hyperedge=failing
            )
            logger.debug(f'{coloring.count} colors, Heawood bound {coloring.heawood_bound}')
            cmd_utils.emit(report, args.output)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK

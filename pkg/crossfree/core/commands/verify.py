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
"""Crossfree verify command."""
import argparse
import logging
import pathlib

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.embedding import total_genus
from crossfree.core.err import CrossfreeError
from crossfree.core.models.report import SupportReport, VerifyReport
from crossfree.core.verify import certify_genus, check_special_edges, extract_hypergraph, is_simple, is_support

logger = logging.getLogger(__name__)


class VerifyCmd(Command):
    """Re-verify a support report against its system file without trusting the construction."""

    name = 'verify'

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
        logger.debug('Entering crossfree verify.')
        log.set_log_level_from_args(args)
        try:
            system = cmd_utils.read_system(args)
            support_report = SupportReport.read(args.support)
            support = support_report.to_graph()
            supported, failing = is_support(support, extract_hypergraph(system, support_report.mode))
            simple = is_simple(support)
            genus = certify_genus(support)
            host_genus = total_genus(system.host)
            report = VerifyReport(
                mode=support_report.mode,
                passed=False,
                is_support=supported,
                failing_hyperedge=failing,
                simple=simple,
                genus=genus,
                host_genus=host_genus
            )
            passed = supported and simple and genus <= host_genus
            if support_report.mode == const.MODE_DUAL:
                report.special_edges, report.failing_special_edge = check_special_edges(system, support)
                passed = passed and report.special_edges
            report.passed = passed
            cmd_utils.emit(report, args.output)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        if not report.passed:
            logger.error(f'Support of {args.file} failed verification.')
            return const.EXIT_FAILURE
        return const.EXIT_OK

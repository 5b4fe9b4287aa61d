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
"""Crossfree solve command."""
import argparse
import logging

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.err import CrossfreeError, CrossfreeValidationError
from crossfree.core.models.report import SolveReport
from crossfree.core.solver import ProblemInstance, ProblemKind, brute_force_optimum, local_search
from crossfree.core.verify import extract_hypergraph

logger = logging.getLogger(__name__)


class SolveCmd(Command):
    """Run k-swap local search for a packing or covering problem on the hypergraph of a system."""

    name = 'solve'

    def _init_arguments(self) -> None:
        cmd_utils.add_file_argument(self, 'defining the hypergraph')
        self.add_argument(
            f'--{const.ARG_KIND}', help=const.ARG_DESC_KIND, choices=[kind.value for kind in ProblemKind], required=True
        )
        self.add_argument(
            f'-{const.ARG_MODE_SHORT}',
            f'--{const.ARG_MODE}',
            help=const.ARG_DESC_MODE + ' the problem is posed on.',
            choices=const.SUPPORT_MODES,
            default=const.MODE_PRIMAL
        )
        self.add_argument('-k', '--k', help='Largest swap size, overrides the config.', type=int)
        self.add_argument(f'--{const.ARG_SEED}', help=const.ARG_DESC_SEED, type=int, required=True)
        self.add_argument(
            '--capacity',
            help='Capacity of every hyperedge for capacitated packing.',
            type=int,
            default=const.DEFAULT_CAPACITY
        )
        self.add_argument(f'--{const.ARG_ORACLE}', help=const.ARG_DESC_ORACLE, action='store_true')
        cmd_utils.add_output_arguments(self)

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree solve.')
        log.set_log_level_from_args(args)
        try:
            if args.k is not None and args.k < 1:
                raise CrossfreeValidationError(f'Swap size must be positive, got {args.k}')
            config = cmd_utils.settings_from_args(args)
            system = cmd_utils.read_system(args)
            hg = extract_hypergraph(system, args.mode)
            kind = ProblemKind(args.kind)
            capacities = None
            if kind == ProblemKind.capacitated_packing:
                capacities = {name: args.capacity for name in hg.edges}
            try:
                instance = ProblemInstance(kind=kind, hg=hg, capacities=capacities)
            except ValueError as e:
                raise CrossfreeValidationError(f'Invalid {kind.value} instance: {e}')
            result = local_search(instance, config.solver)
            report = SolveReport(mode=args.mode, result=result)
            if args.oracle:
                report.optimum = brute_force_optimum(instance, config.oracle.max_solver_elements)
                if report.optimum.value:
                    report.ratio = result.value / report.optimum.value
            cmd_utils.emit(report, args.output)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK

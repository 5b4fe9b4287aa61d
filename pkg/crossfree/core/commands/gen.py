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
"""Crossfree gen command."""
import argparse
import logging
import pathlib

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.err import CrossfreeError, CrossfreeValidationError
from crossfree.core.models.report import GridReport
from crossfree.core.models.system_file import SystemFile
from crossfree.core.regions import GridSpec, Topology, build_layout, random_rectangle_layout, random_region_layout

logger = logging.getLogger(__name__)


class GenCmd(Command):
    """Generate a seeded random region system as a grid shorthand file."""

    name = 'gen'

    def _init_arguments(self) -> None:
        self.add_argument('--rows', help='Grid rows.', type=int, default=6)
        self.add_argument('--cols', help='Grid columns.', type=int, default=6)
        self.add_argument(
            '--topology', help='Grid surface.', choices=[t.value for t in Topology], default=Topology.plane.value
        )
        self.add_argument('--count', help='Number of H regions.', type=int, default=4)
        self.add_argument('--k-count', help='Number of K rectangles, none when zero.', type=int, default=0)
        self.add_argument('--red', help='Chance of a cell being red, no coloring when zero.', type=float, default=0.0)
        self.add_argument(
            '--blobs', help='Generate connected blobs instead of non-piercing rectangles.', action='store_true'
        )
        self.add_argument('--max-size', help='Largest blob in cells.', type=int, default=6)
        self.add_argument(f'--{const.ARG_SEED}', help=const.ARG_DESC_SEED, type=int, required=True)
        self.add_argument(
            f'-{const.ARG_OUTPUT_SHORT}',
            f'--{const.ARG_OUTPUT}',
            help='Path of the system file to write (.yaml, .yml or .json).',
            type=pathlib.Path,
            required=True
        )
        self.add_argument(
            '-r', '--report', help='Path of the grid report, printed as yaml when omitted.', type=pathlib.Path
        )

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree gen.')
        log.set_log_level_from_args(args)
        try:
            try:
                grid = GridSpec(rows=args.rows, cols=args.cols, topology=args.topology)
            except ValueError as e:
                raise CrossfreeValidationError(f'Invalid grid: {e}')
            if args.blobs:
                if args.k_count:
                    raise CrossfreeValidationError('Blob layouts carry no K family')
                layout = random_region_layout(grid, args.count, args.seed, args.max_size, args.red)
            else:
                layout = random_rectangle_layout(grid, args.count, args.seed, args.k_count, args.red)
            _, verdict = build_layout(layout)
            SystemFile(grid=layout).write(args.output)
            logger.debug(f'Wrote {len(layout.H)} regions on a {args.rows}x{args.cols} grid to {args.output}')
            report = GridReport(
                grid=grid, seed=args.seed, regions=len(layout.H), k_regions=len(layout.K or []), verdict=verdict
            )
            cmd_utils.emit(report, args.report)
        except CrossfreeError as e:
            return cmd_utils.fail(self.name, e)
        return const.EXIT_OK

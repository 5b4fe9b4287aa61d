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
"""Crossfree schema command."""
import argparse
import logging
import pathlib
from typing import Dict, Type

from ilcli import Command  # type: ignore

import crossfree.utils.log as log
from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.models.report import CheckReport, ColorReport, GridReport, SolveReport, SupportReport
from crossfree.core.models.report import VerifyReport
from crossfree.core.models.system_file import SystemFile

logger = logging.getLogger(__name__)

SCHEMAS: Dict[str, Type[CrossfreeBaseModel]] = {
    'system': SystemFile,
    'check': CheckReport,
    'support': SupportReport,
    'verify': VerifyReport,
    'color': ColorReport,
    'solve': SolveReport,
    'grid': GridReport
}


class SchemaCmd(Command):
    """Print the JSON schema of the system file or of a report."""

    name = 'schema'

    def _init_arguments(self) -> None:
        self.add_argument('-n', '--name', help='Schema to print.', choices=list(SCHEMAS), required=True)
        self.add_argument(
            f'-{const.ARG_OUTPUT_SHORT}',
            f'--{const.ARG_OUTPUT}',
            help='Path of the .json file receiving the schema, printed when omitted.',
            type=pathlib.Path
        )

    def _run(self, args: argparse.Namespace) -> int:
        logger.debug('Entering crossfree schema.')
        log.set_log_level_from_args(args)
        text = SCHEMAS[args.name].schema_json(indent=2)
        if args.output is None:
            logger.info(text)
            return const.EXIT_OK
        if args.output.suffix != '.json':
            logger.error(f'Schemas are written as .json, not {args.output.name}')
            return const.EXIT_INPUT_ERROR
        args.output.write_text(text + '\n', encoding=const.FILE_ENCODING)
        logger.info(f'Wrote the {args.name} schema to {args.output}')
        return const.EXIT_OK

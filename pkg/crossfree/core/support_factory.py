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
"""Register all support constructions here in the support_factory."""

import pathlib
from typing import Optional

from ilcli import Command  # type: ignore

from crossfree.core import const
from crossfree.core import supports
from crossfree.core.config import PipelineSettings
from crossfree.core.graph_system import GraphSystem
from crossfree.core.object_factory import ObjectFactory


def _dual(system: GraphSystem, settings: Optional[PipelineSettings] = None) -> supports.SupportResult:
    result, _ = supports.dual_support(system, settings)
    return result


# Create the singleton support factory
support_factory: ObjectFactory = ObjectFactory()

# Register all constructions here
support_factory.register_object(const.MODE_PRIMAL, supports.primal_support)
support_factory.register_object(const.MODE_DUAL, _dual)
support_factory.register_object(const.MODE_INTERSECTION, supports.intersection_support)


def build_support(
    mode: str, system: GraphSystem, settings: Optional[PipelineSettings] = None
) -> supports.SupportResult:
    """Run the construction registered for a mode."""
    return support_factory.get(mode)(system, settings)


def init_arguments(cmd: Command) -> None:
    """Feed the arguments to the argument parser."""
    cmd.add_argument(
        f'-{const.ARG_FILE_SHORT}',
        f'--{const.ARG_FILE}',
        help=const.ARG_DESC_FILE + ' to build a support for.',
        type=pathlib.Path,
        required=True,
    )
    cmd.add_argument(
        f'-{const.ARG_OUTPUT_SHORT}', f'--{const.ARG_OUTPUT}', help=const.ARG_DESC_OUTPUT, type=pathlib.Path
    )
    cmd.add_argument(
        f'-{const.ARG_CONFIG_SHORT}', f'--{const.ARG_CONFIG}', help=const.ARG_DESC_CONFIG, type=pathlib.Path
    )
    cmd.add_argument(f'--{const.ARG_DOT}', help=const.ARG_DESC_DOT, type=pathlib.Path)
    cmd.add_argument(f'--{const.ARG_AUDIT}', help=const.ARG_DESC_AUDIT, action='store_true')

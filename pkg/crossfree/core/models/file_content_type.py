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
"""File content types understood by the readers and writers."""
import pathlib
from enum import Enum

from crossfree.core.err import CrossfreeError


class FileContentType(Enum):
    """File Content type for read/write."""

    # JSON formatted content
    JSON = 1

    # YAML formatted content
    YAML = 2

    # Graphviz DOT text, write only
    DOT = 3

    @classmethod
    def to_content_type(cls, file_extension: str) -> 'FileContentType':
        """Get content type form file extension."""
        if file_extension == '.json':
            return FileContentType.JSON
        elif file_extension == '.yaml' or file_extension == '.yml':
            return FileContentType.YAML
        elif file_extension in ('.dot', '.gv'):
            return FileContentType.DOT

        raise CrossfreeError(f'Unsupported file extension {file_extension}')

    @classmethod
    def path_to_content_type(cls, path: pathlib.Path) -> 'FileContentType':
        """Get content type of a path from its suffix."""
        return cls.to_content_type(path.suffix.lower())

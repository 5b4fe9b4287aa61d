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
"""
Pydantic base model for use within the crossfree project and associated configuration.

System files, reports and the structured results of the core algorithms are pydantic models
(https://pydantic-docs.helpmanual.io/). They share one base so that strict parsing and the yaml/json round trip are
configured in a single place.
"""

import json
import logging
import pathlib
from typing import Any, Dict, Type, TypeVar

from pydantic import BaseModel, Extra, ValidationError

import crossfree.core.const as const
import crossfree.core.err as err
from crossfree.core.models.file_content_type import FileContentType

import yaml

logger = logging.getLogger(__name__)

ModelT = TypeVar('ModelT', bound='CrossfreeBaseModel')


def _error_location(error: ValidationError) -> str:
    """Return the dotted field path of the first pydantic error."""
    first = error.errors()[0]
    return '.'.join(str(part) for part in first['loc'])


class CrossfreeBaseModel(BaseModel):
    """
    Crossfree defined pydantic base model.

    This BaseModel provides two types of functionality:
    1. Overrides default configuation of the pydantic library with strict behaviours.
    2. Provides yaml/json reading and writing driven by the file extension.
    """

    class Config:
        """Overriding configuration class for pydantic base model."""

        allow_population_by_field_name = True

        # Enforce strict schema
        extra = Extra.forbid

        # Validate on assignment of variables to ensure no escapes
        validate_assignment = True

    def to_plain(self) -> Dict[str, Any]:
        """Return a json compatible dictionary using aliases."""
        return json.loads(self.json(exclude_none=True, by_alias=True))

    def dumps(self, content_type: FileContentType = FileContentType.YAML) -> str:
        """Serialize the model to yaml or json text."""
        if content_type == FileContentType.JSON:
            return self.json(exclude_none=True, by_alias=True, indent=2)
        if content_type == FileContentType.YAML:
            return yaml.safe_dump(self.to_plain(), sort_keys=False)
        raise err.CrossfreeError(f'Models cannot be serialized as {content_type}')

    def write(self, path: pathlib.Path) -> None:
        """
        Write out the model as yaml or json.

        Args:
            path: The output file location, its suffix selects the format.

        Raises:
            err.CrossfreeError: If a unknown file extension is provided.
        """
        content_type = FileContentType.path_to_content_type(path)
        with pathlib.Path(path).open('w', encoding=const.FILE_ENCODING) as write_file:
            write_file.write(self.dumps(content_type))

    @classmethod
    def parse_text(cls: Type[ModelT], text: str, content_type: FileContentType) -> ModelT:
        """
        Parse yaml or json text into the model.

        Raises:
            err.CrossfreeParseError: If the text is malformed or does not match the model, citing line or field.
        """
        try:
            if content_type == FileContentType.YAML:
                raw = yaml.safe_load(text)
            elif content_type == FileContentType.JSON:
                raw = json.loads(text)
            else:
                raise err.CrossfreeParseError(f'{content_type} input is not supported')
        except yaml.MarkedYAMLError as e:
            line = e.problem_mark.line + 1 if e.problem_mark is not None else None
            raise err.CrossfreeParseError(f'Malformed yaml: {e.problem}', f'line {line}' if line else None)
        except json.JSONDecodeError as e:
            raise err.CrossfreeParseError(f'Malformed json: {e.msg}', f'line {e.lineno}')
        if not isinstance(raw, dict):
            raise err.CrossfreeParseError(f'Expected a mapping at the top level of a {cls.__name__}', 'line 1')
        try:
            return cls.parse_obj(raw)
        except ValidationError as e:
            raise err.CrossfreeParseError(f'Invalid {cls.__name__}: {e.errors()[0]["msg"]}', _error_location(e))

    @classmethod
    def read(cls: Type[ModelT], path: pathlib.Path) -> ModelT:
        """
        Read a model from a yaml or json file.

        Args:
            path: The path of the file to read.
        Returns:
            The parsed model.
        """
        path = pathlib.Path(path)
        if not path.exists():
            raise err.CrossfreeNotFoundError(f'File {path} does not exist')
        content_type = FileContentType.path_to_content_type(path)
        logger.debug(f'Reading {cls.__name__} from {path}')
        return cls.parse_text(path.read_text(encoding=const.FILE_ENCODING), content_type)

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
"""Generic object factory."""

from typing import Any, Dict, List

from crossfree.core.err import CrossfreeNotFoundError


class ObjectFactory:
    """Allow registration and lookup of objects by mode name."""

    def __init__(self) -> None:
        """Initialize the objects dictionary as empty."""
        self._objects: Dict[str, Any] = {}

    def register_object(self, mode: str, obj: Any) -> None:
        """Register the object."""
        self._objects[mode] = obj

    def modes(self) -> List[str]:
        """Registered mode names in registration order."""
        return list(self._objects)

    def get(self, mode: str) -> Any:
        """Return the object registered for a mode."""
        try:
            return self._objects[mode]
        except KeyError:
            raise CrossfreeNotFoundError(f'Nothing is registered for mode {mode}')

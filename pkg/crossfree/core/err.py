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
"""Crossfree core errors module."""
from typing import Any, Optional


class CrossfreeError(RuntimeError):
    """
    General framework related errors.

    Attributes:
        msg (str): Human readable string describing the exception.
    """

    def __init__(self, msg: str):
        """Intialization for CrossfreeError.

        Args:
            msg (str): The error message
        """
        RuntimeError.__init__(self)
        self.msg = msg

    def __str__(self) -> str:
        """Return the error message if asked for a string."""
        return self.msg


class CrossfreeNotFoundError(CrossfreeError):
    """A vertex, dart, edge or family member that was referenced does not exist."""


class CrossfreeValidationError(CrossfreeError):
    """
    Semantic error in an input.

    Raised for disconnected members, missing colorings, unknown names and similar problems that make an input
    meaningless rather than unreadable.
    """


class CrossfreeParseError(CrossfreeError):
    """
    An input file could not be parsed.

    Attributes:
        msg (str): Human readable string describing the exception.
        location (str): Line or field the parser stopped at, when known.
    """

    def __init__(self, msg: str, location: Optional[str] = None):
        """
        Intialization for CrossfreeParseError.

        Args:
            msg: The error message
            location: Line number or dotted field path of the offending input.
        """
        super().__init__(f'{msg} (at {location})' if location else msg)
        self.location = location


class EmbeddingError(CrossfreeError):
    """Structural error in a rotation system, or an edit that the embedding cannot support."""


class ContractViolation(CrossfreeError):
    """
    A precondition or algorithmic invariant failed.

    Crossing inputs land here, as do post-condition failures that signal a bug upstream.

    Attributes:
        msg (str): Human readable string describing the exception.
        witness: Optional structured evidence of the violation, usually a report model.
    """

    def __init__(self, msg: str, witness: Optional[Any] = None):
        """
        Intialization for ContractViolation.

        Args:
            msg: The error message
            witness: Evidence of the violation.
        """
        super().__init__(msg)
        self.witness = witness


class StepBudgetExhausted(CrossfreeError):
    """A rewrite pipeline or search used up its configured step budget."""


class OracleSizeError(CrossfreeError):
    """An exhaustive oracle was asked to handle an instance above its size guard."""


class InfeasibleInstanceError(CrossfreeError):
    """An optimisation instance has no feasible solution."""

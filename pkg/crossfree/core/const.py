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
"""Core constants module containing all constants."""

CROSSFREE_CONFIG_FILE = 'config.ini'
PACKAGE_RESOURCES = 'crossfree.resources'

FILE_ENCODING = 'utf8'

SYSTEM_FORMAT_VERSION = 1

# exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONTRACT_VIOLATION = 2
EXIT_INPUT_ERROR = 3
EXIT_BUDGET_EXHAUSTED = 4

# family scopes
FAMILY_H = 'H'
FAMILY_K = 'K'
SCOPE_BOTH = 'both'
BYPASS_SCOPES = [FAMILY_H, FAMILY_K, SCOPE_BOTH]

# hypergraph modes
MODE_PRIMAL = 'primal'
MODE_DUAL = 'dual'
MODE_INTERSECTION = 'intersection'
SUPPORT_MODES = [MODE_PRIMAL, MODE_DUAL, MODE_INTERSECTION]

# edge labels written by the rewrite operations
LABEL_CYCLE = 'cycle'
LABEL_CHORD = 'chord'
LABEL_SUBDIVIDED = 'subdivided'
LABEL_PENDANT = 'pendant'

# separator used when naming vertices created by an edit
VERTEX_SEP = '~'
# prefix of the dummy singleton members placed on K-vertices
DUMMY_PREFIX = 'F'

# argument names
ARG_FILE = 'file'
ARG_FILE_SHORT = 'f'
ARG_DESC_FILE = 'Path of the system file'

ARG_OUTPUT = 'output'
ARG_OUTPUT_SHORT = 'o'
ARG_DESC_OUTPUT = 'Path of the report file (.yaml, .yml or .json), printed as yaml when omitted'

ARG_CONFIG = 'config'
ARG_CONFIG_SHORT = 'c'
ARG_DESC_CONFIG = 'Path of a config.ini overriding the packaged defaults'

ARG_MODE = 'mode'
ARG_MODE_SHORT = 'm'
ARG_DESC_MODE = 'Hypergraph mode'

ARG_SUPPORT = 'support'
ARG_SUPPORT_SHORT = 's'
ARG_DESC_SUPPORT = 'Path of a support report produced by primal, dual or intersection'

ARG_SEED = 'seed'
ARG_DESC_SEED = 'Seed for every random choice'

# default hyperedge capacity for capacitated packing when none is given
DEFAULT_CAPACITY = 1

ARG_DOT = 'dot'
ARG_DESC_DOT = 'Path of a .dot or .gv file receiving the support graph'

ARG_AUDIT = 'audit'
ARG_DESC_AUDIT = 'Re-verify cross-freeness after every rewrite'

ARG_KIND = 'kind'
ARG_DESC_KIND = 'Packing or covering problem to solve'

ARG_ORACLE = 'oracle'
ARG_DESC_ORACLE = 'Also compute the exact optimum by brute force and report the ratio'

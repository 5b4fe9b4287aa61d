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
crossfree - A python library and command line utility for hypergraph supports.

Crossfree builds primal, dual and intersection supports for hypergraphs whose hyperedges are connected subgraphs of a
host graph embedded on an oriented surface. The supports it produces never exceed the genus of the host embedding,
and every construction is re-checked by an independent verifier before it is reported.
"""

__version__ = '0.1.0'

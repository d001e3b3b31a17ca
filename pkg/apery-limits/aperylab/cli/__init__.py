# SPDX-FileCopyrightText: Copyright (c) 2023, NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from ._cache import CacheEntry
from ._cache import CacheKey
from ._cache import SequenceCache
from ._commands import cmd_constants
from ._commands import cmd_export
from ._commands import cmd_grassmann
from ._commands import cmd_limit
from ._commands import cmd_modular
from ._commands import cmd_monodromy
from ._commands import random_perturbation
from ._config import RunConfig
from ._config import default_cache_dir
from ._main import cli
from ._main import render
from ._selftest import cmd_selftest
from ._selftest import selftest_plan

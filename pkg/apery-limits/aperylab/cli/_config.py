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

import os
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Union

import psutil

from aperylab.utils import InputError

CACHE_DIR_ENV = "APERYLAB_CACHE_DIR"
OUTPUT_FORMATS = ("text", "json")


def default_cache_dir() -> Path:
    """APERYLAB_CACHE_DIR when set, ~/.cache/aperylab otherwise."""
    value = os.environ.get(CACHE_DIR_ENV)
    if value:
        return Path(value)
    return Path.home() / ".cache" / "aperylab"


@dataclass
class RunConfig:
    """
    Settings shared by every command.

    Attributes
    ----------
    digits: int
        Target decimal digits of reported limits, at least 10
    terms: int
        Number of recurrence terms, at least 10
    cache_dir: Path
        Where computed sequences are persisted
    output: str
        "text" or "json"
    seed: int
        Seed for the randomized checks
    num_workers: int
        Processes used for independent computations
    """
    digits: int = 50
    terms: int = 400
    cache_dir: Union[str, Path, None] = None
    output: str = "text"
    seed: int = 0
    num_workers: int = field(default_factory=lambda: psutil.cpu_count(logical=False) or 1)

    def __post_init__(self):
        if self.digits < 10:
            raise InputError(f"digits must be at least 10, got {self.digits}")
        if self.terms < 10:
            raise InputError(f"terms must be at least 10, got {self.terms}")
        if self.output not in OUTPUT_FORMATS:
            raise InputError(f"output must be one of {OUTPUT_FORMATS}, got {self.output!r}")
        if self.num_workers < 1:
            raise InputError(f"num_workers must be positive, got {self.num_workers}")
        self.cache_dir = default_cache_dir() if self.cache_dir is None else Path(self.cache_dir)

    @property
    def as_json(self) -> bool:
        return self.output == "json"

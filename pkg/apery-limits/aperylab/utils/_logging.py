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

import logging

from tqdm import tqdm

_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def configure_logging(log_level=logging.INFO):
    """
    Configure the `aperylab` logger hierarchy. Intended to be called once from the command line entry point.

    Parameters
    ----------
    log_level: int
        Level for the package logger, e.g. `logging.DEBUG`
    """
    logger = logging.getLogger("aperylab")
    logger.setLevel(log_level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))
        logger.addHandler(handler)
    logger.propagate = False


def progress(iterable, logger, desc, total=None):
    """
    Wrap a long coefficient loop with a progress bar that is only shown when `logger` is at DEBUG.
    """
    return tqdm(iterable, desc=desc, total=total, leave=False, disable=not logger.isEnabledFor(logging.DEBUG))

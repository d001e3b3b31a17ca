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

import math
import threading
from fractions import Fraction
from functools import reduce
from typing import Dict

import mpmath

from aperylab.utils import InputError

_BERNOULLI_CACHE: Dict[int, Fraction] = {}
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """
    Exact Bernoulli number B_k with the convention B_1 = -1/2. Values are cached per k.
    """
    if k < 0:
        raise InputError(f"Bernoulli index must be nonnegative, got {k}")
    cached = _BERNOULLI_CACHE.get(k)
    if cached is not None:
        return cached
    with _BERNOULLI_LOCK:
        if k not in _BERNOULLI_CACHE:
            p, q = mpmath.bernfrac(k)
            _BERNOULLI_CACHE[k] = Fraction(int(p), int(q))
        return _BERNOULLI_CACHE[k]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def lcm_range(n: int) -> int:
    """LCM(1, 2, ..., n)."""
    if n < 1:
        raise InputError(f"lcm_range needs n >= 1, got {n}")
    return reduce(lambda x, y: x * y // math.gcd(x, y), range(1, n + 1), 1)

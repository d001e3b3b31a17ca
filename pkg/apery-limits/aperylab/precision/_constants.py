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

from mpmath import mp
from mpmath import mpf

from aperylab.utils import InputError


def _check_digits(P):
    if P < 1:
        raise InputError(f"precision must be at least 1 digit, got {P}")


def pi(P: int) -> mpf:
    """pi rounded to P significant digits."""
    _check_digits(P)
    with mp.workdps(P):
        return +mp.pi


def euler_gamma(P: int) -> mpf:
    """The Euler-Mascheroni constant rounded to P significant digits."""
    _check_digits(P)
    with mp.workdps(P):
        return +mp.euler

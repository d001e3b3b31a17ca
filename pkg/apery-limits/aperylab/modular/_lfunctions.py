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
from fractions import Fraction

from mpmath import mp
from mpmath import mpf

from aperylab.precision import to_mpf
from aperylab.special import chi3_L
from aperylab.special import zeta_int
from aperylab.utils import InputError

from ._eisenstein import F_COMBINATIONS
from ._eisenstein import check_rational_variety

logger = logging.getLogger(__name__)


def euler_factor(variety: str, s: int) -> Fraction:
    """
    The finite factor sum_i c_i i^(2 - s) in L(F, s) = (sum_i c_i i^(2 - s)) zeta(s) zeta(s - 3), for V12 and V16.
    """
    check_rational_variety(variety)
    if variety == "V18":
        raise InputError("the V18 form is a twist; its L-function is L(chi_3, s - 3) L(chi_3, s)")
    return sum((c * Fraction(i)**(2 - s) for i, c in F_COMBINATIONS[variety].items()), Fraction(0))


def L_F(variety: str, s: int, P: int) -> mpf:
    """
    L(F, s) from the closed forms: a finite Euler factor times zeta(s) zeta(s - 3) for V12 and V16, and
    L(chi_3, s - 3) L(chi_3, s) for V18.

    Parameters
    ----------
    variety: str
        One of "V12", "V16", "V18"
    s: int
        s = 3 or s >= 5
    P: int
        Decimal digits
    """
    check_rational_variety(variety)
    if not (s == 3 or s >= 5):
        raise InputError(f"L(F, s) is only evaluated at s = 3 or s >= 5, got {s}")
    if variety == "V18":
        first, second = chi3_L(s - 3, P + 5), chi3_L(s, P + 5)
        with mp.workdps(P):
            return +(first * second)
    factor = euler_factor(variety, s)
    first, second = zeta_int(s, P + 5), zeta_int(s - 3, P + 5)
    with mp.workdps(P):
        value = +(to_mpf(factor) * first * second)
    logger.debug("L(F, %d) for %s: factor %s", s, variety, factor)
    return value


def L_F_3(variety: str, P: int) -> mpf:
    """L(F, 3), which is the Apery limit of the variety."""
    return L_F(variety, 3, P)


# Apery constants of the five Mukai threefolds as (rational factor, L-value kind, argument)
APERY_CONSTANTS = {
    "V10": (Fraction(1, 10), "zeta", 2),
    "V12": (Fraction(1, 6), "zeta", 3),
    "V14": (Fraction(1, 7), "zeta", 2),
    "V16": (Fraction(7, 32), "zeta", 3),
    "V18": (Fraction(1, 3), "chi3", 3),
}


def apery_constant(variety: str, P: int) -> mpf:
    """
    The tabulated Apery constant of a Mukai threefold, built from the zeta and L(chi_3, s) oracles.
    """
    if variety not in APERY_CONSTANTS:
        raise InputError(f"unknown variety {variety!r}, expected one of {', '.join(APERY_CONSTANTS)}")
    factor, kind, s = APERY_CONSTANTS[variety]
    value = zeta_int(s, P + 5) if kind == "zeta" else chi3_L(s, P + 5)
    with mp.workdps(P):
        return +(to_mpf(factor) * value)


def describe_apery_constant(variety: str) -> str:
    factor, kind, s = APERY_CONSTANTS[variety]
    name = f"zeta({s})" if kind == "zeta" else f"L(chi_3, {s})"
    return f"{factor} {name}"

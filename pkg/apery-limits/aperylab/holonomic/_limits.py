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
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from mpmath import mp
from mpmath import mpf

from aperylab.precision import guard_digits
from aperylab.precision import real_to_json
from aperylab.precision import to_mpf
from aperylab.utils import ConvergenceError
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError

from ._sequences import SeqPair

logger = logging.getLogger(__name__)

SAFETY_FACTOR = 4


class LimitMethod(str, Enum):
    PLAIN_RATIO = "plain_ratio"
    AITKEN = "aitken"
    PERTURBATION_LADDER = "perturbation_ladder"


@dataclass(frozen=True)
class ApproxLimit:
    """
    An estimated limit with its error bar.

    Attributes
    ----------
    value: mpf
        The estimate, carried at the working precision it was computed with
    error_estimate: mpf
        Nonnegative bound on |value - limit| from the geometric extrapolation of successive differences
    n_used: int
        Index of the last ratio used
    method: LimitMethod
        Plain last ratio or Aitken-refined
    prec: int
        Requested decimal digits
    """
    value: mpf
    error_estimate: mpf
    n_used: int
    method: LimitMethod
    prec: int

    def to_dict(self) -> dict:
        return {
            "value": real_to_json(self.value, self.prec),
            "error_estimate": mp.nstr(self.error_estimate, 5),
            "n_used": self.n_used,
            "method": self.method.value,
        }


def _tail_bound(values: Sequence[mpf], n: int):
    """(rho, SAFETY_FACTOR |d_n| rho / (1 - rho)) at index n, or None when the differences give no contraction."""
    d_n = values[n] - values[n - 1]
    d_1 = values[n - 1] - values[n - 2]
    d_2 = values[n - 2] - values[n - 3]
    if d_n == 0 and d_1 == 0:
        return mpf(0), mpf(0)
    if d_1 == 0 or d_2 == 0:
        return None
    rho = max(abs(d_n / d_1), abs(d_1 / d_2))
    if rho >= 1:
        return rho, None
    return rho, SAFETY_FACTOR * abs(d_n) * rho / (1 - rho)


def _check_half(values: Sequence[mpf], value: mpf, n_used: int, start: int):
    """The bound read off at n_used / 2 must cover the distance from values[n_used / 2] to the final estimate."""
    half = n_used // 2
    if half < start + 3:
        return
    bound = _tail_bound(values, half)
    if bound is None or bound[1] is None:
        return
    deviation = abs(value - values[half])
    if deviation > bound[1]:
        raise ConvergenceError(f"estimate at n={n_used} is {mp.nstr(deviation, 5)} from the value at n={half}, "
                               f"outside the bound {mp.nstr(bound[1], 5)} read off there")


def extrapolate_limit(values: Sequence[mpf], P: int, method=LimitMethod.PLAIN_RATIO, start: int = 0) -> ApproxLimit:
    """
    Estimate lim values[n], assuming values[n] - C ~ K rho^n.

    rho is read off three consecutive values of the differences d_n = values[n] - values[n-1] and the error after
    index n is bounded by SAFETY_FACTOR |d_n| rho / (1 - rho). The first n whose bound is below 10^-P (relative to
    the value) is used; later ratios only add rounding noise. The estimate is then re-derived at n / 2: the bound
    there must cover the distance to the final value, otherwise the geometric model does not hold.

    Parameters
    ----------
    values: Sequence[mpf]
        The sequence, evaluated at guarded precision
    P: int
        Target decimal digits
    method: LimitMethod
        PLAIN_RATIO reports values[n]; AITKEN reports the Aitken delta-squared extrapolation at n
    start: int
        Index of the first meaningful entry

    Returns
    -------
    ApproxLimit

    Raises
    ------
    ConvergenceError
        If no index reaches the target or the n / 2 re-estimate disagrees
    """
    method = LimitMethod(method)
    tolerance = mpf(10)**(-P)
    rho = None
    for n in range(start + 3, len(values)):
        bound = _tail_bound(values, n)
        if bound is None:
            continue
        rho, error = bound
        if error is None:
            continue
        scale = max(abs(values[n]), tolerance)
        if error < tolerance * scale:
            value = values[n]
            d_n = values[n] - values[n - 1]
            d_1 = values[n - 1] - values[n - 2]
            if method is LimitMethod.AITKEN and d_n != d_1:
                value = values[n] - d_n**2 / (d_n - d_1)
            if error > 0:
                _check_half(values, value, n, start)
            logger.debug("limit converged at n=%d, rho=%s, error=%s", n, mp.nstr(rho, 5), mp.nstr(error, 5))
            return ApproxLimit(value, error, n, method, P)
    if rho is not None and rho >= 1:
        raise ConvergenceError(f"ratio of successive differences is {mp.nstr(rho, 5)} >= 1 at n={len(values) - 1}")
    raise ConvergenceError(f"{len(values)} terms are not enough for {P} digits")


def ratio_sequence(pair: SeqPair, dps: int) -> list:
    """b_n / a_n in mpf at `dps` digits."""
    with mp.workdps(dps):
        return [to_mpf(b) / to_mpf(a) for a, b in zip(pair.a, pair.b)]


def apery_limit(pair: SeqPair, P: int, method=LimitMethod.PLAIN_RATIO) -> ApproxLimit:
    """
    lim b_n / a_n to P digits, with an error estimate.

    The extrapolation runs at P + G and at P + 2G working digits (G from the number of terms) and the two
    estimates must agree within their error bounds.

    Parameters
    ----------
    pair: SeqPair
        Solutions of the recurrence
    P: int
        Target decimal digits

    Returns
    -------
    ApproxLimit

    Raises
    ------
    ConvergenceError
        If the ratios do not settle within the available terms
    PrecisionBudgetError
        If the two working precisions give different limits
    """
    if P < 1:
        raise InputError(f"precision must be at least 1 digit, got {P}")
    if all(b == 0 for b in pair.b):
        return ApproxLimit(mpf(0), mpf(0), pair.n_max, LimitMethod(method), P)
    G = guard_digits(pair.n_max)
    estimates = []
    for dps in (P + G, P + 2 * G):
        ratios = ratio_sequence(pair, dps)
        with mp.workdps(dps):
            estimates.append(extrapolate_limit(ratios, P, method, start=1))
    low, result = estimates
    with mp.workdps(P + 2 * G):
        allowed = max(mpf(10)**(-P) * abs(result.value), low.error_estimate + result.error_estimate)
        if abs(result.value - low.value) > allowed:
            raise PrecisionBudgetError(f"{pair.variety}: limits at {P + G} and {P + 2 * G} digits disagree "
                                       f"within {P} digits")
    logger.info("%s: Apery limit from %d of %d terms", pair.variety, result.n_used, pair.n_max + 1)
    return result

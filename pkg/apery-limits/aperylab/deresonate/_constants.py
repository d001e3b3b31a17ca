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
from fractions import Fraction
from math import ceil
from math import log10

from mpmath import mp
from mpmath import mpf

from aperylab.holonomic import ApproxLimit
from aperylab.holonomic import LimitMethod
from aperylab.holonomic import extrapolate_limit
from aperylab.precision import certify
from aperylab.precision import digits_of_agreement
from aperylab.precision import guard_digits
from aperylab.precision import rational_to_str
from aperylab.precision import real_to_json
from aperylab.precision import to_mpf
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError

from ._exponents import MIN_N
from ._exponents import ExponentSet
from ._series import cancellation_digits
from ._series import perturbed_series
from ._series import wronskian

logger = logging.getLogger(__name__)

# digits lost per decade of perturbation in the degenerate limit
DIGITS_PER_DECADE = 4


def perturbation_decades(exps: ExponentSet) -> int:
    return max(0, int(ceil(-log10(float(min(abs(exps.e), abs(exps.u)))))))


def wronskian_pair(exps: ExponentSet, n_max: int, dps: int):
    """(R_e, R_u) through index n_max at `dps` digits."""
    plus_e, minus_e = exps.e_pair
    plus_u, minus_u = exps.u_pair
    R_e = wronskian(perturbed_series(exps, plus_e, n_max, dps), perturbed_series(exps, minus_e, n_max, dps), label="R_e")
    R_u = wronskian(perturbed_series(exps, plus_u, n_max, dps), perturbed_series(exps, minus_u, n_max, dps), label="R_u")
    return R_e, R_u


def sine_ratio(exps: ExponentSet) -> mpf:
    """sin(2 pi e) / sin(2 pi u) at the current working precision."""
    return mp.sin(2 * mp.pi * to_mpf(exps.e)) / mp.sin(2 * mp.pi * to_mpf(exps.u))


@dataclass(frozen=True)
class SineRatioReport:
    N: int
    e: Fraction
    u: Fraction
    limit: ApproxLimit
    expected: mpf
    agreement_digits: int
    within_bound: bool

    @property
    def passed(self) -> bool:
        return self.within_bound

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "e": rational_to_str(self.e),
            "u": rational_to_str(self.u),
            "limit": self.limit.to_dict(),
            "expected": real_to_json(self.expected, self.limit.prec),
            "agreement_digits": self.agreement_digits,
            "status": "pass" if self.passed else "fail",
        }


def sine_ratio_check(exps: ExponentSet, n_max: int, P: int) -> SineRatioReport:
    """
    Extrapolate r_e(n) / r_u(n) and compare it with sin(2 pi e) / sin(2 pi u).

    Parameters
    ----------
    exps: ExponentSet
        Non-resonant exponents
    n_max: int
        Number of Wronskian coefficients available to the extrapolation
    P: int
        Target digits of the extrapolated limit

    Returns
    -------
    SineRatioReport
    """
    dps = P + guard_digits(n_max) + cancellation_digits(exps.N, n_max)
    R_e, R_u = wronskian_pair(exps, n_max, dps)
    with mp.workdps(dps):
        ratios = [R_e[n] / R_u[n] for n in range(n_max + 1)]
        limit = extrapolate_limit(ratios, P)
        expected = sine_ratio(exps)
        within = abs(limit.value - expected) <= limit.error_estimate + mpf(10)**(-P) * abs(expected)
        agreement = digits_of_agreement(limit.value, expected)
    logger.info("sine ratio N=%d e=%s u=%s: %d digits, n_used=%d", exps.N, exps.e, exps.u, agreement, limit.n_used)
    return SineRatioReport(exps.N, exps.e, exps.u, limit, expected, agreement, bool(within))


def pac_from_wronskians(N: int, s: mpf, r_e0, r_e1, r_u0, r_u1) -> mpf:
    denominator = r_u1 * r_e0 - r_e1 * r_u0
    if denominator == 0:
        raise PrecisionBudgetError("perturbed Apery constant: vanishing denominator")
    return (s * r_e0**2 - r_u0 * r_e0) / (N * denominator)


def perturbed_apery_constant(exps: ExponentSet, P: int) -> mpf:
    """
    (1/N) (s r_e(0)^2 - r_u(0) r_e(0)) / (r_u(1) r_e(0) - r_e(1) r_u(0)) with s = sin(2 pi u) / sin(2 pi e).

    The expression degenerates as e, u -> 0; the working precision grows by DIGITS_PER_DECADE digits per decade of
    the perturbation. The value is certified by evaluating at two guard levels.
    """
    extra = DIGITS_PER_DECADE * perturbation_decades(exps) + 10

    def _evaluate(dps):
        work = dps + extra
        R_e, R_u = wronskian_pair(exps, 1, work)
        with mp.workdps(work):
            value = pac_from_wronskians(exps.N, 1 / sine_ratio(exps), R_e[0], R_e[1], R_u[0], R_u[1])
        return +value

    return certify(_evaluate, P, n_terms=1, what=f"perturbed Apery constant N={exps.N} e={exps.e} u={exps.u}")


def pac_limit(N: int, P: int, max_decades: int = None) -> ApproxLimit:
    """
    Limit of the perturbed Apery constant as e, u -> 0 along e = 10^-k, u = 2 10^-k.

    The error is O(e^2), so k is doubled from about P/4 until two successive values agree to P digits.

    Raises
    ------
    PrecisionBudgetError
        If k would exceed `max_decades` (default 2P + 20) before agreement
    """
    if not isinstance(N, int) or N < MIN_N:
        raise InputError(f"N must be an integer >= {MIN_N}, got {N!r}")
    max_decades = 2 * P + 20 if max_decades is None else max_decades
    k = P // 4 + 2
    previous = None
    while k <= max_decades:
        exps = ExponentSet(N, Fraction(1, 10**k), Fraction(2, 10**k))
        value = perturbed_apery_constant(exps, P + 10)
        if previous is not None:
            with mp.workdps(P + 10):
                error = abs(value - previous)
                if error <= mpf(10)**(-P) * abs(value):
                    logger.info("pac_limit N=%d converged at k=%d", N, k)
                    return ApproxLimit(value, error, k, LimitMethod.PERTURBATION_LADDER, P)
        previous = value
        k *= 2
    raise PrecisionBudgetError(f"perturbed Apery constant for N={N} did not stabilize to {P} digits by k={max_decades}")


def grassmann_constant(N: int, P: int) -> mpf:
    """pi^2 / (N^2 (N + 1)), i.e. 6 zeta(2) / (N^2 (N + 1))."""
    with mp.workdps(P):
        return mp.pi**2 / (N * N * (N + 1))

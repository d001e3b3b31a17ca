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
"""
Quantum recurrence solutions of G(2, N) recovered from the deresonated operator.

With A^dr = R_e / r_e(0) and B^dr = (r_e(0) R_u - r_u(0) R_e) / (r_e(0) r_u(1) - r_u(0) r_e(1)), the Grassmannian
solutions are a_{Nn} = (Nn)! [t^n] A^dr and b_{Nn} = (Nn)! [t^n] B^dr / N in the limit e, u -> 0. Both limits are
taken numerically at e = 10^-k, u = 2 10^-k with k sized from the magnitude of a.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from math import factorial
from typing import List
from typing import Tuple

from mpmath import mp
from mpmath import mpf

from aperylab.holonomic import ApproxLimit
from aperylab.holonomic import Normalization
from aperylab.holonomic import SeqPair
from aperylab.holonomic import apery_limit
from aperylab.holonomic import apery_pair
from aperylab.modular import apery_constant
from aperylab.precision import digits_of_agreement
from aperylab.precision import guard_digits
from aperylab.precision import rational_to_str
from aperylab.precision import to_mpf
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError

from ._constants import DIGITS_PER_DECADE
from ._constants import grassmann_constant
from ._constants import wronskian_pair
from ._exponents import MIN_N
from ._exponents import ExponentSet
from ._series import cancellation_digits

logger = logging.getLogger(__name__)

PROBE_DECADES = 8
PROBE_DIGITS = 30

# Mukai threefolds obtained from G(2, N) by quantum Lefschetz, with the factorial weight of each section
LEFSCHETZ_PARTNERS = {"V10": 5, "V14": 6}


def _check_n(N):
    if not isinstance(N, int) or N < MIN_N:
        raise InputError(f"N must be an integer >= {MIN_N}, got {N!r}")


def _deresonated(N: int, n_max: int, k: int, dps: int) -> Tuple[List[mpf], List[mpf]]:
    """[t^n] A^dr and [t^n] B^dr for n <= n_max at e = 10^-k, u = 2 10^-k."""
    exps = ExponentSet(N, Fraction(1, 10**k), Fraction(2, 10**k))
    R_e, R_u = wronskian_pair(exps, n_max, dps)
    with mp.workdps(dps):
        r_e0, r_u0 = R_e[0], R_u[0]
        denominator = r_e0 * R_u[1] - r_u0 * R_e[1]
        if denominator == 0:
            raise PrecisionBudgetError(f"G(2,{N}): deresonated normalization vanishes at k={k}")
        A = [R_e[n] / r_e0 for n in range(n_max + 1)]
        B = [(r_e0 * R_u[n] - r_u0 * R_e[n]) / denominator for n in range(n_max + 1)]
    return A, B


def _magnitude(N: int, n_max: int) -> int:
    """Decimal magnitude of max_n |a_{Nn}| from a cheap low-precision pass."""
    dps = PROBE_DIGITS + DIGITS_PER_DECADE * PROBE_DECADES + cancellation_digits(N, n_max) + guard_digits(n_max)
    A, _ = _deresonated(N, n_max, PROBE_DECADES, dps)
    with mp.workdps(dps):
        largest = max(abs(factorial(N * n) * A[n]) for n in range(n_max + 1))
        return max(0, int(ceil(mp.log10(largest))))


@dataclass(frozen=True)
class GrassmannData:
    pair: SeqPair
    decades: int
    dps: int
    max_residual: mpf


def _grassmann_data(N: int, n_max: int, P: int, k: int = None) -> GrassmannData:
    _check_n(N)
    if n_max < 1:
        raise InputError(f"n_max must be at least 1, got {n_max}")
    mag = _magnitude(N, n_max)
    if k is None:
        k = int(ceil((mag + P) / 2)) + 5
    dps = mag + P + guard_digits(n_max) + DIGITS_PER_DECADE * k + cancellation_digits(N, n_max) + 10
    logger.debug("G(2,%d): magnitude 10^%d, k=%d, %d working digits", N, mag, k, dps)
    A, B = _deresonated(N, n_max, k, dps)
    a: List[Fraction] = []
    b: List[mpf] = []
    worst = mpf(0)
    tolerance = mpf(10)**(-(P // 2))
    with mp.workdps(dps):
        for n in range(n_max + 1):
            scale = factorial(N * n)
            value = scale * A[n]
            nearest = mp.nint(value)
            residual = abs(value - nearest)
            worst = max(worst, residual)
            if residual >= tolerance:
                raise PrecisionBudgetError(f"G(2,{N}): a_{N * n} = {mp.nstr(value, 20)} is not within "
                                           f"10^-{P // 2} of an integer")
            a.append(Fraction(int(nearest)))
            b.append(scale * B[n] / N)
    b[0] = mpf(0)
    pair = SeqPair(a, b, f"G(2,{N})", Normalization(Fraction(1), 1, Fraction(factorial(N - 1))))
    return GrassmannData(pair, k, dps, worst)


def grassmann_pair(N: int, n_max: int, P: int, k: int = None) -> SeqPair:
    """
    The solutions a_{Nn} (integers, a_0 = 1) and b_{Nn} (b_0 = 0, b_N = (N - 1)!) of the regularized quantum
    recurrence of G(2, N), indexed by n.

    Parameters
    ----------
    N: int
        N >= 5
    n_max: int
        Last index n (the coefficient a_{N n_max})
    P: int
        Digits of b; a is exact
    k: int
        Perturbation decades; sized from the magnitude of a when omitted

    Returns
    -------
    SeqPair
    """
    return _grassmann_data(N, n_max, P, k).pair


@dataclass(frozen=True)
class IntegralityReport:
    N: int
    n_max: int
    decades: Tuple[int, int]
    max_residual: mpf
    stable: bool

    @property
    def passed(self) -> bool:
        return self.stable

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "n_max": self.n_max,
            "decades": list(self.decades),
            "max_residual": mp.nstr(self.max_residual, 5),
            "status": "pass" if self.passed else "fail",
        }


def integrality_probe(N: int, n_max: int, P: int, shrink: int = 10) -> IntegralityReport:
    """Recover a_{Nn} at two perturbation sizes, 10^shrink apart, and require identical integers."""
    first = _grassmann_data(N, n_max, P)
    second = _grassmann_data(N, n_max, P, first.decades + shrink)
    stable = first.pair.a == second.pair.a
    return IntegralityReport(N,
                             n_max, (first.decades, second.decades),
                             max(first.max_residual, second.max_residual),
                             stable)


def grassmann_apery_limit(N: int, n_max: int, P: int) -> ApproxLimit:
    """lim b_{Nn} / a_{Nn}, which is pi^2 / (N^2 (N + 1))."""
    return apery_limit(grassmann_pair(N, n_max, P + 10), P)


def lefschetz_weight(variety: str, n: int) -> Fraction:
    """(n!)^3 (2n)! / (5n)! for V10 and (n!)^6 / (6n)! for V14."""
    if variety == "V10":
        return Fraction(factorial(n)**3 * factorial(2 * n), factorial(5 * n))
    if variety == "V14":
        return Fraction(factorial(n)**6, factorial(6 * n))
    raise InputError(f"no quantum Lefschetz relation for {variety!r}, expected V10 or V14")


@dataclass(frozen=True)
class LefschetzReport:
    variety: str
    N: int
    C_a: Fraction
    lam: Fraction
    C_b: mpf
    a_mismatches: List[int]
    b_agreement_digits: int
    constant_ratio_digits: int
    prec: int

    @property
    def passed(self) -> bool:
        return not self.a_mismatches and self.b_agreement_digits >= self.prec - 10 \
            and self.constant_ratio_digits >= min(20, self.prec - 10)

    def to_dict(self) -> dict:
        return {
            "variety": self.variety,
            "N": self.N,
            "C_a": rational_to_str(self.C_a),
            "lambda": rational_to_str(self.lam),
            "C_b": mp.nstr(self.C_b, 20),
            "C_b_over_C_a": mp.nstr(self.C_b / to_mpf(self.C_a), 20),
            "a_mismatches": self.a_mismatches,
            "b_agreement_digits": self.b_agreement_digits,
            "constant_ratio_digits": self.constant_ratio_digits,
            "status": "pass" if self.passed else "fail",
        }


def lefschetz_crosscheck(variety: str, n_max: int, P: int) -> LefschetzReport:
    """
    Check a^V_n = C_a lam^n a^G_{Nn} w(n) and b^V_n = C_b lam^n b^G_{Nn} w(n) for 2 <= n <= n_max.

    C_a and lam are read off n = 0, 1 of a (exactly), C_b off n = 1 of b. Also compares the tabulated Apery
    constant of the variety with (C_b / C_a) pi^2 / (N^2 (N + 1)).
    """
    if variety not in LEFSCHETZ_PARTNERS:
        raise InputError(f"no quantum Lefschetz relation for {variety!r}, expected V10 or V14")
    if n_max < 2:
        raise InputError(f"n_max must be at least 2, got {n_max}")
    N = LEFSCHETZ_PARTNERS[variety]
    mukai = apery_pair(variety, n_max)
    grass = grassmann_pair(N, n_max, P + 10)

    C_a = mukai.a[0] / (grass.a[0] * lefschetz_weight(variety, 0))
    lam = mukai.a[1] / (C_a * grass.a[1] * lefschetz_weight(variety, 1))
    mismatches = [
        n for n in range(2, n_max + 1) if mukai.a[n] != C_a * lam**n * grass.a[n] * lefschetz_weight(variety, n)
    ]

    with mp.workdps(P + 10):
        C_b = to_mpf(mukai.b[1]) / (to_mpf(lam) * grass.b[1] * to_mpf(lefschetz_weight(variety, 1)))
        b_digits = P + 10
        for n in range(2, n_max + 1):
            predicted = C_b * to_mpf(lam)**n * grass.b[n] * to_mpf(lefschetz_weight(variety, n))
            b_digits = min(b_digits, digits_of_agreement(to_mpf(mukai.b[n]), predicted))
        predicted_constant = C_b / to_mpf(C_a) * grassmann_constant(N, P + 10)
        constant_digits = digits_of_agreement(apery_constant(variety, P + 10), predicted_constant)
    logger.info("%s vs G(2,%d): lambda=%s, C_b/C_a=%s", variety, N, lam, mp.nstr(C_b / to_mpf(C_a), 12))
    return LefschetzReport(variety, N, C_a, lam, C_b, mismatches, b_digits, constant_digits, P)

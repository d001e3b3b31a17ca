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
Riemann zeta, Hurwitz zeta and L(chi_3, s) at integer arguments.

Each value is produced by Euler-Maclaurin summation with a Bernoulli tail and, for the L-values, checked against
an independent accelerated summation of the alternating series (Cohen-Rodriguez Villegas-Zagier).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from mpmath import mp
from mpmath import mpf
from mpmath import sqrt

from aperylab.precision import bernoulli
from aperylab.precision import certify
from aperylab.precision import digits_of_agreement
from aperylab.precision import to_mpf
from aperylab.precision import to_rational
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError
from aperylab.utils import VerificationError

logger = logging.getLogger(__name__)

ZETA_AT_ZERO = Fraction(-1, 2)
CHI3_L_AT_ZERO = Fraction(1, 3)

_KINDS = ("zeta", "hurwitz", "chi3")


@dataclass(frozen=True)
class LValueRequest:
    """
    A request for one of the supported L-values.

    Attributes
    ----------
    kind: str
        One of "zeta", "hurwitz", "chi3"
    s: int
        Integer argument, s >= 2 or s == 0
    a: Fraction
        Hurwitz shift, 0 < a <= 1 (hurwitz only)
    prec: int
        Decimal digits
    """
    kind: str
    s: int
    a: Fraction = Fraction(1)
    prec: int = 50

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InputError(f"unknown L-value kind {self.kind!r}, expected one of {_KINDS}")
        _check_s(self.s)
        object.__setattr__(self, "a", to_rational(self.a))
        if not 0 < self.a <= 1:
            raise InputError(f"Hurwitz shift must satisfy 0 < a <= 1, got {self.a}")

    def evaluate(self) -> mpf:
        if self.kind == "zeta":
            return zeta_int(self.s, self.prec)
        if self.kind == "hurwitz":
            return hurwitz_zeta(self.s, self.a, self.prec)
        return chi3_L(self.s, self.prec)


def _check_s(s):
    if not isinstance(s, int) or isinstance(s, bool) or not (s >= 2 or s == 0):
        raise InputError(f"unsupported argument s={s!r}: need an integer s >= 2 or s = 0")


def _cut_point(dps: int) -> int:
    return max(2 * dps, 50)


def hurwitz_at_zero(a: Fraction) -> Fraction:
    """
    Euler-Maclaurin continuation to s = 0 in exact arithmetic.

    With s = 0 every Bernoulli correction carries the factor s, so only M - (M + a) + 1/2 survives.
    """
    M = 50
    return M - (M + a) + Fraction(1, 2)


@lru_cache(maxsize=1024)
def _hurwitz_em(s: int, a: Fraction, dps: int) -> mpf:
    """zeta(s, a) for s >= 2 at the current working precision `dps`."""
    M = _cut_point(dps)
    eps = mpf(10)**(-dps)
    a_real = to_mpf(a)
    total = mp.fsum((k + a_real)**(-s) for k in range(M))
    x = M + a_real
    total += x**(1 - s) / (s - 1) + x**(-s) / 2
    rising = mpf(s)
    factorial = mpf(2)
    previous = None
    j = 1
    while True:
        term = to_mpf(bernoulli(2 * j)) / factorial * rising * x**(-s - 2 * j + 1)
        if abs(term) < eps * abs(total):
            break
        if previous is not None and abs(term) > abs(previous):
            raise PrecisionBudgetError(f"Euler-Maclaurin tail for zeta({s}, {a}) diverges before reaching 10^-{dps}")
        total += term
        previous = term
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        factorial *= (2 * j + 1) * (2 * j + 2)
        j += 1
    logger.debug("zeta(%d, %s): M=%d, %d Bernoulli terms at %d digits", s, a, M, j - 1, dps)
    return total


def _alternating_sum(term, dps: int) -> mpf:
    """
    Sum_{k >= 0} (-1)^k term(k) for a decreasing positive sequence, by the Cohen-Rodriguez Villegas-Zagier
    acceleration; the error after n terms is bounded by 2 / (3 + sqrt(8))^n times the sum.
    """
    n = int(ceil((dps + 5) / 0.76))
    d = (3 + sqrt(8))**n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    total = mpf(0)
    for k in range(n):
        c = b - c
        total += c * term(k)
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return total / d


def _hurwitz_alternating(s: int, a: Fraction, dps: int) -> mpf:
    """
    zeta(s, a) from alternating sums only.

    Splitting off the odd terms gives zeta(s, a) = eta(s, a) + 2^(1 - s) zeta(s, (a + 1) / 2), with
    eta(s, a) = sum_k (-1)^k (k + a)^(-s); the shift tends to 1 and the weights fall by 2^(1 - s) per step.
    """
    eps = mpf(10)**(-dps)
    ratio = mpf(2)**(1 - s)
    weight = mpf(1)
    total = mpf(0)
    shift = a
    steps = 0
    # zeta(s, shift) <= zeta(2, 1/2) < 5 bounds the dropped remainder
    while 5 * weight >= eps * abs(total) or steps == 0:
        shift_real = to_mpf(shift)
        total += weight * _alternating_sum(lambda k: (k + shift_real)**(-s), dps)
        weight *= ratio
        shift = (shift + 1) / 2
        steps += 1
    logger.debug("zeta(%d, %s): %d alternating sums at %d digits", s, a, steps, dps)
    return total


def _zeta_alternating(s: int, dps: int) -> mpf:
    eta = _alternating_sum(lambda k: mpf(k + 1)**(-s), dps)
    return eta / (1 - mpf(2)**(1 - s))


def _chi3_alternating(s: int, dps: int) -> mpf:
    # integers prime to 3 in increasing order: 1, 2, 4, 5, 7, 8, ... carry the signs +, -, +, -, ...
    return _alternating_sum(lambda k: mpf(3 * (k // 2) + 1 + k % 2)**(-s), dps)


def _dual_check(first: mpf, second: mpf, P: int, what: str):
    with mp.workdps(P + 10):
        agreement = digits_of_agreement(first, second)
    if agreement < P:
        raise PrecisionBudgetError(f"{what}: Euler-Maclaurin and alternating summation agree to {agreement} < {P} digits")


def zeta_int(s: int, P: int, dual_check: bool = True) -> mpf:
    """
    Riemann zeta at an integer argument.

    Parameters
    ----------
    s: int
        s >= 2, or s = 0 (continued value, exactly -1/2)
    P: int
        Decimal digits
    dual_check: bool
        Also evaluate the accelerated alternating series and require agreement to P digits

    Returns
    -------
    mpf
    """
    _check_s(s)
    if s == 0:
        value = hurwitz_at_zero(Fraction(1))
        if value != ZETA_AT_ZERO:
            raise VerificationError(f"zeta(0) continuation gave {value}, expected {ZETA_AT_ZERO}")
        with mp.workdps(P):
            return to_mpf(value)
    value = certify(lambda dps: _hurwitz_em(s, Fraction(1), dps), P, _cut_point(P), what=f"zeta({s})")
    if dual_check:
        with mp.workdps(P + 10):
            _dual_check(value, _zeta_alternating(s, P + 10), P, f"zeta({s})")
    return value


def hurwitz_zeta(s: int, a, P: int, dual_check: bool = True) -> mpf:
    """
    Hurwitz zeta(s, a) = sum_{k >= 0} (k + a)^(-s) for 0 < a <= 1, by Euler-Maclaurin with a Bernoulli tail.

    With `dual_check` the value is compared with a sum of accelerated alternating series and must agree to P
    digits.
    """
    _check_s(s)
    a = to_rational(a)
    if not 0 < a <= 1:
        raise InputError(f"Hurwitz shift must satisfy 0 < a <= 1, got {a}")
    if s == 0:
        with mp.workdps(P):
            return to_mpf(hurwitz_at_zero(a))
    value = certify(lambda dps: _hurwitz_em(s, a, dps), P, _cut_point(P), what=f"zeta({s}, {a})")
    if dual_check:
        with mp.workdps(P + 10):
            _dual_check(value, _hurwitz_alternating(s, a, P + 10), P, f"zeta({s}, {a})")
    return value


def chi3_L(s: int, P: int, dual_check: bool = True) -> mpf:
    """
    L(chi_3, s) = 3^(-s) (zeta(s, 1/3) - zeta(s, 2/3)) for the nontrivial character mod 3; L(chi_3, 0) = 1/3.
    """
    _check_s(s)
    if s == 0:
        value = hurwitz_at_zero(Fraction(1, 3)) - hurwitz_at_zero(Fraction(2, 3))
        if value != CHI3_L_AT_ZERO:
            raise VerificationError(f"L(chi_3, 0) continuation gave {value}, expected {CHI3_L_AT_ZERO}")
        with mp.workdps(P):
            return to_mpf(value)

    def _evaluate(dps):
        return (_hurwitz_em(s, Fraction(1, 3), dps) - _hurwitz_em(s, Fraction(2, 3), dps)) / mpf(3)**s

    value = certify(_evaluate, P, _cut_point(P), what=f"L(chi_3, {s})")
    if dual_check:
        with mp.workdps(P + 10):
            _dual_check(value, _chi3_alternating(s, P + 10), P, f"L(chi_3, {s})")
    return value

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
from math import ceil
from math import log10

from mpmath import mp
from mpmath import mpf

from aperylab.precision import bernoulli
from aperylab.precision import certify
from aperylab.precision import to_mpf
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError

from ._zeta import _hurwitz_em

logger = logging.getLogger(__name__)


def _as_exact(x):
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return None
    return None


def _log_gamma_stirling(y: mpf, dps: int) -> mpf:
    """Stirling series for log Gamma(y); y must be large enough for the tail to fall below 10^-dps."""
    eps = mpf(10)**(-dps)
    total = (y - mpf(1) / 2) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
    previous = None
    j = 1
    while True:
        term = to_mpf(bernoulli(2 * j)) / (2 * j * (2 * j - 1) * y**(2 * j - 1))
        if abs(term) < eps * max(1, abs(total)):
            return total
        if previous is not None and abs(term) > abs(previous):
            raise PrecisionBudgetError(f"Stirling series at y={mp.nstr(y, 8)} grows before reaching 10^-{dps}")
        total += term
        previous = term
        j += 1


def _gamma_positive(x: mpf, dps: int) -> mpf:
    # shift the argument up until the Stirling tail is short, then divide the shift back out
    target = dps / 2 + 10
    shift = max(0, int(ceil(target - x)))
    y = x + shift
    value = mp.exp(_log_gamma_stirling(y, dps))
    for k in range(shift):
        value /= x + k
    return value


def gamma_real(x, P: int) -> mpf:
    """
    Gamma(x) for real x, certified to P digits.

    Gamma(1) = Gamma(2) = 1 and Gamma(1/2) = sqrt(pi) are returned exactly. Arguments in (0, 1/2) go through the
    reflection Gamma(x) Gamma(1 - x) = pi / sin(pi x).

    Parameters
    ----------
    x: int, Fraction, str or mpf
        Argument, x > 0
    P: int
        Decimal digits

    Returns
    -------
    mpf

    Raises
    ------
    InputError
        For x <= 0, poles included
    """
    exact = _as_exact(x)
    if exact is not None:
        if exact <= 0:
            raise InputError(f"gamma_real needs x > 0, got {exact}")
        if exact in (1, 2):
            with mp.workdps(P):
                return mpf(1)
        if exact == Fraction(1, 2):
            with mp.workdps(P):
                return mp.sqrt(mp.pi)
    elif mpf(x) <= 0:
        raise InputError(f"gamma_real needs x > 0, got {x}")

    def _evaluate(dps):
        real = to_mpf(exact) if exact is not None else mpf(x)
        if real < mpf(1) / 2:
            return mp.pi / (mp.sin(mp.pi * real) * _gamma_positive(1 - real, dps))
        return _gamma_positive(real, dps)

    return certify(_evaluate, P, n_terms=P, what=f"Gamma({x})")


def log_gamma_one_minus(t, P: int) -> mpf:
    """
    log Gamma(1 - t) = gamma_E t + sum_{i >= 2} zeta(i) t^i / i, for |t| < 1/2.
    """
    exact = _as_exact(t)
    with mp.workdps(P + 10):
        magnitude = abs(to_mpf(exact) if exact is not None else mpf(t))
    if magnitude >= mpf(1) / 2:
        raise InputError(f"log Gamma(1 - t) series needs |t| < 1/2, got {t}")
    if magnitude == 0:
        with mp.workdps(P):
            return mpf(0)
    n_terms = int(ceil(P / -log10(float(magnitude)))) + 2

    def _evaluate(dps):
        tt = to_mpf(exact) if exact is not None else mpf(t)
        eps = mpf(10)**(-dps)
        total = mp.euler * tt
        power = tt
        i = 2
        while True:
            power *= tt
            if abs(power) / i < eps * abs(total):
                break
            total += _hurwitz_em(i, Fraction(1), dps) * power / i
            i += 1
        logger.debug("log Gamma(1 - t): %d zeta terms at %d digits", i - 2, dps)
        return total

    return certify(_evaluate, P, n_terms=n_terms, what=f"log Gamma(1 - {t})")

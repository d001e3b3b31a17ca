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
Power-series solutions of the deresonated operator prod_j (D - alpha_j) + t and their Wronskians.

A solution attached to the exponent alpha is S(t) = sum_n g(n) t^(alpha + n) with
g(n) prod_j (alpha - alpha_j + n) + g(n - 1) = 0 and g(0) = 1 / prod_j Gamma(alpha - alpha_j + 1).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from math import cos
from math import log10
from math import pi
from typing import List
from typing import Tuple

from mpmath import mp
from mpmath import mpf

from aperylab.precision import guard_digits
from aperylab.precision import to_mpf
from aperylab.special import gamma_real
from aperylab.utils import InputError
from aperylab.utils import progress

from ._exponents import ExponentSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerturbedSeries:
    """
    Coefficients g(0..n_max) of the solution attached to `alpha`, computed at `prec` digits.
    """
    alpha: Fraction
    coeffs: Tuple[mpf, ...]
    prec: int

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class WronskianSeries:
    """
    Coefficients r(n) of R = S_plus D S_minus - S_minus D S_plus = sum_n r(n) t^(n + 1).
    """
    coeffs: Tuple[mpf, ...]
    label: str
    prec: int

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)


def gamma_product(args: List[Fraction], P: int) -> mpf:
    """
    prod Gamma(x) over `args`, folding Gamma(x) Gamma(1 - x) = pi / sin(pi x) and
    Gamma(1 + d) Gamma(1 - d) = pi d / sin(pi d) wherever such pairs occur.
    """
    pending = [Fraction(x) for x in args if x != 1]
    result = mpf(1)
    while pending:
        x = pending.pop()
        if 1 - x in pending:
            pending.remove(1 - x)
            result *= mp.pi / mp.sin(mp.pi * to_mpf(x))
        elif 2 - x in pending:
            pending.remove(2 - x)
            d = to_mpf(x - 1)
            result *= mp.pi * d / mp.sin(mp.pi * d)
        else:
            result *= gamma_real(x, mp.dps)
    return result


def perturbed_series(exps: ExponentSet, alpha, n_max: int, P: int) -> PerturbedSeries:
    """
    The non-resonant series solution for the exponent `alpha`.

    Parameters
    ----------
    exps: ExponentSet
        The perturbed exponents
    alpha: Fraction
        One of the simple exponents of `exps`
    n_max: int
        Last coefficient index
    P: int
        Decimal digits; the series is carried with guard digits on top

    Returns
    -------
    PerturbedSeries
    """
    if n_max < 0:
        raise InputError(f"n_max must be nonnegative, got {n_max}")
    alpha = Fraction(alpha)
    diffs = exps.differences(alpha)
    dps = P + guard_digits(n_max)
    with mp.workdps(dps):
        g = [1 / gamma_product([d + 1 for d in diffs], dps)]
        for n in range(1, n_max + 1):
            # the exponent itself contributes (alpha - alpha + n)
            factor = Fraction(n)
            for d in diffs:
                factor *= d + n
            g.append(-g[-1] / to_mpf(factor))
    return PerturbedSeries(alpha, tuple(g), dps)


def operator_residual(exps: ExponentSet, series: PerturbedSeries, n_terms: int = 30) -> mpf:
    """
    max_n |prod_j (alpha - alpha_j + n) g(n) + g(n - 1)| / |g(n - 1)|, i.e. the perturbed operator applied to
    the series, coefficientwise and relative to the term size.
    """
    diffs = exps.differences(series.alpha)
    worst = mpf(0)
    with mp.workdps(series.prec):
        for n in range(1, min(n_terms, series.n_max) + 1):
            factor = Fraction(n)
            for d in diffs:
                factor *= d + n
            value = abs(to_mpf(factor) * series.coeffs[n] + series.coeffs[n - 1]) / abs(series.coeffs[n - 1])
            worst = max(worst, value)
    return worst


def cancellation_digits(N: int, n_max: int) -> int:
    """Predicted digits lost in the Wronskian convolution through index n_max: N n log10(1 / cos(pi / N))."""
    return int(ceil(N * n_max * log10(1 / cos(pi / N))))


def wronskian(plus: PerturbedSeries, minus: PerturbedSeries, n_max: int = None, label: str = "R") -> WronskianSeries:
    """
    r(n) = sum_k (n - 2k + delta) g_plus(k) g_minus(n - k) with delta = alpha_minus - alpha_plus.

    The exponents must satisfy alpha_plus + alpha_minus = 1 so that the product has integer powers of t.
    """
    if plus.alpha + minus.alpha != 1:
        raise InputError(f"Wronskian needs alpha_plus + alpha_minus = 1, got {plus.alpha} + {minus.alpha}")
    n_max = min(plus.n_max, minus.n_max) if n_max is None else n_max
    if n_max > min(plus.n_max, minus.n_max):
        raise InputError(f"series only reach index {min(plus.n_max, minus.n_max)}, asked for {n_max}")
    prec = min(plus.prec, minus.prec)
    gp, gm = plus.coeffs, minus.coeffs
    with mp.workdps(prec):
        delta = to_mpf(minus.alpha - plus.alpha)
        r = []
        for n in progress(range(n_max + 1), logger, desc=f"wronskian {label}"):
            r.append(mp.fsum((n - 2 * k + delta) * gp[k] * gm[n - k] for k in range(n + 1)))
    return WronskianSeries(tuple(r), label, prec)

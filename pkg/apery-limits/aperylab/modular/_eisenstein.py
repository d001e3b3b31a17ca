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

from fractions import Fraction
from typing import Dict

from aperylab.precision import QSeries
from aperylab.utils import InputError

RATIONAL_VARIETIES = ("V12", "V16", "V18")

# weight-2 combinations sum_i c_i E_{2,i}
PHI_COMBINATIONS: Dict[str, Dict[int, Fraction]] = {
    "V12": {1: Fraction(5), 2: Fraction(-1), 3: Fraction(1), 6: Fraction(-5)},
    "V16": {1: Fraction(4), 2: Fraction(-2), 4: Fraction(2), 8: Fraction(-4)},
    "V18": {1: Fraction(3), 9: Fraction(-3)},
}

# weight-4 combinations sum_i c_i E_{4,i}; V18 is a twist and is built separately
F_COMBINATIONS: Dict[str, Dict[int, Fraction]] = {
    "V12": {1: Fraction(1), 2: Fraction(-7), 3: Fraction(7), 6: Fraction(-1)},
    "V16": {1: Fraction(1), 2: Fraction(-21, 4), 4: Fraction(21, 4), 8: Fraction(-1)},
}


def check_rational_variety(variety: str) -> str:
    if variety not in RATIONAL_VARIETIES:
        raise InputError(f"no modular parametrization for {variety!r}, expected one of {', '.join(RATIONAL_VARIETIES)}")
    return variety


def sigma_k(n: int, k: int) -> int:
    """Sum of k-th powers of the divisors of n."""
    if n < 1:
        raise InputError(f"sigma_k needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            if d * d != n:
                total += (n // d)**k
        d += 1
    return total


def legendre3(n: int) -> int:
    """The Legendre symbol (n/3): 0, 1, -1 for n = 0, 1, 2 mod 3."""
    return (0, 1, -1)[n % 3]


def _harmonic(i: int, order: int, constant: Fraction, scale: int, k: int) -> QSeries:
    if i < 1:
        raise InputError(f"Eisenstein harmonic index must be positive, got {i}")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = constant
    for n in range(1, order // i + 1):
        coeffs[i * n] = Fraction(scale * sigma_k(n, k))
    return QSeries(coeffs)


def eisenstein_E2(i: int, order: int) -> QSeries:
    """E_{2,i}(q) = -(i/24) (1 - 24 sum sigma(n) q^(in))."""
    return _harmonic(i, order, Fraction(-i, 24), i, 1)


def eisenstein_E4(i: int, order: int) -> QSeries:
    """E_{4,i}(q) = (i^2/240) (1 + 240 sum sigma_3(n) q^(in))."""
    return _harmonic(i, order, Fraction(i * i, 240), i * i, 3)


def _combine(combination: Dict[int, Fraction], harmonic, order: int) -> QSeries:
    total = QSeries.zero(order)
    for i, c in combination.items():
        total = total + harmonic(i, order) * c
    return total


def phi_form(variety: str, order: int) -> QSeries:
    """
    The weight-2 form Phi with sum a_n t^n = Phi(q(t)).

    Parameters
    ----------
    variety: str
        One of "V12", "V16", "V18"
    order: int
        Truncation order in q

    Returns
    -------
    QSeries
    """
    return _combine(PHI_COMBINATIONS[check_rational_variety(variety)], eisenstein_E2, order)


def f_form(variety: str, order: int) -> QSeries:
    """
    The weight-4 form F = sum c_n q^n whose coefficients give B/A = sum c_n q^n / n^3.

    V18 is the twist sum (n/3) sigma_3(n) q^n.
    """
    check_rational_variety(variety)
    if variety == "V18":
        return QSeries([0] + [legendre3(n) * sigma_k(n, 3) for n in range(1, order + 1)])
    return _combine(F_COMBINATIONS[variety], eisenstein_E4, order)


def f_primitive(variety: str, order: int) -> QSeries:
    """f = sum c_n q^n / n^3, the right-hand side of the ratio identity."""
    F = f_form(variety, order)
    return QSeries([0] + [F[n] / n**3 for n in range(1, order + 1)])

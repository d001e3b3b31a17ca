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

from dataclasses import dataclass
from fractions import Fraction
from typing import List
from typing import Tuple

from aperylab.precision import to_rational
from aperylab.utils import InputError
from aperylab.utils import ResonanceError

HALF = Fraction(1, 2)
MIN_N = 5


@dataclass(frozen=True)
class ExponentSet:
    """
    Local exponents of the perturbed operator prod_j (D - alpha_j) + t at t = 0:
    1/2 - e, 1/2 + e, 1/2 - u, 1/2 + u and 1/2 with multiplicity N - 4.

    Attributes
    ----------
    N: int
        Number of exponents, N >= 5
    e: Fraction
        First perturbation, 0 < |e| < 1/4
    u: Fraction
        Second perturbation, 0 < |u| < 1/4, u != +-e
    """
    N: int
    e: Fraction
    u: Fraction

    def __post_init__(self):
        object.__setattr__(self, "e", to_rational(self.e))
        object.__setattr__(self, "u", to_rational(self.u))
        if not isinstance(self.N, int) or self.N < MIN_N:
            raise InputError(f"N must be an integer >= {MIN_N}, got {self.N!r}")
        for name, value in (("e", self.e), ("u", self.u)):
            if value == 0:
                raise ResonanceError(f"{name} = 0 makes the exponents resonant")
            if abs(value) >= Fraction(1, 4):
                raise InputError(f"|{name}| must be below 1/4, got {value}")
        if self.e == self.u or self.e == -self.u:
            raise ResonanceError(f"e = {self.e} and u = {self.u} give a repeated exponent")

    @property
    def exponents(self) -> List[Fraction]:
        return [HALF - self.e, HALF + self.e, HALF - self.u, HALF + self.u] + [HALF] * (self.N - 4)

    @property
    def e_pair(self) -> Tuple[Fraction, Fraction]:
        """(plus, minus) exponents of the e-Wronskian: 1/2 + e and 1/2 - e."""
        return HALF + self.e, HALF - self.e

    @property
    def u_pair(self) -> Tuple[Fraction, Fraction]:
        return HALF + self.u, HALF - self.u

    def differences(self, alpha: Fraction) -> List[Fraction]:
        """
        alpha - alpha_j over the exponents, one copy of alpha removed.

        Raises
        ------
        ResonanceError
            If some remaining difference is an integer <= 0
        InputError
            If alpha is not an exponent
        """
        alpha = Fraction(alpha)
        remaining = self.exponents
        if alpha not in remaining:
            raise InputError(f"{alpha} is not an exponent of {self}")
        remaining.remove(alpha)
        diffs = [alpha - a for a in remaining]
        for d in diffs:
            if d.denominator == 1 and d <= 0:
                raise ResonanceError(f"exponent {alpha} is resonant: alpha - alpha_j = {d}")
        return diffs

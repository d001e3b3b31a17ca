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
from typing import Iterable
from typing import List
from typing import Tuple

from aperylab.precision._combinatorics import binomial
from aperylab.precision._numbers import rational_to_str
from aperylab.precision._numbers import to_mpf
from aperylab.precision._numbers import to_rational


class PolyN:
    """
    Univariate polynomial with rational coefficients, stored in ascending order (coefficient of x^0 first).

    Used both for the recurrence polynomials P_i(n) and for the D-polynomials of a differential operator.
    Instances are immutable.
    """
    __slots__ = ("_coeffs", )

    def __init__(self, coeffs: Iterable = ()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, constant, slope=1):
        """The polynomial `slope * x + constant`."""
        return cls([constant, slope])

    @classmethod
    def product(cls, *factors):
        result = cls([1])
        for factor in factors:
            result = result * factor
        return result

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, n):
        return eval_poly(self, n)

    def __eq__(self, other):
        if not isinstance(other, PolyN):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"PolyN({[rational_to_str(c) for c in self._coeffs]})"

    def __add__(self, other):
        other = _as_poly(other)
        size = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0), ) * (size - len(self._coeffs))
        b = other._coeffs + (Fraction(0), ) * (size - len(other._coeffs))
        return PolyN(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return PolyN(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return PolyN()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            if x:
                for j, y in enumerate(other._coeffs):
                    out[i + j] += x * y
        return PolyN(out)

    __rmul__ = __mul__

    def derivative(self):
        return PolyN(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def shift(self, s):
        """
        Return the polynomial x -> p(x + s).
        """
        s = Fraction(s)
        out = [Fraction(0)] * len(self._coeffs)
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            power = Fraction(1)
            # (x + s)^k = sum_m C(k, m) s^(k - m) x^m
            for m in range(k, -1, -1):
                out[m] += c * binomial(k, m) * power
                power *= s
        return PolyN(out)

    def falling_factorial_product(self, i: int):
        """
        Multiply by the falling factorial x (x - 1) ... (x - i + 1).
        """
        result = self
        for k in range(i):
            result = result * PolyN.linear(-k)
        return result

    def to_strings(self) -> List[str]:
        return [rational_to_str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, values: Iterable[str]):
        return cls(to_rational(v) for v in values)


def _as_poly(x) -> PolyN:
    return x if isinstance(x, PolyN) else PolyN([x])


def eval_poly(p: PolyN, n):
    """
    Exact Horner evaluation of `p` at `n`.

    Parameters
    ----------
    p: PolyN
        Polynomial with rational coefficients
    n: int or Fraction or mpf
        Evaluation point; exact input gives an exact Fraction

    Returns
    -------
    Fraction (or the type of `n` for inexact input)
    """
    if isinstance(n, (int, Fraction)):
        result = Fraction(0)
        for c in reversed(p.coeffs):
            result = result * n + c
        return result
    result = 0
    for c in reversed(p.coeffs):
        result = result * n + to_mpf(c)
    return result

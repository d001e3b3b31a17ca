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
from typing import Tuple

from aperylab.utils import InputError


class QSeries:
    """
    Truncated power series with exact rational coefficients.

    `coeffs[k]` is the coefficient of var^k for 0 <= k <= order; everything above `order` is unknown, so every
    binary operation truncates to the smaller order of its operands.
    """
    __slots__ = ("_coeffs", "_var")

    def __init__(self, coeffs: Iterable, order: int = None, var: str = "q"):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1 - len(coeffs)))[:order + 1]
        if not coeffs:
            raise InputError("a series needs at least its constant term")
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)
        self._var = var

    @classmethod
    def zero(cls, order: int, var: str = "q"):
        return cls([], order=order, var=var)

    @classmethod
    def variable(cls, order: int, var: str = "q"):
        return cls([0, 1], order=order, var=var)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def var(self) -> str:
        return self._var

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._coeffs[:6])
        return f"QSeries([{terms}{', ...' if self.order > 5 else ''}], order={self.order}, var={self._var!r})"

    def truncate(self, order: int):
        return QSeries(self._coeffs, order=order, var=self._var)

    def _common(self, other):
        if not isinstance(other, QSeries):
            other = QSeries([other], order=self.order, var=self._var)
        order = min(self.order, other.order)
        return self._coeffs[:order + 1], other._coeffs[:order + 1], order

    def __add__(self, other):
        a, b, order = self._common(other)
        return QSeries((x + y for x, y in zip(a, b)), var=self._var)

    __radd__ = __add__

    def __neg__(self):
        return QSeries((-c for c in self._coeffs), var=self._var)

    def __sub__(self, other):
        a, b, order = self._common(other)
        return QSeries((x - y for x, y in zip(a, b)), var=self._var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            scalar = Fraction(other)
            return QSeries((scalar * c for c in self._coeffs), var=self._var)
        a, b, order = self._common(other)
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(order + 1 - i):
                    out[i + j] += x * b[j]
        return QSeries(out, var=self._var)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; the constant term must be nonzero."""
        a = self._coeffs
        if a[0] == 0:
            raise ZeroDivisionError("constant coefficient cannot be zero")
        inv = [Fraction(1) / a[0]]
        for n in range(1, len(a)):
            acc = sum((a[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv.append(-acc / a[0])
        return QSeries(inv, var=self._var)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def exp(self):
        """exp of a series with zero constant term: E_n = (1/n) sum_k k f_k E_(n-k)."""
        f = self._coeffs
        if f[0] != 0:
            raise InputError("exp needs a series with zero constant term")
        out = [Fraction(1)]
        for n in range(1, len(f)):
            out.append(sum((k * f[k] * out[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return QSeries(out, var=self._var)

    def compose(self, inner):
        """
        self(inner(x)) for an `inner` series with zero constant term; the result is in the variable of `inner`.
        """
        if inner[0] != 0:
            raise InputError("composition needs an inner series with zero constant term")
        order = min(self.order, inner.order)
        inner = inner.truncate(order)
        result = QSeries([self._coeffs[order]], order=order, var=inner.var)
        for k in range(order - 1, -1, -1):
            result = result * inner + self._coeffs[k]
        return result

    def reversion(self, var: str = None):
        """
        Compositional inverse g of a series f = c1 x + c2 x^2 + ... (c1 != 0), so that f(g(y)) = y.
        """
        f = self._coeffs
        if f[0] != 0 or len(f) < 2 or f[1] == 0:
            raise InputError("reversion needs a series of the form c1*x + ... with c1 != 0")
        order = self.order
        g = [Fraction(0), Fraction(1) / f[1]] + [Fraction(0)] * (order - 1)
        for k in range(2, order + 1):
            composed = self.compose(QSeries(g, var=var or self._var))
            g[k] -= composed[k] / f[1]
        return QSeries(g, var=var or self._var)

    def with_var(self, var: str):
        return QSeries(self._coeffs, var=var)

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
from typing import List
from typing import Mapping
from typing import Tuple

from aperylab.precision import PolyN
from aperylab.precision import to_mpf
from aperylab.utils import InputError

VARIETIES = ("V10", "V12", "V14", "V16", "V18")


def check_variety(variety: str, allowed=VARIETIES) -> str:
    if variety not in allowed:
        raise InputError(f"unknown variety {variety!r}, expected one of {', '.join(allowed)}")
    return variety


class DiffOp:
    """
    Linear differential operator sum_{i,j} b_ij t^i D^j with D = t d/dt, in t-left normal form.

    Parameters
    ----------
    terms: Mapping[Tuple[int, int], Fraction]
        Nonzero coefficients b_ij keyed by (power of t, power of D)
    """
    __slots__ = ("_terms", )

    def __init__(self, terms: Mapping[Tuple[int, int], object]):
        cleaned: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in terms.items():
            if i < 0 or j < 0:
                raise InputError(f"operator term t^{i} D^{j} has a negative exponent")
            value = Fraction(value)
            if value:
                cleaned[(int(i), int(j))] = value
        if not cleaned or max(j for _, j in cleaned) < 1:
            raise InputError("an operator needs at least one term with a positive power of D")
        self._terms = cleaned

    @classmethod
    def from_polys(cls, polys: Mapping[int, PolyN]):
        """Build sum_i t^i Q_i(D) from the D-polynomials Q_i."""
        return cls({(i, j): c for i, poly in polys.items() for j, c in enumerate(poly.coeffs)})

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def order(self) -> int:
        return max(j for _, j in self._terms)

    @property
    def t_degree(self) -> int:
        return max(i for i, _ in self._terms)

    def polys(self) -> Dict[int, PolyN]:
        """The D-polynomials Q_i with op = sum_i t^i Q_i(D)."""
        grouped: Dict[int, List[Fraction]] = {}
        for (i, j), c in self._terms.items():
            row = grouped.setdefault(i, [])
            row.extend([Fraction(0)] * (j + 1 - len(row)))
            row[j] += c
        return {i: PolyN(row) for i, row in sorted(grouped.items())}

    def derivative_in_d(self):
        """sum_i t^i Q_i'(D); the part of the operator that acts on the logarithm of a log-solution."""
        polys = {i: q.derivative() for i, q in self.polys().items()}
        return {i: q for i, q in polys.items() if not q.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        parts = [f"{c}*t^{i}*D^{j}" for (i, j), c in sorted(self._terms.items())]
        return "DiffOp(" + " + ".join(parts) + ")"


def _d(constant=0, slope=1) -> PolyN:
    return PolyN.linear(constant, slope)


def _mukai_polys(variety: str) -> Dict[int, PolyN]:
    D = _d()
    one_plus_2d = _d(1, 2)
    if variety == "V10":
        return {
            0: PolyN.monomial(3),
            1: -2 * PolyN.product(one_plus_2d, PolyN([3, 11, 11])),
            2: -4 * PolyN.product(_d(1), _d(3, 2), one_plus_2d),
        }
    if variety == "V12":
        return {
            0: PolyN.monomial(3),
            1: -PolyN.product(one_plus_2d, PolyN([5, 17, 17])),
            2: PolyN.product(_d(1), _d(1), _d(1)),
        }
    if variety == "V14":
        return {
            0: PolyN.monomial(3),
            1: -PolyN.product(one_plus_2d, PolyN([4, 13, 13])),
            2: -3 * PolyN.product(_d(1), _d(4, 3), _d(2, 3)),
        }
    if variety == "V16":
        return {
            0: D * D * D,
            1: -4 * PolyN.product(one_plus_2d, PolyN([1, 3, 3])),
            2: 16 * PolyN.product(_d(1), _d(1), _d(1)),
        }
    return {
        0: D * D * D,
        1: -3 * PolyN.product(one_plus_2d, PolyN([1, 3, 3])),
        2: -27 * PolyN.product(_d(1), _d(1), _d(1)),
    }


def mukai_operator(variety: str) -> DiffOp:
    """
    The quantum differential operator of a Mukai threefold of Picard rank one.

    Parameters
    ----------
    variety: str
        One of "V10", "V12", "V14", "V16", "V18"

    Returns
    -------
    DiffOp
    """
    return DiffOp.from_polys(_mukai_polys(check_variety(variety)))


def compose_d_minus(op: DiffOp, c) -> DiffOp:
    """
    The operator (D - c) op in t-left normal form, using (D - c) t^i D^j = t^i (D + i - c) D^j.
    """
    c = Fraction(c)
    return DiffOp.from_polys({i: _d(i - c) * q for i, q in op.polys().items()})


def _apply_polys(polys: Mapping[int, PolyN], coeffs, offset: Fraction) -> list:
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
    out = []
    for m in range(len(coeffs)):
        total = Fraction(0) if exact else 0
        for i, q in polys.items():
            if m - i < 0:
                continue
            factor = q(m - i + offset)
            total += factor * coeffs[m - i] if exact else to_mpf(factor) * coeffs[m - i]
        out.append(total)
    return out


def apply_operator(op: DiffOp, coeffs, offset=0) -> list:
    """
    Coefficients of op applied to sum_n coeffs[n] t^(n + offset), truncated to the input length.

    Exact for integer or Fraction coefficients; mpf coefficients give mpf output.
    """
    return _apply_polys(op.polys(), list(coeffs), Fraction(offset))


def apply_log_operator(op: DiffOp, log_coeffs, plain_coeffs) -> Tuple[list, list]:
    """
    op applied to (sum A_n t^n) log t + sum B_n t^n.

    Returns
    -------
    (list, list)
        Coefficients of the log t part and of the plain part
    """
    log_part = apply_operator(op, log_coeffs)
    plain = apply_operator(op, plain_coeffs)
    shifted = _apply_polys(op.derivative_in_d(), list(log_coeffs), Fraction(0))
    return log_part, [x + y for x, y in zip(plain, shifted)]

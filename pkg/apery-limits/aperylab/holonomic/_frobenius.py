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
Frobenius solutions at a point of maximal unipotent monodromy t = 0, and the mirror map built from them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List
from typing import Tuple

from aperylab.precision import QSeries
from aperylab.utils import InputError

from ._operators import DiffOp
from ._operators import apply_log_operator


def _check_mum(op: DiffOp):
    q0 = op.polys().get(0)
    if q0 is None or q0.degree < 2 or any(q0.coeffs[:-1]):
        raise InputError(f"the t^0 part of the operator must be c D^k with k >= 2, got {q0}")
    return q0


def frobenius_mum(op: DiffOp, order: int) -> Tuple[List[Fraction], List[Fraction]]:
    """
    The analytic solution A (A_0 = 1) and the logarithmic companion A log t + A_tilde (A_tilde_0 = 0).

    With op = sum_i t^i Q_i(D), the coefficients satisfy
    Q_0(n) A_n = -sum_{i>=1} Q_i(n-i) A_(n-i) and
    Q_0(n) A~_n = -sum_{i>=1} Q_i(n-i) A~_(n-i) - sum_{i>=0} Q_i'(n-i) A_(n-i).

    Parameters
    ----------
    op: DiffOp
        Operator whose t^0 part is c D^k, k >= 2
    order: int
        Highest power of t computed

    Returns
    -------
    (List[Fraction], List[Fraction])
        A_0..A_order and A~_0..A~_order
    """
    if order < 0:
        raise InputError(f"order must be nonnegative, got {order}")
    q0 = _check_mum(op)
    polys = op.polys()
    derivatives = {i: q.derivative() for i, q in polys.items()}
    A = [Fraction(1)]
    A_tilde = [Fraction(0)]
    for n in range(1, order + 1):
        lead = q0(n)
        plain = sum((q(n - i) * A[n - i] for i, q in polys.items() if 1 <= i <= n), Fraction(0))
        A.append(-plain / lead)
        log_part = sum((q(n - i) * A_tilde[n - i] for i, q in polys.items() if 1 <= i <= n), Fraction(0))
        log_part += sum((q(n - i) * A[n - i] for i, q in derivatives.items() if i <= n), Fraction(0))
        A_tilde.append(-log_part / lead)
    return A, A_tilde


def frobenius_residual(op: DiffOp, A, A_tilde) -> Tuple[list, list]:
    """
    op applied to A log t + A_tilde, split into the coefficients of the log t part and of the plain part.
    """
    return apply_log_operator(op, A, A_tilde)


@dataclass(frozen=True)
class MirrorMap:
    """
    q(t) = t exp(A~(t) / A(t)) and its compositional inverse t(q), both exact.
    """
    q_of_t: QSeries
    t_of_q: QSeries


def mirror_map(op: DiffOp, order: int) -> MirrorMap:
    if order < 1:
        raise InputError(f"the mirror map needs order >= 1, got {order}")
    A, A_tilde = frobenius_mum(op, order)
    ratio = QSeries(A_tilde, var="t") / QSeries(A, var="t")
    q_of_t = QSeries.variable(order, var="t") * ratio.exp()
    return MirrorMap(q_of_t, q_of_t.reversion(var="q"))

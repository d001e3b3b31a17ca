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
Reflection monodromy of the N-th Kummer pullback of a hypergeometric operator.

The vanishing cycles v_1..v_N sit over the N-th roots of unity; their intersection form is read off
H(y) = (1 - y^N) / prod_i (1 - y exp(2 pi i alpha_i)) = 1 + sum c_k y^k as (v_i, v_i) = 2, (v_i, v_j) = c_|i-j|.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List
from typing import Sequence
from typing import Tuple

from mpmath import mp
from mpmath import mpc
from mpmath import mpf

from aperylab.precision import guard_digits
from aperylab.precision import to_mpf
from aperylab.precision import to_rational
from aperylab.utils import InputError
from aperylab.utils import VerificationError

logger = logging.getLogger(__name__)


def unit_root(alpha) -> mpc:
    """exp(2 pi i alpha) at the current working precision."""
    return mp.expjpi(2 * to_mpf(alpha))


def h_expansion(alphas: Sequence, N: int, order: int, P: int) -> List[mpf]:
    """
    Taylor coefficients c_0..c_order of H(y).

    The exponent multiset must be symmetric under alpha -> 1 - alpha, which makes every c_k real; imaginary parts are
    checked against 10^-(P - 5) and dropped.

    Parameters
    ----------
    alphas: Sequence
        The N exponents, as Fractions or decimal strings
    N: int
        Degree of the numerator 1 - y^N
    order: int
        Highest coefficient returned
    P: int
        Decimal digits

    Returns
    -------
    List[mpf]
    """
    alphas = [to_rational(a) for a in alphas]
    if len(alphas) != N:
        raise InputError(f"{len(alphas)} exponents given for N={N}")
    dps = P + guard_digits(order * N)
    with mp.workdps(dps):
        # prod_i 1 / (1 - y z_i) as a truncated series
        series = [mpc(1)] + [mpc(0)] * order
        for alpha in alphas:
            z = unit_root(alpha)
            for k in range(1, order + 1):
                series[k] += z * series[k - 1]
        coeffs = [series[k] - (series[k - N] if k >= N else 0) for k in range(order + 1)]
        tolerance = mpf(10)**(-(P - 5))
        out = []
        for k, c in enumerate(coeffs):
            if abs(c.imag) > tolerance * max(1, abs(c.real)):
                raise VerificationError(f"H(y) coefficient c_{k} has imaginary part {mp.nstr(c.imag, 5)}; "
                                        "the exponents are not symmetric under alpha -> 1 - alpha")
            out.append(c.real)
    return out


@dataclass(frozen=True)
class HypFrame:
    """
    The basis of vanishing cycles v_1..v_N with its symmetric form.

    Attributes
    ----------
    N: int
        Rank
    alphas: Tuple[Fraction, ...]
        Exponents at infinity
    c: Tuple[mpf, ...]
        c_0..c_(N-1) of H(y)
    G: mp.matrix
        Gram matrix, 2 on the diagonal and c_|i-j| off it
    prec: int
        Decimal digits
    """
    N: int
    alphas: Tuple[Fraction, ...]
    c: Tuple[mpf, ...]
    G: object
    prec: int

    @property
    def dps(self) -> int:
        return self.prec + guard_digits(self.N * self.N)

    def singular_point(self, j: int) -> mpc:
        """mu_j = exp(2 pi i (j - 1) / N), the point whose loop acts by the reflection in v_j."""
        with mp.workdps(self.dps):
            return unit_root(Fraction(j - 1, self.N))


def gram_matrix(alphas: Sequence, P: int) -> HypFrame:
    """Build the frame of vanishing cycles for the exponents `alphas` (N = len(alphas) >= 2)."""
    alphas = tuple(to_rational(a) for a in alphas)
    N = len(alphas)
    if N < 2:
        raise InputError(f"need at least two exponents, got {N}")
    c = h_expansion(alphas, N, N - 1, P)
    with mp.workdps(P + guard_digits(N * N)):
        G = mp.matrix(N, N)
        for i in range(N):
            for j in range(N):
                G[i, j] = 2 if i == j else c[abs(i - j)]
    return HypFrame(N, alphas, tuple(c), G, P)


def seifert_form(frame: HypFrame):
    """Upper unitriangular S with S_ij = c_(j-i) for i < j; S + S^T is the Gram matrix."""
    N = frame.N
    with mp.workdps(frame.dps):
        S = mp.matrix(N, N)
        for i in range(N):
            S[i, i] = 1
            for j in range(i + 1, N):
                S[i, j] = frame.c[j - i]
    return S


def reflection(frame: HypFrame, j: int):
    """
    The reflection x -> x - (x, v_j) v_j in the coordinates of v_1..v_N (j is 1-based).

    Since (x, v_j) = (G x)_j, this is the identity with row j reduced by row j of G.
    """
    if not 1 <= j <= frame.N:
        raise InputError(f"reflection index must be in 1..{frame.N}, got {j}")
    with mp.workdps(frame.dps):
        R = mp.eye(frame.N)
        for k in range(frame.N):
            R[j - 1, k] -= frame.G[j - 1, k]
    return R


def monodromy_product(frame: HypFrame, ordering: Sequence[int]):
    """R_(sigma 1) R_(sigma 2) ... R_(sigma N) for an ordering sigma of 1..N."""
    if sorted(ordering) != list(range(1, frame.N + 1)):
        raise InputError(f"{ordering} is not an ordering of 1..{frame.N}")
    with mp.workdps(frame.dps):
        M = mp.eye(frame.N)
        for j in ordering:
            M = M * reflection(frame, j)
    return M


def candidate_orderings(N: int) -> List[Tuple[int, ...]]:
    """Cyclic rotations of 1..N and their reversals, identity first."""
    base = list(range(1, N + 1))
    rotations = [tuple(base[s:] + base[:s]) for s in range(N)]
    seen = []
    for ordering in rotations + [tuple(reversed(r)) for r in rotations]:
        if ordering not in seen:
            seen.append(ordering)
    return seen

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
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Tuple

from mpmath import mp
from mpmath import mpf

from aperylab.precision import PolyN
from aperylab.precision import binomial
from aperylab.precision import guard_digits
from aperylab.precision import lcm_range
from aperylab.precision import rational_from_str
from aperylab.precision import rational_to_str
from aperylab.precision import real_from_json
from aperylab.precision import real_to_json
from aperylab.precision import to_mpf
from aperylab.utils import InputError
from aperylab.utils import VerificationError

from ._operators import mukai_operator
from ._recurrence import Recurrence
from ._recurrence import op_to_recurrence
from ._recurrence import solve

logger = logging.getLogger(__name__)

A_INITIAL = (Fraction(1), )
B_INITIAL = (Fraction(0), Fraction(1))
B_VALID_FROM = 2


@dataclass(frozen=True)
class Normalization:
    """
    How a pair of solutions was pinned down: a[0] = a0 and b[b_first_index] = b_first_value (b[0] is always 0).
    """
    a0: Fraction = Fraction(1)
    b_first_index: int = 1
    b_first_value: Fraction = Fraction(1)

    def to_dict(self) -> dict:
        return {
            "a0": rational_to_str(self.a0),
            "b_first_index": self.b_first_index,
            "b_first_value": rational_to_str(self.b_first_value),
        }

    @classmethod
    def from_dict(cls, payload: dict):
        try:
            return cls(rational_from_str(payload["a0"]),
                       int(payload["b_first_index"]),
                       rational_from_str(payload["b_first_value"]))
        except (KeyError, TypeError) as err:
            raise InputError(f"malformed normalization: {payload!r}") from err


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


@dataclass(frozen=True)
class SeqPair:
    """
    The two distinguished solutions of a quantum recurrence.

    Attributes
    ----------
    a: Tuple
        Integral solution, a[0] = 1
    b: Tuple
        Second solution, b[0] = 0; exact Fractions for the Mukai varieties, mpf for Grassmannians
    variety: str
        Label such as "V12" or "G(2,5)"
    normalization: Normalization
        The pinning conditions
    """
    a: Tuple
    b: Tuple
    variety: str
    normalization: Normalization = field(default_factory=Normalization)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if not self.a or len(self.a) != len(self.b):
            raise InputError(f"a and b must be nonempty and of equal length, got {len(self.a)} and {len(self.b)}")
        if self.a[0] != self.normalization.a0:
            raise InputError(f"a[0] = {self.a[0]}, expected {self.normalization.a0}")
        if self.b[0] != 0:
            raise InputError(f"b[0] = {self.b[0]}, expected 0")
        k = self.normalization.b_first_index
        if k < len(self.b):
            value = self.b[k]
            expected = self.normalization.b_first_value
            if _is_exact(value):
                ok = value == expected
            else:
                ok = abs(value - to_mpf(expected)) <= abs(to_mpf(expected)) * mpf(10)**(-10)
            if not ok:
                raise InputError(f"b[{k}] = {value}, expected {expected}")

    @property
    def n_max(self) -> int:
        return len(self.a) - 1

    def truncate(self, n_max: int):
        return SeqPair(self.a[:n_max + 1], self.b[:n_max + 1], self.variety, self.normalization)

    def to_dict(self, prec: int = None) -> dict:
        b_exact = all(_is_exact(x) for x in self.b)
        if not b_exact and prec is None:
            raise InputError("serializing a real-valued b needs its precision")
        return {
            "variety": self.variety,
            "normalization": self.normalization.to_dict(),
            "a": [rational_to_str(x) for x in self.a],
            "b": [rational_to_str(x) for x in self.b] if b_exact else [real_to_json(x, prec) for x in self.b],
        }

    @classmethod
    def from_dict(cls, payload: dict):
        try:
            a = [rational_from_str(x) for x in payload["a"]]
            b = [rational_from_str(x) if isinstance(x, str) else real_from_json(x) for x in payload["b"]]
            return cls(a, b, payload["variety"], Normalization.from_dict(payload["normalization"]))
        except (KeyError, TypeError) as err:
            raise InputError(f"malformed sequence pair: {err}") from err


def apery_pair(variety: str, n_max: int) -> SeqPair:
    """
    The normalized solutions a (a[0] = 1) and b (b[0] = 0, b[1] = 1) of a Mukai threefold's quantum recurrence.

    The relation is imposed on b only from n = 2 on; at n = 1 it would force b[1] = a[1] b[0].

    Parameters
    ----------
    variety: str
        One of "V10", "V12", "V14", "V16", "V18"
    n_max: int
        Last index (inclusive)

    Returns
    -------
    SeqPair
    """
    rec = op_to_recurrence(mukai_operator(variety))
    a = solve(rec, A_INITIAL, n_max)
    b = solve(rec.with_valid_from(B_VALID_FROM), B_INITIAL, n_max)
    for n, value in enumerate(a):
        if value.denominator != 1:
            raise VerificationError(f"{variety}: a[{n}] = {value} is not an integer; check the operator table")
    logger.debug("%s: solved %d terms", variety, n_max + 1)
    return SeqPair(a, b, variety)


def apery_binomial_oracle(n_max: int, inner_exponent: int = 3) -> SeqPair:
    """
    Closed binomial sums for Apery's numbers, independent of any recurrence.

    a_n = sum_k C(n,k)^2 C(n+k,k)^2 and
    b_n = 1/6 sum_k C(n,k)^2 C(n+k,k)^2 (sum_{m<=n} 1/m^e + sum_{m<=k} (-1)^(m-1) / (2 m^3 C(n,m) C(n+m,m)))
    with e = `inner_exponent`. Only e = 3 solves the recurrence; e = 2 is kept for comparison.
    """
    if inner_exponent not in (2, 3):
        raise InputError(f"inner exponent must be 2 or 3, got {inner_exponent}")
    a, b = [], []
    for n in range(n_max + 1):
        harmonic = sum((Fraction(1, m**inner_exponent) for m in range(1, n + 1)), Fraction(0))
        a_n = 0
        b_n = Fraction(0)
        correction = Fraction(0)
        for k in range(n + 1):
            weight = binomial(n, k)**2 * binomial(n + k, k)**2
            if k > 0:
                correction += Fraction((-1)**(k - 1), 2 * k**3 * binomial(n, k) * binomial(n + k, k))
            a_n += weight
            b_n += weight * (harmonic + correction)
        a.append(Fraction(a_n))
        b.append(b_n / 6)
    return SeqPair(a, b, "V12")


def denominator_bound_check(pair: SeqPair, n: int) -> bool:
    """True iff the denominator of b_n divides 12 LCM(1, ..., n)^3."""
    if not 0 <= n <= pair.n_max:
        raise InputError(f"index {n} outside 0..{pair.n_max}")
    value = Fraction(pair.b[n])
    if n == 0:
        return value.denominator == 1
    return (12 * lcm_range(n)**3) % value.denominator == 0


def apery_tail(pair: SeqPair, n: int, P: int, k_max: int = None) -> mpf:
    """
    sum_{k=n+1}^{k_max} a_n / (k^3 a_k a_(k-1)); for V12 this equals zeta(3) a_n / 6 - b_n up to the truncation.
    """
    k_max = pair.n_max if k_max is None else k_max
    if not 0 <= n < k_max <= pair.n_max:
        raise InputError(f"need 0 <= n < k_max <= {pair.n_max}, got n={n}, k_max={k_max}")
    with mp.workdps(P + guard_digits(k_max - n)):
        a_n = to_mpf(pair.a[n])
        return mp.fsum(a_n / (mpf(k)**3 * to_mpf(pair.a[k]) * to_mpf(pair.a[k - 1])) for k in range(n + 1, k_max + 1))


def growth_root(pair: SeqPair, n: int, P: int = 30, method: str = "root") -> mpf:
    """
    Empirical growth rate of a: a_n^(1/n) ("root") or a_n / a_(n-1) ("ratio").

    Both tend to the dominant characteristic root; the ratio has the smaller O(1/n) offset.
    """
    if not 1 <= n <= pair.n_max:
        raise InputError(f"index {n} outside 1..{pair.n_max}")
    with mp.workdps(P):
        if method == "root":
            return abs(to_mpf(pair.a[n]))**(mpf(1) / n)
        if method == "ratio":
            return to_mpf(pair.a[n]) / to_mpf(pair.a[n - 1])
    raise InputError(f"unknown growth method {method!r}, expected 'root' or 'ratio'")


def characteristic_root(P: int = 30) -> mpf:
    """Larger root of x^2 - 34x + 1, i.e. (1 + sqrt 2)^4."""
    with mp.workdps(P):
        return 17 + 12 * mp.sqrt(2)


def irrationality_delta(P: int = 30) -> mpf:
    """(log alpha - 3) / (log alpha + 3) with alpha = (1 + sqrt 2)^4."""
    with mp.workdps(P):
        log_alpha = mp.log(characteristic_root(P + 5))
        return (log_alpha - 3) / (log_alpha + 3)


def is_apery_recurrence(rec: Recurrence) -> bool:
    """True iff `rec` is Apery's recurrence n^3 u_n - (34n^3 - 51n^2 + 27n - 5) u_(n-1) + (n-1)^3 u_(n-2) = 0."""
    expected = Recurrence([(0, PolyN([0, 0, 0, 1])), (1, PolyN([5, -27, 51, -34])), (2, PolyN([-1, 3, -3, 1]))])
    return rec.shifts == expected.shifts

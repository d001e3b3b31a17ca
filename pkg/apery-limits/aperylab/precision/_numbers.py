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
Number contract of the package.

Exact quantities are `fractions.Fraction` (reduced after every operation, positive denominator). Approximate
quantities are `mpmath.mpf` / `mpmath.mpc`; the number of decimal digits they are good to travels next to them
(`ApproxLimit.prec`, the `prec` field of serialized reals).
"""

import logging
from fractions import Fraction
from math import ceil
from math import log10
from typing import Callable
from typing import Union

from mpmath import mp
from mpmath import mpf
from mpmath import nstr

from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError

logger = logging.getLogger(__name__)

Rational = Fraction
RealLike = Union[int, Fraction, str, mpf]


def guard_digits(n_terms: int = 0) -> int:
    """
    Guard digits added on top of the requested precision for a computation summing `n_terms` terms.
    """
    return 10 + int(ceil(10 * log10(1 + n_terms)))


def to_mpf(x: RealLike) -> mpf:
    """
    Convert an exact or approximate real to `mpf` at the current working precision.
    """
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def to_rational(x: Union[int, str, Fraction]) -> Fraction:
    """
    Parse "p/q", "p", a decimal string such as "1e-20", an int or a Fraction into a reduced Fraction.
    """
    if isinstance(x, float):
        raise InputError("floats are not accepted as exact input, pass a string instead")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as err:
        raise InputError(f"not a rational number: {x!r}") from err


def digits_of_agreement(x, y) -> int:
    """
    Number of leading decimal digits on which `x` and `y` agree (relative to the larger magnitude).
    """
    x = to_mpf(x) if isinstance(x, Fraction) else x
    y = to_mpf(y) if isinstance(y, Fraction) else y
    diff = abs(x - y)
    if diff == 0:
        return mp.dps
    scale = max(abs(x), abs(y))
    if scale == 0:
        return 0
    return max(0, int(-mp.log10(diff / scale)))


def certify(func: Callable[[int], object], P: int, n_terms: int = 0, what: str = "value"):
    """
    Evaluate `func(dps)` at P + G and at P + 2G guard digits and require agreement to P digits.

    Parameters
    ----------
    func: Callable[[int], mpf or mpc]
        Computes the quantity at the given working precision (in decimal digits). It is called inside a matching
        `mp.workdps` block.
    P: int
        Requested decimal digits
    n_terms: int
        Number of terms the computation sums; sizes the guard digits
    what: str
        Name used in log and error messages

    Returns
    -------
    mpf or mpc
        The higher-precision evaluation
    """
    if P < 1:
        raise InputError(f"precision must be at least 1 digit, got {P}")
    G = guard_digits(n_terms)
    with mp.workdps(P + G):
        low = func(P + G)
    with mp.workdps(P + 2 * G):
        high = func(P + 2 * G)
        scale = abs(high)
        diff = abs(high - low)
        ok = diff <= mpf(10)**(-P) * (scale if scale > 0 else 1)
    logger.debug("certify %s: P=%d G=%d agree=%s", what, P, G, ok)
    if not ok:
        raise PrecisionBudgetError(f"{what}: evaluations at {P + G} and {P + 2 * G} digits disagree within {P} digits")
    return high


def rational_to_str(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when q = 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return to_rational(s)


def real_to_json(x, prec: int) -> dict:
    """
    Serialize a real as {"digits": signed digit string, "exponent": int, "prec": int}, value = digits * 10**exponent.
    """
    with mp.workdps(prec):
        x = +mpf(x)
        if x == 0:
            return {"digits": "0", "exponent": 0, "prec": prec}
        text = nstr(x, prec, strip_zeros=False, min_fixed=1, max_fixed=0, show_zero_exponent=True)
    mantissa, exponent = text.split("e")
    sign = "-" if mantissa.startswith("-") else ""
    digits = mantissa.lstrip("-").replace(".", "")
    return {"digits": sign + digits, "exponent": int(exponent) - (len(digits) - 1), "prec": prec}


def real_from_json(payload: dict) -> mpf:
    """Inverse of `real_to_json`; the value is rounded to the current working precision."""
    try:
        return mpf(f"{payload['digits']}e{payload['exponent']}")
    except (KeyError, TypeError, ValueError) as err:
        raise InputError(f"malformed real: {payload!r}") from err

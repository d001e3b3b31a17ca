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

import json
import logging
from fractions import Fraction
from math import ceil
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

from aperylab.precision import PolyN
from aperylab.precision import rational_from_str
from aperylab.precision import rational_to_str
from aperylab.utils import InputError
from aperylab.utils import RecurrenceError
from aperylab.utils import progress

from ._operators import DiffOp

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 1000


def _largest_integer_root(p: PolyN) -> int:
    """Largest nonnegative integer root of p, or -1 if there is none."""
    lead = p.coeffs[-1]
    bound = 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=0)
    for n in range(int(ceil(bound)), -1, -1):
        if p(n) == 0:
            return n
    return -1


class Recurrence:
    """
    Linear recurrence sum_i P_i(n) u(n - i) = 0 asserted for n >= valid_from.

    Parameters
    ----------
    shifts: Sequence[Tuple[int, PolyN]]
        Pairs (i, P_i); P_0 must be nonzero
    valid_from: int
        First index at which the relation holds; defaults to one past the largest nonnegative integer root of P_0
    horizon: int
        P_0(n) != 0 is checked for valid_from <= n < valid_from + horizon
    """
    def __init__(self, shifts: Sequence[Tuple[int, PolyN]], valid_from: int = None, horizon: int = DEFAULT_HORIZON):
        table: Dict[int, PolyN] = {}
        for i, poly in shifts:
            if i < 0:
                raise InputError(f"negative shift {i}")
            table[i] = table.get(i, PolyN()) + poly
        table = {i: p for i, p in sorted(table.items()) if not p.is_zero()}
        if 0 not in table:
            raise InputError("the leading polynomial P_0 of a recurrence cannot be zero")
        self._shifts = table

        root = _largest_integer_root(table[0])
        if valid_from is None:
            valid_from = root + 1
        for n in range(valid_from, valid_from + horizon):
            if table[0](n) == 0:
                raise RecurrenceError(f"leading polynomial vanishes at n={n} >= valid_from={valid_from}", n)
        self._valid_from = valid_from

    @property
    def shifts(self) -> List[Tuple[int, PolyN]]:
        return list(self._shifts.items())

    @property
    def order(self) -> int:
        return max(self._shifts)

    @property
    def valid_from(self) -> int:
        return self._valid_from

    def poly(self, i: int) -> PolyN:
        return self._shifts.get(i, PolyN())

    def with_valid_from(self, valid_from: int):
        return Recurrence(self.shifts, valid_from=valid_from)

    def residual(self, u: Sequence, n: int):
        """sum_i P_i(n) u(n - i), with u(k) = 0 for k < 0."""
        return sum((p(n) * u[n - i] for i, p in self._shifts.items() if n - i >= 0), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Recurrence):
            return NotImplemented
        return self._shifts == other._shifts and self._valid_from == other._valid_from

    def __repr__(self):
        return f"Recurrence(shifts={self.shifts}, valid_from={self._valid_from})"


def op_to_recurrence(op: DiffOp) -> Recurrence:
    """
    Recurrence satisfied by the coefficients of power-series solutions of `op`.

    Writing op = sum_i t^i Q_i(D), the coefficient of t^n in op(sum u_m t^m) is sum_i Q_i(n - i) u(n - i), so
    P_i(n) = Q_i(n - i).
    """
    return Recurrence([(i, q.shift(-i)) for i, q in op.polys().items()])


def regularize_recurrence(rec: Recurrence) -> Recurrence:
    """
    Recurrence solved by n! u(n) whenever u solves `rec`: P_i(n) becomes P_i(n) n (n - 1) ... (n - i + 1).
    """
    return Recurrence([(i, p.falling_factorial_product(i)) for i, p in rec.shifts], valid_from=rec.valid_from)


def solve(rec: Recurrence, initial: Sequence, n_max: int) -> List[Fraction]:
    """
    Exact forward solution of `rec` through index `n_max` (inclusive).

    Parameters
    ----------
    rec: Recurrence
        The recurrence; it is used for every n >= len(initial)
    initial: Sequence
        Initial values u(0), ..., u(k - 1) with k >= rec.valid_from
    n_max: int
        Last index computed

    Returns
    -------
    List[Fraction]
        u(0), ..., u(n_max)
    """
    if n_max < 0:
        raise InputError(f"n_max must be nonnegative, got {n_max}")
    if len(initial) < rec.valid_from:
        raise InputError(f"{len(initial)} initial values given, the recurrence needs {rec.valid_from}")
    u = [Fraction(x) for x in initial][:n_max + 1]
    shifts = [(i, p) for i, p in rec.shifts if i > 0]
    lead = rec.poly(0)
    for n in progress(range(len(u), n_max + 1), logger, desc="solve"):
        denominator = lead(n)
        if denominator == 0:
            raise RecurrenceError(f"leading polynomial vanishes at n={n}", n)
        acc = sum((p(n) * u[n - i] for i, p in shifts if n - i >= 0), Fraction(0))
        u.append(-acc / denominator)
    return u


def recurrence_to_dict(rec: Recurrence, normalization: dict = None) -> dict:
    payload = {
        "shifts": [{
            "i": i, "poly": p.to_strings()
        } for i, p in rec.shifts],
        "valid_from": rec.valid_from,
    }
    if normalization is not None:
        payload["normalization"] = normalization
    return payload


def recurrence_to_json(rec: Recurrence, normalization: dict = None) -> str:
    """
    Serialize as {"shifts": [{"i": 0, "poly": [...]}, ...], "valid_from": k}, polynomials as ascending rational
    strings, with an optional "normalization" block {"a_initial": [...], "b_initial": [...], "b_valid_from": 2}.
    """
    return json.dumps(recurrence_to_dict(rec, normalization), indent=2)


def normalization_block(a_initial: Sequence, b_initial: Sequence, b_valid_from: int) -> dict:
    return {
        "a_initial": [rational_to_str(x) for x in a_initial],
        "b_initial": [rational_to_str(x) for x in b_initial],
        "b_valid_from": b_valid_from,
    }


def recurrence_from_json(text: str) -> Tuple[Recurrence, dict]:
    """
    Inverse of `recurrence_to_json`.

    Returns
    -------
    (Recurrence, dict or None)
        The recurrence and its parsed normalization block, with initial values as Fractions
    """
    try:
        payload = json.loads(text)
        shifts = [(int(entry["i"]), PolyN.from_strings(entry["poly"])) for entry in payload["shifts"]]
        valid_from = int(payload["valid_from"])
    except (ValueError, KeyError, TypeError) as err:
        raise InputError(f"malformed recurrence JSON: {err}") from err
    rec = Recurrence(shifts, valid_from=valid_from)
    normalization = payload.get("normalization")
    if normalization is not None:
        try:
            normalization = {
                "a_initial": [rational_from_str(x) for x in normalization["a_initial"]],
                "b_initial": [rational_from_str(x) for x in normalization["b_initial"]],
                "b_valid_from": int(normalization["b_valid_from"]),
            }
        except (KeyError, TypeError, ValueError) as err:
            raise InputError(f"malformed normalization block: {err}") from err
    return rec, normalization

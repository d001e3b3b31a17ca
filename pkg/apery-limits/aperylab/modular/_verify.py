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
Coefficientwise checks of the modular parametrization of the rational cases:

* sum a_n t^n = Phi(q) after substituting the inverse mirror map t = t(q);
* (sum b_n t^n) / (sum a_n t^n) = sum c_n q^n / n^3 with F = sum c_n q^n.

Everything is exact, so a mismatch is never a rounding artifact. Mismatches are reported, not raised.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from aperylab.holonomic import apery_pair
from aperylab.holonomic import mirror_map
from aperylab.holonomic import mukai_operator
from aperylab.precision import QSeries
from aperylab.precision import rational_to_str

from ._eisenstein import check_rational_variety
from ._eisenstein import f_primitive
from ._eisenstein import phi_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityReport:
    variety: str
    identity: str
    order_checked: int
    status: str
    first_mismatch: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "variety": self.variety,
            "identity": self.identity,
            "order_checked": self.order_checked,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
        }


def _compare(variety: str, identity: str, lhs: QSeries, rhs: QSeries, order: int) -> IdentityReport:
    for power in range(order + 1):
        if lhs[power] != rhs[power]:
            mismatch = {"power": power, "lhs": rational_to_str(lhs[power]), "rhs": rational_to_str(rhs[power])}
            logger.warning("%s %s identity fails at q^%d: %s != %s",
                           variety,
                           identity,
                           power,
                           mismatch["lhs"],
                           mismatch["rhs"])
            return IdentityReport(variety, identity, power - 1, "fail", mismatch)
    return IdentityReport(variety, identity, order, "pass")


def _substituted(variety: str, order: int):
    pair = apery_pair(variety, max(order, 1))
    t_of_q = mirror_map(mukai_operator(variety), max(order, 1)).t_of_q
    A = QSeries(pair.a, var="t")
    B = QSeries(pair.b, var="t")
    return A.compose(t_of_q).truncate(order), (B / A).compose(t_of_q).truncate(order)


def verify_phi_identity(variety: str, order: int) -> IdentityReport:
    """
    Compare A(t(q)) with the weight-2 form Phi through q^order.

    Parameters
    ----------
    variety: str
        One of "V12", "V16", "V18"
    order: int
        Highest power of q compared

    Returns
    -------
    IdentityReport
    """
    check_rational_variety(variety)
    A_of_q, _ = _substituted(variety, order)
    return _compare(variety, "phi", A_of_q, phi_form(variety, order), order)


def verify_ratio_identity(variety: str, order: int) -> IdentityReport:
    """Compare (B/A)(t(q)) with sum c_n q^n / n^3 through q^order."""
    check_rational_variety(variety)
    _, ratio_of_q = _substituted(variety, order)
    return _compare(variety, "ratio", ratio_of_q, f_primitive(variety, order), order)

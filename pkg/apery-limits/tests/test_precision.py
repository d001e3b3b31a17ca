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

import pytest
from mpmath import mp
from mpmath import mpf

from aperylab.precision import PolyN
from aperylab.precision import QSeries
from aperylab.precision import bernoulli
from aperylab.precision import binomial
from aperylab.precision import certify
from aperylab.precision import digits_of_agreement
from aperylab.precision import guard_digits
from aperylab.precision import lcm_range
from aperylab.precision import pi
from aperylab.precision import rational_from_str
from aperylab.precision import rational_to_str
from aperylab.precision import real_from_json
from aperylab.precision import real_to_json
from aperylab.precision import to_rational
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError


@pytest.mark.parametrize("k, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, Fraction(0)),
                                         (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))])
def test_bernoulli(k, expected):
    assert bernoulli(k) == expected


def test_binomial_and_lcm():
    assert binomial(6, 3) == 20
    assert binomial(3, 5) == 0
    assert lcm_range(1) == 1
    assert lcm_range(10) == 2520


def test_guard_digits_grow_with_terms():
    assert guard_digits(0) == 10
    assert guard_digits(999) == 40
    assert guard_digits(10) < guard_digits(1000)


def test_to_rational_parsing():
    assert to_rational("3/12") == Fraction(1, 4)
    assert to_rational("1e-3") == Fraction(1, 1000)
    assert to_rational(7) == Fraction(7)
    with pytest.raises(InputError):
        to_rational(0.5)
    with pytest.raises(InputError):
        to_rational("one half")


def test_rational_strings():
    assert rational_to_str(Fraction(-6, 4)) == "-3/2"
    assert rational_to_str(Fraction(5)) == "5"
    assert rational_from_str("-3/2") == Fraction(-3, 2)


def test_real_json_keeps_digits():
    with mp.workdps(40):
        x = pi(40)
        payload = real_to_json(x, 40)
        assert payload["prec"] == 40
        assert payload["digits"].startswith("31415926535")
        assert digits_of_agreement(real_from_json(payload), x) >= 39
        assert real_to_json(mpf(0), 10) == {"digits": "0", "exponent": 0, "prec": 10}
        negative = real_from_json(real_to_json(-x / 1000, 40))
        assert digits_of_agreement(negative, -x / 1000) >= 39


def test_real_from_json_rejects_garbage():
    with pytest.raises(InputError):
        real_from_json({"digits": "12"})


def test_digits_of_agreement():
    with mp.workdps(30):
        assert digits_of_agreement(mpf("1.2345"), mpf("1.2346")) == 4
        assert digits_of_agreement(Fraction(1, 3), Fraction(1, 3)) == 30


def test_certify_accepts_stable_value():
    value = certify(lambda dps: mp.sqrt(2), 30)
    with mp.workdps(30):
        assert abs(value - mp.sqrt(2)) < mpf(10)**-29


def test_certify_rejects_precision_dependent_value():
    with pytest.raises(PrecisionBudgetError):
        certify(lambda dps: mpf(dps), 20)
    with pytest.raises(InputError):
        certify(lambda dps: mpf(1), 0)


def test_poly_arithmetic():
    p = PolyN([1, 2, 1])  # (x + 1)^2
    assert p(3) == 16
    assert p == PolyN.linear(1) * PolyN.linear(1)
    assert p.shift(-1) == PolyN.monomial(2)
    assert p.derivative() == PolyN([2, 2])
    assert PolyN([0, 0]).degree == -1
    assert PolyN.linear(0).falling_factorial_product(2) == PolyN([0, 0, -1, 1])
    assert PolyN.from_strings(p.to_strings()) == p


def test_qseries_inverse_and_exp():
    x = QSeries.variable(6)
    geometric = (1 - x).inverse()
    assert list(geometric.coeffs) == [1] * 7
    e = x.exp()
    assert e[3] == Fraction(1, 6)
    assert (e * (-x).exp()) == QSeries([1], order=6)


def test_qseries_reversion_undoes_composition():
    x = QSeries.variable(8, var="t")
    f = x + x * x * 3 - x * x * x
    g = f.reversion(var="q")
    assert f.compose(g) == QSeries.variable(8, var="q")
    assert g.var == "q"


def test_qseries_errors():
    with pytest.raises(ZeroDivisionError):
        QSeries([0, 1]).inverse()
    with pytest.raises(InputError):
        QSeries([1, 1]).exp()
    with pytest.raises(InputError):
        QSeries([1, 2]).reversion()

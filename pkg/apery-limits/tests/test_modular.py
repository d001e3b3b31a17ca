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

from aperylab.modular import L_F
from aperylab.modular import L_F_3
from aperylab.modular import RATIONAL_VARIETIES
from aperylab.modular import apery_constant
from aperylab.modular import describe_apery_constant
from aperylab.modular import eisenstein_E2
from aperylab.modular import euler_factor
from aperylab.modular import f_form
from aperylab.modular import f_primitive
from aperylab.modular import legendre3
from aperylab.modular import phi_form
from aperylab.modular import sigma_k
from aperylab.modular import verify_phi_identity
from aperylab.modular import verify_ratio_identity
from aperylab.precision import digits_of_agreement
from aperylab.precision import to_mpf
from aperylab.special import chi3_L
from aperylab.special import zeta_int
from aperylab.utils import InputError


def test_divisor_sums():
    assert sigma_k(1, 3) == 1
    assert sigma_k(12, 1) == 28
    assert sigma_k(6, 3) == 252
    assert sigma_k(9, 0) == 3
    with pytest.raises(InputError):
        sigma_k(0, 1)


def test_legendre3():
    assert [legendre3(n) for n in range(7)] == [0, 1, -1, 0, 1, -1, 0]


def test_eisenstein_harmonic():
    E = eisenstein_E2(2, 6)
    assert E[0] == Fraction(-1, 12)
    assert [E[n] for n in range(1, 7)] == [0, 2, 0, 6, 0, 8]


@pytest.mark.parametrize("variety, first", [("V12", 5), ("V16", 4), ("V18", 3)])
def test_phi_starts_like_a(variety, first):
    phi = phi_form(variety, 5)
    assert phi[0] == 1
    assert phi[1] == first


@pytest.mark.parametrize("variety", RATIONAL_VARIETIES)
def test_weight_four_form_is_normalized(variety):
    F = f_form(variety, 10)
    assert F[0] == 0
    assert F[1] == 1
    assert f_primitive(variety, 10)[2] == F[2] / 8


def test_v18_twist():
    F = f_form("V18", 6)
    assert list(F.coeffs) == [0, 1, -9, 0, 73, -126, 0]


@pytest.mark.parametrize("variety", RATIONAL_VARIETIES)
def test_phi_identity(variety):
    report = verify_phi_identity(variety, 20)
    assert report.passed, report.to_dict()
    assert report.order_checked == 20
    assert report.first_mismatch is None


@pytest.mark.parametrize("variety", RATIONAL_VARIETIES)
def test_ratio_identity(variety):
    report = verify_ratio_identity(variety, 20)
    assert report.passed, report.to_dict()
    assert report.to_dict()["identity"] == "ratio"


def test_identities_need_rational_variety():
    with pytest.raises(InputError):
        verify_phi_identity("V10", 5)
    with pytest.raises(InputError):
        phi_form("V14", 5)


def test_euler_factors():
    assert euler_factor("V12", 3) == Fraction(-1, 3)
    assert euler_factor("V16", 3) == Fraction(-7, 16)
    with pytest.raises(InputError):
        euler_factor("V18", 3)


@pytest.mark.parametrize("variety", RATIONAL_VARIETIES)
def test_l_value_is_apery_constant(variety):
    with mp.workdps(50):
        assert digits_of_agreement(L_F_3(variety, 45), apery_constant(variety, 45)) >= 40


def test_l_function_beyond_critical_value():
    value = L_F("V12", 5, 30)
    with mp.workdps(40):
        expected = to_mpf(euler_factor("V12", 5)) * zeta_int(5, 35) * zeta_int(2, 35)
        assert digits_of_agreement(value, expected) >= 29
        twisted = chi3_L(2, 35) * chi3_L(5, 35)
        assert digits_of_agreement(L_F("V18", 5, 30), twisted) >= 29
    with pytest.raises(InputError):
        L_F("V12", 4, 30)


def test_constant_descriptions():
    assert describe_apery_constant("V12") == "1/6 zeta(3)"
    assert describe_apery_constant("V18") == "1/3 L(chi_3, 3)"
    with pytest.raises(InputError):
        apery_constant("V20", 20)

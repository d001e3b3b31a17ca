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
from math import factorial

import pytest
from mpmath import mp
from mpmath import mpf

from aperylab.deresonate import ExponentSet
from aperylab.deresonate import PerturbedSeries
from aperylab.deresonate import cancellation_digits
from aperylab.deresonate import gamma_product
from aperylab.deresonate import grassmann_apery_limit
from aperylab.deresonate import grassmann_constant
from aperylab.deresonate import grassmann_pair
from aperylab.deresonate import integrality_probe
from aperylab.deresonate import lefschetz_crosscheck
from aperylab.deresonate import lefschetz_weight
from aperylab.deresonate import operator_residual
from aperylab.deresonate import pac_limit
from aperylab.deresonate import perturbed_apery_constant
from aperylab.deresonate import perturbed_series
from aperylab.deresonate import sine_ratio_check
from aperylab.deresonate import wronskian
from aperylab.holonomic import LimitMethod
from aperylab.precision import digits_of_agreement
from aperylab.utils import InputError
from aperylab.utils import ResonanceError

V10_A = [1, 6, 114, 2940, 87570, 2835756]

SINE_CASES = [(5, Fraction(1, 8), Fraction(1, 12)), (6, Fraction(1, 10), Fraction(1, 14))]


def test_exponent_set():
    exps = ExponentSet(6, "1/8", Fraction(1, 12))
    assert exps.e == Fraction(1, 8)
    assert exps.exponents == [Fraction(3, 8), Fraction(5, 8), Fraction(5, 12), Fraction(7, 12), Fraction(1, 2),
                              Fraction(1, 2)]
    assert exps.e_pair == (Fraction(5, 8), Fraction(3, 8))
    assert sorted(exps.differences(Fraction(5, 8))) == [Fraction(1, 24), Fraction(1, 8), Fraction(1, 8), Fraction(5, 24),
                                                        Fraction(1, 4)]


@pytest.mark.parametrize("N, e, u, error", [(4, "1/8", "1/12", InputError), (5, "0", "1/12", ResonanceError),
                                            (5, "1/8", "-1/8", ResonanceError), (5, "1/4", "1/12", InputError)])
def test_exponent_set_rejects(N, e, u, error):
    with pytest.raises(error):
        ExponentSet(N, e, u)


def test_repeated_half_is_resonant():
    exps = ExponentSet(6, Fraction(1, 8), Fraction(1, 12))
    with pytest.raises(ResonanceError):
        exps.differences(Fraction(1, 2))
    with pytest.raises(InputError):
        exps.differences(Fraction(1, 3))


def test_gamma_product_reflections():
    with mp.workdps(30):
        value = gamma_product([Fraction(1, 3), Fraction(2, 3), Fraction(5, 4)], 30)
        expected = mp.gamma(mpf(1) / 3) * mp.gamma(mpf(2) / 3) * mp.gamma(mpf(5) / 4)
        assert digits_of_agreement(value, expected) >= 25


def test_series_solves_the_operator():
    exps = ExponentSet(5, Fraction(1, 8), Fraction(1, 12))
    for alpha in exps.e_pair + exps.u_pair:
        series = perturbed_series(exps, alpha, 40, 30)
        assert series.n_max == 40
        assert operator_residual(exps, series) < mpf(10)**-25


def test_wronskian_needs_complementary_exponents():
    exps = ExponentSet(5, Fraction(1, 8), Fraction(1, 12))
    plus = perturbed_series(exps, exps.e_pair[0], 10, 20)
    other = perturbed_series(exps, exps.u_pair[1], 10, 20)
    with pytest.raises(InputError):
        wronskian(plus, other)
    minus = perturbed_series(exps, exps.e_pair[1], 10, 20)
    with pytest.raises(InputError):
        wronskian(plus, minus, n_max=11)
    assert len(wronskian(plus, minus)) == 11


def test_cancellation_digits_grow_linearly():
    assert cancellation_digits(5, 0) == 0
    assert cancellation_digits(5, 400) > cancellation_digits(5, 100)
    assert cancellation_digits(6, 400) < cancellation_digits(5, 400)


@pytest.mark.parametrize("N, e, u", SINE_CASES)
def test_sine_ratio(N, e, u):
    report = sine_ratio_check(ExponentSet(N, e, u), 400, 20)
    assert report.passed, report.to_dict()
    assert report.limit.error_estimate <= mpf(10)**-15
    assert report.agreement_digits >= 19


def test_perturbed_constant_is_even():
    first = perturbed_apery_constant(ExponentSet(5, Fraction(1, 8), Fraction(1, 12)), 30)
    second = perturbed_apery_constant(ExponentSet(5, Fraction(-1, 8), Fraction(-1, 12)), 30)
    with mp.workdps(30):
        assert digits_of_agreement(first, second) >= 25


@pytest.mark.parametrize("N", [5, 6])
def test_pac_limit(N):
    limit = pac_limit(N, 20)
    assert limit.method is LimitMethod.PERTURBATION_LADDER
    with mp.workdps(30):
        assert digits_of_agreement(limit.value, grassmann_constant(N, 30)) >= 20


def test_grassmann_constant():
    with mp.workdps(30):
        assert digits_of_agreement(grassmann_constant(5, 30), mp.zeta(2) / 25) >= 29


@pytest.mark.parametrize("N, a_first", [(5, 360), (6, 2880)])
def test_grassmann_pair_start(N, a_first):
    pair = grassmann_pair(N, 6, 30)
    assert pair.a[0] == 1
    assert pair.a[1] == a_first
    assert all(x.denominator == 1 for x in pair.a)
    assert pair.b[0] == 0
    with mp.workdps(30):
        assert digits_of_agreement(pair.b[1], mp.factorial(N - 1)) >= 25


def test_integrality_probe_small():
    report = integrality_probe(5, 10, 30)
    assert report.passed
    assert report.max_residual < mpf(10)**-10
    assert report.decades[1] == report.decades[0] + 10


@pytest.mark.slow
def test_integrality_probe_acceptance():
    report = integrality_probe(5, 40, 30)
    assert report.passed and report.max_residual < mpf(10)**-10


@pytest.mark.slow
@pytest.mark.parametrize("N", [5, 6, 7])
def test_grassmann_apery_limit(N):
    limit = grassmann_apery_limit(N, 40, 20)
    with mp.workdps(30):
        assert digits_of_agreement(limit.value, grassmann_constant(N, 30)) >= 20


def test_lefschetz_weights():
    assert lefschetz_weight("V10", 1) == Fraction(2, 120)
    assert lefschetz_weight("V14", 1) == Fraction(1, 720)
    with pytest.raises(InputError):
        lefschetz_weight("V12", 1)


@pytest.mark.parametrize("variety, ratio", [("V10", Fraction(5, 2)), ("V14", Fraction(6))])
def test_lefschetz_crosscheck(variety, ratio):
    report = lefschetz_crosscheck(variety, 6, 30)
    assert report.C_a == 1 and report.lam == 1
    assert report.a_mismatches == []
    with mp.workdps(30):
        assert digits_of_agreement(report.C_b, mpf(ratio.numerator) / ratio.denominator) >= 20
    assert report.constant_ratio_digits >= 20
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize("variety", ["V10", "V14"])
def test_lefschetz_crosscheck_twenty_terms(variety):
    report = lefschetz_crosscheck(variety, 20, 30)
    assert report.a_mismatches == []
    assert report.passed, report.to_dict()


def test_small_n_rejected():
    with pytest.raises(InputError):
        grassmann_pair(4, 5, 20)
    with pytest.raises(InputError):
        pac_limit(4, 20)


def _harmonic(n):
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def _a_closed_form(N, n):
    """(-1)^n (Nn)! sum_{d1 + d2 = n} [1 - (N / 2)(d1 - d2)(H_d1 - H_d2)] / (d1! d2!)^N."""
    total = Fraction(0)
    for d1 in range(n + 1):
        d2 = n - d1
        weight = 1 - Fraction(N, 2) * (d1 - d2) * (_harmonic(d1) - _harmonic(d2))
        total += weight / Fraction(factorial(d1) * factorial(d2))**N
    return (-1)**n * factorial(N * n) * total


def test_a_closed_form_is_integral():
    assert [_a_closed_form(5, n) for n in range(5)] == [1, 360, 2154600, 24720696000, 382230833985000]
    assert all(_a_closed_form(N, n).denominator == 1 for N in (5, 6, 7) for n in range(8))


@pytest.mark.parametrize("N", [5, 6, 7])
def test_grassmann_pair_matches_closed_form(N):
    pair = grassmann_pair(N, 6, 30)
    assert list(pair.a) == [_a_closed_form(N, n) for n in range(7)]


def test_grassmann_pair_reproduces_v10():
    pair = grassmann_pair(5, 5, 30)
    assert [pair.a[n] * lefschetz_weight("V10", n) for n in range(6)] == V10_A


def _series_pair(e, u, n_max=12, P=60):
    exps = ExponentSet(5, e, u)
    plus, minus = exps.e_pair
    return perturbed_series(exps, plus, n_max, P), perturbed_series(exps, minus, n_max, P)


def test_wronskian_is_antisymmetric():
    plus, minus = _series_pair(Fraction(1, 8), Fraction(1, 12))
    forward = wronskian(plus, minus)
    backward = wronskian(minus, plus)
    with mp.workdps(60):
        for n in range(len(forward)):
            assert abs(forward[n] + backward[n]) <= mpf(10)**-50 * abs(forward[n])


def test_wronskian_is_bilinear():
    plus, minus = _series_pair(Fraction(1, 8), Fraction(1, 12))
    base = wronskian(plus, minus)
    with mp.workdps(60):
        c = mpf(3) / 7
        scaled = PerturbedSeries(plus.alpha, tuple(c * g for g in plus.coeffs), plus.prec)
        doubled = PerturbedSeries(minus.alpha, tuple(2 * g for g in minus.coeffs), minus.prec)
        mixed = wronskian(scaled, doubled)
        for n in range(len(base)):
            assert abs(mixed[n] - 2 * c * base[n]) <= mpf(10)**-50 * abs(base[n])


def test_wronskian_vanishes_linearly_in_e():
    # R_e is odd in e, so R_e / e has a finite limit with an O(e^2) correction
    large = wronskian(*_series_pair(Fraction(1, 10**8), Fraction(1, 12)))
    small = wronskian(*_series_pair(Fraction(1, 10**9), Fraction(1, 12)))
    with mp.workdps(60):
        for n in range(6):
            assert small[n] != 0
            assert abs(large[n] / small[n] - 10) < mpf(10)**-10


@pytest.mark.slow
def test_pac_limit_matches_grassmann_limit_for_n7():
    ladder = pac_limit(7, 20)
    direct = grassmann_apery_limit(7, 40, 20)
    with mp.workdps(30):
        assert digits_of_agreement(ladder.value, direct.value) >= 18
        assert digits_of_agreement(ladder.value, mp.pi**2 / (49 * 8)) >= 18

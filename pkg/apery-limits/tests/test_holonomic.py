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

from aperylab.holonomic import B_VALID_FROM
from aperylab.holonomic import VARIETIES
from aperylab.holonomic import DiffOp
from aperylab.holonomic import LimitMethod
from aperylab.holonomic import Normalization
from aperylab.holonomic import Recurrence
from aperylab.holonomic import SeqPair
from aperylab.holonomic import apery_binomial_oracle
from aperylab.holonomic import apery_limit
from aperylab.holonomic import apery_pair
from aperylab.holonomic import apery_tail
from aperylab.holonomic import apply_operator
from aperylab.holonomic import characteristic_root
from aperylab.holonomic import compose_d_minus
from aperylab.holonomic import denominator_bound_check
from aperylab.holonomic import extrapolate_limit
from aperylab.holonomic import frobenius_mum
from aperylab.holonomic import frobenius_residual
from aperylab.holonomic import growth_root
from aperylab.holonomic import irrationality_delta
from aperylab.holonomic import is_apery_recurrence
from aperylab.holonomic import mirror_map
from aperylab.holonomic import mukai_operator
from aperylab.holonomic import op_to_recurrence
from aperylab.holonomic import recurrence_from_json
from aperylab.holonomic import recurrence_to_json
from aperylab.holonomic import regularize_recurrence
from aperylab.holonomic import solve
from aperylab.modular import apery_constant
from aperylab.precision import PolyN
from aperylab.precision import QSeries
from aperylab.precision import digits_of_agreement
from aperylab.precision import to_mpf
from aperylab.utils import ConvergenceError
from aperylab.utils import InputError
from aperylab.utils import RecurrenceError


@pytest.mark.parametrize("variety, a", [("V10", [1, 6, 114]), ("V12", [1, 5, 73, 1445]), ("V14", [1, 4, 48]),
                                        ("V16", [1, 4, 40]), ("V18", [1, 3, 27])])
def test_first_coefficients(variety, a):
    pair = apery_pair(variety, len(a) - 1)
    assert list(pair.a) == a
    assert pair.b[0] == 0 and pair.b[1] == 1


def test_v12_b_values():
    pair = apery_pair("V12", 2)
    assert pair.b[2] == Fraction(117, 8)


def test_v12_is_aperys_recurrence():
    rec = op_to_recurrence(mukai_operator("V12"))
    assert is_apery_recurrence(rec)
    assert rec.valid_from == 1
    assert not is_apery_recurrence(op_to_recurrence(mukai_operator("V16")))


def test_binomial_oracle_agrees_with_recurrence():
    pair = apery_pair("V12", 50)
    oracle = apery_binomial_oracle(50)
    assert pair.a == oracle.a
    assert pair.b == oracle.b


def test_binomial_oracle_inner_exponent_two_differs():
    squared = apery_binomial_oracle(4, inner_exponent=2)
    pair = apery_pair("V12", 4)
    assert squared.a == pair.a
    assert squared.b[1] == pair.b[1]
    assert squared.b[2] != pair.b[2]
    with pytest.raises(InputError):
        apery_binomial_oracle(4, inner_exponent=4)


def test_recurrence_residuals_vanish():
    for variety in VARIETIES:
        rec = op_to_recurrence(mukai_operator(variety))
        pair = apery_pair(variety, 30)
        assert all(rec.residual(pair.a, n) == 0 for n in range(rec.valid_from, 31))
        assert all(rec.residual(pair.b, n) == 0 for n in range(B_VALID_FROM, 31))
        assert rec.residual(pair.b, 1) != 0


def test_b_satisfies_composed_operator():
    op = mukai_operator("V12")
    pair = apery_pair("V12", 25)
    assert all(c == 0 for c in apply_operator(compose_d_minus(op, 1), pair.b))
    assert apply_operator(op, pair.b)[1] == 1
    assert all(c == 0 for c in apply_operator(op, pair.a))


def test_denominator_bound():
    pair = apery_pair("V12", 60)
    assert all(denominator_bound_check(pair, n) for n in range(61))


def test_apery_tail_is_the_error_term():
    pair = apery_pair("V12", 80)
    n = 10
    tail = apery_tail(pair, n, 30)
    with mp.workdps(50):
        error = apery_constant("V12", 40) * to_mpf(pair.a[n]) - to_mpf(pair.b[n])
        assert digits_of_agreement(error, tail) >= 28


@pytest.mark.slow
def test_growth_rate_v12():
    pair = apery_pair("V12", 500)
    alpha = characteristic_root(30)
    with mp.workdps(30):
        assert abs(growth_root(pair, 500, method="ratio") - alpha) / alpha < 0.01
        # a_n^(1/n) carries the n^(-3/2) prefactor and sits about 2% low at n = 500
        assert abs(growth_root(pair, 500, method="root") - alpha) / alpha < 0.03


def test_growth_root_arguments():
    pair = apery_pair("V12", 5)
    with pytest.raises(InputError):
        growth_root(pair, 6)
    with pytest.raises(InputError):
        growth_root(pair, 3, method="mean")


def test_irrationality_delta():
    with mp.workdps(30):
        assert abs(irrationality_delta() - mpf("0.080529431")) < mpf(10)**-8


@pytest.mark.parametrize("variety", VARIETIES)
def test_apery_limit_matches_constant(variety):
    pair = apery_pair(variety, 150)
    limit = apery_limit(pair, 30)
    with mp.workdps(40):
        assert digits_of_agreement(limit.value, apery_constant(variety, 40)) >= 29
    assert limit.n_used <= 150
    assert limit.error_estimate < mpf(10)**-29


@pytest.mark.slow
@pytest.mark.parametrize("variety", VARIETIES)
def test_apery_limit_acceptance_digits(variety):
    limit = apery_limit(apery_pair(variety, 400), 50)
    with mp.workdps(60):
        assert digits_of_agreement(limit.value, apery_constant(variety, 60)) >= 40


def test_apery_limit_of_zero_b():
    pair = SeqPair([1] * 12, [0] * 12, "constant", Normalization(Fraction(1), 1, Fraction(0)))
    limit = apery_limit(pair, 20)
    assert limit.value == 0 and limit.error_estimate == 0


def test_extrapolate_geometric_sequence():
    with mp.workdps(40):
        values = [1 + mpf(2)**-n for n in range(200)]
        limit = extrapolate_limit(values, 20)
        assert abs(limit.value - 1) <= limit.error_estimate
        aitken = extrapolate_limit(values, 20, LimitMethod.AITKEN)
        assert abs(aitken.value - 1) < abs(limit.value - 1)


def test_extrapolate_failures():
    with mp.workdps(30):
        with pytest.raises(ConvergenceError):
            extrapolate_limit([mpf(n) for n in range(20)], 10)
        with pytest.raises(ConvergenceError):
            extrapolate_limit([1 + mpf(2)**-n for n in range(10)], 20)


def test_extrapolate_estimate_is_stable_at_half_the_terms():
    with mp.workdps(40):
        values = [1 + mpf(2)**-n - mpf(3)**-n for n in range(200)]
        limit = extrapolate_limit(values, 20)
        half = extrapolate_limit(values[:limit.n_used // 2 + 1], 8)
        assert half.n_used <= limit.n_used // 2
        assert abs(half.value - limit.value) <= half.error_estimate


def test_extrapolate_rejects_a_late_shift():
    # converges to 1 at first, then jumps by 10^-3 before the target precision is reached
    with mp.workdps(30):
        values = [1 + mpf(2)**-n + (mpf(10)**-3 if n > 30 else 0) for n in range(80)]
        with pytest.raises(ConvergenceError):
            extrapolate_limit(values, 10)


def test_apery_limit_without_convergence():
    pair = SeqPair([1] * 12, list(range(12)), "linear", Normalization(Fraction(1), 1, Fraction(1)))
    with pytest.raises(ConvergenceError):
        apery_limit(pair, 20)


def test_recurrence_json_round_trip():
    rec = op_to_recurrence(mukai_operator("V14"))
    text = recurrence_to_json(rec)
    parsed, normalization = recurrence_from_json(text)
    assert parsed == rec
    assert normalization is None


@pytest.mark.parametrize("text", ["not json", '{"shifts": []}', '{"shifts": [{"i": 0, "poly": ["1"]}]}'])
def test_recurrence_json_errors(text):
    with pytest.raises(InputError):
        recurrence_from_json(text)


def test_leading_polynomial_zero():
    shifts = [(0, PolyN([-3, 1])), (1, PolyN([1]))]
    with pytest.raises(RecurrenceError) as err:
        Recurrence(shifts, valid_from=1)
    assert err.value.n == 3
    rec = Recurrence(shifts, valid_from=1, horizon=2)
    with pytest.raises(RecurrenceError):
        solve(rec, [1], 5)
    assert Recurrence(shifts).valid_from == 4


def test_regularized_recurrence_solves_scaled_sequence():
    # u(n) = 1 / n! solves n u(n) - u(n - 1) = 0; n! u(n) = 1
    rec = Recurrence([(0, PolyN([0, 1])), (1, PolyN([-1]))])
    u = solve(rec, [1], 8)
    assert u[5] == Fraction(1, 120)
    assert solve(regularize_recurrence(rec), [1], 8) == [1] * 9


def test_diff_op_validation():
    with pytest.raises(InputError):
        DiffOp({(1, 0): 1})
    with pytest.raises(InputError):
        DiffOp({(-1, 1): 1})
    op = mukai_operator("V12")
    assert op.order == 3 and op.t_degree == 2
    assert DiffOp.from_polys(op.polys()) == op


def test_frobenius_solutions():
    op = mukai_operator("V12")
    A, A_tilde = frobenius_mum(op, 10)
    assert A == list(apery_pair("V12", 10).a)
    assert A_tilde[1] == 12
    log_part, plain = frobenius_residual(op, A, A_tilde)
    assert all(c == 0 for c in log_part) and all(c == 0 for c in plain)


def test_mirror_map():
    mirror = mirror_map(mukai_operator("V12"), 8)
    assert mirror.t_of_q[1] == 1 and mirror.t_of_q[2] == -12
    assert mirror.q_of_t.compose(mirror.t_of_q).coeffs == QSeries.variable(8).coeffs
    with pytest.raises(InputError):
        mirror_map(mukai_operator("V12"), 0)


def test_unknown_variety():
    with pytest.raises(InputError):
        apery_pair("V22", 5)

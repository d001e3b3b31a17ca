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
The acceptance suite behind `aperylab selftest`, collected into a pandas pass/fail matrix.
"""

import logging
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pandas as pd
from mpmath import mp

from aperylab.deresonate import ExponentSet
from aperylab.deresonate import grassmann_constant
from aperylab.deresonate import integrality_probe
from aperylab.deresonate import lefschetz_crosscheck
from aperylab.deresonate import pac_limit
from aperylab.deresonate import sine_ratio_check
from aperylab.holonomic import VARIETIES
from aperylab.holonomic import apery_binomial_oracle
from aperylab.holonomic import characteristic_root
from aperylab.holonomic import denominator_bound_check
from aperylab.holonomic import growth_root
from aperylab.modular import RATIONAL_VARIETIES
from aperylab.precision import digits_of_agreement
from aperylab.utils import AperyLabError

from ._commands import GRASSMANN_DIGITS
from ._commands import GRASSMANN_MIN_DIGITS
from ._commands import GRASSMANN_TERMS
from ._commands import cmd_grassmann
from ._commands import cmd_modular
from ._commands import cmd_monodromy
from ._commands import constants_row
from ._commands import mukai_pair
from ._commands import run_parallel
from ._commands import sequence_cache
from ._config import RunConfig

logger = logging.getLogger(__name__)

MATRIX_COLUMNS = ["suite", "case", "status", "detail"]

ORACLE_TERMS = 50
DENOMINATOR_TERMS = 60
GROWTH_INDEX = 500
GROWTH_TOLERANCE = 0.01
MODULAR_ORDER = 20
MODULAR_DIGITS = 50
SINE_CASES = [(5, Fraction(1, 8), Fraction(1, 12)), (6, Fraction(1, 10), Fraction(1, 14))]
SINE_TERMS = 400
SINE_DIGITS = 20
SINE_BOUND = 1e-15
INTEGRALITY_N = 5
INTEGRALITY_TERMS = 40
LEFSCHETZ_TERMS = 20


def _check_binomial_oracle(config):
    pair = mukai_pair("V12", ORACLE_TERMS, sequence_cache(config))
    oracle = apery_binomial_oracle(ORACLE_TERMS)
    ok = pair.a == oracle.a and pair.b == oracle.b
    return ok, f"a and b equal for n <= {ORACLE_TERMS}" if ok else "binomial sums disagree"


def _check_denominators(config):
    pair = mukai_pair("V12", DENOMINATOR_TERMS, sequence_cache(config))
    failures = [n for n in range(DENOMINATOR_TERMS + 1) if not denominator_bound_check(pair, n)]
    return not failures, f"failing n: {failures}" if failures else "12 lcm(1..n)^3 b_n integral for n <= 60"


def _check_growth(config):
    pair = mukai_pair("V12", GROWTH_INDEX, sequence_cache(config))
    alpha = characteristic_root(30)
    with mp.workdps(30):
        error = abs(growth_root(pair, GROWTH_INDEX, 30, method="ratio") - alpha) / alpha
    return error < GROWTH_TOLERANCE, f"relative error {mp.nstr(error, 3)}"


def _check_constants(variety, config):
    row = constants_row(variety, config)
    return row["status"] == "pass", f"{row['constant']}: {row['agreement_digits']} digits"


def _check_modular(variety, config):
    report = cmd_modular(variety, MODULAR_ORDER, replace(config, digits=MODULAR_DIGITS))
    statuses = ", ".join(f"{r['identity']} {r['status']}" for r in report["identities"])
    return report["status"] == "pass", f"{statuses}, L(F,3) {report['L_F_3_agreement_digits']} digits"


def _check_grassmann(N, config):
    report = cmd_grassmann(N, replace(config, digits=GRASSMANN_DIGITS, terms=GRASSMANN_TERMS))
    return report["status"] == "pass", f"{report['agreement_digits']} digits of pi^2/{N * N * (N + 1)}"


def _check_pac(N, config):
    limit = pac_limit(N, GRASSMANN_DIGITS)
    with mp.workdps(GRASSMANN_DIGITS + 10):
        digits = digits_of_agreement(limit.value, grassmann_constant(N, GRASSMANN_DIGITS + 10))
    return digits >= GRASSMANN_MIN_DIGITS, f"{digits} digits at k={limit.n_used}"


def _check_sine_ratio(N, e, u, config):
    report = sine_ratio_check(ExponentSet(N, e, u), SINE_TERMS, SINE_DIGITS)
    bound = report.limit.error_estimate
    ok = report.passed and bound <= SINE_BOUND
    return ok, f"{report.agreement_digits} digits, error bound {mp.nstr(bound, 3)}"


def _check_integrality(config):
    report = integrality_probe(INTEGRALITY_N, INTEGRALITY_TERMS, 30)
    return report.passed and report.max_residual < 1e-10, f"max residual {mp.nstr(report.max_residual, 3)}"


def _check_lefschetz(variety, config):
    report = lefschetz_crosscheck(variety, LEFSCHETZ_TERMS, 30)
    return report.passed, f"lambda={report.lam}, C_b/C_a={report.to_dict()['C_b_over_C_a'][:12]}"


def _check_monodromy(N, e, u, config):
    report = cmd_monodromy(N, e, u, config)
    return report["status"] == "pass", f"e={report['e']}, u={report['u']}"


def _run_check(suite, case, func, args) -> dict:
    try:
        ok, detail = func(*args)
        status = "pass" if ok else "fail"
    except AperyLabError as err:
        ok, status, detail = False, "error", err.message
    if not ok:
        logger.warning("selftest %s/%s: %s (%s)", suite, case, status, detail)
    return {"suite": suite, "case": case, "status": status, "detail": detail}


def selftest_plan(config: RunConfig, quick: bool = False) -> list:
    """(suite, case, func, args) for every acceptance check; `quick` leaves out the deresonation suites."""
    sequential = replace(config, num_workers=1)
    plan = [
        ("recurrence", "V12 binomial sums", _check_binomial_oracle, (sequential, )),
        ("denominators", "V12", _check_denominators, (sequential, )),
        ("growth", f"V12 n={GROWTH_INDEX}", _check_growth, (sequential, )),
    ]
    plan += [("constants", v, _check_constants, (v, sequential)) for v in VARIETIES]
    plan += [("modular", v, _check_modular, (v, sequential)) for v in RATIONAL_VARIETIES]
    rng = np.random.default_rng(config.seed)
    seeds = [int(s) for s in rng.integers(0, 2**31, size=2)]
    plan += [("monodromy", f"N={N} e={e} u={u}", _check_monodromy, (N, e, u, sequential)) for N, e, u in SINE_CASES]
    plan += [("monodromy", f"N=7 seed={s}", _check_monodromy, (7, None, None, replace(sequential, seed=s)))
             for s in seeds]
    if not quick:
        plan += [("sine_ratio", f"N={N} e={e} u={u}", _check_sine_ratio, (N, e, u, sequential))
                 for N, e, u in SINE_CASES]
        plan += [("grassmann", f"N={N}", _check_grassmann, (N, sequential)) for N in (5, 6, 7)]
        plan += [("pac_limit", f"N={N}", _check_pac, (N, sequential)) for N in (5, 6)]
        plan += [("integrality", f"N={INTEGRALITY_N} n<={INTEGRALITY_TERMS}", _check_integrality, (sequential, ))]
        plan += [("lefschetz", v, _check_lefschetz, (v, sequential)) for v in ("V10", "V14")]
    return plan


def cmd_selftest(config: RunConfig, quick: bool = False) -> dict:
    """
    Run the acceptance checks, in parallel over `config.num_workers` processes, and tabulate them.

    Returns
    -------
    dict
        {"command", "matrix", "status"}; "matrix" is a list of {suite, case, status, detail} records
    """
    plan = selftest_plan(config, quick)
    rows = run_parallel(_run_check, plan, config.num_workers)
    matrix = pd.DataFrame(rows, columns=MATRIX_COLUMNS)
    summary = matrix.groupby("suite", sort=False)["status"].apply(lambda s: (s == "pass").all())
    logger.info("selftest: %d of %d checks pass", int((matrix["status"] == "pass").sum()), len(matrix))
    return {
        "command": "selftest",
        "matrix": matrix.to_dict(orient="records"),
        "suites": {suite: "pass" if ok else "fail" for suite, ok in summary.items()},
        "status": "pass" if (matrix["status"] == "pass").all() else "fail",
    }

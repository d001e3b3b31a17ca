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
The work behind each `aperylab` sub-command. Every command returns a JSON-ready report dict whose "status" is "pass"
or "fail"; rendering and exit codes are left to the click layer.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterable
from typing import List

import dask
import numpy as np
from mpmath import mp

from aperylab.deresonate import ExponentSet
from aperylab.deresonate import grassmann_constant
from aperylab.deresonate import grassmann_pair
from aperylab.deresonate import pac_limit
from aperylab.holonomic import A_INITIAL
from aperylab.holonomic import B_INITIAL
from aperylab.holonomic import B_VALID_FROM
from aperylab.holonomic import VARIETIES
from aperylab.holonomic import Normalization
from aperylab.holonomic import SeqPair
from aperylab.holonomic import apery_limit
from aperylab.holonomic import apery_pair
from aperylab.holonomic import check_variety
from aperylab.holonomic import irrationality_delta
from aperylab.holonomic import is_apery_recurrence
from aperylab.holonomic import mukai_operator
from aperylab.holonomic import normalization_block
from aperylab.holonomic import op_to_recurrence
from aperylab.holonomic import recurrence_from_json
from aperylab.holonomic import recurrence_to_json
from aperylab.holonomic import solve
from aperylab.modular import L_F_3
from aperylab.modular import apery_constant
from aperylab.modular import check_rational_variety
from aperylab.modular import describe_apery_constant
from aperylab.modular import verify_phi_identity
from aperylab.modular import verify_ratio_identity
from aperylab.monodromy import gram_matrix
from aperylab.monodromy import infinity_monodromy_eigencheck
from aperylab.monodromy import perturbed_alphas
from aperylab.monodromy import wedge_coefficient_identity
from aperylab.precision import digits_of_agreement
from aperylab.precision import rational_to_str
from aperylab.precision import real_to_json
from aperylab.precision import to_rational
from aperylab.utils import ConvergenceError
from aperylab.utils import InputError
from aperylab.utils import PrecisionBudgetError
from aperylab.utils import VerificationError

from ._cache import CacheKey
from ._cache import SequenceCache
from ._config import RunConfig

logger = logging.getLogger(__name__)

GRASSMANN_DIGITS = 30
GRASSMANN_TERMS = 40
GRASSMANN_MIN_DIGITS = 20

# digits given up to the extrapolation when judging agreement with an oracle
AGREEMENT_SLACK = 10


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def sequence_cache(config: RunConfig) -> SequenceCache:
    return SequenceCache(config.cache_dir)


def run_parallel(func, arg_lists: List[tuple], num_workers: int) -> list:
    """func(*args) for each entry, spread over processes when there is more than one job and worker."""
    if num_workers <= 1 or len(arg_lists) <= 1:
        return [func(*args) for args in arg_lists]
    tasks = [dask.delayed(func)(*args) for args in arg_lists]
    return list(dask.compute(*tasks, scheduler="processes", num_workers=min(num_workers, len(tasks))))


def mukai_pair(variety: str, n_max: int, cache: SequenceCache) -> SeqPair:
    return cache.get_or_compute(CacheKey("mukai", variety, n_max), lambda: apery_pair(variety, n_max))


def constants_row(variety: str, config: RunConfig) -> dict:
    pair = mukai_pair(variety, config.terms, sequence_cache(config))
    limit = apery_limit(pair, config.digits)
    oracle = apery_constant(variety, config.digits + AGREEMENT_SLACK)
    with mp.workdps(config.digits + AGREEMENT_SLACK):
        agreement = min(digits_of_agreement(limit.value, oracle), config.digits)
    row = {
        "variety": variety,
        "constant": describe_apery_constant(variety),
        "limit": limit.to_dict(),
        "oracle": real_to_json(oracle, config.digits),
        "agreement_digits": agreement,
        "status": _status(agreement >= config.digits - AGREEMENT_SLACK),
    }
    if variety == "V12":
        row["irrationality_delta"] = mp.nstr(irrationality_delta(20), 15)
    logger.info("%s: limit agrees with %s to %d digits", variety, row["constant"], agreement)
    return row


def cmd_constants(varieties: Iterable[str], config: RunConfig) -> dict:
    """
    Apery limit of each variety next to its tabulated constant.

    Parameters
    ----------
    varieties: Iterable[str]
        Labels from V10..V18, or ["all"]
    config: RunConfig
        digits and terms of the run

    Returns
    -------
    dict
        {"command", "digits", "terms", "rows", "status"}, one row per variety
    """
    varieties = list(varieties)
    if not varieties or "all" in varieties:
        varieties = list(VARIETIES)
    for variety in varieties:
        check_variety(variety)
    rows = run_parallel(constants_row, [(v, config) for v in varieties], config.num_workers)
    return {
        "command": "constants",
        "digits": config.digits,
        "terms": config.terms,
        "rows": rows,
        "status": _status(all(row["status"] == "pass" for row in rows)),
    }


def _read_recurrence(recurrence_file):
    path = Path(recurrence_file)
    try:
        text = path.read_text()
    except OSError as err:
        raise InputError(f"cannot read recurrence file {path}: {err}") from err
    rec, normalization = recurrence_from_json(text)
    if normalization is None:
        raise InputError(f"{path} has no normalization block; a_initial, b_initial and b_valid_from are required")
    return path, rec, normalization


def cmd_limit(recurrence_file, config: RunConfig) -> dict:
    """
    Solve the recurrence stored in `recurrence_file` for a and b and report lim b_n / a_n.

    The status is "pass" only when the limit is certified to `config.digits` digits; a sequence that does not
    settle, or settles to fewer digits, is reported as "fail" with the reason.
    """
    path, rec, normalization = _read_recurrence(recurrence_file)
    a = solve(rec, normalization["a_initial"], config.terms)
    b = solve(rec.with_valid_from(normalization["b_valid_from"]), normalization["b_initial"], config.terms)
    pair = SeqPair(a, b, path.stem, Normalization(a[0], 1, b[1]))
    report = {
        "command": "limit",
        "file": path.name,
        "order": rec.order,
        "apery_recurrence": is_apery_recurrence(rec),
        "terms": config.terms,
    }
    try:
        limit = apery_limit(pair, config.digits)
    except (ConvergenceError, PrecisionBudgetError) as err:
        logger.warning("%s: no certified limit: %s", path.name, err)
        report.update({"limit": None, "reason": str(err), "status": _status(False)})
        return report
    with mp.workdps(config.digits + AGREEMENT_SLACK):
        certified = limit.error_estimate <= mp.mpf(10)**(-config.digits) * max(abs(limit.value), 1)
    report["limit"] = limit.to_dict()
    if not certified:
        report["reason"] = f"error estimate {mp.nstr(limit.error_estimate, 5)} exceeds 10^-{config.digits}"
    report["status"] = _status(bool(certified))
    return report


def cmd_export(variety: str) -> str:
    """The quantum recurrence of `variety` as Recurrence JSON, with the normalization used for a and b."""
    check_variety(variety)
    rec = op_to_recurrence(mukai_operator(variety))
    return recurrence_to_json(rec, normalization_block(A_INITIAL, B_INITIAL, B_VALID_FROM))


def cmd_grassmann(N: int, config: RunConfig, with_pac: bool = False) -> dict:
    """
    lim b_{Nn} / a_{Nn} for G(2, N) from `config.terms` deresonated coefficients, against pi^2 / (N^2 (N + 1)).

    With `with_pac` the limit of the perturbed Apery constant is reported as a second route.
    """
    prec = config.digits + AGREEMENT_SLACK
    label = f"G(2,{N})"
    key = CacheKey("grassmann", label, config.terms, prec)
    pair = sequence_cache(config).get_or_compute(key, lambda: grassmann_pair(N, config.terms, prec))
    limit = apery_limit(pair, config.digits)
    expected = grassmann_constant(N, prec)
    needed = min(GRASSMANN_MIN_DIGITS, config.digits - AGREEMENT_SLACK)
    with mp.workdps(prec):
        agreement = min(digits_of_agreement(limit.value, expected), config.digits)
    report = {
        "command": "grassmann",
        "N": N,
        "terms": config.terms,
        "limit": limit.to_dict(),
        "expected": real_to_json(expected, config.digits),
        "agreement_digits": agreement,
    }
    ok = agreement >= needed
    if with_pac:
        pac = pac_limit(N, config.digits)
        with mp.workdps(prec):
            pac_agreement = min(digits_of_agreement(pac.value, expected), config.digits)
        report["pac_limit"] = pac.to_dict()
        report["pac_agreement_digits"] = pac_agreement
        ok = ok and pac_agreement >= needed
    report["status"] = _status(ok)
    logger.info("%s: Apery limit agrees with pi^2/%d to %d digits", label, N * N * (N + 1), agreement)
    return report


def cmd_modular(variety: str, order: int, config: RunConfig) -> dict:
    """Both coefficientwise identities through q^order and L(F, 3) against the tabulated constant."""
    check_rational_variety(variety)
    if order < 1:
        raise InputError(f"order must be at least 1, got {order}")
    identities = [verify_phi_identity(variety, order), verify_ratio_identity(variety, order)]
    prec = config.digits + AGREEMENT_SLACK
    with mp.workdps(prec):
        l_value = L_F_3(variety, prec)
        agreement = min(digits_of_agreement(l_value, apery_constant(variety, prec)), config.digits)
    ok = all(report.passed for report in identities) and agreement >= config.digits - AGREEMENT_SLACK
    return {
        "command": "modular",
        "variety": variety,
        "order": order,
        "identities": [report.to_dict() for report in identities],
        "L_F_3": real_to_json(l_value, config.digits),
        "L_F_3_agreement_digits": agreement,
        "status": _status(ok),
    }


def random_perturbation(rng: np.random.Generator):
    """A non-resonant pair (e, u) with small denominators, drawn from `rng`."""
    while True:
        p, q = (int(x) for x in rng.integers(5, 40, size=2))
        e, u = Fraction(1, p), Fraction(1, q) * (1 if rng.random() < 0.5 else -1)
        if abs(e) != abs(u):
            return e, u


def cmd_monodromy(N: int, e, u, config: RunConfig) -> dict:
    """
    Eigenvector check of the reflection product and the wedge coefficient identity for exponents 1/2 -+ e, 1/2 -+ u,
    1/2 (N - 4 times). Missing e or u are drawn from numpy's generator seeded with `config.seed`.
    """
    if e is None or u is None:
        e, u = random_perturbation(np.random.default_rng(config.seed))
    exps = ExponentSet(N, to_rational(e), to_rational(u))
    frame = gram_matrix(perturbed_alphas(N, exps.e, exps.u), config.digits)
    checks = []
    try:
        checks.append(infinity_monodromy_eigencheck(frame).to_dict())
    except VerificationError as err:
        checks.append({"check": "infinity_eigencheck", "status": "fail", "message": err.message})
    checks.append(wedge_coefficient_identity(frame, exps.e, exps.u).to_dict())
    return {
        "command": "monodromy",
        "N": N,
        "e": rational_to_str(exps.e),
        "u": rational_to_str(exps.u),
        "checks": checks,
        "status": _status(all(check["status"] == "pass" for check in checks)),
    }


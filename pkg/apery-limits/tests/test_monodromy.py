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

import numpy as np
import pytest
from mpmath import mp
from mpmath import mpf

from aperylab.monodromy import candidate_orderings
from aperylab.monodromy import eigenvectors
from aperylab.monodromy import gram_matrix
from aperylab.monodromy import h_expansion
from aperylab.monodromy import infinity_monodromy_eigencheck
from aperylab.monodromy import monodromy_product
from aperylab.monodromy import perturbed_alphas
from aperylab.monodromy import reflection
from aperylab.monodromy import seifert_form
from aperylab.monodromy import unit_root
from aperylab.monodromy import wedge_coefficient_identity
from aperylab.monodromy import wedge_frame
from aperylab.monodromy import wedge_of
from aperylab.precision import to_mpf
from aperylab.utils import InputError
from aperylab.utils import VerificationError

CASES = [(5, Fraction(1, 8), Fraction(1, 12)), (6, Fraction(1, 10), Fraction(1, 14))]


def _close(x, y, digits=25):
    return mp.mnorm(x - y, 1) < mpf(10)**(-digits)


def test_h_expansion_of_half_exponents():
    c = h_expansion([Fraction(1, 2)] * 4, 4, 4, 30)
    with mp.workdps(30):
        assert [mp.nint(x) for x in c] == [1, -4, 10, -20, 34]


def test_h_expansion_needs_symmetric_exponents():
    with pytest.raises(VerificationError):
        h_expansion([Fraction(1, 3), Fraction(1, 2)], 2, 3, 30)
    with pytest.raises(InputError):
        h_expansion([Fraction(1, 2)] * 3, 4, 3, 30)


def test_gram_and_seifert_forms():
    frame = gram_matrix(perturbed_alphas(5, "1/8", "1/12"), 30)
    S = seifert_form(frame)
    with mp.workdps(frame.dps):
        assert _close(S + S.T, frame.G)
        assert all(frame.G[i, i] == 2 for i in range(5))
        assert _close(frame.G, frame.G.T)


def test_reflections_are_isometric_involutions():
    frame = gram_matrix(perturbed_alphas(6, "1/10", "1/14"), 30)
    with mp.workdps(frame.dps):
        for j in range(1, 7):
            R = reflection(frame, j)
            assert _close(R * R, mp.eye(6))
            assert _close(R.T * frame.G * R, frame.G)
    with pytest.raises(InputError):
        reflection(frame, 7)


def test_candidate_orderings():
    assert candidate_orderings(2) == [(1, 2), (2, 1)]
    orderings = candidate_orderings(4)
    assert orderings[0] == (1, 2, 3, 4)
    assert (4, 3, 2, 1) in orderings and (2, 3, 4, 1) in orderings
    assert len(orderings) == 8


def test_monodromy_product_validates_ordering():
    frame = gram_matrix(perturbed_alphas(5, "1/8", "1/12"), 30)
    with pytest.raises(InputError):
        monodromy_product(frame, (1, 2, 3, 4))


def test_rank_two_eigenvectors():
    frame = gram_matrix([Fraction(3, 8), Fraction(5, 8)], 30)
    report = infinity_monodromy_eigencheck(frame)
    assert report.passed
    assert report.ordering == (1, 2)
    with mp.workdps(frame.dps):
        M = monodromy_product(frame, (1, 2))
        for alpha, e in zip(frame.alphas, eigenvectors(frame)):
            assert _close(M * e, unit_root(2 * alpha) * e)


@pytest.mark.parametrize("N, e, u", CASES + [(7, Fraction(1, 9), Fraction(-1, 20))])
def test_infinity_monodromy_eigencheck(N, e, u):
    frame = gram_matrix(perturbed_alphas(N, e, u), 40)
    report = infinity_monodromy_eigencheck(frame)
    assert report.passed
    payload = report.to_dict()
    assert payload["ordering"] == list(report.ordering)
    assert len(payload["eigenvalues"]) == N


def test_eigencheck_reports_failure():
    frame = gram_matrix(perturbed_alphas(5, "1/8", "1/12"), 40)
    wrong = [(1, 3, 2, 5, 4)]
    with pytest.raises(VerificationError):
        infinity_monodromy_eigencheck(frame, orderings=wrong)


def test_wedge_frame_dimensions():
    frame = gram_matrix(perturbed_alphas(5, "1/8", "1/12"), 30)
    wedge = wedge_frame(frame)
    assert wedge.dimension == 10
    assert wedge.pairs[0] == (0, 1)
    with mp.workdps(frame.dps):
        # [V_12, V_12) = S_11 S_22 - S_12 S_21 = 1
        assert abs(wedge.form[0, 0] - 1) < mpf(10)**-25


@pytest.mark.parametrize("N, e, u", CASES)
def test_wedge_coefficient_identity(N, e, u):
    frame = gram_matrix(perturbed_alphas(N, e, u), 40)
    report = wedge_coefficient_identity(frame, e, u)
    assert report.passed, report.to_dict()
    with mp.workdps(40):
        expected = mp.sin(2 * mp.pi * to_mpf(e)) / mp.sin(2 * mp.pi * to_mpf(u))
        assert abs(mpf(report.details["kappa_ratio"]) - expected) < mpf(10)**-12


def test_wedge_identity_checks_exponents():
    frame = gram_matrix(perturbed_alphas(5, "1/8", "1/12"), 30)
    with pytest.raises(InputError):
        wedge_coefficient_identity(frame, "1/12", "1/8")
    with pytest.raises(InputError):
        perturbed_alphas(3, "1/8", "1/12")


def _random_perturbations(seed, count=10, denominator=600):
    """Pairs (e, u) with 1/50 <= |e|, |u| < 1/4 and ||e| - |u|| >= 1/50."""
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        e, u = (Fraction(int(k), denominator) for k in rng.integers(12, 150, size=2) * rng.choice([-1, 1], size=2))
        if abs(abs(e) - abs(u)) >= Fraction(1, 50):
            pairs.append((e, u))
    return pairs


RANDOM_CASES = [(N, e, u) for N, seed in ((5, 2023), (6, 2024)) for e, u in _random_perturbations(seed)]


@pytest.mark.parametrize("N, e, u", RANDOM_CASES)
def test_wedge_coefficient_identity_random(N, e, u):
    frame = gram_matrix(perturbed_alphas(N, e, u), 40)
    report = wedge_coefficient_identity(frame, e, u)
    assert report.passed, report.to_dict()
    assert len(report.residuals) == 3


@pytest.mark.parametrize("N, e, u", RANDOM_CASES)
def test_infinity_monodromy_eigencheck_random(N, e, u):
    frame = gram_matrix(perturbed_alphas(N, e, u), 40)
    report = infinity_monodromy_eigencheck(frame)
    assert report.passed
    assert max(report.residuals) < mpf(10)**-25


def test_wedge_form_maps_duals_to_eigenvector_wedges():
    frame = gram_matrix(perturbed_alphas(6, "1/10", "1/14"), 30)
    wedge = wedge_frame(frame)
    vectors = eigenvectors(frame)
    with mp.workdps(frame.dps):
        for j, k in wedge.pairs[:5]:
            assert _close(wedge.primal((j, k)), wedge_of(vectors[j], vectors[k], wedge.pairs), 20)

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

import logging
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from itertools import combinations
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from mpmath import mp
from mpmath import mpf

from aperylab.precision import rational_to_str
from aperylab.precision import to_mpf
from aperylab.precision import to_rational
from aperylab.utils import InputError
from aperylab.utils import VerificationError

from ._frame import HypFrame
from ._frame import candidate_orderings
from ._frame import monodromy_product
from ._frame import seifert_form
from ._frame import unit_root

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class MonodromyReport:
    """Outcome of one monodromy check, serialized as {N, e, u, ordering, residuals, status}."""
    N: int
    check: str
    residuals: List[mpf]
    status: str
    e: Optional[Fraction] = None
    u: Optional[Fraction] = None
    ordering: Optional[Tuple[int, ...]] = None
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "check": self.check,
            "e": None if self.e is None else rational_to_str(self.e),
            "u": None if self.u is None else rational_to_str(self.u),
            "ordering": None if self.ordering is None else list(self.ordering),
            "residuals": [mp.nstr(r, 5) for r in self.residuals],
            "status": self.status,
            **self.details,
        }


def vandermonde_vectors(frame: HypFrame) -> List[object]:
    """w_i = (z_i, z_i^2, ..., z_i^N) with z_i = exp(2 pi i alpha_i): the pairings (e_i, v_k)."""
    with mp.workdps(frame.dps):
        vectors = []
        for alpha in frame.alphas:
            z = unit_root(alpha)
            vectors.append(mp.matrix([z**k for k in range(1, frame.N + 1)]))
    return vectors


def eigenvectors(frame: HypFrame) -> List[object]:
    """
    e_i = S^-1 w_i in the coordinates of v_1..v_N.

    Where the Gram matrix is invertible this is G^-1 w_i up to the factor 1 - z_i^N, i.e. the vector whose pairings
    with the v_k are the z_i^k. For even N the exponent 1/2 makes G singular, while S is always unitriangular.
    """
    S = seifert_form(frame)
    with mp.workdps(frame.dps):
        return [mp.lu_solve(S, w) for w in vandermonde_vectors(frame)]


def _hermitian(x, y):
    return mp.fsum(mp.conj(x[k]) * y[k] for k in range(x.rows))


def _eigen_residuals(M, vectors) -> Tuple[List[mpf], list]:
    residuals, eigenvalues = [], []
    for e in vectors:
        image = M * e
        lam = _hermitian(e, image) / _hermitian(e, e)
        residuals.append(mp.norm(image - lam * e) / mp.norm(e))
        eigenvalues.append(lam)
    return residuals, eigenvalues


def infinity_monodromy_eigencheck(frame: HypFrame, P: int = None, orderings=None) -> MonodromyReport:
    """
    Find an ordering of the reflections whose product has the Vandermonde vectors e_i as eigenvectors.

    Each ordering in `orderings` (cyclic rotations of 1..N and their reversals by default) is tried in turn; the first
    whose residuals ||M e_i - lambda_i e_i|| / ||e_i|| all fall below 10^-(P - 15) is reported, with lambda_i the
    Rayleigh quotient next to exp(2 pi i N alpha_i).

    Raises
    ------
    VerificationError
        If no ordering qualifies
    """
    P = frame.prec if P is None else P
    tolerance = mpf(10)**(-(P - 15))
    vectors = eigenvectors(frame)
    best = None
    with mp.workdps(frame.dps):
        for ordering in orderings or candidate_orderings(frame.N):
            M = monodromy_product(frame, ordering)
            residuals, eigenvalues = _eigen_residuals(M, vectors)
            worst = max(residuals)
            if best is None or worst < best[0]:
                best = (worst, ordering)
            if worst < tolerance:
                expected = [unit_root(frame.N * alpha) for alpha in frame.alphas]
                logger.info("M_inf eigencheck N=%d: ordering %s, worst residual %s", frame.N, ordering,
                            mp.nstr(worst, 5))
                details = {
                    "eigenvalues": [mp.nstr(lam, 12) for lam in eigenvalues],
                    "expected_eigenvalues": [mp.nstr(z, 12) for z in expected],
                }
                return MonodromyReport(frame.N, "infinity_eigencheck", residuals, "pass", ordering=ordering,
                                       details=details)
    raise VerificationError(f"no reflection ordering diagonalizes the Vandermonde vectors for N={frame.N}; "
                            f"best residual {mp.nstr(best[0], 5)} with ordering {best[1]}")


@dataclass(frozen=True)
class WedgeFrame:
    """
    The second exterior power: basis V_ij = v_i ^ v_j (i < j, 0-based pairs), the form
    [V_ij, V_kl) = S_ik S_jl - S_il S_jk built from the Seifert form, and the eigenvector wedges E_jk = e_j ^ e_k in
    dual coordinates (their pairings with the V_ab).
    """
    N: int
    pairs: Tuple[Tuple[int, int], ...]
    form: object
    eigen: Dict[Tuple[int, int], list]

    @property
    def dimension(self) -> int:
        return len(self.pairs)

    def component(self, jk: Tuple[int, int], ab: Tuple[int, int]):
        """Coefficient of E_jk at V^_ab."""
        return self.eigen[jk][self.pairs.index(ab)]

    def primal(self, jk: Tuple[int, int]):
        """E_jk in the V_ab basis: the solution x of form x = (dual coordinates of E_jk)."""
        return mp.lu_solve(self.form, mp.matrix(self.eigen[jk]))


def wedge_of(x, y, pairs) -> object:
    """Coordinates of x ^ y in the V_ab basis."""
    return mp.matrix([x[a] * y[b] - x[b] * y[a] for a, b in pairs])


def wedge_frame(frame: HypFrame) -> WedgeFrame:
    pairs = tuple(combinations(range(frame.N), 2))
    S = seifert_form(frame)
    duals = vandermonde_vectors(frame)
    with mp.workdps(frame.dps):
        form = mp.matrix(len(pairs), len(pairs))
        for p, (i, j) in enumerate(pairs):
            for q, (k, l) in enumerate(pairs):
                form[p, q] = S[i, k] * S[j, l] - S[i, l] * S[j, k]
        eigen = {}
        for j, k in pairs:
            y1, y2 = duals[j], duals[k]
            eigen[(j, k)] = [y1[a] * y2[b] - y1[b] * y2[a] for a, b in pairs]
    return WedgeFrame(frame.N, pairs, form, eigen)


def wedge_coefficient_identity(frame: HypFrame, e, u, P: int = None) -> MonodromyReport:
    """
    The V^_12 components kappa_12 of E_12 and kappa_34 of E_34 satisfy kappa_12 / kappa_34 = sin(2 pi e) / sin(2 pi u),
    so sin(2 pi u) E_12 - sin(2 pi e) E_34 has no V^_12 component.

    The first four exponents of the frame must be 1/2 - e, 1/2 + e, 1/2 - u, 1/2 + u. E_12 and E_34 are also mapped
    back through the wedge form and compared with e_1 ^ e_2 and e_3 ^ e_4 built from the eigenvectors directly.
    """
    e, u = to_rational(e), to_rational(u)
    if list(frame.alphas[:4]) != [HALF - e, HALF + e, HALF - u, HALF + u]:
        raise InputError(f"frame exponents {frame.alphas[:4]} do not start with 1/2 -+ e, 1/2 -+ u")
    if e == u or e == -u or e == 0 or u == 0:
        raise InputError(f"degenerate perturbation e={e}, u={u}")
    P = frame.prec if P is None else P
    tolerance = mpf(10)**(-(P - 10))
    wedge = wedge_frame(frame)
    vectors = eigenvectors(frame)
    with mp.workdps(frame.dps):
        kappa_12 = wedge.component((0, 1), (0, 1))
        kappa_34 = wedge.component((2, 3), (0, 1))
        s_e = mp.sin(2 * mp.pi * to_mpf(e))
        s_u = mp.sin(2 * mp.pi * to_mpf(u))
        ratio_residual = abs(kappa_12 / kappa_34 - s_e / s_u)
        combination = abs(s_u * kappa_12 - s_e * kappa_34)
        frame_residual = mpf(0)
        for j, k in ((0, 1), (2, 3)):
            direct = wedge_of(vectors[j], vectors[k], wedge.pairs)
            frame_residual = max(frame_residual, mp.norm(wedge.primal((j, k)) - direct) / mp.norm(direct))
    residuals = [ratio_residual, combination, frame_residual]
    status = "pass" if max(residuals) < tolerance else "fail"
    logger.info("wedge identity N=%d e=%s u=%s: %s", frame.N, e, u, status)
    return MonodromyReport(frame.N, "wedge_coefficient_identity", residuals, status, e=e, u=u,
                           details={"kappa_ratio": mp.nstr((kappa_12 / kappa_34).real, 15)})


def perturbed_alphas(N: int, e, u) -> List[Fraction]:
    """1/2 - e, 1/2 + e, 1/2 - u, 1/2 + u followed by N - 4 copies of 1/2."""
    e, u = to_rational(e), to_rational(u)
    if N < 4:
        raise InputError(f"N must be at least 4, got {N}")
    return [HALF - e, HALF + e, HALF - u, HALF + u] + [HALF] * (N - 4)

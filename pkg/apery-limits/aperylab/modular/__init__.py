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

from ._eisenstein import F_COMBINATIONS
from ._eisenstein import PHI_COMBINATIONS
from ._eisenstein import RATIONAL_VARIETIES
from ._eisenstein import check_rational_variety
from ._eisenstein import eisenstein_E2
from ._eisenstein import eisenstein_E4
from ._eisenstein import f_form
from ._eisenstein import f_primitive
from ._eisenstein import legendre3
from ._eisenstein import phi_form
from ._eisenstein import sigma_k
from ._lfunctions import APERY_CONSTANTS
from ._lfunctions import L_F
from ._lfunctions import L_F_3
from ._lfunctions import apery_constant
from ._lfunctions import describe_apery_constant
from ._lfunctions import euler_factor
from ._verify import IdentityReport
from ._verify import verify_phi_identity
from ._verify import verify_ratio_identity

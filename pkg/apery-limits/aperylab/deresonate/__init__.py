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

from ._constants import SineRatioReport
from ._constants import grassmann_constant
from ._constants import pac_limit
from ._constants import perturbed_apery_constant
from ._constants import sine_ratio
from ._constants import sine_ratio_check
from ._constants import wronskian_pair
from ._exponents import ExponentSet
from ._grassmann import LEFSCHETZ_PARTNERS
from ._grassmann import IntegralityReport
from ._grassmann import LefschetzReport
from ._grassmann import grassmann_apery_limit
from ._grassmann import grassmann_pair
from ._grassmann import integrality_probe
from ._grassmann import lefschetz_crosscheck
from ._grassmann import lefschetz_weight
from ._series import PerturbedSeries
from ._series import WronskianSeries
from ._series import cancellation_digits
from ._series import gamma_product
from ._series import operator_residual
from ._series import perturbed_series
from ._series import wronskian

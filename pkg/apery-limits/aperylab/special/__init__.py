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

from ._gamma import gamma_real
from ._gamma import log_gamma_one_minus
from ._zeta import CHI3_L_AT_ZERO
from ._zeta import ZETA_AT_ZERO
from ._zeta import LValueRequest
from ._zeta import chi3_L
from ._zeta import hurwitz_zeta
from ._zeta import zeta_int

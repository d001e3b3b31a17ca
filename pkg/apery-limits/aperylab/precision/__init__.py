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

from ._combinatorics import bernoulli
from ._combinatorics import binomial
from ._combinatorics import lcm_range
from ._constants import euler_gamma
from ._constants import pi
from ._numbers import Rational
from ._numbers import certify
from ._numbers import digits_of_agreement
from ._numbers import guard_digits
from ._numbers import rational_from_str
from ._numbers import rational_to_str
from ._numbers import real_from_json
from ._numbers import real_to_json
from ._numbers import to_mpf
from ._numbers import to_rational
from ._poly import PolyN
from ._poly import eval_poly
from ._series import QSeries

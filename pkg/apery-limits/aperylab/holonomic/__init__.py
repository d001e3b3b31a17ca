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

from ._frobenius import MirrorMap
from ._frobenius import frobenius_mum
from ._frobenius import frobenius_residual
from ._frobenius import mirror_map
from ._limits import ApproxLimit
from ._limits import LimitMethod
from ._limits import apery_limit
from ._limits import extrapolate_limit
from ._limits import ratio_sequence
from ._operators import VARIETIES
from ._operators import DiffOp
from ._operators import apply_log_operator
from ._operators import apply_operator
from ._operators import check_variety
from ._operators import compose_d_minus
from ._operators import mukai_operator
from ._recurrence import Recurrence
from ._recurrence import normalization_block
from ._recurrence import op_to_recurrence
from ._recurrence import recurrence_from_json
from ._recurrence import recurrence_to_dict
from ._recurrence import recurrence_to_json
from ._recurrence import regularize_recurrence
from ._recurrence import solve
from ._sequences import A_INITIAL
from ._sequences import B_INITIAL
from ._sequences import B_VALID_FROM
from ._sequences import Normalization
from ._sequences import SeqPair
from ._sequences import apery_binomial_oracle
from ._sequences import apery_pair
from ._sequences import apery_tail
from ._sequences import characteristic_root
from ._sequences import denominator_bound_check
from ._sequences import growth_root
from ._sequences import irrationality_delta
from ._sequences import is_apery_recurrence

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

from ._frame import HypFrame
from ._frame import candidate_orderings
from ._frame import gram_matrix
from ._frame import h_expansion
from ._frame import monodromy_product
from ._frame import reflection
from ._frame import seifert_form
from ._frame import unit_root
from ._wedge import MonodromyReport
from ._wedge import WedgeFrame
from ._wedge import eigenvectors
from ._wedge import infinity_monodromy_eigencheck
from ._wedge import perturbed_alphas
from ._wedge import vandermonde_vectors
from ._wedge import wedge_coefficient_identity
from ._wedge import wedge_frame
from ._wedge import wedge_of

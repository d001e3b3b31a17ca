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


class AperyLabError(Exception):
    """
    Base class for all errors raised by aperylab.

    Attributes:
        message -- explanation of the error
        exit_code -- process exit status the command line reports for this error
    """
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class InputError(AperyLabError):
    """
    Exception raised for errors in the input: unknown labels, malformed files, violated preconditions.
    """
    exit_code = 2


class RecurrenceError(InputError):
    """
    Raised when the leading polynomial of a recurrence vanishes at the index being solved for.

    Attributes:
        n -- the index at which the leading polynomial is zero
    """
    def __init__(self, message, n):
        super().__init__(message)
        self.n = n


class ResonanceError(InputError):
    """
    Raised for resonant or degenerate exponent sets.
    """
    pass


class VerificationError(AperyLabError):
    """
    Raised when a computed quantity contradicts an exact expectation (integrality, tripwires).
    """
    exit_code = 1


class ConvergenceError(AperyLabError):
    """
    Raised when a limit estimate does not converge within the available terms.
    """
    exit_code = 3


class PrecisionBudgetError(AperyLabError):
    """
    Raised when two evaluations at different working precisions disagree, or when a precision ladder runs out.
    """
    exit_code = 3

# Copyright 2026 The ffactor Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Perfect f-factors: obstruction ranks, augmenting trails, prefix streaming."""

import json

from ._ffactor import (
    DEFAULT_SEED,
    BudgetExceeded,
    CapacityUnderflow,
    ChooserFailure,
    ClassCViolation,
    DeclarationViolated,
    FFactorError,
    InfiniteCapacityUnsupported,
    InternalHereditaryFailure,
    MalformedEdge,
    NoSuchEdge,
    NotAFactor,
    NotAugmenting,
    NotDeficient,
    ParseError,
    Problem,
    PropertyDoesNotHold,
    bruteforce,
    check_property,
    family_names,
    find_augmenting_trail,
    hereditary_step,
    rank,
    run_suite,
    solve,
    to_dot,
)
from . import _ffactor

__all__ = [
    "DEFAULT_SEED",
    "BudgetExceeded",
    "CapacityUnderflow",
    "ChooserFailure",
    "ClassCViolation",
    "DeclarationViolated",
    "FFactorError",
    "InfiniteCapacityUnsupported",
    "InternalHereditaryFailure",
    "MalformedEdge",
    "NoSuchEdge",
    "NotAFactor",
    "NotAugmenting",
    "NotDeficient",
    "ParseError",
    "Problem",
    "PropertyDoesNotHold",
    "bruteforce",
    "check_property",
    "family_names",
    "find_augmenting_trail",
    "hereditary_step",
    "rank",
    "run_suite",
    "solve",
    "stream",
    "to_dot",
    "witness",
]


def witness(problem):
    """Obstruction witness tree as nested dicts, or None when P2 holds."""
    text = _ffactor._witness_json(problem)
    return None if text is None else json.loads(text)


def stream(family, f, steps):
    """Prefix of the streamed factor for a built-in family, as a dict."""
    return json.loads(_ffactor._stream_json(family, str(f), steps))

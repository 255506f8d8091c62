# Copyright 2026 The folimits Authors
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

"""Closure of first-order limiting probabilities for sparse random graphs."""

from fractions import Fraction

from folimits import _core
from folimits._core import (
    BudgetError,
    CacheError,
    ClassificationError,
    DomainError,
    Error,
    ModelParams,
    SupercriticalError,
    acyclic_probability,
    canonical_unicycle,
    cycle_lambda,
    cycle_mass,
    enumerate_fragment_shapes,
    enumerate_unicycles,
    fo_approximation,
    intervals,
    normal_quantile,
    poisson_cdf,
    sample_model,
    simulate,
    solve_c0,
    sweep,
    sweep_csv,
    verify_aut_bound,
    verify_family_sums,
)


def inverse_aut_sum(size, d=2):
    """Sum of (d-2)!^size / aut(H) over connected unicycles with `size` edges."""
    return Fraction(_core.inverse_aut_sum(d, size))


__all__ = [name for name in dir() if not name.startswith("_")]

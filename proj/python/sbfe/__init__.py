# Copyright 2026 The Authors.
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

"""Stochastic Boolean function evaluation on partition matroids.

Variables and classes are indexed from 0.
"""

from ._sbfe import (
    Instance,
    SbfeError,
    classify,
    decreasing_counter,
    expected_min_certificate_size,
    fig2,
    fig3,
    increasing_counter,
    inside_out_pruned,
    inside_out_qfn,
    max_onecert_prob,
    monte_carlo,
    mp0_envelope,
    opt1_success_prob,
    opt_eval_cost,
    prune_gap,
    random_instance,
    ratio_bound,
    steepest_ascent,
    validate,
)

__all__ = [
    "Instance",
    "SbfeError",
    "classify",
    "decreasing_counter",
    "expected_min_certificate_size",
    "fig2",
    "fig3",
    "increasing_counter",
    "inside_out_pruned",
    "inside_out_qfn",
    "max_onecert_prob",
    "monte_carlo",
    "mp0_envelope",
    "opt1_success_prob",
    "opt_eval_cost",
    "prune_gap",
    "random_instance",
    "ratio_bound",
    "steepest_ascent",
    "validate",
]

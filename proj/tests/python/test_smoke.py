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

import math

import pytest

import sbfe


def test_instance_and_validation():
    inst = sbfe.Instance([(1, [0.5, 0.5]), (1, [0.9])])
    assert inst.num_vars == 3
    assert inst.num_classes == 2
    assert sbfe.validate(inst)[0] == "Ok"
    assert sbfe.validate(sbfe.Instance([(3, [0.5, 0.5])]))[0] == "ThresholdOutOfRange"
    assert sbfe.classify(inst, "00*") == "zero"
    assert sbfe.classify(inst, "1*1") == "one"


def test_json_round_trip():
    inst = sbfe.random_instance(6, 2, 1, 0.1, 0.9)
    back = sbfe.Instance.from_json(inst.to_json())
    assert back.probs == inst.probs


def test_oracles():
    inst = sbfe.Instance([(1, [0.9, 0.4])])
    assert math.isclose(sbfe.max_onecert_prob(inst, 2), 0.94)
    assert math.isclose(sbfe.opt1_success_prob(inst, 2), 0.94)
    assert sbfe.opt_eval_cost(sbfe.Instance([(1, [0.5, 0.5])])) == 1.5
    env = sbfe.mp0_envelope(sbfe.Instance([(1, [0.9])]))
    assert env[0] == (0.0, 0.0)
    assert env[1][0] == 1.0 and math.isclose(env[1][1], 0.1)


def test_pruning_and_allocation():
    inst = sbfe.fig3(0.1)
    assert inst.num_vars == 1011
    q = sbfe.inside_out_qfn(inst)
    assert q[0] == (0.0, 0.0)
    pruned = sbfe.inside_out_pruned(inst, 0, 2.0)
    assert pruned["cost"] <= 2.0 + 1e-9
    sa = sbfe.steepest_ascent(inst, 2.0)
    assert sa["budgets"] == [2.0]
    assert math.isclose(sa["zero_cert_prob"], pruned["u0"], rel_tol=1e-12)


def test_monte_carlo_is_reproducible():
    inst = sbfe.random_instance(7, 2, 5)
    a = sbfe.monte_carlo(inst, "alg", 2000, 3)
    b = sbfe.monte_carlo(inst, "alg", 2000, 3)
    assert a == b
    assert a["mean"] <= sbfe.ratio_bound() * sbfe.opt_eval_cost(inst)


def test_errors_raise():
    with pytest.raises(sbfe.SbfeError):
        sbfe.fig3(0.3)
    with pytest.raises(sbfe.SbfeError):
        sbfe.opt_eval_cost(sbfe.random_instance(14, 1, 1))

# Copyright 2026 The seqsub Authors.
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
import pathlib

import pytest

import seqsub

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

F, T, R = 0, 1, 2


def trilogy():
    return seqsub.Hypergraph(
        3, [([F, T], 1.0), ([T, R], 1.0), ([F, R], 1.0),
            ([F], 1.0), ([T], 1.0), ([R], 1.0)])


def test_trilogy_values():
    g = trilogy()
    assert g.objective([F]) == 1
    assert g.objective([T]) == 1
    assert g.objective([F, T]) == 3
    assert g.objective([T, F]) == 2
    assert sorted(g.induced_edges([F, T])) == [0, 3, 4]


def test_solve_and_oracle_agree_on_trilogy():
    g = trilogy()
    for direction in ("forward", "backward", "both"):
        report = seqsub.solve(g, 2, algorithm="sequence-greedy",
                              direction=direction)
        assert report["sigma"] == [F, T]
        assert report["objective"] == 3
    opt = seqsub.brute_force_opt(g, 2)
    assert opt["opt_value"] == 3
    assert opt["sigma_star"] == [F, T]
    assert opt["sequences_examined"] == 10


def test_trace_increments_sum_to_objective():
    g = seqsub.Hypergraph(5, [([0, 1, 2], 0.4), ([2, 3], 0.7), ([4], 0.2),
                              ([3], 0.5)])
    report = seqsub.solve(g, 5, utility="probabilistic-coverage")
    total = sum(step["increment"] for step in report["trace"])
    assert math.isclose(total, report["objective"], abs_tol=1e-9)
    assert len(report["sigma"]) <= 5


def test_errors_map_to_exceptions():
    with pytest.raises(seqsub.InputError):
        seqsub.Hypergraph(2, [([0, 0], 1.0)])
    with pytest.raises(seqsub.ConfigError):
        seqsub.solve(trilogy(), 2, direction="sideways")
    g = seqsub.Hypergraph(3, [([0, 1, 2], 1.0)])
    with pytest.raises(seqsub.InputError):
        seqsub.solve(g, 3, algorithm="sequence-greedy")
    with pytest.raises(seqsub.UndefinedMetricError):
        seqsub.tau_accuracy([1], [1])


def test_tau_and_bounds():
    assert seqsub.ordered_pairs([1, 3, 2]) == [(1, 3), (1, 2), (3, 2)]
    assert seqsub.tau_accuracy([0, 1, 2], [0, 2, 1]) == pytest.approx(2 / 3)
    assert seqsub.approx_bound(2, 1, 4, 2) == pytest.approx(
        (1 - math.exp(-0.5)) / 3)


def test_train_and_load_fixtures():
    g, names = seqsub.train(str(FIXTURES / "log.csv"), max_edge_size=2, d=20)
    assert names[0] == "alpha"
    edges = dict((tuple(v), p) for v, p in g.edges)
    assert edges[(0,)] == 0.375
    assert edges[(0, 1)] == 0.140625
    loaded, utility, vertex_names = seqsub.load_hypergraph(
        str(FIXTURES / "lotr.json"))
    assert utility == "modular-count"
    assert vertex_names == ["F", "T", "R"]
    assert loaded.num_edges == 6 and loaded.max_edge_size == 2

"""Smoke tests for the python bindings."""

import json

import pytest

from mincut_lattice import ContractViolation, Network, StructuralError


def fan(k):
    """k disjoint two-edge unit paths s->u_i->t; 0-based ids, s=0, t=k+1."""
    edges = []
    for i in range(1, k + 1):
        edges.append((0, i, 1))
        edges.append((i, k + 1, 1))
    return Network(k + 2, 0, k + 1, edges)


def test_max_flow_value_and_edge_flows():
    net = fan(3)
    assert net.max_flow_value == 3
    flows = net.edge_flows()
    assert len(flows) == 6
    assert all(f == 1 for (_, _, f) in flows)


def test_solve_with_and_without_predicates():
    net = fan(2)
    plain = net.solve()
    assert plain["feasible"]
    assert plain["s_side"] == [0]
    assert plain["capacity"] == 2
    assert plain["rounds"] == 1

    forced = net.solve(json.dumps([{"type": "require_source", "vertex": 1}]))
    assert forced["feasible"]
    assert forced["s_side"] == [0, 1]

    contradiction = json.dumps(
        [
            {"type": "require_source", "vertex": 1},
            {"type": "forbid_source", "vertex": 1},
        ]
    )
    assert not net.solve(contradiction)["feasible"]


def test_irreducibles_and_enumeration():
    net = fan(2)
    irr = net.irreducibles()
    assert irr["feasible"]
    assert irr["bottom"] == [0]
    assert sorted(irr["elements"]) == [[0, 1], [0, 2]]

    cuts = net.enumerate()
    assert len(cuts) == 4
    assert len({tuple(c) for c in cuts}) == 4
    assert net.enumerate(limit=2) == cuts[:2]


def test_slice_search():
    net = fan(3)
    expr = json.dumps(
        {"op": "and", "args": [{"atom": "card_le", "k": 1}, {"atom": "in_s", "vertex": 2}]}
    )
    hit = net.slice(expr)
    assert hit["found"]
    assert hit["s_side"] == [0, 2]
    assert hit["capacity"] == 3

    never = json.dumps(
        {"op": "and", "args": [{"atom": "in_s", "vertex": 1},
                               {"op": "not", "args": [{"atom": "in_s", "vertex": 1}]}]}
    )
    miss = net.slice(never)
    assert not miss["found"]
    assert miss["examined"] == 8


def test_text_format_round_trip():
    text = "p max 4 4\nn 1 s\nn 4 t\na 1 2 1\na 2 4 1\na 1 3 1\na 3 4 1\n"
    net = Network.from_text(text)
    assert net.max_flow_value == 2
    assert net.solve()["s_side"] == [1]  # 1-based ids in text mode


def test_errors_surface_as_python_exceptions():
    with pytest.raises(StructuralError):
        Network(3, 0, 2, [(1, 1, 4)])  # self-loop
    with pytest.raises(StructuralError):
        Network.from_text("p max\n")
    net = fan(2)
    with pytest.raises(StructuralError):
        net.solve(json.dumps([{"type": "require_source", "vertex": 99}]))

"""PLSA 分层与重新编号"""

import logging

import networkx as nx
import pytest

from mincut.core.errors import DisconnectedNetworkError, PreconditionError
from mincut.network.layers import plsa_connected, plsa_layers, plsa_reaches, renumber, surviving_connected
from mincut.search.recursive import enumerate_recursive

from .helpers import make_network


def test_net7_layers(net7):
    layering = plsa_layers(net7, 1)
    assert layering.layer_of == (1, 2, 2, 3, 3, 3, 4)
    assert layering.layers == (frozenset({1}), frozenset({2, 3}), frozenset({4, 5, 6}), frozenset({7}))


def test_bridge_layers(bridge):
    assert plsa_layers(bridge, 1).layers == (frozenset({1}), frozenset({2, 3}), frozenset({4}))


def test_single_node_reachable_only():
    net = make_network(3, [(2, 3)])
    layering = plsa_layers(net, 1)
    assert layering.layers == (frozenset({1}),)
    assert layering.layer(2) == 0


def test_layers_are_bfs_distances(net7):
    layering = plsa_layers(net7, 1)
    dist = nx.single_source_shortest_path_length(net7.to_networkx(), 1)
    assert all(layering.layer(v) == dist[v] + 1 for v in net7.nodes)
    for arc in net7.arcs:
        assert abs(layering.layer(arc.u) - layering.layer(arc.v)) <= 1


def test_plsa_layers_root_out_of_range(bridge):
    with pytest.raises(PreconditionError):
        plsa_layers(bridge, 9)


@pytest.mark.parametrize("allowed, root, reached, ok", [
    ({1, 2, 4, 6}, 1, {1, 2, 4, 6}, True),
    ({3, 5, 7}, 7, {5, 7}, False),
    ({4}, 4, {4}, True),
])
def test_plsa_connected_net7(net7, allowed, root, reached, ok):
    assert plsa_connected(net7, allowed, root) == (frozenset(reached), ok)


def test_plsa_connected_root_must_be_allowed(net7):
    with pytest.raises(PreconditionError):
        plsa_connected(net7, {2, 3}, 1)


@pytest.mark.parametrize("allowed, root, targets, expected", [
    ({1, 2, 6}, 6, {1, 2}, False),
    ({1, 3, 5, 6}, 5, {1, 3}, True),
    ({5}, 5, {1}, False),
    ({2, 4, 5}, 5, {2}, True),
])
def test_plsa_reaches(net7, allowed, root, targets, expected):
    assert plsa_reaches(net7, allowed, root, targets) is expected


def test_plsa_reaches_root_must_be_allowed(net7):
    with pytest.raises(PreconditionError):
        plsa_reaches(net7, {1, 2}, 5, {1})


def test_renumber_identity_on_ordered_networks(net7, bridge):
    for net in (net7, bridge):
        renumbered, mapping = renumber(net)
        assert renumbered is net
        assert mapping.is_identity


def test_renumber_net7_shuffled(net7_shuffled, net7):
    renumbered, mapping = renumber(net7_shuffled)
    assert mapping.forward == (1, 4, 2, 5, 3, 6, 7)
    assert all(mapping.restore(mapping.apply(v)) == v for v in net7_shuffled.nodes)

    layering = plsa_layers(renumbered, 1)
    assert layering.layer_of == (1, 2, 2, 3, 3, 3, 4)
    assert sorted(renumbered.neighbor_set(1)) == [2, 3]
    # 弧编号不变，只换端点
    assert [a.arc_id for a in renumbered.arcs] == list(range(1, 13))
    assert renumbered.probabilities == net7_shuffled.probabilities
    assert nx.is_isomorphic(renumbered.to_networkx(), net7.to_networkx())


def test_renumber_keeps_catalog(net7_shuffled, net7):
    catalog_net7_shuffled, _ = enumerate_recursive(net7_shuffled)
    catalog_net7, _ = enumerate_recursive(net7)
    assert catalog_net7_shuffled.as_set() == catalog_net7.as_set()


def test_renumber_forces_sink_last_and_warns(caplog):
    # 汇点 4 与源点相邻，处在第 2 层
    net = make_network(4, [(1, 2), (2, 3), (1, 4)])
    with caplog.at_level(logging.WARNING):
        renumbered, mapping = renumber(net)
    assert mapping.apply(4) == 4
    assert mapping.apply(2) == 2
    assert mapping.apply(3) == 3
    assert "sink" in caplog.text


def test_renumber_orders_layers_monotone():
    # 节点 2 在第 3 层，节点 3 在第 2 层
    net = make_network(5, [(1, 3), (3, 2), (2, 5), (1, 4), (4, 5)])
    renumbered, mapping = renumber(net)
    assert mapping.apply(3) == 2
    assert mapping.apply(4) == 3
    assert mapping.apply(2) == 4
    layer_of = plsa_layers(renumbered, 1).layer_of
    assert list(layer_of) == sorted(layer_of)


def test_renumber_rejects_disconnected():
    with pytest.raises(DisconnectedNetworkError):
        renumber(make_network(4, [(1, 2), (3, 4)]))


def test_surviving_connected(bridge):
    assert surviving_connected(bridge, 0)
    # 删掉 {a1, a2} 断开
    assert not surviving_connected(bridge, 0b00011)
    # 删掉 {a1, a3} 仍可经 a2-a5 到达
    assert surviving_connected(bridge, 0b00101)

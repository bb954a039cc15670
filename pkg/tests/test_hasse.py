# -*- coding: utf-8 -*-
import pytest

from influnet.hasse import chain_label, dot_id, event_label, export_hasse
from influnet.network import load_network
from influnet.poset import InfluenceNetworkBuilder
from influnet.types import ChainRole, EventKind, Side


@pytest.fixture(scope="module")
def emitter_dot():
    return export_hasse(load_network("bundled:emitter"))


class Test_dot_id:
    @staticmethod
    @pytest.mark.parametrize(
        "value, expected_result",
        [("a", '"a"'), ('x"y', '"x\\"y"'), ("cluster_P", '"cluster_P"')],
    )
    def test_quotes(value, expected_result):
        assert dot_id(value) == expected_result


class Test_labels:
    @staticmethod
    def test_observer_chain_label():
        network = load_network("bundled:emitter")
        assert chain_label(network.chain("P")) == "P (P side)"
        assert chain_label(network.chain("Pi")) == "Pi"

    @staticmethod
    def test_event_labels():
        network = load_network("bundled:admissible")
        assert event_label(network.event("pi1")) == "pi1\\n1 to P"
        assert event_label(network.event("pi2")) == "pi2\\n2 from Q"
        assert event_label(network.event("P1")) == "P1\\n1"


class Test_export_hasse:
    @staticmethod
    def test_edge_count(emitter_dot):
        edges = [line for line in emitter_dot.splitlines() if "->" in line]
        assert len(edges) == 12
        assert sum("style=dashed" in line for line in edges) == 5

    @staticmethod
    def test_clusters(emitter_dot):
        assert emitter_dot.startswith("digraph influence_network {\n")
        assert emitter_dot.endswith("}\n")
        for chain in ("Pi", "P", "Q"):
            assert f'subgraph "cluster_{chain}" {{' in emitter_dot

    @staticmethod
    def test_edges(emitter_dot):
        assert '    "a" -> "P1" [style=dashed];' in emitter_dot
        assert '    "a" -> "b" [style=solid];' in emitter_dot

    @staticmethod
    def test_reception_shape():
        dot = export_hasse(load_network("bundled:violation"))
        assert '"pi2" [label="pi2\\n2 from Q", shape=doublecircle];' in dot
        assert '"pi1" [label="pi1\\n1 to Q"];' in dot

    @staticmethod
    def test_empty_network():
        assert export_hasse(InfluenceNetworkBuilder().build()) == "digraph influence_network {\n}\n"

    @staticmethod
    def test_quoted_ids():
        network = (
            InfluenceNetworkBuilder()
            .add_chain('odd"chain', ChainRole.particle)
            .add_event('odd"chain', 'e"1', 1, EventKind.emission, side=Side.P)
            .build()
        )
        dot = export_hasse(network)
        assert 'subgraph "cluster_odd\\"chain" {' in dot
        assert '"e\\"1" [label="e\\"1\\n1 to P"];' in dot

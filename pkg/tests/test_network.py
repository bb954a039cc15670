# -*- coding: utf-8 -*-
from pathlib import Path

import pytest

from influnet.exceptions import (
    DeserializeError,
    InfluNetJSONDecodeError,
    NetworkStructureError,
)
from influnet.network import (
    bundled_networks,
    load_network,
    network_from_dict,
    network_to_dict,
    resolve_network_path,
)
from influnet.types import EventKind, Side
from tests.utils import TESTDATA


class Test_bundled:
    @staticmethod
    def test_names():
        assert bundled_networks() == ["admissible", "emitter", "violation"]

    @staticmethod
    @pytest.mark.parametrize(
        "name, events, influences",
        [("emitter", 10, 5), ("admissible", 9, 4), ("violation", 6, 3)],
    )
    def test_load(name, events, influences):
        network = load_network(f"bundled:{name}")
        assert len(network) == events
        assert len(network.influences) == influences

    @staticmethod
    def test_unknown_name_lists_available():
        with pytest.raises(FileNotFoundError, match="available: admissible, emitter, violation"):
            load_network("bundled:missing")

    @staticmethod
    def test_plain_path_is_kept():
        assert resolve_network_path("some/where.json") == Path("some/where.json")


class Test_load_network:
    @staticmethod
    def test_yaml():
        network = load_network(TESTDATA / "networks/two_events.yaml")
        chain = network.chain("free")
        assert [event.id for event in chain.events] == ["e1", "e2"]
        assert chain.events[1].side is Side.Q
        assert chain.events[0].kind is EventKind.emission

    @staticmethod
    def test_empty_document():
        network = load_network(TESTDATA / "networks/empty.json")
        assert len(network) == 0
        assert network.chains == ()

    @staticmethod
    @pytest.mark.parametrize(
        "filename, message",
        [
            ("cycle.json", "cycle"),
            ("emission_target.json", "target must be a reception event"),
            ("duplicate_valuation.json", "must exceed"),
            ("unequal_coordination.json", "has length 2 but"),
            ("extra_key.json", "invalid network document"),
        ],
    )
    def test_structure_errors(filename, message):
        with pytest.raises(NetworkStructureError, match=message):
            load_network(TESTDATA / "networks" / filename)

    @staticmethod
    def test_malformed_json():
        with pytest.raises(InfluNetJSONDecodeError) as exc_info:
            load_network(TESTDATA / "networks/malformed.json")
        assert exc_info.value.lineno == 3

    @staticmethod
    def test_not_a_mapping():
        with pytest.raises(DeserializeError):
            load_network(TESTDATA / "networks/list.yaml")

    @staticmethod
    def test_missing_file():
        with pytest.raises(FileNotFoundError):
            load_network(TESTDATA / "networks/does_not_exist.json")


class Test_network_from_dict:
    @staticmethod
    def test_valuation_must_be_integer():
        document = {
            "chains": [
                {
                    "id": "A",
                    "role": "particle",
                    "events": [{"id": "a1", "valuation": "1", "kind": "emission"}],
                }
            ]
        }
        with pytest.raises(NetworkStructureError, match="valuation"):
            network_from_dict(document)

    @staticmethod
    def test_unknown_kind():
        document = {
            "chains": [
                {
                    "id": "A",
                    "role": "particle",
                    "events": [{"id": "a1", "valuation": 1, "kind": "absorption"}],
                }
            ]
        }
        with pytest.raises(NetworkStructureError):
            network_from_dict(document)


class Test_network_to_dict:
    @staticmethod
    def test_coordination_and_indistinguishable():
        document = network_to_dict(load_network("bundled:admissible"))
        assert document["coordination"] == [
            {"chains": ["P", "Q"], "pairs": [["P1", "Q1"], ["P2", "Q2"]]}
        ]
        pi3 = document["chains"][0]["events"][2]
        assert pi3 == {
            "id": "pi3",
            "valuation": 2,
            "kind": "emission",
            "side": "P",
            "indistinguishable": True,
        }

    @staticmethod
    def test_omits_missing_side():
        document = network_to_dict(load_network("bundled:emitter"))
        assert "side" not in document["chains"][0]
        assert document["chains"][1]["side"] == "P"
        assert document["chains"][1]["events"][0]["kind"] == "observer-reception"

    @staticmethod
    def test_rebuilds_same_order():
        network = load_network("bundled:violation")
        rebuilt = network_from_dict(network_to_dict(network))
        assert rebuilt.hasse_edges() == network.hasse_edges()
        assert rebuilt.collinearity_scan("pi") == network.collinearity_scan("pi")

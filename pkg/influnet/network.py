# -*- coding: utf-8 -*-
"""
Serialization of influence networks.

Network files are JSON (or YAML) documents with arrays of chains and influence
edges, optionally a list of coordinated observer chain pairs:

.. code:: json

    {
        "chains": [
            {"id": "Pi", "role": "particle", "events": [
                {"id": "a", "valuation": 1, "kind": "emission", "side": "P"}
            ]},
            {"id": "P", "role": "observer", "side": "P", "events": [
                {"id": "P1", "valuation": 2, "kind": "observer-reception"}
            ]}
        ],
        "influences": [{"source": "a", "target": "P1"}]
    }

Bundled networks are addressed as ``bundled:<name>``.
"""

# pylint: disable=R0903 # Too few public methods

import json
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Extra, ValidationError, conint

from .exceptions import NetworkStructureError
from .poset import InfluenceNetwork, InfluenceNetworkBuilder
from .types import ChainRole, EventKind, Side
from .utils import deserialize

__all__ = [
    "NetworkModel",
    "BUNDLED_PREFIX",
    "bundled_networks",
    "resolve_network_path",
    "network_from_dict",
    "network_to_dict",
    "load_network",
]

BUNDLED_PREFIX = "bundled:"
BUNDLED_DIR = Path(__file__).parent / "networks"


class EventModel(BaseModel):
    """An event of a chain"""

    id: str
    valuation: conint(strict=True)
    kind: EventKind
    side: Optional[Side] = None
    indistinguishable: bool = False

    class Config:
        extra = Extra.forbid


class ChainModel(BaseModel):
    """A chain with its ordered events"""

    id: str
    role: ChainRole
    side: Optional[Side] = None
    events: List[EventModel] = []

    class Config:
        extra = Extra.forbid


class InfluenceModel(BaseModel):
    """Influence edge from an emission to a reception"""

    source: str
    target: str

    class Config:
        extra = Extra.forbid


class CoordinationModel(BaseModel):
    """Pairing of events of two coordinated observer chains"""

    chains: Tuple[str, str]
    pairs: List[Tuple[str, str]]

    class Config:
        extra = Extra.forbid


class NetworkModel(BaseModel):
    """Serialized influence network"""

    chains: List[ChainModel] = []
    influences: List[InfluenceModel] = []
    coordination: List[CoordinationModel] = []

    class Config:
        extra = Extra.forbid


def bundled_networks() -> List[str]:
    """Names of the networks shipped with influnet."""
    return sorted(path.stem for path in BUNDLED_DIR.glob("*.json"))


def resolve_network_path(source: Union[str, Path]) -> Path:
    """Maps ``bundled:<name>`` to the shipped file, any other value is used as a path."""
    source = str(source)
    if source.startswith(BUNDLED_PREFIX):
        name = source[len(BUNDLED_PREFIX) :]
        path = BUNDLED_DIR / f"{name}.json"
        if not path.is_file():
            raise FileNotFoundError(
                f"no bundled network '{name}', available: {', '.join(bundled_networks())}"
            )
        return path
    return Path(source)


def network_from_dict(data: dict) -> InfluenceNetwork:
    """Validates a deserialized network document and builds the network.

    Raises NetworkStructureError for model violations and structural violations.
    """
    try:
        model = NetworkModel.parse_obj(data)
    except ValidationError as exc:
        raise NetworkStructureError(f"invalid network document: {exc}") from None

    builder = InfluenceNetworkBuilder()
    for chain in model.chains:
        builder.add_chain(chain.id, chain.role, side=chain.side)
        for event in chain.events:
            builder.add_event(
                chain.id,
                event.id,
                event.valuation,
                event.kind,
                side=event.side,
                indistinguishable=event.indistinguishable,
            )
    for influence in model.influences:
        builder.add_influence(influence.source, influence.target)
    for coordination in model.coordination:
        builder.coordinate(coordination.chains, coordination.pairs)
    return builder.build()


def network_to_dict(network: InfluenceNetwork) -> dict:
    """Serializes a network into the document format read by :py:func:`network_from_dict`."""
    model = NetworkModel(
        chains=[
            ChainModel(
                id=chain.id,
                role=chain.role,
                side=chain.side,
                events=[
                    EventModel(
                        id=event.id,
                        valuation=event.valuation,
                        kind=event.kind,
                        side=event.side,
                        indistinguishable=event.indistinguishable,
                    )
                    for event in chain.events
                ],
            )
            for chain in network.chains
        ],
        influences=[
            InfluenceModel(source=source, target=target)
            for source, target in network.influences
        ],
        coordination=[
            CoordinationModel(chains=coordination.chains, pairs=list(coordination.pairs))
            for coordination in network.coordination
        ],
    )
    return json.loads(model.json(exclude_none=True))


def load_network(source: Union[str, Path]) -> InfluenceNetwork:
    """Loads a network from a JSON/YAML file or ``bundled:<name>``."""
    data, _ = deserialize(resolve_network_path(source))
    return network_from_dict(data)

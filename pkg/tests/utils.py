# -*- coding: utf-8 -*-
"""contains utility functions and pytest fixtures for code testing"""

import random
import shutil
from pathlib import Path
from tempfile import mkdtemp
from typing import Union

import pytest

from influnet.network import network_from_dict, network_to_dict
from influnet.poset import InfluenceNetwork, InfluenceNetworkBuilder
from influnet.types import ChainRole, EventKind, Side

# from tests.utils import *


__all__ = [
    "TESTDATA",
    "SCENARIOS",
    "load_file",
    "fixture_tmpdir",
    "fixture_mktmpfile",
    "random_network",
    "relabel_valuations",
]

TESTDATA = Path(__file__).parent / "testdata"
SCENARIOS = Path(__file__).parent.parent / "scenarios"


def load_file(filename: Union[str, Path]) -> str:
    with open(filename, "r", encoding="utf-8") as f:
        return str(f.read())


@pytest.fixture
def fixture_tmpdir():
    tmpdir = str(mkdtemp(suffix=".influnet.tests"))
    yield tmpdir
    try:
        shutil.rmtree(tmpdir)
    except FileNotFoundError:
        # ignore exception: tests can delete the tmpdir
        pass


@pytest.fixture
def fixture_mktmpfile(tmp_path_factory):
    """Fixture to create a temporary file with 'data' as content"""

    def _mktmpfile(data, suffix=""):
        """Fixture to create a temporary file with 'data' as content"""
        fn = tmp_path_factory.mktemp("mktmpfile")
        fn_file = str(fn) + "/file" + suffix
        with open(fn_file, "w", encoding="utf-8") as fn_handle:
            fn_handle.write(data)
        return fn_file

    return _mktmpfile


def random_network(
    seed: int, chains: int = 3, events: int = 16, influences: int = 10
) -> InfluenceNetwork:
    """Random acyclic network of particle chains.

    Events are placed in a global order, influences only point forward in that
    order, so the result is always a valid partial order.
    """
    rng = random.Random(seed)
    builder = InfluenceNetworkBuilder()
    chain_ids = [f"c{index}" for index in range(chains)]
    for chain_id in chain_ids:
        builder.add_chain(chain_id, ChainRole.particle)

    counts = {chain_id: 0 for chain_id in chain_ids}
    placed = []
    for order in range(events):
        chain_id = rng.choice(chain_ids)
        counts[chain_id] += 1
        kind = rng.choice([EventKind.emission, EventKind.reception])
        event_id = f"e{order}"
        builder.add_event(
            chain_id, event_id, counts[chain_id], kind, side=rng.choice([Side.P, Side.Q])
        )
        placed.append((event_id, chain_id, kind))

    candidates = [
        (source[0], target[0])
        for index, source in enumerate(placed)
        for target in placed[index + 1 :]
        if source[2] is EventKind.emission
        and target[2] is not EventKind.emission
        and source[1] != target[1]
    ]
    for source, target in rng.sample(candidates, min(influences, len(candidates))):
        builder.add_influence(source, target)
    return builder.build()


def relabel_valuations(network: InfluenceNetwork, scale: int = 3, offset: int = 7) -> InfluenceNetwork:
    """Rebuilds ``network`` with valuations mapped by v -> scale*v + offset."""
    document = network_to_dict(network)
    for chain in document["chains"]:
        for event in chain["events"]:
            event["valuation"] = scale * event["valuation"] + offset
    return network_from_dict(document)

# -*- coding: utf-8 -*-
"""
The influence network: a partially ordered set of events organized into chains.

Events are nodes of a directed graph whose edges are chain successors and
influences (emission -> reception). ``x <= y`` ("y includes x") holds iff y is
reachable from x. Networks are built with :py:class:`InfluenceNetworkBuilder`
and are immutable afterwards, so every query below is a pure read.
"""

# pylint: disable=C0301 # Line too long

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx
from loguru import logger

from .exceptions import NetworkStructureError, UnknownEventError
from .types import ChainRole, EventKind, Side

__all__ = [
    "Event",
    "Chain",
    "Coordination",
    "CollinearityViolation",
    "InfluenceNetwork",
    "InfluenceNetworkBuilder",
]

EventRef = Union["Event", str]
ChainRef = Union["Chain", str]

CHAIN_EDGE = "chain"
INFLUENCE_EDGE = "influence"


@dataclass(frozen=True)
class Event:
    """An influence event on a chain.

    ``valuation`` is the uniform-increment label along the chain. ``side`` tags
    particle events: the observer side an emission is directed to, or the side a
    reception came from. ``indistinguishable`` marks an event that observers cannot
    tell apart from its chain predecessor; the two share a valuation.
    """

    id: str
    chain: str
    valuation: int
    kind: EventKind
    side: Optional[Side] = None
    indistinguishable: bool = False


@dataclass(frozen=True)
class Chain:
    """A totally ordered chain of events belonging to one particle or observer."""

    id: str
    role: ChainRole
    events: Tuple[Event, ...]
    side: Optional[Side] = None

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class Coordination:
    """Bijective pairing between the events of two coordinated observer chains."""

    chains: Tuple[str, str]
    pairs: Tuple[Tuple[str, str], ...]


@dataclass(frozen=True)
class CollinearityViolation:
    """An emission toward ``side`` immediately followed by a reception from ``side``."""

    emission: str
    reception: str
    side: Side


class InfluenceNetwork:
    """Immutable influence network. Use :py:class:`InfluenceNetworkBuilder` to create one.

    :param chains: validated chains
    :param influences: validated influence edges as (source id, target id)
    :param coordination: validated coordinations of observer chains
    """

    def __init__(
        self,
        chains: Iterable[Chain],
        influences: Iterable[Tuple[str, str]],
        coordination: Iterable[Coordination] = (),
    ):
        self._chains: Dict[str, Chain] = {chain.id: chain for chain in chains}
        self._influences: Tuple[Tuple[str, str], ...] = tuple(influences)
        self._coordination: Tuple[Coordination, ...] = tuple(coordination)
        self._events: Dict[str, Event] = {
            event.id: event for chain in self._chains.values() for event in chain.events
        }
        self._position: Dict[str, int] = {
            event.id: index
            for chain in self._chains.values()
            for index, event in enumerate(chain.events)
        }
        self._graph = nx.DiGraph()
        for event in self._events.values():
            self._graph.add_node(event.id)
        for chain in self._chains.values():
            for lower, upper in zip(chain.events, chain.events[1:]):
                self._graph.add_edge(lower.id, upper.id, kind=CHAIN_EDGE)
        for source, target in self._influences:
            self._graph.add_edge(source, target, kind=INFLUENCE_EDGE)
        self._descendants: Dict[str, FrozenSet[str]] = {}

    @property
    def chains(self) -> Tuple[Chain, ...]:
        return tuple(self._chains.values())

    @property
    def events(self) -> Tuple[Event, ...]:
        return tuple(self._events.values())

    @property
    def influences(self) -> Tuple[Tuple[str, str], ...]:
        return self._influences

    @property
    def coordination(self) -> Tuple[Coordination, ...]:
        return self._coordination

    def __len__(self) -> int:
        return len(self._events)

    def event(self, ref: EventRef) -> Event:
        """Returns the event for an id (or the event itself). Raises UnknownEventError."""
        event_id = ref.id if isinstance(ref, Event) else ref
        try:
            return self._events[event_id]
        except KeyError:
            raise UnknownEventError(f"unknown event: '{event_id}'") from None

    def chain(self, ref: ChainRef) -> Chain:
        """Returns the chain for an id (or the chain itself). Raises UnknownEventError."""
        chain_id = ref.id if isinstance(ref, Chain) else ref
        try:
            return self._chains[chain_id]
        except KeyError:
            raise UnknownEventError(f"unknown chain: '{chain_id}'") from None

    def _reachable(self, event_id: str) -> FrozenSet[str]:
        """Memoized descendants of an event, the event included."""
        reachable = self._descendants.get(event_id)
        if reachable is None:
            reachable = frozenset(nx.descendants(self._graph, event_id) | {event_id})
            self._descendants[event_id] = reachable
        return reachable

    def leq(self, x: EventRef, y: EventRef) -> bool:
        """x <= y, read "y includes x": y is reachable from x via chain successors and influences."""
        lower, upper = self.event(x), self.event(y)
        return upper.id in self._reachable(lower.id)

    def forward_project(self, e: EventRef, target: ChainRef) -> Optional[Event]:
        """The least event on ``target`` that includes ``e``, None if there is none."""
        event = self.event(e)
        for candidate in self.chain(target).events:
            if self.leq(event, candidate):
                return candidate
        return None

    def back_project(self, e: EventRef, target: ChainRef) -> Optional[Event]:
        """The greatest event on ``target`` that ``e`` includes, None if there is none."""
        event = self.event(e)
        for candidate in reversed(self.chain(target).events):
            if self.leq(candidate, event):
                return candidate
        return None

    def collinear_back_project(
        self, e: EventRef, via: ChainRef, target: ChainRef
    ) -> Optional[Event]:
        """Back projection routed through collinearity: forward project ``e`` to ``via``,
        then back project that event onto ``target``."""
        forward = self.forward_project(e, via)
        if forward is None:
            return None
        return self.back_project(forward, target)

    def projected_lengths(
        self, x: EventRef, y: EventRef, p_chain: ChainRef, q_chain: ChainRef
    ) -> Optional[Tuple[int, int]]:
        """Lengths (dp, dq) of the particle interval [x, y] as quantified by two observers.

        Both bounds are forward projected onto each observer chain, the lengths are
        valuation differences. None if a bound does not project.
        """
        lengths = []
        for observer in (p_chain, q_chain):
            lower, upper = self.forward_project(x, observer), self.forward_project(y, observer)
            if lower is None or upper is None:
                return None
            lengths.append(upper.valuation - lower.valuation)
        return lengths[0], lengths[1]

    def collinearity_scan(self, particle: ChainRef) -> List[CollinearityViolation]:
        """Adjacent (emission toward S, reception from S) pairs on a particle chain.

        An empty list means the chain ordering is collinearity-admissible.
        Raises NetworkStructureError for observer chains and untagged events.
        """
        chain = self.chain(particle)
        if chain.role is not ChainRole.particle:
            raise NetworkStructureError(
                f"collinearity_scan: chain '{chain.id}' is not a particle chain"
            )
        for event in chain.events:
            if event.side is None:
                raise NetworkStructureError(
                    f"collinearity_scan: event '{event.id}' on chain '{chain.id}' has no side tag"
                )

        violations = [
            CollinearityViolation(emission=lower.id, reception=upper.id, side=upper.side)
            for lower, upper in zip(chain.events, chain.events[1:])
            if upper.kind is EventKind.reception
            and lower.kind is EventKind.emission
            and lower.side is upper.side
        ]
        for violation in violations:
            logger.debug(
                "collinearity violation on {}: {} -> {} ({} side)",
                chain.id,
                violation.emission,
                violation.reception,
                violation.side.value,
            )
        return violations

    def hasse_edges(self) -> List[Tuple[str, str, str]]:
        """Edges of the transitive reduction as (source, target, kind), kind is "chain" or "influence"."""
        if not self._events:
            return []
        reduced = nx.transitive_reduction(self._graph)
        return sorted(
            (source, target, self._graph.edges[source, target]["kind"])
            for source, target in reduced.edges
        )

    def is_partial_order(self) -> bool:
        """Brute-force check of reflexivity, antisymmetry and transitivity of ``leq``.

        Quadratic/cubic in the number of events, meant for networks up to ~50 events.
        """
        ids = list(self._events)
        relation = {(x, y): self.leq(x, y) for x, y in product(ids, repeat=2)}
        if not all(relation[(x, x)] for x in ids):
            return False
        for x, y in product(ids, repeat=2):
            if x != y and relation[(x, y)] and relation[(y, x)]:
                return False
        for x, y, z in product(ids, repeat=3):
            if relation[(x, y)] and relation[(y, z)] and not relation[(x, z)]:
                return False
        return True

    def position(self, e: EventRef) -> int:
        """Index of an event along its chain."""
        return self._position[self.event(e).id]


class InfluenceNetworkBuilder:
    """Build phase of an :py:class:`InfluenceNetwork`.

    Example usage:

    .. code:: python

        builder = InfluenceNetworkBuilder()
        builder.add_chain("Pi", ChainRole.particle)
        builder.add_chain("P", ChainRole.observer, side=Side.P)
        builder.add_event("Pi", "a", 1, EventKind.emission, side=Side.P)
        builder.add_event("P", "P1", 2, EventKind.observer_reception)
        builder.add_influence("a", "P1")
        network = builder.build()
    """

    def __init__(self):
        self._chains: Dict[str, dict] = {}
        self._event_chain: Dict[str, str] = {}
        self._influences: List[Tuple[str, str]] = []
        self._coordination: List[Coordination] = []

    def add_chain(
        self, chain_id: str, role: ChainRole, side: Optional[Side] = None
    ) -> "InfluenceNetworkBuilder":
        if chain_id in self._chains:
            raise NetworkStructureError(f"duplicate chain: '{chain_id}'")
        self._chains[chain_id] = {
            "role": ChainRole(role),
            "side": Side(side) if side is not None else None,
            "events": [],
        }
        return self

    def add_event(  # pylint: disable=R0913 # Too many arguments
        self,
        chain_id: str,
        event_id: str,
        valuation: int,
        kind: EventKind,
        side: Optional[Side] = None,
        indistinguishable: bool = False,
    ) -> "InfluenceNetworkBuilder":
        """Appends an event at the top of a chain."""
        if chain_id not in self._chains:
            raise UnknownEventError(f"unknown chain: '{chain_id}'")
        if event_id in self._event_chain:
            raise NetworkStructureError(f"duplicate event: '{event_id}'")
        self._chains[chain_id]["events"].append(
            Event(
                id=event_id,
                chain=chain_id,
                valuation=int(valuation),
                kind=EventKind(kind),
                side=Side(side) if side is not None else None,
                indistinguishable=indistinguishable,
            )
        )
        self._event_chain[event_id] = chain_id
        return self

    def add_influence(self, source: str, target: str) -> "InfluenceNetworkBuilder":
        self._influences.append((source, target))
        return self

    def coordinate(
        self, chains: Tuple[str, str], pairs: Iterable[Tuple[str, str]]
    ) -> "InfluenceNetworkBuilder":
        self._coordination.append(
            Coordination(chains=tuple(chains), pairs=tuple(tuple(pair) for pair in pairs))
        )
        return self

    def build(self) -> InfluenceNetwork:
        """Validates all structural invariants and returns the immutable network.

        Raises NetworkStructureError on the first violation found.
        """
        chains = [
            Chain(
                id=chain_id,
                role=spec["role"],
                side=spec["side"],
                events=tuple(spec["events"]),
            )
            for chain_id, spec in self._chains.items()
        ]
        for chain in chains:
            self._check_valuations(chain)

        events = {event.id: event for chain in chains for event in chain.events}
        for source, target in self._influences:
            self._check_influence(events, source, target)

        for coordination in self._coordination:
            self._check_coordination(events, coordination)

        network = InfluenceNetwork(chains, self._influences, self._coordination)
        graph = nx.DiGraph(
            [(s, t) for s, t in self._influences]
            + [
                (lower.id, upper.id)
                for chain in chains
                for lower, upper in zip(chain.events, chain.events[1:])
            ]
        )
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise NetworkStructureError(
                f"influence network is not a partial order, cycle: {' -> '.join(s for s, _ in cycle)}"
            )
        logger.debug(
            "built influence network: {} chains, {} events, {} influences",
            len(chains),
            len(events),
            len(self._influences),
        )
        return network

    @staticmethod
    def _check_valuations(chain: Chain) -> None:
        if chain.events and chain.events[0].indistinguishable:
            raise NetworkStructureError(
                f"event '{chain.events[0].id}' is marked indistinguishable but has no predecessor"
            )
        for lower, upper in zip(chain.events, chain.events[1:]):
            if upper.valuation > lower.valuation:
                continue
            if upper.valuation == lower.valuation and upper.indistinguishable:
                continue
            raise NetworkStructureError(
                f"chain '{chain.id}': valuation of '{upper.id}' ({upper.valuation}) must exceed '{lower.id}' ({lower.valuation})"
            )

    @staticmethod
    def _check_influence(events: Dict[str, Event], source: str, target: str) -> None:
        for event_id in (source, target):
            if event_id not in events:
                raise NetworkStructureError(f"influence references unknown event '{event_id}'")
        if events[source].kind is not EventKind.emission:
            raise NetworkStructureError(
                f"influence {source} -> {target}: source must be an emission event"
            )
        if events[target].kind is EventKind.emission:
            raise NetworkStructureError(
                f"influence {source} -> {target}: target must be a reception event"
            )
        if events[source].chain == events[target].chain:
            raise NetworkStructureError(
                f"influence {source} -> {target}: source and target are on the same chain"
            )

    def _check_coordination(
        self, events: Dict[str, Event], coordination: Coordination
    ) -> None:
        first, second = coordination.chains
        for chain_id in (first, second):
            if chain_id not in self._chains:
                raise NetworkStructureError(f"coordination references unknown chain '{chain_id}'")
            if self._chains[chain_id]["role"] is not ChainRole.observer:
                raise NetworkStructureError(
                    f"coordination: chain '{chain_id}' is not an observer chain"
                )
        if first == second:
            raise NetworkStructureError("coordination needs two distinct chains")

        for index, chain_id in enumerate((first, second)):
            ids = [pair[index] for pair in coordination.pairs]
            if len(set(ids)) != len(ids):
                raise NetworkStructureError(
                    f"coordination of {first}/{second} is not bijective on '{chain_id}'"
                )
            for event_id in ids:
                if event_id not in events or events[event_id].chain != chain_id:
                    raise NetworkStructureError(
                        f"coordination: '{event_id}' is not an event of chain '{chain_id}'"
                    )
            covered = set(ids)
            uncovered = [event.id for event in self._chains[chain_id]["events"] if event.id not in covered]
            if uncovered:
                raise NetworkStructureError(
                    f"coordination of {first}/{second} does not cover {', '.join(uncovered)} on '{chain_id}'"
                )

        pairs = sorted(coordination.pairs, key=lambda pair: events[pair[0]].valuation)
        for (a0, b0), (a1, b1) in zip(pairs, pairs[1:]):
            length_first = events[a1].valuation - events[a0].valuation
            length_second = events[b1].valuation - events[b0].valuation
            if length_first != length_second:
                raise NetworkStructureError(
                    f"coordination of {first}/{second}: interval [{a0}, {a1}] has length {length_first} but [{b0}, {b1}] has length {length_second}"
                )

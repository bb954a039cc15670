# -*- coding: utf-8 -*-
"""
Hasse diagram export of influence networks as Graphviz DOT text.

Every chain becomes a cluster, chain edges are drawn solid and influence edges
dashed. Only edges of the transitive reduction are rendered.
"""

# pylint: disable=C0301 # Line too long

from jinja2 import DictLoader, Environment, StrictUndefined

from .poset import CHAIN_EDGE, InfluenceNetwork
from .types import ChainRole, EventKind

__all__ = ["export_hasse"]

DOT_TEMPLATE = """\
digraph influence_network {
{% if network.chains %}
    rankdir=BT;
    node [shape=circle, fontsize=10];
{% endif %}
{% for chain in network.chains %}
    subgraph {{ ("cluster_" ~ chain.id) | dot_id }} {
        label={{ chain_label(chain) | dot_id }};
{% for event in chain.events %}
        {{ event.id | dot_id }} [label={{ event_label(event) | dot_id }}{% if event.kind.value == "reception" %}, shape=doublecircle{% endif %}];
{% endfor %}
    }
{% endfor %}
{% for source, target, kind in edges %}
    {{ source | dot_id }} -> {{ target | dot_id }} [style={{ "solid" if kind == chain_edge else "dashed" }}];
{% endfor %}
}
"""


def dot_id(value: str) -> str:
    """Quotes a DOT identifier."""
    escaped = str(value).replace('"', '\\"')
    return f'"{escaped}"'


def chain_label(chain) -> str:
    if chain.role is ChainRole.observer and chain.side is not None:
        return f"{chain.id} ({chain.side.value} side)"
    return chain.id


def event_label(event) -> str:
    label = f"{event.id}\\n{event.valuation}"
    if event.side is not None and event.kind is not EventKind.observer_reception:
        direction = "to" if event.kind is EventKind.emission else "from"
        label += f" {direction} {event.side.value}"
    return label


def _environment() -> Environment:
    env = Environment(  # nosec (DOT output, autoescaping does not apply)
        loader=DictLoader({"hasse.dot": DOT_TEMPLATE}),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
        autoescape=False,
    )
    env.filters["dot_id"] = dot_id
    env.globals["chain_label"] = chain_label
    env.globals["event_label"] = event_label
    env.globals["chain_edge"] = CHAIN_EDGE
    return env


def export_hasse(network: InfluenceNetwork) -> str:
    """Renders the transitive reduction of ``network`` as a DOT digraph."""
    return (
        _environment()
        .get_template("hasse.dot")
        .render(network=network, edges=network.hasse_edges())
    )

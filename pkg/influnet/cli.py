# -*- coding: utf-8 -*-
"""
InfluNet CLI module
"""

# pylint: disable=C0330 # Wrong hanging indentation before block
# pylint: disable=C0301 # Line too long

import sys
from typing import Optional

import click
from loguru import logger

from . import __version__
from .exceptions import INPUT_ERRORS
from .hasse import export_hasse
from .network import load_network
from .runner import batch_exit_code, run_batch, run_scenario_file
from .types import ChainRole, TrajectoryFormat
from .utils import exitOnException

logger.remove()
LOG_STDERR = logger.bind(task="stderr")
LOG_STDOUT = logger.bind(task="stdout")


def _configure_sinks(verbose: bool = False) -> None:
    """Installs the stderr and stdout sinks, un-bound library records go to stderr."""
    logger.remove()
    logger.add(
        sys.stderr,
        colorize=True,
        level="DEBUG" if verbose else "WARNING",
        format="<red>{level}: {message}</red>",
        filter=lambda record: record["extra"].get("task", "stderr") == "stderr",
    )
    logger.add(
        sys.stdout,
        colorize=True,
        format="<blue>{level}:</blue> <green>{message}</green>",
        filter=lambda record: record["extra"].get("task") == "stdout",
    )


_configure_sinks()


@click.group(context_settings=dict(help_option_names=["-h", "--help"]))
@click.version_option(version=__version__)
@click.option(
    "-v",
    "--verbose",
    required=False,
    default=False,
    is_flag=True,
    help="Log debug messages to STDERR",
)
def cli(verbose: bool) -> None:
    """main cli command group"""
    _configure_sinks(verbose=verbose)


@cli.command()
@click.argument("scenario", type=click.Path())
@click.option(
    "--seed",
    required=False,
    type=int,
    default=None,
    help="Overrides the seed of the scenario",
)
@click.option(
    "-o",
    "--output-dir",
    required=False,
    type=click.Path(),
    default=None,
    help="Output directory, overrides the scenario and INFLUNET_OUTPUT_DIR",
)
@click.option(
    "--format",
    "trajectory_format",
    type=click.Choice([member.value for member in TrajectoryFormat]),
    default=TrajectoryFormat.csv.value,
    show_default=True,
    help="File format of the trajectories",
)
@exitOnException
@LOG_STDERR.catch(exclude=INPUT_ERRORS, reraise=True)
def run(scenario: str, seed: Optional[int], output_dir: Optional[str], trajectory_format: str):
    """Run a scenario (JSON or YAML).

    Writes the trajectory of every pipeline the mode runs as CSV or JSON
    records, compare mode also writes a JSON report.

    Exit codes: 0 ok, 1 tolerance failure or run stopped on a domain violation, 2 input error.
    """
    result = run_scenario_file(
        scenario, output_dir=output_dir, seed=seed, trajectory_format=TrajectoryFormat(trajectory_format)
    )
    for path in result.files:
        LOG_STDOUT.info("wrote {}", path)
    if result.report is not None:
        LOG_STDOUT.info(
            "{}: slope {:.6e}, expected {:.6e}, passed: {}",
            result.scenario,
            result.report["slopes"]["discrete"],
            result.report["acceleration"],
            result.report["passed"],
        )
    sys.exit(result.exit_code)


@cli.command(name="export-network")
@click.argument("source")
@click.option(
    "-o",
    "--output-file",
    required=False,
    type=click.File("w"),
    help="Output file, STDOUT is used otherwise",
)
@exitOnException
@LOG_STDERR.catch(exclude=INPUT_ERRORS, reraise=True)
def export_network(source: str, output_file):
    """Export the Hasse diagram of a network as DOT.

    SOURCE is a network file (JSON or YAML) or bundled:<name>, e.g. bundled:emitter.
    Collinearity violations on particle chains are reported as warnings.
    """
    network = load_network(source)
    for chain in network.chains:
        if chain.role is not ChainRole.particle:
            continue
        if any(event.side is None for event in chain.events):
            continue
        for violation in network.collinearity_scan(chain):
            LOG_STDERR.warning(
                "collinearity violation on chain {}: emission {} to {} is followed by reception {} from {}",
                chain.id,
                violation.emission,
                violation.side.value,
                violation.reception,
                violation.side.value,
            )

    dot = export_hasse(network)
    if output_file:
        output_file.write(dot)
    else:
        click.echo(dot, nl=False)


@cli.command()
@click.argument("directory", type=click.Path())
@click.option(
    "-j",
    "--jobs",
    required=False,
    type=click.IntRange(min=1),
    default=1,
    help="Number of scenarios run in parallel",
)
@click.option(
    "--seed",
    required=False,
    type=int,
    default=None,
    help="Overrides the seed of every scenario",
)
@click.option(
    "-o",
    "--output-dir",
    required=False,
    type=click.Path(),
    default=None,
    help="Output directory, overrides the scenarios and INFLUNET_OUTPUT_DIR",
)
@exitOnException
@LOG_STDERR.catch(exclude=INPUT_ERRORS, reraise=True)
def batch(directory: str, jobs: int, seed: Optional[int], output_dir: Optional[str]):
    """Run every scenario file of DIRECTORY.

    Exits with the worst exit code of all scenarios.
    """
    results = run_batch(directory, output_dir=output_dir, jobs=jobs, seed=seed)
    for result in results:
        LOG_STDOUT.info("{}: exit code {}", result.scenario, result.exit_code)
    sys.exit(batch_exit_code(results))

# -*- coding: utf-8 -*-
"""
Scenario runner: executes the discrete, continuum and analytic pipelines of a
scenario, writes trajectory CSV (or JSON) files and, in compare mode, a JSON report.
"""

# pylint: disable=C0301 # Line too long

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
from loguru import logger

from .dynamics import ParticleState, Simulator
from .exceptions import INPUT_ERRORS, DomainError
from .geodesic.integrator import integrate
from .geodesic.oracle import HyperbolicMotion, HyperbolicParams, geodesic_residuals, oracle_deviation, point_distances, scaled_rms
from .scenario import Scenario, load_scenario
from .settings import INFLUNETSETTINGS
from .trajectory import Trajectory
from .types import Mode, TrajectoryFormat
from .utils import EXIT_INPUT_ERROR, EXIT_OK, EXIT_TOLERANCE

__all__ = ["RunResult", "ScenarioRunner", "run_scenario_file", "run_batch", "SCENARIO_SUFFIXES"]

SCENARIO_SUFFIXES = (".json", ".yaml", ".yml")


@dataclass
class RunResult:
    """Outcome of one scenario run"""

    scenario: str
    exit_code: int
    files: List[str] = field(default_factory=list)
    report: Optional[dict] = None
    error: Optional[str] = None


def _relative(value: float, reference: float) -> float:
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


class ScenarioRunner:
    """Runs the pipelines of one scenario.

    :param scenario: validated scenario
    :param output_dir: output directory, overrides the scenario and the OUTPUT_DIR setting
    :param trajectory_format: file format of the trajectories, the report is always JSON
    """

    def __init__(
        self,
        scenario: Scenario,
        output_dir: Optional[Union[str, Path]] = None,
        trajectory_format: TrajectoryFormat = TrajectoryFormat.csv,
    ):
        self.scenario = scenario
        self.trajectory_format = TrajectoryFormat(trajectory_format)
        self.output_dir = Path(
            output_dir or scenario.outputs.directory or INFLUNETSETTINGS.OUTPUT_DIR
        )
        self._files: List[str] = []

    def _write(self, trajectory: Trajectory) -> None:
        path = self.output_dir / f"{self.scenario.prefix}.{trajectory.source}.{self.trajectory_format.value}"
        if self.trajectory_format is TrajectoryFormat.json:
            trajectory.write_json(path)
        else:
            trajectory.write_csv(path)
        self._files.append(str(path))

    def discrete(self) -> Trajectory:
        scenario = self.scenario
        simulator = Simulator(
            scenario.rate_source(),
            seed=scenario.seed,
            gap_mode=scenario.gap_mode,
            arithmetic=scenario.arithmetic,
            no_op_probability=scenario.no_op_probability,
        )
        initial = ParticleState(
            k=scenario.initial.k_value, t=scenario.initial.t, x=scenario.initial.x
        )
        return simulator.run(initial, scenario.receptions, strict=False)

    def continuum(self, tau_span: float) -> Trajectory:
        scenario = self.scenario
        return integrate(
            scenario.field(),
            (scenario.initial.t, scenario.initial.x, scenario.initial.phi_value),
            tau_span,
            scenario.integration_step(),
            truncation=scenario.truncation,
            renormalize=scenario.renormalize,
        )

    def motion(self) -> HyperbolicMotion:
        scenario = self.scenario
        return HyperbolicMotion(
            HyperbolicParams.from_rates(
                scenario.constant_rates,
                t0=scenario.initial.t,
                x0=scenario.initial.x,
                phi0=scenario.initial.phi_value,
            )
        )

    def analytic(self, taus) -> Trajectory:
        return self.motion().sample(taus)

    def run(self) -> RunResult:
        mode = self.scenario.mode
        logger.debug("running scenario {} in {} mode", self.scenario.name, mode.value)
        if mode is Mode.compare:
            return self._compare()

        if mode is Mode.discrete:
            trajectory = self.discrete()
        elif mode is Mode.continuum:
            trajectory = self.continuum(self.scenario.tau_span)
        else:
            step = self.scenario.integration_step()
            trajectory = self.analytic(np.arange(0.0, self.scenario.tau_span + 0.5 * step, step))
        self._write(trajectory)
        exit_code = EXIT_TOLERANCE if trajectory.truncated else EXIT_OK
        return RunResult(self.scenario.name, exit_code, list(self._files))

    def _residuals(self, trajectory: Trajectory, field_object) -> Optional[Dict]:
        try:
            return geodesic_residuals(trajectory, field_object, self.scenario.truncation).as_dict()
        except DomainError as exc:
            logger.warning("no geodesic residuals for {} trajectory: {}", trajectory.source, exc)
            return None

    def _compare(self) -> RunResult:
        scenario = self.scenario
        discrete = self.discrete()
        self._write(discrete)
        tau_span = scenario.tau_span
        if tau_span is None:
            if not len(discrete):
                raise DomainError("discrete trajectory is empty, no tau span for the continuum run")
            tau_span = float(discrete[-1].tau)
        continuum = self.continuum(tau_span)
        self._write(continuum)
        motion = self.motion()
        analytic = self.analytic(continuum.taus)
        self._write(analytic)

        acceleration = motion.params.a
        discrete_slope, _ = discrete.fit_rapidity_slope()
        continuum_slope, _ = continuum.fit_rapidity_slope()
        max_abs, max_relative = oracle_deviation(continuum, motion)
        rms = scaled_rms(point_distances(continuum.positions, analytic.positions))

        deviations = {
            "discrete_slope": _relative(discrete_slope, acceleration),
            "continuum_slope": _relative(continuum_slope, acceleration),
            "discrete_continuum_slope": _relative(discrete_slope, continuum_slope),
            "oracle_max_abs": max_abs,
            "oracle_max_relative": max_relative,
            "oracle_rms": rms,
        }
        tolerances = scenario.tolerances
        checks = {
            "slope": deviations["discrete_slope"] <= tolerances.slope,
            "oracle": deviations["oracle_max_relative"] <= tolerances.oracle,
            "agreement": deviations["discrete_continuum_slope"] <= tolerances.agreement,
            "complete": not (discrete.truncated or continuum.truncated),
        }
        field_object = scenario.field()
        report = {
            "scenario": scenario.name,
            "mode": scenario.mode.value,
            "seed": scenario.seed,
            "gap_mode": scenario.gap_mode.value,
            "truncation": scenario.truncation.value,
            "acceleration": acceleration,
            "slopes": {
                "discrete": discrete_slope,
                "continuum": continuum_slope,
                "analytic": acceleration,
            },
            "deviations": deviations,
            "residuals": {
                "discrete": self._residuals(discrete, field_object),
                "continuum": self._residuals(continuum, field_object),
            },
            "tolerances": tolerances.dict(),
            "checks": checks,
            "diagnostics": discrete.diagnostics + continuum.diagnostics,
            "passed": all(checks.values()),
        }
        path = self.output_dir / f"{scenario.prefix}.report.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(report, indent=4, sort_keys=True) + "\n", encoding="utf-8")
        self._files.append(str(path))

        for name, passed in sorted(checks.items()):
            if not passed:
                logger.warning("scenario {}: check '{}' failed", scenario.name, name)
        exit_code = EXIT_OK if report["passed"] else EXIT_TOLERANCE
        return RunResult(scenario.name, exit_code, list(self._files), report=report)


def run_scenario_file(
    path: Union[str, Path],
    output_dir: Optional[Union[str, Path]] = None,
    seed: Optional[int] = None,
    trajectory_format: TrajectoryFormat = TrajectoryFormat.csv,
) -> RunResult:
    """Loads and runs a scenario file. Input errors propagate, domain errors end the run with exit code 1."""
    scenario = load_scenario(path, seed=seed)
    try:
        return ScenarioRunner(scenario, output_dir=output_dir, trajectory_format=trajectory_format).run()
    except DomainError as exc:
        logger.error("scenario {} failed: {}", scenario.name, exc)
        return RunResult(scenario.name, EXIT_TOLERANCE, error=str(exc))


def _run_isolated(path: str, output_dir: Optional[str], seed: Optional[int]) -> RunResult:
    """Batch worker, input errors become a result with exit code 2."""
    try:
        return run_scenario_file(path, output_dir=output_dir, seed=seed)
    except INPUT_ERRORS as exc:
        logger.error("{}: {}", path, exc)
        return RunResult(Path(path).stem, EXIT_INPUT_ERROR, error=str(exc))


def run_batch(
    directory: Union[str, Path],
    output_dir: Optional[Union[str, Path]] = None,
    jobs: int = 1,
    seed: Optional[int] = None,
) -> List[RunResult]:
    """Runs every scenario file of ``directory``, ``jobs`` processes in parallel.

    Results are returned in file name order.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"scenario directory not found: {directory}")
    paths = sorted(str(path) for path in directory.iterdir() if path.suffix in SCENARIO_SUFFIXES)
    output_dir = str(output_dir) if output_dir is not None else None
    if jobs <= 1 or len(paths) <= 1:
        return [_run_isolated(path, output_dir, seed) for path in paths]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(
            executor.map(
                _run_isolated,
                paths,
                [output_dir] * len(paths),
                [seed] * len(paths),
            )
        )


def batch_exit_code(results: List[RunResult]) -> int:
    """Worst exit code of a batch, 2 before 1 before 0."""
    return max((result.exit_code for result in results), default=EXIT_OK)

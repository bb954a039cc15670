# -*- coding: utf-8 -*-
"""
Trajectories sampled by the discrete simulator, the integrator or the analytic oracle.

All three pipelines produce the same record schema, CSV header ``tau,t,x,v,k,side,gap``
with side and gap left empty for continuum rows.
"""

# pylint: disable=C0301 # Line too long

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np
from loguru import logger

from .exceptions import DomainError
from .settings import INFLUNETSETTINGS
from .types import Side
from .utils import ListLike, Number

__all__ = ["CSV_HEADER", "TrajectoryPoint", "Trajectory"]

CSV_HEADER = ("tau", "t", "x", "v", "k", "side", "gap")


@dataclass(frozen=True)
class TrajectoryPoint:
    """A sample (τ, t, x, v, k) along a worldline."""

    tau: Number
    t: Number
    x: Number
    v: Number
    k: Number
    side: Optional[Side] = None
    gap: Optional[int] = None

    @property
    def rapidity(self) -> float:
        return math.log(self.k)

    def as_record(self) -> dict:
        return {
            "tau": float(self.tau),
            "t": float(self.t),
            "x": float(self.x),
            "v": float(self.v),
            "k": float(self.k),
            "side": self.side.value if self.side is not None else None,
            "gap": self.gap,
        }


class Trajectory(ListLike):
    """Ordered trajectory samples of one pipeline run.

    :param points: samples in ascending τ
    :param source: name of the producing pipeline
    :param truncated: True when the run stopped early on a domain violation
    :param diagnostics: messages explaining a truncation or drift
    """

    def __init__(
        self,
        points: Iterable[TrajectoryPoint] = (),
        source: str = "discrete",
        truncated: bool = False,
        diagnostics: Iterable[str] = (),
    ):
        self._list: List[TrajectoryPoint] = list(points)
        self.source = source
        self.truncated = truncated
        self.diagnostics: List[str] = list(diagnostics)

    def __eq__(self, other) -> bool:
        return list(self._list) == list(other)

    @property
    def taus(self) -> np.ndarray:
        return np.array([float(point.tau) for point in self._list])

    @property
    def positions(self) -> np.ndarray:
        """(n, 2) array of (t, x)"""
        return np.array([[float(point.t), float(point.x)] for point in self._list]).reshape(-1, 2)

    @property
    def rapidities(self) -> np.ndarray:
        return np.array([point.rapidity for point in self._list])

    def fit_rapidity_slope(self) -> Tuple[float, float]:
        """Least squares fit φ = slope·τ + intercept on φ = ln k.

        Returns (slope, intercept). For a constant rate field the slope is the
        proper acceleration.
        """
        if len(self._list) < 2:
            raise DomainError(
                f"rapidity fit needs at least 2 samples, {self.source} trajectory has {len(self._list)}"
            )
        slope, intercept = np.polyfit(self.taus, self.rapidities, 1)
        logger.debug("{} rapidity slope: {:.6e}", self.source, slope)
        return float(slope), float(intercept)

    def to_records(self) -> List[dict]:
        return [point.as_record() for point in self._list]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=4, sort_keys=True)

    def to_csv(self, float_format: Optional[str] = None) -> str:
        """CSV text with header ``tau,t,x,v,k,side,gap``.

        Floats are written with ``float_format`` (default: CSV_FLOAT_FORMAT setting),
        the ``.17g`` default makes reruns byte-identical.
        """
        float_format = float_format or INFLUNETSETTINGS.CSV_FLOAT_FORMAT
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for point in self._list:
            writer.writerow(
                [
                    format(float(getattr(point, column)), float_format)
                    for column in ("tau", "t", "x", "v", "k")
                ]
                + [
                    point.side.value if point.side is not None else "",
                    point.gap if point.gap is not None else "",
                ]
            )
        return buffer.getvalue()

    def write_csv(self, path: Union[str, Path], float_format: Optional[str] = None) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_csv(float_format=float_format), encoding="utf-8")
        logger.debug("wrote {} samples to {}", len(self._list), path)
        return path

    def write_json(self, path: Union[str, Path]) -> Path:
        """JSON array of the sample records, one object per sample."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        logger.debug("wrote {} samples to {}", len(self._list), path)
        return path

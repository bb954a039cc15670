# -*- coding: utf-8 -*-
import json
import math
from fractions import Fraction
from pathlib import Path

import pytest

from influnet.exceptions import DomainError
from influnet.trajectory import CSV_HEADER, Trajectory, TrajectoryPoint
from influnet.types import Side
from tests.utils import fixture_tmpdir


@pytest.fixture
def trajectory():
    return Trajectory(
        [
            TrajectoryPoint(tau=Fraction(1, 2), t=1, x=0, v=0, k=1, side=Side.Q, gap=2),
            TrajectoryPoint(tau=Fraction(3, 2), t=2, x=1, v=Fraction(3, 5), k=2, side=Side.P, gap=3),
        ],
        source="discrete",
    )


class Test_TrajectoryPoint:
    @staticmethod
    def test_rapidity():
        assert TrajectoryPoint(tau=0, t=0, x=0, v=0, k=math.e).rapidity == pytest.approx(1.0)

    @staticmethod
    def test_as_record():
        record = TrajectoryPoint(tau=Fraction(1, 2), t=1, x=0, v=0, k=1).as_record()
        assert record == {"tau": 0.5, "t": 1.0, "x": 0.0, "v": 0.0, "k": 1.0, "side": None, "gap": None}


class Test_Trajectory:
    @staticmethod
    def test_arrays(trajectory):
        assert trajectory.taus.tolist() == [0.5, 1.5]
        assert trajectory.positions.tolist() == [[1.0, 0.0], [2.0, 1.0]]
        assert trajectory.rapidities[1] == pytest.approx(math.log(2))

    @staticmethod
    def test_empty():
        empty = Trajectory(source="continuum")
        assert len(empty) == 0
        assert empty.positions.shape == (0, 2)
        assert not empty.truncated

    @staticmethod
    def test_fit_rapidity_slope(trajectory):
        slope, intercept = trajectory.fit_rapidity_slope()
        assert slope == pytest.approx(math.log(2))
        assert intercept == pytest.approx(-0.5 * math.log(2))

    @staticmethod
    def test_fit_needs_two_samples(trajectory):
        with pytest.raises(DomainError, match="at least 2 samples"):
            Trajectory(trajectory[:1], source="analytic").fit_rapidity_slope()

    @staticmethod
    def test_equality(trajectory):
        assert trajectory == list(trajectory)
        assert trajectory != Trajectory(trajectory[:1])


class Test_export:
    @staticmethod
    def test_csv(trajectory):
        lines = trajectory.to_csv().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1] == "0.5,1,0,0,1,Q,2"
        assert lines[2] == "1.5,2,1,0.59999999999999998,2,P,3"

    @staticmethod
    def test_csv_float_format(trajectory):
        assert trajectory.to_csv(float_format=".3f").splitlines()[2] == "1.500,2.000,1.000,0.600,2.000,P,3"

    @staticmethod
    def test_csv_continuum_rows():
        row = Trajectory([TrajectoryPoint(tau=0, t=0, x=0, v=0, k=1)]).to_csv().splitlines()[1]
        assert row == "0,0,0,0,1,,"

    @staticmethod
    def test_json(trajectory):
        records = json.loads(trajectory.to_json())
        assert records[1]["side"] == "P"
        assert records[0]["tau"] == 0.5

    @staticmethod
    def test_write_csv(trajectory, fixture_tmpdir):
        path = trajectory.write_csv(Path(fixture_tmpdir) / "nested" / "run.discrete.csv")
        assert path.is_file()
        assert path.read_text(encoding="utf-8") == trajectory.to_csv()

    @staticmethod
    def test_write_json(trajectory, fixture_tmpdir):
        path = trajectory.write_json(Path(fixture_tmpdir) / "nested" / "run.discrete.json")
        assert json.loads(path.read_text(encoding="utf-8")) == trajectory.to_records()

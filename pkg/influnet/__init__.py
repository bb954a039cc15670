# -*- coding: utf-8 -*-
"""Top-level package for InfluNet."""

__author__ = """InfluNet developers"""
__version__ = "0.3.0"  # pyproject.toml
__projectname__ = "InfluNet"
# pylint: disable=line-too-long
__description__ = "InfluNet simulates influenced particles on the influence network and checks their trajectories against equations of geodesic form."

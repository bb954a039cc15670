# -*- coding: utf-8 -*-
"""Top-level script for InfluNet."""

from .cli import cli

if __name__ == "__main__":
    cli()

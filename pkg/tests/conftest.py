"""Shared fixtures: every root system the sweeps touch, built once per session."""

import pytest

from gammaroots.rootsys import RootSystemId, build

ALL_IDS = (
    [("A", n) for n in range(1, 13)]
    + [("B", n) for n in range(2, 13)]
    + [("C", n) for n in range(2, 13)]
    + [("D", n) for n in range(3, 13)]
    + [("E", n) for n in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)


@pytest.fixture(scope="session")
def systems():
    return {(family, rank): build(RootSystemId(family, rank)) for family, rank in ALL_IDS}

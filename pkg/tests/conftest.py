"""Shared fixtures: small exactly-specified distribution pairs that
exercise every interesting dominance configuration."""

from __future__ import annotations

import pytest

from stochdom import dist_validate, point_mass, rat


@pytest.fixture
def jumpy_pair():
    """Two far-apart atoms against a nearly degenerate pair: inverse
    third-order dominance holds although the dominated side has the
    LARGER mean."""
    x = dist_validate([(0, "0.5"), (10, "0.5")])
    y = dist_validate([(4, "0.9"), ("4.1", "0.1")])
    return x, y


@pytest.fixture
def spread_vs_point():
    """Symmetric two-pointer against a point mass above its mean: inverse
    third-order dominance with the dominated side's mean SMALLER."""
    x = dist_validate([(1, "0.5"), (3, "0.5")])
    y = point_mass("2.5")
    return x, y


def symmetric_vs_zero(a):
    """{-a, +a} fifty-fifty against the zero point mass."""
    x = dist_validate([(-rat(a), "0.5"), (rat(a), "0.5")])
    return x, point_mass(0)


@pytest.fixture
def crossing_triples():
    """Equal-mean three-atom pair whose mu_{1:2} and mu_{1:3} rank in
    opposite directions; inverse fourth-order dominance holds."""
    x = dist_validate([(0, "0.2"), (4, "0.5"), (5, "0.3")])
    y = dist_validate([(1, "0.2"), (3, "0.5"), (6, "0.3")])
    return x, y


@pytest.fixture
def strong_triples():
    """Three-atom pair with expected minima matched through two draws:
    a strict strong inverse third-order pair."""
    x = dist_validate([(0, "0.2"), (4, "0.5"), (5, "0.3")])
    y = dist_validate([(1, "0.2"), ("13/4", "0.5"), ("67/12", "0.3")])
    return x, y


@pytest.fixture
def mps_pair():
    """A mean-preserving spread pair: {1,3} versus its contraction at 2."""
    return dist_validate([(1, "0.5"), (3, "0.5")]), point_mass(2)

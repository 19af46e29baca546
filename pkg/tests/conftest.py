"""Pytest configuration and fixtures."""

import pytest

from src.cantor import BasicSet, CantorPoint, Tail
from src.group import Cover, GroupElement
from src.verifier.models import TestCampaign


@pytest.fixture
def zero():
    """The point 0 = 0.000..."""
    return CantorPoint.zero()


@pytest.fixture
def one_third():
    """The point 1/3 = 0.0222..., the right endpoint of U_0."""
    return CantorPoint("0", Tail.TWOS)


@pytest.fixture
def three_points():
    """F = {0, 2, 22}: maximal even part U_2, r(F) = 0."""
    return GroupElement.of("0", "2", "22")


@pytest.fixture
def left_pair():
    """F = {0, 02, 2}: maximal even part U_0, r(F) = 2."""
    return GroupElement.of("0", "02", "2")


@pytest.fixture
def halves():
    """The cover {U_0, U_2}."""
    return Cover((BasicSet("0"), BasicSet("2")))


@pytest.fixture
def small_campaign():
    """A campaign small enough to run every suite in a unit test."""
    return TestCampaign(
        seed=11,
        max_set_size=5,
        max_word_length=3,
        enum_depth=4,
        enum_cap=40,
        cases=12,
        covers=3,
        triples_per_cover=12,
        grid_depth=2,
        neighborhood_depth=2,
    )

"""Shared fixtures: small spaces used across the suite."""

import pytest

from idealtop import Ideal, IdealSpace, sierpinski


@pytest.fixture
def sierp():
    return sierpinski()


@pytest.fixture
def sierp_space(sierp):
    """Sierpinski topology with the {1}-carrier ideal."""
    return IdealSpace(sierp, Ideal(2, 0b10))

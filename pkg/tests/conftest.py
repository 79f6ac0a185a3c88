import random

import pytest

from skh.diagram import (
    annular_closure,
    braid_word_diagram,
    figure_eight_cut,
    identity_tangle,
    parse,
    trefoil_cut,
    turnback_tangle,
    unknot_cut,
)

CIRCLE_TEXT = "tangle v1\nstrands 0\nCUP 1\nCAP 1\n"


@pytest.fixture
def circle():
    """A single closed trivial circle, no boundary."""
    return parse(CIRCLE_TEXT)


@pytest.fixture
def sigma1():
    return braid_word_diagram(2, [1])


@pytest.fixture
def sigma1_closure(sigma1):
    return annular_closure(sigma1)


@pytest.fixture
def turnback():
    return turnback_tangle()


@pytest.fixture
def trefoil():
    return trefoil_cut()


@pytest.fixture
def figure_eight():
    return figure_eight_cut()


@pytest.fixture
def unknot():
    return unknot_cut()


@pytest.fixture
def id2():
    return identity_tangle(2)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)

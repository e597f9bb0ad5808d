import pytest

from braidhopf.examples import braided_line, braided_line_yd, sweedler, group_algebra
from braidhopf.fields import RationalField
from braidhopf.graded import BraidedContext


@pytest.fixture(scope="session")
def rational_ctx():
    return BraidedContext(RationalField())


@pytest.fixture(scope="session")
def h4():
    return sweedler()


@pytest.fixture(scope="session")
def b3():
    return braided_line(3, 7)


@pytest.fixture(scope="session")
def line_yd():
    return braided_line_yd(3, 7)


@pytest.fixture(scope="session")
def kz2(rational_ctx):
    return group_algebra(rational_ctx, 2)

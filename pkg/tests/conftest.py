import pytest

from bibmet import fixtures

SAMPLE_WOS = """\
FN Export
VR 1.0
PT J
AU Smith, A
   Jones, B
TI Something about heads
PY 2015
UT WOS:000000000000001
ER

PT J
AU Garcia, C
PY 2015
UT WOS:000000000000002
ER

PT J
AU Nguyen, D
   Patel, E
   Smith, A
PY 2016
UT WOS:000000000000003
ER
EF
"""


@pytest.fixture
def sample_wos_text():
    return SAMPLE_WOS


@pytest.fixture
def yearly_fixture():
    return fixtures.yearly_counts()


@pytest.fixture
def authorship_fixture():
    return fixtures.authorship_matrix()


@pytest.fixture
def collab_fixture():
    return fixtures.collaboration_matrix()


@pytest.fixture
def productivity_fixture():
    return fixtures.author_productivity()


@pytest.fixture
def regression_fixture():
    return fixtures.author_productivity_regression()

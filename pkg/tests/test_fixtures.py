"""Integrity checks for the bundled reference dataset."""

from bibmet import fixtures


def test_yearly_totals(yearly_fixture):
    assert yearly_fixture.years == tuple(range(2008, 2018))
    assert yearly_fixture.total == 8486
    assert yearly_fixture.cumulative[-1] == 8486
    assert yearly_fixture.count(2008) == 331
    assert yearly_fixture.count(2017) == 1494


def test_authorship_matrix_shape(authorship_fixture):
    m = authorship_fixture
    assert not m.collapsed
    assert m.years == tuple(range(2008, 2018))
    assert m.classes[0] == 1 and m.classes[-1] == 50
    assert m.grand_total == 7482
    assert m.author_slots() == 41264


def test_authorship_year_totals(authorship_fixture):
    expected = {2008: 330, 2009: 477, 2010: 487, 2011: 582, 2012: 768,
                2013: 862, 2014: 1026, 2015: 1124, 2016: 1332, 2017: 494}
    for year, total in expected.items():
        assert authorship_fixture.year_total(year) == total


def test_collapsed_matrix_matches_published_top_row(collab_fixture):
    # the published collapsed table's ">= 10" row
    top = {2008: 18, 2009: 18, 2010: 26, 2011: 38, 2012: 61,
           2013: 89, 2014: 108, 2015: 127, 2016: 179, 2017: 101}
    assert collab_fixture.collapsed and collab_fixture.cap == 10
    for year, count in top.items():
        assert collab_fixture.class_counts(year)[10] == count
    assert collab_fixture.class_total(10) == 765
    assert collab_fixture.grand_total == 7482


def test_productivity_totals(productivity_fixture):
    assert productivity_fixture.xs == tuple(range(1, 11))
    assert productivity_fixture.total_authors == 23767
    assert dict(productivity_fixture.pairs)[9] == 113


def test_regression_variant_differs_only_at_x9(productivity_fixture,
                                               regression_fixture):
    counted = dict(productivity_fixture.pairs)
    regressed = dict(regression_fixture.pairs)
    assert regressed.pop(9) == 133
    assert counted.pop(9) == 113
    assert counted == regressed


def test_fixture_paths_exist():
    for name in (fixtures.YEARLY, fixtures.AUTHORSHIP,
                 fixtures.PRODUCTIVITY, fixtures.PRODUCTIVITY_REGRESSION):
        assert fixtures.fixture_path(name).exists()

import pytest

from automata.configuration import Configuration
from conftest import word
from search import SearchBoundsError
from search.fixed_points import fixed_point_existence, isolated_fixed_points


def _words(configs):
    return {str(x) for x in configs}


def _rotations(text):
    x = word(text)
    return {str(x.rotate(shift)) for shift in range(x.n)}


def test_alternating_fixed_points():
    assert _words(fixed_point_existence(7, 6).fixed_points) == {"010101", "101010"}
    assert not fixed_point_existence(7, 5).exists


@pytest.mark.parametrize("rule", [7, 15, 23])
@pytest.mark.parametrize("n", range(4, 13))
def test_rules_fixing_alternation_on_even_rings(rule, n):
    expected = _rotations("01" * (n // 2)) if n % 2 == 0 else set()
    assert _words(fixed_point_existence(rule, n).fixed_points) == expected


@pytest.mark.parametrize("rule", [45, 37])
@pytest.mark.parametrize("n", range(4, 13))
def test_period_three_fixed_points(rule, n):
    expected = _rotations("001" * (n // 3)) if n % 3 == 0 else set()
    assert _words(fixed_point_existence(rule, n).fixed_points) == expected


@pytest.mark.parametrize("n, expected", [
    (8, {"00110011", "10011001", "11001100", "01100110"}),
    (6, set()),
])
def test_rule_105_fixed_points(n, expected):
    assert _words(fixed_point_existence(105, n).fixed_points) == expected


def test_fixed_point_report_document():
    document = fixed_point_existence(45, 6).to_dict()
    assert document == {"rule": 45, "n": 6, "exists": True,
                        "fixed_points": ["100100", "010010", "001001"]}


def test_isolated_zero():
    report = isolated_fixed_points(38, 6)
    assert report.isolated == frozenset({Configuration.uniform(6, 0)})
    assert report.fixed_points == report.isolated


def test_isolated_uniform_and_alternating():
    report = isolated_fixed_points(134, 6)
    assert _words(report.isolated) == {"000000", "111111", "010101", "101010"}


def test_identity_rule_is_degenerate():
    report = isolated_fixed_points(204, 4)
    assert report.degenerate
    assert report.isolated == frozenset()
    assert len(report.fixed_points) == 16
    assert report.to_dict()["degenerate"] is True


def test_fixed_points_reached_from_elsewhere_are_not_isolated():
    # 2 sends 10000 to 00000 under (4,3,2,1,0)
    report = isolated_fixed_points(2, 5)
    assert Configuration.uniform(5, 0) in report.fixed_points
    assert Configuration.uniform(5, 0) not in report.isolated


def test_isolation_bound():
    with pytest.raises(SearchBoundsError, match="n <= 8"):
        isolated_fixed_points(38, 9)

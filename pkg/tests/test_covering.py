import pytest

from automata.configuration import InputError, all_configurations
from automata.dynamics import DynamicalSystem, fixed_points_parallel, orbit
from automata.modes import SequentialMode, representative_modes
from automata.rules import RuleTable
from conftest import word
from search import SearchBoundsError
from search.covering import (find_composed_mode, find_covering, non_convergent_configs,
                             periodic_cover, word_blocker_check)


def _assert_covering_holds(result):
    n = result.n
    assert result.found
    assert set(result.assignment) == set(all_configurations(n))
    for x, mode in result.assignment.items():
        assert mode in result.modes
        assert orbit(DynamicalSystem(result.rule, n, mode), x).reaches_fixed_point


@pytest.mark.parametrize("rule", [18, 50, 146, 178])
@pytest.mark.parametrize("n", range(5, 9))
def test_coverings_exist(rule, n):
    assert find_covering(rule, n).found


@pytest.mark.parametrize("rule, n, found", [
    (74, 5, False), (74, 6, True), (74, 7, False), (74, 8, False),
    (122, 5, False), (122, 6, False), (122, 7, False), (122, 8, False),
])
def test_coverings_of_rules_74_and_122(rule, n, found):
    result = find_covering(rule, n)
    assert result.found == found
    assert bool(result.uncovered) != found


def test_greedy_covering_is_sound():
    _assert_covering_holds(find_covering(18, 6))


def test_exact_covering_is_sound_and_no_larger():
    exact = find_covering(18, 5, "exact")
    _assert_covering_holds(exact)
    assert len(exact.modes) <= len(find_covering(18, 5, "greedy").modes)


def test_identity_rule_needs_one_mode():
    result = find_covering(204, 5, "exact")
    assert len(result.modes) == 1


@pytest.mark.parametrize("n", range(5, 9))
def test_rule_104_covering(n):
    assert find_covering(104, n).found


@pytest.mark.parametrize("n", [5, 7, 9])
def test_rule_106_never_converges_somewhere_on_odd_rings(n):
    assert non_convergent_configs(106, n)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_rule_90_has_no_covering(n):
    result = find_covering(90, n)
    assert not result.found
    assert result.modes is None
    pair = word("11" + "0" * (n - 2))
    assert {pair.rotate(shift) for shift in range(n)} <= result.uncovered
    document = result.to_dict()
    assert document["covering"] is None
    assert str(pair.rotate(1)) in document["witnesses"]


@pytest.mark.parametrize("n", [6, 8])
def test_rule_90_covering_on_six_and_eight_cells(n):
    _assert_covering_holds(find_covering(90, n))


def test_covering_document():
    document = find_covering(204, 4, "exact").to_dict()
    assert document["strategy"] == "exact"
    assert len(document["covering"]) == 1
    assert len(document["assignment"]) == 16
    assert document["witnesses"] == []


def test_covering_arguments():
    with pytest.raises(InputError):
        find_covering(18, 6, "random")
    with pytest.raises(SearchBoundsError, match="n <= 9"):
        find_covering(18, 10, "exact")


def test_non_convergent_configurations():
    assert word("001000") not in non_convergent_configs(37, 6)
    assert word("0001100") in non_convergent_configs(90, 7)
    assert non_convergent_configs(8, 6) == frozenset()


def test_rule_37_leaves_001000_under_one_order():
    record = orbit(DynamicalSystem(37, 6, SequentialMode((0, 1, 2, 5, 4, 3))), word("001000"))
    assert [str(x) for x in record.states] == ["001000", "110010", "010010"]
    assert record.reaches_fixed_point


def test_non_convergent_configurations_cycle_under_every_mode():
    stuck = sorted(non_convergent_configs(106, 5))[:3]
    assert stuck
    for mode in representative_modes(5):
        system = DynamicalSystem(106, 5, mode)
        for x in stuck:
            assert orbit(system, x).cycle >= 2


@pytest.mark.parametrize("rule, text", [(28, "01001"), (29, "01001"), (108, "0011100")])
@pytest.mark.parametrize("n", [7, 8])
def test_blocking_words(rule, n, text):
    assert word_blocker_check(rule, n, text)


def test_non_blocking_word():
    assert not word_blocker_check(204, 6, "01")


@pytest.mark.parametrize("text", ["", "012", "0100100"])
def test_blocking_word_arguments(text):
    with pytest.raises(InputError):
        word_blocker_check(28, 6, text)


def test_rule_45_periodic_cover():
    cover = periodic_cover(45, 6)
    assert cover.complete
    assert len(cover.assignment) == 64
    targets = fixed_points_parallel(RuleTable.from_code(45), 6)
    for x in sorted(cover.assignment)[:8]:
        mode = cover.assignment[x]
        assert mode.period == 12
        record = orbit(DynamicalSystem(45, 6, mode), x)
        assert record.reaches_fixed_point
        assert record.cycle_states[0] in targets


def test_composed_mode_for_one_configuration():
    x = word("000000")
    mode = find_composed_mode(45, 6, x)
    assert mode is not None
    assert not mode.is_sequential
    assert orbit(DynamicalSystem(45, 6, mode), x).reaches_fixed_point


def test_composed_mode_needs_fixed_points():
    assert find_composed_mode(1, 5, word("00000")) is None
    assert not periodic_cover(1, 5).complete

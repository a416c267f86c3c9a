import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from automata import kernels
from automata.configuration import Configuration, InputError, all_configurations
from automata.dynamics import DynamicalSystem, fixed_points_parallel, orbit, step, substep
from automata.modes import (SequentialMode, UpdateMode, forward_sweep, parallel_mode,
                            representative_modes, reverse_sweep, stride_sweep)
from automata.rules import RuleTable, parallel_step, symmetry_representatives
from conftest import configurations, sequential_modes, word
from search.enumeration import representatives_array


def test_substep_updates_only_the_block():
    system = DynamicalSystem(45, 4, forward_sweep(4))
    assert str(substep(system, word("0100"), {3})) == "0101"
    system = DynamicalSystem(104, 4, forward_sweep(4))
    assert str(substep(system, word("0110"), {1})) == "0110"


@pytest.mark.parametrize("block", [set(), {4}, {-1}])
def test_substep_rejects_bad_blocks(block):
    system = DynamicalSystem(45, 4, forward_sweep(4))
    with pytest.raises(InputError):
        substep(system, word("0100"), block)


def test_substep_rejects_size_mismatch():
    with pytest.raises(InputError):
        substep(DynamicalSystem(45, 4, forward_sweep(4)), word("01000"), {0})


def test_mode_must_match_ring():
    with pytest.raises(InputError):
        DynamicalSystem(45, 5, forward_sweep(4))


def test_sequential_step_reads_fresh_states():
    system = DynamicalSystem(2, 5, reverse_sweep(5))
    first = step(system, word("10000"))
    assert str(first) == "00111"
    assert str(step(system, first)) == "00000"


def test_block_sequential_step():
    system = DynamicalSystem(45, 6, stride_sweep(6))
    assert str(step(system, Configuration.uniform(6, 0))) == "100100"


@given(st.integers(0, 255), configurations(3, 7))
def test_parallel_mode_matches_parallel_step(code, x):
    system = DynamicalSystem(code, x.n, parallel_mode(x.n))
    assert step(system, x) == parallel_step(RuleTable.from_code(code), x)


@settings(max_examples=50)
@given(st.integers(0, 255), st.integers(3, 7).flatmap(
    lambda n: st.tuples(sequential_modes(n), st.integers(0, 2 ** n - 1))))
def test_substep_is_local(code, drawn):
    mode, bits = drawn
    n = mode.n
    system = DynamicalSystem(code, n, mode)
    x = Configuration(n, bits)
    cell = mode.order[0]
    y = substep(system, x, {cell})
    for other in range(n):
        if other != cell:
            assert y.cell(other) == x.cell(other)


def test_orbit_of_rule_104_under_reverse_sweep():
    record = orbit(DynamicalSystem(104, 5, reverse_sweep(5)), word("01111"))
    assert record.transient == 0
    assert record.cycle == 8
    assert [str(x) for x in record.cycle_states] == [
        "01111", "11101", "01011", "11111", "11010", "10111", "11110", "10101"]
    assert not record.reaches_fixed_point


def test_orbit_reaching_a_fixed_point():
    record = orbit(DynamicalSystem(2, 5, reverse_sweep(5)), word("10000"))
    assert (record.transient, record.cycle) == (2, 1)
    assert record.limit_set == frozenset({Configuration.uniform(5, 0)})
    assert record.to_dict() == {"transient": 2, "cycle": 1, "limit_set": ["00000"]}


def test_identity_rule_orbit():
    record = orbit(DynamicalSystem(204, 4, forward_sweep(4)), word("0110"))
    assert (record.transient, record.cycle) == (0, 1)


def test_orbit_trace_lists_substeps():
    record = orbit(DynamicalSystem(2, 5, reverse_sweep(5)), word("10000"), trace=True)
    assert len(record.trace) == len(record.states)
    assert all(len(rows) == 5 for rows in record.trace)
    assert str(record.trace[0][0]) == "10001"
    assert record.trace[0][-1] == record.states[1]


def test_orbit_step_bound():
    system = DynamicalSystem(2, 5, reverse_sweep(5))
    with pytest.raises(InputError):
        orbit(system, word("10000"), max_steps=31)


@given(st.integers(0, 255), configurations(3, 7), st.sampled_from(["forward", "reverse", "parallel"]))
def test_orbit_cycle_returns(code, x, family):
    mode = {"forward": forward_sweep, "reverse": reverse_sweep, "parallel": parallel_mode}[family](x.n)
    system = DynamicalSystem(code, x.n, mode)
    record = orbit(system, x)
    assert record.transient + record.cycle == len(record.states)
    start = record.cycle_states[0]
    y = start
    for _ in range(record.cycle):
        y = step(system, y)
    assert y == start
    assert len(set(record.states)) == len(record.states)


def test_parallel_fixed_points():
    assert {str(x) for x in fixed_points_parallel(RuleTable.from_code(45), 6)} == {
        "001001", "010010", "100100"}
    assert fixed_points_parallel(RuleTable.from_code(45), 5) == frozenset()
    assert len(fixed_points_parallel(RuleTable.from_code(204), 3)) == 8


@pytest.mark.parametrize("code", symmetry_representatives())
@pytest.mark.parametrize("n", range(3, 8))
def test_fixed_points_do_not_depend_on_the_sequential_mode(code, n):
    rule = RuleTable.from_code(code)
    expected = {x.bits for x in fixed_points_parallel(rule, n)}
    for step_map in kernels.sequential_step_tables(rule.array, n, representatives_array(n)):
        assert set(np.flatnonzero(step_map == np.arange(1 << n)).tolist()) == expected


#region Kernels against the reference simulation
@settings(max_examples=40)
@given(st.integers(0, 255), st.integers(3, 7).flatmap(sequential_modes))
def test_step_table_matches_step(code, mode):
    system = DynamicalSystem(code, mode.n, mode)
    step_map = system.step_map
    for x in all_configurations(mode.n):
        assert step_map[x.bits] == step(system, x).bits


def test_block_step_table_matches_step():
    mode = UpdateMode.from_blocks(6, [{0, 3}, {1, 4}, {2, 5}])
    system = DynamicalSystem(45, 6, mode)
    for x in all_configurations(6):
        assert system.step_map[x.bits] == step(system, x).bits


@pytest.mark.parametrize("code", [2, 45, 90, 104, 110])
def test_convergence_depths_match_orbits(code):
    n = 6
    for mode in representative_modes(n)[:10]:
        system = DynamicalSystem(code, n, mode)
        depths = kernels.convergence_depths(system.step_map)
        for x in all_configurations(n):
            record = orbit(system, x)
            expected = record.transient if record.cycle == 1 else -1
            assert depths[x.bits] == expected


def test_preimage_counts():
    step_map = DynamicalSystem(2, 5, reverse_sweep(5)).step_map
    counts = kernels.preimage_counts(step_map)
    assert counts.sum() == 32
    assert counts[0] >= 2


def test_system_fixed_points():
    system = DynamicalSystem(45, 6, SequentialMode((0, 1, 2, 3, 4, 5)))
    assert system.fixed_points() == fixed_points_parallel(RuleTable.from_code(45), 6)
#endregion

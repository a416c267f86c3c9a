from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from automata import kernels
from automata.configuration import InputError
from automata.dynamics import DynamicalSystem
from automata.modes import (ModeSignature, SequentialMode, UpdateMode, audit_modes, forward_sweep,
                            mode_signature, parallel_mode, representative_modes, representative_of,
                            reverse_sweep, signature_order, stride_sweep, temporal_compose)
from automata.rules import RuleTable, symmetry_representatives
from conftest import sequential_modes
from search.enumeration import prefix_permutations


def test_mode_validation():
    with pytest.raises(InputError):
        SequentialMode((0, 1, 1))
    with pytest.raises(InputError):
        UpdateMode.from_blocks(4, [{0, 1}, set()])
    with pytest.raises(InputError):
        UpdateMode.from_blocks(4, [{0, 4}])
    with pytest.raises(InputError):
        UpdateMode(4, ())


def test_text_forms():
    assert str(SequentialMode((2, 0, 1))) == "(2,0,1)"
    assert str(UpdateMode.from_blocks(6, [{3, 0}, {1, 4}, {2, 5}])) == "{0,3};{1,4};{2,5}"


def test_sequential_update_mode_round_trip():
    mode = SequentialMode((3, 1, 0, 2))
    block_form = mode.as_update_mode()
    assert block_form.is_sequential
    assert block_form.as_sequential() == mode
    assert not parallel_mode(4).is_sequential
    with pytest.raises(InputError):
        parallel_mode(4).as_sequential()


def test_positions():
    assert SequentialMode((2, 0, 3, 1)).positions() == (1, 3, 0, 2)


def test_equal_signatures():
    first = mode_signature(SequentialMode((0, 2, 1, 3)))
    second = mode_signature(SequentialMode((2, 0, 3, 1)))
    assert first == second
    assert str(first) == "1010"
    assert mode_signature(forward_sweep(4)) != mode_signature(reverse_sweep(4))


@pytest.mark.parametrize("n", range(3, 9))
def test_every_acyclic_signature_is_realized(n):
    realized = {mode_signature(SequentialMode(order)) for order in permutations(range(n))}
    assert len(realized) == 2 ** n - 2
    assert ModeSignature(n, 0) not in realized
    assert ModeSignature(n, 2 ** n - 1) not in realized


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_representative_modes(n):
    modes = representative_modes(n)
    assert len(modes) == 2 ** n - 2
    assert list(modes) == sorted(modes)
    assert len({mode_signature(mode) for mode in modes}) == len(modes)


def test_representatives_of_three_cells_are_every_permutation():
    assert {mode.order for mode in representative_modes(3)} == set(permutations(range(3)))


def test_signature_order_is_lexicographically_smallest():
    orders = sorted(permutations(range(5)))
    for bits in range(1, 31):
        signature = ModeSignature(5, bits)
        smallest = next(o for o in orders if mode_signature(SequentialMode(o)) == signature)
        assert signature_order(signature).order == smallest


@pytest.mark.parametrize("bits", [0, 15])
def test_cyclic_signature_has_no_order(bits):
    with pytest.raises(InputError):
        signature_order(ModeSignature(4, bits))


@given(st.integers(3, 9).flatmap(sequential_modes))
def test_representative_of_keeps_signature(mode):
    representative = representative_of(mode)
    assert mode_signature(representative) == mode_signature(mode)
    assert representative <= mode


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_equal_signatures_give_equal_step_maps(n):
    perms = prefix_permutations(n, ())
    signatures = [mode_signature(SequentialMode(tuple(int(c) for c in row))) for row in perms]
    for code in symmetry_representatives():
        maps = kernels.sequential_step_tables(RuleTable.from_code(code).array, n, perms)
        by_signature = {}
        for signature, step_map in zip(signatures, maps):
            if signature in by_signature:
                assert np.array_equal(by_signature[signature], step_map)
            else:
                by_signature[signature] = step_map


@settings(max_examples=50)
@given(st.integers(0, 255), st.data())
def test_temporal_composition_applies_both_periods(code, data):
    first = data.draw(sequential_modes(6))
    second = data.draw(sequential_modes(6))
    composed = temporal_compose(first, second)
    assert composed.period == 12
    assert not composed.is_sequential
    step_first = DynamicalSystem(code, 6, first).step_map
    step_second = DynamicalSystem(code, 6, second).step_map
    assert np.array_equal(DynamicalSystem(code, 6, composed).step_map, step_second[step_first])


def test_compose_needs_equal_ring_sizes():
    with pytest.raises(InputError):
        temporal_compose(forward_sweep(4), forward_sweep(5))


def test_families():
    assert forward_sweep(4).order == (0, 1, 2, 3)
    assert reverse_sweep(4).order == (3, 2, 1, 0)
    assert stride_sweep(6).order == (0, 3, 1, 4, 2, 5)
    assert parallel_mode(3).blocks == (frozenset({0, 1, 2}),)


@pytest.mark.parametrize("n", [4, 5, 7])
def test_audit_modes_cover_every_cell(n):
    for mode in audit_modes(n):
        assert mode.n == n
        assert frozenset().union(*mode.blocks) == frozenset(range(n))

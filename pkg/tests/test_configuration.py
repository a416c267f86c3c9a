import pytest
from hypothesis import given, strategies as st

from automata.configuration import Configuration, InputError, RunDecomposition, run_decomposition
from conftest import configurations, word


def test_text_form_puts_cell_zero_first():
    x = word("01101")
    assert x.n == 5
    assert x.bits == 0b10110
    assert x.cells() == (0, 1, 1, 0, 1)
    assert str(x) == "01101"


def test_indices_wrap_around_the_ring():
    x = word("10010")
    assert x.cell(-1) == x.cell(4) == 0
    assert x.cell(5) == x.cell(0) == 1
    # cell 0 sees cell 4 on its left and cell 1 on its right
    assert x.neighborhood(0) == 0b010
    assert x.neighborhood(4) == 0b101


@pytest.mark.parametrize("n", [2, 31])
def test_ring_size_bounds(n):
    with pytest.raises(InputError):
        Configuration(n, 0)


def test_bits_must_fit_ring():
    with pytest.raises(InputError):
        Configuration(3, 8)


def test_rotate_moves_cells_right():
    assert str(word("100").rotate(1)) == "010"
    assert str(word("100").rotate(-1)) == "001"
    assert str(word("0011").rotate(4)) == "0011"


def test_complement_and_reflect():
    assert str(word("0011").complement()) == "1100"
    assert str(word("0010").reflect()) == "0100"


def test_contains_word_wraps():
    assert word("10001").contains_word("11")
    assert word("0011100").contains_word("0011100")
    assert not word("010101").contains_word("11")
    with pytest.raises(InputError):
        word("0101").contains_word("01010")


@pytest.mark.parametrize("text, runs", [
    ("000000", ((0, 6),)),
    ("001100", ((0, 4), (1, 2))),
    ("010011", ((0, 1), (1, 1), (0, 2), (1, 2))),
    ("111", ((1, 3),)),
])
def test_run_decomposition(text, runs):
    assert run_decomposition(word(text)).runs == runs


def test_run_decomposition_isles():
    runs = run_decomposition(word("0110001"))
    assert runs.runs == ((0, 1), (1, 2), (0, 3), (1, 1))
    assert runs.isles(1) == [2, 1]
    assert runs.isles(0) == [1, 3]


@given(configurations(3, 12))
def test_run_decomposition_reconstructs(x):
    decomposition = run_decomposition(x)
    assert decomposition.reconstruct() == x
    assert decomposition.n == x.n
    values = [value for value, _ in decomposition.runs]
    if len(values) > 1:
        assert all(values[k] != values[(k + 1) % len(values)] for k in range(len(values)))


@given(configurations(), st.integers(-40, 40))
def test_rotation_inverts(x, shift):
    assert x.rotate(shift).rotate(-shift) == x


@given(configurations())
def test_complement_and_reflect_are_involutions(x):
    assert x.complement().complement() == x
    assert x.reflect().reflect() == x


def test_run_decomposition_offset_is_first_run_start():
    decomposition = run_decomposition(word("001100"))
    assert decomposition == RunDecomposition(((0, 4), (1, 2)), 4)

import numpy as np
import pytest

from dematel_todim.errors import NegativeEntry, NonSquare, ValidationError
from dematel_todim.matrix import DirectRelationMatrix


def test_diagonal_forced_to_zero():
    a = DirectRelationMatrix.from_rows([[5, 1], [2, 7]])
    np.testing.assert_array_equal(a.values, [[0, 1], [2, 0]])
    assert a.ids == ("C1", "C2")
    assert a.n == 2


def test_read_only():
    a = DirectRelationMatrix.from_rows([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        a.values[0, 1] = 3


@pytest.mark.parametrize(
    "rows, exc",
    [
        ([[0, 1, 2], [1, 0, 2]], NonSquare),
        ([[0, -0.1], [1, 0]], NegativeEntry),
        ([[0]], ValidationError),
        ([[0, np.nan], [1, 0]], ValidationError),
    ],
)
def test_invalid(rows, exc):
    with pytest.raises(exc):
        DirectRelationMatrix.from_rows(rows)


def test_ids():
    with pytest.raises(ValidationError):
        DirectRelationMatrix.from_rows([[0, 1], [1, 0]], ids=("a", "a"))
    with pytest.raises(ValidationError):
        DirectRelationMatrix.from_rows([[0, 1], [1, 0]], ids=("a",))
    a = DirectRelationMatrix.from_rows([[0, 1], [1, 0]], ids=("a", "b"))
    assert a.index_of("b") == 1
    assert a == DirectRelationMatrix.from_rows([[0, 1], [1, 0]], ids=("a", "b"))

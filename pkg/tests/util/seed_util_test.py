import numpy as np
import pytest

from plpf.error_handler.exceptions import DomainException
from plpf.util.seed_util import child_seed_sequence, child_stream


def test_streams_are_reproducible_and_independent():
    first = child_stream(42, 3).random(5)
    again = child_stream(42, 3).random(5)
    other = child_stream(42, 4).random(5)
    np.testing.assert_array_equal(first, again)
    assert not np.array_equal(first, other)


def test_stream_does_not_depend_on_creation_order():
    late = [child_stream(7, i).random() for i in (2, 1, 0)]
    early = [child_stream(7, i).random() for i in (0, 1, 2)]
    assert late == early[::-1]


def test_seed_sequence_carries_spawn_key():
    sequence = child_seed_sequence(11, 5)
    assert sequence.entropy == 11
    assert sequence.spawn_key == (5,)


@pytest.mark.parametrize("seed, index", [(-1, 0), (1, -1), (1.5, 0), (True, 0)])
def test_invalid_seeds_raise(seed, index):
    with pytest.raises(DomainException):
        child_stream(seed, index)

"""
Deterministic random streams.

Trial ``i`` of a run always draws from ``child_stream(base_seed, i)``: the stream is a
PCG64 generator seeded by ``SeedSequence(entropy=base_seed, spawn_key=(i,))``. SeedSequence
hashes (entropy, spawn_key) into the generator state, so streams are order independent and
identical however many workers execute the trials.
"""
import numpy as np

from plpf.util.validation_util import validate_count


def child_seed_sequence(base_seed: int, index: int) -> np.random.SeedSequence:
    base_seed = validate_count("base_seed", base_seed, minimum=0)
    index = validate_count("index", index, minimum=0)
    return np.random.SeedSequence(entropy=base_seed, spawn_key=(index,))

def child_stream(base_seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(child_seed_sequence(base_seed, index)))

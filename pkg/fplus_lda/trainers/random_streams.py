"""Seeded, splittable generators shared by the serial and parallel trainers.

A seed yields one stream for initialisation, ``n`` independent sampling
streams and ``n`` routing streams. Sampling stream 0 is the same for every
``n``, so a one-worker parallel run draws exactly what the serial trainer draws.
"""
from typing import List

import numpy as np


def _children(seed):
    return np.random.SeedSequence(seed).spawn(3)


def init_generator(seed: int) -> np.random.Generator:
    return np.random.default_rng(_children(seed)[0])


def sampling_generators(seed: int, n: int) -> List[np.random.Generator]:
    return [np.random.default_rng(s) for s in _children(seed)[1].spawn(n)]


def routing_generators(seed: int, n: int) -> List[np.random.Generator]:
    return [np.random.default_rng(s) for s in _children(seed)[2].spawn(n)]


def sampling_generator(seed: int) -> np.random.Generator:
    return sampling_generators(seed, 1)[0]


def generator_state(rng: np.random.Generator) -> dict:
    return rng.bit_generator.state


def restore_generator(state: dict) -> np.random.Generator:
    bit_generator = getattr(np.random, state["bit_generator"])()
    bit_generator.state = state
    return np.random.Generator(bit_generator)

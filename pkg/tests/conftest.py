import numpy as np
import pytest

from hadamard6 import EquivalenceWitness


def random_witness(n, rng):
    """Random permutations and unit phases, as an EquivalenceWitness."""
    return EquivalenceWitness(
        tuple(int(i) for i in rng.permutation(n)),
        tuple(np.exp(2j * np.pi * rng.random(n))),
        tuple(int(i) for i in rng.permutation(n)),
        tuple(np.exp(2j * np.pi * rng.random(n))),
    )


def fingerprint_oracle(m, precision):
    """Plain-loop reference for the phase multiset, kept independent of the
    vectorized implementation."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    vals = []
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            for j in range(n):
                for l in range(n):
                    if j == l:
                        continue
                    prod = m[i, j] * m[k, l] * np.conj(m[i, l]) * np.conj(m[k, j])
                    theta = np.angle(prod) % (2 * np.pi)
                    r = round(theta, precision)
                    if r >= round(2 * np.pi, precision):
                        r = 0.0
                    vals.append(r)
    return tuple(sorted(vals))


@pytest.fixture
def rng():
    return np.random.default_rng(7)

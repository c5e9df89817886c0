"""How often does each link analogue show up among random three-qubit states?

Draws states from a few ensembles and tallies classify() verdicts. Dense
Gaussian states are almost surely HOPF3; rank deficiency needs structure,
which is what the sparse and real-binary ensembles supply.

    python scripts/random_census.py --samples 5000 --seed 1
"""

import argparse
import itertools
from collections import Counter

import numpy as np

from splitlink import build_profile, classify, from_amplitudes


def dense(rng):
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    return from_amplitudes(3, v)


def sparse(rng, keep=0.4):
    v = rng.normal(size=8) + 1j * rng.normal(size=8)
    v[rng.random(8) > keep] = 0
    if not v.any():
        v[rng.integers(8)] = 1
    return from_amplitudes(3, v)


def uniform_support(rng):
    """Equal-weight superposition over a random nonempty subset of basis kets."""
    support = rng.random(8) < 0.5
    if not support.any():
        support[rng.integers(8)] = True
    return from_amplitudes(3, support.astype(float))


ENSEMBLES = {"dense": dense, "sparse": sparse, "uniform-support": uniform_support}


def exhaustive_uniform_supports():
    """All 255 equal-weight states on nonempty subsets of the 8 basis kets."""
    for mask in itertools.product((0.0, 1.0), repeat=8):
        if any(mask):
            yield from_amplitudes(3, np.array(mask))


def tally(states):
    return Counter(classify(build_profile(s)).primary_analogue.value for s in states)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)

    for name, draw in ENSEMBLES.items():
        counts = tally(draw(rng) for _ in range(args.samples))
        row = ", ".join(f"{k}: {v / args.samples:.3f}" for k, v in sorted(counts.items()))
        print(f"{name:>16}  {row}")

    counts = tally(exhaustive_uniform_supports())
    print(f"{'all 255 supports':>16}  " + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))


if __name__ == "__main__":
    main()

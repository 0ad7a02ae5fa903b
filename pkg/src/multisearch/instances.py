"""Adversarial instance generators used as worst-case benchmark inputs.

``cluster_instance`` places one hidden element uniformly in each of k
equal-width clusters of [1, n]; it forces any solver to pin each element
down separately. ``bin_instance`` pads the multiset with k/4 ones and k/4
n's, then hides one element per two-value bin {2i, 2i+1}; distinguishing
within a bin is a 1/k-biased coin question.
"""

from __future__ import annotations

import numpy as np

from .model import DomainError, Instance, make_instance


def cluster_instance(n: int, k: int, seed: int) -> Instance:
    """One uniform element per cluster [(i-1)n/k + 1, i*n/k]; requires k | n."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n % k != 0:
        raise DomainError(f"cluster instance needs k | n, got n={n}, k={k}")
    width = n // k
    rng = np.random.Generator(np.random.PCG64(seed))
    offsets = rng.integers(0, width, size=k)
    items = [i * width + 1 + int(off) for i, off in enumerate(offsets)]
    return make_instance(n, k, items)


def bin_instance(n: int, k: int, seed: int) -> Instance:
    """k/4 ones, k/4 n's, one uniform element of each bin {2i, 2i+1}.

    Requires 4 | k and k <= n - 2 so all bins lie inside [2, n-1].
    """
    if k < 4 or k % 4 != 0:
        raise DomainError(f"bin instance needs 4 | k, got k={k}")
    if k > n - 2:
        raise DomainError(f"bin instance needs k <= n - 2, got k={k}, n={n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    picks = rng.integers(0, 2, size=k // 2)
    items = [1] * (k // 4) + [n] * (k // 4)
    items += [2 * i + int(p) for i, p in enumerate(picks, start=1)]
    return make_instance(n, k, items)

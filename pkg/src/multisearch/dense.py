"""Dense and naive solvers.

``solve_dense`` is the k >= n approach: estimate the k-position of every
value in [1, n-1] at per-point confidence n^-(c+1), repair the profile to
be monotone, and read per-value multiplicities off consecutive
differences. ``solve_naive`` is the repeated-binary-search baseline whose
extra log(2 k log n) factor the walker removes; it is kept for benchmark
comparison.
"""

from __future__ import annotations

from .kposition import estimate_k_position, queries_for_confidence
from .model import DomainError, Oracle
from .reports import SolverReport
from .walker import ceil_log2


def repair_monotone(values: list[int]) -> list[int]:
    """Running maximum: the cheapest monotone repair, identity on monotone input."""
    out = []
    cur = 0
    for v in values:
        cur = max(cur, v)
        out.append(cur)
    return out


def counts_from_profile(kpos_by_y: list[int]) -> list[int]:
    """Per-value multiplicities from a monotone k-position profile (y = 1..n)."""
    prev = 0
    counts = []
    for v in kpos_by_y:
        counts.append(v - prev)
        prev = v
    return counts


def _split_even(total: int, k: int) -> list[int]:
    # dense queries are not per-target; split evenly so the report invariant
    # (per-target sum = total) still holds
    base, rem = divmod(total, k)
    return [base + (1 if i < rem else 0) for i in range(k)]


def solve_dense(oracle: Oracle, n: int, k: int, c: float = 1.0) -> SolverReport:
    """Recover the multiset from a full k-position profile over [1, n]."""
    if k < 1 or n < 1:
        raise DomainError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if c <= 0:
        raise DomainError(f"c must be positive, got {c}")
    before = oracle.query_count
    estimates = []
    if n >= 2:
        delta_pt = float(n) ** (-(c + 1.0))
        m_pt = queries_for_confidence(k, delta_pt, oracle.noise.rho)
        for y in range(1, n):
            estimates.append(estimate_k_position(oracle, y, m_pt).k_pos)
    estimates.append(k)  # y = n is forced, no queries spent
    profile = repair_monotone(estimates)
    counts = counts_from_profile(profile)
    total = oracle.query_count - before
    if sum(counts) != k:
        per_target = [(t, None, q) for t, q in zip(range(1, k + 1), _split_even(total, k))]
        return SolverReport(recovered=[], per_target=per_target,
                            total_queries=total, success=False)
    recovered = [y for y, cnt in enumerate(counts, start=1) for _ in range(cnt)]
    per_target = [(t, v, q)
                  for (t, v), q in zip(enumerate(recovered, start=1), _split_even(total, k))]
    success = tuple(recovered) == oracle.instance.items
    return SolverReport(recovered=recovered, per_target=per_target,
                        total_queries=total, success=success)


def solve_naive(oracle: Oracle, n: int, k: int, delta: float) -> SolverReport:
    """Repeated binary search: for each t, find the least v with K(v) >= t.

    Each probe estimates a k-position at confidence delta / (k * ceil(log2 n)),
    so a union bound over all probes keeps the overall error below delta.
    """
    if not (1 <= k <= n):
        raise DomainError(f"naive solver needs 1 <= k <= n, got k={k}, n={n}")
    if not (0.0 < delta < 1.0):
        raise DomainError(f"delta must be in (0, 1), got {delta}")
    bits = max(1, ceil_log2(n))
    m_per = queries_for_confidence(k, delta / (k * bits), oracle.noise.rho)
    per_target = []
    for t in range(1, k + 1):
        before = oracle.query_count
        lo, hi = 1, n
        while lo < hi:
            mid = (lo + hi) // 2
            if estimate_k_position(oracle, mid, m_per).k_pos >= t:
                hi = mid
            else:
                lo = mid + 1
        per_target.append((t, lo, oracle.query_count - before))
    recovered = sorted(v for _, v, _ in per_target)
    total = sum(q for _, _, q in per_target)
    success = tuple(recovered) == oracle.instance.items
    return SolverReport(recovered=recovered, per_target=per_target,
                        total_queries=total, success=success)

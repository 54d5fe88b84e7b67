"""Pure-Python numerical kernels (fallback when the compiled extension is absent)."""

from math import exp, fsum, inf, lgamma


def log_choose(n: int, r: int) -> float:
    """ln C(n, r); -inf when r is outside [0, n]."""
    if r < 0 or r > n:
        return -inf
    if r == 0 or r == n:
        return 0.0
    return lgamma(n + 1.0) - lgamma(r + 1.0) - lgamma(n - r + 1.0)


def hypergeom_tail(k: int, n: int, K: int, N: int) -> float:
    """Upper-tail sum P(X >= k) for the hypergeometric(n, K, N) distribution.

    Each term is evaluated in log space; the terms are accumulated with
    compensated summation.
    """
    denom = log_choose(N, n)
    hi = min(n, K)
    return fsum(
        exp(log_choose(K, i) + log_choose(N - K, n - i) - denom)
        for i in range(k, hi + 1)
    )

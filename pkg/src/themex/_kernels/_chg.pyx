# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled numerical kernels for the hypergeometric tail sum."""

from libc.math cimport lgamma, exp, INFINITY


cdef inline double _log_choose(double n, double r) noexcept nogil:
    if r < 0 or r > n:
        return -INFINITY
    if r == 0 or r == n:
        return 0.0
    return lgamma(n + 1.0) - lgamma(r + 1.0) - lgamma(n - r + 1.0)


def log_choose(long n, long r):
    """ln C(n, r); -inf when r is outside [0, n]."""
    return _log_choose(n, r)


def hypergeom_tail(long k, long n, long K, long N):
    """Upper-tail sum P(X >= k) for the hypergeometric(n, K, N) distribution.

    Terms are evaluated in log space and accumulated in extended precision.
    """
    cdef double denom = _log_choose(N, n)
    cdef long double acc = 0.0
    cdef long i
    cdef long hi = n if n < K else K
    with nogil:
        for i in range(k, hi + 1):
            acc += <long double> exp(
                _log_choose(K, i) + _log_choose(N - K, n - i) - denom
            )
    return <double> acc

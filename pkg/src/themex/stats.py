"""Numerical kernels: exact hypergeometric tail p-value, log-binomial
coefficients, TF-IDF scoring, and seeded sampling without replacement."""

from __future__ import annotations

import random
from math import inf, log

from themex import _kernels
from themex.corpus import Storyset
from themex.errors import InvalidParams, SampleTooLarge, UndefinedForAbsentTheme

#: Name of the active kernel backend ("compiled" or "pure").
KERNEL_BACKEND = _kernels.BACKEND

#: Smallest positive double; p-values are clamped into (0, 1].
_TINY = 5e-324

IMPOSSIBLE = -inf


def log_choose(n: int, r: int) -> float:
    """ln C(n, r), computed via log-gamma.

    Returns the -inf "impossible" sentinel when r < 0 or r > n.
    """
    return _kernels.log_choose(n, r)


def _check_params(k: int, n: int, K: int, N: int) -> None:
    if N < 1:
        raise InvalidParams(f"N must be >= 1, got {N}")
    if not (0 <= k <= n <= N):
        raise InvalidParams(f"need 0 <= k <= n <= N, got k={k}, n={n}, N={N}")
    if not (k <= K <= N):
        raise InvalidParams(f"need k <= K <= N, got k={k}, K={K}, N={N}")


def hypergeom_pvalue(k: int, n: int, K: int, N: int) -> float:
    """P(X >= k) where X counts successes in n draws without replacement
    from N items of which K are successes.

    k = 0 returns exactly 1.0; the result is clamped into (0, 1].
    """
    _check_params(k, n, K, N)
    if k == 0:
        return 1.0
    p = _kernels.hypergeom_tail(k, n, K, N)
    if p > 1.0:
        p = 1.0
    if p <= 0.0:
        p = _TINY
    return p


def tfidf_score(k: int, n: int, K: int, N: int) -> float:
    """(k/n) * ln(N/K): term frequency times log-scaled inverse document
    frequency. Natural log; zero when k = 0 or K = N."""
    _check_params(k, n, K, N)
    if K == 0:
        raise UndefinedForAbsentTheme()
    if k == 0 or K == N:
        return 0.0
    return (k / n) * log(N / K)


def sample_storyset(
    background: Storyset, n: int, rng_seed: int = 42, draw_index: int = 0
) -> Storyset:
    """Uniform simple random sample of n stories without replacement.

    Fully determined by (rng_seed, draw_index); output ids are sorted
    lexicographically.
    """
    if not (1 <= n <= len(background)):
        raise SampleTooLarge(n, len(background))
    # String seeding hashes via SHA-512, so draws are stable across runs
    # and interpreter hash randomization.
    rng = random.Random(f"{rng_seed}:{draw_index}")
    picked = rng.sample(sorted(background.story_ids), n)
    return Storyset(f"{background.name}#draw{draw_index}", tuple(sorted(picked)))

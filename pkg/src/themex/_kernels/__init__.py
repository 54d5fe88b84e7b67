"""Numerical kernel backend selection.

The compiled Cython extension is preferred; the pure-Python implementation
is a drop-in fallback so the package works without a C toolchain.
"""

try:
    from themex._kernels._chg import hypergeom_tail, log_choose
    BACKEND = "compiled"
except ImportError:  # pragma: no cover - exercised only on fallback installs
    from themex._kernels.pure import hypergeom_tail, log_choose
    BACKEND = "pure"

__all__ = ["BACKEND", "hypergeom_tail", "log_choose"]

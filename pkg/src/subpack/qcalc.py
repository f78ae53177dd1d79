"""Exact q-analog arithmetic: Gaussian binomial coefficients and q-integers.

Everything here returns arbitrary-precision integers.  No floating point is
used anywhere in the bound computations built on top of this module.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ParameterError


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    if n < 0 or k < 0:
        raise ParameterError(f"gaussian_binomial needs n, k >= 0, got ({n}, {k})")
    if q < 2:
        raise ParameterError(f"field order must be >= 2, got {q}")
    if k > n:
        return 0
    k = min(k, n - k)
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0, "gaussian binomial must be an exact integer"
    return value


def q_int(n: int, q: int) -> int:
    """The q-integer 1 + q + ... + q^(n-1), i.e. gaussian_binomial(n, 1, q)."""
    return gaussian_binomial(n, 1, q)

"""Upper- and lower-bound engine for maximum subspace packing sizes.

Every applicable method is evaluated and the minimum (for uppers) resp.
maximum (for lowers) is taken, with per-method provenance recorded.  The
recursion over smaller parameters is memoized per engine instance.  All
arithmetic is exact integer arithmetic; the optimal multiplier in the
hyperplane-counting bound is located with integer square roots plus a +-1
guard against rounding.

Upper-bound methods
-------------------
cap              all blocks distinct: never more than [n;k]_q
packing          floor(lam * [n;t]_q / [k;t]_q), capped
classic-johnson  floor([n]_q * U(n-1,k-1,t-1;lam) / [k]_q)
improved-johnson the same total reduced through the divisible-length operator
combination      hyperplane split: max_x min{x + floor((lam*[n-1;t]-x*[k;t])/[k-1;t]),
                 floor((q^n-1)/(q^(n-k)-1) * x)} over 0 <= x <= U(n-1,k,t;lam)
quadratic        for (k,t,lam) = (n-2,n-3,2): floor([n]_q * m(m+1) / (2(q+1)m - [n-2]_q))
registry         a bundled table of known values (disabled in registry-free mode)

A registry of known values can be consulted both at the query point and in
recursive subcalls; "paper-free" mode simply runs the engine without it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from . import constructions
from .divisible import reduce_quotient
from .errors import NotApplicableError, ParameterError
from .params import PackingParams
from .qcalc import gaussian_binomial, q_int

M_CAP = "cap"
M_PACKING = "packing"
M_JOHNSON = "classic-johnson"
M_JOHNSON_IMPROVED = "improved-johnson"
M_COMBINATION = "combination"
M_QUADRATIC = "quadratic"
M_REGISTRY = "registry"
M_ALL_BLOCKS = "all-blocks"
M_TRIVIAL = "trivial"
M_LINKAGE = "linkage"

InnerBound = Callable[[int, int, int, int], int]


def packing_bound(p: PackingParams) -> int:
    """Coverage-count bound, capped at the total number of blocks."""
    v = (p.lam * gaussian_binomial(p.n, p.t, p.q)) // gaussian_binomial(p.k, p.t, p.q)
    return min(v, gaussian_binomial(p.n, p.k, p.q))


def johnson_classic(p: PackingParams, inner: InnerBound) -> int:
    """Point/block incidence count through the quotient by a point."""
    if p.t < 1 or p.k < 1:
        raise ParameterError("classic Johnson needs t >= 1 and k >= 1")
    a = q_int(p.n, p.q) * inner(p.n - 1, p.k - 1, p.t - 1, p.lam)
    return a // q_int(p.k, p.q)


def johnson_improved(p: PackingParams, inner: InnerBound) -> int:
    """Johnson total reduced modulo feasible q^(k-1)-divisible lengths."""
    if p.t < 1 or p.k < 2:
        raise ParameterError("improved Johnson needs t >= 1 and k >= 2")
    a = q_int(p.n, p.q) * inner(p.n - 1, p.k - 1, p.t - 1, p.lam)
    b = reduce_quotient(a, p.k, p.q)
    if b is None:
        return a // q_int(p.k, p.q)
    return b


def combination_bound(p: PackingParams, inner: InnerBound) -> int:
    """Split on the number x of codewords inside a fullest hyperplane."""
    q, n, k, t, lam = p.q, p.n, p.k, p.t, p.lam
    if not (1 <= t < k < n):
        raise ParameterError("combination bound needs 1 <= t < k < n")
    if lam > gaussian_binomial(n - t, k - t, q):
        raise ParameterError("combination bound needs a nonvacuous coverage constraint")
    at = gaussian_binomial(n - 1, t, q)
    kt = gaussian_binomial(k, t, q)
    k1t = gaussian_binomial(k - 1, t, q)
    num2 = q ** n - 1
    den2 = q ** (n - k) - 1
    best = 0
    for x in range(inner(n - 1, k, t, lam) + 1):
        arm2 = (num2 * x) // den2
        rem = lam * at - x * kt
        cand = arm2 if rem < 0 else min(x + rem // k1t, arm2)
        if cand > best:
            best = cand
    return best


@dataclass(frozen=True)
class InequalityInputs:
    """Counting data (mu0, mu1, mu2) plus a multiplier m with 2*m*mu1 > mu2."""

    mu0: int
    mu1: int
    mu2: int
    m: int

    def __post_init__(self):
        if min(self.mu0, self.mu1, self.mu2) < 0 or self.m < 1:
            raise ParameterError("inequality inputs must be non-negative with m >= 1")
        if 2 * self.m * self.mu1 <= self.mu2:
            raise ParameterError("inequality inputs need 2*m*mu1 > mu2")


def inequality_bound_cap(inp: InequalityInputs) -> int:
    """floor(m(m+1)*mu0 / (2m*mu1 - mu2)) in exact integer arithmetic."""
    return inp.m * (inp.m + 1) * inp.mu0 // (2 * inp.m * inp.mu1 - inp.mu2)


def _isqrt_ceil(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def quadratic_bound(p: PackingParams) -> int | None:
    """Hyperplane pair-count bound; applies only to (k,t,lam) = (n-2,n-3,2).

    Evaluates the cap at the integer-optimal multiplier and both neighbours,
    returning the smallest; None when the parameters do not match.
    """
    q, n = p.q, p.n
    if not (p.lam == 2 and p.k == n - 2 and p.t == n - 3 and n >= 4):
        return None
    mu0 = q_int(n, q)
    mu1 = q + 1
    mu2 = q_int(n - 2, q)
    num = mu2 + _isqrt_ceil(mu2 * mu2 + mu2)
    m_star = -(-num // (2 * mu1))
    best = None
    for m in (m_star - 1, m_star, m_star + 1):
        if m >= 1 and 2 * m * mu1 > mu2:
            v = inequality_bound_cap(InequalityInputs(mu0, mu1, mu2, m))
            if best is None or v < best:
                best = v
    assert best is not None, "optimal multiplier must satisfy the precondition"
    return best


# --- known-value registry ----------------------------------------------------

@dataclass(frozen=True)
class KnownValue:
    lower: int | None
    upper: int | None
    source: str


class KnownValues:
    """Registry of known bounds, keyed by (q, n, k, t, lam).

    File format: one record per line, `q n k t lambda lower upper source-tag`,
    with `-` for an unknown side; `#` starts a comment.
    """

    def __init__(self, entries: dict[tuple[int, int, int, int, int], KnownValue]):
        self.entries = entries

    def get(self, q: int, n: int, k: int, t: int, lam: int) -> KnownValue | None:
        return self.entries.get((q, n, k, t, lam))

    @classmethod
    def parse(cls, text: str) -> "KnownValues":
        entries = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 8:
                raise ParameterError(f"registry line {lineno}: expected 8 fields, got {len(parts)}")
            q, n, k, t, lam = (int(x) for x in parts[:5])
            lower = None if parts[5] == "-" else int(parts[5])
            upper = None if parts[6] == "-" else int(parts[6])
            if lower is not None and upper is not None and lower > upper:
                raise ParameterError(f"registry line {lineno}: lower > upper")
            entries[(q, n, k, t, lam)] = KnownValue(lower, upper, parts[7])
        return cls(entries)

    @classmethod
    def bundled(cls) -> "KnownValues":
        text = resources.files("subpack").joinpath("data/known_values.txt").read_text()
        return cls.parse(text)


# --- the engine ---------------------------------------------------------------

@dataclass(frozen=True)
class BoundResult:
    params: PackingParams
    lower: int
    upper: int
    upper_methods: tuple[tuple[str, int], ...]
    lower_methods: tuple[tuple[str, int], ...]

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def method_value(self, name: str) -> int | None:
        for m, v in self.upper_methods:
            if m == name:
                return v
        return None


class BoundEngine:
    """Memoized best-bound recursion over (q, n, k, t, lam).

    Base cases: t = 0 gives min(lam, [n;k]_q) (the unique 0-subspace lies in
    every block), t = k gives [n;k]_q (blocks are distinct).  A vacuous
    coverage constraint (lam >= [n-t;k-t]_q) also gives [n;k]_q exactly.
    """

    def __init__(self, registry: KnownValues | None = None):
        self.registry = registry
        self._memo: dict[tuple[int, int, int, int, int], int] = {}

    # scalar upper bound, accepts the internal base cases t=0 / k=0
    def upper_value(self, q: int, n: int, k: int, t: int, lam: int) -> int:
        key = (q, n, k, t, lam)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        nk = gaussian_binomial(n, k, q)
        if nk == 0:
            val = 0
        elif t <= 0:
            val = min(lam, nk)
        elif t >= k:
            val = nk
        elif lam >= gaussian_binomial(n - t, k - t, q):
            val = nk
        else:
            p = PackingParams(q, n, k, t, lam)
            inner = lambda nn, kk, tt, ll: self.upper_value(q, nn, kk, tt, ll)
            val = min(nk, packing_bound(p), johnson_classic(p, inner))
            if k >= 2:
                val = min(val, johnson_improved(p, inner))
            if k < n:
                val = min(val, combination_bound(p, inner))
            quad = quadratic_bound(p)
            if quad is not None:
                val = min(val, quad)
            if self.registry is not None:
                known = self.registry.get(q, n, k, t, lam)
                if known is not None and known.upper is not None:
                    val = min(val, known.upper)
        self._memo[key] = val
        return val

    def best_upper(self, p: PackingParams) -> int:
        return self.upper_value(p.q, p.n, p.k, p.t, p.lam)

    def result(self, p: PackingParams) -> BoundResult:
        """Full provenance: every method's value on both sides."""
        q, n, k, t, lam = p.q, p.n, p.k, p.t, p.lam
        nk = gaussian_binomial(n, k, q)
        inner = lambda nn, kk, tt, ll: self.upper_value(q, nn, kk, tt, ll)
        ups: list[tuple[str, int]] = [(M_CAP, nk), (M_PACKING, packing_bound(p))]
        lows: list[tuple[str, int]] = []
        vacuous = t == k or lam >= gaussian_binomial(n - t, k - t, q)
        if vacuous:
            lows.append((M_ALL_BLOCKS, nk))
        else:
            ups.append((M_JOHNSON, johnson_classic(p, inner)))
            if k >= 2:
                ups.append((M_JOHNSON_IMPROVED, johnson_improved(p, inner)))
            if k < n:
                ups.append((M_COMBINATION, combination_bound(p, inner)))
            quad = quadratic_bound(p)
            if quad is not None:
                ups.append((M_QUADRATIC, quad))
            lows.append((M_TRIVIAL, constructions.trivial_packing_lower(p)))
            via_dual = constructions.dual_linkage_lower(p)
            if via_dual is not None:
                lows.append((M_LINKAGE, via_dual))
        if self.registry is not None:
            known = self.registry.get(q, n, k, t, lam)
            if known is not None:
                if known.upper is not None:
                    ups.append((f"{M_REGISTRY}[{known.source}]", known.upper))
                if known.lower is not None:
                    lows.append((f"{M_REGISTRY}[{known.source}]", known.lower))
        upper = min(v for _, v in ups)
        lower = max(v for _, v in lows)
        assert upper == self.best_upper(p), "provenance disagrees with memoized value"
        assert lower <= upper, f"lower {lower} exceeds upper {upper} for {p.label()}"
        return BoundResult(p, lower, upper, tuple(ups), tuple(lows))

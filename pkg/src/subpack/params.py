"""Parameter tuples indexing every quantity in the package."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .gf import prime_power
from .qcalc import gaussian_binomial


@dataclass(frozen=True)
class PackingParams:
    """Parameters (q, n, k, t, lam) of a packing of k-subspaces of F_q^n in
    which every t-subspace lies in at most lam blocks."""

    q: int
    n: int
    k: int
    t: int
    lam: int

    def __post_init__(self):
        prime_power(self.q)
        if not 1 <= self.t <= self.k <= self.n:
            raise ParameterError(f"need 1 <= t <= k <= n, got t={self.t}, k={self.k}, n={self.n}")
        if self.lam < 1:
            raise ParameterError(f"multiplicity must be >= 1, got {self.lam}")

    @property
    def nontrivial(self) -> bool:
        """True when the coverage constraint can actually bite."""
        return self.lam <= gaussian_binomial(self.n - self.t, self.k - self.t, self.q)

    def label(self) -> str:
        return f"A_{self.q}({self.n},{self.k},{self.t};{self.lam})"


@dataclass(frozen=True)
class CoveringParams:
    """Parameters (q, n, k, delta, alpha) of a covering code: every alpha
    codewords (k-subspaces of F_q^n) span dimension at least k + delta."""

    q: int
    n: int
    k: int
    delta: int
    alpha: int

    def __post_init__(self):
        prime_power(self.q)
        if not 1 <= self.delta <= self.k <= self.n:
            raise ParameterError(
                f"need 1 <= delta <= k <= n, got delta={self.delta}, k={self.k}, n={self.n}"
            )
        if not 2 <= self.alpha <= self.q ** self.k + 1:
            raise ParameterError(
                f"need 2 <= alpha <= q^k + 1 = {self.q ** self.k + 1}, got {self.alpha}"
            )

    def label(self) -> str:
        return f"B_{self.q}({self.n},{self.k},{self.delta};{self.alpha})"

"""Feasible lengths of q^r-divisible codes and the quotient-reduction operator.

A length is feasible iff it is a non-negative integer combination of the
generator lengths q^i * [r+1-i]_q, i = 0..r.  Membership is decided by a
dynamic-programming table (numerical-semigroup membership), grown lazily and
cached per (q, r).  The reduction operator strips as many multiples of [k]_q
from a total as possible while keeping the remainder feasible; it is the
exact integer machinery behind the sharpened point-count bound.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field

from .errors import ParameterError
from .gf import Field, all_points, dot, field, subspace_points
from .qcalc import q_int

_tables: dict[tuple[int, int], bytearray] = {}
_lock = threading.Lock()


def divisible_summands(q: int, r: int) -> list[int]:
    """Generator lengths q^i * [r+1-i]_q for i = 0..r."""
    if r < 0 or q < 2:
        raise ParameterError(f"need r >= 0 and q >= 2, got r={r}, q={q}")
    return [q ** i * q_int(r + 1 - i, q) for i in range(r + 1)]


def divisible_length_feasible(length: int, q: int, r: int) -> bool:
    """True iff a q^r-divisible code of this length exists (length 0 allowed)."""
    if length < 0:
        return False
    summands = divisible_summands(q, r)
    key = (q, r)
    with _lock:
        table = _tables.get(key)
        if table is None:
            table = bytearray([1])
            _tables[key] = table
        if length >= len(table):
            for x in range(len(table), length + 1):
                table.append(1 if any(s <= x and table[x - s] for s in summands) else 0)
    return bool(table[length])


def reduce_quotient(a: int, k: int, q: int) -> int | None:
    """Largest b with a - b*[k]_q >= 0 and feasible as a q^(k-1)-divisible length.

    Returns None when no such b exists within the scan window (the window of
    10*[k]_q steps is far beyond the largest infeasible length, since [k]_q is
    itself a generator).
    """
    if a < 0:
        raise ParameterError(f"need a >= 0, got {a}")
    if k < 2:
        raise ParameterError(f"need k >= 2, got {k}")
    step = q_int(k, q)
    b0 = a // step
    for b in range(b0, max(-1, b0 - 10 * step), -1):
        if divisible_length_feasible(a - b * step, q, k - 1):
            return b
    return None


@dataclass
class PointMultiset:
    """Multiset of projective points of F_q^n with integer multiplicities."""

    q: int
    n: int
    weights: dict[tuple[int, ...], int] = dc_field(default_factory=dict)

    @property
    def size(self) -> int:
        return sum(self.weights.values())

    def multiplicity(self, point: tuple[int, ...]) -> int:
        return self.weights.get(point, 0)

    def max_multiplicity(self) -> int:
        return max(self.weights.values(), default=0)

    def complement(self, lam: int) -> "PointMultiset":
        """Multiset with weight lam - w(P) at every point P of the ambient space."""
        if lam < self.max_multiplicity():
            raise ParameterError(f"cap {lam} below maximum multiplicity {self.max_multiplicity()}")
        weights = {}
        for pt in all_points(self.q, self.n):
            w = lam - self.weights.get(pt, 0)
            if w:
                weights[pt] = w
        return PointMultiset(self.q, self.n, weights)

    def hyperplane_size(self, normal: tuple[int, ...]) -> int:
        """Total multiplicity on the hyperplane {x : normal . x = 0}."""
        f: Field = field(self.q)
        return sum(w for pt, w in self.weights.items() if dot(f, normal, pt) == 0)


def multiset_of_code(code) -> PointMultiset:
    """Point multiset generated by the blocks of a code (dimension >= 2).

    The multiplicity of a point is the number of blocks containing it, so the
    total size is |code| * [k]_q.
    """
    blocks = getattr(code, "blocks", code)
    blocks = list(blocks)
    if not blocks:
        raise ParameterError("empty code has no point multiset")
    k = blocks[0].dim
    if k < 2:
        raise ParameterError(f"blocks must have dimension >= 2, got {k}")
    weights: dict[tuple[int, ...], int] = {}
    for b in blocks:
        for pt in subspace_points(b):
            weights[pt] = weights.get(pt, 0) + 1
    return PointMultiset(blocks[0].q, blocks[0].n, weights)

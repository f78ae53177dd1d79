"""Linear MRD codes of Gabidulin type, translate families, and lifting.

Codewords are k x m matrices over F_q.  They are produced by evaluating
q-linearized polynomials at a power basis of F_(q^max(k,m)) and expanding
each symbol into base-field coordinates; when k > m the construction runs on
the transposed shape and transposes back.  A family of pairwise disjoint
translates with union minimum rank distance delta - 1 is obtained from coset
representatives inside the nested evaluation code of one higher degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotApplicableError, ParameterError
from .gf import Field, Matrix, Subspace, extension, field, mat_add, mat_rank, mat_sub


@dataclass(frozen=True)
class RankCode:
    """Set of k x m matrices over F_q with designed minimum rank distance."""

    q: int
    k: int
    m: int
    delta: int
    codewords: tuple[Matrix, ...]
    linear: bool = True
    field_note: str = ""

    @property
    def size(self) -> int:
        return len(self.codewords)

    def expected_size(self) -> int:
        lo, hi = min(self.k, self.m), max(self.k, self.m)
        return self.q ** (hi * (lo - self.delta + 1))


def _power_points(big: Field, count: int) -> list[int]:
    """1, x, x^2, ... in the extension field (a basis prefix, so independent).

    The class of x has integer encoding equal to the base field order.
    """
    base = getattr(big, "base", None)
    x = base.q if base is not None else 1
    pts = [1]
    for _ in range(count - 1):
        pts.append(big.mul(pts[-1], x))
    return pts


def _symbol_row(big: Field, value: int, width: int) -> tuple[int, ...]:
    """Coordinates of a field element w.r.t. the power basis (digit expansion)."""
    b = big.base.q if hasattr(big, "base") else big.q
    row = []
    for _ in range(width):
        row.append(value % b)
        value //= b
    return tuple(row)


def _evaluate(big: Field, coeffs: list[int], frob_pows: list[list[int]], kk: int, mm: int, qbase: int) -> Matrix:
    """Matrix of the linearized polynomial with the given coefficients."""
    rows = []
    for j in range(kk):
        s = 0
        for i, c in enumerate(coeffs):
            if c:
                s = big.add(s, big.mul(c, frob_pows[j][i]))
        rows.append(_symbol_row(big, s, mm))
    return Matrix._raw(field(qbase), tuple(rows), mm)


def _frobenius_table(big: Field, points: list[int], depth: int, qbase: int) -> list[list[int]]:
    table = []
    for g in points:
        row = [g]
        for _ in range(depth):
            row.append(big.pow(row[-1], qbase))
        table.append(row)
    return table


def gabidulin(k: int, m: int, delta: int, q: int) -> RankCode:
    """Linear MRD code of k x m matrices over F_q with min rank distance delta.

    Size is exactly q^(max(k,m) * (min(k,m) - delta + 1)); codewords are listed
    in a deterministic order.
    """
    if not 1 <= delta <= min(k, m):
        raise ParameterError(f"need 1 <= delta <= min(k,m), got delta={delta}, k={k}, m={m}")
    transposed = k > m
    kk, mm = (m, k) if transposed else (k, m)
    big = extension(q, mm) if mm > 1 else field(q)
    deg = kk - delta + 1  # number of polynomial coefficients
    points = _power_points(big, kk)
    frob = _frobenius_table(big, points, deg - 1, q)
    words = []
    for coeffs in itertools.product(range(big.q), repeat=deg):
        w = _evaluate(big, list(coeffs), frob, kk, mm, q)
        words.append(w.transpose() if transposed else w)
    code = RankCode(q, k, m, delta, tuple(words), True, big.describe())
    assert code.size == code.expected_size(), "MRD size formula violated"
    return code


@dataclass(frozen=True)
class TranslateFamily:
    """alpha-1 pairwise disjoint translates of an MRD code.

    The union has minimum rank distance exactly delta - 1 once there are at
    least two translates; a single translate is the base code itself (exact
    distance delta, flagged via union_distance).
    """

    base: RankCode
    offsets: tuple[Matrix, ...]

    @property
    def count(self) -> int:
        return len(self.offsets)

    @property
    def union_distance(self) -> int:
        return self.base.delta if self.count == 1 else self.base.delta - 1

    def translate(self, i: int) -> list[Matrix]:
        off = self.offsets[i]
        return [mat_add(w, off) for w in self.base.codewords]

    def union(self) -> list[Matrix]:
        out = []
        for i in range(self.count):
            out.extend(self.translate(i))
        return out


def translate_family(base: RankCode, alpha: int) -> TranslateFamily:
    """Pairwise disjoint translates C_1..C_(alpha-1) of `base` (C_1 = base).

    Representatives are the monomials c * x^(q^deg) for the first alpha-1
    field elements c, where deg is the base code's polynomial degree bound;
    any two union elements then differ by a word of the nested code of
    distance delta - 1.
    """
    if base.delta < 2:
        raise NotApplicableError("translate families need designed distance >= 2")
    q = base.q
    hi = max(base.k, base.m)
    if not 2 <= alpha <= q ** hi + 1:
        raise ParameterError(f"need 2 <= alpha <= q^max(k,m) + 1 = {q ** hi + 1}, got {alpha}")
    transposed = base.k > base.m
    kk, mm = (base.m, base.k) if transposed else (base.k, base.m)
    big = extension(q, mm) if mm > 1 else field(q)
    deg = kk - base.delta + 1
    points = _power_points(big, kk)
    frob = _frobenius_table(big, points, deg, q)
    offsets = []
    for c in range(alpha - 1):
        rows = []
        for j in range(kk):
            s = big.mul(c, frob[j][deg]) if c else 0
            rows.append(_symbol_row(big, s, mm))
        off = Matrix._raw(field(q), tuple(rows), mm)
        offsets.append(off.transpose() if transposed else off)
    return TranslateFamily(base, tuple(offsets))


def rank_distance(a: Matrix, b: Matrix) -> int:
    """Rank of a - b over the common field."""
    if a.nrows != b.nrows or a.ncols != b.ncols or a.field.q != b.field.q:
        raise ParameterError("shape mismatch")
    return mat_rank(mat_sub(a, b))


def lift(a: Matrix) -> Subspace:
    """Row space of [I | a] in F_q^(k+m); the result is already in RREF."""
    k = a.nrows
    rows = []
    for i in range(k):
        rows.append(tuple(1 if j == i else 0 for j in range(k)) + a.rows[i])
    return Subspace._from_rref_rows(a.field, k + a.ncols, rows)

"""Exact linear algebra over small finite fields F_q, q a prime power.

Extension fields use a fixed irreducible modulus polynomial, recorded on the
field object so that generated data is reproducible bit for bit.  Degrees not
covered by the built-in list fall back to the lexicographically smallest monic
irreducible polynomial over the base field (a deterministic choice).

Matrices are immutable.  Subspaces are stored in reduced row-echelon form
(RREF), which is a canonical representation: two subspaces are equal iff
their basis matrices are identical.  The elimination kernels work on
bit-packed rows (one int per row) when q = 2, which is the common case and
the performance-critical one for Grassmannian enumeration.

All types here are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError
from .qcalc import gaussian_binomial, q_int

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

# Fixed irreducible polynomials for the extension fields met in practice,
# keyed by (p, e), coefficients in ascending degree order (leading 1 last).
_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),                # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),             # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),          # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),       # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 1, 1, 0, 1),    # x^6 + x^4 + x^3 + x + 1
    (3, 2): (2, 2, 1),                # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),             # x^3 + 2x + 1
    (5, 2): (2, 4, 1),                # x^2 + 4x + 2
    (7, 2): (3, 6, 1),                # x^2 + 6x + 3
}


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p^e with p prime; raise ParameterError otherwise."""
    if q < 2:
        raise ParameterError(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if p * p > q and p != q:
            break
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ParameterError(f"{q} is not a prime power")
            return p, e
    return q, 1


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
        return True
    except ParameterError:
        return False


class Field:
    """Prime field F_p with arithmetic mod p."""

    __slots__ = ("q", "p", "e", "modulus")

    def __init__(self, p: int):
        self.q = p
        self.p = p
        self.e = 1
        self.modulus: tuple[int, ...] | None = None

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def elements(self) -> range:
        return range(self.q)

    def describe(self) -> str:
        return f"GF({self.q})"

    def __repr__(self) -> str:
        return f"Field({self.q})"


class ExtensionField(Field):
    """F_(b^m) built over a base field of order b with a monic modulus.

    Elements are integers 0..q-1 whose base-b digits are the coefficients of
    a polynomial over the base field (digit i = coefficient of x^i).
    """

    __slots__ = ("base", "degree", "_mul_table", "_inv_table", "_mul_cache")

    def __init__(self, base: Field, degree: int, modulus: tuple[int, ...] | None = None):
        if degree < 2:
            raise ParameterError("extension degree must be >= 2")
        self.base = base
        self.degree = degree
        self.q = base.q ** degree
        self.p = base.p
        self.e = base.e * degree
        if modulus is None:
            modulus = _IRREDUCIBLE.get((base.q, degree)) or _lex_smallest_irreducible(base, degree)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ParameterError("modulus must be monic of the stated degree")
        self.modulus = tuple(modulus)
        if self.q <= 256:
            self._mul_table = [[self._mul_poly(a, b) for b in range(self.q)] for a in range(self.q)]
            self._inv_table = [0] * self.q
            for a in range(1, self.q):
                self._inv_table[a] = self._pow_raw(a, self.q - 2)
        else:
            self._mul_table = None
            self._inv_table = None
            self._mul_cache: dict[tuple[int, int], int] = {}

    # digit <-> int helpers (little-endian digits over the base field)
    def _digits(self, a: int) -> list[int]:
        b = self.base.q
        out = []
        for _ in range(self.degree):
            out.append(a % b)
            a //= b
        return out

    def _undigits(self, ds: Sequence[int]) -> int:
        b = self.base.q
        v = 0
        for d in reversed(ds):
            v = v * b + d
        return v

    def add(self, a: int, b: int) -> int:
        bf = self.base
        return self._undigits([bf.add(x, y) for x, y in zip(self._digits(a), self._digits(b))])

    def sub(self, a: int, b: int) -> int:
        bf = self.base
        return self._undigits([bf.sub(x, y) for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a: int) -> int:
        bf = self.base
        return self._undigits([bf.neg(x) for x in self._digits(a)])

    def _mul_poly(self, a: int, b: int) -> int:
        bf = self.base
        m = self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if not x:
                continue
            for j, y in enumerate(db):
                if y:
                    prod[i + j] = bf.add(prod[i + j], bf.mul(x, y))
        for deg in range(2 * m - 2, m - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i in range(m):
                    if self.modulus[i]:
                        prod[deg - m + i] = bf.sub(prod[deg - m + i], bf.mul(c, self.modulus[i]))
        return self._undigits(prod[:m])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        key = (a, b) if a <= b else (b, a)
        v = self._mul_cache.get(key)
        if v is None:
            v = self._mul_poly(a, b)
            self._mul_cache[key] = v
        return v

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_poly(r, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def describe(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        poly = " + ".join(terms)
        return f"GF({self.q}) = GF({self.base.q})[x]/({poly})"

    def __repr__(self) -> str:
        return f"ExtensionField({self.base.q}^{self.degree})"


def _poly_divmod(bf: Field, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = num[:]
    dd = len(den) - 1
    lead_inv = bf.inv(den[-1])
    while len(num) - 1 >= dd and any(num):
        shift = len(num) - 1 - dd
        c = bf.mul(num[-1], lead_inv)
        for i, d in enumerate(den):
            num[shift + i] = bf.sub(num[shift + i], bf.mul(c, d))
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    return [], num


def _lex_smallest_irreducible(base: Field, degree: int) -> tuple[int, int]:
    """Lexicographically smallest monic irreducible of the given degree."""
    b = base.q
    divisors = []
    for d in range(1, degree // 2 + 1):
        for tail in itertools.product(range(b), repeat=d):
            divisors.append(list(tail) + [1])
    for tail in itertools.product(range(b), repeat=degree):
        cand = list(tail) + [1]
        if cand[0] == 0:
            continue  # reducible: divisible by x
        ok = True
        for div in divisors:
            _, rem = _poly_divmod(base, cand[:], div)
            if not any(rem):
                ok = False
                break
        if ok:
            return tuple(cand)
    raise ParameterError(f"no irreducible polynomial of degree {degree} found over GF({b})")


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    """Field of order q (cached; q must be a prime power)."""
    p, e = prime_power(q)
    if e == 1:
        return Field(p)
    return ExtensionField(Field(p), e)


@lru_cache(maxsize=None)
def extension(base_q: int, degree: int) -> Field:
    """Degree-m extension of the order-base_q field (cached)."""
    if degree == 1:
        return field(base_q)
    return ExtensionField(field(base_q), degree)


def _as_field(q) -> Field:
    return q if isinstance(q, Field) else field(q)


class Matrix:
    """Immutable matrix over a finite field; rows are tuples of field elements."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_packed")

    def __init__(self, f: Field, rows: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise ParameterError("ragged rows")
                for x in r:
                    if not 0 <= x < f.q:
                        raise ParameterError(f"entry {x} outside field of order {f.q}")
        elif ncols is None:
            ncols = 0
        self.field = f
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        self._packed = None

    @classmethod
    def _raw(cls, f: Field, rows: tuple[tuple[int, ...], ...], ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field = f
        m.nrows = len(rows)
        m.ncols = ncols
        m.rows = rows
        m._packed = None
        return m

    @classmethod
    def zero(cls, f: Field, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(f, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, f: Field, n: int) -> "Matrix":
        return cls._raw(f, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_packed(cls, f: Field, packed: Sequence[int], ncols: int) -> "Matrix":
        q = f.q
        rows = []
        for v in packed:
            row = [0] * ncols
            for j in range(ncols - 1, -1, -1):
                v, row[j] = divmod(v, q)
            rows.append(tuple(row))
        return cls._raw(f, tuple(rows), ncols)

    @property
    def packed(self) -> tuple[int, ...]:
        """Rows packed base-q, column 0 most significant (bit-packed for q=2)."""
        if self._packed is None:
            q = self.field.q
            out = []
            for r in self.rows:
                v = 0
                for x in r:
                    v = v * q + x
                out.append(v)
            self._packed = tuple(out)
        return self._packed

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field.q == other.field.q
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix(q={self.field.q}, {self.nrows}x{self.ncols})"


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows != b.nrows or a.ncols != b.ncols:
        raise ParameterError("shape mismatch")
    f = a.field
    rows = tuple(tuple(f.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows))
    return Matrix._raw(f, rows, a.ncols)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows != b.nrows or a.ncols != b.ncols:
        raise ParameterError("shape mismatch")
    f = a.field
    rows = tuple(tuple(f.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.rows, b.rows))
    return Matrix._raw(f, rows, a.ncols)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ParameterError("shape mismatch")
    f = a.field
    bt = tuple(zip(*b.rows)) if b.rows else ()
    rows = []
    for ra in a.rows:
        row = []
        for col in bt:
            acc = 0
            for x, y in zip(ra, col):
                if x and y:
                    acc = f.add(acc, f.mul(x, y))
            row.append(acc)
        rows.append(tuple(row))
    return Matrix._raw(f, tuple(rows), b.ncols)


def vstack(mats: Sequence[Matrix]) -> Matrix:
    f = mats[0].field
    ncols = mats[0].ncols
    rows = []
    for m in mats:
        if m.ncols != ncols or m.field.q != f.q:
            raise ParameterError("ambient mismatch")
        rows.extend(m.rows)
    return Matrix._raw(f, tuple(rows), ncols)


# --- elimination kernels -------------------------------------------------

def _rref_bits(row_ints: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan over F_2 on bit-packed rows; returns (rows, pivot columns)."""
    rows = list(row_ints)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << (ncols - 1 - col)
        pr = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= pivot_row
        pivots.append(col)
        r += 1
    return rows, pivots


def _rank_bits(row_ints: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for r in row_ints:
        while r:
            length = r.bit_length()
            b = basis.get(length)
            if b is None:
                basis[length] = r
                break
            r ^= b
    return len(basis)


def _rref_generic(rows_in: Sequence[Sequence[int]], ncols: int, f: Field) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows_in]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = f.inv(rows[r][col])
        if inv != 1:
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.  Shape is preserved; idempotent."""
    f = m.field
    if f.q == 2:
        rows, pivots = _rref_bits(list(m.packed), m.ncols)
        return Matrix.from_packed(f, rows, m.ncols), len(pivots)
    rows, pivots = _rref_generic(m.rows, m.ncols, f)
    return Matrix._raw(f, tuple(tuple(r) for r in rows), m.ncols), len(pivots)


def mat_rank(m: Matrix) -> int:
    if m.field.q == 2:
        return _rank_bits(m.packed)
    _, pivots = _rref_generic(m.rows, m.ncols, m.field)
    return len(pivots)


def kernel_basis(m: Matrix) -> Matrix:
    """Basis of the right kernel {x : m x^T = 0}, one solution per row."""
    f = m.field
    rows, pivots = _rref_generic(m.rows, m.ncols, f)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    out = []
    for j in free:
        v = [0] * m.ncols
        v[j] = 1
        for i, p in enumerate(pivots):
            v[p] = f.neg(rows[i][j])
        out.append(tuple(v))
    return Matrix._raw(f, tuple(out), m.ncols)


# --- subspaces ------------------------------------------------------------

class Subspace:
    """A k-dimensional subspace of F_q^n, stored as its unique RREF basis."""

    __slots__ = ("field", "n", "dim", "basis", "packed")

    def __init__(self, f: Field, n: int, basis: Matrix):
        # internal constructor: trusts that `basis` is a full-rank RREF matrix
        self.field = f
        self.n = n
        self.dim = basis.nrows
        self.basis = basis
        self.packed = basis.packed

    @classmethod
    def _from_rref_rows(cls, f: Field, n: int, rows: Sequence[Sequence[int]]) -> "Subspace":
        return cls(f, n, Matrix._raw(f, tuple(tuple(r) for r in rows), n))

    @classmethod
    def from_rows(cls, q, n: int, rows: Iterable[Iterable[int]]) -> "Subspace":
        """Canonicalize a spanning set: reduce, drop zero rows."""
        f = _as_field(q)
        m = Matrix(f, rows, n)
        if m.ncols != n:
            raise ParameterError(f"rows have length {m.ncols}, ambient is {n}")
        red, rank = rref(m)
        return cls(f, n, Matrix._raw(f, red.rows[:rank], n))

    @classmethod
    def zero(cls, q, n: int) -> "Subspace":
        return cls(_as_field(q), n, Matrix._raw(_as_field(q), (), n))

    @property
    def q(self) -> int:
        return self.field.q

    def pivot_columns(self) -> tuple[int, ...]:
        cols = []
        for r in self.basis.rows:
            cols.append(next(j for j, x in enumerate(r) if x))
        return tuple(cols)

    def contains_vector(self, v: Sequence[int]) -> bool:
        stacked = Matrix(self.field, list(self.basis.rows) + [tuple(v)], self.n)
        return mat_rank(stacked) == self.dim

    def to_lines(self) -> list[str]:
        if self.q > len(DIGITS):
            raise ParameterError(f"text encoding supports q <= {len(DIGITS)}")
        return ["".join(DIGITS[x] for x in row) for row in self.basis.rows]

    @classmethod
    def from_lines(cls, q, n: int, lines: Sequence[str]) -> "Subspace":
        f = _as_field(q)
        rows = []
        for line in lines:
            if len(line) != n:
                raise ParameterError(f"expected {n} digits per line, got {line!r}")
            row = []
            for ch in line:
                x = DIGITS.find(ch)
                if x < 0 or x >= f.q:
                    raise ParameterError(f"bad digit {ch!r} for field of order {f.q}")
                row.append(x)
            rows.append(row)
        return cls.from_rows(f, n, rows)

    def sort_key(self):
        return (self.dim, self.packed)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.q == other.q
            and self.n == other.n
            and self.packed == other.packed
        )

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.packed))

    def __repr__(self) -> str:
        return f"Subspace(q={self.q}, n={self.n}, dim={self.dim}, rows={self.packed})"


def _pivot_sets_colex(n: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), k), key=lambda c: tuple(reversed(c)))


def enumerate_subspaces(n: int, k: int, q) -> Iterator[Subspace]:
    """All k-subspaces of F_q^n in canonical RREF.

    Deterministic order: pivot-column sets in colexicographic order, then the
    free entries run as a base-q counter (row-major, last position fastest).
    Yields exactly gaussian_binomial(n, k, q) distinct subspaces.
    """
    f = _as_field(q)
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    qq = f.q
    for pivots in _pivot_sets_colex(n, k):
        pset = set(pivots)
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pset]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        nfree = len(free)
        rfree = list(reversed(free))
        for counter in range(qq ** nfree):
            rows = [r[:] for r in base]
            c = counter
            for (i, j) in rfree:
                c, d = divmod(c, qq)
                if d:
                    rows[i][j] = d
            yield Subspace._from_rref_rows(f, n, rows)


def span_dim(subspaces: Sequence[Subspace]) -> int:
    """Dimension of the sum, i.e. the rank of the stacked basis matrices."""
    if not subspaces:
        return 0
    n = subspaces[0].n
    qv = subspaces[0].q
    for s in subspaces:
        if s.n != n or s.q != qv:
            raise ParameterError("ambient mismatch")
    if qv == 2:
        return _rank_bits(r for s in subspaces for r in s.packed)
    stacked = vstack([s.basis for s in subspaces])
    return mat_rank(stacked)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """2 dim(U+V) - dim U - dim V (the subspace metric)."""
    return 2 * span_dim([u, v]) - u.dim - v.dim


def contains(u: Subspace, v: Subspace) -> bool:
    """True iff v is a subspace of u."""
    return span_dim([u, v]) == u.dim


def orthogonal_complement(u: Subspace) -> Subspace:
    """Orthogonal complement w.r.t. the standard bilinear form sum(x_i y_i)."""
    ker = kernel_basis(u.basis)
    return Subspace.from_rows(u.field, u.n, ker.rows)


# --- projective points and sub-subspace enumeration ----------------------

def _projective_coeff_vectors(q: int, k: int) -> Iterator[tuple[int, ...]]:
    """One coefficient vector per 1-subspace of F_q^k (first nonzero entry 1)."""
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def normalize_point(f: Field, vec: Sequence[int]) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1 (canonical projective point)."""
    for x in vec:
        if x:
            if x == 1:
                return tuple(vec)
            inv = f.inv(x)
            return tuple(f.mul(inv, y) for y in vec)
    raise ParameterError("zero vector has no projective representative")


def subspace_points(s: Subspace) -> list[tuple[int, ...]]:
    """Canonical representatives of the 1-subspaces contained in s."""
    f = s.field
    rows = s.basis.rows
    pts = []
    for coeffs in _projective_coeff_vectors(f.q, s.dim):
        v = [0] * s.n
        for c, row in zip(coeffs, rows):
            if c:
                v = [f.add(x, f.mul(c, y)) for x, y in zip(v, row)]
        pts.append(normalize_point(f, v))
    return pts


def all_points(q, n: int) -> list[tuple[int, ...]]:
    """Canonical representatives of all 1-subspaces of F_q^n."""
    f = _as_field(q)
    return [v for v in _projective_coeff_vectors(f.q, n)]


def dot(f: Field, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = f.add(acc, f.mul(x, y))
    return acc


@lru_cache(maxsize=None)
def _rref_reps(k: int, t: int, q: int) -> tuple[Matrix, ...]:
    return tuple(s.basis for s in enumerate_subspaces(k, t, q))


def subspaces_of(block: Subspace, t: int) -> list[Subspace]:
    """The t-subspaces of a block, enumerated inside the block's coordinates."""
    if t > block.dim:
        raise ParameterError(f"t={t} exceeds block dimension {block.dim}")
    out = []
    for rep in _rref_reps(block.dim, t, block.q):
        prod = mat_mul(rep, block.basis)
        out.append(Subspace.from_rows(block.field, block.n, prod.rows))
    return out


def hyperplanes(q, n: int) -> list[Subspace]:
    """All (n-1)-subspaces of F_q^n, as kernels of the projective functionals."""
    f = _as_field(q)
    out = []
    for normal in all_points(f, n):
        m = Matrix(f, [normal], n)
        out.append(Subspace.from_rows(f, n, kernel_basis(m).rows))
    return out

"""Exact polynomial arithmetic over the integers.

Coefficients are plain Python ints, so every value is exact at any magnitude.
Polynomials are kept in canonical form (no trailing zero coefficients, no
stored zero terms), which makes structural equality the same thing as
mathematical equality.

All values are immutable once constructed and every operation is a pure
function of its inputs, so everything here is safe to use concurrently.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Iterator, Mapping

from .guards import GuardExceeded

DET_SIZE_LIMIT = 12


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0, k > n, or n < 0.

    The out-of-range-means-zero convention matters: it is what makes the
    band structure of binomial path-count matrices come out right without
    any special-casing at the edges.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


class UniPoly:
    """Univariate polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of x**k.  The stored tuple never has
    trailing zeros; the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coef: int, power: int) -> "UniPoly":
        return cls((0,) * power + (coef,))

    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = _coerce_uni(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "UniPoly":
        return self + (-_coerce_uni(other))

    def __rsub__(self, other) -> "UniPoly":
        return _coerce_uni(other) + (-self)

    def __mul__(self, other) -> "UniPoly":
        other = _coerce_uni(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return "UniPoly(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        """Serialize as {"var": "x", "coeffs": [...]} with decimal-string coefficients."""
        return {"var": "x", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "UniPoly":
        if not isinstance(data, dict) or "coeffs" not in data:
            raise ValueError("polynomial JSON must be an object with a 'coeffs' field")
        return cls(int(c) for c in data["coeffs"])


def _coerce_uni(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, int):
        return UniPoly((value,))
    raise TypeError(f"cannot combine UniPoly with {type(value).__name__}")


class MultiPoly:
    """Polynomial in n variables with integer coefficients.

    Stored as a map from exponent vector (length-n tuple of nonnegative ints)
    to nonzero coefficient.  All exponent vectors in one polynomial have the
    same length.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[tuple[int, ...], int] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(
                    f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"exponent vector {exp} has a negative entry")
            if coef != 0:
                clean[exp] = clean.get(exp, 0) + coef
                if clean[exp] == 0:
                    del clean[exp]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def monomial(cls, exp: tuple[int, ...], coef: int = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def permute_variables(self, perm: tuple[int, ...]) -> "MultiPoly":
        """Apply x_i -> x_{perm(i)}: exponent slot i moves to slot perm[i] (0-based)."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.nvars - 1}")
        out: dict[tuple[int, ...], int] = {}
        for exp, coef in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = coef
        return MultiPoly(self.nvars, out)

    def __repr__(self) -> str:
        if not self.terms:
            return f"MultiPoly({self.nvars}, 0)"
        bits = []
        for exp in sorted(self.terms):
            coef = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exp)
                if e
            )
            bits.append(f"{coef}*{mono}" if mono else str(coef))
        return f"MultiPoly({self.nvars}, " + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        """Serialize with terms sorted lexicographically by exponent vector."""
        return {
            "vars": self.nvars,
            "terms": [
                {"exp": list(exp), "coef": str(self.terms[exp])}
                for exp in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        if not isinstance(data, dict) or "vars" not in data or "terms" not in data:
            raise ValueError("multivariate polynomial JSON needs 'vars' and 'terms'")
        terms = {}
        for i, term in enumerate(data["terms"]):
            if "exp" not in term or "coef" not in term:
                raise ValueError(f"terms[{i}]: needs 'exp' and 'coef'")
            terms[tuple(term["exp"])] = int(term["coef"])
        return cls(int(data["vars"]), terms)


class PolyMatrix:
    """Square matrix of UniPoly entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Iterable[Iterable[UniPoly]]):
        rows = tuple(tuple(_coerce_uni(e) for e in row) for row in entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    def __getitem__(self, key: tuple[int, int]) -> UniPoly:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"PolyMatrix({self.entries!r})"

    def evaluate(self, value: int) -> list[list[int]]:
        """Entrywise evaluation at an integer point."""
        return [[p(value) for p in row] for row in self.entries]


def det_division_free(matrix: PolyMatrix, *, size_limit: int = DET_SIZE_LIMIT) -> UniPoly:
    """Exact determinant of a polynomial matrix, computed without division.

    Uses the column-subset dynamic program: f(S) is the determinant of the
    top-|S| rows restricted to column set S, built up by Laplace expansion
    along the last of those rows.  Cost is O(2^n * n) polynomial products,
    which is why matrices are capped at ``size_limit`` (default 12).
    """
    n = matrix.n
    if n > size_limit:
        raise GuardExceeded("determinant size", n, size_limit)
    if n == 0:
        return UniPoly.one()
    # minors[S] = det of rows 0..popcount(S)-1, columns indicated by bitmask S
    minors: dict[int, UniPoly] = {0: UniPoly.one()}
    for size in range(1, n + 1):
        row = size - 1
        nxt: dict[int, UniPoly] = {}
        for mask, minor in minors.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                new_mask = mask | bit
                # parity of the Laplace cofactor: position of j among the
                # chosen columns, counted from the high end
                above = sum(1 for k in range(j + 1, n) if new_mask & (1 << k))
                term = minor * matrix[row, j]
                if above % 2:
                    term = -term
                if new_mask in nxt:
                    nxt[new_mask] = nxt[new_mask] + term
                else:
                    nxt[new_mask] = term
        minors = nxt
    return minors[(1 << n) - 1]


def det_leibniz(matrix: PolyMatrix) -> UniPoly:
    """Determinant by direct Leibniz sum; independent cross-check for small n."""
    n = matrix.n
    total = UniPoly.zero()
    for perm in permutations(range(n)):
        prod = UniPoly.one()
        for i, j in enumerate(perm):
            prod = prod * matrix[i, j]
        total = total + (prod if perm_sign(perm) > 0 else -prod)
    return total


def det_int(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination.

    Used for cheap closed-form counts; has no size cap because it is O(n^3).
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def perm_sign(perm: Iterable[int]) -> int:
    """Sign of a permutation given as a sequence of images (any base index)."""
    perm = tuple(perm)
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def path_count_matrix_entry(part: int, bound: int, i: int, j: int) -> UniPoly:
    """Entry (i, j) of the refined path-count matrix, 1-based indices.

    C(part + bound - 1, bound + j - i) * x  +  C(part + bound - 1, bound + j - i - 1),
    where ``part`` is the j-th part of the shape.  The x-coefficient counts the
    lattice paths whose final step is east, the constant term those whose final
    step is south.
    """
    cx = binomial(part + bound - 1, bound + j - i)
    c0 = binomial(part + bound - 1, bound + j - i - 1)
    return UniPoly((c0, cx))


def lgv_matrix(shape, bound: int) -> PolyMatrix:
    """Refined binomial path-count matrix for a shape and entry bound.

    Row i, column j (1-based) counts lattice paths from the i-th start point
    to the j-th end point of the bounded-plane-partition path configuration,
    weighted by x when the final step is east.  Its determinant is the
    generating function of the bounded plane partitions of that shape by the
    number of rows containing 0.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    parts = tuple(shape)
    n = len(parts)
    return PolyMatrix(
        [
            [path_count_matrix_entry(parts[j], bound, i + 1, j + 1) for j in range(n)]
            for i in range(n)
        ]
    )

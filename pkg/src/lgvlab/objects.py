"""Partitions, bounded plane partitions, and semistandard Young tableaux.

A plane partition of shape lambda bounded by m is a filling of the Young
diagram of lambda with integers in [0, m] that weakly decreases along rows
and down columns.  Zero is a genuine entry here: "row contains 0" means the
value 0 appears in the row, not that the row is short.

Enumeration orders are fixed and documented so that golden-file tests are
byte-stable:

* partitions: by total size, then reverse-lexicographically within a size;
* plane partitions: lexicographically on the row-major entry sequence,
  largest first (the all-m filling comes first, all-zeros last);
* tableaux: lexicographically on the row-major entry sequence, smallest first.

All objects are immutable and hashable.
"""

from __future__ import annotations

from typing import Iterator

from .algebra import MultiPoly, UniPoly, binomial, det_int
from .guards import check_guard


class Partition:
    """Weakly decreasing sequence of positive integers; may be empty."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts[{i}]: part {p} is not positive")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(
                    f"parts[{i}]: parts must be weakly decreasing "
                    f"({parts[i - 1]} < {p})"
                )
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self) -> int:
        """Number of parts (rows)."""
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def size(self) -> int:
        """Number of cells."""
        return sum(self.parts)

    def transpose(self) -> "Partition":
        """Conjugate partition: part j counts the rows of length >= j."""
        if not self.parts:
            return Partition(())
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse comma-separated parts; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition from {text!r}") from exc
        return cls(parts)


def enumerate_partitions(max_size: int) -> Iterator[Partition]:
    """Yield every partition with at most ``max_size`` cells, exactly once.

    Order: by total size ascending, then reverse-lexicographic within each
    size, so (4) comes before (3,1) before (2,2) before (2,1,1) before
    (1,1,1,1).
    """
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")

    def of_size(n: int, largest: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in of_size(n - first, first):
                yield (first,) + rest

    for n in range(max_size + 1):
        for parts in of_size(n, n):
            yield Partition(parts)


class PlanePartition:
    """Filling of a Young diagram with entries in [0, bound], weakly decreasing
    along rows and down columns."""

    __slots__ = ("shape", "bound", "rows")

    def __init__(self, shape: Partition, bound: int, rows):
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        if bound < 0:
            raise ValueError(f"bound {bound} is negative")
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        if len(rows) != len(shape):
            raise ValueError(f"expected {len(shape)} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != shape[i]:
                raise ValueError(
                    f"rows[{i}]: expected {shape[i]} entries, got {len(row)}"
                )
            for k, e in enumerate(row):
                if not 0 <= e <= bound:
                    raise ValueError(
                        f"rows[{i}][{k}]: entry {e} outside [0, {bound}]"
                    )
                if k > 0 and row[k - 1] < e:
                    raise ValueError(
                        f"rows[{i}][{k}]: row not weakly decreasing "
                        f"({row[k - 1]} < {e})"
                    )
                if i > 0 and k < shape[i - 1] and rows[i - 1][k] < e:
                    raise ValueError(
                        f"rows[{i}][{k}]: column not weakly decreasing "
                        f"({rows[i - 1][k]} < {e})"
                    )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PlanePartition is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanePartition):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.bound == other.bound
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.bound, self.rows))

    def __repr__(self) -> str:
        return f"PlanePartition({list(self.shape.parts)}, {self.bound}, {[list(r) for r in self.rows]})"

    def zero_rows(self) -> int:
        """Number of rows containing the entry 0 (i.e. whose last entry is 0)."""
        return sum(1 for row in self.rows if row and row[-1] == 0)

    def max_rows(self) -> int:
        """Number of rows containing the bound (i.e. whose first entry equals it)."""
        return sum(1 for row in self.rows if row and row[0] == self.bound)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "max": self.bound,
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PlanePartition":
        if not isinstance(data, dict):
            raise ValueError("plane partition JSON must be an object")
        for field in ("shape", "max", "rows"):
            if field not in data:
                raise ValueError(f"plane partition JSON missing field {field!r}")
        return cls(Partition(data["shape"]), int(data["max"]), data["rows"])


def enumerate_plane_partitions(
    shape: Partition, bound: int
) -> Iterator[PlanePartition]:
    """Yield every plane partition of the shape with entries in [0, bound].

    Order is lexicographic on the row-major entry sequence, largest first.
    The stream is exhaustive and duplicate-free; the all-zeros filling is
    always the final element.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    cells = [(i, k) for i, p in enumerate(shape) for k in range(p)]
    rows = [[0] * p for p in shape]

    def fill(pos: int) -> Iterator[PlanePartition]:
        if pos == len(cells):
            yield PlanePartition(shape, bound, rows)
            return
        i, k = cells[pos]
        top = bound
        if k > 0:
            top = min(top, rows[i][k - 1])
        if i > 0:
            top = min(top, rows[i - 1][k])
        for value in range(top, -1, -1):
            rows[i][k] = value
            yield from fill(pos + 1)
        rows[i][k] = 0

    yield from fill(0)


def count_plane_partitions(shape: Partition, bound: int) -> int:
    """Closed-form count of PP(shape; bound): determinant of binomial path counts.

    Entry (i, j), 1-based, is C(shape_j + bound, bound + j - i); the
    determinant equals the number of non-intersecting path families, which
    equals the number of plane partitions.
    """
    parts = tuple(shape)
    n = len(parts)
    return det_int(
        [
            [binomial(parts[j] + bound, bound + j + 1 - (i + 1)) for j in range(n)]
            for i in range(n)
        ]
    )


def genfun_by_enumeration(
    shape: Partition,
    bound: int,
    statistic: str,
    guard_limit: int | None = None,
) -> UniPoly:
    """Generating function of PP(shape; bound) by exhaustive tally.

    ``statistic`` is "zeros" (rows containing 0) or "maxes" (rows containing
    the bound).  The coefficient of x**k counts the plane partitions whose
    statistic equals k; the value at x = 1 is the total count.
    """
    if statistic not in ("zeros", "maxes"):
        raise ValueError(f"unknown statistic {statistic!r}; use 'zeros' or 'maxes'")
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    check_guard(
        f"PP({list(shape.parts)}; {bound})",
        count_plane_partitions(shape, bound),
        guard_limit,
    )
    tally: dict[int, int] = {}
    for pp in enumerate_plane_partitions(shape, bound):
        k = pp.zero_rows() if statistic == "zeros" else pp.max_rows()
        tally[k] = tally.get(k, 0) + 1
    if not tally:
        return UniPoly.zero()
    coeffs = [0] * (max(tally) + 1)
    for k, c in tally.items():
        coeffs[k] = c
    return UniPoly(coeffs)


class Tableau:
    """Semistandard Young tableau: rows weakly increase, columns strictly
    increase, entries in [1, varcount]."""

    __slots__ = ("shape", "varcount", "rows")

    def __init__(self, shape: Partition, varcount: int, rows):
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        if varcount < 1:
            raise ValueError(f"varcount {varcount} must be at least 1")
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        if len(rows) != len(shape):
            raise ValueError(f"expected {len(shape)} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != shape[i]:
                raise ValueError(
                    f"rows[{i}]: expected {shape[i]} entries, got {len(row)}"
                )
            for k, e in enumerate(row):
                if not 1 <= e <= varcount:
                    raise ValueError(
                        f"rows[{i}][{k}]: entry {e} outside [1, {varcount}]"
                    )
                if k > 0 and row[k - 1] > e:
                    raise ValueError(
                        f"rows[{i}][{k}]: row not weakly increasing "
                        f"({row[k - 1]} > {e})"
                    )
                if i > 0 and rows[i - 1][k] >= e:
                    raise ValueError(
                        f"rows[{i}][{k}]: column not strictly increasing "
                        f"({rows[i - 1][k]} >= {e})"
                    )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "varcount", varcount)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.varcount == other.varcount
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.varcount, self.rows))

    def __repr__(self) -> str:
        return f"Tableau({list(self.shape.parts)}, {self.varcount}, {[list(r) for r in self.rows]})"

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of column j (0-based), top to bottom; strictly increasing."""
        return tuple(row[j] for row in self.rows if len(row) > j)

    def weight(self) -> tuple[int, ...]:
        """Content vector: component t counts entries equal to t+1."""
        counts = [0] * self.varcount
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "vars": self.varcount,
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        if not isinstance(data, dict):
            raise ValueError("tableau JSON must be an object")
        for field in ("shape", "vars", "rows"):
            if field not in data:
                raise ValueError(f"tableau JSON missing field {field!r}")
        return cls(Partition(data["shape"]), int(data["vars"]), data["rows"])


def enumerate_tableaux(shape: Partition, varcount: int) -> Iterator[Tableau]:
    """Yield every semistandard tableau of the shape with entries <= varcount.

    Order is lexicographic on the row-major entry sequence, smallest first.
    The stream is empty exactly when the shape has more rows than varcount.
    """
    if varcount < 1:
        raise ValueError("varcount must be at least 1")
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    if len(shape) > varcount:
        return
    cells = [(i, k) for i, p in enumerate(shape) for k in range(p)]
    rows = [[0] * p for p in shape]

    def fill(pos: int) -> Iterator[Tableau]:
        if pos == len(cells):
            yield Tableau(shape, varcount, rows)
            return
        i, k = cells[pos]
        low = 1
        if k > 0:
            low = max(low, rows[i][k - 1])
        if i > 0:
            low = max(low, rows[i - 1][k] + 1)
        for value in range(low, varcount + 1):
            rows[i][k] = value
            yield from fill(pos + 1)
        rows[i][k] = 0

    yield from fill(0)


def count_tableaux(shape: Partition, varcount: int) -> int:
    """Closed-form tableau count: determinant of binomial path counts.

    Entry (i, j), 1-based, is C(varcount, mu_j - j + i) where mu is the
    transposed shape; the determinant counts non-intersecting path families,
    which are in bijection with the tableaux.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    mu = shape.transpose()
    n = len(mu)
    return det_int(
        [
            [binomial(varcount, mu[j] - (j + 1) + (i + 1)) for j in range(n)]
            for i in range(n)
        ]
    )


def schur_by_enumeration(
    shape: Partition, varcount: int, guard_limit: int | None = None
) -> MultiPoly:
    """Schur polynomial in ``varcount`` variables by tableau tally.

    Sums the monomial x^(weight of T) over all semistandard tableaux of the
    shape with entries at most varcount.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    check_guard(
        f"SSYT({list(shape.parts)}; {varcount})",
        count_tableaux(shape, varcount),
        guard_limit,
    )
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_tableaux(shape, varcount):
        w = t.weight()
        terms[w] = terms.get(w, 0) + 1
    return MultiPoly(varcount, terms)

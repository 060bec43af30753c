"""South-east lattice paths on Z^2 and their signed families.

A path starts at a point and takes unit steps east (E, x+1) or south
(S, y-1); it is stored as a start point plus a step word over {E, S}.
Monotonicity makes every path self-avoiding, so a family of paths is
non-intersecting exactly when no lattice point lies on two of them.

A signed family connects start points a_1..a_n to end points b_1..b_n
through a permutation sigma (path i runs from a_i to b_{sigma(i)}); its
sign is the sign of sigma.

Two endpoint configurations are built here:

* bounded plane partitions of shape lambda with entries in [0, m]:
  a_i = (-i, -i), b_j = (lambda_j - j, -m - j); path i records row i,
  the k-th east step of path i at height y encoding the entry m + i + y;
* semistandard tableaux with entries at most n:
  a_j = (-j, -j), b_j = (mu_j - j, mu_j - j - n) with mu the transposed
  shape, so every path has exactly n steps; the positions of the east
  steps of path j are the entries of column j.

Under the first encoding, a row contains 0 exactly when its path ends
with an east step, and contains m exactly when its path starts with one.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from .algebra import binomial, perm_sign
from .guards import check_guard
from .objects import Partition, PlanePartition, Tableau

Point = tuple[int, int]


class Path:
    """Monotone south-east lattice path: a start point and a word over {E, S}."""

    __slots__ = ("start", "word")

    def __init__(self, start: Point, word: str):
        start = (int(start[0]), int(start[1]))
        for i, ch in enumerate(word):
            if ch not in "ES":
                raise ValueError(f"word[{i}]: invalid step {ch!r}, expected 'E' or 'S'")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    @property
    def end(self) -> Point:
        x, y = self.start
        return (x + self.word.count("E"), y - self.word.count("S"))

    def __len__(self) -> int:
        return len(self.word)

    def points(self) -> tuple[Point, ...]:
        """All visited lattice points, start to end (len(word) + 1 of them)."""
        x, y = self.start
        pts = [(x, y)]
        for ch in self.word:
            if ch == "E":
                x += 1
            else:
                y -= 1
            pts.append((x, y))
        return tuple(pts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self.start == other.start and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.start, self.word))

    def __repr__(self) -> str:
        return f"Path({self.start}, {self.word!r})"

    def to_json(self) -> dict:
        return {"start": list(self.start), "word": self.word}

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        if not isinstance(data, dict) or "start" not in data or "word" not in data:
            raise ValueError("path JSON needs 'start' and 'word'")
        start = data["start"]
        if len(start) != 2:
            raise ValueError(f"start {start} is not a point")
        return cls((start[0], start[1]), data["word"])


class Endpoints:
    """Ordered start points a_1..a_n and end points b_1..b_n."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = tuple((int(x), int(y)) for x, y in a)
        b = tuple((int(x), int(y)) for x, y in b)
        if len(a) != len(b):
            raise ValueError(f"{len(a)} start points but {len(b)} end points")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Endpoints is immutable")

    @property
    def n(self) -> int:
        return len(self.a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endpoints):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"Endpoints(a={list(self.a)}, b={list(self.b)})"


def plane_partition_endpoints(shape: Partition, bound: int) -> Endpoints:
    """Endpoint configuration for PP(shape; bound): a_i = (-i, -i),
    b_j = (shape_j - j, -bound - j), 1-based."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    parts = tuple(shape)
    n = len(parts)
    return Endpoints(
        [(-i, -i) for i in range(1, n + 1)],
        [(parts[j - 1] - j, -bound - j) for j in range(1, n + 1)],
    )


def tableau_endpoints(shape: Partition, varcount: int) -> Endpoints:
    """Endpoint configuration for SSYT(shape; varcount): one path per column.

    With mu the transposed shape, a_j = (-j, -j) and
    b_j = (mu_j - j, mu_j - j - varcount), so every connection takes exactly
    varcount steps, mu_j of them east.
    """
    if varcount < 1:
        raise ValueError("varcount must be at least 1")
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    mu = shape.transpose()
    n = len(mu)
    return Endpoints(
        [(-j, -j) for j in range(1, n + 1)],
        [(mu[j - 1] - j, mu[j - 1] - j - varcount) for j in range(1, n + 1)],
    )


class SignedPathFamily:
    """Paths p_1..p_n with p_i running from a_i to b_{sigma(i)}.

    ``sigma`` is stored 0-based; the sign of the family is the sign of sigma
    and is computed, never stored.
    """

    __slots__ = ("endpoints", "sigma", "paths")

    def __init__(self, endpoints: Endpoints, sigma, paths):
        sigma = tuple(int(s) for s in sigma)
        paths = tuple(paths)
        n = endpoints.n
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma {sigma} is not a permutation of 0..{n - 1}")
        if len(paths) != n:
            raise ValueError(f"expected {n} paths, got {len(paths)}")
        for i, p in enumerate(paths):
            if p.start != endpoints.a[i]:
                raise ValueError(
                    f"paths[{i}] starts at {p.start}, expected {endpoints.a[i]}"
                )
            if p.end != endpoints.b[sigma[i]]:
                raise ValueError(
                    f"paths[{i}] ends at {p.end}, expected {endpoints.b[sigma[i]]}"
                )
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "paths", paths)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPathFamily is immutable")

    @property
    def sign(self) -> int:
        return perm_sign(self.sigma)

    @property
    def n(self) -> int:
        return len(self.paths)

    def is_identity(self) -> bool:
        return all(s == i for i, s in enumerate(self.sigma))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPathFamily):
            return NotImplemented
        return (
            self.endpoints == other.endpoints
            and self.sigma == other.sigma
            and self.paths == other.paths
        )

    def __hash__(self) -> int:
        return hash((self.endpoints, self.sigma, self.paths))

    def __repr__(self) -> str:
        words = [p.word for p in self.paths]
        return f"SignedPathFamily(sigma={list(self.sigma)}, words={words})"

    def to_json(self) -> dict:
        return {
            "sigma": [s + 1 for s in self.sigma],
            "paths": [p.to_json() for p in self.paths],
        }

    @classmethod
    def from_json(cls, data: dict, endpoints: Endpoints) -> "SignedPathFamily":
        if not isinstance(data, dict) or "sigma" not in data or "paths" not in data:
            raise ValueError("family JSON needs 'sigma' and 'paths'")
        sigma = [s - 1 for s in data["sigma"]]
        paths = [Path.from_json(p) for p in data["paths"]]
        return cls(endpoints, sigma, paths)


def is_nonintersecting(family: SignedPathFamily) -> bool:
    """True when no lattice point lies on two distinct paths of the family."""
    seen: set[Point] = set()
    for path in family.paths:
        for pt in path.points():
            if pt in seen:
                return False
            seen.add(pt)
    return True


def pp_encode(pp: PlanePartition) -> SignedPathFamily:
    """Encode a plane partition as an identity-permutation path family.

    Path i (1-based) starts at (-i, -i) and records row i: the k-th east
    step is preceded by exactly bound - entry_k south steps, so larger
    entries travel east earlier (higher).  The result is always
    vertex-disjoint.
    """
    endpoints = plane_partition_endpoints(pp.shape, pp.bound)
    paths = []
    for i, row in enumerate(pp.rows, start=1):
        word = []
        souths = 0
        for entry in row:
            need = pp.bound - entry
            word.append("S" * (need - souths))
            word.append("E")
            souths = need
        word.append("S" * (pp.bound - souths))
        paths.append(Path((-i, -i), "".join(word)))
    return SignedPathFamily(endpoints, range(len(paths)), paths)


def pp_decode(
    family: SignedPathFamily, shape: Partition, bound: int
) -> PlanePartition:
    """Invert pp_encode.

    Requires the identity permutation, the endpoint configuration of
    (shape, bound), and vertex-disjointness; raises ValueError otherwise.
    """
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    expected = plane_partition_endpoints(shape, bound)
    if family.endpoints != expected:
        raise ValueError("family endpoints do not match the (shape, bound) instance")
    if not family.is_identity():
        raise ValueError(f"family permutation {family.sigma} is not the identity")
    if not is_nonintersecting(family):
        raise ValueError("family is intersecting; only disjoint families decode")
    rows = []
    for path in family.paths:
        souths = 0
        row = []
        for ch in path.word:
            if ch == "S":
                souths += 1
            else:
                row.append(bound - souths)
        rows.append(row)
    return PlanePartition(shape, bound, rows)


def ssyt_encode(tableau: Tableau) -> SignedPathFamily:
    """Encode a semistandard tableau as an identity-permutation path family.

    Path j (1-based) has exactly varcount steps; its east steps sit at the
    positions listed in column j of the tableau.  The result is always
    vertex-disjoint.
    """
    endpoints = tableau_endpoints(tableau.shape, tableau.varcount)
    n = tableau.varcount
    paths = []
    for j in range(endpoints.n):
        entries = set(tableau.column(j))
        word = "".join("E" if t in entries else "S" for t in range(1, n + 1))
        paths.append(Path((-(j + 1), -(j + 1)), word))
    return SignedPathFamily(endpoints, range(len(paths)), paths)


def ssyt_decode(
    family: SignedPathFamily, shape: Partition, varcount: int
) -> Tableau:
    """Invert ssyt_encode; same preconditions as pp_decode, plus every path
    must have exactly ``varcount`` steps."""
    shape = shape if isinstance(shape, Partition) else Partition(shape)
    expected = tableau_endpoints(shape, varcount)
    if family.endpoints != expected:
        raise ValueError("family endpoints do not match the (shape, varcount) instance")
    if not family.is_identity():
        raise ValueError(f"family permutation {family.sigma} is not the identity")
    if not is_nonintersecting(family):
        raise ValueError("family is intersecting; only disjoint families decode")
    columns = []
    for j, path in enumerate(family.paths):
        if len(path.word) != varcount:
            raise ValueError(
                f"paths[{j}] has {len(path.word)} steps, expected {varcount}"
            )
        columns.append([t for t, ch in enumerate(path.word, start=1) if ch == "E"])
    rows = [
        [columns[j][i] for j in range(len(columns)) if len(columns[j]) > i]
        for i in range(len(shape))
    ]
    return Tableau(shape, varcount, rows)


def last_step_east_count(family: SignedPathFamily) -> int:
    """Number of paths whose final step is east.

    On an encoded plane partition this equals the number of rows containing
    0: the entry recorded by the final east step is 0 exactly when no south
    steps follow it.
    """
    return sum(1 for p in family.paths if p.word.endswith("E"))


def first_step_east_count(family: SignedPathFamily) -> int:
    """Number of paths whose first step is east.

    On an encoded plane partition this equals the number of rows containing
    the bound: a first east step means the first entry lost no height.
    """
    return sum(1 for p in family.paths if p.word.startswith("E"))


def east_step_labels(family: SignedPathFamily, varcount: int) -> tuple[int, ...]:
    """Label histogram of east steps: component t counts east steps starting
    at a point with x - y = t - 1.

    Every path must have exactly ``varcount`` steps.  On an encoded tableau
    this is the weight vector (entry t of a column is an east step at label
    t, because the k-th step of a diagonal-started path sits at x - y = k - 1).
    """
    counts = [0] * varcount
    for j, path in enumerate(family.paths):
        if len(path.word) != varcount:
            raise ValueError(
                f"paths[{j}] has {len(path.word)} steps, expected {varcount}"
            )
        x, y = path.start
        for ch in path.word:
            if ch == "E":
                label = x - y + 1
                if not 1 <= label <= varcount:
                    raise ValueError(
                        f"paths[{j}]: east step label {label} outside 1..{varcount}"
                    )
                counts[label - 1] += 1
                x += 1
            else:
                y -= 1
    return tuple(counts)


def count_connection_paths(a: Point, b: Point) -> int:
    """Number of monotone paths from a to b: C(dx + dy, dy) with dx the east
    and dy the south displacement; zero when b is not reachable."""
    dx = b[0] - a[0]
    dy = a[1] - b[1]
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dy)


def enumerate_connection_paths(a: Point, b: Point) -> Iterator[Path]:
    """All monotone paths from a to b, ordered by the position set of their
    east steps (lexicographic)."""
    dx = b[0] - a[0]
    dy = a[1] - b[1]
    if dx < 0 or dy < 0:
        return
    total = dx + dy
    for east_positions in combinations(range(total), dx):
        chosen = set(east_positions)
        word = "".join("E" if t in chosen else "S" for t in range(total))
        yield Path(a, word)


def count_families(endpoints: Endpoints) -> int:
    """Total number of signed families over all permutations: the permanent
    of the connection-count matrix (Ryser's formula)."""
    n = endpoints.n
    if n == 0:
        return 1
    m = [
        [count_connection_paths(endpoints.a[i], endpoints.b[j]) for j in range(n)]
        for i in range(n)
    ]
    total = 0
    for mask in range(1, 1 << n):
        bits = bin(mask).count("1")
        prod = 1
        for i in range(n):
            s = 0
            for j in range(n):
                if mask & (1 << j):
                    s += m[i][j]
            prod *= s
            if prod == 0:
                break
        total += (-1) ** (n - bits) * prod
    return total


def count_ni_families(endpoints: Endpoints) -> int:
    """Number of non-intersecting families: the determinant of the
    connection-count matrix."""
    from .algebra import det_int

    n = endpoints.n
    return det_int(
        [
            [count_connection_paths(endpoints.a[i], endpoints.b[j]) for j in range(n)]
            for i in range(n)
        ]
    )


def enumerate_families(
    endpoints: Endpoints, guard_limit: int | None = None
) -> Iterator[SignedPathFamily]:
    """Yield every signed family on the endpoints, exactly once.

    Iterates permutations in itertools order and, within a permutation,
    the per-connection path streams in lexicographic product order.
    Unreachable connections contribute no families for that permutation.
    """
    check_guard("path families", count_families(endpoints), guard_limit)
    n = endpoints.n
    for sigma in permutations(range(n)):
        streams = [
            list(enumerate_connection_paths(endpoints.a[i], endpoints.b[sigma[i]]))
            for i in range(n)
        ]
        if any(not s for s in streams):
            continue
        for paths in product(*streams):
            yield SignedPathFamily(endpoints, sigma, paths)


def enumerate_identity_families(
    endpoints: Endpoints, guard_limit: int | None = None
) -> Iterator[SignedPathFamily]:
    """Yield the families whose permutation is the identity."""
    n = endpoints.n
    projected = 1
    for i in range(n):
        projected *= count_connection_paths(endpoints.a[i], endpoints.b[i])
    check_guard("identity path families", projected, guard_limit)
    identity = tuple(range(n))
    streams = [
        list(enumerate_connection_paths(endpoints.a[i], endpoints.b[i]))
        for i in range(n)
    ]
    if any(not s for s in streams):
        return
    for paths in product(*streams):
        yield SignedPathFamily(endpoints, identity, paths)


def enumerate_ni_families(
    endpoints: Endpoints, guard_limit: int | None = None
) -> Iterator[SignedPathFamily]:
    """Yield the non-intersecting families.

    Filters the identity-permutation stream; on the endpoint configurations
    built here vertex-disjointness forces the identity permutation, so
    nothing is missed (exhaustively checked in the test suite).
    """
    for family in enumerate_identity_families(endpoints, guard_limit):
        if is_nonintersecting(family):
            yield family

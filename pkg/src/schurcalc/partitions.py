"""Partitions, strict partitions, and semistandard Young tableaux.

Everything downstream (Schur functions, Q-tilde functions, Schubert bases)
is indexed by the types in this module.  All values are immutable after
construction and safe to share.
"""

from __future__ import annotations

from functools import lru_cache


class Partition:
    """A weakly decreasing sequence of positive integers.

    Zero parts are stripped at construction so every partition has a unique
    canonical form; equality and hashing are on that form.  Increasing input
    is rejected rather than sorted.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        cleaned = tuple(int(p) for p in parts)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        for i, p in enumerate(cleaned):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {cleaned}")
            if i > 0 and cleaned[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {cleaned}")
        self.parts = cleaned

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based part access with zero padding beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i + 1) >= p for i, p in enumerate(other.parts))

    def fits_rectangle(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def sort_key(self):
        """Global partition order: by weight, then reverse lexicographic."""
        return (self.weight, tuple(-p for p in self.parts))

    def to_json(self) -> list:
        return list(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


class StrictPartition(Partition):
    """A partition with strictly decreasing parts."""

    __slots__ = ()

    def __init__(self, parts=()):
        super().__init__(parts)
        for i in range(1, len(self.parts)):
            if self.parts[i - 1] <= self.parts[i]:
                raise ValueError(f"parts must be strictly decreasing: {self.parts}")

    def __repr__(self) -> str:
        return f"StrictPartition({list(self.parts)})"


def conjugate(lam: Partition) -> Partition:
    return Partition(lam).conjugate()


def staircase(n: int) -> StrictPartition:
    """The strict partition (n, n-1, ..., 1); the point class index of LG(n)."""
    return StrictPartition(range(n, 0, -1))


def rectangle_dual(lam: Partition, r: int, n: int) -> Partition:
    """Poincare dual index inside the r x (n-r) rectangle.

    Pads lam with zeros to length r, reverses, and complements each part in
    n - r.  Involution; weights of a partition and its dual sum to r(n-r).
    """
    lam = Partition(lam)
    cols = n - r
    if not lam.fits_rectangle(r, cols):
        raise ValueError(f"{lam!r} does not fit in the {r}x{cols} rectangle")
    return Partition(cols - lam.part(r - i) for i in range(r))


def strict_complement(mu: StrictPartition, n: int) -> StrictPartition:
    """Poincare dual index on LG(n): complement the parts of mu in {1..n}."""
    mu = StrictPartition(mu)
    if mu.parts and mu.parts[0] > n:
        raise ValueError(f"{mu!r} is not contained in the staircase of {n}")
    present = set(mu.parts)
    return StrictPartition([k for k in range(n, 0, -1) if k not in present])


def enumerate_partitions(d: int, max_part: int | None = None,
                         max_length: int | None = None) -> list[Partition]:
    """All partitions of weight d within the bounds, largest-first.

    The order is reverse lexicographic, the fixed global order used for
    every transition matrix and serialization.
    """
    if d < 0:
        raise ValueError("weight must be nonnegative")
    first = d if max_part is None else min(d, max_part)
    length = d if max_length is None else max_length

    def build(remaining: int, cap: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from build(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    return list(build(d, first, length, []))


def enumerate_strict_partitions(d: int, max_part: int) -> list[StrictPartition]:
    """All strict partitions of weight d with parts at most max_part, largest-first."""

    def build(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield StrictPartition(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from build(remaining - p, p - 1, prefix)
            prefix.pop()

    return list(build(d, max_part, []))


def partitions_up_to(d: int) -> list[Partition]:
    """All partitions of weight at most d in the global order."""
    out: list[Partition] = []
    for k in range(d + 1):
        out.extend(enumerate_partitions(k))
    return out


def hook_contains(lam: Partition, n: int, m: int) -> bool:
    """Whether lam lies in the (n, m)-hook: every part after the n-th is <= m.

    This is the support region of s_lambda(E - F) when E has rank n and F
    has rank m.  Diagnostic use only; the core algebra never consults it.
    """
    lam = Partition(lam)
    return lam.part(n + 1) <= m


class SemistandardTableau:
    """A filling of a Young diagram: rows weakly increase, columns strictly increase."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        self.shape = Partition(len(row) for row in self.rows)
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v < 1:
                    raise ValueError("entries must be positive")
                if j > 0 and row[j - 1] > v:
                    raise ValueError(f"row {i} is not weakly increasing: {row}")
                if i > 0 and self.rows[i - 1][j] >= v:
                    raise ValueError(f"column {j} is not strictly increasing")

    def weight(self, n: int) -> tuple[int, ...]:
        """Multiplicity vector of the entries 1..n."""
        counts = [0] * n
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, SemistandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SemistandardTableau({[list(r) for r in self.rows]})"


def enumerate_ssyt(shape: Partition, n: int) -> list[SemistandardTableau]:
    """All semistandard tableaux of the given shape with entries in 1..n.

    The count is the dimension of the irreducible GL(n) representation
    indexed by the shape.
    """
    shape = Partition(shape)
    if not shape.parts:
        return [SemistandardTableau(())]
    rows: list[list[int]] = [[] for _ in shape.parts]
    out: list[SemistandardTableau] = []
    cells = [(i, j) for i, p in enumerate(shape.parts) for j in range(p)]

    def fill(k: int):
        if k == len(cells):
            out.append(SemistandardTableau([tuple(r) for r in rows]))
            return
        i, j = cells[k]
        lo = rows[i][j - 1] if j > 0 else 1
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, n + 1):
            rows[i].append(v)
            fill(k + 1)
            rows[i].pop()

    fill(0)
    return out


@lru_cache(maxsize=None)
def ssyt_weights(shape: Partition, n: int) -> tuple[tuple[int, ...], ...]:
    """Weights of all SSYT of the shape, cached; the GL(n) character support."""
    return tuple(t.weight(n) for t in enumerate_ssyt(shape, n))

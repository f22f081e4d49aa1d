"""Jordan-type calculus for nilpotent operators.

Provides the closed-form block decomposition of a Kronecker product of two
unipotent Jordan blocks, the multiplicity recursion for d-fold tensor powers
of a size-3 block, and a rank-based oracle that reads the Jordan type of any
nilpotent matrix off the rank sequence of its powers, using exact integer
elimination throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import NotNilpotent

Entry = int | Fraction


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes, as a map size -> multiplicity."""

    blocks: dict[int, int]

    def __post_init__(self):
        tidy = {k: m for k, m in sorted(self.blocks.items()) if m}
        if any(k < 1 or m < 0 for k, m in tidy.items()):
            raise ValueError("block sizes and multiplicities must be positive")
        object.__setattr__(self, "blocks", tidy)

    @property
    def dimension(self) -> int:
        return sum(k * m for k, m in self.blocks.items())

    def __str__(self):
        if not self.blocks:
            return "(empty)"
        return " + ".join(
            f"J{k}" if m == 1 else f"{m}*J{k}" for k, m in self.blocks.items()
        )


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix with exact rational entries."""

    rows: int
    cols: int
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Entry]]) -> "ExactMatrix":
        grid = tuple(tuple(r) for r in rows)
        if not grid:
            raise ValueError("matrix needs at least one row")
        return cls(len(grid), len(grid[0]), grid)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        ))

    @classmethod
    def jordan_block(cls, size: int, eigenvalue: Entry = 0) -> "ExactMatrix":
        """Single Jordan block with ones on the superdiagonal."""
        return cls(size, size, tuple(
            tuple(
                eigenvalue if i == j else (1 if j == i + 1 else 0)
                for j in range(size)
            )
            for i in range(size)
        ))

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, blocks of self scaled copies of other."""
        grid = []
        for a in range(self.rows):
            for b in range(other.rows):
                row = []
                for c in range(self.cols):
                    s = self.entries[a][c]
                    if s:
                        row.extend(s * v for v in other.entries[b])
                    else:
                        row.extend([0] * other.cols)
                grid.append(tuple(row))
        return ExactMatrix(self.rows * other.rows, self.cols * other.cols, tuple(grid))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        ))


def kron_jordan(m: int, n: int) -> JordanType:
    """Jordan type of the Kronecker product of unipotent blocks of sizes m, n:
    one block of each size n-m+1, n-m+3, ..., n+m-1 (after sorting m <= n)."""
    if m < 1 or n < 1:
        raise ValueError("block sizes must be positive")
    if m > n:
        m, n = n, m
    return JordanType({k: 1 for k in range(n - m + 1, n + m, 2)})


def mu(d: int) -> dict[int, int]:
    """Block-size multiplicities of the d-th tensor power of a size-3 block,
    by the three-term recursion with base {1: 1}."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    cur = {1: 1}
    for _ in range(d):
        nxt: dict[int, int] = {}
        top = max(cur) + 2
        for k in range(1, top + 1, 2):
            if k == 1:
                v = cur.get(3, 0)
            else:
                v = cur.get(k - 2, 0) + cur.get(k, 0) + cur.get(k + 2, 0)
            if v:
                nxt[k] = v
        cur = nxt
    return cur


def delta_tensor_matrix(d: int) -> ExactMatrix:
    """Matrix of the letter-lowering Leibniz action on length-d words over
    {X, Y, Z}: each Y in a word drops to X and each Z to Y, one at a time.

    Words index the basis in base-3 (X=0, Y=1, Z=2, first letter most
    significant); entries are 0 or 1.
    """
    if d < 1:
        raise ValueError("d must be positive")
    size = 3 ** d
    grid = [[0] * size for _ in range(size)]
    for col in range(size):
        for pos in range(d):
            p3 = 3 ** (d - 1 - pos)
            if (col // p3) % 3:
                grid[col - p3][col] = 1
    return ExactMatrix(size, size, tuple(tuple(r) for r in grid))


# ---------------------------------------------------------------------------
# exact sparse elimination


def exact_rank(rows: Iterable[Mapping[int, Entry]]) -> int:
    """Rank of the row space, by fraction-free integer elimination.

    Each row is a sparse map column -> value; rational rows are cleared to
    integers first (row scaling does not change rank).  Rows are combined as
    pivot*row - factor*pivot_row and re-normalized by their gcd, so all
    arithmetic stays in the integers.
    """
    int_rows = []
    for row in rows:
        scale = 1
        for v in row.values():
            if isinstance(v, Fraction) and v.denominator != 1:
                scale = scale * v.denominator // gcd(scale, v.denominator)
        cleaned = {}
        for j, v in row.items():
            iv = int(v * scale)
            if iv:
                cleaned[j] = iv
        if cleaned:
            int_rows.append(cleaned)
    return _rank_int_rows(int_rows)


def _normalize(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for j in row:
            row[j] //= g


def _rank_int_rows(rows: list[dict[int, int]]) -> int:
    active: dict[int, dict[int, int]] = {}
    colmap: dict[int, set[int]] = {}
    for rid, row in enumerate(rows):
        _normalize(row)
        active[rid] = row
        for j in row:
            colmap.setdefault(j, set()).add(rid)
    rank = 0
    while active:
        # Markowitz-style pivot: sparsest column, then sparsest row in it.
        pc = None
        best = None
        for j, rids in colmap.items():
            if not rids:
                continue
            if best is None or len(rids) < best:
                best = len(rids)
                pc = j
                if best == 1:
                    break
        if pc is None:
            break
        pr = min(colmap[pc], key=lambda rid: (len(active[rid]), abs(active[rid][pc])))
        prow = active.pop(pr)
        for j in prow:
            colmap[j].discard(pr)
        pv = prow[pc]
        rank += 1
        for rid in list(colmap[pc]):
            row = active[rid]
            f = row[pc]
            new = {j: pv * v for j, v in row.items()}
            for j, v in prow.items():
                nv = new.get(j, 0) - f * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            for j in row.keys() - new.keys():
                colmap[j].discard(rid)
            for j in new.keys() - row.keys():
                colmap.setdefault(j, set()).add(rid)
            if new:
                _normalize(new)
                active[rid] = new
            else:
                del active[rid]
        colmap.pop(pc, None)
    return rank


def _sparse_rows(matrix: ExactMatrix) -> list[dict[int, int]]:
    """Integer sparse rows of the matrix scaled by one global denominator,
    which preserves ranks of all powers and nilpotency."""
    scale = 1
    for row in matrix.entries:
        for v in row:
            if isinstance(v, Fraction) and v.denominator != 1:
                scale = scale * v.denominator // gcd(scale, v.denominator)
    out = []
    for row in matrix.entries:
        out.append({j: int(v * scale) for j, v in enumerate(row) if v})
    return out


def _sparse_matmul(a: list[dict[int, int]], b: list[dict[int, int]]) -> list[dict[int, int]]:
    out = []
    for row in a:
        acc: dict[int, int] = {}
        for k, av in row.items():
            brow = b[k]
            for j, bv in brow.items():
                v = acc.get(j, 0) + av * bv
                if v:
                    acc[j] = v
                else:
                    del acc[j]
        out.append(acc)
    return out


def jordan_type_of_nilpotent(matrix: ExactMatrix) -> JordanType:
    """Jordan type of a nilpotent matrix from the ranks of its powers:
    the multiplicity of size k is rank(N^(k-1)) - 2*rank(N^k) + rank(N^(k+1)).

    Nilpotency is certified by the rank sequence itself: for a nilpotent
    matrix the ranks strictly decrease to 0, while for anything else they
    stabilize at a positive value (equivalent to checking N^rows = 0).
    """
    if matrix.rows != matrix.cols:
        raise NotNilpotent("matrix is not square")
    n = matrix.rows
    base = _sparse_rows(matrix)
    ranks = [n]
    power = base
    while ranks[-1] > 0:
        r = exact_rank(power)
        if r == ranks[-1]:
            raise NotNilpotent(f"rank of powers stabilizes at {r}")
        ranks.append(r)
        if r:
            power = _sparse_matmul(power, base)
    blocks: dict[int, int] = {}
    rank_at = lambda k: ranks[k] if k < len(ranks) else 0
    for k in range(1, len(ranks)):
        m = rank_at(k - 1) - 2 * rank_at(k) + rank_at(k + 1)
        if m:
            blocks[k] = m
    return JordanType(blocks)

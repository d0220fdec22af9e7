"""Exact nilpotent linear algebra: ground truth for the unramified theory.

Jordan blocks are realized as genuine matrices, tensor-sum operators
J_a (x) 1 + 1 (x) J_b are built explicitly, and ranks come from exact
fraction-free Gaussian elimination.  Nothing here consults the pairing
table or the exponent formulas, which is the point: for representations
supported on the unramified orbit, the Artin exponent equals the rank of
the nilpotent operator, so these ranks independently check the formula
path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .model import UNRAMIFIED_ID
from .rep import WDRep


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)


class NilpotentOp:
    """Dense exact matrix wrapper, verified nilpotent on construction."""

    def __init__(self, entries):
        rows = [tuple(Fraction(v) for v in row) for row in entries]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.entries = tuple(rows)
        if n and rank_of_power(self._sparse(), n) != 0:
            raise ValueError("matrix is not nilpotent")

    def _sparse(self):
        return {
            i: {j: v for j, v in enumerate(row) if v}
            for i, row in enumerate(self.entries)
        }

    def rank(self) -> int:
        return exact_rank(self._sparse().values())

    def jordan_type(self) -> Partition:
        return jordan_type_from_ranks(self.n, rank_sequence(self._sparse(), self.n))


# -- sparse exact elimination ----------------------------------------------


def exact_rank(rows) -> int:
    """Rank of a matrix given as a list of sparse rows {col: value}.

    Fraction-free: each reduction replaces row by piv_lead*row -
    row_lead*piv, which preserves rank over the rationals exactly.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                rank += 1
                break
            a, b = row[lead], piv[lead]
            new = {}
            for c in row.keys() | piv.keys():
                v = b * row.get(c, 0) - a * piv.get(c, 0)
                if v:
                    new[c] = v
            row = new
    return rank


def _sparse_mul(a: dict, b: dict) -> dict:
    """Product of sparse maps {row: {col: val}} over a shared index space."""
    out = {}
    for r, row in a.items():
        acc: dict[int, Fraction] = {}
        for k, va in row.items():
            for c, vb in b.get(k, {}).items():
                w = acc.get(c, 0) + va * vb
                if w:
                    acc[c] = w
                else:
                    acc.pop(c, None)
        if acc:
            out[r] = acc
    return out


def rank_sequence(mat: dict, n: int) -> list[int]:
    """[rank(M^1), rank(M^2), ...] down to rank 0; raises if M is not
    nilpotent within n powers."""
    ranks = []
    power = mat
    for _ in range(max(n, 1)):
        r = exact_rank(power.values())
        ranks.append(r)
        if r == 0:
            return ranks
        power = _sparse_mul(power, mat)
    raise ValueError("matrix is not nilpotent")


def rank_of_power(mat: dict, k: int) -> int:
    """Rank of M^e for the smallest power of two e >= k (by squaring).
    Used only for nilpotency checks, where rank 0 at any e >= dim decides."""
    power = mat
    e = 1
    while e < k:
        power = _sparse_mul(power, power)
        e *= 2
    return exact_rank(power.values())


def jordan_type_from_ranks(n: int, ranks: list[int]) -> Partition:
    """Block sizes from the rank sequence: the number of blocks of size at
    least k is rank(M^(k-1)) - rank(M^k)."""
    seq = [n] + list(ranks)
    while seq[-1] != 0:
        seq.append(0)
    parts = []
    for k in range(1, len(seq)):
        at_least_k = seq[k - 1] - seq[k]
        at_least_k1 = seq[k] - seq[k + 1] if k + 1 < len(seq) else 0
        exactly_k = at_least_k - at_least_k1
        if exactly_k < 0:
            raise ValueError(f"rank sequence {seq} is not convex-decreasing")
        parts.extend([k] * exactly_k)
    parts.sort(reverse=True)
    return Partition(tuple(parts))


# -- tensor-sum operators ----------------------------------------------------


def _tensor_sum_matrix(a: Partition, b: Partition) -> dict:
    """Sparse map of J_a (x) 1 + 1 (x) J_b for block-diagonal regular
    nilpotents built from the two partitions.

    Basis vector (block pair bp, i, j) maps to (bp, i+1, j) + (bp, i, j+1),
    coordinates clipped at the block boundary.  Indices are packed by the
    antidiagonal i+j, which keeps elimination fill-in local.
    """
    mat = {}
    offsets = []
    base = 0
    width = max(list(a.parts) + list(b.parts)) + 2
    for p in a.parts:
        for q in b.parts:
            offsets.append((base, p, q))
            base += (p + q + 2) * width
    for base_idx, p, q in offsets:
        def idx(i, j):
            return base_idx + (i + j) * width + i
        for i in range(p):
            for j in range(q):
                row = {}
                if i + 1 < p:
                    row[idx(i + 1, j)] = 1
                if j + 1 < q:
                    row[idx(i, j + 1)] = 1
                if row:
                    mat[idx(i, j)] = row
    return mat


def nilpotent_rank(a: Partition, b: Partition) -> int:
    """Rank of J_a (x) 1 + 1 (x) J_b by exact elimination."""
    if not a.parts or not b.parts:
        raise ValueError("partitions must be nonempty")
    return exact_rank(_tensor_sum_matrix(a, b).values())


@lru_cache(maxsize=None)
def tensor_partition(r: int, s: int) -> Partition:
    """Jordan type of J_r (x) 1 + 1 (x) J_s, from the rank sequence of its
    powers.  Has min(r,s) parts summing to r*s."""
    if r < 1 or s < 1:
        raise ValueError("block sizes must be >= 1")
    mat = _tensor_sum_matrix(Partition((r,)), Partition((s,)))
    n = r * s
    return jordan_type_from_ranks(n, rank_sequence(mat, n))


# -- the oracle --------------------------------------------------------------


def _unramified_partition(x: WDRep) -> Partition:
    parts = []
    for k, ind in x.terms:
        if ind.cls != UNRAMIFIED_ID:
            raise ValueError(
                f"representation has non-unramified class {ind.cls!r}; the oracle "
                f"only covers the unramified orbit"
            )
        parts.extend([ind.r] * k)
    parts.sort(reverse=True)
    return Partition(tuple(parts))


def unramified_oracle_artin(x: WDRep, y: WDRep) -> int:
    """Artin exponent of x tensor y for unramified-orbit representations,
    computed as the rank of the tensor-sum nilpotent operator."""
    a = _unramified_partition(x)
    b = _unramified_partition(y)
    if not a.parts or not b.parts:
        return 0
    return nilpotent_rank(a, b)

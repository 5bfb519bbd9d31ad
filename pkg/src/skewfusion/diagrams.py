"""Partitions, skew Young diagrams, the column tableau with box contents,
and two independent dimension oracles for skew GL_N modules."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class Partition:
    """Weakly decreasing finite list of non-negative integers.

    Trailing zeros are accepted on input and stripped in canonical form.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        if parts and parts[-1] < 0:
            raise ValueError("parts must be non-negative")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @classmethod
    def from_str(cls, s: str) -> "Partition":
        s = s.strip()
        if not s:
            return cls()
        return cls(int(p) for p in s.split(","))

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        """1-based part access; zero beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%s)" % (list(self.parts),)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        return all(self[k] >= other[k] for k in range(1, len(other) + 1))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= k)
                         for k in range(1, self.parts[0] + 1))


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


class SkewDiagram:
    """Skew diagram lambda/mu: the boxes (i, j) with mu_i < j <= lambda_i."""

    __slots__ = ("lam", "mu")

    def __init__(self, lam: Partition, mu: Partition = None):
        mu = mu if mu is not None else Partition()
        if not lam.contains(mu):
            raise ValueError("mu is not contained in lambda: %r / %r" % (lam, mu))
        self.lam = lam
        self.mu = mu

    @property
    def n_boxes(self) -> int:
        return self.lam.size - self.mu.size

    def boxes(self):
        """Boxes in column order: j ascending, then i ascending."""
        out = []
        width = self.lam[1]
        for j in range(1, width + 1):
            for i in range(1, len(self.lam) + 1):
                if self.mu[i] < j <= self.lam[i]:
                    out.append((i, j))
        return out

    def __eq__(self, other):
        return (isinstance(other, SkewDiagram)
                and self.lam == other.lam and self.mu == other.mu)

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __repr__(self):
        return "SkewDiagram(%s, %s)" % (list(self.lam), list(self.mu))

    def to_json(self):
        return {"lambda": list(self.lam), "mu": list(self.mu)}


@dataclass(frozen=True)
class ColumnTableau:
    """Column filling of a skew diagram: boxes numbered 1..n down successive
    columns, with contents c_k = j - i and column indices col_k."""

    boxes: tuple
    contents: tuple
    columns: tuple

    @property
    def n(self):
        return len(self.boxes)


def column_tableau(w: SkewDiagram) -> ColumnTableau:
    boxes = tuple(w.boxes())
    return ColumnTableau(
        boxes=boxes,
        contents=tuple(j - i for (i, j) in boxes),
        columns=tuple(j for (_, j) in boxes),
    )


def skew_dimension_jt(w: SkewDiagram, N: int) -> int:
    """Number of semistandard fillings with entries in 1..N, by the
    Jacobi-Trudi determinant det[ h_{lam_i - mu_j - i + j}(1^N) ]."""
    lam, mu = w.lam, w.mu
    ell = len(lam)
    if ell == 0:
        return 1

    def h(k):
        if k < 0:
            return 0
        return comb(N + k - 1, k)

    m = [[h(lam[i + 1] - mu[j + 1] - (i + 1) + (j + 1)) for j in range(ell)]
         for i in range(ell)]
    return _int_det(m)


def _int_det(m):
    """Determinant of a small integer matrix by fraction-free elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def skew_dimension_ssyt(w: SkewDiagram, N: int, max_boxes: int = 12) -> int:
    """Brute-force count of semistandard fillings, entries in 1..N: weakly
    increasing along rows, strictly increasing down columns."""
    if w.n_boxes > max_boxes:
        raise ValueError("diagram too large for brute-force enumeration")
    # Boxes row by row so that both constraining neighbours are already filled.
    boxes = sorted(w.boxes())
    filled = {}

    def count(idx):
        if idx == len(boxes):
            return 1
        i, j = boxes[idx]
        lo, hi = 1, N
        left = filled.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        above = filled.get((i - 1, j))
        if above is not None:
            lo = max(lo, above + 1)
        total = 0
        for v in range(lo, hi + 1):
            filled[(i, j)] = v
            total += count(idx + 1)
        filled.pop((i, j), None)
        return total

    return count(0)


@dataclass(frozen=True)
class BoundsReport:
    """Containment bounds and the nonvanishing criterion for Hom spaces."""

    lam_bound: bool
    mu_bound: bool
    containment: bool
    width_bound: bool

    @property
    def nonvanishing(self) -> bool:
        return self.containment and self.width_bound

    @property
    def admissible(self) -> bool:
        return self.lam_bound and self.mu_bound

    def to_json(self):
        return {
            "lam_bound": self.lam_bound,
            "mu_bound": self.mu_bound,
            "containment": self.containment,
            "width_bound": self.width_bound,
            "nonvanishing": self.nonvanishing,
            "admissible": self.admissible,
        }


def validate_bounds(w: SkewDiagram, N: int, M: int, mode: str) -> BoundsReport:
    """Bounds on the shape: gl mode needs lam'_1 <= N+M and mu'_1 <= M;
    so mode needs lam'_1 + lam'_2 <= N+M and mu'_1 + mu'_2 <= M."""
    lamc = w.lam.conjugate()
    muc = w.mu.conjugate()
    if mode == "gl":
        lam_bound = lamc[1] <= N + M
        mu_bound = muc[1] <= M
    elif mode == "so":
        lam_bound = lamc[1] + lamc[2] <= N + M
        mu_bound = muc[1] + muc[2] <= M
    else:
        raise ValueError("mode must be 'gl' or 'so'")
    containment = w.lam.contains(w.mu)
    width = max(len(lamc), len(muc))
    width_bound = all(lamc[k] - muc[k] <= N for k in range(1, width + 1))
    return BoundsReport(lam_bound, mu_bound, containment, width_bound)


def partitions_of(n: int, max_part: int = None, max_len: int = None):
    """All partitions of n with bounded part size and length."""
    max_part = n if max_part is None else max_part
    max_len = n if max_len is None else max_len

    def gen(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in gen(rem - p, p, slots - 1):
                yield (p,) + rest

    for parts in gen(n, max_part, max_len):
        yield Partition(parts)


def skew_shapes(n: int, distinct_by_translation: bool = False):
    """Canonical skew diagrams with exactly n boxes, lambda within an n x n box.

    Canonical means: the first and last rows of lambda carry at least one box
    and the last box row starts at column 1, so duplicates of the same box set
    are produced only once.  With distinct_by_translation, shapes whose box
    sets coincide after translating to the origin are also deduplicated.
    """
    if n == 0:
        yield SkewDiagram(Partition(()), Partition(()))
        return
    seen = set()
    for total in range(n, n * n + 1):
        for lam in partitions_of(total, max_part=n, max_len=n):
            for mu in _subpartitions(lam, total - n):
                w = SkewDiagram(lam, mu)
                if w.n_boxes != n:
                    continue
                if lam[1] <= mu[1]:
                    continue
                ell = len(lam)
                if lam[ell] <= mu[ell] or mu[ell] != 0:
                    continue
                boxes = frozenset(w.boxes())
                if distinct_by_translation:
                    imin = min(i for i, _ in boxes)
                    jmin = min(j for _, j in boxes)
                    key = frozenset((i - imin, j - jmin) for i, j in boxes)
                else:
                    key = boxes
                if key in seen:
                    continue
                seen.add(key)
                yield w


def _subpartitions(lam: Partition, size: int):
    """Partitions of the given size contained in lam."""

    def gen(idx, rem, cap):
        if rem == 0:
            yield ()
            return
        if idx > len(lam):
            return
        hi = min(cap, lam[idx], rem)
        for p in range(hi, 0, -1):
            for rest in gen(idx + 1, rem - p, p):
                yield (p,) + rest

    for parts in gen(1, size, lam[1] if len(lam) else 0):
        yield Partition(parts)

"""Exact sparse linear operators on (C^N)^(tensor n): permutations,
contractions, composition, exact rank / image bases, traceless subspace."""

from __future__ import annotations

import os

from .scalars import Rat, ZERO, ONE, rat_to_str

DEFAULT_MAX_DIM = 100_000


class SizeGuardError(ValueError):
    """Requested tensor space exceeds the desk-scale dimension guard."""


def _max_dim():
    env = os.environ.get("FUSION_MAX_DIM")
    return int(env) if env else DEFAULT_MAX_DIM


class TensorSpace:
    """(C^N)^(tensor n) with basis words (i_1, ..., i_n), i_k in 1..N,
    enumerated lexicographically (letters stored 0-based internally)."""

    __slots__ = ("N", "n", "dim", "_words", "_digits")

    def __init__(self, N: int, n: int, force: bool = False):
        if N < 1 or n < 0:
            raise ValueError("need N >= 1 and n >= 0")
        dim = N ** n
        if dim > _max_dim() and not force:
            raise SizeGuardError(
                "dimension %d exceeds guard %d (use force/FUSION_MAX_DIM)"
                % (dim, _max_dim()))
        self.N = N
        self.n = n
        self.dim = dim
        self._words = None
        self._digits = None

    @property
    def words(self):
        if self._words is None:
            words = [()]
            for _ in range(self.n):
                words = [w + (a,) for w in words for a in range(self.N)]
            self._words = words
        return self._words

    def index(self, word) -> int:
        idx = 0
        for a in word:
            idx = idx * self.N + a
        return idx

    def __eq__(self, other):
        return (isinstance(other, TensorSpace)
                and self.N == other.N and self.n == other.n)

    def __repr__(self):
        return "TensorSpace(N=%d, n=%d)" % (self.N, self.n)


class SparseOperator:
    """Exact rational matrix on a TensorSpace; zero entries absent."""

    __slots__ = ("space", "entries")

    def __init__(self, space: TensorSpace, entries=None):
        self.space = space
        self.entries = {}
        if entries:
            for k, v in entries.items():
                v = Rat(v)
                if v != 0:
                    self.entries[k] = v

    @classmethod
    def identity(cls, space: TensorSpace):
        op = cls(space)
        op.entries = {(i, i): ONE for i in range(space.dim)}
        return op

    @classmethod
    def zero(cls, space: TensorSpace):
        return cls(space)

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, SparseOperator)
                and self.space == other.space and self.entries == other.entries)

    def copy(self):
        op = SparseOperator(self.space)
        op.entries = dict(self.entries)
        return op

    def _check(self, other):
        if self.space != other.space:
            raise ValueError("operator space mismatch")

    def add(self, other):
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, ZERO) + v
            if w == 0:
                out.pop(k, None)
            else:
                out[k] = w
        res = SparseOperator(self.space)
        res.entries = out
        return res

    __add__ = add

    def __neg__(self):
        res = SparseOperator(self.space)
        res.entries = {k: -v for k, v in self.entries.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Rat(c)
        res = SparseOperator(self.space)
        if c != 0:
            res.entries = {k: v * c for k, v in self.entries.items()}
        return res

    def compose(self, other):
        """Exact matrix product self * other."""
        self._check(other)
        bycol = {}
        for (r, c), v in self.entries.items():
            bycol.setdefault(c, []).append((r, v))
        out = {}
        for (k, c), vb in other.entries.items():
            hits = bycol.get(k)
            if not hits:
                continue
            for r, va in hits:
                key = (r, c)
                w = out.get(key, ZERO) + va * vb
                if w == 0:
                    out.pop(key, None)
                else:
                    out[key] = w
        res = SparseOperator(self.space)
        res.entries = out
        return res

    __mul__ = compose

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse coordinate vector (dict index -> Rat)."""
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x is not None:
                w = out.get(r, ZERO) + v * x
                if w == 0:
                    out.pop(r, None)
                else:
                    out[r] = w
        return out

    def column(self, c: int) -> dict:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def trace(self):
        return sum((v for (r, c), v in self.entries.items() if r == c), ZERO)

    def transpose(self):
        res = SparseOperator(self.space)
        res.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return res

    def to_json(self):
        items = sorted(self.entries.items())
        return {
            "N": self.space.N,
            "n": self.space.n,
            "entries": [[r, c, rat_to_str(v)] for (r, c), v in items],
        }

    def rank(self) -> int:
        return len(image_basis(self).vectors)


def compose(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a.compose(b)


def permutation_op(s, sp: TensorSpace) -> SparseOperator:
    """Operator P_s sending the basis word (i_1,...,i_n) to the word whose
    position s(k) carries i_k; satisfies P_s P_t = P_{s o t}.

    s is given as a tuple (s(1), ..., s(n)) of 1-based values.
    """
    n = sp.n
    if sorted(s) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (n, s))
    op = SparseOperator(sp)
    words = sp.words
    for col, w in enumerate(words):
        v = [0] * n
        for k in range(n):
            v[s[k] - 1] = w[k]
        op.entries[(sp.index(v), col)] = ONE
    return op


def reversal_op(sp: TensorSpace) -> SparseOperator:
    """P_0: reverses the order of the tensor factors."""
    return permutation_op(tuple(range(sp.n, 0, -1)), sp)


def swap_op(k: int, l: int, sp: TensorSpace) -> SparseOperator:
    """P_kl exchanging the kth and lth tensor factors (1-based)."""
    s = list(range(1, sp.n + 1))
    s[k - 1], s[l - 1] = s[l - 1], s[k - 1]
    return permutation_op(tuple(s), sp)


def contraction_op(k: int, l: int, sp: TensorSpace) -> SparseOperator:
    """Q_kl: applies u (x) v -> <u, v> * sum_i e_i (x) e_i in the kth and lth
    tensor factors, identity elsewhere."""
    if k == l:
        raise ValueError("contraction needs two distinct positions")
    if not (1 <= k <= sp.n and 1 <= l <= sp.n):
        raise ValueError("positions out of range")
    k, l = k - 1, l - 1
    op = SparseOperator(sp)
    for col, w in enumerate(sp.words):
        if w[k] != w[l]:
            continue
        v = list(w)
        for a in range(sp.N):
            v[k] = v[l] = a
            key = (sp.index(v), col)
            op.entries[key] = op.entries.get(key, ZERO) + ONE
    return op


def contract_pair(vec: dict, k: int, l: int, sp: TensorSpace) -> dict:
    """Partial contraction (C^N)^n -> (C^N)^(n-2): apply the bilinear form in
    positions k, l (1-based).  Output indices live in TensorSpace(N, n-2)."""
    k, l = k - 1, l - 1
    words = sp.words
    N = sp.N
    out = {}
    for idx, x in vec.items():
        w = words[idx]
        if w[k] != w[l]:
            continue
        ridx = 0
        for pos, a in enumerate(w):
            if pos != k and pos != l:
                ridx = ridx * N + a
        val = out.get(ridx, ZERO) + x
        if val == 0:
            out.pop(ridx, None)
        else:
            out[ridx] = val
    return out


class SubspaceBasis:
    """Canonical subspace representation: reduced row echelon basis.

    Rows are sparse dicts with pivots strictly increasing and pivot value 1;
    two subspaces are equal iff the stored bases are identical.
    """

    __slots__ = ("space", "vectors")

    def __init__(self, space: TensorSpace, vectors=()):
        self.space = space
        self.vectors = tuple(vectors)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis)
                and self.space == other.space and self.vectors == other.vectors)

    def reduce_vector(self, vec: dict) -> dict:
        vec = dict(vec)
        for row in self.vectors:
            piv = min(row)
            c = vec.get(piv)
            if c:
                for j, v in row.items():
                    w = vec.get(j, ZERO) - c * v
                    if w == 0:
                        vec.pop(j, None)
                    else:
                        vec[j] = w
        return vec

    def contains_vector(self, vec: dict) -> bool:
        return not self.reduce_vector(vec)

    def to_json(self):
        return {
            "N": self.space.N,
            "n": self.space.n,
            "vectors": [
                [[j, rat_to_str(v)] for j, v in sorted(row.items())]
                for row in self.vectors
            ],
        }


def rref_rows(rows):
    """Reduced row echelon form of sparse row dicts; returns canonical rows
    sorted by pivot."""
    basis = []  # list of (pivot, row dict), kept sorted by pivot
    for row in rows:
        vec = dict(row)
        for piv, brow in basis:
            c = vec.get(piv)
            if c:
                for j, v in brow.items():
                    w = vec.get(j, ZERO) - c * v
                    if w == 0:
                        vec.pop(j, None)
                    else:
                        vec[j] = w
        if not vec:
            continue
        piv = min(vec)
        inv = 1 / vec[piv]
        vec = {j: v * inv for j, v in vec.items()}
        # Eliminate the new pivot from existing rows to stay fully reduced.
        for i, (p, brow) in enumerate(basis):
            c = brow.get(piv)
            if c:
                new = dict(brow)
                for j, v in vec.items():
                    w = new.get(j, ZERO) - c * v
                    if w == 0:
                        new.pop(j, None)
                    else:
                        new[j] = w
                basis[i] = (p, new)
        basis.append((piv, vec))
    basis.sort(key=lambda t: t[0])
    return [row for _, row in basis]


def _word_weight(word, N):
    counts = [0] * N
    for a in word:
        counts[a] += 1
    return tuple(counts)


def image_basis(a: SparseOperator) -> SubspaceBasis:
    """Canonical basis of the column span, by exact Gaussian elimination.

    Operators that preserve letter multisets (anything built from
    permutations) are eliminated block by block, which keeps the desk-scale
    cases fast; the result is identical to global elimination.
    """
    sp = a.space
    words = sp.words
    N = sp.N
    preserves = True
    for (r, c) in a.entries:
        if _word_weight(words[r], N) != _word_weight(words[c], N):
            preserves = False
            break
    cols = {}
    for (r, c), v in a.entries.items():
        cols.setdefault(c, {})[r] = v
    if not preserves:
        rows = rref_rows([cols[c] for c in sorted(cols)])
        return SubspaceBasis(sp, rows)
    blocks = {}
    for c in sorted(cols):
        blocks.setdefault(_word_weight(words[c], N), []).append(cols[c])
    out = []
    for key in sorted(blocks):
        out.extend(rref_rows(blocks[key]))
    out.sort(key=min)
    return SubspaceBasis(sp, out)


def rank(a: SparseOperator) -> int:
    return len(image_basis(a).vectors)


def basis_from_vectors(sp: TensorSpace, vectors) -> SubspaceBasis:
    return SubspaceBasis(sp, rref_rows(vectors))


def traceless_subspace(sp: TensorSpace) -> SubspaceBasis:
    """Joint kernel of all partial contraction maps on (C^N)^(tensor n)."""
    if sp.n <= 1:
        return SubspaceBasis(sp, ({i: ONE} for i in range(sp.dim)))
    constraints = _contraction_rows(sp)
    return SubspaceBasis(sp, _kernel_rows(constraints, sp.dim))


def _contraction_rows(sp: TensorSpace):
    """One sparse row per (pair, reduced word): sum over the diagonal letter."""
    rows = []
    n, N = sp.n, sp.N
    red = TensorSpace(N, n - 2, force=True)
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            for rw in red.words:
                row = {}
                it = iter(rw)
                template = [None] * n
                for pos in range(n):
                    if pos not in (k - 1, l - 1):
                        template[pos] = next(it)
                for a in range(N):
                    template[k - 1] = template[l - 1] = a
                    row[sp.index(template)] = ONE
                rows.append(row)
    return rows


def _kernel_rows(rows, dim):
    """Canonical RREF basis of the kernel of the row constraints."""
    rr = rref_rows(rows)
    pivots = [min(r) for r in rr]
    pivot_set = set(pivots)
    kernel = []
    for f in range(dim):
        if f in pivot_set:
            continue
        vec = {f: ONE}
        for piv, row in zip(pivots, rr):
            c = row.get(f)
            if c:
                vec[piv] = -c
        kernel.append(vec)
    return rref_rows(kernel)


def intersect_with_traceless(basis: SubspaceBasis) -> SubspaceBasis:
    """Intersection of a subspace with the traceless tensors, computed in the
    coordinates of the given basis (cheap when the subspace is small)."""
    sp = basis.space
    if sp.n <= 1 or not basis.vectors:
        return basis
    r = len(basis.vectors)
    # Stack contraction images of the basis vectors; rows indexed by
    # (pair, reduced index), columns by basis vector.
    rows = {}
    for j, vec in enumerate(basis.vectors):
        for k in range(1, sp.n + 1):
            for l in range(k + 1, sp.n + 1):
                for ridx, val in contract_pair(vec, k, l, sp).items():
                    rows.setdefault((k, l, ridx), {})[j] = val
    coeff_kernel = _kernel_rows(list(rows.values()), r)
    vectors = []
    for coeffs in coeff_kernel:
        vec = {}
        for j, c in coeffs.items():
            for idx, v in basis.vectors[j].items():
                w = vec.get(idx, ZERO) + c * v
                if w == 0:
                    vec.pop(idx, None)
                else:
                    vec[idx] = w
        vectors.append(vec)
    return SubspaceBasis(sp, rref_rows(vectors))


def subspace_relate(a: SubspaceBasis, b: SubspaceBasis) -> str:
    """Exact containment decision: equal | a_in_b | b_in_a | incomparable."""
    if a.space != b.space:
        raise ValueError("subspace space mismatch")
    if a.vectors == b.vectors:
        return "equal"
    a_in_b = all(b.contains_vector(v) for v in a.vectors)
    b_in_a = all(a.contains_vector(v) for v in b.vectors)
    if a_in_b and b_in_a:
        return "equal"
    if a_in_b:
        return "a_in_b"
    if b_in_a:
        return "b_in_a"
    return "incomparable"

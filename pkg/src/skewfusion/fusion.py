"""Fusion construction of the operator E on (C^N)^(tensor n), the classical
Young symmetrizer cross-check, and the Brauer symmetrizer F(M) in its three
equivalent forms (left ordered, right ordered, and as a one-variable limit).

The ordered product of transposition factors lives in the group algebra of
S_n with rational-function coefficients in one auxiliary variable h, where
the diagonal limit is cheap; the result is expanded to the tensor space only
at the end.  The limit form of F(M) involves contraction operators and is
carried directly as an operator-valued rational function.
"""

from __future__ import annotations

import math

from dataclasses import dataclass, field

from .scalars import Rat, ZERO, ONE, rat_to_str
from .diagrams import Partition, SkewDiagram, column_tableau
from .tensor import (SizeGuardError, SparseOperator, TensorSpace,
                     contraction_op, permutation_op, swap_op)


class PathPoleError(ArithmeticError):
    """A factor denominator is identically zero along the substitution path."""


class LimitPoleError(ArithmeticError):
    """The reduced denominator vanishes at h = 0; the regularity asserted for
    the fusion limit failed, which signals an implementation bug."""


class DenominatorZeroError(ArithmeticError):
    """A constant factor denominator vanishes (preconditions violated)."""


def _compose(s, t):
    """(s o t)(k) = s(t(k)) on 0-based image tuples."""
    return tuple(s[t[k]] for k in range(len(s)))


def _swap(s, k, l):
    """s composed with the transposition (k l), 1-based positions."""
    out = list(s)
    out[k - 1], out[l - 1] = out[l - 1], out[k - 1]
    return tuple(out)


def _tup_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _tup_eval(p, r):
    acc = ZERO
    for c in reversed(p):
        acc = acc * r + c
    return acc


def _tup_div_root(p, r):
    """Synthetic division of p by (h - r); remainder must be zero."""
    out = []
    acc = ZERO
    for c in reversed(p):
        acc = acc * r + c
        out.append(acc)
    out.pop()
    out.reverse()
    return tuple(out)


class _GroupRatFun:
    """Element of the group algebra of S_n with coefficients that are
    polynomials in h (plain coefficient tuples, lowest degree first) over a
    shared denominator kept as a product of monic linear factors (stored by
    their roots) times a constant."""

    def __init__(self, n):
        self.n = n
        self.terms = {tuple(range(n)): (ONE,)}
        self.den_roots = []
        self.den_const = ONE

    def mul_transposition_factor(self, k, l, a, b):
        """Multiply on the right by (1 - P_kl / (a + b*h))."""
        if a == 0 and b == 0:
            raise PathPoleError("factor (%d,%d) has identically zero denominator"
                                % (k, l))
        new = {}
        if b == 0:
            neg_inv = -ONE / a
            for s, f in self.terms.items():
                new[s] = _tup_add(new[s], f) if s in new else f
                t = _swap(s, k, l)
                g = tuple(c * neg_inv for c in f)
                new[t] = _tup_add(new[t], g) if t in new else g
        else:
            for s, f in self.terms.items():
                # f * (a + b*h), written out to avoid a full convolution
                g = [c * a for c in f] + [ZERO]
                for i, c in enumerate(f):
                    g[i + 1] += c * b
                if g[-1] == 0:
                    g.pop()
                g = tuple(g)
                new[s] = _tup_add(new[s], g) if s in new else g
                t = _swap(s, k, l)
                h = tuple(-c for c in f)
                new[t] = _tup_add(new[t], h) if t in new else h
            self.den_const *= b
            self.den_roots.append(Rat(-a, 1) / b)
        self.terms = {s: f for s, f in new.items() if f}

    def reduce(self, log=None):
        """Cancel linear denominator factors dividing every coefficient."""
        changed = True
        while changed:
            changed = False
            for r in set(self.den_roots):
                while r in self.den_roots and all(
                        _tup_eval(f, r) == 0 for f in self.terms.values()):
                    self.terms = {s: _tup_div_root(f, r)
                                  for s, f in self.terms.items()}
                    self.den_roots.remove(r)
                    changed = True
                    if log is not None:
                        log[rat_to_str(r)] = log.get(rat_to_str(r), 0) + 1

    def value_at_zero(self):
        """Coefficients at h = 0; LimitPoleError if a pole at 0 survives."""
        if any(r == 0 for r in self.den_roots):
            raise LimitPoleError("denominator vanishes at h = 0 after reduction")
        den = self.den_const
        for r in self.den_roots:
            den *= -r
        return {s: f[0] / den for s, f in self.terms.items()
                if f and f[0] != 0}


def group_element_to_operator(coeffs, sp: TensorSpace) -> SparseOperator:
    """Expand sum coeff_s * P_s on the tensor space."""
    if coeffs:
        fast = _expand_with_numpy(coeffs, sp)
        if fast is not None:
            return fast
    op = SparseOperator(sp)
    entries = op.entries
    words = sp.words
    N = sp.N
    n = sp.n
    for s, val in coeffs.items():
        for col, w in enumerate(words):
            idx = 0
            v = [0] * n
            for kk in range(n):
                v[s[kk]] = w[kk]
            for a in v:
                idx = idx * N + a
            key = (idx, col)
            cur = entries.get(key, ZERO) + val
            if cur == 0:
                entries.pop(key, None)
            else:
                entries[key] = cur
    return op


def _expand_with_numpy(coeffs, sp: TensorSpace):
    """Integer scatter-add expansion over a common denominator.

    Exactness: numerators are accumulated in int64, and the magnitude of
    every accumulated entry is at most max |numerator| times the number of
    permutations.  The fast path declines (returns None) when that bound
    does not fit in an int64, or when numpy is unavailable.
    """
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        return None
    import math

    N = sp.N
    n = sp.n
    dim = sp.dim
    den = math.lcm(*(int(v.denominator) for v in coeffs.values()))
    nums = [int(v.numerator) * (den // int(v.denominator))
            for v in coeffs.values()]
    if max(abs(a) for a in nums) * len(coeffs) >= 2 ** 62:
        return None
    if dim * dim > 2 ** 28:
        return None
    digits = sp._digits
    if digits is None:
        digits = np.array(sp.words, dtype=np.int64)
        sp._digits = digits
    perms = np.array(list(coeffs.keys()), dtype=np.int64)
    vals = np.array(nums, dtype=np.int64)
    total = np.zeros(dim * dim, dtype=np.int64)
    cols = np.arange(dim, dtype=np.int64)[:, None]
    chunk = max(1, 2 ** 22 // dim)
    for lo in range(0, len(perms), chunk):
        block = perms[lo:lo + chunk]
        # Row index of column w under P_s is sum_k w_k N^(n-1-s_k).
        powers = np.int64(N) ** ((n - 1) - block)
        rows = digits @ powers.T
        keys = (rows * dim + cols).ravel()
        np.add.at(total, keys,
                  np.broadcast_to(vals[lo:lo + chunk],
                                  (dim, len(block))).ravel())
    nz = np.nonzero(total)[0]
    op = SparseOperator(sp)
    entries = op.entries
    for key in nz.tolist():
        entries[(key // dim, key % dim)] = Rat(int(total[key]), den)
    return op


@dataclass
class FusionResult:
    """The fused operator with per-factor diagnostics."""

    E: SparseOperator
    coeffs: dict
    diagnostics: dict = field(default_factory=dict)


def _path_values(ct, path):
    cols = sorted(set(ct.columns))
    if path is None:
        values = {j: Rat(j) for j in cols}
    elif isinstance(path, dict):
        values = {j: Rat(path[j]) for j in cols}
    else:
        if len(path) < len(cols):
            raise ValueError("path must assign a value to each of %d columns"
                             % len(cols))
        values = {j: Rat(p) for j, p in zip(cols, path)}
    if len(set(values.values())) != len(cols):
        raise ValueError("path values must be pairwise distinct")
    return values


def fusion_coeffs(w: SkewDiagram, path=None, force: bool = False):
    """Group-algebra coefficients of E for the column tableau of w, plus the
    cancellation diagnostics of the h -> 0 limit."""
    ct = column_tableau(w)
    n = ct.n
    # the intermediate product can touch all n! permutations
    if n > 9 and not force:
        raise SizeGuardError(
            "group algebra of S_%d has %d elements (use force)"
            % (n, math.factorial(n)))
    pathvals = _path_values(ct, path)
    g = _GroupRatFun(n)
    factors = []
    cancel_log = {}
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            a = Rat(ct.contents[k - 1] - ct.contents[l - 1])
            b = pathvals[ct.columns[k - 1]] - pathvals[ct.columns[l - 1]]
            factors.append({"pair": [k, l], "den_at_h0": rat_to_str(a),
                            "h_coeff": rat_to_str(b)})
            g.mul_transposition_factor(k, l, a, b)
            g.reduce(cancel_log)
    coeffs = g.value_at_zero()
    diagnostics = {
        "factors": factors,
        "cancellations": cancel_log,
        "residual_den_roots": [rat_to_str(r) for r in g.den_roots],
    }
    return coeffs, diagnostics


def fusion_E(w: SkewDiagram, N: int, path=None, force: bool = False) -> FusionResult:
    """Value at the diagonal of the ordered product of factors
    1 - P_kl / (c_k - c_l + t_k - t_l), with t substituted along a line
    through the diagonal (one rational multiplier of h per column)."""
    coeffs, diagnostics = fusion_coeffs(w, path, force=force)
    sp = TensorSpace(N, w.n_boxes, force=force)
    E = group_element_to_operator(coeffs, sp)
    return FusionResult(E=E, coeffs=coeffs, diagnostics=diagnostics)


def _ga_mul(A, B):
    out = {}
    for s, a in A.items():
        for t, b in B.items():
            u = _compose(s, t)
            v = out.get(u, ZERO) + a * b
            if v == 0:
                out.pop(u, None)
            else:
                out[u] = v
    return out


def _subgroup_perms(n, groups, signed):
    """Sum over the Young subgroup preserving each listed set of numbers,
    as a group-algebra dict; signed sums include permutation signs."""
    from itertools import permutations, product

    out = {}
    pools = []
    for members in groups:
        pool = []
        for perm in permutations(members):
            sign = ONE
            if signed:
                inv = sum(1 for x in range(len(perm)) for y in range(x + 1, len(perm))
                          if perm[x] > perm[y])
                sign = ONE if inv % 2 == 0 else -ONE
            pool.append((perm, sign))
        pools.append((members, pool))
    for choice in product(*[pool for _, pool in pools]):
        s = list(range(n))
        sign = ONE
        for (members, _), (perm, sgn) in zip(pools, choice):
            for src, dst in zip(members, perm):
                s[src - 1] = dst - 1
            sign *= sgn
        out[tuple(s)] = out.get(tuple(s), ZERO) + sign
    return out


def young_symmetrizer_E(lam: Partition, N: int, max_boxes: int = 8,
                        force: bool = False) -> SparseOperator:
    """Classical expression Y X Y / (lam'_1! lam'_2! ...) for straight shapes,
    built from the row and column groups of the column tableau."""
    if lam.size > max_boxes:
        raise ValueError("shape too large for the symmetrizer cross-check")
    w = SkewDiagram(lam, Partition())
    ct = column_tableau(w)
    n = ct.n
    rows = {}
    cols = {}
    for num, (i, j) in enumerate(ct.boxes, start=1):
        rows.setdefault(i, []).append(num)
        cols.setdefault(j, []).append(num)
    X = _subgroup_perms(n, list(rows.values()), signed=False)
    Y = _subgroup_perms(n, list(cols.values()), signed=True)
    prod = _ga_mul(_ga_mul(Y, X), Y)
    divisor = ONE
    for p in lam.conjugate():
        f = 1
        for i in range(2, p + 1):
            f *= i
        divisor *= f
    coeffs = {s: v / divisor for s, v in prod.items() if v != 0}
    sp = TensorSpace(N, n, force=force)
    return group_element_to_operator(coeffs, sp)


def _cross_column_pairs(ct):
    return [(k, l)
            for k in range(1, ct.n + 1)
            for l in range(k + 1, ct.n + 1)
            if ct.columns[k - 1] != ct.columns[l - 1]]


def _q_factor(ct, k, l, N, M, sp):
    den = Rat(ct.contents[k - 1] + ct.contents[l - 1] + N + M - 1)
    if den == 0:
        raise DenominatorZeroError(
            "denominator c_%d + c_%d + N + M - 1 vanishes" % (k, l))
    return SparseOperator.identity(sp) - contraction_op(k, l, sp).scale(ONE / den)


def brauer_F_left(w: SkewDiagram, N: int, M: int, E: SparseOperator) -> SparseOperator:
    """Ascending ordered product of 1 - Q_kl/(c_k + c_l + N + M - 1) over the
    cross-column pairs, applied to E on the right."""
    ct = column_tableau(w)
    sp = E.space
    acc = SparseOperator.identity(sp)
    for k, l in _cross_column_pairs(ct):
        acc = acc * _q_factor(ct, k, l, N, M, sp)
    return acc * E


def brauer_F_right(w: SkewDiagram, N: int, M: int, E: SparseOperator) -> SparseOperator:
    """E multiplied on the right by the descending ordered product of the
    same contraction factors."""
    ct = column_tableau(w)
    sp = E.space
    acc = SparseOperator.identity(sp)
    for k, l in reversed(_cross_column_pairs(ct)):
        acc = acc * _q_factor(ct, k, l, N, M, sp)
    return E * acc


class OperatorRatFun:
    """Operator-valued rational function of h: polynomial coefficients given
    as sparse operators by degree, over a product of linear denominators."""

    def __init__(self, space: TensorSpace):
        self.space = space
        self.nums = [SparseOperator.identity(space)]
        self.den_roots = []
        self.den_const = ONE

    def _trim(self):
        while len(self.nums) > 1 and self.nums[-1].is_zero():
            self.nums.pop()

    def mul_factor(self, op: SparseOperator, a, b):
        """Multiply on the right by (1 - op / (a + b*h))."""
        if a == 0 and b == 0:
            raise PathPoleError("factor denominator identically zero")
        if b == 0:
            fop = SparseOperator.identity(self.space) - op.scale(ONE / a)
            self.nums = [ni * fop for ni in self.nums]
        else:
            deg = len(self.nums)
            new = [SparseOperator.zero(self.space) for _ in range(deg + 1)]
            for i, ni in enumerate(self.nums):
                new[i] = new[i] + ni.scale(a) - (ni * op)
                new[i + 1] = new[i + 1] + ni.scale(b)
            self.nums = new
            self.den_const *= b
            self.den_roots.append(Rat(-a, 1) / b)
        self._trim()

    def _value_poly(self, r):
        acc = SparseOperator.zero(self.space)
        for op in reversed(self.nums):
            acc = acc.scale(r) + op
        return acc

    def reduce(self, log=None):
        changed = True
        while changed:
            changed = False
            for r in set(self.den_roots):
                while r in self.den_roots and self._value_poly(r).is_zero():
                    # synthetic division of the coefficient list by (h - r)
                    quo = [None] * (len(self.nums) - 1)
                    carry = SparseOperator.zero(self.space)
                    for i in range(len(self.nums) - 1, 0, -1):
                        carry = self.nums[i] + carry.scale(r)
                        quo[i - 1] = carry
                    self.nums = quo or [SparseOperator.zero(self.space)]
                    self.den_roots.remove(r)
                    changed = True
                    if log is not None:
                        log[rat_to_str(r)] = log.get(rat_to_str(r), 0) + 1

    def value_at_zero(self) -> SparseOperator:
        if any(r == 0 for r in self.den_roots):
            raise LimitPoleError("denominator vanishes at h = 0 after reduction")
        den = self.den_const
        for r in self.den_roots:
            den *= -r
        return self.nums[0].scale(ONE / den)


def _match_identity(n):
    """Identity matching on 2n points: top k is point k-1, bottom k is point
    n+k-1, stored as a partner table."""
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def _match_swap(m, bk, bl):
    """Compose on the right with the transposition of bottom points bk, bl."""
    pk, pl = m[bk], m[bl]
    if pk == bl:
        return m
    out = list(m)
    out[bk], out[pl] = pl, bk
    out[bl], out[pk] = pk, bl
    return tuple(out)


def _match_contract(m, bk, bl):
    """Compose on the right with the contraction joining bottom points bk, bl;
    returns the matching and the number of closed loops."""
    pk, pl = m[bk], m[bl]
    if pk == bl:
        return m, 1
    out = list(m)
    out[pk], out[pl] = pl, pk
    out[bk], out[bl] = bl, bk
    return tuple(out), 0


class _BrauerRatFun:
    """Element of the Brauer diagram algebra with polynomial coefficients in
    h (plain tuples, lowest degree first) over a shared denominator kept as
    monic linear factors times a constant.  Closed loops contribute factors
    of N, so the element is tied to a fixed N."""

    def __init__(self, n, N):
        self.n = n
        self.N = Rat(N)
        self.terms = {_match_identity(n): (ONE,)}
        self.den_roots = []
        self.den_const = ONE

    def _mul_factor(self, image, a, b):
        """Multiply on the right by (1 - X/(a + b*h)), where image(m) gives
        the matching and loop count of m composed with the generator X."""
        if a == 0 and b == 0:
            raise PathPoleError("factor has identically zero denominator")
        new = {}
        if b == 0:
            neg_inv = -ONE / a
            for s, f in self.terms.items():
                new[s] = _tup_add(new[s], f) if s in new else f
                t, loops = image(s)
                mult = neg_inv * self.N ** loops
                g = tuple(c * mult for c in f)
                new[t] = _tup_add(new[t], g) if t in new else g
        else:
            for s, f in self.terms.items():
                g = [c * a for c in f] + [ZERO]
                for i, c in enumerate(f):
                    g[i + 1] += c * b
                if g[-1] == 0:
                    g.pop()
                g = tuple(g)
                new[s] = _tup_add(new[s], g) if s in new else g
                t, loops = image(s)
                mult = -self.N ** loops
                h = tuple(c * mult for c in f)
                new[t] = _tup_add(new[t], h) if t in new else h
            self.den_const *= b
            self.den_roots.append(Rat(-a, 1) / b)
        self.terms = {s: f for s, f in new.items() if f}

    def mul_swap_factor(self, k, l, a, b):
        n = self.n
        self._mul_factor(lambda m: (_match_swap(m, n + k - 1, n + l - 1), 0),
                         a, b)

    def mul_contraction_factor(self, k, l, a, b):
        n = self.n
        self._mul_factor(lambda m: _match_contract(m, n + k - 1, n + l - 1),
                         a, b)

    reduce = _GroupRatFun.reduce
    value_at_zero = _GroupRatFun.value_at_zero


def matchings_to_operator(coeffs, sp: TensorSpace) -> SparseOperator:
    """Expand sum coeff_m * D_m on the tensor space, where D_m acts by
    assigning one letter to each strand of the matching: the entry at
    (row, col) is 1 when the row word is constant on top points and the
    column word is constant on bottom points of every strand."""
    n = sp.n
    N = sp.N
    fast = _expand_matchings_numpy(coeffs, sp) if coeffs else None
    if fast is not None:
        return fast
    op = SparseOperator(sp)
    entries = op.entries
    for m, val in coeffs.items():
        arcs = [(p, q) for p, q in enumerate(m) if p < q]
        for assign in sp.words:
            letter = {}
            for j, (p, q) in enumerate(arcs):
                letter[p] = letter[q] = assign[j]
            row = 0
            col = 0
            for i in range(n):
                row = row * N + letter[i]
                col = col * N + letter[n + i]
            key = (row, col)
            cur = entries.get(key, ZERO) + val
            if cur == 0:
                entries.pop(key, None)
            else:
                entries[key] = cur
    return op


def _expand_matchings_numpy(coeffs, sp: TensorSpace):
    """Same int64 scatter-add scheme as _expand_with_numpy; row and column
    indices of a matching are linear in the strand-letter assignment."""
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        return None
    import math

    n = sp.n
    N = sp.N
    dim = sp.dim
    den = math.lcm(*(int(v.denominator) for v in coeffs.values()))
    nums = [int(v.numerator) * (den // int(v.denominator))
            for v in coeffs.values()]
    if max(abs(a) for a in nums) * len(coeffs) >= 2 ** 62:
        return None
    if dim * dim > 2 ** 28 or dim * len(coeffs) > 2 ** 24:
        return None
    digits = sp._digits
    if digits is None:
        digits = np.array(sp.words, dtype=np.int64)
        sp._digits = digits
    row_w = np.zeros((len(coeffs), n), dtype=np.int64)
    col_w = np.zeros((len(coeffs), n), dtype=np.int64)
    for t, m in enumerate(coeffs):
        arcs = [(p, q) for p, q in enumerate(m) if p < q]
        for j, (p, q) in enumerate(arcs):
            for pt in (p, q):
                if pt < n:
                    row_w[t, j] += N ** (n - 1 - pt)
                else:
                    col_w[t, j] += N ** (2 * n - 1 - pt)
    rows = digits @ row_w.T
    cols = digits @ col_w.T
    keys = (rows * dim + cols).ravel(order="F")
    vals = np.repeat(np.array(nums, dtype=np.int64), dim)
    total = np.zeros(dim * dim, dtype=np.int64)
    np.add.at(total, keys, vals)
    nz = np.nonzero(total)[0]
    op = SparseOperator(sp)
    entries = op.entries
    for key in nz.tolist():
        entries[(key // dim, key % dim)] = Rat(int(total[key]), den)
    return op


def brauer_F_limit(w: SkewDiagram, N: int, M: int, path=None,
                   force: bool = False) -> SparseOperator:
    """Value at t_1 = ... = t_n = -1/2 of the contraction-factor product
    multiplied by the transposition-factor product on the right, reached
    along t_k = -1/2 + path(col_k) * h."""
    ct = column_tableau(w)
    n = ct.n
    pathvals = _path_values(ct, path)
    sp = TensorSpace(N, n, force=force)
    acc = _BrauerRatFun(n, N)
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            # t_k + t_l = -1 + (p_k + p_l) h
            a = Rat(ct.contents[k - 1] + ct.contents[l - 1] + N + M - 1)
            b = pathvals[ct.columns[k - 1]] + pathvals[ct.columns[l - 1]]
            acc.mul_contraction_factor(k, l, a, b)
            acc.reduce()
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            a = Rat(ct.contents[k - 1] - ct.contents[l - 1])
            b = pathvals[ct.columns[k - 1]] - pathvals[ct.columns[l - 1]]
            acc.mul_swap_factor(k, l, a, b)
            acc.reduce()
    return matchings_to_operator(acc.value_at_zero(), sp)

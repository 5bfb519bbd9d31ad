"""Concrete action matrices of the Yangian generator series on evaluation
modules and tensor products, twisted generators, and exact verifiers for the
defining relations and the two intertwiner statements."""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import Rat, ZERO, ONE
from .poly import Polynomial, RationalFunction
from .diagrams import Partition, SkewDiagram, column_tableau
from .tensor import SparseOperator, TensorSpace, reversal_op


# --- operator-valued polynomials (lists of SparseOperator by degree) -------

def _opp_trim(coeffs):
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _opp_zero(sp):
    return [SparseOperator.zero(sp)]


def _opp_add(A, B):
    sp = A[0].space
    out = []
    for i in range(max(len(A), len(B))):
        x = A[i] if i < len(A) else SparseOperator.zero(sp)
        y = B[i] if i < len(B) else SparseOperator.zero(sp)
        out.append(x + y)
    return _opp_trim(out)


def _opp_neg(A):
    return [-a for a in A]


def _opp_mul(A, B):
    """Operator product, convolving the polynomial degrees (A acts first in
    the written product A(x) B(x))."""
    sp = A[0].space
    out = [SparseOperator.zero(sp) for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        if a.is_zero():
            continue
        for j, b in enumerate(B):
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + a * b
    return _opp_trim(out)


def _opp_scalar_poly(A, poly: Polynomial):
    sp = A[0].space
    out = [SparseOperator.zero(sp) for _ in range(len(A) + max(poly.degree, 0))]
    for j, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        for i, a in enumerate(A):
            out[i + j] = out[i + j] + a.scale(c)
    return _opp_trim(out)


def _opp_subs_neg(A):
    return [a.scale(-1) if i % 2 else a for i, a in enumerate(A)]


def _opp_is_zero(A):
    return all(a.is_zero() for a in A)


def _opp_eq(A, B):
    for i in range(max(len(A), len(B))):
        x = A[i] if i < len(A) else None
        y = B[i] if i < len(B) else None
        if x is None:
            if not y.is_zero():
                return False
        elif y is None:
            if not x.is_zero():
                return False
        elif x != y:
            return False
    return True


def _kron(a: SparseOperator, b: SparseOperator, target: TensorSpace) -> SparseOperator:
    dimb = b.space.dim
    out = SparseOperator(target)
    for (ra, ca), va in a.entries.items():
        for (rb, cb), vb in b.entries.items():
            out.entries[(ra * dimb + rb, ca * dimb + cb)] = va * vb
    return out


def _opp_kron(A, B, target):
    out = [SparseOperator.zero(target) for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        if a.is_zero():
            continue
        for j, b in enumerate(B):
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + _kron(a, b, target)
    return _opp_trim(out)


# --- modules and action matrices -------------------------------------------

@dataclass(frozen=True)
class Site:
    kind: str  # "plain" | "twisted"
    point: object  # Rat

    def __post_init__(self):
        if self.kind not in ("plain", "twisted"):
            raise ValueError("site kind must be 'plain' or 'twisted'")


class ModuleSpec:
    """Ordered list of evaluation-module sites."""

    def __init__(self, sites):
        self.sites = tuple(Site(kind, Rat(point)) for kind, point in sites)
        if not self.sites:
            raise ValueError("tensor actions need at least one site")

    def __len__(self):
        return len(self.sites)


class ActionMatrix:
    """N x N array of operator-valued rational functions of x sharing one
    scalar denominator: entry (i, j) is nums[(i, j)] / den."""

    def __init__(self, space: TensorSpace, N: int, nums: dict, den: Polynomial):
        self.space = space
        self.N = N
        self.nums = nums
        self.den = den

    def entry(self, i, j):
        return self.nums[(i, j)]


def _matrix_unit(a, b, sp):
    """E_ab on C^N: sends e_b to e_a (1-based indices)."""
    op = SparseOperator(sp)
    op.entries[(a - 1, b - 1)] = ONE
    return op


def site_action(kind: str, z, N: int) -> ActionMatrix:
    """Single evaluation site: plain gives delta_ij - E_ji/(x - z), twisted
    gives delta_ij + E_ij/(x + z)."""
    z = Rat(z)
    sp = TensorSpace(N, 1)
    ident = SparseOperator.identity(sp)
    nums = {}
    if kind == "plain":
        den = Polynomial([-z, ONE], "x")
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                const = -_matrix_unit(j, i, sp)
                if i == j:
                    const = const + ident.scale(-z)
                    nums[(i, j)] = _opp_trim([const, ident.copy()])
                else:
                    nums[(i, j)] = _opp_trim([const])
    elif kind == "twisted":
        den = Polynomial([z, ONE], "x")
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                const = _matrix_unit(i, j, sp)
                if i == j:
                    const = const + ident.scale(z)
                    nums[(i, j)] = _opp_trim([const, ident.copy()])
                else:
                    nums[(i, j)] = _opp_trim([const])
    else:
        raise ValueError("kind must be 'plain' or 'twisted'")
    return ActionMatrix(sp, N, nums, den)


def tensor_action(spec: ModuleSpec, N: int) -> ActionMatrix:
    """Iterated coproduct: entry (i, j) of an n-site module is
    sum_k (first sites)(i, k) tensor (last site)(k, j)."""
    acc = site_action(spec.sites[0].kind, spec.sites[0].point, N)
    for site in spec.sites[1:]:
        nxt = site_action(site.kind, site.point, N)
        target = TensorSpace(N, acc.space.n + 1, force=True)
        nums = {}
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                total = _opp_zero(target)
                for k in range(1, N + 1):
                    total = _opp_add(
                        total, _opp_kron(acc.nums[(i, k)], nxt.nums[(k, j)], target))
                nums[(i, j)] = total
        acc = ActionMatrix(target, N, nums, acc.den * nxt.den)
    return acc


def twisted_generator_action(am: ActionMatrix) -> ActionMatrix:
    """Twisted generators: entry (i, j) is sum_k T_ki(-x) T_kj(x)."""
    N = am.N
    nums = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            total = _opp_zero(am.space)
            for k in range(1, N + 1):
                total = _opp_add(
                    total,
                    _opp_mul(_opp_subs_neg(am.nums[(k, i)]), am.nums[(k, j)]))
            nums[(i, j)] = total
    return ActionMatrix(am.space, N, nums, am.den.subs_neg() * am.den)


# --- reports ----------------------------------------------------------------

@dataclass
class VerifyReport:
    check: str
    params: dict
    passed: bool
    failures: list = field(default_factory=list)

    def to_json(self):
        return {"check": self.check, "params": self.params,
                "pass": self.passed, "failures": self.failures}


# --- bivariate machinery for the defining relations -------------------------

def _bi_prod(first, first_var, second, second_var):
    """Bivariate coefficients of first(v1) * second(v2); operator order is the
    written order.  Keys are (x-degree, y-degree)."""
    out = {}
    for a, opa in enumerate(first):
        if opa.is_zero():
            continue
        for b, opb in enumerate(second):
            if opb.is_zero():
                continue
            key = (a, b) if first_var == "x" else (b, a)
            prod = opa * opb
            cur = out.get(key)
            out[key] = prod if cur is None else cur + prod
    return {k: v for k, v in out.items() if not v.is_zero()}


def _bi_add(A, B, sign=1):
    out = dict(A)
    for k, v in B.items():
        v = v if sign == 1 else -v
        cur = out.get(k)
        w = v if cur is None else cur + v
        if w.is_zero():
            out.pop(k, None)
        else:
            out[k] = w
    return out


def _bi_scalar(A, terms):
    """Multiply by a scalar bivariate polynomial given as {(dx, dy): coeff}."""
    out = {}
    for (a, b), op in A.items():
        for (da, db), c in terms.items():
            key = (a + da, b + db)
            scaled = op.scale(c)
            cur = out.get(key)
            w = scaled if cur is None else cur + scaled
            if w.is_zero():
                out.pop(key, None)
            else:
                out[key] = w
    return out


_X_MINUS_Y = {(1, 0): ONE, (0, 1): -ONE}
_X_PLUS_Y = {(1, 0): ONE, (0, 1): ONE}
_X2_MINUS_Y2 = {(2, 0): ONE, (0, 2): -ONE}


def verify_rtt(spec: ModuleSpec, N: int, max_factors: int = 2) -> VerifyReport:
    """Defining relation of the Yangian on the module:
    (x-y) [T_ij(x), T_kl(y)] = T_kj(x) T_il(y) - T_kj(y) T_il(x)."""
    if len(spec) > max_factors:
        raise ValueError("relation check is guarded to tiny module sizes")
    am = tensor_action(spec, N)
    T = am.nums
    failures = []
    rng = range(1, N + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    comm = _bi_add(_bi_prod(T[(i, j)], "x", T[(k, l)], "y"),
                                   _bi_prod(T[(k, l)], "y", T[(i, j)], "x"),
                                   sign=-1)
                    lhs = _bi_scalar(comm, _X_MINUS_Y)
                    rhs = _bi_add(_bi_prod(T[(k, j)], "x", T[(i, l)], "y"),
                                  _bi_prod(T[(k, j)], "y", T[(i, l)], "x"),
                                  sign=-1)
                    if _bi_add(lhs, rhs, sign=-1):
                        failures.append({"i": i, "j": j, "k": k, "l": l})
    return VerifyReport("rtt", {"N": N, "sites": [[s.kind, str(s.point)]
                                                  for s in spec.sites]},
                        not failures, failures)


def verify_twisted_relations(spec: ModuleSpec, N: int,
                             max_factors: int = 2) -> VerifyReport:
    """Quadratic defining relation of the extended twisted Yangian, plus the
    vanishing of S_ij(x) + (2x-1) S_ij(-x) - 2x S_ji(x) on the module."""
    if len(spec) > max_factors:
        raise ValueError("relation check is guarded to tiny module sizes")
    S = twisted_generator_action(tensor_action(spec, N))
    nums = S.nums
    failures = []
    rng = range(1, N + 1)
    # symmetry combination: the shared denominator is even in x, so the
    # combination vanishes iff it vanishes on the numerators.
    if S.den != S.den.subs_neg():
        raise AssertionError("twisted denominator is not even in x")
    two_x = Polynomial([ZERO, Rat(2)], "x")
    two_x_minus_1 = Polynomial([-ONE, Rat(2)], "x")
    for i in rng:
        for j in rng:
            combo = _opp_add(
                nums[(i, j)],
                _opp_scalar_poly(_opp_subs_neg(nums[(i, j)]), two_x_minus_1))
            combo = _opp_add(combo, _opp_neg(_opp_scalar_poly(nums[(j, i)], two_x)))
            if not _opp_is_zero(combo):
                failures.append({"relation": "symmetry", "i": i, "j": j})
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    comm = _bi_add(
                        _bi_prod(nums[(i, j)], "x", nums[(k, l)], "y"),
                        _bi_prod(nums[(k, l)], "y", nums[(i, j)], "x"),
                        sign=-1)
                    lhs = _bi_scalar(comm, _X2_MINUS_Y2)
                    t1 = _bi_scalar(
                        _bi_add(_bi_prod(nums[(k, j)], "x", nums[(i, l)], "y"),
                                _bi_prod(nums[(k, j)], "y", nums[(i, l)], "x"),
                                sign=-1),
                        _X_PLUS_Y)
                    t2 = _bi_scalar(
                        _bi_add(_bi_prod(nums[(i, k)], "x", nums[(j, l)], "y"),
                                _bi_prod(nums[(k, i)], "y", nums[(l, j)], "x"),
                                sign=-1),
                        _X_MINUS_Y)
                    t3 = _bi_add(_bi_prod(nums[(k, i)], "x", nums[(j, l)], "y"),
                                 _bi_prod(nums[(k, i)], "y", nums[(j, l)], "x"),
                                 sign=-1)
                    rhs = _bi_add(_bi_add(t1, t2, sign=-1), t3)
                    if _bi_add(lhs, rhs, sign=-1):
                        failures.append({"relation": "quadratic",
                                         "i": i, "j": j, "k": k, "l": l})
    return VerifyReport("twisted_relations",
                        {"N": N, "sites": [[s.kind, str(s.point)]
                                           for s in spec.sites]},
                        not failures, failures)


# --- intertwiner verifiers ---------------------------------------------------

def verify_prop2(w: SkewDiagram, N: int, z, E: SparseOperator) -> VerifyReport:
    """E * P_0 intertwines the module with reversed evaluation points into the
    module with forward points c_1 + z, ..., c_n + z."""
    z = Rat(z)
    ct = column_tableau(w)
    params = {"lambda": list(w.lam), "mu": list(w.mu), "N": N, "z": str(z)}
    if ct.n == 0:
        return VerifyReport("prop2", params, True)
    points = [Rat(c) + z for c in ct.contents]
    fwd = tensor_action(ModuleSpec([("plain", p) for p in points]), N)
    rev = tensor_action(ModuleSpec([("plain", p) for p in reversed(points)]), N)
    if fwd.den != rev.den:
        raise AssertionError("evaluation-point denominators differ")
    ep0 = E * reversal_op(E.space)
    failures = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            lhs = [ep0 * op for op in rev.nums[(i, j)]]
            rhs = [op * ep0 for op in fwd.nums[(i, j)]]
            if not _opp_eq(lhs, rhs):
                failures.append({"i": i, "j": j})
    return VerifyReport("prop2", params, not failures, failures)


def verify_prop4(w: SkewDiagram, N: int, M: int, F: SparseOperator) -> VerifyReport:
    """F intertwines the twisted-generator action of the all-twisted module at
    points d_k = c_k + M/2 - 1/2 into the all-plain one at the same points."""
    ct = column_tableau(w)
    params = {"lambda": list(w.lam), "mu": list(w.mu), "N": N, "M": M}
    if ct.n == 0:
        return VerifyReport("prop4", params, True)
    points = [Rat(c) + Rat(M - 1, 2) for c in ct.contents]
    s_twisted = twisted_generator_action(
        tensor_action(ModuleSpec([("twisted", p) for p in points]), N))
    s_plain = twisted_generator_action(
        tensor_action(ModuleSpec([("plain", p) for p in points]), N))
    if s_twisted.den != s_plain.den:
        raise AssertionError("twisted/plain denominators differ")
    failures = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            lhs = [F * op for op in s_twisted.nums[(i, j)]]
            rhs = [op * F for op in s_plain.nums[(i, j)]]
            if not _opp_eq(lhs, rhs):
                failures.append({"i": i, "j": j})
    return VerifyReport("prop4", params, not failures, failures)


def f_mu(mu: Partition, truncation: int = None) -> RationalFunction:
    """The rational function prod_k (x - mu_k + k)(x + k - 1) /
    ((x - mu_k + k - 1)(x + k)); factors with mu_k = 0 are identically 1."""
    terms = truncation if truncation is not None else len(mu)
    out = RationalFunction.const(ONE, "x")
    for k in range(1, terms + 1):
        m = Rat(mu[k])
        if m == 0:
            continue
        num = (Polynomial([k - m, ONE], "x") * Polynomial([Rat(k - 1), ONE], "x"))
        den = (Polynomial([k - 1 - m, ONE], "x") * Polynomial([Rat(k), ONE], "x"))
        out = out * RationalFunction(num, den)
    return out

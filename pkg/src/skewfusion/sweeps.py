"""Verification sweeps over shape grids.

Each sweep function yields one record per case with a boolean verdict, so a
caller can aggregate pass counts, collect failures, or abort early.  The CLI
sweep command and the package's own acceptance tests share these grids.
"""

from __future__ import annotations

import time
from functools import lru_cache

from .scalars import Rat, rat
from .diagrams import (Partition, SkewDiagram, column_tableau, partitions_of,
                       skew_dimension_jt, skew_dimension_ssyt, skew_shapes,
                       validate_bounds)
from .tensor import (SparseOperator, TensorSpace, contraction_op, image_basis,
                     intersect_with_traceless, permutation_op, rank, swap_op,
                     subspace_relate, traceless_subspace)
from .fusion import (brauer_F_left, brauer_F_limit, brauer_F_right,
                     fusion_coeffs, fusion_E, group_element_to_operator,
                     young_symmetrizer_E)
from .yangian import (ModuleSpec, f_mu, verify_prop2, verify_prop4,
                      verify_rtt, verify_twisted_relations)


def _shape_key(w: SkewDiagram):
    return {"lambda": list(w.lam), "mu": list(w.mu)}


@lru_cache(maxsize=4096)
def _coeffs_cached(lam, mu):
    w = SkewDiagram(Partition(lam), Partition(mu))
    return fusion_coeffs(w)


@lru_cache(maxsize=1200)
def _E_cached(lam, mu, N):
    coeffs, _ = _coeffs_cached(lam, mu)
    return group_element_to_operator(coeffs, TensorSpace(N, sum(lam) - sum(mu)))


def get_E(w: SkewDiagram, N: int) -> SparseOperator:
    return _E_cached(tuple(w.lam), tuple(w.mu), N)


def _alt_path(cols):
    """A second substitution path with pairwise distinct column values that
    differs from the default whenever there is more than one column."""
    return tuple((j, Rat(j * j + j + 1)) for j in cols)


def sweep_fusion_path(n_max: int = 6, Ns=(2, 3)):
    """The fused operator exists (no surviving pole at the diagonal) and does
    not depend on the path along which the diagonal is approached."""
    for n in range(n_max + 1):
        for w in skew_shapes(n):
            t0 = time.monotonic()
            lam, mu = tuple(w.lam), tuple(w.mu)
            cols = sorted(set(column_tableau(w).columns))
            coeffs, _ = _coeffs_cached(lam, mu)
            alt, _ = fusion_coeffs(w, path=dict(_alt_path(cols)))
            ok = coeffs == alt
            for N in Ns:
                ok = ok and get_E(w, N) is not None
            yield {"check": "fusion_path", **_shape_key(w), "Ns": list(Ns),
                   "passed": ok, "seconds": time.monotonic() - t0}


def sweep_symmetrizer(n_max: int = 5, Ns=(2, 3)):
    """For straight shapes the fused operator equals the classical Young
    symmetrizer built from row and column subgroups."""
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            w = SkewDiagram(lam, Partition(()))
            for N in Ns:
                t0 = time.monotonic()
                ok = get_E(w, N).entries == young_symmetrizer_E(lam, N).entries
                yield {"check": "symmetrizer", "lambda": list(lam), "N": N,
                       "passed": ok, "seconds": time.monotonic() - t0}


def sweep_rank(n_max: int = 6, Ns=(2, 3)):
    """rank E equals the skew Schur polynomial at (1,...,1), computed both by
    the Jacobi-Trudi determinant and by counting semistandard tableaux."""
    for n in range(n_max + 1):
        for w in skew_shapes(n):
            for N in Ns:
                t0 = time.monotonic()
                r = rank(get_E(w, N))
                jt = skew_dimension_jt(w, N)
                ssyt = skew_dimension_ssyt(w, N)
                yield {"check": "rank", **_shape_key(w), "N": N,
                       "rank": r, "jt": jt, "ssyt": ssyt,
                       "passed": r == jt == ssyt,
                       "seconds": time.monotonic() - t0}


def brauer_grid(n_max: int = 5, Ns=(2, 3), Ms=(0, 1, 2)):
    """Admissible (shape, N, M) triples for the contraction-product operator."""
    for n in range(1, n_max + 1):
        for w in skew_shapes(n):
            for N in Ns:
                for M in Ms:
                    if validate_bounds(w, N, M, "so").admissible:
                        yield w, N, M


def sweep_brauer_triple(n_max: int = 5, Ns=(2, 3), Ms=(0, 1, 2)):
    """The three constructions of F(M) agree: ascending contraction product
    times E, E times descending product, and the one-variable limit."""
    for w, N, M in brauer_grid(n_max, Ns, Ms):
        t0 = time.monotonic()
        E = get_E(w, N)
        left = brauer_F_left(w, N, M, E)
        right = brauer_F_right(w, N, M, E)
        lim = brauer_F_limit(w, N, M)
        yield {"check": "brauer_triple", **_shape_key(w), "N": N, "M": M,
               "passed": left.entries == right.entries == lim.entries,
               "seconds": time.monotonic() - t0}


def sweep_image_containment(n_max: int = 5, Ns=(2, 3), Ms=(0, 1, 2)):
    """im F(M) sits inside im E, so rank F(M) <= rank E."""
    for w, N, M in brauer_grid(n_max, Ns, Ms):
        t0 = time.monotonic()
        E = get_E(w, N)
        F = brauer_F_left(w, N, M, E)
        basis_e = image_basis(E)
        basis_f = image_basis(F)
        rel = subspace_relate(basis_f, basis_e)
        yield {"check": "image_containment", **_shape_key(w), "N": N, "M": M,
               "rank_E": len(basis_e.vectors), "rank_F": len(basis_f.vectors),
               "passed": (rel in ("equal", "a_in_b")
                          and len(basis_f.vectors) <= len(basis_e.vectors)),
               "seconds": time.monotonic() - t0}


def sweep_traceless(n_max: int = 5, Ns=(2, 3, 4)):
    """For straight shapes with the first two column lengths summing to at
    most N, the image of F(0) is exactly the traceless part of the image
    of E."""
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            lamc = lam.conjugate()
            for N in Ns:
                if lamc[1] + lamc[2] > N:
                    continue
                t0 = time.monotonic()
                w = SkewDiagram(lam, Partition(()))
                E = get_E(w, N)
                F = brauer_F_left(w, N, 0, E)
                im_f = image_basis(F)
                cut = intersect_with_traceless(image_basis(E))
                yield {"check": "traceless", "lambda": list(lam), "N": N,
                       "rank_F0": len(im_f.vectors),
                       "passed": subspace_relate(im_f, cut) == "equal",
                       "seconds": time.monotonic() - t0}


def relation_specs():
    """Module specs for the defining-relation checks: single sites at 0 and
    1/2, and the two-site module at points (0, 1)."""
    return [ModuleSpec([("plain", 0)]),
            ModuleSpec([("plain", Rat(1, 2))]),
            ModuleSpec([("plain", 0), ("plain", 1)])]


def sweep_relations(N: int = 2):
    """Defining quadratic relations hold on small evaluation modules, for the
    plain generators and for the twisted ones (with the symmetry relation)."""
    for spec in relation_specs():
        t0 = time.monotonic()
        rep = verify_rtt(spec, N)
        yield {"check": "rtt", "params": rep.params, "passed": rep.passed,
               "failures": rep.failures, "seconds": time.monotonic() - t0}
    for spec in relation_specs():
        t0 = time.monotonic()
        rep = verify_twisted_relations(spec, N)
        yield {"check": "twisted", "params": rep.params, "passed": rep.passed,
               "failures": rep.failures, "seconds": time.monotonic() - t0}


def sweep_prop2(n_max: int = 4, Ns=(2, 3), zs=(0, Rat(1, 2), -1)):
    """E composed with order reversal intertwines reversed-point modules into
    forward-point ones."""
    for n in range(1, n_max + 1):
        for w in skew_shapes(n):
            for N in Ns:
                for z in zs:
                    t0 = time.monotonic()
                    rep = verify_prop2(w, N, z, get_E(w, N))
                    yield {"check": "prop2", **_shape_key(w), "N": N,
                           "z": str(rat(z)), "passed": rep.passed,
                           "failures": rep.failures,
                           "seconds": time.monotonic() - t0}


def sweep_prop4(n_max: int = 4, Ns=(2, 3), Ms=(0, 1, 2)):
    """F(M) intertwines the twisted-generator actions of the all-twisted and
    all-plain modules at points c_k + M/2 - 1/2."""
    for w, N, M in brauer_grid(n_max, Ns, Ms):
        t0 = time.monotonic()
        F = brauer_F_left(w, N, M, get_E(w, N))
        rep = verify_prop4(w, N, M, F)
        yield {"check": "prop4", **_shape_key(w), "N": N, "M": M,
               "passed": rep.passed, "failures": rep.failures,
               "seconds": time.monotonic() - t0}


def sweep_series_leading(max_parts: int = 4, max_part: int = 4):
    """The one-row rational function attached to a partition tends to 1 at
    infinity: numerator and denominator are monic of equal degree."""
    seen = set()
    for total in range(0, max_parts * max_part + 1):
        for mu in partitions_of(total, max_part=max_part, max_len=max_parts):
            if tuple(mu) in seen:
                continue
            seen.add(tuple(mu))
            t0 = time.monotonic()
            f = f_mu(mu)
            # the denominator is monic by construction, so the value at
            # infinity is the leading numerator coefficient
            ok = (not f.num.is_zero()
                  and f.num.degree == f.den.degree
                  and f.num.coeffs[-1] == 1)
            yield {"check": "series_leading", "mu": list(mu), "passed": ok,
                   "seconds": time.monotonic() - t0}


def sweep_brauer_relations(N_max: int = 3, n_max: int = 4):
    """Exhaustive generator relations of the centralizer algebra on the
    tensor space: involutions, contraction idempotents, braid moves, and
    commutation of disjoint factors."""
    for N in range(1, N_max + 1):
        for n in range(2, n_max + 1):
            t0 = time.monotonic()
            sp = TensorSpace(N, n)
            ident = SparseOperator.identity(sp)
            bad = []
            pairs = [(k, l) for k in range(1, n + 1)
                     for l in range(k + 1, n + 1)]
            for k, l in pairs:
                P = swap_op(k, l, sp)
                Q = contraction_op(k, l, sp)
                if (P * P).entries != ident.entries:
                    bad.append(("PP", k, l))
                if (Q * Q).entries != Q.scale(Rat(N)).entries:
                    bad.append(("QQ", k, l))
                if (P * Q).entries != Q.entries or (Q * P).entries != Q.entries:
                    bad.append(("PQ", k, l))
                if P.transpose().entries != P.entries:
                    bad.append(("Pt", k, l))
                if Q.transpose().entries != Q.entries:
                    bad.append(("Qt", k, l))
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    for m in range(1, n + 1):
                        if len({k, l, m}) < 3:
                            continue
                        Pkl = swap_op(min(k, l), max(k, l), sp)
                        Plm = swap_op(min(l, m), max(l, m), sp)
                        Qkl = contraction_op(min(k, l), max(k, l), sp)
                        Qlm = contraction_op(min(l, m), max(l, m), sp)
                        Qkm = contraction_op(min(k, m), max(k, m), sp)
                        if ((Pkl * Plm * Pkl).entries
                                != (Plm * Pkl * Plm).entries):
                            bad.append(("braid", k, l, m))
                        if (Qkl * Qlm * Qkl).entries != Qkl.entries:
                            bad.append(("QQQ", k, l, m))
                        if (Qkl * Plm * Qkl).entries != Qkl.entries:
                            bad.append(("QPQ", k, l, m))
                        if (Pkl * Qlm * Pkl).entries != Qkm.entries:
                            bad.append(("PQP", k, l, m))
            for (k, l) in pairs:
                for (a, b) in pairs:
                    if {k, l} & {a, b}:
                        continue
                    for X in (swap_op(k, l, sp), contraction_op(k, l, sp)):
                        for Y in (swap_op(a, b, sp), contraction_op(a, b, sp)):
                            if (X * Y).entries != (Y * X).entries:
                                bad.append(("disjoint", k, l, a, b))
            yield {"check": "brauer_relations", "N": N, "n": n,
                   "passed": not bad, "failures": bad,
                   "seconds": time.monotonic() - t0}


SWEEP_NAMES = ("fusion_path", "symmetrizer", "rank", "brauer_triple",
               "image_containment", "traceless", "relations", "prop2",
               "prop4", "series_leading", "brauer_relations")


def run_sweep(n_fusion: int = 6, n_brauer: int = 5, n_intertwiner: int = 4,
              checks=SWEEP_NAMES, progress=None):
    """Run the named sweeps and aggregate pass counts, failures, and timings.

    Cases are generated in a deterministic order; the summary lists every
    failing case key so a partial failure is reproducible."""
    sources = {
        "fusion_path": lambda: sweep_fusion_path(n_fusion),
        "symmetrizer": lambda: sweep_symmetrizer(min(n_fusion, 5)),
        "rank": lambda: sweep_rank(n_fusion),
        "brauer_triple": lambda: sweep_brauer_triple(n_brauer),
        "image_containment": lambda: sweep_image_containment(n_brauer),
        "traceless": lambda: sweep_traceless(min(n_brauer, 5)),
        "relations": lambda: sweep_relations(),
        "prop2": lambda: sweep_prop2(n_intertwiner),
        "prop4": lambda: sweep_prop4(n_intertwiner),
        "series_leading": lambda: sweep_series_leading(),
        "brauer_relations": lambda: sweep_brauer_relations(),
    }
    summary = {"checks": {}, "cases": 0, "failed": 0, "seconds": 0.0}
    for name in checks:
        t0 = time.monotonic()
        cases = 0
        failures = []
        for rec in sources[name]():
            cases += 1
            if not rec["passed"]:
                failures.append({k: v for k, v in rec.items()
                                 if k != "seconds"})
            if progress is not None:
                progress(name, rec)
        dt = time.monotonic() - t0
        summary["checks"][name] = {"cases": cases, "failed": len(failures),
                                   "failures": failures,
                                   "seconds": round(dt, 3)}
        summary["cases"] += cases
        summary["failed"] += len(failures)
        summary["seconds"] += dt
    summary["seconds"] = round(summary["seconds"], 3)
    summary["passed"] = summary["failed"] == 0
    return summary

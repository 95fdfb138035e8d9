"""Jacobian-level checks: each returns a CheckReport built from exact data."""

from __future__ import annotations

import itertools
import random

from . import arith
from . import linalg as la
from .artinian import TorsionModule, decompose_ring, test_freeness
from .curve import SuperellipticCurve, class_number, genus, l_polynomial
from .divisors import INFINITY_PLACE, effective_ideal, place_divisor, ring
from .fields import finite_field
from .fppoly import FpPoly, fp_factor, reduce_mod
from .intpoly import IntPoly, cyclotomic, pn_poly
from .picard import (
    DivClass, class_add, class_reduce_rr, delta_action, enumerate_classes_rr, eta_down, eta_up,
    class_mul, gn_model, quotient_curve, random_class, zero_class,
)
from .reports import CheckReport, make_report, timed
from .torsion import TORSION_SEED, kernel_subspace, rational_torsion, torsion_basis


def _params(C: SuperellipticCurve, **extra) -> dict:
    out = {"curve": C.label or f"N{C.N}_p{C.p}", "N": C.N, "n": C.n, "Q": C.Q}
    out.update(extra)
    return out


def _divisor_products(N: int) -> list[tuple[tuple[int, ...], IntPoly]]:
    """All monic divisors of P_N as (cyclotomic indices, product), G = 1 excluded."""
    ds = [d for d in arith.divisors(N) if d > 1]
    out = []
    for r in range(1, len(ds) + 1):
        for S in itertools.combinations(ds, r):
            G = IntPoly([1])
            for d in S:
                G = G * cyclotomic(d)
            out.append((S, G))
    return out


def _name_of(S: tuple[int, ...]) -> str:
    return "*".join(f"Phi_{d}" for d in S)


@timed
def check_genus(C: SuperellipticCurve) -> CheckReport:
    """(N-1)(n-1)/2 against the degree of the L-polynomial computed from point counts."""
    g = genus(C)
    L = l_polynomial(C)
    return make_report("genus", _params(C), g, L.degree // 2, L.degree == 2 * g,
                       notes={"L": str(L), "J_order": L(1)})


@timed
def check_fixed_points(C: SuperellipticCurve, seed: int = TORSION_SEED) -> CheckReport:
    """(a) G_N gives N^(n-1) distinct classes, closed under addition; (b) all delta-fixed;
    (c) for each prime l | N, the delta-fixed part of J(F_Q)[l] is G_N[l]."""
    G = gn_model(C)
    elements = G.enumerate()
    classes = [G.to_class(a) for a in elements]
    found = set(classes)
    distinct = len(found)
    closed = all(class_add(x, y) in found for x, y in itertools.combinations_with_replacement(classes, 2))
    fixed = all(delta_action(x) == x for x in classes)
    notes = {"closed": closed, "delta_fixed": fixed}
    ok_c = True
    for ell in arith.prime_divisors(C.N):
        if ell == C.p:
            continue
        # G_N[l]: the classes of (N/l) * (Z/N)^n
        seeds = [G.to_class(G.canonical([C.N // ell if i == j else 0 for i in range(C.n)]))
                 for j in range(C.n)]
        space, complete = rational_torsion(C, ell, seed, seeds=seeds)
        F = finite_field(ell)
        M = space.matrix_of(delta_action)
        ident = la.identity(F, space.rank)
        kern = la.kernel(F, la.mat_sub(F, M, ident), space.rank) if space.rank else []
        in_gn = all(space.combine(v) in found for v in kern)
        gn_part = sum(1 for x in classes if class_mul(x, ell).is_zero())
        ok_l = in_gn and ell ** len(kern) == gn_part
        notes[f"l{ell}_rank"] = space.rank
        notes[f"l{ell}_complete"] = complete
        notes[f"l{ell}_fixed_dim"] = len(kern)
        ok_c = ok_c and ok_l
    expected = C.N ** (C.n - 1)
    ok = distinct == expected == len(elements) and closed and fixed and ok_c
    return make_report("fixed_points", _params(C), expected, distinct, ok, seed=seed, notes=notes)


@timed
def check_freeness_main_theorem(C: SuperellipticCurve, ell: int, seed: int = TORSION_SEED) -> CheckReport:
    """J[l] is free of rank n-1 over F_l[T]/(P_N), certified by socle dimensions."""
    tb = torsion_basis(C, ell, seed)
    F = tb.field
    PN = reduce_mod(pn_poly(C.N), ell)
    killed = la.is_zero_matrix(F, la.poly_at_matrix(F, list(PN.coeffs), tb.delta_matrix))
    params = _params(C, ell=ell)
    if not killed:
        return make_report("freeness", params, "P_N(delta) = 0", "P_N(delta) != 0", False, seed=seed)
    M = TorsionModule(ell, tb.delta_matrix, PN)
    spec = decompose_ring(ell, PN)
    cert = test_freeness(M, spec, C.n - 1)
    size_ok = tb.dim == 2 * C.genus
    expected = f"free of rank {C.n - 1}, |J[l]| = {ell ** (2 * C.genus)}"
    actual = f"{'free' if cert.is_free else 'not free'} of rank {C.n - 1}, |J[l]| = {ell ** tb.dim}"
    notes = {
        "ring": " * ".join(f"({h})^{t}" for h, t in spec.local_factors),
        "socle_dims": list(cert.socle_dims),
        "expected_dims": list(cert.expected_dims),
        "extension": tb.extension,
    }
    return make_report("freeness", params, expected, actual, cert.is_free and size_ok, seed=seed, notes=notes)


def check_kernel_dimensions(C: SuperellipticCurve, ell: int, seed: int = TORSION_SEED) -> list[CheckReport]:
    """For every monic G | P_N: dim ker G(delta) = (n-1) deg G and ker G = sum of ker Phi_d."""
    if C.N % ell == 0:
        raise ValueError("l must not divide N")
    tb = torsion_basis(C, ell, seed)
    F = tb.field
    single = {d: kernel_subspace(tb, list(cyclotomic(d).coeffs)) for d in arith.divisors(C.N) if d > 1}
    reports = []
    for S, G in _divisor_products(C.N):
        K = kernel_subspace(tb, list(G.coeffs))
        parts = []
        for d in S:
            parts.extend(single[d])
        same = la.same_subspace(F, K, parts) if K or parts else True
        expected = (C.n - 1) * G.degree
        reports.append(make_report(
            "kernel_dimension", _params(C, ell=ell, G=_name_of(S)), expected, len(K),
            len(K) == expected and same, seed=seed, notes={"sum_of_kernels": same},
        ))
    return reports


@timed
def check_km_kernel(C: SuperellipticCurve, M: int, ell: int, seed: int = TORSION_SEED) -> CheckReport:
    """ker P_M(delta_N) on J_N[l] is the image of J_M[l] under eta_M^*, which is injective."""
    if M < 2 or C.N % M:
        raise ValueError("M must be a divisor > 1 of N")
    tb = torsion_basis(C, ell, seed)
    if tb.extension != 1:
        raise ValueError("the torsion of C must be rational over the working field")
    CM = quotient_curve(C, M)
    tbM = torsion_basis(CM, ell, seed)
    if tbM.extension != 1:
        raise ValueError("the torsion of the quotient curve must be rational over the working field")
    F = tb.field
    images = [eta_up(b, C) for b in tbM.generators]
    coords = [tb.space.dlog(x) for x in images]
    if any(v is None for v in coords):
        return make_report("km_kernel", _params(C, M=M, ell=ell), "images in J[l]", "image outside J[l]", False)
    K = kernel_subspace(tb, list(pn_poly(M).coeffs))
    rank_img = la.rank(F, coords) if coords else 0
    same = la.same_subspace(F, K, coords)
    comp = all(eta_down(x, M) == class_mul(b, C.N // M) for x, b in zip(images, tbM.generators))
    expected_dim = (C.n - 1) * (M - 1)
    ok = same and rank_img == len(coords) == expected_dim and len(K) == expected_dim and comp
    return make_report(
        "km_kernel", _params(C, M=M, ell=ell), expected_dim, f"{len(K)} / {rank_img}", ok, seed=seed,
        notes={"same_subspace": same, "injective": rank_img == len(coords), "down_up": comp},
    )


@timed
def check_character_prediction(C: SuperellipticCurve, ell: int, seed: int = TORSION_SEED) -> CheckReport:
    """For l = 1 mod N the characteristic polynomial of delta on J[l] is P_N^(n-1):
    each nontrivial N-th root of unity has multiplicity n-1 and 1 does not occur."""
    if (ell - 1) % C.N:
        raise ValueError("l must be 1 mod N")
    tb = torsion_basis(C, ell, seed)
    F = tb.field
    chi = FpPoly(ell, la.char_poly(F, tb.delta_matrix))
    target = reduce_mod(pn_poly(C.N), ell) ** (C.n - 1)
    fac = fp_factor(chi)
    roots = {}
    for h, e in fac.factors:
        if h.degree == 1:
            roots[(-h.coeffs[0]) % ell] = e
    xi = F.root_of_unity(C.N)
    mults = [roots.get(F.pow(xi, i), 0) for i in range(1, C.N)]
    ok = chi == target and 1 not in roots and all(m == C.n - 1 for m in mults)
    return make_report(
        "character_prediction", _params(C, ell=ell), str(target), str(chi), ok, seed=seed,
        notes={"eigen_multiplicities": mults, "eigenvalue_one": roots.get(1, 0)},
    )


@timed
def check_eta_identities(C: SuperellipticCurve, D: int, samples: int = 100,
                         seed: int = TORSION_SEED) -> CheckReport:
    """eta_D eta_D^* = (N/D) Id on J_D and eta_D^* eta_D = Q_{N,D}(delta_N) on J_N."""
    CD = quotient_curve(C, D)
    M = C.N // D
    rng = random.Random(seed)
    first = second = commute = 0
    for _ in range(samples):
        b = random_class(CD, rng)
        first += eta_down(eta_up(b, C), D) == class_mul(b, M)
        a = random_class(C, rng)
        q = zero_class(C)
        for k in range(M):
            q = class_add(q, delta_action(a, D * k))
        second += eta_up(eta_down(a, D), C) == q
        commute += eta_down(delta_action(a), D) == delta_action(eta_down(a, D))
    ok = first == second == commute == samples
    return make_report(
        "eta_identities", _params(C, D=D, samples=samples), f"{samples}/{samples}",
        f"{min(first, second, commute)}/{samples}", ok, seed=seed,
        notes={"down_up": first, "up_down": second, "delta_commutes": commute},
    )


@timed
def check_oracle_equivalence(C: SuperellipticCurve) -> CheckReport:
    """Exhaustive Riemann-Roch enumeration of reduced divisors gives L(1) classes,
    and its group law matches the ideal arithmetic on every pair."""
    R = ring(C)
    reps = enumerate_classes_rr(C)
    order = class_number(C)
    classes = []
    for D0 in reps:
        I = effective_ideal(C, D0)
        if R.reduce(I) != I:
            return make_report("oracle_equivalence", _params(C), order, "non-reduced representative", False)
        classes.append(DivClass(C, I))
    table_ok = True
    for (Da, a), (Db, b) in itertools.product(zip(reps, classes), repeat=2):
        D = Da + Db - place_divisor(INFINITY_PLACE, Da.degree + Db.degree)
        if DivClass(C, effective_ideal(C, class_reduce_rr(C, D))) != class_add(a, b):
            table_ok = False
            break
    ok = len(reps) == order and table_ok
    return make_report("oracle_equivalence", _params(C), order, len(reps), ok,
                       notes={"group_table_agrees": table_ok, "pairs": len(reps) ** 2})

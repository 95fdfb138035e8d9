"""Batch drivers: the polynomial/cyclotomic lemma suite and the curve suite."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from . import arith
from . import checks as ck
from .curve import CurveError, curve_from_spec
from .cyclo import verify_norm_cn, verify_tau_square
from .fppoly import verify_phi_power_lemma, verify_qnd_ideal
from .intpoly import verify_disc_pn
from .reports import CheckReport, error_report
from .smith import verify_coprime_cyclotomics
from .torsion import TORSION_SEED

LEMMA_PRIMES = (2, 3, 5, 7, 11, 13)
LEMMA_MAX_R = 3


def lemma_cases(max_n: int) -> list[tuple]:
    """(check function, args) for every lemma case up to max_n, in a fixed order."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    cases = [(verify_disc_pn, (N,)) for N in range(2, max_n + 1)]
    cases += [(verify_qnd_ideal, (N,)) for N in range(2, max_n + 1)]
    cases += [(verify_norm_cn, (N,)) for N in range(2, max_n + 1)]
    cases += [(verify_coprime_cyclotomics, (a, b))
              for b in range(2, max_n + 1) for a in range(1, b) if b % a]
    cases += [(verify_phi_power_lemma, (p, r, D))
              for p in LEMMA_PRIMES for r in range(1, LEMMA_MAX_R + 1)
              for D in range(1, max_n + 1) if D % p]
    cases += [(verify_tau_square, (q,)) for q in range(3, max_n + 1)
              if len(arith.factorint(q)) == 1 and q % 2]
    return cases


def run_lemma_suite(max_n: int) -> list[CheckReport]:
    reports = []
    for fn, args in lemma_cases(max_n):
        try:
            reports.append(fn(*args))
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            reports.append(error_report(fn.__name__, {"args": list(args)}, exc))
    return reports


def load_corpus(path: str | Path | None = None) -> list[dict]:
    """Curve entries from a corpus file (the built-in one by default)."""
    if path is None:
        text = resources.files("superjac").joinpath("data/corpus.json").read_text()
    else:
        text = Path(path).read_text()
    data = json.loads(text)
    if isinstance(data, list):
        return data
    if "curves" in data:
        return list(data["curves"])
    return [data]


def default_plan(N: int, n: int, ells: list[int], p: int) -> dict:
    """Checks that make sense for the requested primes l."""
    plan: dict = {"fixed_points": True}
    usable = [l for l in ells if l != p]
    plan["freeness"] = usable
    plan["kernel_dimensions"] = [l for l in usable if N % l]
    plan["character"] = [l for l in usable if (l - 1) % N == 0]
    composite = [D for D in arith.divisors(N) if 1 < D < N]
    plan["eta"] = [[D, 20] for D in composite]
    plan["km_kernel"] = [[D, l] for D in composite for l in plan["kernel_dimensions"]]
    return plan


def _guard(name: str, params: dict, fn, *args, seed=None) -> list[CheckReport]:
    try:
        out = fn(*args)
    except Exception as exc:
        return [error_report(name, params, exc, seed=seed)]
    return out if isinstance(out, list) else [out]


def run_curve_entry(entry: dict, seed: int = TORSION_SEED, ells: list[int] | None = None) -> list[CheckReport]:
    label = str(entry.get("label", ""))
    try:
        C = curve_from_spec(entry)
    except (CurveError, ValueError, TypeError) as exc:
        return [error_report("curve_spec", {"curve": label}, exc)]
    if ells:
        plan = default_plan(C.N, C.n, list(ells), C.p)
    else:
        plan = entry.get("checks", {"fixed_points": True})
    base = {"curve": label or f"N{C.N}_p{C.p}"}
    reports = _guard("genus", base, ck.check_genus, C)
    if plan.get("fixed_points"):
        reports += _guard("fixed_points", base, ck.check_fixed_points, C, seed, seed=seed)
    if plan.get("oracle"):
        reports += _guard("oracle_equivalence", base, ck.check_oracle_equivalence, C)
    for ell in plan.get("freeness", []):
        reports += _guard("freeness", {**base, "ell": ell}, ck.check_freeness_main_theorem, C, ell, seed, seed=seed)
    for ell in plan.get("kernel_dimensions", []):
        reports += _guard("kernel_dimension", {**base, "ell": ell}, ck.check_kernel_dimensions, C, ell, seed,
                          seed=seed)
    for M, ell in plan.get("km_kernel", []):
        reports += _guard("km_kernel", {**base, "M": M, "ell": ell}, ck.check_km_kernel, C, M, ell, seed, seed=seed)
    for D, samples in plan.get("eta", []):
        reports += _guard("eta_identities", {**base, "D": D}, ck.check_eta_identities, C, D, samples, seed,
                          seed=seed)
    for ell in plan.get("character", []):
        reports += _guard("character_prediction", {**base, "ell": ell}, ck.check_character_prediction, C, ell, seed,
                          seed=seed)
    return reports


def run_curve_suite(corpus: str | Path | list[dict] | None = None, seed: int = TORSION_SEED) -> list[CheckReport]:
    entries = corpus if isinstance(corpus, list) else load_corpus(corpus)
    reports = []
    for entry in entries:
        reports += run_curve_entry(entry, seed)
    return reports

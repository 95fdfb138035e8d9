"""Acceptance suite: one test per criterion, each with its time limit.

Every test records a PASS/FAIL line; conftest prints them in the terminal summary.
Run `python tests/test_acceptance.py` to get the same lines without pytest.
"""

import time

import pytest

from superjac.checks import (
    check_character_prediction, check_eta_identities, check_fixed_points, check_freeness_main_theorem,
    check_kernel_dimensions, check_oracle_equivalence,
)
from superjac.curve import curve_from_spec
from superjac.cyclo import verify_norm_cn
from superjac.fppoly import verify_phi_power_lemma, verify_qnd_ideal
from superjac.harness import load_corpus
from superjac.intpoly import verify_disc_pn
from superjac.smith import verify_coprime_cyclotomics

RESULTS: list[str] = []


def corpus_curve(label):
    """A fresh curve object (no shared caches between criteria)."""
    for entry in load_corpus():
        if entry["label"] == label:
            return curve_from_spec(entry)
    raise KeyError(label)


def _run(tag, limit_s, body):
    start = time.perf_counter()
    reports = body()
    elapsed = time.perf_counter() - start
    failed = [r for r in reports if not r.passed]
    ok = not failed and elapsed < limit_s
    detail = f"{len(reports) - len(failed)}/{len(reports)} checks, {elapsed:.1f}s (limit {limit_s}s)"
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} {tag}: {detail}")
    assert not failed, [r.to_json() for r in failed[:5]]
    assert elapsed < limit_s, f"{elapsed:.1f}s exceeds {limit_s}s"
    return reports


def test_ac01_discriminant_formula():
    _run("AC1 disc(P_N), 2 <= N <= 30", 10, lambda: [verify_disc_pn(N) for N in range(2, 31)])


def test_ac02_cyclotomic_power_mod_p():
    _run("AC2 Phi_{p^r D} = Phi_D^phi(p^r) mod p", 10, lambda: [
        verify_phi_power_lemma(p, r, D)
        for p in (2, 3, 5, 7, 11, 13) for r in (1, 2, 3) for D in range(1, 41) if D % p
    ])


def test_ac03_principal_ideal_obligations():
    _run("AC3 (Q_{N,N/p}) = (Phi_N), 2 <= N <= 60", 30, lambda: [verify_qnd_ideal(N) for N in range(2, 61)])


def test_ac04_coprime_cyclotomics():
    _run("AC4 (Phi_D1, Phi_D2) = Z[T], D1 < D2 <= 40, D1 not | D2", 60, lambda: [
        verify_coprime_cyclotomics(a, b) for b in range(2, 41) for a in range(1, b) if b % a
    ])


def test_ac05_norm_closed_form():
    reports = _run("AC5 |Nm(c_N)| closed form, 2 <= N <= 40", 30,
                   lambda: [verify_norm_cn(N) for N in range(2, 41)])
    spot = {int(r.params["N"]): r.actual for r in reports}
    assert spot[9] == "9" and spot[6] == "12"


@pytest.mark.parametrize("label,count", [("hyper2_x3mx_p5", 4), ("cm3_x2mx_p7", 3), ("quartic3_p7", 27)])
def test_ac06_fixed_points(label, count):
    reports = _run(f"AC6 fixed classes on {label}", 60, lambda: [check_fixed_points(corpus_curve(label))])
    assert reports[0].actual == str(count)


@pytest.mark.slow
@pytest.mark.parametrize("label,ell", [("cm3_x2p1_p5", 3), ("quartic3_p59", 2), ("cubic4_p59", 3),
                                       ("cubic4_p59", 5)])
def test_ac07_freeness(label, ell):
    reports = _run(f"AC7 freeness on {label}, l={ell}", 300,
                   lambda: [check_freeness_main_theorem(corpus_curve(label), ell)])
    C = corpus_curve(label)
    assert reports[0].actual.endswith(f"|J[l]| = {ell ** ((C.n - 1) * (C.N - 1))}")


@pytest.mark.slow
@pytest.mark.parametrize("label", ["cubic4_p59", "quartic3_p59"])
def test_ac08_kernel_dimensions(label):
    reports = _run(f"AC8 kernel dimensions on {label}, l=5", 120,
                   lambda: check_kernel_dimensions(corpus_curve(label), 5))
    C = corpus_curve(label)
    assert len(reports) == 2 ** (len([d for d in range(2, C.N + 1) if C.N % d == 0])) - 1


@pytest.mark.slow
def test_ac09_eta_identities():
    reports = _run("AC9 eta identities on cubic4_p59, D=2, 100 samples", 120,
                   lambda: [check_eta_identities(corpus_curve("cubic4_p59"), 2, samples=100)])
    assert reports[0].actual == "100/100"


@pytest.mark.slow
@pytest.mark.parametrize("label,ell", [("quartic3_p83", 7), ("cubic4_p59", 5)])
def test_ac10_character_prediction(label, ell):
    reports = _run(f"AC10 character of delta on {label}, l={ell}", 120,
                   lambda: [check_character_prediction(corpus_curve(label), ell)])
    C = corpus_curve(label)
    assert reports[0].notes["eigen_multiplicities"] == "[" + ", ".join([str(C.n - 1)] * (C.N - 1)) + "]"
    assert reports[0].notes["eigenvalue_one"] == "0"


@pytest.mark.parametrize("label", ["hyper2_x3mx_p5", "cm3_x2mx_p7"])
def test_ac11_oracle_equivalence(label):
    reports = _run(f"AC11 Riemann-Roch oracle on {label}", 60,
                   lambda: [check_oracle_equivalence(corpus_curve(label))])
    assert reports[0].notes["group_table_agrees"] == "true"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines, or
``python3 tests/test_acceptance.py`` for the lines alone.
"""

import os
import subprocess
import sys

import pytest

from hopfcoh.catalog import axiom_suite, cross_coefficients, groups_of, natural_coefficients, pair_of, parse_instance
from hopfcoh.cohomology import (
    biproduct_counts,
    box_orbits,
    build_box_set,
    build_C,
    build_setting,
    compute_h1,
    verify_decomposition,
    verify_exact_sequence,
    z1_normalized,
    z1_unnormalized,
)
from hopfcoh.errors import BudgetExceeded
from hopfcoh.group_cohom import cross_check_hopf_vs_group, verify_semidirect_decomposition
from hopfcoh.hopf_core import unit_pairs
from hopfcoh.linalg import DEFAULT_BUDGET
from hopfcoh.models import cyclic_group, s3_data, structure_constant_match, taft_pair
from hopfcoh.radford import radford_product, self_coefficients, trivial_comodule_algebra

AXIOM_INSTANCES = ["taft:2:5", "taft:3:7", "kG:cyclic:2:5", "kG:cyclic:3:7", "kD:s3:5"]
PAIR_INSTANCES = ["taft:2:5", "taft:3:7", "kD:s3:5", "kD:s3:3"]


def announce(number: int, what: str, ok: bool, detail: str = "") -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {what}"
    print(line + (f" ({detail})" if detail else ""), flush=True)
    return ok


def criterion_1():
    bad = [spec for spec in AXIOM_INSTANCES if not axiom_suite(parse_instance(spec)).ok]
    return announce(1, "axiom suites", not bad, f"failing: {bad}" if bad else ", ".join(AXIOM_INSTANCES))


def criterion_2():
    results = []
    for n, p in [(2, 5), (3, 7)]:
        P = taft_pair(n, p)
        HE = radford_product(P.group_hopf, P.braided)
        results.append(structure_constant_match(HE, P.taft, P.correspondence).ok)
    return announce(2, "k[Z/n] * E_n is the Taft algebra for n = 2, 3", all(results), str(results))


def criterion_3():
    ok, seen = True, []
    for n, p in [(2, 5), (3, 7)]:
        P = taft_pair(n, p)
        rep = compute_h1(build_C(P.taft, P.comodule_algebra))
        seen.append(f"n={n}: |H0|={len(rep.h0)} |H1|={rep.h1_count}")
        ok &= len(rep.h0) == p - 1 and rep.h1_count == n
    return announce(3, "H0 and H1 of the Taft algebra with coefficients E_n", ok, "; ".join(seen))


def criterion_4():
    ok, seen = True, []
    for spec in PAIR_INSTANCES:
        pair = pair_of(parse_instance(spec))
        rep = biproduct_counts(pair.H, pair.E)
        seen.append(f"{spec}: H1={rep.data['h1']} Gr={rep.data['grouplikes']}")
        ok &= rep.ok
    return announce(4, "H1(H*E, E) counts grouplikes and H0 is the scalar units", ok, "; ".join(seen))


def criterion_5():
    pair = pair_of(parse_instance("taft:2:5"))
    rep = verify_decomposition(pair.H, pair.E, self_coefficients(pair.E))
    detail = ", ".join(f"{k}={v}" for k, v in sorted(rep.data.items()))
    if not rep.ok:
        detail += f"; failed: {rep.checks.failures}"
    return announce(5, "decomposition of H1 and H0 on taft:2:5", rep.ok, detail)


def criterion_6():
    pair = pair_of(parse_instance("taft:2:5"))
    rep = verify_exact_sequence(pair.H, pair.E, self_coefficients(pair.E))
    ok = rep.ok and rep.data["h1_CE"] == 2
    detail = ", ".join(f"{k}={v}" for k, v in sorted(rep.data.items()))
    return announce(6, "exact sequence on taft:2:5", ok, detail)


def _catalog_diagrams():
    for n, p in [(2, 5), (3, 7)]:
        P = taft_pair(n, p)
        yield f"taft:{n}:{p} with E", build_C(P.taft, P.comodule_algebra)
        yield f"taft:{n}:{p} trivial", build_C(P.taft, trivial_comodule_algebra(P.taft))
    for spec in PAIR_INSTANCES:
        pair = pair_of(parse_instance(spec))
        s = build_setting(pair.H, pair.E, self_coefficients(pair.E))
        yield f"{spec} H part", s.C_H
        yield f"{spec} star part", s.C_star
        yield f"{spec} biproduct", s.C_HE


def criterion_7():
    compared, skipped, bad = [], [], []
    for label, d in _catalog_diagrams():
        try:
            full = z1_unnormalized(d, DEFAULT_BUDGET)
        except BudgetExceeded:
            skipped.append(label)
            continue
        norm = z1_normalized(d, DEFAULT_BUDGET)
        compared.append(label)
        if set(map(bytes, full.vectors.astype("int64"))) != set(map(bytes, norm.vectors.astype("int64"))):
            bad.append(label)
    ok = bool(compared) and not bad
    return announce(7, "normalized and unnormalized Z1 agree", ok, f"{len(compared)} compared, {len(skipped)} over budget, mismatches {bad}")


def criterion_8():
    failures = []
    for spec in AXIOM_INSTANCES + ["kD:s3:3"]:
        rep = axiom_suite(parse_instance(spec))
        failures += [f"{spec}: {f}" for f in rep.failures]
    for spec in PAIR_INSTANCES:
        pair = pair_of(parse_instance(spec))
        s = build_setting(pair.H, pair.E, self_coefficients(pair.E))
        box = build_box_set(s)
        stable = box_orbits(box, unit_pairs(s.F.algebra, DEFAULT_BUDGET))[2]
        if not (stable and box.predicates_agree):
            failures.append(f"{spec}: compatible pairs not closed under the diagonal action")
    return announce(8, "structural identities as exact map equalities", not failures, "; ".join(failures[:5]))


def criterion_9():
    data = groups_of(parse_instance("s3:inv"))
    ok, seen = True, []
    for label, C, act in natural_coefficients(data):
        rep = verify_semidirect_decomposition(data.G, data.A, data.act, C, act)
        seen.append(f"{label}: H1={rep.data['h1_D']} box={rep.data['box_classes']}")
        ok &= rep.ok
    return announce(9, "group cohomology of Z/2 x| Z/3 splits into compatible pairs", ok, "; ".join(seen))


def criterion_10():
    G, A, act, S3 = s3_data()
    Z2 = cyclic_group(2, "s", "Z2")
    ok, count = True, 0
    for D, sd, Gq in [(Z2, None, None), (S3, (G, A, act), G)]:
        for p in (2, 3):
            for label, a in cross_coefficients(D, Gq):
                rep = cross_check_hopf_vs_group(D, a, p, semidirect_data=sd)
                count += 1
                if not rep.ok:
                    ok = False
                    print(f"  {D.name}, {label}, p={p}: {rep.checks.failures}")
    return announce(10, "Hopf and group cohomology agree on k^C", ok, f"{count} cases")


DETERMINISM_RUNS = [
    ["cohomology", "taft:2:5"],
    ["cohomology", "taft:3:7"],
    ["verify", "decomposition", "taft:2:5"],
    ["verify", "semidirect", "s3:inv"],
    ["verify", "cross-check", "s3:inv"],
]


def criterion_11():
    differing = []
    for argv in DETERMINISM_RUNS:
        outputs = set()
        for seed in ("0", "1", "random"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            res = subprocess.run([sys.executable, "-m", "hopfcoh", *argv], capture_output=True, env=env, check=False)
            outputs.add((res.returncode, res.stdout))
        if len(outputs) != 1:
            differing.append(" ".join(argv))
    return announce(11, "reports are byte-identical across runs", not differing, f"differing: {differing}" if differing else f"{len(DETERMINISM_RUNS)} commands x 3 runs")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)

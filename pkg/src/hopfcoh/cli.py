"""Command line entry point.

Exit codes: 0 pass, 1 a check failed, 2 bad input, 3 over budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import (
    axiom_suite,
    comodule_for,
    cross_coefficients,
    groups_of,
    natural_coefficients,
    pair_of,
    parse_instance,
    star_diagram_for,
)
from .cohomology import (
    VerificationReport,
    biproduct_counts,
    build_C,
    compute_h1,
    verify_decomposition,
    verify_exact_sequence,
)
from .errors import BudgetExceeded, HopfCohError, NoSuchRoot, NotAnAction, NotPrime, ParseError, PrerequisiteFailed
from .group_cohom import cross_check_hopf_vs_group, verify_semidirect_decomposition
from .linalg import DEFAULT_BUDGET
from .radford import self_coefficients

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

VERIFY_IDS = {
    "decomposition": "decomposition",
    "thm2.2": "decomposition",
    "exact-sequence": "exact-sequence",
    "thm2.4": "exact-sequence",
    "semidirect": "semidirect",
    "prop4.1": "semidirect",
    "cross-check": "cross-check",
    "cross": "cross-check",
    "prop3.3": "cross-check",
    "grouplike-count": "grouplike-count",
    "prop3.1": "grouplike-count",
}


def resolve_budget(flag: int | None) -> int:
    if flag is not None:
        budget = flag
    elif os.environ.get("HOPFCOH_BUDGET"):
        try:
            budget = int(os.environ["HOPFCOH_BUDGET"])
        except ValueError:
            raise ParseError(f"HOPFCOH_BUDGET must be an integer, got {os.environ['HOPFCOH_BUDGET']!r}") from None
    else:
        budget = DEFAULT_BUDGET
    if budget < 1:
        raise ParseError("budget must be at least 1")
    return budget


def render(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def cmd_check(args, budget) -> tuple[dict, bool]:
    inst = parse_instance(args.instance, args.p, args.n)
    rep = axiom_suite(inst)
    return {"command": "check", "instance": inst.spec, "ok": rep.ok, "checks": rep.to_dict()["items"]}, rep.ok


def cmd_cohomology(args, budget) -> tuple[dict, bool]:
    inst = parse_instance(args.instance, args.p, args.n)
    if args.coeff == "star":
        d = star_diagram_for(inst)
    else:
        H, F = comodule_for(inst, args.coeff)
        d = build_C(H, F)
    rep = compute_h1(d, budget)
    out = rep.to_dict()
    out.update({"command": "cohomology", "instance": inst.spec, "coefficients": args.coeff})
    return out, rep.stable


def _verification(name: str, inst_spec: str, reports: list[tuple[str, VerificationReport]]) -> tuple[dict, bool]:
    ok = all(r.ok for _, r in reports)
    body = {"command": "verify", "verification": name, "instance": inst_spec, "ok": ok}
    body["runs"] = [dict(r.to_dict(), label=label) for label, r in reports]
    return body, ok


def cmd_verify(args, budget) -> tuple[dict, bool]:
    which = VERIFY_IDS.get(args.id)
    if which is None:
        raise ParseError(f"unknown verification {args.id!r}; choose from {', '.join(sorted(VERIFY_IDS))}")
    inst = parse_instance(args.instance, args.p, args.n)
    if which in ("decomposition", "exact-sequence", "grouplike-count"):
        pair = pair_of(inst)
        if pair is None:
            raise ParseError(f"{inst.spec} has no braided Hopf algebra pair")
        F = self_coefficients(pair.E)
        if which == "decomposition":
            rep = verify_decomposition(pair.H, pair.E, F, budget)
        elif which == "exact-sequence":
            rep = verify_exact_sequence(pair.H, pair.E, F, budget)
        else:
            rep = biproduct_counts(pair.H, pair.E, budget)
        return _verification(which, inst.spec, [(f"{pair.H.name}, {pair.E.name}", rep)])
    data = groups_of(inst)
    if which == "semidirect":
        if inst.kind == "cyclic":
            raise ParseError("the semidirect decomposition needs a semidirect instance")
        runs = [
            (label, verify_semidirect_decomposition(data.G, data.A, data.act, C, act, budget))
            for label, C, act in natural_coefficients(data)
        ]
        return _verification(which, inst.spec, runs)
    primes = [inst.p] if inst.p is not None else [2, 3]
    sd = None if inst.kind == "cyclic" else (data.G, data.A, data.act)
    G = None if inst.kind == "cyclic" else data.G
    runs = []
    for p in primes:
        for label, act in cross_coefficients(data.D, G):
            runs.append((f"{label}, p={p}", cross_check_hopf_vs_group(data.D, act, p, budget, sd)))
    return _verification(which, inst.spec, runs)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime for specs that leave it out")
    common.add_argument("--n", type=int, help="N for specs that leave it out")
    common.add_argument("--budget", type=int, help="largest search space to enumerate (default 10^7, or HOPFCOH_BUDGET)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json"], default="json")

    parser = argparse.ArgumentParser(prog="hopfcoh", description="Exhaustive non-abelian Hopf cohomology over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="run every applicable axiom suite")
    c.add_argument("instance")
    h = sub.add_parser("cohomology", parents=[common], help="compute H0 and H1")
    h.add_argument("instance")
    h.add_argument("--coeff", choices=["E", "trivial", "star"], default="E")
    v = sub.add_parser("verify", parents=[common], help="run a named verification")
    v.add_argument("id", help="decomposition, exact-sequence, semidirect, cross-check or grouplike-count")
    v.add_argument("instance")
    return parser


COMMANDS = {"check": cmd_check, "cohomology": cmd_cohomology, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = resolve_budget(args.budget)
        body, ok = COMMANDS[args.command](args, budget)
    except BudgetExceeded as e:
        print(f"hopfcoh: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, NotPrime, NoSuchRoot, NotAnAction) as e:
        print(f"hopfcoh: {e}", file=sys.stderr)
        return EXIT_INPUT
    except PrerequisiteFailed as e:
        print(f"hopfcoh: {e}", file=sys.stderr)
        return EXIT_FAIL
    except HopfCohError as e:
        print(f"hopfcoh: {e}", file=sys.stderr)
        return EXIT_INPUT
    text = render(body)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

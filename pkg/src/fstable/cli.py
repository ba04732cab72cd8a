"""Command-line interface.

Subcommands operate on a problem file (see problemfile for the grammar)
and print a deterministic report; ``--json`` switches to a stable JSON
schema ``{command, setup, results, caveats}``. Exit codes: 0 computed,
1 input error, 2 resource cap hit, 3 an inconclusive verdict is present.

    fstable check ex2.prob
    fstable enumerate --pool linear ex1.prob --json
    fstable reproduce-paper
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import fixtures
from .ci import CISetup
from .errors import FstableError, ParseError, ResourceLimitError, SetupError
from .gorenstein import GorSetup
from .groebner import Ideal
from .problemfile import Mode, ProblemFile, load_problem
from .ring import MonomialOrder
from .stable import NilStatus, pool_linear, pool_vars

POOL_CAVEAT = ("enumeration-based results are relative to the generator pool: "
               "a larger pool can only add members, never remove them")

_FILE_COMMANDS = ("check", "closure", "nilpotent", "enumerate", "test-ideal",
                  "fpure", "frational", "gb", "dim")


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract wants 1
    def error(self, message):
        raise _ArgError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fstable", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file=True, ideal=False, ideal_required=False):
        if file:
            p.add_argument("file", metavar="FILE", help="problem file")
        if ideal:
            p.add_argument("--ideal", metavar="NAME", required=ideal_required,
                           help="declared ideal to operate on"
                                + ("" if ideal_required else " (default: uR)"))
        p.add_argument("--order", choices=("grevlex", "lex"),
                       help="ambient monomial order (overrides the file option)")
        p.add_argument("--emax", type=int, metavar="N",
                       help="cap on Frobenius chain length")
        p.add_argument("--max-iter", type=int, metavar="N",
                       help="cap on Groebner pairs, basis size, and closure rounds")
        p.add_argument("--pool", metavar="{vars,linear,file:PATH}",
                       help="generator pool for enumeration commands")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, metavar="N",
                       help="seed for randomized self-checks")

    helps = {
        "check": "membership verdict for every declared ideal (uR if none)",
        "closure": "star closure of a declared ideal",
        "nilpotent": "nilpotency verdict for a declared ideal",
        "enumerate": "enumerate members reachable from the pool",
        "test-ideal": "parameter test ideal from the enumerated members",
        "fpure": "F-purity via Fedder's criterion",
        "frational": "F-rationality report relative to the pool",
        "gb": "reduced Groebner basis of an ideal",
        "dim": "Krull dimension of R/I",
        "reproduce-paper": "re-run the bundled example fixtures",
    }
    for name in _FILE_COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        common(p, ideal=name in ("closure", "nilpotent", "gb", "dim"),
               ideal_required=name in ("closure", "nilpotent"))
    p = sub.add_parser("reproduce-paper", help=helps["reproduce-paper"])
    common(p, file=False)
    return parser


def _resolve_pool(spec: str | None, problem: ProblemFile, base_dir: str):
    """Pool precedence: --pool flag, then file option, then vars."""
    spec = spec or problem.options.pool or "vars"
    ring = problem.ring
    if spec == "vars":
        return list(pool_vars(ring)), "vars"
    if spec == "linear":
        return list(pool_linear(ring)), "linear"
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        try:
            with open(path, encoding="utf-8") as handle:
                lines = handle.read().splitlines()
        except OSError as exc:
            raise SetupError(f"cannot read pool file {path}: {exc.strerror}")
        pool = []
        for lineno, raw in enumerate(lines, start=1):
            cut = raw.find("#")
            text = (raw[:cut] if cut >= 0 else raw).strip()
            if not text:
                continue
            try:
                pool.append(ring.parse(text))
            except ParseError as exc:
                raise exc.at_line(lineno)
        if not pool:
            raise SetupError(f"pool file {path} declares no polynomials")
        return pool, f"file:{os.path.basename(path)}"
    raise SetupError(f"bad pool spec {spec!r} (use vars, linear, or file:PATH)")


def _build_setup(problem: ProblemFile, limits):
    if problem.mode is Mode.GORENSTEIN:
        return GorSetup(problem.ring, problem.u, problem.epsilon, limits)
    return CISetup(problem.ring, problem.u, limits)


def _gb_strings(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.groebner()]


def _given_strings(problem: ProblemFile, name: str | None) -> list[str]:
    if name is None:
        return [str(g) for g in problem.u]
    return [str(g) for g in problem.ideals[name]]


def _named_ideal(problem: ProblemFile, name: str | None) -> Ideal:
    if name is None:
        return Ideal(problem.ring, problem.u)
    return problem.named_ideal(name)


def _nil_dict(nil) -> dict:
    return {
        "status": nil.status.value,
        "exponent": nil.exponent,
        "chain": [_gb_strings(w) for w in nil.chain],
        "ascending": nil.ascending,
        "rechecked": nil.rechecked,
    }


class Report:
    """Accumulates results plus caveats and renders both output styles."""

    def __init__(self, command: str, problem: ProblemFile | None):
        self.command = command
        self.problem = problem
        self.results: list[dict] = []
        self.caveats: list[str] = []
        self.lines: list[str] = []
        self.inconclusive = False

    def note_nil(self, nil):
        if nil.status is NilStatus.INCONCLUSIVE:
            self.inconclusive = True
            self.caveats.append(
                "inconclusive nilpotency verdict: raise --emax to push the "
                "chain further")
        if nil.status is NilStatus.NILPOTENT and nil.rechecked is None:
            self.caveats.append(
                "nilpotent verdict relies on the chain recursion; the direct "
                "power recheck was skipped (power too large)")

    def setup_dict(self) -> dict:
        pr = self.problem
        if pr is None:
            return {"mode": None, "p": None, "vars": [], "u": [],
                    "epsilon": None, "order": None}
        return {
            "mode": pr.mode.value,
            "p": pr.p,
            "vars": list(pr.vars),
            "u": [str(g) for g in pr.u],
            "epsilon": str(pr.epsilon) if pr.epsilon is not None else None,
            "order": str(pr.ring.order),
        }

    def render(self, as_json: bool) -> str:
        self.caveats = list(dict.fromkeys(self.caveats))
        if as_json:
            payload = {
                "command": self.command,
                "setup": self.setup_dict(),
                "results": self.results,
                "caveats": self.caveats,
            }
            return json.dumps(payload, indent=2) + "\n"
        head = [f"command: {self.command}"]
        pr = self.problem
        if pr is not None:
            head.append(f"mode: {pr.mode.value}")
            head.append(f"p: {pr.p}")
            head.append(f"vars: {' '.join(pr.vars)}")
            head.append(f"order: {pr.ring.order}")
            head.append("u: " + ", ".join(str(g) for g in pr.u))
            if pr.epsilon is not None:
                head.append(f"epsilon: {pr.epsilon}")
        body = head + [""] + self.lines
        if self.caveats:
            body += [""] + ["caveats:"] + [f"  - {c}" for c in self.caveats]
        return "\n".join(body) + "\n"


def _ideal_block(report: Report, label: str, given: list[str], gb: list[str]):
    report.lines.append(f"{label}:")
    report.lines.append("  given: " + ", ".join(given))
    report.lines.append("  reduced GB: " + ", ".join(gb))


def _cmd_check(args, problem, setup, pool, report: Report):
    names = list(problem.ideals) or [None]
    if names == [None]:
        report.caveats.append("no ideals declared; checking uR itself")
    for name in names:
        ideal = _named_ideal(problem, name)
        verdict = setup.membership(ideal)
        label = name or "uR"
        given = _given_strings(problem, name)
        gb = _gb_strings(verdict.ideal)
        entry = {"name": label, "given": given, "gb": gb,
                 "member": verdict.member, "extended": verdict.extended,
                 "witness": None}
        _ideal_block(report, label, given, gb)
        report.lines.append(f"  member: {'yes' if verdict.member else 'no'}")
        if verdict.extended:
            report.lines.append("  note: normalized by adding the floor ideal")
        if verdict.witness is not None:
            gen, rem = verdict.witness
            entry["witness"] = {"generator": str(gen), "remainder": str(rem)}
            report.lines.append(f"  witness generator: {gen}")
            report.lines.append(f"  witness remainder: {rem}")
        report.lines.append("")
        report.results.append(entry)


def _cmd_closure(args, problem, setup, pool, report: Report):
    ideal = problem.named_ideal(args.ideal)
    closed = setup.star_closure(ideal)
    given = _given_strings(problem, args.ideal)
    gb = _gb_strings(closed)
    report.results.append({"name": args.ideal, "given": given, "gb": gb})
    _ideal_block(report, f"star closure of {args.ideal}", given, gb)


def _cmd_nilpotent(args, problem, setup, pool, report: Report):
    ideal = problem.named_ideal(args.ideal)
    nil = setup.nilpotency(ideal)
    report.note_nil(nil)
    given = _given_strings(problem, args.ideal)
    entry = {"name": args.ideal, "given": given}
    entry.update(_nil_dict(nil))
    report.results.append(entry)
    report.lines.append(f"{args.ideal}:")
    report.lines.append("  given: " + ", ".join(given))
    report.lines.append(f"  status: {nil.status.value}"
                        + (f" (e = {nil.exponent})" if nil.exponent else ""))
    for k, w in enumerate(nil.chain, start=1):
        report.lines.append(f"  W_{k}: " + ", ".join(_gb_strings(w)))
    report.lines.append(f"  ascending chain: {'yes' if nil.ascending else 'no'}")
    if nil.rechecked is not None:
        report.lines.append(
            f"  direct power recheck: {'confirmed' if nil.rechecked else 'failed'}")


def _cmd_enumerate(args, problem, setup, pool, report: Report):
    pool_list, pool_label = pool
    enum = setup.enumerate_members(pool=pool_list, pool_label=pool_label)
    report.caveats.append(POOL_CAVEAT)
    members = []
    report.lines.append(f"pool: {pool_label} ({len(pool_list)} generators)")
    report.lines.append(f"members found: {len(enum.members)}")
    for k, rec in enumerate(enum.members, start=1):
        nil = rec.nilpotency
        if nil is not None:
            report.note_nil(nil)
        entry = {"gb": _gb_strings(rec.ideal), "height": rec.height,
                 "nilpotency": _nil_dict(nil) if nil is not None else None}
        members.append(entry)
        tag = f"  {k}. height {rec.height}"
        if nil is not None:
            tag += f"  {nil.status.value}"
        report.lines.append(tag + "  GB: " + ", ".join(entry["gb"]))
    report.results.append({"pool_label": pool_label, "pool_size": len(pool_list),
                           "members": members})


def _cmd_test_ideal(args, problem, setup, pool, report: Report):
    pool_list, pool_label = pool
    result = setup.parameter_test_ideal(pool=pool_list, pool_label=pool_label)
    report.caveats.append(POOL_CAVEAT)
    if result.vacuous:
        report.caveats.append(
            "no proper positive-height member was found, so the reported "
            "intersection is vacuously the unit ideal")
    gb = _gb_strings(result.ideal)
    report.results.append({
        "gb": gb, "vacuous": result.vacuous,
        "positive_count": result.positive_count,
        "members": len(result.enumeration.members)})
    report.lines.append(f"pool: {pool_label} ({len(pool_list)} generators)")
    report.lines.append(
        f"positive-height members intersected: {result.positive_count}")
    report.lines.append("parameter test ideal: " + ", ".join(gb))


def _cmd_fpure(args, problem, setup, pool, report: Report):
    flag = setup.is_f_pure()
    report.results.append({"f_pure": flag})
    report.lines.append(f"F-pure: {'yes' if flag else 'no'}")


def _cmd_frational(args, problem, setup, pool, report: Report):
    pool_list, pool_label = pool
    result = setup.f_rational_report(pool=pool_list, pool_label=pool_label)
    definitive = result.witness is not None
    entry = {"f_rational": result.f_rational_relative, "definitive": definitive,
             "witness": _gb_strings(result.witness) if definitive else None}
    report.results.append(entry)
    report.lines.append(f"pool: {pool_label} ({len(pool_list)} generators)")
    if definitive:
        report.lines.append("F-rational: no (witness member below)")
        report.lines.append("  witness GB: " + ", ".join(entry["witness"]))
    else:
        report.lines.append("F-rational: yes, relative to the pool")
        report.caveats.append(POOL_CAVEAT)


def _cmd_gb(args, problem, setup, pool, report: Report):
    ideal = _named_ideal(problem, args.ideal)
    given = _given_strings(problem, args.ideal)
    gb = _gb_strings(ideal)
    label = args.ideal or "uR"
    report.results.append({"name": label, "given": given, "gb": gb,
                           "order": str(problem.ring.order)})
    _ideal_block(report, label, given, gb)


def _cmd_dim(args, problem, setup, pool, report: Report):
    ideal = _named_ideal(problem, args.ideal)
    given = _given_strings(problem, args.ideal)
    label = args.ideal or "uR"
    dim = ideal.dim(setup.limits)
    report.results.append({"name": label, "given": given,
                           "gb": _gb_strings(ideal), "dim": dim})
    _ideal_block(report, label, given, _gb_strings(ideal))
    report.lines.append(f"  dim R/I: {dim}")


def _cmd_reproduce(args, report: Report):
    seed = args.seed if args.seed is not None else 0
    results = fixtures.run_all(seed=seed)
    ok = True
    for r in results:
        ok = ok and r.passed
        mark = "PASS" if r.passed else "FAIL"
        line = f"{mark} {r.name}"
        if r.detail and not r.passed:
            line += f": {r.detail}"
        report.lines.append(line)
        report.results.append({"name": r.name, "passed": r.passed,
                               "detail": r.detail})
    report.lines.append("")
    report.lines.append(f"{sum(r.passed for r in results)}/{len(results)} claims hold")
    return ok


_HANDLERS = {
    "check": _cmd_check,
    "closure": _cmd_closure,
    "nilpotent": _cmd_nilpotent,
    "enumerate": _cmd_enumerate,
    "test-ideal": _cmd_test_ideal,
    "fpure": _cmd_fpure,
    "frational": _cmd_frational,
    "gb": _cmd_gb,
    "dim": _cmd_dim,
}

_POOL_COMMANDS = ("enumerate", "test-ideal", "frational")
_CI_ONLY = ("fpure", "nilpotent")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.seed is not None:
        random.seed(args.seed)

    if args.command == "reproduce-paper":
        report = Report(args.command, None)
        ok = _cmd_reproduce(args, report)
        sys.stdout.write(report.render(args.json))
        return 0 if ok else 1

    try:
        order = MonomialOrder.lex() if args.order == "lex" else (
            MonomialOrder.grevlex() if args.order == "grevlex" else None)
        problem = load_problem(args.file, order)
        limits = problem.options.merged_limits()
        if args.max_iter is not None:
            if args.max_iter <= 0:
                raise SetupError("--max-iter must be positive")
            from dataclasses import replace
            limits = replace(limits, max_pairs=args.max_iter,
                             max_basis=args.max_iter, max_rounds=args.max_iter)
        if args.emax is not None:
            if args.emax <= 0:
                raise SetupError("--emax must be positive")
            from dataclasses import replace
            limits = replace(limits, e_max=args.emax)
        if args.command in _CI_ONLY and problem.mode is Mode.GORENSTEIN:
            raise SetupError(
                f"{args.command} applies to the complete-intersection mode "
                "only; this problem file declares epsilon")
        setup = _build_setup(problem, limits)
        pool = None
        if args.command in _POOL_COMMANDS:
            pool = _resolve_pool(args.pool, problem,
                                 os.path.dirname(os.path.abspath(args.file)))
        elif args.pool is not None:
            raise SetupError(f"--pool has no effect on {args.command}")
        report = Report(args.command, problem)
        _HANDLERS[args.command](args, problem, setup, pool, report)
    except (ParseError, SetupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except FstableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(report.render(args.json))
    return 3 if report.inconclusive else 0


if __name__ == "__main__":
    sys.exit(main())

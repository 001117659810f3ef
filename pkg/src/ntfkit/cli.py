"""``ntfkit`` command-line entry point.

Exit codes: 0 every requested check passed, 1 a check failed, 2 usage or
input error, 3 a computation budget was exceeded.
"""
from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__  # noqa: F401  (used by --version)
from .decomposition import (
    alexander_dual,
    ass_witness_oracle,
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
    sorted_primes,
    symbolic_power,
)
from .errors import BudgetExceededError, NtfkitError, ParseError
from .graphs import (
    build_graph,
    cover_ideal,
    dominating_ideal,
    edge_ideal,
    format_graph_file,
    neighborhood_ideal,
    parse_graph_file,
)
from .ideal import format_ideal_file, intersect, parse_ideal_file, power
from .monomial import parse_monomial
from .ntf import DEFAULT_HORIZON, beta1, is_minimally_not_ntf, is_ntf_up_to
from .report import RunReport, digest, emit_report, format_prime_list, suite_table
from .suite import SCENARIOS, run_scenario

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_ideal(path: str, report: RunReport, key: str = "ideal"):
    text = _read(path)
    report.inputs[key] = digest(text)
    return parse_ideal_file(text)


def _ideal_result(report: RunReport, ideal) -> None:
    report.result = {"ideal": ideal}
    report.text = format_ideal_file(ideal)


def _primes_result(report: RunReport, primes, ctx) -> None:
    primes = sorted_primes(primes)
    report.result = {"primes": primes}
    report.text = "".join(f"prime: {p.format(ctx)}\n" for p in primes)


# -- subcommands -------------------------------------------------------------


def cmd_min(args, rep):
    _ideal_result(rep, _load_ideal(args.ideal, rep))


def cmd_ass(args, rep):
    I = _load_ideal(args.ideal, rep)
    _primes_result(rep, associated_primes(I), I.ctx)


def cmd_minprimes(args, rep):
    I = _load_ideal(args.ideal, rep)
    _primes_result(rep, minimal_primes(I), I.ctx)


def cmd_decompose(args, rep):
    I = _load_ideal(args.ideal, rep)
    dec = irreducible_decomposition(I)
    rep.result = {"components": dec.ideals(), "irredundant": dec.irredundant}
    rep.text = dec.report()


def cmd_dual(args, rep):
    _ideal_result(rep, alexander_dual(_load_ideal(args.ideal, rep)))


def cmd_power(args, rep):
    _ideal_result(rep, power(_load_ideal(args.ideal, rep), args.k))


def cmd_symbolic(args, rep):
    _ideal_result(rep, symbolic_power(_load_ideal(args.ideal, rep), args.k))


def cmd_intersect(args, rep):
    ideals = [_load_ideal(p, rep, f"ideal{i + 1}") for i, p in enumerate(args.ideals)]
    _ideal_result(rep, intersect(*ideals))


def cmd_colon(args, rep):
    I = _load_ideal(args.ideal, rep)
    v = parse_monomial(args.by, I.ctx)
    _ideal_result(rep, I.colon(v))


def cmd_minor(args, rep):
    I = _load_ideal(args.ideal, rep)
    name = args.delete or args.contract
    try:
        j = I.ctx.index(name)
    except KeyError:
        raise ParseError(f"unknown variable {name!r}") from None
    _ideal_result(rep, I.deletion(j) if args.delete else I.contraction(j))


def _embedded_witnesses(I, k, primes):
    """Colon witnesses ``(I^k : v) = p`` for the embedded primes, when the search is affordable."""
    try:
        found = ass_witness_oracle(power(I, k))
    except BudgetExceededError:
        return []
    return [{"prime": p, "k": k, "witness": found[p]} for p in primes if p in found]


def cmd_ntf(args, rep):
    I = _load_ideal(args.ideal, rep)
    r = is_ntf_up_to(I, args.max_power)
    rep.verdict = r.verdict
    rep.result = {
        "horizon": r.horizon,
        "failed_at": r.failed_at,
        "embedded": list(r.embedded),
        "ass_by_power": [{"k": s.k, "primes": list(s.ass)} for s in r.per_k],
        "symbolic_cross_check": r.cross_check_ok,
    }
    lines = [f"verdict: {r.verdict}"]
    if not r.is_ntf:
        emb = ", ".join(format_prime_list(p) for p in r.embedded)
        lines.append(f"embedded: {emb} at k={r.failed_at}")
        rep.witnesses = _embedded_witnesses(I, r.failed_at, r.embedded)
        for w in rep.witnesses:
            lines.append(f"witness: (I^{w['k']} : {w['witness']}) = {w['prime']}")
    if not r.cross_check_ok:
        lines.append("cross-check: power/symbolic-power comparison disagrees")
        rep.exit_code = EXIT_CHECK_FAILED
    rep.text = "\n".join(lines) + "\n"


def cmd_mnnt(args, rep):
    I = _load_ideal(args.ideal, rep)
    p = is_minimally_not_ntf(I, args.max_power)
    rep.verdict = p.verdict
    rep.result = {
        "horizon": p.horizon,
        "m": p.m,
        "beta1": p.beta1,
        "bound_m_ge_beta1": p.bound_holds,
        "ass_shape_ok": p.ass_shape_ok,
        "side_condition_ok": p.side_condition_ok,
        "ass_by_power": [{"k": k, "primes": list(ps)} for k, ps in p.ass_by_power],
        "minors": [{"minor": lab, "verdict": v} for lab, v in p.minor_verdicts],
        "reason": p.reason,
    }
    lines = [f"verdict: {p.verdict}"]
    if p.reason:
        lines.append(f"reason: {p.reason}")
    lines.append(f"beta1: {p.beta1}")
    if p.m is not None:
        lines.append(f"m: {p.m}")
    if p.bound_holds is not None:
        lines.append(f"m >= beta1: {'true' if p.bound_holds else 'false'}")
    for k, ps in p.ass_by_power:
        lines.append(f"Ass(I^{k}): " + " ".join(str(q) for q in ps))
    for lab, v in p.minor_verdicts:
        lines.append(f"minor {lab}: {v}")
    rep.text = "\n".join(lines) + "\n"


def cmd_beta1(args, rep):
    b = beta1(_load_ideal(args.ideal, rep))
    rep.result = {"beta1": b}
    rep.text = f"beta1: {b}\n"


_GRAPH_IDEALS = {
    "edge": edge_ideal,
    "cover": cover_ideal,
    "ni": neighborhood_ideal,
    "di": lambda G: dominating_ideal(G, verify=True),
}


def cmd_graph(args, rep):
    if args.from_file:
        text = _read(args.from_file)
        rep.inputs["graph"] = digest(text)
        G = parse_graph_file(text)
    else:
        if args.type is None or args.n is None:
            raise ParseError("graph needs --type and --n, or --from FILE")
        G = build_graph(args.type, args.n, args.seed)
        rep.seed = args.seed if args.type == "tree" else None
    if args.ideal is None:
        rep.result = {"n": G.n, "edges": G.edge_list()}
        rep.text = format_graph_file(G)
        return
    _ideal_result(rep, _GRAPH_IDEALS[args.ideal](G))


def cmd_paper_suite(args, rep):
    labels = sorted(set(args.scenario.upper())) if args.scenario else list(SCENARIOS)
    bad = [s for s in labels if s not in SCENARIOS]
    if bad:
        raise ParseError(f"unknown scenario(s) {''.join(bad)}; choose from {SCENARIOS}")
    if args.max_power < 3:
        raise ParseError("paper-suite needs --max-power >= 3")
    rep.seed = args.seed
    if args.jobs > 1 and len(labels) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(run_scenario, s, args.max_power, args.seed) for s in labels]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = [run_scenario(s, args.max_power, args.seed) for s in labels]
    outcomes.sort(key=lambda o: o.label)
    rep.result = {"horizon": args.max_power, "scenarios": [o.as_dict() for o in outcomes]}
    rep.witnesses = [dict(f, scenario=o.label) for o in outcomes for f in o.failures]
    if any(o.failures for o in outcomes):
        rep.verdict, rep.exit_code = "fail", EXIT_CHECK_FAILED
    elif any(o.budget_error for o in outcomes):
        rep.verdict, rep.exit_code = "budget-exceeded", EXIT_BUDGET
    else:
        rep.verdict = "pass"
    rep.text = suite_table(outcomes) + f"verdict: {rep.verdict}\n"


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")

    parser = argparse.ArgumentParser(
        prog="ntfkit", parents=[common],
        description="Exact computations with square-free monomial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"ntfkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, ideal=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if ideal:
            p.add_argument("ideal", help="ideal file ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    add("min", cmd_min, "minimal generators in canonical order")
    add("ass", cmd_ass, "associated primes")
    add("minprimes", cmd_minprimes, "minimal primes")
    add("decompose", cmd_decompose, "irredundant irreducible decomposition")
    add("dual", cmd_dual, "Alexander dual of a square-free ideal")
    add("power", cmd_power, "ordinary power I^k").add_argument("-k", type=int, required=True)
    add("symbolic", cmd_symbolic, "symbolic power I^(k)").add_argument("-k", type=int, required=True)
    p = add("intersect", cmd_intersect, "intersection of ideals in one context", ideal=False)
    p.add_argument("ideals", nargs="+", help="ideal files")
    add("colon", cmd_colon, "colon by a monomial").add_argument("--by", required=True, metavar="MONOMIAL")
    p = add("minor", cmd_minor, "deletion (x_j = 0) or contraction (x_j = 1)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delete", metavar="VAR")
    g.add_argument("--contract", metavar="VAR")
    add("ntf", cmd_ntf, "normally torsion-free up to a horizon").add_argument(
        "--max-power", type=int, default=DEFAULT_HORIZON, metavar="K")
    add("mnnt", cmd_mnnt, "minimally-not-NTF profile").add_argument(
        "--max-power", type=int, default=DEFAULT_HORIZON, metavar="K")
    add("beta1", cmd_beta1, "largest set of pairwise coprime generators")

    p = add("graph", cmd_graph, "graph families and their ideals", ideal=False)
    p.add_argument("--type", choices=["path", "cycle", "star", "tree"])
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--from", dest="from_file", metavar="FILE", help="read a graph file instead")
    p.add_argument("--ideal", choices=sorted(_GRAPH_IDEALS))

    p = add("paper-suite", cmd_paper_suite, "run the reproduction scenarios", ideal=False)
    p.add_argument("--scenario", metavar="LABELS", help=f"subset of {SCENARIOS} (default: all)")
    p.add_argument("--max-power", type=int, default=DEFAULT_HORIZON, metavar="K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="run scenarios in this many processes")
    return parser


def run_command(argv) -> RunReport:
    """Parse ``argv`` and execute; library errors propagate to the caller."""
    args = build_parser().parse_args(argv)
    rep = RunReport(command=" ".join(["ntfkit", *argv]))
    start = time.perf_counter()
    args.func(args, rep)
    rep.timing_ms = (time.perf_counter() - start) * 1000.0
    return rep


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        rep = run_command(argv)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NtfkitError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(emit_report(rep, as_json))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

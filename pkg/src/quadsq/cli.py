"""Command-line front end: ``quadsq <command> ...``.

Exit codes: 0 success, 1 domain error, 2 scan contradictions, 3 undecided
local verdict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from quadsq import arith, criteria, localsolve, oracle, pell
from quadsq.errors import DomainError, UndecidedError
from quadsq.quadfield import FieldSpec, QuadInt, check_radicand

EXIT_OK, EXIT_DOMAIN, EXIT_CONTRADICTION, EXIT_UNDECIDED = 0, 1, 2, 3
_INT64_MAX = 2**63 - 1


def _num(n: int):
    """Ints that might not fit in 64 bits are emitted as decimal strings."""
    return n if abs(n) <= _INT64_MAX else str(n)


def _nums(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return _num(obj)
    if isinstance(obj, dict):
        return {k: _nums(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_nums(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_nums(obj), ensure_ascii=True, separators=(",", ":"))


def _emit(args, payload: dict, text: str) -> None:
    print(_dump(payload) if args.json else text)


def _schedule(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad bound list {text!r}") from None
    if not out or min(out) <= 0:
        raise argparse.ArgumentTypeError("bounds must be positive")
    return out


def cmd_decide(args) -> int:
    alpha = QuadInt.parse(args.alpha, FieldSpec(args.m).m)
    dec = criteria.decide(args.m, alpha)
    payload = dec.to_json()
    witness = dec.witness
    if args.with_oracle and witness is None and dec.verdict is not criteria.Verdict.UNSOLVABLE:
        for bound in oracle.DEFAULT_SCHEDULE:
            witness = oracle.brute_force(args.m, alpha, bound)
            if witness:
                break
    if args.with_oracle:
        payload["witness"] = None if witness is None else [w.to_json() for w in witness]
    text = f"{alpha} in Z[sqrt({args.m})]: {dec.verdict.value} [{', '.join(dec.reasons)}]"
    if args.with_oracle and witness:
        text += f"\n  witness: ({witness[0]})^2 + ({witness[1]})^2"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_scan(args) -> int:
    report = oracle.cross_check(args.m, args.range, args.bounds, jobs=args.jobs)
    if args.report:
        with open(args.report, "w") as fh:
            for row in report.rows:
                fh.write(_dump(row.to_json()) + "\n")
    figures = []
    if args.figure:
        from quadsq import plotting

        figures.append(str(plotting.plot_verdict_map(report, args.figure)))
        stem = Path(args.figure)
        hist = stem.with_name(stem.stem + "_bounds" + stem.suffix)
        figures.append(str(plotting.plot_witness_bounds(report, hist)))
    summary = report.summary()
    if figures:
        summary["figures"] = figures
    c = summary["counts"]
    text = (
        f"Z[sqrt({args.m})], |a|,|b| <= {args.range}: {summary['elements']} elements, "
        f"{c['Solvable']} solvable, {c['Unsolvable']} unsolvable, {c['UnknownByCriterion']} unknown; "
        f"max witness bound {summary['max_witness_bound']}; "
        f"{len(summary['contradictions'])} contradictions"
    )
    _emit(args, summary, text)
    return EXIT_CONTRADICTION if report.contradictions else EXIT_OK


def cmd_classify_d(args) -> int:
    mem = criteria.classify_D(args.d)
    text = f"d = {args.d}: " + (", ".join(f"({p}, {c})" for p, c in mem.witnesses) or "not in D")
    _emit(args, mem.to_json(), text)
    return EXIT_OK


def cmd_applicable(args) -> int:
    tags = criteria.applicable_results(args.m)
    _emit(args, {"m": args.m, "results": [t.to_json() for t in tags]}, " ".join(map(str, tags)))
    return EXIT_OK


def cmd_pell(args) -> int:
    sol = pell.solve_small_norm(args.D, args.N)
    payload = sol.to_json() if sol else {"x": None, "y": None, "N": args.N}
    text = f"x^2 - {args.D}*y^2 = {args.N}: " + (f"({sol.x}, {sol.y})" if sol else "no solution")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_unit(args) -> int:
    info = pell.fundamental_unit(args.D)
    _emit(args, info.to_json(), f"eps = {info.eps}, norm {info.unit_norm:+d}")
    return EXIT_OK


def cmd_symbol(args) -> int:
    if args.kind == "jacobi":
        if len(args.values) != 2:
            raise DomainError("jacobi takes a n")
        a, n = args.values
        value = arith.jacobi(a, n)
        payload = {"symbol": "jacobi", "a": a, "n": n, "value": value}
    elif args.kind == "quartic2":
        if len(args.values) != 1:
            raise DomainError("quartic2 takes p")
        (p,) = args.values
        value = arith.quartic2(p)
        payload = {"symbol": "quartic2", "p": p, "value": value}
    else:
        if len(args.values) != 2:
            raise DomainError("class takes m p")
        m, p = args.values
        value = criteria.prime_class(m, p).value
        payload = {"symbol": "class", "m": m, "p": p, "value": value}
    _emit(args, payload, str(value))
    return EXIT_OK


def cmd_local(args) -> int:
    m = check_radicand(args.m)
    alpha = QuadInt.parse(args.alpha, m)
    if args.prime is not None:
        if not arith.is_prime(args.prime):
            raise DomainError(f"{args.prime} is not prime")
        verdicts = [localsolve.local_sum2(m, alpha, args.prime)]
        ok = verdicts[0].solvable
    else:
        ok, verdicts = localsolve.locally_solvable_everywhere(m, alpha)
    payload = {"solvable": ok, "verdicts": [v.to_json() for v in verdicts]}
    lines = [f"{v.prime}: {'solvable' if v.solvable else 'not solvable'}" for v in verdicts]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadsq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("decide", cmd_decide, "decide x^2 + y^2 = alpha over Z[sqrt(m)], m = +-6")
    p.add_argument("-m", type=int, required=True, choices=criteria.DECIDABLE_FIELDS)
    p.add_argument("--alpha", required=True, help="a,b for a + b*sqrt(m)")
    p.add_argument("--with-oracle", action="store_true", help="also search for an explicit witness")

    p = add("scan", cmd_scan, "cross-check decide against brute force over a box")
    p.add_argument("-m", type=int, required=True, choices=criteria.DECIDABLE_FIELDS)
    p.add_argument("--range", type=int, default=5)
    p.add_argument("--bounds", type=_schedule, default=oracle.DEFAULT_SCHEDULE)
    p.add_argument("--report", help="JSONL output path")
    p.add_argument("--figure", help="PNG verdict map (a _bounds histogram is written next to it)")
    p.add_argument("--jobs", type=int, default=None)

    p = add("classify-d", cmd_classify_d, "which of D1, D2, D3 contain d")
    p.add_argument("d", type=int)

    p = add("applicable", cmd_applicable, "results applying to Q(sqrt(m))")
    p.add_argument("m", type=int)

    p = add("pell", cmd_pell, "least solution of x^2 - D*y^2 = N, |N| <= 2")
    p.add_argument("D", type=int)
    p.add_argument("N", type=int)

    p = add("unit", cmd_unit, "fundamental unit of Z[sqrt(D)]")
    p.add_argument("D", type=int)

    p = add("symbol", cmd_symbol, "jacobi a n | quartic2 p | class m p")
    p.add_argument("kind", choices=("jacobi", "quartic2", "class"))
    p.add_argument("values", type=int, nargs="+")

    p = add("local", cmd_local, "local solvability of x^2 + y^2 = alpha")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--prime", type=int)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--alpha -1,2" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--alpha" and i + 1 < len(argv):
            out.append(f"--alpha={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    if hasattr(args, "jobs") and (args.jobs is None or os.environ.get("QUADSQ_JOBS")):
        # the environment wins over --jobs
        args.jobs = oracle.default_jobs()
    try:
        return args.func(args)
    except DomainError as exc:
        print(_dump({"error": "DomainError", "message": str(exc)}), file=sys.stderr)
        return EXIT_DOMAIN
    except UndecidedError as exc:
        print(_dump({"error": "Undecided", "prime": exc.prime, "precision": exc.precision}), file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())

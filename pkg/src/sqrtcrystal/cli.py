"""
Command-line front end.

Exit codes: 0 pass, 1 falsified, 2 usage error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import crystals, hecke, pipedreams, svwords, tableaux, verify
from .algebra import Permutation
from .errors import ConsistencyError, InvalidShapeError, SizeGuardError

EXIT_PASS, EXIT_FALSIFIED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

GRAPH_TARGETS = ("standard-sqrt", "standard-gl", "trivial", "settab", "svwords", "rpd", "decr")


class UsageError(Exception):
    pass


def _parse_parts(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() in ("", "()", "0"):
        return ()
    try:
        return tuple(int(p) for p in text.replace("(", "").replace(")", "").split(",") if p.strip())
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}; use e.g. 2,1") from None


def _parse_perm(text: str | None) -> Permutation:
    if not text:
        raise UsageError("a permutation is required (one-line, e.g. 1432)")
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqrtcrystal", description="Square-root crystal toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank / number of variables")
    common.add_argument("--m", type=int, help="word length or RPD columns")
    common.add_argument("--shape", help="partition, e.g. 2,1")
    common.add_argument("--inner", help="inner or second partition, e.g. 1")
    common.add_argument("--perm", help="permutation in one-line notation")
    common.add_argument("--w", dest="w", help="alias of --perm")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--format", choices=("json", "text", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="dual-route Grothendieck expansions")
    p.add_argument("kind", choices=verify.EXPANSION_KINDS)

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem checks")
    p.add_argument("theorem", choices=sorted(verify.THEOREMS))
    p.add_argument("--exact", action="store_true", help="check only the given (n, m), not every smaller pair")
    p.add_argument("--trials", type=int, default=200, help="trials for randomized checks")

    p = sub.add_parser("graph", parents=[common], help="export a crystal graph")
    p.add_argument("target", choices=GRAPH_TARGETS)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _perm_arg(args) -> Permutation:
    return _parse_perm(args.perm or args.w)


def cmd_expand(args) -> int:
    n = _require(args.n, "--n")
    kind = args.kind
    if kind == "Gw":
        d = verify.expand_dual(kind, n, w=_perm_arg(args))
    elif kind in ("skewG", "product"):
        d = verify.expand_dual(kind, n, _parse_parts(_require(args.shape, "--shape")), _parse_parts(args.inner))
    else:
        d = verify.expand_dual(kind, n, _parse_parts(_require(args.shape, "--shape")))
    if args.format == "json":
        _emit(json.dumps(d.to_json(), indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(d.to_text() + "\n", args.out)
    return EXIT_PASS if d.agree else EXIT_INTERNAL


def _verify_jobs(args) -> list[tuple[str, dict]]:
    theorem = args.theorem
    if theorem == "rowsplit":
        return [(theorem, {"trials": args.trials, "seed": args.seed})]
    n = _require(args.n, "--n")
    if theorem == "svt":
        return [(theorem, {"n": n, "shape": _parse_parts(_require(args.shape, "--shape")),
                           "inner": _parse_parts(args.inner)})]
    m = _require(args.m, "--m")
    if n < 1 or m < 1:
        raise UsageError("--n and --m must be positive")
    pairs = [(n, m)] if args.exact else [(a, b) for a in range(1, n + 1) for b in range(1, m + 1)]
    return [(theorem, {"n": a, "m": b}) for a, b in pairs]


def _run_job(job: tuple[str, dict]) -> verify.Report:
    name, kwargs = job
    return verify.run(name, **kwargs)


def cmd_verify(args) -> int:
    jobs = _verify_jobs(args)
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_job, jobs))
    else:
        reports = [_run_job(j) for j in jobs]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {"theorem": args.theorem, "passed": passed, "runs": [r.to_json() for r in reports]}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [r.to_text() for r in reports]
        lines.append(f"{'PASS' if passed else 'FAIL'} {args.theorem}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_PASS if passed else EXIT_FALSIFIED


def _graph_crystal(args):
    t = args.target
    if t == "standard-sqrt":
        return crystals.standard_sqrt(_require(args.n, "--n")), lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
    if t == "standard-gl":
        return crystals.standard_gl(_require(args.n, "--n")), str
    if t == "trivial":
        return crystals.trivial(args.n or 1), lambda s: "∅"
    if t == "settab":
        sh = tableaux.Shape.skew(_parse_parts(_require(args.shape, "--shape")), _parse_parts(args.inner))
        return tableaux.settab_crystal(sh, _require(args.n, "--n")), lambda T: T.render()
    if t == "svwords":
        return svwords.universe(_require(args.n, "--n"), _require(args.m, "--m")), svwords.render_word
    if t == "decr":
        return hecke.decr_crystal(_perm_arg(args), _require(args.n, "--n"), args.m), repr
    raise UsageError(f"unknown target {t}")


def cmd_graph(args) -> int:
    if args.target == "rpd":
        m, n = _require(args.m, "--m"), _require(args.n, "--n")
        if args.format == "json":
            B = pipedreams.rpd_crystal(m, n)
            data = B.to_json(lambda D: D.render())
            for v in data["vertices"]:
                v["sigma_bar"] = str(pipedreams.sigma_bar(B.elements[v["id"]]))
            _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", args.out)
        else:
            _emit(pipedreams.rpd_dot(m, n), args.out)
        return EXIT_PASS
    B, render = _graph_crystal(args)
    if args.format == "json":
        _emit(json.dumps(B.to_json(render), indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(B.to_dot(render), args.out)
    return EXIT_PASS


COMMANDS = {"expand": cmd_expand, "verify": cmd_verify, "graph": cmd_graph}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, InvalidShapeError, SizeGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

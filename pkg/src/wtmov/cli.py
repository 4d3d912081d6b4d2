"""Command line interface: ``wtmov <command> ...``.

Exit codes: 0 ok, 1 usage, 2 unreadable input, 3 instance too large or
budget exhausted, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import analysis, generators
from .core import ParseError, apply_reversal, format_tournament, parse_tournament
from .experiment import TimeLimitExceeded, plot_data_csv, records_csv, run_grid
from .generators import rng_for
from .mov import mov
from .mov_splitcycle import dominating_set_reduction, read_graph
from .mov_wuc import read_set_system, set_cover_reduction
from .oracle import BudgetExhausted, GuardError, brute_force_mov
from .solutions import SOLUTION_NAMES, borda_scores, winners

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GUARD, EXIT_INVARIANT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class _Output:
    """Collects rows, renders as aligned text or CSV, writes to --out or stdout."""

    def __init__(self, args):
        self.fmt = args.format
        self.out = args.out
        self.rows: list[list] = []
        self.header: list[str] | None = None
        self.lines: list[str] = []

    def table(self, header, rows):
        self.header, self.rows = header, rows

    def text(self, line: str):
        self.lines.append(line)

    def render(self) -> str:
        if self.header is None:
            return "".join(l + "\n" for l in self.lines)
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue()
        cells = [self.header] + [[str(c) for c in r] for r in self.rows]
        widths = [max(len(str(r[i])) for r in cells) for i in range(len(self.header))]
        body = [" ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
        return "".join(l + "\n" for l in self.lines + body)

    def flush(self):
        data = self.render()
        if self.out:
            Path(self.out).write_text(data)
        else:
            sys.stdout.write(data)


def _read(path: str) -> str:
    try:
        return Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str):
    return parse_tournament(_read(path))


def _solutions(arg: str):
    if arg == "all":
        return list(SOLUTION_NAMES)
    if arg not in SOLUTION_NAMES:
        raise UsageError(f"unknown solution {arg!r}; choose from {', '.join(SOLUTION_NAMES)} or all")
    return [arg]


def cmd_generate(args) -> int:
    try:
        name, params = generators.parse_model(args.model)
    except ValueError as e:
        raise UsageError(str(e)) from None
    label = generators.model_label(name, params)
    texts = []
    for i in range(args.count):
        T = generators.generate(label, args.m, args.n, seed=args.seed, index=i)
        texts.append(format_tournament(T, [f"model={label} m={args.m} n={args.n} "
                                           f"seed={args.seed} index={i}"]))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(texts):
            (out / f"tournament_{i:04d}.txt").write_text(t)
    else:
        sys.stdout.write("".join(texts))
    return EXIT_OK


def cmd_solve(args) -> int:
    T = _load(args.file)
    names = T.names()
    out = _Output(args)
    sols = _solutions(args.solution)
    sets = {S: winners(T, S) for S in sols}
    scores = borda_scores(T)
    for S in sols:
        out.text(f"{S}: " + " ".join(names[x] for x in sorted(sets[S])))
    out.table(["alternative", "borda"] + sols,
              [[names[x], int(scores[x])] + [int(x in sets[S]) for S in sols] for x in range(T.m)])
    out.flush()
    return EXIT_OK


def _alternatives(T, alt):
    if alt is None:
        return list(range(T.m))
    try:
        return [T.index(alt)]
    except KeyError as e:
        raise UsageError(str(e.args[0])) from None


def cmd_mov(args) -> int:
    T = _load(args.file)
    names = T.names()
    rows = []
    for S in _solutions(args.solution):
        for x in _alternatives(T, args.alt):
            res = mov(T, x, S, method=args.method, oracle=args.oracle)
            T2 = apply_reversal(T, res.witness)
            if (x in winners(T2, S)) == (x in winners(T, S)):
                raise AssertionError(f"witness for {names[x]} under {S} does not flip membership")
            rows.append([S, names[x], res.value, res.witness.describe(names), res.solver, "verified"])
    out = _Output(args)
    out.table(["solution", "alternative", "mov", "witness", "solver", "check"], rows)
    out.flush()
    return EXIT_OK


def cmd_oracle(args) -> int:
    T = _load(args.file)
    names = T.names()
    rows = []
    for S in _solutions(args.solution):
        for x in _alternatives(T, args.alt):
            res = brute_force_mov(T, x, S)
            rows.append([S, names[x], res.value, res.witness.describe(names)])
    out = _Output(args)
    out.table(["solution", "alternative", "mov", "witness"], rows)
    out.flush()
    return EXIT_OK


def cmd_experiment(args) -> int:
    for model in args.models:
        try:
            generators.parse_model(model)
        except ValueError as e:
            raise UsageError(str(e)) from None
    sols = [s for a in args.solutions for s in _solutions(a)]
    done = []

    def write(records):
        data = records_csv(records)
        if args.out:
            Path(args.out).write_text(data)
            Path(args.out).with_suffix(".plot.csv").write_text(plot_data_csv(records))
        return data

    def progress(rows):
        done.extend(rows)
        if args.out:
            write(done)  # keep partial results on disk

    try:
        records = run_grid(args.models, args.m, args.n, args.count, sols, args.seed,
                           args.constructive_borda, args.time_limit, progress)
    except TimeLimitExceeded as e:
        write(e.records)
        print(f"time limit reached; wrote {len(e.records)} rows", file=sys.stderr)
        return EXIT_GUARD
    data = write(records)
    if not args.out:
        sys.stdout.write(data)
    return EXIT_OK


def cmd_props(args) -> int:
    sols = _solutions(args.solution)
    rows = []
    for S in sols:
        for prop in ("monotonicity", "transfer-monotonicity", "cover-consistency",
                     "degree-consistency"):
            viol = 0
            for i in range(args.trials):
                rng = rng_for(args.seed, i)
                T = generators.uniform_random(args.m, args.n, seed=rng)
                a, b, c = (int(v) for v in rng.choice(T.m, 3, replace=False))
                if prop == "monotonicity":
                    if T.w[a, b] == T.n:
                        continue
                    ok = analysis.check_monotonicity(S, T, a, b).holds
                elif prop == "transfer-monotonicity":
                    if T.w[b, c] == 0 or T.w[a, c] == T.n:
                        continue
                    ok = analysis.check_transfer_monotonicity(S, T, a, b, c).holds
                elif prop == "cover-consistency":
                    ok = analysis.check_cover_consistency(S, T).holds
                else:
                    ok = analysis.check_degree_consistency(S, T).strong
                viol += not ok
            rows.append([prop, S, args.trials, viol, f"m={args.m},n={args.n}"])
    out = _Output(args)
    out.fmt = "csv" if args.format is None else args.format
    out.table(["property", "solution", "trials", "violations", "scale"], rows)
    out.flush()
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.file)
    try:
        if args.kind == "dominating-set":
            r, edges = read_graph(text)
            T = dominating_set_reduction(r, edges)
            note = f"dominating-set reduction of a {r}-vertex graph with {len(edges)} edges; x = alternative 0"
        else:
            r, sets = read_set_system(text)
            T = set_cover_reduction(r, sets)
            note = f"set-cover reduction of a universe of {r} with {len(sets)} sets; x = alternative 0"
    except ValueError as e:
        raise ParseError(str(e)) from None
    out = _Output(args)
    out.text(format_tournament(T, [note]).rstrip("\n"))
    out.flush()
    return EXIT_OK


def cmd_bounds(args) -> int:
    rows = []
    for S in _solutions(args.solution):
        try:
            up, low = analysis.mov_bounds(S, args.n_voters, args.m_alts)
        except ValueError as e:
            raise UsageError(str(e)) from None
        rows.append([S, args.n_voters, args.m_alts, up, low])
    out = _Output(args)
    out.table(["solution", "n", "m", "destructive_upper", "constructive_lower"], rows)
    out.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--out", help="output path (file, or directory for generate)")
    common.add_argument("--format", choices=["text", "csv"], default=None,
                        help="output format (default text)")
    p = _Parser(prog="wtmov", description="Margin of victory for weighted tournaments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", parents=[common], help="sample random tournaments")
    g.add_argument("model", help="uniform | condorcet-direct:p=.. | condorcet-voters:p=.. | "
                                 "impartial | mallows:phi=.. | urn:alpha=..")
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g.add_argument("count", type=int)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", parents=[common], help="winning sets")
    s.add_argument("file")
    s.add_argument("solution", nargs="?", default="all")
    s.set_defaults(func=cmd_solve)

    mv = sub.add_parser("mov", parents=[common], help="margin of victory with witnesses")
    mv.add_argument("file")
    mv.add_argument("solution", nargs="?", default="all")
    mv.add_argument("alt", nargs="?", default=None)
    mv.add_argument("--oracle", action="store_true", help="answer every cell by brute force")
    mv.add_argument("--method", choices=["auto", "enumerate", "milp"], default="auto",
                    help="exact solver for constructive SC / wUC")
    mv.set_defaults(func=cmd_mov)

    o = sub.add_parser("oracle", parents=[common], help="brute-force MoV (small instances)")
    o.add_argument("file")
    o.add_argument("solution", nargs="?", default="all")
    o.add_argument("alt", nargs="?", default=None)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("experiment", parents=[common], help="randomized experiment grid")
    e.add_argument("--models", nargs="+", default=list(generators.MODELS))
    e.add_argument("--m", nargs="+", type=int, default=[5, 10, 20, 30])
    e.add_argument("--n", nargs="+", type=int, default=[10, 51])
    e.add_argument("--count", type=int, default=25)
    e.add_argument("--solutions", nargs="+", default=["all"])
    e.add_argument("--constructive-borda", action="store_true",
                   help="include constructive Borda MoV of non-winners")
    e.add_argument("--time-limit", type=float, default=None,
                   help="stop after this many seconds, keeping finished rows")
    e.set_defaults(func=cmd_experiment)

    pr = sub.add_parser("props", parents=[common], help="axiom checks on random tournaments")
    pr.add_argument("--solution", default="all")
    pr.add_argument("--trials", type=int, default=100)
    pr.add_argument("--m", type=int, default=4)
    pr.add_argument("--n", type=int, default=4)
    pr.set_defaults(func=cmd_props)

    r = sub.add_parser("reduce", parents=[common], help="hardness reductions as tournaments")
    r.add_argument("kind", choices=["dominating-set", "set-cover"])
    r.add_argument("file")
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("bounds", parents=[common], help="MoV bounds")
    b.add_argument("solution")
    b.add_argument("n_voters", type=int, metavar="n")
    b.add_argument("m_alts", type=int, metavar="m")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None and args.command != "props":
        args.format = "text"
    try:
        return args.func(args)
    except UsageError as e:
        print(f"wtmov: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as e:
        print(f"wtmov: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (GuardError, BudgetExhausted) as e:
        print(f"wtmov: {e}", file=sys.stderr)
        return EXIT_GUARD
    except AssertionError as e:
        print(f"wtmov: internal invariant failed: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as e:
        print(f"wtmov: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: solve, shannon, strategy, classify, export, corpus. Options may
also come from a flat ``key=value`` file given with ``--config``; explicit
flags win over the file, which wins over built-in defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .canonical import CanonicalKind, canonical_system
from .classify import DEFAULT_CAP, classify
from .corpus import random_corpus
from .errors import BudgetExceeded, CertificateViolation, HyptreeError, ParseError, StructureError
from .solver import default_budget, min_depth, shannon_profile
from .strategies import (
    ReducednessCertificate,
    find_d_complete_tree,
    halving_proper,
    k_system_tree,
    sequential_proper,
    to_proper_only,
)
from .subsystems import DEFAULT_K_CAP
from .table import InformationSystem, format_table, read_table, write_table
from .trees import QueryModel, depth, to_dot, verify_solves

EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_INTERNAL = 2, 3, 4, 5

STRATEGIES = ("sequential", "halving", "ksystem", "proper-only", "complete")


class UsageError(Exception):
    pass


# --- config ---------------------------------------------------------------------


def read_config(path: str) -> dict[str, str]:
    """Flat ``key=value`` lines; ``#`` starts a comment, dashes in keys become underscores."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(sub: argparse.ArgumentParser, config: dict[str, str]) -> None:
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, value in config.items():
        action = actions.get(key)
        if action is None or key in ("help", "config"):
            raise UsageError(f"unknown config key {key!r} for this command")
        if isinstance(action, argparse._StoreTrueAction):
            if value.lower() not in ("1", "0", "true", "false", "yes", "no"):
                raise UsageError(f"config key {key!r} expects a boolean")
            defaults[key] = value.lower() in ("1", "true", "yes")
        else:
            # argparse converts string defaults with the action's type
            defaults[key] = value
    sub.set_defaults(**defaults)


# --- parser ---------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="hyptree", description="Decision trees with attribute and hypothesis queries."
    )
    parser.add_argument("--version", action="version", version=f"hyptree {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group()
    group.add_argument("--system", help="canonical system u1..u7")
    group.add_argument("--table", help="CSV table with header element,<attr>,...")
    source.add_argument("--n", type=_positive, help="size parameter of the canonical system")
    source.add_argument("--attrs", help="comma-separated attribute names forming the problem (default: all)")
    source.add_argument("--config", help="flat key=value file of option defaults")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--budget", type=_positive, help="enumeration budget (default: $HYPTREE_BUDGET or 200000)")

    subs = {}
    p = commands.add_parser("solve", parents=[source, common], help="minimum depth per query model")
    p.add_argument("--model", default="all", help="m1..m5 or all")
    p.add_argument("--dot", action="store_true", help="emit the optimal tree as DOT (single model)")
    p.add_argument("--no-timing", action="store_true", help="write 0 for time_ms")
    subs["solve"] = p

    p = commands.add_parser("shannon", parents=[source, common], help="worst case over problems of each dimension")
    p.add_argument("--model", default="all", help="m1..m5 or all")
    p.add_argument("--dims", type=_positive, help="largest problem dimension (default: --n or all attributes)")
    p.add_argument("--threads", type=_positive, default=1)
    subs["shannon"] = p

    p = commands.add_parser("strategy", parents=[source, common], help="run a constructive strategy")
    p.add_argument("--kind", choices=STRATEGIES, required=True)
    p.add_argument("--r", type=_positive, help="reducedness parameter for halving and ksystem")
    p.add_argument("--d", type=_positive, help="depth for the complete-tree search")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="equation-system size cap for certificates")
    p.add_argument("--k-cap", type=_positive, default=DEFAULT_K_CAP)
    p.add_argument("--dot", action="store_true", help="emit the tree as DOT instead of the summary row")
    subs["strategy"] = p

    p = commands.add_parser("classify", parents=[source, common], help="finite-scale classification report")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.add_argument("--k-cap", type=_positive, default=DEFAULT_K_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    subs["classify"] = p

    p = commands.add_parser("export", parents=[source, common], help="export a table as CSV or an optimal tree as DOT")
    p.add_argument("--model", default="m5", help="model of the exported tree")
    p.add_argument("--dot", action="store_true")
    subs["export"] = p

    p = commands.add_parser("corpus", parents=[common], help="write seeded random tables")
    p.add_argument("--config", help="flat key=value file of option defaults")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_positive, default=10)
    p.add_argument("--n", type=_positive, default=3, help="attributes per table")
    p.add_argument("--size", type=_positive, default=6, help="maximum universe size")
    subs["corpus"] = p
    return parser, subs


# --- helpers --------------------------------------------------------------------


def _load(args) -> tuple[InformationSystem, str, int]:
    if args.table:
        system = read_table(args.table)
        return system, Path(args.table).stem, system.num_attributes
    if not args.system:
        raise UsageError("one of --system or --table is required")
    if args.n is None:
        raise UsageError("--system needs --n")
    kind = CanonicalKind.parse(args.system)
    return canonical_system(kind, args.n), str(kind), args.n


def _problem(system: InformationSystem, args):
    if not args.attrs:
        return system.problem()
    try:
        return system.problem([a.strip() for a in args.attrs.split(",") if a.strip()])
    except (KeyError, StructureError) as exc:
        raise UsageError(f"bad --attrs: {exc}") from exc


def _models(text: str) -> list[QueryModel]:
    if text.strip().lower() == "all":
        return list(QueryModel)
    return [QueryModel.parse(t) for t in text.split(",")]


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- commands -------------------------------------------------------------------


def cmd_solve(args) -> int:
    system, name, n = _load(args)
    problem = _problem(system, args)
    models = _models(args.model)
    if args.dot:
        if len(models) != 1:
            raise UsageError("--dot needs a single --model")
        result = min_depth(system, problem, models[0], extract=True)
        _emit(args, to_dot(result.tree))
        return 0
    rows = []
    for model in models:
        result = min_depth(system, problem, model)
        ms = 0 if args.no_timing else f"{result.stats.time_ms:.3f}"
        rows.append([name, n, str(model), result.depth, result.stats.nodes, result.stats.memo_hits, ms])
    _emit(args, _csv(["system", "n", "model", "depth", "nodes", "memo_hits", "time_ms"], rows))
    return 0


def cmd_shannon(args) -> int:
    system, name, n = _load(args)
    pool = list(_problem(system, args).indices)
    dims = args.dims or min(n, len(pool))
    budget = args.budget or default_budget()
    rows = []
    status = 0
    # largest dimension whose cumulative problem count fits the budget
    total, feasible = 0, 0
    for k in range(1, dims + 1):
        total += math.comb(len(pool), k)
        if total > budget:
            break
        feasible = k
    for model in _models(args.model):
        profile = shannon_profile(system, model, feasible, pool, budget, args.threads) if feasible else []
        for row in profile:
            rows.append([name, row.n, str(model), row.depth, ";".join(system.names[a] for a in row.argmax)])
        for k in range(feasible + 1, dims + 1):
            rows.append([name, k, str(model), "budget-exceeded", ""])
            status = EXIT_BUDGET
    _emit(args, _csv(["system", "n", "model", "depth", "argmax"], rows))
    if status:
        print(f"error: budget {budget} too small beyond dimension {feasible}", file=sys.stderr)
    return status


def cmd_strategy(args) -> int:
    system, name, n = _load(args)
    problem = _problem(system, args)
    kind = args.kind
    if kind == "sequential":
        tree, bound, model = sequential_proper(system, problem), problem.dim, QueryModel.M4
    elif kind == "halving":
        if args.r is None:
            raise UsageError("halving needs --r")
        result = halving_proper(system, problem, ReducednessCertificate(args.r, cap=args.cap))
        # the guarantee is strict: depth < r * I * ln(4n)
        tree, bound, model = result.tree, math.ceil(result.bound) - 1, QueryModel.M4
    elif kind == "ksystem":
        if args.r is None:
            raise UsageError("ksystem needs --r")
        result = k_system_tree(system, problem, ReducednessCertificate(args.r, cap=args.cap), args.k_cap)
        tree, bound, model = result.tree, result.bound, QueryModel.M5
    elif kind == "proper-only":
        optimal = min_depth(system, problem, QueryModel.M5, extract=True)
        tree, bound, model = to_proper_only(system, problem, optimal.tree), 2**optimal.depth - 1, QueryModel.M4
    else:
        if args.d is None:
            raise UsageError("complete needs --d")
        found = find_d_complete_tree(system, problem.indices, args.d)
        text = _csv(
            ["strategy", "system", "n", "d", "found", "attributes"],
            [[kind, name, n, args.d, int(found is not None),
              ";".join(system.names[a] for a in sorted(found.attributes())) if found else ""]],
        )
        _emit(args, text)
        return 0
    verified = verify_solves(system, problem, tree, model)
    if not verified or depth(tree) > bound:
        raise CertificateViolation(f"{kind} produced a tree of depth {depth(tree)} (bound {bound}, verified {verified})")
    if args.dot:
        _emit(args, to_dot(tree))
    else:
        _emit(args, _csv(["strategy", "system", "n", "depth", "bound", "verified"],
                         [[kind, name, n, depth(tree), bound, int(verified)]]))
    return 0


def cmd_classify(args) -> int:
    system, name, _ = _load(args)
    if args.attrs:
        raise UsageError("classify works on whole systems; --attrs is not accepted")
    report = classify(system, name, args.cap, args.k_cap)
    _emit(args, report.to_json() if args.format == "json" else report.summary())
    return 0


def cmd_export(args) -> int:
    system, _, _ = _load(args)
    if not args.dot:
        _emit(args, format_table(system))
        return 0
    models = _models(args.model)
    if len(models) != 1:
        raise UsageError("export needs a single --model")
    result = min_depth(system, _problem(system, args), models[0], extract=True)
    _emit(args, to_dot(result.tree))
    return 0


def cmd_corpus(args) -> int:
    out = Path(args.out or "corpus")
    out.mkdir(parents=True, exist_ok=True)
    lines = []
    for k, table in enumerate(random_corpus(args.seed, args.count, (args.n, args.n), (1, args.size))):
        path = out / f"table_{k:04d}.csv"
        write_table(table, path)
        lines.append(str(path))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "shannon": cmd_shannon,
    "strategy": cmd_strategy,
    "classify": cmd_classify,
    "export": cmd_export,
    "corpus": cmd_corpus,
}


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser, subs = build_parser()
    try:
        pre = argparse.ArgumentParser(add_help=False)
        pre.add_argument("command", nargs="?")
        pre.add_argument("--config")
        known, _ = pre.parse_known_args(argv)
        if known.config and known.command in subs:
            _apply_config(subs[known.command], read_config(known.config))
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StructureError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HyptreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

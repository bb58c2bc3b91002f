"""``mdk``: matrix tables, word checks, K-theory reports and the verification suites.

Exit status is 0 when everything requested passes, 1 when a check fails
and 2 for usage, parse and resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import dyck, render
from .ktheory import a_matrix, ktheory_report, limit_profile
from .lambda_graph import build_cantor_horizon
from .markov import MatrixParseError, TransitionMatrix, resolve_matrix
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    matrix: str = "fibonacci"
    max_level: int = 8
    min_level: int = 0
    format: str = "pretty"
    out: str | None = None
    verbose: bool = False

    def __post_init__(self):
        if self.max_level < 1:
            raise UsageError("--max-level must be at least 1")
        if not 0 <= self.min_level <= self.max_level:
            raise UsageError("--min-level must lie between 0 and --max-level")
        if self.format not in render.FORMATS:
            raise UsageError(f"--format must be one of {', '.join(render.FORMATS)}")

    def load_matrix(self) -> TransitionMatrix:
        return resolve_matrix(self.matrix)


def cmd_matrices(config: CliConfig) -> tuple[str, int]:
    """``M_{l,l+1}``, ``I_{l,l+1}`` and ``A_{l+1,l}`` for each requested level."""
    A = config.load_matrix()
    system = build_cantor_horizon(A, config.max_level + 1)
    levels = range(config.min_level, config.max_level + 1)
    if config.format == "json":
        doc = {
            "matrix": config.matrix,
            "levels": [
                {
                    "l": l,
                    "M": render.to_json_value(system.symbolic_matrix(l)),
                    "I": render.to_json_value(system.i_matrix(l)),
                    "A": render.to_json_value(a_matrix(system, l)),
                }
                for l in levels
            ],
        }
        return json.dumps(doc, indent=2), EXIT_OK
    draw = render.latex if config.format == "latex" else render.pretty
    blocks = []
    for l in levels:
        if config.format == "latex":
            names = (f"{{\\cal M}}_{{{l},{l + 1}}}", f"I_{{{l},{l + 1}}}", f"{{\\Bbb A}}_{{{l + 1},{l}}}")
        else:
            names = (f"M_{l},{l + 1}", f"I_{l},{l + 1}", f"A_{l + 1},{l} = M^t - I^t")
        blocks.append(draw(system.symbolic_matrix(l), names[0]))
        blocks.append(draw(system.i_matrix(l), names[1]))
        blocks.append(draw(a_matrix(system, l), names[2]))
    return "\n\n".join(blocks), EXIT_OK


def cmd_check_word(config: CliConfig, word: str, oracle: bool = False) -> tuple[str, int]:
    A = config.load_matrix()
    try:
        w = dyck.parse_word(word)
        form = dyck.reduce(A, w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = not form.is_zero
    cross = dyck.oracle_is_admissible(A, w) if oracle else None
    status = EXIT_OK if cross is None or cross == verdict else EXIT_FAIL
    if config.format == "json":
        doc = {"word": dyck.format_word(w), "admissible": verdict, "reduced": str(form)}
        if oracle:
            doc["oracle"] = cross
        return json.dumps(doc, indent=2), status
    text = f"{'admissible' if verdict else 'forbidden'}: {form}"
    if oracle:
        text += f"\noracle: {'admissible' if cross else 'forbidden'}"
        if cross != verdict:
            text += " (disagrees with the reducer)"
    return text, status


def cmd_ktheory(config: CliConfig) -> tuple[str, int]:
    A = config.load_matrix()
    report = ktheory_report(A, config.max_level, name=config.matrix)
    status = EXIT_OK if report.ok else EXIT_FAIL
    if config.format == "json":
        return report.to_json(), status
    prof = limit_profile(report)
    lines = [f"matrix {report.matrix}", " l      m  K_0                      K_1  checks"]
    for lv in report.levels:
        failed = [k for k, ok in lv.checks.items() if not ok]
        lines.append(
            f"{lv.l:2d} {lv.m:6d}  {str(lv.k0):24s} {lv.k1_rank:3d}  "
            + ("ok" if not failed else "FAILED " + ", ".join(failed))
        )
        if lv.v is not None and config.verbose:
            lines.append(f"          v = {lv.v}")
    if report.g:
        lines.append(f"g = {report.g}")
    lines.append(f"strict rank growth: {prof['strict_rank_growth']}")
    return "\n".join(lines), status


def cmd_verify_paper(config: CliConfig, suite: str) -> tuple[str, int]:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    progress = None
    if config.verbose:
        progress = lambda r: print(  # noqa: E731
            f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.1f}s)", file=sys.stderr
        )
    result = run_suite(suite, progress)
    if config.format == "json":
        return json.dumps(result.to_dict(), indent=2), result.exit_status
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in result.results]
    n_ok = sum(r.passed for r in result.results)
    lines.append(f"{n_ok}/{len(result.results)} checks passed")
    return "\n".join(lines), result.exit_status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", default="fibonacci", help="fibonacci, full:N or a matrix file")
    common.add_argument("--max-level", type=int, default=8)
    common.add_argument("--format", default="pretty", choices=render.FORMATS)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="mdk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("matrices", parents=[common], help="print M, I and A level by level")
    p.add_argument("--min-level", type=int, default=0)
    p = sub.add_parser("check-word", parents=[common], help="decide admissibility of a word")
    p.add_argument("word", help='symbols such as "a1 b2 b1"; "(i" and ")i" also work')
    p.add_argument("--oracle", action="store_true", help="cross-check with the path oracle")
    sub.add_parser("ktheory", parents=[common], help="K_0 / K_1 report by level")
    p = sub.add_parser("verify-paper", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="fibonacci")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = CliConfig(
            matrix=args.matrix,
            max_level=args.max_level,
            min_level=getattr(args, "min_level", 0),
            format=args.format,
            out=args.out,
            verbose=args.verbose,
        )
        if args.command == "matrices":
            text, status = cmd_matrices(config)
        elif args.command == "check-word":
            text, status = cmd_check_word(config, args.word, args.oracle)
        elif args.command == "ktheory":
            text, status = cmd_ktheory(config)
        else:
            text, status = cmd_verify_paper(config, args.suite)
    except (UsageError, MatrixParseError, OSError) as exc:
        print(f"mdk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError as exc:
        print(f"mdk: error: {exc}; try a smaller --max-level", file=sys.stderr)
        return EXIT_USAGE
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

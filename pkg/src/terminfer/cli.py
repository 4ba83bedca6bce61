"""Command line front end.

    terminfer [-p FILE] [-t MS] [-n N] [--dump-...] SOURCE

Report on standard output, diagnostics on standard error.  Exit codes:
0 analyzed, 1 frontend or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .budget import DEFAULT_TIMEOUT_MS, AnalysisParams
from .parser import FrontendError
from .report import dump_sections, run_pipeline


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="terminfer",
        description="Infer groundness conditions sufficient for universal "
                    "left-termination of a logic program.")
    ap.add_argument("source", help="program to analyze")
    ap.add_argument("-p", metavar="FILE", dest="table_path", default=None,
                    help="import builtin predicate abstractions from FILE")
    ap.add_argument("-t", metavar="MS", dest="timeout_ms", type=int,
                    default=DEFAULT_TIMEOUT_MS,
                    help="per-stage, per-component budget in milliseconds, "
                         "mapped onto deterministic fuel (default %(default)s)")
    ap.add_argument("-n", metavar="N", dest="widen_delay", type=int, default=1,
                    help="plain fixpoint iterations before widening "
                         "(default %(default)s)")
    ap.add_argument("--sentences", action="store_true",
                    help="append a human-readable groundness sentence per line")
    for flag in ("sccs", "clp-n", "num-model", "level-mappings",
                 "bool-model", "pre"):
        ap.add_argument("--dump-%s" % flag, action="store_true",
                        dest="dump_%s" % flag.replace("-", "_"))
    return ap


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    params = AnalysisParams.from_timeout_ms(args.timeout_ms,
                                            widen_delay=args.widen_delay)
    try:
        result = run_pipeline(path=args.source, params=params,
                              table_path=args.table_path)
    except FrontendError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1

    dumps = dump_sections(result, args)
    if dumps:
        sys.stdout.write(dumps)
    sys.stdout.write(result.report.render(sentences=args.sentences))
    for d in result.diagnostics:
        print(d.render(), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

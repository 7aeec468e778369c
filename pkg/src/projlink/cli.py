"""projlink command line.

Reports go to stdout as TSV, a one-line PASS/FAIL/SKIP summary to stderr.
Exit status: 0 pass (or skip), 1 a result contradicting the expected one,
2 errors (budget, parse, catalog).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .campaigns import (CampaignError, Report, cmd_check, cmd_embed_enumerate, cmd_link_conditions, cmd_search_16,
                        cmd_verify_archdeacon, cmd_verify_c11, cmd_verify_deltay_table, cmd_verify_petersen_closure)
from .catalog import Catalog
from .embedding import BudgetExceeded, EmbeddingError
from .graph import GraphError
from .minors import DEFAULT_BUDGET, CatalogInvalid, CatalogMissing, MinorSearchExhausted


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="projlink", description="Minor, embedding and link-condition campaigns.")
    ap.add_argument("--version", action="version", version=f"projlink {__version__}")
    ap.add_argument("--catalog", default=None, help="catalog directory (default ./data, else the checkout's data)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seedless", action="store_true", help="reserved; nothing is random, so it is rejected")
    sub = ap.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify")
    v.add_argument("what", choices=("petersen-closure", "deltay-table", "c11", "archdeacon"))
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    s = sub.add_parser("search")
    s.add_argument("what", choices=("sixteen",))
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--out", default=None, help="also write the report here")

    c = sub.add_parser("check")
    c.add_argument("file")
    c.add_argument("query", choices=("minor", "planar", "projective-planar", "outerplanar"))
    c.add_argument("pattern", nargs="?", help="K5, K33, K44-e, ... or an .el file (minor only)")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    lc = sub.add_parser("link-conditions")
    lc.add_argument("file")

    e = sub.add_parser("embed")
    e.add_argument("what", choices=("enumerate",))
    e.add_argument("file")
    e.add_argument("--max", type=int, default=None)
    return ap


def run(args) -> Report:
    if args.cmd == "verify":
        if args.what == "deltay-table":
            return cmd_verify_deltay_table(args.budget)
        cat = Catalog.open(args.catalog)
        if args.what == "petersen-closure":
            return cmd_verify_petersen_closure(cat)
        if args.what == "c11":
            return cmd_verify_c11(cat)
        return cmd_verify_archdeacon(cat, args.budget)
    if args.cmd == "search":
        rep = cmd_search_16(Catalog.open(args.catalog), args.budget, args.workers)
        if args.out:
            Path(args.out).write_text(rep.render())
        return rep
    if args.cmd == "check":
        if args.query == "minor" and not args.pattern:
            raise CampaignError("check ... minor needs a PATTERN")
        cat = Catalog.open(args.catalog) if args.query == "projective-planar" else None
        return cmd_check(args.file, args.query, args.pattern, cat, args.budget)
    if args.cmd == "link-conditions":
        return cmd_link_conditions(args.file)
    return cmd_embed_enumerate(args.file, args.max)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.seedless:
        ap.error("--seedless is reserved: no command uses randomness")
    if args.workers < 1:
        ap.error("--workers must be at least 1")
    try:
        rep = run(args)
    except (CampaignError, CatalogMissing, CatalogInvalid, GraphError, EmbeddingError, MinorSearchExhausted,
            BudgetExceeded) as exc:
        print(f"ERROR {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render())
    line = f"{rep.verdict} {rep.command}"
    if rep.summary:
        line += f": {rep.summary}"
    print(line, file=sys.stderr)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""
Verification commands: a single bijection check (verify) and the full sweep
over the acceptance configurations (sweep)
"""

import json
import logging
import time

from chung_graham.analysis.oracle import verify_bijection
from chung_graham.cli.output import fail
from chung_graham.core.config import ACCEPTANCE_CONFIGURATIONS, EXIT_CODES
from chung_graham.core.rule import params
from chung_graham.reports.generator import (
    SweepResult,
    bijection_report_to_dict,
    write_json_report,
    write_sweep_report,
)

logger = logging.getLogger(__name__)


def cmd_verify(args) -> int:
    params(args.d)
    report = verify_bijection(args.max_order, args.d, workers=args.workers)
    print(json.dumps(bijection_report_to_dict(report), sort_keys=True))

    if args.report:
        write_json_report(report, args.report)

    if not report.ok:
        fail(f"bijection check failed for d={args.d}, L={args.max_order}")
        return EXIT_CODES["domain"]
    return EXIT_CODES["ok"]


def run_sweep(configurations, workers: int = 1):
    """Run verify_bijection for each configuration and time it"""
    results = []
    for step, config in enumerate(configurations, start=1):
        logger.debug("sweep step %d/%d: d=%d L=%d", step, len(configurations), config["d"], config["max_order"])
        started = time.perf_counter()
        report = verify_bijection(config["max_order"], config["d"], workers=workers)
        results.append(SweepResult(report=report, elapsed_seconds=time.perf_counter() - started))
    return results


def cmd_sweep(args) -> int:
    print("=" * 72)
    print("CHUNG-GRAHAM NUMERATION: EXHAUSTIVE BIJECTION SWEEP")
    print("=" * 72)

    results = run_sweep(ACCEPTANCE_CONFIGURATIONS, workers=args.workers)

    for result in results:
        report = result.report
        status = "✓" if report.ok else "❌"
        print(
            f"  {status} d={report.d:<3} L={report.max_order:<3} "
            f"{report.count:>9,} strings  ({result.elapsed_seconds:.2f} s)"
        )

    if args.report:
        write_sweep_report(results, args.report)
        print(f"\n📄 Report: {args.report}")

    failed = [result.report for result in results if not result.report.ok]
    if failed:
        fail(f"{len(failed)} of {len(results)} configurations failed")
        return EXIT_CODES["domain"]
    print("\n✓ All configurations passed")
    return EXIT_CODES["ok"]


def register(subparsers, common, interval) -> None:
    """Add the verify and sweep subcommands"""
    parser = subparsers.add_parser(
        "verify", parents=[interval], help="Exhaustively check the bijection for strings of order <= L"
    )
    parser.add_argument("max_order", metavar="L", type=int, help="Largest order to enumerate")
    parser.add_argument("--workers", type=int, default=1, help="Processes for the enumeration (default: 1)")
    parser.add_argument("--report", default=None, help="Also write the JSON report to this path")
    parser.add_argument("--json", action="store_true", help="Accepted for symmetry; output is always JSON")
    parser.set_defaults(handler=cmd_verify)

    parser = subparsers.add_parser("sweep", help="Run the bijection check on every standard configuration")
    parser.add_argument("--workers", type=int, default=1, help="Processes for the enumeration (default: 1)")
    parser.add_argument("--report", default=None, help="Write a markdown report to this path")
    parser.set_defaults(handler=cmd_sweep)

"""
Report generation functionality
Creates JSON and markdown reports for bijection checks and tables of the base sequence
"""

import json
import logging
from dataclasses import dataclass
from datetime import datetime
from typing import Dict, List, Optional

import pandas as pd

from chung_graham import __version__
from chung_graham.analysis.oracle import BijectionReport
from chung_graham.core.rule import params
from chung_graham.core.sequences import base_term, fibonacci, lucas_k

logger = logging.getLogger(__name__)


@dataclass
class SweepResult:
    """One configuration of a sweep together with its wall-clock time"""

    report: BijectionReport
    elapsed_seconds: float


def bijection_report_to_dict(report: BijectionReport) -> Dict:
    """
    Convert a bijection report to a JSON-ready dictionary

    Args:
        report: Result of verify_bijection

    Returns:
        Dictionary with stable keys; json.dumps(..., sort_keys=True) of it
        round-trips through json.loads unchanged
    """
    return {
        "d": report.d,
        "max_order": report.max_order,
        "count": report.count,
        "expected": report.expected,
        "min_value": report.min_value,
        "max_value": report.max_value,
        "duplicates": list(report.duplicates),
        "missing": list(report.missing),
        "lex_order_ok": report.lex_order_ok,
        "encode_mismatches": list(report.encode_mismatches),
        "successor_mismatches": list(report.successor_mismatches),
        "ok": report.ok,
    }


def write_json_report(report: BijectionReport, path: str) -> str:
    """Write a bijection report as JSON and return the path"""
    with open(path, "w", encoding="utf-8") as f:
        json.dump(bijection_report_to_dict(report), f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info("bijection report saved to %s", path)
    return path


def sequence_table(d: int, k_max: int) -> pd.DataFrame:
    """
    Tabulate k, H_k, K_k and F_k for k = 1..k_max

    Columns hold Python ints (object dtype) so large terms stay exact.

    Args:
        d: Even interval of the base sequence
        k_max: Last row index

    Returns:
        DataFrame with columns k, H_k, K_k, F_k
    """
    params(d)
    if k_max < 1:
        raise ValueError(f"table needs at least one row, got k_max={k_max}")

    rows = [
        {"k": k, "H_k": base_term(d, k), "K_k": lucas_k(k), "F_k": fibonacci(k)}
        for k in range(1, k_max + 1)
    ]
    return pd.DataFrame(rows, columns=["k", "H_k", "K_k", "F_k"], dtype=object)


def render_sweep_report(results: List[SweepResult], generated_at: Optional[datetime] = None) -> str:
    """
    Render a markdown report for a sweep over several (d, L) configurations

    Args:
        results: One entry per configuration, in run order
        generated_at: Timestamp for the footer (defaults to now)

    Returns:
        Markdown document
    """
    if generated_at is None:
        generated_at = datetime.now()

    passed = sum(1 for result in results if result.report.ok)

    report_md = f"""# Chung-Graham Numeration Verification Report
## Exhaustive bijection checks at desk scale

---

## Summary

- **Configurations checked:** {len(results)}
- **Passed:** {passed}
- **Failed:** {len(results) - passed}

Each configuration enumerates every digit string of order at most L that
satisfies the rule of expansion for interval d, and checks that the strings
decode to exactly 0, 1, ..., H_(L+1) - 1, in lexicographic order, that the
greedy encoder reproduces each string, and that the successor operator steps
through the list.

---

## Results

| d | A | B | L | Strings | Expected | Lex order | Encode mismatches | Successor mismatches | Time (s) | Status |
|---|---|---|---|---------|----------|-----------|-------------------|----------------------|----------|--------|
"""
    for result in results:
        report = result.report
        p = params(report.d)
        report_md += (
            f"| {report.d} | {p.A} | {p.B} | {report.max_order} | {report.count:,} | {report.expected:,} | "
            f"{'yes' if report.lex_order_ok else 'no'} | {len(report.encode_mismatches)} | "
            f"{len(report.successor_mismatches)} | {result.elapsed_seconds:.2f} | "
            f"{'ok' if report.ok else 'FAILED'} |\n"
        )

    failures = [result.report for result in results if not result.report.ok]
    if failures:
        report_md += "\n---\n\n## Failures\n"
        for report in failures:
            report_md += f"""
### d={report.d}, L={report.max_order}
- **Duplicate values:** {report.duplicates or "none"}
- **Missing values:** {report.missing or "none"}
- **Encode mismatches:** {report.encode_mismatches or "none"}
- **Successor mismatches:** {report.successor_mismatches or "none"}
"""

    report_md += f"""
---

## Report Generated
**Date:** {generated_at.strftime("%Y-%m-%d %H:%M:%S")}
**Software:** chung-graham v{__version__}
"""
    return report_md


def write_sweep_report(results: List[SweepResult], path: str) -> str:
    """Render a sweep report to a markdown file and return the path"""
    with open(path, "w", encoding="utf-8") as f:
        f.write(render_sweep_report(results))
    logger.info("sweep report saved to %s", path)
    return path

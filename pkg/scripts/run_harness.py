#!/usr/bin/env python3
"""Sweep every registered implication over the generated corpus and report.

Typical runs:
    python3 scripts/run_harness.py --degree 1
    python3 scripts/run_harness.py --degree 2 --threads 4 --json harness_d2.json
"""

import argparse
import sys
import time

from amalgam.theorems import CorpusConfig, run_harness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=1, help="polynomial degree bound (default 1)")
    ap.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    ap.add_argument("--max-amalgam-size", type=int, default=64, help="largest amalgamation to build")
    ap.add_argument("--json", metavar="PATH", default=None, help="write the machine-readable report here")
    args = ap.parse_args()

    config = CorpusConfig(max_amalgam_size=args.max_amalgam_size)
    started = time.perf_counter()
    report = run_harness(config, degree=args.degree, workers=max(1, args.threads))
    elapsed = time.perf_counter() - started

    print(f"{report.scenario_count} scenarios over {len(report.ring_names)} corpus rings, degree {args.degree}")
    for s in report.summaries:
        flag = ""
        if s.hard_violations:
            flag = f"  HARD VIOLATIONS: {len(s.hard_violations)}"
        elif s.violation_candidates:
            flag = f"  candidates: {len(s.violation_candidates)}"
        elif s.vacuous_corpus_wide:
            flag = "  vacuous corpus-wide"
        print(f"  {s.clause_id:10s} applicable {s.hypothesis_satisfied:5d}  passed {s.passed:5d}{flag}")
    print(f"done in {elapsed:.1f}s: hard={report.hard_violation_count} candidates={report.candidate_count} skipped={report.skipped_count}")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
        print(f"report written to {args.json}")

    return 0 if report.hard_violation_count == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Hunt for a ring that keeps zero products coefficientwise-nilpotent while
some nilpotent-coefficient product escapes: weak-armendariz holds, nil fails.

Every candidate where the nil-style check refutes is printed with its weak
verdict, so a near-miss log accumulates even when the hunt comes up empty.

    python3 scripts/hunt_weak_not_nil.py --degree 2 --max-size 16
"""

import argparse
import sys

from amalgam.properties import PropertyKind, Verdict, get_report
from amalgam.theorems import CorpusConfig, build_scenarios


def candidates(max_size: int):
    config = CorpusConfig(max_amalgam_size=min(64, max(2, max_size)))
    corpus, scenarios = build_scenarios(config)
    seen = set()
    for name, ring in corpus:
        if ring.size <= max_size and ring.digest() not in seen:
            seen.add(ring.digest())
            yield name, ring
    for sc in scenarios:
        ring = sc.am.ring
        if ring.size <= max_size and ring.digest() not in seen:
            seen.add(ring.digest())
            yield sc.key, ring


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=2, help="polynomial degree bound (default 2)")
    ap.add_argument("--max-size", type=int, default=16, help="largest ring to scan (default 16)")
    args = ap.parse_args()

    examined = 0
    near_misses = 0
    for name, ring in candidates(args.max_size):
        examined += 1
        nil_report = get_report(ring, PropertyKind.NIL_ARMENDARIZ, args.degree)
        if nil_report.verdict is not Verdict.REFUTED:
            continue
        weak_report = get_report(ring, PropertyKind.WEAK_ARMENDARIZ, args.degree)
        marker = "  <-- SEPARATES" if weak_report.verdict is not Verdict.REFUTED else ""
        print(f"nil refuted on {name} (size {ring.size}): weak {weak_report.verdict.value}{marker}")
        if weak_report.verdict is not Verdict.REFUTED:
            w = nil_report.witness
            print(f"  witness f={list(w.f_coeffs)} g={list(w.g_coeffs)} pair ({w.i},{w.j}) -> {ring.label(w.product)}")
            return 0
        near_misses += 1

    print(f"no separating example within size {args.max_size} at degree {args.degree} "
          f"({examined} rings examined, {near_misses} nil refutations, all also weak refutations)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

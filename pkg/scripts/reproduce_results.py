#!/usr/bin/env python3
"""Run every end-to-end check and print one status line per check.

This is the one-shot reproduction driver: it exercises the vanishing
classifications, the Euler-characteristic cross-validation, the certified
compatibility tables, the three exhaustive enumerations, the mutation
chains, the within-family chain laws, the augmentation lifts, and the
conic Diophantine solver, then exits 0 only if everything passes.

Usage::

    python3 scripts/reproduce_results.py
    python3 scripts/reproduce_results.py --window 20 --param-range 4
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from blowup_collections.verify import (
    VERIFY_TOKENS,
    check_augmentation,
    check_chi_agreement,
    run_check,
)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--window", type=int, default=None,
        help="override the scan window of every windowed check",
    )
    parser.add_argument(
        "--param-range", type=int, default=None,
        help="override the parameter range of the relations check",
    )
    args = parser.parse_args(argv)

    results = []
    started = time.perf_counter()
    for token in VERIFY_TOKENS:
        check_start = time.perf_counter()
        result = run_check(token, args.window, args.param_range)
        elapsed = time.perf_counter() - check_start
        results.append((token, result, elapsed))
    for extra in (
        lambda: check_chi_agreement(args.window if args.window else 30),
        check_augmentation,
    ):
        check_start = time.perf_counter()
        result = extra()
        results.append((result.name, result, time.perf_counter() - check_start))
    total = time.perf_counter() - started

    failures = 0
    for token, result, elapsed in results:
        print(f"{result.status_line()}  ({token}, {elapsed:.2f}s)")
        if not result.ok:
            failures += 1
            for line in result.details:
                print(f"  {line}")
    print(
        f"{len(results) - failures}/{len(results)} checks passed "
        f"in {total:.2f}s"
    )
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

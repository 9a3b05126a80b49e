#!/usr/bin/env python3
"""Run the full symbolic identity grid and write the reports to JSON.

Grid: every identity (the normalised U-turn q-weighting included as its own
variant) over n in {1, 2} with |mu| <= 4 and n = 3 with |mu| <= 2.  Exit
status is 0 only if every case verifies.

Usage: python scripts/run_identity_sweeps.py [--out reports/identity_sweeps.json]
"""

import argparse
import json
import os
import sys
import time

from symptok.identities import verify_sweep

GRID = [
    ("PROP_T", {}),
    ("COR_Q", {}),
    ("THM_ST", {}),
    ("COR_UASM", {}),
    ("COR_GT", {}),
    ("COR_ST_Q", {}),
    ("COR_UASM_Q", {"cpm_q_scheme": "plain"}),
    ("COR_UASM_Q", {"cpm_q_scheme": "norm", "c0_mode": "full"}),
    ("COR_GT_Q", {}),
    ("COR_GT_QX", {}),
]
RANKS = [(1, 4), (2, 4), (3, 2)]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="reports/identity_sweeps.json")
    parser.add_argument("--workers",
                        default=int(os.environ.get("SYMPTOK_THREADS", "1")),
                        type=int)
    parser.add_argument("--no-timing", action="store_true")
    args = parser.parse_args()

    t0 = time.perf_counter()
    docs = []
    failures = 0
    for identity, knobs in GRID:
        for n, max_weight in RANKS:
            reports = verify_sweep(identity, n, max_weight,
                                   workers=args.workers, **knobs)
            for r in reports:
                docs.append(r.to_json_dict(include_timing=not args.no_timing))
            bad = [r for r in reports if not r.equal]
            failures += len(bad)
            label = identity + (f"[{knobs}]" if knobs else "")
            status = "ok" if not bad else f"{len(bad)} FAILED"
            print(f"{label:<42} n={n} |mu|<={max_weight}: "
                  f"{len(reports)} cases {status}")
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(docs, fh, indent=2)
    print(f"\n{len(docs)} reports -> {args.out} "
          f"({time.perf_counter() - t0:.1f}s)")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

"""Run the verification grid and write JSON and CSV reports.

    python3 scripts/run_verification.py --out results/ [--config cfg.json]
"""

import argparse
import json
import sys
import time
from pathlib import Path

from twistcond.oracle import VerifyConfig, verify_grid


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", type=Path)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    config = VerifyConfig.from_json(json.loads(args.config.read_text())) if args.config else VerifyConfig()
    start = time.perf_counter()
    report = verify_grid(config)
    elapsed = time.perf_counter() - start

    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "verification.json").write_text(
        json.dumps({"config": config.to_json(), **report.to_json()}, indent=2) + "\n"
    )
    (args.out / "verification.csv").write_text(report.to_csv())
    for line in report.lines():
        print(line)
    print(f"ok={report.ok} in {elapsed:.1f}s; reports in {args.out}/")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())

import argparse
import os
import sys
from pathlib import Path

# Add parent directory to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from spherical_arcs.config import configure_logging
from spherical_arcs.workers.sweeps import SWEEPS


def run(names, csv_dir):
    print("--- Acceptance Sweeps ---")
    failed = False

    for name in names:
        print(f"\nRunning sweep: {name}")
        result = SWEEPS[name]()
        if result["status"] != "completed":
            print(f"Sweep '{name}' crashed: {result['error']}: {result['message']}")
            failed = True
            continue

        rows = result["rows"]
        print(f"{len(rows)} cases, {result['failures']} failures")
        if result["failures"]:
            failed = True
            print(rows[~rows["ok"]].head(20).to_string(index=False))
        if csv_dir:
            path = Path(csv_dir) / f"{name}.csv"
            rows.to_csv(path, index=False)
            print(f"Wrote {path}")

    return 1 if failed else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Run the combinatorial acceptance sweeps.")
    parser.add_argument("sweeps", nargs="*", help=f"any of: {', '.join(SWEEPS)} (default: all)")
    parser.add_argument("--csv-dir", default=None, help="write one CSV table per sweep here")
    parser.add_argument("--log-level", default="INFO")
    args = parser.parse_args()

    unknown = [name for name in args.sweeps if name not in SWEEPS]
    if unknown:
        parser.error(f"unknown sweeps: {', '.join(unknown)}")

    configure_logging(args.log_level)
    if args.csv_dir:
        Path(args.csv_dir).mkdir(parents=True, exist_ok=True)
    sys.exit(run(args.sweeps or list(SWEEPS), args.csv_dir))

"""Run a job manifest twice and compare the JSON result documents byte for byte.

    python3 scripts/determinism_check.py [jobs/manifest.txt] [--seed N]
"""
import argparse
import sys
from pathlib import Path

from singcycles.cli.jobs import load_manifest
from singcycles.cli.main import dumps, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("manifest", nargs="?",
                    default=str(Path(__file__).resolve().parent.parent / "jobs" / "manifest.txt"))
    ap.add_argument("--seed", type=int)
    args = ap.parse_args()
    paths = load_manifest(args.manifest)
    first, _ = run_suite(paths, {"seed": args.seed})
    second, _ = run_suite(paths, {"seed": args.seed})
    differ = [Path(a["job"]).name for a, b in zip(first, second)
              if dumps(a["result"]) != dumps(b["result"])]
    for a in first:
        print(f"{Path(a['job']).name:<28}{a['status']}")
    print(f"{len(paths)} jobs, {len(differ)} differ: {differ or ''}")
    return 1 if differ else 0


if __name__ == "__main__":
    sys.exit(main())

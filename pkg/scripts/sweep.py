"""Run every formula row over its default grid and write a markdown report.

    python scripts/sweep.py [report.md] [--jobs N]
"""
import argparse
import time

from sclab import lab


def main():
    p = argparse.ArgumentParser()
    p.add_argument("output", nargs="?", default="sweep.md")
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    start = time.perf_counter()
    records = lab.run_grid(lab.grid(lab.ALL_OPS), jobs=args.jobs)
    with open(args.output, "w") as f:
        f.write(lab.render_records(records, "md"))
    bad = [r for r in records if not r.match]
    print(f"{len(records)} cells, {len(bad)} mismatches, {time.perf_counter() - start:.1f}s -> {args.output}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

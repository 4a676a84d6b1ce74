#!/usr/bin/env python3
"""Run the full verification battery and write one JSON report per sweep.

Covers the three exhaustive finite rings, four randomized rational/Gaussian
streams, and the constructed SEP / EP-only / shift-pattern streams.  Reports
land in ./reports/ (or the directory given with --out-dir).  Exits nonzero
if any sweep finds a counterexample, which a correct build never does.
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from starring.harness import GeneratorSpec, Mode, sweep
from starring.starfield import GAUSSIAN, RATIONAL, prime_field, quad_ext_field

BATTERY = [
    ("exhaustive-f2-dim2", GeneratorSpec(Mode.EXHAUSTIVE, prime_field(2), 2)),
    ("exhaustive-f3-dim2", GeneratorSpec(Mode.EXHAUSTIVE, prime_field(3), 2)),
    ("exhaustive-f4-dim2", GeneratorSpec(Mode.EXHAUSTIVE, quad_ext_field(2), 2)),
    ("random-q-dim2", GeneratorSpec(Mode.RANDOM, RATIONAL, 2, 500, 101)),
    ("random-q-dim3", GeneratorSpec(Mode.RANDOM, RATIONAL, 3, 500, 102)),
    ("random-qi-dim2", GeneratorSpec(Mode.RANDOM, GAUSSIAN, 2, 500, 103)),
    ("random-qi-dim3", GeneratorSpec(Mode.RANDOM, GAUSSIAN, 3, 500, 104)),
    ("constructed-sep-qi-dim3",
     GeneratorSpec(Mode.CONSTRUCTED_SEP, GAUSSIAN, 3, 50, 301)),
    ("constructed-ep-qi-dim3",
     GeneratorSpec(Mode.CONSTRUCTED_EP, GAUSSIAN, 3, 50, 302)),
    ("constructed-pi-qi-dim3",
     GeneratorSpec(Mode.CONSTRUCTED_PI, GAUSSIAN, 3, 50, 303)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--entries", default="all")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entry_ids = [s for s in args.entries.split(",") if s] or "all"
    if entry_ids == ["all"]:
        entry_ids = "all"

    bad = 0
    t0 = time.perf_counter()
    for name, spec in BATTERY:
        report = sweep(spec, entry_ids)
        path = out_dir / f"{name}.json"
        path.write_text(report.to_json() + "\n", encoding="utf-8")
        n = report.counterexample_count()
        bad += n
        t = report.totals
        print(f"{name:<26} elements {t['generated']:>5} "
              f"both {t['bothInvertible']:>5} sep {t['sep']:>4} "
              f"counterexamples {n}  -> {path}")
    print(f"\ntotal wall time {time.perf_counter() - t0:.1f}s; "
          f"{'all sweeps clean' if bad == 0 else f'{bad} COUNTEREXAMPLES'}")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())

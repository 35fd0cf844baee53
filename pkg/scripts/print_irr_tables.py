#!/usr/bin/env python3
"""Print the graded tables of plus-irreducibles."""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from pisom.structure import enum_irr  # noqa: E402
from pisom.words import format_word  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("max_grade", type=int, nargs="?", default=8)
    args = ap.parse_args()
    start = time.perf_counter()
    for k in range(1, args.max_grade + 1):
        table = enum_irr(k)
        print("grade %2d (%3d elements): %s" % (k, len(table.elements), " ".join(format_word(w) for w in table.elements)))
    print("total %.2fs" % (time.perf_counter() - start))


if __name__ == "__main__":
    main()

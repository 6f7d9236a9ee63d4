#!/usr/bin/env python3
"""Fuzz the alignment DP against the exhaustive partition oracle.

Usage: python scripts/fuzz_aligner.py [count] [seed]
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).parent.parent / "tests"))

from prosched.aligner import align
from oracles import exhaustive_min_cost

POOL = [
    ("a", ("AH",)), ("a", ("AE",)), ("b", ("B",)), ("c", ("K",)),
    ("c", ("S",)), ("ab", ("AE", "B")), ("bc", ("B",)), ("e", ()),
    ("e", ("EH",)), ("", ("Z",)), ("abc", ("AH", "B", "S")),
]
PHONES = ["AH", "AE", "B", "EH", "K", "S", "Z"]


def main() -> int:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(seed)
    start = time.monotonic()
    for n in range(count):
        g = "".join(rng.choice("abce") for _ in range(rng.randint(0, 6)))
        p = tuple(rng.choice(PHONES) for _ in range(rng.randint(0, 5)))
        maps = set(rng.sample(POOL, rng.randint(0, len(POOL))))
        got = align(g, p, maps)
        want = exhaustive_min_cost(g, p, maps)
        if got.cost != want:
            print(f"MISMATCH after {n}: {g!r} {p} cost {got.cost} != {want}")
            print(f"  mappings: {sorted(maps)}")
            return 1
    elapsed = time.monotonic() - start
    print(f"{count} instances ok in {elapsed:.1f}s (seed {seed})")
    return 0


if __name__ == "__main__":
    sys.exit(main())

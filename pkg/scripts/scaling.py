"""Time the di sequence on growing seeded transit networks."""
import argparse
import time

from kdiameter.indicators import di_sequence
from kdiameter.netgen import random_transit_network


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    parser.add_argument("--lines", type=int, default=20)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    print(f"{'nodes':>6} {'edges':>6} {'lines':>5} {'K':>3} {'seconds':>8}  di")
    for n in args.sizes:
        g = random_transit_network(n, args.lines, args.seed)
        start = time.perf_counter()
        seq = di_sequence(g)
        elapsed = time.perf_counter() - start
        values = " ".join(str(v) for v in seq.values[: seq.saturation])
        print(f"{g.n:>6} {g.m:>6} {len(g.color_names):>5} {seq.saturation:>3} {elapsed:>8.2f}  {values}")


if __name__ == "__main__":
    main()

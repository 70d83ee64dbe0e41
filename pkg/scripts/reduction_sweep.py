"""Check the SAT gadget against brute-force SAT on random CNF formulas."""
import argparse

from kdiameter.verify import reduction_equivalence


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--start", type=int, default=0)
    args = parser.parse_args()
    result = reduction_equivalence(args.count, args.start)
    print(f"{result.formulas} formulas, {result.satisfiable} satisfiable, "
          f"{len(result.mismatches)} mismatches")
    for line in result.mismatches[:20]:
        print(" ", line)
    raise SystemExit(0 if result.ok else 1)


if __name__ == "__main__":
    main()

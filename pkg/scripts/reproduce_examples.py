"""Print the indicator rows of the five illustrative networks."""
from kdiameter.indicators import format_decimal, full_report
from kdiameter.netgen import paper_network


def main():
    print(f"{'network':>8} {'d':>3} {'L':>3} {'Pi':>5} {'tau':>5}  {'di_1..di_3':<12} variance")
    for key in range(1, 6):
        r = full_report(paper_network(key), with_dc=False)
        di = " ".join(str(r.di.value(k)) for k in range(1, 4))
        tau = "-" if r.directness is None else format_decimal(r.directness)
        print(f"{f'({key})':>8} {r.diameter:>3} {r.total_length:>3} "
              f"{format_decimal(r.extension):>5} {tau:>5}  {di:<12} "
              f"{format_decimal(r.di.variance)} ({r.di.variance})")


if __name__ == "__main__":
    main()

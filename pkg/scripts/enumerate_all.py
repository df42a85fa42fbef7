"""Closure sizes of every generated monoid against its independent count."""
import argparse
import time

from singmon.brauer import all_brauer_b, chi_assignment, chi_b_assignment
from singmon.dualsym import all_fb_star, lambda_assignment, lambda_b_assignment
from singmon.rook import phi_assignment, phi_b_assignment
from singmon.verify import closure_of, count_oracle

TARGETS = [
    ("F*", lambda_assignment, lambda n: count_oracle("FSTAR", n), "A"),
    ("IS~", phi_assignment, lambda n: count_oracle("IS_TILDE", n), "A"),
    ("Br", chi_assignment, lambda n: count_oracle("BR", n), "A"),
    ("SIS", phi_b_assignment, lambda n: count_oracle("SIS", n), "B"),
    ("FB*", lambda_b_assignment, lambda n: len(all_fb_star(n)), "B"),
    ("Br^B", chi_b_assignment, lambda n: len(all_brauer_b(n)), "B"),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=5)
    ap.add_argument("--max-b", type=int, default=3)
    args = ap.parse_args()
    print(f"{'monoid':6} {'n':>2} {'closure':>8} {'oracle':>8} {'secs':>6}")
    for name, build, oracle, fam in TARGETS:
        top = args.max_a if fam == "A" else args.max_b
        for n in range(1, top + 1):
            t0 = time.perf_counter()
            size = closure_of(build(n)).size
            expected = oracle(n)
            flag = "" if size == expected else "  MISMATCH"
            print(f"{name:6} {n:>2} {size:>8} {expected:>8} {time.perf_counter() - t0:6.2f}{flag}")


if __name__ == "__main__":
    main()

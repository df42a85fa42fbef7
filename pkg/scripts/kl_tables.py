"""Print Kazhdan-Lusztig elements of a finite Coxeter group in the standard basis."""
import argparse

from singmon.coxeter import CoxeterGroup, reduced_word
from singmon.hecke import HeckeAlgebra


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", choices=("A", "B", "I2"), default="A")
    ap.add_argument("--n", type=int, default=4, help="S_n for A, rank for B, m for I2")
    ap.add_argument("--nontrivial", action="store_true",
                    help="only list elements with a coefficient that is not a power of v")
    args = ap.parse_args()
    H = HeckeAlgebra(CoxeterGroup(args.type, args.n))
    for w in H.group.elements():
        b = H.kl(w)
        if args.nontrivial and all(len(c.terms) == 1 for _, c in b.terms):
            continue
        word = "".join(f"s{s}" for s in reduced_word(w)) or "e"
        print(f"{w.to_text()} ({word}):")
        for x, c in b.terms:
            print(f"    {x.to_text():>16}  {c.format()}")


if __name__ == "__main__":
    main()

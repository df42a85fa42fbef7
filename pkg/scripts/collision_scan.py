"""Group random singular words by their image under a desingularization map.

Words sharing an image are listed; deciding whether they are equal in the
singular monoid is left to the reader.
"""
import argparse

from singmon.coxeter import CoxeterGroup, odd_components
from singmon.groupalg import bool_delta_eval, collision_scan, delta_bar_eval
from singmon.hecke import HeckeAlgebra, upsilon_eval
from singmon.laurent import PhiAssignment, PhiSet, parse_phi_set
from singmon.words import alphabet, random_words


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", choices=("A", "B", "I2"), default="I2")
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--target", choices=("group", "bool", "hecke"), default="hecke")
    ap.add_argument("--phi", default=None)
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=10)
    args = ap.parse_args()
    G = CoxeterGroup(args.type, args.n)
    k = len(odd_components(G.matrix()))
    words = random_words(alphabet(G.matrix()), args.max_len, args.words, args.seed)
    if args.target == "bool":
        phi_s = PhiSet.uniform(parse_phi_set(args.phi or "{0,1}"), k)
        image = lambda w: bool_delta_eval(w, G, phi_s)  # noqa: E731
    elif args.target == "group":
        phi = PhiAssignment.uniform(args.phi or "1 + x", k)
        image = lambda w: delta_bar_eval(w, G, phi)  # noqa: E731
    else:
        H = HeckeAlgebra(G)
        phi = PhiAssignment.uniform(args.phi or "v + x", k)
        image = lambda w: upsilon_eval(w, H, phi)  # noqa: E731
    groups = collision_scan(words, image)
    print(f"{len(words)} words, {len(groups)} images hit by more than one word")
    for g in sorted(groups, key=len, reverse=True)[: args.show]:
        print("  " + " | ".join(g[:6]) + (" ..." if len(g) > 6 else ""))


if __name__ == "__main__":
    main()

"""Walk through the sl2 bimodule computations and print each complex."""
from singmon.sl2cat import (complexes_isomorphic, compose, describe_map, gamma4, gamma4_prime,
                            lc_s, minimize, sl2_checks, square_from_gammas, theta_check_s,
                            theta_hat_s, total_complex)


def show(title, C):
    print(f"{title}: {C.describe()}")
    for k, d in enumerate(C.diffs):
        for line in describe_map(d):
            print(f"    d^{C.start + k}: {line}")


def main() -> None:
    show("cone of xi, minimized", theta_hat_s())
    show("cone of xi', minimized", theta_check_s())
    show("theta_hat o LC, minimized", minimize(compose(theta_hat_s(), lc_s())))
    show("LC o theta_hat, minimized", minimize(compose(lc_s(), theta_hat_s())))
    t1 = total_complex(square_from_gammas(gamma4()))
    t2 = total_complex(square_from_gammas(gamma4_prime()))
    show("totalization with 1(x)1 -> 2x(x)1", t1)
    show("totalization with 1(x)1 -> 1(x)2x", t2)
    res = complexes_isomorphic(t1, t2)
    print(f"isomorphic: {res.isomorphic} ({res.reason}; chain-map space of dimension {res.hom_dimension})")
    if res.witness is not None:
        for p in sorted(res.witness.components):
            print(f"    f^{p} = {res.witness.at(p).matrix.tolist()}")
    res_bd = complexes_isomorphic(t1, t2, block_diagonal=True)
    print(f"block-diagonal isomorphism: {res_bd.isomorphic} ({res_bd.reason})")
    print()
    for name, ok, detail in sl2_checks():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")


if __name__ == "__main__":
    main()

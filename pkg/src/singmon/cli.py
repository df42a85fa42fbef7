"""Command-line interface: ``singmon <subcommand> [flags]``.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Callable, Optional, Sequence

from . import binrel, brauer, dualsym, groupalg, hecke, rook, sl2cat
from .binrel import BoolMat
from .coxeter import INF, CoxeterGroup, CoxeterMatrix, odd_components, parse_coxeter, standard_matrix
from .laurent import PhiAssignment, PhiSet, parse_phi_set, parse_xpoly
from .verify import DEFAULT_CAP, check_relations, closure_of, count_oracle
from .words import (GeneratorAssignment, RelationSet, parse_word, presentation,
                    singular_relations)


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ rendering


def render(obj: Any, signed: bool = False) -> Any:
    """JSON-ready form of any element produced by the library."""
    if isinstance(obj, BoolMat):
        return ["".join(str(x) for x in row) for row in obj.to_lists()]
    if isinstance(obj, dualsym.BlockBijection):
        return [{"domain": d, "image": i} for d, i in obj.describe(signed=signed)]
    if isinstance(obj, (rook.PartialPerm, rook.SignedPartialPerm)):
        return list(obj.targets)
    if isinstance(obj, brauer.ColoredPartialBrauer):
        return [{"block": b, "color": c} for b, c in obj.labelled_blocks()]
    if isinstance(obj, (brauer.BrauerDiagram, brauer.BrauerBDiagram)):
        return obj.labelled_blocks()
    if isinstance(obj, hecke.HeckeElt):
        return json.loads(obj.to_json())
    if isinstance(obj, groupalg.IntGroupAlgElt):
        return [{"w": w.to_text(), "coeff": c} for w, c in obj.terms]
    if isinstance(obj, groupalg.BoolGroupAlgElt):
        return [w.to_text() for w in obj.sorted()]
    if isinstance(obj, brauer.ScalarExponents):
        return {"closed": obj.closed, "open": obj.open}
    if hasattr(obj, "to_text"):
        return obj.to_text()
    return obj


def text_of(obj: Any, signed: bool = False) -> str:
    if isinstance(obj, BoolMat):
        return str(obj)
    r = render(obj, signed)
    return r if isinstance(r, str) else json.dumps(r)


def emit(args: argparse.Namespace, payload: dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


# ------------------------------------------------------------------ setup helpers


def matrix_of(args: argparse.Namespace) -> CoxeterMatrix:
    if args.matrix:
        return parse_coxeter(args.matrix)
    if args.type == "I2":
        if args.m is None:
            raise UsageError("--type I2 needs --m")
        return standard_matrix("I2", INF if args.m == "inf" else int(args.m))
    return standard_matrix(args.type, need_n(args))


def need_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def group_of_args(args: argparse.Namespace) -> CoxeterGroup:
    if args.type == "I2":
        if args.m is None or args.m == "inf":
            raise UsageError("--type I2 needs a finite --m")
        return CoxeterGroup("I2", int(args.m))
    return CoxeterGroup(args.type, need_n(args))


def phi_of(args: argparse.Namespace, M: CoxeterMatrix) -> PhiAssignment:
    k = len(odd_components(M))
    texts = (args.phi or "v+x").split(";")
    if len(texts) == 1:
        return PhiAssignment.uniform(texts[0], k)
    if len(texts) != k:
        raise UsageError(f"--phi needs 1 or {k} ';'-separated values")
    return PhiAssignment(tuple(parse_xpoly(t) for t in texts))


def phi_set_of(args: argparse.Namespace, M: CoxeterMatrix) -> PhiSet:
    k = len(odd_components(M))
    texts = (args.phi or "{0,1}").split(";")
    if len(texts) == 1:
        return PhiSet.uniform(parse_phi_set(texts[0]), k)
    if len(texts) != k:
        raise UsageError(f"--phi needs 1 or {k} ';'-separated sets")
    return PhiSet(tuple(parse_phi_set(t) for t in texts))


MAP_ALIASES = {"eta": "bin", "bin": "bin", "lambda": "fstar", "fstar": "fstar",
               "phi": "rook", "rook": "rook", "chi": "brauer", "brauer": "brauer",
               "group": "group", "bool": "bool", "hecke": "hecke"}


def assignment_of(target: str, args: argparse.Namespace) -> tuple[GeneratorAssignment[Any], RelationSet]:
    """Generator images and the relations that must hold for them."""
    t = MAP_ALIASES.get(target)
    if t is None:
        raise UsageError(f"unknown target {target!r}")
    if t in ("group", "bool", "hecke"):
        G = group_of_args(args)
        M = G.matrix()
        rels = singular_relations(M)
        if t == "group":
            phi = phi_of(args, M)
            if not all(p.is_integral() for p in phi.values):
                raise UsageError("group target needs integer coefficients in --phi")
            return groupalg.delta_bar_assignment(G, phi), rels
        if t == "bool":
            return groupalg.bool_delta_assignment(G, phi_set_of(args, M)), rels
        return hecke.upsilon_assignment(hecke.HeckeAlgebra(G), phi_of(args, M)), rels
    if args.type not in ("A", "B"):
        raise UsageError(f"target {target} needs --type A or B")
    n = need_n(args)
    M = standard_matrix(args.type, n)
    b = args.type == "B"
    if t == "bin":
        asg = binrel.eta_b_assignment(n) if b else binrel.eta_assignment(n)
        return asg, singular_relations(M)
    if t == "fstar":
        asg = dualsym.lambda_b_assignment(n) if b else dualsym.lambda_assignment(n)
        return asg, presentation("FBSTAR" if b else "FSTAR", M)
    if t == "rook":
        asg = rook.phi_b_assignment(n) if b else rook.phi_assignment(n)
        return asg, presentation("SIS" if b else "ROOK", M)
    asg = brauer.chi_b_assignment(n) if b else brauer.chi_assignment(n)
    return asg, presentation("BRAUER_B" if b else "BRAUER", M)


# ------------------------------------------------------------------ subcommands


def cmd_relations(args: argparse.Namespace) -> int:
    asg, rels = assignment_of(args.target or "bin", args)
    rep = check_relations(rels, asg)
    payload = {"relations": rep.name, "target": args.target or "bin", "total": rep.total,
               "failures": list(rep.failures), "ok": rep.ok}
    lines = [f"{rep.name}: {rep.total} relations, {len(rep.failures)} failures"]
    lines += [f"  FAIL {f}" for f in rep.failures]
    emit(args, payload, lines)
    return 0 if rep.ok else 1


ENUM_TARGETS: dict[str, tuple[Callable[[int], GeneratorAssignment[Any]], Optional[Callable[[int], int]], str]] = {
    "fstar": (dualsym.lambda_assignment, lambda n: count_oracle("FSTAR", n), "A"),
    "istilde": (rook.phi_assignment, lambda n: count_oracle("IS_TILDE", n), "A"),
    "brauer": (brauer.chi_assignment, lambda n: count_oracle("BR", n), "A"),
    "bin": (binrel.eta_assignment, None, "A"),
    "sis": (rook.phi_b_assignment, lambda n: count_oracle("SIS", n), "B"),
    "fbstar": (dualsym.lambda_b_assignment, lambda n: len(dualsym.all_fb_star(n)), "B"),
    "brauer_b": (brauer.chi_b_assignment, lambda n: count_oracle("APB", n), "B"),
    "bin_b": (binrel.eta_b_assignment, None, "B"),
}


def cmd_enumerate(args: argparse.Namespace) -> int:
    target = args.target or "fstar"
    if target not in ENUM_TARGETS:
        raise UsageError(f"enumerate target must be one of {sorted(ENUM_TARGETS)}")
    build, oracle, _ = ENUM_TARGETS[target]
    n = need_n(args)
    res = closure_of(build(n), cap=args.cap)
    expected = oracle(n) if oracle else None
    ok = not res.cap_hit and (expected is None or expected == res.size)
    payload: dict[str, Any] = {"target": target, "n": n, "size": res.size,
                               "cap_hit": res.cap_hit, "oracle": expected, "ok": ok}
    lines = [f"{target} n={n}: closure size {res.size}"
             + ("" if expected is None else f", oracle {expected}")
             + (" (cap hit)" if res.cap_hit else "")]
    if args.emit_elements:
        signed = ENUM_TARGETS[target][2] == "B"
        payload["elements"] = [render(e, signed) for e in res.elements]
        lines += [text_of(e, signed) for e in res.elements]
    emit(args, payload, lines)
    return 0 if ok else 1


def cmd_eval(args: argparse.Namespace) -> int:
    if args.word is None:
        raise UsageError("--word is required")
    word = parse_word(args.word)
    target = args.map or args.target or "eta"
    if MAP_ALIASES.get(target) == "brauer":
        n = need_n(args)
        d, ex = (brauer.chi_b_eval if args.type == "B" else brauer.chi_eval)(word, n)
        payload = {"word": args.word, "map": target, "image": render(d), "loops": render(ex)}
        emit(args, payload, [text_of(d), f"loops: {ex.closed}"])
        return 0
    asg, _ = assignment_of(target, args)
    img = asg(word)
    signed = args.type == "B"
    emit(args, {"word": args.word, "map": target, "image": render(img, signed)},
         [text_of(img, signed)])
    return 0


def cmd_desingularize(args: argparse.Namespace) -> int:
    target = args.target or "hecke"
    if target not in ("group", "bool", "hecke"):
        raise UsageError("desingularize target must be group, bool or hecke")
    if args.word is None:
        raise UsageError("--word is required")
    return cmd_eval(argparse.Namespace(**{**vars(args), "map": target}))


def cmd_kl(args: argparse.Namespace) -> int:
    G = group_of_args(args)
    H = hecke.HeckeAlgebra(G)
    elems = [G.parse_element(args.element)] if args.element else G.elements()
    out, ok = [], True
    lines = []
    for w in elems:
        b = H.kl(w)
        good = H.bar(b) == b and all(c.in_positive_part() for x, c in b.terms if x != w)
        ok &= good
        out.append({"w": w.to_text(), "kl": json.loads(b.to_json()), "bar_invariant": good})
        lines.append(f"{w.to_text()}: {b}")
    emit(args, {"group": f"{G.family}{G.n}", "elements": out, "ok": ok}, lines)
    return 0 if ok else 1


def cmd_iso_check(args: argparse.Namespace) -> int:
    n = args.n or 2
    rng = random.Random(args.seed)
    diagrams = brauer.all_brauer_b(n) if n <= 2 else None
    failures = []
    if diagrams is not None:
        for d in diagrams:
            if brauer.from_apb(brauer.to_apb(d)) != d:
                failures.append("roundtrip")
        pairs = [(a, b) for a in diagrams for b in diagrams]
    else:
        asg = brauer.chi_b_assignment(n)
        letters = asg.letters()
        pool = [asg(tuple(rng.choice(letters) for _ in range(rng.randint(0, 12))))
                for _ in range(400)]
        pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(args.pairs)]
        for d in pool:
            if brauer.from_apb(brauer.to_apb(d)) != d:
                failures.append("roundtrip")
    for a, b in pairs:
        if brauer.to_apb(a * b) != brauer.to_apb(a) * brauer.to_apb(b):
            failures.append("homomorphism")
    ok = not failures
    payload = {"n": n, "pairs": len(pairs), "seed": args.seed, "failures": len(failures), "ok": ok}
    emit(args, payload, [f"Br^B_{n} -> APB_{n}: {len(pairs)} products checked (seed {args.seed}), "
                         f"{len(failures)} failures"])
    return 0 if ok else 1


def cmd_sl2_check(args: argparse.Namespace) -> int:
    rows = sl2cat.sl2_checks()
    payload = {"checks": [{"name": n, "pass": p, "detail": d} for n, p, d in rows],
               "ok": all(p for _, p, _ in rows)}
    lines = [f"{'PASS' if p else 'FAIL'}  {n}" + (f"  [{d}]" if d else "") for n, p, d in rows]
    emit(args, payload, lines)
    return 0 if payload["ok"] else 1


def cmd_odd_skeleton(args: argparse.Namespace) -> int:
    M = matrix_of(args)
    comps = odd_components(M)
    payload = {"labels": list(M.labels), "odd_edges": [list(e) for e in M.odd_edges()],
               "components": [list(c) for c in comps.components]}
    lines = [f"component {k}: {' '.join(map(str, c))}" for k, c in enumerate(comps.components)]
    emit(args, payload, lines)
    return 0


COMMANDS = {
    "relations": cmd_relations,
    "enumerate": cmd_enumerate,
    "desingularize": cmd_desingularize,
    "kl": cmd_kl,
    "iso-check": cmd_iso_check,
    "sl2-check": cmd_sl2_check,
    "odd-skeleton": cmd_odd_skeleton,
    "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="singmon", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--type", choices=("A", "B", "I2"), default="A")
        s.add_argument("--n", type=int)
        s.add_argument("--m", help="dihedral parameter (integer or inf)")
        s.add_argument("--matrix", help='Coxeter matrix, e.g. "1 3;3 1" or "type=B n=3"')
        s.add_argument("--word", help='word such as "t1 s2 S1"')
        s.add_argument("--element", help='group element, e.g. "s1 s2" or "[2,1,3]"')
        s.add_argument("--phi", help='e.g. "v+x", "x-x^-1" or "{0,1}"; ";" separates components')
        s.add_argument("--target")
        s.add_argument("--map")
        s.add_argument("--cap", type=int, default=DEFAULT_CAP)
        s.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        s.add_argument("--pairs", type=int, default=10_000)
        s.add_argument("--json", action="store_true")
        s.add_argument("--emit-elements", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as e:
        print(f"singmon {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

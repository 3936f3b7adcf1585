"""Command-line front end.

JSON in, deterministic text (or JSON) out.  Exit codes: 0 success, 1 usage
error, 2 mathematical invariant violation, 3 malformed input.  The env var
HQFT_SEED fixes the seed of every randomized verification suite.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fileio
from .abelian import enumerate_homs, ext_group
from .bridge import verify_theorem71
from .errors import InputError, InvariantError
from .homology import homology
from .hqft import FiberElement, evaluate, holonomy, holonomy_character, input_object, tau
from .linalg import IntMatrix, smith_normal_form
from .surfaces import (CobordismSurface, component_count, surface_from_cycle)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flathqft",
                                description="Exact holonomy of flat surface "
                                            "field theories on simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        return sp

    sp = add("homology", help="integral homology of a complex")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("cohomology", help="degree-2 cohomology via the coefficient splitting")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--group", required=True)

    sp = add("snf", help="Smith normal form diagonal of an integer matrix")
    sp.add_argument("--matrix", required=True)

    sp = add("ext", help="Ext of the degree-1 homology by a coefficient group")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--group", required=True)

    sp = add("holonomy", help="holonomy of a theory on a closed surface")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--cochain", required=True)
    sp.add_argument("--surface", required=True)

    sp = add("character", help="holonomy character on the H_2 generators")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--cochain", required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("evaluate", help="act with a cobordism on a fiber element")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--cochain", required=True)
    sp.add_argument("--surface", required=True)
    sp.add_argument("--phase", default="0")
    sp.add_argument("--debug-selfcheck", action="store_true")

    sp = add("verify-surface", help="validate a surface bundle and print its census")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--surface", required=True)

    sp = add("surface-from-cycle", help="resolve a 2-cycle into a mapped closed surface")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--chain", required=True)
    sp.add_argument("--out")

    sp = add("verify", help="run a verification suite")
    sp.add_argument("suite", choices=["thm71"])
    sp.add_argument("--complex", required=True)
    sp.add_argument("--group", required=True)
    sp.add_argument("--json", action="store_true")

    return p


def _cmd_homology(args) -> int:
    X = fileio.load_complex(args.complex)
    hg = homology(X, args.degree)
    if args.json:
        print(json.dumps({
            "degree": args.degree,
            "group": str(hg.group),
            "rank": hg.group.rank,
            "invariant_factors": list(hg.group.invariant_factors),
            "generators": [fileio.chain_to_dict(z) for z in hg.generator_cycles],
        }, indent=2, sort_keys=True))
    else:
        print(_short_group(str(hg.group)))
    return 0


def _short_group(s: str) -> str:
    # "Z + Z" style never occurs; FgAbGroup prints Z^r already
    return s


def _cmd_cohomology(args) -> int:
    X = fileio.load_complex(args.complex)
    A = fileio.parse_coeff_group(args.group)
    h1, h2 = homology(X, 1), homology(X, 2)
    eg = ext_group(h1.group, A)
    print(f"Hom(H_2, A) with H_2 = {h2.group}")
    print(f"Ext(H_1, A) = {eg.group} (order {eg.order()})")
    if A.order() is not None:
        n_hom = len(enumerate_homs(h2.group, A))
        print(f"|H^2| = {n_hom * eg.order()}")
    return 0


def _cmd_snf(args) -> int:
    rows = fileio.load_matrix(args.matrix)
    m = IntMatrix.from_rows(len(rows), len(rows[0]) if rows else 0, rows)
    snf = smith_normal_form(m)
    print(" ".join(str(d) for d in snf.S.diagonal()))
    return 0


def _cmd_ext(args) -> int:
    X = fileio.load_complex(args.complex)
    A = fileio.parse_coeff_group(args.group)
    h1 = homology(X, 1)
    eg = ext_group(h1.group, A)
    print(f"Ext(H_1, A) = {eg.group}")
    print(f"classes: {eg.order()}")
    return 0


def _cmd_holonomy(args) -> int:
    X = fileio.load_complex(args.complex)
    theta = fileio.load_cochain(args.cochain, X)
    g = fileio.load_surface(args.surface, X)
    H = tau(X, theta.group, theta)
    value = holonomy(H, g)
    print(theta.group.format(value.value))
    return 0


def _cmd_character(args) -> int:
    X = fileio.load_complex(args.complex)
    theta = fileio.load_cochain(args.cochain, X)
    H = tau(X, theta.group, theta)
    char = holonomy_character(H)
    h2 = homology(X, 2)
    if args.json:
        print(json.dumps({label: theta.group.format(v.value)
                          for label, v in zip(h2.group.generator_labels, char.values)},
                         indent=2, sort_keys=True))
    else:
        for label, v in zip(h2.group.generator_labels, char.values):
            print(f"{label}: {theta.group.format(v.value)}")
    return 0


def _cmd_evaluate(args) -> int:
    X = fileio.load_complex(args.complex)
    theta = fileio.load_cochain(args.cochain, X)
    g = fileio.load_surface(args.surface, X)
    if not isinstance(g.surface, CobordismSurface):
        raise InvariantError("evaluate needs a cobordism surface bundle")
    H = tau(X, theta.group, theta)
    phase = theta.group.parse(args.phase)
    e = FiberElement(input_object(H, g), phase)
    out = evaluate(H, g, e, selfcheck=args.debug_selfcheck)
    print(theta.group.format(out.phase.value))
    return 0


def _cmd_verify_surface(args) -> int:
    X = fileio.load_complex(args.complex)
    g = fileio.load_surface(args.surface, X)  # eagerly verified
    chi = g.euler_characteristic()
    print("valid: yes")
    print(f"euler characteristic: {chi}")
    if g.is_closed() and g.surface.complex.n_simplices(0) > 0 \
            and component_count(g.surface.complex) == 1:
        print(f"genus: {(2 - chi) // 2}")
    ins, outs = g.input_loops(), g.output_loops()
    print(f"inputs: {len(ins)}" + (f" (lengths {', '.join(str(len(l)) for l in ins)})"
                                   if ins else ""))
    print(f"outputs: {len(outs)}" + (f" (lengths {', '.join(str(len(l)) for l in outs)})"
                                     if outs else ""))
    return 0


def _cmd_surface_from_cycle(args) -> int:
    X = fileio.load_complex(args.complex)
    y = fileio.load_chain(args.chain, X)
    g = surface_from_cycle(X, y)
    print(f"triangles: {g.surface.complex.n_simplices(2)}")
    print(f"euler characteristic: {g.euler_characteristic()}")
    print(f"pushforward equals input: {'yes' if g.pushed_cycle() == y else 'no'}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(fileio.surface_to_dict(g), fh, indent=2, sort_keys=True)
        print(f"bundle written to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    X = fileio.load_complex(args.complex)
    A = fileio.parse_coeff_group(args.group)
    seed = int(os.environ.get("HQFT_SEED", "0"))
    report = verify_theorem71(X, A, rng_seed=seed, complex_label=args.complex)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.text())
    return 0 if report.passed else 2


_HANDLERS = {
    "homology": _cmd_homology,
    "cohomology": _cmd_cohomology,
    "snf": _cmd_snf,
    "ext": _cmd_ext,
    "holonomy": _cmd_holonomy,
    "character": _cmd_character,
    "evaluate": _cmd_evaluate,
    "verify-surface": _cmd_verify_surface,
    "surface-from-cycle": _cmd_surface_from_cycle,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2; remap to 1
        return 0 if exc.code in (0, None) else 1
    try:
        return _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

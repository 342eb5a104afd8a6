"""``gapvir`` command line.

Exit status: 0 when the checked property holds / the verdict is positive,
1 when it fails / the verdict is negative, 2 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import corpus
from .algebra import check_lie_axioms, vir_embedding_check
from .cover import j_membership, omega_min_l, pi_map
from .mois import (
    LinkageGraph,
    check_module_axioms,
    classify_reducibility,
    iso_test,
    linkage_graph,
    validate_f,
)
from .scalars import InputError
from .serialize import (
    dumps,
    load_json,
    spec_from_json,
    spec_to_json,
    tensor_from_json,
    weight_from_json,
    weight_to_json,
    weight_vector_to_json,
)
from .verma import graded_dimension, singular_vectors, verma_verdict

DEFAULT_WINDOW = 12
DEFAULT_DEPTH = 6
DEFAULT_LMAX = 6


def emit_dot(g: LinkageGraph) -> str:
    lines = ["digraph linkage {"]
    for n in sorted(g.nodes):
        lines.append(f'  {n} [label="{n}"];')
    for a, b, s in sorted(g.edges, key=lambda e: (e[0], e[2], e[1])):
        lines.append(f'  {a} -> {b} [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def default_window() -> int:
    raw = os.environ.get("GAPVIR_WINDOW")
    if raw is None:
        return DEFAULT_WINDOW
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"GAPVIR_WINDOW must be an integer, got {raw!r}") from None
    if n < 1:
        raise InputError("GAPVIR_WINDOW must be positive")
    return n


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="force machine-readable output")

    ap = argparse.ArgumentParser(prog="gapvir", description="Exact computations for gap-p Virasoro algebras.",
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = add("validate-f", "check conditions (I)-(III) for the F matrix of a module spec")
    p.add_argument("spec")

    p = add("axioms", "verify the module axioms of V(alpha, beta, F) on a window")
    p.add_argument("spec")
    p.add_argument("--window", type=_positive)
    p.add_argument("--unchecked", action="store_true", help="skip F validation (mutation experiments)")

    p = add("linkage", "linkage graph of the components")
    p.add_argument("spec")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")

    p = add("reducible", "decide reducibility (exit 0 when reducible)")
    p.add_argument("spec")

    p = add("iso", "search for an isomorphism between two module specs")
    p.add_argument("a")
    p.add_argument("b")

    p = add("verma", "Verma module verdict and graded dimensions (exit 0 when irreducible)")
    p.add_argument("weight")
    p.add_argument("--depth", type=_nonneg, default=DEFAULT_DEPTH)

    p = add("singular", "singular vectors at a given depth (exit 0 when some exist)")
    p.add_argument("weight")
    p.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH)

    p = add("omega", "minimal l for which omega_{m,n} kills the window")
    p.add_argument("spec")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lmax", type=_nonneg, default=DEFAULT_LMAX)
    p.add_argument("--window", type=_positive)

    p = add("jtest", "membership of a tensor in J (exit 0 when it belongs)")
    p.add_argument("tensor")

    p = add("lie-check", "antisymmetry and Jacobi on a window of generators")
    p.add_argument("--p", type=int, required=True, dest="gap")
    p.add_argument("--window", type=_positive)
    p.add_argument("--embedding", action="store_true", help="also check the Virasoro embedding")

    add("examples", "re-derive the verdicts of the bundled example corpus")
    return ap


def _emit(obj, out) -> None:
    out.write(dumps(obj) + "\n")


def _dispatch(args, out) -> int:
    cmd = args.command
    window = getattr(args, "window", None) or default_window()

    if cmd == "validate-f":
        spec = spec_from_json(load_json(args.spec), strict=False)
        rep = validate_f(spec.F)
        _emit(rep.to_dict(), out)
        return 0 if rep.valid else 1

    if cmd == "axioms":
        spec = spec_from_json(load_json(args.spec), strict=not args.unchecked)
        rep = check_module_axioms(spec, window)
        d = rep.to_dict()
        d["violations"] = d["violations"][:20]
        d["violation_count"] = len(rep.violations)
        _emit(d, out)
        return 0 if rep.ok else 1

    if cmd == "linkage":
        spec = spec_from_json(load_json(args.spec), strict=False)
        g = linkage_graph(spec.F)
        if args.dot and not args.json:
            out.write(emit_dot(g))
        else:
            d = g.to_dict()
            if args.dot:
                d["dot"] = emit_dot(g)
            _emit(d, out)
        return 0 if g.strongly_connected else 1

    if cmd == "reducible":
        spec = spec_from_json(load_json(args.spec))
        v = classify_reducibility(spec)
        _emit(v.to_dict(), out)
        return 0 if v.reducible else 1

    if cmd == "iso":
        a = spec_from_json(load_json(args.a))
        b = spec_from_json(load_json(args.b))
        if a.p != b.p:
            raise InputError(f"specs have different p ({a.p} vs {b.p})")
        w = iso_test(a, b)
        _emit({"isomorphic": w is not None, "witness": w.to_dict() if w else None}, out)
        return 0 if w else 1

    if cmd == "verma":
        lam = weight_from_json(load_json(args.weight))
        verdict = verma_verdict(lam)
        d = {"weight": weight_to_json(lam), **verdict.to_dict(),
             "graded_dimensions": [graded_dimension(n) for n in range(args.depth + 1)],
             "singular_dimensions": {str(n): len(singular_vectors(lam, n)) for n in range(1, args.depth + 1)}}
        _emit(d, out)
        return 0 if verdict.irreducible else 1

    if cmd == "singular":
        lam = weight_from_json(load_json(args.weight))
        vecs = singular_vectors(lam, args.depth)
        _emit({"depth": args.depth, "dimension": len(vecs), "vectors": [v.records() for v in vecs]}, out)
        return 0 if vecs else 1

    if cmd == "omega":
        spec = spec_from_json(load_json(args.spec))
        l = omega_min_l(spec, args.m, args.n, window, args.lmax)
        _emit({"m": args.m, "n": args.n, "window": window, "l_max": args.lmax, "min_l": l}, out)
        return 0 if l is not None else 1

    if cmd == "jtest":
        T = tensor_from_json(load_json(args.tensor))
        inside = j_membership(T.parent, T)
        _emit({"in_J": inside, "pi": weight_vector_to_json(pi_map(T.parent, T))["coords"]}, out)
        return 0 if inside else 1

    if cmd == "lie-check":
        rep = check_lie_axioms(args.gap, window)
        d = {"lie_axioms": rep.to_dict()}
        ok = rep.ok
        if args.embedding:
            emb = vir_embedding_check(args.gap, max(window, 2))
            d["embedding"] = emb.to_dict()
            ok &= emb.ok
        _emit(d, out)
        return 0 if ok else 1

    if cmd == "examples":
        ok, results = corpus.run_corpus()
        for fx, r in zip(corpus.fixtures(), results):
            r["spec"] = spec_to_json(fx.spec())
        _emit({"ok": ok, "examples": results}, out)
        return 0 if ok else 1

    raise InputError(f"unknown command {cmd!r}")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _dispatch(args, out)
    except InputError as e:
        err.write(f"gapvir: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())

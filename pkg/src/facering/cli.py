"""Command-line surface.

One verb per invocation; inputs are the JSON documents described in io.py
(complex or graph, detected by field name). Graph inputs to complex verbs
are passed through their clique complex. Exit status: 0 success, 1 a
verification comparison failed, 2 unreadable input, 3 precondition not met,
4 resource guard tripped.
"""

import argparse
import json
import sys

from .alexander import alexander_dual
from .betti import classify_resolution, hochster_betti, pure_betti_sequence
from .complexes import f_vector, h_from_f, is_quasi_forest, quasi_forest_sequence
from .errors import DocumentError, PreconditionError, ResourceLimitError
from .formulas import betti_from_h_pure, vanishing_sum, verify_complex, verify_graph
from .generators import random_complex, random_quasi_forest
from .graphs import Graph, clique_complex, is_chordal, random_chordal
from .hilbert import multiplicity, series_from_complex
from .io import complex_document, document_text, graph_document, load_path, parse_document
from .bits import verts_of


def _parse_field(text):
    if text in ("q", "Q", "rationals"):
        return None
    try:
        p = int(text)
    except ValueError:
        raise DocumentError(f"--field wants 'q' or a prime, got {text!r}")
    if p < 2 or any(p % t == 0 for t in range(2, int(p**0.5) + 1)):
        raise DocumentError(f"--field wants a prime, got {p}")
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="facering",
        description="Exact face-ring computations and closed-form verification",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, needs_input=True, **kwargs):
        p = sub.add_parser(name, **kwargs)
        if needs_input:
            p.add_argument("input", help="path to a complex/graph document, or - for stdin")
        p.add_argument("--format", choices=["human", "structured"], default="human")
        p.add_argument("--field", default="q", help="q for rationals, or a prime")
        return p

    add("fvector", help="f-vector of a complex (or of a graph's clique complex)")
    add("hvector", help="h-vector of a complex")
    add("dual", help="Alexander dual, emitted as a complex document")
    add("hilbert", help="Hilbert series and multiplicity")
    b = add("betti", help="graded Betti numbers")
    b.add_argument("--method", choices=["oracle", "formula", "both"], default="oracle")
    b.add_argument(
        "--assume-pure",
        action="store_true",
        help="with --method formula: derive step degrees from the h-vector without oracle confirmation",
    )
    add("chordal", help="chordality with witness (graph input)")
    add("clique", help="clique complex of a graph, as a complex document")
    add("quasiforest", help="leaf-order recognition with witness")

    g = add("gen", needs_input=False, help="emit a generated instance document")
    g.add_argument("kind", choices=["chordal", "complex", "quasiforest"])
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--density", type=float, default=0.5)

    v = add("verify", needs_input=False, help="run every applicable verification check")
    v.add_argument("input", nargs="?", help="document path; omit when using --gen")
    v.add_argument("--gen", choices=["chordal", "complex", "quasiforest"])
    v.add_argument("--seed", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--density", type=float, default=0.5)
    return parser


def _load(args):
    return load_path(args.input)


def _as_complex(obj):
    return clique_complex(obj) if isinstance(obj, Graph) else obj


def _emit(args, human_lines, structured_obj):
    if args.format == "structured":
        print(json.dumps(structured_obj, separators=(", ", ": ")))
    else:
        for line in human_lines:
            print(line)


def _generate(kind, n, seed, density):
    if n is None or seed is None:
        raise PreconditionError("generation needs both --n and --seed")
    if kind == "chordal":
        return random_chordal(n, density, seed)
    if kind == "complex":
        return random_complex(n, seed)
    return random_quasi_forest(n, seed)


def _cmd_fvector(args):
    f = f_vector(_as_complex(_load(args)))
    _emit(args, [f"f = {f.entries}"], {"f": list(f.entries)})
    return 0


def _cmd_hvector(args):
    h = h_from_f(f_vector(_as_complex(_load(args))))
    _emit(args, [f"h = {h.entries}"], {"h": list(h.entries)})
    return 0


def _cmd_dual(args):
    doc = complex_document(alexander_dual(_as_complex(_load(args))))
    print(document_text(doc), end="")
    return 0


def _cmd_clique(args):
    obj = _load(args)
    if not isinstance(obj, Graph):
        raise PreconditionError("clique needs a graph document")
    print(document_text(complex_document(clique_complex(obj))), end="")
    return 0


def _cmd_hilbert(args):
    sc = _as_complex(_load(args))
    series = series_from_complex(sc)
    e = multiplicity(sc)
    _emit(
        args,
        [f"H(z) = {series}", f"multiplicity = {e}"],
        {
            "numerator": list(series.numerator),
            "denominator_exponent": series.denominator_exponent,
            "multiplicity": e,
        },
    )
    return 0


def _cmd_chordal(args):
    obj = _load(args)
    if not isinstance(obj, Graph):
        raise PreconditionError("chordal needs a graph document")
    flag, witness = is_chordal(obj)
    kind = "elimination order" if flag else "chordless cycle"
    _emit(
        args,
        [f"chordal: {str(flag).lower()}", f"{kind}: {list(witness)}"],
        {"chordal": flag, "witness": {"kind": kind, "vertices": list(witness)}},
    )
    return 0


def _cmd_quasiforest(args):
    sc = _as_complex(_load(args))
    flag, order = is_quasi_forest(sc)
    c, tails = quasi_forest_sequence(f_vector(sc))
    lines = [f"quasi-forest: {str(flag).lower()}"]
    structured = {
        "quasi_forest": flag,
        "expansion_coefficients": list(c),
        "tail_sums": list(tails),
    }
    if flag:
        order_sets = [list(verts_of(m)) for m in order]
        lines.append(f"leaf order: {order_sets}")
        structured["leaf_order"] = order_sets
    lines.append(f"expansion coefficients: {c}, tail sums: {tails}")
    _emit(args, lines, structured)
    return 0


def _infer_degrees_from_h(h, codim, n):
    # under a purity assumption the step degrees are exactly the positive
    # exponents with a nonzero alternating h-sum
    return [s for s in range(1, n + 1) if vanishing_sum(h, codim, s) != 0]


def _cmd_betti(args):
    field = _parse_field(args.field)
    sc = _as_complex(_load(args))
    n, d = sc.n, sc.d
    h = h_from_f(f_vector(sc))
    structured = {"n": n, "field": "rationals" if field is None else f"prime {field}"}
    lines = []
    status = 0

    table = shape = None
    if args.method in ("oracle", "both") or not args.assume_pure:
        table = hochster_betti(sc, field)
        shape = classify_resolution(table)

    if args.method in ("formula", "both") and not args.assume_pure and not shape.is_pure:
        raise PreconditionError("table is not pure; the closed-form Betti formula does not apply")

    if args.method in ("oracle", "both"):
        lines.append(table.diagram())
        structured["triples"] = [list(t) for t in table.triples()]
        structured["pure"] = shape.is_pure
        if shape.is_pure:
            structured["degrees"] = list(shape.degrees)

    formula_seq = None
    if args.method in ("formula", "both"):
        if args.assume_pure:
            degrees = _infer_degrees_from_h(h, n - d, n)
        else:
            degrees = list(shape.degrees)
        formula_seq = betti_from_h_pure(h, n, d, degrees)
        lines.append(f"formula degrees: {tuple(degrees)}")
        lines.append(f"formula betti:   {formula_seq}")
        structured["formula_degrees"] = list(degrees)
        structured["formula_betti"] = list(formula_seq)

    if args.method == "both":
        oracle_seq = pure_betti_sequence(table) if shape.is_pure else None
        verdict = "pass" if oracle_seq == formula_seq else "fail"
        lines.append(f"verdict: {verdict}")
        structured["verdict"] = verdict
        if verdict == "fail":
            status = 1
    _emit(args, lines, structured)
    return status


def _cmd_gen(args):
    obj = _generate(args.kind, args.n, args.seed, args.density)
    doc = graph_document(obj) if isinstance(obj, Graph) else complex_document(obj)
    print(document_text(doc), end="")
    return 0


def _cmd_verify(args):
    field = _parse_field(args.field)
    if args.gen:
        obj = _generate(args.gen, args.n, args.seed, args.density)
    elif args.input:
        obj = load_path(args.input)
    else:
        raise DocumentError("verify needs an input document or --gen")
    report = verify_graph(obj, field) if isinstance(obj, Graph) else verify_complex(obj, field)
    if args.format == "structured":
        for rec in report.records:
            print(json.dumps(rec.as_dict(), separators=(", ", ": ")))
        print(json.dumps({"overall": "pass" if report.ok else "fail", **report.counts()}))
    else:
        for rec in report.records:
            print(
                f"{rec.verdict.upper():>12}  {rec.check:<34} [{rec.rule}]"
                f" expected={rec.expected} actual={rec.actual}"
            )
        counts = ", ".join(f"{k}={v}" for k, v in sorted(report.counts().items()))
        print(f"overall: {'pass' if report.ok else 'FAIL'} ({counts})")
    return 0 if report.ok else 1


_COMMANDS = {
    "fvector": _cmd_fvector,
    "hvector": _cmd_hvector,
    "dual": _cmd_dual,
    "hilbert": _cmd_hilbert,
    "betti": _cmd_betti,
    "chordal": _cmd_chordal,
    "clique": _cmd_clique,
    "quasiforest": _cmd_quasiforest,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

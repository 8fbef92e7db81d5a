"""Command-line front end.

Exit codes: 0 success, 1 usage/parse/cap errors, 2 failed verification,
3 internal invariant violation.
"""

import argparse
import json
import os
import sys

from .cartan import TYPE_A, RankSpec
from .crystal import DEFAULT_NODE_CAP, TensorElement, canonical_form, explore_component
from .errors import CrystalError, InvariantViolation
from .insertion import insert
from .monomial import Monomial, parse_exponents
from .tableau import omega, tableau_to_path
from . import matrix_a, matrix_c

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


def _codec(spec):
    return matrix_a if spec.family == TYPE_A else matrix_c


def _node_cap(arg):
    if arg is not None:
        return arg
    env = os.environ.get("CRYSTAL_NODE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"CRYSTAL_NODE_CAP is not an integer: {env!r}")
    return DEFAULT_NODE_CAP


def _spec_for(args, texts):
    exps = [parse_exponents(t) for t in texts]
    top = max((i for e in exps for (i, _) in e), default=1)
    rank = args.rank if args.rank is not None else top
    if rank < 1:
        raise UsageError("rank must be at least 1")
    if top > rank:
        raise UsageError(f"monomial uses index {top} but rank is {rank}")
    spec = RankSpec(args.family, rank)
    return spec, [Monomial(spec, e) for e in exps]


def _compress(spec, mono, lenient=False):
    """(compressed matrix, compressed monomial, membership)."""
    codec = _codec(spec)
    if spec.family == TYPE_A:
        mat = codec.compress(codec.psi(mono))
    else:
        mat = codec.compress(codec.psi(mono), strict=not lenient)
    member = codec.is_n_member(mat)
    if member is None:
        raise InvariantViolation("compression did not reach the compressed set")
    return mat, codec.psi_inv(mat), member


def _emit(doc, text, fmt):
    if fmt == "json":
        return json.dumps(doc, sort_keys=True)
    return text


def cmd_normalize(args):
    _, (mono,) = _spec_for(args, [args.monomial])
    return EXIT_OK, _emit({"monomial": str(mono)}, str(mono), args.format)


def cmd_compress(args):
    spec, (mono,) = _spec_for(args, [args.monomial])
    mat, out, member = _compress(spec, mono, args.lenient)
    doc = {"monomial": str(out), "matrix": mat.to_json(),
           "lambda": list(member.lam.lam), "s": member.shift}
    text = "\n".join([f"N: {out}", f"lambda: {member.lam}", f"s: {member.shift}", str(mat)])
    return EXIT_OK, _emit(doc, text, args.format)


def cmd_act(args):
    spec, (mono,) = _spec_for(args, [args.monomial])
    spec.check_index(args.index)
    res = mono.f(args.index) if args.op == "f" else mono.e(args.index)
    text = "undefined" if res is None else str(res)
    return EXIT_OK, _emit({"result": None if res is None else str(res)}, text, args.format)


def cmd_tableau(args):
    spec, (mono,) = _spec_for(args, [args.monomial])
    mat, _, _ = _compress(spec, mono)
    t = omega(mat)
    text = t.to_text()
    if t.unnormalized:
        text = (text + "\n" if text else "") + "(unnormalized)"
    return EXIT_OK, _emit(t.to_json(), text, args.format)


def cmd_path(args):
    spec, (mono,) = _spec_for(args, [args.monomial])
    mat, _, _ = _compress(spec, mono)
    path = tableau_to_path(omega(mat))
    text = "\n".join(" ".join(str(x) for x in v.beta) for v in path.vertices())
    return EXIT_OK, _emit(path.to_json(), text, args.format)


def cmd_graph(args):
    _, (mono,) = _spec_for(args, [args.monomial])
    g = explore_component(mono, _node_cap(args.cap))
    if args.format == "json":
        return EXIT_OK, g.to_json()
    if args.format == "dot":
        return EXIT_OK, g.to_dot().rstrip("\n")
    labels = {k: label for k, (label, _) in g.nodes.items()}
    lines = [f"nodes: {len(g.nodes)}", f"edges: {len(g.edges)}"]
    lines += [f"{labels[s]} -{i}-> {labels[d]}" for s, i, d in g.edges]
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args):
    spec, (mono,) = _spec_for(args, [args.monomial])
    cap = _node_cap(args.cap)
    _, out, member = _compress(spec, mono, args.lenient)
    g1 = explore_component(mono, cap)
    g2 = explore_component(out, cap)
    iso = canonical_form(g1) == canonical_form(g2)
    doc = {"input_size": len(g1), "compressed_size": len(g2), "isomorphic": iso,
           "monomial": str(out), "lambda": list(member.lam.lam), "s": member.shift}
    text = "\n".join([f"input component: {len(g1)} nodes",
                      f"compressed component: {len(g2)} nodes",
                      f"isomorphic: {str(iso).lower()}",
                      f"N: {out}", f"lambda: {member.lam}", f"s: {member.shift}"])
    return (EXIT_OK if iso else EXIT_VERIFY), _emit(doc, text, args.format)


def cmd_insert(args):
    spec, (m1, m2) = _spec_for(args, [args.left, args.right])
    out = insert(m1, m2, strict=not args.lenient)
    member = _codec(spec).is_n_member(_codec(spec).psi(out))
    if member is None:
        raise InvariantViolation("insertion result is outside the compressed set")
    doc = {"monomial": str(out), "lambda": list(member.lam.lam), "s": member.shift}
    lines = [f"N: {out}", f"lambda: {member.lam}", f"s: {member.shift}"]
    code = EXIT_OK
    if args.verify:
        cap = _node_cap(args.cap)
        g1 = explore_component(TensorElement(m1, m2), cap)
        g2 = explore_component(out, cap)
        iso = canonical_form(g1) == canonical_form(g2)
        doc.update(tensor_size=len(g1), result_size=len(g2), isomorphic=iso)
        lines += [f"tensor component: {len(g1)} nodes", f"result component: {len(g2)} nodes",
                  f"isomorphic: {str(iso).lower()}"]
        code = EXIT_OK if iso else EXIT_VERIFY
    return code, _emit(doc, "\n".join(lines), args.format)


def build_parser():
    p = argparse.ArgumentParser(prog="crystalcompress",
                                description="Compress Nakajima monomials into highest weight components.")
    p.add_argument("--family", choices=["A", "C"], default="A")
    p.add_argument("--rank", type=int, default=None, help="defaults to the largest index in the input")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="print a monomial in canonical form")
    s.add_argument("monomial")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("compress", help="compressed monomial, matrix, lambda and s")
    s.add_argument("monomial")
    s.add_argument("--lenient", action="store_true",
                   help="type C: do not reject splits with a pairing conflict")
    s.set_defaults(func=cmd_compress)

    s = sub.add_parser("act", help="apply one lowering or raising operator")
    s.add_argument("--op", choices=["f", "e"], required=True)
    s.add_argument("--index", type=int, required=True)
    s.add_argument("monomial")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("tableau", help="reversed tableau of the compressed matrix")
    s.add_argument("monomial")
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("path", help="polyline of the tableau reading word")
    s.add_argument("monomial")
    s.set_defaults(func=cmd_path)

    s = sub.add_parser("graph", help="connected component of the crystal graph")
    s.add_argument("monomial")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="compare the components of M and of its compression")
    s.add_argument("monomial")
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--lenient", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("insert", help="insert the first monomial into the second")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--lenient", action="store_true")
    s.set_defaults(func=cmd_insert)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code == 0 else EXIT_USAGE
    try:
        code, out = args.func(args)
    except InvariantViolation as ex:
        print(f"invariant violation: {ex}", file=sys.stderr)
        return EXIT_INVARIANT
    except (CrystalError, UsageError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: `holant <command> ...`."""

import argparse
import sys

from .classify import FRAMEWORKS, OutOfScope, classify_23regular
from .fkt import count_weighted_pm, pfaffian
from .gadgets import REGISTRY, ConstructionError, crossover_params, crossover_report, verify_named_gadget
from .grid import GridError, GridParseError, brute_holant, dump_grid, format_signature, parse_grid, parse_signature_tokens
from .matchgate import SynthesisError, dump_matchgate, holographic_solve, synthesize_matchgate
from .scalar import BackendError, format_scalar, parse_scalar
from .signatures import SymSignature
from .tractable import TractableError, eval_affine, eval_arity_le2, eval_product
from .transform import BasisError, basis, transform_grid, transform_signature

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY, EXIT_SCOPE = 0, 1, 2, 3, 4

AUTO_ORDER = ("arity2", "product", "affine", "holographic", "brute")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _basis_arg(vals):
    if vals is None:
        return None
    toks = [t for v in vals for t in v.replace(",", " ").split()]
    if len(toks) != 4:
        raise UsageError("--basis takes four scalars, row-major")
    try:
        return basis([parse_scalar(t) for t in toks])
    except ValueError as exc:
        raise GridParseError(0, "bad basis: %s" % exc)


def _signature_arg(text):
    text = text.strip()
    if text.startswith("["):
        body = text.strip("[]")
        return SymSignature([parse_scalar(t) for t in body.replace(",", " ").split()])
    return parse_signature_tokens(text.split())


def _signature_list(text):
    """One signature literal per line; `signature <name> ...` grid lines are accepted too."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "signature":
            toks = toks[2:]
        elif toks[0] in ("vertex", "edge", "dangling", "rotation", "external"):
            continue
        try:
            out.append(parse_signature_tokens(toks))
        except (ValueError, ZeroDivisionError) as exc:
            raise GridParseError(lineno, str(exc))
    return out


def _sig_text(f):
    if isinstance(f, SymSignature):
        return "[" + ",".join(format_scalar(x) for x in f.entries) + "]"
    return format_signature(f)


# ------------------------------------------------------------------ evaluate

def _run_method(method, gf, T):
    if method == "fkt":
        return count_weighted_pm(gf.to_graph())
    grid = gf.to_grid()
    if method == "brute":
        return brute_holant(grid)
    if method == "affine":
        return eval_affine(grid)
    if method == "product":
        return eval_product(grid)
    if method == "arity2":
        return eval_arity_le2(grid)
    if method == "holographic":
        return holographic_solve(grid, T)
    raise UsageError("unknown method %s" % method)


def cmd_evaluate(args, out):
    gf = parse_grid(_read(args.input))
    T = _basis_arg(args.basis)
    if args.method != "auto":
        try:
            val = _run_method(args.method, gf, T)
        except (TractableError, SynthesisError) as exc:
            print("method %s not applicable: %s" % (args.method, exc), file=sys.stderr)
            return EXIT_SCOPE
        out.write(format_scalar(val) + "\n")
        return EXIT_OK
    reasons = []
    for m in AUTO_ORDER:
        try:
            val = _run_method(m, gf, T)
        except (TractableError, SynthesisError, GridError, BasisError) as exc:
            reasons.append("%s: %s" % (m, exc))
            continue
        if args.verbose:
            print("method %s" % m, file=sys.stderr)
        out.write(format_scalar(val) + "\n")
        return EXIT_OK
    print("no method applies:\n  " + "\n  ".join(reasons), file=sys.stderr)
    return EXIT_SCOPE


# ------------------------------------------------------------------ classify

def cmd_classify(args, out):
    F = []
    if args.input:
        F.extend(_signature_list(_read(args.input)))
    for s in args.signature or ():
        F.append(_signature_arg(s))
    if not F:
        raise UsageError("classify needs --input or --signature")
    for f in F:
        if not isinstance(f, SymSignature):
            raise OutOfScope("classification is defined for symmetric signatures only")
    if args.framework == "23reg":
        ys = [f for f in F if f.arity == 2]
        xs = [f for f in F if f.arity == 3]
        if len(F) != 2 or len(ys) != 1 or len(xs) != 1:
            raise OutOfScope("23reg expects one binary and one ternary signature")
        res = classify_23regular(ys[0], xs[0])
    else:
        res = FRAMEWORKS[args.framework](F)
    out.write(str(res) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- synthesize

def cmd_synthesize(args, out):
    f = _signature_arg(args.signature)
    T = _basis_arg(args.basis)
    try:
        gate = synthesize_matchgate(f, T)
    except SynthesisError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_SCOPE
    out.write(dump_matchgate(gate))
    return EXIT_OK


# ------------------------------------------------------------- verify-gadget

def _gadget_param(key, text):
    if key in ("i", "j", "steps"):
        return int(text)
    if key in ("f", "pin"):
        return [parse_scalar(t) for t in text.strip("[]").replace(",", " ").split()]
    return parse_scalar(text)


def cmd_verify_gadget(args, out):
    params = {}
    for p in args.params:
        if "=" not in p:
            raise UsageError("gadget parameters are written key=value, got %r" % p)
        k, v = p.split("=", 1)
        try:
            params[k] = _gadget_param(k, v)
        except ValueError as exc:
            raise GridParseError(0, "parameter %s: %s" % (k, exc))
    if args.name == "crossover":
        if set(params) != {"c"}:
            raise UsageError("crossover takes c=<scalar>")
        try:
            p = crossover_params(params["c"])
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_SCOPE
        rep = crossover_report(p)
        for k in ("x", "y", "t", "z"):
            out.write("%s %s\n" % (k, format_scalar(getattr(p, k))))
        for k in ("A", "B", "C", "D", "expected"):
            out.write("%s %s\n" % (k, format_scalar(rep[k])))
        ok = rep["residual"] <= 1e-9
        out.write("residual %.3g\n" % rep["residual"])
        out.write("PASS\n" if ok else "FAIL\n")
        return EXIT_OK if ok else EXIT_VERIFY
    if args.name not in REGISTRY:
        raise UsageError("unknown gadget %s; known: crossover, %s" % (args.name, ", ".join(sorted(REGISTRY))))
    want_keys = set(REGISTRY[args.name].params)
    if set(params) != want_keys:
        raise UsageError("%s takes %s" % (args.name, " ".join("%s=..." % k for k in REGISTRY[args.name].params)))
    got, want, ok = verify_named_gadget(args.name, **params)
    out.write("computed %s\n" % _sig_text(got))
    out.write("expected %s\n" % ("(no recorded value)" if want is None else _sig_text(want)))
    out.write("PASS %s\n" % _sig_text(got) if ok else "FAIL\n")
    return EXIT_OK if ok else EXIT_VERIFY


# ----------------------------------------------------------------- transform

def cmd_transform(args, out):
    T = _basis_arg(args.basis)
    if T is None:
        raise UsageError("transform needs --basis")
    if args.signature:
        g = transform_signature(_signature_arg(args.signature), T, args.variance)
        out.write(format_signature(g) + "\n")
        return EXIT_OK
    if not args.input:
        raise UsageError("transform needs --input or --signature")
    grid = parse_grid(_read(args.input)).to_grid()
    out.write(dump_grid(transform_grid(grid, T)))
    return EXIT_OK


# ------------------------------------------------------------------ pfaffian

def _read_matrix(text):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([parse_scalar(t) for t in line.replace(",", " ").split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise GridParseError(lineno, str(exc))
    if any(len(r) != len(rows) for r in rows):
        raise GridParseError(0, "matrix must be square")
    return rows


def cmd_pfaffian(args, out):
    M = _read_matrix(_read(args.input))
    try:
        pf = pfaffian(M)
    except ValueError as exc:
        raise GridParseError(0, str(exc))
    out.write(format_scalar(pf) + "\n")
    return EXIT_OK


def build_parser():
    p = _Parser(prog="holant", description="Holant evaluators, dichotomy classifiers and gadget checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    e = sub.add_parser("evaluate", help="Holant value of a grid file")
    e.add_argument("--method", default="auto",
                   choices=["brute", "fkt", "affine", "product", "arity2", "holographic", "auto"])
    e.add_argument("--basis", nargs="+", help="four scalars, row-major")
    e.add_argument("--input", required=True)
    e.add_argument("--verbose", action="store_true", help="report the method auto picked on stderr")
    e.set_defaults(func=cmd_evaluate)

    c = sub.add_parser("classify", help="dichotomy verdict for a signature set")
    c.add_argument("--framework", required=True, choices=sorted(FRAMEWORKS) + ["23reg"])
    c.add_argument("--input")
    c.add_argument("--signature", action="append", help="literal such as 'sym 2 1 0 1' or '[1,0,1]'")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("synthesize", help="matchgate realizing a signature")
    s.add_argument("--signature", required=True)
    s.add_argument("--basis", nargs="+")
    s.set_defaults(func=cmd_synthesize)

    v = sub.add_parser("verify-gadget", help="contract a named gadget and compare with its closed form")
    v.add_argument("name")
    v.add_argument("params", nargs="*", help="key=value")
    v.set_defaults(func=cmd_verify_gadget)

    t = sub.add_parser("transform", help="apply a basis to a bipartite grid or a signature")
    t.add_argument("--basis", nargs="+", required=True)
    t.add_argument("--input")
    t.add_argument("--signature")
    t.add_argument("--variance", default="contravariant", choices=["contravariant", "covariant"])
    t.set_defaults(func=cmd_transform)

    f = sub.add_parser("pfaffian", help="Pfaffian of a skew-symmetric matrix file")
    f.add_argument("--input", required=True)
    f.set_defaults(func=cmd_pfaffian)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except GridParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print("cannot read input: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except OutOfScope as exc:
        print("out of scope: %s" % exc, file=sys.stderr)
        return EXIT_SCOPE
    except ConstructionError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY
    except (GridError, BasisError, BackendError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

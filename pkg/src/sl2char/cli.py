"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 degenerate input, 3 internal
invariant violation.  Errors print a single ``error: ...`` line on stderr.
"""
import argparse
import json
import sys

from .algebra import XYZ, QuadExt, as_rat
from .errors import DegenerateCharacterError, InputError, InvariantError, Sl2Error
from .fibered import FiberedSymbolic, fibered_spec, fibered_torsion
from .saito import build_saito_system, reconstruct, tautological_character, tautological_rep
from .skein import delta, trace_polynomial
from .words import Presentation, parse_word

FILE_KEYS = {"generators", "relators", "boundary", "phi", "point"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# -- input parsing ------------------------------------------------------------

def parse_point(tokens):
    """``["x=1/2", "y=3", "z=-1"]`` -> ``{"x": 1/2, ...}``."""
    pt = {}
    for tok in tokens:
        if "=" not in tok:
            raise InputError(f"expected var=value, got {tok!r}")
        k, v = tok.split("=", 1)
        k = k.strip()
        if k not in XYZ:
            raise InputError(f"unknown coordinate {k!r}")
        if k in pt:
            raise InputError(f"coordinate {k!r} given twice")
        pt[k] = as_rat(v)
    missing = [v for v in XYZ if v not in pt]
    if missing:
        raise InputError(f"missing coordinate {missing[0]!r}")
    return pt


def load_job(path):
    """Read and validate a JSON job file."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("job file must contain a JSON object")
    extra = set(data) - FILE_KEYS
    if extra:
        raise InputError(f"unknown key {sorted(extra)[0]!r}")
    gens = data.get("generators", ["a", "b"])
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise InputError("'generators' must be an array of strings")
    rels = data.get("relators", [])
    if not isinstance(rels, list) or not all(isinstance(r, str) for r in rels):
        raise InputError("'relators' must be an array of word strings")
    boundary = data.get("boundary", [])
    if not isinstance(boundary, list):
        raise InputError("'boundary' must be an array")
    for b in boundary:
        if not isinstance(b, dict) or set(b) - {"name", "word", "genus"} or "word" not in b:
            raise InputError("boundary entries must be objects with name, word, genus")
        if not isinstance(b["word"], str):
            raise InputError("boundary words must be strings")
    pres = Presentation.build(gens, rels, boundary)
    phi = data.get("phi")
    if phi is not None:
        if not isinstance(phi, dict) or not all(isinstance(v, str) for v in phi.values()):
            raise InputError("'phi' must map generators to word strings")
        for g, w in phi.items():
            if g not in pres.generators:
                raise InputError(f"undeclared generator '{g}'")
            parse_word(w, pres.generators)
    point = data.get("point")
    if point is not None:
        if not isinstance(point, dict) or not all(isinstance(v, (str, int)) for v in point.values()):
            raise InputError("'point' must map x, y, z to rational strings")
        point = parse_point([f"{k}={v}" for k, v in point.items()])
    return {"presentation": pres, "phi": phi, "point": point}


# -- formatting ------------------------------------------------------------------

def fmt(e):
    if isinstance(e, QuadExt) and e.is_rational():
        return str(e.a)
    return str(e)


def fmt_matrix(m):
    return "\n".join("[" + ", ".join(fmt(e) for e in row) + "]" for row in m.rows)


# -- commands ---------------------------------------------------------------------

def cmd_trace(args, out):
    out.write(f"{trace_polynomial(parse_word(args.word))}\n")


def cmd_delta(args, out):
    out.write(f"{delta(parse_word(args.alpha), parse_word(args.beta))}\n")


def cmd_reconstruct(args, out):
    point = parse_point(args.char) if args.char else None
    rho = tautological_rep(point)
    phi = tautological_character(point)
    try:
        sys_ = build_saito_system(phi, "a", "b", rho.images["a"], rho.images["b"])
    except ZeroDivisionError as exc:
        raise DegenerateCharacterError(str(exc)) from None
    m = reconstruct(sys_, parse_word(args.word))
    if m != rho(parse_word(args.word)):
        raise InvariantError("reconstruction differs from the matrix product")
    out.write(fmt_matrix(m) + "\n")


def cmd_cohomology(args, out):
    from .cohomology import mapping_torus_complex, presentation_complex

    job = load_job(args.file)
    pres = job["presentation"]
    if tuple(pres.generators) != ("a", "b"):
        raise InputError("cohomology uses the tautological representation: generators must be a, b")
    rho = tautological_rep(job["point"])
    if job["phi"] is not None:
        if not pres.is_free:
            raise InputError("a monodromy needs a free fiber group")
        if set(job["phi"]) != {"a", "b"}:
            raise InputError("monodromy must give images of both a and b")
        c = mapping_torus_complex(("a", "b"), rho, job["phi"]).complex
        out.write("complex: mapping torus\n")
    else:
        c = presentation_complex(pres, rho)
        out.write("complex: presentation\n")
    h = c.cohomology_dims()
    out.write("cochain dims: " + " ".join(str(d) for d in c.dims) + "\n")
    for i, d in enumerate(h):
        out.write(f"h^{i} = {d}\n")
    if pres.boundary:
        out.write(f"expected h^1 = {pres.expected_h1()}\n")


def cmd_torsion(args, out):
    from .torsion import torsion_form

    pres, boundary = None, ("a", "b", "BA")
    if args.file:
        job = load_job(args.file)
        pres = job["presentation"]
        if pres.boundary:
            boundary = tuple(str(b.word) for b in pres.boundary)
    sign = int(args.sign)
    kind = "handlebody" if args.kind == "handlebody" else "product_circle"
    if args.normalized and kind == "handlebody":
        raise InputError("--normalized applies to --kind product-circle")
    form = torsion_form(pres, kind, sign, boundary, normalized=args.normalized)
    out.write(f"{form}\n")


def cmd_fibered(args, out):
    job = load_job(args.file)
    pres = job["presentation"]
    if job["phi"] is None:
        raise InputError("fibered jobs need 'phi'")
    if not pres.boundary:
        raise InputError("fibered jobs need boundary curves")
    spec = fibered_spec(job["phi"], [str(b.word) for b in pres.boundary])
    point = parse_point(args.point) if args.point else job["point"]
    res = fibered_torsion(spec, point)
    if isinstance(res, FiberedSymbolic):
        out.write("jacobian:\n" + fmt_matrix(res.jacobian) + "\n")
        for w, g in zip(res.wedge, res.gradients):
            out.write(f"grad {w}: [" + ", ".join(str(e) for e in g) + "]\n")
        out.write("value: 1/2 " + "^".join(res.wedge) + " / det((J - I)|_W) at fixed points\n")
    elif point is not None:
        from .algebra import rat_str
        out.write(f"{rat_str(res)} {'^'.join(spec.wedge)} (up to sign)\n")
    else:
        out.write(f"{res}\n")


def cmd_selfcheck(args, out):
    from .selfcheck import run_selfcheck

    if args.words < 0 or (args.trials is not None and args.trials < 0):
        raise InputError("sizes must be non-negative")
    results = run_selfcheck(seed=args.seed, max_len=args.words, trials=args.trials)
    failed = None
    for r in results:
        status = "ok" if r.ok else "FAIL"
        out.write(f"{r.name}: {r.passed}/{r.total} {status}\n")
        if not r.ok and failed is None:
            failed = r
    if failed is not None:
        raise InvariantError(f"selfcheck {failed.name} failed: {failed.counterexample}")
    out.write("all suites passed\n")


def build_parser():
    p = _Parser(prog="sl2char", description="Exact SL2 character-variety invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("trace", help="trace polynomial of a word in a, b")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_trace)
    s = sub.add_parser("delta", help="discriminant of a pair of words")
    s.add_argument("--alpha", required=True)
    s.add_argument("--beta", required=True)
    s.set_defaults(func=cmd_delta)
    s = sub.add_parser("reconstruct", help="rebuild rho(w) from character values")
    s.add_argument("--word", required=True)
    s.add_argument("--char", nargs=3, metavar="v=q")
    s.set_defaults(func=cmd_reconstruct)
    s = sub.add_parser("cohomology", help="twisted cohomology of a presentation")
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_cohomology)
    s = sub.add_parser("torsion", help="torsion volume form")
    s.add_argument("--kind", required=True, choices=["handlebody", "product-circle"])
    s.add_argument("--file")
    s.add_argument("--sign", default="+1", choices=["+1", "-1", "1"])
    s.add_argument("--normalized", action="store_true")
    s.set_defaults(func=cmd_torsion)
    s = sub.add_parser("fibered", help="torsion of a mapping torus")
    s.add_argument("--file", required=True)
    s.add_argument("--point", nargs=3, metavar="v=q")
    s.set_defaults(func=cmd_fibered)
    s = sub.add_parser("selfcheck", help="randomized property suites")
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--words", type=int, default=12)
    s.add_argument("--trials", type=int, default=None)
    s.set_defaults(func=cmd_selfcheck)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except Sl2Error as exc:
        err.write(f"error: {_one_line(exc)}\n")
        return exc.exit_code
    except ZeroDivisionError as exc:
        err.write(f"error: division by zero: {_one_line(exc)}\n")
        return 2
    except AssertionError as exc:
        err.write(f"error: internal check failed: {_one_line(exc)}\n")
        return 3
    return 0


def _one_line(exc):
    return " ".join(str(exc).split()) or type(exc).__name__


def main():
    sys.exit(run())

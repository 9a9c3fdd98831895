"""Command-line front end.

    bbwcalc restrict --ambient 2 6 --conormal "sym(3,dual(U))" --target "end0(wedge(2,Q))"

Every subcommand accepts ``--format json`` for machine-readable output.  Exit
codes: 0 success, 2 usage, 3 parse error, 4 precondition failure, 5 internal
inconsistency.
"""
import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import bundles, chow, koszul
from .bbw import cohomology_table, euler_char_ambient
from .dsl import ParseError, parse
from .errors import BBWCalcError, InternalInconsistency

SCHEMA_VERSION = 1
CACHE_ENV = "BBWCALC_CACHE_DIR"

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4, 5


class Failure(Exception):
    def __init__(self, code, payload):
        super().__init__(payload["message"])
        self.code = code
        self.payload = payload


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# --------------------------------------------------------------------------
# setup resolution

def _parse_arg(text, what):
    try:
        return parse(text)
    except ParseError as e:
        raise Failure(EXIT_PARSE, {"type": "parse_error", "kind": e.kind, "field": what, "message": str(e),
                                   "offset": e.offset, "expected": e.expected}) from None


def _precondition(message):
    return Failure(EXIT_PRECONDITION, {"type": "precondition", "message": message})


def _resolve(args, need_setup):
    k = n = conormal_text = None
    if getattr(args, "setup_file", None):
        try:
            doc = json.loads(Path(args.setup_file).read_text())
            k, n, conormal_text = int(doc["k"]), int(doc["n"]), str(doc["conormal"])
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise _precondition(f"unreadable setup file {args.setup_file}: {e}") from None
        if args.ambient and tuple(args.ambient) != (k, n):
            raise _precondition(f"--ambient {args.ambient[0]} {args.ambient[1]} disagrees with setup file Gr({k},{n})")
        if args.conormal and args.conormal.replace(" ", "") != conormal_text.replace(" ", ""):
            raise _precondition("--conormal disagrees with the setup file")
    elif args.ambient:
        k, n = args.ambient
        conormal_text = args.conormal
    if k is None:
        raise _precondition("an ambient Grassmannian is required (--ambient K N or --setup-file)")
    ctx = bundles.GrassmannianContext(k, n)
    setup = None
    if conormal_text:
        setup = koszul.orient(ctx, _parse_arg(conormal_text, "conormal"))
    elif need_setup:
        raise _precondition(f"command '{args.command}' needs a zero-locus setup (--conormal or --setup-file)")
    return ctx, setup


def _setup_json(ctx, setup):
    return {"k": ctx.k, "n": ctx.n, "conormal": str(setup.conormal) if setup else None}


# --------------------------------------------------------------------------
# commands

def _table_json(table, max_degree, exactness):
    degrees = {}
    for p in range(max_degree + 1):
        entries = table.entries(p)
        degrees[str(p)] = {
            "total_dim": sum(m * d for _, m, d in entries),
            "summands": [{"weight": list(w), "mult": m, "dim": d} for w, m, d in entries],
        }
    return {"degrees": degrees, "euler": table.euler, "exactness": exactness}


def cmd_decompose(args):
    ctx, setup = _resolve(args, False)
    target = _parse_arg(args.target, "target")
    summands = bundles.normalize(target, ctx)
    return ctx, setup, {
        "rank": bundles.rank(target, ctx),
        "summands": [{"alpha": list(s.alpha), "beta": list(s.beta), "mult": s.multiplicity, "rank": s.rank}
                     for s in summands],
    }


def cmd_cohomology(args):
    ctx, setup = _resolve(args, False)
    table = cohomology_table(_parse_arg(args.target, "target"), ctx)
    return ctx, setup, _table_json(table, ctx.dim, "exact")


def cmd_restrict(args):
    ctx, setup = _resolve(args, True)
    res = koszul.restrict_cohomology(setup, _parse_arg(args.target, "target"))
    out = _table_json(res.table, setup.dim_X, res.exactness)
    out["support"] = [list(c) for c in res.support]
    out["conflicting_cells"] = [[list(a), list(b)] for a, b in res.conflicting_cells]
    return ctx, setup, out


def cmd_euler(args):
    ctx, setup = _resolve(args, False)
    target = _parse_arg(args.target, "target")
    if setup is None:
        return ctx, setup, {"euler": euler_char_ambient(target, ctx), "space": str(ctx)}
    value = koszul.euler_char_X(setup, target)
    hrr = chow.hrr_euler(setup, target)
    if hrr != value:
        raise InternalInconsistency(f"Koszul Euler characteristic {value} != Riemann-Roch {hrr}")
    return ctx, setup, {"euler": value, "hrr": int(hrr), "space": "X"}


def cmd_chern(args):
    need = args.basis != "schubert"
    ctx, setup = _resolve(args, need)
    target = _parse_arg(args.target, "target")
    cls = chow.chern_character(target, ctx) if args.kind == "ch" else chow.total_chern(target, ctx)
    if args.basis == "schubert":
        coeffs = {d: {str(list(lam)): c for lam, c in sorted(part.items())} for d, part in cls.by_degree().items()}
        return ctx, setup, {"kind": args.kind, "basis": "schubert", "coefficients": coeffs}
    coords = chow.to_h_basis(setup, cls) if args.basis == "h" else chow.to_intrinsic_basis(setup, cls)
    return ctx, setup, {"kind": args.kind, "basis": args.basis, "coefficients": coords.coords, "text": str(coords)}


def cmd_discriminant(args):
    ctx, setup = _resolve(args, False)
    delta = chow.discriminant(_parse_arg(args.target, "target"), ctx)
    return ctx, setup, {"coefficients": {str(list(lam)): c for lam, c in sorted(delta.part(2).coeffs.items())}}


def cmd_modularity(args):
    ctx, setup = _resolve(args, True)
    cert = chow.modularity_check(setup, _parse_arg(args.target, "target"))
    return ctx, setup, {
        "lambda": cert.lam,
        "certified": cert.certified,
        "pairings": {str(list(lam)): list(v) for lam, v in sorted(cert.pairings.items())},
        "assumption": cert.assumption,
    }


def cmd_lambda(args):
    if args.sym2:
        value = chow.sym2_discriminant_coefficient(args.rank)
        label = f"sym2 rank {args.rank}"
    else:
        value = chow.wedge_discriminant_coefficient(args.rank, args.wedge)
        label = f"wedge {args.wedge} rank {args.rank}"
    return None, None, {"lambda": value, "functor": label}


COMMANDS = {
    "decompose": cmd_decompose,
    "cohomology": cmd_cohomology,
    "restrict": cmd_restrict,
    "euler": cmd_euler,
    "chern": cmd_chern,
    "discriminant": cmd_discriminant,
    "modularity": cmd_modularity,
    "lambda-coefficient": cmd_lambda,
}


# --------------------------------------------------------------------------
# rendering

def _render_text(command, doc):
    r = doc["result"]
    head = []
    if doc.get("setup"):
        s = doc["setup"]
        head.append(f"Gr({s['k']},{s['n']})" + (f", conormal {s['conormal']}" if s["conormal"] else ""))
    if doc.get("target"):
        head.append(f"target {doc['target']}")
    lines = ["; ".join(head)] if head else []
    if "degrees" in r:
        rows = []
        for p, cell in r["degrees"].items():
            if cell["total_dim"]:
                parts = " + ".join(
                    (f"{s['mult']}*" if s["mult"] != 1 else "") + f"S{tuple(s['weight'])}V [{s['dim']}]"
                    for s in cell["summands"]
                )
                rows.append(f"  {parts}    if i = {p}")
        if rows:
            lines.append("H^i = {")
            lines += rows
            lines.append("  0    otherwise")
            lines.append("}")
        else:
            lines.append("H^i = 0 for all i")
        lines.append(f"dims {[c['total_dim'] for c in r['degrees'].values()]}  euler {r['euler']}  ({r['exactness']})")
        if r.get("conflicting_cells"):
            lines.append(f"possible differentials between cells {r['conflicting_cells']}")
    elif command == "decompose":
        lines.append(f"rank {r['rank']}")
        for s in r["summands"]:
            m = f"{s['mult']}*" if s["mult"] != 1 else ""
            lines.append(f"  {m}S{tuple(s['alpha'])}Q (x) S{tuple(s['beta'])}U   rank {s['rank']}")
    elif command == "chern":
        if "text" in r:
            lines.append(r["text"])
        else:
            for d, part in r["coefficients"].items():
                lines.append(f"  degree {d}: " + " + ".join(f"({c})*sigma{lam}" for lam, c in part.items()))
    else:
        for key, value in r.items():
            if key != "pairings":
                lines.append(f"{key}: {_jsonable(value)}")
    return "\n".join(lines)


def _cache_path(argv):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    digest = hashlib.sha256(json.dumps([SCHEMA_VERSION] + list(argv)).encode()).hexdigest()
    return Path(root) / f"{digest}.json"


def _atomic_write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def build_parser():
    parser = argparse.ArgumentParser(prog="bbwcalc", description="Exact cohomology and Chern classes of homogeneous bundles on Grassmannians")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, target=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--ambient", nargs=2, type=int, metavar=("K", "N"))
        p.add_argument("--conormal", metavar="EXPR", help="bundle cutting X, or its dual; orientation is detected")
        p.add_argument("--setup-file", metavar="PATH", help='JSON document {"k":..,"n":..,"conormal":..}')
        p.add_argument("--format", choices=("text", "json"), default="text")
        if target:
            p.add_argument("--target", required=True, metavar="EXPR")
        return p

    add("decompose", "irreducible summands of a bundle")
    add("cohomology", "cohomology on the ambient Grassmannian")
    add("restrict", "cohomology of the restriction to X")
    add("euler", "Euler characteristic (on X if a setup is given)")
    p = add("chern", "Chern character or total Chern class")
    p.add_argument("--kind", choices=("ch", "c"), default="ch")
    p.add_argument("--basis", choices=("schubert", "h", "intrinsic"), default="schubert")
    add("discriminant", "discriminant ch1^2 - 2r ch2 in Schubert classes")
    add("modularity", "modularity certificate on X")
    p = sub.add_parser("lambda-coefficient", help="discriminant scaling of wedge^p or Sym^2")
    p.add_argument("--rank", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--wedge", type=int, metavar="P")
    g.add_argument("--sym2", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def run(argv):
    """Run one command; returns (exit code, rendered output)."""
    args = build_parser().parse_args(argv)
    cache = _cache_path(argv)
    if cache is not None and cache.exists():
        return EXIT_OK, cache.read_text()
    try:
        ctx, setup, result = COMMANDS[args.command](args)
    except Failure as f:
        code, err = f.code, f.payload
    except InternalInconsistency as e:
        code, err = EXIT_INTERNAL, {"type": "internal_inconsistency", "message": str(e)}
    except BBWCalcError as e:
        code, err = EXIT_PRECONDITION, {"type": type(e).__name__, "message": str(e)}
    else:
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command}
        if ctx is not None:
            doc["setup"] = _setup_json(ctx, setup)
        if getattr(args, "target", None):
            doc["target"] = str(parse(args.target))
        doc["result"] = _jsonable(result)
        if args.format == "json":
            text = json.dumps(doc, sort_keys=False, indent=2)
        else:
            text = _render_text(args.command, doc)
        if cache is not None:
            _atomic_write(cache, text)
        return EXIT_OK, text
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "error": err}
    text = json.dumps(doc, indent=2) if args.format == "json" else f"error: {err['message']}"
    return code, text


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, text = run(argv)
    print(text, file=sys.stdout if code == EXIT_OK or "--format" in argv else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

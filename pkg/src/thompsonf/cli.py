"""Command line entry point: ``thompsonf <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (a one-line JSON object on
stderr) and 2 on a usage error.
"""

import argparse
import json
import sys

from . import errors
from .conjugate import collision_pairs, conjugate_nf
from .experiment import ExperimentConfig, load_config, run_experiment
from .partition import classify
from .rewrite import f2_shape, normalize
from .selftest import run_selftest
from .spectral import DEFAULT_ELEMENT_CAP, enumerate_ball
from .words import format_word, parse_word


def _emit(obj, out):
    out.write(json.dumps(obj) + "\n")


def cmd_normalize(args, out):
    trace = [] if args.trace else None
    nf = normalize(parse_word(args.word), trace=trace)
    for step in trace or ():
        _emit(step, out)
    _emit({"nf": format_word(nf)}, out)


def cmd_classify(args, out):
    nf = normalize(parse_word(args.word))
    _emit({"nf": format_word(nf), "class": str(classify(nf))}, out)


def cmd_conjugate(args, out):
    if args.i <= 0:
        raise ValueError("--i must be positive")
    w = normalize(parse_word(args.word))
    res = conjugate_nf(args.i, f2_shape(w))
    _emit({"input": format_word(w), **res.as_dict()}, out)


def cmd_collide(args, out):
    pairs = collision_pairs(parse_word(args.w1), parse_word(args.w2), args.imax)
    _emit({"pairs": [list(p) for p in pairs]}, out)


def cmd_enumerate(args, out):
    basis = enumerate_ball(args.radius, args.cap)
    if args.counts:
        _emit({"radius": args.radius,
               "ball_sizes": [basis.size(r) for r in range(args.radius + 1)],
               "sphere_sizes": basis.sphere_sizes}, out)
    else:
        for w in basis.elements:
            out.write(format_word(w) + "\n")


def _experiment_config(args):
    values = {}
    if args.config:
        with open(args.config) as fh:
            values.update(load_config(fh.read()))
    flags = {"n_max": args.nmax, "tol": args.tol, "max_iter": args.max_iter,
             "seed": args.seed, "element_cap": args.cap, "output_format": args.format,
             "threads": args.threads}
    if args.radii is not None:
        flags["radii"] = [int(x) for x in args.radii.split(",")]
    values.update({k: v for k, v in flags.items() if v is not None})
    return ExperimentConfig(**values).validate()


def cmd_spectra(args, out):
    config = _experiment_config(args)
    text = run_experiment(config).render(config.output_format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_selftest(args, out):
    results = run_selftest()
    failed = [name for name, ok in results if not ok]
    _emit({"checks": len(results), "failed": failed}, out)
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="thompsonf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="normal form of a word")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true", help="print each rewrite step")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("classify", help="sector F1..F5 of a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("conjugate", help="closed-form normal form of x0^i x1 x0^-i w, w in F2")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("word")
    s.set_defaults(func=cmd_conjugate)

    s = sub.add_parser("collide", help="pairs (i, j) with x0^i x1 x0^-i w1 = x0^j x1 x0^-j w2")
    s.add_argument("w1")
    s.add_argument("w2")
    s.add_argument("--imax", type=int, default=10)
    s.set_defaults(func=cmd_collide)

    s = sub.add_parser("enumerate", help="elements of the Cayley ball")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--counts", action="store_true", help="print ball sizes only")
    s.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("spectra", help="norm estimates of the truncated operators")
    s.add_argument("--nmax", type=int)
    s.add_argument("--radii", help="comma separated, ascending")
    s.add_argument("--tol", type=float)
    s.add_argument("--max-iter", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--cap", type=int)
    s.add_argument("--format", choices=("csv", "json"))
    s.add_argument("--out")
    s.add_argument("--threads", type=int)
    s.add_argument("--config", help="key=value file; explicit flags win")
    s.set_defaults(func=cmd_spectra)

    s = sub.add_parser("selftest", help="oracle checks of relators and rewrite formulas")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out) or 0
    except errors.ThompsonError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, err)
        return 1
    except ValueError as exc:
        _emit({"error": "ValueError", "message": str(exc)}, err)
        return 1


if __name__ == "__main__":
    sys.exit(main())

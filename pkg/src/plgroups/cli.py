"""``plgroups`` command line.

Exit status: 0 on success, 1 on a domain error (invalid map, failed check),
2 on a usage error, 3 when ``divides`` answers no.
"""

from __future__ import annotations

import argparse
import sys

from . import arith, centralizer, commdec, elements
from .errors import PLGroupError
from .numeric import GroupParams, Q, THOMPSON, format_rational, parse_rational
from .plmap import PLMap, compose, identity
from .sampling import default_seed
from .serialize import parse_many, parse_plmap, serialize_many, serialize_plmap
from .suites import SUITES
from .wreath import WreathBase


def _rational(text: str) -> Q:
    try:
        return parse_rational(text)
    except PLGroupError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path: str) -> PLMap:
    return parse_plmap(_read(path))


def _params(args) -> GroupParams:
    return GroupParams(args.n, args.r)


def _named_generators(params: GroupParams, alpha0=None) -> dict:
    if params == THOMPSON and alpha0 is None:
        x0, x1 = elements.thompson_x0(), elements.thompson_x1()
        a, b = elements.thompson_ab()
        return {"x0": x0, "x1": x1, "a": a, "b": b}
    a, b = elements.general_ab(params, alpha0 if alpha0 is not None else elements.default_alpha0(params))
    return {"a": a, "b": b}


def _wreath_base(params: GroupParams, alpha0=None) -> WreathBase:
    g = _named_generators(params, alpha0)
    return WreathBase(g["a"], g["b"])


def cmd_gens(args, out):
    gens = _named_generators(_params(args), args.alpha0)
    out.write(serialize_many(gens.values(), gens.keys()))


def cmd_bump(args, out):
    x = elements.bump(_params(args), args.alpha, args.beta, args.p, args.q)
    out.write(serialize_plmap(x))


def cmd_ladder(args, out):
    params = _params(args)
    if params == THOMPSON:
        a, _ = elements.thompson_ab()
        alpha0 = args.alpha0 if args.alpha0 is not None else Q(1, 2)
    else:
        alpha0 = args.alpha0 if args.alpha0 is not None else elements.default_alpha0(params)
        a, _ = elements.general_ab(params, alpha0)
    lad = elements.ladder(params, a, alpha0, args.kmin, args.kmax)
    for k in range(args.kmin, args.kmax + 1):
        out.write(f"{k}\t{format_rational(lad[k])}\n")


def cmd_compose(args, out):
    out.write(serialize_plmap(compose(*[_load(p) for p in args.files])))


def cmd_inverse(args, out):
    out.write(serialize_plmap(_load(args.file).inverse()))


def parse_word(word: str, gens: dict, params: GroupParams) -> PLMap:
    g = identity(params)
    for tok in word.split():
        name, _, exp = tok.partition("^")
        if name not in gens:
            raise PLGroupError(f"unknown generator {name!r}; known: {', '.join(gens)}")
        try:
            k = int(exp) if exp else 1
        except ValueError:
            raise PLGroupError(f"bad exponent in {tok!r}") from None
        g = g * gens[name] ** k
    return g


def cmd_eval_word(args, out):
    params = _params(args)
    gens = _named_generators(params, args.alpha0)
    for i, path in enumerate(args.load or ()):
        gens[f"f{i + 1}"] = _load(path)
    g = parse_word(args.word, gens, params)
    if args.at is not None:
        out.write(format_rational(g(args.at)) + "\n")
    else:
        out.write(serialize_plmap(g))


def cmd_classify(args, out):
    out.write(f"{_load(args.file).classify()}\n")


def cmd_support(args, out):
    x = _load(args.file)
    out.write(f"support: {x.support()}\nfixed: {x.fixed_set()}\n")


def cmd_encode(args, out):
    out.write(serialize_plmap(arith.encode(_params(args), args.m).element))


def cmd_decode(args, out):
    out.write(f"{arith.decode(_load(args.file))}\n")


def cmd_add(args, out):
    code = arith.add(_load(args.f1), _load(args.f2))
    out.write(f"value: {code.value}\n")
    out.write(serialize_plmap(code.element))


def cmd_divides(args, out):
    x, y = arith.ArithCode.of(_load(args.f1)), arith.ArithCode.of(_load(args.f2))
    wit = arith.divisibility_witness(x, y)
    if wit is None:
        out.write(f"divides: false ({x.value} does not divide {y.value})\n")
        return 3
    out.write(f"divides: true ({x.value} | {y.value})\n")
    if args.witness:
        out.write(serialize_many(wit, ["z", "w"]))
    return 0


def cmd_wreath_decompose(args, out):
    g = _load(args.file)
    out.write(f"{_wreath_base(g.params, args.alpha0).from_pl(g)}\n")


def cmd_two_commutators(args, out):
    maps = parse_many(_read(args.file))
    if not maps or len(maps) % 2:
        raise PLGroupError(f"need an even, nonzero number of maps, got {len(maps)}")
    pairs = list(zip(maps[0::2], maps[1::2]))
    result = commdec.two_commutators(pairs)
    flat = [m for pair in result for m in pair]
    out.write(serialize_many(flat, ["x1", "y1", "x2", "y2"]))
    out.write(f"verified: {str(commdec.product(result) == commdec.product(pairs)).lower()}\n")


def cmd_partition(args, out):
    d = centralizer.partition(_load(args.file))
    out.write("cuts: " + " ".join(format_rational(t) for t in d.cut_points) + "\n")
    for piece in d.pieces:
        out.write(f"{piece}\n")


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        for label, ok in SUITES[name](args.seed):
            failed += not ok
            out.write(f"{'PASS' if ok else 'FAIL'}\t{name}\t{label}\n")
    out.write(f"{'all passed' if not failed else f'{failed} failed'}\n")
    return 1 if failed else 0


def cmd_plot(args, out):
    x = _load(args.file)
    r = x.params.r
    for k in range(args.samples):
        t = r * Q(k, args.samples)
        y = x(t)
        row = f"{format_rational(t)}\t{format_rational(y)}"
        if args.decimal:
            row += f"\t~{float(t):.10g}\t~{float(y):.10g}"
        out.write(row + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plgroups", description="Exact computation in Thompson-like groups F < T < V.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_params(p):
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--r", type=_rational, default=Q(1))
        return p

    def cmd(name, func, params=False, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        return with_params(p) if params else p

    p = cmd("gens", cmd_gens, True, help="print x0, x1, a, b (or a, b for general parameters)")
    p.add_argument("--alpha0", type=_rational)

    p = cmd("bump", cmd_bump, True, help="bump supported on (alpha, beta)")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--p", type=int, default=1, help="slope n^p right of alpha")
    p.add_argument("--q", type=int, default=1, help="slope n^-q left of beta")

    p = cmd("ladder", cmd_ladder, True, help="orbit points alpha_k = (alpha0) a^k")
    p.add_argument("--alpha0", type=_rational)
    p.add_argument("--kmin", type=int, default=-3)
    p.add_argument("--kmax", type=int, default=3)

    p = cmd("compose", cmd_compose, help="left-to-right product of maps")
    p.add_argument("files", nargs="+")

    p = cmd("inverse", cmd_inverse)
    p.add_argument("file")

    p = cmd("eval-word", cmd_eval_word, True, help="evaluate a word such as 'x0 x1^-1 x0'")
    p.add_argument("word")
    p.add_argument("--alpha0", type=_rational)
    p.add_argument("--load", action="append", help="extra generator file, named f1, f2, ...")
    p.add_argument("--at", type=_rational, help="print the image of this point instead of the map")

    for name, func in (("classify", cmd_classify), ("support", cmd_support), ("decode", cmd_decode),
                       ("partition", cmd_partition)):
        cmd(name, func).add_argument("file")

    p = cmd("encode", cmd_encode, True)
    p.add_argument("m", type=int)

    for name, func in (("add", cmd_add), ("divides", cmd_divides)):
        p = cmd(name, func)
        p.add_argument("f1")
        p.add_argument("f2")
    p.add_argument("--witness", action="store_true", help="dump the witness pair z, w")

    p = cmd("wreath-decompose", cmd_wreath_decompose)
    p.add_argument("file")
    p.add_argument("--alpha0", type=_rational)

    p = cmd("two-commutators", cmd_two_commutators, help="rewrite a list of (x, y) pairs as two commutators")
    p.add_argument("file")

    p = cmd("verify", cmd_verify)
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--seed", type=int, default=None)

    p = cmd("plot", cmd_plot, help="TSV of exact samples (t, (t)x)")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--decimal", action="store_true", help="append approximate decimal columns")
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = default_seed()
    try:
        status = args.func(args, out)
    except (PLGroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

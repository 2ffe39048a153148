"""Command line front end: ``quotcalc <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys
import time

from . import grassmann as gr
from . import keylemma as kl
from . import motivic, sodcat, suites
from .bbw import bbw_ab
from .partitions import fmt, parse
from .schur import cauchy_ext, cauchy_sym, lr_expand, pieri_ext, pieri_sym


class UsageError(Exception):
    pass


def _weight(text):
    try:
        return parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}: {exc}") from None


def _bundle(text):
    """SIDE[v]:WEIGHT[@TWIST], e.g. ``Qv:1,1@-1`` or ``U:2``."""
    try:
        head, _, rest = text.partition(":")
        weight, _, twist = rest.partition("@")
        side, dual = head[:1], head[1:] == "v"
        if head[1:] not in ("", "v"):
            raise ValueError("side must be Q, Qv, U or Uv")
        return gr.SchurBundle(side, parse(weight), dual, int(twist) if twist else 0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad bundle {text!r}: {exc}") from None


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _expansion_json(exp):
    return [{"weight": list(w), "mult": m} for w, m in sorted(exp.items())]


def _expansion_text(exp):
    if not exp:
        return "0"
    return " + ".join((f"{m}*" if m > 1 else "") + f"S^{fmt(w)}" for w, m in sorted(exp.items()))


def _expansion_latex(exp):
    if not exp:
        return "0"
    return r" \oplus ".join((f"{m}" if m > 1 else "") + rf"\Sigma^{{{fmt(w)}}}" for w, m in sorted(exp.items()))


def _emit(args, payload, text, latex=None):
    if args.format == "json":
        print(dumps(payload))
    elif args.format == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)
    return 0


# --- commands ---------------------------------------------------------------

def cmd_bbw(args):
    res = bbw_ab(args.n, args.k, args.a, args.b)
    if res.vanishing:
        text = "all cohomology vanishes"
        latex = r"H^\bullet = 0"
    else:
        text = f"H^{res.degree} = S^{fmt(res.weight)} V^v (dim {res.dim(args.n)}), all other degrees vanish"
        latex = rf"H^{{{res.degree}}} = \Sigma^{{{fmt(res.weight)}}} V^\vee"
    return _emit(args, res.to_json(), text, latex)


def cmd_lr(args):
    exp = lr_expand(args.lam, args.mu, args.n)
    return _emit(args, {"terms": _expansion_json(exp)}, _expansion_text(exp), _expansion_latex(exp))


def cmd_pieri(args):
    fn = pieri_sym if args.kind == "sym" else pieri_ext
    exp = fn(args.lam, args.m, args.n)
    return _emit(args, {"terms": _expansion_json(exp)}, _expansion_text(exp), _expansion_latex(exp))


def cmd_cauchy(args):
    fn = cauchy_sym if args.kind == "sym" else cauchy_ext
    pairs = fn(args.m, args.p, args.q)
    payload = {"terms": [{"left": list(a), "right": list(b)} for a, b in pairs]}
    text = " + ".join(f"S^{fmt(a)}V (x) S^{fmt(b)}W" for a, b in pairs) or "0"
    latex = r" \oplus ".join(rf"\Sigma^{{{fmt(a)}}}V \otimes \Sigma^{{{fmt(b)}}}W" for a, b in pairs) or "0"
    return _emit(args, payload, text, latex)


def _table_text(table, n):
    if table.is_zero():
        return "all Ext groups vanish"
    dims = table.dims(n)
    return "\n".join(f"Ext^{p}: {_expansion_text(table.terms[p])} (dim {dims[p]})" for p in table.degrees())


def cmd_ext(args):
    table = gr.ext_schur(args.n, args.k, args.side, args.lam, args.mu, (args.dual_source, args.dual_target))
    latex = r" \\ ".join(rf"\mathrm{{Ext}}^{{{p}}} = {_expansion_latex(table.terms[p])}" for p in table.degrees())
    return _emit(args, table.to_json(), _table_text(table, args.n), latex or "0")


def cmd_kapranov(args):
    cx = gr.kapranov_resolution(args.n, args.k, args.bundle)
    payload = {"degrees": [{"p": p, "terms": [{"coeff": list(w), "alpha": list(a), "mult": m}
                                              for w, a, m in sorted(cx.terms[p])]} for p in cx.degrees()],
               "euler_rank": cx.euler_rank(), "bundle_rank": gr.rank_of(args.n, args.k, args.bundle)}
    lines = [f"V^{p} = " + " + ".join((f"{m}*" if m > 1 else "") + f"S^{fmt(w)}V^v (x) S^{fmt(a)}U"
                                       for w, a, m in sorted(cx.terms[p])) for p in cx.degrees()]
    lines.append(f"Euler rank {payload['euler_rank']}, bundle rank {payload['bundle_rank']}")
    _emit(args, payload, "\n".join(lines))
    return 0 if payload["euler_rank"] == payload["bundle_rank"] else 1


def cmd_span_check(args):
    if args.window is not None:
        if args.k != 2:
            raise UsageError("--window builds the rank 2 window and needs --k 2")
        spanning = gr.rank2_window(args.n, args.window, dual=True)
    else:
        spanning = args.span or []
    if not spanning:
        raise UsageError("give --span bundles or --window r")
    if args.probe is None:
        raise UsageError("--probe is required")
    verdict = gr.ktheory_span_check(args.n, args.k, spanning, args.probe, args.trials, args.seed)
    payload = {"verdict": verdict, "spanning": [b.label() for b in spanning], "probe": args.probe.label(),
               "trials": args.trials, "seed": args.seed}
    return _emit(args, payload, f"{args.probe.label()}: {verdict}")


def _kin(args):
    return kl.KeyLemmaInput(args.m, args.n, args.dplus, args.dminus, args.alpha)


def cmd_keylemma(args):
    kin = _kin(args)
    if args.twist:
        cx = kl.twisted_complex(kin, args.twist)
    else:
        cx = kl.key_complex_G(kin) if args.variant == "G" else kl.key_complex_F(kin)
    text = "\n".join(f"F^{p}: " + " + ".join((f"{m}*" if m > 1 else "") + f"S^{fmt(c)}W (x) S^{fmt(b)}Q+"
                                               for (c, b), m in cx.summands(p)) for p in cx.degrees())
    return _emit(args, cx.to_json(), text or "zero complex", cx.to_latex())


def cmd_lascoux(args):
    cx = kl.lascoux_resolution(args.m, args.n, args.ell_minus, args.dplus)
    text = "\n".join(f"F^{p}: rank {cx.rank(p)}" for p in cx.degrees())
    return _emit(args, cx.to_json(), text, cx.to_latex())


def cmd_motivic(args):
    if args.motivic_cmd == "grass":
        cls = motivic.class_grass(args.d, args.n)
        return _emit(args, cls.to_json(), str(cls))
    ok = motivic.binomial_identity_check(args.delta, args.d, args.k)
    lhs = motivic.class_grass(args.d, args.delta + args.k)
    rhs = motivic.binomial_rhs(args.delta, args.d, args.k)
    payload = {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": ok}
    _emit(args, payload, f"{lhs}  vs  {rhs}: {'equal' if ok else 'NOT equal'}")
    return 0 if ok else 1


def cmd_sod(args):
    names = sodcat.PARAMS[args.theorem]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"--theorem {args.theorem} needs --{name.replace('_', '-')}")
        params[name] = value
    entry = sodcat.catalog(args.theorem, k=args.k, **params)
    ambient, total, ok = sodcat.rank_check(entry)
    fail = sodcat.order_failure(entry)
    payload = entry.to_json()
    payload["rank_check"] = {"ambient": ambient, "sum": total, "equal": ok}
    payload["order_check"] = fail is None
    lines = [f"{i}: {c.label()}  from {c.source}, rank {c.rank}" for i, c in enumerate(entry.components)]
    edges = sorted(sodcat.strict_pairs(entry.pairs))
    lines.append("order edges: " + (", ".join(f"{a}<{b}" for a, b in edges) or "none declared"))
    lines.append(f"ranks: ambient {ambient}, components {total}")
    _emit(args, payload, "\n".join(lines), entry.to_latex())
    return 0 if ok and fail is None else 1


def cmd_check(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    kwargs = {"jobs": args.jobs, "seed": args.seed}
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    reports = [suites.SUITES[name](**kwargs) for name in sorted(names)]
    payload = {"command": "check " + args.suite, "reports": [r.to_json() for r in reports],
               "ok": all(r.ok for r in reports)}
    if args.format == "json":
        for r in payload["reports"]:
            r.pop("seconds")   # keep JSON byte-identical across runs
        print(dumps(payload))
    else:
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            line = f"{status} {r.name}: {r.cases} cases in {r.seconds:.2f}s"
            print(line if r.ok else f"{line}; first counterexample: {r.failure}")
    return 0 if payload["ok"] else 1


# --- parser -----------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="quotcalc", description="Exact Schur, BBW, Key Lemma, motivic and SOD calculations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bbw", parents=[common], help="cohomology of S^a U^v (x) S^b Q^v on Gr_k(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=_weight, required=True, help="weight on U^v, length k")
    p.add_argument("--b", type=_weight, required=True, help="weight on Q^v, length n-k")
    p.set_defaults(func=cmd_bbw)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson expansion over GL_n")
    p.add_argument("--lam", type=_weight, required=True)
    p.add_argument("--mu", type=_weight, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("pieri", parents=[common], help="S^lam times S^m or wedge^m")
    p.add_argument("--lam", type=_weight, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("sym", "ext"), default="sym")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("cauchy", parents=[common], help="S^m or wedge^m of V (x) W")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True, help="rank of V")
    p.add_argument("--q", type=int, required=True, help="rank of W")
    p.add_argument("--kind", choices=("sym", "ext"), default="sym")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("ext", parents=[common], help="Ext between Schur bundles on Gr_k(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--side", choices=("Q", "U", "mixed"), default="Q")
    p.add_argument("--lam", type=_weight, required=True)
    p.add_argument("--mu", type=_weight, required=True)
    p.add_argument("--dual-source", action="store_true")
    p.add_argument("--dual-target", action="store_true")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("kapranov-resolve", parents=[common], help="Kapranov resolution of a bundle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bundle", type=_bundle, action="append", required=True,
                   help="tensor factor SIDE[v]:WEIGHT[@TWIST]; repeat for products")
    p.set_defaults(func=cmd_kapranov)

    p = sub.add_parser("span-check", parents=[common], help="K-theory span membership at random points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--span", type=_bundle, action="append", help="spanning bundle; repeat")
    p.add_argument("--window", type=int, help="use {S^lam Q^v}, lam in B_(l,2) minus B_(l-r,2)")
    p.add_argument("--probe", type=_bundle)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_span_check)

    def key_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--dplus", type=int, required=True)

    p = sub.add_parser("keylemma", parents=[common], help="the complex F (or G) for one input")
    key_args(p)
    p.add_argument("--dminus", type=int, required=True)
    p.add_argument("--alpha", type=_weight, default=(), help='partition; "" is empty')
    p.add_argument("--twist", type=int, default=0, help="O(j) twist")
    p.add_argument("--variant", choices=("F", "G"), default="F")
    p.set_defaults(func=cmd_keylemma)

    p = sub.add_parser("lascoux", parents=[common], help="Lascoux resolution (alpha empty)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell-minus", type=int, required=True)
    p.add_argument("--dplus", type=int, default=0)
    p.set_defaults(func=cmd_lascoux)

    p = sub.add_parser("motivic", help="classes in Z[L]")
    msub = p.add_subparsers(dest="motivic_cmd", required=True)
    q = msub.add_parser("grass", parents=[common])
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = msub.add_parser("check-identity", parents=[common])
    q.add_argument("--delta", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_motivic)

    p = sub.add_parser("sod", parents=[common], help="semiorthogonal decomposition catalog entry")
    p.add_argument("--theorem", choices=sorted(sodcat.THEOREMS), required=True)
    for name in ("m", "n", "d", "r", "ell"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--k", type=int, default=0, help="base twist")
    p.set_defaults(func=cmd_sod)

    p = sub.add_parser("check", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", choices=("bbw", "keylemma", "motivic", "sod", "all"), default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)   # exits 2 on bad usage
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"quotcalc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

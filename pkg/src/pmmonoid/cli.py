"""
Command-line entry point.

Exit codes: 0 success, 1 verification or convergence failure, 2 parse or
format error, 3 size bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import braid_pm as bp
from . import combinatorics as cb
from . import matrix_pm as mp
from . import outer_action as oa
from . import rmonoid as rm
from . import serialize as io
from .config import Config
from .words import WordParseError, parse_letters

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BOUND = 0, 1, 2, 3

SUITES = ("matched-pair", "relations-r", "relations-braid", "dnb", "monomial")


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


def _bound(n: int, cfg: Config):
    if n < 1:
        raise CliError("n must be positive", EXIT_PARSE)
    if n > cfg.max_n:
        raise CliError(f"n={n} exceeds --max-n={cfg.max_n}", EXIT_BOUND)


def _json_arg(text: str):
    p = Path(text)
    if p.exists():
        return io.load_json(p)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.FormatError(f"not a file or JSON document: {exc}") from None


def cmd_eval(args, cfg: Config) -> int:
    letters = parse_letters(args.word)
    if args.monoid == "r":
        print(rm.format_element(rm.evaluate_word(rm.RWord(args.n, letters))))
    else:
        print(json.dumps(io.braid_to_json(bp.evaluate_braid_letters(letters, args.n))))
    return EXIT_OK


def cmd_enumerate(args, cfg: Config) -> int:
    _bound(args.n, cfg)
    parts = cb.enumerate_partitions(args.n, cfg.max_n)
    closure = rm.enumerate_monoid(args.n, cfg.max_n)
    direct = set(rm.all_elements(args.n, cfg.max_n))
    print(f"|P_{args.n}|={len(parts)} |R_{args.n}|={len(closure)}")
    if closure != direct:
        print("FAIL generator closure differs from S_n x P_n")
        return EXIT_FAIL
    if args.table:
        elems = rm.all_elements(args.n, cfg.max_n)
        for k, x in enumerate(elems):
            print(f"{k}: {rm.format_element(x)}")
        for row in rm.cayley_table(elems):
            print(" ".join(map(str, row)))
    return EXIT_OK


def _monomial_report(n: int):
    from .report import Report
    rep = Report("monomial")
    elems = rm.all_elements(n)
    real = {x: mp.realize_monomial(x) for x in elems}
    for a in elems:
        for b in elems:
            ok = mp.projective_equal(mp.tilde_product(real[a], real[b]), real[rm.r_product(a, b)])
            rep.record("homomorphism", f"{a} {b}", ok)
    return rep


def cmd_verify(args, cfg: Config) -> int:
    _bound(args.n, cfg)
    if args.suite == "matched-pair":
        rep = rm.verify_matched_pair_axioms(args.n)
    elif args.suite == "relations-r":
        rep = rm.verify_presentation_relations(args.n, cfg.word_bound)
    elif args.suite == "relations-braid":
        rep = bp.verify_braid_relations(args.n, cfg.word_bound)
    elif args.suite == "dnb":
        rep = oa.verify_dnb_homomorphism(args.n, cfg.samples, cfg.seed)
    else:
        rep = _monomial_report(args.n)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_limit(args, cfg: Config) -> int:
    fam = io.family_from_json(io.load_json(args.family))
    lim = mp.limit_of_family(fam)
    out = io.m_to_json(lim) if args.form == "m" else io.tilde_to_json(mp.to_tilde(lim))
    print(json.dumps(out))
    return EXIT_OK


def cmd_converge(args, cfg: Config) -> int:
    tvals = None
    if args.t_samples:
        try:
            tvals = [Fraction(x.strip()) for x in args.t_samples.split(",") if x.strip()]
        except ValueError as exc:
            raise io.FormatError(f"bad --t-samples: {exc}") from None
    samples = io.samples_from_json(io.load_json(args.samples), tvals)
    cand = io.sequence_from_json(io.load_json(args.candidate))
    if isinstance(cand, mp.MatrixSequenceTilde):
        cand = mp.to_M(cand)
    tol = args.converge_tol if args.converge_tol is not None else cfg.tol
    rep = mp.check_convergence(samples, cand, tol)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_mul(args, cfg: Config) -> int:
    if args.kind == "r":
        print(rm.format_element(rm.r_product(rm.parse_element(args.a), rm.parse_element(args.b))))
    elif args.kind == "braid":
        x, y = io.braid_from_json(_json_arg(args.a)), io.braid_from_json(_json_arg(args.b))
        print(json.dumps(io.braid_to_json(bp.pm_braid_product(x, y))))
    elif args.kind == "aut":
        f, g = io.aut_from_json(_json_arg(args.a)), io.aut_from_json(_json_arg(args.b))
        print(json.dumps(io.aut_to_json(oa.compose_layered(f, g))))
    else:
        a, b = io.sequence_from_json(_json_arg(args.a)), io.sequence_from_json(_json_arg(args.b))
        a = mp.to_tilde(a) if isinstance(a, mp.MatrixSequenceM) else a
        b = mp.to_tilde(b) if isinstance(b, mp.MatrixSequenceM) else b
        prod = mp.tilde_product(a, b)
        print(json.dumps(io.tilde_to_json(prod) if args.form == "tilde" else io.m_to_json(mp.to_M(prod))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pmmonoid", description=__doc__.strip().splitlines()[0])
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--word-bound", type=int, default=Config.word_bound)
    p.add_argument("--samples", type=int, default=Config.samples, dest="sample_count",
                   help="sample count for randomized suites")
    p.add_argument("--tol", type=float, default=Config.tol)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate a word in R_n or in the braid monoid")
    s.add_argument("monoid", choices=("r", "braid"))
    s.add_argument("n", type=int)
    s.add_argument("word", help="tokens s1, s1', e[2], e[1,3]")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("enumerate", help="print |P_n| and |R_n|")
    s.add_argument("n", type=int)
    s.add_argument("--table", action="store_true", help="also print the full product table")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("limit", help="limit of a polynomial matrix family")
    s.add_argument("family")
    s.add_argument("--form", choices=("m", "tilde"), default="m")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("converge", help="certify convergence of sampled sequences")
    s.add_argument("samples")
    s.add_argument("candidate")
    s.add_argument("--tol", type=float, default=None, dest="converge_tol")
    s.add_argument("--t-samples", default=None, help="comma list of t values, e.g. 1e-1,1e-2")
    s.set_defaults(func=cmd_converge)

    s = sub.add_parser("mul", help="multiply two serialized elements")
    s.add_argument("kind", choices=("r", "braid", "aut", "tilde"))
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--form", choices=("m", "tilde"), default="tilde")
    s.set_defaults(func=cmd_mul)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config(max_n=args.max_n, word_bound=args.word_bound, seed=args.seed,
                     samples=args.sample_count, tol=args.tol)
        return args.func(args, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except cb.BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (WordParseError, io.FormatError, mp.InvalidSequenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

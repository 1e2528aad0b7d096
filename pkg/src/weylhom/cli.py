"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 validation error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from typing import List, Optional, Sequence

from .acceptance import random_element, run_all, summary_json
from .charring import fundamental_invariant_character, hom_rank, is_convention_dependent
from .polyalg import (
    RingElement, SymmetrizerContext, binom_matrix, binom_matrix_det, comultiply, format_element, is_block_invariant,
    parse_element, predicted_binom_det, sym_element,
)
from .repmod import CONFIG_GRAMMAR, loop_invariants, normalize_to_base, parse_configuration
from .rootsys import build_root_system
from .weylglob import (
    CheckReport, Inconclusive, TruncatedBimodule, Window, check_highest_relations, cyclic_span_dimension,
    freeness_rank, invariants_equal_base, stabilization_check, u_degree_invariant_criterion, window_size,
)

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3
CONVENTION_NOTE = "note: convention-dependent (k = 0 uses binom(j-1, j) = 0 for j >= 1)"
_VALUE_FLAGS = {"--s", "--mu", "--k", "--l", "--r", "--K", "--N"}
_NEGATIVE = re.compile(r"^-\d")


class ValidationError(ValueError):
    pass


def int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _fmt_weight(w: Sequence) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _emit(args, data: dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _root_column(rs, w) -> str:
    return _fmt_weight(rs.root_coords(w))


def _character_lines(rs, items, roots: bool) -> List[str]:
    head = f"{'lambda':<20}{'c':>4}" + ("   root coords" if roots else "")
    lines = [head]
    for w, c in items:
        line = f"{_fmt_weight(w):<20}{c:>4}"
        if roots:
            line += "   " + _root_column(rs, w)
        lines.append(line)
    return lines


# ---------------------------------------------------------------------------
# subcommands

def cmd_homrank(args) -> int:
    rs = build_root_system(args.family, args.rank)
    if args.s is None:
        raise ValidationError("--s is required")
    table = hom_rank(rs, args.s, args.k)
    data = table.to_json()
    lines = [f"hom_rank {rs.name} s={_fmt_weight(table.s)} k={table.k}"]
    lines += _character_lines(rs, table.items(), args.roots)
    if data["convention_dependent"]:
        lines.append(CONVENTION_NOTE)
    _emit(args, data, lines)
    return EXIT_OK


def cmd_fundchar(args) -> int:
    rs = build_root_system(args.family, args.rank)
    ch = fundamental_invariant_character(rs, args.node, args.k)
    s = [int(i == args.node) for i in rs.nodes]
    dep = is_convention_dependent(rs, s, args.k)
    data = {"family": rs.family, "rank": rs.rank, "node": args.node, "k": args.k,
            "convention_dependent": dep, "entries": ch.to_json()}
    lines = [f"fundchar {rs.name} i={args.node} k={args.k}"] + _character_lines(rs, ch.items(), args.roots)
    if dep:
        lines.append(CONVENTION_NOTE)
    _emit(args, data, lines)
    return EXIT_OK


def cmd_detcnk(args) -> int:
    if args.N < 0 or args.K < 0:
        raise ValidationError("N and K must be nonnegative")
    det = binom_matrix_det(args.N, args.K)
    pred = predicted_binom_det(args.N)
    ok = det == pred
    data = {"N": args.N, "K": args.K, "det": det, "predicted": pred, "match": ok}
    lines = []
    if args.show_matrix:
        lines += ["[" + ", ".join(str(x) for x in row) + "]" for row in binom_matrix(args.N, args.K)]
    lines.append(f"det = {det}, predicted = {pred}, {'match' if ok else 'MISMATCH'}")
    _emit(args, data, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_coexpand(args) -> int:
    x = parse_element(args.element, args.k, args.l)
    d = comultiply(x)
    terms = [{"left": format_element(_key_elem(keys[0], args)), "right": format_element(_key_elem(keys[1], args)),
              "coeff": str(c)} for keys, c in d]
    data = {"input": format_element(x), "k": args.k, "l": args.l, "terms": terms, "text": str(d)}
    _emit(args, data, [str(d)])
    return EXIT_OK


def _key_elem(key, args):
    return RingElement(args.k, args.l, {key: 1})


def _parse_config(args):
    return parse_configuration(args.config, ring=args.ring)


def cmd_invdim(args) -> int:
    cfg = _parse_config(args)
    if args.mu is None:
        raise ValidationError("--mu is required")
    if len(args.mu) != cfg.rs.rank:
        raise ValidationError(f"--mu needs {cfg.rs.rank} entries for {cfg.rs.name}")
    inv = loop_invariants(cfg, args.mu)
    predicted = None
    try:
        if all(c >= 0 for c in args.mu):
            predicted = hom_rank(cfg.rs, cfg.node_counts(), cfg.k).coeff(args.mu)
    except ValueError:
        predicted = None
    basis = [{str(i): str(v) for i, v in sorted(vec.items())} for vec in inv.basis]
    data = {"config": args.config, "ring": args.ring, "mu": list(args.mu), "dim": inv.dim,
            "predicted": predicted, "distinct_points": cfg.distinct_points, "basis": basis}
    lines = [f"dim = {inv.dim}"]
    if args.verbose:
        lines.append(f"predicted c_s(mu) = {predicted}; distinct points: {cfg.distinct_points}")
        for vec in inv.basis:
            lines.append("  " + " + ".join(f"{v}*b{i}" for i, v in sorted(vec.items())))
    _emit(args, data, lines)
    return EXIT_OK


WEYLGLOB_CHECKS = ("highest", "cyclic", "freeness", "invariants", "stabilization", "udegree")


def _bimodule(args):
    cfg = _parse_config(args)
    base, phi = normalize_to_base(cfg)
    if args.ring == "laurent":
        return TruncatedBimodule(base, max_t=args.window_t), phi
    return TruncatedBimodule(base, max_u=args.window_u), phi


def cmd_weylglob(args) -> int:
    name = args.check
    if name == "stabilization":
        if args.ring != "laurent":
            raise ValidationError("stabilization needs --ring laurent")
        cfg = _parse_config(args)
        K = 0 if args.K is None else args.K
        ok = stabilization_check(cfg, K)
        report = CheckReport("stabilization", {"config": args.config, "K": K}, {}, "pass" if ok else "fail")
        return _report(args, report)
    tb, phi = _bimodule(args)
    params = dict(tb.params(), config=args.config,
                  normalization={"scale": [str(c) for c in phi.scale], "shift": [str(b) for b in phi.shift]})
    win = tb.window.to_json()
    if name == "highest":
        report = check_highest_relations(tb)
        report.params.update(params)
    elif name == "cyclic":
        sub = Window(args.sub_u if args.sub_u is not None else max(tb.window.max_u - 1, 0),
                     args.sub_t if args.sub_t is not None else max(tb.window.max_t - 1, 0))
        target = tb.base.dim * window_size(tb, sub)
        try:
            got = cyclic_span_dimension(tb, sub)
        except Inconclusive as exc:
            return _report(args, CheckReport("cyclic_span", params, win, "inconclusive", {"reason": str(exc)}))
        verdict = "pass" if got == target else "inconclusive"
        report = CheckReport("cyclic_span", dict(params, sub_window=sub.to_json()), win, verdict,
                             {"dim": got, "target": target})
    elif name == "freeness":
        got = freeness_rank(tb)
        target = tb.base.dim * window_size(tb)
        report = CheckReport("freeness", params, win, "pass" if got == target else "fail",
                             {"rank": got, "target": target})
    elif name == "invariants":
        report = invariants_equal_base(tb)
        report.params.update(params)
    else:
        K = 1 if args.K is None else args.K
        try:
            ok = u_degree_invariant_criterion(tb, K, args.N)
        except Inconclusive as exc:
            return _report(args, CheckReport("u_degree_criterion", dict(params, K=K), win, "inconclusive",
                                             {"reason": str(exc)}))
        report = CheckReport("u_degree_criterion", dict(params, K=K, N=args.N), win, "pass" if ok else "fail")
    return _report(args, report)


def _report(args, report: CheckReport) -> int:
    data = report.to_json()
    lines = [f"{report.check}: {report.verdict}"]
    if report.witness is not None:
        lines.append("witness: " + json.dumps(report.witness, sort_keys=True))
    _emit(args, data, lines)
    return {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[report.verdict]


def cmd_symcheck(args) -> int:
    if args.r is None:
        raise ValidationError("--r is required")
    if args.k < 0 or args.l < 0 or args.k + args.l == 0:
        raise ValidationError("need k, l >= 0 with k + l >= 1")
    ctx = SymmetrizerContext(tuple(args.r))
    blocks = [i for i in range(1, len(ctx.r) + 1) if ctx.r[i - 1]]
    rng = random.Random(args.seed)
    inv = closed = 0
    for _ in range(args.samples):
        i, j = rng.choice(blocks), rng.choice(blocks)
        x = sym_element(ctx, i, random_element(rng, args.k, args.l))
        y = sym_element(ctx, j, random_element(rng, args.k, args.l))
        inv += is_block_invariant(ctx, x)
        closed += is_block_invariant(ctx, x * y)
    ok = inv == closed == args.samples
    data = {"r": list(ctx.r), "k": args.k, "l": args.l, "samples": args.samples,
            "invariant": inv, "closed": closed, "passed": ok}
    _emit(args, data, [f"invariant: {inv}/{args.samples}, closed under products: {closed}/{args.samples}"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check_suite(args) -> int:
    results = run_all()
    _emit(args, summary_json(results), [r.line() for r in results])
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sampling")

    parser = argparse.ArgumentParser(prog="weylhom", description="Hom ranks between global Weyl modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_rank(p):
        p.add_argument("family", type=str.upper, choices=["A", "B", "C", "D"])
        p.add_argument("rank", type=int)
        p.add_argument("--roots", action="store_true", help="also print simple-root coordinates")

    p = sub.add_parser("homrank", parents=[common], help="coefficients c_s(lambda)")
    family_rank(p)
    p.add_argument("--s", type=int_list, help="comma-separated multiplicities per node")
    p.add_argument("--k", type=int, default=1, help="number of Laurent variables")
    p.set_defaults(func=cmd_homrank)

    p = sub.add_parser("fundchar", parents=[common], help="fundamental invariant character")
    family_rank(p)
    p.add_argument("node", type=int)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_fundchar)

    p = sub.add_parser("detcnk", parents=[common], help="determinant of C(N, K)")
    p.add_argument("N", type=int)
    p.add_argument("K", type=int)
    p.add_argument("--show-matrix", action="store_true")
    p.set_defaults(func=cmd_detcnk)

    p = sub.add_parser("coexpand", parents=[common], help="comultiplication of a ring element")
    p.add_argument("element")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(func=cmd_coexpand)

    cfg_help = "configuration string. Grammar:\n" + CONFIG_GRAMMAR
    p = sub.add_parser("invdim", parents=[common], help="loop-invariant dimension at a weight",
                       formatter_class=argparse.RawTextHelpFormatter)
    p.add_argument("config", help=cfg_help)
    p.add_argument("--mu", type=int_list)
    p.add_argument("--ring", choices=["poly", "laurent"], default="poly")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_invdim)

    p = sub.add_parser("weylglob", parents=[common], help="bimodule checks at window scale",
                       formatter_class=argparse.RawTextHelpFormatter)
    p.add_argument("check", choices=WEYLGLOB_CHECKS)
    p.add_argument("config", help=cfg_help)
    p.add_argument("--ring", choices=["poly", "laurent"], default="poly")
    p.add_argument("--window-u", type=int, default=4)
    p.add_argument("--window-t", type=int, default=4)
    p.add_argument("--sub-u", type=int)
    p.add_argument("--sub-t", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_weylglob)

    p = sub.add_parser("symcheck", parents=[common], help="symmetrizer invariance and closure")
    p.add_argument("--r", type=int_list, help="block sizes r_1,...,r_n")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_symcheck)

    p = sub.add_parser("check-suite", parents=[common], help="run the acceptance battery")
    p.set_defaults(func=cmd_check_suite)
    return parser


def _preprocess(argv: Sequence[str]) -> List[str]:
    """Glue '--s -1,0' into '--s=-1,0' so argparse reads negative lists as values."""
    out: List[str] = []
    skip = False
    for n, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and n + 1 < len(argv) and _NEGATIVE.match(argv[n + 1]):
            out.append(f"{tok}={argv[n + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_INVALID
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

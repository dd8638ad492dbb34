"""
Command line interface.

    bempoly clan 1+-1
    bempoly polytope --p 2 --q 2 --word 3,2
    bempoly table1
    bempoly membership --gamma ++-- flag.json
    bempoly fixed-points --p 2 --q 2 --word 3,2
    bempoly weights --p 2 --q 2 --word 3,2
    bempoly experiment-equivalence --w 3,2,1,4

Output is JSON (default) or CSV where a table makes sense.  Exit codes: 0 on
success, 1 on a verification mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import bem, clans, polytope, ranklin, weyl
from .clans import ClanParseError, parse_clan
from .weyl import Permutation, Word

log = logging.getLogger("bempoly")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

# Golden reference data: published f-vectors of the BEM polytopes for
# (GL_4, GL_2 x GL_2), gamma = ++--, reduced Q with |Q| <= 3.  Each entry lists
# every word sharing a published row; values are (dim, V, E, F) as published.
TABLE1 = [
    (((1,),), (2, 4, 4, 1)),
    (((2,),), (3, 8, 12, 6)),
    (((3,),), (2, 4, 4, 1)),
    (((1, 2),), (3, 12, 18, 8)),
    (((1, 3), (3, 1)), (2, 4, 4, 1)),
    (((2, 1),), (3, 8, 12, 6)),
    (((2, 3),), (3, 8, 12, 6)),
    (((3, 2),), (3, 12, 18, 8)),
    (((1, 2, 1), (2, 1, 2)), (3, 12, 18, 8)),
    (((1, 2, 3),), (3, 12, 18, 8)),
    (((1, 3, 2), (3, 1, 2)), (3, 8, 12, 6)),
    (((2, 1, 3), (2, 3, 1)), (3, 8, 12, 6)),
    (((2, 3, 2),), (3, 12, 18, 8)),
    (((3, 2, 1),), (3, 12, 18, 8)),
    (((3, 2, 3),), (3, 12, 18, 8)),
]


class InputError(Exception):
    pass


# ---------------------------------------------------------------- serialisation

def fmt_rational(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v):
    return [fmt_rational(x) for x in v]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------- instance parsing

def parse_word(text: str | None, n: int) -> Word:
    if text is None or text.strip() in ("", "()"):
        return Word((), n)
    try:
        letters = tuple(int(t) for t in text.strip().strip("()").split(",") if t.strip())
        return Word(letters, n)
    except ValueError as e:
        raise InputError(f"bad word {text!r}: {e}") from None


def parse_perm(text: str) -> Permutation:
    try:
        return Permutation(tuple(int(t) for t in text.strip().strip("[]").split(",")))
    except ValueError as e:
        raise InputError(f"bad permutation {text!r}: {e}") from None


def resolve_instance(args, need_matchless: bool = True):
    gamma_text = args.gamma
    if gamma_text is None:
        if args.p is None or args.q is None:
            raise InputError("give --p and --q, or --gamma")
        gamma_text = "+" * args.p + "-" * args.q
    try:
        gamma = parse_clan(gamma_text)
    except ClanParseError as e:
        raise InputError(f"bad clan: {e}") from None
    p, q = gamma.signature
    if (args.p is not None and args.p != p) or (args.q is not None and args.q != q):
        raise InputError(f"clan {gamma} has signature ({p},{q}), not ({args.p},{args.q})")
    if need_matchless and not clans.is_matchless(gamma):
        raise InputError(f"clan {gamma} is not matchless")
    return gamma, p, q, parse_word(args.word, gamma.n)


# ---------------------------------------------------------------- commands

def cmd_clan(text: str, pattern: str | None = None) -> dict:
    try:
        gamma = parse_clan(text)
    except ClanParseError as e:
        raise InputError(str(e)) from None
    n = gamma.n
    off = clans.offending_pattern(gamma)
    report = {
        "clan": str(gamma),
        "signature": list(gamma.signature),
        "matchless": clans.is_matchless(gamma),
        "noncrossing": clans.is_noncrossing(gamma),
        "smooth": off is None,
        "offending": off,
        "rank_plus": [clans.rank_plus(gamma, i) for i in range(1, n + 1)],
        "rank_minus": [clans.rank_minus(gamma, i) for i in range(1, n + 1)],
        "rank_pair": {f"{i},{j}": clans.rank_pair(gamma, i, j)
                      for i in range(1, n) for j in range(i + 1, n + 1)},
    }
    if pattern is not None:
        try:
            pat = parse_clan(pattern)
        except ClanParseError as e:
            raise InputError(f"bad pattern: {e}") from None
        where = clans.find_pattern(gamma, pat)
        report["pattern"] = {"pattern": str(pat), "contains": where is not None,
                             "positions": None if where is None else [k + 1 for k in where]}
    return report


def _summary_dict(s: polytope.PolytopeSummary) -> dict:
    return {
        "ambient_n": s.ambient_n,
        "dim": s.affine_dim,
        "V": len(s.vertices),
        "E": None if s.edges is None else len(s.edges),
        "F": s.two_face_count,
        "input_points": s.input_point_count,
        "vertices": [fmt_vec(v) for v in s.vertices],
        "edges": None if s.edges is None else [list(e) for e in s.edges],
    }


def _fixed_point_rows(gamma, p, q, Q, verts=None):
    rows = []
    vset = None if verts is None else set(verts)
    std = clans.is_matchless(gamma) and str(gamma) == "+" * p + "-" * q
    for fp in bem.fixed_points(gamma, Q):
        img = bem.moment_image(fp.x, fp.J)
        row = {"perm": list(fp.x.images), "subword": str(fp.J), "image": fmt_vec(img)}
        if vset is not None:
            row["vertex"] = img in vset
            if std:
                w = bem.tangent_weights(fp.x, fp.J, Q, p, q)
                pointed = not polytope.cone_contains_line(w)
                row["weight_cone_pointed"] = pointed
                row["agrees"] = pointed == row["vertex"]
        rows.append(row)
    return rows


def cmd_polytope(gamma, p, q, Q, emit_off: Path | None = None) -> dict:
    pts = bem.bem_points(gamma, Q)
    s = polytope.hull_summary(pts)
    predicted = polytope.predicted_dim(p, q, Q)
    rows = _fixed_point_rows(gamma, p, q, Q, s.vertices)
    report = {
        "gamma": str(gamma),
        "p": p, "q": q,
        "word": list(Q.letters),
        "fixed_point_count": len(rows),
        "bs_points": [fmt_vec(v) for v in bem.bs_moment_points(Q)],
        "bem_points": [fmt_vec(v) for v in pts],
        "summary": _summary_dict(s),
        "predicted_dim": predicted,
        "dim_matches_prediction": predicted == s.affine_dim,
        "fixed_points": rows,
    }
    if any("agrees" in r for r in rows):
        report["vertex_weight_duality"] = all(r["agrees"] for r in rows)
    if emit_off is not None:
        emit_off.write_text(polytope.to_off(s))
        report["off_file"] = str(emit_off)
    return report


def _table1_row(word: tuple) -> tuple:
    Q = Word(word, 4)
    return polytope.hull_summary(bem.bem_points("++--", Q)).fvector


def cmd_table1(threads: int = 1) -> dict:
    jobs = [w for words, _ in TABLE1 for w in words]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        computed = dict(zip(jobs, pool.map(_table1_row, jobs)))
    rows = []
    for words, expected in TABLE1:
        for w in words:
            got = computed[w]
            rows.append({
                "word": list(w),
                "row": "≡".join("(" + ",".join(map(str, x)) + ")" for x in words),
                "expected": list(expected),
                "computed": list(got),
                "pass": tuple(got) == expected,
            })
    return {"instance": {"p": 2, "q": 2, "gamma": "++--"},
            "rows": rows, "all_pass": all(r["pass"] for r in rows)}


def cmd_membership(gamma, flag: ranklin.Flag, check_crossing: bool = True) -> dict:
    if flag.n != gamma.n:
        raise InputError(f"flag lives in dimension {flag.n}, clan has length {gamma.n}")
    v = ranklin.first_violation(flag, gamma, check_crossing)
    return {
        "gamma": str(gamma),
        "n": flag.n,
        "check_crossing": check_crossing,
        "member": v is None,
        "violation": None if v is None else {
            "condition": v.condition, "i": v.i, "j": v.j,
            "observed": v.observed, "bound": v.bound, "text": v.describe(),
        },
    }


def cmd_fixed_points(gamma, p, q, Q) -> dict:
    rows = _fixed_point_rows(gamma, p, q, Q)
    return {"gamma": str(gamma), "word": list(Q.letters),
            "count": len(rows), "expected_count": bem.fixed_point_count(p, q, len(Q)),
            "fixed_points": rows}


def cmd_weights(gamma, p, q, Q) -> dict:
    if str(gamma) != "+" * p + "-" * q:
        raise InputError("tangent weights are only available for the clan +...+-...-")
    rows = []
    for fp in bem.fixed_points(gamma, Q):
        w = bem.tangent_weights(fp.x, fp.J, Q, p, q)
        rows.append({"perm": list(fp.x.images), "subword": str(fp.J),
                     "image": fmt_vec(bem.moment_image(fp.x, fp.J)),
                     "weights": [fmt_vec(v) for v in w],
                     "cone_contains_line": polytope.cone_contains_line(w)})
    return {"gamma": str(gamma), "word": list(Q.letters),
            "dim_bem": bem.dim_bem(p, q, len(Q)), "points": rows}


def cmd_experiment_equivalence(p: int, q: int, w: Permutation) -> dict:
    if w.n != p + q:
        raise InputError(f"permutation has size {w.n}, expected {p + q}")
    gamma = bem.closed_orbit_clan(p, q)
    results = []
    for Q in weyl.reduced_words(w):
        fv = polytope.hull_summary(bem.bem_points(gamma, Q)).fvector
        results.append({"word": list(Q.letters), "fvector": list(fv)})
    return {"experiment": "reduced words of one permutation give combinatorially equivalent polytopes",
            "note": "observational only, not a theorem check",
            "p": p, "q": q, "w": list(w.images), "words": results,
            "all_agree": len({tuple(r["fvector"]) for r in results}) <= 1}


# ---------------------------------------------------------------- csv

def _csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    wr = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    wr.writeheader()
    for r in rows:
        wr.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
    return buf.getvalue()


# ---------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bempoly", description=__doc__.split("\n")[1])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def instance(sp):
        sp.add_argument("--p", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--gamma")
        sp.add_argument("--word", default="")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")

    sp = sub.add_parser("clan", help="clan invariants and smoothness")
    sp.add_argument("text")
    sp.add_argument("--pattern")

    sp = sub.add_parser("polytope", help="BEM polytope for one instance")
    instance(sp)
    sp.add_argument("--emit-off", type=Path)

    sp = sub.add_parser("table1", help="recompute the reference f-vector table for p=q=2")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")

    sp = sub.add_parser("membership", help="orbit-closure membership of a flag")
    instance(sp)
    sp.add_argument("flag_file", type=Path)
    sp.add_argument("--no-crossing-check", action="store_true")

    sp = sub.add_parser("random-flags", help="compare membership with and without the crossing check")
    instance(sp)
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--seed", type=int, default=20240607)

    sp = sub.add_parser("fixed-points", help="torus-fixed points and moment images")
    instance(sp)

    sp = sub.add_parser("weights", help="tangent weights at every fixed point")
    instance(sp)

    sp = sub.add_parser("experiment-equivalence", help="compare f-vectors over reduced words of w")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--w", required=True, help="permutation in one-line notation, e.g. 3,2,1,4")
    return ap


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BEM_THREADS", "1")))
    except ValueError:
        return 1


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    fmt = getattr(args, "fmt", None) or "json"
    code = EXIT_OK
    if args.command == "clan":
        report = cmd_clan(args.text, args.pattern)
    elif args.command == "polytope":
        gamma, p, q, Q = resolve_instance(args)
        report = cmd_polytope(gamma, p, q, Q, args.emit_off)
        if not report["dim_matches_prediction"] or report.get("vertex_weight_duality") is False:
            code = EXIT_MISMATCH
    elif args.command == "table1":
        report = cmd_table1(_threads())
        if not report["all_pass"]:
            code = EXIT_MISMATCH
        if fmt == "csv":
            return code, _csv(report["rows"], ["row", "word", "expected", "computed", "pass"])
    elif args.command == "membership":
        gamma, p, q, _ = resolve_instance(args, need_matchless=False)
        try:
            flag = ranklin.Flag.from_json(args.flag_file.read_text())
        except (OSError, ValueError, KeyError) as e:
            raise InputError(f"cannot read flag: {e}") from None
        report = cmd_membership(gamma, flag, not args.no_crossing_check)
    elif args.command == "random-flags":
        from .sampling import crossing_redundancy
        gamma, p, q, _ = resolve_instance(args, need_matchless=False)
        report = crossing_redundancy(gamma, args.count, args.seed)
        if report["disagreements"]:
            code = EXIT_MISMATCH
    elif args.command == "fixed-points":
        gamma, p, q, Q = resolve_instance(args)
        report = cmd_fixed_points(gamma, p, q, Q)
        if fmt == "csv":
            return code, _csv(report["fixed_points"], ["perm", "subword", "image"])
    elif args.command == "weights":
        gamma, p, q, Q = resolve_instance(args)
        report = cmd_weights(gamma, p, q, Q)
        if fmt == "csv":
            return code, _csv(report["points"], ["perm", "subword", "image", "weights",
                                                 "cone_contains_line"])
    elif args.command == "experiment-equivalence":
        report = cmd_experiment_equivalence(args.p, args.q, parse_perm(args.w))
    else:  # pragma: no cover - argparse enforces the choices
        raise InputError(f"unknown command {args.command}")
    return code, dumps(report) + "\n"


def main(argv=None) -> int:
    try:
        code, out = run(argv)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

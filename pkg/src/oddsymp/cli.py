"""
Command-line front end.

Every subcommand prints a short text report, or with ``--json`` a single
object ``{"input", "result", "provenance"}`` serialized with sorted keys so
identical requests give identical bytes.

Exit codes: 0 success, 2 invalid input, 1 a failed internal check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import bott, combinatorics as cb, geometry as geo, orbits, reptheory as rt, verify
from .partitions import Partition, as_partition
from .tensors import trace_free_schur_dim

__all__ = ["main", "build_parser", "Outcome", "dumps"]


@dataclass
class Outcome:
    result: dict
    anchor: str
    mode: str  # closed-form | enumeration | oracle
    text: list[str] = field(default_factory=list)
    ok: bool = True


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# --- argument types -------------------------------------------------------


def partition_arg(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
        return as_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def int_list_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _lam(p: Partition) -> list[int]:
    return list(p)


# --- handlers -------------------------------------------------------------


def cmd_weyl(a) -> Outcome:
    if a.odd:
        group = cb.enumerate_weyl_odd(a.n, a.method)
    else:
        group = cb.enumerate_weyl_even(a.n)
    elements = [{"window": w.to_str(), "length": cb.length(w)} for w in group]
    longest = max(e["length"] for e in elements)
    text = [f"{len(elements)} elements, longest length {longest}"]
    if a.list:
        text += [f"{e['window']}  (length {e['length']})" for e in elements]
    return Outcome(
        {"count": len(elements), "max_length": longest, "elements": elements if a.list else None},
        "odd symplectic Weyl group interval" if a.odd else "Weyl group of Sp_2n",
        "enumeration", text,
    )


def cmd_bruhat(a) -> Outcome:
    w = cb.SignedPermutation.parse(a.w, a.n, a.odd)
    v = cb.SignedPermutation.parse(a.v, a.n, a.odd)
    leq = cb.bruhat_leq(w, v)
    res = {"leq": leq, "length_w": cb.length(w), "length_v": cb.length(v)}
    mode = "closed-form"
    if a.oracle:
        chain = cb.bruhat_leq_chain_oracle(w, v)
        res["oracle_leq"] = chain
        mode = "oracle"
        if chain != leq:
            return Outcome(res, "Bruhat order", mode, ["criterion and chain oracle disagree"], ok=False)
    return Outcome(res, "Bruhat order", mode, [f"{w} <= {v}: {leq}"])


def cmd_cells(a) -> Outcome:
    if a.index:
        if a.space != "grass":
            raise ValueError("--index applies to --space grass")
        label = cb.AdmissibleIndex.parse(a.index, a.N)
        if a.k is not None and a.k != label.k:
            raise ValueError(f"--k {a.k} does not match index of length {label.k}")
        pat = geo.echelon_pattern(label.entries, label.alphabet)
        conds = [str(c) for c in geo.incidence_conditions(label, closure=True)]
        res = {
            "index": label.to_str(), "dimension": pat.free_count,
            "determined": pat.determined_count, "pattern": pat.render().splitlines(),
            "closure_conditions": conds,
        }
        return Outcome(res, "Schubert cell echelon form", "enumeration",
                       [pat.render(), f"dimension {pat.free_count}"] + conds)
    labels = geo.cells(a.space, a.N, a.k)
    rows = []
    for c in labels:
        row = {"label": c.to_str(), "dimension": geo.cell_dimension(c)}
        if a.N % 2 and (a.space == "flag" or a.k <= a.N // 2 + 1):
            row["orbit"] = orbits.cell_orbit(c)
        rows.append(row)
    text = [f"{len(rows)} cells"] + [
        f"{r['label']}  dim {r['dimension']}" + (f"  {r['orbit']}" if "orbit" in r else "") for r in rows
    ]
    return Outcome({"count": len(rows), "cells": rows}, "Schubert cells", "enumeration", text)


def cmd_poincare(a) -> Outcome:
    poly = geo.poincare_polynomial(a.space, a.N, a.k)
    res = {"coeffs": list(poly.coeffs), "degree": poly.degree, "palindromic": poly.is_palindromic()}
    ok = True
    if a.space == "flag":
        n = a.N // 2
        closed = geo.odd_flag_poincare_product(n) if a.N % 2 else geo.even_flag_poincare_product(n)
        res["matches_product"] = closed == poly
        ok = closed == poly
    return Outcome(res, "Poincare polynomial", "enumeration", [str(poly)], ok=ok)


def _orbit_dict(o: orbits.OrbitInfo) -> dict:
    return {"id": o.id, "dimension": o.dimension, "codimension": o.codimension,
            "model": o.model, "closure": sorted(o.closure)}


def cmd_orbits(a) -> Outcome:
    if a.cell:
        if a.space == "grass":
            label = cb.AdmissibleIndex.parse(a.cell, 2 * a.n + 1)
        else:
            label = cb.SignedPermutation.parse(a.cell, a.n, odd=True)
        oid = orbits.cell_orbit(label)
        return Outcome({"cell": label.to_str(), "orbit": oid}, "orbit membership", "closed-form", [oid])
    if a.space == "grass":
        if a.k is None:
            raise ValueError("--k is required for the grassmannian")
        table = orbits.grassmannian_orbits(a.k, a.n)
    else:
        table = orbits.flag_orbits(a.n)
    rows = [_orbit_dict(o) for o in table]
    text = [f"{r['id']}: dim {r['dimension']}, codim {r['codimension']}, {r['model']}" for r in rows]
    return Outcome({"orbits": rows}, "orbit stratification", "closed-form", text)


def cmd_dim_odd(a) -> Outcome:
    d = rt.dim_odd(a.lam, a.n)
    return Outcome({"dim": d}, "trace-free Schur module dimension", "closed-form", [str(d)])


def cmd_dim_sp(a) -> Outcome:
    d = rt.dim_sp(a.lam, a.n)
    return Outcome({"dim": d}, "Weyl dimension formula for Sp_2n", "closed-form", [str(d)])


def cmd_branch(a) -> Outcome:
    terms = [{"nu": _lam(nu), "dim": rt.dim_sp(nu, a.n)} for nu in rt.interleavings(a.lam, a.n)]
    total = sum(t["dim"] for t in terms)
    text = [f"({nu.to_str()}) dim {rt.dim_sp(nu, a.n)}" for nu in rt.interleavings(a.lam, a.n)]
    text.append(f"total {total}")
    return Outcome({"terms": terms, "total": total}, "restriction to sp_2n", "closed-form", text)


def cmd_shtepin(a) -> Outcome:
    factors = [{"mu": _lam(mu), "shift": s, "dim": rt.dim_odd(mu, a.n)} for mu, s in rt.shtepin_factors(a.lam, a.n)]
    total = sum(f["dim"] for f in factors)
    target = rt.dim_sp(a.lam, a.n + 1)
    res = {"factors": factors, "total": total, "dim_sp_next": target}
    text = [f"({','.join(map(str, f['mu'])) or '0'}) shift {f['shift']} dim {f['dim']}" for f in factors]
    text.append(f"total {total} = dim_sp {target}")
    return Outcome(res, "filtration of Sp_2n+2 modules", "closed-form", text, ok=total == target)


def cmd_h0(a) -> Outcome:
    d = rt.h0_line_bundle(a.lam, a.N)
    return Outcome({"h0": d}, "Borel-Weil sections", "closed-form", [str(d)])


def cmd_oracle(a) -> Outcome:
    got = trace_free_schur_dim(a.lam, a.N)
    res: dict = {"dim": got}
    ok = True
    if a.N % 2:
        formula = rt.dim_odd(a.lam, (a.N - 1) // 2)
    else:
        formula = rt.dim_sp(a.lam, a.N // 2)
    res["formula"] = formula
    ok = formula == got
    return Outcome(res, "tensor oracle for trace-free Schur modules", "oracle",
                   [f"oracle {got}, formula {formula}"], ok=ok)


def cmd_bott(a) -> Outcome:
    r = bott.bott_cohomology(a.eta, a.k)
    res = {"vanishes": r.vanishes, "degree": r.degree, "weight": list(r.weight) if r.weight else None,
           "dim": r.dim, "shifted": list(r.shifted)}
    if r.vanishes:
        text = [f"all cohomology vanishes (eta+rho = {r.shifted})"]
    else:
        text = [f"H^{r.degree} has highest weight {r.weight}, dim {r.dim}"]
    return Outcome(res, "Bott theorem on G(k,m)", "closed-form", text)


def cmd_koszul(a) -> Outcome:
    rep = bott.koszul_acyclicity_check(a.k, a.n)
    comps = [
        {"j": c.j, "lambda_minus": _lam(c.lam_minus), "eta": list(c.eta.entries),
         "vanishes": c.result.vanishes, "degree": c.result.degree, "dim": c.result.dim}
        for c in rep.components
    ]
    h0 = rep.h0_by_j()
    res = {"acyclic": rep.acyclic, "singular_beyond_one": rep.singular_beyond_one,
           "components": comps, "h0_by_j": {str(j): v for j, v in h0.items()},
           "plucker_h0": bott.plucker_h0(a.k, a.n)}
    text = [f"acyclic: {rep.acyclic}", f"j>=2 terms singular: {rep.singular_beyond_one}",
            f"h0 by j: {h0}", f"Plucker span: {res['plucker_h0']}"]
    return Outcome(res, "Koszul resolution of the odd grassmannian", "closed-form", text,
                   ok=rep.acyclic and rep.singular_beyond_one)


def cmd_fano(a) -> Outcome:
    r = bott.fano_report(a.k, a.n)
    res = {"components": r.components, "dims": [r.dim_first, r.dim_second],
           "ranks": [r.rank_first, r.rank_second], "extrapolated": r.extrapolated}
    text = [f"{r.components} component(s)", f"dims {r.dim_first}/{r.dim_second}",
            f"ranks {r.rank_first}/{r.rank_second}"]
    if r.extrapolated:
        text.append("ranks extrapolated beyond the checked case k = n = 3")
    return Outcome(res, "Fano scheme of maximal linear spaces", "closed-form", text)


def cmd_verify(a) -> Outcome:
    level = a.level or verify.default_level()
    overrides = verify.load_config(a.config) if a.config else None
    params = verify.params_for(level, overrides)
    only = list(a.only) if a.only else None
    if only and any(not 1 <= i <= len(verify.CRITERIA) for i in only):
        raise ValueError(f"criteria are numbered 1..{len(verify.CRITERIA)}")
    results = verify.run_all(params, only)
    rows = [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    ok = all(r.passed for r in results)
    return Outcome({"level": level, "criteria": rows, "passed": ok}, "acceptance suite",
                   "enumeration", [r.line() for r in results], ok=ok)


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddsymp", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="emit a JSON object")
        sp.set_defaults(handler=fn)
        return sp

    sp = add("weyl", cmd_weyl, "enumerate W(Sp_2n) or the odd interval W_2n+1")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--odd", action="store_true")
    sp.add_argument("--method", choices=["window", "interval"], default="window")
    sp.add_argument("--list", action="store_true", help="list every element")

    sp = add("bruhat", cmd_bruhat, "compare two signed permutations")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--odd", action="store_true")
    sp.add_argument("--w", required=True, help="window in bar notation, e.g. 1b,2")
    sp.add_argument("--v", required=True)
    sp.add_argument("--oracle", action="store_true", help="also run the chain oracle")

    for name, fn, help_ in (("cells", cmd_cells, "list Schubert cells"),
                            ("poincare", cmd_poincare, "Poincare polynomial by cell enumeration")):
        sp = add(name, fn, help_)
        sp.add_argument("--space", choices=["grass", "flag"], required=True)
        sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--k", type=int)
        if name == "cells":
            sp.add_argument("--index", help="show one cell, e.g. 4,6,8")

    sp = add("orbits", cmd_orbits, "orbit stratification")
    sp.add_argument("--space", choices=["grass", "flag"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--cell", help="report the orbit of one cell label")

    for name, fn, help_ in (("dim-odd", cmd_dim_odd, "dim of the trace-free Schur module on C^2n+1"),
                            ("dim-sp", cmd_dim_sp, "dim of the simple Sp_2n module"),
                            ("branch", cmd_branch, "restriction to sp_2n"),
                            ("shtepin", cmd_shtepin, "filtration factors of an Sp_2n+2 module")):
        sp = add(name, fn, help_)
        sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
        sp.add_argument("--n", type=int, required=True)

    for name, fn, help_ in (("h0", cmd_h0, "sections of L_lambda on the flag manifold of C^N"),
                            ("oracle", cmd_oracle, "brute-force trace-free Schur dimension")):
        sp = add(name, fn, help_)
        sp.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
        sp.add_argument("--N", type=int, required=True)

    sp = add("bott", cmd_bott, "cohomology of E_eta on G(k,m)")
    sp.add_argument("--eta", type=int_list_arg, required=True, help="comma list; use --eta=-1,0 for negatives")
    sp.add_argument("--k", type=int, required=True)

    for name, fn, help_ in (("koszul", cmd_koszul, "Bott analysis of the Koszul complex"),
                            ("fano", cmd_fano, "Fano scheme invariants")):
        sp = add(name, fn, help_)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = add("verify", cmd_verify, "run the acceptance suite")
    sp.add_argument("--level", choices=["quick", "full"], default=None,
                    help=f"defaults to ${verify.LEVEL_ENV} or 'full'")
    sp.add_argument("--config", help="JSON file overriding parameter ranges")
    sp.add_argument("--only", type=int_list_arg, help="comma list of criterion numbers")
    return p


def _input_of(args: argparse.Namespace) -> dict:
    out = {}
    for key, value in vars(args).items():
        if key in ("handler", "json") or value is None or value is False:
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        outcome = args.handler(args)
    except (ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(dumps({
            "input": _input_of(args),
            "result": outcome.result,
            "provenance": {"paper_anchor": outcome.anchor, "mode": outcome.mode},
        }))
    else:
        print("\n".join(outcome.text))
    return 0 if outcome.ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

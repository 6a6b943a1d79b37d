"""Command-line front end.  Tables are for humans; --json is the contract.

Exit codes: 0 success, 2 usage error, 3 catalog verification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from fano3 import blowup, catalog, riemannroch, sarkisov, scrolls, wps
from fano3.exactcore import Basis, DivisorClass, cls2


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, Basis):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":")) + "\n"


def _emit(out, payload: Any, as_json: bool, table: str) -> None:
    if as_json:
        out.write(dumps(payload))
    else:
        out.write(table if table.endswith("\n") else table + "\n")


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class SystemExit2(Exception):
    """Usage error surfaced with exit code 2."""


# --- rr -------------------------------------------------------------------

def _cmd_rr(args, out) -> int:
    if (args.degree is None) == (args.genus is None):
        raise SystemExit2("give exactly one of --degree / --genus")
    if args.genus is not None:
        fn = riemannroch.FanoNumerics(args.dim, args.index, riemannroch.genus_degree(genus=args.genus))
    else:
        fn = riemannroch.FanoNumerics(args.dim, args.index, Fraction(args.degree))
    chi = riemannroch.hilbert_polynomial(fn)
    value = chi(args.t)
    payload = {
        "dim": args.dim,
        "index": args.index,
        "degree": fn.degree,
        "t": args.t,
        "value": value,
        "coefficients": list(chi.coeffs),
        "h0_fundamental": riemannroch.h0_fundamental(fn),
    }
    _emit(out, payload, args.json, _frac_str(value))
    return 0


# --- blowup ---------------------------------------------------------------

def _cmd_blowup(args, out) -> int:
    if (args.curve is None) == (not args.point):
        raise SystemExit2("give exactly one of --point / --curve DEG,GENUS")
    c = Fraction(args.antik_cube)
    if args.point:
        form = blowup.blowup_point(c)
        center = {"kind": "point"}
    else:
        deg, genus = (int(x) for x in args.curve.split(","))
        form = blowup.blowup_curve(c, blowup.CurveCenter(deg, genus))
        center = {"kind": "curve", "deg_antik": deg, "genus": genus}
    names = ["(-K)^3", "(-K)^2.E", "(-K).E^2", "E^3"]
    table = "\n".join(f"{n:10s} {_frac_str(v)}" for n, v in zip(names, form.values))
    if form.not_big:
        table += "\nflag: anticanonical class not big"
    payload = {"center": center, "basis": "KE", "values": list(form.values), "not_big": form.not_big}
    _emit(out, payload, args.json, table)
    return 0


# --- scroll ---------------------------------------------------------------

_CLASS_TERM = re.compile(r"([+-]?\d*)([MF])")


def parse_mf_class(text: str) -> DivisorClass:
    m = f = Fraction(0)
    pos = 0
    cleaned = text.replace(" ", "")
    while pos < len(cleaned):
        match = _CLASS_TERM.match(cleaned, pos)
        if match is None:
            raise SystemExit2(f"cannot parse divisor class {text!r}")
        coeff_txt = match.group(1)
        if coeff_txt in ("", "+"):
            coeff = Fraction(1)
        elif coeff_txt == "-":
            coeff = Fraction(-1)
        else:
            coeff = Fraction(int(coeff_txt))
        if match.group(2) == "M":
            m += coeff
        else:
            f += coeff
        pos = match.end()
    if not cleaned:
        raise SystemExit2("empty divisor class")
    return cls2(Basis.MF, m, f)


def _cmd_scroll(args, out) -> int:
    if args.hyperelliptic is not None:
        cands = scrolls.mark_realized(
            scrolls.hyperelliptic_candidates(args.hyperelliptic),
            catalog.realized_scrolls("hyperelliptic", args.hyperelliptic),
        )
        rows = [
            {"splitting": list(c.scroll.splitting), "branch": list(c.branch_class.coords),
             "status": c.status, "entry": c.realized_as}
            for c in cands
        ]
        table = "\n".join(f"{str(r['splitting']):15s} {r['status']}" for r in rows)
        _emit(out, rows, args.json, table)
        return 0
    if args.trigonal is not None:
        cands = scrolls.mark_realized(
            scrolls.trigonal_candidates(args.trigonal),
            catalog.realized_scrolls("trigonal", args.trigonal),
        )
        rows = [
            {"splitting": list(c.scroll.splitting), "status": c.status,
             "witness": c.witness, "witness_k": c.witness_k, "entry": c.realized_as}
            for c in cands
        ]
        table = "\n".join(
            f"{str(r['splitting']):15s} {r['status']}"
            + (f" (witness {_frac_str(r['witness'])} at k={r['witness_k']})" if r["witness"] is not None else "")
            for r in rows
        )
        _emit(out, rows, args.json, table)
        return 0
    if not args.weights:
        raise SystemExit2("--weights is required outside --hyperelliptic/--trigonal")
    s = scrolls.ScrollData(tuple(int(d) for d in args.weights.split(",")))
    if args.h0:
        value = scrolls.scroll_h0(s)
        _emit(out, {"splitting": list(s.splitting), "h0": value}, args.json, str(value))
    elif args.canonical:
        k = scrolls.scroll_canonical(s)
        _emit(
            out,
            {"splitting": list(s.splitting), "canonical": list(k.coords)},
            args.json,
            f"K = {_frac_str(k.coords[0])} M + {_frac_str(k.coords[1])} F",
        )
    elif args.intersect:
        classes = [parse_mf_class(c) for c in args.intersect.split(",")]
        value = scrolls.scroll_intersection(s, classes)
        _emit(out, {"splitting": list(s.splitting), "value": value}, args.json, _frac_str(value))
    else:
        raise SystemExit2("give one of --h0 / --canonical / --intersect / --hyperelliptic / --trigonal")
    return 0


# --- wps ------------------------------------------------------------------

def _cmd_wps(args, out) -> int:
    w = wps.WeightSystem(tuple(int(x) for x in args.weights.split(",")))
    normalized = wps.normalize(w)
    payload: dict[str, Any] = {
        "weights": list(w.weights),
        "well_formed": wps.is_well_formed(w),
        "normalized": list(normalized.weights),
        "pic_index": wps.pic_index(normalized),
    }
    lines = [
        f"weights      {list(w.weights)}",
        f"well-formed  {payload['well_formed']}",
        f"normalized   {payload['normalized']}",
        f"pic index    {payload['pic_index']}",
    ]
    if args.degrees:
        spec = wps.CompleteIntersectionSpec(normalized, tuple(int(x) for x in args.degrees.split(",")))
        inv = wps.ci_fano_invariants(spec)
        payload.update(
            degrees=list(spec.degrees),
            dim=inv.dim,
            index=inv.index,
            antik_power=inv.antik_power,
            genus=inv.genus,
            warnings=list(inv.warnings),
        )
        lines += [
            f"dim          {inv.dim}",
            f"index        {inv.index}",
            f"(-K)^dim     {_frac_str(inv.antik_power)}",
        ]
        if inv.genus is not None:
            lines.append(f"genus        {inv.genus}")
        lines += [f"warning      {msg}" for msg in inv.warnings]
    _emit(out, payload, args.json, "\n".join(lines))
    return 0


# --- link -----------------------------------------------------------------

def candidate_payload(c: sarkisov.LinkCandidate) -> dict:
    return {
        "center": c.center,
        "g": c.g,
        "type": c.ctype,
        "mu": c.mu,
        "a": c.a,
        "b": c.b,
        "mbar": list(c.mbar),
        "fbar": list(c.fbar),
        "target": {k: v for k, v in dataclasses.asdict(c.target).items() if v is not None},
        "ebar_cube": c.ebar_cube,
        "defect": c.defect,
        "status": c.status,
        "m_cap": c.m_cap,
    }


def _candidate_row(c: sarkisov.LinkCandidate) -> str:
    t = c.target
    if t.kind == "del-pezzo-fibration":
        desc = f"del Pezzo fibration of degree {t.fiber_degree}"
    elif t.kind == "conic-bundle":
        desc = f"conic bundle, discriminant degree {t.discriminant_degree}"
    elif t.kind == "fano-curve-blowdown":
        desc = (
            f"blowup of curve (deg {t.deg_z}, genus {t.genus_z}) on target with"
            f" iota={t.iota_y}, d={t.degree_y}"
        )
    else:
        desc = f"point blowdown (k={t.k}) onto Fano with (-K)^3={t.antik_cube_y}"
    return (
        f"g={c.g:<3d} {c.ctype:<6s} F=({c.fbar[0]},{c.fbar[1]}) "
        f"Ebar^3={_frac_str(c.ebar_cube):>4s} def={_frac_str(c.defect):>3s} "
        f"{c.status:<28s} {desc}"
    )


def _cmd_link(args, out) -> int:
    if (args.genus is None) == (args.genus_range is None):
        raise SystemExit2("give exactly one of --genus / --genus-range A..B")
    if args.genus is not None:
        genera = [args.genus]
    else:
        lo, _, hi = args.genus_range.partition("..")
        genera = list(range(int(lo), int(hi) + 1))
    cands = sarkisov.enumerate_links(args.center, genera, workers=args.workers)
    if not args.show_excluded:
        cands = [c for c in cands if c.confirmed]
    payload = [candidate_payload(c) for c in cands]
    table = "\n".join(_candidate_row(c) for c in cands) or "(no candidates)"
    _emit(out, payload, args.json, table)
    return 0


# --- rho2 -----------------------------------------------------------------

def _cmd_rho2(args, out) -> int:
    if args.action != "enumerate-primitive":
        raise SystemExit2("the only action is enumerate-primitive")
    sols = sarkisov.rho2_primitive_enumerate()
    payload = [
        {
            "antik_cube": s.antik_cube,
            "rays": [s.ray1, s.ray2],
            "d": s.d,
            "d_prime": s.d_prime,
            "k": s.k,
            "g": s.g,
            "a": s.a,
            "b": s.b,
        }
        for s in sols
    ]
    table = "\n".join(
        f"(-K)^3={s.antik_cube:<3d} rays=({s.ray1},{s.ray2:<6s}) d={s.d} "
        f"d'={'-' if s.d_prime is None else s.d_prime} g={s.g:<3d} "
        f"(a,b)=({_frac_str(s.a)},{_frac_str(s.b)})"
        for s in sols
    )
    _emit(out, payload, args.json, table)
    return 0


# --- catalog --------------------------------------------------------------

def _entry_payload(e: catalog.CatalogEntry) -> dict:
    d = dataclasses.asdict(e)
    return {k: v for k, v in d.items() if v is not None}


def _cmd_catalog(args, out) -> int:
    cat = catalog.load()
    if args.action == "list":
        entries = cat.list(rho=args.rho, index=args.index, genus=args.genus, flag=args.flag)
        payload = [_entry_payload(e) for e in entries]
        table = "\n".join(
            f"{e.id:22s} rho={e.rho:<2d} iota={e.index} (-K)^3={e.antik_cube:<3d} "
            f"h12={e.h12:<2d} chi={e.chi_top:<5d} {e.description}"
            for e in entries
        )
        _emit(out, payload, args.json, table or "(no entries)")
        return 0
    if args.action == "facts":
        if not args.subject:
            raise SystemExit2("catalog facts needs a subject id")
        facts = cat.facts_for(args.subject)
        payload = [dataclasses.asdict(f) for f in facts]
        table = "\n".join(f"{f.predicate:12s} {f.value}" for f in facts) or "(no facts)"
        _emit(out, payload, args.json, table)
        return 0
    if args.action == "verify":
        if args.id:
            results = catalog.verify(cat.by_id(args.id), cat)
        else:
            results = catalog.verify_all(cat)
        failures = [r for r in results if not r.passed]
        payload = {
            "checks": len(results),
            "failures": [dataclasses.asdict(r) for r in failures],
        }
        lines = [f"{len(results)} checks, {len(failures)} failures"]
        lines += [f"FAIL {r.entry_id} {r.check}: {r.lhs} != {r.rhs}" for r in failures]
        _emit(out, payload, args.json, "\n".join(lines))
        return 3 if failures else 0
    raise SystemExit2(f"unknown catalog action {args.action!r}")


# --- driver ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fano3", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    rr = sub.add_parser("rr", help="Hilbert polynomial / section counts")
    rr.add_argument("--dim", type=int, required=True)
    rr.add_argument("--index", type=int, required=True)
    rr.add_argument("--degree", type=int)
    rr.add_argument("--genus", type=int)
    rr.add_argument("--t", type=int, default=1)
    rr.add_argument("--json", action="store_true")

    bl = sub.add_parser("blowup", help="intersection form of a blowup")
    bl.add_argument("--antik-cube", type=int, required=True)
    bl.add_argument("--point", action="store_true")
    bl.add_argument("--curve", help="DEG,GENUS with DEG = (-K).Z")
    bl.add_argument("--json", action="store_true")

    sc = sub.add_parser("scroll", help="scroll intersection calculus")
    sc.add_argument("--weights", help="splitting degrees d1,d2,...")
    sc.add_argument("--h0", action="store_true")
    sc.add_argument("--canonical", action="store_true")
    sc.add_argument("--intersect", help="comma list of classes like 3M-4F,M-F,...")
    sc.add_argument("--hyperelliptic", type=int, help="genus for the rank-3 case list")
    sc.add_argument("--trigonal", type=int, help="genus for the rank-4 case list")
    sc.add_argument("--json", action="store_true")

    wp = sub.add_parser("wps", help="weighted projective space arithmetic")
    wp.add_argument("--weights", required=True)
    wp.add_argument("--degrees")
    wp.add_argument("--json", action="store_true")

    ln = sub.add_parser("link", help="two-ray link enumeration")
    ln.add_argument("--center", choices=("line", "conic", "point"), required=True)
    ln.add_argument("--genus", type=int)
    ln.add_argument("--genus-range", help="A..B inclusive")
    ln.add_argument("--show-excluded", action="store_true")
    ln.add_argument("--workers", type=int, default=1)
    ln.add_argument("--json", action="store_true")

    r2 = sub.add_parser("rho2", help="Picard-number-2 enumeration")
    r2.add_argument("action", choices=("enumerate-primitive",))
    r2.add_argument("--json", action="store_true")

    ct = sub.add_parser("catalog", help="classification tables")
    ct.add_argument("action", choices=("list", "verify", "facts"))
    ct.add_argument("subject", nargs="?")
    ct.add_argument("--all", action="store_true")
    ct.add_argument("--id")
    ct.add_argument("--rho", type=int)
    ct.add_argument("--index", type=int)
    ct.add_argument("--genus", type=int)
    ct.add_argument("--flag")
    ct.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "rr": _cmd_rr,
    "blowup": _cmd_blowup,
    "scroll": _cmd_scroll,
    "wps": _cmd_wps,
    "link": _cmd_link,
    "rho2": _cmd_rho2,
    "catalog": _cmd_catalog,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

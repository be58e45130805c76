"""Command-line front end.

    hopfkit verify <target> <battery> [--json PATH] [--window K] [--degree D] [--field SPEC] [--order-bound N]
    hopfkit inspect <target> <what>
    hopfkit export <preset> --out PATH

Targets are preset names (sweedler, taft:3, group:C5, dual:taft:3, ...),
bicross:n, qsl2, or a path to an algebra file.
Exit codes: 0 all applicable checks pass, 1 a check fails or the input
breaks an axiom, 2 the input cannot be parsed or the preset is unknown.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from . import bicross as bx
from . import qsl2
from .constructions import preset
from .errors import AxiomFailure, HopfkitError, ParseError, UnknownPreset
from .fileformat import load_algebra, write_algebra
from .hopf import HopfPresentation, format_vector, verify_axioms, verified
from .integrals import (analyze, nakayama_chi, nakayama_omega, trace_integrals, verify_bijections,
                        verify_lemma21, verify_sstarlambda)
from .radford import (antipode_orders, cocommutative_integral_checks, default_bound, larson_checks,
                      mainss_battery, verify_cor37, verify_s4, verify_secondchi)
from .report import VerificationReport
from .scalar import FieldSpec

BATTERIES = ("axioms", "integrals", "radford", "mainss", "all")
INSPECTIONS = ("integrals", "grouplikes", "nakayama", "orders")


def schema() -> dict:
    text = resources.files("hopfkit").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


# -- targets ---------------------------------------------------------------------

class Target:
    def __init__(self, label: str, kind: str, obj=None, n: int | None = None):
        self.label = label
        self.kind = kind  # "finite", "bicross" or "qsl2"
        self.obj = obj
        self.n = n

    def descriptor(self) -> dict:
        if self.kind == "finite":
            H = self.obj
            return {"target": self.label, "name": H.name, "dim": H.dim, "field": H.field.descriptor()}
        if self.kind == "bicross":
            return {"target": self.label, "name": self.label, "dim": "infinite",
                    "field": {"field": "cyclotomic", "n": self.n}}
        return {"target": self.label, "name": "qsl2", "dim": "infinite", "field": {"field": "Qq"}}


def resolve(target: str, field_opt: str | None = None) -> Target:
    field = FieldSpec.from_option(field_opt) if field_opt else None
    if target.startswith("bicross:"):
        arg = target.partition(":")[2]
        if not arg.isdigit() or int(arg) < 2:
            raise UnknownPreset("bicross needs an integer n >= 2, e.g. bicross:3")
        return Target(target, "bicross", n=int(arg))
    if target == "qsl2":
        return Target(target, "qsl2")
    p = Path(target)
    if p.suffix in (".jsonl", ".json") or p.exists():
        return Target(target, "finite", load_algebra(p))
    return Target(target, "finite", preset(target, field))


# -- batteries --------------------------------------------------------------------

def _na(name: str, note: str) -> VerificationReport:
    return VerificationReport().add(name, None, note=note)


def _finite(H: HopfPresentation, battery: str, bound: int) -> VerificationReport:
    rep = VerificationReport()
    if battery in ("axioms", "all"):
        rep.extend(verify_axioms(H), "axioms/")
        if battery == "axioms" or not rep.ok:
            return rep
    verified(H)
    I, G = analyze(H)
    if battery in ("integrals", "all"):
        rep.extend(verify_lemma21(H, I, G), "integrals/")
        rep.extend(verify_bijections(H, I), "integrals/")
        rep.extend(verify_sstarlambda(H, I, G), "integrals/")
        nakayama_omega(H, I)
        tr = trace_integrals(H)
        rep.values["integrals/left_H"] = str(I.left_H)
        rep.values["integrals/right_H"] = str(I.right_H)
        rep.values["integrals/left_Hstar"] = str(I.left_Hstar)
        rep.values["integrals/right_Hstar"] = str(I.right_Hstar)
        rep.values["integrals/trace-r"] = str(tr.r)
        rep.values["integrals/trace-lambda"] = str(tr.lam)
    if battery in ("radford", "all"):
        rep.extend(verify_s4(H, I, G, bound), "radford/")
        rep.extend(verify_secondchi(H, I, G), "radford/")
        for k, v in antipode_orders(H, G, bound).items():
            rep.values[f"radford/{k}"] = v
    if battery in ("mainss", "all"):
        rep.extend(cocommutative_integral_checks(H, I, G), "mainss/")
        rep.extend(larson_checks(H, I, G), "mainss/")
        rep.extend(mainss_battery(H, I), "mainss/")
        rep.extend(verify_cor37(H, I), "mainss/")
    return rep


def _bicross(n: int, battery: str, K: int, bound: int) -> VerificationReport:
    B = bx.Bicross(n)
    rep = VerificationReport()
    if battery in ("axioms", "all"):
        rep.extend(bx.verify_window_axioms(B, K), "axioms/")
    if battery in ("integrals", "radford", "all"):
        g = bx.distinguished_g_bicross(B, K)
        alpha = bx.distinguished_alpha_bicross(B)
    if battery in ("integrals", "all"):
        rep.extend(bx.verify_right_integral(B, K), "integrals/")
        rep.values["integrals/g"] = str(g)
        rep.values["integrals/alpha"] = alpha.table()
    if battery in ("radford", "all"):
        rep.extend(bx.verify_s4_bicross(B, K, alpha, g), "radford/")
        rep.values["radford/order-S"] = bx.order_of_antipode_bicross(B, K, bound).value
        rep.values["radford/order-alpha"] = bx.order_of_character_bicross(alpha, bound).value
        rep.values["radford/order-g"] = bx.order_of_grouplike_bicross(g, bound).value
        rep.values["radford/order-bound"] = bound
    if battery in ("mainss", "all"):
        rep.extend(_na("mainss-unanimity", "finite-dimensional theorem; target is infinite-dimensional"), "mainss/")
    return rep


def _qsl(battery: str, D: int, bound: int) -> VerificationReport:
    rep = VerificationReport()
    if battery in ("axioms", "all"):
        rep.extend(qsl2.verify_window_axioms(min(D, 3)), "axioms/")
    if battery in ("integrals", "all"):
        rep.extend(qsl2.verify_left_integral(D), "integrals/")
        rep.extend(qsl2.verify_chi_alpha(D), "integrals/")
    if battery in ("radford", "all"):
        rep.extend(qsl2.verify_s4_qsl(D), "radford/")
        rep.values["radford/order-S"] = qsl2.antipode_order(bound).value
        rep.values["radford/order-bound"] = bound
    if battery in ("mainss", "all"):
        rep.extend(_na("mainss-unanimity", "finite-dimensional theorem; target is infinite-dimensional"), "mainss/")
    rep.values["limitation"] = qsl2.WINDOW_NOTE.format(D=D)
    return rep


def run_battery(t: Target, battery: str, window: int, degree: int, bound: int | None) -> VerificationReport:
    if t.kind == "finite":
        return _finite(t.obj, battery, default_bound(t.obj) if bound is None else bound)
    if t.kind == "bicross":
        return _bicross(t.n, battery, window, 100 if bound is None else bound)
    return _qsl(battery, degree, 100 if bound is None else bound)


def document(t: Target, battery: str, rep: VerificationReport, params: dict) -> dict:
    rep = rep.sorted()
    return {
        "algebra": t.descriptor(),
        "battery": battery,
        "parameters": params,
        "checks": [c.to_dict() for c in rep.checks],
        "values": rep.values,
        "status": "pass" if rep.ok else "fail",
        "engine": {"name": "hopfkit", "version": __version__},
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table(rep: VerificationReport) -> str:
    rows = [f"{'CHECK':<56} {'STATUS':<15} DETAIL", "-" * 90]
    for c in rep.sorted().checks:
        detail = ""
        if c.witness:
            detail = f"at {','.join(c.witness['basis'])}: {c.witness['lhs']} != {c.witness['rhs']}"
        elif c.note:
            detail = c.note
        rows.append(f"{c.name:<56} {c.status:<15} {detail}")
    return "\n".join(rows)


def _values_lines(values: dict) -> list:
    return [f"{k:<32} {json.dumps(v, sort_keys=True, ensure_ascii=False) if not isinstance(v, str) else v}"
            for k, v in sorted(values.items())]


# -- commands ---------------------------------------------------------------------

def cmd_verify(args) -> int:
    t = resolve(args.target, args.field)
    rep = run_battery(t, args.battery, args.window, args.degree, args.order_bound)
    params = {"window": args.window if t.kind == "bicross" else None,
              "degree": args.degree if t.kind == "qsl2" else None,
              "order_bound": args.order_bound}
    params = {k: v for k, v in params.items() if v is not None}
    doc = document(t, args.battery, rep, params)
    if args.json:
        text = dumps(doc)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text, encoding="utf-8")
            print(f"{t.label} {args.battery}: {doc['status']} ({len(doc['checks'])} checks) -> {args.json}")
    else:
        print(f"{t.label}  battery={args.battery}")
        print(table(rep))
        if rep.values:
            print()
            print("\n".join(_values_lines(rep.values)))
        print(f"\nstatus: {doc['status']}")
    return 0 if doc["status"] == "pass" else 1


def _inspect_finite(H: HopfPresentation, what: str, bound: int) -> dict:
    I, G = analyze(H)
    if what == "integrals":
        return {"left_H": str(I.left_H), "right_H": str(I.right_H),
                "left_Hstar": str(I.left_Hstar), "right_Hstar": str(I.right_Hstar)}
    if what == "grouplikes":
        return {"alpha": {b: str(v) for b, v in zip(H.basis, G.alpha.coeffs)},
                "alpha_inv": {b: str(v) for b, v in zip(H.basis, G.alpha_inv.coeffs)},
                "g": str(G.g), "g_inv": str(G.g_inv)}
    if what == "nakayama":
        chi, omega = nakayama_chi(H, I), nakayama_omega(H, I)

        def images(M):
            return {b: format_vector(M.column(i), H.basis) for i, b in enumerate(H.basis)}

        return {"chi": images(chi), "omega": images(omega)}
    return antipode_orders(H, G, bound)


def _inspect_bicross(n: int, what: str, K: int, bound: int) -> dict:
    B = bx.Bicross(n)
    if what == "integrals":
        return {"right_Hstar": str(bx.right_integral(B))}
    if what == "grouplikes":
        g = bx.distinguished_g_bicross(B, K)
        return {"alpha": bx.distinguished_alpha_bicross(B).table(), "g": str(g), "g_inv": str(B.antipode(g))}
    if what == "nakayama":
        gens = [B.basis(1, 0, 0), B.basis(0, 1, 0), B.basis(0, 0, 1)]
        om = bx.solve_omega(B, gens, 2)
        return {"omega": {B.name(next(iter(h.terms))): str(o) for h, o in zip(gens, om)}}
    g = bx.distinguished_g_bicross(B, K)
    alpha = bx.distinguished_alpha_bicross(B)
    return {"order-S": bx.order_of_antipode_bicross(B, K, bound).value,
            "order-alpha": bx.order_of_character_bicross(alpha, bound).value,
            "order-g": bx.order_of_grouplike_bicross(g, bound).value, "order-bound": bound}


def _inspect_qsl(what: str, D: int, bound: int) -> dict:
    if what == "integrals":
        return {"left_Hstar": "lambda(b^m c^m) = (-1)^m/[m+1], zero on other PBW monomials",
                "lambda(bc)": str(qsl2.lambda_eval(qsl2.normal_form("bc"))),
                "lambda(da)": str(qsl2.lambda_eval(qsl2.normal_form("da")))}
    chi = qsl2.solve_chi(min(D, 4))
    if what == "nakayama":
        return {"chi": {g: str(chi[g]) for g in qsl2.GENS}}
    alpha = {g: str(qsl2.qsl_counit(chi[g])) for g in qsl2.GENS}
    if what == "grouplikes":
        return {"alpha": alpha, "g": "1"}
    return {"order-S": qsl2.antipode_order(bound).value, "order-bound": bound}


def cmd_inspect(args) -> int:
    t = resolve(args.target, args.field)
    if t.kind == "finite":
        bound = default_bound(t.obj) if args.order_bound is None else args.order_bound
        objects = _inspect_finite(t.obj, args.what, bound)
    elif t.kind == "bicross":
        objects = _inspect_bicross(t.n, args.what, args.window, args.order_bound or 100)
    else:
        objects = _inspect_qsl(args.what, args.degree, args.order_bound or 100)
    doc = {"algebra": t.descriptor(), "inspect": args.what, "objects": objects,
           "engine": {"name": "hopfkit", "version": __version__}}
    if args.json:
        text = dumps(doc)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text, encoding="utf-8")
    else:
        print(f"{t.label}  {args.what}")
        for k, v in objects.items():
            if isinstance(v, dict):
                print(f"{k}:")
                for kk, vv in v.items():
                    print(f"  {kk:<16} {vv}")
            else:
                print(f"{k:<18} {v}")
    return 0


def cmd_export(args) -> int:
    t = resolve(args.preset, args.field)
    if t.kind != "finite":
        raise UnknownPreset(f"{args.preset} is infinite-dimensional and cannot be exported")
    write_algebra(t.obj, args.out)
    print(f"wrote {t.obj.name} ({t.obj.dim}-dimensional) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfkit", description="Exact verification of Hopf algebra identities.")
    p.add_argument("--version", action="version", version=f"hopfkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--field", help="field for presets: Q, Fp:<p>, cyclotomic:<n>, Qq")
        sp.add_argument("--window", type=int, default=bx.DEFAULT_WINDOW, help="bicross window |k| <= K")
        sp.add_argument("--degree", type=int, default=qsl2.DEFAULT_DEGREE, help="qsl2 degree window")
        sp.add_argument("--order-bound", type=int, default=None, help="order search cutoff")
        sp.add_argument("--json", metavar="PATH", help="write the JSON document here ('-' for stdout)")

    v = sub.add_parser("verify", help="run a verification battery")
    v.add_argument("target")
    v.add_argument("battery", choices=BATTERIES)
    common(v)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("inspect", help="print computed objects")
    i.add_argument("target")
    i.add_argument("what", choices=INSPECTIONS)
    common(i)
    i.set_defaults(func=cmd_inspect)

    e = sub.add_parser("export", help="write a preset as an algebra file")
    e.add_argument("preset")
    e.add_argument("--out", required=True)
    e.add_argument("--field")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownPreset) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AxiomFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.witness:
            w = exc.witness
            print(f"witness: at {','.join(w['basis'])}: {w['lhs']} != {w['rhs']}", file=sys.stderr)
        return 1
    except HopfkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

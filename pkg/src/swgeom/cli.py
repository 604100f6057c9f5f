"""Command-line front end.

Exit status: 0 on success (an obstructed verdict is a result, not a failure),
1 for domain errors, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import catalog, curvops, functional, geography, obstruct, surface
from .errors import DomainError

DEFAULT_SEED = 20000309


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def parse_surface_ref(ref: str) -> surface.MinimalSurfaceSpec:
    """A JSON file path, or ``name[:key=value,...]`` naming a catalog entry."""
    if ref == "-" or Path(ref).is_file():
        return surface.MinimalSurfaceSpec.from_json(_read_text(ref))
    name, _, rest = ref.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, _, val = item.partition("=")
        params[key] = int(val)
    return catalog.build(name, **params)


def _surface_from_args(args) -> surface.MinimalSurfaceSpec:
    if args.spec and args.catalog:
        raise DomainError("give either a spec file or --catalog, not both")
    if args.spec:
        return parse_surface_ref(args.spec)
    if args.catalog:
        return catalog.build(args.catalog, d=args.d, a=args.a, b=args.b, m=args.m)
    raise DomainError("no surface given: pass a spec file or --catalog NAME")


def _manifold_from_args(args) -> surface.FourManifold:
    return surface.FourManifold(_surface_from_args(args), k=args.k, l=args.l)


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _pi2_json(v: functional.PiSquaredRational) -> dict:
    return v.to_json()


# -- subcommands ---------------------------------------------------------------


def cmd_catalog(args):
    if args.action == "list":
        entries = {name: list(names) for name, (_, names, _) in catalog.CATALOG.items()}
        _emit(args, entries, "\n".join(f"{n}({', '.join(p)})" for n, p in entries.items()))
        return 0
    if not args.name:
        raise DomainError("catalog show needs an entry name")
    X = catalog.build(args.name, d=args.d, a=args.a, b=args.b, m=args.m)
    # the surface record is JSON either way
    print(X.to_json(indent=2))
    return 0


def _invariants_payload(m: surface.FourManifold) -> dict:
    inv = surface.invariants_of(m)
    return {
        "manifold": m.describe(),
        "chi": inv.chi,
        "tau": inv.tau,
        "b_plus": inv.b_plus,
        "b_minus": inv.b_minus,
        "c1sq_X": inv.c1sq_X,
        "sw_c1plus_sq_lower": inv.sw_c1plus_sq_lower,
        "spin": surface.spin_status(m).value,
        "two_chi_plus_3tau": inv.two_chi_plus_3tau,
    }


def cmd_invariants(args):
    m = _manifold_from_args(args)
    payload = _invariants_payload(m)
    lines = [f"M = {payload['manifold']}"]
    for key, label in (
        ("chi", "chi"),
        ("tau", "tau"),
        ("b_plus", "b+"),
        ("b_minus", "b-"),
        ("c1sq_X", "c1^2(X)"),
        ("sw_c1plus_sq_lower", "(c1+)^2 lower bound"),
        ("spin", "spin"),
        ("two_chi_plus_3tau", "2chi+3tau"),
    ):
        val = payload[key]
        lines.append(f"{label} = {'undefined' if val is None else val}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_obstruct(args):
    m = _manifold_from_args(args)
    verdict = obstruct.classify(m)
    ht = obstruct.hitchin_thorpe(m)
    payload = verdict.to_dict()
    payload["hitchin_thorpe"] = {"passes": ht.passes, "strict": ht.strict}
    _emit(args, payload, verdict.summary() + "\n" + json.dumps(verdict.witness, sort_keys=True))
    return 0


def cmd_functional(args):
    m = _manifold_from_args(args)
    X = m.minimal_model
    rows: list[tuple[str, object]] = []

    def attempt(label, fn):
        try:
            rows.append((label, fn()))
        except DomainError as exc:
            rows.append((label, f"n/a ({exc})"))

    attempt("I_s", lambda: functional.i_s(m))
    attempt("I_r", lambda: functional.i_r(m))
    attempt("ricci_lower_gb", lambda: functional.ricci_lower_gb(m))
    attempt("asd_scalar_lower", lambda: functional.asd_scalar_lower(m))
    attempt("I_R >=", lambda: functional.riemann_lower(m))
    attempt("Y^2 (Y <= 0)", lambda: functional.yamabe_squared(m)[0])
    attempt("Vol_s", lambda: functional.vol_s(m))
    attempt("Vol_Ks >=", lambda: functional.vol_ks_lower(m).value)
    if args.t is not None:
        attempt(f"mixed_vol(t={args.t}) >=", lambda: functional.mixed_vol_lower(m, args.t))
    attempt("two_sided_vol >=", lambda: functional.two_sided_vol_lower(m))
    bounds = None
    try:
        bounds = functional.weyl_scalar_lower(m)
    except DomainError:
        pass

    payload = {"manifold": m.describe(), "surface": X.name, "values": {}}
    lines = [f"M = {m.describe()}   (values in units of pi^2)"]
    for label, val in rows:
        if isinstance(val, functional.PiSquaredRational):
            payload["values"][label] = _pi2_json(val)
            lines.append(f"{label:<24} {val.exact():>22}   {val.decimal()}")
        else:
            payload["values"][label] = None
            lines.append(f"{label:<24} {val}")
    if bounds is not None:
        payload["weyl_scalar_lower"] = {"west": str(bounds.west), "glove": str(bounds.glove)}
        lines.append(f"{'west (1/4pi^2 units)':<24} {str(bounds.west):>22}")
        lines.append(f"{'glove (1/4pi^2 units)':<24} {str(bounds.glove):>22}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _load_operator(path: str) -> curvops.CurvatureOperator:
    data = json.loads(_read_text(path))
    if not isinstance(data, dict):
        raise DomainError("curvature input must be a JSON object")
    if "riem" in data:
        riem = np.asarray(data["riem"], dtype=float)
        if riem.size != 256:
            raise DomainError("riem needs 256 entries")
        return curvops.from_riemann(riem.reshape(4, 4, 4, 4))
    if "matrix" in data:
        mat = np.asarray(data["matrix"], dtype=float)
        if mat.size != 36:
            raise DomainError("matrix needs 36 entries")
        return curvops.decompose(mat.reshape(6, 6))
    return curvops.CurvatureOperator.from_dict(data)


def _scalars_payload(op) -> dict:
    sc = curvops.scalars(op)
    return {
        "s": sc.s,
        "w": sc.w,
        "w_tilde": sc.w_tilde,
        "frak_S": sc.frak_S,
        "norm_Wp": sc.norm_Wp,
        "norm_Wm": sc.norm_Wm,
        "norm_B": sc.norm_B,
    }


def cmd_curv(args):
    action = args.action
    if action == "model":
        radii = (args.r1, args.r2)
        op = curvops.model(args.name, args.scale, radii)
        print(op.to_json())
        return 0
    if not args.file:
        raise DomainError(f"curv {action} needs an input file (or - for stdin)")
    op = _load_operator(args.file)
    if action == "decompose":
        payload = {"operator": op.to_dict(), "scalars": _scalars_payload(op)}
        gb = curvops.gauss_bonnet_integrand(op)
        payload["gauss_bonnet"] = {"gb": gb.gb, "ricci_sq": gb.ricci_sq, "r0_sq": gb.r0_sq}
        if args.json:
            _emit(args, payload, "")
        else:
            print(op.to_json())
            for key, val in payload["scalars"].items():
                print(f"{key} = {val:.12g}")
            for key, val in payload["gauss_bonnet"].items():
                print(f"{key} = {val:.12g}")
        return 0
    if action == "sectional":
        if not args.plane:
            raise DomainError("curv sectional needs --plane u1,u2,u3,u4,v1,v2,v3,v4")
        vals = [float(x) for x in args.plane.split(",")]
        if len(vals) != 8:
            raise DomainError("--plane needs 8 comma-separated numbers")
        try:
            P = curvops.TwoPlane(vals[:4], vals[4:])
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        K = curvops.sectional(op, P)
        _emit(args, {"sectional": K}, f"K = {K:.12g}")
        return 0
    if action == "bottom":
        res = curvops.bottom_sectional(op, args.samples, args.seed)
        payload = {
            "estimate": res.estimate,
            "witness_value": res.witness_value,
            "bound_wgl": res.bound_wgl,
            "bound_crafty": res.bound_crafty,
            "witness_plane": {"u": res.witness_plane.u.tolist(), "v": res.witness_plane.v.tolist()},
            "samples": res.samples,
            "seed": res.seed,
        }
        text = "\n".join(
            f"{k} = {payload[k]:.12g}" for k in ("estimate", "witness_value", "bound_crafty", "bound_wgl")
        )
        _emit(args, payload, text)
        return 0
    if action == "check":
        results = curvops.check(op, seed=args.seed)
        payload = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        text = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results)
        _emit(args, payload, text)
        return 0 if all(r.passed for r in results) else 1
    raise DomainError(f"unknown curv action {action}")


def _pair_payload(res: geography.HomeoPair) -> tuple[dict, str]:
    payload = {
        "m1": res.m1.describe(),
        "m2": res.m2.describe(),
        "homeomorphic": res.homeomorphic,
        "i_r_m1": functional.i_r(res.m1).to_json(),
        "i_r_m2": functional.i_r(res.m2).to_json(),
        "i_r_gap": res.i_r_gap.to_json(),
        "verdicts": [v.to_dict() for v in res.verdicts],
    }
    text = "\n".join(
        [
            f"m1 = {payload['m1']}: I_r = {functional.i_r(res.m1)}; {res.verdicts[0].summary()}",
            f"m2 = {payload['m2']}: I_r = {functional.i_r(res.m2)}; {res.verdicts[1].summary()}",
            f"homeomorphic = {res.homeomorphic}",
            f"I_r gap = {res.i_r_gap} = {res.i_r_gap.decimal()}",
        ]
    )
    return payload, text


def cmd_pair(args):
    x = parse_surface_ref(args.x)
    xt = parse_surface_ref(args.x_tilde)
    res = geography.homeo_pair(x, xt, args.k, allow_minimal=args.allow_minimal)
    payload, text = _pair_payload(res)
    _emit(args, payload, text)
    return 0


def _default_plot_set() -> list[surface.FourManifold]:
    S = surface.FourManifold
    return [
        S(catalog.k3()),
        S(catalog.hypersurface(5)),
        S(catalog.hypersurface(6)),
        S(catalog.hypersurface(6), k=8),
        S(catalog.horikawa(3, 6)),
    ]


def cmd_geography(args):
    action = args.action
    if action == "ratio":
        m = _manifold_from_args(args)
        q = geography.ratio(m)
        _emit(args, {"manifold": m.describe(), "ratio": str(q)}, f"tau/chi = {q}")
        return 0
    if action == "construct":
        if args.q is None:
            raise DomainError("geography construct needs --q")
        target = geography.RatioTarget.of(args.q)
        m = geography.non_einstein_for_ratio(target)
        inv = surface.invariants_of(m)
        payload = {
            "q": str(target.q),
            "orientation_reversed": target.orientation_reversed,
            "chen_m": m.minimal_model.euler // 4,
            "k": m.k,
            "k_over_m": str(Fraction(m.k, m.minimal_model.euler // 4)),
            "chi": inv.chi,
            "tau": inv.tau,
            "ratio": str(geography.ratio(m)),
            "sw_einstein_obstruction": obstruct.sw_einstein_obstruction(m),
        }
        text = "\n".join(f"{k} = {v}" for k, v in payload.items())
        _emit(args, payload, text)
        return 0
    if action == "pair":
        return cmd_pair(args)
    if action == "plot":
        if not args.out:
            raise DomainError("geography plot needs --out FILE.svg|FILE.csv")
        mans = _default_plot_set()
        for ref in args.surfaces or []:
            mans.append(surface.FourManifold(parse_surface_ref(ref), k=args.k, l=args.l))
        out = Path(args.out)
        if out.suffix == ".csv":
            out.write_text(geography.geography_csv(mans), encoding="utf-8")
        elif out.suffix == ".svg":
            out.write_text(geography.geography_svg(mans), encoding="utf-8")
        else:
            raise DomainError("--out must end in .svg or .csv")
        print(f"wrote {out}")
        return 0
    raise DomainError(f"unknown geography action {action}")


# -- parser --------------------------------------------------------------------


def _add_surface_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("spec", nargs="?", help="surface spec JSON file, - for stdin, or name:key=val")
    parser.add_argument("--catalog", choices=sorted(catalog.CATALOG))
    parser.add_argument("--d", type=int, help="hypersurface degree")
    parser.add_argument("--a", type=int, help="Horikawa branch half-bidegree a")
    parser.add_argument("--b", type=int, help="Horikawa branch half-bidegree b")
    parser.add_argument("--m", type=int, help="Chen surface parameter")
    parser.add_argument("--k", type=int, default=0, help="number of blow-ups")
    parser.add_argument("--l", type=int, default=0, help="number of S1xS3 summands")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="swgeom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list or show catalog surfaces")
    c.add_argument("action", choices=("list", "show"))
    c.add_argument("name", nargs="?")
    for opt in ("--d", "--a", "--b", "--m"):
        c.add_argument(opt, type=int)
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("invariants", parents=[common], help="chi, tau, b+-, spin")
    _add_surface_args(s)
    s.set_defaults(func=cmd_invariants)

    o = sub.add_parser("obstruct", parents=[common], help="Einstein-metric verdict")
    _add_surface_args(o)
    o.set_defaults(func=cmd_obstruct)

    f = sub.add_parser("functional", parents=[common], help="curvature functional infima and volumes")
    _add_surface_args(f)
    f.add_argument("--t", type=_fraction, help="mixed-volume parameter p/q in [0, 1/2]")
    f.set_defaults(func=cmd_functional)

    cv = sub.add_parser("curv", parents=[common], help="pointwise curvature operators")
    cv.add_argument("action", choices=("decompose", "sectional", "bottom", "model", "check"))
    cv.add_argument("file", nargs="?", help="operator JSON (or - for stdin); model name for 'model'")
    cv.add_argument("--plane", help="u1,u2,u3,u4,v1,v2,v3,v4")
    cv.add_argument("--samples", type=int, default=100_000)
    cv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    cv.add_argument("--scale", type=float, default=1.0)
    cv.add_argument("--r1", type=float, default=1.0)
    cv.add_argument("--r2", type=float, default=1.0)
    cv.set_defaults(func=cmd_curv)

    g = sub.add_parser("geography", parents=[common], help="tau/chi constructions and plots")
    g.add_argument("action", choices=("ratio", "construct", "pair", "plot"))
    _add_surface_args(g)
    g.add_argument("--q", type=_fraction)
    g.add_argument("--x")
    g.add_argument("--x-tilde", dest="x_tilde")
    g.add_argument("--allow-minimal", action="store_true")
    g.add_argument("--out")
    g.add_argument("--surfaces", nargs="*")
    g.set_defaults(func=cmd_geography)

    pr = sub.add_parser("pair", parents=[common], help="homeomorphic pair with different I_r")
    pr.add_argument("--x", required=True, help="surface with the larger c1^2")
    pr.add_argument("--x-tilde", dest="x_tilde", required=True)
    pr.add_argument("--k", type=int, default=1)
    pr.add_argument("--allow-minimal", action="store_true")
    pr.set_defaults(func=cmd_pair)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "curv" and args.action == "model":
        args.name = args.file
        if args.name not in curvops.MODELS:
            parser.error(f"curv model needs one of {', '.join(curvops.MODELS)}")
    if args.command == "geography" and args.action == "pair" and not (args.x and args.x_tilde):
        parser.error("geography pair needs --x and --x-tilde")
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())

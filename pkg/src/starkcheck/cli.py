"""Command-line front end.

Exit codes: 0 pass, 1 check failure, 2 usage or configuration error,
3 precision exhausted."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath as mp

from .suites import SUITES, ConfigError, RunConfig, parse_field, parse_modulus, run_suite

__all__ = ["main", "build_parser", "tabulate"]

TABLES = ("zeta0", "zeta-deriv", "X", "Xp", "gamma-p", "L-values")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="key = value file mirroring the flags")
    p.add_argument("--field", help="'Q' or 'Q(sqrt D)'")
    p.add_argument("--modulus", help="'15', 'a,b' for (a + b w), or 'p29[:i]' for a prime above 29")
    p.add_argument("--prime", type=int)
    p.add_argument("--digits", type=int)
    p.add_argument("--padic-digits", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="starkcheck", description="Stark-type invariants and their verification suites")
    sub = ap.add_subparsers(dest="cmd", required=True)
    for name, hlp in [("rayclass", "narrow ray class group C_f"),
                      ("zeta0", "exact table of zeta(0, c)"),
                      ("invariants", "X, X_p and gamma_p per class over Q"),
                      ("stark", "Stark unit pipeline over a real quadratic field"),
                      ("gross-stark", "Gross-Stark check for K = Q(sqrt D) imaginary quadratic")]:
        _common(sub.add_parser(name, help=hlp))
    b = sub.add_parser("barnes", help="Barnes zeta or log Gamma(z, v)")
    _common(b)
    b.add_argument("--z", required=True)
    b.add_argument("--v", default="1", help="comma separated, rank 1 or 2")
    b.add_argument("--s", help="evaluate zeta(s, v, z) instead of log Gamma(z, v)")
    g = sub.add_parser("pgamma", help="Morita Gamma_p or LGamma_p")
    _common(g)
    g.add_argument("--x", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    _common(v)
    v.add_argument("suite", help=", ".join(SUITES))
    t = sub.add_parser("tabulate", help="tables as CSV or JSON")
    _common(t)
    t.add_argument("what", choices=TABLES)
    t.add_argument("--range", help="moduli a:b over Q (empty when a > b)")
    t.add_argument("--format", choices=("csv", "json"))
    return ap


def _config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = RunConfig.from_text(fh.read())
        except OSError as e:
            raise ConfigError(f"cannot read config: {e}") from None
    for key in ("field", "modulus", "prime", "digits", "padic_digits", "seed", "out"):
        val = getattr(args, key, None)
        if val is not None:
            setattr(cfg, key, val)
    return cfg


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"not a rational number: {s!r}") from None


def _group(cfg: RunConfig):
    from .rayclass import RayClassGroup
    F = parse_field(cfg.field)
    if not cfg.modulus:
        raise ConfigError("--modulus is required")
    return RayClassGroup(F, parse_modulus(F, cfg.modulus))


def _emit(obj, cfg: RunConfig, text: str | None = None):
    out = text if text is not None else json.dumps(obj, indent=2, default=str) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ---------------------------------------------------------------------------
# tables


def _moduli(cfg: RunConfig, rng: str | None):
    if rng is None:
        return [cfg.modulus]
    try:
        a, b = (int(t) for t in rng.split(":"))
    except ValueError:
        raise ConfigError(f"range must be a:b, got {rng!r}") from None
    if parse_field(cfg.field).degree != 1:
        raise ConfigError("--range is for moduli over Q")
    return [str(m) for m in range(a, b + 1)]


def tabulate(what: str, cfg: RunConfig, rng: str | None = None) -> tuple[list[str], list[list]]:
    """Header and rows of a deterministic table."""
    from .invariants import compute_X, compute_Xp, gamma_p_lower
    from .lfunctions import all_L_values, partial_zeta_deriv0
    from .rayclass import RayClassGroup
    from .shintani import zeta0_table
    if what not in TABLES:
        raise ConfigError(f"unknown table {what!r}")
    heads = {
        "zeta0": ["modulus", "class", "representative", "zeta0"],
        "zeta-deriv": ["modulus", "class", "zeta_deriv0", "radius"],
        "X": ["modulus", "class", "X", "radius", "status"],
        "Xp": ["modulus", "class", "p", "ord", "digits", "precision"],
        "gamma-p": ["m", "r", "p", "ord", "log_digits", "precision"],
        "L-values": ["modulus", "character", "L0", "L0_radius", "dL0", "root_number"],
    }
    rows = []
    F = parse_field(cfg.field)
    ctx = cfg.ctx()
    for mod in _moduli(cfg, rng):
        if mod is None:
            raise ConfigError("--modulus or --range is required")
        if what == "gamma-p":
            m = int(mod)
            p = cfg.prime
            if p is None or m % p == 0:
                raise ConfigError("gamma-p needs --prime not dividing the modulus")
            for r in range(1, m + 1):
                g = gamma_p_lower(r, m, ctx)
                rows.append([m, r, p, str(g.ord), "".join(map(str, g.logv.digits())), g.logv.abs_prec])
            continue
        G = RayClassGroup(F, parse_modulus(F, mod))
        if what == "zeta0":
            for c, z in zeta0_table(G).items():
                rows.append([mod, G.label(c), repr(G.representatives[c]), str(z)])
        elif what == "zeta-deriv":
            Lv = all_L_values(G, ctx)
            for c in range(G.order):
                b = partial_zeta_deriv0(G, c, ctx, Lv)
                rows.append([mod, G.label(c), mp.nstr(b.mid, ctx.digits - 5), mp.nstr(b.rad, 3)])
        elif what == "X":
            for c in range(G.order):
                v = compute_X(G, c, ctx)
                rows.append([mod, G.label(c), mp.nstr(v.archimedean.mid, ctx.digits - 5),
                             mp.nstr(v.archimedean.rad, 3), v.status])
        elif what == "Xp":
            if ctx.p is None:
                raise ConfigError("Xp needs --prime")
            for c in range(G.order):
                x = compute_Xp(G, c, ctx)
                rows.append([mod, G.label(c), ctx.p, x.ord() if not x.is_zero() else "inf",
                             "".join(map(str, x.digits())), x.abs_prec])
        elif what == "L-values":
            Lv = all_L_values(G, ctx)
            for k in sorted(Lv):
                L = Lv[k]
                rows.append([mod, list(k), mp.nstr(L.value.mid, ctx.digits - 5), mp.nstr(L.value.rad, 3),
                             mp.nstr(L.derivative.mid, ctx.digits - 5) if L.derivative is not None else "",
                             mp.nstr(L.root_number, 15) if L.root_number is not None else ""])
    return heads[what], rows


def _table_text(head, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"columns": head, "rows": rows}, indent=2, default=str) + "\n"
    buf = io.StringIO()
    buf.write("# columns: " + ", ".join(head) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(head)
    for r in rows:
        w.writerow([json.dumps(x) if isinstance(x, list) else x for x in r])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def _cmd_rayclass(cfg, args):
    return 0, _group(cfg).to_json()


def _cmd_zeta0(cfg, args):
    from .shintani import zeta0_table
    G = _group(cfg)
    return 0, {"field": repr(G.F), "modulus": G.f.to_json(),
               "zeta0": {G.label(c): str(z) for c, z in zeta0_table(G).items()}}


def _cmd_barnes(cfg, args):
    from .gamma import barnes_zeta, log_multiple_gamma
    z = _rational(args.z)
    v = [_rational(t) for t in args.v.split(",")]
    ctx = cfg.ctx()
    try:
        if args.s is not None:
            b = barnes_zeta(_rational(args.s), v, z, ctx)
            what = "zeta(s, v, z)"
        else:
            b = log_multiple_gamma(z, v, ctx)
            what = "log Gamma(z, v)"
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return 0, {"quantity": what, "z": str(z), "v": [str(x) for x in v], "s": args.s,
               "value": mp.nstr(b.mid, ctx.digits), "radius": mp.nstr(b.rad, 3)}


def _cmd_pgamma(cfg, args):
    from .padic import vp
    from .padic_gamma import lgamma_p, morita_gamma
    p = cfg.prime
    if p is None:
        raise ConfigError("--prime is required")
    x = _rational(args.x)
    ctx = cfg.ctx(p)
    if x != 0 and vp(x, p) < 0:
        val = lgamma_p(x, ctx, p)
        return 0, {"x": str(x), "p": p, "LGamma_p": val.to_json()}
    return 0, {"x": str(x), "p": p, "Gamma_p": morita_gamma(x, ctx, p).to_json()}


def _cmd_invariants(cfg, args):
    from .invariants import compute_X
    G = _group(cfg)
    ctx = cfg.ctx()
    with_p = G.F.degree == 1 and ctx.p is not None and G.f.hnf[0] % ctx.p == 0
    rows = [compute_X(G, c, ctx, with_padic=with_p).to_json() for c in range(G.order)]
    return 0, {"field": repr(G.F), "modulus": G.f.to_json(), "classes": rows}


def _cmd_stark(cfg, args):
    from .arith import PrecisionCtx
    from .stark import stark_pipeline
    G = _group(cfg)
    rep = stark_pipeline(G.F, G.f, None, PrecisionCtx(cfg.digits))
    return (0 if rep["passed"] else 1), rep


def _cmd_gross_stark(cfg, args):
    from .stark import gross_stark_check
    F = parse_field(cfg.field)
    if F.degree != 2 or F.is_real or cfg.prime is None:
        raise ConfigError("gross-stark needs --field 'Q(sqrt D)' with D < 0 and --prime")
    try:
        rep = gross_stark_check(F.D, cfg.prime, cfg.ctx(cfg.prime))
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return (0 if rep["passed"] else 1), rep


def _cmd_verify(cfg, args):
    return run_suite(args.suite, cfg)


def _cmd_tabulate(cfg, args):
    head, rows = tabulate(args.what, cfg, args.range)
    fmt = args.format or ("json" if cfg.out and cfg.out.endswith(".json") else "csv")
    return 0, _table_text(head, rows, fmt)


COMMANDS = {
    "rayclass": _cmd_rayclass,
    "zeta0": _cmd_zeta0,
    "barnes": _cmd_barnes,
    "pgamma": _cmd_pgamma,
    "invariants": _cmd_invariants,
    "stark": _cmd_stark,
    "gross-stark": _cmd_gross_stark,
    "verify": _cmd_verify,
    "tabulate": _cmd_tabulate,
}


def main(argv: list[str] | None = None) -> int:
    from .padic import InsufficientPrecision
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.cmd == "verify":
            cfg.suite = args.suite
        code, result = COMMANDS[args.cmd](cfg, args)
    except ConfigError as e:
        print(f"starkcheck: error: {e}", file=sys.stderr)
        return 2
    except InsufficientPrecision as e:
        print(f"starkcheck: precision exhausted: {e}", file=sys.stderr)
        return 3
    if isinstance(result, str):
        _emit(None, cfg, result)
    else:
        _emit(result, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())

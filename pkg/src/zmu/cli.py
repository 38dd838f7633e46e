"""Command-line front end: ``zmu <verb> ...``.

Inputs are files (``-`` for stdin) in any of the text formats of
:mod:`zmu.formats`; the kind is detected from the first line.  Schemes are
blown up and voltage graphs lifted wherever a 0/1 matrix is needed, so the
output of every producer can be piped into every consumer.

Exit status: 0 success, 1 a checked property does not hold, 2 bad usage or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import catalog, search
from .cyclic_core import (ResidueSet, Scheme, SchemeError, blow_up, dds_check,
                          is_admissible, is_j2_free_matrix, is_j2_free_scheme,
                          is_skew_symmetric, valency)
from .formats import FormatError, format_matrix, format_scheme, parse_any
from .galois import FieldError
from .graphs import config_params, girth, levi
from .iso import are_isomorphic, aut_order, canonical_form
from .semiplanes import (construct_C, construct_C_mix, construct_L,
                         is_elliptic_semiplane)
from .voltage import InadmissibleError, lift

CHECKS = ("j2free", "skew", "admissible", "configuration", "semiplane", "dds")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse_any(_read(path))


def _matrix(path: str) -> np.ndarray:
    kind, obj = _load(path)
    if kind == "scheme":
        return blow_up(obj)
    if kind == "voltage":
        return lift(obj)
    return obj


def _params(pairs: list[str], extra: str | None) -> dict[str, str]:
    out = {}
    items = list(pairs)
    if extra:
        items += extra.replace(";", " ").split()
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def _int(params, key, default=None):
    if key not in params:
        if default is None:
            raise UsageError(f"missing parameter {key}=")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer") from None


def _opt_int(params, key):
    return int(params[key]) if key in params else None


def _krc_params(p: dict) -> catalog.KrcadinacParams:
    if "t" in p:
        base = catalog.KRCADINAC.get(p["t"])
        if base is None:
            raise UsageError(f"unknown t={p['t']}; choose from {', '.join(catalog.KRCADINAC)}")
        return base
    if "alpha" in p and "beta" in p:
        return catalog.KrcadinacParams.parse(p["alpha"], p["beta"])
    raise UsageError("give t=T360|T72|T36|T18 or alpha=.. beta=..")


def build(name: str, p: dict):
    """Scheme or matrix for a construction name plus parameters."""
    if name in catalog.NAMES:
        return catalog.named(name).scheme
    if name == "robertson":
        return catalog.robertson_hs()
    if name == "L":
        return construct_L(_int(p, "q"), _opt_int(p, "generator"), p.get("sign", "minus"))
    if name == "C":
        return construct_C(_int(p, "q"), _opt_int(p, "generator"))
    if name == "Cmix":
        return construct_C_mix(_int(p, "q"), generator=_opt_int(p, "generator"))
    if name == "balbuena":
        return catalog.balbuena_minor(_int(p, "q"), p.get("variant", "M"), _opt_int(p, "generator"))
    if name in catalog.KRCADINAC:
        return catalog.krcadinac_T(catalog.KRCADINAC[name])
    if name == "T":
        return catalog.krcadinac_T(_krc_params(p))
    if name == "V":
        return catalog.krcadinac_V(catalog.krcadinac_T(_krc_params(p)))
    if name == "Vprime":
        return catalog.krcadinac_V_prime(catalog.krcadinac_T(_krc_params(p)), _int(p, "eta"), _int(p, "zeta"))
    if name == "closure35":
        return catalog.krcadinac_35(catalog.krcadinac_T(_krc_params(p)))
    if name == "cyclic":
        n = _int(p, "n")
        if "D" not in p:
            raise UsageError("missing parameter D=")
        D = ResidueSet.of(n, (int(x) for x in p["D"].split(",")))
        return catalog.cyclic_config(D).incidence
    raise UsageError(f"unknown construction {name!r}")


BUILD_NAMES = list(catalog.NAMES) + ["robertson", "L", "C", "Cmix", "balbuena", "T", "V",
                                     "Vprime", "closure35", "cyclic"] + list(catalog.KRCADINAC)


def _emit(obj, fmt: str | None):
    if isinstance(obj, Scheme) and fmt != "matrix":
        sys.stdout.write(format_scheme(obj))
    else:
        sys.stdout.write(format_matrix(blow_up(obj) if isinstance(obj, Scheme) else obj))


def _verdict(ok: bool, text: str) -> int:
    print(("pass" if ok else "fail") + (f": {text}" if text else ""))
    return 0 if ok else 1


def cmd_check(args) -> int:
    kind, obj = _load(args.file)
    prop = args.property
    if kind == "voltage":
        kind, obj = "matrix", lift(obj)
    if prop == "j2free":
        if kind == "scheme" and obj.is_pure:
            ok, w = is_j2_free_scheme(obj)
            return _verdict(ok, "" if ok else f"a={w.a} b={w.b} c={w.c} d={w.d} at rows {w.i},{w.g} cols {w.j},{w.h}")
        B = blow_up(obj) if kind == "scheme" else obj
        ok, w = is_j2_free_matrix(B)
        return _verdict(ok, "" if ok else f"rows {w.rows} cols {w.cols}")
    if prop in ("skew", "admissible"):
        if kind != "scheme":
            raise UsageError(f"check {prop} needs a scheme")
        return _verdict((is_skew_symmetric if prop == "skew" else is_admissible)(obj), "")
    if prop == "dds":
        if kind != "scheme" or obj.shape != (1, 1):
            raise UsageError("check dds needs a 1x1 scheme")
        rep = dds_check(ResidueSet(obj.mu, obj.sets(0, 0)))
        return _verdict(rep.is_dds, f"deficiency {rep.deficiency}" if rep.is_dds else "repeated difference")
    B = blow_up(obj) if kind == "scheme" else obj
    if prop == "configuration":
        params = config_params(B)
        ok = params is not None and is_j2_free_matrix(B)[0]
        return _verdict(ok, f"({params[0]}_{params[1]},{params[2]}_{params[3]})" if params else "irregular")
    if prop == "semiplane":
        try:
            return _verdict(is_elliptic_semiplane(B), "")
        except SchemeError as exc:
            return _verdict(False, str(exc))
    raise UsageError(f"unknown property {prop!r}")


def cmd_girth(args) -> int:
    g = girth(_matrix(args.file))
    print(g)
    if args.cycle and g.cycle:
        print(" ".join(map(str, g.cycle)))
    return 0


def cmd_params(args) -> int:
    kind, obj = _load(args.file)
    B = blow_up(obj) if kind == "scheme" else lift(obj) if kind == "voltage" else obj
    p = config_params(B)
    print(f"{B.shape[0]} x {B.shape[1]}")
    if kind == "scheme":
        print(f"valency {valency(obj)}")
    print("irregular" if p is None else f"{p[0]} points on {p[1]} lines each, {p[2]} lines of {p[3]} points each")
    print(f"j2-free {is_j2_free_matrix(B)[0]}")
    return 0


def cmd_aut(args) -> int:
    rep = aut_order(_matrix(args.file), dualities=args.dualities)
    print(rep.order)
    if args.generators:
        for g in rep.generators:
            print(" ".join(map(str, g)))
    return 0


def cmd_iso(args) -> int:
    same = are_isomorphic(_matrix(args.file1), _matrix(args.file2))
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def cmd_lift(args) -> int:
    kind, obj = _load(args.file)
    if kind != "voltage":
        raise UsageError("lift needs a voltage-graph file")
    sys.stdout.write(format_matrix(lift(obj)))
    return 0


def _write_summary(path: str | None, data):
    if path:
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2)


def cmd_search(args) -> int:
    if args.kind == "star":
        rep = search.search_star_solutions(workers=args.workers)
    else:
        if not args.t:
            raise UsageError("search etazeta needs --t")
        rep = search.search_eta_zeta(args.t)
        print("pairs: " + " ".join(f"({e},{z})" for e, z in rep.survivors))
    print("\n".join(rep.lines()))
    _write_summary(args.summary, rep.summary())
    return 0


def cmd_census(args) -> int:
    try:
        rep = search.census_cyclic(args.n, args.k, workers=args.workers)
    except search.SearchError as exc:
        raise UsageError(str(exc)) from None
    print("\n".join(rep.lines()))
    _write_summary(args.summary, rep.summary())
    return 0


def cmd_verify(args) -> int:
    results = search.verify_suite(include_searches=not args.quick)
    for r in results:
        print(r.line())
    _write_summary(args.summary, [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    return 0 if all(r.passed for r in results) else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zmu", description="Z_mu-schemes, configurations and girth graphs")
    sub = ap.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("build", help="emit a named table or construction")
    b.add_argument("name", help="one of: " + ", ".join(BUILD_NAMES))
    b.add_argument("kv", nargs="*", help="key=value parameters (q=7, t=T360, eta=0, D=0,1,3 n=7 ...)")
    b.add_argument("--params", help="extra parameters, e.g. 'alpha=11111;beta=11110'")
    b.add_argument("--format", choices=("scheme", "matrix"))

    s = sub.add_parser("blowup", help="blow a scheme up to its 0/1 matrix")
    s.add_argument("file")

    c = sub.add_parser("check", help="check a property: " + ", ".join(CHECKS))
    c.add_argument("property", choices=CHECKS)
    c.add_argument("file")

    g = sub.add_parser("girth", help="girth of a graph (adjacency matrix, scheme or voltage graph)")
    g.add_argument("file")
    g.add_argument("--cycle", action="store_true", help="also print a shortest cycle")

    lv = sub.add_parser("levi", help="Levi graph of an incidence matrix")
    lv.add_argument("file")

    p = sub.add_parser("params", help="order, valency and configuration parameters")
    p.add_argument("file")

    a = sub.add_parser("aut", help="automorphism group order of an incidence structure")
    a.add_argument("file")
    a.add_argument("--dualities", action="store_true", help="let points and lines be exchanged")
    a.add_argument("--generators", action="store_true")

    i = sub.add_parser("iso", help="are two incidence structures isomorphic?")
    i.add_argument("file1")
    i.add_argument("file2")

    cf = sub.add_parser("canon", help="canonical form of an incidence matrix")
    cf.add_argument("file")

    lf = sub.add_parser("lift", help="adjacency matrix of a voltage graph lift")
    lf.add_argument("file")

    se = sub.add_parser("search", help="exhaustive searches: star | etazeta")
    se.add_argument("kind", choices=("star", "etazeta"))
    se.add_argument("--t", choices=tuple(catalog.KRCADINAC))
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--summary", help="write a JSON summary here")

    ce = sub.add_parser("census", help="cyclic configurations up to isomorphism")
    ce.add_argument("--n", type=int, required=True)
    ce.add_argument("--k", type=int, required=True)
    ce.add_argument("--workers", type=int, default=1)
    ce.add_argument("--summary")

    v = sub.add_parser("verify", help="check every fixture and headline claim")
    v.add_argument("--quick", action="store_true", help="skip the exhaustive searches")
    v.add_argument("--summary")
    return ap


def run(argv: list[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage or help
        return int(exc.code or 0)
    try:
        if args.verb == "build":
            _emit(build(args.name, _params(args.kv, args.params)), args.format)
            return 0
        if args.verb == "blowup":
            sys.stdout.write(format_matrix(_matrix(args.file)))
            return 0
        if args.verb == "levi":
            sys.stdout.write(format_matrix(levi(_matrix(args.file))))
            return 0
        if args.verb == "canon":
            sys.stdout.write(format_matrix(canonical_form(_matrix(args.file))))
            return 0
        handler = {"check": cmd_check, "girth": cmd_girth, "params": cmd_params, "aut": cmd_aut,
                   "iso": cmd_iso, "lift": cmd_lift, "search": cmd_search, "census": cmd_census,
                   "verify": cmd_verify}[args.verb]
        return handler(args)
    except FormatError as exc:
        print(f"zmu: {args.verb}: malformed input: {exc}", file=sys.stderr)
        return 2
    except (UsageError, SchemeError, FieldError, InadmissibleError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"zmu: {args.verb}: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

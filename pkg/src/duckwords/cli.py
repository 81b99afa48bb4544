"""
Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cache import cache_key, load, resolve_dir, store
from .counts import (
    catalan,
    catalan3d,
    duck_triangle,
    load_golden_triangle,
    tennis_ball_weighted,
    underlined_triangle,
    verify_identities,
)
from .errors import InvalidInput, ResourceLimit
from .hooks import (
    DEFAULT_BRUTE_BOUND,
    HookConfig,
    count_vhcs,
    enumerate_vhcs,
    red_vhc_count_brute,
    verify_eq1,
)
from .maps import phi, phi_inverse, phi_prime, phi_prime_inverse, psi, tennis_lawns
from .perms import enumerate_av312, format_permutation, parse_permutation
from .render import render_svg, render_tikz
from .words import (
    RewrittenDuckWord,
    UnderlinedDuckWord,
    decode,
    duck_index,
    enumerate_3d_dyck,
    enumerate_dyck,
    enumerate_rewritten,
    enumerate_underlined,
    rewrite,
    underline_all,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text)


# --- triangle ---------------------------------------------------------------


def cmd_triangle(args) -> int:
    cache_dir = resolve_dir(args.cache_dir)
    key = cache_key(
        "triangle",
        {"kind": args.kind, "kmax": args.kmax, "method": args.method, "limit": args.limit},
        __version__,
    )
    rows = load(cache_dir, key)
    if rows is None:
        if args.kind == "duck":
            tri = duck_triangle(args.kmax, args.limit)
            rows = [list(r) for r in tri.rows]
        else:
            tri = underlined_triangle(args.kmax, args.method, args.limit)
            rows = [list(r) for r in tri.rows]
            if args.kind == "redvhc":
                # display in increasing permutation size, i.e. deficiency
                # k-1 down to 0, matching the reduced-count triangle layout
                rows = [list(reversed(r)) for r in rows]
        store(cache_dir, key, rows)
    if args.format == "json":
        _emit(json.dumps({"kind": args.kind, "rows": rows}), args.out)
    elif args.format == "text":
        _emit("\n".join(" ".join(str(e) for e in row) for row in rows), args.out)
    else:
        _emit("\n".join(",".join(str(e) for e in row) for row in rows), args.out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------


def _run_roundtrips(kmax: int) -> dict:
    checked = 0
    failures: list[str] = []
    for k in range(1, kmax + 1):
        for w in enumerate_3d_dyck(k):
            checked += 1
            if phi(phi_inverse(w)) != w:
                failures.append(f"phi roundtrip failed on {w}")
            u = underline_all(w)
            checked += 1
            if decode(rewrite(u)) != u:
                failures.append(f"rewrite roundtrip failed on {u.to_text()}")
        for i in range(k):
            for u in enumerate_underlined(k, i):
                checked += 1
                if phi_prime(phi_prime_inverse(u)) != u:
                    failures.append(f"phi' roundtrip failed on {u.to_text()}")
    return {"kmax": kmax, "checked": checked, "failures": failures, "pass": not failures}


def _check_golden(kmax: int, golden_dir: str | None, limit: int) -> dict:
    mismatches: list[dict] = []
    golden_duck = load_golden_triangle("duck", golden_dir)
    golden_red = load_golden_triangle("redvhc", golden_dir)
    upto = min(kmax, golden_duck.kmax, golden_red.kmax)
    duck = duck_triangle(upto, limit)
    underlined = underlined_triangle(upto, "transform", limit)
    for k in range(1, upto + 1):
        if duck.row(k) != golden_duck.row(k):
            mismatches.append(
                {"triangle": "duck", "k": k,
                 "computed": list(duck.row(k)), "golden": list(golden_duck.row(k))}
            )
        if underlined.row(k) != golden_red.row(k):
            mismatches.append(
                {"triangle": "redvhc", "k": k,
                 "computed": list(underlined.row(k)), "golden": list(golden_red.row(k))}
            )
    return {"kmax": upto, "mismatches": mismatches, "pass": not mismatches}


def cmd_verify(args) -> int:
    report = {
        "identities": verify_identities(args.kmax, args.limit),
        "eq1": [verify_eq1(n, args.brute_bound) for n in range(args.eq1_max + 1)],
        "roundtrips": _run_roundtrips(min(args.kmax, args.roundtrip_max)),
        "golden": _check_golden(args.kmax, args.golden_dir, args.limit),
    }
    report["all_pass"] = (
        report["identities"]["all_pass"]
        and all(r["equal"] for r in report["eq1"])
        and report["roundtrips"]["pass"]
        and report["golden"]["pass"]
    )
    _emit(json.dumps(report, indent=2), args.out)
    if not report["all_pass"]:
        for entry in report["identities"]["identities"]:
            if not entry["pass"]:
                print(f"FAILED identity: {entry['id']}", file=sys.stderr)
        for r in report["eq1"]:
            if not r["equal"]:
                print(f"FAILED eq1 at n={r['n']}: {r['lhs']} != {r['rhs']}", file=sys.stderr)
        for msg in report["roundtrips"]["failures"]:
            print(f"FAILED {msg}", file=sys.stderr)
        for mm in report["golden"]["mismatches"]:
            print(
                f"FAILED golden {mm['triangle']} row {mm['k']}: "
                f"computed {mm['computed']} != golden {mm['golden']}",
                file=sys.stderr,
            )
        return EXIT_VERIFY_FAIL
    return EXIT_OK


# --- map --------------------------------------------------------------------


def cmd_map(args) -> int:
    direction = args.direction
    if direction == "phi":
        forward = phi(HookConfig.from_json(args.input))
        back = phi_inverse(forward).to_json() if args.roundtrip else None
    elif direction == "phi-inv":
        config = phi_inverse(args.input.strip())
        forward = config.to_json()
        back = phi(config) if args.roundtrip else None
    elif direction == "phi-prime":
        word = phi_prime(HookConfig.from_json(args.input))
        forward = word.to_text()
        back = phi_prime_inverse(word).to_json() if args.roundtrip else None
    elif direction == "phi-prime-inv":
        config = phi_prime_inverse(UnderlinedDuckWord.parse(args.input.strip()))
        forward = config.to_json()
        back = phi_prime(config).to_text() if args.roundtrip else None
    elif direction == "psi":
        try:
            lawn = frozenset(int(tok) for tok in args.input.replace(",", " ").split())
        except ValueError as exc:
            raise InvalidInput(f"bad lawn: {args.input!r}") from exc
        forward = psi(lawn, len(lawn))
        back = None
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidInput(f"unknown direction {direction!r}")
    print(forward)
    if back is not None:
        print(back)
    return EXIT_OK


# --- render -----------------------------------------------------------------


def cmd_render(args) -> int:
    config = HookConfig.from_json(args.input)
    if args.format == "tikz":
        doc = render_tikz(config, labels=args.labels)
    else:
        doc = render_svg(config, labels=args.labels)
    _emit(doc, args.out)
    return EXIT_OK


# --- enumerate / count ------------------------------------------------------


def _enumerated_items(args):
    kind = args.kind
    if kind == "av312":
        return (format_permutation(p) for p in enumerate_av312(_require(args, "n")))
    if kind == "vhc":
        pi = parse_permutation(_require(args, "perm"))
        return (c.to_json() for c in enumerate_vhcs(pi))
    if kind == "dyck":
        return enumerate_dyck(_require(args, "k"))
    if kind == "3d-dyck":
        return enumerate_3d_dyck(_require(args, "k"))
    if kind == "duck":
        k, i = _require(args, "k"), _require(args, "i")
        return (w for w in enumerate_3d_dyck(k) if duck_index(w) == i)
    if kind == "underlined":
        return (u.to_text() for u in enumerate_underlined(_require(args, "k"), _require(args, "i")))
    if kind == "rewritten":
        return (r.to_text() for r in enumerate_rewritten(_require(args, "k"), _require(args, "i")))
    raise InvalidInput(f"unknown kind {kind!r}")


def _require(args, name: str):
    value = getattr(args, name.replace("-", "_"), None)
    if value is None:
        raise InvalidInput(f"kind {args.kind!r} requires --{name}")
    return value


def cmd_enumerate(args) -> int:
    items = list(_enumerated_items(args))
    if args.format == "json":
        _emit(json.dumps(items), args.out)
    else:
        _emit("\n".join(items), args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    kind = args.kind
    if kind == "catalan":
        value = catalan(_require(args, "k"))
    elif kind == "catalan3d":
        value = catalan3d(_require(args, "k"))
    elif kind == "redvhc":
        value = red_vhc_count_brute(_require(args, "k"), _require(args, "n"), args.brute_bound)
    elif kind == "vhc":
        value = count_vhcs(parse_permutation(_require(args, "perm")))
    elif kind == "tennis-lawns":
        value = len(tennis_lawns(_require(args, "m")))
    elif kind == "tennis-weighted":
        value = tennis_ball_weighted(_require(args, "m"), args.method or "simulate")
    else:
        value = sum(1 for _ in _enumerated_items(args))
    print(value)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duckwords",
        description="Hook configurations on 312-avoiding permutations and duck words",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="emit a count triangle")
    p.add_argument("kind", choices=["redvhc", "duck", "underlined"])
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--method", choices=["transform", "enumerate", "brute_vhc"],
                   default="transform")
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.add_argument("--limit", type=int, default=7)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--eq1-max", type=int, default=6)
    p.add_argument("--roundtrip-max", type=int, default=4)
    p.add_argument("--brute-bound", type=int, default=DEFAULT_BRUTE_BOUND)
    p.add_argument("--limit", type=int, default=7)
    p.add_argument("--golden-dir", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="apply a bijection to one input")
    p.add_argument("direction",
                   choices=["phi", "phi-inv", "phi-prime", "phi-prime-inv", "psi"])
    p.add_argument("input")
    p.add_argument("--roundtrip", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("render", help="draw a hook configuration")
    p.add_argument("input", help="hook configuration as JSON")
    p.add_argument("--format", choices=["svg", "tikz"], default="svg")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    for name, func in (("enumerate", cmd_enumerate), ("count", cmd_count)):
        p = sub.add_parser(name)
        p.add_argument(
            "kind",
            choices=["av312", "vhc", "redvhc", "dyck", "3d-dyck", "duck",
                     "underlined", "rewritten", "tennis-lawns",
                     "tennis-weighted", "catalan", "catalan3d"],
        )
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--perm")
        p.add_argument("--method")
        p.add_argument("--brute-bound", type=int, default=DEFAULT_BRUTE_BOUND)
        p.add_argument("--format", choices=["lines", "json"], default="lines")
        p.add_argument("--out", default=None)
        p.set_defaults(func=func)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

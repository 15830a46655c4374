"""
Command-line front end.

Exit codes: 0 on success, 1 for a mathematical negative that the caller
asked to treat as failure (--expect, or a failing check), 2 for
usage/input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import DEFAULT_DIR, Cache
from .characters import chi, frobenius_cprime
from .csf import csf
from .hecke import cprime, kl_table
from .lab import (CHECK_BOUNDS, CHECKS, check_suite, counterexample_search,
                  decompose_codominant, modular_relation, moment_graph,
                  smooth_reduce)
from .permutations import (NotSmoothError, Perm, hessenberg_to_str,
                           enumerate_hessenberg, parse_hessenberg, parse_perm,
                           perm_to_str)
from .qpoly import LaurentQ


class InputError(ValueError):
    """Malformed command-line input; maps to exit code 2."""


def _parse_w(text: str) -> Perm:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_z(text: str, n: int) -> Perm:
    try:
        return parse_perm(text, n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_m(text: str):
    try:
        return parse_hessenberg(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_partition(text: str, n: int):
    try:
        lam = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}") from exc
    if sum(lam) != n or any(a <= 0 for a in lam) or \
            any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError(f"{text!r} is not a partition of {n}")
    return lam


def _poly_out(p: LaurentQ, fmt: str):
    if fmt == "json":
        return {"polynomial": p.to_json()}
    if fmt == "latex":
        return p.latex()
    return str(p)


def _symfunc_out(f, fmt: str):
    if fmt == "json":
        return f.to_json()
    if fmt == "latex":
        return f.latex()
    return str(f)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(payload)


# -- subcommand handlers (return exit codes) ----------------------------------

def _cmd_kl(args, fmt) -> int:
    w = _parse_w(args.w)
    table = kl_table(w)
    if args.z is not None:
        z = _parse_z(args.z, len(w))
        p = table.polynomial(z)
        _emit(_poly_out(p, fmt), fmt)
        return 0
    if fmt == "json":
        _emit(table.to_json(), fmt)
        return 0
    store = table.store
    for z, p in sorted(table.row().items(),
                       key=lambda it: (store.length(it[0]), it[0])):
        print(f"P[{perm_to_str(z)}, {perm_to_str(w)}] = {p}")
    return 0


def _cmd_cprime(args, fmt) -> int:
    w = _parse_w(args.w)
    b = cprime(w)
    if fmt == "json":
        _emit({
            "n": b.n,
            "w": perm_to_str(w),
            "scaling": f"q^({w.length()}/2) * C'_w",
            "terms": [[perm_to_str(z), c.to_json()] for z, c in b.sorted_items()],
        }, fmt)
        return 0
    print(f"q^({w.length()}/2)*C'[{perm_to_str(w)}] = {b}")
    return 0


def _cmd_chi(args, fmt) -> int:
    w = _parse_w(args.w)
    lam = _parse_partition(args.lam, len(w))
    _emit(_poly_out(chi(lam, w), fmt), fmt)
    return 0


def _cmd_ch(args, fmt) -> int:
    w = _parse_w(args.w)
    try:
        f = frobenius_cprime(w).convert(args.basis)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(_symfunc_out(f, fmt), fmt)
    return 0


def _cmd_csf(args, fmt) -> int:
    m = _parse_m(args.m)
    f = csf(m).convert(args.basis)
    _emit(_symfunc_out(f, fmt), fmt)
    return 0


def _cmd_smooth_reduce(args, fmt) -> int:
    w = _parse_w(args.w)
    try:
        out = smooth_reduce(w)
    except NotSmoothError as exc:
        raise InputError(str(exc)) from exc
    if fmt == "json":
        _emit({"w": perm_to_str(w), "codominant": perm_to_str(out)}, fmt)
    else:
        print(perm_to_str(out))
    return 0


def _cmd_moment_graph(args, fmt) -> int:
    w = _parse_w(args.w)
    graph = moment_graph(w)
    ts = sorted(graph.transpositions)
    if fmt == "json":
        _emit({"n": graph.n, "w": perm_to_str(w),
               "transpositions": [list(t) for t in ts]}, fmt)
    else:
        print(" ".join(f"({i},{j})" for i, j in ts) if ts else "(empty)")
    return 0


def _cmd_modular(args, fmt) -> int:
    w = _parse_w(args.w)
    if not 1 <= args.s <= len(w) - 1:
        raise InputError(f"--s must be in 1..{len(w) - 1}")
    try:
        rel = modular_relation(w, args.s)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if fmt == "json":
        _emit(rel.to_json(), fmt)
    else:
        print(f"case: {rel.case}")
        print(f"identity: {rel.identity()}")
        if rel.z is not None:
            print(f"z = {perm_to_str(rel.z)}")
        print("verified: " + ("yes (exact character computation)"
                              if rel.verified else "asserted by theorem"))
    return 0


def _cmd_counterexample(args, fmt, cache) -> int:
    m = _parse_m(args.m)
    result = counterexample_search(m, general=args.general, cache=cache,
                                   threads=args.threads)
    if fmt == "json":
        payload = {"m1": hessenberg_to_str(m), "general": args.general,
                   "found": result is not None}
        if result is not None:
            payload.update(m0=hessenberg_to_str(result.m0),
                           m2=hessenberg_to_str(result.m2),
                           shift=result.shift)
        _emit(payload, fmt)
    elif result is None:
        print("NOT FOUND")
    else:
        extra = f" (shift a={result.shift})" if args.general else ""
        print(f"FOUND m0={hessenberg_to_str(result.m0)} "
              f"m2={hessenberg_to_str(result.m2)}{extra}")
    if args.expect == "found" and result is None:
        return 1
    if args.expect == "notfound" and result is not None:
        return 1
    return 0


def _cmd_decompose(args, fmt) -> int:
    w = _parse_w(args.w)
    result = decompose_codominant(w, max_n=args.max_n)
    if fmt == "json":
        payload = {"w": perm_to_str(w), "known": result is not None}
        if result is not None:
            payload["terms"] = [
                [perm_to_str(u), c.to_json()]
                for u, c in sorted(result.items(),
                                   key=lambda it: (it[0].length(), it[0]))]
        _emit(payload, fmt)
    elif result is None:
        print("UNKNOWN")
    else:
        for u, c in sorted(result.items(), key=lambda it: (it[0].length(), it[0])):
            print(f"C'[{perm_to_str(u)}]: {c}")
    if args.expect == "found" and result is None:
        return 1
    return 0


def _cmd_check(args, fmt) -> int:
    if args.name == "all":
        names = [name for name, bound in CHECK_BOUNDS.items() if args.n <= bound]
    else:
        if args.name not in CHECKS:
            raise InputError(f"unknown check {args.name!r}; known: "
                             + ", ".join(sorted(CHECKS)) + ", all")
        names = [args.name]
    try:
        reports = check_suite(args.n, names)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    failed = False
    for rep in reports:
        if fmt == "json":
            _emit(rep.to_json(), fmt)
        else:
            print(rep)
        failed = failed or rep.status != "pass"
    return 1 if failed else 0


def _cmd_hessenberg(args, fmt) -> int:
    if args.n < 1:
        raise InputError("--n must be >= 1")
    ms = enumerate_hessenberg(args.n)
    if fmt == "json":
        _emit({"n": args.n, "count": len(ms),
               "functions": [hessenberg_to_str(m) for m in ms]}, fmt)
    else:
        for m in ms:
            print(hessenberg_to_str(m))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke-lab",
        description="Exact Kazhdan-Lusztig / Hecke character / chromatic "
                    "quasisymmetric function computations for S_n.")
    parser.add_argument("--format", choices=("text", "json", "latex"),
                        default="text", help="output format")
    parser.add_argument("--cache-dir", default=DEFAULT_DIR,
                        help="disk cache directory (versioned JSON files)")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the disk cache")
    parser.add_argument("--threads", type=int, default=1,
                        help="workers for batch computations (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial(s) below w")
    p.add_argument("--w", required=True)
    p.add_argument("--z", help="bottom permutation ('e' for the identity); "
                               "omit to print the whole row of w")

    p = sub.add_parser("cprime", help="q^(l/2) C'_w in the T-basis")
    p.add_argument("--w", required=True)

    p = sub.add_parser("chi", help="Hecke character chi^lambda(T_w)")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="partition, e.g. 2,1")
    p.add_argument("--w", required=True)

    p = sub.add_parser("ch", help="Frobenius character of q^(l/2) C'_w")
    p.add_argument("--w", required=True)
    p.add_argument("--basis", choices=("m", "e", "h", "p", "s"), default="s")

    p = sub.add_parser("csf", help="chromatic quasisymmetric function of G_m")
    p.add_argument("--m", required=True, help="Hessenberg function, e.g. 2,3,3")
    p.add_argument("--basis", choices=("m", "e", "h", "p", "s"), default="m")

    p = sub.add_parser("smooth-reduce",
                       help="codominant permutation with the same character")
    p.add_argument("--w", required=True)

    p = sub.add_parser("moment-graph", help="transpositions below w")
    p.add_argument("--w", required=True)

    p = sub.add_parser("modular", help="modular relation dichotomy at (w, s)")
    p.add_argument("--w", required=True)
    p.add_argument("--s", type=int, required=True, help="simple reflection index")

    p = sub.add_parser("counterexample",
                       help="search for (m0, m2) with (1+q)csf(m1) = "
                            "csf(m2) + q csf(m0)")
    p.add_argument("--m", required=True, help="the Hessenberg function m1")
    p.add_argument("--general", action="store_true",
                   help="scan shifted equations without the edge-count filter")
    p.add_argument("--expect", choices=("found", "notfound"),
                   help="exit 1 if the outcome differs")

    p = sub.add_parser("decompose",
                       help="decompose ch(q^(l/2) C'_w) over codominant "
                            "characters with N[q] coefficients")
    p.add_argument("--w", required=True)
    p.add_argument("--max-n", type=int, default=6, dest="max_n",
                   help="bound for the exact fallback search (default 6)")
    p.add_argument("--expect", choices=("found",),
                   help="exit 1 if the decomposition is Unknown")

    p = sub.add_parser("check", help="run a named exhaustive check")
    p.add_argument("--name", required=True,
                   help=", ".join(sorted(CHECKS)) + ", or all")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hessenberg", help="enumerate Hessenberg functions")
    p.add_argument("--n", type=int, required=True)

    return parser


def main(argv=None) -> int:
    from .cache import activate, active
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    previous_cache = active()
    cache = None
    if not args.no_cache:
        cache = Cache(args.cache_dir)
        activate(cache)
    try:
        if args.command == "kl":
            return _cmd_kl(args, fmt)
        if args.command == "cprime":
            return _cmd_cprime(args, fmt)
        if args.command == "chi":
            return _cmd_chi(args, fmt)
        if args.command == "ch":
            return _cmd_ch(args, fmt)
        if args.command == "csf":
            return _cmd_csf(args, fmt)
        if args.command == "smooth-reduce":
            return _cmd_smooth_reduce(args, fmt)
        if args.command == "moment-graph":
            return _cmd_moment_graph(args, fmt)
        if args.command == "modular":
            return _cmd_modular(args, fmt)
        if args.command == "counterexample":
            return _cmd_counterexample(args, fmt, cache)
        if args.command == "decompose":
            return _cmd_decompose(args, fmt)
        if args.command == "check":
            return _cmd_check(args, fmt)
        if args.command == "hessenberg":
            return _cmd_hessenberg(args, fmt)
        raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    finally:
        activate(previous_cache)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 validation or mathematical failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .algebra import (
    InvalidTribracket,
    Tribracket,
    alexander_tribracket,
    cyclic_cayley,
    dehn_tribracket,
    is_closed,
    validate,
)
from .coloring import count_colorings, enhancement
from .diagram import PDError, faces, parse_pd, reverse_component
from .enumeration import enumerate_tables, polynomial_spectrum
from .fixtures import fixture_dir, load_pd
from .formats import loads_tensor
from .polynomial import canonical_string, subtribracket_polynomial, tribracket_polynomial

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if not p.exists():
        # fall back to the bundled fixtures by file name
        alt = fixture_dir() / p.name
        if alt.exists():
            p = alt
    try:
        return p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _ints(text: str, count: int, flag: str) -> list:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects {count} comma-separated integers") from None
    if len(vals) != count:
        raise UsageError(f"{flag} expects {count} comma-separated integers")
    return vals


def _raw_tensor(args):
    """1-based nested list from whichever tensor source was given."""
    sources = [s for s in (args.tensor, args.alexander, args.dehn_cyclic) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of a tensor file, --alexander or --dehn-cyclic")
    if args.alexander is not None:
        n, t, s = _ints(args.alexander, 3, "--alexander")
        return alexander_tribracket(n, t, s).tensor()
    if args.dehn_cyclic is not None:
        n = int(args.dehn_cyclic)
        if n < 1:
            raise UsageError("--dehn-cyclic expects a positive order")
        return dehn_tribracket(cyclic_cayley(n)).tensor()
    try:
        return loads_tensor(_read(args.tensor))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot parse tensor: {exc}") from None


def _tribracket(args) -> Tribracket:
    t = _raw_tensor(args)
    rep = validate(t)
    if not rep.ok:
        raise InvalidTribracket(rep)
    return Tribracket(np.asarray(t) - 1)


def _diagram_arg(args):
    if (args.fixture is None) == (args.pd is None):
        raise UsageError("give exactly one of --fixture or --pd")
    try:
        if args.fixture is not None:
            try:
                pd = load_pd(args.fixture)
            except FileNotFoundError:
                raise InputError(f"no fixture named {args.fixture!r}") from None
        else:
            text = args.pd
            if not text.lstrip().startswith(("X[", "PD[", "UNKNOT")) or Path(text).exists():
                text = _read(text)
            pd = parse_pd(text)
        for k in args.reverse_component or []:
            pd = reverse_component(pd, k)
    except PDError as exc:
        raise InputError(f"bad PD code: {exc}") from None
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    return faces(pd)


def _emit(args, text: str, doc) -> None:
    if args.json:
        print(json.dumps(doc, indent=None if args.compact else 2))
    else:
        print(text)


def cmd_validate(args) -> int:
    try:
        t = _raw_tensor(args)
    except ValueError as exc:  # non-unit Alexander parameters, bad group
        _emit(args, f"invalid: {exc}", {"ok": False, "error": str(exc)})
        return EXIT_MATH
    rep = validate(t)
    doc = {"ok": rep.ok, "n": rep.n,
           "failures": [{"axiom": a, "witness": list(w)} for a, w in rep.failures]}
    _emit(args, rep.summary(), doc)
    return EXIT_OK if rep.ok else EXIT_MATH


def cmd_poly(args) -> int:
    X = _tribracket(args)
    p = tribracket_polynomial(X)
    _emit(args, canonical_string(p), {"poly": canonical_string(p), "terms": p.to_json()})
    return EXIT_OK


def cmd_subpoly(args) -> int:
    X = _tribracket(args)
    try:
        S = sorted({int(v) for v in args.subset.split(",")})
    except ValueError:
        raise UsageError("--subset expects comma-separated elements") from None
    if not S or S[0] < 1 or S[-1] > X.n:
        raise UsageError(f"--subset elements must lie in 1..{X.n}")
    if not is_closed(X, S):
        msg = f"subset {{{','.join(map(str, S))}}} is not closed"
        _emit(args, f"error: {msg}", {"error": msg})
        return EXIT_MATH
    p = subtribracket_polynomial(X, S)
    _emit(args, canonical_string(p), {"poly": canonical_string(p), "terms": p.to_json()})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n = args.size
    try:
        if args.spectrum:
            spec = polynomial_spectrum(n, up_to_iso=args.up_to_iso)
            lines = [f"order {n}: {len(spec.counts)} polynomials"]
            for k, c in spec.counts.items():
                extra = f", {spec.classes[k]} classes" if spec.classes else ""
                lines.append(f"  {k}  ({c} structures{extra})")
            _emit(args, "\n".join(lines), spec.to_json())
            return EXIT_OK
        tables = enumerate_tables(n, up_to_iso=args.up_to_iso)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    flat = [" ".join(str(v + 1) for v in t.reshape(-1)) for t in tables]
    kind = "classes" if args.up_to_iso else "structures"
    _emit(args, "\n".join(flat + [f"# {len(flat)} {kind}"]),
          {"n": n, "up_to_iso": args.up_to_iso, "count": len(flat),
           "tensors": [(t.astype(int) + 1).tolist() for t in tables]})
    return EXIT_OK


def cmd_invariant(args) -> int:
    X = _tribracket(args)
    d = _diagram_arg(args)
    if args.count_only:
        c = count_colorings(X, d)
        _emit(args, str(c), {"count": c})
        return EXIT_OK
    e = enhancement(X, d)
    _emit(args, f"count {e.total}\n{e}", e.to_json())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .reproduce import check_ids, run_checks

    only = args.only or None
    if only:
        known = check_ids(full=True)
        for o in only:
            if not any(c == o or c.startswith(o + "-") for c in known):
                raise UsageError(f"unknown check {o!r}; known: {', '.join(known)}")
    results = run_checks(only=only, full=args.full)
    passed = sum(r.ok for r in results)
    text = "\n".join([r.line() for r in results]
                     + [f"{passed}/{len(results)} checks passed"])
    _emit(args, text, {r.id: r.ok for r in results})
    return EXIT_OK if passed == len(results) else EXIT_MATH


def _add_tensor_source(p, positional=True):
    if positional:
        p.add_argument("tensor", nargs="?", help="tensor file (text or JSON)")
    else:
        p.add_argument("--tensor", help="tensor file (text or JSON)")
    p.add_argument("--alexander", metavar="N,T,S", help="Alexander tribracket over Z_N")
    p.add_argument("--dehn-cyclic", metavar="N", type=int, help="Dehn tribracket of Z_N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tribracket", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--compact", action="store_true", help="single-line JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the tribracket axioms")
    _add_tensor_source(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("poly", help="tribracket polynomial")
    _add_tensor_source(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("subpoly", help="subtribracket polynomial of a closed subset")
    _add_tensor_source(p)
    p.add_argument("--subset", required=True, metavar="I,J,...")
    p.set_defaults(func=cmd_subpoly)

    p = sub.add_parser("enumerate", help="all tribrackets of a given order")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--spectrum", action="store_true", help="report distinct polynomials")
    p.add_argument("--up-to-iso", action="store_true", help="one tensor per isomorphism class")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invariant", help="counting invariant and enhancement of a link")
    _add_tensor_source(p, positional=False)
    p.add_argument("--fixture", help="bundled PD fixture name, e.g. L7a3 or hopf")
    p.add_argument("--pd", help="PD code text or file")
    p.add_argument("--reverse-component", type=int, action="append", metavar="K",
                   help="reverse component K (1-based); repeatable")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("reproduce", help="check every published value")
    p.add_argument("--only", action="append", metavar="ID", help="check id or id prefix; repeatable")
    p.add_argument("--full", action="store_true", help="include the long-running checks")
    p.set_defaults(func=cmd_reproduce)
    return parser


def _hoist_global_flags(argv):
    """Allow --json/--compact after the subcommand as well as before it."""
    glob = [a for a in argv if a in ("--json", "--compact")]
    rest = [a for a in argv if a not in ("--json", "--compact")]
    return glob + rest


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_global_flags(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvalidTribracket as exc:
        print(exc.report.summary(), file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 semantic error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import counting, oracle, reps
from .characters import (
    FieldMismatch,
    InvalidCharacter,
    ResourceLimitExceeded,
    character_from_json,
    enumerate_X,
    enumerate_Xprime,
)
from .localfield import LocalFieldParams, make_field

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class ParseError(Exception):
    pass


def _parse_field(text: str) -> LocalFieldParams:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"--field expects p or p,f; got {text!r}") from None
    if len(parts) not in (1, 2):
        raise ParseError(f"--field expects p or p,f; got {text!r}")
    return make_field(*parts)


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed {what} JSON: {exc}") from None


_SEMANTIC = (reps.InvalidRepresentation, InvalidCharacter, FieldMismatch)


def _structural(parse, *a):
    """Run a JSON-to-object parser, reporting shape errors as parse errors."""
    try:
        return parse(*a)
    except _SEMANTIC:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _representation(args) -> reps.Representation:
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise ParseError(str(exc)) from None
    elif args.spec:
        text = args.spec
    else:
        raise ParseError("a representation is required: --input PATH or --spec JSON")
    pi = _structural(reps.representation_from_json, _load_json(text, "representation"))
    if args.field and _parse_field(args.field) != pi.field:
        raise FieldMismatch(f"--field {args.field} disagrees with the spec field {pi.field}")
    return pi


def canonical_spec(pi: reps.Representation) -> str:
    return json.dumps(pi.to_json(), sort_keys=True)


def _table(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
    return buf.getvalue()


def cmd_twist(args) -> tuple[object, str]:
    pi = _representation(args)
    if not args.chi:
        raise ParseError("twist needs --chi JSON")
    chi = _structural(character_from_json, pi.field, _load_json(args.chi, "character"))
    br = reps.delta_terms(pi, chi)
    payload = {"pi": pi.to_json(), "chi": chi.to_json(), **br.to_json()}
    cols = ["index", "n", "label", "a_pi_i", "a_mu_i", "a_chi_pi_i", "Delta", "delta", "in_Omega"]
    total = {"index": "total", "n": pi.n, "a_pi_i": br.a_pi, "a_chi_pi_i": br.twisted_conductor,
             "Delta": br.Delta, "delta": br.delta}
    return payload, _table(br.to_json()["components"] + [total], cols)


def _q(args) -> int:
    if args.q is not None:
        return args.q
    return _parse_field(args.field or "5").q


def cmd_count(args) -> tuple[object, str]:
    q = _q(args)
    ks = range(args.k + 1) if args.all else [args.k]
    rows = [{"q": q, "k": k, "X": counting.count_X(q, k), "Xprime": counting.count_Xprime(q, k)} for k in ks]
    payload = rows[0] if len(rows) == 1 else rows
    return payload, _table(rows, ["q", "k", "X", "Xprime"])


def cmd_enumerate(args) -> tuple[object, str]:
    F = _parse_field(args.field or "5")
    chars = (enumerate_Xprime if args.exact else enumerate_X)(F, args.k, args.limit)
    expected = (counting.count_Xprime if args.exact else counting.count_X)(F.q, args.k)
    rows = [{"index": i, **chi.to_json()} for i, chi in enumerate(chars)]
    payload = {
        "field": {"p": F.p, "f": F.f, "q": F.q},
        "k": args.k,
        "set": "X'(k)" if args.exact else "X(k)",
        "count": len(chars),
        "closed_form": expected,
        "agree": len(chars) == expected,
        "characters": [chi.to_json() for chi in chars],
    }
    return payload, _table(rows, ["index", "conductor", "exponents"])


def cmd_histogram(args) -> tuple[object, str]:
    pi = _representation(args)
    if args.delta:
        if len(pi.components) != 1:
            raise reps.InvalidRepresentation("--delta needs a single-component representation")
        hist = oracle.delta_histogram(pi.components[0], args.k, args.limit)
    else:
        hist = oracle.histogram_twisted_conductor(pi, args.k, args.limit)
    return hist.to_json(), hist.to_csv()


def cmd_bounds(args) -> tuple[object, str]:
    pi = _representation(args)
    a_chi = args.k
    lower, upper = reps.conductor_bounds(pi, a_chi)
    payload = {
        "pi": pi.to_json(),
        "a_pi": pi.conductor,
        "n": pi.n,
        "a_chi": a_chi,
        "lower": lower,
        "upper": upper,
        "bh_bound": reps.bh_bound(pi.conductor, a_chi, pi.n),
        "dominant": counting.dominant_conductor(pi, a_chi),
        "Omega": list(reps.omega_set(pi, a_chi)),
        "interference": counting.interference_predicate(pi, a_chi).to_json(),
    }
    if args.j is not None:
        payload["j"] = args.j
        payload["twist_fixing"] = counting.twist_fixing_bound(pi, a_chi, args.j).to_json()
    rows = [{"key": k, "value": v} for k, v in payload.items() if k != "pi"]
    return payload, _table(rows, ["key", "value"])


def cmd_verify(args) -> tuple[object, str]:
    cfg = {}
    if args.config:
        try:
            cfg = _load_json(Path(args.config).read_text(), "config")
        except OSError as exc:
            raise ParseError(str(exc)) from None
        if not isinstance(cfg, dict):
            raise ParseError("config must be a JSON object")
    try:
        config = oracle.VerifyConfig.from_json(cfg)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad config: {exc}") from None
    if args.field:
        F = _parse_field(args.field)
        config.fields = [(F.p, F.f)]
    if args.limit is not None:
        config.limit = args.limit
    report = oracle.verify_grid(config)
    args._exit = EXIT_OK if report.ok else EXIT_VERIFY
    if not args.quiet:
        for line in report.lines():
            print(line, file=sys.stderr)
    return report.to_json(), report.to_csv()


def cmd_canon(args) -> tuple[object, str]:
    pi = _representation(args)
    return pi.to_json(), canonical_spec(pi) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="base field as p or p,f (unramified, p odd)")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--limit", type=int, default=None, help="max characters per enumeration")

    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("--input", help="path to a representation JSON spec")
    rep.add_argument("--spec", help="inline representation JSON spec")

    parser = argparse.ArgumentParser(prog="twistcond", description="Conductors of character twists on GL(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twist", parents=[common, rep], help="a(chi pi) with its Delta/delta breakdown")
    p.add_argument("--chi", help='character JSON, e.g. {"conductor": 2, "exponents": [0, 1]}')
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("count", parents=[common], help="closed-form #X(k) and #X'(k)")
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="tabulate every k' <= k")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list X(k), or X'(k) with --exact")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("histogram", parents=[common, rep], help="#X'_pi(k, j) over j by exhaustion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", action="store_true", help="histogram of delta values instead")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("bounds", parents=[common, rep], help="bounds for a(chi pi) given a(chi) = k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive verification grid")
    p.add_argument("--config", help="VerifyConfig JSON file")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canon", parents=[common, rep], help="print the canonical form of a spec")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args._exit = EXIT_OK
    try:
        payload, table = args.func(args)
    except (ParseError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, ResourceLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    text = table if args.format == "csv" else json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return args._exit


if __name__ == "__main__":
    sys.exit(main())

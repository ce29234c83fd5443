"""Command-line frontend.

Subcommands: ``det`` (knot determinant through independent routes),
``count`` (irreducible metabelian SL(2,C) representation counts), ``present``
(group presentations with abelianization), ``distinguish`` (the determinant
inequivalence criterion), ``table`` (load and cross-check a knot table).

All output is deterministic JSON on stdout.  Exit codes: 0 success, 2 input
error, 3 verification or cross-route disagreement.  Integers past the 53-bit
float-safe range are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InputError, NonPositiveM, TwistspinError, VerificationError
from .freegroup import Presentation
from .invariants import (
    abelianization_snf,
    alexander_polynomial,
    determinant_of_poly,
    determinant_of_seifert,
    wirtinger,
)
from .metabelian import count_representations, distinguish
from .notation import parse_pd
from .spinning import (
    branched_cover_presentation,
    btws_presentation,
    make_params,
    plotnick_presentation,
    reduced_presentation,
)
from .tables import KnotRecord, find_knot, load_table, parse_seifert_text, verify_record

_SAFE = 2 ** 53


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _SAFE else value
    if isinstance(value, float):
        raise TypeError("no floating point values belong in this output")
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _emit(payload) -> None:
    print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))


def _fox_route(pd_text: str) -> tuple[list[int], int]:
    delta = alexander_polynomial(wirtinger(parse_pd(pd_text)))
    return delta.coefficient_list(), determinant_of_poly(delta)


def _record_determinant(rec: KnotRecord) -> int:
    """Determinant with route cross-check; raises on disagreement."""
    values = []
    if rec.pd is not None:
        values.append(_fox_route(rec.pd)[1])
    if rec.seifert is not None:
        values.append(determinant_of_seifert(rec.seifert))
    if rec.det_expected is not None:
        values.append(rec.det_expected)
    if len(set(values)) > 1:
        raise VerificationError(f"{rec.name}: determinant routes disagree: {values}")
    return values[0]


def _presentation_payload(name: str, form: str, p: Presentation, m=None, n=None) -> dict:
    return {
        "name": name,
        "form": form,
        "m": m,
        "n": n,
        "generators": list(p.generators),
        "relators": [list(r) for r in p.relators],
        "meridian": p.meridian,
        "abelianization": list(abelianization_snf(p)),
    }


def cmd_det(args) -> int:
    sources = [s for s in (args.pd, args.knot, args.seifert) if s is not None]
    if len(sources) != 1:
        raise InputError("pass exactly one of --pd, --knot, --seifert")
    name = None
    alexander = None
    routes: dict[str, int | None] = {"fox": None, "seifert": None}
    if args.pd is not None:
        alexander, routes["fox"] = _fox_route(args.pd)
    elif args.seifert is not None:
        path = Path(args.seifert)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
        name = path.stem
        routes["seifert"] = determinant_of_seifert(parse_seifert_text(text.replace("\n", ";")))
    else:
        rec = find_knot(args.knot)
        name = rec.name
        if rec.pd is not None:
            alexander, routes["fox"] = _fox_route(rec.pd)
        if rec.seifert is not None:
            routes["seifert"] = determinant_of_seifert(rec.seifert)
    values = sorted({v for v in routes.values() if v is not None})
    payload = {
        "name": name,
        "alexander": alexander,
        "determinant": values[0] if values else None,
        "routes": routes,
    }
    _emit(payload)
    if len(values) > 1:
        print(f"determinant routes disagree: {routes}", file=sys.stderr)
        return 3
    return 0


def cmd_count(args) -> int:
    params = make_params(args.m, args.n)
    rec = find_knot(args.knot)
    det = _record_determinant(rec)
    presentation = None
    if rec.pd is not None:
        presentation = btws_presentation(wirtinger(parse_pd(rec.pd)), params)
    report = count_representations(
        params, args.method, det=det, lin=rec.lin,
        presentation=presentation, partitions=args.partitions)
    _emit({"name": rec.name, **report})
    if not report["agreement"]:
        print(f"counting methods disagree: {report['per_method']}", file=sys.stderr)
        return 3
    return 0


def cmd_present(args) -> int:
    rec = find_knot(args.knot)
    form = args.form
    if form == "r1":
        if args.m is None:
            raise InputError("--form r1 needs -m")
        params = make_params(args.m, args.n)
        if rec.pd is None:
            raise InputError(f"{rec.name}: no planar diagram in the table")
        p = btws_presentation(wirtinger(parse_pd(rec.pd)), params)
        payload = _presentation_payload(rec.name, form, p, args.m, args.n)
        payload["beta"] = params.beta
        payload["epsilon"] = params.epsilon
    elif form in ("cover", "plotnick"):
        if rec.lin is None:
            raise InputError(f"{rec.name}: no surface-presentation data in the table")
        if args.m is None:
            raise InputError(f"--form {form} needs -m")
        if args.m == 0:
            raise NonPositiveM(f"--form {form} needs m != 0")
        m = abs(args.m)  # the group only depends on (|m|, n)
        if form == "cover":
            p = branched_cover_presentation(rec.lin, m)
            payload = _presentation_payload(rec.name, form, p, m, None)
        else:
            params = make_params(m, args.n)
            p = plotnick_presentation(rec.lin, params)
            payload = _presentation_payload(rec.name, form, p, m, args.n)
    elif form == "reduced":
        if rec.lin is None:
            raise InputError(f"{rec.name}: no surface-presentation data in the table")
        p = reduced_presentation(rec.lin)
        payload = _presentation_payload(rec.name, form, p)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown form {form!r}")
    if args.text:
        _print_presentation_text(p)
    else:
        _emit(payload)
    return 0


def _print_presentation_text(p: Presentation) -> None:
    def fmt_word(w):
        if not w:
            return "1"
        parts = []
        for x in w:
            g = p.generators[abs(x) - 1]
            parts.append(g if x > 0 else f"{g}^-1")
        return "*".join(parts)

    print("generators:", ", ".join(p.generators))
    for r in p.relators:
        print("relator:", fmt_word(r))
    if p.meridian is not None:
        print("meridian:", p.generators[p.meridian - 1])
    print("abelianization snf:", list(abelianization_snf(p)))


def _parse_triple(text: str) -> tuple[str, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"expected KNOT,M,N, got {text!r}")
    try:
        return parts[0].strip(), int(parts[1]), int(parts[2])
    except ValueError:
        raise InputError(f"expected integers for M,N in {text!r}") from None


def cmd_distinguish(args) -> int:
    name_a, m_a, n_a = _parse_triple(args.a)
    name_b, m_b, n_b = _parse_triple(args.b)
    make_params(m_a, n_a)
    make_params(m_b, n_b)
    det_a = _record_determinant(find_knot(name_a))
    det_b = _record_determinant(find_knot(name_b))
    result = distinguish((det_a, m_a), (det_b, m_b))
    _emit({
        "verdict": result.verdict,
        "rule": result.rule,
        "det_a": det_a,
        "det_b": det_b,
    })
    return 0


def cmd_table(args) -> int:
    records = load_table(args.file)
    reports = [verify_record(r) for r in records]
    ok = all(r["ok"] for r in reports)
    _emit({"table": reports, "ok": ok})
    if not ok:
        bad = [r["name"] for r in reports if not r["ok"]]
        print(f"table verification failed for: {', '.join(bad)}", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistspin",
        description="Knot determinants and metabelian representation counts "
                    "for branched twist spins, in exact arithmetic.")
    parser.add_argument("--json", action="store_true", default=True,
                        help="emit JSON (default; kept for interface stability)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_det = sub.add_parser("det", help="knot determinant through independent routes")
    p_det.add_argument("--pd", help="planar diagram text, e.g. 'X(1,4,2,5) ...'")
    p_det.add_argument("--knot", help="name in the bundled or TWISTSPIN_TABLE table")
    p_det.add_argument("--seifert", help="file with one Seifert matrix row per line")
    p_det.set_defaults(func=cmd_det)

    p_count = sub.add_parser("count", help="count irreducible metabelian SL(2,C) reps")
    p_count.add_argument("--knot", required=True)
    p_count.add_argument("-m", type=int, required=True)
    p_count.add_argument("-n", type=int, default=1)
    p_count.add_argument("--method", default="all",
                         choices=["formula", "characters", "brute", "all"])
    p_count.add_argument("--partitions", type=int, default=1,
                         help="deterministic brute-force work split (result-invariant)")
    p_count.set_defaults(func=cmd_count)

    p_pres = sub.add_parser("present", help="group presentations and abelianizations")
    p_pres.add_argument("--knot", required=True)
    p_pres.add_argument("-m", type=int)
    p_pres.add_argument("-n", type=int, default=1)
    p_pres.add_argument("--form", required=True,
                        choices=["r1", "cover", "plotnick", "reduced"])
    p_pres.add_argument("--text", action="store_true", help="human-readable output")
    p_pres.set_defaults(func=cmd_present)

    p_dis = sub.add_parser("distinguish", help="determinant inequivalence criterion")
    p_dis.add_argument("--a", required=True, metavar="KNOT,M,N")
    p_dis.add_argument("--b", required=True, metavar="KNOT,M,N")
    p_dis.set_defaults(func=cmd_distinguish)

    p_tab = sub.add_parser("table", help="load and cross-check a knot table")
    p_tab.add_argument("--file", help="CSV path (default: bundled or TWISTSPIN_TABLE)")
    p_tab.add_argument("--verify", action="store_true",
                       help="recompute all routes and compare")
    p_tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (TwistspinError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface for the braid certifier.

Braid words are written ``"m: i1 i2 ..."`` — the strand count, a colon,
then signed generator indices (``2`` for sigma_2, ``-2`` for its
inverse).  Reports come in two formats: ``text`` (human-readable) and
``json`` (one record per input, stable field order, every rational
exact as ``"numerator/denominator"`` — never floats).

Exit status: 0 on success, 1 on any error, 2 when a run performed
certifications and every verdict came back Unknown.

The handle-reduction budget is controlled by the environment variable
BRAIDCERT_REDUCTION_BUDGET; BRAIDCERT_KERNEL forces the pure-Python or
compiled kernel.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from braidcert.braid import BraidWord, parse_braid
from braidcert.certify import (
    Certificate,
    Verdict,
    certify_closed_braid_cover,
    certify_fibred_cover,
    certify_genus1_cover,
    certify_satellite,
)
from braidcert.errors import BadParameters, BraidError, ParseError
from braidcert.fdtc import FdtcValue, fdtc_interval
from braidcert.ordering import compare, dehornoy_floor, sigma_sign
from braidcert.threebraid import (
    PeriodicForm,
    PseudoAnosovForm,
    ReducibleForm,
    baldwin_lspace_double_cover,
    normal_form,
)

_MISSING_ASSERTION_NOTE = (
    "{what} was not explicitly asserted on the command line; the verdict is"
    " conditional on the echoed assumptions"
)


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise BadParameters(f"{what} must be a rational like 5/12, got {text!r}")


def _parse_fdtc_value(text: str) -> FdtcValue:
    """Exact rational "a/b", or interval "lo,hi"."""
    if "," in text:
        lo_text, _, hi_text = text.partition(",")
        lo = _parse_rational(lo_text.strip(), "interval endpoint")
        hi = _parse_rational(hi_text.strip(), "interval endpoint")
        return FdtcValue.interval(lo, hi, "command line")
    return FdtcValue.exact(_parse_rational(text.strip(), "twist value"), "command line")


def _emit(args, record: dict, text: str) -> None:
    if args.report == "json":
        print(json.dumps(record, separators=(", ", ": ")))
    else:
        print(text)


def _with_caveats(cert: Certificate, args, needed: dict[str, str]) -> Certificate:
    """Append a conditionality note for each assertion flag the command
    accepts but the user did not pass."""
    notes = list(cert.notes)
    for flag, what in needed.items():
        if not getattr(args, flag):
            notes.append(_MISSING_ASSERTION_NOTE.format(what=what))
    if notes == list(cert.notes):
        return cert
    return Certificate(cert.verdict, cert.justifications, cert.assumptions, tuple(notes))


def _exit_for(certs: list[Certificate]) -> int:
    if certs and all(c.verdict is Verdict.UNKNOWN for c in certs):
        return 2
    return 0


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_order(args) -> int:
    u = parse_braid(args.braid)
    if args.other is None:
        sign = sigma_sign(u)
        name = sign.name.title()
        _emit(args, {"sign": name}, name)
        return 0
    v = parse_braid(args.other)
    name = compare(u, v).name.title()
    _emit(args, {"comparison": name}, name)
    return 0


def _cmd_floor(args) -> int:
    value = dehornoy_floor(parse_braid(args.braid))
    _emit(args, {"floor": value}, str(value))
    return 0


def _cmd_fdtc(args) -> int:
    value = fdtc_interval(parse_braid(args.braid), args.tol)
    _emit(args, _fdtc_record(value), _fdtc_text(value))
    return 0


def _fdtc_record(value: FdtcValue) -> dict:
    if value.is_exact:
        return {"kind": "exact", "value": str(value.value),
                "provenance": value.provenance}
    return {"kind": "interval", "lo": str(value.lo), "hi": str(value.hi),
            "provenance": value.provenance}


def _fdtc_text(value: FdtcValue) -> str:
    if value.is_exact:
        return f"c = {value.value}"
    return f"c in [{value.lo}, {value.hi}]"


def _classify_record(nf) -> dict:
    if isinstance(nf, PseudoAnosovForm):
        return {"type": "PseudoAnosov", "d": nf.central_power,
                "a": list(nf.twist_exponents)}
    if isinstance(nf, ReducibleForm):
        return {"type": "Reducible", "d": nf.central_power,
                "m": nf.sigma2_power, "central": nf.sigma2_power == 0}
    assert isinstance(nf, PeriodicForm)
    return {"type": "Periodic", "d": nf.central_power, "m": nf.sigma1_power}


def _classify_text(nf) -> str:
    if isinstance(nf, PseudoAnosovForm):
        a = ",".join(str(x) for x in nf.twist_exponents)
        return f"PseudoAnosov d={nf.central_power} a=[{a}]"
    if isinstance(nf, ReducibleForm):
        central = " central" if nf.sigma2_power == 0 else ""
        return f"Reducible d={nf.central_power} m={nf.sigma2_power}{central}"
    return f"Periodic d={nf.central_power} m={nf.sigma1_power}"


def _cmd_classify3(args) -> int:
    nf = normal_form(parse_braid(args.braid))
    _emit(args, _classify_record(nf), _classify_text(nf))
    return 0


def _cmd_lspace2(args) -> int:
    status = baldwin_lspace_double_cover(normal_form(parse_braid(args.braid)))
    _emit(args, {"status": status.value}, status.value)
    return 0


def _cmd_certify_cover(args) -> int:
    b = parse_braid(args.word)
    cert = certify_closed_braid_cover(b, args.t, pa_asserted=args.assert_pa,
                                      tol=args.tol)
    _emit(args, cert.to_record(), cert.render_text())
    return _exit_for([cert])


def _cmd_certify_genus1(args) -> int:
    cert = certify_genus1_cover(parse_braid(args.word), args.n)
    cert = _with_caveats(cert, args,
                         {"assert_irreducible": "ambient irreducibility"})
    _emit(args, cert.to_record(), cert.render_text())
    return _exit_for([cert])


def _cmd_certify_surgery(args) -> int:
    cert = certify_fibred_cover(_parse_fdtc_value(args.c), args.n, args.q,
                                genus=args.genus)
    cert = _with_caveats(cert, args,
                         {"assert_hyperbolic": "hyperbolicity of the knot"})
    _emit(args, cert.to_record(), cert.render_text())
    return _exit_for([cert])


def _cmd_certify_satellite(args) -> int:
    pattern = parse_braid(args.pattern)
    cert = certify_satellite(
        pattern,
        args.n,
        _parse_fdtc_value(args.c),
        companion_exact_zero=args.zero_companion,
        pa_asserted=args.assert_pa,
    )
    cert = _with_caveats(cert, args,
                         {"assert_hyperbolic": "hyperbolicity of the companion"})
    _emit(args, cert.to_record(), cert.render_text())
    return _exit_for([cert])


# ---------------------------------------------------------------------------
# corpus batches


_CORPUS_TASKS = ("Floor", "Fdtc", "Classify3", "CoverCertify", "Genus1", "Satellite")
_CORPUS_FLAGS = {"pa", "zero", "hyp", "irr"}


def _parse_params(text: str, line_no: int) -> tuple[dict[str, str], set[str]]:
    pairs: dict[str, str] = {}
    flags: set[str] = set()
    if text == "-":
        return pairs, flags
    for token in text.split():
        if "=" in token:
            key, _, value = token.partition("=")
            if not key or not value:
                raise ParseError(f"malformed parameter {token!r}", line=line_no)
            pairs[key] = value
        elif token in _CORPUS_FLAGS:
            flags.add(token)
        else:
            raise ParseError(f"unknown parameter flag {token!r}", line=line_no)
    return pairs, flags


def _param_int(pairs: dict[str, str], key: str, line_no: int) -> int:
    if key not in pairs:
        raise ParseError(f"task needs parameter {key}=<int>", line=line_no)
    try:
        return int(pairs[key])
    except ValueError:
        raise ParseError(f"parameter {key} must be an integer, got"
                         f" {pairs[key]!r}", line=line_no)


def _run_corpus_entry(task: str, pairs: dict[str, str], flags: set[str],
                      braid: BraidWord, tol: Fraction, line_no: int):
    """Returns (record_payload, text, certificate-or-None)."""
    if task == "Floor":
        value = dehornoy_floor(braid)
        return {"floor": value}, str(value), None
    if task == "Fdtc":
        if "tol" in pairs:
            tol = _parse_rational(pairs["tol"], "tol")
        value = fdtc_interval(braid, tol)
        return _fdtc_record(value), _fdtc_text(value), None
    if task == "Classify3":
        nf = normal_form(braid)
        return _classify_record(nf), _classify_text(nf), None
    if task == "CoverCertify":
        cert = certify_closed_braid_cover(braid, _param_int(pairs, "t", line_no),
                                          pa_asserted="pa" in flags, tol=tol)
        return cert.to_record(), cert.verdict.value, cert
    if task == "Genus1":
        cert = certify_genus1_cover(braid, _param_int(pairs, "n", line_no))
        return cert.to_record(), cert.verdict.value, cert
    if task == "Satellite":
        if "c" not in pairs:
            raise ParseError("Satellite task needs c=<rational|lo,hi>",
                             line=line_no)
        cert = certify_satellite(
            braid,
            _param_int(pairs, "n", line_no),
            _parse_fdtc_value(pairs["c"]),
            companion_exact_zero="zero" in flags,
            pa_asserted="pa" in flags,
        )
        return cert.to_record(), cert.verdict.value, cert
    raise ParseError(f"unknown task {task!r}; expected one of"
                     f" {', '.join(_CORPUS_TASKS)}", line=line_no)


def _cmd_corpus(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return 1

    seen_ids: set[str] = set()
    had_error = False
    certs: list[Certificate] = []
    out: list[str] = []

    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entry_id = f"line-{line_no}"
        try:
            fields = raw.split("\t")
            if len(fields) != 4:
                raise ParseError("expected id<tab>task<tab>params<tab>braid",
                                 line=line_no)
            entry_id, task, params, braid_text = (f.strip() for f in fields)
            if not entry_id:
                raise ParseError("empty id", line=line_no)
            if entry_id in seen_ids:
                raise ParseError(f"duplicate id {entry_id!r}", line=line_no)
            seen_ids.add(entry_id)
            pairs, flags = _parse_params(params, line_no)
            braid = parse_braid(braid_text, line=line_no)
            payload, text, cert = _run_corpus_entry(task, pairs, flags, braid,
                                                    args.tol, line_no)
            if cert is not None:
                certs.append(cert)
            if args.report == "json":
                record = {"id": entry_id, "task": task}
                record.update(payload)
                out.append(json.dumps(record, separators=(", ", ": ")))
            else:
                out.append(f"{entry_id}\t{text}")
        except BraidError as exc:
            had_error = True
            name = type(exc).__name__
            if args.report == "json":
                out.append(json.dumps(
                    {"id": entry_id, "error": name, "message": str(exc)},
                    separators=(", ", ": ")))
            else:
                out.append(f"{entry_id}\terror: {name}: {exc}")

    print("\n".join(out))
    if had_error:
        return 1
    return _exit_for(certs)


# ---------------------------------------------------------------------------
# parser assembly


def _add_report(p: argparse.ArgumentParser) -> None:
    p.add_argument("--report", choices=("json", "text"), default="text",
                   help="output format (default: text)")


def _add_tol(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=lambda s: _parse_rational(s, "--tol"),
                   default=Fraction(1, 12),
                   help="interval width target for floor-based twist bounds"
                        " (rational, default 1/12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcert",
        description="Braid-order computations and branched-cover certificates"
                    " with exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="Dehornoy sign of a braid, or comparison"
                                     " of two braids")
    p.add_argument("braid", help='braid word, e.g. "3: 1 -2"')
    p.add_argument("other", nargs="?", default=None,
                   help="optional second braid to compare against")
    _add_report(p)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("floor", help="Dehornoy floor of a braid")
    p.add_argument("braid")
    _add_report(p)
    p.set_defaults(func=_cmd_floor)

    p = sub.add_parser("fdtc", help="fractional Dehn twist coefficient:"
                                    " exact on 3 strands, certified interval"
                                    " otherwise")
    p.add_argument("braid")
    _add_tol(p)
    _add_report(p)
    p.set_defaults(func=_cmd_fdtc)

    p = sub.add_parser("classify3", help="Nielsen-Thurston normal form of a"
                                         " 3-braid")
    p.add_argument("braid")
    _add_report(p)
    p.set_defaults(func=_cmd_classify3)

    p = sub.add_parser("lspace2", help="double branched cover L-space status"
                                       " of a 3-braid closure")
    p.add_argument("braid")
    _add_report(p)
    p.set_defaults(func=_cmd_lspace2)

    p = sub.add_parser("certify-cover", help="excellence of the t-fold cyclic"
                                             " branched cover of a braid"
                                             " closure")
    p.add_argument("--word", required=True, help="braid word")
    p.add_argument("--t", type=int, required=True, help="cover order (>= 2)")
    p.add_argument("--assert-pa", action="store_true",
                   help="assert the braid is pseudo-Anosov")
    _add_tol(p)
    _add_report(p)
    p.set_defaults(func=_cmd_certify_cover)

    p = sub.add_parser("certify-genus1", help="verdict for the n-fold cyclic"
                                              " branched cover of a genus-one"
                                              " fibred knot (monodromy as a"
                                              " 3-braid)")
    p.add_argument("--word", required=True, help="monodromy word")
    p.add_argument("--n", type=int, required=True, help="cover order (>= 2)")
    p.add_argument("--assert-irreducible", action="store_true",
                   help="assert the ambient manifold is irreducible")
    _add_report(p)
    p.set_defaults(func=_cmd_certify_genus1)

    p = sub.add_parser("certify-surgery", help="excellence of surgery on the"
                                               " lifted binding in a cyclic"
                                               " branched cover of a fibred"
                                               " knot")
    p.add_argument("--c", required=True,
                   help='monodromy twist: exact "a/b" or interval "lo,hi"')
    p.add_argument("--n", type=int, required=True, help="cover order (>= 1)")
    p.add_argument("--q", type=int, required=True, help="surgery coefficient")
    p.add_argument("--genus", type=int, default=None,
                   help="fibre genus, enables the 0-surgery lower-bound rule")
    p.add_argument("--assert-hyperbolic", action="store_true",
                   help="assert the knot is hyperbolic")
    _add_report(p)
    p.set_defaults(func=_cmd_certify_surgery)

    p = sub.add_parser("certify-satellite", help="excellence of the n-fold"
                                                 " cyclic branched cover of a"
                                                 " satellite")
    p.add_argument("--pattern", required=True,
                   help="pattern braid word (closed braid in the solid torus)")
    p.add_argument("--n", type=int, required=True, help="cover order (>= 2)")
    p.add_argument("--c", required=True,
                   help='companion twist: exact "a/b" or interval "lo,hi"')
    p.add_argument("--zero-companion", action="store_true",
                   help="assert the companion twist is exactly zero")
    p.add_argument("--assert-pa", action="store_true",
                   help="assert the pattern braid is pseudo-Anosov")
    p.add_argument("--assert-hyperbolic", action="store_true",
                   help="assert the companion is hyperbolic")
    _add_report(p)
    p.set_defaults(func=_cmd_certify_satellite)

    p = sub.add_parser("corpus", help="batch-run tasks from a corpus file"
                                      " (id<tab>task<tab>params<tab>braid;"
                                      " params is k=v/flag tokens, or - for"
                                      " none)")
    p.add_argument("file")
    _add_tol(p)
    _add_report(p)
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BraidError as exc:
        name = type(exc).__name__
        if getattr(args, "report", "text") == "json":
            print(json.dumps({"error": name, "message": str(exc)},
                             separators=(", ", ": ")))
        else:
            print(f"error: {name}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

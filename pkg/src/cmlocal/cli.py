"""Command line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 stabilization or superficial-verification failure.
"""

import argparse
import json
import sys

from .corpus import run_corpus, summary_table
from .hilbert import pformat
from .ideal import brute_force_length, hilbert_samuel
from .local import LocalRing, default_horizon
from .presentation import PresentationError
from .report import StageError, analyze
from .ringfile import read_ring_file
from .verify import classify

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_STABILIZATION = 0, 1, 2, 3


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2)


def _common(p, corpus=False):
    if not corpus:
        p.add_argument("file", help="ring file")
    p.add_argument("--seed", type=int, default=None, help="random seed (default: the file's seed, else 0)")
    p.add_argument("--char", type=int, default=None, help="field characteristic, 0 for the rationals")
    p.add_argument("--horizon", type=int, default=None, help="filtration horizon N (default deg h + d + 3)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="plain text output")
    p.set_defaults(fmt="json")
    p.add_argument("--no-timings", action="store_true", help="leave timings out of the JSON document")


def build_parser():
    parser = argparse.ArgumentParser(prog="cmlocal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("invariants", help="full invariant report with verdicts")
    _common(p)
    p.add_argument("--skip-rr", action="store_true", help="skip the Ratliff-Rush filtration")
    p.add_argument("--oracle", action="store_true", help="cross-check Hilbert-Samuel values by brute force")
    p = sub.add_parser("hilbert", help="Hilbert series, coefficients and Hilbert-Samuel values")
    _common(p)
    p.add_argument("--oracle", action="store_true", help="cross-check Hilbert-Samuel values by brute force")
    p = sub.add_parser("ratliff-rush", help="Ratliff-Rush filtration, r(z) and the h-polynomial of G~")
    _common(p)
    p = sub.add_parser("verify", help="verdicts and classification only")
    _common(p)
    p.add_argument("--skip-rr", action="store_true", help="skip the Ratliff-Rush filtration")
    p = sub.add_parser("corpus", help="run a directory of ring files against their expectations")
    p.add_argument("directory", nargs="?", default=None, help="directory (default: bundled corpus)")
    _common(p, corpus=True)
    p.add_argument("--skip-rr", action="store_true", help="skip the Ratliff-Rush filtration")
    p.add_argument("--oracle", action="store_true", help="cross-check Hilbert-Samuel values by brute force")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


# ---------------------------------------------------------------- renderers

def _text_report(doc):
    inv = doc["invariants"]
    lines = [f"ring: {doc['ring']['name'] or '-'}  char {doc['ring']['char']}  "
             f"vars {', '.join(doc['ring']['vars'])}",
             f"seed {doc['seed']}  horizon {doc['horizon']}"]
    for key in ("d", "embdim", "codim", "e", "h_str", "cohen_macaulay", "colength_J", "type",
                "depth_G", "reduction_number", "r", "h_tilde_str", "rho", "sigma", "sigma_tilde",
                "m3_over_Jm2"):
        if key in inv and inv[key] is not None:
            lines.append(f"{key}: {inv[key]}")
    if inv.get("sigma_variants"):
        lines.append(f"sigma variant(s) satisfying e1/e2 sums: {inv['sigma_variants']['matching']}")
    if inv.get("rr_lengths"):
        lines.append("l(RR(m^i)/m^i): " + " ".join(f"{k}:{v}" for k, v in
                                                   sorted(inv["rr_lengths"].items(), key=lambda t: int(t[0]))))
    for s in doc.get("skipped", []):
        lines.append(f"skipped: {s}")
    if "classification" in doc:
        lines.extend(_text_classification(doc["classification"]))
    if "oracle" in doc:
        lines.append(f"oracle Hilbert-Samuel agreement: {doc['oracle']['all_ok']}")
    return "\n".join(lines)


def _text_classification(c):
    lines = [f"classification: {c['label']}"]
    for v in c["verdicts"]:
        lines.append(f"  {v['check']}: {v['status']}")
    return lines


def _exit_for(doc):
    fails = any(v["status"] == "fail" for v in doc.get("classification", {}).get("verdicts", []))
    oracle_bad = "oracle" in doc and not doc["oracle"]["all_ok"]
    return EXIT_MISMATCH if fails or oracle_bad else EXIT_OK


# --------------------------------------------------------------- subcommands

def cmd_invariants(args, out):
    pres = read_ring_file(args.file, char=args.char)
    rep = analyze(pres, seed=args.seed, horizon=args.horizon, skip_rr=args.skip_rr, oracle=args.oracle)
    doc = rep.to_dict(timings=not args.no_timings)
    doc["classification"] = classify(rep)
    out.write((_dump(doc) if args.fmt == "json" else _text_report(doc)) + "\n")
    return _exit_for(doc)


def cmd_verify(args, out):
    pres = read_ring_file(args.file, char=args.char)
    rep = analyze(pres, seed=args.seed, horizon=args.horizon, skip_rr=args.skip_rr)
    c = classify(rep)
    doc = {"ring": rep.to_dict(timings=False)["ring"], "seed": rep.seed, "horizon": rep.horizon,
           "classification": c}
    out.write((_dump(doc) if args.fmt == "json" else "\n".join(_text_classification(c))) + "\n")
    return EXIT_OK if c["all_pass"] else EXIT_MISMATCH


def cmd_hilbert(args, out):
    pres = read_ring_file(args.file, char=args.char)
    ring = LocalRing.from_presentation(pres)
    N = default_horizon(ring) if args.horizon is None else args.horizon
    samuel = [ring.samuel(n) for n in range(N + 1)]
    doc = {"ring": {"name": pres.name, "char": pres.char, "vars": list(pres.names)},
           "horizon": N, "d": ring.d, "embdim": ring.embdim, "codim": ring.codim,
           "h": list(ring.h), "h_str": pformat(ring.h), "e": list(ring.e),
           "hilbert_function": [ring.hilbert(n) for n in range(N + 1)],
           "hilbert_samuel": samuel,
           "tangent_cone": [_poly_str(g, pres) for g in ring.tangent_cone_gens()]}
    code = EXIT_OK
    if args.oracle:
        rows = []
        for n in range(N + 1):
            gb = hilbert_samuel(pres, n)
            bf = brute_force_length(pres.gens, pres.nvars, pres.char, n)
            rows.append({"n": n, "groebner": gb, "brute_force": bf, "series": samuel[n],
                         "ok": gb == bf == samuel[n]})
        doc["oracle"] = rows
        if not all(r["ok"] for r in rows):
            code = EXIT_MISMATCH
    if args.fmt == "json":
        out.write(_dump(doc) + "\n")
    else:
        out.write("\n".join([f"H(z) = ({doc['h_str']}) / (1 - z)^{ring.d}",
                             f"e: {doc['e']}",
                             f"embdim {ring.embdim}  codim {ring.codim}",
                             f"H(n): {doc['hilbert_function']}",
                             f"l(A/m^(n+1)): {samuel}"]) + "\n")
    return code


def _poly_str(g, pres):
    from .field import Field
    from .poly import format_poly

    return format_poly(g, pres.names, Field(pres.char))


def cmd_ratliff_rush(args, out):
    pres = read_ring_file(args.file, char=args.char)
    rep = analyze(pres, seed=args.seed, horizon=args.horizon)
    inv = rep.to_dict(timings=False)["invariants"]
    doc = {"ring": {"name": pres.name, "char": pres.char, "vars": list(pres.names)},
           "seed": rep.seed, "horizon": rep.horizon,
           "lengths": inv["rr_lengths"], "methods": inv["rr_methods"],
           "extra_generators": inv["rr_generators"], "r": inv["r"],
           "h_tilde": inv["h_tilde"], "skipped": rep.skipped,
           "checks": rep.diagnostics.get("ratliff_rush_checks"),
           "h_tilde_agreement": rep.diagnostics.get("h_tilde")}
    if args.fmt == "json":
        out.write(_dump(doc) + "\n")
    else:
        lines = [f"r(z) = {pformat(doc['r'] or [])}",
                 f"h~(z) = {pformat(doc['h_tilde'] or [])}"]
        for i, n in sorted((doc["lengths"] or {}).items(), key=lambda t: int(t[0])):
            lines.append(f"l(RR(m^{i})/m^{i}) = {n}  [{doc['methods'][i]['method']}]")
            for g in (doc["extra_generators"] or {}).get(i, []):
                lines.append(f"    + {g}")
        lines.extend(f"skipped: {s}" for s in doc["skipped"])
        out.write("\n".join(lines) + "\n")
    agree = doc["h_tilde_agreement"]
    return EXIT_OK if agree is None or agree["agree"] else EXIT_MISMATCH


def cmd_corpus(args, out):
    summary = run_corpus(args.directory, seed=args.seed, char=args.char, horizon=args.horizon,
                         skip_rr=args.skip_rr, oracle=args.oracle, jobs=args.jobs)
    if args.no_timings:
        for r in summary["results"]:
            if "report" in r:
                r["report"].pop("timings", None)
    if args.fmt == "json":
        out.write(_dump(summary) + "\n")
    else:
        out.write(summary_table(summary) + "\n")
    return EXIT_OK if summary["all_pass"] else EXIT_MISMATCH


COMMANDS = {"invariants": cmd_invariants, "verify": cmd_verify, "hilbert": cmd_hilbert,
            "ratliff-rush": cmd_ratliff_rush, "corpus": cmd_corpus}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (PresentationError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StageError as exc:
        print(f"{exc.stage} stage failed: {exc.error}", file=sys.stderr)
        return EXIT_STABILIZATION if exc.is_stabilization else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

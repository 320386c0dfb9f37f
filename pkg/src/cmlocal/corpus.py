"""Regression harness over a directory of ring files with ``expect`` lines.

Recognised expectations (values separated by spaces)::

    expect e 6 8 3          # leading Hilbert coefficients
    expect h 1 3 0 3 -1     # h-polynomial coefficients
    expect type 3
    expect depth_G 0
    expect cm true
    expect label next-type
    expect r 0 1            # r(z) coefficients, empty for r = 0

and likewise ``colength_J``, ``h_tilde``, ``m3_over_Jm2``, ``rho``,
``sigma``, ``sigma_tilde``, ``codim``, ``d``.
"""

import os
from concurrent.futures import ProcessPoolExecutor

from .report import StageError, analyze
from .ringfile import RingFileError, read_ring_file
from .verify import classify

SCALARS = ("type", "depth_G", "colength_J", "m3_over_Jm2", "codim", "d", "reduction_number")
LISTS = ("h", "r", "h_tilde", "rho", "sigma", "sigma_tilde")


def bundled_corpus():
    return os.path.join(os.path.dirname(__file__), "corpus")


def parse_expectation(key, text):
    text = text.strip()
    if key == "cm":
        if text not in ("true", "false"):
            raise ValueError(f"cm expects true or false, got {text!r}")
        return text == "true"
    if key == "label":
        return text
    if key == "e":
        return [int(v) for v in text.split()]
    if key in SCALARS:
        return None if text == "none" else int(text)
    if key in LISTS:
        return None if text == "none" else [int(v) for v in text.split()]
    raise ValueError(f"unknown expectation {key!r}")


def observed(payload, key):
    inv = payload["invariants"]
    if key == "cm":
        return inv["cohen_macaulay"]
    if key == "label":
        return payload["classification"]["label"]
    if key == "e":
        return inv["e"]
    return inv[key]


def compare(payload, expect):
    """List of mismatches (key, expected, observed)."""
    bad = []
    for key, text in sorted(expect.items()):
        want = parse_expectation(key, text)
        got = observed(payload, key)
        if key == "e":
            got = got[:len(want)]
        if got != want:
            bad.append({"key": key, "expected": want, "observed": got})
    return bad


def analyze_file(path, seed=None, char=None, horizon=None, skip_rr=False, oracle=False):
    """Report payload (with verdicts and classification) for one ring file."""
    pres = read_ring_file(path, char=char)
    rep = analyze(pres, seed=seed, horizon=horizon, skip_rr=skip_rr, oracle=oracle)
    payload = rep.to_dict()
    payload["classification"] = classify(rep)
    return pres, payload


def _run_one(args):
    path, opts = args
    name = os.path.basename(path)
    try:
        pres, payload = analyze_file(path, **opts)
    except RingFileError as exc:
        return {"file": name, "status": "input-error", "error": str(exc)}
    except StageError as exc:
        return {"file": name, "status": "stage-error", "stage": exc.stage, "error": str(exc.error)}
    expect = pres.meta.get("expect", {})
    try:
        mismatches = compare(payload, expect)
    except ValueError as exc:
        return {"file": name, "status": "input-error", "error": str(exc)}
    fails = [v["check"] for v in payload["classification"]["verdicts"] if v["status"] == "fail"]
    oracle_ok = payload.get("oracle", {}).get("all_ok", True)
    ok = not mismatches and not fails and oracle_ok
    return {"file": name, "status": "pass" if ok else "fail", "checked": len(expect),
            "mismatches": mismatches, "failed_verdicts": fails, "oracle_ok": oracle_ok,
            "report": payload}


def run_corpus(directory=None, seed=None, char=None, horizon=None, skip_rr=False, oracle=False,
               jobs=1):
    """Analyze every ``*.ring`` file; results are sorted by file name."""
    directory = directory or bundled_corpus()
    files = sorted(f for f in os.listdir(directory) if f.endswith(".ring"))
    opts = {"seed": seed, "char": char, "horizon": horizon, "skip_rr": skip_rr, "oracle": oracle}
    tasks = [(os.path.join(directory, f), opts) for f in files]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda r: r["file"])
    return {"directory": os.path.abspath(directory), "results": results,
            "all_pass": all(r["status"] == "pass" for r in results)}


def summary_table(summary):
    rows = [("file", "status", "expect", "detail")]
    for r in summary["results"]:
        if r["status"] in ("pass", "fail"):
            detail = "; ".join(f"{m['key']}: expected {m['expected']}, got {m['observed']}"
                               for m in r["mismatches"])
            if r["failed_verdicts"]:
                detail = (detail + "; " if detail else "") + "failed " + ", ".join(r["failed_verdicts"])
            if not r["oracle_ok"]:
                detail = (detail + "; " if detail else "") + "oracle mismatch"
            rows.append((r["file"], r["status"], str(r["checked"]), detail))
        else:
            rows.append((r["file"], r["status"], "-", r.get("stage", "") + " " + r["error"]))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = ["  ".join(row[i].ljust(widths[i]) for i in range(3)) + "  " + row[3] for row in rows]
    passed = sum(1 for r in summary["results"] if r["status"] == "pass")
    lines.append(f"{passed}/{len(summary['results'])} files pass")
    return "\n".join(line.rstrip() for line in lines)

"""Command-line front end: ``johnson-spectra {spectrum,verify,scan,percolate,alpha-bar}``.

Exact integers and rationals are always written as strings ("36", "4/3");
rationals additionally carry a 12-significant-digit ``approx`` field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .oracle import spectrum_consistency
from .percolation import PercolationConfig, alpha_bar, predicted_fraction, threshold_scan
from .spectrum import (
    THEOREMS,
    BoundReport,
    DegenerateGraphError,
    GraphParams,
    ScanError,
    full_spectrum,
    lemma6_domain,
    lemma6_residual,
    scan_bounds,
    verify_bound,
)

VERIFY_CHOICES = THEOREMS + ("lemma6", "oracle")


def approx(x) -> str:
    """12 significant digits of an exact number (labeled approximate by callers)."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 40
        return f"{Decimal(x.numerator) / Decimal(x.denominator):.12g}"


def exact(x) -> Optional[str]:
    return None if x is None else str(x)


def rational(x) -> Optional[dict]:
    if x is None:
        return None
    return {"exact": str(Fraction(x)), "approx": approx(x)}


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


class _Out:
    """Single writer for table / JSON-lines / CSV records."""

    def __init__(self, fmt: str, stream, timing: bool = False):
        self.fmt = fmt
        self.stream = stream
        self.timing = timing
        self.t0 = time.perf_counter()
        self._csv: Optional[csv.DictWriter] = None

    def _stamp(self, rec: dict) -> dict:
        if self.timing:
            rec = dict(rec, elapsed_ms=round((time.perf_counter() - self.t0) * 1000, 3))
        return rec

    def json(self, rec: dict):
        self.stream.write(json.dumps(self._stamp(rec)) + "\n")

    def csv_row(self, row: dict):
        if self._csv is None:
            self._csv = csv.DictWriter(self.stream, fieldnames=list(row), lineterminator="\n")
            self._csv.writeheader()
        self._csv.writerow(row)

    def line(self, text: str = ""):
        self.stream.write(text + "\n")


def _params_record(p: GraphParams) -> dict:
    return {"n": p.n, "r": p.r, "s": p.s}


# -- spectrum ------------------------------------------------------------------

def cmd_spectrum(args, out: _Out) -> int:
    given = GraphParams(args.n, args.r, args.s)
    try:
        spec = full_spectrum(given)
    except DegenerateGraphError as exc:
        N = given.vertex_count
        rec = {"command": "spectrum", "params": _params_record(given), "degenerate": True,
               "degree": "0", "lambda": "0", "entries": [{"value": "0", "multiplicity": str(N)}],
               "message": str(exc)}
        if out.fmt == "json":
            out.json(rec)
        elif out.fmt == "csv":
            out.csv_row({"i": "", "value": 0, "multiplicity": N})
        else:
            out.line(f"{given}: {exc}")
        return 0

    p = spec.params
    if args.merged:
        rows = [{"value": str(v), "multiplicity": str(m)} for v, m in spec.merged()]
    else:
        rows = [{"i": e.index, "value": str(e.value), "multiplicity": str(e.multiplicity)}
                for e in spec.entries]
    if out.fmt == "json":
        out.json({"command": "spectrum", "params": _params_record(given),
                  "canonical": _params_record(p), "degenerate": False,
                  "degree": str(spec.degree), "lambda": str(spec.lam), "argmax": spec.argmax,
                  "lambda_over_d": rational(Fraction(spec.lam, spec.degree)),
                  "entries": rows})
    elif out.fmt == "csv":
        for row in rows:
            out.csv_row(row)
    else:
        if p != given:
            out.line(f"{given} is isomorphic to {p} (complement map)")
        out.line(f"{p}: N = {p.vertex_count}, d = {spec.degree}, "
                 f"lambda = {spec.lam} (i = {spec.argmax}), "
                 f"lambda/d ~ {approx(Fraction(spec.lam, spec.degree))}")
        head = ("value", "multiplicity") if args.merged else ("i", "value", "multiplicity")
        width = max([len(h) for h in head] + [len(str(v)) for row in rows for v in row.values()])
        out.line("  ".join(h.rjust(width) for h in head))
        for row in rows:
            out.line("  ".join(str(row[h]).rjust(width) for h in head))
    return 0


# -- verify --------------------------------------------------------------------

def _verdict(rep: BoundReport) -> str:
    if not rep.applicable:
        return "not-applicable"
    if rep.theorem in ("lovasz", "brouwer"):
        ok = rep.claim_holds and rep.identity_holds is not False
        return "pass" if ok else "fail"
    if rep.theorem == "t4":
        return "pass" if rep.identity_holds else "fail"
    return "info"


def _report_record(rep: BoundReport) -> dict:
    return {
        "theorem": rep.theorem,
        "params": _params_record(rep.params),
        "applicable": rep.applicable,
        "lambda": str(rep.actual),
        "degree": str(rep.degree),
        "argmax": rep.argmax,
        "predicted": rational(rep.predicted),
        "normalizer": rational(rep.normalizer),
        "ratio": rational(rep.ratio),
        "claimed_index": rep.claimed_index,
        "claim_holds": rep.claim_holds,
        "identity_holds": rep.identity_holds,
        "alpha": exact(rep.alpha),
        "note": rep.note,
        "verdict": _verdict(rep),
    }


def _flat(rec: dict) -> dict:
    flat = {}
    for key, val in rec.items():
        if isinstance(val, dict):
            for sub, v in val.items():
                flat[f"{key}_{sub}"] = v
        else:
            flat[key] = "" if val is None else val
    return flat


def cmd_verify(args, out: _Out) -> int:
    p = GraphParams(args.n, args.r, args.s)
    if args.theorem == "lemma6":
        cells = list(lemma6_domain(p))
        bad = [(i, j) for i, j in cells if lemma6_residual(p, i, j) != 0]
        rec = {"command": "verify", "theorem": "lemma6", "params": _params_record(p),
               "checked": len(cells), "nonzero": len(bad),
               "first_nonzero": list(bad[0]) if bad else None,
               "verdict": "pass" if not bad else "fail"}
        _emit_simple(out, rec, f"{p} lemma6: {len(cells)} (i, j) cells, "
                               f"{len(bad)} nonzero residuals -> {rec['verdict']}")
        return 0 if not bad else 1

    if args.theorem == "oracle":
        res = spectrum_consistency(p, args.K)
        rec = {"command": "verify", "theorem": "oracle", "params": _params_record(p),
               "K": res.K, "passed": res.passed, "first_failure": res.first_failure,
               "moments": [str(x) for x in res.observed],
               "verdict": "pass" if res.passed else "fail"}
        msg = (f"{p} oracle: tr(A^k) matches the spectrum for k = 0..{res.K} -> pass"
               if res.passed else
               f"{p} oracle: mismatch at k = {res.first_failure}: "
               f"spectrum {res.predicted[res.first_failure]} vs graph "
               f"{res.observed[res.first_failure]} -> fail")
        _emit_simple(out, rec, msg)
        return 0 if res.passed else 1

    rep = verify_bound(p, args.theorem, args.alpha)
    rec = dict(command="verify", **_report_record(rep))
    if out.fmt == "json":
        out.json(rec)
    elif out.fmt == "csv":
        out.csv_row(_flat(rec))
    else:
        out.line(f"{rep.params} {rep.theorem}: applicable={rep.applicable}")
        out.line(f"  lambda = {rep.actual} at i = {rep.argmax}, d = {rep.degree}")
        if rep.predicted is not None:
            out.line(f"  predicted = {rep.predicted} (~{approx(rep.predicted)})")
        if rep.ratio is not None:
            out.line(f"  ratio = {rep.ratio} (~{approx(rep.ratio)})")
        if rep.claim_holds is not None:
            out.line(f"  claim holds: {rep.claim_holds}")
        if rep.identity_holds is not None:
            out.line(f"  closed form matches: {rep.identity_holds}")
        if rep.note:
            out.line(f"  note: {rep.note}")
        out.line(f"  verdict: {rec['verdict']}")
    return 1 if rec["verdict"] == "fail" else 0


def _emit_simple(out: _Out, rec: dict, text: str):
    if out.fmt == "json":
        out.json(rec)
    elif out.fmt == "csv":
        out.csv_row({k: (" ".join(v) if isinstance(v, list) else ("" if v is None else v))
                     for k, v in _flat(rec).items()})
    else:
        out.line(text)


# -- scan ----------------------------------------------------------------------

def _read_scan_rows(path: str):
    """Yield (line_no, item or exception) for each data row of the input CSV."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = [f.strip() for f in (reader.fieldnames or [])]
        missing = {"n", "r", "s"} - set(fields)
        if missing:
            raise ValueError(f"{path}: CSV header must contain n,r,s (missing {sorted(missing)})")
        for line_no, raw in enumerate(reader, start=2):
            row = {k.strip(): (v or "").strip() for k, v in raw.items() if k is not None}
            try:
                p = GraphParams(int(row["n"]), int(row["r"]), int(row["s"]))
                alpha = Fraction(row["alpha"]) if row.get("alpha") else None
                yield line_no, (p, alpha)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                yield line_no, exc


def cmd_scan(args, out: _Out) -> int:
    parsed = list(_read_scan_rows(args.input))
    good = [(ln, item) for ln, item in parsed if not isinstance(item, Exception)]
    items = [(p, a if a is not None else args.alpha) for _, (p, a) in good]
    res = scan_bounds(items, args.theorem)
    by_line = {}
    for (ln, _), row in zip(good, res.rows):
        by_line[ln] = row
    failed = 0
    for ln, item in parsed:
        row = by_line.get(ln, item)
        if isinstance(row, BoundReport):
            rec = dict(line=ln, error=None, **_report_record(row))
        else:
            failed += 1
            msg = row.message if isinstance(row, ScanError) else str(row)
            rec = {"line": ln, "error": msg}
        if out.fmt == "json":
            out.json(rec)
        elif out.fmt == "csv":
            out.csv_row(_scan_csv_row(rec))
        else:
            if rec.get("error"):
                out.line(f"line {ln}: error: {rec['error']}")
            else:
                ratio = rec["ratio"]["approx"] if rec["ratio"] else "-"
                out.line(f"line {ln}: G({rec['params']['n']},{rec['params']['r']},"
                         f"{rec['params']['s']}) lambda={rec['lambda']} i={rec['argmax']} "
                         f"ratio~{ratio} claim={rec['claim_holds']} {rec['verdict']}")
    summary = {
        "summary": True,
        "theorem": args.theorem,
        "rows": len(parsed),
        "errors": failed,
        "max_ratio": rational(res.max_ratio),
        "threshold": _params_record(res.threshold) if res.threshold else None,
    }
    if out.fmt == "json":
        out.json(summary)
    else:
        mr = summary["max_ratio"]
        thr = res.threshold
        text = (f"# summary: rows={len(parsed)} errors={failed} "
                f"max_ratio={mr['exact'] + ' (~' + mr['approx'] + ')' if mr else '-'}")
        if args.theorem in ("t4", "t5.1"):
            text += f" threshold={thr if thr else 'none'}"
        out.line(text)
    return 1 if failed else 0


_SCAN_FIELDS = ("line", "n", "r", "s", "applicable", "lambda", "degree", "argmax",
                "predicted", "ratio", "ratio_approx", "claim_holds", "identity_holds",
                "verdict", "error")


def _scan_csv_row(rec: dict) -> dict:
    row = dict.fromkeys(_SCAN_FIELDS, "")
    row["line"] = rec["line"]
    if rec.get("error"):
        row["error"] = rec["error"]
        return row
    row.update(rec["params"])
    for key in ("applicable", "lambda", "degree", "argmax", "claim_holds",
                "identity_holds", "verdict"):
        row[key] = "" if rec[key] is None else rec[key]
    if rec["predicted"]:
        row["predicted"] = rec["predicted"]["exact"]
    if rec["ratio"]:
        row["ratio"] = rec["ratio"]["exact"]
        row["ratio_approx"] = rec["ratio"]["approx"]
    return row


# -- percolate / alpha-bar -----------------------------------------------------

def _parse_c(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad intensity {text!r}") from exc


def _parse_c_list(text: str):
    return [_parse_c(t) for t in text.split(",") if t.strip()]


def cmd_percolate(args, out: _Out) -> int:
    p = GraphParams(args.n, args.r, args.s)
    cs = args.c_list if args.c_list is not None else [args.c]
    for c in cs:
        # validate every intensity before the (expensive) graph build
        PercolationConfig(p, c, args.trials, args.seed)
    summaries = threshold_scan(p, cs, trials=args.trials, seed=args.seed)
    for summ in summaries:
        row = summ.row()
        if out.fmt == "json":
            out.json(dict(command="percolate", **row))
        elif out.fmt == "csv":
            out.csv_row(row)
        else:
            out.line(f"{p} c={row['c']} p={summ.p:.6g} trials={row['trials']} seed={row['seed']}: "
                     f"mean L1/N = {summ.mean_fraction:.6f} (sd {summ.std_fraction:.6f}), "
                     f"predicted {summ.predicted:.6f}, max L1 = {row['max_largest']}, "
                     f"max L2 = {row['max_second']}")
    return 0


def cmd_alpha_bar(args, out: _Out) -> int:
    c = float(args.c)
    ab = alpha_bar(c)
    frac = predicted_fraction(c)
    rec = {"command": "alpha-bar", "c": repr(c), "alpha_bar": f"{ab:.12g}",
           "fraction": f"{frac:.12g}"}
    if out.fmt == "json":
        out.json(rec)
    elif out.fmt == "csv":
        out.csv_row(rec)
    else:
        out.line(f"c = {c}: alpha_bar = {ab:.12g}, giant fraction 1 - alpha_bar/c = {frac:.12g}")
    return 0


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="johnson-spectra",
                                     description="Exact spectra and percolation for Johnson graphs G(n, r, s).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json",
                         help="JSON lines, one object per record")
        fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
        sp.add_argument("--timing", action="store_true",
                        help="add elapsed_ms to JSON records")
        sp.set_defaults(fmt="table")

    def triple(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)

    sp = sub.add_parser("spectrum", help="all eigenvalues with multiplicities")
    triple(sp)
    sp.add_argument("--merged", action="store_true", help="sum multiplicities of equal eigenvalues")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="check one eigenvalue statement, Lemma-type recurrence or the oracle")
    triple(sp)
    sp.add_argument("--theorem", required=True, choices=VERIFY_CHOICES)
    sp.add_argument("--alpha", type=parse_rational, default=None,
                    help="exact density ratio for --theorem main, e.g. 1/2")
    sp.add_argument("--K", type=int, default=None, help="highest moment for --theorem oracle")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="verify a theorem over rows of a CSV file (header n,r,s)")
    sp.add_argument("--input", required=True)
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.add_argument("--alpha", type=parse_rational, default=None)
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("percolate", help="bond percolation at p = c/d")
    triple(sp)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--c", type=_parse_c)
    grp.add_argument("--c-list", type=_parse_c_list, help="comma-separated intensities")
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_percolate)

    sp = sub.add_parser("alpha-bar", help="root of x e^-x = c e^-c below 1")
    sp.add_argument("--c", type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_alpha_bar)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stream = stdout if stdout is not None else sys.stdout
    out = _Out(args.fmt, stream, timing=args.timing)
    try:
        return args.func(args, out)
    except (ValueError, TypeError, OSError) as exc:
        print(f"johnson-spectra {args.command}: error: {exc}", file=sys.stderr)
        return 1


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Call :func:`main` and capture stdout; convenient for scripts and tests."""
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

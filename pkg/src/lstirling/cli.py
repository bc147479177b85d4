"""Command-line interface: tables, verification sweeps, gamma reports,
conjecture certificates, and OEIS b-file cross-checks.

Exit codes: 0 all checks pass, 1 mismatch, 2 inconclusive, 3 I/O or data
error.  Table and report payloads go to stdout or --out; verification report
lines go to stdout, one per check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path

from . import codes, gamma, grammar, partitions, realroots, triangles

TABLE_CAPS = {"ls": 200, "lc": 200, "js": 60, "jc": 60}
GAMMA_KMAX_CAP = 20
CONJECTURE_KMAX_CAP = 10
VERIFY_DEFAULT_NMAX = {"identities": 20, "bijection": 5, "grammar": 8, "zstat": 6}
CACHE_ENV = "LSTIRLING_CACHE_DIR"


@dataclass
class Report:
    """One verification line: what ran, with what bounds, and how it went."""

    command: str
    params: dict
    ok: bool
    counterexample: str | None = None
    seconds: float = 0.0

    def line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = "ok  " if self.ok else "FAIL"
        tail = f" counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{head} {self.command} {params} {self.seconds:.2f}s{tail}"


def _run_check(name: str, params: dict, fn) -> Report:
    start = time.perf_counter()
    ok, detail = fn()
    return Report(name, params, ok, detail, time.perf_counter() - start)


class BFileError(Exception):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


@dataclass
class BFile:
    seq_id: str
    entries: list = field(default_factory=list)  # (index, value) pairs


def parse_bfile(text: str, seq_id: str = "") -> BFile:
    """Parse OEIS b-file lines 'index value'; '#' starts a comment."""
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(line_no, f"expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(line_no, f"non-integer field in {raw!r}") from None
        if entries and idx <= entries[-1][0]:
            raise BFileError(line_no, "indices must be strictly increasing")
        entries.append((idx, val))
    return BFile(seq_id, entries)


OEIS_SEQUENCES = {
    # b-file index -> k shift, and the exact value each entry must equal
    "A025035": {"shift": 0, "describe": "gamma(k,3k)", "value": lambda k: gamma.gamma_coeff(k, 3 * k)},
    "A006472": {"shift": -1, "describe": "|gamma_k(-1)|", "value": lambda k: abs(gamma.gamma_poly(k).eval(-1))},
}


def _fail(msg: str, code: int) -> int:
    print(msg, file=sys.stderr)
    return code


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        Path(out).write_text(text)
    except OSError as err:
        return _fail(f"cannot write {out}: {err}", 3)
    return 0


# -- table ---------------------------------------------------------------


def _table_cell(family: str, n: int, k: int):
    fn = {"ls": triangles.ls, "lc": triangles.lc, "js": triangles.js, "jc": triangles.jc}[family]
    v = fn(n, k)
    return list(v.coeffs) if family in ("js", "jc") else v


def cmd_table(args) -> int:
    cap = TABLE_CAPS[args.family]
    if args.nmax < 0:
        return _fail("table: nmax must be nonnegative", 1)
    if args.nmax > cap:
        return _fail(f"table: nmax {args.nmax} exceeds the {args.family} cap {cap}", 1)
    if args.format == "json":
        rows = [[_table_cell(args.family, n, k) for k in range(n + 1)] for n in range(args.nmax + 1)]
        text = json.dumps({"family": args.family, "nmax": args.nmax, "rows": rows}) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "k", "value"])
        for n in range(args.nmax + 1):
            for k in range(n + 1):
                cell = _table_cell(args.family, n, k)
                writer.writerow([n, k, json.dumps(cell, separators=(",", ":")) if isinstance(cell, list) else cell])
        text = buf.getvalue()
    return _emit(text, args.out)


# -- verify ---------------------------------------------------------------


def _verify_identities(nmax: int) -> list:
    reports = []

    def four_way():
        for n in range(nmax + 1):
            for k in range(n + 1):
                byrec = triangles.ls(n, k)
                if triangles.ls_explicit(n, k) != byrec:
                    return False, f"ls_explicit({n},{k}) != {byrec}"
                if 1 <= k <= n and triangles.ls_vertical(n, k) != byrec:
                    return False, f"ls_vertical({n},{k}) != {byrec}"
        for k in range(1, nmax + 1):
            r = triangles.vertical_gf_check(k, nmax - k)
            if not r:
                return False, r.detail
        return True, None

    reports.append(_run_check("identities.four_way", {"nmax": nmax}, four_way))

    def horizontal_ls():
        for n in range(nmax + 1):
            r = triangles.horizontal_identity_ls(n)
            if not r:
                return False, r.detail
        return True, None

    reports.append(_run_check("identities.horizontal_ls", {"nmax": nmax}, horizontal_ls))

    jmax = min(nmax, 15)

    def bivariate():
        for n in range(jmax + 1):
            r = triangles.horizontal_identity_js(n)
            if not r:
                return False, r.detail
            r = triangles.jc_defining_product(n)
            if not r:
                return False, r.detail
        return True, None

    reports.append(_run_check("identities.bivariate", {"nmax": jmax}, bivariate))

    def specialize():
        for n in range(nmax + 1):
            for k in range(n + 1):
                if triangles.js(n, k).eval(1) != triangles.ls(n, k):
                    return False, f"js({n},{k}) at z=1 != ls({n},{k})"
                if triangles.jc(n, k).eval(1) != triangles.lc(n, k):
                    return False, f"jc({n},{k}) at z=1 != lc({n},{k})"
        return True, None

    reports.append(_run_check("identities.z_equals_1", {"nmax": nmax}, specialize))
    return reports


def _verify_bijection(nmax: int) -> list:
    reports = []
    for n in range(1, nmax + 1):

        def round_trip(n=n):
            count = 0
            by_k: dict = {}
            for p in partitions.enumerate_partitions(n):
                v = partitions.validate(p)
                if not v:
                    return False, f"{p.render()}: {v.detail}"
                code = codes.phi_inverse(p)
                if codes.phi(code) != p:
                    return False, json.dumps(p.to_json_dict())
                by_k[len(p.boxes)] = by_k.get(len(p.boxes), 0) + 1
                count += 1
            for code in codes.enumerate_codes(n):
                if codes.phi_inverse(codes.phi(code)) != code:
                    return False, codes.render_code(code)
            for k in range(1, n + 1):
                if by_k.get(k, 0) != triangles.ls(n, k):
                    return False, f"count at k={k} is {by_k.get(k, 0)}, ls gives {triangles.ls(n, k)}"
                if codes.count_codes(n, k) != triangles.ls(n, k):
                    return False, f"count_codes({n},{k}) != ls({n},{k})"
            return True, f"{count} partitions round-tripped"

        start = time.perf_counter()
        ok, detail = round_trip()
        seconds = time.perf_counter() - start
        if ok:
            print(f"     bijection n={n}: {detail}")
            detail = None
        reports.append(Report("bijection.round_trip", {"n": n}, ok, detail, seconds))
    return reports


def _verify_grammar(nmax: int) -> list:
    table = {
        "grammar.stirling2": grammar.check_stirling2,
        "grammar.stirling1": grammar.check_stirling1,
        "grammar.js": grammar.check_js_grammar,
        "grammar.jc": grammar.check_jc_grammar,
    }
    reports = []
    for name, check in table.items():

        def sweep(check=check):
            for n in range(nmax + 1):
                r = check(n)
                if not r:
                    return False, r.detail
            return True, None

        reports.append(_run_check(name, {"nmax": nmax}, sweep))
    return reports


def _verify_zstat(nmax: int) -> list:
    def sweep():
        for n in range(1, nmax + 1):
            for k in range(1, n + 1):
                if partitions.js_brute(n, k) != triangles.js(n, k):
                    return False, f"js_brute({n},{k}) != js({n},{k})"
        return True, None

    return [_run_check("zstat.brute_vs_triangle", {"nmax": nmax}, sweep)]


def cmd_verify(args) -> int:
    nmax = args.nmax if args.nmax is not None else VERIFY_DEFAULT_NMAX[args.suite]
    if args.suite in ("bijection", "zstat") and nmax > partitions.ENUM_LIMIT:
        return _fail(f"verify {args.suite}: nmax capped at {partitions.ENUM_LIMIT}", 1)
    runner = {
        "identities": _verify_identities,
        "bijection": _verify_bijection,
        "grammar": _verify_grammar,
        "zstat": _verify_zstat,
    }[args.suite]
    reports = runner(nmax)
    ok = True
    for r in reports:
        print(r.line())
        ok = ok and r.ok
    return 0 if ok else 1


# -- gamma ----------------------------------------------------------------


def cmd_gamma(args) -> int:
    if not 0 <= args.kmax <= GAMMA_KMAX_CAP:
        return _fail(f"gamma: kmax must be in 0..{GAMMA_KMAX_CAP}", 1)
    rows = []
    for k in range(args.kmax + 1):
        lo, _ = gamma.support(k)
        rows.append({"k": k, "offset": lo, "coeffs": list(gamma.gamma_row(k))})
    closed = gamma.closed_forms(max(args.kmax, 1))
    ode_ok = all(
        gamma.gamma_poly(k) == gamma.gamma_poly_via_ode(k) for k in range(min(args.kmax, 10) + 1)
    )
    expansion_ok = True
    expansion_detail = None
    for k in range(1, min(args.kmax, 8) + 1):
        for n in range(1, args.nmax + 1):
            if gamma.ls_binomial_expansion(n, k) != triangles.ls(n + k, n):
                expansion_ok = False
                expansion_detail = f"expansion differs from triangle at n={n}, k={k}"
                break
    doc = {
        "kmax": args.kmax,
        "rows": rows,
        "closed_forms_ok": bool(closed),
        "ode_rows_ok": ode_ok,
        "expansion_ok": expansion_ok,
        "expansion_nmax": args.nmax,
    }
    if args.format == "json":
        rc = _emit(json.dumps(doc) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "offset", "coeffs"])
        for row in rows:
            writer.writerow([row["k"], row["offset"], json.dumps(row["coeffs"], separators=(",", ":"))])
        rc = _emit(buf.getvalue(), args.out)
        print(f"closed_forms_ok={bool(closed)} ode_rows_ok={ode_ok} expansion_ok={expansion_ok}")
    if rc:
        return rc
    if not (closed and ode_ok and expansion_ok):
        return _fail(closed.detail or expansion_detail or "gamma: route disagreement", 1)
    return 0


# -- conjecture -----------------------------------------------------------


def cmd_conjecture(args) -> int:
    if not 1 <= args.kmax <= CONJECTURE_KMAX_CAP:
        return _fail(f"conjecture: kmax must be in 1..{CONJECTURE_KMAX_CAP}", 1)
    lines = []
    verdicts = []
    for k in range(1, args.kmax + 1):
        res = realroots.verify_conjecture(k)
        verdicts.append(res.verdict)
        lines.append(json.dumps(res.to_json_dict()))
    rc = _emit("\n".join(lines) + "\n", args.out)
    if rc:
        return rc
    if any(v == "false" for v in verdicts):
        return 1
    if any(v == "inconclusive" for v in verdicts):
        return 2
    return 0


# -- oeis -----------------------------------------------------------------


def _read_source(seq_id: str, source: str | None) -> str:
    if source is None:
        source = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
    if re.match(r"https?://", source):
        cache_dir = Path(os.environ.get(CACHE_ENV, Path.home() / ".cache" / "lstirling"))
        cache_file = cache_dir / source.rstrip("/").rsplit("/", 1)[-1]
        if cache_file.exists():
            return cache_file.read_text()
        with urllib.request.urlopen(source) as resp:
            text = resp.read().decode("utf-8")
        cache_dir.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(text)
        return text
    return Path(source).read_text()


def cmd_oeis(args) -> int:
    entry = OEIS_SEQUENCES.get(args.seq)
    if entry is None:
        known = ", ".join(sorted(OEIS_SEQUENCES))
        return _fail(f"oeis: no comparator for {args.seq} (known: {known})", 3)
    try:
        text = _read_source(args.seq, args.source)
    except OSError as err:
        return _fail(f"oeis: cannot read b-file: {err}", 3)
    try:
        bfile = parse_bfile(text, args.seq)
    except BFileError as err:
        return _fail(f"oeis: {args.seq} b-file {err}", 3)
    if args.count < 1:
        return _fail("oeis: count must be positive", 1)
    if args.count > len(bfile.entries):
        return _fail(f"oeis: b-file has only {len(bfile.entries)} entries, need {args.count}", 3)
    shift = entry["shift"] if args.offset is None else args.offset
    for idx, val in bfile.entries[: args.count]:
        k = idx + shift
        if k < 0:
            return _fail(f"oeis: index {idx} maps to negative k with shift {shift}", 3)
        expected = entry["value"](k)
        if val != expected:
            print(f"FAIL {args.seq} index {idx}: b-file {val}, {entry['describe']} at k={k} is {expected}")
            return 1
    print(f"ok   {args.seq}: first {args.count} entries match {entry['describe']}")
    return 0


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lstirling", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a triangle as CSV or JSON")
    p.add_argument("--family", choices=sorted(TABLE_CAPS), required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=sorted(VERIFY_DEFAULT_NMAX))
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gamma", help="gamma rows, closed forms, expansion agreement")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("conjecture", help="real-root interlacing certificates, one JSON per k")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("oeis", help="cross-check a sequence b-file against exact values")
    p.add_argument("seq")
    p.add_argument("--source", default=None, help="b-file path or URL (default: fetch from oeis.org)")
    p.add_argument("--count", type=int, default=12)
    p.add_argument("--offset", type=int, default=None, help="override the index -> k shift")
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

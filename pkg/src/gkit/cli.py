"""Command-line front end: `gkit <subcommand> ...`.

Every subcommand builds a JSON-compatible payload; human-readable text is rendered from
it, and --json prints the payload itself.  Exit codes: 0 success, 1 a negative verdict
under --strict (or a failed regression claim in `reproduce`), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from gkit import __version__, apolarity, asymptotics, binomial, claims, delta, elimination, perazzo, sequences
from gkit.polynomial import ExactPolynomial


@dataclass
class CommandResult:
    command: str
    inputs: dict[str, Any]
    output: Any
    exit_code: int = 0
    text: str = ""  # what gets printed
    stream: str = "stdout"

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "output": self.output,
                "exit_code": self.exit_code}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() can return a CommandResult
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        raise _Exit(status, message or "")


class _Exit(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status
        self.message = message


def _candidate(text: str) -> tuple[int, ...]:
    try:
        return sequences.parse_candidate(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if not sep or a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"expected 1 <= a <= b in a..b, got {text!r}")
    return a, b


def _split(text: str) -> tuple[int, int]:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected n,m")
    return parts[0], parts[1]


def _default_jobs() -> int:
    raw = os.environ.get("GKIT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON payload")
    common.add_argument("--no-meta", action="store_true", help="omit the meta block (timestamp) from JSON")
    common.add_argument("--strict", action="store_true", help="exit 1 on negative verdicts")

    p = _Parser(prog="gkit", description="Hilbert-function toolkit for Artinian Gorenstein algebras.")
    p.add_argument("--version", action="version", version=f"gkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("expand", parents=[common], help="Macaulay i-binomial expansion of k")
    s.add_argument("k", type=int)
    s.add_argument("i", type=int)

    s = sub.add_parser("bound", parents=[common], help="growth bounds from the expansion")
    s.add_argument("kind", choices=["macaulay", "green", "gotzmann"])
    s.add_argument("h", type=int)
    s.add_argument("d", type=int)
    s.add_argument("--s", type=int, default=1, help="steps for gotzmann growth")

    s = sub.add_parser("hf", help="Hilbert functions of full Perazzo algebras")
    hf = s.add_subparsers(dest="hf_command", required=True, parser_class=_Parser)
    t = hf.add_parser("perazzo", parents=[common])
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--extend", type=int, default=0, metavar="S", help="add S fresh d-th powers")
    t.add_argument("--poly-out", metavar="FILE", help="write the polynomial in text format")

    s = sub.add_parser("test", help="sequence predicates and closed-form elimination lemmas")
    ts = s.add_subparsers(dest="test_command", required=True, parser_class=_Parser)
    t = ts.add_parser("shape", parents=[common])
    t.add_argument("--candidate", type=_candidate, required=True)
    for name in ("gors", "gorf"):
        t = ts.add_parser(name, parents=[common])
        t.add_argument("r", type=int)
        t.add_argument("h", type=int)
    t = ts.add_parser("tec", parents=[common])
    t.add_argument("k", type=int)
    t.add_argument("d", type=int)
    t = ts.add_parser("compare", parents=[common])
    t.add_argument("a", type=_candidate)
    t.add_argument("b", type=_candidate)

    s = sub.add_parser("eliminate", parents=[common], help="non-Gorenstein elimination certificate")
    s.add_argument("--candidate", type=_candidate, required=True)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--cap", type=int, default=10**6, help="node cap for the section search")
    s.add_argument("--cited", action="store_true", help="fall back to cited non-existence facts")
    s.add_argument("--trace", action="store_true", help="record every decisive branch")

    s = sub.add_parser("apolar", help="Hilbert function of Q/Ann(f)")
    ap = s.add_subparsers(dest="apolar_command", required=True, parser_class=_Parser)
    t = ap.add_parser("hf", parents=[common])
    t.add_argument("--poly", required=True, metavar="FILE", help="text or JSON polynomial file")
    t.add_argument("--bigraded", type=_split, metavar="n,m")

    s = sub.add_parser("delta", parents=[common], help="delta(r) bound ledger")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--range", type=_range, required=True, metavar="a..b")
    s.add_argument("--format", choices=["csv", "json", "text"], default="text")
    s.add_argument("--no-cited", action="store_true", help="use recomputed facts only")
    s.add_argument("--step-rule", action="store_true", help="also apply the one-step rule")

    s = sub.add_parser("asymptotics", parents=[common], help="ratio scan against the limit constant")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=_int_list, required=True, metavar="LIST")
    s.add_argument("--digits", type=int, default=30)
    s.add_argument("--csv", action="store_true")

    s = sub.add_parser("reproduce", parents=[common], help="run the regression claims")
    s.add_argument("--jobs", type=int, default=_default_jobs())
    s.add_argument("--only", nargs="*", metavar="NAME", help="run only these claims")
    return p


# --- subcommands: each returns (payload, text, negative) -----------------------------


def _cmd_expand(a):
    e = binomial.expand(a.k, a.i)
    return {"k": e.value, "i": e.degree, "parts": [list(t) for t in e.parts], "text": str(e)}, str(e), False


def _cmd_bound(a):
    if a.kind == "macaulay":
        v = binomial.macaulay_bound(a.h, a.d)
    elif a.kind == "green":
        v = binomial.green_bound(a.h, a.d)
    else:
        v = binomial.gotzmann_growth(a.h, a.d, a.s)
    payload = {"kind": a.kind, "h": a.h, "d": a.d, "value": v}
    if a.kind == "gotzmann":
        payload["s"] = a.s
    return payload, str(v), False


def _cmd_hf(a):
    h = perazzo.extend_with_powers(a.m, a.extend, a.d)
    payload = {"m": a.m, "d": a.d, "extend": a.extend, "codim": h[1], "hilbert": list(h),
               "totally_nonunimodal": sequences.is_totally_nonunimodal(h)}
    if a.poly_out:
        f = perazzo.add_powers(perazzo.full_perazzo_poly(a.m, a.d), a.extend)
        with open(a.poly_out, "w") as fh:
            fh.write(f.to_text())
        payload["poly_out"] = a.poly_out
    return payload, ",".join(map(str, h)), False


def _cmd_test(a):
    c = a.test_command
    if c == "shape":
        h = a.candidate
        payload = {"candidate": list(h), "o_sequence": sequences.is_o_sequence(h),
                   "symmetric": sequences.is_symmetric(h),
                   "gorenstein_shape": sequences.is_gorenstein_shape(h),
                   "unimodal": sequences.is_unimodal(h),
                   "totally_nonunimodal": sequences.is_totally_nonunimodal(h)}
        text = "\n".join(f"{k}: {str(v).lower()}" for k, v in payload.items() if k != "candidate")
        return payload, text, not payload["gorenstein_shape"]
    if c in ("gors", "gorf"):
        cert = (elimination.gors_test if c == "gors" else elimination.gorf_test)(a.r, a.h)
        return cert.to_json(), _render_cert(cert), cert.eliminated
    if c == "tec":
        ok = elimination.tec_check(a.k, a.d)
        return {"k": a.k, "d": a.d, "holds": ok}, str(ok).lower(), not ok
    order = sequences.compare(a.a, a.b)
    return {"a": list(a.a), "b": list(a.b), "order": order.name}, order.name, False


def _render_cert(cert: elimination.EliminationCertificate) -> str:
    lines = [f"{','.join(map(str, cert.candidate))}: {cert.verdict.value} ({cert.rule.value})"]
    for s in cert.steps:
        args = ", ".join(map(str, s.values[:-1]))
        lines.append(f"  {s.desc}: {s.op}({args}) = {s.values[-1]}")
    if cert.extremal:
        ex = cert.extremal
        verdict = ex.get("middle_verdict", "no closed-form test")
        lines.append(f"  extremal middle {','.join(map(str, ex['M']))}: {verdict}")
    if cert.stats:
        lines.append("  stats " + " ".join(f"{k}={v}" for k, v in sorted(cert.stats.items())))
    return "\n".join(lines)


def _cmd_eliminate(a):
    cert = elimination.eliminate(a.candidate, a.depth, a.cap, use_cited=a.cited, trace=a.trace)
    return cert.to_json(), _render_cert(cert), cert.eliminated


def _cmd_apolar(a):
    try:
        f = ExactPolynomial.load(a.poly)
    except OSError as exc:
        raise UsageError(f"cannot read {a.poly}: {exc.strerror}") from None
    h = apolarity.ann_hilbert_function(f)
    payload = {"vars": f.num_vars, "degree": len(h) - 1, "hilbert": list(h),
               "symmetric": sequences.is_symmetric(h), "o_sequence": sequences.is_o_sequence(h)}
    text = ",".join(map(str, h))
    if a.bigraded:
        table = apolarity.bigraded_hilbert(f, a.bigraded)
        payload["bigraded"] = [{"i": i, "j": j, "dim": v} for (i, j), v in sorted(table.items())]
        text += "\n" + "\n".join(f"A({i},{j}) = {v}" for (i, j), v in sorted(table.items()))
    return payload, text, False


def _cmd_delta(a):
    lo, hi = a.range
    recs = delta.ledger(a.degree, hi, use_cited=not a.no_cited, step_rule=a.step_rule)
    rows = [recs[r] for r in range(lo, hi + 1)]
    payload = [r.to_json() for r in rows]
    if a.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(delta.to_csv_rows(rows))
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n".join(f"delta({r.r}) in [{r.lower}, {'?' if r.upper is None else r.upper}]  {r.status}"
                         for r in rows)
    if a.format == "json":
        a.json = True
    return payload, text, False


def _cmd_asymptotics(a):
    const = asymptotics.limit_constant(a.d, a.k)
    rows = asymptotics.ratio_scan(a.d, a.k, a.m, a.digits)
    limit = const.as_string(a.digits)
    out_rows = [{"m": r.m, "r": r.r,
                 "lower_ratio": asymptotics.mpmath.nstr(r.lower_ratio, a.digits),
                 "perazzo_ratio": asymptotics.mpmath.nstr(r.perazzo_ratio, a.digits),
                 "gap": asymptotics.mpmath.nstr(r.gap, 10)} for r in rows]
    payload = {"d": a.d, "k": a.k, "limit": limit, "rows": out_rows,
               "gaps_decreasing": asymptotics.gaps_decreasing(rows)}
    if a.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "r", "lower_ratio", "perazzo_ratio", "gap"])
        for r in out_rows:
            w.writerow([r["m"], r["r"], r["lower_ratio"], r["perazzo_ratio"], r["gap"]])
        text = buf.getvalue().rstrip("\n")
    else:
        text = f"limit = {limit}\n" + "\n".join(
            f"m={r['m']} r={r['r']} lower={r['lower_ratio']} perazzo={r['perazzo_ratio']} gap={r['gap']}"
            for r in out_rows)
    return payload, text, False


def _cmd_reproduce(a):
    names = [c.name for c in claims.CLAIMS]
    if a.only:
        unknown = sorted(set(a.only) - set(names))
        if unknown:
            raise UsageError(f"unknown claims: {', '.join(unknown)}")
        indices = [i for i, n in enumerate(names) if n in a.only]
    else:
        indices = list(range(len(names)))
    if a.jobs > 1 and len(indices) > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            results = list(pool.map(claims.run_claim, indices))
    else:
        results = [claims.run_claim(i) for i in indices]
    rows = [{"name": n, "statement": claims.CLAIMS[i].statement, "passed": ok, "detail": detail}
            for i, (n, ok, detail) in zip(indices, results)]
    failed = [r for r in rows if not r["passed"]]
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}: {r['statement']}"
             + ("" if r["passed"] else f" [{r['detail']}]") for r in rows]
    lines.append(f"{len(rows) - len(failed)}/{len(rows)} claims reproduced")
    payload = {"claims": rows, "passed": len(rows) - len(failed), "failed": len(failed)}
    return payload, "\n".join(lines), bool(failed)


_DISPATCH = {
    "expand": _cmd_expand, "bound": _cmd_bound, "hf": _cmd_hf, "test": _cmd_test,
    "eliminate": _cmd_eliminate, "apolar": _cmd_apolar, "delta": _cmd_delta,
    "asymptotics": _cmd_asymptotics, "reproduce": _cmd_reproduce,
}


def _inputs(ns: argparse.Namespace) -> dict[str, Any]:
    out = {}
    for k, v in sorted(vars(ns).items()):
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult("", {"argv": list(argv)}, None, 2, str(exc), "stderr")
    except _Exit as exc:
        return CommandResult("", {"argv": list(argv)}, None, exc.status, exc.message.rstrip("\n"))
    try:
        payload, text, negative = _DISPATCH[ns.command](ns)
    except (UsageError, ValueError) as exc:
        msg = f"{parser.prog} {ns.command}: error: {exc}"
        return CommandResult(ns.command, _inputs(ns), None, 2, msg, "stderr")

    # reproduce reports regressions through its exit code; verdicts need --strict
    failing = negative and (ns.strict or ns.command == "reproduce")
    result = CommandResult(ns.command, _inputs(ns), payload, 1 if failing else 0, text)
    if ns.json:
        doc = {"command": ns.command, "output": payload}
        if not ns.no_meta:
            doc["meta"] = {"tool": "gkit", "version": __version__,
                           "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
        result.text = json.dumps(doc, indent=2, sort_keys=True)
    return result


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.text:
        print(result.text, file=sys.stderr if result.stream == "stderr" else sys.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

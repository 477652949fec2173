"""Command-line front end.

Exit status: 0 on success, 1 on a computational inconsistency, a failed
verification, or an exceeded size cap, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .divisor_engine import apply, euler_inverse, partition_up_to, primes_up_to, rho_up_to
from .exceptions import InconsistencyError, ResourceLimitError
from .oracles import primes_sieve
from .sigma_matrix import DEFAULT_CELL_CAP, build_window
from .sigma_sequence import sigma_up_to
from .verification import SUITES, verify

FORMATS = ("txt", "csv", "json")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _suites(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown suite(s) {', '.join(unknown) or '(none given)'}; choose from {', '.join(SUITES)}"
        )
    return names


def render_table(header: list[str], rows: list[list], fmt: str) -> str:
    """Serialize a table. TXT has no header; JSON is handled by callers."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    cells = [[str(v) for v in row] for row in rows]
    if not cells:
        return ""
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    return "".join(" ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n" for r in cells)


def render_json(obj) -> str:
    return json.dumps(obj) + "\n"


def _series_doc(name: str, values: list[int], fmt: str) -> str:
    if fmt == "json":
        return render_json(values)
    return render_table(["n", name], [[n, v] for n, v in enumerate(values)], fmt)


def _rho_values(n: int, via: str) -> list[int]:
    sigma = sigma_up_to(n)
    if via == "inverse-matrix":
        return apply(euler_inverse(n), sigma)
    return rho_up_to(n, sigma).tolist()


def cmd_sigma_seq(args) -> str:
    return _series_doc("sigma", sigma_up_to(args.n).tolist(), args.format)


def cmd_rho(args) -> str:
    return _series_doc("rho", _rho_values(args.n, args.via), args.format)


def cmd_partition(args) -> str:
    return _series_doc("p", list(partition_up_to(args.n).values), args.format)


def cmd_primes(args) -> str:
    primes = primes_up_to(args.n, rho_up_to(args.n, sigma_up_to(args.n)))
    if args.format == "json":
        return render_json(primes)
    return render_table(["prime"], [[p] for p in primes], args.format)


def _annotate(value: int, label: str, on_border: bool) -> str:
    return f"{value}:{label}{'*' if on_border else ''}"


def cmd_matrix(args) -> str:
    w = build_window(args.rows, args.cols, cell_cap=args.cap)
    entries = w.entries.tolist()
    labels = w.region_labels()
    if args.format == "json":
        doc = {"rows": w.rows, "cols": w.cols, "entries": entries, "regions": labels}
        if args.annotate:
            doc["border"] = w.border.tolist()
        return render_json(doc)
    if args.annotate:
        border = w.border.tolist()
        body = [
            [_annotate(v, lab, b) for v, lab, b in zip(er, lr, br)]
            for er, lr, br in zip(entries, labels, border)
        ]
    else:
        body = entries
    if args.format == "csv":
        header = ["i"] + [str(j) for j in range(w.cols + 1)]
        return render_table(header, [[i] + row for i, row in enumerate(body)], "csv")
    return render_table([], body, "txt")


def cmd_verify(args) -> tuple[str, int]:
    report = verify(args.n, args.suites)
    return json.dumps(report, indent=2) + "\n", 0 if report["pass"] else 1


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def bench(n: int) -> list[tuple[str, float]]:
    """Wall-clock seconds for the five timed tasks at bound ``n``."""
    _, t_partition = _timed(lambda: partition_up_to(n))
    sigma, t_sigma = _timed(lambda: sigma_up_to(n))
    _, t_rho = _timed(lambda: primes_up_to(n, rho_up_to(n, sigma)))
    _, t_total = _timed(lambda: primes_up_to(n, rho_up_to(n, sigma_up_to(n))))
    _, t_sieve = _timed(lambda: primes_sieve(n))
    return [
        ("partition_recurrence", t_partition),
        ("rho_given_sigma", t_rho),
        ("sigma", t_sigma),
        ("rho_including_sigma", t_total),
        ("eratosthenes_sieve", t_sieve),
    ]


def cmd_bench(args) -> str:
    if args.n < 2:
        raise _UsageError("bench needs --n >= 2")
    rows = [[task, args.n, f"{secs:.6f}"] for task, secs in bench(args.n)]
    if args.format == "json":
        return render_json([{"task": t, "n": n, "seconds": float(s)} for t, n, s in rows])
    if args.format == "txt":
        return render_table([], rows, "txt")
    return render_table(["task", "n", "seconds"], rows, "csv")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentasigma",
        description="Pentagonal-recurrence divisor counts, primes and the sigma-matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, n=True, via=False):
        p = sub.add_parser(name, help=help, description=help)
        if n:
            p.add_argument("--n", type=_nonneg, required=True, help="upper bound (inclusive)")
        p.add_argument("--format", choices=FORMATS, default="txt")
        p.add_argument("--out", metavar="FILE", help="write the document here instead of stdout")
        if via:
            p.add_argument("--via", choices=("recurrence", "inverse-matrix"), default="recurrence")
        p.set_defaults(func=func)
        return p

    add("sigma-seq", cmd_sigma_seq, "anti-diagonal sums sigma(0..n)")
    add("rho", cmd_rho, "equal-part partition counts rho(0..n)", via=True)
    add("primes", cmd_primes, "primes <= n, read off rho(n) == 2")
    add("partition", cmd_partition, "partition numbers p(0..n)")
    m = add("matrix", cmd_matrix, "export a window of the sigma-matrix", n=False)
    m.add_argument("--rows", type=_nonneg, required=True)
    m.add_argument("--cols", type=_nonneg, required=True)
    m.add_argument("--annotate", action="store_true", help="tag cells with U/L1/L2 (* = border)")
    m.add_argument("--cap", type=_nonneg, default=DEFAULT_CELL_CAP, help="maximum cell count")
    v = sub.add_parser("verify", help="check invariants against oracles (JSON report)")
    v.add_argument("--n", type=_nonneg, required=True)
    v.add_argument("--suites", type=_suites, default=list(SUITES), help=",".join(SUITES))
    v.add_argument("--out", metavar="FILE")
    v.set_defaults(func=cmd_verify)
    add("bench", cmd_bench, "time the prime paths against Euler's recurrence and a sieve")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "primes" and args.n < 2:
        parser.error("primes needs --n >= 2")
    try:
        result = args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except (InconsistencyError, ResourceLimitError) as exc:
        print(f"pentasigma: error: {exc}", file=sys.stderr)
        return 1
    doc, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return status


if __name__ == "__main__":
    sys.exit(main())

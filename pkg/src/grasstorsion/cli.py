"""
Command-line reports for real Grassmannians.

    grasstorsion --k 2 --n 4
    grasstorsion --k 2 --n 4 --format json --with-oracle
    grasstorsion --range-n 7 --with-oracle --format csv

Exit codes: 0 success, 1 usage or size-limit error, 2 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .crosscheck import compare
from .errors import ComplexityLimit, InvalidArgs
from .params import GrassmannianParams
from .poly import Polynomial, render
from .schubert import chain_complex, check_size, integral_homology
from .torsion import group_report

FORMATS = ("table", "json", "csv")
CSV_COLUMNS = ["d", "B_d", "FB_d", "TB_d", "coTB_d"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ReportRequest:
    k: int | None = None
    n: int | None = None
    format: str = "table"
    with_oracle: bool = False
    range_n: int | None = None
    dump_boundaries: str | None = None
    max_cells: int | None = None
    jobs: int = 1

    def validate(self) -> None:
        single = self.k is not None or self.n is not None
        if single and self.range_n is not None:
            raise UsageError("give either --k/--n or --range-n, not both")
        if not single and self.range_n is None:
            raise UsageError("give --k and --n, or --range-n")
        if single and (self.k is None or self.n is None):
            raise UsageError("--k and --n must be given together")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}; choose from {', '.join(FORMATS)}")
        if self.range_n is not None and self.range_n < 1:
            raise UsageError("--range-n must be at least 1")
        if self.max_cells is not None and self.max_cells < 1:
            raise UsageError("--max-cells must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if single:
            try:
                GrassmannianParams(self.k, self.n)
            except InvalidArgs as exc:
                raise UsageError(str(exc)) from None

    def pairs(self) -> list[GrassmannianParams]:
        if self.range_n is None:
            return [GrassmannianParams(self.k, self.n)]
        # k > n/2 is the same manifold as n - k
        return [
            GrassmannianParams(k, n)
            for n in range(2, self.range_n + 1)
            for k in range(1, n // 2 + 1)
        ]


def _by_degree(p: Polynomial, length: int) -> list[int]:
    return [p[d] for d in range(length)]


def build_payload(params: GrassmannianParams, with_oracle: bool, max_cells: int | None,
                  want_dump: bool = False) -> tuple[dict, str]:
    """JSON-ready report for one pair, plus the boundary dump text if requested."""
    report = group_report(params)
    size = params.dimension + 1
    payload = {
        "k": params.k,
        "n": params.n,
        "dimension": params.dimension,
        "mod2_poincare": _by_degree(report.mod2_poincare, size),
        "free_part": _by_degree(report.free_part, size),
        "torsion_homology": _by_degree(report.torsion_homology, size),
        "torsion_cohomology": _by_degree(report.torsion_cohomology, size),
        "groups": [
            {"d": row.d, "homology": row.homology, "cohomology": row.cohomology}
            for row in report.rows
        ],
    }
    dump = ""
    if with_oracle or want_dump:
        cx = chain_complex(params, max_cells)
        if want_dump:
            buf = io.StringIO()
            cx.dump(buf)
            dump = buf.getvalue()
        if with_oracle:
            payload["oracle"] = compare(report, integral_homology(params, complex_=cx)).as_dict()
    return payload, dump


def _payload_task(args):
    return build_payload(*args)


def _poly_from_list(coeffs: list[int]) -> str:
    return render(Polynomial(coeffs))


def _rows(payload: dict):
    for g in payload["groups"]:
        d = g["d"]
        yield {
            "d": d,
            "B_d": payload["mod2_poincare"][d],
            "FB_d": payload["free_part"][d],
            "TB_d": payload["torsion_homology"][d],
            "coTB_d": payload["torsion_cohomology"][d],
            "H_d": g["homology"],
            "H^d": g["cohomology"],
        }


def render_table(payload: dict) -> str:
    lines = [
        f"G_{payload['k']}(R^{payload['n']}), dimension {payload['dimension']}",
        f"mod 2 Poincare polynomial:       {_poly_from_list(payload['mod2_poincare'])}",
        f"free part:                       {_poly_from_list(payload['free_part'])}",
        f"torsion in integral homology:    {_poly_from_list(payload['torsion_homology'])}",
        f"torsion in integral cohomology:  {_poly_from_list(payload['torsion_cohomology'])}",
        "",
    ]
    header = ["d", "B_d", "FB_d", "TB_d", "coTB_d", "H_d", "H^d"]
    body = [[str(r[h]) for h in header] for r in _rows(payload)]
    oracle = payload.get("oracle")
    if oracle:
        header += ["oracle", "check"]
        for cells, det in zip(body, oracle["detail"]):
            cells += [det["oracle"], "MATCH" if det["match"] else "MISMATCH"]
    widths = [max(len(h), *(len(r[i]) for r in body)) for i, h in enumerate(header)]
    numeric = 5

    def fmt(cells):
        out = []
        for i, (c, w) in enumerate(zip(cells, widths)):
            out.append(c.rjust(w) if i < numeric else c.ljust(w))
        return "  ".join(out).rstrip()

    lines.append(fmt(header))
    lines.extend(fmt(r) for r in body)
    if oracle:
        lines.append("")
        lines.append("oracle: " + ("MATCH" if oracle["match"] else "MISMATCH"))
    return "\n".join(lines) + "\n"


def render_json(payloads: list[dict], batch: bool) -> str:
    obj = payloads if batch else payloads[0]
    return json.dumps(obj, indent=2) + "\n"


def render_csv(payloads: list[dict], batch: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow((["k", "n"] if batch else []) + CSV_COLUMNS)
    for payload in payloads:
        prefix = [payload["k"], payload["n"]] if batch else []
        for r in _rows(payload):
            writer.writerow(prefix + [r[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def run(request: ReportRequest) -> tuple[int, str, str]:
    """Execute a request. Returns (exit code, stdout text, stderr text)."""
    try:
        request.validate()
    except UsageError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"

    pairs = request.pairs()
    want_dump = request.dump_boundaries is not None
    if request.with_oracle or want_dump:
        try:
            for p in pairs:
                check_size(p, request.max_cells)
        except ComplexityLimit as exc:
            return EXIT_USAGE, "", f"error: {exc}\n"

    tasks = [(p, request.with_oracle, request.max_cells, want_dump) for p in pairs]
    if request.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=request.jobs) as pool:
            results = list(pool.map(_payload_task, tasks))
    else:
        results = [_payload_task(t) for t in tasks]
    payloads = [r[0] for r in results]

    if want_dump:
        with open(request.dump_boundaries, "w", encoding="utf-8") as fh:
            for _, dump in results:
                fh.write(dump)

    batch = request.range_n is not None
    if request.format == "json":
        out = render_json(payloads, batch)
    elif request.format == "csv":
        out = render_csv(payloads, batch)
    else:
        out = "\n".join(render_table(p) for p in payloads)

    if request.with_oracle and not all(p["oracle"]["match"] for p in payloads):
        return EXIT_MISMATCH, out, "oracle mismatch\n"
    return EXIT_OK, out, ""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="grasstorsion",
        description="Betti numbers and Z2-torsion of the integral (co)homology of G_k(R^n).",
    )
    parser.add_argument("--k", type=int, help="dimension of the subspaces")
    parser.add_argument("--n", type=int, help="dimension of the ambient space")
    parser.add_argument("--format", default="table", help="table (default), json or csv")
    parser.add_argument("--with-oracle", action="store_true",
                        help="cross-check against the Schubert-cell chain complex")
    parser.add_argument("--range-n", type=int, metavar="N",
                        help="batch mode: every 1 <= k <= n/2 for 2 <= n <= N")
    parser.add_argument("--dump-boundaries", metavar="PATH",
                        help="write boundary matrices as 'row col value' triplets")
    parser.add_argument("--max-cells", type=int,
                        help="oracle size guard on the total Schubert cell count "
                             "(default: refuse dimension above 36)")
    parser.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1),
                        help="worker processes for batch mode")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    request = ReportRequest(
        k=args.k,
        n=args.n,
        format=args.format,
        with_oracle=args.with_oracle,
        range_n=args.range_n,
        dump_boundaries=args.dump_boundaries,
        max_cells=args.max_cells,
        jobs=args.jobs,
    )
    code, out, err = run(request)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Usage::

    k3gauss pell --n 2 --c 1
    k3gauss nef-cone --d 11
    k3gauss gauss surface --d 2 --k 1
    k3gauss gauss curve --d 66 --k 2
    k3gauss positivity --lat elliptic.lat --a 1 --mode movable
    k3gauss kva --lat rank1-d4.lat --k 2
    k3gauss hminus --lat rank1-d3.lat --which 1
    k3gauss table --d 1..50 --k 0..5 --format csv

Exit codes: 0 query answered (Unknown verdicts included), 2 invalid input,
3 search cap exceeded.  ``--json`` prints a machine record instead of text.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .arith import pell_general_min
from .errors import InvalidInputError, SearchCapExceeded
from .gauss import curve_gauss_general, curve_gauss_rank1, gauss_surjective_k3
from .lattice import PicLattice, dumps_lattice, loads_lattice
from .positivity import (
    Mode,
    h_minus_2delta_ample,
    h_minus_delta_ample,
    is_positive,
    knutsen_k_very_ample,
)
from .rank1 import gauss_surjective_rank1, nef_cone

__all__ = ["main", "QueryResult", "table_rows", "render_table"]

FORMAT_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 2, 3


@dataclass
class QueryResult:
    command: list[str]
    verdict: str
    certificate: dict | None
    input_hash: str
    text: str = ""
    timing: float | None = None
    format_version: int = FORMAT_VERSION

    def to_dict(self) -> dict:
        out = {
            "format_version": self.format_version,
            "command": self.command,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "input_hash": self.input_hash,
        }
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "QueryResult":
        return cls(
            command=list(data["command"]),
            verdict=data["verdict"],
            certificate=data["certificate"],
            input_hash=data["input_hash"],
            timing=data.get("timing"),
            format_version=data["format_version"],
        )


_OUTPUT_FLAGS = ("--json", "--timing")


def _input_hash(command: list[str], lat: PicLattice | None) -> str:
    """SHA-256 of the query (output flags dropped) and the canonical lattice text."""
    query = [a for a in command if a not in _OUTPUT_FLAGS]
    payload = json.dumps({"command": query, "lattice": None if lat is None else dumps_lattice(lat)}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()


def _parse_range(text: str) -> range:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise InvalidInputError(f"range must look like A..B, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InvalidInputError(f"empty range {text}")
    return range(lo, hi + 1)


def _parse_class(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    tokens = text.replace(",", " ").split()
    if not tokens or not all(re.fullmatch(r"-?\d+", t) for t in tokens):
        raise InvalidInputError(f"class must be a list of integers, got {text!r}")
    return tuple(int(t) for t in tokens)


def _read_lattice(path: str) -> PicLattice:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read lattice file {path}: {exc}") from exc
    return loads_lattice(text)


# -- commands ---------------------------------------------------------------------


def cmd_pell(args) -> tuple[str, dict | None, str, PicLattice | None]:
    if args.n <= 0 or args.c <= 0:
        raise InvalidInputError("n and c must be positive")
    sol = pell_general_min(args.n, args.c)
    if sol is None:
        return "none", None, "none", None
    return str(sol), sol.to_dict(), str(sol), None


def cmd_nefcone(args):
    cone = nef_cone(args.d)
    text = f"d = {cone.d}: nef slope {cone.nef_slope}, dual slope {cone.dual_slope}, case {cone.case.value}"
    if cone.witness is not None:
        text += f", witness {cone.witness}"
    return cone.case.value, cone.to_dict(), text, None


def cmd_gauss(args):
    lat = None
    L = _parse_class(args.cls)
    if args.lat is not None:
        lat = _read_lattice(args.lat)
    elif args.d is None:
        raise InvalidInputError("give --d or --lat")
    if args.target == "surface":
        if lat is None:
            lat = PicLattice.rank1(args.d)
        verdict = gauss_surjective_k3(lat, L, args.k)
    elif lat is None:
        verdict = curve_gauss_rank1(args.d, args.k)
    else:
        verdict = curve_gauss_general(lat, L, args.k)
    detail = verdict.reason or ", ".join(map(str, verdict.bounds))
    if not verdict.surjective and verdict.bounds:
        detail = "; ".join([verdict.reason] + [str(b) for b in verdict.bounds])
    return verdict.label, verdict.to_dict(), f"{verdict.label} ({detail})", lat


def cmd_positivity(args):
    lat = _read_lattice(args.lat)
    v = is_positive(lat, _parse_class(args.cls), args.a, Mode(args.mode))
    return v.status.value, v.to_dict(), v.describe(), lat


def cmd_kva(args):
    lat = _read_lattice(args.lat)
    v = knutsen_k_very_ample(lat, _parse_class(args.cls), args.k)
    return v.status.value, v.to_dict(), v.describe(), lat


def cmd_hminus(args):
    lat = _read_lattice(args.lat)
    fn = h_minus_delta_ample if args.which == 1 else h_minus_2delta_ample
    v = fn(lat, _parse_class(args.cls))
    return v.status.value, v.to_dict(), f"ample: {v.describe()}", lat


# -- table ---------------------------------------------------------------------------


def table_row(d: int, ks: tuple[int, ...]) -> dict:
    cone = nef_cone(d)
    return {
        "d": d,
        "nef_slope": str(cone.nef_slope),
        "dual_slope": str(cone.dual_slope),
        "case": cone.case.value,
        "certificates": {str(k): gauss_surjective_rank1(d, k)[1].value for k in ks},
    }


def _row_star(args):
    return table_row(*args)


def table_rows(ds: range, ks: range, jobs: int = 1) -> list[dict]:
    """Rows for each d in order; independent of ``jobs``."""
    if ds.start < 1:
        raise InvalidInputError("d must start at 1 or above")
    if ks.start < 0:
        raise InvalidInputError("k must start at 0 or above")
    work = [(d, tuple(ks)) for d in ds]
    if jobs <= 1:
        return [table_row(*w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_star, work, chunksize=max(1, len(work) // (4 * jobs))))


def render_table(rows: list[dict], ks: range, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"format_version": FORMAT_VERSION, "records": rows}, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d", "nef_slope", "dual_slope", "case"] + [f"k{k}" for k in ks])
    for r in rows:
        writer.writerow([r["d"], r["nef_slope"], r["dual_slope"], r["case"]] + [r["certificates"][str(k)] for k in ks])
    return buf.getvalue()


def cmd_table(args, out) -> int:
    ds, ks = _parse_range(args.d), _parse_range(args.k)
    text = render_table(table_rows(ds, ks, args.jobs), ks, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k3gauss", description="Positivity on S^[2] and Gaussian map certificates")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="print a machine-readable record")
        sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte stability)")

    sp = sub.add_parser("pell", help="minimal positive solution of x^2 - n y^2 = c")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_pell)

    sp = sub.add_parser("nef-cone", help="nef cone of S^[2] for Picard rank one")
    sp.add_argument("--d", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_nefcone)

    sp = sub.add_parser("gauss", help="surjectivity of higher Gaussian maps")
    sp.add_argument("target", choices=["surface", "curve"])
    sp.add_argument("--d", type=int)
    sp.add_argument("--lat")
    sp.add_argument("--class", dest="cls", help="polarization coordinates (default: the lattice's ample class)")
    sp.add_argument("--k", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_gauss)

    sp = sub.add_parser("positivity", help="movable / big and nef / ample test for L - a delta")
    sp.add_argument("--lat", required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--mode", choices=[m.value for m in Mode], default="ample")
    sp.add_argument("--class", dest="cls")
    common(sp)
    sp.set_defaults(func=cmd_positivity)

    sp = sub.add_parser("kva", help="k-very ampleness by Knutsen's criterion")
    sp.add_argument("--lat", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--class", dest="cls")
    common(sp)
    sp.set_defaults(func=cmd_kva)

    sp = sub.add_parser("hminus", help="ampleness of L - delta or L - 2 delta")
    sp.add_argument("--lat", required=True)
    sp.add_argument("--which", type=int, choices=[1, 2], required=True)
    sp.add_argument("--class", dest="cls")
    common(sp)
    sp.set_defaults(func=cmd_hminus)

    sp = sub.add_parser("table", help="batch table of rank one nef cones and certificates")
    sp.add_argument("--d", required=True, help="range A..B")
    sp.add_argument("--k", default="0..0", help="range A..B")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=None)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        if args.command == "table":
            return cmd_table(args, out)
        start = time.perf_counter()
        verdict, cert, text, lat = args.func(args)
        elapsed = time.perf_counter() - start
        result = QueryResult(argv, verdict, cert, _input_hash(argv, lat), text)
        if args.timing:
            result.timing = round(elapsed, 6)
        if args.json:
            out.write(json.dumps(result.to_dict(), sort_keys=True) + "\n")
        else:
            out.write(text + (f"  [{elapsed:.3f}s]" if args.timing else "") + "\n")
        return EXIT_OK
    except SearchCapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except InvalidInputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``pkmatrix <subcommand> ...``.

Exit codes: 0 ok, 2 usage error, 3 capacity error, 4 conjecture falsified.
Global options may also be set through ``PKM_FORMAT``, ``PKM_BIT_BUDGET``,
``PKM_PRP_ROUNDS``, ``PKM_SEED`` and ``PKM_OUT``; flags win over the
environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, List, Optional

from . import carpet, core, density, primes, progressions, segments, shells

EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_FALSIFIED = 4

ENV_PREFIX = "PKM_"


@dataclass
class CliConfig:
    bit_budget: int = core.DEFAULT_BIT_BUDGET
    prp_rounds: int = primes.DEFAULT_PRP_ROUNDS
    output_format: str = "plain"
    seed: int = primes.DEFAULT_SEED
    out: Optional[str] = None

    def __post_init__(self):
        if self.bit_budget < 1 or self.prp_rounds < 1 or self.seed < 0:
            raise ValueError("bit budget and prp rounds must be positive, seed non-negative")
        if self.output_format not in ("plain", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass
class Output:
    """What a subcommand produced, renderable in each output format."""

    plain: str
    data: Any
    rows: Optional[List[dict]] = None
    json_lines: bool = False
    exit_code: int = 0
    raw: Optional[bytes] = field(default=None, repr=False)

    def render(self, fmt: str) -> bytes:
        if self.raw is not None:
            return self.raw
        if fmt == "json":
            if self.json_lines:
                text = "".join(json.dumps(r) + "\n" for r in self.data)
            else:
                text = json.dumps(self.data) + "\n"
        elif fmt == "csv":
            rows = self.rows
            if rows is None:
                items = self.data if isinstance(self.data, list) else [self.data]
                rows = [r if isinstance(r, dict) else {"value": r} for r in items]
            buf = io.StringIO()
            if rows:
                w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
                w.writeheader()
                w.writerows(rows)
            text = buf.getvalue()
        else:
            text = self.plain + "\n"
        return text.encode("utf-8")


def _join(values) -> str:
    return ", ".join(map(str, values))


# --- subcommand handlers -------------------------------------------------


def cmd_pair(a) -> Output:
    z = core.pair(a.x, a.y)
    return Output(str(z), {"x": a.x, "y": a.y, "z": z})


def cmd_unpair(a) -> Output:
    c = core.unpair(a.z)
    return Output(f"{c.x} {c.y}", {"z": a.z, "x": c.x, "y": c.y})


def cmd_row(a) -> Output:
    terms = progressions.row_terms(a.y, a.count)
    return Output(_join(terms), terms)


def cmd_col(a) -> Output:
    terms = progressions.column_terms(a.x, a.count)
    return Output(_join(terms), terms)


def _gf_output(s: progressions.RationalSeries, terms: int) -> Output:
    coeffs = s.expand(terms)
    plain = str(s)
    if terms:
        plain += "\n" + _join(coeffs)
    data = {"numerator": list(s.numerator), "denominator": list(s.denominator), "coefficients": coeffs}
    return Output(plain, data, rows=[{"k": k, "coefficient": c} for k, c in enumerate(coeffs)])


def cmd_gf_row(a) -> Output:
    return _gf_output(progressions.row_gf(a.y), a.terms)


def cmd_gf_col(a) -> Output:
    return _gf_output(progressions.column_gf(a.x), a.terms)


def cmd_shell(a) -> Output:
    s = shells.shell_set(a.n)
    plain = shells.format_shell(s, appendix_style=a.appendix_a_format)
    return Output(plain, {"n": s.n, "values": list(s.values)})


def cmd_segment(a) -> Output:
    seg = segments.segment(a.y)
    return Output(_join(seg.terms), {"y": seg.y, "terms": list(seg.terms)})


def cmd_bijection(a) -> Output:
    rows = segments.bijection_table(a.columns)
    if a.wrap:
        blocks = [segments.format_bijection(rows[i:i + a.wrap]) for i in range(0, len(rows), a.wrap)]
        plain = "\n\n".join(blocks)
    else:
        plain = segments.format_bijection(rows)
    dicts = [{"index": r.index, "shell_value": r.shell_value, "segment_value": r.segment_value}
             for r in rows]
    return Output(plain, dicts, rows=dicts)


def cmd_sg_scan(a) -> Output:
    hits = primes.scan_sg_region(a.limit, workers=a.workers)
    dicts = [h.as_dict() for h in hits]
    return Output(_join(h.p for h in hits), dicts, rows=dicts, json_lines=True)


def cmd_sg_columns(a) -> Output:
    dicts, lines = [], []
    for x in range(a.count):
        cls = primes.column_class(x)
        d = {"x": x, "class": cls.kind.value, "residue_pattern": cls.residue_pattern}
        line = f"{x}\t{cls.kind.value}\t{cls.residue_pattern}"
        if a.max_y:
            ps = [h.p for h in primes.scan_sg_column(x, a.max_y)]
            d["sophie_germain"] = ps
            line += "\t" + _join(ps)
        dicts.append(d)
        lines.append(line)
    rows = [{**d, "sophie_germain": " ".join(map(str, d["sophie_germain"]))}
            if "sophie_germain" in d else d for d in dicts]
    return Output("\n".join(lines), dicts, rows=rows)


def cmd_conjecture6(a) -> Output:
    last = a.y_max if a.y_max is not None else a.y
    reports = [segments.check_conjecture6(y) for y in range(a.y, last + 1)]
    dicts = [{"y": r.y, "witness": r.witness, "terms_scanned": r.terms_scanned} for r in reports]
    lines = []
    for r in reports:
        if r.holds:
            lines.append(f"y={r.y}: prime {r.witness} (term {r.terms_scanned})")
        else:
            lines.append(f"y={r.y}: NO PRIME in {r.terms_scanned} terms -- conjecture falsified")
    falsified = any(not r.holds for r in reports)
    return Output("\n".join(lines), dicts, rows=dicts, exit_code=EXIT_FALSIFIED if falsified else 0)


def cmd_density(a) -> Output:
    if a.kind == "row":
        rep = density.row_density(a.index, a.N)
    elif a.kind == "col":
        rep = density.column_density(a.index, a.N)
    elif a.kind == "mersenne":
        rep = density.mersenne_density(a.N)
    else:
        rep = density.sg_region_density(a.N)
    plain = (f"{rep.set_description}: N={rep.window} count={rep.count} "
             f"density={rep.density} ~ {density.format_fraction(rep.density)}")
    if rep.limit is not None:
        plain += f" limit={rep.limit}"
    d = rep.as_dict()
    return Output(plain, d, rows=[d])


def cmd_carpet(a) -> Output:
    spec = carpet.CarpetSpec(a.width, a.height, a.image, a.mode, a.mark_safe)
    return Output("", None, raw=carpet.render(spec))


# --- argument parsing ----------------------------------------------------


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def _pos(text: str) -> int:
    v = _nat(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _global_options(p: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    p.add_argument("--format", choices=("plain", "json", "csv"), default=S, help="output format")
    p.add_argument("--bit-budget", type=_pos, default=S, help="max bits for any computed value")
    p.add_argument("--prp-rounds", type=_pos, default=S, help="random rounds above 2^64")
    p.add_argument("--seed", type=_nat, default=S, help="seed for random primality bases")
    p.add_argument("--out", default=S, help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pkmatrix",
        description="Explore the matrix of natural numbers given by F(x, y) = 2^y (2x + 1) - 1.",
    )
    _global_options(parser)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        _global_options(p)
        p.set_defaults(func=func)
        return p

    p = add("pair", cmd_pair, "value at column x, row y")
    p.add_argument("x", type=_nat)
    p.add_argument("y", type=_nat)

    p = add("unpair", cmd_unpair, "coordinates (x, y) of a value")
    p.add_argument("z", type=_nat)

    p = add("row", cmd_row, "first terms of row y")
    p.add_argument("y", type=_nat)
    p.add_argument("--count", type=_nat, default=10)

    p = add("col", cmd_col, "first terms of column x")
    p.add_argument("x", type=_nat)
    p.add_argument("--count", type=_nat, default=10)

    p = add("gf-row", cmd_gf_row, "generating function of row y")
    p.add_argument("y", type=_nat)
    p.add_argument("--terms", type=_nat, default=0, help="also print this many coefficients")

    p = add("gf-col", cmd_gf_col, "generating function of column x")
    p.add_argument("x", type=_nat)
    p.add_argument("--terms", type=_nat, default=0, help="also print this many coefficients")

    p = add("shell", cmd_shell, "members of shell n in traversal order")
    p.add_argument("--n", type=_pos, required=True)
    p.add_argument("--appendix-a-format", action="store_true",
                   help="odd members, then a one-line summary of the even tail")

    p = add("segment", cmd_segment, "initial segment of row y")
    p.add_argument("y", type=_nat)

    p = add("bijection", cmd_bijection, "shell values paired with segment values")
    p.add_argument("--columns", type=_nat, default=127)
    p.add_argument("--wrap", type=_pos, default=None, help="split into blocks of this many columns")

    p = add("sg-scan", cmd_sg_scan, "Sophie Germain primes up to a limit")
    p.add_argument("--limit", type=_nat, required=True)
    p.add_argument("--workers", type=_pos, default=1)

    p = add("sg-columns", cmd_sg_columns, "mod-3 class of the first columns")
    p.add_argument("--count", type=_nat, default=12)
    p.add_argument("--max-y", type=_nat, default=0, help="also list Sophie Germain primes below this row")

    p = add("conjecture6", cmd_conjecture6, "look for a prime in the first M_y terms of row y")
    p.add_argument("y", type=_nat)
    p.add_argument("y_max", type=_nat, nargs="?", default=None, help="check every row from y to y_max")

    p = add("density", cmd_density, "finite-window density")
    p.add_argument("kind", choices=("row", "col", "mersenne", "sg"))
    p.add_argument("--N", type=_pos, required=True, help="window size")
    p.add_argument("--index", type=_nat, default=0, help="row y or column x")

    p = add("carpet", cmd_carpet, "render the matrix carpet or value grid")
    p.add_argument("--width", type=_pos, default=64)
    p.add_argument("--height", type=_pos, default=20)
    p.add_argument("--image", choices=carpet.FORMATS, default="ascii")
    p.add_argument("--mode", choices=carpet.MODES, default="carpet")
    p.add_argument("--mark-safe", action="store_true", help="give safe primes their own mark")

    return parser


def _resolve_config(args, environ) -> CliConfig:
    def pick(attr, env, conv, default):
        if hasattr(args, attr):
            return getattr(args, attr)
        if ENV_PREFIX + env in environ:
            return conv(environ[ENV_PREFIX + env])
        return default

    return CliConfig(
        bit_budget=pick("bit_budget", "BIT_BUDGET", int, core.DEFAULT_BIT_BUDGET),
        prp_rounds=pick("prp_rounds", "PRP_ROUNDS", int, primes.DEFAULT_PRP_ROUNDS),
        output_format=pick("format", "FORMAT", str, "plain"),
        seed=pick("seed", "SEED", int, primes.DEFAULT_SEED),
        out=pick("out", "OUT", str, None),
    )


def main(argv=None, stdout=None, stderr=None, environ=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    environ = os.environ if environ is None else environ
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _resolve_config(args, environ)
    except ValueError as e:
        print(f"pkmatrix: error: {e}", file=stderr)
        return EXIT_USAGE
    try:
        with core.bit_budget(cfg.bit_budget), primes.primality_settings(cfg.prp_rounds, cfg.seed):
            result = args.func(args)
    except core.CapacityError as e:
        print(f"pkmatrix: capacity error: {e}", file=stderr)
        return EXIT_CAPACITY
    except ValueError as e:
        print(f"pkmatrix: error: {e}", file=stderr)
        return EXIT_USAGE
    payload = result.render(cfg.output_format)
    if cfg.out:
        with open(cfg.out, "wb") as f:
            f.write(payload)
    else:
        stdout.write(payload)
        stdout.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 input or validation error, 2 degenerate ties in
a detection run, 3 numerical residual failure.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import math
import sys

import numpy as np

from . import catalog
from .detect import (
    comonotonicity_partition,
    entropy_scan,
    noisy_qubit_family,
    qubit_family,
    s_affine_coefficients,
    scan_partition,
    thermal_quantities,
)
from .entropy import pseudo_probabilities, redundancy_indices, shannon_entropy
from .errors import GenBasisError, ResidualError
from .io import FileFormatError, load_family, load_prebasis, parse_cmatrix, parse_cvector
from .linalg import fourier_matrix
from .renorm import conjugate_basis, generalized_basis
from .represent import expand, noise_trial_suite
from .tables import table1, table2

EXIT_OK, EXIT_INPUT, EXIT_TIES, EXIT_RESIDUAL = 0, 1, 2, 3

log = logging.getLogger("genbasis")


class Report:
    """Sections of rows rendered as aligned text, CSV or JSON."""

    def __init__(self, precision=3):
        self.precision = precision
        self.sections = []  # (title, header, rows)
        self.notes = []
        self.payload = {}

    def section(self, title, header, rows):
        self.sections.append((title, header, rows))

    def fmt(self, x):
        p = self.precision
        if isinstance(x, (complex, np.complexfloating)):
            return f"{x.real:.{p}f}{x.imag:+.{p}f}i"
        if isinstance(x, (float, np.floating)):
            if math.isnan(x):
                return "nan"
            text = f"{x:.{p}f}"
            return text[1:] if text.startswith("-") and float(text) == 0 else text
        return str(x)

    def render(self, kind) -> str:
        if kind == "json":
            return json.dumps(_jsonable(self.payload), indent=2)
        if kind == "csv":
            buf = _io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            for title, header, rows in self.sections:
                w.writerow([f"# {title}"])
                w.writerow(header)
                for r in rows:
                    w.writerow([self.fmt(x) for x in r])
            return buf.getvalue().rstrip("\n")
        out = []
        for title, header, rows in self.sections:
            cells = [list(map(str, header))] + [[self.fmt(x) for x in r] for r in rows]
            widths = [max(len(c[k]) for c in cells) for k in range(len(header))]
            out.append(title)
            for c in cells:
                out.append("  " + "  ".join(s.rjust(wd) for s, wd in zip(c, widths)))
            out.append("")
        out.extend(self.notes)
        return "\n".join(out).rstrip("\n")


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return None if math.isnan(x) else x
    if isinstance(x, np.integer):
        return int(x)
    return x


# -- argument helpers ---------------------------------------------------------

def _add_output(p):
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--precision", type=int, default=3, help="decimals in table/csv output (1-15)")


def _add_basis(p, flag="--example"):
    g = p.add_mutually_exclusive_group()
    g.add_argument(flag, dest="example", default=None, help="built-in pre-basis: I or II")
    g.add_argument("--input", help="pre-basis JSON file")
    p.add_argument("--fourier", action="store_true", help="conjugate the basis by the Fourier matrix")


def _basis_from(args, default="I"):
    pb = load_prebasis(args.input) if args.input else catalog.prebasis(args.example or default)
    gb = generalized_basis(pb)
    if getattr(args, "fourier", False):
        gb = conjugate_basis(gb, fourier_matrix(gb.d))
    return gb


def _lambda_grid(args, default=(-5.0, 5.0)):
    lo = args.lambda_min if args.lambda_min is not None else default[0]
    hi = args.lambda_max if args.lambda_max is not None else default[1]
    return np.linspace(lo, hi, args.lambda_steps)


def _parse_json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{what}: {exc.msg}") from exc


# -- commands -----------------------------------------------------------------

def cmd_basis(args, rep: Report):
    gb = _basis_from(args)
    for i, s in enumerate(gb.sigmas):
        rep.section(f"sigma({i + 1})", [f"col{k + 1}" for k in range(gb.d)], [list(row) for row in s])
    rep.notes.append(f"resolution residual: {gb.resolution_residual:.3e}")
    rep.payload = {"d": gb.d, "n": gb.n, "resolution_residual": gb.resolution_residual, "sigmas": gb.sigmas}
    return EXIT_OK


def cmd_entropy(args, rep: Report):
    gb = _basis_from(args)
    subjects = []
    if args.rho:
        rho = parse_cmatrix(_parse_json_arg(args.rho, "--rho"), "--rho")
        subjects.append(("rho", rho))
    else:
        for a in range(gb.d):
            e = np.zeros((gb.d, gb.d), dtype=complex)
            e[a, a] = 1
            subjects.append((f"|X;{a}><X;{a}|", e))
        subjects.append(("1/d", np.eye(gb.d) / gb.d))
    rows, out = [], []
    for name, rho in subjects:
        s = pseudo_probabilities(rho, gb)
        e = shannon_entropy(s)
        rows.append([name, e, e / math.log(gb.n), *s.values])
        out.append({"subject": name, "entropy": e, "pseudo_probabilities": s.values})
    rep.section("entropy (nats)", ["subject", "E_n", "E_n/log n", *[f"s({i + 1})" for i in range(gb.n)]], rows)
    r, rr = redundancy_indices(gb.n, gb.d)
    rep.notes.append(f"redundancy index: {r:.{rep.precision}f}; entropic redundancy index: {rr:.{rep.precision}f}")
    rep.payload = {"n": gb.n, "d": gb.d, "results": out, "redundancy_index": r, "entropic_redundancy_index": rr}
    return EXIT_OK


def cmd_represent(args, rep: Report):
    gb = _basis_from(args)
    v = parse_cvector(_parse_json_arg(args.vector, "--vector"), "--vector") if args.vector else catalog.example_vector()
    v = v / np.linalg.norm(v)
    ex = expand(v, gb)
    rep.section("components |V(i)>", ["i", *[f"V_{k}" for k in range(gb.d)]],
                [[i + 1, *c] for i, c in enumerate(ex.components)])
    suite = noise_trial_suite(v, gb, mu=args.mu, trials=args.trials, seed=args.seed)
    rep.section("noisy reconstruction", suite.columns(), [list(r) for r in suite.rows()])
    summ = suite.summary()
    rep.notes.append(", ".join(f"{k}={summ[k]:.{rep.precision}f}" if isinstance(summ[k], float) else f"{k}={summ[k]}"
                               for k in summ))
    rep.payload = {"components": ex.components, "columns": suite.columns(), "rows": suite.rows(), "summary": summ}
    return EXIT_OK


def cmd_detect(args, rep: Report):
    pb_name = args.example or "I"
    gb = _basis_from(args, pb_name)
    lam_range = (
        args.lambda_min if args.lambda_min is not None else -math.inf,
        args.lambda_max if args.lambda_max is not None else math.inf,
    )
    if args.family:
        fam = load_family(args.family)
        if args.lambda_min is None and args.lambda_max is None:
            lam_range = fam.lam_range
    elif args.builtin in ("qubit", "eq52"):
        fam = qubit_family()
    else:
        fam = noisy_qubit_family(args.S, args.D)
    if args.grid_fallback:
        if not all(map(math.isfinite, lam_range)):
            lam_range = (lam_range[0] if math.isfinite(lam_range[0]) else -5.0,
                         lam_range[1] if math.isfinite(lam_range[1]) else 5.0)
        a, b = s_affine_coefficients(fam, gb)
        part = scan_partition(lambda lam: a + b * lam, lam_range, points=args.lambda_steps)
    else:
        part = comonotonicity_partition(fam, gb, lam_range)
    rep.section("crossing points", ["k", "lambda"], [[k + 1, c] for k, c in enumerate(part.crossings)])
    rep.section("comonotonicity intervals", ["from", "to", "location index", "tie"],
                [[iv.lo, iv.hi, str(iv.index).replace(" tie", ""), iv.index.tie] for iv in part.intervals])
    rep.payload = {
        "crossings": list(part.crossings),
        "intervals": [{"from": iv.lo if math.isfinite(iv.lo) else str(iv.lo),
                       "to": iv.hi if math.isfinite(iv.hi) else str(iv.hi),
                       "location_index": list(iv.index.labels), "tie": iv.index.tie} for iv in part.intervals],
    }
    if args.entropy_scan or args.beta is not None:
        grid = _lambda_grid(args, default=(-0.4, 0.4))
    if args.entropy_scan:
        rows = entropy_scan(fam, [gb], grid)
        rep.section("entropy scan", ["lambda", "valid", "E_vN/log2", f"E_{gb.n}/log{gb.n}"],
                    [[r.lam, r.valid, r.e_vn_normalized, r.e_n_normalized[0]] for r in rows])
        rep.payload["entropy_scan"] = [{"lambda": r.lam, "valid": r.valid, "e_vn": r.e_vn, "e_n": r.e_n[0]}
                                       for r in rows]
    if args.beta is not None:
        th = [thermal_quantities(fam, gb, args.beta, lam) for lam in grid]
        rep.section(f"thermal (beta={args.beta})", ["lambda", "Z", "<e>", *[f"s_E({i + 1})" for i in range(gb.n)]],
                    [[lam, t.z, t.mean_energy, *t.s] for lam, t in zip(grid, th)])
        rep.payload["thermal"] = [{"lambda": lam, "Z": t.z, "mean_energy": t.mean_energy, "s": t.s}
                                  for lam, t in zip(grid, th)]
    if part.degenerate:
        rep.notes.append("degenerate: some interval ties at its probe point")
        return EXIT_TIES
    return EXIT_OK


def cmd_reproduce(args, rep: Report):
    if args.table == 1:
        suite = table1(trials=args.trials, mu=args.mu, seed=args.seed)
        rep.section(f"Table 1 (mu={args.mu}, seed={args.seed})", suite.columns(), [list(r) for r in suite.rows()])
        s = suite.summary()
        trend = s["mean_eps3"] < s["mean_eps_orth"] and s["mean_eps4"] < s["mean_eps_orth"]
        rep.notes.append(
            f"means over {s['trials']} trials: eps3={s['mean_eps3']:.{rep.precision}f} "
            f"eps4={s['mean_eps4']:.{rep.precision}f} eps_orth={s['mean_eps_orth']:.{rep.precision}f}; "
            f"win rates {s['win_rate3']:.{rep.precision}f}/{s['win_rate4']:.{rep.precision}f}; "
            f"trend {'holds' if trend else 'fails'}"
        )
        rep.payload = {"columns": suite.columns(), "rows": suite.rows(), "summary": s, "trend": trend}
        return EXIT_OK
    rows, noise = table2(seed=args.seed, mu=args.mu)
    header = ["lambda", "E_vN/log2", "E_3/log3", "E_4/log4", "dE_vN/E_vN", "dE_3/E_3", "dE_4/E_4"]
    body = [[r.lam, r.e_vn_normalized, *r.e_n_normalized, r.rel_vn, *r.rel_n] for r in rows]
    rep.section(f"Table 2 (noise N1={noise[0]:+.4f}, N2={noise[1]:+.4f})", header, body)
    rep.payload = {"noise": noise, "columns": header, "rows": body}
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; status 2 is reserved for ties
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


BUILTIN_FAMILIES = ("qubit", "noisy-qubit", "eq52", "eq52-noisy")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="genbasis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", help="renormalize a pre-basis and print sigma(i)")
    _add_basis(b)
    _add_output(b)
    b.set_defaults(func=cmd_basis)

    e = sub.add_parser("entropy", help="pseudo-probabilities and Shannon entropies")
    _add_basis(e)
    e.add_argument("--rho", help="density matrix as JSON [[[re,im],...],...]")
    _add_output(e)
    e.set_defaults(func=cmd_entropy)

    r = sub.add_parser("represent", help="expand a vector and run noisy reconstructions")
    _add_basis(r)
    r.add_argument("--vector", help="vector as JSON [[re,im],...]; default (1+2i, 3-i)/sqrt15")
    r.add_argument("--mu", type=float, default=0.5)
    r.add_argument("--trials", type=int, default=5)
    r.add_argument("--seed", type=int, default=0)
    _add_output(r)
    r.set_defaults(func=cmd_represent)

    d = sub.add_parser("detect", help="comonotonicity partition of a Hamiltonian family")
    _add_basis(d, "--basis")
    src = d.add_mutually_exclusive_group()
    src.add_argument("--builtin", choices=BUILTIN_FAMILIES, default="qubit",
                     help="qubit: 1 + lambda C; noisy-qubit adds diag(S+D, S-D) (eq52, eq52-noisy are aliases)")
    src.add_argument("--family", help="family JSON file with H0, H1")
    d.add_argument("--D", type=float, default=0.0)
    d.add_argument("--S", type=float, default=0.0)
    d.add_argument("--lambda-min", type=float)
    d.add_argument("--lambda-max", type=float)
    d.add_argument("--lambda-steps", type=int, default=2001)
    d.add_argument("--grid-fallback", action="store_true", help="grid scan + bisection instead of exact crossings")
    d.add_argument("--entropy-scan", action="store_true")
    d.add_argument("--beta", type=float)
    _add_output(d)
    d.set_defaults(func=cmd_detect)

    t = sub.add_parser("reproduce", help="regenerate Table 1 or Table 2")
    t.add_argument("--table", type=int, choices=(1, 2), required=True)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--mu", type=float, default=0.5)
    t.add_argument("--trials", type=int, default=5)
    _add_output(t)
    t.set_defaults(func=cmd_reproduce)
    return p


def _check_config(args):
    if not 1 <= args.precision <= 15:
        raise GenBasisError("--precision must be between 1 and 15")
    if getattr(args, "mu", 1.0) <= 0:
        raise GenBasisError("--mu must be positive")
    if getattr(args, "trials", 1) < 1:
        raise GenBasisError("--trials must be at least 1")
    if getattr(args, "beta", None) is not None and args.beta <= 0:
        raise GenBasisError("--beta must be positive")
    if getattr(args, "lambda_steps", 2) < 2:
        raise GenBasisError("--lambda-steps must be at least 2")


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    rep = Report(args.precision)
    try:
        _check_config(args)
        code = args.func(args, rep)
    except ResidualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESIDUAL
    except (GenBasisError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

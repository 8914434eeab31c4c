"""Command-line interface: ``liedecomp {decompose,table,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb
from typing import Callable

from . import decomp
from .characters import cyclic_branching_char, cyclic_branching_kw
from .golden import GOLDEN_KMAX, KNOWN_ERRATA, golden_coker, golden_image
from .partitions import count_standard_tableaux, enumerate_partitions
from .symfunc import (
    Decomposition,
    NegativeMultiplicityError,
    NotACharacterError,
    character_decompose,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Refused(Exception):
    """Request exceeds the desk-scale limits."""


# ---------------------------------------------------------------------------
# report rendering


def summands(d: Decomposition, n: int) -> list[dict]:
    return [{"label": str(label), "mult": m, "dim": label.dimension(n)} for label, m in d.items()]


def table_notation(d: Decomposition) -> str:
    """Non-polynomial ``{mu;(1)}`` labels printed as bare ``(mu)``."""
    return str(Decomposition({label.pos: m for label, m in d.items()}))


class Report:
    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params
        self.summands: list[dict] = []
        self.checks: list[dict] = []
        self.lines: list[str] = []
        self.extra: dict = {}

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        entry = {"name": name, "pass": bool(ok)}
        if detail:
            entry["detail"] = detail
        self.checks.append(entry)
        return ok

    @property
    def total_dim(self) -> int:
        return sum(s["mult"] * s["dim"] for s in self.summands)

    @property
    def failed(self) -> bool:
        return any(not c["pass"] for c in self.checks)

    def as_json(self) -> str:
        payload = {
            "command": self.command,
            "params": self.params,
            "summands": self.summands,
            "total_dim": self.total_dim,
            "checks": self.checks,
        }
        payload.update(self.extra)
        return json.dumps(payload, indent=2, ensure_ascii=False)

    def as_csv(self) -> str:
        buf = io.StringIO()
        keys = ["label", "mult", "dim"]
        extra = sorted({k for s in self.summands for k in s} - set(keys))
        writer = csv.DictWriter(buf, fieldnames=extra + keys, lineterminator="\n")
        writer.writeheader()
        for s in self.summands:
            writer.writerow(s)
        return buf.getvalue()

    def as_text(self) -> str:
        out = list(self.lines)
        for c in self.checks:
            verdict = "PASS" if c["pass"] else "FAIL"
            detail = f": {c['detail']}" if c.get("detail") else ""
            out.append(f"{verdict} {c['name']}{detail}")
        return "\n".join(out) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.as_json() + "\n"
        if fmt == "csv":
            return self.as_csv()
        return self.as_text()


# ---------------------------------------------------------------------------
# decompose

TARGETS: dict[str, Callable[[int, int], Decomposition]] = {
    "coker": decomp.johnson_cokernel,
    "der": decomp.der_decomposition,
    "image": decomp.johnson_image_decomposition,
    "chen-der": decomp.chen_der_decomposition,
    "chen-image": decomp.chen_johnson_image,
    "n-der": lambda k, n: sum(decomp.n_der_decomposition(k, n), Decomposition(n=n)),
    "n-image": decomp.n_johnson_image,
    "freelie": lambda k, n: decomp.free_lie_decomposition(k, n),
    "hstar": lambda k, n: decomp.hstar_tensor_lie_decomposition(k, n),
}


def _expected_dim(target: str, k: int, n: int) -> tuple[str, int] | None:
    if target == "der":
        return "total = n * rank L(k+1)", n * decomp.witt_rank(n, k + 1)
    if target == "coker":
        return "total = necklace count", decomp.necklace_count(n, k) if k > 1 else 0
    if target == "image":
        return ("total = n * rank L(k+1) - cokernel",
                n * decomp.witt_rank(n, k + 1) - (decomp.necklace_count(n, k) if k > 1 else 0))
    if target == "chen-der":
        return "total = n * rank L^M(k+1)", n * decomp.chen_rank(n, k + 1)
    if target == "chen-image":
        coker = comb(n + k - 1, k) if k > 1 else 0
        return "total = n * rank L^M(k+1) - rank S^k H", n * decomp.chen_rank(n, k + 1) - coker
    if target == "n-der":
        return "total = n * rank L^N(k+1)", n * decomp.n_rank(n, k + 1)
    if target == "freelie":
        return "total = rank L(k)", decomp.witt_rank(n, k)
    return None


def cmd_decompose(args) -> Report:
    report = Report("decompose", {"target": args.target, "n": args.n, "k": args.k})
    d = TARGETS[args.target](args.k, args.n)
    report.summands = summands(d, args.n)
    report.lines.append(str(d))
    for s in report.summands:
        report.lines.append(f"  {s['mult']:>4} x {s['label']:<24} dim {s['dim']}")
    report.lines.append(f"total dimension: {report.total_dim}")
    expected = _expected_dim(args.target, args.k, args.n)
    if expected:
        name, value = expected
        report.check(name, report.total_dim == value, f"expected {value}, got {report.total_dim}")
    return report


# ---------------------------------------------------------------------------
# table


def _diff(golden: Decomposition, computed: Decomposition) -> str:
    labels = sorted(set(golden) | set(computed), key=lambda l: l.sort_key())
    parts = [f"{l.pretty()} tabulated {golden[l]}, computed {computed[l]}"
             for l in labels if golden[l] != computed[l]]
    return "; ".join(parts)


def cmd_table(args) -> Report:
    report = Report("table", {"which": args.which, "kmax": args.kmax, "check": args.check})
    rows = []
    for k in range(1, args.kmax + 1):
        n = k + 2
        if args.which == "coker":
            d = decomp.johnson_cokernel(k, n)
            cells = [str(d)]
            parts = {"coker": d}
        else:
            im = decomp.johnson_image_decomposition(k, n)
            poly, nonpoly = im.polynomial_part(), im.non_polynomial_part()
            cells = [str(poly), table_notation(nonpoly)]
            parts = {"polynomial": poly, "non-polynomial": nonpoly}
        report.lines.append(f"k={k} | " + " | ".join(cells))
        row = {"k": k, "n": n, "cells": cells}
        rows.append(row)
        for part, dd in parts.items():
            for s in summands(dd, n):
                report.summands.append({"k": k, "part": part, **s})
        if not args.check:
            continue
        if k > GOLDEN_KMAX:
            report.lines.append(f"    k={k}: no reference row")
            continue
        if args.which == "coker":
            detail = _diff(golden_coker(k), parts["coker"])
        else:
            gp, gn = golden_image(k)
            detail = "; ".join(x for x in (_diff(gp, parts["polynomial"]),
                                           _diff(gn, parts["non-polynomial"])) if x)
        if detail and (args.which, k) in KNOWN_ERRATA:
            detail += f" [known erratum: {KNOWN_ERRATA[(args.which, k)]}]"
        report.check(f"{args.which} row k={k}", not detail, detail)
    report.extra["rows"] = rows
    if args.which == "image":
        report.lines.insert(0, "columns: polynomial part | non-polynomial part, (mu) meaning {mu;(1)}")
    return report


# ---------------------------------------------------------------------------
# verify

COST_LIMIT = 200_000


def _refuse_if_costly(cost: int, what: str) -> None:
    if cost > COST_LIMIT:
        raise Refused(f"refusing {what}: estimated cost {cost:,} tensor coordinates "
                      f"exceeds the desk-scale limit {COST_LIMIT:,}")


def verify_ranks(args, report: Report) -> None:
    from .freelie.chen import metabelian_rank_by_embedding, quotient_basis_metabelian
    from .freelie.nquot import quotient_basis_n
    from .freelie.words import lyndon_basis

    _refuse_if_costly(args.nmax ** args.kmax, "ranks")
    for n in range(1, args.nmax + 1):
        for k in range(1, args.kmax + 1):
            w = decomp.witt_rank(n, k)
            got = len(lyndon_basis(n, k))
            report.check(f"witt n={n} k={k}", got == w, f"formula {w}, basis {got}")
            c = decomp.chen_rank(n, k)
            got = quotient_basis_metabelian(n, k).rank
            emb = metabelian_rank_by_embedding(n, k) if k >= 2 else n
            report.check(f"chen n={n} k={k}", got == c == emb,
                         f"formula {c}, basis {got}, quotient {emb}")
            r = decomp.n_rank(n, k)
            got = quotient_basis_n(n, k).rank
            report.check(f"N n={n} k={k}", got == r, f"formula {r}, quotient {got}")


def verify_oracle(args, report: Report) -> None:
    from .freelie.weights import der_weight, formal_character
    from .freelie.words import lyndon_basis

    n, k = args.n, args.k
    _refuse_if_costly(n ** (k + 2), "oracle")
    lie = character_decompose(formal_character(lyndon_basis(n, k), n), n)
    expected = decomp.free_lie_decomposition(k, n)
    report.check(f"L({k}) at n={n}", lie == expected, f"basis {lie}, formula {expected}")
    if n >= k + 2:
        basis = [(i, b) for i in range(1, n + 1) for b in lyndon_basis(n, k + 1)]
        got = character_decompose(formal_character(basis, n, der_weight), n)
        expected = decomp.der_decomposition(k, n)
        report.check(f"H*⊗L({k + 1}) at n={n}", got == expected, f"basis {got}, formula {expected}")


def verify_traces(args, report: Report) -> None:
    from .freelie.maps import contraction_matrix, trace_matrices

    n, k = args.n, args.k
    _refuse_if_costly(n ** (k + 2), "traces")
    tm = trace_matrices(n, k)
    report.check(f"rank Tr_[{k}] n={n}", tm.sym.rank() == comb(n + k - 1, k),
                 f"rank {tm.sym.rank()}, expected {comb(n + k - 1, k)}")
    if k <= n:
        report.check(f"rank Tr_[1^{k}] n={n}", tm.alt.rank() == comb(n, k),
                     f"rank {tm.alt.rank()}, expected {comb(n, k)}")
    report.check(f"rank Tr^M_[{k}] n={n}", tm.chen_sym.rank() == comb(n + k - 1, k),
                 f"rank {tm.chen_sym.rank()}, expected {comb(n + k - 1, k)}")
    phi = contraction_matrix(n, k)
    rank = phi.rank()
    report.check(f"contraction onto H^⊗{k}", rank == n ** k, f"rank {rank}, expected {n ** k}")
    if n >= k + 2:
        w = decomp.der_decomposition(k, n).non_polynomial_part().dimension()
        report.check(f"dim ker contraction = dim W (k={k}, n={n})", phi.ncols - rank == w,
                     f"kernel {phi.ncols - rank}, W {w}")
    if args.dump_matrix:
        phi.dump(args.dump_matrix)
        for name, m in zip(("sym", "alt", "chen_sym"), tm):
            m.dump(f"{args.dump_matrix}.{name}")
        report.lines.append(f"matrices written to {args.dump_matrix}[.sym|.alt|.chen_sym]")


def verify_abelianization(args, report: Report) -> None:
    from .freelie.chen import chen_der_abelianization_rank

    n = args.n
    if n < 4:
        raise decomp.PreconditionError(f"requires n ≥ 4, got n={n}")
    cost = sum(n * decomp.chen_rank(n, i + 1) * n * decomp.chen_rank(n, args.kmax - i + 1)
               for i in range(1, args.kmax // 2 + 1))
    _refuse_if_costly(cost, "abelianization")
    for k in range(2, args.kmax + 1):
        got = chen_der_abelianization_rank(n, k)
        expected = decomp.chen_abelianization_rank(k, n)
        report.lines.append(f"k={k}: rank {got}")
        report.check(f"abelianization n={n} k={k}", got == expected, f"rank {got}, expected {expected}")


def verify_maximal(args, report: Report) -> None:
    from .freelie.weights import maximal_vector_check, v_alt, v_sym

    for k in range(1, args.kmax + 1):
        n = args.n if args.n else k + 2
        _refuse_if_costly(n ** (k + 2), "maximal")
        for name, vec, weight in (("v_(k)", v_sym(k, n), (k,) + (0,) * (n - 1)),
                                  ("v_(1^k)", v_alt(k, n), (1,) * k + (0,) * (n - k))):
            res = maximal_vector_check(vec, n)
            ok = res.is_weight_vector and res.is_maximal and res.weight == weight
            report.check(f"{name} k={k} n={n}", ok, f"weight {res.weight}, maximal {res.is_maximal}")


def verify_branching(args, report: Report) -> None:
    cost = sum(count_standard_tableaux(lam) for m in range(1, args.mmax + 1)
               for lam in enumerate_partitions(m))
    _refuse_if_costly(cost, "branching")
    for m in range(1, args.mmax + 1):
        bad = []
        for lam in enumerate_partitions(m):
            kw = [cyclic_branching_kw(lam, j) for j in range(m)]
            ch = [cyclic_branching_char(lam, j) for j in range(m)]
            if kw != ch or sum(kw) != count_standard_tableaux(lam):
                bad.append(f"{lam.pretty()}: tableaux {kw}, characters {ch}")
        report.check(f"branching m={m}", not bad, "; ".join(bad))


SUITES = {
    "ranks": verify_ranks,
    "oracle": verify_oracle,
    "traces": verify_traces,
    "abelianization": verify_abelianization,
    "maximal": verify_maximal,
    "branching": verify_branching,
}


def cmd_verify(args) -> Report:
    params = {key: getattr(args, key) for key in ("suite", "n", "k", "nmax", "kmax", "mmax")}
    report = Report("verify", params)
    SUITES[args.suite](args, report)
    report.lines.append(f"{args.suite}: {'FAIL' if report.failed else 'PASS'}")
    return report


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liedecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("decompose", help="decompose one module")
    p.add_argument("target", choices=sorted(TARGETS))
    p.add_argument("-n", type=int, required=True, help="rank of H")
    p.add_argument("-k", type=int, required=True, help="degree")
    add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("table", help="cokernel or image table for n = k+2")
    p.add_argument("which", choices=["coker", "image"])
    p.add_argument("--kmax", type=int, default=GOLDEN_KMAX)
    p.add_argument("--check", action="store_true", help="compare with the reference rows")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=8)
    p.add_argument("--dump-matrix", metavar="PATH", default=None)
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


_SUITE_DEFAULT_N = {"oracle": 5, "traces": 5, "abelianization": 4}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.n is None:
        args.n = _SUITE_DEFAULT_N.get(args.suite)
    try:
        report = args.func(args)
    except (NotACharacterError, NegativeMultiplicityError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (decomp.PreconditionError, Refused, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render(args.format))
    return EXIT_FAIL if report.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

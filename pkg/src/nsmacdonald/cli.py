"""Command-line front end.

Three subcommands:

  compute --mu 0,1 [--rho 2,1] [--method hhl|matrix|both] [--convention f|E]
          [--output text|json|latex]
  expand  --mu 0,1 [--method ...] [--output ...]     monomial table
  verify  [CHECK | --check CHECK] [--mu ...] [--i K] [--n N] [--seed S] ...

Verification checks: eigen, ybe, exchange, cyclic, frozen, bijection,
hecke.  Without --mu a check runs over the default composition family
(every mu with n <= 3 and parts <= 3, plus n = 4 with parts <= 2).

Exit codes: 0 all good, 1 a verification or route comparison failed,
2 usage error.  Computed polynomials go to stdout; verification reports
go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from typing import Sequence

from .compositions import Composition, compositions_with, default_family
from .fillings import (
    bijection_M,
    bijection_M_inverse,
    enumerate_fillings,
    f_hhl,
    weight_match_check,
)
from .hecke import verify_eigen, verify_hecke_relations
from .lattice import exchange_check, ybe_check, ybe_check_symbolic
from .matrixprod import (
    cyclic_check,
    enumerate_configs,
    f_matrix_product,
    frozen_coefficient,
    verify_exchange_basement,
)
from .qt import QTRational
from .reports import CheckReport
from .xpoly import XPolynomial, reverse_alphabet

CHECKS = ("bijection", "cyclic", "eigen", "exchange", "frozen", "hecke", "ybe")


class UsageError(Exception):
    pass


@lru_cache(maxsize=None)
def _f_cached(parts: tuple[int, ...], rho: tuple[int, ...] | None, method: str) -> XPolynomial:
    mu = Composition(parts)
    if method == "hhl":
        if rho is not None:
            raise UsageError("--rho requires --method matrix (or both with rho=id)")
        return f_hhl(mu)
    return f_matrix_product(mu, rho)


def _parse_mu(text: str) -> Composition:
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_rho(text: str, n: int) -> tuple[int, ...]:
    try:
        rho = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed permutation string {text!r}") from exc
    if sorted(rho) != list(range(1, n + 1)):
        raise UsageError(f"{rho} is not a permutation of 1..{n}")
    return rho


def _compute(args) -> int:
    if not args.mu:
        raise UsageError("compute requires --mu")
    mu = _parse_mu(args.mu)
    rho = _parse_rho(args.rho, mu.n) if args.rho else None
    if args.convention == "E":
        # E_mu(x_1..x_n) = f_{reverse(mu)}(x_n..x_1): reverse the input
        # composition, compute, then reverse the output alphabet
        mu = mu.reverse()

    def finish(poly: XPolynomial) -> XPolynomial:
        return reverse_alphabet(poly) if args.convention == "E" else poly

    if args.method == "both":
        via_hhl = finish(_f_cached(mu.parts, None, "hhl") if rho is None else f_hhl(mu))
        via_matrix = finish(_f_cached(mu.parts, rho, "matrix"))
        if rho is not None:
            print("--rho ignored for the hhl route; comparing rho=id", file=sys.stderr)
        _emit(via_matrix, args, mu)
        if via_hhl == via_matrix:
            print("routes agree")
            return 0
        print("ROUTE MISMATCH between hhl and matrix evaluations", file=sys.stderr)
        return 1
    poly = finish(_f_cached(mu.parts, rho, args.method))
    _emit(poly, args, mu)
    return 0


def _emit(poly: XPolynomial, args, mu: Composition) -> None:
    if args.output == "json":
        print(
            json.dumps(
                {"mu": list(mu.parts), "method": args.method, "poly": poly.to_json()}
            )
        )
    elif args.output == "latex":
        print(poly.to_latex())
    else:
        print(poly)


def _expand(args) -> int:
    if not args.mu:
        raise UsageError("expand requires --mu")
    mu = _parse_mu(args.mu)
    method = "hhl" if args.method == "both" else args.method
    poly = _f_cached(mu.parts, None, method)
    if args.output == "json":
        print(
            json.dumps(
                {"mu": list(mu.parts), "method": method, "poly": poly.to_json()}
            )
        )
    elif args.output == "latex":
        print(poly.to_latex())
    else:
        for exps, coeff in poly.sorted_terms():
            print(f"x^{list(exps)}  {coeff}")
    return 0


def _suite_family() -> list[Composition]:
    # the default verification family: n <= 3 with parts <= 3 plus n = 4
    # with parts <= 2 (covers every statistic branch)
    return default_family()


def _run_check(name: str, args) -> CheckReport:
    mu = _parse_mu(args.mu) if args.mu else None
    total = CheckReport(name)
    if name == "eigen":
        targets = [mu] if mu else default_family()
        for m in targets:
            total.merge(verify_eigen(_f_cached(m.parts, None, "hhl"), m))
    elif name == "ybe":
        sizes = [args.n] if args.n else [1, 2]
        for n in sizes:
            total.merge(ybe_check(n, occupation_cap=args.cap, seed=args.seed))
        total.merge(ybe_check_symbolic(1, args.cap))
    elif name == "exchange":
        n = args.n or 2
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                total.merge(exchange_check(i, j, n, N=1, cap=1))
    elif name == "cyclic":
        targets = [mu] if mu else _suite_family()
        for m in targets:
            rows = [args.i] if args.i else range(1, m.n + 1)
            for i in rows:
                total.merge(cyclic_check(m, i))
    elif name == "frozen":
        targets = [mu] if mu else _suite_family()
        for m in targets:
            from_config, from_omega = frozen_coefficient(m)
            total.count()
            if from_config != from_omega:
                total.fail(f"frozen coefficient mismatch for mu={m}")
    elif name == "bijection":
        targets = [mu] if mu else _suite_family()
        for m in targets:
            configs = list(enumerate_configs(m))
            fillings = list(enumerate_fillings(m))
            total.count()
            if len(configs) != len(fillings):
                total.fail(f"|Xi({m})| = {len(configs)} != |S({m})| = {len(fillings)}")
            for xi in configs:
                total.count()
                if bijection_M_inverse(bijection_M(xi, m)) != xi:
                    total.fail(f"bijection round trip fails on {xi.columns}")
            total.merge(weight_match_check(m))
    elif name == "hecke":
        sizes = [args.n] if args.n else [2, 3]
        for n in sizes:
            total.merge(verify_hecke_relations(n, samples=args.samples, seed=args.seed))
        import itertools

        for n in sizes:
            mus = [mu] if mu else list(compositions_with(n, 2))
            for m in mus:
                if m.n != n:
                    continue
                for rho in itertools.permutations(range(1, n + 1)):
                    for i in range(1, n):
                        if rho[i - 1] < rho[i]:
                            total.merge(verify_exchange_basement(m, i, list(rho)))
    else:
        raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    return total


def _verify(args) -> int:
    name = args.check_pos or args.check
    if not name:
        raise UsageError("verify requires a check name (positional or --check)")
    report = _run_check(name, args)
    print(report.render(), file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsmacdonald",
        description="Exact nonsymmetric Macdonald polynomials, three ways.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute f_mu (or E_mu, or f^rho_mu)")
    compute.add_argument("--mu", help="comma-separated composition, e.g. 0,4,4,1,5")
    compute.add_argument("--rho", help="basement permutation, e.g. 3,1,2")
    compute.add_argument("--method", choices=("hhl", "matrix", "both"), default="both")
    compute.add_argument("--convention", choices=("f", "E"), default="f")
    compute.add_argument("--output", choices=("text", "json", "latex"), default="text")
    compute.set_defaults(func=_compute)

    expand = sub.add_parser("expand", help="print the monomial expansion of f_mu")
    expand.add_argument("--mu")
    expand.add_argument("--method", choices=("hhl", "matrix", "both"), default="hhl")
    expand.add_argument("--output", choices=("text", "json", "latex"), default="text")
    expand.set_defaults(func=_expand)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("check_pos", nargs="?", choices=CHECKS, metavar="check")
    verify.add_argument("--check", choices=CHECKS)
    verify.add_argument("--mu")
    verify.add_argument("--i", type=int, help="restrict cyclic check to one colour")
    verify.add_argument("--n", type=int, help="alphabet size for ybe/exchange/hecke")
    verify.add_argument("--cap", type=int, default=2, help="occupation cap for ybe")
    verify.add_argument("--samples", type=int, default=5)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(func=_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: load definition files, run checks, print reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 bad input
(parse errors, missing files, wrong file kinds, shape mismatches).
"""

from __future__ import annotations

import argparse
import sys

from .category import Morphism
from .filtration import (NotSubcoalgebra, Subobject, b_adic_filtration,
                         check_magnum_preconditions, coradical)
from .hopf import (HopfAlgebra, build_cosep_section, solve_total_integral,
                   verify_antipode, verify_bialgebra, verify_cosep_section)
from .products import (MatchedPair, NotInvertible, PreconditionFailed,
                       TranscriptionMismatch, bosonization_checks,
                       build_cross_product, build_double_cross,
                       check_matched_pair, cross_product_report,
                       derive_actions_general, make_factorization)
from .report import CheckResult, Report, bool_check, make_report
from .textio import (LoadedAlgebra, ParseError, inclusion_by_names,
                     parse_algebra_file, parse_morphism_file, tensor_names)
from .weakproj import (SplitFailure, build_context, run_bd_suite,
                       search_weak_projection, structure_report,
                       verify_weak_projection)


class InputError(ValueError):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")


def load_algebra(path: str, kinds=("hopf", "bialgebra")) -> LoadedAlgebra:
    loaded = parse_algebra_file(_read(path))
    if loaded.kind not in kinds:
        raise InputError(f"{path}: expected a {'/'.join(kinds)} file, got {loaded.kind}")
    return loaded


def load_hopf(path: str) -> LoadedAlgebra:
    return load_algebra(path, kinds=("hopf",))


def load_morphism(path: str, dom, cod) -> Morphism:
    return parse_morphism_file(_read(path), dom, cod)


def _require_same_backend(*loaded: LoadedAlgebra) -> None:
    first = loaded[0].backend
    for other in loaded[1:]:
        if other.backend != first:
            raise InputError("all files in one command must use the same backend")


def _weakproj_args(args) -> tuple[LoadedAlgebra, LoadedAlgebra, Morphism, Morphism | None]:
    a = load_algebra(args.a)
    b = load_hopf(args.b)
    _require_same_backend(a, b)
    files = [f for f in (args.sigma, args.pi) if f is not None]
    needs_pi = args.mode != "search"
    if needs_pi:
        if len(files) == 2:
            sigma = load_morphism(files[0], b, a)
            pi = load_morphism(files[1], a, b)
        elif len(files) == 1:
            sigma = inclusion_by_names(b, a)
            pi = load_morphism(files[0], a, b)
        else:
            raise InputError("this weakproj mode needs a pi morphism file")
        return a, b, sigma, pi
    if len(files) >= 2:
        raise InputError("weakproj search takes at most a sigma file")
    sigma = load_morphism(files[0], b, a) if files else inclusion_by_names(b, a)
    return a, b, sigma, None


def _lincomb(column: dict, names) -> str:
    terms = [f"{v}*{names[i]}" for i, v in sorted(column.items())]
    return "+".join(terms) if terms else "0"


def cmd_check(args) -> list[CheckResult]:
    loaded = load_algebra(args.file, kinds=(args.kind,))
    checks = verify_bialgebra(loaded.algebra)
    if args.kind == "hopf":
        checks += verify_antipode(loaded.algebra)
    return checks


def cmd_integral(args) -> list[CheckResult]:
    loaded = load_hopf(args.file)
    integral = solve_total_integral(loaded.algebra)
    if integral is None:
        return [CheckResult("total_integral", "fail", witness="no_solution")]
    lam = integral.lam.mat
    value = _lincomb({j: lam.entry(0, j) for j in range(lam.cols) if lam.entry(0, j)},
                     loaded.basis)
    return [CheckResult("total_integral", "pass", value=value)]


def cmd_cosep_section(args) -> list[CheckResult]:
    loaded = load_hopf(args.file)
    integral = solve_total_integral(loaded.algebra)
    if integral is None:
        return [CheckResult("total_integral", "fail", witness="no_solution")]
    theta = build_cosep_section(loaded.algebra, integral)
    return ([CheckResult("total_integral", "pass")]
            + verify_cosep_section(loaded.algebra, theta))


def cmd_weakproj(args) -> list[CheckResult]:
    a, b, sigma, pi = _weakproj_args(args)
    alg_a, alg_b = a.algebra, b.algebra
    if args.mode == "check":
        return verify_weak_projection(alg_a, alg_b, sigma, pi)
    if args.mode == "bd-suite":
        return run_bd_suite(alg_a, alg_b, sigma, pi)
    if args.mode == "diagram":
        try:
            ctx = build_context(alg_a, alg_b, sigma, pi)
        except SplitFailure as exc:
            return [CheckResult("diagram_split", "fail", witness=str(exc).replace(" ", "_"))]
        checks = [CheckResult("diagram_split", "pass", value=f"dim_r={ctx.r_dim}")]
        return checks + structure_report(ctx)
    result = search_weak_projection(alg_a, alg_b, sigma)
    checks = list(result.checks)
    if result.pi is not None:
        rows = ";".join(_lincomb(result.pi.mat.column(j), b.basis) for j in range(a.dim))
        checks.append(CheckResult("candidate_pi", "pass", value=rows))
    return checks


def cmd_build(args) -> list[CheckResult]:
    if args.what == "cross":
        a, b, sigma, pi = _load_context_files(args.a, args.b, args.sigma, args.pi)
        try:
            ctx = build_context(a.algebra, b.algebra, sigma, pi)
            data = build_cross_product(ctx)
        except (SplitFailure, TranscriptionMismatch) as exc:
            return [CheckResult("cross_product_built", "fail",
                                witness=str(exc).replace(" ", "_"))]
        return cross_product_report(data)
    if args.what == "doublecross":
        fc, checks = _factorization_from_files(args)
        if fc is None:
            return checks
        mp, derive_checks = derive_actions_general(fc)
        product = build_double_cross(mp)
        checks = derive_checks
        for c in verify_bialgebra(product):
            checks.append(CheckResult("doublecross_" + c.name, c.status, c.witness))
        return checks
    # smash: the cocommutative route through a weak projection context
    a, b, sigma, pi = _load_context_files(args.a, args.b, args.sigma, args.pi)
    try:
        ctx = build_context(a.algebra, b.algebra, sigma, pi)
        return bosonization_checks(ctx)
    except (SplitFailure, PreconditionFailed) as exc:
        return [CheckResult("smash_preconditions", "fail",
                            witness=str(exc).replace(" ", "_"))]


def _load_context_files(a_path, b_path, sigma_path, pi_path):
    a = load_algebra(a_path)
    b = load_hopf(b_path)
    _require_same_backend(a, b)
    sigma = (load_morphism(sigma_path, b, a) if sigma_path is not None
             else inclusion_by_names(b, a))
    pi = load_morphism(pi_path, a, b)
    return a, b, sigma, pi


def _factorization_from_files(args):
    a = load_algebra(args.a)
    b = load_algebra(args.b)
    r = load_algebra(args.r)
    _require_same_backend(a, b, r)
    sigma = (load_morphism(args.sigma, b, a) if args.sigma is not None
             else inclusion_by_names(b, a))
    include = (load_morphism(args.include, r, a) if args.include is not None
               else inclusion_by_names(r, a))
    try:
        return make_factorization(a.algebra, b.algebra, r.algebra, sigma, include), []
    except NotInvertible as exc:
        return None, [CheckResult("factorization_invertible", "fail",
                                  witness=str(exc).replace(" ", "_"))]


def cmd_matchedpair(args) -> list[CheckResult]:
    if args.mode == "derive":
        fc, checks = _factorization_from_files(args)
        if fc is None:
            return checks
        _, derive_checks = derive_actions_general(fc)
        return derive_checks
    r = load_algebra(args.r)
    b = load_algebra(args.b)
    _require_same_backend(r, b)
    br_obj = r.backend.tensor(b.obj, r.obj)
    br_names = tensor_names(list(b.basis), list(r.basis))
    tr = load_morphism(args.tr, (br_obj, br_names), r)
    tl = load_morphism(args.tl, (br_obj, br_names), b)
    mp = MatchedPair(r.algebra, b.algebra, tr.mat, tl.mat)
    return check_matched_pair(mp)


def cmd_filtration(args) -> list[CheckResult]:
    a = load_algebra(args.a)
    b = load_algebra(args.b, kinds=("hopf", "bialgebra", "coalgebra"))
    sigma = inclusion_by_names(b, a)
    sub = Subobject(a.obj, sigma.mat)
    try:
        report = b_adic_filtration(a.algebra, sub, args.max_n)
    except NotSubcoalgebra:
        return [CheckResult("b_subcoalgebra", "fail", witness="delta_leaves_b")]
    dims = ",".join(str(d) for d in report.dims)
    return [
        CheckResult("b_subcoalgebra", "pass"),
        CheckResult("b_adic_dims", "pass", value=dims),
        bool_check("exhaustive", report.exhaustive, witness=f"dims={dims}"),
    ]


def cmd_coradical(args) -> list[CheckResult]:
    a = load_algebra(args.a, kinds=("hopf", "bialgebra", "coalgebra"))
    cor = coradical(a.algebra)
    cols = ";".join(_lincomb(cor.embedding.column(j), a.basis) for j in range(cor.dim))
    return [CheckResult("coradical_dim", "pass", value=str(cor.dim)),
            CheckResult("coradical_basis", "pass", value=cols)]


def cmd_magnum(args) -> list[CheckResult]:
    a = load_algebra(args.a)
    b = load_hopf(args.b)
    _require_same_backend(a, b)
    sigma = (load_morphism(args.sigma, b, a) if args.sigma is not None
             else inclusion_by_names(b, a))
    if not isinstance(b.algebra, HopfAlgebra):
        raise InputError("magnum needs a hopf file for B")
    return check_magnum_preconditions(a.algebra, b.algebra, sigma, args.max_n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidhopf",
        description="exact checks for bialgebras in braided monoidal categories")
    parser.add_argument("--report", choices=("plain", "machine"), default="plain",
                        help="report format (machine is byte-stable)")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="verify the axioms of one algebra file")
    p.add_argument("kind", choices=("hopf", "bialgebra"))
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = subs.add_parser("integral", help="solve for a total integral")
    p.add_argument("file")
    p.set_defaults(fn=cmd_integral)

    p = subs.add_parser("cosep-section", help="build and verify the coseparability section")
    p.add_argument("file")
    p.set_defaults(fn=cmd_cosep_section)

    p = subs.add_parser("weakproj", help="weak projection checks")
    p.add_argument("mode", choices=("check", "search", "diagram", "bd-suite"))
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("sigma", nargs="?")
    p.add_argument("pi", nargs="?")
    p.set_defaults(fn=cmd_weakproj)

    p = subs.add_parser("build", help="build product bialgebras and verify them")
    sub_build = p.add_subparsers(dest="what", required=True)
    for what in ("cross", "smash"):
        q = sub_build.add_parser(what)
        q.add_argument("a")
        q.add_argument("b")
        q.add_argument("sigma", nargs="?")
        q.add_argument("pi")
        q.set_defaults(fn=cmd_build, what=what)
    q = sub_build.add_parser("doublecross")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("r")
    q.add_argument("sigma", nargs="?")
    q.add_argument("include", nargs="?")
    q.set_defaults(fn=cmd_build, what="doublecross")

    p = subs.add_parser("matchedpair", help="check or derive matched pairs")
    sub_mp = p.add_subparsers(dest="mode", required=True)
    q = sub_mp.add_parser("check")
    q.add_argument("r")
    q.add_argument("b")
    q.add_argument("tr", help="morphism file B(x)R -> R over dotted basis names")
    q.add_argument("tl", help="morphism file B(x)R -> B over dotted basis names")
    q.set_defaults(fn=cmd_matchedpair, mode="check")
    q = sub_mp.add_parser("derive")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("r")
    q.add_argument("sigma", nargs="?")
    q.add_argument("include", nargs="?")
    q.set_defaults(fn=cmd_matchedpair, mode="derive")

    p = subs.add_parser("filtration", help="the iterated wedge filtration against B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(fn=cmd_filtration)

    p = subs.add_parser("coradical", help="largest cosemisimple subcoalgebra")
    p.add_argument("a")
    p.set_defaults(fn=cmd_coradical)

    p = subs.add_parser("magnum", help="weak projection existence preconditions")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("sigma", nargs="?")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(fn=cmd_magnum)

    return parser


def dispatch(argv: list[str]) -> tuple[int, Report | None, str | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 2), None, None
    command = " ".join(argv)
    try:
        checks = args.fn(args)
    except (ParseError, InputError) as exc:
        return 2, None, str(exc)
    except (ValueError, NotInvertible, PreconditionFailed) as exc:
        return 2, None, str(exc)
    report = make_report(command, checks)
    return (0 if report.overall == "pass" else 1), report, None


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    style = "plain"
    if "--report" in argv:
        k = argv.index("--report")
        if k + 1 < len(argv):
            style = argv[k + 1]
    code, report, error = dispatch(argv)
    if error is not None:
        print(f"error: {error}", file=sys.stderr)
        return 2
    if report is not None:
        print(report.render(style))
    return code


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface: ``hompre <command> SOURCE [options]``.

SOURCE and every file option accept a path or the name of a bundled fixture.
Representation options also accept ``regular``, ``trivial`` and
``dual-regular``, built from the algebra itself.

Exit status: 0 when every verdict passes, 1 when one fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import sys

from . import formats
from .algebra import (
    BilinearMap,
    HomLieAlgebra,
    HomPreLieAlgebra,
    VerificationError,
    check_hom_lie,
    check_hom_pre_lie,
    subadjacent,
)
from .cohomology import (
    CochainSizeError,
    cohomology_table,
    lie_coboundary_matrix,
    lie_cohomology_table,
    pre_lie_coboundary_matrix,
)
from .deformation import (
    check_hom_lie_nijenhuis,
    check_nijenhuis,
    equivalence_report,
    hom_lie_deformation_report,
    linear_deformation_report,
)
from .formats import ParseError
from .linalg import DimensionError, Matrix, SingularMatrixError, mat_inverse
from .operators import (
    b_sharp,
    check_hessian,
    check_o_operator,
    lift_to_semidirect_nijenhuis,
    solve_hessian,
)
from .report import Report, emit_report
from .representations import (
    HomLieRepresentation,
    Representation,
    adjoint_rep,
    check_hom_lie_rep,
    check_rep,
    dual_rep,
    hom_lie_dual,
    regular_rep,
    semidirect_product,
    tensor_rep,
    trivial_rep,
)


class UsageError(ValueError):
    pass


# -- argument resolution ----------------------------------------------------------

def _pre_lie(A, command: str) -> HomPreLieAlgebra:
    if not isinstance(A, HomPreLieAlgebra):
        raise UsageError(f"{command} needs a Hom-pre-Lie algebra")
    return A


def resolve_rep(source: str, A):
    """A representation of ``A`` from a shortcut name or a file."""
    if isinstance(A, HomLieAlgebra):
        if source == "regular":
            return adjoint_rep(A)
        if source == "trivial":
            return HomLieRepresentation(Matrix.identity(1), tuple(Matrix.zeros(1, 1) for _ in range(A.dim)))
        if source == "dual-regular":
            return hom_lie_dual(A, adjoint_rep(A))
        return formats.load_representation(source, A.dim)
    if source == "regular":
        return regular_rep(A, verify=False)
    if source == "trivial":
        return trivial_rep(A)
    if source == "dual-regular":
        return dual_rep(A, regular_rep(A, verify=False), verify=False)
    R = formats.load_representation(source, A.dim)
    if not isinstance(R, Representation):
        raise ParseError("a Hom-pre-Lie representation needs a 'mu' field", source)
    return R


def resolve_omega(source: str, A) -> BilinearMap:
    if source == "zero":
        return BilinearMap.zero(A.dim)
    return formats.load_bilinear(source, A.dim)


def resolve_square(source: str, n: int) -> Matrix:
    if source == "identity":
        return Matrix.identity(n)
    return formats.load_operator(source, n, n)


def _check_algebra(report: Report, A, args) -> None:
    if args.no_verify:
        return
    checks = check_hom_pre_lie(A) if isinstance(A, HomPreLieAlgebra) else check_hom_lie(A)
    report.add(checks, "algebra.")


def _check_rep(report: Report, A, R, args, prefix: str = "rep.") -> None:
    if args.no_verify:
        return
    if isinstance(R, Representation):
        report.add(check_rep(A, R), prefix)
    else:
        g = A if isinstance(A, HomLieAlgebra) else subadjacent(A, verify=False)
        report.add(check_hom_lie_rep(g, R), prefix)


# -- commands -----------------------------------------------------------------------

def cmd_verify(A, args, report: Report) -> None:
    checks = check_hom_pre_lie(A) if isinstance(A, HomPreLieAlgebra) else check_hom_lie(A)
    report.add(checks)
    if args.rep:
        R = resolve_rep(args.rep, A)
        if isinstance(R, Representation):
            report.add(check_rep(A, R), "rep.")
        else:
            g = A if isinstance(A, HomLieAlgebra) else subadjacent(A, verify=False)
            report.add(check_hom_lie_rep(g, R), "rep.")


def cmd_cohomology(A, args, report: Report) -> None:
    if args.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    R = resolve_rep(args.coefficients, A)
    _check_algebra(report, A, args)
    _check_rep(report, A, R, args)
    if isinstance(A, HomPreLieAlgebra):
        mats = [pre_lie_coboundary_matrix(A, R, n) for n in range(1, args.max_degree + 1)]
        report.set_cohomology(cohomology_table(A, R, args.max_degree))
    else:
        mats = [lie_coboundary_matrix(A, R, k) for k in range(0, args.max_degree + 1)]
        report.set_cohomology(lie_cohomology_table(A, R, args.max_degree))
    squares = all((d2 @ d1).is_zero() for d1, d2 in zip(mats, mats[1:]))
    report.set_verdict("coboundary_squares_to_zero", squares)


def cmd_check_nijenhuis(A, args, report: Report) -> None:
    N = resolve_square(args.operator, A.dim)
    _check_algebra(report, A, args)
    if isinstance(A, HomPreLieAlgebra):
        report.add(check_nijenhuis(A, N))
    else:
        report.add(check_hom_lie_nijenhuis(A, N))


def cmd_check_deformation(A, args, report: Report) -> None:
    omega = resolve_omega(args.omega, A)
    _check_algebra(report, A, args)
    if isinstance(A, HomPreLieAlgebra):
        report.add(linear_deformation_report(A, omega))
    else:
        report.add(hom_lie_deformation_report(A, omega))


def cmd_check_equivalence(A, args, report: Report) -> None:
    A = _pre_lie(A, "check-equivalence")
    omega1 = resolve_omega(args.omega1, A)
    omega2 = resolve_omega(args.omega2, A)
    N = resolve_square(args.operator, A.dim)
    _check_algebra(report, A, args)
    report.add(equivalence_report(A, omega1, omega2, N))


def cmd_check_o_operator(A, args, report: Report) -> None:
    A = _pre_lie(A, "check-o-operator")
    R = resolve_rep(args.rep, A)
    T = formats.load_operator(args.operator, A.dim, R.carrier_dim)
    _check_algebra(report, A, args)
    _check_rep(report, A, R, args)
    report.add(check_o_operator(A, R, T))
    S, lift = lift_to_semidirect_nijenhuis(A, R, T, verify=False)
    report.set_verdict("lift_is_nijenhuis", check_nijenhuis(S, lift).ok)


def cmd_check_hessian(A, args, report: Report) -> None:
    A = _pre_lie(A, "check-hessian")
    B = resolve_square(args.form, A.dim)
    _check_algebra(report, A, args)
    checks = check_hessian(A, B)
    report.add(checks)
    if checks.ok:
        T = mat_inverse(b_sharp(B))
        D = dual_rep(A, regular_rep(A, verify=False), verify=False)
        report.add(check_o_operator(A, D, T), "inverse_sharp.")
        report.result = {"o_operator": formats.emit_operator(T)}


def cmd_solve_hessian(A, args, report: Report) -> None:
    A = _pre_lie(A, "solve-hessian")
    _check_algebra(report, A, args)
    sol = solve_hessian(A)
    report.result = {
        "dimension": sol.dimension,
        "basis": [formats.emit_matrix(b) for b in sol.basis],
        "nondegenerate_basis": sol.nondegenerate_basis,
        "has_nondegenerate": sol.has_nondegenerate,
    }
    report.set_verdict("hessian_structure_exists", sol.has_nondegenerate is True)


def cmd_dual_rep(A, args, report: Report) -> None:
    R = resolve_rep(args.rep, A)
    _check_rep(report, A, R, args)
    if isinstance(A, HomLieAlgebra):
        D = hom_lie_dual(A, R)
    elif isinstance(R, Representation):
        D = dual_rep(A, R, verify=False)
    else:
        raise UsageError("a Hom-pre-Lie algebra needs a representation with 'mu'")
    _check_rep(report, A, D, args, "dual.")
    report.result = formats.emit_representation(D)


def cmd_tensor_rep(A, args, report: Report) -> None:
    A = _pre_lie(A, "tensor-rep")
    RV = resolve_rep(args.left, A)
    RW = resolve_rep(args.right, A)
    _check_rep(report, A, RV, args, "left.")
    _check_rep(report, A, RW, args, "right.")
    T = tensor_rep(A, RV, RW, verify=False)
    _check_rep(report, A, T, args, "tensor.")
    report.result = formats.emit_representation(T)


def cmd_semidirect(A, args, report: Report) -> None:
    A = _pre_lie(A, "semidirect")
    R = resolve_rep(args.rep, A)
    _check_algebra(report, A, args)
    _check_rep(report, A, R, args)
    S = semidirect_product(A, R, verify=False)
    if not args.no_verify:
        report.add(check_hom_pre_lie(S), "semidirect.")
    report.result = formats.emit_algebra(S)


def cmd_subadjacent(A, args, report: Report) -> None:
    A = _pre_lie(A, "subadjacent")
    _check_algebra(report, A, args)
    g = subadjacent(A, verify=False)
    if not args.no_verify:
        report.add(check_hom_lie(g), "subadjacent.")
    report.result = formats.emit_algebra(g)


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human", help="report format")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--no-verify", action="store_true",
                        help="skip checking the input algebra and representations")

    parser = argparse.ArgumentParser(prog="hompre", description="Exact checks and constructions for Hom-pre-Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.add_argument("source", help="algebra file or fixture name")
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "check the algebra identities (and a representation)")
    p.add_argument("--rep", help="representation to check as well")

    p = add("cohomology", cmd_cohomology, "cohomology dimensions from exact coboundary ranks")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--coefficients", default="regular",
                   help="regular, trivial, dual-regular or a representation file")

    p = add("check-nijenhuis", cmd_check_nijenhuis, "check a Nijenhuis operator")
    p.add_argument("--operator", required=True)

    p = add("check-deformation", cmd_check_deformation, "check that omega generates a linear deformation")
    p.add_argument("--omega", required=True, help="bilinear file")

    p = add("check-equivalence", cmd_check_equivalence,
            "check that Id + tN makes two linear deformations equivalent")
    p.add_argument("--omega1", default="zero", help="bilinear file or 'zero'")
    p.add_argument("--omega2", required=True, help="bilinear file or 'zero'")
    p.add_argument("--operator", required=True)

    p = add("check-o-operator", cmd_check_o_operator, "check an O-operator and its lift")
    p.add_argument("--rep", default="regular")
    p.add_argument("--operator", required=True)

    p = add("check-hessian", cmd_check_hessian, "check a Hessian structure")
    p.add_argument("--form", required=True, help="'identity' or an operator file holding the form")

    add("solve-hessian", cmd_solve_hessian, "solve the linear Hessian conditions")

    p = add("dual-rep", cmd_dual_rep, "dual of a representation")
    p.add_argument("--rep", default="regular")

    p = add("tensor-rep", cmd_tensor_rep, "tensor product of two representations")
    p.add_argument("--left", default="regular")
    p.add_argument("--right", default="regular")

    p = add("semidirect", cmd_semidirect, "semidirect product with a representation")
    p.add_argument("--rep", default="regular")

    add("subadjacent", cmd_subadjacent, "sub-adjacent Hom-Lie algebra")
    return parser


def _run(argv: list[str]) -> tuple[int, Report | None, argparse.Namespace | None]:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None, None
    report = Report(["hompre"] + list(argv))
    try:
        A = formats.load_algebra(args.source)
        args.func(A, args, report)
    except VerificationError as exc:
        report.add(exc.report)
        return 1, report, args
    except (ParseError, UsageError, DimensionError, SingularMatrixError, CochainSizeError) as exc:
        print(f"hompre: error: {exc}", file=sys.stderr)
        return 2, None, args
    return report.exit_code, report, args


def run_command(argv: list[str]) -> tuple[int, Report | None]:
    """Run ``argv``; the exit code and the report (``None`` on usage or input errors)."""
    code, report, _ = _run(argv)
    return code, report


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, report, args = _run(argv)
    if report is None:
        return code
    text = emit_report(report, args.format)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"hompre: error: cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

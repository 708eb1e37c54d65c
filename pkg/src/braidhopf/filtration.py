"""Wedge products, the B-adic coalgebra filtration, and the coradical.

The wedge of two subobjects is the kernel of the comultiplication pushed
into the tensor product of the quotients; iterating against a fixed
subcoalgebra B gives the ascending filtration whose exhaustiveness is one
of the preconditions reported by check_magnum_preconditions.  The
coradical is computed dually, through the trace-form radical of the dual
algebra (valid in characteristic zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .category import CatObject, Morphism
from .hopf import (BraidedBialgebra, Coalgebra, HopfAlgebra,
                   solve_total_integral, verify_antipode)
from .linalg import Matrix, hstack, kernel_basis, kron, pipeline
from .report import CheckResult, bool_check, merge_checks


class BackendUnsupported(ValueError):
    pass


class NotSubcoalgebra(ValueError):
    pass


@dataclass(frozen=True)
class Subobject:
    ambient: CatObject
    embedding: Matrix          # full column rank

    @property
    def dim(self) -> int:
        return self.embedding.cols


@dataclass(frozen=True)
class FiltrationReport:
    dims: tuple[int, ...]
    stabilized_at: int | None
    exhaustive: bool


def subspace_contains(emb: Matrix, vectors: Matrix) -> bool:
    """True when every column of vectors lies in the column span of emb."""
    base = emb.rank()
    return hstack(emb, vectors).rank() == base


def full_subobject(ambient: CatObject) -> Subobject:
    return Subobject(ambient, Matrix.identity(ambient.dim))


def quotient_projection(sub: Subobject) -> Matrix:
    """Projection onto a complement of the subobject.

    The complement is spanned by the standard coordinates not in the column
    span of the embedding, taken in ascending index order, so the quotient
    basis is deterministic.
    """
    emb = sub.embedding
    n = sub.ambient.dim
    r = emb.cols
    current = emb
    rank = emb.rank()
    for i in range(n):
        if rank == n:
            break
        cand = hstack(current, Matrix.basis_column(n, i))
        if cand.rank() > rank:
            current = cand
            rank += 1
    inv = current.inverse()
    rows = inv.dense_rows()[r:]
    return Matrix.from_rows(rows) if rows else Matrix.zeros(0, n)


def wedge(x: Subobject, y: Subobject, coalg: Coalgebra | BraidedBialgebra) -> Subobject:
    """X wedge Y = Ker[(p_X (x) p_Y) Delta]."""
    qx = quotient_projection(x)
    qy = quotient_projection(y)
    n = coalg.dim
    if qx.rows == 0 or qy.rows == 0:
        return full_subobject(coalg.carrier)
    k = pipeline(coalg.delta.mat, (qx, qy))
    return Subobject(coalg.carrier, Matrix.from_cols(n, kernel_basis(k)))


def is_subcoalgebra(coalg: Coalgebra | BraidedBialgebra, sub: Subobject) -> bool:
    """Delta restricted to the subobject must land in sub (x) sub."""
    image = coalg.delta.mat * sub.embedding
    return subspace_contains(kron(sub.embedding, sub.embedding), image)


def b_adic_filtration(a: Coalgebra | BraidedBialgebra, b_sub: Subobject,
                      max_n: int | None = None) -> FiltrationReport:
    """Iterated wedge against b_sub; step k holds the (k+1)-fold wedge."""
    if not is_subcoalgebra(a, b_sub):
        raise NotSubcoalgebra("the given subobject is not a subcoalgebra")
    if max_n is None:
        max_n = a.dim
    dims = [b_sub.dim]
    current = b_sub
    stabilized_at = None
    if b_sub.dim == a.dim:
        return FiltrationReport((b_sub.dim,), 0, True)
    for step in range(1, max_n + 1):
        nxt = wedge(current, b_sub, a)
        dims.append(nxt.dim)
        if nxt.dim == current.dim:
            stabilized_at = step
            break
        current = nxt
        if nxt.dim == a.dim:
            stabilized_at = step
            break
    return FiltrationReport(tuple(dims), stabilized_at, dims[-1] == a.dim)


def coradical(a: Coalgebra | BraidedBialgebra) -> Subobject:
    """Annihilator of the Jacobson radical of the dual algebra.

    The radical is the kernel of the trace form x, y -> tr(L_{x y}) of the
    dual algebra, which is exact over the rationals.
    """
    if a.backend.kind != "vec":
        raise BackendUnsupported("coradical is computed in the Vec backend only")
    n = a.dim
    d = a.delta.mat
    # dual multiplication constants: e^i e^j = sum_k Delta[(i,j), k] e^k, so
    # left multiplication by e^i has trace sum_j Delta[(i,j), j]
    traces = [sum((d.entry(i * n + j, j) for j in range(n)), Fraction(0)) for i in range(n)]
    tform = [[sum((d.entry(i * n + j, k) * traces[k] for k in range(n)), Fraction(0))
              for j in range(n)] for i in range(n)]
    rad = kernel_basis(Matrix.from_rows(tform).transpose())
    if not rad:
        return full_subobject(a.carrier)
    ann = kernel_basis(Matrix.from_rows([list(v) for v in rad]))
    return Subobject(a.carrier, Matrix.from_cols(n, ann))


def check_magnum_preconditions(a: BraidedBialgebra, b: HopfAlgebra, sigma: Morphism,
                               max_n: int | None = None) -> list[CheckResult]:
    """Diagnostic report for the weak projection existence hypotheses.

    Reports that B has a verified antipode, that B carries a total integral
    (the sufficient coseparability condition), that the B-adic filtration
    exhausts A, and, in Vec, that the coradical of A sits inside B.  The
    report asserts nothing beyond these checks.
    """
    checks = [merge_checks("b_has_antipode", verify_antipode(b))]
    integral = solve_total_integral(b)
    checks.append(bool_check("b_total_integral", integral is not None))
    b_sub = Subobject(a.carrier, sigma.mat)
    try:
        filt = b_adic_filtration(a, b_sub, max_n)
        dims = ",".join(str(x) for x in filt.dims)
        checks.append(bool_check("filtration_exhaustive", filt.exhaustive,
                                 witness=f"dims={dims}", value=f"dims={dims}"))
    except NotSubcoalgebra:
        checks.append(CheckResult("filtration_exhaustive", "fail",
                                  witness="sigma_image_not_subcoalgebra"))
    if a.backend.kind == "vec":
        cor = coradical(a)
        checks.append(bool_check("coradical_inside_b",
                                 subspace_contains(sigma.mat, cor.embedding),
                                 witness=f"coradical_dim={cor.dim}",
                                 value=f"coradical_dim={cor.dim}"))
    else:
        checks.append(CheckResult("coradical_inside_b", "skipped", value="non_vec_backend"))
    return checks

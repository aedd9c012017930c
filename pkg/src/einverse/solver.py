"""Consistency tests and general solutions for multilinear tensor equations.

The central form is ``a x b = d`` under contracted products: it is solvable
exactly when ``a g_a d g_b b = d`` for {1}-inverses ``g_a``, ``g_b`` (the
Moore-Penrose inverses by default), and then every solution is

    x(z) = g_a d g_b + z - g_a a z b g_b

for a free tensor ``z``.  Inconsistency is reported as a value, never an
exception, so callers get the witness residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import einstein_product, kronecker, unvec, vec
from .errors import PreconditionError, ShapeError
from .inverses import pinv
from .tensor import (
    Tensor,
    TensorShape,
    frobenius_distance,
    frobenius_norm,
    transpose,
    unit_tensor,
)

#: Solvability-test tolerance, relative to (1 + norm of the right-hand side).
#: Looser than the verification default because two pseudoinverse
#: applications compound rounding error.
SOLVE_TOL = 1e-8


def _mul(*factors: Tensor) -> Tensor:
    acc = factors[0]
    for f in factors[1:]:
        acc = einstein_product(acc, f, acc.order - acc.split)
    return acc


@dataclass(frozen=True)
class SolveOutcome:
    """Verdict, particular solution, witness residual, and solution generator.

    ``particular`` is the candidate ``g_a d g_b`` even when inconsistent (it
    is then the least-squares-style projection witness, not a solution).
    ``generator`` maps a free tensor to a solution; with the zero tensor it
    reproduces ``particular``.
    """

    consistent: bool
    particular: Tensor | None
    residual: float
    generator: Callable[[Tensor], Tensor] | None


def _outcome(consistent, x0, residual, generator):
    return SolveOutcome(bool(consistent), x0, float(residual), generator)


def solve_axb(
    a: Tensor,
    b: Tensor,
    d: Tensor,
    g_a: Tensor | None = None,
    g_b: Tensor | None = None,
    tol: float = SOLVE_TOL,
) -> SolveOutcome:
    """Solve ``a x b = d`` for ``x``.

    Parameters
    ----------
    a, b, d : Tensor
        Coefficients and right-hand side; ``d`` must combine ``a``'s row
        group with ``b``'s column group.
    g_a, g_b : Tensor, optional
        {1}-inverses to use in the solvability test and solution formulas;
        default is the Moore-Penrose inverse of each.
    tol : float
        Relative consistency threshold.
    """
    if d.row_extents != a.row_extents or d.col_extents != b.col_extents:
        raise ShapeError(f"right-hand side {d!r} does not fit {a!r} and {b!r}")
    if g_a is None:
        g_a = pinv(a)
    if g_b is None:
        g_b = pinv(b)
    x0 = _mul(g_a, d, g_b)
    residual = frobenius_distance(_mul(a, x0, b), d) / (1.0 + frobenius_norm(d))
    left = _mul(g_a, a)
    right = _mul(b, g_b)
    x_shape = x0.shape

    def generator(z: Tensor) -> Tensor:
        if z.shape != x_shape:
            raise ShapeError(f"free tensor {z!r} must be shaped like {x_shape}")
        return x0 + z - _mul(left, z, right)

    return _outcome(residual <= tol, x0, residual, generator)


def solve_ax(
    a: Tensor,
    b: Tensor,
    use_mp: bool = False,
    g: Tensor | None = None,
    tol: float = SOLVE_TOL,
) -> SolveOutcome:
    """Solve ``a x = b``; consistent iff ``a g b = b``.

    The generator realizes ``x(y) = g b + (I - g a) y``.  ``use_mp`` selects
    the Moore-Penrose form of the statement; since ``g`` already defaults to
    the Moore-Penrose inverse the two variants coincide numerically.
    """
    if b.row_extents != a.row_extents:
        raise ShapeError(f"right-hand side {b!r} does not fit {a!r}")
    if g is None or use_mp:
        g = pinv(a)
    x0 = _mul(g, b)
    residual = frobenius_distance(_mul(a, x0), b) / (1.0 + frobenius_norm(b))
    proj = unit_tensor(a.col_extents) - _mul(g, a)
    x_shape = x0.shape

    def generator(y: Tensor) -> Tensor:
        if y.shape != x_shape:
            raise ShapeError(f"free tensor {y!r} must be shaped like {x_shape}")
        return x0 + _mul(proj, y)

    return _outcome(residual <= tol, x0, residual, generator)


def common_solution(
    a: Tensor, b: Tensor, d: Tensor, f: Tensor, tol: float = SOLVE_TOL
) -> SolveOutcome:
    """Common solution of the pair ``a x = b`` and ``x d = f``.

    The pair is consistent iff each equation is solvable on its own and the
    coupling ``a f = b d`` holds; the particular solution is then
    ``g_a b + f g_d - g_a a f g_d``.
    """
    if b.row_extents != a.row_extents:
        raise ShapeError(f"{b!r} does not fit {a!r} on the left equation")
    if f.col_extents != d.col_extents:
        raise ShapeError(f"{f!r} does not fit {d!r} on the right equation")
    if a.col_extents != f.row_extents or b.col_extents != d.row_extents:
        raise ShapeError("equations do not share an unknown of one shape")
    g_a = pinv(a)
    g_d = pinv(d)
    x0 = _mul(g_a, b) + _mul(f, g_d) - _mul(g_a, a, f, g_d)
    r_left = frobenius_distance(_mul(a, g_a, b), b) / (1.0 + frobenius_norm(b))
    r_right = frobenius_distance(_mul(f, g_d, d), f) / (1.0 + frobenius_norm(f))
    bd = _mul(b, d)
    r_couple = frobenius_distance(_mul(a, f), bd) / (1.0 + frobenius_norm(bd))
    consistent = max(r_left, r_right, r_couple) <= tol
    residual = max(
        frobenius_distance(_mul(a, x0), b) / (1.0 + frobenius_norm(b)),
        frobenius_distance(_mul(x0, d), f) / (1.0 + frobenius_norm(f)),
    )
    left = _mul(g_a, a)
    right = _mul(d, g_d)
    i_left = unit_tensor(a.col_extents)
    i_right = unit_tensor(d.row_extents)
    x_shape = x0.shape

    def generator(z: Tensor) -> Tensor:
        if z.shape != x_shape:
            raise ShapeError(f"free tensor {z!r} must be shaped like {x_shape}")
        return x0 + _mul(i_left - left, z, i_right - right)

    return _outcome(consistent, x0, residual, generator)


def verify_unique_triple(
    a: Tensor, b: Tensor, d: Tensor, x: Tensor, y: Tensor, tol: float = 1e-9
) -> bool:
    """Check that two solutions of the rigid triple of relations coincide.

    Both ``x`` and ``y`` must satisfy ``a x = b``, ``x a = d`` and
    ``x a x = x`` within ``tol`` (relative); otherwise a
    :class:`PreconditionError` is raised, distinct from the equality verdict.
    Returns whether the two are within the error bound the three relations
    allow.
    """

    def _residuals(w: Tensor):
        return (
            frobenius_distance(_mul(a, w), b) / (1.0 + frobenius_norm(b)),
            frobenius_distance(_mul(w, a), d) / (1.0 + frobenius_norm(d)),
            frobenius_distance(_mul(w, a, w), w) / (1.0 + frobenius_norm(w)),
        )

    for name, w in (("x", x), ("y", y)):
        rs = _residuals(w)
        if max(rs) > tol:
            raise PreconditionError(
                f"{name} violates the defining relations (residuals {rs})"
            )
    bound = 10.0 * tol * (1.0 + frobenius_norm(a)) * (
        1.0 + frobenius_norm(x) + frobenius_norm(y)
    )
    return frobenius_distance(x, y) <= bound


def solve_axb_via_kronecker(
    a: Tensor, b: Tensor, d: Tensor, tol: float = SOLVE_TOL
) -> SolveOutcome:
    """Solve ``a x b = d`` through the blocked-product reformulation.

    Rewrites the system as ``(a kron b^T) vec(x) = vec(d)`` and applies the
    one-sided solver in the lifted space.  The transpose (not the conjugate
    transpose) is required for the rewrite to hold over complex entries.
    Particular solutions may differ from :func:`solve_axb`'s, but both
    satisfy the same equation and the verdicts agree.
    """
    if d.row_extents != a.row_extents or d.col_extents != b.col_extents:
        raise ShapeError(f"right-hand side {d!r} does not fit {a!r} and {b!r}")
    big = kronecker(a, transpose(b))
    g = pinv(big)
    x_shape = TensorShape(a.col_extents + b.row_extents, len(a.col_extents))
    x0v = _mul(g, vec(d))
    x0 = unvec(x0v, x_shape)
    residual = frobenius_distance(_mul(a, x0, b), d) / (1.0 + frobenius_norm(d))
    gop = _mul(g, big)

    def generator(z: Tensor) -> Tensor:
        if z.shape != x_shape:
            raise ShapeError(f"free tensor {z!r} must be shaped like {x_shape}")
        zv = vec(z)
        xv = x0v + zv - _mul(gop, zv)
        return unvec(xv, x_shape)

    return _outcome(residual <= tol, x0, residual, generator)

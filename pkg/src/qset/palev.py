"""Palev statistics of dual odd pairs and the Bose contraction limit.

Bivectors are the antisymmetrized products ``v_i ^ v_j = v_i v_j - {v_i, v_j}/2``
for ``i < j``; their commutators close on the same span and give the
structure tensor of the spin algebra of the neutral duplex form.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy import sparse

from .clifford import (
    CliffordElement,
    clifford_mul,
    commutator,
    from_exterior,
    to_exterior,
)
from .errors import ClosureViolation, RankGuard, SizeGuard

#: Largest seed dimension for the exact bivector computations.
MAX_PALEV_DIM = 4
#: Largest spin-j representation dimension for the contraction demo.
MAX_CONTRACTION_SIZE = 10_000

Bivector = CliffordElement


def pair_import(v: int, w: int, d: int) -> CliffordElement:
    """Clifford product ``v_v v_w`` of two generators, normal ordered."""
    for i in (v, w):
        if not 1 <= i <= 2 * d:
            raise IndexError(f"generator v_{i} out of range 1..{2 * d}")
    return clifford_mul(CliffordElement.generator(v, d), CliffordElement.generator(w, d))


def bivector_pairs(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, 2 * d + 1), 2))


def bivector_basis(d: int) -> list[Bivector]:
    """The ``d(2d-1)`` grade-2 elements ``v_i ^ v_j``, ``i < j``, lexicographic."""
    if not 1 <= d <= MAX_PALEV_DIM:
        raise RankGuard(f"bivector basis limited to 1 <= d <= {MAX_PALEV_DIM}")
    return [from_exterior({pair: 1}, d) for pair in bivector_pairs(d)]


@dataclass(frozen=True)
class StructureTensor:
    """``[b_i, b_j] = sum_k c[i][j][k] b_k`` over :func:`bivector_basis`."""

    d: int
    c: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def n(self) -> int:
        return len(self.c)

    def is_antisymmetric(self) -> bool:
        n = self.n
        return all(self.c[i][j][k] == -self.c[j][i][k]
                   for i in range(n) for j in range(n) for k in range(n))

    def jacobi_defect(self) -> Fraction:
        """Largest absolute Jacobi sum; zero for a Lie algebra."""
        c, n = self.c, self.n
        worst = Fraction(0)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    for l in range(n):
                        s = sum(c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l]
                                + c[k][i][m] * c[m][j][l] for m in range(n))
                        worst = max(worst, abs(s))
        return worst

    def triplets(self) -> list[tuple[int, int, int, Fraction]]:
        """Nonzero entries as ``(i, j, k, c)`` with 0-based indices."""
        n = self.n
        return [(i, j, k, self.c[i][j][k])
                for i in range(n) for j in range(n) for k in range(n) if self.c[i][j][k]]


def closure_check(d: int) -> StructureTensor:
    """Commute every pair of basis bivectors and solve in the bivector span.

    Raises :class:`ClosureViolation` if a commutator has any part outside
    grade 2.
    """
    basis = bivector_basis(d)
    pairs = bivector_pairs(d)
    pos = {p: k for k, p in enumerate(pairs)}
    n = len(basis)
    zero_row = (Fraction(0),) * n
    c = [[zero_row] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ext = to_exterior(commutator(basis[i], basis[j]))
            row = [Fraction(0)] * n
            for word, coef in ext.items():
                if len(word) != 2:
                    raise ClosureViolation(
                        f"[b{i}, b{j}] has a grade-{len(word)} part {coef} on {word}")
                row[pos[word]] = coef
            c[i][j] = tuple(row)
            c[j][i] = tuple(-x for x in row)
    return StructureTensor(d, tuple(tuple(r) for r in c))


def spin_matrices(j: int) -> tuple[sparse.csr_matrix, sparse.csr_matrix, sparse.csr_matrix]:
    """Sparse ``(J_x, J_y, J_z)`` of the spin-``j`` irrep, basis ``m = j, j-1, ..., -j``."""
    m = np.arange(j, -j - 1, -1, dtype=float)
    # <m+1|J+|m> sits on the superdiagonal in descending-m order
    up = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    jp = sparse.diags(up, 1, format="csr")
    jm = jp.T.tocsr()
    jx = (jp + jm) * 0.5
    jy = (jp - jm) * (-0.5j)
    jz = sparse.diags(m, 0, format="csr")
    return jx, jy, jz


def contraction_residual(j: int, k: int) -> float:
    """Distance of ``[X, P]`` from ``i`` on the top ``k + 1`` weights, ``X, P = J_x, J_y / sqrt(j)``.

    The exact value is ``k / j``.
    """
    if j < 1 or k < 0 or k > j:
        raise ValueError(f"need j >= k >= 0 and j >= 1, got j={j}, k={k}")
    if 2 * j + 1 > MAX_CONTRACTION_SIZE:
        raise SizeGuard(f"2j+1 = {2 * j + 1} exceeds {MAX_CONTRACTION_SIZE}")
    jx, jy, _ = spin_matrices(j)
    scale = 1.0 / np.sqrt(j)
    x, p = jx * scale, jy * scale
    defect = (x @ p - p @ x) - 1j * sparse.identity(2 * j + 1, format="csr")
    block = defect[: k + 1, : k + 1].toarray()
    # the block is diagonal, so the row-sum norm is its largest |eigenvalue|
    return float(np.abs(block).sum(axis=1).max())

"""Core subspace geometry on the Grassmannian.

Subspaces are represented by orthonormal bases stored column-wise. All
comparisons between two subspaces reduce to the singular values of the
r1 x r2 inner-product matrix of their bases (the principal-angle cosines);
the d x d projector representation is kept only as a cross-check path.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvalidRanks, RankDeficient, ZeroMatrix

# Relative singular-value cutoff for numerical rank decisions.
RANK_RTOL = 1e-10
# Default tolerance on cos(theta) for counting an angle as zero (incidence).
INCIDENCE_TOL = 1e-8
# Constructor-enforced orthonormality of stored bases.
ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class Subspace:
    """An r-dimensional linear subspace of R^d, stored as a d x r orthonormal basis.

    The zero subspace (r = 0) is allowed and is contained in everything.
    """

    ambient_dim: int
    rank: int
    basis: np.ndarray = field(repr=False)

    def __post_init__(self):
        q = np.asarray(self.basis, dtype=np.float64)
        if q.ndim != 2 or q.shape != (self.ambient_dim, self.rank):
            raise DimensionMismatch(
                f"basis shape {q.shape} does not match (d={self.ambient_dim}, r={self.rank})"
            )
        if not (0 <= self.rank <= self.ambient_dim):
            raise InvalidRanks(f"rank {self.rank} outside [0, {self.ambient_dim}]")
        if self.rank > 0:
            gram_defect = np.linalg.norm(q.T @ q - np.eye(self.rank))
            if gram_defect >= ORTHO_TOL:
                raise DimensionMismatch(
                    f"basis columns not orthonormal (defect {gram_defect:.3e})"
                )
        object.__setattr__(self, "basis", q)

    def projector(self) -> np.ndarray:
        """Dense d x d orthogonal projector Q Q^T. Cross-check path only."""
        return self.basis @ self.basis.T

    def complement_basis(self) -> np.ndarray:
        """Orthonormal basis of the orthogonal complement, d x (d - r)."""
        d, r = self.ambient_dim, self.rank
        if r == 0:
            return np.eye(d)
        if r == d:
            return np.zeros((d, 0))
        # Full QR of the basis; trailing columns span the complement.
        full_q, _ = np.linalg.qr(self.basis, mode="complete")
        return full_q[:, r:]


def orthonormalize(matrix: np.ndarray, allow_rank_reduction: bool = False,
                   rank_rtol: float = RANK_RTOL) -> Subspace:
    """Orthonormal column basis for span(matrix), via thin SVD.

    Parameters
    ----------
    matrix : ndarray, shape (d, k)
        Columns spanning the subspace; need not be independent.
    allow_rank_reduction : bool
        If the numerical rank rho is below k, return a rank-rho subspace
        instead of raising RankDeficient.
    rank_rtol : float
        Relative cutoff: singular values above rank_rtol * sigma_max count
        toward the rank.

    Raises
    ------
    ZeroMatrix
        If all singular values vanish.
    RankDeficient
        If rho < k and allow_rank_reduction is False.
    """
    m = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    d, k = m.shape
    if d < 1 or k < 1:
        raise DimensionMismatch(f"need a d x k matrix with d,k >= 1, got {m.shape}")
    if k <= d:
        gram_defect = np.linalg.norm(m.T @ m - np.eye(k))
        if gram_defect < 1e-12:
            # Already orthonormal; keep the caller's basis bit-for-bit.
            return Subspace(d, k, m.copy())
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s[0] <= 0.0:
        raise ZeroMatrix("cannot orthonormalize a zero matrix")
    rho = int(np.sum(s > rank_rtol * s[0]))
    if rho < k and not allow_rank_reduction:
        raise RankDeficient(f"numerical rank {rho} < {k} columns")
    rho = min(rho, d)
    return Subspace(d, rho, u[:, :rho])


@dataclass(frozen=True)
class PrincipalAngleSet:
    """Principal angles between two subspaces, ascending in [0, pi/2].

    ``cosines`` are the singular values of Q_V^T Q_U clamped to [0, 1];
    ``angles`` are their arccosines. Both arrays have length min(r1, r2).
    """

    angles: np.ndarray
    cosines: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.angles, dtype=np.float64)
        if a.size and (np.any(a < 0) or np.any(a > np.pi / 2 + 1e-12)):
            raise ValueError("principal angles must lie in [0, pi/2]")
        if np.any(np.diff(a) < -1e-12):
            raise ValueError("principal angles must be sorted ascending")

    def __len__(self) -> int:
        return len(self.angles)

    def angle_sum(self) -> float:
        return float(np.sum(self.angles))

    def cos2_sum(self) -> float:
        return float(np.sum(self.cosines ** 2))


def _check_same_ambient(v: Subspace, u: Subspace) -> None:
    if v.ambient_dim != u.ambient_dim:
        raise DimensionMismatch(
            f"ambient dims differ: {v.ambient_dim} vs {u.ambient_dim}"
        )


def principal_angles(v: Subspace, u: Subspace) -> PrincipalAngleSet:
    """Principal angles between two subspaces of the same ambient space.

    Cosines are the singular values of the r1 x r2 basis inner-product
    matrix, clamped to [0, 1] before arccos so rounding cannot produce NaN.
    """
    _check_same_ambient(v, u)
    if v.rank == 0 or u.rank == 0:
        empty = np.zeros(0)
        return PrincipalAngleSet(angles=empty, cosines=empty)
    sigma = np.linalg.svd(v.basis.T @ u.basis, compute_uv=False)
    cosines = np.clip(sigma, 0.0, 1.0)[::-1]  # ascending angles
    return PrincipalAngleSet(angles=np.arccos(cosines), cosines=cosines)


def intersection_dim(v: Subspace, u: Subspace, eps: float = INCIDENCE_TOL) -> int:
    """dim(V intersect U), counted as principal angles with cos >= 1 - eps."""
    pa = principal_angles(v, u)
    return int(np.sum(pa.cosines >= 1.0 - eps))


def projector_distance_sq(v: Subspace, u: Subspace) -> float:
    """Squared Frobenius distance of the orthogonal projectors.

    Computed through principal angles as r1 + r2 - 2 * sum cos^2(theta_j),
    which equals ||P_V - P_U||_F^2.
    """
    pa = principal_angles(v, u)
    return float(v.rank + u.rank - 2.0 * pa.cos2_sum())


def projector_distance_sq_dense(v: Subspace, u: Subspace) -> float:
    """||P_V - P_U||_F^2 by explicit d x d projector subtraction.

    Reference path for cross-validation; O(d^2) memory, do not use in hot loops.
    """
    _check_same_ambient(v, u)
    diff = v.projector() - u.projector()
    return float(np.sum(diff * diff))


def containment_defect(v: Subspace, u: Subspace) -> float:
    """||(I - P_U) Q_V||_F^2: how much of V sticks out of U. Zero iff V <= U."""
    _check_same_ambient(v, u)
    if v.rank == 0:
        return 0.0
    pa = principal_angles(v, u)
    return float(v.rank - pa.cos2_sum())


def is_flag(v: Subspace, u: Subspace, eps: float = INCIDENCE_TOL) -> tuple[bool, float]:
    """Test V <= U for rank(V) <= rank(U).

    Returns (flag, defect) with defect = sum_j sin^2(theta_j) over the
    rank(V) principal angles; flag is True iff defect < eps.
    """
    _check_same_ambient(v, u)
    if v.rank > u.rank:
        raise DimensionMismatch(
            f"is_flag expects rank(V) <= rank(U), got {v.rank} > {u.rank}"
        )
    defect = containment_defect(v, u)
    return defect < eps, defect


def drift(chain) -> float:
    """Cumulative squared projector drift along a chain of subspaces.

    Accepts a FlagChain or any sequence of Subspace with a shared ambient
    dimension. For an exactly nested chain the value is sum of the rank
    increments r_{i+1} - r_i; any other chain with the same rank profile is
    at least as large.
    """
    spaces = list(chain.spaces) if isinstance(chain, FlagChain) else list(chain)
    total = 0.0
    for a, b in zip(spaces, spaces[1:]):
        total += projector_distance_sq(b, a)
    return total


@dataclass(frozen=True)
class FlagChain:
    """An ordered chain of subspaces with non-decreasing ranks."""

    spaces: tuple
    nesting_tol: float = INCIDENCE_TOL

    def __post_init__(self):
        spaces = tuple(self.spaces)
        if not spaces:
            raise InvalidRanks("chain must contain at least one subspace")
        d = spaces[0].ambient_dim
        for s in spaces:
            if s.ambient_dim != d:
                raise DimensionMismatch("chain members must share the ambient space")
        ranks = [s.rank for s in spaces]
        if any(b < a for a, b in zip(ranks, ranks[1:])):
            raise InvalidRanks(f"ranks must be non-decreasing, got {ranks}")
        object.__setattr__(self, "spaces", spaces)

    @property
    def ranks(self) -> list[int]:
        return [s.rank for s in self.spaces]

    def is_nested(self) -> bool:
        """True when every consecutive pair satisfies V_i <= V_{i+1}."""
        return all(
            is_flag(a, b, self.nesting_tol)[0]
            for a, b in zip(self.spaces, self.spaces[1:])
        )

    def nesting_defects(self) -> list[float]:
        return [
            is_flag(a, b, self.nesting_tol)[1]
            for a, b in zip(self.spaces, self.spaces[1:])
        ]


def _check_rank_profile(ranks, d: int) -> list[int]:
    rs = [int(r) for r in ranks]
    if not rs:
        raise InvalidRanks("empty rank profile")
    if rs[0] <= 0 or rs[-1] > d or any(b < a for a, b in zip(rs, rs[1:])):
        raise InvalidRanks(f"need 0 < r_1 <= ... <= r_L <= d, got {rs} with d={d}")
    return rs


def flag_dimension(ranks, d: int) -> int:
    """Dimension of the variety of nested chains with the given rank profile.

    sum_i (r_i - r_{i-1}) (d - r_i) with r_0 = 0.
    """
    rs = _check_rank_profile(ranks, d)
    prev = 0
    total = 0
    for r in rs:
        total += (r - prev) * (d - r)
        prev = r
    return total

def independent_dimension(ranks, d: int) -> int:
    """Dimension of the product of Grassmannians: sum_i r_i (d - r_i)."""
    rs = _check_rank_profile(ranks, d)
    return sum(r * (d - r) for r in rs)


def parameter_counts(ranks, d: int) -> tuple[int, int]:
    """Basis-parameter counts (shared nested basis, independent bases).

    A nested chain can be stored as one d x r_L basis plus the coordinates
    of each smaller space inside it: d*r_L + sum_i r_i (r_L - r_i) numbers.
    Independent per-layer bases cost sum_i d*r_i.
    """
    rs = _check_rank_profile(ranks, d)
    r_top = rs[-1]
    shared = d * r_top + sum(r * (r_top - r) for r in rs)
    independent = sum(d * r for r in rs)
    return shared, independent

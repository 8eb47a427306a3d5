"""Even unimodular lattices of signature (n, 2) and moment-matrix
combinatorics of the tuples indexing special cycles.

The lattice is presented as U + U + E8^j with a fixed basis order (the two
hyperbolic planes first), so primitivity is the gcd of coordinates and the
witness constructions below are reproducible bit for bit.  Binary moment
matrices carry an exact Gauss reduction to a unique GL_2(Z) representative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .linalg import det, gram_signature, rref

__all__ = [
    "EvenLattice",
    "HalfIntegralMatrix",
    "FamilyEntry",
    "build_even_unimodular",
    "inner",
    "norm_q",
    "moment_matrix",
    "is_primitive",
    "primitive_part",
    "vector_of_norm",
    "is_positive_definite",
    "gauss_reduce",
    "common_component_family",
    "matrix_to_json",
    "gram_to_json",
]

# Gram matrix of the E8 root lattice in a base of simple roots
# (chain 1-3-4-5-6-7-8 with 2 attached to 4); even, positive definite,
# determinant 1.
_E8_ADJACENCY = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))
E8_GRAM = tuple(
    tuple(
        2 if i == j else (-1 if (i + 1, j + 1) in _E8_ADJACENCY
                          or (j + 1, i + 1) in _E8_ADJACENCY else 0)
        for j in range(8)
    )
    for i in range(8)
)

U_GRAM = ((0, 1), (1, 0))


@dataclass(frozen=True)
class EvenLattice:
    """Gram-matrix model of an even lattice with fixed basis."""

    gram: tuple[tuple[int, ...], ...]
    signature: tuple[int, int]

    def __post_init__(self) -> None:
        g = self.gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise ValueError("gram matrix must be symmetric")
        if any(g[i][i] % 2 for i in range(n)):
            raise ValueError("even lattice needs even diagonal")

    @property
    def rank(self) -> int:
        return len(self.gram)


def build_even_unimodular(n: int) -> EvenLattice:
    """U + U + E8^((n-2)/8) of signature (n, 2); needs n = 2 mod 8, n >= 10."""
    if n % 8 != 2 or n < 10:
        raise ValueError(
            f"no even unimodular lattice of signature ({n}, 2): need "
            "n = 2 mod 8 and n >= 10"
        )
    blocks = [U_GRAM, U_GRAM] + [E8_GRAM] * ((n - 2) // 8)
    rank = sum(len(b) for b in blocks)
    gram = [[0] * rank for _ in range(rank)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                gram[offset + i][offset + j] = x
        offset += len(b)
    return EvenLattice(tuple(tuple(r) for r in gram), (n, 2))


def inner(lattice: EvenLattice, lam, mu) -> int:
    """Bilinear form value (lam, mu) in the fixed basis."""
    g = lattice.gram
    n = lattice.rank
    if len(lam) != n or len(mu) != n:
        raise ValueError(f"vectors must have rank {n}")
    return sum(lam[i] * g[i][j] * mu[j] for i in range(n) for j in range(n))


def norm_q(lattice: EvenLattice, lam) -> int:
    """Quadratic form q(lam) = (lam, lam)/2, an integer by evenness."""
    return inner(lattice, lam, lam) // 2


@dataclass(frozen=True)
class HalfIntegralMatrix:
    """Symmetric half-integral d x d matrix, stored doubled (2T integral).

    The diagonal of T is integral, i.e. the doubled matrix has even
    diagonal; off-diagonal doubled entries may be odd.
    """

    doubled: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = self.dimension
        m = self.doubled
        if any(len(row) != d for row in m):
            raise ValueError("matrix must be square")
        if any(m[i][j] != m[j][i] for i in range(d) for j in range(i)):
            raise ValueError("matrix must be symmetric")
        if any(m[i][i] % 2 for i in range(d)):
            raise ValueError("diagonal of T must be integral (doubled even)")

    @property
    def dimension(self) -> int:
        return len(self.doubled)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.doubled[i][j], 2)

    def rows(self) -> list[list[Fraction]]:
        return [[Fraction(x, 2) for x in row] for row in self.doubled]

    def determinant(self) -> Fraction:
        return det(self.rows())

    @classmethod
    def from_entries(cls, rows) -> "HalfIntegralMatrix":
        doubled = []
        for row in rows:
            out = []
            for x in row:
                y = 2 * Fraction(x)
                if y.denominator != 1:
                    raise ValueError(f"entry {x} is not half-integral")
                out.append(y.numerator)
            doubled.append(tuple(out))
        return cls(tuple(doubled))


def moment_matrix(lattice: EvenLattice, vectors) -> HalfIntegralMatrix:
    """Moment matrix of a tuple: T with 2T[i][j] = (lam_i, lam_j)."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("moment matrix needs at least one vector")
    doubled = tuple(
        tuple(inner(lattice, v, w) for w in vectors) for v in vectors
    )
    return HalfIntegralMatrix(doubled)


def is_primitive(lam) -> bool:
    """A nonzero vector is primitive when its coordinate gcd is 1."""
    g = gcd(*lam)
    if g == 0:
        raise ValueError("the zero vector is neither primitive nor imprimitive")
    return g == 1


def primitive_part(lam) -> tuple[tuple[int, ...], int]:
    """(lam/t, t) with t the coordinate gcd; q scales by t^2."""
    g = gcd(*lam)
    if g == 0:
        raise ValueError("the zero vector has no primitive part")
    return tuple(x // g for x in lam), g


def vector_of_norm(
    lattice: EvenLattice, m: int, require_primitive: bool = True
) -> tuple[int, ...]:
    """Witness vector of norm q = m: e + m f in the first hyperbolic plane.

    The construction is primitive for every m >= 1, so the flag only
    records the caller's expectation.
    """
    if m < 1:
        raise ValueError(f"norm must be >= 1, got {m}")
    v = (1, m) + (0,) * (lattice.rank - 2)
    if require_primitive and not is_primitive(v):
        raise AssertionError("witness construction must be primitive")
    return v


def _second_block_vector(lattice: EvenLattice, m: int) -> tuple[int, ...]:
    # e + m f in the second hyperbolic plane; orthogonal to the first block
    return (0, 0, 1, m) + (0,) * (lattice.rank - 4)


def is_positive_definite(t: HalfIntegralMatrix) -> bool:
    """Exact check via leading principal minors of T."""
    rows = t.rows()
    for r in range(1, t.dimension + 1):
        minor = det([row[:r] for row in rows[:r]])
        if minor <= 0:
            return False
    return True


def gauss_reduce(
    t: HalfIntegralMatrix,
) -> tuple[HalfIntegralMatrix, tuple[tuple[int, int], tuple[int, int]]]:
    """Unique GL_2(Z) representative of a positive definite binary T.

    Returns (T_reduced, u) with u^t T u = T_reduced and det u = +-1.  In
    integral form coordinates (a, b, c) = (T11, 2 T12, T22) the
    representative satisfies 0 <= b <= a <= c; the sign normalization of b
    uses the determinant -1 element diag(1, -1), which is what makes
    GL_2(Z)-translates land on one representative.
    """
    if t.dimension != 2:
        raise ValueError("Gauss reduction is implemented for d = 2 only")
    if not is_positive_definite(t):
        raise ValueError("Gauss reduction needs a positive definite matrix")
    a, b, c = t.doubled[0][0] // 2, t.doubled[0][1], t.doubled[1][1] // 2
    u = ((1, 0), (0, 1))

    def mul(p, q):
        return (
            (p[0][0] * q[0][0] + p[0][1] * q[1][0],
             p[0][0] * q[0][1] + p[0][1] * q[1][1]),
            (p[1][0] * q[0][0] + p[1][1] * q[1][0],
             p[1][0] * q[0][1] + p[1][1] * q[1][1]),
        )

    while True:
        if not (-a < b <= a):
            shift = (a - b) // (2 * a)
            b, c = b + 2 * a * shift, a * shift * shift + b * shift + c
            u = mul(u, ((1, shift), (0, 1)))
        if a > c:
            a, c = c, a
            u = mul(u, ((0, 1), (1, 0)))
            continue
        break
    if b < 0:
        b = -b
        u = mul(u, ((1, 0), (0, -1)))
    reduced = HalfIntegralMatrix(((2 * a, b), (b, 2 * c)))
    assert u[0][0] * u[1][1] - u[0][1] * u[1][0] in (1, -1)
    assert _congruent(t, u) == reduced.doubled
    return reduced, u


def _congruent(t: HalfIntegralMatrix, u) -> tuple[tuple[int, ...], ...]:
    """Doubled entries of u^t T u."""
    d = t.dimension
    m = t.doubled
    ut_m = [
        [sum(u[k][i] * m[k][j] for k in range(d)) for j in range(d)]
        for i in range(d)
    ]
    return tuple(
        tuple(sum(ut_m[i][k] * u[k][j] for k in range(d)) for j in range(d))
        for i in range(d)
    )


def transform(t: HalfIntegralMatrix, u) -> HalfIntegralMatrix:
    """The GL_d(Z) action T -> u^t T u on moment matrices."""
    return HalfIntegralMatrix(_congruent(t, u))


@dataclass(frozen=True)
class FamilyEntry:
    """One member of the common-component family: the scaled tuple, its
    moment matrix, and the exactness checks on it."""

    j: int
    vectors: tuple[tuple[int, ...], tuple[int, ...]]
    moment: HalfIntegralMatrix
    determinant: Fraction
    moment_is_expected_diagonal: bool
    span_matches_base: bool


def common_component_family(
    lattice: EvenLattice, m: int, j_max: int
) -> list[FamilyEntry]:
    """Tuples (j lam1, lam2) sharing one orthogonal complement.

    lam1 and lam2 sit in the two hyperbolic planes with q(lam1) = 1 and
    q(lam2) = m, so the moment matrices are diag(j^2 q(lam1), m) of
    strictly increasing determinant while all tuples span one rational
    plane.
    """
    if m < 1:
        raise ValueError(f"norm must be >= 1, got {m}")
    if j_max < 2:
        raise ValueError(f"need j_max >= 2 for a family, got {j_max}")
    lam1 = vector_of_norm(lattice, 1)
    lam2 = _second_block_vector(lattice, m)
    if inner(lattice, lam1, lam2) != 0:
        raise AssertionError("family base vectors must be orthogonal")
    q1 = norm_q(lattice, lam1)
    base_span = rref([lam1, lam2])
    out = []
    for j in range(1, j_max + 1):
        scaled = tuple(j * x for x in lam1)
        moment = moment_matrix(lattice, (scaled, lam2))
        expected = HalfIntegralMatrix(
            ((2 * j * j * q1, 0), (0, 2 * m))
        )
        out.append(
            FamilyEntry(
                j=j,
                vectors=(scaled, lam2),
                moment=moment,
                determinant=moment.determinant(),
                moment_is_expected_diagonal=(moment == expected),
                span_matches_base=(rref([scaled, lam2]) == base_span),
            )
        )
    return out


def lattice_signature(lattice: EvenLattice) -> tuple[int, int]:
    """Inertia of the Gram matrix, computed exactly (congruence reduction)."""
    return gram_signature(lattice.gram)


def lattice_determinant(lattice: EvenLattice) -> int:
    d = det(lattice.gram)
    assert d.denominator == 1
    return d.numerator


def matrix_to_json(t: HalfIntegralMatrix) -> str:
    """JSON with integer rows of the doubled matrix, tagged doubled: true."""
    return json.dumps(
        {
            "dimension": t.dimension,
            "doubled": True,
            "rows": [list(row) for row in t.doubled],
        },
        sort_keys=True,
    )


def gram_to_json(lattice: EvenLattice) -> str:
    return json.dumps(
        {
            "gram": [list(row) for row in lattice.gram],
            "rank": lattice.rank,
            "signature": list(lattice.signature),
        },
        sort_keys=True,
    )

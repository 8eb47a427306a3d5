"""Exact q-expansion engine for level-1 modular forms.

A form of even weight k is represented by the first N coefficients of its
q-expansion, all exact rationals.  The module provides the normalized
Eisenstein series E_k, the discriminant cusp form, the weight-k dimension
formula, and echelonized (Miller) bases obtained by exact row reduction of
the monomials E_4^a E_6^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import rank, rref
from .numtheory import bernoulli, sigma

__all__ = [
    "QSeries",
    "MillerBasis",
    "dim_mk",
    "eisenstein",
    "delta",
    "multiply",
    "power",
    "linear_combine",
    "miller_basis",
    "dump_miller_basis",
    "load_miller_basis",
]


@dataclass(frozen=True)
class QSeries:
    """Truncated q-expansion: coefficients of q^0 .. q^(N-1), exact.

    The weight is carried along so that arithmetic can enforce the usual
    rules (addition needs equal weights, multiplication adds them).
    """

    weight: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) < 1:
            raise ValueError("a QSeries needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def precision(self) -> int:
        return len(self.coefficients)

    def coefficient(self, m: int) -> Fraction:
        if not 0 <= m < self.precision:
            raise ValueError(
                f"coefficient index {m} outside precision {self.precision}"
            )
        return self.coefficients[m]

    def truncate(self, n: int) -> "QSeries":
        if not 1 <= n <= self.precision:
            raise ValueError(f"cannot truncate precision {self.precision} to {n}")
        return QSeries(self.weight, self.coefficients[:n])

    def __add__(self, other: "QSeries") -> "QSeries":
        if self.weight != other.weight:
            raise ValueError(
                f"cannot add weights {self.weight} and {other.weight}"
            )
        n = min(self.precision, other.precision)
        return QSeries(
            self.weight,
            tuple(self.coefficients[i] + other.coefficients[i] for i in range(n)),
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(self.weight, tuple(c * a for a in self.coefficients))

    def __mul__(self, other: "QSeries") -> "QSeries":
        return multiply(self, other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


def multiply(a: QSeries, b: QSeries) -> QSeries:
    """Truncated Cauchy product; weights add, precision is the minimum."""
    n = min(a.precision, b.precision)
    ac, bc = a.coefficients, b.coefficients
    out = [Fraction(0)] * n
    for i in range(n):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj != 0:
                out[i + j] += ai * bj
    return QSeries(a.weight + b.weight, tuple(out))


def power(a: QSeries, e: int) -> QSeries:
    """a**e by binary powering, truncated at a's precision."""
    if e < 0:
        raise ValueError(f"power requires e >= 0, got {e}")
    result = QSeries(0, (Fraction(1),) + (Fraction(0),) * (a.precision - 1))
    base = a
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def linear_combine(scalars, series) -> QSeries:
    """Exact linear combination of series of one common weight."""
    series = list(series)
    scalars = [Fraction(s) for s in scalars]
    if len(scalars) != len(series) or not series:
        raise ValueError("need equally many scalars and series, at least one")
    weight = series[0].weight
    if any(f.weight != weight for f in series):
        raise ValueError("weight mismatch in linear_combine")
    n = min(f.precision for f in series)
    out = [Fraction(0)] * n
    for s, f in zip(scalars, series):
        if s == 0:
            continue
        for i in range(n):
            out[i] += s * f.coefficients[i]
    return QSeries(weight, tuple(out))


def dim_mk(k: int) -> int:
    """Dimension of the space of level-1 modular forms of weight k."""
    if k < 0 or k % 2 == 1 or k == 2:
        return 0
    return k // 12 + (0 if k % 12 == 2 else 1)


def eisenstein(k: int, precision: int) -> QSeries:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum_m sigma_{k-1}(m) q^m."""
    if k % 2 == 1 or k < 4:
        raise ValueError(f"Eisenstein series needs even k >= 4, got {k}")
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    factor = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)]
    for m in range(1, precision):
        coeffs.append(factor * sigma(k - 1, m))
    return QSeries(k, tuple(coeffs))


def delta(precision: int) -> QSeries:
    """The discriminant cusp form (E_4^3 - E_6^2)/1728 of weight 12."""
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    return (power(e4, 3) - power(e6, 2)).scale(Fraction(1, 1728))


def monomial_exponents(k: int) -> list[tuple[int, int]]:
    """All (a, b) with 4a + 6b = k, a, b >= 0; one per basis monomial E_4^a E_6^b."""
    out = []
    b = 0
    while 6 * b <= k:
        if (k - 6 * b) % 4 == 0:
            out.append(((k - 6 * b) // 4, b))
        b += 1
    return out


def monomial_span(k: int, precision: int) -> list[QSeries]:
    """The monomials E_4^a E_6^b of weight k, truncated q-expansions."""
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    if k == 0:
        one = QSeries(0, (Fraction(1),) + (Fraction(0),) * (precision - 1))
        return [one]
    e4 = eisenstein(4, precision) if k >= 4 else None
    e6 = eisenstein(6, precision) if k >= 6 else None
    out = []
    for a, b in monomial_exponents(k):
        f = QSeries(0, (Fraction(1),) + (Fraction(0),) * (precision - 1))
        if a:
            f = multiply(f, power(e4, a))
        if b:
            f = multiply(f, power(e6, b))
        out.append(QSeries(k, f.coefficients))
    return out


@dataclass(frozen=True)
class MillerBasis:
    """Echelon basis f_0 .. f_{d-1} of weight-k forms: f_i = q^i + O(q^d)."""

    weight: int
    basis: tuple[QSeries, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def precision(self) -> int:
        return self.basis[0].precision if self.basis else 0


def miller_basis(k: int, precision: int) -> MillerBasis:
    """Echelonized basis of weight-k forms via exact row reduction.

    Empty spaces (odd k, k = 2, k < 0) yield a dimension-0 basis rather
    than an error.
    """
    d = dim_mk(k)
    if d == 0:
        return MillerBasis(k, ())
    if precision < max(1, d):
        raise ValueError(
            f"precision {precision} too small for dimension {d} at weight {k}"
        )
    rows = rref([f.coefficients for f in monomial_span(k, precision)])
    if len(rows) != d:
        raise AssertionError(
            f"monomial span rank {len(rows)} != dimension {d} at weight {k}"
        )
    return MillerBasis(k, tuple(QSeries(k, tuple(r)) for r in rows))


def matrix_rank(rows) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    return rank(rows)


def dump_miller_basis(basis: MillerBasis) -> str:
    """Serialize to the on-disk text format (bit-exact round trip).

    Header line "weight k, dimension d, precision N", then d lines of N
    rationals written as "p/q" separated by single spaces.
    """
    lines = [
        f"weight {basis.weight}, dimension {basis.dimension}, "
        f"precision {basis.precision}"
    ]
    for f in basis.basis:
        lines.append(
            " ".join(f"{c.numerator}/{c.denominator}" for c in f.coefficients)
        )
    return "\n".join(lines) + "\n"


def load_miller_basis(text: str) -> MillerBasis:
    """Parse the text format written by dump_miller_basis."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty basis file")
    header = lines[0].split(", ")
    if len(header) != 3:
        raise ValueError(f"malformed header: {lines[0]!r}")
    fields = {}
    for part in header:
        name, _, value = part.partition(" ")
        fields[name] = int(value)
    if set(fields) != {"weight", "dimension", "precision"}:
        raise ValueError(f"malformed header: {lines[0]!r}")
    k, d, n = fields["weight"], fields["dimension"], fields["precision"]
    if len(lines) != 1 + d:
        raise ValueError(f"expected {d} coefficient lines, got {len(lines) - 1}")
    basis = []
    for line in lines[1:]:
        tokens = line.split(" ")
        if len(tokens) != n:
            raise ValueError(f"expected {n} coefficients per line, got {len(tokens)}")
        coeffs = []
        for tok in tokens:
            p, _, q = tok.partition("/")
            coeffs.append(Fraction(int(p), int(q)))
        basis.append(QSeries(k, tuple(coeffs)))
    out = MillerBasis(k, tuple(basis))
    if out.dimension != dim_mk(k):
        raise ValueError(
            f"file claims dimension {out.dimension}, weight {k} has {dim_mk(k)}"
        )
    return out

"""Cohomology classes of Heegner divisors as coefficient functionals.

A degree-2 class is identified with its preimage in the dual of the
weight-k form space: the functional c_m extracts the m-th q-coefficient,
the Heegner divisor class corresponds to c_m, the Kähler class to -c_0,
and primitive Heegner classes arise by Möbius inversion over square
divisors.  Coordinates are taken in the basis dual to a Miller basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .numtheory import factorize, moebius, sigma, square_divisors, zeta_negative
from .qseries import MillerBasis, QSeries, eisenstein

__all__ = [
    "FunctionalCombo",
    "ClassVector",
    "IdentityReport",
    "heegner_class",
    "omega_class",
    "primitive_heegner_class",
    "heegner_from_primitive",
    "coordinates",
    "evaluate",
    "eisenstein_coefficient_identity",
    "primitive_eisenstein_identity",
    "limit_prefactor",
    "weight_for_signature",
]


def weight_for_signature(n: int) -> int:
    """The form weight 1 + n/2 attached to signature (n, 2); must be even >= 4."""
    if n % 2 != 0 or (1 + n // 2) % 2 != 0 or 1 + n // 2 < 4:
        raise ValueError(
            f"signature parameter n={n} does not give an even weight >= 4"
        )
    return 1 + n // 2


@dataclass(frozen=True)
class FunctionalCombo:
    """Finite combination sum_m a_m c_m of coefficient functionals.

    Terms are stored sorted by index with zero coefficients dropped.
    """

    weight: int
    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = tuple(
            (m, Fraction(a)) for m, a in sorted(self.terms) if a != 0
        )
        if any(m < 0 for m, _ in cleaned):
            raise ValueError("functional indices must be >= 0")
        if len({m for m, _ in cleaned}) != len(cleaned):
            raise ValueError("duplicate functional indices")
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_dict(cls, weight: int, terms: dict[int, Fraction]) -> "FunctionalCombo":
        return cls(weight, tuple(terms.items()))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def max_index(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def __add__(self, other: "FunctionalCombo") -> "FunctionalCombo":
        if self.weight != other.weight:
            raise ValueError("weight mismatch")
        acc = dict(self.terms)
        for m, a in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + a
        return FunctionalCombo(self.weight, tuple(acc.items()))

    def scale(self, c) -> "FunctionalCombo":
        c = Fraction(c)
        return FunctionalCombo(self.weight, tuple((m, c * a) for m, a in self.terms))


@dataclass(frozen=True)
class ClassVector:
    """Coordinates of a functional in the basis dual to a Miller basis."""

    weight: int | None
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def heegner_class(m: int, k: int) -> FunctionalCombo:
    """Class of the m-th Heegner divisor: the single functional c_m."""
    if m < 1:
        raise ValueError(f"Heegner index must be >= 1, got {m}")
    return FunctionalCombo(k, ((m, Fraction(1)),))


def omega_class(k: int) -> FunctionalCombo:
    """Class of the Kähler form: -c_0."""
    return FunctionalCombo(k, ((0, Fraction(-1)),))


def primitive_heegner_class(m: int, k: int) -> FunctionalCombo:
    """Primitive Heegner class P_m = sum over t^2 | m of mu(t) c_{m/t^2}."""
    if m < 1:
        raise ValueError(f"Heegner index must be >= 1, got {m}")
    acc: dict[int, Fraction] = {}
    for t in square_divisors(m):
        mu = moebius(t)
        if mu:
            idx = m // (t * t)
            acc[idx] = acc.get(idx, Fraction(0)) + mu
    return FunctionalCombo.from_dict(k, acc)


def heegner_from_primitive(m: int, k: int) -> FunctionalCombo:
    """Rebuild H_m as the sum of P_{m/t^2} over square divisors, expanded."""
    if m < 1:
        raise ValueError(f"Heegner index must be >= 1, got {m}")
    out = FunctionalCombo(k, ())
    for t in square_divisors(m):
        out = out + primitive_heegner_class(m // (t * t), k)
    return out


def coordinates(combo: FunctionalCombo, basis: MillerBasis) -> ClassVector:
    """Coordinate i is the combo applied to the i-th Miller basis element."""
    if combo.weight != basis.weight:
        raise ValueError(
            f"combo weight {combo.weight} != basis weight {basis.weight}"
        )
    if combo.terms and basis.precision <= combo.max_index():
        raise ValueError(
            f"basis precision {basis.precision} too small for index "
            f"{combo.max_index()}"
        )
    coords = tuple(
        sum((a * f.coefficients[m] for m, a in combo.terms), Fraction(0))
        for f in basis.basis
    )
    return ClassVector(combo.weight, coords)


def evaluate(combo: FunctionalCombo, f: QSeries) -> Fraction:
    """Apply the functional to a form: sum_m a_m (coefficient of q^m in f)."""
    if combo.weight != f.weight:
        raise ValueError(f"combo weight {combo.weight} != form weight {f.weight}")
    if combo.terms and f.precision <= combo.max_index():
        raise ValueError(
            f"precision {f.precision} too small for index {combo.max_index()}"
        )
    return sum((a * f.coefficients[m] for m, a in combo.terms), Fraction(0))


@dataclass(frozen=True)
class IdentityReport:
    """Two exact evaluations of one quantity, and whether they agree."""

    m: int
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def record(self) -> str:
        """Line format "m, n, lhs(p/q), rhs(p/q), equal(bool)"."""
        return (
            f"{self.m}, {self.n}, "
            f"{self.lhs.numerator}/{self.lhs.denominator}, "
            f"{self.rhs.numerator}/{self.rhs.denominator}, "
            f"{str(self.equal).lower()}"
        )


def eisenstein_coefficient_identity(
    m: int, n: int, series: QSeries | None = None
) -> IdentityReport:
    """Check c_m(E_{1+n/2}) == 2 sigma_{n/2}(m) / zeta(-n/2), both sides exact.

    The left side reads the q-expansion; the right side is the closed form.
    A precomputed Eisenstein series may be passed to amortize scans.
    """
    k = weight_for_signature(n)
    if m < 1:
        raise ValueError(f"coefficient index must be >= 1, got {m}")
    if series is None:
        series = eisenstein(k, m + 1)
    lhs = evaluate(heegner_class(m, k), series)
    rhs = 2 * sigma(n // 2, m) / zeta_negative(n // 2)
    return IdentityReport(m, n, lhs, rhs)


def primitive_eisenstein_identity(
    m: int, n: int, series: QSeries | None = None
) -> IdentityReport:
    """Check the primitive-class evaluation against its Euler-product form.

    Left: sum over t^2 | m of mu(t) c_{m/t^2}(E_{1+n/2}) from the
    q-expansion.  Right: (2 m^{n/2} / zeta(-n/2)) * prod_{p | m} (1 + p^{-n/2}),
    cleared to a single exact rational.
    """
    k = weight_for_signature(n)
    if m < 1:
        raise ValueError(f"class index must be >= 1, got {m}")
    if series is None:
        series = eisenstein(k, m + 1)
    lhs = evaluate(primitive_heegner_class(m, k), series)
    s = n // 2
    rhs = Fraction(2 * m**s) / zeta_negative(s)
    for p in factorize(m).primes:
        rhs *= 1 + Fraction(1, p**s)
    return IdentityReport(m, n, lhs, rhs)


def limit_prefactor(r: int, r_prime: int) -> Fraction:
    """Scalar r!/r'! in front of the wedge image of a limit class, r <= r'."""
    if r < 1 or r_prime < 1:
        raise ValueError("dimensions must be positive")
    if r > r_prime:
        raise ValueError(f"need r <= r', got r={r}, r'={r_prime}")
    return Fraction(factorial(r), factorial(r_prime))

"""Exact combinatorial machinery.

Polynomials are dense coefficient tuples over int/Fraction, normalized so
the zero polynomial is the empty tuple with degree NEG_INFINITY.  The
binomial coefficient is the generalized one: binomial(x, k) is the
polynomial x(x-1)...(x-k+1)/k! evaluated at any integer or rational x,
zero for k < 0.  Stirling numbers of the first kind are stored unsigned,
fixed by the expansion

    k! * binomial(x, k) = sum_j (-1)**(k-j) * s1(k, j) * x**j,

which is the convention the scaled basis-change identities below need.
Bernoulli polynomials use the B_1 = -1/2 normalization, i.e. B_m(x) is the
unique polynomial with B_m(x+1) - B_m(x) = m*x**(m-1) and constant term
equal to the m-th Bernoulli number.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InternalInvariantError, InvalidParameterError
from .padic import NEG_INFINITY, PrimePowerModulus, frac_residue, padic_order

__all__ = [
    "Polynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "binomial",
    "binomial_inversion",
    "falling_factorial",
    "stirling1_unsigned",
    "stirling2",
    "weighted_inverse_sequence",
]

# Exact factorials are memoized up to this many entries; factorial orders
# never go through this table (they use the floor sum in padic).
FACTORIAL_MEMO_CEILING = 10**4


@lru_cache(maxsize=FACTORIAL_MEMO_CEILING)
def _factorial(n: int) -> int:
    return math.factorial(n)


def binomial(x: "int | Fraction", k: int) -> "int | Fraction":
    """Generalized binomial coefficient: falling_factorial(x, k) / k!.

    Zero for k < 0.  Integer for integer x (also when x is negative, via
    binomial(-x+k-1, k) up to sign).
    """
    if k < 0:
        return 0
    if isinstance(x, int):
        if x >= 0:
            return math.comb(x, k) if k <= x else 0
        return (-1) ** k * math.comb(-x + k - 1, k)
    return Fraction(falling_factorial(x, k), _factorial(k))


def falling_factorial(x: "int | Fraction", j: int) -> "int | Fraction":
    """x(x-1)...(x-j+1), with the empty product 1 at j == 0."""
    if j < 0:
        raise InvalidParameterError(f"falling factorial needs j >= 0, got {j}")
    out: "int | Fraction" = 1
    for i in range(j):
        out *= x - i
    return out


@lru_cache(maxsize=None)
def _stirling2_row(l: int) -> tuple[int, ...]:
    if l == 0:
        return (1,)
    prev = _stirling2_row(l - 1)
    row = [0] * (l + 1)
    for j in range(1, l + 1):
        row[j] = j * (prev[j] if j < l else 0) + prev[j - 1]
    return tuple(row)


def stirling2(l: int, j: int) -> int:
    """Stirling number of the second kind: partitions of l labels into j blocks."""
    if l < 0 or j < 0:
        raise InvalidParameterError("Stirling numbers need nonnegative indices")
    if j > l:
        return 0
    return _stirling2_row(l)[j]


@lru_cache(maxsize=None)
def _stirling1_row(l: int) -> tuple[int, ...]:
    if l == 0:
        return (1,)
    prev = _stirling1_row(l - 1)
    row = [0] * (l + 1)
    for j in range(l + 1):
        row[j] = (l - 1) * (prev[j] if j < l else 0) + (prev[j - 1] if j >= 1 else 0)
    return tuple(row)


def stirling1_unsigned(l: int, j: int) -> int:
    """Unsigned Stirling number of the first kind (cycle counts)."""
    if l < 0 or j < 0:
        raise InvalidParameterError("Stirling numbers need nonnegative indices")
    if j > l:
        return 0
    return _stirling1_row(l)[j]


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """k-th Bernoulli number with B_1 = -1/2, via the defining recurrence
    sum_{j<=k} binomial(k+1, j) * B_j == 0 for k >= 1."""
    if k < 0:
        raise InvalidParameterError(f"Bernoulli index must be nonnegative, got {k}")
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        acc += math.comb(k + 1, j) * bernoulli_number(j)
    return -acc / (k + 1)


class Polynomial:
    """Dense polynomial over exact coefficients (int or Fraction).

    Immutable and hashable; trailing zero coefficients are trimmed so equal
    polynomials compare equal.  Evaluation at int/Fraction points is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable["int | Fraction"] = ()):  # low degree first
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: "int | Fraction" = 1) -> "Polynomial":
        if k < 0:
            raise InvalidParameterError(f"monomial degree must be >= 0, got {k}")
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> "int | float":
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def has_integer_coeffs(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.coeffs)

    def __call__(self, x: "int | Fraction") -> "int | Fraction":
        acc: "int | Fraction" = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shifted(self, c: "int | Fraction") -> "Polynomial":
        """Composition with x + c."""
        out = Polynomial(())
        xc = Polynomial((c, 1))
        power = Polynomial((1,))
        for a in self.coeffs:
            out = out + power * a
            power = power * xc
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


@lru_cache(maxsize=None)
def bernoulli_polynomial(m: int) -> Polynomial:
    """B_m(x) = sum_k binomial(m, k) * B_k * x**(m-k)."""
    if m < 0:
        raise InvalidParameterError(f"Bernoulli index must be nonnegative, got {m}")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = math.comb(m, k) * bernoulli_number(k)
    return Polynomial(coeffs)


def binomial_inversion(seq: Sequence["int | Fraction"]) -> list:
    """d_n = sum_k binomial(n, k) * (-1)**k * b_k; applying it twice is the
    identity, which makes it its own inverse transform."""
    out = []
    for n in range(len(seq)):
        acc = 0
        for k in range(n + 1):
            term = math.comb(n, k) * seq[k]
            acc = acc + term if k % 2 == 0 else acc - term
        out.append(acc)
    return out


def weighted_inverse_sequence(
    pm: PrimePowerModulus, r: int, f: Polynomial, n_max: int
) -> list[Fraction]:
    """The p-integral sequence (a_n) realizing a prescribed weighted transform.

    With h = p**(alpha-1) and weights w_n = floor(n/h)! * binomial({r}_h +
    {n-r}_h, {r}_h), each a_n is fixed by

        w_n * a_n = sum_{k == r mod p**alpha} binomial(n, k) * (-1)**k
                    * p**deg(f) * f((k - r) / p**alpha),

    equivalently: feeding b_n = w_n * a_n through binomial_inversion returns
    p**deg(f) * f((n-r)/p**alpha) when p**alpha divides n - r and 0 otherwise.
    Every a_n is guaranteed p-integral; a negative order would contradict the
    order bound for these sums, so it raises InternalInvariantError.
    """
    if pm.alpha < 1:
        raise InvalidParameterError("the inverse sequence needs alpha >= 1")
    if f.is_zero:
        raise InvalidParameterError("f must be nonzero")
    if not f.has_integer_coeffs:
        raise InvalidParameterError("f must have integer coefficients")
    if n_max < 0:
        raise InvalidParameterError(f"n_max must be nonnegative, got {n_max}")
    p, m = pm.p, pm.m
    h = p ** (pm.alpha - 1)
    l = f.degree
    scale = p**l
    out: list[Fraction] = []
    for n in range(n_max + 1):
        acc = 0
        for k in range(r % m, n + 1, m):
            term = math.comb(n, k) * f((k - r) // m)
            acc = acc + term if k % 2 == 0 else acc - term
        rh, nrh = frac_residue(r, h), frac_residue(n - r, h)
        mult = _factorial(n // h) * math.comb(rh + nrh, rh)
        a = Fraction(scale * acc, mult)
        if padic_order(p, a) < 0:
            raise InternalInvariantError(
                f"inverse sequence left p-integrality at n={n} (p={p}, alpha={pm.alpha}, r={r})"
            )
        out.append(a)
    return out

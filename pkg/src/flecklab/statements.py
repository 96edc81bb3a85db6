"""Catalog of checkable statements.

Each entry couples a short opaque id (the token the CLI accepts) with a
check over one tuple of integer parameters.  A check returns True on
success, the SKIP marker when the instance fails the statement's
precondition, or an (observed, expected) pair describing the failure.
Default sweep grids are part of each entry; axes whose sensible range
depends on earlier axes (for example a residue window that scales with
the modulus) are derived on the fly and documented as such in reports.

Conjectural statements carry kind "conjecture".  They are searched, never
asserted: a failing instance is reported as a counterexample, it does not
invalidate the library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .combinatorics import (
    Polynomial,
    bernoulli_polynomial,
    binomial,
    binomial_inversion,
    stirling2,
    weighted_inverse_sequence,
)
from .errors import InternalInvariantError, InvalidParameterError
from .padic import (
    INFINITY,
    PrimePowerModulus,
    carries,
    factorial_order,
    frac_residue,
    padic_order,
    scaled_floor,
    scaled_residue,
)
from .quantities import convolution_weight, fleck_sum_value, normalized_sum_value
from .sums import (
    alt_sum_binom,
    alt_sum_power,
    convolution_identity_holds,
    degree_order_bound,
    floor_order_bound,
    integer_valued_order_bound,
    plain_alt_sum,
    series_coefficient,
    unsigned_class_sum,
)

__all__ = [
    "SKIP",
    "STATEMENTS",
    "SEARCHES",
    "STATEMENT_IDS",
    "SEARCH_IDS",
    "DerivedAxis",
    "Statement",
    "check_digit_product_congruence",
    "check_exact_attainment",
    "check_factorial_ceiling",
    "check_fleck_reduction",
    "check_fleck_shift_chain",
    "check_harmonic_congruence",
    "check_lucas_reduction",
    "check_normalized_refinement",
    "check_parity_criterion",
    "check_parity_delta",
    "check_scaled_binomial_congruence",
]

SKIP = "skip"


@dataclass(frozen=True)
class DerivedAxis:
    """An axis whose default values are computed from the axes before it."""

    description: str
    fn: Callable[[dict], Sequence[int]]


@dataclass(frozen=True)
class Statement:
    id: str
    kind: str  # "theorem" or "conjecture"
    description: str
    axes: tuple[str, ...]
    defaults: Mapping[str, object]  # axis -> tuple of ints, or DerivedAxis
    check: Callable[..., object]


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _rational_residue(x: "int | Fraction", p: int) -> int:
    """Least nonnegative residue mod p of a rational with nonnegative order."""
    fr = Fraction(x)
    return fr.numerator * pow(fr.denominator, -1, p) % p


def _normalize(x: int, p: int, w: int) -> Fraction:
    """x * p**(-w) as an exact rational, for either sign of w."""
    return Fraction(x, p**w) if w >= 0 else Fraction(x * p**-w)


# ---------------------------------------------------------------------------
# named boolean checks
# ---------------------------------------------------------------------------


def check_lucas_reduction(p: int, alpha: int, l: int, n: int, r: int) -> bool:
    """One digit-reduction step for normalized sums at level alpha + 1:

        V(alpha+1; l, n, r) == (-1)**{r}_p * binomial({n}_p, {r}_p)
                               * V(alpha; l, n//p, r//p)   (mod p)

    Proven for alpha >= 2; smaller alpha is rejected (the alpha = 1 case is
    conjectural and lives under the search ids).
    """
    if alpha < 2:
        raise InvalidParameterError("the digit reduction needs alpha >= 2")
    lhs = normalized_sum_value(p, alpha + 1, l, n, r)
    rhs = (-1) ** (r % p) * math.comb(n % p, r % p) * normalized_sum_value(
        p, alpha, l, n // p, r // p
    )
    return padic_order(p, lhs - rhs) >= 1


def check_digit_product_congruence(
    p: int, alpha: int, l: int, n: int, r: int, s: int, t: int
) -> bool:
    """Splitting the top digit out of both binomial arguments:

        (1/floor(n/h)!) * sum_{k == r (m)} binomial(pn+s, pk+t) (-1)**(pk) ((k-r)/h)**l
          == (1/floor(n/h)!) * binomial(s,t) * sum_{k == r (m)} binomial(n,k) (-1)**k ((k-r)/h)**l
             (mod p)

    with m = p**alpha, h = p**(alpha-1), 0 <= s, t < p, alpha >= 2.
    """
    if alpha < 2:
        raise InvalidParameterError("needs alpha >= 2")
    if not (0 <= s < p and 0 <= t < p):
        raise InvalidParameterError("digits s, t must lie in [0, p)")
    m = p**alpha
    h = p ** (alpha - 1)
    big_n = p * n + s
    lh = 0
    for k in range(r % m, n + 1, m):
        term = math.comb(big_n, p * k + t) * ((k - r) // h) ** l
        lh = lh + term if (p * k) % 2 == 0 else lh - term
    cst = math.comb(s, t)
    rh = 0
    for k in range(r % m, n + 1, m):
        term = math.comb(n, k) * cst * ((k - r) // h) ** l
        rh = rh + term if k % 2 == 0 else rh - term
    return padic_order(p, Fraction(lh - rh, math.factorial(n // h))) >= 1


def check_normalized_refinement(p: int, alpha: int, n: int, r: int, s: int, t: int) -> bool:
    """Digit refinement of the normalized unweighted sums, alpha >= 2,
    0 <= s, t < p**(alpha-2):

        p**-floor((c*n+s-p**(alpha-1)) / phi(p**alpha))
            * sum_{k == c*r+t (mod p**alpha)} binomial(c*n+s, k) (-1)**k
          == (-1)**t * binomial(s, t)
             * p**-floor((n-p)/phi(p*p)) * sum_{k == r (mod p*p)} binomial(n, k) (-1)**k
             (mod p),   c = p**(alpha-2).
    """
    if alpha < 2:
        raise InvalidParameterError("needs alpha >= 2")
    c = p ** (alpha - 2)
    if not (0 <= s < c and 0 <= t < c):
        raise InvalidParameterError("digits s, t must lie in [0, p**(alpha-2))")
    big_n = c * n + s
    w1 = (big_n - p ** (alpha - 1)) // (p ** (alpha - 1) * (p - 1))
    lhs = _normalize(plain_alt_sum(big_n, c * r + t, p**alpha), p, w1)
    w2 = (n - p) // (p * (p - 1))
    rhs = (-1) ** t * math.comb(s, t) * _normalize(plain_alt_sum(n, r, p * p), p, w2)
    return padic_order(p, lhs - rhs) >= 1


def check_parity_criterion(alpha: int, n: int, r: int) -> bool:
    """p = 2: the normalized unsigned class sum
    2**-floor((n - 2**(alpha-1)) / 2**(alpha-1)) * sum_{k == r (mod 2**alpha)} binomial(n, k)
    is an odd integer exactly when binomial({n}_c, {r}_c) is odd and, with
    n* = floor(n/c), r* = floor(r/c), c = 2**(alpha-2): either n* > 2 and
    n* != 2 r* + 2 (mod 4), or n* == 2 and r* is even."""
    if alpha < 2:
        raise InvalidParameterError("needs alpha >= 2")
    w = (n - 2 ** (alpha - 1)) // 2 ** (alpha - 1)
    total = unsigned_class_sum(n, r, 2**alpha)
    lhs_odd = total != 0 and padic_order(2, total) == w
    c = 2 ** (alpha - 2)
    n_star, r_star = n // c, r // c
    cond = math.comb(n % c, r % c) % 2 == 1 and (
        (n_star > 2 and (n_star - 2 * r_star - 2) % 4 != 0)
        or (n_star == 2 and r_star % 2 == 0)
    )
    return lhs_odd == cond


def check_exact_attainment(alpha: int, n: int, l: int) -> "bool | None":
    """p = 2, zero class: for l >= floor(n/2**alpha) >= 1 with
    l == floor(n/2**alpha) (mod 2**floor(log2(n/2**alpha))), the order of
    sum binomial(n,k) (-1)**k (k/2**alpha)**l over k == 0 (mod 2**alpha)
    EQUALS the order of floor(n/2**alpha)!.

    Returns None (not an error) when (alpha, n, l) violates the
    precondition, so sweeps count it as a skip.
    """
    if alpha < 0 or n < 0 or l < 0:
        raise InvalidParameterError("alpha, n, l must be nonnegative")
    n0 = n >> alpha
    if n0 < 1 or l < n0:
        return None
    if (l - n0) % 2 ** (n0.bit_length() - 1) != 0:
        return None
    v = alt_sum_power(n, 0, 2**alpha, l)
    return v != 0 and padic_order(2, v) == factorial_order(2, n0)


def check_fleck_reduction(p: int, alpha: int, n: int, r: int) -> bool:
    """Level reduction for Fleck-normalized sums, alpha >= 2: when p | r,
    F(alpha; n, r) == F(alpha-1; n, r/p) mod p**((2 - [p==2])(alpha-2));
    otherwise F(alpha; n, r) == 0 mod p**(alpha-2)."""
    if alpha < 2:
        raise InvalidParameterError("needs alpha >= 2")
    sa = fleck_sum_value(p, alpha, n, r)
    if r % p == 0:
        sb = fleck_sum_value(p, alpha - 1, n, r // p)
        return padic_order(p, sa - sb) >= (2 - (p == 2)) * (alpha - 2)
    return padic_order(p, sa) >= alpha - 2


def check_fleck_shift_chain(p: int, alpha: int, beta: int, n: int, r: int) -> bool:
    """Iterated reduction, alpha > beta >= 0:
    F(alpha; n, p**beta * r) == F(alpha-beta; n, r) mod
    p**((2 - [p==2])(alpha-beta-1)); and when p does not divide r the order
    of F(alpha; n, p**beta r) is at least alpha - beta - 2."""
    if not alpha > beta >= 0:
        raise InvalidParameterError("needs alpha > beta >= 0")
    lhs = fleck_sum_value(p, alpha, n, p**beta * r)
    rhs = fleck_sum_value(p, alpha - beta, n, r)
    if padic_order(p, lhs - rhs) < (2 - (p == 2)) * (alpha - beta - 1):
        return False
    if r % p != 0 and padic_order(p, lhs) < alpha - beta - 2:
        return False
    return True


def check_harmonic_congruence(m: int, n: int, r: int) -> bool:
    """(1/n) * sum_{k<n} 1/(km + r) == 1/r + (m/2)[n even]  (mod m), for
    gcd(r, m) = 1.  The congruence between rationals means: for every prime
    q dividing m, the q-order of the difference is at least the q-order of m."""
    if m < 1 or n < 1:
        raise InvalidParameterError("m and n must be positive")
    if math.gcd(m, r) != 1:
        raise InvalidParameterError("r must be coprime to m")
    acc = Fraction(0)
    for k in range(n):
        acc += Fraction(1, k * m + r)
    diff = acc / n - Fraction(1, r) - (Fraction(m, 2) if n % 2 == 0 else 0)
    return all(padic_order(q, diff) >= padic_order(q, m) for q in _prime_factors(m))


def check_scaled_binomial_congruence(p: int, n: int, k: int) -> bool:
    """binomial(pn, pk) == binomial(n, k) mod p**(2 ord_p(n) + 2) for odd p;
    for p = 2 the right side carries a (-1)**k and the exponent drops to
    2 ord_2(n) + 1."""
    if n < 1 or k < 0:
        raise InvalidParameterError("needs n >= 1 and k >= 0")
    if p == 2:
        diff = math.comb(2 * n, 2 * k) - (-1) ** k * math.comb(n, k)
        need = 2 * padic_order(2, n) + 1
    else:
        diff = math.comb(p * n, p * k) - math.comb(n, k)
        need = 2 * padic_order(p, n) + 2
    return padic_order(p, diff) >= need


def check_factorial_ceiling(p: int, beta: int, q: int, r: int) -> bool:
    """With n = p**beta (pq + r) and {-q}_(p-1) < r < p: the order of n! at
    p attains its ceiling floor((n-1)/(p-1)) exactly when q == 0."""
    if beta < 0 or q < 0:
        raise InvalidParameterError("beta and q must be nonnegative")
    low = (-q) % (p - 1) if p > 2 else 0
    if not low < r < p:
        raise InvalidParameterError("r outside the admissible window")
    n = p**beta * (p * q + r)
    return (factorial_order(p, n) == (n - 1) // (p - 1)) == (q == 0)


def check_parity_delta(alpha: int, c: int, d: int, e: int, l: int) -> bool:
    """p = 2 split arguments: for d < 2**e and 0 <= l <= d,
    V(alpha+1; l, 2**alpha (2**e + d), 2**alpha c) == [l == d]  (mod 2)."""
    if not 0 <= d < 2**e:
        raise InvalidParameterError("needs 0 <= d < 2**e")
    if not 0 <= l <= d:
        raise InvalidParameterError("needs 0 <= l <= d")
    v = normalized_sum_value(2, alpha + 1, l, 2**alpha * (2**e + d), 2**alpha * c)
    return padic_order(2, v - (1 if l == d else 0)) >= 1


# ---------------------------------------------------------------------------
# grid adapters
# ---------------------------------------------------------------------------


def _fail(observed: str, expected: str) -> tuple[str, str]:
    return (observed, expected)


def _t11(p, alpha, n, r, l):
    pm = PrimePowerModulus(p, alpha)
    o = padic_order(p, alt_sum_power(n, r, pm.m, l))
    b1 = degree_order_bound(pm, n, r, l)
    b2 = floor_order_bound(pm, n, r)
    if o >= b1 and o >= b2:
        return True
    return _fail(f"order {o}", f">= {b1} (degree bound) and >= {b2} (floor bound)")


def _t12(p, alpha, n, r, l):
    pm = PrimePowerModulus(p, alpha)
    o = padic_order(p, alt_sum_binom(n, r, pm.m, l))
    b = integer_valued_order_bound(pm, n, r, l)
    return True if o >= b else _fail(f"order {o}", f">= {b}")


def _t13(p, alpha, n, r, l):
    pm = PrimePowerModulus(p, alpha)
    if r < 0 or r <= n - (l + 1) * pm.m:
        return SKIP
    coeff = series_coefficient(pm, n, l, r)
    o = padic_order(p, coeff)
    b = integer_valued_order_bound(pm, n, r, l)
    if o < b:
        return _fail(f"coefficient order {o}", f">= {b}")
    alt = (-1) ** l * alt_sum_binom(n, r + pm.m, pm.m, l)
    if coeff != alt:
        return _fail(f"coefficient {coeff}", f"shifted class sum {alt}")
    return True


_ROUNDTRIP_N = 32


def _t14(p, alpha, r, l):
    pm = PrimePowerModulus(p, alpha)
    f = Polynomial.monomial(l)
    try:
        seq = weighted_inverse_sequence(pm, r, f, _ROUNDTRIP_N)
    except InternalInvariantError as exc:
        return _fail(str(exc), "a p-integral sequence")
    h = p ** (alpha - 1)
    rh = frac_residue(r, h)
    weighted = [
        math.factorial(k // h) * math.comb(rh + frac_residue(k - r, h), rh) * seq[k]
        for k in range(_ROUNDTRIP_N + 1)
    ]
    transform = binomial_inversion(weighted)
    for n in range(_ROUNDTRIP_N + 1):
        want = p**l * f((n - r) // pm.m) if (n - r) % pm.m == 0 else 0
        if transform[n] != want:
            return _fail(f"transform value {transform[n]} at n={n}", f"{want}")
    return True


def _t15(p, alpha, l, n, r):
    if check_lucas_reduction(p, alpha, l, n, r):
        return True
    return _fail("digit-reduction congruence fails mod p", "difference order >= 1")


def _t16(p, alpha, l, n, r, s, t):
    if check_digit_product_congruence(p, alpha, l, n, r, s, t):
        return True
    return _fail("digit-product congruence fails mod p", "difference order >= 1")


def _t17(p, alpha, n, r, s, t):
    if check_normalized_refinement(p, alpha, n, r, s, t):
        return True
    return _fail("normalized refinement fails mod p", "difference order >= 1")


def _t18(alpha, n, l):
    res = check_exact_attainment(alpha, n, l)
    if res is None:
        return SKIP
    if res:
        return True
    n0 = n >> alpha
    o = padic_order(2, alt_sum_power(n, 0, 2**alpha, l))
    return _fail(f"order {o}", f"exactly {factorial_order(2, n0)}")


def _c11cor(p, alpha, m, n, r):
    bp = bernoulli_polynomial(m)
    ma = p**alpha
    acc = Fraction(0)
    for k in range(n + 1):
        term = math.comb(n, k) * bp((k - r) // ma)
        acc = acc + term if k % 2 == 0 else acc - term
    val = Fraction(p ** (m - 1), m) * acc
    bound = factorial_order(p, scaled_floor(n - 1, p, alpha - 1)) + carries(
        p, scaled_residue(r - 1, p, alpha - 1), scaled_residue(n - r, p, alpha - 1)
    )
    o = padic_order(p, val)
    return True if o >= bound else _fail(f"order {o}", f">= {bound}")


def _c12cor(alpha, n, r):
    if check_parity_criterion(alpha, n, r):
        return True
    return _fail("parity of normalized sum disagrees with the digit criterion", "agreement")


def _c31cor(p, alpha, beta, n, r):
    if check_fleck_shift_chain(p, alpha, beta, n, r):
        return True
    return _fail("shift-chain congruence or order floor fails", "both hold")


def _l21(p, n, r, l):
    denom = math.factorial(p * n)
    direct = Fraction(math.factorial(l) * p**l * alt_sum_binom(n, r, 1, l), denom)
    closed = Fraction(math.factorial(l) * p**l * (-1) ** n * binomial(-r, l - n), denom)
    if direct == closed and padic_order(p, direct) >= 0:
        return True
    return _fail(f"direct value {direct}", f"closed form {closed}, p-integral")


def _l22(p, alpha, l, n, r):
    h = p ** (alpha - 1)
    m = p**alpha
    lhs = normalized_sum_value(p, alpha, l, n - 1, r) - normalized_sum_value(
        p, alpha, l, n - 1, r - 1
    )
    step = normalized_sum_value(p, alpha, l, n, r)
    rhs = Fraction(n, h) * step if n % h == 0 else step
    if lhs != rhs:
        return _fail(f"first recurrence: {lhs}", f"{rhs}")
    if l > 0:
        lhs2 = step + Fraction(r, h) * normalized_sum_value(p, alpha, l - 1, n, r + m)
        base = normalized_sum_value(p, alpha, l - 1, n - 1, r + m - 1)
        rhs2 = -base if n % h == 0 else -Fraction(n, h) * base
        if lhs2 != rhs2:
            return _fail(f"second recurrence: {lhs2}", f"{rhs2}")
    return True


def _l23(d, m, n, r, fdeg):
    if convolution_identity_holds(d, m, n, r, Polynomial.monomial(fdeg)):
        return True
    return _fail("splitting identity fails", "exact equality")


def _l24(p, alpha, l, n, r):
    m = p**alpha
    lhs = normalized_sum_value(p, alpha, l, n, r)
    rhs = Fraction(0)
    for j in range(n + 1):
        t0 = normalized_sum_value(p, alpha, 0, j, r)
        if t0 == 0:
            continue
        inner = sum(normalized_sum_value(p, alpha, l, n - j, r + i - j) for i in range(m))
        rhs += convolution_weight(p, alpha, n, j) * t0 * inner
    return True if lhs == rhs else _fail(f"{lhs}", f"self-convolution value {rhs}")


def _l25(p, alpha, n, j):
    o = padic_order(p, convolution_weight(p, alpha, n, j))
    return True if o >= 0 else _fail(f"weight order {o}", ">= 0")


def _t21(p, alpha, l, n, r):
    o = padic_order(p, normalized_sum_value(p, alpha, l, n, r))
    tau = carries(p, scaled_residue(r, p, alpha - 1), scaled_residue(n - r, p, alpha - 1))
    return True if o >= tau else _fail(f"order {o}", f">= carry count {tau}")


def _l31(m, n, r):
    if math.gcd(m, r) != 1 or (m == 1 and r < 1):
        return SKIP
    if check_harmonic_congruence(m, n, r):
        return True
    return _fail("averaged harmonic sum congruence fails", "difference divisible by m")


def _l32(p, n, k):
    if check_scaled_binomial_congruence(p, n, k):
        return True
    return _fail("scaled binomial congruence fails", "stated p-power modulus")


def _t31(p, alpha, n, r):
    if check_fleck_reduction(p, alpha, n, r):
        return True
    return _fail("level-reduction congruence fails", "stated p-power modulus")


def _l41(p, beta, q, r):
    low = (-q) % (p - 1) if p > 2 else 0
    if not low < r < p:
        return SKIP
    if check_factorial_ceiling(p, beta, q, r):
        return True
    return _fail("ceiling attainment disagrees with q == 0", "equivalence")


def _l42(alpha, n, r):
    c = 2**alpha
    if n < 1 or n % c or r % c:
        return SKIP
    v = normalized_sum_value(2, alpha + 1, 0, n, r)
    if (padic_order(2, v) == 0) == (n & (n - 1) == 0):
        return True
    return _fail(f"value {v}", "odd exactly when n is a power of two")


def _t41(alpha, c, e, d, l):
    if check_parity_delta(alpha, c, d, e, l):
        return True
    return _fail("parity differs from the Kronecker delta", "agreement mod 2")


def _r16(n, l):
    lhs = alt_sum_power(n, 0, 1, l)
    rhs = (-1) ** n * math.factorial(n) * stirling2(l, n)
    if lhs != rhs:
        return _fail(f"alternating power sum {lhs}", f"{rhs}")
    if n >= 1 and l >= n and (l - n) % 2 ** (n.bit_length() - 1) == 0:
        if stirling2(l, n) % 2 != 1:
            return _fail(f"stirling2({l},{n}) is even", "odd")
    return True


def _conj11(p, alpha, l, n, r):
    need = 2 if p == 3 else 3
    d = normalized_sum_value(p, alpha + 1, l, p * n, p * r) - normalized_sum_value(
        p, alpha, l, n, r
    )
    o = padic_order(p, d)
    return True if o >= need else _fail(f"difference order {o}", f">= {need}")


def _conj12(p, n, s):
    w1 = (p * n + s - p) // (p * (p - 1))

    def lhs_val(t: int, r: int) -> Fraction:
        return _normalize(plain_alt_sum(p * n + s, p * r + t, p * p), p, w1)

    if n % p == 0 or (n - 1) % (p - 1) != 0:
        w2 = (n - 1) // (p - 1)
        for r in range(p):
            rhs = _normalize(plain_alt_sum(n, r, p), p, w2)
            for t in range(p):
                d = lhs_val(t, r) - (-1) ** t * math.comb(s, t) * rhs
                if padic_order(p, d) < 1:
                    return _fail(f"t={t} r={r}: difference order {padic_order(p, d)}", ">= 1")
        return True
    if s == p - 1:
        return SKIP
    residues = {}
    for t in range(s + 1, p):
        seen = set()
        for r in range(p):
            v = lhs_val(t, r)
            if padic_order(p, v) < 0:
                return _fail(f"t={t} r={r}: value {v} not p-integral", "p-integral value")
            seen.add(_rational_residue(v, p))
        if len(seen) != 1:
            return _fail(f"t={t}: residues {sorted(seen)} vary with r", "one residue for all r")
        residues[t] = seen.pop()
    if s == 0 and n != 1:
        got = sorted(residues[t] for t in range(1, p))
        if got != list(range(1, p)):
            return _fail(f"residues {got}", f"a permutation of 1..{p - 1}")
    return True


def _conj13(p, alpha, n, r, j):
    ma = p**alpha
    if n < 2 * ma - 1:
        return SKIP
    n0 = n // ma
    e = 0
    while p ** (alpha + e + 1) <= n:
        e += 1
    step = (p - 1) * p**e
    base = r // ma + (n - r) // ma
    l = n0 + (base - n0) % step + j * step
    r_star = r % ma
    n_star = r_star + (n - r) % ma
    v = Fraction(
        alt_sum_power(n, r, ma, l), math.factorial(n0) * math.comb(n_star, r_star)
    )
    if padic_order(p, v - 1) >= 1 or padic_order(p, v + 1) >= 1:
        return True
    return _fail(f"normalized value {v}", "congruent to +1 or -1 mod p")


def _conj31(p, alpha, n, r):
    need = 2 * alpha - 2 - (p == 3)
    d = fleck_sum_value(p, alpha, n, p * r) - fleck_sum_value(p, alpha - 1, n, r)
    o = padic_order(p, d)
    return True if o >= need else _fail(f"difference order {o}", f">= {need}")


def _t15_alpha1(p, l, n, r):
    lhs = normalized_sum_value(p, 2, l, n, r)
    rhs = (-1) ** (r % p) * math.comb(n % p, r % p) * normalized_sum_value(
        p, 1, l, n // p, r // p
    )
    o = padic_order(p, lhs - rhs)
    return True if o >= 1 else _fail(f"difference order {o}", ">= 1")


# ---------------------------------------------------------------------------
# default grids
# ---------------------------------------------------------------------------


def _r_window(ctx: dict) -> tuple[int, ...]:
    m = ctx["p"] ** ctx["alpha"]
    return tuple(range(-m, 2 * m))


_R_WINDOW = DerivedAxis("-m .. 2m-1 with m = p**alpha", _r_window)


def _r_window_lifted(ctx: dict) -> tuple[int, ...]:
    hi = min(ctx["p"] ** (ctx["alpha"] + 1), ctx["n"] + ctx["p"] + 2)
    return tuple(range(-2, hi))


def _r_window_capped(ctx: dict) -> tuple[int, ...]:
    hi = min(ctx["p"] ** ctx["alpha"], ctx["n"] + 3)
    return tuple(range(-1, hi))


def _r_window_refinement(ctx: dict) -> tuple[int, ...]:
    hi = min(ctx["p"] ** 2, ctx["n"] + 3)
    return tuple(range(-1, hi))


def _r_residues(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["p"] ** ctx["alpha"]))


def _t18_l_values(ctx: dict) -> tuple[int, ...]:
    n0 = ctx["n"] >> ctx["alpha"]
    if n0 < 1:
        return ()
    e = n0.bit_length() - 1
    return (n0, n0 + 2**e, n0 + 2 ** (e + 1))


def _digits(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["p"]))


def _refinement_digits(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["p"] ** (ctx["alpha"] - 2)))


def _refinement_alpha(ctx: dict) -> tuple[int, ...]:
    return (2, 3, 4) if ctx["p"] < 5 else (2, 3)


def _beta_below_alpha(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["alpha"]))


def _j_upto_n(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["n"] + 1))


def _coprime_window(ctx: dict) -> tuple[int, ...]:
    m = ctx["m"]
    if m == 1:
        return (1, 2)
    pos = [x for x in range(1, m + 1) if math.gcd(x, m) == 1]
    return tuple([-x for x in reversed(pos)] + pos)


def _k_upto_n(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["n"] + 2))


def _fleck_r_window(ctx: dict) -> tuple[int, ...]:
    return tuple(range(-2, ctx["p"] ** ctx["alpha"]))


def _l41_r_window(ctx: dict) -> tuple[int, ...]:
    p, q = ctx["p"], ctx["q"]
    low = (-q) % (p - 1) if p > 2 else 0
    return tuple(range(low + 1, p))


def _l42_n_values(ctx: dict) -> tuple[int, ...]:
    c = 2 ** ctx["alpha"]
    return tuple(range(c, 65, c))


def _l42_r_values(ctx: dict) -> tuple[int, ...]:
    c = 2 ** ctx["alpha"]
    return tuple(c * j for j in range(-2, 4))


def _t41_d_values(ctx: dict) -> tuple[int, ...]:
    return tuple(range(2 ** ctx["e"]))


def _t41_l_values(ctx: dict) -> tuple[int, ...]:
    return tuple(range(ctx["d"] + 1))


def _conj13_n_values(ctx: dict) -> tuple[int, ...]:
    return tuple(range(2 * ctx["p"] ** ctx["alpha"] - 1, 41))


def _t15a1_r_window(ctx: dict) -> tuple[int, ...]:
    hi = min(ctx["p"] ** 2, ctx["n"] + ctx["p"] + 2)
    return tuple(range(-2, hi))


_MAIN = {
    "p": (2, 3, 5),
    "alpha": (0, 1, 2, 3),
    "n": tuple(range(65)),
    "r": _R_WINDOW,
    "l": tuple(range(9)),
}


def _entry(id, kind, description, axes, defaults, check):
    return Statement(id, kind, description, tuple(axes), dict(defaults), check)


STATEMENTS: dict[str, Statement] = {
    s.id: s
    for s in [
        _entry(
            "T1.1",
            "theorem",
            "order of a power-weighted alternating class sum meets the degree bound "
            "and the degree-free floor bound",
            ("p", "alpha", "n", "r", "l"),
            _MAIN,
            _t11,
        ),
        _entry(
            "T1.2",
            "theorem",
            "binomial-coefficient weights obey the integer-valued order bound",
            ("p", "alpha", "n", "r", "l"),
            _MAIN,
            _t12,
        ),
        _entry(
            "T1.3",
            "theorem",
            "series coefficient of (1-x)**n/(1-x**m)**(l+1): order bound plus "
            "agreement with the shifted class sum",
            ("p", "alpha", "n", "r", "l"),
            _MAIN,
            _t13,
        ),
        _entry(
            "T1.4",
            "theorem",
            "the weighted inverse sequence is p-integral and round-trips through "
            "binomial inversion",
            ("p", "alpha", "r", "l"),
            {
                "p": (2, 3, 5),
                "alpha": (1, 2),
                "r": DerivedAxis(
                    "-1 .. m with m = p**alpha",
                    lambda ctx: tuple(range(-1, ctx["p"] ** ctx["alpha"] + 1)),
                ),
                "l": (0, 1, 2),
            },
            _t14,
        ),
        _entry(
            "T1.5",
            "theorem",
            "digit-reduction congruence for normalized sums between levels "
            "alpha+1 and alpha, alpha >= 2",
            ("p", "alpha", "l", "n", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (2, 3),
                "l": (0, 1, 2, 3),
                "n": tuple(range(31)),
                "r": DerivedAxis("-2 .. min(p**(alpha+1), n+p+2)-1", _r_window_lifted),
            },
            _t15,
        ),
        _entry(
            "T1.6",
            "theorem",
            "top-digit product congruence for weighted class sums",
            ("p", "alpha", "l", "n", "s", "t", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (2, 3),
                "l": (0, 1, 2),
                "n": tuple(range(17)),
                "s": DerivedAxis("0 .. p-1", _digits),
                "t": DerivedAxis("0 .. p-1", _digits),
                "r": DerivedAxis("-1 .. min(p**alpha, n+3)-1", _r_window_capped),
            },
            _t16,
        ),
        _entry(
            "T1.7",
            "theorem",
            "digit refinement of normalized unweighted sums down to level p**2",
            ("p", "alpha", "n", "s", "t", "r"),
            {
                "p": (2, 3, 5),
                "alpha": DerivedAxis("2..4 for p in {2,3}, 2..3 for p=5", _refinement_alpha),
                "n": tuple(range(21)),
                "s": DerivedAxis("0 .. p**(alpha-2)-1", _refinement_digits),
                "t": DerivedAxis("0 .. p**(alpha-2)-1", _refinement_digits),
                "r": DerivedAxis("-1 .. min(p**2, n+3)-1", _r_window_refinement),
            },
            _t17,
        ),
        _entry(
            "T1.8",
            "theorem",
            "exact attainment of the order floor for the zero class at p = 2",
            ("alpha", "n", "l"),
            {
                "alpha": (0, 1, 2, 3),
                "n": tuple(range(65)),
                "l": DerivedAxis(
                    "n0, n0 + 2**e, n0 + 2**(e+1) with n0 = floor(n/2**alpha), "
                    "e = floor(log2 n0)",
                    _t18_l_values,
                ),
            },
            _t18,
        ),
        _entry(
            "C1.1cor",
            "theorem",
            "Bernoulli-polynomial alternating sums obey the shifted order bound",
            ("p", "alpha", "m", "n", "r"),
            {
                "p": (2, 3),
                "alpha": (1, 2),
                "m": (1, 2, 3, 4, 5, 6),
                "n": tuple(range(1, 41)),
                "r": DerivedAxis("0 .. p**alpha - 1", _r_residues),
            },
            _c11cor,
        ),
        _entry(
            "C1.2cor",
            "theorem",
            "digit criterion for oddness of the normalized unsigned class sum at p = 2",
            ("alpha", "n", "r"),
            {
                "alpha": (2, 3, 4, 5),
                "n": tuple(range(49)),
                "r": DerivedAxis(
                    "-2 .. 2**alpha - 1", lambda ctx: tuple(range(-2, 2 ** ctx["alpha"]))
                ),
            },
            _c12cor,
        ),
        _entry(
            "C3.1cor",
            "theorem",
            "iterated level reduction and order floor for Fleck-normalized sums",
            ("p", "alpha", "beta", "n", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (1, 2, 3, 4),
                "beta": DerivedAxis("0 .. alpha-1", _beta_below_alpha),
                "n": tuple(range(13)),
                "r": tuple(range(-2, 10)),
            },
            _c31cor,
        ),
        _entry(
            "L2.1",
            "theorem",
            "degenerate-regime closed form of the normalized sum",
            ("p", "n", "r", "l"),
            {
                "p": (2, 3, 5),
                "n": tuple(range(65)),
                "r": (-1, 0, 1),
                "l": tuple(range(9)),
            },
            _l21,
        ),
        _entry(
            "L2.2",
            "theorem",
            "two exact contiguous recurrences for normalized sums",
            ("p", "alpha", "l", "n", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (1, 2, 3),
                "l": tuple(range(9)),
                "n": tuple(range(1, 65)),
                "r": _R_WINDOW,
            },
            _l22,
        ),
        _entry(
            "L2.3",
            "theorem",
            "class-d sums split exactly through class-m convolutions",
            ("d", "m", "n", "r", "fdeg"),
            {
                "d": tuple(range(1, 10)),
                "m": tuple(range(1, 10)),
                "n": tuple(range(9)),
                "r": (-2, -1, 0, 1, 3),
                "fdeg": (0, 1, 2),
            },
            _l23,
        ),
        _entry(
            "L2.4",
            "theorem",
            "self-convolution identity with integral weights",
            ("p", "alpha", "l", "n", "r"),
            {
                "p": (2, 3),
                "alpha": (1, 2),
                "l": tuple(range(5)),
                "n": tuple(range(25)),
                "r": _R_WINDOW,
            },
            _l24,
        ),
        _entry(
            "L2.5",
            "theorem",
            "integrality of the convolution weights",
            ("p", "alpha", "n", "j"),
            {
                "p": (2, 3, 5),
                "alpha": (1, 2, 3),
                "n": tuple(range(65)),
                "j": DerivedAxis("0 .. n", _j_upto_n),
            },
            _l25,
        ),
        _entry(
            "T2.1",
            "theorem",
            "carry-count lower bound for orders of normalized sums",
            ("p", "alpha", "l", "n", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (0, 1, 2, 3),
                "l": tuple(range(9)),
                "n": tuple(range(65)),
                "r": _R_WINDOW,
            },
            _t21,
        ),
        _entry(
            "L3.1",
            "theorem",
            "congruence for averaged harmonic sums over an arithmetic progression",
            ("m", "n", "r"),
            {
                "m": tuple(range(1, 13)),
                "n": tuple(range(1, 49)),
                "r": DerivedAxis("units mod m in -m .. m", _coprime_window),
            },
            _l31,
        ),
        _entry(
            "L3.2",
            "theorem",
            "p-scaling congruence for binomial coefficients",
            ("p", "n", "k"),
            {
                "p": (2, 3, 5),
                "n": tuple(range(1, 31)),
                "k": DerivedAxis("0 .. n+1", _k_upto_n),
            },
            _l32,
        ),
        _entry(
            "T3.1",
            "theorem",
            "one-step level reduction for Fleck-normalized sums",
            ("p", "alpha", "n", "r"),
            {
                "p": (2, 3, 5),
                "alpha": (2, 3, 4),
                "n": tuple(range(17)),
                "r": DerivedAxis("-2 .. p**alpha - 1", _fleck_r_window),
            },
            _t31,
        ),
        _entry(
            "L4.1",
            "theorem",
            "factorial order attains its ceiling exactly for single-digit quotients",
            ("p", "beta", "q", "r"),
            {
                "p": (2, 3, 5),
                "beta": (0, 1, 2, 3),
                "q": tuple(range(9)),
                "r": DerivedAxis("({-q}_(p-1), p) window", _l41_r_window),
            },
            _l41,
        ),
        _entry(
            "L4.2",
            "theorem",
            "oddness of the degree-zero normalized sum detects powers of two",
            ("alpha", "n", "r"),
            {
                "alpha": (0, 1, 2, 3),
                "n": DerivedAxis("multiples of 2**alpha up to 64", _l42_n_values),
                "r": DerivedAxis("multiples of 2**alpha in [-2**(alpha+1), 2**(alpha+2))", _l42_r_values),
            },
            _l42,
        ),
        _entry(
            "T4.1",
            "theorem",
            "Kronecker-delta parity of normalized sums at split arguments",
            ("alpha", "c", "e", "d", "l"),
            {
                "alpha": (0, 1, 2, 3),
                "c": tuple(range(6)),
                "e": (0, 1, 2, 3, 4),
                "d": DerivedAxis("0 .. 2**e - 1", _t41_d_values),
                "l": DerivedAxis("0 .. d", _t41_l_values),
            },
            _t41,
        ),
        _entry(
            "R1.6",
            "theorem",
            "alternating power sums reduce to Stirling partition numbers, with "
            "the derived parity consequence",
            ("n", "l"),
            {"n": tuple(range(11)), "l": tuple(range(15))},
            _r16,
        ),
        _entry(
            "CONJ1.1",
            "conjecture",
            "conjectured strength of the lift congruence between levels "
            "alpha+1 and alpha at scaled arguments (mod p**3, or p**2 at p=3)",
            ("p", "alpha", "l", "n", "r"),
            {
                "p": (3, 5),
                "alpha": (1, 2),
                "l": tuple(range(6)),
                "n": tuple(range(25)),
                "r": DerivedAxis("0 .. p**alpha - 1", _r_residues),
            },
            _conj11,
        ),
        _entry(
            "CONJ1.2",
            "conjecture",
            "conjectured digit congruence at level p**2 with the residue "
            "permutation clause in the exceptional case",
            ("p", "n", "s"),
            {
                "p": (2, 3, 5),
                "n": tuple(range(21)),
                "s": DerivedAxis("0 .. p-1", _digits),
            },
            _conj12,
        ),
        _entry(
            "CONJ1.3",
            "conjecture",
            "conjectured unit value (+1 or -1 mod p) of the doubly normalized sum "
            "at admissible weights",
            ("p", "alpha", "n", "r", "j"),
            {
                "p": (2, 3),
                "alpha": (0, 1, 2),
                "n": DerivedAxis("2 p**alpha - 1 .. 40", _conj13_n_values),
                "r": DerivedAxis("0 .. p**alpha - 1", _r_residues),
                "j": (0, 1, 2),
            },
            _conj13,
        ),
        _entry(
            "CONJ3.1",
            "conjecture",
            "conjectured strengthening of the Fleck-normalized shift congruence "
            "for odd p",
            ("p", "alpha", "n", "r"),
            {
                "p": (3, 5),
                "alpha": (2, 3),
                "n": tuple(range(17)),
                "r": tuple(range(-2, 12)),
            },
            _conj31,
        ),
    ]
}

_T15_ALPHA1 = _entry(
    "T1.5-alpha1",
    "conjecture",
    "digit-reduction congruence at the lowest level (conjectured analogue "
    "of the proven alpha >= 2 case)",
    ("p", "l", "n", "r"),
    {
        "p": (2, 3),
        "l": tuple(range(5)),
        "n": tuple(range(31)),
        "r": DerivedAxis("-2 .. min(p**2, n+p+2)-1", _t15a1_r_window),
    },
    _t15_alpha1,
)

SEARCHES: dict[str, Statement] = {
    **{k: v for k, v in STATEMENTS.items() if v.kind == "conjecture"},
    _T15_ALPHA1.id: _T15_ALPHA1,
}

STATEMENT_IDS: tuple[str, ...] = tuple(STATEMENTS)
SEARCH_IDS: tuple[str, ...] = tuple(SEARCHES)

"""Exact rational-function arithmetic and machine verification of identities.

This layer re-derives, in exact arithmetic, every algebraic step that turns
the x*cot(x) fraction into the sec(x)+tan(x) fraction (see ``expansions``):

- ``verify_pairing``: grouping the x*cot(x) fraction two terms at a time
  into the paired recursion reproduces its plain convergents.
- ``verify_offset_rewrite``: shifting the paired recursion by -x equals its
  four-term rewritten form (checked at random rational points with an
  indeterminate tail value).
- ``verify_halving_rewrite``: substituting x -> x/2 into the offset form
  equals the halved form (same random-point scheme).
- ``verify_flattening``: the flattened sec-tan term stream reproduces the
  nested halved recursion.
- ``verify_series``: Taylor coefficients of deep sec-tan convergents equal
  zigzag(n)/n!, with the zigzag numbers computed by two independent
  methods (boustrophedon triangle and brute-force permutation counting).

Scalars are ``fractions.Fraction`` throughout; ``Poly`` and ``RatFunc`` are
kept deliberately minimal (univariate, dense) — no general computer-algebra
ambitions.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Callable, Iterable

from .core import CfSpec, PolyTerm
from .expansions import sec_tan_spec, xcot_spec

# Depth ceiling for exact convergents; coefficient growth is the cost driver.
MAX_EXACT_DEPTH = 64

# Default seed for the random-rational-point identity checks (reported by
# the CLI so runs are reproducible).
DEFAULT_SEED = 1729


class DivisionByZeroFunction(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtOrigin(ZeroDivisionError):
    """Series extraction requested for a function with den(0) = 0."""


class DegenerateConvergent(ArithmeticError):
    """A convergent collapsed onto a zero denominator polynomial."""


class InsufficientSamples(RuntimeError):
    """More than half of the random draws hit a zero denominator; re-seed."""


class Poly:
    """Dense univariate polynomial over Fraction; coeffs[i] is the x^i coefficient.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and every nonzero polynomial has a nonzero
    leading coefficient.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Poly(out)

    def scale(self, c) -> "Poly":
        """The polynomial c * self."""
        return Poly([Fraction(c) * ci for ci in self.coeffs])

    def scale_arg(self, c) -> "Poly":
        """The polynomial self(c * x)."""
        c = Fraction(c)
        return Poly([ci * c**i for i, ci in enumerate(self.coeffs)])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dlen + 1, 0)
        for i in range(len(rem) - dlen, -1, -1):
            factor = rem[i + dlen - 1] / lead
            quot[i] = factor
            if factor:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= factor * c
        return Poly(quot), Poly(rem[: dlen - 1])

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean remainder sequence."""
    while not b.is_zero:
        a, b = b, divmod(a, b)[1]
    if a.is_zero:
        return a
    return a.scale(1 / a.coeffs[-1])


_P_ONE = Poly([1])


class RatFunc:
    """Quotient of two Polys kept in canonical form.

    Invariants: the denominator is nonzero and monic, numerator and
    denominator are coprime, and the zero function is 0/1.  Canonical form
    makes ``==`` a decision procedure for equality of rational functions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = _P_ONE):
        if den.is_zero:
            raise DivisionByZeroFunction("denominator is the zero polynomial")
        if num.is_zero:
            num, den = Poly(), _P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = divmod(num, g)[0]
                den = divmod(den, g)[0]
            inv = 1 / den.coeffs[-1]
            num = num.scale(inv)
            den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly([Fraction(c)]))

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly([0, 1]))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __call__(self, x: Fraction) -> Fraction:
        return self.num(x) / self.den(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero:
            raise DivisionByZeroFunction("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def scale_arg(self, c) -> "RatFunc":
        """The function x -> self(c * x)."""
        return RatFunc(self.num.scale_arg(c), self.den.scale_arg(c))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def _term_poly(term: PolyTerm) -> Poly:
    return Poly(term.coefficients())


def convergent_exact(cf: CfSpec, depth: int) -> RatFunc:
    """The depth-``depth`` convergent of ``cf`` as an exact rational function.

    Folds b0 + a1/(b1 + ... + a_depth/b_depth) from the inside out,
    normalizing (gcd reduction, monic denominator) after every step.  Depth
    is capped at MAX_EXACT_DEPTH to bound coefficient growth.

    Raises DegenerateConvergent if the fold hits division by the zero
    function (a collapsed convergent; not expected for the built-in specs).
    """
    if not 1 <= depth <= MAX_EXACT_DEPTH:
        raise ValueError(f"depth must be in 1..{MAX_EXACT_DEPTH}, got {depth}")
    try:
        tail = RatFunc(_term_poly(cf.termgen(depth).b))
        for k in range(depth - 1, 0, -1):
            a_next = RatFunc(_term_poly(cf.termgen(k + 1).a))
            tail = RatFunc(_term_poly(cf.termgen(k).b)) + a_next / tail
        return RatFunc(_term_poly(cf.leading)) + RatFunc(_term_poly(cf.termgen(1).a)) / tail
    except DivisionByZeroFunction as exc:
        raise DegenerateConvergent(
            f"convergent of {cf.name!r} collapsed at depth {depth}"
        ) from exc


def series_from_ratfunc(f: RatFunc, order: int) -> list[Fraction]:
    """Taylor coefficients c_0..c_order of f at x = 0, by long division.

    Exact: f(x) = sum(c_i x^i) + O(x^(order+1)).  Raises PoleAtOrigin when
    the (reduced) denominator vanishes at 0.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    den = f.den.coeffs
    d0 = den[0]
    if d0 == 0:
        raise PoleAtOrigin("denominator vanishes at x = 0")
    num = f.num.coeffs
    out: list[Fraction] = []
    for i in range(order + 1):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc / d0)
    return out


def zigzag(n: int) -> int:
    """The n-th zigzag number, by the boustrophedon (Seidel–Entringer) triangle.

    zigzag(n) counts the alternating permutations of n elements; the
    sequence starts 1, 1, 1, 2, 5, 16, 61, 272, 1385, ...
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    row = [1]
    for m in range(1, n + 1):
        prev = row
        row = [0]
        for i in range(m):
            row.append(row[-1] + prev[m - 1 - i])
    return row[-1]


def alternating_count(n: int) -> int:
    """Brute-force count of down-up alternating permutations of {1..n}.

    Independent cross-check for ``zigzag`` (enumeration, so keep n <= 9).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= 1:
        return 1
    count = 0
    for perm in itertools.permutations(range(n)):
        if all((perm[i] > perm[i + 1]) == (i % 2 == 0) for i in range(n - 1)):
            count += 1
    return count


def _random_rational(rng: random.Random) -> Fraction:
    # numerators in [-99, 99], denominators in [1, 99]
    return Fraction(rng.randint(-99, 99), rng.randint(1, 99))


def _agree_at_random_points(
    lhs: Callable[[int, Fraction, Fraction], Fraction],
    rhs: Callable[[int, Fraction, Fraction], Fraction],
    k: int,
    trials: int,
    rng: random.Random | None,
) -> bool:
    """Exact equality of two bivariate expressions at random rational (x, t).

    Draws that hit a zero denominator on either side are skipped;
    InsufficientSamples is raised when more than half are skipped.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    skipped = 0
    agree = True
    for _ in range(trials):
        x = _random_rational(rng)
        t = _random_rational(rng)
        try:
            if lhs(k, x, t) != rhs(k, x, t):
                agree = False
        except ZeroDivisionError:
            skipped += 1
    if 2 * skipped > trials:
        raise InsufficientSamples(f"{skipped} of {trials} draws hit a zero denominator")
    return agree


def _offset_lhs(k: int, x: Fraction, t: Fraction) -> Fraction:
    # paired recursion unrolled once with its tail set to t + x, shifted by -x
    return (4 * k + 1) - x * x / ((4 * k + 3) - x * x / (t + x)) - x


def _offset_rhs(k: int, x: Fraction, t: Fraction) -> Fraction:
    # offset recursion unrolled once with tail t
    return (4 * k + 1) - x / (1 - x / ((4 * k + 3) + x / (1 + x / t)))


def verify_offset_rewrite(k: int = 0, trials: int = 64, rng: random.Random | None = None) -> bool:
    """Check that shifting the paired recursion by -x equals its rewritten form.

    Both sides are one unrolled level at index k with an indeterminate tail
    value t (the tail of the shifted side is t + x so that both sides cut
    the recursion at the same place), evaluated exactly at ``trials``
    random rational points (x, t).  Returns True iff every evaluated pair
    agrees exactly.
    """
    return _agree_at_random_points(_offset_lhs, _offset_rhs, k, trials, rng)


def _halving_lhs(k: int, x: Fraction, t: Fraction) -> Fraction:
    # offset recursion at argument x/2, with tail t
    h = x / 2
    return (4 * k + 1) - h / (1 - h / ((4 * k + 3) + h / (1 + h / t)))


def _halving_rhs(k: int, x: Fraction, t: Fraction) -> Fraction:
    # halved recursion unrolled once with tail t
    return (4 * k + 1) - x / (2 - x / ((4 * k + 3) + x / (2 + x / t)))


def verify_halving_rewrite(k: int = 0, trials: int = 64, rng: random.Random | None = None) -> bool:
    """Check that substituting x -> x/2 into the offset form gives the halved form.

    Same random-rational-point scheme as ``verify_offset_rewrite``, one
    unrolled level at index k, shared indeterminate tail t.
    """
    return _agree_at_random_points(_halving_lhs, _halving_rhs, k, trials, rng)


def verify_pairing(m: int) -> bool:
    """Check that pair-grouping the x*cot(x) fraction reproduces its convergents.

    Builds (i) the exact depth-(2m+1) convergent of the x*cot(x) stream
    (last partial denominator 4m+3) and (ii) the paired recursion unrolled
    from index 0 through m with the innermost x^2/paired term dropped, and
    compares the two rational functions for identity.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    plain = convergent_exact(xcot_spec(), 2 * m + 1)
    xx = RatFunc(Poly([0, 0, 1]))
    paired = RatFunc.const(4 * m + 1) - xx / RatFunc.const(4 * m + 3)
    for j in range(m - 1, -1, -1):
        paired = RatFunc.const(4 * j + 1) - xx / (RatFunc.const(4 * j + 3) - xx / paired)
    return plain == paired


def verify_flattening(m: int) -> bool:
    """Check that the flattened sec-tan stream reproduces the nested recursion.

    Cut rule (normative, established by these very checks): the flattened
    depth-(4m+3) convergent equals 1 + x/N_m, where N_m is the halved
    recursion unrolled from index 0 through m with the final level cut to
    4m+1 - x/(2 - x/(4m+3)) — i.e. each full level contributes four
    flattened terms and the cut level contributes the last two denominators
    4m+1 and 2 plus the closing 4m+3.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    flat = convergent_exact(sec_tan_spec(), 4 * m + 3)
    x = RatFunc.x()
    two = RatFunc.const(2)
    nested = RatFunc.const(4 * m + 1) - x / (two - x / RatFunc.const(4 * m + 3))
    for j in range(m - 1, -1, -1):
        nested = RatFunc.const(4 * j + 1) - x / (
            two - x / (RatFunc.const(4 * j + 3) + x / (two + x / nested))
        )
    return flat == RatFunc.const(1) + x / nested


def verify_series(order: int) -> bool:
    """Check sec-tan convergent Taylor coefficients against the zigzag oracle.

    Extracts the series of the depth-(2*order+3) flattened convergent and
    compares each coefficient exactly to zigzag(n)/n!.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    conv = convergent_exact(sec_tan_spec(), 2 * order + 3)
    coeffs = series_from_ratfunc(conv, order)
    return all(c == Fraction(zigzag(n), math.factorial(n)) for n, c in enumerate(coeffs))

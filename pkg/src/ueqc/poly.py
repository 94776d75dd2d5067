"""Exact multilinear polynomials in the parity-character basis.

A polynomial is stored sparsely as {subset mask S: rational coefficient} and
evaluates as sum_S c_S * (-1)^{x_S}, where x_S is the parity of x on S.  All
arithmetic here is exact rational; floats never enter this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Optional, Union

from .boolfn import BooleanFunction, popcount
from .errors import NotASignRepresentation, SizeLimitExceeded, SpecError

L1 = "L1"
SUP = "SUP"


def _as_fraction(v) -> Fraction:
    if isinstance(v, (Fraction, int, str, float)):
        return Fraction(v)
    return Fraction(v.numerator, v.denominator)


def format_rational(v) -> str:
    v = _as_fraction(v)
    return f"{v.numerator}/{v.denominator}"


class FourierPolynomial:
    """Sparse exact polynomial over the characters (-1)^{x_S}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, Fraction]):
        if n < 1:
            raise SpecError("n must be positive")
        cleaned: Dict[int, Fraction] = {}
        for mask, c in coeffs.items():
            mask = int(mask)
            if mask >> n:
                raise SpecError(f"mask {mask} does not fit in {n} bits")
            c = _as_fraction(c)
            if c:
                cleaned[mask] = c
        self.n = n
        self.coeffs = cleaned

    @property
    def degree(self) -> int:
        """Largest |S| with a nonzero coefficient (0 for the zero polynomial)."""
        return max((popcount(m) for m in self.coeffs), default=0)

    def items(self):
        """Coefficients in a deterministic (degree, mask) order."""
        return sorted(self.coeffs.items(), key=lambda kv: (popcount(kv[0]), kv[0]))

    def evaluate(self, x: int) -> Fraction:
        total = Fraction(0)
        for mask, c in self.coeffs.items():
            total += -c if popcount(x & mask) & 1 else c
        return total

    def evaluate_bits(self, bits: str) -> Fraction:
        from .boolfn import bits_to_index

        return self.evaluate(bits_to_index(bits))

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def sup_norm(self, domain=None) -> Fraction:
        """Max |p(x)| over a domain (all 2^n inputs when None)."""
        if domain is None:
            if self.n > 20:
                raise SizeLimitExceeded("sup norm enumeration too large")
            domain = range(1 << self.n)
        return max(abs(self.evaluate(x)) for x in domain)

    def scaled(self, factor) -> "FourierPolynomial":
        factor = _as_fraction(factor)
        return FourierPolynomial(self.n, {m: c * factor for m, c in self.coeffs.items()})

    def sum_squared_coeffs(self) -> Fraction:
        return sum((c * c for c in self.coeffs.values()), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, FourierPolynomial)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __repr__(self):
        terms = ", ".join(f"{m}:{c}" for m, c in self.items())
        return f"FourierPolynomial(n={self.n}, {{{terms}}})"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "coeffs": {str(m): format_rational(c) for m, c in self.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: Union[str, dict]) -> "FourierPolynomial":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(data["n"], {int(m): Fraction(c) for m, c in data["coeffs"].items()})

    # -- transforms ---------------------------------------------------------

    @classmethod
    def from_truth_table(cls, n: int, values) -> "FourierPolynomial":
        """Interpolate exact values given on all 2^n inputs (keyed by integer
        encoding, or a plain sequence in encoding order).

        The result reproduces the values pointwise; coefficients are the
        2^{-n}-scaled Walsh-Hadamard transform of the value vector.
        """
        size = 1 << n
        if n > 20:
            raise SizeLimitExceeded("interpolation table too large")
        if isinstance(values, Mapping):
            if len(values) != size:
                raise SpecError("values must cover all 2^n inputs")
            buf = [_as_fraction(values[x]) for x in range(size)]
        else:
            buf = [_as_fraction(v) for v in values]
            if len(buf) != size:
                raise SpecError("values must cover all 2^n inputs")
        # in-place butterflies: after processing bit h, positions paired by
        # that bit hold (a+b, a-b); the full pass computes
        # W[S] = sum_x v[x] * (-1)^{popcount(S & x)}
        h = 1
        while h < size:
            for base in range(0, size, h * 2):
                for off in range(base, base + h):
                    a, b = buf[off], buf[off + h]
                    buf[off], buf[off + h] = a + b, a - b
            h *= 2
        scale = Fraction(1, size)
        return cls(n, {mask: w * scale for mask, w in enumerate(buf) if w})


def sign_vector(f: BooleanFunction):
    """The +/-1 value map 2f-1 on f's domain."""
    return {x: Fraction(2 * f.value(x) - 1) for x in f.domain_indices()}


def margin(poly, f: BooleanFunction) -> Fraction:
    """min over the domain of (2f(x)-1) * p(x); positive iff p sign-represents f."""
    if isinstance(poly, LevelPolynomial) and f.is_symmetric and f.is_total:
        return min(
            (2 * f.weight_value(k) - 1) * poly.evaluate_at_weight(k)
            for k in range(f.n + 1)
        )
    return min(
        (2 * f.value(x) - 1) * poly.evaluate(x) for x in f.domain_indices()
    )


def bias_of(poly, f: BooleanFunction) -> Optional[Fraction]:
    """Exact bias of p as a sign representation of f, or None when the
    minimum margin is not positive."""
    m = margin(poly, f)
    return m if m > 0 else None


@dataclass(frozen=True)
class SignRepresentation:
    """A polynomial certified to sign-represent a target with a known bias
    under one of the two normalizations."""

    poly: Union[FourierPolynomial, "LevelPolynomial"]
    target: BooleanFunction
    norm: str
    bias: Fraction

    def validate(self) -> None:
        if self.norm not in (L1, SUP):
            raise SpecError(f"unknown norm {self.norm!r}")
        if self.bias <= 0:
            raise NotASignRepresentation("bias must be positive")
        if margin(self.poly, self.target) != self.bias:
            raise NotASignRepresentation("stored bias does not match the margin")
        if self.norm == L1:
            if self.poly.l1_norm() > 1:
                raise NotASignRepresentation("coefficient l1 norm exceeds 1")
        else:
            dom = None if self.target.is_total else self.target.domain
            if isinstance(self.poly, LevelPolynomial):
                if max(abs(self.poly.evaluate_at_weight(k)) for k in range(self.target.n + 1)) > 1:
                    raise NotASignRepresentation("sup norm exceeds 1 on the domain")
            elif self.poly.sup_norm(dom) > 1:
                raise NotASignRepresentation("sup norm exceeds 1 on the domain")


def normalize_l1(p: FourierPolynomial, f: BooleanFunction) -> SignRepresentation:
    """Scale p by its coefficient l1 norm; requires p to sign-represent f.

    Starting from a sup-normalized representation of degree d this loses at
    most a factor sqrt(sum_{i<=d} C(n,i)) of bias.
    """
    b = bias_of(p, f)
    if b is None:
        raise NotASignRepresentation(f"polynomial does not sign-represent {f.label}")
    norm = p.l1_norm()
    if norm == 1:
        return SignRepresentation(p, f, L1, b)
    scaled = p.scaled(Fraction(1) / norm)
    return SignRepresentation(scaled, f, L1, b / norm)


# ---------------------------------------------------------------------------
# Symmetric (weight-level) polynomials


def char_level_sum(n: int, s: int, k: int) -> int:
    """Sum of (-1)^{x_S} over all |S| = s, for any fixed input of weight k."""
    return sum(
        (-1) ** j * comb(k, j) * comb(n - k, s - j) for j in range(min(s, k) + 1)
    )


def point_level_sum(n: int, s: int, k: int) -> int:
    """Sum of (-1)^{x_S} over all |x| = k, for any fixed set of size s."""
    return char_level_sum(n, k, s)


class LevelPolynomial:
    """A symmetric multilinear polynomial: one coefficient per character
    level s, i.e. p = sum_s a_s * sum_{|S|=s} (-1)^{x_S}.

    Used by the symmetric LP fast path, where materializing the C(n,s)
    individual coefficients would be astronomically large.
    """

    __slots__ = ("n", "level_coeffs")

    def __init__(self, n: int, level_coeffs):
        coeffs = [_as_fraction(c) for c in level_coeffs]
        if len(coeffs) > n + 1:
            raise SpecError("more levels than n+1")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.n = n
        self.level_coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return max(len(self.level_coeffs) - 1, 0)

    def evaluate_at_weight(self, k: int) -> Fraction:
        return sum(
            (a * char_level_sum(self.n, s, k) for s, a in enumerate(self.level_coeffs)),
            Fraction(0),
        )

    def evaluate(self, x: int) -> Fraction:
        return self.evaluate_at_weight(popcount(x))

    def l1_norm(self) -> Fraction:
        return sum(
            (abs(a) * comb(self.n, s) for s, a in enumerate(self.level_coeffs)),
            Fraction(0),
        )

    def to_fourier(self) -> FourierPolynomial:
        if self.n > 16:
            raise SizeLimitExceeded("expansion to individual characters too large")
        coeffs = {}
        for mask in range(1 << self.n):
            s = popcount(mask)
            if s < len(self.level_coeffs) and self.level_coeffs[s]:
                coeffs[mask] = self.level_coeffs[s]
        return FourierPolynomial(self.n, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LevelPolynomial)
            and self.n == other.n
            and self.level_coeffs == other.level_coeffs
        )

    def __repr__(self):
        return f"LevelPolynomial(n={self.n}, levels={self.level_coeffs})"


# ---------------------------------------------------------------------------
# Univariate polynomials and symmetrization


class UnivariatePolynomial:
    """Dense exact univariate polynomial c_0 + c_1 t + ... + c_d t^d."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        return max(len(self.coefficients) - 1, 0)

    def __call__(self, t) -> Fraction:
        t = _as_fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, UnivariatePolynomial)
            and self.coefficients == other.coefficients
        )

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coefficients)})"


def interpolate_integer_nodes(values) -> UnivariatePolynomial:
    """Exact Newton interpolation through (0, v0), (1, v1), ..."""
    ys = [_as_fraction(v) for v in values]
    npts = len(ys)
    # forward divided differences on unit-spaced nodes
    diffs = list(ys)
    newton = [diffs[0]]
    for level in range(1, npts):
        diffs = [
            (diffs[i + 1] - diffs[i]) / level for i in range(len(diffs) - 1)
        ]
        newton.append(diffs[0])
    # accumulate newton[j] * t(t-1)...(t-j+1)
    coeffs = [Fraction(0)] * npts
    basis = [Fraction(1)]
    for j, cj in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += cj * b
        # multiply basis by (t - j)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= b * j
            nxt[i + 1] += b
        basis = nxt
    return UnivariatePolynomial(coeffs)


def symmetrize(p: Union[FourierPolynomial, LevelPolynomial]) -> UnivariatePolynomial:
    """Average p over each Hamming sphere; the result has degree <= deg(p)."""
    n = p.n
    if isinstance(p, LevelPolynomial):
        values = [p.evaluate_at_weight(k) for k in range(n + 1)]
    else:
        level_totals: Dict[int, Fraction] = {}
        for mask, c in p.coeffs.items():
            s = popcount(mask)
            level_totals[s] = level_totals.get(s, Fraction(0)) + c
        values = []
        for k in range(n + 1):
            total = sum(
                (c * point_level_sum(n, s, k) for s, c in level_totals.items()),
                Fraction(0),
            )
            values.append(total / comb(n, k))
    return interpolate_integer_nodes(values)

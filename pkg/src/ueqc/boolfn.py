"""Boolean functions on n bits: standard families, a small spec DSL, and
combinatorial measures.

Conventions used throughout the toolkit: inputs are written left to right as
x_1 x_2 ... x_n (1-based indices).  Internally an input is an integer whose
bit (i-1) holds x_i.  Truth tables and the Fourier-sampling string g are
addressed by lexicographic rank of the input string, i.e. int(bits, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import PromiseViolation, SizeLimitExceeded, SpecError, Unsupported

# Explicit tables (TT/FILE/OMB and friends) are capped here; symmetric
# families evaluate lazily and are allowed far larger n for the LP fast path.
TABLE_LIMIT = 24
SYMMETRIC_LIMIT = 4096

SYMMETRIC_FAMILIES = frozenset({"PARITY", "OR", "AND", "TH", "MAJ", "CONST"})


def bits_to_index(bits: str) -> int:
    """Map a left-to-right bit string x_1..x_n to its integer encoding."""
    x = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            x |= 1 << i
        elif ch != "0":
            raise SpecError(f"invalid bit string {bits!r}")
    return x


def index_to_bits(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def lex_rank(bits: str) -> int:
    """Lexicographic rank of a bit string (x_1 is the most significant bit)."""
    return int(bits, 2) if bits else 0


def popcount(x: int) -> int:
    return x.bit_count()


class BooleanFunction:
    """A total or partial function on n bits.

    `domain` is None for total functions, otherwise a frozenset of integer
    encodings.  Evaluation goes through a callable so that symmetric families
    never materialize 2^n values.
    """

    __slots__ = ("n", "family", "label", "domain", "_fn", "_weight_values", "_table")

    def __init__(
        self,
        n: int,
        fn: Callable[[int], int],
        family: Optional[str] = None,
        label: Optional[str] = None,
        domain: Optional[frozenset] = None,
        weight_values: Optional[tuple] = None,
    ):
        if n < 1:
            raise SpecError("n must be positive")
        if domain is not None and not domain:
            raise SpecError("domain must be nonempty")
        self.n = n
        self._fn = fn
        self.family = family
        self.label = label or family or f"fn:{n}"
        self.domain = domain
        self._weight_values = weight_values
        self._table = None

    @property
    def is_total(self) -> bool:
        return self.domain is None

    @property
    def is_symmetric(self) -> bool:
        return self._weight_values is not None

    def value(self, x: int) -> int:
        """Evaluate at an integer-encoded input; PromiseViolation off-domain."""
        if self.domain is not None and x not in self.domain:
            raise PromiseViolation(
                f"{self.label}: input {index_to_bits(x, self.n)} outside promise domain"
            )
        if x >> self.n:
            raise SpecError(f"input {x} does not fit in {self.n} bits")
        return self._fn(x)

    def eval(self, bits: str) -> int:
        """Evaluate at a bit string written x_1..x_n."""
        if len(bits) != self.n:
            raise SpecError(f"expected {self.n} bits, got {len(bits)}")
        return self.value(bits_to_index(bits))

    def weight_value(self, k: int) -> int:
        """Value at any Hamming-weight-k input (symmetric functions only)."""
        if self._weight_values is None:
            raise Unsupported(f"{self.label} is not a known symmetric function")
        return self._weight_values[k]

    def domain_indices(self) -> Iterable[int]:
        if self.domain is not None:
            return sorted(self.domain)
        if self.n > TABLE_LIMIT:
            raise SizeLimitExceeded(f"cannot enumerate 2^{self.n} inputs")
        return range(1 << self.n)

    def table(self) -> bytearray:
        """Dense truth table indexed by integer encoding (total functions)."""
        if not self.is_total:
            raise Unsupported("partial functions have no dense table")
        if self.n > TABLE_LIMIT:
            raise SizeLimitExceeded(f"table for n={self.n} exceeds limit {TABLE_LIMIT}")
        if self._table is None:
            if self._weight_values is not None:
                idx = np.arange(1 << self.n, dtype=np.int64)
                w = np.zeros(1 << self.n, dtype=np.int64)
                for i in range(self.n):
                    w += (idx >> i) & 1
                wv = np.array(self._weight_values, dtype=np.uint8)
                self._table = bytearray(wv[w].tobytes())
            else:
                self._table = bytearray(self._fn(x) for x in range(1 << self.n))
        return self._table

    def __repr__(self):
        kind = "total" if self.is_total else f"partial(|dom|={len(self.domain)})"
        return f"BooleanFunction({self.label}, n={self.n}, {kind})"


def _symmetric(n: int, label: str, family: str, weight_values) -> BooleanFunction:
    wv = tuple(int(v) for v in weight_values)
    return BooleanFunction(
        n,
        lambda x: wv[popcount(x)],
        family=family,
        label=label,
        weight_values=wv,
    )


def parity(n: int) -> BooleanFunction:
    return _symmetric(n, f"PARITY:{n}", "PARITY", [k & 1 for k in range(n + 1)])


def or_function(n: int) -> BooleanFunction:
    return _symmetric(n, f"OR:{n}", "OR", [int(k >= 1) for k in range(n + 1)])


def and_function(n: int) -> BooleanFunction:
    return _symmetric(n, f"AND:{n}", "AND", [int(k == n) for k in range(n + 1)])


def threshold(n: int, k: int, label: Optional[str] = None) -> BooleanFunction:
    """TH_k: 1 exactly when the Hamming weight strictly exceeds k."""
    if not 0 <= k <= n - 1:
        raise SpecError(f"threshold parameter k={k} out of range for n={n}")
    return _symmetric(
        n, label or f"TH:{n}:{k}", "TH", [int(w > k) for w in range(n + 1)]
    )


def majority(n: int) -> BooleanFunction:
    # MAJ:n is the alias TH:n:(ceil(n/2)-1), i.e. 1 iff |x| >= ceil(n/2).
    k = (n + 1) // 2 - 1
    return threshold(n, k, label=f"MAJ:{n}")


def constant(n: int, bit: int) -> BooleanFunction:
    return _symmetric(n, f"CONST:{n}:{bit}", "CONST", [bit] * (n + 1))


def odd_max_bit(n: int) -> BooleanFunction:
    """OMB: parity of the largest 1-index (0 for the all-zero input)."""
    if n > TABLE_LIMIT:
        raise SizeLimitExceeded(f"OMB supported up to n={TABLE_LIMIT}")
    # largest 1-based index with x_i=1 is bit_length of the encoding
    return BooleanFunction(
        n, lambda x: x.bit_length() & 1, family="OMB", label=f"OMB:{n}"
    )


def from_table(n: int, bits, family=None, label=None) -> BooleanFunction:
    """Total function from 2^n values ordered by lexicographic input rank."""
    if n > TABLE_LIMIT:
        raise SizeLimitExceeded(f"explicit tables supported up to n={TABLE_LIMIT}")
    vals = [int(b) for b in bits]
    if len(vals) != 1 << n or any(v not in (0, 1) for v in vals):
        raise SpecError("truth table must contain exactly 2^n bits")
    by_index = [0] * (1 << n)
    for rank, v in enumerate(vals):
        by_index[bits_to_index(format(rank, f"0{n}b"))] = v
    table = bytes(by_index)

    wv = _weight_profile(n, table)
    return BooleanFunction(
        n,
        lambda x: table[x],
        family=family,
        label=label or f"TT:{n}",
        weight_values=wv,
    )


def _weight_profile(n: int, table: bytes):
    """Per-weight values if the table is symmetric, else None."""
    wv = [None] * (n + 1)
    for x, v in enumerate(table):
        w = popcount(x)
        if wv[w] is None:
            wv[w] = v
        elif wv[w] != v:
            return None
    return tuple(wv)


def from_pairs(n: int, pairs, label=None) -> BooleanFunction:
    """Partial (or total) function from explicit (bits, value) pairs."""
    if n > TABLE_LIMIT:
        raise SizeLimitExceeded(f"explicit functions supported up to n={TABLE_LIMIT}")
    values = {}
    for bits, v in pairs:
        if len(bits) != n:
            raise SpecError(f"bit string {bits!r} does not have length {n}")
        x = bits_to_index(bits)
        v = int(v)
        if v not in (0, 1):
            raise SpecError(f"value for {bits} must be 0 or 1")
        if values.get(x, v) != v:
            raise SpecError(f"conflicting values for input {bits}")
        values[x] = v
    if not values:
        raise SpecError("no inputs given")
    if len(values) == 1 << n:
        table = bytes(values[x] for x in range(1 << n))
        return BooleanFunction(
            n, lambda x: table[x], label=label, weight_values=_weight_profile(n, table)
        )
    dom = frozenset(values)
    return BooleanFunction(n, values.__getitem__, label=label, domain=dom)


# ---------------------------------------------------------------------------
# Fourier sampling instances


def _hex_to_bits(hexstr: str, nbits: int) -> str:
    if len(hexstr) != (nbits + 3) // 4:
        raise SpecError(
            f"hex string {hexstr!r} must encode exactly {nbits} bits "
            f"({(nbits + 3) // 4} digits)"
        )
    try:
        value = int(hexstr, 16)
    except ValueError as exc:
        raise SpecError(f"invalid hex string {hexstr!r}") from exc
    if value >> nbits:
        raise SpecError(f"hex string {hexstr!r} overflows {nbits} bits")
    return format(value, f"0{nbits}b")


def linear_oracle_bits(m: int, r_bits: str) -> str:
    """The 2^m-bit string whose rank-x bit is <x,r> mod 2."""
    r = lex_rank(r_bits)
    return "".join(str(popcount(x & r) & 1) for x in range(1 << m))


def recover_linear_coefficients(m: int, f_bits: str) -> str:
    """Read r off the unit-vector positions of a linear string; raises if the
    string is not linear."""
    if len(f_bits) != 1 << m:
        raise SpecError(f"F-part must have 2^{m} bits")
    r_bits = "".join(f_bits[1 << (m - i)] for i in range(1, m + 1))
    if linear_oracle_bits(m, r_bits) != f_bits:
        raise PromiseViolation("F-part does not satisfy the linearity promise")
    return r_bits


@dataclass(frozen=True)
class FSInstance:
    """One Fourier-sampling input: the linear string for r concatenated with g."""

    m: int
    r: str
    g: str

    def __post_init__(self):
        if len(self.r) != self.m or len(self.g) != 1 << self.m:
            raise SpecError("FSInstance fields have inconsistent lengths")

    @property
    def f_part(self) -> str:
        return linear_oracle_bits(self.m, self.r)

    @property
    def encoded_input(self) -> str:
        return self.f_part + self.g

    @property
    def answer(self) -> int:
        return int(self.g[lex_rank(self.r)])


def fourier_sampling(m: int, g_bits: str) -> BooleanFunction:
    """The partial function on 2*2^m bits whose domain is the linearity
    promise with this fixed g; its value is g_r."""
    half = 1 << m
    n = 2 * half
    if n > TABLE_LIMIT:
        raise SizeLimitExceeded(f"FS supported up to m={TABLE_LIMIT.bit_length() - 2}")
    if len(g_bits) != half or any(c not in "01" for c in g_bits):
        raise SpecError(f"g must be a {half}-bit string")
    values = {}
    for r in range(half):
        r_bits = format(r, f"0{m}b")
        inst = FSInstance(m, r_bits, g_bits)
        values[bits_to_index(inst.encoded_input)] = inst.answer
    dom = frozenset(values)
    return BooleanFunction(
        n, values.__getitem__, family="FS", label=f"FS:{m}:{g_bits}", domain=dom
    )


# ---------------------------------------------------------------------------
# Spec DSL


def make_function(spec: str) -> BooleanFunction:
    """Parse a function-spec string.

    Grammar: PARITY:n | OR:n | AND:n | MAJ:n | TH:n:k | OMB:n | TT:<hex>:<n>
    | FS:m:<g-hex> | FILE:<path>.  MAJ:n is the alias TH:n:(ceil(n/2)-1).
    """
    parts = spec.split(":")
    head = parts[0].upper()

    def arg_int(i, name):
        try:
            return int(parts[i])
        except (IndexError, ValueError):
            raise SpecError(f"{spec!r}: expected integer {name}") from None

    try:
        if head in ("PARITY", "OR", "AND", "MAJ", "OMB"):
            if len(parts) != 2:
                raise SpecError(f"{spec!r}: expected {head}:n")
            n = arg_int(1, "n")
            if n < 1:
                raise SpecError(f"{spec!r}: n must be positive")
            limit = SYMMETRIC_LIMIT if head != "OMB" else TABLE_LIMIT
            if n > limit:
                raise SizeLimitExceeded(f"{head} supported up to n={limit}")
            return {
                "PARITY": parity,
                "OR": or_function,
                "AND": and_function,
                "MAJ": majority,
                "OMB": odd_max_bit,
            }[head](n)
        if head == "TH":
            if len(parts) != 3:
                raise SpecError(f"{spec!r}: expected TH:n:k")
            n, k = arg_int(1, "n"), arg_int(2, "k")
            if n < 1:
                raise SpecError(f"{spec!r}: n must be positive")
            if n > SYMMETRIC_LIMIT:
                raise SizeLimitExceeded(f"TH supported up to n={SYMMETRIC_LIMIT}")
            return threshold(n, k)
        if head == "TT":
            if len(parts) != 3:
                raise SpecError(f"{spec!r}: expected TT:<hex>:<n>")
            n = arg_int(2, "n")
            if n < 1:
                raise SpecError(f"{spec!r}: n must be positive")
            if n > TABLE_LIMIT:
                raise SizeLimitExceeded(f"TT supported up to n={TABLE_LIMIT}")
            bits = _hex_to_bits(parts[1], 1 << n)
            return from_table(n, bits, family="TT", label=spec)
        if head == "FS":
            if len(parts) != 3:
                raise SpecError(f"{spec!r}: expected FS:m:<g-hex>")
            m = arg_int(1, "m")
            if m < 1:
                raise SpecError(f"{spec!r}: m must be positive")
            if 2 << m > TABLE_LIMIT:
                raise SizeLimitExceeded("FS supported up to m=3")
            g_bits = _hex_to_bits(parts[2], 1 << m)
            return fourier_sampling(m, g_bits)
        if head == "FILE":
            path = spec[len("FILE:"):]
            if not path:
                raise SpecError("FILE: requires a path")
            pairs = []
            with open(path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    try:
                        bits, val = line.split()
                    except ValueError:
                        raise SpecError(f"bad line in {path!r}: {line!r}") from None
                    pairs.append((bits, int(val)))
            if not pairs:
                raise SpecError(f"{path!r} defines no inputs")
            return from_pairs(len(pairs[0][0]), pairs, label=spec)
    except (SpecError, SizeLimitExceeded):
        raise
    except OSError as exc:
        raise SpecError(f"cannot read {spec!r}: {exc}") from exc
    raise SpecError(f"unknown function spec {spec!r}")


# ---------------------------------------------------------------------------
# Average sensitivity


def average_sensitivity(f: BooleanFunction) -> Fraction:
    """Expected number of sensitive coordinates under a uniform input."""
    if not f.is_total:
        raise Unsupported("average sensitivity is defined for total functions")
    if f.is_symmetric:
        # sum over weight levels: an up-flip is sensitive iff f changes
        # between consecutive weights, similarly for down-flips
        total = 0
        for k in range(f.n + 1):
            s = 0
            if k < f.n and f.weight_value(k) != f.weight_value(k + 1):
                s += f.n - k
            if k > 0 and f.weight_value(k) != f.weight_value(k - 1):
                s += k
            total += comb(f.n, k) * s
        return Fraction(total, 1 << f.n)
    table = np.frombuffer(bytes(f.table()), dtype=np.uint8)
    idx = np.arange(1 << f.n, dtype=np.int64)
    total = 0
    for i in range(f.n):
        total += int(np.count_nonzero(table != table[idx ^ (1 << i)]))
    return Fraction(total, 1 << f.n)

"""Block codes, distance profiles and multiplicity exponents.

Profiles are real-valued so that averages over codewords, ensemble
expectations and rescaled binomial rows share one representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.special import gammaln

from .bounds import binary_entropy, gv_distance
from .errors import IndexOutOfRange, LengthMismatch, NotBinary, OutOfRange, ParseError, ValidationError

EXACT_BINOMIAL_MAX_N = 60


@dataclass(frozen=True, eq=False)
class BlockCode:
    words: tuple[str, ...]
    q: int = 2

    def __post_init__(self):
        words = tuple(str(w) for w in self.words)
        if not words:
            raise ValidationError("a code needs at least one codeword")
        if not 2 <= self.q <= 10:
            raise ValidationError(f"alphabet size {self.q} not supported")
        n = len(words[0])
        if n == 0:
            raise ValidationError("codewords must be non-empty")
        alphabet = set("0123456789"[: self.q])
        for k, w in enumerate(words):
            if len(w) != n:
                raise LengthMismatch(f"word {k} has length {len(w)}, expected {n}")
            if not set(w) <= alphabet:
                raise ValidationError(f"word {k} ({w!r}) has symbols outside 0..{self.q - 1}")
        if len(set(words)) != len(words):
            raise ValidationError("codewords must be distinct")
        object.__setattr__(self, "words", words)

    @property
    def n(self) -> int:
        return len(self.words[0])

    @property
    def M(self) -> int:
        return len(self.words)

    @property
    def rate(self) -> float:
        return math.log2(self.M) / self.n

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array([[int(ch) for ch in w] for w in self.words], dtype=np.int8)
        a.setflags(write=False)
        return a

    @cached_property
    def distances(self) -> np.ndarray:
        """``M x M`` matrix of pairwise Hamming distances."""
        a = self.array
        out = np.empty((self.M, self.M), dtype=np.int64)
        for start in range(0, self.M, 256):
            block = a[start : start + 256]
            out[start : start + 256] = (block[:, None, :] != a[None, :, :]).sum(axis=-1)
        out.setflags(write=False)
        return out

    @classmethod
    def from_array(cls, rows, q: int = 2) -> "BlockCode":
        return cls(tuple("".join(str(int(x)) for x in row) for row in np.asarray(rows)), q)


@dataclass(frozen=True, eq=False)
class MultiplicityProfile:
    counts: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.counts, dtype=float)
        if c.ndim != 1 or not np.all(np.isfinite(c)) or np.any(c < 0):
            raise ValidationError("profile entries must be finite and nonnegative")
        c.setflags(write=False)
        object.__setattr__(self, "counts", c)

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> float:
        return float(self.counts.sum())


@dataclass(frozen=True, eq=False)
class ExponentProfile:
    """Per-distance exponents ``log2(count) / n``; ``-inf`` marks an empty distance."""

    exponents: np.ndarray

    def multiplicities(self, n: int) -> np.ndarray:
        return np.exp2(n * self.exponents)


def hamming_distance(u: Sequence, v: Sequence) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum(a != b for a, b in zip(u, v))


def multiplicity_enumerators(code: BlockCode, m: int) -> MultiplicityProfile:
    if not 0 <= m < code.M:
        raise IndexOutOfRange(f"codeword index {m} not in [0, {code.M})")
    return MultiplicityProfile(np.bincount(code.distances[m], minlength=code.n + 1))


def average_multiplicity(code: BlockCode) -> MultiplicityProfile:
    counts = np.zeros(code.n + 1)
    for row in code.distances:
        counts += np.bincount(row, minlength=code.n + 1)
    return MultiplicityProfile(counts / code.M)


def _require_binary(code: BlockCode):
    if code.q != 2:
        raise NotBinary(f"code alphabet has {code.q} symbols")


def weight_enumerator(code: BlockCode) -> MultiplicityProfile:
    _require_binary(code)
    return MultiplicityProfile(np.bincount(code.array.sum(axis=1), minlength=code.n + 1))


def is_linear(code: BlockCode) -> bool:
    """Closure under bitwise addition, tested over all pairs."""
    _require_binary(code)
    words = set(code.words)
    if "0" * code.n not in words:
        return False
    a = code.array
    for i in range(code.M):
        sums = a[i] ^ a[i:]
        if any("".join(map(str, row)) not in words for row in sums):
            return False
    return True


def linear_code(generator) -> BlockCode:
    """All ``2**k`` codewords spanned by the rows of a binary generator matrix."""
    g = np.asarray(generator, dtype=np.int64) % 2
    k = g.shape[0]
    messages = (np.arange(2**k)[:, None] >> np.arange(k - 1, -1, -1)) & 1
    return BlockCode.from_array(messages @ g % 2)


def random_linear_code(n: int, k: int, seed: int) -> BlockCode:
    """Systematic code ``G = [I | A]`` with i.i.d. uniform bits in ``A``."""
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 2, size=(k, n - k))
    return linear_code(np.hstack([np.eye(k, dtype=np.int64), a]))


def log2_binomial(n: int, d) -> np.ndarray:
    """``log2 C(n, d)``; exact below ``EXACT_BINOMIAL_MAX_N``, log-gamma above."""
    d = np.atleast_1d(np.asarray(d))
    if n <= EXACT_BINOMIAL_MAX_N:
        return np.array([math.log2(math.comb(n, int(x))) if 0 <= x <= n else -np.inf for x in d])
    out = np.full(d.shape, -np.inf)
    ok = (d >= 0) & (d <= n)
    dd = d[ok].astype(float)
    out[ok] = (gammaln(n + 1.0) - gammaln(dd + 1.0) - gammaln(n - dd + 1.0)) / math.log(2.0)
    return out


def rescaled_binomial_profile(n: int, rate: float) -> MultiplicityProfile:
    """``2**(n (rate - 1)) * C(n, d)`` for ``d = 0..n``; sums to ``2**(n rate)``."""
    if not 0.0 < rate <= 1.0:
        raise OutOfRange(f"rate {rate} not in (0, 1]")
    if n < 1:
        raise OutOfRange(f"length {n} must be positive")
    d = np.arange(n + 1)
    if n <= EXACT_BINOMIAL_MAX_N:
        counts = np.array([math.comb(n, int(x)) for x in d], dtype=float) * 2.0 ** (n * (rate - 1.0))
    else:
        log_counts = log2_binomial(n, d) + n * (rate - 1.0)
        if log_counts.max() >= 1023:
            raise OutOfRange(f"counts near 2**{log_counts.max():.0f} overflow floats; "
                             "use rescaled_binomial_exponents")
        counts = np.exp2(log_counts)
    return MultiplicityProfile(counts)


def rescaled_binomial_exponents(n: int, rate: float) -> ExponentProfile:
    """AME of :func:`rescaled_binomial_profile`, computed in the log domain so any ``n`` works."""
    if not 0.0 < rate <= 1.0:
        raise OutOfRange(f"rate {rate} not in (0, 1]")
    if n < 1:
        raise OutOfRange(f"length {n} must be positive")
    return ExponentProfile(log2_binomial(n, np.arange(n + 1)) / n + (rate - 1.0))


def random_linear_expected_weights(n: int, k: int) -> MultiplicityProfile:
    """Expected weight enumerator of the random systematic ``[n, k]`` ensemble."""
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    counts = np.empty(n + 1)
    counts[0] = 1.0
    if n <= EXACT_BINOMIAL_MAX_N:
        for w in range(1, n + 1):
            counts[w] = math.ldexp(math.comb(n, w) - math.comb(n - k, w), k - n)
    else:
        w = np.arange(1, n + 1)
        full = log2_binomial(n, w)
        shortened = log2_binomial(n - k, w)
        counts[1:] = np.exp2(full + k - n) * -np.expm1((shortened - full) * math.log(2.0))
    return MultiplicityProfile(counts)


def ame(profile: MultiplicityProfile, n: int) -> ExponentProfile:
    """Average multiplicity exponents ``log2(count) / n``."""
    with np.errstate(divide="ignore"):
        return ExponentProfile(np.where(profile.counts > 0, np.log2(profile.counts), -np.inf) / n)


def _check_delta_rate(delta: float, rate: float):
    if not 0.0 <= delta <= 1.0:
        raise OutOfRange(f"delta = {delta} not in [0, 1]")
    if not 0.0 <= rate <= 1.0:
        raise OutOfRange(f"rate = {rate} not in [0, 1]")


def iaame(delta: float, rate: float) -> float:
    """Interpolated asymptotic multiplicity exponent of rescaled-binomial families."""
    _check_delta_rate(delta, rate)
    return binary_entropy(delta) - (1.0 - rate)


def expurgated_iaame(delta: float, rate: float) -> float:
    """As :func:`iaame`, with the negative parts expurgated to ``-inf``.

    Below the GV distance this is the defining condition; the mirror interval
    ``delta >= 1 - delta_GV`` is where the unexpurgated exponent turns negative
    again on the far side of 1/2.
    """
    _check_delta_rate(delta, rate)
    gv = gv_distance(rate)
    if delta <= gv or delta >= 1.0 - gv:
        return -math.inf
    return iaame(delta, rate)


def _check_c(c: float):
    if not 0.0 <= c <= 1.0:
        raise OutOfRange(f"c = {c} not in [0, 1]")


def union_bound(code: BlockCode, c: float) -> float:
    """``(1/M) sum_m sum_{j != m} c**d(x_m, x_j)``."""
    _require_binary(code)
    _check_c(c)
    d = code.distances
    off = ~np.eye(code.M, dtype=bool)
    return float(np.sum(np.power(c, d[off], dtype=float)) / code.M)


def union_bound_from_profile(profile: MultiplicityProfile, c: float) -> float:
    """Union bound from average multiplicities; the distance-0 self term is dropped."""
    _check_c(c)
    d = np.arange(1, profile.n + 1)
    return float(np.sum(profile.counts[1:] * np.power(c, d, dtype=float)))


def parse_code(text: str, q: int = 2) -> BlockCode:
    words = []
    seen: dict[str, int] = {}
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        w = raw.strip()
        if not w or w.startswith("#"):
            continue
        if n is None:
            n = len(w)
        elif len(w) != n:
            raise ParseError(f"codeword length {len(w)} differs from {n}", lineno)
        if not set(w) <= set("0123456789"[:q]):
            raise ParseError(f"invalid symbols in {w!r}", lineno)
        if w in seen:
            raise ParseError(f"duplicate of the codeword on line {seen[w]}", lineno)
        seen[w] = lineno
        words.append(w)
    if not words:
        raise ParseError("no codewords found")
    return BlockCode(tuple(words), q)


def load_code(path: str | Path, q: int = 2) -> BlockCode:
    return parse_code(Path(path).read_text(), q)


def format_code(code: BlockCode) -> str:
    return "\n".join(code.words) + "\n"

"""Symbolic aggregate approximation: z-normalisation, PAA, discretisation.

Symbols are integer indices ``1..a``.  Letters (``'a'`` for 1, ``'b'`` for 2,
...) only appear when a word is rendered or parsed.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import InvalidInputError, UnsupportedAlphabetError

# Gaussian equiprobable cut points, two decimals, keyed by alphabet size.
BREAKPOINT_TABLE: dict[int, tuple[float, ...]] = {
    3: (-0.43, 0.43),
    4: (-0.67, 0.0, 0.67),
    5: (-0.84, -0.25, 0.25, 0.84),
    6: (-0.97, -0.43, 0.0, 0.43, 0.97),
    7: (-1.07, -0.57, -0.18, 0.18, 0.57, 1.07),
    8: (-1.15, -0.67, -0.32, 0.0, 0.32, 0.67, 1.15),
}

MIN_ALPHABET = min(BREAKPOINT_TABLE)
MAX_ALPHABET = max(BREAKPOINT_TABLE)


def breakpoints(alphabet_size: int) -> tuple[float, ...]:
    """Return the ``a - 1`` increasing cut points for alphabet size ``a``."""
    try:
        return BREAKPOINT_TABLE[operator.index(alphabet_size)]
    except (KeyError, TypeError):
        raise UnsupportedAlphabetError(
            f"alphabet size {alphabet_size!r} not supported; supported range is "
            f"{MIN_ALPHABET}-{MAX_ALPHABET}"
        ) from None


def _cell_table_hundredths(alphabet_size: int) -> np.ndarray:
    # Breakpoint values are exact hundredths, so letter distances are kept as
    # integers and sums never depend on addition order.
    cuts = [round(b * 100) for b in breakpoints(alphabet_size)]
    a = alphabet_size
    table = np.zeros((a, a), dtype=np.int64)
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            lo, hi = min(i, j), max(i, j)
            if hi - lo > 1:
                table[i - 1, j - 1] = cuts[hi - 2] - cuts[lo - 1]
    table.setflags(write=False)
    return table


_CELL_TABLES = {a: _cell_table_hundredths(a) for a in BREAKPOINT_TABLE}


def cell_table(alphabet_size: int) -> np.ndarray:
    """Letter-to-letter distance matrix (0-based indices) as floats."""
    breakpoints(alphabet_size)
    return _CELL_TABLES[alphabet_size] / 100


@dataclass(frozen=True)
class SaxConfig:
    alphabet_size: int
    word_length: int
    breakpoints: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", breakpoints(self.alphabet_size))
        if int(self.word_length) != self.word_length or self.word_length < 1:
            raise InvalidInputError(f"word length must be a positive integer, got {self.word_length!r}")


@dataclass(frozen=True)
class NormalizationStats:
    mean: float
    std_dev: float


@dataclass(frozen=True, order=True)
class SaxWord:
    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        breakpoints(self.alphabet_size)
        symbols = tuple(int(s) for s in self.symbols)
        if not symbols:
            raise InvalidInputError("a SAX word needs at least one symbol")
        bad = [s for s in symbols if not 1 <= s <= self.alphabet_size]
        if bad:
            raise InvalidInputError(
                f"symbol index {bad[0]} outside alphabet 1..{self.alphabet_size}"
            )
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def from_letters(cls, letters: str, alphabet_size: int) -> "SaxWord":
        symbols = []
        for ch in letters:
            k = ord(ch) - ord("a") + 1
            if not 1 <= k <= alphabet_size:
                raise InvalidInputError(f"letter {ch!r} outside alphabet of size {alphabet_size}")
            symbols.append(k)
        return cls(tuple(symbols), alphabet_size)

    @property
    def letters(self) -> str:
        return "".join(chr(ord("a") + s - 1) for s in self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.letters


class TransitionEvent(NamedTuple):
    position: int
    from_symbol: int
    to_symbol: int

    def render(self) -> str:
        return f"{self.position}\t{chr(96 + self.from_symbol)}\t{chr(96 + self.to_symbol)}"


def as_series(samples) -> np.ndarray:
    """Validate ``samples`` as a nonempty finite 1-D float series."""
    try:
        x = np.asarray(samples, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"series is not numeric: {exc}") from None
    if x.ndim != 1:
        raise InvalidInputError(f"series must be one-dimensional, got shape {x.shape}")
    if x.size == 0:
        raise InvalidInputError("series is empty")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("series contains non-finite samples")
    return x


def znormalize(series) -> tuple[np.ndarray, NormalizationStats]:
    """Subtract the mean and divide by the population standard deviation.

    A constant series (including a single sample) maps to all zeros and
    reports ``std_dev == 0``.
    """
    x = as_series(series)
    if np.all(x == x[0]):
        return np.zeros_like(x), NormalizationStats(float(x[0]), 0.0)
    # Exact power-of-two rescale into [-1, 1]: no overflow, no subnormals.
    _, exp = np.frexp(np.abs(x).max())
    y = np.ldexp(x, -exp)
    mu = y.mean()
    d = y - mu
    # second pass removes the rounding error of the first mean
    shift = d.mean()
    d -= shift
    sigma = np.sqrt(np.mean(d * d))
    stats = NormalizationStats(float(np.ldexp(mu + shift, exp)), float(np.ldexp(sigma, exp)))
    return d / sigma, stats


def paa(series, word_length: int) -> np.ndarray:
    """Piecewise aggregate approximation down to ``word_length`` segments.

    Each segment covers ``n / w`` sample widths.  When ``w`` does not divide
    ``n`` a boundary sample is split between its two segments in proportion
    to the overlap.
    """
    x = as_series(series)
    n, w = x.size, int(word_length)
    if w != word_length or not 1 <= w <= n:
        raise InvalidInputError(f"word length must lie in [1, {n}], got {word_length!r}")
    if n % w == 0:
        return x.reshape(w, n // w).mean(axis=1)
    # Integrated step function F at the exact rational boundaries i*n/w.
    cum = np.concatenate(([0.0], np.cumsum(x)))
    padded = np.concatenate((x, [0.0]))
    edges = np.arange(w + 1, dtype=np.int64) * n
    whole, rem = np.divmod(edges, w)
    integral = cum[whole] + padded[whole] * (rem / w)
    return np.diff(integral) * (w / n)


def discretize(paa_series, config: SaxConfig) -> SaxWord:
    x = as_series(paa_series)
    if x.size != config.word_length:
        raise InvalidInputError(
            f"PAA series has {x.size} segments, config expects {config.word_length}"
        )
    # side="left": a value equal to a cut point takes the lower symbol.
    idx = np.searchsorted(np.asarray(config.breakpoints), x, side="left") + 1
    return SaxWord(tuple(idx.tolist()), config.alphabet_size)


def sax_transform(series, config: SaxConfig) -> SaxWord:
    """normalise -> PAA -> discretise."""
    normalized, _ = znormalize(series)
    return discretize(paa(normalized, config.word_length), config)


def _check_comparable(w1: SaxWord, w2: SaxWord):
    if w1.alphabet_size != w2.alphabet_size:
        raise InvalidInputError(
            f"alphabet mismatch: {w1.alphabet_size} vs {w2.alphabet_size}"
        )
    if len(w1) != len(w2):
        raise InvalidInputError(f"word length mismatch: {len(w1)} vs {len(w2)}")


def word_distance_hundredths(w1: SaxWord, w2: SaxWord) -> int:
    """Word distance in exact integer hundredths of a standard deviation."""
    _check_comparable(w1, w2)
    table = _CELL_TABLES[w1.alphabet_size]
    i = np.asarray(w1.symbols) - 1
    j = np.asarray(w2.symbols) - 1
    return int(table[i, j].sum())


def word_distance(w1: SaxWord, w2: SaxWord) -> float:
    """Letter-by-letter distance between two words.

    Equal or neighbouring letters cost nothing; otherwise a position costs
    the width of the breakpoint intervals lying between the two letters.
    The costs are summed without any scaling.
    """
    return word_distance_hundredths(w1, w2) / 100


def detect_transitions(word: SaxWord) -> list[TransitionEvent]:
    """One event per adjacent pair of differing letters.

    ``position`` is the 1-based index of the left letter of the pair.
    """
    s = word.symbols
    return [
        TransitionEvent(k + 1, s[k], s[k + 1])
        for k in range(len(s) - 1)
        if s[k] != s[k + 1]
    ]

"""Constant-weight binary words.

A word is a fixed-length 0/1 sequence with a prescribed number of ones.
Words are stored bit-packed in a Python int, bit ``i`` of the mask holding
position ``i`` (0-based; position 1 of the written form).  The canonical
enumeration order is colexicographic on the set of one-positions, which is
the same as numeric order of the packed masks and admits O(w) ranking via
the combinatorial number system.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

MAX_LENGTH = 64


def _check_params(n: int, w: int) -> None:
    if not 0 < w < n:
        raise ValueError(f"need 0 < w < n, got n={n}, w={w}")
    if n > MAX_LENGTH:
        raise ValueError(f"word length {n} exceeds supported maximum {MAX_LENGTH}")


@dataclass(frozen=True, slots=True)
class Word:
    """A binary word of length ``n`` with exactly ``w`` ones, packed into ``mask``."""

    mask: int
    n: int
    w: int

    def __post_init__(self) -> None:
        _check_params(self.n, self.w)
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.n} bits")
        if self.mask.bit_count() != self.w:
            raise ValueError(
                f"mask has {self.mask.bit_count()} ones, expected weight {self.w}"
            )

    @classmethod
    def from_support(cls, n: int, positions) -> "Word":
        """Word with ones exactly at the given 0-based positions."""
        mask = 0
        for p in positions:
            if not 0 <= p < n:
                raise ValueError(f"position {p} out of range for length {n}")
            mask |= 1 << p
        return cls(mask, n, mask.bit_count())

    @classmethod
    def from_string(cls, bits: str) -> "Word":
        """Parse an ASCII bit-string; leftmost character is position 1."""
        if not bits or any(c not in "01" for c in bits):
            raise ValueError(f"not a bit-string: {bits!r}")
        mask = 0
        for i, c in enumerate(bits):
            if c == "1":
                mask |= 1 << i
        return cls(mask, len(bits), mask.bit_count())

    def to_string(self) -> str:
        """ASCII bit-string, position 1 first."""
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to_string()

    def bit(self, i: int) -> int:
        """Value at 0-based position ``i``."""
        if not 0 <= i < self.n:
            raise ValueError(f"position {i} out of range for length {self.n}")
        return self.mask >> i & 1

    def support(self) -> tuple[int, ...]:
        """0-based positions of the ones, ascending."""
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def zeros(self) -> tuple[int, ...]:
        """0-based positions of the zeros, ascending."""
        return tuple(i for i in range(self.n) if not self.mask >> i & 1)

    def complement(self) -> "Word":
        """Word with every bit flipped (weight n - w)."""
        full = (1 << self.n) - 1
        return Word(full ^ self.mask, self.n, self.n - self.w)


def enumerate_words(n: int, w: int) -> list[Word]:
    """All words of S(n,w) in colex order of their one-positions.

    Colex order on supports coincides with numeric order of the packed
    masks, so the successor is Gosper's hack.
    """
    _check_params(n, w)
    out = []
    mask = (1 << w) - 1
    limit = 1 << n
    while mask < limit:
        out.append(Word(mask, n, w))
        # Gosper's hack: next mask with the same popcount.
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)
    return out


def iter_words(n: int, w: int) -> Iterator[Word]:
    """Lazy variant of :func:`enumerate_words`."""
    _check_params(n, w)
    mask = (1 << w) - 1
    limit = 1 << n
    while mask < limit:
        yield Word(mask, n, w)
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def rank(word: Word) -> int:
    """Position of ``word`` in the colex enumeration of S(n,w)."""
    r = 0
    for k, pos in enumerate(word.support(), start=1):
        r += comb(pos, k)
    return r


def unrank(n: int, w: int, r: int) -> Word:
    """Inverse of :func:`rank`: the word of S(n,w) at position ``r``."""
    _check_params(n, w)
    total = comb(n, w)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range [0, {total})")
    mask = 0
    rem = r
    for k in range(w, 0, -1):
        # Largest position p with comb(p, k) <= rem.
        p = k - 1
        while comb(p + 1, k) <= rem:
            p += 1
        mask |= 1 << p
        rem -= comb(p, k)
    return Word(mask, n, w)


def hamming(a: Word, b: Word) -> int:
    """Number of positions where the two words differ."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return (a.mask ^ b.mask).bit_count()


def transpose(word: Word, i: int, j: int) -> Word:
    """Apply the transposition swapping positions ``i`` (a one) and ``j`` (a zero)."""
    if word.bit(i) != 1 or word.bit(j) != 0:
        raise ValueError(
            f"transpose needs a one at {i} and a zero at {j} in {word.to_string()}"
        )
    return Word(word.mask ^ (1 << i) ^ (1 << j), word.n, word.w)


def neighbors(word: Word) -> list[Word]:
    """All w*(n-w) words at Hamming distance exactly 2 from ``word``."""
    out = []
    for i in word.support():
        for j in word.zeros():
            out.append(Word(word.mask ^ (1 << i) ^ (1 << j), word.n, word.w))
    return out


def read_word_file(path) -> list[Word]:
    """Read words from a text file, one bit-string per line.

    Blank lines and lines starting with ``#`` are ignored.  All words must
    share the same length and weight.
    """
    words = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word = Word.from_string(line)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
            words.append(word)
    if not words:
        raise ValueError(f"{path}: no words found")
    n, w = words[0].n, words[0].w
    for word in words[1:]:
        if word.n != n or word.w != w:
            raise ValueError(
                f"{path}: mixed parameters, ({word.n},{word.w}) vs ({n},{w})"
            )
    if len(set(words)) != len(words):
        raise ValueError(f"{path}: duplicate words")
    return words


def write_word_file(path, words) -> None:
    """Write words in the one-bit-string-per-line format."""
    with open(path, "w", encoding="ascii") as fh:
        for word in words:
            fh.write(word.to_string() + "\n")

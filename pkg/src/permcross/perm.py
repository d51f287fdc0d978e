"""Permutations in one-line notation: statistics, symmetries, insertion, sums.

A permutation of size n is the word sigma(1) sigma(2) ... sigma(n); positions
and values are both 1-based throughout, matching the usual combinatorial
conventions.  Most functions accept either a :class:`Permutation` or a plain
sequence of ints, so raw tuples work fine in bulk sweeps.

The statistics of interest pair positions with values through arcs i -> sigma(i):

- a crossing is a pair (i, j) with i < j < sigma(i) < sigma(j) (upper) or
  sigma(i) < sigma(j) <= i < j (lower; the non-strict <= matters),
- a nesting is a pair (i, j) with i < j < sigma(j) < sigma(i) or
  sigma(j) < sigma(i) <= i < j,
- an upper transient is an index i with sigma^-1(i) < i < sigma(i), a lower
  transient one with sigma(i) < i < sigma^-1(i).  Every lower transient index
  contributes a (lower) crossing pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

SYMMETRIES = ("id", "r", "c", "i", "rc", "ri", "ci", "rci")

#: Symmetry tags that are involutions (the other two, ri and ci, have order 4).
INVOLUTIONS = ("id", "r", "c", "i", "rc", "rci")

STAT_NAMES = ("crs", "nes", "ut", "lt", "exc", "des", "inv", "maxdrop")


@dataclass(frozen=True)
class Permutation:
    """A validated permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 1, 3)).n
    3
    >>> Permutation((1, 1, 2))
    Traceback (most recent call last):
        ...
    ValueError: duplicate value 1 at position 2
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        seen = set()
        for pos, value in enumerate(word, start=1):
            if not isinstance(value, int) or not 1 <= value <= n:
                raise ValueError(f"value {value!r} out of range 1..{n} at position {pos}")
            if value in seen:
                raise ValueError(f"duplicate value {value} at position {pos}")
            seen.add(value)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return format_word(self.word)

    def inverse(self) -> "Permutation":
        return Permutation(invert(self.word))

    def apply(self, tag: str) -> "Permutation":
        return Permutation(apply_symmetry(tag, self.word))

    def stats(self) -> "StatBundle":
        return stat_bundle(self.word)


def make_permutation(word: Sequence[int]) -> Permutation:
    """Validate ``word`` and wrap it; the empty sequence gives the size-0 permutation."""
    return Permutation(tuple(word))


def as_word(p) -> tuple[int, ...]:
    """Coerce a Permutation or any int sequence to a word tuple (no validation)."""
    if isinstance(p, Permutation):
        return p.word
    return tuple(p)


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def decreasing(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a permutation word from CLI-style text.

    Contiguous digits are one-letter-per-digit (only possible for n <= 9);
    any comma or whitespace switches to separated mode, which covers n > 9.

    >>> parse_word("4735126")
    (4, 7, 3, 5, 1, 2, 6)
    >>> parse_word("10, 2, 3, 4, 5, 6, 7, 8, 9, 1")[0]
    10
    """
    text = text.strip()
    if text == "":
        return ()
    if any(ch in text for ch in ", \t"):
        parts = [s for s in text.replace(",", " ").split() if s]
    else:
        parts = list(text)
    values = []
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"cannot parse {part!r} as a permutation letter") from None
    return tuple(values)


def format_word(word: Sequence[int]) -> str:
    """Inverse of :func:`parse_word`: contiguous digits when n <= 9, commas otherwise."""
    word = tuple(word)
    if not word:
        return "()"
    if len(word) <= 9:
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def invert(word: Sequence[int]) -> tuple[int, ...]:
    word = as_word(word)
    inv = [0] * len(word)
    for pos, value in enumerate(word, start=1):
        inv[value - 1] = pos
    return tuple(inv)


# ---------------------------------------------------------------------------
# statistics


def crossings(p) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Crossing count and the witnessing index pairs, by definitional scan.

    >>> crossings((4, 7, 3, 5, 1, 2, 6))[0]
    3
    """
    w = as_word(p)
    n = len(w)
    pairs = []
    for jj in range(1, n):
        wj = w[jj]
        j = jj + 1
        for ii in range(jj):
            wi = w[ii]
            if (j < wi and wi < wj) or (wi < wj and wj <= ii + 1):
                pairs.append((ii + 1, j))
    return len(pairs), tuple(pairs)


def nestings(p) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Nesting count and witnessing pairs.

    >>> nestings((4, 7, 3, 5, 1, 2, 6))[0]
    3
    """
    w = as_word(p)
    n = len(w)
    pairs = []
    for jj in range(1, n):
        wj = w[jj]
        j = jj + 1
        for ii in range(jj):
            wi = w[ii]
            if (j < wj and wj < wi) or (wj < wi and wi <= ii + 1):
                pairs.append((ii + 1, j))
    return len(pairs), tuple(pairs)


def crossing_count(p) -> int:
    """Crossing count only, organized around short arc scans for bulk sweeps."""
    w = as_word(p)
    n = len(w)
    count = 0
    inv = [0] * (n + 1)
    for idx, v in enumerate(w):
        inv[v] = idx + 1
    for ii in range(n):
        i = ii + 1
        wi = w[ii]
        if wi > i:
            # upper crossings led by i: j in (i, w(i)) with w(j) > w(i)
            for j in range(i + 1, wi):
                if w[j - 1] > wi:
                    count += 1
        else:
            # lower crossings led by i: values v in (w(i), i] placed after i
            for v in range(wi + 1, i + 1):
                if inv[v] > i:
                    count += 1
    return count


def nesting_count(p) -> int:
    return nestings(p)[0]


def transients(p) -> tuple[int, int]:
    """(upper, lower) transient counts.

    >>> transients((2, 3, 1))
    (1, 0)
    >>> transients((3, 1, 2))
    (0, 1)
    """
    w = as_word(p)
    inv = invert(w)
    ut = lt = 0
    for ii, wi in enumerate(w):
        i = ii + 1
        pos = inv[i - 1]  # sigma^-1(i)
        if pos < i < wi:
            ut += 1
        elif wi < i < pos:
            lt += 1
    return ut, lt


def upper_transient_count(p) -> int:
    return transients(p)[0]


def lower_transient_count(p) -> int:
    return transients(p)[1]


def excedance_count(p) -> int:
    return sum(1 for ii, v in enumerate(as_word(p)) if v > ii + 1)


def descent_count(p) -> int:
    w = as_word(p)
    return sum(1 for ii in range(len(w) - 1) if w[ii] > w[ii + 1])


def inversion_count(p) -> int:
    w = as_word(p)
    n = len(w)
    return sum(1 for ii in range(n) for jj in range(ii + 1, n) if w[ii] > w[jj])


def max_drop(p) -> int:
    """max(i - sigma(i)) floored at 0, so the identity has drop 0."""
    w = as_word(p)
    # the drops sum to zero, so the max is never negative for n >= 1
    return max((ii + 1 - v for ii, v in enumerate(w)), default=0)


STATISTICS = {
    "crs": crossing_count,
    "nes": nesting_count,
    "ut": upper_transient_count,
    "lt": lower_transient_count,
    "exc": excedance_count,
    "des": descent_count,
    "inv": inversion_count,
    "maxdrop": max_drop,
}


@dataclass(frozen=True)
class StatBundle:
    crs: int
    nes: int
    ut: int
    lt: int
    exc: int
    des: int
    inv: int
    maxdrop: int

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in STAT_NAMES}


def stat_bundle(p) -> StatBundle:
    w = as_word(p)
    ut, lt = transients(w)
    return StatBundle(
        crs=crossing_count(w),
        nes=nesting_count(w),
        ut=ut,
        lt=lt,
        exc=excedance_count(w),
        des=descent_count(w),
        inv=inversion_count(w),
        maxdrop=max_drop(w),
    )


# ---------------------------------------------------------------------------
# the eight symmetries


def reverse(p) -> tuple[int, ...]:
    return tuple(reversed(as_word(p)))


def complement(p) -> tuple[int, ...]:
    w = as_word(p)
    n = len(w)
    return tuple(n + 1 - v for v in w)


_LETTERS = {"r": reverse, "c": complement, "i": invert}


def apply_symmetry(tag: str, p) -> tuple[int, ...]:
    """Apply a dihedral symmetry tag; composite tags compose right to left,
    so "rci" means reverse(complement(invert(p))).

    >>> apply_symmetry("rc", (4, 1, 3, 5, 7, 6, 2))
    (6, 2, 1, 3, 5, 7, 4)
    """
    if tag not in SYMMETRIES:
        raise ValueError(f"unknown symmetry {tag!r}; expected one of {SYMMETRIES}")
    w = as_word(p)
    if tag == "id":
        return w
    for letter in reversed(tag):
        w = _LETTERS[letter](w)
    return w


def apply_symmetry_to_patterns(tag: str, patterns) -> tuple[tuple[int, ...], ...]:
    """Image of a pattern set under a symmetry, canonically sorted."""
    return tuple(sorted(apply_symmetry(tag, pat) for pat in patterns))


# reference word whose eight symmetry images are pairwise distinct
_REFERENCE = (4, 1, 3, 5, 7, 6, 2)


def compose_symmetries(f: str, g: str) -> str:
    """The tag of f o g (apply g first, then f)."""
    table = _composition_images()
    return table[apply_symmetry(f, apply_symmetry(g, _REFERENCE))]


@lru_cache(maxsize=1)
def _composition_images() -> dict[tuple[int, ...], str]:
    images = {}
    for tag in SYMMETRIES:
        images[apply_symmetry(tag, _REFERENCE)] = tag
    if len(images) != len(SYMMETRIES):
        raise AssertionError("reference word does not separate the dihedral group")
    return images


# ---------------------------------------------------------------------------
# insertion and sums


def insert(p, a: int, b: int) -> Permutation:
    """Bump every letter >= b up by one, then put b at position a.

    >>> insert((3, 1, 4, 2), 2, 3).word
    (4, 3, 1, 5, 2)
    """
    w = as_word(p)
    n = len(w)
    if not 1 <= a <= n + 1:
        raise ValueError(f"insert position {a} out of range 1..{n + 1}")
    if not 1 <= b <= n + 1:
        raise ValueError(f"insert value {b} out of range 1..{n + 1}")
    bumped = [v + 1 if v >= b else v for v in w]
    bumped.insert(a - 1, b)
    return Permutation(tuple(bumped))


def insert_of_inverse(p, a: int, b: int) -> Permutation:
    """:func:`insert` applied to the inverse word.

    >>> insert_of_inverse((3, 1, 4, 2), 2, 3).word
    (2, 3, 5, 1, 4)
    """
    return insert(invert(as_word(p)), a, b)


def remove_value(p, b: int) -> Permutation:
    """Undo :func:`insert`: drop the letter b and pull every letter > b down by one."""
    w = as_word(p)
    if b not in w:
        raise ValueError(f"value {b} not present")
    reduced = tuple(v - 1 if v > b else v for v in w if v != b)
    return Permutation(reduced)


def direct_sum(p1, p2) -> Permutation:
    """First word, then the second shifted up by |p1|."""
    w1, w2 = as_word(p1), as_word(p2)
    shift = len(w1)
    return Permutation(w1 + tuple(v + shift for v in w2))


def skew_sum(p1, p2) -> Permutation:
    """First word shifted up by |p2|, then the second.

    >>> skew_sum((3, 1, 2), (1, 3, 4, 2)).word
    (7, 5, 6, 1, 3, 4, 2)
    """
    w1, w2 = as_word(p1), as_word(p2)
    shift = len(w2)
    return Permutation(tuple(v + shift for v in w1) + w2)

"""Pattern containment and lazy enumeration of restricted permutation classes.

A class is described declaratively by :class:`ClassSpec`: a size n, a set of
forbidden patterns, and at most one positional constraint.  Enumeration is
always in lexicographic order of the word, so streams are reproducible and
diffable.  Two generators exist: a plain filter over all n! words (the
oracle), and a pruned backtracking generator that abandons any prefix already
containing a forbidden pattern; they must agree, and a test checks that they
do for n <= 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .perm import Permutation, as_word

CONSTRAINT_KINDS = ("one_at", "ends_with", "tail", "maxdrop_le")

#: Hard enumeration bounds: classes with at least one forbidden pattern are
#: exponentially small and may be walked with the pruned generator up to 12;
#: anything backed by the full symmetric group stops at 10.
FULL_GROUP_BOUND = 10
PATTERN_CLASS_BOUND = 12


class BoundExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured size bound."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"enumeration of size {n} exceeds the bound n <= {bound}")
        self.n = n
        self.bound = bound


@dataclass(frozen=True)
class ClassSpec:
    """A restricted permutation set: S_n(forbidden) cut by one positional constraint.

    Constraints:
      ("one_at", k)     value 1 sits at position n+1-k
      ("ends_with", k)  the last letter is k
      ("tail", k)       the word ends with the suffix k, k-1, ..., 1
      ("maxdrop_le", d) every letter satisfies i - sigma(i) <= d
    """

    n: int
    forbidden: tuple[tuple[int, ...], ...] = ()
    constraint: tuple[str, int] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("class size must be nonnegative")
        pats = []
        for pat in self.forbidden:
            word = Permutation(tuple(pat)).word
            if len(word) < 1:
                raise ValueError("forbidden patterns must have size >= 1")
            pats.append(word)
        object.__setattr__(self, "forbidden", tuple(sorted(set(pats))))
        if self.constraint is not None:
            kind, arg = self.constraint
            if kind not in CONSTRAINT_KINDS:
                raise ValueError(f"unknown constraint kind {kind!r}")
            if kind == "maxdrop_le":
                if arg < 0:
                    raise ValueError("maxdrop bound must be >= 0")
            elif not 1 <= arg <= self.n:
                raise ValueError(f"constraint parameter {arg} out of range 1..{self.n}")
            object.__setattr__(self, "constraint", (kind, int(arg)))

    def describe(self) -> dict:
        out: dict = {"n": self.n, "avoid": ["".join(map(str, p)) for p in self.forbidden]}
        if self.constraint is None:
            out["constraint"] = None
        else:
            out["constraint"] = {"kind": self.constraint[0], "k": self.constraint[1]}
        return out


def class_spec(
    n: int,
    avoid: Sequence = (),
    one_at: int | None = None,
    ends_with: int | None = None,
    tail: int | None = None,
    maxdrop_le: int | None = None,
) -> ClassSpec:
    """Convenience constructor; at most one positional constraint may be given."""
    given = [
        ("one_at", one_at),
        ("ends_with", ends_with),
        ("tail", tail),
        ("maxdrop_le", maxdrop_le),
    ]
    picked = [(kind, arg) for kind, arg in given if arg is not None]
    if len(picked) > 1:
        raise ValueError("at most one positional constraint is allowed")
    forbidden = tuple(as_word(p) for p in avoid)
    return ClassSpec(n, forbidden, picked[0] if picked else None)


# ---------------------------------------------------------------------------
# containment


def pattern_of(values: Sequence[int]) -> tuple[int, ...]:
    """Standardize a sequence of distinct ints to the pattern it realizes.

    >>> pattern_of((6, 2, 5))
    (3, 1, 2)
    """
    order = sorted(values)
    rank = {v: r + 1 for r, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def occurrence_positions(p, pat) -> tuple[tuple[int, ...], ...]:
    """All 1-based index tuples at which ``pat`` occurs, in lexicographic order."""
    w, q = as_word(p), as_word(pat)
    m = len(q)
    if m < 1:
        raise ValueError("patterns must have size >= 1")
    hits = []
    for idxs in combinations(range(len(w)), m):
        if pattern_of([w[t] for t in idxs]) == q:
            hits.append(tuple(t + 1 for t in idxs))
    return tuple(hits)


def occurrences(p, pat) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Count occurrences and report witnesses as value subsequences.

    >>> occurrences((4, 1, 6, 2, 3, 7, 5), (3, 1, 2))[0]
    6
    """
    w = as_word(p)
    positions = occurrence_positions(w, pat)
    witnesses = tuple(tuple(w[i - 1] for i in idxs) for idxs in positions)
    return len(witnesses), witnesses


def avoids(p, pats) -> bool:
    """True iff none of the patterns occurs; the empty set is avoided trivially."""
    w = as_word(p)
    for pat in pats:
        q = as_word(pat)
        m = len(q)
        if m < 1:
            raise ValueError("patterns must have size >= 1")
        for idxs in combinations(range(len(w)), m):
            if pattern_of([w[t] for t in idxs]) == q:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def default_bound(spec: ClassSpec) -> int:
    return PATTERN_CLASS_BOUND if spec.forbidden else FULL_GROUP_BOUND


def _constraint_predicate(spec: ClassSpec):
    if spec.constraint is None:
        return lambda w: True
    kind, arg = spec.constraint
    n = spec.n
    if kind == "one_at":
        return lambda w: w[n - arg] == 1
    if kind == "ends_with":
        return lambda w: w[-1] == arg
    if kind == "tail":
        return lambda w: all(w[n - i] == i for i in range(1, arg + 1))
    return lambda w: all(ii + 1 - v <= arg for ii, v in enumerate(w))


def filtered_words(spec: ClassSpec) -> Iterator[tuple[int, ...]]:
    """The oracle generator: all n! words in lex order, filtered after the fact."""
    keep = _constraint_predicate(spec)
    for w in permutations(range(1, spec.n + 1)):
        if keep(w) and avoids(w, spec.forbidden):
            yield w


def pruned_words(spec: ClassSpec) -> Iterator[tuple[int, ...]]:
    """Backtracking generator in lex order, pruning prefixes as early as possible."""
    n = spec.n
    if n == 0:
        yield ()
        return
    forced: dict[int, int] = {}
    drop_bound: int | None = None
    if spec.constraint is not None:
        kind, arg = spec.constraint
        if kind == "one_at":
            forced[n + 1 - arg] = 1
        elif kind == "ends_with":
            forced[n] = arg
        elif kind == "tail":
            for i in range(1, arg + 1):
                forced[n + 1 - i] = i
        else:
            drop_bound = arg
    reserved = frozenset(forced.values())
    pats = spec.forbidden
    pats3 = frozenset(p for p in pats if len(p) == 3)
    other = tuple(p for p in pats if len(p) != 3)
    word: list[int] = []
    used = [False] * (n + 1)

    def completes_pattern(v: int) -> bool:
        # does some forbidden pattern occur ending at the about-to-be-appended letter?
        length = len(word)
        if pats3 and length >= 2:
            # rank the triple (x, y, v) in place; much hotter than the general path
            for jj in range(1, length):
                y = word[jj]
                yv = y > v
                for ii in range(jj):
                    x = word[ii]
                    triple = (
                        1 + (x > y) + (x > v),
                        1 + (y > x) + yv,
                        1 + (v > x) + (v > y),
                    )
                    if triple in pats3:
                        return True
        for pat in other:
            m = len(pat)
            if m == 1:
                return True
            if length < m - 1:
                continue
            for idxs in combinations(range(length), m - 1):
                vals = [word[t] for t in idxs]
                vals.append(v)
                if pattern_of(vals) == pat:
                    return True
        return False

    def rec(pos: int, min_unused: int) -> Iterator[tuple[int, ...]]:
        if pos > n:
            yield tuple(word)
            return
        fv = forced.get(pos)
        candidates = (fv,) if fv is not None else range(1, n + 1)
        for v in candidates:
            if used[v]:
                continue
            if fv is None and v in reserved:
                continue
            if drop_bound is not None and pos - v > drop_bound:
                continue
            if pats and completes_pattern(v):
                continue
            used[v] = True
            word.append(v)
            nxt = min_unused
            while nxt <= n and used[nxt]:
                nxt += 1
            # the smallest unused value must still fit some later position
            if drop_bound is None or nxt > n or pos + 1 - nxt <= drop_bound:
                yield from rec(pos + 1, nxt)
            word.pop()
            used[v] = False

    yield from rec(1, 1)


def class_words(spec: ClassSpec, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    """Lex-ordered stream of raw words in the class, bound-checked."""
    limit = default_bound(spec) if bound is None else bound
    if spec.n > limit:
        raise BoundExceededError(spec.n, limit)
    if spec.forbidden or spec.constraint is not None:
        return pruned_words(spec)
    return permutations(range(1, spec.n + 1))


def enumerate_class(spec: ClassSpec, bound: int | None = None) -> Iterator[Permutation]:
    """Lex-ordered stream of the class members as validated Permutations."""
    for w in class_words(spec, bound):
        yield Permutation(w)


@lru_cache(maxsize=None)
def class_size(spec: ClassSpec, bound: int | None = None) -> int:
    return sum(1 for _ in class_words(spec, bound))

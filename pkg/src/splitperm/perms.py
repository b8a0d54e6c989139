"""Permutations in one-line notation, pattern containment, and 2-labellings.

A permutation of length n is stored as the tuple (pi(1), ..., pi(n)) over the
values 1..n.  Pattern containment search is exact backtracking that returns
the lexicographically smallest witness (by position sequence), so every
result is reproducible.  A labelled permutation carries a {1,2}-label per
value such that each label class reads as a strictly increasing subsequence.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "LabelledPermutation",
    "PatternWitness",
    "contains_pattern",
    "contains_labelled_pattern",
    "iter_pattern_witnesses",
    "iter_labelled_pattern_witnesses",
    "is_321_avoiding",
    "has_decreasing_triple",
    "enumerate_321_avoiders",
    "catalan",
    "labellings_of",
    "inversion_pairs",
    "concat",
    "power",
    "labelled_concat",
    "labelled_power",
    "rank_compress",
    "format_values",
    "parse_permutation",
    "parse_labelled_permutation",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (empty allowed)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def value_at(self, position: int) -> int:
        """Value at a 1-based position."""
        return self.values[position - 1]

    def format(self, paren: bool = False) -> str:
        return format_values(self.values, paren=paren)

    def __str__(self) -> str:
        return self.format()


def format_values(values: Sequence[int], paren: bool = False) -> str:
    """Render values space-separated, or concatenated with (v) for v > 9."""
    if paren:
        return "".join(str(v) if v <= 9 else f"({v})" for v in values)
    return " ".join(str(v) for v in values)


def parse_permutation(text: str) -> Permutation:
    """Parse whitespace-separated decimal values on one line."""
    return Permutation(tuple(int(tok) for tok in text.split()))


def rank_compress(values: Sequence[int]) -> Permutation:
    """Rank-compress distinct integers onto 1..k, preserving relative order."""
    if len(set(values)) != len(values):
        raise ValueError("values must be distinct")
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


@dataclass(frozen=True)
class LabelledPermutation:
    """A permutation plus a value -> {1,2} labelling with increasing classes.

    ``labels_by_value[v - 1]`` is the label of value ``v``.  Validity means
    the 1-labelled values, read left to right, are strictly increasing, and
    likewise for the 2-labelled values.
    """

    perm: Permutation
    labels_by_value: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels_by_value) != len(self.perm):
            raise ValueError("one label per value required")
        if any(lab not in (1, 2) for lab in self.labels_by_value):
            raise ValueError("labels must be 1 or 2")
        last = {1: 0, 2: 0}
        for v in self.perm.values:
            lab = self.labels_by_value[v - 1]
            if v < last[lab]:
                raise ValueError(f"label class {lab} is not increasing")
            last[lab] = v

    @property
    def n(self) -> int:
        return len(self.perm)

    def __len__(self) -> int:
        return len(self.perm)

    def label_of(self, value: int) -> int:
        return self.labels_by_value[value - 1]

    @property
    def position_labels(self) -> tuple[int, ...]:
        """Labels aligned with positions instead of values."""
        return tuple(self.labels_by_value[v - 1] for v in self.perm.values)

    def class_values(self, label: int) -> tuple[int, ...]:
        return tuple(v for v in sorted(range(1, self.n + 1))
                     if self.labels_by_value[v - 1] == label)

    def format(self, paren: bool = False) -> str:
        return (format_values(self.perm.values, paren=paren) + "\n"
                + format_values(self.position_labels, paren=paren))

    def __str__(self) -> str:
        return self.format()


def parse_labelled_permutation(text: str) -> LabelledPermutation:
    """Parse the two-line format: values on line 1, position labels on line 2."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("expected two non-empty lines (values, labels)")
    perm = parse_permutation(lines[0])
    pos_labels = [int(tok) for tok in lines[1].split()]
    if len(pos_labels) != len(perm):
        raise ValueError("label line length mismatch")
    by_value = [0] * len(perm)
    for v, lab in zip(perm.values, pos_labels):
        by_value[v - 1] = lab
    return LabelledPermutation(perm, tuple(by_value))


@dataclass(frozen=True)
class PatternWitness:
    """Strictly increasing 1-based positions of one pattern occurrence."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must be strictly increasing")
        if any(p < 1 for p in self.positions):
            raise ValueError("positions are 1-based")

    def values_from(self, text: Permutation) -> tuple[int, ...]:
        return tuple(text.values[p - 1] for p in self.positions)

    def validates(self, text: Permutation, pattern: Permutation) -> bool:
        """Re-check this witness: right length and order-isomorphic values."""
        if len(self.positions) != len(pattern):
            return False
        if self.positions and self.positions[-1] > len(text):
            return False
        picked = self.values_from(text)
        return _order_isomorphic(picked, pattern.values)

    def validates_labelled(self, text: LabelledPermutation,
                           pattern: LabelledPermutation) -> bool:
        if not self.validates(text.perm, pattern.perm):
            return False
        picked = self.values_from(text.perm)
        return all(text.label_of(v) == pattern.label_of(w)
                   for v, w in zip(picked, pattern.perm.values))


def _order_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    for (x1, y1), (x2, y2) in itertools.combinations(zip(a, b), 2):
        if (x1 < x2) != (y1 < y2):
            return False
    return True


def _nearest_refs(pattern: tuple[int, ...]) -> list[tuple[int, int]]:
    """Per pattern index: indices of the tightest smaller/larger earlier entries.

    Entry j is (lo, hi) where ``pattern[lo]`` is the largest earlier value
    below ``pattern[j]`` and ``pattern[hi]`` the smallest earlier value above
    it, -1 when absent.  Matching the candidate value against just these two
    matched positions enforces full order-isomorphism.
    """
    refs = []
    for j, pj in enumerate(pattern):
        lo = hi = -1
        lo_val, hi_val = 0, len(pattern) + 1
        for a in range(j):
            pa = pattern[a]
            if pa < pj:
                if pa > lo_val:
                    lo_val, lo = pa, a
            elif pa < hi_val:
                hi_val, hi = pa, a
        refs.append((lo, hi))
    return refs


def _find_witness(text: tuple[int, ...], pattern: tuple[int, ...],
                  text_labels: tuple[int, ...] | None = None,
                  pattern_labels: tuple[int, ...] | None = None,
                  ) -> tuple[int, ...] | None:
    """First (lexicographically smallest) occurrence as 0-based positions."""
    k = len(pattern)
    m = len(text)
    if k == 0:
        return ()
    if k > m:
        return None
    refs = _nearest_refs(pattern)
    chosen = [0] * k
    if text_labels is not None:
        by_label: dict[int, list[int]] = {1: [], 2: []}
        for pos, lab in enumerate(text_labels):
            by_label[lab].append(pos)

    def extend(j: int, start: int) -> bool:
        lo_ref, hi_ref = refs[j]
        lo = text[chosen[lo_ref]] if lo_ref >= 0 else 0
        hi = text[chosen[hi_ref]] if hi_ref >= 0 else m + 1
        limit = m - (k - j)
        if text_labels is None:
            for pos in range(start, limit + 1):
                v = text[pos]
                if lo < v < hi:
                    chosen[j] = pos
                    if j + 1 == k or extend(j + 1, pos + 1):
                        return True
        else:
            lane = by_label[pattern_labels[j]]
            for pos in lane[bisect_left(lane, start):]:
                if pos > limit:
                    break
                v = text[pos]
                if lo < v < hi:
                    chosen[j] = pos
                    if j + 1 == k or extend(j + 1, pos + 1):
                        return True
        return False

    return tuple(chosen) if extend(0, 0) else None


def _iter_witnesses(text: tuple[int, ...], pattern: tuple[int, ...],
                    text_labels: tuple[int, ...] | None = None,
                    pattern_labels: tuple[int, ...] | None = None,
                    ) -> Iterator[tuple[int, ...]]:
    """All occurrences as 0-based position tuples, in lexicographic order."""
    k = len(pattern)
    m = len(text)
    if k == 0:
        yield ()
        return
    if k > m:
        return
    refs = _nearest_refs(pattern)
    chosen = [0] * k

    def extend(j: int, start: int) -> Iterator[tuple[int, ...]]:
        lo_ref, hi_ref = refs[j]
        lo = text[chosen[lo_ref]] if lo_ref >= 0 else 0
        hi = text[chosen[hi_ref]] if hi_ref >= 0 else m + 1
        limit = m - (k - j)
        for pos in range(start, limit + 1):
            v = text[pos]
            if not lo < v < hi:
                continue
            if pattern_labels is not None and text_labels[pos] != pattern_labels[j]:
                continue
            chosen[j] = pos
            if j + 1 == k:
                yield tuple(chosen)
            else:
                yield from extend(j + 1, pos + 1)

    yield from extend(0, 0)


def _to_witness(positions: tuple[int, ...] | None) -> PatternWitness | None:
    if positions is None:
        return None
    return PatternWitness(tuple(p + 1 for p in positions))


def contains_pattern(text: Permutation, pattern: Permutation) -> PatternWitness | None:
    """Search for an order-isomorphic subsequence of ``text``.

    Returns the lexicographically smallest witness by position sequence, or
    None when ``text`` avoids ``pattern``.
    """
    return _to_witness(_find_witness(text.values, pattern.values))


def iter_pattern_witnesses(text: Permutation,
                           pattern: Permutation) -> Iterator[PatternWitness]:
    for positions in _iter_witnesses(text.values, pattern.values):
        yield PatternWitness(tuple(p + 1 for p in positions))


def contains_labelled_pattern(text: LabelledPermutation,
                              pattern: LabelledPermutation) -> PatternWitness | None:
    """Like :func:`contains_pattern`, but matched elements must agree in label."""
    return _to_witness(_find_witness(
        text.perm.values, pattern.perm.values,
        text.position_labels, pattern.position_labels))


def iter_labelled_pattern_witnesses(text: LabelledPermutation,
                                    pattern: LabelledPermutation,
                                    ) -> Iterator[PatternWitness]:
    for positions in _iter_witnesses(text.perm.values, pattern.perm.values,
                                     text.position_labels,
                                     pattern.position_labels):
        yield PatternWitness(tuple(p + 1 for p in positions))


_PATTERN_321 = (3, 2, 1)


def has_decreasing_triple(p: Permutation) -> bool:
    """Direct pattern-search route for 321 containment."""
    return _find_witness(p.values, _PATTERN_321) is not None


def is_321_avoiding(p: Permutation) -> bool:
    """True iff the values split into at most two increasing subsequences.

    Greedy chain assignment: each value extends the increasing subsequence
    with the largest feasible tail.  Must agree with
    :func:`has_decreasing_triple` everywhere; the test suite checks this
    exhaustively on short lengths.
    """
    tail_hi = tail_lo = 0
    for v in p.values:
        if v > tail_hi:
            tail_hi = v
        elif v > tail_lo:
            tail_lo = v
        else:
            return False
    return True


def catalan(n: int) -> int:
    """C_n computed from the closed binomial form."""
    from math import comb
    return comb(2 * n, n) // (n + 1)


def enumerate_321_avoiders(n: int) -> list[Permutation]:
    """All 321-avoiding permutations of length n, lexicographically sorted.

    Generated level by level: each member of length m arises from one of
    length m-1 either by inserting m somewhere right of m-1, or by renaming
    m-1 to m and appending m-1.  The rules reach every avoider exactly once;
    a duplicate check is asserted regardless.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    level: list[tuple[int, ...]] = [()]
    for m in range(1, n + 1):
        if m == 1:
            level = [(1,)]
            continue
        grown: list[tuple[int, ...]] = []
        for word in level:
            anchor = word.index(m - 1)
            for slot in range(anchor + 1, m):
                grown.append(word[:slot] + (m,) + word[slot:])
            grown.append(tuple(m if x == m - 1 else x for x in word) + (m - 1,))
        level = grown
    assert len(set(level)) == len(level), "generation produced duplicates"
    level.sort()
    return [Permutation(word) for word in level]


def inversion_pairs(p: Permutation) -> list[tuple[int, int]]:
    """Value pairs (a, b) with a < b and b appearing before a."""
    seen_positions = {v: i for i, v in enumerate(p.values)}
    return [(a, b)
            for a in range(1, p.n + 1)
            for b in range(a + 1, p.n + 1)
            if seen_positions[b] < seen_positions[a]]


def _inversion_components(p: Permutation) -> tuple[dict[int, int], list[list[int]]]:
    """2-colour the inversion adjacency; returns (colour map, components).

    Components are listed by smallest member value; members sorted.  Works
    for any 321-avoiding permutation (its inversion graph is bipartite).
    """
    n = p.n
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in inversion_pairs(p):
        adj[a].add(b)
        adj[b].add(a)
    colour: dict[int, int] = {}
    components: list[list[int]] = []
    for v in range(1, n + 1):
        if v in colour:
            continue
        colour[v] = 0
        queue = [v]
        members = [v]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = colour[x] ^ 1
                    members.append(y)
                    queue.append(y)
                elif colour[y] == colour[x]:
                    raise AssertionError("odd cycle in inversion adjacency "
                                         "of a 321-avoiding permutation")
        components.append(sorted(members))
    return colour, components


def labellings_of(p: Permutation) -> list[LabelledPermutation]:
    """All valid 2-labellings of a 321-avoiding permutation.

    A labelling is valid iff it properly 2-colours the inversion adjacency,
    so there are exactly 2^c of them, c the number of connected components
    of the permutation graph.  Output order is fixed: components by smallest
    value, sign vectors in binary order.
    """
    if not is_321_avoiding(p):
        raise ValueError("labellings are defined for 321-avoiding permutations only")
    colour, components = _inversion_components(p)
    out: list[LabelledPermutation] = []
    for signs in itertools.product((0, 1), repeat=len(components)):
        labels = [0] * p.n
        for flip, members in zip(signs, components):
            for v in members:
                labels[v - 1] = 1 + (colour[v] ^ flip)
        out.append(LabelledPermutation(p, tuple(labels)))
    return out


def concat(p1: Permutation, p2: Permutation) -> Permutation:
    """Place p2 after p1 with every value of p2 raised by len(p1)."""
    shift = len(p1)
    return Permutation(p1.values + tuple(v + shift for v in p2.values))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        raise ValueError("k must be >= 0")
    out = Permutation(())
    for _ in range(k):
        out = concat(out, p)
    return out


def labelled_concat(lp1: LabelledPermutation,
                    lp2: LabelledPermutation) -> LabelledPermutation:
    """Concatenate with value shift; labels ride along unchanged."""
    return LabelledPermutation(concat(lp1.perm, lp2.perm),
                               lp1.labels_by_value + lp2.labels_by_value)


def labelled_power(lp: LabelledPermutation, k: int) -> LabelledPermutation:
    if k < 0:
        raise ValueError("k must be >= 0")
    out = LabelledPermutation(Permutation(()), ())
    for _ in range(k):
        out = labelled_concat(out, lp)
    return out

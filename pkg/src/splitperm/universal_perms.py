"""Construction and verification of universal 321-avoiding permutations.

The length-n^2 universal permutation is assembled from interleaved 2n-blocks;
every block pairs a run of high values with a run of low values so that the
result stays 321-avoiding while realizing every length-n avoider as a
pattern.  Verification here is always by exhaustive search, never by the
construction's own reasoning.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .perms import (
    LabelledPermutation,
    Permutation,
    contains_labelled_pattern,
    contains_pattern,
    enumerate_321_avoiders,
    is_321_avoiding,
    labelled_concat,
    labelled_power,
    labellings_of,
    rank_compress,
)

__all__ = [
    "UniversalPermutation",
    "UniversalPrefix",
    "PermUniversalityReport",
    "universal_permutation",
    "labelled_universal_permutation",
    "verify_universal_permutation",
    "shortest_universal_prefix",
]

WITNESS_SAMPLE_LIMIT = 10


@dataclass(frozen=True)
class UniversalPermutation:
    """The length-n^2 proper n-universal 321-avoiding permutation.

    ``blocks`` records the half-open position ranges of the first block, the
    middle blocks, and the final segment (a single range for the degenerate
    n <= 2 cases).
    """

    n: int
    perm: Permutation
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.perm) != self.n * self.n:
            raise ValueError("universal permutation must have length n^2")
        if not is_321_avoiding(self.perm):
            raise ValueError("universal permutation must avoid 321")


def universal_permutation(n: int) -> UniversalPermutation:
    """Build the universal permutation for length-n 321-avoiders.

    Three regimes: a first block (n+2)1(n+4)2...(3n)n; middle 2n-blocks
    interleaving values 2ni-n+2j with 2ni-3n+2j-1; and a parity-dependent
    tail (2n interleaved values for even n, n ascending values for odd n).
    For n <= 2 the decomposition collapses and the known values are used
    directly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return UniversalPermutation(1, Permutation((1,)), ((0, 1),))
    if n == 2:
        return UniversalPermutation(2, Permutation((3, 1, 4, 2)), ((0, 4),))

    values: list[int] = []
    blocks: list[tuple[int, int]] = []

    def emit_block(pairs: list[tuple[int, int]]) -> None:
        start = len(values)
        for top, bottom in pairs:
            values.append(top)
            values.append(bottom)
        blocks.append((start, len(values)))

    emit_block([(n + 2 * j, j) for j in range(1, n + 1)])

    last_middle = (n - 1) // 2 if n % 2 else n // 2 - 1
    for i in range(2, last_middle + 1):
        emit_block([(2 * n * i - n + 2 * j, 2 * n * i - 3 * n + 2 * j - 1)
                    for j in range(1, n + 1)])

    if n % 2 == 0:
        emit_block([(n * n - n + j, n * n - 3 * n + 2 * j - 1)
                    for j in range(1, n + 1)])
    else:
        start = len(values)
        values.extend(n * n - 2 * n + 2 * j - 1 for j in range(1, n + 1))
        blocks.append((start, len(values)))

    return UniversalPermutation(n, Permutation(tuple(values)), tuple(blocks))


def labelled_universal_permutation(n: int) -> LabelledPermutation:
    """The labelled universal permutation of length 2n^3.

    Concatenates the two labellings of the base universal permutation and
    raises the result to the n-th power.  The base permutation graph must be
    connected (exactly two labellings); anything else is a hard failure.
    """
    base = universal_permutation(n).perm
    labellings = labellings_of(base)
    if len(labellings) != 2:
        raise AssertionError(
            f"expected a connected permutation graph with exactly 2 labellings, "
            f"got {len(labellings)} for n={n}")
    result = labelled_power(labelled_concat(labellings[0], labellings[1]), n)
    assert len(result) == 2 * n ** 3
    assert is_321_avoiding(result.perm)
    return result


@dataclass
class PermUniversalityReport:
    """Outcome of exhaustively checking universality at one size."""

    n: int
    universe_size: int
    all_contained: bool
    misses: list[str] = field(default_factory=list)
    witness_sample: list[dict] = field(default_factory=list)
    labelled_universe_size: int = 0
    labelled_misses: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "universe_size": self.universe_size,
            "all_contained": self.all_contained,
            "misses": self.misses,
            "witness_sample": self.witness_sample,
            "labelled_universe_size": self.labelled_universe_size,
            "labelled_misses": self.labelled_misses,
        }


def verify_universal_permutation(n: int) -> PermUniversalityReport:
    """Check by brute-force search that the construction is universal.

    Every length-n 321-avoider must occur in the length-n^2 permutation, and
    every labelled length-n avoider must occur label-respectingly in the
    labelled universal permutation of length 2n^3.  Misses are collected and
    reported, never swallowed.
    """
    host = universal_permutation(n).perm
    patterns = enumerate_321_avoiders(n)
    misses: list[str] = []
    witness_sample: list[dict] = []
    for pattern in patterns:
        witness = contains_pattern(host, pattern)
        if witness is None:
            misses.append(pattern.format())
        elif len(witness_sample) < WITNESS_SAMPLE_LIMIT:
            assert witness.validates(host, pattern)
            witness_sample.append({"pattern": pattern.format(),
                                   "positions": list(witness.positions)})

    labelled_host = labelled_universal_permutation(n)
    labelled_misses: list[str] = []
    labelled_count = 0
    for pattern in patterns:
        for lp in labellings_of(pattern):
            labelled_count += 1
            witness = contains_labelled_pattern(labelled_host, lp)
            if witness is None:
                labelled_misses.append(lp.format().replace("\n", " / "))
            else:
                assert witness.validates_labelled(labelled_host, lp)

    return PermUniversalityReport(
        n=n,
        universe_size=len(patterns),
        all_contained=not misses and not labelled_misses,
        misses=misses,
        witness_sample=witness_sample,
        labelled_universe_size=labelled_count,
        labelled_misses=labelled_misses,
    )


@dataclass(frozen=True)
class UniversalPrefix:
    """Shortest universal prefix: raw retained values plus their reduction."""

    n: int
    raw_values: tuple[int, ...]
    perm: Permutation

    @property
    def length(self) -> int:
        return len(self.raw_values)


def shortest_universal_prefix(n: int) -> UniversalPrefix:
    """Shortest prefix of the universal permutation that stays n-universal.

    Scans lengths downward with a full exhaustive re-verification at each
    step.  Since universality is monotone under extension, the first failing
    length pins the optimum; both the success at the returned length and the
    failure one element shorter are asserted.  The retained values are kept
    verbatim and also rank-compressed to a genuine permutation.
    """
    base = universal_permutation(n).perm
    patterns = enumerate_321_avoiders(n)

    def prefix_universal(length: int) -> bool:
        prefix = rank_compress(base.values[:length])
        return all(contains_pattern(prefix, sigma) is not None
                   for sigma in patterns)

    length = len(base)
    assert prefix_universal(length)
    while length > 0 and prefix_universal(length - 1):
        length -= 1
    if length > 0:
        assert not prefix_universal(length - 1)
    raw = base.values[:length]
    return UniversalPrefix(n, raw, rank_compress(raw))

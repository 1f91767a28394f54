"""Brute-force enumeration: ground truth for every formula in this package.

Everything here walks words explicitly -- all 2^n of them, or the 2^ceil(n/2)
half words in the palindromic case -- so lengths are capped.  The caps are
per-call arguments with module-level defaults, not hard constants: the oracle
is a validation tool, not the production path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "DEFAULT_PLAIN_CAP",
    "DEFAULT_PALINDROMIC_CAP",
    "EnumerationLimitError",
    "check_cap",
    "classify",
    "zero_run_multiset",
    "iter_words",
    "iter_palindromes",
    "ClassTable",
    "oracle_count",
    "oracle_T",
    "oracle_zero_total",
    "oracle_partition_classes",
    "oracle_partition_table",
    "string_to_composition",
    "composition_to_string",
]

DEFAULT_PLAIN_CAP = 22
DEFAULT_PALINDROMIC_CAP = 30


class EnumerationLimitError(Exception):
    """Requested length exceeds the enumeration cap."""


def _check_word(word: str) -> None:
    if word.strip("01"):
        raise ValueError(f"not a binary word: {word!r}")


def check_cap(n: int, palindromic: bool = False, cap: int | None = None) -> None:
    """Reject lengths beyond the enumeration cap (argument or module default)."""
    if n < 0:
        raise ValueError("word length must be >= 0")
    limit = cap if cap is not None else (
        DEFAULT_PALINDROMIC_CAP if palindromic else DEFAULT_PLAIN_CAP
    )
    if n > limit:
        raise EnumerationLimitError(
            f"length {n} exceeds the enumeration cap {limit}"
        )


def classify(word: str) -> tuple[int, int]:
    """(zero count, longest zero-run length); (0, 0) for an all-ones word."""
    _check_word(word)
    x = word.count("0")
    k = max((len(run) for run in word.split("1")), default=0)
    return x, k


def zero_run_multiset(word: str) -> tuple[int, ...]:
    """Sorted lengths of the maximal zero blocks (the partition-class label)."""
    _check_word(word)
    return tuple(sorted(len(run) for run in word.split("1") if run))


def iter_words(n: int) -> Iterator[str]:
    """All binary words of length n in numeric order; '' for n = 0."""
    for v in range(1 << n):
        yield format(v, f"0{n}b") if n else ""


def iter_palindromes(n: int) -> Iterator[str]:
    """All palindromic words of length n, built from length-ceil(n/2) halves."""
    half = (n + 1) // 2
    for v in range(1 << half):
        h = format(v, f"0{half}b") if half else ""
        yield h + (h[-2::-1] if n % 2 else h[::-1])


@dataclass(frozen=True)
class ClassTable:
    """Enumerated counts per (x, k) class; absent keys mean an empty class."""

    n: int
    palindromic: bool
    counts: dict[tuple[int, int], int]

    def count(self, x: int, k: int) -> int:
        return self.counts.get((x, k), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.counts)


def oracle_count(n: int, palindromic: bool = False, cap: int | None = None) -> ClassTable:
    """Tally every class of length-n words (or palindromes) by enumeration."""
    check_cap(n, palindromic, cap)
    words = iter_palindromes(n) if palindromic else iter_words(n)
    return ClassTable(n, palindromic, dict(Counter(classify(w) for w in words)))


def oracle_T(r: int, n: int, cap: int | None = None) -> int:
    """Number of length-n words with no r consecutive ones, by enumeration."""
    if r < 2:
        raise ValueError("run bound r must be >= 2")
    check_cap(n, False, cap)
    run = "1" * r
    return sum(1 for w in iter_words(n) if run not in w)


def oracle_zero_total(r: int, n: int, cap: int | None = None) -> int:
    """Total zeros over all length-n words with no r consecutive ones."""
    if r < 2:
        raise ValueError("run bound r must be >= 2")
    check_cap(n, False, cap)
    run = "1" * r
    return sum(w.count("0") for w in iter_words(n) if run not in w)


def oracle_partition_classes(
    n: int, x: int, k: int, palindromic: bool = False, cap: int | None = None
) -> int:
    """Distinct zero-run multisets over one class; 0 when the class is empty."""
    check_cap(n, palindromic, cap)
    words = iter_palindromes(n) if palindromic else iter_words(n)
    seen = {zero_run_multiset(w) for w in words if classify(w) == (x, k)}
    return len(seen)


def oracle_partition_table(
    n: int, palindromic: bool = False, cap: int | None = None
) -> dict[tuple[int, int], int]:
    """Distinct zero-run multisets per (x, k) class, in a single sweep."""
    check_cap(n, palindromic, cap)
    words = iter_palindromes(n) if palindromic else iter_words(n)
    seen: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    for w in words:
        seen.setdefault(classify(w), set()).add(zero_run_multiset(w))
    return {key: len(multisets) for key, multisets in seen.items()}


def string_to_composition(word: str) -> tuple[int, ...]:
    """Composition of len(word)+1 read off the '0...01' blocks of word + '1'.

    A zero run of length l becomes the summand l + 1 and every remaining one
    becomes a unit summand, so the longest zero-run k pairs with the largest
    summand k + 1, the summand count is ones(word) + 1, and palindromic words
    pair with palindromic compositions.
    """
    _check_word(word)
    return tuple(len(block) + 1 for block in (word + "1").split("1")[:-1])


def composition_to_string(composition) -> str:
    """Inverse of string_to_composition: the word of length sum - 1."""
    parts = tuple(composition)
    if not parts:
        raise ValueError("a composition needs at least one summand")
    if any(c < 1 for c in parts):
        raise ValueError(f"summands must be positive: {parts}")
    return "1".join("0" * (c - 1) for c in parts)

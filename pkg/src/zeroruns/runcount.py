"""Exact counts F(n, x, k) of binary strings by zero count and longest zero-run.

F(n, x, k) is the number of binary strings of length n containing exactly x
zeros whose longest block of consecutive zeros has length exactly k.  Every
result is an exact Python integer; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._cache import Memo

__all__ = [
    "binomial",
    "F",
    "F_diagonal",
    "F_near_diagonal",
    "F_closed_high_k",
    "support_contains",
    "min_k",
    "SupportSet",
    "support_set",
    "support_size_formula",
    "clear_memo",
    "set_memo_limit",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative rule; 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def support_contains(n: int, x: int, k: int) -> bool:
    """True iff the class (n, x, k) is nonempty, i.e. F(n, x, k) > 0.

    x zeros in blocks of length <= k need at least ceil(x/k) blocks and a
    separating one between consecutive blocks, so the least feasible length
    is x + ceil(x/k) - 1.
    """
    if not 0 <= k <= x <= n:
        return False
    if x == 0:
        return True
    if k == 0:
        return False
    return x + (x + k - 1) // k - 1 <= n


def min_k(n: int, x: int) -> int:
    """Least k with F(n, x, k) > 0, equal to floor(n / (n - x + 1))."""
    if not 1 <= x <= n:
        raise ValueError(f"min_k needs 1 <= x <= n, got x={x}, n={n}")
    return n // (n - x + 1)


def F_diagonal(n: int, x: int) -> int:
    """F(n, x, x) = n - x + 1: the x zeros form a single block."""
    if not 1 <= x <= n:
        raise ValueError(f"F_diagonal needs 1 <= x <= n, got x={x}, n={n}")
    return n - x + 1


def F_near_diagonal(n: int, x: int) -> int:
    """F(n, x, x-1) = (n-x)(n-x+1), an oblong number (x >= 3, n >= 3).

    The x = 2 case is triangular instead: F(n, 2, 1) = (n-1)(n-2)/2.
    """
    if x < 3 or n < 3:
        raise ValueError(f"F_near_diagonal needs x >= 3 and n >= 3, got x={x}, n={n}")
    return (n - x) * (n - x + 1)


def F_closed_high_k(n: int, x: int, k: int) -> int:
    """Closed form 2*C(n-k-1, x-k) + (n-k-1)*C(n-k-2, x-k) for x < 2k.

    Valid on nonempty classes with 1 <= k <= x < 2k and x <= n - 1.  The one
    boundary configuration it misses, x = n - 1 with n odd and k = (n-1)/2,
    is the lone string 0^k 1 0^k and returns 1.
    """
    if n % 2 == 1 and x == n - 1 and k == (n - 1) // 2 and k >= 1:
        return 1
    if not (1 <= k <= x < 2 * k and x <= n - 1 and support_contains(n, x, k)):
        raise ValueError(f"closed form does not cover (n={n}, x={x}, k={k})")
    return 2 * binomial(n - k - 1, x - k) + (n - k - 1) * binomial(n - k - 2, x - k)


_F_memo = Memo()


def F(n: int, x: int, k: int) -> int:
    """Exact class count, total on all integer triples (0 on empty classes).

    Dispatch: infeasible triples return 0, then the k = x diagonal and the
    x < 2k closed form, then the recurrence

        F(n,x,k) = sum_{i=0}^{k-1} F(n-i-1, x-i, k)
                 + sum_{j=0}^{k}   F(n-k-1, x-k, j)

    which classifies strings by the zero block (length i < k, or exactly k)
    they start with.
    """
    if x == 0:
        return 1 if k == 0 and n >= 0 else 0
    if not support_contains(n, x, k):
        return 0
    # 1 <= k <= x <= n from here on
    if k == x:
        return n - x + 1
    if x < 2 * k:
        return 2 * binomial(n - k - 1, x - k) + (n - k - 1) * binomial(n - k - 2, x - k)
    if x == n - 1:
        # x >= 2k plus feasibility force n odd, k = (n-1)/2: only 0^k 1 0^k
        return 1
    got = _F_memo.get((n, x, k))
    if got is not None:
        return got
    acc = 0
    for i in range(k):
        acc += F(n - i - 1, x - i, k)
    for j in range(k + 1):
        acc += F(n - k - 1, x - k, j)
    _F_memo.put((n, x, k), acc)
    return acc


@dataclass(frozen=True)
class SupportSet:
    """All (x, k) pairs with F(n, x, k) > 0 for one fixed n."""

    n: int
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)


def support_set(n: int) -> SupportSet:
    """Sweep the support: for each x, k runs from min_k(n, x) up to x."""
    pairs: set[tuple[int, int]] = set()
    if n >= 0:
        pairs.add((0, 0))
        for x in range(1, n + 1):
            for k in range(min_k(n, x), x + 1):
                pairs.add((x, k))
    return SupportSet(n, frozenset(pairs))


def support_size_formula(n: int) -> int:
    """|support_set(n)| in closed form: C(n+2, 2) - sum floor(n / (i+1))."""
    return binomial(n + 2, 2) - sum(n // (i + 1) for i in range(n + 1))


def clear_memo() -> None:
    _F_memo.clear()


def set_memo_limit(limit: int | None) -> None:
    """Cap the number of memoised F entries (None restores unbounded)."""
    _F_memo.set_limit(limit)

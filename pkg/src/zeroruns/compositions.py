"""Composition and partition statistics induced by the word bijection.

A composition of m corresponds to a word of length m - 1 (see
oracle.string_to_composition), under which the largest summand is the longest
zero-run plus one and two words represent the same partition of m exactly
when their zero-run multisets coincide.  P(n, x, k) below counts those
multiset classes inside one (n, x, k) word class.
"""

from __future__ import annotations

from ._cache import Memo
from .palindromic import F_hat, support_hat_set
from .runcount import F, support_contains, support_set

__all__ = [
    "compositions_by_largest_summand",
    "plus_signs_total",
    "summands_total",
    "two_count_palindromic",
    "P",
    "P_total",
    "partition_function",
    "P_hat",
    "P_hat_total",
    "p_hat_two_printed",
    "clear_memo",
    "set_memo_limit",
]

_METHODS = ("formula", "fsum")


def compositions_by_largest_summand(m: int, palindromic: bool = False) -> tuple[int, ...]:
    """counts[s-1] = number of (palindromic) compositions of m with largest
    summand exactly s, i.e. column sum s - 1 of the order-(m-1) count matrix."""
    if m < 1:
        raise ValueError("compositions are defined for m >= 1")
    count = F_hat if palindromic else F
    n = m - 1
    return tuple(
        sum(count(n, x, s - 1) for x in range(n + 1)) for s in range(1, m + 1)
    )


def plus_signs_total(m: int, palindromic: bool = False, method: str = "formula") -> int:
    """Total '+' signs over all (palindromic) compositions of m >= 2.

    The closed formulas are (m-1) 2^(m-2) in the plain case and, for
    palindromic compositions, (m-1)/2 * 2^((m-1)/2) for odd m and
    (m-1) 2^(m/2-1) for even m; the fsum path evaluates sum x*F(m-1, x, k)
    instead and must agree.
    """
    if m < 2:
        raise ValueError("plus_signs_total is defined for m >= 2")
    if method == "formula":
        if not palindromic:
            return (m - 1) * 2 ** (m - 2)
        if m % 2:
            return (m - 1) // 2 * 2 ** ((m - 1) // 2)
        return (m - 1) * 2 ** (m // 2 - 1)
    if method == "fsum":
        count = F_hat if palindromic else F
        n = m - 1
        return sum(x * count(n, x, k) for x in range(1, n + 1) for k in range(1, x + 1))
    raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")


def summands_total(m: int, palindromic: bool = False, method: str = "formula") -> int:
    """Total summand count over all (palindromic) compositions of m >= 2:
    one more than the '+' signs per composition."""
    if m < 2:
        raise ValueError("summands_total is defined for m >= 2")
    if method == "formula":
        if not palindromic:
            return (m + 1) * 2 ** (m - 2)
        if m % 2:
            return (m + 1) // 2 * 2 ** ((m - 1) // 2)
        return (m + 1) * 2 ** (m // 2 - 1)
    if method == "fsum":
        compositions = 2 ** (m // 2) if palindromic else 2 ** (m - 1)
        return plus_signs_total(m, palindromic, "fsum") + compositions
    raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")


def two_count_palindromic(m: int) -> int:
    """Total number of 2-summands over palindromic {1,2}-compositions of m,
    as the weighted column sum  sum_x x * F_hat(m-1, x, 1)."""
    if m < 2:
        raise ValueError("two_count_palindromic is defined for m >= 2")
    return sum(x * F_hat(m - 1, x, 1) for x in range(1, m))


_P_memo = Memo()


def P(n: int, x: int, k: int) -> int:
    """Partition classes of (n, x, k): distinct zero-run multisets, exactly.

    Equivalently: partitions of x with largest part exactly k and at most
    n - x + 1 parts.  k in {0, 1, x-1, x} admit a single class; k = 2 counts
    the feasible numbers of 00-blocks directly; k >= 3 strips one largest
    part and recurses over the next largest part j.
    """
    if not support_contains(n, x, k):
        return 0
    if k <= 1 or k >= x - 1:
        return 1
    if k == 2:
        # slack i over the tightest packing; min(i+1, floor(x/2)) block pairs
        i = n - x - (x + 1) // 2 + 1
        return min(i + 1, x // 2)
    got = _P_memo.get((n, x, k))
    if got is None:
        lo = (n - k - 1) // (n - x)
        got = sum(P(n - k - 1, x - k, j) for j in range(lo, k + 1))
        _P_memo.put((n, x, k), got)
    return got


def P_total(n: int) -> int:
    """Sum of P over the support of n: the number of partitions of n + 1."""
    return sum(P(n, x, k) for (x, k) in support_set(n).pairs)


def partition_function(m: int) -> int:
    """Classical p(m) via Euler's pentagonal-number recurrence.

    Deliberately shares no code with P: it is the independent cross-check
    for P_total(m - 1).
    """
    if m < 0:
        return 0
    p = [1] + [0] * m
    for i in range(1, m + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > i:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[i - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            j += 1
        p[i] = total
    return p[m]


def P_hat(n: int, x: int, k: int) -> int:
    """Partition classes of the palindromic class (n, x, k).

    A palindrome's multiset is one half's multiset doubled, plus the centred
    zero block when there is one; the block bounded by the centre has length
    2i + 1 (odd n, odd x), 2i (even n), or 0 (odd n, even x: reduces to a
    plain half-length count).  Central blocks shorter than k leave a half
    whose longest run is exactly k; a central block of length k frees the
    half to any run length j <= k.
    """
    if F_hat(n, x, k) == 0:
        return 0
    if k <= 1 or k == x:
        return 1
    if n % 2:
        m = (n - 1) // 2
        if x % 2 == 0:
            return P(m, x // 2, k)
        acc = sum(P(m - i - 1, (x - 2 * i - 1) // 2, k) for i in range(k // 2))
        if k % 2:
            acc += sum(P((n - k - 2) // 2, (x - k) // 2, j) for j in range(k + 1))
        return acc
    m = n // 2
    acc = sum(P(m - i - 1, (x - 2 * i) // 2, k) for i in range((k - 1) // 2 + 1))
    if k % 2 == 0:
        acc += sum(P(m - k // 2 - 1, (x - k) // 2, j) for j in range(k + 1))
    return acc


def P_hat_total(n: int) -> int:
    """Sum of P_hat over the palindromic support of n."""
    return sum(P_hat(n, x, k) for (x, k) in support_hat_set(n).pairs)


def p_hat_two_printed(n: int, x: int) -> int | None:
    """The printed piecewise rules for palindromic k = 2 classes, verbatim.

    Returns None when no printed case matches (wrong parity or negative
    slack i).  These rules are claims under test: P_hat stays authoritative,
    and the verification suite reports every disagreement.
    """
    if n % 2:
        m = (n - 1) // 2
        if x % 2 == 0:
            half = x // 2
            i = m - half - (half + 1) // 2 + 1
            bound = x // 4
        else:
            i = m - x // 2 - (x + 1) // 4
            bound = (x - 1) // 4
    else:
        if x % 2:
            return None
        m = n // 2
        if (x // 2) % 2 == 0:
            i = m - 3 * x // 4
            bound = x // 4
        else:
            i = m - (3 * x - 2) // 4
            bound = (x - 2) // 4
    if i < 0:
        return None
    return i + 1 if i < bound - 1 else bound


def clear_memo() -> None:
    _P_memo.clear()


def set_memo_limit(limit: int | None) -> None:
    """Cap the number of memoised P entries (None restores unbounded)."""
    _P_memo.set_limit(limit)

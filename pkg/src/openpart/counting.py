"""Exact formulas for NP(m, n), the number of open partitions of a V-poset.

Everything is integer or rational arithmetic; no floating point.  The
four single-parameter forms (double sum, sum of squares, product minus
correction, closed form) agree for every n, and the double sum agrees
with brute-force enumeration; see :mod:`openpart.verify`.
"""

from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import AsymmetricSequence, NonPositiveEntry

FORMULA_NAMES = ("double_sum", "squares", "product_minus", "closed")


def binomial(a: int, b: int) -> int:
    """C(a, b), defined as 0 outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def chain_open_count(n: int, k: int) -> int:
    """Open partitions of an n-element chain into k blocks: C(n-1, k-1).

    Each such partition cuts the chain into k consecutive intervals,
    i.e. places k-1 separators on the n-1 edges.
    """
    return binomial(n - 1, k - 1)


def _binomial_row(n: int) -> list:
    """[0, C(n-1,0), C(n-1,1), ..., C(n-1,n-1)], indexed by block count."""
    return [0] + [binomial(n - 1, k - 1) for k in range(1, n + 1)]


def np_double_sum(m: int, n: int) -> int:
    """NP(m, n) as a sum over block counts of the two chain partitions.

    A left partition into k blocks, a right partition into j blocks and
    a join level can be combined in min(k, j) ways, so
    NP(m, n) = sum_{k=1..m} sum_{j=1..n} C(m-1,k-1) C(n-1,j-1) min(k, j).
    """
    left = _binomial_row(m)
    right = _binomial_row(n)
    return sum(
        left[k] * right[j] * min(k, j)
        for k in range(1, m + 1)
        for j in range(1, n + 1)
    )


def np_sum_of_squares(n: int) -> int:
    """NP(n, n) regrouped by join level: sum_{j=1..n} (sum_{k=j..n} C(n-1,k-1))^2."""
    row = _binomial_row(n)
    total = 0
    suffix = 0
    for j in range(n, 0, -1):
        suffix += row[j]
        total += suffix * suffix
    return total


def illegal_pairings_sum(n: int) -> int:
    """sum_{k=1..n} sum_{h=1..k-1} (k-h) C(n-1,h-1) C(n-1,k-1).

    Counts the pairs of (left partition, right partition with join
    level) whose join level exceeds the left block count; 0 for n = 1.
    """
    row = _binomial_row(n)
    return sum(
        (k - h) * row[h] * row[k]
        for k in range(1, n + 1)
        for h in range(1, k)
    )


def np_product_minus(n: int) -> int:
    """NP(n, n) as (n+1) 2^(2n-3) minus the illegal-pairings sum.

    Evaluated as half of an even integer, ((n+1) 4^(n-1) - 2 S) / 2,
    so n = 1 (where 2^(2n-3) alone is fractional) needs no special case.
    """
    doubled = (n + 1) * 4 ** (n - 1) - 2 * illegal_pairings_sum(n)
    assert doubled % 2 == 0
    return doubled // 2


def np_closed(n: int) -> int:
    """NP(n, n) without any summation: (n+1) 2^(2n-3) - (n-1)/2 C(2n-2, n-1).

    Evaluated as half of an even integer, like np_product_minus.
    """
    doubled = (n + 1) * 4 ** (n - 1) - (n - 1) * binomial(2 * n - 2, n - 1)
    assert doubled % 2 == 0
    return doubled // 2


def hirschhorn_rhs(n: int) -> int:
    """(n-1)/2 C(2n-2, n-1): Hirschhorn's closed form for illegal_pairings_sum.

    The product (n-1) C(2n-2, n-1) is even for every n >= 1, so the
    division is exact.
    """
    product = (n - 1) * binomial(2 * n - 2, n - 1)
    assert product % 2 == 0
    return product // 2


def minuend_pairs_count(n: int) -> int:
    """2^(n-1) * sum_{j=1..n} j C(n-1,j-1): all (left partition, right
    partition + join level) pairs before discarding the illegal ones.

    Equals (n+1) 4^(n-1) / 2; asserted rather than computed fractionally.
    """
    value = 2 ** (n - 1) * sum(j * binomial(n - 1, j - 1) for j in range(1, n + 1))
    assert 2 * value == (n + 1) * 4 ** (n - 1)
    return value


def _checked_sequence(seq: Sequence) -> tuple:
    values = tuple(Fraction(x) for x in seq)
    if not values:
        raise AsymmetricSequence("sequence must be nonempty")
    for x in values:
        if x <= 0:
            raise NonPositiveEntry(f"sequence entries must be positive, got {x}")
    n = len(values)
    for i in range(n // 2):
        if values[i] != values[n - 1 - i]:
            raise AsymmetricSequence(
                f"entry {i} is {values[i]} but entry {n - 1 - i} is {values[n - 1 - i]}"
            )
    return values


def _check_pair(a: Sequence, b: Sequence) -> tuple:
    a = _checked_sequence(a)
    b = _checked_sequence(b)
    if len(a) != len(b):
        raise AsymmetricSequence(f"sequence lengths differ: {len(a)} vs {len(b)}")
    return a, b


def lemma1_lhs(a: Sequence, b: Sequence) -> Fraction:
    """sum_{h,k=1..n} min(h, k) a_h b_k for symmetric positive sequences."""
    a, b = _check_pair(a, b)
    n = len(a)
    return sum(
        min(h, k) * a[h - 1] * b[k - 1]
        for h in range(1, n + 1)
        for k in range(1, n + 1)
    )


def lemma1_rhs(a: Sequence, b: Sequence) -> Fraction:
    """(n+1)/2 A B - sum_{h<=k} (k-h) a_h b_k, with A, B the sequence sums.

    Equals lemma1_lhs whenever both sequences are symmetric.  The h = k
    terms of the correction vanish, so the sum runs over strict h < k.
    """
    a, b = _check_pair(a, b)
    n = len(a)
    total_a = sum(a)
    total_b = sum(b)
    correction = sum(
        (k - h) * a[h - 1] * b[k - 1]
        for h in range(1, n + 1)
        for k in range(h + 1, n + 1)
    )
    return Fraction(n + 1, 2) * total_a * total_b - correction


def np_sequence(max_n: int, formula: str = "closed") -> list:
    """[NP(1, 1), ..., NP(max_n, max_n)] computed with the chosen formula.

    ``formula`` is one of "double_sum", "squares", "product_minus", "closed".
    """
    if formula == "double_sum":
        func = lambda n: np_double_sum(n, n)
    elif formula == "squares":
        func = np_sum_of_squares
    elif formula == "product_minus":
        func = np_product_minus
    elif formula == "closed":
        func = np_closed
    else:
        raise ValueError(f"unknown formula {formula!r}; expected one of {FORMULA_NAMES}")
    return [func(n) for n in range(1, max_n + 1)]

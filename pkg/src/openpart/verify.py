"""Cross-checks tying the formulas, the triple bijection, and brute force
together.  Each check returns a CheckResult; run_all drives the full suite.
"""

import random
from fractions import Fraction
from typing import NamedTuple

from . import counting
from .poset import count_open_partitions, enumerate_open_partitions, is_open
from .vposet import VTriple, build_vposet, compositions, decode, encode, enumerate_triples


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def check_formula_agreement(max_n: int) -> CheckResult:
    """np_double_sum(n,n) == np_sum_of_squares == np_product_minus == np_closed."""
    name = "four-way formula agreement"
    for n in range(1, max_n + 1):
        values = {
            "double_sum": counting.np_double_sum(n, n),
            "squares": counting.np_sum_of_squares(n),
            "product_minus": counting.np_product_minus(n),
            "closed": counting.np_closed(n),
        }
        if len(set(values.values())) != 1:
            return CheckResult(name, False, f"disagreement at n={n}: {values}")
    return CheckResult(name, True, f"n = 1..{max_n}")


def check_oracle(oracle_max: int, cap: int | None = None) -> CheckResult:
    """np_double_sum(m, n) equals brute-force counting on the V-poset."""
    name = "brute-force oracle"
    for m in range(1, oracle_max + 1):
        for n in range(1, oracle_max + 1):
            brute = count_open_partitions(build_vposet(m, n).underlying, cap)
            formula = counting.np_double_sum(m, n)
            if brute != formula:
                return CheckResult(
                    name, False, f"(m={m}, n={n}): brute force {brute}, formula {formula}"
                )
    return CheckResult(name, True, f"m, n = 1..{oracle_max}")


def check_bijection(oracle_max: int, cap: int | None = None) -> CheckResult:
    """Decoded triples are exactly the open partitions, with no duplicates."""
    name = "triple/partition bijection"
    for m in range(1, oracle_max + 1):
        for n in range(1, oracle_max + 1):
            v = build_vposet(m, n)
            decoded = [decode(v, tr) for tr in enumerate_triples(v)]
            if len(set(decoded)) != len(decoded):
                return CheckResult(name, False, f"(m={m}, n={n}): duplicate decodes")
            brute = set(enumerate_open_partitions(v.underlying, cap))
            if set(decoded) != brute:
                return CheckResult(
                    name, False,
                    f"(m={m}, n={n}): {len(set(decoded))} decoded vs {len(brute)} open",
                )
    return CheckResult(name, True, f"m, n = 1..{oracle_max}")


def check_roundtrip(limit: int) -> CheckResult:
    """encode(decode(tr)) == tr for every enumerated triple."""
    name = "encode/decode round-trip"
    for m in range(1, limit + 1):
        for n in range(1, limit + 1):
            v = build_vposet(m, n)
            for tr in enumerate_triples(v):
                back = encode(v, decode(v, tr))
                if back != tr:
                    return CheckResult(name, False, f"(m={m}, n={n}): {tr} -> {back}")
    return CheckResult(name, True, f"m, n = 1..{limit}")


def random_symmetric_rationals(rng: random.Random, length: int) -> tuple:
    """A symmetric sequence of positive random rationals of the given length."""
    half = [Fraction(rng.randint(1, 60), rng.randint(1, 60)) for _ in range((length + 1) // 2)]
    return tuple(half[min(i, length - 1 - i)] for i in range(length))


def check_lemma1(trials: int, seed: int = 0, max_len: int = 10) -> CheckResult:
    """lemma1_lhs == lemma1_rhs on random symmetric positive rational pairs."""
    name = "min-pairing identity, random trials"
    rng = random.Random(seed)
    for trial in range(trials):
        length = rng.randint(1, max_len)
        a = random_symmetric_rationals(rng, length)
        b = random_symmetric_rationals(rng, length)
        lhs = counting.lemma1_lhs(a, b)
        rhs = counting.lemma1_rhs(a, b)
        if lhs != rhs:
            return CheckResult(name, False, f"trial {trial}: a={a}, b={b}: {lhs} != {rhs}")
    return CheckResult(name, True, f"{trials} trials, lengths 1..{max_len}, seed {seed}")


def check_lemma1_binomials(max_n: int) -> CheckResult:
    """The identity instantiated with a_i = b_i = C(n-1, i-1) gives NP(n, n)."""
    name = "min-pairing identity, binomial rows"
    for n in range(1, max_n + 1):
        row = [counting.binomial(n - 1, i - 1) for i in range(1, n + 1)]
        lhs = counting.lemma1_lhs(row, row)
        rhs = counting.lemma1_rhs(row, row)
        expected = counting.np_double_sum(n, n)
        if not (lhs == rhs == expected):
            return CheckResult(name, False, f"n={n}: lhs {lhs}, rhs {rhs}, NP {expected}")
    return CheckResult(name, True, f"n = 1..{max_n}")


def check_hirschhorn(max_n: int) -> CheckResult:
    """illegal_pairings_sum(n) == hirschhorn_rhs(n)."""
    name = "Hirschhorn subtrahend identity"
    for n in range(1, max_n + 1):
        lhs = counting.illegal_pairings_sum(n)
        rhs = counting.hirschhorn_rhs(n)
        if lhs != rhs:
            return CheckResult(name, False, f"n={n}: sum {lhs}, closed form {rhs}")
    return CheckResult(name, True, f"n = 1..{max_n}")


def check_decomposition(max_n: int) -> CheckResult:
    """minuend_pairs_count(n) - illegal_pairings_sum(n) == np_double_sum(n, n)."""
    name = "product-minus decomposition"
    for n in range(1, max_n + 1):
        lhs = counting.minuend_pairs_count(n) - counting.illegal_pairings_sum(n)
        rhs = counting.np_double_sum(n, n)
        if lhs != rhs:
            return CheckResult(name, False, f"n={n}: {lhs} != {rhs}")
    return CheckResult(name, True, f"n = 1..{max_n}")


def check_pair_level_decomposition(max_n: int, cap: int | None = None) -> CheckResult:
    """Explicit pair-level version of the product-minus decomposition.

    Pairs are (left composition, (right composition, level <= right block
    count)).  There are minuend_pairs_count(n) of them; exactly
    illegal_pairings_sum(n) have level > left block count; the legal rest
    decode to exactly the open partitions.
    """
    name = "pair-level decomposition"
    for n in range(1, max_n + 1):
        v = build_vposet(n, n)
        lefts = list(compositions(n))
        right_pairs = [
            (right, level)
            for right in compositions(n)
            for level in range(1, len(right) + 1)
        ]
        pairs = [(left, right, level) for left in lefts for (right, level) in right_pairs]
        if len(pairs) != counting.minuend_pairs_count(n):
            return CheckResult(
                name, False,
                f"n={n}: {len(pairs)} pairs, minuend says {counting.minuend_pairs_count(n)}",
            )
        illegal = [(l, r, lv) for (l, r, lv) in pairs if lv > len(l)]
        if len(illegal) != counting.illegal_pairings_sum(n):
            return CheckResult(
                name, False,
                f"n={n}: {len(illegal)} illegal pairs, subtrahend says "
                f"{counting.illegal_pairings_sum(n)}",
            )
        decoded = {
            decode(v, VTriple(l, r, lv)) for (l, r, lv) in pairs if lv <= len(l)
        }
        if len(decoded) != len(pairs) - len(illegal):
            return CheckResult(name, False, f"n={n}: legal pairs decode with collisions")
        brute = set(enumerate_open_partitions(v.underlying, cap))
        if decoded != brute:
            return CheckResult(
                name, False, f"n={n}: decoded legal pairs differ from open partitions"
            )
    return CheckResult(name, True, f"n = 1..{max_n}")


def run_all(
    max_n: int = 50,
    oracle_max: int = 4,
    lemma_trials: int = 200,
    seed: int = 0,
    cap: int | None = None,
) -> list:
    """The full invariant suite, in a fixed order."""
    return [
        check_formula_agreement(max_n),
        check_oracle(oracle_max, cap),
        check_bijection(oracle_max, cap),
        check_roundtrip(min(oracle_max + 2, 6)),
        check_lemma1(lemma_trials, seed),
        check_lemma1_binomials(min(max_n, 30)),
        check_hirschhorn(max_n),
        check_decomposition(max_n),
        check_pair_level_decomposition(min(max_n, 5), cap),
    ]

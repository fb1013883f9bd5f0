"""Schur polynomials and partition enumeration, exactly.

Two independent routes to a Schur polynomial are kept side by side:

* `schur` -- the production path, a Jacobi-Trudi determinant of complete
  homogeneous polynomials, expanded sparsely with memoized minors;
* `schur_bialternant` -- the alternant determinant divided exactly by the
  Vandermonde determinant, used as a cross-check oracle in the test suite.

`schur_eval_padded` evaluates a Schur polynomial at a value vector that may
contain zeros: zeros are moved to the end (Schur polynomials are symmetric,
so this is harmless), and the value is zero unless the shape fits inside the
nonzero prefix, in which case the shape is evaluated at the nonzero values
alone.  All enumeration orders are deterministic.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .polynomials import MultiPoly, divexact_binomial

_H_CACHE: dict[tuple[int, int], MultiPoly] = {}
_SCHUR_CACHE: dict[tuple[tuple[int, ...], int], MultiPoly] = {}


def check_partition(f: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing tuple of nonnegative ints; return it stripped."""
    f = tuple(f)
    for a, b in zip(f, f[1:]):
        if a < b:
            raise ValueError(f"{f} is not weakly decreasing")
    if f and (f[-1] < 0 or not all(isinstance(a, int) for a in f)):
        raise ValueError(f"{f} has negative or non-integer parts")
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def complete_homogeneous(k: int, n: int) -> MultiPoly:
    """Sum of all degree-k monomials in n variables (h_k); zero for k < 0."""
    if k < 0:
        return MultiPoly.zero(n)
    cached = _H_CACHE.get((k, n))
    if cached is not None:
        return cached
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = 1
    if k > 0 and n == 0:
        p = MultiPoly.zero(0)
    else:
        p = MultiPoly(n, terms) if terms else MultiPoly.zero(n)
    _H_CACHE[(k, n)] = p
    return p


def _det_sparse(rows: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    """Determinant by minor expansion, sparsest rows first, minors memoized."""
    n = len(rows)
    if n == 0:
        return MultiPoly.one(nvars)
    order = sorted(range(n), key=lambda i: (sum(1 for e in rows[i] if e), i))
    # parity of the row permutation
    sign = 1
    seen = list(order)
    for i in range(n):
        for j in range(i + 1, n):
            if seen[i] > seen[j]:
                sign = -sign
    rows = [rows[i] for i in order]
    full_mask = (1 << n) - 1
    memo: dict[int, MultiPoly] = {}

    def minor(i: int, mask: int) -> MultiPoly:
        if mask == 0:
            return MultiPoly.one(nvars)
        got = memo.get(mask)
        if got is not None:
            return got
        acc = MultiPoly.zero(nvars)
        sgn = 1
        m = mask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            entry = rows[i][j]
            if entry:
                sub = minor(i + 1, mask ^ low)
                if not sub.is_zero:
                    contrib = sub if entry == 1 else entry * sub
                    acc = acc + (contrib if sgn > 0 else -contrib)
            sgn = -sgn
            m ^= low
        memo[mask] = acc
        return acc

    det = minor(0, full_mask)
    return det if sign > 0 else -det


def schur(f: Sequence[int], n: int) -> MultiPoly:
    """Schur polynomial s_f in n variables via the Jacobi-Trudi determinant."""
    shape = check_partition(f)
    if len(shape) > n:
        raise ValueError(f"shape {tuple(f)} has more than {n} parts")
    key = (shape, n)
    cached = _SCHUR_CACHE.get(key)
    if cached is not None:
        return cached
    r = len(shape)
    rows = [
        [complete_homogeneous(shape[i] - i + j, n) for j in range(r)]
        for i in range(r)
    ]
    p = _det_sparse(rows, n)
    _SCHUR_CACHE[key] = p
    return p


def schur_bialternant(f: Sequence[int], n: int) -> MultiPoly:
    """Schur polynomial as alternant / Vandermonde, with exact division.

    Independent of `schur`: the numerator determinant is a signed sum of
    monomials over permutations, and the Vandermonde division proceeds one
    binomial (x_i - x_j) at a time by synthetic division.
    """
    shape = check_partition(f)
    if len(shape) > n:
        raise ValueError(f"shape {tuple(f)} has more than {n} parts")
    if n == 0:
        return MultiPoly.one(0)
    padded = list(shape) + [0] * (n - len(shape))
    exps = [padded[i] + n - 1 - i for i in range(n)]  # strictly decreasing
    terms: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        vec = [0] * n
        for i, pos in enumerate(perm):
            vec[pos] = exps[i]
        terms[tuple(vec)] = sign
    p = MultiPoly(n, terms)
    for i in range(n):
        for j in range(i + 1, n):
            p = divexact_binomial(p, i, j)
    return p


def schur_eval_padded(f: Sequence[int], values: Sequence[MultiPoly]) -> MultiPoly:
    """Evaluate s_f at a value vector that may contain zeros.

    Requires len(f) <= len(values).  Returns a polynomial in the common
    variable count of `values`.  Values beyond the shape length count as
    extra variables set to the given entries (zeros kill the value whenever
    the shape sticks out past the nonzero entries).
    """
    shape = check_partition(f)
    values = list(values)
    if len(shape) > len(values):
        raise ValueError("shape longer than value vector")
    if not values:
        return MultiPoly.one(0)
    ambient = values[0].nvars
    for v in values:
        if v.nvars != ambient:
            raise ValueError("values live in different variable counts")
    nonzero = [v for v in values if not v.is_zero]
    k = len(nonzero)
    if len(shape) > k:
        return MultiPoly.zero(ambient)
    if k == 0:
        return MultiPoly.one(ambient)
    return schur(shape, k).substitute(nonzero, nvars=ambient)


def partitions_bounded(weight: int, max_parts: int) -> list[tuple[int, ...]]:
    """All partitions of `weight` into at most `max_parts` parts.

    Tuples carry no trailing zeros; the order is deterministic (first part
    descending, then recursively the same).  weight 0 yields the empty shape.
    """
    if weight < 0 or max_parts < 0:
        raise ValueError("weight and max_parts must be nonnegative")
    out: list[tuple[int, ...]] = []
    # iterative DFS; each stack entry is (prefix, remaining, cap on next part)
    stack: list[tuple[tuple[int, ...], int, int]] = [((), weight, weight)]
    while stack:
        prefix, rem, cap = stack.pop()
        if rem == 0:
            out.append(prefix)
            continue
        if len(prefix) == max_parts:
            continue
        # push ascending so larger next-parts pop first
        for part in range(1, min(rem, cap) + 1):
            stack.append((prefix + (part,), rem - part, part))
    out.sort(reverse=True)
    return out


def alternating_sum(f: Sequence[int]) -> int:
    """f1 - f2 + f3 - ... (the t1-exponent of a torus vector)."""
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(f))


def even_index_sum(f: Sequence[int]) -> int:
    """f2 + f4 + ... (the t2-exponent of a torus vector)."""
    return sum(f[1::2])


def dominant_vectors(length: int, l1: int, l2: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing nonnegative vectors with bounded torus exponents.

    Yields each f in Z^length with f1 >= ... >= f_length >= 0 whose
    alternating sum is <= l1 and whose even-index sum is <= l2, exactly once,
    in ascending lexicographic order.  Both exponents are nonnegative on
    weakly decreasing vectors, so the window (l1, l2) leaves finitely many
    vectors: f1 <= l1 + l2.
    """
    if l1 < 0 or l2 < 0:
        raise ValueError("window bounds must be nonnegative")

    def rec(prefix: list[int], pos: int) -> Iterator[tuple[int, ...]]:
        if pos == length:
            if alternating_sum(prefix) <= l1 and even_index_sum(prefix) <= l2:
                yield tuple(prefix)
            return
        # completed pairs only ever add nonnegative amounts to both sums
        pairs_done = prefix[: 2 * (pos // 2)]
        if alternating_sum(pairs_done) > l1 or even_index_sum(prefix) > l2:
            return
        hi = prefix[-1] if prefix else l1 + l2
        for value in range(hi + 1):
            prefix.append(value)
            yield from rec(prefix, pos + 1)
            prefix.pop()

    yield from rec([], 0)


def doubled_shape(f: Sequence[int], pairs: int, extra_zeros: int) -> tuple[int, ...]:
    """(f1, f1, f2, f2, ..., f_pairs, f_pairs) followed by extra zeros."""
    padded = list(f) + [0] * (pairs - len(f))
    if len(padded) != pairs:
        raise ValueError("shape has more parts than requested pairs")
    out: list[int] = []
    for part in padded:
        out.extend((part, part))
    out.extend([0] * extra_zeros)
    return tuple(out)

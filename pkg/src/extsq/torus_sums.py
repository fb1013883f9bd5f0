"""Torus sums realizing the local zeta integrals on their support.

On the diagonal torus a spherical Whittaker function is supported on
dominant exponent vectors, where it equals a half-density factor times a
Schur polynomial in the parameter entries.  Unipotent integration is
already folded in, so each zeta integral collapses to a sum over the torus
lattice; the half-density exponents cancel against the measure exactly,
and the functions here assert that cancellation term by term.

Exponents of the residue-field size q are carried as integer half-powers
(q^{e/2} is stored as e), never as radicals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polynomials import MultiPoly
from .lfactors import SatakeParams, formal_ext_sq_L, standard_L
from .series import TruncSeries1, TruncSeries2
from .symmetric import (
    alternating_sum,
    doubled_shape,
    dominant_vectors,
    even_index_sum,
    partitions_bounded,
    schur_eval_padded,
)


def delta_half_exponent(g: Sequence[int], n: int) -> int:
    """Exponent e with delta_B^(1/2)(diag(pi^g)) = q^(e/2): e = -sum (n-2i+1) g_i."""
    if len(g) != n:
        raise ValueError(f"vector of length {len(g)} does not fit GL_{n}")
    return -sum((n - 2 * (i + 1) + 1) * gi for i, gi in enumerate(g))


@dataclass(frozen=True)
class WhittakerValue:
    """A Whittaker function value q^(q_half_exponent/2) * coefficient."""

    q_half_exponent: int
    coefficient: MultiPoly

    @property
    def is_zero(self) -> bool:
        return self.coefficient.is_zero


def whittaker_value(g: Sequence[int], params: SatakeParams) -> WhittakerValue:
    """Normalized spherical Whittaker value at the torus exponent vector g.

    Zero off the dominant cone; on it, the half-density exponent together
    with the Schur polynomial of the shape g at the parameter entries.
    The last exponent must be nonnegative (central reduction); g_n < 0 is a
    usage error, not a zero.
    """
    g = tuple(g)
    n = params.n
    if len(g) != n:
        raise ValueError(f"exponent vector of length {len(g)} does not match n={n}")
    if g and g[-1] < 0:
        raise ValueError("last torus exponent must be nonnegative")
    if any(a < b for a, b in zip(g, g[1:])):
        return WhittakerValue(0, MultiPoly.zero(params.nvars))
    return WhittakerValue(
        delta_half_exponent(g, n),
        schur_eval_padded(g, params.entries),
    )


def _whittaker_torus_coefficient(g: Sequence[int], params: SatakeParams) -> MultiPoly:
    """Whittaker value times the half-density of the measure, which cancels."""
    value = whittaker_value(g, params)
    if value.is_zero:
        return value.coefficient
    remaining = value.q_half_exponent - delta_half_exponent(g, params.n)
    if remaining != 0:
        raise ArithmeticError("half-density exponents failed to cancel")
    return value.coefficient


def js_even_series(params: SatakeParams, order: int) -> TruncSeries1:
    """Torus sum for the even-rank exterior-square integral, truncated.

    n = 2m: sum over partitions f with at most m-1 parts of the Whittaker
    value at (f1,f1,...,f_{m-1},f_{m-1},0,0), graded by |f|.  All-nonzero
    parameter vectors are allowed here; whether the identity with the
    exterior-square factor is asserted is the caller's concern.
    """
    n = params.n
    if n < 2 or n % 2:
        raise ValueError("even-rank sum needs even n >= 2")
    m = n // 2
    coeffs = []
    for l in range(order + 1):
        acc = MultiPoly.zero(params.nvars)
        for f in partitions_bounded(l, m - 1):
            g = doubled_shape(f, m - 1, 2)
            acc = acc + _whittaker_torus_coefficient(g, params)
        coeffs.append(acc)
    return TruncSeries1(params.nvars, coeffs)


def js_odd_series(params: SatakeParams, order: int) -> TruncSeries1:
    """Torus sum for the odd-rank exterior-square integral, truncated.

    n = 2m+1: shapes (f1,f1,...,f_m,f_m,0) over partitions with at most m
    parts, graded by |f|.
    """
    n = params.n
    if n < 3 or n % 2 == 0:
        raise ValueError("odd-rank sum needs odd n >= 3")
    m = (n - 1) // 2
    coeffs = []
    for l in range(order + 1):
        acc = MultiPoly.zero(params.nvars)
        for f in partitions_bounded(l, m):
            g = doubled_shape(f, m, 1)
            acc = acc + _whittaker_torus_coefficient(g, params)
        coeffs.append(acc)
    return TruncSeries1(params.nvars, coeffs)


def bf_series(params: SatakeParams, l1: int, l2: int) -> TruncSeries2:
    """Two-variable torus sum pairing the standard and exterior-square factors.

    Sums s_(f,0)(params) t1^(f1-f2+f3-...) t2^(f2+f4+...) over weakly
    decreasing nonnegative f in Z^(n-1) inside the truncation window.
    """
    n = params.n
    if n < 2:
        raise ValueError("need n >= 2")
    zero = MultiPoly.zero(params.nvars)
    grid = [[zero for _ in range(l2 + 1)] for _ in range(l1 + 1)]
    for f in dominant_vectors(n - 1, l1, l2):
        coeff = _whittaker_torus_coefficient(f + (0,), params)
        if coeff.is_zero:
            continue
        a = alternating_sum(f)
        b = even_index_sum(f)
        grid[a][b] = grid[a][b] + coeff
    return TruncSeries2(params.nvars, grid)


@dataclass(frozen=True)
class BFProbeResult:
    """Outcome of dividing the odd-rank two-variable sum by its product form.

    `correction` is sum / (standard factor in t1 * exterior-square factor in
    t2) as a truncated series.  When some entry vanishes the correction is
    asserted to be exactly 1 (`matches_product` True); with all entries
    nonzero no identity is asserted and the correction is purely empirical.
    """

    correction: TruncSeries2
    conductor_hypothesis: bool
    matches_product: bool


def bf_odd_correction_probe(params: SatakeParams, l1: int, l2: int) -> BFProbeResult:
    """Compare the odd-rank two-variable sum against the pure product form."""
    n = params.n
    if n < 3 or n % 2 == 0:
        raise ValueError("probe applies to odd n >= 3")
    lhs = bf_series(params, l1, l2)
    product = TruncSeries2.from_t1(standard_L(params).series(l1), l2) * TruncSeries2.from_t2(
        formal_ext_sq_L(params).series(l2), l1
    )
    correction = lhs * product.inverse()
    matches = correction == TruncSeries2.unit(params.nvars, (l1, l2))
    if params.has_zero and not matches:
        raise ArithmeticError(
            "vanishing-entry hypothesis holds but the product identity failed"
        )
    return BFProbeResult(correction, params.has_zero, matches)

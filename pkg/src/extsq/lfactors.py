"""Local L-factors built from parameter vectors, and their expansions.

A parameter vector (`SatakeParams`) models the semisimple data of an
unramified-type local representation: n entries, each either an exact
rational number or a distinguished indeterminate ("symbolic"), with zeros
recording directions lost to ramification.  One mechanism covers both uses,
since a rational entry is just a degree-zero polynomial.

An `LFactor` is stored through its reciprocal: an exact polynomial P(t) with
P(0) = 1, standing for 1/P(q^{-s}) with t = q^{-s}.  The exterior-square
factor pairs the entries; its truncated series admits an expansion into
Schur polynomials over doubled shapes, which `ext_sq_expansion` and
`formal_L_via_full_expansion` realize so the identity can be verified
coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomials import MultiPoly, Scalar, UniPoly
from .series import TruncSeries1, product_of_inverse_linear_factors
from .symmetric import (
    check_partition,
    doubled_shape,
    partitions_bounded,
    schur_eval_padded,
)


class SatakeParams:
    """A vector of exact-or-symbolic parameter entries.

    Entries are MultiPoly values in a shared symbol space: symbolic entries
    are single variables, numeric entries are constants (possibly zero).
    """

    __slots__ = ("n", "nvars", "entries")
    __hash__ = None

    def __init__(self, entries: Sequence[MultiPoly], nvars: int | None = None):
        entries = tuple(entries)
        if entries:
            nv = entries[0].nvars
            for e in entries:
                if e.nvars != nv:
                    raise ValueError("entries live in different symbol spaces")
            if nvars is not None and nvars != nv:
                raise ValueError("nvars does not match entries")
            nvars = nv
        elif nvars is None:
            nvars = 0
        self.n = len(entries)
        self.nvars = nvars
        self.entries = entries

    @classmethod
    def parse(cls, tokens: Sequence[str | int | Fraction]) -> "SatakeParams":
        """Build from tokens: "sym" for a fresh symbol, otherwise a rational.

        Symbols are numbered left to right; rationals accept "3", "-2/5", etc.
        """
        nsyms = sum(1 for tok in tokens if isinstance(tok, str) and tok.strip() == "sym")
        entries: list[MultiPoly] = []
        next_sym = 0
        for tok in tokens:
            if isinstance(tok, str) and tok.strip() == "sym":
                entries.append(MultiPoly.variable(nsyms, next_sym))
                next_sym += 1
            else:
                try:
                    value = Fraction(tok.strip() if isinstance(tok, str) else tok)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"malformed rational entry {tok!r}") from exc
                entries.append(MultiPoly.constant(nsyms, value))
        return cls(entries, nvars=nsyms)

    @classmethod
    def symbolic(cls, n: int) -> "SatakeParams":
        return cls([MultiPoly.variable(n, i) for i in range(n)], nvars=n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SatakeParams):
            return self.nvars == other.nvars and self.entries == other.entries
        return NotImplemented

    @property
    def nonzero_entries(self) -> tuple[MultiPoly, ...]:
        return tuple(e for e in self.entries if not e.is_zero)

    @property
    def has_zero(self) -> bool:
        return any(e.is_zero for e in self.entries)

    def zeros_trailing(self) -> "SatakeParams":
        """Same entries with zeros moved last (order otherwise preserved)."""
        nz = [e for e in self.entries if not e.is_zero]
        z = [e for e in self.entries if e.is_zero]
        return SatakeParams(nz + z, nvars=self.nvars)

    def __repr__(self) -> str:
        return f"SatakeParams([{', '.join(e.format() for e in self.entries)}])"


class LFactor:
    """An inverse-polynomial local factor 1/P(t), held via P.

    The reciprocal is a polynomial in t with MultiPoly coefficients and
    constant coefficient exactly 1.
    """

    __slots__ = ("nvars", "reciprocal")
    __hash__ = None

    def __init__(self, reciprocal: Sequence[MultiPoly], nvars: int | None = None):
        coeffs = list(reciprocal)
        if not coeffs:
            raise ValueError("reciprocal polynomial cannot be empty")
        nv = coeffs[0].nvars
        for c in coeffs:
            if c.nvars != nv:
                raise ValueError("reciprocal coefficients in different symbol spaces")
        if nvars is not None and nvars != nv:
            raise ValueError("nvars does not match coefficients")
        if coeffs[0] != 1:
            raise ValueError("reciprocal polynomial must have constant coefficient 1")
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs.pop()
        self.nvars = nv
        self.reciprocal = tuple(coeffs)

    @classmethod
    def one(cls, nvars: int) -> "LFactor":
        return cls([MultiPoly.one(nvars)])

    @classmethod
    def from_linear_roots(cls, ms: Sequence[MultiPoly], nvars: int) -> "LFactor":
        """prod_k (1 - m_k t) as an LFactor; zero factors contribute 1."""
        coeffs = [MultiPoly.one(nvars)]
        for m in ms:
            if m.nvars != nvars:
                raise ValueError("root in wrong symbol space")
            if m.is_zero:
                continue
            nxt = [MultiPoly.zero(nvars) for _ in range(len(coeffs) + 1)]
            for d, c in enumerate(coeffs):
                nxt[d] = nxt[d] + c
                nxt[d + 1] = nxt[d + 1] - c * m
            coeffs = nxt
        return cls(coeffs, nvars=nvars)

    @property
    def degree(self) -> int:
        return len(self.reciprocal) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LFactor):
            return self.nvars == other.nvars and self.reciprocal == other.reciprocal
        return NotImplemented

    def series(self, order: int) -> TruncSeries1:
        """Truncated expansion of 1/P(t) to the given order."""
        return TruncSeries1.from_tpoly(self.reciprocal, self.nvars, order).inverse()

    def as_unipoly(self) -> UniPoly:
        """The reciprocal as a rational-coefficient polynomial; symbolic input raises."""
        out: list[Scalar] = []
        for c in self.reciprocal:
            if not c.is_constant:
                raise ValueError("reciprocal has symbolic coefficients")
            out.append(c.constant_value())
        return UniPoly(out)

    def format(self, names: Sequence[str] | None = None) -> str:
        pieces = []
        for d, c in enumerate(self.reciprocal):
            if c.is_zero:
                continue
            body = c.format(names) if names is not None else c.format()
            if len(c) > 1 and d:
                body = f"({body})"
            tpow = "" if d == 0 else ("*t" if d == 1 else f"*t^{d}")
            pieces.append(f"{body}{tpow}")
        if not pieces:
            return "0"
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def __repr__(self) -> str:
        return f"LFactor(1/({self.format()}))"


def standard_L(params: SatakeParams) -> LFactor:
    """Standard local factor: reciprocal prod_i (1 - a_i t), zeros skipped."""
    return LFactor.from_linear_roots(params.entries, params.nvars)


def formal_ext_sq_L(params: SatakeParams) -> LFactor:
    """Exterior-square factor: reciprocal prod_{i<j} (1 - a_i a_j t)."""
    n = params.n
    roots = [
        params.entries[i] * params.entries[j]
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return LFactor.from_linear_roots(roots, params.nvars)


def _doubled_shape_series(
    params: SatakeParams, pairs: int, extra_zeros: int, order: int
) -> TruncSeries1:
    """sum_l t^l sum_{|f|=l, <=pairs parts} s_(doubled f)(params), truncated."""
    coeffs = []
    for l in range(order + 1):
        acc = MultiPoly.zero(params.nvars)
        for f in partitions_bounded(l, pairs):
            shape = doubled_shape(f, pairs, extra_zeros)
            acc = acc + schur_eval_padded(shape, params.entries)
        coeffs.append(acc)
    return TruncSeries1(params.nvars, coeffs)


def ext_sq_expansion(params: SatakeParams, order: int) -> TruncSeries1:
    """Schur expansion of the exterior-square series over the nonzero entries.

    With k nonzero entries the series equals sum over partitions f with at
    most floor(k/2) parts of s_(f1,f1,...,fh,fh)(nonzero entries) t^{|f|}
    (one trailing zero part when k is odd).  Zeros are normalized to the
    tail internally; symmetry of Schur polynomials makes that sound.
    """
    normalized = params.zeros_trailing()
    nonzero = list(normalized.nonzero_entries)
    k = len(nonzero)
    h = k // 2
    coeffs = []
    for l in range(order + 1):
        acc = MultiPoly.zero(params.nvars)
        for f in partitions_bounded(l, h):
            shape = doubled_shape(f, h, k % 2)
            acc = acc + schur_eval_padded(shape, nonzero)
        coeffs.append(acc)
    return TruncSeries1(params.nvars, coeffs)


@dataclass(frozen=True)
class ExpansionOutcome:
    """Expansion result plus the even-case hypothesis flag.

    For even n the full-length expansion is only an identity when at least
    one entry vanishes; `even_hypothesis_ok` is False when that hypothesis
    failed (the series is still returned, unasserted).
    """

    series: TruncSeries1
    even_hypothesis_ok: bool


def formal_L_via_full_expansion(params: SatakeParams, order: int) -> ExpansionOutcome:
    """Doubled-shape expansion carried over all n entries via padded evaluation.

    n = 2m sums shapes (f1,f1,...,f_{m-1},f_{m-1},0,0); n = 2m+1 sums
    (f1,f1,...,f_m,f_m,0).  Padded evaluation kills every shape that sticks
    out past the nonzero entries, which is what makes the even case an
    identity precisely when some entry is zero.
    """
    n = params.n
    if n < 2:
        raise ValueError("need at least two entries")
    if n % 2 == 0:
        pairs, extra = n // 2 - 1, 2
        ok = params.has_zero
    else:
        pairs, extra = (n - 1) // 2, 1
        ok = True
    series = _doubled_shape_series(params, pairs, extra, order)
    return ExpansionOutcome(series, ok)


def reciprocal_quotient(num: LFactor, den: LFactor) -> tuple[MultiPoly, ...] | None:
    """Quotient of reciprocals num/den when den divides num exactly, else None.

    Both reciprocals have constant coefficient 1, so the candidate quotient
    is read off a truncated series inverse and then verified by one exact
    polynomial multiplication (sound and complete).
    """
    if num.nvars != den.nvars:
        raise ValueError("factors in different symbol spaces")
    if den.degree > num.degree:
        return None
    order = num.degree
    q_series = (
        TruncSeries1.from_tpoly(num.reciprocal, num.nvars, order)
        * TruncSeries1.from_tpoly(den.reciprocal, den.nvars, order).inverse()
    )
    q = list(q_series.coeffs)
    while len(q) > 1 and q[-1].is_zero:
        q.pop()
    # exact verification: den * q == num as polynomials in t
    prod = [MultiPoly.zero(num.nvars) for _ in range(len(den.reciprocal) + len(q) - 1)]
    for i, a in enumerate(den.reciprocal):
        if a.is_zero:
            continue
        for j, b in enumerate(q):
            if not b.is_zero:
                prod[i + j] = prod[i + j] + a * b
    while len(prod) > 1 and prod[-1].is_zero:
        prod.pop()
    if tuple(prod) == num.reciprocal:
        return tuple(q)
    return None

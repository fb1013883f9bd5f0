"""Graded block model of Weil-Deligne representations and their L-factors.

A representation is a direct sum of blocks.  Each block carries a grade in
a finite abelian group (recording which tamely ramified character inertia
acts by), a Steinberg length k >= 1, and a nonzero Frobenius scalar: on a
block, Frobenius is diag(a, a/q, ..., a/q^(k-1)) and the monodromy operator
N is the Jordan shift killing the last basis vector.  This forces the
commutation rule Phi N = q^(-1) N Phi, which is asserted on construction.

L-factors restrict Frobenius to the monodromy kernel inside the grade-0
(inertia-invariant) part; the kernel is computed by exact Gaussian
elimination over the rationals.  Frobenius scalars may be symbolic, but
only when every block has k = 1, so that q never mixes into a symbol;
mixed symbolic/Steinberg input is rejected.  q itself is an exact integer
>= 2, never a symbol.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .lfactors import (
    LFactor,
    SatakeParams,
    formal_ext_sq_L,
    reciprocal_quotient,
)
from .polynomials import MultiPoly, unipoly_divides


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups Z/m1 x ... x Z/mr; elements are int tuples."""

    orders: tuple[int, ...]

    def __post_init__(self):
        for m in self.orders:
            if not isinstance(m, int) or m < 1:
                raise ValueError("cyclic orders must be positive ints")

    @property
    def rank(self) -> int:
        return len(self.orders)

    def reduce(self, a: Sequence[int]) -> tuple[int, ...]:
        if len(a) != len(self.orders):
            raise ValueError(
                f"element {tuple(a)} does not fit group of rank {len(self.orders)}"
            )
        return tuple(x % m for x, m in zip(a, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(self.reduce(a), self.reduce(b), self.orders))

    def neg(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(self.reduce(a), self.orders))

    def is_zero(self, a: Sequence[int]) -> bool:
        return all(x % m == 0 for x, m in zip(a, self.orders))

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(m) for m in self.orders))


@dataclass(frozen=True)
class WDBlock:
    """One indecomposable summand: grade, Steinberg length, Frobenius scalar.

    The scalar is a nonzero rational, or a string naming a formal symbol.
    """

    grade: tuple[int, ...]
    length: int
    scalar: int | Fraction | str


class WDRep:
    """A graded block representation over residue size q (exact int >= 2)."""

    __slots__ = (
        "q",
        "group",
        "blocks",
        "symbols",
        "nvars",
        "dim",
        "phi_diag",
        "n_target",
        "grades",
        "block_spans",
    )

    def __init__(self, q: int, group: FiniteAbelianGroup, blocks: Sequence[WDBlock]):
        if not isinstance(q, int) or q < 2:
            raise ValueError("q must be an exact integer >= 2")
        if not blocks:
            raise ValueError("representation needs at least one block")
        self.q = q
        self.group = group

        symbols: list[str] = []
        any_steinberg = any(b.length >= 2 for b in blocks)
        normalized: list[WDBlock] = []
        for b in blocks:
            if not isinstance(b.length, int) or b.length < 1:
                raise ValueError("Steinberg length must be an int >= 1")
            grade = group.reduce(b.grade)
            scalar = b.scalar
            if isinstance(scalar, str):
                if any_steinberg:
                    raise ValueError(
                        "symbolic Frobenius scalars are only supported when every "
                        "block has length 1 (mixed symbolic/Steinberg input)"
                    )
                if scalar not in symbols:
                    symbols.append(scalar)
            else:
                scalar = Fraction(scalar)
                if scalar == 0:
                    raise ValueError("Frobenius scalar must be nonzero")
            normalized.append(WDBlock(grade, b.length, scalar))
        self.blocks = tuple(normalized)
        self.symbols = tuple(symbols)
        self.nvars = len(symbols)

        phi: list[MultiPoly] = []
        target: list[int | None] = []
        grades: list[tuple[int, ...]] = []
        spans: list[tuple[int, int]] = []
        for b in self.blocks:
            if isinstance(b.scalar, str):
                alpha = MultiPoly.variable(self.nvars, symbols.index(b.scalar))
            else:
                alpha = MultiPoly.constant(self.nvars, b.scalar)
            start = len(phi)
            for l in range(b.length):
                phi.append(alpha * Fraction(1, q**l))
                target.append(len(phi) if l < b.length - 1 else None)
                grades.append(b.grade)
            spans.append((start, len(phi)))
        self.dim = len(phi)
        self.phi_diag = tuple(phi)
        self.n_target = tuple(target)
        self.grades = tuple(grades)
        self.block_spans = tuple(spans)
        _assert_commutation(self)

    def n_matrix(self) -> list[list[int]]:
        mat = [[0] * self.dim for _ in range(self.dim)]
        for src, dst in enumerate(self.n_target):
            if dst is not None:
                mat[dst][src] = 1
        return mat

    def __repr__(self) -> str:
        return f"WDRep(q={self.q}, dim={self.dim}, blocks={len(self.blocks)})"


def build_matrices(
    rep: WDRep,
) -> tuple[list[list[MultiPoly]], list[list[int]], tuple[tuple[int, ...], ...]]:
    """Dense (Frobenius, monodromy, grade labels) triple for inspection."""
    zero = MultiPoly.zero(rep.nvars)
    phi = [
        [rep.phi_diag[i] if i == j else zero for j in range(rep.dim)]
        for i in range(rep.dim)
    ]
    return phi, rep.n_matrix(), rep.grades


def _assert_commutation(rep: WDRep) -> None:
    """Check Phi N = q^(-1) N Phi entrywise on the structured data."""
    qinv = Fraction(1, rep.q)
    for src, dst in enumerate(rep.n_target):
        if dst is None:
            continue
        if rep.phi_diag[dst] != rep.phi_diag[src] * qinv:
            raise ArithmeticError("block data violates Phi N = q^-1 N Phi")


def _kernel_basis(
    mat: list[list[Fraction]], ncols: int
) -> tuple[list[list[Fraction]], list[int]]:
    """Kernel basis of an exact matrix via Gauss-Jordan elimination.

    Returns (vectors, free_columns); vector i has 1 at free_columns[i] and 0
    at every other free column, so coordinates in this basis can be read off
    directly.  Deterministic: columns are processed left to right.
    """
    rows = [list(r) for r in mat]
    pivots: list[tuple[int, int]] = []  # (row, col)
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                sel = r
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = Fraction(1, 1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis: list[list[Fraction]] = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, c in pivots:
            v[c] = -rows[r][fc]
        basis.append(v)
    return basis, free_cols


def _restricted_kernel_lfactor(
    phi_diag: Sequence[MultiPoly],
    nmat: Sequence[Sequence[int]],
    indices: Sequence[int],
    nvars: int,
) -> LFactor:
    """det(1 - t Phi | ker N within the given coordinate subspace)^-1.

    Frobenius is diagonal here, so once the kernel basis is in reduced form
    each basis vector must be an eigenvector (its eigenvalue sits at the
    vector's free column); that is verified exactly, and the determinant is
    the product of the verified eigenvalues.
    """
    indices = list(indices)
    index_set = set(indices)
    for c in indices:
        for r in range(len(nmat)):
            if nmat[r][c] and r not in index_set:
                raise ArithmeticError("monodromy does not preserve the graded piece")
    sub = [[Fraction(nmat[r][c]) for c in indices] for r in indices]
    basis, free_cols = _kernel_basis(sub, len(indices))
    roots: list[MultiPoly] = []
    for v, fc in zip(basis, free_cols):
        lam = phi_diag[indices[fc]]
        for coord, entry in enumerate(v):
            if entry and phi_diag[indices[coord]] != lam:
                raise ArithmeticError("kernel basis vector is not Frobenius-stable")
        roots.append(lam)
    return LFactor.from_linear_roots(roots, nvars)


def wd_lfactor(rep: WDRep) -> LFactor:
    """Standard L-factor: Frobenius on (ker N) meet grade 0.

    Equals prod over grade-0 blocks of (1 - scalar q^(1-k) t)^-1.
    """
    idx0 = [i for i in range(rep.dim) if rep.group.is_zero(rep.grades[i])]
    return _restricted_kernel_lfactor(rep.phi_diag, rep.n_matrix(), idx0, rep.nvars)


@dataclass(frozen=True)
class ExtSquareData:
    """Exterior square of a rep in the wedge basis e_i ^ e_j (i < j)."""

    pairs: tuple[tuple[int, int], ...]
    phi_diag: tuple[MultiPoly, ...]
    nmatrix: tuple[tuple[int, ...], ...]
    grades: tuple[tuple[int, ...], ...]
    nvars: int


def ext_sq(rep: WDRep) -> ExtSquareData:
    """Induced data on the exterior square: Phi tensor Phi and N x 1 + 1 x N."""
    pairs = [(i, j) for i in range(rep.dim) for j in range(i + 1, rep.dim)]
    index = {p: w for w, p in enumerate(pairs)}
    dim2 = len(pairs)
    nmat = [[0] * dim2 for _ in range(dim2)]
    for w, (i, j) in enumerate(pairs):
        for a, b in ((rep.n_target[i], j), (i, rep.n_target[j])):
            if a is None or b is None or a == b:
                continue
            if a < b:
                nmat[index[(a, b)]][w] += 1
            else:
                nmat[index[(b, a)]][w] -= 1
    phi = tuple(rep.phi_diag[i] * rep.phi_diag[j] for i, j in pairs)
    grades = tuple(rep.group.add(rep.grades[i], rep.grades[j]) for i, j in pairs)
    return ExtSquareData(
        tuple(pairs),
        phi,
        tuple(tuple(row) for row in nmat),
        grades,
        rep.nvars,
    )


def ext_sq_lfactor(rep: WDRep) -> LFactor:
    """Exterior-square L-factor of the rep, by exact elimination."""
    data = ext_sq(rep)
    idx0 = [w for w in range(len(data.pairs)) if rep.group.is_zero(data.grades[w])]
    return _restricted_kernel_lfactor(data.phi_diag, data.nmatrix, idx0, rep.nvars)


def standard_satake(rep: WDRep) -> SatakeParams:
    """Frobenius eigenvalues on (ker N) meet grade 0, padded with zeros to dim."""
    entries: list[MultiPoly] = []
    for b, (start, stop) in zip(rep.blocks, rep.block_spans):
        if rep.group.is_zero(b.grade):
            entries.append(rep.phi_diag[stop - 1])
    entries += [MultiPoly.zero(rep.nvars)] * (rep.dim - len(entries))
    return SatakeParams(entries, nvars=rep.nvars)


@dataclass(frozen=True)
class DivisibilityVerdict:
    divides: bool
    strict: bool
    quotient: tuple[MultiPoly, ...] | None
    formal_factor: LFactor
    ext_sq_factor: LFactor


def divisibility_check(rep: WDRep) -> DivisibilityVerdict:
    """Does the pair-product factor divide the exterior-square factor?

    Both are reciprocals of polynomials with constant term 1, so the formal
    factor divides the exterior-square factor as L-functions exactly when
    its reciprocal divides the other reciprocal; the quotient polynomial is
    returned, with positive degree meaning strict divisibility.
    """
    formal = formal_ext_sq_L(standard_satake(rep))
    full = ext_sq_lfactor(rep)
    if rep.nvars == 0:
        uq = unipoly_divides(full.as_unipoly(), formal.as_unipoly())
        quotient = (
            tuple(MultiPoly.constant(0, c) for c in uq.coeffs) if uq is not None else None
        )
    else:
        quotient = reciprocal_quotient(full, formal)
    divides = quotient is not None
    strict = divides and len(quotient) > 1
    return DivisibilityVerdict(divides, strict, quotient, formal, full)


def hypothesis_H_violation(
    group: FiniteAbelianGroup, grades: Sequence[Sequence[int]]
) -> tuple[int, int] | None:
    """First pair (i, j) of ramified grades with g_i + g_j = 0, or None."""
    reduced = [group.reduce(g) for g in grades]
    for i in range(len(reduced)):
        if group.is_zero(reduced[i]):
            continue
        for j in range(i + 1, len(reduced)):
            if not group.is_zero(reduced[j]) and group.is_zero(
                group.add(reduced[i], reduced[j])
            ):
                return i, j
    return None


def hypothesis_H(group: FiniteAbelianGroup, grades: Sequence[Sequence[int]]) -> bool:
    """No two ramified grades sum to zero."""
    return hypothesis_H_violation(group, grades) is None


@dataclass(frozen=True)
class PropHResult:
    equal: bool
    formal_factor: LFactor
    ext_sq_factor: LFactor


def prop_H_equality(rep: WDRep) -> PropHResult:
    """For k=1-only reps satisfying the pairing hypothesis, the two exterior
    square factors must agree exactly; violations are precondition errors."""
    if any(b.length != 1 for b in rep.blocks):
        raise ValueError("equality statement applies to length-1 blocks only")
    grades = [b.grade for b in rep.blocks]
    bad = hypothesis_H_violation(rep.group, grades)
    if bad is not None:
        i, j = bad
        raise ValueError(
            f"pairing hypothesis violated: ramified grades {grades[i]} (block {i}) "
            f"and {grades[j]} (block {j}) sum to zero"
        )
    formal = formal_ext_sq_L(standard_satake(rep))
    full = ext_sq_lfactor(rep)
    return PropHResult(formal == full, formal, full)


# -- randomized inputs for verification suites ------------------------------


def random_group(rng, max_rank: int = 2, max_order: int = 6) -> FiniteAbelianGroup:
    rank = rng.randint(1, max_rank)
    return FiniteAbelianGroup(tuple(rng.randint(1, max_order) for _ in range(rank)))


def _random_scalar(rng) -> Fraction:
    num = rng.choice([x for x in range(-9, 10) if x])
    den = rng.randint(1, 9)
    return Fraction(num, den)


def random_wdrep(
    rng,
    q_choices: Sequence[int] = (2, 3, 5),
    max_dim: int = 6,
    max_blocks: int = 4,
    max_length: int = 3,
) -> WDRep:
    """A random block rep with rational scalars, for divisibility suites."""
    group = random_group(rng)
    q = rng.choice(list(q_choices))
    blocks: list[WDBlock] = []
    dim = 0
    nblocks = rng.randint(1, max_blocks)
    for _ in range(nblocks):
        room = max_dim - dim
        if room < 1:
            break
        k = rng.randint(1, min(max_length, room))
        grade = tuple(rng.randrange(m) for m in group.orders)
        blocks.append(WDBlock(grade, k, _random_scalar(rng)))
        dim += k
    if not blocks:
        blocks.append(WDBlock(group.zero(), 1, _random_scalar(rng)))
    return WDRep(q, group, blocks)


def random_k1_rep(
    rng,
    q_choices: Sequence[int] = (2, 3, 5),
    max_dim: int = 6,
    require_hypothesis: bool = True,
) -> WDRep:
    """A random rep with every block of length 1 (Frobenius-semisimple).

    With `require_hypothesis`, grades are resampled until no two ramified
    grades sum to zero (guaranteed to terminate: after bounded attempts all
    but one grade collapse to zero).
    """
    group = random_group(rng)
    q = rng.choice(list(q_choices))
    n = rng.randint(1, max_dim)
    for attempt in range(200):
        grades = [tuple(rng.randrange(m) for m in group.orders) for _ in range(n)]
        if not require_hypothesis or hypothesis_H(group, grades):
            break
    else:
        grades = [group.zero()] * (n - 1) + [
            tuple(rng.randrange(m) for m in group.orders)
        ]
    blocks = [WDBlock(g, 1, _random_scalar(rng)) for g in grades]
    return WDRep(q, group, blocks)

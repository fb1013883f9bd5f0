"""Exact sparse multivariate polynomial arithmetic.

Coefficients are Python ints, promoted to fractions.Fraction only when a
value is non-integral; there is no floating point anywhere in this package.
Polynomials are immutable: every operation returns a new object, so values
can be shared freely (including across concurrent workers).

Exponent vectors are packed into a single int, 16 bits per variable, which
makes a monomial product one integer addition.  Individual exponents are
therefore capped at 65535 -- orders of magnitude above anything the torus
sums or determinants in this package produce.

Term order for display and reporting is graded lexicographic: lower total
degree first, then lexicographically by exponent vector with earlier
variables dominating.  Internal dicts are unordered; ordering is applied
when terms are listed or formatted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

Scalar = int | Fraction

_EXP_BITS = 16
_EXP_MASK = (1 << _EXP_BITS) - 1
# User-supplied exponents are checked against a lower cap so that repeated
# products cannot overflow a 16-bit field.
_EXP_INPUT_CAP = 1 << 12


def _norm_scalar(c: Scalar) -> Scalar:
    """Collapse integral Fractions to int so hot loops stay on int arithmetic."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponents must be nonnegative ints, got {e!r}")
        if e >= _EXP_INPUT_CAP:
            raise ValueError(f"exponent {e} exceeds supported range")
        key = (key << _EXP_BITS) | e
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    out = [0] * nvars
    for i in range(nvars - 1, -1, -1):
        out[i] = key & _EXP_MASK
        key >>= _EXP_BITS
    return tuple(out)


class MultiPoly:
    """A sparse polynomial in a fixed number of variables with exact coefficients.

    Operations between polynomials require equal `nvars`; a mismatch raises
    ValueError.  Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "_terms")
    __hash__ = None  # mutable dict inside; identity-keyed caching only

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        packed: dict[int, Scalar] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {tuple(exps)} has wrong dimension for {nvars} variables"
                    )
                c = _norm_scalar(c)
                if c:
                    key = _pack(exps)
                    val = packed.get(key, 0) + c
                    if val:
                        packed[key] = _norm_scalar(val)
                    else:
                        packed.pop(key, None)
        self._terms = packed

    @classmethod
    def _raw(cls, nvars: int, packed: dict[int, Scalar]) -> "MultiPoly":
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = packed
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {0: 1})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        c = _norm_scalar(c)
        return cls._raw(nvars, {0: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        return cls._raw(nvars, {1 << (_EXP_BITS * (nvars - 1 - i)): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], c: Scalar = 1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): c})

    # -- predicates and views ----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Scalar:
        if not self._terms:
            return 0
        if self.is_constant:
            return self._terms[0]
        raise ValueError("polynomial is not constant")

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(_unpack(k, self.nvars)) for k in self._terms)

    def terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in graded lexicographic order (deterministic)."""
        unpacked = [(_unpack(k, self.nvars), c) for k, c in self._terms.items()]
        unpacked.sort(key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
        return unpacked

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong dimension")
        return self._terms.get(_pack(exps), 0)

    # -- ring operations ----------------------------------------------------

    def _check_dim(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"dimension mismatch: {self.nvars} vs {other.nvars} variables"
            )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        return NotImplemented

    def __add__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_dim(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for k, c in other._terms.items():
            val = out.get(k, 0) + c
            if val:
                out[k] = _norm_scalar(val)
            else:
                out.pop(k, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return MultiPoly.constant(self.nvars, other) - self

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = _norm_scalar(other)
            if not other:
                return MultiPoly.zero(self.nvars)
            if other == 1:
                return self
            return MultiPoly._raw(
                self.nvars,
                {k: _norm_scalar(c * other) for k, c in self._terms.items()},
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_dim(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly.zero(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, Scalar] = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                val = get(k, 0) + ca * cb
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
        # normalize any integral Fractions produced by mixed arithmetic
        for k, c in out.items():
            if isinstance(c, Fraction) and c.denominator == 1:
                out[k] = c.numerator
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        if e == 0:
            return MultiPoly.one(self.nvars)
        if len(self._terms) == 1:
            ((k, c),) = self._terms.items()
            return MultiPoly._raw(self.nvars, {k * e: _norm_scalar(c**e)})
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    # -- substitution -------------------------------------------------------

    def substitute(self, values: Sequence["MultiPoly"], *, nvars: int | None = None) -> "MultiPoly":
        """Evaluate at values[i] for variable i.

        All values must share one variable count, which becomes the result's;
        pass `nvars` explicitly when `values` is empty.
        """
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        if values:
            m = values[0].nvars
            for v in values:
                if v.nvars != m:
                    raise ValueError("substitution values live in different variable counts")
        elif nvars is None:
            raise ValueError("nvars required when substituting into a 0-variable polynomial")
        else:
            m = nvars
        # fast path: identity substitution
        if m == self.nvars and all(
            len(v._terms) == 1 and v._terms.get(1 << (_EXP_BITS * (m - 1 - i))) == 1
            for i, v in enumerate(values)
        ):
            return self
        acc = MultiPoly.zero(m)
        for key, c in self._terms.items():
            exps = _unpack(key, self.nvars)
            term = MultiPoly.constant(m, c)
            for v, e in zip(values, exps):
                if e:
                    term = term * (v**e)
                    if term.is_zero:
                        break
            acc = acc + term
        return acc

    # -- formatting ----------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, graded-lex term order, exact coefficients."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("need one name per variable")
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps, c in self.terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.format()!r})"


def divexact_binomial(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """Divide p exactly by (x_i - x_j); raise ArithmeticError if inexact.

    Synthetic division in x_i with coefficients that are polynomials in the
    remaining variables: q_{d-1} = c_d + x_j * q_d, remainder c_0 + x_j * q_0.
    """
    if i == j or not (0 <= i < p.nvars and 0 <= j < p.nvars):
        raise ValueError("need two distinct variable indices")
    if p.is_zero:
        return p
    shift_i = _EXP_BITS * (p.nvars - 1 - i)
    shift_j = _EXP_BITS * (p.nvars - 1 - j)
    # split into slices by the exponent of x_i (keys with that field cleared)
    slices: dict[int, dict[int, Scalar]] = {}
    for key, c in p._terms.items():
        d = (key >> shift_i) & _EXP_MASK
        slices.setdefault(d, {})[key - (d << shift_i)] = c
    top = max(slices)
    if top == 0:
        raise ArithmeticError("inexact division: dividend free of x_i")
    out: dict[int, Scalar] = {}
    carry: dict[int, Scalar] = {}  # q_d while descending
    for d in range(top, 0, -1):
        q_d: dict[int, Scalar] = dict(slices.get(d, {}))
        for k, c in carry.items():
            k2 = k + (1 << shift_j)
            val = q_d.get(k2, 0) + c
            if val:
                q_d[k2] = _norm_scalar(val)
            else:
                q_d.pop(k2, None)
        dm1 = (d - 1) << shift_i
        for k, c in q_d.items():
            out[k + dm1] = c
        carry = q_d
    remainder = dict(slices.get(0, {}))
    for k, c in carry.items():
        k2 = k + (1 << shift_j)
        val = remainder.get(k2, 0) + c
        if val:
            remainder[k2] = _norm_scalar(val)
        else:
            remainder.pop(k2, None)
    if remainder:
        raise ArithmeticError("inexact division by binomial")
    return MultiPoly._raw(p.nvars, out)


class UniPoly:
    """Dense exact univariate polynomial over the rationals.

    Coefficients ascend by degree; trailing zeros are stripped, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar]):
        cs = [_norm_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return UniPoly(a)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dn = len(rem) - 1, other.degree
        lead = Fraction(other.coeffs[-1])
        q = [0] * max(dd - dn + 1, 0)
        while len(rem) - 1 >= dn and rem:
            factor = _norm_scalar(Fraction(rem[-1]) / lead)
            pos = len(rem) - 1 - dn
            q[pos] = factor
            for k, c in enumerate(other.coeffs):
                rem[pos + k] = _norm_scalar(rem[pos + k] - factor * c)
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def format(self, name: str = "t") -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = name if d == 1 else f"{name}^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r})"


def unipoly_divides(p: UniPoly, d: UniPoly) -> UniPoly | None:
    """Return p/d when d divides p exactly, else None; d = 0 raises."""
    if d.is_zero:
        raise ZeroDivisionError("divisibility by the zero polynomial is undefined")
    q, r = divmod(p, d)
    return q if r.is_zero else None

"""Monomial ideals kept in canonical form: the minimal generators, sorted.

Canonical order is ascending lexicographic comparison of exponent vectors
read from the last variable to the first, so ``x1x2x3`` precedes
``x2x3x4`` precedes ``x1x2x5``.  Two ideals are equal exactly when their
canonical generator lists are equal.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

from . import kernels
from .errors import ContextMismatchError, ParseError
from .monomial import Monomial, VarContext, format_monomial, parse_monomial


class MonomialIdeal:
    __slots__ = ("ctx", "rows", "_array")

    def __init__(self, ctx: VarContext, rows):
        # ``rows`` must already be canonical; use the constructors below otherwise
        self.ctx = ctx
        self.rows = tuple(rows)
        self._array = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_array(cls, ctx: VarContext, a) -> MonomialIdeal:
        a = np.asarray(a, dtype=np.int64).reshape(-1, ctx.n)
        a = kernels.minimal_rows(a)
        ideal = cls(ctx, map(tuple, a.tolist()))
        ideal._array = a
        return ideal

    @classmethod
    def from_rows(cls, ctx: VarContext, rows) -> MonomialIdeal:
        rows = list(rows)
        if len(rows) <= 1:
            return cls(ctx, (tuple(r) for r in rows))
        return cls.from_array(ctx, np.array(rows, dtype=np.int64))

    @classmethod
    def from_monomials(cls, ctx: VarContext, monomials) -> MonomialIdeal:
        rows = []
        for m in monomials:
            if m.ctx != ctx:
                raise ContextMismatchError("generator from a different context")
            rows.append(m.exps)
        return cls.from_rows(ctx, rows)

    @classmethod
    def zero(cls, ctx: VarContext) -> MonomialIdeal:
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: VarContext) -> MonomialIdeal:
        return cls(ctx, [(0,) * ctx.n])

    @classmethod
    def generated_by_vars(cls, ctx: VarContext, variables) -> MonomialIdeal:
        rows = []
        for j in variables:
            ctx.check_index(j)
            r = [0] * ctx.n
            r[j - 1] = 1
            rows.append(tuple(r))
        return cls(ctx, sorted(set(rows), key=lambda r: r[::-1]))

    @classmethod
    def parse(cls, text: str, ctx: VarContext) -> MonomialIdeal:
        """Parse a comma-separated generator list, or ``0``."""
        s = text.strip()
        if s == "0":
            return cls.zero(ctx)
        if not s:
            raise ParseError("empty generator list")
        return cls.from_monomials(ctx, (parse_monomial(t, ctx) for t in s.split(",")))

    # -- basic views --------------------------------------------------------

    @property
    def array(self):
        if self._array is None:
            self._array = np.array(self.rows, dtype=np.int64).reshape(-1, self.ctx.n)
        return self._array

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ctx, r) for r in self.rows)

    def __len__(self):
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_unit(self) -> bool:
        return len(self.rows) == 1 and not any(self.rows[0])

    def is_squarefree(self) -> bool:
        return all(e <= 1 for r in self.rows for e in r)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for r in self.rows for i, e in enumerate(r) if e)

    def _same(self, other: MonomialIdeal) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("ideals belong to different contexts")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self.rows == other.rows

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def __str__(self):
        if not self.rows:
            return "0"
        return "(" + ", ".join(format_monomial(r, self.ctx) for r in self.rows) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"

    # -- membership ---------------------------------------------------------

    def contains(self, m: Monomial) -> bool:
        if m.ctx != self.ctx:
            raise ContextMismatchError("monomial from a different context")
        if not self.rows:
            return False
        return bool(kernels.any_divides(self.array, np.asarray(m.exps, dtype=np.int64)))

    __contains__ = contains

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        """True iff ``other`` is a subset of this ideal."""
        self._same(other)
        if not self.rows:
            return not other.rows
        a = self.array
        return all(kernels.any_divides(a, row) for row in other.array)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same(other)
        if not self.rows:
            return other
        if not other.rows:
            return self
        return MonomialIdeal.from_array(self.ctx, np.vstack([self.array, other.array]))

    def __mul__(self, other):
        if isinstance(other, Monomial):
            other = MonomialIdeal.from_monomials(self.ctx, [other])
        self._same(other)
        if not self.rows or not other.rows:
            return MonomialIdeal.zero(self.ctx)
        return MonomialIdeal.from_array(self.ctx, kernels.pairwise_sum(self.array, other.array))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same(other)
        if not self.rows or not other.rows:
            return MonomialIdeal.zero(self.ctx)
        return MonomialIdeal.from_array(self.ctx, kernels.pairwise_max(self.array, other.array))

    def colon(self, by) -> MonomialIdeal:
        """``(I : v)`` for a monomial ``v``, or ``(I : J)`` for a monomial ideal ``J``."""
        if isinstance(by, MonomialIdeal):
            self._same(by)
            if not by.rows:
                return MonomialIdeal.unit(self.ctx)
            return intersect(*(self.colon(g) for g in by.gens))
        if by.ctx != self.ctx:
            raise ContextMismatchError("monomial from a different context")
        if not self.rows:
            return self
        v = np.asarray(by.exps, dtype=np.int64)
        return MonomialIdeal.from_array(self.ctx, np.maximum(self.array - v[None, :], 0))

    def contraction(self, j: int) -> MonomialIdeal:
        """``I / x_j``: substitute x_j = 1 in every minimal generator."""
        self.ctx.check_index(j)
        if not self.rows:
            return self
        a = self.array.copy()
        a[:, j - 1] = 0
        return MonomialIdeal.from_array(self.ctx, a)

    def deletion(self, j: int) -> MonomialIdeal:
        r"""``I \ x_j``: substitute x_j = 0, i.e. drop generators divisible by x_j."""
        self.ctx.check_index(j)
        return MonomialIdeal(self.ctx, [r for r in self.rows if r[j - 1] == 0])

    def restrict_to(self, variables) -> MonomialIdeal:
        """Re-express the ideal in a context on the given variables (which must cover its support)."""
        variables = sorted(variables)
        missing = self.support - set(variables)
        if missing:
            raise ValueError(f"support variables {sorted(missing)} not kept")
        ctx = VarContext(tuple(self.ctx.names[j - 1] for j in variables))
        return MonomialIdeal.from_rows(ctx, [tuple(r[j - 1] for j in variables) for r in self.rows])


def minimize(ctx: VarContext, monomials) -> MonomialIdeal:
    return MonomialIdeal.from_monomials(ctx, monomials)


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    return I.contains(m)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    return reduce(lambda a, b: a + b, ideals)


def product(*ideals: MonomialIdeal) -> MonomialIdeal:
    return reduce(lambda a, b: a * b, ideals)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power needs k >= 1")
    result = I
    for _ in range(k - 1):
        result = result * I
    return result


def power0(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Like :func:`power` but with ``I^0`` the unit ideal."""
    if k == 0:
        return MonomialIdeal.unit(I.ctx)
    return power(I, k)


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    # pairwise fold, minimised after every step
    return reduce(lambda a, b: a & b, ideals)


def colon(I: MonomialIdeal, by) -> MonomialIdeal:
    return I.colon(by)


def contraction(I: MonomialIdeal, j: int) -> MonomialIdeal:
    return I.contraction(j)


def deletion(I: MonomialIdeal, j: int) -> MonomialIdeal:
    return I.deletion(j)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I == J


# -- ideal files -------------------------------------------------------------


def format_ideal_file(I: MonomialIdeal) -> str:
    lines = ["vars " + " ".join(I.ctx.names)]
    if I.is_zero():
        lines.append("ideal 0")
    else:
        lines.append("ideal " + ", ".join(format_monomial(r, I.ctx) for r in I.rows))
    return "\n".join(lines) + "\n"


def parse_ideal_file(text: str) -> MonomialIdeal:
    """Parse the two-line ``vars ...`` / ``ideal ...`` format.

    Blank lines and ``#`` comments are ignored.
    """
    body = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            body.append((lineno, line))
    if len(body) != 2:
        raise ParseError(f"expected a 'vars' line and an 'ideal' line, found {len(body)} lines")
    (l1, vars_line), (l2, ideal_line) = body
    head, _, rest = vars_line.strip().partition(" ")
    if head != "vars" or not rest.strip():
        raise ParseError("expected 'vars <names>'", l1, 1)
    try:
        ctx = VarContext(tuple(rest.split()))
    except ValueError as exc:
        raise ParseError(str(exc), l1, 6) from None
    stripped = ideal_line.lstrip()
    indent = len(ideal_line) - len(stripped)
    head, _, rest = stripped.partition(" ")
    if head != "ideal":
        raise ParseError("expected 'ideal <generators>'", l2, indent + 1)
    rest_col = indent + len("ideal ") + 1
    if rest.strip() == "0":
        return MonomialIdeal.zero(ctx)
    if not rest.strip():
        raise ParseError("empty generator list", l2, rest_col)
    monomials = []
    offset = 0
    for piece in rest.split(","):
        monomials.append(parse_monomial(piece, ctx, line=l2, column=rest_col + offset))
        offset += len(piece) + 1
    return MonomialIdeal.from_monomials(ctx, monomials)

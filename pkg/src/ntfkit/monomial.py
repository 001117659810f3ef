"""Monomials over a fixed, ordered set of variables.

Variable indices are 1-based throughout the public API, so index ``j``
names the variable printed as ``x<j>`` in the default context.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import ContextMismatchError, ExponentOverflowError, ParseError
from .kernels import EXPONENT_LIMIT


@dataclass(frozen=True)
class VarContext:
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise ValueError("a context needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")

    @classmethod
    def standard(cls, n: int) -> VarContext:
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        """1-based index of ``name``."""
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise KeyError(name) from None

    def check_index(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} outside 1..{self.n}")

    def name(self, j: int) -> str:
        self.check_index(j)
        return self.names[j - 1]


class Mode(Enum):
    ONE = "set-to-one"
    ZERO = "set-to-zero"


@dataclass(frozen=True)
class Monomial:
    ctx: VarContext
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.ctx.n:
            raise ValueError(f"expected {self.ctx.n} exponents, got {len(self.exps)}")
        for e in self.exps:
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if e > EXPONENT_LIMIT:
                raise ExponentOverflowError(f"exponent {e} exceeds {EXPONENT_LIMIT}")

    @classmethod
    def one(cls, ctx: VarContext) -> Monomial:
        return cls(ctx, (0,) * ctx.n)

    @classmethod
    def var(cls, ctx: VarContext, j: int, e: int = 1) -> Monomial:
        ctx.check_index(j)
        exps = [0] * ctx.n
        exps[j - 1] = e
        return cls(ctx, tuple(exps))

    @classmethod
    def from_support(cls, ctx: VarContext, support) -> Monomial:
        exps = [0] * ctx.n
        for j in support:
            ctx.check_index(j)
            exps[j - 1] = 1
        return cls(ctx, tuple(exps))

    def _same(self, other: Monomial) -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("monomials belong to different contexts")

    def __mul__(self, other: Monomial) -> Monomial:
        return mono_mul(self, other)

    def divides(self, other: Monomial) -> bool:
        return mono_divides(self, other)

    def lcm(self, other: Monomial) -> Monomial:
        return mono_lcm(self, other)

    def gcd(self, other: Monomial) -> Monomial:
        self._same(other)
        return Monomial(self.ctx, tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._same(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ctx, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ValueError("negative power")
        exps = tuple(e * k for e in self.exps)
        if any(e > EXPONENT_LIMIT for e in exps):
            raise ExponentOverflowError(f"{self}^{k} overflows")
        return Monomial(self.ctx, exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def specialize(self, j: int, mode: Mode | str):
        return specialize(self, j, mode)

    def sort_key(self):
        return self.exps[::-1]

    def __lt__(self, other: Monomial) -> bool:
        self._same(other)
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_monomial(self.exps, self.ctx)

    def __repr__(self):
        return f"Monomial({self})"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    a._same(b)
    exps = tuple(x + y for x, y in zip(a.exps, b.exps))
    if any(e > EXPONENT_LIMIT for e in exps):
        raise ExponentOverflowError(f"product {a}*{b} overflows")
    return Monomial(a.ctx, exps)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    a._same(b)
    return all(x <= y for x, y in zip(a.exps, b.exps))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    a._same(b)
    return Monomial(a.ctx, tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


def support_and_degree(a: Monomial) -> tuple[frozenset[int], int]:
    return a.support, a.degree


def specialize(a: Monomial, j: int, mode: Mode | str) -> Monomial | None:
    """Substitute x_j := 1 (``Mode.ONE``) or x_j := 0 (``Mode.ZERO``).

    Returns ``None`` when setting x_j to zero annihilates the monomial.
    """
    mode = Mode(mode)
    a.ctx.check_index(j)
    if mode is Mode.ONE:
        exps = list(a.exps)
        exps[j - 1] = 0
        return Monomial(a.ctx, tuple(exps))
    if a.exps[j - 1] > 0:
        return None
    return a


def format_monomial(exps, ctx: VarContext) -> str:
    parts = []
    for name, e in zip(ctx.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_monomial(text: str, ctx: VarContext, line=None, column=None) -> Monomial:
    """Parse ``x1*x3^2`` (or ``1``) against ``ctx``."""
    s = text.strip()
    if s == "1":
        return Monomial.one(ctx)
    if not s:
        raise ParseError("empty monomial", line, column)
    exps = [0] * ctx.n
    # column of the first character of ``s`` (leading blanks skipped)
    offset = len(text) - len(text.lstrip())
    for factor in s.split("*"):
        lead = len(factor) - len(factor.lstrip())
        col = None if column is None else column + offset + lead
        offset += len(factor) + 1
        f = factor.strip()
        m = _FACTOR.match(f)
        if not m:
            raise ParseError(f"bad factor {factor!r}", line, col)
        try:
            j = ctx.index(m.group(1))
        except KeyError:
            raise ParseError(f"unknown variable {m.group(1)!r}", line, col) from None
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e > EXPONENT_LIMIT:
            raise ParseError(f"exponent {e} too large", line, col)
        exps[j - 1] += e
    return Monomial(ctx, tuple(exps))

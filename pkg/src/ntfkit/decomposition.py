"""Irreducible decompositions, associated primes, duality and symbolic powers."""
from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BudgetExceededError, InvalidIdealError
from .ideal import MonomialIdeal, intersect, power
from .monomial import Monomial, VarContext

ORACLE_BUDGET = 10**7


@dataclass(frozen=True)
class PrimeIdeal:
    """The prime generated by the variables with the given (1-based) indices."""

    vars: frozenset

    def __init__(self, variables):
        vs = frozenset(int(v) for v in variables)
        if not vs:
            raise ValueError("a prime monomial ideal needs at least one variable")
        if min(vs) < 1:
            raise ValueError("variable indices are 1-based")
        object.__setattr__(self, "vars", vs)

    def sort_key(self):
        return (len(self.vars), sorted(self.vars))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.vars <= other.vars

    def issubset(self, other) -> bool:
        return self.vars <= other.vars

    def without(self, j: int) -> frozenset:
        return self.vars - {j}

    def ideal(self, ctx: VarContext) -> MonomialIdeal:
        return MonomialIdeal.generated_by_vars(ctx, self.vars)

    def format(self, ctx: VarContext | None = None) -> str:
        names = [ctx.name(v) if ctx else f"x{v}" for v in sorted(self.vars)]
        return "(" + ",".join(names) + ")"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PrimeIdeal{self}"


def sorted_primes(primes):
    return sorted(primes, key=PrimeIdeal.sort_key)


def maximal_ideal(variables) -> PrimeIdeal:
    return PrimeIdeal(variables)


@dataclass(frozen=True)
class IrreducibleComponent:
    """The ideal (x_i^a_i : i in powers) for a map of 1-based indices to exponents."""

    powers: tuple  # sorted ((index, exponent), ...)

    @classmethod
    def from_dict(cls, powers: dict) -> IrreducibleComponent:
        return cls(tuple(sorted(powers.items())))

    @property
    def radical(self) -> PrimeIdeal:
        return PrimeIdeal(i for i, _ in self.powers)

    def contains_component(self, other: IrreducibleComponent) -> bool:
        """True iff ``other`` is a subset of ``self``."""
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= a for i, a in other.powers)

    def ideal(self, ctx: VarContext) -> MonomialIdeal:
        rows = []
        for i, a in self.powers:
            r = [0] * ctx.n
            r[i - 1] = a
            rows.append(tuple(r))
        return MonomialIdeal.from_rows(ctx, rows)

    def sort_key(self):
        return (len(self.powers), [i for i, _ in self.powers], [a for _, a in self.powers])


@dataclass(frozen=True)
class Decomposition:
    ctx: VarContext
    components: tuple
    irredundant: bool

    def ideals(self):
        return [c.ideal(self.ctx) for c in self.components]

    def intersection(self) -> MonomialIdeal:
        return intersect(*self.ideals())

    def report(self) -> str:
        lines = []
        for ideal in self.ideals():
            lines.append("component: " + str(ideal)[1:-1])
        lines.append("irredundant: " + ("true" if self.irredundant else "false"))
        return "\n".join(lines) + "\n"


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise InvalidIdealError("operation undefined on the zero ideal")
    if I.is_unit():
        raise InvalidIdealError("operation undefined on the unit ideal")


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise InvalidIdealError("ideal is not square-free")


# ---------------------------------------------------------------------------
# splitting algorithm on packed exponent vectors
#
# An exponent vector is packed into one int with a field of ``w`` bits per
# variable, x1 in the lowest field.  The top bit of each field is a guard, so
# a | b  <=>  ((b | G) - a) & G == G.  Ascending int order is the canonical
# monomial order (last variable most significant).


class _Packer:
    def __init__(self, n: int, max_exp: int):
        self.n = n
        self.w = max(2, max_exp.bit_length() + 1)
        self.field = (1 << self.w) - 1
        self.guard = sum(1 << (self.w * i + self.w - 1) for i in range(n))

    def pack(self, row) -> int:
        w = self.w
        return sum(e << (w * i) for i, e in enumerate(row))

    def unpack(self, x: int):
        w, f = self.w, self.field
        return tuple((x >> (w * i)) & f for i in range(self.n))

    def lowest_field(self, x: int) -> int:
        return ((x & -x).bit_length() - 1) // self.w


def _split_leaves(packed, pk: _Packer):
    """Leaves of the memoised splitting recursion, as tuples of packed pure powers."""
    G = pk.guard
    field = pk.field
    w = pk.w

    def add(ideal, m):
        for g in ideal:
            if ((m | G) - g) & G == G:
                return ideal
        out = [g for g in ideal if ((g | G) - m) & G != G]
        insort(out, m)
        return tuple(out)

    def pivot(ideal):
        for g in ideal:
            i = ((g & -g).bit_length() - 1) // w
            m1 = g & (field << (w * i))
            if m1 != g:
                return g, m1
        return None

    children = {}
    root = tuple(sorted(packed))
    stack = [root]
    while stack:
        ideal = stack[-1]
        if ideal in children:
            stack.pop()
            continue
        p = pivot(ideal)
        if p is None:
            children[ideal] = None
            stack.pop()
            continue
        g, m1 = p
        kids = (add(ideal, m1), add(ideal, g - m1))
        children[ideal] = kids
        stack.pop()
        for k in kids:
            if k not in children:
                stack.append(k)

    leaves = []
    seen = {root}
    todo = [root]
    while todo:
        ideal = todo.pop()
        kids = children[ideal]
        if kids is None:
            leaves.append(ideal)
            continue
        for k in kids:
            if k not in seen:
                seen.add(k)
                todo.append(k)
    return leaves, len(children)


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant decomposition of ``I`` into ideals generated by pure powers.

    Splits on the first (canonical order) generator that is not a pure power,
    peeling off its lowest-index variable power: ``I = (I + m1) ∩ (I + m/m1)``.
    Subproblems are memoised.  Redundant leaves are then removed by a scan in
    canonical order.
    """
    _require_proper(I)
    max_exp = max(max(r) for r in I.rows)
    pk = _Packer(I.ctx.n, max_exp)
    leaves, _ = _split_leaves([pk.pack(r) for r in I.rows], pk)

    # Pruning: code a component as the vector with its exponent at each of its
    # variables and max_exp + 1 elsewhere; C contains D iff code(C) <= code(D)
    # componentwise.  An irreducible component contains the intersection of
    # the others iff it contains one of them.
    inf = max_exp + 1
    pk2 = _Packer(I.ctx.n, inf)
    codes = {}
    for leaf in leaves:
        powers = [inf] * I.ctx.n
        for g in leaf:
            i = pk.lowest_field(g)
            powers[i] = (g >> (pk.w * i)) & pk.field
        codes[pk2.pack(powers)] = powers
    # a container has the numerically smaller code, so scan codes from the
    # largest down and keep those not containing anything kept so far
    G = pk2.guard
    alive = []
    for c in sorted(codes, reverse=True):
        if not any(((d | G) - c) & G == G for d in alive):
            alive.append(c)
    survivors = sorted(
        (
            IrreducibleComponent(tuple((i + 1, a) for i, a in enumerate(codes[c]) if a != inf))
            for c in alive
        ),
        key=IrreducibleComponent.sort_key,
    )
    return Decomposition(I.ctx, tuple(survivors), True)


def associated_primes(I: MonomialIdeal) -> frozenset:
    return frozenset(c.radical for c in irreducible_decomposition(I).components)


def minimal_primes(I: MonomialIdeal) -> frozenset:
    ass = associated_primes(I)
    return frozenset(p for p in ass if not any(q.vars < p.vars for q in ass))


def embedded_primes(I: MonomialIdeal) -> frozenset:
    ass = associated_primes(I)
    return frozenset(p for p in ass if any(q.vars < p.vars for q in ass))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal of minimal transversals of the generator supports of ``I``."""
    _require_proper(I)
    _require_squarefree(I)
    ctx = I.ctx
    return intersect(*(MonomialIdeal.generated_by_vars(ctx, g.support) for g in I.gens))


def prime_power(p: PrimeIdeal, ctx: VarContext, k: int) -> MonomialIdeal:
    return power(p.ideal(ctx), k)


def symbolic_power(I: MonomialIdeal, k: int, primes=None) -> MonomialIdeal:
    """``I^(k)``: the intersection of ``p^k`` over the minimal primes of square-free ``I``.

    ``primes`` may pass ``Min(I)`` when the caller already has it.
    """
    if k < 1:
        raise ValueError("symbolic power needs k >= 1")
    _require_proper(I)
    _require_squarefree(I)
    primes = sorted_primes(minimal_primes(I) if primes is None else primes)
    return intersect(*(prime_power(p, I.ctx, k) for p in primes))


def in_symbolic_power(I: MonomialIdeal, m: Monomial, k: int) -> bool:
    """Membership in ``I^(k)`` by degree counting over each minimal prime."""
    _require_squarefree(I)
    return all(sum(m.exps[j - 1] for j in p.vars) >= k for p in minimal_primes(I))


# ---------------------------------------------------------------------------
# brute-force witnesses


def _oracle_scan(I: MonomialIdeal, budget: int):
    _require_proper(I)
    n = I.ctx.n
    bounds = I.array.max(axis=0).astype(np.int64)
    size = math.prod(int(b) + 1 for b in bounds)
    if size > budget or n > 62:
        raise BudgetExceededError(
            f"witness search over {size} candidate monomials exceeds budget {budget}"
        )
    idx, masks = kernels.colon_prime_scan(I.array, bounds)
    return bounds, idx, masks


def _mask_to_prime(mask: int) -> PrimeIdeal:
    return PrimeIdeal(i + 1 for i in range(int(mask).bit_length()) if (int(mask) >> i) & 1)


def prime_colon_witnesses(I: MonomialIdeal, budget: int = ORACLE_BUDGET):
    """Every ``v`` (exponents bounded by the generators' lcm) with ``(I : v)`` prime.

    Returns a list of ``(witness, prime)`` pairs in enumeration order.
    """
    bounds, idx, masks = _oracle_scan(I, budget)
    bl = [int(b) for b in bounds]
    return [
        (Monomial(I.ctx, kernels.decode_box_index(int(f), bl)), _mask_to_prime(int(m)))
        for f, m in zip(idx, masks)
    ]


def ass_witness_oracle(I: MonomialIdeal, budget: int = ORACLE_BUDGET) -> dict:
    """Associated primes found by exhaustive search: ``{prime: first witness}``."""
    bounds, idx, masks = _oracle_scan(I, budget)
    bl = [int(b) for b in bounds]
    found = {}
    for f, m in zip(idx.tolist(), masks.tolist()):
        if m not in found:
            found[m] = f
    return {
        _mask_to_prime(m): Monomial(I.ctx, kernels.decode_box_index(f, bl))
        for m, f in found.items()
    }


def irredundancy_check(components) -> bool:
    """True iff no ideal in ``components`` contains the intersection of the others."""
    components = list(components)
    if not components:
        raise ValueError("need at least one component")
    if len(components) == 1:
        return not components[0].is_unit()
    for j, c in enumerate(components):
        others = intersect(*(d for i, d in enumerate(components) if i != j))
        if c.contains_ideal(others):
            return False
    return True

"""Brute-force reference implementations, written straight from the
definitions and sharing no code with the package kernels.

Ideals here are plain sets of exponent tuples (their generators).
"""
from __future__ import annotations

import itertools


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimal(gens):
    gens = set(map(tuple, gens))
    return {g for g in gens if not any(h != g and divides(h, g) for h in gens)}


def member(gens, m):
    return any(divides(g, m) for g in gens)


def box(bounds):
    return itertools.product(*(range(b + 1) for b in bounds))


def bounds_of(*ideals):
    rows = [g for I in ideals for g in I]
    n = len(rows[0])
    return [max(r[i] for r in rows) for i in range(n)]


def intersection(I, J):
    """Minimal elements of the monomials lying in both, inside the lcm box."""
    b = bounds_of(I, J)
    return minimal(m for m in box(b) if member(I, m) and member(J, m))


def colon(I, v):
    b = bounds_of(I)
    return minimal(u for u in box(b) if member(I, tuple(x + y for x, y in zip(u, v))))


def product(I, J):
    return minimal(tuple(x + y for x, y in zip(a, b)) for a in I for b in J)


def power(I, k):
    P = set(I)
    for _ in range(k - 1):
        P = product(P, I)
    return P


def is_prime_ideal(gens):
    return bool(gens) and all(sum(g) == 1 for g in gens)


def ass(I):
    """Primes of the form (I : v) with v in the lcm box, as frozensets of 1-based indices."""
    out = set()
    for v in box(bounds_of(I)):
        if member(I, v):
            continue
        C = colon(I, v)
        if is_prime_ideal(C):
            out.add(frozenset(g.index(1) + 1 for g in C))
    return out


def vertex_covers(sets, n):
    """Minimal transversals of the given 1-based index sets (square-free dual)."""
    covers = []
    for size in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), size):
            s = set(S)
            if all(s & e for e in sets) and not any(c <= s for c in covers):
                covers.append(s)
    return [frozenset(c) for c in covers]


def from_support(sets, n):
    return {tuple(1 if i + 1 in s else 0 for i in range(n)) for s in sets}


def in_symbolic(I_sets, n, m, k):
    return all(sum(m[j - 1] for j in p) >= k for p in vertex_covers(I_sets, n))


def dominating_sets(n, edges):
    nb = {v: {v} for v in range(1, n + 1)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    dom = [set(S) for r in range(n + 1) for S in itertools.combinations(range(1, n + 1), r)
           if all(nb[v] & set(S) for v in nb)]
    return [frozenset(S) for S in dom if not any(T < S for T in dom)]


def beta1(gens):
    gens = list(gens)
    best = 0
    for r in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, r):
            if all(not any(a and b for a, b in zip(x, y)) for x, y in itertools.combinations(sub, 2)):
                best = r
    return best

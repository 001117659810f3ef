"""Normally-torsion-free analysis at a finite horizon, minors, and executable
forms of the structural results on ``L = I ∩ (q, h)``.

Nothing here asserts an infinite statement: every verdict names the largest
power it inspected.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .decomposition import (
    PrimeIdeal,
    associated_primes,
    irredundancy_check,
    minimal_primes,
    sorted_primes,
    symbolic_power,
)
from .errors import HypothesisError, InvalidIdealError
from .ideal import MonomialIdeal, power, power0
from .monomial import Monomial, VarContext

DEFAULT_HORIZON = 4


# ---------------------------------------------------------------------------
# NTF up to a horizon


@dataclass(frozen=True)
class PowerStep:
    k: int
    ass: tuple
    embedded: tuple
    symbolic_agrees: bool | None = None  # None when I is not square-free


@dataclass(frozen=True)
class NtfReport:
    ideal: MonomialIdeal
    horizon: int
    per_k: tuple
    failed_at: int | None

    @property
    def is_ntf(self) -> bool:
        return self.failed_at is None

    @property
    def verdict(self) -> str:
        if self.failed_at is None:
            return f"NTF-up-to-{self.horizon}"
        return f"fails-at-{self.failed_at}"

    @property
    def embedded(self) -> tuple:
        """Embedded primes at the failing power (empty when NTF)."""
        if self.failed_at is None:
            return ()
        return self.per_k[-1].embedded

    @property
    def cross_check_ok(self) -> bool:
        return all(step.symbolic_agrees is not False for step in self.per_k)


def is_ntf_up_to(I: MonomialIdeal, K: int = DEFAULT_HORIZON, cross_check: bool = True) -> NtfReport:
    """Check ``Ass(I^k) ⊆ Ass(I)`` for ``k = 1..K``, stopping at the first failure.

    For square-free ``I`` each step also compares ``I^k`` with ``I^(k)``;
    the two tests must agree.
    """
    if K < 1:
        raise ValueError("horizon must be >= 1")
    if I.is_zero() or I.is_unit():
        raise InvalidIdealError("NTF analysis needs a proper nonzero ideal")
    base = associated_primes(I)
    squarefree = cross_check and I.is_squarefree()
    steps = []
    failed_at = None
    P = I
    for k in range(1, K + 1):
        if k > 1:
            P = P * I
        ass = base if k == 1 else associated_primes(P)
        emb = ass - base
        agrees = None
        if squarefree:
            agrees = (P == symbolic_power(I, k, base)) == (not emb)
        steps.append(PowerStep(k, tuple(sorted_primes(ass)), tuple(sorted_primes(emb)), agrees))
        if emb:
            failed_at = k
            break
    return NtfReport(I, K, tuple(steps), failed_at)


# ---------------------------------------------------------------------------
# minors


@dataclass(frozen=True)
class Minor:
    label: str
    kind: str  # "contraction" | "deletion"
    var: int
    ideal: MonomialIdeal

    @property
    def status(self) -> str:
        if self.ideal.is_zero():
            return "zero"
        if self.ideal.is_unit():
            return "unit"
        return "proper"


def first_level_minors(I: MonomialIdeal) -> list:
    """All ``2n`` single contractions ``I/x_j`` and deletions ``I\\x_j``."""
    out = []
    for j in range(1, I.ctx.n + 1):
        name = I.ctx.name(j)
        out.append(Minor(f"I/{name}", "contraction", j, I.contraction(j)))
        out.append(Minor(f"I\\{name}", "deletion", j, I.deletion(j)))
    return out


def beta1(I: MonomialIdeal) -> int:
    """Largest number of minimal generators that are pairwise coprime."""
    if I.is_zero():
        raise InvalidIdealError("beta1 of the zero ideal")
    masks = sorted(
        {sum(1 << i for i, e in enumerate(r) if e) for r in I.rows},
        key=lambda m: bin(m).count("1"),
    )
    if 0 in masks:
        # the unit generator is coprime to nothing else in a minimal set
        return 1
    best = 0

    def grow(start, used, size):
        nonlocal best
        if size > best:
            best = size
        if size + len(masks) - start <= best:
            return
        for t in range(start, len(masks)):
            if size + len(masks) - t <= best:
                return
            if not masks[t] & used:
                grow(t + 1, used | masks[t], size + 1)

    grow(0, 0, 0)
    return best


@dataclass(frozen=True)
class MnntProfile:
    ideal: MonomialIdeal
    horizon: int
    m: int | None
    ass_by_power: tuple  # ((k, primes), ...)
    ass_shape_ok: bool | None
    minor_verdicts: tuple  # ((label, verdict), ...)
    side_condition_ok: bool | None
    beta1: int
    verdict: str
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict.startswith("minimally-not-NTF")

    @property
    def bound_holds(self) -> bool | None:
        if not self.holds:
            return None
        return self.m >= self.beta1


def is_minimally_not_ntf(I: MonomialIdeal, K: int = DEFAULT_HORIZON) -> MnntProfile:
    """Finite-horizon test of the minimal-non-NTF criterion.

    Requires (a) the maximal ideal on ``supp(I)`` to be embedded in
    ``Ass(I^k)`` for some ``k <= K``, (b) every first-level minor to be NTF up
    to ``K`` (zero and unit minors pass), and (c) the punctured maximal ideal
    ``m \\ x_j`` never to be associated to ``I^s \\ x_j`` for ``s <= K``.
    """
    if I.is_zero() or I.is_unit():
        raise InvalidIdealError("needs a proper nonzero ideal")
    if not I.is_squarefree():
        raise InvalidIdealError("ideal is not square-free")
    supp = I.support
    maximal = PrimeIdeal(supp)
    b1 = beta1(I)

    mins = minimal_primes(I)
    powers = {}
    ass = {}
    P = I
    first = None
    for k in range(1, K + 1):
        if k > 1:
            P = P * I
        powers[k] = P
        ass[k] = associated_primes(P)
        if first is None and maximal in ass[k] and maximal not in mins:
            first = k
    ass_by_power = tuple((k, tuple(sorted_primes(ass[k]))) for k in range(1, K + 1))

    def profile(m, shape, minors, side, verdict, reason):
        return MnntProfile(I, K, m, ass_by_power, shape, minors, side, b1, verdict, reason)

    if first is None:
        if all(ass[k] == mins for k in ass):
            reason = f"ideal is NTF up to {K}"
        else:
            reason = f"embedded primes occur up to {K} but never the maximal ideal"
        return profile(None, None, (), None, "not-applicable", reason)

    m = first - 1
    shape = all(
        ass[s] == (mins if s <= m else mins | {maximal}) for s in range(1, K + 1)
    )

    minor_verdicts = []
    failing = []
    for minor in first_level_minors(I):
        if minor.var not in supp:
            continue
        if minor.status != "proper":
            minor_verdicts.append((minor.label, f"{minor.status} (vacuous)"))
            continue
        rep = is_ntf_up_to(minor.ideal, K)
        minor_verdicts.append((minor.label, rep.verdict))
        if not rep.is_ntf:
            failing.append(f"{minor.label} {rep.verdict}")

    side_failures = []
    for s in range(1, K + 1):
        for j in sorted(supp):
            punctured = maximal.vars - {j}
            D = powers[s].deletion(j)
            if not punctured or D.is_zero():
                continue
            if PrimeIdeal(punctured) in associated_primes(D):
                side_failures.append(f"s={s}, j={j}")
    side_ok = not side_failures

    if failing or not side_ok:
        parts = []
        if failing:
            parts.append("minors not NTF: " + "; ".join(failing))
        if side_failures:
            parts.append("punctured maximal ideal associated at " + "; ".join(side_failures))
        return profile(m, shape, tuple(minor_verdicts), side_ok, "not-applicable", ". ".join(parts))
    return profile(m, shape, tuple(minor_verdicts), side_ok, f"minimally-not-NTF-up-to-{K}", "")


# ---------------------------------------------------------------------------
# products I^n (I ∩ q)^m


@lru_cache(maxsize=4096)
def _ntf_cached(I: MonomialIdeal, K: int) -> bool:
    return is_ntf_up_to(I, K).is_ntf


@lru_cache(maxsize=4096)
def _ass_cached(I: MonomialIdeal) -> frozenset:
    return associated_primes(I)


def product_hypotheses(I: MonomialIdeal, q: PrimeIdeal, K: int = DEFAULT_HORIZON) -> dict:
    """Standing hypotheses for ``I`` and a prime ``q``: square-free ``I``, the
    decomposition ``∩ Ass(I) ∩ q`` irredundant, and ``I``, ``I ∩ q`` NTF up to ``K``."""
    ctx = I.ctx
    checks = {"I_squarefree": I.is_squarefree() and not I.is_zero() and not I.is_unit()}
    if not checks["I_squarefree"]:
        return checks
    qI = q.ideal(ctx)
    comps = [p.ideal(ctx) for p in sorted_primes(_ass_cached(I))] + [qI]
    checks["Iq_decomposition_irredundant"] = irredundancy_check(comps)
    checks["I_ntf"] = _ntf_cached(I, K)
    checks["Iq_ntf"] = _ntf_cached(I & qI, K)
    return checks


def _gate(checks: dict, names=None):
    failed = [k for k, ok in checks.items() if not ok and (names is None or k in names)]
    if failed:
        raise HypothesisError(failed)


def check_product_identity(I, q: PrimeIdeal, n: int, m: int, K: int = DEFAULT_HORIZON,
                           enforce: bool = True) -> bool:
    """Compare ``I^n (I∩q)^m`` with ``I^(n+m) ∩ q^m``."""
    if enforce:
        _gate(product_hypotheses(I, q, K))
    qI = q.ideal(I.ctx)
    lhs = power(I, n) * power(I & qI, m)
    rhs = power(I, n + m) & power(qI, m)
    return lhs == rhs


def check_product_ass(I, q: PrimeIdeal, n: int, m: int, K: int = DEFAULT_HORIZON) -> bool:
    """``Ass(I^n (I∩q)^m) == Min(I) ∪ {q}``."""
    _gate(product_hypotheses(I, q, K))
    qI = q.ideal(I.ctx)
    target = power(I, n) * power(I & qI, m)
    return associated_primes(target) == minimal_primes(I) | {q}


def check_product_ntf(I, q: PrimeIdeal, n: int, m: int, horizon: int = 2,
                      K: int = DEFAULT_HORIZON) -> NtfReport:
    _gate(product_hypotheses(I, q, K))
    qI = q.ideal(I.ctx)
    return is_ntf_up_to(power(I, n) * power(I & qI, m), horizon)


# ---------------------------------------------------------------------------
# the construction L = I ∩ (q, h)


@dataclass(frozen=True)
class ConstructionL:
    I: MonomialIdeal
    q: PrimeIdeal
    h: Monomial
    L: MonomialIdeal
    horizon: int
    hypotheses: dict = field(hash=False)

    @property
    def failed(self) -> list:
        return [k for k, ok in self.hypotheses.items() if not ok]

    @property
    def ok(self) -> bool:
        return not self.failed

    @property
    def h_vars(self) -> list:
        return sorted(self.h.support)

    @property
    def I_cap_q(self) -> MonomialIdeal:
        return self.I & self.q.ideal(self.I.ctx)


def build_construction_L(I: MonomialIdeal, q: PrimeIdeal, h: Monomial,
                         K: int = DEFAULT_HORIZON) -> ConstructionL:
    """Build ``L = I ∩ (q, h)`` and evaluate every standing hypothesis.

    Failed hypotheses are named in ``hypotheses``; nothing is raised for them.
    """
    ctx = I.ctx
    qI = q.ideal(ctx)
    L = I & (qI + MonomialIdeal.from_monomials(ctx, [h]))
    checks = {
        "I_squarefree": I.is_squarefree() and not I.is_zero() and not I.is_unit(),
        "h_squarefree": h.is_squarefree() and not h.is_one(),
        "support_disjoint": not (h.support & (q.vars | I.support)),
    }
    if checks["I_squarefree"]:
        ass_I = [p.ideal(ctx) for p in sorted_primes(_ass_cached(I))]
        checks["L_decomposition_irredundant"] = irredundancy_check(
            ass_I + [PrimeIdeal(q.vars | {r}).ideal(ctx) for r in sorted(h.support)]
        )
        checks["Iq_decomposition_irredundant"] = irredundancy_check(ass_I + [qI])
        checks["I_ntf"] = _ntf_cached(I, K)
        checks["Iq_ntf"] = _ntf_cached(I & qI, K)
    return ConstructionL(I, q, h, L, K, checks)


def colon_tower_failures(Lc: ConstructionL, s: int) -> list:
    """Failing identities of the colon tower of ``L^s`` by powers of ``h``."""
    if s < 2:
        raise ValueError("s must be >= 2")
    I, L, h = Lc.I, Lc.L, Lc.h
    Iq = Lc.I_cap_q
    hR = MonomialIdeal.from_monomials(I.ctx, [h])
    Ls = power(L, s)
    failures = []
    for ell in range(1, s + 1):
        lhs = Ls.colon(h ** ell)
        rhs = power0(I, ell - 1) * power0(Iq, s - ell + 1) + power0(I, ell) * power0(L, s - ell)
        if lhs != rhs:
            failures.append((ell, "colon"))
        if lhs + hR != power0(I, ell) * power0(Iq, s - ell) + hR:
            failures.append((ell, "colon_plus_h"))
    if Ls.colon(h ** s) != power(I, s):
        failures.append((s, "terminal"))
    return failures


def check_colon_tower(Lc: ConstructionL, s: int) -> bool:
    _gate(Lc.hypotheses)
    return not colon_tower_failures(Lc, s)


CONTAINMENT_GATES = (
    "I_squarefree",
    "h_squarefree",
    "support_disjoint",
    "L_decomposition_irredundant",
    "I_ntf",
)


def embedded_containment_failures(Lc: ConstructionL, s: int) -> list:
    """Embedded primes of ``L^s`` not strictly above any ``(q, x_r)``, ``x_r | h``."""
    if s < 2:
        raise ValueError("s must be >= 2")
    _gate(Lc.hypotheses, CONTAINMENT_GATES)
    mins = minimal_primes(Lc.L)
    bad = []
    for p in sorted_primes(associated_primes(power(Lc.L, s)) - mins):
        if not any((Lc.q.vars | {r}) < p.vars for r in Lc.h_vars):
            bad.append(p)
    return bad


def check_embedded_prime_containment(Lc: ConstructionL, s: int) -> bool:
    return not embedded_containment_failures(Lc, s)


def lift_hypotheses(I: MonomialIdeal, q: PrimeIdeal, r: int) -> dict:
    ctx = I.ctx
    checks = {
        "I_squarefree": I.is_squarefree() and not I.is_zero() and not I.is_unit(),
        "r_outside_supports": r not in q.vars and r not in I.support,
    }
    if all(checks.values()):
        L = I & PrimeIdeal(q.vars | {r}).ideal(ctx)
        checks["ass_L_condition"] = _ass_cached(L) == _ass_cached(I) | {PrimeIdeal(q.vars | {r})}
    return checks


def check_embedded_prime_lift(I: MonomialIdeal, q: PrimeIdeal, r: int, s: int, theta: int,
                              v: Monomial) -> bool:
    """If ``(L^s : x_r^θ v)`` is a prime ``p`` then ``p \\ x_r`` is associated
    to ``I^θ (I∩q)^(s-θ)``; with ``θ = 0`` this targets ``(I∩q)^s``."""
    ctx = I.ctx
    checks = lift_hypotheses(I, q, r)
    checks["s_at_least_2"] = s >= 2
    checks["theta_nonnegative"] = theta >= 0
    checks["r_not_dividing_v"] = v.exps[r - 1] == 0
    _gate(checks)
    L = I & PrimeIdeal(q.vars | {r}).ideal(ctx)
    C = power(L, s).colon(Monomial.var(ctx, r, theta) * v)
    p = prime_of(C)
    if p is None:
        raise HypothesisError(["colon_is_prime"])
    rest = p.vars - {r}
    if not rest:
        return False
    target = power0(I, theta) * power0(I & q.ideal(ctx), s - theta)
    if target.is_unit():
        return False
    return PrimeIdeal(rest) in associated_primes(target)


def prime_of(C: MonomialIdeal) -> PrimeIdeal | None:
    """The prime ``C`` equals when it is generated by variables, else ``None``."""
    if C.is_zero() or C.is_unit():
        return None
    if any(sum(row) != 1 for row in C.rows):
        return None
    return PrimeIdeal(j for j in C.support)


# ---------------------------------------------------------------------------
# hypothesis-gated random instances (rejection sampling)


def random_squarefree_ideal(rng: random.Random, ctx: VarContext, variables, max_gens=4,
                            max_deg=3) -> MonomialIdeal:
    variables = list(variables)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        k = rng.randint(1, min(max_deg, len(variables)))
        gens.append(Monomial.from_support(ctx, rng.sample(variables, k)))
    return MonomialIdeal.from_monomials(ctx, gens)


def random_prime(rng: random.Random, variables, max_size=3) -> PrimeIdeal:
    variables = list(variables)
    return PrimeIdeal(rng.sample(variables, rng.randint(1, min(max_size, len(variables)))))


def sample_product_instances(rng: random.Random, count: int, n: int = 5,
                             K: int = DEFAULT_HORIZON, max_tries: int = 100000):
    """``count`` pairs ``(I, q)`` on ``n`` variables passing :func:`product_hypotheses`."""
    ctx = VarContext.standard(n)
    out, seen = [], set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        I = random_squarefree_ideal(rng, ctx, range(1, n + 1))
        q = random_prime(rng, range(1, n + 1))
        if (I, q) in seen or I.is_unit():
            continue
        seen.add((I, q))
        if all(product_hypotheses(I, q, K).values()):
            out.append((I, q))
    return out


def sample_construction_instances(rng: random.Random, count: int, n_base: int = 5,
                                  max_h: int = 2, K: int = 3, max_tries: int = 100000,
                                  gates=None):
    """Hypothesis-passing ``ConstructionL`` values with ``h`` on fresh variables.

    ``gates`` limits acceptance to the named hypotheses (default: all of them).
    """
    out, seen = [], set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        nh = rng.randint(1, max_h)
        ctx = VarContext.standard(n_base + nh)
        base = range(1, n_base + 1)
        I = random_squarefree_ideal(rng, ctx, base)
        q = random_prime(rng, base)
        h = Monomial.from_support(ctx, range(n_base + 1, n_base + nh + 1))
        if (I, q, h) in seen:
            continue
        seen.add((I, q, h))
        Lc = build_construction_L(I, q, h, K)
        if not [k for k in Lc.failed if gates is None or k in gates]:
            out.append(Lc)
    return out


def sample_lift_instances(rng: random.Random, count: int, n: int = 5, max_tries: int = 100000):
    """Triples ``(I, q, r)`` on ``n`` variables with ``x_r`` fresh and
    ``Ass(L) = Ass(I) ∪ {(q, x_r)}``."""
    ctx = VarContext.standard(n)
    r = n
    out, seen = [], set()
    for _ in range(max_tries):
        if len(out) >= count:
            break
        I = random_squarefree_ideal(rng, ctx, range(1, n))
        q = random_prime(rng, range(1, n))
        if (I, q) in seen:
            continue
        seen.add((I, q))
        if all(lift_hypotheses(I, q, r).values()):
            out.append((I, q, r))
    return out

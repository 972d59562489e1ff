"""Seeded random generators for formulas, chain elements, and models.

All randomness flows through a caller-supplied random.Random, so suites are
reproducible from their seed. Formula shape is connective-weighted and
depth-capped: at each node the generator picks atom/~//\\/&/->/\\//<->/
forall/exists with weights 6/2/2/2/3/1/1/2/2 (quantifiers only while
variables remain), and always an atom at depth zero. Infinite-carrier
elements use small parameters (denominators and tail indices up to 12).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chains import (A_ALPHA, G_DOWN, G_UP, HALF, NM_FIN, NM_INF, NM_INF_MINUS,
                     NM_PRIME_INF, NM_PRIME_INF_MINUS, ONE, STD_G, STD_NM, ZERO,
                     Chain, G_FIN)
from .formula import And, Atom, Bottom, Exists, Forall, Formula, Implies, Strong, disj, iff, neg
from .models import FiniteModel
from .omega import EventualSeq, OmegaModel, Tail, constant_tail


def random_element(rng: random.Random, chain: Chain, max_param: int = 12) -> Fraction:
    """A random carrier element; parameters bounded for readable witnesses."""
    kind = chain.kind
    if chain.is_finite:
        return rng.choice(chain.elements())
    if kind in (STD_NM, STD_G):
        den = rng.randint(1, max_param)
        return Fraction(rng.randint(0, den), den)
    if kind in (NM_INF, NM_INF_MINUS):
        while True:
            q = Fraction(1, rng.randint(1, max_param))
            v = q if rng.random() < 0.5 else 1 - q
            if chain.contains(v):
                return v
    if kind in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
        if kind == NM_PRIME_INF and rng.random() < 0.2:
            return HALF
        d = Fraction(1, 2 * rng.randint(1, max_param))
        return HALF + d if rng.random() < 0.5 else HALF - d
    if kind == A_ALPHA:
        roll = rng.random()
        if roll < 0.1:
            return ZERO
        if roll < 0.2:
            return ONE
        a = chain.alpha
        den = rng.randint(1, max_param)
        return (1 - a) + (2 * a - 1) * Fraction(rng.randint(0, den), den)
    if kind == G_UP:
        n = rng.randint(1, max_param)
        return ONE if rng.random() < 0.2 else 1 - Fraction(1, n)
    if kind == G_DOWN:
        n = rng.randint(1, max_param)
        return ZERO if rng.random() < 0.2 else Fraction(1, n)
    raise AssertionError(kind)


_VARS = ("x", "y", "z", "u", "v", "w")


def random_formula(rng: random.Random, *, preds0: tuple[str, ...] = ("q", "r"),
                   preds1: tuple[str, ...] = ("P", "Q"), max_depth: int = 5,
                   quantifiers: bool = True) -> Formula:
    """A random closed formula over the given vocabulary."""

    def atom(scope: tuple[str, ...]) -> Formula:
        use_monadic = preds1 and scope and (not preds0 or rng.random() < 0.6)
        if use_monadic:
            return Atom(rng.choice(preds1), (rng.choice(scope),))
        if preds0:
            return Atom(rng.choice(preds0))
        return Bottom()

    def build(depth: int, scope: tuple[str, ...]) -> Formula:
        if depth <= 0:
            return atom(scope)
        choices = [("atom", 6), ("not", 2), ("and", 2), ("strong", 2),
                   ("implies", 3), ("or", 1), ("iff", 1)]
        if quantifiers and len(scope) < len(_VARS):
            choices += [("forall", 2), ("exists", 2)]
        total = sum(w for _, w in choices)
        roll = rng.uniform(0, total)
        for name, w in choices:
            roll -= w
            if roll <= 0:
                break
        if name == "atom":
            return atom(scope)
        if name == "not":
            return neg(build(depth - 1, scope))
        if name in ("and", "strong", "implies", "or", "iff"):
            lhs = build(depth - 1, scope)
            rhs = build(depth - 1, scope)
            ctor = {"and": And, "strong": Strong, "implies": Implies,
                    "or": disj, "iff": iff}[name]
            return ctor(lhs, rhs)
        var = _VARS[len(scope)]
        body = build(depth - 1, scope + (var,))
        return Forall(var, body) if name == "forall" else Exists(var, body)

    return build(max_depth, ())


def random_ast(rng: random.Random, max_depth: int = 8) -> Formula:
    """A structurally random AST over the primitive constructors (round-trip tests)."""
    def build(depth: int) -> Formula:
        roll = rng.randint(0, 7 if depth > 0 else 1)
        if roll == 0:
            name = rng.choice(("P", "Q", "r_2", "s"))
            arity = rng.randint(0, 2)
            return Atom(name, tuple(rng.choice(_VARS) for _ in range(arity)))
        if roll == 1:
            return Bottom()
        if roll == 2:
            return And(build(depth - 1), build(depth - 1))
        if roll == 3:
            return Strong(build(depth - 1), build(depth - 1))
        if roll == 4:
            return Implies(build(depth - 1), build(depth - 1))
        if roll == 5:
            return Forall(rng.choice(_VARS), build(depth - 1))
        if roll == 6:
            return Exists(rng.choice(_VARS), build(depth - 1))
        return neg(build(depth - 1))

    return build(max_depth)


def random_finite_model(rng: random.Random, chain: Chain, domain_size: int,
                        preds0: tuple[str, ...] = ("q", "r"),
                        preds1: tuple[str, ...] = ("P", "Q")) -> FiniteModel:
    domain = tuple(f"d{i}" for i in range(domain_size))
    predicates: dict[str, dict[tuple[str, ...], Fraction]] = {}
    for name in preds0:
        predicates[name] = {(): random_element(rng, chain)}
    for name in preds1:
        predicates[name] = {(d,): random_element(rng, chain) for d in domain}
    return FiniteModel(chain, domain, predicates)


def random_seq(rng: random.Random, chain: Chain, max_param: int = 6) -> EventualSeq:
    """A random chain-valid eventual sequence (constant or strictly monotone tail)."""
    kind = chain.kind
    roll = rng.random()
    if roll < 0.25:
        tail = constant_tail(random_element(rng, chain))
    elif kind in (NM_INF, NM_INF_MINUS):
        q = rng.randint(1, max_param)
        shift = rng.randint(0, 3)
        if kind == NM_INF_MINUS and q * (shift + 1) <= 2:
            shift += 2  # keep 1/(q(j+s+1)) clear of 1/2 at every index
        if rng.random() < 0.5:
            tail = Tail(ZERO, Fraction(1, q), shift)
        else:
            tail = Tail(ONE, Fraction(-1, q), shift)
    elif kind in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
        c = Fraction(1, 2 * rng.randint(1, max_param))
        tail = Tail(HALF, c if rng.random() < 0.5 else -c, rng.randint(0, 3))
    elif kind == STD_NM:
        den = rng.randint(2, max_param + 1)
        base = Fraction(rng.randint(0, den), den)
        span = min(base, 1 - base)
        if span == 0:
            coeff = ZERO
        else:
            coeff = span * Fraction(rng.choice((-1, 1)), rng.randint(1, 3))
        tail = Tail(base, coeff, rng.randint(0, 3))
    elif kind == A_ALPHA:
        a = chain.alpha
        base = HALF
        coeff = (a - HALF) * Fraction(rng.choice((-1, 1)), rng.randint(1, 3))
        tail = Tail(base, coeff, rng.randint(0, 3))
    else:
        raise AssertionError(kind)
    exceptions: dict[int, Fraction] = {}
    for _ in range(rng.randint(0, 2)):
        exceptions[rng.randint(0, 5)] = random_element(rng, chain)
    return EventualSeq(tail, exceptions)


def random_omega_model(rng: random.Random, chain: Chain,
                       preds0: tuple[str, ...] = ("q",),
                       preds1: tuple[str, ...] = ("P", "Q")) -> OmegaModel:
    monadic = {name: random_seq(rng, chain) for name in preds1}
    zeroary = {name: random_element(rng, chain) for name in preds0}
    return OmegaModel(chain, monadic, zeroary)

"""Countable-domain models with exact tail-expression predicate values.

The domain is the index set {0, 1, 2, ...}. A monadic predicate value is an
EventualSeq: finitely many exceptional indices plus a tail

    j  |->  base + coeff / (j + shift + 1)

The tail family is closed pointwise under the NM operations because any
comparison between two tails (or a tail and a constant) is eventually of
constant sign; the finite disagreement prefix is absorbed into exceptions.
Infima/suprema are computed exactly against the ambient chain: a
non-attained limit lands on the chain's greatest lower bound when one
exists, and is reported Unsafe otherwise (undefined truth value).

Only the infinite NM families can host omega-models here; every witness
model in scope lives on one of them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .chains import (A_ALPHA, HALF, NM_INF, NM_INF_MINUS, NM_PRIME_INF,
                     NM_PRIME_INF_MINUS, ONE, STD_NM, ZERO, Chain, ChainElement,
                     format_fraction, is_infinite_nm, parse_fraction)
from .formula import (And, Atom, Bottom, Exists, Forall, Formula, Implies, Strong,
                      free_vars)
from .models import FiniteModel, ModelError


class UnsupportedShapeError(ValueError):
    """Formula needs genuinely two-variable symbolic analysis."""


@dataclass(frozen=True)
class Unsafe:
    """A required infimum/supremum does not exist in the chain."""

    kind: str  # "inf" or "sup"

    def __str__(self) -> str:
        return f"unsafe-{self.kind}"


@dataclass(frozen=True)
class Tail:
    """j |-> base + coeff/(j + shift + 1); strictly monotone when coeff != 0."""

    base: Fraction
    coeff: Fraction
    shift: int = 0

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ModelError("tail shift must be non-negative")
        if not (0 <= self.base <= 1) or not (0 <= self.at(0) <= 1):
            raise ModelError("tail values leave [0,1]")

    def at(self, j: int) -> Fraction:
        return self.base + self.coeff / (j + self.shift + 1)


def constant_tail(value: Fraction) -> Tail:
    return Tail(value, ZERO, 0)


@dataclass(frozen=True)
class EventualSeq:
    """A tail plus a finite exception map; exceptions matching the tail are dropped."""

    tail: Tail
    exceptions: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for j, v in self.exceptions.items():
            if j < 0:
                raise ModelError("exception indices must be non-negative")
            if v != self.tail.at(j):
                cleaned[int(j)] = v
        object.__setattr__(self, "exceptions", cleaned)

    def at(self, j: int) -> Fraction:
        got = self.exceptions.get(j)
        return self.tail.at(j) if got is None else got

    def first_tail_index(self) -> int:
        j = 0
        while j in self.exceptions:
            j += 1
        return j


def constant_seq(value: Fraction) -> EventualSeq:
    return EventualSeq(constant_tail(value))


# --------------------------------------------------------------------------
# chain membership of sequences (analytic pattern rules per family)

def validate_seq(chain: Chain, seq: EventualSeq) -> None:
    """Reject sequences whose values are not provably inside the carrier."""
    if not is_infinite_nm(chain):
        raise ModelError(f"omega-models need an infinite NM chain, not {chain.name}")
    for j, v in seq.exceptions.items():
        if not chain.contains(v):
            raise ModelError(f"exception value {v} at index {j} outside {chain.name}")
    t = seq.tail
    if t.coeff == 0:
        if not chain.contains(t.base):
            raise ModelError(f"constant tail value {t.base} outside {chain.name}")
        return
    kind = chain.kind
    if kind == STD_NM:
        return  # any rational tail inside [0,1] is fine
    if kind == A_ALPHA:
        a = chain.alpha
        lo, hi = 1 - a, a
        j0 = seq.first_tail_index()
        if not (lo <= t.base <= hi and lo <= t.at(j0) <= hi):
            raise ModelError(f"tail leaves the [{lo},{hi}] band of {chain.name}")
        return
    if kind in (NM_INF, NM_INF_MINUS):
        descending = t.coeff > 0 and t.base == 0 and t.coeff.numerator == 1
        ascending = t.coeff < 0 and t.base == 1 and t.coeff.numerator == -1
        if not (descending or ascending):
            raise ModelError(f"tail does not match the {chain.name} carrier patterns")
        if kind == NM_INF_MINUS:
            _require_half_masked(chain, seq)
        return
    if kind in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
        c = abs(t.coeff)
        if not (t.base == HALF and c.numerator == 1 and c.denominator % 2 == 0):
            raise ModelError(f"tail does not match the {chain.name} carrier patterns")
        return
    raise AssertionError(kind)


def _require_half_masked(chain: Chain, seq: EventualSeq) -> None:
    # 1/(q(j+s+1)) = 1/2 (resp. its mirror) at the single j with q(j+s+1) = 2
    t = seq.tail
    q = abs(t.coeff).denominator
    if 2 % q == 0:
        j = 2 // q - t.shift - 1
        if j >= 0 and j not in seq.exceptions:
            raise ModelError(f"tail hits 1/2 at index {j}, absent from {chain.name}")


# --------------------------------------------------------------------------
# pointwise operations

def _stable_sign(A: Fraction, B: Fraction, C: Fraction, u: int, v: int) -> tuple[int, int]:
    """Least J with sign(A + B/(j+u) + C/(j+v)) constant for all j >= J, and that sign."""
    def sgn(x: Fraction) -> int:
        return (x > 0) - (x < 0)

    if A != 0:
        bound = (abs(B) + abs(C)) / abs(A)  # |B/(j+u)+C/(j+v)| < |A| beyond here
        return max(0, math.floor(bound) + 1 - min(u, v)), sgn(A)
    S = B + C
    T = B * v + C * u  # numerator of the A = 0 case is S*j + T
    if S != 0:
        return math.floor(abs(T) / abs(S)) + 1, sgn(S)
    return 0, sgn(T)


def _tail_cmp(t1: Tail, t2: Tail) -> tuple[int, int]:
    """Stabilisation of sign(t1(j) - t2(j))."""
    return _stable_sign(t1.base - t2.base, t1.coeff, -t2.coeff,
                        t1.shift + 1, t2.shift + 1)


def _tail_sum_cmp(t1: Tail, t2: Tail) -> tuple[int, int]:
    """Stabilisation of sign(t1(j) + t2(j) - 1)."""
    return _stable_sign(t1.base + t2.base - 1, t1.coeff, t2.coeff,
                        t1.shift + 1, t2.shift + 1)


def _neg_tail(t: Tail) -> Tail:
    return Tail(1 - t.base, -t.coeff, t.shift)


_BINARY_OPS = ("tnorm", "residuum", "min", "max")


def seq_apply(chain: Chain, op: str, s1: EventualSeq,
              s2: EventualSeq | None = None) -> EventualSeq:
    """Pointwise chain operation; the family is closed under all five ops."""
    if op == "negation":
        if s2 is not None:
            raise ValueError("negation is unary")
        return EventualSeq(_neg_tail(s1.tail),
                           {j: 1 - x for j, x in s1.exceptions.items()})
    if op not in _BINARY_OPS:
        raise ValueError(f"unknown sequence operation {op!r}")
    if s2 is None:
        raise ValueError(f"{op} is binary")
    t1, t2 = s1.tail, s2.tail
    j_exc = max([k + 1 for k in (*s1.exceptions, *s2.exceptions)], default=0)
    j12, sgn12 = _tail_cmp(t1, t2)
    if op == "min":
        cut, tail = j12, (t1 if sgn12 <= 0 else t2)
    elif op == "max":
        cut, tail = j12, (t1 if sgn12 >= 0 else t2)
    elif op == "tnorm":
        jsum, sgnsum = _tail_sum_cmp(t1, t2)
        cut = max(j12, jsum)
        # x*y = 0 when x + y <= 1, else min(x, y)
        tail = constant_tail(ZERO) if sgnsum <= 0 else (t1 if sgn12 <= 0 else t2)
    else:  # residuum
        jneg, sgnneg = _tail_sum_cmp(_neg_tail(t1), _neg_tail(t2))
        cut = max(j12, jneg)
        if sgn12 <= 0:
            tail = constant_tail(ONE)  # eventually t1 <= t2
        else:
            # max(n(t1), t2): n(t1) >= t2 iff 1 - t1 - t2 >= 0 iff t1 + t2 <= 1,
            # i.e. iff (1-t1) + (1-t2) >= 1
            tail = _neg_tail(t1) if sgnneg >= 0 else t2
    cut = max(cut, j_exc)
    scalar = _scalar_op(chain, op)
    exceptions = {j: scalar(s1.at(j), s2.at(j)) for j in range(cut)}
    return EventualSeq(tail, exceptions)


def _scalar_op(chain: Chain, op: str):
    return {
        "tnorm": chain.tnorm,
        "residuum": chain.residuum,
        "min": Chain.meet,
        "max": Chain.join,
    }[op]


# --------------------------------------------------------------------------
# exact infima and suprema

def seq_inf(chain: Chain, s: EventualSeq) -> Fraction | Unsafe:
    """Chain infimum of the value set, or Unsafe when no glb exists."""
    exc_min = min(s.exceptions.values(), default=None)
    t = s.tail
    if t.coeff > 0:
        # values decrease strictly toward base, never reaching it
        if exc_min is not None and exc_min <= t.base:
            return exc_min
        glb = chain.floor(t.base)
        return Unsafe("inf") if glb is None else glb
    tail_min = t.at(s.first_tail_index())  # attained: constant, or increasing
    return tail_min if exc_min is None else min(exc_min, tail_min)


def seq_sup(chain: Chain, s: EventualSeq) -> Fraction | Unsafe:
    """Chain supremum of the value set, or Unsafe when no lub exists."""
    exc_max = max(s.exceptions.values(), default=None)
    t = s.tail
    if t.coeff < 0:
        if exc_max is not None and exc_max >= t.base:
            return exc_max
        lub = chain.ceil(t.base)
        return Unsafe("sup") if lub is None else lub
    tail_max = t.at(s.first_tail_index())
    return tail_max if exc_max is None else max(exc_max, tail_max)


# --------------------------------------------------------------------------
# omega models

@dataclass(frozen=True)
class OmegaModel:
    chain: Chain
    monadic: Mapping[str, EventualSeq]
    zeroary: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name, seq in self.monadic.items():
            try:
                validate_seq(self.chain, seq)
            except ModelError as exc:
                raise ModelError(f"predicate {name!r}: {exc}") from exc
        for name, v in self.zeroary.items():
            if not self.chain.contains(v):
                raise ModelError(f"zero-ary {name!r} value {v} outside {self.chain.name}")

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain.name,
            "monadic": {
                name: {
                    "tail": {
                        "base": format_fraction(seq.tail.base),
                        "coeff": format_fraction(seq.tail.coeff),
                        "shift": seq.tail.shift,
                    },
                    "exceptions": {str(j): format_fraction(v)
                                   for j, v in sorted(seq.exceptions.items())},
                }
                for name, seq in sorted(self.monadic.items())
            },
            "zeroary": {name: format_fraction(v)
                        for name, v in sorted(self.zeroary.items())},
        }

    @staticmethod
    def from_json_dict(data: dict) -> "OmegaModel":
        try:
            chain = Chain.from_name(data["chain"])
            monadic = {}
            for name, spec in data.get("monadic", {}).items():
                tail = Tail(parse_fraction(spec["tail"]["base"]),
                            parse_fraction(spec["tail"]["coeff"]),
                            int(spec["tail"].get("shift", 0)))
                exceptions = {int(j): parse_fraction(v)
                              for j, v in spec.get("exceptions", {}).items()}
                monadic[name] = EventualSeq(tail, exceptions)
            zeroary = {name: parse_fraction(v)
                       for name, v in data.get("zeroary", {}).items()}
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed omega-model file: {exc}") from exc
        return OmegaModel(chain, monadic, zeroary)

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def truncate(self, size: int) -> FiniteModel:
        """Finite prefix model over indices 0..size-1 (same chain)."""
        if size < 1:
            raise ModelError("truncation size must be positive")
        domain = tuple(f"d{j}" for j in range(size))
        predicates: dict[str, dict[tuple[str, ...], Fraction]] = {}
        for name, seq in self.monadic.items():
            predicates[name] = {(f"d{j}",): seq.at(j) for j in range(size)}
        for name, v in self.zeroary.items():
            predicates[name] = {(): v}
        return FiniteModel(self.chain, domain, predicates)


def load_omega_model(path: str) -> OmegaModel:
    with open(path, encoding="utf-8") as fh:
        return OmegaModel.from_json_dict(json.load(fh))


# --------------------------------------------------------------------------
# evaluation

_CONST = "const"
_SEQ = "seq"


def eval_omega_value(model: OmegaModel, f: Formula) -> Fraction | Unsafe:
    """Exact value of a closed formula, or Unsafe.

    Supported shape: at each evaluation point a subformula depends on at most
    one free variable, so inner closed quantifiers reduce to constants and
    everything else propagates as one EventualSeq per variable.
    """
    if free_vars(f):
        raise ModelError(f"formula is not closed: free {sorted(free_vars(f))}")
    out = _ev(model, f)
    if isinstance(out, Unsafe):
        return out
    kind, payload = out[0], out[1:]
    assert kind == _CONST
    return payload[0]


def eval_omega(model: OmegaModel, f: Formula) -> ChainElement | Unsafe:
    out = eval_omega_value(model, f)
    return out if isinstance(out, Unsafe) else ChainElement(model.chain, out)


def _ev(m: OmegaModel, f: Formula):
    if isinstance(f, Bottom):
        return (_CONST, ZERO)
    if isinstance(f, Atom):
        if len(f.args) == 0:
            try:
                return (_CONST, m.zeroary[f.name])
            except KeyError:
                raise ModelError(f"no interpretation for atom {f.name!r}") from None
        if len(f.args) == 1:
            try:
                return (_SEQ, f.args[0], m.monadic[f.name])
            except KeyError:
                raise ModelError(f"no interpretation for predicate {f.name!r}") from None
        raise UnsupportedShapeError("omega-models interpret monadic and 0-ary predicates only")
    if isinstance(f, (And, Strong, Implies)):
        op = {And: "min", Strong: "tnorm", Implies: "residuum"}[type(f)]
        lhs = _ev(m, f.lhs)
        if isinstance(lhs, Unsafe):
            return lhs
        rhs = _ev(m, f.rhs)
        if isinstance(rhs, Unsafe):
            return rhs
        if lhs[0] == _CONST and rhs[0] == _CONST:
            return (_CONST, _scalar_op(m.chain, op)(lhs[1], rhs[1]))
        if lhs[0] == _CONST:
            seq = seq_apply(m.chain, op, constant_seq(lhs[1]), rhs[2])
            return (_SEQ, rhs[1], seq)
        if rhs[0] == _CONST:
            seq = seq_apply(m.chain, op, lhs[2], constant_seq(rhs[1]))
            return (_SEQ, lhs[1], seq)
        if lhs[1] != rhs[1]:
            raise UnsupportedShapeError(
                f"two free variables meet at a connective: {lhs[1]!r}, {rhs[1]!r}")
        return (_SEQ, lhs[1], seq_apply(m.chain, op, lhs[2], rhs[2]))
    if isinstance(f, (Forall, Exists)):
        body = _ev(m, f.body)
        if isinstance(body, Unsafe):
            return body
        if body[0] == _CONST:
            return body  # constant over an infinite domain
        if body[1] != f.var:
            return body  # constant in the quantified variable
        bound = seq_inf(m.chain, body[2]) if isinstance(f, Forall) \
            else seq_sup(m.chain, body[2])
        if isinstance(bound, Unsafe):
            return bound
        return (_CONST, bound)
    raise AssertionError(f)

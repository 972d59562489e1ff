"""Finite-domain interpretations and Tarski-style evaluation.

A finite model interprets every predicate totally over domain^arity with
chain elements; quantifiers evaluate as minimum/maximum over the domain, so
every finite model is safe. Propositional evaluation is the zero-ary special
case and gets its own entry point with per-assignment memoisation (expanded
disjunction chains share subterms by reference).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .chains import Chain, ChainElement, format_fraction, parse_fraction
from .formula import (And, Atom, Bottom, Exists, Forall, Formula, Implies, Strong,
                      free_vars, predicate_arities)


class ModelError(ValueError):
    pass


def _tuple_key(args: tuple[str, ...]) -> str:
    return "(" + ",".join(args) + ")"


def _parse_tuple_key(key: str) -> tuple[str, ...]:
    key = key.strip()
    if not (key.startswith("(") and key.endswith(")")):
        raise ModelError(f"bad tuple key: {key!r}")
    inner = key[1:-1].strip()
    return tuple(p.strip() for p in inner.split(",")) if inner else ()


@dataclass(frozen=True)
class FiniteModel:
    chain: Chain
    domain: tuple[str, ...]
    predicates: Mapping[str, Mapping[tuple[str, ...], Fraction]]
    constants: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.domain:
            raise ModelError("domain must be non-empty")
        if len(set(self.domain)) != len(self.domain):
            raise ModelError("duplicate individuals in domain")
        dom = set(self.domain)
        for name, table in self.predicates.items():
            arities = {len(t) for t in table}
            if len(arities) != 1:
                raise ModelError(f"predicate {name!r} interpreted at mixed arities")
            arity = arities.pop()
            expected = len(self.domain) ** arity
            if len(table) != expected:
                raise ModelError(f"predicate {name!r} not totally interpreted")
            for tup, value in table.items():
                if any(ind not in dom for ind in tup):
                    raise ModelError(f"predicate {name!r} interpreted off-domain at {tup}")
                self.chain.require_member(value)
        for cname, ind in self.constants.items():
            if ind not in dom:
                raise ModelError(f"constant {cname!r} maps outside the domain")

    def arity(self, predicate: str) -> int:
        table = self.predicates[predicate]
        return len(next(iter(table)))

    # -- JSON ----------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain.name,
            "domain": list(self.domain),
            "predicates": {
                name: {_tuple_key(t): format_fraction(v) for t, v in sorted(table.items())}
                for name, table in sorted(self.predicates.items())
            },
            "constants": dict(sorted(self.constants.items())),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "FiniteModel":
        try:
            chain = Chain.from_name(data["chain"])
            domain = tuple(data["domain"])
            predicates = {
                name: {_parse_tuple_key(k): parse_fraction(v) for k, v in table.items()}
                for name, table in data.get("predicates", {}).items()
            }
            constants = dict(data.get("constants", {}))
        except (KeyError, TypeError) as exc:
            raise ModelError(f"malformed model file: {exc}") from exc
        return FiniteModel(chain, domain, predicates, constants)

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def load_finite_model(path: str) -> FiniteModel:
    with open(path, encoding="utf-8") as fh:
        return FiniteModel.from_json_dict(json.load(fh))


# --------------------------------------------------------------------------
# evaluation

def eval_value(model: FiniteModel, f: Formula,
               valuation: Mapping[str, str] | None = None) -> Fraction:
    """Raw Fraction value of f under the valuation (must cover its free vars)."""
    env = dict(valuation) if valuation else {}
    missing = free_vars(f) - env.keys() - model.constants.keys()
    if missing:
        raise ModelError(f"valuation does not cover free variables: {sorted(missing)}")
    dom = set(model.domain)
    for var, ind in env.items():
        if ind not in dom:
            raise ModelError(f"valuation sends {var!r} outside the domain")
    # translated formulas share subterms by reference; memoising on
    # (node identity, values of its free variables) keeps evaluation linear
    # in the DAG instead of exponential in the nesting of shared squares
    return _eval(model, f, env, {}, {})


def _fv(f: Formula, cache: dict[int, tuple[str, ...]]) -> tuple[str, ...]:
    """Sorted free variables, linear in the DAG (shared nodes computed once)."""
    got = cache.get(id(f))
    if got is not None:
        return got
    if isinstance(f, Atom):
        out = tuple(sorted(set(f.args)))
    elif isinstance(f, Bottom):
        out = ()
    elif isinstance(f, (And, Strong, Implies)):
        out = tuple(sorted(set(_fv(f.lhs, cache)) | set(_fv(f.rhs, cache))))
    else:
        out = tuple(v for v in _fv(f.body, cache) if v != f.var)
    cache[id(f)] = out
    return out


def _eval(m: FiniteModel, f: Formula, env: dict[str, str],
          fv_cache: dict[int, tuple[str, ...]], memo: dict) -> Fraction:
    fv = _fv(f, fv_cache)
    key = (id(f), *(env[v] for v in fv if v in env))
    got = memo.get(key)
    if got is not None:
        return got
    chain = m.chain
    if isinstance(f, Atom):
        try:
            table = m.predicates[f.name]
        except KeyError:
            raise ModelError(f"no interpretation for predicate {f.name!r}") from None
        args = tuple(_resolve(m, env, a) for a in f.args)
        try:
            v = table[args]
        except KeyError:
            raise ModelError(f"missing interpretation entry {f.name}{args}") from None
    elif isinstance(f, Bottom):
        v = Fraction(0)
    elif isinstance(f, And):
        v = min(_eval(m, f.lhs, env, fv_cache, memo),
                _eval(m, f.rhs, env, fv_cache, memo))
    elif isinstance(f, Strong):
        v = chain.tnorm(_eval(m, f.lhs, env, fv_cache, memo),
                        _eval(m, f.rhs, env, fv_cache, memo))
    elif isinstance(f, Implies):
        v = chain.residuum(_eval(m, f.lhs, env, fv_cache, memo),
                           _eval(m, f.rhs, env, fv_cache, memo))
    elif isinstance(f, (Forall, Exists)):
        pick = min if isinstance(f, Forall) else max
        saved = env.get(f.var)
        values = []
        for ind in m.domain:
            env[f.var] = ind
            values.append(_eval(m, f.body, env, fv_cache, memo))
        if saved is None:
            del env[f.var]
        else:
            env[f.var] = saved
        v = pick(values)
    else:
        raise AssertionError(f)
    memo[key] = v
    return v


def _resolve(m: FiniteModel, env: dict[str, str], name: str) -> str:
    if name in env:
        return env[name]
    if name in m.constants:
        return m.constants[name]
    raise ModelError(f"unbound term {name!r} (not a bound variable or constant)")


def evaluate(model: FiniteModel, f: Formula,
             valuation: Mapping[str, str] | None = None) -> ChainElement:
    return ChainElement(model.chain, eval_value(model, f, valuation))


def model_value(model: FiniteModel, f: Formula) -> ChainElement:
    """Value of a closed formula (independent of any valuation)."""
    unbound = free_vars(f) - model.constants.keys()
    if unbound:
        raise ModelError(f"formula is not closed: free {sorted(unbound)}")
    return evaluate(model, f)


def eval_prop_value(chain: Chain, assignment: Mapping[str, Fraction],
                    f: Formula) -> Fraction:
    """Propositional value of a quantifier-free formula over 0-ary atoms."""
    arities = predicate_arities(f)
    bad = [n for n, a in arities.items() if a != 0]
    if bad or free_vars(f):
        raise ModelError(f"not a propositional formula: {bad or sorted(free_vars(f))}")
    missing = arities.keys() - assignment.keys()
    if missing:
        raise ModelError(f"unassigned atoms: {sorted(missing)}")
    memo: dict[int, Fraction] = {}
    return _eval_prop(chain, assignment, f, memo)


def _eval_prop(chain: Chain, assign: Mapping[str, Fraction], f: Formula,
               memo: dict[int, Fraction]) -> Fraction:
    key = id(f)
    got = memo.get(key)
    if got is not None:
        return got
    if isinstance(f, Atom):
        v = assign[f.name]
    elif isinstance(f, Bottom):
        v = Fraction(0)
    elif isinstance(f, And):
        v = min(_eval_prop(chain, assign, f.lhs, memo),
                _eval_prop(chain, assign, f.rhs, memo))
    elif isinstance(f, Strong):
        v = chain.tnorm(_eval_prop(chain, assign, f.lhs, memo),
                        _eval_prop(chain, assign, f.rhs, memo))
    elif isinstance(f, Implies):
        v = chain.residuum(_eval_prop(chain, assign, f.lhs, memo),
                           _eval_prop(chain, assign, f.rhs, memo))
    else:
        raise ModelError("quantifier in propositional evaluation")
    memo[key] = v
    return v


def eval_prop(chain: Chain, assignment: Mapping[str, Fraction],
              f: Formula) -> ChainElement:
    return ChainElement(chain, eval_prop_value(chain, assignment, f))

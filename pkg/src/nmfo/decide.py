"""Brute-force validity, bounded countermodel search, and chain classification.

Validity over infinite chains is never claimed here; the searches only ever
produce refutations or "no counterexample within budget".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .chains import Chain, ChainError
from .formula import Formula, free_vars, predicate_arities
from .models import FiniteModel, ModelError, eval_prop_value, eval_value


@dataclass(frozen=True)
class PropResult:
    valid: bool
    counterexample: dict[str, Fraction] | None = None
    value: Fraction | None = None


def prop_valid(chain: Chain, f: Formula) -> PropResult:
    """Exhaustive propositional validity over a finite chain.

    Atoms are taken in name order, values ascending, assignments in
    lexicographic order; the first counter-assignment is returned.
    """
    if not chain.is_finite:
        raise ChainError("propositional validity is decided over finite chains")
    arities = predicate_arities(f)
    if any(a != 0 for a in arities.values()) or free_vars(f):
        raise ModelError("prop_valid needs a quantifier-free formula over 0-ary atoms")
    atoms = sorted(arities)
    values = chain.elements()
    for combo in itertools.product(values, repeat=len(atoms)):
        assignment = dict(zip(atoms, combo))
        v = eval_prop_value(chain, assignment, f)
        if v != 1:
            return PropResult(False, assignment, v)
    return PropResult(True)


def iter_models(chain: Chain, predicates: dict[str, int],
                domain_size: int) -> Iterator[FiniteModel]:
    """Every interpretation over a fixed domain, in canonical order.

    Predicates in name order, argument tuples lexicographic in the domain
    order, values ascending.
    """
    if not chain.is_finite:
        raise ChainError("exhaustive model enumeration needs a finite chain")
    domain = tuple(f"d{i}" for i in range(domain_size))
    names = sorted(predicates)
    slots: list[tuple[str, tuple[str, ...]]] = []
    for name in names:
        for tup in itertools.product(domain, repeat=predicates[name]):
            slots.append((name, tup))
    values = chain.elements()
    for combo in itertools.product(values, repeat=len(slots)):
        tables: dict[str, dict[tuple[str, ...], Fraction]] = {n: {} for n in names}
        for (name, tup), v in zip(slots, combo):
            tables[name][tup] = v
        yield FiniteModel(chain, domain, tables)


@dataclass
class SearchResult:
    status: str  # "none" | "countermodel" | "budget-exceeded"
    model: FiniteModel | None = None
    value: Fraction | None = None
    checked: int = 0


def search_countermodel(chain: Chain, f: Formula, max_domain: int,
                        max_models: int | None = None) -> SearchResult:
    """Enumerate monadic/0-ary interpretations over domains 1..max_domain.

    Returns the first model giving the closed formula a value below 1, or
    "none"; hitting the model budget is reported distinctly.
    """
    if max_domain < 1:
        raise ChainError("max_domain must be at least 1")
    if free_vars(f):
        raise ModelError("countermodel search needs a closed formula")
    predicates = predicate_arities(f)
    if any(a > 1 for a in predicates.values()):
        raise ModelError("exhaustive search covers monadic and 0-ary predicates only")
    checked = 0
    for size in range(1, max_domain + 1):
        for model in iter_models(chain, predicates, size):
            if max_models is not None and checked >= max_models:
                return SearchResult("budget-exceeded", checked=checked)
            checked += 1
            v = eval_value(model, f)
            if v != 1:
                return SearchResult("countermodel", model, v, checked)
    return SearchResult("none", checked=checked)


@dataclass(frozen=True)
class Classification:
    """Predicted validity profile of an NM-chain, from its order type."""

    chain: Chain
    has_fixpoint: bool
    all_have_predecessor: bool
    is_complete: bool
    shifting_laws: dict[int, bool] = field(default_factory=dict)
    cup: bool = False
    cdown: bool = False
    bp: bool = False
    sn_min_valid: int | None = None  # least n with S_n valid; None: no S_n holds
    sep_min_valid: int | None = None  # least k with Sep(k) valid; None likewise

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain.name,
            "has_fixpoint": self.has_fixpoint,
            "all_have_predecessor": self.all_have_predecessor,
            "is_complete": self.is_complete,
            "shifting_laws": {str(i): self.shifting_laws[i] for i in sorted(self.shifting_laws)},
            "cup": self.cup,
            "cdown": self.cdown,
            "bp": self.bp,
            "sn_min_valid": self.sn_min_valid,
            "sep_min_valid": self.sep_min_valid,
        }


def classify_chain(chain: Chain) -> Classification:
    """Order-type-driven predictions: laws (1)-(14) always hold; (15)-(18)
    and the two order-type formulas hold exactly on all-predecessor chains;
    S_n needs fewer than 2n+2 elements; BP needs the fixpoint absent.
    """
    if chain.is_godel:
        raise ChainError("classification covers NM chains")
    pred = chain.all_have_predecessor
    laws = {i: True for i in range(1, 15)}
    laws.update({i: pred for i in range(15, 19)})
    finite = chain.is_finite
    return Classification(
        chain=chain,
        has_fixpoint=chain.has_fixpoint,
        all_have_predecessor=pred,
        is_complete=chain.is_complete,
        shifting_laws=laws,
        cup=pred,
        cdown=pred,
        bp=not chain.has_fixpoint,
        sn_min_valid=(chain.size // 2) if finite else None,
        sep_min_valid=chain.size if finite else None,
    )

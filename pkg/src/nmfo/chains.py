"""Chain algebras: finite and infinite NM-chains and Goedel chains over exact rationals.

Every chain lives inside [0,1] with the real order. NM-chains carry the
nilpotent-minimum operations

    x * y  =  0           if x <= n(y),   else min(x, y)
    x => y =  1           if x <= y,      else max(n(x), y)
    n(x)   =  1 - x

and Goedel chains carry min / the Goedel residuum (1 if x <= y, else y).
Infinite carriers are represented symbolically by exact membership predicates
on rationals; no carrier is ever stored as a set.

Families and their CLI names:

    nm<k>               finite NM-chain {0, 1/(k-1), ..., 1}
    nm-inf              {1/n} u {1 - 1/n}
    nm-inf-minus        nm-inf without 1/2
    nm-prime-inf        {1/2 - 1/(2n)} u {1/2 + 1/(2n)} u {1/2}
    nm-prime-inf-minus  nm-prime-inf without 1/2
    std-nm              all rationals in [0,1]
    a:<p>/<q>           [1-|a|, |a|] u {0,1} with |a| = max(a, 1-a)
    g<k>                finite Goedel chain
    g-up                {1 - 1/n} u {1}
    g-down              {1/n} u {0}
    std-g               all rationals in [0,1]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

NM_FIN = "nm"
NM_INF = "nm-inf"
NM_INF_MINUS = "nm-inf-minus"
NM_PRIME_INF = "nm-prime-inf"
NM_PRIME_INF_MINUS = "nm-prime-inf-minus"
STD_NM = "std-nm"
A_ALPHA = "a-alpha"
G_FIN = "g"
G_UP = "g-up"
G_DOWN = "g-down"
STD_G = "std-g"

_NM_KINDS = {NM_FIN, NM_INF, NM_INF_MINUS, NM_PRIME_INF, NM_PRIME_INF_MINUS, STD_NM, A_ALPHA}
_G_KINDS = {G_FIN, G_UP, G_DOWN, STD_G}
_INFINITE_NM_KINDS = _NM_KINDS - {NM_FIN}


class ChainError(ValueError):
    """Bad chain parameters or an operation outside a chain's contract."""


class MembershipError(ChainError):
    """A rational that does not belong to the chain's carrier."""


def _is_unit_fraction(q: Fraction) -> bool:
    return q > 0 and q.numerator == 1


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" (or "p") into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ChainError(f"not a rational: {text!r}") from exc


def format_fraction(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class Chain:
    """A symbolic chain identity; carries no stored carrier."""

    kind: str
    size: int | None = None
    alpha: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind not in _NM_KINDS | _G_KINDS:
            raise ChainError(f"unknown chain kind: {self.kind!r}")
        if self.kind in (NM_FIN, G_FIN):
            if self.size is None or self.size < 2:
                raise ChainError("finite chains need size >= 2")
        elif self.size is not None:
            raise ChainError(f"{self.kind} takes no size")
        if self.kind == A_ALPHA:
            if self.alpha is None or not (0 < self.alpha < 1):
                raise ChainError("a-alpha needs alpha in (0,1)")
            # canonical form: A_alpha and A_{1-alpha} are isomorphic
            object.__setattr__(self, "alpha", max(self.alpha, 1 - self.alpha))
        elif self.alpha is not None:
            raise ChainError(f"{self.kind} takes no alpha")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def nm(n: int) -> "Chain":
        return Chain(NM_FIN, size=n)

    @staticmethod
    def godel(n: int) -> "Chain":
        return Chain(G_FIN, size=n)

    @staticmethod
    def a_alpha(alpha: Fraction) -> "Chain":
        return Chain(A_ALPHA, alpha=alpha)

    @staticmethod
    def from_name(name: str) -> "Chain":
        """Parse a CLI/config chain name."""
        name = name.strip()
        fixed = {
            NM_INF: Chain(NM_INF),
            NM_INF_MINUS: Chain(NM_INF_MINUS),
            NM_PRIME_INF: Chain(NM_PRIME_INF),
            NM_PRIME_INF_MINUS: Chain(NM_PRIME_INF_MINUS),
            STD_NM: Chain(STD_NM),
            G_UP: Chain(G_UP),
            G_DOWN: Chain(G_DOWN),
            STD_G: Chain(STD_G),
        }
        if name in fixed:
            return fixed[name]
        if name.startswith("a:"):
            return Chain.a_alpha(parse_fraction(name[2:]))
        for prefix, kind in (("nm", NM_FIN), ("g", G_FIN)):
            if name.startswith(prefix) and name[len(prefix):].isdigit():
                return Chain(kind, size=int(name[len(prefix):]))
        raise ChainError(f"unknown chain name: {name!r}")

    @property
    def name(self) -> str:
        if self.kind == NM_FIN:
            return f"nm{self.size}"
        if self.kind == G_FIN:
            return f"g{self.size}"
        if self.kind == A_ALPHA:
            return f"a:{self.alpha}"
        return self.kind

    def __str__(self) -> str:
        return self.name

    # -- structural metadata ----------------------------------------------

    @property
    def is_godel(self) -> bool:
        return self.kind in _G_KINDS

    @property
    def is_finite(self) -> bool:
        return self.kind in (NM_FIN, G_FIN)

    @property
    def has_fixpoint(self) -> bool:
        """Whether the carrier contains the negation fixpoint 1/2 (NM only)."""
        if self.is_godel:
            return False
        if self.kind == NM_FIN:
            return self.size % 2 == 1
        return self.kind in (NM_INF, NM_PRIME_INF, STD_NM, A_ALPHA)

    @property
    def is_complete(self) -> bool:
        """Whether every subset of the carrier has an inf and a sup in it.

        NM'-minus is the one incomplete family: its carrier accumulates only
        at 1/2, which it omits.
        """
        return self.kind != NM_PRIME_INF_MINUS

    @property
    def all_have_predecessor(self) -> bool:
        """Whether every element outside {0,1} has an immediate lower neighbour."""
        if self.kind in (NM_FIN, G_FIN, NM_INF, NM_INF_MINUS, NM_PRIME_INF_MINUS,
                         G_UP, G_DOWN):
            return True
        if self.kind == A_ALPHA:
            return self.alpha == HALF  # A_{1/2} is the three-element chain
        return False

    # -- carrier -----------------------------------------------------------

    def contains(self, q: Fraction) -> bool:
        """Exact membership test for a rational in [0,1]."""
        if not (0 <= q <= 1):
            return False
        k = self.kind
        if k in (NM_FIN, G_FIN):
            return (q * (self.size - 1)).denominator == 1
        if k in (STD_NM, STD_G):
            return True
        if k == NM_INF:
            return _is_unit_fraction(q) or _is_unit_fraction(1 - q)
        if k == NM_INF_MINUS:
            return q != HALF and (_is_unit_fraction(q) or _is_unit_fraction(1 - q))
        if k in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
            if q == HALF:
                return k == NM_PRIME_INF
            d = abs(q - HALF)
            return _is_unit_fraction(d) and d.denominator % 2 == 0
        if k == A_ALPHA:
            return q == 0 or q == 1 or (1 - self.alpha) <= q <= self.alpha
        if k == G_UP:
            return q == 1 or _is_unit_fraction(1 - q) or q == 0
        if k == G_DOWN:
            return q == 0 or _is_unit_fraction(q)
        raise AssertionError(k)

    def require_member(self, q: Fraction) -> Fraction:
        if not self.contains(q):
            raise MembershipError(f"{q} is not in {self.name}")
        return q

    def elements(self) -> tuple[Fraction, ...]:
        """Ascending carrier of a finite chain."""
        if not self.is_finite:
            raise ChainError(f"{self.name} is infinite")
        n = self.size
        return tuple(Fraction(i, n - 1) for i in range(n))

    # -- operations ---------------------------------------------------------

    def neg(self, x: Fraction) -> Fraction:
        if self.is_godel:
            return ONE if x == 0 else ZERO
        return 1 - x

    def tnorm(self, x: Fraction, y: Fraction) -> Fraction:
        if self.is_godel:
            return min(x, y)
        return ZERO if x <= 1 - y else min(x, y)

    def residuum(self, x: Fraction, y: Fraction) -> Fraction:
        if x <= y:
            return ONE
        return y if self.is_godel else max(1 - x, y)

    @staticmethod
    def meet(x: Fraction, y: Fraction) -> Fraction:
        return min(x, y)

    @staticmethod
    def join(x: Fraction, y: Fraction) -> Fraction:
        return max(x, y)

    # -- order topology ------------------------------------------------------

    def floor(self, q: Fraction) -> Fraction | None:
        """Greatest carrier element <= q, or None when no greatest exists."""
        if not (0 <= q <= 1):
            raise ChainError(f"floor argument {q} outside [0,1]")
        k = self.kind
        if k in (NM_FIN, G_FIN):
            return Fraction(math.floor(q * (self.size - 1)), self.size - 1)
        if k in (STD_NM, STD_G):
            return q
        if k == A_ALPHA:
            a = self.alpha
            if q == 1:
                return ONE
            if q >= a:
                return a
            if q >= 1 - a:
                return q
            return ZERO
        if k in (NM_INF, NM_INF_MINUS):
            if q == 1:
                return ONE
            cands = []
            if q > 0:
                cands.append(Fraction(1, math.ceil(1 / q)))  # largest 1/n <= q
            n0 = math.floor(1 / (1 - q))
            cands.append(1 - Fraction(1, n0))  # largest 1-1/n <= q
            best = max(c for c in cands if c <= q)
            if k == NM_INF_MINUS and best == HALF:
                return Fraction(1, 3)  # carrier has nothing in (1/3, 1/2]
            return best
        if k in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
            if q >= 1:
                return ONE
            if q > HALF:
                n = math.ceil(1 / (2 * (q - HALF)))  # least n with 1/2+1/(2n) <= q
                return HALF + Fraction(1, 2 * n)
            if q == HALF:
                return HALF if k == NM_PRIME_INF else None
            n = math.floor(1 / (2 * (HALF - q)))  # largest n with 1/2-1/(2n) <= q
            return HALF - Fraction(1, 2 * n)
        if k == G_UP:
            if q == 1:
                return ONE
            return 1 - Fraction(1, math.floor(1 / (1 - q)))
        if k == G_DOWN:
            if q == 0:
                return ZERO
            if q >= 1:
                return ONE
            return Fraction(1, math.ceil(1 / q))
        raise AssertionError(k)

    def ceil(self, q: Fraction) -> Fraction | None:
        """Least carrier element >= q, or None when no least exists."""
        if not (0 <= q <= 1):
            raise ChainError(f"ceil argument {q} outside [0,1]")
        k = self.kind
        if k == G_UP:
            if q == 0:
                return ZERO
            if q == 1:
                return ONE
            n = math.ceil(1 / (1 - q))  # least n with 1-1/n >= q
            return 1 - Fraction(1, n)
        if k == G_DOWN:
            if q == 0:
                return ZERO
            return Fraction(1, math.floor(1 / q))
        if k == STD_G:
            return q
        # NM carriers (and finite Goedel ones) are closed under x -> 1-x
        if k == G_FIN:
            return Fraction(math.ceil(q * (self.size - 1)), self.size - 1)
        f = self.floor(1 - q)
        return None if f is None else 1 - f

    def has_predecessor(self, x: Fraction) -> bool:
        """Whether x (not 0 or 1) has an immediate lower neighbour in the carrier."""
        self.require_member(x)
        if x == 0 or x == 1:
            raise ChainError("predecessor query is for elements outside {0,1}")
        k = self.kind
        if k in (NM_FIN, G_FIN, NM_INF, NM_INF_MINUS, NM_PRIME_INF_MINUS, G_UP, G_DOWN):
            return True
        if k == NM_PRIME_INF:
            return x != HALF
        if k == A_ALPHA:
            return x == 1 - self.alpha  # the band's bottom sits just above 0
        return False  # dense standard chains


@dataclass(frozen=True)
class ChainElement:
    """A rational certified at construction to belong to its chain."""

    chain: Chain
    value: Fraction

    def __post_init__(self) -> None:
        self.chain.require_member(self.value)

    def __str__(self) -> str:
        return format_fraction(self.value)


def _same_chain(x: ChainElement, y: ChainElement) -> Chain:
    if x.chain != y.chain:
        raise ChainError(f"elements of different chains: {x.chain.name}, {y.chain.name}")
    return x.chain


def mem(chain: Chain, q: Fraction) -> bool:
    return chain.contains(q)


def tnorm(x: ChainElement, y: ChainElement) -> ChainElement:
    c = _same_chain(x, y)
    return ChainElement(c, c.tnorm(x.value, y.value))


def residuum(x: ChainElement, y: ChainElement) -> ChainElement:
    c = _same_chain(x, y)
    return ChainElement(c, c.residuum(x.value, y.value))


def negation(x: ChainElement) -> ChainElement:
    return ChainElement(x.chain, x.chain.neg(x.value))


def meet(x: ChainElement, y: ChainElement) -> ChainElement:
    c = _same_chain(x, y)
    return ChainElement(c, min(x.value, y.value))


def join(x: ChainElement, y: ChainElement) -> ChainElement:
    c = _same_chain(x, y)
    return ChainElement(c, max(x.value, y.value))


def floor_in(chain: Chain, q: Fraction) -> ChainElement | None:
    f = chain.floor(q)
    return None if f is None else ChainElement(chain, f)


def ceil_in(chain: Chain, q: Fraction) -> ChainElement | None:
    f = chain.ceil(q)
    return None if f is None else ChainElement(chain, f)


def enumerate_chain(chain: Chain) -> tuple[ChainElement, ...]:
    return tuple(ChainElement(chain, v) for v in chain.elements())


def is_infinite_nm(chain: Chain) -> bool:
    return chain.kind in _INFINITE_NM_KINDS

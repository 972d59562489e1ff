"""Constructions between chains and models: rotation, the squaring translation,
cut models, positive collapse, and explicit inf/sup-preserving embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import (A_ALPHA, G_DOWN, G_FIN, G_UP, HALF, NM_FIN, NM_INF,
                     NM_INF_MINUS, NM_PRIME_INF, NM_PRIME_INF_MINUS, ONE, STD_NM,
                     ZERO, Chain, ChainError)
from .formula import (BOT, And, Atom, Bottom, Exists, Forall, Formula, Implies,
                      Strong, strong_square)
from .models import FiniteModel
from .omega import EventualSeq, OmegaModel, Tail, _tail_cmp, constant_tail


class TransformError(ChainError):
    pass


# --------------------------------------------------------------------------
# rotation of Goedel chains

@dataclass(frozen=True)
class Rotation:
    """Rotated chain plus, for finite sources, the map of A\\{0} onto the positives."""

    source: Chain
    chain: Chain
    correspondence: dict[Fraction, Fraction] | None

    def apply(self, x: Fraction) -> Fraction:
        """Image of a source element (0 maps to the rotated bottom)."""
        if x == 0:
            return ZERO
        if self.correspondence is None:
            raise TransformError("no finite correspondence for an infinite source")
        return self.correspondence[x]


def rotate(g: Chain, with_fixpoint: bool = True) -> Rotation:
    """NM-chain obtained by mirroring the nonzero part of a Goedel chain.

    The nonzero source elements become the positives; with_fixpoint=False
    drops the negation fixpoint, which needs nothing else changed because the
    fixpoint-free chains are subalgebras of the full ones.
    """
    if g.kind == G_FIN:
        n = g.size
        target = Chain.nm(2 * n - 1 if with_fixpoint else 2 * n - 2)
        m = target.size - 1
        offset = m - (n - 1)  # positives of the target start at (offset+1)/m
        corr = {Fraction(i, n - 1): Fraction(offset + i, m) for i in range(1, n)}
        return Rotation(g, target, corr)
    if g.kind == G_UP:
        return Rotation(g, Chain(NM_INF if with_fixpoint else NM_INF_MINUS), None)
    if g.kind == G_DOWN:
        return Rotation(g, Chain(NM_PRIME_INF if with_fixpoint else NM_PRIME_INF_MINUS), None)
    raise TransformError(f"rotation is defined for g<k>, g-up, g-down; got {g.name}")


# --------------------------------------------------------------------------
# the squaring translation

def eliminate_exists(f: Formula) -> Formula:
    """Rewrite every existential as ~forall~ (sound over involutive chains)."""
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, And):
        return And(eliminate_exists(f.lhs), eliminate_exists(f.rhs))
    if isinstance(f, Strong):
        return Strong(eliminate_exists(f.lhs), eliminate_exists(f.rhs))
    if isinstance(f, Implies):
        return Implies(eliminate_exists(f.lhs), eliminate_exists(f.rhs))
    if isinstance(f, Forall):
        return Forall(f.var, eliminate_exists(f.body))
    if isinstance(f, Exists):
        body = eliminate_exists(f.body)
        return Implies(Forall(f.var, Implies(body, BOT)), BOT)
    raise AssertionError(f)


def star(f: Formula) -> Formula:
    """The squaring translation; existentials are rewritten away first."""
    return _star(eliminate_exists(f))


def _star(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return strong_square(f)
    if isinstance(f, Bottom):
        return f
    if isinstance(f, And):
        return And(_star(f.lhs), _star(f.rhs))
    if isinstance(f, Strong):
        return Strong(_star(f.lhs), _star(f.rhs))
    if isinstance(f, Implies):
        return strong_square(Implies(_star(f.lhs), _star(f.rhs)))
    if isinstance(f, Forall):
        return strong_square(Forall(f.var, _star(f.body)))
    raise AssertionError(f)


# --------------------------------------------------------------------------
# atomic-value rewrites: cut model and positive collapse

def _cut_value(v: Fraction, hi: Fraction) -> Fraction:
    if v > hi:
        return ONE
    if v < 1 - hi:
        return ZERO
    return v


def _collapse_value(v: Fraction) -> Fraction:
    return v if v > HALF else ZERO  # the fixpoint is not positive


def _map_finite(m: FiniteModel, fn) -> FiniteModel:
    predicates = {name: {tup: fn(v) for tup, v in table.items()}
                  for name, table in m.predicates.items()}
    return FiniteModel(m.chain, m.domain, predicates, dict(m.constants))


def _map_seq_by_thresholds(seq: EventualSeq, thresholds: list[Fraction],
                           tail_pick, fn) -> EventualSeq:
    """Pointwise fn on a sequence, where fn only compares values to thresholds.

    tail_pick receives the eventual sign of (tail - t) for each threshold and
    returns the result tail, or None to keep the original one; the unstable
    prefix is absorbed into exceptions.
    """
    t = seq.tail
    cut = max([k + 1 for k in seq.exceptions], default=0)
    signs = []
    for thr in thresholds:
        j, s = _tail_cmp(t, constant_tail(thr))
        cut = max(cut, j)
        signs.append(s)
    new_tail = tail_pick(signs)
    exceptions = {j: fn(seq.at(j)) for j in range(cut)}
    return EventualSeq(new_tail if new_tail is not None else t, exceptions)


def _map_omega(m: OmegaModel, thresholds: list[Fraction], tail_pick, fn) -> OmegaModel:
    monadic = {name: _map_seq_by_thresholds(seq, thresholds, tail_pick, fn)
               for name, seq in m.monadic.items()}
    zeroary = {name: fn(v) for name, v in m.zeroary.items()}
    return OmegaModel(m.chain, monadic, zeroary)


def cut_model(model: FiniteModel | OmegaModel, alpha: Fraction):
    """Send atomic values above |alpha| to 1 and below n(|alpha|) to 0.

    The cut lemma then propagates the same rewrite to every formula value;
    that is checked by the suites, not assumed here.
    """
    chain = model.chain
    if chain.is_godel:
        raise TransformError("cut models live on NM chains")
    if not (0 < alpha < 1):
        raise TransformError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    chain.require_member(alpha)
    hi = max(alpha, 1 - alpha)

    def fn(v: Fraction) -> Fraction:
        return _cut_value(v, hi)

    if isinstance(model, FiniteModel):
        return _map_finite(model, fn)
    return _map_omega(model, [hi, 1 - hi], _cut_tail_pick, fn)


def _cut_tail_pick(signs: list[int]) -> Tail | None:
    sgn_hi, sgn_lo = signs
    if sgn_hi > 0:
        return constant_tail(ONE)  # eventually above |alpha|
    if sgn_lo < 0:
        return constant_tail(ZERO)  # eventually below n(|alpha|)
    return None  # straddling band: keep the tail, clip the prefix


def positive_collapse(model: FiniteModel | OmegaModel):
    """Zero every non-positive atomic value (fixpoint included)."""
    if model.chain.is_godel:
        raise TransformError("positive collapse lives on NM chains")
    if isinstance(model, FiniteModel):
        return _map_finite(model, _collapse_value)
    return _map_omega(
        model, [HALF],
        lambda signs: None if signs[0] > 0 else constant_tail(ZERO),
        _collapse_value,
    )


# --------------------------------------------------------------------------
# embeddings

@dataclass(frozen=True)
class ChainEmbedding:
    source: Chain
    target: Chain
    pairs: tuple[tuple[Fraction, Fraction], ...]

    def apply(self, x: Fraction) -> Fraction:
        for s, t in self.pairs:
            if s == x:
                return t
        raise TransformError(f"{x} is not a source element of this embedding")

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.pairs)


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    reason: str | None = None
    witness: tuple | None = None
    # finite sources: order embedding alone already preserves all inf and sup
    infsup_by_finiteness: bool = True


_INFINITE_TARGETS = {NM_INF, NM_PRIME_INF, NM_INF_MINUS, NM_PRIME_INF_MINUS}


def embed_finite(source: Chain, target: Chain) -> ChainEmbedding:
    """The explicit embedding of a finite NM-chain into a larger chain.

    Positives go to the displayed witness values (offsets from the least or
    greatest positive, depending on the target family); negatives mirror
    through phi(x) = 1 - phi(1 - x); endpoints and fixpoint are pinned.
    Fixpoint-free targets require an even source; finite targets also need
    size and parity to fit.
    """
    if source.kind != NM_FIN:
        raise TransformError("sources are finite NM-chains")
    k = source.size
    es = source.elements()
    if target.kind in (NM_INF_MINUS, NM_PRIME_INF_MINUS) and k % 2 == 1:
        raise TransformError(f"{target.name} has no fixpoint: source size must be even")
    if target.kind == NM_FIN:
        if target.size < k:
            raise TransformError("target is smaller than the source")
        if (target.size - k) % 2 != 0:
            raise TransformError("finite embedding needs matching parity")
    elif target.kind not in _INFINITE_TARGETS:
        raise TransformError(f"unsupported embedding target {target.name}")

    phi: dict[Fraction, Fraction] = {ZERO: ZERO, ONE: ONE}
    if k % 2 == 1:
        phi[HALF] = HALF  # every supported fixpointed target has fixpoint 1/2
    ip = (k + 1) // 2  # index of the least positive element in es
    if target.kind in (NM_INF, NM_INF_MINUS):
        for i in range(ip, k - 1):
            phi[es[i]] = 1 - Fraction(1, 3 + (i - ip))
    elif target.kind in (NM_PRIME_INF, NM_PRIME_INF_MINUS):
        for i in range(ip, k - 1):
            phi[es[i]] = HALF + Fraction(1, 2 * (2 + (k - 2 - i)))
    else:
        ts = target.elements()
        for t in range(1, k - ip):
            phi[es[k - 1 - t]] = ts[target.size - 1 - t]  # top-aligned positives
    for i in range(1, ip):
        phi[es[i]] = 1 - phi[es[k - 1 - i]]
    pairs = tuple(sorted(phi.items()))
    return ChainEmbedding(source, target, pairs)


def check_embedding(e: ChainEmbedding) -> EmbeddingCheck:
    """Exhaustively verify injectivity, order, endpoints, and homomorphism."""
    src, tgt = e.source, e.target
    if not src.is_finite:
        raise TransformError("only finite sources are checked exhaustively")
    m = e.as_dict()
    elems = src.elements()
    if set(m) != set(elems):
        return EmbeddingCheck(False, "map is not total on the source", None)
    for x in elems:
        if not tgt.contains(m[x]):
            return EmbeddingCheck(False, "image outside the target carrier", (x, m[x]))
    if len(set(m.values())) != len(elems):
        return EmbeddingCheck(False, "not injective", None)
    if m[ZERO] != ZERO or m[ONE] != ONE:
        return EmbeddingCheck(False, "endpoints not preserved", None)
    if src.has_fixpoint and tgt.has_fixpoint and m.get(HALF) != HALF:
        return EmbeddingCheck(False, "fixpoint not preserved", (HALF, m.get(HALF)))
    for x in elems:
        for y in elems:
            if (x < y) != (m[x] < m[y]):
                return EmbeddingCheck(False, "order not preserved", (x, y))
            if m[src.tnorm(x, y)] != tgt.tnorm(m[x], m[y]):
                return EmbeddingCheck(False, "tnorm not preserved", (x, y))
            if m[src.residuum(x, y)] != tgt.residuum(m[x], m[y]):
                return EmbeddingCheck(False, "residuum not preserved", (x, y))
            if m[min(x, y)] != min(m[x], m[y]) or m[max(x, y)] != max(m[x], m[y]):
                return EmbeddingCheck(False, "lattice operations not preserved", (x, y))
        if m[src.neg(x)] != tgt.neg(m[x]):
            return EmbeddingCheck(False, "negation not preserved", (x, m[x]))
    return EmbeddingCheck(True)

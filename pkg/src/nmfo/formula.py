"""First-order formula AST, text grammar, and the named formula schemas.

Primitive connectives are &, /\\, -> and bot, with forall/exists. The derived
forms are expanded eagerly at construction:

    ~F        :=  F -> bot
    F \\/ G    :=  ((F -> G) -> G) /\\ ((G -> F) -> F)
    F <-> G   :=  (F -> G) /\\ (G -> F)
    top       :=  ~bot

so there is a single evaluation path; the printer re-sugars these patterns
for readability. Quantifier bodies extend as far right as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class FormulaError(ValueError):
    pass


class ParseError(FormulaError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class ArityError(FormulaError):
    """The same predicate used with two different arities."""


@dataclass(frozen=True)
class Formula:
    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Strong(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


BOT = Bottom()


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def disj(a: Formula, b: Formula) -> Formula:
    return And(Implies(Implies(a, b), b), Implies(Implies(b, a), a))


def iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def top() -> Formula:
    return Implies(BOT, BOT)


def strong_square(f: Formula) -> Formula:
    return Strong(f, f)


def free_vars(f: Formula) -> frozenset[str]:
    def walk(g: Formula, bound: frozenset[str]) -> frozenset[str]:
        if isinstance(g, Atom):
            return frozenset(a for a in g.args if a not in bound)
        if isinstance(g, Bottom):
            return frozenset()
        if isinstance(g, (And, Strong, Implies)):
            return walk(g.lhs, bound) | walk(g.rhs, bound)
        if isinstance(g, (Forall, Exists)):
            return walk(g.body, bound | {g.var})
        raise AssertionError(g)

    return walk(f, frozenset())


def predicate_arities(f: Formula) -> dict[str, int]:
    """Map each predicate to its arity; raises ArityError on conflicts."""
    out: dict[str, int] = {}
    for g in subformulas(f):
        if isinstance(g, Atom):
            seen = out.setdefault(g.name, len(g.args))
            if seen != len(g.args):
                raise ArityError(
                    f"predicate {g.name!r} used with arities {seen} and {len(g.args)}")
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformulas, parents after children, structural duplicates skipped."""
    seen: set[Formula] = set()

    def walk(g: Formula) -> Iterator[Formula]:
        if g in seen:
            return
        seen.add(g)
        if isinstance(g, (And, Strong, Implies)):
            yield from walk(g.lhs)
            yield from walk(g.rhs)
        elif isinstance(g, (Forall, Exists)):
            yield from walk(g.body)
        yield g

    return walk(f)


def is_quantifier_free(f: Formula) -> bool:
    return not any(isinstance(g, (Forall, Exists)) for g in subformulas(f))


# --------------------------------------------------------------------------
# parser

_KEYWORDS = {"forall", "exists", "bot", "top"}
_PUNCT = ("<->", "->", "\\/", "/\\", "&", "~", "(", ")", ",", ".")


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_Token]:
    out: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                out.append(_Token(p, p, line, col))
                i += len(p)
                col += len(p)
                break
        else:
            if ch.isalpha():
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                word = text[i:j]
                kind = word if word in _KEYWORDS else "ident"
                out.append(_Token(kind, word, line, col))
                col += j - i
                i = j
            else:
                raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(_Token("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        self.pos += 1
        return tok

    # precedence, loosest first: <->, ->, \/, /\, & (all right-associative)

    def formula(self) -> Formula:
        lhs = self.implication()
        if self.peek().kind == "<->":
            self.take()
            return iff(lhs, self.formula())
        return lhs

    def implication(self) -> Formula:
        lhs = self.disjunction()
        if self.peek().kind == "->":
            self.take()
            return Implies(lhs, self.implication())
        return lhs

    def disjunction(self) -> Formula:
        lhs = self.conjunction()
        if self.peek().kind == "\\/":
            self.take()
            return disj(lhs, self.disjunction())
        return lhs

    def conjunction(self) -> Formula:
        lhs = self.strong()
        if self.peek().kind == "/\\":
            self.take()
            return And(lhs, self.conjunction())
        return lhs

    def strong(self) -> Formula:
        lhs = self.unary()
        if self.peek().kind == "&":
            self.take()
            return Strong(lhs, self.strong())
        return lhs

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.take()
            return neg(self.unary())
        if tok.kind in ("forall", "exists"):
            self.take()
            var = self.take("ident").text
            self.take(".")
            body = self.formula()  # quantifier body runs to the end
            return Forall(var, body) if tok.kind == "forall" else Exists(var, body)
        return self.atomic()

    def atomic(self) -> Formula:
        tok = self.take()
        if tok.kind == "bot":
            return BOT
        if tok.kind == "top":
            return top()
        if tok.kind == "(":
            inner = self.formula()
            self.take(")")
            return inner
        if tok.kind == "ident":
            if self.peek().kind == "(":
                self.take()
                args = [self.take("ident").text]
                while self.peek().kind == ",":
                    self.take()
                    args.append(self.take("ident").text)
                self.take(")")
                return Atom(tok.text, tuple(args))
            return Atom(tok.text)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.col)


def parse(text: str) -> Formula:
    """Parse formula source; derived connectives come back expanded."""
    parser = _Parser(_tokenize(text))
    f = parser.formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    predicate_arities(f)  # enforce one arity per predicate
    return f


# --------------------------------------------------------------------------
# printer

_LEVEL_IFF, _LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_STRONG, _LEVEL_NOT, _LEVEL_ATOM = \
    1, 2, 3, 4, 5, 6, 7


def _match_or(f: Formula) -> tuple[Formula, Formula] | None:
    if not isinstance(f, And):
        return None
    l, r = f.lhs, f.rhs
    if (isinstance(l, Implies) and isinstance(l.lhs, Implies)
            and l.lhs.rhs == l.rhs):
        a, b = l.lhs.lhs, l.rhs
        if r == Implies(Implies(b, a), a):
            return a, b
    return None


def _match_iff(f: Formula) -> tuple[Formula, Formula] | None:
    if (isinstance(f, And) and isinstance(f.lhs, Implies) and isinstance(f.rhs, Implies)
            and f.lhs.lhs == f.rhs.rhs and f.lhs.rhs == f.rhs.lhs):
        return f.lhs.lhs, f.lhs.rhs
    return None


def _render(f: Formula) -> tuple[str, int, bool]:
    """Render to (text, binding level, right-open).

    right-open marks text ending in an unparenthesised quantifier body, which
    would swallow any following operator; such operands get wrapped when
    anything follows them.
    """
    if isinstance(f, Bottom):
        return "bot", _LEVEL_ATOM, False
    if isinstance(f, Atom):
        text = f.name if not f.args else f"{f.name}({','.join(f.args)})"
        return text, _LEVEL_ATOM, False
    if isinstance(f, (Forall, Exists)):
        kw = "forall" if isinstance(f, Forall) else "exists"
        body, _, _ = _render(f.body)
        return f"{kw} {f.var}. {body}", _LEVEL_ATOM, True
    if f == Implies(BOT, BOT):
        return "top", _LEVEL_ATOM, False
    if isinstance(f, Implies) and f.rhs == BOT:
        text, level, ro = _render(f.lhs)
        if level < _LEVEL_NOT:
            text, ro = f"({text})", False
        return f"~{text}", _LEVEL_NOT, ro
    both = _match_or(f)
    if both is not None:
        return _binary(both[0], both[1], "\\/", _LEVEL_OR)
    both = _match_iff(f)
    if both is not None:
        return _binary(both[0], both[1], "<->", _LEVEL_IFF)
    if isinstance(f, And):
        return _binary(f.lhs, f.rhs, "/\\", _LEVEL_AND)
    if isinstance(f, Strong):
        return _binary(f.lhs, f.rhs, "&", _LEVEL_STRONG)
    if isinstance(f, Implies):
        return _binary(f.lhs, f.rhs, "->", _LEVEL_IMP)
    raise AssertionError(f)


def _binary(lhs: Formula, rhs: Formula, op: str, level: int) -> tuple[str, int, bool]:
    lt, ll, lro = _render(lhs)
    if ll <= level or lro:
        lt = f"({lt})"
    rt, rl, rro = _render(rhs)
    if rl < level:
        rt, rro = f"({rt})", False
    return f"{lt} {op} {rt}", level, rro


def pretty(f: Formula) -> str:
    """Grammar-conformant text; parse(pretty(f)) is structurally f."""
    return _render(f)[0]


# --------------------------------------------------------------------------
# schemas

def _var_atom(name: str, var: str = "x") -> Formula:
    return Atom(name, (var,))


def _fold_and(parts: list[Formula]) -> Formula:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def _fold_or(parts: list[Formula]) -> Formula:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = disj(p, out)
    return out


def _shift(i: int) -> Formula:
    P = _var_atom("P")
    Q = _var_atom("Q")
    q = Atom("q")
    allP = Forall("x", P)
    allQ = Forall("x", Q)
    someP = Exists("x", P)
    someQ = Exists("x", Q)
    if i == 1:
        return iff(Forall("x", And(P, q)), And(allP, q))
    if i == 2:
        return iff(Exists("x", And(P, q)), And(someP, q))
    if i == 3:
        return iff(Forall("x", disj(P, q)), disj(allP, q))
    if i == 4:
        return iff(Exists("x", disj(P, q)), disj(someP, q))
    if i == 5:
        return iff(Forall("x", And(P, Q)), And(allP, allQ))
    if i == 6:
        # sound direction only; the converse fails already classically
        return Implies(Exists("x", And(P, Q)), And(someP, someQ))
    if i == 7:
        return Implies(disj(allP, allQ), Forall("x", disj(P, Q)))
    if i == 8:
        return iff(Exists("x", disj(P, Q)), disj(someP, someQ))
    if i == 9:
        return iff(Exists("x", Strong(P, q)), Strong(someP, q))
    if i == 10:
        return Implies(Exists("x", Strong(P, Q)), Strong(someP, someQ))
    if i == 11:
        return iff(Forall("x", Implies(P, q)), Implies(someP, q))
    if i == 12:
        return iff(Forall("x", Implies(q, P)), Implies(q, allP))
    if i == 13:
        return iff(neg(someP), Forall("x", neg(P)))
    if i == 14:
        return iff(neg(allP), Exists("x", neg(P)))
    if i == 15:
        return iff(Forall("x", Strong(P, q)), Strong(allP, q))
    if i == 16:
        # diagonal instance: the two-predicate biconditional fails on every
        # NM-chain with three or more elements
        return iff(Forall("x", Strong(P, P)), Strong(allP, allP))
    if i == 17:
        return iff(Exists("x", Implies(P, q)), Implies(allP, q))
    if i == 18:
        return iff(Exists("x", Implies(q, P)), Implies(q, someP))
    raise FormulaError(f"shift law index out of range: {i}")


def schema(name: str, *params: int) -> Formula:
    """Instantiate a named formula schema.

    sn(n)    ((x0->x1)->x1) /\\ ... -> (x0 \\/ ... \\/ xn)
    bp       ~(~p^2)^2 <-> (~(~p)^2)^2
    cup      exists x. (P(x) -> forall y. P(y))
    cdown    exists x. (exists y. P(y) -> P(x))
    star     forall x. (P(x) & q) <-> (forall x. P(x) & q)
    shift(i) quantifier shifting law i, 1 <= i <= 18
    sep(k)   (p1 -> p2) \\/ ... \\/ (pk -> p{k+1})
    """
    key = name.lower()
    if key == "sn":
        (n,) = _require_params(name, params, 1)
        xs = [Atom(f"x{i}") for i in range(n + 1)]
        premise = _fold_and([Implies(Implies(xs[i], xs[i + 1]), xs[i + 1])
                             for i in range(n)])
        return Implies(premise, _fold_or(xs))
    if key == "bp":
        _require_params(name, params, 0)
        p = Atom("p")
        sq = strong_square
        return iff(neg(sq(neg(sq(p)))), sq(neg(sq(neg(p)))))
    if key == "cup":
        _require_params(name, params, 0)
        return Exists("x", Implies(_var_atom("P", "x"), Forall("y", _var_atom("P", "y"))))
    if key == "cdown":
        _require_params(name, params, 0)
        return Exists("x", Implies(Exists("y", _var_atom("P", "y")), _var_atom("P", "x")))
    if key == "star":
        _require_params(name, params, 0)
        return _shift(15)
    if key == "shift":
        (i,) = _require_params(name, params, 1)
        if not 1 <= i <= 18:
            raise FormulaError(f"shift law index out of range: {i}")
        return _shift(i)
    if key == "sep":
        (k,) = _require_params(name, params, 1)
        atoms = [Atom(f"p{i}") for i in range(1, k + 2)]
        return _fold_or([Implies(atoms[i], atoms[i + 1]) for i in range(k)])
    raise FormulaError(f"unknown schema: {name!r}")


def _require_params(name: str, params: tuple[int, ...], count: int) -> tuple[int, ...]:
    if len(params) != count:
        raise FormulaError(f"schema {name!r} takes {count} parameter(s), got {len(params)}")
    if any(p < 1 for p in params):
        raise FormulaError(f"schema {name!r} parameters must be positive")
    return params


def schema_from_spec(spec: str) -> Formula:
    """Parse "name" or "name:p1,p2" into a schema instance (CLI form)."""
    name, _, tail = spec.partition(":")
    params = tuple(int(p) for p in tail.split(",")) if tail else ()
    return schema(name, *params)

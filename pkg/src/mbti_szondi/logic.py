"""The logical pivot language: formulas over the 96 signed-factor atoms.

An atom pairs a factor with a signature; a profile is a model in which, for
each factor, exactly the atom carrying that factor's assigned signature is
true.  Semantics is therefore defined over profile models, not over free
Boolean valuations of 96 independent atoms: ``h+ & h-`` is unsatisfiable
here because no profile assigns two signatures to one factor.  For the
negation-free formulas produced by the translation tables both readings
agree on every entailment; the restriction only shows up in hand-written
formulas.

Conventions: the empty conjunction is TOP (tautological truth), the empty
disjunction is BOTTOM.  ``conj``/``disj`` build n-ary junctions with these
identifications applied (and singletons collapsed).

Text syntax (the formula grammar used by the CLI and interpretation
documents): atoms as ``h+``, ``hy-!``, ``p+-^!``; ``!`` for negation, ``&``
conjunction, ``|`` disjunction, parentheses, ``TRUE``/``FALSE``.
Precedence ``!`` > ``&`` > ``|``; ``->`` and ``<->`` are accepted as sugar
and expand to their classical definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .boxes import FULL_FACTOR_MASK, Box, ProfileSet
from .core import Factor, GrammarError, Profile, Signature

__all__ = [
    "Atom",
    "Not",
    "And",
    "Or",
    "Top",
    "Bottom",
    "TOP",
    "BOTTOM",
    "Formula",
    "UnsupportedFormError",
    "conj",
    "disj",
    "evaluate",
    "atoms_of",
    "factors_of",
    "is_negation_free",
    "models",
    "to_boxes",
    "entails",
    "equivalent",
    "satisfiable",
    "parse_formula",
    "render_formula",
]


@dataclass(frozen=True)
class Atom:
    factor: Factor
    signature: Signature

    def __str__(self) -> str:
        return f"{self.factor.token}{self.signature.token}"


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    items: tuple["Formula", ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class Or:
    items: tuple["Formula", ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


TOP = Top()
BOTTOM = Bottom()

Formula = Union[Atom, Not, And, Or, Top, Bottom]


class UnsupportedFormError(ValueError):
    """Raised by the negation-free box compiler when it meets a negation."""


def conj(items: Iterable[Formula]) -> Formula:
    items = tuple(items)
    if not items:
        return TOP
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(items: Iterable[Formula]) -> Formula:
    items = tuple(items)
    if not items:
        return BOTTOM
    if len(items) == 1:
        return items[0]
    return Or(items)


def evaluate(profile: Profile, formula: Formula) -> bool:
    """Model-check ``formula`` against ``profile`` (classical semantics)."""
    if isinstance(formula, Atom):
        return profile.signatures[formula.factor] is formula.signature
    if isinstance(formula, And):
        return all(evaluate(profile, item) for item in formula.items)
    if isinstance(formula, Or):
        return any(evaluate(profile, item) for item in formula.items)
    if isinstance(formula, Not):
        return not evaluate(profile, formula.operand)
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    raise TypeError(f"not a formula: {formula!r}")


def atoms_of(formula: Formula) -> frozenset[Atom]:
    if isinstance(formula, Atom):
        return frozenset((formula,))
    if isinstance(formula, (And, Or)):
        out: frozenset[Atom] = frozenset()
        for item in formula.items:
            out |= atoms_of(item)
        return out
    if isinstance(formula, Not):
        return atoms_of(formula.operand)
    return frozenset()


def factors_of(formula: Formula) -> frozenset[Factor]:
    return frozenset(atom.factor for atom in atoms_of(formula))


def is_negation_free(formula: Formula) -> bool:
    if isinstance(formula, Not):
        return False
    if isinstance(formula, (And, Or)):
        return all(is_negation_free(item) for item in formula.items)
    return True


def _compile(formula: Formula, allow_negation: bool) -> ProfileSet:
    if isinstance(formula, Atom):
        return ProfileSet((Box.for_atom(formula.factor, formula.signature),))
    if isinstance(formula, And):
        parts = []
        for item in formula.items:
            part = _compile(item, allow_negation)
            if not part:
                return ProfileSet.empty()
            parts.append(part)
        # Smallest-first keeps every intermediate product of box lists small.
        parts.sort(key=lambda part: len(part.boxes))
        result = ProfileSet.full()
        for part in parts:
            result = result.intersect(part)
            if not result:
                break
        return result
    if isinstance(formula, Or):
        # Atom disjuncts on one factor denote a single multi-signature box;
        # folding them first keeps family disjunctions at one box per factor.
        factor_masks: dict[Factor, int] = {}
        parts = []
        for item in formula.items:
            if isinstance(item, Atom):
                mask = factor_masks.get(item.factor, 0)
                factor_masks[item.factor] = mask | (1 << int(item.signature))
            else:
                parts.append(_compile(item, allow_negation))
        for factor, mask in factor_masks.items():
            masks = [FULL_FACTOR_MASK] * 8
            masks[factor] = mask
            parts.append(ProfileSet((Box(tuple(masks)),)))
        parts.sort(key=lambda part: len(part.boxes))
        result = ProfileSet.empty()
        for part in parts:
            result = result.union(part)
        return result
    if isinstance(formula, Not):
        if not allow_negation:
            raise UnsupportedFormError(
                "formula contains negation; use models() (exact, via box "
                "complement) or the enumeration oracle"
            )
        return _compile(formula.operand, allow_negation).complement()
    if isinstance(formula, Top):
        return ProfileSet.full()
    if isinstance(formula, Bottom):
        return ProfileSet.empty()
    raise TypeError(f"not a formula: {formula!r}")


def models(formula: Formula) -> ProfileSet:
    """The satisfying set { p | evaluate(p, formula) } as disjoint boxes."""
    return _compile(formula, allow_negation=True)


def to_boxes(formula: Formula) -> ProfileSet:
    """Box normal form of a negation-free formula (errors on negation)."""
    return _compile(formula, allow_negation=False)


def entails(premise: Formula, conclusion: Formula) -> bool:
    """Logical consequence over profile models."""
    return models(premise).issubset(models(conclusion))


def equivalent(a: Formula, b: Formula) -> bool:
    return models(a) == models(b)


def satisfiable(formula: Formula) -> bool:
    return bool(models(formula))


# --- text syntax ----------------------------------------------------------

_FACTOR_STARTS = ("hy", "h", "s", "e", "k", "p", "d", "m")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, object, int]] = []
        self._run()

    def _error(self, message: str) -> GrammarError:
        return GrammarError(message, column=self.pos)

    def _run(self):
        text = self.text
        from .core import _SIGNATURE_BY_TOKEN, _SIGNATURE_TOKENS_BY_LENGTH

        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self.pos += 1
                continue
            if ch == "(":
                self.tokens.append(("LPAREN", None, self.pos))
                self.pos += 1
                continue
            if ch == ")":
                self.tokens.append(("RPAREN", None, self.pos))
                self.pos += 1
                continue
            if ch == "!":
                self.tokens.append(("NOT", None, self.pos))
                self.pos += 1
                continue
            if ch == "&":
                self.tokens.append(("AND", None, self.pos))
                self.pos += 1
                continue
            if ch == "|":
                self.tokens.append(("OR", None, self.pos))
                self.pos += 1
                continue
            if text.startswith("<->", self.pos):
                self.tokens.append(("IFF", None, self.pos))
                self.pos += 3
                continue
            if text.startswith("->", self.pos):
                self.tokens.append(("IMPLIES", None, self.pos))
                self.pos += 2
                continue
            if text.startswith("TRUE", self.pos):
                self.tokens.append(("TRUE", None, self.pos))
                self.pos += 4
                continue
            if text.startswith("FALSE", self.pos):
                self.tokens.append(("FALSE", None, self.pos))
                self.pos += 5
                continue
            for ftok in _FACTOR_STARTS:
                if text.startswith(ftok, self.pos):
                    start = self.pos
                    self.pos += len(ftok)
                    for stok in _SIGNATURE_TOKENS_BY_LENGTH:
                        if text.startswith(stok, self.pos):
                            self.pos += len(stok)
                            factor = next(f for f in Factor if f.token == ftok)
                            atom = Atom(factor, _SIGNATURE_BY_TOKEN[stok])
                            self.tokens.append(("ATOM", atom, start))
                            break
                    else:
                        raise self._error(
                            f"factor {ftok!r} must be followed by a signature token"
                        )
                    break
            else:
                raise self._error(f"unexpected character {ch!r}")


class _Parser:
    """Recursive descent; precedence ! > & > | > -> > <->, arrows right-assoc."""

    def __init__(self, text: str):
        self.tokens = _Lexer(text).tokens
        self.index = 0

    def _peek(self) -> str | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def _next(self) -> tuple[str, object, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str) -> GrammarError:
        if self.index < len(self.tokens):
            return GrammarError(message, column=self.tokens[self.index][2])
        return GrammarError(message + " (at end of input)")

    def parse(self) -> Formula:
        formula = self._iff()
        if self.index != len(self.tokens):
            raise self._error("trailing input after formula")
        return formula

    def _iff(self) -> Formula:
        left = self._implies()
        if self._peek() == "IFF":
            self._next()
            right = self._iff()
            return And((Or((Not(left), right)), Or((Not(right), left))))
        return left

    def _implies(self) -> Formula:
        left = self._or()
        if self._peek() == "IMPLIES":
            self._next()
            right = self._implies()
            return Or((Not(left), right))
        return left

    def _or(self) -> Formula:
        items = [self._and()]
        while self._peek() == "OR":
            self._next()
            items.append(self._and())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def _and(self) -> Formula:
        items = [self._unary()]
        while self._peek() == "AND":
            self._next()
            items.append(self._unary())
        return items[0] if len(items) == 1 else And(tuple(items))

    def _unary(self) -> Formula:
        kind = self._peek()
        if kind is None:
            raise self._error("expected a formula")
        if kind == "NOT":
            self._next()
            return Not(self._unary())
        if kind == "LPAREN":
            self._next()
            inner = self._iff()
            if self._peek() != "RPAREN":
                raise self._error("expected ')'")
            self._next()
            return inner
        if kind == "ATOM":
            return self._next()[1]  # type: ignore[return-value]
        if kind == "TRUE":
            self._next()
            return TOP
        if kind == "FALSE":
            self._next()
            return BOTTOM
        raise self._error(f"unexpected token {kind}")


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()


def render_formula(formula: Formula) -> str:
    """Canonical rendering; ``parse_formula`` inverts it structurally.

    Junction children of equal-or-looser precedence get parentheses so the
    tree shape survives the round trip.
    """
    if isinstance(formula, Atom):
        return str(formula)
    if isinstance(formula, Top):
        return "TRUE"
    if isinstance(formula, Bottom):
        return "FALSE"
    if isinstance(formula, Not):
        inner = render_formula(formula.operand)
        if isinstance(formula.operand, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"
    if isinstance(formula, And):
        if not formula.items:
            return "TRUE"
        parts = [
            f"({render_formula(item)})"
            if isinstance(item, (And, Or))
            else render_formula(item)
            for item in formula.items
        ]
        return " & ".join(parts) if len(parts) > 1 else parts[0]
    if isinstance(formula, Or):
        if not formula.items:
            return "FALSE"
        parts = [
            f"({render_formula(item)})" if isinstance(item, Or) else render_formula(item)
            for item in formula.items
        ]
        return " | ".join(parts) if len(parts) > 1 else parts[0]
    raise TypeError(f"not a formula: {formula!r}")

"""Translation of type indicators into the pivot language, and back-ends for
user-supplied alternatives.

The built-in translation interprets extroversion as a positive tendency of
the morality factor hy and introversion as a negative one; the remaining six
faculties are generated from four per-factor templates (the *generating
pattern*): a non-dominant positive factor f yields ``f+ | f+- | f+-_!``, a
non-dominant negative one ``f- | f+- | f+-^!``, and their dominant
counterparts use the quantum tiers ``f+! | f+!! | f+!!! | f+-^!`` and
``f-! | f-!! | f-!!! | f+-_!``.  Feeling conjoins personal warmth (h+) with
empathy (p-); thinking is having-less (k-); the perceptive faculties share
having-more (k+), intuition adds being-more (p+), and sensing adds the
disjunction of the five sense factors (touching h+, hearing e-, seeing hy-,
smelling d+, tasting m+).

Which of the perception/judgment conjuncts is taken at the dominant tier is
decided by the attitude and the J/P flag: extroverts show their dominant
faculty for dealing with the outer world, introverts do not.  So I+J and
E+P mark perception dominant, I+P and E+J mark judgment dominant.

A user may supply their own translation as a flat ``KEY = formula`` text
document: either the ten basic entries (``E I F F! T T! N N! S S!``, the
sixteen rows are then synthesized via the dominance rule) or all sixteen
rows explicitly.  Set translation is always the conjunction over members,
which is what makes any loaded interpretation induce a Galois connection.
"""

from __future__ import annotations

import enum
import hashlib
from functools import lru_cache
from typing import Iterable

from .core import Factor, GrammarError, Profile, Signature, TypeIndicator
from .logic import (
    And,
    Atom,
    Formula,
    Or,
    conj,
    disj,
    equivalent,
    is_negation_free,
    models,
    parse_formula,
    render_formula,
    satisfiable,
)

__all__ = [
    "Tendency",
    "pattern",
    "Interpretation",
    "InterpretationError",
    "UnsatisfiableRowError",
    "ConsistencyError",
    "BASIC_KEYS",
    "builtin_interpretation",
    "synthesize_rows",
    "dominance_consistent",
    "perception_dominant",
    "profile_formula",
    "profiles_formula",
    "load_interpretation",
]

BASIC_KEYS = ("E", "I", "F", "F!", "T", "T!", "N", "N!", "S", "S!")


class InterpretationError(ValueError):
    """An interpretation document that parses but fails validation."""


class UnsatisfiableRowError(InterpretationError):
    def __init__(self, indicator: TypeIndicator):
        self.indicator = indicator
        super().__init__(f"translation of {indicator.name} is unsatisfiable")


class ConsistencyError(InterpretationError):
    def __init__(self, key_a: str, key_b: str):
        self.pair = (key_a, key_b)
        super().__init__(
            f"consistency violation: translations of {key_a} and {key_b} "
            f"exclude each other (their conjunction is unsatisfiable)"
        )


class Tendency(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


def pattern(factor: Factor, tendency: Tendency, dominant: bool) -> Formula:
    """The generating-pattern disjunction for one factor."""
    positive = tendency is Tendency.POSITIVE
    if not dominant:
        sigs = (
            (Signature.POS, Signature.AMBI, Signature.AMBI_LOW)
            if positive
            else (Signature.NEG, Signature.AMBI, Signature.AMBI_HIGH)
        )
    else:
        sigs = (
            (Signature.POS1, Signature.POS2, Signature.POS3, Signature.AMBI_HIGH)
            if positive
            else (Signature.NEG1, Signature.NEG2, Signature.NEG3, Signature.AMBI_LOW)
        )
    return Or(tuple(Atom(factor, s) for s in sigs))


# The five sense factors with the tendency their sense carries.
_SENSES = (
    (Factor.H, Tendency.POSITIVE),   # touching
    (Factor.E, Tendency.NEGATIVE),   # hearing
    (Factor.HY, Tendency.NEGATIVE),  # seeing
    (Factor.D, Tendency.POSITIVE),   # smelling
    (Factor.M, Tendency.POSITIVE),   # tasting
)


def _sense_disjunction(dominant: bool) -> Formula:
    """Flat disjunction over the sense factors, tier by tier.

    Semantically this equals the union of the per-factor generating
    patterns; the atom order follows the signature tiers (head signatures,
    then ambivalents / rising quanta) so the canonical rendering groups the
    way the patterns do.
    """
    atoms: list[Atom] = []
    if not dominant:
        tiers = [
            lambda pos: Signature.POS if pos else Signature.NEG,
            lambda pos: Signature.AMBI,
            lambda pos: Signature.AMBI_LOW if pos else Signature.AMBI_HIGH,
        ]
    else:
        tiers = [
            lambda pos: Signature.POS1 if pos else Signature.NEG1,
            lambda pos: Signature.POS2 if pos else Signature.NEG2,
            lambda pos: Signature.POS3 if pos else Signature.NEG3,
            lambda pos: Signature.AMBI_HIGH if pos else Signature.AMBI_LOW,
        ]
    for tier in tiers:
        for factor, tendency in _SENSES:
            atoms.append(Atom(factor, tier(tendency is Tendency.POSITIVE)))
    return Or(tuple(atoms))


def _builtin_basic() -> dict[str, Formula]:
    hy = Factor.HY
    extro = Or(
        (
            Atom(hy, Signature.POS),
            Atom(hy, Signature.POS1),
            Atom(hy, Signature.POS2),
            Atom(hy, Signature.POS3),
            Atom(hy, Signature.AMBI_HIGH),
        )
    )
    intro = Or(
        (
            Atom(hy, Signature.NEG),
            Atom(hy, Signature.NEG1),
            Atom(hy, Signature.NEG2),
            Atom(hy, Signature.NEG3),
            Atom(hy, Signature.AMBI_LOW),
        )
    )
    pos, neg = Tendency.POSITIVE, Tendency.NEGATIVE
    return {
        "E": extro,
        "I": intro,
        "F": And((pattern(Factor.H, pos, False), pattern(Factor.P, neg, False))),
        "F!": And((pattern(Factor.H, pos, True), pattern(Factor.P, neg, True))),
        "T": pattern(Factor.K, neg, False),
        "T!": pattern(Factor.K, neg, True),
        "N": And((pattern(Factor.K, pos, False), pattern(Factor.P, pos, False))),
        "N!": And((pattern(Factor.K, pos, True), pattern(Factor.P, pos, True))),
        "S": And((pattern(Factor.K, pos, False), _sense_disjunction(False))),
        "S!": And((pattern(Factor.K, pos, True), _sense_disjunction(True))),
    }


def perception_dominant(indicator: TypeIndicator) -> bool:
    """Whether the perception conjunct is the dominant-tier one.

    Extroverts show their dominant faculty for dealing with the outer world
    (named by the J/P flag); introverts show the other one.
    """
    return (indicator.attitude, indicator.flag) in {("I", "J"), ("E", "P")}


def synthesize_rows(basic: dict[str, Formula]) -> dict[TypeIndicator, Formula]:
    """Build the sixteen indicator rows from the ten basic translations."""
    rows = {}
    for ind in TypeIndicator:
        per_dom = perception_dominant(ind)
        per_key = ind.perception + ("!" if per_dom else "")
        jud_key = ind.judgment + ("" if per_dom else "!")
        rows[ind] = And((basic[ind.attitude], basic[per_key], basic[jud_key]))
    return rows


def _builtin_rows(b: dict[str, Formula]) -> dict[TypeIndicator, Formula]:
    # Transcribed row block, kept literal on purpose; a test pins it equal to
    # synthesize_rows(b) so a slip in either place is caught.
    T = TypeIndicator
    return {
        T.ISTJ: And((b["I"], b["S!"], b["T"])),
        T.ISFJ: And((b["I"], b["S!"], b["F"])),
        T.INFJ: And((b["I"], b["N!"], b["F"])),
        T.INTJ: And((b["I"], b["N!"], b["T"])),
        T.ISTP: And((b["I"], b["S"], b["T!"])),
        T.ISFP: And((b["I"], b["S"], b["F!"])),
        T.INFP: And((b["I"], b["N"], b["F!"])),
        T.INTP: And((b["I"], b["N"], b["T!"])),
        T.ESTP: And((b["E"], b["S!"], b["T"])),
        T.ESFP: And((b["E"], b["S!"], b["F"])),
        T.ENFP: And((b["E"], b["N!"], b["F"])),
        T.ENTP: And((b["E"], b["N!"], b["T"])),
        T.ESTJ: And((b["E"], b["S"], b["T!"])),
        T.ESFJ: And((b["E"], b["S"], b["F!"])),
        T.ENFJ: And((b["E"], b["N"], b["F!"])),
        T.ENTJ: And((b["E"], b["N"], b["T!"])),
    }


class Interpretation:
    """A translation of indicators into the pivot language.

    Immutable after construction.  ``rows`` maps every indicator to its
    formula; ``basic`` holds the ten basic translations when they are known
    (the built-in one, and documents that supply them).  Set translation
    (:meth:`lift`) is the conjunction over members, empty set to TRUE.
    """

    def __init__(
        self,
        rows: dict[TypeIndicator, Formula],
        basic: dict[str, Formula] | None = None,
        warnings: Iterable[str] = (),
    ):
        missing = [i.name for i in TypeIndicator if i not in rows]
        if missing:
            raise ValueError(f"interpretation missing rows: {', '.join(missing)}")
        self.rows = dict(rows)
        self.basic = dict(basic) if basic is not None else None
        self.warnings = tuple(warnings)
        self._row_sets: dict[TypeIndicator, object] = {}

    def row(self, indicator: TypeIndicator) -> Formula:
        return self.rows[indicator]

    def row_set(self, indicator: TypeIndicator):
        """Model set of one row (memoized)."""
        cached = self._row_sets.get(indicator)
        if cached is None:
            cached = models(self.rows[indicator])
            self._row_sets[indicator] = cached
        return cached

    def lift(self, indicators: Iterable[TypeIndicator]) -> Formula:
        """Translation of an indicator set: conjunction over members."""
        return conj(self.rows[i] for i in sorted(set(indicators)))

    @property
    def negation_free(self) -> bool:
        return all(is_negation_free(f) for f in self.rows.values())

    def document(self) -> str:
        """The sixteen rows as a loadable interpretation document."""
        lines = [f"{i.name} = {render_formula(self.rows[i])}" for i in TypeIndicator]
        return "\n".join(lines) + "\n"

    def fingerprint(self) -> str:
        """Stable hash of the canonical serialization of the sixteen rows."""
        return hashlib.sha256(self.document().encode("utf-8")).hexdigest()


@lru_cache(maxsize=1)
def builtin_interpretation() -> Interpretation:
    basic = _builtin_basic()
    return Interpretation(_builtin_rows(basic), basic)


def dominance_consistent(interp: Interpretation) -> bool:
    """Whether every row equals (semantically) the rule-synthesized row.

    Requires the basic translations; raises ValueError without them.
    """
    if interp.basic is None:
        raise ValueError("dominance consistency needs the ten basic translations")
    synthesized = synthesize_rows(interp.basic)
    return all(equivalent(interp.rows[i], synthesized[i]) for i in TypeIndicator)


def profile_formula(profile: Profile) -> Formula:
    """Conjunction of the profile's eight signed-factor atoms."""
    return And(tuple(Atom(f, profile.signatures[f]) for f in Factor))


def profiles_formula(profiles: Iterable[Profile]) -> Formula:
    """Disjunction over a profile set's members; empty set to FALSE."""
    unique = sorted(set(profiles), key=lambda p: p.index())
    return disj(profile_formula(p) for p in unique)


_ROW_KEYS = tuple(i.name for i in TypeIndicator)


def _parse_document(text: str) -> dict[str, tuple[Formula, int]]:
    entries: dict[str, tuple[Formula, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise GrammarError("expected 'KEY = formula'", line=lineno)
        key, _, body = line.partition("=")
        key = key.strip().upper()
        if key not in BASIC_KEYS and key not in _ROW_KEYS:
            raise GrammarError(f"unknown interpretation key {key!r}", line=lineno)
        if key in entries:
            raise GrammarError(f"duplicate entry for {key!r}", line=lineno)
        try:
            formula = parse_formula(body.strip())
        except GrammarError as exc:
            raise GrammarError(f"in entry {key!r}: {exc}", line=lineno) from exc
        entries[key] = (formula, lineno)
    return entries


def _check_fact1(basic: dict[str, Formula]) -> None:
    variants = ("F", "F!", "T", "T!", "N", "N!", "S", "S!")
    for b in ("E", "I"):
        for key in variants:
            if not satisfiable(And((basic[b], basic[key]))):
                raise ConsistencyError(b, key)
    for b in ("F", "T"):
        for b_key, other in ((b, "N!"), (b, "S!"), (b + "!", "N"), (b + "!", "S")):
            if not satisfiable(And((basic[b_key], basic[other]))):
                raise ConsistencyError(b_key, other)


def load_interpretation(text: str) -> Interpretation:
    """Parse and validate an interpretation document.

    The document supplies either the ten basic translations (rows are then
    synthesized via the dominance rule) or all sixteen rows explicitly.
    Validation reports the most specific cause first: a basic entry that is
    itself unsatisfiable, then a pair of basic entries whose conjunction is
    unsatisfiable, then an unsatisfiable row (in basic mode that means a
    three-way conflict).  An overlap between the E and I translations is
    legal but reported as a warning.
    """
    entries = _parse_document(text)
    basic_given = [k for k in entries if k in BASIC_KEYS]
    rows_given = [k for k in entries if k in _ROW_KEYS]
    if basic_given and rows_given:
        raise GrammarError(
            "document mixes basic entries with explicit rows; supply either "
            "the 10 basic formulas or all 16 rows"
        )
    warnings: list[str] = []
    if basic_given:
        missing = [k for k in BASIC_KEYS if k not in entries]
        if missing:
            raise GrammarError(f"missing basic entries: {', '.join(missing)}")
        basic = {k: entries[k][0] for k in BASIC_KEYS}
        for key in BASIC_KEYS:
            if not satisfiable(basic[key]):
                raise InterpretationError(
                    f"basic translation of {key!r} is unsatisfiable"
                )
        _check_fact1(basic)
        rows = synthesize_rows(basic)
    else:
        missing = [k for k in _ROW_KEYS if k not in entries]
        if missing:
            raise GrammarError(f"missing indicator rows: {', '.join(missing)}")
        basic = None
        rows = {TypeIndicator[k]: entries[k][0] for k in _ROW_KEYS}

    for indicator in TypeIndicator:
        if not satisfiable(rows[indicator]):
            raise UnsatisfiableRowError(indicator)
    if basic is not None:
        if satisfiable(And((basic["E"], basic["I"]))):
            warnings.append(
                "translations of E and I overlap (their conjunction is "
                "satisfiable); the built-in translation keeps them exclusive"
            )
    return Interpretation(rows, basic, warnings)

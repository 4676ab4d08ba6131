"""Finite carriers of the two personality spaces and their text grammars.

The Szondi side is an 8-dimensional space: each of the eight drive factors
(h, s, e, hy, k, p, d, m) carries one of twelve reaction signatures, ranging
from graded rejection (-!!! .. -) through neutrality (0) and graded approval
(+ .. +!!!) to the three ambivalent readings (+-_!, +-, +-^!).  A full
assignment is a :class:`Profile`; there are 12**8 = 429,981,696 of them, and
they biject with ``range(12**8)`` through a base-12 positional encoding.

The Myers-Briggs side is the sixteen four-letter type indicators, each the
product of attitude (E/I), perception (S/N), judgment (T/F) and the J/P
dominance flag.

Everything here is an immutable value; instances can be shared freely across
threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "Signature",
    "Factor",
    "Vector",
    "TypeIndicator",
    "Ordering",
    "Profile",
    "GrammarError",
    "NORM_PROFILE",
    "PROFILE_COUNT",
    "ALL_INDICATORS",
    "compare_signatures",
    "parse_profile",
    "parse_indicator",
    "parse_indicator_set",
    "render_indicator_set",
    "indicator_set_mask",
    "indicator_set_from_mask",
    "parse_signature_subset",
    "render_signature_subset",
]


class GrammarError(ValueError):
    """Text input that does not match one of the declared grammars."""

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)


class Signature(enum.IntEnum):
    """The twelve reaction signatures, in canonical ordinal order.

    The integer value is the canonical ordinal used by the base-12 profile
    encoding.  ``AMBI_LOW`` is ambivalence with rejection bias (+-_!),
    ``AMBI_HIGH`` ambivalence with approval bias (+-^!).
    """

    NEG3 = 0       # -!!!
    NEG2 = 1       # -!!
    NEG1 = 2       # -!
    NEG = 3        # -
    ZERO = 4       # 0
    POS = 5        # +
    POS1 = 6       # +!
    POS2 = 7       # +!!
    POS3 = 8       # +!!!
    AMBI_LOW = 9   # +-_!
    AMBI = 10      # +-
    AMBI_HIGH = 11 # +-^!

    @property
    def token(self) -> str:
        return _SIGNATURE_TOKENS[self]

    @property
    def dominant(self) -> bool:
        """True exactly for the eight signatures carrying a quantum."""
        return self not in _UNDOMINATED

    def __str__(self) -> str:
        return self.token


_SIGNATURE_TOKENS = {
    Signature.NEG3: "-!!!",
    Signature.NEG2: "-!!",
    Signature.NEG1: "-!",
    Signature.NEG: "-",
    Signature.ZERO: "0",
    Signature.POS: "+",
    Signature.POS1: "+!",
    Signature.POS2: "+!!",
    Signature.POS3: "+!!!",
    Signature.AMBI_LOW: "+-_!",
    Signature.AMBI: "+-",
    Signature.AMBI_HIGH: "+-^!",
}

# Unicode +- is accepted on input as an alias for the ASCII spelling.
_SIGNATURE_ALIASES = {
    "±_!": Signature.AMBI_LOW,
    "±": Signature.AMBI,
    "±^!": Signature.AMBI_HIGH,
}

_SIGNATURE_BY_TOKEN = {s.token: s for s in Signature}
_SIGNATURE_BY_TOKEN.update(_SIGNATURE_ALIASES)

# Longest first, so greedy lexing never cuts "+!!" into "+" "!" "!".
_SIGNATURE_TOKENS_BY_LENGTH = sorted(_SIGNATURE_BY_TOKEN, key=len, reverse=True)

_UNDOMINATED = frozenset({Signature.NEG, Signature.ZERO, Signature.POS, Signature.AMBI})


class Ordering(enum.Enum):
    LT = "LT"
    GT = "GT"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


def compare_signatures(a: Signature, b: Signature) -> Ordering:
    """Position of ``a`` relative to ``b`` in the signature partial order.

    The order consists of two chains: the nine-element chain
    -!!! < -!! < -! < - < 0 < + < +! < +!! < +!!! and the separate
    three-element chain +-_! < +- < +-^!.  Members of different chains are
    incomparable.  The order is exposed for completeness; the translation
    machinery does not consume it.
    """
    if a is b:
        return Ordering.EQ
    a_ambi = a >= Signature.AMBI_LOW
    b_ambi = b >= Signature.AMBI_LOW
    if a_ambi != b_ambi:
        return Ordering.INCOMPARABLE
    return Ordering.LT if a < b else Ordering.GT


class Vector(enum.Enum):
    """Szondi's four drive vectors."""

    S = "S (Id)"
    P = "P (Super-Ego)"
    SCH = "Sch (Ego)"
    C = "C (Id)"


class Factor(enum.IntEnum):
    """The eight drive factors, in canonical order (h most significant)."""

    H = 0
    S = 1
    E = 2
    HY = 3
    K = 4
    P = 5
    D = 6
    M = 7

    @property
    def token(self) -> str:
        return _FACTOR_TOKENS[self]

    @property
    def vector(self) -> Vector:
        return _FACTOR_VECTORS[self]

    @property
    def label(self) -> str:
        return _FACTOR_LABELS[self][0]

    @property
    def positive_meaning(self) -> str:
        return _FACTOR_LABELS[self][1]

    @property
    def negative_meaning(self) -> str:
        return _FACTOR_LABELS[self][2]

    def __str__(self) -> str:
        return self.token


_FACTOR_TOKENS = {
    Factor.H: "h",
    Factor.S: "s",
    Factor.E: "e",
    Factor.HY: "hy",
    Factor.K: "k",
    Factor.P: "p",
    Factor.D: "d",
    Factor.M: "m",
}

_FACTOR_VECTORS = {
    Factor.H: Vector.S,
    Factor.S: Vector.S,
    Factor.E: Vector.P,
    Factor.HY: Vector.P,
    Factor.K: Vector.SCH,
    Factor.P: Vector.SCH,
    Factor.D: Vector.C,
    Factor.M: Vector.C,
}

_FACTOR_LABELS = {
    Factor.H: ("love", "physical love", "platonic love"),
    Factor.S: ("attitude", "(proactive) activity", "(receptive) passivity"),
    Factor.E: ("ethics", "ethical behaviour", "unethical behaviour"),
    Factor.HY: ("morality", "immoral behaviour", "moral behaviour"),
    Factor.K: ("having", "having more", "having less"),
    Factor.P: ("being", "being more", "being less"),
    Factor.D: ("relations", "unfaithfulness", "faithfulness"),
    Factor.M: ("bindings", "dependence", "independence"),
}

_FACTOR_BY_TOKEN = {f.token: f for f in Factor}

PROFILE_COUNT = 12 ** 8


@dataclass(frozen=True)
class Profile:
    """A total assignment of one signature to each of the eight factors.

    ``signatures`` is ordered by canonical factor order (h, s, e, hy, k, p,
    d, m).  Profiles biject with ``range(12**8)``: the i-th factor's
    signature ordinal is the i-th base-12 digit, h most significant.
    """

    signatures: tuple[Signature, ...]

    def __post_init__(self):
        # Coerce so enum identity holds even when built from raw ordinals.
        sigs = tuple(Signature(s) for s in self.signatures)
        if len(sigs) != 8:
            raise ValueError(f"a profile assigns exactly 8 factors, got {len(sigs)}")
        object.__setattr__(self, "signatures", sigs)

    @classmethod
    def from_index(cls, index: int) -> "Profile":
        if not 0 <= index < PROFILE_COUNT:
            raise ValueError(f"profile index {index} outside [0, 12**8)")
        digits = []
        for _ in range(8):
            index, digit = divmod(index, 12)
            digits.append(Signature(digit))
        return cls(tuple(reversed(digits)))

    @classmethod
    def from_mapping(cls, assignment: dict[Factor, Signature]) -> "Profile":
        if len(assignment) != 8:
            missing = [f.token for f in Factor if f not in assignment]
            raise ValueError(f"assignment missing factors: {', '.join(missing)}")
        return cls(tuple(assignment[f] for f in Factor))

    def index(self) -> int:
        value = 0
        for sig in self.signatures:
            value = value * 12 + int(sig)
        return value

    def signature(self, factor: Factor) -> Signature:
        return self.signatures[factor]

    def __getitem__(self, factor: Factor) -> Signature:
        return self.signatures[factor]

    def dominant_factors(self) -> tuple[Factor, ...]:
        return tuple(f for f in Factor if self.signatures[f].dominant)

    def __str__(self) -> str:
        return " ".join(f"{f.token}{s.token}" for f, s in zip(Factor, self.signatures))


NORM_PROFILE = Profile(
    (
        Signature.POS,  # h
        Signature.POS,  # s
        Signature.NEG,  # e
        Signature.NEG,  # hy
        Signature.NEG,  # k
        Signature.NEG,  # p
        Signature.POS,  # d
        Signature.POS,  # m
    )
)


def _split_factor_signature(token: str) -> tuple[Factor, Signature]:
    # Factor tokens first, longest match ("hy" before "h").
    for ftok in ("hy", "h", "s", "e", "k", "p", "d", "m"):
        if token.startswith(ftok):
            sig_text = token[len(ftok):]
            sig = _SIGNATURE_BY_TOKEN.get(sig_text)
            if sig is None:
                raise GrammarError(f"unknown signature {sig_text!r} in token {token!r}")
            return _FACTOR_BY_TOKEN[ftok], sig
    raise GrammarError(f"token {token!r} does not start with a factor name")


def parse_profile(text: str) -> Profile:
    """Parse the profile grammar: eight whitespace-separated factor-signature
    tokens, each factor exactly once, any factor order.
    """
    assignment: dict[Factor, Signature] = {}
    tokens = text.split()
    if not tokens:
        raise GrammarError("empty profile")
    for token in tokens:
        factor, sig = _split_factor_signature(token)
        if factor in assignment:
            raise GrammarError(f"factor {factor.token!r} assigned twice")
        assignment[factor] = sig
    missing = [f.token for f in Factor if f not in assignment]
    if missing:
        raise GrammarError(f"profile missing factors: {', '.join(missing)}")
    return Profile.from_mapping(assignment)


class TypeIndicator(enum.IntEnum):
    """The sixteen Myers-Briggs type indicators, in canonical listing order."""

    ISTJ = 0
    ISFJ = 1
    INFJ = 2
    INTJ = 3
    ISTP = 4
    ISFP = 5
    INFP = 6
    INTP = 7
    ESTP = 8
    ESFP = 9
    ENFP = 10
    ENTP = 11
    ESTJ = 12
    ESFJ = 13
    ENFJ = 14
    ENTJ = 15

    @property
    def attitude(self) -> str:
        return self.name[0]

    @property
    def perception(self) -> str:
        return self.name[1]

    @property
    def judgment(self) -> str:
        return self.name[2]

    @property
    def flag(self) -> str:
        return self.name[3]

    @classmethod
    def from_letters(cls, attitude: str, perception: str, judgment: str, flag: str) -> "TypeIndicator":
        return cls[attitude + perception + judgment + flag]

    def __str__(self) -> str:
        return self.name


ALL_INDICATORS = frozenset(TypeIndicator)


def parse_indicator(text: str) -> TypeIndicator:
    name = text.strip().upper()
    try:
        return TypeIndicator[name]
    except KeyError:
        raise GrammarError(f"unknown type indicator {text.strip()!r}") from None


def parse_indicator_set(text: str) -> frozenset[TypeIndicator]:
    """Parse a comma-separated indicator list; ``{}`` denotes the empty set."""
    stripped = text.strip()
    if stripped.startswith("{") and stripped.endswith("}"):
        stripped = stripped[1:-1].strip()
    if not stripped:
        return frozenset()
    return frozenset(parse_indicator(part) for part in stripped.split(","))


def render_indicator_set(indicators: frozenset[TypeIndicator]) -> str:
    if not indicators:
        return "{}"
    return ",".join(i.name for i in sorted(indicators))


def indicator_set_mask(indicators: frozenset[TypeIndicator]) -> int:
    mask = 0
    for i in indicators:
        mask |= 1 << int(i)
    return mask


def indicator_set_from_mask(mask: int) -> frozenset[TypeIndicator]:
    if not 0 <= mask < (1 << 16):
        raise ValueError(f"indicator-set mask {mask} outside [0, 2**16)")
    return frozenset(i for i in TypeIndicator if mask >> int(i) & 1)


def render_signature_subset(mask: int) -> str:
    """Render a 12-bit signature subset as concatenated signature tokens in
    canonical ordinal order (the ProfileSet serialization alphabet).
    """
    if not 0 < mask < (1 << 12):
        raise ValueError(f"signature subset mask {mask} must be nonzero and 12-bit")
    return "".join(s.token for s in Signature if mask >> int(s) & 1)


def parse_signature_subset(text: str) -> int:
    """Inverse of :func:`render_signature_subset` (greedy longest-token scan)."""
    mask = 0
    pos = 0
    last = -1
    while pos < len(text):
        for token in _SIGNATURE_TOKENS_BY_LENGTH:
            if text.startswith(token, pos):
                sig = _SIGNATURE_BY_TOKEN[token]
                if int(sig) <= last:
                    raise GrammarError(
                        f"signature subset {text!r} not in canonical ordinal order", column=pos
                    )
                last = int(sig)
                mask |= 1 << int(sig)
                pos += len(token)
                break
        else:
            raise GrammarError(f"unparseable signature subset {text!r}", column=pos)
    if mask == 0:
        raise GrammarError("empty signature subset")
    return mask

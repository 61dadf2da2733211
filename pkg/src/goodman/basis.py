"""Bracket notation for predicate bases, e.g. ``[2-pl.irref.; two 1-pl.]``.

Grammar (keywords case-insensitive, whitespace anywhere between tokens)::

    basis := "[" [ item { ";" item } ] "]"
    item  := [ count ] places "-" "pl" [ "." ] [ "irref" [ "." ] ]
    count := decimal integer | "one" .. "ten"

A basis is valued at the sum of its predicates' maximum primary complexity:
``2p - 1`` for a thoroughly irreflexive p-place predicate and ``v_total(p)``
for an unrestricted one.
"""

import re
from collections import defaultdict
from dataclasses import dataclass

from .complexity import v_total

__all__ = [
    "BasisParseError",
    "PredicateSpec",
    "BasisSpec",
    "parse_basis",
    "format_basis",
    "basis_value",
    "unit_value",
    "COUNT_WORDS",
]

COUNT_WORDS = {
    "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10,
}


@dataclass(frozen=True)
class PredicateSpec:
    places: int
    irreflexive: bool = False
    multiplicity: int = 1
    synthetic_unit: bool = False

    def __post_init__(self):
        if self.places < 1:
            raise ValueError(f"places must be >= 1, got {self.places}")
        if self.multiplicity < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if self.synthetic_unit and self.places != 1:
            raise ValueError("a synthetic unit must be a 1-place predicate")

    @property
    def key(self):
        return (self.places, self.irreflexive, self.synthetic_unit)


def _sort_key(key):
    places, irreflexive, synthetic = key
    return (-places, not irreflexive, synthetic)


@dataclass(frozen=True)
class BasisSpec:
    """Multiset of predicates, one entry per (places, irreflexive, synthetic_unit)."""

    predicates: tuple = ()

    @classmethod
    def of(cls, predicates):
        counts = defaultdict(int)
        for p in predicates:
            counts[p.key] += p.multiplicity
        return cls(
            tuple(
                PredicateSpec(k[0], k[1], counts[k], k[2])
                for k in sorted(counts, key=_sort_key)
            )
        )

    def __add__(self, other):
        return BasisSpec.of(self.predicates + other.predicates)

    def __len__(self):
        return len(self.predicates)

    def to_dict(self):
        return [
            {
                "places": p.places,
                "irreflexive": p.irreflexive,
                "multiplicity": str(p.multiplicity),
                "synthetic_unit": p.synthetic_unit,
            }
            for p in self.predicates
        ]


# --- parsing ---------------------------------------------------------------


class BasisParseError(ValueError):
    def __init__(self, text, position, expected, found):
        self.text = text
        self.position = position
        self.expected = tuple(sorted(expected))
        self.found = found
        super().__init__(
            f"column {position + 1}: expected {' or '.join(self.expected)}, found {found}"
        )

    def diagnostic(self):
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<word>[A-Za-z]+)|(?P<sym>[\[\];.\-−–]))"
)
_HYPHENS = {"-", "−", "–"}


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            at = pos + len(rest) - len(stripped)
            raise BasisParseError(text, at, {"'['", "']'", "';'", "'-'", "'.'", "number", "word"},
                                  repr(stripped[0]))
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), m.start("num")))
        elif m.group("word") is not None:
            tokens.append(("word", m.group("word").lower(), m.start("word")))
        else:
            sym = m.group("sym")
            tokens.append(("sym", "-" if sym in _HYPHENS else sym, m.start("sym")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def fail(self, expected, tok=None):
        kind, value, pos = tok or self.tok
        found = "end of input" if kind == "end" else repr(str(value))
        raise BasisParseError(self.text, pos, expected, found)

    def at_sym(self, s):
        return self.tok[0] == "sym" and self.tok[1] == s

    def at_word(self, w):
        return self.tok[0] == "word" and self.tok[1] == w

    def expect_sym(self, s):
        if not self.at_sym(s):
            self.fail({repr(s)})
        self.i += 1

    def basis(self):
        self.expect_sym("[")
        items = []
        if self.at_sym("]"):
            self.i += 1
        else:
            items.append(self.item())
            while self.at_sym(";"):
                self.i += 1
                items.append(self.item())
            if not self.at_sym("]"):
                self.fail({"';'", "']'"})
            self.i += 1
        if self.tok[0] != "end":
            self.fail({"end of input"})
        return BasisSpec.of(items)

    def positive(self, tok, what):
        if tok[1] == 0:
            raise BasisParseError(self.text, tok[2], {f"positive {what}"}, "0")
        return tok[1]

    def item(self):
        count = 1
        tok = self.tok
        if tok[0] == "word" and tok[1] in COUNT_WORDS:
            count = COUNT_WORDS[tok[1]]
            self.i += 1
        elif tok[0] == "num" and self.tokens[self.i + 1][0] == "num":
            count = self.positive(tok, "count")
            self.i += 1
        elif tok[0] != "num":
            self.fail({"number", "count word"})
        tok = self.tok
        if tok[0] != "num":
            self.fail({"number"})
        places = self.positive(tok, "number of places")
        self.i += 1
        self.expect_sym("-")
        if not self.at_word("pl"):
            self.fail({"'pl'"})
        self.i += 1
        if self.at_sym("."):
            self.i += 1
        irreflexive = False
        if self.at_word("irref"):
            irreflexive = True
            self.i += 1
            if self.at_sym("."):
                self.i += 1
        elif not (self.at_sym(";") or self.at_sym("]")):
            self.fail({"'irref'", "';'", "']'"})
        return PredicateSpec(places, irreflexive, count)


def parse_basis(text):
    return _Parser(text).basis()


def format_basis(b):
    """Canonical notation: descending places, decimal counts, trailing ``irref.``.

    The synthetic-unit marker has no spelling, so it renders as a plain
    ``1-pl.``.
    """
    items = []
    for p in b.predicates:
        s = f"{p.places}-pl."
        if p.irreflexive:
            s += "irref."
        if p.multiplicity != 1:
            s = f"{p.multiplicity} {s}"
        items.append(s)
    return "[" + "; ".join(items) + "]"


def unit_value(p):
    if p.places == 1:
        return 1
    if p.irreflexive:
        return 2 * p.places - 1
    return v_total(p.places)


def basis_value(b):
    return sum(p.multiplicity * unit_value(p) for p in b.predicates)

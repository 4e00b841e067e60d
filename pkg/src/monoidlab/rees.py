"""Rees quotients: the free monoid modulo the non-factor ideal of a word set.

The nonzero elements of ``M(W)`` are the contiguous factors of the words
in ``W`` (the empty factor is the identity); every other product is the
adjoined zero.  Element labels are the factor words themselves so that
word-level checkers can read values back without a side table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomomorphismViolationError, NotSubsetError, ParseError
from .monoid import ZERO_LABEL, FiniteMonoid, from_table
from .words import EPSILON, Word, WordSet, factors, generate_wn, parse_word


class ReesQuotient:
    """A finite monoid whose nonzero elements are factors of a word set."""

    __slots__ = ("source", "monoid", "_index")

    def __init__(self, source: WordSet, monoid: FiniteMonoid, index: dict[Word, int]):
        self.source = source
        self.monoid = monoid
        self._index = index

    @property
    def order(self) -> int:
        return self.monoid.order

    @property
    def zero(self) -> int:
        return self.monoid.zero

    @property
    def one(self) -> int:
        return self.monoid.one

    def element_of(self, w: Word) -> int:
        """Index of the element labeled ``w``; zero when ``w`` is not a factor."""
        return self._index.get(w, self.monoid.zero)

    def label(self, i: int):
        return self.monoid.label(i)

    def label_text(self, i: int) -> str:
        return self.monoid.label_text(i)

    def mul(self, s: int, t: int) -> int:
        return self.monoid.mul(s, t)

    def __repr__(self) -> str:
        return f"ReesQuotient({self.source}, order={self.order})"


def rees_quotient(word_set: WordSet) -> ReesQuotient:
    """Construct ``M(W)``: identity first, factors shortlex, zero last."""
    factor_words = sorted(
        {f for w in word_set for f in factors(w)} | {EPSILON}, key=Word.shortlex_key
    )
    index = {w: i for i, w in enumerate(factor_words)}
    zero = len(factor_words)
    labels = tuple(factor_words) + (ZERO_LABEL,)
    n = len(labels)
    table = [[zero] * n for _ in range(n)]
    for i, u in enumerate(factor_words):
        for j, v in enumerate(factor_words):
            table[i][j] = index.get(u + v, zero)
    monoid = from_table(labels, 0, table, zero=zero)
    return ReesQuotient(word_set, monoid, index)


@dataclass(frozen=True)
class QuotientMap:
    """A verified surjective homomorphism between two Rees quotients."""

    source: ReesQuotient
    target: ReesQuotient
    mapping: tuple[int, ...]

    def apply(self, element: int) -> int:
        return self.mapping[element]


def quotient_map(source: ReesQuotient, target: ReesQuotient) -> QuotientMap:
    """The map sending each factor of the source set to itself when it
    remains a factor of the target set, and to zero otherwise.

    Requires the target word set to be contained in the source word set;
    the homomorphism property and surjectivity are checked exhaustively.
    """
    if not target.source.issubset(source.source):
        raise NotSubsetError(
            f"{{{target.source}}} is not a subset of {{{source.source}}}"
        )
    n = source.order
    mapping = []
    for i in range(n):
        lab = source.label(i)
        if isinstance(lab, Word):
            mapping.append(target.element_of(lab))
        else:
            mapping.append(target.zero)
    for s in range(n):
        for t in range(n):
            if mapping[source.mul(s, t)] != target.mul(mapping[s], mapping[t]):
                raise HomomorphismViolationError(
                    f"map is not a homomorphism at ({s}, {t})", witness=(s, t)
                )
    if set(mapping) != set(range(target.order)):
        raise HomomorphismViolationError("map is not surjective")
    return QuotientMap(source, target, tuple(mapping))


def parse_word_set(text: str) -> WordSet:
    """Parse a comma-separated word list, or ``wn:N1,N2,...`` expanding to
    the corresponding members of the separating family.  An empty string
    is the empty word set."""
    s = text.strip()
    if not s:
        return WordSet.of([])
    if s.startswith("wn:"):
        body = s[3:].strip()
        if not body:
            raise ParseError("wn: needs at least one index", 3)
        try:
            indices = [int(p.strip()) for p in body.split(",")]
        except ValueError:
            raise ParseError(f"bad wn index list {body!r}", 3) from None
        return WordSet.of(generate_wn(i) for i in indices)
    return WordSet.of(parse_word(p) for p in s.split(","))

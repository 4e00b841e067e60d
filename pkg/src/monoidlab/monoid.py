"""Finite monoids as validated multiplication tables.

Tables can be given directly or constructed from a finite presentation by
bounded congruence closure.  Element labels are either words (over the
generators, or over the ambient alphabet for word quotients) or opaque
strings such as ``"0"`` for a reserved zero class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BadIdentityError,
    BadZeroError,
    DuplicateLabelsError,
    EmptyGeneratorsError,
    NonAssociativeError,
    NotStabilizedError,
    UnknownPresetError,
)
from .words import EPSILON, Letter, Word, parse_word


class _ZeroMark:
    """Marker for the absorbing element in relations and substitutions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "0"


ZERO = _ZeroMark()

ZERO_LABEL = "0"


@dataclass(frozen=True)
class FiniteMonoid:
    """An immutable multiplication table with a distinguished identity.

    ``elements`` holds the labels in canonical order, ``table[s][t]`` the
    index of the product.  ``zero`` is the index of an absorbing element
    when one is declared.
    """

    elements: tuple[object, ...]
    one: int
    table: tuple[tuple[int, ...], ...]
    zero: int | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, s: int, t: int) -> int:
        n = len(self.elements)
        if not (0 <= s < n and 0 <= t < n):
            raise IndexError(f"element index out of range: ({s}, {t}) with order {n}")
        return self.table[s][t]

    def label(self, i: int):
        return self.elements[i]

    def label_text(self, i: int) -> str:
        return str(self.elements[i])

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {str(lab): i for i, lab in enumerate(self.elements)}

    def index_of_label(self, label) -> int:
        return self._label_index[str(label)]

    def to_json_dict(self) -> dict:
        return {
            "elements": [str(lab) for lab in self.elements],
            "one": self.one,
            "zero": self.zero,
            "table": [list(row) for row in self.table],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "FiniteMonoid":
        labels = []
        for text in data["elements"]:
            try:
                labels.append(parse_word(text))
            except Exception:
                labels.append(text)
        return from_table(
            tuple(labels),
            data["one"],
            [tuple(row) for row in data["table"]],
            zero=data.get("zero"),
        )


def _associativity_witness(table: tuple[tuple[int, ...], ...]) -> tuple[int, int, int] | None:
    T = np.asarray(table, dtype=np.int32)
    n = T.shape[0]
    for s in range(n):
        left = T[T[s], :]      # left[t, u] = T[T[s, t], u]
        right = T[s][T]        # right[t, u] = T[s, T[t, u]]
        bad = left != right
        if bad.any():
            t, u = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return (s, int(t), int(u))
    return None


def from_table(elements, one: int, table, zero: int | None = None) -> FiniteMonoid:
    """Validate and freeze a multiplication table.

    Checks for duplicate labels, a working identity, a working zero when
    declared, and full associativity (with a witness triple on failure).
    """
    elems = tuple(elements)
    n = len(elems)
    if n == 0:
        raise ValueError("a monoid needs at least one element")
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"table must be {n}x{n}")
    for r in rows:
        for v in r:
            if not (0 <= v < n):
                raise ValueError(f"table entry {v} out of range")
    if len({str(lab) for lab in elems}) != n:
        raise DuplicateLabelsError("element labels must be pairwise distinct")
    if not (0 <= one < n):
        raise BadIdentityError(f"identity index {one} out of range")
    for s in range(n):
        if rows[one][s] != s or rows[s][one] != s:
            raise BadIdentityError(f"element {one} is not an identity (fails at {s})")
    if zero is not None:
        if not (0 <= zero < n):
            raise BadZeroError(f"zero index {zero} out of range")
        for s in range(n):
            if rows[zero][s] != zero or rows[s][zero] != zero:
                raise BadZeroError(f"element {zero} is not absorbing (fails at {s})")
    witness = _associativity_witness(rows)
    if witness is not None:
        raise NonAssociativeError(witness)
    return FiniteMonoid(elems, one, rows, zero)


def multiply(m: FiniteMonoid, s: int, t: int) -> int:
    """Product of two elements by table lookup."""
    return m.mul(s, t)


@dataclass(frozen=True)
class Presentation:
    """Generators and relations; relation right sides may be :data:`ZERO`.

    With ``adjoin_identity`` the closure runs over nonempty generator
    words and a fresh identity is added afterwards; without it the empty
    word belongs to the universe and relations may use ``1`` as a side.
    """

    generators: tuple[Letter, ...]
    relations: tuple[tuple[Word, object], ...]
    adjoin_identity: bool = True
    has_zero: bool = False

    def __post_init__(self) -> None:
        gens = set(self.generators)
        for lhs, rhs in self.relations:
            sides = [lhs] + ([] if rhs is ZERO else [rhs])
            if rhs is ZERO and not self.has_zero:
                raise ValueError("a zero relation needs has_zero")
            for side in sides:
                if not set(side.letters) <= gens:
                    raise ValueError(f"relation side {side} uses undeclared generators")
                if len(side) == 0 and self.adjoin_identity:
                    raise ValueError("empty relation sides need adjoin_identity=False")


_PRESETS = {
    "M_SCRIPT": (("a", "e"), (("ee", "e"), ("aaa", None), ("ae", None), ("eaa", "aa"))),
    "A21": (("a", "b"), (("aa", None), ("aba", "a"), ("bab", "b"), ("bb", "b"))),
    "B21": (("a", "b"), (("aa", None), ("bb", None), ("aba", "a"), ("bab", "b"))),
}


def preset(name: str) -> Presentation:
    """One of the built-in presentations: M_SCRIPT, A21 or B21."""
    key = name.strip().upper()
    if key not in _PRESETS:
        raise UnknownPresetError(f"unknown preset {name!r}; choose from {sorted(_PRESETS)}")
    gen_names, rels = _PRESETS[key]
    relations = tuple(
        (parse_word(lhs), ZERO if rhs is None else parse_word(rhs)) for lhs, rhs in rels
    )
    return Presentation(
        generators=tuple(Letter(g) for g in gen_names),
        relations=relations,
        adjoin_identity=True,
        has_zero=True,
    )


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, key) -> None:
        self.parent.setdefault(key, key)

    def find(self, key):
        p = self.parent
        root = key
        while p[root] != root:
            root = p[root]
        while p[key] != root:
            p[key], key = root, p[key]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _tuple_shortlex(t: tuple[Letter, ...]) -> tuple:
    return (len(t), tuple(l.sort_key() for l in t))


def _occurrences(haystack: tuple, needle: tuple) -> list[int]:
    k = len(needle)
    return [i for i in range(len(haystack) - k + 1) if haystack[i : i + k] == needle]


def _closure(pres: Presentation, bound: int) -> FiniteMonoid:
    gens = sorted(pres.generators)
    min_len = 1 if pres.adjoin_identity else 0
    universe: list[tuple[Letter, ...]] = []
    for length in range(min_len, bound + 1):
        universe.extend(itertools.product(gens, repeat=length))
    uf = _UnionFind()
    for w in universe:
        uf.add(w)
    if pres.has_zero:
        uf.add(ZERO)
    for lhs, rhs in pres.relations:
        lt = lhs.letters
        if rhs is ZERO:
            for w in universe:
                if _occurrences(w, lt):
                    uf.union(w, ZERO)
        else:
            rt = rhs.letters
            for w in universe:
                for i in _occurrences(w, lt):
                    w2 = w[:i] + rt + w[i + len(lt) :]
                    if len(w2) <= bound:
                        uf.union(w, w2)

    zero_root = uf.find(ZERO) if pres.has_zero else None
    groups: dict[object, list[tuple[Letter, ...]]] = {}
    for w in universe:
        groups.setdefault(uf.find(w), []).append(w)

    word_classes: list[tuple[tuple[Letter, ...], object]] = []
    identity_root = None
    for root, members in groups.items():
        if zero_root is not None and root == zero_root:
            continue
        rep = min(members, key=_tuple_shortlex)
        if not pres.adjoin_identity and rep == ():
            identity_root = root
            continue
        word_classes.append((rep, root))
    word_classes.sort(key=lambda pair: _tuple_shortlex(pair[0]))

    # element layout: identity first, word classes by shortlex rep, zero last
    labels: list[object] = [EPSILON]
    root_to_index: dict[object, int] = {}
    if identity_root is not None:
        root_to_index[identity_root] = 0
    for rep, root in word_classes:
        root_to_index[root] = len(labels)
        labels.append(Word(rep))
    zero_index = None
    if pres.has_zero:
        zero_index = len(labels)
        root_to_index[zero_root] = zero_index
        labels.append(ZERO_LABEL)

    reps: list[tuple[Letter, ...] | None] = [()] + [rep for rep, _ in word_classes]
    if zero_index is not None:
        reps.append(None)

    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if zero_index is not None and (i == zero_index or j == zero_index):
                table[i][j] = zero_index
                continue
            if i == 0:
                table[i][j] = j
                continue
            if j == 0:
                table[i][j] = i
                continue
            prod = reps[i] + reps[j]
            if len(prod) > bound:
                raise NotStabilizedError(
                    f"product of classes {Word(reps[i])} and {Word(reps[j])} "
                    f"has length {len(prod)}, beyond the closure bound {bound}"
                )
            table[i][j] = root_to_index[uf.find(prod)]
    return from_table(tuple(labels), 0, table, zero=zero_index)


def from_presentation(pres: Presentation, max_len: int = 6) -> FiniteMonoid:
    """Build the presented monoid by congruence closure over words of
    bounded length, certifying the bound by re-running one longer.

    Classes are labeled by their shortlex-least representative; the
    reserved zero class is labeled ``"0"``.  Raises
    :class:`NotStabilizedError` when the two runs disagree.
    """
    if not pres.generators:
        raise EmptyGeneratorsError("presentation has no generators")
    if max_len < 1:
        raise ValueError("max_len must be positive")
    small = _closure(pres, max_len)
    big = _closure(pres, max_len + 1)
    same = (
        [str(x) for x in small.elements] == [str(x) for x in big.elements]
        and small.table == big.table
        and small.zero == big.zero
    )
    if not same:
        raise NotStabilizedError(
            f"closure did not stabilize: order {small.order} at bound {max_len}, "
            f"order {big.order} at bound {max_len + 1}",
            orders=(small.order, big.order),
        )
    return small

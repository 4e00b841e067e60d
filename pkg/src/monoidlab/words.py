"""Structured letters and words, the depth function, and word predicates.

A letter is a lowercase base symbol with an optional nonnegative integer
subscript and superscript, enough to spell families like ``z_1``, ``t_3``
or ``y_2^4``.  A word is a finite, possibly empty, sequence of letters.
Letters order lexicographically on (base, subscript, superscript) with an
absent index sorting before any present one; words order shortlex.  That
single order is used for every canonical enumeration in the package.

Text syntax, accepted by :func:`parse_word` and emitted by ``str()``:

* compact: a run of plain lowercase letters, e.g. ``aabb``; a caret
  denotes repetition (``x^3`` parses as ``xxx``),
* dotted: tokens separated by ``.``, each ``base[_sub][^sup]``, e.g.
  ``z_1.t_1.x.z_1.y_1^1.x.y_1^0.y_1^1``; here a caret is a superscript,
* the empty word is spelled ``1``.

A text is parsed in dotted mode exactly when it contains a dot or an
underscore, so every word the emitters produce parses back to an equal
value (the emitters never use the repetition shorthand).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering

from .errors import ParseError

INFINITY = float("inf")

_TOKEN_RE = re.compile(r"([a-z])(?:_(\d+))?(?:\^(\d+))?")


@total_ordering
@dataclass(frozen=True)
class Letter:
    """An alphabet symbol: lowercase base plus optional sub/superscript."""

    base: str
    sub: int | None = None
    sup: int | None = None

    def __post_init__(self) -> None:
        if len(self.base) != 1 or not ("a" <= self.base <= "z"):
            raise ValueError(f"letter base must be one lowercase ascii letter, got {self.base!r}")
        for part in (self.sub, self.sup):
            if part is not None and part < 0:
                raise ValueError("subscript and superscript must be nonnegative")

    def sort_key(self) -> tuple:
        return (
            self.base,
            self.sub is not None,
            self.sub if self.sub is not None else 0,
            self.sup is not None,
            self.sup if self.sup is not None else 0,
        )

    def __lt__(self, other: "Letter") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def plain(self) -> bool:
        return self.sub is None and self.sup is None

    def __str__(self) -> str:
        out = self.base
        if self.sub is not None:
            out += f"_{self.sub}"
        if self.sup is not None:
            out += f"^{self.sup}"
        return out


@total_ordering
@dataclass(frozen=True)
class Word:
    """A finite sequence of letters; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters) -> "Word":
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def shortlex_key(self) -> tuple:
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.shortlex_key() < other.shortlex_key()

    @property
    def alphabet(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        if all(l.plain for l in self.letters):
            return "".join(l.base for l in self.letters)
        return ".".join(str(l) for l in self.letters)


EPSILON = Word()


def _parse_dotted(text: str) -> list[Letter]:
    out = []
    pos = 0
    for raw in text.split("."):
        tok = raw.strip()
        if not tok:
            raise ParseError("empty token in dotted word", pos)
        m = _TOKEN_RE.fullmatch(tok)
        if not m:
            raise ParseError(f"bad letter token {tok!r}", pos)
        base, sub, sup = m.groups()
        out.append(Letter(base, int(sub) if sub is not None else None, int(sup) if sup is not None else None))
        pos += len(raw) + 1
    return out


def _parse_compact(text: str) -> list[Letter]:
    out: list[Letter] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if not ("a" <= c <= "z"):
            raise ParseError(f"unexpected character {c!r}", i)
        i += 1
        if i < len(text) and text[i] == "^":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("caret must be followed by digits", i)
            out.extend([Letter(c)] * int(text[i + 1 : j]))
            i = j
        else:
            out.append(Letter(c))
    return out


def parse_word(text: str) -> Word:
    """Parse either word syntax; ``1`` is the empty word."""
    s = text.strip()
    if not s:
        raise ParseError("empty word text; the empty word is spelled 1", 0)
    if s == "1":
        return EPSILON
    if "." in s or "_" in s:
        return Word(tuple(_parse_dotted(s)))
    return Word(tuple(_parse_compact(s)))


@dataclass(frozen=True)
class AlphabetProfile:
    """Alphabet of a word split into simple and multiple letters."""

    alf: frozenset[Letter]
    simple: frozenset[Letter]
    multiple: frozenset[Letter]


def alphabet_profile(w: Word) -> AlphabetProfile:
    """Letters of ``w`` partitioned by occurrence count (one vs. several)."""
    counts = Counter(w.letters)
    simple = frozenset(l for l, c in counts.items() if c == 1)
    multiple = frozenset(l for l, c in counts.items() if c >= 2)
    return AlphabetProfile(frozenset(counts), simple, multiple)


def delete_letter(w: Word, x: Letter) -> Word:
    """``w`` with every occurrence of ``x`` removed."""
    return Word(tuple(l for l in w.letters if l != x))


def occurrence_positions(w: Word, x: Letter) -> list[int]:
    """Strictly increasing 1-based positions of ``x`` in ``w``."""
    return [i + 1 for i, l in enumerate(w.letters) if l == x]


def factors(w: Word) -> list[Word]:
    """All contiguous factors of ``w`` including the empty word, shortlex sorted."""
    seen = {()}
    ls = w.letters
    n = len(ls)
    for i in range(n):
        for j in range(i + 1, n + 1):
            seen.add(ls[i:j])
    return sorted((Word(t) for t in seen), key=Word.shortlex_key)


def depth_map(w: Word) -> dict[Letter, int | float]:
    """Depth of every letter of ``w``.

    Simple letters have depth 0.  A multiple letter gets depth k when some
    letter of depth k-1 has its first occurrence strictly between the
    first and second occurrences of the letter (later occurrences are
    ignored).  Letters never reached this way get :data:`INFINITY`.
    Computed as a round-based fixpoint; each round only consults the
    letters assigned in the previous round, so the result is minimal.
    """
    prof = alphabet_profile(w)
    first: dict[Letter, int] = {}
    second: dict[Letter, int] = {}
    for i, l in enumerate(w.letters):
        if l not in first:
            first[l] = i
        elif l not in second:
            second[l] = i
    depths: dict[Letter, int | float] = {l: 0 for l in prof.simple}
    unassigned = set(prof.multiple)
    frontier = set(prof.simple)
    k = 0
    while unassigned and frontier:
        k += 1
        newly = set()
        for x in unassigned:
            lo, hi = first[x], second[x]
            if any(lo < first[d] < hi for d in frontier):
                newly.add(x)
        for x in newly:
            depths[x] = k
        unassigned -= newly
        frontier = newly
    for x in unassigned:
        depths[x] = INFINITY
    return depths


def generate_wn(n: int) -> Word:
    """The n-th member of the separating word family.

    The word is the product of a block of z_i t_i pairs, a first marker
    x, a block of z_i y_i^(n) pairs, a second marker x, and n sweeps of
    y_i^(n-j) y_i^(n+1-j) pairs.  Its length is 2(n+1)^2 and its alphabet
    has n(n+3)+1 letters.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    x = Letter("x")
    parts: list[Letter] = []
    for i in range(1, n + 1):
        parts += [Letter("z", i), Letter("t", i)]
    parts.append(x)
    for i in range(1, n + 1):
        parts += [Letter("z", i), Letter("y", i, n)]
    parts.append(x)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            parts += [Letter("y", i, n - j), Letter("y", i, n + 1 - j)]
    return Word(tuple(parts))


def is_square_free(w: Word) -> bool:
    """True when no factor of ``w`` has the shape uu with u nonempty."""
    ls = w.letters
    n = len(ls)
    for i in range(n):
        for half in range(1, (n - i) // 2 + 1):
            if ls[i : i + half] == ls[i + half : i + 2 * half]:
                return False
    return True


@dataclass(frozen=True)
class Length2Profile:
    """Occurrence structure of the length-2 factors of a word."""

    all_unique: bool
    all_first_last: bool


def length2_profile(w: Word) -> Length2Profile:
    """Checks the length-2 factors of ``w`` (requires ``len(w) >= 2``).

    ``all_unique`` holds when every length-2 factor occurs at exactly one
    position.  ``all_first_last`` holds when every adjacent pair combines
    the first occurrence of one letter with the last occurrence of the
    other, in either order; a sole occurrence counts as both.
    """
    ls = w.letters
    n = len(ls)
    if n < 2:
        raise ValueError("length2_profile needs a word of length at least 2")
    pair_counts = Counter(ls[i : i + 2] for i in range(n - 1))
    all_unique = all(c == 1 for c in pair_counts.values())
    first: dict[Letter, int] = {}
    last: dict[Letter, int] = {}
    for i, l in enumerate(ls):
        first.setdefault(l, i)
        last[l] = i
    all_first_last = True
    for p in range(n - 1):
        c1, c2 = ls[p], ls[p + 1]
        forward = first[c1] == p and last[c2] == p + 1
        backward = last[c1] == p and first[c2] == p + 1
        if not (forward or backward):
            all_first_last = False
            break
    return Length2Profile(all_unique, all_first_last)


def min_nonlinear_simplefree_factor(w: Word) -> int | None:
    """Least length of a factor with a repeated letter and no letter simple in ``w``.

    Returns None when every such factor is linear (or none exists).
    """
    ls = w.letters
    n = len(ls)
    simple = alphabet_profile(w).simple
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            seg = ls[i : i + length]
            if len(set(seg)) < length and not (set(seg) & simple):
                return length
    return None


@dataclass(frozen=True)
class WordSet:
    """A finite set of nonempty words with deterministic shortlex iteration."""

    words: tuple[Word, ...] = ()

    @classmethod
    def of(cls, words) -> "WordSet":
        uniq = set()
        for w in words:
            if len(w) == 0:
                raise ValueError("word sets contain nonempty words only")
            uniq.add(w)
        return cls(tuple(sorted(uniq, key=Word.shortlex_key)))

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.words

    def issubset(self, other: "WordSet") -> bool:
        mine = set(self.words)
        return mine <= set(other.words)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.words)

"""Identities over variable words, substitution evaluation, and the two
independent satisfaction checkers.

``check_table`` decides satisfaction by brute force over all element
substitutions of a multiplication table.  ``check_rees`` decides the same
question for a word-set quotient without touching the table, by matching
the identity's sides into the source words.  The two are kept independent
on purpose and are cross-validated by the verify module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BadZeroError, BudgetExceededError, ParseError, UnknownBasisError
from .monoid import ZERO
from .rees import ReesQuotient
from .words import (
    EPSILON,
    INFINITY,
    Letter,
    Word,
    WordSet,
    alphabet_profile,
    delete_letter,
    depth_map,
    generate_wn,
    occurrence_positions,
    parse_word,
)

HOLDS = "HOLDS"
FAILS = "FAILS"

DEFAULT_TABLE_BUDGET = 10**8
DEFAULT_MATCH_BUDGET = 10**6

_CHUNK = 1 << 16


@dataclass(frozen=True)
class Identity:
    """An ordered pair of words over variable letters (u = v)."""

    lhs: Word
    rhs: Word

    @property
    def variables(self) -> list[Letter]:
        return sorted(self.lhs.alphabet | self.rhs.alphabet)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def parse_identity(text: str) -> Identity:
    """Parse ``u = v`` with both sides in word syntax.

    In compact sides a caret is a power (``x^3`` means ``xxx``); dotted
    sides keep carets as superscripts, matching the word parser.
    """
    if text.count("=") != 1:
        raise ParseError("an identity needs exactly one '='", len(text))
    left, right = text.split("=")
    return Identity(parse_word(left), parse_word(right))


@dataclass(frozen=True)
class Substitution:
    """A mapping from variable letters to words, elements, or zero.

    Values are words for word-level checking, int element indices for
    table-level checking, or :data:`ZERO` for the absorbing element.
    Entries are kept sorted by variable so substitutions hash and compare
    structurally.
    """

    assignment: tuple[tuple[Letter, object], ...]

    @classmethod
    def of(cls, mapping: dict) -> "Substitution":
        return cls(tuple(sorted(mapping.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def identity_on(cls, alphabet) -> "Substitution":
        return cls.of({l: Word((l,)) for l in alphabet})

    def as_dict(self) -> dict:
        return dict(self.assignment)

    @property
    def domain(self) -> frozenset[Letter]:
        return frozenset(l for l, _ in self.assignment)

    def __getitem__(self, letter: Letter):
        for l, v in self.assignment:
            if l == letter:
                return v
        raise KeyError(str(letter))

    def apply(self, w: Word) -> Word:
        """Image of a word under a word-valued substitution."""
        out: list[Letter] = []
        mapping = self.as_dict()
        for letter in w.letters:
            value = mapping[letter]
            if not isinstance(value, Word):
                raise TypeError(f"{letter} maps to {value!r}, not a word")
            out.extend(value.letters)
        return Word(tuple(out))

    def __str__(self) -> str:
        parts = ", ".join(f"{l} -> {v}" for l, v in self.assignment)
        return "{" + parts + "}"


@dataclass(frozen=True)
class CheckOutcome:
    """Result of a satisfaction check, with a witness when it fails."""

    status: str
    witness: Substitution | None
    evaluations: int

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


def evaluate(w: Word, subst: Substitution, monoid) -> int:
    """Left-to-right product of the images of ``w`` in the monoid.

    ``monoid`` may be a :class:`FiniteMonoid` or a :class:`ReesQuotient`;
    word values are resolved through the quotient's factor lookup,
    element indices are used directly, and :data:`ZERO` forces the zero
    element.  Exits early once the running product hits zero.
    """
    quotient = monoid if isinstance(monoid, ReesQuotient) else None
    mon = quotient.monoid if quotient is not None else monoid
    mapping = subst.as_dict()
    acc = mon.one
    for letter in w.letters:
        if letter not in mapping:
            raise KeyError(f"substitution does not cover {letter}")
        value = mapping[letter]
        if value is ZERO:
            if mon.zero is None:
                raise BadZeroError("zero assignment in a monoid without zero")
            return mon.zero
        if isinstance(value, Word):
            if quotient is None:
                raise TypeError("word-valued assignments need a Rees quotient")
            e = quotient.element_of(value)
        elif isinstance(value, int):
            if not (0 <= value < mon.order):
                raise IndexError(f"element index {value} out of range")
            e = value
        else:
            raise TypeError(f"unsupported assignment value {value!r}")
        acc = mon.mul(acc, e)
        if mon.zero is not None and acc == mon.zero:
            return acc
    return acc


def _eval_chunk(table: np.ndarray, one: int, seq: list[int], coords, size: int) -> np.ndarray:
    acc = np.full(size, one, dtype=np.int32)
    for vi in seq:
        acc = table[acc, coords[vi]]
    return acc


def check_table(monoid, ident: Identity, budget: int = DEFAULT_TABLE_BUDGET) -> CheckOutcome:
    """Brute-force satisfaction over all element substitutions.

    Substitutions are enumerated odometer-style over the variables in
    letter order with the last variable moving fastest, so the first
    failing substitution found is the canonical least witness.
    """
    mon = monoid.monoid if isinstance(monoid, ReesQuotient) else monoid
    variables = sorted(ident.lhs.alphabet | ident.rhs.alphabet)
    k = len(variables)
    if k == 0:
        return CheckOutcome(HOLDS, None, 1)
    n = mon.order
    var_pos = {v: i for i, v in enumerate(variables)}
    lhs_seq = [var_pos[l] for l in ident.lhs.letters]
    rhs_seq = [var_pos[l] for l in ident.rhs.letters]
    table = np.asarray(mon.table, dtype=np.int32)
    total = n**k
    dims = (n,) * k
    start = 0
    while start < total:
        if start >= budget:
            raise BudgetExceededError(
                f"table budget exhausted after {start} of {total} substitutions",
                start,
                budget,
            )
        end = min(start + _CHUNK, total, budget)
        flat = np.arange(start, end, dtype=np.int64)
        coords = np.unravel_index(flat, dims)
        size = end - start
        lv = _eval_chunk(table, mon.one, lhs_seq, coords, size)
        rv = _eval_chunk(table, mon.one, rhs_seq, coords, size)
        neq = lv != rv
        if neq.any():
            off = int(np.argmax(neq))
            witness = Substitution.of(
                {v: int(coords[i][off]) for i, v in enumerate(variables)}
            )
            return CheckOutcome(FAILS, witness, start + off + 1)
        start = end
    return CheckOutcome(HOLDS, None, total)


class _Budget:
    __slots__ = ("limit", "spent")

    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def tick(self) -> None:
        self.spent += 1
        if self.spent > self.limit:
            raise BudgetExceededError(
                f"matcher budget of {self.limit} backtracking nodes exhausted",
                self.spent,
                self.limit,
            )


def _scan_matches(pattern: Word, target: Word, erasing: bool, budget: _Budget, on_match) -> None:
    """Drive ``on_match(values, start, end)`` over every factor match of
    the pattern into the target.

    ``values`` holds one segment (letter tuple) per pattern variable in
    sorted variable order and is mutated in place; callbacks must copy
    whatever they keep.  The matched span is ``target[start:end]``.  The
    same assignment can reach the callback once per start position.

    Backtracks over the start position and per-variable segments.  Two
    sound prunes keep the tree small: a nonempty image of a variable
    occurring k times must have at least k disjoint occurrences in the
    target, and segments already bound in the rest of the pattern must
    still fit into the remaining room.  Every candidate binding costs one
    budget tick.
    """
    pat = pattern.letters
    tgt = target.letters
    n = len(tgt)
    m = len(pat)
    variables = sorted(pattern.alphabet)
    var_index = {v: i for i, v in enumerate(variables)}
    pat_idx = [var_index[c] for c in pat]
    k = len(variables)
    need = [0] * k
    for vi in pat_idx:
        need[vi] += 1
    suffix_counts = [[0] * k for _ in range(m + 1)]
    for pos in range(m - 1, -1, -1):
        row = suffix_counts[pos + 1][:]
        row[pat_idx[pos]] += 1
        suffix_counts[pos] = row
    disjoint_cache: dict[tuple, int] = {}

    def disjoint_occurrences(seg: tuple) -> int:
        cached = disjoint_cache.get(seg)
        if cached is not None:
            return cached
        count = 0
        i = 0
        step = len(seg)
        while i + step <= n:
            if tgt[i : i + step] == seg:
                count += 1
                i += step
            else:
                i += 1
        disjoint_cache[seg] = count
        return count

    values: list[tuple | None] = [None] * k
    low = 0 if erasing else 1
    start = 0

    def walk(pos: int, end: int) -> None:
        if pos == m:
            on_match(values, start, end)
            return
        vi = pat_idx[pos]
        seg = values[vi]
        if seg is not None:
            step = len(seg)
            if tgt[end : end + step] == seg:
                walk(pos + 1, end + step)
            return
        later = suffix_counts[pos + 1]
        room = n - end
        for j in range(k):
            bound = values[j]
            if bound is not None and later[j]:
                room -= later[j] * len(bound)
        max_step = room // (1 + later[vi])
        needed = need[vi]
        for step in range(low, max_step + 1):
            budget.tick()
            g = tgt[end : end + step]
            if step and needed > 1 and disjoint_occurrences(g) < needed:
                continue
            values[vi] = g
            walk(pos + 1, end + step)
        values[vi] = None

    for start in range(n + 1):
        budget.tick()
        walk(0, start)


def _values_key(vals: tuple) -> tuple:
    # segments in sorted variable order, each compared shortlex
    return tuple((len(seg), tuple(l.sort_key() for l in seg)) for seg in vals)


def match_pattern(
    pattern: Word,
    target: Word,
    erasing: bool = True,
    budget: int = DEFAULT_MATCH_BUDGET,
) -> list[Substitution]:
    """All substitutions sending the pattern to a factor of the target.

    Enumerated by backtracking over the start position and per-variable
    segment lengths, with repeated variables pruned to their first
    binding.  The result is deduplicated and sorted by the images of the
    variables in letter order.
    """
    if len(pattern) == 0:
        raise ValueError("pattern must be nonempty")
    counter = _Budget(budget)
    variables = sorted(pattern.alphabet)
    found: set[tuple] = set()

    def on_match(values, start, end):
        found.add(tuple(values))

    _scan_matches(pattern, target, erasing, counter, on_match)
    ordered = sorted(found, key=_values_key)
    return [
        Substitution(tuple((v, Word(seg)) for v, seg in zip(variables, vals)))
        for vals in ordered
    ]


def scan_matches(
    pattern: Word,
    target: Word,
    on_match,
    erasing: bool = True,
    budget: int = DEFAULT_MATCH_BUDGET,
) -> None:
    """Streaming form of :func:`match_pattern`.

    Calls ``on_match(substitution)`` for every factor match without
    materializing the result list, so memory stays flat however many
    matches there are.  Unlike :func:`match_pattern` the stream is not
    deduplicated: a substitution whose image occurs at several positions
    is reported once per position.
    """
    if len(pattern) == 0:
        raise ValueError("pattern must be nonempty")
    counter = _Budget(budget)
    variables = sorted(pattern.alphabet)

    def handle(values, start, end):
        on_match(
            Substitution(tuple((v, Word(seg)) for v, seg in zip(variables, values)))
        )

    _scan_matches(pattern, target, erasing, counter, handle)


def check_rees(
    word_set: WordSet, ident: Identity, budget: int = DEFAULT_MATCH_BUDGET
) -> CheckOutcome:
    """Decide satisfaction in ``M(W)`` without enumerating the table.

    When the two sides use different alphabets the identity always fails:
    sending one extra letter to zero and the rest to the empty word makes
    the sides 0 and 1.  Otherwise any failing substitution is word-valued
    and makes at least one side a factor of some source word, so it is
    enough to enumerate factor matches of each side and require the other
    side's image to be the very same word.  Matches are streamed and only
    the least mismatch is retained, so memory stays flat even when the
    match count is large.
    """
    alf_l = ident.lhs.alphabet
    alf_r = ident.rhs.alphabet
    if alf_l != alf_r:
        lone = min(alf_l ^ alf_r)
        assignment = {v: (ZERO if v == lone else EPSILON) for v in alf_l | alf_r}
        return CheckOutcome(FAILS, Substitution.of(assignment), 1)
    if ident.lhs == ident.rhs:
        return CheckOutcome(HOLDS, None, 0)
    counter = _Budget(budget)
    variables = sorted(alf_l)
    var_index = {v: i for i, v in enumerate(variables)}
    examined = 0
    best_key: tuple | None = None
    best_vals: tuple | None = None
    for u, v in ((ident.lhs, ident.rhs), (ident.rhs, ident.lhs)):
        v_idx = [var_index[c] for c in v.letters]
        for w in word_set:
            tgt = w.letters

            def on_match(values, start, end, _tgt=tgt, _v_idx=v_idx):
                nonlocal examined, best_key, best_vals
                examined += 1
                image_v: list[Letter] = []
                for i in _v_idx:
                    image_v.extend(values[i])
                if tuple(image_v) != _tgt[start:end]:
                    vals = tuple(values)
                    key = _values_key(vals)
                    if best_key is None or key < best_key:
                        best_key, best_vals = key, vals

            _scan_matches(u, w, True, counter, on_match)
    if best_vals is not None:
        witness = Substitution(
            tuple((v, Word(seg)) for v, seg in zip(variables, best_vals))
        )
        return CheckOutcome(FAILS, witness, examined)
    return CheckOutcome(HOLDS, None, examined)


_SIGMA_TEXTS = (
    "x^3=x^4",
    "x^3y=yx^3",
    "yzx^3=xyxzx",
    "xyzxty=yxzxty",
    "xzytxy=xzytyx",
)

_LEE_LI_TEXTS = (
    "x^3=x^4",
    "yzx^3=xyxzx",
    "x^3y^3=y^3x^3",
    "ytx^3y=ytyx^3",
    "xyzxty=yxzxty",
    "xzytxy=xzytyx",
)


def basis(name: str) -> list[Identity]:
    """One of the fixed identity lists: SIGMA (5) or LEE_LI (6)."""
    key = name.strip().upper()
    if key == "SIGMA":
        texts = _SIGMA_TEXTS
    elif key == "LEE_LI":
        texts = _LEE_LI_TEXTS
    else:
        raise UnknownBasisError(f"unknown basis {name!r}; choose SIGMA or LEE_LI")
    return [parse_identity(t) for t in texts]


def separation_identity(n: int) -> Identity:
    """The identity equating w_n with x^2 times w_n stripped of x."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    wn = generate_wn(n)
    x = Letter("x")
    return Identity(wn, Word((x, x)) + delete_letter(wn, x))


def check_star_property(wn: Word, wk: Word, subst: Substitution) -> bool:
    """Check the two-occurrence alignment property of a factor match.

    For every multiple letter c of the pattern, its image must be empty
    or a single letter d, multiple in the target, with the images of the
    two c occurrences landing exactly on the first and second occurrences
    of d.  The substitution must be a genuine factor match; its placement
    is recomputed here and the property must hold at every placement.
    """
    image = subst.apply(wn)
    tk = wk.letters
    img = image.letters
    starts = [
        s for s in range(len(tk) - len(img) + 1) if tk[s : s + len(img)] == img
    ]
    if not starts:
        raise ValueError("substitution does not send the pattern into the target")
    prof_n = alphabet_profile(wn)
    prof_k = alphabet_profile(wk)
    mapping = subst.as_dict()
    lengths = [len(mapping[c]) for c in wn.letters]
    offsets = [0]
    for ln in lengths:
        offsets.append(offsets[-1] + ln)
    occ_k = {d: occurrence_positions(wk, d) for d in wk.alphabet}
    for start in starts:
        for c in prof_n.multiple:
            img_c = mapping[c]
            if len(img_c) == 0:
                continue
            if len(img_c) != 1:
                return False
            d = img_c.letters[0]
            if d not in prof_k.multiple:
                return False
            occ1, occ2 = occurrence_positions(wn, c)[:2]
            pos1 = start + offsets[occ1 - 1] + 1
            pos2 = start + offsets[occ2 - 1] + 1
            if (pos1, pos2) != (occ_k[d][0], occ_k[d][1]):
                return False
    return True


def check_no_div_instance(w: Word, subst: Substitution, a: Word, b: Word) -> bool:
    """Check one instance of the first-occurrence containment property.

    Builds u = a phi(w) b and verifies that the image segment of the
    first occurrence of every letter x of finite positive depth in w
    contains no position that is the first occurrence in u of a letter
    whose depth in u is smaller than the depth of x in w.
    """
    mapping = subst.as_dict()
    for letter in w.alphabet:
        if letter not in mapping:
            raise KeyError(f"substitution does not cover {letter}")
    images = [mapping[c] for c in w.letters]
    u = a + Word(tuple(itertools.chain.from_iterable(img.letters for img in images))) + b
    dw = depth_map(w)
    du = depth_map(u)
    first_u: dict[Letter, int] = {}
    for i, l in enumerate(u.letters):
        first_u.setdefault(l, i)
    offsets = [len(a)]
    for img in images:
        offsets.append(offsets[-1] + len(img))
    first_w: dict[Letter, int] = {}
    for i, l in enumerate(w.letters):
        first_w.setdefault(l, i)
    for x in w.alphabet:
        dx = dw[x]
        if dx == 0 or dx == INFINITY:
            continue
        p = first_w[x]
        seg_start = offsets[p]
        seg_len = len(images[p])
        for q in range(seg_start, seg_start + seg_len):
            d = u.letters[q]
            if first_u[d] == q and du[d] < dx:
                return False
    return True

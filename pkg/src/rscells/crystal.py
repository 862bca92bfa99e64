"""
Combinatorial crystals on words over the alphabet {1, ..., r}.

A word is a tuple of letters, one tensor factor per position, leftmost factor
first.  The lowering operator f_i turns a letter i into i + 1 and the raising
operator e_i turns i + 1 into i; on longer words the two-factor rule picks
the side by comparing eps of the first letter with phi of the rest:

    e_i(b1 (x) b2) = b1 (x) e_i(b2)   if eps_i(b1) <= phi_i(b2), else e_i(b1) (x) b2
    f_i(b1 (x) b2) = b1 (x) f_i(b2)   if eps_i(b1) <  phi_i(b2), else f_i(b1) (x) b2

Annihilation is the value None, never an exception.  The recursive rule is
the ground truth; the signature rule is the linear-time equivalent and is
tested against it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .tableaux import (
    Tableau,
    insert_word,
    reading_word,
    reading_word_to_tableau,
    semistandard_tableaux,
)

Word = tuple[int, ...]

# decompose() refuses alphabets/lengths whose word count exceeds this
MAX_WORDS = 500_000


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"operator index must be at least 1, got {i}")


@lru_cache(maxsize=None)
def f_op(i: int, word: Word) -> Optional[Word]:
    """Apply the lowering operator f_i; None when it annihilates."""
    _check_index(i)
    if len(word) == 1:
        return (i + 1,) if word[0] == i else None
    head, tail = word[:1], word[1:]
    if eps(i, head) < phi(i, tail):
        new_tail = f_op(i, tail)
        return None if new_tail is None else head + new_tail
    new_head = f_op(i, head)
    return None if new_head is None else new_head + tail


@lru_cache(maxsize=None)
def e_op(i: int, word: Word) -> Optional[Word]:
    """Apply the raising operator e_i; None when it annihilates."""
    _check_index(i)
    if len(word) == 1:
        return (i,) if word[0] == i + 1 else None
    head, tail = word[:1], word[1:]
    if eps(i, head) <= phi(i, tail):
        new_tail = e_op(i, tail)
        return None if new_tail is None else head + new_tail
    new_head = e_op(i, head)
    return None if new_head is None else new_head + tail


@lru_cache(maxsize=None)
def phi(i: int, word: Word) -> int:
    """Largest k with f_i^k applicable, counted by iterated application."""
    count = 0
    cur = word
    while (nxt := f_op(i, cur)) is not None:
        count += 1
        cur = nxt
    return count


@lru_cache(maxsize=None)
def eps(i: int, word: Word) -> int:
    """Largest k with e_i^k applicable, counted by iterated application."""
    count = 0
    cur = word
    while (nxt := e_op(i, cur)) is not None:
        count += 1
        cur = nxt
    return count


def signature_rule(i: int, word: Word) -> tuple[Optional[int], Optional[int]]:
    """0-based positions that e_i and f_i would change, by cancelling
    (i+1, i) factor pairs: e_i hits the leftmost surviving i+1, f_i the
    rightmost surviving i.  Must agree with the recursive operators."""
    _check_index(i)
    open_down: list[int] = []   # positions of uncancelled letters i+1
    unmatched_up: list[int] = []  # positions of uncancelled letters i
    for pos, a in enumerate(word):
        if a == i + 1:
            open_down.append(pos)
        elif a == i:
            if open_down:
                open_down.pop()
            else:
                unmatched_up.append(pos)
    e_pos = open_down[0] if open_down else None
    f_pos = unmatched_up[-1] if unmatched_up else None
    return e_pos, f_pos


def signature_counts(i: int, word: Word) -> tuple[int, int]:
    """(eps_i, phi_i) from the cancellation picture, no operator calls."""
    _check_index(i)
    # letters i cancel the most recent open i+1
    down = 0
    up = 0
    for a in word:
        if a == i + 1:
            down += 1
        elif a == i:
            if down:
                down -= 1
            else:
                up += 1
    return down, up


def is_highest_weight(word: Word, r: int) -> bool:
    """No raising operator applies."""
    return all(eps(i, word) == 0 for i in range(1, r))


def component(word: Word, r: int) -> frozenset[Word]:
    """Connected component: closure of the word under all e_i and f_i."""
    word = _check_word(word, r)
    seen = {word}
    queue = deque((word,))
    while queue:
        cur = queue.popleft()
        for i in range(1, r):
            for op in (e_op, f_op):
                nxt = op(i, cur)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen)


def _check_word(word, r: int) -> Word:
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    if any(not isinstance(a, int) or not 1 <= a <= r for a in word):
        raise ValueError(f"letters must lie in 1..{r}: {word}")
    return word


def word_p_symbol(word: Word) -> Tableau:
    """Insertion tableau of the word (column-strict for arbitrary words)."""
    return insert_word(word)[0]


def word_q_symbol(word: Word) -> Tableau:
    """Recording tableau of the word; standard."""
    return insert_word(word)[1]


def tableau_reading_embedding(tab: Tableau, r: int) -> Word:
    """Reading word of a column-strict tableau as a crystal word of rank r."""
    if not tab.is_column_strict():
        raise ValueError("reading embedding requires a column-strict tableau")
    word = reading_word(tab)
    if any(a > r for a in word):
        raise ValueError(f"entry exceeds rank {r}")
    return word


@dataclass(frozen=True)
class CrystalComponent:
    label: Word                  # lexicographically least member
    words: frozenset[Word]
    q_symbol: Tableau
    shape: tuple[int, ...]


def decompose(n: int, r: int | None = None, check: bool = True) -> list[CrystalComponent]:
    """Partition all r**n words into components, labelled by the common
    recording tableau of their members (constant by the tensor-product
    decomposition theorem; ``check`` verifies it)."""
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")
    if r is None:
        r = n
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    if r**n > MAX_WORDS:
        raise ValueError(f"{r}**{n} words exceed the configured bound {MAX_WORDS}")
    import itertools

    out = []
    seen: set[Word] = set()
    for word in itertools.product(range(1, r + 1), repeat=n):
        if word in seen:
            continue
        comp = component(word, r)
        seen.update(comp)
        label = min(comp)
        q = word_q_symbol(label)
        if check:
            for other in comp:
                if word_q_symbol(other) != q:
                    raise AssertionError(
                        f"recording tableau not constant on the component of {label}"
                    )
        out.append(CrystalComponent(label, comp, q, q.outer))
    out.sort(key=lambda c: c.label)
    return out


def highest_weight_rep(word: Word, r: int) -> Word:
    """The unique all-eps-zero word of the component, reached greedily."""
    word = _check_word(word, r)
    while True:
        for i in range(1, r):
            nxt = e_op(i, word)
            if nxt is not None:
                word = nxt
                break
        else:
            return word


def crystal_edges(n: int, r: int) -> list[tuple[Word, int, Word]]:
    """All (word, i, f_i(word)) triples, for graph export."""
    import itertools

    if r**n > MAX_WORDS:
        raise ValueError(f"{r}**{n} words exceed the configured bound {MAX_WORDS}")
    out = []
    for word in itertools.product(range(1, r + 1), repeat=n):
        for i in range(1, r):
            nxt = f_op(i, word)
            if nxt is not None:
                out.append((word, i, nxt))
    return out


def djm_violations(n: int, r: int) -> tuple[int, list[str]]:
    """Checks for the crystal/insertion correspondence, per component:
    (a) the recording tableau is constant, (b) taking insertion tableaux is a
    bijection onto the column-strict tableaux of the component's shape,
    (c) insertion intertwines the operators with their tableau counterparts
    acting through reading words.  Returns (cases, violations)."""
    violations: list[str] = []
    comps = decompose(n, r, check=False)
    for comp in comps:
        q = comp.q_symbol
        shape = comp.shape
        symbols = {}
        for b in comp.words:
            if word_q_symbol(b) != q:
                violations.append(
                    f"component {comp.label}: word {b} has a different recording tableau"
                )
            symbols[b] = word_p_symbol(b)
        image = set(symbols.values())
        if len(image) != len(comp.words):
            violations.append(f"component {comp.label}: insertion is not injective")
        target = set(semistandard_tableaux(shape, r))
        if image != target:
            violations.append(
                f"component {comp.label}: image has {len(image)} tableaux, "
                f"B(lambda) has {len(target)}"
            )
        for b in comp.words:
            for i in range(1, r):
                for op in (e_op, f_op):
                    b2 = op(i, b)
                    rw = tableau_reading_embedding(symbols[b], r)
                    rw2 = op(i, rw)
                    if (b2 is None) != (rw2 is None):
                        violations.append(
                            f"word {b}, op {op.__name__} i={i}: "
                            f"annihilation mismatch with the reading word"
                        )
                        continue
                    if b2 is None:
                        continue
                    t2 = reading_word_to_tableau(rw2, shape)
                    if t2 is None:
                        violations.append(
                            f"word {b}, op {op.__name__} i={i}: reading word "
                            f"left the tableau crystal"
                        )
                    elif word_p_symbol(b2) != t2:
                        violations.append(
                            f"word {b}, op {op.__name__} i={i}: insertion does "
                            f"not intertwine the operators"
                        )
    return r**n, violations

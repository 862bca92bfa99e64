"""
Kazhdan-Lusztig polynomials for S_n by the descent recursion.

A :class:`KLTable` computes the whole column P_{., w} at once, recursing on
v = s_i w for the smallest descent s_i of w:

    P_{y,w} = P_{s_i y, v} + q P_{y, v}
              - sum over z <= v with s_i z < z and mu(z, v) != 0 of
                mu(z, v) q^((l(w) - l(z)) / 2) P_{y, z}

Only "raised" y are stored, those whose descent set contains the descent set
of w; any other y is first pushed up through the descents of w, which leaves
the polynomial unchanged, so c = 1 in the recursion above.  The mu list of w
consists of the stored entries with a nonzero top-degree coefficient plus the
lower covers s_i w for descents s_i of w (the only non-raised pairs whose mu
can survive the degree bound).

Columns persist to a tab-separated cache file, one record per line:
``y<TAB>w<TAB>c0,c1,...,cd`` with permutations in digit notation.  Files are
written whole via an atomic rename, so concurrent readers see either the old
or the new complete file.
"""

from __future__ import annotations

import os
from pathlib import Path

from .permutations import (
    DEFAULT_MAX_DEGREE,
    Perm,
    all_permutations,
    check_permutation,
    format_permutation,
    identity,
    left_descents,
    length,
    multiply_simple,
    parse_permutation,
    right_descents,
)
from .polynomials import ONE, ZERO, IntPolynomial


class KLTable:
    """Memoized Kazhdan-Lusztig polynomials and mu-coefficients for S_n.

    Safe to share between threads: memo entries are inserted only once fully
    built, so readers see either absence or the final value, and duplicated
    computation is harmless (every recomputation yields the same column).
    """

    def __init__(self, n: int, side: str = "left", cache_dir=None):
        if n < 1:
            raise ValueError(f"degree must be at least 1, got {n}")
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self.n = n
        self.side = side
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        e = identity(n)
        self._columns: dict[Perm, dict[Perm, IntPolynomial]] = {e: {e: ONE}}
        self._supports: dict[Perm, frozenset[Perm]] = {e: frozenset((e,))}
        self._mu_lists: dict[Perm, tuple[tuple[Perm, int], ...]] = {}
        self._desc: dict[Perm, int] = {}
        self._len: dict[Perm, int] = {}
        if self.cache_dir is not None:
            self.load()

    # -- bookkeeping -------------------------------------------------------

    def _length(self, w: Perm) -> int:
        l = self._len.get(w)
        if l is None:
            l = self._len.setdefault(w, length(w))
        return l

    def _desc_mask(self, w: Perm) -> int:
        """Descent set on the recursion side, packed as a bitmask."""
        m = self._desc.get(w)
        if m is None:
            des = left_descents(w) if self.side == "left" else right_descents(w)
            m = 0
            for i in des:
                m |= 1 << (i - 1)
            self._desc[w] = m
        return m

    def _mult(self, w: Perm, i: int) -> Perm:
        return multiply_simple(w, i, self.side)

    def _raise_to(self, y: Perm, wmask: int) -> Perm:
        """Push y up through the descents of w; P_{y,w} is unchanged."""
        while True:
            rest = wmask & ~self._desc_mask(y)
            if not rest:
                return y
            y = self._mult(y, (rest & -rest).bit_length())

    # -- the recursion -----------------------------------------------------

    def support(self, w: Perm) -> frozenset[Perm]:
        """The Bruhat interval {y : y <= w}."""
        s = self._supports.get(w)
        if s is not None:
            return s
        i = (self._desc_mask(w) & -self._desc_mask(w)).bit_length()
        sv = self.support(self._mult(w, i))
        s = frozenset(sv.union(self._mult(z, i) for z in sv))
        self._supports[w] = s
        return s

    def column(self, w: Perm) -> dict[Perm, IntPolynomial]:
        """P_{y,w} for every raised y <= w (descents of w all descend y)."""
        col = self._columns.get(w)
        if col is not None:
            return col
        wmask = self._desc_mask(w)
        i = (wmask & -wmask).bit_length()
        v = self._mult(w, i)
        self.column(v)
        lw = self._length(w)
        ibit = 1 << (i - 1)
        muv = [(z, m) for z, m in self.mu_list(v) if self._desc_mask(z) & ibit]
        col = {}
        for y in self.support(w):
            if wmask & ~self._desc_mask(y):
                continue
            p = self._lookup(self._mult(y, i), v) + self._lookup(y, v).shift(1)
            for z, m in muv:
                pyz = self._lookup(y, z)
                if pyz:
                    p = p - pyz.shift((lw - self._length(z)) // 2) * m
            col[y] = p
        self._columns[w] = col
        return col

    def _lookup(self, y: Perm, w: Perm) -> IntPolynomial:
        if y == w:
            return ONE
        if self._length(y) >= self._length(w):
            return ZERO
        return self.column(w).get(self._raise_to(y, self._desc_mask(w)), ZERO)

    def mu_list(self, w: Perm) -> tuple[tuple[Perm, int], ...]:
        """All (z, mu(z, w)) with z < w and mu(z, w) != 0."""
        got = self._mu_lists.get(w)
        if got is not None:
            return got
        lw = self._length(w)
        pairs = []
        for y, p in self.column(w).items():
            if y == w:
                continue
            d = lw - self._length(y)
            if d % 2:
                m = p.coeff((d - 1) // 2)
                if m:
                    pairs.append((y, m))
        mask = self._desc_mask(w)
        while mask:
            i = (mask & -mask).bit_length()
            mask &= mask - 1
            pairs.append((self._mult(w, i), 1))
        got = tuple(sorted(pairs))
        self._mu_lists[w] = got
        return got

    # -- public queries ----------------------------------------------------

    def polynomial(self, y: Perm, w: Perm) -> IntPolynomial:
        """P_{y,w}(q); the zero polynomial when y <= w fails."""
        y, w = tuple(y), tuple(w)
        if len(y) != self.n or len(w) != self.n:
            raise ValueError(f"degree mismatch: table is for S_{self.n}")
        return self._lookup(y, w)

    def mu(self, y: Perm, w: Perm) -> int:
        """Coefficient of q^((l(w)-l(y)-1)/2) in P_{y,w}; 0 unless the
        exponent is a nonnegative integer and y < w."""
        y, w = tuple(y), tuple(w)
        d = self._length(w) - self._length(y)
        if d <= 0 or d % 2 == 0:
            return 0
        return self._lookup(y, w).coeff((d - 1) // 2)

    def mu_sym(self, y: Perm, w: Perm) -> int:
        """mu on whichever side of the pair is shorter; symmetric."""
        return self.mu(y, w) if self._length(y) < self._length(w) else self.mu(w, y)

    def warm(self) -> None:
        """Compute every column, shortest elements first."""
        perms = sorted(
            all_permutations(self.n, limit=max(self.n, DEFAULT_MAX_DEGREE)),
            key=lambda p: (self._length(p), p),
        )
        for w in perms:
            self.column(w)

    def entry_count(self) -> int:
        return sum(len(col) for col in self._columns.values())

    # -- disk cache --------------------------------------------------------

    def cache_path(self) -> Path:
        if self.cache_dir is None:
            raise ValueError("no cache directory configured")
        suffix = "" if self.side == "left" else ".right"
        return self.cache_dir / f"kl_s{self.n}{suffix}.tsv"

    def save(self) -> None:
        """Write every computed column; atomic replace of the cache file."""
        path = self.cache_path()
        path.parent.mkdir(parents=True, exist_ok=True)
        keyed = lambda p: (self._length(p), p)
        lines = []
        for w in sorted(self._columns, key=keyed):
            col = self._columns[w]
            wtext = format_permutation(w)
            for y in sorted(col, key=keyed):
                coeffs = ",".join(str(c) for c in col[y].coeffs)
                lines.append(f"{format_permutation(y)}\t{wtext}\t{coeffs}")
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text("".join(line + "\n" for line in lines))
        os.replace(tmp, path)

    def load(self) -> int:
        """Merge columns from the cache file, if present; returns rows read."""
        path = self.cache_path()
        if not path.exists():
            return 0
        loaded: dict[Perm, dict[Perm, IntPolynomial]] = {}
        count = 0
        for line in path.read_text().splitlines():
            if not line.strip():
                continue
            ytext, wtext, ctext = line.split("\t")
            y = parse_permutation(ytext)
            w = parse_permutation(wtext)
            poly = IntPolynomial(int(c) for c in ctext.split(","))
            loaded.setdefault(w, {})[y] = poly
            count += 1
        self._columns.update(loaded)
        return count


_DEFAULT_TABLES: dict[tuple[int, str], KLTable] = {}


def default_table(n: int, side: str = "left") -> KLTable:
    """A process-wide shared table per degree; cheap to call repeatedly."""
    key = (n, side)
    table = _DEFAULT_TABLES.get(key)
    if table is None:
        table = _DEFAULT_TABLES.setdefault(key, KLTable(n, side))
    return table


def kl_polynomial(y: Perm, w: Perm) -> IntPolynomial:
    """P_{y,w}(q) via the shared table for the common degree."""
    y = check_permutation(y)
    w = check_permutation(w)
    if len(y) != len(w):
        raise ValueError(f"degree mismatch: {len(y)} vs {len(w)}")
    return default_table(len(y)).polynomial(y, w)


def mu(y: Perm, w: Perm) -> int:
    y = check_permutation(y)
    w = check_permutation(w)
    if len(y) != len(w):
        raise ValueError(f"degree mismatch: {len(y)} vs {len(w)}")
    return default_table(len(y)).mu(y, w)


def mu_sym(y: Perm, w: Perm) -> int:
    y = check_permutation(y)
    w = check_permutation(w)
    if len(y) != len(w):
        raise ValueError(f"degree mismatch: {len(y)} vs {len(w)}")
    return default_table(len(y)).mu_sym(y, w)

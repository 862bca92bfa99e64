"""
Exhaustive verification suites over S_n.  Each suite returns a
:class:`Report`; a suite passes exactly when its violation list is empty.
Violation messages carry enough provenance (elements, descent sets, mu
values) to debug a counterexample directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import crystal as crystal_mod
from .cells import cells as cell_partition
from .hecke import bar, c_prime, canonical_basis_by_bar
from .kl import KLTable, default_table
from .knuth import in_knuth_domain, knuth_class, knuth_move
from .permutations import (
    DEFAULT_MAX_DEGREE,
    all_permutations,
    compose,
    format_permutation,
    length,
    longest_element,
    right_descents,
)
from .tableaux import evacuation, p_symbol, q_symbol


@dataclass
class Report:
    suite: str
    n: int
    cases: int
    violations: list[str] = field(default_factory=list)
    info: dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [
            f"suite: {self.suite}",
            f"n: {self.n}",
            f"cases: {self.cases}",
        ]
        for key in sorted(self.info):
            out.append(f"{key}: {self.info[key]}")
        out.append(f"violations: {len(self.violations)}")
        out.extend(f"  {v}" for v in self.violations[:100])
        out.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "cases": self.cases,
            "info": dict(sorted(self.info.items())),
            "violations": list(self.violations),
            "result": "pass" if self.ok else "fail",
        }


def _perms(n: int):
    return list(all_permutations(n, limit=max(n, DEFAULT_MAX_DEGREE)))


def _fmt(w) -> str:
    return format_permutation(w)


def verify_theorem_a(n: int, table: KLTable | None = None) -> Report:
    """Left cells from the mu graph versus fibers of the recording tableau."""
    report = Report("theorem-a", n, cases=0)
    part = cell_partition(n, "left", table)
    fibers: dict = {}
    perms = _perms(n)
    report.cases = len(perms)
    for w in perms:
        fibers.setdefault(q_symbol(w), set()).add(w)
    qpart = {frozenset(f) for f in fibers.values()}
    cpart = part.as_sets()
    report.info["cells"] = str(len(cpart))
    report.info["q-symbols"] = str(len(qpart))
    if cpart != qpart:
        for y in perms:
            for w in perms:
                if y < w:
                    by_cell = part.same_cell(y, w)
                    by_q = q_symbol(y) == q_symbol(w)
                    if by_cell != by_q:
                        report.violations.append(
                            f"y={_fmt(y)} w={_fmt(w)} same-cell={by_cell} same-Q={by_q}"
                        )
    return report


def verify_knuth_classes(n: int) -> Report:
    """Knuth closure classes versus fibers of the insertion tableau."""
    report = Report("knuth", n, cases=0)
    fibers: dict = {}
    perms = _perms(n)
    report.cases = len(perms)
    for w in perms:
        fibers.setdefault(p_symbol(w), set()).add(w)
    report.info["classes"] = str(len(fibers))
    done = set()
    for w in perms:
        if w in done:
            continue
        cls = knuth_class(w)
        done.update(cls)
        if cls != frozenset(fibers[p_symbol(w)]):
            report.violations.append(
                f"w={_fmt(w)} knuth class {sorted(map(_fmt, cls))} != "
                f"P-fiber {sorted(map(_fmt, fibers[p_symbol(w)]))}"
            )
    return report


def verify_evacuation(n: int) -> Report:
    """transpose(evacuation(Q(w))) == Q(w w0), and evacuation is an involution."""
    report = Report("evacuation", n, cases=0)
    w0 = longest_element(n)
    perms = _perms(n)
    report.cases = len(perms)
    for w in perms:
        q = q_symbol(w)
        ev = evacuation(q)
        if evacuation(ev) != q:
            report.violations.append(f"w={_fmt(w)}: evacuation is not involutive")
        if ev.transpose() != q_symbol(compose(w, w0)):
            report.violations.append(
                f"w={_fmt(w)}: transpose(evac(Q(w))) != Q(w.w0), "
                f"Q(w)={q.to_json()}"
            )
    return report


def verify_bar_invariance(n: int, table: KLTable | None = None) -> Report:
    """C'_w from the recursion is bar-invariant, satisfies the off-diagonal
    degree bound, and matches the basis solved from bar invariance alone."""
    report = Report("bar-invariance", n, cases=0)
    if table is None:
        table = default_table(n)
    oracle = canonical_basis_by_bar(n)
    perms = _perms(n)
    report.cases = len(perms)
    for w in perms:
        cw = c_prime(w, table)
        if bar(cw) != cw:
            report.violations.append(f"w={_fmt(w)}: C'_w is not bar-invariant")
        for y, coef in cw.coords.items():
            if y == w:
                continue
            top = coef.shifted(length(y)).max_exponent
            if top is not None and top > -1:
                report.violations.append(
                    f"w={_fmt(w)} y={_fmt(y)}: normalized coordinate has "
                    f"v-degree {top} > -1"
                )
        if cw != oracle[w]:
            report.violations.append(
                f"w={_fmt(w)}: recursion and bar-invariance solve disagree"
            )
    return report


def verify_prop_descents(n: int, table: KLTable | None = None) -> Report:
    """Right descent sets grow down the left preorder; constant on cells."""
    report = Report("descents", n, cases=0)
    part = cell_partition(n, "left", table)
    perms = _perms(n)
    cases = 0
    for y in perms:
        ry = right_descents(y)
        for w in perms:
            if not part.leq_elements(y, w):
                continue
            cases += 1
            rw = right_descents(w)
            if not ry >= rw:
                report.violations.append(
                    f"y={_fmt(y)} w={_fmt(w)} with y <=_L w but R(y)={sorted(ry)} "
                    f"does not contain R(w)={sorted(rw)}"
                )
            if part.same_cell(y, w) and ry != rw:
                report.violations.append(
                    f"y={_fmt(y)} w={_fmt(w)} in one left cell but "
                    f"R(y)={sorted(ry)} != R(w)={sorted(rw)}"
                )
    report.cases = cases
    return report


def verify_knuth_mu(n: int, table: KLTable | None = None) -> Report:
    """mu survives the Knuth move, the move preserves left cells, and every
    element is right-equivalent to its image."""
    report = Report("knuth-mu", n, cases=0)
    if table is None:
        table = default_table(n)
    left = cell_partition(n, "left", table)
    right = cell_partition(n, "right", table)
    perms = _perms(n)
    cases = 0
    for i in range(1, n - 1):
        for i2, j2 in ((i, i + 1), (i + 1, i)):
            domain = [w for w in perms if in_knuth_domain(w, i2, j2)]
            images = {w: knuth_move(w, i2, j2) for w in domain}
            for w in domain:
                cases += 1
                if not right.same_cell(w, images[w]):
                    report.violations.append(
                        f"w={_fmt(w)} K_{i2}{j2}(w)={_fmt(images[w])} "
                        f"not in one right cell"
                    )
            for y in domain:
                for w in domain:
                    if y >= w:
                        continue
                    m = table.mu_sym(y, w)
                    if m:
                        cases += 1
                        m2 = table.mu_sym(images[y], images[w])
                        if not m2:
                            report.violations.append(
                                f"y={_fmt(y)} w={_fmt(w)} mu={m} but "
                                f"mu(K(y)|K(w))=0 for (i,j)=({i2},{j2}), "
                                f"K(y)={_fmt(images[y])} K(w)={_fmt(images[w])}"
                            )
                    if left.same_cell(y, w):
                        cases += 1
                        if not left.same_cell(images[y], images[w]):
                            report.violations.append(
                                f"y={_fmt(y)} w={_fmt(w)} share a left cell but "
                                f"K_{i2}{j2} images do not"
                            )
    report.cases = cases
    return report


def verify_crystal_djm(n: int) -> Report:
    """Recording-tableau constancy, bijectivity onto the tableau crystal,
    and operator intertwining, over all words with r = n."""
    report = Report("crystal-djm", n, cases=0)
    report.cases, report.violations = crystal_mod.djm_violations(n, n)
    return report


def verify_crystal_theorem_a(n: int, table: KLTable | None = None) -> Report:
    """On permutation words with r = n: crystal components, recording-tableau
    fibers, and KL left cells induce one partition."""
    report = Report("crystal-theorem-a", n, cases=0)
    perms = _perms(n)
    report.cases = len(perms)
    by_component: dict = {}
    by_q: dict = {}
    for w in perms:
        by_component.setdefault(crystal_mod.highest_weight_rep(w, n), set()).add(w)
        by_q.setdefault(q_symbol(w), set()).add(w)
    crystal_part = {frozenset(s) for s in by_component.values()}
    q_part = {frozenset(s) for s in by_q.values()}
    cell_part = cell_partition(n, "left", table).as_sets()
    report.info["components"] = str(len(crystal_part))
    if crystal_part != q_part:
        report.violations.append(
            f"crystal components ({len(crystal_part)}) differ from "
            f"Q-symbol fibers ({len(q_part)})"
        )
    if q_part != cell_part:
        report.violations.append(
            f"Q-symbol fibers ({len(q_part)}) differ from "
            f"left cells ({len(cell_part)})"
        )
    return report


SUITES = {
    "theorem-a": verify_theorem_a,
    "knuth": verify_knuth_classes,
    "evacuation": verify_evacuation,
    "bar-invariance": verify_bar_invariance,
    "descents": verify_prop_descents,
    "knuth-mu": verify_knuth_mu,
    "crystal-djm": verify_crystal_djm,
    "crystal-theorem-a": verify_crystal_theorem_a,
}

# suites that accept a shared KL table
_TABLE_SUITES = {
    "theorem-a",
    "bar-invariance",
    "descents",
    "knuth-mu",
    "crystal-theorem-a",
}


def run_suite(name: str, n: int, table: KLTable | None = None) -> Report:
    """Dispatch a suite by name and time it."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    start = time.perf_counter()
    if name in _TABLE_SUITES:
        report = SUITES[name](n, table)
    else:
        report = SUITES[name](n)
    report.wall_time = time.perf_counter() - start
    return report

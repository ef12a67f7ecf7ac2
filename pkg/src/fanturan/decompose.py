"""Heaviness classes of subedges and hyperedges, and the counting audits.

For a threshold ``t``, an ``(r-1)``-subedge with heaviness ``c`` belongs to
``E_i`` when ``(i-1)t < c <= it`` for some ``i <= r``; heavier subedges go to
``heavy_rest``. A hyperedge lands in the first of

    H_r, ..., H_1, H', cells            (general r)
    H_3, H_2, H_4, H_1, H'              (r = 3)

whose condition it meets; ``H_i`` asks for at least ``i`` subedges in
``E_i``. The audits check the pair-counting inequalities that follow from
every ``E_i`` subedge lying in at most ``it`` hyperedges; they hold for every
hypergraph, so a violation means a bug.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .hypercore import Edge, Hypergraph, HypergraphError, UnsupportedUniformityError


@dataclass
class EdgeClasses:
    t: int
    r: int
    classes: dict[int, set[Edge]]
    heavy_rest: set[Edge]
    heaviness: dict[Edge, int]

    @property
    def counts(self) -> dict[int, int]:
        return {i: len(s) for i, s in self.classes.items()}

    def class_of(self, s: Edge) -> int | None:
        """Index ``i`` of the class holding ``s``, or ``None`` for heavy_rest."""
        c = self.heaviness[s]
        i = -(-c // self.t)
        return i if i <= self.r else None

    def vector(self, e: Edge) -> tuple[int, ...]:
        """``(a_1, ..., a_r)``: how many subedges of ``e`` lie in each ``E_i``."""
        a = [0] * self.r
        for s in combinations(e, self.r - 1):
            i = self.class_of(s)
            if i is not None:
                a[i - 1] += 1
        return tuple(a)


@dataclass
class HyperedgeClasses:
    t: int
    r: int
    h: dict[int, set[Edge]]
    prime: set[Edge]
    cells: dict[tuple[int, ...], set[Edge]] = field(default_factory=dict)
    h4: set[Edge] | None = None

    @property
    def counts(self) -> dict[str, int]:
        out = {f"h{i}": len(s) for i, s in self.h.items()}
        if self.h4 is not None:
            out["h4"] = len(self.h4)
        out["prime"] = len(self.prime)
        out["cells"] = sum(len(s) for s in self.cells.values())
        return out

    def label(self, e: Edge) -> str:
        for i, s in self.h.items():
            if e in s:
                return f"H{i}"
        if self.h4 is not None and e in self.h4:
            return "H4"
        if e in self.prime:
            return "H'"
        for key, s in self.cells.items():
            if e in s:
                return "cell" + str(key)
        raise KeyError(e)


def classify_pairs(h: Hypergraph, t: int) -> EdgeClasses:
    """Split the ``(r-1)``-subedges occurring in ``h`` by heaviness."""
    if t < 1:
        raise HypergraphError(f"threshold t must be positive, got {t}")
    r = h.r
    heav: Counter[Edge] = Counter()
    for e in h.edges:
        heav.update(combinations(e, r - 1))
    classes: dict[int, set[Edge]] = {i: set() for i in range(1, r + 1)}
    rest: set[Edge] = set()
    for s, c in heav.items():
        i = -(-c // t)
        (classes[i] if i <= r else rest).add(s)
    return EdgeClasses(t, r, classes, rest, dict(heav))


def sorted_heaviness(ec: EdgeClasses, e: Edge) -> list[int]:
    return sorted(ec.heaviness[s] for s in combinations(e, ec.r - 1))


def in_prime_shape(ec: EdgeClasses, e: Edge) -> bool:
    """The ``i``-th lightest subedge of ``e`` is ``(it + 1)``-heavy for all ``i``."""
    return all(c >= i * ec.t + 1 for i, c in enumerate(sorted_heaviness(ec, e), start=1))


def classify_hyperedges_3(h: Hypergraph, t: int, edge_classes: EdgeClasses | None = None) -> HyperedgeClasses:
    if h.r != 3:
        raise UnsupportedUniformityError(f"use classify_hyperedges_general for r = {h.r}")
    ec = edge_classes or classify_pairs(h, t)
    out = HyperedgeClasses(t, 3, {1: set(), 2: set(), 3: set()}, set(), h4=set())
    for e in h.edges:
        a1, a2, a3 = ec.vector(e)
        if a3 >= 3:
            out.h[3].add(e)
        elif a2 >= 2:
            out.h[2].add(e)
        elif a2 >= 1 and a3 >= 2:
            out.h4.add(e)
        elif a1 >= 1:
            out.h[1].add(e)
        else:
            out.prime.add(e)
    return out


def classify_hyperedges_general(h: Hypergraph, t: int, edge_classes: EdgeClasses | None = None) -> HyperedgeClasses:
    if h.r < 3:
        raise UnsupportedUniformityError(f"classification needs r >= 3, got {h.r}")
    r = h.r
    ec = edge_classes or classify_pairs(h, t)
    out = HyperedgeClasses(t, r, {i: set() for i in range(1, r + 1)}, set())
    for e in h.edges:
        a = ec.vector(e)
        for i in range(r, 0, -1):
            if a[i - 1] >= i:
                out.h[i].add(e)
                break
        else:
            if in_prime_shape(ec, e):
                out.prime.add(e)
            else:
                out.cells.setdefault(a, set()).add(e)
    return out


def prefix_condition(key: tuple[int, ...]) -> bool:
    """Some prefix has ``a_1 + ... + a_i >= i``."""
    total = 0
    for i, a in enumerate(key, start=1):
        total += a
        if total >= i:
            return True
    return False


@dataclass
class Inequality:
    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": _num(self.lhs), "rhs": _num(self.rhs), "slack": _num(self.slack)}


def _num(x: Fraction) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


@dataclass
class AuditReport:
    t: int
    r: int
    e: dict[int, int]
    h: dict[str, int]
    inequalities: list[Inequality]
    prime_violations: list[Edge] = field(default_factory=list)
    cell_violations: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def violations(self) -> list[Inequality]:
        return [q for q in self.inequalities if not q.holds]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.prime_violations and not self.cell_violations

    @property
    def slacks(self) -> dict[str, Fraction]:
        return {q.name: q.slack for q in self.inequalities}

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "r": self.r,
            "e": {str(i): v for i, v in self.e.items()},
            "h": dict(self.h),
            "inequalities": [q.to_dict() for q in self.inequalities],
            "prime_property_holds": not self.prime_violations,
            "prime_violations": [list(e) for e in self.prime_violations],
            "cell_violations": [list(k) for k in self.cell_violations],
            "ok": self.ok,
        }


def counting_audit_3(h: Hypergraph, t: int) -> AuditReport:
    ec = classify_pairs(h, t)
    hc = classify_hyperedges_3(h, t, ec)
    e1, e2, e3 = (len(ec.classes[i]) for i in (1, 2, 3))
    h1, h2, h3 = (len(hc.h[i]) for i in (1, 2, 3))
    h4 = len(hc.h4)
    F = Fraction
    ineqs = [
        Inequality("h1 <= t*e1", F(h1), F(t * e1)),
        Inequality("2*h2 + h4 <= 2t*e2", F(2 * h2 + h4), F(2 * t * e2)),
        Inequality("3*h3 + 2*h4 <= 3t*e3", F(3 * h3 + 2 * h4), F(3 * t * e3)),
        Inequality("h1 + h2 + h3 + 7/6*h4 <= t*(e1+e2+e3)", F(h1 + h2 + h3) + F(7, 6) * h4, F(t * (e1 + e2 + e3))),
    ]
    bad_prime = []
    for e in sorted(hc.prime):
        a, b, c = sorted_heaviness(ec, e)
        if not (a >= t + 1 and b >= 2 * t + 1 and c >= 3 * t + 1):
            bad_prime.append(e)
    return AuditReport(
        t, 3, {1: e1, 2: e2, 3: e3},
        {"h1": h1, "h2": h2, "h3": h3, "h4": h4, "prime": len(hc.prime)},
        ineqs, bad_prime,
    )


def counting_audit_general(h: Hypergraph, t: int) -> AuditReport:
    r = h.r
    ec = classify_pairs(h, t)
    hc = classify_hyperedges_general(h, t, ec)
    e = {i: len(ec.classes[i]) for i in range(1, r + 1)}
    hs = {i: len(hc.h[i]) for i in range(1, r + 1)}
    h0 = sum(len(s) for s in hc.cells.values())
    F = Fraction
    ineqs = []
    weighted = F(0)
    for i in range(1, r + 1):
        lhs = i * hs[i] + sum(key[i - 1] * len(s) for key, s in hc.cells.items())
        ineqs.append(Inequality(f"{i}*|H{i}| + sum a{i}*|cell| <= {i}t*|E{i}|", F(lhs), F(i * t * e[i])))
        weighted += F(lhs, i)
    total_e = sum(e.values())
    ineqs.append(Inequality("t*sum|Ei| <= t*C(n,r-1)", F(t * total_e), F(t * comb(h.n, r - 1))))
    ineqs.append(Inequality("sum|Hi| + sum_i a_i/i*|cell| <= t*sum|Ei|", weighted, F(t * total_e)))
    ineqs.append(Inequality("sum|Hi| + |H0| <= t*sum|Ei|", F(sum(hs.values()) + h0), F(t * total_e)))
    bad_prime = [x for x in sorted(hc.prime) if not in_prime_shape(ec, x)]
    bad_cells = sorted(k for k in hc.cells if not prefix_condition(k))
    counts = {f"h{i}": v for i, v in hs.items()}
    counts["h0"] = h0
    counts["prime"] = len(hc.prime)
    return AuditReport(t, r, e, counts, ineqs, bad_prime, bad_cells)

"""Invertibility criterion, determinant oracle, naturality, and sweeps.

A circle function assigns ring values to points of the p-power torsion of
Q/Z; it parameterizes a linear map from the group algebra to functions on
the dual, with matrix entry fn(<v,l>).  The closed-form "spike" function
(2 at the points 1/p^s, 1 elsewhere) makes every such matrix invertible;
a three-condition criterion decides invertibility for arbitrary table
functions, and a brute-force determinant provides the independent verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .chargauss import enumerate_characters, is_primitive, standard_ring, units_mod
from .exactring import CycloElem, CycloRing, get_ring, is_unit
from .finab import (FinAbGroup, GroupHom, PadicCircle, circle_points, dual_elements,
                    dual_hom, element_index, elements, enumerate_groups, enumerate_homs,
                    pairing, pairing_numerators)
from .groupalgebra import transform_matrix
from .matrix import determinant
from .report import VerifyReport, run_items


class CircleFunction:
    """A function from the p-power torsion circle into a cyclotomic ring."""

    __slots__ = ("kind", "prime", "level", "values", "ring")

    def __init__(self, kind: str, prime: int, level: int | None,
                 values: Mapping[PadicCircle, CycloElem] | None,
                 ring: CycloRing | None):
        self.kind = kind
        self.prime = prime
        self.level = level
        self.values = values
        self.ring = ring

    @classmethod
    def spike(cls, p: int) -> "CircleFunction":
        """Value 2 at every point 1/p^s with s >= 1, value 1 elsewhere; total."""
        return cls("spike", p, None, None, None)

    @classmethod
    def table(cls, p: int, level: int,
              values: Mapping[PadicCircle, CycloElem],
              ring: CycloRing) -> "CircleFunction":
        """Explicit values on all points of level <= level."""
        points = circle_points(p, level)
        if set(values.keys()) != set(points):
            raise ValueError("table must cover exactly the points up to the level")
        for v in values.values():
            if v.ring != ring:
                raise ValueError("table value from the wrong ring")
        return cls("table", p, level, dict(values), ring)

    def covers_level(self, level: int) -> bool:
        return self.level is None or level <= self.level

    def value_at(self, x: PadicCircle, ring: CycloRing) -> CycloElem:
        if x.prime != self.prime:
            raise ValueError("point from the wrong prime")
        if self.kind == "spike":
            return ring.from_int(2 if x.numerator == 1 else 1)
        if x.level > self.level:
            raise ValueError(f"point {x} beyond table level {self.level}")
        if ring != self.ring:
            raise ValueError("table values live in a different ring")
        return self.values[x]

    def label(self) -> str:
        if self.kind == "spike":
            return f"spike(p={self.prime})"
        return f"table(p={self.prime}, level={self.level})"

    def __repr__(self):
        return f"CircleFunction({self.label()})"


def spike_ring(p: int) -> CycloRing:
    """The spike function takes integer values, so conductor 1 suffices."""
    return get_ring(1, p)


@dataclass(slots=True)
class CriterionReport:
    """Outcome of the three-condition invertibility criterion."""

    condition1: bool
    witness1: CycloElem
    condition2: bool
    witness2: CycloElem
    condition3: list[tuple[int, tuple[int, ...], CycloElem, bool]] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return (self.condition1 and self.condition2
                and all(ok for _, _, _, ok in self.condition3))

    def to_json(self) -> dict:
        return {
            "condition1": {"pass": self.condition1,
                           "witness": self.witness1.coeff_strings()},
            "condition2": {"pass": self.condition2,
                           "witness": self.witness2.coeff_strings()},
            "condition3": [
                {"level": r, "character": list(exps),
                 "witness": value.coeff_strings(), "pass": ok}
                for r, exps, value, ok in self.condition3
            ],
            "overall": self.overall,
        }


def invertibility_criterion(fn: CircleFunction, p: int, levels: int,
                            ring: CycloRing | None = None) -> CriterionReport:
    """Decide invertibility of the parameterized map on all groups killed by p^levels.

    Three conditions, each a unit test: the value at 0; the sum of the
    level-one increments; and, for every level r <= levels and every
    primitive character chi mod p^r, the chi^(-1)-twisted increment sum.
    """
    if not fn.covers_level(levels):
        raise ValueError("circle function not defined up to the requested level")
    if ring is None:
        ring = fn.ring if fn.kind == "table" else standard_ring(p, levels)
    zero_value = fn.value_at(PadicCircle.zero(p), ring)
    c1 = is_unit(zero_value)
    s2 = ring.zero
    for j in range(1, p):
        s2 = s2 + (fn.value_at(PadicCircle(p, j, 1), ring) - zero_value)
    c2 = is_unit(s2)
    entries = []
    for r in range(1, levels + 1):
        N = p ** r
        for chi in enumerate_characters(p, r, ring):
            if not is_primitive(chi):
                continue
            s = ring.zero
            for t in units_mod(N):
                diff = fn.value_at(PadicCircle(p, t, r), ring) - zero_value
                if diff:
                    s = s + chi.eval(pow(t, -1, N)) * diff
            entries.append((r, chi.exponents, s, is_unit(s)))
    return CriterionReport(c1, zero_value, c2, s2, entries)


def transform_determinant(group: FinAbGroup, fn: CircleFunction,
                          ring: CycloRing) -> CycloElem:
    return determinant(transform_matrix(group, fn, ring))


def matrix_is_invertible(group: FinAbGroup, fn: CircleFunction,
                         ring: CycloRing) -> bool:
    """Brute-force verdict: the determinant of the transform matrix is a unit."""
    return is_unit(transform_determinant(group, fn, ring))


# -- criterion versus determinant, on seeded random tables ---------------


def random_table_function(p: int, r: int, rng: random.Random,
                          ring: CycloRing | None = None) -> CircleFunction:
    """A table drawn from the fixed pool {0, 1, 2, zeta, zeta - 1, p}."""
    if ring is None:
        ring = standard_ring(p, r)
    pool = [ring.zero, ring.one, ring.from_int(2), ring.zeta(1),
            ring.zeta(1) - ring.one, ring.from_int(p)]
    values = {point: pool[rng.randrange(len(pool))] for point in circle_points(p, r)}
    return CircleFunction.table(p, r, values, ring)


def criterion_vs_determinant(p: int, r: int, samples: int, seed: int,
                             extra_groups: int = 2) -> VerifyReport:
    """Per sample: criterion verdict must equal the determinant verdict on Z/p^r.

    ``extra_groups`` additional groups of exponent p^r (order at most
    p^(r+1)) are drawn per sample as confirmation of the same verdict.
    """
    rng = random.Random(seed)
    ring = standard_ring(p, r)
    decision_group = FinAbGroup(p, (r,))
    pool = [g for g in enumerate_groups(p, p ** (r + 1))
            if g.exponents and g.exponents[0] == r]
    report = VerifyReport("verify-criterion-oracle",
                          {"p": p, "r": r, "samples": samples, "seed": seed,
                           "extra_groups": extra_groups})
    for i in range(samples):
        fn = random_table_function(p, r, rng, ring)
        v_criterion = invertibility_criterion(fn, p, r, ring).overall
        v_det = matrix_is_invertible(decision_group, fn, ring)
        ok = v_criterion == v_det
        extras = {}
        for _ in range(extra_groups):
            g = pool[rng.randrange(len(pool))]
            v_extra = matrix_is_invertible(g, fn, ring)
            extras[g.notation()] = v_extra
            ok = ok and (v_extra == v_criterion)
        report.add(f"sample-{i}", f"p={p}, r={r}, sample {i}", ok,
                   {"criterion": v_criterion, "determinant": v_det,
                    "extra": extras})
    return report


# -- naturality -----------------------------------------------------------


def _value_id_rows(group: FinAbGroup, fn: CircleFunction, ring: CycloRing,
                   ids: dict[CycloElem, int]) -> list[list[int]]:
    """Rows of fn-value ids over the pairing table, sharing the id map."""
    p = group.prime
    e1 = group.exponents[0] if group.exponents else 0
    point_ids = {}
    mod = p ** e1
    for t in range(mod):
        value = fn.value_at(PadicCircle(p, t, e1), ring)
        point_ids[t] = ids.setdefault(value, len(ids))
    table = pairing_numerators(group)
    return [[point_ids[t] for t in row] for row in table]


def naturality_check(f: GroupHom, fn: CircleFunction, ring: CycloRing) -> bool:
    """Entrywise check that the transform commutes with the homomorphism.

    For every v in the source and l over the target's dual, the value at
    <f(v), l> must equal the value at <v, f_dual(l)>.
    """
    V, W = f.source, f.target
    for g in (V, W):
        e1 = g.exponents[0] if g.exponents else 0
        if not fn.covers_level(e1):
            raise ValueError("circle function not defined at the group's level")
    fs = dual_hom(f)
    for v in elements(V):
        w = f.apply(v)
        for l in dual_elements(W):
            lhs = fn.value_at(pairing(w, l), ring)
            rhs = fn.value_at(pairing(v, fs.apply_dual(l)), ring)
            if lhs != rhs:
                return False
    return True


def _naturality_pair(V: FinAbGroup, W: FinAbGroup, fn: CircleFunction,
                     ring: CycloRing, limit: int) -> tuple[bool, int, dict | None]:
    """All homomorphisms V -> W at once, on integer index tables."""
    ids: dict[CycloElem, int] = {}
    rows_v = _value_id_rows(V, fn, ring, ids)
    rows_w = _value_id_rows(W, fn, ring, ids)
    els_v = elements(V)
    dual_w = dual_elements(W)
    nV, nW = V.order, W.order
    count = 0
    for f in enumerate_homs(V, W, limit=limit):
        count += 1
        fv = [element_index(W, f._apply_coords(v.coords)) for v in els_v]
        fs = dual_hom(f)
        fsl = [element_index(V, fs._apply_coords(l.coords)) for l in dual_w]
        for v in range(nV):
            row_w = rows_w[fv[v]]
            row_v = rows_v[v]
            if any(row_w[l] != row_v[fsl[l]] for l in range(nW)):
                return False, count, {"hom": [list(r) for r in f.matrix],
                                      "source": V.notation(), "target": W.notation()}
    return True, count, None


def naturality_sweep(p: int, max_order: int, fn: CircleFunction | None = None,
                     ring: CycloRing | None = None, limit: int = 1 << 20,
                     jobs: int = 1) -> VerifyReport:
    """Naturality squares for every homomorphism between groups up to the bound."""
    fn = fn if fn is not None else CircleFunction.spike(p)
    if ring is None:
        ring = fn.ring if fn.kind == "table" else spike_ring(p)
    groups = enumerate_groups(p, max_order)
    report = VerifyReport("verify-naturality",
                          {"p": p, "max_order": max_order, "alpha": fn.label()})
    pairs = [(V, W) for V in groups for W in groups]

    def worker(pair):
        V, W = pair
        ok, count, witness = _naturality_pair(V, W, fn, ring, limit)
        payload = {"homs": count}
        if witness is not None:
            payload["failure"] = witness
        return (f"natural-{V.notation()}-to-{W.notation()}",
                f"{V.notation()} -> {W.notation()}", ok, payload)

    for ident, subject, ok, payload in run_items(pairs, worker, jobs):
        report.add(ident, subject, ok, payload)
    return report


# -- the full sweep --------------------------------------------------------


def natural_iso_sweep(p: int, max_order: int, hom_order_bound: int | None = None,
                      fn: CircleFunction | None = None,
                      ring: CycloRing | None = None,
                      dump_matrix: bool = False, jobs: int = 1) -> VerifyReport:
    """Determinant-unit check for every group, plus naturality up to a sub-bound."""
    fn = fn if fn is not None else CircleFunction.spike(p)
    if ring is None:
        ring = fn.ring if fn.kind == "table" else spike_ring(p)
    report = VerifyReport("verify-iso",
                          {"p": p, "max_order": max_order, "alpha": fn.label(),
                           "hom_order_bound": hom_order_bound,
                           "conductor": ring.conductor})
    groups = enumerate_groups(p, max_order)

    def worker(group):
        mat = transform_matrix(group, fn, ring)
        det = determinant(mat)
        ok = is_unit(det)
        payload: dict = {"determinant": det.coeff_strings()}
        if dump_matrix:
            payload["matrix"] = mat.to_json()
        return (f"iso-{group.notation()}", f"V={group.notation()}", ok, payload)

    for ident, subject, ok, payload in run_items(groups, worker, jobs):
        report.add(ident, subject, ok, payload)
    if hom_order_bound:
        sub = naturality_sweep(p, min(hom_order_bound, max_order), fn, ring, jobs=jobs)
        report.extend(sub.checks)
    return report

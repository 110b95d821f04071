"""Group algebras k[V], function algebras on the dual, and Fourier inversion.

Elements of k[V] are coefficient vectors indexed by the lexicographic
element order; functions on the dual are value vectors indexed the same
way.  The evaluation map sends a basis element [v] to the function
l -> zeta^<v,l>; its inverse is synthesis from the Fourier transform
f^(v) = |V|^(-1) sum_l f(l) zeta^(-<v,l>).  Hot loops accumulate
root-of-unity exponents in an integer vector and reduce once.
"""

from __future__ import annotations

from typing import Sequence

from .chargauss import enumerate_characters, units_mod
from .exactring import CycloElem, CycloRing, is_unit
from .finab import (FinAbGroup, GroupElem, PadicCircle, element_index, elements,
                    pairing_numerators)
from .matrix import RingMatrix
from .report import VerifyReport


def _p_adic_valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _check_conductor(group: FinAbGroup, ring: CycloRing) -> None:
    if group.prime != ring.prime:
        raise ValueError("group prime differs from the ring's inverted prime")
    e1 = group.exponents[0] if group.exponents else 0
    if _p_adic_valuation(ring.conductor, group.prime) < e1:
        raise ValueError(
            f"conductor {ring.conductor} lacks the p^{e1}-th roots of unity")


def _zeta_exponent_table(group: FinAbGroup, ring: CycloRing) -> list[list[int]]:
    """exps[v][l]: the zeta_M exponent of <v_i, l_j>."""
    _check_conductor(group, ring)
    M = ring.conductor
    p = group.prime
    e1 = group.exponents[0] if group.exponents else 0
    scale = M // p ** e1
    return [[t * scale % M for t in row] for row in pairing_numerators(group)]


class AlgElem:
    """Element of k[V]: one ring coefficient per group element."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: FinAbGroup, ring: CycloRing, coeffs: Sequence[CycloElem]):
        if len(coeffs) != group.order:
            raise ValueError("one coefficient per group element required")
        for c in coeffs:
            if c.ring != ring:
                raise ValueError("coefficient from the wrong ring")
        self.group = group
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _same_algebra(self, other: "AlgElem"):
        if self.group != other.group or self.ring != other.ring:
            raise ValueError("elements of different group algebras")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._same_algebra(other)
        return AlgElem(self.group, self.ring,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        self._same_algebra(other)
        return AlgElem(self.group, self.ring,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.group, self.ring, [-a for a in self.coeffs])

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        return convolve(self, other)

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return (self.group, self.ring, self.coeffs) == \
                   (other.group, other.ring, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.group, self.coeffs))

    def __repr__(self):
        return f"AlgElem({self.group.notation()}, {[str(c) for c in self.coeffs]})"


class FunElem:
    """Element of the function algebra on the dual: one value per functional."""

    __slots__ = ("group", "ring", "values")

    def __init__(self, group: FinAbGroup, ring: CycloRing, values: Sequence[CycloElem]):
        if len(values) != group.order:
            raise ValueError("one value per dual element required")
        for v in values:
            if v.ring != ring:
                raise ValueError("value from the wrong ring")
        self.group = group
        self.ring = ring
        self.values = tuple(values)

    def _same_algebra(self, other: "FunElem"):
        if self.group != other.group or self.ring != other.ring:
            raise ValueError("functions over different duals")

    def __add__(self, other: "FunElem") -> "FunElem":
        self._same_algebra(other)
        return FunElem(self.group, self.ring,
                       [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "FunElem") -> "FunElem":
        self._same_algebra(other)
        return FunElem(self.group, self.ring,
                       [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "FunElem") -> "FunElem":
        self._same_algebra(other)
        return FunElem(self.group, self.ring,
                       [a * b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        if isinstance(other, FunElem):
            return (self.group, self.ring, self.values) == \
                   (other.group, other.ring, other.values)
        return NotImplemented

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self):
        return f"FunElem({self.group.notation()}, {[str(v) for v in self.values]})"


def basis_element(group: FinAbGroup, ring: CycloRing, v: GroupElem) -> AlgElem:
    coeffs = [ring.zero] * group.order
    coeffs[element_index(group, v.coords)] = ring.one
    return AlgElem(group, ring, coeffs)


def algebra_one(group: FinAbGroup, ring: CycloRing) -> AlgElem:
    """The unit [0] of k[V]."""
    coeffs = [ring.zero] * group.order
    coeffs[0] = ring.one
    return AlgElem(group, ring, coeffs)


def convolve(x: AlgElem, y: AlgElem) -> AlgElem:
    """(x * y)(w) = sum over u + v = w of x(u) y(v)."""
    x._same_algebra(y)
    group = x.group
    ring = x.ring
    els = elements(group)
    out = [ring.zero] * group.order
    for i, u in enumerate(els):
        cu = x.coeffs[i]
        if not cu:
            continue
        for j, v in enumerate(els):
            cv = y.coeffs[j]
            if cv:
                k = element_index(group, (u + v).coords)
                out[k] = out[k] + cu * cv
    return AlgElem(group, ring, out)


# -- the evaluation map, its matrix, and Fourier inversion --------------


def character_table(group: FinAbGroup, ring: CycloRing) -> RingMatrix:
    """|V| x |V| matrix: row l, column v, entry zeta^<v,l> (the character table)."""
    exps = _zeta_exponent_table(group, ring)
    n = group.order
    entries = []
    for l in range(n):
        for v in range(n):
            entries.append(ring.zeta(exps[v][l]))
    return RingMatrix(ring, n, n, entries)


def _scaled_vectors(items: Sequence[CycloElem], p: int) -> tuple[list[list[int]], int]:
    """Coefficient vectors on one shared denominator exponent."""
    shift = max(c.exp for c in items)
    vecs = []
    for c in items:
        s = p ** (shift - c.exp)
        vecs.append([n * s for n in c.nums])
    return vecs, shift


def evaluate_at_characters(x: AlgElem) -> FunElem:
    """The algebra map k[V] -> k^(dual): [v] goes to l -> zeta^<v,l>."""
    group, ring = x.group, x.ring
    M = ring.conductor
    exps = _zeta_exponent_table(group, ring)
    vecs, shift = _scaled_vectors(x.coeffs, ring.prime)
    support = [(v, vecs[v]) for v in range(group.order) if any(vecs[v])]
    values = []
    for l in range(group.order):
        acc = [0] * M
        for v, vec in support:
            e = exps[v][l]
            for i, c in enumerate(vec):
                if c:
                    acc[(e + i) % M] += c
        values.append(CycloElem(ring, ring.reduce_vector(acc), shift))
    return FunElem(group, ring, values)


def fourier_transform(f: FunElem) -> tuple[CycloElem, ...]:
    """f^(v) = |V|^(-1) sum_l f(l) zeta^(-<v,l>), indexed by group elements."""
    group, ring = f.group, f.ring
    M = ring.conductor
    exps = _zeta_exponent_table(group, ring)
    s = sum(group.exponents)  # |V| = p^s, invertible in Z[1/p]
    vecs, shift = _scaled_vectors(f.values, ring.prime)
    support = [(l, vecs[l]) for l in range(group.order) if any(vecs[l])]
    out = []
    for v in range(group.order):
        row = exps[v]
        acc = [0] * M
        for l, vec in support:
            e = (-row[l]) % M
            for i, c in enumerate(vec):
                if c:
                    acc[(e + i) % M] += c
        out.append(CycloElem(ring, ring.reduce_vector(acc), shift + s))
    return tuple(out)


def fourier_inverse(f: FunElem) -> AlgElem:
    """Synthesis sum_v f^(v) [v]; inverse of evaluate_at_characters."""
    return AlgElem(f.group, f.ring, fourier_transform(f))


def transform_matrix(group: FinAbGroup, fn, ring: CycloRing) -> RingMatrix:
    """Matrix of the map parameterized by a circle function: entry fn(<v,l>).

    ``fn`` exposes value_at(point, ring) and covers_level(level); rows are
    indexed by dual elements, columns by group elements.
    """
    p = group.prime
    e1 = group.exponents[0] if group.exponents else 0
    if not fn.covers_level(e1):
        raise ValueError(f"circle function not defined at level {e1}")
    table = pairing_numerators(group)
    n = group.order
    cache: dict[tuple[int, int], CycloElem] = {}
    entries = []
    for l in range(n):
        for v in range(n):
            t = table[v][l]
            val = cache.get((t, e1))
            if val is None:
                val = fn.value_at(PadicCircle(p, t, e1), ring)
                cache[(t, e1)] = val
            entries.append(val)
    return RingMatrix(ring, n, n, entries)


# -- unit tests in group and monoid algebras ----------------------------


def is_unit_group_algebra(x: AlgElem) -> bool:
    """Invertibility via characters: every evaluation must be a unit."""
    return all(is_unit(value) for value in evaluate_at_characters(x).values)


def convolution_matrix(x: AlgElem) -> RingMatrix:
    """Matrix of y -> x * y on the element basis (the independent unit oracle)."""
    group = x.group
    els = elements(group)
    n = group.order
    entries = [None] * (n * n)
    for w in range(n):
        for u in range(n):
            entries[u * n + w] = x.coeffs[element_index(group, (els[u] - els[w]).coords)]
    return RingMatrix(x.ring, n, n, entries)


def monoid_multiplication_matrix(coeffs: Sequence[CycloElem], N: int) -> RingMatrix:
    """Matrix of y -> x y in the algebra of the multiplicative monoid Z/N."""
    if len(coeffs) != N:
        raise ValueError("one coefficient per residue required")
    ring = coeffs[0].ring
    cols = [[ring.zero] * N for _ in range(N)]
    for s in range(N):
        cs = coeffs[s]
        if cs:
            for t in range(N):
                w = s * t % N
                cols[t][w] = cols[t][w] + cs
    entries = []
    for w in range(N):
        for t in range(N):
            entries.append(cols[t][w])
    return RingMatrix(ring, N, N, entries)


def is_unit_monoid_algebra(coeffs: Sequence[CycloElem], p: int, r: int) -> bool:
    """Unit test in the algebra of the multiplicative monoid Z/p^r.

    The kernel of (augmentation, restriction-to-units) is nilpotent, so x
    is a unit iff the coefficient sum is a unit and the restriction to the
    unit group is a unit there (checked through all its characters).
    """
    N = p ** r
    if len(coeffs) != N:
        raise ValueError("one coefficient per residue mod p^r required")
    ring = coeffs[0].ring
    augmentation = ring.zero
    for c in coeffs:
        augmentation = augmentation + c
    if not is_unit(augmentation):
        return False
    for chi in enumerate_characters(p, r, ring):
        s = ring.zero
        for t in units_mod(N):
            s = s + coeffs[t % N] * chi.eval(t)
        if not is_unit(s):
            return False
    return True


# -- inversion sweep -----------------------------------------------------


def fourier_inversion_report(p: int, max_order: int) -> VerifyReport:
    """Check both composites of evaluation and synthesis on every basis vector."""
    from .finab import enumerate_groups

    report = VerifyReport("verify-fourier", {"p": p, "max_order": max_order})
    for group in enumerate_groups(p, max_order):
        ring = standard_fourier_ring(group)
        name = group.notation()
        ok_left = True
        witness = None
        for i, v in enumerate(elements(group)):
            x = basis_element(group, ring, v)
            back = fourier_inverse(evaluate_at_characters(x))
            if back != x:
                ok_left = False
                witness = {"basis_index": i}
                break
        report.add(f"fourier-{name}-synthesis-after-evaluation", f"V={name}",
                   ok_left, witness)
        ok_right = True
        witness = None
        for j in range(group.order):
            values = [ring.zero] * group.order
            values[j] = ring.one
            delta = FunElem(group, ring, values)
            back = evaluate_at_characters(fourier_inverse(delta))
            if back != delta:
                ok_right = False
                witness = {"dual_index": j}
                break
        report.add(f"fourier-{name}-evaluation-after-synthesis", f"V={name}",
                   ok_right, witness)
    return report


def standard_fourier_ring(group: FinAbGroup) -> CycloRing:
    """Smallest ring for Fourier work over the group: conductor = exponent."""
    from .exactring import get_ring

    return get_ring(max(group.exponent_value, 1), group.prime)

"""Circle functions, the three-condition criterion, determinant oracle, naturality."""

import random

import pytest

from cyclofourier import (CircleFunction, FinAbGroup, GroupHom, PadicCircle,
                          character_table, circle_points, criterion_vs_determinant,
                          enumerate_homs, get_ring, identity_hom, invertibility_criterion,
                          is_unit, matrix_is_invertible, natural_iso_sweep,
                          naturality_check, naturality_sweep, pairing_numerators,
                          random_table_function, spike_ring, standard_ring,
                          transform_determinant, transform_matrix, zero_hom)
from cyclofourier.matrix import RingMatrix, determinant


def G(p, *exps):
    return FinAbGroup(p, tuple(exps))


def test_spike_values():
    ring = spike_ring(2)
    fn = CircleFunction.spike(2)
    assert fn.value_at(PadicCircle.zero(2), ring) == ring.one
    assert fn.value_at(PadicCircle(2, 1, 2), ring) == ring.from_int(2)
    ring3 = spike_ring(3)
    fn3 = CircleFunction.spike(3)
    assert fn3.value_at(PadicCircle(3, 2, 1), ring3) == ring3.one
    assert fn3.value_at(PadicCircle(3, 1, 5), ring3) == ring3.from_int(2)


def test_table_function_validation():
    ring = standard_ring(2, 1)
    points = circle_points(2, 1)
    table = CircleFunction.table(2, 1, {pt: ring.one for pt in points}, ring)
    assert table.value_at(points[0], ring) == ring.one
    with pytest.raises(ValueError):
        table.value_at(PadicCircle(2, 1, 2), ring)  # beyond the level
    with pytest.raises(ValueError):
        CircleFunction.table(2, 1, {points[0]: ring.one}, ring)  # not total
    with pytest.raises(ValueError):
        table.value_at(points[0], get_ring(8, 2))  # wrong ring


def test_criterion_spike_all_witnesses_one():
    for p in (2, 3, 5):
        report = invertibility_criterion(CircleFunction.spike(p), p, 3)
        ring = standard_ring(p, 3)
        assert report.overall
        assert report.condition1 and report.witness1 == ring.one
        assert report.condition2 and report.witness2 == ring.one
        assert report.condition3  # primitive characters exist for every p at level >= 2
        for _, _, value, ok in report.condition3:
            assert ok and value == ring.one


def test_criterion_constant_function_fails_condition_two():
    p = 3
    ring = standard_ring(p, 1)
    ones = {pt: ring.one for pt in circle_points(p, 1)}
    fn = CircleFunction.table(p, 1, ones, ring)
    report = invertibility_criterion(fn, p, 1)
    assert report.condition1
    assert not report.condition2
    assert not report.overall


def test_criterion_value_p_at_zero_passes_condition_one():
    p = 2
    ring = standard_ring(p, 1)
    values = {pt: (ring.from_int(p) if pt.is_zero() else ring.zero)
              for pt in circle_points(p, 1)}
    fn = CircleFunction.table(p, 1, values, ring)
    report = invertibility_criterion(fn, p, 1)
    assert report.condition1  # p is invertible in Z[1/p]


def test_criterion_of_root_table_and_zero_table():
    # the canonical root-of-unity table gives an invertible transform ...
    p, r = 2, 2
    ring = standard_ring(p, r)
    M = ring.conductor
    values = {}
    for pt in circle_points(p, r):
        values[pt] = ring.zeta(pt.numerator * (M // p ** pt.level) % M)
    fn = CircleFunction.table(p, r, values, ring)
    assert invertibility_criterion(fn, p, r).overall
    assert matrix_is_invertible(G(p, r), fn, ring)
    # ... and the zero table gives nothing
    zero_fn = CircleFunction.table(p, r, {pt: ring.zero for pt in circle_points(p, r)},
                                   ring)
    assert not invertibility_criterion(zero_fn, p, r).overall
    assert not matrix_is_invertible(G(p, r), zero_fn, ring)


def test_matrix_is_invertible_examples():
    fn = CircleFunction.spike(2)
    ring = spike_ring(2)
    assert matrix_is_invertible(G(2), fn, ring)
    two_by_two = transform_matrix(G(2, 1), fn, ring)
    assert [[e.nums[0] for e in two_by_two.row(i)] for i in range(2)] == [[1, 1], [1, 2]]
    assert determinant(two_by_two) == ring.one
    assert matrix_is_invertible(G(2, 2), fn, ring)


def test_transform_level_guard():
    p, r = 2, 1
    ring = standard_ring(p, r)
    fn = random_table_function(p, r, random.Random(1), ring)
    with pytest.raises(ValueError):
        transform_matrix(G(2, 2), fn, ring)  # exponent 4 beyond table level 1


def test_criterion_vs_determinant_small_runs():
    report = criterion_vs_determinant(2, 2, samples=30, seed=5, extra_groups=2)
    assert report.failed == 0, report.failures()
    report = criterion_vs_determinant(3, 2, samples=6, seed=6, extra_groups=2)
    assert report.failed == 0, report.failures()
    # byte-identical reports for identical seeds
    again = criterion_vs_determinant(3, 2, samples=6, seed=6, extra_groups=2)
    assert report.to_json() == again.to_json()


def test_condition_two_matches_level_one_transform_verdict():
    # level-1 imprimitive twist: the hat-sum over units and the increment sum
    # have the same unit verdict (they differ by a unit factor)
    rng = random.Random(407)
    for p in (2, 3, 5):
        ring = standard_ring(p, 1)
        M = ring.conductor
        for _ in range(25):
            fn = random_table_function(p, 1, rng, ring)
            report = invertibility_criterion(fn, p, 1)
            alpha = {t: fn.value_at(PadicCircle(p, t, 1), ring) for t in range(p)}
            hat_sum = ring.zero
            for t in range(1, p):
                acc = ring.zero
                for x in range(p):
                    acc = acc + alpha[x] * ring.zeta((-x * t * (M // p)) % M)
                hat_sum = hat_sum + acc
            assert is_unit(hat_sum) == report.condition2


def test_naturality_examples():
    fn = CircleFunction.spike(2)
    ring = spike_ring(2)
    V = G(2, 2)
    assert naturality_check(identity_hom(V), fn, ring)
    assert naturality_check(zero_hom(V, G(2, 1, 1)), fn, ring)
    homs = list(enumerate_homs(G(2, 2), G(2, 1, 1)))
    assert len(homs) == 4
    for f in homs:
        assert naturality_check(f, fn, ring)


def test_naturality_sweep_small():
    report = naturality_sweep(3, 9)
    assert report.failed == 0
    assert all(c.witness["homs"] >= 1 for c in report.checks)


def test_sweep_examples():
    report = natural_iso_sweep(2, 4)
    iso_checks = [c for c in report.checks if c.id.startswith("iso-")]
    assert len(iso_checks) == 4
    assert report.failed == 0
    report = natural_iso_sweep(3, 27)
    iso_checks = [c for c in report.checks if c.id.startswith("iso-")]
    assert len(iso_checks) == 7  # partitions of 0..3
    assert report.failed == 0
    report = natural_iso_sweep(2, 1)
    assert len(report.checks) == 1


def test_determinant_invariant_under_reindexing():
    # same group, elements enumerated in a shuffled order: the matrix picks up
    # a simultaneous row and column permutation, so the determinant is unchanged
    rng = random.Random(408)
    p, r = 2, 2
    ring = standard_ring(p, r)
    for _ in range(5):
        fn = random_table_function(p, r, rng, ring)
        for group in (G(2, 2), G(2, 2, 1)):
            base = transform_determinant(group, fn, ring)
            n = group.order
            perm = list(range(n))
            rng.shuffle(perm)
            table = pairing_numerators(group)
            e1 = group.exponents[0]
            entries = []
            for l in range(n):
                for v in range(n):
                    t = table[perm[v]][perm[l]]
                    entries.append(fn.value_at(PadicCircle(p, t, e1), ring))
            shuffled = RingMatrix(ring, n, n, entries)
            assert determinant(shuffled) == base


def test_criterion_level_guard():
    p = 2
    ring = standard_ring(p, 1)
    fn = random_table_function(p, 1, random.Random(2), ring)
    with pytest.raises(ValueError):
        invertibility_criterion(fn, p, 2)

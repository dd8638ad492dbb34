import json
import random
from fractions import Fraction

import pytest
import sympy

from bempoly.clans import enumerate_clans, gamma_shuffled_perms, is_matchless, is_noncrossing
from bempoly.ranklin import (
    Flag, coordinate_subspace, dim_intersection, first_violation, in_orbit_closure,
    nullspace, project_rho, rank, rank_naive,
)
from bempoly.sampling import crossing_redundancy, random_flags
from bempoly.weyl import all_permutations


def test_rank_examples():
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert rank(eye) == 4
    assert rank([[0] * 5 for _ in range(3)]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([]) == 0


def test_rank_against_oracles():
    rng = random.Random(7)
    for _ in range(500):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = [[Fraction(rng.randint(-2, 2), rng.randint(1, 3)) if rng.random() < 0.6 else 0
              for _ in range(c)] for _ in range(r)]
        assert rank(M) == rank_naive(M) == sympy.Matrix(M).rank()


def test_nullspace():
    M = [[1, 2, 3], [2, 4, 6]]
    ns = nullspace(M)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


def e(k, n=4):
    return [int(i == k - 1) for i in range(n)]


E2 = coordinate_subspace(4, [1, 2])


def test_dim_intersection_examples():
    std = Flag.from_columns([e(1), e(2), e(3), e(4)])
    assert dim_intersection(std, 2, E2) == 2
    swapped = Flag.from_columns([e(3), e(4), e(1), e(2)])
    assert dim_intersection(swapped, 1, E2) == 0
    skew = Flag.from_columns([[1, 0, 1, 0], e(2), e(3), e(4)])
    assert dim_intersection(skew, 1, E2) == 0
    with pytest.raises(ValueError):
        dim_intersection(std, 1, coordinate_subspace(3, [1]))


def test_project_rho():
    assert project_rho((1, 2, 3, 4), 2) == (1, 2, 0, 0)
    assert project_rho((0, 0, 1, 0), 2) == (0, 0, 0, 0)
    assert project_rho((5, 0, 0, 7), 3) == (5, 0, 0, 0)


def test_singular_flag_rejected():
    with pytest.raises(ValueError):
        Flag.from_columns([e(1), e(1), e(3), e(4)])


def test_membership_examples():
    std = Flag.from_columns([e(1), e(2), e(3), e(4)])
    assert in_orbit_closure(std, "++--")
    swapped = Flag.from_columns([e(3), e(4), e(1), e(2)])
    assert not in_orbit_closure(swapped, "++--")
    v = first_violation(swapped, "++--")
    assert (v.condition, v.i) == (1, 1)
    for F in random_flags(2, 20, seed=3):
        assert in_orbit_closure(F, "11")
    with pytest.raises(ValueError):
        in_orbit_closure(std, "+-")


def test_example_orbit_closure_1pm1():
    # Y_{1+-1}: dim(F_2 ∩ E_2) >= 1 and dim(F_3 ∩ E^2) >= 1
    inside = Flag.from_columns([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert in_orbit_closure(inside, "1+-1")
    outside = Flag.from_columns([[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not in_orbit_closure(outside, "1+-1")


@pytest.mark.parametrize("gamma", [g for g in enumerate_clans(2, 2) if is_matchless(g)])
def test_coordinate_flags_are_the_shuffled_ones(gamma):
    shuffled = set(gamma_shuffled_perms(gamma))
    for sigma in all_permutations(4):
        assert in_orbit_closure(Flag.coordinate(sigma.images), gamma) == (sigma in shuffled)


@pytest.mark.parametrize("gamma", [g for g in enumerate_clans(2, 2) if is_noncrossing(g)])
def test_crossing_condition_redundant_when_noncrossing(gamma):
    report = crossing_redundancy(gamma, 200)
    assert report["disagreements"] == []


def test_crossing_condition_matters_for_1212():
    assert crossing_redundancy("1212", 200)["disagreements"]


def test_membership_invariant_under_column_scaling():
    rng = random.Random(11)
    for F in random_flags(4, 30, seed=5):
        scales = [Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4)) for _ in range(4)]
        cols = list(zip(*F.basis))
        G = Flag.from_columns([[x * s for x in col] for col, s in zip(cols, scales)])
        assert F.same_flag(G)
        for g in enumerate_clans(2, 2):
            assert in_orbit_closure(F, g) == in_orbit_closure(G, g)


def test_flag_json():
    text = json.dumps({"n": 2, "matrix": [["1/2", 0], [1, "3"]]})
    F = Flag.from_json(text)
    assert F.basis == ((Fraction(1, 2), 0), (1, 3))
    with pytest.raises(ValueError):
        Flag.from_json(json.dumps({"n": 3, "matrix": [[1, 0], [0, 1]]}))

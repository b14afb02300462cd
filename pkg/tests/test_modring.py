import math

import pytest
from hypothesis import given, strategies as st

from voicegroup.modring import (
    BudgetExceeded,
    Modulus,
    Residue,
    crt_combine,
    crt_split,
    euler_phi,
    is_unit,
    normalize,
    solve_homogeneous,
    solve_linear,
    units,
)


def test_normalize_examples():
    assert normalize(-3, 12).value == 9
    assert normalize(14, 7).value == 0
    assert normalize(13, 12).value == 1


@given(st.integers(-10**6, 10**6), st.integers(2, 24))
def test_normalize_recovers_input(x, n):
    assert normalize(x, n).value + n * (x // n) == x


def test_modulus_validation():
    with pytest.raises(ValueError):
        Modulus(1)
    with pytest.raises(ValueError):
        Modulus(0)
    assert Modulus(12).prime_powers() == (4, 3)
    assert Modulus(7).prime_powers() == (7,)
    assert Modulus(60).prime_powers() == (4, 3, 5)


def test_is_unit_examples():
    assert is_unit(normalize(5, 12))
    assert not is_unit(normalize(6, 12))
    assert not is_unit(normalize(0, 7))


def test_units_examples():
    assert [u.value for u in units(12)] == [1, 5, 7, 11]
    assert [u.value for u in units(7)] == [1, 2, 3, 4, 5, 6]
    assert [u.value for u in units(4)] == [1, 3]


@pytest.mark.parametrize("n", range(2, 25))
def test_units_count_is_totient(n):
    # euler_phi goes through the factorization, units() through gcd scanning
    assert len(units(n)) == euler_phi(n)
    assert len(units(n)) == sum(1 for v in range(n) if math.gcd(v, n) == 1)


def test_residue_arithmetic():
    m = Modulus(12)
    a = Residue(7, m)
    b = Residue(8, m)
    assert (a + b).value == 3
    assert (a - b).value == 11
    assert (a * b).value == 8
    assert (-a).value == 5
    with pytest.raises(ValueError):
        a + Residue(1, Modulus(7))


def test_crt_split_examples():
    assert [f.n for f in crt_split(12)] == [4, 3]
    assert [f.n for f in crt_split(7)] == [7]


def test_crt_combine_example():
    combined = crt_combine([Residue(3, Modulus(4)), Residue(2, Modulus(3))], 12)
    assert combined.value == 11


@pytest.mark.parametrize("n", [4, 7, 12, 18, 30])
def test_crt_round_trip(n):
    factors = crt_split(n)
    for x in range(n):
        parts = [Residue(x, f) for f in factors]
        assert crt_combine(parts, n).value == x


def test_crt_combine_rejects_wrong_length():
    with pytest.raises(ValueError):
        crt_combine([Residue(1, Modulus(4))], 12)
    with pytest.raises(ValueError):
        crt_combine([Residue(1, Modulus(3)), Residue(0, Modulus(4))], 12)


def test_solve_homogeneous_examples():
    assert solve_homogeneous([[1]], 12) == [(0,)]
    assert solve_homogeneous([[2]], 12) == [(0,), (6,)]


def test_solve_linear_matches_direct_enumeration():
    for a in range(12):
        for b in range(12):
            for c in range(12):
                got = solve_linear([[a, b]], [c], 12)
                expected = sorted(
                    (x, y)
                    for x in range(12)
                    for y in range(12)
                    if (a * x + b * y - c) % 12 == 0
                )
                assert got == expected, (a, b, c)


def test_solve_linear_two_rows_spot():
    # the hexatonic solve: 7m+3n=11, 9m+5n=5 has the four known solutions
    assert solve_linear([[7, 3], [9, 5]], [11, 5], 12) == [(2, 7), (5, 4), (8, 1), (11, 10)]


def test_solution_count_multiplies_over_factors():
    sols = solve_homogeneous([[6, 0], [0, 4]], 12)
    per_factor = [
        sum(
            1
            for x in range(q)
            for y in range(q)
            if (6 * x) % q == 0 and (4 * y) % q == 0
        )
        for q in (4, 3)
    ]
    assert len(sols) == per_factor[0] * per_factor[1]


def test_solver_input_validation():
    with pytest.raises(ValueError):
        solve_linear([], [], 12)
    with pytest.raises(ValueError):
        solve_linear([[1, 2]], [0, 0], 12)
    with pytest.raises(ValueError):
        solve_homogeneous([[0] * 13], 12)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        solve_homogeneous([[0] * 9], 7, budget=10**6)


@pytest.mark.parametrize("n", [4, 6, 7, 9, 12])
def test_three_unknown_systems_match_single_modulus_enumeration(n):
    import itertools
    import random

    rng = random.Random(n)
    candidates = list(itertools.product(range(n), repeat=3))
    for _ in range(40):
        rows = [[rng.randrange(n) for _ in range(3)] for _ in range(rng.choice((1, 2)))]
        expected = sorted(
            cand
            for cand in candidates
            if all(sum(r * x for r, x in zip(row, cand)) % n == 0 for row in rows)
        )
        assert solve_homogeneous(rows, n) == expected

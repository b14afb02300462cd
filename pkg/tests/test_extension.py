import random

import pytest

from voicegroup.modring import Modulus
from voicegroup.linalg import ALL_PERMS, Mat3, Perm3, identity, mat_mul, perm_matrix
from voicegroup.voicing import Generator, JElement, generator_matrix, word_to_element
from voicegroup.extension import (
    CosetTag,
    ExtElement,
    NotInExtension,
    conjugacy_class,
    conjugate_j,
    enumerate_coset,
    ext_decode,
    ext_inverse,
    ext_matrix,
    ext_multiply,
    parse_element,
    sigma_conjugate_generator,
    trace,
)
from voicegroup.structure import centralizer_in_GL3

M12 = Modulus(12)
M7 = Modulus(7)


def test_sigma_conjugate_generator_examples():
    assert sigma_conjugate_generator(Perm3.from_cycle("(13)"), Generator.U) is Generator.V
    assert sigma_conjugate_generator(Perm3.from_cycle("(123)"), Generator.W) is Generator.U
    for g in Generator:
        assert sigma_conjugate_generator(Perm3.identity(), g) is g


def test_sigma_conjugate_generator_matches_matrix_conjugation():
    for sigma in ALL_PERMS:
        p = perm_matrix(sigma, M12)
        p_inv = perm_matrix(sigma.inverse(), M12)
        for g in Generator:
            conjugated = mat_mul(mat_mul(p, generator_matrix(g, M12)), p_inv)
            assert conjugated == generator_matrix(sigma_conjugate_generator(sigma, g), M12)


def test_conjugate_j_matches_matrix_oracle(j12):
    for sigma in ALL_PERMS:
        p = perm_matrix(sigma, M12)
        p_inv = perm_matrix(sigma.inverse(), M12)
        for j in j12:
            assert conjugate_j(sigma, j).matrix() == mat_mul(mat_mul(p, j.matrix()), p_inv)


def test_multiply_examples():
    t13 = Perm3.from_cycle("(13)")
    u = ExtElement(t13, JElement.from_generator(Generator.U, M12))
    squared = ext_multiply(u, u)
    assert squared.sigma.is_identity()
    assert squared.j == JElement(0, 11, 0, M12)  # (UV)^-1
    w = ExtElement(t13, JElement.from_generator(Generator.W, M12))
    prod = ext_multiply(w, u)
    assert prod.sigma.is_identity()
    assert prod.j == JElement(0, 0, 11, M12)  # (UW)^-1
    sq = ext_multiply(ExtElement.from_sigma(t13, M12), ExtElement.from_sigma(t13, M12))
    assert sq.is_identity()


def test_multiply_matches_matrix_oracle_randomized(ext12):
    rng = random.Random(2)
    for _ in range(10_000):
        a, b = rng.choice(ext12), rng.choice(ext12)
        assert (a * b).matrix() == mat_mul(a.matrix(), b.matrix())


def test_multiply_matches_matrix_oracle_on_generating_closure():
    gens = [ExtElement.from_j(JElement.from_generator(g, M12)) for g in Generator]
    gens += [ExtElement.from_sigma(Perm3.from_cycle(c), M12) for c in ("(12)", "(13)")]
    closure = list(gens)
    seen = set(gens)
    while len(closure) < 50:
        for a in list(closure):
            for g in gens:
                c = a * g
                if c not in seen:
                    seen.add(c)
                    closure.append(c)
                if len(closure) >= 50:
                    break
            if len(closure) >= 50:
                break
    for a in closure:
        for b in closure:
            assert (a * b).matrix() == mat_mul(a.matrix(), b.matrix())


def test_inverses(ext12):
    rng = random.Random(4)
    for _ in range(500):
        a = rng.choice(ext12)
        assert (a * ext_inverse(a)).is_identity()
        assert (ext_inverse(a) * a).is_identity()


def test_decode_examples():
    d = ext_decode(Mat3.of([[5, 0, 3], [4, 1, 3], [5, 1, 2]], M7))
    assert d == ExtElement(Perm3.from_cycle("(12)"), JElement(1, 3, 0, M7))
    d2 = ext_decode(Mat3.of([[0, 1, 0], [0, 0, 1], [6, 1, 1]], M7))
    assert d2 == ExtElement(Perm3.from_cycle("(13)"), JElement(1, 1, 0, M7))
    assert ext_decode(identity(M12)).is_identity()
    with pytest.raises(NotInExtension):
        ext_decode(Mat3.of([[1, 1, 1], [1, 1, 1], [1, 1, 1]], M12))


def test_decode_round_trip_all_elements(ext12):
    for a in ext12:
        assert ext_decode(ext_matrix(a)) == a


def test_enumeration_sizes(ext12):
    assert len(ext12) == 1728
    assert len(set(ext12)) == 1728
    jplus = enumerate_coset(CosetTag.J_PLUS, 12)
    assert len(jplus) == 144
    assert all(e.sigma.is_identity() and e.j.k == 0 for e in jplus)
    assert len(enumerate_coset(CosetTag.J_MINUS, 12)) == 144
    assert len(enumerate_coset(CosetTag.SIGMA_J_PLUS, 12)) == 864
    assert len(enumerate_coset(CosetTag.SIGMA_J_MINUS, 12)) == 864


def _bfs_matrix_closure(gens, modulus):
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mat_mul(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def test_enumeration_equals_bfs_closure(ext12):
    gens = [generator_matrix(g, M12) for g in Generator]
    gens += [perm_matrix(Perm3.from_cycle(c), M12) for c in ("(12)", "(13)")]
    closure = _bfs_matrix_closure(gens + [identity(M12)], M12)
    assert closure == {a.matrix() for a in ext12}


def test_permutations_meet_plain_group_trivially():
    for n in (7, 12):
        m = Modulus(n)
        for sigma in ALL_PERMS:
            decoded = ext_decode(perm_matrix(sigma, m))
            assert decoded.sigma == sigma and decoded.j.is_identity()


def test_trace_table(ext12):
    expected = {
        ("identity", 0): 3,
        ("identity", 1): 11,
        ("three_cycle", 0): 0,
        ("three_cycle", 1): 2,
        ("transposition", 0): 1,
        ("transposition", 1): 1,
    }
    for a in ext12:
        assert trace(a).value == expected[(a.sigma.cycle_type(), a.j.k)]


def test_conjugacy_classes_of_u():
    u = ExtElement.from_j(JElement(1, 0, 0, M12))
    assert len(conjugacy_class(u, within="J")) == 36
    assert len(conjugacy_class(u, within="extension")) == 108
    e = ExtElement.identity(M12)
    assert conjugacy_class(e, within="J") == {e}
    assert conjugacy_class(e, within="extension") == {e}
    with pytest.raises(ValueError):
        conjugacy_class(u, within="nonsense")


def test_gl_centralizer_is_stable_under_permutation_conjugation():
    report = centralizer_in_GL3(12)
    cent = set(report.elements)
    for c in cent:
        for sigma in ALL_PERMS:
            p = perm_matrix(sigma, M12)
            p_inv = perm_matrix(sigma.inverse(), M12)
            assert mat_mul(mat_mul(p, c), p_inv) in cent


def test_order_examples():
    t13 = Perm3.from_cycle("(13)")
    assert ExtElement(t13, JElement(1, 0, 0, M12)).order() == 24
    assert ExtElement(t13, JElement(1, 0, 1, M12)).order() == 2
    assert ExtElement.identity(M12).order() == 1


def test_parse_examples():
    assert parse_element("VW", M12) == ExtElement.from_j(word_to_element("VW", M12))
    assert parse_element("(12)U(UV)^3", M7) == ExtElement(
        Perm3.from_cycle("(12)"), JElement(1, 3, 0, M7)
    )
    assert parse_element("Id", M12).is_identity()
    assert parse_element("(UV)^-1", M12) == ExtElement.from_j(JElement(0, 11, 0, M12))
    with pytest.raises(ValueError):
        parse_element("(13) Q", M12)


def test_str_parse_round_trip(ext12):
    for a in ext12:
        assert parse_element(str(a), M12) == a


def test_modulus_mismatch():
    with pytest.raises(ValueError):
        ExtElement.from_j(JElement(0, 0, 0, M12)) * ExtElement.from_j(JElement(0, 0, 0, M7))

"""Structural computations around the voicing group.

Centralizers are found by solving the commutator equations as a homogeneous
linear system in the matrix entries (the solver enumerates per prime-power
factor and recombines by CRT). GL/SL orders are brute-force counts of
invertible / determinant-one matrices per prime-power factor, multiplied
out, with a closed-form product available as a cross-check. The duality
check restricts a contextual dihedral group and the transposition/inversion
group to a common orbit and tests simple transitivity plus commutation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .modring import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Modulus,
    as_modulus,
    solve_homogeneous,
    _prime_of,
)
from .linalg import (
    ALL_PERMS,
    AffineMap,
    Mat3,
    Vec3,
    is_invertible,
    mat_mul,
    mat_vec,
    scalar_affine,
)
from .voicing import Generator, JElement, enumerate_J, generator_matrix

_COUNT_CHUNK = 1 << 17


class Ambient(enum.Enum):
    M3 = "m3"
    GL3 = "gl3"
    AFF_MONOID = "aff"
    AFF_GROUP = "affx"


@dataclass(frozen=True)
class CentralizerReport:
    """Everything in the chosen ambient monoid/group commuting with the voicing group."""

    ambient: Ambient
    elements: tuple
    size: int

    def to_jsonable(self) -> dict:
        payload: dict = {"ambient": self.ambient.value, "size": self.size}
        if self.ambient in (Ambient.M3, Ambient.GL3):
            payload["matrices"] = [[list(r) for r in m.rows] for m in self.elements]
        else:
            payload["maps"] = [
                {
                    "matrix": [list(r) for r in f.linear.rows],
                    "translation": list(f.translation.entries),
                }
                for f in self.elements
            ]
        return payload


def center_of_J(modulus: Modulus | int) -> list[JElement]:
    """Elements commuting with the whole group, by exhaustive commutation."""
    elements = enumerate_J(modulus)
    return [a for a in elements if all(a * b == b * a for b in elements)]


def commutator_rows(modulus: Modulus | int) -> list[list[int]]:
    """Rows of the linear system 'A commutes with U, V and W' in the 9 entries of A.

    Unknowns are A's entries in row-major order; each generator G contributes
    the 9 linear forms (A G - G A)[p][q].
    """
    m = as_modulus(modulus)
    rows = []
    for g in Generator:
        gm = generator_matrix(g, m).rows
        for p in range(3):
            for q in range(3):
                row = [0] * 9
                for u in range(3):
                    for v in range(3):
                        coeff = 0
                        if u == p:
                            coeff += gm[v][q]
                        if v == q:
                            coeff -= gm[p][u]
                        row[3 * u + v] = coeff % m.n
                rows.append(row)
    return rows


def centralizer_in_M3(modulus: Modulus | int, budget: int = DEFAULT_BUDGET) -> CentralizerReport:
    """Monoid centralizer in all 3x3 matrices, via the linear solver.

    Over Z/12 this has 48 elements; see monoid_centralizer_closed_form for
    the explicit description and the note on the smaller diag(u)-product
    family. n = 7 needs a budget of at least 7**9.
    """
    m = as_modulus(modulus)
    sols = solve_homogeneous(commutator_rows(m), m, budget)
    mats = tuple(Mat3.of((s[0:3], s[3:6], s[6:9]), m) for s in sols)
    return CentralizerReport(Ambient.M3, mats, len(mats))


def centralizer_in_GL3(modulus: Modulus | int, budget: int = DEFAULT_BUDGET) -> CentralizerReport:
    """Group centralizer: the invertible part of the monoid centralizer."""
    monoid = centralizer_in_M3(modulus, budget)
    mats = tuple(a for a in monoid.elements if is_invertible(a))
    return CentralizerReport(Ambient.GL3, mats, len(mats))


def diagonal_product_family(modulus: Modulus | int, invertible_only: bool = False) -> set[Mat3]:
    """The products diag(u) * (central involution), u ranging over Z/n.

    For even n the central involutions are Id, (UV)^(n/2), (UW)^(n/2) and
    their product; for odd n only Id, leaving the scalar matrices. Over Z/12
    this yields 30 distinct matrices (16 invertible ones for unit u). Note:
    for even n this is a proper subset of the full monoid commutant, which
    also contains diag(a) + (n/2)*ones*w^T for even a; the invertible parts
    agree. See monoid_centralizer_closed_form.
    """
    m = as_modulus(modulus)
    n = m.n
    centrals = [Mat3.identity(m)]
    if n % 2 == 0:
        h = n // 2
        for k, mm, nn in ((0, h, 0), (0, 0, h), (0, h, h)):
            centrals.append(JElement(k, mm, nn, m).matrix())
    out = set()
    for u in range(n):
        if invertible_only and math.gcd(u, n) != 1:
            continue
        diag = Mat3.of(((u, 0, 0), (0, u, 0), (0, 0, u)), m)
        for z in centrals:
            out.add(mat_mul(diag, z))
    return out


# Covectors w with w.J == w mod 2 for every voicing reflection J: the
# even-weight row vectors. They parametrize the rank-one shifts below.
_MOD2_FIXED_COVECTORS = ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))


def monoid_centralizer_closed_form(modulus: Modulus | int) -> set[Mat3]:
    """Closed-form description of the full monoid commutant.

    Every reflection fixes the all-ones column, and fixes the covectors w of
    even weight modulo 2; hence diag(a) + (n/2)*ones*w^T commutes with the
    whole group when n is even (the factor n/2 kills the mod-2 defect). For
    odd n only the scalar matrices remain. The solver-based centralizer_in_M3
    is the oracle this description is checked against in the tests; over Z/12
    it has 48 elements (4n for even n, n for odd n).
    """
    m = as_modulus(modulus)
    n = m.n
    out = set()
    if n % 2:
        for a in range(n):
            out.add(Mat3.of(((a, 0, 0), (0, a, 0), (0, 0, a)), m))
        return out
    h = n // 2
    for a in range(n):
        for w in _MOD2_FIXED_COVECTORS:
            rows = tuple(
                tuple((a if i == j else 0) + h * w[j] for j in range(3)) for i in range(3)
            )
            out.add(Mat3.of(rows, m))
    return out


def centralizer_in_Aff(
    modulus: Modulus | int, invertible_only: bool = False, budget: int = DEFAULT_BUDGET
) -> CentralizerReport:
    """Affine maps x -> Ax + (q,q,q) with A in the matrix centralizer.

    The translation must be constant-diagonal: a vector fixed by all three
    reflections has equal components.
    """
    m = as_modulus(modulus)
    base = centralizer_in_GL3(m, budget) if invertible_only else centralizer_in_M3(m, budget)
    maps = tuple(
        AffineMap(a, Vec3.of(q, q, q, m)) for a in base.elements for q in range(m.n)
    )
    ambient = Ambient.AFF_GROUP if invertible_only else Ambient.AFF_MONOID
    return CentralizerReport(ambient, maps, len(maps))


def _count_dets(q: int, want_det_one: bool, budget: int) -> int:
    """Count 3x3 matrices over Z/q with unit (or = 1) determinant, exhaustively."""
    total = q**9
    if total > budget:
        raise BudgetExceeded(f"{q}^9 = {total} candidates exceeds budget {budget}")
    p = _prime_of(q)
    powers = q ** np.arange(9, dtype=np.int64)
    count = 0
    for start in range(0, total, _COUNT_CHUNK):
        idx = np.arange(start, min(start + _COUNT_CHUNK, total), dtype=np.int64)
        e = (idx[:, None] // powers) % q
        det = (
            e[:, 0] * (e[:, 4] * e[:, 8] - e[:, 5] * e[:, 7])
            - e[:, 1] * (e[:, 3] * e[:, 8] - e[:, 5] * e[:, 6])
            + e[:, 2] * (e[:, 3] * e[:, 7] - e[:, 4] * e[:, 6])
        ) % q
        count += int(np.count_nonzero(det == 1 if want_det_one else det % p != 0))
    return count


def count_GL3(modulus: Modulus | int, budget: int = DEFAULT_BUDGET) -> int:
    """|GL(3, Z/n)| by brute-force counting per prime-power factor."""
    m = as_modulus(modulus)
    return math.prod(_count_dets(q, False, budget) for q in m.prime_powers())


def count_SL3(modulus: Modulus | int, budget: int = DEFAULT_BUDGET) -> int:
    """|SL(3, Z/n)| by brute-force counting per prime-power factor."""
    m = as_modulus(modulus)
    return math.prod(_count_dets(q, True, budget) for q in m.prime_powers())


def gl3_order_closed_form(modulus: Modulus | int) -> int:
    """Product formula over prime powers p^a: p^(9a) (1-1/p)(1-1/p^2)(1-1/p^3)."""
    m = as_modulus(modulus)
    total = 1
    for q in m.prime_powers():
        p = _prime_of(q)
        a = round(math.log(q, p))
        total *= p ** (9 * a - 6) * (p - 1) * (p**2 - 1) * (p**3 - 1)
    return total


def sl3_order_closed_form(modulus: Modulus | int) -> int:
    """|SL| = |GL| / phi(q) for each prime-power factor q."""
    m = as_modulus(modulus)
    total = 1
    for q in m.prime_powers():
        p = _prime_of(q)
        a = round(math.log(q, p))
        gl = p ** (9 * a - 6) * (p - 1) * (p**2 - 1) * (p**3 - 1)
        total *= gl // (q - q // p)
    return total


def index_of_J(modulus: Modulus | int, ambient: str, budget: int = DEFAULT_BUDGET) -> int:
    """Index of the 2n^2-element voicing group in GL3 or SL3; division must be exact."""
    m = as_modulus(modulus)
    if ambient.upper() == "GL3":
        order = count_GL3(m, budget)
    elif ambient.upper() == "SL3":
        order = count_SL3(m, budget)
    else:
        raise ValueError(f"ambient must be 'GL3' or 'SL3', got {ambient!r}")
    j_order = 2 * m.n * m.n
    if order % j_order:
        raise ArithmeticError(
            f"|ambient| = {order} is not divisible by 2n^2 = {j_order}; counting bug upstream"
        )
    return order // j_order


def ti_group(modulus: Modulus | int) -> list[AffineMap]:
    """The 2n componentwise transpositions x+t and inversions -x+t."""
    m = as_modulus(modulus)
    maps = [scalar_affine(1, t, m) for t in range(m.n)]
    maps += [scalar_affine(-1, t, m) for t in range(m.n)]
    return maps


def ti_orbit(seed: Vec3) -> list[Vec3]:
    """The orbit of seed under the T/I group, deterministically ordered."""
    out = {f(seed) for f in ti_group(seed.modulus)}
    return sorted(out, key=lambda v: v.entries)


def restrict_to_orbit(action, orbit: Sequence[Vec3]) -> tuple[int, ...]:
    """The permutation (as an index tuple) an action induces on the orbit.

    `action` is anything mapping Vec3 to Vec3 (Mat3, AffineMap, group element).
    Raises ValueError if the orbit is not closed under the action.
    """
    index = {v: i for i, v in enumerate(orbit)}

    def image(v: Vec3) -> Vec3:
        if isinstance(action, Mat3):
            return mat_vec(action, v)
        if isinstance(action, AffineMap):
            return action(v)
        return action.apply(v)

    out = []
    for v in orbit:
        w = image(v)
        if w not in index:
            raise ValueError(f"orbit is not closed under the action: {v} -> {w}")
        out.append(index[w])
    return tuple(out)


@dataclass(frozen=True)
class DualityReport:
    """Outcome of the dual-pair check on one T/I orbit.

    A dual pair needs: orbit of size 2n, both restricted groups simply
    transitive on it, and elementwise commutation between them. Together
    (for finite simply transitive commuting actions) these force each group
    to be the full centralizer of the other in the symmetric group on the
    orbit, so the report's conjunction is the dual-pair certificate.
    """

    seed: Vec3
    orbit_size: int
    contextual_generator: str  # "UV" or "UW": the translation-like generator used
    simply_transitive_contextual: bool
    simply_transitive_TI: bool
    mutually_commuting: bool
    is_dual_pair: bool


def _contextual_group(seed: Vec3, which: str) -> list[JElement]:
    """The 2n-element dihedral group generated by U and UV (or UW)."""
    m = seed.modulus
    out = []
    for k in (0, 1):
        for t in range(m.n):
            out.append(JElement(k, t, 0, m) if which == "UV" else JElement(k, 0, t, m))
    return out


def check_duality(seed: Vec3) -> DualityReport:
    """Restrict the contextual and T/I groups to the seed's T/I orbit and compare."""
    n = seed.modulus.n
    x, y, z = seed.entries
    which = "UV" if math.gcd(z - x, n) == 1 or math.gcd(z - y, n) != 1 else "UW"
    orbit = ti_orbit(seed)
    orbit_set = set(orbit)

    contextual = _contextual_group(seed, which)
    ctx_restrictions = [restrict_to_orbit(g, orbit) for g in contextual]
    ctx_transitive = {g.apply(seed) for g in contextual} == orbit_set
    ctx_simply = ctx_transitive and len(set(ctx_restrictions)) == len(orbit)

    ti = ti_group(seed.modulus)
    ti_restrictions = [restrict_to_orbit(f, orbit) for f in ti]
    ti_transitive = {f(seed) for f in ti} == orbit_set
    ti_simply = ti_transitive and len(set(ti_restrictions)) == len(orbit)

    commuting = all(
        tuple(c[t[i]] for i in range(len(orbit))) == tuple(t[c[i]] for i in range(len(orbit)))
        for c in set(ctx_restrictions)
        for t in set(ti_restrictions)
    )
    ok = len(orbit) == 2 * n and ctx_simply and ti_simply and commuting
    return DualityReport(
        seed=seed,
        orbit_size=len(orbit),
        contextual_generator=which,
        simply_transitive_contextual=ctx_simply,
        simply_transitive_TI=ti_simply,
        mutually_commuting=commuting,
        is_dual_pair=ok,
    )


ORBIT_LABELS = {
    (0, 4, 7): "closed root position",
    (4, 7, 0): "closed first inversion",
    (7, 0, 4): "closed second inversion",
    (0, 7, 4): "open root position",
    (4, 0, 7): "open first inversion",
    (7, 4, 0): "open second inversion",
}


def orbit_restriction_table(modulus: Modulus | int = 12) -> dict[tuple[int, int, int], dict[str, str]]:
    """Which locally-conjugated contextual operation each generator restricts to.

    For each of the six T/I orbits of the reorderings tau(0,4,7), compare each
    generator with tau X tau^-1 for X in {P, L, R} (the contextual operations
    on the dualistic root-position orbit) across all 24 orbit elements. The
    match is required to be unique; an ambiguous match raises.
    """
    m = as_modulus(modulus)
    base = Vec3.of(0, 4, 7, m)
    base_orbit = ti_orbit(base)
    # On the dualistic root-position orbit the three reflections realize
    # P, L, R; these matrices serve as the reference contextual operations.
    contextual = {
        "P": generator_matrix(Generator.W, m),
        "L": generator_matrix(Generator.V, m),
        "R": generator_matrix(Generator.U, m),
    }
    table: dict[tuple[int, int, int], dict[str, str]] = {}
    for tau in ALL_PERMS:
        rep = tau.apply(base)
        orbit = [tau.apply(v) for v in base_orbit]
        tau_inv = tau.inverse()
        column: dict[str, str] = {}
        for g in Generator:
            gm = generator_matrix(g, m)
            matches = [
                name
                for name, xm in contextual.items()
                if all(mat_vec(gm, w) == tau.apply(mat_vec(xm, tau_inv.apply(w))) for w in orbit)
            ]
            if len(matches) != 1:
                raise AssertionError(
                    f"generator {g} matches {matches!r} on orbit of {rep}; expected exactly one"
                )
            column[g.name] = matches[0]
        table[rep.entries] = column
    return table

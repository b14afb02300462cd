"""Exact arithmetic in Z/n with a runtime modulus.

Provides residues, unit detection, prime-power splitting of the modulus with
Chinese-remainder recombination, and exhaustive solving of small linear
systems over Z/n (one enumeration per prime-power factor, then CRT).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

DEFAULT_BUDGET = 10_000_000
MAX_UNKNOWNS = 12

_ENUM_CHUNK = 1 << 20


class BudgetExceeded(RuntimeError):
    """An exhaustive search would enumerate more candidates than allowed."""


@lru_cache(maxsize=None)
def _prime_power_factors(n: int) -> tuple[int, ...]:
    """Prime-power factors of n, ordered by increasing prime: 12 -> (4, 3)."""
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                rest //= p
                q *= p
            factors.append(q)
        p += 1
    if rest > 1:
        factors.append(rest)
    return tuple(factors)


@dataclass(frozen=True)
class Modulus:
    """A modulus n >= 2, shared by all values computed over Z/n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.n!r}")

    def prime_powers(self) -> tuple[int, ...]:
        return _prime_power_factors(self.n)

    def __index__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return str(self.n)


def as_modulus(m: Modulus | int) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(int(m))


def check_same_modulus(a: Modulus, b: Modulus) -> Modulus:
    if a != b:
        raise ValueError(f"mixed moduli: {a} vs {b}")
    return a


@dataclass(frozen=True)
class Residue:
    """An integer reduced to [0, n) for a fixed modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.modulus.n)

    def is_unit(self) -> bool:
        return math.gcd(self.value, self.modulus.n) == 1

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            check_same_modulus(self.modulus, other.modulus)
            return other.value
        return int(other)

    def __add__(self, other) -> "Residue":
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other) -> "Residue":
        return Residue(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other) -> "Residue":
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def normalize(x: int, modulus: Modulus | int) -> Residue:
    """Reduce x into [0, n)."""
    return Residue(x, as_modulus(modulus))


def is_unit(x: Residue) -> bool:
    return x.is_unit()


def units(modulus: Modulus | int) -> list[Residue]:
    """All residues coprime to n, in increasing order; len == Euler phi(n)."""
    m = as_modulus(modulus)
    return [Residue(v, m) for v in range(m.n) if math.gcd(v, m.n) == 1]


def euler_phi(n: int) -> int:
    """Euler totient via the prime-power factorization (used as a units() oracle)."""
    total = 1
    for q in _prime_power_factors(n):
        p = _prime_of(q)
        total *= q - q // p
    return total


def _prime_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError(f"not a prime power: {q}")


def crt_split(modulus: Modulus | int) -> list[Modulus]:
    """Split n into its pairwise-coprime prime-power moduli."""
    return [Modulus(q) for q in as_modulus(modulus).prime_powers()]


def crt_combine(residues: Sequence[Residue], modulus: Modulus | int) -> Residue:
    """Recombine one residue per prime-power factor of the target modulus."""
    m = as_modulus(modulus)
    factors = m.prime_powers()
    if len(residues) != len(factors):
        raise ValueError(
            f"expected {len(factors)} residues for modulus {m.n}, got {len(residues)}"
        )
    for r, q in zip(residues, factors):
        if r.modulus.n != q:
            raise ValueError(f"residue modulus {r.modulus.n} does not match factor {q}")
    return Residue(_crt_ints([r.value for r in residues], list(factors)), m)


def _crt_ints(values: Sequence[int], moduli: Sequence[int]) -> int:
    """CRT for pairwise-coprime moduli."""
    total = math.prod(moduli)
    acc = 0
    for v, q in zip(values, moduli):
        rest = total // q
        acc += v * rest * pow(rest, -1, q)
    return acc % total


def _solutions_mod(
    rows: Sequence[Sequence[int]], rhs: Sequence[int], q: int, budget: int
) -> list[tuple[int, ...]]:
    """All x in (Z/q)^d with rows.x == rhs, by chunked exhaustive enumeration."""
    d = len(rows[0]) if rows else 0
    if d == 0:
        raise ValueError("cannot infer the number of unknowns from an empty system")
    total = q**d
    if total > budget:
        raise BudgetExceeded(f"{q}^{d} = {total} candidates exceeds budget {budget}")
    a = np.asarray(rows, dtype=np.int64).reshape(len(rows), d) % q
    b = np.asarray(rhs, dtype=np.int64) % q
    powers = q ** np.arange(d, dtype=np.int64)
    out: list[tuple[int, ...]] = []
    for start in range(0, total, _ENUM_CHUNK):
        idx = np.arange(start, min(start + _ENUM_CHUNK, total), dtype=np.int64)
        cand = (idx[:, None] // powers) % q
        # filter row by row so later rows only scan the survivors
        for row, target in zip(a, b):
            cand = cand[(cand @ row) % q == target]
            if not len(cand):
                break
        out.extend(tuple(int(v) for v in row) for row in cand)
    return out


def solve_linear(
    rows: Sequence[Sequence[int]],
    rhs: Sequence[int],
    modulus: Modulus | int,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """All solution vectors of rows.x == rhs over Z/n.

    Solved per prime-power factor by exhaustive enumeration, then CRT-combined;
    the solution count is the product of the per-factor counts.
    """
    m = as_modulus(modulus)
    if not rows:
        raise ValueError("system must have at least one row")
    d = len(rows[0])
    if d > MAX_UNKNOWNS:
        raise ValueError(f"at most {MAX_UNKNOWNS} unknowns supported, got {d}")
    if len(rhs) != len(rows):
        raise ValueError("rhs length must match the number of rows")
    # duplicate rows only slow the scan down
    deduped = sorted({(tuple(int(c) % m.n for c in row), int(b) % m.n) for row, b in zip(rows, rhs)})
    rows = [list(r) for r, _ in deduped]
    rhs = [b for _, b in deduped]
    per_factor: list[tuple[int, list[tuple[int, ...]]]] = []
    for q in m.prime_powers():
        sols = _solutions_mod(rows, rhs, q, budget)
        if not sols:
            return []
        per_factor.append((q, sols))
    moduli = [q for q, _ in per_factor]
    combined = [
        tuple(_crt_ints([part[i] for part in combo], moduli) for i in range(d))
        for combo in product(*(sols for _, sols in per_factor))
    ]
    combined.sort()
    return combined


def solve_homogeneous(
    rows: Sequence[Sequence[int]],
    modulus: Modulus | int,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """All x with rows.x == 0 over Z/n (see solve_linear)."""
    return solve_linear(rows, [0] * len(rows), modulus, budget)

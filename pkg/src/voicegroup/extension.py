"""The permutation extension of the voicing group.

Elements are pairs (sigma, j) with matrix P_sigma * M_j. Conjugating a
reflection by a voice permutation relabels its entry pair,

    sigma J^{r,s} sigma^-1 = J^{sigma r, sigma s},

which is what makes the product of two pairs expressible again as a pair:

    (sa, ja) * (sb, jb) = (sa*sb, (sb^-1 ja sb) * jb)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache

from .modring import Modulus, Residue, as_modulus, check_same_modulus
from .linalg import ALL_PERMS, Mat3, Perm3, Vec3, mat_mul, perm_matrix
from .voicing import (
    Generator,
    JElement,
    NotInJ,
    decode,
    enumerate_J,
    generator_for_pair,
    word_to_element,
)


class NotInExtension(ValueError):
    """The matrix is not in the extended voicing group."""


class CosetTag(enum.Enum):
    J_PLUS = "j+"
    J_MINUS = "j-"
    SIGMA_J_PLUS = "sigma-j+"
    SIGMA_J_MINUS = "sigma-j-"


def sigma_conjugate_generator(sigma: Perm3, g: Generator) -> Generator:
    """sigma J^{r,s} sigma^-1 = J^{sigma r, sigma s} (entry pairs are unordered)."""
    r, s = g.pair
    return generator_for_pair(sigma(r), sigma(s))


def _generator_word(j: JElement) -> list[Generator]:
    word = [Generator.U] * j.k
    word += [Generator.U, Generator.V] * j.m
    word += [Generator.U, Generator.W] * j.n
    return word


@lru_cache(maxsize=None)
def conjugate_j(sigma: Perm3, j: JElement) -> JElement:
    """sigma j sigma^-1, computed by conjugating a generator word letterwise."""
    if sigma.is_identity():
        return j
    conjugated = [sigma_conjugate_generator(sigma, g) for g in _generator_word(j)]
    return word_to_element(conjugated, j.modulus)


@dataclass(frozen=True)
class ExtElement:
    """A pair (sigma, j); distinct pairs are distinct elements."""

    sigma: Perm3
    j: JElement

    @property
    def modulus(self) -> Modulus:
        return self.j.modulus

    @classmethod
    def identity(cls, modulus: Modulus | int) -> "ExtElement":
        return cls(Perm3.identity(), JElement.identity(as_modulus(modulus)))

    @classmethod
    def from_j(cls, j: JElement) -> "ExtElement":
        return cls(Perm3.identity(), j)

    @classmethod
    def from_sigma(cls, sigma: Perm3, modulus: Modulus | int) -> "ExtElement":
        return cls(sigma, JElement.identity(as_modulus(modulus)))

    def is_identity(self) -> bool:
        return self.sigma.is_identity() and self.j.is_identity()

    def is_mode_reversing(self) -> bool:
        return self.j.k == 1

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        check_same_modulus(self.modulus, other.modulus)
        moved = conjugate_j(other.sigma.inverse(), self.j)
        return ExtElement(self.sigma * other.sigma, moved * other.j)

    def inverse(self) -> "ExtElement":
        return ExtElement(self.sigma.inverse(), conjugate_j(self.sigma, self.j.inverse()))

    def __pow__(self, t: int) -> "ExtElement":
        if t < 0:
            return self.inverse() ** (-t)
        acc = ExtElement.identity(self.modulus)
        base = self
        while t:
            if t & 1:
                acc = acc * base
            base = base * base
            t >>= 1
        return acc

    def order(self) -> int:
        acc = self
        t = 1
        while not acc.is_identity():
            acc = acc * self
            t += 1
        return t

    def matrix(self) -> Mat3:
        return mat_mul(perm_matrix(self.sigma, self.modulus), self.j.matrix())

    def apply(self, v: Vec3) -> Vec3:
        return self.sigma.apply(self.j.apply(v))

    def trace(self) -> Residue:
        return self.matrix().trace()

    def sort_key(self) -> tuple[int, int, int, int]:
        return (ALL_PERMS.index(self.sigma),) + self.j.sort_key()

    def __str__(self) -> str:
        parts = []
        if not self.sigma.is_identity():
            parts.append(self.sigma.cycle_notation())
        if not self.j.is_identity() or self.sigma.is_identity():
            parts.append(str(self.j))
        return " ".join(parts)


def ext_multiply(a: ExtElement, b: ExtElement) -> ExtElement:
    return a * b


def ext_inverse(a: ExtElement) -> ExtElement:
    return a.inverse()


def ext_matrix(a: ExtElement) -> Mat3:
    return a.matrix()


def ext_decode(m: Mat3) -> ExtElement:
    """Find the unique (sigma, j) with P_sigma * M_j == m, trying all six sigma."""
    for sigma in ALL_PERMS:
        stripped = mat_mul(perm_matrix(sigma.inverse(), m.modulus), m)
        try:
            return ExtElement(sigma, decode(stripped))
        except NotInJ:
            continue
    raise NotInExtension(f"matrix {m} is not in the extended voicing group mod {m.modulus.n}")


def trace(a: ExtElement) -> Residue:
    return a.trace()


def enumerate_extension(modulus: Modulus | int) -> list[ExtElement]:
    """All 6 * 2n^2 elements, in sort-key order."""
    m = as_modulus(modulus)
    return [ExtElement(sigma, j) for sigma in ALL_PERMS for j in enumerate_J(m)]


def enumerate_coset(tag: CosetTag, modulus: Modulus | int) -> list[ExtElement]:
    """The mode-preserving/-reversing halves of the group and of its plain part."""
    m = as_modulus(modulus)
    sigmas = (
        (Perm3.identity(),)
        if tag in (CosetTag.J_PLUS, CosetTag.J_MINUS)
        else ALL_PERMS
    )
    k = 0 if tag in (CosetTag.J_PLUS, CosetTag.SIGMA_J_PLUS) else 1
    return [
        ExtElement(sigma, JElement(k, mm, nn, m))
        for sigma in sigmas
        for mm in range(m.n)
        for nn in range(m.n)
    ]


def conjugacy_class(a: ExtElement, within: str = "extension") -> set[ExtElement]:
    """{g a g^-1} over the chosen group, by exhaustive conjugation."""
    if within == "J":
        group = [ExtElement.from_j(j) for j in enumerate_J(a.modulus)]
    elif within == "extension":
        group = enumerate_extension(a.modulus)
    else:
        raise ValueError(f"within must be 'J' or 'extension', got {within!r}")
    return {g * a * g.inverse() for g in group}


_TOKEN = re.compile(
    r"""
    \(\s*(?P<cycle>[123](?:\s*[123]){1,2})\s*\)   # permutation cycle, digits only
  | \(\s*(?P<word>[UVW]+)\s*\)(?:\^(?P<exp>-?\d+))?   # parenthesized word with power
  | (?P<letter>[UVW])
  | (?P<id>Id)
  | (?P<space>\s+)
    """,
    re.VERBOSE,
)


def parse_element(text: str, modulus: Modulus | int) -> ExtElement:
    """Parse forms like '(13) U (UV)^2 (UW)^7', 'VW', '(12)U(UV)^3', 'Id'.

    Cycles carry no commas (permutations), and any interleaving of permutation
    and generator factors is accepted; the result is their ordered product.
    """
    m = as_modulus(modulus)
    acc = ExtElement.identity(m)
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f"cannot parse element {text!r} at position {pos}")
        pos = match.end()
        if match.group("space") or match.group("id"):
            continue
        if match.group("cycle"):
            digits = re.sub(r"\s", "", match.group("cycle"))
            factor = ExtElement.from_sigma(Perm3.from_cycle(f"({digits})"), m)
        elif match.group("word"):
            j = word_to_element(match.group("word"), m)
            exp = int(match.group("exp")) if match.group("exp") else 1
            factor = ExtElement.from_j(j**exp)
        else:
            factor = ExtElement.from_j(JElement.from_generator(Generator[match.group("letter")], m))
        acc = acc * factor
    return acc

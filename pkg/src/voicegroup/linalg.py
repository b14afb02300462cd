"""3-vectors, 3x3 matrices, voice permutations, and componentwise affine maps
over Z/n.

Vectors are columns and matrices act on the left. Permutations follow the
convention that the rightmost function is applied first, and sigma moves the
entry in slot j to slot sigma(j): sigma(x1,x2,x3) = (x_{sigma^-1 1},
x_{sigma^-1 2}, x_{sigma^-1 3}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .modring import Modulus, Residue, as_modulus, check_same_modulus


@dataclass(frozen=True)
class Vec3:
    """A 3-tuple over Z/n, entries normalized to [0, n)."""

    entries: tuple[int, int, int]
    modulus: Modulus

    def __post_init__(self):
        e = tuple(int(v) % self.modulus.n for v in self.entries)
        if len(e) != 3:
            raise ValueError(f"expected 3 entries, got {len(e)}")
        object.__setattr__(self, "entries", e)

    @classmethod
    def of(cls, x: int, y: int, z: int, modulus: Modulus | int) -> "Vec3":
        return cls((x, y, z), as_modulus(modulus))

    @property
    def x(self) -> int:
        return self.entries[0]

    @property
    def y(self) -> int:
        return self.entries[1]

    @property
    def z(self) -> int:
        return self.entries[2]

    def shift(self, c: int) -> "Vec3":
        """Add the constant c to every component."""
        return Vec3(tuple(v + c for v in self.entries), self.modulus)

    def __add__(self, other: "Vec3") -> "Vec3":
        check_same_modulus(self.modulus, other.modulus)
        return Vec3(tuple(a + b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __sub__(self, other: "Vec3") -> "Vec3":
        check_same_modulus(self.modulus, other.modulus)
        return Vec3(tuple(a - b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.entries) + ")"


@dataclass(frozen=True)
class Mat3:
    """A 3x3 matrix over Z/n, row-major, entries normalized to [0, n)."""

    rows: tuple[tuple[int, int, int], ...]
    modulus: Modulus

    def __post_init__(self):
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("expected a 3x3 matrix")
        n = self.modulus.n
        object.__setattr__(
            self, "rows", tuple(tuple(int(v) % n for v in row) for row in self.rows)
        )

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], modulus: Modulus | int) -> "Mat3":
        return cls(tuple(tuple(r) for r in rows), as_modulus(modulus))

    @classmethod
    def identity(cls, modulus: Modulus | int) -> "Mat3":
        return cls.of(((1, 0, 0), (0, 1, 0), (0, 0, 1)), modulus)

    def __matmul__(self, other):
        if isinstance(other, Mat3):
            return mat_mul(self, other)
        if isinstance(other, Vec3):
            return mat_vec(self, other)
        return NotImplemented

    def trace(self) -> Residue:
        return Residue(sum(self.rows[i][i] for i in range(3)), self.modulus)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(v) for v in r) + "]" for r in self.rows) + "]"


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    check_same_modulus(a.modulus, b.modulus)
    n = a.modulus.n
    rows = tuple(
        tuple(sum(a.rows[i][k] * b.rows[k][j] for k in range(3)) % n for j in range(3))
        for i in range(3)
    )
    return Mat3(rows, a.modulus)


def mat_vec(a: Mat3, v: Vec3) -> Vec3:
    check_same_modulus(a.modulus, v.modulus)
    n = a.modulus.n
    return Vec3(
        tuple(sum(a.rows[i][k] * v.entries[k] for k in range(3)) % n for i in range(3)),
        a.modulus,
    )


def identity(modulus: Modulus | int) -> Mat3:
    return Mat3.identity(modulus)


def determinant(a: Mat3) -> Residue:
    """Cofactor-expansion determinant mod n."""
    (r, s, t), (u, v, w), (x, y, z) = a.rows
    det = r * (v * z - w * y) - s * (u * z - w * x) + t * (u * y - v * x)
    return Residue(det, a.modulus)


def is_invertible(a: Mat3) -> bool:
    """Invertible over Z/n iff the determinant is a unit."""
    return determinant(a).is_unit()


_PERM_IMAGES = {
    "id": (1, 2, 3),
    "(12)": (2, 1, 3),
    "(13)": (3, 2, 1),
    "(23)": (1, 3, 2),
    "(123)": (2, 3, 1),
    "(132)": (3, 1, 2),
}


@dataclass(frozen=True)
class Perm3:
    """A permutation of {1, 2, 3}, stored as (sigma(1), sigma(2), sigma(3))."""

    image: tuple[int, int, int]

    def __post_init__(self):
        if tuple(sorted(self.image)) != (1, 2, 3):
            raise ValueError(f"not a permutation of {{1,2,3}}: {self.image}")

    @classmethod
    def identity(cls) -> "Perm3":
        return cls((1, 2, 3))

    @classmethod
    def from_cycle(cls, text: str) -> "Perm3":
        """Parse cycle notation: '(13)', '(123)'; 'id', '()' and 'e' are the identity."""
        key = text.replace(" ", "")
        if key in ("id", "()", "e", ""):
            return cls.identity()
        if key in _PERM_IMAGES:
            return cls(_PERM_IMAGES[key])
        raise ValueError(f"cannot parse permutation {text!r}")

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        """Composition, rightmost first: (self*other)(i) = self(other(i))."""
        return Perm3(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return Perm3(tuple(inv))

    def apply(self, triple):
        """Left action on 3-tuples: entry in slot j moves to slot sigma(j)."""
        if isinstance(triple, Vec3):
            return Vec3(self.apply(triple.entries), triple.modulus)
        out = [None, None, None]
        for j in (1, 2, 3):
            out[self(j) - 1] = triple[j - 1]
        return tuple(out)

    def is_identity(self) -> bool:
        return self.image == (1, 2, 3)

    def cycle_type(self) -> str:
        fixed = sum(1 for i in (1, 2, 3) if self(i) == i)
        if fixed == 3:
            return "identity"
        if fixed == 1:
            return "transposition"
        return "three_cycle"

    def cycle_notation(self) -> str:
        for text, image in _PERM_IMAGES.items():
            if image == self.image:
                return text
        raise AssertionError("unreachable")

    def __str__(self) -> str:
        return self.cycle_notation()


ALL_PERMS: tuple[Perm3, ...] = tuple(Perm3(img) for img in _PERM_IMAGES.values())
TRANSPOSITION_12 = Perm3((2, 1, 3))
TRANSPOSITION_13 = Perm3((3, 2, 1))
TRANSPOSITION_23 = Perm3((1, 3, 2))


def perm_matrix(sigma: Perm3, modulus: Modulus | int) -> Mat3:
    """Matrix with columns e_{sigma(1)}, e_{sigma(2)}, e_{sigma(3)}."""
    m = as_modulus(modulus)
    rows = tuple(tuple(1 if sigma(j + 1) == i + 1 else 0 for j in range(3)) for i in range(3))
    return Mat3(rows, m)


@dataclass(frozen=True)
class AffineMap:
    """x -> linear.x + translation, acting on Vec3 over a shared modulus."""

    linear: Mat3
    translation: Vec3

    def __post_init__(self):
        check_same_modulus(self.linear.modulus, self.translation.modulus)

    @property
    def modulus(self) -> Modulus:
        return self.linear.modulus

    def __call__(self, v: Vec3) -> Vec3:
        return mat_vec(self.linear, v) + self.translation

    def is_componentwise(self) -> bool:
        """True for maps x -> u*x + q applied in every coordinate."""
        u = self.linear.rows[0][0]
        diag = all(
            self.linear.rows[i][j] == (u if i == j else 0) for i in range(3) for j in range(3)
        )
        t = self.translation.entries
        return diag and t[0] == t[1] == t[2]

    def __str__(self) -> str:
        if self.is_componentwise():
            u = self.linear.rows[0][0]
            q = self.translation.entries[0]
            return f"x -> {u}x+{q}"
        return f"{self.linear} + {self.translation}"


def affine_apply(f: AffineMap, v: Vec3) -> Vec3:
    return f(v)


def affine_compose(f: AffineMap, g: AffineMap) -> AffineMap:
    """f after g: x -> f(g(x))."""
    check_same_modulus(f.modulus, g.modulus)
    return AffineMap(mat_mul(f.linear, g.linear), mat_vec(f.linear, g.translation) + f.translation)


def scalar_affine(u: int, q: int, modulus: Modulus | int) -> AffineMap:
    """The componentwise map x -> u*x + q as an AffineMap."""
    m = as_modulus(modulus)
    lin = Mat3.of(((u, 0, 0), (0, u, 0), (0, 0, u)), m)
    return AffineMap(lin, Vec3.of(q, q, q, m))

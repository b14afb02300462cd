"""Consonant triads, uniform triadic transformations, and their linear model.

Abstract triads are pairs (root, mode) over Z/12. A uniform triadic
transformation <s, m, n> shifts major roots by m, minor roots by n, and
preserves or reverses mode according to the sign s. The map rho realizes
each such transformation as an invertible linear map on voicing space that
treats root-position triads exactly like the abstract transformation does;
its image is the stabilizer of the 24 root-position triads inside the
extended voicing group, here called the Hook group.

Root position writes minor triads as (r, r+3, r+7); dualistic root position
writes them reversed, (r+7, r+3, r). Majors are (r, r+4, r+7) in both.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .modring import Modulus
from .linalg import Mat3, Perm3, Vec3, ALL_PERMS, TRANSPOSITION_13
from .voicing import JElement
from .extension import ExtElement, ext_decode


class NotInHook(ValueError):
    """The element does not stabilize the root-position triads."""


class Mode(enum.Enum):
    MAJOR = "major"
    MINOR = "minor"


_NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

_TWELVE = Modulus(12)


@dataclass(frozen=True)
class TriadId:
    """An abstract consonant triad: root pitch class and mode, over Z/12."""

    root: int
    mode: Mode

    def __post_init__(self):
        object.__setattr__(self, "root", int(self.root) % 12)

    def name(self) -> str:
        base = _NOTE_NAMES[self.root]
        return base if self.mode is Mode.MAJOR else base.lower()

    def __str__(self) -> str:
        return self.name()


@dataclass(frozen=True)
class TriadClass:
    """A classified voicing: which triad it is, and the reordering from root position."""

    id: TriadId
    voicing: Perm3


def all_triads() -> list[TriadId]:
    return [TriadId(r, mode) for mode in Mode for r in range(12)]


def root_position_tuple(id: TriadId) -> Vec3:
    """(r, r+4, r+7) for major, (r, r+3, r+7) for minor."""
    r = id.root
    third = 4 if id.mode is Mode.MAJOR else 3
    return Vec3.of(r, r + third, r + 7, _TWELVE)


def dualistic_tuple(id: TriadId) -> Vec3:
    """(r, r+4, r+7) for major, (r+7, r+3, r) for minor."""
    if id.mode is Mode.MAJOR:
        return root_position_tuple(id)
    r = id.root
    return Vec3.of(r + 7, r + 3, r, _TWELVE)


def classify(v: Vec3) -> TriadClass | None:
    """Identify a tuple as a voiced consonant triad, or None.

    The returned voicing is the unique permutation carrying the triad's
    root-position tuple to v (consonant triads have three distinct pitch
    classes, so the permutation is unique).
    """
    if v.modulus.n != 12:
        raise ValueError("triad classification is defined over Z/12")
    pcs = set(v.entries)
    if len(pcs) != 3:
        return None
    for r in pcs:
        for mode, third in ((Mode.MAJOR, 4), (Mode.MINOR, 3)):
            if {r, (r + third) % 12, (r + 7) % 12} == pcs:
                id = TriadId(r, mode)
                root_pos = root_position_tuple(id)
                for perm in ALL_PERMS:
                    if perm.apply(root_pos) == v:
                        return TriadClass(id, perm)
                raise AssertionError("unreachable: matching set without matching ordering")
    return None


def orbit(generators: Iterable[ExtElement], seed: Vec3) -> set[Vec3]:
    """BFS closure of seed under the generators and their inverses."""
    gens = list(generators)
    gens += [g.inverse() for g in gens]
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = g.apply(v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def stabilizer_of_set(group: Iterable[ExtElement], target: Iterable[Vec3]) -> list[ExtElement]:
    """All g in the group with g(target) == target setwise."""
    target_set = set(target)
    out = []
    for g in group:
        if {g.apply(v) for v in target_set} == target_set:
            out.append(g)
    return out


Sign = str  # "+" or "-"


@dataclass(frozen=True)
class UTT:
    """A uniform triadic transformation <sign, t_major, t_minor> over Z/12."""

    sign: Sign
    t_major: int
    t_minor: int

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        object.__setattr__(self, "t_major", int(self.t_major) % 12)
        object.__setattr__(self, "t_minor", int(self.t_minor) % 12)

    @classmethod
    def identity(cls) -> "UTT":
        return cls("+", 0, 0)

    @classmethod
    def parse(cls, text: str) -> "UTT":
        """Parse '<+,7,5>' (angle brackets optional, unicode minus accepted)."""
        body = text.strip().lstrip("<").rstrip(">")
        parts = [p.strip().replace("−", "-") for p in body.split(",")]
        if len(parts) != 3 or parts[0] not in ("+", "-"):
            raise ValueError(f"cannot parse triadic transformation {text!r}")
        return cls(parts[0], int(parts[1]), int(parts[2]))

    def apply(self, t: TriadId) -> TriadId:
        shift = self.t_major if t.mode is Mode.MAJOR else self.t_minor
        mode = t.mode
        if self.sign == "-":
            mode = Mode.MINOR if mode is Mode.MAJOR else Mode.MAJOR
        return TriadId(t.root + shift, mode)

    def compose(self, other: "UTT") -> "UTT":
        """self after other (other is applied first)."""
        sign = "+" if self.sign == other.sign else "-"
        if other.sign == "+":
            return UTT(sign, other.t_major + self.t_major, other.t_minor + self.t_minor)
        return UTT(sign, other.t_major + self.t_minor, other.t_minor + self.t_major)

    def __mul__(self, other: "UTT") -> "UTT":
        return self.compose(other)

    def inverse(self) -> "UTT":
        if self.sign == "+":
            return UTT("+", -self.t_major, -self.t_minor)
        return UTT("-", -self.t_minor, -self.t_major)

    def __str__(self) -> str:
        return f"<{self.sign},{self.t_major},{self.t_minor}>"


def utt_apply(u: UTT, t: TriadId) -> TriadId:
    return u.apply(t)


def utt_compose(a: UTT, b: UTT) -> UTT:
    return a.compose(b)


def all_utts() -> list[UTT]:
    return [UTT(s, m, n) for s in ("+", "-") for m in range(12) for n in range(12)]


def is_in_hook(e: ExtElement) -> bool:
    """Stabilizing root position forces sigma = id on the mode-preserving half
    and sigma = (13) on the mode-reversing half."""
    if e.modulus.n != 12:
        return False
    if e.j.k == 0:
        return e.sigma.is_identity()
    return e.sigma == TRANSPOSITION_13


@dataclass(frozen=True)
class HookElement:
    """An element of the stabilizer of the 24 root-position triads."""

    underlying: ExtElement

    def __post_init__(self):
        if not is_in_hook(self.underlying):
            raise NotInHook(f"{self.underlying} does not preserve root-position triads")

    @property
    def modulus(self) -> Modulus:
        return self.underlying.modulus

    def __mul__(self, other: "HookElement") -> "HookElement":
        return HookElement(self.underlying * other.underlying)

    def inverse(self) -> "HookElement":
        return HookElement(self.underlying.inverse())

    def __pow__(self, t: int) -> "HookElement":
        return HookElement(self.underlying**t)

    def matrix(self) -> Mat3:
        return self.underlying.matrix()

    def apply(self, v: Vec3) -> Vec3:
        return self.underlying.apply(v)

    def apply_triad(self, t: TriadId) -> TriadId:
        image = classify(self.apply(root_position_tuple(t)))
        assert image is not None and image.voicing.is_identity()
        return image.id

    def __str__(self) -> str:
        return str(self.underlying)


def hook_elements() -> list[HookElement]:
    """All 288 elements: (UV)^m (UW)^n and (13) U (UV)^m (UW)^n."""
    out = []
    for k, sigma in ((0, Perm3.identity()), (1, TRANSPOSITION_13)):
        for m in range(12):
            for n in range(12):
                out.append(HookElement(ExtElement(sigma, JElement(k, m, n, _TWELVE))))
    return out


def rho_matrix(u: UTT) -> Mat3:
    """The unique linear extension of a triadic transformation from the
    root-position triads (which contain a basis of voicing space) to all
    3-tuples, written out entrywise."""
    m, n = u.t_major, u.t_minor
    if u.sign == "+":
        rows = (
            (1 - 4 * m - 3 * n, m - n, 3 * m + 4 * n),
            (-4 * m - 3 * n, 1 + m - n, 3 * m + 4 * n),
            (-4 * m - 3 * n, m - n, 1 + 3 * m + 4 * n),
        )
    else:
        rows = (
            (1 - 4 * m - 3 * n, m - n, 3 * m + 4 * n),
            (1 - 4 * m - 3 * n, -1 + m - n, 1 + 3 * m + 4 * n),
            (-4 * m - 3 * n, m - n, 1 + 3 * m + 4 * n),
        )
    return Mat3.of(rows, _TWELVE)


def rho(u: UTT) -> HookElement:
    """Realize a triadic transformation as a Hook-group element."""
    return HookElement(ext_decode(rho_matrix(u)))


def rho_inverse(h: HookElement) -> UTT:
    """Read <s, m, n> off a Hook element's action on C major and c minor."""
    sign = "-" if h.underlying.j.k else "+"
    maj = classify(h.apply(root_position_tuple(TriadId(0, Mode.MAJOR))))
    mnr = classify(h.apply(root_position_tuple(TriadId(0, Mode.MINOR))))
    assert maj is not None and mnr is not None
    u = UTT(sign, maj.id.root, mnr.id.root)
    assert rho(u).underlying == h.underlying
    return u


def hook_normal_form_A(h: HookElement) -> tuple[int, int, int]:
    """(k, m, n) with sigma implied: id when k = 0, (13) when k = 1."""
    j = h.underlying.j
    return (j.k, j.m, j.n)


def hook_normal_form_B(h: HookElement) -> tuple[int, int]:
    """(p, n) with h == ((13)U)^p (UW)^n, p in [0,24), n in [0,12).

    Even powers of (13)U are (UV)^-m and odd powers are (13)U(UV)^-m, so the
    parity of p is the mode parity and p determines the (UV) exponent; n is
    then read off by cancelling ((13)U)^-p.
    """
    k, m, _ = hook_normal_form_A(h)
    p = 2 * ((-m) % 12) + k
    t = hook_generator_13U()
    remainder = (t.underlying ** (-p)) * h.underlying
    assert remainder.sigma.is_identity() and remainder.j.k == 0 and remainder.j.m == 0
    return (p, remainder.j.n)


def hook_from_normal_form_B(p: int, n: int) -> HookElement:
    t = hook_generator_13U()
    uw = HookElement(ExtElement.from_j(JElement(0, 0, n, _TWELVE)))
    return (t**p) * uw


def hook_generator_13U() -> HookElement:
    return HookElement(ExtElement(TRANSPOSITION_13, JElement(1, 0, 0, _TWELVE)))


def hook_generator_13W() -> HookElement:
    return HookElement(ExtElement(TRANSPOSITION_13, JElement(1, 0, 1, _TWELVE)))


def wreath_generators() -> tuple[HookElement, HookElement, HookElement]:
    """(E, F, G): E = (13)W swaps the two root-translation directions, F
    translates root-position majors by 1 fixing minors, G the reverse."""
    e = hook_generator_13W()
    f = HookElement(ExtElement.from_j(JElement(0, 4, -1, _TWELVE)))
    g = HookElement(ExtElement.from_j(JElement(0, 3, 1, _TWELVE)))
    return e, f, g


def rho_from_wreath(u: UTT) -> HookElement:
    """rho via the wreath generators: E^index(s) F^m G^n."""
    e, f, g = wreath_generators()
    acc = e if u.sign == "-" else HookElement(ExtElement.identity(_TWELVE))
    return acc * (f**u.t_major) * (g**u.t_minor)

"""Transformational analysis of chord progressions.

A progression is an ordered list of voicings over one modulus. The solvers
look for group elements carrying each tuple to its successor: for a fixed
permutation part sigma and reflection bit k, the condition

    sigma(U^k(s) + (m(z-x) + n(z-y)) * (1,1,1)) = t

is linear in (m, n) once the diagonal difference sigma^-1(t) - U^k(s) is
constant; stacking one equation per step gives an exact system solved per
prime-power factor. A brute-force scan over the whole group is kept as the
oracle for the linear route.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .modring import Modulus, as_modulus, check_same_modulus, solve_linear
from .linalg import ALL_PERMS, AffineMap, Mat3, Perm3, TRANSPOSITION_13, Vec3, mat_mul, scalar_affine
from .voicing import JElement
from .extension import ExtElement, enumerate_extension
from .structure import centralizer_in_Aff
from .triadic import hook_elements


@dataclass(frozen=True)
class Progression:
    """An ordered, optionally cyclic, sequence of voicings over one modulus."""

    modulus: Modulus
    tuples: tuple[Vec3, ...]
    cyclic: bool = False

    def __post_init__(self):
        if not self.tuples:
            raise ValueError("progression must contain at least one tuple")
        for v in self.tuples:
            check_same_modulus(self.modulus, v.modulus)

    @classmethod
    def of(
        cls, entries: Sequence[Sequence[int]], modulus: Modulus | int, cyclic: bool = False
    ) -> "Progression":
        m = as_modulus(modulus)
        return cls(m, tuple(Vec3.of(*e, m) for e in entries), cyclic)

    def steps(self) -> list[tuple[Vec3, Vec3]]:
        """Consecutive pairs, including the wrap-around pair when cyclic."""
        pairs = list(zip(self.tuples, self.tuples[1:]))
        if self.cyclic and len(self.tuples) > 1:
            pairs.append((self.tuples[-1], self.tuples[0]))
        return pairs

    def to_jsonable(self) -> dict:
        return {
            "modulus": self.modulus.n,
            "cyclic": self.cyclic,
            "tuples": [list(v.entries) for v in self.tuples],
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "Progression":
        if not isinstance(data, dict) or "modulus" not in data or "tuples" not in data:
            raise ValueError("progression JSON needs 'modulus' and 'tuples'")
        return cls.of(data["tuples"], data["modulus"], bool(data.get("cyclic", False)))

    @classmethod
    def from_json(cls, text: str) -> "Progression":
        return cls.from_jsonable(json.loads(text))


_GROUP_CASES = {
    "J": tuple((Perm3.identity(), k) for k in (0, 1)),
    "extension": tuple((sigma, k) for sigma in ALL_PERMS for k in (0, 1)),
    "hook": ((Perm3.identity(), 0), (TRANSPOSITION_13, 1)),
}


def _step_equation(src: Vec3, dst: Vec3, sigma: Perm3, k: int) -> tuple[list[int], int] | None:
    """The linear condition on (m, n) for sigma U^k shift(m,n) to map src to dst.

    Returns (row, rhs) or None when the required difference is not a
    constant-diagonal vector (no solutions for this sigma, k).
    """
    n = src.modulus.n
    x, y, z = src.entries
    base = (y, x, (-z + x + y) % n) if k else src.entries
    target = sigma.inverse().apply(dst).entries
    diffs = [(t - b) % n for t, b in zip(target, base)]
    if diffs[0] != diffs[1] or diffs[0] != diffs[2]:
        return None
    return [(z - x) % n, (z - y) % n], diffs[0]


def solve_step(src: Vec3, dst: Vec3, group: str = "extension") -> list[ExtElement]:
    """All elements g of the chosen group with g(src) == dst.

    Each (sigma, k) case is a one-equation linear system in (m, n); the empty
    list is a valid result.
    """
    check_same_modulus(src.modulus, dst.modulus)
    if group not in _GROUP_CASES:
        raise ValueError(f"group must be one of {sorted(_GROUP_CASES)}, got {group!r}")
    out = []
    for sigma, k in _GROUP_CASES[group]:
        eq = _step_equation(src, dst, sigma, k)
        if eq is None:
            continue
        row, rhs = eq
        for m, n in solve_linear([row], [rhs], src.modulus):
            out.append(ExtElement(sigma, JElement(k, m, n, src.modulus)))
    out.sort(key=ExtElement.sort_key)
    return out


def solve_step_bruteforce(src: Vec3, dst: Vec3, group: str = "extension") -> list[ExtElement]:
    """Oracle for solve_step: filter the fully enumerated group."""
    if group == "extension":
        candidates = enumerate_extension(src.modulus)
    elif group == "J":
        from .voicing import enumerate_J

        candidates = [ExtElement.from_j(j) for j in enumerate_J(src.modulus)]
    elif group == "hook":
        candidates = [h.underlying for h in hook_elements()]
    else:
        raise ValueError(f"unknown group {group!r}")
    out = [g for g in candidates if g.apply(src) == dst]
    out.sort(key=ExtElement.sort_key)
    return out


@dataclass(frozen=True)
class UniformSolution:
    """One (sigma, k, m, n) realizing every step of a progression."""

    sigma: Perm3
    k: int
    m: int
    n: int
    matrix: Mat3

    @property
    def element(self) -> ExtElement:
        return ExtElement(self.sigma, JElement(self.k, self.m, self.n, self.matrix.modulus))

    def __str__(self) -> str:
        return str(self.element)


def solve_uniform(prog: Progression, sigma: Perm3, k: int) -> list[UniformSolution]:
    """All (m, n) such that sigma U^k shift(m,n) maps every tuple to its successor.

    Stacks one linear equation per step (wrap-around included when cyclic)
    and solves exactly; every returned solution is re-verified against the
    progression before being handed back.
    """
    if len(prog.tuples) < 2:
        raise ValueError("uniform solving needs at least two tuples")
    if k not in (0, 1):
        raise ValueError("k must be 0 or 1")
    rows, rhs = [], []
    for src, dst in prog.steps():
        eq = _step_equation(src, dst, sigma, k)
        if eq is None:
            return []
        rows.append(eq[0])
        rhs.append(eq[1])
    out = []
    for m, n in solve_linear(rows, rhs, prog.modulus):
        g = ExtElement(sigma, JElement(k, m, n, prog.modulus))
        assert all(g.apply(src) == dst for src, dst in prog.steps())
        out.append(UniformSolution(sigma, k, m, n, g.matrix()))
    return out


def solve_uniform_all_cases(prog: Progression) -> list[UniformSolution]:
    """solve_uniform over all twelve (sigma, k) cases."""
    out = []
    for sigma in ALL_PERMS:
        for k in (0, 1):
            out.extend(solve_uniform(prog, sigma, k))
    out.sort(key=lambda s: s.element.sort_key())
    return out


def rich(v: Vec3) -> Vec3:
    """Retrograde inversion enchaining: keep the last two entries in front,
    close with the reflected first entry."""
    x, y, z = v.entries
    return Vec3.of(y, z, -x + y + z, v.modulus)


def rich_element(modulus: Modulus | int) -> ExtElement:
    """RICH as a group element: (13) V."""
    m = as_modulus(modulus)
    return ExtElement(TRANSPOSITION_13, JElement(1, 1, 0, m))


def orbit_of_element(g: ExtElement, seed: Vec3) -> list[Vec3]:
    """seed, g(seed), g^2(seed), ... up to the first return to seed."""
    out = [seed]
    current = g.apply(seed)
    while current != seed:
        out.append(current)
        current = g.apply(current)
    return out


def find_affine_morphisms(
    a: Progression, b: Progression, restrict_to_centralizer: bool = False
) -> list[AffineMap]:
    """All affine maps f with f(a_i) == b_i for every i.

    By default the search space is the n^2 componentwise maps x -> u*x + q
    (all of which commute with the voicing group). With
    restrict_to_centralizer the search widens to the full affine centralizer
    family (every matrix commuting with the group, paired with a diagonal
    translation), which contains non-componentwise members.
    """
    check_same_modulus(a.modulus, b.modulus)
    if len(a.tuples) != len(b.tuples):
        raise ValueError("progressions must have equal lengths")
    m = a.modulus
    if restrict_to_centralizer:
        candidates = list(centralizer_in_Aff(m).elements)
    else:
        candidates = [scalar_affine(u, q, m) for u in range(m.n) for q in range(m.n)]
    return [
        f for f in candidates if all(f(src) == dst for src, dst in zip(a.tuples, b.tuples))
    ]


def verify_morphism_commutation(f: AffineMap, labels: Iterable[ExtElement]) -> bool:
    """True iff f g = g f as maps for every label g.

    In homogeneous coordinates this is the matrix condition A M == M A
    together with M b == b for the translation part.
    """
    a = f.linear
    b = f.translation
    for g in labels:
        mat = g.matrix()
        if mat_mul(a, mat) != mat_mul(mat, a):
            return False
        if mat @ b != b:
            return False
    return True


def find_rich_voicing_cycle(
    chords: Sequence[frozenset[int] | set[int]], modulus: Modulus | int
) -> list[Vec3] | None:
    """Search for a RICH cycle through the given cyclic chord sequence.

    Tries every ordering of the first chord as the starting voicing and
    iterates RICH; succeeds when each image realizes the next chord (as a
    pitch-class set) and the orbit closes after exactly len(chords) steps.
    """
    m = as_modulus(modulus)
    sets = [frozenset(c) for c in chords]
    for start in permutations(sorted(sets[0])):
        v = Vec3.of(*start, m)
        cycle = [v]
        current = v
        ok = True
        for i in range(1, len(sets) + 1):
            current = rich(current)
            if i < len(sets):
                if frozenset(current.entries) != sets[i]:
                    ok = False
                    break
                cycle.append(current)
            elif current != v:
                ok = False
        if ok:
            return cycle
    return None


def export_network_json(prog: Progression, labels: Sequence[ExtElement] | None = None) -> dict:
    """Graph document: tuples as nodes, one directed edge per step."""
    steps = prog.steps()
    if labels is not None and len(labels) != len(steps):
        raise ValueError(f"expected {len(steps)} labels (one per edge), got {len(labels)}")
    nodes: list[Vec3] = []
    index: dict[Vec3, int] = {}
    for v in prog.tuples:
        if v not in index:
            index[v] = len(nodes)
            nodes.append(v)
    edges = []
    for i, (src, dst) in enumerate(steps):
        edge = {"from": index[src], "to": index[dst]}
        if labels is not None:
            edge["label"] = str(labels[i])
        edges.append(edge)
    return {
        "modulus": prog.modulus.n,
        "cyclic": prog.cyclic,
        "nodes": [list(v.entries) for v in nodes],
        "edges": edges,
    }


def export_network_dot(prog: Progression, labels: Sequence[ExtElement] | None = None) -> str:
    """DOT rendering of the progression network, deterministically ordered."""
    doc = export_network_json(prog, labels)
    names = ["(" + ",".join(str(x) for x in node) + ")" for node in doc["nodes"]]
    lines = ["digraph progression {", "  rankdir=LR;"]
    for name in names:
        lines.append(f'  "{name}";')
    for edge in doc["edges"]:
        attr = f' [label="{edge["label"]}"]' if "label" in edge else ""
        lines.append(f'  "{names[edge["from"]]}" -> "{names[edge["to"]]}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Irreducible root systems realized in classical (Bourbaki planche) coordinates.

Vectors are tuples of Fractions in the ambient coordinate space, whose
dimension may exceed the rank (families A and G).  All pairings below are the
raw coordinate dot product; marks are normalization free, but comarks, double
comarks and the comark sum depend on this realization and are kept as exact
rationals rather than rescaled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Sequence, Tuple

from . import linalg

Vector = Tuple[Q, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# family -> (minimum rank, maximum rank or None for the infinite families)
RANK_RANGE: Dict[str, Tuple[int, int | None]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class ClosureError(RuntimeError):
    """The given simple roots do not generate a finite crystallographic system."""


@dataclass(frozen=True, order=True)
class RootSystemId:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in RANK_RANGE:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}"
            )
        lo, hi = RANK_RANGE[self.family]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            span = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise ValueError(f"family {self.family} admits rank {span}, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemId":
        """Parse compact ids like 'A2' or 'E8'."""
        t = text.strip()
        if len(t) < 2 or not t[1:].isdigit():
            raise ValueError(f"malformed root system id {text!r}")
        return cls(t[0].upper(), int(t[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in u)


def inner(u: Vector, v: Vector) -> Q:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Q(0))


def coroot(v: Vector) -> Vector:
    """2 v / (v|v)."""
    return vec_scale(Q(2) / inner(v, v), v)


def _unit(i: int, dim: int) -> Vector:
    return tuple(Q(1) if k == i else Q(0) for k in range(dim))


# Simple roots of E8; E6 and E7 take the first six and seven of them,
# realized inside the same eight-dimensional space.
_E8_SIMPLE: Tuple[Vector, ...] = (
    (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2), Q(1, 2)),
    (Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)),
    (Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0)),
    (Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)),
    (Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0), Q(0)),
    (Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0), Q(0)),
    (Q(0), Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0), Q(0)),
    (Q(0), Q(0), Q(0), Q(0), Q(0), Q(-1), Q(1), Q(0)),
)

_F4_SIMPLE: Tuple[Vector, ...] = (
    (Q(0), Q(1), Q(-1), Q(0)),
    (Q(0), Q(0), Q(1), Q(-1)),
    (Q(0), Q(0), Q(0), Q(1)),
    (Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)),
)

_G2_SIMPLE: Tuple[Vector, ...] = (
    (Q(1), Q(-1), Q(0)),
    (Q(-2), Q(1), Q(1)),
)


def simple_roots(ident: RootSystemId) -> List[Vector]:
    """Simple roots of the system in its classical coordinate realization."""
    family, n = ident.family, ident.rank
    if family == "A":
        dim = n + 1
        return [vec_sub(_unit(i, dim), _unit(i + 1, dim)) for i in range(n)]
    if family in ("B", "C", "D"):
        chain = [vec_sub(_unit(i, n), _unit(i + 1, n)) for i in range(n - 1)]
        if family == "B":
            chain.append(_unit(n - 1, n))
        elif family == "C":
            chain.append(vec_scale(2, _unit(n - 1, n)))
        else:
            chain.append(vec_add(_unit(n - 2, n), _unit(n - 1, n)))
        return chain
    if family == "E":
        return list(_E8_SIMPLE[:n])
    if family == "F":
        return list(_F4_SIMPLE)
    return list(_G2_SIMPLE)


def generate_positive_roots(simple: Sequence[Vector], max_height: int = 1000) -> List[Vector]:
    """Close the simple roots under root addition, sorted by (height, coordinates).

    Level by level: beta + alpha is a root iff the alpha-string through beta
    extends upward, i.e. p - <beta, alpha_check> >= 1 where p counts how far
    the string descends from beta through known roots.
    """
    base = [tuple(Q(x) for x in a) for a in simple]
    if not base:
        raise ValueError("at least one simple root required")
    dim = len(base[0])
    for a in base:
        if len(a) != dim:
            raise ValueError("dimension mismatch")
        if not any(a):
            raise ValueError("zero simple root")
    if len(set(base)) != len(base):
        raise ValueError("duplicate simple roots")

    heights: Dict[Vector, int] = {a: 1 for a in base}
    current = list(base)
    height = 1
    while current:
        if height >= max_height:
            raise ClosureError(
                f"no closure below height {max_height}; "
                "the simple roots do not generate a finite system"
            )
        found: List[Vector] = []
        for beta in current:
            for alpha in base:
                cand = vec_add(beta, alpha)
                if cand in heights:
                    continue
                p = 0
                down = vec_sub(beta, alpha)
                while down in heights:
                    p += 1
                    down = vec_sub(down, alpha)
                cartan = 2 * inner(beta, alpha) / inner(alpha, alpha)
                if cartan.denominator != 1:
                    raise ClosureError(
                        f"non-integral string number {cartan}; "
                        "input is not crystallographic"
                    )
                if p - cartan >= 1:
                    if not any(cand):
                        raise ClosureError(
                            "closure reached the zero vector; "
                            "input is not a finite root base"
                        )
                    heights[cand] = height + 1
                    found.append(cand)
        current = found
        height += 1
    return sorted(heights, key=lambda v: (heights[v], v))


def highest_root(simple: Sequence[Vector], positive: Sequence[Vector]) -> tuple[Vector, Tuple[int, ...]]:
    """The unique maximal positive root and its coordinates in the simple basis."""
    rootset = set(positive)
    maximal = [
        b for b in positive
        if all(vec_add(b, a) not in rootset for a in simple)
    ]
    if len(maximal) != 1:
        raise ValueError(
            f"expected a unique highest root, found {len(maximal)}; "
            "the system is not irreducible"
        )
    theta = maximal[0]
    solution = linalg.solve([list(a) for a in simple], list(theta))
    if solution is None:
        raise ValueError("highest root is outside the span of the simple roots")
    marks = []
    for c in solution:
        if c.denominator != 1 or c <= 0:
            raise ValueError(f"mark {c} is not a positive integer")
        marks.append(int(c))
    return theta, tuple(marks)


def weyl_vectors(positive: Sequence[Vector]) -> tuple[Vector, Vector]:
    """Half-sum of the positive roots and half-sum of the positive coroots."""
    dim = len(positive[0])
    total = tuple(Q(0) for _ in range(dim))
    total_check = total
    for a in positive:
        total = vec_add(total, a)
        total_check = vec_add(total_check, coroot(a))
    return vec_scale(Q(1, 2), total), vec_scale(Q(1, 2), total_check)


@dataclass(frozen=True)
class RootSystem:
    """Everything the identity checks need about one irreducible system.

    marks, comarks and double_comarks are indexed 0..rank; entry 0 belongs to
    alpha0, the negated highest root.  comark i is (alpha_i|alpha_i) n_i / 2
    and double comark i is (alpha_i|alpha_i) comark_i / 2, in the raw
    coordinate normalization.  coxeter_number is the mark sum; comark_sum is
    its analogue on the comark side and need not match the textbook dual
    Coxeter number when the highest root is not normalized to length 2.
    """

    ident: RootSystemId
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    alpha0: Vector
    marks: Tuple[int, ...]
    comarks: Tuple[Q, ...]
    double_comarks: Tuple[Q, ...]
    coxeter_number: int
    comark_sum: Q
    rho: Vector
    rho_check: Vector
    simply_laced: bool

    @property
    def family(self) -> str:
        return self.ident.family

    @property
    def rank(self) -> int:
        return self.ident.rank

    def height(self, root: Vector) -> int:
        """Sum of the simple-basis coordinates, computed as (root|rho_check)."""
        t = inner(root, self.rho_check)
        assert t.denominator == 1
        return int(t)

    def to_json_obj(self) -> dict:
        """JSON-ready table: rationals as 'p/q' strings, vectors as string arrays."""
        def vecs(vs):
            return [[str(x) for x in v] for v in vs]

        return {
            "family": self.family,
            "rank": self.rank,
            "positive_root_count": len(self.positive_roots),
            "coxeter_number": self.coxeter_number,
            "comark_sum": str(self.comark_sum),
            "marks": list(self.marks),
            "comarks": [str(c) for c in self.comarks],
            "double_comarks": [str(c) for c in self.double_comarks],
            "simply_laced": self.simply_laced,
            "alpha0": [str(x) for x in self.alpha0],
            "rho": [str(x) for x in self.rho],
            "rho_check": [str(x) for x in self.rho_check],
            "simple_roots": vecs(self.simple_roots),
            "positive_roots": vecs(self.positive_roots),
        }


def build(ident: RootSystemId) -> RootSystem:
    """Construct and cross-validate the full system for an admissible id."""
    simple = simple_roots(ident)
    positive = generate_positive_roots(simple)
    theta, node_marks = highest_root(simple, positive)
    marks = (1,) + node_marks
    nodes = (theta,) + tuple(simple)
    comarks = tuple(inner(a, a) * n / 2 for a, n in zip(nodes, marks))
    double_comarks = tuple(inner(a, a) * c / 2 for a, c in zip(nodes, comarks))
    rho, rho_check = weyl_vectors(positive)
    lengths = {inner(a, a) for a in positive}
    system = RootSystem(
        ident=ident,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        alpha0=vec_scale(-1, theta),
        marks=marks,
        comarks=comarks,
        double_comarks=double_comarks,
        coxeter_number=sum(marks),
        comark_sum=sum(comarks, Q(0)),
        rho=rho,
        rho_check=rho_check,
        simply_laced=len(lengths) == 1,
    )
    _validate(system)
    return system


def _validate(system: RootSystem) -> None:
    """Internal consistency ties between the generated pieces."""
    r, h = system.rank, system.coxeter_number
    assert 2 * len(system.positive_roots) == r * h, "root count must equal rank * h / 2"
    heights = sorted(system.height(a) for a in system.positive_roots)
    assert heights[0] == 1 and heights[-1] == h - 1, "heights must span [1, h-1]"
    assert set(heights) == set(range(1, h)), "every height in [1, h-1] must occur"

"""Finite simplicial complexes, integer chains and simplicial maps.

Simplices are stored with strictly increasing vertex tuples; orientation is
carried separately as a sign, so chain arithmetic works on canonical, hashable
keys.  Simplices of each dimension are ordered lexicographically, which makes
boundary matrices (and everything downstream of them) deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DimensionError, DomainMismatchError, InputError
from .linalg import IntMatrix


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex given by its strictly increasing tuple of vertex ids."""

    verts: tuple[int, ...]

    def __post_init__(self):
        v = self.verts
        if len(v) == 0:
            raise InputError("empty simplex")
        if any(a < 0 for a in v):
            raise InputError(f"negative vertex id in {v}")
        if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            raise InputError(f"simplex vertices must be strictly increasing: {v}")

    @property
    def dim(self) -> int:
        return len(self.verts) - 1

    def faces(self) -> list["Simplex"]:
        """The codimension-one faces, in the order used by the boundary map."""
        v = self.verts
        return [Simplex(v[:i] + v[i + 1:]) for i in range(len(v))]

    def __repr__(self):
        return f"<{','.join(map(str, self.verts))}>"


def oriented(vertices: Iterable[int]) -> tuple[Simplex, int]:
    """Sort a vertex tuple, returning (simplex, sign of the sorting permutation).

    Repeated vertices make the simplex degenerate and the sign zero.
    """
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return Simplex(tuple(sorted(set(vs)))), 0
    sign = 1
    # insertion sort; each adjacent swap flips the sign
    for i in range(1, len(vs)):
        j = i
        while j > 0 and vs[j - 1] > vs[j]:
            vs[j - 1], vs[j] = vs[j], vs[j - 1]
            sign = -sign
            j -= 1
    return Simplex(tuple(vs)), sign


@dataclass(frozen=True)
class OrientedSimplex:
    """A simplex together with an orientation sign relative to increasing order."""

    simplex: Simplex
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError(f"orientation sign must be +1 or -1, got {self.sign}")

    def reversed(self) -> "OrientedSimplex":
        return OrientedSimplex(self.simplex, -self.sign)

    def as_chain(self) -> "Chain":
        return Chain(self.simplex.dim, {self.simplex: self.sign})


class Chain:
    """An integer chain: a sparse map from simplices of one dimension to Z."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[Simplex, int] | None = None):
        if dim < 0:
            raise DimensionError("chain dimension must be non-negative")
        data = {}
        for s, c in (coeffs or {}).items():
            if c == 0:
                continue
            if s.dim != dim:
                raise DomainMismatchError(f"simplex {s} has dim {s.dim}, chain has dim {dim}")
            data[s] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", data)

    def __setattr__(self, *a):
        raise AttributeError("Chain is immutable")

    def __eq__(self, other):
        return isinstance(other, Chain) and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise DimensionError("cannot add chains of different dimension")
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.dim, out)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, n: int) -> "Chain":
        return Chain(self.dim, {s: n * c for s, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[Simplex]:
        return sorted(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return f"Chain({self.dim}, 0)"
        terms = " ".join(f"{c:+d}*{s!r}" for s, c in sorted(self.coeffs.items()))
        return f"Chain({self.dim}, {terms})"


def chain_from_oriented(items: Iterable[tuple[Iterable[int], int]], dim: int) -> Chain:
    """Build a chain from (vertex tuple, coefficient) pairs in arbitrary vertex order."""
    acc: dict[Simplex, int] = {}
    for verts, coeff in items:
        s, sign = oriented(verts)
        if sign == 0:
            continue
        acc[s] = acc.get(s, 0) + sign * coeff
    return Chain(dim, acc)


class SimplicialComplex:
    """A finite simplicial complex, closed under taking faces."""

    def __init__(self, vertex_count: int, simplices: Iterable[Simplex]):
        by_dim: dict[int, set[Simplex]] = {}
        for s in simplices:
            by_dim.setdefault(s.dim, set()).add(s)
        # closure check rather than silent completion: constructor expects closed input
        for k in sorted(by_dim, reverse=True):
            if k == 0:
                continue
            for s in by_dim[k]:
                for f in s.faces():
                    if f not in by_dim.get(k - 1, ()):
                        raise InputError(f"complex not face-closed: {f} missing (face of {s})")
        for k, ss in by_dim.items():
            for s in ss:
                if s.verts[-1] >= vertex_count:
                    raise InputError(f"vertex id {s.verts[-1]} >= vertex_count {vertex_count}")
        self.vertex_count = vertex_count
        self._by_dim: dict[int, tuple[Simplex, ...]] = {
            k: tuple(sorted(ss)) for k, ss in by_dim.items()
        }
        self._index: dict[Simplex, int] = {}
        for k, ss in self._by_dim.items():
            for i, s in enumerate(ss):
                self._index[s] = i

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    def n_simplices(self, k: int) -> int:
        return len(self._by_dim.get(k, ()))

    def has(self, s: Simplex) -> bool:
        return s in self._index

    def index(self, s: Simplex) -> int:
        """Position of s among the simplices of its dimension (lexicographic)."""
        try:
            return self._index[s]
        except KeyError:
            raise InputError(f"simplex {s} not in complex") from None

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(ss) for k, ss in self._by_dim.items())

    def contains_chain(self, c: Chain) -> bool:
        return all(s in self._index for s in c.coeffs)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertex_count == other.vertex_count
                and self._by_dim == other._by_dim)

    def __hash__(self):
        h = getattr(self, "_hash", None)
        if h is None:
            h = hash((self.vertex_count,
                      tuple(sorted((k, ss) for k, ss in self._by_dim.items()))))
            self._hash = h
        return h

    def __repr__(self):
        counts = ",".join(str(self.n_simplices(k)) for k in range(self.dim + 1))
        return f"SimplicialComplex(V={self.vertex_count}, counts=({counts}))"


def build_complex(maximal_simplices: Iterable[Iterable[int]],
                  vertex_count: int | None = None) -> SimplicialComplex:
    """Downward closure of the given simplices.

    ``vertex_count`` may exceed the largest used id; the extra ids become
    isolated vertices (0-simplices).
    """
    closure: set[Simplex] = set()
    top = 0
    for verts in maximal_simplices:
        vs = tuple(verts)
        if len(set(vs)) != len(vs):
            raise InputError(f"duplicate vertices inside one simplex: {vs}")
        s, _ = oriented(vs)
        top = max(top, s.verts[-1] + 1)
        stack = [s]
        while stack:
            t = stack.pop()
            if t in closure:
                continue
            closure.add(t)
            if t.dim > 0:
                stack.extend(t.faces())
    if vertex_count is None:
        vertex_count = top
    elif vertex_count < top:
        raise InputError(f"vertex_count {vertex_count} smaller than largest used id {top - 1}")
    for v in range(vertex_count):
        closure.add(Simplex((v,)))
    return SimplicialComplex(vertex_count, closure)


def boundary(c: Chain) -> Chain:
    """The simplicial boundary; applying it twice gives zero."""
    if c.dim == 0:
        raise DimensionError("boundary undefined in dimension 0")
    acc: dict[Simplex, int] = {}
    for s, coeff in c.coeffs.items():
        for i, f in enumerate(s.faces()):
            acc[f] = acc.get(f, 0) + (-1) ** i * coeff
    return Chain(c.dim - 1, acc)


def boundary_matrix(X: SimplicialComplex, k: int) -> IntMatrix:
    """Matrix of the boundary map C_k -> C_{k-1} in the lexicographic bases."""
    if k < 1 or k > X.dim:
        raise DimensionError(f"boundary matrix needs 1 <= k <= dim, got k={k}, dim={X.dim}")
    rows = X.n_simplices(k - 1)
    cols = X.n_simplices(k)
    m = [[0] * cols for _ in range(rows)]
    for j, s in enumerate(X.simplices(k)):
        for i, f in enumerate(s.faces()):
            m[X.index(f)][j] += (-1) ** i
    return IntMatrix.from_rows(rows, cols, m)


class SimplicialMap:
    """A simplicial map given by its vertex images."""

    def __init__(self, domain: SimplicialComplex, codomain: SimplicialComplex,
                 vertex_map: Iterable[int]):
        vm = tuple(vertex_map)
        if len(vm) != domain.vertex_count:
            raise InputError(
                f"vertex_map has {len(vm)} entries, domain has {domain.vertex_count} vertices")
        if any(w < 0 or w >= codomain.vertex_count for w in vm):
            raise InputError("vertex image out of range")
        for k in range(domain.dim + 1):
            for s in domain.simplices(k):
                image = tuple(sorted({vm[v] for v in s.verts}))
                if not codomain.has(Simplex(image)):
                    raise InputError(f"image {image} of {s} is not a simplex of the codomain")
        self.domain = domain
        self.codomain = codomain
        self.vertex_map = vm

    @classmethod
    def identity(cls, X: SimplicialComplex) -> "SimplicialMap":
        return cls(X, X, range(X.vertex_count))

    def apply(self, s: Simplex) -> tuple[Simplex, int]:
        """Image simplex with the sign of the sorting permutation; sign 0 if degenerate."""
        return oriented(self.vertex_map[v] for v in s.verts)

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if other.codomain != self.domain:
            raise DomainMismatchError("maps not composable")
        return SimplicialMap(other.domain, self.codomain,
                             (self.vertex_map[w] for w in other.vertex_map))

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.vertex_map == other.vertex_map)

    def __repr__(self):
        return f"SimplicialMap({list(self.vertex_map)})"


def push_forward(m: SimplicialMap, c: Chain) -> Chain:
    """Chain pushforward; simplices with collapsing vertices are dropped."""
    if not m.domain.contains_chain(c):
        raise DomainMismatchError("chain does not live in the domain of the map")
    acc: dict[Simplex, int] = {}
    for s, coeff in c.coeffs.items():
        image, sign = m.apply(s)
        if sign == 0 or image.dim != s.dim:
            continue
        acc[image] = acc.get(image, 0) + sign * coeff
    return Chain(c.dim, acc)
